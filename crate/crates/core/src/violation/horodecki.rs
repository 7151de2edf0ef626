use crate::qstate::CorrelationTensor;
use crate::{Error, Result};

/// Two-qubit violation criterion: the maximum over local frames of the sum
/// of squared correlations along two axes per party, equal to the sum of the
/// two largest eigenvalues of T'T. CHSH is violated iff the value exceeds 1;
/// the maximal CHSH value is `2 sqrt(value)`.
pub fn horodecki_value(t: &CorrelationTensor) -> Result<f64> {
    if t.parties() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "Horodecki criterion needs 2 parties, got {}",
            t.parties()
        )));
    }
    let mut m = [[0.0; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = t.get(&[i + 1, j + 1]);
        }
    }
    Ok(horodecki_matrix_value(&m))
}

/// Sum of the two largest eigenvalues of M^T M for a 3x3 block.
pub fn horodecki_matrix_value(m: &[[f64; 3]; 3]) -> f64 {
    let mut g = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            g[i][j] = (0..3).map(|k| m[k][i] * m[k][j]).sum();
        }
    }
    let ev = sym3_eigenvalues(&g);
    ev[0] + ev[1]
}

/// Eigenvalues of a symmetric 3x3 matrix, descending (analytic).
fn sym3_eigenvalues(a: &[[f64; 3]; 3]) -> [f64; 3] {
    let p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    let q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    if p1 < 1e-30 {
        let mut d = [a[0][0], a[1][1], a[2][2]];
        d.sort_by(|x, y| y.partial_cmp(x).unwrap());
        return d;
    }
    let p2 = (a[0][0] - q).powi(2) + (a[1][1] - q).powi(2) + (a[2][2] - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let mut b = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            b[i][j] = (a[i][j] - if i == j { q } else { 0.0 }) / p;
        }
    }
    let detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (detb / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let two_thirds_pi = 2.0 * std::f64::consts::FRAC_PI_3;
    let mut ev = [
        q + 2.0 * p * phi.cos(),
        q + 2.0 * p * (phi - two_thirds_pi).cos(),
        q + 2.0 * p * (phi + two_thirds_pi).cos(),
    ];
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}
