use crate::{Error, Result};

/// A party's local coordinate system: a proper rotation of the Bloch frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalFrame {
    rotation: [[f64; 3]; 3],
}

impl LocalFrame {
    /// Validates orthogonality (R^T R = I within 1e-9) and det = +1.
    pub fn new(rotation: [[f64; 3]; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| rotation[k][i] * rotation[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                if (dot - want).abs() > 1e-9 {
                    return Err(Error::InvalidParam(format!(
                        "frame not orthogonal: (R^T R)[{i}][{j}] = {dot}"
                    )));
                }
            }
        }
        let det = det3(&rotation);
        if (det - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParam(format!("frame determinant {det} != +1")));
        }
        Ok(Self { rotation })
    }

    /// ZYZ Euler rotation.
    pub fn from_angles(a: f64, b: f64, c: f64) -> Self {
        Self { rotation: rot_zyz(a, b, c) }
    }

    pub fn rotation(&self) -> &[[f64; 3]; 3] {
        &self.rotation
    }

    /// The i-th axis (row) of the frame.
    pub fn axis(&self, i: usize) -> [f64; 3] {
        self.rotation[i]
    }
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Rows of Rz(a) * Ry(b) * Rz(c): an arbitrary proper rotation.
pub(crate) fn rot_zyz(a: f64, b: f64, c: f64) -> [[f64; 3]; 3] {
    let (sa, ca) = a.sin_cos();
    let (sb, cb) = b.sin_cos();
    let (sc, cc) = c.sin_cos();
    [
        [ca * cb * cc - sa * sc, -ca * cb * sc - sa * cc, ca * sb],
        [sa * cb * cc + ca * sc, -sa * cb * sc + ca * cc, sa * sb],
        [-sb * cc, sb * sc, cb],
    ]
}

/// Unit vector from spherical angles.
pub(crate) fn sphere_point(theta: f64, phi: f64) -> [f64; 3] {
    [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]
}

/// Right-handed orthonormal pair spanning the plane orthogonal to the
/// spherical direction (theta, phi): the theta- and phi-tangent vectors.
pub(crate) fn tangent_pair(theta: f64, phi: f64) -> ([f64; 3], [f64; 3]) {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    ([ct * cp, ct * sp, -st], [-sp, cp, 0.0])
}

/// Contracts the given party index of a 3-radix block with a vector,
/// returning a block with one fewer party. Party 0 is the slowest axis.
pub(crate) fn contract_party(block: &[f64], parties: usize, party: usize, v: &[f64; 3]) -> Vec<f64> {
    debug_assert_eq!(block.len(), 3usize.pow(parties as u32));
    let outer: usize = 3usize.pow(party as u32);
    let inner: usize = 3usize.pow((parties - 1 - party) as u32);
    let mut out = vec![0.0; outer * inner];
    for o in 0..outer {
        for k in 0..3 {
            let w = v[k];
            if w == 0.0 {
                continue;
            }
            let base = (o * 3 + k) * inner;
            let obase = o * inner;
            for i in 0..inner {
                out[obase + i] += w * block[base + i];
            }
        }
    }
    out
}

/// Squared norm of the block after projecting every party's index onto the
/// plane orthogonal to that party's normal vector.
pub(crate) fn projected_norm_sqr(block: &[f64], parties: usize, normals: &[[f64; 3]]) -> f64 {
    debug_assert_eq!(normals.len(), parties);
    let mut cur = block.to_vec();
    for (party, c) in normals.iter().enumerate() {
        let outer: usize = 3usize.pow(party as u32);
        let inner: usize = 3usize.pow((parties - 1 - party) as u32);
        for o in 0..outer {
            for i in 0..inner {
                let idx = |k: usize| (o * 3 + k) * inner + i;
                let dot = c[0] * cur[idx(0)] + c[1] * cur[idx(1)] + c[2] * cur[idx(2)];
                for (k, ck) in c.iter().enumerate() {
                    cur[idx(k)] -= ck * dot;
                }
            }
        }
    }
    cur.iter().map(|x| x * x).sum()
}

/// Contraction of the block with per-party complex vectors a_n + i b_n,
/// returning (re, im).
pub(crate) fn complex_contraction(
    block: &[f64],
    parties: usize,
    pairs: &[([f64; 3], [f64; 3])],
) -> (f64, f64) {
    debug_assert_eq!(pairs.len(), parties);
    // contract party by party, keeping complex intermediates
    let mut re = block.to_vec();
    let mut im = vec![0.0; block.len()];
    let mut remaining = parties;
    for (a, b) in pairs {
        let inner: usize = 3usize.pow((remaining - 1) as u32);
        let mut nre = vec![0.0; inner];
        let mut nim = vec![0.0; inner];
        for k in 0..3 {
            let (wa, wb) = (a[k], b[k]);
            let base = k * inner;
            for i in 0..inner {
                let (r, s) = (re[base + i], im[base + i]);
                nre[i] += wa * r - wb * s;
                nim[i] += wa * s + wb * r;
            }
        }
        re = nre;
        im = nim;
        remaining -= 1;
    }
    (re[0], im[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zyz_rows_are_orthonormal() {
        let f = LocalFrame::from_angles(0.3, 1.1, -0.7);
        assert!(LocalFrame::new(*f.rotation()).is_ok());
    }

    #[test]
    fn tangent_pair_is_right_handed() {
        let (theta, phi) = (0.9, 2.3);
        let c = sphere_point(theta, phi);
        let (a, b) = tangent_pair(theta, phi);
        let cross = [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ];
        for k in 0..3 {
            assert!((cross[k] - c[k]).abs() < 1e-12);
        }
    }
}
