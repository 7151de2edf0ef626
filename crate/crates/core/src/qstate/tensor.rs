use super::{pauli, DensityMatrix};
use crate::{tolerances, C64, Error, Result};

/// Unit (or shorter) real 3-vector on the Bloch/Poincare sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector(pub [f64; 3]);

impl BlochVector {
    pub fn new(components: [f64; 3]) -> Result<Self> {
        let len = components.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > 1.0 + tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!("Bloch vector length {len} > 1")));
        }
        Ok(Self(components))
    }

    /// Unit vector required for measurement settings.
    pub fn unit(components: [f64; 3]) -> Result<Self> {
        let len = components.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (len - 1.0).abs() > tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!(
                "measurement setting must be unit length, got {len}"
            )));
        }
        Ok(Self(components))
    }

    /// Equatorial setting at azimuthal angle phi (x-y plane).
    pub fn equatorial(phi: f64) -> Self {
        Self([phi.cos(), phi.sin(), 0.0])
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }
}

/// Full Pauli decomposition of an N-qubit state.
///
/// `values[(mu_1,...,mu_N)]` with party 1 slowest and mu in 0..=3
/// (identity, x, y, z).
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTensor {
    parties: usize,
    values: Vec<f64>,
}

impl CorrelationTensor {
    pub fn new(parties: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != 4usize.pow(parties as u32) {
            return Err(Error::DimensionMismatch(format!(
                "expected 4^{parties} components, got {}",
                values.len()
            )));
        }
        let t = Self { parties, values };
        if (t.values[0] - 1.0).abs() > tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!("T_0...0 = {} != 1", t.values[0])));
        }
        let norm2: f64 = t.values.iter().map(|x| x * x).sum();
        if norm2 > (1usize << parties) as f64 + 1e-8 {
            return Err(Error::InvalidParam(format!(
                "purity bound violated: sum T^2 = {norm2} > 2^{parties}"
            )));
        }
        Ok(t)
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Component at a multi-index, each entry in 0..=3 (party 1 first).
    pub fn get(&self, idx: &[usize]) -> f64 {
        self.values[self.flat(idx)]
    }

    fn flat(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.parties, "index arity mismatch");
        idx.iter().fold(0, |acc, &mu| {
            assert!(mu < 4, "tensor index must be 0..=3");
            acc * 4 + mu
        })
    }

    /// Sum of squares of all components (bounded by 2^N).
    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// The full-correlation block as a 3^N array (indices 1..=3 only),
    /// party 1 slowest.
    pub fn full_block(&self) -> Vec<f64> {
        let n = self.parties;
        let size = 3usize.pow(n as u32);
        let mut out = vec![0.0; size];
        let mut idx = vec![0usize; n];
        for (flat3, slot) in out.iter_mut().enumerate() {
            let mut x = flat3;
            for k in (0..n).rev() {
                idx[k] = x % 3 + 1;
                x /= 3;
            }
            *slot = self.get(&idx);
        }
        out
    }
}

/// Computes the correlation tensor T = Tr(rho sigma x ... x sigma) by a
/// per-party basis transform (O(N 4^N)).
pub fn correlation_tensor(rho: &DensityMatrix, parties: usize) -> Result<CorrelationTensor> {
    if rho.dim() != 1usize << parties {
        return Err(Error::DimensionMismatch(format!(
            "state dim {} is not 2^{parties}",
            rho.dim()
        )));
    }
    let n = parties;
    let size = 4usize.pow(n as u32);

    // kernel[mu][2r+c] = sigma_mu[c][r]  (so that T = sum rho[r,c] sigma[c,r])
    let mut kernel = [[C64::new(0.0, 0.0); 4]; 4];
    for (mu, k) in kernel.iter_mut().enumerate() {
        let s = pauli(mu);
        for r in 0..2 {
            for c in 0..2 {
                k[2 * r + c] = s[(c, r)];
            }
        }
    }

    // working array indexed by per-party pair digits p_n = 2 r_n + c_n
    let mut work = vec![C64::new(0.0, 0.0); size];
    let dim = 1usize << n;
    for r in 0..dim {
        for c in 0..dim {
            let mut p = 0usize;
            for k in 0..n {
                let rb = (r >> (n - 1 - k)) & 1;
                let cb = (c >> (n - 1 - k)) & 1;
                p = p * 4 + (2 * rb + cb);
            }
            work[p] = rho.entries()[(r, c)];
        }
    }

    // transform each party axis: digit p -> mu
    let mut stride = size / 4; // party 1 is the slowest axis
    for _ in 0..n {
        let mut next = vec![C64::new(0.0, 0.0); size];
        for (flat, &v) in work.iter().enumerate() {
            if v.norm_sqr() == 0.0 {
                continue;
            }
            let digit = (flat / stride) % 4;
            let base = flat - digit * stride;
            for (mu, k) in kernel.iter().enumerate() {
                let w = k[digit];
                if w.norm_sqr() != 0.0 {
                    next[base + mu * stride] += w * v;
                }
            }
        }
        work = next;
        stride /= 4;
        // after processing the current axis the digit in that slot is mu;
        // subsequent axes use smaller strides
        if stride == 0 {
            break;
        }
    }

    let mut values = Vec::with_capacity(size);
    for v in &work {
        debug_assert!(v.im.abs() < 1e-9, "correlation tensor must be real");
        values.push(v.re);
    }
    CorrelationTensor::new(parties, values)
}

/// Quantum correlation E = sum_k T_k prod_n (m_n)_{k_n} over k in {1,2,3}^N.
pub fn quantum_correlation(t: &CorrelationTensor, settings: &[BlochVector]) -> Result<f64> {
    if settings.len() != t.parties() {
        return Err(Error::DimensionMismatch(format!(
            "{} settings for {} parties",
            settings.len(),
            t.parties()
        )));
    }
    for m in settings {
        let len = m.0.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (len - 1.0).abs() > tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!(
                "setting vector has length {len}, must be unit"
            )));
        }
    }
    let n = t.parties();
    let mut acc = 0.0;
    let mut idx = vec![0usize; n];
    let count = 3usize.pow(n as u32);
    for flat in 0..count {
        let mut x = flat;
        let mut w = 1.0;
        for k in (0..n).rev() {
            let comp = x % 3;
            x /= 3;
            idx[k] = comp + 1;
            w *= settings[k].0[comp];
        }
        if w != 0.0 {
            acc += w * t.get(&idx);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{make_state, NamedStateSpec};

    fn tensor_of(spec: &NamedStateSpec) -> CorrelationTensor {
        let rho = make_state(spec).unwrap();
        correlation_tensor(&rho, spec.parties()).unwrap()
    }

    #[test]
    fn singlet_diagonal_components() {
        let t = tensor_of(&NamedStateSpec::Singlet);
        assert!((t.get(&[1, 1]) + 1.0).abs() < 1e-12);
        assert!((t.get(&[2, 2]) + 1.0).abs() < 1e-12);
        assert!((t.get(&[3, 3]) + 1.0).abs() < 1e-12);
        assert!((t.get(&[0, 0]) - 1.0).abs() < 1e-12);
        assert!(t.get(&[1, 2]).abs() < 1e-12);
    }

    #[test]
    fn singlet_correlation_is_minus_dot() {
        let t = tensor_of(&NamedStateSpec::Singlet);
        let a = BlochVector::unit([0.6, 0.0, 0.8]).unwrap();
        let b = BlochVector::unit([0.0, 1.0, 0.0]).unwrap();
        let e = quantum_correlation(&t, &[a, b]).unwrap();
        assert!((e + a.dot(&b)).abs() < 1e-12);
        let c = BlochVector::unit([0.6, 0.0, 0.8]).unwrap();
        let e2 = quantum_correlation(&t, &[a, c]).unwrap();
        assert!((e2 + 1.0).abs() < 1e-12);
    }

    #[test]
    fn ghz3_components() {
        let t = tensor_of(&NamedStateSpec::GhzPlus { parties: 3 });
        assert!((t.get(&[3, 3, 0]) - 1.0).abs() < 1e-12);
        assert!((t.get(&[3, 0, 3]) - 1.0).abs() < 1e-12);
        assert!((t.get(&[0, 3, 3]) - 1.0).abs() < 1e-12);
        assert!((t.get(&[1, 1, 1]) - 1.0).abs() < 1e-12);
        assert!((t.get(&[1, 2, 2]) + 1.0).abs() < 1e-12);
        assert!((t.get(&[2, 1, 2]) + 1.0).abs() < 1e-12);
        assert!((t.get(&[2, 2, 1]) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn ghz3_equatorial_cosine_rule() {
        let t = tensor_of(&NamedStateSpec::GhzPlus { parties: 3 });
        for (p1, p2, p3) in [(0.3, 0.8, -0.4), (1.1, 0.0, 0.25), (2.2, -1.0, 0.5)] {
            let e = quantum_correlation(
                &t,
                &[
                    BlochVector::equatorial(p1),
                    BlochVector::equatorial(p2),
                    BlochVector::equatorial(p3),
                ],
            )
            .unwrap();
            assert!((e - (p1 + p2 + p3).cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn w4_components() {
        let t = tensor_of(&NamedStateSpec::W { parties: 4 });
        assert!((t.get(&[3, 3, 3, 3]) + 1.0).abs() < 1e-12);
        assert!((t.get(&[1, 1, 3, 3]) - 0.5).abs() < 1e-12);
        assert!((t.get(&[2, 2, 3, 3]) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn generalized_ghz_xy_sign_pattern() {
        // components with 2 xi y-indices take the value (-1)^xi sin(2 alpha)
        let alpha = 0.37;
        let t = tensor_of(&NamedStateSpec::GeneralizedGhz { parties: 3, alpha });
        let s = (2.0 * alpha).sin();
        assert!((t.get(&[3, 3, 3]) - (2.0 * alpha).cos()).abs() < 1e-12);
        assert!((t.get(&[1, 1, 1]) - s).abs() < 1e-12);
        for idx in [[1, 2, 2], [2, 1, 2], [2, 2, 1]] {
            assert!((t.get(&idx) + s).abs() < 1e-12);
        }
    }

    #[test]
    fn purity_bound_saturated_only_by_pure_states() {
        let pure = tensor_of(&NamedStateSpec::GhzPlus { parties: 3 });
        assert!((pure.norm_sqr() - 8.0).abs() < 1e-8);
        let noisy = tensor_of(&NamedStateSpec::Noisy {
            inner: Box::new(NamedStateSpec::GhzPlus { parties: 3 }),
            visibility: 0.6,
        });
        assert!(noisy.norm_sqr() < 8.0 - 1e-3);
    }
}
