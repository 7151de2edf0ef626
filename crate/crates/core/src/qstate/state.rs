use crate::{tolerances, C64, CMatrix, CVector, Error, Result};

/// Pure state: a unit-norm complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: CVector,
}

impl StateVector {
    /// Builds a state vector, checking normalization to 1e-10.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidParam("empty amplitude vector".into()));
        }
        let v = CVector::from_vec(amplitudes);
        let norm2: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!(
                "amplitudes not normalized: |psi|^2 = {norm2}"
            )));
        }
        Ok(Self { amplitudes: v })
    }

    /// Builds and normalizes (for hand-written superpositions).
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidParam("empty amplitude vector".into()));
        }
        let mut v = CVector::from_vec(amplitudes);
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidParam("zero vector cannot be normalized".into()));
        }
        v /= C64::new(norm, 0.0);
        Ok(Self { amplitudes: v })
    }

    /// Computational basis state `|index>` of the given dimension.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        Self { amplitudes: CVector::from_vec(amps) }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// Projector `|psi><psi|` as a density matrix.
    pub fn to_density(&self) -> DensityMatrix {
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = self.amplitudes[r] * self.amplitudes[c].conj();
            }
        }
        DensityMatrix { entries: m }
    }
}

/// Mixed state: Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, trace and positivity (eigenvalues >= -1e-10).
    pub fn new(entries: CMatrix) -> Result<Self> {
        if entries.nrows() != entries.ncols() || entries.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "density matrix must be square, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let n = entries.nrows();
        for r in 0..n {
            for c in r..n {
                let d = entries[(r, c)] - entries[(c, r)].conj();
                if d.norm() > tolerances::ALGEBRAIC {
                    return Err(Error::InvalidParam(format!(
                        "matrix not Hermitian at ({r},{c}): residual {}",
                        d.norm()
                    )));
                }
            }
        }
        let tr: C64 = entries.diagonal().iter().sum();
        if (tr.re - 1.0).abs() > tolerances::ALGEBRAIC || tr.im.abs() > tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!("trace is {tr}, expected 1")));
        }
        let min_eig = hermitian_min_eigenvalue(&entries);
        if min_eig < -tolerances::ALGEBRAIC {
            return Err(Error::InvalidParam(format!(
                "matrix not positive semidefinite: min eigenvalue {min_eig}"
            )));
        }
        Ok(Self { entries })
    }

    /// Internal constructor for matrices valid by construction.
    pub(crate) fn from_valid(entries: CMatrix) -> Self {
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    /// Tr(rho^2); equals 1 for pure states.
    pub fn purity(&self) -> f64 {
        let n = self.dim();
        let mut p = 0.0;
        for r in 0..n {
            for c in 0..n {
                p += (self.entries[(r, c)] * self.entries[(c, r)]).re;
            }
        }
        p
    }

    /// Tr(rho * op).
    pub fn expectation(&self, op: &CMatrix) -> C64 {
        assert_eq!(op.nrows(), self.dim(), "operator dimension mismatch");
        let n = self.dim();
        let mut t = C64::new(0.0, 0.0);
        for r in 0..n {
            for c in 0..n {
                t += self.entries[(r, c)] * op[(c, r)];
            }
        }
        t
    }

    /// Fidelity `<psi|rho|psi>` with a pure state.
    pub fn fidelity(&self, psi: &StateVector) -> f64 {
        let v = psi.amplitudes();
        let mut t = C64::new(0.0, 0.0);
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                t += v[r].conj() * self.entries[(r, c)] * v[c];
            }
        }
        t.re
    }

    /// Convex mixture `(1-w) * self + w * other`.
    pub fn mix(&self, other: &DensityMatrix, w: f64) -> Result<DensityMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch("mixing different dimensions".into()));
        }
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::InvalidParam(format!("mixing weight {w} outside [0,1]")));
        }
        let a = C64::new(1.0 - w, 0.0);
        let b = C64::new(w, 0.0);
        Ok(DensityMatrix::from_valid(&self.entries * a + &other.entries * b))
    }

    /// Maximally mixed state of the given dimension.
    pub fn maximally_mixed(dim: usize) -> Self {
        let mut m = CMatrix::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0 / dim as f64, 0.0);
        }
        Self { entries: m }
    }
}

/// Smallest eigenvalue of a Hermitian matrix.
pub(crate) fn hermitian_min_eigenvalue(m: &CMatrix) -> f64 {
    let eig = m.clone().symmetric_eigen();
    eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}
