use super::{DensityMatrix, StateVector};
use crate::{tolerances, C64, Error, Result};

/// The named states used throughout the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum NamedStateSpec {
    /// Two-qubit singlet `(|01> - |10>)/sqrt(2)`.
    Singlet,
    /// Two-qubit `(|00> + |11>)/sqrt(2)`.
    PhiPlus,
    /// N-qubit `(|0..0> + |1..1>)/sqrt(2)`.
    GhzPlus { parties: usize },
    /// N-qubit `(|0..0> - |1..1>)/sqrt(2)`.
    GhzMinus { parties: usize },
    /// `cos(alpha)|0..0> + sin(alpha)|1..1>`, alpha in [0, pi/4].
    GeneralizedGhz { parties: usize, alpha: f64 },
    /// N-qubit W state (single excitation shared evenly).
    W { parties: usize },
    /// Dur's bound entangled state with GHZ phase `phase` (default 0).
    Dur { parties: usize, phase: f64 },
    /// The four-qubit state sqrt(2/3)|GHZ> + sqrt(1/3)|EPR>|EPR>.
    WzFourQubit,
    /// White-noise admixture `(1-v) * I/d + v * inner`.
    Noisy { inner: Box<NamedStateSpec>, visibility: f64 },
}

impl NamedStateSpec {
    /// Number of qubits of the resulting state.
    pub fn parties(&self) -> usize {
        match self {
            Self::Singlet | Self::PhiPlus => 2,
            Self::GhzPlus { parties }
            | Self::GhzMinus { parties }
            | Self::GeneralizedGhz { parties, .. }
            | Self::W { parties }
            | Self::Dur { parties, .. } => *parties,
            Self::WzFourQubit => 4,
            Self::Noisy { inner, .. } => inner.parties(),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.parties();
        if n < 2 {
            return Err(Error::InvalidParam("states need at least 2 parties".into()));
        }
        if n > tolerances::MAX_QUBITS {
            return Err(Error::GuardExceeded {
                what: format!("{n}-qubit state (4^{n} correlation tensor)"),
                limit: tolerances::MAX_QUBITS,
            });
        }
        match self {
            Self::GeneralizedGhz { alpha, .. } => {
                if !(0.0..=std::f64::consts::FRAC_PI_4 + 1e-12).contains(alpha) {
                    return Err(Error::InvalidParam(format!(
                        "generalized GHZ alpha {alpha} outside [0, pi/4]"
                    )));
                }
            }
            Self::Noisy { inner, visibility } => {
                if !(0.0..=1.0).contains(visibility) {
                    return Err(Error::InvalidParam(format!(
                        "visibility {visibility} outside [0,1]"
                    )));
                }
                inner.validate()?;
            }
            _ => {}
        }
        Ok(())
    }
}

fn ghz_like(n: usize, second_amp: C64) -> StateVector {
    let dim = 1usize << n;
    let mut amps = vec![C64::new(0.0, 0.0); dim];
    let s = std::f64::consts::FRAC_1_SQRT_2;
    amps[0] = C64::new(s, 0.0);
    amps[dim - 1] = second_amp * s;
    StateVector::new(amps).expect("ghz amplitudes are normalized")
}

/// Pure-state version of the named specs that are pure.
pub(crate) fn make_pure(spec: &NamedStateSpec) -> Option<StateVector> {
    let n = spec.parties();
    let dim = 1usize << n;
    match spec {
        NamedStateSpec::Singlet => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            let mut amps = vec![C64::new(0.0, 0.0); 4];
            amps[1] = C64::new(s, 0.0);
            amps[2] = C64::new(-s, 0.0);
            Some(StateVector::new(amps).unwrap())
        }
        NamedStateSpec::PhiPlus => Some(ghz_like(2, C64::new(1.0, 0.0))),
        NamedStateSpec::GhzPlus { .. } => Some(ghz_like(n, C64::new(1.0, 0.0))),
        NamedStateSpec::GhzMinus { .. } => Some(ghz_like(n, C64::new(-1.0, 0.0))),
        NamedStateSpec::GeneralizedGhz { alpha, .. } => {
            let mut amps = vec![C64::new(0.0, 0.0); dim];
            amps[0] = C64::new(alpha.cos(), 0.0);
            amps[dim - 1] = C64::new(alpha.sin(), 0.0);
            Some(StateVector::new(amps).unwrap())
        }
        NamedStateSpec::W { .. } => {
            let mut amps = vec![C64::new(0.0, 0.0); dim];
            let w = 1.0 / (n as f64).sqrt();
            // one |0> ("z+") among |1>s: index with a single 0-bit at each position
            for k in 0..n {
                let idx = (dim - 1) ^ (1 << (n - 1 - k));
                amps[idx] = C64::new(w, 0.0);
            }
            Some(StateVector::new(amps).unwrap())
        }
        NamedStateSpec::WzFourQubit => {
            let mut amps = vec![C64::new(0.0, 0.0); 16];
            let a = (1.0f64 / 3.0).sqrt();
            amps[0b0000] = C64::new(a, 0.0);
            amps[0b1111] = C64::new(a, 0.0);
            for idx in [0b0101, 0b1010, 0b0110, 0b1001] {
                amps[idx] = C64::new(a / 2.0, 0.0);
            }
            Some(StateVector::new(amps).unwrap())
        }
        NamedStateSpec::Dur { .. } | NamedStateSpec::Noisy { .. } => None,
    }
}

/// Builds the density matrix of a named state.
pub fn make_state(spec: &NamedStateSpec) -> Result<DensityMatrix> {
    spec.validate()?;
    let n = spec.parties();
    let dim = 1usize << n;
    match spec {
        NamedStateSpec::Dur { parties, phase } => {
            let n = *parties;
            // |phi> = (|0..0> + e^{i phase} |1..1>)/sqrt(2)
            let phi = ghz_like(n, C64::new(phase.cos(), phase.sin()));
            let mut m = phi.to_density().entries().clone();
            // (1/2) sum_k (P_k + ~P_k): z-basis projectors with one flipped qubit
            let half = C64::new(0.5, 0.0);
            for k in 0..n {
                let idx = 1usize << (n - 1 - k);
                m[(idx, idx)] += half;
                let tilde = (dim - 1) ^ idx;
                m[(tilde, tilde)] += half;
            }
            m /= C64::new((n + 1) as f64, 0.0);
            Ok(DensityMatrix::from_valid(m))
        }
        NamedStateSpec::Noisy { inner, visibility } => {
            let rho = make_state(inner)?;
            DensityMatrix::maximally_mixed(rho.dim()).mix(&rho, *visibility)
        }
        _ => {
            let psi = make_pure(spec).expect("non-mixed specs have pure forms");
            Ok(psi.to_density())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noisy_w_at_zero_visibility_is_white_noise() {
        let spec = NamedStateSpec::Noisy {
            inner: Box::new(NamedStateSpec::W { parties: 3 }),
            visibility: 0.0,
        };
        let rho = make_state(&spec).unwrap();
        for r in 0..8 {
            for c in 0..8 {
                let want = if r == c { 0.125 } else { 0.0 };
                assert!((rho.entries()[(r, c)].re - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn dimension_guard() {
        let spec = NamedStateSpec::GhzPlus { parties: 11 };
        assert!(matches!(make_state(&spec), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn dur_state_is_valid_density() {
        let rho = make_state(&NamedStateSpec::Dur { parties: 4, phase: 0.3 }).unwrap();
        assert!(DensityMatrix::new(rho.entries().clone()).is_ok());
    }

    #[test]
    fn alpha_range_enforced() {
        let spec = NamedStateSpec::GeneralizedGhz { parties: 3, alpha: 1.0 };
        assert!(make_state(&spec).is_err());
    }
}
