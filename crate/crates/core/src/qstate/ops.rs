use super::{DensityMatrix, StateVector};
use crate::{C64, CMatrix, Error, Result};

/// Tensor product of pure states.
pub fn tensor_product_vec(a: &StateVector, b: &StateVector) -> StateVector {
    let (da, db) = (a.dim(), b.dim());
    let mut amps = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            amps.push(a.amplitudes()[i] * b.amplitudes()[j]);
        }
    }
    StateVector::new(amps).expect("product of unit vectors is a unit vector")
}

/// Tensor product of density matrices.
pub fn tensor_product(a: &DensityMatrix, b: &DensityMatrix) -> DensityMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut m = CMatrix::zeros(da * db, da * db);
    for ra in 0..da {
        for ca in 0..da {
            let x = a.entries()[(ra, ca)];
            for rb in 0..db {
                for cb in 0..db {
                    m[(ra * db + rb, ca * db + cb)] = x * b.entries()[(rb, cb)];
                }
            }
        }
    }
    DensityMatrix::from_valid(m)
}

/// Reduces `rho` on `dims`-shaped subsystems to those listed in `keep`
/// (0-based subsystem indices, ascending output order as listed).
pub fn partial_trace(rho: &DensityMatrix, dims: &[usize], keep: &[usize]) -> Result<DensityMatrix> {
    let total: usize = dims.iter().product();
    if total != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dims product {total} != matrix dim {}",
            rho.dim()
        )));
    }
    if keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::InvalidParam("keep index out of range".into()));
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();
    let kdim: usize = keep.iter().map(|&i| dims[i]).product();
    let tdim: usize = traced.iter().map(|&i| dims[i]).product();

    // index helpers: global index <-> per-subsystem digits (subsystem 0 slowest)
    let compose = |kd: &[usize], td: &[usize]| -> usize {
        let mut idx = 0;
        let mut ki = 0;
        let mut ti = 0;
        for s in 0..dims.len() {
            let digit = if keep.contains(&s) {
                let d = kd[ki];
                ki += 1;
                d
            } else {
                let d = td[ti];
                ti += 1;
                d
            };
            idx = idx * dims[s] + digit;
        }
        idx
    };
    let digits = |mut x: usize, ds: &[usize]| -> Vec<usize> {
        let mut out = vec![0; ds.len()];
        for (i, &d) in ds.iter().enumerate().rev() {
            out[i] = x % d;
            x /= d;
        }
        out
    };

    let keep_dims: Vec<usize> = keep.iter().map(|&i| dims[i]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&i| dims[i]).collect();
    let mut out = CMatrix::zeros(kdim, kdim);
    for r in 0..kdim {
        let rk = digits(r, &keep_dims);
        for c in 0..kdim {
            let ck = digits(c, &keep_dims);
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..tdim {
                let tt = digits(t, &traced_dims);
                acc += rho.entries()[(compose(&rk, &tt), compose(&ck, &tt))];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(DensityMatrix::from_valid(out))
}

/// Partial trace starting from a pure state.
pub fn partial_trace_vec(psi: &StateVector, dims: &[usize], keep: &[usize]) -> Result<DensityMatrix> {
    partial_trace(&psi.to_density(), dims, keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{make_state, NamedStateSpec};

    #[test]
    fn product_of_basis_states() {
        let up = StateVector::basis(2, 0);
        let down = StateVector::basis(2, 1);
        let prod = tensor_product_vec(&up, &down);
        assert_eq!(prod.dim(), 4);
        assert!((prod.amplitudes()[1].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn singlet_marginal_is_maximally_mixed() {
        let rho = make_state(&NamedStateSpec::Singlet).unwrap();
        let red = partial_trace(&rho, &[2, 2], &[0]).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                let want = if r == c { 0.5 } else { 0.0 };
                assert!((red.entries()[(r, c)].re - want).abs() < 1e-12);
                assert!(red.entries()[(r, c)].im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn trace_is_preserved_by_product() {
        let a = DensityMatrix::maximally_mixed(2);
        let b = make_state(&NamedStateSpec::PhiPlus).unwrap();
        let p = tensor_product(&a, &b);
        let tr: C64 = p.entries().diagonal().iter().sum();
        assert!((tr.re - 1.0).abs() < 1e-12);
    }
}
