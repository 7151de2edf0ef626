use super::BellInequality;
use crate::{tolerances, Error, Result};

/// Result of the polytope facet check.
#[derive(Debug, Clone, PartialEq)]
pub struct Tightness {
    /// True when the saturating vertices span the full correlation space.
    pub is_tight: bool,
    /// Linear rank of the distinct vertices saturating the upper bound.
    pub saturating_rank: usize,
    /// Number of distinct vertices at +bound.
    pub saturating_count_pos: usize,
    /// Number of distinct vertices at -bound.
    pub saturating_count_neg: usize,
    /// Dimension of the correlation space (product of setting counts).
    pub ambient_dim: usize,
}

/// Checks tightness by vertex enumeration: the inequality is a facet of the
/// correlation polytope iff the deterministic vertices saturating the bound
/// span the full `prod M_j`-dimensional space (the bound hyperplane misses
/// the origin, so linear rank equals affine rank plus one there).
pub fn tightness_check(ineq: &BellInequality) -> Result<Tightness> {
    let ambient: usize = ineq.settings_per_party().iter().product();
    if ambient > tolerances::MAX_VERTEX_DIM {
        return Err(Error::GuardExceeded {
            what: format!("correlation space dimension {ambient}"),
            limit: tolerances::MAX_VERTEX_DIM,
        });
    }
    let total_settings: usize = ineq.settings_per_party().iter().sum();
    let parties = ineq.parties();

    // terms of the inequality as flat indices into the vertex vector
    let strides: Vec<usize> = {
        let mut s = vec![1usize; parties];
        for j in (0..parties.saturating_sub(1)).rev() {
            s[j] = s[j + 1] * ineq.settings_per_party()[j + 1];
        }
        s
    };
    let flat = |key: &[usize]| -> usize {
        key.iter().zip(&strides).map(|(&k, &s)| k * s).sum()
    };
    let terms: Vec<(usize, f64)> =
        ineq.coefficients().iter().map(|(k, &c)| (flat(k), c)).collect();

    let mut offset = vec![0usize; parties];
    let mut acc = 0;
    for (j, &m) in ineq.settings_per_party().iter().enumerate() {
        offset[j] = acc;
        acc += m;
    }

    let mut pos: Vec<Vec<f64>> = Vec::new();
    let mut neg_count = 0usize;
    let mut seen_pos = std::collections::HashSet::new();
    let mut seen_neg = std::collections::HashSet::new();

    for mask in 0..(1u64 << total_settings) {
        // vertex vector E[k] = prod_j I_j(k_j)
        let sign = |j: usize, k: usize| -> i8 {
            if mask >> (offset[j] + k) & 1 == 1 {
                -1
            } else {
                1
            }
        };
        let mut vertex = vec![1i8; ambient];
        let mut key = vec![0usize; parties];
        for (slot, v) in vertex.iter_mut().enumerate() {
            let mut x = slot;
            for j in (0..parties).rev() {
                key[j] = x % ineq.settings_per_party()[j];
                x /= ineq.settings_per_party()[j];
            }
            let mut s = 1i8;
            for (j, &k) in key.iter().enumerate() {
                s *= sign(j, k);
            }
            *v = s;
        }
        let value: f64 = terms
            .iter()
            .map(|&(idx, c)| c * vertex[idx] as f64)
            .sum();
        if (value - ineq.lr_bound()).abs() <= tolerances::BOUND_SLACK {
            if seen_pos.insert(vertex.clone()) {
                pos.push(vertex.iter().map(|&x| x as f64).collect());
            }
        } else if (value + ineq.lr_bound()).abs() <= tolerances::BOUND_SLACK
            && seen_neg.insert(vertex.clone())
        {
            neg_count += 1;
        }
    }

    let rank = matrix_rank(&mut pos, tolerances::BOUND_SLACK);
    Ok(Tightness {
        is_tight: rank == ambient,
        saturating_rank: rank,
        saturating_count_pos: seen_pos.len(),
        saturating_count_neg: neg_count,
        ambient_dim: ambient,
    })
}

/// Rank by Gaussian elimination with partial pivoting; +-1 matrices are well
/// conditioned so a fixed pivot tolerance suffices.
fn matrix_rank(rows: &mut [Vec<f64>], tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows.len() {
            break;
        }
        // pivot
        let (mut best, mut best_abs) = (row, rows[row][col].abs());
        for r in row + 1..rows.len() {
            if rows[r][col].abs() > best_abs {
                best = r;
                best_abs = rows[r][col].abs();
            }
        }
        if best_abs <= tol {
            continue;
        }
        rows.swap(row, best);
        for r in 0..rows.len() {
            if r != row && rows[r][col].abs() > 0.0 {
                let f = rows[r][col] / rows[row][col];
                for c in col..cols {
                    let pivot_val = rows[row][c];
                    rows[r][c] -= f * pivot_val;
                }
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bellgen::{multisetting_generate, BellInequality};
    use std::collections::BTreeMap;

    fn chsh() -> BellInequality {
        let mut c = BTreeMap::new();
        c.insert(vec![0, 0], 1.0);
        c.insert(vec![0, 1], 1.0);
        c.insert(vec![1, 0], 1.0);
        c.insert(vec![1, 1], -1.0);
        BellInequality::new(vec![2, 2], c, 2.0, "chsh").unwrap()
    }

    #[test]
    fn chsh_is_tight() {
        let t = tightness_check(&chsh()).unwrap();
        assert!(t.is_tight);
        assert_eq!(t.saturating_rank, 4);
        assert_eq!(t.ambient_dim, 4);
    }

    #[test]
    fn generating_442_is_tight_with_128_saturators() {
        let ineq = multisetting_generate(&[4, 4, 2], None).unwrap();
        let t = tightness_check(&ineq).unwrap();
        assert!(t.is_tight);
        assert_eq!(t.saturating_rank, 32);
        assert_eq!(t.ambient_dim, 32);
        assert_eq!(t.saturating_count_pos, 128);
        assert_eq!(t.saturating_count_neg, 128);
    }

    #[test]
    fn single_correlation_inequality_rank() {
        // |E_00| <= 1: in the pure correlation space this plane does contain
        // a facet (the polytope is the even-parity demicube)
        let mut c = BTreeMap::new();
        c.insert(vec![0, 0], 1.0);
        let ineq = BellInequality::new(vec![2, 2], c, 1.0, "|E00|<=1").unwrap();
        let t = tightness_check(&ineq).unwrap();
        assert_eq!(t.saturating_count_pos, 4);
        assert_eq!(t.saturating_rank, 4);
        assert!(t.is_tight);
    }
}
