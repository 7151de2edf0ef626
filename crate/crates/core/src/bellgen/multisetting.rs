use super::{lr_bound_bruteforce, BellInequality, SignFunction};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Settings used by party `j` (0-based) in the full doubling structure
/// `2^{N-1} x 2^{N-1} x 2^{N-2} x ... x 2` on `n` parties.
fn full_settings(n: usize, j: usize) -> usize {
    if j < 2 {
        1 << (n - 1)
    } else {
        1 << (n - 1 - j + 1)
    }
}

/// Half-coefficient weights (w_a0, w_a1, w_b0, w_b1) of a two-argument sign
/// function; all four are +-1 exactly when the function is non-factorable.
fn combine_weights(s: &SignFunction) -> Result<[f64; 4]> {
    if s.parties() != 2 {
        return Err(Error::InvalidParam("combiner sign functions take two arguments".into()));
    }
    let sg = |mask: usize, j: usize| if mask >> (1 - j) & 1 == 1 { -1.0 } else { 1.0 };
    let mut w = [0.0; 4];
    for mask in 0..4 {
        let v = s.value(mask) as f64;
        w[0] += v;
        w[1] += v * sg(mask, 1);
        w[2] += v * sg(mask, 0);
        w[3] += v * sg(mask, 0) * sg(mask, 1);
    }
    for x in w.iter_mut() {
        *x *= 0.5;
    }
    if w.iter().any(|x| (x.abs() - 1.0).abs() > 1e-12) {
        return Err(Error::InvalidParam(
            "factorable sign function: structure degenerates, identify settings instead".into(),
        ));
    }
    Ok(w)
}

/// Recursive builder over parties `0..p`; `offs[j]` is the first setting
/// index party j uses in this subtree; `signs` are consumed in pre-order.
fn build(
    p: usize,
    offs: &[usize],
    signs: &mut std::slice::Iter<'_, SignFunction>,
) -> Result<BTreeMap<Vec<usize>, f64>> {
    let s = signs.next().expect("sign count checked by caller");
    let w = combine_weights(s)?;
    let mut out = BTreeMap::new();
    if p == 2 {
        // reduced CHSH block: value +-2 on deterministic assignments
        out.insert(vec![offs[0], offs[1]], w[0]);
        out.insert(vec![offs[0], offs[1] + 1], w[1]);
        out.insert(vec![offs[0] + 1, offs[1]], w[2]);
        out.insert(vec![offs[0] + 1, offs[1] + 1], w[3]);
        return Ok(out);
    }
    let sub_offs_a: Vec<usize> = offs[..p - 1].to_vec();
    let sub_offs_b: Vec<usize> =
        (0..p - 1).map(|j| offs[j] + full_settings(p - 1, j)).collect();
    let ia = build(p - 1, &sub_offs_a, signs)?;
    let ib = build(p - 1, &sub_offs_b, signs)?;
    let last = offs[p - 1];
    for (key, c) in ia {
        let mut k0 = key.clone();
        k0.push(last);
        out.insert(k0, w[0] * c);
        let mut k1 = key;
        k1.push(last + 1);
        out.insert(k1, w[1] * c);
    }
    for (key, c) in ib {
        let mut k0 = key.clone();
        k0.push(last);
        out.insert(k0, w[2] * c);
        let mut k1 = key;
        k1.push(last + 1);
        out.insert(k1, w[3] * c);
    }
    Ok(out)
}

fn sign_count(n: usize) -> usize {
    (1 << (n - 1)) - 1
}

/// Generates an inequality of the recursive multisetting family.
///
/// `structure` is either the full doubling structure
/// `[2^{N-1}, 2^{N-1}, 2^{N-2}, ..., 2]` (for example `[4,4,2]`), the
/// degenerate `[2,2]` (CHSH), or an element-wise reduction of the full
/// structure obtained by identifying leading settings (for example
/// `[3,3,2]`). `signs` supplies one two-argument non-factorable sign
/// function per tree node in pre-order; `None` uses the CHSH sign function
/// everywhere. The declared bound is `2^{N-1}` for the full structure; for
/// reductions the bound is recomputed by brute force.
pub fn multisetting_generate(
    structure: &[usize],
    signs: Option<&[SignFunction]>,
) -> Result<BellInequality> {
    let n = structure.len();
    if n < 2 {
        return Err(Error::InvalidParam("need at least two parties".into()));
    }
    let full: Vec<usize> = (0..n).map(|j| full_settings(n, j)).collect();
    for (j, (&m, &f)) in structure.iter().zip(full.iter()).enumerate() {
        if m < 2 || m > f {
            return Err(Error::InvalidParam(format!(
                "party {j} has {m} settings, supported range 2..={f} for this family"
            )));
        }
    }
    let default_signs = vec![SignFunction::chsh(); sign_count(n)];
    let signs = signs.unwrap_or(&default_signs);
    if signs.len() != sign_count(n) {
        return Err(Error::InvalidParam(format!(
            "{n}-party structure needs {} sign functions, got {}",
            sign_count(n),
            signs.len()
        )));
    }
    let mut iter = signs.iter();
    let coeffs = build(n, &vec![0; n], &mut iter)?;
    let bound = (1u64 << (n - 1)) as f64;
    let ineq = BellInequality::new(full.clone(), coeffs, bound, format!("multisetting {full:?}"))?;
    if structure == full.as_slice() {
        return Ok(ineq);
    }
    // reduce by identifying the first (full - m + 1) settings of each party
    let maps: Vec<Vec<usize>> = (0..n)
        .map(|j| {
            let merge = full[j] - structure[j];
            (0..full[j]).map(|old| old.saturating_sub(merge)).collect()
        })
        .collect();
    identify_settings(&ineq, &maps)
}

/// Identifies settings according to per-party maps `old -> new`, merging
/// coefficients; the local realistic bound is recomputed by brute force.
pub fn identify_settings(ineq: &BellInequality, maps: &[Vec<usize>]) -> Result<BellInequality> {
    if maps.len() != ineq.parties() {
        return Err(Error::DimensionMismatch("one setting map per party required".into()));
    }
    for (j, map) in maps.iter().enumerate() {
        if map.len() != ineq.settings_per_party()[j] {
            return Err(Error::InvalidParam(format!("map for party {j} has wrong length")));
        }
    }
    let new_settings: Vec<usize> =
        maps.iter().map(|m| m.iter().max().map_or(0, |&x| x + 1)).collect();
    let mut coeffs: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for (key, &c) in ineq.coefficients() {
        let new_key: Vec<usize> = key.iter().enumerate().map(|(j, &k)| maps[j][k]).collect();
        *coeffs.entry(new_key).or_insert(0.0) += c;
    }
    coeffs.retain(|_, c| c.abs() > 1e-12);
    let provisional = BellInequality::new(
        new_settings,
        coeffs,
        ineq.lr_bound(),
        format!("{} (settings identified)", ineq.label()),
    )?;
    let bound = lr_bound_bruteforce(&provisional)?;
    BellInequality::new(
        provisional.settings_per_party().to_vec(),
        provisional.coefficients().clone(),
        bound,
        provisional.label().to_string(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generating_442_inequality() {
        let ineq = multisetting_generate(&[4, 4, 2], None).unwrap();
        assert_eq!(ineq.coefficients().len(), 16);
        assert!(ineq.coefficients().values().all(|c| (c.abs() - 1.0).abs() < 1e-12));
        assert_eq!(ineq.lr_bound(), 4.0);
        assert_eq!(lr_bound_bruteforce(&ineq).unwrap(), 4.0);
    }

    #[test]
    fn reduction_to_332() {
        let ineq = multisetting_generate(&[3, 3, 2], None).unwrap();
        assert_eq!(ineq.settings_per_party(), &[3, 3, 2]);
        // doubled coefficient on the identified block
        let max = ineq.max_abs_coefficient();
        assert_eq!(max, 2.0);
        assert_eq!(ineq.lr_bound(), 4.0);
    }

    #[test]
    fn degenerate_22_is_chsh() {
        let ineq = multisetting_generate(&[2, 2], None).unwrap();
        assert_eq!(ineq.coefficients().len(), 4);
        assert_eq!(ineq.lr_bound(), 2.0);
        assert_eq!(lr_bound_bruteforce(&ineq).unwrap(), 2.0);
    }

    #[test]
    fn factorable_sign_function_rejected() {
        let s1 = SignFunction::from_fn(2, |s| s[0]).unwrap();
        let signs = vec![s1, SignFunction::chsh(), SignFunction::chsh()];
        assert!(multisetting_generate(&[4, 4, 2], Some(&signs)).is_err());
    }

    #[test]
    fn four_party_structure() {
        let ineq = multisetting_generate(&[8, 8, 4, 2], None).unwrap();
        assert_eq!(ineq.coefficients().len(), 64);
        assert_eq!(ineq.lr_bound(), 8.0);
        // 22 total settings exceed the brute-force guard, but the generating
        // expression is an algebraic identity: every deterministic strategy
        // gives exactly +-8
        let mut lcg = 0x2545F4914F6CDD1Du64;
        for _ in 0..500 {
            lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let mask = lcg;
            let mut value = 0.0;
            for (key, c) in ineq.coefficients() {
                let mut sign = 1.0;
                let mut bit = 0;
                for (j, &k) in key.iter().enumerate() {
                    let pos = bit + k;
                    if mask >> pos & 1 == 1 {
                        sign = -sign;
                    }
                    bit += ineq.settings_per_party()[j];
                }
                value += c * sign;
            }
            assert!((value.abs() - 8.0).abs() < 1e-9, "identity value {value}");
        }
    }
}
