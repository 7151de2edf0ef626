use super::BellInequality;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Table of correlation values `E_{k_1...k_N}`, settings 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTable {
    parties: usize,
    settings_per_party: Vec<usize>,
    values: BTreeMap<Vec<usize>, f64>,
}

impl CorrelationTable {
    pub fn new(settings_per_party: Vec<usize>, values: BTreeMap<Vec<usize>, f64>) -> Result<Self> {
        for (k, &e) in &values {
            if k.len() != settings_per_party.len() {
                return Err(Error::InvalidParam("key arity mismatch".into()));
            }
            if e.abs() > 1.0 + 1e-9 {
                return Err(Error::InvalidParam(format!("|E{k:?}| = {} > 1", e.abs())));
            }
        }
        Ok(Self { parties: settings_per_party.len(), settings_per_party, values })
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    pub fn get(&self, key: &[usize]) -> Result<f64> {
        self.values
            .get(key)
            .copied()
            .ok_or_else(|| Error::IncompleteInput(format!("missing correlation E{key:?}")))
    }
}

/// A sign function S: {+1,-1}^N -> {+1,-1}, stored as a table over bitmasks.
/// Bit j of the mask is 1 when s_{j+1} = -1 (party 1 in the highest bit).
#[derive(Debug, Clone, PartialEq)]
pub struct SignFunction {
    parties: usize,
    table: Vec<i8>,
}

impl SignFunction {
    pub fn new(parties: usize, table: Vec<i8>) -> Result<Self> {
        if table.len() != 1 << parties {
            return Err(Error::InvalidParam(format!(
                "table length {} != 2^{parties}",
                table.len()
            )));
        }
        if table.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::InvalidParam("sign function values must be +-1".into()));
        }
        Ok(Self { parties, table })
    }

    /// Builds from a closure over sign tuples (s_j = +-1).
    pub fn from_fn(parties: usize, f: impl Fn(&[i8]) -> i8) -> Result<Self> {
        let mut table = Vec::with_capacity(1 << parties);
        let mut s = vec![1i8; parties];
        for mask in 0..(1usize << parties) {
            for (j, slot) in s.iter_mut().enumerate() {
                *slot = if mask >> (parties - 1 - j) & 1 == 1 { -1 } else { 1 };
            }
            table.push(f(&s));
        }
        Self::new(parties, table)
    }

    /// The CHSH-type sign function `(1 + s_1 + s_2 - s_1 s_2)/2` for N = 2.
    pub fn chsh() -> Self {
        Self::from_fn(2, |s| (1 + s[0] + s[1] - s[0] * s[1]) / 2).unwrap()
    }

    /// The Mermin-family sign function `sqrt(2) cos[(s_1+..+s_N-N+1) pi/4]`.
    pub fn mermin(parties: usize) -> Result<Self> {
        Self::from_fn(parties, |s| {
            let sum: i32 = s.iter().map(|&x| x as i32).sum();
            let v = std::f64::consts::SQRT_2
                * ((sum - parties as i32 + 1) as f64 * std::f64::consts::FRAC_PI_4).cos();
            if v > 0.0 {
                1
            } else {
                -1
            }
        })
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    /// Value at the sign tuple encoded by `mask`.
    pub fn value(&self, mask: usize) -> i8 {
        self.table[mask]
    }

    fn sign_of(mask: usize, parties: usize, j: usize) -> i32 {
        if mask >> (parties - 1 - j) & 1 == 1 {
            -1
        } else {
            1
        }
    }
}

/// Left-hand side of the single complete two-setting inequality,
/// `sum_s |sum_k s_1^{k_1} ... s_N^{k_N} E_k|` (settings k in {0,1}).
/// A table admits a local realistic model iff the value is <= 2^N.
pub fn wwzb_lhs(table: &CorrelationTable) -> Result<f64> {
    let n = table.parties;
    if table.settings_per_party.iter().any(|&m| m != 2) {
        return Err(Error::InvalidParam("complete-set inequality needs 2 settings per party".into()));
    }
    let mut total = 0.0;
    for mask in 0..(1usize << n) {
        let mut inner = 0.0;
        let mut key = vec![0usize; n];
        for kflat in 0..(1usize << n) {
            let mut sign = 1i32;
            for j in 0..n {
                let kj = kflat >> (n - 1 - j) & 1;
                key[j] = kj;
                if kj == 1 {
                    sign *= SignFunction::sign_of(mask, n, j);
                }
            }
            inner += sign as f64 * table.get(&key)?;
        }
        total += inner.abs();
    }
    Ok(total)
}

/// Bell inequality generated by a sign function: coefficients
/// `c_k = sum_s S(s) prod_j s_j^{k_j}`, bound 2^N. The second return value
/// flags factorable sign functions, whose inequalities are trivial
/// (they reduce to `|E_k| <= 1` and cannot be violated).
pub fn sign_function_inequality(s: &SignFunction) -> (BellInequality, bool) {
    let n = s.parties;
    let mut coeffs = BTreeMap::new();
    for kflat in 0..(1usize << n) {
        let mut c = 0.0;
        for mask in 0..(1usize << n) {
            let mut sign = s.value(mask) as i32;
            for j in 0..n {
                if kflat >> (n - 1 - j) & 1 == 1 {
                    sign *= SignFunction::sign_of(mask, n, j);
                }
            }
            c += sign as f64;
        }
        if c != 0.0 {
            let key: Vec<usize> = (0..n).map(|j| kflat >> (n - 1 - j) & 1).collect();
            coeffs.insert(key, c);
        }
    }
    let trivial = coeffs.len() == 1;
    let ineq = BellInequality::new(
        vec![2; n],
        coeffs,
        (1u64 << n) as f64,
        if trivial { "sign-function (trivial)" } else { "sign-function" },
    )
    .expect("generated coefficients are in range");
    (ineq, trivial)
}

/// All 2^(2^N) sign functions, exposed for exhaustive checks (N <= 4).
pub fn enumerate_sign_functions(parties: usize) -> Result<Vec<SignFunction>> {
    if parties > 4 {
        return Err(Error::GuardExceeded {
            what: format!("2^(2^{parties}) sign functions"),
            limit: 4,
        });
    }
    let size = 1usize << parties;
    let mut out = Vec::with_capacity(1 << size);
    for code in 0..(1u32 << size) {
        let table: Vec<i8> =
            (0..size).map(|i| if code >> i & 1 == 1 { -1 } else { 1 }).collect();
        out.push(SignFunction::new(parties, table)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table2(e: [[f64; 2]; 2]) -> CorrelationTable {
        let mut values = BTreeMap::new();
        for k1 in 0..2 {
            for k2 in 0..2 {
                values.insert(vec![k1, k2], e[k1][k2]);
            }
        }
        CorrelationTable::new(vec![2, 2], values).unwrap()
    }

    #[test]
    fn singlet_optimal_settings_reach_four_sqrt_two() {
        // E_kl = -cos(phiA_k - phiB_l) at the CHSH-optimal angles
        let pa = [0.0, std::f64::consts::FRAC_PI_2];
        let pb = [std::f64::consts::FRAC_PI_4, -std::f64::consts::FRAC_PI_4];
        let mut e = [[0.0; 2]; 2];
        for k in 0..2 {
            for l in 0..2 {
                e[k][l] = -(pa[k] - pb[l]).cos();
            }
        }
        let v = wwzb_lhs(&table2(e)).unwrap();
        assert!((v - 4.0 * std::f64::consts::SQRT_2).abs() < 1e-12, "{v}");
    }

    #[test]
    fn zero_table_gives_zero() {
        let v = wwzb_lhs(&table2([[0.0; 2]; 2])).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn chsh_sign_function_recovers_chsh() {
        let (ineq, trivial) = sign_function_inequality(&SignFunction::chsh());
        assert!(!trivial);
        assert_eq!(ineq.lr_bound(), 4.0);
        assert_eq!(ineq.coefficients()[&vec![0, 0]], 2.0);
        assert_eq!(ineq.coefficients()[&vec![0, 1]], 2.0);
        assert_eq!(ineq.coefficients()[&vec![1, 0]], 2.0);
        assert_eq!(ineq.coefficients()[&vec![1, 1]], -2.0);
    }

    #[test]
    fn single_sign_is_trivial() {
        let s = SignFunction::from_fn(2, |s| s[0]).unwrap();
        let (ineq, trivial) = sign_function_inequality(&s);
        assert!(trivial);
        // isolates E_{10} with coefficient 4 against bound 4: |E_10| <= 1
        assert_eq!(ineq.coefficients().len(), 1);
        assert_eq!(ineq.coefficients()[&vec![1, 0]], 4.0);
    }

    #[test]
    fn mermin_three_party_pattern() {
        let (ineq, trivial) = sign_function_inequality(&SignFunction::mermin(3).unwrap());
        assert!(!trivial);
        // 4 (E_100 + E_010 + E_001 - E_111) <= 8
        assert_eq!(ineq.coefficients()[&vec![1, 0, 0]], 4.0);
        assert_eq!(ineq.coefficients()[&vec![0, 1, 0]], 4.0);
        assert_eq!(ineq.coefficients()[&vec![0, 0, 1]], 4.0);
        assert_eq!(ineq.coefficients()[&vec![1, 1, 1]], -4.0);
        assert_eq!(ineq.coefficients().len(), 4);
    }
}
