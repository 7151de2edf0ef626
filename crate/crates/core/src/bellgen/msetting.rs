use super::BellInequality;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Local realistic bound of the M-setting cosine inequality,
/// `[sin(pi/2M)]^{-N} cos(pi/2M)`.
pub fn blr_bound(parties: usize, settings: usize) -> f64 {
    let m = settings as f64;
    (PI / (2.0 * m)).sin().powi(-(parties as i32)) * (PI / (2.0 * m)).cos()
}

/// The setting angle `phi_m^n = (pi/M) m + (pi/2MN) eta` with
/// `eta = [M+1]_2 [N]_2 + 1`.
pub fn msetting_angle(parties: usize, settings: usize, m: usize) -> f64 {
    let eta = ((settings + 1) % 2) * (parties % 2) + 1;
    PI / settings as f64 * m as f64 + PI / (2.0 * settings as f64 * parties as f64) * eta as f64
}

/// The N-party M-setting correlation inequality with cosine coefficients
/// `c = cos(phi^1_{m_1} + ... + phi^N_{m_N})` and bound [`blr_bound`].
pub fn msetting_inequality(parties: usize, settings: usize) -> Result<BellInequality> {
    if parties < 2 || settings < 2 {
        return Err(Error::InvalidParam("need N >= 2 and M >= 2".into()));
    }
    let count = (settings as f64).powi(parties as i32);
    if count > crate::tolerances::MAX_WEIGHT_TERMS as f64 {
        return Err(Error::GuardExceeded {
            what: format!("{settings}^{parties} coefficients"),
            limit: crate::tolerances::MAX_WEIGHT_TERMS,
        });
    }
    let mut coeffs = BTreeMap::new();
    let mut key = vec![0usize; parties];
    let total = (settings as u64).pow(parties as u32);
    for flat in 0..total {
        let mut x = flat;
        let mut angle = 0.0;
        for slot in key.iter_mut().rev() {
            *slot = (x % settings as u64) as usize;
            x /= settings as u64;
            angle += msetting_angle(parties, settings, *slot);
        }
        let c = angle.cos();
        if c.abs() > 1e-14 {
            coeffs.insert(key.clone(), c);
        }
    }
    BellInequality::new(
        vec![settings; parties],
        coeffs,
        blr_bound(parties, settings),
        format!("msetting({parties},{settings})"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_bounds() {
        assert!((blr_bound(2, 2) - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!((blr_bound(3, 2) - 2.0).abs() < 1e-12);
        assert!((blr_bound(2, 3) - 2.0 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn eta_parity_keeps_cosines_off_zero_only_when_allowed() {
        // the cosine argument is an odd multiple of pi/2M at the LR optimum;
        // here we check eta in {1, 2}
        for n in 2..=6 {
            for m in 2..=6 {
                let eta = ((m + 1) % 2) * (n % 2) + 1;
                assert!(eta == 1 || eta == 2, "eta({n},{m}) = {eta}");
            }
        }
    }

    #[test]
    fn two_setting_reduction_contains_mermin_pattern() {
        // msetting(3,2) has +-1 coefficients on 4 terms: the Mermin inequality
        let ineq = msetting_inequality(3, 2).unwrap();
        assert_eq!(ineq.coefficients().len(), 4);
        for c in ineq.coefficients().values() {
            assert!((c.abs() - 1.0).abs() < 1e-12);
        }
        assert!((ineq.lr_bound() - 2.0).abs() < 1e-12);
    }
}
