//! Closed-form bounds and exact formulas for sumset sizes.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{out_of_range, Error, Result};

/// Extreme values of `|hA|` and `|ĥA|` over sets of size `k`.
///
/// The `_ordered` fields are exact minima in the integers (and in every
/// ordered group); the `_general` fields bound arbitrary abelian groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub h: u64,
    pub k: u64,
    /// `hk - h + 1`
    pub min_sumset_ordered: BigUint,
    /// `C(k + h - 1, h)`
    pub max_sumset: BigUint,
    /// `hk - h^2 + 1`, reported only for `h <= k`.
    pub min_restricted_ordered: Option<BigUint>,
    /// `C(k, h)`; zero when `h > k`.
    pub max_restricted: BigUint,
    /// `k`
    pub min_sumset_general: BigUint,
    /// `max(k - h + 1, h + 1)`, reported only for `h <= k - 1`.
    pub min_restricted_general: Option<BigUint>,
}

pub fn bounds_report(h: u64, k: u64) -> Result<BoundsReport> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if k == 0 {
        return Err(Error::EmptySet);
    }
    let hb = BigUint::from(h);
    let kb = BigUint::from(k);
    let min_sumset_ordered = &hb * &kb - &hb + BigUint::one();
    let max_sumset = binomial(BigUint::from(k) + BigUint::from(h) - BigUint::one(), hb.clone());
    let max_restricted = if h > k {
        BigUint::zero()
    } else {
        binomial(kb.clone(), hb.clone())
    };
    let min_restricted_ordered = (h <= k).then(|| &hb * (&kb - &hb) + BigUint::one());
    let min_restricted_general = (h < k).then(|| BigUint::from((k - h + 1).max(h + 1)));
    Ok(BoundsReport {
        h,
        k,
        min_sumset_ordered,
        max_sumset,
        min_restricted_ordered,
        max_restricted,
        min_sumset_general: kb,
        min_restricted_general,
    })
}

/// `{C(h+2,2) - C(t,2) : t in [1,h]}` in ascending order: every value of `|hA|` for `|A| = 3`.
pub fn range_h3_closed_form(h: u64) -> Result<Vec<u128>> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let top = choose2(h as u128 + 2);
    Ok((1..=h as u128).rev().map(|t| top - choose2(t)).collect())
}

fn choose2(n: u128) -> u128 {
    n * n.saturating_sub(1) / 2
}

/// Endpoints of the two-fold size interval: `[2k-1, (k^2+k)/2]`, or
/// `[2k-3, (k^2-k)/2]` for restricted sums.
pub fn interval_2fold(k: u64, restricted: bool) -> Result<(u128, u128)> {
    if k == 0 {
        return Err(Error::EmptySet);
    }
    let k = k as u128;
    if restricted {
        if k < 2 {
            return Err(out_of_range("k", k as i128, 2, i128::MAX));
        }
        Ok((2 * k - 3, (k * k - k) / 2))
    } else {
        Ok((2 * k - 1, (k * k + k) / 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn report_examples() {
        let r = bounds_report(3, 3).unwrap();
        assert_eq!((r.min_sumset_ordered, r.max_sumset), (n(7), n(10)));
        let r = bounds_report(2, 3).unwrap();
        assert_eq!((r.min_sumset_ordered, r.max_sumset), (n(5), n(6)));
        for k in 1..10 {
            let r = bounds_report(1, k).unwrap();
            assert_eq!(r.min_sumset_ordered, n(k));
            assert_eq!(r.max_sumset, n(k));
        }
        for h in 1..10 {
            let r = bounds_report(h, 1).unwrap();
            assert_eq!(r.min_sumset_ordered, n(1));
            assert_eq!(r.max_sumset, n(1));
        }
    }

    #[test]
    fn restricted_fields() {
        let r = bounds_report(5, 3).unwrap();
        assert_eq!(r.max_restricted, n(0));
        assert_eq!(r.min_restricted_ordered, None);
        assert_eq!(r.min_restricted_general, None);
        let r = bounds_report(2, 5).unwrap();
        assert_eq!(r.min_restricted_ordered, Some(n(7)));
        assert_eq!(r.max_restricted, n(10));
        assert_eq!(r.min_restricted_general, Some(n(4)));
        let r = bounds_report(4, 4).unwrap();
        assert_eq!(r.min_restricted_ordered, Some(n(1)));
        assert_eq!(r.max_restricted, n(1));
        assert_eq!(r.min_restricted_general, None);
    }

    #[test]
    fn general_restricted_minimum_is_symmetric() {
        for k in 2..30 {
            for h in 1..k {
                assert_eq!(
                    bounds_report(h, k).unwrap().min_restricted_general,
                    bounds_report(k - h, k).unwrap().min_restricted_general
                );
            }
        }
    }

    #[test]
    fn huge_binomials_are_exact() {
        let r = bounds_report(100, 100).unwrap();
        assert_eq!(
            r.max_sumset.to_string(),
            "45274257328051640582702088538742081937252294837706668420660"
        );
    }

    #[test]
    fn h3_examples() {
        assert_eq!(range_h3_closed_form(3).unwrap(), [7, 9, 10]);
        assert_eq!(range_h3_closed_form(2).unwrap(), [5, 6]);
        assert_eq!(range_h3_closed_form(1).unwrap(), [3]);
        assert_eq!(
            range_h3_closed_form(13).unwrap(),
            [27, 39, 50, 60, 69, 77, 84, 90, 95, 99, 102, 104, 105]
        );
    }

    #[test]
    fn h3_envelope_and_gap() {
        for h in 1..200u64 {
            let r = range_h3_closed_form(h).unwrap();
            assert_eq!(r.len() as u64, h);
            assert!(r.windows(2).all(|w| w[0] < w[1]));
            let lo = 2 * h as u128 + 1;
            let hi = (h as u128 + 2) * (h as u128 + 1) / 2;
            assert!(r.iter().all(|&x| lo <= x && x <= hi));
            assert_eq!(r[0], lo);
            assert_eq!(*r.last().unwrap(), hi);
            if h >= 3 {
                assert!(!r.contains(&(2 * h as u128 + 2)));
            }
        }
    }

    #[test]
    fn intervals() {
        assert_eq!(interval_2fold(4, false).unwrap(), (7, 10));
        assert_eq!(interval_2fold(4, true).unwrap(), (5, 6));
        assert_eq!(interval_2fold(1, false).unwrap(), (1, 1));
        assert_eq!(interval_2fold(2, true).unwrap(), (1, 1));
        assert!(matches!(interval_2fold(1, true), Err(Error::OutOfRange { .. })));
    }
}
