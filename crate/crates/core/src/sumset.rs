//! h-fold sumsets and restricted sumsets of integer sets.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kernel::{KernelConfig, Sizer};
use crate::set::IntSet;

/// `hA = {a_1 + ... + a_h : a_i in A}`.
pub fn sumset(a: &IntSet, h: usize) -> Result<IntSet> {
    sumset_with(a, h, &KernelConfig::default())
}

/// `ĥA`, the sums of `h` distinct elements. Empty when `h > |A|`.
pub fn restricted_sumset(a: &IntSet, h: usize) -> Result<IntSet> {
    restricted_sumset_with(a, h, &KernelConfig::default())
}

pub fn sumset_with(a: &IntSet, h: usize, config: &KernelConfig) -> Result<IntSet> {
    fold(a, h, false, config)
}

pub fn restricted_sumset_with(a: &IntSet, h: usize, config: &KernelConfig) -> Result<IntSet> {
    fold(a, h, true, config)
}

/// `|hA|` without materializing the sumset.
pub fn sumset_size(a: &IntSet, h: usize) -> Result<usize> {
    check(a, h, false)?;
    Sizer::new(KernelConfig::default()).size(&a.offsets(), h, false)
}

/// `|ĥA|` without materializing the sumset.
pub fn restricted_sumset_size(a: &IntSet, h: usize) -> Result<usize> {
    check(a, h, true)?;
    Sizer::new(KernelConfig::default()).size(&a.offsets(), h, true)
}

/// `[|1A|, ..., |max_h A|]`.
pub fn sumset_sizes(a: &IntSet, max_h: usize) -> Result<Vec<usize>> {
    check(a, max_h, false)?;
    Sizer::new(KernelConfig::default()).sizes_up_to(&a.offsets(), max_h)
}

fn check(a: &IntSet, h: usize, restricted: bool) -> Result<()> {
    let (Some(lo), Some(hi)) = (a.min(), a.max()) else {
        return Err(Error::EmptySet);
    };
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if restricted && h > a.size() {
        return Ok(());
    }
    // Every sum lies in [h*min, h*max].
    let h = i64::try_from(h).map_err(|_| Error::Overflow)?;
    lo.checked_mul(h).ok_or(Error::Overflow)?;
    hi.checked_mul(h).ok_or(Error::Overflow)?;
    Ok(())
}

fn fold(a: &IntSet, h: usize, restricted: bool, config: &KernelConfig) -> Result<IntSet> {
    check(a, h, restricted)?;
    let base = a.min().unwrap() as i128 * h as i128;
    let offs = Sizer::new(*config).elements(&a.offsets(), h, restricted)?;
    Ok(IntSet::from_sorted_unchecked(
        offs.into_iter().map(|o| (base + o as i128) as i64).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<const N: usize>(v: [i64; N]) -> IntSet {
        IntSet::from(v)
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&s([0, 1, 2]), 3).unwrap(), IntSet::interval(0, 6));
        assert_eq!(sumset(&s([0]), 5).unwrap(), s([0]));
        assert_eq!(
            sumset(&s([0, 1, 4]), 3).unwrap(),
            s([0, 1, 2, 3, 4, 5, 6, 8, 9, 12])
        );
        // 3{0,1,3} = [0,7] u {9}
        assert_eq!(sumset(&s([0, 1, 3]), 3).unwrap(), s([0, 1, 2, 3, 4, 5, 6, 7, 9]));
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_sumset(&s([0, 1]), 2).unwrap(), s([1]));
        assert_eq!(restricted_sumset(&s([0, 1, 2, 4]), 2).unwrap(), s([1, 2, 3, 4, 5, 6]));
        assert_eq!(restricted_sumset(&s([0, 1, 2, 3]), 2).unwrap(), s([1, 2, 3, 4, 5]));
        assert!(restricted_sumset(&s([0, 1, 2]), 4).unwrap().is_empty());
        assert_eq!(restricted_sumset(&s([3, 5, 9]), 3).unwrap(), s([17]));
    }

    #[test]
    fn negative_and_shifted_inputs() {
        assert_eq!(sumset(&s([-3, -2]), 2).unwrap(), s([-6, -5, -4]));
        assert_eq!(restricted_sumset(&s([-5, 0, 7]), 2).unwrap(), s([-5, 2, 7]));
    }

    #[test]
    fn errors() {
        assert_eq!(sumset(&IntSet::default(), 2), Err(Error::EmptySet));
        assert_eq!(restricted_sumset(&IntSet::default(), 2), Err(Error::EmptySet));
        assert_eq!(sumset(&s([0, 1]), 0), Err(Error::ZeroFold));
        assert_eq!(restricted_sumset(&s([0, 1]), 0), Err(Error::ZeroFold));
        assert_eq!(sumset(&s([0, i64::MAX / 2 + 1]), 2), Err(Error::Overflow));
        assert_eq!(sumset(&s([i64::MIN, 0]), 2), Err(Error::Overflow));
    }

    #[test]
    fn huge_diameter_uses_sparse_path() {
        let a = s([0, 1 << 40, 1 << 50]);
        let two = sumset(&a, 2).unwrap();
        assert_eq!(two.size(), 6);
        assert!(two.contains(1 << 51));
        assert_eq!(restricted_sumset_size(&a, 2).unwrap(), 3);
    }

    #[test]
    fn sizes_sequence() {
        assert_eq!(sumset_sizes(&s([0, 1, 4]), 3).unwrap(), alloc::vec![3, 6, 10]);
        assert_eq!(sumset_sizes(&s([0, 1]), 5).unwrap(), alloc::vec![2, 3, 4, 5, 6]);
    }
}
