//! Explicit sets realizing prescribed sumset sizes.
//!
//! Every constructor recomputes the size of the set it builds and refuses to
//! return a witness whose claim does not hold.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bounds::{interval_2fold, range_h3_closed_form};
use crate::error::{out_of_range, Error, Result};
use crate::group::{GroupSet, GroupSpec};
use crate::set::{normalize, AnySet, IntSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WitnessKind {
    TwoFold,
    TwoFoldRestricted,
    H3Family,
    ApMinimum,
    PowersMaximum,
    NamedFamily,
    GroupCounterexample,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::TwoFold => "two_fold",
            WitnessKind::TwoFoldRestricted => "two_fold_restricted",
            WitnessKind::H3Family => "h3_family",
            WitnessKind::ApMinimum => "ap_minimum",
            WitnessKind::PowersMaximum => "powers_maximum",
            WitnessKind::NamedFamily => "named_family",
            WitnessKind::GroupCounterexample => "group_counterexample",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A set together with the sumset size it is claimed to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub set: AnySet,
    pub h: usize,
    pub restricted: bool,
    pub claimed_size: usize,
    pub kind: WitnessKind,
}

impl Witness {
    /// Builds a witness after recomputing its size.
    pub fn checked(
        set: AnySet,
        h: usize,
        restricted: bool,
        claimed_size: usize,
        kind: WitnessKind,
    ) -> Result<Self> {
        let actual = set.fold_size(h, restricted)?;
        if actual != claimed_size {
            return Err(Error::Unverified {
                claimed: claimed_size,
                actual,
            });
        }
        Ok(Witness {
            set,
            h,
            restricted,
            claimed_size,
            kind,
        })
    }

    pub fn verify(&self) -> Result<bool> {
        Ok(self.set.fold_size(self.h, self.restricted)? == self.claimed_size)
    }

    /// The same witness with an integer set replaced by its canonical form.
    pub fn normalized(&self) -> Result<Witness> {
        match &self.set {
            AnySet::Int(s) => Witness::checked(
                AnySet::Int(normalize(s)?),
                self.h,
                self.restricted,
                self.claimed_size,
                self.kind,
            ),
            AnySet::Group(_) => Ok(self.clone()),
        }
    }

    pub fn int_set(&self) -> Option<&IntSet> {
        self.set.as_int()
    }
}

fn int_witness(
    elems: Vec<i64>,
    h: usize,
    restricted: bool,
    t: usize,
    kind: WitnessKind,
) -> Result<Witness> {
    Witness::checked(AnySet::Int(IntSet::new(elems)), h, restricted, t, kind)
}

/// A `k`-subset of `[0, 2^k - 1]` with `|2A| = t`, for `2k-1 <= t <= (k^2+k)/2`.
///
/// Sizes up to `3k-3` come from `[0,k-2] u {t-k}`; larger ones extend a
/// `(k-1)`-element witness for `t-k` by `2 max(B) + 1`, which adds `k` new sums.
pub fn witness_sumset_2(k: usize, t: u64) -> Result<Witness> {
    if k == 0 {
        return Err(Error::EmptySet);
    }
    let (lo, hi) = interval_2fold(k as u64, false)?;
    if (t as u128) < lo || (t as u128) > hi {
        return Err(out_of_range("t", t as i128, lo as i128, hi as i128));
    }
    let elems = build_sumset_2(k as u64, t)?;
    int_witness(elems, 2, false, t as usize, WitnessKind::TwoFold)
}

fn build_sumset_2(k: u64, t: u64) -> Result<Vec<i64>> {
    match (k, t) {
        (1, _) => return Ok(alloc::vec![0]),
        (2, _) => return Ok(alloc::vec![0, 1]),
        (3, 5) => return Ok(alloc::vec![0, 1, 2]),
        (3, _) => return Ok(alloc::vec![0, 1, 3]),
        _ => {}
    }
    if t <= 3 * k - 3 {
        let mut v: Vec<i64> = (0..=(k as i64 - 2)).collect();
        v.push((t - k) as i64);
        return Ok(v);
    }
    let mut v = build_sumset_2(k - 1, t - k)?;
    let top = *v.last().unwrap();
    v.push(
        top.checked_mul(2)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow)?,
    );
    Ok(v)
}

/// A `k`-subset of `[0, 2^(k-2)]` with `|ĥ2A| = t`, for `2k-3 <= t <= (k^2-k)/2`.
///
/// Sizes up to `3k-6` come from `[0,k-2] u {t-k+2}`; larger ones extend a
/// `(k-1)`-element witness for `t-k+1` by `2 max(B)`, adding `k-1` new sums.
pub fn witness_restricted_2(k: usize, t: u64) -> Result<Witness> {
    let (lo, hi) = interval_2fold(k as u64, true)?;
    if (t as u128) < lo || (t as u128) > hi {
        return Err(out_of_range("t", t as i128, lo as i128, hi as i128));
    }
    let elems = build_restricted_2(k as u64, t)?;
    int_witness(elems, 2, true, t as usize, WitnessKind::TwoFoldRestricted)
}

fn build_restricted_2(k: u64, t: u64) -> Result<Vec<i64>> {
    match (k, t) {
        (2, _) => return Ok(alloc::vec![0, 1]),
        (3, _) => return Ok(alloc::vec![0, 1, 2]),
        (4, 5) => return Ok(alloc::vec![0, 1, 2, 3]),
        (4, _) => return Ok(alloc::vec![0, 1, 2, 4]),
        _ => {}
    }
    if t <= 3 * k - 6 {
        let mut v: Vec<i64> = (0..=(k as i64 - 2)).collect();
        v.push((t + 2 - k) as i64);
        return Ok(v);
    }
    let mut v = build_restricted_2(k - 1, t + 1 - k)?;
    let top = *v.last().unwrap();
    v.push(top.checked_mul(2).ok_or(Error::Overflow)?);
    Ok(v)
}

/// `{0, 1, b}` with `|hA| = t`, where `t = C(h+2,2) - C(u,2)` and `b = h + 2 - u`.
pub fn witness_h3(h: usize, t: u64) -> Result<Witness> {
    let values = range_h3_closed_form(h as u64)?;
    // values[i] corresponds to u = h - i.
    let Some(i) = values.iter().position(|&v| v == t as u128) else {
        return Err(Error::Domain(alloc::format!(
            "{} is not a size of {}A for a 3-element set A",
            t,
            h
        )));
    };
    let u = (h - i) as i64;
    let b = h as i64 + 2 - u;
    int_witness(alloc::vec![0, 1, b], h, false, t as usize, WitnessKind::H3Family)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

/// The arithmetic progression `[0, k-1]` (minimum) or the powers
/// `{1, g, ..., g^(k-1)}` with `g = h + 1` (maximum).
pub fn witness_extremes(h: usize, k: usize, which: Extreme, restricted: bool) -> Result<Witness> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if k == 0 {
        return Err(Error::EmptySet);
    }
    if restricted && h > k {
        return Err(out_of_range("h", h as i128, 1, k as i128));
    }
    let (elems, kind) = match which {
        Extreme::Min => ((0..k as i64).collect::<Vec<_>>(), WitnessKind::ApMinimum),
        Extreme::Max => {
            let g = h as i64 + 1;
            let mut v = Vec::with_capacity(k);
            let mut p: i64 = 1;
            for i in 0..k {
                if i > 0 {
                    p = p.checked_mul(g).ok_or(Error::Overflow)?;
                }
                v.push(p);
            }
            (v, WitnessKind::PowersMaximum)
        }
    };
    let (h64, k64) = (h as u128, k as u128);
    let claimed: u128 = match (which, restricted) {
        (Extreme::Min, false) => h64 * k64 - h64 + 1,
        (Extreme::Min, true) => h64 * (k64 - h64) + 1,
        (Extreme::Max, false) => binom_exact(k64 + h64 - 1, h64)?,
        (Extreme::Max, true) => binom_exact(k64, h64)?,
    };
    let claimed = usize::try_from(claimed).map_err(|_| Error::Overflow)?;
    int_witness(elems, h, restricted, claimed, kind)
}

fn binom_exact(n: u128, r: u128) -> Result<u128> {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc.checked_mul(n - r + i).ok_or(Error::Overflow)? / i;
    }
    Ok(acc)
}

/// The explicit four- and five-element families used for `3A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    P1,
    P2,
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::P1,
        Family::P2,
        Family::Q1,
        Family::Q2,
        Family::Q3,
        Family::Q4,
        Family::Q5,
    ];

    /// Admissible parameter range, inclusive.
    pub fn parameter_range(self) -> (i64, i64) {
        match self {
            Family::P1 => (3, 7),
            Family::P2 => (4, 10),
            Family::Q1 => (4, 10),
            Family::Q2 => (5, 13),
            Family::Q3 => (11, 16),
            Family::Q4 => (19, 22),
            Family::Q5 => (0, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::P1 => "P1",
            Family::P2 => "P2",
            Family::Q1 => "Q1",
            Family::Q2 => "Q2",
            Family::Q3 => "Q3",
            Family::Q4 => "Q4",
            Family::Q5 => "Q5",
        }
    }

    fn prefix(self) -> &'static [i64] {
        match self {
            Family::P1 => &[0, 1, 2],
            Family::P2 => &[0, 1, 3],
            Family::Q1 => &[0, 1, 2, 3],
            Family::Q2 => &[0, 1, 3, 4],
            Family::Q3 => &[0, 1, 4, 5],
            Family::Q4 => &[0, 1, 5, 7],
            Family::Q5 => &[0, 1, 5, 8],
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(alloc::format!("unknown family {:?}; expected P1, P2, Q1..Q5", s)))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The family member for parameter `b`: the prefix plus `b` (or `19 + 3b` for Q5).
pub fn named_family(family: Family, b: i64) -> Result<IntSet> {
    let (lo, hi) = family.parameter_range();
    if b < lo || b > hi {
        return Err(out_of_range("b", b, lo, hi));
    }
    let last = if family == Family::Q5 { 19 + 3 * b } else { b };
    let mut v = family.prefix().to_vec();
    v.push(last);
    Ok(IntSet::new(v))
}

/// A family member wrapped as a witness for its (recomputed) `3A` size.
pub fn family_witness(family: Family, b: i64) -> Result<Witness> {
    let set = named_family(family, b)?;
    let size = crate::sumset::sumset_size(&set, 3)?;
    Witness::checked(AnySet::Int(set), 3, false, size, WitnessKind::NamedFamily)
}

/// `A = {(i, 0) : i in [0, k-1]}` inside `Z/m + Z` with `m = hk - h`
/// (or `hk - h^2` for restricted sums), where `hA` fills the torsion factor.
///
/// The construction needs `m >= k` so that the `k` residues are distinct.
pub fn group_counterexample(h: usize, k: usize, restricted: bool) -> Result<Witness> {
    if h < 2 {
        return Err(out_of_range("h", h as i128, 2, i128::MAX));
    }
    if k < 2 {
        return Err(out_of_range("k", k as i128, 2, i128::MAX));
    }
    let (h128, k128) = (h as i128, k as i128);
    let m = if restricted {
        h128 * k128 - h128 * h128
    } else {
        h128 * k128 - h128
    };
    if m < 2 {
        return Err(Error::Domain(alloc::format!(
            "modulus m = {} is degenerate; the construction needs m >= 2",
            m
        )));
    }
    if m < k128 {
        return Err(Error::Domain(alloc::format!(
            "modulus m = {} is below k = {}: the residues 0..k-1 collide and A has fewer than k elements",
            m, k
        )));
    }
    let spec = GroupSpec::new(alloc::vec![m as u64], 1)?;
    let elems = (0..k as i64)
        .map(|i| spec.elem(&[i], &[0]))
        .collect::<Result<Vec<_>>>()?;
    let set = GroupSet::new(spec, elems)?;
    Witness::checked(
        AnySet::Group(set),
        h,
        restricted,
        m as usize,
        WitnessKind::GroupCounterexample,
    )
}
