//! Finite sets of integers and the literal syntax `{a,b,c}`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::group::GroupSet;

/// A finite set of integers stored in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntSet(Vec<i64>);

impl IntSet {
    /// Builds a set from arbitrary elements, sorting and discarding duplicates.
    pub fn new<I: IntoIterator<Item = i64>>(elements: I) -> Self {
        let mut v: Vec<i64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntSet(v)
    }

    /// Wraps an already strictly increasing vector.
    pub fn from_sorted(elements: Vec<i64>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("elements must be strictly increasing".into()));
        }
        Ok(IntSet(elements))
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<i64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntSet(elements)
    }

    /// The integer interval `[lo, hi]`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        if lo > hi {
            return IntSet::default();
        }
        IntSet((lo..=hi).collect())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Number of elements, `k`.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// `max - min`, always representable since both ends are `i64`.
    pub fn diameter(&self) -> Option<u64> {
        Some((self.max()? as i128 - self.min()? as i128) as u64)
    }

    /// Sum of all elements.
    pub fn element_sum(&self) -> i128 {
        self.0.iter().map(|&x| x as i128).sum()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> core::iter::Copied<core::slice::Iter<'_, i64>> {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    /// `{lambda * a + c : a in A}` with overflow detection.
    pub fn affine_image(&self, lambda: i64, c: i64) -> Result<IntSet> {
        if lambda == 0 && self.len() > 1 {
            return Err(Error::Domain("affine map needs a nonzero multiplier".into()));
        }
        let mut out = Vec::with_capacity(self.len());
        for &a in &self.0 {
            let v = lambda
                .checked_mul(a)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow)?;
            out.push(v);
        }
        Ok(IntSet::new(out))
    }

    /// Nonnegative offsets from the minimum, the form every kernel works on.
    pub(crate) fn offsets(&self) -> Vec<u64> {
        match self.min() {
            None => Vec::new(),
            Some(m) => self.0.iter().map(|&x| (x as i128 - m as i128) as u64).collect(),
        }
    }
}

impl From<&[i64]> for IntSet {
    fn from(v: &[i64]) -> Self {
        IntSet::new(v.iter().copied())
    }
}

impl<const N: usize> From<[i64; N]> for IntSet {
    fn from(v: [i64; N]) -> Self {
        IntSet::new(v)
    }
}

impl FromIterator<i64> for IntSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntSet::new(iter)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str("}")
    }
}

impl FromStr for IntSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        p.skip_ws();
        p.expect(b'{')?;
        let mut out = Vec::new();
        p.skip_ws();
        if !p.eat(b'}') {
            loop {
                p.skip_ws();
                let pos = p.pos;
                let v = p.integer()?;
                if out.contains(&v) {
                    return Err(Error::Parse {
                        position: pos,
                        message: alloc::format!("duplicate element {}", v),
                    });
                }
                out.push(v);
                p.skip_ws();
                if p.eat(b'}') {
                    break;
                }
                p.expect(b',')?;
            }
        }
        p.skip_ws();
        p.end()?;
        Ok(IntSet::new(out))
    }
}

/// Either kind of finite set handled by the workbench.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AnySet {
    Int(IntSet),
    Group(GroupSet),
}

impl AnySet {
    pub fn size(&self) -> usize {
        match self {
            AnySet::Int(s) => s.size(),
            AnySet::Group(g) => g.size(),
        }
    }

    /// `|hA|`, or `|ĥA|` when `restricted`.
    pub fn fold_size(&self, h: usize, restricted: bool) -> Result<usize> {
        match (self, restricted) {
            (AnySet::Int(s), false) => crate::sumset::sumset(s, h).map(|r| r.size()),
            (AnySet::Int(s), true) => crate::sumset::restricted_sumset(s, h).map(|r| r.size()),
            (AnySet::Group(g), false) => g.sumset(h).map(|r| r.size()),
            (AnySet::Group(g), true) => g.restricted_sumset(h).map(|r| r.size()),
        }
    }

    pub fn as_int(&self) -> Option<&IntSet> {
        match self {
            AnySet::Int(s) => Some(s),
            AnySet::Group(_) => None,
        }
    }
}

impl fmt::Display for AnySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySet::Int(s) => s.fmt(f),
            AnySet::Group(g) => g.fmt(f),
        }
    }
}

/// Greatest common divisor of nonnegative integers.
pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Canonical representative of the orbit of `A` under `x -> lambda*x + c`.
///
/// Translates the minimum to zero, divides by the gcd of the translated
/// elements, and keeps the lexicographically smaller of the result and its
/// reflection `max - A`.
pub fn normalize(a: &IntSet) -> Result<IntSet> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut offs = a.offsets();
    let g = offs.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        offs.iter_mut().for_each(|x| *x /= g);
    }
    if reflection_smaller(&offs) {
        let m = *offs.last().unwrap();
        offs = offs.iter().rev().map(|&x| m - x).collect();
    }
    Ok(IntSet::from_sorted_unchecked(
        offs.into_iter().map(|x| x as i64).collect(),
    ))
}

/// True when `max - offs`, re-sorted, is lexicographically below `offs`.
pub(crate) fn reflection_smaller(offs: &[u64]) -> bool {
    let Some(&m) = offs.last() else {
        return false;
    };
    let refl = offs.iter().rev().map(|&x| m - x);
    for (r, &x) in refl.zip(offs) {
        if r != x {
            return r < x;
        }
    }
    false
}

/// True iff consecutive differences are all equal; sets of size at most two qualify.
pub fn is_arithmetic_progression(a: &IntSet) -> bool {
    let s = a.as_slice();
    if s.len() <= 2 {
        return true;
    }
    let d = s[1] as i128 - s[0] as i128;
    s.windows(2).all(|w| w[1] as i128 - w[0] as i128 == d)
}

pub(crate) struct Parser<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected '{}'", c as char)))
        }
    }

    pub(crate) fn end(&self) -> Result<()> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub(crate) fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<i64>().map_err(|_| Error::Parse {
            position: start,
            message: alloc::format!("integer {} does not fit in 64 bits", text),
        })
    }

    pub(crate) fn unsigned(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a positive integer"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<u64>().map_err(|_| Error::Parse {
            position: start,
            message: alloc::format!("integer {} does not fit in 64 bits", text),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&IntSet::from([10, 12, 14])).unwrap(), IntSet::from([0, 1, 2]));
        assert_eq!(normalize(&IntSet::from([0, 2, 3])).unwrap(), IntSet::from([0, 1, 3]));
        assert_eq!(normalize(&IntSet::from([0, 1, 3])).unwrap(), IntSet::from([0, 1, 3]));
        assert_eq!(normalize(&IntSet::from([-7])).unwrap(), IntSet::from([0]));
        assert_eq!(normalize(&IntSet::default()), Err(Error::EmptySet));
    }

    #[test]
    fn reflection_preserves_twofold_size() {
        let a = IntSet::from([0, 2, 3]);
        let b = IntSet::from([0, 1, 3]);
        let two = |s: &IntSet| crate::sumset::sumset(s, 2).unwrap().size();
        assert_eq!(two(&a), two(&b));
    }

    #[test]
    fn progressions() {
        assert!(is_arithmetic_progression(&IntSet::from([0, 3, 6, 9])));
        assert!(!is_arithmetic_progression(&IntSet::from([0, 1, 3])));
        assert!(is_arithmetic_progression(&IntSet::from([5])));
        assert!(is_arithmetic_progression(&IntSet::from([-4, 100])));
    }

    #[test]
    fn extreme_diameter() {
        let s = IntSet::from([i64::MIN, i64::MAX]);
        assert_eq!(s.diameter(), Some(u64::MAX));
    }

    #[test]
    fn literal_roundtrip_and_errors() {
        let s: IntSet = " { 4, -1 ,0 } ".parse().unwrap();
        assert_eq!(s, IntSet::from([-1, 0, 4]));
        assert_eq!(s.to_string(), "{-1,0,4}");
        assert_eq!("{}".parse::<IntSet>().unwrap(), IntSet::default());
        match "{0,1,,2}".parse::<IntSet>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {:?}", other),
        }
        assert!(matches!("{0,0}".parse::<IntSet>(), Err(Error::Parse { position: 3, .. })));
        assert!("{1,2".parse::<IntSet>().is_err());
        assert!("{1} x".parse::<IntSet>().is_err());
        assert!("{99999999999999999999}".parse::<IntSet>().is_err());
    }

    #[test]
    fn affine_overflow_is_reported() {
        let s = IntSet::from([0, i64::MAX / 2 + 1]);
        assert_eq!(s.affine_image(2, 0), Err(Error::Overflow));
    }
}
