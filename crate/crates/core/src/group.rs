//! Finitely generated abelian groups `Z/m_1 + ... + Z/m_r + Z^s`.
//!
//! Literal grammar: a group is a `+`-separated list of terms `z` (a free
//! factor), `z^s` (`s` free factors) and `z/M` with `M >= 2`. Elements are
//! parenthesized coordinate lists with torsion coordinates first, e.g.
//! `(3,-1)` in `z/4 + z`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::set::{gcd, IntSet, Parser};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    torsion_moduli: Vec<u64>,
    free_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem {
    torsion: Vec<u64>,
    free: Vec<i64>,
}

impl GroupElem {
    pub fn torsion_coords(&self) -> &[u64] {
        &self.torsion
    }

    pub fn free_coords(&self) -> &[i64] {
        &self.free
    }

    pub fn has_free_part(&self) -> bool {
        self.free.iter().any(|&x| x != 0)
    }
}

impl GroupSpec {
    pub fn new(torsion_moduli: Vec<u64>, free_rank: usize) -> Result<Self> {
        if let Some(&m) = torsion_moduli.iter().find(|&&m| m < 2) {
            return Err(Error::Domain(alloc::format!(
                "torsion modulus {} must be at least 2",
                m
            )));
        }
        Ok(GroupSpec {
            torsion_moduli,
            free_rank,
        })
    }

    /// The integers as a group.
    pub fn integers() -> Self {
        GroupSpec {
            torsion_moduli: Vec::new(),
            free_rank: 1,
        }
    }

    /// `Z/mZ`.
    pub fn cyclic(m: u64) -> Result<Self> {
        GroupSpec::new(alloc::vec![m], 0)
    }

    pub fn torsion_moduli(&self) -> &[u64] {
        &self.torsion_moduli
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// True iff some free factor is present.
    pub fn unbounded_exponent(&self) -> bool {
        self.free_rank >= 1
    }

    /// Group order, or `None` when infinite or beyond `u128`.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank > 0 {
            return None;
        }
        self.torsion_moduli
            .iter()
            .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem {
            torsion: alloc::vec![0; self.torsion_moduli.len()],
            free: alloc::vec![0; self.free_rank],
        }
    }

    /// Builds an element, reducing the torsion coordinates.
    pub fn elem(&self, torsion: &[i64], free: &[i64]) -> Result<GroupElem> {
        if torsion.len() != self.torsion_moduli.len() || free.len() != self.free_rank {
            return Err(Error::SpecMismatch);
        }
        let torsion = torsion
            .iter()
            .zip(&self.torsion_moduli)
            .map(|(&x, &m)| (x as i128).rem_euclid(m as i128) as u64)
            .collect();
        Ok(GroupElem {
            torsion,
            free: free.to_vec(),
        })
    }

    fn check(&self, x: &GroupElem) -> Result<()> {
        if x.torsion.len() == self.torsion_moduli.len()
            && x.free.len() == self.free_rank
            && x.torsion.iter().zip(&self.torsion_moduli).all(|(&t, &m)| t < m)
        {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        self.check(a)?;
        self.check(b)?;
        self.add_unchecked(a, b)
    }

    fn add_unchecked(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.torsion_moduli)
            .map(|((&x, &y), &m)| ((x as u128 + y as u128) % m as u128) as u64)
            .collect();
        let free = a
            .free
            .iter()
            .zip(&b.free)
            .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElem { torsion, free })
    }

    pub fn neg(&self, a: &GroupElem) -> Result<GroupElem> {
        self.check(a)?;
        let torsion = a
            .torsion
            .iter()
            .zip(&self.torsion_moduli)
            .map(|(&x, &m)| if x == 0 { 0 } else { m - x })
            .collect();
        let free = a
            .free
            .iter()
            .map(|&x| x.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElem { torsion, free })
    }

    pub fn sub(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// `n * a`.
    pub fn scale(&self, n: i64, a: &GroupElem) -> Result<GroupElem> {
        self.check(a)?;
        let torsion = a
            .torsion
            .iter()
            .zip(&self.torsion_moduli)
            .map(|(&x, &m)| ((n as i128 * x as i128).rem_euclid(m as i128)) as u64)
            .collect();
        let free = a
            .free
            .iter()
            .map(|&x| x.checked_mul(n).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElem { torsion, free })
    }

    /// Order of `a`; `None` for elements of infinite order. Saturates at `u128::MAX`.
    pub fn elem_order(&self, a: &GroupElem) -> Result<Option<u128>> {
        self.check(a)?;
        if a.has_free_part() {
            return Ok(None);
        }
        let mut l: u128 = 1;
        for (&x, &m) in a.torsion.iter().zip(&self.torsion_moduli) {
            let o = (m / gcd(x, m)) as u128;
            let g = gcd128(l, o);
            l = match (l / g).checked_mul(o) {
                Some(v) => v,
                None => return Ok(Some(u128::MAX)),
            };
        }
        Ok(Some(l))
    }

    /// Parses one element literal: `(t_1,...,t_r,f_1,...,f_s)`, or a bare
    /// integer when the group has a single coordinate.
    pub fn parse_elem(&self, s: &str) -> Result<GroupElem> {
        let mut p = Parser::new(s);
        p.skip_ws();
        let e = self.parse_elem_at(&mut p)?;
        p.skip_ws();
        p.end()?;
        Ok(e)
    }

    fn parse_elem_at(&self, p: &mut Parser<'_>) -> Result<GroupElem> {
        let r = self.torsion_moduli.len();
        let n = r + self.free_rank;
        let start = p.pos;
        let mut coords = Vec::with_capacity(n);
        if p.eat(b'(') {
            loop {
                p.skip_ws();
                coords.push(p.integer()?);
                p.skip_ws();
                if p.eat(b')') {
                    break;
                }
                p.expect(b',')?;
            }
        } else {
            coords.push(p.integer()?);
        }
        if coords.len() != n {
            return Err(Error::Parse {
                position: start,
                message: alloc::format!("expected {} coordinates, found {}", n, coords.len()),
            });
        }
        self.elem(&coords[..r], &coords[r..])
    }

    pub fn format_elem(&self, a: &GroupElem) -> String {
        let mut s = String::from("(");
        let mut first = true;
        for t in &a.torsion {
            if !first {
                s.push(',');
            }
            first = false;
            s.push_str(&alloc::format!("{}", t));
        }
        for f in &a.free {
            if !first {
                s.push(',');
            }
            first = false;
            s.push_str(&alloc::format!("{}", f));
        }
        s.push(')');
        s
    }
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(" + ")
            }
        };
        for m in &self.torsion_moduli {
            sep(f)?;
            write!(f, "z/{}", m)?;
        }
        match self.free_rank {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("z")?;
            }
            s => {
                sep(f)?;
                write!(f, "z^{}", s)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let mut torsion = Vec::new();
        let mut free = 0usize;
        loop {
            p.skip_ws();
            if !(p.eat(b'z') || p.eat(b'Z')) {
                return Err(p.error("expected 'z'"));
            }
            if p.eat(b'/') {
                let pos = p.pos;
                let m = p.unsigned()?;
                if m < 2 {
                    return Err(Error::Parse {
                        position: pos,
                        message: "modulus must be at least 2".into(),
                    });
                }
                torsion.push(m);
            } else if p.eat(b'^') {
                free += p.unsigned()? as usize;
            } else {
                free += 1;
            }
            p.skip_ws();
            if !p.eat(b'+') {
                break;
            }
        }
        p.end()?;
        GroupSpec::new(torsion, free)
    }
}

/// A finite subset of a group, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSet {
    spec: GroupSpec,
    elems: Vec<GroupElem>,
}

impl GroupSet {
    pub fn new<I: IntoIterator<Item = GroupElem>>(spec: GroupSpec, elems: I) -> Result<Self> {
        let mut v: Vec<GroupElem> = elems.into_iter().collect();
        for e in &v {
            spec.check(e)?;
        }
        v.sort_unstable();
        v.dedup();
        Ok(GroupSet { spec, elems: v })
    }

    fn from_btree(spec: GroupSpec, set: BTreeSet<GroupElem>) -> Self {
        GroupSet {
            spec,
            elems: set.into_iter().collect(),
        }
    }

    /// Parses `{(..),(..)}` against `spec`.
    pub fn parse(spec: &GroupSpec, s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        p.skip_ws();
        p.expect(b'{')?;
        let mut out = Vec::new();
        p.skip_ws();
        if !p.eat(b'}') {
            loop {
                p.skip_ws();
                let pos = p.pos;
                let e = spec.parse_elem_at(&mut p)?;
                if out.contains(&e) {
                    return Err(Error::Parse {
                        position: pos,
                        message: "duplicate element".into(),
                    });
                }
                out.push(e);
                p.skip_ws();
                if p.eat(b'}') {
                    break;
                }
                p.expect(b',')?;
            }
        }
        p.skip_ws();
        p.end()?;
        GroupSet::new(spec.clone(), out)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.elems
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: &GroupElem) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    /// `hA`, by repeated addition of `A` with exact deduplication.
    pub fn sumset(&self, h: usize) -> Result<GroupSet> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        if h == 0 {
            return Err(Error::ZeroFold);
        }
        let mut cur: BTreeSet<GroupElem> = self.elems.iter().cloned().collect();
        for _ in 1..h {
            let mut next = BTreeSet::new();
            for x in &cur {
                for a in &self.elems {
                    next.insert(self.spec.add_unchecked(x, a)?);
                }
            }
            cur = next;
        }
        Ok(GroupSet::from_btree(self.spec.clone(), cur))
    }

    /// `ĥA` via the layered distinct-summand recursion. Empty when `h > |A|`.
    pub fn restricted_sumset(&self, h: usize) -> Result<GroupSet> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        if h == 0 {
            return Err(Error::ZeroFold);
        }
        let k = self.size();
        if h > k {
            return Ok(GroupSet {
                spec: self.spec.clone(),
                elems: Vec::new(),
            });
        }
        let mut layers: Vec<BTreeSet<GroupElem>> = alloc::vec![BTreeSet::new(); h + 1];
        layers[0].insert(self.spec.zero());
        for (i, a) in self.elems.iter().enumerate() {
            let top = h.min(i + 1);
            let low = h.saturating_sub(k - 1 - i).max(1);
            for j in (low..=top).rev() {
                let add: Vec<GroupElem> = layers[j - 1]
                    .iter()
                    .map(|x| self.spec.add_unchecked(x, a))
                    .collect::<Result<_>>()?;
                layers[j].extend(add);
            }
        }
        let out = core::mem::take(&mut layers[h]);
        Ok(GroupSet::from_btree(self.spec.clone(), out))
    }

    /// True iff `A = x + H` for a subgroup `H` with `|H| = |A|`.
    ///
    /// The translate `A - a_0` must be closed under addition; for a finite
    /// set of finite-order elements that makes it a subgroup.
    pub fn is_subgroup_coset(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        if self.size() == 1 {
            return Ok(true);
        }
        if self.elems.iter().any(GroupElem::has_free_part) {
            return Err(Error::InfiniteOrder);
        }
        let base = &self.elems[0];
        let shifted = GroupSet::new(
            self.spec.clone(),
            self.elems
                .iter()
                .map(|x| self.spec.sub(x, base))
                .collect::<Result<Vec<_>>>()?,
        )?;
        for x in &shifted.elems {
            for y in &shifted.elems {
                if !shifted.contains(&self.spec.add_unchecked(x, y)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.spec.format_elem(e))?;
        }
        f.write_str("}")
    }
}

/// `{a * generator : a in A}`.
///
/// Fails unless the generator has infinite order or an order exceeding
/// `h * diameter(A)`, the largest difference between two elements of `hA`.
pub fn embed_integers(
    a: &IntSet,
    spec: &GroupSpec,
    generator: &GroupElem,
    h: usize,
) -> Result<GroupSet> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let required = (h as u128)
        .checked_mul(a.diameter().unwrap() as u128)
        .ok_or(Error::Overflow)?;
    if let Some(order) = spec.elem_order(generator)? {
        if order <= required {
            return Err(Error::GeneratorOrderTooSmall { order, required });
        }
    }
    let elems = a
        .iter()
        .map(|x| spec.scale(x, generator))
        .collect::<Result<Vec<_>>>()?;
    GroupSet::new(spec.clone(), elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn zm(m: u64, xs: &[i64]) -> GroupSet {
        let spec = GroupSpec::cyclic(m).unwrap();
        let elems: Vec<_> = xs.iter().map(|&x| spec.elem(&[x], &[]).unwrap()).collect();
        GroupSet::new(spec, elems).unwrap()
    }

    #[test]
    fn spec_grammar() {
        let g: GroupSpec = "z/4 + z".parse().unwrap();
        assert_eq!(g.torsion_moduli(), &[4]);
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.to_string(), "z/4 + z");
        assert_eq!("z".parse::<GroupSpec>().unwrap(), GroupSpec::integers());
        assert_eq!("z+z/6".parse::<GroupSpec>().unwrap().to_string(), "z/6 + z");
        assert_eq!("z^2 + z/3".parse::<GroupSpec>().unwrap().to_string(), "z/3 + z^2");
        assert!("z/1".parse::<GroupSpec>().is_err());
        assert!("q".parse::<GroupSpec>().is_err());
        assert!("z +".parse::<GroupSpec>().is_err());
        assert!(GroupSpec::integers().unbounded_exponent());
        assert!(!GroupSpec::cyclic(5).unwrap().unbounded_exponent());
    }

    #[test]
    fn element_literals() {
        let g: GroupSpec = "z/4 + z".parse().unwrap();
        let e = g.parse_elem("(5,-2)").unwrap();
        assert_eq!(e.torsion_coords(), &[1]);
        assert_eq!(g.format_elem(&e), "(1,-2)");
        assert!(g.parse_elem("(1)").is_err());
        let s = GroupSet::parse(&g, "{(1,1),(0,0)}").unwrap();
        assert_eq!(s.to_string(), "{(0,0),(1,1)}");
        assert_eq!(GroupSet::parse(&g, &s.to_string()).unwrap(), s);
        let c = GroupSpec::cyclic(7).unwrap();
        assert_eq!(GroupSet::parse(&c, "{1, 8}").err().map(|_| ()), Some(()));
    }

    #[test]
    fn arithmetic() {
        let g: GroupSpec = "z/6 + z".parse().unwrap();
        let a = g.elem(&[4], &[3]).unwrap();
        let b = g.elem(&[5], &[-1]).unwrap();
        assert_eq!(g.add(&a, &b).unwrap(), g.elem(&[3], &[2]).unwrap());
        assert_eq!(g.sub(&a, &a).unwrap(), g.zero());
        assert_eq!(g.scale(-1, &a).unwrap(), g.neg(&a).unwrap());
        assert_eq!(g.elem_order(&a).unwrap(), None);
        let t = g.elem(&[4], &[0]).unwrap();
        assert_eq!(g.elem_order(&t).unwrap(), Some(3));
        let bad = GroupSpec::cyclic(3).unwrap().zero();
        assert_eq!(g.add(&a, &bad), Err(Error::SpecMismatch));
    }

    #[test]
    fn cyclic_sumsets() {
        let a = zm(4, &[0, 1, 2]);
        assert_eq!(a.sumset(2).unwrap().size(), 4);
        assert_eq!(a.restricted_sumset(2).unwrap(), zm(4, &[1, 2, 3]));
        assert!(a.restricted_sumset(4).unwrap().is_empty());
        assert_eq!(zm(5, &[0, 1]).sumset(0), Err(Error::ZeroFold));
    }

    #[test]
    fn coset_examples() {
        assert!(zm(4, &[0, 2]).is_subgroup_coset().unwrap());
        assert!(zm(4, &[1, 3]).is_subgroup_coset().unwrap());
        assert!(!zm(7, &[0, 1, 3]).is_subgroup_coset().unwrap());
        assert!(zm(6, &[1, 3, 5]).is_subgroup_coset().unwrap());
        assert!(zm(9, &[4]).is_subgroup_coset().unwrap());
        let g: GroupSpec = "z/4 + z".parse().unwrap();
        let s = GroupSet::parse(&g, "{(0,0),(0,1)}").unwrap();
        assert_eq!(s.is_subgroup_coset(), Err(Error::InfiniteOrder));
        let single = GroupSet::parse(&g, "{(1,5)}").unwrap();
        assert!(single.is_subgroup_coset().unwrap());
    }

    #[test]
    fn embedding() {
        let z = GroupSpec::integers();
        let one = z.elem(&[], &[1]).unwrap();
        let e = embed_integers(&IntSet::from([0, 1, 3]), &z, &one, 3).unwrap();
        assert_eq!(e.to_string(), "{(0),(1),(3)}");

        let g: GroupSpec = "z/4 + z".parse().unwrap();
        let gen = g.elem(&[1], &[1]).unwrap();
        let e = embed_integers(&IntSet::from([0, 1]), &g, &gen, 2).unwrap();
        assert_eq!(e.to_string(), "{(0,0),(1,1)}");

        let c = GroupSpec::cyclic(100).unwrap();
        let gen = c.elem(&[1], &[]).unwrap();
        let e = embed_integers(&IntSet::from([0, 1, 2]), &c, &gen, 2).unwrap();
        assert_eq!(e.size(), 3);
        assert_eq!(e.sumset(2).unwrap().size(), 5);

        let small = GroupSpec::cyclic(4).unwrap();
        let gen = small.elem(&[1], &[]).unwrap();
        assert_eq!(
            embed_integers(&IntSet::from([0, 1, 2]), &small, &gen, 2),
            Err(Error::GeneratorOrderTooSmall {
                order: 4,
                required: 4
            })
        );
    }
}
