//! Exhaustive enumeration of achievable sumset sizes over canonical sets.
//!
//! Integer candidates are the `k`-subsets of `[0, N]` that contain 0, have
//! gcd 1 (for `k >= 2`) and are no larger than their reflection. Every
//! finite set is affinely equivalent to exactly one such set, and sumset
//! sizes are affine invariants, so nothing is lost.
//!
//! Candidates are ordered lexicographically and addressed by rank. A scan
//! covers a contiguous rank range and records, for each size, the witness
//! with the smallest rank; merging partial scans by minimum rank yields
//! the same result however the ranks were split.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::bounds::bounds_report;
use crate::error::{out_of_range, Error, Result};
use crate::group::{GroupElem, GroupSet, GroupSpec};
use crate::kernel::{KernelConfig, Sizer};
use crate::set::{gcd, is_arithmetic_progression, reflection_smaller, AnySet, IntSet};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Domain {
    Integers,
    Group(GroupSpec),
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => f.write_str("z"),
            Domain::Group(g) => g.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetPolicy {
    /// Fail with the estimated candidate count.
    Refuse,
    /// Scan only the first `limit` candidates and mark the result incomplete.
    Truncate,
    /// Ignore the limit.
    Unlimited,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
    pub policy: BudgetPolicy,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
            policy: BudgetPolicy::Refuse,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            limit: u64::MAX,
            policy: BudgetPolicy::Unlimited,
        }
    }
}

/// `C(n, r)` saturating at `u128::MAX`.
pub fn binom_u128(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r as u128 {
        let f = (n - r) as u128 + i;
        match acc.checked_mul(f) {
            Some(v) => acc = v / i,
            None => {
                // acc * f / i = (acc / i) * f + (acc % i) * f / i, exact since i | acc * f.
                let q = (acc / i).checked_mul(f);
                let rem = (acc % i) * f / i;
                match q.and_then(|q| q.checked_add(rem)) {
                    Some(v) => acc = v,
                    None => return u128::MAX,
                }
            }
        }
    }
    acc
}

/// Largest `N <= 2^k - 1` whose integer candidate count fits in `limit`.
pub fn default_search_bound(k: usize, limit: u64) -> u64 {
    let k = k.max(1) as u64;
    let envelope = if k >= 63 { i64::MAX as u64 } else { (1u64 << k) - 1 };
    let floor = k - 1;
    if binom_u128(envelope, k - 1) <= limit as u128 {
        return envelope;
    }
    // Candidate count is increasing in N; binary search the cap.
    let (mut lo, mut hi) = (floor, envelope);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if binom_u128(mid, k - 1) <= limit as u128 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// The candidate sets for one `(domain, k, N)` cell, addressable by rank.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    k: usize,
    search_bound: u64,
    kind: SpaceKind,
    total: u128,
}

#[derive(Debug, Clone)]
enum SpaceKind {
    Int,
    Group {
        spec: GroupSpec,
        universe: Vec<GroupElem>,
    },
}

/// The rank range a scan will cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanPlan {
    pub total: u128,
    pub end: u128,
    pub complete: bool,
}

impl SearchSpace {
    pub fn new(k: usize, search_bound: u64, domain: &Domain) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptySet);
        }
        match domain {
            Domain::Integers => {
                if search_bound < k as u64 - 1 {
                    return Err(out_of_range(
                        "N",
                        search_bound as i128,
                        k as i128 - 1,
                        i64::MAX as i128,
                    ));
                }
                if search_bound > i64::MAX as u64 {
                    return Err(Error::Overflow);
                }
                Ok(SearchSpace {
                    k,
                    search_bound,
                    kind: SpaceKind::Int,
                    total: binom_u128(search_bound, k as u64 - 1),
                })
            }
            Domain::Group(spec) => {
                let universe = group_universe(spec, search_bound)?;
                if universe.len() < k {
                    return Err(Error::Domain(alloc::format!(
                        "universe of {} has only {} elements, fewer than k = {}",
                        spec,
                        universe.len(),
                        k
                    )));
                }
                let total = binom_u128(universe.len() as u64 - 1, k as u64 - 1);
                Ok(SearchSpace {
                    k,
                    search_bound,
                    kind: SpaceKind::Group {
                        spec: spec.clone(),
                        universe,
                    },
                    total,
                })
            }
        }
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn search_bound(&self) -> u64 {
        self.search_bound
    }

    pub fn plan(&self, budget: Budget) -> Result<ScanPlan> {
        let total = self.total;
        if total <= budget.limit as u128 || budget.policy == BudgetPolicy::Unlimited {
            return Ok(ScanPlan {
                total,
                end: total,
                complete: true,
            });
        }
        match budget.policy {
            BudgetPolicy::Refuse => Err(Error::BudgetExceeded {
                estimated: total,
                budget: budget.limit,
            }),
            _ => Ok(ScanPlan {
                total,
                end: budget.limit as u128,
                complete: false,
            }),
        }
    }

    /// Number of items the non-fixed elements are chosen from.
    fn pool(&self) -> u64 {
        match &self.kind {
            SpaceKind::Int => self.search_bound,
            SpaceKind::Group { universe, .. } => universe.len() as u64 - 1,
        }
    }

    /// Calls `f(rank, offsets)` for every canonical integer candidate in `ranks`.
    /// Returns the number of raw candidates examined.
    pub fn for_each_int<F: FnMut(u128, &[u64])>(&self, ranks: Range<u128>, mut f: F) -> u128 {
        debug_assert!(matches!(self.kind, SpaceKind::Int));
        let k = self.k;
        let mut offs = alloc::vec![0u64; k];
        walk(self.pool(), k - 1, ranks, |rank, combo| {
            for (o, &c) in offs[1..].iter_mut().zip(combo) {
                *o = c as u64 + 1;
            }
            if k >= 2 && offs[1..].iter().fold(0, |g, &x| gcd(g, x)) != 1 {
                return;
            }
            if reflection_smaller(&offs) {
                return;
            }
            f(rank, &offs);
        })
    }

    /// Calls `f(rank, set)` for every group candidate in `ranks`.
    pub fn for_each_group<F: FnMut(u128, GroupSet) -> Result<()>>(
        &self,
        ranks: Range<u128>,
        mut f: F,
    ) -> Result<u128> {
        let SpaceKind::Group { spec, universe } = &self.kind else {
            return Err(Error::Domain("not a group search space".into()));
        };
        let mut err = None;
        let n = walk(self.pool(), self.k - 1, ranks, |rank, combo| {
            if err.is_some() {
                return;
            }
            let elems = core::iter::once(universe[0].clone())
                .chain(combo.iter().map(|&c| universe[c + 1].clone()));
            let r = GroupSet::new(spec.clone(), elems).and_then(|s| f(rank, s));
            if let Err(e) = r {
                err = Some(e);
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(n),
        }
    }

    fn is_group(&self) -> bool {
        matches!(self.kind, SpaceKind::Group { .. })
    }
}

fn group_universe(spec: &GroupSpec, free_bound: u64) -> Result<Vec<GroupElem>> {
    let torsion = spec.torsion_moduli();
    if torsion.len() > 1 || spec.free_rank() > 1 {
        return Err(Error::UnsupportedGroup(alloc::format!(
            "{}: enumeration handles at most one torsion factor and one free factor",
            spec
        )));
    }
    let m = torsion.first().copied().unwrap_or(1);
    let free_hi = if spec.free_rank() == 1 {
        i64::try_from(free_bound).map_err(|_| Error::Overflow)?
    } else {
        0
    };
    let size = (m as u128) * (free_hi as u128 + 1);
    if size > (1u128 << 32) {
        return Err(Error::Domain(alloc::format!(
            "element universe of {} elements is too large",
            size
        )));
    }
    let mut out = Vec::with_capacity(size as usize);
    // Ordered by free coordinate first so that (0,..,0) is the first element.
    for f in 0..=free_hi {
        for t in 0..m {
            let tors: Vec<i64> = if torsion.is_empty() { Vec::new() } else { alloc::vec![t as i64] };
            let free: Vec<i64> = if spec.free_rank() == 1 { alloc::vec![f] } else { Vec::new() };
            out.push(spec.elem(&tors, &free)?);
        }
    }
    Ok(out)
}

/// Visits the lexicographic `r`-combinations of `[0, n)` with ranks in `ranks`.
fn walk<F: FnMut(u128, &[usize])>(n: u64, r: usize, ranks: Range<u128>, mut f: F) -> u128 {
    let total = binom_u128(n, r as u64);
    let end = ranks.end.min(total);
    if ranks.start >= end {
        return 0;
    }
    let mut combo = unrank(n, r, ranks.start);
    let mut rank = ranks.start;
    loop {
        f(rank, &combo);
        rank += 1;
        if rank >= end || !advance(&mut combo, n as usize) {
            break;
        }
    }
    rank - ranks.start
}

/// The combination of lexicographic rank `rank`.
pub(crate) fn unrank(n: u64, r: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(r);
    let mut next = 0u64;
    for i in 0..r {
        let mut c = next;
        loop {
            let cnt = binom_u128(n - c - 1, (r - i - 1) as u64);
            if rank < cnt {
                break;
            }
            rank -= cnt;
            c += 1;
        }
        out.push(c as usize);
        next = c + 1;
    }
    out
}

fn advance(combo: &mut [usize], n: usize) -> bool {
    let r = combo.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if combo[i] < n - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn offsets_to_set(offs: &[u64]) -> IntSet {
    IntSet::from_sorted_unchecked(offs.iter().map(|&x| x as i64).collect())
}

/// Parameters of one range computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeQuery {
    pub h: usize,
    pub k: usize,
    pub search_bound: u64,
    pub restricted: bool,
    pub domain: Domain,
    pub budget: Budget,
    pub kernel: KernelConfig,
}

impl RangeQuery {
    pub fn new(h: usize, k: usize, search_bound: u64) -> Self {
        RangeQuery {
            h,
            k,
            search_bound,
            restricted: false,
            domain: Domain::Integers,
            budget: Budget::default(),
            kernel: KernelConfig::default(),
        }
    }

    pub fn restricted(mut self, restricted: bool) -> Self {
        self.restricted = restricted;
        self
    }

    pub fn group(mut self, spec: GroupSpec) -> Self {
        self.domain = Domain::Group(spec);
        self
    }

    pub fn domain(mut self, domain: Domain) -> Self {
        self.domain = domain;
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    /// Validates the query and fixes the rank range to scan.
    pub fn prepare(&self) -> Result<(SearchSpace, ScanPlan)> {
        if self.h == 0 {
            return Err(Error::ZeroFold);
        }
        let space = SearchSpace::new(self.k, self.search_bound, &self.domain)?;
        let plan = space.plan(self.budget)?;
        Ok((space, plan))
    }

    /// Scans one rank range. Partial results merge into the full result.
    pub fn scan(&self, space: &SearchSpace, ranks: Range<u128>) -> Result<PartialRange> {
        let mut part = PartialRange::default();
        if space.is_group() {
            let (h, restricted) = (self.h, self.restricted);
            part.inspected = space.for_each_group(ranks, |rank, set| {
                let size = if restricted {
                    set.restricted_sumset(h)?.size()
                } else {
                    set.sumset(h)?.size()
                };
                part.canonical += 1;
                part.offer(size, rank, || AnySet::Group(set));
                Ok(())
            })?;
        } else {
            let mut sizer = Sizer::new(self.kernel);
            let mut err = None;
            let (h, restricted) = (self.h, self.restricted);
            let inspected = space.for_each_int(ranks, |rank, offs| {
                if err.is_some() {
                    return;
                }
                match sizer.size(offs, h, restricted) {
                    Ok(size) => {
                        part.canonical += 1;
                        part.offer(size, rank, || AnySet::Int(offsets_to_set(offs)));
                    }
                    Err(e) => err = Some(e),
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            part.inspected = inspected;
        }
        Ok(part)
    }

    pub fn finish(&self, plan: ScanPlan, part: PartialRange) -> SizeRange {
        let sizes = part.best.keys().copied().collect();
        let witnesses = part.best.into_iter().map(|(s, (_, w))| (s, w)).collect();
        SizeRange {
            h: self.h,
            k: self.k,
            domain: self.domain.clone(),
            search_bound: self.search_bound,
            restricted: self.restricted,
            sizes,
            witnesses,
            complete: plan.complete,
            candidates: part.inspected,
            canonical_sets: part.canonical,
        }
    }
}

/// Result of scanning part of a search space.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialRange {
    /// size -> (rank, witness) with the smallest rank seen.
    pub best: BTreeMap<usize, (u128, AnySet)>,
    pub inspected: u128,
    pub canonical: u128,
}

impl PartialRange {
    fn offer<F: FnOnce() -> AnySet>(&mut self, size: usize, rank: u128, witness: F) {
        match self.best.get(&size) {
            Some(&(r, _)) if r <= rank => {}
            _ => {
                self.best.insert(size, (rank, witness()));
            }
        }
    }

    pub fn merge(&mut self, other: PartialRange) {
        for (size, (rank, w)) in other.best {
            self.offer(size, rank, || w);
        }
        self.inspected += other.inspected;
        self.canonical += other.canonical;
    }
}

/// Achievable sizes of `hA` (or `ĥA`) over the canonical `k`-sets of one search space.
///
/// `complete` means the whole canonical space within the bound was scanned.
/// It does not certify that no larger set realizes further sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRange {
    pub h: usize,
    pub k: usize,
    pub domain: Domain,
    pub search_bound: u64,
    pub restricted: bool,
    pub sizes: Vec<usize>,
    pub witnesses: BTreeMap<usize, AnySet>,
    pub complete: bool,
    pub candidates: u128,
    pub canonical_sets: u128,
}

impl SizeRange {
    /// Recomputes every witness and compares against its size key.
    pub fn verify_witnesses(&self) -> Result<bool> {
        for (&size, w) in &self.witnesses {
            if w.size() != self.k || w.fold_size(self.h, self.restricted)? != size {
                return Ok(false);
            }
        }
        Ok(self.sizes.iter().eq(self.witnesses.keys()))
    }

    /// Checks sizes against the closed-form envelope for the integers.
    pub fn within_bounds(&self) -> Result<bool> {
        let b = bounds_report(self.h as u64, self.k as u64)?;
        let (lo, hi) = if self.restricted {
            match b.min_restricted_ordered {
                Some(lo) => (Some(lo), b.max_restricted),
                None => return Ok(self.sizes.iter().all(|&s| s == 0)),
            }
        } else {
            (Some(b.min_sumset_ordered), b.max_sumset)
        };
        let integers = self.domain == Domain::Integers;
        Ok(self.sizes.iter().all(|&s| {
            let s = num_bigint::BigUint::from(s);
            s <= hi && (!integers || lo.as_ref().is_none_or(|lo| &s >= lo))
        }))
    }
}

/// Achievable `|hA|` (or `|ĥA|`), single-threaded.
pub fn enumerate_range(query: &RangeQuery) -> Result<SizeRange> {
    let (space, plan) = query.prepare()?;
    let part = query.scan(&space, 0..plan.end)?;
    Ok(query.finish(plan, part))
}

/// Outcome of checking the gap just above the minimum sumset size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingReport {
    pub h: usize,
    pub k: usize,
    pub search_bound: u64,
    pub inspected: u128,
    pub progressions: u128,
    /// Sets breaking the dichotomy: an AP with `|hA| != hk-h+1`, or a non-AP with `|hA| < hk-h+3`.
    pub violations: Vec<IntSet>,
    /// `hk - h + 2`
    pub missing_value: usize,
    pub missing_value_seen: bool,
    pub complete: bool,
}

/// Checks every canonical `k`-subset of `[0, N]`: progressions reach exactly
/// `hk-h+1`, everything else at least `hk-h+3`.
pub fn verify_missing(h: usize, k: usize, search_bound: u64, budget: Budget) -> Result<MissingReport> {
    if h < 3 {
        return Err(out_of_range("h", h as i128, 3, i128::MAX));
    }
    if k < 3 {
        return Err(out_of_range("k", k as i128, 3, i128::MAX));
    }
    let space = SearchSpace::new(k, search_bound, &Domain::Integers)?;
    let plan = space.plan(budget)?;
    let minimum = h * k - h + 1;
    let mut sizer = Sizer::new(KernelConfig::default());
    let mut report = MissingReport {
        h,
        k,
        search_bound,
        inspected: 0,
        progressions: 0,
        violations: Vec::new(),
        missing_value: minimum + 1,
        missing_value_seen: false,
        complete: plan.complete,
    };
    let mut err = None;
    space.for_each_int(0..plan.end, |_, offs| {
        let size = match sizer.size(offs, h, false) {
            Ok(s) => s,
            Err(e) => {
                err.get_or_insert(e);
                return;
            }
        };
        report.inspected += 1;
        let set = offsets_to_set(offs);
        let ap = is_arithmetic_progression(&set);
        if ap {
            report.progressions += 1;
        }
        if size == minimum + 1 {
            report.missing_value_seen = true;
        }
        if (ap && size != minimum) || (!ap && size < minimum + 2) {
            report.violations.push(set);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// The size sequence `(|1A|, ..., |lA|)` of one set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub base_set: IntSet,
    pub values: Vec<usize>,
    /// Set when the last three differences equal the eventual slope `max(A')`,
    /// where `A' = (A - min A) / gcd`.
    pub eventual_difference: Option<u64>,
}

pub fn trajectory(a: &IntSet, length: usize) -> Result<Trajectory> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if length == 0 {
        return Err(Error::ZeroFold);
    }
    let offs = a.offsets();
    let g = offs.iter().fold(0, |g, &x| gcd(g, x)).max(1);
    let reduced: Vec<u64> = offs.iter().map(|&x| x / g).collect();
    let slope = *reduced.last().unwrap();
    let values = Sizer::new(KernelConfig::default()).sizes_up_to(&reduced, length)?;
    let eventual_difference = (values.len() >= 4
        && values
            .windows(2)
            .rev()
            .take(3)
            .all(|w| (w[1] - w[0]) as u64 == slope))
    .then_some(slope);
    Ok(Trajectory {
        base_set: a.clone(),
        values,
        eventual_difference,
    })
}

/// Distinct trajectories with the first canonical set realizing each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectorySet {
    pub length: usize,
    pub k: usize,
    pub search_bound: u64,
    pub sequences: BTreeMap<Vec<usize>, IntSet>,
    pub complete: bool,
}

impl TrajectorySet {
    pub fn values(&self) -> Vec<Vec<usize>> {
        self.sequences.keys().cloned().collect()
    }
}

/// All `(|1A|, ..., |lA|)` over canonical `k`-subsets of `[0, N]`.
pub fn enumerate_trajectories(length: usize, k: usize, search_bound: u64, budget: Budget) -> Result<TrajectorySet> {
    collect_trajectories(length, k, search_bound, budget, |_| true)
}

/// The trajectories satisfying `|h_i A| = k_i` for every constraint.
///
/// `k` may be omitted when the first constraint fixes `|1A|`.
pub fn filter_trajectories(
    constraints: &[(usize, usize)],
    length: usize,
    k: Option<usize>,
    search_bound: u64,
    budget: Budget,
) -> Result<TrajectorySet> {
    if constraints.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::Domain("constraint fold counts must be strictly increasing".into()));
    }
    if constraints.windows(2).any(|w| w[0].1 >= w[1].1) {
        return Err(Error::Domain("constraint sizes must be strictly increasing".into()));
    }
    if let Some(&(h, _)) = constraints.iter().find(|c| c.0 == 0 || c.0 > length) {
        return Err(out_of_range("h_i", h as i128, 1, length as i128));
    }
    let from_first = constraints.first().filter(|c| c.0 == 1).map(|c| c.1);
    let k = match (k, from_first) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Domain(alloc::format!(
                "k = {} conflicts with the constraint |1A| = {}",
                a, b
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::Domain(
                "set size undetermined: give k or a constraint (1, k)".into(),
            ))
        }
    };
    let owned: Vec<(usize, usize)> = constraints.to_vec();
    collect_trajectories(length, k, search_bound, budget, move |v| {
        owned.iter().all(|&(h, s)| v[h - 1] == s)
    })
}

fn collect_trajectories<P: Fn(&[usize]) -> bool>(
    length: usize,
    k: usize,
    search_bound: u64,
    budget: Budget,
    keep: P,
) -> Result<TrajectorySet> {
    if length == 0 {
        return Err(Error::ZeroFold);
    }
    let space = SearchSpace::new(k, search_bound, &Domain::Integers)?;
    let plan = space.plan(budget)?;
    let mut sizer = Sizer::new(KernelConfig::default());
    let mut sequences: BTreeMap<Vec<usize>, IntSet> = BTreeMap::new();
    let mut err = None;
    space.for_each_int(0..plan.end, |_, offs| match sizer.sizes_up_to(offs, length) {
        Ok(v) => {
            if keep(&v) {
                sequences.entry(v).or_insert_with(|| offsets_to_set(offs));
            }
        }
        Err(e) => {
            err.get_or_insert(e);
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(TrajectorySet {
        length,
        k,
        search_bound,
        sequences,
        complete: plan.complete,
    })
}

/// Least `N <= N_max` whose canonical sets already realize every size found below `N_max`.
///
/// This is an empirical figure, never a certified bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalBound {
    pub h: usize,
    pub k: usize,
    pub restricted: bool,
    pub n_max: u64,
    pub least_n: Option<u64>,
    pub sizes: Vec<usize>,
    pub complete: bool,
}

pub fn empirical_n(h: usize, k: usize, n_max: u64, restricted: bool, budget: Budget) -> Result<EmpiricalBound> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if k == 0 {
        return Err(Error::EmptySet);
    }
    let mut out = EmpiricalBound {
        h,
        k,
        restricted,
        n_max,
        least_n: None,
        sizes: Vec::new(),
        complete: false,
    };
    if n_max < k as u64 - 1 {
        return Ok(out);
    }
    let space = SearchSpace::new(k, n_max, &Domain::Integers)?;
    let plan = space.plan(budget)?;
    let mut sizer = Sizer::new(KernelConfig::default());
    // size -> smallest diameter realizing it
    let mut reach: BTreeMap<usize, u64> = BTreeMap::new();
    let mut err = None;
    space.for_each_int(0..plan.end, |_, offs| match sizer.size(offs, h, restricted) {
        Ok(s) => {
            let d = *offs.last().unwrap();
            reach.entry(s).and_modify(|m| *m = (*m).min(d)).or_insert(d);
        }
        Err(e) => {
            err.get_or_insert(e);
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    out.complete = plan.complete;
    out.sizes = reach.keys().copied().collect();
    if plan.complete {
        out.least_n = reach.values().copied().max();
    }
    Ok(out)
}

/// Joint values `(|hA|, |ĥA|)` with a first witness for each pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointRange {
    pub h: usize,
    pub k: usize,
    pub search_bound: u64,
    pub pairs: BTreeMap<(usize, usize), IntSet>,
    pub complete: bool,
}

pub fn enumerate_joint(h: usize, k: usize, search_bound: u64, budget: Budget) -> Result<JointRange> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let space = SearchSpace::new(k, search_bound, &Domain::Integers)?;
    let plan = space.plan(budget)?;
    let mut sizer = Sizer::new(KernelConfig::default());
    let mut pairs = BTreeMap::new();
    let mut err = None;
    space.for_each_int(0..plan.end, |_, offs| {
        let r = sizer
            .size(offs, h, false)
            .and_then(|a| sizer.size(offs, h, true).map(|b| (a, b)));
        match r {
            Ok(key) => {
                pairs.entry(key).or_insert_with(|| offsets_to_set(offs));
            }
            Err(e) => {
                err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(JointRange {
        h,
        k,
        search_bound,
        pairs,
        complete: plan.complete,
    })
}
