//! Named reproduction suites for `sumsets verify`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumset_core::explorer::{enumerate_trajectories, verify_missing, Budget, RangeQuery};
use sumset_core::witness::{group_counterexample, witness_h3, witness_restricted_2, witness_sumset_2};
use sumset_core::{
    interval_2fold, range_h3_closed_form, restricted_sumset, restricted_sumset_size, sumset_size,
    GroupSet, GroupSpec, IntSet,
};

use crate::parallel;
use crate::render::size_set;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Thm41,
    Thm42,
    #[value(name = "h3-table")]
    H3Table,
    Missing,
    Rsharp33,
    #[value(name = "coset-lemma")]
    CosetLemma,
    Counterexamples,
    Properties,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.0.push(Check {
            label: label.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn skip(&mut self, label: impl Into<String>, why: impl Into<String>) {
        self.0.push(Check {
            label: label.into(),
            status: Status::Skip,
            detail: why.into(),
        });
    }
}

pub fn run(suite: Suite, workers: usize, seed: u64) -> SuiteReport {
    let mut c = Checks(Vec::new());
    match suite {
        Suite::Thm41 => two_fold(&mut c, false, workers),
        Suite::Thm42 => two_fold(&mut c, true, workers),
        Suite::H3Table => h3_table(&mut c),
        Suite::Missing => missing(&mut c),
        Suite::Rsharp33 => rsharp33(&mut c),
        Suite::CosetLemma => coset_lemma(&mut c),
        Suite::Counterexamples => counterexamples(&mut c),
        Suite::Properties => properties(&mut c, seed),
    }
    SuiteReport { suite, checks: c.0 }
}

fn two_fold(c: &mut Checks, restricted: bool, workers: usize) {
    let first = if restricted { 2 } else { 1 };
    for k in first..=20usize {
        let (lo, hi) = interval_2fold(k as u64, restricted).unwrap();
        let envelope = if restricted { 1i64 << (k - 2) } else { (1i64 << k) - 1 };
        let mut bad = Vec::new();
        for t in lo..=hi {
            let w = if restricted {
                witness_restricted_2(k, t as u64)
            } else {
                witness_sumset_2(k, t as u64)
            };
            match w {
                Ok(w) => {
                    let set = w.int_set().unwrap();
                    let inside = set.as_slice().first() >= Some(&0) && set.as_slice().last() <= Some(&envelope);
                    if !(w.verify().unwrap_or(false) && set.size() == k && inside) {
                        bad.push(format!("t={t}: {set}"));
                    }
                }
                Err(e) => bad.push(format!("t={t}: {e}")),
            }
        }
        let span = if restricted { "|2^A|" } else { "|2A|" };
        c.push(
            format!("k={k} witnesses"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("every {span} in [{lo},{hi}] realized inside [0,{envelope}]")
            } else {
                bad.join("; ")
            },
        );
        if k <= 6 {
            let n = envelope as u64;
            let q = RangeQuery::new(2, k, n).restricted(restricted).budget(Budget::unlimited());
            match parallel::enumerate_range(&q, workers) {
                Ok(r) => {
                    let want: Vec<usize> = (lo as usize..=hi as usize).collect();
                    c.push(
                        format!("k={k} exhaustive"),
                        r.sizes == want && r.complete,
                        format!("N={n}: {}", size_set(&r.sizes)),
                    );
                }
                Err(e) => c.push(format!("k={k} exhaustive"), false, e.to_string()),
            }
        }
    }
}

const H3_DISPLAY: [&[u128]; 13] = [
    &[3],
    &[5, 6],
    &[7, 9, 10],
    &[9, 12, 14, 15],
    &[11, 15, 18, 20, 21],
    &[13, 18, 22, 25, 27, 28],
    &[15, 21, 26, 30, 33, 35, 36],
    &[17, 24, 30, 35, 39, 42, 44, 45],
    &[19, 27, 34, 40, 45, 49, 52, 54, 55],
    &[21, 30, 38, 45, 51, 56, 60, 63, 65, 66],
    &[23, 33, 42, 50, 57, 63, 68, 72, 75, 77, 78],
    &[25, 36, 46, 55, 63, 70, 76, 81, 85, 88, 90, 91],
    &[27, 39, 50, 60, 69, 77, 84, 90, 95, 99, 102, 104, 105],
];

fn h3_table(c: &mut Checks) {
    for (i, row) in H3_DISPLAY.iter().enumerate() {
        let h = i + 1;
        let formula = range_h3_closed_form(h as u64).unwrap();
        let realized: Vec<u128> = formula
            .iter()
            .filter_map(|&t| witness_h3(h, t as u64).ok())
            .filter(|w| w.verify().unwrap_or(false))
            .map(|w| w.claimed_size as u128)
            .collect();
        let fmt = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(",");
        c.push(
            format!("h={h}"),
            formula == *row && realized == *row,
            format!("{{{}}}", fmt(&formula)),
        );
    }
}

fn missing(c: &mut Checks) {
    for h in 3..=5 {
        for k in 3..=5 {
            match verify_missing(h, k, 20, Budget::unlimited()) {
                Ok(r) => c.push(
                    format!("h={h} k={k}"),
                    r.violations.is_empty() && !r.missing_value_seen && r.complete,
                    format!(
                        "{} sets in [0,20], {} violations, size {} never reached",
                        r.inspected,
                        r.violations.len(),
                        r.missing_value
                    ),
                ),
                Err(e) => c.push(format!("h={h} k={k}"), false, e.to_string()),
            }
        }
    }
}

fn rsharp33(c: &mut Checks) {
    let want = [vec![3, 5, 7], vec![3, 6, 9], vec![3, 6, 10]];
    match enumerate_trajectories(3, 3, 8, Budget::unlimited()) {
        Ok(r) => {
            for (values, set) in &r.sequences {
                c.push(
                    format!("{values:?}"),
                    want.contains(values),
                    format!("realized by {set}"),
                );
            }
            c.push("trajectory count", r.sequences.len() == 3, format!("{} distinct", r.sequences.len()));
        }
        Err(e) => c.push("enumeration", false, e.to_string()),
    }
}

fn coset_lemma(c: &mut Checks) {
    for m in 2..=12u64 {
        let spec = GroupSpec::cyclic(m).unwrap();
        let mut bad = None;
        let mut cosets = 0;
        for mask in 1u32..1 << m {
            let elems: Vec<_> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| spec.elem(&[i as i64], &[]).unwrap())
                .collect();
            let a = GroupSet::new(spec.clone(), elems).unwrap();
            let coset = a.is_subgroup_coset().unwrap();
            cosets += coset as usize;
            for h in 2..=4 {
                if (a.sumset(h).unwrap().size() == a.size()) != coset {
                    bad.get_or_insert(format!("{a}, h={h}"));
                }
            }
        }
        let mut detail = format!("{} subsets, {cosets} cosets", (1u32 << m) - 1);
        if let Some(b) = &bad {
            detail = format!("mismatch at {b}");
        }
        c.push(format!("z/{m}"), bad.is_none(), detail);
    }
}

fn counterexamples(c: &mut Checks) {
    for h in 2..=5usize {
        for k in 2..=5usize {
            for restricted in [false, true] {
                let (hi, ki) = (h as i64, k as i64);
                let m = if restricted { hi * ki - hi * hi } else { hi * ki - hi };
                let label = format!("h={h} k={k}{}", if restricted { " restricted" } else { "" });
                if m < 2 {
                    c.skip(label, format!("m = {m} is degenerate"));
                    continue;
                }
                if m < ki {
                    c.skip(label, format!("m = {m} < k: the k residues collide"));
                    continue;
                }
                match group_counterexample(h, k, restricted) {
                    Ok(w) => {
                        let floor = if restricted { h * k - h * h + 1 } else { h * k - h + 1 };
                        c.push(
                            label,
                            w.verify().unwrap_or(false) && w.claimed_size == m as usize && (m as usize) < floor,
                            format!("size {m} in z/{m} + z, below the integer minimum {floor}"),
                        );
                    }
                    Err(e) => c.push(label, false, e.to_string()),
                }
            }
        }
    }
}

fn properties(c: &mut Checks, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut symmetric, mut affine, mut bounded) = (true, true, true);
    let mut first_bad = None;
    for _ in 0..1000 {
        let k = rng.gen_range(1..=8usize);
        let mut v = BTreeSet::new();
        while v.len() < k {
            v.insert(rng.gen_range(-1000..=1000i64));
        }
        let a = IntSet::new(v);
        let total = a.element_sum() as i64;
        for h in 1..k {
            let left = restricted_sumset(&a, h).unwrap();
            let right = IntSet::new(restricted_sumset(&a, k - h).unwrap().iter().map(|x| total - x));
            if left != right {
                symmetric = false;
                first_bad.get_or_insert(format!("symmetry: {a}, h={h}"));
            }
        }
        for _ in 0..10 {
            let lambda = [-7, -3, -1, 1, 2, 5, 11][rng.gen_range(0..7)];
            let shift = rng.gen_range(-1_000_000..=1_000_000i64);
            let b = a.affine_image(lambda, shift).unwrap();
            let h = rng.gen_range(1..=4usize);
            let same = sumset_size(&a, h).unwrap() == sumset_size(&b, h).unwrap()
                && restricted_sumset_size(&a, h).unwrap() == restricted_sumset_size(&b, h).unwrap();
            if !same {
                affine = false;
                first_bad.get_or_insert(format!("affine: {a} under {lambda}x+{shift}"));
            }
        }
        let h = rng.gen_range(1..=5usize);
        let s = sumset_size(&a, h).unwrap();
        let lo = h * k - h + 1;
        if s < lo {
            bounded = false;
            first_bad.get_or_insert(format!("bounds: |{h}{a}| = {s} < {lo}"));
        }
    }
    let detail = |ok: bool| if ok { format!("seed {seed}") } else { first_bad.clone().unwrap_or_default() };
    c.push("restricted symmetry (1000 sets)", symmetric, detail(symmetric));
    c.push("affine invariance (10000 images)", affine, detail(affine));
    c.push("lower bound hk-h+1 (1000 sets)", bounded, detail(bounded));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for s in [Suite::H3Table, Suite::Rsharp33, Suite::Missing, Suite::Counterexamples, Suite::Properties] {
            let r = run(s, 2, 0);
            assert_eq!(r.count(Status::Fail), 0, "{s:?}: {:?}", r.checks);
        }
    }

    #[test]
    fn counterexample_skips_are_the_collision_cells() {
        let r = run(Suite::Counterexamples, 1, 0);
        let skipped: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Skip).map(|c| c.label.as_str()).collect();
        assert_eq!(
            skipped,
            [
                "h=2 k=2 restricted",
                "h=2 k=3 restricted",
                "h=3 k=2 restricted",
                "h=3 k=3 restricted",
                "h=3 k=4 restricted",
                "h=4 k=2 restricted",
                "h=4 k=3 restricted",
                "h=4 k=4 restricted",
                "h=4 k=5 restricted",
                "h=5 k=2 restricted",
                "h=5 k=3 restricted",
                "h=5 k=4 restricted",
                "h=5 k=5 restricted",
            ]
        );
    }
}
