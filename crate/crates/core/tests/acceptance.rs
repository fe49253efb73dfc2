//! One line per acceptance criterion, exact comparisons throughout.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumset_core::explorer::{
    enumerate_range, enumerate_trajectories, trajectory, verify_missing, Budget, RangeQuery,
};
use sumset_core::kernel::KernelConfig;
use sumset_core::sumset::{restricted_sumset_with, sumset_with};
use sumset_core::witness::{
    family_witness, group_counterexample, witness_extremes, witness_restricted_2, witness_sumset_2,
    Extreme, Family,
};
use sumset_core::{
    interval_2fold, range_h3_closed_form, restricted_sumset, restricted_sumset_size, sumset_size,
    GroupSet, GroupSpec, IntSet,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn interval(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

fn range_sizes(h: usize, k: usize, n: u64, restricted: bool) -> Result<Vec<usize>, String> {
    let r = enumerate_range(&RangeQuery::new(h, k, n).restricted(restricted).budget(Budget::unlimited()))
        .map_err(|e| e.to_string())?;
    if !r.complete || !r.verify_witnesses().map_err(|e| e.to_string())? {
        return Err(format!("h={h} k={k} N={n}: incomplete scan or unverified witness"));
    }
    Ok(r.sizes)
}

fn inside(set: &IntSet, lo: i64, hi: i64) -> bool {
    set.min().is_some_and(|m| m >= lo) && set.max().is_some_and(|m| m <= hi)
}

fn two_fold() -> Outcome {
    let mut count = 0;
    for k in 1..=20usize {
        let (lo, hi) = interval_2fold(k as u64, false).unwrap();
        ensure!((lo, hi) == (2 * k as u128 - 1, (k * k + k) as u128 / 2), "interval endpoints k={k}");
        let envelope = (1i64 << k) - 1;
        for t in lo..=hi {
            let w = witness_sumset_2(k, t as u64).map_err(|e| format!("k={k} t={t}: {e}"))?;
            let set = w.int_set().unwrap();
            ensure!(w.verify().unwrap() && set.size() == k, "k={k} t={t}: bad witness {set}");
            ensure!(sumset_size(set, 2).unwrap() == t as usize, "k={k} t={t}: size mismatch");
            ensure!(inside(set, 0, envelope), "k={k} t={t}: {set} leaves [0,{envelope}]");
            count += 1;
        }
    }
    for k in 1..=6usize {
        let n = (1u64 << k) - 1;
        let got = range_sizes(2, k, n, false)?;
        ensure!(got == interval(2 * k - 1, (k * k + k) / 2), "k={k} N={n}: enumerated {got:?}");
    }
    Ok(format!("{count} witnesses for k<=20; exhaustive ranges equal the interval for k<=6"))
}

fn two_fold_restricted() -> Outcome {
    let mut count = 0;
    for k in 2..=20usize {
        let (lo, hi) = interval_2fold(k as u64, true).unwrap();
        ensure!((lo, hi) == (2 * k as u128 - 3, (k * k - k) as u128 / 2), "interval endpoints k={k}");
        let envelope = 1i64 << (k - 2);
        for t in lo..=hi {
            let w = witness_restricted_2(k, t as u64).map_err(|e| format!("k={k} t={t}: {e}"))?;
            let set = w.int_set().unwrap();
            ensure!(w.verify().unwrap() && set.size() == k, "k={k} t={t}: bad witness {set}");
            ensure!(restricted_sumset_size(set, 2).unwrap() == t as usize, "k={k} t={t}: size mismatch");
            ensure!(inside(set, 0, envelope), "k={k} t={t}: {set} leaves [0,{envelope}]");
            count += 1;
        }
    }
    for k in 2..=6usize {
        let n = 1u64 << (k - 2);
        let got = range_sizes(2, k, n, true)?;
        ensure!(got == interval(2 * k - 3, (k * k - k) / 2), "k={k} N={n}: enumerated {got:?}");
    }
    Ok(format!("{count} witnesses for k<=20; exhaustive ranges equal the interval for k<=6"))
}

fn three_fold_small_k() -> Outcome {
    let printed: [(Family, &[usize]); 7] = [
        (Family::P1, &[10, 12, 14, 15, 16]),
        (Family::P2, &[13, 14, 15, 17, 18, 19]),
        (Family::Q1, &[13, 15, 17, 19, 20, 21, 22]),
        (Family::Q2, &[16, 18, 19, 21, 23, 24, 25, 26, 27]),
        (Family::Q3, &[26, 27, 28, 29, 30]),
        (Family::Q4, &[31, 32, 33]),
        (Family::Q5, &[32, 33, 34]),
    ];
    for (family, want) in printed {
        let (lo, hi) = family.parameter_range();
        let got: BTreeSet<usize> = (lo..=hi)
            .map(|b| family_witness(family, b).unwrap().claimed_size)
            .collect();
        ensure!(got.iter().copied().eq(want.iter().copied()), "{family}: sizes {got:?}, printed {want:?}");
    }
    for (set, want) in [(vec![1, 4, 16, 64], 20), (vec![0, 1, 4, 13], 20), (vec![1, 4, 16, 64, 256], 35)] {
        let a = IntSet::new(set);
        let got = sumset_size(&a, 3).unwrap();
        ensure!(got == want, "|3{a}| = {got}, expected {want}");
    }
    let claims: [(usize, u64, Vec<usize>); 3] = [
        (3, 16, vec![7, 9, 10]),
        (4, 24, [10].into_iter().chain(12..=20).collect()),
        (5, 32, [13].into_iter().chain(15..=35).collect()),
    ];
    for (k, n, want) in claims {
        let got = range_sizes(3, k, n, false)?;
        ensure!(got == want, "R(3,{k}) at N={n}: enumerated {got:?}");
    }
    Ok("all family size lists reproduced; N = 16, 24, 32 give exactly the claimed sets".into())
}

fn h3_closed_form() -> Outcome {
    let display: [&[u128]; 13] = [
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
    for (i, row) in display.iter().enumerate() {
        let h = i + 1;
        let formula = range_h3_closed_form(h as u64).unwrap();
        ensure!(formula == *row, "h={h}: formula {formula:?}, display {row:?}");
        let mut brute = BTreeSet::new();
        for b in 2..=h as i64 + 1 {
            for a in 1..b {
                brute.insert(sumset_size(&IntSet::from([0, a, b]), h).unwrap() as u128);
            }
        }
        ensure!(brute.iter().copied().eq(row.iter().copied()), "h={h}: brute force {brute:?}");
    }
    Ok("13 display rows match the formula and brute force over {0,a,b}, b <= h+1".into())
}

fn missing_size() -> Outcome {
    let mut inspected = 0u128;
    for h in 3..=5 {
        for k in 3..=5 {
            let r = verify_missing(h, k, 20, Budget::unlimited()).map_err(|e| e.to_string())?;
            ensure!(r.complete, "h={h} k={k}: incomplete");
            ensure!(r.violations.is_empty(), "h={h} k={k}: violations {:?}", r.violations);
            ensure!(!r.missing_value_seen, "h={h} k={k}: {} realized", r.missing_value);
            inspected += r.inspected;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let (mut sets, mut progressions) = (0, 0);
    while sets < 10_000 {
        let k = rng.gen_range(3..=8usize);
        let h = rng.gen_range(3..=5usize);
        let mut v = BTreeSet::new();
        while v.len() < k {
            v.insert(rng.gen_range(0..=1_000_000i64));
        }
        let a = IntSet::new(v);
        if sumset_core::is_arithmetic_progression(&a) {
            continue;
        }
        let s = sumset_size(&a, h).unwrap();
        ensure!(s >= h * k - h + 3, "|{h}{a}| = {s} < {}", h * k - h + 3);
        sets += 1;
    }
    while progressions < 2_000 {
        let k = rng.gen_range(3..=8i64);
        let h = rng.gen_range(3..=5usize);
        let d = rng.gen_range(1..=1_000_000 / k);
        let start = rng.gen_range(0..=1_000_000 - d * (k - 1));
        let a = IntSet::new((0..k).map(|i| start + i * d));
        let s = sumset_size(&a, h).unwrap();
        let k = k as usize;
        ensure!(s == h * k - h + 1, "AP {a}: |{h}A| = {s}");
        progressions += 1;
    }
    Ok(format!(
        "{inspected} canonical sets at N=20 without violation; {sets} random non-APs and {progressions} APs agree"
    ))
}

fn trajectories() -> Outcome {
    for (set, want) in [([0, 1, 2], [3, 5, 7]), ([0, 1, 3], [3, 6, 9]), ([0, 1, 4], [3, 6, 10])] {
        let got = trajectory(&IntSet::from(set), 3).unwrap().values;
        ensure!(got == want, "kappa_3 of {set:?} = {got:?}");
    }
    let r = enumerate_trajectories(3, 3, 8, Budget::unlimited()).map_err(|e| e.to_string())?;
    let want = vec![vec![3, 5, 7], vec![3, 6, 9], vec![3, 6, 10]];
    ensure!(r.complete && r.values() == want, "trajectory set {:?}", r.values());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..1000 {
        let k = rng.gen_range(1..=6usize);
        let mut v = BTreeSet::new();
        while v.len() < k {
            v.insert(rng.gen_range(0..=20i64));
        }
        let a = IntSet::new(v);
        let reduced = sumset_core::normalize(&a).unwrap();
        let slope = *reduced.as_slice().last().unwrap() as u64;
        let t = trajectory(&a, 40).unwrap();
        ensure!(t.eventual_difference == Some(slope), "{a}: detected {:?}, expected {slope}", t.eventual_difference);
    }
    Ok("three kappa_3 values, the (3,3) trajectory set, 1000 random sets stabilize by h = 40".into())
}

fn simple_bounds() -> Outcome {
    let binom = |n: u64, r: u64| -> usize {
        if r > n {
            return 0;
        }
        (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as usize
    };
    for h in 1..=5usize {
        for k in 1..=5usize {
            let w = witness_extremes(h, k, Extreme::Max, false).map_err(|e| e.to_string())?;
            let a = w.int_set().unwrap();
            let plain = sumset_size(a, h).unwrap();
            ensure!(plain == binom((k + h - 1) as u64, h as u64), "powers h={h} k={k}: |hA| = {plain}");
            let restricted = restricted_sumset_size(a, h).unwrap();
            ensure!(restricted == binom(k as u64, h as u64), "powers h={h} k={k}: |hA^| = {restricted}");
        }
    }
    let mut failures = Vec::new();
    for h in 2..=5usize {
        for k in 2..=5usize {
            let w = group_counterexample(h, k, false).map_err(|e| format!("h={h} k={k}: {e}"))?;
            ensure!(w.verify().unwrap() && w.claimed_size == h * k - h, "group h={h} k={k}");
            let m = h as i64 * k as i64 - (h * h) as i64;
            if m < 2 {
                continue;
            }
            match group_counterexample(h, k, true) {
                Ok(w) if w.verify().unwrap() && w.claimed_size == m as usize && w.set.size() == k => {}
                Ok(w) => failures.push(format!("(h={h},k={k}) gave {}", w.claimed_size)),
                Err(e) => failures.push(format!("(h={h},k={k}): {e}")),
            }
        }
    }
    ensure!(
        failures.is_empty(),
        "restricted group cells with target hk-h^2 unreachable: {}",
        failures.join("; ")
    );
    Ok("powers and group witnesses exact for h,k in [2,5]".into())
}

fn coset_lemma() -> Outcome {
    let mut checked = 0;
    for m in 2..=12u64 {
        let spec = GroupSpec::cyclic(m).unwrap();
        for mask in 1u32..1 << m {
            let elems: Vec<_> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| spec.elem(&[i as i64], &[]).unwrap())
                .collect();
            let a = GroupSet::new(spec.clone(), elems).unwrap();
            let coset = a.is_subgroup_coset().unwrap();
            for h in 2..=4 {
                let stable = a.sumset(h).unwrap().size() == a.size();
                ensure!(stable == coset, "Z/{m}, {a}, h={h}: stable={stable} coset={coset}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (set, h) pairs over Z/m, m <= 12"))
}

fn naive_sumset(a: &[i64], h: usize, restricted: bool) -> Vec<i64> {
    fn go(a: &[i64], h: usize, from: usize, acc: i64, restricted: bool, out: &mut BTreeSet<i64>) {
        if h == 0 {
            out.insert(acc);
            return;
        }
        for i in from..a.len() {
            go(a, h - 1, if restricted { i + 1 } else { i }, acc + a[i], restricted, out);
        }
    }
    let mut out = BTreeSet::new();
    go(a, h, 0, 0, restricted, &mut out);
    out.into_iter().collect()
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let random_set = |rng: &mut ChaCha8Rng, k: usize, spread: i64| {
        let mut v = BTreeSet::new();
        while v.len() < k {
            v.insert(rng.gen_range(-spread..=spread));
        }
        IntSet::new(v)
    };
    let mut transforms = 0;
    for _ in 0..10_000 {
        let k = rng.gen_range(1..=8usize);
        let a = random_set(&mut rng, k, 1000);
        let total = a.element_sum() as i64;
        for h in 1..k {
            let left = restricted_sumset(&a, h).unwrap();
            let right = IntSet::new(restricted_sumset(&a, k - h).unwrap().iter().map(|x| total - x));
            ensure!(left == right, "symmetry fails for {a}, h={h}");
        }
        let base: Vec<(usize, usize)> = (1..=4)
            .map(|h| (sumset_size(&a, h).unwrap(), restricted_sumset_size(&a, h).unwrap()))
            .collect();
        for _ in 0..100 {
            let lambda = loop {
                let l = rng.gen_range(-100..=100i64);
                if l != 0 {
                    break l;
                }
            };
            let c = rng.gen_range(-1_000_000_000..=1_000_000_000i64);
            let b = a.affine_image(lambda, c).unwrap();
            let h = rng.gen_range(1..=4usize);
            let got = (sumset_size(&b, h).unwrap(), restricted_sumset_size(&b, h).unwrap());
            ensure!(got == base[h - 1], "{a} -> {lambda}A+{c}, h={h}: {got:?} vs {:?}", base[h - 1]);
            transforms += 1;
        }
    }
    let configs = [KernelConfig::dense(), KernelConfig::sparse()];
    let mut oracle = 0;
    for _ in 0..3000 {
        let k = rng.gen_range(1..=8usize);
        let spread = [8, 100, 5000][rng.gen_range(0..3)];
        let a = random_set(&mut rng, k, spread);
        for h in 1..=4 {
            let plain = naive_sumset(a.as_slice(), h, false);
            let restricted = naive_sumset(a.as_slice(), h, true);
            for c in &configs {
                ensure!(sumset_with(&a, h, c).unwrap().as_slice() == plain, "{c:?} {a} h={h}");
                ensure!(restricted_sumset_with(&a, h, c).unwrap().as_slice() == restricted, "{c:?} {a} h={h} restricted");
                oracle += 1;
            }
        }
    }
    Ok(format!("10000 sets symmetric; {transforms} affine images; {oracle} kernel/oracle comparisons"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("two-fold interval", two_fold),
        ("restricted two-fold interval", two_fold_restricted),
        ("three-fold ranges for k = 3, 4, 5", three_fold_small_k),
        ("closed form for k = 3", h3_closed_form),
        ("missing size hk-h+2", missing_size),
        ("trajectories", trajectories),
        ("simple-bounds witnesses", simple_bounds),
        ("coset characterization", coset_lemma),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
