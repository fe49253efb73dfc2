use std::fmt;

use serde_json::{json, Value};
use sumset_core::explorer::{
    default_search_bound, empirical_n, enumerate_joint, enumerate_trajectories, filter_trajectories,
    trajectory, verify_missing, Budget, BudgetPolicy, Domain, RangeQuery, SearchSpace, SizeRange,
    TrajectorySet,
};
use sumset_core::witness::{
    family_witness, group_counterexample, witness_extremes, witness_h3, witness_restricted_2,
    witness_sumset_2, Extreme, Family, Witness,
};
use sumset_core::{
    bounds_report, normalize, range_h3_closed_form, restricted_sumset, sumset, Error, GroupSet,
    GroupSpec, IntSet,
};

use crate::args::{Command, Global, WitnessKind};
use crate::cache::{parse_domain, Cache, Lookup};
use crate::parallel;
use crate::render::{columns, number, size_set, Output};
use crate::suites::{self, Status};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e @ Error::BudgetExceeded { .. }) => {
                write!(f, "{e}; rerun with --force to scan them all, or --truncate for a partial scan")
            }
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Context {
    pub workers: usize,
    pub budget: Budget,
    pub cache: Option<Cache>,
    pub seed: u64,
}

impl Context {
    pub fn from_global(g: &Global) -> Self {
        let workers = g
            .workers
            .map(|w| w as usize)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let policy = if g.force {
            BudgetPolicy::Unlimited
        } else if g.truncate {
            BudgetPolicy::Truncate
        } else {
            BudgetPolicy::Refuse
        };
        Context {
            workers,
            budget: Budget {
                limit: g.budget,
                policy,
            },
            cache: g.cache_dir.clone().map(Cache::new),
            seed: g.seed,
        }
    }

    fn budget_json(&self) -> Value {
        let policy = match self.budget.policy {
            BudgetPolicy::Refuse => "refuse",
            BudgetPolicy::Truncate => "truncate",
            BudgetPolicy::Unlimited => "force",
        };
        json!({ "limit": self.budget.limit, "policy": policy })
    }
}

fn group_arg(text: Option<&str>) -> Result<Domain> {
    match text {
        None => Ok(Domain::Integers),
        Some(t) => parse_domain(t).map_err(CliError::Usage),
    }
}

/// Largest bound up to `2^k - 1` whose candidate count fits the budget.
fn default_bound(k: usize, domain: &Domain, limit: u64) -> u64 {
    let spec = match domain {
        Domain::Integers => return default_search_bound(k, limit),
        Domain::Group(spec) if spec.free_rank() == 0 => return 0,
        Domain::Group(spec) => spec,
    };
    let envelope = if k >= 62 { 1u64 << 62 } else { (1u64 << k) - 1 };
    let fits = |n: u64| SearchSpace::new(k, n, domain).is_ok_and(|s| s.total() <= limit as u128);
    let m = spec.torsion_moduli().first().copied().unwrap_or(1);
    let smallest = (k as u64).div_ceil(m).saturating_sub(1);
    if !fits(smallest) {
        return smallest;
    }
    let (mut lo, mut hi) = (smallest, envelope.max(smallest));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

pub fn execute(command: Command, ctx: &Context) -> Result<Output> {
    match command {
        Command::Sumset { set, h, restricted, group } => cmd_sumset(&set, h, restricted, group.as_deref()),
        Command::Normalize { set } => cmd_normalize(&set),
        Command::Range { h, k, restricted, max_element, group, joint } => {
            if joint {
                cmd_joint(h, k, max_element, ctx)
            } else {
                cmd_range(h, k, restricted, max_element, group.as_deref(), ctx)
            }
        }
        Command::Witness { kind, normalize } => cmd_witness(kind, normalize),
        Command::Bounds { h, k } => cmd_bounds(h, k),
        Command::H3 { h } => cmd_h3(h),
        Command::Trajectory { set, length } => cmd_trajectory(&set, length),
        Command::Trajectories { length, k, max_element } => {
            let n = max_element.unwrap_or_else(|| default_search_bound(k, ctx.budget.limit));
            let r = enumerate_trajectories(length, k, n, ctx.budget)?;
            let inputs = json!({ "length": length, "k": k, "max_element": n, "budget": ctx.budget_json() });
            Ok(trajectory_output("trajectories", inputs, &r, None))
        }
        Command::Filter { constraints, length, k, max_element } => {
            let cons = parse_constraints(&constraints)?;
            let k_eff = k.or_else(|| cons.first().filter(|c| c.0 == 1).map(|c| c.1));
            let n = max_element.unwrap_or_else(|| default_search_bound(k_eff.unwrap_or(1), ctx.budget.limit));
            let r = filter_trajectories(&cons, length, k, n, ctx.budget)?;
            let cons_json: Vec<Value> = cons.iter().map(|&(h, s)| json!({ "h": h, "size": s })).collect();
            let inputs = json!({
                "constraints": cons_json,
                "length": length,
                "k": r.k,
                "max_element": n,
                "budget": ctx.budget_json(),
            });
            Ok(trajectory_output("filter", inputs, &r, Some(&cons)))
        }
        Command::Missing { h, k, max_element } => {
            let n = max_element.unwrap_or_else(|| default_search_bound(k, ctx.budget.limit));
            cmd_missing(h, k, n, ctx)
        }
        Command::EmpiricalN { h, k, max_element, restricted } => {
            let n = max_element.unwrap_or_else(|| default_search_bound(k, ctx.budget.limit));
            cmd_empirical(h, k, n, restricted, ctx)
        }
        Command::Coset { set, group } => cmd_coset(&set, &group),
        Command::Verify { suite } => {
            let report = suites::run(suite, ctx.workers, ctx.seed);
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| vec![c.status.as_str().to_string(), c.label.clone(), c.detail.clone()])
                .collect();
            let (p, f, s) = (
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Skip),
            );
            let mut text = columns(&["status", "check", "detail"], &rows);
            text.push_str(&format!("{}: {p} passed, {f} failed, {s} skipped\n", suite.name()));
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "check": c.label, "status": c.status.as_str().to_lowercase(), "detail": c.detail }))
                .collect();
            let mut out = Output::new(
                "verify",
                json!({ "suite": suite.name(), "seed": ctx.seed }),
                json!({ "suite": suite.name(), "passed": p, "failed": f, "skipped": s, "checks": checks }),
            )
            .text(text)
            .csv(&["status", "check", "detail"], rows);
            out.mismatch = f > 0;
            Ok(out)
        }
    }
}

fn cmd_sumset(set: &str, h: usize, restricted: bool, group: Option<&str>) -> Result<Output> {
    let domain = group_arg(group)?;
    let (input, result, size) = match &domain {
        Domain::Integers => {
            let a: IntSet = set.parse()?;
            let s = if restricted { restricted_sumset(&a, h)? } else { sumset(&a, h)? };
            (a.to_string(), s.to_string(), s.size())
        }
        Domain::Group(spec) => {
            let a = GroupSet::parse(spec, set)?;
            let s = if restricted { a.restricted_sumset(h)? } else { a.sumset(h)? };
            (a.to_string(), s.to_string(), s.size())
        }
    };
    let label = if restricted { "restricted sumset" } else { "sumset" };
    let text = format!("set:    {input}\nh:      {h}\n{label}: {result}\nsize:   {size}\n")
        .replace("restricted sumset: ", "restricted: ");
    Ok(Output::new(
        "sumset",
        json!({ "set": input, "h": h, "restricted": restricted, "group": domain.to_string() }),
        json!({ "sumset": result, "size": size }),
    )
    .text(text)
    .csv(&["set", "h", "restricted", "sumset", "size"], vec![vec![
        input,
        h.to_string(),
        restricted.to_string(),
        result,
        size.to_string(),
    ]]))
}

fn cmd_normalize(set: &str) -> Result<Output> {
    let a: IntSet = set.parse()?;
    let n = normalize(&a)?;
    Ok(Output::new("normalize", json!({ "set": a.to_string() }), json!({ "normalized": n.to_string() }))
        .text(format!("{a} -> {n}\n"))
        .csv(&["set", "normalized"], vec![vec![a.to_string(), n.to_string()]]))
}

fn run_range(q: &RangeQuery, ctx: &Context) -> Result<SizeRange> {
    if let Some(cache) = &ctx.cache {
        match cache.load(q) {
            Lookup::Hit(r) => return Ok(r),
            Lookup::Miss => {}
            Lookup::Invalid(path, why) => {
                eprintln!("warning: ignoring cache file {}: {why}", path.display());
            }
        }
    }
    let r = parallel::enumerate_range(q, ctx.workers)?;
    if let Some(cache) = &ctx.cache {
        if let Err(e) = cache.store(&r) {
            eprintln!("warning: could not write cache in {}: {e}", cache.dir().display());
        }
    }
    Ok(r)
}

fn cmd_range(
    h: usize,
    k: usize,
    restricted: bool,
    max_element: Option<u64>,
    group: Option<&str>,
    ctx: &Context,
) -> Result<Output> {
    let domain = group_arg(group)?;
    let n = max_element.unwrap_or_else(|| default_bound(k, &domain, ctx.budget.limit));
    let q = RangeQuery::new(h, k, n)
        .restricted(restricted)
        .domain(domain.clone())
        .budget(ctx.budget);
    let r = run_range(&q, ctx)?;
    let name = if restricted { "restricted R" } else { "R" };
    let universe = match &domain {
        Domain::Integers => format!("k-subsets of [0,{n}] up to affine maps"),
        Domain::Group(spec) if spec.free_rank() == 0 => "k-subsets up to translation".to_string(),
        Domain::Group(_) => format!("k-subsets with free coordinates in [0,{n}] up to translation"),
    };
    let mut text = format!("{name}({h},{k}) in {domain} = {}\n", size_set(&r.sizes));
    if restricted && h > k {
        text.push_str("h > k: every restricted sumset is empty, recorded as size 0\n");
    }
    text.push_str(&format!(
        "scan: {} over {universe}, {} candidates, {} evaluated\n",
        if r.complete { "complete" } else { "TRUNCATED" },
        r.candidates,
        r.canonical_sets
    ));
    let rows: Vec<Vec<String>> = r.witnesses.iter().map(|(s, w)| vec![s.to_string(), w.to_string()]).collect();
    text.push_str(&columns(&["size", "witness"], &rows));
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|(s, w)| json!({ "size": s, "set": w.to_string() }))
        .collect();
    Ok(Output::new(
        "range",
        json!({
            "h": h,
            "k": k,
            "restricted": restricted,
            "group": domain.to_string(),
            "max_element": n,
            "budget": ctx.budget_json(),
        }),
        json!({
            "h": r.h,
            "k": r.k,
            "group": r.domain.to_string(),
            "search_bound": r.search_bound,
            "restricted": r.restricted,
            "complete": r.complete,
            "sizes": r.sizes,
            "display": size_set(&r.sizes),
            "witnesses": witnesses,
            "candidates": number(r.candidates),
            "evaluated": number(r.canonical_sets),
        }),
    )
    .complete(r.complete)
    .text(text)
    .csv(&["size", "witness"], rows))
}

fn cmd_joint(h: usize, k: usize, max_element: Option<u64>, ctx: &Context) -> Result<Output> {
    let n = max_element.unwrap_or_else(|| default_search_bound(k, ctx.budget.limit));
    let r = enumerate_joint(h, k, n, ctx.budget)?;
    let rows: Vec<Vec<String>> = r
        .pairs
        .iter()
        .map(|(&(a, b), w)| vec![a.to_string(), b.to_string(), w.to_string()])
        .collect();
    let mut text = format!(
        "joint sizes (|hA|, |restricted hA|) for h = {h}, k = {k} in [0,{n}] (experimental){}\n",
        if r.complete { "" } else { ", TRUNCATED" }
    );
    text.push_str(&columns(&["plain", "restricted", "witness"], &rows));
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|(&(a, b), w)| json!({ "plain": a, "restricted": b, "set": w.to_string() }))
        .collect();
    Ok(Output::new(
        "range",
        json!({ "h": h, "k": k, "joint": true, "max_element": n, "budget": ctx.budget_json() }),
        json!({ "h": h, "k": k, "search_bound": n, "complete": r.complete, "pairs": pairs }),
    )
    .complete(r.complete)
    .text(text)
    .csv(&["plain", "restricted", "witness"], rows))
}

fn cmd_witness(kind: WitnessKind, normalized: bool) -> Result<Output> {
    let (w, args): (Witness, Value) = match kind {
        WitnessKind::TwoFold { k, t } => (witness_sumset_2(k, t)?, json!({ "kind": "two-fold", "k": k, "t": t })),
        WitnessKind::TwoFoldRestricted { k, t } => (
            witness_restricted_2(k, t)?,
            json!({ "kind": "two-fold-restricted", "k": k, "t": t }),
        ),
        WitnessKind::H3 { h, t } => (witness_h3(h, t)?, json!({ "kind": "h3", "h": h, "t": t })),
        WitnessKind::Min { h, k, restricted } => (
            witness_extremes(h, k, Extreme::Min, restricted)?,
            json!({ "kind": "min", "h": h, "k": k, "restricted": restricted }),
        ),
        WitnessKind::Max { h, k, restricted } => (
            witness_extremes(h, k, Extreme::Max, restricted)?,
            json!({ "kind": "max", "h": h, "k": k, "restricted": restricted }),
        ),
        WitnessKind::Family { name, b } => {
            let family: Family = name.parse()?;
            (family_witness(family, b)?, json!({ "kind": "family", "name": family.name(), "b": b }))
        }
        WitnessKind::Counterexample { h, k, restricted } => (
            group_counterexample(h, k, restricted)?,
            json!({ "kind": "counterexample", "h": h, "k": k, "restricted": restricted }),
        ),
    };
    let mut inputs = args;
    inputs["normalize"] = json!(normalized);
    let shown = if normalized { w.normalized()? } else { w.clone() };
    let verified = shown.verify()?;
    let group = match &shown.set {
        sumset_core::AnySet::Int(_) => "z".to_string(),
        sumset_core::AnySet::Group(g) => g.spec().to_string(),
    };
    let op = if w.restricted { "restricted " } else { "" };
    let mut text = format!("{} witness in {group}: {}\n", w.kind, shown.set);
    if normalized && shown.set != w.set {
        text.push_str(&format!("constructed as: {}\n", w.set));
    }
    text.push_str(&format!(
        "{op}{}-fold size: {} ({})\n",
        w.h,
        w.claimed_size,
        if verified { "verified" } else { "NOT verified" }
    ));
    let mut result = json!({
        "kind": w.kind.as_str(),
        "group": group,
        "set": shown.set.to_string(),
        "h": w.h,
        "restricted": w.restricted,
        "claimed_size": w.claimed_size,
        "verified": verified,
    });
    if normalized {
        result["constructed"] = json!(w.set.to_string());
    }
    let mut out = Output::new("witness", inputs, result).text(text).csv(
        &["kind", "set", "h", "restricted", "size", "verified"],
        vec![vec![
            w.kind.to_string(),
            shown.set.to_string(),
            w.h.to_string(),
            w.restricted.to_string(),
            w.claimed_size.to_string(),
            verified.to_string(),
        ]],
    );
    out.mismatch = !verified;
    Ok(out)
}

fn cmd_bounds(h: usize, k: usize) -> Result<Output> {
    let b = bounds_report(h as u64, k as u64)?;
    fn opt<T: ToString>(v: &Option<T>) -> Value {
        v.as_ref().map_or(Value::Null, |x| number(x.to_string()))
    }
    fn show<T: ToString>(v: &Option<T>, why: &str) -> String {
        v.as_ref().map_or(format!("none ({why})"), T::to_string)
    }
    fn cell<T: ToString>(v: &Option<T>) -> String {
        v.as_ref().map_or(String::new(), T::to_string)
    }
    let text = format!(
        "h = {h}, k = {k}\n\
         min |hA|, integers and ordered groups:          {}\n\
         max |hA|:                                       {}\n\
         min |restricted hA|, integers and ordered groups: {}\n\
         max |restricted hA|:                            {}\n\
         min |hA|, any abelian group:                    {}\n\
         min |restricted hA|, any abelian group:         {}\n",
        b.min_sumset_ordered,
        b.max_sumset,
        show(&b.min_restricted_ordered, "h > k, the restricted sumset is empty"),
        b.max_restricted,
        b.min_sumset_general,
        show(&b.min_restricted_general, "defined for h <= k-1"),
    );
    let text = align_colons(&text);
    Ok(Output::new(
        "bounds",
        json!({ "h": h, "k": k }),
        json!({
            "min_sumset_ordered": number(&b.min_sumset_ordered),
            "max_sumset": number(&b.max_sumset),
            "min_restricted_ordered": opt(&b.min_restricted_ordered),
            "max_restricted": number(&b.max_restricted),
            "min_sumset_general": number(&b.min_sumset_general),
            "min_restricted_general": opt(&b.min_restricted_general),
        }),
    )
    .text(text)
    .csv(
        &[
            "h",
            "k",
            "min_sumset_ordered",
            "max_sumset",
            "min_restricted_ordered",
            "max_restricted",
            "min_sumset_general",
            "min_restricted_general",
        ],
        vec![vec![
            h.to_string(),
            k.to_string(),
            b.min_sumset_ordered.to_string(),
            b.max_sumset.to_string(),
            cell(&b.min_restricted_ordered),
            b.max_restricted.to_string(),
            b.min_sumset_general.to_string(),
            cell(&b.min_restricted_general),
        ]],
    ))
}

/// Pads `label: value` lines so the values line up.
fn align_colons(text: &str) -> String {
    let lines: Vec<(&str, &str)> = text
        .lines()
        .map(|l| match l.split_once(':') {
            Some((a, b)) => (a, b.trim_start()),
            None => (l, ""),
        })
        .collect();
    let width = lines.iter().filter(|l| !l.1.is_empty()).map(|l| l.0.chars().count()).max().unwrap_or(0);
    lines
        .into_iter()
        .map(|(a, b)| {
            if b.is_empty() {
                format!("{a}\n")
            } else {
                format!("{a}:{} {b}\n", " ".repeat(width - a.chars().count()))
            }
        })
        .collect()
}

fn cmd_h3(h: usize) -> Result<Output> {
    let sizes = range_h3_closed_form(h as u64)?;
    let as_usize: Vec<usize> = sizes.iter().map(|&s| s as usize).collect();
    let rows: Vec<Vec<String>> = sizes
        .iter()
        .rev()
        .enumerate()
        .map(|(i, s)| vec![(i + 1).to_string(), s.to_string()])
        .collect();
    let mut text = format!("R({h},3) in z = {}\n", size_set(&as_usize));
    text.push_str(&columns(&["t", "C(h+2,2)-C(t,2)"], &rows));
    Ok(Output::new(
        "h3",
        json!({ "h": h }),
        json!({ "h": h, "sizes": sizes.iter().map(|&s| number(s)).collect::<Vec<_>>(), "display": size_set(&as_usize) }),
    )
    .text(text)
    .csv(&["t", "size"], rows))
}

fn cmd_trajectory(set: &str, length: usize) -> Result<Output> {
    let a: IntSet = set.parse()?;
    let t = trajectory(&a, length)?;
    let seq = t.values.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut text = format!("kappa_{length}({a}) = ({seq})\n");
    text.push_str(&match t.eventual_difference {
        Some(d) => format!("eventual difference: {d}\n"),
        None => "eventual difference: not detected within this length\n".to_string(),
    });
    Ok(Output::new(
        "trajectory",
        json!({ "set": a.to_string(), "length": length }),
        json!({ "set": a.to_string(), "values": t.values, "eventual_difference": t.eventual_difference }),
    )
    .text(text)
    .csv(
        &["h", "size"],
        t.values.iter().enumerate().map(|(i, v)| vec![i + 1, *v]).collect(),
    ))
}

fn trajectory_output(command: &str, inputs: Value, r: &TrajectorySet, constraints: Option<&[(usize, usize)]>) -> Output {
    let fmt = |v: &[usize]| format!("({})", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    let rows: Vec<Vec<String>> = r.sequences.iter().map(|(v, w)| vec![fmt(v), w.to_string()]).collect();
    let mut text = match constraints {
        None => format!("{} trajectories of length {} for k = {} in [0,{}]", r.sequences.len(), r.length, r.k, r.search_bound),
        Some(c) => format!(
            "{} trajectories of length {} for k = {} in [0,{}] with {}",
            r.sequences.len(),
            r.length,
            r.k,
            r.search_bound,
            c.iter().map(|(h, s)| format!("|{h}A| = {s}")).collect::<Vec<_>>().join(", ")
        ),
    };
    text.push_str(if r.complete { "\n" } else { " (TRUNCATED)\n" });
    if rows.is_empty() {
        text.push_str("none\n");
    } else {
        text.push_str(&columns(&["trajectory", "witness"], &rows));
    }
    let items: Vec<Value> = r
        .sequences
        .iter()
        .map(|(v, w)| json!({ "values": v, "witness": w.to_string() }))
        .collect();
    Output::new(
        command,
        inputs,
        json!({ "length": r.length, "k": r.k, "search_bound": r.search_bound, "complete": r.complete, "trajectories": items }),
    )
    .complete(r.complete)
    .text(text)
    .csv(&["trajectory", "witness"], rows)
}

fn parse_constraints(text: &str) -> Result<Vec<(usize, usize)>> {
    let bad = |p: &str| CliError::Usage(format!("constraint {p:?} is not of the form h:size"));
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (h, s) = p.split_once(':').ok_or_else(|| bad(p))?;
            Ok((h.trim().parse().map_err(|_| bad(p))?, s.trim().parse().map_err(|_| bad(p))?))
        })
        .collect()
}

fn cmd_missing(h: usize, k: usize, n: u64, ctx: &Context) -> Result<Output> {
    let r = verify_missing(h, k, n, ctx.budget)?;
    let ok = r.violations.is_empty() && !r.missing_value_seen;
    let mut text = format!(
        "h = {h}, k = {k}, canonical sets in [0,{n}]: {} inspected, {} progressions{}\n",
        r.inspected,
        r.progressions,
        if r.complete { "" } else { " (TRUNCATED)" }
    );
    text.push_str(&format!(
        "size {} {}\n",
        r.missing_value,
        if r.missing_value_seen { "REALIZED" } else { "never realized" }
    ));
    text.push_str(&format!("violations: {}\n", r.violations.len()));
    for v in &r.violations {
        text.push_str(&format!("  {v}\n"));
    }
    let mut out = Output::new(
        "missing",
        json!({ "h": h, "k": k, "max_element": n, "budget": ctx.budget_json() }),
        json!({
            "h": h,
            "k": k,
            "search_bound": n,
            "inspected": number(r.inspected),
            "progressions": number(r.progressions),
            "missing_value": r.missing_value,
            "missing_value_seen": r.missing_value_seen,
            "violations": r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "complete": r.complete,
        }),
    )
    .complete(r.complete)
    .text(text)
    .csv(
        &["h", "k", "search_bound", "inspected", "missing_value", "missing_value_seen", "violations"],
        vec![vec![
            h.to_string(),
            k.to_string(),
            n.to_string(),
            r.inspected.to_string(),
            r.missing_value.to_string(),
            r.missing_value_seen.to_string(),
            r.violations.len().to_string(),
        ]],
    );
    out.mismatch = !ok;
    Ok(out)
}

fn cmd_empirical(h: usize, k: usize, n: u64, restricted: bool, ctx: &Context) -> Result<Output> {
    let r = empirical_n(h, k, n, restricted, ctx.budget)?;
    let value = r.least_n.map_or("none".to_string(), |v| v.to_string());
    let text = format!(
        "least N for h = {h}, k = {k}{}: {value}\nbaseline: sizes {} over [0,{n}]{}\nempirical only: larger N may realize further sizes\n",
        if restricted { " (restricted)" } else { "" },
        size_set(&r.sizes),
        if r.complete { "" } else { " (TRUNCATED, no value reported)" }
    );
    Ok(Output::new(
        "empirical-n",
        json!({ "h": h, "k": k, "restricted": restricted, "max_element": n, "budget": ctx.budget_json() }),
        json!({
            "least_n": r.least_n,
            "sizes": r.sizes,
            "n_max": n,
            "certified": false,
            "complete": r.complete,
        }),
    )
    .complete(r.complete)
    .text(text)
    .csv(&["h", "k", "restricted", "n_max", "least_n"], vec![vec![
        h.to_string(),
        k.to_string(),
        restricted.to_string(),
        n.to_string(),
        r.least_n.map_or(String::new(), |v| v.to_string()),
    ]]))
}

fn cmd_coset(set: &str, group: &str) -> Result<Output> {
    let spec: GroupSpec = group.parse()?;
    let a = GroupSet::parse(&spec, set)?;
    if a.is_empty() {
        return Err(Error::EmptySet.into());
    }
    let coset = a.is_subgroup_coset()?;
    Ok(Output::new(
        "coset",
        json!({ "set": a.to_string(), "group": spec.to_string() }),
        json!({ "size": a.size(), "is_coset": coset }),
    )
    .text(format!(
        "{a} in {spec} {} a coset of a subgroup of order {}\n",
        if coset { "is" } else { "is not" },
        a.size()
    ))
    .csv(&["set", "group", "is_coset"], vec![vec![a.to_string(), spec.to_string(), coset.to_string()]]))
}
