//! Exhaustive checking of every identity and inequality on concrete graphs.
//!
//! [`check_graph`] evaluates all checks on one graph. [`verify_corpus`]
//! runs them over all labeled graphs of the given orders or over a graph6
//! text, split into chunks that worker threads pick up; chunk results are
//! merged in corpus order so reports do not depend on the worker count.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Mutex;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    ali_bound, appendix_bounds, corollary1_bound, haviland_bound, nikiforov_bounds, theorem1_bound, theorem2_bound,
    theorem3_bound, BoundContext, BoundValue,
};
use crate::enumerate::{enumerate_labeled_range, labeled_count, EnumerateError, MAX_LABELED_ORDER};
use crate::graph::{degree_stats, DegreeStats, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::optimization::pi::{solve_pi, PiInstance};
use crate::rational::{rat, to_f64, Rational};
use crate::report::fmt_float;
use crate::smoothing::{
    lambda_tilde_closed_form, smooth, smoothed_degrees_within_bounds, smoothed_deviation, smoothed_deviation_edge_form,
};
use crate::eigen::largest_eigenvalue;

/// Absolute tolerance of floating-point checks.
pub const FLOAT_TOLERANCE: f64 = 1e-9;
/// Largest acceptable eigenvector residual.
pub const RESIDUAL_LIMIT: f64 = 1e-10;
pub const DEFAULT_FINDING_CAP: usize = 20;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("labeled pi cross-check supports n <= 7, got {0}")]
    CrossCheckOrder(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `quantity ≤ bound`.
    Upper,
    /// `quantity ≥ bound`.
    Lower,
    /// `quantity = bound`.
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// Hypotheses hold; a failure is a violation.
    Applicable,
    /// Evaluated although a hypothesis fails; failures are expected.
    OutsideHypothesis,
    /// The bound has no finite value here.
    Undefined,
    /// An unproven inequality, reported but never a violation.
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: &'static str,
    pub direction: Direction,
    pub status: CheckStatus,
    pub quantity: f64,
    pub bound: f64,
    pub satisfied: bool,
    /// Margin in the satisfied direction: `bound − quantity` for upper
    /// bounds, `quantity − bound` for lower bounds, `−|difference|` for
    /// identities. Nonnegative exactly when satisfied (up to tolerance).
    pub slack: f64,
    pub equality: bool,
    /// Whether `satisfied` and `equality` were decided in exact arithmetic.
    pub exact: bool,
}

impl Check {
    pub fn is_violation(&self) -> bool {
        self.status == CheckStatus::Applicable && !self.satisfied
    }
}

/// Names of all checks, in evaluation order.
pub const CHECK_NAMES: [&str; 24] = [
    "smoothing_weight",
    "smoothing_deviation",
    "smoothing_closed_form",
    "smoothing_edge_form",
    "smoothing_degree_ranges",
    "lambda_ge_lambda_tilde",
    "lambda_tilde_ge_d",
    "lambda_tilde_eigen_match",
    "eigen_residual",
    "haviland",
    "ali",
    "theorem1",
    "theorem2",
    "theorem3",
    "nikiforov_lower",
    "corollary1",
    "appendix_f1",
    "appendix_f2",
    "niki",
    "upper_sqrt_s",
    "upper_zhang",
    "upper_two_thirds",
    "upper_conjectured",
    "nikiforov_conjectured_lower",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphReport {
    pub graph_id: String,
    pub stats: DegreeStats,
    pub lambda: f64,
    pub lambda_tilde: f64,
    pub lambda_tilde_eigen: f64,
    pub residual: f64,
    pub checks: Vec<Check>,
}

impl GraphReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_violation())
    }
}

fn status_of(applicable: bool, value: f64) -> CheckStatus {
    if !value.is_finite() {
        CheckStatus::Undefined
    } else if applicable {
        CheckStatus::Applicable
    } else {
        CheckStatus::OutsideHypothesis
    }
}

fn exact_identity(name: &'static str, quantity: Rational, target: Rational) -> Check {
    let equal = quantity == target;
    Check {
        name,
        direction: Direction::Identity,
        status: CheckStatus::Applicable,
        quantity: to_f64(&quantity),
        bound: to_f64(&target),
        satisfied: equal,
        slack: -(to_f64(&quantity) - to_f64(&target)).abs(),
        equality: equal,
        exact: true,
    }
}

fn float_check(name: &'static str, direction: Direction, status: CheckStatus, quantity: f64, bound: f64) -> Check {
    let slack = match direction {
        Direction::Upper => bound - quantity,
        Direction::Lower => quantity - bound,
        Direction::Identity => -(quantity - bound).abs(),
    };
    Check {
        name,
        direction,
        status,
        quantity,
        bound,
        satisfied: slack >= -FLOAT_TOLERANCE,
        slack,
        equality: slack.abs() <= FLOAT_TOLERANCE,
        exact: false,
    }
}

/// Upper bound on the deviation, decided exactly when an exact form exists.
fn deviation_check(name: &'static str, bv: &BoundValue, s: &Rational) -> Check {
    let status = status_of(bv.applicable, bv.value);
    match bv.cmp_exact(s) {
        Some(ord) => Check {
            name,
            direction: Direction::Upper,
            status,
            quantity: to_f64(s),
            bound: bv.value,
            satisfied: ord != std::cmp::Ordering::Less,
            slack: bv.value - to_f64(s),
            equality: ord == std::cmp::Ordering::Equal,
            exact: true,
        },
        None => float_check(name, Direction::Upper, status, to_f64(s), bv.value),
    }
}

/// The four upper bounds on `s`; they need only the degree statistics.
/// The second theorem bounds graphs of maximum degree at most `Δ` with no
/// condition on the minimum degree, so it is evaluated with `δ = 0`.
pub fn deviation_checks(st: &DegreeStats) -> [Check; 4] {
    let ctx = BoundContext::from_stats(st);
    let zero_lo = ctx.with_degree_bounds(Rational::zero(), ctx.delta_hi);
    [
        deviation_check("haviland", &haviland_bound(&ctx), &st.s),
        deviation_check("ali", &ali_bound(&ctx), &st.s),
        deviation_check("theorem1", &theorem1_bound(&ctx), &st.s),
        deviation_check("theorem2", &theorem2_bound(&zero_lo), &st.s),
    ]
}

fn lower_on(name: &'static str, quantity: f64, bv: &BoundValue) -> Check {
    float_check(name, Direction::Lower, status_of(bv.applicable, bv.value), quantity, bv.value)
}

/// Runs every check on `g`.
pub fn check_graph(g: &Graph) -> GraphReport {
    let st = degree_stats(g);
    let sg = smooth(g);
    let (lambda, residual) = largest_eigenvalue(&g.adjacency_matrix());
    let (lambda_tilde_eigen, _) = largest_eigenvalue(&sg.matrix());
    let lambda_tilde = lambda_tilde_closed_form(&sg).unwrap_or_else(|_| to_f64(&sg.d));
    let (n, d, s, m) = (st.n as f64, to_f64(&st.d), to_f64(&st.s), st.m as f64);

    let mut checks = Vec::with_capacity(CHECK_NAMES.len());
    checks.push(exact_identity("smoothing_weight", sg.total_weight(), rat(st.m as i128)));
    checks.push(exact_identity("smoothing_deviation", sg.deviation(), st.s));
    checks.push(exact_identity("smoothing_closed_form", smoothed_deviation(&sg, &st.d), st.s));
    checks.push(exact_identity("smoothing_edge_form", smoothed_deviation_edge_form(&sg, &st.d), st.s));
    let ranges = smoothed_degrees_within_bounds(g, &sg);
    checks.push(Check {
        name: "smoothing_degree_ranges",
        direction: Direction::Identity,
        status: CheckStatus::Applicable,
        quantity: if ranges { 1.0 } else { 0.0 },
        bound: 1.0,
        satisfied: ranges,
        slack: if ranges { 0.0 } else { -1.0 },
        equality: ranges,
        exact: true,
    });
    checks.push(float_check("lambda_ge_lambda_tilde", Direction::Lower, CheckStatus::Applicable, lambda, lambda_tilde));
    checks.push(float_check("lambda_tilde_ge_d", Direction::Lower, CheckStatus::Applicable, lambda_tilde, d));
    checks.push(float_check(
        "lambda_tilde_eigen_match",
        Direction::Identity,
        CheckStatus::Applicable,
        lambda_tilde_eigen,
        lambda_tilde,
    ));
    let mut res = float_check("eigen_residual", Direction::Upper, CheckStatus::Applicable, residual, RESIDUAL_LIMIT);
    res.satisfied = residual <= RESIDUAL_LIMIT;
    res.equality = false;
    checks.push(res);

    checks.extend(deviation_checks(&st));

    checks.push(lower_on("theorem3", lambda_tilde, &theorem3_bound(n, d, s)));
    let nb = nikiforov_bounds(n, d, m, s);
    let always = |value: f64| BoundValue {
        value,
        applicable: true,
        hypotheses: Vec::new(),
        exact: None,
    };
    checks.push(lower_on("nikiforov_lower", lambda, &always(d + nb.lower_proven)));
    checks.push(lower_on("corollary1", lambda, &corollary1_bound(n, d, s)));
    let ab = appendix_bounds(n, d, s);
    checks.push(lower_on("appendix_f1", lambda, &ab.f1));
    checks.push(lower_on("appendix_f2", lambda, &ab.f2));
    checks.push(lower_on("niki", lambda, &ab.niki));
    let upper = |name, bound: f64, status| float_check(name, Direction::Upper, status, lambda, bound);
    checks.push(upper("upper_sqrt_s", d + nb.upper_proven, CheckStatus::Applicable));
    checks.push(upper("upper_zhang", d + nb.upper_zhang, CheckStatus::Applicable));
    checks.push(upper("upper_two_thirds", d + nb.upper_two_thirds, CheckStatus::Applicable));
    checks.push(upper("upper_conjectured", d + nb.upper_conjectured, CheckStatus::Conjecture));
    // Conjectured as stated, but it equals the niki bound, which holds for
    // every graph.
    checks.push(lower_on("nikiforov_conjectured_lower", lambda, &always(d + nb.lower_conjectured)));
    debug_assert_eq!(checks.len(), CHECK_NAMES.len());

    GraphReport {
        graph_id: emit_graph6(g),
        stats: st,
        lambda,
        lambda_tilde,
        lambda_tilde_eigen,
        residual,
        checks,
    }
}

pub const CSV_HEADER: &str = "graph6,check,status,direction,quantity,bound,slack,satisfied,equality";

/// One CSV row per check.
pub fn csv_rows(report: &GraphReport) -> impl Iterator<Item = String> + '_ {
    report.checks.iter().map(move |c| {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            report.graph_id,
            c.name,
            serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default(),
            serde_json::to_value(c.direction).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default(),
            fmt_float(c.quantity),
            fmt_float(c.bound),
            fmt_float(c.slack),
            c.satisfied,
            c.equality
        )
    })
}

/// Where the graphs of a sweep come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// Every labeled graph with `min_n ≤ n ≤ max_n` vertices.
    AllLabeled { min_n: usize, max_n: usize },
    /// graph6 text, one graph per line; `name` only labels the report.
    Graph6 { name: String, text: String },
}

impl CorpusSource {
    pub fn describe(&self) -> String {
        match self {
            CorpusSource::AllLabeled { min_n, max_n } => format!("all labeled graphs, n = {min_n}..={max_n}"),
            CorpusSource::Graph6 { name, .. } => format!("graph6 corpus {name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MalformedLine {
    pub line: usize,
    pub offset: usize,
    pub message: String,
}

const LABELED_CHUNK: u64 = 1 << 12;
const LIST_CHUNK: usize = 256;

enum Chunk {
    Labeled { n: usize, masks: std::ops::Range<u64> },
    List(std::ops::Range<usize>),
}

/// Parses a graph6 corpus; blank lines and a leading `>>graph6<<` header are
/// skipped, malformed lines are collected with their 1-based line numbers.
pub fn parse_corpus(text: &str) -> (Vec<Graph>, Vec<MalformedLine>) {
    let mut graphs = Vec::new();
    let mut malformed = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim_end_matches('\r');
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line.as_bytes()) {
            Ok(g) => graphs.push(g),
            Err(e) => malformed.push(MalformedLine {
                line: i + 1,
                offset: e.offset(),
                message: e.to_string(),
            }),
        }
    }
    (graphs, malformed)
}

/// Splits the corpus into chunks, lets `jobs` threads process them and
/// returns the per-chunk results in corpus order.
fn map_corpus<T, F>(source: &CorpusSource, jobs: usize, visit: F) -> Result<(Vec<T>, Vec<MalformedLine>), VerifyError>
where
    T: Send + Default,
    F: Fn(&Graph, &mut T) + Sync,
{
    let mut chunks = Vec::new();
    let mut graphs = Vec::new();
    let mut malformed = Vec::new();
    match source {
        CorpusSource::AllLabeled { min_n, max_n } => {
            for n in *min_n..=*max_n {
                let total = labeled_count(n)?;
                let mut start = 0;
                while start < total {
                    let end = (start + LABELED_CHUNK).min(total);
                    chunks.push(Chunk::Labeled { n, masks: start..end });
                    start = end;
                }
            }
        }
        CorpusSource::Graph6 { text, .. } => {
            (graphs, malformed) = parse_corpus(text);
            let mut start = 0;
            while start < graphs.len() {
                let end = (start + LIST_CHUNK).min(graphs.len());
                chunks.push(Chunk::List(start..end));
                start = end;
            }
        }
    }

    let results: Vec<Mutex<Option<T>>> = chunks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let k = next.fetch_add(1, AtomicOrdering::Relaxed);
        let Some(chunk) = chunks.get(k) else { break };
        let mut acc = T::default();
        match chunk {
            Chunk::Labeled { n, masks } => {
                enumerate_labeled_range(*n, masks.clone(), |_, g| visit(g, &mut acc)).expect("range checked");
            }
            Chunk::List(range) => graphs[range.clone()].iter().for_each(|g| visit(g, &mut acc)),
        }
        *results[k].lock().expect("poisoned") = Some(acc);
    };
    let jobs = jobs.clamp(1, chunks.len().max(1));
    if jobs == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(worker);
            }
        });
    }
    let ordered = results
        .into_iter()
        .map(|m| m.into_inner().expect("poisoned").expect("every chunk processed"))
        .collect();
    Ok((ordered, malformed))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckCounts {
    pub evaluated: u64,
    pub applicable: u64,
    pub violations: u64,
    pub equalities: u64,
    pub outside_hypothesis: u64,
    pub outside_hypothesis_failures: u64,
    pub conjecture_failures: u64,
    pub undefined: u64,
}

impl CheckCounts {
    fn add(&mut self, other: &CheckCounts) {
        self.evaluated += other.evaluated;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.equalities += other.equalities;
        self.outside_hypothesis += other.outside_hypothesis;
        self.outside_hypothesis_failures += other.outside_hypothesis_failures;
        self.conjecture_failures += other.conjecture_failures;
        self.undefined += other.undefined;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Finding {
    pub graph6: String,
    pub check: &'static str,
    pub quantity: f64,
    pub bound: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub check: &'static str,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepParams {
    pub source: String,
    pub finding_cap: usize,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub params: SweepParams,
    pub graphs: u64,
    pub counts: BTreeMap<&'static str, CheckCounts>,
    /// First `finding_cap` violations in corpus order.
    pub violations: Vec<Finding>,
    /// First `finding_cap` equality witnesses per check, in corpus order.
    pub equality_witnesses: Vec<Witness>,
    /// First `finding_cap` failures of checks evaluated outside their
    /// hypotheses.
    pub outside_hypothesis_failures: Vec<Finding>,
    pub malformed: Vec<MalformedLine>,
    /// Per-check CSV rows, only filled on request.
    #[serde(skip)]
    pub csv_rows: Vec<String>,
}

impl SweepReport {
    pub fn total_violations(&self) -> u64 {
        self.counts.values().map(|c| c.violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_violations() == 0
    }

    pub fn witnesses_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.equality_witnesses
            .iter()
            .filter(move |w| w.check == check)
            .map(|w| w.graph6.as_str())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub jobs: usize,
    pub finding_cap: usize,
    pub csv: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            finding_cap: DEFAULT_FINDING_CAP,
            csv: false,
        }
    }
}

#[derive(Default)]
struct SweepChunk {
    graphs: u64,
    counts: HashMap<&'static str, CheckCounts>,
    violations: Vec<Finding>,
    witnesses: HashMap<&'static str, Vec<String>>,
    outside: Vec<Finding>,
    rows: Vec<String>,
}

fn finding(report: &GraphReport, c: &Check) -> Finding {
    Finding {
        graph6: report.graph_id.clone(),
        check: c.name,
        quantity: c.quantity,
        bound: c.bound,
        slack: c.slack,
    }
}

pub fn verify_corpus(source: &CorpusSource, options: VerifyOptions) -> Result<SweepReport, VerifyError> {
    if let CorpusSource::AllLabeled { max_n, .. } = source {
        if *max_n > MAX_LABELED_ORDER {
            return Err(EnumerateError::OrderOutOfRange(*max_n).into());
        }
    }
    let cap = options.finding_cap;
    let (chunks, malformed) = map_corpus(source, options.jobs, |g, acc: &mut SweepChunk| {
        let report = check_graph(g);
        acc.graphs += 1;
        for c in &report.checks {
            let counts = acc.counts.entry(c.name).or_default();
            counts.evaluated += 1;
            match c.status {
                CheckStatus::Applicable => {
                    counts.applicable += 1;
                    if !c.satisfied {
                        counts.violations += 1;
                        if acc.violations.len() < cap {
                            acc.violations.push(finding(&report, c));
                        }
                    } else if c.equality && c.direction != Direction::Identity {
                        counts.equalities += 1;
                        let list = acc.witnesses.entry(c.name).or_default();
                        if list.len() < cap {
                            list.push(report.graph_id.clone());
                        }
                    }
                }
                CheckStatus::OutsideHypothesis => {
                    counts.outside_hypothesis += 1;
                    if !c.satisfied {
                        counts.outside_hypothesis_failures += 1;
                        if acc.outside.len() < cap {
                            acc.outside.push(finding(&report, c));
                        }
                    }
                }
                CheckStatus::Conjecture => {
                    if !c.satisfied {
                        counts.conjecture_failures += 1;
                    }
                }
                CheckStatus::Undefined => counts.undefined += 1,
            }
        }
        if options.csv {
            acc.rows.extend(csv_rows(&report));
        }
    })?;

    let mut report = SweepReport {
        params: SweepParams {
            source: source.describe(),
            finding_cap: cap,
            tolerance: FLOAT_TOLERANCE,
        },
        graphs: 0,
        counts: CHECK_NAMES.iter().map(|&name| (name, CheckCounts::default())).collect(),
        violations: Vec::new(),
        equality_witnesses: Vec::new(),
        outside_hypothesis_failures: Vec::new(),
        malformed,
        csv_rows: Vec::new(),
    };
    let mut witnesses: BTreeMap<&'static str, Vec<String>> = BTreeMap::new();
    for chunk in chunks {
        report.graphs += chunk.graphs;
        for (name, c) in &chunk.counts {
            report.counts.entry(name).or_default().add(c);
        }
        report.violations.extend(chunk.violations);
        report.outside_hypothesis_failures.extend(chunk.outside);
        for (name, list) in chunk.witnesses {
            witnesses.entry(name).or_default().extend(list);
        }
        report.csv_rows.extend(chunk.rows);
    }
    report.violations.truncate(cap);
    report.outside_hypothesis_failures.truncate(cap);
    for (name, list) in witnesses {
        report
            .equality_witnesses
            .extend(list.into_iter().take(cap).map(|graph6| Witness { check: name, graph6 }));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiTuple {
    pub m: usize,
    pub delta_lo: usize,
    pub delta_hi: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub max_s: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub opt: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub theorem1: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PiCrossReport {
    pub n: usize,
    pub graphs: u64,
    pub tuples: Vec<PiTuple>,
    pub violations: usize,
}

#[derive(Default)]
struct TupleChunk {
    graphs: u64,
    max_s: HashMap<(usize, usize, usize), Rational>,
}

/// For every `(m, δ, Δ)` realized by a labeled graph on `n` vertices with
/// `δ < d < Δ`, checks `max s(G) ≤ OPT ≤ 2n(Δ−d)(d−δ)/(Δ−δ)` exactly.
pub fn pi_cross_check(n: usize, jobs: usize) -> Result<PiCrossReport, VerifyError> {
    if n == 0 || n > 7 {
        return Err(VerifyError::CrossCheckOrder(n));
    }
    let source = CorpusSource::AllLabeled { min_n: n, max_n: n };
    let (chunks, _) = map_corpus(&source, jobs, |g, acc: &mut TupleChunk| {
        acc.graphs += 1;
        let st = degree_stats(g);
        if st.s.is_zero() {
            return;
        }
        let entry = acc.max_s.entry((st.m, st.delta_min, st.delta_max)).or_insert(st.s);
        if st.s > *entry {
            *entry = st.s;
        }
    })?;
    let mut graphs = 0;
    let mut max_s: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
    for chunk in chunks {
        graphs += chunk.graphs;
        for (key, s) in chunk.max_s {
            let e = max_s.entry(key).or_insert(s);
            if s > *e {
                *e = s;
            }
        }
    }
    let tuples: Vec<PiTuple> = max_s
        .into_iter()
        .map(|((m, lo, hi), s)| {
            let inst = PiInstance::new(n, m, lo, hi).expect("s > 0 forces delta < d < Delta");
            let opt = solve_pi(&inst).opt;
            let theorem1 = inst.theorem1_value();
            PiTuple {
                m,
                delta_lo: lo,
                delta_hi: hi,
                max_s: s,
                opt,
                theorem1,
                holds: s <= opt && opt <= theorem1,
            }
        })
        .collect();
    Ok(PiCrossReport {
        n,
        graphs,
        violations: tuples.iter().filter(|t| !t.holds).count(),
        tuples,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HuntWitness {
    pub graph6: String,
    pub n: usize,
    pub bipartite: bool,
    pub regular: bool,
}

/// Checks that compare against a bound (identities excluded).
pub fn huntable_checks() -> impl Iterator<Item = &'static str> {
    CHECK_NAMES[9..].iter().copied()
}

/// All graphs of the corpus attaining equality in `check` while its
/// hypotheses hold, in corpus order.
pub fn equality_hunt(check: &str, source: &CorpusSource, jobs: usize) -> Result<Vec<HuntWitness>, VerifyError> {
    let Some(name) = huntable_checks().find(|c| *c == check) else {
        return Err(VerifyError::UnknownCheck(check.to_string()));
    };
    let degree_only = matches!(name, "haviland" | "ali" | "theorem1" | "theorem2");
    let (chunks, _) = map_corpus(source, jobs, |g, acc: &mut Vec<HuntWitness>| {
        let (hit, regular) = if degree_only {
            let st = degree_stats(g);
            let checks = deviation_checks(&st);
            let c = checks.iter().find(|c| c.name == name).expect("listed");
            (c.status == CheckStatus::Applicable && c.equality, st.is_regular())
        } else {
            let report = check_graph(g);
            let c = report.check(name).expect("listed");
            (c.status == CheckStatus::Applicable && c.equality, report.stats.is_regular())
        };
        if hit {
            acc.push(HuntWitness {
                graph6: emit_graph6(g),
                n: g.n(),
                bipartite: g.is_bipartite(),
                regular,
            });
        }
    })?;
    Ok(chunks.into_iter().flatten().collect())
}
