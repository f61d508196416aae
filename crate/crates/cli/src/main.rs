use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sdlab_core::bounds::{figure1_series, figure2_series, theorem3_bound};
use sdlab_core::family::{make_family, Family};
use sdlab_core::optimization::{
    minimize_q, pi_tightness_candidates, solve_pi, AppendixQuantities, PiInstance, QParams, QRegion,
};
use sdlab_core::optimization::q::DEFAULT_GRID;
use sdlab_core::report::fmt_float;
use sdlab_core::verify::{
    check_graph, csv_rows, equality_hunt, huntable_checks, parse_corpus, pi_cross_check, verify_corpus, CorpusSource,
    GraphReport, VerifyOptions, CSV_HEADER, DEFAULT_FINDING_CAP,
};
use sdlab_core::{emit_graph6, parse_graph6, Graph};

#[derive(Parser)]
#[command(name = "sdlab", version, about = "Degree deviation and spectral radius bounds for graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; defaults to text (csv for the figure commands).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Degree statistics, spectral radii and every bound for one graph.
    Analyze(GraphInput),
    /// Solve the split linear programs bounding s for (n, m, δ, Δ).
    OptPi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Lower degree bound δ.
        #[arg(long = "delta")]
        delta_lo: usize,
        /// Upper degree bound Δ.
        #[arg(long = "Delta")]
        delta_hi: usize,
    },
    /// Minimize the relaxed smoothed spectral radius for (n, d, s).
    OptQ {
        #[arg(long)]
        n: f64,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        /// Also impose crossing weight at most 1.
        #[arg(long)]
        weight_capped: bool,
    },
    /// Check every identity and bound over a corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, env = "SDLAB_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Findings kept per list.
        #[arg(long, default_value_t = DEFAULT_FINDING_CAP)]
        cap: usize,
        /// Also compare the linear-program optimum with the largest s per
        /// (m, δ, Δ) for every order in the labeled range (n ≤ 7).
        #[arg(long)]
        lp_sandwich: bool,
    },
    /// Build a member of one of the extremal families.
    Extremal {
        /// union-clique, join-clique, semiregular-bipartite, complete,
        /// empty, star, path or cycle.
        #[arg(long)]
        family: String,
        /// Comma-separated parameters.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
    },
    /// Ratio of the bound 2n(Δ−d)(d−δ)/(Δ−δ) to the Ali et al. bound over (δ, Δ).
    Figure1 {
        #[arg(long = "delta", default_value_t = 1.0)]
        delta_lo: f64,
        #[arg(long = "Delta", default_value_t = 10.0)]
        delta_hi: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// h₁/n² and s₁/n² for d/n in (0.5, 0.8].
    Figure2 {
        #[arg(long, default_value_t = 300)]
        points: usize,
    },
    /// List the graphs of a corpus attaining equality in one bound.
    Hunt {
        #[arg(long)]
        check: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, env = "SDLAB_JOBS", default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// The graph in graph6.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one edge "u v" per line.
    #[arg(long)]
    edge_list: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CorpusArgs {
    /// All labeled graphs with at most this many vertices.
    #[arg(long)]
    all_labeled: Option<usize>,
    /// graph6 file, one graph per line.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// What a command produced and whether it found a violation.
struct Output {
    body: String,
    violation: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, violation: false }
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(input: &GraphInput) -> Result<Graph, CliError> {
    if let Some(text) = &input.graph6 {
        return parse_graph6(text.trim().as_bytes())
            .map_err(|e| CliError::Input(format!("malformed graph6 at byte offset {}: {e}", e.offset())));
    }
    let path = input.edge_list.as_ref().expect("clap group");
    Graph::parse_edge_list(&read_file(path)?, None).map_err(input_err)
}

fn corpus(args: &CorpusArgs) -> Result<CorpusSource, CliError> {
    if let Some(n) = args.all_labeled {
        return Ok(CorpusSource::AllLabeled { min_n: 1, max_n: n });
    }
    let path = args.input.as_ref().expect("clap group");
    Ok(CorpusSource::Graph6 {
        name: path.display().to_string(),
        text: read_file(path)?,
    })
}

fn analyze_text(r: &GraphReport) -> String {
    let st = &r.stats;
    let mut out = String::new();
    let _ = writeln!(out, "graph6 = {}", r.graph_id);
    let _ = writeln!(out, "n = {}\nm = {}\nd = {}\ns = {}", st.n, st.m, st.d, st.s);
    let _ = writeln!(out, "delta = {}\nDelta = {}\npsi = {}", st.delta_min, st.delta_max, st.psi);
    let _ = writeln!(out, "lambda = {}", fmt_float(r.lambda));
    let _ = writeln!(out, "lambda_tilde = {}", fmt_float(r.lambda_tilde));
    let _ = writeln!(out, "residual = {}", fmt_float(r.residual));
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<28} {:<18} {:>24} {:>24} {:>9} {:>8}", "check", "status", "quantity", "bound", "holds", "equal");
    for c in &r.checks {
        let status = serde_json::to_value(c.status).expect("enum");
        let _ = writeln!(
            out,
            "{:<28} {:<18} {:>24} {:>24} {:>9} {:>8}",
            c.name,
            status.as_str().unwrap_or_default(),
            fmt_float(c.quantity),
            fmt_float(c.bound),
            c.satisfied,
            c.equality
        );
    }
    out
}

fn analyze(input: &GraphInput, format: Format) -> Result<Output, CliError> {
    let g = load_graph(input)?;
    let report = check_graph(&g);
    let violation = report.violations().next().is_some();
    let body = match format {
        Format::Json => pretty(json!(report)),
        Format::Csv => std::iter::once(CSV_HEADER.to_string()).chain(csv_rows(&report)).map(|l| l + "\n").collect(),
        Format::Text => analyze_text(&report),
    };
    Ok(Output { body, violation })
}

fn opt_pi(n: usize, m: usize, lo: usize, hi: usize, format: Format) -> Result<Output, CliError> {
    let inst = PiInstance::new(n, m, lo, hi).map_err(input_err)?;
    let result = solve_pi(&inst);
    let theorem1 = inst.theorem1_value();
    let body = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&result).expect("serializable");
            let obj = v.as_object_mut().expect("object");
            obj.insert("instance".into(), json!(inst));
            obj.insert("d".into(), json!(inst.d().to_string()));
            obj.insert("theorem1".into(), json!(theorem1.to_string()));
            obj.insert("candidates".into(), json!(pi_tightness_candidates(&inst)));
            pretty(v)
        }
        Format::Csv | Format::Text => {
            let mut out = String::new();
            if format == Format::Text {
                let _ = writeln!(out, "n = {n}, m = {m}, delta = {lo}, Delta = {hi}, d = {}", inst.d());
                let _ = writeln!(out, "opt = {} at n+ = {}", result.opt, result.argmax.n_plus);
                let _ = writeln!(out, "theorem1 = {theorem1}");
            }
            let _ = writeln!(out, "n_plus,n_minus,objective,w_plus,w_minus,w_cross,d_plus,d_minus");
            for sol in &result.per_n_plus {
                match &sol.point {
                    Some(p) => {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{},{},{},{}",
                            sol.n_plus, sol.n_minus, p.objective, p.w_plus, p.w_minus, p.w_cross, p.d_plus, p.d_minus
                        );
                    }
                    None => {
                        let _ = writeln!(out, "{},{},infeasible,,,,,", sol.n_plus, sol.n_minus);
                    }
                }
            }
            out
        }
    };
    Ok(Output::ok(body))
}

fn opt_q(n: f64, d: f64, s: f64, grid: usize, capped: bool, format: Format) -> Result<Output, CliError> {
    let params = QParams::new(n, d, s).map_err(input_err)?;
    let region = if capped { QRegion::WeightCapped } else { QRegion::Relaxed };
    let min = minimize_q(&params, grid, region).map_err(input_err)?;
    let bound = theorem3_bound(n, d, s);
    let appendix = AppendixQuantities::new(n, d, s);
    let body = match format {
        Format::Json => pretty(json!({
            "params": params,
            "region": region,
            "minimum": min,
            "theorem3": bound,
            "appendix": appendix,
        })),
        Format::Csv => format!(
            "n,d,s,min,n_plus,x_plus,theorem3\n{},{},{},{},{},{},{}\n",
            fmt_float(n),
            fmt_float(d),
            fmt_float(s),
            fmt_float(min.value),
            fmt_float(min.argmin.n_plus),
            fmt_float(min.argmin.x_plus),
            fmt_float(bound.value)
        ),
        Format::Text => {
            let p = &min.argmin;
            format!(
                "min f = {}\nat n+ = {}, x+ = {}, x- = {}, w_cross = {}\ntheorem3 = {}\nevaluations = {}\n",
                fmt_float(min.value),
                fmt_float(p.n_plus),
                fmt_float(p.x_plus),
                fmt_float(p.x_minus),
                fmt_float(p.w_cross),
                fmt_float(bound.value),
                min.evaluations
            )
        }
    };
    Ok(Output::ok(body))
}

fn verify(args: &CorpusArgs, jobs: usize, cap: usize, lp: bool, format: Format) -> Result<Output, CliError> {
    let source = corpus(args)?;
    let options = VerifyOptions {
        jobs,
        finding_cap: cap,
        csv: format == Format::Csv,
    };
    let report = verify_corpus(&source, options).map_err(input_err)?;
    let mut lp_reports = Vec::new();
    if lp {
        let Some(max_n) = args.all_labeled else {
            return Err(CliError::Input("--lp-sandwich needs --all-labeled".into()));
        };
        for n in 1..=max_n {
            lp_reports.push(pi_cross_check(n, jobs).map_err(input_err)?);
        }
    }
    let lp_violations: usize = lp_reports.iter().map(|r| r.violations).sum();
    let violation = !report.passed() || lp_violations > 0;
    let body = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serializable");
            if lp {
                v.as_object_mut().expect("object").insert("lpSandwich".into(), json!(lp_reports));
            }
            pretty(v)
        }
        Format::Csv => std::iter::once(CSV_HEADER.to_string()).chain(report.csv_rows.iter().cloned()).map(|l| l + "\n").collect(),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "source: {}", report.params.source);
            let _ = writeln!(out, "graphs: {}", report.graphs);
            let _ = writeln!(out, "malformed lines: {}", report.malformed.len());
            for m in &report.malformed {
                let _ = writeln!(out, "  line {} offset {}: {}", m.line, m.offset, m.message);
            }
            let _ = writeln!(
                out,
                "{:<28} {:>10} {:>10} {:>10} {:>10} {:>10}",
                "check", "applicable", "violations", "equalities", "outside", "out-fail"
            );
            for (name, c) in &report.counts {
                let _ = writeln!(
                    out,
                    "{:<28} {:>10} {:>10} {:>10} {:>10} {:>10}",
                    name, c.applicable, c.violations, c.equalities, c.outside_hypothesis, c.outside_hypothesis_failures
                );
            }
            for f in &report.violations {
                let _ = writeln!(out, "VIOLATION {} {}: quantity {} bound {}", f.check, f.graph6, fmt_float(f.quantity), fmt_float(f.bound));
            }
            for r in &lp_reports {
                let _ = writeln!(out, "lp sandwich n = {}: {} tuples, {} violations", r.n, r.tuples.len(), r.violations);
            }
            let _ = writeln!(out, "{}", if violation { "FAIL" } else { "PASS" });
            out
        }
    };
    Ok(Output { body, violation })
}

fn extremal(family: &str, params: &[usize], format: Format) -> Result<Output, CliError> {
    let family: Family = family.parse().map_err(input_err)?;
    let g = make_family(family, params).map_err(input_err)?;
    let body = match format {
        Format::Text => format!("{}\n", emit_graph6(&g)),
        Format::Csv => std::iter::once("u,v".to_string())
            .chain(g.edges().map(|(u, v)| format!("{u},{v}")))
            .map(|l| l + "\n")
            .collect(),
        Format::Json => {
            let report = check_graph(&g);
            pretty(json!({
                "family": family.name(),
                "params": params,
                "graph6": report.graph_id,
                "stats": report.stats,
                "lambda": report.lambda,
                "checks": report.checks,
            }))
        }
    };
    Ok(Output::ok(body))
}

fn figure1(lo: f64, hi: f64, points: usize, format: Format) -> Result<Output, CliError> {
    let data = figure1_series(lo, hi, points).map_err(input_err)?;
    let body = match format {
        Format::Json => pretty(data.iter().map(|&(x, g)| json!({"x": x, "g": g})).collect()),
        Format::Csv | Format::Text => std::iter::once("x,g".to_string())
            .chain(data.iter().map(|&(x, g)| format!("{},{}", fmt_float(x), fmt_float(g))))
            .map(|l| l + "\n")
            .collect(),
    };
    Ok(Output::ok(body))
}

fn figure2(points: usize, format: Format) -> Result<Output, CliError> {
    let data = figure2_series(points);
    let body = match format {
        Format::Json => pretty(
            data.iter()
                .map(|&(x, h1, s1)| json!({"dOverN": x, "h1": h1, "s1": s1}))
                .collect(),
        ),
        Format::Csv | Format::Text => std::iter::once("d_over_n,h1_over_n2,s1_over_n2".to_string())
            .chain(data.iter().map(|&(x, h1, s1)| format!("{},{},{}", fmt_float(x), fmt_float(h1), fmt_float(s1))))
            .map(|l| l + "\n")
            .collect(),
    };
    Ok(Output::ok(body))
}

fn hunt(check: &str, args: &CorpusArgs, jobs: usize, format: Format) -> Result<Output, CliError> {
    if !huntable_checks().any(|c| c == check) {
        let names: Vec<_> = huntable_checks().collect();
        return Err(CliError::Input(format!("unknown check {check:?}; expected one of {}", names.join(", "))));
    }
    let source = corpus(args)?;
    if let CorpusSource::Graph6 { text, .. } = &source {
        if let Some(m) = parse_corpus(text).1.first() {
            eprintln!("warning: skipping malformed line {} (offset {}): {}", m.line, m.offset, m.message);
        }
    }
    let witnesses = equality_hunt(check, &source, jobs).map_err(input_err)?;
    let body = match format {
        Format::Json => pretty(json!({"check": check, "source": source.describe(), "witnesses": witnesses})),
        Format::Csv | Format::Text => std::iter::once("graph6,n,bipartite,regular".to_string())
            .chain(witnesses.iter().map(|w| format!("{},{},{},{}", w.graph6, w.n, w.bipartite, w.regular)))
            .map(|l| l + "\n")
            .collect(),
    };
    Ok(Output::ok(body))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let text = cli.format.unwrap_or(Format::Text);
    let csv = cli.format.unwrap_or(Format::Csv);
    match &cli.command {
        Command::Analyze(input) => analyze(input, text),
        Command::OptPi { n, m, delta_lo, delta_hi } => opt_pi(*n, *m, *delta_lo, *delta_hi, text),
        Command::OptQ { n, d, s, grid, weight_capped } => opt_q(*n, *d, *s, *grid, *weight_capped, text),
        Command::Verify { corpus, jobs, cap, lp_sandwich } => verify(corpus, (*jobs).max(1), *cap, *lp_sandwich, text),
        Command::Extremal { family, params } => extremal(family, params, text),
        Command::Figure1 { delta_lo, delta_hi, points } => figure1(*delta_lo, *delta_hi, *points, csv),
        Command::Figure2 { points } => figure2(*points, csv),
        Command::Hunt { check, corpus, jobs } => hunt(check, corpus, (*jobs).max(1), text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.body).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", out.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
