//! The `quadsys` command line: verify / construct / bounds / search / report.
//!
//! Everything is reachable through [`run_from`], which returns the text the
//! binary would print together with its exit code (0 pass, 1 a claim failed,
//! 2 usage or parse error).

mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{self, BoundError, BoundReport};
use crate::constructions::{self as cons, Certificate, Construction, ConstructionError};
use crate::hypercore::format::{self, ParseError};
use crate::hypercore::Hypergraph;
use crate::patterns::{is_acyclic, Forbidden, PatternError, PatternName};
use crate::search::{self, Budget, SearchError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Inclusive integer ranges: `7`, `4..13`, or a list such as `7,16,40`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range(pub Vec<usize>);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let mut out = Vec::new();
        for part in s.split(',') {
            if let Some((a, b)) = part.split_once("..") {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {part}"));
                }
                out.extend(a..=b);
            } else {
                out.push(num(part)?);
            }
        }
        Ok(Range(out))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Parser)]
#[command(name = "quadsys", version, about = "Linear quadruple systems: constructions, forbidden patterns, bounds and exact search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Vertex count (a value, a range `a..b`, or a list `a,b,c`)
    #[arg(short = 'n', global = true)]
    pub n: Option<Range>,
    /// Pattern size parameter
    #[arg(short = 'k', global = true)]
    pub k: Option<Range>,
    /// Packing order
    #[arg(short = 'm', global = true)]
    pub m: Option<Range>,
    /// Forbidden pattern: P<k>, S<k>, S3plus, E4plus, M<k> or T:<edge.slot,...>
    #[arg(short = 'F', global = true)]
    pub forbid: Vec<String>,
    /// Output file for the generated hypergraph or search witness
    #[arg(short = 'o', global = true)]
    pub output: Option<PathBuf>,
    /// Seed for backtracking tie-breaks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node budget for exact searches
    #[arg(long, global = true, env = "QUADSYS_BUDGET_NODES", default_value_t = Budget::DEFAULT_NODES)]
    pub budget_nodes: u64,
    /// Time budget for exact searches, in seconds (0 = none)
    #[arg(long, global = true, env = "QUADSYS_BUDGET_SECS", default_value_t = Budget::DEFAULT_SECS)]
    pub budget_secs: u64,
    /// Worker threads for independent instances
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Options {
    fn budget(&self) -> Budget {
        Budget::new(self.budget_nodes, (self.budget_secs > 0).then_some(self.budget_secs))
    }

    fn family(&self) -> Result<Vec<Forbidden>, CliError> {
        self.forbid.iter().map(|s| parse_pattern(s)).collect()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check properties of a hypergraph file
    Verify {
        file: PathBuf,
        /// linear, steiner, regular[:d], acyclic, edges:<m>, free:<pattern>
        properties: Vec<String>,
    },
    /// Build a named construction: s13, s16, s25, s28, sts9, prop2, p3, th11, e4plus, g, packing
    Construct { name: String },
    /// Evaluate a bound: prop1, prop2, p3, th11, th12, th13, g, packing, epsilon
    Bounds { quantity: String },
    /// Exact search
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Run the checks behind one result: prop1 prop2 prop3 th11 th12 th13 th14 lem41 lem42
    Report { id: String },
}

#[derive(Debug, Subcommand)]
pub enum SearchKind {
    /// ex(n, F) over linear quadruple systems
    Ex,
    /// D1(m, 4, 2)
    Packing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported, never affects the exit code.
    Info,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }

    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Finding {
    pub claim: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<PathBuf>,
}

impl Finding {
    pub fn new(claim: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Finding {
            claim: claim.into(),
            status: Status::of(ok),
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn info(claim: impl Into<String>, detail: impl Into<String>) -> Self {
        Finding {
            claim: claim.into(),
            status: Status::Info,
            detail: detail.into(),
            witness: None,
        }
    }
}

/// Everything one invocation produced.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub subcommand: String,
    pub parameters: Vec<(String, String)>,
    pub findings: Vec<Finding>,
    /// Free-form text sections (bound tables, search summaries).
    pub sections: Vec<String>,
    /// Extra `key=value` lines for machine-readable output.
    pub kv: Vec<String>,
}

impl RunReport {
    fn new(subcommand: impl Into<String>) -> Self {
        RunReport {
            subcommand: subcommand.into(),
            ..Default::default()
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.push((key.to_string(), value.to_string()));
    }

    fn certificate(&mut self, prefix: &str, cert: &Certificate) {
        for c in &cert.claims {
            self.findings
                .push(Finding::new(format!("{prefix}{}", c.property), c.passed, c.detail.clone()));
        }
    }

    pub fn passed(&self) -> bool {
        self.findings.iter().all(|f| f.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn render(&self, fmt: Format) -> String {
        let mut out = String::new();
        match fmt {
            Format::Text => {
                let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "{} {}", self.subcommand, params.join(" "));
                for s in &self.sections {
                    out.push_str(s);
                    if !s.ends_with('\n') {
                        out.push('\n');
                    }
                }
                let width = self.findings.iter().map(|f| f.claim.len()).max().unwrap_or(0);
                for f in &self.findings {
                    let tag = match f.status {
                        Status::Pass => "pass",
                        Status::Fail => "FAIL",
                        Status::Info => "info",
                    };
                    let _ = write!(out, "[{tag}] {:width$}  {}", f.claim, f.detail);
                    if let Some(w) = &f.witness {
                        let _ = write!(out, " (witness {})", w.display());
                    }
                    out.push('\n');
                }
                let failed = self.findings.iter().filter(|f| f.status == Status::Fail).count();
                let _ = writeln!(
                    out,
                    "{} findings, {failed} failed, exit {}",
                    self.findings.len(),
                    self.exit_code()
                );
            }
            Format::Kv => {
                let _ = writeln!(out, "subcommand={}", self.subcommand);
                for (k, v) in &self.parameters {
                    let _ = writeln!(out, "param.{k}={v}");
                }
                for l in &self.kv {
                    let _ = writeln!(out, "{l}");
                }
                for (i, f) in self.findings.iter().enumerate() {
                    let _ = writeln!(out, "finding.{i}.claim={}", f.claim);
                    let _ = writeln!(out, "finding.{i}.status={}", f.status.as_str());
                    let _ = writeln!(out, "finding.{i}.detail={}", f.detail);
                    if let Some(w) = &f.witness {
                        let _ = writeln!(out, "finding.{i}.witness={}", w.display());
                    }
                }
                let _ = writeln!(out, "exit_code={}", self.exit_code());
            }
        }
        out
    }
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_PASS,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    match run(&cli) {
        Ok(report) => Outcome {
            stdout: report.render(cli.opts.format),
            stderr: String::new(),
            code: report.exit_code(),
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        },
    }
}

pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let opts = &cli.opts;
    if opts.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::Verify { file, properties } => verify(file, properties, opts),
        Command::Construct { name } => construct(name, opts),
        Command::Bounds { quantity } => bounds_cmd(quantity, opts),
        Command::Search { kind } => search_cmd(kind, opts),
        Command::Report { id } => report::run(id, opts),
    }
}

/// Pattern names are always read as 4-uniform.
pub fn parse_pattern(s: &str) -> Result<Forbidden, CliError> {
    let name: PatternName = s.parse()?;
    Ok(Forbidden::from_name(&name, 4)?)
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    format::parse(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn write_hypergraph(path: &Path, h: &Hypergraph) -> Result<(), CliError> {
    std::fs::write(path, format::serialize(h)).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Runs `f` over `items` on `jobs` threads; results keep the input order.
pub(crate) fn par_map<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    if jobs <= 1 {
        return items.into_iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.into_par_iter().map(&f).collect()),
        Err(_) => items.into_iter().map(f).collect(),
    }
}

fn single(r: &Option<Range>, flag: &str) -> Result<usize, CliError> {
    match r {
        Some(Range(v)) if v.len() == 1 => Ok(v[0]),
        Some(_) => Err(CliError::Usage(format!("-{flag} takes a single value here"))),
        None => Err(CliError::Usage(format!("-{flag} is required"))),
    }
}

fn values(r: &Option<Range>, flag: &str) -> Result<Vec<usize>, CliError> {
    match r {
        Some(Range(v)) => Ok(v.clone()),
        None => Err(CliError::Usage(format!("-{flag} is required"))),
    }
}

fn verify(file: &Path, properties: &[String], opts: &Options) -> Result<RunReport, CliError> {
    let h = read_hypergraph(file)?;
    let mut rep = RunReport::new("verify");
    rep.param("file", file.display());
    rep.param("r", h.uniformity());
    rep.param("n", h.vertex_count());
    rep.param("edges", h.edge_count());
    let mut props: Vec<String> = properties.to_vec();
    props.extend(opts.forbid.iter().map(|f| format!("free:{f}")));
    if props.is_empty() {
        props.push("linear".into());
    }
    for p in &props {
        rep.findings.push(check_property(&h, p)?);
    }
    Ok(rep)
}

fn check_property(h: &Hypergraph, prop: &str) -> Result<Finding, CliError> {
    let (name, arg) = match prop.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (prop, None),
    };
    let num = |a: Option<&str>| -> Result<Option<usize>, CliError> {
        a.map(|s| {
            s.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad number in property `{prop}`")))
        })
        .transpose()
    };
    Ok(match name {
        "linear" => match h.pair_coverage() {
            Ok(_) => Finding::new("linear", true, "no pair lies in two edges"),
            Err(e) => Finding::new("linear", false, e.to_string()),
        },
        "steiner" => {
            let ok = h.pair_coverage().map(|pc| pc.is_complete()).unwrap_or(false);
            let missing = h.pair_coverage().map(|pc| pc.uncovered_pairs().count());
            let detail = match missing {
                Ok(0) => "every pair covered exactly once".to_string(),
                Ok(k) => format!("{k} pairs uncovered"),
                Err(e) => e.to_string(),
            };
            Finding::new("steiner", ok, detail)
        }
        "regular" => {
            let d = h.regular_degree();
            let ok = match num(arg)? {
                Some(want) => d == Some(want),
                None => d.is_some(),
            };
            let mut seq = h.degree_sequence();
            seq.dedup();
            Finding::new(prop, ok, format!("degrees {seq:?}"))
        }
        "acyclic" => match is_acyclic(h) {
            Ok(a) if a.acyclic => Finding::new("acyclic", a.verify(h), format!("removal order {:?}", a.order)),
            Ok(_) => Finding::new("acyclic", false, "peeling gets stuck"),
            Err(e) => Finding::new("acyclic", false, e.to_string()),
        },
        "edges" => {
            let want = num(arg)?.ok_or_else(|| CliError::Usage("edges:<count> needs a count".into()))?;
            Finding::new(prop, h.edge_count() == want, format!("{} edges", h.edge_count()))
        }
        "free" => {
            let pat = arg.ok_or_else(|| CliError::Usage("free:<pattern> needs a pattern".into()))?;
            let f = parse_pattern(pat)?;
            if f.uniformity() != h.uniformity() {
                return Err(CliError::Usage(format!(
                    "pattern {pat} is {}-uniform, the file is {}-uniform",
                    f.uniformity(),
                    h.uniformity()
                )));
            }
            match f.find_in(h) {
                None => Finding::new(format!("free:{f}"), true, "no copy found by exhaustive search"),
                Some(emb) => Finding::new(
                    format!("free:{f}"),
                    false,
                    format!("copy on host edges {:?}", emb.edge_map),
                ),
            }
        }
        _ => return Err(CliError::Usage(format!("unknown property `{prop}`"))),
    })
}

fn construction_for(name: &str, opts: &Options) -> Result<(Construction, Vec<String>), CliError> {
    let n = || single(&opts.n, "n");
    let k = || single(&opts.k, "k");
    Ok(match name {
        "s13" | "steiner13" => (cons::steiner_2_4_13(), vec![]),
        "s16" | "steiner16" => (cons::steiner_2_4_16(), vec![]),
        "s25" | "steiner25" => (cons::steiner_2_4_25(), vec![]),
        "s28" | "steiner28" => (cons::steiner_2_4_28(), vec![]),
        "sts9" => {
            let t = cons::sts9_resolvable();
            let mut c = Construction::new("STS(9) grid", t.base.clone());
            c.certificate = t.certify();
            (c, vec![])
        }
        "prop2" => (cons::prop2_construction(n()?, k()?)?, vec![]),
        "p3" => (cons::p3_lower_construction(n()?)?, vec![]),
        "th11" => (cons::th11_lower_construction(n()?)?, vec![]),
        "e4plus" | "th12" => {
            let e = cons::e4plus_lower_construction(n()?)?;
            let kv = vec![
                format!("copies={}", e.copies),
                format!("base_edges={}", e.base_edges),
                format!("augmented={}", e.augmented),
                format!("epsilon={}", e.epsilon),
                format!("augment_nodes={}", e.augment_nodes),
            ];
            (e.construction, kv)
        }
        "g" | "th14" => {
            let g = cons::g_lower_construction(n()?, k()?, opts.seed)?;
            let kv = vec![
                format!("fixed_set={:?}", g.fixed_set),
                format!("inside_edges={}", g.inside),
                format!("classes_complete={}", g.classes_complete),
            ];
            (g.construction, kv)
        }
        "packing" => {
            let m = single(&opts.m, "m")?;
            (cons::packing_optimal_small(m)?, vec![])
        }
        _ => return Err(CliError::Usage(format!("unknown construction `{name}`"))),
    })
}

fn construct(name: &str, opts: &Options) -> Result<RunReport, CliError> {
    let (c, kv) = construction_for(name, opts)?;
    let h = &c.hypergraph;
    let mut rep = RunReport::new("construct");
    rep.param("name", name);
    if let Some(Range(n)) = &opts.n {
        rep.param("n", n[0]);
    }
    if let Some(Range(k)) = &opts.k {
        rep.param("k", k[0]);
    }
    if let Some(Range(m)) = &opts.m {
        rep.param("m", m[0]);
    }
    rep.param("seed", opts.seed);
    rep.kv.push(format!("construction={}", c.name));
    rep.kv.push(format!("r={}", h.uniformity()));
    rep.kv.push(format!("vertices={}", h.vertex_count()));
    rep.kv.push(format!("edges={}", h.edge_count()));
    rep.kv.extend(kv.iter().cloned());
    let mut text = format!(
        "{}: {} vertices, {} edges\n",
        c.name,
        h.vertex_count(),
        h.edge_count()
    );
    for l in &kv {
        let _ = writeln!(text, "  {}", l.replacen('=', " ", 1));
    }
    rep.certificate("", &c.certificate);
    for f in &c.findings {
        rep.findings.push(Finding::info("finding", f.clone()));
    }
    match &opts.output {
        Some(path) => {
            write_hypergraph(path, h)?;
            for f in &mut rep.findings {
                f.witness = Some(path.clone());
            }
            rep.kv.push(format!("output={}", path.display()));
        }
        None if opts.format == Format::Text => text.push_str(&format::serialize(h)),
        None => {}
    }
    rep.sections.push(text);
    Ok(rep)
}

fn bound_reports(quantity: &str, opts: &Options) -> Result<Vec<BoundReport>, CliError> {
    let ns = || values(&opts.n, "n");
    let ks = || values(&opts.k, "k");
    let mut out = Vec::new();
    let pairs = |ns: Vec<usize>, ks: Vec<usize>| {
        ns.into_iter()
            .flat_map(move |n| ks.clone().into_iter().map(move |k| (n as i64, k as i64)))
            .collect::<Vec<_>>()
    };
    match quantity {
        "prop1" => {
            for (n, k) in pairs(ns()?, ks()?) {
                let u = bounds::Rational::from_integer(bounds::prop1_upper(n, k)?);
                let mut r = BoundReport::new(format!("ex({n}, T_{k})"), 0.into(), u);
                r.sources.push("upper: (3k-5)n for every linear tree with k edges".into());
                out.push(r);
            }
        }
        "prop2" => {
            for (n, k) in pairs(ns()?, ks()?) {
                let (lower, applicable) = bounds::prop2_lower(n, k);
                let upper = bounds::Rational::from_integer(bounds::prop1_upper(n, k)?);
                let mut r = BoundReport::new(format!("ex({n}, S{k})"), lower, upper);
                r.lower_valid = applicable;
                r.sources.push(format!("lower: disjoint copies of S(2,4,{})", 3 * k - 2));
                r.sources.push("upper: (3k-5)n".into());
                if !applicable {
                    r.notes.push("needs 3k-2 = 1 or 4 mod 12 and (3k-2) | n".into());
                }
                out.push(r);
            }
        }
        "p3" | "prop3" => {
            for n in ns()? {
                out.push(bounds::p3_bound(n as i64)?);
            }
        }
        "th11" => {
            for n in ns()? {
                out.push(bounds::th11_bound(n as i64)?);
            }
        }
        "th12" | "e4plus" => {
            for n in ns()? {
                out.push(bounds::th12_bound(n as i64)?);
            }
        }
        "th13" | "path" => {
            for (n, k) in pairs(ns()?, ks()?) {
                out.push(bounds::path_bound(n, k)?);
            }
        }
        "g" | "th14" => {
            for (n, k) in pairs(ns()?, ks()?) {
                out.push(bounds::g_bounds(n, k)?);
            }
        }
        "packing" | "lem42" => {
            for m in values(&opts.m, "m")? {
                out.push(bounds::packing_number(m as i64)?);
            }
        }
        "epsilon" => {
            for n in ns()? {
                let e = bounds::epsilon(n as i64)?;
                let mut r = BoundReport::new(format!("epsilon({n})"), e.into(), e.into());
                r.exact = Some(e);
                r.sources.push("residue of n-4 modulo 9".into());
                out.push(r);
            }
        }
        _ => return Err(CliError::Usage(format!("unknown quantity `{quantity}`"))),
    }
    Ok(out)
}

fn bounds_cmd(quantity: &str, opts: &Options) -> Result<RunReport, CliError> {
    let reports = bound_reports(quantity, opts)?;
    let mut rep = RunReport::new("bounds");
    rep.param("quantity", quantity);
    for (i, r) in reports.iter().enumerate() {
        rep.sections.push(r.to_string());
        rep.kv.extend(r.kv_lines().into_iter().map(|l| format!("bound.{i}.{l}")));
        rep.findings.push(Finding::new(
            format!("{} consistent", r.quantity),
            r.is_consistent(),
            format!(
                "lower {} <= upper {}",
                bounds::fmt_rational(r.lower),
                bounds::fmt_rational(r.upper)
            ),
        ));
    }
    Ok(rep)
}

fn witness_path(base: &Path, suffix: usize, many: bool) -> PathBuf {
    if many {
        let mut s = base.as_os_str().to_owned();
        s.push(format!(".{suffix}"));
        PathBuf::from(s)
    } else {
        base.to_path_buf()
    }
}

fn search_cmd(kind: &SearchKind, opts: &Options) -> Result<RunReport, CliError> {
    let budget = opts.budget();
    let (sub, sizes, family) = match kind {
        SearchKind::Ex => {
            let family = opts.family()?;
            if family.is_empty() {
                return Err(CliError::Usage("search ex needs at least one -F pattern".into()));
            }
            ("search ex", values(&opts.n, "n")?, family)
        }
        SearchKind::Packing => ("search packing", values(&opts.m, "m")?, Vec::new()),
    };
    let results = par_map(opts.jobs, sizes.clone(), |n| {
        if family.is_empty() {
            search::exact_packing(n, budget)
        } else {
            search::exact_ex(n, &family, budget)
        }
    });
    let mut rep = RunReport::new(sub);
    if !family.is_empty() {
        let names: Vec<String> = family.iter().map(|f| f.to_string()).collect();
        rep.param("F", names.join(","));
    }
    rep.param("budget_nodes", opts.budget_nodes);
    let many = sizes.len() > 1;
    for (i, r) in results.into_iter().enumerate() {
        let r = r?;
        rep.sections.push(r.to_string());
        rep.kv.extend(r.kv_lines().into_iter().map(|l| format!("result.{i}.{l}")));
        let mut f = Finding::new(
            format!("{} witness", r.quantity),
            r.verify(&family),
            format!("{} edges, linear and free of the family", r.witness.edge_count()),
        );
        if let Some(base) = &opts.output {
            let path = witness_path(base, r.n, many);
            write_hypergraph(&path, &r.witness)?;
            f.witness = Some(path);
        }
        rep.findings.push(f);
        if !r.completed {
            rep.findings.push(Finding::info(
                format!("{} completed", r.quantity),
                format!("budget exhausted after {} nodes; value is a lower bound", r.nodes),
            ));
        }
    }
    Ok(rep)
}
