//! Command-line front end. Every command writes one JSON document (or CSV /
//! DOT when asked) to the supplied writer; diagnostics go to stderr.

use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::asymptotics::{
    conjecture_report, delta_estimate, n_direction_ratios, ratio_series, sigma_table, DecimalFormat, DEFAULT_DELTA_M,
};
use crate::combinatorics::{polynomial_coefficients, sigma};
use crate::cycles::{census_j2m, verify_census, VERIFY_MAX_M};
use crate::decimal::Rounding;
use crate::enumeration::{count_capped, enumerate_all, enumerate_jahangir, SpanningTree, DEFAULT_ENUMERATION_CAP};
use crate::error::Error;
use crate::graph::{build_jahangir, JahangirParams};
use crate::matrix_tree::count_spanning_trees_det;

pub const EXIT_PARAMETER: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "jahangir", version, about = "Spanning trees of Jahangir graphs J(n, m)")]
pub struct Cli {
    /// Add a `timestamp` field (seconds since the Unix epoch) to JSON output.
    #[arg(long, global = true)]
    pub timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the spanning trees of J(n, m).
    Count(CountArgs),
    /// Coefficients A(m, k) of σ(J(n, m)) as a polynomial in n.
    Coeffs(MArg),
    /// List the spanning trees of J(n, m) explicitly.
    Enumerate(EnumerateArgs),
    /// Cycle census of J(2, m).
    Cycles(CyclesArgs),
    /// Table of σ(J(n, m)) for m = 3..=m_max.
    Table(TableArgs),
    /// Ratios a(n, m) = σ(J(n, m + 1)) / σ(J(n, m)).
    Ratios(RatiosArgs),
    /// Ratios σ(J(n, m)) / σ(J(n - 1, m)) for n = 3..=n_max.
    NRatios(NRatiosArgs),
    /// Estimate of the limit of a(n, m) as m grows.
    Delta(DeltaArgs),
    /// Compare δ^(m-3) σ(J(n, 3)) with σ(J(n, m)).
    Conjecture(ConjectureArgs),
    /// Export J(n, m).
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NmArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct MArg {
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CapArgs {
    /// Maximum number of trees an enumeration may produce.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    /// Acknowledge a `--cap` above the default.
    #[arg(long)]
    pub allow_large_cap: bool,
}

impl CapArgs {
    fn resolve(&self) -> Result<u64, CliError> {
        if self.cap > DEFAULT_ENUMERATION_CAP && !self.allow_large_cap {
            return Err(CliError::Parameter(format!(
                "--cap {} exceeds the default {DEFAULT_ENUMERATION_CAP}; pass --allow-large-cap to confirm",
                self.cap
            )));
        }
        Ok(self.cap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Combinatorial,
    Kirchhoff,
    Enumerate,
    All,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub nm: NmArgs,
    #[arg(long, value_enum, default_value_t = Method::Combinatorial)]
    pub method: Method,
    /// Include the per-k counts σ_k.
    #[arg(long)]
    pub breakdown: bool,
    #[command(flatten)]
    pub cap: CapArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Spoke subsets plus one rim deletion per arc.
    Structured,
    /// Backtracking over all edges.
    Generic,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub nm: NmArgs,
    /// Stop after this many trees.
    #[arg(long)]
    pub limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
    pub format: TreeFormat,
    #[arg(long, value_enum, default_value_t = Engine::Structured)]
    pub engine: Engine,
    #[command(flatten)]
    pub cap: CapArgs,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CyclesArgs {
    #[arg(long)]
    pub m: usize,
    /// Skip the generic cycle search (otherwise run for m <= 8).
    #[arg(long)]
    pub no_verify: bool,
    /// Include every census record.
    #[arg(long)]
    pub records: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m_max: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundingArg {
    HalfEven,
    Truncate,
}

impl From<RoundingArg> for Rounding {
    fn from(r: RoundingArg) -> Self {
        match r {
            RoundingArg::HalfEven => Rounding::HalfEven,
            RoundingArg::Truncate => Rounding::Truncate,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct DecimalArgs {
    /// Fractional digits in decimal renderings.
    #[arg(long, default_value_t = 10)]
    pub precision: usize,
    #[arg(long, value_enum, default_value_t = RoundingArg::HalfEven)]
    pub rounding: RoundingArg,
    /// Render decimals with a comma separator.
    #[arg(long)]
    pub decimal_comma: bool,
}

impl DecimalArgs {
    fn format(&self) -> DecimalFormat {
        DecimalFormat {
            places: self.precision,
            rounding: self.rounding.into(),
            decimal_comma: self.decimal_comma,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RatiosArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m_max: usize,
    #[command(flatten)]
    pub decimal: DecimalArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NRatiosArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n_max: usize,
    #[command(flatten)]
    pub decimal: DecimalArgs,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct DeltaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_DELTA_M)]
    pub m_used: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub nm: NmArgs,
    #[arg(long, default_value_t = DEFAULT_DELTA_M)]
    pub m_used: usize,
    #[command(flatten)]
    pub decimal: DecimalArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub nm: NmArgs,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    pub format: GraphFormat,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parameter(String),
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("engines disagree: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parameter(_) => EXIT_PARAMETER,
            CliError::Engine(Error::CapExceeded { .. }) => EXIT_CAP,
            CliError::Engine(_) => EXIT_PARAMETER,
            CliError::Disagreement(_) => EXIT_DISAGREEMENT,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub command: &'static str,
    pub parameters: Value,
    pub result: Value,
    pub engine_versions: BTreeMap<&'static str, &'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

fn engine_versions() -> BTreeMap<&'static str, &'static str> {
    let v = env!("CARGO_PKG_VERSION");
    BTreeMap::from([("combinatorial", v), ("enumeration", v), ("kirchhoff", v), ("jahangir", v)])
}

struct Ctx<'a, W: Write> {
    out: &'a mut W,
    timestamp: bool,
}

impl<W: Write> Ctx<'_, W> {
    fn envelope(&self, command: &'static str, parameters: Value, result: Value) -> OutputEnvelope {
        OutputEnvelope {
            command,
            parameters,
            result,
            engine_versions: engine_versions(),
            timestamp: self.timestamp.then(unix_seconds),
        }
    }

    fn emit(&mut self, command: &'static str, parameters: Value, result: Value) -> Result<(), CliError> {
        let env = self.envelope(command, parameters, result);
        let text = serde_json::to_string_pretty(&env).expect("envelope serializes");
        writeln!(self.out, "{text}")?;
        Ok(())
    }
}

fn unix_seconds() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

fn params(nm: NmArgs) -> Result<JahangirParams, CliError> {
    Ok(JahangirParams::new(nm.n, nm.m)?)
}

/// Runs one parsed command, writing its payload to `out`.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    let mut ctx = Ctx {
        out,
        timestamp: cli.timestamp,
    };
    match &cli.command {
        Command::Count(a) => cmd_count(&mut ctx, a),
        Command::Coeffs(a) => cmd_coeffs(&mut ctx, a),
        Command::Enumerate(a) => cmd_enumerate(&mut ctx, a),
        Command::Cycles(a) => cmd_cycles(&mut ctx, a),
        Command::Table(a) => cmd_table(&mut ctx, a),
        Command::Ratios(a) => cmd_ratios(&mut ctx, a),
        Command::NRatios(a) => cmd_n_ratios(&mut ctx, a),
        Command::Delta(a) => cmd_delta(&mut ctx, a),
        Command::Conjecture(a) => cmd_conjecture(&mut ctx, a),
        Command::Graph(a) => cmd_graph(&mut ctx, a),
    }
}

fn cmd_count<W: Write>(ctx: &mut Ctx<'_, W>, a: &CountArgs) -> Result<(), CliError> {
    let p = params(a.nm)?;
    let cap = a.cap.resolve()?;
    let wants = |m: Method| a.method == m || a.method == Method::All;

    let mut engines: BTreeMap<&'static str, String> = BTreeMap::new();
    let breakdown = if wants(Method::Combinatorial) || a.breakdown {
        Some(sigma(p.n(), p.m())?)
    } else {
        None
    };
    if wants(Method::Combinatorial) {
        engines.insert("combinatorial", breakdown.as_ref().expect("computed above").total.to_string());
    }
    if wants(Method::Kirchhoff) {
        let g = build_jahangir(p);
        engines.insert("kirchhoff", count_spanning_trees_det(&g)?.to_string());
    }
    if wants(Method::Enumerate) {
        let g = build_jahangir(p);
        engines.insert("enumerate", count_capped(enumerate_all(&g, None), cap)?.to_string());
    }

    let values: Vec<&String> = engines.values().collect();
    let agreement = values.windows(2).all(|w| w[0] == w[1]);
    let mut result = json!({ "total": values[0], "engines": engines });
    if a.method == Method::All {
        result["agreement"] = json!(agreement);
    }
    if a.breakdown {
        let b = breakdown.expect("computed above");
        result["per_k"] = json!(b.per_k.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    let parameters = json!({ "n": p.n(), "m": p.m(), "method": a.method, "breakdown": a.breakdown, "cap": cap });
    ctx.emit("count", parameters, result)?;
    if !agreement {
        return Err(CliError::Disagreement(format!("{engines:?}")));
    }
    Ok(())
}

fn cmd_coeffs<W: Write>(ctx: &mut Ctx<'_, W>, a: &MArg) -> Result<(), CliError> {
    let coeffs = polynomial_coefficients(a.m)?;
    let result = json!({
        "coefficients": coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "degree": a.m,
    });
    ctx.emit("coeffs", json!({ "m": a.m }), result)
}

fn cmd_enumerate<W: Write>(ctx: &mut Ctx<'_, W>, a: &EnumerateArgs) -> Result<(), CliError> {
    let p = params(a.nm)?;
    let cap = a.cap.resolve()?;
    // Check the cap up front so a refused run writes nothing to stdout.
    let expected = sigma(p.n(), p.m())?.total;
    let produced = a.limit.map_or(expected.clone(), |l| expected.clone().min(l.into()));
    if produced > cap.into() {
        return Err(Error::CapExceeded { cap }.into());
    }
    let g = build_jahangir(p);
    let trees: Box<dyn Iterator<Item = SpanningTree>> = match a.engine {
        Engine::Structured => Box::new(enumerate_jahangir(p, a.limit)),
        Engine::Generic => Box::new(enumerate_all(&g, a.limit)),
    };

    match a.format {
        TreeFormat::Dot => {
            for (i, tree) in trees.enumerate() {
                let dot = g.to_dot_styled(&format!("tree_{}", i + 1), |e| (!tree.contains(e)).then_some("style=dashed"));
                ctx.out.write_all(dot.as_bytes())?;
            }
        }
        TreeFormat::Json => {
            let env = ctx.envelope(
                "enumerate",
                json!({ "n": p.n(), "m": p.m(), "limit": a.limit, "engine": a.engine, "cap": cap }),
                Value::Null,
            );
            // Streamed by hand so trees never sit in memory as a whole.
            let out = &mut *ctx.out;
            writeln!(out, "{{")?;
            writeln!(out, "  \"command\": {},", json!(env.command))?;
            writeln!(out, "  \"parameters\": {},", env.parameters)?;
            writeln!(out, "  \"result\": {{")?;
            writeln!(out, "    \"trees\": [")?;
            let mut count = 0u64;
            for tree in trees {
                if count > 0 {
                    writeln!(out, ",")?;
                }
                write!(out, "      {}", serde_json::to_string(&tree).expect("tree"))?;
                count += 1;
            }
            if count > 0 {
                writeln!(out)?;
            }
            writeln!(out, "    ],")?;
            writeln!(out, "    \"count\": {count}")?;
            writeln!(out, "  }},")?;
            let versions = serde_json::to_string(&env.engine_versions).expect("map");
            match env.timestamp {
                Some(t) => {
                    writeln!(out, "  \"engine_versions\": {versions},")?;
                    writeln!(out, "  \"timestamp\": {t}")?;
                }
                None => writeln!(out, "  \"engine_versions\": {versions}")?,
            }
            writeln!(out, "}}")?;
        }
    }
    Ok(())
}

fn cmd_cycles<W: Write>(ctx: &mut Ctx<'_, W>, a: &CyclesArgs) -> Result<(), CliError> {
    let records = census_j2m(a.m)?;
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &records {
        *histogram.entry(r.claimed_length).or_insert(0) += 1;
    }
    let mut result = json!({
        "cycles": records.len(),
        "claimed_length_histogram": histogram,
    });
    if a.records {
        result["records"] = json!(records);
    }
    if !a.no_verify && a.m <= VERIFY_MAX_M {
        let report = verify_census(a.m)?;
        for d in &report.discrepancies {
            eprintln!(
                "census: k = {} gives {} records but {} distinct cycle(s) of length {} (claimed {})",
                d.k, d.records, d.distinct_cycles, d.actual_length, d.claimed_length
            );
        }
        result["verification"] = json!(report);
    }
    ctx.emit("cycles", json!({ "m": a.m }), result)
}

fn cmd_table<W: Write>(ctx: &mut Ctx<'_, W>, a: &TableArgs) -> Result<(), CliError> {
    let rows = sigma_table(a.n, a.m_max)?;
    match a.format {
        TableFormat::Csv => {
            writeln!(ctx.out, "m,sigma")?;
            for r in &rows {
                writeln!(ctx.out, "{},{}", r.m, r.sigma)?;
            }
            Ok(())
        }
        TableFormat::Json => ctx.emit("table", json!({ "n": a.n, "m_max": a.m_max }), json!({ "rows": rows })),
    }
}

fn cmd_ratios<W: Write>(ctx: &mut Ctx<'_, W>, a: &RatiosArgs) -> Result<(), CliError> {
    if a.format == TableFormat::Csv && a.decimal.decimal_comma {
        return Err(CliError::Parameter("--decimal-comma cannot be combined with --format csv".into()));
    }
    let series = ratio_series(a.n, a.m_max, a.decimal.format())?;
    match a.format {
        TableFormat::Csv => {
            writeln!(ctx.out, "m,numerator,denominator,decimal")?;
            for e in &series.entries {
                writeln!(ctx.out, "{},{},{},{}", e.m, e.value.numer(), e.value.denom(), e.decimal)?;
            }
            Ok(())
        }
        TableFormat::Json => ctx.emit(
            "ratios",
            json!({ "n": a.n, "m_max": a.m_max, "format": series.format }),
            json!({ "entries": series.entries }),
        ),
    }
}

fn cmd_n_ratios<W: Write>(ctx: &mut Ctx<'_, W>, a: &NRatiosArgs) -> Result<(), CliError> {
    let format = a.decimal.format();
    let r = n_direction_ratios(a.m, a.n_max, format)?;
    ctx.emit("n-ratios", json!({ "m": a.m, "n_max": a.n_max, "format": format }), json!(r))
}

fn cmd_delta<W: Write>(ctx: &mut Ctx<'_, W>, a: &DeltaArgs) -> Result<(), CliError> {
    let d = delta_estimate(a.n, a.m_used)?;
    ctx.emit("delta", json!({ "n": a.n, "m_used": a.m_used }), json!(d))
}

fn cmd_conjecture<W: Write>(ctx: &mut Ctx<'_, W>, a: &ConjectureArgs) -> Result<(), CliError> {
    let format = a.decimal.format();
    let r = conjecture_report(a.nm.n, a.nm.m, a.m_used, format)?;
    ctx.emit(
        "conjecture",
        json!({ "n": a.nm.n, "m": a.nm.m, "m_used": a.m_used, "format": format }),
        json!(r),
    )
}

fn cmd_graph<W: Write>(ctx: &mut Ctx<'_, W>, a: &GraphArgs) -> Result<(), CliError> {
    let p = params(a.nm)?;
    let g = build_jahangir(p);
    match a.format {
        GraphFormat::Dot => {
            ctx.out.write_all(g.to_dot(&format!("J_{}_{}", p.n(), p.m())).as_bytes())?;
            Ok(())
        }
        GraphFormat::Json => ctx.emit(
            "graph",
            json!({ "n": p.n(), "m": p.m() }),
            json!({ "vertex_count": g.vertex_count(), "edges": g.edges() }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<(), CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("jahangir").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let res = run(&cli, &mut out);
        (res, String::from_utf8(out).unwrap())
    }

    fn json_of(args: &[&str]) -> Value {
        let (res, out) = run_args(args);
        res.unwrap();
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn count_breakdown() {
        let v = json_of(&["count", "--n", "2", "--m", "4", "--breakdown"]);
        assert_eq!(v["command"], "count");
        assert_eq!(v["result"]["total"], "192");
        assert_eq!(v["result"]["per_k"], json!(["32", "80", "64", "16"]));
        assert!(v.get("timestamp").is_none());
    }

    #[test]
    fn count_all_engines_agree() {
        let v = json_of(&["count", "--n", "2", "--m", "3", "--method", "all"]);
        assert_eq!(v["result"]["agreement"], true);
        for engine in ["combinatorial", "kirchhoff", "enumerate"] {
            assert_eq!(v["result"]["engines"][engine], "50");
        }
    }

    #[test]
    fn count_large_value_is_a_string() {
        let v = json_of(&["count", "--n", "3", "--m", "16"]);
        assert_eq!(v["result"]["total"], "77132286525");
        let v = json_of(&["count", "--n", "3", "--m", "16", "--method", "kirchhoff"]);
        assert_eq!(v["result"]["total"], "77132286525");
    }

    #[test]
    fn error_codes() {
        let (res, _) = run_args(&["count", "--n", "1", "--m", "4"]);
        assert_eq!(res.unwrap_err().exit_code(), EXIT_PARAMETER);
        let (res, _) = run_args(&["count", "--n", "2", "--m", "4", "--method", "enumerate", "--cap", "100"]);
        assert_eq!(res.unwrap_err().exit_code(), EXIT_CAP);
        let (res, out) = run_args(&["enumerate", "--n", "2", "--m", "4", "--cap", "100"]);
        assert_eq!(res.unwrap_err().exit_code(), EXIT_CAP);
        assert!(out.is_empty());
        let (res, _) = run_args(&["count", "--n", "2", "--m", "4", "--cap", "20000000"]);
        assert_eq!(res.unwrap_err().exit_code(), EXIT_PARAMETER);
        let (res, _) = run_args(&["ratios", "--n", "2", "--m-max", "6", "--format", "csv", "--decimal-comma"]);
        assert_eq!(res.unwrap_err().exit_code(), EXIT_PARAMETER);
    }

    #[test]
    fn enumerate_json_and_limit() {
        let v = json_of(&["enumerate", "--n", "2", "--m", "3"]);
        assert_eq!(v["result"]["count"], 50);
        assert_eq!(v["result"]["trees"].as_array().unwrap().len(), 50);
        let v = json_of(&["enumerate", "--n", "2", "--m", "4", "--limit", "1"]);
        assert_eq!(v["result"]["count"], 1);
        let v = json_of(&["enumerate", "--n", "2", "--m", "3", "--limit", "0"]);
        assert_eq!(v["result"]["trees"], json!([]));
        let v = json_of(&["--timestamp", "enumerate", "--n", "2", "--m", "3", "--limit", "2", "--engine", "generic"]);
        assert!(v["timestamp"].is_u64());
    }

    #[test]
    fn enumerate_dot_dashes_deleted_edges() {
        let (res, out) = run_args(&["enumerate", "--n", "2", "--m", "3", "--format", "dot", "--limit", "2"]);
        res.unwrap();
        assert_eq!(out.matches("graph tree_").count(), 2);
        // 9 edges, 6 kept per tree.
        assert_eq!(out.matches("[style=dashed]").count(), 6);
    }

    #[test]
    fn coeffs_and_cycles() {
        let v = json_of(&["coeffs", "--m", "5"]);
        assert_eq!(v["result"]["coefficients"], json!(["25", "50", "35", "10", "1"]));
        let v = json_of(&["cycles", "--m", "4"]);
        assert_eq!(v["result"]["cycles"], 16);
        assert_eq!(v["result"]["claimed_length_histogram"], json!({"4": 4, "6": 4, "8": 4, "10": 4}));
        assert_eq!(v["result"]["verification"]["generic_cycles"], 13);
        let v = json_of(&["cycles", "--m", "6", "--no-verify"]);
        assert_eq!(v["result"]["cycles"], 36);
        assert!(v["result"].get("verification").is_none());
    }

    #[test]
    fn tables() {
        let (res, out) = run_args(&["table", "--n", "3", "--m-max", "9", "--format", "csv"]);
        res.unwrap();
        assert_eq!(out.lines().next(), Some("m,sigma"));
        assert_eq!(out.lines().last(), Some("9,1330668"));
        let v = json_of(&["ratios", "--n", "2", "--m-max", "5"]);
        assert_eq!(v["result"]["entries"][0]["decimal"], "3.8400000000");
        let v = json_of(&["ratios", "--n", "3", "--m-max", "15", "--precision", "10"]);
        assert_eq!(v["result"]["entries"][11]["m"], 14);
        assert_eq!(v["result"]["entries"][11]["decimal"], "4.7912878497");
        let v = json_of(&["ratios", "--n", "2", "--m-max", "4", "--precision", "2", "--decimal-comma"]);
        assert_eq!(v["result"]["entries"][0]["decimal"], "3,84");
    }

    #[test]
    fn graph_exports() {
        let v = json_of(&["graph", "--n", "2", "--m", "4", "--format", "json"]);
        assert_eq!(v["result"]["vertex_count"], 9);
        assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 12);
        let (_, dot) = run_args(&["graph", "--n", "2", "--m", "3"]);
        assert!(dot.starts_with("graph J_2_3 {"));
    }

    #[test]
    fn output_is_deterministic() {
        let a = run_args(&["count", "--n", "2", "--m", "5", "--method", "all", "--breakdown"]).1;
        let b = run_args(&["count", "--n", "2", "--m", "5", "--method", "all", "--breakdown"]).1;
        assert_eq!(a, b);
    }
}
