use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sdepth_cli::cache::Cache;
use sdepth_cli::compute::{self, Source};
use sdepth_cli::{exit_code, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use sdepth_core::graph::{build_family, diameter, FamilySpec};
use sdepth_core::homological::FieldChar;
use sdepth_core::ideal::{family_module, ModuleKind};
use sdepth_core::replay::{
    expected_value, run_suite, Expectation, Limits, Quantity, Suite, Verdict,
};
use sdepth_core::serial::{DecompositionDoc, IdealDoc, WitnessDoc};
use sdepth_core::stanley::{paper_decomposition_c2, paper_decomposition_c3, verify_decomposition};

// Plain `println!` panics when stdout is a closed pipe (`sdepth ... | head`).
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "sdepth",
    version,
    about = "Depth and Stanley depth of edge ideals of strong products of paths and cycles"
)]
struct Cli {
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    Ideal,
    Quotient,
    Pair,
}

impl From<ModuleArg> for ModuleKind {
    fn from(m: ModuleArg) -> Self {
        match m {
            ModuleArg::Ideal => ModuleKind::Ideal,
            ModuleArg::Quotient => ModuleKind::Quotient,
            ModuleArg::Pair => ModuleKind::Pair,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DecompFamily {
    #[value(name = "C2quot")]
    C2quot,
    #[value(name = "C3quot")]
    C3quot,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices, edges, diameter and minimal generators of a family member.
    Info {
        /// Family spec such as `P:6,4`, `C:5,2` or `Pstar:3`.
        spec: FamilySpec,
        #[arg(long)]
        json: bool,
    },
    /// Depth via Hochster's formula.
    Depth {
        spec: FamilySpec,
        #[arg(long, value_enum, default_value = "quotient")]
        module: ModuleArg,
        /// Characteristic of the coefficient field.
        #[arg(long = "char", default_value_t = 2)]
        field: u32,
        #[arg(long)]
        json: bool,
    },
    /// Stanley depth via interval partitions.
    Sdepth {
        spec: FamilySpec,
        #[arg(long, value_enum, default_value = "quotient")]
        module: ModuleArg,
        /// Accepted for symmetry with `depth`; Stanley depth does not depend
        /// on the field.
        #[arg(long = "char", default_value_t = 2)]
        field: u32,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// Stop once a partition with tops of at least this size is found.
        #[arg(long)]
        goal: Option<usize>,
        /// Write the witness partition here as JSON.
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a replay suite.
    Replay {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_vars: usize,
        /// Per-search time budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        #[arg(long = "char", default_value_t = 2)]
        field: u32,
        /// Skip the depth cross-check over GF(32003).
        #[arg(long)]
        no_char_check: bool,
        /// Required for the stretch suite.
        #[arg(long)]
        allow_stretch: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a CSV table of the rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Check an explicit decomposition of I(C_{n,m})/I(P_{n,m}).
    VerifyDecomp {
        #[arg(long, value_enum)]
        family: DecompFamily,
        #[arg(long)]
        n: usize,
        /// Budget in seconds for the inner quotient partitions.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// Write the decomposition here as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn budget(secs: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(secs).with_context(|| format!("invalid budget {secs}"))
}

fn field(p: u32) -> Result<FieldChar> {
    Ok(FieldChar::new(p)?)
}

fn open_cache(no_cache: bool) -> Option<Cache> {
    if no_cache {
        return None;
    }
    match Cache::from_env() {
        Ok(c) => Some(c),
        Err(e) => {
            eprintln!("warning: cache disabled: {e:#}");
            None
        }
    }
}

fn warn_all(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::Computed => "computed",
        Source::Cache => "cache",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn print_json(v: &serde_json::Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn module_text(spec: &FamilySpec, kind: ModuleKind) -> String {
    match kind {
        ModuleKind::Ideal => format!("I({spec})"),
        ModuleKind::Quotient => format!("S/I({spec})"),
        ModuleKind::Pair => format!("I({spec})/I(P:{},{})", spec.n(), spec.m()),
    }
}

fn comparison(e: &Option<Expectation>, lower: usize, upper: usize) -> (Option<Verdict>, String) {
    match e {
        Some(e) => {
            let v = e.form.judge(lower, upper);
            (
                Some(v),
                format!("expected {} ({}): {}", e.form, e.claim, verdict_name(v)),
            )
        }
        None => (None, "no closed form known".into()),
    }
}

fn cmd_info(spec: FamilySpec, json: bool) -> Result<u8> {
    let fg = build_family(&spec)?;
    let ideal = sdepth_core::ideal::edge_ideal(&fg.graph)?;
    let diam = diameter(&fg.graph);
    let names: Vec<String> = ideal
        .gens()
        .iter()
        .map(|&g| fg.indexer.monomial(g))
        .collect();
    if json {
        print_json(&json!({
            "family": spec.to_string(),
            "vertices": fg.graph.vertex_count(),
            "edges": fg.graph.edge_count(),
            "diameter": diam,
            "generator_count": ideal.gens().len(),
            "generators": names,
            "ideal": IdealDoc::new(&ideal, Some(fg.indexer.labels().to_vec())),
        }));
    } else {
        outln!("family      {spec}");
        outln!("vertices    {}", fg.graph.vertex_count());
        outln!("edges       {}", fg.graph.edge_count());
        match diam {
            Some(d) => outln!("diameter    {d}"),
            None => outln!("diameter    disconnected"),
        }
        outln!("generators  {}", ideal.gens().len());
        for name in names {
            outln!("  {name}");
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_depth(spec: FamilySpec, kind: ModuleKind, p: u32, json: bool, no_cache: bool) -> Result<u8> {
    if kind == ModuleKind::Pair {
        bail!("depth is computed for ideals and quotients only");
    }
    let d = family_module(&spec, kind)?;
    let f = field(p)?;
    let cache = open_cache(no_cache);
    let out = compute::depth(&d, f, cache.as_ref())?;
    warn_all(&out.warnings);
    let e = expected_value(&spec, kind, Quantity::Depth);
    let (verdict, text) = comparison(&e, out.value, out.value);
    if json {
        print_json(&json!({
            "family": spec.to_string(),
            "module": kind,
            "quantity": "depth",
            "field": f,
            "value": out.value,
            "expected": e,
            "verdict": verdict,
            "source": source_name(out.source),
        }));
    } else {
        outln!(
            "depth({}) = {} over GF({})  [{}]",
            module_text(&spec, kind),
            out.value,
            f.p(),
            text
        );
    }
    Ok(exit_code(verdict))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sdepth(
    spec: FamilySpec,
    kind: ModuleKind,
    p: u32,
    budget_secs: f64,
    goal: Option<usize>,
    witness_out: Option<PathBuf>,
    json: bool,
    no_cache: bool,
) -> Result<u8> {
    field(p)?;
    let d = family_module(&spec, kind)?;
    let cache = open_cache(no_cache);
    let out = compute::sdepth(&d, budget(budget_secs)?, goal, cache.as_ref())?;
    warn_all(&out.warnings);
    let e = expected_value(&spec, kind, Quantity::Sdepth);
    let (verdict, text) = comparison(&e, out.lower, out.upper);
    let exact = out.lower == out.upper;
    let witness = WitnessDoc::new(&out.witness);
    if let Some(path) = &witness_out {
        fs::write(path, serde_json::to_string_pretty(&witness)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if json {
        print_json(&json!({
            "family": spec.to_string(),
            "module": kind,
            "quantity": "sdepth",
            "lower": out.lower,
            "upper": out.upper,
            "exact": exact,
            "budget_hit": out.budget_hit,
            "expected": e,
            "verdict": verdict,
            "source": source_name(out.source),
            "witness": witness,
        }));
    } else {
        let value = if exact {
            out.lower.to_string()
        } else {
            format!("in [{}, {}]", out.lower, out.upper)
        };
        let budget_note = if out.budget_hit {
            ", budget exhausted"
        } else {
            ""
        };
        outln!(
            "sdepth({}) = {value}{budget_note}  [{text}]",
            module_text(&spec, kind)
        );
    }
    let code = match verdict {
        Some(v) => exit_code([v]),
        None if out.budget_hit && !exact => sdepth_cli::EXIT_INCONCLUSIVE,
        None => EXIT_PASS,
    };
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn cmd_replay(
    suite: Suite,
    max_vars: usize,
    budget_secs: f64,
    p: u32,
    no_char_check: bool,
    allow_stretch: bool,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
    json: bool,
) -> Result<u8> {
    let mut limits = Limits {
        max_vars,
        budget: budget(budget_secs)?,
        field: field(p)?,
        allow_stretch,
        ..Limits::default()
    };
    if no_char_check {
        limits.check_field = None;
    }
    let report = run_suite(suite, &limits).map_err(|e| match e {
        sdepth_core::Error::Refused(msg) => anyhow::anyhow!("{msg} (pass --allow-stretch)"),
        e => e.into(),
    })?;
    if let Some(path) = &out {
        fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &csv {
        fs::write(path, report.to_csv()).with_context(|| format!("writing {}", path.display()))?;
    }
    if json {
        out!("{}", report.to_json());
    } else {
        for row in &report.rows {
            let computed = row
                .computed
                .map_or_else(|| "error".to_string(), |b| b.to_string());
            outln!(
                "{:<12} {:<58} expected {:<10} computed {}",
                verdict_name(row.verdict),
                row.id,
                row.expected.to_string(),
                computed
            );
        }
        let s = &report.summary;
        outln!(
            "suite {}: {} pass, {} fail, {} inconclusive, {} characteristic disagreements",
            report.suite,
            s.pass,
            s.fail,
            s.inconclusive,
            s.char_disagreements
        );
    }
    Ok(exit_code(report.rows.iter().map(|r| r.verdict)))
}

fn cmd_verify_decomp(
    family: DecompFamily,
    n: usize,
    budget_secs: f64,
    out: Option<PathBuf>,
    json: bool,
) -> Result<u8> {
    let b = budget(budget_secs)?;
    let (layers, dec) = match family {
        DecompFamily::C2quot => (2, paper_decomposition_c2(n, b)?),
        DecompFamily::C3quot => (3, paper_decomposition_c3(n, b)?),
    };
    let verification = verify_decomposition(&dec)?;
    let min_dim = dec.min_dimension();
    let need = (n + 2).div_ceil(3);
    let ok = verification.is_ok() && min_dim >= need;
    if let Some(path) = &out {
        let doc = DecompositionDoc::new(&dec);
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if json {
        print_json(&json!({
            "family": format!("C{layers}quot"),
            "n": n,
            "spaces": dec.spaces.len(),
            "verification": verification,
            "min_dimension": min_dim,
            "required": need,
            "verdict": if ok { "pass" } else { "fail" },
        }));
    } else {
        outln!(
            "decomposition of I(C_{{{n},{layers}}})/I(P_{{{n},{layers}}}): {} spaces",
            dec.spaces.len()
        );
        if verification.is_ok() {
            outln!("every monomial covered exactly once");
        } else {
            outln!("verification failed: {verification:?}");
        }
        outln!(
            "min dimension {min_dim}, ceil((n+2)/3) = {need}: {}",
            if min_dim >= need { "ok" } else { "too small" }
        );
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

fn run(cli: Cli) -> Result<u8> {
    let no_cache = cli.no_cache;
    match cli.command {
        Command::Info { spec, json } => cmd_info(spec, json),
        Command::Depth {
            spec,
            module,
            field,
            json,
        } => cmd_depth(spec, module.into(), field, json, no_cache),
        Command::Sdepth {
            spec,
            module,
            field,
            budget,
            goal,
            witness_out,
            json,
        } => cmd_sdepth(
            spec,
            module.into(),
            field,
            budget,
            goal,
            witness_out,
            json,
            no_cache,
        ),
        Command::Replay {
            suite,
            max_vars,
            budget,
            field,
            no_char_check,
            allow_stretch,
            out,
            csv,
            json,
        } => cmd_replay(
            suite,
            max_vars,
            budget,
            field,
            no_char_check,
            allow_stretch,
            out,
            csv,
            json,
        ),
        Command::VerifyDecomp {
            family,
            n,
            budget,
            out,
            json,
        } => cmd_verify_decomp(family, n, budget, out, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
