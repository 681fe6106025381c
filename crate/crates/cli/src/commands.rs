//! Subcommands of the `exunit` binary.
//!
//! Every command produces a [`Report`]: fixed-width text for terminals and a
//! JSON document `{ring, command, parameters, results, checks}` for `--json`.
//! Counts are serialized as decimal strings.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exunit_core::charsum::{self, ORTHOGONALITY_TOL};
use exunit_core::oracle::{self, ElementSet, Op, Source};
use exunit_core::structure::{self, SetDescriptor};
use exunit_core::{counting, Count, Element, LocalKind, RingSpec, DEFAULT_CAP};
use serde_json::{json, Value};

use crate::corpus::default_corpus;
use crate::dsl::{format_ring, parse_ring};
use crate::error::{CliError, Exit};
use crate::literal::{format_element, parse_element};
use crate::verify::{self, VerifyOptions, SWEEP_CAP};

/// Sets with at most this many elements are listed in text output.
const LIST_LIMIT: u64 = 64;

#[derive(Debug, Parser)]
#[command(name = "exunit", version, about = "Units and exceptional units of finite commutative rings")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest ring that may be enumerated (default 10^6, or 10^4 for `verify`).
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Component parameters, unit counts and generation predicates.
    Info(InfoArgs),
    /// Representation counts of elements as k-fold sums or products.
    Count(CountArgs),
    /// The k-fold sumset or product set.
    Set(SetArgs),
    /// Closed forms against brute force over a corpus of rings.
    Verify(VerifyArgs),
    /// Multiplicative characters of GF(q) and the character-sum product count.
    Chars(CharsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Sum,
    Prod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Units,
    Exunits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    pub spec: String,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub op: OpArg,
    /// Defaults to `units` for sums and `exunits` for products.
    #[arg(long, value_enum)]
    pub source: Option<SourceArg>,
    #[arg(short = 'k')]
    pub k: u32,
    /// Element literal.
    #[arg(short = 'c', conflicts_with = "all", required_unless_present = "all")]
    pub c: Option<String>,
    /// Every element (every unit for products).
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
    pub spec: String,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    #[arg(long, value_enum)]
    pub op: OpArg,
    #[arg(long, value_enum)]
    pub source: Option<SourceArg>,
    #[arg(short = 'k')]
    pub k: u32,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
    pub spec: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Include the built-in corpus.
    #[arg(long)]
    pub default: bool,
    /// Largest k for the count comparisons.
    #[arg(long, default_value_t = 5)]
    pub kmax: u32,
    #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
    pub inject_mu_offset: i64,
    pub specs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct CharsArgs {
    #[arg(short = 'q')]
    pub q: u64,
    #[arg(short = 'k', default_value_t = 2)]
    pub k: u32,
    /// Field element literal; all of GF(q)^* when omitted.
    #[arg(short = 'c')]
    pub c: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub ring: Value,
    pub parameters: Value,
    pub results: Value,
    pub checks: Value,
    pub text: String,
    pub warnings: Vec<String>,
    pub exit: Exit,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "checks": self.checks,
        })
    }
}

fn count_json(c: &Count) -> Value {
    Value::String(c.to_string())
}

fn count_result(c: &exunit_core::Result<Count>) -> Value {
    match c {
        Ok(c) => count_json(c),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn count_text(c: &exunit_core::Result<Count>) -> String {
    match c {
        Ok(c) => c.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn source_of(op: OpArg, source: Option<SourceArg>) -> Result<Source, CliError> {
    match (op, source) {
        (OpArg::Sum, None | Some(SourceArg::Units)) => Ok(Source::Units),
        (_, Some(SourceArg::Exunits)) | (OpArg::Prod, None) => Ok(Source::ExceptionalUnits),
        (OpArg::Prod, Some(SourceArg::Units)) => {
            Err(CliError::Usage("products are only supported over exceptional units".into()))
        }
    }
}

fn source_name(source: Source) -> &'static str {
    match source {
        Source::Units => "units",
        Source::ExceptionalUnits => "exunits",
    }
}

fn op_name(op: OpArg) -> &'static str {
    match op {
        OpArg::Sum => "sum",
        OpArg::Prod => "prod",
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Formula => "formula",
        Method::Oracle => "oracle",
        Method::Both => "both",
    }
}

fn check_k(k: u32) -> Result<(), CliError> {
    if k < 2 {
        return Err(CliError::Usage(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

fn require_exceptional(ring: &RingSpec) -> Result<(), CliError> {
    if !structure::has_exceptional_units(ring) {
        return Err(CliError::Usage(format!(
            "exceptional units empty: {} has a residue field of size 2",
            format_ring(ring)
        )));
    }
    Ok(())
}

fn kind_name(kind: LocalKind) -> &'static str {
    match kind {
        LocalKind::Zpe => "Z/p^e",
        LocalKind::Gf => "GF",
        LocalKind::NilExt => "N",
    }
}

pub fn info(args: &InfoArgs) -> Result<Report, CliError> {
    let ring = parse_ring(&args.spec)?;
    let ex = counting::exceptional_count(&ring);
    let units = Count::from(ring.unit_count());
    let order = Count::from(ring.order());
    let has_ex = structure::has_exceptional_units(&ring);
    let gen_units = structure::generated_by_units(&ring);
    let gen_ex = structure::generated_by_exceptional_units(&ring);

    let mut text = String::new();
    writeln!(text, "ring        {}", format_ring(&ring)).unwrap();
    writeln!(text, "components  {}", ring.len()).unwrap();
    writeln!(text, "{:>4}  {:<8}{:>8}{:>4}{:>4}{:>10}{:>10}{:>12}", "#", "kind", "p", "d", "e", "m", "q", "|R_i|").unwrap();
    let mut components = Vec::new();
    for (i, c) in ring.components().iter().enumerate() {
        writeln!(
            text,
            "{:>4}  {:<8}{:>8}{:>4}{:>4}{:>10}{:>10}{:>12}",
            i + 1,
            kind_name(c.kind()),
            c.characteristic_prime(),
            c.degree(),
            c.exponent(),
            c.max_ideal_size(),
            c.residue_size(),
            c.size()
        )
        .unwrap();
        components.push(json!({
            "spec": c.to_string(),
            "kind": kind_name(c.kind()),
            "p": c.characteristic_prime(),
            "d": c.degree(),
            "e": c.exponent(),
            "m": c.max_ideal_size(),
            "q": c.residue_size(),
            "size": c.size(),
            "modulus": c.modulus(),
        }));
    }
    writeln!(text, "|R|         {order}").unwrap();
    writeln!(text, "|R*|        {units}").unwrap();
    writeln!(text, "|R**|       {ex}").unwrap();
    writeln!(text, "has_exceptional_units           {has_ex}").unwrap();
    writeln!(text, "generated_by_units              {gen_units}").unwrap();
    writeln!(text, "generated_by_exceptional_units  {gen_ex}").unwrap();

    Ok(Report {
        command: "info",
        ring: json!(format_ring(&ring)),
        parameters: json!({ "spec": args.spec }),
        results: json!({
            "components": components,
            "order": count_json(&order),
            "units": count_json(&units),
            "exceptional_units": count_json(&ex),
            "has_exceptional_units": has_ex,
            "generated_by_units": gen_units,
            "generated_by_exceptional_units": gen_ex,
        }),
        checks: json!({}),
        text,
        warnings: Vec::new(),
        exit: Exit::Success,
    })
}

pub fn count(args: &CountArgs, cap: u64) -> Result<Report, CliError> {
    let ring = parse_ring(&args.spec)?;
    check_k(args.k)?;
    let source = source_of(args.op, args.source)?;
    if args.op == OpArg::Prod {
        require_exceptional(&ring)?;
    }
    let targets: Vec<Element> = match &args.c {
        Some(lit) => {
            let c = parse_element(&ring, lit)?;
            if args.op == OpArg::Prod && !ring.is_unit(&c)? {
                return Err(CliError::Usage(format!("{lit} is not a unit; products of units are units")));
            }
            vec![c]
        }
        None if args.op == OpArg::Prod => ring.units(cap)?.collect(),
        None => ring.elements(cap)?.collect(),
    };

    let formula = |c: &Element| match (args.op, source) {
        (OpArg::Sum, Source::Units) => counting::psi(&ring, args.k, c),
        (OpArg::Sum, Source::ExceptionalUnits) => counting::phi(&ring, args.k, c),
        (OpArg::Prod, _) => counting::theta(&ring, args.k, c),
    };
    let oracle_table = if args.method == Method::Formula {
        None
    } else {
        let mut tables = match args.op {
            OpArg::Sum => oracle::sum_tables(&ring, args.k, source, cap)?,
            OpArg::Prod => oracle::prod_tables(&ring, args.k, cap)?,
        };
        tables.pop()
    };

    let mut text = String::new();
    writeln!(text, "{:<24}{:>20}{:>20}{:>8}", "element", "formula", "oracle", "match").unwrap();
    let mut results = Vec::new();
    let mut mismatches = 0u64;
    for c in &targets {
        let f = (args.method != Method::Oracle).then(|| formula(c));
        let o = oracle_table.as_ref().map(|t| t.get(c).cloned());
        let matched = match (&f, &o) {
            (Some(f), Some(o)) => Some(f.is_ok() && f == o),
            _ => None,
        };
        if matched == Some(false) {
            mismatches += 1;
        }
        let literal = format_element(&ring, c);
        writeln!(
            text,
            "{:<24}{:>20}{:>20}{:>8}",
            literal,
            f.as_ref().map_or("-".into(), count_text),
            o.as_ref().map_or("-".into(), count_text),
            matched.map_or("-", |m| if m { "yes" } else { "NO" })
        )
        .unwrap();
        let mut row = json!({ "element": literal });
        if let Some(f) = &f {
            row["formula"] = count_result(f);
        }
        if let Some(o) = &o {
            row["oracle"] = count_result(o);
        }
        if let Some(m) = matched {
            row["match"] = json!(m);
        }
        results.push(row);
    }
    if args.method == Method::Both {
        if mismatches == 0 {
            writeln!(text, "all {} counts match", targets.len()).unwrap();
        } else {
            writeln!(text, "{mismatches} of {} counts differ", targets.len()).unwrap();
        }
    }
    Ok(Report {
        command: "count",
        ring: json!(format_ring(&ring)),
        parameters: json!({
            "op": op_name(args.op),
            "source": source_name(source),
            "k": args.k,
            "element": args.c,
            "all": args.all,
            "method": method_name(args.method),
        }),
        results: Value::Array(results),
        checks: json!({
            "compared": if args.method == Method::Both { targets.len() } else { 0 },
            "mismatches": mismatches,
        }),
        text,
        warnings: Vec::new(),
        exit: if mismatches > 0 { Exit::Mismatch } else { Exit::Success },
    })
}

fn list_elements(ring: &RingSpec, items: impl Iterator<Item = Element>) -> Vec<String> {
    items.map(|e| format_element(ring, &e)).collect()
}

pub fn set(args: &SetArgs, cap: u64) -> Result<Report, CliError> {
    let ring = parse_ring(&args.spec)?;
    check_k(args.k)?;
    let source = source_of(args.op, args.source)?;
    let descriptor: SetDescriptor = match (args.op, source) {
        (OpArg::Sum, Source::Units) => structure::unit_sumset(&ring, args.k)?,
        (OpArg::Sum, Source::ExceptionalUnits) => structure::exunit_sumset(&ring, args.k)?,
        (OpArg::Prod, _) => structure::exunit_prodset(&ring, args.k)?,
    };
    let cardinality = descriptor.cardinality(&ring);

    let mut text = String::new();
    let mut results = json!({});
    let mut checks = json!({});
    let mut exit = Exit::Success;
    if args.method != Method::Oracle {
        writeln!(text, "descriptor   {descriptor}").unwrap();
        writeln!(text, "cardinality  {cardinality}").unwrap();
        results["descriptor"] = json!(descriptor.to_string());
        results["components"] = json!(descriptor.components().iter().map(|c| format!("{c:?}")).collect::<Vec<_>>());
        results["cardinality"] = count_json(&cardinality);
        if cardinality <= Count::from(LIST_LIMIT) && ring.enumerable(cap).is_ok() {
            let members = list_elements(&ring, descriptor.enumerate(&ring, cap)?.into_iter());
            writeln!(text, "elements     {{{}}}", members.join(", ")).unwrap();
            results["elements"] = json!(members);
        }
    }
    if args.method != Method::Formula {
        let size = ring.enumerable(cap)?;
        let op = match args.op {
            OpArg::Sum => Op::Sum,
            OpArg::Prod => Op::Prod,
        };
        let reached = oracle::reachable_set(&ring, args.k, op, source, cap)?;
        writeln!(text, "oracle       {} elements", reached.len()).unwrap();
        results["oracle_cardinality"] = json!(reached.len().to_string());
        if args.method == Method::Oracle && reached.len() as u64 <= LIST_LIMIT {
            let members = list_elements(&ring, reached.elements(&ring));
            writeln!(text, "elements     {{{}}}", members.join(", ")).unwrap();
            results["elements"] = json!(members);
        }
        if args.method == Method::Both {
            let described = ElementSet::from_elements(&ring, size, &descriptor.enumerate(&ring, cap)?);
            let equal = described == reached;
            writeln!(text, "match        {}", if equal { "yes" } else { "NO" }).unwrap();
            checks = json!({ "set_equal": equal });
            if !equal {
                exit = Exit::Mismatch;
            }
        }
    }
    Ok(Report {
        command: "set",
        ring: json!(format_ring(&ring)),
        parameters: json!({
            "op": op_name(args.op),
            "source": source_name(source),
            "k": args.k,
            "method": method_name(args.method),
        }),
        results,
        checks,
        text,
        warnings: Vec::new(),
        exit,
    })
}

pub fn verify(args: &VerifyArgs, cap: Option<u64>) -> Result<Report, CliError> {
    check_k(args.kmax)?;
    let mut names: Vec<String> = if args.default { default_corpus() } else { Vec::new() };
    names.extend(args.specs.iter().cloned());
    if names.is_empty() {
        return Err(CliError::Usage("nothing to verify: give ring specs or --default".into()));
    }
    let corpus = names
        .iter()
        .map(|s| parse_ring(s).map(|r| (s.clone(), r)))
        .collect::<Result<Vec<_>, _>>()?;
    let opts = VerifyOptions { kmax: args.kmax, cap: cap.unwrap_or(SWEEP_CAP), mu_offset: args.inject_mu_offset };
    let report = verify::run(&corpus, &opts)?;

    let mut text = String::new();
    writeln!(text, "{:<28}{:>8}{:>10}{:>8}", "ring", "|R|", "checks", "failed").unwrap();
    let mut rings = Vec::new();
    for r in &report.rings {
        writeln!(text, "{:<28}{:>8}{:>10}{:>8}", r.ring, r.order, r.total(), r.failures).unwrap();
        rings.push(json!({
            "ring": r.ring,
            "order": r.order.to_string(),
            "checks": r.checks,
            "failures": r.failures,
            "first_failure": r.first_failure,
        }));
    }
    let total = report.total();
    let failures = report.failures();
    let first = report.first_failure().map(|(ring, f)| format!("{ring}: {f}"));
    match &first {
        None => writeln!(text, "all {total} checks passed").unwrap(),
        Some(f) => writeln!(text, "{failures} of {total} checks FAILED; first counterexample: {f}").unwrap(),
    }
    Ok(Report {
        command: "verify",
        ring: json!(names),
        parameters: json!({ "kmax": args.kmax, "cap": opts.cap, "default": args.default }),
        results: Value::Array(rings),
        checks: json!({
            "total": total,
            "passed": total - failures,
            "failed": failures,
            "first_counterexample": first,
        }),
        text,
        warnings: Vec::new(),
        exit: if failures > 0 { Exit::Mismatch } else { Exit::Success },
    })
}

pub fn chars(args: &CharsArgs) -> Result<Report, CliError> {
    let table = charsum::build_table(args.q).map_err(|e| CliError::Usage(format!("invalid q: {e}")))?;
    let q = table.q();
    let field = RingSpec::new(vec![table.field().clone()])?;
    let mut warnings = Vec::new();
    let mut text = String::new();
    writeln!(text, "field       GF({q}), modulus {:?}", table.field().modulus()).unwrap();
    writeln!(text, "generator   {}", format_element(&field, &Element::new(vec![table.generator()]))).unwrap();

    let orth = charsum::orthogonality_check(&table);
    writeln!(text, "orthogonality residuals  elements {:.3e}  characters {:.3e}", orth.element_side, orth.character_side)
        .unwrap();
    let mut checks = json!({
        "orthogonality_ok": orth.max_deviation() < ORTHOGONALITY_TOL,
    });
    let mut exit = if orth.max_deviation() < ORTHOGONALITY_TOL { Exit::Success } else { Exit::Mismatch };

    let mut sums = Vec::new();
    writeln!(text, "{:>6}{:>16}{:>16}", "t", "Re S_t", "Im S_t").unwrap();
    for t in 0..table.character_count() {
        let s = table.exceptional_char_sum(t);
        writeln!(text, "{:>6}{:>16.6}{:>16.6}", t, s.re, s.im).unwrap();
        sums.push(json!({ "t": t, "re": s.re, "im": s.im }));
    }

    let mut thetas = Vec::new();
    if table.exceptional_units_empty() {
        warnings.push(format!("R** empty: GF({q}) has no exceptional units"));
    } else {
        check_k(args.k)?;
        let targets: Vec<u64> = match &args.c {
            Some(lit) => {
                let c = parse_element(&field, lit)?.coords()[0];
                if c == 0 {
                    return Err(CliError::Usage("c must be a nonzero field element".into()));
                }
                vec![c]
            }
            None => (1..q).collect(),
        };
        writeln!(text, "{:<16}{:>14}{:>14}{:>12}{:>8}", "c", "characters", "exact", "residual", "match").unwrap();
        let mut mismatches = 0;
        for c in targets {
            let u = Element::new(vec![c]);
            let via = charsum::theta_via_chars(&table, args.k, c);
            let exact = counting::theta(&field, args.k, &u);
            let ok = matches!((&via, &exact), (Ok(v), Ok(e)) if v.value == *e);
            if !ok {
                mismatches += 1;
            }
            let literal = format_element(&field, &u);
            let (value, residual) = match &via {
                Ok(v) => (v.value.to_string(), format!("{:.2e}", v.residual)),
                Err(e) => (format!("error: {e}"), "-".into()),
            };
            writeln!(text, "{:<16}{:>14}{:>14}{:>12}{:>8}", literal, value, count_text(&exact), residual, if ok { "yes" } else { "NO" })
                .unwrap();
            thetas.push(json!({
                "element": literal,
                "characters": via.as_ref().map(|v| count_json(&v.value)).unwrap_or_else(|e| json!({ "error": e.to_string() })),
                "residual": via.as_ref().map(|v| v.residual).ok(),
                "exact": count_result(&exact),
                "match": ok,
            }));
        }
        checks["theta_mismatches"] = json!(mismatches);
        if mismatches > 0 {
            exit = Exit::Mismatch;
        }
    }
    Ok(Report {
        command: "chars",
        ring: json!(format!("GF({q})")),
        parameters: json!({ "q": q, "k": args.k, "element": args.c }),
        results: json!({
            "generator": format_element(&field, &Element::new(vec![table.generator()])),
            "char_sums": sums,
            "orthogonality": { "elements": orth.element_side, "characters": orth.character_side },
            "theta": thetas,
        }),
        checks,
        text,
        warnings,
        exit,
    })
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    match &cli.command {
        Command::Info(a) => info(a),
        Command::Count(a) => count(a, cap),
        Command::Set(a) => set(a, cap),
        Command::Verify(a) => verify(a, cli.cap),
        Command::Chars(a) => chars(a),
    }
}

/// Output of one invocation.
#[derive(Debug, Clone)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Invocation { stdout: String::new(), stderr: rendered, exit: Exit::Usage }
            } else {
                Invocation { stdout: rendered, stderr: String::new(), exit: Exit::Success }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
                s.push('\n');
                s
            } else {
                report.text.clone()
            };
            let stderr = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Invocation { stdout, stderr, exit: report.exit }
        }
        Err(e) => Invocation { stdout: String::new(), stderr: format!("error: {e}\n"), exit: e.exit() },
    }
}
