use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use jones_core::arith::{format_rational, parse_rational, BigRational, RationalSpan};
use jones_core::expansion::{
    delta_k, expected_delta1_psi0, filtration_degree, phi_coefficients, FiltrationDegree,
};
use jones_core::jones::{psi0_closed_form, rho_evaluate, rho_specialize};
use jones_core::quotients::{
    cyclic_order_degree1, cyclic_order_degree2, rational_quotient_divisors,
};
use jones_core::sp4::{
    bracket_module, e, highest_weight_submodule, identify_module, lower_central_series, orbit_span,
    table1, table2, weight_table, Decomposition, Gamma, Submodule, END_DIM,
};
use jones_core::words::{parse_word, GroupWord};
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::{ConfigError, Format, RunConfig, CONFIG_ENV};
use crate::json;
use crate::report::{Check, Report, Source};

/// Errors that map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error(transparent)]
    Core(#[from] jones_core::Error),

    #[error("{0}")]
    Usage(String),
}

const WORD_HELP: &str = "\
Words are products of z1..z5 and xi separated by spaces. A trailing '
or ^-1 inverts, ^n raises to an integer power, parentheses group, and [u, v]
is the commutator u v u^-1 v^-1. Named elements: psi0 = (z1 z2 z1)^4,
iota = z1 z2 z3 z4 z5 z5 z4 z3 z2 z1.";

#[derive(Debug, Parser)]
#[command(name = "jones2", version, about = "Exact computations with the genus-2 Jones representation", after_help = WORD_HELP)]
pub struct Cli {
    /// Key=value config file; command-line flags take precedence.
    #[arg(long, global = true, env = CONFIG_ENV)]
    pub config: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the representation.
    Rho {
        #[command(subcommand)]
        action: RhoAction,
    },
    /// Coefficients of the expansion at t = -e^h up to h^K.
    Phi {
        word: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The degree-k class of a Torelli word.
    Delta {
        word: String,
        #[arg(long)]
        k: usize,
    },
    /// Filtration degree of a Torelli word, searched up to --max.
    Fdeg {
        word: String,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Weight-space table of a submodule of End(Gamma_{0,1}).
    Weights {
        #[arg(long, value_enum, default_value_t = Space::Full)]
        space: Space,
        /// Lower central series index for --space bracket.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Show the published basis vectors next to the computed spans.
        #[arg(long)]
        paper_table: bool,
    },
    /// Decompose a submodule: full, gamma02, bracket:K, hw:IJ or orbit.
    Identify { spec: String },
    /// Span of the conjugation orbit of delta_1(psi0).
    #[command(name = "theoremA")]
    OrbitSpan {
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Lower central series of Gamma_{0,2}.
    #[command(name = "theoremB")]
    LowerCentral {
        #[arg(long = "max-k")]
        max_k: Option<usize>,
    },
    /// Order of psi0 in the cyclic quotient of the truncated image.
    Quotient {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: u8,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Run every check.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum RhoAction {
    Eval {
        word: String,
        /// Substitute a nonzero rational for t, written t=<p/q>.
        #[arg(long)]
        specialize: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Full,
    Gamma02,
    Bracket,
}

/// Parses arguments, runs the command and returns the rendered output with
/// the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(cli, echo) {
        Ok(report) => (report.render(), report.exit_code()),
        Err(e) => (format!("error: {e}\n"), 2),
    }
}

pub fn base_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut config = RunConfig::default();
    if let Some(path) = &cli.config {
        config.apply_file(path)?;
    }
    if let Some(f) = cli.format {
        config.format = f;
    }
    if let Some(s) = cli.seed {
        config.seed = s;
    }
    Ok(config)
}

pub fn execute(cli: Cli, echo: Vec<String>) -> Result<Report, CliError> {
    let mut config = base_config(&cli)?;
    match &cli.command {
        Command::Phi {
            degree: Some(d), ..
        } => config.truncation_degree = *d,
        Command::OrbitSpan { depth: Some(d) } => config.span_depth = *d,
        Command::LowerCentral { max_k: Some(k) } => config.max_k = *k,
        Command::Quotient { degree, depth, cap } => {
            if let Some(d) = depth {
                if *degree == 1 {
                    config.lattice_depth = *d;
                } else {
                    config.degree2_depth = *d;
                }
            }
            if let Some(c) = cap {
                config.order_cap = *c;
            }
        }
        _ => {}
    }
    config.validate()?;
    let start = Instant::now();
    let mut report = Report::new(echo, config.clone());
    match cli.command {
        Command::Rho {
            action: RhoAction::Eval { word, specialize },
        } => rho_eval(&mut report, &word, specialize.as_deref())?,
        Command::Phi { word, .. } => phi(&mut report, &word)?,
        Command::Delta { word, k } => delta(&mut report, &word, k)?,
        Command::Fdeg { word, max } => {
            fdeg(&mut report, &word, max.unwrap_or(config.truncation_degree))?
        }
        Command::Weights {
            space,
            k,
            paper_table,
        } => weights(&mut report, space, k, paper_table)?,
        Command::Identify { spec } => identify(&mut report, &spec)?,
        Command::OrbitSpan { .. } => orbit_span_cmd(&mut report)?,
        Command::LowerCentral { .. } => lower_central_cmd(&mut report)?,
        Command::Quotient { degree, .. } => quotient(&mut report, degree)?,
        Command::Verify => {
            let full = crate::verify::verify_all(&config)?;
            report.results = full.results;
            report.checks = full.checks;
            report.text = full.text;
        }
    }
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

fn word(text: &str) -> Result<GroupWord, CliError> {
    Ok(parse_word(text)?)
}

pub fn rational_grid(m: &jones_core::expansion::QMatrix) -> String {
    m.map(|x| x.clone()).to_string()
}

fn rho_eval(report: &mut Report, text: &str, specialize: Option<&str>) -> Result<(), CliError> {
    let w = word(text)?;
    match specialize {
        Some(s) => {
            let value = s.strip_prefix("t=").ok_or_else(|| {
                CliError::Usage(format!("--specialize expects t=<rational>, got {s:?}"))
            })?;
            let t = parse_rational(value)?;
            let m = rho_specialize(&w, &t)?;
            report.results = json!({
                "word": w.to_string(),
                "t": format_rational(&t),
                "matrix": json::rational_matrix(&m),
            });
            report.text = m.to_string();
        }
        None => {
            let m = rho_evaluate(&w);
            report.results = json!({
                "word": w.to_string(),
                "matrix": json::matrix(&m, json::laurent),
            });
            report.text = m.to_string();
            if w == GroupWord::psi0() {
                report.checks.push(Check::compare(
                    "rho(psi0) closed form",
                    Source::Published,
                    "equal",
                    if m == psi0_closed_form() {
                        "equal"
                    } else {
                        "different"
                    },
                ));
            }
        }
    }
    Ok(())
}

fn phi(report: &mut Report, text: &str) -> Result<(), CliError> {
    let w = word(text)?;
    let k = report.config.truncation_degree;
    let coeffs = phi_coefficients(&w, k);
    report.results = json!({
        "word": w.to_string(),
        "degree": k,
        "coefficients": coeffs.iter().map(json::rational_matrix).collect::<Vec<_>>(),
    });
    report.text = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| format!("h^{i}:\n{c}"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(())
}

fn delta(report: &mut Report, text: &str, k: usize) -> Result<(), CliError> {
    let w = word(text)?;
    let d = delta_k(&w, k)?;
    report.results = json!({
        "word": w.to_string(),
        "k": k,
        "matrix": json::rational_matrix(&d.matrix),
    });
    report.text = d.matrix.to_string();
    if k == 1 && w == GroupWord::psi0() {
        report.checks.push(Check::compare(
            "delta_1(psi0) = F diag(6,6,-24,6,6) F^-1",
            Source::Published,
            "equal",
            if d.matrix == expected_delta1_psi0() {
                "equal"
            } else {
                "different"
            },
        ));
    }
    Ok(())
}

fn fdeg(report: &mut Report, text: &str, max: usize) -> Result<(), CliError> {
    let w = word(text)?;
    let (value, line) = match filtration_degree(&w, max)? {
        FiltrationDegree::Exact(k) => (json!(k), format!("filtration degree {k}")),
        FiltrationDegree::ExceedsBound(m) => (
            json!(format!(">{m}")),
            format!("filtration degree exceeds {m}"),
        ),
    };
    report.results = json!({ "word": w.to_string(), "max": max, "degree": value });
    report.text = line;
    Ok(())
}

pub fn gamma02() -> Result<Submodule, CliError> {
    Ok(highest_weight_submodule(&e(1, 2))?)
}

/// `C_1 = Γ_{0,2}`, `C_{k+1} = [C_1, C_k]`.
pub fn lower_central(k: usize) -> Result<Submodule, CliError> {
    if k == 0 {
        return Err(CliError::Usage(
            "lower central series starts at k = 1".into(),
        ));
    }
    let c1 = gamma02()?;
    let mut c = c1.clone();
    for _ in 1..k {
        c = bracket_module(&c1, &c)?;
    }
    Ok(c)
}

/// `c e_ij` terms, e.g. `e11 - e22`.
pub fn end_vector_text(v: &[BigRational]) -> String {
    let mut out = String::new();
    for (idx, c) in v.iter().enumerate() {
        if c == &BigRational::from_integer(0.into()) {
            continue;
        }
        let (i, j) = (idx / 5 + 1, idx % 5 + 1);
        let negative = c < &BigRational::from_integer(0.into());
        let abs = if negative { -c.clone() } else { c.clone() };
        let coeff = if abs == BigRational::from_integer(1.into()) {
            String::new()
        } else {
            format_rational(&abs)
        };
        if out.is_empty() {
            out.push_str(if negative { "-" } else { "" });
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&format!("{coeff}e{i}{j}"));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub const TABLE1_DIMS: [usize; 13] = [1, 2, 2, 2, 1, 2, 5, 2, 1, 2, 2, 2, 1];
pub const TABLE2_DIMS: [usize; 13] = [1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1];

fn dims_text(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn weights(report: &mut Report, space: Space, k: usize, paper_table: bool) -> Result<(), CliError> {
    let (module, published) = match space {
        Space::Full => (Submodule::full(), Some((table1(), TABLE1_DIMS))),
        Space::Gamma02 => (gamma02()?, Some((table2(), TABLE2_DIMS))),
        Space::Bracket => (lower_central(k)?, None),
    };
    let table = weight_table(&module)?;
    let mut rows = Vec::new();
    let mut lines = vec![format!("{:<12} {:>3}  basis", "weight", "dim")];
    for (w, span) in &table.rows {
        let basis: Vec<String> = span.basis().iter().map(|v| end_vector_text(v)).collect();
        let mut row = json!({
            "weight": w.to_string(),
            "dim": span.dim(),
            "basis": span.basis().iter().map(|v| json::vector(v)).collect::<Vec<_>>(),
        });
        let mut shown = basis.join(", ");
        if paper_table {
            if let Some((table, _)) = &published {
                if let Some((_, vs)) = table.iter().find(|(pw, _)| pw == w) {
                    let matches = RationalSpan::from_vectors(END_DIM, vs) == *span;
                    let published: Vec<String> = vs.iter().map(|v| end_vector_text(v)).collect();
                    row["published_basis"] =
                        Value::Array(published.iter().map(|s| json!(s)).collect());
                    row["matches_published"] = json!(matches);
                    shown = format!(
                        "{}  [{}]",
                        published.join(", "),
                        if matches { "match" } else { "MISMATCH" }
                    );
                }
            }
        }
        rows.push(row);
        lines.push(format!(
            "{:<12} {:>3}  {}",
            w.to_string(),
            span.dim(),
            shown
        ));
    }
    lines.push(format!("{:<12} {:>3}", "total", table.total()));
    report.results = json!({ "space": format!("{space:?}").to_lowercase(), "rows": rows, "total": table.total() });
    report.text = lines.join("\n");
    if let Some((published, dims)) = published {
        let actual: Vec<usize> = table.rows.iter().map(|(_, s)| s.dim()).collect();
        report.checks.push(Check::compare(
            "weight-space dimensions",
            Source::Published,
            dims_text(&dims),
            dims_text(&actual),
        ));
        let spans_equal = published.iter().all(|(w, vs)| {
            table
                .get(*w)
                .is_some_and(|s| *s == RationalSpan::from_vectors(END_DIM, vs))
        });
        report.checks.push(Check::compare(
            "weight spaces equal published spans",
            Source::Published,
            "equal",
            if spans_equal { "equal" } else { "different" },
        ));
    }
    Ok(())
}

pub fn parse_submodule(spec: &str, config: &RunConfig) -> Result<Submodule, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "unknown submodule {spec:?}; expected full, gamma02, bracket:K, hw:IJ or orbit"
        ))
    };
    match spec {
        "full" => Ok(Submodule::full()),
        "gamma02" => gamma02(),
        "orbit" => Ok(Submodule::new(orbit_span(config.span_depth)?.span)?),
        _ => {
            if let Some(k) = spec.strip_prefix("bracket:") {
                lower_central(k.parse().map_err(|_| bad())?)
            } else if let Some(ij) = spec.strip_prefix("hw:") {
                let digits: Vec<usize> = ij
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(bad)?;
                match digits[..] {
                    [i, j] if (1..=5).contains(&i) && (1..=5).contains(&j) => {
                        Ok(highest_weight_submodule(&e(i, j))?)
                    }
                    _ => Err(bad()),
                }
            } else {
                Err(bad())
            }
        }
    }
}

pub const FULL_DECOMPOSITION: [Gamma; 3] = [
    Gamma { a: 0, b: 2 },
    Gamma { a: 2, b: 0 },
    Gamma { a: 0, b: 0 },
];

/// Renders labels the way [`Decomposition`] displays itself.
pub fn labels_text(labels: &[Gamma]) -> String {
    labels
        .iter()
        .map(|g| format!("{g}({})", g.dim()))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn decomposition_json(d: &Decomposition) -> Value {
    Value::Array(
        d.constituents
            .iter()
            .map(|c| json!({ "module": c.gamma.to_string(), "dim": c.gamma.dim(), "multiplicity": c.multiplicity }))
            .collect(),
    )
}

fn identify(report: &mut Report, spec: &str) -> Result<(), CliError> {
    let module = parse_submodule(spec, &report.config)?;
    let d = identify_module(&module)?;
    report.results =
        json!({ "spec": spec, "dim": module.dim(), "constituents": decomposition_json(&d) });
    report.text = format!("dim {} = {d}", module.dim());
    if spec == "full" {
        report.checks.push(Check::compare(
            "End decomposition",
            Source::Published,
            labels_text(&FULL_DECOMPOSITION),
            &d,
        ));
    }
    Ok(())
}

pub fn orbit_span_check(depth: usize) -> Result<(Check, Value, String), CliError> {
    let r = orbit_span(depth)?;
    let actual = format!(
        "dim {}, {}, {}",
        r.span.dim(),
        if r.stable { "stable" } else { "not stable" },
        if r.equals_gamma02 {
            "equals Gamma_{0,2}"
        } else {
            "differs from Gamma_{0,2}"
        }
    );
    let mut check = Check::compare(
        "orbit span of delta_1(psi0)",
        Source::Published,
        "dim 14, stable, equals Gamma_{0,2}",
        &actual,
    );
    if !r.stable {
        check = check.with_status(format!(
            "insufficient depth: rank {} after word length {}",
            r.span.dim(),
            r.depth
        ));
    }
    let value = json!({
        "dim": r.span.dim(),
        "depth": r.depth,
        "orbit_size": r.orbit_size,
        "stable": r.stable,
        "equals_gamma02": r.equals_gamma02,
    });
    let text = format!(
        "span dim {} after word length {} ({} orbit vectors), {}",
        r.span.dim(),
        r.depth,
        r.orbit_size,
        if r.stable {
            "stable under all generators"
        } else {
            "not yet stable"
        }
    );
    Ok((check, value, text))
}

fn orbit_span_cmd(report: &mut Report) -> Result<(), CliError> {
    let (check, value, text) = orbit_span_check(report.config.span_depth)?;
    report.results = value;
    report.text = text;
    report.checks.push(check);
    Ok(())
}

pub fn lower_central_check(max_k: usize) -> Result<(Check, Value, String), CliError> {
    let r = lower_central_series(max_k)?;
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|(k, dim, d)| json!({ "k": k, "dim": dim, "constituents": decomposition_json(d) }))
        .collect();
    let text = r
        .rows
        .iter()
        .map(|(k, dim, d)| format!("C_{k}  dim {dim:>2}  {d}"))
        .collect::<Vec<_>>()
        .join("\n");
    let expected: Vec<String> = (1..=max_k)
        .map(|k| labels_text(&[jones_core::sp4::expected_constituent(k)]))
        .collect();
    let actual: Vec<String> = r.rows.iter().map(|(_, _, d)| d.to_string()).collect();
    let check = Check::compare(
        format!("lower central series alternation k <= {max_k}"),
        Source::Published,
        expected.join(", "),
        actual.join(", "),
    );
    Ok((check, Value::Array(rows), text))
}

fn lower_central_cmd(report: &mut Report) -> Result<(), CliError> {
    let (check, value, text) = lower_central_check(report.config.max_k)?;
    report.results = value;
    report.text = text;
    report.checks.push(check);
    Ok(())
}

fn divisors_json(d: &[jones_core::arith::BigInt]) -> Value {
    Value::Array(d.iter().map(json::integer).collect())
}

fn divisors_text(d: &[jones_core::arith::BigInt]) -> String {
    d.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Runs the degree-`d` quotient computation; returns the order check, the
/// payload and a text summary.
pub fn quotient_check(
    config: &RunConfig,
    degree: u8,
) -> Result<(Check, Value, String, Option<u64>), CliError> {
    let (order, value, text) = if degree == 1 {
        let r = cyclic_order_degree1(config.lattice_depth, config.order_cap)?;
        let divisors = r.lattices.elementary_divisors()?;
        let value = json!({
            "degree": 1,
            "order": r.order.to_string(),
            "rank_l": r.lattices.l.rank(),
            "rank_l_prime": r.lattices.l_prime.rank(),
            "elementary_divisors": divisors_json(&divisors),
            "stabilization_depth": r.lattices.depth,
            "orbit_size": r.lattices.orbit_size,
            "stable": r.lattices.stable,
        });
        let text = format!(
            "order {}\nrank L = {}, rank L' = {}\nL/L' divisors [{}]\nstabilized at word length {} ({} orbit vectors), {}",
            r.order,
            r.lattices.l.rank(),
            r.lattices.l_prime.rank(),
            divisors_text(&divisors),
            r.lattices.depth,
            r.lattices.orbit_size,
            if r.lattices.stable { "closed under all generators" } else { "not closed" }
        );
        (r.order, value, text)
    } else {
        let r = cyclic_order_degree2(config.degree2_depth, config.order_cap)?;
        let a_div = rational_quotient_divisors(
            &r.image.degree1_lattice(),
            &r.commutators.degree1_lattice(),
        )?;
        let b_div = rational_quotient_divisors(r.image.central(), r.commutators.central())?;
        let value = json!({
            "degree": 2,
            "order": r.order.to_string(),
            "image": { "rank_a": r.image.degree1_rank(), "rank_b": r.image.central_rank() },
            "commutators": { "rank_a": r.commutators.degree1_rank(), "rank_b": r.commutators.central_rank() },
            "elementary_divisors_a": divisors_json(&a_div),
            "elementary_divisors_b": divisors_json(&b_div),
            "seed_depth": config.degree2_depth,
            "seeds": r.seeds,
        });
        let text = format!(
            "order {}\nimage: rank A = {}, rank B = {}\ncommutators: rank A = {}, rank B = {}\nA divisors [{}], B divisors [{}]\n{} commutator seeds from words of length <= {}",
            r.order,
            r.image.degree1_rank(),
            r.image.central_rank(),
            r.commutators.degree1_rank(),
            r.commutators.central_rank(),
            divisors_text(&a_div),
            divisors_text(&b_div),
            r.seeds,
            config.degree2_depth
        );
        (r.order, value, text)
    };
    let check = Check::compare(
        format!("degree-{degree} quotient order"),
        Source::Published,
        10,
        order,
    );
    Ok((check, value, text, order.finite()))
}

fn quotient(report: &mut Report, degree: u8) -> Result<(), CliError> {
    let (check, value, text, _) = quotient_check(&report.config, degree)?;
    report.results = value;
    report.text = text;
    report.checks.push(check);
    Ok(())
}
