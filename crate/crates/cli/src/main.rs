mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use clifford_twist::classify::classify;
use clifford_twist::dirac::{
    dirac_apply, dirac_component_form, dirac_curl_form, laplacian, monomials_up_to, parse_spinor,
    PolySpinor,
};
use clifford_twist::process::{
    closed_associator, closed_braiding, cochain_difference, iterate_process, iterate_signature,
};
use clifford_twist::spinor::{
    exterior_matrices, full_rep_faithfulness, generator_matrices, grading_operator,
    homomorphism_witness, relation_witness, super_degree_sign, MAX_FAITHFUL_DIM, MAX_SPINOR_DIM,
};
use clifford_twist::suites::{acceptance_suite_names, find_suite, SuiteConfig, SUITES};
use clifford_twist::{
    blade_name, parse_expression, CliffordAlgebra, Cochain, Error, GroupElement, Matrix,
    Multivector, Scalar, Signature,
};

use report::{CliError, Report};

/// Largest `n` for which `table` prints the full product table.
const TABLE_MAX_N: usize = 6;
/// Largest `n` for which `process` decides associativity exhaustively.
const PROCESS_ASSOC_MAX_N: usize = 6;
/// Largest `n` for which `process --verify clifford` compares every pair.
const PROCESS_EXHAUSTIVE_MAX_N: usize = 8;
/// Triples listed by `process --show assoc`.
const ASSOC_SHOW_LIMIT: usize = 32;

#[derive(Parser)]
#[command(name = "clifford-twist", version, about = "Exact Clifford algebras as twisted group algebras of Z_2^n over Q(i)")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SignatureArg {
    /// "+-+-" shorthand or a comma-separated list of scalars, e.g. "2,-1/3,i".
    #[arg(long, short = 's', allow_hyphen_values = true, default_value = "")]
    signature: String,
}

impl SignatureArg {
    fn parse(&self) -> Result<Signature, CliError> {
        self.signature.parse().map_err(CliError::Input)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "e1*e2 - e2*e1".
    Eval {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(allow_hyphen_values = true)]
        expression: String,
    },
    /// Print the blade product table.
    Table {
        #[command(flatten)]
        sig: SignatureArg,
    },
    /// Run named verification suites.
    Verify {
        /// Restrict signature-indexed suites to this signature.
        #[arg(long, short = 's', allow_hyphen_values = true)]
        signature: Option<String>,
        /// Suite names; repeat or separate with commas.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Run every suite used by the acceptance criteria.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// List the available suites.
        #[arg(long, conflicts_with_all = ["suite", "all"])]
        list: bool,
        /// Override the suite's cap on n.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Iterate the doubling process from the ground field.
    Process {
        /// One q per step, e.g. "+,-,+" or "2,-1/3".
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        /// Tables to print; repeat or separate with commas.
        #[arg(long, value_enum, value_delimiter = ',')]
        show: Vec<Show>,
        /// Checks to run; repeat or separate with commas.
        #[arg(long, value_enum, value_delimiter = ',')]
        verify: Vec<ProcessCheck>,
    },
    /// Identify C(V, q) over Q(i) as M_d or M_d + M_d.
    Classify {
        #[command(flatten)]
        sig: SignatureArg,
    },
    /// The spinor module of C(V + V, q + q) on C(V, q).
    Spinor {
        #[command(flatten)]
        sig: SignatureArg,
        #[arg(long, value_enum, default_value_t = Model::Twisted)]
        model: Model,
        /// Checks to run; bare --check runs all of them.
        #[arg(long, value_enum, value_delimiter = ',', num_args = 0..)]
        check: Option<Vec<SpinorCheck>>,
        /// Print the generator matrices; "json" forces JSON output.
        #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "text")]
        emit: Option<Emit>,
    },
    /// The Dirac operator on quaternion-valued polynomials in x1..x4.
    Dirac {
        /// Check D^2 = -Laplacian on all monomial spinors.
        #[arg(long)]
        check_square: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Apply D to a spinor such as "x1^2*e1 - 3*x2*x4".
        #[arg(long, allow_hyphen_values = true)]
        apply: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    /// F(x, y) on all pairs.
    Cochain,
    /// Triples with a nontrivial associator.
    Assoc,
    /// R(x, y) on all pairs.
    Braiding,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProcessCheck {
    /// Closed associator and braiding of the last step against direct values.
    ClosedForms,
    /// The result against the Clifford cochain of the same q's.
    Clifford,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    /// Left multiplication by V and graded right multiplication by V.
    #[value(alias = "lr")]
    Twisted,
    /// Wedge and interior products on the exterior algebra.
    Exterior,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpinorCheck {
    /// Relations of C(V + V, q + q).
    Relations,
    /// The action is a faithful homomorphism (n <= 3).
    Faithful,
    /// Twisted and exterior models agree; top (x) top is lambda S.
    Compare,
}

/// The name clap uses for a value.
trait ValueName: ValueEnum {
    fn name(&self) -> String {
        self.to_possible_value().expect("no skipped values").get_name().to_string()
    }
}

impl<T: ValueEnum> ValueName for T {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json
        || matches!(
            cli.command,
            Command::Spinor {
                emit: Some(Emit::Json),
                ..
            }
        );
    let start = Instant::now();
    let outcome = run(&cli);
    let elapsed = cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0);
    match outcome {
        Ok(report) => report.emit(json, elapsed),
        Err(e) => e.emit(json),
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Eval { sig, expression } => eval(&sig.parse()?, expression),
        Command::Table { sig } => table(&sig.parse()?),
        Command::Verify {
            signature,
            suite,
            all,
            list,
            max_n,
        } => {
            if *list {
                return Ok(list_suites());
            }
            let names: Vec<String> = if *all {
                acceptance_suite_names().into_iter().map(String::from).collect()
            } else if suite.is_empty() {
                return Err(CliError::Usage("give --suite <name>, --all or --list".into()));
            } else {
                suite.clone()
            };
            let signature = signature
                .as_deref()
                .map(str::parse)
                .transpose()
                .map_err(CliError::Input)?;
            let cfg = SuiteConfig {
                signature,
                max_n: *max_n,
                seed: cli.seed,
            };
            verify(names, &cfg)
        }
        Command::Process { steps, show, verify } => process(steps, show, verify, cli.seed),
        Command::Classify { sig } => classify_cmd(&sig.parse()?),
        Command::Spinor {
            sig,
            model,
            check,
            emit,
        } => {
            let checks = match check {
                Some(c) if c.is_empty() => vec![SpinorCheck::Relations, SpinorCheck::Faithful, SpinorCheck::Compare],
                Some(c) => c.clone(),
                None => Vec::new(),
            };
            spinor(&sig.parse()?, *model, &checks, *emit)
        }
        Command::Dirac {
            check_square,
            max_degree,
            apply,
        } => dirac(*check_square, *max_degree, apply.as_deref()),
    }
}

/// `{ blade: coefficient }` in mask order.
fn multivector_json(m: &Multivector) -> Value {
    Value::Object(m.terms().map(|(x, c)| (blade_name(x), json!(c.to_string()))).collect())
}

fn eval(sig: &Signature, src: &str) -> Result<Report, CliError> {
    let alg = CliffordAlgebra::new(sig);
    let value = parse_expression(src, alg.algebra()).map_err(CliError::Input)?;
    let mut r = Report::new("eval", json!({ "signature": sig.to_string(), "expression": src }));
    r.line(value.to_string());
    r.results = json!({ "value": value.to_string(), "terms": multivector_json(&value) });
    Ok(r)
}

fn table(sig: &Signature) -> Result<Report, CliError> {
    let n = sig.len();
    if n > TABLE_MAX_N {
        return Err(CliError::Input(Error::TooLarge {
            what: "product table",
            n,
            limit: TABLE_MAX_N,
        }));
    }
    let alg = CliffordAlgebra::new(sig);
    let size = 1u32 << n;
    let names: Vec<String> = (0..size).map(blade_name).collect();
    let rows: Vec<Vec<String>> = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| (&alg.basis(x) * &alg.basis(y)).to_string())
                .collect()
        })
        .collect();
    let mut r = Report::new("table", json!({ "signature": sig.to_string() }));
    let width = rows
        .iter()
        .flatten()
        .chain(names.iter())
        .map(String::len)
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    r.line(format!("{} | {}", pad(""), names.iter().map(|s| pad(s)).collect::<Vec<_>>().join(" ")));
    r.line(format!("{}-+-{}", "-".repeat(width), "-".repeat((width + 1) * size as usize - 1)));
    for (x, row) in rows.iter().enumerate() {
        r.line(format!("{} | {}", pad(&names[x]), row.iter().map(|s| pad(s)).collect::<Vec<_>>().join(" ")));
    }
    r.results = json!({ "blades": names, "rows": rows });
    Ok(r)
}

fn list_suites() -> Report {
    let mut r = Report::new("verify", json!({ "list": true }));
    let accepted = acceptance_suite_names();
    let mut items = Vec::new();
    for s in SUITES {
        let cap = s.default_max_n.map_or("-".to_string(), |n| n.to_string());
        r.line(format!("{:<22} max_n {:<3} {}", s.name, cap, s.description));
        items.push(json!({
            "suite": s.name,
            "description": s.description,
            "default_max_n": s.default_max_n,
            "acceptance": accepted.contains(&s.name),
        }));
    }
    r.results = Value::Array(items);
    r
}

fn verify(mut names: Vec<String>, cfg: &SuiteConfig) -> Result<Report, CliError> {
    names.sort();
    names.dedup();
    let suites = names
        .iter()
        .map(|n| find_suite(n).ok_or_else(|| CliError::Usage(format!("unknown suite {n:?}; see verify --list"))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut r = Report::new(
        "verify",
        json!({
            "suites": names,
            "signature": cfg.signature.as_ref().map(Signature::to_string),
            "max_n": cfg.max_n,
            "seed": cfg.seed,
        }),
    );
    let mut results = Vec::new();
    for suite in suites {
        let out = suite.run(cfg).map_err(CliError::Input)?;
        r.line(format!(
            "{} {} ({} cases)",
            if out.passed { "PASS" } else { "FAIL" },
            out.name,
            out.cases
        ));
        if let Some(w) = &out.witness {
            r.line(format!("    witness: {w}"));
            r.witnesses.push(json!({ "suite": out.name, "witness": w }));
            r.passed = false;
        }
        for note in &out.notes {
            r.line(format!("    {note}"));
        }
        results.push(json!({
            "suite": out.name,
            "passed": out.passed,
            "cases": out.cases,
            "notes": out.notes,
        }));
    }
    r.results = Value::Array(results);
    Ok(r)
}

fn process(steps: &str, show: &[Show], checks: &[ProcessCheck], seed: u64) -> Result<Report, CliError> {
    let sig: Signature = steps.parse().map_err(CliError::Input)?;
    let n = sig.len();
    let spec = if sig.is_unit() {
        iterate_signature(&sig)
    } else {
        iterate_process(sig.values())
    }
    .map_err(CliError::Input)?;
    let f = spec.cochain();
    let show_names: Vec<String> = show.iter().map(|s| s.name()).collect();
    let check_names: Vec<String> = checks.iter().map(|c| c.name()).collect();
    let mut r = Report::new(
        "process",
        json!({ "steps": sig.to_string(), "show": show_names, "verify": check_names, "seed": seed }),
    );
    let squares: Vec<String> = (0..n).map(|i| f.value(1 << i, 1 << i).to_string()).collect();
    let grading: Vec<String> = (0..n).map(|i| spec.s(1 << i).to_string()).collect();
    let associative = if n <= PROCESS_ASSOC_MAX_N {
        Some(f.is_cocycle().map_err(CliError::Input)?)
    } else {
        None
    };
    r.line(format!("dimension 2^{n} = {}", 1u64 << n));
    r.line(format!("generator squares: [{}]", squares.join(", ")));
    r.line(format!("grading on generators: [{}]", grading.join(", ")));
    match associative {
        Some(a) => r.line(format!("associative: {a}")),
        None => r.line(format!("associative: not checked above n = {PROCESS_ASSOC_MAX_N}")),
    }
    let mut results = json!({
        "n": n,
        "generator_squares": squares,
        "grading": grading,
        "associative": associative,
    });

    if !show.is_empty() && n > TABLE_MAX_N {
        return Err(CliError::Input(Error::TooLarge {
            what: "structure table",
            n,
            limit: TABLE_MAX_N,
        }));
    }
    let size = 1u32 << n;
    for s in show {
        match s {
            Show::Cochain | Show::Braiding => {
                let value = |x, y| match s {
                    Show::Cochain => f.value(x, y),
                    _ => f.braiding_value(x, y),
                };
                let rows: Vec<Vec<String>> = (0..size)
                    .map(|x| (0..size).map(|y| value(x, y).to_string()).collect())
                    .collect();
                let label = if *s == Show::Cochain { "F(x, y)" } else { "R(x, y)" };
                r.line(format!("{label}, rows x and columns y in mask order:"));
                for row in &rows {
                    r.line(format!("  {}", row.join(" ")));
                }
                results[s.name()] = json!(rows);
            }
            Show::Assoc => {
                let mut triples = Vec::new();
                for x in 0..size {
                    for y in 0..size {
                        for z in 0..size {
                            let phi = f.coboundary_value(x, y, z);
                            if !phi.is_one() {
                                triples.push((x, y, z, phi));
                            }
                        }
                    }
                }
                r.line(format!("associator differs from 1 on {} triples", triples.len()));
                for (x, y, z, phi) in triples.iter().take(ASSOC_SHOW_LIMIT) {
                    r.line(format!("  phi({}, {}, {}) = {phi}", blade_name(*x), blade_name(*y), blade_name(*z)));
                }
                results["assoc"] = json!({
                    "nontrivial": triples.len(),
                    "triples": triples
                        .iter()
                        .take(ASSOC_SHOW_LIMIT)
                        .map(|(x, y, z, phi)| json!([blade_name(*x), blade_name(*y), blade_name(*z), phi.to_string()]))
                        .collect::<Vec<_>>(),
                });
            }
        }
    }

    for c in checks {
        let (ok, detail, witness) = match c {
            ProcessCheck::ClosedForms => closed_forms_check(&sig)?,
            ProcessCheck::Clifford => {
                let want = Cochain::clifford(&sig);
                let diff = if n <= PROCESS_EXHAUSTIVE_MAX_N {
                    cochain_difference(f, &want).map_err(CliError::Input)?
                } else {
                    sampled_difference(f, &want, n, seed)
                };
                let w = diff.map(|(x, y)| json!({ "x": blade_name(x), "y": blade_name(y) }));
                (diff.is_none(), format!("matches the Clifford cochain of C({sig})"), w)
            }
        };
        r.line(format!("{} {}: {detail}", if ok { "PASS" } else { "FAIL" }, c.name()));
        if let Some(w) = witness {
            r.passed = false;
            r.witnesses.push(json!({ "check": c.name(), "witness": w }));
        }
        results[c.name()] = json!(ok);
    }
    r.results = results;
    Ok(r)
}

/// Checks the closed associator and braiding of the last doubling step on
/// every triple and pair.
fn closed_forms_check(sig: &Signature) -> Result<(bool, String, Option<Value>), CliError> {
    let n = sig.len();
    if n == 0 {
        return Err(CliError::Usage("closed-forms needs at least one step".into()));
    }
    if n > TABLE_MAX_N {
        return Err(CliError::Input(Error::TooLarge {
            what: "closed-form check",
            n,
            limit: TABLE_MAX_N,
        }));
    }
    let bar = iterate_process(sig.values()).map_err(CliError::Input)?;
    let f = bar.cochain();
    let elems: Vec<GroupElement> = GroupElement::all(n).collect();
    let mut count = 0u64;
    for &x in &elems {
        for &y in &elems {
            count += 1;
            if closed_braiding(&bar, x, y).map_err(CliError::Input)? != f.braiding_value(x.mask(), y.mask()) {
                let w = json!({ "braiding": [blade_name(x.mask()), blade_name(y.mask())] });
                return Ok((false, "closed braiding differs".into(), Some(w)));
            }
            for &z in &elems {
                count += 1;
                let closed = closed_associator(&bar, x, y, z).map_err(CliError::Input)?;
                if closed != f.coboundary_value(x.mask(), y.mask(), z.mask()) {
                    let w = json!({ "associator": [blade_name(x.mask()), blade_name(y.mask()), blade_name(z.mask())] });
                    return Ok((false, "closed associator differs".into(), Some(w)));
                }
            }
        }
    }
    Ok((true, format!("{count} closed-form values agree with direct evaluation"), None))
}

/// Compares `10^4` seeded random pairs.
fn sampled_difference(a: &Cochain, b: &Cochain, n: usize, seed: u64) -> Option<(u32, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1u32 << n;
    (0..10_000)
        .map(|_| (rng.gen_range(0..size), rng.gen_range(0..size)))
        .find(|&(x, y)| a.value(x, y) != b.value(x, y))
}


fn classify_cmd(sig: &Signature) -> Result<Report, CliError> {
    let c = classify(&CliffordAlgebra::new(sig)).map_err(CliError::Input)?;
    let mut r = Report::new("classify", json!({ "signature": sig.to_string() }));
    r.line(c.label.to_string());
    if let clifford_twist::classify::AlgebraLabel::Unclassified(why) = &c.label {
        r.line(format!("    {why}"));
    }
    r.results = json!({
        "label": c.label.to_string(),
        "center_dim": c.center_dim,
        "mu": c.mu.as_ref().map(Scalar::to_string),
        "checks": c.checks.iter().map(|(k, v)| json!({ "check": k, "passed": v })).collect::<Vec<_>>(),
    });
    Ok(r)
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn matrix_lines(m: &Matrix) -> Vec<String> {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("  [{}]", padded.join(" "))
        })
        .collect()
}

fn spinor(sig: &Signature, model: Model, checks: &[SpinorCheck], emit: Option<Emit>) -> Result<Report, CliError> {
    let n = sig.len();
    if n > MAX_SPINOR_DIM {
        return Err(CliError::Input(Error::TooLarge {
            what: "spinor module",
            n,
            limit: MAX_SPINOR_DIM,
        }));
    }
    let alg = CliffordAlgebra::new(sig);
    let gens = match model {
        Model::Twisted => generator_matrices(&alg),
        Model::Exterior => exterior_matrices(&alg),
    }
    .map_err(CliError::Input)?;
    let check_names: Vec<String> = checks.iter().map(|c| c.name()).collect();
    let mut r = Report::new(
        "spinor",
        json!({
            "signature": sig.to_string(),
            "model": model.name(),
            "check": check_names,
            "emit": emit.map(|e| e.name()),
        }),
    );
    let doubled = sig.concat(sig).map_err(CliError::Input)?;
    r.line(format!(
        "C({doubled}) acting on C({sig}): {} generators of size {}",
        gens.len(),
        1u64 << n
    ));
    let (top, lambda) = grading_operator(&alg).map_err(CliError::Input)?;
    r.line(format!("grading eigenvalue lambda = {lambda}"));
    let mut results = json!({
        "generators": gens.len(),
        "size": 1u64 << n,
        "lambda": lambda.to_string(),
    });
    if emit.is_some() {
        for (k, g) in gens.iter().enumerate() {
            r.line(format!("generator {}:", k + 1));
            for l in matrix_lines(g) {
                r.line(l);
            }
        }
        results["matrices"] = Value::Array(gens.iter().map(matrix_json).collect());
    }
    let mut out = Vec::new();
    for c in checks {
        let mut parts: Vec<(&str, bool, Option<String>)> = Vec::new();
        match c {
            SpinorCheck::Relations => {
                let w = relation_witness(&alg, &gens);
                parts.push(("relations", w.is_none(), w.map(|(i, j)| format!("generators {} and {}", i + 1, j + 1))));
            }
            SpinorCheck::Faithful => {
                if n > MAX_FAITHFUL_DIM {
                    return Err(CliError::Input(Error::TooLarge {
                        what: "faithfulness check",
                        n,
                        limit: MAX_FAITHFUL_DIM,
                    }));
                }
                let w = homomorphism_witness(&alg).map_err(CliError::Input)?;
                parts.push(("homomorphism", w.is_none(), w.map(|(x, y)| format!("({}, {})", blade_name(x), blade_name(y)))));
                let f = full_rep_faithfulness(&alg).map_err(CliError::Input)?;
                parts.push(("faithful", f, (!f).then(|| "rank below 4^n".to_string())));
            }
            SpinorCheck::Compare => {
                let other = match model {
                    Model::Twisted => exterior_matrices(&alg),
                    Model::Exterior => generator_matrices(&alg),
                }
                .map_err(CliError::Input)?;
                let same = other == gens;
                parts.push(("twisted = exterior", same, (!same).then(|| "generator matrices differ".to_string())));
                let ok = top == super_degree_sign(n).scale(&lambda);
                parts.push(("top (x) top = lambda S", ok, (!ok).then(|| format!("lambda = {lambda}"))));
            }
        }
        for (name, ok, witness) in parts {
            r.line(format!("{} {name}", if ok { "PASS" } else { "FAIL" }));
            if let Some(w) = witness.filter(|_| !ok) {
                r.passed = false;
                r.witnesses.push(json!({ "check": name, "witness": w }));
            }
            out.push(json!({ "check": name, "passed": ok }));
        }
    }
    if !checks.is_empty() {
        results["checks"] = Value::Array(out);
    }
    r.results = results;
    Ok(r)
}


fn dirac(check_square: bool, max_degree: u32, apply: Option<&str>) -> Result<Report, CliError> {
    if !check_square && apply.is_none() {
        return Err(CliError::Usage("give --check-square or --apply <spinor>".into()));
    }
    let mut r = Report::new(
        "dirac",
        json!({ "check_square": check_square, "max_degree": max_degree, "apply": apply }),
    );
    let mut results = serde_json::Map::new();
    if let Some(src) = apply {
        let psi = parse_spinor(src).map_err(CliError::Input)?;
        let out = dirac_apply(&psi).map_err(CliError::Input)?;
        let forms_agree = out == dirac_component_form(&psi) && out == dirac_curl_form(&psi);
        r.line(out.to_string());
        if !forms_agree {
            r.passed = false;
            r.line("operator forms disagree".to_string());
            r.witnesses.push(json!({ "spinor": psi.to_string() }));
        }
        results.insert("input".into(), json!(psi.to_string()));
        results.insert("output".into(), json!(out.to_string()));
        results.insert("forms_agree".into(), json!(forms_agree));
    }
    if check_square {
        let minus_one = Scalar::from_int(-1);
        let mut checked = 0;
        let mut failed = None;
        for e in monomials_up_to(max_degree) {
            for blade in 0..4 {
                let psi = PolySpinor::basis_term(e, blade, Scalar::one());
                let dd = dirac_apply(&dirac_apply(&psi).map_err(CliError::Input)?).map_err(CliError::Input)?;
                let want = laplacian(&psi).map_err(CliError::Input)?.scale(&minus_one);
                checked += 1;
                if dd != want && failed.is_none() {
                    failed = Some(psi.to_string());
                }
            }
        }
        let ok = failed.is_none();
        r.line(format!(
            "{} D^2 = -Laplacian on {checked} monomial spinors of degree <= {max_degree}",
            if ok { "PASS" } else { "FAIL" }
        ));
        if let Some(w) = &failed {
            r.passed = false;
            r.witnesses.push(json!({ "spinor": w }));
        }
        results.insert("checked".into(), json!(checked));
        results.insert("square_is_minus_laplacian".into(), json!(ok));
    }
    r.results = Value::Object(results);
    Ok(r)
}
