//! Command-line front end for the exact Lie bialgebra kernel: parse
//! element/tensor JSON, run bracket / Yang–Baxter / bialgebra checks, and
//! emit deterministic JSON reports.
//!
//! Exit codes: 0 on pass or successful computation, 1 when a check fails
//! (a nonzero defect, or a witness found where none was expected), 2 on
//! input or usage errors.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hamlie::json::{
    check_report_to_dto, h_element_to_dto, parse_bar_element, parse_h_element, parse_tensor,
    tensor_to_dto, to_json_string, CheckReportDto, ElementDto, TensorDto,
};
use hamlie::{
    annihilator_witness, anti_commutativity_defect, bracket, co_jacobi_defect,
    compatibility_defect, cybe, lemma23_harness, product, skew_closure_harness,
    triangular_from_pair, CheckReport, Error, RMatrix, Sampler,
};

#[derive(Parser)]
#[command(
    name = "hamlie",
    version,
    about = "Exact computations and checks for Hamiltonian-type Lie bialgebras",
    after_help = "Inputs are JSON documents; each command reads them in a fixed order \
                  (see the README). Reports are single-line JSON on stdout."
)]
struct JobSpec {
    #[command(subcommand)]
    command: Command,

    /// Input file path; repeat in the order the command expects.
    #[arg(long = "input", global = true, value_name = "PATH")]
    inputs: Vec<PathBuf>,

    /// Inline JSON input; repeat in the order the command expects
    /// (alternative to --input).
    #[arg(long = "inline", global = true, value_name = "JSON")]
    inline: Vec<String>,

    /// Expected ambient n, checked against every input.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Pair index p (1-based), for lemma23.
    #[arg(long, global = true)]
    p: Option<usize>,

    /// Bound K for monomial searches; defaults to coordinate spread + 2.
    #[arg(long = "K", global = true, value_name = "K")]
    k_bound: Option<u32>,

    /// Sample count for the randomized checks.
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,

    /// Seed for the randomized checks (echoed in the report).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket [x, y] of two H elements.
    #[command(name = "bracket")]
    Bracket,
    /// Poisson product u·v of two H̄ elements.
    #[command(name = "product")]
    Product,
    /// Cobracket Δ_r(x); inputs: skew tensor r, element x.
    #[command(name = "cobracket")]
    Cobracket,
    /// Yang–Baxter functional c(r) of an arity-2 tensor; exits 1 if nonzero.
    #[command(name = "cybe")]
    Cybe,
    /// Check the coboundary bialgebra axioms for a tensor r on seeded samples.
    #[command(name = "check-bialgebra")]
    CheckBialgebra,
    /// Build the triangular r = a⊗b − b⊗a from elements with [a, b] = b.
    #[command(name = "triangular")]
    Triangular,
    /// Search the canonical monomial family for x with x·c ≠ 0; exits 1 if found.
    #[command(name = "witness")]
    Witness,
    /// Bounded V^p-membership harness for an arity-2 tensor.
    #[command(name = "lemma23")]
    Lemma23,
    /// Bounded skew-closure harness for an arity-2 tensor.
    #[command(name = "skew-closure")]
    SkewClosure,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

fn cli_error(message: impl Into<String>) -> CliError {
    CliError(message.into())
}

struct Outcome {
    report: String,
    passed: bool,
}

fn main() -> ExitCode {
    let job = JobSpec::parse();
    let outcome = match run(&job) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = format!("{}\n", outcome.report);
    if let Some(path) = &job.output {
        if let Err(e) = fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{text}");
    }
    ExitCode::from(if outcome.passed { 0 } else { 1 })
}

fn run(job: &JobSpec) -> Result<Outcome, CliError> {
    let texts = input_texts(job)?;
    match job.command {
        Command::Bracket => run_bracket(job, &texts),
        Command::Product => run_product(job, &texts),
        Command::Cobracket => run_cobracket(job, &texts),
        Command::Cybe => run_cybe(job, &texts),
        Command::CheckBialgebra => run_check_bialgebra(job, &texts),
        Command::Triangular => run_triangular(job, &texts),
        Command::Witness => run_witness(job, &texts),
        Command::Lemma23 => run_lemma23(job, &texts),
        Command::SkewClosure => run_skew_closure(job, &texts),
    }
}

fn input_texts(job: &JobSpec) -> Result<Vec<String>, CliError> {
    if !job.inputs.is_empty() && !job.inline.is_empty() {
        return Err(cli_error("use either --input or --inline, not both"));
    }
    if !job.inline.is_empty() {
        return Ok(job.inline.clone());
    }
    job.inputs
        .iter()
        .map(|path| {
            fs::read_to_string(path)
                .map_err(|e| cli_error(format!("cannot read {}: {e}", path.display())))
        })
        .collect()
}

fn expect_inputs<'a>(
    texts: &'a [String],
    count: usize,
    usage: &str,
) -> Result<&'a [String], CliError> {
    if texts.len() != count {
        return Err(cli_error(format!(
            "expected {count} input(s) ({usage}), found {}",
            texts.len()
        )));
    }
    Ok(texts)
}

/// Every input of a job must share one ambient n (and match --n if given).
fn check_ambient(job: &JobSpec, ns: &[usize]) -> Result<usize, CliError> {
    let mut iter = ns.iter().copied();
    let first = iter
        .next()
        .ok_or_else(|| cli_error("no inputs to infer n from"))?;
    if iter.any(|n| n != first) {
        return Err(cli_error(format!(
            "inputs disagree on the ambient n: {ns:?}"
        )));
    }
    if let Some(expected) = job.n {
        if expected != first {
            return Err(cli_error(format!(
                "--n {expected} does not match the inputs' n = {first}"
            )));
        }
    }
    Ok(first)
}

#[derive(Serialize)]
struct ValueReport {
    command: &'static str,
    n: usize,
    result: ElementDto,
}

#[derive(Serialize)]
struct TensorReport {
    command: &'static str,
    n: usize,
    result: TensorDto,
}

#[derive(Serialize)]
struct CybeReport {
    command: &'static str,
    n: usize,
    passed: bool,
    result: TensorDto,
}

#[derive(Serialize)]
struct BialgebraReport {
    command: &'static str,
    n: usize,
    seed: u64,
    samples: usize,
    passed: bool,
    checks: Vec<CheckReportDto>,
}

#[derive(Serialize)]
struct TriangularReport {
    command: &'static str,
    n: usize,
    passed: bool,
    r: Option<TensorDto>,
    defect: Option<ElementDto>,
    description: String,
}

#[derive(Serialize)]
struct WitnessReport {
    command: &'static str,
    n: usize,
    k_bound: u32,
    passed: bool,
    witness: Option<ElementDto>,
}

#[derive(Serialize)]
struct HarnessReport {
    command: &'static str,
    n: usize,
    p: Option<usize>,
    k_bound: u32,
    samples: Option<usize>,
    seed: Option<u64>,
    report: CheckReportDto,
}

fn run_bracket(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 2, "two H elements x, y")?;
    let x = parse_h_element(&texts[0])?;
    let y = parse_h_element(&texts[1])?;
    let n = check_ambient(job, &[x.n(), y.n()])?;
    let result = bracket(&x, &y)?;
    Ok(Outcome {
        report: to_json_string(&ValueReport {
            command: "bracket",
            n,
            result: h_element_to_dto(&result),
        }),
        passed: true,
    })
}

fn run_product(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 2, "two H-bar elements u, v")?;
    let u = parse_bar_element(&texts[0])?;
    let v = parse_bar_element(&texts[1])?;
    let n = check_ambient(job, &[u.n(), v.n()])?;
    let result = product(&u, &v)?;
    Ok(Outcome {
        report: to_json_string(&ValueReport {
            command: "product",
            n,
            result: hamlie::json::bar_element_to_dto(&result),
        }),
        passed: true,
    })
}

fn run_cobracket(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 2, "a skew tensor r and an element x")?;
    let r = RMatrix::new(parse_tensor(&texts[0], Some(2))?)?;
    let x = parse_h_element(&texts[1])?;
    let n = check_ambient(job, &[r.n(), x.n()])?;
    let result = hamlie::cobracket(&r, &x)?;
    Ok(Outcome {
        report: to_json_string(&TensorReport {
            command: "cobracket",
            n,
            result: tensor_to_dto(&result),
        }),
        passed: true,
    })
}

fn run_cybe(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 1, "an arity-2 tensor r")?;
    let r = parse_tensor(&texts[0], Some(2))?;
    let n = check_ambient(job, &[r.n()])?;
    let c = cybe(&r)?;
    let passed = c.is_zero();
    Ok(Outcome {
        report: to_json_string(&CybeReport {
            command: "cybe",
            n,
            passed,
            result: tensor_to_dto(&c),
        }),
        passed,
    })
}

fn run_check_bialgebra(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 1, "an arity-2 tensor r")?;
    let r = RMatrix::raw(parse_tensor(&texts[0], Some(2))?)?;
    let n = check_ambient(job, &[r.n()])?;

    let mut checks = Vec::new();

    // Each axiom gets its own sampler so the sample streams coincide.
    let mut anti = CheckReport::pass(format!(
        "anti-commutativity: defect zero on {} samples",
        job.samples
    ));
    let mut sampler = Sampler::new(n, job.seed)?;
    for i in 0..job.samples {
        let x = sampler.h_monomial();
        let defect = anti_commutativity_defect(&r, &x)?;
        if !defect.is_zero() {
            anti = CheckReport::fail(
                Some(defect),
                Some(x),
                format!("anti-commutativity defect nonzero at sample {i}"),
            );
            break;
        }
    }
    checks.push(anti);

    let mut cojac = CheckReport::pass(format!(
        "co-Jacobi: defect zero on {} samples",
        job.samples
    ));
    let mut sampler = Sampler::new(n, job.seed)?;
    for i in 0..job.samples {
        let x = sampler.h_monomial();
        let defect = co_jacobi_defect(&r, &x)?;
        if !defect.is_zero() {
            cojac = CheckReport::fail(
                Some(defect),
                Some(x),
                format!("co-Jacobi defect nonzero at sample {i}"),
            );
            break;
        }
    }
    checks.push(cojac);

    let mut compat = CheckReport::pass(format!(
        "compatibility: defect zero on {} sample pairs",
        job.samples
    ));
    let mut sampler = Sampler::new(n, job.seed)?;
    for i in 0..job.samples {
        let x = sampler.h_monomial();
        let y = sampler.h_monomial();
        let defect = compatibility_defect(&r, &x, &y)?;
        if !defect.is_zero() {
            compat = CheckReport::fail(
                Some(defect),
                Some(x),
                format!("compatibility defect nonzero at sample pair {i}"),
            );
            break;
        }
    }
    checks.push(compat);

    let c = cybe(r.value())?;
    checks.push(if c.is_zero() {
        CheckReport::pass("classical Yang-Baxter equation: c(r) = 0")
    } else {
        CheckReport::fail(Some(c), None, "classical Yang-Baxter equation: c(r) != 0")
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(Outcome {
        report: to_json_string(&BialgebraReport {
            command: "check-bialgebra",
            n,
            seed: job.seed,
            samples: job.samples,
            passed,
            checks: checks.iter().map(check_report_to_dto).collect(),
        }),
        passed,
    })
}

fn run_triangular(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 2, "two H elements a, b with [a, b] = b")?;
    let a = parse_h_element(&texts[0])?;
    let b = parse_h_element(&texts[1])?;
    let n = check_ambient(job, &[a.n(), b.n()])?;
    match triangular_from_pair(&a, &b) {
        Ok(r) => Ok(Outcome {
            report: to_json_string(&TriangularReport {
                command: "triangular",
                n,
                passed: true,
                r: Some(tensor_to_dto(r.value())),
                defect: None,
                description: "r = a(x)b - b(x)a is skew and satisfies c(r) = 0".into(),
            }),
            passed: true,
        }),
        Err(Error::BracketConstraint { defect }) => Ok(Outcome {
            report: to_json_string(&TriangularReport {
                command: "triangular",
                n,
                passed: false,
                r: None,
                defect: Some(h_element_to_dto(&defect)),
                description: "constraint [a, b] = b violated; defect is [a, b] - b".into(),
            }),
            passed: false,
        }),
        Err(other) => Err(other.into()),
    }
}

fn run_witness(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 1, "a tensor c of any arity")?;
    let c = parse_tensor(&texts[0], None)?;
    let n = check_ambient(job, &[c.n()])?;
    let k_bound = job.k_bound.unwrap_or_else(|| c.coordinate_spread() + 2);
    let witness = annihilator_witness(&c, k_bound);
    let passed = witness.is_none();
    Ok(Outcome {
        report: to_json_string(&WitnessReport {
            command: "witness",
            n,
            k_bound,
            passed,
            witness: witness.as_ref().map(h_element_to_dto),
        }),
        passed,
    })
}

fn run_lemma23(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 1, "an arity-2 tensor v")?;
    let v = parse_tensor(&texts[0], Some(2))?;
    let n = check_ambient(job, &[v.n()])?;
    let p = job.p.ok_or_else(|| cli_error("lemma23 requires --p"))?;
    let k_bound = job.k_bound.unwrap_or_else(|| v.coordinate_spread() + 2);
    let report = lemma23_harness(&v, p, k_bound)?;
    let passed = report.passed;
    Ok(Outcome {
        report: to_json_string(&HarnessReport {
            command: "lemma23",
            n,
            p: Some(p),
            k_bound,
            samples: None,
            seed: None,
            report: check_report_to_dto(&report),
        }),
        passed,
    })
}

fn run_skew_closure(job: &JobSpec, texts: &[String]) -> Result<Outcome, CliError> {
    let texts = expect_inputs(texts, 1, "an arity-2 tensor r")?;
    let r = parse_tensor(&texts[0], Some(2))?;
    let n = check_ambient(job, &[r.n()])?;
    let k_bound = job.k_bound.unwrap_or_else(|| r.coordinate_spread() + 2);
    let mut sampler = Sampler::new(n, job.seed)?;
    let sample: Vec<_> = (0..job.samples).map(|_| sampler.h_element(2)).collect();
    let report = skew_closure_harness(&r, &sample, k_bound)?;
    let passed = report.passed;
    Ok(Outcome {
        report: to_json_string(&HarnessReport {
            command: "skew-closure",
            n,
            p: None,
            k_bound,
            samples: Some(job.samples),
            seed: Some(job.seed),
            report: check_report_to_dto(&report),
        }),
        passed,
    })
}
