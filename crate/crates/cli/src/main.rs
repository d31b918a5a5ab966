//! `rootpoly`: JSON in, JSON out.
//!
//! Exit codes: 0 success, 1 nonzero residual or oracle disagreement,
//! 2 construction obstructed, 3 no polynomial exists, 64 malformed input,
//! 65 semantic error (ring mismatch, equal roots, ...), 70 internal error.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rootpoly::{existence, json, oracle, Error, Matrix, RingDescriptor, RingElement};
use serde_json::{json, Value};

const EXIT_OK: u8 = 0;
const EXIT_NONZERO: u8 = 1;
const EXIT_OBSTRUCTED: u8 = 2;
const EXIT_NONEXISTENT: u8 = 3;
const EXIT_PARSE: u8 = 64;
const EXIT_SEMANTIC: u8 = 65;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "rootpoly", version, about = "Polynomials with prescribed right roots over non-commutative rings")]
struct Cli {
    /// Read the job from this file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a monic polynomial having every listed element as a right root.
    Construct {
        /// Include the per-step construction trace.
        #[arg(long)]
        trace: bool,
        /// Include the residual at every root.
        #[arg(long)]
        verify: bool,
        /// Pad with factors of x so the degree equals the number of roots.
        #[arg(long)]
        exact_degree: bool,
    },
    /// Decide whether x^2 + a1 x + a0 can have both matrices as roots.
    Quadratic {
        /// Use this a1 (matrix JSON) instead of the free-variables-zero solution.
        #[arg(long)]
        a1: Option<String>,
    },
    /// Decide whether a monic degree-n polynomial can have both matrices as roots.
    #[command(name = "degree-n")]
    DegreeN {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Evaluate a polynomial on the right at each element.
    Verify,
    /// Compare the rank criterion with exhaustive search over a finite matrix ring.
    #[command(name = "cross-check")]
    CrossCheck {
        #[arg(long)]
        n: Option<usize>,
        /// Upper bound on ring size and on coefficient tuples per pair.
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Quadratic { .. } => "quadratic",
            Command::DegreeN { .. } => "degree-n",
            Command::Verify => "verify",
            Command::CrossCheck { .. } => "cross-check",
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn parse_failure(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_PARSE, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_SEMANTIC,
        };
        Failure { code, message: e.to_string() }
    }
}

/// What a command produced: JSON lines for stdout and the exit code.
struct Outcome {
    lines: Vec<Value>,
    code: u8,
}

impl Outcome {
    fn single(value: Value, code: u8) -> Self {
        Outcome { lines: vec![value], code }
    }
}

struct Job {
    raw: Value,
}

impl Job {
    fn read(path: Option<&PathBuf>) -> Result<Job, Failure> {
        let text = match path {
            Some(p) => fs::read_to_string(p)
                .map_err(|e| parse_failure(format!("cannot read {}: {e}", p.display())))?,
            None => {
                let mut s = String::new();
                io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| parse_failure(format!("cannot read stdin: {e}")))?;
                s
            }
        };
        let raw: Value = serde_json::from_str(&text).map_err(|e| parse_failure(format!("invalid JSON: {e}")))?;
        if !raw.is_object() {
            return Err(parse_failure("job must be a JSON object"));
        }
        Ok(Job { raw })
    }

    fn check_command(&self, expected: &str) -> Result<(), Failure> {
        match self.raw.get("command") {
            None => Ok(()),
            Some(Value::String(c)) if c == expected => Ok(()),
            Some(other) => Err(Failure {
                code: EXIT_SEMANTIC,
                message: format!("job declares command {other} but {expected} was invoked"),
            }),
        }
    }

    fn ring(&self) -> Result<RingDescriptor, Failure> {
        let v = self.raw.get("ring").ok_or_else(|| parse_failure("missing \"ring\""))?;
        descriptor(v)
    }

    fn optional_ring(&self) -> Result<Option<RingDescriptor>, Failure> {
        self.raw.get("ring").map(descriptor).transpose()
    }

    fn elements(&self, ring: &RingDescriptor) -> Result<Vec<RingElement>, Failure> {
        let items = self
            .raw
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_failure("missing \"elements\" array"))?;
        Ok(items.iter().map(|v| json::decode_element(ring, v)).collect::<Result<Vec<_>, _>>()?)
    }

    fn n(&self, flag: Option<usize>) -> Result<Option<usize>, Failure> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw.get("n") {
            None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(|n| Some(n as usize))
                .ok_or_else(|| parse_failure(format!("\"n\" must be a nonnegative integer, got {v}"))),
        }
    }
}

/// Structural problems are parse errors; a well-formed but invalid
/// descriptor (composite modulus, k = 0) is semantic.
fn descriptor(v: &Value) -> Result<RingDescriptor, Failure> {
    let d: RingDescriptor =
        serde_json::from_value(v.clone()).map_err(|e| parse_failure(format!("ring descriptor: {e}")))?;
    d.validate()?;
    Ok(d)
}

fn matrix_pair(job: &Job) -> Result<(Matrix, Matrix), Failure> {
    let ring = job.ring()?;
    if ring.as_matrix_ring().is_none() {
        return Err(Error::NotMatrixRing(ring).into());
    }
    let elements = job.elements(&ring)?;
    match elements.as_slice() {
        [RingElement::Matrix(x1), RingElement::Matrix(x2)] => Ok((x1.clone(), x2.clone())),
        _ => Err(Failure {
            code: EXIT_SEMANTIC,
            message: format!("expected exactly 2 elements, got {}", elements.len()),
        }),
    }
}

fn report_outcome(report: &rootpoly::CriterionReport) -> Outcome {
    let code = if report.exists { EXIT_OK } else { EXIT_NONEXISTENT };
    Outcome::single(json::encode_report(report), code)
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let job = Job::read(cli.input.as_ref())?;
    job.check_command(cli.command.name())?;
    match &cli.command {
        Command::Construct { trace, verify, exact_degree } => {
            let ring = job.ring()?;
            let roots = job.elements(&ring)?;
            let result = rootpoly::construct_with_roots(&roots, *exact_degree)?;
            let mut out = serde_json::Map::new();
            out.insert("polynomial".into(), result.result.as_ref().map(json::encode_polynomial).into());
            if let Some(step) = result.obstruction() {
                out.insert(
                    "obstruction".into(),
                    json!({
                        "step": step.index,
                        "root_index": step.index + 1,
                        "evaluation_value": json::encode_element(&step.evaluation_value),
                    }),
                );
            }
            if *trace {
                out.insert("trace".into(), json::encode_trace(&result));
            }
            if *verify {
                if let Some(p) = &result.result {
                    let residuals = rootpoly::verify_roots(p, &roots)?;
                    out.insert(
                        "residuals".into(),
                        residuals.iter().map(json::encode_element).collect::<Vec<_>>().into(),
                    );
                }
            }
            let code = if result.result.is_some() { EXIT_OK } else { EXIT_OBSTRUCTED };
            Ok(Outcome::single(Value::Object(out), code))
        }
        Command::Quadratic { a1 } => {
            let (x1, x2) = matrix_pair(&job)?;
            let report = match a1 {
                None => existence::quadratic_existence(&x1, &x2)?,
                Some(text) => {
                    let v: Value = serde_json::from_str(text)
                        .map_err(|e| parse_failure(format!("--a1 is not valid JSON: {e}")))?;
                    let a1 = json::decode_matrix(x1.rows(), x1.field(), &v)?;
                    let plain = existence::quadratic_existence(&x1, &x2)?;
                    if !plain.exists {
                        plain
                    } else {
                        existence::quadratic_with_a1(&x1, &x2, &a1)?
                    }
                }
            };
            Ok(report_outcome(&report))
        }
        Command::DegreeN { n } => {
            let n = job.n(*n)?.ok_or_else(|| parse_failure("degree-n needs --n or \"n\""))?;
            let (x1, x2) = matrix_pair(&job)?;
            Ok(report_outcome(&existence::degree_n_existence(&x1, &x2, n)?))
        }
        Command::Verify => {
            let pv = job.raw.get("polynomial").ok_or_else(|| parse_failure("missing \"polynomial\""))?;
            if pv.get("ring").is_none() || !pv.get("coefficients").is_some_and(Value::is_array) {
                return Err(parse_failure("polynomial needs \"ring\" and a \"coefficients\" array"));
            }
            descriptor(&pv["ring"])?;
            let p = json::decode_polynomial(pv)?;
            if let Some(ring) = job.optional_ring()? {
                if ring != p.ring() {
                    return Err(Error::DescriptorMismatch { expected: ring, found: p.ring() }.into());
                }
            }
            let roots = job.elements(&p.ring())?;
            let residuals = rootpoly::verify_roots(&p, &roots)?;
            let all_zero = residuals.iter().all(RingElement::is_zero);
            let value = json!({
                "residuals": residuals.iter().map(json::encode_element).collect::<Vec<_>>(),
                "all_zero": all_zero,
            });
            Ok(Outcome::single(value, if all_zero { EXIT_OK } else { EXIT_NONZERO }))
        }
        Command::CrossCheck { n, cap } => {
            let ring = job.ring()?;
            let n = job.n(*n)?.unwrap_or(2);
            let report = oracle::cross_check_criterion(&ring, n, *cap)?;
            let mut lines: Vec<Value> = report.records.iter().map(json::encode_pair_record).collect();
            lines.push(json!({ "summary": json::encode_cross_check_summary(&report) }));
            let clean = report.disagreements().is_empty() && report.count_law_violations().is_empty();
            Ok(Outcome { lines, code: if clean { EXIT_OK } else { EXIT_NONZERO } })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            for line in &outcome.lines {
                let text = if cli.pretty {
                    serde_json::to_string_pretty(line)
                } else {
                    serde_json::to_string(line)
                };
                println!("{}", text.expect("JSON values serialize"));
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("rootpoly: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
