//! Argument parsing and output assembly for the `lipsat` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::error::CliError;
use crate::exec;
use crate::job::{
    BinomialSpec, CertifyJob, CurveJob, HypersurfaceJob, IdealJob, Job, JobSpec, OutputFormat,
    ProductJob, SemigroupJob, SemigroupOp,
};
use crate::json;

#[derive(Parser, Debug)]
#[command(
    name = "lipsat",
    version,
    about = "Lipschitz saturation of toric singularities, computed on semigroups"
)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Saturate a curve, a product of curves or a hypersurface.
    #[command(subcommand)]
    Saturate(SaturateCmd),
    /// Invariants of a semigroup given by generators.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Emit or check arc certificates of non-membership.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Binomials of the toric ideal.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Run a job file, or re-run the input embedded in a JSON output.
    Run {
        /// Path to the job, `-` for stdin.
        #[arg(long, value_name = "PATH")]
        job: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum SaturateCmd {
    Curve {
        /// Coordinate supports, e.g. "6;9,11;9,11".
        #[arg(long)]
        supports: String,
        /// Validation box, e.g. "40".
        #[arg(long = "box", value_name = "W")]
        bounds: Option<String>,
    },
    Product {
        /// One factor curve per flag, supports as for `saturate curve`.
        #[arg(long = "curve", required = true, num_args = 1)]
        curves: Vec<String>,
        /// Validation box, e.g. "30x40".
        #[arg(long = "box", value_name = "WxH")]
        bounds: Option<String>,
    },
    Hypersurface {
        #[command(flatten)]
        spec: SpecArgs,
        /// Validation box, e.g. "9x48".
        #[arg(long = "box", value_name = "WxH")]
        bounds: Option<String>,
    },
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long)]
    alpha: u64,
    #[arg(long)]
    beta: u64,
    #[arg(long = "bigN", value_name = "N")]
    big_n: u64,
}

#[derive(Args, Debug)]
struct GensArgs {
    /// Generators, e.g. "1,0;1,1;0,2".
    #[arg(long)]
    gens: String,
}

#[derive(Subcommand, Debug)]
enum SemigroupCmd {
    Contains {
        #[command(flatten)]
        gens: GensArgs,
        /// The point to test, e.g. "0,1".
        #[arg(long)]
        point: String,
    },
    Mingens(GensArgs),
    Mult(GensArgs),
    Edim(GensArgs),
    Gaps(GensArgs),
    Hull(GensArgs),
}

#[derive(Subcommand, Debug)]
enum CertifyCmd {
    Hypersurface {
        #[command(flatten)]
        spec: SpecArgs,
        /// Exponent `a,b` of the monomial to exclude.
        #[arg(long)]
        point: String,
    },
    Wu {
        /// Odd exponent r ≥ 3.
        #[arg(long)]
        r: u64,
    },
    Verify {
        /// Certificate or certify output, `-` for stdin.
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum IdealCmd {
    Kernel(GensArgs),
    Generators {
        #[command(flatten)]
        gens: GensArgs,
        #[arg(long = "degree-bound", default_value_t = 6)]
        degree_bound: u64,
    },
    Verify {
        #[command(flatten)]
        gens: GensArgs,
        /// `lead:trail` exponent vectors, e.g. "0,2,0:2,0,1".
        #[arg(long = "binomial", required = true, num_args = 1)]
        binomials: Vec<String>,
    },
}

/// What a run produced. The binary prints `stdout`/`stderr` and exits with
/// `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn parse_u64(s: &str, what: &str) -> Result<u64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::invalid(format!("{what}: {s:?} is not a non-negative integer")))
}

/// `"1,2,3"` → `[1, 2, 3]`.
pub fn parse_list(s: &str, what: &str) -> Result<Vec<u64>, CliError> {
    if s.trim().is_empty() {
        return Err(CliError::invalid(format!("{what}: empty list")));
    }
    s.split(',').map(|x| parse_u64(x, what)).collect()
}

/// `"1,0;1,1;0,2"` → `[[1,0],[1,1],[0,2]]`.
pub fn parse_vectors(s: &str, what: &str) -> Result<Vec<Vec<u64>>, CliError> {
    s.split(';').map(|v| parse_list(v, what)).collect()
}

/// `"9x48"` → `[9, 48]`.
pub fn parse_box(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(['x', 'X']).map(|x| parse_u64(x, "box")).collect()
}

fn parse_pair(s: &str, what: &str) -> Result<[u64; 2], CliError> {
    match parse_list(s, what)?.as_slice() {
        &[a, b] => Ok([a, b]),
        _ => Err(CliError::invalid(format!("{what}: expected two coordinates"))),
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::invalid(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
    }
}

fn semigroup_job(op: SemigroupOp, gens: &GensArgs, point: Option<&str>) -> Result<Job, CliError> {
    Ok(Job::Semigroup(SemigroupJob {
        op,
        generators: parse_vectors(&gens.gens, "gens")?,
        point: point.map(|p| parse_list(p, "point")).transpose()?,
    }))
}

fn to_job(command: Command) -> Result<(Job, Option<OutputFormat>), CliError> {
    let job = match command {
        Command::Run { job } => {
            let spec = JobSpec::from_document(&read_input(&job)?)?;
            return Ok((spec.job, Some(spec.output_format)));
        }
        Command::Saturate(SaturateCmd::Curve { supports, bounds }) => Job::Curve(CurveJob {
            supports: parse_vectors(&supports, "supports")?,
            bounds: bounds.as_deref().map(parse_box).transpose()?,
        }),
        Command::Saturate(SaturateCmd::Product { curves, bounds }) => Job::Product(ProductJob {
            curves: curves
                .iter()
                .map(|c| parse_vectors(c, "curve"))
                .collect::<Result<_, _>>()?,
            bounds: bounds.as_deref().map(parse_box).transpose()?,
        }),
        Command::Saturate(SaturateCmd::Hypersurface { spec, bounds }) => {
            let bounds = match bounds.as_deref().map(parse_box).transpose()? {
                None => None,
                Some(b) => Some(<[u64; 2]>::try_from(b).map_err(|_| {
                    CliError::invalid("box: a hypersurface box is WxH")
                })?),
            };
            Job::Hypersurface(HypersurfaceJob {
                alpha: spec.alpha,
                beta: spec.beta,
                big_n: spec.big_n,
                bounds,
            })
        }
        Command::Semigroup(cmd) => match cmd {
            SemigroupCmd::Contains { gens, point } => {
                semigroup_job(SemigroupOp::Contains, &gens, Some(&point))?
            }
            SemigroupCmd::Mingens(g) => semigroup_job(SemigroupOp::Mingens, &g, None)?,
            SemigroupCmd::Mult(g) => semigroup_job(SemigroupOp::Mult, &g, None)?,
            SemigroupCmd::Edim(g) => semigroup_job(SemigroupOp::Edim, &g, None)?,
            SemigroupCmd::Gaps(g) => semigroup_job(SemigroupOp::Gaps, &g, None)?,
            SemigroupCmd::Hull(g) => semigroup_job(SemigroupOp::Hull, &g, None)?,
        },
        Command::Certify(cmd) => Job::Certify(match cmd {
            CertifyCmd::Hypersurface { spec, point } => CertifyJob::Hypersurface {
                alpha: spec.alpha,
                beta: spec.beta,
                big_n: spec.big_n,
                point: parse_pair(&point, "point")?,
            },
            CertifyCmd::Wu { r } => CertifyJob::Wu { r },
            CertifyCmd::Verify { file } => {
                let v: Value = serde_json::from_str(&read_input(&file)?)?;
                CertifyJob::Verify {
                    certificate: crate::cert::locate(&v).clone(),
                }
            }
        }),
        Command::Ideal(cmd) => Job::Ideal(match cmd {
            IdealCmd::Kernel(g) => IdealJob::Kernel {
                generators: parse_vectors(&g.gens, "gens")?,
            },
            IdealCmd::Generators { gens, degree_bound } => IdealJob::Generators {
                generators: parse_vectors(&gens.gens, "gens")?,
                degree_bound,
            },
            IdealCmd::Verify { gens, binomials } => IdealJob::Verify {
                generators: parse_vectors(&gens.gens, "gens")?,
                binomials: binomials
                    .iter()
                    .map(|b| {
                        let (lead, trail) = b.split_once(':').ok_or_else(|| {
                            CliError::invalid(format!("binomial {b:?}: expected lead:trail"))
                        })?;
                        Ok(BinomialSpec {
                            lead: parse_list(lead, "binomial")?,
                            trail: parse_list(trail, "binomial")?,
                        })
                    })
                    .collect::<Result<_, CliError>>()?,
            },
        }),
    };
    Ok((job, None))
}

/// Runs a job and formats the output. JSON documents embed the job so that
/// `run --job` on the output reproduces it byte for byte.
pub fn render(spec: &JobSpec) -> Outcome {
    let outcome = exec::execute(&spec.job);
    match spec.output_format {
        OutputFormat::Json => {
            let input = spec.to_json();
            let (key, body, code) = match &outcome {
                Ok(r) => ("result", json::encode_big(r.result.clone()), i32::from(r.failed)),
                Err(e) => ("error", e.to_json(), e.exit_code()),
            };
            let doc = json::object([
                ("schema_version", Value::from(json::SCHEMA_VERSION)),
                ("input", input),
                (key, body),
            ]);
            Outcome {
                code,
                stdout: json::to_canonical_string(&doc),
                stderr: String::new(),
            }
        }
        OutputFormat::Text => match outcome {
            Ok(r) => Outcome {
                code: i32::from(r.failed),
                stdout: r.text,
                stderr: String::new(),
            },
            Err(e) => text_error(&e),
        },
    }
}

fn text_error(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn json_error(e: &CliError) -> Outcome {
    let doc = json::object([
        ("schema_version", Value::from(json::SCHEMA_VERSION)),
        ("error", e.to_json()),
    ]);
    Outcome {
        code: e.exit_code(),
        stdout: json::to_canonical_string(&doc),
        stderr: String::new(),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ if wants_json => json_error(&CliError::invalid(e.to_string().trim_end())),
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: e.to_string(),
                },
            };
        }
    };
    let json_flag = cli.json;
    let out = cli.out.clone();
    let spec = match to_job(cli.command) {
        Ok((job, format)) => {
            let output_format = if json_flag {
                OutputFormat::Json
            } else {
                format.unwrap_or_default()
            };
            JobSpec::new(job, output_format)
        }
        Err(e) if json_flag => return json_error(&e),
        Err(e) => return text_error(&e),
    };
    let mut outcome = render(&spec);
    if let Some(path) = out {
        if let Err(e) = fs::write(&path, &outcome.stdout) {
            let err = CliError::invalid(format!("{}: {e}", path.display()));
            return text_error(&err);
        }
        outcome.stdout.clear();
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_vectors("6;9,11;9,11", "s").unwrap(), vec![vec![6], vec![9, 11], vec![9, 11]]);
        assert_eq!(parse_box("9x48").unwrap(), vec![9, 48]);
        assert_eq!(parse_box("40").unwrap(), vec![40]);
        assert!(parse_list("1,,2", "p").is_err());
        assert!(parse_list("-1", "p").is_err());
        assert!(parse_pair("1,2,3", "p").is_err());
    }

    #[test]
    fn clap_errors_use_exit_code_one() {
        let o = run(["lipsat", "saturate", "hypersurface", "--alpha", "3"]);
        assert_eq!(o.code, 1);
        let o = run(["lipsat", "--json", "frobnicate"]);
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("\"invalid_input\""));
        assert_eq!(run(["lipsat", "--help"]).code, 0);
    }
}
