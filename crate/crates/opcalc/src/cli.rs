use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use landau_core::spectrum::{degeneracy_census, spectrum};
use landau_core::{apply, FockKet, KetVector, OperatorPoly, ParameterSet, Rational, StandardCatalog};

use crate::eval::{eval_str, print_canonical};
use crate::parser::parse_rational;
use crate::suite::{identity_ids, run_suite_on, sample_parameters};
use crate::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational of the form p/q"))
}

#[derive(Debug, Parser)]
#[command(name = "opcalc", version, about = "Exact operator calculator for the planar Landau system")]
pub struct Cli {
    #[arg(long, global = true, default_value = "1", value_parser = rational_arg)]
    hbar: Rational,
    #[arg(long, global = true, default_value = "1", value_parser = rational_arg)]
    mass: Rational,
    /// Charge magnitude |e|.
    #[arg(long, global = true, default_value = "1", value_parser = rational_arg)]
    charge: Rational,
    /// Signed magnetic field; required by every command that builds operators.
    #[arg(long = "B", global = true, allow_hyphen_values = true, value_parser = rational_arg)]
    b_field: Option<Rational>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Measure elapsed_ms in verification reports (otherwise reported as 0).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression to its normal-ordered form.
    Eval { expr: String },
    /// Commutator of two expressions.
    Comm { a: String, b: String },
    /// Apply an expression to a Fock ket.
    Apply {
        expr: String,
        #[arg(long, num_args = 2, value_names = ["N_PLUS", "N_MINUS"], required = true)]
        ket: Vec<u32>,
    },
    /// Landau levels of the truncated Hamiltonian.
    Spectrum {
        #[arg(long)]
        truncation: u32,
    },
    /// Count the states of one Landau level at several truncations.
    Degeneracy {
        #[arg(long)]
        level: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        truncations: Vec<u32>,
    },
    /// Run the identity suite at random samples, or at the given parameters when --B is set.
    Verify {
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_USAGE,
        }
    }
}

impl Cli {
    fn params(&self) -> Result<ParameterSet, String> {
        let b = self.b_field.clone().ok_or("this command needs --B")?;
        ParameterSet::new(self.hbar.clone(), self.mass.clone(), self.charge.clone(), b).map_err(|e| e.to_string())
    }
}

fn render_operator(a: &OperatorPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", print_canonical(a)),
        Format::Json => format!("{}\n", json::operator(a)),
    }
}

fn render_ket(v: &KetVector, format: Format) -> String {
    match format {
        Format::Text => format!("{v}\n"),
        Format::Json => format!("{}\n", json::ket_vector(v)),
    }
}

/// Runs one command, returning its output text and exit code.
fn execute(cli: &Cli) -> Result<(String, i32), String> {
    let format = cli.format;
    let text = match &cli.command {
        Command::Eval { expr } => render_operator(&eval_str(expr, &cli.params()?).map_err(|e| e.to_string())?, format),
        Command::Comm { a, b } => {
            let p = cli.params()?;
            let a = eval_str(a, &p).map_err(|e| e.to_string())?;
            let b = eval_str(b, &p).map_err(|e| e.to_string())?;
            render_operator(&a.commutator(&b).map_err(|e| e.to_string())?, format)
        }
        Command::Apply { expr, ket } => {
            let op = eval_str(expr, &cli.params()?).map_err(|e| e.to_string())?;
            let k = FockKet::new(ket[0], ket[1]);
            render_ket(&apply(&op, &KetVector::basis(k)), format)
        }
        Command::Spectrum { truncation } => {
            if *truncation < 1 {
                return Err("--truncation must be at least 1".into());
            }
            let report = spectrum(&cli.params()?, *truncation).map_err(|e| e.to_string())?;
            match format {
                Format::Json => format!("{}\n", json::spectrum(&report)),
                Format::Text => {
                    let mut s = format!("truncation {} ({})\n", report.truncation, report.params);
                    for l in &report.levels {
                        writeln!(s, "l={} E={} ({}) multiplicity={}", l.l, l.energy_exact, l.energy, l.multiplicity)
                            .unwrap();
                    }
                    s
                }
            }
        }
        Command::Degeneracy { level, truncations } => {
            let report = degeneracy_census(&cli.params()?, *level, truncations).map_err(|e| e.to_string())?;
            match format {
                Format::Json => format!("{}\n", json::census(&report)),
                Format::Text => {
                    let mut s = format!("level {}\n", report.level);
                    for (n, c) in report.truncations.iter().zip(&report.counts) {
                        writeln!(s, "N={n} count={c}").unwrap();
                    }
                    let verdict = if report.shifted_eigenvector_ok { "pass" } else { "FAIL" };
                    writeln!(s, "shifted eigenvector check: {verdict}").unwrap();
                    s
                }
            }
        }
        Command::Verify { identity, samples, seed } => {
            if let Some(id) = identity {
                if !identity_ids().any(|known| known == id) {
                    return Err(format!("unknown identity `{id}`"));
                }
            }
            if *samples == 0 {
                return Err("--samples must be at least 1".into());
            }
            let draws = match &cli.b_field {
                Some(_) => vec![cli.params()?],
                None => sample_parameters(*samples, *seed),
            };
            let reports = run_suite_on(&StandardCatalog, &draws, identity.as_deref(), cli.timing);
            let all_pass = reports.iter().all(|r| r.pass);
            let text = match format {
                Format::Json => format!("{}\n", json::suite(&reports, *seed)),
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let verdict = if r.pass { "PASS" } else { "FAIL" };
                        writeln!(
                            s,
                            "{:<15} {verdict} residual={} samples={} elapsed_ms={}",
                            r.identity_id,
                            r.residual_term_count,
                            r.samples.len(),
                            r.elapsed_ms
                        )
                        .unwrap();
                    }
                    let passed = reports.iter().filter(|r| r.pass).count();
                    writeln!(s, "{passed}/{} passed (seed {seed})", reports.len()).unwrap();
                    s
                }
            };
            return Ok((text, if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED }));
        }
    };
    Ok((text, EXIT_OK))
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((text, code)) => match &cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome {
                    stdout: String::new(),
                    stderr: String::new(),
                    code,
                },
                Err(e) => Outcome::usage(format!("cannot write {}: {e}", path.display())),
            },
            None => Outcome {
                stdout: text,
                stderr: String::new(),
                code,
            },
        },
        Err(message) => Outcome::usage(message),
    }
}
