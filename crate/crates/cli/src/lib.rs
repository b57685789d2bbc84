//! Command-line front end for `hnsplit`: argument parsing, the JSON envelope,
//! human-readable renderers and batch sweeps.
//!
//! Exit status: 0 when every check passed, 1 for unparsable arguments, 2 for
//! inputs outside the domain of a computation, 3 when an invariant check failed.

pub mod args;
pub mod commands;
pub mod envelope;
pub mod render;
pub mod sweep;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use hnsplit::{Characteristic, Stability};

use crate::args::{CharacteristicArg, Cli, Command, Format};
use crate::envelope::{error_line, Envelope};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_CHECK: u8 = 3;

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn render(env: &Envelope, format: Format) -> String {
    match format {
        Format::Json => env.to_json() + "\n",
        Format::Table => render::table(env),
        Format::AsciiPolygon => render::ascii_polygon(env),
    }
}

fn error_code(e: &hnsplit::Error) -> u8 {
    match e {
        hnsplit::Error::Inconsistent(_) => EXIT_CHECK,
        _ => EXIT_DOMAIN,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() }
                }
                _ => {
                    let text = e.to_string();
                    let message = text
                        .lines()
                        .take_while(|l| !l.starts_with("Usage:"))
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .collect::<Vec<_>>()
                        .join(" ");
                    let message = message.strip_prefix("error: ").unwrap_or(&message);
                    Outcome {
                        code: EXIT_PARSE,
                        stdout: String::new(),
                        stderr: error_line("parse", message) + "\n",
                    }
                }
            };
        }
    };

    let result = match cli.command {
        Command::Splitting { n, degrees } => commands::cmd_splitting(n, &degrees),
        Command::HnSym { m, s, t } => commands::cmd_hn_sym(m, s, t),
        Command::Ruled { n, s, t, alpha, semistable, e, characteristic } => {
            let stability = if semistable {
                Stability::Semistable { e: e.expect("clap requires -e with --semistable") }
            } else {
                Stability::Unstable {
                    s: s.expect("clap requires -s without --semistable"),
                    t: t.expect("clap requires -t without --semistable"),
                }
            };
            let characteristic = match characteristic {
                CharacteristicArg::Zero => Characteristic::Zero,
                CharacteristicArg::Positive => Characteristic::Positive,
            };
            commands::cmd_ruled(n, stability, alpha, characteristic)
        }
        Command::TwoHyp { n1, n2, a1, a2, e } => commands::cmd_two_hyp(n1, n2, a1, a2, e),
        Command::Acyclic { cover_degree, rank, degree, genus } => {
            commands::cmd_acyclic(cover_degree, rank, degree, genus)
        }
        Command::Sweep { n, r, d } => return run_sweep_command(n.0, r.0, d.0, cli.format),
    };

    match result {
        Ok(env) => Outcome {
            code: if env.all_passed() { EXIT_OK } else { EXIT_CHECK },
            stdout: render(&env, cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: error_code(&e),
            stdout: String::new(),
            stderr: error_line(e.kind(), &e.to_string()) + "\n",
        },
    }
}

fn run_sweep_command(
    n: std::ops::RangeInclusive<u32>,
    r: std::ops::RangeInclusive<u32>,
    d: std::ops::RangeInclusive<u32>,
    format: Format,
) -> Outcome {
    if !d.is_empty() && *d.start() == 0 {
        return Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: error_line("domain", "hypersurface degrees must be >= 1") + "\n",
        };
    }
    let report = sweep::run_sweep(n, r, d);
    let mut stdout = String::new();
    let mut stderr = String::new();
    for point in &report.points {
        match point {
            Ok(env) => stdout.push_str(&render(env, format)),
            Err(line) => {
                stderr.push_str(line);
                stderr.push('\n');
            }
        }
    }
    match format {
        Format::Json => {
            stdout.push_str(&serde_json::to_string(&report.summary).expect("summary serializes"));
            stdout.push('\n');
        }
        Format::Table | Format::AsciiPolygon => {
            let s = &report.summary["summary"];
            stdout.push_str(&format!(
                "sweep: {} envelopes, {} passed, {} failed, codimension-only {}\n",
                s["envelopes"],
                s["passed"],
                s["failed"],
                if s["checks"][0]["pass"] == true { "pass" } else { "FAIL" }
            ));
        }
    }
    Outcome { code: if report.passed { EXIT_OK } else { EXIT_CHECK }, stdout, stderr }
}
