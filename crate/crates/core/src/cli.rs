//! Command-line front end for the `lorentz` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{list_catalog, standard_subalgebra};
use crate::error::Error;
use crate::forms::VerdictTag;
use crate::lie::{iwasawa, make_so, LieAlgebra};
use crate::matrix::Mat;
use crate::sample::DEFAULT_SEED;
use crate::signature::signature;
use crate::verify::{check_lemma_std_rep, check_quotient, run_all, CheckReport, Report, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lorentz", version, about = "Exact checks for Lorentz isotropy quotients of so(1,n) and so(2,n)")]
pub struct Cli {
    /// Seed for every sampled check
    #[arg(long, global = true, env = "LORENTZ_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run check suites
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Restricted roots of the standard split torus
    Roots {
        #[arg(long)]
        g: String,
    },
    /// Inertia of a symmetric matrix read from a file
    Signature {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Named subalgebras available for an algebra
    Catalog {
        #[arg(long)]
        g: String,
        /// Write every entry's basis here, one matrix file per element
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Every suite up to `--max-n`
    All {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Also write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The standard-representation check for so(1,k)
    Lemma {
        #[arg(long)]
        k: usize,
    },
    /// Invariant Minkowski forms on g/h: exit 0 found, 1 none, 2 undetermined
    Quotient {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
}

/// Parses `so(p,q)`.
pub fn parse_algebra(s: &str) -> Result<LieAlgebra, Error> {
    let bad = || Error::InvalidParams(format!("expected so(p,q), got {s:?}"));
    let inner = s.trim().strip_prefix("so(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let (p, q) = inner.split_once(',').ok_or_else(bad)?;
    let p = p.trim().parse().map_err(|_| bad())?;
    let q = q.trim().parse().map_err(|_| bad())?;
    make_so(p, q)
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Pass => EXIT_OK,
        Status::Fail => EXIT_FAIL,
        Status::Undetermined => EXIT_UNDETERMINED,
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn check_line(c: &CheckReport) -> String {
    let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut line = format!("{:<12} {} [{}]", c.status.to_string().to_uppercase(), c.name, params.join(", "));
    let failures = c.failures();
    if !failures.is_empty() {
        line.push_str(&format!(" failing: {}", failures.join("; ")));
    }
    line
}

fn print_report(out: &mut dyn Write, report: &Report, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json()),
        Format::Text => {
            for c in &report.checks {
                writeln!(out, "{}", check_line(c))?;
            }
            let s = &report.summary;
            writeln!(out, "summary: {} checks, {} pass, {} fail, {} undetermined", s.total, s.pass, s.fail, s.undetermined)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::InvalidParams(format!("i/o: {e}"));
    match &cli.command {
        Command::Verify { which: VerifyCommand::All { max_n, json } } => {
            let report = run_all(*max_n, cli.seed)?;
            if let Some(path) = json {
                std::fs::write(path, report.to_json() + "\n").map_err(io)?;
            }
            print_report(out, &report, cli.format).map_err(io)?;
            Ok(status_code(report.summary.status))
        }
        Command::Verify { which: VerifyCommand::Lemma { k } } => {
            let report = Report::new(vec![check_lemma_std_rep(*k, cli.seed)?]);
            print_report(out, &report, cli.format).map_err(io)?;
            Ok(status_code(report.summary.status))
        }
        Command::Verify { which: VerifyCommand::Quotient { g, h } } => {
            let g = parse_algebra(g)?;
            let (check, tag) = check_quotient(&g, h)?;
            let report = Report::new(vec![check]);
            match cli.format {
                Format::Json => writeln!(out, "{}", report.to_json()).map_err(io)?,
                Format::Text => {
                    let cert = report.checks[0].certificate.as_ref().expect("quotient checks carry data");
                    let v = &cert["verdict"];
                    writeln!(out, "g = {}, h = {}", g.label(), report.checks[0].params["h"].as_str().unwrap_or(""))
                        .map_err(io)?;
                    writeln!(out, "quotient dimension: {}", cert["quotient_dim"]).map_err(io)?;
                    writeln!(out, "invariant symmetric forms: {}", cert["space_dim"]).map_err(io)?;
                    writeln!(out, "verdict: {}", v["tag"].as_str().unwrap_or("")).map_err(io)?;
                    if let Some(s) = v["signature"].as_str() {
                        writeln!(out, "signature: {s}").map_err(io)?;
                    }
                    if let Some(form) = v["form"].as_array() {
                        writeln!(out, "form:").map_err(io)?;
                        for row in form {
                            let cells: Vec<&str> = row.as_array().into_iter().flatten().filter_map(|x| x.as_str()).collect();
                            writeln!(out, "  {}", cells.join(" ")).map_err(io)?;
                        }
                    }
                    writeln!(out, "reason: {}", v["reason"]).map_err(io)?;
                }
            }
            Ok(match tag {
                VerdictTag::Found => EXIT_OK,
                VerdictTag::None => EXIT_FAIL,
                VerdictTag::Undetermined => EXIT_UNDETERMINED,
            })
        }
        Command::Roots { g } => {
            let g = parse_algebra(g)?;
            let iw = iwasawa(&g)?;
            let r = &iw.roots;
            let simple = r.simple_roots();
            let rows: Vec<_> = r
                .roots()
                .into_iter()
                .map(|x| {
                    json!({
                        "root": x.to_string(),
                        "multiplicity": r.multiplicity(&x),
                        "positive": x.is_positive(),
                        "simple": simple.contains(&x),
                    })
                })
                .collect();
            match cli.format {
                Format::Json => {
                    let v = json!({
                        "g": g.label(),
                        "rank": r.rank(),
                        "simple": simple.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "roots": rows,
                        "dim_m": iw.m.dim(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
                }
                Format::Text => {
                    writeln!(out, "{}: real rank {}, dim m = {}", g.label(), r.rank(), iw.m.dim()).map_err(io)?;
                    for (name, x) in ["alpha", "beta"].iter().zip(simple) {
                        writeln!(out, "{name} = {x}").map_err(io)?;
                    }
                    for x in r.roots() {
                        let sign = if x.is_positive() { "+" } else { "-" };
                        writeln!(out, "{sign} {x} multiplicity {}", r.multiplicity(&x)).map_err(io)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Signature { matrix } => {
            let text = std::fs::read_to_string(matrix).map_err(io)?;
            let m = Mat::from_text(&text)?;
            let s = signature(&m)?;
            match cli.format {
                Format::Json => {
                    let v = json!({"signature": s.to_string(), "positive": s.n_pos, "negative": s.n_neg, "zero": s.n_zero, "lorentz": s.is_lorentz()});
                    writeln!(out, "{v}").map_err(io)?;
                }
                Format::Text => writeln!(out, "{s}").map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { g, export } => {
            let g = parse_algebra(g)?;
            let entries = list_catalog(&g);
            if let Some(dir) = export {
                export_catalog(&g, dir)?;
            }
            match cli.format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&entries).expect("json")).map_err(io)?
                }
                Format::Text => {
                    for e in &entries {
                        writeln!(out, "{:<16} dim {:<4} {}", e.name, e.expected_dim, e.description).map_err(io)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// File stem for an entry name: `so(1,4)` becomes `so_1_4`.
pub fn file_stem(name: &str) -> String {
    let mapped: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    mapped.trim_matches('_').to_string()
}

fn export_catalog(g: &LieAlgebra, dir: &std::path::Path) -> Result<(), Error> {
    let io = |e: std::io::Error| Error::InvalidParams(format!("i/o: {e}"));
    std::fs::create_dir_all(dir).map_err(io)?;
    for e in list_catalog(g) {
        let h = standard_subalgebra(g, &e.name)?;
        for (i, b) in h.basis().iter().enumerate() {
            std::fs::write(dir.join(format!("{}_{i}.txt", file_stem(&e.name))), b.to_text()).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["lorentz"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_algebra_labels() {
        assert_eq!(parse_algebra("so(2, 4)").unwrap().dim(), 15);
        assert!(parse_algebra("sl(2)").is_err());
        assert!(parse_algebra("so(2,x)").is_err());
    }

    #[test]
    fn quotient_exit_codes() {
        assert_eq!(run_capture(&["verify", "quotient", "--g", "so(2,4)", "--h", "so(1,4)"]).0, 0);
        assert_eq!(run_capture(&["verify", "quotient", "--g", "so(2,4)", "--h", "su(1,2)"]).0, 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "lemma", "--k", "1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["roots", "--g", "so(3,2)"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }
}
