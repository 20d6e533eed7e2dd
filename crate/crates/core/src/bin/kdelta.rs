use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kdelta::cli::{
    self, catalog, evaluate_all, exit_code, parse_rays, selftest, InstanceFile, InstanceKind,
    StabilityReport,
};
use kdelta::Error;

/// Exact stability thresholds of Fano varieties from combinatorial data.
#[derive(Parser)]
#[command(name = "kdelta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an instance file, or an inline instance given with --kind.
    Run {
        file: Option<PathBuf>,
        #[arg(long)]
        kind: Option<String>,
        /// Toric rays, e.g. "1,0;0,1;-1,-1".
        #[arg(long)]
        rays: Option<String>,
        /// Group family for p1-group: cyclic, dihedral, tetrahedral, octahedral, icosahedral.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        parameter: Option<u32>,
        /// Branch indices for p1-logpair, e.g. "2,3,5".
        #[arg(long)]
        multiplicities: Option<String>,
        #[arg(long, default_value = "inline")]
        id: String,
    },
    /// Evaluate every bundled instance and print the reports.
    Catalog,
    /// Recompute the bundled instances and compare with their expected values.
    Selftest,
}

fn inline(
    kind: &str,
    rays: Option<String>,
    family: Option<String>,
    parameter: Option<u32>,
    mults: Option<String>,
) -> kdelta::Result<InstanceFile> {
    let missing = |flag: &str| Error::Parse(format!("--kind {kind} needs {flag}"));
    match InstanceKind::parse(kind)? {
        InstanceKind::Toric => {
            let rays = parse_rays(&rays.ok_or_else(|| missing("--rays"))?)?;
            let refs: Vec<&[i64]> = rays.iter().map(Vec::as_slice).collect();
            Ok(InstanceFile::toric(&refs))
        }
        InstanceKind::P1Group => Ok(InstanceFile::p1_group(
            &family.ok_or_else(|| missing("--family"))?,
            parameter,
        )),
        InstanceKind::P1Logpair => {
            let text = mults.ok_or_else(|| missing("--multiplicities"))?;
            let ms = text
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad multiplicity {s:?}")))
                })
                .collect::<kdelta::Result<Vec<u32>>>()?;
            Ok(InstanceFile::p1_logpair(&ms))
        }
        InstanceKind::Spherical => Err(Error::Parse(
            "spherical instances must be given as a file".into(),
        )),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit(report: &StabilityReport) {
    out(&report.to_json());
    for d in &report.diagnostics {
        eprintln!("{}: {d}", report.instance_id);
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code(err) as u8)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run {
            file,
            kind,
            rays,
            family,
            parameter,
            multiplicities,
            id,
        } => {
            let result = match (file, kind) {
                (Some(path), None) => cli::run_file(&path),
                (None, Some(kind)) => inline(&kind, rays, family, parameter, multiplicities)
                    .and_then(|f| cli::run_instance(&id, &f)),
                _ => Err(Error::Parse(
                    "give either an instance file or --kind".into(),
                )),
            };
            match result {
                Ok(r) => {
                    emit(&r);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Catalog => {
            let entries = catalog();
            let mut status = ExitCode::SUCCESS;
            let reports: Vec<serde_json::Value> = evaluate_all(&entries)
                .into_iter()
                .zip(&entries)
                .filter_map(|((id, result), entry)| match result {
                    Ok(r) => Some(serde_json::json!({
                        "report": r,
                        "expected": {
                            "delta": entry.expected.delta,
                            "alpha": entry.expected.alpha,
                            "verdict": entry.expected.verdict,
                        }
                    })),
                    Err(e) => {
                        eprintln!("error: {id}: {e}");
                        status = ExitCode::from(exit_code(&e) as u8);
                        None
                    }
                })
                .collect();
            out(&serde_json::to_string_pretty(&reports).expect("catalog serializes"));
            status
        }
        Command::Selftest => {
            let outcome = selftest(&catalog());
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            for f in &outcome.failures {
                out(&format!("FAIL {f}"));
            }
            out(&format!(
                "selftest: {} instances, {} failures",
                outcome.checked,
                outcome.failures.len()
            ));
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
