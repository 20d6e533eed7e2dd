//! Instance files, reports, the bundled catalog and the self-test behind the
//! `kdelta` binary.

pub mod catalog;
pub mod instance;
pub mod report;

use std::path::Path;

use crate::error::{Error, Result};

pub use catalog::{catalog, evaluate_all, selftest, CatalogEntry, Expected, SelftestOutcome};
pub use instance::{parse_rays, Instance, InstanceFile, InstanceKind};
pub use report::{evaluate, StabilityReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    if err.is_inconsistency() {
        EXIT_INCONSISTENT
    } else {
        EXIT_VALIDATION
    }
}

/// Parses, validates and evaluates an instance file. The id defaults to the
/// file stem.
pub fn run_file(path: &Path) -> Result<StabilityReport> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let file = InstanceFile::parse(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })?;
    let id = file.id.clone().unwrap_or_else(|| {
        path.file_stem()
            .map_or_else(|| "instance".into(), |s| s.to_string_lossy().into_owned())
    });
    evaluate(&id, &file.build()?)
}

pub fn run_instance(id: &str, file: &InstanceFile) -> Result<StabilityReport> {
    evaluate(file.id.as_deref().unwrap_or(id), &file.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_report() {
        let f = InstanceFile::toric(&[&[1, 0], &[0, 1], &[1, 1], &[-1, -1]]);
        let r = run_instance("blowup-p2", &f).unwrap();
        assert_eq!(r.delta, "6/7");
        assert_eq!(r.verdict, "k-unstable");
        assert_eq!(r.witness, "toric divisor of ray (1,1)");
        assert_eq!(r.kind, "toric");
        assert_eq!(r.instance_id, "blowup-p2");
    }

    #[test]
    fn icosahedral_report() {
        let r = run_instance("icosahedral", &InstanceFile::p1_group("icosahedral", None)).unwrap();
        assert_eq!((r.delta.as_str(), r.alpha.as_deref()), ("12", Some("6")));
        assert_eq!(
            (r.verdict.as_str(), r.scope.as_str()),
            ("uniformly-k-stable", "G-equivariant")
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_VALIDATION);
        assert_eq!(
            exit_code(&Error::InconsistentData("x".into())),
            EXIT_INCONSISTENT
        );
    }

    #[test]
    fn report_json_round_trip() {
        let r = run_instance("p2", &InstanceFile::toric(&[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        let back: StabilityReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
