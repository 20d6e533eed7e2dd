// Recompute the bundled catalog and compare with its expected values.

use kdelta::cli::{catalog, selftest};

fn run_example() -> kdelta::Result<String> {
    let entries = catalog();
    let outcome = selftest(&entries);
    let mut out = String::new();
    for e in &entries {
        out += &format!(
            "{:<22} delta {:<6} {}\n",
            e.id, e.expected.delta, e.expected.verdict
        );
    }
    out += &format!(
        "{} checked, {} failures\n",
        outcome.checked,
        outcome.failures.len()
    );
    Ok(out)
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
