// Equivariant thresholds of finite groups acting on the projective line.

use kdelta::logcurve::{
    delta_log_p1, group_invariants, quotient_signature, BranchSignature, GroupFamily,
};

fn run_example() -> kdelta::Result<String> {
    let mut out = String::new();
    let groups = [
        GroupFamily::Cyclic(3),
        GroupFamily::Dihedral(5),
        GroupFamily::Tetrahedral,
        GroupFamily::Octahedral,
        GroupFamily::Icosahedral,
    ];
    for g in groups {
        let sig = quotient_signature(g)?;
        let inv = group_invariants(g)?;
        out += &format!(
            "{g}: order {}, signature {sig}, delta_G {}, alpha_G {}, shortest orbit {}\n",
            g.order(),
            inv.delta,
            inv.alpha,
            inv.min_orbit_length
        );
    }
    let pair = BranchSignature::new(vec![4, 4])?;
    out += &format!("log pair {pair}: delta {}\n", delta_log_p1(&pair));
    Ok(out)
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
