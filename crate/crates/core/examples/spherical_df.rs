// The DF functional and the equivariant delta of a spherical Fano variety.

use kdelta::exactgeom::{int, Polytope, QMat, QVec};
use kdelta::measure::dh_density;
use kdelta::spherical::{ColoredEdge, SphericalFanoData, SphericalInput};

fn run_example() -> kdelta::Result<String> {
    let v = QVec::from_ints;
    let root = v(&[1, 1]);
    let data = SphericalFanoData::new(SphericalInput {
        n_rank: 1,
        t_rank: 2,
        pi: QMat::from_rows(vec![v(&[1, 1])], 2)?,
        valuation_cone_generators: vec![v(&[1])],
        colored_fan_edges: vec![ColoredEdge::new(v(&[1]), int(1))],
        moment_polytope: Polytope::from_vertices(2, vec![v(&[0, 0]), v(&[1, 1])])?,
        positive_roots: vec![root.clone()],
        levi_subset: vec![],
        dh: dh_density(2, &[root], &[], 2)?,
        v_const: int(1),
    })?;
    let mut out = String::new();
    out += &format!("2rho_Q = {}\n", data.two_rho_q());
    out += &format!("DH barycenter = {}\n", data.dh_barycenter().point);
    // Two preimages of the same valuation differ by the kernel of pi.
    for w in [v(&[1, 0]), v(&[0, 1]), v(&[3, -2])] {
        out += &format!("DF at preimage {w}: {}\n", data.df_at_preimage(&w));
    }
    let verdict = data.verdict()?;
    out += &format!(
        "delta_G = {}, verdict {}, aut_dim {}\n",
        verdict.delta, verdict.verdict, verdict.aut_dim
    );
    Ok(out)
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
