// Exact integration of polynomial densities over polytopes.

use kdelta::exactgeom::{int, Polytope, QVec};
use kdelta::measure::{barycenter, integrate, volume, PolyDensity};

fn run_example() -> kdelta::Result<String> {
    let mut out = String::new();
    let square = Polytope::from_vertices(
        2,
        vec![
            QVec::from_ints(&[0, 0]),
            QVec::from_ints(&[1, 0]),
            QVec::from_ints(&[0, 1]),
            QVec::from_ints(&[1, 1]),
        ],
    )?;
    out += &format!("area of the unit square: {}\n", volume(&square)?);
    let xy = PolyDensity::monomial(vec![1, 1], int(1));
    out += &format!("integral of x*y: {}\n", integrate(&square, &xy)?);

    // A segment in the plane, measured along its own affine hull.
    let segment =
        Polytope::from_vertices(2, vec![QVec::from_ints(&[0, 0]), QVec::from_ints(&[1, 1])])?;
    let density = PolyDensity::linear(&QVec::from_ints(&[1, 1]), int(0)).pow(2);
    let b = barycenter(&segment, &density)?;
    out += &format!(
        "density {density} on the diagonal: mass {}, barycenter {}\n",
        b.mass, b.point
    );
    Ok(out)
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
