// Edges, linear part and dual of a rational cone.

use kdelta::exactgeom::{Cone, QVec};

fn run_example() -> kdelta::Result<String> {
    let mut out = String::new();
    let half_plane = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[0, 1]])?;
    out += &format!("half-plane edges: {:?}\n", half_plane.edges());
    out += &format!("half-plane linear part: {:?}\n", half_plane.linear_part());
    out += &format!("dual generators: {:?}\n", half_plane.dual()?.generators());

    let quadrant = Cone::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]])?;
    out += &format!("quadrant edges: {:?}\n", quadrant.edges());
    for y in [[1, 1], [1, 0]] {
        let y = QVec::from_ints(&y);
        out += &format!(
            "{y} in relative interior of dual: {}\n",
            quadrant.ri_dual_contains(&y)?
        );
    }
    Ok(out)
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
