//! Exact rational linear algebra and polyhedral geometry.

pub mod cone;
pub mod limits;
pub mod linalg;
pub mod polytope;
pub mod rat;
pub mod triangulate;

pub use cone::{cone_edges, cone_linear_part, dual_cone, ri_dual_membership, Cone};
pub use polytope::{hrep_to_vrep, vrep_to_hrep, Halfspace, Polytope};
pub use rat::{fmt_rat, int, parse_rat, primitive_vector, rat, QMat, QVec, Rat};
pub use triangulate::{triangulate, triangulate_with, Apex};
