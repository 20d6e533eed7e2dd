//! Pulling triangulations of polytopes.

use super::linalg::affine_dim;
use super::polytope::Polytope;
use super::rat::QVec;
use crate::error::Result;

/// Which vertex each recursion level cones from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Apex {
    #[default]
    LexMin,
    LexMax,
}

/// Triangulation by coning from the lexicographically smallest vertex over the
/// facets that avoid it, recursively. A point yields no simplices.
pub fn triangulate(p: &Polytope) -> Result<Vec<Vec<QVec>>> {
    triangulate_with(p, Apex::LexMin)
}

pub fn triangulate_with(p: &Polytope, apex: Apex) -> Result<Vec<Vec<QVec>>> {
    if p.dim() == 0 {
        return Ok(Vec::new());
    }
    pull(p, apex)
}

fn pull(p: &Polytope, apex_rule: Apex) -> Result<Vec<Vec<QVec>>> {
    let verts = p.vertices();
    let facets: Vec<Vec<usize>> = p
        .facets()
        .map(|h| {
            (0..verts.len())
                .filter(|&i| h.is_tight(&verts[i]))
                .collect()
        })
        .collect();
    let all: Vec<usize> = (0..verts.len()).collect();
    let mut out = Vec::new();
    pull_face(
        verts,
        &facets,
        &all,
        p.dim(),
        apex_rule,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out
        .into_iter()
        .map(|s| s.into_iter().map(|i| verts[i].clone()).collect())
        .collect())
}

/// Faces are index sets into the sorted vertex list. Every facet of a face
/// `F` is `F ∩ H` for some facet `H` of the whole polytope.
fn pull_face(
    verts: &[QVec],
    facets: &[Vec<usize>],
    face: &[usize],
    dim: usize,
    apex_rule: Apex,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if dim <= 1 {
        let mut s = prefix.clone();
        s.extend_from_slice(face);
        out.push(s);
        return;
    }
    let apex = match apex_rule {
        Apex::LexMin => face[0],
        Apex::LexMax => face[face.len() - 1],
    };
    let mut subfaces: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            face.iter()
                .copied()
                .filter(|i| f.binary_search(i).is_ok())
                .collect::<Vec<_>>()
        })
        .filter(|g: &Vec<usize>| g.len() >= dim && !g.contains(&apex))
        .collect();
    subfaces.sort();
    subfaces.dedup();
    prefix.push(apex);
    for g in subfaces {
        let pts: Vec<QVec> = g.iter().map(|&i| verts[i].clone()).collect();
        if affine_dim(&pts) == dim as isize - 1 {
            pull_face(verts, facets, &g, dim - 1, apex_rule, prefix, out);
        }
    }
    prefix.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::linalg::det;
    use crate::exactgeom::rat::{int, Rat};
    use num_traits::{Signed, Zero};

    fn v(c: &[i64]) -> QVec {
        QVec::from_ints(c)
    }

    fn area(s: &[QVec]) -> Rat {
        det(&[&s[1] - &s[0], &s[2] - &s[0]]).abs() / int(2)
    }

    #[test]
    fn triangle_is_itself() {
        let p = Polytope::from_vertices(2, vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        let t = triangulate(&p).unwrap();
        assert_eq!(t, vec![vec![v(&[0, 0]), v(&[0, 1]), v(&[1, 0])]]);
    }

    #[test]
    fn unit_square_two_halves() {
        let p = Polytope::from_vertices(2, vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])])
            .unwrap();
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 2);
        for s in &t {
            assert_eq!(area(s), Rat::new(1.into(), 2.into()));
        }
    }

    #[test]
    fn quadrilateral_areas_three_and_one() {
        let p =
            Polytope::from_vertices(2, vec![v(&[-1, 0]), v(&[-1, 2]), v(&[2, -1]), v(&[0, -1])])
                .unwrap();
        let t = triangulate(&p).unwrap();
        let mut areas: Vec<Rat> = t.iter().map(|s| area(s)).collect();
        areas.sort();
        assert_eq!(areas, vec![int(1), int(3)]);
    }

    #[test]
    fn point_has_no_simplices_and_cube_has_six() {
        let pt = Polytope::from_vertices(2, vec![v(&[3, 3])]).unwrap();
        assert!(triangulate(&pt).unwrap().is_empty());

        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(v(&[x, y, z]));
                }
            }
        }
        let p = Polytope::from_vertices(3, cube).unwrap();
        for apex in [Apex::LexMin, Apex::LexMax] {
            let t = triangulate_with(&p, apex).unwrap();
            assert_eq!(t.len(), 6);
            for s in &t {
                let d = det(&[&s[1] - &s[0], &s[2] - &s[0], &s[3] - &s[0]]);
                assert!(!d.is_zero());
            }
        }
    }
}
