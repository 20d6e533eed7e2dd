//! Polyhedral cones given by generators.
//!
//! Everything is derived from one double description pass over the
//! generators, which produces the dual cone `{y : <y, g> >= 0}` as a
//! lineality basis plus extreme rays. The linear part of the cone is the
//! orthogonal complement of the dual, and a generator spans an edge exactly
//! when the dual constraints tight at it cut out a face of dimension
//! `dim(linear part) + 1`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::limits;
use super::linalg::{nullspace, project_out, rank, span_basis};
use super::rat::{QVec, Rat};
use crate::error::{Error, Result};

/// Output of the double description method: `lineality + cone(rays)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DoubleDescription {
    /// Canonical (RREF, primitive) basis of the lineality space.
    pub lineality: Vec<QVec>,
    /// Extreme rays modulo lineality, projected onto its orthogonal
    /// complement, primitive and sorted.
    pub rays: Vec<QVec>,
}

struct Ray {
    v: QVec,
    zeros: BTreeSet<usize>,
}

/// Generators of `{y in Q^dim : <a, y> >= 0 for every a in constraints}`.
pub(crate) fn double_description(constraints: &[QVec], dim: usize) -> DoubleDescription {
    let mut lin: Vec<QVec> = (0..dim).map(|i| QVec::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if let Some(pos) = lin.iter().position(|b| !a.dot(b).is_zero()) {
            let mut b = lin.swap_remove(pos);
            let mut ab = a.dot(&b);
            if ab.is_negative() {
                b = -&b;
                ab = -ab;
            }
            for l in lin.iter_mut() {
                let c = a.dot(l) / &ab;
                if !c.is_zero() {
                    *l = l.add_scaled(&-c, &b);
                }
            }
            for r in rays.iter_mut() {
                let c = a.dot(&r.v) / &ab;
                if !c.is_zero() {
                    r.v =
                        r.v.add_scaled(&-c, &b)
                            .primitive()
                            .expect("extreme ray stays nonzero");
                }
                r.zeros.insert(k);
            }
            rays.push(Ray {
                v: b.primitive().expect("lineality vector is nonzero"),
                zeros: (0..k).collect(),
            });
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if vals[i].is_positive() {
                next.push(Ray {
                    v: r.v.clone(),
                    zeros: r.zeros.clone(),
                });
            } else if vals[i].is_zero() {
                let mut zeros = r.zeros.clone();
                zeros.insert(k);
                next.push(Ray {
                    v: r.v.clone(),
                    zeros,
                });
            }
        }
        for (p, rp) in rays.iter().enumerate() {
            if !vals[p].is_positive() {
                continue;
            }
            for (n, rn) in rays.iter().enumerate() {
                if !vals[n].is_negative() {
                    continue;
                }
                let common: BTreeSet<usize> = rp.zeros.intersection(&rn.zeros).copied().collect();
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(o, ro)| o == p || o == n || !common.is_subset(&ro.zeros));
                if !adjacent {
                    continue;
                }
                // (a.p) n - (a.n) p lies on the hyperplane a = 0
                let v = rn.v.scale(&vals[p]).add_scaled(&-vals[n].clone(), &rp.v);
                let mut zeros = common;
                zeros.insert(k);
                next.push(Ray {
                    v: v.primitive().expect("adjacent rays are independent"),
                    zeros,
                });
            }
        }
        rays = next;
    }

    let lineality = span_basis(&lin, dim);
    let mut out: Vec<QVec> = rays
        .into_iter()
        .map(|r| {
            project_out(&r.v, &lineality)
                .primitive()
                .expect("extreme ray is not in the lineality space")
        })
        .collect();
    out.sort();
    out.dedup();
    DoubleDescription {
        lineality,
        rays: out,
    }
}

pub(crate) fn check_cone_dim(dim: usize) -> Result<()> {
    let limit = limits::cone_max_dim();
    if dim > limit {
        return Err(Error::DimTooLarge { dim, limit });
    }
    Ok(())
}

/// A rational polyhedral cone `cone(generators)` with its edges, linear part
/// and dual computed up front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<QVec>,
    edges: Vec<QVec>,
    linear_part: Vec<QVec>,
    dual: DoubleDescription,
}

impl Cone {
    /// Builds the cone generated by `generators` in `Q^ambient_dim`.
    ///
    /// Generators are stored primitive. An empty generator list gives the
    /// zero cone.
    pub fn new(ambient_dim: usize, generators: Vec<QVec>) -> Result<Self> {
        check_cone_dim(ambient_dim)?;
        let mut gens = Vec::with_capacity(generators.len());
        for g in &generators {
            g.check_dim(ambient_dim)?;
            gens.push(g.primitive()?);
        }

        let dual = double_description(&gens, ambient_dim);
        let dual_all: Vec<QVec> = dual.lineality.iter().chain(&dual.rays).cloned().collect();
        let linear_part = span_basis(&nullspace(&dual_all, ambient_dim), ambient_dim);
        let lin_dim = linear_part.len();

        let mut edges = Vec::new();
        for g in &gens {
            if dual.rays.iter().all(|y| y.dot(g).is_zero()) {
                continue; // inside the linear part
            }
            let mut tight: Vec<QVec> = dual.lineality.clone();
            tight.extend(dual.rays.iter().filter(|y| y.dot(g).is_zero()).cloned());
            if ambient_dim - rank(&tight, ambient_dim) == lin_dim + 1 {
                edges.push(project_out(g, &linear_part).primitive()?);
            }
        }
        edges.sort();
        edges.dedup();

        Ok(Cone {
            ambient_dim,
            generators: gens,
            edges,
            linear_part,
            dual,
        })
    }

    pub fn from_ints(ambient_dim: usize, generators: &[&[i64]]) -> Result<Self> {
        Self::new(
            ambient_dim,
            generators.iter().map(|g| QVec::from_ints(g)).collect(),
        )
    }

    /// The whole space `Q^dim`.
    pub fn full_space(dim: usize) -> Result<Self> {
        let gens = (0..dim)
            .flat_map(|i| {
                let e = QVec::unit(dim, i);
                let m = -&e;
                [e, m]
            })
            .collect();
        Self::new(dim, gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[QVec] {
        &self.generators
    }

    /// Primitive extreme-ray directions modulo the linear part, each
    /// projected onto the orthogonal complement of the linear part.
    pub fn edges(&self) -> &[QVec] {
        &self.edges
    }

    /// Canonical basis of `C ∩ (−C)`.
    pub fn linear_part(&self) -> &[QVec] {
        &self.linear_part
    }

    pub fn linear_part_dim(&self) -> usize {
        self.linear_part.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.linear_part.is_empty()
    }

    /// Generators of the dual cone: both signs of each dual lineality basis
    /// vector, followed by the dual extreme rays.
    pub fn dual_generators(&self) -> Vec<QVec> {
        let mut out = Vec::new();
        for b in &self.dual.lineality {
            out.push(b.clone());
            out.push(-b);
        }
        out.extend(self.dual.rays.iter().cloned());
        out
    }

    pub fn dual(&self) -> Result<Cone> {
        Cone::new(self.ambient_dim, self.dual_generators())
    }

    pub fn contains(&self, x: &QVec) -> Result<bool> {
        x.check_dim(self.ambient_dim)?;
        Ok(self.dual.lineality.iter().all(|b| b.dot(x).is_zero())
            && self.dual.rays.iter().all(|y| !y.dot(x).is_negative()))
    }

    /// Whether `y` lies in the relative interior of the dual cone.
    pub fn ri_dual_contains(&self, y: &QVec) -> Result<bool> {
        y.check_dim(self.ambient_dim)?;
        Ok(self.linear_part.iter().all(|b| b.dot(y).is_zero())
            && self.edges.iter().all(|e| y.dot(e).is_positive()))
    }

    /// Set equality, comparing canonical edges and linear parts.
    pub fn same_set(&self, other: &Cone) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.linear_part == other.linear_part
            && self.edges == other.edges
    }
}

pub fn cone_edges(c: &Cone) -> Vec<QVec> {
    c.edges().to_vec()
}

pub fn cone_linear_part(c: &Cone) -> Vec<QVec> {
    c.linear_part().to_vec()
}

pub fn dual_cone(c: &Cone) -> Result<Cone> {
    c.dual()
}

pub fn ri_dual_membership(c: &Cone, y: &QVec) -> Result<bool> {
    c.ri_dual_contains(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> QVec {
        QVec::from_ints(c)
    }

    #[test]
    fn interior_generator_is_not_an_edge() {
        let c = Cone::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(c.edges(), &[v(&[0, 1]), v(&[1, 0])]);
        assert!(c.is_pointed());
    }

    #[test]
    fn half_plane() {
        let c = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(c.edges(), &[v(&[0, 1])]);
        assert_eq!(c.linear_part(), &[v(&[1, 0])]);
        let d = c.dual().unwrap();
        assert_eq!(d.edges(), &[v(&[0, 1])]);
        assert!(d.is_pointed());
    }

    #[test]
    fn half_plane_with_skew_generator_projects_edge() {
        let c = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[3, 2]]).unwrap();
        assert_eq!(c.edges(), &[v(&[0, 1])]);
    }

    #[test]
    fn linear_subspace_has_no_edges() {
        let c = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]).unwrap();
        assert!(c.edges().is_empty());
        assert_eq!(c.linear_part_dim(), 2);
        let d = c.dual().unwrap();
        assert!(d.generators().is_empty());
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(c.dual().unwrap().same_set(&c));
        assert_eq!(c.linear_part_dim(), 0);
    }

    #[test]
    fn dual_of_skew_cone() {
        let c = Cone::from_ints(2, &[&[1, 0], &[1, 1]]).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(d.edges(), &[v(&[0, 1]), v(&[1, -1])]);
    }

    #[test]
    fn relative_interior_of_dual() {
        let orthant = Cone::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(orthant.ri_dual_contains(&v(&[1, 1])).unwrap());
        assert!(!orthant.ri_dual_contains(&v(&[1, 0])).unwrap());
        let half = Cone::from_ints(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(half.ri_dual_contains(&v(&[0, 2])).unwrap());
        assert!(!half.ri_dual_contains(&v(&[1, 2])).unwrap());
        assert_eq!(
            half.ri_dual_contains(&v(&[1, 2, 3])),
            Err(Error::DimMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn zero_cone_and_membership() {
        let z = Cone::new(3, vec![]).unwrap();
        assert!(z.edges().is_empty());
        assert!(z.contains(&v(&[0, 0, 0])).unwrap());
        assert!(!z.contains(&v(&[1, 0, 0])).unwrap());
        let c = Cone::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(c.contains(&v(&[1, 2, 0])).unwrap());
        assert!(!c.contains(&v(&[1, -2, 0])).unwrap());
    }

    #[test]
    fn three_dimensional_square_cone() {
        let c = Cone::from_ints(
            3,
            &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]],
        )
        .unwrap();
        assert_eq!(c.edges().len(), 4);
        assert_eq!(c.dual().unwrap().edges().len(), 4);
        assert!(c.dual().unwrap().dual().unwrap().same_set(&c));
    }

    #[test]
    fn zero_generator_rejected_and_dimension_guard() {
        assert_eq!(Cone::from_ints(2, &[&[0, 0]]), Err(Error::ZeroVector));
        let err = Cone::new(9, vec![QVec::unit(9, 0)]).unwrap_err();
        assert!(matches!(err, Error::DimTooLarge { dim: 9, .. }));
    }
}
