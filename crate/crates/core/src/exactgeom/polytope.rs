//! Bounded rational polytopes with both representations kept in sync.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::cone::{double_description, Cone};
use super::limits;
use super::linalg::affine_dim;
use super::rat::{QVec, Rat};
use crate::error::{Error, Result};

/// The halfspace `<normal, m> >= offset`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Halfspace {
    pub normal: QVec,
    pub offset: Rat,
}

impl Halfspace {
    pub fn new(normal: QVec, offset: Rat) -> Self {
        Halfspace { normal, offset }
    }

    pub fn contains(&self, m: &QVec) -> bool {
        self.normal.dot(m) >= self.offset
    }

    pub fn is_tight(&self, m: &QVec) -> bool {
        self.normal.dot(m) == self.offset
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, m> >= {}", self.normal, self.offset)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    halfspaces: Vec<Halfspace>,
    vertices: Vec<QVec>,
    dim: isize,
}

fn check_polytope_dim(dim: usize) -> Result<()> {
    let limit = limits::polytope_max_dim();
    if dim > limit {
        return Err(Error::DimTooLarge { dim, limit });
    }
    Ok(())
}

fn homogenize(p: &QVec, t: Rat) -> QVec {
    let mut c = p.coords().to_vec();
    c.push(t);
    QVec::new(c)
}

impl Polytope {
    /// Vertex enumeration for `{m : <n_i, m> >= b_i}`. The stored halfspaces
    /// are the canonical facet description regenerated from the vertices.
    pub fn from_halfspaces(ambient_dim: usize, halfspaces: &[Halfspace]) -> Result<Self> {
        check_polytope_dim(ambient_dim)?;
        let mut constraints = Vec::with_capacity(halfspaces.len() + 1);
        for h in halfspaces {
            h.normal.check_dim(ambient_dim)?;
            constraints.push(homogenize(&h.normal, -h.offset.clone()));
        }
        constraints.push(QVec::unit(ambient_dim + 1, ambient_dim));

        let dd = double_description(&constraints, ambient_dim + 1);
        let mut vertices = Vec::new();
        let mut recession = !dd.lineality.is_empty();
        for r in &dd.rays {
            let t = &r[ambient_dim];
            if t.is_positive() {
                vertices.push(QVec::new(r[..ambient_dim].iter().map(|c| c / t).collect()));
            } else {
                recession = true;
            }
        }
        if vertices.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if recession {
            return Err(Error::Unbounded);
        }
        Self::from_vertices(ambient_dim, vertices)
    }

    /// Convex hull of `points`. Non-extreme points are dropped.
    pub fn from_vertices(ambient_dim: usize, points: Vec<QVec>) -> Result<Self> {
        check_polytope_dim(ambient_dim)?;
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        for p in &points {
            p.check_dim(ambient_dim)?;
        }
        let lifted: Vec<QVec> = points.iter().map(|p| homogenize(p, Rat::one())).collect();
        let cone = Cone::new(ambient_dim + 1, lifted)?;

        let mut vertices: Vec<QVec> = cone
            .edges()
            .iter()
            .map(|e| {
                let t = &e[ambient_dim];
                QVec::new(e[..ambient_dim].iter().map(|c| c / t).collect())
            })
            .collect();
        vertices.sort();
        vertices.dedup();

        // Dual rays give facets; the ray for t >= 0 (only extreme when the
        // polytope is a point) is tight at no vertex and is skipped.
        let mut halfspaces = Vec::new();
        for y in cone.dual_generators() {
            let h = Halfspace::new(
                QVec::new(y[..ambient_dim].to_vec()),
                -y[ambient_dim].clone(),
            );
            if !h.normal.is_zero() && vertices.iter().any(|v| h.is_tight(v)) {
                halfspaces.push(h);
            }
        }
        halfspaces.sort();
        halfspaces.dedup();

        let dim = affine_dim(&vertices);
        Ok(Polytope {
            ambient_dim,
            halfspaces,
            vertices,
            dim,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Sorted canonical halfspaces. Equalities appear as opposite pairs.
    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Lexicographically sorted vertices.
    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn contains(&self, m: &QVec) -> bool {
        self.halfspaces.iter().all(|h| h.contains(m))
    }

    /// Halfspaces that are not tight on the whole polytope, i.e. the facets.
    pub fn facets(&self) -> impl Iterator<Item = &Halfspace> {
        self.halfspaces
            .iter()
            .filter(|h| self.vertices.iter().any(|v| !h.is_tight(v)))
    }

    /// Average of the vertices; always a relative-interior point.
    pub fn vertex_average(&self) -> QVec {
        let n = Rat::from_integer(self.vertices.len().into());
        let sum = self
            .vertices
            .iter()
            .fold(QVec::zeros(self.ambient_dim), |acc, v| &acc + v);
        sum.scale(&(Rat::one() / n))
    }

    pub fn translate(&self, t: &QVec) -> Result<Polytope> {
        t.check_dim(self.ambient_dim)?;
        Self::from_vertices(
            self.ambient_dim,
            self.vertices.iter().map(|v| v + t).collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> Result<Polytope> {
        if !s.is_positive() {
            return Err(Error::NonPositiveScale(s.to_string()));
        }
        Self::from_vertices(
            self.ambient_dim,
            self.vertices.iter().map(|v| v.scale(s)).collect(),
        )
    }

    /// Max of `<m, y>` over the polytope.
    pub fn max_pairing(&self, y: &QVec) -> Rat {
        self.vertices
            .iter()
            .map(|v| v.dot(y))
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

pub fn hrep_to_vrep(ambient_dim: usize, halfspaces: &[Halfspace]) -> Result<Polytope> {
    Polytope::from_halfspaces(ambient_dim, halfspaces)
}

pub fn vrep_to_hrep(ambient_dim: usize, vertices: Vec<QVec>) -> Result<Polytope> {
    Polytope::from_vertices(ambient_dim, vertices)
}
