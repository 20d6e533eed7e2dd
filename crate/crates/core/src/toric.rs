//! Invariants of toric Fano varieties from their fan rays.
//!
//! With `Δ = {m : <m, v_i> >= -1}` the anticanonical polytope, every toric
//! boundary divisor has log discrepancy 1, expected vanishing order
//! `S(v_i) = 1 + <bar(Δ), v_i>` and pseudoeffective threshold
//! `T(v_i) = 1 + max_Δ <m, v_i>`. On each fan cone `A` is linear while `S` is
//! affine and `T` convex, so both infima over invariant valuations are taken
//! on the rays.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactgeom::{Halfspace, Polytope, QVec, Rat};
use crate::measure::{barycenter, PolyDensity};
use crate::verdict::{beta_from_delta, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricFano {
    rank: usize,
    rays: Vec<QVec>,
    polytope: Polytope,
    barycenter: QVec,
}

/// Log discrepancy, expected vanishing order and pseudoeffective threshold of
/// one toric divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayScore {
    pub ray: QVec,
    pub a: Rat,
    pub s: Rat,
    pub t: Rat,
    pub ratio_delta: Rat,
    pub ratio_alpha: Rat,
}

/// A threshold together with the ray realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed {
    pub value: Rat,
    pub witness: QVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricVerdict {
    pub verdict: Verdict,
    pub delta: Rat,
    pub alpha: Rat,
    pub beta: Rat,
    pub witness: QVec,
    /// Always false: the torus makes the automorphism group positive-dimensional.
    pub uniform: bool,
}

/// `{m : <m, v_i> >= -1}` with vertices.
pub fn anticanonical_polytope(rays: &[QVec]) -> Result<Polytope> {
    let rank = rays.first().ok_or(Error::UnboundedPolytope)?.dim();
    let hs: Vec<Halfspace> = rays
        .iter()
        .map(|v| Halfspace::new(v.clone(), -Rat::one()))
        .collect();
    match Polytope::from_halfspaces(rank, &hs) {
        Err(Error::Unbounded) => Err(Error::UnboundedPolytope),
        other => other,
    }
}

impl ToricFano {
    /// Validates the rays: common dimension, primitive integer entries, no
    /// repeats, positive spanning, and every ray's halfspace touching `Δ`.
    pub fn new(rays: Vec<QVec>) -> Result<Self> {
        let rank = rays
            .first()
            .ok_or_else(|| Error::InvalidData("no rays".into()))?
            .dim();
        if rank == 0 {
            return Err(Error::InvalidData("rank must be positive".into()));
        }
        for (i, v) in rays.iter().enumerate() {
            v.check_dim(rank)?;
            if !v.is_integral() || v.primitive()? != *v {
                return Err(Error::InvalidData(format!(
                    "ray {v} is not a primitive lattice vector"
                )));
            }
            if rays[..i].contains(v) {
                return Err(Error::InvalidData(format!("ray {v} is repeated")));
            }
        }
        let polytope = anticanonical_polytope(&rays)?;
        for v in &rays {
            let min = polytope
                .vertices()
                .iter()
                .map(|m| m.dot(v))
                .min()
                .expect("nonempty");
            if min != -Rat::one() {
                return Err(Error::InvalidData(format!(
                    "halfspace of ray {v} does not touch the anticanonical polytope"
                )));
            }
        }
        let barycenter = barycenter(&polytope, &PolyDensity::one(rank))?.point;
        Ok(ToricFano {
            rank,
            rays,
            polytope,
            barycenter,
        })
    }

    pub fn from_ints(rays: &[&[i64]]) -> Result<Self> {
        Self::new(rays.iter().map(|r| QVec::from_ints(r)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    /// Lebesgue barycenter of `Δ`.
    pub fn barycenter(&self) -> &QVec {
        &self.barycenter
    }

    /// Non-fatal observations: rays off the vertices of their convex hull,
    /// and a non-lattice `Δ` (the anticanonical divisor is not Cartier).
    pub fn advisories(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Ok(hull) = Polytope::from_vertices(self.rank, self.rays.clone()) {
            for v in &self.rays {
                if !hull.vertices().contains(v) {
                    out.push(format!(
                        "ray {v} is not a vertex of the convex hull of the rays"
                    ));
                }
            }
        }
        if !self.polytope.vertices().iter().all(QVec::is_integral) {
            out.push("anticanonical polytope has non-lattice vertices (not Gorenstein)".into());
        }
        out
    }
}

pub fn ray_scores(x: &ToricFano) -> Vec<RayScore> {
    x.rays
        .iter()
        .map(|v| {
            let a = Rat::one();
            let s = Rat::one() + x.barycenter.dot(v);
            let t = Rat::one() + x.polytope.max_pairing(v);
            RayScore {
                ray: v.clone(),
                ratio_delta: &a / &s,
                ratio_alpha: &a / &t,
                a,
                s,
                t,
            }
        })
        .collect()
}

/// First minimum in ray order.
fn argmin(scores: &[RayScore], key: impl Fn(&RayScore) -> &Rat) -> Witnessed {
    let best = scores
        .iter()
        .reduce(|best, s| if key(s) < key(best) { s } else { best })
        .expect("a toric Fano variety has rays");
    Witnessed {
        value: key(best).clone(),
        witness: best.ray.clone(),
    }
}

/// `min_i 1 / (1 + <bar(Δ), v_i>)` and the ray attaining it.
pub fn delta_toric(x: &ToricFano) -> Witnessed {
    argmin(&ray_scores(x), |s| &s.ratio_delta)
}

/// `min_i 1 / (1 + max_Δ <m, v_i>)` and the ray attaining it.
pub fn alpha_toric(x: &ToricFano) -> Witnessed {
    argmin(&ray_scores(x), |s| &s.ratio_alpha)
}

pub fn verdict_toric(x: &ToricFano) -> ToricVerdict {
    let scores = ray_scores(x);
    let delta = argmin(&scores, |s| &s.ratio_delta);
    let alpha = argmin(&scores, |s| &s.ratio_alpha);
    let verdict = if delta.value >= Rat::one() {
        Verdict::KSemistable
    } else {
        Verdict::KUnstable
    };
    ToricVerdict {
        verdict,
        beta: beta_from_delta(&delta.value),
        delta: delta.value,
        alpha: alpha.value,
        witness: delta.witness,
        uniform: false,
    }
}

/// `(δ(X, −tK_X), α(X, −tK_X)) = (δ/t, α/t)`.
pub fn rescale_polarization(x: &ToricFano, t: &Rat) -> Result<(Rat, Rat)> {
    if !t.is_positive() {
        return Err(Error::NonPositiveScale(t.to_string()));
    }
    Ok((delta_toric(x).value / t, alpha_toric(x).value / t))
}
