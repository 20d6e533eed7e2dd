//! Equivariant δ-invariant and Donaldson–Futaki pairings for spherical Fano
//! varieties given by their combinatorial package.
//!
//! For a `G`-invariant valuation `v` in the valuation cone, the special test
//! configuration it induces has
//!
//! ```text
//! DF(v) = V · <2ρ_Q − bar_DH(Δ⁺), w>,   π(w) = v,
//! ```
//!
//! and the expected vanishing order is `S(v) = A(v) − DF(v)`. Since `A` is
//! linear on colored cones, `δ_G` is the minimum of `a_D / (a_D − DF(u_D))`
//! over the primitive edge generators `u_D` of the colored fan inside the
//! valuation cone.
//!
//! Stability cone criteria are evaluated as sign conditions on the linear
//! functional `DF` over the edges and linear part of the valuation cone:
//! polystable iff `DF` vanishes on the linear part and is positive on every
//! edge; uniformly stable iff additionally the linear part is trivial. Note
//! the cone criteria are sometimes stated with `bar_DH(Δ⁺) − 2ρ_Q` in place of
//! `2ρ_Q − bar_DH(Δ⁺)` for the polystable case; that sign is incompatible
//! with `DF >= 0` characterizing semistability, and the convention here
//! follows `DF`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::{Cone, Polytope, QMat, QVec, Rat};
use crate::measure::{barycenter, PolyDensity, WeightedBarycenter};
use crate::toric::ToricFano;
use crate::verdict::{beta_ext, ExtRat, Verdict};

/// A primitive edge generator of a colored cone, with its log discrepancy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredEdge {
    pub generator: QVec,
    pub a: Rat,
}

impl ColoredEdge {
    pub fn new(generator: QVec, a: Rat) -> Self {
        ColoredEdge { generator, a }
    }
}

/// Raw spherical data before validation.
#[derive(Clone, Debug)]
pub struct SphericalInput {
    pub n_rank: usize,
    pub t_rank: usize,
    /// `n_rank × t_rank` surjection from the cocharacters of `T` onto `N_B`.
    pub pi: QMat,
    pub valuation_cone_generators: Vec<QVec>,
    pub colored_fan_edges: Vec<ColoredEdge>,
    /// Moment polytope in character coordinates (dimension `t_rank`).
    pub moment_polytope: Polytope,
    pub positive_roots: Vec<QVec>,
    pub levi_subset: Vec<QVec>,
    pub dh: PolyDensity,
    pub v_const: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalFanoData {
    n_rank: usize,
    t_rank: usize,
    pi: QMat,
    valuation_cone: Cone,
    colored_fan_edges: Vec<ColoredEdge>,
    moment_polytope: Polytope,
    positive_roots: Vec<QVec>,
    levi_subset: Vec<QVec>,
    dh: PolyDensity,
    v_const: Rat,
    two_rho_q: QVec,
    bar: WeightedBarycenter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeScore {
    pub generator: QVec,
    pub a: Rat,
    pub df: Rat,
    /// `a − DF`
    pub s: Rat,
    /// `a / S`
    pub ratio: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalDelta {
    pub value: ExtRat,
    pub witness: Option<EdgeScore>,
    pub scores: Vec<EdgeScore>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalVerdict {
    pub verdict: Verdict,
    pub delta: ExtRat,
    pub beta: Rat,
    pub witness: Option<EdgeScore>,
    pub aut_dim: usize,
    pub polystable: bool,
    pub uniform: bool,
}

/// Sum of the positive roots outside the Levi subsystem.
pub fn two_rho_q(dim: usize, positive_roots: &[QVec], levi_subset: &[QVec]) -> Result<QVec> {
    for r in positive_roots {
        r.check_dim(dim)?;
    }
    if let Some(bad) = levi_subset.iter().find(|r| !positive_roots.contains(r)) {
        return Err(Error::BadLeviSubset(bad.to_string()));
    }
    Ok(positive_roots
        .iter()
        .filter(|r| !levi_subset.contains(r))
        .fold(QVec::zeros(dim), |acc, r| &acc + r))
}

fn valid_coefficient(a: &Rat) -> bool {
    a.is_one() || *a >= Rat::from_integer(2.into())
}

impl SphericalFanoData {
    pub fn new(input: SphericalInput) -> Result<Self> {
        let SphericalInput {
            n_rank,
            t_rank,
            pi,
            valuation_cone_generators,
            colored_fan_edges,
            moment_polytope,
            positive_roots,
            levi_subset,
            dh,
            v_const,
        } = input;

        if n_rank == 0 || t_rank < n_rank {
            return Err(Error::InvalidData(format!(
                "need 0 < n_rank <= t_rank, got n_rank = {n_rank}, t_rank = {t_rank}"
            )));
        }
        if pi.shape() != (n_rank, t_rank) {
            let (r, c) = pi.shape();
            return Err(Error::InvalidData(format!(
                "projection has shape {r}x{c}, expected {n_rank}x{t_rank}"
            )));
        }
        if pi.rank() != n_rank {
            return Err(Error::InvalidData(
                "projection does not have full row rank".into(),
            ));
        }
        if !v_const.is_positive() {
            return Err(Error::InvalidData(format!(
                "V must be positive, got {v_const}"
            )));
        }

        let valuation_cone = Cone::new(n_rank, valuation_cone_generators)?;

        let mut edges = Vec::with_capacity(colored_fan_edges.len());
        for e in colored_fan_edges {
            e.generator.check_dim(n_rank)?;
            let generator = e.generator.primitive()?;
            if !valid_coefficient(&e.a) {
                return Err(Error::InvalidData(format!(
                    "coefficient a = {} of edge {} must be 1 or at least 2",
                    e.a, generator
                )));
            }
            if !valuation_cone.contains(&generator)? {
                return Err(Error::NotInValuationCone(generator.to_string()));
            }
            edges.push(ColoredEdge { generator, a: e.a });
        }

        if moment_polytope.ambient_dim() != t_rank {
            return Err(Error::DimMismatch {
                expected: t_rank,
                found: moment_polytope.ambient_dim(),
            });
        }
        if dh.dim() != t_rank {
            return Err(Error::DimMismatch {
                expected: t_rank,
                found: dh.dim(),
            });
        }
        let two_rho_q = two_rho_q(t_rank, &positive_roots, &levi_subset)?;

        let bar = barycenter(&moment_polytope, &dh)?;
        let center = moment_polytope.vertex_average();
        let mut samples = vec![center.clone()];
        for v in moment_polytope.vertices() {
            samples.push((&center + v).scale(&Rat::new(1.into(), 2.into())));
        }
        if let Some(p) = samples.iter().find(|p| !dh.eval(p).is_positive()) {
            return Err(Error::InvalidData(format!(
                "density is not positive at interior point {p} of the moment polytope"
            )));
        }

        let shift = &two_rho_q - &bar.point;
        if let Some(k) = pi.kernel().iter().find(|k| !shift.dot(k).is_zero()) {
            return Err(Error::InvalidData(format!(
                "2rho_Q - bar is not orthogonal to kernel vector {k} of the projection; DF would depend on the preimage"
            )));
        }

        Ok(SphericalFanoData {
            n_rank,
            t_rank,
            pi,
            valuation_cone,
            colored_fan_edges: edges,
            moment_polytope,
            positive_roots,
            levi_subset,
            dh,
            v_const,
            two_rho_q,
            bar,
        })
    }

    pub fn n_rank(&self) -> usize {
        self.n_rank
    }

    pub fn t_rank(&self) -> usize {
        self.t_rank
    }

    pub fn pi(&self) -> &QMat {
        &self.pi
    }

    pub fn valuation_cone(&self) -> &Cone {
        &self.valuation_cone
    }

    pub fn colored_fan_edges(&self) -> &[ColoredEdge] {
        &self.colored_fan_edges
    }

    pub fn moment_polytope(&self) -> &Polytope {
        &self.moment_polytope
    }

    pub fn positive_roots(&self) -> &[QVec] {
        &self.positive_roots
    }

    pub fn levi_subset(&self) -> &[QVec] {
        &self.levi_subset
    }

    pub fn dh(&self) -> &PolyDensity {
        &self.dh
    }

    pub fn v_const(&self) -> &Rat {
        &self.v_const
    }

    pub fn two_rho_q(&self) -> &QVec {
        &self.two_rho_q
    }

    /// Duistermaat–Heckman barycenter of the moment polytope.
    pub fn dh_barycenter(&self) -> &WeightedBarycenter {
        &self.bar
    }

    /// `V · <2ρ_Q − bar, w>` for an arbitrary `w`; equals `DF(π w)`.
    pub fn df_at_preimage(&self, w: &QVec) -> Rat {
        &self.v_const * (&self.two_rho_q - &self.bar.point).dot(w)
    }

    fn preimage(&self, v: &QVec) -> Result<QVec> {
        v.check_dim(self.n_rank)?;
        self.pi
            .solve(v)
            .ok_or_else(|| Error::ProjectionSolveFailed(v.to_string()))
    }

    /// Donaldson–Futaki invariant of the test configuration of `v`.
    pub fn df_edge(&self, v: &QVec) -> Result<Rat> {
        v.check_dim(self.n_rank)?;
        if !self.valuation_cone.contains(v)? {
            return Err(Error::NotInValuationCone(v.to_string()));
        }
        Ok(self.df_at_preimage(&self.preimage(v)?))
    }

    /// The vector `y` in `N_B` with `DF(v) = <y, v>` for all `v`.
    pub fn df_functional(&self) -> Result<QVec> {
        (0..self.n_rank)
            .map(|j| Ok(self.df_at_preimage(&self.preimage(&QVec::unit(self.n_rank, j))?)))
            .collect::<Result<Vec<_>>>()
            .map(QVec::new)
    }

    pub fn edge_scores(&self) -> Result<Vec<EdgeScore>> {
        self.colored_fan_edges
            .iter()
            .map(|e| {
                let df = self.df_edge(&e.generator)?;
                let s = &e.a - &df;
                if !s.is_positive() {
                    return Err(Error::InconsistentData(format!(
                        "expected vanishing order a - DF = {s} is not positive on edge {}",
                        e.generator
                    )));
                }
                Ok(EdgeScore {
                    generator: e.generator.clone(),
                    a: e.a.clone(),
                    ratio: &e.a / &s,
                    df,
                    s,
                })
            })
            .collect()
    }

    /// `min a/(a − DF)` over colored fan edges; infinite without edges.
    pub fn delta_spherical(&self) -> Result<SphericalDelta> {
        let scores = self.edge_scores()?;
        let witness = scores
            .iter()
            .reduce(|best, s| if s.ratio < best.ratio { s } else { best })
            .cloned();
        let value = match &witness {
            Some(w) => ExtRat::Finite(w.ratio.clone()),
            None => ExtRat::Infinite,
        };
        Ok(SphericalDelta {
            value,
            witness,
            scores,
        })
    }

    /// `DF` vanishes on the linear part and is positive on every edge of the
    /// valuation cone.
    pub fn polystable_verdict(&self) -> Result<bool> {
        self.valuation_cone.ri_dual_contains(&self.df_functional()?)
    }

    pub fn uniform_verdict(&self) -> Result<bool> {
        Ok(self.valuation_cone.is_pointed() && self.polystable_verdict()?)
    }

    /// Dimension of the linear part of the valuation cone, which is the
    /// dimension of the equivariant automorphism group.
    pub fn aut_dimension(&self) -> usize {
        self.valuation_cone.linear_part_dim()
    }

    /// For a full valuation cone, checks `δ_G <= 1` and reports whether
    /// equality holds.
    pub fn horospherical_bound_check(&self) -> Result<bool> {
        if self.valuation_cone.linear_part_dim() != self.n_rank {
            return Err(Error::NotHorospherical);
        }
        if self.colored_fan_edges.is_empty() {
            return Err(Error::InvalidData(
                "horospherical check needs colored fan edges".into(),
            ));
        }
        let delta = self.delta_spherical()?.value;
        let one = Rat::one();
        match delta.cmp_rat(&one) {
            std::cmp::Ordering::Greater => Err(Error::InconsistentData(format!(
                "horospherical data with delta_G = {delta} > 1"
            ))),
            ord => Ok(ord == std::cmp::Ordering::Equal),
        }
    }

    pub fn verdict(&self) -> Result<SphericalVerdict> {
        let delta = self.delta_spherical()?;
        let polystable = self.polystable_verdict()?;
        let uniform = self.uniform_verdict()?;
        let one = Rat::one();
        let verdict = if delta.value.is_infinite() {
            Verdict::Vacuous
        } else if uniform {
            Verdict::UniformlyKStable
        } else if polystable {
            Verdict::KPolystable
        } else {
            Verdict::from_delta(&delta.value)
        };
        if !delta.value.is_infinite() {
            let cmp = delta.value.cmp_rat(&one);
            if (uniform && cmp != std::cmp::Ordering::Greater)
                || (polystable && cmp == std::cmp::Ordering::Less)
                || (!uniform && cmp == std::cmp::Ordering::Greater)
            {
                return Err(Error::InconsistentData(format!(
                    "delta_G = {} disagrees with the valuation-cone criterion (polystable: {polystable}, uniform: {uniform}); \
                     the colored fan edges do not cover the valuation cone",
                    delta.value
                )));
            }
        }
        Ok(SphericalVerdict {
            verdict,
            beta: beta_ext(&delta.value),
            delta: delta.value,
            witness: delta.witness,
            aut_dim: self.aut_dimension(),
            polystable,
            uniform,
        })
    }
}

/// A toric Fano variety as a spherical variety for its own torus.
pub fn toric_embed(x: &ToricFano) -> Result<SphericalFanoData> {
    let n = x.rank();
    SphericalFanoData::new(SphericalInput {
        n_rank: n,
        t_rank: n,
        pi: QMat::identity(n),
        valuation_cone_generators: Cone::full_space(n)?.generators().to_vec(),
        colored_fan_edges: x
            .rays()
            .iter()
            .map(|v| ColoredEdge::new(v.clone(), Rat::one()))
            .collect(),
        moment_polytope: x.polytope().clone(),
        positive_roots: Vec::new(),
        levi_subset: Vec::new(),
        dh: PolyDensity::one(n),
        v_const: Rat::one(),
    })
}
