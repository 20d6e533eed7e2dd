//! Log Fano pairs `(P^1, B)` and finite group actions on `P^1`.
//!
//! For `B = Σ (1 − 1/m_i) p_i` the polarization `−(K + B)` has degree
//! `d = 2 − Σ (1 − 1/m_i)`. A point has `S = d/2` and `T = d`, and log
//! discrepancy `1/m_i` at a branch point, `1` elsewhere. A finite group
//! `G ⊂ PGL(2)` is handled through its quotient `P^1 → P^1/G`, whose branch
//! data has the same equivariant thresholds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactgeom::Rat;

/// Sorted ramification indices `m_i >= 2` of a log Fano pair on `P^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSignature {
    multiplicities: Vec<u32>,
    log_degree: Rat,
}

fn ratio(n: u32, d: u32) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `2 − Σ (1 − 1/m_i)`, without the log Fano check.
fn raw_log_degree(mults: &[u32]) -> Rat {
    mults.iter().fold(Rat::from_integer(2.into()), |acc, &m| {
        acc - (Rat::one() - ratio(1, m))
    })
}

impl BranchSignature {
    pub fn new(mut multiplicities: Vec<u32>) -> Result<Self> {
        if let Some(m) = multiplicities.iter().find(|&&m| m < 2) {
            return Err(Error::BadSignature(format!("multiplicity {m} is below 2")));
        }
        multiplicities.sort_unstable();
        let log_degree = raw_log_degree(&multiplicities);
        if !log_degree.is_positive() {
            return Err(Error::NotLogFano(log_degree.to_string()));
        }
        Ok(BranchSignature {
            multiplicities,
            log_degree,
        })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn log_degree(&self) -> &Rat {
        &self.log_degree
    }

    /// Largest ramification index, 1 when there are no branch points.
    pub fn max_multiplicity(&self) -> u32 {
        self.multiplicities.last().copied().unwrap_or(1)
    }

    /// Smallest log discrepancy over points of `P^1`.
    fn min_log_discrepancy(&self) -> Rat {
        ratio(1, self.max_multiplicity())
    }
}

impl fmt::Display for BranchSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

pub fn log_degree(sig: &[u32]) -> Result<Rat> {
    BranchSignature::new(sig.to_vec()).map(|s| s.log_degree)
}

/// `δ(P^1, B) = (2/d) · min(1, min 1/m_i)`.
pub fn delta_log_p1(sig: &BranchSignature) -> Rat {
    Rat::from_integer(2.into()) / sig.log_degree() * sig.min_log_discrepancy()
}

/// `α(P^1, B) = (1/d) · min(1, min 1/m_i)`.
pub fn alpha_log_p1(sig: &BranchSignature) -> Rat {
    sig.min_log_discrepancy() / sig.log_degree()
}

/// Finite subgroups of `PGL(2)` up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Cyclic(u32),
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupFamily {
    /// Parses a family name and its parameter (needed for cyclic and dihedral).
    pub fn parse(family: &str, parameter: Option<u32>) -> Result<Self> {
        let need = |p: Option<u32>| {
            p.ok_or_else(|| Error::InvalidData(format!("family {family:?} needs a parameter")))
        };
        let g = match family {
            "cyclic" => GroupFamily::Cyclic(need(parameter)?),
            "dihedral" => GroupFamily::Dihedral(need(parameter)?),
            "tetrahedral" => GroupFamily::Tetrahedral,
            "octahedral" => GroupFamily::Octahedral,
            "icosahedral" => GroupFamily::Icosahedral,
            other => {
                return Err(Error::InvalidData(format!(
                    "unknown group family {other:?}"
                )))
            }
        };
        match g {
            GroupFamily::Cyclic(0) => {
                Err(Error::InvalidData("cyclic order must be positive".into()))
            }
            GroupFamily::Dihedral(m) if m < 2 => Err(Error::InvalidData(
                "dihedral parameter must be at least 2".into(),
            )),
            g => Ok(g),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupFamily::Cyclic(_) => "cyclic",
            GroupFamily::Dihedral(_) => "dihedral",
            GroupFamily::Tetrahedral => "tetrahedral",
            GroupFamily::Octahedral => "octahedral",
            GroupFamily::Icosahedral => "icosahedral",
        }
    }

    pub fn parameter(&self) -> Option<u32> {
        match *self {
            GroupFamily::Cyclic(m) | GroupFamily::Dihedral(m) => Some(m),
            _ => None,
        }
    }

    pub fn order(&self) -> u32 {
        match *self {
            GroupFamily::Cyclic(m) => m,
            GroupFamily::Dihedral(m) => 2 * m,
            GroupFamily::Tetrahedral => 12,
            GroupFamily::Octahedral => 24,
            GroupFamily::Icosahedral => 60,
        }
    }

    fn raw_signature(&self) -> Vec<u32> {
        match *self {
            GroupFamily::Cyclic(1) => vec![],
            GroupFamily::Cyclic(m) => vec![m, m],
            GroupFamily::Dihedral(m) => vec![2, 2, m],
            GroupFamily::Tetrahedral => vec![2, 3, 3],
            GroupFamily::Octahedral => vec![2, 3, 4],
            GroupFamily::Icosahedral => vec![2, 3, 5],
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(m) => write!(f, "{}({m})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupSpec {
    pub family: GroupFamily,
    pub order: u32,
    pub signature: BranchSignature,
}

/// Branch data of `P^1 → P^1/G`, checked against Riemann–Hurwitz:
/// `Σ (1 − 1/m_i) = 2 − 2/|G|`.
pub fn quotient_signature(g: GroupFamily) -> Result<BranchSignature> {
    let mults = g.raw_signature();
    let order = g.order();
    let lhs = mults.iter().fold(Rat::from_integer(0.into()), |acc, &m| {
        acc + Rat::one() - ratio(1, m)
    });
    let rhs = Rat::from_integer(2.into()) - ratio(2, order);
    if lhs != rhs {
        return Err(Error::BadSignature(format!(
            "Riemann-Hurwitz fails for {g}: sum (1 - 1/m_i) = {lhs}, expected {rhs}"
        )));
    }
    BranchSignature::new(mults)
}

impl FiniteGroupSpec {
    pub fn new(family: GroupFamily) -> Result<Self> {
        Ok(FiniteGroupSpec {
            family,
            order: family.order(),
            signature: quotient_signature(family)?,
        })
    }
}

/// Equivariant thresholds of a finite group acting on `P^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub delta: Rat,
    pub alpha: Rat,
    pub min_orbit_length: u32,
    /// Ramification index over the shortest orbit; 1 for a free orbit.
    pub witness_multiplicity: u32,
}

pub fn delta_g_p1(g: GroupFamily) -> Result<Rat> {
    Ok(delta_log_p1(&quotient_signature(g)?))
}

pub fn alpha_g_p1(g: GroupFamily) -> Result<Rat> {
    Ok(alpha_log_p1(&quotient_signature(g)?))
}

/// `δ_G` and `α_G` via the quotient, checked against `δ_G = 2 α_G` and
/// against the length of the shortest orbit, `|G| / max m_i`.
pub fn group_invariants(g: GroupFamily) -> Result<GroupInvariants> {
    let spec = FiniteGroupSpec::new(g)?;
    let delta = delta_log_p1(&spec.signature);
    let alpha = alpha_log_p1(&spec.signature);
    let m = spec.signature.max_multiplicity();
    let min_orbit_length = spec.order / m;
    if delta != Rat::from_integer(min_orbit_length.into()) {
        return Err(Error::InconsistentData(format!(
            "delta_G = {delta} differs from the minimal orbit length {min_orbit_length} for {g}"
        )));
    }
    if delta != &alpha * Rat::from_integer(2.into()) {
        return Err(Error::InconsistentData(format!(
            "delta_G = {delta} is not twice alpha_G = {alpha} for {g}"
        )));
    }
    Ok(GroupInvariants {
        delta,
        alpha,
        min_orbit_length,
        witness_multiplicity: m,
    })
}
