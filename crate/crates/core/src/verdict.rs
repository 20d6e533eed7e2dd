//! Stability thresholds and verdict vocabulary shared by all pipelines.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed};

use crate::exactgeom::Rat;

/// A rational threshold that may be `+∞` (no invariant valuations).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtRat {
    Finite(Rat),
    Infinite,
}

impl ExtRat {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinite)
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        match self {
            ExtRat::Finite(x) => x.cmp(r),
            ExtRat::Infinite => Ordering::Greater,
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{r}"),
            ExtRat::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Verdict {
    KUnstable,
    KSemistable,
    KPolystable,
    UniformlyKStable,
    /// No invariant valuations at all; both thresholds are infinite.
    Vacuous,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::KUnstable => "k-unstable",
            Verdict::KSemistable => "k-semistable",
            Verdict::KPolystable => "k-polystable",
            Verdict::UniformlyKStable => "uniformly-k-stable",
            Verdict::Vacuous => "vacuous",
        }
    }

    /// `δ > 1` is uniform stability, `δ >= 1` semistability, anything less is unstable.
    pub fn from_delta(delta: &ExtRat) -> Verdict {
        match delta {
            ExtRat::Infinite => Verdict::Vacuous,
            ExtRat::Finite(d) => match d.cmp(&Rat::one()) {
                Ordering::Greater => Verdict::UniformlyKStable,
                Ordering::Equal => Verdict::KSemistable,
                Ordering::Less => Verdict::KUnstable,
            },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Group relative to which a verdict holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Scope {
    Absolute,
    GEquivariant,
    TEquivariant,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Absolute => "absolute",
            Scope::GEquivariant => "G-equivariant",
            Scope::TEquivariant => "T-equivariant",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Greatest Ricci lower bound of the anticanonical class: `min(1, δ)`.
pub fn beta_from_delta(delta: &Rat) -> Rat {
    debug_assert!(delta.is_positive());
    delta.clone().min(Rat::one())
}

/// `min(1, δ)`, which is `1` when `δ` is infinite.
pub fn beta_ext(delta: &ExtRat) -> Rat {
    match delta {
        ExtRat::Finite(d) => beta_from_delta(d),
        ExtRat::Infinite => Rat::one(),
    }
}
