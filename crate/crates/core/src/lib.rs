//! Exact α-, δ- and β-invariants and K-stability verdicts for Fano varieties
//! described by combinatorial data: toric fans, spherical valuation cones with
//! moment polytopes, and finite group actions on the projective line.

pub mod cli;
pub mod error;
pub mod exactgeom;
pub mod logcurve;
pub mod measure;
pub mod spherical;
pub mod toric;
pub mod verdict;

pub use error::{Error, Result};
