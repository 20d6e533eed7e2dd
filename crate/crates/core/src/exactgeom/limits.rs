//! Dimension guards for the double description routines.
//!
//! `KDELTA_MAX_DIM`, when set to a positive integer, replaces both defaults.

pub const DEFAULT_CONE_MAX_DIM: usize = 8;
pub const DEFAULT_POLYTOPE_MAX_DIM: usize = 6;

fn env_override() -> Option<usize> {
    std::env::var("KDELTA_MAX_DIM")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
}

pub fn cone_max_dim() -> usize {
    env_override().unwrap_or(DEFAULT_CONE_MAX_DIM)
}

pub fn polytope_max_dim() -> usize {
    env_override().unwrap_or(DEFAULT_POLYTOPE_MAX_DIM)
}
