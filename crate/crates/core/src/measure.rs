//! Exact integration of polynomial densities over rational polytopes.
//!
//! A polytope is triangulated and each simplex is pulled back to barycentric
//! coordinates, where monomials integrate by
//! `∫ λ^b = k! vol(S) ∏ b_i! / (k + |b|)!`.
//!
//! For a polytope of affine dimension `k` below the ambient dimension, the
//! reference measure is Lebesgue measure on the coordinate projection of its
//! affine hull onto the pivot coordinates. Barycenters do not depend on that
//! choice; masses do.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::linalg::{det, rref};
use crate::exactgeom::{triangulate, Polytope, QVec, Rat};

/// Polynomial in `dim` variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyDensity {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PolyDensity {
    pub fn zero(dim: usize) -> Self {
        PolyDensity {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rat) -> Self {
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(vec![0; dim], c);
        }
        p
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rat::one())
    }

    pub fn variable(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Rat) -> Self {
        let mut p = Self::zero(exponents.len());
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// `<coeffs, x> + constant`
    pub fn linear(coeffs: &QVec, constant: Rat) -> Self {
        let dim = coeffs.dim();
        let mut p = Self::constant(dim, constant);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; dim];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    /// Builds a density from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rat)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            if e.len() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &QVec) -> Rat {
        debug_assert_eq!(x.dim(), self.dim);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PolyDensity {
            dim: self.dim,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = Self::zero(self.dim);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect();
        out
    }

    /// Replaces variable `i` by `subs[i]`; all substitutes share one dimension.
    pub fn substitute(&self, subs: &[PolyDensity]) -> Self {
        debug_assert_eq!(subs.len(), self.dim);
        let new_dim = subs.first().map_or(0, |s| s.dim);
        let mut powers: Vec<Vec<PolyDensity>> = subs
            .iter()
            .map(|s| vec![PolyDensity::one(s.dim), s.clone()])
            .collect();
        let mut out = PolyDensity::zero(new_dim);
        for (e, c) in &self.terms {
            let mut t = PolyDensity::constant(new_dim, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().mul(&subs[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&powers[i][k]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// `x ↦ f(x − t)`
    pub fn shift(&self, t: &QVec) -> Self {
        let subs: Vec<PolyDensity> = (0..self.dim)
            .map(|i| {
                PolyDensity::variable(self.dim, i)
                    .add(&PolyDensity::constant(self.dim, -t[i].clone()))
            })
            .collect();
        self.substitute(&subs)
    }
}

impl fmt::Display for PolyDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Total mass and density-weighted mean of a polytope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedBarycenter {
    pub mass: Rat,
    pub point: QVec,
}

/// `∫` over a `k`-simplex of `f`, where `jac` is `k!` times the simplex volume
/// in the chosen reference measure.
fn simplex_integral(simplex: &[QVec], f: &PolyDensity, jac: &Rat) -> Rat {
    let k = simplex.len() - 1;
    let subs: Vec<PolyDensity> = (0..f.dim())
        .map(|i| {
            let coeffs = QVec::new(simplex.iter().map(|v| v[i].clone()).collect());
            PolyDensity::linear(&coeffs, Rat::zero())
        })
        .collect();
    let g = f.substitute(&subs);
    let max_deg = g.total_degree() as usize;
    let facts: Vec<BigInt> = {
        let mut v = vec![BigInt::one()];
        for n in 1..=(k + max_deg) {
            let next = v[n - 1].clone() * BigInt::from(n);
            v.push(next);
        }
        v
    };
    let mut acc = Rat::zero();
    for (e, c) in g.terms() {
        let num: BigInt = e.iter().fold(BigInt::one(), |a, &b| a * &facts[b as usize]);
        let deg: usize = e.iter().map(|&b| b as usize).sum();
        acc += c * Rat::new(num, facts[k + deg].clone());
    }
    acc * jac
}

/// `∫_S x^exponents dx` over a full-dimensional simplex with `d + 1` vertices in `Q^d`.
pub fn simplex_monomial_integral(simplex: &[QVec], exponents: &[u32]) -> Result<Rat> {
    let d = exponents.len();
    if simplex.len() != d + 1 {
        return Err(Error::DegenerateSimplex);
    }
    for v in simplex {
        v.check_dim(d)?;
    }
    let edges: Vec<QVec> = simplex[1..].iter().map(|v| v - &simplex[0]).collect();
    let jac = det(&edges).abs();
    if jac.is_zero() {
        return Err(Error::DegenerateSimplex);
    }
    let f = PolyDensity::monomial(exponents.to_vec(), Rat::one());
    Ok(simplex_integral(simplex, &f, &jac))
}

/// Pivot coordinates of the affine hull of `p`; the reference measure lives there.
fn hull_pivots(p: &Polytope) -> Vec<usize> {
    let v0 = &p.vertices()[0];
    let diffs: Vec<QVec> = p.vertices()[1..].iter().map(|v| v - v0).collect();
    rref(&diffs, p.ambient_dim()).1
}

fn jacobian(simplex: &[QVec], pivots: &[usize]) -> Rat {
    let edges: Vec<QVec> = simplex[1..]
        .iter()
        .map(|v| {
            let e = v - &simplex[0];
            QVec::new(pivots.iter().map(|&c| e[c].clone()).collect())
        })
        .collect();
    det(&edges).abs()
}

/// `∫_p f` together with `∫_p x_i f` for every coordinate, from a single triangulation.
pub fn moments(p: &Polytope, f: &PolyDensity) -> Result<(Rat, QVec)> {
    let n = p.ambient_dim();
    if f.dim() != n {
        return Err(Error::DimMismatch {
            expected: n,
            found: f.dim(),
        });
    }
    let mut mass = Rat::zero();
    let mut first = QVec::zeros(n);
    if p.dim() == 0 {
        return Ok((mass, first));
    }
    let pivots = hull_pivots(p);
    let weighted: Vec<PolyDensity> = (0..n).map(|i| PolyDensity::variable(n, i).mul(f)).collect();
    for s in triangulate(p)? {
        let jac = jacobian(&s, &pivots);
        mass += simplex_integral(&s, f, &jac);
        for (i, g) in weighted.iter().enumerate() {
            first[i] += simplex_integral(&s, g, &jac);
        }
    }
    Ok((mass, first))
}

/// Exact `∫_p f`. A zero-dimensional polytope integrates to zero.
pub fn integrate(p: &Polytope, f: &PolyDensity) -> Result<Rat> {
    integrate_over(p, f, crate::exactgeom::Apex::LexMin)
}

/// `integrate` with an explicit triangulation apex rule.
pub fn integrate_over(p: &Polytope, f: &PolyDensity, apex: crate::exactgeom::Apex) -> Result<Rat> {
    let n = p.ambient_dim();
    if f.dim() != n {
        return Err(Error::DimMismatch {
            expected: n,
            found: f.dim(),
        });
    }
    if p.dim() == 0 {
        return Ok(Rat::zero());
    }
    let pivots = hull_pivots(p);
    let mut acc = Rat::zero();
    for s in crate::exactgeom::triangulate_with(p, apex)? {
        acc += simplex_integral(&s, f, &jacobian(&s, &pivots));
    }
    Ok(acc)
}

pub fn volume(p: &Polytope) -> Result<Rat> {
    integrate(p, &PolyDensity::one(p.ambient_dim()))
}

pub fn barycenter(p: &Polytope, f: &PolyDensity) -> Result<WeightedBarycenter> {
    let (mass, first) = moments(p, f)?;
    if !mass.is_positive() {
        return Err(Error::NonPositiveMass {
            mass: mass.to_string(),
        });
    }
    let point = first.scale(&(Rat::one() / &mass));
    Ok(WeightedBarycenter { mass, point })
}

/// `∏_{α ∈ Φ⁺ ∖ Φ_L} <α, p>^exponent` in `dim` variables.
pub fn dh_density(
    dim: usize,
    positive_roots: &[QVec],
    levi_subset: &[QVec],
    exponent: u32,
) -> Result<PolyDensity> {
    if exponent == 0 || !exponent.is_multiple_of(2) {
        return Err(Error::InvalidData(format!(
            "density exponent must be a positive even integer, got {exponent}"
        )));
    }
    let mut out = PolyDensity::one(dim);
    for root in positive_roots.iter().filter(|r| !levi_subset.contains(r)) {
        root.check_dim(dim)?;
        out = out.mul(&PolyDensity::linear(root, Rat::zero()).pow(exponent));
    }
    Ok(out)
}
