//! Exact rational scalars, vectors and matrices.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Nothing in this crate touches floating point.

use std::fmt;
use std::ops::{Add, Deref, Index, IndexMut, Neg, Sub};
use std::slice::SliceIndex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// `n/d` as a `Rat`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign, decimal digits only).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Canonical `"p/q"` form, or `"p"` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Rational vector of fixed dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVec(Vec<Rat>);

impl QVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        QVec(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        QVec(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVec(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &QVec) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Rat) -> QVec {
        QVec(self.0.iter().map(|c| c * s).collect())
    }

    /// `self + s * other`
    pub fn add_scaled(&self, s: &Rat, other: &QVec) -> QVec {
        QVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + s * b)
                .collect(),
        )
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimMismatch {
                expected,
                found: self.dim(),
            })
        }
    }

    /// The integer vector with coprime entries positively proportional to `self`.
    pub fn primitive(&self) -> Result<QVec> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Ok(QVec(
            ints.into_iter()
                .map(|c| Rat::from_integer(c / &g))
                .collect(),
        ))
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

/// Unique positive integer multiple with coprime entries; see [`QVec::primitive`].
pub fn primitive_vector(v: &QVec) -> Result<QVec> {
    v.primitive()
}

impl Deref for QVec {
    type Target = [Rat];
    fn deref(&self) -> &[Rat] {
        &self.0
    }
}

impl<I: SliceIndex<[Rat]>> Index<I> for QVec {
    type Output = I::Output;
    fn index(&self, i: I) -> &I::Output {
        &self.0[i]
    }
}

impl<I: SliceIndex<[Rat]>> IndexMut<I> for QVec {
    fn index_mut(&mut self, i: I) -> &mut I::Output {
        &mut self.0[i]
    }
}

impl From<Vec<Rat>> for QVec {
    fn from(v: Vec<Rat>) -> Self {
        QVec(v)
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense rational matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: Vec<QVec>,
    cols: usize,
}

impl QMat {
    pub fn from_rows(rows: Vec<QVec>, cols: usize) -> Result<Self> {
        for r in &rows {
            r.check_dim(cols)?;
        }
        Ok(QMat { rows, cols })
    }

    pub fn identity(n: usize) -> Self {
        QMat {
            rows: (0..n).map(|i| QVec::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn mul_vec(&self, v: &QVec) -> QVec {
        QVec(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn rank(&self) -> usize {
        super::linalg::rank(&self.rows, self.cols)
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<QVec> {
        super::linalg::nullspace(&self.rows, self.cols)
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &QVec) -> Option<QVec> {
        super::linalg::solve(&self.rows, self.cols, b)
    }
}
