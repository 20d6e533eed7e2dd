//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::rat::{QVec, Rat};

/// Reduced row echelon form of `rows` (each of length `cols`) and its pivot columns.
pub fn rref(rows: &[QVec], cols: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).take(cols) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m.into_iter().map(QVec::new).collect(), pivots)
}

pub fn rank(rows: &[QVec], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Basis of the right null space `{x : row . x = 0 for every row}`.
pub fn nullspace(rows: &[QVec], cols: usize) -> Vec<QVec> {
    let (r, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = QVec::zeros(cols);
            x[f] = Rat::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// A solution of `rows * x = b`, or `None` if there is none.
pub fn solve(rows: &[QVec], cols: usize, b: &QVec) -> Option<QVec> {
    let aug: Vec<QVec> = rows
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut c = r.coords().to_vec();
            c.push(bi.clone());
            QVec::new(c)
        })
        .collect();
    let (r, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = QVec::zeros(cols);
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Canonical basis of `span(vectors)`: the nonzero rows of the RREF, made primitive.
pub fn span_basis(vectors: &[QVec], cols: usize) -> Vec<QVec> {
    rref(vectors, cols)
        .0
        .into_iter()
        .map(|r| r.primitive().expect("rref rows are nonzero"))
        .collect()
}

/// Orthogonal projection of `v` onto the orthogonal complement of `span(basis)`.
pub fn project_out(v: &QVec, basis: &[QVec]) -> QVec {
    if basis.is_empty() {
        return v.clone();
    }
    let ortho = gram_schmidt(basis);
    let mut out = v.clone();
    for u in &ortho {
        let c = out.dot(u) / u.dot(u);
        out = out.add_scaled(&-c, u);
    }
    out
}

/// Pairwise orthogonal basis of `span(vectors)` (not normalized).
pub fn gram_schmidt(vectors: &[QVec]) -> Vec<QVec> {
    let mut ortho: Vec<QVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for u in &ortho {
            let c = w.dot(u) / u.dot(u);
            w = w.add_scaled(&-c, u);
        }
        if !w.is_zero() {
            ortho.push(w);
        }
    }
    ortho
}

/// Affine dimension of a point set; `-1` for the empty set.
pub fn affine_dim(points: &[QVec]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<QVec> = points[1..].iter().map(|p| p - first).collect();
    rank(&diffs, first.dim()) as isize
}

/// Determinant of a square matrix given by rows.
pub fn det(rows: &[QVec]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &piv;
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &f * p;
                }
            }
        }
    }
    d
}
