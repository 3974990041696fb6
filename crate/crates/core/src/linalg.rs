//! Exact linear algebra over the rationals: dense reduced echelon for
//! kernel bases, solving, and span comparisons, plus a sparse
//! fraction-free elimination over the integers for rank-only queries on
//! larger cochain blocks.

use crate::rat::{q, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type QMat = Vec<Vec<Rat>>;

/// Reduce in place to reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut QMat) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        m[i][j] = &m[i][j] - &(&f * &m[r][j]);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank_dense(mut m: QMat) -> usize {
    rref(&mut m).len()
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column.
pub fn kernel_basis(m: &QMat, cols: usize) -> Vec<Vec<Rat>> {
    if m.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut v = vec![q(0); cols];
                v[i] = q(1);
                v
            })
            .collect();
    }
    assert_eq!(m[0].len(), cols);
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![q(0); cols];
        v[free] = q(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of M x = rhs, or None if inconsistent.
pub fn solve(m: &QMat, rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.len();
    assert_eq!(rows, rhs.len());
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = m[0].len();
    let mut aug: QMat =
        m.iter().zip(rhs).map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![q(0); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn span_dim(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank_dense(vectors.to_vec())
}

/// Whether v lies in the span of the rows.
pub fn in_span(vectors: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    let d = span_dim(vectors);
    let mut aug = vectors.to_vec();
    aug.push(v.to_vec());
    span_dim(&aug) == d
}

pub fn spans_equal(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    let da = span_dim(a);
    let db = span_dim(b);
    if da != db {
        return false;
    }
    let mut joint = a.to_vec();
    joint.extend(b.iter().cloned());
    span_dim(&joint) == da
}

pub fn mat_id(n: usize) -> QMat {
    (0..n)
        .map(|i| {
            let mut row = vec![q(0); n];
            row[i] = q(1);
            row
        })
        .collect()
}

pub fn mat_mul(a: &QMat, b: &QMat) -> QMat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![q(0); cols]; rows];
    for (i, ar) in a.iter().enumerate() {
        assert_eq!(ar.len(), inner);
        for (t, f) in ar.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (j, bv) in b[t].iter().enumerate() {
                if !bv.is_zero() {
                    out[i][j] = &out[i][j] + &(f * bv);
                }
            }
        }
    }
    out
}

/// Exact inverse of a square matrix, or None when singular.
pub fn inverse(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut aug: QMat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Sparse integer matrix for rank-only elimination. Rows are sorted
/// (column, value) lists; rational input rows are cleared of denominators,
/// which changes neither rank nor kernel.
pub struct SparseMat {
    pub cols: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMat {
    pub fn new(cols: usize) -> Self {
        SparseMat { cols, rows: Vec::new() }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_rat_row(&mut self, entries: &[(usize, Rat)]) {
        let mut lcm = BigInt::one();
        for (_, v) in entries {
            if !v.is_zero() {
                lcm = lcm.lcm(v.denom());
            }
        }
        let mut row: Vec<(usize, BigInt)> = entries
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| {
                assert!(*c < self.cols);
                (*c, v.numer() * (&lcm / v.denom()))
            })
            .collect();
        row.sort_by_key(|e| e.0);
        row.dedup_by(|a, b| {
            if a.0 == b.0 {
                b.1 += std::mem::take(&mut a.1);
                true
            } else {
                false
            }
        });
        row.retain(|e| !e.1.is_zero());
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Fraction-free one-step elimination: each update divides by the
    /// previous pivot, which is exact (the entries stay bordered minors),
    /// so all arithmetic is over the integers. Pivot rows are chosen
    /// shortest-first to limit fill.
    pub fn rank(mut self) -> usize {
        let mut prev = BigInt::one();
        let mut rank = 0;
        while !self.rows.is_empty() {
            let pi = (0..self.rows.len()).min_by_key(|&i| self.rows[i].len()).unwrap();
            let pivot_row = self.rows.swap_remove(pi);
            let (pc, pv) = {
                let best =
                    pivot_row.iter().min_by_key(|(_, v)| v.magnitude().clone()).unwrap();
                (best.0, best.1.clone())
            };
            rank += 1;
            let mut next_rows = Vec::with_capacity(self.rows.len());
            for row in self.rows.drain(..) {
                let coeff = row.iter().find(|(c, _)| *c == pc).map(|(_, v)| v.clone());
                let new_row: Vec<(usize, BigInt)> = match coeff {
                    None => row
                        .into_iter()
                        .map(|(c, v)| {
                            let scaled = &v * &pv;
                            debug_assert!((&scaled % &prev).is_zero());
                            (c, scaled / &prev)
                        })
                        .collect(),
                    Some(f) => {
                        let mut out = Vec::with_capacity(row.len() + pivot_row.len());
                        let mut a = row.iter().peekable();
                        let mut b = pivot_row.iter().peekable();
                        loop {
                            match (a.peek(), b.peek()) {
                                (None, None) => break,
                                (Some((ca, va)), None) => {
                                    out.push((*ca, va * &pv));
                                    a.next();
                                }
                                (None, Some((cb, vb))) => {
                                    out.push((*cb, -(vb * &f)));
                                    b.next();
                                }
                                (Some((ca, va)), Some((cb, vb))) => {
                                    if ca < cb {
                                        out.push((*ca, va * &pv));
                                        a.next();
                                    } else if cb < ca {
                                        out.push((*cb, -(vb * &f)));
                                        b.next();
                                    } else {
                                        out.push((*ca, va * &pv - vb * &f));
                                        a.next();
                                        b.next();
                                    }
                                }
                            }
                        }
                        out.into_iter()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(c, v)| {
                                debug_assert!((&v % &prev).is_zero());
                                (c, v / &prev)
                            })
                            .collect()
                    }
                };
                if !new_row.is_empty() {
                    next_rows.push(new_row);
                }
            }
            self.rows = next_rows;
            prev = pv;
        }
        rank
    }
}
