//! Breadth-first enumeration of the finite reflection group generated by the
//! simple reflections, with reduced words and exact matrices.

use crate::rat::{q, Rat};
use crate::roots::{reflect, RootSystemData};
use crate::weight::Weight;
use num_traits::Zero;
use std::collections::BTreeMap;

pub type Matrix = Vec<Vec<Rat>>;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Reduced word in simple-reflection indices (0-based into `simple`).
    pub word: Vec<usize>,
    /// Ambient matrix; `apply` computes matrix * column vector.
    pub matrix: Matrix,
    pub length: usize,
}

impl WeylElement {
    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.matrix.len();
        assert_eq!(w.dim(), n);
        let mut out = vec![q(0); n];
        for (i, row) in self.matrix.iter().enumerate() {
            let mut acc = q(0);
            for (j, m) in row.iter().enumerate() {
                if !m.is_zero() {
                    acc += m * &w.0[j];
                }
            }
            out[i] = acc;
        }
        Weight(out)
    }
}

fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

/// Matrix of the reflection in `alpha` (columns are the images of e_j).
pub fn reflection_matrix(alpha: &Weight, ambient: usize) -> Matrix {
    let mut m = vec![vec![q(0); ambient]; ambient];
    for j in 0..ambient {
        let img = reflect(&Weight::e(j + 1, ambient), alpha);
        for i in 0..ambient {
            m[i][j] = img.0[i].clone();
        }
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![q(0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    let add = &a[i][k] * &b[k][j];
                    out[i][j] = &out[i][j] + &add;
                }
            }
        }
    }
    out
}

/// Number of positive roots sent negative.
pub fn inversion_count(w: &WeylElement, rs: &RootSystemData) -> usize {
    rs.positive
        .iter()
        .filter(|p| {
            let img = w.apply(p);
            rs.positive.contains(&(-&img))
        })
        .count()
}

/// Enumerate the whole group by breadth-first search over right
/// multiplication by simple reflections. The discovery depth is the reduced
/// length; construction asserts it equals the inversion count for every
/// element. Output order: by length, then by first-discovered word, which is
/// deterministic.
pub fn weyl_group(rs: &RootSystemData) -> Vec<WeylElement> {
    let n = rs.ambient;
    let gens: Vec<Matrix> = rs.simple.iter().map(|s| reflection_matrix(s, n)).collect();
    let mut seen: BTreeMap<Matrix, usize> = BTreeMap::new();
    let mut out = vec![WeylElement { word: Vec::new(), matrix: identity_matrix(n), length: 0 }];
    seen.insert(out[0].matrix.clone(), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let (word, matrix) = (out[idx].word.clone(), out[idx].matrix.clone());
            for (g, gm) in gens.iter().enumerate() {
                let m = mat_mul(&matrix, gm);
                if seen.contains_key(&m) {
                    continue;
                }
                let mut w = word.clone();
                w.push(g);
                let len = w.len();
                seen.insert(m.clone(), out.len());
                next.push(out.len());
                out.push(WeylElement { word: w, matrix: m, length: len });
            }
        }
        frontier = next;
    }
    for w in &out {
        assert_eq!(
            inversion_count(w, rs),
            w.length,
            "reduced length disagrees with inversion count for word {:?}",
            w.word
        );
    }
    out
}

/// Order of the subgroup generated by the reflections in the given roots
/// (used for the Levi factor; the roots need not be simple).
pub fn reflection_subgroup_order(roots: &[Weight], ambient: usize) -> usize {
    if roots.is_empty() {
        return 1;
    }
    let gens: Vec<Matrix> = roots.iter().map(|a| reflection_matrix(a, ambient)).collect();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(identity_matrix(ambient));
    let mut frontier: Vec<Matrix> = vec![identity_matrix(ambient)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                let p = mat_mul(m, g);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    seen.len()
}
