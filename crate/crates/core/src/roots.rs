//! Root system data for the five catalog families, with construction-time
//! verification of the defining combinatorial identities.
//!
//! Coordinates follow the e-basis listings used throughout: the orthogonal
//! families on n coordinates, the special linear family on n ambient
//! coordinates (rank n-1), the symplectic family on n coordinates, and f4 on
//! 4 coordinates in the doubled convention where the short roots are
//! (+-e1 +-e2 +-e3 +-e4)/1 and +-2e_i and the long roots are +-2e_i +- 2e_j.

use crate::rat::{q, qq, Rat};
use crate::weight::Weight;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub ambient: usize,
    pub simple: Vec<Weight>,
    pub positive: Vec<Weight>,
    /// Compare weights modulo the all-ones vector (special linear family).
    pub mod_ones: bool,
}

/// Reflection of `w` in the hyperplane orthogonal to `alpha`.
pub fn reflect(w: &Weight, alpha: &Weight) -> Weight {
    let c = q(2) * w.dot(alpha) / alpha.norm_sq();
    w - &alpha.scaled(&c)
}

/// Weak dominance: pairs non-negatively with every listed positive root.
pub fn is_dominant(w: &Weight, positive: &[Weight]) -> bool {
    positive.iter().all(|a| !w.dot(a).is_negative())
}

/// Strict dominance; kept alongside the weak form so that verification
/// reports can flag weights where the two notions disagree.
pub fn is_strictly_dominant(w: &Weight, positive: &[Weight]) -> bool {
    positive.iter().all(|a| w.dot(a).is_positive())
}

impl RootSystemData {
    /// so(2n+1): simple roots e_i - e_{i+1} and e_n; positives e_i +- e_j, e_i.
    pub fn so_odd(n: usize) -> Self {
        assert!(n >= 2, "so(2n+1) catalog entries need n >= 2");
        let mut simple = Vec::new();
        for i in 1..n {
            simple.push(&Weight::e(i, n) - &Weight::e(i + 1, n));
        }
        simple.push(Weight::e(n, n));
        let mut positive = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                positive.push(&Weight::e(i, n) - &Weight::e(j, n));
                positive.push(&Weight::e(i, n) + &Weight::e(j, n));
            }
            positive.push(Weight::e(i, n));
        }
        Self::finish(n, simple, positive, false)
    }

    /// so(2n): simple roots e_i - e_{i+1} and e_{n-1} + e_n; positives e_i +- e_j.
    pub fn so_even(n: usize) -> Self {
        assert!(n >= 2, "so(2n) catalog entries need n >= 2");
        let mut simple = Vec::new();
        for i in 1..n {
            simple.push(&Weight::e(i, n) - &Weight::e(i + 1, n));
        }
        simple.push(&Weight::e(n - 1, n) + &Weight::e(n, n));
        let mut positive = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                positive.push(&Weight::e(i, n) - &Weight::e(j, n));
                positive.push(&Weight::e(i, n) + &Weight::e(j, n));
            }
        }
        Self::finish(n, simple, positive, false)
    }

    /// sl(n): simple roots e_i - e_{i+1}; positives e_i - e_j for i < j.
    pub fn sl(n: usize) -> Self {
        assert!(n >= 3, "sl(n) catalog entries need n >= 3");
        let mut simple = Vec::new();
        for i in 1..n {
            simple.push(&Weight::e(i, n) - &Weight::e(i + 1, n));
        }
        let mut positive = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                positive.push(&Weight::e(i, n) - &Weight::e(j, n));
            }
        }
        Self::finish(n, simple, positive, true)
    }

    /// sp(2n): simple roots e_i - e_{i+1} and 2e_n; positives e_i +- e_j, 2e_i.
    pub fn sp(n: usize) -> Self {
        assert!(n >= 3, "sp(2n) catalog entries need n >= 3");
        let mut simple = Vec::new();
        for i in 1..n {
            simple.push(&Weight::e(i, n) - &Weight::e(i + 1, n));
        }
        simple.push(Weight::e(n, n).scaled(&q(2)));
        let mut positive = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                positive.push(&Weight::e(i, n) - &Weight::e(j, n));
                positive.push(&Weight::e(i, n) + &Weight::e(j, n));
            }
            positive.push(Weight::e(i, n).scaled(&q(2)));
        }
        Self::finish(n, simple, positive, false)
    }

    /// f4 in doubled coordinates: simple roots e1-e2-e3-e4, 2e2-2e3, 2e3-2e4,
    /// 2e4; positives 2e_i +- 2e_j, 2e_i, and e1 +- e2 +- e3 +- e4.
    pub fn f4() -> Self {
        let e = |i: usize| Weight::e(i, 4);
        let simple = vec![
            &(&(&e(1) - &e(2)) - &e(3)) - &e(4),
            (&e(2) - &e(3)).scaled(&q(2)),
            (&e(3) - &e(4)).scaled(&q(2)),
            e(4).scaled(&q(2)),
        ];
        let mut positive = Vec::new();
        for i in 1..=4 {
            for j in (i + 1)..=4 {
                positive.push((&e(i) - &e(j)).scaled(&q(2)));
                positive.push((&e(i) + &e(j)).scaled(&q(2)));
            }
            positive.push(e(i).scaled(&q(2)));
        }
        for s2 in [1i64, -1] {
            for s3 in [1i64, -1] {
                for s4 in [1i64, -1] {
                    positive.push(Weight::from_ints(&[1, s2, s3, s4]));
                }
            }
        }
        Self::finish(4, simple, positive, false)
    }

    fn finish(ambient: usize, simple: Vec<Weight>, positive: Vec<Weight>, mod_ones: bool) -> Self {
        let rs = RootSystemData { ambient, simple, positive, mod_ones };
        rs.verify();
        rs
    }

    /// Construction-time checks: simple roots are positive and expand every
    /// positive root with non-negative integer coefficients; the pairing
    /// 2<b,a>/<a,a> is an integer on all root pairs; each simple reflection
    /// permutes the other positive roots; positives are closed under root
    /// addition; no root is repeated or zero.
    fn verify(&self) {
        let mut seen = std::collections::BTreeSet::new();
        for p in &self.positive {
            assert!(!p.is_zero(), "zero vector listed as a root");
            assert!(seen.insert(p.clone()), "duplicate root {}", p);
            assert!(seen.insert((-p).clone()), "root {} listed with both signs", p);
        }
        for s in &self.simple {
            assert!(self.positive.contains(s), "simple root {} not positive", s);
        }
        for p in &self.positive {
            let c = self.simple_root_coords(p);
            for x in &c {
                assert!(x.is_integer() && !x.is_negative(), "root {} is not a non-negative integer combination of simple roots", p);
            }
        }
        for a in &self.positive {
            for b in &self.positive {
                let pairing = q(2) * b.dot(a) / a.norm_sq();
                assert!(pairing.is_integer(), "non-integral Cartan pairing <{},{}>", b, a);
            }
        }
        for s in &self.simple {
            for p in &self.positive {
                if p == s {
                    continue;
                }
                let r = reflect(p, s);
                assert!(self.positive.contains(&r), "reflection of {} in {} leaves the positive system", p, s);
            }
        }
        for a in &self.positive {
            for b in &self.positive {
                let sum = a + b;
                if self.is_root(&sum) {
                    assert!(self.positive.contains(&sum), "sum of positives {} + {} is a non-positive root", a, b);
                }
            }
        }
    }

    /// Coordinates of `w` in the simple-root basis (solved via the Gram
    /// matrix; exact). For the special linear family the result is the
    /// expansion of the mod-ones representative.
    pub fn simple_root_coords(&self, w: &Weight) -> Vec<Rat> {
        let k = self.simple.len();
        let mut m = vec![vec![q(0); k + 1]; k];
        for (i, a) in self.simple.iter().enumerate() {
            for (j, b) in self.simple.iter().enumerate() {
                m[i][j] = a.dot(b);
            }
            m[i][k] = a.dot(w);
        }
        solve_dense(&mut m).expect("Gram matrix of simple roots is invertible")
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive.contains(w) || self.positive.contains(&(-w))
    }

    /// Half the sum of the positive roots.
    pub fn delta(&self) -> Weight {
        let mut d = Weight::zero(self.ambient);
        for p in &self.positive {
            d = &d + p;
        }
        d.scaled(&qq(1, 2))
    }

    pub fn canonical(&self, w: &Weight) -> Weight {
        if self.mod_ones {
            w.mod_ones_rep()
        } else {
            w.clone()
        }
    }

    /// The dominant chamber representative of the orbit of `w` under the
    /// reflection group, found by the descent walk along simple roots.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        let mut x = w.clone();
        let mut steps = 0usize;
        loop {
            let mut moved = false;
            for s in &self.simple {
                if x.dot(s).is_negative() {
                    x = reflect(&x, s);
                    moved = true;
                }
            }
            if !moved {
                return x;
            }
            steps += 1;
            assert!(steps < 1_000_000, "descent walk failed to terminate");
        }
    }

    /// Whether two weights lie in the same orbit of the full reflection
    /// group (comparison is modulo the all-ones vector where applicable).
    pub fn same_w_orbit(&self, a: &Weight, b: &Weight) -> bool {
        let (a, b) = (self.canonical(a), self.canonical(b));
        self.dominant_rep(&a) == self.dominant_rep(&b)
    }
}

/// Gaussian elimination on a dense augmented matrix (rows of length n+1);
/// returns the unique solution. Only used for small dense systems; the large
/// sparse systems go through the fraction-free routines in `linalg`.
pub(crate) fn solve_dense(m: &mut [Vec<Rat>]) -> Option<Vec<Rat>> {
    let rows = m.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = m[0].len() - 1;
    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][c].recip();
        for x in m[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r2 in 0..rows {
            if r2 != pivot_row && !m[r2][c].is_zero() {
                let f = m[r2][c].clone();
                for c2 in 0..=cols {
                    let sub = &m[pivot_row][c2] * &f;
                    m[r2][c2] = &m[r2][c2] - &sub;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![q(0); cols];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = m[r][cols].clone();
    }
    Some(sol)
}
