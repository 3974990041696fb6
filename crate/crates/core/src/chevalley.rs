//! Integral structure constants for each catalog algebra, built from
//! extraspecial pairs. The bracket table carries the whole algebra:
//! coroots for opposite root pairs, Cartan eigenvalues, and signed chain
//! constants for root sums. Construction runs an exhaustive Jacobi check,
//! so any bookkeeping error in the derivation rules is fatal here rather
//! than a silent corruption downstream.

use crate::catalog::{AlgebraId, RankOneDatum};
use crate::rat::{expect_int, q, Rat};
use crate::roots::{solve_dense, RootSystemData};
use crate::weight::Weight;
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

pub type Sparse = Vec<(usize, Rat)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisElement {
    /// Coroot of the i-th simple root.
    Cartan(usize),
    Root(Weight),
}

pub struct ChevalleyAlgebra {
    pub id: AlgebraId,
    pub datum: RankOneDatum,
    /// Number of simple roots (= Cartan dimension).
    pub rank: usize,
    pub dim: usize,
    pub basis: Vec<BasisElement>,
    root_index: BTreeMap<Weight, usize>,
    table: Vec<Vec<Sparse>>,
}

fn heights(rs: &RootSystemData) -> BTreeMap<Weight, i64> {
    let mut out = BTreeMap::new();
    for p in &rs.positive {
        let coords = rs.simple_root_coords(p);
        let mut h = 0i64;
        for c in &coords {
            h += i64::try_from(&expect_int(c)).unwrap();
        }
        out.insert(p.clone(), h);
    }
    out
}

/// Longest initial chain: max k >= 0 with beta - k*alpha a root.
fn chain_down(beta: &Weight, alpha: &Weight, rs: &RootSystemData) -> i64 {
    let mut k = 0;
    let mut w = beta - alpha;
    while rs.is_root(&w) {
        k += 1;
        w = &w - alpha;
    }
    k
}

/// Signed structure constant n(x, y) for roots with x + y a root, reduced
/// to the positive-pair table via antisymmetry, negation, and the
/// three-term rotation identity.
fn n_signed(
    x: &Weight,
    y: &Weight,
    order: &BTreeMap<Weight, usize>,
    npos: &BTreeMap<(usize, usize), Rat>,
) -> Rat {
    let s = x + y;
    match (order.get(x), order.get(y)) {
        (Some(&i), Some(&j)) => {
            if i < j {
                npos[&(i, j)].clone()
            } else {
                -npos[&(j, i)].clone()
            }
        }
        (None, None) => -n_signed(&-x, &-y, order, npos),
        (Some(_), None) => {
            if order.contains_key(&s) {
                -(s.norm_sq() / x.norm_sq()) * n_signed(&-y, &s, order, npos)
            } else {
                -(s.norm_sq() / y.norm_sq()) * n_signed(x, &-&s, order, npos)
            }
        }
        (None, Some(_)) => -n_signed(y, x, order, npos),
    }
}

fn bracket_in_table(table: &[Vec<Sparse>], a: &Sparse, b: &Sparse) -> Sparse {
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (i, ca) in a {
        for (j, cb) in b {
            for (k, v) in &table[*i][*j] {
                let e = acc.entry(*k).or_insert_with(|| q(0));
                *e = &*e + &(&(ca * cb) * v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl ChevalleyAlgebra {
    pub fn new(id: AlgebraId) -> Result<Self> {
        let datum = RankOneDatum::new(id)?;
        let rs = &datum.roots;
        let hts = heights(rs);
        let mut pos_sorted = rs.positive.clone();
        pos_sorted.sort_by_key(|r| (hts[r], r.clone()));
        let n_pos = pos_sorted.len();
        let order: BTreeMap<Weight, usize> =
            pos_sorted.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

        // Positive-pair constants, by ascending height of the sum. The
        // extraspecial pair (minimal first component) anchors each sum at
        // chain length + 1; every other decomposition follows from the
        // four-root Jacobi identity through the anchor.
        let mut npos: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for gamma in &pos_sorted {
            if hts[gamma] < 2 {
                continue;
            }
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (ia, alpha) in pos_sorted.iter().enumerate() {
                let beta = gamma - alpha;
                if let Some(&ib) = order.get(&beta) {
                    if ia < ib {
                        pairs.push((ia, ib));
                    }
                }
            }
            pairs.sort();
            let (ia1, ib1) = pairs[0];
            let (a1, b1) = (pos_sorted[ia1].clone(), pos_sorted[ib1].clone());
            let anchor = q(chain_down(&b1, &a1, rs) + 1);
            npos.insert((ia1, ib1), anchor.clone());
            for &(ia, ib) in &pairs[1..] {
                let al = &pos_sorted[ia];
                let be = &pos_sorted[ib];
                let mut t = q(0);
                let d1 = &a1 - al;
                if rs.is_root(&d1) {
                    t = t + n_signed(&-al, &a1, &order, &npos)
                        * n_signed(&d1, &b1, &order, &npos);
                }
                let d3 = &b1 - al;
                if rs.is_root(&d3) {
                    t = t + n_signed(&b1, &-al, &order, &npos)
                        * n_signed(&d3, &a1, &order, &npos);
                }
                let val = gamma.norm_sq() / be.norm_sq() * t / anchor.clone();
                npos.insert((ia, ib), val);
            }
        }

        let rank = rs.simple.len();
        let dim = rank + 2 * n_pos;
        let mut basis: Vec<BasisElement> = (0..rank).map(BasisElement::Cartan).collect();
        basis.extend(pos_sorted.iter().map(|w| BasisElement::Root(w.clone())));
        basis.extend(pos_sorted.iter().map(|w| BasisElement::Root(-w)));
        let mut root_index = BTreeMap::new();
        for (i, w) in pos_sorted.iter().enumerate() {
            root_index.insert(w.clone(), rank + i);
            root_index.insert(-w, rank + n_pos + i);
        }

        // Integer coordinates of the coroot of any root in the simple
        // coroot basis.
        let coroot = |alpha: &Weight| -> Sparse {
            let m = rs.simple_root_coords(alpha);
            let mut out = Vec::new();
            for (i, mi) in m.iter().enumerate() {
                let c = mi * &(rs.simple[i].norm_sq() / alpha.norm_sq());
                assert!(c.is_integer(), "coroot coordinate is not an integer");
                if !c.is_zero() {
                    out.push((i, c));
                }
            }
            out
        };
        let pairing = |alpha: &Weight, i: usize| -> Rat {
            let c = q(2) * alpha.dot(&rs.simple[i]) / rs.simple[i].norm_sq();
            assert!(c.is_integer(), "Cartan eigenvalue is not an integer");
            c
        };

        let mut table: Vec<Vec<Sparse>> = vec![vec![Vec::new(); dim]; dim];
        let root_of = |i: usize, basis: &[BasisElement]| -> Option<Weight> {
            match &basis[i] {
                BasisElement::Cartan(_) => None,
                BasisElement::Root(w) => Some(w.clone()),
            }
        };
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                let entry: Sparse = match (root_of(i, &basis), root_of(j, &basis)) {
                    (None, None) => Vec::new(),
                    (None, Some(b)) => {
                        let BasisElement::Cartan(ci) = basis[i] else { unreachable!() };
                        let c = pairing(&b, ci);
                        if c.is_zero() { Vec::new() } else { vec![(j, c)] }
                    }
                    (Some(a), None) => {
                        let BasisElement::Cartan(cj) = basis[j] else { unreachable!() };
                        let c = -pairing(&a, cj);
                        if c.is_zero() { Vec::new() } else { vec![(i, c)] }
                    }
                    (Some(a), Some(b)) => {
                        let s = &a + &b;
                        if s.is_zero() {
                            if order.contains_key(&a) {
                                coroot(&a)
                            } else {
                                coroot(&b).into_iter().map(|(k, v)| (k, -v)).collect()
                            }
                        } else if rs.is_root(&s) {
                            let c = n_signed(&a, &b, &order, &npos);
                            assert!(c.is_integer(), "structure constant is not an integer");
                            assert!(!c.is_zero(), "structure constant vanished on a root sum");
                            vec![(root_index[&s], c)]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[i][j] = entry;
            }
        }

        let alg = ChevalleyAlgebra { id, datum, rank, dim, basis, root_index, table };
        alg.check()?;
        Ok(alg)
    }

    fn check(&self) -> Result<()> {
        let rs = &self.datum.roots;
        // Antisymmetry at the table level.
        for i in 0..self.dim {
            assert!(self.table[i][i].is_empty());
            for j in 0..self.dim {
                let mut neg: Sparse =
                    self.table[j][i].iter().map(|(k, v)| (*k, -v.clone())).collect();
                neg.retain(|(_, v)| !v.is_zero());
                assert_eq!(self.table[i][j], neg, "antisymmetry failed at ({}, {})", i, j);
            }
        }
        // Chain-length magnitudes for every root pair with a root sum.
        for i in 0..self.dim {
            let Some(a) = self.root_of(i) else { continue };
            for j in 0..self.dim {
                let Some(b) = self.root_of(j) else { continue };
                let s = &a + &b;
                if !rs.is_root(&s) {
                    continue;
                }
                let c = &self.table[i][j][0].1;
                let p = chain_down(&b, &a, rs);
                if c.abs() != q(p + 1) {
                    return Err(Error::Verification(format!(
                        "{}: |n({}, {})| = {} but the chain gives {}",
                        self.id,
                        a,
                        b,
                        c,
                        p + 1
                    )));
                }
            }
        }
        // Exhaustive Jacobi.
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.table[i][j].clone();
                for k in (j + 1)..self.dim {
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    let add = |ab: &Sparse, c: usize, acc: &mut BTreeMap<usize, Rat>| {
                        for (m, v) in ab {
                            for (t, w) in &self.table[*m][c] {
                                let e = acc.entry(*t).or_insert_with(|| q(0));
                                *e = &*e + &(v * w);
                            }
                        }
                    };
                    add(&bij, k, &mut acc);
                    add(&self.table[j][k], i, &mut acc);
                    add(&self.table[k][i], j, &mut acc);
                    if acc.values().any(|v| !v.is_zero()) {
                        return Err(Error::Verification(format!(
                            "{}: Jacobi failed at basis triple ({}, {}, {})",
                            self.id, i, j, k
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn root_of(&self, i: usize) -> Option<Weight> {
        match &self.basis[i] {
            BasisElement::Cartan(_) => None,
            BasisElement::Root(w) => Some(w.clone()),
        }
    }

    pub fn index_of_root(&self, w: &Weight) -> Option<usize> {
        self.root_index.get(w).copied()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    pub fn bracket_sparse(&self, a: &Sparse, b: &Sparse) -> Sparse {
        bracket_in_table(&self.table, a, b)
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let a: Sparse =
            x.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        let b: Sparse =
            y.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        let mut out = vec![q(0); self.dim];
        for (k, v) in self.bracket_sparse(&a, &b) {
            out[k] = v;
        }
        out
    }

    /// The a-grade of a basis element: 0 on the Cartan, the root grade on
    /// root vectors (negative on negative roots).
    pub fn grade_of_basis(&self, i: usize) -> i64 {
        match &self.basis[i] {
            BasisElement::Cartan(_) => 0,
            BasisElement::Root(w) => self.datum.grade_of(w),
        }
    }

    /// The Cartan weight of a basis element (zero on the Cartan itself).
    pub fn weight_of_basis(&self, i: usize) -> Weight {
        match &self.basis[i] {
            BasisElement::Cartan(_) => Weight::zero(self.datum.roots.ambient),
            BasisElement::Root(w) => w.clone(),
        }
    }

    pub fn indices_where(&self, pred: impl Fn(i64) -> bool) -> Vec<usize> {
        (0..self.dim).filter(|&i| pred(self.grade_of_basis(i))).collect()
    }

    pub fn indices_n(&self) -> Vec<usize> {
        self.indices_where(|g| g > 0)
    }

    pub fn indices_n_minus(&self) -> Vec<usize> {
        self.indices_where(|g| g < 0)
    }

    pub fn indices_p(&self) -> Vec<usize> {
        self.indices_where(|g| g >= 0)
    }

    pub fn indices_g0(&self) -> Vec<usize> {
        self.indices_where(|g| g == 0)
    }

    /// The Cartan element acting on each root vector by its grade.
    pub fn grading_element(&self) -> Vec<Rat> {
        let rs = &self.datum.roots;
        let mut m = vec![vec![q(0); self.rank + 1]; self.rank];
        for (j, aj) in rs.simple.iter().enumerate() {
            for i in 0..self.rank {
                m[j][i] = q(2) * aj.dot(&rs.simple[i]) / rs.simple[i].norm_sq();
            }
            m[j][self.rank] = q(self.datum.grade_of(aj));
        }
        let t = solve_dense(&mut m).expect("grading element system is solvable");
        let mut e = vec![q(0); self.dim];
        e[..self.rank].clone_from_slice(&t);
        for i in 0..self.dim {
            if let Some(w) = self.root_of(i) {
                let ad = self.bracket_sparse(
                    &e.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect(),
                    &vec![(i, q(1))],
                );
                let g = self.datum.grade_of(&w);
                let want: Sparse = if g == 0 { Vec::new() } else { vec![(i, q(g))] };
                assert_eq!(ad, want);
            }
        }
        e
    }

    /// Matrix of ad(x) on the full algebra, columns indexed by basis.
    pub fn ad_matrix(&self, x: &[Rat]) -> Vec<Vec<Rat>> {
        let a: Sparse =
            x.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        let mut m = vec![vec![q(0); self.dim]; self.dim];
        for j in 0..self.dim {
            for (k, v) in self.bracket_sparse(&a, &vec![(j, q(1))]) {
                m[k][j] = v;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(AlgebraId::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn constructs_with_full_checks_across_the_catalog() {
        for s in ["so:4", "so:5", "so:6", "so:7", "so:8", "sl:3", "sl:4", "sl:5", "sl:6", "sp:6",
            "sp:8", "sp:10", "f4"]
        {
            let a = alg(s);
            assert_eq!(a.dim, a.datum.dim_g());
        }
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(alg("so:7").dim, 21);
        assert_eq!(alg("sl:4").dim, 15);
        assert_eq!(alg("sp:6").dim, 21);
        assert_eq!(alg("sp:10").dim, 55);
        assert_eq!(alg("f4").dim, 52);
    }

    #[test]
    fn chain_magnitudes_spot_checks() {
        let a = alg("sl:3");
        let i = a.index_of_root(&Weight::from_ints(&[1, -1, 0])).unwrap();
        let j = a.index_of_root(&Weight::from_ints(&[0, 1, -1])).unwrap();
        let br = a.bracket_basis(i, j);
        assert_eq!(br.len(), 1);
        assert_eq!(br[0].1.abs(), q(1));

        let sp = alg("sp:6");
        let i = sp.index_of_root(&Weight::from_ints(&[1, -1, 0])).unwrap();
        let j = sp.index_of_root(&Weight::from_ints(&[1, 1, 0])).unwrap();
        assert_eq!(sp.bracket_basis(i, j)[0].1.abs(), q(2));

        let so = alg("so:5");
        let i = so.index_of_root(&Weight::from_ints(&[0, 1])).unwrap();
        let j = so.index_of_root(&Weight::from_ints(&[1, 0])).unwrap();
        assert_eq!(so.bracket_basis(i, j)[0].1.abs(), q(2));

        let f = alg("f4");
        let i = f.index_of_root(&Weight::from_ints(&[1, -1, -1, -1])).unwrap();
        let j = f.index_of_root(&Weight::from_ints(&[1, 1, 1, -1])).unwrap();
        assert_eq!(f.bracket_basis(i, j)[0].1.abs(), q(2));
    }

    #[test]
    fn opposite_root_brackets_give_integral_coroots() {
        let a = alg("so:5");
        let e1 = Weight::from_ints(&[1, 0]);
        let i = a.index_of_root(&e1).unwrap();
        let j = a.index_of_root(&-&e1).unwrap();
        let h = a.bracket_basis(i, j);
        // e1 = (e1 - e2) + e2 with squares 2 and 1 over |e1|^2 = 1.
        let mut coeffs: Vec<(usize, Rat)> = h.clone();
        coeffs.sort_by_key(|e| e.0);
        let mut expected = vec![(0usize, q(0)), (1usize, q(0))];
        for (k, s) in a.datum.roots.simple.iter().enumerate() {
            let m = a.datum.roots.simple_root_coords(&e1)[k].clone();
            expected[k].1 = m * s.norm_sq();
        }
        let expected: Sparse = expected.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn grading_element_acts_by_grades() {
        for s in ["so:6", "sl:4", "sp:6", "f4"] {
            let a = alg(s);
            let e = a.grading_element();
            let m = a.ad_matrix(&e);
            for i in 0..a.dim {
                for k in 0..a.dim {
                    let want = if i == k { q(a.grade_of_basis(i)) } else { q(0) };
                    assert_eq!(m[k][i], want);
                }
            }
        }
    }

    #[test]
    fn graded_pieces_bracket_into_the_sum() {
        let a = alg("sp:6");
        for i in 0..a.dim {
            for j in 0..a.dim {
                let gi = a.grade_of_basis(i);
                let gj = a.grade_of_basis(j);
                for (k, _) in a.bracket_basis(i, j) {
                    assert_eq!(a.grade_of_basis(*k), gi + gj);
                }
            }
        }
    }

    #[test]
    fn nilradical_slice_sizes() {
        let a = alg("f4");
        assert_eq!(a.indices_n().len(), 15);
        assert_eq!(a.indices_n_minus().len(), 15);
        assert_eq!(a.indices_g0().len(), 22);
        assert_eq!(a.indices_p().len(), 22 + 15);
    }
}
