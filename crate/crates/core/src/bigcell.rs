//! The polynomial realization of each algebra as vector fields on its
//! opposite nilradical: the chart derivative gives, for X in g and a
//! symbolic point Y, the field Z(Y) = u(Y) + [Y, u(Y)]/2 with
//! u = pr(exp(-ad Y) X), where pr projects onto the negative grades.
//! Correctness rests on the homomorphism certificate, checked for every
//! basis pair at construction.

use crate::chevalley::{ChevalleyAlgebra, Sparse};
use crate::linalg::{self, QMat};
use crate::poly::{field_bracket, monomials_of_degree, Mono, PolyMap};
use crate::rat::{q, qq, Rat};
use crate::weight::Weight;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

pub struct BigCell {
    pub alg: ChevalleyAlgebra,
    /// Basis indices of the negative-grade part, grade -1 block first.
    pub nm_idx: Vec<usize>,
    pub var_grades: Vec<i64>,
    /// One field per algebra basis element, same indexing as the algebra.
    pub lambda: Vec<PolyMap>,
    pub lambda_e: PolyMap,
}

fn bracket_y(alg: &ChevalleyAlgebra, nm_idx: &[usize], t: &PolyMap) -> PolyMap {
    let d = nm_idx.len();
    let mut out = PolyMap::zero(d, alg.dim);
    for (m, v) in &t.terms {
        let sv: Sparse =
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        for (j, &bj) in nm_idx.iter().enumerate() {
            let br = alg.bracket_sparse(&vec![(bj, q(1))], &sv);
            if br.is_empty() {
                continue;
            }
            let mut mono = m.clone();
            mono[j] += 1;
            let mut coeff = vec![q(0); alg.dim];
            for (k, c) in br {
                coeff[k] = c;
            }
            out.add_term(mono, coeff);
        }
    }
    out
}

fn project_nm(nm_idx: &[usize], t: &PolyMap) -> PolyMap {
    let mut out = PolyMap::zero(nm_idx.len(), nm_idx.len());
    for (m, v) in &t.terms {
        let coeff: Vec<Rat> = nm_idx.iter().map(|&i| v[i].clone()).collect();
        if coeff.iter().any(|c| !c.is_zero()) {
            out.add_term(m.clone(), coeff);
        }
    }
    out
}

fn lift_nm(gdim: usize, nm_idx: &[usize], t: &PolyMap) -> PolyMap {
    let mut out = PolyMap::zero(nm_idx.len(), gdim);
    for (m, v) in &t.terms {
        let mut coeff = vec![q(0); gdim];
        for (j, &i) in nm_idx.iter().enumerate() {
            coeff[i] = v[j].clone();
        }
        out.add_term(m.clone(), coeff);
    }
    out
}

fn embed_basis(alg: &ChevalleyAlgebra, nm_idx: &[usize], gi: usize) -> PolyMap {
    let d = nm_idx.len();
    let mut x = vec![q(0); alg.dim];
    x[gi] = q(1);
    let mut total = PolyMap::zero(d, alg.dim);
    let mut term = PolyMap::zero(d, alg.dim);
    term.add_term(vec![0; d], x);
    let mut k: i64 = 0;
    while !term.is_zero() {
        total = total.add(&term);
        k += 1;
        assert!(k <= 8, "nilpotent exponential series failed to terminate");
        term = bracket_y(alg, nm_idx, &term).scale(&qq(-1, k));
    }
    let u = project_nm(nm_idx, &total);
    let correction = project_nm(nm_idx, &bracket_y(alg, nm_idx, &lift_nm(alg.dim, nm_idx, &u)));
    u.add(&correction.scale(&qq(1, 2)))
}

/// Flatten a field into ((monomial, output index) -> coefficient) pairs.
fn flatten(f: &PolyMap) -> Vec<((Mono, usize), Rat)> {
    let mut out = Vec::new();
    for (m, v) in &f.terms {
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.push(((m.clone(), i), c.clone()));
            }
        }
    }
    out
}

impl BigCell {
    pub fn new(alg: ChevalleyAlgebra) -> Result<Self> {
        let mut nm_idx = alg.indices_where(|g| g == -1);
        nm_idx.extend(alg.indices_where(|g| g == -2));
        let var_grades: Vec<i64> = nm_idx.iter().map(|&i| alg.grade_of_basis(i)).collect();
        let mem_cap_bytes = f4_memory_cap_bytes(&alg);
        let mut est_bytes = 0usize;
        let mut lambda = Vec::with_capacity(alg.dim);
        for gi in 0..alg.dim {
            let f = embed_basis(&alg, &nm_idx, gi);
            est_bytes += f.terms.len() * (f.dim_out * 48 + 64);
            if let Some(cap) = mem_cap_bytes {
                if est_bytes > cap {
                    return Err(Error::Verification(format!(
                        "field table estimate exceeded the memory budget ({} MB); raise RANKONE_F4_LAMBDA_MEM_MB",
                        cap / (1 << 20)
                    )));
                }
            }
            lambda.push(f);
        }
        let e = alg.grading_element();
        let lambda_e = {
            let mut f = PolyMap::zero(nm_idx.len(), nm_idx.len());
            for (i, c) in e.iter().enumerate() {
                if !c.is_zero() {
                    f = f.add(&lambda[i].scale(c));
                }
            }
            f
        };
        let cell = BigCell { alg, nm_idx, var_grades, lambda, lambda_e };
        cell.certify()?;
        Ok(cell)
    }

    /// The field of an arbitrary algebra element.
    pub fn embed(&self, x: &[Rat]) -> PolyMap {
        let mut f = PolyMap::zero(self.nm_idx.len(), self.nm_idx.len());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                f = f.add(&self.lambda[i].scale(c));
            }
        }
        f
    }

    fn certify(&self) -> Result<()> {
        // Bracket preservation on every basis pair.
        for i in 0..self.alg.dim {
            for j in (i + 1)..self.alg.dim {
                let lhs = {
                    let mut f = PolyMap::zero(self.nm_idx.len(), self.nm_idx.len());
                    for (k, c) in self.alg.bracket_basis(i, j) {
                        f = f.add(&self.lambda[*k].scale(c));
                    }
                    f
                };
                let rhs = field_bracket(&self.lambda[i], &self.lambda[j]);
                if lhs != rhs {
                    return Err(Error::Verification(format!(
                        "{}: field realization is not bracket-preserving at basis pair ({}, {})",
                        self.alg.id, i, j
                    )));
                }
            }
        }
        // Degree bounds per grade.
        for i in 0..self.alg.dim {
            let g = self.alg.grade_of_basis(i);
            let deg = self.lambda[i].degree().unwrap_or(0);
            let ok = match g {
                -2 | -1 => deg <= 1,
                0 => deg == 1 && self.lambda[i].truncate_degrees(0, 0).is_zero(),
                _ => deg <= 4 && self.lambda[i].truncate_degrees(0, 0).is_zero(),
            };
            if !ok {
                return Err(Error::Verification(format!(
                    "{}: field degree profile violated at basis index {} (grade {}, degree {})",
                    self.alg.id, i, g, deg
                )));
            }
        }
        // The grading element realizes the diagonal linear field.
        let mut want = PolyMap::zero(self.nm_idx.len(), self.nm_idx.len());
        for (j, g) in self.var_grades.iter().enumerate() {
            let mut mono = vec![0u32; self.nm_idx.len()];
            mono[j] = 1;
            let mut coeff = vec![q(0); self.nm_idx.len()];
            coeff[j] = q(*g);
            want.add_term(mono, coeff);
        }
        if self.lambda_e != want {
            return Err(Error::Verification(format!(
                "{}: the grading element's field is not the graded dilation",
                self.alg.id
            )));
        }
        // Injectivity via the coefficient matrix rank.
        let mut cols: BTreeMap<(Mono, usize), usize> = BTreeMap::new();
        let flats: Vec<Vec<((Mono, usize), Rat)>> = self.lambda.iter().map(flatten).collect();
        for f in &flats {
            for (key, _) in f {
                let next = cols.len();
                cols.entry(key.clone()).or_insert(next);
            }
        }
        let mut mat: QMat = vec![vec![q(0); cols.len()]; self.alg.dim];
        for (r, f) in flats.iter().enumerate() {
            for (key, c) in f {
                mat[r][cols[key]] = c.clone();
            }
        }
        if linalg::rank_dense(mat) != self.alg.dim {
            return Err(Error::Verification(format!(
                "{}: field realization is not injective",
                self.alg.id
            )));
        }
        Ok(())
    }

    pub fn field_a_weight(&self, mono: &Mono, out: usize) -> i64 {
        self.var_grades[out] - mono.iter().zip(&self.var_grades).map(|(m, g)| *m as i64 * g).sum::<i64>()
    }

    pub fn field_h_weight(&self, mono: &Mono, out: usize) -> Weight {
        let mut w = self.alg.weight_of_basis(self.nm_idx[out]);
        for (j, &m) in mono.iter().enumerate() {
            for _ in 0..m {
                w = &w - &self.alg.weight_of_basis(self.nm_idx[j]);
            }
        }
        w
    }

    /// All monomial fields of total degree in [lo, hi].
    pub fn field_basis(&self, lo: u32, hi: u32) -> Vec<(Mono, usize)> {
        let d = self.nm_idx.len();
        let mut out = Vec::new();
        for deg in lo..=hi {
            for m in monomials_of_degree(d, deg) {
                for i in 0..d {
                    out.push((m.clone(), i));
                }
            }
        }
        out
    }

    fn basis_field(&self, m: &Mono, i: usize) -> PolyMap {
        let d = self.nm_idx.len();
        let mut f = PolyMap::zero(d, d);
        let mut coeff = vec![q(0); d];
        coeff[i] = q(1);
        f.add_term(m.clone(), coeff);
        f
    }

    /// Basis of the centralizer of the realized opposite nilradical inside
    /// fields of degree <= cap, with per-vector a-weights.
    pub fn centralizer_n_minus(&self, cap: u32) -> CentralizerReport {
        let basis = self.field_basis(0, cap);
        let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (bi, (m, i)) in basis.iter().enumerate() {
            by_weight.entry(self.field_a_weight(m, *i)).or_default().push(bi);
        }
        let nm_lams: Vec<&PolyMap> = self.nm_idx.iter().map(|&i| &self.lambda[i]).collect();
        let mut vectors: Vec<PolyMap> = Vec::new();
        let mut a_weights: Vec<i64> = Vec::new();
        for (w, block) in &by_weight {
            let brackets: Vec<Vec<((Mono, usize), Rat)>> = block
                .iter()
                .map(|&bi| {
                    let f = self.basis_field(&basis[bi].0, basis[bi].1);
                    let mut all = Vec::new();
                    for (xi, lam) in nm_lams.iter().enumerate() {
                        for ((m, o), c) in flatten(&field_bracket(&f, lam)) {
                            all.push(((m, o.checked_add(xi * self.nm_idx.len()).unwrap()), c));
                        }
                    }
                    all
                })
                .collect();
            let mut cols: BTreeMap<(Mono, usize), usize> = BTreeMap::new();
            for b in &brackets {
                for (key, _) in b {
                    let next = cols.len();
                    cols.entry(key.clone()).or_insert(next);
                }
            }
            let mut mat: QMat = vec![vec![q(0); block.len()]; cols.len()];
            for (bcol, b) in brackets.iter().enumerate() {
                for (key, c) in b {
                    mat[cols[key]][bcol] = c.clone();
                }
            }
            for v in linalg::kernel_basis(&mat, block.len()) {
                let mut f = PolyMap::zero(self.nm_idx.len(), self.nm_idx.len());
                for (ci, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        f = f.add(&self.basis_field(&basis[block[ci]].0, basis[block[ci]].1).scale(c));
                    }
                }
                vectors.push(f);
                a_weights.push(*w);
            }
        }
        // Bracket closure and the derived span.
        let key_index = |fields: &[PolyMap]| -> (BTreeMap<(Mono, usize), usize>, QMat) {
            let flats: Vec<_> = fields.iter().map(flatten).collect();
            let mut cols = BTreeMap::new();
            for f in &flats {
                for (key, _) in f {
                    let next = cols.len();
                    cols.entry(key.clone()).or_insert(next);
                }
            }
            let mut mat = vec![vec![q(0); cols.len()]; fields.len()];
            for (r, f) in flats.iter().enumerate() {
                for (key, c) in f {
                    mat[r][cols[key]] = c.clone();
                }
            }
            (cols, mat)
        };
        let (cols, span_rows) = key_index(&vectors);
        let mut bracket_closed = true;
        let mut derived: Vec<PolyMap> = Vec::new();
        for i in 0..vectors.len() {
            for j in (i + 1)..vectors.len() {
                let b = field_bracket(&vectors[i], &vectors[j]);
                let mut row = vec![q(0); cols.len()];
                let mut representable = true;
                for (key, c) in flatten(&b) {
                    match cols.get(&key) {
                        Some(&ci) => row[ci] = c,
                        None => representable = false,
                    }
                }
                if !representable || !linalg::in_span(&span_rows, &row) {
                    bracket_closed = false;
                }
                if !b.is_zero() {
                    derived.push(b);
                }
            }
        }
        let derived_dim = {
            let (_, rows) = key_index(&derived);
            if derived.is_empty() { 0 } else { linalg::span_dim(&rows) }
        };
        CentralizerReport { dim: vectors.len(), a_weights, vectors, bracket_closed, derived_dim }
    }

    /// Solution space of the grade-preserving normalizer problem: fields F
    /// of a-weight 0 with [F, field(x)] inside the realized positive
    /// nilradical span for every positive-grade basis x. A-weight-0
    /// monomial fields necessarily have degree <= 2, so the cap is
    /// exhaustive, not an approximation.
    pub fn weight_zero_normalizer(&self) -> NormalizerReport {
        let basis: Vec<(Mono, usize)> = self
            .field_basis(0, 2)
            .into_iter()
            .filter(|(m, i)| self.field_a_weight(m, *i) == 0)
            .collect();
        let n_idx = self.alg.indices_n();
        let n_fields: Vec<&PolyMap> = n_idx.iter().map(|&i| &self.lambda[i]).collect();
        let n_unknowns = basis.len() + n_idx.len() * n_idx.len();
        let mut rows_map: BTreeMap<(usize, Mono, usize), Vec<(usize, Rat)>> = BTreeMap::new();
        for (bi, (m, i)) in basis.iter().enumerate() {
            let f = self.basis_field(m, *i);
            for (xi, lam) in n_fields.iter().enumerate() {
                for ((mm, o), c) in flatten(&field_bracket(&f, lam)) {
                    rows_map.entry((xi, mm, o)).or_default().push((bi, c));
                }
            }
        }
        for (xi, _) in n_fields.iter().enumerate() {
            for (gi, lam) in n_fields.iter().enumerate() {
                let col = basis.len() + xi * n_idx.len() + gi;
                for ((mm, o), c) in flatten(lam) {
                    rows_map.entry((xi, mm, o)).or_default().push((col, -c));
                }
            }
        }
        let mut mat: QMat = Vec::with_capacity(rows_map.len());
        for (_, entries) in rows_map {
            let mut row = vec![q(0); n_unknowns];
            for (c, v) in entries {
                row[c] = &row[c] + &v;
            }
            mat.push(row);
        }
        let kernel = linalg::kernel_basis(&mat, n_unknowns);
        let solution_rows: Vec<Vec<Rat>> =
            kernel.iter().map(|v| v[..basis.len()].to_vec()).collect();
        let solution_dim = linalg::span_dim(&solution_rows);

        // Coordinates of the realized grade-zero part in the same basis.
        let col_of: BTreeMap<(Mono, usize), usize> =
            basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut g0_rows: Vec<Vec<Rat>> = Vec::new();
        for &i in &self.alg.indices_g0() {
            let mut row = vec![q(0); basis.len()];
            for (key, c) in flatten(&self.lambda[i]) {
                row[*col_of.get(&key).expect("grade-zero field leaves the weight-zero basis")] = c;
            }
            g0_rows.push(row);
        }
        let g0_dim = linalg::span_dim(&g0_rows);
        let contains_g0 = g0_rows.iter().all(|r| linalg::in_span(&solution_rows, r));
        let equals_g0 = contains_g0 && solution_dim == g0_dim;
        NormalizerReport { solution_dim, g0_dim, contains_g0, equals_g0 }
    }
}

pub struct CentralizerReport {
    pub dim: usize,
    pub a_weights: Vec<i64>,
    pub vectors: Vec<PolyMap>,
    pub bracket_closed: bool,
    pub derived_dim: usize,
}

pub struct NormalizerReport {
    pub solution_dim: usize,
    pub g0_dim: usize,
    pub contains_g0: bool,
    pub equals_g0: bool,
}

fn f4_memory_cap_bytes(alg: &ChevalleyAlgebra) -> Option<usize> {
    if alg.id.to_string() != "f4" {
        return None;
    }
    let mb = std::env::var("RANKONE_F4_LAMBDA_MEM_MB")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(512);
    Some(mb << 20)
}

/// The order-r jet module: monomial fields of degree 1..r with the
/// truncated adjoint action of the positive nilradical through the field
/// realization.
pub struct JetModule {
    pub r: u32,
    pub basis: Vec<(Mono, usize)>,
    pub a_weights: Vec<i64>,
    pub h_weights: Vec<Weight>,
    /// Sparse action columns per positive-nilradical basis element, in
    /// the order of `alg.indices_n()`.
    pub actions: Vec<Vec<Sparse>>,
    pub e_action: Vec<Sparse>,
}

pub fn jet_module(cell: &BigCell, r: u32) -> JetModule {
    assert!((1..=8).contains(&r));
    let basis = cell.field_basis(1, r);
    let index: BTreeMap<(Mono, usize), usize> =
        basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let a_weights: Vec<i64> = basis.iter().map(|(m, i)| cell.field_a_weight(m, *i)).collect();
    let h_weights: Vec<Weight> = basis.iter().map(|(m, i)| cell.field_h_weight(m, *i)).collect();
    let act = |lam: &PolyMap| -> Vec<Sparse> {
        let mut cols = vec![Vec::new(); basis.len()];
        for (bi, (m, i)) in basis.iter().enumerate() {
            let b = field_bracket(lam, &cell.basis_field(m, *i)).truncate_degrees(1, r);
            let mut col: Sparse = flatten(&b)
                .into_iter()
                .map(|(key, c)| (*index.get(&key).expect("jet bracket left the basis"), c))
                .collect();
            col.sort_by_key(|e| e.0);
            cols[bi] = col;
        }
        cols
    };
    let actions: Vec<Vec<Sparse>> =
        cell.alg.indices_n().iter().map(|&i| act(&cell.lambda[i])).collect();
    let e_action = act(&cell.lambda_e);
    JetModule { r, basis, a_weights, h_weights, actions, e_action }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::AlgebraId;

    fn cell(s: &str) -> BigCell {
        BigCell::new(ChevalleyAlgebra::new(AlgebraId::parse(s).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn certificates_pass_on_the_acceptance_set() {
        for s in ["sl:3", "sl:4", "so:5", "so:6", "sp:6"] {
            let c = cell(s);
            assert_eq!(c.nm_idx.len(), c.alg.datum.dim_n());
        }
    }

    #[test]
    fn negative_part_fields_are_constant_plus_correction() {
        let c = cell("sl:3");
        for (j, &i) in c.nm_idx.iter().enumerate() {
            let f = &c.lambda[i];
            let constant = f.truncate_degrees(0, 0);
            let mut coeff = vec![q(0); c.nm_idx.len()];
            coeff[j] = q(1);
            let mut want = PolyMap::zero(c.nm_idx.len(), c.nm_idx.len());
            want.add_term(vec![0; c.nm_idx.len()], coeff);
            assert_eq!(constant, want);
        }
    }

    #[test]
    fn abelian_case_gives_pure_constants_downstairs() {
        let c = cell("so:6");
        for &i in &c.nm_idx {
            assert_eq!(c.lambda[i].degree(), Some(0));
        }
    }

    #[test]
    fn centralizer_matches_the_opposite_nilradical() {
        for (s, der) in [("sl:3", 1usize), ("so:6", 0), ("sp:6", 3)] {
            let c = cell(s);
            let rep = c.centralizer_n_minus(2);
            assert_eq!(rep.dim, c.alg.datum.dim_n(), "{}", s);
            assert!(rep.bracket_closed, "{}", s);
            assert_eq!(rep.derived_dim, der, "{}", s);
            assert!(rep.a_weights.iter().all(|w| *w == -1 || *w == -2), "{}", s);
            let (g1, g2) = c.alg.datum.graded_root_counts();
            assert_eq!(rep.a_weights.iter().filter(|w| **w == -1).count(), g1);
            assert_eq!(rep.a_weights.iter().filter(|w| **w == -2).count(), g2);
        }
    }

    #[test]
    fn weight_zero_normalizer_is_the_grade_zero_part() {
        for (s, dim) in [("sl:4", 5usize), ("sl:5", 10)] {
            let c = cell(s);
            let rep = c.weight_zero_normalizer();
            assert!(rep.contains_g0);
            assert!(rep.equals_g0, "{}", s);
            assert_eq!(rep.solution_dim, dim);
            assert_eq!(rep.g0_dim, dim);
        }
    }

    #[test]
    fn jet_dimensions_and_weight_range() {
        let c = cell("sl:3");
        let j3 = jet_module(&c, 3);
        assert_eq!(j3.basis.len(), 57);
        let min = *j3.a_weights.iter().min().unwrap();
        let max = *j3.a_weights.iter().max().unwrap();
        assert_eq!((min, max), (-1, 5));
    }

    #[test]
    fn jet_action_is_nilpotent() {
        let c = cell("sl:3");
        let j3 = jet_module(&c, 3);
        let apply = |cols: &Vec<Sparse>, v: &Vec<Rat>| -> Vec<Rat> {
            let mut out = vec![q(0); v.len()];
            for (j, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, a) in &cols[j] {
                    out[*i] = &out[*i] + &(a * c);
                }
            }
            out
        };
        for cols in &j3.actions {
            for start in 0..j3.basis.len() {
                let mut v = vec![q(0); j3.basis.len()];
                v[start] = q(1);
                for _ in 0..7 {
                    v = apply(cols, &v);
                }
                assert!(v.iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn jet_truncation_is_compatible() {
        let c = cell("sl:3");
        let j3 = jet_module(&c, 3);
        let j2 = jet_module(&c, 2);
        let idx3: BTreeMap<(Mono, usize), usize> =
            j3.basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        for (a3, a2) in j3.actions.iter().zip(&j2.actions) {
            for (b2, key) in j2.basis.iter().enumerate() {
                let b3 = idx3[key];
                let col3: Vec<(usize, Rat)> = a3[b3]
                    .iter()
                    .filter(|(i, _)| {
                        let (m, _) = &j3.basis[*i];
                        m.iter().sum::<u32>() <= 2
                    })
                    .map(|(i, c)| {
                        let key = &j3.basis[*i];
                        (j2.basis.iter().position(|k| k == key).unwrap(), c.clone())
                    })
                    .collect();
                assert_eq!(col3, a2[b2]);
            }
        }
    }

    #[test]
    fn e_action_on_jets_is_diagonal_with_the_a_weights() {
        let c = cell("so:6");
        let j3 = jet_module(&c, 3);
        for (bi, col) in j3.e_action.iter().enumerate() {
            let w = j3.a_weights[bi];
            if w == 0 {
                assert!(col.is_empty());
            } else {
                assert_eq!(col, &vec![(bi, q(w))]);
            }
        }
    }
}
