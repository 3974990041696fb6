//! The dilation-lattice groups as finite presentations: a generator a
//! scaling a two-step integral lattice by k on the first layer and k^2 on
//! the second, exact matrix representations, and group cohomology in
//! degrees 0 and 1 by Fox free differential calculus.

use num_traits::Zero;

use crate::catalog::AlgebraId;
use crate::ce::{g_mod_p_module, n_algebra, NAlgebra, NModule};
use crate::chevalley::ChevalleyAlgebra;
use crate::linalg::{self, QMat, SparseMat};
use crate::rat::{q, qq, Rat};
use crate::{Error, Result};

/// A word over the presentation generators as (generator, exponent)
/// pairs. Generator 0 is the dilation a, then the b block (first-layer
/// lattice directions), then the c block (second-layer directions).
pub type Word = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct StandardPresentation {
    pub k: i64,
    pub m1: usize,
    pub m2: usize,
    /// For each pair i < j of b generators, the c-exponents of the
    /// commutator [b_i, b_j] in the lattice.
    pub bb_exponents: Vec<((usize, usize), Vec<i64>)>,
    pub relators: Vec<Word>,
}

fn commutator(x: usize, y: usize) -> Word {
    vec![(x, 1), (y, 1), (x, -1), (y, -1)]
}

impl StandardPresentation {
    pub fn generators(&self) -> usize {
        1 + self.m1 + self.m2
    }

    pub fn gen_b(&self, i: usize) -> usize {
        1 + i
    }

    pub fn gen_c(&self, j: usize) -> usize {
        1 + self.m1 + j
    }

    pub fn generator_name(&self, g: usize) -> String {
        if g == 0 {
            "a".into()
        } else if g <= self.m1 {
            format!("b{}", g)
        } else {
            format!("c{}", g - self.m1)
        }
    }

    /// The degenerate one-generator lattice <a, b | a b a^-1 b^-k>, the
    /// solvable Baumslag-Solitar group BS(1, k).
    pub fn baumslag_solitar(k: i64) -> Result<Self> {
        check_k(k)?;
        Ok(StandardPresentation {
            k,
            m1: 1,
            m2: 0,
            bb_exponents: Vec::new(),
            relators: vec![vec![(0, 1), (1, 1), (0, -1), (1, -k)]],
        })
    }
}

fn check_k(k: i64) -> Result<i64> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("dilation exponent must be at least 2, got {k}")));
    }
    k.checked_mul(k)
        .ok_or_else(|| Error::InvalidInput(format!("dilation exponent {k} squared overflows")))
}

fn split_positions(n: &NAlgebra) -> (Vec<usize>, Vec<usize>) {
    let b = (0..n.dim).filter(|&i| n.a_weights[i] == 1).collect();
    let c = (0..n.dim).filter(|&i| n.a_weights[i] == 2).collect();
    (b, c)
}

/// The presentation defined by an integral two-step lattice basis: for
/// every pair of first-layer generators the commutator is the c-word
/// given by the exact two-step identity [exp X, exp Y] = exp([X, Y]),
/// and a conjugates the layers by the k-th and k^2-th powers.
pub fn presentation_from_lattice(n: &NAlgebra, k: i64) -> Result<StandardPresentation> {
    let ksq = check_k(k)?;
    let (b_pos, c_pos) = split_positions(n);
    if b_pos.len() + c_pos.len() != n.dim {
        return Err(Error::InvalidInput("lattice weights must be 1 or 2 (two-step)".into()));
    }
    let c_ord: std::collections::BTreeMap<usize, usize> =
        c_pos.iter().enumerate().map(|(l, &p)| (p, l)).collect();
    let (m1, m2) = (b_pos.len(), c_pos.len());

    for (&p, &r) in b_pos.iter().flat_map(|p| c_pos.iter().map(move |r| (p, r))) {
        if !n.brackets[p][r].is_empty() {
            return Err(Error::InvalidInput("first and second layers must commute".into()));
        }
    }
    for (li, &p) in c_pos.iter().enumerate() {
        for &r in &c_pos[li + 1..] {
            if !n.brackets[p][r].is_empty() {
                return Err(Error::InvalidInput("second layer must be central".into()));
            }
        }
    }

    let mut bb_exponents = Vec::new();
    let mut relators = Vec::new();
    for i in 0..m1 {
        for j in i + 1..m1 {
            let mut exps = vec![0i64; m2];
            for (target, coeff) in &n.brackets[b_pos[i]][b_pos[j]] {
                let Some(&l) = c_ord.get(target) else {
                    return Err(Error::InvalidInput(
                        "first-layer commutators must land in the second layer".into(),
                    ));
                };
                if !coeff.is_integer() {
                    return Err(Error::InvalidInput(
                        "non-integer structure constants; choose a rescaled basis".into(),
                    ));
                }
                exps[l] = rat_to_i64(coeff)?;
            }
            let mut w = commutator(1 + i, 1 + j);
            for (l, &e) in exps.iter().enumerate() {
                if e != 0 {
                    w.push((1 + m1 + l, -e));
                }
            }
            bb_exponents.push(((i, j), exps));
            relators.push(w);
        }
    }
    for i in 0..m1 {
        for j in 0..m2 {
            relators.push(commutator(1 + i, 1 + m1 + j));
        }
    }
    for i in 0..m2 {
        for j in i + 1..m2 {
            relators.push(commutator(1 + m1 + i, 1 + m1 + j));
        }
    }
    for i in 0..m1 {
        relators.push(vec![(0, 1), (1 + i, 1), (0, -1), (1 + i, -k)]);
    }
    for j in 0..m2 {
        relators.push(vec![(0, 1), (1 + m1 + j, 1), (0, -1), (1 + m1 + j, -ksq)]);
    }
    Ok(StandardPresentation { k, m1, m2, bb_exponents, relators })
}

fn rat_to_i64(r: &Rat) -> Result<i64> {
    use num_traits::ToPrimitive;
    r.to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("structure constant overflows".into()))
}

pub fn build_presentation(alg: &ChevalleyAlgebra, k: i64) -> Result<StandardPresentation> {
    presentation_from_lattice(&n_algebra(alg), k)
}

/// An exact matrix representation of a presented group; every relator is
/// checked to act as the identity at construction.
pub struct GroupRep {
    pub dim: usize,
    pub mats: Vec<QMat>,
    invs: Vec<QMat>,
}

impl GroupRep {
    pub fn new(pres: &StandardPresentation, mats: Vec<QMat>) -> Result<Self> {
        if mats.len() != pres.generators() {
            return Err(Error::InvalidInput(format!(
                "expected {} generator matrices, got {}",
                pres.generators(),
                mats.len()
            )));
        }
        let dim = mats[0].len();
        for m in &mats {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(Error::InvalidInput("generator matrices must be square of one size".into()));
            }
        }
        let invs = mats
            .iter()
            .map(|m| {
                linalg::inverse(m)
                    .ok_or_else(|| Error::InvalidInput("generator matrix is singular".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = GroupRep { dim, mats, invs };
        let id = linalg::mat_id(dim);
        for (ri, r) in pres.relators.iter().enumerate() {
            if rep.eval_word(r) != id {
                return Err(Error::Verification(format!(
                    "relator {ri} does not act as the identity"
                )));
            }
        }
        Ok(rep)
    }

    pub fn eval_word(&self, w: &Word) -> QMat {
        let mut out = linalg::mat_id(self.dim);
        for &(g, e) in w {
            let m = if e >= 0 { &self.mats[g] } else { &self.invs[g] };
            for _ in 0..e.unsigned_abs() {
                out = linalg::mat_mul(&out, m);
            }
        }
        out
    }
}

/// The one-dimensional action where the lattice is trivial and the
/// dilation acts by the scalar s.
pub fn scalar_rep(pres: &StandardPresentation, s: &Rat) -> Result<GroupRep> {
    if s.is_zero() {
        return Err(Error::InvalidInput("scalar action must be invertible".into()));
    }
    let mut mats = vec![vec![vec![q(1)]]; pres.generators()];
    mats[0] = vec![vec![s.clone()]];
    GroupRep::new(pres, mats)
}

fn action_matrix(v: &NModule, p: usize) -> QMat {
    let mut m = vec![vec![q(0); v.dim]; v.dim];
    for (j, col) in v.action[p].iter().enumerate() {
        for (r, coeff) in col {
            m[*r][j] = coeff.clone();
        }
    }
    m
}

fn is_zero_mat(m: &QMat) -> bool {
    m.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

fn nilpotent_exp(a: &QMat) -> Result<QMat> {
    let d = a.len();
    let mut sum = linalg::mat_id(d);
    let mut term = linalg::mat_id(d);
    let mut fact = q(1);
    for t in 1..=d {
        term = linalg::mat_mul(&term, a);
        if is_zero_mat(&term) {
            return Ok(sum);
        }
        fact *= q(t as i64);
        let inv = fact.recip();
        for (srow, trow) in sum.iter_mut().zip(&term) {
            for (s, x) in srow.iter_mut().zip(trow) {
                if !x.is_zero() {
                    *s = &*s + &(x * &inv);
                }
            }
        }
    }
    if is_zero_mat(&linalg::mat_mul(&term, a)) {
        Ok(sum)
    } else {
        Err(Error::InvalidInput("generator action is not nilpotent".into()))
    }
}

fn k_power(k: i64, w: i64) -> Rat {
    if w >= 0 {
        q(k.pow(w as u32))
    } else {
        qq(1, k.pow((-w) as u32))
    }
}

/// The adjoint action of the presented group on g/p: the dilation acts
/// diagonally by k to the grade, each lattice generator by the
/// exponential of its induced nilpotent action.
pub fn adjoint_rep_on_g_mod_p(
    alg: &ChevalleyAlgebra,
    pres: &StandardPresentation,
) -> Result<GroupRep> {
    let n = n_algebra(alg);
    let v = g_mod_p_module(alg);
    adjoint_rep_on(&n, &v, pres)
}

/// The same construction over any module of the lattice algebra whose
/// a-grading is by integer weights (used with g/p and with g itself).
pub fn adjoint_rep_on(n: &NAlgebra, v: &NModule, pres: &StandardPresentation) -> Result<GroupRep> {
    let (b_pos, c_pos) = split_positions(n);
    if b_pos.len() != pres.m1 || c_pos.len() != pres.m2 {
        return Err(Error::InvalidInput("presentation does not match the lattice shape".into()));
    }
    let d = v.dim;
    let mut a_mat = vec![vec![q(0); d]; d];
    for j in 0..d {
        a_mat[j][j] = k_power(pres.k, v.a_weights[j]);
    }
    let mut mats = vec![a_mat];
    for &p in b_pos.iter().chain(c_pos.iter()) {
        mats.push(nilpotent_exp(&action_matrix(v, p))?);
    }
    GroupRep::new(pres, mats)
}

/// rho(dr/dg) for each generator g: walk the word keeping the prefix
/// image, adding the prefix at a positive letter of g and subtracting
/// the advanced prefix at a negative one.
fn fox_matrices(rep: &GroupRep, gens: usize, w: &Word) -> Vec<QMat> {
    let d = rep.dim;
    let mut out = vec![vec![vec![q(0); d]; d]; gens];
    let mut prefix = linalg::mat_id(d);
    for &(g, e) in w {
        if e >= 0 {
            for _ in 0..e {
                mat_acc(&mut out[g], &prefix, false);
                prefix = linalg::mat_mul(&prefix, &rep.mats[g]);
            }
        } else {
            for _ in 0..(-e) {
                prefix = linalg::mat_mul(&prefix, &rep.invs[g]);
                mat_acc(&mut out[g], &prefix, true);
            }
        }
    }
    out
}

fn mat_acc(dst: &mut QMat, src: &QMat, negate: bool) {
    for (dr, sr) in dst.iter_mut().zip(src) {
        for (dv, sv) in dr.iter_mut().zip(sr) {
            if !sv.is_zero() {
                *dv = if negate { &*dv - sv } else { &*dv + sv };
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FoxReport {
    pub dim: usize,
    pub z1: usize,
    pub b1: usize,
    pub h0: usize,
    pub h1: usize,
}

/// H^0 and H^1 of the presented group: cocycles from the Fox-linearized
/// relator system, coboundaries from v - g.v. Each run asserts the
/// fundamental identity sum_g rho(dr/dg)(rho(g) - id) = rho(r) - id = 0,
/// i.e. the linearized system annihilates every coboundary.
pub fn fox_cohomology(pres: &StandardPresentation, rep: &GroupRep) -> Result<FoxReport> {
    let gens = pres.generators();
    let d = rep.dim;
    let id = linalg::mat_id(d);

    let mut sys = SparseMat::new(gens * d);
    let mut dense: QMat = Vec::new();
    let small = gens * d <= 48 && pres.relators.len() * d <= 48;
    for w in &pres.relators {
        let fox = fox_matrices(rep, gens, w);

        let mut fundamental = vec![vec![q(0); d]; d];
        for (g, m) in fox.iter().enumerate() {
            let mut diff = id.clone();
            mat_acc(&mut diff, &rep.mats[g], true);
            mat_acc(&mut fundamental, &linalg::mat_mul(m, &diff), false);
        }
        if !is_zero_mat(&fundamental) {
            return Err(Error::Verification(
                "linearized relator fails to annihilate the coboundaries".into(),
            ));
        }

        for row in 0..d {
            let mut entries = Vec::new();
            for (g, m) in fox.iter().enumerate() {
                for (col, x) in m[row].iter().enumerate() {
                    if !x.is_zero() {
                        entries.push((g * d + col, x.clone()));
                    }
                }
            }
            if small {
                let mut full = vec![q(0); gens * d];
                for (c, x) in &entries {
                    full[*c] = x.clone();
                }
                dense.push(full);
            }
            sys.push_rat_row(&entries);
        }
    }
    let z_rank = sys.rank();
    if small {
        assert_eq!(z_rank, linalg::rank_dense(dense));
    }
    let z1 = gens * d - z_rank;

    let mut bmat = SparseMat::new(d);
    for m in &rep.mats {
        let mut diff = id.clone();
        mat_acc(&mut diff, m, true);
        for row in diff {
            let entries: Vec<(usize, Rat)> =
                row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            bmat.push_rat_row(&entries);
        }
    }
    let b1 = bmat.rank();
    assert!(b1 <= z1);
    Ok(FoxReport { dim: d, z1, b1, h0: d - b1, h1: z1 - b1 })
}

pub fn fox_h1(pres: &StandardPresentation, rep: &GroupRep) -> Result<usize> {
    Ok(fox_cohomology(pres, rep)?.h1)
}

/// dim Hom(G^ab, Q) of the presented group: generators minus the
/// rational rank of the abelianized relators. Independent oracle for the
/// trivial-action degree one cohomology.
pub fn abelianization_rank(pres: &StandardPresentation) -> usize {
    let gens = pres.generators();
    let rows: QMat = pres
        .relators
        .iter()
        .map(|w| {
            let mut row = vec![q(0); gens];
            for &(g, e) in w {
                row[g] = &row[g] + &q(e);
            }
            row
        })
        .collect();
    gens - linalg::rank_dense(rows)
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub s: Rat,
    pub exceptional: bool,
    pub h0: usize,
    pub h1: usize,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub k: i64,
    pub rows: Vec<ScanRow>,
}

/// Scalar-action scan over s: the lattice acts trivially, a by s.
/// Vanishing of H^0 and H^1 is asserted off the exceptional set
/// {1, k, k^2}; the exceptional values are reported without assertion.
pub fn scalar_action_scan(pres: &StandardPresentation) -> Result<ScanReport> {
    let k = pres.k;
    let ksq = k * k;
    let samples = [
        (q(1), true),
        (q(k), true),
        (q(ksq), true),
        (q(k + 1), false),
        (q(ksq + 1), false),
        (qq(1, k), false),
        (qq(2 * k + 1, 2), false),
    ];
    let mut rows = Vec::new();
    for (s, exceptional) in samples {
        let rep = scalar_rep(pres, &s)?;
        let fr = fox_cohomology(pres, &rep)?;
        if !exceptional && (fr.h0 != 0 || fr.h1 != 0) {
            return Err(Error::Verification(format!(
                "scalar action s = {} off the exceptional set has (h0, h1) = ({}, {})",
                s, fr.h0, fr.h1
            )));
        }
        rows.push(ScanRow { s, exceptional, h0: fr.h0, h1: fr.h1 });
    }
    Ok(ScanReport { k, rows })
}

#[derive(Clone, Copy, Debug)]
pub struct GammaReport {
    pub algebra: AlgebraId,
    pub k: i64,
    pub dim: usize,
    pub h0: usize,
    pub h1: usize,
}

/// Degree 0 and 1 cohomology of the presented dilation-lattice group in
/// its exact adjoint action on g/p.
pub fn adjoint_gmodp_cohomology(id: AlgebraId, k: i64) -> Result<GammaReport> {
    let alg = ChevalleyAlgebra::new(id)?;
    let pres = build_presentation(&alg, k)?;
    let rep = adjoint_rep_on_g_mod_p(&alg, &pres)?;
    let fr = fox_cohomology(&pres, &rep)?;
    Ok(GammaReport { algebra: id, k, dim: fr.dim, h0: fr.h0, h1: fr.h1 })
}
