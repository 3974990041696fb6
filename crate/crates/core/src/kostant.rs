//! The executable highest-weight formula for nilradical cohomology, plus the
//! exhaustive Weyl-orbit scans that feed the a-invariant tables.
//!
//! For a dominant highest weight lambda and degree r, the cohomology
//! H^r(n, F_lambda) decomposes over the Levi into irreducibles with highest
//! weights mu = w(lambda + delta) - delta, one per length-r element of the
//! minimal coset transversal. We enumerate every length-r element of the
//! full group and keep exactly those with l-dominant mu; a cross-check
//! asserts this agrees with the transversal characterization.

use crate::catalog::{orthogonal_to_a, RankOneDatum};
use crate::rat::{expect_int, q, Rat};
use crate::roots::{is_dominant, is_strictly_dominant};
use crate::weight::Weight;
use crate::weyl::{reflection_subgroup_order, WeylElement};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct KostantSummand {
    pub mu: Weight,
    pub word: Vec<usize>,
    pub length: usize,
}

#[derive(Clone, Debug)]
pub struct KostantResult {
    pub lambda: Weight,
    pub degree: usize,
    /// All summands in degree `degree`, sorted by (mu, word).
    pub summands: Vec<KostantSummand>,
}

impl KostantResult {
    pub fn mus(&self) -> Vec<Weight> {
        self.summands.iter().map(|s| s.mu.clone()).collect()
    }
}

/// Whether w lies in the minimal-length transversal of the Levi's subgroup:
/// w^{-1} maps every positive Levi root to a positive root. The matrices are
/// orthogonal, so the inverse acts by the transpose.
fn in_levi_transversal(datum: &RankOneDatum, w: &WeylElement) -> bool {
    datum.delta_l_pos.iter().all(|beta| {
        let mut img = vec![q(0); beta.dim()];
        for (i, row) in w.matrix.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if !m.is_zero() {
                    img[j] = &img[j] + &(m * &beta.0[i]);
                }
            }
        }
        datum.roots.positive.contains(&Weight(img))
    })
}

pub fn kostant_cohomology(
    datum: &RankOneDatum,
    lambda_hw: &Weight,
    degree: usize,
) -> Result<KostantResult> {
    if !is_dominant(lambda_hw, &datum.roots.positive) {
        return Err(Error::InvalidInput(format!(
            "highest weight {} is not dominant for {}",
            lambda_hw, datum.id
        )));
    }
    let shifted = lambda_hw + &datum.delta;
    let mut summands = Vec::new();
    for w in datum.weyl_group() {
        if w.length != degree {
            continue;
        }
        let mu = &w.apply(&shifted) - &datum.delta;
        let keep = is_dominant(&mu, &datum.delta_l_pos);
        assert_eq!(
            keep,
            in_levi_transversal(datum, w),
            "l-dominance filter disagrees with the coset transversal at word {:?}",
            w.word
        );
        if keep {
            summands.push(KostantSummand { mu, word: w.word.clone(), length: w.length });
        }
    }
    summands.sort_by(|a, b| (&a.mu, &a.word).cmp(&(&b.mu, &b.word)));
    Ok(KostantResult { lambda: lambda_hw.clone(), degree, summands })
}

/// Keep the weights orthogonal to a*.
pub fn a_invariant_filter(datum: &RankOneDatum, weights: &[Weight]) -> Vec<Weight> {
    weights.iter().filter(|m| orthogonal_to_a(datum, m)).cloned().collect()
}

/// The l-highest-weight multiset of the a-invariant part of H^1(n, g):
/// degree-1 cohomology of every adjoint summand, a-filtered. Sorted.
pub fn adjoint_h1_a(datum: &RankOneDatum) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for hw in &datum.adjoint_hw {
        let res = kostant_cohomology(datum, hw, 1)?;
        out.extend(a_invariant_filter(datum, &res.mus()));
    }
    out.sort();
    Ok(out)
}

/// Dimension of the irreducible Levi module with highest weight mu, by the
/// dimension formula over the positive Levi roots. Exact; asserts the
/// result is a positive integer.
pub fn weyl_dim_l(datum: &RankOneDatum, mu: &Weight) -> BigInt {
    assert!(
        is_dominant(mu, &datum.delta_l_pos),
        "dimension formula applied to non-l-dominant {}",
        mu
    );
    let mut delta_l = Weight::zero(datum.roots.ambient);
    for a in &datum.delta_l_pos {
        delta_l = &delta_l + a;
    }
    let delta_l = delta_l.scaled(&crate::rat::qq(1, 2));
    let mut dim = Rat::one();
    let shifted = mu + &delta_l;
    for a in &datum.delta_l_pos {
        dim = dim * shifted.dot(a) / delta_l.dot(a);
    }
    let dim = expect_int(&dim);
    assert!(dim.is_positive());
    dim
}

/// Total dimension of the a-invariant degree-1 cohomology of the adjoint.
pub fn adjoint_h1_a_dim(datum: &RankOneDatum) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for mu in adjoint_h1_a(datum)? {
        total += weyl_dim_l(datum, &mu);
    }
    Ok(total)
}

/// Summand counts per degree for the adjoint highest weight(s), plus the
/// coset-count identity sum_r #summands(r) = |W| / |W_l|, asserted here.
pub fn euler_degree_counts(datum: &RankOneDatum) -> Result<Vec<usize>> {
    let max_len = datum.roots.positive.len();
    let mut counts = vec![0usize; max_len + 1];
    for hw in &datum.adjoint_hw {
        for r in 0..=max_len {
            counts[r] += kostant_cohomology(datum, hw, r)?.summands.len();
        }
    }
    let w_order = datum.weyl_group().len();
    let l_order = reflection_subgroup_order(&datum.delta_l_pos, datum.roots.ambient);
    let total: usize = counts.iter().sum();
    let per_module = w_order / l_order;
    assert_eq!(w_order % l_order, 0);
    assert_eq!(
        total,
        per_module * datum.adjoint_hw.len(),
        "coset count identity failed for {}",
        datum.id
    );
    Ok(counts)
}

/// One scanned Weyl element in an orbit report.
#[derive(Clone, Debug)]
pub struct ScanHit {
    pub word: Vec<usize>,
    pub mu: Weight,
    pub l_dominant: bool,
    pub orthogonal: bool,
}

/// Exhaustive orbit scan for one source weight lambda: every w in the full
/// group, mu = w(lambda - delta) - delta.
fn scan_orbit(datum: &RankOneDatum, lambda: &Weight) -> Vec<ScanHit> {
    let shifted = lambda - &datum.delta;
    datum
        .weyl_group()
        .iter()
        .map(|w| {
            let mu = &w.apply(&shifted) - &datum.delta;
            let l_dominant = is_dominant(&mu, &datum.delta_l_pos);
            let orthogonal = orthogonal_to_a(datum, &mu);
            ScanHit { word: w.word.clone(), mu, l_dominant, orthogonal }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub algebra: crate::catalog::AlgebraId,
    /// (lambda, all scanned elements) for each non-g-lowest l-lowest weight.
    pub per_lambda: Vec<(Weight, Vec<ScanHit>)>,
    /// Hits that are both l-dominant and orthogonal; must be empty.
    pub counterexamples: Vec<(Weight, ScanHit)>,
}

impl OrthogonalityReport {
    pub fn passes(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For each l-lowest weight of n_- that is not a g-lowest weight of g, scan
/// the whole group; any l-dominant, a*-orthogonal image is a counterexample.
pub fn non_lowest_orthogonality_scan(datum: &RankOneDatum) -> OrthogonalityReport {
    let ll = datum.l_lowest_weights_of_n_minus();
    let mut per_lambda = Vec::new();
    let mut counterexamples = Vec::new();
    for lambda in &ll.non_g_lowest {
        let hits = scan_orbit(datum, lambda);
        for h in &hits {
            if h.l_dominant && h.orthogonal {
                counterexamples.push((lambda.clone(), h.clone()));
            }
        }
        per_lambda.push((lambda.clone(), hits));
    }
    OrthogonalityReport { algebra: datum.id, per_lambda, counterexamples }
}

#[derive(Clone, Debug)]
pub struct LowestOrbitEntry {
    pub lambda: Weight,
    /// Qualifying mu (l-dominant and a*-orthogonal) with witness words, as a
    /// multiset sorted by mu.
    pub qualifying: Vec<(Weight, Vec<usize>)>,
    /// Qualifying mu that fail strict l-dominance (the weak/strict boundary).
    pub strict_boundary: Vec<Weight>,
}

#[derive(Clone, Debug)]
pub struct LowestOrbitScan {
    pub algebra: crate::catalog::AlgebraId,
    pub entries: Vec<LowestOrbitEntry>,
}

impl LowestOrbitScan {
    /// All qualifying mu across source weights, sorted multiset.
    pub fn all_mus(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> =
            self.entries.iter().flat_map(|e| e.qualifying.iter().map(|(m, _)| m.clone())).collect();
        out.sort();
        out
    }
}

/// For the g-lowest weight(s) of g, enumerate the full group and keep the
/// l-dominant, a*-orthogonal images of lambda - delta, shifted back by
/// delta. These are the only candidate invariant summand weights for any
/// module sharing the adjoint's lowest infinitesimal character.
pub fn lowest_orbit_scan(datum: &RankOneDatum) -> LowestOrbitScan {
    let ll = datum.l_lowest_weights_of_n_minus();
    let mut entries = Vec::new();
    for lambda in &ll.g_lowest {
        let mut qualifying = Vec::new();
        let mut strict_boundary = Vec::new();
        for h in scan_orbit(datum, lambda) {
            if h.l_dominant && h.orthogonal {
                if !is_strictly_dominant(&h.mu, &datum.delta_l_pos) {
                    strict_boundary.push(h.mu.clone());
                }
                qualifying.push((h.mu, h.word));
            }
        }
        qualifying.sort_by(|a, b| a.0.cmp(&b.0));
        strict_boundary.sort();
        strict_boundary.dedup();
        entries.push(LowestOrbitEntry { lambda: lambda.clone(), qualifying, strict_boundary });
    }
    LowestOrbitScan { algebra: datum.id, entries }
}

/// Two infinitesimal characters agree exactly when the evaluation weights
/// share a full Weyl orbit.
pub fn infinitesimal_character_match(datum: &RankOneDatum, chi1: &Weight, chi2: &Weight) -> bool {
    datum.roots.same_w_orbit(chi1, chi2)
}
