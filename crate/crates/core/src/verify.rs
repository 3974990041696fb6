//! Named verification suites over the catalog. Each suite fans out one
//! task per algebra; a task emits rows carrying the claim under test, the
//! computed value, a status, and timing. Rows are assembled in a canonical
//! order and the report passes exactly when no row fails.
//!
//! Expected values come from three sources: golden tables frozen in the
//! goldens directory (compared as multisets), structural requirements
//! (vanishing, agreement of two independently computed dimensions), and
//! literal table values. One literal value disagrees with the exhaustive
//! enumeration; the enumerated value drives pass/fail and the literal one
//! is carried as a warning row (`kostant/lowest-orbit-stated`), so the
//! discrepancy stays visible without masking regressions.

use crate::bigcell::{jet_module, BigCell};
use crate::catalog::{AlgebraId, Family, RankOneDatum};
use crate::chevalley::ChevalleyAlgebra;
use crate::weight::Weight;
use crate::{ce, gamma, kostant};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Kostant,
    Ce,
    Jets,
    Gamma,
    Lambda,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        match s {
            "kostant" => Ok(Suite::Kostant),
            "ce" => Ok(Suite::Ce),
            "jets" => Ok(Suite::Jets),
            "gamma" => Ok(Suite::Gamma),
            "lambda" => Ok(Suite::Lambda),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidInput(format!(
                "unknown suite '{}'; expected kostant, ce, jets, gamma, lambda, or all",
                s
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kostant => "kostant",
            Suite::Ce => "ce",
            Suite::Jets => "jets",
            Suite::Gamma => "gamma",
            Suite::Lambda => "lambda",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Skipped,
    Fail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Warn => "warn",
            Status::Skipped => "skipped",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRow {
    pub check: String,
    pub algebra: AlgebraId,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub elapsed_ms: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suites: Vec<String>,
    pub rows: Vec<CheckRow>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Restrict to these algebras; None runs each check's full range.
    pub algebras: Option<Vec<AlgebraId>>,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    /// Dilation weight for the lattice-group suite.
    pub k: i64,
    pub enable_f4_lambda: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { algebras: None, jobs: 0, k: 2, enable_f4_lambda: false }
    }
}

const H1_SET: &[&str] = &[
    "so:4", "so:5", "so:6", "so:7", "so:8", "sl:3", "sl:4", "sl:5", "sl:6", "sp:6", "sp:8",
    "sp:10", "f4",
];
const ORTHO_SET: &[&str] = &["sl:3", "sl:4", "sl:5", "sp:6", "sp:8", "f4"];
const CROSS_SET: &[&str] = &["sl:3", "sl:4", "so:5", "so:6", "sp:6", "f4"];
const DERIV_SET: &[&str] = &["sl:3", "sl:4", "sl:5", "sp:6", "f4"];
const JETS_SET: &[&str] = &["sl:3", "so:6", "sp:6"];
const GAMMA_SET: &[&str] = &["sl:3", "sl:4", "so:5", "so:6", "sp:6", "f4"];
const CERT_SET: &[&str] = &["sl:3", "sl:4", "sl:5", "so:5", "so:6", "sp:6", "f4"];
const CENT_SET: &[&str] = &["sl:3", "sl:4", "so:5", "so:6", "sp:6"];
const NORM_SET: &[&str] = &["sl:4", "sl:5"];

static KOSTANT_H1_GOLDEN: &str = include_str!("../goldens/kostant_h1.json");
static LOWEST_ORBIT_GOLDEN: &str = include_str!("../goldens/lowest_orbit.json");

fn golden_table(src: &str) -> BTreeMap<String, Vec<Weight>> {
    serde_json::from_str(src).expect("golden table parses")
}

fn in_set(set: &[&str], id: AlgebraId) -> bool {
    let s = id.to_string();
    set.contains(&s.as_str())
}

fn parse_set(set: &[&str]) -> Vec<AlgebraId> {
    set.iter().map(|s| AlgebraId::parse(s).expect("catalog id")).collect()
}

/// The named range every table-driven check draws from, in catalog order.
pub fn catalog_range() -> Vec<AlgebraId> {
    parse_set(H1_SET)
}

fn weight_set(ws: &[Weight]) -> String {
    let mut sorted = ws.to_vec();
    sorted.sort();
    let inner: Vec<String> = sorted.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn timed(
    check: &str,
    algebra: AlgebraId,
    expected: String,
    f: impl FnOnce() -> Result<(String, Status)>,
) -> CheckRow {
    let t = Instant::now();
    let (computed, status) = match f() {
        Ok(x) => x,
        Err(e) => (format!("error: {}", e), Status::Fail),
    };
    CheckRow { check: check.to_string(), algebra, expected, computed, status, elapsed_ms: ms(t) }
}

fn kostant_cell(id: AlgebraId, _opts: &SuiteOptions) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    let key = id.to_string();
    if let Some(want) = golden_table(KOSTANT_H1_GOLDEN).get(&key) {
        let want = want.clone();
        rows.push(timed("kostant/h1-multiset", id, weight_set(&want), || {
            let d = RankOneDatum::new(id)?;
            let mut got = kostant::adjoint_h1_a(&d)?;
            got.sort();
            let mut want_sorted = want.clone();
            want_sorted.sort();
            Ok((weight_set(&got), pass_if(got == want_sorted)))
        }));
    }
    if in_set(ORTHO_SET, id) {
        rows.push(timed(
            "kostant/orthogonality-scan",
            id,
            "no l-dominant, a*-orthogonal image of any non-lowest source weight".to_string(),
            || {
                let d = RankOneDatum::new(id)?;
                let rep = kostant::non_lowest_orthogonality_scan(&d);
                let scanned: usize = rep.per_lambda.iter().map(|(_, h)| h.len()).sum();
                Ok((
                    format!(
                        "{} counterexamples in {} scanned images over {} sources",
                        rep.counterexamples.len(),
                        scanned,
                        rep.per_lambda.len()
                    ),
                    pass_if(rep.passes()),
                ))
            },
        ));
    }
    if let Some(want) = golden_table(LOWEST_ORBIT_GOLDEN).get(&key) {
        let want = want.clone();
        rows.push(timed("kostant/lowest-orbit", id, weight_set(&want), || {
            let d = RankOneDatum::new(id)?;
            let got = kostant::lowest_orbit_scan(&d).all_mus();
            let mut want_sorted = want.clone();
            want_sorted.sort();
            Ok((weight_set(&got), pass_if(got == want_sorted)))
        }));
    }
    if id.family == Family::F4 {
        let stated = vec![Weight::from_ints(&[0, 4, 1, 1])];
        rows.push(timed(
            "kostant/lowest-orbit-stated",
            id,
            format!("{} (stated table value)", weight_set(&stated)),
            || {
                let d = RankOneDatum::new(id)?;
                let got = kostant::lowest_orbit_scan(&d).all_mus();
                let status = if got == stated { Status::Pass } else { Status::Warn };
                Ok((format!("{} (enumerated)", weight_set(&got)), status))
            },
        ));
    }
    rows
}

fn ce_cell(id: AlgebraId, _opts: &SuiteOptions) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    if in_set(CROSS_SET, id) {
        rows.push(timed(
            "ce/h1-cross-check",
            id,
            "highest-weight dimension total = invariant cochain rank".to_string(),
            || {
                let row = ce::cross_check(id)?;
                Ok((
                    format!("kostant {} = ce {}", row.kostant_dim, row.ce_dim),
                    pass_if(row.passes()),
                ))
            },
        ));
    }
    if in_set(DERIV_SET, id) {
        let claim = match id.family {
            Family::Sl => "dim Der0(n)^a - dim ad(g0) = dim H1(n,g)^a",
            Family::Sp | Family::F4 => "dim Der0(n)^a = dim ad(g0)",
            Family::So => "no claim; dimensions reported",
        };
        rows.push(timed("ce/derivation-codim", id, claim.to_string(), || {
            let alg = ChevalleyAlgebra::new(id)?;
            let rep = ce::derivation_codimension(&alg)?;
            let status = match rep.claim {
                Some(true) | None => Status::Pass,
                Some(false) => Status::Warn,
            };
            Ok((
                format!("der {}, ad {}, h1 {}", rep.der_a_dim, rep.ad_image_dim, rep.h1_dim),
                status,
            ))
        }));
    }
    if in_set(H1_SET, id) {
        let want_rigid = matches!(id.family, Family::Sp | Family::F4);
        let expected = if want_rigid { "rigid (dim H1(n,g)^a = 0)" } else { "non-rigid" };
        rows.push(timed("ce/rigidity", id, expected.to_string(), || {
            let row = ce::rigidity_verdict(id)?;
            let got_rigid = row.verdict == ce::Verdict::Rigid;
            let label = if got_rigid { "rigid" } else { "non-rigid" };
            Ok((
                format!("{} ({}, dim {})", label, row.real_form, row.h1_a_dim),
                pass_if(got_rigid == want_rigid),
            ))
        }));
    }
    rows
}

fn jets_cell(id: AlgebraId, _opts: &SuiteOptions) -> Vec<CheckRow> {
    let claims: [(&str, &str); 4] = [
        ("jets/h0-vanishing", "dim H0(n, j3)^a = 0"),
        ("jets/transfer", "dim H1(n, j3)^a = dim H1(n, p)^a"),
        ("jets/ambient-agreement", "dim H1(n, p)^a = dim H1(n, g)^a"),
        ("jets/stabilization", "dim H1(n, j4)^a = dim H1(n, g)^a"),
    ];
    let run = || -> Result<Vec<CheckRow>> {
        let mut rows = Vec::new();
        let t = Instant::now();
        let cell = BigCell::new(ChevalleyAlgebra::new(id)?)?;
        let n = ce::n_algebra(&cell.alg);
        let vj3 = ce::jet_nmodule(&jet_module(&cell, 3));
        let h0_j3 = ce::ce_h(&n, &vj3, 0, true)?.a_invariant_dimension;
        rows.push(CheckRow {
            check: claims[0].0.to_string(),
            algebra: id,
            expected: claims[0].1.to_string(),
            computed: format!("dim {}", h0_j3),
            status: pass_if(h0_j3 == 0),
            elapsed_ms: ms(t),
        });

        let t = Instant::now();
        let h1_j3 = ce::ce_h(&n, &vj3, 1, true)?.a_invariant_dimension;
        let vp = ce::p_module(&cell.alg);
        let h1_p = ce::ce_h(&n, &vp, 1, true)?.a_invariant_dimension;
        rows.push(CheckRow {
            check: claims[1].0.to_string(),
            algebra: id,
            expected: claims[1].1.to_string(),
            computed: format!("j3 {}, p {}", h1_j3, h1_p),
            status: pass_if(h1_j3 == h1_p),
            elapsed_ms: ms(t),
        });

        let t = Instant::now();
        let vg = ce::adjoint_module(&cell.alg);
        let h1_g = ce::ce_h(&n, &vg, 1, true)?.a_invariant_dimension;
        rows.push(CheckRow {
            check: claims[2].0.to_string(),
            algebra: id,
            expected: claims[2].1.to_string(),
            computed: format!("p {}, g {}", h1_p, h1_g),
            status: pass_if(h1_p == h1_g),
            elapsed_ms: ms(t),
        });

        let t = Instant::now();
        let vj4 = ce::jet_nmodule(&jet_module(&cell, 4));
        let h1_j4 = ce::ce_h(&n, &vj4, 1, true)?.a_invariant_dimension;
        rows.push(CheckRow {
            check: claims[3].0.to_string(),
            algebra: id,
            expected: claims[3].1.to_string(),
            computed: format!("j4 {}, g {}", h1_j4, h1_g),
            status: pass_if(h1_j4 == h1_g),
            elapsed_ms: ms(t),
        });
        Ok(rows)
    };
    match run() {
        Ok(rows) => rows,
        Err(e) => claims
            .iter()
            .map(|(c, exp)| CheckRow {
                check: c.to_string(),
                algebra: id,
                expected: exp.to_string(),
                computed: format!("error: {}", e),
                status: Status::Fail,
                elapsed_ms: 0,
            })
            .collect(),
    }
}

fn gamma_cell(id: AlgebraId, opts: &SuiteOptions) -> Vec<CheckRow> {
    let k = opts.k;
    vec![
        timed("gamma/gmodp-h1", id, format!("H0 = H1 = 0 at k = {}", k), || {
            let rep = gamma::adjoint_gmodp_cohomology(id, k)?;
            Ok((
                format!("dim {}: h0 {}, h1 {}", rep.dim, rep.h0, rep.h1),
                pass_if(rep.h0 == 0 && rep.h1 == 0),
            ))
        }),
        timed(
            "gamma/scalar-scan",
            id,
            format!("H0 = H1 = 0 off s in {{1, {}, {}}}; exceptional values reported", k, k * k),
            || {
                let alg = ChevalleyAlgebra::new(id)?;
                let pres = gamma::build_presentation(&alg, k)?;
                let scan = gamma::scalar_action_scan(&pres)?;
                let parts: Vec<String> = scan
                    .rows
                    .iter()
                    .filter(|r| r.exceptional)
                    .map(|r| format!("s={}: ({}, {})", r.s, r.h0, r.h1))
                    .collect();
                Ok((parts.join("; "), Status::Pass))
            },
        ),
    ]
}

fn lambda_cell(id: AlgebraId, opts: &SuiteOptions) -> Vec<CheckRow> {
    let cert_claim = "bracket-preserving, graded dilation, degree <= 4, injective";
    let mut rows = Vec::new();
    if id.family == Family::F4 && !opts.enable_f4_lambda {
        rows.push(CheckRow {
            check: "lambda/certificate".to_string(),
            algebra: id,
            expected: cert_claim.to_string(),
            computed: "skipped: disabled by default; enable the f4 gate to run".to_string(),
            status: Status::Skipped,
            elapsed_ms: 0,
        });
        return rows;
    }
    let t = Instant::now();
    let built = ChevalleyAlgebra::new(id).and_then(BigCell::new);
    let cell = match built {
        Ok(cell) => {
            rows.push(CheckRow {
                check: "lambda/certificate".to_string(),
                algebra: id,
                expected: cert_claim.to_string(),
                computed: "certified on all basis pairs".to_string(),
                status: Status::Pass,
                elapsed_ms: ms(t),
            });
            cell
        }
        Err(e) => {
            let capped = matches!(&e, Error::Verification(m) if m.contains("memory budget"));
            let status = if capped { Status::Skipped } else { Status::Fail };
            let computed =
                if capped { format!("skipped: {}", e) } else { format!("error: {}", e) };
            rows.push(CheckRow {
                check: "lambda/certificate".to_string(),
                algebra: id,
                expected: cert_claim.to_string(),
                computed,
                status,
                elapsed_ms: ms(t),
            });
            return rows;
        }
    };
    if in_set(CENT_SET, id) {
        let dim_nm = cell.alg.datum.dim_n();
        let (_, g2) = cell.alg.datum.graded_root_counts();
        rows.push(timed(
            "lambda/centralizer",
            id,
            format!(
                "dim {} with negative a-weights, bracket-closed, derived dim {}",
                dim_nm, g2
            ),
            || {
                let rep = cell.centralizer_n_minus(2);
                let neg = rep.a_weights.iter().all(|w| *w < 0);
                let ok =
                    rep.dim == dim_nm && neg && rep.bracket_closed && rep.derived_dim == g2;
                let m1 = rep.a_weights.iter().filter(|w| **w == -1).count();
                let m2 = rep.a_weights.iter().filter(|w| **w == -2).count();
                Ok((
                    format!(
                        "dim {} ({} at weight -1, {} at weight -2), derived dim {}",
                        rep.dim, m1, m2, rep.derived_dim
                    ),
                    pass_if(ok),
                ))
            },
        ));
    }
    if in_set(NORM_SET, id) {
        rows.push(timed(
            "lambda/normalizer",
            id,
            "a-centralizing normalizer inside weight-0 fields = image of g0".to_string(),
            || {
                let rep = cell.weight_zero_normalizer();
                Ok((
                    format!(
                        "solution dim {}, g0 dim {}, contains {}, equals {}",
                        rep.solution_dim, rep.g0_dim, rep.contains_g0, rep.equals_g0
                    ),
                    pass_if(rep.contains_g0 && rep.equals_g0),
                ))
            },
        ));
    }
    rows
}

fn cell_rows(suite: Suite, id: AlgebraId, opts: &SuiteOptions) -> Vec<CheckRow> {
    match suite {
        Suite::Kostant => kostant_cell(id, opts),
        Suite::Ce => ce_cell(id, opts),
        Suite::Jets => jets_cell(id, opts),
        Suite::Gamma => gamma_cell(id, opts),
        Suite::Lambda => lambda_cell(id, opts),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

fn suite_supported(suite: Suite) -> Vec<AlgebraId> {
    match suite {
        Suite::Kostant | Suite::Ce => parse_set(H1_SET),
        Suite::Jets => parse_set(JETS_SET),
        Suite::Gamma => parse_set(GAMMA_SET),
        Suite::Lambda => parse_set(CERT_SET),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

fn expand(suites: &[Suite]) -> Vec<Suite> {
    let order = [Suite::Kostant, Suite::Ce, Suite::Jets, Suite::Gamma, Suite::Lambda];
    if suites.contains(&Suite::All) {
        return order.to_vec();
    }
    order.iter().copied().filter(|s| suites.contains(s)).collect()
}

pub fn run(suites: &[Suite], opts: &SuiteOptions) -> Result<SuiteReport> {
    let selected = expand(suites);
    let mut tasks: Vec<(Suite, AlgebraId)> = Vec::new();
    for &s in &selected {
        for a in suite_supported(s) {
            let wanted = match &opts.algebras {
                None => true,
                Some(req) => req.contains(&a),
            };
            if wanted {
                tasks.push((s, a));
            }
        }
    }
    let work = || {
        tasks
            .par_iter()
            .map(|&(s, a)| cell_rows(s, a, opts))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect::<Vec<CheckRow>>()
    };
    let mut rows = if opts.jobs == 0 {
        work()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot build a {}-thread pool: {}", opts.jobs, e)))?;
        pool.install(work)
    };
    rows.sort_by(|x, y| (x.check.as_str(), x.algebra).cmp(&(y.check.as_str(), y.algebra)));
    let pass = !rows.iter().any(|r| r.status == Status::Fail);
    Ok(SuiteReport {
        suites: selected.iter().map(|s| s.name().to_string()).collect(),
        rows,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(list: &[&str]) -> Vec<AlgebraId> {
        parse_set(list)
    }

    fn shape(report: &SuiteReport) -> Vec<(String, String, Status)> {
        report
            .rows
            .iter()
            .map(|r| (r.check.clone(), r.algebra.to_string(), r.status))
            .collect()
    }

    #[test]
    fn suite_names_parse() {
        for s in ["kostant", "ce", "jets", "gamma", "lambda", "all"] {
            assert_eq!(Suite::parse(s).unwrap().name(), s);
        }
        assert!(Suite::parse("weyl").is_err());
        assert_eq!(expand(&[Suite::All]), expand(&[
            Suite::Lambda,
            Suite::Gamma,
            Suite::Jets,
            Suite::Ce,
            Suite::Kostant
        ]));
    }

    #[test]
    fn kostant_suite_is_green_with_one_warning() {
        let rep = run(&[Suite::Kostant], &SuiteOptions::default()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.rows.len(), 13 + 6 + 11 + 1);
        let warns: Vec<_> =
            rep.rows.iter().filter(|r| r.status == Status::Warn).collect();
        assert_eq!(warns.len(), 1);
        assert_eq!(warns[0].check, "kostant/lowest-orbit-stated");
        assert!(warns[0].computed.contains("4e2+2e3"));
        assert!(rep.rows.iter().all(|r| r.status != Status::Fail));
        let mut sorted = rep.rows.clone();
        sorted.sort_by(|x, y| (x.check.as_str(), x.algebra).cmp(&(y.check.as_str(), y.algebra)));
        assert_eq!(rep.rows, sorted);
    }

    #[test]
    fn ce_suite_is_green() {
        let rep = run(&[Suite::Ce], &SuiteOptions::default()).unwrap();
        assert!(rep.pass, "{:?}", shape(&rep));
        assert_eq!(rep.rows.len(), 6 + 5 + 13);
        assert!(rep.rows.iter().all(|r| r.status == Status::Pass), "{:?}", shape(&rep));
        let rigid: Vec<_> = rep
            .rows
            .iter()
            .filter(|r| r.check == "ce/rigidity" && r.computed.starts_with("rigid"))
            .map(|r| r.algebra.to_string())
            .collect();
        assert_eq!(rigid, vec!["sp:6", "sp:8", "sp:10", "f4"]);
    }

    #[test]
    fn jets_suite_reports_the_transfer_defect() {
        let rep = run(&[Suite::Jets], &SuiteOptions::default()).unwrap();
        assert!(!rep.pass);
        let fails: Vec<_> = rep.rows.iter().filter(|r| r.status == Status::Fail).collect();
        assert_eq!(fails.len(), 1, "{:?}", shape(&rep));
        assert_eq!(fails[0].check, "jets/transfer");
        assert_eq!(fails[0].algebra.to_string(), "sl:3");
        assert_eq!(fails[0].computed, "j3 5, p 2");
        assert_eq!(rep.rows.len(), 12);
        for r in &rep.rows {
            if r.check != "jets/transfer" || r.algebra.to_string() != "sl:3" {
                assert_eq!(r.status, Status::Pass, "{} {}", r.check, r.algebra);
            }
        }
    }

    #[test]
    fn gamma_suite_is_green_and_deterministic_across_pools() {
        let one = run(&[Suite::Gamma], &SuiteOptions { jobs: 1, ..Default::default() }).unwrap();
        let many = run(&[Suite::Gamma], &SuiteOptions { jobs: 3, ..Default::default() }).unwrap();
        assert!(one.pass);
        assert_eq!(one.rows.len(), 12);
        assert_eq!(shape(&one), shape(&many));
        for (a, b) in one.rows.iter().zip(&many.rows) {
            assert_eq!((&a.expected, &a.computed), (&b.expected, &b.computed));
        }
    }

    #[test]
    fn lambda_suite_gates_the_f4_cell() {
        let rep = run(&[Suite::Lambda], &SuiteOptions::default()).unwrap();
        assert!(rep.pass, "{:?}", shape(&rep));
        assert_eq!(rep.rows.len(), 7 + 5 + 2);
        let f4: Vec<_> =
            rep.rows.iter().filter(|r| r.algebra.to_string() == "f4").collect();
        assert_eq!(f4.len(), 1);
        assert_eq!(f4[0].status, Status::Skipped);
        assert!(
            rep.rows
                .iter()
                .filter(|r| r.algebra.to_string() != "f4")
                .all(|r| r.status == Status::Pass),
            "{:?}",
            shape(&rep)
        );
    }

    #[test]
    fn algebra_restriction_filters_rows() {
        let opts = SuiteOptions { algebras: Some(ids(&["f4"])), ..Default::default() };
        let rep = run(&[Suite::Kostant], &opts).unwrap();
        assert_eq!(rep.rows.len(), 4);
        assert!(rep.rows.iter().all(|r| r.algebra.to_string() == "f4"));
        assert!(rep.pass);

        let opts = SuiteOptions { algebras: Some(ids(&["so:8"])), ..Default::default() };
        let rep = run(&[Suite::Gamma], &opts).unwrap();
        assert!(rep.rows.is_empty());
        assert!(rep.pass);
    }

    #[test]
    fn report_json_round_trips() {
        let rep = SuiteReport {
            suites: vec!["gamma".to_string()],
            rows: vec![CheckRow {
                check: "gamma/gmodp-h1".to_string(),
                algebra: AlgebraId::parse("sl:3").unwrap(),
                expected: "H0 = H1 = 0 at k = 2".to_string(),
                computed: "dim 3: h0 0, h1 0".to_string(),
                status: Status::Pass,
                elapsed_ms: 7,
            }],
            pass: true,
        };
        let j = serde_json::to_string(&rep).unwrap();
        assert!(j.contains("\"status\":\"pass\""));
        let back: SuiteReport = serde_json::from_str(&j).unwrap();
        assert_eq!(back, rep);
    }
}
