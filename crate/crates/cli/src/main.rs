//! Command-line surface: exact JSON documents for the catalog and the
//! cohomology listings, the named verification suites with a human table,
//! and the rigidity report. Every rational in the JSON output is a "p/q"
//! string; weights are arrays of such strings.
//!
//! Exit codes: 0 on success, 1 on a verification failure, 2 on invalid
//! input (including argument errors).

use clap::{Parser, Subcommand};
use rankone_core::catalog::{AlgebraId, Family, RankOneDatum};
use rankone_core::chevalley::ChevalleyAlgebra;
use rankone_core::verify::{self, Status, Suite, SuiteOptions, SuiteReport};
use rankone_core::weight::Weight;
use rankone_core::{ce, kostant, Error};
use serde::{Deserialize, Serialize};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rankone", about = "Exact verification lab for rank-one parabolic geometry")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root-space data for one algebra as a JSON document.
    Catalog { algebra: String },
    /// Highest-weight summands of the nilradical cohomology of the adjoint.
    Kostant {
        algebra: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Keep only the a*-orthogonal summand weights in `mus`.
        #[arg(long)]
        a_invariant: bool,
    },
    /// Cochain-rank cohomology dimensions, cross-checked in degree one.
    Ce {
        algebra: String,
        #[arg(long, default_value_t = 1)]
        degree: u8,
        /// Restrict to the weight-zero slice of the complex.
        #[arg(long)]
        a_invariant: bool,
    },
    /// Run named verification suites: a human table plus a JSON report.
    #[command(after_help = "The f4 lambda cell honors RANKONE_F4_LAMBDA_MEM_MB (MiB, default 512).")]
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated algebra ids; default is each check's full range.
        #[arg(long, value_delimiter = ',')]
        algebras: Option<Vec<String>>,
        /// Worker threads; 0 uses the default pool.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Dilation weight for the lattice-group suite.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(2..=46340))]
        k: i64,
        /// Run the gated f4 polynomial-realization cell.
        #[arg(long)]
        enable_f4_lambda: bool,
    },
    /// Rigidity verdict table over the catalog range.
    Report,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct CatalogDoc {
    algebra: AlgebraId,
    real_form: String,
    ambient_rank: usize,
    dim_g: usize,
    dim_n: usize,
    /// All roots, sorted; `grades` is the parallel list of a-grades.
    roots: Vec<Weight>,
    grades: Vec<i64>,
    delta_n: Vec<Weight>,
    delta_l: Vec<Weight>,
    a_star: Weight,
    delta: Weight,
    adjoint_highest_weights: Vec<Weight>,
}

fn catalog_doc(id: AlgebraId) -> rankone_core::Result<CatalogDoc> {
    let d = RankOneDatum::new(id)?;
    let mut roots: Vec<Weight> = d.roots.positive.clone();
    roots.extend(d.roots.positive.iter().map(|w| -w));
    roots.sort();
    let grades = roots.iter().map(|a| d.grade_of(a)).collect();
    let mut delta_l: Vec<Weight> = d.delta_l_pos.clone();
    delta_l.extend(d.delta_l_pos.iter().map(|w| -w));
    delta_l.sort();
    Ok(CatalogDoc {
        algebra: id,
        real_form: id.real_form(),
        ambient_rank: d.roots.ambient_rank(),
        dim_g: d.dim_g(),
        dim_n: d.dim_n(),
        roots,
        grades,
        delta_n: d.delta_n.clone(),
        delta_l,
        a_star: d.a_star.clone(),
        delta: d.delta.clone(),
        adjoint_highest_weights: d.adjoint_hw.clone(),
    })
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct SummandDoc {
    mu: Weight,
    display: String,
    word: Vec<usize>,
    length: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct ModuleDoc {
    lambda: Weight,
    summands: Vec<SummandDoc>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct KostantDoc {
    algebra: AlgebraId,
    degree: usize,
    a_invariant: bool,
    /// Full decomposition per adjoint summand, unfiltered.
    modules: Vec<ModuleDoc>,
    /// Flattened summand weights, a*-filtered when the flag is set.
    mus: Vec<Weight>,
    mus_display: Vec<String>,
}

fn kostant_doc(id: AlgebraId, degree: usize, a_invariant: bool) -> rankone_core::Result<KostantDoc> {
    let d = RankOneDatum::new(id)?;
    let mut modules = Vec::new();
    let mut mus = Vec::new();
    for hw in &d.adjoint_hw {
        let res = kostant::kostant_cohomology(&d, hw, degree)?;
        let listed = if a_invariant {
            kostant::a_invariant_filter(&d, &res.mus())
        } else {
            res.mus()
        };
        mus.extend(listed);
        modules.push(ModuleDoc {
            lambda: hw.clone(),
            summands: res
                .summands
                .iter()
                .map(|s| SummandDoc {
                    mu: s.mu.clone(),
                    display: s.mu.to_string(),
                    word: s.word.clone(),
                    length: s.length,
                })
                .collect(),
        });
    }
    mus.sort();
    let mus_display = mus.iter().map(|m| m.to_string()).collect();
    Ok(KostantDoc { algebra: id, degree, a_invariant, modules, mus, mus_display })
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct CeDoc {
    algebra: AlgebraId,
    degree: u8,
    a_invariant: bool,
    dimension: usize,
    a_invariant_dimension: usize,
    /// Independent highest-weight total, present in degree one.
    kostant_cross_check: Option<usize>,
}

fn ce_doc(id: AlgebraId, degree: u8, a_invariant: bool) -> rankone_core::Result<CeDoc> {
    let alg = ChevalleyAlgebra::new(id)?;
    let n = ce::n_algebra(&alg);
    let v = ce::adjoint_module(&alg);
    let res = ce::ce_h(&n, &v, degree, a_invariant)?;
    let kostant_cross_check = if degree == 1 {
        Some(ce::cross_check_with(&alg)?.kostant_dim)
    } else {
        None
    };
    Ok(CeDoc {
        algebra: id,
        degree,
        a_invariant,
        dimension: res.dimension,
        a_invariant_dimension: res.a_invariant_dimension,
        kostant_cross_check,
    })
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct ReportRow {
    algebra: AlgebraId,
    real_form: String,
    h1_a_dim: usize,
    verdict: String,
    expected: String,
    matches: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct ReportDoc {
    rows: Vec<ReportRow>,
    pass: bool,
}

fn report_doc() -> rankone_core::Result<ReportDoc> {
    let mut rows = Vec::new();
    for id in verify::catalog_range() {
        let r = ce::rigidity_verdict(id)?;
        let verdict = match r.verdict {
            ce::Verdict::Rigid => "rigid",
            ce::Verdict::NonRigid => "non-rigid",
        };
        let expected =
            if matches!(id.family, Family::Sp | Family::F4) { "rigid" } else { "non-rigid" };
        rows.push(ReportRow {
            algebra: id,
            real_form: r.real_form,
            h1_a_dim: r.h1_a_dim,
            verdict: verdict.to_string(),
            expected: expected.to_string(),
            matches: verdict == expected,
        });
    }
    let pass = rows.iter().all(|r| r.matches);
    Ok(ReportDoc { rows, pass })
}

fn print_suite_table(rep: &SuiteReport) {
    println!(
        "{:<7} {:<28} {:<6} {:>6}  {}",
        "status", "check", "alg", "ms", "computed"
    );
    let mut counts = [0usize; 4];
    for r in &rep.rows {
        let mut line = format!(
            "{:<7} {:<28} {:<6} {:>6}  {}",
            r.status.label(),
            r.check,
            r.algebra.to_string(),
            r.elapsed_ms,
            r.computed
        );
        if matches!(r.status, Status::Fail | Status::Warn) {
            line.push_str(&format!("  [expected: {}]", r.expected));
        }
        println!("{}", line);
        counts[match r.status {
            Status::Pass => 0,
            Status::Warn => 1,
            Status::Skipped => 2,
            Status::Fail => 3,
        }] += 1;
    }
    println!(
        "overall: {} ({} checks: {} pass, {} warn, {} skipped, {} fail)",
        if rep.pass { "pass" } else { "fail" },
        rep.rows.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    );
}

fn print_report_table(doc: &ReportDoc) {
    println!("{:<10} {:<6} {:>14}  {}", "real form", "alg", "dim H1(n,g)^a", "verdict");
    for r in &doc.rows {
        println!(
            "{:<10} {:<6} {:>14}  {}{}",
            r.real_form,
            r.algebra.to_string(),
            r.h1_a_dim,
            r.verdict,
            if r.matches { String::new() } else { format!("  [expected: {}]", r.expected) }
        );
    }
    println!("overall: {}", if doc.pass { "pass" } else { "fail" });
}

fn emit<T: Serialize>(doc: &T) {
    println!("{}", serde_json::to_string_pretty(doc).expect("document serializes"));
}

fn run(cli: Cli) -> rankone_core::Result<ExitCode> {
    match cli.cmd {
        Cmd::Catalog { algebra } => {
            emit(&catalog_doc(AlgebraId::parse(&algebra)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Kostant { algebra, degree, a_invariant } => {
            emit(&kostant_doc(AlgebraId::parse(&algebra)?, degree, a_invariant)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Ce { algebra, degree, a_invariant } => {
            emit(&ce_doc(AlgebraId::parse(&algebra)?, degree, a_invariant)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, algebras, jobs, k, enable_f4_lambda } => {
            let suite = Suite::parse(&suite)?;
            let algebras = match algebras {
                None => None,
                Some(list) => {
                    let parsed: rankone_core::Result<Vec<AlgebraId>> =
                        list.iter().map(|s| AlgebraId::parse(s)).collect();
                    Some(parsed?)
                }
            };
            let opts = SuiteOptions { algebras, jobs, k, enable_f4_lambda };
            let rep = verify::run(&[suite], &opts)?;
            print_suite_table(&rep);
            println!();
            emit(&rep);
            Ok(if rep.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Report => {
            let doc = report_doc()?;
            print_report_table(&doc);
            println!();
            emit(&doc);
            Ok(if doc.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::InvalidInput(_) => ExitCode::from(2),
                Error::Verification(_) => ExitCode::from(1),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documents_round_trip_through_json() {
        let cat = catalog_doc(AlgebraId::parse("so:5").unwrap()).unwrap();
        let j = serde_json::to_string(&cat).unwrap();
        assert_eq!(serde_json::from_str::<CatalogDoc>(&j).unwrap(), cat);

        let kos = kostant_doc(AlgebraId::parse("sl:4").unwrap(), 1, true).unwrap();
        let j = serde_json::to_string(&kos).unwrap();
        assert_eq!(serde_json::from_str::<KostantDoc>(&j).unwrap(), kos);

        let ced = ce_doc(AlgebraId::parse("sl:3").unwrap(), 1, true).unwrap();
        let j = serde_json::to_string(&ced).unwrap();
        assert_eq!(serde_json::from_str::<CeDoc>(&j).unwrap(), ced);
        assert_eq!(ced.kostant_cross_check, Some(ced.dimension));
    }

    #[test]
    fn catalog_counts_and_filters() {
        let f4 = catalog_doc(AlgebraId::parse("f4").unwrap()).unwrap();
        assert_eq!(f4.roots.len(), 48);
        assert_eq!(f4.grades.len(), 48);
        assert_eq!(f4.delta_n.len(), 15);
        let sl3 = catalog_doc(AlgebraId::parse("sl:3").unwrap()).unwrap();
        assert!(sl3.delta_l.is_empty());
    }

    #[test]
    fn kostant_doc_matches_the_listed_examples() {
        let sp6 = kostant_doc(AlgebraId::parse("sp:6").unwrap(), 1, true).unwrap();
        assert!(sp6.mus.is_empty());

        let so6 = kostant_doc(AlgebraId::parse("so:6").unwrap(), 0, false).unwrap();
        assert_eq!(so6.mus, vec![Weight::from_ints(&[1, 1, 0])]);

        let sl4 = kostant_doc(AlgebraId::parse("sl:4").unwrap(), 1, true).unwrap();
        assert_eq!(
            sl4.mus,
            vec![Weight::from_ints(&[-1, 2, 0, -1]), Weight::from_ints(&[1, 0, -2, 1])]
        );
    }

    #[test]
    fn report_marks_exactly_the_two_rigid_families() {
        let doc = report_doc().unwrap();
        assert!(doc.pass);
        for r in &doc.rows {
            let fam_rigid = r.algebra.to_string().starts_with("sp") || r.real_form == "F4(-20)";
            assert_eq!(r.verdict == "rigid", fam_rigid, "{}", r.algebra);
            assert_eq!(r.verdict == "rigid", r.h1_a_dim == 0, "{}", r.algebra);
        }
        let su21 = doc.rows.iter().find(|r| r.real_form == "SU(2,1)").unwrap();
        assert_eq!(su21.h1_a_dim, 2);
        let su31 = doc.rows.iter().find(|r| r.real_form == "SU(3,1)").unwrap();
        assert_eq!(su31.h1_a_dim, 6);
        let sp31 = doc.rows.iter().find(|r| r.real_form == "Sp(3,1)").unwrap();
        assert_eq!((sp31.verdict.as_str(), sp31.h1_a_dim), ("rigid", 0));
        assert!(doc.rows.iter().any(|r| r.real_form == "SO0(4,1)" && r.verdict == "non-rigid"));
    }
}
