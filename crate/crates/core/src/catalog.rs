//! The catalog of complexified rank-one data: for each algebra, the root
//! system, the one-dimensional split piece a, the parabolic decomposition
//! Delta(n) / Delta(l), grades, and the adjoint highest weight(s).

use crate::rat::q;
use crate::roots::RootSystemData;
use crate::weight::Weight;
use crate::weyl::{weyl_group, WeylElement};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::fmt;
use std::sync::OnceLock;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    So,
    Sl,
    Sp,
    F4,
}

/// Identifier in the grammar `so:<m> | sl:<n> | sp:<2n> | f4`, where m, n,
/// 2n are the defining sizes (so:m needs m >= 4, sl:n needs n >= 3, sp:2n
/// needs 2n >= 6 and even).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AlgebraId {
    pub family: Family,
    pub size: usize,
}

impl AlgebraId {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "f4" {
            return Ok(AlgebraId { family: Family::F4, size: 4 });
        }
        let (fam, num) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(format!("bad algebra id '{}'", s)))?;
        let size: usize = num
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad size in algebra id '{}'", s)))?;
        let id = match fam {
            "so" => AlgebraId { family: Family::So, size },
            "sl" => AlgebraId { family: Family::Sl, size },
            "sp" => AlgebraId { family: Family::Sp, size },
            _ => return Err(Error::InvalidInput(format!("unknown family '{}'", fam))),
        };
        match id.family {
            Family::So if size < 4 => {
                return Err(Error::InvalidInput(format!("so:{} below validity bound so:4", size)))
            }
            Family::Sl if size < 3 => {
                return Err(Error::InvalidInput(format!("sl:{} below validity bound sl:3", size)))
            }
            Family::Sp if size < 6 || size % 2 != 0 => {
                return Err(Error::InvalidInput(format!(
                    "sp:{} must be an even size of at least 6",
                    size
                )))
            }
            _ => {}
        }
        Ok(id)
    }

    /// The real rank-one group this complexification came from.
    pub fn real_form(&self) -> String {
        match self.family {
            Family::So => format!("SO0({},1)", self.size - 1),
            Family::Sl => format!("SU({},1)", self.size - 1),
            Family::Sp => format!("Sp({},1)", self.size / 2 - 1),
            Family::F4 => "F4(-20)".to_string(),
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::So => write!(f, "so:{}", self.size),
            Family::Sl => write!(f, "sl:{}", self.size),
            Family::Sp => write!(f, "sp:{}", self.size),
            Family::F4 => write!(f, "f4"),
        }
    }
}

impl serde::Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for AlgebraId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        AlgebraId::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Everything downstream computations need about one catalog entry.
#[derive(Clone, Debug)]
pub struct RankOneDatum {
    pub id: AlgebraId,
    pub roots: RootSystemData,
    /// Positive roots with positive a-pairing, i.e. Delta(n).
    pub delta_n: Vec<Weight>,
    /// Positive roots orthogonal to a*, i.e. Delta+(l).
    pub delta_l_pos: Vec<Weight>,
    pub a_star: Weight,
    pub delta: Weight,
    /// Highest weight of g as a g-module; two entries exactly for so:4,
    /// whose adjoint splits into two ideals.
    pub adjoint_hw: Vec<Weight>,
    pub is_simple: bool,
    weyl: OnceLock<Vec<WeylElement>>,
}

/// l-lowest weights of n_-, split by whether the weight is also a g-lowest
/// weight of g (i.e. the negative of an adjoint highest weight).
#[derive(Clone, Debug)]
pub struct LLowestWeights {
    pub g_lowest: Vec<Weight>,
    pub non_g_lowest: Vec<Weight>,
}

impl RankOneDatum {
    pub fn new(id: AlgebraId) -> Result<Self> {
        let roots = match id.family {
            Family::So if id.size % 2 == 1 => RootSystemData::so_odd(id.size / 2),
            Family::So => RootSystemData::so_even(id.size / 2),
            Family::Sl => RootSystemData::sl(id.size),
            Family::Sp => RootSystemData::sp(id.size / 2),
            Family::F4 => RootSystemData::f4(),
        };
        let dim = roots.ambient;
        let e = |i: usize| Weight::e(i, dim);
        let a_star = match id.family {
            Family::So | Family::F4 => e(1),
            Family::Sl => &e(1) - &e(dim),
            Family::Sp => &e(1) + &e(2),
        };
        let mut delta_n = Vec::new();
        let mut delta_l_pos = Vec::new();
        for p in &roots.positive {
            let pairing = p.dot(&a_star);
            assert!(!pairing.is_negative(), "positive root {} pairs negatively with a*", p);
            if pairing.is_zero() {
                delta_l_pos.push(p.clone());
            } else {
                delta_n.push(p.clone());
            }
        }
        let delta = roots.delta();
        // Highest roots: positive roots that stay extreme under every simple
        // root. One for a simple algebra, two for the so:4 direct sum.
        let adjoint_hw: Vec<Weight> = roots
            .positive
            .iter()
            .filter(|p| roots.simple.iter().all(|s| !roots.is_root(&(*p + s))))
            .cloned()
            .collect();
        let is_simple = adjoint_hw.len() == 1;
        let datum = RankOneDatum {
            id,
            roots,
            delta_n,
            delta_l_pos,
            a_star,
            delta,
            adjoint_hw,
            is_simple,
            weyl: OnceLock::new(),
        };
        datum.check();
        Ok(datum)
    }

    fn check(&self) {
        let two_sided = self.id == AlgebraId { family: Family::So, size: 4 };
        assert_eq!(self.adjoint_hw.len(), if two_sided { 2 } else { 1 });
        assert!(self.is_simple != two_sided);
        let min = self
            .delta_n
            .iter()
            .map(|a| a.dot(&self.a_star))
            .min()
            .expect("Delta(n) is never empty");
        assert!(min.is_positive());
        for a in &self.delta_n {
            let g = a.dot(&self.a_star) / min.clone();
            assert!(g == q(1) || g == q(2), "grade of {} outside {{1,2}}", a);
        }
        match self.id.family {
            Family::So => assert!(self.delta_n.iter().all(|a| self.grade_of(a) == 1)),
            _ => assert!(self.delta_n.iter().any(|a| self.grade_of(a) == 2)),
        }
        let expected_n = match self.id.family {
            Family::So => self.id.size - 2,
            Family::Sl => 2 * self.id.size - 3,
            Family::Sp => 2 * self.id.size - 5,
            Family::F4 => 15,
        };
        assert_eq!(self.delta_n.len(), expected_n, "unexpected |Delta(n)| for {}", self.id);
        assert_eq!(
            self.delta_n.len() + self.delta_l_pos.len(),
            self.roots.positive.len()
        );
    }

    /// Grade of a root with respect to the a-direction, normalized so the
    /// smallest positive value is 1. Signed: negative roots get negative
    /// grades, Levi roots get 0.
    pub fn grade_of(&self, alpha: &Weight) -> i64 {
        let min = self
            .delta_n
            .iter()
            .map(|a| a.dot(&self.a_star))
            .min()
            .unwrap();
        let g = alpha.dot(&self.a_star) / min;
        assert!(g.is_integer(), "grade of {} is not integral", alpha);
        let g = g.to_integer();
        i64::try_from(g).expect("grade fits in i64")
    }

    /// Full Weyl group, enumerated once and cached.
    pub fn weyl_group(&self) -> &[WeylElement] {
        self.weyl.get_or_init(|| weyl_group(&self.roots))
    }

    /// Dimension of the nilradical n (number of roots in Delta(n)).
    pub fn dim_n(&self) -> usize {
        self.delta_n.len()
    }

    pub fn dim_g(&self) -> usize {
        self.roots.ambient_rank() + 2 * self.roots.positive.len()
    }

    /// Weights -alpha, alpha in Delta(n), such that x_{-alpha} is an
    /// l-lowest weight vector of n_-: alpha + beta is not a root for any
    /// beta in Delta+(l). Split by coincidence with the g-lowest weights
    /// (negatives of adjoint highest weights).
    pub fn l_lowest_weights_of_n_minus(&self) -> LLowestWeights {
        let mut g_lowest = Vec::new();
        let mut non_g_lowest = Vec::new();
        for alpha in &self.delta_n {
            let lowest = self
                .delta_l_pos
                .iter()
                .all(|beta| !self.roots.is_root(&(alpha + beta)));
            if lowest {
                if self.adjoint_hw.contains(alpha) {
                    g_lowest.push(-alpha);
                } else {
                    non_g_lowest.push(-alpha);
                }
            }
        }
        for hw in &self.adjoint_hw {
            assert!(
                g_lowest.contains(&-hw),
                "adjoint lowest weight {} missing from the l-lowest set",
                -hw
            );
        }
        g_lowest.sort();
        non_g_lowest.sort();
        LLowestWeights { g_lowest, non_g_lowest }
    }

    /// Grades as a map from grade value to the roots at that grade.
    pub fn graded_root_counts(&self) -> (usize, usize) {
        let g1 = self.delta_n.iter().filter(|a| self.grade_of(a) == 1).count();
        let g2 = self.delta_n.iter().filter(|a| self.grade_of(a) == 2).count();
        (g1, g2)
    }
}

impl RootSystemData {
    /// Rank of the root span: ambient dimension, except one less for the
    /// special linear family (trace hyperplane).
    pub fn ambient_rank(&self) -> usize {
        if self.mod_ones {
            self.ambient - 1
        } else {
            self.ambient
        }
    }
}

/// Convenience: dot of a weight with a* divided by nothing; orthogonality
/// test used by the invariance filters.
pub fn orthogonal_to_a(datum: &RankOneDatum, w: &Weight) -> bool {
    w.dot(&datum.a_star).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> AlgebraId {
        AlgebraId::parse(s).unwrap()
    }

    #[test]
    fn id_grammar() {
        assert_eq!(id("so:7"), AlgebraId { family: Family::So, size: 7 });
        assert_eq!(id("f4"), AlgebraId { family: Family::F4, size: 4 });
        assert!(AlgebraId::parse("so:3").is_err());
        assert!(AlgebraId::parse("sl:2").is_err());
        assert!(AlgebraId::parse("sp:7").is_err());
        assert!(AlgebraId::parse("sp:4").is_err());
        assert!(AlgebraId::parse("e8").is_err());
        assert!(AlgebraId::parse("so:x").is_err());
    }

    #[test]
    fn real_form_tags() {
        assert_eq!(id("so:6").real_form(), "SO0(5,1)");
        assert_eq!(id("sl:4").real_form(), "SU(3,1)");
        assert_eq!(id("sp:8").real_form(), "Sp(3,1)");
        assert_eq!(id("f4").real_form(), "F4(-20)");
    }

    #[test]
    fn nilradical_shapes() {
        // so: abelian (all grade 1); sl: Heisenberg (2n-4, 1);
        // sp: (4(n-2), 3); f4: (8, 7).
        assert_eq!(RankOneDatum::new(id("so:7")).unwrap().graded_root_counts(), (5, 0));
        assert_eq!(RankOneDatum::new(id("sl:4")).unwrap().graded_root_counts(), (4, 1));
        assert_eq!(RankOneDatum::new(id("sp:6")).unwrap().graded_root_counts(), (4, 3));
        assert_eq!(RankOneDatum::new(id("f4")).unwrap().graded_root_counts(), (8, 7));
    }

    #[test]
    fn f4_catalog_counts() {
        let d = RankOneDatum::new(id("f4")).unwrap();
        assert_eq!(d.roots.positive.len() * 2, 48);
        assert_eq!(d.dim_n(), 15);
        assert_eq!(d.dim_g(), 52);
        assert_eq!(d.adjoint_hw, vec![Weight::from_ints(&[2, 2, 0, 0])]);
    }

    #[test]
    fn algebra_id_serde_round_trip() {
        for s in ["so:7", "sl:4", "sp:8", "f4"] {
            let a = id(s);
            let j = serde_json::to_string(&a).unwrap();
            assert_eq!(j, format!("\"{}\"", s));
            assert_eq!(serde_json::from_str::<AlgebraId>(&j).unwrap(), a);
        }
        assert!(serde_json::from_str::<AlgebraId>("\"so:2\"").is_err());
    }

    #[test]
    fn sl3_has_empty_levi_root_set() {
        let d = RankOneDatum::new(id("sl:3")).unwrap();
        assert!(d.delta_l_pos.is_empty());
        assert_eq!(d.dim_g(), 8);
    }

    #[test]
    fn so4_splits_into_two_ideals() {
        let d = RankOneDatum::new(id("so:4")).unwrap();
        assert!(!d.is_simple);
        let mut hw = d.adjoint_hw.clone();
        hw.sort();
        assert_eq!(hw, vec![Weight::from_ints(&[1, -1]), Weight::from_ints(&[1, 1])]);
    }

    #[test]
    fn l_lowest_weight_tables() {
        // so: only the g-lowest ones; sl: two extras; sp and f4: one extra.
        let so6 = RankOneDatum::new(id("so:6")).unwrap().l_lowest_weights_of_n_minus();
        assert_eq!(so6.g_lowest, vec![Weight::from_ints(&[-1, -1, 0])]);
        assert!(so6.non_g_lowest.is_empty());

        let so4 = RankOneDatum::new(id("so:4")).unwrap().l_lowest_weights_of_n_minus();
        assert_eq!(so4.g_lowest.len(), 2);
        assert!(so4.non_g_lowest.is_empty());

        let sl5 = RankOneDatum::new(id("sl:5")).unwrap().l_lowest_weights_of_n_minus();
        assert_eq!(sl5.g_lowest, vec![Weight::from_ints(&[-1, 0, 0, 0, 1])]);
        assert_eq!(
            sl5.non_g_lowest,
            vec![Weight::from_ints(&[-1, 0, 0, 1, 0]), Weight::from_ints(&[0, -1, 0, 0, 1])]
        );

        let sp8 = RankOneDatum::new(id("sp:8")).unwrap().l_lowest_weights_of_n_minus();
        assert_eq!(sp8.g_lowest, vec![Weight::from_ints(&[-2, 0, 0, 0])]);
        assert_eq!(sp8.non_g_lowest, vec![Weight::from_ints(&[-1, 0, -1, 0])]);

        let f4 = RankOneDatum::new(id("f4")).unwrap().l_lowest_weights_of_n_minus();
        assert_eq!(f4.g_lowest, vec![Weight::from_ints(&[-2, -2, 0, 0])]);
        assert_eq!(f4.non_g_lowest, vec![Weight::from_ints(&[-1, -1, -1, -1])]);
    }

    #[test]
    fn sl3_l_lowest_includes_both_non_lowest_roots() {
        let d = RankOneDatum::new(id("sl:3")).unwrap();
        let ll = d.l_lowest_weights_of_n_minus();
        assert_eq!(ll.g_lowest, vec![Weight::from_ints(&[-1, 0, 1])]);
        assert_eq!(
            ll.non_g_lowest,
            vec![Weight::from_ints(&[-1, 1, 0]), Weight::from_ints(&[0, -1, 1])]
        );
    }
}
