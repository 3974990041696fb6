//! Weights (and roots) as exact coordinate vectors in the ambient e-basis.
//!
//! The bilinear form is the standard dot product: |e_i|^2 = 1 in every
//! family. For the special linear family, weights live in the ambient
//! n-dimensional space and are compared modulo the all-ones vector; see
//! [`Weight::mod_ones_rep`].

use crate::rat::{parse_rat, q, rat_str, Rat};
use num_traits::Zero;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rat>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![q(0); dim])
    }

    /// Standard basis vector e_i (1-based, matching the e_1, e_2, ... naming).
    pub fn e(i: usize, dim: usize) -> Self {
        assert!((1..=dim).contains(&i), "e_{} out of range for dim {}", i, dim);
        let mut w = Self::zero(dim);
        w.0[i - 1] = q(1);
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &Weight) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn scaled(&self, c: &Rat) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// Representative modulo the all-ones vector: subtract the coordinate mean.
    pub fn mod_ones_rep(&self) -> Weight {
        let n = q(self.dim() as i64);
        let mean = self.0.iter().sum::<Rat>() / n;
        Weight(self.0.iter().map(|c| c - &mean).collect())
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.0.iter().map(rat_str).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    /// Human form in the e-basis, e.g. `-e1+2e2-e4`; `0` for the zero weight.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = rat_str(c);
            if out.is_empty() {
                match s.as_str() {
                    "1" => {}
                    "-1" => out.push('-'),
                    _ => out.push_str(&s),
                }
            } else if s.starts_with('-') {
                match s.as_str() {
                    "-1" => out.push('-'),
                    _ => out.push_str(&s),
                }
            } else {
                out.push('+');
                if s != "1" {
                    out.push_str(&s);
                }
            }
            out.push_str(&format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{}", out)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coord_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coords = Vec::<String>::deserialize(deserializer)?;
        let parsed: Option<Vec<Rat>> = coords.iter().map(|s| parse_rat(s)).collect();
        parsed.map(Weight).ok_or_else(|| D::Error::custom("bad rational coordinate"))
    }
}

/// Sort weights into a canonical order (coordinate lexicographic). Multisets
/// of weights are always compared after this normalization.
pub fn sort_weights(ws: &mut [Weight]) {
    ws.sort();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::qq;

    #[test]
    fn display_forms() {
        assert_eq!(Weight::from_ints(&[-1, 2, 0, -1]).to_string(), "-e1+2e2-e4");
        assert_eq!(Weight::from_ints(&[0, 0]).to_string(), "0");
        assert_eq!(Weight(vec![qq(3, 2), qq(-1, 2)]).to_string(), "3/2e1-1/2e2");
        assert_eq!(Weight::from_ints(&[1, -1]).to_string(), "e1-e2");
    }

    #[test]
    fn mod_ones_subtracts_mean() {
        let w = Weight::from_ints(&[3, 0, 0]);
        assert_eq!(w.mod_ones_rep(), Weight::from_ints(&[2, -1, -1]));
        assert!(Weight::from_ints(&[1, 1, 1]).mod_ones_rep().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let w = Weight(vec![qq(3, 2), q(-2), q(0)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"["3/2","-2","0"]"#);
        let back: Weight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
