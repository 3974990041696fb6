//! Polynomial maps between coordinate spaces, specialized to polynomial
//! vector fields with the bracket [f, g] = Df.g - Dg.f. Coefficients are
//! exact rationals; monomials are exponent vectors.

use crate::rat::{q, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

pub type Mono = Vec<u32>;

/// A polynomial map from an n_vars-dimensional space to a dim_out-dimensional
/// one, stored as monomial -> coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    pub n_vars: usize,
    pub dim_out: usize,
    pub terms: BTreeMap<Mono, Vec<Rat>>,
}

impl PolyMap {
    pub fn zero(n_vars: usize, dim_out: usize) -> Self {
        PolyMap { n_vars, dim_out, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Mono, coeff: Vec<Rat>) {
        assert_eq!(mono.len(), self.n_vars);
        assert_eq!(coeff.len(), self.dim_out);
        let e = self.terms.entry(mono).or_insert_with(|| vec![q(0); self.dim_out]);
        for (a, b) in e.iter_mut().zip(&coeff) {
            *a = &*a + b;
        }
        self.normalize_one();
    }

    fn normalize_one(&mut self) {
        self.terms.retain(|_, v| v.iter().any(|x| !x.is_zero()));
    }

    pub fn add(&self, other: &PolyMap) -> PolyMap {
        assert_eq!((self.n_vars, self.dim_out), (other.n_vars, other.dim_out));
        let mut out = self.clone();
        for (m, v) in &other.terms {
            let e = out.terms.entry(m.clone()).or_insert_with(|| vec![q(0); out.dim_out]);
            for (a, b) in e.iter_mut().zip(v) {
                *a = &*a + b;
            }
        }
        out.normalize_one();
        out
    }

    pub fn scale(&self, c: &Rat) -> PolyMap {
        if c.is_zero() {
            return PolyMap::zero(self.n_vars, self.dim_out);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            for a in v.iter_mut() {
                *a = &*a * c;
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyMap) -> PolyMap {
        self.add(&other.scale(&q(-1)))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Keep only terms of total degree within [lo, hi].
    pub fn truncate_degrees(&self, lo: u32, hi: u32) -> PolyMap {
        let mut out = PolyMap::zero(self.n_vars, self.dim_out);
        for (m, v) in &self.terms {
            let d: u32 = m.iter().sum();
            if d >= lo && d <= hi {
                out.terms.insert(m.clone(), v.clone());
            }
        }
        out
    }

    /// The i-th output coordinate as a scalar polynomial.
    pub fn coordinate(&self, i: usize) -> BTreeMap<Mono, Rat> {
        self.terms
            .iter()
            .filter(|(_, v)| !v[i].is_zero())
            .map(|(m, v)| (m.clone(), v[i].clone()))
            .collect()
    }

    /// Directional derivative Df.g: differentiate each term of f along
    /// every variable and contract with the matching coordinate of g.
    pub fn jacobian_apply(&self, g: &PolyMap) -> PolyMap {
        assert_eq!(self.n_vars, g.n_vars);
        assert_eq!(g.dim_out, self.n_vars);
        let g_coords: Vec<BTreeMap<Mono, Rat>> = (0..g.dim_out).map(|i| g.coordinate(i)).collect();
        let mut out = PolyMap::zero(self.n_vars, self.dim_out);
        for (m, v) in &self.terms {
            for i in 0..self.n_vars {
                if m[i] == 0 {
                    continue;
                }
                let mut dm = m.clone();
                dm[i] -= 1;
                let factor = q(m[i] as i64);
                for (gm, gc) in &g_coords[i] {
                    let mono: Mono = dm.iter().zip(gm).map(|(a, b)| a + b).collect();
                    let c = &factor * gc;
                    let coeff: Vec<Rat> = v.iter().map(|x| x * &c).collect();
                    let e = out.terms.entry(mono).or_insert_with(|| vec![q(0); out.dim_out]);
                    for (a, b) in e.iter_mut().zip(&coeff) {
                        *a = &*a + b;
                    }
                }
            }
        }
        out.normalize_one();
        out
    }
}

/// Vector-field bracket on polynomial self-maps: [f, g] = Df.g - Dg.f.
pub fn field_bracket(f: &PolyMap, g: &PolyMap) -> PolyMap {
    assert_eq!(f.n_vars, f.dim_out);
    assert_eq!(g.n_vars, g.dim_out);
    f.jacobian_apply(g).sub(&g.jacobian_apply(f))
}

/// All exponent vectors of total degree exactly d over n variables, in
/// lexicographic order.
pub fn monomials_of_degree(n_vars: usize, d: u32) -> Vec<Mono> {
    fn rec(n: usize, d: u32, prefix: &mut Mono, out: &mut Vec<Mono>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n - 1, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n_vars == 0 {
        return out;
    }
    rec(n_vars, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(n: usize, terms: &[(&[u32], &[i64])]) -> PolyMap {
        let mut f = PolyMap::zero(n, n);
        for (m, v) in terms {
            f.add_term(m.to_vec(), v.iter().map(|&x| q(x)).collect());
        }
        f
    }

    #[test]
    fn bracket_of_linear_fields_is_the_matrix_commutator() {
        // f = (y2, 0), g = (0, y1): [f, g] = (y1, -y2) under Df.g - Dg.f.
        let f = field(2, &[(&[0, 1], &[1, 0])]);
        let g = field(2, &[(&[1, 0], &[0, 1])]);
        let b = field_bracket(&f, &g);
        let want = field(2, &[(&[1, 0], &[1, 0]), (&[0, 1], &[0, -1])]);
        assert_eq!(b, want);
    }

    #[test]
    fn derivative_contraction_on_a_quadratic() {
        // f = y1^2 e1; g = (c, 0): Df.g = 2 c y1 e1.
        let f = field(2, &[(&[2, 0], &[1, 0])]);
        let g = field(2, &[(&[0, 0], &[3, 0])]);
        let d = f.jacobian_apply(&g);
        assert_eq!(d, field(2, &[(&[1, 0], &[6, 0])]));
    }

    #[test]
    fn monomial_counts_match_stars_and_bars() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 5), vec![vec![5]]);
        for m in monomials_of_degree(3, 4) {
            assert_eq!(m.iter().sum::<u32>(), 4);
        }
    }

    fn arb_field() -> impl Strategy<Value = PolyMap> {
        proptest::collection::vec((-2i64..3, -2i64..3), 4).prop_map(|coeffs| {
            let monos: Vec<Vec<u32>> = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
            let mut f = PolyMap::zero(2, 2);
            for (m, (a, b)) in monos.into_iter().zip(coeffs) {
                f.add_term(m, vec![q(a), q(b)]);
            }
            f
        })
    }

    proptest! {
        #[test]
        fn bracket_is_antisymmetric(f in arb_field(), g in arb_field()) {
            let fg = field_bracket(&f, &g);
            let gf = field_bracket(&g, &f);
            prop_assert_eq!(fg, gf.scale(&q(-1)));
        }

        #[test]
        fn bracket_satisfies_jacobi(f in arb_field(), g in arb_field(), h in arb_field()) {
            let t1 = field_bracket(&field_bracket(&f, &g), &h);
            let t2 = field_bracket(&field_bracket(&g, &h), &f);
            let t3 = field_bracket(&field_bracket(&h, &f), &g);
            prop_assert!(t1.add(&t2).add(&t3).is_zero());
        }
    }
}
