//! Sparse Laurent polynomials over the Gaussian rationals: the systems whose
//! vanishing hypotheses this crate certifies. Exponents are lattice vectors,
//! so Newton polytopes, face restrictions and torus-monomial normalizations
//! are all exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::arith::{ArithError, GaussRat, Int, IntVec};
use crate::linalg::int_coords;
use crate::polytope::{LatticePolytope, PolytopeError};

/// A Laurent polynomial in `n` variables with Gaussian-rational
/// coefficients; only nonzero terms are stored, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<IntVec, GaussRat>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (IntVec, GaussRat)>) -> Self {
        let mut map: BTreeMap<IntVec, GaussRat> = BTreeMap::new();
        for (v, a) in terms {
            assert_eq!(v.dim(), n, "exponent dimension mismatch");
            let entry = map.entry(v).or_insert_with(|| GaussRat::from_int(0));
            *entry = &*entry + &a;
        }
        map.retain(|_, a| !a.is_zero());
        LaurentPoly { n, terms: map }
    }

    pub fn constant(n: usize, a: GaussRat) -> Self {
        Self::from_terms(n, [(IntVec::zero(n), a)])
    }

    /// The monomial `a·x^v`.
    pub fn monomial(v: IntVec, a: GaussRat) -> Self {
        let n = v.dim();
        Self::from_terms(n, [(v, a)])
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVec, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, v: &IntVec) -> GaussRat {
        self.terms.get(v).cloned().unwrap_or_else(|| GaussRat::from_int(0))
    }

    pub fn support(&self) -> Vec<IntVec> {
        self.terms.keys().cloned().collect()
    }

    pub fn newton_polytope(&self) -> Result<LatticePolytope, PolytopeError> {
        LatticePolytope::hull(&self.support())
    }

    pub fn add(&self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.n, rhs.n);
        LaurentPoly::from_terms(
            self.n,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(v, a)| (v.clone(), a.clone())),
        )
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(v, a)| (v.clone(), -a)).collect(),
        }
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.n, rhs.n);
        let mut out: BTreeMap<IntVec, GaussRat> = BTreeMap::new();
        for (v, a) in &self.terms {
            for (w, b) in &rhs.terms {
                let key = v.add(w);
                let entry = out.entry(key).or_insert_with(|| GaussRat::from_int(0));
                *entry = &*entry + &(a * b);
            }
        }
        out.retain(|_, a| !a.is_zero());
        LaurentPoly { n: self.n, terms: out }
    }

    pub fn scalar_mul(&self, a: &GaussRat) -> LaurentPoly {
        if a.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(v, c)| (v.clone(), c * a)).collect(),
        }
    }

    /// The logarithmic derivative `x_i ∂_i`: multiplies each term by its
    /// `i`-th exponent without shifting the support.
    pub fn log_deriv(&self, i: usize) -> LaurentPoly {
        assert!(i < self.n);
        let terms = self
            .terms
            .iter()
            .filter(|(v, _)| !v.0[i].is_zero())
            .map(|(v, a)| (v.clone(), a.scale(&v.0[i])));
        LaurentPoly::from_terms(self.n, terms)
    }

    /// The ordinary partial derivative `∂_i` (exponents may go negative:
    /// Laurent differentiation is still well defined term by term).
    pub fn deriv(&self, i: usize) -> LaurentPoly {
        assert!(i < self.n);
        let terms = self.terms.iter().filter(|(v, _)| !v.0[i].is_zero()).map(|(v, a)| {
            let mut w = v.clone();
            w.0[i] = &w.0[i] - Int::from(1);
            (w, a.scale(&v.0[i]))
        });
        LaurentPoly::from_terms(self.n, terms)
    }

    /// Evaluate at a point with all coordinates nonzero (required whenever a
    /// negative exponent occurs).
    pub fn eval(&self, x: &[GaussRat]) -> Result<GaussRat, ArithError> {
        assert_eq!(x.len(), self.n);
        let mut acc = GaussRat::from_int(0);
        for (v, a) in &self.terms {
            let mut term = a.clone();
            for (e, xi) in v.0.iter().zip(x) {
                let e = e.to_i64().expect("desk-scale exponent");
                term = &term * &xi.pow(e)?;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Restriction to the face of the Newton polytope exposed by `u`: keeps
    /// exactly the terms whose exponent minimizes `⟨u,·⟩` over the support.
    pub fn face_restriction(&self, u: &IntVec) -> LaurentPoly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let m = self.terms.keys().map(|v| u.dot(v)).min().expect("nonzero poly");
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| u.dot(v) == m)
                .map(|(v, a)| (v.clone(), a.clone()))
                .collect(),
        }
    }

    /// Rewrite in the coordinates of an affine lattice chart: exponent `v`
    /// becomes the coordinate vector of `v − base` in `basis`. Returns `None`
    /// if some exponent does not lie in the spanned lattice.
    pub fn in_chart(&self, base: &IntVec, basis: &[IntVec]) -> Option<LaurentPoly> {
        let mut terms = Vec::new();
        for (v, a) in &self.terms {
            let w = int_coords(basis, &v.sub(base))?;
            terms.push((w, a.clone()));
        }
        Some(LaurentPoly::from_terms(basis.len(), terms))
    }

    /// Divide by the monomial `x^w` with `w` the coordinatewise minimum of
    /// the support, making every exponent nonnegative with a zero minimum in
    /// each variable. A unit rescaling on the torus; returns the shift `w`.
    pub fn shift_to_origin(&self) -> (LaurentPoly, IntVec) {
        if self.terms.is_empty() {
            return (self.clone(), IntVec::zero(self.n));
        }
        let mut shift = self.terms.keys().next().expect("nonempty").clone();
        for v in self.terms.keys() {
            for (s, x) in shift.0.iter_mut().zip(&v.0) {
                if x < s {
                    *s = x.clone();
                }
            }
        }
        let shifted = LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(v, a)| (v.sub(&shift), a.clone()))
                .collect(),
        };
        (shifted, shift)
    }

    /// The shear `x_i ↦ x_i + c·x_j` for `i ≠ j` (exponents of `x_i` must be
    /// nonnegative). A unimodular coordinate change used to put plane curve
    /// germs in general position.
    pub fn substitute_mix(&self, i: usize, j: usize, c: &GaussRat) -> LaurentPoly {
        assert!(i != j && i < self.n && j < self.n);
        let mut out = LaurentPoly::zero(self.n);
        for (v, a) in &self.terms {
            let e = v.0[i].to_i64().expect("desk-scale exponent");
            assert!(e >= 0, "shear substitution needs polynomial exponents");
            let mut binom = Int::from(1);
            for k in 0..=e {
                let mut w = v.clone();
                w.0[i] = Int::from(k);
                w.0[j] = &w.0[j] + Int::from(e - k);
                let coeff = &a.scale(&binom) * &c.pow(e - k).expect("nonneg power");
                out = out.add(&LaurentPoly::monomial(w, coeff));
                if k < e {
                    binom = binom * Int::from(e - k) / Int::from(k + 1);
                }
            }
        }
        out
    }

    /// Substitute `x_i ↦ x_i + c` for a polynomial (all exponents of `x_i`
    /// nonnegative). Used to translate an affine point to the origin.
    pub fn substitute_shift(&self, i: usize, c: &GaussRat) -> LaurentPoly {
        assert!(i < self.n);
        let mut out = LaurentPoly::zero(self.n);
        for (v, a) in &self.terms {
            let e = v.0[i].to_i64().expect("desk-scale exponent");
            assert!(e >= 0, "affine substitution needs polynomial exponents");
            // (x_i + c)^e by the binomial theorem; binom tracks C(e, j),
            // always exactly divisible at each update.
            let mut binom = Int::from(1);
            for j in 0..=e {
                let mut w = v.clone();
                w.0[i] = Int::from(j);
                let coeff = &a.scale(&binom) * &c.pow(e - j).expect("nonneg power");
                out = out.add(&LaurentPoly::monomial(w, coeff));
                if j < e {
                    binom = binom * Int::from(e - j) / Int::from(j + 1);
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (v, a) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({a})")?;
            for (i, e) in v.0.iter().enumerate() {
                if !e.is_zero() {
                    write!(f, "*x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// A system member: either a fully exact polynomial or a support with
/// coefficients declared generic (in which case only combinatorial data is
/// available).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyData {
    Exact(LaurentPoly),
    Generic { n: usize, support: Vec<IntVec> },
}

impl PolyData {
    pub fn vars(&self) -> usize {
        match self {
            PolyData::Exact(p) => p.vars(),
            PolyData::Generic { n, .. } => *n,
        }
    }

    pub fn support(&self) -> Vec<IntVec> {
        match self {
            PolyData::Exact(p) => p.support(),
            PolyData::Generic { support, .. } => {
                let mut s = support.clone();
                s.sort();
                s.dedup();
                s
            }
        }
    }

    pub fn newton_polytope(&self) -> Result<LatticePolytope, PolytopeError> {
        LatticePolytope::hull(&self.support())
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, PolyData::Generic { .. })
    }

    pub fn exact(&self) -> Option<&LaurentPoly> {
        match self {
            PolyData::Exact(p) => Some(p),
            PolyData::Generic { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn iv(v: &[i64]) -> IntVec {
        IntVec::from_i64(v)
    }

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    /// `1 + x1·x2` in two variables.
    fn one_plus_xy() -> LaurentPoly {
        LaurentPoly::from_terms(2, [(iv(&[0, 0]), g(1)), (iv(&[1, 1]), g(1))])
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly::from_terms(1, [(iv(&[2]), g(3)), (iv(&[2]), g(-3))]);
        assert!(p.is_zero());
    }

    #[test]
    fn cusp_face_restrictions() {
        // y1² + y2³: the edge of its Newton segment exposed by u = (3, 2)
        // keeps both terms; the vertex exposed by (1, 0) keeps only y2³.
        let p = LaurentPoly::from_terms(2, [(iv(&[2, 0]), g(1)), (iv(&[0, 3]), g(1))]);
        let edge = p.face_restriction(&iv(&[3, 2]));
        assert_eq!(edge, p);
        let vert = p.face_restriction(&iv(&[1, 0]));
        assert_eq!(vert, LaurentPoly::monomial(iv(&[0, 3]), g(1)));
    }

    #[test]
    fn log_derivative_keeps_support() {
        let p = LaurentPoly::from_terms(2, [(iv(&[2, -1]), g(5)), (iv(&[0, 1]), g(7))]);
        let d = p.log_deriv(0);
        assert_eq!(d, LaurentPoly::monomial(iv(&[2, -1]), g(10)));
        let d2 = p.log_deriv(1);
        assert_eq!(
            d2,
            LaurentPoly::from_terms(2, [(iv(&[2, -1]), g(-5)), (iv(&[0, 1]), g(7))])
        );
    }

    #[test]
    fn derivative_shifts_exponents() {
        let p = LaurentPoly::from_terms(1, [(iv(&[3]), g(1)), (iv(&[0]), g(4))]);
        assert_eq!(p.deriv(0), LaurentPoly::monomial(iv(&[2]), g(3)));
    }

    #[test]
    fn chart_rewrite_of_diagonal_segment() {
        // 1 + x1·x2 restricted to the chart of the segment [(0,0), (1,1)].
        let p = one_plus_xy();
        let q = p.in_chart(&iv(&[0, 0]), &[iv(&[1, 1])]).unwrap();
        assert_eq!(
            q,
            LaurentPoly::from_terms(1, [(iv(&[0]), g(1)), (iv(&[1]), g(1))])
        );
    }

    #[test]
    fn shift_to_origin_clears_negative_exponents() {
        let p = LaurentPoly::from_terms(2, [(iv(&[-1, 2]), g(1)), (iv(&[3, -2]), g(2))]);
        let (q, shift) = p.shift_to_origin();
        assert_eq!(shift, iv(&[-1, -2]));
        assert_eq!(
            q.support(),
            vec![iv(&[0, 4]), iv(&[4, 0])]
        );
    }

    #[test]
    fn shear_expands_binomially() {
        // x₁² under x₁ ↦ x₁ + 2x₂ becomes x₁² + 4x₁x₂ + 4x₂².
        let p = LaurentPoly::monomial(iv(&[2, 0]), g(1));
        let q = p.substitute_mix(0, 1, &g(2));
        assert_eq!(
            q,
            LaurentPoly::from_terms(
                2,
                [(iv(&[2, 0]), g(1)), (iv(&[1, 1]), g(4)), (iv(&[0, 2]), g(4))]
            )
        );
    }

    #[test]
    fn affine_shift_translates_roots() {
        // p = x² − 1 has a root at 1; shifting x ↦ x + 1 moves it to 0.
        let p = LaurentPoly::from_terms(1, [(iv(&[2]), g(1)), (iv(&[0]), g(-1))]);
        let q = p.substitute_shift(0, &g(1));
        assert_eq!(
            q,
            LaurentPoly::from_terms(1, [(iv(&[2]), g(1)), (iv(&[1]), g(2))])
        );
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let p = LaurentPoly::from_terms(1, [(iv(&[-2]), g(1))]);
        let x = GaussRat::from_rat(Rat::new(Int::from(1), Int::from(2)));
        assert_eq!(p.eval(&[x]).unwrap(), g(4));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn multiplication_distributes(
            a in poly_strategy(), b in poly_strategy(), c in poly_strategy(),
        ) {
            let lhs = a.add(&b).mul(&c);
            let rhs = a.mul(&c).add(&b.mul(&c));
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in poly_strategy(), b in poly_strategy()) {
            let x = [g(2), GaussRat::new(
                Rat::new(Int::from(1), Int::from(3)),
                Rat::new(Int::from(1), Int::from(1)),
            )];
            let prod = a.mul(&b).eval(&x).unwrap();
            let sep = &a.eval(&x).unwrap() * &b.eval(&x).unwrap();
            proptest::prop_assert_eq!(prod, sep);
        }

        #[test]
        fn log_derivative_satisfies_product_rule(
            a in poly_strategy(), b in poly_strategy(),
        ) {
            let lhs = a.mul(&b).log_deriv(0);
            let rhs = a.log_deriv(0).mul(&b).add(&a.mul(&b.log_deriv(0)));
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }

    fn poly_strategy() -> impl proptest::strategy::Strategy<Value = LaurentPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(-2i64..3, 2),
                -3i64..4,
            ),
            0..5,
        )
        .prop_map(|terms| {
            LaurentPoly::from_terms(
                2,
                terms.into_iter().map(|(v, c)| (IntVec::from_i64(&v), g(c))),
            )
        })
    }

    use proptest::strategy::Strategy;
}
