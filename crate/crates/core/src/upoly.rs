//! Dense univariate polynomials over the Gaussian rationals: Euclidean
//! division, (extended) gcds, squarefree parts, resultants and Lagrange
//! interpolation. This is the base ring for the bivariate elimination kit.

use crate::arith::{ArithError, GaussRat, Int, IntVec, Rat};
use crate::laurent::LaurentPoly;
use num_traits::ToPrimitive;

/// Coefficients in increasing degree; no trailing zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly(Vec<GaussRat>);

impl UPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(vec![])
    }

    pub fn one() -> Self {
        UPoly::constant(GaussRat::from_int(1))
    }

    pub fn constant(c: GaussRat) -> Self {
        UPoly::new(vec![c])
    }

    pub fn monomial(deg: usize, c: GaussRat) -> Self {
        let mut coeffs = vec![GaussRat::from_int(0); deg];
        coeffs.push(c);
        UPoly::new(coeffs)
    }

    pub fn var() -> Self {
        UPoly::monomial(1, GaussRat::from_int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&GaussRat> {
        self.0.last()
    }

    pub fn coeff(&self, i: usize) -> GaussRat {
        self.0.get(i).cloned().unwrap_or_else(|| GaussRat::from_int(0))
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.0
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        let len = self.0.len().max(rhs.0.len());
        UPoly::new((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, rhs: &UPoly) -> UPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![GaussRat::from_int(0); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(out)
    }

    pub fn scalar_mul(&self, a: &GaussRat) -> UPoly {
        UPoly::new(self.0.iter().map(|c| c * a).collect())
    }

    /// Euclidean division by a nonzero divisor: `self = q·d + r` with
    /// `deg r < deg d`.
    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let lead_inv = d.lead().expect("nonzero").inv()?;
        let mut r = self.clone();
        let mut q = vec![GaussRat::from_int(0); self.0.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = &r.lead().expect("nonzero").clone() * &lead_inv;
            let shift = dr - dd;
            q[shift] = c.clone();
            let sub = d.mul(&UPoly::monomial(shift, c));
            r = r.sub(&sub);
        }
        Ok((UPoly::new(q), r))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly, ArithError> {
        Ok(self.divrem(d)?.1)
    }

    pub fn make_monic(&self) -> UPoly {
        match self.lead() {
            None => UPoly::zero(),
            Some(l) => self.scalar_mul(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·other = g`, `g`
    /// monic (or zero).
    pub fn xgcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                (r0.scalar_mul(&inv), s0.scalar_mul(&inv), t0.scalar_mul(&inv))
            }
        }
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Int::from(i)))
                .collect(),
        )
    }

    /// The monic product of the distinct irreducible factors:
    /// `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g).expect("gcd of nonzero is nonzero");
        debug_assert!(r.is_zero());
        q.make_monic()
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::from_int(0);
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Multiplicity of the root 0 (None for the zero polynomial).
    pub fn ord_at_zero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Divide out the highest power of the variable.
    pub fn strip_zero_root(&self) -> UPoly {
        match self.ord_at_zero() {
            None => UPoly::zero(),
            Some(k) => UPoly(self.0[k..].to_vec()),
        }
    }

    /// Number of distinct complex roots (degree of the squarefree part).
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_part().degree().unwrap_or(0)
    }

    /// Number of distinct nonzero complex roots.
    pub fn distinct_nonzero_root_count(&self) -> usize {
        self.strip_zero_root().distinct_root_count()
    }

    /// View a one-variable Laurent polynomial with nonnegative exponents as
    /// a polynomial.
    pub fn from_laurent(p: &LaurentPoly) -> Option<UPoly> {
        if p.vars() != 1 {
            return None;
        }
        let mut coeffs = Vec::new();
        for (v, a) in p.terms() {
            let e = v.0[0].to_usize()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, GaussRat::from_int(0));
            }
            coeffs[e] = a.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            1,
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (IntVec(vec![Int::from(i)]), c.clone())),
        )
    }
}

/// Resultant of two univariate polynomials, by the Euclidean recurrence
/// `Res(b, a) = lc(b)^{deg a − deg r} · Res(b, r)` for `r = a mod b`.
pub fn resultant(a: &UPoly, b: &UPoly) -> GaussRat {
    match (a.degree(), b.degree()) {
        (None, _) | (_, None) => GaussRat::from_int(0),
        (Some(da), Some(0)) => b.coeff(0).pow(da as i64).expect("nonneg power"),
        (Some(0), Some(db)) => a.coeff(0).pow(db as i64).expect("nonneg power"),
        (Some(da), Some(db)) => {
            if da < db {
                let sign = if (da * db) % 2 == 1 { -1 } else { 1 };
                return resultant(b, a).scale(&Int::from(sign));
            }
            let r = a.rem(b).expect("nonzero divisor");
            if r.is_zero() {
                return GaussRat::from_int(0);
            }
            let dr = r.degree().expect("nonzero");
            let swap_sign = if (da * db) % 2 == 1 { -1 } else { 1 };
            let lc_pow = b.lead().expect("nonzero").pow((da - dr) as i64).expect("pow");
            let inner = resultant(b, &r);
            (&inner * &lc_pow).scale(&Int::from(swap_sign))
        }
    }
}

/// Lagrange interpolation through distinct nodes.
pub fn interpolate(points: &[(GaussRat, GaussRat)]) -> UPoly {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = (xi - xj).inv().expect("interpolation nodes are distinct");
            // (y − xj) / (xi − xj)
            let lin = UPoly::new(vec![&(-xj) * &denom, denom]);
            basis = basis.mul(&lin);
        }
        acc = acc.add(&basis);
    }
    acc
}

pub fn rat(p: i64, q: i64) -> GaussRat {
    GaussRat::from_rat(Rat::new(Int::from(p), Int::from(q)))
}
