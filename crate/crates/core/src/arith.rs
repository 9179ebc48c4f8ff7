//! Exact scalar and vector arithmetic: arbitrary-precision integers,
//! rationals, Gaussian rationals and integer lattice vectors.
//!
//! Rationals are kept in reduced form with positive denominator (the
//! underlying representation guarantees both), serialize as `"p/q"` (or
//! `"p"` when the denominator is 1) and Gaussian rationals as a two-element
//! array `[re, im]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("cannot make the zero vector primitive")]
    ZeroVector,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
}

/// Parse an exact rational from `"p/q"` or `"p"`.
pub fn rat_from_str(s: &str) -> Result<Rat, ArithError> {
    Rat::from_str(s.trim()).map_err(|_| ArithError::BadRational(s.to_string()))
}

/// Render a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// A Gaussian rational `re + im·i`, the exact scalar field for parameters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::from_rat(Rat::from_integer(Int::from(n)))
    }

    /// Parse from a `[re, im]` string pair.
    pub fn from_parts(re: &str, im: &str) -> Result<Self, ArithError> {
        Ok(GaussRat { re: rat_from_str(re)?, im: rat_from_str(im)? })
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²`; zero only for the zero element.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(GaussRat { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = GaussRat::from_int(1);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, k: &Int) -> Self {
        let k = Rat::from_integer(k.clone());
        GaussRat { re: &self.re * &k, im: &self.im * &k }
    }
}

/// True when `z` is an ordinary integer (zero imaginary part, denominator 1).
pub fn is_integer(z: &GaussRat) -> bool {
    z.im.is_zero() && z.re.is_integer()
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [rat_to_string(&self.re), rat_to_string(&self.im)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts: [String; 2] = Deserialize::deserialize(d)?;
        GaussRat::from_parts(&parts[0], &parts[1]).map_err(D::Error::custom)
    }
}

/// An integer vector in the exponent/conormal lattice ℤ^d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(pub Vec<Int>);

impl IntVec {
    pub fn zero(dim: usize) -> Self {
        IntVec(vec![Int::zero(); dim])
    }

    pub fn from_i64(v: &[i64]) -> Self {
        IntVec(v.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, rhs: &IntVec) -> Int {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a * b).sum()
    }

    /// Pair with a Gaussian-rational vector of the same length.
    pub fn dot_gauss(&self, rhs: &[GaussRat]) -> GaussRat {
        debug_assert_eq!(self.dim(), rhs.len());
        let mut acc = GaussRat::default();
        for (a, b) in self.0.iter().zip(rhs) {
            acc = &acc + &b.scale(a);
        }
        acc
    }

    pub fn add(&self, rhs: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: &Int) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    /// Concatenate two blocks, e.g. an exponent block and a level block.
    pub fn concat(&self, rhs: &IntVec) -> IntVec {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        IntVec(v)
    }
}

impl AddAssign<&IntVec> for IntVec {
    fn add_assign(&mut self, rhs: &IntVec) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

// Entries serialize as JSON numbers when they fit in i64 (desk scale always
// does) and as decimal strings otherwise, so no precision is ever lost.
impl Serialize for IntVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for a in &self.0 {
            match i64::try_from(a) {
                Ok(n) => seq.serialize_element(&n)?,
                Err(_) => seq.serialize_element(&a.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Num(i64),
            Big(String),
        }
        let raw: Vec<Entry> = Deserialize::deserialize(d)?;
        let mut v = Vec::with_capacity(raw.len());
        for e in raw {
            match e {
                Entry::Num(n) => v.push(Int::from(n)),
                Entry::Big(s) => {
                    v.push(Int::from_str(&s).map_err(|_| {
                        D::Error::custom(format!("invalid integer literal `{s}`"))
                    })?)
                }
            }
        }
        Ok(IntVec(v))
    }
}

/// Divide out the gcd of the entries, keeping the direction.
///
/// The result is fixed under repeated application and under positive integer
/// scaling of the input. The zero vector has no direction and is rejected.
pub fn primitive_vector(v: &IntVec) -> Result<IntVec, ArithError> {
    if v.is_zero() {
        return Err(ArithError::ZeroVector);
    }
    let mut g = Int::zero();
    for a in &v.0 {
        g = num_integer::gcd(g, a.abs());
    }
    Ok(IntVec(v.0.iter().map(|a| a / &g).collect()))
}
