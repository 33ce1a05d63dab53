//! Coefficient fields: prime fields with a runtime modulus and exact rationals.
//!
//! All polynomial and matrix code is generic over [`FieldScalar`]; the two
//! implementations are [`Fp`] and [`Rat`]. Arithmetic is exact everywhere,
//! there is no floating point in this crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Ground field selector as it appears in spec files: `"fp:5"` or `"q"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Fp(u64),
    Rationals,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| FieldError::BadFieldSpec(s.to_string()))?;
            if !is_prime(p) {
                return Err(FieldError::NotPrime(p));
            }
            return Ok(FieldSpec::Fp(p));
        }
        Err(FieldError::BadFieldSpec(s.to_string()))
    }

    pub fn char_is(&self, p: u64) -> bool {
        matches!(self, FieldSpec::Fp(q) if *q == p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// A scalar drawn from one of the supported exact fields.
///
/// Zero/one produced by the `num_traits` constructors carry no field context;
/// `Fp` resolves the context lazily when such a value first meets a bound
/// element. [`FieldScalar::embed`] is the context-aware constructor and is
/// what parsers use.
pub trait FieldScalar:
    Clone
    + PartialEq
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Canonical image of an integer in the field described by `spec`.
    fn embed(spec: &FieldSpec, n: &BigInt) -> Self;

    fn embed_i64(spec: &FieldSpec, n: i64) -> Self {
        Self::embed(spec, &BigInt::from(n))
    }

    /// Every element of the field, when the field is finite.
    fn enumerate(spec: &FieldSpec) -> Option<Vec<Self>>;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Checks the scalar is an element of the field described by `spec`.
    fn belongs_to(&self, spec: &FieldSpec) -> bool;
}

/// Element of a prime field with the modulus carried alongside the residue.
///
/// `modulus == 0` marks an integer constant that has not met a bound element
/// yet (the result of `Fp::zero()` / `Fp::one()` in generic code); any binary
/// operation against a bound element reduces it on the spot.
#[derive(Debug, Clone, Copy)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Fp {
            value: value.rem_euclid(modulus as i64),
            modulus,
        }
    }

    pub fn residue(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn bind(&self, modulus: u64) -> Fp {
        if self.modulus == 0 {
            Fp::new(self.value, modulus)
        } else {
            debug_assert_eq!(self.modulus, modulus, "mixed prime fields");
            *self
        }
    }

    fn unify(a: Fp, b: Fp) -> (Fp, Fp, u64) {
        let m = match (a.modulus, b.modulus) {
            (0, 0) => 0,
            (0, m) | (m, 0) => m,
            (m1, m2) => {
                assert_eq!(m1, m2, "mixed prime fields: {m1} vs {m2}");
                m1
            }
        };
        if m == 0 {
            (a, b, 0)
        } else {
            (a.bind(m), b.bind(m), m)
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Fp::unify(*self, *other);
        a.value == b.value
    }
}

impl Eq for Fp {}

impl PartialOrd for Fp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fp {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Fp::unify(*self, *other);
        a.value.cmp(&b.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, m) = Fp::unify(self, rhs);
        if m == 0 {
            Fp {
                value: a.value.checked_add(b.value).expect("unbound Fp overflow"),
                modulus: 0,
            }
        } else {
            Fp::new(a.value + b.value, m)
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.modulus == 0 {
            Fp {
                value: -self.value,
                modulus: 0,
            }
        } else {
            Fp::new(-self.value, self.modulus)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, m) = Fp::unify(self, rhs);
        if m == 0 {
            Fp {
                value: a.value.checked_mul(b.value).expect("unbound Fp overflow"),
                modulus: 0,
            }
        } else {
            let prod = (a.value as i128) * (b.value as i128);
            Fp::new((prod % m as i128) as i64, m)
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
}

impl FieldScalar for Fp {
    fn embed(spec: &FieldSpec, n: &BigInt) -> Self {
        match spec {
            FieldSpec::Fp(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                Fp::new(i64::try_from(r).expect("residue fits i64"), *p)
            }
            FieldSpec::Rationals => panic!("Fp scalar requested for the rational field"),
        }
    }

    fn enumerate(spec: &FieldSpec) -> Option<Vec<Self>> {
        match spec {
            FieldSpec::Fp(p) => Some((0..*p as i64).map(|v| Fp::new(v, *p)).collect()),
            FieldSpec::Rationals => None,
        }
    }

    fn inv(&self) -> Self {
        assert!(self.modulus >= 2, "cannot invert an unbound Fp constant");
        assert!(self.value != 0, "division by zero in Fp");
        // extended Euclid
        let (mut r0, mut r1) = (self.modulus as i64, self.value);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        Fp::new(t0, self.modulus)
    }

    fn belongs_to(&self, spec: &FieldSpec) -> bool {
        match spec {
            FieldSpec::Fp(p) => self.modulus == 0 || self.modulus == *p,
            FieldSpec::Rationals => false,
        }
    }
}

impl FieldScalar for Rat {
    fn embed(spec: &FieldSpec, n: &BigInt) -> Self {
        match spec {
            FieldSpec::Rationals => BigRational::from_integer(n.clone()),
            FieldSpec::Fp(_) => panic!("rational scalar requested for a prime field"),
        }
    }

    fn enumerate(_spec: &FieldSpec) -> Option<Vec<Self>> {
        None
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q");
        self.recip()
    }

    fn belongs_to(&self, spec: &FieldSpec) -> bool {
        matches!(spec, FieldSpec::Rationals)
    }
}

/// Deterministic rendering used in reports and witness payloads.
pub fn scalar_report_string<K: FieldScalar>(x: &K) -> String {
    format!("{x}")
}

/// Renders a rational as a `{num, den}` JSON object with the sign on the
/// numerator. Values outside i64 fall back to decimal strings.
pub fn ratio_json(r: &BigRational) -> serde_json::Value {
    let num = r.numer();
    let den = r.denom();
    let to_val = |n: &BigInt| -> serde_json::Value {
        match i64::try_from(n.clone()) {
            Ok(v) => serde_json::json!(v),
            Err(_) => serde_json::json!(n.to_string()),
        }
    };
    debug_assert!(den.is_positive());
    serde_json::json!({ "num": to_val(num), "den": to_val(den) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("fp:5").unwrap(), FieldSpec::Fp(5));
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert!(matches!(
            FieldSpec::parse("fp:6"),
            Err(FieldError::NotPrime(6))
        ));
        assert!(FieldSpec::parse("fp:x").is_err());
        assert!(FieldSpec::parse("r64").is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let spec = FieldSpec::Fp(7);
        let a = Fp::embed_i64(&spec, 10); // 3
        let b = Fp::embed_i64(&spec, -1); // 6
        assert_eq!((a + b).residue(), 2);
        assert_eq!((a * b).residue(), 4);
        assert_eq!((a - b).residue(), 4);
        assert_eq!(a.inv().residue(), 5); // 3*5 = 15 = 1 mod 7
        assert_eq!((a / a).residue(), 1);
    }

    #[test]
    fn fp_unbound_constants_bind_on_contact() {
        let spec = FieldSpec::Fp(5);
        let bound = Fp::embed_i64(&spec, 3);
        let z = Fp::zero();
        assert!(z.is_zero());
        assert_eq!((z + bound).residue(), 3);
        assert_eq!((Fp::one() + bound).residue(), 4);
        assert_eq!(Fp::one() + Fp::one(), Fp::embed_i64(&FieldSpec::Fp(5), 7));
    }

    #[test]
    fn rational_embed() {
        let spec = FieldSpec::Rationals;
        let x = Rat::embed_i64(&spec, -3);
        assert_eq!(x + Rat::one(), Rat::embed_i64(&spec, -2));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }
}
