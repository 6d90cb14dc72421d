//! Exact field arithmetic over ℚ and F_p, and dense linear algebra over
//! those fields.
//!
//! Field elements are [`Scalar`]s. A scalar carries enough information to
//! do arithmetic on its own (a prime-field element knows its modulus), but
//! creating one from nothing requires a [`FieldSpec`].

mod matrix;

pub use matrix::CoeffMatrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Largest accepted characteristic (exclusive).
    pub const MAX_CHARACTERISTIC: u32 = 1 << 16;

    pub fn prime(p: u32) -> Result<Self> {
        if !(2..Self::MAX_CHARACTERISTIC).contains(&p) {
            return Err(Error::Argument(format!(
                "characteristic {p} outside [2, {})",
                Self::MAX_CHARACTERISTIC
            )));
        }
        if !is_prime(p) {
            return Err(Error::Argument(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Modular {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den`, failing when `den` vanishes in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::Coefficient {
                field: self.to_string(),
                value: format!("{num}/{den}"),
            });
        }
        Ok(self.from_bigint(num).div(&d))
    }

    /// Every element of a prime field, in increasing residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..p as i64).map(|v| self.from_int(v)).collect()),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldSpec::Rationals, Scalar::Rational(_))
        ) || matches!((self, s), (FieldSpec::Prime(p), Scalar::Modular { modulus, .. }) if p == modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "qq"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("qq") || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u32 = p
                .trim()
                .parse()
                .map_err(|_| Error::Argument(format!("bad modulus in field spec `{s}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Argument(format!("unknown field `{s}` (expected qq or fp:<p>)")))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of ℚ or of F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv()
    }

    fn binop(
        &self,
        other: &Scalar,
        q: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        m: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(q(a, b)),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: p2 },
            ) if p == p2 => Scalar::Modular {
                value: m(*a as u64, *b as u64, *p as u64) as u32,
                modulus: *p,
            },
            _ => panic!("arithmetic across fields: {self:?} and {other:?}"),
        }
    }
}

fn pow_mod(base: u32, mut exp: u32, modulus: u32) -> u32 {
    let m = modulus as u64;
    let mut b = base as u64 % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// True for a rational with negative value; prime-field elements are
    /// never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_validation() {
        assert!(FieldSpec::prime(5).is_ok());
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(65537).is_err());
        assert!(FieldSpec::prime(65521).is_ok());
    }

    #[test]
    fn modular_inverse() {
        let f = FieldSpec::Prime(7);
        for v in 1..7 {
            let x = f.from_int(v);
            assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn ratio_rejects_vanishing_denominator() {
        let f = FieldSpec::Prime(2);
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).is_err());
        let q = FieldSpec::Rationals;
        let half = q.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("qq".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("fp:5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!("fp:6".parse::<FieldSpec>().is_err());
        assert!("zz".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn negative_integers_reduce() {
        let f = FieldSpec::Prime(5);
        assert_eq!(f.from_int(-2), f.from_int(3));
    }
}
