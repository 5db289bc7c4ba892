//! Exact slopes and their classes in Q/Z.
//!
//! Every slope invariant is a rational number. The first invariant of a
//! cabling sequence is instead recorded as the class of its reciprocal
//! modulo the integers (the simple slope), written in brackets: `[2/3]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (numerator.into(), denominator.into());
        if d.is_zero() {
            return Err(Error::ZeroDenominator {
                numerator: n.to_string(),
            });
        }
        Ok(Self(BigRational::new(n, d)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroSlope);
        }
        Ok(Self(self.0.recip()))
    }

    /// The integer part, rounded toward negative infinity.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }
}

/// Builds the canonical reduced fraction `n/d`.
pub fn reduce(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(n, d)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::integer(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::SlopeParse(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => t
                .parse::<BigInt>()
                .map(Rational::integer)
                .map_err(|_| bad()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element of Q/Z, stored as its unique representative in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlopeClass(Rational);

impl SlopeClass {
    pub fn representative(&self) -> &Rational {
        &self.0
    }
}

impl Neg for &SlopeClass {
    type Output = SlopeClass;
    fn neg(self) -> SlopeClass {
        mod_one(&-&self.0)
    }
}

impl Add for &SlopeClass {
    type Output = SlopeClass;
    fn add(self, rhs: &SlopeClass) -> SlopeClass {
        mod_one(&(&self.0 + &rhs.0))
    }
}

impl fmt::Display for SlopeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl FromStr for SlopeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::SlopeParse(s.to_string()))?;
        Ok(mod_one(&inner.parse()?))
    }
}

impl Serialize for SlopeClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The class of `slope` in Q/Z.
pub fn mod_one(slope: &Rational) -> SlopeClass {
    let shifted = slope - &Rational::integer(slope.floor());
    SlopeClass(shifted)
}

/// The simple slope: the class of `1/slope` in Q/Z.
pub fn simple_slope(slope: &Rational) -> Result<SlopeClass> {
    Ok(mod_one(&slope.recip()?))
}

/// A slope pair `[a, b]`, kept unreduced; its slope is `b/a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SlopePair {
    #[serde(serialize_with = "ser_bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub b: BigInt,
}

impl SlopePair {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    /// `b/a`, or `None` for the pair `[0, b]`.
    pub fn slope(&self) -> Option<Rational> {
        Rational::new(self.b.clone(), self.a.clone()).ok()
    }
}

impl fmt::Display for SlopePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

pub(crate) fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduce_normalizes_sign_and_gcd() {
        assert_eq!(reduce(-19, 1).unwrap().to_string(), "-19");
        assert_eq!(reduce(2, -4).unwrap(), q(-1, 2));
        // gamma slope pair ratio (1 + n m)/n with n = -1, m = -18
        assert_eq!(
            reduce(1 + (-1) * (-18), -1).unwrap(),
            Rational::integer(-19)
        );
        assert_eq!(reduce(6, 4).unwrap().to_string(), "3/2");
    }

    #[test]
    fn reduce_rejects_zero_denominator() {
        assert!(matches!(reduce(3, 0), Err(Error::ZeroDenominator { .. })));
    }

    #[test]
    fn simple_slopes() {
        assert_eq!(
            simple_slope(&Rational::integer(-3)).unwrap().to_string(),
            "[2/3]"
        );
        assert_eq!(
            simple_slope(&Rational::integer(3)).unwrap().to_string(),
            "[1/3]"
        );
        assert_eq!(simple_slope(&q(13, 2)).unwrap().to_string(), "[2/13]");
        assert_eq!(simple_slope(&Rational::zero()), Err(Error::ZeroSlope));
    }

    #[test]
    fn mod_one_examples() {
        assert_eq!(mod_one(&q(2, 3)).to_string(), "[2/3]");
        assert_eq!(mod_one(&q(-1, 3)).to_string(), "[2/3]");
        assert_eq!(mod_one(&Rational::integer(5)).to_string(), "[0]");
    }

    #[test]
    fn rendering() {
        assert_eq!(q(13, 2).to_string(), "13/2");
        assert_eq!(Rational::integer(-19).to_string(), "-19");
        assert_eq!(SlopePair::new(-1, 19).to_string(), "[-1,19]");
    }

    #[test]
    fn parsing() {
        assert_eq!("13/2".parse::<Rational>().unwrap(), q(13, 2));
        assert_eq!("-19".parse::<Rational>().unwrap(), Rational::integer(-19));
        assert_eq!("[-1/3]".parse::<SlopeClass>().unwrap().to_string(), "[2/3]");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("[1/3".parse::<SlopeClass>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn mirror_classes_cancel() {
        let a = simple_slope(&Rational::integer(-3)).unwrap();
        let b = simple_slope(&Rational::integer(3)).unwrap();
        assert_eq!((&a + &b).to_string(), "[0]");
        assert_eq!(-&a, b);
    }

    #[test]
    fn slope_pair_keeps_common_factor() {
        let pair = SlopePair::new(2, 4);
        assert_eq!(pair.a, BigInt::from(2));
        assert_eq!(pair.slope(), Some(Rational::integer(2)));
        assert_eq!(SlopePair::new(0, 1).slope(), None);
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn simple_slope_is_mod_one_of_reciprocal(x in rational()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(simple_slope(&x).unwrap(), mod_one(&x.recip().unwrap()));
        }

        #[test]
        fn mod_one_is_periodic(x in rational(), k in -1000i64..1000) {
            let shifted = x.clone() + Rational::integer(k);
            prop_assert_eq!(mod_one(&x), mod_one(&shifted));
            let rep = mod_one(&x).representative().clone();
            prop_assert!(rep >= Rational::zero() && rep < Rational::integer(1));
        }

        #[test]
        fn reduce_is_idempotent(n in -10_000i64..10_000, d in -500i64..500) {
            prop_assume!(d != 0);
            let r = reduce(n, d).unwrap();
            prop_assert_eq!(reduce(r.numerator().clone(), r.denominator().clone()).unwrap(), r.clone());
            prop_assert!(r.denominator() > &BigInt::from(0));
        }

        #[test]
        fn negated_simple_slope(x in rational()) {
            prop_assume!(!x.is_zero());
            let neg = simple_slope(&-&x).unwrap();
            prop_assert_eq!(&neg, &mod_one(&-&x.recip().unwrap()));
            let total = &neg + &simple_slope(&x).unwrap();
            prop_assert_eq!(total.representative(), &Rational::zero());
        }
    }
}
