#![allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The three coefficient rings used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Integer,
    IntegerMod2,
    Rational,
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientDomain::Integer => "ZZ",
            CoefficientDomain::IntegerMod2 => "ZZ/2",
            CoefficientDomain::Rational => "QQ",
        })
    }
}

/// Exact commutative coefficient ring.
///
/// The domain is fixed by the type, so two polynomials can only be combined
/// when their coefficient types agree. Cross-domain maps go through
/// [`Coefficient::from_bigint`] or the explicit conversions on `Polynomial`.
pub trait Coefficient:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    const DOMAIN: CoefficientDomain;

    /// Image of an integer under the canonical map from ZZ.
    fn from_bigint(value: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_bigint(&BigInt::from(value))
    }

    /// Sign used by the text renderer; always false in characteristic 2.
    fn is_negative(&self) -> bool;

    /// Parses the decimal rendering produced by `Display`.
    fn parse_coefficient(text: &str) -> Option<Self>;

    /// Image of a rational number, when it lies in this ring.
    fn from_rational(value: &BigRational) -> Option<Self>;
}

/// Coefficient rings in which every nonzero element is invertible.
pub trait FieldCoefficient: Coefficient {
    fn inv(&self) -> Self;
}

impl Coefficient for BigInt {
    const DOMAIN: CoefficientDomain = CoefficientDomain::Integer;

    fn from_bigint(value: &BigInt) -> Self {
        value.clone()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn parse_coefficient(text: &str) -> Option<Self> {
        BigInt::from_str(text.trim()).ok()
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        value.is_integer().then(|| value.to_integer())
    }
}

impl Coefficient for BigRational {
    const DOMAIN: CoefficientDomain = CoefficientDomain::Rational;

    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn parse_coefficient(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((num, den)) => {
                let num = BigInt::from_str(num.trim()).ok()?;
                let den = BigInt::from_str(den.trim()).ok()?;
                if den.is_zero() {
                    None
                } else {
                    Some(BigRational::new(num, den))
                }
            }
            None => BigInt::from_str(text).ok().map(BigRational::from_integer),
        }
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }
}

impl FieldCoefficient for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Element of the two-element field, stored as its canonical representative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub fn new(bit: bool) -> Self {
        Gf2(bit)
    }

    pub fn bit(self) -> bool {
        self.0
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(true)
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Add<&Gf2> for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: &Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub<&Gf2> for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: &Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Mul<&Gf2> for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: &Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl AddAssign<&Gf2> for Gf2 {
    fn add_assign(&mut self, rhs: &Gf2) {
        self.0 ^= rhs.0;
    }
}

impl SubAssign<&Gf2> for Gf2 {
    fn sub_assign(&mut self, rhs: &Gf2) {
        self.0 ^= rhs.0;
    }
}

impl MulAssign<&Gf2> for Gf2 {
    fn mul_assign(&mut self, rhs: &Gf2) {
        self.0 &= rhs.0;
    }
}

impl Coefficient for Gf2 {
    const DOMAIN: CoefficientDomain = CoefficientDomain::IntegerMod2;

    fn from_bigint(value: &BigInt) -> Self {
        Gf2(value.is_odd())
    }

    fn is_negative(&self) -> bool {
        false
    }

    fn parse_coefficient(text: &str) -> Option<Self> {
        BigInt::from_str(text.trim())
            .ok()
            .map(|v| Gf2::from_bigint(&v))
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        value
            .denom()
            .is_odd()
            .then(|| Gf2::from_bigint(value.numer()))
    }
}

impl FieldCoefficient for Gf2 {
    fn inv(&self) -> Self {
        assert!(self.0, "inverse of zero in GF(2)");
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_arithmetic() {
        assert_eq!(Gf2::ONE + Gf2::ONE, Gf2::ZERO);
        assert_eq!(Gf2::ONE * Gf2::ZERO, Gf2::ZERO);
        assert_eq!(-Gf2::ONE, Gf2::ONE);
        assert_eq!(Gf2::from_i64(-3), Gf2::ONE);
        assert_eq!(Gf2::from_i64(4), Gf2::ZERO);
    }

    #[test]
    fn rationals_are_reduced() {
        let q = BigRational::parse_coefficient("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(
            BigRational::parse_coefficient("7").unwrap().to_string(),
            "7"
        );
        assert!(BigRational::parse_coefficient("1/0").is_none());
    }
}
