//! Exact rational scalars.
//!
//! All coordinates, matrix entries and payments in this crate are
//! `Rational`s: arbitrary-precision fractions kept in lowest terms with a
//! positive denominator. Values enter the system as integer ratios
//! (`"-3/4"`) or decimal strings (`"0.25"`, `"1e3"`), never as binary
//! floats, and every arithmetic operation is exact.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Pow, Signed, Zero};

/// An exact rational number (lowest terms, positive denominator).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact quotient of two integers. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Exact quotient of two big integers. Panics if `den == 0`.
    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// `self / 2^k`, exact.
    pub fn div_pow2(&self, k: u32) -> Self {
        let two = BigInt::from(2);
        Rational(&self.0 / BigRational::from_integer(two.pow(k)))
    }

    /// `self * 2^k`, exact.
    pub fn mul_pow2(&self, k: u32) -> Self {
        let two = BigInt::from(2);
        Rational(&self.0 * BigRational::from_integer(two.pow(k)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Largest integer `n` with `n <= self`.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Fixed-point decimal rendering with `digits` fractional digits,
    /// rounding half away from zero. Deterministic across platforms; used by
    /// the SVG emitter, never for arithmetic.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        let negative = rounded.is_negative();
        let mag = rounded.abs();
        let (int_part, frac_part) = (mag.clone() / &scale, mag % &scale);
        let mut s = String::new();
        if negative && (!int_part.is_zero() || !frac_part.is_zero()) {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if digits > 0 {
            let frac = frac_part.to_string();
            s.push('.');
            for _ in frac.len()..digits as usize {
                s.push('0');
            }
            s.push_str(&frac);
        }
        s
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `"-3"`, `"3/4"`, `"0.25"` and `"2.5e-2"` exactly. Binary
    /// floats never appear: decimal digits are scaled by powers of ten.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseRationalError {
            literal: s.to_string(),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty string"));
        }
        if let Some((num, den)) = t.split_once('/') {
            let n: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
            let d: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        // Decimal with optional exponent: [sign] digits [. digits] [eE [sign] digits]
        let (mantissa, exp) = match t.split_once(['e', 'E']) {
            Some((m, e)) => {
                let exp: i32 = e.parse().map_err(|_| err("bad exponent"))?;
                (m, exp)
            }
            None => (t, 0),
        };
        let (int_text, frac_text) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_text.is_empty() && frac_text.is_empty() {
            return Err(err("no digits"));
        }
        let negative = int_text.starts_with('-');
        let int_digits = int_text.trim_start_matches(['+', '-']);
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_text.chars().all(|c| c.is_ascii_digit())
        {
            return Err(err("non-digit character"));
        }
        let digits = format!("{int_digits}{frac_text}");
        let digits = if digits.is_empty() { "0".into() } else { digits };
        let mut numer: BigInt = digits.parse().map_err(|_| err("bad digits"))?;
        if negative {
            numer = -numer;
        }
        let ten = BigInt::from(10);
        let shift = exp - frac_text.len() as i32;
        let value = if shift >= 0 {
            BigRational::from_integer(numer * ten.pow(shift as u32))
        } else {
            BigRational::new(numer, ten.pow((-shift) as u32))
        };
        Ok(Rational(value))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

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

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_integers_ratios_and_decimals() {
        assert_eq!(r("3"), Rational::from_int(3));
        assert_eq!(r("-3"), Rational::from_int(-3));
        assert_eq!(r("6/4"), Rational::ratio(3, 2));
        assert_eq!(r("3/-2"), Rational::ratio(-3, 2));
        assert_eq!(r("0.25"), Rational::ratio(1, 4));
        assert_eq!(r("-1.5"), Rational::ratio(-3, 2));
        assert_eq!(r("2.5e-2"), Rational::ratio(1, 40));
        assert_eq!(r("1e3"), Rational::from_int(1000));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
    }

    #[test]
    fn display_is_lowest_terms_and_reparses() {
        let v = r("6/4");
        assert_eq!(v.to_string(), "3/2");
        assert_eq!(r("4/2").to_string(), "2");
        assert_eq!(v.to_string().parse::<Rational>().unwrap(), v);
    }

    #[test]
    fn decimal_rendering_rounds_half_away_from_zero() {
        assert_eq!(r("1/2").to_decimal(0), "1");
        assert_eq!(r("-1/2").to_decimal(0), "-1");
        assert_eq!(r("1/3").to_decimal(3), "0.333");
        assert_eq!(r("5").to_decimal(2), "5.00");
        assert_eq!(r("-1/8").to_decimal(3), "-0.125");
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Rational::ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, Rational::one());
        assert_eq!(Rational::ratio(1, 4).mul_pow2(2), Rational::one());
        assert_eq!(Rational::one().div_pow2(3), Rational::ratio(1, 8));
    }
}
