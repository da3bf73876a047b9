//! Arbitrary-precision integers and rationals.
//!
//! `Rational` is kept in lowest terms with a positive denominator at all
//! times, so equality is structural and formatting is canonical. Decimal
//! rendering truncates toward zero and never goes through floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// Signed rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Normalizes `num/den` (gcd reduction, sign moved to the numerator).
    pub fn new(num: Integer, den: Integer) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// Literal constructor for small fractions; panics on a zero denominator.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::new(Integer::from(p), Integer::from(q)).expect("nonzero literal denominator")
    }

    pub fn from_integer(n: Integer) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents invert, so `0^-k` is an error.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(Pow::pow(self.0.clone(), exp)))
    }

    /// Renders `digits` fractional digits, truncating toward zero.
    ///
    /// `exact` is true iff nothing was discarded. The sign is omitted when
    /// every emitted digit is zero.
    pub fn to_decimal(&self, digits: usize) -> Decimal {
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();
        let int_part = &num / &den;
        let mut rem = &num % &den;
        let mut frac = String::new();
        if digits > 0 {
            let scale = Pow::pow(&Integer::from(10), digits as u32);
            let scaled = &rem * &scale;
            let frac_digits = &scaled / &den;
            rem = &scaled % &den;
            let s = frac_digits.to_string();
            frac.push_str(&"0".repeat(digits - s.len()));
            frac.push_str(&s);
        }
        let exact = rem.is_zero();
        let all_zero = int_part.is_zero() && frac.bytes().all(|b| b == b'0');
        let sign = if self.is_negative() && !all_zero { "-" } else { "" };
        let text = if digits > 0 {
            format!("{sign}{int_part}.{frac}")
        } else {
            format!("{sign}{int_part}")
        };
        Decimal { text, exact }
    }
}

/// Truncated decimal rendering of a rational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decimal {
    pub text: String,
    pub exact: bool,
}

macro_rules! rational_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(Integer::from(n))
            }
        }
    )*};
}
rational_from_int!(i32, i64, u32, u64, usize);

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! rational_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $Op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
// Division panics on a zero divisor (like the primitive integer types);
// use `checked_div` on values that may be zero.
rational_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with an optional leading minus.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (num_s, den_s) = match t.split_once('/') {
            Some((a, b)) => (a, b),
            None => (t, "1"),
        };
        let num =
            Integer::from_str(num_s.trim()).map_err(|_| Error::ParseRational(s.to_string()))?;
        let den =
            Integer::from_str(den_s.trim()).map_err(|_| Error::ParseRational(s.to_string()))?;
        Self::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_reduces_and_fixes_sign() {
        let r = Rational::new(Integer::from(2), Integer::from(4)).unwrap();
        assert_eq!(r, Rational::ratio(1, 2));
        assert_eq!(r.numer(), &Integer::from(1));
        assert_eq!(r.denom(), &Integer::from(2));

        let r = Rational::new(Integer::from(-3), Integer::from(-6)).unwrap();
        assert_eq!(r, Rational::ratio(1, 2));

        let r = Rational::new(Integer::from(3), Integer::from(-6)).unwrap();
        assert!(r.is_negative());
        assert_eq!(r.denom(), &Integer::from(2));

        let r = Rational::new(Integer::from(0), Integer::from(7)).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.denom(), &Integer::from(1));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(
            Rational::new(Integer::from(1), Integer::from(0)),
            Err(Error::DivisionByZero)
        );
        assert_eq!("1/0".parse::<Rational>(), Err(Error::DivisionByZero));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            Rational::ratio(1, 2) + Rational::ratio(1, 3),
            Rational::ratio(5, 6)
        );
        assert_eq!(
            Rational::ratio(1, 12) * Rational::from(720),
            Rational::from(60)
        );
        assert_eq!(Rational::ratio(-1, 2).pow(2).unwrap(), Rational::ratio(1, 4));
        assert_eq!(
            Rational::ratio(2, 3).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Rational::zero().pow(-1), Err(Error::DivisionByZero));
        assert_eq!(Rational::ratio(2, 3).pow(-2).unwrap(), Rational::ratio(9, 4));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        for r in [
            Rational::ratio(2, 3),
            Rational::ratio(-7, 5),
            Rational::from(3),
        ] {
            let mut acc = Rational::one();
            for e in 0..=16 {
                assert_eq!(r.pow(e).unwrap(), acc, "exponent {e}");
                acc = &acc * &r;
            }
        }
    }

    #[test]
    fn decimal_rendering_truncates_toward_zero() {
        let d = Rational::ratio(1, 2).to_decimal(3);
        assert_eq!(d.text, "0.500");
        assert!(d.exact);

        let d = Rational::ratio(-1, 3).to_decimal(4);
        assert_eq!(d.text, "-0.3333");
        assert!(!d.exact);

        let d = Rational::ratio(7, 2).to_decimal(0);
        assert_eq!(d.text, "3");
        assert!(!d.exact);

        // Magnitude below the last digit truncates to an unsigned zero.
        let d = Rational::ratio(-1, 10_000).to_decimal(3);
        assert_eq!(d.text, "0.000");
        assert!(!d.exact);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["1", "-1/2", "33953/90", "0", "-83"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // Non-canonical input parses to canonical form.
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!(" -2 / 4 ".parse::<Rational>().unwrap() == Rational::ratio(-1, 2));
        assert!(matches!(
            "a/b".parse::<Rational>(),
            Err(Error::ParseRational(_))
        ));
    }
}
