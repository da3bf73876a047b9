//! Truncated formal power series with exact rational coefficients.
//!
//! A `Series` stores the coefficients of `x^0 .. x^order` and represents its
//! value modulo `x^(order+1)`. Binary operations truncate to the smaller
//! operand order, so every stored coefficient of a result is trustworthy.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Rational>,
}

/// Order of the first nonzero coefficient.
///
/// `AtLeast(k)` reports that every stored coefficient vanishes, so the true
/// order of vanishing is at least `k` (which is always `order + 1`); the
/// series may still be identically zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(usize),
    AtLeast(usize),
}

impl Valuation {
    /// True when the order of vanishing is certified to be `>= bound`.
    pub fn meets(&self, bound: usize) -> bool {
        match self {
            Valuation::Finite(k) | Valuation::AtLeast(k) => *k >= bound,
        }
    }
}

impl Series {
    /// `coeffs[i]` is the coefficient of `x^i`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        for i in 0..=order {
            coeffs.push(p.coeff(i));
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; panics past the truncation order, because such a
    /// read would silently treat unknown coefficients as zero.
    pub fn coeff(&self, i: usize) -> Rational {
        assert!(
            i < self.coeffs.len(),
            "coefficient {i} beyond truncation order {}",
            self.order()
        );
        self.coeffs[i].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Truncation to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Series {
        let n = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add_rational(&self, c: &Rational) -> Series {
        let mut out = self.clone();
        out.coeffs[0] = &out.coeffs[0] + c;
        out
    }

    pub fn mul_rational(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product with a polynomial, truncated at `self.order()`.
    pub fn mul_poly(&self, p: &Poly) -> Series {
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in p.coeffs().iter().enumerate() {
            if i > order {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse modulo `x^(order+1)`; the constant term must be
    /// nonzero.
    pub fn reciprocal(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].recip()?;
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(-(&inv0 * &acc));
        }
        Ok(Series { coeffs: out })
    }

    /// Quotient truncated to the smaller operand order; the divisor needs a
    /// nonzero constant term.
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        Ok(self * &rhs.reciprocal()?)
    }

    /// Divides by `x`: requires a zero constant term and positive order.
    pub fn div_x(&self) -> Series {
        assert!(
            self.coeffs[0].is_zero(),
            "division by x needs a zero constant term"
        );
        assert!(self.order() >= 1, "division by x needs positive order");
        Series {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Valuation::Finite(k),
            None => Valuation::AtLeast(self.order() + 1),
        }
    }
}

fn binop(a: &Series, b: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
    let n = a.order().min(b.order());
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        out.push(f(&a.coeffs[i], &b.coeffs[i]));
    }
    Series { coeffs: out }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        binop(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        binop(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Series { coeffs: out }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! series_binop_forward {
    ($Op:ident, $method:ident) => {
        impl $Op for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
        impl $Op<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                (&self).$method(rhs)
            }
        }
        impl $Op<Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                self.$method(&rhs)
            }
        }
    };
}
series_binop_forward!(Add, add);
series_binop_forward!(Sub, sub);
series_binop_forward!(Mul, mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

/// Catalog of textbook Taylor expansions used as independent references.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StockSeries {
    /// e^x
    Exp,
    /// (e^x - 1)/x
    Expm1OverX,
    /// log(1+x)
    Log1p,
    /// log(1+x)/x
    Log1pOverX,
    /// cosh x
    Cosh,
    /// sinh(x)/x
    SinhOverX,
    /// arctan(x)/x
    ArctanOverX,
    /// 1/(1-x)
    Geom,
    /// tanh(x/2), realized as sinh(x/2)/cosh(x/2)
    TanhHalf,
}

pub fn stock_series(kind: StockSeries, order: usize) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    match kind {
        StockSeries::Exp => {
            let mut c = Rational::one();
            coeffs[0] = c.clone();
            for n in 1..=order {
                c = c / Rational::from(n);
                coeffs[n] = c.clone();
            }
        }
        StockSeries::Expm1OverX => {
            // coefficient of x^n is 1/(n+1)!
            let mut c = Rational::one();
            coeffs[0] = c.clone();
            for n in 1..=order {
                c = c / Rational::from(n + 1);
                coeffs[n] = c.clone();
            }
        }
        StockSeries::Log1p => {
            for n in 1..=order {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                coeffs[n] = Rational::ratio(sign, n as i64);
            }
        }
        StockSeries::Log1pOverX => {
            for (n, c) in coeffs.iter_mut().enumerate() {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                *c = Rational::ratio(sign, n as i64 + 1);
            }
        }
        StockSeries::Cosh => {
            let mut c = Rational::one();
            coeffs[0] = c.clone();
            let mut k = 0usize;
            while k + 2 <= order {
                k += 2;
                c = c / Rational::from((k - 1) * k);
                coeffs[k] = c.clone();
            }
        }
        StockSeries::SinhOverX => {
            // coefficient of x^(2k) is 1/(2k+1)!
            let mut c = Rational::one();
            coeffs[0] = c.clone();
            let mut k = 0usize;
            while k + 2 <= order {
                k += 2;
                c = c / Rational::from(k * (k + 1));
                coeffs[k] = c.clone();
            }
        }
        StockSeries::ArctanOverX => {
            let mut k = 0usize;
            loop {
                let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                coeffs[k] = Rational::ratio(sign, k as i64 + 1);
                if k + 2 > order {
                    break;
                }
                k += 2;
            }
        }
        StockSeries::Geom => {
            for c in coeffs.iter_mut() {
                *c = Rational::one();
            }
        }
        StockSeries::TanhHalf => {
            let half = Rational::ratio(1, 2);
            let mut sinh_half = vec![Rational::zero(); order + 1];
            let mut cosh_half = vec![Rational::zero(); order + 1];
            // x^n / (2^n n!) split by parity
            let mut c = Rational::one();
            for (n, value) in std::iter::once(Rational::one())
                .chain((1..=order).map(|n| {
                    c = &c * &half / Rational::from(n);
                    c.clone()
                }))
                .enumerate()
            {
                if n % 2 == 0 {
                    cosh_half[n] = value;
                } else {
                    sinh_half[n] = value;
                }
            }
            return Series::from_coeffs(sinh_half)
                .div(&Series::from_coeffs(cosh_half))
                .expect("cosh(x/2) has unit constant term");
        }
    }
    Series { coeffs }
}
