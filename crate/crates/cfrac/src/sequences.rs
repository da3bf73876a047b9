//! Integer and rational sequence generators.
//!
//! These serve two roles: they feed the continued-fraction builders
//! (hypergeometric coefficient streams, generalized factorials) and they act
//! as independent oracles for cross-checking (classical number sequences
//! computed from textbook Taylor expansions, the Möbius function from a
//! linear sieve, and an error-bounded partial-sum route to 1/ζ(s)).

use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::numerics::{Integer, Rational};
use crate::series::{stock_series, Series, StockSeries};

pub fn factorial(n: u64) -> Integer {
    let mut acc = Integer::from(1);
    for k in 2..=n {
        acc *= Integer::from(k);
    }
    acc
}

/// `n!! = n (n-2) (n-4) ...` down to 1 or 2; `0!! = 1`.
pub fn double_factorial(n: u64) -> Integer {
    let mut acc = Integer::from(1);
    let mut k = n;
    while k >= 2 {
        acc *= Integer::from(k);
        k -= 2;
    }
    acc
}

/// Generalized falling factorial `(x|r)_n = x (x-r) (x-2r) ... (x-(n-1)r)`,
/// with the empty product equal to 1.
pub fn falling(x: &Rational, r: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc = &acc * &term;
        term = &term - r;
    }
    acc
}

/// Generalized rising factorial `(x|r)^(n) = x (x+r) (x+2r) ... (x+(n-1)r)`.
pub fn rising(x: &Rational, r: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc = &acc * &term;
        term = &term + r;
    }
    acc
}

/// Coefficient stream `(1 - N lambda | lambda)_k / (N+k)_k` as a series.
///
/// Its reciprocal generates the lambda-deformed Bernoulli-type numbers; at
/// `lambda = 0` the coefficients reduce to `N!/(N+k)!`.
pub fn hyp2f1_bernoulli(n: u32, lambda: &Rational, order: usize) -> Series {
    let one = Rational::one();
    let start = &one - &(Rational::from(n) * lambda);
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order as u64 {
        let num = falling(&start, lambda, k);
        let den = falling(&Rational::from(u64::from(n) + k), &one, k);
        coeffs.push(num / den);
    }
    Series::from_coeffs(coeffs)
}

/// Coefficient stream `(lambda - N)_k N! / (N+k)!` as a series.
///
/// Its reciprocal generates the lambda-deformed Cauchy-type numbers; at
/// `lambda = 0` it is the Taylor expansion of `log(1+x)/x` when `N = 1`.
pub fn hyp2f1_cauchy(n: u32, lambda: &Rational, order: usize) -> Series {
    let one = Rational::one();
    let start = lambda - &Rational::from(n);
    let n_fact = Rational::from_integer(factorial(u64::from(n)));
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order as u64 {
        let num = &falling(&start, &one, k) * &n_fact;
        let den = Rational::from_integer(factorial(u64::from(n) + k));
        coeffs.push(num / den);
    }
    Series::from_coeffs(coeffs)
}

/// Even coefficient stream `(2N)! x^(2k) / (2N+2k)!` as a series (odd slots
/// zero). Its reciprocal generates the Euler-type numbers of the first kind.
pub fn hyp1f2_euler(n: u32, order: usize) -> Series {
    let base = factorial(2 * u64::from(n));
    even_factorial_stream(base, 2 * u64::from(n), order)
}

/// Even coefficient stream `(2N+1)! x^(2k) / (2N+2k+1)!`; its reciprocal
/// generates the complementary Euler-type numbers (second kind).
pub fn hyp1f2_euler_second(n: u32, order: usize) -> Series {
    let base = factorial(2 * u64::from(n) + 1);
    even_factorial_stream(base, 2 * u64::from(n) + 1, order)
}

/// Shared even-degree stream `base / (offset + 2k)!` scaled so k = 0 gives 1.
fn even_factorial_stream(base: Integer, offset: u64, order: usize) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut den = base.clone();
    coeffs[0] = Rational::one();
    let mut k = 0usize;
    while k + 2 <= order {
        k += 2;
        let m = offset + k as u64;
        den *= Integer::from(m - 1) * Integer::from(m);
        coeffs[k] = Rational::from_integer(base.clone()) / Rational::from_integer(den.clone());
    }
    Series::from_coeffs(coeffs)
}

/// Bernoulli numbers `B_0..B_count` via `n! [x^n] x/(e^x - 1)`.
pub fn bernoulli_numbers(count: usize) -> Vec<Rational> {
    scaled_reciprocal_coeffs(stock_series(StockSeries::Expm1OverX, count))
}

/// Cauchy numbers `c_0..c_count` via `n! [x^n] x/log(1+x)`.
pub fn cauchy_numbers(count: usize) -> Vec<Rational> {
    scaled_reciprocal_coeffs(stock_series(StockSeries::Log1pOverX, count))
}

/// Euler numbers `E_0..E_count` via `n! [x^n] 1/cosh(x)`.
pub fn euler_numbers(count: usize) -> Vec<Rational> {
    scaled_reciprocal_coeffs(stock_series(StockSeries::Cosh, count))
}

/// Complementary Euler numbers via `n! [x^n] x/sinh(x)`.
pub fn euler_numbers_second(count: usize) -> Vec<Rational> {
    scaled_reciprocal_coeffs(stock_series(StockSeries::SinhOverX, count))
}

fn scaled_reciprocal_coeffs(f: Series) -> Vec<Rational> {
    let g = f.reciprocal().expect("stock stream has unit constant term");
    let mut n_fact = Rational::one();
    g.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                n_fact = &n_fact * &Rational::from(n);
            }
            c * &n_fact
        })
        .collect()
}

/// Generalized harmonic partial sums
/// `h_n = sum_{k=1..n} 1/((k-1)a + b)^m`, with `h_0 = 0`.
pub fn harmonic_numbers(m: u32, a: &Rational, b: &Rational, count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count + 1);
    out.push(Rational::zero());
    let mut acc = Rational::zero();
    for k in 1..=count as u64 {
        let base = &(Rational::from(k - 1) * a) + b;
        let term = base
            .pow(m as i32)
            .and_then(|p| p.recip())
            .expect("positive (a, b) keep the base nonzero");
        acc = &acc + &term;
        out.push(acc.clone());
    }
    out
}

/// Möbius function values for `1..=n_max`, from a linear sieve.
pub struct MoebiusTable {
    values: Vec<i8>,
}

impl MoebiusTable {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn mu(&self, n: usize) -> i8 {
        assert!(n >= 1 && n <= self.n_max(), "mu({n}) outside table");
        self.values[n]
    }
}

pub fn moebius_sieve(n_max: usize) -> MoebiusTable {
    assert!(n_max >= 1);
    let mut mu = vec![0i8; n_max + 1];
    let mut primes: Vec<usize> = Vec::new();
    let mut spf = vec![0usize; n_max + 1];
    mu[1] = 1;
    for i in 2..=n_max {
        if spf[i] == 0 {
            spf[i] = i;
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            if p > spf[i] || i * p > n_max {
                break;
            }
            spf[i * p] = p;
            mu[i * p] = if p == spf[i] { 0 } else { -mu[i] };
        }
    }
    MoebiusTable { values: mu }
}

/// Rounds a positive rational to `digits` fractional digits, half away from
/// zero.
fn round_decimal(v: &Rational, digits: usize) -> String {
    let scale = Pow::pow(&Integer::from(10), digits as u32);
    let p = v.numer() * &scale;
    let q = v.denom();
    // round(p/q) = floor((2p + q)/(2q)) for positive p/q
    let r = (&(&p * &Integer::from(2)) + q) / &(q * &Integer::from(2));
    if digits == 0 {
        return r.to_string();
    }
    let int_part = &r / &scale;
    let frac = (&r % &scale).to_string();
    format!("{int_part}.{}{frac}", "0".repeat(digits - frac.len()))
}

/// Correctly rounded decimal expansion of `1/zeta(s)` certified by exact
/// integer bounds on the partial sums of `sum 1/k^s`.
///
/// The partial sum is bracketed by floor-division sums at a guarded scale and
/// the integral tail bound; both ends of the reciprocal interval must round
/// to the same digit string or the call refuses rather than report an
/// uncertified digit. The iteration budget makes small `s` (which would need
/// astronomically many terms) an error instead of a hang.
pub fn inv_zeta_decimal(s: u32, digits: usize) -> Result<String> {
    assert!(s >= 2, "the series needs s >= 2 to converge");
    const BUDGET: u64 = 4_000_000;
    let guard = digits + 8;

    // Smallest K with (s-1) K^(s-1) >= 10^(digits+6), i.e. tail < 10^-(digits+6).
    let threshold = Pow::pow(&Integer::from(10), (digits + 6) as u32);
    let mut k_terms: u64 = 1;
    loop {
        let bound = Integer::from(s - 1) * Pow::pow(&Integer::from(k_terms), s - 1);
        if bound >= threshold {
            break;
        }
        k_terms = k_terms.saturating_mul(2);
        if k_terms > BUDGET {
            return Err(Error::ReferenceNotCertifiable { s });
        }
    }

    let scale = Pow::pow(&Integer::from(10), guard as u32);
    let mut lower = Integer::zero();
    for k in 1..=k_terms {
        lower += &scale / Pow::pow(&Integer::from(k), s);
    }
    // Floor losses: at most one unit of the scale per term. Tail bound:
    // sum_{k>K} k^-s < K^(1-s)/(s-1), rounded up at the guarded scale.
    let tail_den = Integer::from(s - 1) * Pow::pow(&Integer::from(k_terms), s - 1);
    let tail = &scale / &tail_den + Integer::from(1);
    let upper = &lower + Integer::from(k_terms) + tail;

    let sum_lo = Rational::new(lower, scale.clone())?;
    let sum_hi = Rational::new(upper, scale)?;
    let inv_lo = sum_hi.recip()?;
    let inv_hi = sum_lo.recip()?;
    let d_lo = round_decimal(&inv_lo, digits);
    let d_hi = round_decimal(&inv_hi, digits);
    if d_lo != d_hi {
        return Err(Error::ReferenceNotCertifiable { s });
    }
    Ok(d_lo)
}
