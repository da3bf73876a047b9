//! Independent reference routes for the family targets.
//!
//! Every construction here deliberately avoids the code paths the library
//! uses to build its targets (coefficient streams and series reciprocals),
//! so agreement between the two is evidence, not tautology: named numbers
//! come from their classical convolution recurrences, and streams come from
//! shifted stock expansions.

use cfrac::numerics::{Integer, Rational};
use cfrac::sequences::factorial;
use cfrac::series::{stock_series, Series, StockSeries};

fn binomial(n: u64, k: u64) -> Rational {
    Rational::new(
        factorial(n),
        &factorial(k) * &factorial(n - k),
    )
    .expect("factorials are nonzero")
}

/// Bernoulli numbers from `sum_{k<=n} C(n+1,k) B_k = 0` (n >= 1), B_0 = 1.
pub fn recurrence_bernoulli(count: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for n in 1..=count {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc = &acc + &(&binomial(n as u64 + 1, k as u64) * bk);
        }
        let next = -&acc / Rational::from(n + 1);
        b.push(next);
    }
    b
}

/// Cauchy numbers from the convolution of their exponential generating
/// function with log(1+x)/x: `sum_k (c_k/k!) (-1)^(n-k)/(n-k+1) = [n=0]`.
pub fn recurrence_cauchy(count: usize) -> Vec<Rational> {
    let mut e = vec![Rational::one()]; // c_n / n!
    for n in 1..=count {
        let mut acc = Rational::zero();
        for (k, ek) in e.iter().enumerate() {
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            acc = &acc + &(ek * &Rational::ratio(sign, (n - k + 1) as i64));
        }
        e.push(-acc);
    }
    e.iter()
        .enumerate()
        .map(|(n, en)| en * &Rational::from_integer(factorial(n as u64)))
        .collect()
}

/// Euler numbers from the cosh convolution:
/// `sum_{k, n-k even} E_k/(k!(n-k)!) = [n=0]`.
pub fn recurrence_euler(count: usize) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for n in 1..=count {
        let mut acc = Rational::zero();
        for (k, ek) in e.iter().enumerate() {
            if (n - k) % 2 != 0 {
                continue;
            }
            acc = &acc + &(ek * &binomial(n as u64, k as u64));
        }
        e.push(-acc);
    }
    e
}

/// Euler numbers of the second kind, from the sinh(x)/x convolution:
/// `sum_{k, n-k even} (E'_k/k!) / (n-k+1)! = [n=0]`.
pub fn recurrence_euler_second(count: usize) -> Vec<Rational> {
    let mut e = vec![Rational::one()]; // E'_n / n!
    for n in 1..=count {
        let mut acc = Rational::zero();
        for (k, ek) in e.iter().enumerate() {
            if (n - k) % 2 != 0 {
                continue;
            }
            acc = &acc
                + &(ek
                    / &Rational::from_integer(factorial((n - k + 1) as u64)));
        }
        e.push(-acc);
    }
    e.iter()
        .enumerate()
        .map(|(n, en)| en * &Rational::from_integer(factorial(n as u64)))
        .collect()
}

/// Keeps the even-index coefficients: `f(x^2)`-shaped input becomes the
/// series in the compressed variable.
pub fn compress_even(f: &Series) -> Series {
    let coeffs = f.coeffs().iter().step_by(2).cloned().collect();
    Series::from_coeffs(coeffs)
}

/// arctan target via the stock expansion: compress arctan(x)/x, reciprocate.
pub fn arctan_target(order: usize) -> Series {
    compress_even(&stock_series(StockSeries::ArctanOverX, 2 * order))
        .reciprocal()
        .expect("arctan(x)/x has unit constant term")
}

/// Undeformed Bernoulli-type target via the shifted exponential:
/// stream coefficient k is `N! / (N+k)!` = `N! * [x^(N+k)] e^x`.
pub fn bernoulli_target_via_exp(n: u32, order: usize) -> Series {
    let exp = stock_series(StockSeries::Exp, n as usize + order);
    let scale = Rational::from_integer(factorial(n as u64));
    let coeffs = (0..=order)
        .map(|k| &exp.coeff(n as usize + k) * &scale)
        .collect();
    Series::from_coeffs(coeffs)
        .reciprocal()
        .expect("stream has unit constant term")
}

/// Undeformed Cauchy-type target via the shifted logarithm:
/// stream coefficient k is `(-1)^k N/(N+k)` = `(-1)^(N+1) N [x^(N+k)] log(1+x)`.
pub fn cauchy_target_via_log(n: u32, order: usize) -> Series {
    let log = stock_series(StockSeries::Log1p, n as usize + order);
    let sign = if n % 2 == 0 { -1 } else { 1 };
    let scale = Rational::from(sign * i64::from(n));
    let coeffs = (0..=order)
        .map(|k| &log.coeff(n as usize + k) * &scale)
        .collect();
    Series::from_coeffs(coeffs)
        .reciprocal()
        .expect("stream has unit constant term")
}

/// Euler-type target via the shifted cosh expansion: the stream's even
/// coefficient 2k is `(2N)!/(2N+2k)!`, odd coefficients vanish.
pub fn euler_target_via_cosh(n: u32, order: usize) -> Series {
    let cosh = stock_series(StockSeries::Cosh, 2 * n as usize + order);
    let scale = Rational::from_integer(factorial(2 * n as u64));
    let coeffs = (0..=order)
        .map(|j| {
            if j % 2 == 0 {
                &cosh.coeff(2 * n as usize + j) * &scale
            } else {
                Rational::zero()
            }
        })
        .collect();
    Series::from_coeffs(coeffs)
        .reciprocal()
        .expect("stream has unit constant term")
}

/// Second-kind Euler target via the shifted sinh(x)/x expansion: the even
/// coefficient 2k is `(2N+1)!/(2N+2k+1)!`.
pub fn euler_second_target_via_sinh(n: u32, order: usize) -> Series {
    let sinh = stock_series(StockSeries::SinhOverX, 2 * n as usize + order);
    let scale = Rational::from_integer(factorial(2 * n as u64 + 1));
    let coeffs = (0..=order)
        .map(|j| {
            if j % 2 == 0 {
                &sinh.coeff(2 * n as usize + j) * &scale
            } else {
                Rational::zero()
            }
        })
        .collect();
    Series::from_coeffs(coeffs)
        .reciprocal()
        .expect("stream has unit constant term")
}

/// Harmonic-type target via the geometric route: the power sums
/// `sum_{k>=1} x^k/((k-1)a+b)^m` multiplied by `1/(1-x)`.
pub fn harmonic_target_via_geometric(
    m: u32,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        let base = &(&Rational::from(k as u64 - 1) * a) + b;
        *c = base.pow(m as i32).expect("positive base").recip().expect("nonzero");
    }
    let sums = Series::from_coeffs(coeffs);
    &sums * &stock_series(StockSeries::Geom, order)
}

/// Exact partial sum `sum_{k=1..m} 1/k^s`.
pub fn zeta_partial_sum(s: u32, m: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=m as u64 {
        let kp = Rational::from_integer(num_pow(k, s));
        acc = &acc + &kp.recip().expect("positive power");
    }
    acc
}

fn num_pow(base: u64, exp: u32) -> Integer {
    let mut acc = Integer::from(1);
    for _ in 0..exp {
        acc = &acc * &Integer::from(base);
    }
    acc
}
