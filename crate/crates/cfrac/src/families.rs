//! The catalog of built-in continued fractions: one builder per number
//! family, plus each family's target generating function and the order law
//! its convergents are expected to meet.

use num_traits::Pow;

use crate::cf::{CFExpansion, CFMeta, DefectContract, DisplaySign, GhForm, PartialTerm};
use crate::error::{Error, Result};
use crate::numerics::{Integer, Rational};
use crate::poly::Poly;
use crate::sequences::{
    bernoulli_numbers, cauchy_numbers, harmonic_numbers, hyp1f2_euler, hyp1f2_euler_second,
    hyp2f1_bernoulli, hyp2f1_cauchy,
};
use crate::series::Series;
use crate::series2cf;

/// Identifier plus parameters for every fraction in the catalog. These names
/// are the stable vocabulary of the CLI and the JSON schema.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyId {
    /// `x/arctan(x)` in the squared variable; partial terms `(2n+1) - (2n-1)x`
    Arctan,
    /// Bernoulli-type numbers, hypergeometric level `n`, deformation `lambda`
    Bernoulli { n: u32, lambda: Rational },
    /// Cauchy-type numbers, hypergeometric level `n`, deformation `lambda`
    Cauchy { n: u32, lambda: Rational },
    /// Cauchy-type fraction with constant denominators and interleaved
    /// square numerators
    CauchyInterleaved { n: u32 },
    /// Euler-type numbers (reciprocal of an even factorial stream)
    Euler { n: u32 },
    /// Complementary Euler-type numbers (odd factorial stream)
    EulerSecond { n: u32 },
    /// Partial sums of `1/((k-1)a + b)^m`
    Harmonic { m: u32, a: Rational, b: Rational },
    /// Ordinary generating function of the Bernoulli numbers
    OgfBernoulli,
    /// Ordinary generating function of the Cauchy numbers
    OgfCauchy,
    /// Reciprocal zeta values: fraction attached to `sum x^k / k^s`
    Zeta { s: u32 },
}

/// Lower bound the defect order must meet at convergent `n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefectBound {
    NPlusOne,
    TwoNPlusTwo,
    N,
}

/// A family's guaranteed contact law: from convergent `start` on, the defect
/// order is at least `bound(n)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DefectLaw {
    pub start: usize,
    pub bound: DefectBound,
}

impl DefectLaw {
    pub fn required(&self, n: usize) -> usize {
        match self.bound {
            DefectBound::NPlusOne => n + 1,
            DefectBound::TwoNPlusTwo => 2 * n + 2,
            DefectBound::N => n,
        }
    }
}

impl FamilyId {
    /// Bare family name as used by `--family`.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Arctan => "arctan",
            FamilyId::Bernoulli { .. } => "bernoulli",
            FamilyId::Cauchy { .. } => "cauchy",
            FamilyId::CauchyInterleaved { .. } => "cauchy_interleaved",
            FamilyId::Euler { .. } => "euler",
            FamilyId::EulerSecond { .. } => "euler2",
            FamilyId::Harmonic { .. } => "harmonic",
            FamilyId::OgfBernoulli => "ogf_bernoulli",
            FamilyId::OgfCauchy => "ogf_cauchy",
            FamilyId::Zeta { .. } => "zeta",
        }
    }

    /// Name plus parameters, e.g. `bernoulli(N=1, lambda=0)`.
    pub fn label(&self) -> String {
        match self {
            FamilyId::Arctan | FamilyId::OgfBernoulli | FamilyId::OgfCauchy => {
                self.name().to_string()
            }
            FamilyId::Bernoulli { n, lambda } | FamilyId::Cauchy { n, lambda } => {
                format!("{}(N={n}, lambda={lambda})", self.name())
            }
            FamilyId::CauchyInterleaved { n }
            | FamilyId::Euler { n }
            | FamilyId::EulerSecond { n } => format!("{}(N={n})", self.name()),
            FamilyId::Harmonic { m, a, b } => format!("harmonic(m={m}, a={a}, b={b})"),
            FamilyId::Zeta { s } => format!("zeta(s={s})"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::InvalidFamily(msg.to_string()));
        match self {
            FamilyId::Cauchy { n, .. } if *n < 1 => fail("cauchy needs N >= 1"),
            FamilyId::CauchyInterleaved { n } if *n < 1 => {
                fail("cauchy_interleaved needs N >= 1")
            }
            FamilyId::Harmonic { m, .. } if *m < 1 => fail("harmonic needs m >= 1"),
            FamilyId::Harmonic { a, b, .. }
                if a.is_zero() || a.is_negative() || b.is_zero() || b.is_negative() =>
            {
                fail("harmonic needs positive a and b")
            }
            FamilyId::Zeta { s } if *s < 2 => fail("zeta needs s >= 2"),
            _ => Ok(()),
        }
    }

    pub fn defect_law(&self) -> DefectLaw {
        match self {
            FamilyId::Euler { .. } | FamilyId::EulerSecond { .. } => DefectLaw {
                start: 0,
                bound: DefectBound::TwoNPlusTwo,
            },
            // the head-only pair carries no information about this target
            FamilyId::Zeta { .. } => DefectLaw {
                start: 1,
                bound: DefectBound::NPlusOne,
            },
            FamilyId::OgfBernoulli => DefectLaw {
                start: 0,
                bound: DefectBound::N,
            },
            _ => DefectLaw {
                start: 0,
                bound: DefectBound::NPlusOne,
            },
        }
    }

    fn contract(&self) -> DefectContract {
        match self {
            FamilyId::Zeta { .. } => DefectContract::QMinusPf,
            _ => DefectContract::QfMinusP,
        }
    }

    fn display_sign(&self) -> DisplaySign {
        match self {
            FamilyId::Arctan
            | FamilyId::CauchyInterleaved { .. }
            | FamilyId::OgfBernoulli
            | FamilyId::OgfCauchy => DisplaySign::Plus,
            _ => DisplaySign::Minus,
        }
    }
}

fn int_pow(base: u64, exp: u32) -> Rational {
    Rational::from_integer(Pow::pow(&Integer::from(base), exp))
}

/// Assembles the regular shape: head 1, `den_k = g_k + h_k x^e`,
/// `num_k = -g_{k-1} h_k x^e` with `g_0 = 1`.
fn gh_expansion(id: &FamilyId, g: Vec<Rational>, h: Vec<Rational>, power: u32, terminated: bool) -> CFExpansion {
    let e = power as usize;
    let mut terms = Vec::with_capacity(g.len());
    let mut g_prev = Rational::one();
    for (gk, hk) in g.iter().zip(&h) {
        let num = Poly::monomial(-(&g_prev * hk), e);
        let den = &Poly::constant(gk.clone()) + &Poly::monomial(hk.clone(), e);
        terms.push(PartialTerm { num, den });
        g_prev = gk.clone();
    }
    CFExpansion {
        head: Poly::one(),
        terms,
        meta: CFMeta {
            label: id.label(),
            gh: Some(GhForm { g, h, power }),
            contract: id.contract(),
            display_sign: id.display_sign(),
            terminated,
        },
    }
}

/// Collects `(g_k, h_k)` streams, stopping early when an `h` vanishes (the
/// partial numerator `-g_{k-1} h_k x^e` would be zero, so the fraction is
/// finite from there on).
fn collect_gh(
    depth: usize,
    g_at: impl Fn(u64) -> Rational,
    h_at: impl Fn(u64) -> Rational,
) -> (Vec<Rational>, Vec<Rational>, bool) {
    let mut g = Vec::with_capacity(depth);
    let mut h = Vec::with_capacity(depth);
    for k in 1..=depth as u64 {
        let hk = h_at(k);
        if hk.is_zero() {
            return (g, h, true);
        }
        g.push(g_at(k));
        h.push(hk);
    }
    (g, h, false)
}

/// Builds the fraction for `id` with (up to) `depth` partial terms. Fewer
/// terms with `meta.terminated` set means the fraction ended exactly.
pub fn build(id: &FamilyId, depth: usize) -> Result<CFExpansion> {
    id.validate()?;
    Ok(match id {
        FamilyId::Arctan => {
            let (g, h, term) = collect_gh(
                depth,
                |k| Rational::from(2 * k + 1),
                |k| -Rational::from(2 * k - 1),
            );
            gh_expansion(id, g, h, 1, term)
        }
        FamilyId::Bernoulli { n, lambda } => {
            let n = u64::from(*n);
            let (g, h, term) = collect_gh(
                depth,
                |k| Rational::from(n + k),
                |k| &Rational::one() - &(&Rational::from(n + k - 1) * lambda),
            );
            gh_expansion(id, g, h, 1, term)
        }
        FamilyId::Cauchy { n, lambda } => {
            let n = u64::from(*n);
            let (g, h, term) = collect_gh(
                depth,
                |k| Rational::from(n + k),
                |k| lambda - &Rational::from(n + k - 1),
            );
            gh_expansion(id, g, h, 1, term)
        }
        FamilyId::Euler { n } => {
            let n = u64::from(*n);
            let (g, h, term) = collect_gh(
                depth,
                |k| Rational::from((2 * n + 2 * k - 1) * (2 * n + 2 * k)),
                |_| Rational::one(),
            );
            gh_expansion(id, g, h, 2, term)
        }
        FamilyId::EulerSecond { n } => {
            let n = u64::from(*n);
            let (g, h, term) = collect_gh(
                depth,
                |k| Rational::from((2 * n + 2 * k) * (2 * n + 2 * k + 1)),
                |_| Rational::one(),
            );
            gh_expansion(id, g, h, 2, term)
        }
        FamilyId::CauchyInterleaved { n } => {
            let n = u64::from(*n);
            let mut terms = Vec::with_capacity(depth);
            for i in 1..=depth as u64 {
                let mult = if i == 1 {
                    Rational::from(n)
                } else if i % 2 == 0 {
                    let j = i / 2;
                    Rational::from(j * j)
                } else {
                    let j = (i - 1) / 2;
                    Rational::from((n + j) * (n + j))
                };
                terms.push(PartialTerm {
                    num: Poly::monomial(mult, 1),
                    den: Poly::constant(Rational::from(n + i)),
                });
            }
            catalog_expansion(id, Poly::one(), terms, false)
        }
        FamilyId::Harmonic { m, a, b } => {
            let mexp = *m as i32;
            let bm = b.pow(mexp)?;
            let b2m = b.pow(2 * mexp)?;
            let mut terms = Vec::with_capacity(depth);
            for k in 1..=depth as u64 {
                let (num, den) = match k {
                    // x / (b^m (1 - x))
                    1 => (
                        Poly::x(),
                        Poly::new(vec![bm.clone(), -&bm]),
                    ),
                    // -b^{2m} x(1-x) / ((a+b)^m + b^m x)
                    2 => (
                        Poly::new(vec![Rational::zero(), -&b2m, b2m.clone()]),
                        Poly::new(vec![(a + b).pow(mexp)?, bm.clone()]),
                    ),
                    // -((k-2)a+b)^{2m} x / (((k-1)a+b)^m + ((k-2)a+b)^m x)
                    _ => {
                        let inner = &(&Rational::from(k - 2) * a) + b;
                        let outer = &(&Rational::from(k - 1) * a) + b;
                        (
                            Poly::monomial(-inner.pow(2 * mexp)?, 1),
                            Poly::new(vec![outer.pow(mexp)?, inner.pow(mexp)?]),
                        )
                    }
                };
                terms.push(PartialTerm { num, den });
            }
            catalog_expansion(id, Poly::zero(), terms, false)
        }
        FamilyId::OgfBernoulli => {
            let mut terms = Vec::with_capacity(depth);
            for i in 1..=depth as u64 {
                let (num, den) = if i == 1 {
                    (Poly::one(), Poly::one())
                } else if i % 2 == 0 {
                    let j = i / 2;
                    (
                        Poly::monomial(Rational::from(j), 1),
                        Poly::constant(Rational::ratio(2, j as i64)),
                    )
                } else {
                    let j = (i - 1) / 2;
                    (
                        Poly::monomial(-Rational::from(j), 1),
                        Poly::constant(Rational::from(2 * j + 1)),
                    )
                };
                terms.push(PartialTerm { num, den });
            }
            catalog_expansion(id, Poly::zero(), terms, false)
        }
        FamilyId::OgfCauchy => {
            let target = target_series(id, 2 * depth + 2)?;
            let cfr = series2cf::expand_cfraction(&target, depth)?;
            let terms = cfr
                .steps
                .iter()
                .map(|s| PartialTerm {
                    num: Poly::monomial(Rational::from_integer(s.a.clone()), 1),
                    den: Poly::constant(s.b.clone()),
                })
                .collect();
            catalog_expansion(id, Poly::constant(cfr.c0), terms, cfr.terminated)
        }
        FamilyId::Zeta { s } => {
            let mut terms = Vec::with_capacity(depth);
            for k in 1..=depth as u64 {
                let (num, den) = match k {
                    1 => (Poly::one(), Poly::x()),
                    2 => (
                        Poly::monomial(Rational::one(), 2),
                        Poly::constant(int_pow(2, *s)),
                    ),
                    _ => (
                        Poly::monomial(-int_pow(k - 1, 2 * s), 1),
                        Poly::new(vec![int_pow(k, *s), int_pow(k - 1, *s)]),
                    ),
                };
                terms.push(PartialTerm { num, den });
            }
            catalog_expansion(id, Poly::zero(), terms, false)
        }
    })
}

/// Assembles a fraction without the regular (g,h) structure.
fn catalog_expansion(
    id: &FamilyId,
    head: Poly,
    terms: Vec<PartialTerm>,
    terminated: bool,
) -> CFExpansion {
    CFExpansion {
        head,
        terms,
        meta: CFMeta {
            label: id.label(),
            gh: None,
            contract: id.contract(),
            display_sign: id.display_sign(),
            terminated,
        },
    }
}

/// The generating function the family's convergents approach, truncated at
/// `order`.
pub fn target_series(id: &FamilyId, order: usize) -> Result<Series> {
    id.validate()?;
    match id {
        FamilyId::Arctan => {
            // reciprocal of sum (-1)^k x^k / (2k+1): the arctan stream in the
            // squared variable
            let coeffs = (0..=order)
                .map(|k| Rational::ratio(if k % 2 == 0 { 1 } else { -1 }, 2 * k as i64 + 1))
                .collect();
            Series::from_coeffs(coeffs).reciprocal()
        }
        FamilyId::Bernoulli { n, lambda } => hyp2f1_bernoulli(*n, lambda, order).reciprocal(),
        FamilyId::Cauchy { n, lambda } => hyp2f1_cauchy(*n, lambda, order).reciprocal(),
        FamilyId::CauchyInterleaved { n } => {
            hyp2f1_cauchy(*n, &Rational::zero(), order).reciprocal()
        }
        FamilyId::Euler { n } => hyp1f2_euler(*n, order).reciprocal(),
        FamilyId::EulerSecond { n } => hyp1f2_euler_second(*n, order).reciprocal(),
        FamilyId::Harmonic { m, a, b } => {
            Ok(Series::from_coeffs(harmonic_numbers(*m, a, b, order)))
        }
        FamilyId::OgfBernoulli => Ok(Series::from_coeffs(bernoulli_numbers(order))),
        FamilyId::OgfCauchy => Ok(Series::from_coeffs(cauchy_numbers(order))),
        FamilyId::Zeta { s } => {
            let mut coeffs = vec![Rational::zero()];
            for k in 1..=order as u64 {
                coeffs.push(Rational::new(Integer::from(1), Pow::pow(&Integer::from(k), *s))?);
            }
            Ok(Series::from_coeffs(coeffs))
        }
    }
}

/// Deterministic parameter grid used by the whole-catalog property checks
/// and `verify --all`: every family, small parameters, including the
/// degenerate deformations that terminate early.
pub fn parameter_grid() -> Vec<FamilyId> {
    let mut out = vec![FamilyId::Arctan];
    let base_lambdas = [
        Rational::zero(),
        Rational::ratio(1, 2),
        Rational::ratio(-1, 3),
    ];
    let lambdas_for = |n: u32| {
        let mut ls = base_lambdas.to_vec();
        if n >= 1 {
            let inv = Rational::ratio(1, i64::from(n));
            if !ls.contains(&inv) {
                ls.push(inv);
            }
        }
        ls
    };
    for n in 0..=4 {
        for lambda in lambdas_for(n) {
            out.push(FamilyId::Bernoulli { n, lambda });
        }
    }
    for n in 1..=4 {
        for lambda in lambdas_for(n) {
            out.push(FamilyId::Cauchy { n, lambda });
        }
    }
    for n in 1..=4 {
        out.push(FamilyId::CauchyInterleaved { n });
    }
    for n in 0..=4 {
        out.push(FamilyId::Euler { n });
    }
    for n in 0..=4 {
        out.push(FamilyId::EulerSecond { n });
    }
    let weights = [Rational::one(), Rational::from(2), Rational::ratio(1, 2)];
    for m in 1..=3 {
        for a in &weights {
            for b in &weights {
                out.push(FamilyId::Harmonic {
                    m,
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    out.push(FamilyId::OgfBernoulli);
    out.push(FamilyId::OgfCauchy);
    for s in [2, 3, 7] {
        out.push(FamilyId::Zeta { s });
    }
    out
}
