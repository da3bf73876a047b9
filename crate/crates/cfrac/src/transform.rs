//! Linear fractional transforms of regular fractions.
//!
//! For an invertible map `v -> (a v + b)/(c v + d)` applied to a fraction in
//! (g,h) form with head 1, the image is again a continued fraction: the head
//! becomes `(a+b)/(c+d)`, the first two levels are rewritten, and every
//! deeper level is carried over unchanged. Convergents map to convergents:
//! for `n >= 1` the transformed pair is exactly
//! `(a P_n + b Q_n, c P_n + d Q_n)`.

use crate::cf::{head_matrix, term_matrix, CFExpansion, CFMeta, DefectContract, DisplaySign, Mat2, PartialTerm};
use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::poly::Poly;
use crate::series::Series;

/// Coefficients of `v -> (a v + b)/(c v + d)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LftCoeffs {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl LftCoeffs {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let map = LftCoeffs { a, b, c, d };
        map.validate()?;
        Ok(map)
    }

    pub fn det(&self) -> Rational {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// The map must be invertible, and `c + d` (the denominator at the head
    /// value 1) must not vanish or the transformed head is undefined.
    pub fn validate(&self) -> Result<()> {
        if self.det().is_zero() {
            return Err(Error::DegenerateMap);
        }
        if (&self.c + &self.d).is_zero() {
            return Err(Error::HeadUndefined);
        }
        Ok(())
    }

    /// The inverse map `v -> (d v - b)/(-c v + a)` (up to the irrelevant
    /// determinant scale).
    pub fn inverse(&self) -> LftCoeffs {
        LftCoeffs {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn apply_rational(&self, v: &Rational) -> Result<Rational> {
        let den = &(&self.c * v) + &self.d;
        if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(&(&(&self.a * v) + &self.b) / &den)
    }

    /// `(a f + b)/(c f + d)` as a series; the denominator needs a nonzero
    /// constant term.
    pub fn apply_series(&self, f: &Series) -> Result<Series> {
        let num = f.mul_rational(&self.a).add_rational(&self.b);
        let den = f.mul_rational(&self.c).add_rational(&self.d);
        num.div(&den)
    }

    fn label_of(&self, inner: &str) -> String {
        format!(
            "lft(a={}, b={}, c={}, d={}) of {}",
            self.a, self.b, self.c, self.d, inner
        )
    }
}

/// Rewrites a (g,h)-form fraction under the map. Fractions without that
/// regular shape cannot be transformed level-wise and are rejected.
pub fn lft_transform(cf: &CFExpansion, map: &LftCoeffs) -> Result<CFExpansion> {
    map.validate()?;
    let gh = cf.meta.gh.as_ref().ok_or(Error::NotPureGhForm)?;
    let e = gh.power as usize;
    let cd = &map.c + &map.d;
    let head = Poly::constant(&(&map.a + &map.b) / &cd);
    let mut terms = Vec::with_capacity(cf.terms.len());
    if let (Some(g1), Some(h1)) = (gh.g.first(), gh.h.first()) {
        // level 1: numerator -(det/(c+d)) h_1 x^e over (c+d) g_1 + d h_1 x^e
        terms.push(PartialTerm {
            num: Poly::monomial(-&(&(&map.det() / &cd) * h1), e),
            den: &Poly::constant(&cd * g1)
                + &Poly::monomial(&map.d * h1, e),
        });
        if let (Some(g2), Some(h2)) = (gh.g.get(1), gh.h.get(1)) {
            // level 2: numerator picks up the factor (c+d); denominator as before
            terms.push(PartialTerm {
                num: Poly::monomial(-&(&(&cd * g1) * h2), e),
                den: &Poly::constant(g2.clone()) + &Poly::monomial(h2.clone(), e),
            });
            terms.extend(cf.terms.iter().skip(2).cloned());
        }
    }
    Ok(CFExpansion {
        head,
        terms,
        meta: CFMeta {
            label: map.label_of(&cf.meta.label),
            gh: None,
            contract: DefectContract::QfMinusP,
            display_sign: DisplaySign::Plus,
            terminated: cf.meta.terminated,
        },
    })
}

fn step_product(cf: &CFExpansion, prefix: usize) -> Mat2 {
    let mut m = head_matrix(&cf.head);
    for term in cf.terms.iter().take(prefix) {
        m = m.mul(&term_matrix(term));
    }
    m
}

/// Checks the step-matrix identity between the original and transformed
/// fractions at the given prefix length.
///
/// Writing `L` for the coefficient matrix of the map, the transformed
/// product equals `L x (original product)` entry-for-entry once the prefix
/// covers both rewritten levels. At prefix 1 the trailing column still
/// refers to the differently-scaled heads, so it matches only up to the
/// factor `c + d`; at prefix 0 that factor sits on the leading column and
/// the trailing columns are unrelated.
pub fn matrix_product_check(
    original: &CFExpansion,
    transformed: &CFExpansion,
    map: &LftCoeffs,
    prefix: usize,
) -> bool {
    if prefix > original.terms.len() || prefix > transformed.terms.len() {
        return false;
    }
    let lhs = Mat2 {
        a: Poly::constant(map.a.clone()),
        b: Poly::constant(map.b.clone()),
        c: Poly::constant(map.c.clone()),
        d: Poly::constant(map.d.clone()),
    }
    .mul(&step_product(original, prefix));
    let rhs = step_product(transformed, prefix);
    let cd = Poly::constant(&map.c + &map.d);
    match prefix {
        0 => lhs.a == &cd * &rhs.a && lhs.c == &cd * &rhs.c,
        1 => {
            lhs.a == rhs.a
                && lhs.c == rhs.c
                && lhs.b == &cd * &rhs.b
                && lhs.d == &cd * &rhs.d
        }
        _ => lhs == rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{approx_defect, convergent_taylor, eval_convergent};
    use crate::families::{build, target_series, FamilyId};
    use crate::series::{stock_series, StockSeries};

    fn rat(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn map(a: i64, b: i64, c: i64, d: i64) -> LftCoeffs {
        LftCoeffs::new(
            Rational::from(a),
            Rational::from(b),
            Rational::from(c),
            Rational::from(d),
        )
        .unwrap()
    }

    fn dens(cf: &CFExpansion) -> Vec<String> {
        cf.terms.iter().map(|t| t.den.to_string()).collect()
    }

    fn nums(cf: &CFExpansion) -> Vec<String> {
        cf.terms.iter().map(|t| t.num.to_string()).collect()
    }

    #[test]
    fn difference_ratio_of_the_classical_bernoulli_fraction() {
        // (1-f)/(1+f) for the N=1 fraction
        let cf = build(&FamilyId::Bernoulli { n: 1, lambda: Rational::zero() }, 4).unwrap();
        let t = lft_transform(&cf, &map(-1, 1, 1, 1)).unwrap();
        assert_eq!(t.head, Poly::zero());
        assert_eq!(dens(&t), ["4+x", "3+x", "4+x", "5+x"]);
        assert_eq!(nums(&t), ["x", "-4x", "-3x", "-4x"]);
    }

    #[test]
    fn exponential_fraction_maps_to_tanh_half() {
        let id = FamilyId::Bernoulli { n: 0, lambda: Rational::zero() };
        let cf = build(&id, 12).unwrap();
        let m = map(-1, 1, 1, 1);
        let t = lft_transform(&cf, &m).unwrap();
        assert_eq!(t.head, Poly::zero());
        assert_eq!(dens(&t)[..4], ["2+x", "2+x", "3+x", "4+x"]);
        assert_eq!(nums(&t)[..4], ["x", "-2x", "-2x", "-3x"]);

        // image target two ways: map applied to e^{-x}, and the stock series
        let f = target_series(&id, 12).unwrap();
        let image = m.apply_series(&f).unwrap();
        assert_eq!(image, stock_series(StockSeries::TanhHalf, 12));

        let pairs = t.convergents(12).unwrap();
        assert_eq!(
            convergent_taylor(&pairs[12], 12).unwrap(),
            image.truncated(12)
        );
    }

    #[test]
    fn log_ratio_fraction_from_the_cauchy_family() {
        // (f-1)/(f+1) for f = x/log(1+x)
        let id = FamilyId::Cauchy { n: 1, lambda: Rational::zero() };
        let cf = build(&id, 4).unwrap();
        let t = lft_transform(&cf, &map(1, -1, 1, 1)).unwrap();
        assert_eq!(t.head, Poly::zero());
        assert_eq!(dens(&t), ["4-x", "3-2x", "4-3x", "5-4x"]);
        assert_eq!(nums(&t), ["x", "8x", "9x", "16x"]);
    }

    #[test]
    fn identity_map_changes_nothing() {
        for id in [
            FamilyId::Bernoulli { n: 2, lambda: rat(1, 2) },
            FamilyId::Euler { n: 1 },
            FamilyId::Arctan,
        ] {
            let cf = build(&id, 5).unwrap();
            let ident = map(1, 0, 0, 1);
            let t = lft_transform(&cf, &ident).unwrap();
            assert_eq!(t.head, cf.head, "{id:?}");
            assert_eq!(t.terms, cf.terms, "{id:?}");
            for prefix in 0..=cf.terms.len() {
                assert!(matrix_product_check(&cf, &t, &ident, prefix), "{id:?} prefix {prefix}");
            }
        }
    }

    #[test]
    fn two_level_rewrite_has_the_closed_numerator_form() {
        // P~_2 = (a+b) g1 g2 + b h1 g2 x + b h1 h2 x^2, checked on the
        // fraction with g = (2,3), h = (1,1)
        let cf = build(&FamilyId::Bernoulli { n: 1, lambda: Rational::zero() }, 2).unwrap();
        for m in [map(2, 3, 1, 1), map(1, -1, 1, 1), map(5, 0, 1, 2), map(0, 1, 2, 1)] {
            let t = lft_transform(&cf, &m).unwrap();
            let pairs = t.convergents(2).unwrap();
            let ab = &m.a + &m.b;
            let expected = Poly::new(vec![
                &ab * &Rational::from(6),
                &m.b * &Rational::from(3),
                m.b.clone(),
            ]);
            assert_eq!(pairs[2].p, expected, "{m:?}");
        }
    }

    #[test]
    fn transformed_convergents_are_the_mapped_pairs() {
        // column identity (a P_n + b Q_n, c P_n + d Q_n) via cross-multiplication
        for (id, m) in [
            (FamilyId::Bernoulli { n: 1, lambda: rat(-1, 3) }, map(2, 1, 1, 3)),
            (FamilyId::Euler { n: 0 }, map(1, 2, 0, 1)),
            (FamilyId::Arctan, map(3, -1, 1, 1)),
        ] {
            let cf = build(&id, 6).unwrap();
            let t = lft_transform(&cf, &m).unwrap();
            let orig = cf.convergents(6).unwrap();
            let image = t.convergents(6).unwrap();
            for n in 1..=6 {
                let num = &orig[n].p.scale(&m.a) + &orig[n].q.scale(&m.b);
                let den = &orig[n].p.scale(&m.c) + &orig[n].q.scale(&m.d);
                assert_eq!(image[n].p, num, "{id:?} P at {n}");
                assert_eq!(image[n].q, den, "{id:?} Q at {n}");
            }
        }
    }

    #[test]
    fn matrix_products_match_after_both_rewritten_levels() {
        let id = FamilyId::Bernoulli { n: 0, lambda: Rational::zero() };
        let cf = build(&id, 8).unwrap();
        let m = map(-1, 1, 1, 1);
        let t = lft_transform(&cf, &m).unwrap();
        for prefix in 0..=8 {
            assert!(matrix_product_check(&cf, &t, &m, prefix), "prefix {prefix}");
        }
        // the scaled-column cases really need their scale factor: a naive
        // full-equality reading fails at prefix 1 whenever c + d != 1
        let lhs = Mat2 {
            a: Poly::constant(m.a.clone()),
            b: Poly::constant(m.b.clone()),
            c: Poly::constant(m.c.clone()),
            d: Poly::constant(m.d.clone()),
        }
        .mul(&super::step_product(&cf, 1));
        let rhs = super::step_product(&t, 1);
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn inverse_map_recovers_convergent_values() {
        let id = FamilyId::Cauchy { n: 2, lambda: rat(1, 2) };
        let cf = build(&id, 5).unwrap();
        let m = map(1, -1, 1, 1);
        let t = lft_transform(&cf, &m).unwrap();
        let orig = cf.convergents(5).unwrap();
        let image = t.convergents(5).unwrap();
        let inv = m.inverse();
        let x0 = rat(1, 5);
        for n in 1..=5 {
            let v = eval_convergent(&image[n], &x0).unwrap();
            let back = inv.apply_rational(&v).unwrap();
            assert_eq!(back, eval_convergent(&orig[n], &x0).unwrap(), "n={n}");
        }
    }

    #[test]
    fn transformed_fraction_keeps_the_contact_law() {
        let id = FamilyId::Cauchy { n: 1, lambda: Rational::zero() };
        let cf = build(&id, 6).unwrap();
        let m = map(1, -1, 1, 1);
        let t = lft_transform(&cf, &m).unwrap();
        let image = m
            .apply_series(&target_series(&id, 10).unwrap())
            .unwrap();
        for n in 0..=6 {
            let defect = approx_defect(&t, &image, n).unwrap();
            assert!(defect.meets(n + 1), "n={n}: {defect:?}");
        }
    }

    #[test]
    fn image_target_matches_independent_stock_route() {
        // (f - 1)/(f + 1) for f = x/log(1+x) equals (x - log(1+x))/(x + log(1+x))
        let id = FamilyId::Cauchy { n: 1, lambda: Rational::zero() };
        let f = target_series(&id, 12).unwrap();
        let image = map(1, -1, 1, 1).apply_series(&f).unwrap();
        let log1p = stock_series(StockSeries::Log1p, 13);
        let x = Series::from_poly(&Poly::x(), 13);
        let num = (&x - &log1p).div_x();
        let den = (&x + &log1p).div_x();
        assert_eq!(image.truncated(11), num.div(&den).unwrap().truncated(11));
    }

    #[test]
    fn irregular_fractions_are_rejected(){
        let m = map(1, -1, 1, 1);
        for id in [
            FamilyId::Harmonic { m: 1, a: Rational::one(), b: Rational::one() },
            FamilyId::Zeta { s: 2 },
            FamilyId::OgfBernoulli,
            FamilyId::OgfCauchy,
            FamilyId::CauchyInterleaved { n: 1 },
        ] {
            let cf = build(&id, 4).unwrap();
            assert_eq!(
                lft_transform(&cf, &m).unwrap_err(),
                Error::NotPureGhForm,
                "{id:?}"
            );
        }
    }

    #[test]
    fn degenerate_maps_are_rejected() {
        assert_eq!(
            LftCoeffs::new(Rational::one(), Rational::from(2), Rational::from(2), Rational::from(4))
                .unwrap_err(),
            Error::DegenerateMap
        );
        // ad - bc = -2 but c + d = 0: no finite head
        assert_eq!(
            LftCoeffs::new(Rational::one(), Rational::one(), Rational::one(), -Rational::one())
                .unwrap_err(),
            Error::HeadUndefined
        );
        // applying at a pole of the map
        let m = map(1, 0, 1, -2);
        assert_eq!(m.apply_rational(&Rational::from(2)), Err(Error::PoleAtPoint));
    }

    #[test]
    fn terminated_fractions_transform_to_terminated_fractions() {
        let id = FamilyId::Bernoulli { n: 1, lambda: rat(1, 3) };
        let cf = build(&id, 6).unwrap();
        assert_eq!(cf.terms.len(), 2);
        let m = map(2, 1, 1, 1);
        let t = lft_transform(&cf, &m).unwrap();
        assert!(t.meta.terminated);
        assert_eq!(t.terms.len(), 2);
        // exactness survives: Q~ . image - P~ . 1 vanishes identically
        let image = m.apply_series(&target_series(&id, 12).unwrap()).unwrap();
        let pairs = t.convergents(2).unwrap();
        let diff = image.mul_poly(&pairs[2].q) - Series::from_poly(&pairs[2].p, 12);
        assert!(diff.is_zero());
    }
}
