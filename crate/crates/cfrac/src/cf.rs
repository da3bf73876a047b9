//! Generalized continued fractions with polynomial partial terms.
//!
//! A `CFExpansion` is `head + num_1/(den_1 + num_2/(den_2 + ...))` where each
//! `num_k`/`den_k` is a polynomial. Numerators are stored *signed*, i.e.
//! ready for the three-term recurrence
//!
//! ```text
//! P_k = den_k P_{k-1} + num_k P_{k-2}
//! ```
//!
//! so a fraction typeset with subtracted levels stores the negated
//! numerators. Convergents follow the matrix convention
//! `(head 1; 1 0) (den_1 1; num_1 0) ... = (P_n P_{n-1}; Q_n Q_{n-1})`,
//! which fixes the initial pair `P_0 = head`, `Q_0 = 1`.

use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::poly::Poly;
use crate::series::{Series, Valuation};

/// One level of the fraction. `num` is the signed (recurrence-ready) partial
/// numerator; `den` the partial denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialTerm {
    pub num: Poly,
    pub den: Poly,
}

/// Which difference is required to vanish to the certified order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefectContract {
    /// order of `Q_n f - P_n` (the fraction expands `f` itself)
    QfMinusP,
    /// order of `Q_n - P_n f` (the fraction expands the reciprocal-like
    /// object of `f`, which has no power-series inverse)
    QMinusPf,
}

/// Sign convention used when the fraction is typeset.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DisplaySign {
    /// levels joined by `-`; displayed numerators are the negated stored ones
    Minus,
    /// levels joined by `+`; displayed numerators equal the stored ones
    Plus,
}

/// Regular term structure `den_k = g_k + h_k x^e`, `num_k = -g_{k-1} h_k x^e`
/// with `g_0 = 1`. Families with this shape admit product-form convergents
/// and linear fractional transforms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GhForm {
    pub g: Vec<Rational>,
    pub h: Vec<Rational>,
    /// exponent `e` of the variable carried by `h` (2 for even families)
    pub power: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CFMeta {
    pub label: String,
    pub gh: Option<GhForm>,
    pub contract: DefectContract,
    pub display_sign: DisplaySign,
    /// true when a vanishing partial numerator ended the fraction early
    pub terminated: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CFExpansion {
    pub head: Poly,
    pub terms: Vec<PartialTerm>,
    pub meta: CFMeta,
}

/// Numerator/denominator polynomials of the n-th convergent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConvergentPair {
    pub index: usize,
    pub p: Poly,
    pub q: Poly,
}

impl CFExpansion {
    pub fn available_depth(&self) -> usize {
        self.terms.len()
    }

    /// Convergent pairs `P_0/Q_0 .. P_depth/Q_depth` by the three-term
    /// recurrence.
    pub fn convergents(&self, depth: usize) -> Result<Vec<ConvergentPair>> {
        if depth > self.terms.len() {
            return Err(Error::DepthExceedsTerms {
                requested: depth,
                available: self.terms.len(),
                terminated: self.meta.terminated,
            });
        }
        let mut pairs = Vec::with_capacity(depth + 1);
        let mut p_prev2 = Poly::one();
        let mut q_prev2 = Poly::zero();
        let mut p_prev = self.head.clone();
        let mut q_prev = Poly::one();
        pairs.push(ConvergentPair {
            index: 0,
            p: p_prev.clone(),
            q: q_prev.clone(),
        });
        for (k, term) in self.terms.iter().take(depth).enumerate() {
            let p = &(&term.den * &p_prev) + &(&term.num * &p_prev2);
            let q = &(&term.den * &q_prev) + &(&term.num * &q_prev2);
            pairs.push(ConvergentPair {
                index: k + 1,
                p: p.clone(),
                q: q.clone(),
            });
            p_prev2 = p_prev;
            q_prev2 = q_prev;
            p_prev = p;
            q_prev = q;
        }
        Ok(pairs)
    }

    /// The numerator as it appears in print under the fraction's sign
    /// convention.
    pub fn displayed_num(&self, k: usize) -> Poly {
        match self.meta.display_sign {
            DisplaySign::Minus => -&self.terms[k].num,
            DisplaySign::Plus => self.terms[k].num.clone(),
        }
    }
}

/// Product-form convergents for a pure (g,h) fraction with head 1:
///
/// ```text
/// P_n = g_1 ... g_n,
/// Q_n = P_n * sum_{j=0..n} (h_1 ... h_j)/(g_1 ... g_j) x^j
/// ```
///
/// in the plain variable; callers with an even family substitute `x -> x^e`
/// afterwards. All `g_i` must be nonzero.
pub fn closed_form_convergents(g: &[Rational], h: &[Rational], depth: usize) -> Vec<ConvergentPair> {
    assert!(depth <= g.len() && depth <= h.len(), "not enough (g,h) data");
    // prefix products; gp[j] = g_1..g_j
    let mut gp = Vec::with_capacity(depth + 1);
    let mut hp = Vec::with_capacity(depth + 1);
    gp.push(Rational::one());
    hp.push(Rational::one());
    for j in 0..depth {
        assert!(!g[j].is_zero(), "closed form needs nonzero g");
        gp.push(&gp[j] * &g[j]);
        hp.push(&hp[j] * &h[j]);
    }
    (0..=depth)
        .map(|n| {
            let p = Poly::constant(gp[n].clone());
            let coeffs = (0..=n)
                .map(|j| &(&gp[n] / &gp[j]) * &hp[j])
                .collect::<Vec<_>>();
            ConvergentPair {
                index: n,
                p,
                q: Poly::new(coeffs),
            }
        })
        .collect()
}

/// Order of vanishing of the contract difference for one convergent pair.
pub fn convergent_defect(pair: &ConvergentPair, f: &Series, contract: DefectContract) -> Valuation {
    let diff = match contract {
        DefectContract::QfMinusP => f.mul_poly(&pair.q) - Series::from_poly(&pair.p, f.order()),
        DefectContract::QMinusPf => Series::from_poly(&pair.q, f.order()) - f.mul_poly(&pair.p),
    };
    diff.valuation()
}

/// Defect of the depth-`n` convergent against the target `f`, using the
/// fraction's contract. `f` must carry at least `n + 1` coefficients so the
/// generic expectation is checkable at all.
pub fn approx_defect(cf: &CFExpansion, f: &Series, n: usize) -> Result<Valuation> {
    if f.order() < n + 1 {
        return Err(Error::TruncationTooSmall {
            order: f.order(),
            index: n,
        });
    }
    let pairs = cf.convergents(n)?;
    Ok(convergent_defect(&pairs[n], f, cf.meta.contract))
}

/// Checks `P_n Q_{n-1} - P_{n-1} Q_n = (-1)^(n+1) num_1 ... num_n` for every
/// consecutive pair available, which pins both the recurrence wiring and the
/// stored numerator signs.
pub fn determinant_check(cf: &CFExpansion, pairs: &[ConvergentPair]) -> bool {
    let mut product = Poly::one(); // num_1 ... num_n, signed
    for n in 1..pairs.len() {
        product = &product * &cf.terms[n - 1].num;
        let lhs = &(&pairs[n].p * &pairs[n - 1].q) - &(&pairs[n - 1].p * &pairs[n].q);
        let rhs = if n % 2 == 0 { -&product } else { product.clone() };
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Exact value `P_n(x0) / Q_n(x0)`.
pub fn eval_convergent(pair: &ConvergentPair, x0: &Rational) -> Result<Rational> {
    let q = pair.q.eval(x0);
    if q.is_zero() {
        return Err(Error::PoleAtPoint);
    }
    Ok(pair.p.eval(x0) / q)
}

/// Taylor expansion of `P_n/Q_n` to the requested order; `Q_n(0)` must be
/// nonzero.
pub fn convergent_taylor(pair: &ConvergentPair, order: usize) -> Result<Series> {
    Series::from_poly(&pair.p, order).div(&Series::from_poly(&pair.q, order))
}

/// 2x2 polynomial matrix, row major; used for the step-product identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
}

impl Mat2 {
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }
}

/// `(head 1; 1 0)`
pub fn head_matrix(head: &Poly) -> Mat2 {
    Mat2 {
        a: head.clone(),
        b: Poly::one(),
        c: Poly::one(),
        d: Poly::zero(),
    }
}

/// `(den 1; num 0)`
pub fn term_matrix(term: &PartialTerm) -> Mat2 {
    Mat2 {
        a: term.den.clone(),
        b: Poly::one(),
        c: term.num.clone(),
        d: Poly::zero(),
    }
}
