//! Human-readable text rendering of fractions, terms, and convergents.

use cfrac::cf::{CFExpansion, ConvergentPair, PartialTerm};
use cfrac::numerics::Rational;
use cfrac::poly::Poly;

/// Sign of the lowest-degree nonzero coefficient; zero counts as positive.
fn leading_is_negative(p: &Poly) -> bool {
    p.coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .map(Rational::is_negative)
        .unwrap_or(false)
}

fn nonzero_count(p: &Poly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Splits a stored numerator into the join sign and its positive magnitude,
/// so levels read `... - 2x/(3+x - ...)` the way the sources typeset them.
fn sign_magnitude(num: &Poly) -> (char, Poly) {
    if leading_is_negative(num) {
        ('-', -num)
    } else {
        ('+', num.clone())
    }
}

fn magnitude_text(mag: &Poly) -> String {
    if nonzero_count(mag) > 1 {
        format!("({mag})")
    } else {
        mag.to_string()
    }
}

fn tail_text(terms: &[PartialTerm]) -> String {
    let mut s = terms[0].den.to_string();
    if terms.len() > 1 {
        s.push_str(&join_text(&terms[1..]));
    }
    s
}

fn join_text(terms: &[PartialTerm]) -> String {
    let (sign, mag) = sign_magnitude(&terms[0].num);
    format!(" {} {}/({})", sign, magnitude_text(&mag), tail_text(terms))
}

/// One-line nested rendering of the whole fraction.
pub fn fraction_line(cf: &CFExpansion) -> String {
    if cf.terms.is_empty() {
        return cf.head.to_string();
    }
    if cf.head.is_zero() {
        let (sign, mag) = sign_magnitude(&cf.terms[0].num);
        let lead = format!("{}/({})", magnitude_text(&mag), tail_text(&cf.terms));
        return if sign == '-' {
            format!("-{lead}")
        } else {
            lead
        };
    }
    format!("{}{}", cf.head, join_text(&cf.terms))
}

/// Per-level listing: `k=1: - x/(2+x)`.
pub fn term_rows(cf: &CFExpansion) -> Vec<String> {
    cf.terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let (sign, mag) = sign_magnitude(&t.num);
            format!("k={}: {} {}/({})", i + 1, sign, magnitude_text(&mag), t.den)
        })
        .collect()
}

/// Per-index listing: `n=2: P = 15, Q = 15-5x+3x^2`.
pub fn convergent_rows(pairs: &[ConvergentPair]) -> Vec<String> {
    pairs
        .iter()
        .map(|pair| format!("n={}: P = {}, Q = {}", pair.index, pair.p, pair.q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cfrac::families::{build, FamilyId};

    #[test]
    fn classical_bernoulli_line_uses_minus_joins() {
        let cf = build(
            &FamilyId::Bernoulli { n: 1, lambda: Rational::zero() },
            4,
        )
        .unwrap();
        assert_eq!(
            fraction_line(&cf),
            "1 - x/(2+x - 2x/(3+x - 3x/(4+x - 4x/(5+x))))"
        );
    }

    #[test]
    fn zeta_line_mixes_plus_and_minus_joins() {
        let cf = build(&FamilyId::Zeta { s: 2 }, 4).unwrap();
        assert_eq!(
            fraction_line(&cf),
            "1/(x + x^2/(4 - 16x/(9+4x - 81x/(16+9x))))"
        );
    }

    #[test]
    fn harmonic_line_parenthesizes_polynomial_numerators() {
        let cf = build(
            &FamilyId::Harmonic { m: 1, a: Rational::one(), b: Rational::one() },
            3,
        )
        .unwrap();
        assert_eq!(
            fraction_line(&cf),
            "x/(1-x - (x-x^2)/(2+x - 4x/(3+2x)))"
        );
    }

    #[test]
    fn euler_line_works_in_the_squared_variable() {
        let cf = build(&FamilyId::Euler { n: 0 }, 2).unwrap();
        assert_eq!(fraction_line(&cf), "1 - x^2/(2+x^2 - 2x^2/(12+x^2))");
    }

    #[test]
    fn head_only_fraction_renders_as_its_head() {
        let cf = build(
            &FamilyId::Bernoulli { n: 1, lambda: Rational::one() },
            6,
        )
        .unwrap();
        // lambda = 1/N terminates before the first level
        assert_eq!(fraction_line(&cf), "1");
    }

    #[test]
    fn term_rows_show_sign_and_denominator() {
        let cf = build(
            &FamilyId::Bernoulli { n: 1, lambda: Rational::zero() },
            2,
        )
        .unwrap();
        assert_eq!(
            term_rows(&cf),
            vec!["k=1: - x/(2+x)", "k=2: - 2x/(3+x)"]
        );
    }

    #[test]
    fn convergent_rows_carry_both_polynomials() {
        let cf = build(&FamilyId::Arctan, 2).unwrap();
        let pairs = cf.convergents(2).unwrap();
        assert_eq!(convergent_rows(&pairs)[2], "n=2: P = 15, Q = 15-5x+3x^2");
    }
}
