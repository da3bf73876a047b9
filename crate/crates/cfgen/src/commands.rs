//! Command implementations: each returns the text rendering, the typed JSON
//! report, and whether every check passed. Errors split into usage problems
//! (bad parameters, unreadable input) and failed computations (poles,
//! inextractable series), which the binary maps to distinct exit codes.

use std::fmt;

use cfrac::cf::{self, ConvergentPair};
use cfrac::error::Error;
use cfrac::families::{self, FamilyId};
use cfrac::numerics::Rational;
use cfrac::sequences::{bernoulli_numbers, cauchy_numbers, factorial};
use cfrac::series::Series;
use cfrac::series2cf;
use cfrac::transform::{lft_transform, LftCoeffs};

use crate::family;
use crate::render;
use crate::report::{
    pairs_json, sign_str, valuation_str, CfJson, CheckJson, DefectJson, EvalReport, ExpandReport,
    MapJson, Series2cfReport, StepJson, TableReport, TableRowJson, TransformReport,
    VerifyReport, VerifyTargetJson,
};
use crate::verify::{self, FamilyVerification};

/// How a command invocation failed, before any report could be produced.
#[derive(Debug)]
pub enum CmdError {
    /// caller error: unknown names, invalid parameters, unreadable files
    Usage(String),
    /// well-posed request whose mathematics refused: pole, no expansion
    Failed(String),
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(m) | CmdError::Failed(m) => write!(f, "{m}"),
        }
    }
}

pub type CmdResult<R> = std::result::Result<(R, String, bool), CmdError>;

/// Parameter validation failures are usage errors; everything else the
/// library reports is a failed computation.
fn lib_error(e: Error) -> CmdError {
    match e {
        Error::InvalidFamily(_) | Error::ParseRational(_) => CmdError::Usage(e.to_string()),
        other => CmdError::Failed(other.to_string()),
    }
}

fn convergent_section(pairs: &[ConvergentPair]) -> String {
    render::convergent_rows(pairs)
        .iter()
        .map(|row| format!("  {row}\n"))
        .collect()
}

fn term_section(cf: &cfrac::CFExpansion) -> String {
    render::term_rows(cf)
        .iter()
        .map(|row| format!("  {row}\n"))
        .collect()
}

pub fn cmd_expand(id: &FamilyId, depth: usize) -> CmdResult<ExpandReport> {
    let cf = families::build(id, depth).map_err(lib_error)?;
    let used = cf.available_depth();
    let pairs = cf.convergents(used).map_err(lib_error)?;

    let mut text = format!("family: {}\ndepth: {used}", cf.meta.label);
    if cf.meta.terminated {
        text.push_str(" (terminates: the fraction is exact from here)");
    }
    text.push_str(&format!("\nf ~ {}\n", render::fraction_line(&cf)));
    if !cf.terms.is_empty() {
        text.push_str("terms:\n");
        text.push_str(&term_section(&cf));
    }
    text.push_str("convergents:\n");
    text.push_str(&convergent_section(&pairs));

    let report = ExpandReport {
        command: "expand",
        family: family::echo(id),
        label: cf.meta.label.clone(),
        depth: used,
        display_sign: sign_str(cf.meta.display_sign),
        terminated: cf.meta.terminated,
        cf: CfJson::of(&cf),
        convergents: pairs_json(&pairs),
    };
    Ok((report, text, true))
}

fn verification_json(v: &FamilyVerification) -> VerifyTargetJson {
    VerifyTargetJson {
        family: family::echo(&v.id),
        label: v.id.label(),
        depth: v.depth,
        checks: v
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name,
                status: c.status.as_str(),
                witness: Some(c.witness.clone()),
            })
            .collect(),
    }
}

fn verification_block(v: &FamilyVerification) -> String {
    let mut out = format!("{} (depth {}):\n", v.id.label(), v.depth);
    for c in &v.checks {
        out.push_str(&format!("  {}: {} — {}\n", c.name, c.status.as_str(), c.witness));
    }
    out
}

fn verification_line(v: &FamilyVerification) -> String {
    match v.checks.iter().find(|c| c.status == verify::Status::Fail) {
        Some(c) => format!("{}: FAIL ({}: {})\n", v.id.label(), c.name, c.witness),
        None => format!("{}: pass\n", v.id.label()),
    }
}

pub fn cmd_verify(id: Option<&FamilyId>, depth: usize) -> CmdResult<VerifyReport> {
    let (all, verifications) = match id {
        Some(id) => (
            false,
            vec![verify::verify_family(id, depth).map_err(lib_error)?],
        ),
        None => (true, verify::verify_grid(depth)),
    };
    let passed = verifications.iter().all(FamilyVerification::passed);

    let mut text = String::new();
    if all {
        text.push_str(&format!(
            "verify --all: {} family instances at depth {depth}\n",
            verifications.len()
        ));
        for v in &verifications {
            text.push_str(&verification_line(v));
        }
    } else {
        for v in &verifications {
            text.push_str(&verification_block(v));
        }
    }
    text.push_str(if passed { "result: PASS\n" } else { "result: FAIL\n" });

    let report = VerifyReport {
        command: "verify",
        all,
        depth,
        targets: verifications.iter().map(verification_json).collect(),
        passed,
    };
    Ok((report, text, passed))
}

pub fn cmd_eval(id: &FamilyId, depth: usize, x: &Rational, digits: usize) -> CmdResult<EvalReport> {
    let cf = families::build(id, depth).map_err(lib_error)?;
    let used = cf.available_depth();
    let pairs = cf.convergents(used).map_err(lib_error)?;
    let value = cf::eval_convergent(&pairs[used], x).map_err(lib_error)?;
    let decimal = value.to_decimal(digits);

    let text = format!(
        "family: {}\ndepth: {used}\nx = {x}\nexact: {value}\ndecimal ({digits} digits): {}{}\n",
        cf.meta.label,
        decimal.text,
        if decimal.exact { " (exact)" } else { "" },
    );
    let report = EvalReport {
        command: "eval",
        family: family::echo(id),
        label: cf.meta.label.clone(),
        depth: used,
        x: x.to_string(),
        digits,
        exact: value.to_string(),
        decimal: decimal.text,
        decimal_is_exact: decimal.exact,
    };
    Ok((report, text, true))
}

/// `coeff*v + constant` with the usual notational collapses.
fn linear_text(coeff: &Rational, constant: &Rational) -> String {
    let v_part = if coeff.is_zero() {
        String::new()
    } else if coeff.is_one() {
        "v".to_string()
    } else if (-coeff).is_one() {
        "-v".to_string()
    } else {
        format!("{coeff}v")
    };
    if constant.is_zero() {
        if v_part.is_empty() {
            "0".to_string()
        } else {
            v_part
        }
    } else if v_part.is_empty() {
        constant.to_string()
    } else if constant.is_negative() {
        format!("{v_part} - {}", -constant)
    } else {
        format!("{v_part} + {constant}")
    }
}

pub fn cmd_transform(
    id: &FamilyId,
    map: &LftCoeffs,
    depth: usize,
) -> CmdResult<TransformReport> {
    let cf = families::build(id, depth).map_err(lib_error)?;
    let transformed = lft_transform(&cf, map).map_err(|e| match e {
        // shape and map problems are the caller's choice of arguments
        Error::NotPureGhForm | Error::DegenerateMap | Error::HeadUndefined => {
            CmdError::Usage(e.to_string())
        }
        other => CmdError::Failed(other.to_string()),
    })?;
    let used = transformed.available_depth();
    let pairs = transformed.convergents(used).map_err(lib_error)?;

    // cross-check: the transformed convergent must contact the mapped target
    let required = used + 1;
    let f = families::target_series(id, required + 2).map_err(lib_error)?;
    let image = map.apply_series(&f).map_err(lib_error)?;
    let defect = cf::convergent_defect(&pairs[used], &image, transformed.meta.contract);
    let defect_ok = defect.meets(required);

    let mut text = format!(
        "family: {}\nmap: v -> ({})/({})\ndepth: {used}\ng ~ {}\n",
        cf.meta.label,
        linear_text(&map.a, &map.b),
        linear_text(&map.c, &map.d),
        render::fraction_line(&transformed),
    );
    text.push_str("terms:\n");
    text.push_str(&term_section(&transformed));
    text.push_str(&format!(
        "series cross-check: defect order {} at convergent {used} (required >= {required}): {}\n",
        valuation_str(defect),
        if defect_ok { "pass" } else { "FAIL" },
    ));

    let report = TransformReport {
        command: "transform",
        family: family::echo(id),
        label: transformed.meta.label.clone(),
        map: MapJson {
            a: map.a.to_string(),
            b: map.b.to_string(),
            c: map.c.to_string(),
            d: map.d.to_string(),
        },
        depth: used,
        display_sign: sign_str(transformed.meta.display_sign),
        terminated: transformed.meta.terminated,
        cf: CfJson::of(&transformed),
        defect: DefectJson {
            index: used,
            required,
            order: valuation_str(defect),
            status: if defect_ok { "pass" } else { "fail" },
        },
    };
    Ok((report, text, defect_ok))
}

/// Named sources give the series enough coefficients for the requested
/// depth; file sources carry their own order and may come up short.
fn load_source(source: &str, depth: usize) -> std::result::Result<Series, CmdError> {
    let order = 2 * depth + 2;
    match source {
        "ogf-cauchy" => Ok(Series::from_coeffs(cauchy_numbers(order))),
        "ogf-bernoulli" => Ok(Series::from_coeffs(bernoulli_numbers(order))),
        "egf-bernoulli" => families::target_series(
            &FamilyId::Bernoulli {
                n: 1,
                lambda: Rational::zero(),
            },
            order,
        )
        .map_err(lib_error),
        "egf-cauchy" => families::target_series(
            &FamilyId::Cauchy {
                n: 1,
                lambda: Rational::zero(),
            },
            order,
        )
        .map_err(lib_error),
        other => match other.strip_prefix("file:") {
            Some(path) => load_series_file(path),
            None => Err(CmdError::Usage(format!(
                "unknown source '{other}' (expected ogf-cauchy, ogf-bernoulli, egf-bernoulli, egf-cauchy, or file:PATH)"
            ))),
        },
    }
}

#[derive(serde::Deserialize)]
struct SeriesFile {
    coeffs: Vec<String>,
    order: usize,
}

fn load_series_file(path: &str) -> std::result::Result<Series, CmdError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read '{path}': {e}")))?;
    let parsed: SeriesFile = serde_json::from_str(&raw)
        .map_err(|e| CmdError::Usage(format!("'{path}' is not a series file: {e}")))?;
    if parsed.coeffs.len() != parsed.order + 1 {
        return Err(CmdError::Usage(format!(
            "'{path}' declares order {} but carries {} coefficients",
            parsed.order,
            parsed.coeffs.len()
        )));
    }
    let coeffs = parsed
        .coeffs
        .iter()
        .map(|s| s.parse::<Rational>())
        .collect::<cfrac::Result<Vec<_>>>()
        .map_err(|e| CmdError::Usage(format!("'{path}': {e}")))?;
    Ok(Series::from_coeffs(coeffs))
}

pub fn cmd_series2cf(source: &str, depth: usize) -> CmdResult<Series2cfReport> {
    let input = load_source(source, depth)?;
    let cfr = series2cf::expand_cfraction(&input, depth).map_err(lib_error)?;

    // roundtrip: the extracted fraction must reproduce the input at least
    // through x^depth (exactly, when it terminated)
    let roundtrip_order = if cfr.terminated { input.order() } else { depth };
    let rebuilt = series2cf::reconstruct(&cfr, roundtrip_order).map_err(lib_error)?;
    let roundtrip_ok =
        (0..=roundtrip_order).all(|i| rebuilt.coeff(i) == input.coeff(i));

    let mut text = format!(
        "source: {source}\ninput order: {}\nc0 = {}\n",
        input.order(),
        cfr.c0
    );
    for (i, step) in cfr.steps.iter().enumerate() {
        text.push_str(&format!("k={}: a = {}, b = {}\n", i + 1, step.a, step.b));
    }
    if cfr.terminated {
        text.push_str("terminates: the input is a rational function\n");
    }
    text.push_str(&format!(
        "roundtrip through x^{roundtrip_order}: {}\n",
        if roundtrip_ok { "pass" } else { "FAIL" },
    ));

    let report = Series2cfReport {
        command: "series2cf",
        source: source.to_string(),
        depth,
        input_order: input.order(),
        c0: cfr.c0.to_string(),
        steps: cfr
            .steps
            .iter()
            .map(|s| StepJson {
                a: s.a.to_string(),
                b: s.b.to_string(),
            })
            .collect(),
        terminated: cfr.terminated,
        roundtrip_order,
        roundtrip: if roundtrip_ok { "pass" } else { "fail" },
    };
    Ok((report, text, roundtrip_ok))
}

/// Families whose numbers are exponential-generating-function coefficients:
/// the table lists `n! [x^n]`; the rest list the coefficient itself.
fn table_symbol(id: &FamilyId) -> std::result::Result<(String, bool), CmdError> {
    let (symbol, egf) = match id {
        FamilyId::Bernoulli { n, lambda } => (format!("beta_{{{n},n}}({lambda})"), true),
        FamilyId::Cauchy { n, lambda } => (format!("gamma_{{{n},n}}({lambda})"), true),
        FamilyId::Euler { n } => (format!("E_{{{n},n}}"), true),
        FamilyId::EulerSecond { n } => (format!("E'_{{{n},n}}"), true),
        FamilyId::Harmonic { m, .. } => (format!("h_n^({m})"), false),
        FamilyId::OgfBernoulli => ("B_n".to_string(), false),
        FamilyId::OgfCauchy => ("c_n".to_string(), false),
        FamilyId::Arctan | FamilyId::CauchyInterleaved { .. } | FamilyId::Zeta { .. } => {
            return Err(CmdError::Usage(format!(
                "family '{}' has no named-number table",
                id.name()
            )))
        }
    };
    Ok((symbol, egf))
}

pub fn cmd_table(id: &FamilyId, count: usize) -> CmdResult<TableReport> {
    let (symbol, egf) = table_symbol(id)?;
    let f = families::target_series(id, count).map_err(lib_error)?;
    let rows: Vec<TableRowJson> = (0..=count)
        .map(|n| {
            let value = if egf {
                &f.coeff(n) * &Rational::from_integer(factorial(n as u64))
            } else {
                f.coeff(n)
            };
            TableRowJson {
                n,
                value: value.to_string(),
            }
        })
        .collect();

    let mut text = format!("family: {}\nsymbol: {symbol}\n", id.label());
    for row in &rows {
        text.push_str(&format!("n={}: {}\n", row.n, row.value));
    }

    let report = TableReport {
        command: "table",
        family: family::echo(id),
        label: id.label(),
        symbol,
        count,
        rows,
    };
    Ok((report, text, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classical_bernoulli() -> FamilyId {
        FamilyId::Bernoulli {
            n: 1,
            lambda: Rational::zero(),
        }
    }

    #[test]
    fn expand_lists_the_printed_denominators() {
        let (report, text, passed) = cmd_expand(&classical_bernoulli(), 4).unwrap();
        assert!(passed);
        assert_eq!(report.cf.terms.len(), 4);
        let dens: Vec<String> = report
            .cf
            .terms
            .iter()
            .map(|t| {
                let p = cfrac::Poly::new(
                    t.den.iter().map(|c| c.parse().unwrap()).collect(),
                );
                p.to_string()
            })
            .collect();
        assert_eq!(dens, ["2+x", "3+x", "4+x", "5+x"]);
        assert!(text.contains("1 - x/(2+x - 2x/(3+x - 3x/(4+x - 4x/(5+x))))"));
    }

    #[test]
    fn expand_clamps_to_the_terminating_depth() {
        let id = FamilyId::Bernoulli {
            n: 1,
            lambda: Rational::ratio(1, 2),
        };
        let (report, _, _) = cmd_expand(&id, 10).unwrap();
        assert!(report.terminated);
        assert_eq!(report.depth, 1);
        assert_eq!(report.convergents.len(), 2);
    }

    #[test]
    fn eval_reports_exact_and_truncated_forms() {
        let (report, _, passed) = cmd_eval(&FamilyId::Arctan, 2, &Rational::one(), 6).unwrap();
        assert!(passed);
        assert_eq!(report.exact, "15/13");
        assert_eq!(report.decimal, "1.153846");
        assert!(!report.decimal_is_exact);
    }

    #[test]
    fn eval_at_a_pole_is_a_failed_computation() {
        // Q_1 = 2 + x vanishes at x = -2
        let err = cmd_eval(&classical_bernoulli(), 1, &Rational::from(-2), 6).unwrap_err();
        assert!(matches!(err, CmdError::Failed(_)));
    }

    #[test]
    fn transform_rejects_families_without_gh_shape() {
        let map = LftCoeffs::new(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
        .unwrap();
        let err = cmd_transform(&FamilyId::OgfBernoulli, &map, 4).unwrap_err();
        assert!(matches!(err, CmdError::Usage(_)));
    }

    #[test]
    fn transform_cross_checks_the_mapped_series() {
        let map = LftCoeffs::new(
            -Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
        )
        .unwrap();
        let (report, _, passed) = cmd_transform(&classical_bernoulli(), &map, 6).unwrap();
        assert!(passed);
        assert_eq!(report.defect.status, "pass");
        assert_eq!(report.defect.index, 6);
    }

    #[test]
    fn series2cf_named_source_roundtrips() {
        let (report, _, passed) = cmd_series2cf("ogf-cauchy", 8).unwrap();
        assert!(passed);
        assert_eq!(report.steps.len(), 8);
        assert_eq!(report.steps[0].a, "1");
        assert_eq!(report.steps[0].b, "2");
        assert_eq!(report.roundtrip, "pass");
    }

    #[test]
    fn series2cf_unknown_source_is_a_usage_error() {
        let err = cmd_series2cf("ogf-fibonacci", 4).unwrap_err();
        assert!(matches!(err, CmdError::Usage(_)));
    }

    #[test]
    fn table_scales_egf_families_by_factorials() {
        let (report, _, _) = cmd_table(&classical_bernoulli(), 8).unwrap();
        assert_eq!(report.rows[8].value, "-1/30");
        assert_eq!(report.rows[1].value, "-1/2");
        let (report, _, _) = cmd_table(&FamilyId::OgfCauchy, 8).unwrap();
        assert_eq!(report.rows[8].value, "-33953/90");
    }

    #[test]
    fn table_rejects_families_without_named_numbers() {
        assert!(matches!(
            cmd_table(&FamilyId::Zeta { s: 2 }, 4).unwrap_err(),
            CmdError::Usage(_)
        ));
        assert!(matches!(
            cmd_table(&FamilyId::Arctan, 4).unwrap_err(),
            CmdError::Usage(_)
        ));
    }
}
