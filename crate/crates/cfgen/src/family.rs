//! Resolution of command-line family parameters into catalog identifiers.

use cfrac::families::FamilyId;
use cfrac::numerics::Rational;
use serde::Serialize;

/// Raw family-related flag values as they arrive from the parser.
#[derive(Clone, Default, Debug)]
pub struct FamilyFlags {
    pub family: String,
    pub n: Option<u32>,
    pub lambda: Option<Rational>,
    pub m: Option<u32>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub s: Option<u32>,
}

/// Echo of the resolved parameters, embedded in every report.
#[derive(Clone, Serialize, PartialEq, Eq, Debug)]
pub struct FamilyEcho {
    pub name: String,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
}

pub const FAMILY_NAMES: [&str; 10] = [
    "arctan",
    "bernoulli",
    "cauchy",
    "cauchy_interleaved",
    "euler",
    "euler2",
    "harmonic",
    "zeta",
    "ogf_bernoulli",
    "ogf_cauchy",
];

fn reject_unused(flags: &FamilyFlags, used: &[&str]) -> Result<(), String> {
    let provided = [
        (flags.n.is_some(), "--N"),
        (flags.lambda.is_some(), "--lambda"),
        (flags.m.is_some(), "--m"),
        (flags.a.is_some(), "--a"),
        (flags.b.is_some(), "--b"),
        (flags.s.is_some(), "--s"),
    ];
    for (given, name) in provided {
        if given && !used.contains(&name) {
            return Err(format!(
                "family '{}' does not take {}",
                flags.family, name
            ));
        }
    }
    Ok(())
}

/// Applies per-family defaults and validates the resulting parameters.
/// Defaults pick the classical instances: bernoulli/cauchy N=1, euler N=0,
/// harmonic m=a=b=1, zeta s=2, deformation 0.
pub fn resolve(flags: &FamilyFlags) -> Result<FamilyId, String> {
    let id = match flags.family.as_str() {
        "arctan" => {
            reject_unused(flags, &[])?;
            FamilyId::Arctan
        }
        "bernoulli" => {
            reject_unused(flags, &["--N", "--lambda"])?;
            FamilyId::Bernoulli {
                n: flags.n.unwrap_or(1),
                lambda: flags.lambda.clone().unwrap_or_else(Rational::zero),
            }
        }
        "cauchy" => {
            reject_unused(flags, &["--N", "--lambda"])?;
            FamilyId::Cauchy {
                n: flags.n.unwrap_or(1),
                lambda: flags.lambda.clone().unwrap_or_else(Rational::zero),
            }
        }
        "cauchy_interleaved" => {
            reject_unused(flags, &["--N"])?;
            FamilyId::CauchyInterleaved {
                n: flags.n.unwrap_or(1),
            }
        }
        "euler" => {
            reject_unused(flags, &["--N"])?;
            FamilyId::Euler {
                n: flags.n.unwrap_or(0),
            }
        }
        "euler2" => {
            reject_unused(flags, &["--N"])?;
            FamilyId::EulerSecond {
                n: flags.n.unwrap_or(0),
            }
        }
        "harmonic" => {
            reject_unused(flags, &["--m", "--a", "--b"])?;
            FamilyId::Harmonic {
                m: flags.m.unwrap_or(1),
                a: flags.a.clone().unwrap_or_else(Rational::one),
                b: flags.b.clone().unwrap_or_else(Rational::one),
            }
        }
        "zeta" => {
            reject_unused(flags, &["--s"])?;
            FamilyId::Zeta {
                s: flags.s.unwrap_or(2),
            }
        }
        "ogf_bernoulli" => {
            reject_unused(flags, &[])?;
            FamilyId::OgfBernoulli
        }
        "ogf_cauchy" => {
            reject_unused(flags, &[])?;
            FamilyId::OgfCauchy
        }
        other => {
            return Err(format!(
                "unknown family '{}' (expected one of {})",
                other,
                FAMILY_NAMES.join(", ")
            ))
        }
    };
    id.validate().map_err(|e| e.to_string())?;
    Ok(id)
}

pub fn echo(id: &FamilyId) -> FamilyEcho {
    let mut e = FamilyEcho {
        name: id.name().to_string(),
        n: None,
        lambda: None,
        m: None,
        a: None,
        b: None,
        s: None,
    };
    match id {
        FamilyId::Arctan | FamilyId::OgfBernoulli | FamilyId::OgfCauchy => {}
        FamilyId::Bernoulli { n, lambda } | FamilyId::Cauchy { n, lambda } => {
            e.n = Some(*n);
            e.lambda = Some(lambda.to_string());
        }
        FamilyId::CauchyInterleaved { n }
        | FamilyId::Euler { n }
        | FamilyId::EulerSecond { n } => {
            e.n = Some(*n);
        }
        FamilyId::Harmonic { m, a, b } => {
            e.m = Some(*m);
            e.a = Some(a.to_string());
            e.b = Some(b.to_string());
        }
        FamilyId::Zeta { s } => {
            e.s = Some(*s);
        }
    }
    e
}

/// Reads the depth cap from `CFGEN_DEPTH_LIMIT` (default 64) and applies it.
pub fn check_depth(depth: usize) -> Result<(), String> {
    let limit = match std::env::var("CFGEN_DEPTH_LIMIT") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| format!("CFGEN_DEPTH_LIMIT must be an integer, got '{v}'"))?,
        Err(_) => 64,
    };
    if depth > limit {
        return Err(format!("depth {depth} exceeds the limit {limit}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags(family: &str) -> FamilyFlags {
        FamilyFlags {
            family: family.to_string(),
            ..Default::default()
        }
    }

    #[test]
    fn defaults_pick_classical_instances() {
        assert_eq!(
            resolve(&flags("bernoulli")).unwrap(),
            FamilyId::Bernoulli { n: 1, lambda: Rational::zero() }
        );
        assert_eq!(resolve(&flags("euler")).unwrap(), FamilyId::Euler { n: 0 });
        assert_eq!(resolve(&flags("zeta")).unwrap(), FamilyId::Zeta { s: 2 });
        assert_eq!(
            resolve(&flags("harmonic")).unwrap(),
            FamilyId::Harmonic { m: 1, a: Rational::one(), b: Rational::one() }
        );
    }

    #[test]
    fn foreign_parameters_are_rejected() {
        let mut f = flags("arctan");
        f.n = Some(1);
        assert!(resolve(&f).unwrap_err().contains("--N"));

        let mut f = flags("bernoulli");
        f.s = Some(2);
        assert!(resolve(&f).unwrap_err().contains("--s"));
    }

    #[test]
    fn invalid_parameters_surface_the_library_message() {
        let mut f = flags("zeta");
        f.s = Some(1);
        assert!(resolve(&f).unwrap_err().contains("zeta"));
        let mut f = flags("cauchy");
        f.n = Some(0);
        assert!(resolve(&f).unwrap_err().contains("cauchy"));
    }

    #[test]
    fn unknown_family_lists_the_vocabulary() {
        let err = resolve(&flags("fibonacci")).unwrap_err();
        assert!(err.contains("fibonacci"));
        assert!(err.contains("cauchy_interleaved"));
    }

    #[test]
    fn echo_round_trips_the_parameters() {
        let id = FamilyId::Harmonic {
            m: 2,
            a: Rational::ratio(1, 2),
            b: Rational::from(2),
        };
        let e = echo(&id);
        assert_eq!(e.name, "harmonic");
        assert_eq!(e.m, Some(2));
        assert_eq!(e.a.as_deref(), Some("1/2"));
        assert_eq!(e.b.as_deref(), Some("2"));
        assert_eq!(e.n, None);
    }
}
