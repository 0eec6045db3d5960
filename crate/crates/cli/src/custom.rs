//! TOML description of a user-supplied continued fraction.
//!
//! ```toml
//! kind = "S"                # c_0 / (1 - c_1 s / (1 - c_2 s / ...))
//! c = [1, [0, 1], 2]        # a coefficient is an integer or ascending q-coefficients
//! ```
//!
//! ```toml
//! kind = "J"                # head / (1 - γ_0 s - λ_1 s² / (1 - γ_1 s - ...))
//! head = 1
//! gamma = [1, 3]
//! lambda = [1, 4]           # λ_1, λ_2, ...
//! ```
//!
//! `preset = "f1"` (or f2, hn, viennot) selects a built-in fraction instead.
//! Unlisted coefficients are zero.

use genocchi::contfrac::{CFSpec, NamedFraction};
use genocchi::IntPoly;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Poly(Vec<i64>),
}

impl From<Coeff> for IntPoly {
    fn from(c: Coeff) -> Self {
        match c {
            Coeff::Int(v) => IntPoly::constant(v),
            Coeff::Poly(v) => IntPoly::from_i64s(&v),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: Option<String>,
    preset: Option<String>,
    c: Option<Vec<Coeff>>,
    head: Option<Coeff>,
    gamma: Option<Vec<Coeff>>,
    lambda: Option<Vec<Coeff>>,
}

fn polys(v: Option<Vec<Coeff>>) -> Vec<IntPoly> {
    v.unwrap_or_default().into_iter().map(IntPoly::from).collect()
}

pub fn parse_spec(text: &str) -> Result<CFSpec, String> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| format!("invalid fraction spec: {e}"))?;
    if let Some(name) = raw.preset {
        if raw.kind.is_some() || raw.c.is_some() || raw.head.is_some() || raw.gamma.is_some() || raw.lambda.is_some() {
            return Err("`preset` cannot be combined with other keys".into());
        }
        return name.parse::<NamedFraction>().map(NamedFraction::spec).map_err(|e| e.to_string());
    }
    match raw.kind.as_deref() {
        Some("S") | Some("s") => {
            if raw.head.is_some() || raw.gamma.is_some() || raw.lambda.is_some() {
                return Err("an S-fraction takes only `c`".into());
            }
            Ok(CFSpec::s_from_list(polys(raw.c)))
        }
        Some("J") | Some("j") => {
            if raw.c.is_some() {
                return Err("a J-fraction takes `head`, `gamma` and `lambda`, not `c`".into());
            }
            let head = raw.head.map(IntPoly::from).unwrap_or_else(|| IntPoly::constant(1));
            Ok(CFSpec::j_from_lists(head, polys(raw.gamma), polys(raw.lambda)))
        }
        Some(other) => Err(format!("unknown fraction kind `{other}`, expected S or J")),
        None => Err("missing `kind` (S or J) or `preset`".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use genocchi::contfrac::expand;

    fn series(text: &str, order: usize) -> Vec<String> {
        expand(&parse_spec(text).unwrap(), order)
            .unwrap()
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn s_fraction_catalan() {
        assert_eq!(series("kind = \"S\"\nc = [1,1,1,1,1,1,1]", 5), ["1", "1", "2", "5", "14", "42"]);
    }

    #[test]
    fn j_fraction_matches_preset() {
        let j = "kind = \"J\"\nhead = 1\ngamma = [1, 4, 9]\nlambda = [1, 9]";
        let hn = series("preset = \"hn\"", 3);
        assert_eq!(series(j, 3), hn);
    }

    #[test]
    fn polynomial_coefficients() {
        assert_eq!(series("kind = \"S\"\nc = [1, [0, 1]]", 2), ["1", "q", "q^2"]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(parse_spec("kind = \"X\"").is_err());
        assert!(parse_spec("c = [1]").is_err());
        assert!(parse_spec("kind = \"S\"\nhead = 1").is_err());
        assert!(parse_spec("preset = \"nope\"").is_err());
        assert!(parse_spec("preset = \"f1\"\nkind = \"S\"").is_err());
        assert!(parse_spec("kind = \"S\"\nbogus = 1").is_err());
    }
}
