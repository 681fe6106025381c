//! Element literals.
//!
//! Coordinates are separated by `;`. A `Z/p^e` coordinate is a decimal
//! integer; a `GF(p^d)` coordinate is up to `d` comma-separated base-field
//! digits, lowest degree first (missing high digits are zero); an `N(q,e)`
//! coordinate is up to `e` bracketed `GF(q)` coordinates, `[c0][c1]...` for
//! `c0 + c1 x + ...`, or a single unbracketed `GF(q)` coordinate for a
//! constant. On a ring with several components, a literal without `;` that
//! is a plain integer `j` denotes `j·1`.

use exunit_core::{Element, LocalElement, LocalKind, LocalRingSpec, RingSpec};

use crate::error::CliError;

fn bad(text: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("invalid element literal `{text}`: {why}"))
}

fn parse_u64(text: &str, whole: &str) -> Result<u64, CliError> {
    text.trim().parse::<u64>().map_err(|_| bad(whole, format!("`{}` is not a nonnegative integer", text.trim())))
}

fn parse_digits(spec: &LocalRingSpec, text: &str, whole: &str) -> Result<Vec<u64>, CliError> {
    let d = spec.degree() as usize;
    let mut digits: Vec<u64> = text.split(',').map(|t| parse_u64(t, whole)).collect::<Result<_, _>>()?;
    if digits.len() > d {
        return Err(bad(whole, format!("GF({}) coordinates have {d} digits", spec.residue_size())));
    }
    digits.resize(d, 0);
    Ok(digits)
}

fn parse_local(spec: &LocalRingSpec, text: &str, whole: &str) -> Result<u64, CliError> {
    let text = text.trim();
    let local = match spec.kind() {
        LocalKind::Zpe => LocalElement::Int(parse_u64(text, whole)?),
        LocalKind::Gf => LocalElement::Poly(parse_digits(spec, text, whole)?),
        LocalKind::NilExt => {
            let mut parts = Vec::new();
            if text.starts_with('[') {
                let mut rest = text;
                while !rest.is_empty() {
                    let inner = rest
                        .strip_prefix('[')
                        .and_then(|r| r.split_once(']'))
                        .ok_or_else(|| bad(whole, "unbalanced brackets"))?;
                    parts.push(parse_digits(spec, inner.0, whole)?);
                    rest = inner.1.trim_start();
                }
            } else {
                parts.push(parse_digits(spec, text, whole)?);
            }
            let e = spec.exponent() as usize;
            if parts.len() > e {
                return Err(bad(whole, format!("{spec} coordinates have {e} x-coefficients")));
            }
            parts.resize(e, vec![0; spec.degree() as usize]);
            LocalElement::Nil(parts)
        }
    };
    spec.encode(&local).map_err(|e| bad(whole, format!("{e} in {spec}")))
}

pub fn parse_element(ring: &RingSpec, text: &str) -> Result<Element, CliError> {
    let n = ring.len();
    if n > 1 && !text.contains(';') {
        let j = parse_u64(text, text)?;
        let coords = ring
            .components()
            .iter()
            .map(|c| {
                // j·1 in each component
                let mut acc = 0u64;
                let mut base = c.one();
                let mut j = j;
                while j > 0 {
                    if j & 1 == 1 {
                        acc = c.add(acc, base);
                    }
                    base = c.add(base, base);
                    j >>= 1;
                }
                acc
            })
            .collect();
        return Ok(Element::new(coords));
    }
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != n {
        return Err(bad(text, format!("expected {n} `;`-separated coordinates, found {}", parts.len())));
    }
    let coords = ring
        .components()
        .iter()
        .zip(parts)
        .map(|(spec, part)| parse_local(spec, part, text))
        .collect::<Result<_, _>>()?;
    Ok(Element::new(coords))
}

fn join(digits: &[u64]) -> String {
    digits.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub fn format_element(ring: &RingSpec, x: &Element) -> String {
    ring.components()
        .iter()
        .zip(x.coords())
        .map(|(spec, &code)| match spec.decode(code) {
            LocalElement::Int(v) => v.to_string(),
            LocalElement::Poly(d) => join(&d),
            LocalElement::Nil(parts) => parts.iter().map(|p| format!("[{}]", join(p))).collect(),
        })
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_ring;

    #[test]
    fn coordinates() {
        let r = parse_ring("Z/4+GF(4)+N(3,2)").unwrap();
        let x = parse_element(&r, "3; 0,1; [2][1]").unwrap();
        assert_eq!(x.coords(), &[3, 2, 5]);
        assert_eq!(format_element(&r, &x), "3;0,1;[2][1]");
        assert_eq!(parse_element(&r, &format_element(&r, &x)).unwrap(), x);
    }

    #[test]
    fn shorthands() {
        let f4 = parse_ring("GF(4)").unwrap();
        assert_eq!(parse_element(&f4, "1").unwrap().coords(), &[1]);
        let n = parse_ring("N(3,3)").unwrap();
        assert_eq!(parse_element(&n, "2").unwrap().coords(), &[2]);
        assert_eq!(parse_element(&n, "[0][1]").unwrap().coords(), &[3]);
        let z12 = parse_ring("Z/12").unwrap();
        assert_eq!(parse_element(&z12, "7").unwrap().coords(), &[3, 1]);
        assert_eq!(parse_element(&z12, "1").unwrap(), z12.one());
    }

    #[test]
    fn rejects() {
        let r = parse_ring("Z/4+GF(4)").unwrap();
        assert!(parse_element(&r, "4;0").is_err());
        assert!(parse_element(&r, "1;2").is_err());
        assert!(parse_element(&r, "1;0,0,1").is_err());
        assert!(parse_element(&r, "1;0;0").is_err());
        assert!(parse_element(&r, "x").is_err());
        let n = parse_ring("N(3,2)").unwrap();
        assert!(parse_element(&n, "[1][1][1]").is_err());
        assert!(parse_element(&n, "[1").is_err());
        let z9 = parse_ring("Z/9").unwrap();
        assert!(parse_element(&z9, "9").is_err());
    }
}
