//! Text formats: hyperfield specs, element tokens and coefficient lists
//! (ascending, `c_0` first).

use crate::error::{Error, Result};
use crate::hyperfield::{Element, Hyperfield, Kind, Phase, Trop, Value};
use crate::instances::{build_quotient, coset_of};
use crate::polynomial::Poly;
use crate::ratpoly::RatPoly;
use crate::rational::{parse_rational, Rational};

/// `Q`, `Fp:7`, `S`, `K`, `W`, `P`, `T` or `quot:7:1,2,4`.
pub fn parse_field(spec: &str) -> Result<Hyperfield> {
    let s = spec.trim();
    match s {
        "Q" => return Ok(Hyperfield::rational()),
        "S" => return Ok(Hyperfield::sign()),
        "K" => return Ok(Hyperfield::krasner()),
        "W" => return Ok(Hyperfield::weak_sign()),
        "P" => return Ok(Hyperfield::phase()),
        "T" => return Ok(Hyperfield::tropical()),
        _ => {}
    }
    if let Some(p) = s.strip_prefix("Fp:") {
        let p: u32 = p.parse().map_err(|_| Error::parse(format!("bad prime in {spec:?}")))?;
        return Hyperfield::prime(p);
    }
    if let Some(rest) = s.strip_prefix("quot:") {
        let (p, gens) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("expected quot:<p>:<g1,g2,...>, got {spec:?}")))?;
        let p: u32 = p.parse().map_err(|_| Error::parse(format!("bad prime in {spec:?}")))?;
        let gens = gens
            .split(',')
            .map(|g| g.trim().parse::<u32>().map_err(|_| Error::parse(format!("bad generator {g:?}"))))
            .collect::<Result<Vec<_>>>()?;
        return build_quotient(p, &gens);
    }
    Err(Error::parse(format!("unknown hyperfield {spec:?}")))
}

fn parse_int(tok: &str) -> Result<i64> {
    tok.parse().map_err(|_| Error::parse(format!("invalid integer {tok:?}")))
}

/// One coefficient or element token in the notation of `f`.
pub fn parse_element(f: &Hyperfield, token: &str) -> Result<Element> {
    let t = token.trim();
    let bad = || Error::parse(format!("{t:?} is not an element of {}", f.spec()));
    let value = match f.kind() {
        Kind::Rational => Value::Rational(parse_rational(t)?),
        Kind::Prime(p) => Value::Residue(parse_int(t)?.rem_euclid(i64::from(*p)) as u32),
        Kind::Sign | Kind::WeakSign => match t {
            "0" => Value::Sign(0),
            "1" | "+1" => Value::Sign(1),
            "-1" => Value::Sign(-1),
            _ => return Err(bad()),
        },
        Kind::Krasner => match t {
            "0" => Value::Krasner(false),
            "1" => Value::Krasner(true),
            _ => return Err(bad()),
        },
        Kind::Tropical => match t {
            "inf" | "∞" => Value::Tropical(Trop::Inf),
            _ => Value::Tropical(Trop::Finite(parse_rational(t)?)),
        },
        Kind::Phase => match t {
            "0" => Value::Phase(Phase::Zero),
            "1" => Value::Phase(Phase::angle(Rational::from_integer(0.into()))),
            "-1" => Value::Phase(Phase::angle(Rational::from_integer(1.into()))),
            _ => {
                let q = t.strip_prefix("e^").ok_or_else(bad)?;
                Value::Phase(Phase::angle(parse_rational(q)?))
            }
        },
        Kind::Quotient { p, .. } => {
            let r = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
            let r = parse_int(r)?.rem_euclid(i64::from(*p)) as u32;
            return coset_of(f, r);
        }
        Kind::Custom(_) => {
            return f
                .carrier()?
                .into_iter()
                .find(|e| e.to_string() == t)
                .ok_or_else(bad);
        }
    };
    f.element(value).map_err(|_| bad())
}

/// A comma-separated coefficient list. The flag is set when trailing zeros
/// were dropped.
pub fn parse_poly(f: &Hyperfield, text: &str) -> Result<(Poly, bool)> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Err(Error::parse("empty coefficient list"));
    }
    let coeffs = inner
        .split(',')
        .map(|tok| parse_element(f, tok))
        .collect::<Result<Vec<_>>>()?;
    let n = coeffs.len();
    let p = Poly::new(f, coeffs)?;
    let trimmed = p.coeffs().len() != n;
    Ok((p, trimmed))
}

/// Polynomials separated by `;`, each optionally in parentheses.
pub fn parse_poly_list(f: &Hyperfield, text: &str) -> Result<Vec<(Poly, bool)>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_poly(f, s))
        .collect()
}

pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(parse_rational).collect()
}

pub fn parse_ratpoly(text: &str) -> Result<(RatPoly, bool)> {
    let coeffs = parse_rational_list(text)?;
    if coeffs.is_empty() {
        return Err(Error::parse("empty coefficient list"));
    }
    let n = coeffs.len();
    let p = RatPoly::new(coeffs);
    let trimmed = p.coeffs().len() != n;
    Ok((p, trimmed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn fields() {
        for spec in ["Q", "Fp:7", "S", "K", "W", "P", "T", "quot:7:1,2,4"] {
            assert_eq!(parse_field(spec).unwrap().spec(), spec);
        }
        assert_eq!(parse_field("quot:7:2").unwrap().spec(), "quot:7:1,2,4");
        assert!(matches!(parse_field("Z"), Err(Error::Parse(_))));
        assert!(matches!(parse_field("Fp:8"), Err(Error::Domain(_))));
        assert!(matches!(parse_field("quot:7:x"), Err(Error::Parse(_))));
    }

    #[test]
    fn elements_round_trip() {
        let cases = [
            ("S", "-1"),
            ("W", "1"),
            ("K", "1"),
            ("T", "inf"),
            ("T", "-3/2"),
            ("P", "e^2/3"),
            ("P", "-1"),
            ("P", "0"),
            ("Fp:7", "6"),
            ("quot:7:2", "[3]"),
            ("Q", "-7/3"),
        ];
        for (spec, tok) in cases {
            let f = parse_field(spec).unwrap();
            assert_eq!(parse_element(&f, tok).unwrap().to_string(), tok, "{spec}");
        }
        let q = parse_field("quot:7:2").unwrap();
        assert_eq!(parse_element(&q, "5").unwrap().to_string(), "[3]");
        let p = parse_field("P").unwrap();
        assert_eq!(parse_element(&p, "e^7/3").unwrap(), Element::angle(frac(1, 3)));
        assert!(parse_element(&Hyperfield::sign(), "2").is_err());
        assert!(parse_element(&Hyperfield::tropical(), "1.5").is_err());
    }

    #[test]
    fn polynomials() {
        let t = Hyperfield::tropical();
        let (p, trimmed) = parse_poly(&t, "2,0,1,inf,-1,0").unwrap();
        assert!(!trimmed);
        assert_eq!(p.to_string(), "2,0,1,inf,-1,0");
        let (p, trimmed) = parse_poly(&Hyperfield::sign(), "1,-1,0").unwrap();
        assert!(trimmed);
        assert_eq!(p.degree(), Some(1));
        let list = parse_poly_list(&Hyperfield::sign(), "(-1,1);(-1,1);(1,1)").unwrap();
        assert_eq!(list.len(), 3);
        assert!(parse_poly(&t, "").is_err());
        assert_eq!(parse_ratpoly("6,-7,0,1").unwrap().0, RatPoly::from_ints(&[6, -7, 0, 1]));
    }
}
