//! Sign changes over the sign hyperfield, the direct multiplicity formulas at
//! `1` and `-1`, and the classical positive-root count used to check the rule
//! of signs on rational polynomials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperfield::Hyperfield;
use crate::polynomial::Poly;
use crate::ratpoly::{sign_image, RatPoly};
use crate::rational::{format_rational, Rational};

fn signs_of(p: &Poly) -> Result<Vec<i8>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    p.coeffs()
        .iter()
        .map(|c| {
            c.as_sign()
                .ok_or_else(|| Error::domain(format!("{c} is not a sign")))
        })
        .collect()
}

/// Number of pairs of opposite nonzero coefficients separated only by zeros.
pub fn sign_changes(p: &Poly) -> Result<usize> {
    let nz: Vec<i8> = signs_of(p)?.into_iter().filter(|&s| s != 0).collect();
    Ok(nz.windows(2).filter(|w| w[0] == -w[1]).count())
}

/// `p(-T)`: odd coefficients change sign.
pub fn substitute_neg(p: &Poly) -> Result<Poly> {
    let s = Hyperfield::sign();
    let flipped = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { s.neg(c) } else { Ok(c.clone()) })
        .collect::<Result<_>>()?;
    Poly::new(&s, flipped)
}

pub fn mult_one_direct(p: &Poly) -> Result<usize> {
    sign_changes(p)
}

pub fn mult_neg_one_direct(p: &Poly) -> Result<usize> {
    sign_changes(&substitute_neg(p)?)
}

/// Sign changes of the sign image of `p` and of `p(-T)`.
pub fn descartes_bound(p: &RatPoly) -> Result<(usize, usize)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let img = sign_image(p);
    Ok((mult_one_direct(&img)?, mult_neg_one_direct(&img)?))
}

/// Positive real roots with multiplicity, via squarefree factors and Sturm
/// sequences.
pub fn count_positive_roots(p: &RatPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, rest) = p.strip_zero_roots();
    let mut total = 0;
    for (i, f) in rest.squarefree().iter().enumerate() {
        total += (i + 1) * f.sturm_chain()?.positive_roots();
    }
    Ok(total)
}

pub fn count_negative_roots(p: &RatPoly) -> Result<usize> {
    count_positive_roots(&p.substitute_neg())
}

/// Real roots with multiplicity counted on the whole line.
pub fn count_real_roots(p: &RatPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut total = 0;
    for (i, f) in p.squarefree().iter().enumerate() {
        total += (i + 1) * f.sturm_chain()?.real_roots();
    }
    Ok(total)
}

/// Positive + negative + zero root counts against the whole-line count.
pub fn sturm_self_check(p: &RatPoly) -> Result<bool> {
    let zero = p.order().ok_or(Error::ZeroPolynomial)?;
    Ok(count_positive_roots(p)? + count_negative_roots(p)? + zero == count_real_roots(p)?)
}

/// Checks that `lc(p) · ∏ (T - r)` over the hint equals `p`.
pub fn check_split_hint(p: &RatPoly, roots: &[Rational]) -> Result<()> {
    let lc = p.leading().ok_or(Error::ZeroPolynomial)?;
    let expanded = RatPoly::from_roots(lc, roots);
    if &expanded != p {
        let shown: Vec<String> = roots.iter().map(format_rational).collect();
        return Err(Error::HintMismatch(format!(
            "roots [{}] expand to {expanded}, not {p}",
            shown.join(",")
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescartesReport {
    pub positive_roots: usize,
    pub negative_roots: usize,
    pub bound_pos: usize,
    pub bound_neg: usize,
    /// A root hint certified a full rational factorization.
    pub split: bool,
    pub passed: bool,
}

/// Root counts never exceed the sign-change bounds, and equal them when `p`
/// splits over Q as certified by `split_hint`.
pub fn verify_descartes(p: &RatPoly, split_hint: Option<&[Rational]>) -> Result<DescartesReport> {
    let (bound_pos, bound_neg) = descartes_bound(p)?;
    let positive_roots = count_positive_roots(p)?;
    let negative_roots = count_negative_roots(p)?;
    if let Some(roots) = split_hint {
        check_split_hint(p, roots)?;
    }
    let split = split_hint.is_some();
    let within = positive_roots <= bound_pos && negative_roots <= bound_neg;
    let equal = positive_roots == bound_pos && negative_roots == bound_neg;
    Ok(DescartesReport {
        positive_roots,
        negative_roots,
        bound_pos,
        bound_neg,
        split,
        passed: within && (!split || equal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::Value;
    use crate::polynomial::multiplicity;
    use crate::rational::int;

    fn sp(signs: &[i8]) -> Poly {
        Poly::from_values(&Hyperfield::sign(), signs.iter().map(|&s| Value::Sign(s)).collect()).unwrap()
    }

    #[test]
    fn sign_change_examples() {
        assert_eq!(sign_changes(&sp(&[1, -1, -1, 1])).unwrap(), 2);
        assert_eq!(sign_changes(&sp(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sign_changes(&sp(&[1, 0, -1, 0, 1])).unwrap(), 2);
        assert_eq!(mult_neg_one_direct(&sp(&[1, -1, -1, 1])).unwrap(), 1);
        assert_eq!(mult_one_direct(&sp(&[0, 0, 0, 1])).unwrap(), 0);
        assert_eq!(mult_neg_one_direct(&sp(&[0, 0, 0, 1])).unwrap(), 0);
        assert_eq!(sign_changes(&sp(&[])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn direct_matches_recursive_on_small_cases() {
        let s = Hyperfield::sign();
        for code in 0..81 {
            let mut c = code;
            let signs: Vec<i8> = (0..4)
                .map(|_| {
                    let v = (c % 3) as i8 - 1;
                    c /= 3;
                    v
                })
                .collect();
            let p = sp(&signs);
            if p.is_zero() {
                continue;
            }
            let one = crate::hyperfield::Element::sign(1);
            assert_eq!(
                multiplicity(&s, &p, &one).unwrap().multiplicity,
                sign_changes(&p).unwrap(),
                "{p}"
            );
        }
    }

    #[test]
    fn bounds_and_counts() {
        assert_eq!(descartes_bound(&RatPoly::from_ints(&[6, -7, 0, 1])).unwrap(), (2, 1));
        assert_eq!(descartes_bound(&RatPoly::from_ints(&[1, 1])).unwrap(), (0, 1));
        assert_eq!(descartes_bound(&RatPoly::from_ints(&[1, -2, 1])).unwrap(), (2, 0));
        assert_eq!(count_positive_roots(&RatPoly::from_ints(&[6, -7, 0, 1])).unwrap(), 2);
        assert_eq!(count_positive_roots(&RatPoly::from_ints(&[1, -1, -1, 1])).unwrap(), 2);
        assert_eq!(count_positive_roots(&RatPoly::from_ints(&[1, 0, 1])).unwrap(), 0);
        assert!(sturm_self_check(&RatPoly::from_ints(&[0, 0, 6, -7, 0, 1])).unwrap());
    }

    #[test]
    fn verification_branches() {
        let p = RatPoly::from_ints(&[6, -7, 0, 1]);
        let r = verify_descartes(&p, Some(&[int(1), int(2), int(-3)])).unwrap();
        assert!(r.passed && r.split);
        assert_eq!((r.positive_roots, r.bound_pos), (2, 2));
        let r = verify_descartes(&RatPoly::from_ints(&[1, 1, 1]), None).unwrap();
        assert!(r.passed && r.positive_roots == 0 && r.bound_pos == 0);
        // (T - 1)^2 (T^2 + 1)
        let q = &RatPoly::from_ints(&[1, -2, 1]) * &RatPoly::from_ints(&[1, 0, 1]);
        let r = verify_descartes(&q, None).unwrap();
        assert!(r.passed && r.positive_roots == 2 && r.bound_pos >= 2);
        assert!(matches!(
            verify_descartes(&p, Some(&[int(1), int(2)])),
            Err(Error::HintMismatch(_))
        ));
    }
}
