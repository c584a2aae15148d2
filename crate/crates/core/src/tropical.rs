//! Newton polygons and root multiplicities over the tropical hyperfield, and
//! the comparison of Newton polygon slopes with p-adic root valuations.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hyperfield::{Element, HyperSet, Hyperfield, InstanceId, Trop};
use crate::instances::padic_valuation;
use crate::polynomial::{is_root, product_contains, Method, MultReport, Poly};
use crate::ratpoly::RatPoly;
use crate::descartes::check_split_hint;
use crate::rational::{int, Rational};

/// One edge of the lower hull. `slope` is the negated geometric slope, so a
/// segment of slope `s` accounts for `length` roots equal to `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: Rational,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, Rational)>,
    pub segments: Vec<Segment>,
    /// Number of leading `inf` coefficients; the roots at `inf`.
    pub infinite_prefix: usize,
}

impl NewtonPolygon {
    pub fn nu(&self, s: &Trop) -> usize {
        match s {
            Trop::Inf => self.infinite_prefix,
            Trop::Finite(q) => self
                .segments
                .iter()
                .find(|seg| &seg.slope == q)
                .map_or(0, |seg| seg.length),
        }
    }
}

pub fn trop_values(p: &Poly) -> Result<Vec<Trop>> {
    if p.instance() != InstanceId::Tropical {
        return Err(Error::InstanceMismatch {
            expected: InstanceId::Tropical,
            found: p.instance(),
        });
    }
    Ok(p.coeffs().iter().map(|c| c.as_trop().cloned().unwrap()).collect())
}

pub fn from_trops(values: Vec<Trop>) -> Poly {
    let t = Hyperfield::tropical();
    Poly::new(&t, values.into_iter().map(Element::trop).collect()).expect("tropical elements")
}

/// Lower convex hull of the finite points `(i, c_i)` by monotone chain.
pub fn newton_polygon(p: &Poly) -> Result<NewtonPolygon> {
    let c = trop_values(p)?;
    let points: Vec<(usize, Rational)> = c
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.finite().map(|q| (i, q.clone())))
        .collect();
    let infinite_prefix = points.first().ok_or(Error::ZeroPolynomial)?.0;
    let cross = |o: &(usize, Rational), a: &(usize, Rational), b: &(usize, Rational)| {
        int(a.0 as i64 - o.0 as i64) * (&b.1 - &o.1) - (&a.1 - &o.1) * int(b.0 as i64 - o.0 as i64)
    };
    let mut hull: Vec<(usize, Rational)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &pt) <= Rational::zero() {
            hull.pop();
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].0 - w[0].0;
            Segment {
                slope: (&w[0].1 - &w[1].1) / int(length as i64),
                length,
            }
        })
        .collect();
    Ok(NewtonPolygon {
        vertices: hull,
        segments,
        infinite_prefix,
    })
}

pub fn nu(p: &Poly, s: &Trop) -> Result<usize> {
    Ok(newton_polygon(p)?.nu(s))
}

/// Roots with multiplicity in ascending order, `inf` last.
pub fn tropical_roots(p: &Poly) -> Result<Vec<Trop>> {
    let np = newton_polygon(p)?;
    let mut roots: Vec<Trop> = np
        .segments
        .iter()
        .flat_map(|seg| std::iter::repeat_n(Trop::Finite(seg.slope.clone()), seg.length))
        .collect();
    roots.extend(std::iter::repeat_n(Trop::Inf, np.infinite_prefix));
    roots.sort();
    Ok(roots)
}

/// `min_i (c_i + i b)`.
pub fn eval_function(p: &Poly, b: &Rational) -> Result<Trop> {
    Ok(trop_values(p)?
        .iter()
        .enumerate()
        .map(|(i, c)| c.times(&Trop::Finite(b * int(i as i64))))
        .min()
        .unwrap_or(Trop::Inf))
}

/// `s_0 = 0` and `s_i` = sum of the `i` smallest roots.
pub fn elementary_symmetric(roots: &[Trop]) -> Vec<Trop> {
    let mut sorted = roots.to_vec();
    sorted.sort();
    let mut out = vec![Trop::Finite(Rational::zero())];
    for r in &sorted {
        let next = out.last().unwrap().times(r);
        out.push(next);
    }
    out
}

/// The monic polynomial with `c_{n-i} = s_i`.
pub fn canonical_expansion(roots: &[Trop]) -> Poly {
    let mut c = elementary_symmetric(roots);
    c.reverse();
    from_trops(c)
}

/// Divides by the leading coefficient.
pub fn normalize(p: &Poly) -> Result<Poly> {
    let c = trop_values(p)?;
    let lead = c.last().and_then(Trop::finite).ok_or(Error::ZeroPolynomial)?.clone();
    Ok(from_trops(c.iter().map(|v| v.over(&lead)).collect()))
}

fn monic_values(p: &Poly, roots: &[Trop]) -> Result<(Vec<Trop>, Vec<Trop>)> {
    let c = trop_values(p)?;
    match c.last() {
        None => return Err(Error::ZeroPolynomial),
        Some(Trop::Finite(q)) if q.is_zero() => {}
        Some(_) => return Err(Error::NonMonic),
    }
    if roots.len() != c.len() - 1 {
        return Err(Error::SizeMismatch {
            expected: c.len() - 1,
            found: roots.len(),
        });
    }
    let mut sorted = roots.to_vec();
    sorted.sort();
    Ok((c, sorted))
}

/// Decides `p ∈ ∏ (T ⊞ a_i)`: each `c_{n-i}` must be at least `s_i`, with
/// equality when the `i` smallest roots are the only minimizing subset.
pub fn in_product(p: &Poly, roots: &[Trop]) -> Result<bool> {
    let (c, a) = monic_values(p, roots)?;
    let n = a.len();
    let s = elementary_symmetric(&a);
    Ok((1..=n).all(|i| {
        let ci = &c[n - i];
        let forced = i == n || a[i - 1] < a[i];
        if forced {
            ci == &s[i]
        } else {
            ci >= &s[i]
        }
    }))
}

/// Compares `b ↦ min_i (c_i + i b)` with `b ↦ Σ min(b, a_i)`.
///
/// Both sides are concave and piecewise linear, and the right side bends
/// only at the roots. Agreement at every root, at every midpoint between
/// consecutive roots and one step past each end pins the left side to the
/// same line on every piece, once the slopes at both ends are known to
/// agree. The slope at `-inf` is `n` on both sides because `p` is monic; the
/// slope at `+inf` is the lowest finite index of `p` on the left and the
/// number of infinite roots on the right, and this is checked separately.
pub fn functional_equiv(p: &Poly, roots: &[Trop]) -> Result<bool> {
    let (c, a) = monic_values(p, roots)?;
    let lowest = c.iter().position(|v| !v.is_inf()).unwrap();
    if lowest != a.iter().filter(|r| r.is_inf()).count() {
        return Ok(false);
    }
    let mut finite: Vec<Rational> = a.iter().filter_map(|r| r.finite().cloned()).collect();
    finite.dedup();
    let mut samples = finite.clone();
    for w in finite.windows(2) {
        samples.push((&w[0] + &w[1]) / int(2));
    }
    match (finite.first(), finite.last()) {
        (Some(lo), Some(hi)) => {
            samples.push(lo - int(1));
            samples.push(hi + int(1));
        }
        _ => samples.push(Rational::zero()),
    }
    for b in &samples {
        let rhs = a.iter().fold(Trop::Finite(Rational::zero()), |acc, r| {
            let term = match r {
                Trop::Finite(q) if q < b => q.clone(),
                _ => b.clone(),
            };
            acc.times(&Trop::Finite(term))
        });
        if eval_function(p, b)? != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides `p ∈ (T ⊞ s) ⊡ q` coefficient by coefficient.
pub fn divides_linear(p: &Poly, s: &Trop, q: &Poly) -> Result<bool> {
    let t = Hyperfield::tropical();
    let lin = Poly::linear(&t, &Element::trop(s.clone()))?;
    product_contains(&t, &lin, q, p)
}

fn least_common(a: &HyperSet, b: &HyperSet) -> Result<Option<Trop>> {
    match (a, b) {
        (HyperSet::Finite(items), other) | (other, HyperSet::Finite(items)) => {
            for x in items {
                if other.contains(x)? {
                    return Ok(x.as_trop().cloned());
                }
            }
            Ok(None)
        }
        (HyperSet::TropicalRay(x), HyperSet::TropicalRay(y)) => Ok(Some(Trop::Finite(x.max(y).clone()))),
        _ => Err(Error::domain("not a tropical set")),
    }
}

/// A quotient `q` with `p ∈ (T ⊞ s) ⊡ q` for finite `s`, or `None` when `s`
/// is not a root.
///
/// With `t_i = c_i + i s` the root condition is `inf ∈ ⊞ t_i`. Walking down
/// from `e_{n-1} = t_n`, each `e_k` is taken from
/// `(e_{k+1} ⊞ t_{k+1}) ∩ (t_0 ⊞ ... ⊞ t_k)`, which is non-empty by
/// reversibility, and ends at `e_0 = t_0`. Then `d_i = e_i - (i+1) s`.
pub fn linear_quotient(p: &Poly, s: &Rational) -> Result<Option<Poly>> {
    let t = Hyperfield::tropical();
    let c = trop_values(p)?;
    let Some(n) = p.degree().filter(|&n| n > 0) else {
        return Ok(None);
    };
    if !is_root(&t, p, &Element::tropical(s.clone()))? {
        return Ok(None);
    }
    let terms: Vec<Trop> = c
        .iter()
        .enumerate()
        .map(|(i, v)| v.times(&Trop::Finite(s * int(i as i64))))
        .collect();
    let elems: Vec<Element> = terms.iter().cloned().map(Element::trop).collect();
    let mut e = vec![Trop::Inf; n];
    e[n - 1] = terms[n].clone();
    for k in (0..n - 1).rev() {
        let step = t.hyperadd(&Element::trop(e[k + 1].clone()), &elems[k + 1])?;
        let partial = t.hypersum(&elems[..=k])?;
        e[k] = least_common(&step, &partial)?
            .ok_or_else(|| Error::Internal("empty intersection while dividing by a linear factor".into()))?;
    }
    if e[0] != terms[0] {
        return Err(Error::Internal("tropical division did not close at the constant term".into()));
    }
    let d = e
        .iter()
        .enumerate()
        .map(|(i, v)| v.over(&(s * int(i as i64 + 1))))
        .collect();
    Ok(Some(from_trops(d)))
}

/// `mult_s(p) = ν_s(p)`, with a witness chain of quotients each checked by
/// direct product membership.
pub fn mult_tropical(f: &Hyperfield, p: &Poly, a: &Element) -> Result<MultReport> {
    f.check(a)?;
    let s = a.as_trop().cloned().ok_or_else(|| Error::domain("not a tropical element"))?;
    let m = nu(p, &s)?;
    let mut chain = Vec::with_capacity(m);
    let mut cur = p.clone();
    let method = match &s {
        Trop::Inf => {
            for _ in 0..m {
                cur = Poly::new(f, cur.coeffs()[1..].to_vec())?;
                chain.push(cur.clone());
            }
            Method::ZeroOrder
        }
        Trop::Finite(q) => {
            for _ in 0..m {
                let next = linear_quotient(&cur, q)?
                    .ok_or_else(|| Error::Internal(format!("{q} stopped being a root of {cur}")))?;
                if !divides_linear(&cur, &s, &next)? {
                    return Err(Error::Internal(format!("{cur} is not in (T + {q}) {next}")));
                }
                cur = next;
                chain.push(cur.clone());
            }
            Method::NewtonPolygon
        }
    };
    if !cur.is_zero() && nu(&cur, &s)? != 0 {
        return Err(Error::Internal("witness chain ended early".into()));
    }
    Ok(MultReport {
        element: a.clone(),
        multiplicity: m,
        method,
        chain,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeCheck {
    pub slope: Trop,
    pub nu: usize,
    /// Hint roots with this valuation, counted with multiplicity.
    pub roots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonRuleReport {
    pub prime: u32,
    pub valuations: Poly,
    pub polygon: NewtonPolygon,
    pub slopes: Vec<SlopeCheck>,
    pub split: bool,
    pub passed: bool,
}

/// Compares `ν_s` of the valuation image with the number of roots of
/// valuation `s`: at most `ν_s` always, exactly `ν_s` for a certified split.
pub fn newton_rule_verify(p: &RatPoly, prime: u32, split_hint: Option<&[Rational]>) -> Result<NewtonRuleReport> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let vals = p
        .coeffs()
        .iter()
        .map(|c| padic_valuation(c, prime).map(|e| e.as_trop().cloned().unwrap()))
        .collect::<Result<Vec<_>>>()?;
    let image = from_trops(vals);
    let polygon = newton_polygon(&image)?;
    let root_vals = match split_hint {
        Some(roots) => {
            check_split_hint(p, roots)?;
            roots
                .iter()
                .map(|r| padic_valuation(r, prime).map(|e| e.as_trop().cloned().unwrap()))
                .collect::<Result<Vec<_>>>()?
        }
        None => Vec::new(),
    };
    let mut slopes: Vec<Trop> = polygon
        .segments
        .iter()
        .map(|s| Trop::Finite(s.slope.clone()))
        .chain(root_vals.iter().cloned())
        .collect();
    if polygon.infinite_prefix > 0 {
        slopes.push(Trop::Inf);
    }
    slopes.sort();
    slopes.dedup();
    let checks: Vec<SlopeCheck> = slopes
        .into_iter()
        .map(|s| SlopeCheck {
            nu: polygon.nu(&s),
            roots: root_vals.iter().filter(|v| **v == s).count(),
            slope: s,
        })
        .collect();
    let split = split_hint.is_some();
    let total: usize = checks.iter().map(|c| c.nu).sum();
    let passed = total == deg
        && checks
            .iter()
            .all(|c| c.roots <= c.nu && (!split || c.roots == c.nu));
    Ok(NewtonRuleReport {
        prime,
        valuations: image,
        polygon,
        slopes: checks,
        split,
        passed,
    })
}
