use std::fmt;

use num_traits::Zero;

use super::element::{Element, InstanceId, Phase, Trop, Value};
use crate::error::{Error, Result};
use crate::rational::{format_rational, half, int, reduce_angle, Rational};

/// Open arc of the unit circle, traversed counter-clockwise from `start` to
/// `end`. Angles are in units of pi, reduced to `[0, 2)`; the arc length is
/// strictly between 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseArc {
    pub start: Rational,
    pub end: Rational,
}

impl PhaseArc {
    pub fn new(start: Rational, end: Rational) -> Self {
        let arc = PhaseArc {
            start: reduce_angle(&start),
            end: reduce_angle(&end),
        };
        debug_assert!({
            let len = arc.length();
            len > Rational::zero() && len < int(1)
        });
        arc
    }

    pub fn length(&self) -> Rational {
        reduce_angle(&(&self.end - &self.start))
    }

    pub fn contains_angle(&self, q: &Rational) -> bool {
        let d = reduce_angle(&(q - &self.start));
        d > Rational::zero() && d < self.length()
    }

    fn overlaps(&self, other: &PhaseArc) -> bool {
        self.start == other.start
            || self.contains_angle(&other.start)
            || other.contains_angle(&self.start)
    }
}

/// Finite union of open arcs and points of the phase hyperfield.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhaseUnion {
    pub zero: bool,
    pub points: Vec<Rational>,
    pub arcs: Vec<PhaseArc>,
}

impl PhaseUnion {
    pub fn contains(&self, p: &Phase) -> bool {
        match p {
            Phase::Zero => self.zero,
            Phase::Angle(q) => {
                self.points.contains(q) || self.arcs.iter().any(|a| a.contains_angle(q))
            }
        }
    }

    fn breakpoints(&self) -> Vec<Rational> {
        let mut v = self.points.clone();
        for a in &self.arcs {
            v.push(a.start.clone());
            v.push(a.end.clone());
        }
        v
    }
}

/// Value of a hyperaddition: a non-empty set with decidable membership.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HyperSet {
    /// Sorted, duplicate-free, non-empty.
    Finite(Vec<Element>),
    /// `{x : x >= min} ∪ {inf}` in the tropical hyperfield.
    TropicalRay(Rational),
    PhaseUnion(PhaseUnion),
}

impl HyperSet {
    pub fn finite<I: IntoIterator<Item = Element>>(items: I) -> Self {
        let mut v: Vec<Element> = items.into_iter().collect();
        v.sort();
        v.dedup();
        debug_assert!(!v.is_empty(), "hypersets are non-empty");
        HyperSet::Finite(v)
    }

    pub fn singleton(e: Element) -> Self {
        HyperSet::Finite(vec![e])
    }

    pub(crate) fn phase(zero: bool, mut points: Vec<Rational>, mut arcs: Vec<PhaseArc>) -> Self {
        if arcs.is_empty() {
            let mut items: Vec<Element> = points.into_iter().map(Element::angle).collect();
            if zero {
                items.push(Element::phase_zero());
            }
            return HyperSet::finite(items);
        }
        points.sort();
        points.dedup();
        arcs.sort();
        HyperSet::PhaseUnion(PhaseUnion { zero, points, arcs })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, HyperSet::Finite(_))
    }

    /// Exact membership. `x` must come from the instance the set lives in.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        match self {
            HyperSet::Finite(items) => {
                if let Some(first) = items.first() {
                    if first.instance() != x.instance() {
                        return Err(Error::InstanceMismatch {
                            expected: first.instance(),
                            found: x.instance(),
                        });
                    }
                }
                Ok(items.binary_search(x).is_ok())
            }
            HyperSet::TropicalRay(min) => match x.value() {
                Value::Tropical(Trop::Inf) => Ok(true),
                Value::Tropical(Trop::Finite(q)) => Ok(q >= min),
                _ => Err(Error::InstanceMismatch {
                    expected: InstanceId::Tropical,
                    found: x.instance(),
                }),
            },
            HyperSet::PhaseUnion(u) => match x.value() {
                Value::Phase(p) => Ok(u.contains(p)),
                _ => Err(Error::InstanceMismatch {
                    expected: InstanceId::Phase,
                    found: x.instance(),
                }),
            },
        }
    }

    /// Membership of the additive neutral element.
    pub fn contains_zero(&self) -> bool {
        match self {
            HyperSet::Finite(items) => items.iter().any(Element::is_zero),
            HyperSet::TropicalRay(_) => true,
            HyperSet::PhaseUnion(u) => u.zero,
        }
    }

    /// Lists the members; rays and arcs are not enumerable.
    pub fn enumerate(&self) -> Result<&[Element]> {
        match self {
            HyperSet::Finite(items) => Ok(items),
            HyperSet::TropicalRay(m) => Err(Error::NonEnumerable(format!(
                "tropical ray [{}, inf]",
                format_rational(m)
            ))),
            HyperSet::PhaseUnion(_) => Err(Error::NonEnumerable("union of phase arcs".into())),
        }
    }

    /// Decides whether the two sets share an element.
    pub fn intersects(&self, other: &HyperSet) -> Result<bool> {
        match (self, other) {
            (HyperSet::Finite(items), s) | (s, HyperSet::Finite(items)) => {
                for x in items {
                    if s.contains(x)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            (HyperSet::TropicalRay(_), HyperSet::TropicalRay(_)) => Ok(true),
            (HyperSet::PhaseUnion(a), HyperSet::PhaseUnion(b)) => {
                if a.zero && b.zero {
                    return Ok(true);
                }
                let hit = a.points.iter().any(|q| b.contains(&Phase::Angle(q.clone())))
                    || b.points.iter().any(|q| a.contains(&Phase::Angle(q.clone())))
                    || a.arcs.iter().any(|x| b.arcs.iter().any(|y| x.overlaps(y)));
                Ok(hit)
            }
            _ => Err(Error::domain("intersection of sets from different instances")),
        }
    }

    /// Exact set equality, independent of how arcs happen to be split.
    pub fn same_set(&self, other: &HyperSet) -> bool {
        match (self, other) {
            (HyperSet::Finite(a), HyperSet::Finite(b)) => a == b,
            (HyperSet::TropicalRay(a), HyperSet::TropicalRay(b)) => a == b,
            (HyperSet::PhaseUnion(_), _) | (_, HyperSet::PhaseUnion(_)) => {
                let (Some(a), Some(b)) = (self.as_phase_union(), other.as_phase_union()) else {
                    return false;
                };
                // Both sides are constant on the open gaps between breakpoints,
                // so breakpoints plus one point per gap decide equality.
                let probes = probe_angles(a.breakpoints().into_iter().chain(b.breakpoints()));
                a.zero == b.zero
                    && probes.iter().all(|q| {
                        let p = Phase::Angle(q.clone());
                        a.contains(&p) == b.contains(&p)
                    })
            }
            _ => false,
        }
    }

    fn as_phase_union(&self) -> Option<PhaseUnion> {
        match self {
            HyperSet::PhaseUnion(u) => Some(u.clone()),
            HyperSet::Finite(items) => {
                let mut zero = false;
                let mut points = Vec::new();
                for e in items {
                    match e.value() {
                        Value::Phase(Phase::Zero) => zero = true,
                        Value::Phase(Phase::Angle(q)) => points.push(q.clone()),
                        _ => return None,
                    }
                }
                Some(PhaseUnion {
                    zero,
                    points,
                    arcs: Vec::new(),
                })
            }
            HyperSet::TropicalRay(_) => None,
        }
    }
}

/// Given circle breakpoints, returns them together with the midpoint of
/// every gap between consecutive ones.
pub(crate) fn probe_angles<I: IntoIterator<Item = Rational>>(breaks: I) -> Vec<Rational> {
    let mut b: Vec<Rational> = breaks.into_iter().map(|q| reduce_angle(&q)).collect();
    b.sort();
    b.dedup();
    if b.is_empty() {
        return vec![Rational::zero()];
    }
    let mut out = b.clone();
    for i in 0..b.len() {
        let next = if i + 1 < b.len() {
            b[i + 1].clone()
        } else {
            &b[0] + int(2)
        };
        out.push(reduce_angle(&((&b[i] + next) * half())));
    }
    if b.len() == 1 {
        out.push(reduce_angle(&(&b[0] + int(1))));
    }
    out
}

impl fmt::Display for HyperSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperSet::Finite(items) => {
                let parts: Vec<String> = items.iter().map(|e| e.to_string()).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            HyperSet::TropicalRay(m) => write!(f, "[{}, inf]", format_rational(m)),
            HyperSet::PhaseUnion(u) => {
                let mut parts = Vec::new();
                if u.zero {
                    parts.push("0".to_string());
                }
                for q in &u.points {
                    parts.push(Phase::Angle(q.clone()).to_string());
                }
                for a in &u.arcs {
                    parts.push(format!(
                        "arc({}, {})",
                        format_rational(&a.start),
                        format_rational(&a.end)
                    ));
                }
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}
