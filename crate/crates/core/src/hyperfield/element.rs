use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::rational::{format_rational, reduce_angle, Rational};

/// Identifies the hyperfield an element belongs to.
///
/// Subgroups of the cyclic group `F_p^×` are determined by their order, so a
/// quotient `F_p / G` is identified by `(p, |G|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum InstanceId {
    Rational,
    Prime(u32),
    Sign,
    Krasner,
    WeakSign,
    Phase,
    Tropical,
    Quotient { p: u32, order: u32 },
    Custom(u32),
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceId::Rational => write!(f, "Q"),
            InstanceId::Prime(p) => write!(f, "Fp:{p}"),
            InstanceId::Sign => write!(f, "S"),
            InstanceId::Krasner => write!(f, "K"),
            InstanceId::WeakSign => write!(f, "W"),
            InstanceId::Phase => write!(f, "P"),
            InstanceId::Tropical => write!(f, "T"),
            InstanceId::Quotient { p, order } => write!(f, "F{p}/G{order}"),
            InstanceId::Custom(tag) => write!(f, "custom:{tag}"),
        }
    }
}

/// A tropical value: an exact rational or the additive neutral `inf`.
///
/// The derived order puts every finite value below `Inf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trop {
    Finite(Rational),
    Inf,
}

impl Trop {
    pub fn is_inf(&self) -> bool {
        matches!(self, Trop::Inf)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Trop::Finite(q) => Some(q),
            Trop::Inf => None,
        }
    }

    /// Tropical multiplication (ordinary addition, `inf` absorbing).
    pub fn times(&self, other: &Trop) -> Trop {
        match (self, other) {
            (Trop::Finite(a), Trop::Finite(b)) => Trop::Finite(a + b),
            _ => Trop::Inf,
        }
    }

    /// `self - other` for finite `other`.
    pub fn over(&self, other: &Rational) -> Trop {
        match self {
            Trop::Finite(a) => Trop::Finite(a - other),
            Trop::Inf => Trop::Inf,
        }
    }
}

impl fmt::Display for Trop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trop::Finite(q) => f.write_str(&format_rational(q)),
            Trop::Inf => f.write_str("inf"),
        }
    }
}

/// A phase: zero, or `e^{i pi q}` with `q` kept in `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Zero,
    Angle(Rational),
}

impl Phase {
    pub fn angle(q: Rational) -> Phase {
        Phase::Angle(reduce_angle(&q))
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::Zero => f.write_str("0"),
            Phase::Angle(q) if q.is_zero() => f.write_str("1"),
            Phase::Angle(q) if *q == crate::rational::int(1) => f.write_str("-1"),
            Phase::Angle(q) => write!(f, "e^{}", format_rational(q)),
        }
    }
}

/// Payload of an element; which variant is legal depends on the instance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Rational(Rational),
    Residue(u32),
    /// Used by both the sign and the weak sign hyperfield.
    Sign(i8),
    Krasner(bool),
    Tropical(Trop),
    Phase(Phase),
    /// Coset of a quotient, named by its smallest residue (`0` is the zero coset).
    Coset(u32),
}

impl Value {
    /// True for the additive neutral element of whatever instance owns the value.
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Rational(q) => q.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Sign(s) => *s == 0,
            Value::Krasner(b) => !*b,
            Value::Tropical(t) => t.is_inf(),
            Value::Phase(p) => *p == Phase::Zero,
            Value::Coset(c) => *c == 0,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(q) => f.write_str(&format_rational(q)),
            Value::Residue(r) => write!(f, "{r}"),
            Value::Sign(s) => write!(f, "{s}"),
            Value::Krasner(b) => write!(f, "{}", u8::from(*b)),
            Value::Tropical(t) => t.fmt(f),
            Value::Phase(p) => p.fmt(f),
            Value::Coset(c) => write!(f, "[{c}]"),
        }
    }
}

/// An element of one specific hyperfield instance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    instance: InstanceId,
    value: Value,
}

impl Element {
    /// Pairs a payload with its instance without validation; use
    /// [`crate::Hyperfield::element`] for checked construction.
    pub(crate) fn new_unchecked(instance: InstanceId, value: Value) -> Self {
        Element { instance, value }
    }

    pub fn instance(&self) -> InstanceId {
        self.instance
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn rational(q: Rational) -> Self {
        Element::new_unchecked(InstanceId::Rational, Value::Rational(q))
    }

    pub fn sign(s: i8) -> Self {
        Element::new_unchecked(InstanceId::Sign, Value::Sign(s.signum()))
    }

    pub fn weak_sign(s: i8) -> Self {
        Element::new_unchecked(InstanceId::WeakSign, Value::Sign(s.signum()))
    }

    pub fn krasner(b: bool) -> Self {
        Element::new_unchecked(InstanceId::Krasner, Value::Krasner(b))
    }

    pub fn tropical(q: Rational) -> Self {
        Element::new_unchecked(InstanceId::Tropical, Value::Tropical(Trop::Finite(q)))
    }

    pub fn tropical_inf() -> Self {
        Element::new_unchecked(InstanceId::Tropical, Value::Tropical(Trop::Inf))
    }

    pub fn trop(t: Trop) -> Self {
        Element::new_unchecked(InstanceId::Tropical, Value::Tropical(t))
    }

    pub fn angle(q: Rational) -> Self {
        Element::new_unchecked(InstanceId::Phase, Value::Phase(Phase::angle(q)))
    }

    pub fn phase_zero() -> Self {
        Element::new_unchecked(InstanceId::Phase, Value::Phase(Phase::Zero))
    }

    /// The tropical payload, if this is a tropical element.
    pub fn as_trop(&self) -> Option<&Trop> {
        match &self.value {
            Value::Tropical(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.value {
            Value::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_sign(&self) -> Option<i8> {
        match self.value {
            Value::Sign(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
