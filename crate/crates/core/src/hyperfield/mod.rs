//! Hyperfields: carriers with a group multiplication and a multi-valued
//! addition `⊞` returning [`HyperSet`]s.
//!
//! Finite instances (S, K, W, quotients of prime fields, custom tables) run on
//! dense [`FiniteTable`]s. The rationals and prime fields use ordinary
//! arithmetic. The tropical hyperfield uses the min-plus convention with
//! neutral element `inf`; the phase hyperfield stores angles as exact
//! rationals in units of pi.

mod axioms;
mod element;
mod set;
mod table;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use axioms::{check_axioms, Axiom, AxiomReport, AxiomResult};
pub use element::{Element, InstanceId, Phase, Trop, Value};
pub use set::{HyperSet, PhaseArc, PhaseUnion};
pub use table::{mask_indices, FiniteTable, Mask, MAX_CARRIER};

use crate::error::{Error, Result};
use crate::rational::{half, int, reduce_angle, Rational};

/// Which construction a [`Hyperfield`] is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Rational,
    Prime(u32),
    Sign,
    Krasner,
    WeakSign,
    Phase,
    Tropical,
    /// `F_p / G` with `G` listed as its sorted elements.
    Quotient { p: u32, subgroup: Vec<u32> },
    Custom(u32),
}

#[derive(Clone, Debug)]
pub struct Hyperfield {
    kind: Kind,
    id: InstanceId,
    table: Option<Arc<FiniteTable>>,
}

impl PartialEq for Hyperfield {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Hyperfield {}

impl fmt::Display for Hyperfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

fn sign_elements() -> Vec<Value> {
    vec![Value::Sign(0), Value::Sign(1), Value::Sign(-1)]
}

fn sign_index(s: i8) -> usize {
    match s {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

fn sign_table(same_sign: fn(i8) -> Vec<i8>) -> FiniteTable {
    let els = sign_elements();
    let sgn = |i: usize| match &els[i] {
        Value::Sign(s) => *s,
        _ => unreachable!(),
    };
    FiniteTable::from_fn(
        els.clone(),
        |a, b| {
            let (x, y) = (sgn(a), sgn(b));
            let out: Vec<i8> = if x == 0 {
                vec![y]
            } else if y == 0 {
                vec![x]
            } else if x == -y {
                vec![0, 1, -1]
            } else {
                same_sign(x)
            };
            out.into_iter().map(sign_index).collect()
        },
        |a, b| sign_index(sgn(a) * sgn(b)),
    )
    .expect("sign tables are well formed")
}

impl Hyperfield {
    pub fn rational() -> Self {
        Hyperfield {
            kind: Kind::Rational,
            id: InstanceId::Rational,
            table: None,
        }
    }

    pub fn prime(p: u32) -> Result<Self> {
        if !crate::rational::is_prime(u64::from(p)) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(Hyperfield {
            kind: Kind::Prime(p),
            id: InstanceId::Prime(p),
            table: None,
        })
    }

    /// `{0, 1, -1}` with `1 ⊞ 1 = {1}` and `1 ⊞ -1 = {0, 1, -1}`.
    pub fn sign() -> Self {
        Hyperfield {
            kind: Kind::Sign,
            id: InstanceId::Sign,
            table: Some(Arc::new(sign_table(|s| vec![s]))),
        }
    }

    /// `{0, 1, -1}` with `1 ⊞ 1 = {1, -1}` and `1 ⊞ -1 = {0, 1, -1}`.
    pub fn weak_sign() -> Self {
        Hyperfield {
            kind: Kind::WeakSign,
            id: InstanceId::WeakSign,
            table: Some(Arc::new(sign_table(|_| vec![1, -1]))),
        }
    }

    /// `{0, 1}` with `1 ⊞ 1 = {0, 1}`.
    pub fn krasner() -> Self {
        let els = vec![Value::Krasner(false), Value::Krasner(true)];
        let table = FiniteTable::from_fn(
            els,
            |a, b| match (a, b) {
                (0, x) | (x, 0) => vec![x],
                _ => vec![0, 1],
            },
            |a, b| a & b,
        )
        .expect("krasner table is well formed");
        Hyperfield {
            kind: Kind::Krasner,
            id: InstanceId::Krasner,
            table: Some(Arc::new(table)),
        }
    }

    pub fn phase() -> Self {
        Hyperfield {
            kind: Kind::Phase,
            id: InstanceId::Phase,
            table: None,
        }
    }

    pub fn tropical() -> Self {
        Hyperfield {
            kind: Kind::Tropical,
            id: InstanceId::Tropical,
            table: None,
        }
    }

    /// Wraps explicit tables. Nothing is validated; run [`check_axioms`].
    pub fn custom(tag: u32, table: FiniteTable) -> Self {
        Hyperfield {
            kind: Kind::Custom(tag),
            id: InstanceId::Custom(tag),
            table: Some(Arc::new(table)),
        }
    }

    pub(crate) fn quotient_from_table(p: u32, subgroup: Vec<u32>, table: FiniteTable) -> Self {
        let order = subgroup.len() as u32;
        Hyperfield {
            kind: Kind::Quotient { p, subgroup },
            id: InstanceId::Quotient { p, order },
            table: Some(Arc::new(table)),
        }
    }

    pub fn id(&self) -> InstanceId {
        self.id
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn table(&self) -> Option<&FiniteTable> {
        self.table.as_deref()
    }

    /// Canonical spec string, e.g. `S`, `Fp:7`, `quot:7:1,2,4`.
    pub fn spec(&self) -> String {
        match &self.kind {
            Kind::Quotient { p, subgroup } => {
                let g: Vec<String> = subgroup.iter().map(u32::to_string).collect();
                format!("quot:{p}:{}", g.join(","))
            }
            _ => self.id.to_string(),
        }
    }

    pub fn is_tropical(&self) -> bool {
        self.kind == Kind::Tropical
    }

    pub fn is_phase(&self) -> bool {
        self.kind == Kind::Phase
    }

    /// True when the carrier can be listed (finite instances).
    pub fn is_enumerable(&self) -> bool {
        self.table.is_some() || matches!(self.kind, Kind::Prime(_))
    }

    /// True when every hypersum is a finite set.
    pub fn has_finite_sums(&self) -> bool {
        !matches!(self.kind, Kind::Tropical | Kind::Phase)
    }

    pub fn carrier(&self) -> Result<Vec<Element>> {
        if let Some(t) = &self.table {
            return Ok(t.elements().iter().map(|v| self.wrap(v.clone())).collect());
        }
        match self.kind {
            Kind::Prime(p) => Ok((0..p).map(|r| self.wrap(Value::Residue(r))).collect()),
            _ => Err(Error::NonEnumerable(format!(
                "carrier of {} is infinite",
                self.spec()
            ))),
        }
    }

    fn wrap(&self, v: Value) -> Element {
        Element::new_unchecked(self.id, v)
    }

    pub fn zero(&self) -> Element {
        if let Some(t) = &self.table {
            return self.wrap(t.value(t.zero()).clone());
        }
        self.wrap(match self.kind {
            Kind::Rational => Value::Rational(Rational::zero()),
            Kind::Prime(_) => Value::Residue(0),
            Kind::Tropical => Value::Tropical(Trop::Inf),
            Kind::Phase => Value::Phase(Phase::Zero),
            _ => unreachable!("finite kinds carry a table"),
        })
    }

    pub fn one(&self) -> Element {
        if let Some(t) = &self.table {
            return self.wrap(t.value(t.one()).clone());
        }
        self.wrap(match self.kind {
            Kind::Rational => Value::Rational(Rational::one()),
            Kind::Prime(_) => Value::Residue(1),
            Kind::Tropical => Value::Tropical(Trop::Finite(Rational::zero())),
            Kind::Phase => Value::Phase(Phase::Angle(Rational::zero())),
            _ => unreachable!("finite kinds carry a table"),
        })
    }

    /// Checked construction of an element of this instance.
    pub fn element(&self, value: Value) -> Result<Element> {
        let value = match value {
            Value::Phase(Phase::Angle(q)) => Value::Phase(Phase::angle(q)),
            v => v,
        };
        let ok = match (&self.kind, &value) {
            (_, v) if self.table.is_some() => self.table.as_ref().unwrap().index_of(v).is_some(),
            (Kind::Rational, Value::Rational(_)) => true,
            (Kind::Prime(p), Value::Residue(r)) => r < p,
            (Kind::Tropical, Value::Tropical(_)) => true,
            (Kind::Phase, Value::Phase(_)) => true,
            _ => false,
        };
        if ok {
            Ok(self.wrap(value))
        } else {
            Err(Error::domain(format!(
                "{value} is not an element of {}",
                self.spec()
            )))
        }
    }

    /// Verifies that `e` belongs to this instance.
    pub fn check(&self, e: &Element) -> Result<()> {
        if e.instance() != self.id {
            return Err(Error::InstanceMismatch {
                expected: self.id,
                found: e.instance(),
            });
        }
        Ok(())
    }

    fn idx(&self, t: &FiniteTable, e: &Element) -> Result<usize> {
        self.check(e)?;
        t.index_of(e.value())
            .ok_or_else(|| Error::domain(format!("{e} is not in the carrier of {}", self.spec())))
    }

    fn set_of_mask(&self, t: &FiniteTable, mask: Mask) -> HyperSet {
        HyperSet::finite(mask_indices(mask).map(|i| self.wrap(t.value(i).clone())))
    }

    pub fn hyperadd(&self, a: &Element, b: &Element) -> Result<HyperSet> {
        self.check(a)?;
        self.check(b)?;
        if let Some(t) = &self.table {
            let (i, j) = (self.idx(t, a)?, self.idx(t, b)?);
            return Ok(self.set_of_mask(t, t.sum(i, j)));
        }
        match (&self.kind, a.value(), b.value()) {
            (Kind::Rational, Value::Rational(x), Value::Rational(y)) => {
                Ok(HyperSet::singleton(self.wrap(Value::Rational(x + y))))
            }
            (Kind::Prime(p), Value::Residue(x), Value::Residue(y)) => Ok(HyperSet::singleton(
                self.wrap(Value::Residue(((u64::from(*x) + u64::from(*y)) % u64::from(*p)) as u32)),
            )),
            (Kind::Tropical, Value::Tropical(x), Value::Tropical(y)) => Ok(tropical_add(x, y)),
            (Kind::Phase, Value::Phase(x), Value::Phase(y)) => Ok(phase_add(x, y)),
            _ => Err(Error::domain("payload does not match instance")),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        if let Some(t) = &self.table {
            let (i, j) = (self.idx(t, a)?, self.idx(t, b)?);
            return Ok(self.wrap(t.value(t.mul(i, j)).clone()));
        }
        let v = match (&self.kind, a.value(), b.value()) {
            (Kind::Rational, Value::Rational(x), Value::Rational(y)) => Value::Rational(x * y),
            (Kind::Prime(p), Value::Residue(x), Value::Residue(y)) => {
                Value::Residue(((u64::from(*x) * u64::from(*y)) % u64::from(*p)) as u32)
            }
            (Kind::Tropical, Value::Tropical(x), Value::Tropical(y)) => Value::Tropical(x.times(y)),
            (Kind::Phase, Value::Phase(x), Value::Phase(y)) => Value::Phase(match (x, y) {
                (Phase::Angle(p), Phase::Angle(q)) => Phase::angle(p + q),
                _ => Phase::Zero,
            }),
            _ => return Err(Error::domain("payload does not match instance")),
        };
        Ok(self.wrap(v))
    }

    /// The unique hyperinverse `-a` with `0 ∈ a ⊞ -a`.
    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        if let Some(t) = &self.table {
            let i = self.idx(t, a)?;
            let n = t.neg(i).ok_or_else(|| {
                Error::domain(format!("{a} has no unique hyperinverse in {}", self.spec()))
            })?;
            return Ok(self.wrap(t.value(n).clone()));
        }
        let v = match (&self.kind, a.value()) {
            (Kind::Rational, Value::Rational(x)) => Value::Rational(-x),
            (Kind::Prime(p), Value::Residue(x)) => Value::Residue((p - x) % p),
            (Kind::Tropical, v @ Value::Tropical(_)) => v.clone(),
            (Kind::Phase, Value::Phase(Phase::Angle(q))) => Value::Phase(Phase::angle(q + int(1))),
            (Kind::Phase, v @ Value::Phase(Phase::Zero)) => v.clone(),
            _ => return Err(Error::domain("payload does not match instance")),
        };
        Ok(self.wrap(v))
    }

    pub fn inv(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::domain("zero has no multiplicative inverse"));
        }
        if let Some(t) = &self.table {
            let i = self.idx(t, a)?;
            let n = t
                .inv(i)
                .ok_or_else(|| Error::domain(format!("{a} is not invertible")))?;
            return Ok(self.wrap(t.value(n).clone()));
        }
        let v = match (&self.kind, a.value()) {
            (Kind::Rational, Value::Rational(x)) => Value::Rational(x.recip()),
            (Kind::Prime(p), Value::Residue(x)) => {
                let r = BigInt::from(*x).modpow(&BigInt::from(p - 2), &BigInt::from(*p));
                Value::Residue(u32::try_from(r).expect("residue fits"))
            }
            (Kind::Tropical, Value::Tropical(Trop::Finite(q))) => Value::Tropical(Trop::Finite(-q)),
            (Kind::Phase, Value::Phase(Phase::Angle(q))) => Value::Phase(Phase::angle(-q)),
            _ => return Err(Error::domain("payload does not match instance")),
        };
        Ok(self.wrap(v))
    }

    pub fn pow(&self, a: &Element, k: usize) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// n-ary hypersum, equal to the left-to-right recursive union. The empty
    /// sum is `{0}`.
    pub fn hypersum(&self, terms: &[Element]) -> Result<HyperSet> {
        for t in terms {
            self.check(t)?;
        }
        if terms.is_empty() {
            return Ok(HyperSet::singleton(self.zero()));
        }
        if let Some(t) = &self.table {
            let idx: Vec<usize> = terms.iter().map(|e| self.idx(t, e)).collect::<Result<_>>()?;
            let mut cur: Mask = 1 << idx[0];
            for &j in &idx[1..] {
                cur = mask_indices(cur).fold(0, |m, i| m | t.sum(i, j));
            }
            return Ok(self.set_of_mask(t, cur));
        }
        match self.kind {
            Kind::Rational | Kind::Prime(_) => {
                let mut acc = terms[0].clone();
                for x in &terms[1..] {
                    acc = self.hyperadd(&acc, x)?.enumerate()?[0].clone();
                }
                Ok(HyperSet::singleton(acc))
            }
            Kind::Tropical => {
                let vals: Vec<&Trop> = terms.iter().filter_map(Element::as_trop).collect();
                Ok(tropical_sum(vals))
            }
            Kind::Phase => {
                let angles = terms.iter().filter_map(|e| match e.value() {
                    Value::Phase(Phase::Angle(q)) => Some(q.clone()),
                    _ => None,
                });
                Ok(phase_cone(angles.collect()))
            }
            _ => unreachable!("finite kinds carry a table"),
        }
    }

    /// `⋃_{d ∈ s} d ⊞ c` for a finite `s`.
    pub fn set_add(&self, s: &HyperSet, c: &Element) -> Result<HyperSet> {
        let mut out = Vec::new();
        for d in s.enumerate()? {
            out.extend(self.hyperadd(d, c)?.enumerate()?.iter().cloned());
        }
        Ok(HyperSet::finite(out))
    }

    /// Decides `x ∈ ⋃_{d ∈ s} d ⊞ c`. Finite `s` is expanded directly;
    /// otherwise reversibility turns this into `(x ⊞ -c) ∩ s ≠ ∅`.
    pub fn union_contains(&self, s: &HyperSet, c: &Element, x: &Element) -> Result<bool> {
        if let HyperSet::Finite(items) = s {
            for d in items {
                if self.hyperadd(d, c)?.contains(x)? {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        let probe = self.hyperadd(x, &self.neg(c)?)?;
        probe.intersects(s)
    }

    /// `a · s = {a d : d ∈ s}`.
    pub fn scale_set(&self, a: &Element, s: &HyperSet) -> Result<HyperSet> {
        self.check(a)?;
        match s {
            HyperSet::Finite(items) => {
                let v: Result<Vec<Element>> = items.iter().map(|d| self.mul(a, d)).collect();
                Ok(HyperSet::finite(v?))
            }
            HyperSet::TropicalRay(m) => Ok(match a.as_trop() {
                Some(Trop::Finite(q)) => HyperSet::TropicalRay(m + q),
                _ => HyperSet::singleton(Element::tropical_inf()),
            }),
            HyperSet::PhaseUnion(u) => match a.value() {
                Value::Phase(Phase::Angle(q)) => Ok(HyperSet::phase(
                    u.zero,
                    u.points.iter().map(|p| reduce_angle(&(p + q))).collect(),
                    u.arcs
                        .iter()
                        .map(|arc| PhaseArc::new(&arc.start + q, &arc.end + q))
                        .collect(),
                )),
                _ => Ok(HyperSet::singleton(Element::phase_zero())),
            },
        }
    }
}

fn tropical_add(x: &Trop, y: &Trop) -> HyperSet {
    match (x, y) {
        (Trop::Finite(a), Trop::Finite(b)) if a == b => HyperSet::TropicalRay(a.clone()),
        _ => HyperSet::singleton(Element::trop(x.min(y).clone())),
    }
}

/// Closed form of a tropical hypersum: `{m}` when the minimum finite value is
/// attained once, the ray `[m, inf]` when attained at least twice, `{inf}`
/// when every term is `inf`.
pub(crate) fn tropical_sum<'a, I: IntoIterator<Item = &'a Trop>>(vals: I) -> HyperSet {
    let mut best: Option<&Rational> = None;
    let mut count = 0;
    for v in vals {
        if let Trop::Finite(q) = v {
            match best {
                Some(b) if q > b => {}
                Some(b) if q == b => count += 1,
                _ => {
                    best = Some(q);
                    count = 1;
                }
            }
        }
    }
    match best {
        None => HyperSet::singleton(Element::tropical_inf()),
        Some(m) if count == 1 => HyperSet::singleton(Element::tropical(m.clone())),
        Some(m) => HyperSet::TropicalRay(m.clone()),
    }
}

fn phase_add(x: &Phase, y: &Phase) -> HyperSet {
    match (x, y) {
        (Phase::Zero, other) | (other, Phase::Zero) => {
            HyperSet::singleton(Element::new_unchecked(InstanceId::Phase, Value::Phase(other.clone())))
        }
        (Phase::Angle(a), Phase::Angle(b)) => {
            if a == b {
                // Forced by the quotient model C / R_{>0}.
                return HyperSet::singleton(Element::angle(a.clone()));
            }
            let d = reduce_angle(&(b - a));
            if d == int(1) {
                HyperSet::phase(true, vec![a.clone(), b.clone()], vec![])
            } else if d < int(1) {
                HyperSet::phase(false, vec![], vec![PhaseArc::new(a.clone(), b.clone())])
            } else {
                HyperSet::phase(false, vec![], vec![PhaseArc::new(b.clone(), a.clone())])
            }
        }
    }
}

/// Phases of the open cone `{Σ λ_i e^{iπθ_i} : λ_i > 0}`, which is what the
/// quotient model gives for an n-ary phase hypersum.
pub(crate) fn phase_cone(mut angles: Vec<Rational>) -> HyperSet {
    angles.sort();
    angles.dedup();
    match angles.len() {
        0 => return HyperSet::singleton(Element::phase_zero()),
        1 => return HyperSet::singleton(Element::angle(angles.pop().unwrap())),
        _ => {}
    }
    let m = angles.len();
    let mut gap_at = 0;
    let mut gap = Rational::zero();
    for j in 0..m {
        let g = if j + 1 < m {
            &angles[j + 1] - &angles[j]
        } else {
            &angles[0] + int(2) - &angles[j]
        };
        if g > gap {
            gap = g;
            gap_at = j;
        }
    }
    let start = angles[(gap_at + 1) % m].clone();
    let end = angles[gap_at].clone();
    let one = int(1);
    if gap > one {
        HyperSet::phase(false, vec![], vec![PhaseArc::new(start, end)])
    } else if gap == one && m == 2 {
        HyperSet::phase(true, vec![start, end], vec![])
    } else if gap == one {
        // Open half-plane: split at the middle so every arc is shorter than pi.
        let mid = reduce_angle(&(&start + half()));
        HyperSet::phase(
            false,
            vec![mid.clone()],
            vec![PhaseArc::new(start, mid.clone()), PhaseArc::new(mid, end)],
        )
    } else {
        whole_phase_set()
    }
}

fn whole_phase_set() -> HyperSet {
    let quarter: Vec<Rational> = (0..4).map(|k| Rational::new(BigInt::from(k), BigInt::from(2))).collect();
    let arcs = (0..4)
        .map(|k| PhaseArc::new(quarter[k].clone(), quarter[(k + 1) % 4].clone()))
        .collect();
    HyperSet::phase(true, quarter, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn s(v: i8) -> Element {
        Element::sign(v)
    }

    #[test]
    fn sign_rules() {
        let f = Hyperfield::sign();
        let all = HyperSet::finite(vec![s(0), s(1), s(-1)]);
        assert_eq!(f.hyperadd(&s(1), &s(-1)).unwrap(), all);
        assert_eq!(f.hyperadd(&s(0), &s(1)).unwrap(), HyperSet::singleton(s(1)));
        assert_eq!(f.hyperadd(&s(1), &s(1)).unwrap(), HyperSet::singleton(s(1)));
        assert_eq!(f.neg(&s(1)).unwrap(), s(-1));
        assert_eq!(f.mul(&s(-1), &s(-1)).unwrap(), s(1));
        assert!(f.inv(&s(0)).is_err());
    }

    #[test]
    fn sign_hypersum_expands_recursively() {
        // {1} ⊞ 1 = {1}; {1} ⊞ -1 = {0, 1, -1}
        let f = Hyperfield::sign();
        let h = f.hypersum(&[s(1), s(1), s(-1)]).unwrap();
        assert_eq!(h, HyperSet::finite(vec![s(0), s(1), s(-1)]));
        assert_eq!(f.hypersum(&[]).unwrap(), HyperSet::singleton(s(0)));
    }

    #[test]
    fn krasner_and_weak_sign() {
        let k = Hyperfield::krasner();
        let one = Element::krasner(true);
        assert_eq!(
            k.hypersum(&[one.clone(), one.clone()]).unwrap(),
            HyperSet::finite(vec![Element::krasner(false), one])
        );
        let w = Hyperfield::weak_sign();
        let w1 = Element::weak_sign(1);
        assert_eq!(
            w.hyperadd(&w1, &w1).unwrap(),
            HyperSet::finite(vec![Element::weak_sign(1), Element::weak_sign(-1)])
        );
    }

    #[test]
    fn tropical_rules() {
        let t = Hyperfield::tropical();
        let e = |n| Element::tropical(int(n));
        assert_eq!(t.hyperadd(&e(3), &e(3)).unwrap(), HyperSet::TropicalRay(int(3)));
        assert_eq!(t.hyperadd(&e(1), &e(4)).unwrap(), HyperSet::singleton(e(1)));
        assert_eq!(t.mul(&e(2), &e(5)).unwrap(), e(7));
        assert_eq!(t.neg(&e(5)).unwrap(), e(5));
        assert_eq!(
            t.hypersum(&[e(2), e(2), e(5)]).unwrap(),
            HyperSet::TropicalRay(int(2))
        );
        let inf = Element::tropical_inf();
        assert_eq!(
            t.hypersum(&[inf.clone(), inf.clone()]).unwrap(),
            HyperSet::singleton(inf.clone())
        );
        assert!(t.inv(&inf).is_err());
    }

    #[test]
    fn phase_rules() {
        let p = Hyperfield::phase();
        let a0 = Element::angle(int(0));
        let a1 = Element::angle(int(1));
        assert_eq!(
            p.hyperadd(&a0, &a1).unwrap(),
            HyperSet::finite(vec![Element::phase_zero(), a0.clone(), a1.clone()])
        );
        let t = Element::angle(frac(2, 3));
        assert_eq!(p.mul(&t, &t).unwrap(), Element::angle(frac(4, 3)));
        assert_eq!(p.hyperadd(&t, &t).unwrap(), HyperSet::singleton(t.clone()));
        let arc = p.hyperadd(&a0, &t).unwrap();
        assert!(arc.contains(&Element::angle(frac(1, 3))).unwrap());
        assert!(!arc.contains(&a1).unwrap());
        assert_eq!(p.neg(&t).unwrap(), Element::angle(frac(5, 3)));
    }

    #[test]
    fn phase_cone_cases() {
        // three directions spanning more than a half-plane: everything
        let all = phase_cone(vec![int(0), frac(2, 3), frac(4, 3)]);
        assert!(all.contains_zero());
        assert!(all.same_set(&whole_phase_set()));
        // antipodal pair plus one side: open half-plane
        let half_plane = phase_cone(vec![int(0), frac(1, 2), int(1)]);
        assert!(!half_plane.contains_zero());
        assert!(half_plane.contains(&Element::angle(frac(1, 2))).unwrap());
        assert!(half_plane.contains(&Element::angle(frac(9, 10))).unwrap());
        assert!(!half_plane.contains(&Element::angle(int(1))).unwrap());
        assert!(!half_plane.contains(&Element::angle(frac(3, 2))).unwrap());
    }

    #[test]
    fn cross_instance_is_rejected() {
        let f = Hyperfield::sign();
        let err = f.hyperadd(&s(1), &Element::krasner(true)).unwrap_err();
        assert!(matches!(err, Error::InstanceMismatch { .. }));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Hyperfield::prime(7).unwrap();
        let e = |r| f.element(Value::Residue(r)).unwrap();
        assert_eq!(f.inv(&e(3)).unwrap(), e(5));
        assert_eq!(f.neg(&e(3)).unwrap(), e(4));
        assert_eq!(f.hyperadd(&e(5), &e(4)).unwrap(), HyperSet::singleton(e(2)));
        assert!(Hyperfield::prime(9).is_err());
        assert!(f.element(Value::Residue(7)).is_err());
    }
}
