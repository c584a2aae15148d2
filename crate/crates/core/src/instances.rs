//! Concrete constructions: quotients `F_p / G`, isomorphism search against
//! named instances, and the homomorphisms `sign : Q -> S` and `v_p : Q -> T`.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperfield::{check_axioms, mask_indices, Element, FiniteTable, Hyperfield, Kind, Value};
use crate::rational::{frac, int, is_prime, ord_p, sign_of, Rational};

/// Largest prime accepted by [`build_quotient`].
pub const DEFAULT_QUOTIENT_BOUND: u32 = 101;

/// `F_p / G` for the subgroup `G ⊆ F_p^×` generated by `generators`.
pub fn build_quotient(p: u32, generators: &[u32]) -> Result<Hyperfield> {
    build_quotient_bounded(p, generators, DEFAULT_QUOTIENT_BOUND)
}

pub fn build_quotient_bounded(p: u32, generators: &[u32], bound: u32) -> Result<Hyperfield> {
    if !is_prime(u64::from(p)) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p > bound {
        return Err(Error::domain(format!("p = {p} exceeds the quotient bound {bound}")));
    }
    let pm = u64::from(p);
    let mulp = |a: u32, b: u32| ((u64::from(a) * u64::from(b)) % pm) as u32;

    let mut group: BTreeSet<u32> = BTreeSet::from([1]);
    for &g in generators {
        if g % p == 0 {
            return Err(Error::domain(format!("generator {g} is zero mod {p}")));
        }
        group.insert(g % p);
    }
    loop {
        let next: BTreeSet<u32> = group
            .iter()
            .flat_map(|&a| group.iter().map(move |&b| (a, b)))
            .map(|(a, b)| mulp(a, b))
            .chain(group.iter().copied())
            .collect();
        if next.len() == group.len() {
            break;
        }
        group = next;
    }
    for &a in &group {
        let has_inverse = group.iter().any(|&b| mulp(a, b) == 1);
        if !has_inverse || group.iter().any(|&b| !group.contains(&mulp(a, b))) {
            return Err(Error::Internal(format!("generated set is not a subgroup of F_{p}^×")));
        }
    }
    let subgroup: Vec<u32> = group.into_iter().collect();

    // coset[r] = smallest residue of r·G
    let mut coset = vec![0u32; p as usize];
    for r in 1..p {
        coset[r as usize] = subgroup.iter().map(|&g| mulp(r, g)).min().unwrap();
    }
    let mut reps: Vec<u32> = coset[1..].to_vec();
    reps.sort();
    reps.dedup();
    reps.insert(0, 0);
    let members = |rep: u32| -> Vec<u32> {
        if rep == 0 {
            vec![0]
        } else {
            subgroup.iter().map(|&g| mulp(rep, g)).collect()
        }
    };
    let pos = |r: u32| reps.binary_search(&coset[r as usize]).unwrap();
    let elements: Vec<Value> = reps.iter().map(|&r| Value::Coset(r)).collect();
    let table = FiniteTable::from_fn(
        elements,
        |a, b| {
            let mut out = BTreeSet::new();
            for x in members(reps[a]) {
                for y in members(reps[b]) {
                    out.insert(pos(((u64::from(x) + u64::from(y)) % pm) as u32));
                }
            }
            out.into_iter().collect()
        },
        |a, b| pos(mulp(reps[a], reps[b])),
    )?;
    let f = Hyperfield::quotient_from_table(p, subgroup, table);
    let report = check_axioms(&f);
    if !report.all_passed() {
        return Err(Error::Internal(format!("quotient {} failed the axiom check", f.spec())));
    }
    Ok(f)
}

/// The subgroup of squares in `F_p^×`.
pub fn squares(p: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (1..p)
        .map(|x| ((u64::from(x) * u64::from(x)) % u64::from(p)) as u32)
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Searches for an isomorphism between two finite hyperfields: a bijection
/// fixing 0 and 1, multiplicative, and carrying `⊞` table onto `⊞` table.
///
/// Unit groups of quotients of `F_p` are cyclic, so the search tries every
/// image of one generator.
pub fn iso_to_named(source: &Hyperfield, target: &Hyperfield) -> Result<Option<Vec<(Element, Element)>>> {
    let (Some(s), Some(t)) = (source.table(), target.table()) else {
        if source.is_enumerable() && target.is_enumerable() {
            return iso_by_carrier(source, target);
        }
        return Err(Error::NonEnumerable("isomorphism search needs finite hyperfields".into()));
    };
    Ok(iso_tables(s, t).map(|m| {
        m.into_iter()
            .enumerate()
            .map(|(i, j)| {
                (
                    source.element(s.value(i).clone()).unwrap(),
                    target.element(t.value(j).clone()).unwrap(),
                )
            })
            .collect()
    }))
}

fn iso_by_carrier(source: &Hyperfield, target: &Hyperfield) -> Result<Option<Vec<(Element, Element)>>> {
    let s = table_of(source)?;
    let t = table_of(target)?;
    let sc = source.carrier()?;
    let tc = target.carrier()?;
    Ok(iso_tables(&s, &t).map(|m| {
        m.into_iter()
            .enumerate()
            .map(|(i, j)| (sc[i].clone(), tc[j].clone()))
            .collect()
    }))
}

/// Materializes the operation tables of any finite instance.
pub fn table_of(f: &Hyperfield) -> Result<FiniteTable> {
    if let Some(t) = f.table() {
        return Ok(t.clone());
    }
    let carrier = f.carrier()?;
    let pos = |e: &Element| carrier.iter().position(|x| x == e).unwrap();
    FiniteTable::from_fn(
        carrier.iter().map(|e| e.value().clone()).collect(),
        |a, b| {
            f.hyperadd(&carrier[a], &carrier[b])
                .expect("carrier elements")
                .enumerate()
                .expect("finite")
                .iter()
                .map(pos)
                .collect()
        },
        |a, b| pos(&f.mul(&carrier[a], &carrier[b]).expect("carrier elements")),
    )
}

fn order_of(t: &FiniteTable, g: usize) -> usize {
    let mut x = g;
    let mut k = 1;
    while x != t.one() {
        x = t.mul(x, g);
        k += 1;
        if k > t.len() {
            return 0;
        }
    }
    k
}

fn iso_tables(s: &FiniteTable, t: &FiniteTable) -> Option<Vec<usize>> {
    let n = s.len();
    if n != t.len() {
        return None;
    }
    let units = n - 1;
    if units == 0 {
        return Some(vec![0]);
    }
    let gen = (0..n).find(|&g| g != s.zero() && order_of(s, g) == units)?;
    for img in (0..n).filter(|&h| h != t.zero() && order_of(t, h) == units) {
        let mut map = vec![usize::MAX; n];
        map[s.zero()] = t.zero();
        let (mut x, mut y) = (s.one(), t.one());
        for _ in 0..units {
            map[x] = y;
            x = s.mul(x, gen);
            y = t.mul(y, img);
        }
        let preserves = (0..n).all(|a| {
            (0..n).all(|b| {
                let image: u128 = mask_indices(s.sum(a, b)).fold(0, |m, c| m | 1 << map[c]);
                image == t.sum(map[a], map[b]) && map[s.mul(a, b)] == t.mul(map[a], map[b])
            })
        });
        if preserves {
            return Some(map);
        }
    }
    None
}

/// `sign : Q -> S`.
pub fn sign_map(x: &Rational) -> Element {
    Element::sign(sign_of(x))
}

/// `v_p(s/t) = ord_p(s) - ord_p(t)`, with `v_p(0) = inf`.
pub fn padic_valuation(x: &Rational, p: u32) -> Result<Element> {
    if !is_prime(u64::from(p)) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if x.is_zero() {
        return Ok(Element::tropical_inf());
    }
    let v = i64::from(ord_p(x.numer(), p)) - i64::from(ord_p(x.denom(), p));
    Ok(Element::tropical(int(v)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomRule {
    SignMap,
    PAdic(u32),
    /// `F_p -> F_p / G`, residue to coset.
    QuotientProjection,
    /// Explicit finite map from source values to target elements.
    Table(Vec<(Element, Element)>),
}

#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub source: Hyperfield,
    pub target: Hyperfield,
    pub rule: HomRule,
}

impl Homomorphism {
    pub fn sign() -> Self {
        Homomorphism {
            source: Hyperfield::rational(),
            target: Hyperfield::sign(),
            rule: HomRule::SignMap,
        }
    }

    pub fn padic(p: u32) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(Homomorphism {
            source: Hyperfield::rational(),
            target: Hyperfield::tropical(),
            rule: HomRule::PAdic(p),
        })
    }

    pub fn projection(quotient: &Hyperfield) -> Result<Self> {
        let Kind::Quotient { p, .. } = quotient.kind() else {
            return Err(Error::domain("projection target must be a quotient"));
        };
        Ok(Homomorphism {
            source: Hyperfield::prime(*p)?,
            target: quotient.clone(),
            rule: HomRule::QuotientProjection,
        })
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.source.check(x)?;
        match (&self.rule, x.value()) {
            (HomRule::SignMap, Value::Rational(q)) => Ok(sign_map(q)),
            (HomRule::PAdic(p), Value::Rational(q)) => padic_valuation(q, *p),
            (HomRule::QuotientProjection, Value::Residue(r)) => {
                coset_of(&self.target, *r)
            }
            (HomRule::Table(pairs), _) => pairs
                .iter()
                .find(|(s, _)| s == x)
                .map(|(_, t)| t.clone())
                .ok_or_else(|| Error::domain(format!("{x} is not in the map's domain"))),
            _ => Err(Error::domain("element does not fit the homomorphism rule")),
        }
    }
}

/// The coset of the residue `r` in a quotient of `F_p`.
pub fn coset_of(q: &Hyperfield, r: u32) -> Result<Element> {
    let Kind::Quotient { p, subgroup } = q.kind() else {
        return Err(Error::domain(format!("{} is not a quotient", q.spec())));
    };
    let r = r % p;
    let rep = subgroup
        .iter()
        .map(|&g| ((u64::from(r) * u64::from(g)) % u64::from(*p)) as u32)
        .min()
        .unwrap_or(0);
    q.element(Value::Coset(rep))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomViolation {
    pub property: &'static str,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub passed: bool,
    pub exhaustive: bool,
    pub cases: usize,
    pub violations: Vec<HomViolation>,
}

/// Rationals used when the source is Q.
pub fn rational_samples() -> Vec<Rational> {
    let mut v = vec![Rational::zero()];
    for q in [
        int(1),
        int(2),
        int(3),
        int(4),
        int(6),
        int(8),
        int(12),
        int(18),
        frac(1, 2),
        frac(2, 3),
        frac(5, 4),
        frac(1, 9),
        frac(7, 3),
        frac(9, 8),
    ] {
        v.push(-q.clone());
        v.push(q);
    }
    v
}

/// Checks `f(0)=0`, `f(1)=1`, `f(ab)=f(a)f(b)` and `f(a+b) ∈ f(a) ⊞ f(b)`.
pub fn check_homomorphism(h: &Homomorphism) -> Result<HomReport> {
    let (sample, exhaustive) = match h.source.carrier() {
        Ok(c) => (c, true),
        Err(_) => (rational_samples().into_iter().map(Element::rational).collect(), false),
    };
    let src = &h.source;
    let tgt = &h.target;
    let mut violations = Vec::new();
    let mut cases = 0;
    let mut flag = |ok: bool, property: &'static str, w: &[&Element]| {
        cases += 1;
        if !ok {
            violations.push(HomViolation {
                property,
                witness: w.iter().map(|e| e.to_string()).collect(),
            });
        }
    };
    let z = src.zero();
    let o = src.one();
    flag(h.apply(&z)? == tgt.zero(), "f(0) = 0", &[&z]);
    flag(h.apply(&o)? == tgt.one(), "f(1) = 1", &[&o]);
    for a in &sample {
        for b in &sample {
            let fa = h.apply(a)?;
            let fb = h.apply(b)?;
            let prod = src.mul(a, b)?;
            flag(h.apply(&prod)? == tgt.mul(&fa, &fb)?, "f(ab) = f(a)f(b)", &[a, b]);
            for s in src.hyperadd(a, b)?.enumerate()? {
                flag(
                    tgt.hyperadd(&fa, &fb)?.contains(&h.apply(s)?)?,
                    "f(a+b) ∈ f(a) ⊞ f(b)",
                    &[a, b],
                );
            }
        }
    }
    Ok(HomReport {
        passed: violations.is_empty(),
        exhaustive,
        cases,
        violations,
    })
}

/// Ultrametric identity used by the property tests: when valuations differ,
/// `v(a+b)` is the smaller one.
pub fn valuation_is_min_when_distinct(a: &Rational, b: &Rational, p: u32) -> Result<bool> {
    let va = padic_valuation(a, p)?;
    let vb = padic_valuation(b, p)?;
    if va == vb {
        return Ok(true);
    }
    let vs = padic_valuation(&(a + b), p)?;
    let (ta, tb) = (va.as_trop().unwrap(), vb.as_trop().unwrap());
    Ok(vs.as_trop() == Some(std::cmp::min(ta, tb)))
}
