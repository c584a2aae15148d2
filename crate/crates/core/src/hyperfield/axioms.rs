use std::fmt;

use serde::Serialize;

use super::set::probe_angles;
use super::table::{mask_indices, FiniteTable, Mask};
use super::{Element, HyperSet, Hyperfield, Kind, Trop};
use crate::error::Result;
use crate::rational::{frac, half, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    NonEmpty,
    Commutativity,
    Associativity,
    /// `0 ⊞ a = a ⊞ 0 = {a}`
    Neutral,
    /// a unique `-a` with `0 ∈ a ⊞ -a`
    Inverse,
    /// `a ∈ b ⊞ c` iff `-b ∈ -a ⊞ c`
    Reversibility,
    MultiplicativeGroup,
    /// `a · 0 = 0 · a = 0`
    Absorbing,
    /// `a (b ⊞ c) = ab ⊞ ac`
    Distributivity,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::NonEmpty,
        Axiom::Commutativity,
        Axiom::Associativity,
        Axiom::Neutral,
        Axiom::Inverse,
        Axiom::Reversibility,
        Axiom::MultiplicativeGroup,
        Axiom::Absorbing,
        Axiom::Distributivity,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::NonEmpty => "non-empty sums",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Neutral => "neutral element",
            Axiom::Inverse => "unique hyperinverse",
            Axiom::Reversibility => "reversibility",
            Axiom::MultiplicativeGroup => "multiplicative group",
            Axiom::Absorbing => "absorbing zero",
            Axiom::Distributivity => "distributivity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    pub cases: usize,
    /// First counterexample, as the tuple of elements the axiom quantifies over.
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<Vec<Element>>,
}

fn ser_witness<S: serde::Serializer>(w: &Option<Vec<Element>>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(v) => s.collect_seq(v.iter().map(|e| e.to_string())),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub instance: String,
    /// False when the carrier is infinite and a fixed sample grid was used.
    pub exhaustive: bool,
    pub sample_size: usize,
    pub results: Vec<AxiomResult>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

struct Tally {
    axiom: Axiom,
    cases: usize,
    witness: Option<Vec<Element>>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally {
            axiom,
            cases: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: &[&Element]) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness.iter().map(|e| (*e).clone()).collect());
        }
    }

    fn finish(self) -> AxiomResult {
        AxiomResult {
            axiom: self.axiom,
            passed: self.witness.is_none(),
            cases: self.cases,
            witness: self.witness,
        }
    }
}

/// Sample grid used for the tropical hyperfield.
pub fn tropical_grid() -> Vec<Element> {
    let mut v: Vec<Element> = [int(-2), int(-1), -half(), int(0), frac(1, 3), int(1), frac(7, 2)]
        .into_iter()
        .map(Element::tropical)
        .collect();
    v.push(Element::tropical_inf());
    v
}

/// Sample grid used for the phase hyperfield.
pub fn phase_grid() -> Vec<Element> {
    let mut v: Vec<Element> = [int(0), frac(1, 3), half(), int(1), frac(3, 2), frac(5, 3)]
        .into_iter()
        .map(Element::angle)
        .collect();
    v.push(Element::phase_zero());
    v
}

fn rational_grid() -> Vec<Element> {
    [int(0), int(1), int(-1), int(2), half(), frac(-3, 4), frac(5, 3)]
        .into_iter()
        .map(Element::rational)
        .collect()
}

/// Points at which two unions built from the sample grid can differ.
fn query_points(f: &Hyperfield) -> Vec<Element> {
    match f.kind() {
        Kind::Tropical => {
            let mut vals: Vec<Rational> = tropical_grid()
                .iter()
                .filter_map(|e| e.as_trop().and_then(Trop::finite).cloned())
                .collect();
            vals.sort();
            let mut out = vals.clone();
            for w in vals.windows(2) {
                out.push((&w[0] + &w[1]) * half());
            }
            out.push(&vals[0] - int(1));
            out.push(vals.last().unwrap() + int(1));
            let mut els: Vec<Element> = out.into_iter().map(Element::tropical).collect();
            els.push(Element::tropical_inf());
            els
        }
        Kind::Phase => {
            // Breakpoints of grid unions are grid angles and their antipodes.
            let grid: Vec<Rational> = phase_grid()
                .iter()
                .filter_map(|e| match e.value() {
                    super::Value::Phase(super::Phase::Angle(q)) => Some(q.clone()),
                    _ => None,
                })
                .collect();
            let breaks = grid.iter().cloned().chain(grid.iter().map(|q| q + int(1)));
            let mut els: Vec<Element> = probe_angles(breaks).into_iter().map(Element::angle).collect();
            els.push(Element::phase_zero());
            els
        }
        _ => Vec::new(),
    }
}

/// Checks the hyperfield axioms, exhaustively on finite carriers and on a
/// fixed sample grid for Q, T and P.
pub fn check_axioms(f: &Hyperfield) -> AxiomReport {
    if let Some(t) = f.table() {
        return check_table(f, t);
    }
    let (sample, exhaustive) = match f.carrier() {
        Ok(c) => (c, true),
        Err(_) => match f.kind() {
            Kind::Tropical => (tropical_grid(), false),
            Kind::Phase => (phase_grid(), false),
            _ => (rational_grid(), false),
        },
    };
    let mut notes = Vec::new();
    if f.is_phase() {
        notes.push("a ⊞ a = {a} is taken from the quotient model C/R_{>0}; it is not among the listed phase rules".to_string());
    }
    if !exhaustive {
        notes.push(format!("sampled on a fixed grid of {} elements", sample.len()));
    }
    let results = match check_generic(f, &sample, exhaustive) {
        Ok(r) => r,
        Err(e) => {
            notes.push(format!("checker aborted: {e}"));
            Axiom::ALL
                .iter()
                .map(|&axiom| AxiomResult {
                    axiom,
                    passed: false,
                    cases: 0,
                    witness: Some(Vec::new()),
                })
                .collect()
        }
    };
    AxiomReport {
        instance: f.spec(),
        exhaustive,
        sample_size: sample.len(),
        results,
        notes,
    }
}

fn check_generic(f: &Hyperfield, sample: &[Element], exhaustive: bool) -> Result<Vec<AxiomResult>> {
    let zero = f.zero();
    let one = f.one();
    let queries = query_points(f);

    let mut nonempty = Tally::new(Axiom::NonEmpty);
    let mut comm = Tally::new(Axiom::Commutativity);
    let mut assoc = Tally::new(Axiom::Associativity);
    let mut neutral = Tally::new(Axiom::Neutral);
    let mut inverse = Tally::new(Axiom::Inverse);
    let mut rev = Tally::new(Axiom::Reversibility);
    let mut group = Tally::new(Axiom::MultiplicativeGroup);
    let mut absorb = Tally::new(Axiom::Absorbing);
    let mut dist = Tally::new(Axiom::Distributivity);

    for a in sample {
        let left = f.hyperadd(&zero, a)?;
        let right = f.hyperadd(a, &zero)?;
        let single = HyperSet::singleton(a.clone());
        neutral.record(left == single && right == single, &[a]);

        let zeroing: Vec<&Element> = sample
            .iter()
            .filter(|x| f.hyperadd(a, x).map(|s| s.contains_zero()).unwrap_or(false))
            .collect();
        let ok = match f.neg(a) {
            Ok(n) => {
                let n_works = f.hyperadd(a, &n)?.contains_zero();
                let others = zeroing.iter().all(|x| **x == n);
                // On a sample the true inverse may lie off-grid; it still has to work.
                let complete = !exhaustive || zeroing.len() == 1;
                n_works && others && complete
            }
            Err(_) => false,
        };
        inverse.record(ok, &[a]);

        absorb.record(f.mul(a, &zero)?.is_zero() && f.mul(&zero, a)?.is_zero(), &[a]);
        if !a.is_zero() {
            let ok = f.mul(&one, a)? == *a
                && f.inv(a).and_then(|i| f.mul(a, &i)).map(|p| p == one).unwrap_or(false);
            group.record(ok, &[a]);
        }
    }

    for a in sample {
        for b in sample {
            let ab = f.hyperadd(a, b)?;
            let ba = f.hyperadd(b, a)?;
            nonempty.record(ab.enumerate().map(|s| !s.is_empty()).unwrap_or(true), &[a, b]);
            comm.record(ab.same_set(&ba), &[a, b]);
            if !a.is_zero() && !b.is_zero() {
                let p = f.mul(a, b)?;
                group.record(!p.is_zero() && p == f.mul(b, a)?, &[a, b]);
            }
            for c in sample {
                if !a.is_zero() && !b.is_zero() && !c.is_zero() {
                    let l = f.mul(&f.mul(a, b)?, c)?;
                    let r = f.mul(a, &f.mul(b, c)?)?;
                    group.record(l == r, &[a, b, c]);
                }

                let bc = f.hyperadd(b, c)?;
                let same = if ab.is_finite() && bc.is_finite() && f.has_finite_sums() {
                    let l = f.set_add(&bc, a)?;
                    let r = f.set_add(&ab, c)?;
                    l == r
                } else {
                    let mut same = true;
                    for x in &queries {
                        if f.union_contains(&bc, a, x)? != f.union_contains(&ab, c, x)? {
                            same = false;
                            break;
                        }
                    }
                    same
                };
                assoc.record(same, &[a, b, c]);

                let lhs = f.hyperadd(b, c)?.contains(a)?;
                let ok = match (f.neg(a), f.neg(b)) {
                    (Ok(na), Ok(nb)) => lhs == f.hyperadd(&na, c)?.contains(&nb)?,
                    _ => false,
                };
                rev.record(ok, &[a, b, c]);

                let scaled = f.scale_set(a, &bc)?;
                let expanded = f.hyperadd(&f.mul(a, b)?, &f.mul(a, c)?)?;
                dist.record(scaled.same_set(&expanded), &[a, b, c]);
            }
        }
    }

    Ok([nonempty, comm, assoc, neutral, inverse, rev, group, absorb, dist]
        .into_iter()
        .map(Tally::finish)
        .collect())
}

fn check_table(f: &Hyperfield, t: &FiniteTable) -> AxiomReport {
    let n = t.len();
    let el = |i: usize| Element::new_unchecked(f.id(), t.value(i).clone());
    let union = |mask: Mask, c: usize| mask_indices(mask).fold(0, |m, d| m | t.sum(d, c));
    let (zero, one) = (t.zero(), t.one());

    let mut nonempty = Tally::new(Axiom::NonEmpty);
    let mut comm = Tally::new(Axiom::Commutativity);
    let mut assoc = Tally::new(Axiom::Associativity);
    let mut neutral = Tally::new(Axiom::Neutral);
    let mut inverse = Tally::new(Axiom::Inverse);
    let mut rev = Tally::new(Axiom::Reversibility);
    let mut group = Tally::new(Axiom::MultiplicativeGroup);
    let mut absorb = Tally::new(Axiom::Absorbing);
    let mut dist = Tally::new(Axiom::Distributivity);

    let negs: Vec<Option<usize>> = (0..n).map(|a| t.neg(a)).collect();
    for (a, neg) in negs.iter().enumerate() {
        let ea = el(a);
        neutral.record(t.sum(zero, a) == 1 << a && t.sum(a, zero) == 1 << a, &[&ea]);
        inverse.record(neg.is_some(), &[&ea]);
        absorb.record(t.mul(a, zero) == zero && t.mul(zero, a) == zero, &[&ea]);
        if a != zero {
            let ok = t.mul(one, a) == a && t.inv(a).is_some();
            group.record(ok, &[&ea]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            let (ea, eb) = (el(a), el(b));
            nonempty.record(t.sum(a, b) != 0, &[&ea, &eb]);
            comm.record(t.sum(a, b) == t.sum(b, a), &[&ea, &eb]);
            if a != zero && b != zero {
                let p = t.mul(a, b);
                group.record(p != zero && p == t.mul(b, a), &[&ea, &eb]);
            }
            for c in 0..n {
                let ec = || el(c);
                if a != zero && b != zero && c != zero {
                    let ok = t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c));
                    if !ok {
                        group.record(false, &[&ea, &eb, &ec()]);
                    } else {
                        group.cases += 1;
                    }
                }
                let l = union(t.sum(b, c), a);
                let r = union(t.sum(a, b), c);
                if l == r {
                    assoc.cases += 1;
                } else {
                    assoc.record(false, &[&ea, &eb, &ec()]);
                }

                let ok = match (negs[a], negs[b]) {
                    (Some(na), Some(nb)) => {
                        (t.sum(b, c) >> a & 1) == (t.sum(na, c) >> nb & 1)
                    }
                    _ => false,
                };
                if ok {
                    rev.cases += 1;
                } else {
                    rev.record(false, &[&ea, &eb, &ec()]);
                }

                let scaled = mask_indices(t.sum(b, c)).fold(0 as Mask, |m, d| m | 1 << t.mul(a, d));
                if scaled == t.sum(t.mul(a, b), t.mul(a, c)) {
                    dist.cases += 1;
                } else {
                    dist.record(false, &[&ea, &eb, &ec()]);
                }
            }
        }
    }
    AxiomReport {
        instance: f.spec(),
        exhaustive: true,
        sample_size: n,
        results: [nonempty, comm, assoc, neutral, inverse, rev, group, absorb, dist]
            .into_iter()
            .map(Tally::finish)
            .collect(),
        notes: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::Value;

    #[test]
    fn named_finite_instances_pass() {
        for f in [Hyperfield::sign(), Hyperfield::krasner(), Hyperfield::weak_sign()] {
            let r = check_axioms(&f);
            assert!(r.exhaustive);
            assert!(r.all_passed(), "{}: {:?}", f, r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn prime_fields_and_rationals_pass() {
        for p in [2, 3, 5, 7] {
            assert!(check_axioms(&Hyperfield::prime(p).unwrap()).all_passed());
        }
        let q = check_axioms(&Hyperfield::rational());
        assert!(!q.exhaustive);
        assert!(q.all_passed(), "{:?}", q.failures().collect::<Vec<_>>());
    }

    #[test]
    fn sampled_instances_pass() {
        for f in [Hyperfield::tropical(), Hyperfield::phase()] {
            let r = check_axioms(&f);
            assert!(!r.exhaustive);
            assert!(r.all_passed(), "{}: {:?}", f, r.failures().collect::<Vec<_>>());
        }
        assert!(!check_axioms(&Hyperfield::phase()).notes.is_empty());
    }

    #[test]
    fn mutated_sign_table_is_caught() {
        let mut t = Hyperfield::sign().table().unwrap().clone();
        t.set_sum(&Value::Sign(1), &Value::Sign(1), &[Value::Sign(-1)]).unwrap();
        let r = check_axioms(&Hyperfield::custom(1, t));
        assert!(!r.all_passed());
        let assoc = r.result(Axiom::Associativity);
        assert!(!assoc.passed);
        assert_eq!(assoc.witness.as_ref().unwrap().len(), 3);
    }
}
