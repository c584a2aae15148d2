//! Batch cross-checks of hyperfield multiplicities against classical root
//! counts, used by the `verify` command.

use serde::Serialize;

use crate::corpus;
use crate::descartes::{mult_neg_one_direct, mult_one_direct, sturm_self_check, verify_descartes};
use crate::error::Result;
use crate::hyperfield::{check_axioms, Element, Hyperfield};
use crate::instances::{build_quotient, iso_to_named, squares};
use crate::polynomial::MultSolver;
use crate::rational::is_prime;
use crate::tropical::{canonical_expansion, functional_equiv, in_product, newton_rule_verify, tropical_roots};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, seed: Option<u64>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recursive multiplicity at `1` and `-1` against sign changes, for every
/// sign polynomial of degree at most `max_deg`.
pub fn sign_suite(max_deg: usize) -> Result<SuiteReport> {
    let s = Hyperfield::sign();
    let mut solver = MultSolver::new(&s);
    let mut rep = SuiteReport::new("signs", None);
    let (one, neg) = (Element::sign(1), Element::sign(-1));
    for p in corpus::all_polys(&s, max_deg)? {
        let m1 = solver.multiplicity(&p, &one)?.multiplicity;
        let m2 = solver.multiplicity(&p, &neg)?.multiplicity;
        let (d1, d2) = (mult_one_direct(&p)?, mult_neg_one_direct(&p)?);
        rep.record(m1 == d1 && m2 == d2, || {
            format!("{p}: recursive ({m1}, {m2}) vs sign changes ({d1}, {d2})")
        });
    }
    Ok(rep)
}

/// Rule of signs with equality on split rational polynomials.
pub fn descartes_suite(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut rng = corpus::rng(seed);
    let pool = corpus::descartes_roots();
    let mut rep = SuiteReport::new("descartes", Some(seed));
    for _ in 0..count {
        let (p, roots) = corpus::split_rational(&mut rng, &pool, 6);
        let r = verify_descartes(&p, Some(&roots))?;
        let sturm = sturm_self_check(&p)?;
        rep.record(r.passed && sturm, || format!("{p}: {r:?}, sturm self-check {sturm}"));
    }
    Ok(rep)
}

/// Newton polygon rule with equality on split rational polynomials, primes 2 and 3.
pub fn newton_suite(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut rng = corpus::rng(seed);
    let pool = corpus::newton_roots();
    let mut rep = SuiteReport::new("newton", Some(seed));
    for _ in 0..count {
        let (p, roots) = corpus::split_rational(&mut rng, &pool, 6);
        for prime in [2, 3] {
            let r = newton_rule_verify(&p, prime, Some(&roots))?;
            rep.record(r.passed, || format!("{p} at prime {prime}: {:?}", r.slopes));
        }
    }
    Ok(rep)
}

/// Root multisets survive canonical expansion, and product membership agrees
/// with functional equivalence on positives and perturbed negatives.
pub fn tropical_suite(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut rng = corpus::rng(seed);
    let pool = corpus::tropical_pool();
    let mut rep = SuiteReport::new("tropical", Some(seed));
    for _ in 0..count {
        let roots = corpus::root_multiset(&mut rng, &pool, 6);
        let p = canonical_expansion(&roots);
        let back = tropical_roots(&p)?;
        let (a, b) = (in_product(&p, &roots)?, functional_equiv(&p, &roots)?);
        rep.record(back == roots && a && b, || format!("{p}: roots {back:?}, membership {a}/{b}"));
        let neg = corpus::perturbed_negative(&mut rng, &roots);
        let (a, b) = (in_product(&neg, &roots)?, functional_equiv(&neg, &roots)?);
        rep.record(a == b && !a, || format!("{neg}: membership {a}/{b}"));
    }
    Ok(rep)
}

/// Axioms of every named instance and of every quotient `F_p / G` with
/// `p <= max_p`, plus quotients by squares against `W`.
pub fn axiom_suite(max_p: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("axioms", None);
    let mut fields = vec![
        Hyperfield::rational(),
        Hyperfield::sign(),
        Hyperfield::krasner(),
        Hyperfield::weak_sign(),
        Hyperfield::phase(),
        Hyperfield::tropical(),
    ];
    for p in (2..=max_p).filter(|&p| is_prime(u64::from(p))) {
        fields.push(Hyperfield::prime(p)?);
        // Subgroups of the cyclic unit group, one per divisor of p - 1.
        let g = (1..p).find(|&g| unit_order(g, p) == p - 1).unwrap_or(1);
        for d in (1..p).filter(|d| (p - 1) % d == 0) {
            let gen = pow_mod(g, (p - 1) / d, p);
            fields.push(build_quotient(p, &[gen])?);
        }
        if p >= 7 && p % 4 == 3 {
            let q = build_quotient(p, &squares(p))?;
            let iso = iso_to_named(&q, &Hyperfield::weak_sign())?.is_some();
            rep.record(iso, || format!("{} is not isomorphic to W", q.spec()));
        }
    }
    for f in &fields {
        let r = check_axioms(f);
        rep.record(r.all_passed(), || {
            let bad: Vec<&str> = r.failures().map(|x| x.axiom.label()).collect();
            format!("{}: {}", f.spec(), bad.join(", "))
        });
    }
    Ok(rep)
}

fn pow_mod(b: u32, e: u32, p: u32) -> u32 {
    (0..e).fold(1u64, |acc, _| acc * u64::from(b) % u64::from(p)) as u32
}

fn unit_order(g: u32, p: u32) -> u32 {
    let mut x = u64::from(g);
    let mut k = 1;
    while x != 1 {
        x = x * u64::from(g) % u64::from(p);
        k += 1;
    }
    k
}
