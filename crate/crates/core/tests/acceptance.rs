//! Acceptance checks. Each criterion prints one PASS/FAIL line with its
//! timing; the process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use hyperpoly::corpus::{self, DEFAULT_SEED};
use hyperpoly::descartes::{count_positive_roots, descartes_bound, mult_neg_one_direct, mult_one_direct};
use hyperpoly::hyperfield::{check_axioms, Axiom, Element, Hyperfield, Trop, Value};
use hyperpoly::instances::{build_quotient, iso_to_named, squares};
use hyperpoly::polynomial::{hyper_product, is_root, quotients, AssocTree, MultSolver, Poly};
use hyperpoly::rational::{frac, int, is_prime, Rational};
use hyperpoly::tropical::{
    canonical_expansion, functional_equiv, in_product, newton_polygon, newton_rule_verify, tropical_roots,
};

type Check = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sp(f: &Hyperfield, signs: &[i8]) -> Poly {
    Poly::from_values(f, signs.iter().map(|&s| Value::Sign(s)).collect()).unwrap()
}

fn newton_example() -> Check {
    let vals = [Some(2), Some(0), Some(1), None, Some(-1), Some(0)];
    let t = Hyperfield::tropical();
    let p = Poly::new(
        &t,
        vals.iter()
            .map(|v| v.map_or(Element::tropical_inf(), |x| Element::tropical(int(x))))
            .collect(),
    )
    .unwrap();
    let np = newton_polygon(&p).map_err(|e| e.to_string())?;
    let segs: Vec<(Rational, usize)> = np.segments.iter().map(|s| (s.slope.clone(), s.length)).collect();
    let want = vec![(int(2), 1), (frac(1, 3), 3), (int(-1), 1)];
    ensure(segs == want, || format!("segments {segs:?}"))?;
    let nus = [
        (Trop::Finite(int(2)), 1),
        (Trop::Finite(frac(1, 3)), 3),
        (Trop::Finite(int(-1)), 1),
        (Trop::Finite(int(0)), 0),
        (Trop::Finite(int(5)), 0),
        (Trop::Finite(frac(1, 2)), 0),
        (Trop::Inf, 0),
    ];
    for (s, n) in nus {
        ensure(np.nu(&s) == n, || format!("nu at {s} is {}", np.nu(&s)))?;
    }
    Ok("segments (2,1) (1/3,3) (-1,1); nu = 1, 3, 1, else 0".into())
}

fn sign_changes_exhaustive() -> Check {
    let s = Hyperfield::sign();
    let mut solver = MultSolver::new(&s);
    let polys = corpus::all_polys(&s, 6).map_err(|e| e.to_string())?;
    let (one, neg) = (Element::sign(1), Element::sign(-1));
    for p in &polys {
        let m1 = solver.multiplicity(p, &one).map_err(|e| e.to_string())?.multiplicity;
        let m2 = solver.multiplicity(p, &neg).map_err(|e| e.to_string())?.multiplicity;
        let d1 = mult_one_direct(p).unwrap();
        let d2 = mult_neg_one_direct(p).unwrap();
        ensure(m1 == d1 && m2 == d2, || format!("{p}: ({m1}, {m2}) vs ({d1}, {d2})"))?;
    }
    Ok(format!("{} sign polynomials of degree <= 6", polys.len()))
}

fn roots_iff_quotients() -> Check {
    let fields = [
        Hyperfield::sign(),
        Hyperfield::krasner(),
        Hyperfield::weak_sign(),
        build_quotient(7, &squares(7)).unwrap(),
    ];
    let mut cases = 0;
    for f in &fields {
        let carrier = f.carrier().unwrap();
        for p in corpus::all_polys(f, 4).unwrap() {
            for a in &carrier {
                let r = is_root(f, &p, a).map_err(|e| e.to_string())?;
                let q = !quotients(f, &p, a).map_err(|e| e.to_string())?.is_empty();
                ensure(r == q, || format!("{} {p} at {a}: root {r}, quotients {q}", f.spec()))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (polynomial, element) pairs over S, K, W, F7/squares"))
}

fn known_quotient_set() -> Check {
    let s = Hyperfield::sign();
    let p = sp(&s, &[1, -1, -1, 1]);
    let got = quotients(&s, &p, &Element::sign(1)).map_err(|e| e.to_string())?;
    // T^2 - 1, T^2 + T - 1, T^2 - T - 1
    let mut want = vec![sp(&s, &[-1, 0, 1]), sp(&s, &[-1, 1, 1]), sp(&s, &[-1, -1, 1])];
    want.sort();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("{T^2-1, T^2+T-1, T^2-T-1}".into())
}

fn weak_sign_double_roots() -> Check {
    let w = Hyperfield::weak_sign();
    let p = sp(&w, &[1, 1, 1]);
    let mut solver = MultSolver::new(&w);
    let m1 = solver.multiplicity(&p, &Element::weak_sign(1)).map_err(|e| e.to_string())?.multiplicity;
    let m2 = solver.multiplicity(&p, &Element::weak_sign(-1)).map_err(|e| e.to_string())?.multiplicity;
    let m0 = solver.multiplicity(&p, &Element::weak_sign(0)).map_err(|e| e.to_string())?.multiplicity;
    ensure(m1 == 2 && m2 == 2 && m0 == 0, || format!("mult 1 = {m1}, mult -1 = {m2}, mult 0 = {m0}"))?;
    ensure(m0 + m1 + m2 > 2, || "sum does not exceed degree".into())?;
    Ok("mult_1 = mult_-1 = 2, total 4 > degree 2".into())
}

fn krasner_orders() -> Check {
    let k = Hyperfield::krasner();
    let mut rng = corpus::rng(DEFAULT_SEED);
    let mut solver = MultSolver::new(&k);
    for _ in 0..20 {
        let (p, r, n) = corpus::krasner_poly(&mut rng, 10);
        let m0 = solver.multiplicity(&p, &Element::krasner(false)).map_err(|e| e.to_string())?.multiplicity;
        let m1 = solver.multiplicity(&p, &Element::krasner(true)).map_err(|e| e.to_string())?.multiplicity;
        ensure(m0 == r && m1 == n - r, || format!("{p}: mult0 {m0} (r = {r}), mult1 {m1} (n = {n})"))?;
    }
    Ok("20 polynomials: mult_0 = r, mult_1 = n - r".into())
}

fn product_association() -> Check {
    let s = Hyperfield::sign();
    let m = sp(&s, &[-1, 1]);
    let pl = sp(&s, &[1, 1]);
    let factors = [m.clone(), m, pl];
    let left = hyper_product(&s, &factors, &AssocTree::parse("((1 2) 3)").unwrap()).map_err(|e| e.to_string())?;
    let right = hyper_product(&s, &factors, &AssocTree::parse("(1 (2 3))").unwrap()).map_err(|e| e.to_string())?;
    // T^3 + a T^2 + b T + 1 has coefficients (1, b, a, 1).
    let family = |keep: &dyn Fn(i8, i8) -> bool| {
        let mut v = Vec::new();
        for a in [-1, 0, 1] {
            for b in [-1, 0, 1] {
                if keep(a, b) {
                    v.push(sp(&s, &[1, b, a, 1]));
                }
            }
        }
        v.sort();
        v
    };
    let all = family(&|_, _| true);
    let some = family(&|a, b| a == -1 || b == -1);
    ensure(left.len() == 9 && left == all, || format!("left grouping gave {left:?}"))?;
    ensure(right.len() == 5 && right == some, || format!("right grouping gave {right:?}"))?;
    Ok("((T-1)(T-1))(T+1): 9 polynomials; (T-1)((T-1)(T+1)): 5".into())
}

fn phase_roots() -> Check {
    let ph = Hyperfield::phase();
    let p = Poly::new(&ph, vec![ph.one(); 3]).unwrap();
    for (q, want) in [
        (frac(3, 5), true),
        (int(1), true),
        (frac(7, 5), true),
        (frac(1, 2), false),
        (frac(3, 2), false),
        (int(0), false),
    ] {
        let got = is_root(&ph, &p, &Element::angle(q.clone())).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("angle {q}: root {got}"))?;
    }
    Ok("roots at 3/5, 1, 7/5; not at 1/2, 3/2, 0 (units of pi)".into())
}

fn descartes_split() -> Check {
    let mut rng = corpus::rng(DEFAULT_SEED);
    let pool = corpus::descartes_roots();
    for _ in 0..200 {
        let (p, roots) = corpus::split_rational(&mut rng, &pool, 6);
        let counted = count_positive_roots(&p).map_err(|e| e.to_string())?;
        let direct = roots.iter().filter(|r| **r > Rational::from_integer(0.into())).count();
        let (bound, _) = descartes_bound(&p).unwrap();
        ensure(counted == direct && counted == bound, || {
            format!("{p}: sturm {counted}, from roots {direct}, sign changes {bound}")
        })?;
    }
    Ok("200 split polynomials: positive roots = sign changes".into())
}

fn newton_split() -> Check {
    let mut rng = corpus::rng(DEFAULT_SEED);
    let pool = corpus::newton_roots();
    for _ in 0..100 {
        let (p, roots) = corpus::split_rational(&mut rng, &pool, 6);
        for prime in [2, 3] {
            let r = newton_rule_verify(&p, prime, Some(&roots)).map_err(|e| e.to_string())?;
            let total: usize = r.slopes.iter().map(|c| c.nu).sum();
            ensure(r.passed && total == roots.len(), || format!("{p} at {prime}: {:?}", r.slopes))?;
        }
    }
    Ok("100 split polynomials at primes 2 and 3: nu_s = roots of valuation s".into())
}

fn tropical_round_trip() -> Check {
    let mut rng = corpus::rng(DEFAULT_SEED);
    let pool = corpus::tropical_pool();
    let mut corpus_polys = Vec::new();
    for _ in 0..500 {
        let roots = corpus::root_multiset(&mut rng, &pool, 6);
        let p = canonical_expansion(&roots);
        let back = tropical_roots(&p).map_err(|e| e.to_string())?;
        ensure(back == roots, || format!("{p}: {back:?} vs {roots:?}"))?;
        corpus_polys.push((p, roots));
    }
    for _ in 0..200 {
        let roots = corpus::root_multiset(&mut rng, &pool, 6);
        let neg = corpus::perturbed_negative(&mut rng, &roots);
        corpus_polys.push((neg, roots));
    }
    let mut negatives = 0;
    for (p, roots) in &corpus_polys {
        let a = in_product(p, roots).map_err(|e| e.to_string())?;
        let b = functional_equiv(p, roots).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{p} vs {roots:?}: membership {a}, functions {b}"))?;
        negatives += usize::from(!a);
    }
    ensure(negatives == 200, || format!("{negatives} negatives instead of 200"))?;
    Ok("500 round trips; membership = functional match on 700 cases".into())
}

fn axiom_suite() -> Check {
    let mut fields = vec![
        Hyperfield::rational(),
        Hyperfield::prime(5).unwrap(),
        Hyperfield::prime(7).unwrap(),
        Hyperfield::sign(),
        Hyperfield::krasner(),
        Hyperfield::weak_sign(),
        Hyperfield::phase(),
        Hyperfield::tropical(),
    ];
    let mut quotient_count = 0;
    for p in (2..=31u32).filter(|&p| is_prime(u64::from(p))) {
        // every subgroup of the cyclic group F_p^× is generated by some single element
        let mut seen = std::collections::BTreeSet::new();
        for g in 1..p {
            let q = build_quotient(p, &[g]).map_err(|e| e.to_string())?;
            if seen.insert(q.spec()) {
                fields.push(q);
                quotient_count += 1;
            }
        }
    }
    for f in &fields {
        let r = check_axioms(f);
        ensure(r.all_passed(), || format!("{} fails {:?}", f.spec(), r.failures().map(|x| x.axiom).collect::<Vec<_>>()))?;
    }
    let w7 = build_quotient(7, &squares(7)).unwrap();
    let map = iso_to_named(&w7, &Hyperfield::weak_sign()).map_err(|e| e.to_string())?;
    let shown: Option<Vec<String>> = map.map(|m| m.iter().map(|(a, b)| format!("{a}->{b}")).collect());
    ensure(shown == Some(vec!["[0]->0".into(), "[1]->1".into(), "[3]->-1".into()]), || {
        format!("F7/squares vs W: {shown:?}")
    })?;
    let mut t = Hyperfield::sign().table().unwrap().clone();
    t.set_sum(&Value::Sign(1), &Value::Sign(1), &[Value::Sign(-1)]).unwrap();
    let bad = check_axioms(&Hyperfield::custom(1, t));
    let witness = bad.result(Axiom::Associativity).witness.clone();
    ensure(!bad.all_passed() && witness.is_some(), || "mutated table not caught".into())?;
    Ok(format!(
        "{} instances incl. {quotient_count} quotients with p <= 31; F7/squares = W; mutated S caught at ({})",
        fields.len(),
        witness.unwrap().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
    ))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("newton polygon of (2,0,1,inf,-1,0)", Some(Duration::from_millis(1)), newton_example),
        ("recursive multiplicity = sign changes, degree <= 6", Some(Duration::from_secs(30)), sign_changes_exhaustive),
        ("root iff quotient exists, degree <= 4", Some(Duration::from_secs(60)), roots_iff_quotients),
        ("quotients of T^3-T^2-T+1 at 1 over S", None, known_quotient_set),
        ("double roots of T^2+T+1 over W", None, weak_sign_double_roots),
        ("Krasner multiplicities at 0 and 1", None, krasner_orders),
        ("association order of (T-1)(T-1)(T+1) over S", None, product_association),
        ("phase roots of T^2+T+1", None, phase_roots),
        ("sign-change equality on split rational polynomials", Some(Duration::from_secs(60)), descartes_split),
        ("Newton polygon equality on split rational polynomials", Some(Duration::from_secs(60)), newton_split),
        ("tropical factorization round trip", None, tropical_round_trip),
        ("axioms of all instances", None, axiom_suite),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let late = limit.is_some_and(|l| took > l);
        let ok = result.is_ok() && !late;
        failed += usize::from(!ok);
        let detail = match &result {
            Ok(d) => d.clone(),
            Err(e) => e.clone(),
        };
        let budget = limit.map_or(String::new(), |l| format!(", limit {l:?}"));
        println!(
            "[{}] {:02} {name}: {detail} ({took:.2?}{budget})",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
