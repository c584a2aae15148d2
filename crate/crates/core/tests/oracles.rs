//! Hyperfield computations checked against classical algebra and brute force.

use rand::Rng;

use hyperpoly::corpus;
use hyperpoly::hyperfield::{Element, Hyperfield, Trop};
use hyperpoly::polynomial::{hyper_mul_poly, product_contains, quotients, MultSolver, Poly};
use hyperpoly::ratpoly::{classical_multiplicity, sign_image, RatPoly};
use hyperpoly::rational::{frac, int, Rational};
use hyperpoly::tropical::{elementary_symmetric, eval_function};

#[test]
fn field_recursion_is_classical_over_q() {
    let q = Hyperfield::rational();
    let mut rng = corpus::rng(corpus::DEFAULT_SEED);
    let pool = corpus::descartes_roots();
    let mut solver = MultSolver::new(&q);
    for _ in 0..60 {
        let (p, roots) = corpus::split_rational(&mut rng, &pool, 6);
        let pq = p.to_poly(&q).unwrap();
        for r in pool.iter().chain([&int(5)]) {
            let want = roots.iter().filter(|x| *x == r).count();
            assert_eq!(classical_multiplicity(&p, r).unwrap(), want);
            let got = solver.multiplicity(&pq, &Element::rational(r.clone())).unwrap().multiplicity;
            assert_eq!(got, want, "{p} at {r}");
        }
    }
}

#[test]
fn field_recursion_is_classical_over_f7() {
    let f = Hyperfield::prime(7).unwrap();
    let mut rng = corpus::rng(3);
    let mut solver = MultSolver::new(&f);
    for _ in 0..60 {
        let deg = rng.random_range(1..=5);
        let roots: Vec<i64> = (0..deg).map(|_| rng.random_range(0..7)).collect();
        let p = RatPoly::from_roots(&int(1), &roots.iter().map(|&r| int(r)).collect::<Vec<_>>());
        let tokens: Vec<String> = p.coeffs().iter().map(|c| c.to_integer().to_string()).collect();
        let (pf, _) = hyperpoly::parse::parse_poly(&f, &tokens.join(",")).unwrap();
        for a in 0..7 {
            let want = roots.iter().filter(|&&r| r == a).count();
            let e = hyperpoly::parse::parse_element(&f, &a.to_string()).unwrap();
            assert_eq!(solver.multiplicity(&pf, &e).unwrap().multiplicity, want, "{pf} at {a}");
        }
    }
}

#[test]
fn quotients_match_brute_force() {
    for f in [Hyperfield::sign(), Hyperfield::weak_sign(), Hyperfield::krasner()] {
        let carrier = f.carrier().unwrap();
        for p in corpus::all_polys(&f, 3).unwrap() {
            let n = p.degree().unwrap();
            if n == 0 {
                continue;
            }
            let candidates: Vec<Poly> = corpus::all_polys(&f, n - 1)
                .unwrap()
                .into_iter()
                .filter(|q| q.degree() == Some(n - 1))
                .collect();
            for a in &carrier {
                let lin = Poly::linear(&f, a).unwrap();
                let mut brute: Vec<Poly> = candidates
                    .iter()
                    .filter(|q| product_contains(&f, &lin, q, &p).unwrap())
                    .cloned()
                    .collect();
                brute.sort();
                assert_eq!(quotients(&f, &p, a).unwrap(), brute, "{} {p} at {a}", f.spec());
            }
        }
    }
}

#[test]
fn products_contain_sign_images() {
    // The sign of a product of rational polynomials lies in the hyperproduct of the signs.
    let s = Hyperfield::sign();
    let mut rng = corpus::rng(9);
    for _ in 0..200 {
        let mut draw = || {
            let deg = rng.random_range(0..=3);
            RatPoly::new((0..=deg).map(|_| int(rng.random_range(-3..=3))).collect())
        };
        let (a, b) = (draw(), draw());
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let prod = sign_image(&(&a * &b));
        let set = hyper_mul_poly(&s, &sign_image(&a), &sign_image(&b)).unwrap();
        assert!(set.contains(&prod), "{a} times {b}");
    }
}

#[test]
fn elementary_symmetric_by_subsets() {
    let mut rng = corpus::rng(21);
    let pool = corpus::tropical_pool();
    for _ in 0..100 {
        let roots = corpus::root_multiset(&mut rng, &pool, 8);
        let n = roots.len();
        let mut best = vec![Trop::Inf; n + 1];
        for mask in 0u32..(1 << n) {
            let k = mask.count_ones() as usize;
            let sum = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .fold(Trop::Finite(int(0)), |acc, i| acc.times(&roots[i]));
            if sum < best[k] {
                best[k] = sum;
            }
        }
        assert_eq!(elementary_symmetric(&roots), best, "{roots:?}");
    }
}

#[test]
fn tropical_evaluation_is_a_minimum() {
    let t = Hyperfield::tropical();
    let (p, _) = hyperpoly::parse::parse_poly(&t, "2,0,1,inf,-1,0").unwrap();
    for (b, want) in [(int(0), int(-1)), (int(3), int(2)), (frac(1, 2), frac(1, 2)), (int(-2), int(-10))] {
        let brute = p
            .coeffs()
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.as_trop().unwrap().finite().map(|v| v + &b * Rational::from_integer((i as i64).into())))
            .min()
            .unwrap();
        assert_eq!(brute, want);
        assert_eq!(eval_function(&p, &b).unwrap(), Trop::Finite(want));
    }
}
