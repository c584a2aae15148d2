//! Deterministic test inputs: exhaustive polynomial lists over finite
//! carriers and seeded pseudo-random split polynomials and root multisets.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hyperfield::{Element, Hyperfield, Trop};
use crate::polynomial::Poly;
use crate::ratpoly::RatPoly;
use crate::rational::{frac, int, Rational};
use crate::tropical::{elementary_symmetric, from_trops};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const SEED_VAR: &str = "HYPERPOLY_SEED";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed from `HYPERPOLY_SEED`, falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("{SEED_VAR} must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Every nonzero coefficient vector of length `max_deg + 1` over the carrier,
/// trimmed; each polynomial of degree at most `max_deg` appears once.
pub fn all_polys(f: &Hyperfield, max_deg: usize) -> Result<Vec<Poly>> {
    let carrier = f.carrier()?;
    let k = carrier.len();
    let len = max_deg + 1;
    let total = k.checked_pow(len as u32).ok_or_else(|| Error::domain("too many polynomials"))?;
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let coeffs: Vec<Element> = (0..len)
            .map(|_| {
                let e = carrier[code % k].clone();
                code /= k;
                e
            })
            .collect();
        let p = Poly::new(f, coeffs)?;
        if !p.is_zero() {
            out.push(p);
        }
    }
    Ok(out)
}

/// Roots used for the rule-of-signs corpus.
pub fn descartes_roots() -> Vec<Rational> {
    vec![int(1), int(-1), int(2), int(-2), int(3), int(-3), frac(1, 2), frac(-1, 2)]
}

/// Roots used for the Newton polygon corpus.
pub fn newton_roots() -> Vec<Rational> {
    vec![
        int(1),
        int(-1),
        int(2),
        int(-2),
        int(4),
        int(-4),
        frac(1, 2),
        frac(-1, 2),
        int(3),
        int(-3),
    ]
}

/// A polynomial `lc · ∏ (T - r)` of degree `1..=max_deg` with roots drawn
/// from `pool`.
pub fn split_rational(rng: &mut impl Rng, pool: &[Rational], max_deg: usize) -> (RatPoly, Vec<Rational>) {
    let deg = rng.random_range(1..=max_deg);
    let roots: Vec<Rational> = (0..deg).map(|_| pool.choose(rng).unwrap().clone()).collect();
    let lc = *[1i64, -1, 2, -3, 5].choose(rng).unwrap();
    (RatPoly::from_roots(&int(lc), &roots), roots)
}

pub fn tropical_pool() -> Vec<Trop> {
    [int(-2), int(-1), int(0), frac(1, 3), int(1), int(2)]
        .into_iter()
        .map(Trop::Finite)
        .chain([Trop::Inf])
        .collect()
}

/// Sorted multiset of size `1..=max_size`.
pub fn root_multiset(rng: &mut impl Rng, pool: &[Trop], max_size: usize) -> Vec<Trop> {
    let n = rng.random_range(1..=max_size);
    let mut v: Vec<Trop> = (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect();
    v.sort();
    v
}

/// A monic polynomial that is not in `∏ (T ⊞ a_i)`: one coefficient is pushed
/// below its bound, or a forced coefficient above it.
pub fn perturbed_negative(rng: &mut impl Rng, roots: &[Trop]) -> Poly {
    let n = roots.len();
    let s = elementary_symmetric(roots);
    let mut c: Vec<Trop> = s.iter().rev().cloned().collect();
    let i = rng.random_range(1..=n);
    let delta = [int(1), frac(1, 2), int(2), frac(1, 3)].choose(rng).unwrap().clone();
    let forced = i == n || roots[i - 1] < roots[i];
    c[n - i] = match &s[i] {
        Trop::Inf => Trop::Finite(int(0)),
        Trop::Finite(v) if forced && rng.random_bool(0.5) => Trop::Finite(v + delta),
        Trop::Finite(v) => Trop::Finite(v - delta),
    };
    from_trops(c)
}

/// A Krasner polynomial with lowest nonzero index `r` and degree `n`.
pub fn krasner_poly(rng: &mut impl Rng, max_deg: usize) -> (Poly, usize, usize) {
    let k = Hyperfield::krasner();
    let n = rng.random_range(1..=max_deg);
    let r = rng.random_range(0..=n);
    let coeffs = (0..=n)
        .map(|i| Element::krasner(i == r || i == n || (i > r && rng.random_bool(0.5))))
        .collect();
    (Poly::new(&k, coeffs).unwrap(), r, n)
}
