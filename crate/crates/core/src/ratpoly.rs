//! Dense univariate polynomials over Q with exact arithmetic: division,
//! gcd, squarefree decomposition and Sturm sequences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hyperfield::{Element, Hyperfield, Value};
use crate::polynomial::Poly;
use crate::rational::{format_rational, int, sign_of, Rational};

/// Coefficients `c_0..c_n`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly(Vec<Rational>);

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    /// `T - r`.
    pub fn linear(r: &Rational) -> Self {
        RatPoly::new(vec![-r.clone(), Rational::one()])
    }

    /// `lc · ∏ (T - r)`.
    pub fn from_roots(lc: &Rational, roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(RatPoly::constant(lc.clone()), |acc, r| &acc * &RatPoly::linear(r))
    }

    /// Reads a polynomial over Q.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                c.as_rational()
                    .cloned()
                    .ok_or_else(|| Error::domain(format!("{c} is not a rational coefficient")))
            })
            .collect::<Result<_>>()?;
        Ok(RatPoly::new(coeffs))
    }

    pub fn to_poly(&self, q: &Hyperfield) -> Result<Poly> {
        Poly::from_values(q, self.0.iter().cloned().map(Value::Rational).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RatPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `p(-T)`.
    pub fn substitute_neg(&self) -> Self {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// `p / T^k` where `k` is the order.
    pub fn strip_zero_roots(&self) -> (usize, Self) {
        let k = self.order().unwrap_or(0);
        (k, RatPoly::new(self.0[k..].to_vec()))
    }

    pub fn divrem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dn = d.degree().ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lc = d.leading().unwrap().clone();
        let mut rem = self.0.clone();
        let Some(n) = self.degree().filter(|&n| n >= dn) else {
            return Ok((RatPoly::default(), self.clone()));
        };
        let mut quo = vec![Rational::zero(); n - dn + 1];
        for k in (0..=n - dn).rev() {
            let c = &rem[k + dn] / &lc;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quo[k] = c;
        }
        Ok((RatPoly::new(quo), RatPoly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("b is nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: monic squarefree `f_1, f_2, ...` with
    /// `p = lc(p) · ∏ f_i^i`. Entry `i - 1` holds `f_i`.
    pub fn squarefree(&self) -> Vec<RatPoly> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.divrem(&a).unwrap().0;
        let mut c = df.divrem(&a).unwrap().0;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        loop {
            a = b.gcd(&d);
            out.push(a.clone());
            b = b.divrem(&a).unwrap().0;
            if b.degree() == Some(0) {
                break;
            }
            c = d.divrem(&a).unwrap().0;
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|g| g.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    pub fn sturm_chain(&self) -> Result<SturmChain> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].divrem(&chain[n - 1])?.1;
            chain.push(-&r);
        }
        chain.pop();
        Ok(SturmChain(chain))
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let nz: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `p_0 = p`, `p_1 = p'`, `p_{i+1} = -rem(p_{i-1}, p_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain(pub Vec<RatPoly>);

impl SturmChain {
    /// Variations at `0+`: each entry takes the sign of its lowest nonzero
    /// coefficient.
    pub fn variations_at_zero_plus(&self) -> usize {
        sign_variations(
            self.0
                .iter()
                .map(|p| p.order().map_or(0, |k| sign_of(&p.0[k]))),
        )
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        sign_variations(self.0.iter().map(|p| p.leading().map_or(0, sign_of)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        sign_variations(self.0.iter().map(|p| {
            let s = p.leading().map_or(0, sign_of);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(0, ∞)` of a squarefree polynomial.
    pub fn positive_roots(&self) -> usize {
        self.variations_at_zero_plus() - self.variations_at_pos_inf()
    }

    /// Distinct real roots of a squarefree polynomial.
    pub fn real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.0.len().max(rhs.0.len());
        let z = Rational::zero();
        RatPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + rhs.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The coefficientwise image of `p` in the sign hyperfield.
pub fn sign_image(p: &RatPoly) -> Poly {
    let s = Hyperfield::sign();
    Poly::new(&s, p.0.iter().map(|c| Element::sign(sign_of(c))).collect()).expect("sign elements")
}

/// Multiplicity of `r` as a root, by repeated exact division.
pub fn classical_multiplicity(p: &RatPoly, r: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lin = RatPoly::linear(r);
    let mut cur = p.clone();
    let mut m = 0;
    loop {
        let (q, rem) = cur.divrem(&lin)?;
        if !rem.is_zero() {
            return Ok(m);
        }
        cur = q;
        m += 1;
    }
}
