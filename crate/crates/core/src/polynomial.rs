//! Polynomials over a hyperfield: evaluation, roots, quotients by linear
//! factors, multiplicities, and the set-valued sum and product of
//! polynomials.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperfield::{Element, HyperSet, Hyperfield, InstanceId, Value};

/// Coefficients `c_0..c_n` in ascending degree. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    instance: InstanceId,
    coeffs: Vec<Element>,
}

impl Poly {
    pub fn new(f: &Hyperfield, mut coeffs: Vec<Element>) -> Result<Poly> {
        for c in &coeffs {
            f.check(c)?;
        }
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        Ok(Poly {
            instance: f.id(),
            coeffs,
        })
    }

    pub fn from_values(f: &Hyperfield, values: Vec<Value>) -> Result<Poly> {
        let coeffs = values.into_iter().map(|v| f.element(v)).collect::<Result<_>>()?;
        Poly::new(f, coeffs)
    }

    pub fn zero(f: &Hyperfield) -> Poly {
        Poly {
            instance: f.id(),
            coeffs: Vec::new(),
        }
    }

    /// `T - a`.
    pub fn linear(f: &Hyperfield, a: &Element) -> Result<Poly> {
        Poly::new(f, vec![f.neg(a)?, f.one()])
    }

    pub fn instance(&self) -> InstanceId {
        self.instance
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Element> {
        self.coeffs.last()
    }

    /// Coefficient of `T^i`, zero past the degree.
    pub fn coeff(&self, f: &Hyperfield, i: usize) -> Element {
        self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn require_nonzero(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPolynomial)
    }
}

/// Comma-separated coefficients, `c_0` first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_poly(f: &Hyperfield, p: &Poly) -> Result<()> {
    if p.instance != f.id() {
        return Err(Error::InstanceMismatch {
            expected: f.id(),
            found: p.instance,
        });
    }
    Ok(())
}

fn require_finite_sums(f: &Hyperfield, what: &str) -> Result<()> {
    if f.has_finite_sums() {
        Ok(())
    } else {
        Err(Error::NonEnumerable(format!("{what} over {}", f.spec())))
    }
}

/// `⊞_i c_i a^i`.
pub fn eval_hyperset(f: &Hyperfield, p: &Poly, a: &Element) -> Result<HyperSet> {
    check_poly(f, p)?;
    f.check(a)?;
    let mut terms = Vec::with_capacity(p.coeffs.len());
    let mut power = f.one();
    for c in &p.coeffs {
        terms.push(f.mul(c, &power)?);
        power = f.mul(&power, a)?;
    }
    f.hypersum(&terms)
}

pub fn is_root(f: &Hyperfield, p: &Poly, a: &Element) -> Result<bool> {
    p.require_nonzero()?;
    Ok(eval_hyperset(f, p, a)?.contains_zero())
}

/// Every `q` with `p ∈ (T - a) q`, sorted.
pub fn quotients(f: &Hyperfield, p: &Poly, a: &Element) -> Result<Vec<Poly>> {
    check_poly(f, p)?;
    f.check(a)?;
    require_finite_sums(f, "quotient enumeration")?;
    let n = p.require_nonzero()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let c = &p.coeffs;
    if a.is_zero() {
        if !c[0].is_zero() {
            return Ok(Vec::new());
        }
        return Ok(vec![Poly::new(f, c[1..].to_vec())?]);
    }

    // Coefficient i of (T - a)q is d_{i-1} ⊞ -a d_i, and by reversibility
    // c_i lies there exactly when d_{i-1} ∈ c_i ⊞ a d_i.
    let mut out = BTreeSet::new();
    let mut d = vec![f.zero(); n];
    d[n - 1] = c[n].clone();
    descend(f, c, a, n - 1, &mut d, &mut out)?;
    Ok(out.into_iter().collect())
}

fn descend(
    f: &Hyperfield,
    c: &[Element],
    a: &Element,
    i: usize,
    d: &mut Vec<Element>,
    out: &mut BTreeSet<Poly>,
) -> Result<()> {
    if i == 0 {
        if c[0] == f.neg(&f.mul(a, &d[0])?)? {
            out.insert(Poly::new(f, d.clone())?);
        }
        return Ok(());
    }
    let choices = f.hyperadd(&c[i], &f.mul(a, &d[i])?)?;
    for x in choices.enumerate()? {
        d[i - 1] = x.clone();
        descend(f, c, a, i - 1, d, out)?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Maximum over all quotient chains.
    Recursive,
    /// Sign changes of the coefficient sequence.
    SignChanges,
    /// Horizontal length of a Newton polygon segment.
    NewtonPolygon,
    /// Index of the lowest nonzero coefficient.
    ZeroOrder,
}

/// A multiplicity together with a chain `q_1, ..., q_m` such that
/// `p ∈ (T - a) q_1` and `q_k ∈ (T - a) q_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultReport {
    #[serde(serialize_with = "display_str")]
    pub element: Element,
    pub multiplicity: usize,
    pub method: Method,
    pub chain: Vec<Poly>,
}

fn display_str<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Memoizes the recursive multiplicity across calls on one hyperfield.
pub struct MultSolver<'a> {
    field: &'a Hyperfield,
    memo: HashMap<(Poly, Element), (usize, Option<Poly>)>,
}

impl<'a> MultSolver<'a> {
    pub fn new(field: &'a Hyperfield) -> Self {
        MultSolver {
            field,
            memo: HashMap::new(),
        }
    }

    pub fn multiplicity(&mut self, p: &Poly, a: &Element) -> Result<MultReport> {
        let f = self.field;
        check_poly(f, p)?;
        f.check(a)?;
        p.require_nonzero()?;
        if f.is_tropical() {
            return crate::tropical::mult_tropical(f, p, a);
        }
        if a.is_zero() {
            return zero_order(f, p, a);
        }
        if !f.has_finite_sums() {
            return Err(Error::Unsupported(format!(
                "multiplicity at a nonzero element over {}",
                f.spec()
            )));
        }
        let m = self.recurse(p, a)?;
        let mut chain = Vec::with_capacity(m);
        let mut cur = p.clone();
        while let Some((_, Some(next))) = self.memo.get(&(cur.clone(), a.clone())) {
            chain.push(next.clone());
            cur = next.clone();
        }
        if chain.len() != m {
            return Err(Error::Internal("witness chain length differs from multiplicity".into()));
        }
        Ok(MultReport {
            element: a.clone(),
            multiplicity: m,
            method: Method::Recursive,
            chain,
        })
    }

    fn recurse(&mut self, p: &Poly, a: &Element) -> Result<usize> {
        let key = (p.clone(), a.clone());
        if let Some((m, _)) = self.memo.get(&key) {
            return Ok(*m);
        }
        let mut best = (0, None);
        for q in quotients(self.field, p, a)? {
            let m = 1 + self.recurse(&q, a)?;
            if m > best.0 {
                best = (m, Some(q));
            }
        }
        let m = best.0;
        self.memo.insert(key, best);
        Ok(m)
    }
}

fn zero_order(f: &Hyperfield, p: &Poly, a: &Element) -> Result<MultReport> {
    let r = p.order().ok_or(Error::ZeroPolynomial)?;
    let chain = (1..=r)
        .map(|k| Poly::new(f, p.coeffs[k..].to_vec()))
        .collect::<Result<_>>()?;
    Ok(MultReport {
        element: a.clone(),
        multiplicity: r,
        method: Method::ZeroOrder,
        chain,
    })
}

/// `mult_a(p)`; see [`MultSolver`] to share the memo table between calls.
pub fn multiplicity(f: &Hyperfield, p: &Poly, a: &Element) -> Result<MultReport> {
    MultSolver::new(f).multiplicity(p, a)
}

fn cartesian(f: &Hyperfield, sets: Vec<HyperSet>) -> Result<Vec<Poly>> {
    let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
    for s in &sets {
        let items = s.enumerate()?;
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    let polys: BTreeSet<Poly> = acc.into_iter().map(|c| Poly::new(f, c)).collect::<Result<_>>()?;
    Ok(polys.into_iter().collect())
}

/// `p ⊞ q = {Σ e_i T^i : e_i ∈ c_i ⊞ d_i}`.
pub fn hyper_add_poly(f: &Hyperfield, p: &Poly, q: &Poly) -> Result<Vec<Poly>> {
    check_poly(f, p)?;
    check_poly(f, q)?;
    require_finite_sums(f, "polynomial hyperaddition")?;
    let n = p.coeffs.len().max(q.coeffs.len());
    let sets = (0..n)
        .map(|i| f.hyperadd(&p.coeff(f, i), &q.coeff(f, i)))
        .collect::<Result<_>>()?;
    cartesian(f, sets)
}

/// Coefficient sets of `p ⊡ q`: `e_i ∈ ⊞_{k+l=i} c_k d_l`.
pub fn product_coefficients(f: &Hyperfield, p: &Poly, q: &Poly) -> Result<Vec<HyperSet>> {
    check_poly(f, p)?;
    check_poly(f, q)?;
    if p.is_zero() || q.is_zero() {
        return Ok(Vec::new());
    }
    let n = p.coeffs.len() + q.coeffs.len() - 1;
    (0..n)
        .map(|i| {
            let terms = (0..=i)
                .filter(|&k| k < p.coeffs.len() && i - k < q.coeffs.len())
                .map(|k| f.mul(&p.coeffs[k], &q.coeffs[i - k]))
                .collect::<Result<Vec<_>>>()?;
            f.hypersum(&terms)
        })
        .collect()
}

pub fn hyper_mul_poly(f: &Hyperfield, p: &Poly, q: &Poly) -> Result<Vec<Poly>> {
    require_finite_sums(f, "polynomial hypermultiplication")?;
    let sets = product_coefficients(f, p, q)?;
    if sets.is_empty() {
        return Ok(vec![Poly::zero(f)]);
    }
    cartesian(f, sets)
}

/// Decides `r ∈ p ⊡ q` coefficient by coefficient; works for every instance.
pub fn product_contains(f: &Hyperfield, p: &Poly, q: &Poly, r: &Poly) -> Result<bool> {
    check_poly(f, r)?;
    let sets = product_coefficients(f, p, q)?;
    if r.coeffs.len() > sets.len() {
        return Ok(false);
    }
    for (i, s) in sets.iter().enumerate() {
        if !s.contains(&r.coeff(f, i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Association order for an iterated hyperproduct, over 1-based factor indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocTree {
    Leaf(usize),
    Node(Vec<AssocTree>),
}

impl AssocTree {
    /// Left-to-right association `((1 2) 3) ...`.
    pub fn left(n: usize) -> AssocTree {
        AssocTree::Node((1..=n).map(AssocTree::Leaf).collect())
    }

    /// Parses nested parentheses such as `((1 2) 3)`; separators are
    /// whitespace or commas.
    pub fn parse(text: &str) -> Result<AssocTree> {
        let spaced = text.replace('(', " ( ").replace(')', " ) ").replace(',', " ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let mut pos = 0;
        let tree = parse_tree(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::parse(format!("trailing input in association tree {text:?}")));
        }
        Ok(tree)
    }

    fn leaves(&self, out: &mut Vec<usize>) {
        match self {
            AssocTree::Leaf(i) => out.push(*i),
            AssocTree::Node(children) => children.iter().for_each(|c| c.leaves(out)),
        }
    }

    /// Every index in `1..=n` must occur exactly once.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = Vec::new();
        self.leaves(&mut seen);
        seen.sort();
        if seen != (1..=n).collect::<Vec<_>>() {
            return Err(Error::parse(format!(
                "association tree must use each of the factor indices 1..={n} exactly once"
            )));
        }
        Ok(())
    }
}

fn parse_tree(tokens: &[&str], pos: &mut usize) -> Result<AssocTree> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::parse("unexpected end of association tree"))?;
    *pos += 1;
    match *tok {
        "(" => {
            let mut children = Vec::new();
            while tokens.get(*pos) != Some(&")") {
                if *pos >= tokens.len() {
                    return Err(Error::parse("unclosed parenthesis in association tree"));
                }
                children.push(parse_tree(tokens, pos)?);
            }
            *pos += 1;
            if children.is_empty() {
                return Err(Error::parse("empty group in association tree"));
            }
            Ok(AssocTree::Node(children))
        }
        ")" => Err(Error::parse("unexpected ')' in association tree")),
        t => t
            .parse::<usize>()
            .map(AssocTree::Leaf)
            .map_err(|_| Error::parse(format!("bad factor index {t:?}"))),
    }
}

/// The hyperproduct of `factors` under the given association; each group is
/// folded left to right.
pub fn hyper_product(f: &Hyperfield, factors: &[Poly], tree: &AssocTree) -> Result<Vec<Poly>> {
    tree.validate(factors.len())?;
    eval_tree(f, factors, tree)
}

fn eval_tree(f: &Hyperfield, factors: &[Poly], tree: &AssocTree) -> Result<Vec<Poly>> {
    match tree {
        AssocTree::Leaf(i) => {
            let p = &factors[i - 1];
            check_poly(f, p)?;
            Ok(vec![p.clone()])
        }
        AssocTree::Node(children) => {
            let mut acc = eval_tree(f, factors, &children[0])?;
            for child in &children[1..] {
                let rhs = eval_tree(f, factors, child)?;
                let mut next = BTreeSet::new();
                for a in &acc {
                    for b in &rhs {
                        next.extend(hyper_mul_poly(f, a, b)?);
                    }
                }
                acc = next.into_iter().collect();
            }
            Ok(acc)
        }
    }
}
