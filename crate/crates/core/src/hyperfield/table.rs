use std::collections::HashMap;

use super::element::Value;
use crate::error::{Error, Result};

/// Bit mask over carrier indices; carriers hold at most 128 elements.
pub type Mask = u128;

pub const MAX_CARRIER: usize = 128;

/// Dense operation tables of a finite hyperfield, indexed by carrier position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTable {
    elements: Vec<Value>,
    index: HashMap<Value, usize>,
    zero: usize,
    one: usize,
    sum: Vec<Vec<Mask>>,
    mul: Vec<Vec<usize>>,
}

impl FiniteTable {
    /// Builds the tables by evaluating `add` and `mul` on all index pairs.
    pub fn from_fn(
        elements: Vec<Value>,
        add: impl Fn(usize, usize) -> Vec<usize>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 || n > MAX_CARRIER {
            return Err(Error::domain(format!(
                "finite carrier must have 1..={MAX_CARRIER} elements, got {n}"
            )));
        }
        let index: HashMap<Value, usize> =
            elements.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        if index.len() != n {
            return Err(Error::domain("carrier contains duplicate elements"));
        }
        let zero = elements
            .iter()
            .position(Value::is_zero)
            .ok_or_else(|| Error::domain("carrier has no zero element"))?;
        let mut sum = vec![vec![0; n]; n];
        let mut prod = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                sum[a][b] = add(a, b).into_iter().fold(0, |m, i| m | (1 << i));
                prod[a][b] = mul(a, b);
            }
        }
        // The unit is the nonzero element acting as identity on everything.
        let one = (0..n)
            .filter(|&u| u != zero)
            .find(|&u| (0..n).all(|x| prod[u][x] == x))
            .ok_or_else(|| Error::domain("multiplication has no identity"))?;
        Ok(FiniteTable {
            elements,
            index,
            zero,
            one,
            sum,
            mul: prod,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Value] {
        &self.elements
    }

    pub fn value(&self, i: usize) -> &Value {
        &self.elements[i]
    }

    pub fn index_of(&self, v: &Value) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn sum(&self, a: usize, b: usize) -> Mask {
        self.sum[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    /// All `x` with `0 ∈ a ⊞ x`.
    pub fn negatives(&self, a: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.sum[a][x] & (1 << self.zero) != 0)
            .collect()
    }

    pub fn neg(&self, a: usize) -> Option<usize> {
        match self.negatives(a).as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&x| x != self.zero && self.mul[a][x] == self.one)
    }

    /// Overwrites the single entry `a ⊞ b` (not `b ⊞ a`).
    pub fn set_sum(&mut self, a: &Value, b: &Value, result: &[Value]) -> Result<()> {
        let look = |v: &Value| {
            self.index_of(v)
                .ok_or_else(|| Error::domain(format!("{v} is not in the carrier")))
        };
        let (ia, ib) = (look(a)?, look(b)?);
        let mut mask = 0;
        for v in result {
            mask |= 1 << look(v)?;
        }
        if mask == 0 {
            return Err(Error::domain("hypersums must be non-empty"));
        }
        self.sum[ia][ib] = mask;
        Ok(())
    }

    pub fn set_product(&mut self, a: &Value, b: &Value, result: &Value) -> Result<()> {
        let look = |v: &Value| {
            self.index_of(v)
                .ok_or_else(|| Error::domain(format!("{v} is not in the carrier")))
        };
        let (ia, ib, ir) = (look(a)?, look(b)?, look(result)?);
        self.mul[ia][ib] = ir;
        Ok(())
    }
}

pub fn mask_indices(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}
