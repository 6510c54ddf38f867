//! Euler characteristics on a degree lattice and alternating intersection sums.
//!
//! A [`ChiFunction`] is any exact functional on integer `m`-tuples; on `P^n`
//! the class of `O(d)` is the 1-tuple `(d)` and `chi(O(d))` is the binomial
//! polynomial returned by [`chi_projective`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// A point of the degree lattice, i.e. the class of a line bundle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(arity: usize) -> Self {
        DegreeVector(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: i64) -> DegreeVector {
        DegreeVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(v: Vec<i64>) -> Self {
        DegreeVector(v)
    }
}

type ChiFn = dyn Fn(&[i64]) -> Rational + Send + Sync;

/// An Euler-characteristic functional on `m`-tuples of integers.
#[derive(Clone)]
pub struct ChiFunction {
    arity: usize,
    eval: Arc<ChiFn>,
}

impl fmt::Debug for ChiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChiFunction")
            .field("arity", &self.arity)
            .finish()
    }
}

impl ChiFunction {
    pub fn new<F>(arity: usize, f: F) -> Self
    where
        F: Fn(&[i64]) -> Rational + Send + Sync + 'static,
    {
        ChiFunction {
            arity,
            eval: Arc::new(f),
        }
    }

    /// `d -> chi(O(d))` on `P^n`, arity 1.
    pub fn projective(n: u32) -> Self {
        Self::new(1, move |t| chi_projective(n, t[0]))
    }

    /// Product of projective spaces `P^{n_1} x ... x P^{n_m}`: the Euler
    /// characteristic of `O(d_1, ..., d_m)` is the product of the factors.
    pub fn projective_product(dims: Vec<u32>) -> Self {
        let arity = dims.len();
        Self::new(arity, move |t| {
            dims.iter()
                .zip(t)
                .map(|(&n, &d)| chi_projective(n, d))
                .product()
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn evaluate(&self, t: &DegreeVector) -> Result<Rational> {
        self.check(t)?;
        Ok((self.eval)(&t.0))
    }

    fn check(&self, t: &DegreeVector) -> Result<()> {
        if t.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: t.arity(),
            });
        }
        Ok(())
    }
}

/// `chi(O_{P^n}(d)) = (d+1)(d+2)...(d+n) / n!`, valid for every integer `d`.
pub fn chi_projective(n: u32, d: i64) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 1..=i64::from(n) {
        num *= BigInt::from(d + k);
        den *= BigInt::from(k);
    }
    Rational::new(num, den)
}

/// The alternating sum
/// `(-1)^p chi(0) + sum_{k=1..p} (-1)^{p-k} sum_{i_1<...<i_k} chi(c_{i_1}+...+c_{i_k})`.
///
/// Subsets are enumerated with a binary counter, so `classes` must hold fewer
/// than 64 entries (the cost is `2^p` evaluations anyway).
pub fn intersection_number(chi: &ChiFunction, classes: &[DegreeVector]) -> Result<Rational> {
    for c in classes {
        chi.check(c)?;
    }
    let p = classes.len();
    assert!(p < 64, "too many classes for subset enumeration");
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << p) {
        let mut point = DegreeVector::zero(chi.arity());
        let mut size = 0;
        for (i, c) in classes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                point = point.add(c);
                size += 1;
            }
        }
        let value = (chi.eval)(&point.0);
        if (p - size).is_multiple_of(2) {
            total += value;
        } else {
            total -= value;
        }
    }
    Ok(total)
}

/// Length of `k[x_1..x_n]/(x_1^{d_1}, ..., x_n^{d_n})`, counted by walking the
/// staircase `0 <= a_i < d_i` point by point.
pub fn koszul_length(degrees: &[u32]) -> u64 {
    if degrees.contains(&0) {
        return 0;
    }
    let mut alpha = vec![0u32; degrees.len()];
    let mut count = 0u64;
    'walk: loop {
        count += 1;
        for (a, &d) in alpha.iter_mut().zip(degrees) {
            *a += 1;
            if *a < d {
                continue 'walk;
            }
            *a = 0;
        }
        return count;
    }
}

/// `t -> chi(t + direction) - chi(t)`.
pub fn difference_operator(chi: &ChiFunction, direction: &DegreeVector) -> Result<ChiFunction> {
    chi.check(direction)?;
    let inner = chi.eval.clone();
    let dir = direction.0.clone();
    Ok(ChiFunction::new(chi.arity, move |t| {
        let shifted: Vec<i64> = t.iter().zip(&dir).map(|(a, b)| a + b).collect();
        inner(&shifted) - inner(t)
    }))
}
