//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] has a fixed number of variables `x0 .. x{n-1}` and stores
//! its nonzero terms in a map keyed by [`Monomial`], ordered by grevlex.
//! Display order is descending grevlex, which is also the order the text
//! printer uses, so serialization is deterministic.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use monomial::Monomial;
pub use parse::parse_polynomial;

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`, reduced.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Result of [`Polynomial::homogeneous_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Degree(u32),
    NotHomogeneous,
    /// The zero polynomial, homogeneous of every degree.
    ZeroPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(Monomial::one(n_vars), c);
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Rational::one())
    }

    /// The variable `x_i`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        Self::term(Monomial::var(n_vars, i, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.n_vars());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(n_vars);
        for (m, c) in terms {
            assert_eq!(m.n_vars(), n_vars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest monomial in grevlex with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::ArityMismatch {
                left: self.n_vars,
                right: other.n_vars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.n_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by a single monomial.
    pub fn shift(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.n_vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::ZeroPoly,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::NotHomogeneous
                }
            }
        }
    }

    /// Substitutes `x_i = 0`; the variable count is unchanged.
    pub fn restrict_to_hyperplane(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        Ok(Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[i] == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Substitutes `x_i = 1` and removes the variable, renumbering the ones
    /// after it.
    pub fn dehomogenize(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        Ok(Polynomial::from_terms(
            self.n_vars - 1,
            self.terms.iter().map(|(m, c)| (m.drop_var(i), c.clone())),
        ))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n_vars,
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n_vars {
            return Err(Error::ArityMismatch {
                left: self.n_vars,
                right: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Canonical text form, accepted back by [`parse_polynomial`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    /// Parses with the smallest variable count that fits the text.
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_with_inferred_arity(s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&p("x0", 1) + &p("-x0", 1)).is_zero());
        assert_eq!(&p("x0+x1", 2) * &p("x0-x1", 2), p("x0^2 - x1^2", 2));
        assert_eq!(p("x0+1", 1).pow(0), Polynomial::one(1));
        assert_eq!(p("x0+1", 1).pow(3), p("x0^3 + 3*x0^2 + 3*x0 + 1", 1));
        assert_eq!(
            p("x0", 1).checked_add(&p("x0", 2)),
            Err(Error::ArityMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn homogeneity() {
        assert_eq!(
            p("x0^2+x1^2", 2).homogeneous_degree(),
            Homogeneity::Degree(2)
        );
        assert_eq!(
            p("x0^2+x1", 2).homogeneous_degree(),
            Homogeneity::NotHomogeneous
        );
        assert_eq!(
            Polynomial::zero(2).homogeneous_degree(),
            Homogeneity::ZeroPoly
        );
    }

    #[test]
    fn hyperplane_restriction() {
        let f = p("x0^2 + x0*x2 + x2^2", 3);
        assert_eq!(f.restrict_to_hyperplane(2).unwrap(), p("x0^2", 3));
        assert_eq!(
            p("x0+x1", 3).restrict_to_hyperplane(2).unwrap(),
            p("x0+x1", 3)
        );
        assert!(p("x2^3", 3).restrict_to_hyperplane(2).unwrap().is_zero());
        assert_eq!(
            f.restrict_to_hyperplane(3),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        );
    }

    #[test]
    fn dehomogenization() {
        let f = p("x0^2 + x0*x1 + x1^2", 2);
        assert_eq!(f.dehomogenize(1).unwrap(), p("x0^2 + x0 + 1", 1));
        assert_eq!(p("x1^3", 2).dehomogenize(1).unwrap(), Polynomial::one(1));
        assert!(Polynomial::zero(1).dehomogenize(0).unwrap().is_zero());
        assert_eq!(Polynomial::zero(1).dehomogenize(0).unwrap().n_vars(), 0);
    }

    #[test]
    fn display_is_descending_grevlex() {
        let f = p("x1^2 - 1/2 + x0*x1 + 3*x0^2", 2);
        assert_eq!(f.to_text(), "3*x0^2 + x0*x1 + x1^2 - 1/2");
        assert_eq!(p("-x0 + x1", 2).to_text(), "-x0 + x1");
    }

    #[test]
    fn evaluation() {
        let f = p("x0^2 - 2*x1", 2);
        assert_eq!(f.evaluate(&[rat(3), ratio(1, 2)]).unwrap(), rat(8));
    }
}
