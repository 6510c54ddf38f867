//! Buchberger's algorithm, normal forms and zero-dimensional quotient algebras.
//!
//! The norm of an element of a finite algebra `A = k[x]/I` is the determinant
//! of multiplication by that element on `A`, written on the staircase basis
//! of a reduced Gröbner basis of `I`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix};
use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
        }
    }

    pub fn leading_term(self, p: &Polynomial) -> Option<(Monomial, Rational)> {
        match self {
            MonomialOrder::Grevlex => p.leading_term().map(|(m, c)| (m.clone(), c.clone())),
            MonomialOrder::Lex => p
                .terms()
                .max_by(|x, y| x.0.cmp_lex(y.0))
                .map(|(m, c)| (m.clone(), c.clone())),
        }
    }
}

/// Reduced Gröbner basis: monic, pairwise reduced, sorted by decreasing
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    n_vars: usize,
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// The ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }
}

fn monic(p: &Polynomial, order: MonomialOrder) -> Polynomial {
    match order.leading_term(p) {
        Some((_, c)) if !c.is_one() => p.scale(&(Rational::one() / c)),
        _ => p.clone(),
    }
}

/// Full reduction of `p` by `basis` (whose leading terms are `leading`).
fn reduce(
    p: &Polynomial,
    basis: &[Polynomial],
    leading: &[Monomial],
    order: MonomialOrder,
) -> Polynomial {
    let n = p.n_vars();
    let mut rest = p.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = order.leading_term(&rest) {
        let divisor = leading.iter().position(|lm| lm.divides(&m));
        match divisor {
            Some(k) => {
                let (_, lc) = order.leading_term(&basis[k]).expect("nonzero generator");
                let q = m.div(&leading[k]).expect("divides");
                let sub = basis[k].shift(&q).scale(&(c / lc));
                rest = &rest - &sub;
            }
            None => {
                let t = Polynomial::term(m, c);
                rest = &rest - &t;
                remainder.push(t);
            }
        }
    }
    remainder
        .iter()
        .fold(Polynomial::zero(n), |acc, t| &acc + t)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (mf, cf) = order.leading_term(f).expect("nonzero");
    let (mg, cg) = order.leading_term(g).expect("nonzero");
    let l = mf.lcm(&mg);
    let a = f
        .shift(&l.div(&mf).expect("lcm"))
        .scale(&(Rational::one() / cf));
    let b = g
        .shift(&l.div(&mg).expect("lcm"))
        .scale(&(Rational::one() / cg));
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed lowest lcm degree first (ties broken by the monomial
/// order, then by index) and pruned with the coprime and chain criteria.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let n_vars = gens.first().map_or(0, Polynomial::n_vars);
    if let Some(g) = gens.iter().find(|g| g.n_vars() != n_vars) {
        return Err(Error::ArityMismatch {
            left: n_vars,
            right: g.n_vars(),
        });
    }

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |p: Polynomial,
                basis: &mut Vec<Polynomial>,
                leading: &mut Vec<Monomial>,
                pending: &mut BTreeSet<(usize, usize)>| {
        let p = monic(&p, order);
        let (lm, _) = order.leading_term(&p).expect("nonzero");
        let k = basis.len();
        for i in 0..k {
            pending.insert((i, k));
        }
        basis.push(p);
        leading.push(lm);
    };

    for g in gens {
        let r = reduce(g, &basis, &leading, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leading, &mut pending);
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = leading[a.0].lcm(&leading[a.1]);
        let lb = leading[b.0].lcm(&leading[b.1]);
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| order.cmp(&la, &lb))
            .then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        if leading[i].is_coprime(&leading[j]) {
            continue;
        }
        let l = leading[i].lcm(&leading[j]);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading[k].divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, &leading, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leading, &mut pending);
        }
    }

    Ok(reduce_basis(basis, n_vars, order))
}

/// Minimal, interreduced, monic, sorted.
fn reduce_basis(basis: Vec<Polynomial>, n_vars: usize, order: MonomialOrder) -> GroebnerBasis {
    let mut items: Vec<(Monomial, Polynomial)> = basis
        .into_iter()
        .map(|p| (order.leading_term(&p).expect("nonzero").0, p))
        .collect();
    items.sort_by(|a, b| order.cmp(&a.0, &b.0));
    let mut minimal: Vec<(Monomial, Polynomial)> = Vec::new();
    for (m, p) in items {
        if !minimal.iter().any(|(lm, _)| lm.divides(&m)) {
            minimal.push((m, p));
        }
    }
    let mut generators = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (others, others_lm): (Vec<Polynomial>, Vec<Monomial>) = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, (m, p))| (p.clone(), m.clone()))
            .unzip();
        let (lm, p) = &minimal[k];
        let (_, lc) = order.leading_term(p).expect("nonzero");
        let tail =
            &p.scale(&(Rational::one() / lc)) - &Polynomial::term(lm.clone(), Rational::one());
        let tail = reduce(&tail, &others, &others_lm, order);
        generators.push((
            lm.clone(),
            &tail + &Polynomial::term(lm.clone(), Rational::one()),
        ));
    }
    generators.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let (leading, generators) = generators.into_iter().unzip();
    GroebnerBasis {
        order,
        n_vars,
        generators,
        leading,
    }
}

/// The unique remainder of `p` modulo the ideal.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if p.n_vars() != gb.n_vars {
        return Err(Error::ArityMismatch {
            left: gb.n_vars,
            right: p.n_vars(),
        });
    }
    Ok(reduce(p, &gb.generators, &gb.leading, gb.order))
}

/// Standard monomials, ascending in the basis order.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let n = gb.n_vars;
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let pure = gb
            .leading
            .iter()
            .filter(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(k, &e)| k == i || e == 0)
            })
            .map(|m| m.exponents()[i])
            .min();
        match pure {
            Some(e) => bounds.push(e),
            None => return Err(Error::NotZeroDimensional { variable: i }),
        }
    }
    if gb.is_unit_ideal() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    'walk: loop {
        let m = Monomial::new(e.clone());
        if !gb.leading.iter().any(|lm| lm.divides(&m)) {
            out.push(m);
        }
        for (a, &b) in e.iter_mut().zip(&bounds) {
            *a += 1;
            if *a < b {
                continue 'walk;
            }
            *a = 0;
        }
        break;
    }
    out.sort_by(|a, b| gb.order.cmp(a, b));
    Ok(out)
}

/// `k[x]/I` for a zero-dimensional ideal `I`, with its staircase basis and the
/// multiplication matrix of every variable.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    mult_tables: Vec<Matrix>,
}

impl QuotientAlgebra {
    pub fn new(gb: GroebnerBasis) -> Result<Self> {
        let basis = quotient_basis(&gb)?;
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut alg = QuotientAlgebra {
            gb,
            basis,
            index,
            mult_tables: Vec::new(),
        };
        alg.mult_tables = (0..alg.gb.n_vars)
            .map(|i| alg.multiplication_matrix(&Polynomial::var(alg.gb.n_vars, i)))
            .collect::<Result<_>>()?;
        Ok(alg)
    }

    /// Gröbner basis of `gens` under `order`, then the quotient.
    pub fn from_generators(gens: &[Polynomial], order: MonomialOrder) -> Result<Self> {
        Self::new(buchberger(gens, order)?)
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Multiplication by `x_i`.
    pub fn mult_table(&self, i: usize) -> &Matrix {
        &self.mult_tables[i]
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        normal_form(p, &self.gb)
    }

    /// Coordinates of the normal form of `p` on the staircase basis.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let r = self.normal_form(p)?;
        let mut v = vec![Rational::zero(); self.basis.len()];
        for (m, c) in r.terms() {
            let k = self.index[m];
            v[k] = c.clone();
        }
        Ok(v)
    }

    /// Matrix of `b -> p*b`; column `k` holds the coordinates of `p * basis[k]`.
    pub fn multiplication_matrix(&self, p: &Polynomial) -> Result<Matrix> {
        let d = self.basis.len();
        let mut m = Matrix::zeros(d, d);
        for (k, b) in self.basis.iter().enumerate() {
            let col = self.coordinates(&p.shift(b))?;
            for (i, c) in col.into_iter().enumerate() {
                m[(i, k)] = c;
            }
        }
        Ok(m)
    }

    /// Determinant of multiplication by `p`.
    pub fn norm(&self, p: &Polynomial) -> Result<Rational> {
        determinant(&self.multiplication_matrix(p)?)
    }
}
