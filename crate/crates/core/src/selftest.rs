//! Seeded property suite.
//!
//! Every property draws from its own ChaCha stream derived from the run seed
//! and its position in [`PROPERTIES`], so results do not depend on which
//! properties are selected or on scheduling. Properties run on scoped threads
//! and the report lists them in table order.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cube::{
    delta, edges, epsilon_ij, glue, graded_exchange_sign, graded_swap_sign, permute, standard_cube,
    CubeArrangement, FormalObject, FormalSum, Side, Symbol,
};
use crate::error::{Error, Result};
use crate::euler::{
    difference_operator, intersection_number, koszul_length, ChiFunction, DegreeVector,
};
use crate::groebner::{MonomialOrder, QuotientAlgebra};
use crate::poly::{rat, Monomial, Polynomial, Rational};
use crate::resultant::{
    linear_coefficient_determinant, macaulay_resultant, permutation_sign, poisson_resultant,
    rational_pow, resultant, resultant_degrees, sylvester_resultant, MacaulaySystem, Mode,
};

/// Random inputs shared by the suite, the acceptance tests and the examples.
pub mod gen {
    use super::*;

    /// `a/b` with `|a| <= max_num` and `1 <= b <= max_den`.
    pub fn rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
        Rational::new(
            rng.gen_range(-max_num..=max_num).into(),
            rng.gen_range(1..=max_den).into(),
        )
    }

    pub fn nonzero_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
        loop {
            let r = rational(rng, max_num, max_den);
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Dense homogeneous form: every monomial of the degree gets a random
    /// nonzero coefficient.
    pub fn form<R: Rng>(rng: &mut R, n_vars: usize, degree: u32) -> Polynomial {
        Polynomial::from_terms(
            n_vars,
            Monomial::all_of_degree(n_vars, degree)
                .into_iter()
                .map(|m| (m, nonzero_rational(rng, 9, 4))),
        )
    }

    /// Dense polynomial of total degree at most `degree`.
    pub fn polynomial<R: Rng>(rng: &mut R, n_vars: usize, degree: u32) -> Polynomial {
        let mut p = Polynomial::zero(n_vars);
        for d in 0..=degree {
            p = &p + &form(rng, n_vars, d);
        }
        p
    }

    pub fn system<R: Rng>(rng: &mut R, degrees: &[u32]) -> MacaulaySystem {
        let n_vars = degrees.len();
        let forms = degrees.iter().map(|&d| form(rng, n_vars, d)).collect();
        MacaulaySystem::new(forms, Some(degrees)).expect("random forms are homogeneous")
    }

    pub fn degrees<R: Rng>(rng: &mut R, count: usize, max: u32) -> Vec<u32> {
        (0..count).map(|_| rng.gen_range(1..=max)).collect()
    }

    /// Random form vanishing at `(1 : 1 : ... : 1)`.
    pub fn form_vanishing_at_ones<R: Rng>(rng: &mut R, n_vars: usize, degree: u32) -> Polynomial {
        loop {
            let f = form(rng, n_vars, degree);
            let at_ones = f.evaluate(&vec![Rational::one(); n_vars]).expect("arity");
            let fix = Polynomial::term(Monomial::var(n_vars, 0, degree), at_ones);
            let g = &f - &fix;
            if !g.is_zero() {
                return g;
            }
        }
    }

    /// Symbol `name` tagged with a 1-dimensional degree.
    pub fn line_bundle(name: &str, degree: i64) -> FormalObject {
        FormalObject::symbol(Symbol::with_degree(name, DegreeVector(vec![degree])))
    }

    /// Random object over the symbols `L0..L3`, each tagged with degree
    /// `index + 1`, with a random grade.
    pub fn object<R: Rng>(rng: &mut R) -> FormalObject {
        let coefficients: Vec<i64> = (0..4).map(|_| rng.gen_range(-2..=2)).collect();
        let terms = coefficients.into_iter().enumerate().map(|(k, c)| {
            (
                Symbol::with_degree(format!("L{k}"), DegreeVector(vec![k as i64 + 1])),
                c,
            )
        });
        FormalObject::from_terms(terms, rng.gen_range(-3..=3))
    }

    pub fn arrangement<R: Rng>(rng: &mut R, dimension: usize) -> CubeArrangement {
        CubeArrangement::from_fn(dimension, |_| object(rng))
    }

    /// Random arrangement whose back face in direction `i` is `back`.
    pub fn arrangement_with_back<R: Rng>(
        rng: &mut R,
        back: &CubeArrangement,
        i: usize,
    ) -> CubeArrangement {
        let front = arrangement(rng, back.dimension());
        CubeArrangement::stack(back, &front, i)
    }

    pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }
}

/// Outcome of one property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// Degenerate instances that were excluded, not counted as checks.
    pub skipped: usize,
    /// First few failure descriptions.
    pub failures: Vec<String>,
}

impl PropertyReport {
    fn new(name: &'static str) -> Self {
        PropertyReport {
            name,
            checked: 0,
            failed: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < 5 {
            self.failures.push(msg);
        }
    }

    /// Like [`guard`](Self::guard), but a degenerate resultant path is
    /// counted as skipped rather than failed.
    fn guard_degenerate<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Err(e) if is_degenerate(&e) => {
                self.skipped += 1;
                None
            }
            r => self.guard(what, r),
        }
    }

    /// Records an unexpected error as a failed check.
    fn guard<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{what}: {} ({e})", e.kind_name()));
                None
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }
}

/// Instances excluded from resultant properties rather than failed.
pub fn is_degenerate(e: &Error) -> bool {
    matches!(
        e,
        Error::DegenerateMinor
            | Error::PoissonPreconditionFailed { .. }
            | Error::BothPathsDegenerate
    )
}

type Property = fn(&mut ChaCha8Rng, &mut PropertyReport);

/// Name and body of every property, in report order.
pub const PROPERTIES: &[(&str, Property)] = &[
    ("bezout", bezout),
    ("vanishing", vanishing),
    ("intersection_symmetry", intersection_symmetry),
    ("sylvester_agreement", sylvester_agreement),
    ("macaulay_poisson_agreement", macaulay_poisson_agreement),
    ("quasi_homogeneity", quasi_homogeneity),
    ("multiplicativity", multiplicativity),
    ("permutation_symmetry", permutation_symmetry),
    ("normalization_and_witnesses", normalization_and_witnesses),
    ("norm_suite", norm_suite),
    ("cube_calculus", cube_calculus),
];

fn property_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs the selected properties (all when `only` is `None`).
pub fn run(seed: u64, only: Option<&[String]>) -> Result<SelftestReport> {
    if let Some(names) = only {
        if let Some(bad) = names
            .iter()
            .find(|n| !PROPERTIES.iter().any(|(p, _)| p == n))
        {
            return Err(Error::InvalidJob(format!("unknown property {bad:?}")));
        }
    }
    let selected: Vec<(usize, &str, Property)> = PROPERTIES
        .iter()
        .enumerate()
        .filter(|(_, (name, _))| only.is_none_or(|o| o.iter().any(|n| n == name)))
        .map(|(i, (name, f))| (i, *name, *f))
        .collect();
    let properties = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&(i, name, f)| {
                s.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(property_seed(seed, i));
                    let mut report = PropertyReport::new(name);
                    f(&mut rng, &mut report);
                    report
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("property panicked"))
            .collect()
    });
    Ok(SelftestReport { seed, properties })
}

fn classes(ds: &[i64]) -> Vec<DegreeVector> {
    ds.iter().map(|&d| DegreeVector(vec![d])).collect()
}

fn bezout(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    for _ in 0..200 {
        let n = rng.gen_range(1..=3u32);
        let ds = gen::degrees(rng, n as usize, 4);
        let chi = ChiFunction::projective(n);
        let cls: Vec<i64> = ds.iter().map(|&d| i64::from(d)).collect();
        let Some(v) = r.guard("intersection", intersection_number(&chi, &classes(&cls))) else {
            continue;
        };
        let product: i64 = cls.iter().product();
        let k = koszul_length(&ds);
        r.check(v == rat(product) && k == product as u64, || {
            format!("P^{n} degrees {ds:?}: intersection {v}, koszul {k}")
        });
    }
}

fn vanishing(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    for _ in 0..200 {
        let n = rng.gen_range(0..=3u32);
        let chi = ChiFunction::projective(n);
        let ds: Vec<i64> = (0..=n).map(|_| rng.gen_range(-5..=5)).collect();
        if let Some(v) = r.guard("intersection", intersection_number(&chi, &classes(&ds))) {
            r.check(v.is_zero(), || format!("P^{n} twists {ds:?}: sum {v}"));
        }
        if n == 0 {
            continue;
        }
        // <L_1..L_{n-1}, L, M> = <.., L> + <.., M> - <.., L (x) M>
        let head = &ds[..n as usize - 1];
        let (l, m) = (ds[n as usize - 1], ds[n as usize]);
        let with = |extra: &[i64]| {
            let mut v = head.to_vec();
            v.extend_from_slice(extra);
            intersection_number(&chi, &classes(&v))
        };
        let parts =
            (|| Ok::<_, Error>((with(&[l, m])?, with(&[l])?, with(&[m])?, with(&[l + m])?)))();
        if let Some((lhs, a, b, c)) = r.guard("bilinearity", parts) {
            r.check(lhs == &(&a + &b) - &c, || {
                format!("P^{n} twists {ds:?}: {lhs} != {a} + {b} - {c}")
            });
            r.check(c == a + b, || {
                format!("P^{n} twists {ds:?}: additivity in the last slot")
            });
        }
    }
}

fn intersection_symmetry(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    for _ in 0..100 {
        let n = rng.gen_range(1..=3u32);
        let chi = ChiFunction::projective(n);
        let p = rng.gen_range(1..=4usize);
        let ds: Vec<i64> = (0..p).map(|_| rng.gen_range(-4..=4)).collect();
        let sigma = gen::permutation(rng, p);
        let permuted: Vec<i64> = sigma.iter().map(|&k| ds[k]).collect();
        let (Some(a), Some(b)) = (
            r.guard("intersection", intersection_number(&chi, &classes(&ds))),
            r.guard(
                "intersection",
                intersection_number(&chi, &classes(&permuted)),
            ),
        ) else {
            continue;
        };
        r.check(a == b, || format!("P^{n} classes {ds:?} vs {permuted:?}"));

        // iterated differences of chi at the origin
        let mut f = chi.clone();
        for &d in &ds {
            f = difference_operator(&f, &DegreeVector(vec![d])).expect("arity 1");
        }
        let at_zero = f.evaluate(&DegreeVector(vec![0])).expect("arity 1");
        r.check(at_zero == a, || {
            format!("P^{n} classes {ds:?}: difference {at_zero} vs {a}")
        });
    }
}

fn sylvester_agreement(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    while r.checked < 100 && r.skipped < 500 {
        let ds = gen::degrees(rng, 2, 4);
        let sys = gen::system(rng, &ds);
        let Some(syl) = r.guard(
            "sylvester",
            sylvester_resultant(&sys.forms()[0], &sys.forms()[1]),
        ) else {
            continue;
        };
        match (macaulay_resultant(&sys), poisson_resultant(&sys)) {
            (Ok(m), Ok(p)) => r.check(m.value == syl && p.value == syl, || {
                format!(
                    "{sys}: sylvester {syl}, macaulay {}, poisson {}",
                    m.value, p.value
                )
            }),
            (Err(e), _) | (_, Err(e)) if is_degenerate(&e) => r.skipped += 1,
            (Err(e), _) | (_, Err(e)) => r.fail(format!("{sys}: {e}")),
        }
    }
}

fn macaulay_poisson_agreement(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    let mut agreed = 0;
    while agreed < 50 && r.checked + r.skipped < 200 {
        let ds = gen::degrees(rng, 3, 3);
        let sys = gen::system(rng, &ds);
        match resultant(&sys, Mode::Crosscheck) {
            Ok(_) => {
                agreed += 1;
                r.check(true, String::new);
            }
            Err(e) if is_degenerate(&e) => r.skipped += 1,
            Err(e) => r.fail(format!("{sys}: {e}")),
        }
    }
    let (skipped, agreed) = (r.skipped, r.checked);
    r.check(skipped < agreed, || {
        format!("degenerate instances are not a minority: {skipped} skipped")
    });
}

fn quasi_homogeneity(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    let mut done = 0;
    while done < 50 && r.skipped < 500 {
        let n = rng.gen_range(1..=2usize);
        let ds = gen::degrees(rng, n + 1, if n == 1 { 3 } else { 2 });
        let sys = gen::system(rng, &ds);
        let Some(base) = r.guard_degenerate("resultant", resultant(&sys, Mode::Auto)) else {
            continue;
        };
        done += 1;
        let ks = resultant_degrees(&ds);
        r.check(base.degrees_certificate == ks, || {
            format!("{sys}: certificate")
        });
        for (i, &k) in ks.iter().enumerate() {
            let lambda = gen::nonzero_rational(rng, 5, 3);
            let scaled = sys
                .with_form(i, sys.forms()[i].scale(&lambda))
                .expect("valid");
            if let Some(v) = r.guard("resultant", resultant(&scaled, Mode::Auto)) {
                let expected = rational_pow(&lambda, k) * &base.value;
                r.check(v.value == expected, || {
                    format!(
                        "{sys}: slot {i}, lambda {lambda}: {} vs {expected}",
                        v.value
                    )
                });
            }
        }
    }
}

fn multiplicativity(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    while r.checked < 50 && r.skipped < 500 {
        let n = rng.gen_range(1..=2usize);
        let n_vars = n + 1;
        let (df, dg) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let f = gen::form(rng, n_vars, df);
        let g = gen::form(rng, n_vars, dg);
        let rest: Vec<Polynomial> = (0..n)
            .map(|_| {
                let d = rng.gen_range(1..=2);
                gen::form(rng, n_vars, d)
            })
            .collect();
        let with_first = |first: Polynomial| {
            let mut forms = vec![first];
            forms.extend(rest.iter().cloned());
            MacaulaySystem::new(forms, None).and_then(|s| resultant(&s, Mode::Auto))
        };
        let fg = &f * &g;
        let results = (|| {
            Ok::<_, Error>((
                with_first(fg)?,
                with_first(f.clone())?,
                with_first(g.clone())?,
            ))
        })();
        if let Some((a, b, c)) = r.guard_degenerate("resultant", results) {
            r.check(a.value == &b.value * &c.value, || {
                format!("f = {f}, g = {g}: {} vs {} * {}", a.value, b.value, c.value)
            });
        }
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Profiles used by the symmetry check.
pub const SYMMETRY_PROFILES: &[&[u32]] = &[
    &[1, 1],
    &[1, 2],
    &[2, 3],
    &[3, 3],
    &[1, 1, 1],
    &[1, 1, 2],
    &[2, 1, 2],
];

fn permutation_symmetry(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    for &profile in SYMMETRY_PROFILES {
        let perms = all_permutations(profile.len());
        let mut signs: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let total_degree: u64 = profile.iter().map(|&d| u64::from(d)).product();
        let mut done = 0;
        let mut attempts = 0;
        while done < 30 && attempts < 300 {
            attempts += 1;
            let sys = gen::system(rng, profile);
            let Some(base) = r.guard_degenerate("resultant", resultant(&sys, Mode::Auto)) else {
                continue;
            };
            if base.value.is_zero() {
                r.skipped += 1;
                continue;
            }
            done += 1;
            for p in &perms {
                let permuted = sys.permuted(p).expect("permutation");
                let Some(v) = r.guard_degenerate("resultant", resultant(&permuted, Mode::Auto))
                else {
                    continue;
                };
                r.check(v.value.abs() == base.value.abs(), || {
                    format!("{sys} permuted by {p:?}: |{}| != |{}|", v.value, base.value)
                });
                let sign = if v.value == base.value { 1 } else { -1 };
                let first = *signs.entry(p.clone()).or_insert(sign);
                r.check(first == sign, || {
                    format!("profile {profile:?} {p:?}: sign varies")
                });
                let expected = if total_degree % 2 == 1 {
                    permutation_sign(p)
                } else {
                    1
                };
                r.check(sign == expected, || {
                    format!("profile {profile:?} {p:?}: sign {sign}, expected {expected}")
                });
                if profile.len() == 2 && p == &[1, 0] {
                    let syl = if (profile[0] * profile[1]) % 2 == 1 {
                        -1
                    } else {
                        1
                    };
                    r.check(sign == syl, || {
                        format!("profile {profile:?}: transposition sign")
                    });
                }
            }
        }
    }
}

fn normalization_and_witnesses(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    for _ in 0..20 {
        let n = rng.gen_range(0..=2usize);
        let ds = gen::degrees(rng, n + 1, 3);
        let sys = MacaulaySystem::monomial(&ds);
        for mode in [Mode::Macaulay, Mode::Poisson] {
            if let Some(v) = r.guard("monomial", resultant(&sys, mode)) {
                r.check(v.value.is_one(), || {
                    format!("monomial {ds:?} via {mode:?}: {}", v.value)
                });
            }
        }
    }
    for _ in 0..20 {
        let n = rng.gen_range(1..=2usize);
        let ds = gen::degrees(rng, n + 1, if n == 1 { 3 } else { 2 });
        let forms = ds
            .iter()
            .map(|&d| gen::form_vanishing_at_ones(rng, n + 1, d))
            .collect();
        let sys = MacaulaySystem::new(forms, Some(&ds)).expect("valid");
        match resultant(&sys, Mode::Auto) {
            Ok(v) => r.check(v.value.is_zero(), || format!("{sys}: {}", v.value)),
            Err(Error::BothPathsDegenerate) => r.skipped += 1,
            Err(e) => r.fail(format!("{sys}: {e}")),
        }
    }
    for _ in 0..20 {
        let n = rng.gen_range(0..=3usize);
        let sys = gen::system(rng, &vec![1; n + 1]);
        let det = linear_coefficient_determinant(sys.forms()).expect("square");
        for mode in [Mode::Macaulay, Mode::Poisson] {
            match resultant(&sys, mode) {
                Ok(v) => r.check(v.value == det, || {
                    format!("{sys} via {mode:?}: {} vs {det}", v.value)
                }),
                Err(Error::PoissonPreconditionFailed { .. }) if det.is_zero() => r.skipped += 1,
                Err(e) => r.fail(format!("{sys} via {mode:?}: {e}")),
            }
        }
    }
}

fn norm_suite(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    let mut done = 0;
    while done < 50 && r.checked + r.skipped < 500 {
        let n_vars = rng.gen_range(1..=2usize);
        let gens: Vec<Polynomial> = (0..n_vars)
            .map(|_| {
                let d = rng.gen_range(1..=3);
                gen::polynomial(rng, n_vars, d)
            })
            .collect();
        let alg = match QuotientAlgebra::from_generators(&gens, MonomialOrder::Grevlex) {
            Ok(a) if a.dimension() > 0 => a,
            Ok(_) | Err(Error::NotZeroDimensional { .. }) => {
                r.skipped += 1;
                continue;
            }
            Err(e) => {
                r.fail(e.to_string());
                continue;
            }
        };
        done += 1;
        let p = gen::polynomial(rng, n_vars, 2);
        let q = gen::polynomial(rng, n_vars, 2);
        let norms = (|| {
            Ok::<_, Error>((
                alg.norm(&Polynomial::one(n_vars))?,
                alg.norm(&p)?,
                alg.norm(&q)?,
                alg.norm(&(&p * &q))?,
            ))
        })();
        if let Some((one, np, nq, npq)) = r.guard("norm", norms) {
            r.check(one.is_one(), || format!("norm(1) = {one}"));
            r.check(npq == &np * &nq, || {
                format!("norm(pq) = {npq}, norm(p) norm(q) = {}", &np * &nq)
            });
        }
        for i in 0..n_vars {
            for j in i + 1..n_vars {
                let (a, b) = (alg.mult_table(i), alg.mult_table(j));
                r.check(a.checked_mul(b).ok() == b.checked_mul(a).ok(), || {
                    format!("x{i}, x{j} tables do not commute")
                });
            }
        }
        // idempotence and linearity of normal forms
        let c = gen::rational(rng, 5, 3);
        let lin = (|| {
            let np = alg.normal_form(&p)?;
            Ok::<_, Error>((
                alg.normal_form(&np)? == np,
                alg.normal_form(&(&p.scale(&c) + &q))? == &np.scale(&c) + &alg.normal_form(&q)?,
            ))
        })();
        if let Some((idem, linear)) = r.guard("normal form", lin) {
            r.check(idem && linear, || {
                "normal form not idempotent/linear".into()
            });
        }
    }
    for _ in 0..20 {
        let n_vars = rng.gen_range(1..=3usize);
        let ds = gen::degrees(rng, n_vars, 4);
        let gens: Vec<Polynomial> = ds
            .iter()
            .enumerate()
            .map(|(i, &d)| Polynomial::term(Monomial::var(n_vars, i, d), Rational::one()))
            .collect();
        if let Some(alg) = r.guard(
            "monomial quotient",
            QuotientAlgebra::from_generators(&gens, MonomialOrder::Grevlex),
        ) {
            r.check(alg.dimension() as u64 == koszul_length(&ds), || {
                format!("monomial ideal {ds:?}: dimension {}", alg.dimension())
            });
        }
    }
}

fn inclusion_exclusion(es: &[FormalObject]) -> FormalSum {
    let n = es.len();
    let mut out = FormalSum::zero();
    for mask in 0usize..1 << n {
        let size = mask.count_ones() as usize;
        let obj = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(FormalObject::unit(), |acc, i| acc.tensor(&es[i]));
        out.add_term(obj, if (n - size).is_multiple_of(2) { 1 } else { -1 });
    }
    out
}

fn cube_calculus(rng: &mut ChaCha8Rng, r: &mut PropertyReport) {
    for _ in 0..80 {
        let n = rng.gen_range(1..=4usize);
        let i = rng.gen_range(0..n);
        let a = gen::arrangement(rng, n);
        let b = gen::arrangement_with_back(rng, &a.face(i, Side::Front).expect("dir"), i);
        if let Some(g) = r.guard("glue", glue(&a, &b, i)) {
            r.check(delta(&g) == delta(&a).plus(&delta(&b)), || {
                format!("gluing additivity n={n} i={i}")
            });
        }
    }
    for _ in 0..80 {
        let n = rng.gen_range(1..=4usize);
        let k = gen::arrangement(rng, n);
        let sigma = gen::permutation(rng, n);
        if let Some(p) = r.guard("permute", permute(&k, &sigma)) {
            r.check(delta(&p) == delta(&k), || {
                format!("permutation invariance {sigma:?}")
            });
        }
    }
    for _ in 0..80 {
        let dim = rng.gen_range(1..=3u32);
        let chi = ChiFunction::projective(dim);
        let p = rng.gen_range(1..=4usize);
        let ds: Vec<i64> = (0..p).map(|_| rng.gen_range(-3..=4)).collect();
        let es: Vec<FormalObject> = ds
            .iter()
            .enumerate()
            .map(|(k, &d)| gen::line_bundle(&format!("E{k}"), d))
            .collect();
        let k = standard_cube(&FormalObject::unit(), &es);
        let d = delta(&k);
        r.check(d == inclusion_exclusion(&es), || {
            format!("inclusion-exclusion {ds:?}")
        });
        let (Some(lhs), Some(rhs)) = (
            r.guard("chi", d.evaluate_chi(&chi)),
            r.guard("intersection", intersection_number(&chi, &classes(&ds))),
        ) else {
            continue;
        };
        r.check(lhs == rhs, || {
            format!("P^{dim} {ds:?}: chi(delta) {lhs} vs {rhs}")
        });
        r.check(
            edges(&k) == Some((FormalObject::unit(), es.clone())),
            || "edge recovery".into(),
        );
    }
    for _ in 0..80 {
        let n = rng.gen_range(1..=4usize);
        let i = rng.gen_range(0..n);
        let k = gen::arrangement(rng, n);
        let back = k.face(i, Side::Back).expect("dir");
        let front = k.face(i, Side::Front).expect("dir");
        let mid = gen::arrangement(rng, n - 1);
        let lower = CubeArrangement::stack(&back, &mid, i);
        let upper = CubeArrangement::stack(&mid, &front, i);
        if let Some(g) = r.guard("glue", glue(&lower, &upper, i)) {
            r.check(
                g == k
                    && g.face(i, Side::Front).ok() == upper.face(i, Side::Front).ok()
                    && g.face(i, Side::Back).ok() == lower.face(i, Side::Back).ok(),
                || format!("face/glue coherence n={n} i={i}"),
            );
        }
    }
    for _ in 0..80 {
        let n = rng.gen_range(1..=3usize);
        let i = rng.gen_range(0..n);
        let a = gen::arrangement(rng, n);
        let b = gen::arrangement_with_back(rng, &a.face(i, Side::Front).expect("dir"), i);
        let c = gen::arrangement_with_back(rng, &b.face(i, Side::Front).expect("dir"), i);
        let lhs = glue(&a, &b, i).and_then(|ab| glue(&ab, &c, i));
        let rhs = glue(&b, &c, i).and_then(|bc| glue(&a, &bc, i));
        if let (Some(l), Some(rr)) = (r.guard("glue", lhs), r.guard("glue", rhs)) {
            r.check(l == rr, || format!("associativity n={n} i={i}"));
        }
    }
    for _ in 0..80 {
        let (d, d2, e) = (
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
        );
        r.check(graded_swap_sign(d, e) * graded_swap_sign(e, d) == 1, || {
            format!("({d},{e})")
        });
        r.check(
            graded_swap_sign(d + d2, e) == graded_swap_sign(d, e) * graded_swap_sign(d2, e),
            || format!("bilinearity ({d}+{d2},{e})"),
        );
    }
    for _ in 0..80 {
        let dim = rng.gen_range(0..=2usize);
        let chi = ChiFunction::projective(dim as u32);
        let ds: Vec<i64> = (0..dim + 2).map(|_| rng.gen_range(-3..=3)).collect();
        let l0 = gen::line_bundle("B", rng.gen_range(-3..=3));
        let es: Vec<FormalObject> = ds
            .iter()
            .enumerate()
            .map(|(k, &d)| gen::line_bundle(&format!("E{k}"), d))
            .collect();
        let k = standard_cube(&l0, &es);
        let Some(graded) = r.guard("chi grades", k.with_chi_grades(&chi)) else {
            continue;
        };
        for i in 0..dim + 2 {
            for j in i + 1..dim + 2 {
                let Some(sign) = r.guard("epsilon_ij", epsilon_ij(&k, i, j, &chi)) else {
                    continue;
                };
                let rest: i64 = (0..dim + 2)
                    .filter(|&t| t != i && t != j)
                    .map(|t| ds[t])
                    .product();
                let expected = if rest.rem_euclid(2) == 1 { -1 } else { 1 };
                let exchange = graded_exchange_sign(&graded, i, j).expect("dims");
                r.check(sign == expected && exchange == sign, || {
                    format!("P^{dim} edges {ds:?} ({i},{j}): {sign} / {exchange} / {expected}")
                });
            }
        }
    }
}
