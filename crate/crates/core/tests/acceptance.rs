//! Acceptance criteria, one line of output each.
//!
//! Runs without the libtest harness so every criterion reports even when an
//! earlier one fails; the process exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use elimination::cube::{
    delta, epsilon_ij, glue, graded_exchange_sign, graded_swap_sign, permute, standard_cube,
    CubeArrangement, FormalObject, Side,
};
use elimination::euler::{intersection_number, koszul_length, ChiFunction, DegreeVector};
use elimination::groebner::{buchberger, quotient_basis, MonomialOrder, QuotientAlgebra};
use elimination::job::{run, Command, JobSpec, RunOptions};
use elimination::poly::{rat, Monomial, Polynomial, Rational};
use elimination::resultant::{
    linear_coefficient_determinant, macaulay_resultant, permutation_sign, poisson_resultant,
    rational_pow, resultant, resultant_degrees, sylvester_resultant, MacaulaySystem, Mode,
};
use elimination::selftest::{gen, is_degenerate};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xACCE_0000 + criterion)
}

fn classes(ds: &[i64]) -> Vec<DegreeVector> {
    ds.iter().map(|&d| DegreeVector(vec![d])).collect()
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(limit_secs) {
        Err(format!("took {:.2?}, limit {limit_secs} s", elapsed))
    } else {
        Ok(())
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn bezout() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut count = 0;
    for n in 1..=3u32 {
        let chi = ChiFunction::projective(n);
        for _ in 0..200 {
            let ds = gen::degrees(&mut r, n as usize, 4);
            let cls: Vec<i64> = ds.iter().map(|&d| i64::from(d)).collect();
            let product: i64 = cls.iter().product();
            let v = intersection_number(&chi, &classes(&cls)).map_err(|e| e.to_string())?;
            ensure!(v == rat(product), "P^{n} {ds:?}: {v} != {product}");
            ensure!(koszul_length(&ds) == product as u64, "koszul_length {ds:?}");
            count += 1;
        }
    }
    within(start.elapsed(), 1)?;
    Ok(format!("{count} tuples"))
}

fn vanishing() -> Outcome {
    let mut r = rng(2);
    let mut count = 0;
    for n in 0..=3u32 {
        let chi = ChiFunction::projective(n);
        let inter = |ds: &[i64]| intersection_number(&chi, &classes(ds)).unwrap();
        for _ in 0..200 {
            let ds: Vec<i64> = (0..=n).map(|_| r.gen_range(-5..=5)).collect();
            ensure!(
                inter(&ds).is_zero(),
                "P^{n} {ds:?}: nonzero alternating sum"
            );
            if n > 0 {
                let head = &ds[..n as usize - 1];
                let (l, m) = (ds[n as usize - 1], ds[n as usize]);
                let with = |extra: &[i64]| inter(&[head, extra].concat());
                ensure!(
                    with(&[l, m]) == with(&[l]) + with(&[m]) - with(&[l + m]),
                    "P^{n} {ds:?}: bilinearity"
                );
            }
            count += 1;
        }
    }
    Ok(format!("{count} tuples"))
}

fn sylvester_agreement() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    for _ in 0..100 {
        let ds = gen::degrees(&mut r, 2, 4);
        let sys = gen::system(&mut r, &ds);
        let f = sys.forms();
        let syl = sylvester_resultant(&f[0], &f[1]).map_err(|e| e.to_string())?;
        let mac = macaulay_resultant(&sys)
            .map_err(|e| format!("{sys}: {e}"))?
            .value;
        let poi = poisson_resultant(&sys)
            .map_err(|e| format!("{sys}: {e}"))?
            .value;
        ensure!(mac == syl && poi == syl, "{sys}: {syl} / {mac} / {poi}");
    }
    within(start.elapsed(), 5)?;
    Ok("100 systems".into())
}

fn macaulay_poisson_agreement() -> Outcome {
    let start = Instant::now();
    let mut r = rng(4);
    let (mut agreed, mut degenerate) = (0, 0);
    while agreed < 50 {
        ensure!(degenerate < 50, "too many degenerate instances");
        let ds = gen::degrees(&mut r, 3, 3);
        let sys = gen::system(&mut r, &ds);
        match resultant(&sys, Mode::Crosscheck) {
            Ok(_) => agreed += 1,
            Err(e) if is_degenerate(&e) => degenerate += 1,
            Err(e) => return Err(format!("{sys}: {e}")),
        }
    }
    ensure!(
        degenerate < agreed,
        "degenerate instances are not a minority"
    );
    within(start.elapsed(), 60)?;
    Ok(format!("{agreed} agreed, {degenerate} degenerate excluded"))
}

fn quasi_homogeneity() -> Outcome {
    let mut r = rng(5);
    let (mut done, mut degenerate) = (0, 0);
    while done < 50 {
        let n = r.gen_range(1..=2usize);
        let ds = gen::degrees(&mut r, n + 1, if n == 1 { 3 } else { 2 });
        let sys = gen::system(&mut r, &ds);
        let base = match resultant(&sys, Mode::Auto) {
            Ok(v) => v.value,
            Err(e) if is_degenerate(&e) => {
                degenerate += 1;
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        for (i, k) in resultant_degrees(&ds).into_iter().enumerate() {
            let lambda = gen::nonzero_rational(&mut r, 5, 3);
            let scaled = sys.with_form(i, sys.forms()[i].scale(&lambda)).unwrap();
            let v = resultant(&scaled, Mode::Auto)
                .map_err(|e| e.to_string())?
                .value;
            ensure!(
                v == rational_pow(&lambda, k) * &base,
                "{sys}: slot {i}, lambda {lambda}"
            );
        }
        done += 1;
    }
    Ok(format!("{done} instances, {degenerate} degenerate redrawn"))
}

fn multiplicativity() -> Outcome {
    let mut r = rng(6);
    let (mut done, mut degenerate) = (0, 0);
    while done < 50 {
        let n = r.gen_range(1..=2usize);
        let (df, dg) = (r.gen_range(1..=2), r.gen_range(1..=2));
        let f = gen::form(&mut r, n + 1, df);
        let g = gen::form(&mut r, n + 1, dg);
        let rest: Vec<Polynomial> = (0..n)
            .map(|_| {
                let d = r.gen_range(1..=2);
                gen::form(&mut r, n + 1, d)
            })
            .collect();
        let res = |first: &Polynomial| {
            let forms = [vec![first.clone()], rest.clone()].concat();
            resultant(&MacaulaySystem::new(forms, None).unwrap(), Mode::Auto).map(|v| v.value)
        };
        match (res(&(&f * &g)), res(&f), res(&g)) {
            (Ok(a), Ok(b), Ok(c)) => {
                ensure!(a == b * c, "f = {f}, g = {g}");
                done += 1;
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) if is_degenerate(&e) => {
                degenerate += 1
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return Err(e.to_string()),
        }
    }
    Ok(format!("{done} instances, {degenerate} degenerate redrawn"))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn symmetry() -> Outcome {
    let mut r = rng(7);
    let profiles: [&[u32]; 7] = [
        &[1, 1],
        &[1, 2],
        &[2, 3],
        &[3, 3],
        &[1, 1, 1],
        &[1, 2, 1],
        &[2, 1, 2],
    ];
    for profile in profiles {
        let perms = all_permutations(profile.len());
        let product: u32 = profile.iter().product();
        let mut signs: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let mut done = 0;
        while done < 30 {
            let sys = gen::system(&mut r, profile);
            let base = match resultant(&sys, Mode::Auto) {
                Ok(v) if !v.value.is_zero() => v.value,
                Ok(_) => continue,
                Err(e) if is_degenerate(&e) => continue,
                Err(e) => return Err(e.to_string()),
            };
            for p in &perms {
                let v = match resultant(&sys.permuted(p).unwrap(), Mode::Auto) {
                    Ok(v) => v.value,
                    Err(e) if is_degenerate(&e) => continue,
                    Err(e) => return Err(e.to_string()),
                };
                ensure!(v.abs() == base.abs(), "{sys} by {p:?}: |Res| changed");
                let sign = if v == base { 1 } else { -1 };
                ensure!(
                    *signs.entry(p.clone()).or_insert(sign) == sign,
                    "{profile:?} {p:?}: sign varies"
                );
                let expected = if product % 2 == 1 {
                    permutation_sign(p)
                } else {
                    1
                };
                ensure!(sign == expected, "{profile:?} {p:?}: sign {sign}");
                if profile.len() == 2 && p == &[1, 0] {
                    let t = if (profile[0] * profile[1]) % 2 == 1 {
                        -1
                    } else {
                        1
                    };
                    ensure!(sign == t, "{profile:?}: transposition sign");
                }
            }
            done += 1;
        }
    }
    Ok(format!("{} profiles x 30 instances", profiles.len()))
}

fn normalization_and_witnesses() -> Outcome {
    let mut r = rng(8);
    for _ in 0..20 {
        let n = r.gen_range(0..=2usize);
        let ds = gen::degrees(&mut r, n + 1, 3);
        let sys = MacaulaySystem::monomial(&ds);
        for mode in [Mode::Macaulay, Mode::Poisson] {
            let v = resultant(&sys, mode).map_err(|e| e.to_string())?.value;
            ensure!(v.is_one(), "monomial {ds:?} via {mode:?}: {v}");
        }
    }
    let mut zeros = 0;
    while zeros < 20 {
        let n = r.gen_range(1..=2usize);
        let ds = gen::degrees(&mut r, n + 1, if n == 1 { 3 } else { 2 });
        let forms = ds
            .iter()
            .map(|&d| gen::form_vanishing_at_ones(&mut r, n + 1, d))
            .collect();
        let sys = MacaulaySystem::new(forms, Some(&ds)).unwrap();
        match resultant(&sys, Mode::Auto) {
            Ok(v) => ensure!(v.value.is_zero(), "{sys}: {}", v.value),
            Err(e) if is_degenerate(&e) => continue,
            Err(e) => return Err(e.to_string()),
        }
        zeros += 1;
    }
    for _ in 0..20 {
        let n = r.gen_range(0..=3usize);
        let sys = gen::system(&mut r, &vec![1; n + 1]);
        let det = linear_coefficient_determinant(sys.forms()).unwrap();
        for mode in [Mode::Macaulay, Mode::Poisson] {
            let v = resultant(&sys, mode)
                .map_err(|e| format!("{sys}: {e}"))?
                .value;
            ensure!(v == det, "{sys} via {mode:?}: {v} vs {det}");
        }
    }
    Ok("20 monomial, 20 vanishing, 20 linear".into())
}

fn norm_suite() -> Outcome {
    let mut r = rng(9);
    let mut done = 0;
    while done < 50 {
        let n_vars = r.gen_range(1..=2usize);
        let gens: Vec<Polynomial> = (0..n_vars)
            .map(|_| {
                let d = r.gen_range(1..=3);
                gen::polynomial(&mut r, n_vars, d)
            })
            .collect();
        let alg = match QuotientAlgebra::from_generators(&gens, MonomialOrder::Grevlex) {
            Ok(a) if a.dimension() > 0 => a,
            _ => continue,
        };
        let p = gen::polynomial(&mut r, n_vars, 2);
        let q = gen::polynomial(&mut r, n_vars, 2);
        let norm = |x: &Polynomial| alg.norm(x).unwrap();
        ensure!(norm(&Polynomial::one(n_vars)).is_one(), "norm(1)");
        ensure!(
            norm(&(&p * &q)) == norm(&p) * norm(&q),
            "norm(pq) for {gens:?}"
        );
        done += 1;
    }
    for _ in 0..20 {
        let count = r.gen_range(1..=3);
        let ds = gen::degrees(&mut r, count, 4);
        let gens: Vec<Polynomial> = ds
            .iter()
            .enumerate()
            .map(|(i, &d)| Polynomial::term(Monomial::var(count, i, d), Rational::one()))
            .collect();
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            let gb = buchberger(&gens, order).unwrap();
            let size = quotient_basis(&gb).unwrap().len();
            ensure!(size as u64 == koszul_length(&ds), "{ds:?}: {size}");
        }
    }
    Ok("50 quotients, 20 monomial ideals".into())
}

fn cube_calculus() -> Outcome {
    let start = Instant::now();
    let mut r = rng(10);
    let mut checks = 0;
    let mut check = |ok: bool, what: String| -> Result<(), String> {
        checks += 1;
        if ok {
            Ok(())
        } else {
            Err(what)
        }
    };
    for _ in 0..72 {
        let n = r.gen_range(1..=4usize);
        let i = r.gen_range(0..n);
        let a = gen::arrangement(&mut r, n);
        let b = gen::arrangement_with_back(&mut r, &a.face(i, Side::Front).unwrap(), i);
        let g = glue(&a, &b, i).map_err(|e| e.to_string())?;
        check(
            delta(&g) == delta(&a).plus(&delta(&b)),
            format!("additivity n={n} i={i}"),
        )?;

        let sigma = gen::permutation(&mut r, n);
        check(
            delta(&permute(&a, &sigma).unwrap()) == delta(&a),
            format!("permutation {sigma:?}"),
        )?;

        let dim = r.gen_range(1..=3u32);
        let chi = ChiFunction::projective(dim);
        let ds: Vec<i64> = (0..dim).map(|_| r.gen_range(-3..=4)).collect();
        let l0 = gen::line_bundle("B", r.gen_range(-3..=3));
        let es: Vec<FormalObject> = ds
            .iter()
            .enumerate()
            .map(|(k, &d)| gen::line_bundle(&format!("E{k}"), d))
            .collect();
        let k = standard_cube(&l0, &es);
        let lhs = delta(&k).evaluate_chi(&chi).map_err(|e| e.to_string())?;
        let rhs = intersection_number(&chi, &classes(&ds)).unwrap();
        check(lhs == rhs, format!("P^{dim} {ds:?}: {lhs} vs {rhs}"))?;

        let mid = gen::arrangement(&mut r, n - 1);
        let lower = CubeArrangement::stack(&a.face(i, Side::Back).unwrap(), &mid, i);
        let upper = CubeArrangement::stack(&mid, &a.face(i, Side::Front).unwrap(), i);
        let g = glue(&lower, &upper, i).map_err(|e| e.to_string())?;
        check(
            g == a
                && g.face(i, Side::Back).unwrap() == lower.face(i, Side::Back).unwrap()
                && g.face(i, Side::Front).unwrap() == upper.face(i, Side::Front).unwrap(),
            format!("face/glue coherence n={n} i={i}"),
        )?;

        let c = gen::arrangement_with_back(&mut r, &b.face(i, Side::Front).unwrap(), i);
        let left = glue(&glue(&a, &b, i).unwrap(), &c, i).unwrap();
        let right = glue(&a, &glue(&b, &c, i).unwrap(), i).unwrap();
        check(left == right, format!("associativity n={n} i={i}"))?;

        let (d, d2, e) = (
            r.gen_range(-9..=9),
            r.gen_range(-9..=9),
            r.gen_range(-9..=9),
        );
        check(
            graded_swap_sign(d + d2, e) == graded_swap_sign(d, e) * graded_swap_sign(d2, e)
                && graded_swap_sign(d, e) == graded_swap_sign(e, d),
            format!("graded sign ({d}+{d2}, {e})"),
        )?;

        let dim = r.gen_range(0..=2usize);
        let chi = ChiFunction::projective(dim as u32);
        let ds: Vec<i64> = (0..dim + 2).map(|_| r.gen_range(-3..=3)).collect();
        let es: Vec<FormalObject> = ds
            .iter()
            .enumerate()
            .map(|(k, &d)| gen::line_bundle(&format!("E{k}"), d))
            .collect();
        let k = standard_cube(&l0, &es);
        let graded = k.with_chi_grades(&chi).map_err(|e| e.to_string())?;
        let (i, j) = (0, dim + 1);
        let sign = epsilon_ij(&k, i, j, &chi).map_err(|e| format!("P^{dim} {ds:?}: {e}"))?;
        let rest: i64 = ds[1..=dim].iter().product();
        let expected = if rest.rem_euclid(2) == 1 { -1 } else { 1 };
        check(
            sign == expected && graded_exchange_sign(&graded, i, j).unwrap() == sign,
            format!("epsilon_ij P^{dim} {ds:?}"),
        )?;
    }
    ensure!(checks >= 500, "only {checks} checks");
    within(start.elapsed(), 5)?;
    Ok(format!("{checks} checks"))
}

fn determinism() -> Outcome {
    let job = JobSpec {
        command: Command::Selftest,
        payload: json!({}),
        seed: Some(2024),
        mode: None,
    };
    let a = run(&job, RunOptions::default());
    let b = run(&job, RunOptions::default());
    ensure!(a.exit_code == 0, "selftest failed: {}", a.to_json());
    let (sa, sb) = (
        a.without_timing().to_string(),
        b.without_timing().to_string(),
    );
    ensure!(sa == sb, "reports differ");
    Ok(format!("{} bytes identical", sa.len()))
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("bezout and koszul length", bezout),
        ("vanishing and bilinearity", vanishing),
        ("sylvester agreement", sylvester_agreement),
        ("macaulay-poisson agreement", macaulay_poisson_agreement),
        ("quasi-homogeneity", quasi_homogeneity),
        ("multiplicativity", multiplicativity),
        ("permutation symmetry", symmetry),
        (
            "normalization and zero witnesses",
            normalization_and_witnesses,
        ),
        ("norm suite", norm_suite),
        ("cube calculus", cube_calculus),
        ("determinism", determinism),
    ];
    // silence the default hook; failures are reported on the criterion line
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {ms:.0} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {ms:.0} ms)", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
