//! The multivariate resultant of `n+1` homogeneous forms in `n+1` variables.
//!
//! Normalization: `Res(x0^{d_1}, ..., x_n^{d_{n+1}}) = 1`. Two independent
//! evaluation paths are provided:
//!
//! * [`macaulay_resultant`]: `det(M) / det(M')` where `M` is the Macaulay
//!   matrix in degree `nu = 1 + sum (d_i - 1)` and `M'` its extraneous minor;
//! * [`poisson_resultant`]: the recursion
//!   `Res(f_1..f_{n+1}) = Res(f_1|H, ..., f_n|H)^{d_{n+1}} * N(f_{n+1}^aff)`
//!   with `H = {x_n = 0}` and `N` the norm on the affine quotient
//!   `k[x_0..x_{n-1}] / (f_1^aff, ..., f_n^aff)`.
//!
//! For two binary forms [`sylvester_resultant`] serves as a third route.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{MonomialOrder, QuotientAlgebra};
use crate::linalg::{determinant, Matrix};
use crate::poly::{parse_polynomial, Homogeneity, Monomial, Polynomial, Rational};

/// `n+1` nonzero homogeneous forms in `n+1` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulaySystem {
    forms: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl MacaulaySystem {
    /// Validates the forms. When `degrees` is given it must match the actual
    /// degrees.
    pub fn new(forms: Vec<Polynomial>, degrees: Option<&[u32]>) -> Result<Self> {
        let n_vars = forms.first().map_or(0, Polynomial::n_vars);
        if forms.is_empty() || forms.len() != n_vars {
            return Err(Error::FormCount {
                expected: n_vars.max(1),
                got: forms.len(),
            });
        }
        if let Some(d) = degrees {
            if d.len() != forms.len() {
                return Err(Error::FormCount {
                    expected: forms.len(),
                    got: d.len(),
                });
            }
        }
        let mut actual = Vec::with_capacity(forms.len());
        for (index, f) in forms.iter().enumerate() {
            if f.n_vars() != n_vars {
                return Err(Error::WrongArity {
                    expected: n_vars,
                    got: f.n_vars(),
                });
            }
            let d = match f.homogeneous_degree() {
                Homogeneity::Degree(0) | Homogeneity::NotHomogeneous => {
                    return Err(Error::NotHomogeneous { index })
                }
                Homogeneity::ZeroPoly => return Err(Error::ZeroForm { index }),
                Homogeneity::Degree(d) => d,
            };
            if let Some(declared) = degrees.map(|ds| ds[index]) {
                if declared != d {
                    return Err(Error::DegreeMismatch {
                        index,
                        declared,
                        actual: d,
                    });
                }
            }
            actual.push(d);
        }
        Ok(MacaulaySystem {
            forms,
            degrees: actual,
        })
    }

    /// Parses forms written in the polynomial grammar.
    pub fn parse(n_vars: usize, forms: &[&str]) -> Result<Self> {
        let forms = forms
            .iter()
            .map(|s| parse_polynomial(s, n_vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(forms, None)
    }

    /// `(x_0^{d_0}, ..., x_n^{d_n})`.
    pub fn monomial(degrees: &[u32]) -> Self {
        let n = degrees.len();
        let forms = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| Polynomial::term(Monomial::var(n, i, d), Rational::one()))
            .collect();
        Self::new(forms, Some(degrees)).expect("monomial system is valid")
    }

    /// `n`, so that there are `n+1` forms.
    pub fn n(&self) -> usize {
        self.forms.len() - 1
    }

    pub fn n_vars(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Macaulay degree `1 + sum (d_i - 1)`.
    pub fn nu(&self) -> u32 {
        1 + self.degrees.iter().map(|d| d - 1).sum::<u32>()
    }

    /// Same system with form `i` replaced.
    pub fn with_form(&self, i: usize, f: Polynomial) -> Result<Self> {
        let mut forms = self.forms.clone();
        forms[i] = f;
        Self::new(forms, None)
    }

    /// Forms reordered so that slot `k` holds the old form `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.forms.len();
        let mut seen = vec![false; n];
        if perm.len() != n
            || !perm
                .iter()
                .all(|&j| j < n && !std::mem::replace(&mut seen[j], true))
        {
            return Err(Error::BadPermutation {
                n,
                perm: perm.to_vec(),
            });
        }
        Self::new(perm.iter().map(|&j| self.forms[j].clone()).collect(), None)
    }
}

impl fmt::Display for MacaulaySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self.forms.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", forms.join(", "))
    }
}

/// On-disk form of a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub n_vars: usize,
    pub forms: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
}

impl SystemFile {
    pub fn to_system(&self) -> Result<MacaulaySystem> {
        let forms = self
            .forms
            .iter()
            .map(|s| parse_polynomial(s, self.n_vars))
            .collect::<Result<Vec<_>>>()?;
        MacaulaySystem::new(forms, self.degrees.as_deref())
    }

    pub fn from_system(sys: &MacaulaySystem) -> Self {
        SystemFile {
            n_vars: sys.n_vars(),
            forms: sys.forms.iter().map(Polynomial::to_text).collect(),
            degrees: Some(sys.degrees.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sylvester,
    Macaulay,
    Poisson,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sylvester => "sylvester",
            Method::Macaulay => "macaulay",
            Method::Poisson => "poisson",
        })
    }
}

/// How [`resultant`] chooses between the two paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Macaulay, falling back to Poisson on a degenerate minor.
    #[default]
    Auto,
    Macaulay,
    Poisson,
    /// Both paths; disagreement is an error.
    Crosscheck,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Mode::Auto),
            "macaulay" => Ok(Mode::Macaulay),
            "poisson" => Ok(Mode::Poisson),
            "crosscheck" => Ok(Mode::Crosscheck),
            other => Err(Error::InvalidJob(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantValue {
    pub value: Rational,
    pub method: Method,
    /// `k_i = prod_{j != i} d_j`.
    pub degrees_certificate: Vec<u64>,
}

/// `k_i = prod_{j != i} d_j`: the degree of the resultant in the coefficients
/// of form `i`.
pub fn resultant_degrees(degrees: &[u32]) -> Vec<u64> {
    (0..degrees.len())
        .map(|i| {
            degrees
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &d)| u64::from(d))
                .product()
        })
        .collect()
}

fn binary_coefficients(f: &Polynomial, index: usize) -> Result<Vec<Rational>> {
    if f.n_vars() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: f.n_vars(),
        });
    }
    let d = match f.homogeneous_degree() {
        Homogeneity::Degree(d) => d,
        _ => return Err(Error::NotHomogeneous { index }),
    };
    Ok((0..=d)
        .map(|k| f.coefficient(&Monomial::new(vec![d - k, k])))
        .collect())
}

/// Resultant of two binary forms as the determinant of their Sylvester matrix.
///
/// With `f = sum a_k x0^{p-k} x1^k` and `g = sum b_k x0^{q-k} x1^k`, the first
/// `q` rows hold the `a_k` shifted right by the row index and the last `p`
/// rows hold the `b_k`; so `Res(a x0 + b x1, c x0 + d x1) = ad - bc`.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial) -> Result<Rational> {
    let a = binary_coefficients(f, 0)?;
    let b = binary_coefficients(g, 1)?;
    let (p, q) = (a.len() - 1, b.len() - 1);
    let size = p + q;
    let mut m = Matrix::zeros(size, size);
    for r in 0..q {
        for (k, c) in a.iter().enumerate() {
            m[(r, r + k)] = c.clone();
        }
    }
    for r in 0..p {
        for (k, c) in b.iter().enumerate() {
            m[(q + r, r + k)] = c.clone();
        }
    }
    determinant(&m)
}

/// Macaulay matrix together with the index set of its extraneous minor.
#[derive(Debug, Clone)]
pub struct MacaulayMatrix {
    pub matrix: Matrix,
    /// Row/column labels: the monomials of degree `nu`, descending grevlex.
    pub monomials: Vec<Monomial>,
    pub minor_rows: Vec<usize>,
    pub minor_cols: Vec<usize>,
}

/// Rows and columns are the monomials of degree `nu`. Monomial `m` goes to
/// the smallest `i` with `x_i^{d_i} | m` and its row is `(m / x_i^{d_i}) f_i`.
/// The minor keeps the monomials divisible by at least two of the
/// `x_i^{d_i}`.
pub fn macaulay_matrix(sys: &MacaulaySystem) -> Result<MacaulayMatrix> {
    let n_vars = sys.n_vars();
    let monomials = Monomial::all_of_degree(n_vars, sys.nu());
    let col_of: std::collections::HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let size = monomials.len();
    let mut matrix = Matrix::zeros(size, size);
    let mut minor = Vec::new();
    for (r, m) in monomials.iter().enumerate() {
        let divisible: Vec<usize> = (0..n_vars)
            .filter(|&i| m.exponents()[i] >= sys.degrees[i])
            .collect();
        let Some(&i) = divisible.first() else {
            return Err(Error::UnassignedMonomial {
                monomial: m.to_string(),
            });
        };
        if divisible.len() >= 2 {
            minor.push(r);
        }
        let q = m
            .div(&Monomial::var(n_vars, i, sys.degrees[i]))
            .expect("divisible");
        for (mono, c) in sys.forms[i].shift(&q).terms() {
            matrix[(r, col_of[mono])] = c.clone();
        }
    }
    Ok(MacaulayMatrix {
        matrix,
        monomials,
        minor_cols: minor.clone(),
        minor_rows: minor,
    })
}

/// `det(M) / det(M')`; fails with [`Error::DegenerateMinor`] when `det(M') = 0`.
pub fn macaulay_resultant(sys: &MacaulaySystem) -> Result<ResultantValue> {
    let mm = macaulay_matrix(sys)?;
    let minor = mm.matrix.submatrix(&mm.minor_rows, &mm.minor_cols)?;
    let den = determinant(&minor)?;
    if den.is_zero() {
        return Err(Error::DegenerateMinor);
    }
    let num = determinant(&mm.matrix)?;
    Ok(ResultantValue {
        value: num / den,
        method: Method::Macaulay,
        degrees_certificate: resultant_degrees(&sys.degrees),
    })
}

fn poisson_failed(reason: impl Into<String>) -> Error {
    Error::PoissonPreconditionFailed {
        reason: reason.into(),
    }
}

fn poisson_value(sys: &MacaulaySystem) -> Result<Rational> {
    let n = sys.n();
    if n == 0 {
        // c * x0^d
        return Ok(sys.forms[0].leading_term().expect("nonzero form").1.clone());
    }

    let mut restricted = Vec::with_capacity(n);
    for (i, f) in sys.forms[..n].iter().enumerate() {
        let r = f.restrict_to_hyperplane(n)?.dehomogenize(n)?;
        if r.is_zero() {
            return Err(poisson_failed(format!(
                "form {i} vanishes identically on x{n} = 0"
            )));
        }
        restricted.push(r);
    }
    let sub = MacaulaySystem::new(restricted, Some(&sys.degrees[..n]))?;
    let base = poisson_value(&sub)?;
    if base.is_zero() {
        return Err(poisson_failed(format!(
            "restricted forms share a zero on x{n} = 0"
        )));
    }

    let affine = sys.forms[..n]
        .iter()
        .map(|f| f.dehomogenize(n))
        .collect::<Result<Vec<_>>>()?;
    let alg = match QuotientAlgebra::from_generators(&affine, MonomialOrder::Grevlex) {
        Ok(a) => a,
        Err(Error::NotZeroDimensional { .. }) => {
            return Err(poisson_failed("affine quotient is not zero-dimensional"))
        }
        Err(e) => return Err(e),
    };
    let expected: u64 = sys.degrees[..n].iter().map(|&d| u64::from(d)).product();
    if alg.dimension() as u64 != expected {
        return Err(poisson_failed(format!(
            "affine quotient has dimension {} instead of {expected}",
            alg.dimension()
        )));
    }
    let last = sys.forms[n].dehomogenize(n)?;
    let norm = alg.norm(&last)?;
    Ok(num_traits::pow(base, sys.degrees[n] as usize) * norm)
}

/// Resultant through the Poisson recursion on the last variable.
pub fn poisson_resultant(sys: &MacaulaySystem) -> Result<ResultantValue> {
    Ok(ResultantValue {
        value: poisson_value(sys)?,
        method: Method::Poisson,
        degrees_certificate: resultant_degrees(&sys.degrees),
    })
}

fn is_degenerate(e: &Error) -> bool {
    matches!(
        e,
        Error::DegenerateMinor | Error::PoissonPreconditionFailed { .. }
    )
}

/// Dispatches to one or both evaluation paths.
///
/// In `Crosscheck` mode both paths run concurrently; if exactly one of them
/// is degenerate its error is returned, since no comparison was possible.
pub fn resultant(sys: &MacaulaySystem, mode: Mode) -> Result<ResultantValue> {
    match mode {
        Mode::Macaulay => macaulay_resultant(sys),
        Mode::Poisson => poisson_resultant(sys),
        Mode::Auto => match macaulay_resultant(sys) {
            Err(Error::DegenerateMinor) => match poisson_resultant(sys) {
                Err(e) if is_degenerate(&e) => Err(Error::BothPathsDegenerate),
                other => other,
            },
            other => other,
        },
        Mode::Crosscheck => {
            let (m, p) = std::thread::scope(|s| {
                let handle = s.spawn(|| poisson_resultant(sys));
                let m = macaulay_resultant(sys);
                (m, handle.join().expect("poisson thread panicked"))
            });
            match (m, p) {
                (Ok(m), Ok(p)) => {
                    if m.value == p.value {
                        Ok(m)
                    } else {
                        Err(Error::CrosscheckMismatch {
                            macaulay: m.value.to_string(),
                            poisson: p.value.to_string(),
                        })
                    }
                }
                (Err(a), Err(b)) if is_degenerate(&a) && is_degenerate(&b) => {
                    Err(Error::BothPathsDegenerate)
                }
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
    }
}

/// Determinant of the coefficient matrix of `n+1` linear forms, row `i`
/// holding the coefficients of form `i` on `x_0, ..., x_n`.
pub fn linear_coefficient_determinant(forms: &[Polynomial]) -> Result<Rational> {
    let n = forms.len();
    let mut m = Matrix::zeros(n, n);
    for (i, f) in forms.iter().enumerate() {
        if f.n_vars() != n {
            return Err(Error::WrongArity {
                expected: n,
                got: f.n_vars(),
            });
        }
        for j in 0..n {
            m[(i, j)] = f.coefficient(&Monomial::var(n, j, 1));
        }
    }
    determinant(&m)
}

/// `lambda^k` for a rational `lambda` and a possibly large exponent.
pub fn rational_pow(lambda: &Rational, k: u64) -> Rational {
    let numer = num_traits::pow(lambda.numer().clone(), k as usize);
    let denom = num_traits::pow(lambda.denom().clone(), k as usize);
    Rational::new(numer, denom)
}

/// Sign of a permutation given as a list of images.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Integer value of a rational, for reporting; `None` when not integral.
pub fn as_integer(v: &Rational) -> Option<BigInt> {
    v.is_integer().then(|| v.to_integer())
}
