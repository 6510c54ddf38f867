//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := 'x' INDEX ('^' POSINT)?
//! coeff  := INT | INT '/' POSINT
//! ```
//!
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

struct RawTerm {
    coeff: Rational,
    // (variable index, exponent, byte position of the 'x')
    factors: Vec<(usize, u32, usize)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: Vec<&'static str>) -> Result<T> {
        Err(Error::SyntaxError {
            position: self.pos,
            expected,
        })
    }

    fn digits(&mut self, what: &'static str) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(vec![what]);
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn positive(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let v: BigInt = self.digits("positive integer")?.parse().expect("digits");
        if v.is_zero() {
            self.pos = start;
            self.skip_ws();
            return self.fail(vec!["positive integer"]);
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return self.fail(vec!["'+'", "'-'", "end of input"]),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut term = RawTerm {
            coeff: Rational::one(),
            factors: Vec::new(),
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits("integer")?.parse().expect("digits");
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.positive()?;
                    term.coeff = Rational::new(num, den);
                } else {
                    term.coeff = Rational::from_integer(num);
                }
            }
            Some(b'x') => term.factors.push(self.factor()?),
            _ => return self.fail(vec!["integer", "'x'"]),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            term.factors.push(self.factor()?);
        }
        Ok(term)
    }

    fn factor(&mut self) -> Result<(usize, u32, usize)> {
        if self.peek() != Some(b'x') {
            return self.fail(vec!["'x'"]);
        }
        let at = self.pos;
        self.pos += 1;
        let index_start = self.pos;
        let index = self.digits("variable index")?;
        let index: usize = index.parse().map_err(|_| Error::SyntaxError {
            position: index_start,
            expected: vec!["variable index"],
        })?;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.pos;
            let e = self.positive()?;
            exp = u32::try_from(e).map_err(|_| Error::SyntaxError {
                position: start,
                expected: vec!["exponent below 2^32"],
            })?;
        }
        Ok((index, exp, at))
    }
}

fn raw_terms(text: &str) -> Result<Vec<RawTerm>> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    parser.expr()
}

fn build(terms: Vec<RawTerm>, n_vars: usize) -> Result<Polynomial> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut e = vec![0u32; n_vars];
        for (index, exp, _) in t.factors {
            if index >= n_vars {
                return Err(Error::VariableOutOfRange { index, n_vars });
            }
            e[index] += exp;
        }
        out.push((Monomial::new(e), t.coeff));
    }
    Ok(Polynomial::from_terms(n_vars, out))
}

/// Parses `text` as a polynomial in `x0 .. x{n_vars-1}`.
pub fn parse_polynomial(text: &str, n_vars: usize) -> Result<Polynomial> {
    build(raw_terms(text)?, n_vars)
}

pub(super) fn parse_with_inferred_arity(text: &str) -> Result<Polynomial> {
    let terms = raw_terms(text)?;
    let n_vars = terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|f| f.0 + 1))
        .max()
        .unwrap_or(1);
    build(terms, n_vars)
}
