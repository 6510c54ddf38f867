//! Parsing, printing and the ring operations on polynomials.

use elimination::poly::{rat, Homogeneity, Polynomial};
use elimination::{parse_polynomial, Result};

fn main() -> Result<()> {
    let f = parse_polynomial("x0^2 + x0*x1 - 1/2*x1^2", 2)?;
    let g: Polynomial = "x0 - 3*x1".parse()?;
    println!("f = {f}");
    println!("g = {g}");
    println!("f + g = {}", &f + &g);
    println!("f * g = {}", &f * &g);
    println!("g^3 = {}", g.pow(3));

    match (&f * &g).homogeneous_degree() {
        Homogeneity::Degree(d) => println!("f * g is a form of degree {d}"),
        other => println!("f * g: {other:?}"),
    }
    println!("f on x1 = 0: {}", f.restrict_to_hyperplane(1)?);
    println!("f with x0 = 1, x1 renamed x0: {}", f.dehomogenize(0)?);
    println!("f(2, 1) = {}", f.evaluate(&[rat(2), rat(1)])?);

    match parse_polynomial("x0 + * x1", 2) {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}
