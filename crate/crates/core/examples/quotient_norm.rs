//! Groebner bases, zero-dimensional quotients and norms.

use elimination::groebner::{buchberger, quotient_basis, MonomialOrder, QuotientAlgebra};
use elimination::{parse_polynomial, Result};

fn main() -> Result<()> {
    let ideal = [
        parse_polynomial("x0^2 + x1^2 - 5", 2)?,
        parse_polynomial("x0*x1 - 2", 2)?,
    ];
    for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
        let gb = buchberger(&ideal, order)?;
        let basis: Vec<String> = quotient_basis(&gb)?.iter().map(|m| m.to_string()).collect();
        println!("{order:?}:");
        for g in gb.generators() {
            println!("  {g}");
        }
        println!("  quotient basis: {}", basis.join(", "));
    }

    // points (1,2), (2,1), (-1,-2), (-2,-1)
    let alg = QuotientAlgebra::from_generators(&ideal, MonomialOrder::Grevlex)?;
    let p = parse_polynomial("x0 + 3", 2)?;
    println!("dimension = {}", alg.dimension());
    println!("norm(x0 + 3) = {}", alg.norm(&p)?);
    println!(
        "normal form of x0^3 = {}",
        alg.normal_form(&parse_polynomial("x0^3", 2)?)?
    );

    let m = alg.multiplication_matrix(&parse_polynomial("x1", 2)?)?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|c| format!("{c:>3}")).collect();
        println!("  [{}]", row.join(" "));
    }

    let not_finite = [parse_polynomial("x0*x1", 2)?];
    match QuotientAlgebra::from_generators(&not_finite, MonomialOrder::Grevlex) {
        Ok(_) => unreachable!(),
        Err(e) => println!("(x0*x1): {e}"),
    }
    Ok(())
}
