//! Resultants of homogeneous systems by the Macaulay quotient formula, the
//! Poisson recursion and, for two forms, the Sylvester determinant.

use elimination::resultant::{
    macaulay_matrix, resultant, sylvester_resultant, MacaulaySystem, Mode,
};
use elimination::Result;

fn main() -> Result<()> {
    let binary = MacaulaySystem::parse(2, &["x0^2 - 3*x0*x1 + 2*x1^2", "x0^2 + x1^2"])?;
    let f = binary.forms();
    println!("sylvester: {}", sylvester_resultant(&f[0], &f[1])?);
    for mode in [Mode::Macaulay, Mode::Poisson, Mode::Crosscheck] {
        let v = resultant(&binary, mode)?;
        println!("{mode:?}: {} (via {:?})", v.value, v.method);
    }

    let sys = MacaulaySystem::parse(
        3,
        &[
            "x0^2 + x1*x2 - 3*x2^2",
            "2*x0*x1 - x1^2 + 5*x2^2",
            "x0 + 2*x1 - 7*x2",
        ],
    )?;
    let m = macaulay_matrix(&sys)?;
    println!(
        "macaulay matrix {}x{}, extraneous minor {}x{}",
        m.matrix.rows(),
        m.matrix.cols(),
        m.minor_rows.len(),
        m.minor_cols.len()
    );
    let v = resultant(&sys, Mode::Crosscheck)?;
    println!(
        "Res = {}, homogeneous of degrees {:?}",
        v.value, v.degrees_certificate
    );

    // a common zero at (1 : 1 : 1)
    let singular = MacaulaySystem::parse(3, &["x0 - x1", "x1^2 - x0*x2", "x0 + x1 - 2*x2"])?;
    println!(
        "with a common zero: {}",
        resultant(&singular, Mode::Auto)?.value
    );

    let degenerate = MacaulaySystem::parse(2, &["x1^2", "x0^2 + x1^2"])?;
    match resultant(&degenerate, Mode::Poisson) {
        Ok(v) => println!("{}", v.value),
        Err(e) => println!("poisson refuses: {e}"),
    }
    println!(
        "auto still answers: {}",
        resultant(&degenerate, Mode::Auto)?.value
    );
    Ok(())
}
