//! Exact determinants of rational matrices.

use elimination::linalg::Matrix;
use elimination::poly::ratio;
use elimination::Result;

fn main() -> Result<()> {
    let m = Matrix::from_i64(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
    println!("det of the A3 Cartan matrix = {}", m.determinant()?);

    // Hilbert matrix of order 4
    let rows = (1..=4)
        .map(|i| (1..=4).map(|j| ratio(1, i + j - 1)).collect())
        .collect();
    let h = Matrix::from_rows(rows);
    println!("det H4 = {}", h.determinant()?);

    let minor = h.submatrix(&[0, 1], &[2, 3])?;
    println!(
        "minor on rows 0,1 and columns 2,3 = {}",
        minor.determinant()?
    );

    let product = m.checked_mul(&m)?;
    println!("det(M^2) = {}", product.determinant()?);
    Ok(())
}
