//! Intersection numbers of line bundles from Euler characteristics.

use elimination::euler::{
    chi_projective, intersection_number, koszul_length, ChiFunction, DegreeVector,
};
use elimination::Result;

fn line(d: i64) -> DegreeVector {
    DegreeVector(vec![d])
}

fn main() -> Result<()> {
    for d in -4..=3 {
        print!("chi(O({d})) on P^2 = {}  ", chi_projective(2, d));
    }
    println!();

    let p2 = ChiFunction::projective(2);
    println!(
        "<O(2), O(3)> on P^2 = {}",
        intersection_number(&p2, &[line(2), line(3)])?
    );
    println!("koszul length for (2, 3) = {}", koszul_length(&[2, 3]));
    println!(
        "three twists on P^2 give {}",
        intersection_number(&p2, &[line(1), line(-2), line(4)])?
    );

    let quadric = ChiFunction::projective_product(vec![1, 1]);
    let a = DegreeVector(vec![2, 3]);
    let b = DegreeVector(vec![1, 1]);
    println!(
        "<O(2,3), O(1,1)> on P^1 x P^1 = {}",
        intersection_number(&quadric, &[a, b])?
    );

    let p3 = ChiFunction::projective(3);
    println!(
        "<O(1)^3> on P^3 = {}",
        intersection_number(&p3, &[line(1), line(1), line(1)])?
    );
    Ok(())
}
