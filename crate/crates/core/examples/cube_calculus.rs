//! Cubes of formal line bundles: alternating sums, gluing, and the sign
//! attached to a pair of directions.

use elimination::cube::{
    delta, epsilon_ij, glue, graded_exchange_sign, standard_cube, vertices_in_order,
    CubeArrangement, CubeDocument, FormalObject, Side, Symbol,
};
use elimination::euler::{ChiFunction, DegreeVector};
use elimination::Result;

fn bundle(name: &str, d: i64) -> FormalObject {
    FormalObject::symbol(Symbol::with_degree(name, DegreeVector(vec![d])))
}

fn main() -> Result<()> {
    let names: Vec<String> = vertices_in_order(3)
        .iter()
        .map(|v| v.bits().iter().map(|b| b.to_string()).collect())
        .collect();
    println!("vertex order of the 3-cube: {}", names.join(" "));

    let p2 = ChiFunction::projective(2);
    let edges = [bundle("A", 1), bundle("B", 2)];
    let k = standard_cube(&FormalObject::unit(), &edges);
    let d = delta(&k);
    println!(
        "delta of the standard square has {} terms",
        d.terms().count()
    );
    println!("chi(delta) on P^2 = {}", d.evaluate_chi(&p2)?);

    // split the square along direction 0 at a new edge and glue it back
    let back = k.face(0, Side::Back)?;
    let front = k.face(0, Side::Front)?;
    let middle = CubeArrangement::edge(bundle("M", 5), bundle("N", -1));
    let first = CubeArrangement::stack(&back, &middle, 0);
    let second = CubeArrangement::stack(&middle, &front, 0);
    let glued = glue(&first, &second, 0)?;
    println!("gluing restores the square: {}", glued == k);
    println!(
        "delta is additive: {}",
        delta(&glued) == delta(&first).plus(&delta(&second))
    );

    // signs on a 4-cube over P^2
    let edges = [
        bundle("A", 1),
        bundle("B", 2),
        bundle("C", 3),
        bundle("D", 1),
    ];
    let k = standard_cube(&FormalObject::unit(), &edges);
    let graded = k.with_chi_grades(&p2)?;
    for (i, j) in [(0, 1), (0, 2), (1, 3)] {
        println!(
            "epsilon_{i}{j} = {:>2}, graded exchange = {:>2}",
            epsilon_ij(&k, i, j, &p2)?,
            graded_exchange_sign(&graded, i, j)?
        );
    }

    let doc = CubeDocument::from_arrangement(&standard_cube(&FormalObject::unit(), &edges[..2]));
    println!("{}", serde_json::to_string(&doc).expect("serializes"));
    Ok(())
}
