//! The integer decomposition property and explicit undecomposable points.
//!
//! A lattice polytope P has the integer decomposition property (IDP) when
//! every lattice point of the dilate nP splits as a sum of n lattice points
//! of P. The lifted construction `conv((O_P x {1}) u (-Q_G x {-1}))` has the
//! IDP exactly when the graph is perfect; for imperfect graphs and for
//! non-flag complexes there are explicit witness points, reproduced here and
//! confirmed undecomposable by exhaustive search.
//!
//! Run with `cargo run --example idp_witnesses`.

use refpoly::combinatorics::{triangle_boundary, Poset, SimpleGraph};
use refpoly::ehrhart::{
    antihole_witness, decompose, is_idp, nonflag_witness, odd_hole_witness,
};
use refpoly::polytope::{complex_polytope, gamma, omega, order_polytope, stable_set_polytope};

fn main() -> refpoly::Result<()> {
    // Perfect instances pass the exhaustive check: every lattice point of
    // every relevant dilate decomposes.
    let p = Poset::from_covers(3, &[(1, 3), (2, 3)])?;
    let g = SimpleGraph::path(3)?;
    let lifted = omega(&order_polytope(&p), &stable_set_polytope(&g))?;
    let report = is_idp(&lifted)?;
    assert!(report.idp);
    println!(
        "lifted (vee poset, P3): IDP holds, heights checked: {:?}",
        report.checked_heights
    );

    // Odd hole: for C5 the point -(1,1,1,1,1,2) lies in 3 * lifted but is
    // not a sum of three lattice points, because a stable set of C5 has at
    // most two vertices.
    let c5 = SimpleGraph::cycle(5)?;
    let lifted5 = omega(
        &order_polytope(&Poset::antichain(5)),
        &stable_set_polytope(&c5),
    )?;
    let w = odd_hole_witness(&[1, 2, 3, 4, 5], 5);
    println!("\nC5 witness point {w:?} at height 3:");
    match decompose(&lifted5, &w, 3)? {
        None => println!("  no decomposition exists (exhaustive search)"),
        Some(parts) => unreachable!("unexpected decomposition {parts:?}"),
    }
    let report = is_idp(&lifted5)?;
    assert!(!report.idp);
    let found = report.witness.unwrap();
    println!(
        "  full IDP scan agrees: undecomposable point {:?} at height {}",
        found.point, found.n
    );

    // The same point truncated to the flat construction DOES decompose: the
    // flat polytope keeps reflexivity as its failure mode instead.
    let flat5 = gamma(
        &order_polytope(&Poset::antichain(5)),
        &stable_set_polytope(&c5),
    )?;
    let flat_w: Vec<i64> = w[..5].to_vec();
    if let Some(parts) = decompose(&flat5, &flat_w, 3)? {
        println!("  in the flat polytope {flat_w:?} = sum of {:?}", parts);
    }

    // Odd antihole: for the complement of C7 (here l = 3) the witness is
    // -(1,...,1,3) at height 4.
    let anti = SimpleGraph::cycle(7)?.complement();
    let lifted7 = omega(
        &order_polytope(&Poset::antichain(7)),
        &stable_set_polytope(&anti),
    )?;
    let w = antihole_witness(3, 7);
    println!("\ncomplement-of-C7 witness point {w:?} at height 4:");
    match decompose(&lifted7, &w, 4)? {
        None => println!("  no decomposition exists (exhaustive search)"),
        Some(parts) => unreachable!("unexpected decomposition {parts:?}"),
    }

    // Non-flag complex: the boundary of the triangle has minimal nonface
    // {1,2,3}, and -(1,1,1,1) already fails at height 2.
    let complex = triangle_boundary();
    let (flag, nonface) = complex.is_flag();
    assert!(!flag);
    let nonface = nonface.unwrap();
    println!(
        "\nboundary of the triangle is not flag, minimal nonface {:?}",
        nonface.elems()
    );
    let lifted3 = omega(
        &order_polytope(&Poset::antichain(3)),
        &complex_polytope(&complex),
    )?;
    let w = nonflag_witness(&nonface.elems(), 3);
    println!("witness point {w:?} at height 2:");
    match decompose(&lifted3, &w, 2)? {
        None => println!("  no decomposition exists (exhaustive search)"),
        Some(parts) => unreachable!("unexpected decomposition {parts:?}"),
    }

    // decompose is also useful affirmatively: it returns the parts.
    let hex = gamma(
        &order_polytope(&Poset::antichain(2)),
        &stable_set_polytope(&SimpleGraph::empty(2)),
    )?;
    let parts = decompose(&hex, &[2, 1], 2)?.unwrap();
    println!("\nin the hexagon, (2,1) = {:?} + {:?}", parts[0], parts[1]);

    Ok(())
}
