//! Reflexivity of the signed constructions, with exact witnesses.
//!
//! A full-dimensional lattice polytope containing the origin in its interior
//! is reflexive when every facet inequality, written `a . x <= b` with `a`
//! primitive integral, has `b = 1` (equivalently: the dual polytope is again
//! a lattice polytope). For the flat construction
//! `conv(O_P u -Q_G)` this is governed entirely by the graph: it is
//! reflexive exactly when `G` is perfect, and for imperfect `G` a facet with
//! `b >= 2` is produced together with the generating points lying on it.
//!
//! Run with `cargo run --example reflexivity`.

use refpoly::combinatorics::{Poset, SimpleGraph};
use refpoly::polytope::{gamma, omega, order_polytope, stable_set_polytope};

fn main() -> refpoly::Result<()> {
    // Perfect side: any poset paired with any perfect graph works.
    let p = Poset::from_covers(4, &[(1, 2), (1, 3), (2, 4), (3, 4)])?;
    let diamond = order_polytope(&p);

    for (name, g) in [
        ("P4 (path)", SimpleGraph::path(4)?),
        ("C4 (even cycle)", SimpleGraph::cycle(4)?),
        ("K4 (complete)", SimpleGraph::complete(4)),
    ] {
        let q = stable_set_polytope(&g);
        let flat = gamma(&diamond, &q)?;
        let lifted = omega(&diamond, &q)?;
        let rf = flat.is_reflexive()?;
        let rl = lifted.is_reflexive()?;
        assert!(rf.reflexive && rl.reflexive);
        println!(
            "diamond poset with {name}: flat reflexive ({} facets), lifted reflexive ({} facets)",
            flat.facets()?.facets().len(),
            lifted.facets()?.facets().len()
        );
    }

    // Reflexivity means the dual polytope is integral; dual_polytope returns
    // its vertices as exact rationals, so integrality is directly visible.
    let q4 = stable_set_polytope(&SimpleGraph::cycle(4)?);
    let flat = gamma(&diamond, &q4)?;
    let dual = flat.dual_polytope()?;
    assert!(dual.iter().flatten().all(|c| c.is_integer()));
    println!("\ndual of the C4 instance has {} integral vertices", dual.len());

    // Imperfect side: the five-cycle. The verdict does not depend on the
    // poset, so take the antichain for readability.
    let c5 = SimpleGraph::cycle(5)?;
    let flat = gamma(
        &order_polytope(&Poset::antichain(5)),
        &stable_set_polytope(&c5),
    )?;
    let report = flat.is_reflexive()?;
    assert!(!report.reflexive);
    let w = report.witness.expect("non-reflexive verdicts carry a witness");
    println!("\nC5 flat construction is NOT reflexive");
    println!("witness facet: {:?} . x <= {}", w.facet.normal, w.facet.rhs);
    println!("points on that facet:");
    for p in &w.contact {
        println!("  {p:?}");
    }

    // The witness facet is spanned by the negated indicators of the five
    // maximal stable sets of C5, and its data satisfies the linear relation
    // floor(5/2) * sum(a_i) = -5 * b that pins down b = 2.
    let sum: i64 = w.facet.normal.iter().sum();
    assert_eq!(2 * sum, -5 * w.facet.rhs);
    assert_eq!(w.facet.rhs, 2);
    assert_eq!(w.contact.len(), 5);
    println!("facet satisfies 2 * sum(a) = -5 * b with b = 2");

    // The lifted construction does not lose reflexivity over an imperfect
    // graph; its failure mode is the integer decomposition property instead
    // (see the idp_witnesses example).
    let lifted = omega(
        &order_polytope(&Poset::antichain(5)),
        &stable_set_polytope(&c5),
    )?;
    assert!(lifted.is_reflexive()?.reflexive);
    println!("\nC5 lifted construction is still reflexive: its defect shows up in decompositions");

    Ok(())
}
