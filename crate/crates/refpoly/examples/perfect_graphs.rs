//! Perfect graph recognition with exact witnesses.
//!
//! By the strong perfect graph theorem a graph is perfect exactly when
//! neither it nor its complement contains an induced odd cycle of length at
//! least five. `perfection_witness` searches for such a cycle exhaustively
//! and returns it, so a non-perfect verdict is independently checkable.
//!
//! Run with `cargo run --example perfect_graphs`.

use refpoly::combinatorics::{validate_odd_hole, PerfectionWitness, Poset, SimpleGraph};

fn describe(name: &str, g: &SimpleGraph) -> refpoly::Result<()> {
    match g.perfection_witness()? {
        PerfectionWitness::Perfect => println!("{name}: perfect"),
        PerfectionWitness::OddHole(c) => {
            assert!(validate_odd_hole(g, &c));
            println!("{name}: odd hole {c:?}");
        }
        PerfectionWitness::OddAntihole(c) => {
            assert!(validate_odd_hole(&g.complement(), &c));
            println!("{name}: odd antihole {c:?} (a hole of the complement)");
        }
    }
    Ok(())
}

fn main() -> refpoly::Result<()> {
    // Small classics. Even cycles and paths are perfect; C5 is the smallest
    // imperfect graph and is self-complementary.
    describe("K4", &SimpleGraph::complete(4))?;
    describe("P5 (path)", &SimpleGraph::path(5)?)?;
    describe("C4", &SimpleGraph::cycle(4)?)?;
    describe("C5", &SimpleGraph::cycle(5)?)?;
    describe("C6", &SimpleGraph::cycle(6)?)?;
    describe("C7", &SimpleGraph::cycle(7)?)?;
    describe("complement of C7", &SimpleGraph::cycle(7)?.complement())?;

    // Perfection is closed under complement (weak perfect graph theorem),
    // so the witness kinds swap between a graph and its complement.
    let c7 = SimpleGraph::cycle(7)?;
    let w = c7.perfection_witness()?;
    let wc = c7.complement().perfection_witness()?;
    assert!(matches!(w, PerfectionWitness::OddHole(_)));
    assert!(matches!(wc, PerfectionWitness::OddAntihole(_)));
    println!("\nC7 has an odd hole; its complement reports the same cycle as an antihole");

    // Every comparability graph is perfect: the edges record the comparable
    // pairs of a poset, and odd chordless cycles cannot be oriented
    // transitively.
    println!();
    for (name, p) in [
        ("5-chain", Poset::chain(5)),
        ("5-antichain", Poset::antichain(5)),
        ("fence", Poset::from_covers(5, &[(1, 2), (3, 2), (3, 4), (5, 4)])?),
    ] {
        let g = p.comparability_graph();
        let w = g.perfection_witness()?;
        assert!(w.is_perfect());
        println!("comparability graph of the {name}: perfect");
    }

    // Stable sets are the faces of a simplicial complex (the independence
    // complex); for C5 the maximal stable sets are the five "diagonals".
    let c5 = SimpleGraph::cycle(5)?;
    let stables = c5.stable_sets();
    let maximal: Vec<Vec<usize>> = stables.facets().iter().map(|s| s.elems()).collect();
    println!("\nmaximal stable sets of C5: {maximal:?}");
    assert_eq!(maximal.len(), 5);

    Ok(())
}
