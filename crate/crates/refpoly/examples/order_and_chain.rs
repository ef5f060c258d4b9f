//! Posets and their two classical 0/1 polytopes.
//!
//! Builds the order polytope (vertices = indicator vectors of order ideals)
//! and the chain polytope (vertices = indicator vectors of antichains) of a
//! small poset, walks through the transfer bijection between ideals and
//! antichains, and checks that the chain polytope coincides with the stable
//! set polytope of the comparability graph.
//!
//! Run with `cargo run --example order_and_chain`.

use refpoly::combinatorics::{Poset, Subset};
use refpoly::polytope::{chain_polytope, order_polytope, stable_set_polytope};

fn main() -> refpoly::Result<()> {
    // The "vee" poset on {1, 2, 3}: 1 < 2 and 1 < 3, with 2 and 3 incomparable.
    let p = Poset::from_covers(3, &[(1, 2), (1, 3)])?;
    println!("poset on {{1..3}} with cover relations {:?}", p.covers());

    let ideals = p.ideals();
    let antichains = p.antichains();
    println!("\norder ideals ({}):", ideals.len());
    for i in &ideals {
        println!("  {:?}", i.elems());
    }
    println!("antichains ({}):", antichains.len());
    for a in &antichains {
        println!("  {:?}", a.elems());
    }
    assert_eq!(ideals.len(), antichains.len());

    // The transfer bijection: an ideal maps to its set of maximal elements,
    // an antichain maps to the ideal it generates. The two maps are inverse.
    println!("\ntransfer bijection ideal -> max elements -> ideal:");
    for i in &ideals {
        let a = p.max_elements(i)?;
        let back = p.ideal_from_antichain(&a)?;
        println!("  {:?} -> {:?} -> {:?}", i.elems(), a.elems(), back.elems());
        assert_eq!(&back, i);
    }

    let o = order_polytope(&p);
    let c = chain_polytope(&p);
    println!("\norder polytope: {} vertices in R^{}", o.points().len(), o.ambient_dim());
    println!("chain polytope: {} vertices in R^{}", c.points().len(), c.ambient_dim());

    // Facets come from exact double-description enumeration.
    println!("\norder polytope facets (a . x <= b):");
    for f in o.facets()?.facets() {
        println!("  {:?} <= {}", f.normal, f.rhs);
    }

    // The chain polytope only sees which pairs are comparable, so it equals
    // the stable set polytope of the comparability graph.
    let g = p.comparability_graph();
    println!("\ncomparability graph edges: {:?}", g.edges());
    let q = stable_set_polytope(&g);
    assert_eq!(c, q);
    println!("chain polytope == stable set polytope of the comparability graph");

    // Both polytopes have one vertex per ideal/antichain, and the counts agree
    // even though the vertex coordinates differ for non-antichain ideals.
    let chain3 = Poset::chain(3);
    let o3 = order_polytope(&chain3);
    let c3 = chain_polytope(&chain3);
    println!(
        "\n3-chain: order polytope has {} vertices, chain polytope has {}",
        o3.points().len(),
        c3.points().len()
    );
    assert_eq!(o3.points().len(), c3.points().len());

    // is_ideal / is_antichain answer membership questions directly.
    let s = Subset::from_elems(3, &[2, 3])?;
    println!(
        "\n{{2,3}} in the vee poset: ideal? {}  antichain? {}",
        p.is_ideal(&s),
        p.is_antichain(&s)
    );

    Ok(())
}
