//! Ehrhart δ-polynomials and the identities that tie the constructions together.
//!
//! The δ-polynomial (h*-polynomial) of a lattice polytope P of dimension d
//! packages the Ehrhart counts |nP ∩ Z^d| into d+1 nonnegative integers.
//! For the polytopes built here three identities hold whenever the graph is
//! perfect:
//!
//!   1. swapping the order polytope for the chain polytope preserves δ in
//!      the flat construction,
//!   2. the same swap preserves δ in the lifted construction,
//!   3. the lifted δ equals (1 + λ) times the flat δ.
//!
//! Reflexivity is visible here too: a polytope with the origin interior is
//! reflexive exactly when its δ-polynomial is palindromic.
//!
//! Run with `cargo run --example delta_identities`.

use refpoly::combinatorics::{Poset, SimpleGraph};
use refpoly::ehrhart::{delta_polynomial, lattice_points, oracle};
use refpoly::polytope::{chain_polytope, gamma, omega, order_polytope, stable_set_polytope};

fn main() -> refpoly::Result<()> {
    let p = Poset::from_covers(4, &[(1, 2), (2, 3), (1, 4)])?;
    let g = SimpleGraph::path(4)?;
    let (o, c, q) = (order_polytope(&p), chain_polytope(&p), stable_set_polytope(&g));

    let flat_o = delta_polynomial(&gamma(&o, &q)?)?;
    let flat_c = delta_polynomial(&gamma(&c, &q)?)?;
    let lift_o = delta_polynomial(&omega(&o, &q)?)?;
    let lift_c = delta_polynomial(&omega(&c, &q)?)?;

    println!("poset: covers {:?}, graph: P4", p.covers());
    println!("flat  delta (order variant): {:?}", flat_o.coeffs());
    println!("flat  delta (chain variant): {:?}", flat_c.coeffs());
    println!("lift  delta (order variant): {:?}", lift_o.coeffs());
    println!("lift  delta (chain variant): {:?}", lift_c.coeffs());

    // Identity 1 and 2: order/chain swap is invisible to delta.
    assert_eq!(flat_o, flat_c);
    assert_eq!(lift_o, lift_c);
    println!("\nswap identities hold");

    // Identity 3: lifting multiplies delta by (1 + lambda).
    assert_eq!(lift_o, flat_o.times_one_plus_lambda());
    println!("lifted delta = (1 + lambda) * flat delta");

    // Both polytopes are reflexive here, so both deltas are palindromic, and
    // the normalized volume is the coefficient sum.
    assert!(flat_o.is_palindromic() && lift_o.is_palindromic());
    println!(
        "palindromic; normalized volumes: flat {}, lifted {}",
        flat_o.normalized_volume(),
        lift_o.normalized_volume()
    );

    // The counts behind the scenes: delta is assembled from exact counts of
    // lattice points in the first d dilates. lattice_points enumerates them;
    // a slow independent full-box scan is kept around for cross-checking.
    let flat = gamma(&o, &q)?;
    print!("\nflat lattice point counts:");
    for n in 1..=4 {
        let fast = lattice_points(&flat, n)?.len() as u128;
        let slow = oracle::count_via_scan(&flat, n)?;
        assert_eq!(fast, slow);
        print!(" L({n}) = {fast}");
    }
    println!();

    // The smallest interesting instance by hand: the one-element poset with
    // the one-vertex graph gives the segment [-1, 1], delta (1, 1); lifting
    // gives a quadrilateral with delta (1, 2, 1).
    let p1 = Poset::chain(1);
    let g1 = SimpleGraph::empty(1);
    let seg = gamma(&order_polytope(&p1), &stable_set_polytope(&g1))?;
    let quad = omega(&order_polytope(&p1), &stable_set_polytope(&g1))?;
    let ds = delta_polynomial(&seg)?;
    let dq = delta_polynomial(&quad)?;
    println!(
        "\nsegment delta: {:?}, lifted segment delta: {:?}",
        ds.coeffs(),
        dq.coeffs()
    );
    assert_eq!(dq, ds.times_one_plus_lambda());

    Ok(())
}
