//! Desk-scale certification: the claimed generator set against the computed
//! initial ideal, standard monomial counts against lattice point counts, and
//! the index-preserving isomorphism between the order and chain variants.

use serde::Serialize;

use super::{
    claimed_generators, truncated_initial_ideal, MonomialJson, ToricConfig, ToricModel,
    ToricVariant,
};
use crate::combinatorics::{PerfectionWitness, Poset, SimpleGraph};
use crate::ehrhart::lattice_points_with_budget;
use crate::polytope::{
    chain_polytope, gamma, omega, order_polytope, stable_set_polytope, LatticePolytope,
};
use crate::{Error, Result};

/// Comparison of the claimed generating set with the computed truncated
/// initial ideal. `missing` lists claimed generators the computation did not
/// produce, `extra` lists computed generators absent from the claim; the
/// claim holds on the examined degrees exactly when both are empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroebnerReport {
    pub variant: ToricVariant,
    pub degree_bound: usize,
    pub matches: bool,
    pub generator_count: usize,
    pub max_generator_degree: usize,
    pub squarefree: bool,
    pub standard_counts: Vec<u128>,
    pub generators: Vec<MonomialJson>,
    pub missing: Vec<MonomialJson>,
    pub extra: Vec<MonomialJson>,
}

/// Certifies the combinatorial description of the initial ideal for a
/// perfect graph, up to the configured degree. An imperfect graph is
/// rejected with its odd hole or antihole.
pub fn verify_groebner_claim(
    p: &Poset,
    g: &SimpleGraph,
    variant: ToricVariant,
    cfg: &ToricConfig,
) -> Result<GroebnerReport> {
    require_perfect(g, cfg.perfection_limit)?;
    let model = ToricModel::new(p, g, variant)?;
    let order = model.order(cfg.order);
    let computed =
        truncated_initial_ideal(model.images(), &order, cfg.degree_bound, cfg.monomial_budget)?;
    let claimed = claimed_generators(&model, &order, cfg.degree_bound, cfg.monomial_budget)?;

    let missing: Vec<MonomialJson> = claimed
        .iter()
        .filter(|m| !computed.generators.contains(m))
        .map(|m| model.monomial_json(m))
        .collect();
    let extra: Vec<MonomialJson> = computed
        .generators
        .iter()
        .filter(|m| !claimed.contains(m))
        .map(|m| model.monomial_json(m))
        .collect();
    Ok(GroebnerReport {
        variant,
        degree_bound: cfg.degree_bound,
        matches: missing.is_empty() && extra.is_empty(),
        generator_count: computed.generators.len(),
        max_generator_degree: computed
            .generators
            .iter()
            .map(|m| m.degree())
            .max()
            .unwrap_or(0),
        squarefree: computed.generators.iter().all(|m| m.is_squarefree()),
        standard_counts: computed.standard_counts,
        generators: computed
            .generators
            .iter()
            .map(|m| model.monomial_json(m))
            .collect(),
        missing,
        extra,
    })
}

/// One degree of the Hilbert comparison: standard monomials of that degree
/// against lattice points of the corresponding dilate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub degree: usize,
    pub standard_monomials: u128,
    pub lattice_points: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub variant: ToricVariant,
    pub matches: bool,
    pub rows: Vec<HilbertRow>,
}

/// The polytope whose lattice points index the model's variables.
pub fn variant_polytope(
    p: &Poset,
    g: &SimpleGraph,
    variant: ToricVariant,
) -> Result<LatticePolytope> {
    let q = stable_set_polytope(g);
    match variant {
        ToricVariant::Gamma => gamma(&order_polytope(p), &q),
        ToricVariant::Omega => omega(&order_polytope(p), &q),
        ToricVariant::ChainGamma => gamma(&chain_polytope(p), &q),
    }
}

/// Compares standard monomial counts with Ehrhart counts degree by degree.
/// Degree 1 in particular checks that the variables exhaust the lattice
/// points of the polytope. A mismatch at degree `n` exhibits a lattice point
/// of the `n`-th dilate that is not a sum of `n` variable images.
pub fn verify_hilbert_match(
    p: &Poset,
    g: &SimpleGraph,
    variant: ToricVariant,
    cfg: &ToricConfig,
) -> Result<HilbertReport> {
    let model = ToricModel::new(p, g, variant)?;
    let order = model.order(cfg.order);
    let ideal =
        truncated_initial_ideal(model.images(), &order, cfg.degree_bound, cfg.monomial_budget)?;
    let poly = variant_polytope(p, g, variant)?;
    let mut rows = Vec::with_capacity(cfg.degree_bound);
    for n in 1..=cfg.degree_bound {
        let lattice = lattice_points_with_budget(&poly, n as i64, cfg.box_budget)?.len() as u128;
        rows.push(HilbertRow {
            degree: n,
            standard_monomials: ideal.standard_counts[n - 1],
            lattice_points: lattice,
        });
    }
    Ok(HilbertReport {
        variant,
        matches: rows
            .iter()
            .all(|r| r.standard_monomials == r.lattice_points),
        rows,
    })
}

/// Result of comparing the order-polytope ring with the chain-polytope ring
/// under the variable bijection that relabels an ideal by its maximal
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub matches: bool,
    pub generator_count: usize,
    pub standard_counts: Vec<u128>,
}

/// Checks that the truncated initial ideals of the `Gamma` and `ChainGamma`
/// models agree as exponent sets under the index-preserving variable
/// bijection, and that their standard monomial counts coincide.
pub fn verify_phi_isomorphism(
    p: &Poset,
    g: &SimpleGraph,
    cfg: &ToricConfig,
) -> Result<PhiReport> {
    let order_model = ToricModel::new(p, g, ToricVariant::Gamma)?;
    let chain_model = ToricModel::new(p, g, ToricVariant::ChainGamma)?;
    debug_assert_eq!(order_model.maxes(), chain_model.maxes());
    let order_order = order_model.order(cfg.order);
    let chain_order = chain_model.order(cfg.order);
    let a = truncated_initial_ideal(
        order_model.images(),
        &order_order,
        cfg.degree_bound,
        cfg.monomial_budget,
    )?;
    let b = truncated_initial_ideal(
        chain_model.images(),
        &chain_order,
        cfg.degree_bound,
        cfg.monomial_budget,
    )?;
    Ok(PhiReport {
        matches: a.generators == b.generators && a.standard_counts == b.standard_counts,
        generator_count: a.generators.len(),
        standard_counts: a.standard_counts,
    })
}

fn require_perfect(g: &SimpleGraph, limit: usize) -> Result<()> {
    match g.perfection_witness_limited(limit)? {
        PerfectionWitness::Perfect => Ok(()),
        PerfectionWitness::OddHole(c) => Err(Error::NotPerfect {
            witness: format!("odd hole {c:?}"),
        }),
        PerfectionWitness::OddAntihole(c) => Err(Error::NotPerfect {
            witness: format!("odd antihole {c:?}"),
        }),
    }
}
