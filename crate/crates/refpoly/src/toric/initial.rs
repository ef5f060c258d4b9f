//! The fiber method for degree-truncated initial ideals, and the claimed
//! combinatorial generating set it is checked against.

use std::collections::{HashMap, HashSet};

use super::{Monomial, MonomialOrder, ToricModel, ToricVariant};
use crate::{Error, Result};

/// Minimal generators of the initial ideal up to a degree bound, plus the
/// count of standard monomials in each examined degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedInitialIdeal {
    pub degree_bound: usize,
    /// Sorted by exponent vector within ascending degree.
    pub generators: Vec<Monomial>,
    /// `standard_counts[n - 1]` is the number of standard monomials of
    /// degree `n`.
    pub standard_counts: Vec<u128>,
}

/// Computes the initial ideal of the toric ideal of the given variable
/// images, truncated at `degree_bound`, for the reverse lexicographic order.
///
/// All images carry a trailing homogenizing coordinate 1, so a monomial's
/// image determines its degree and fibers are degree-homogeneous. Degree by
/// degree, the monomials not divisible by an already-found generator are
/// grouped by image: the order-minimum of a fiber is the standard monomial of
/// that fiber and everything else is a new minimal generator. `budget` caps
/// the total number of monomials visited.
pub fn truncated_initial_ideal(
    images: &[Vec<i64>],
    order: &MonomialOrder,
    degree_bound: usize,
    budget: usize,
) -> Result<TruncatedInitialIdeal> {
    if images.is_empty() {
        return Err(Error::InvalidInput("need at least one variable".into()));
    }
    let dim = images[0].len();
    if images.iter().any(|im| im.len() != dim) {
        return Err(Error::InvalidInput("variable images of mixed dimension".into()));
    }
    let mut seen: HashSet<&[i64]> = HashSet::new();
    for im in images {
        if !seen.insert(im.as_slice()) {
            return Err(Error::InvalidInput(
                "variable images must be pairwise distinct".into(),
            ));
        }
    }

    let mut generators: Vec<Monomial> = Vec::new();
    let mut standard_counts = Vec::with_capacity(degree_bound);
    let mut enumerated = 0usize;
    for n in 1..=degree_bound {
        let mut fibers: HashMap<Vec<i64>, Vec<Monomial>> = HashMap::new();
        let mut exps = vec![0u8; images.len()];
        collect_candidates(
            0,
            n,
            images,
            &generators,
            &mut exps,
            &mut fibers,
            &mut enumerated,
            budget,
        )?;
        standard_counts.push(fibers.len() as u128);
        let mut fresh: Vec<Monomial> = Vec::new();
        for (_, fiber) in fibers {
            if fiber.len() == 1 {
                continue;
            }
            let min = fiber
                .iter()
                .enumerate()
                .min_by(|a, b| order.compare(a.1, b.1))
                .map(|(i, _)| i)
                .expect("fiber is nonempty");
            for (i, m) in fiber.into_iter().enumerate() {
                if i != min {
                    fresh.push(m);
                }
            }
        }
        fresh.sort();
        generators.extend(fresh);
    }
    Ok(TruncatedInitialIdeal {
        degree_bound,
        generators,
        standard_counts,
    })
}

#[allow(clippy::too_many_arguments)]
fn collect_candidates(
    var: usize,
    remaining: usize,
    images: &[Vec<i64>],
    generators: &[Monomial],
    exps: &mut Vec<u8>,
    fibers: &mut HashMap<Vec<i64>, Vec<Monomial>>,
    enumerated: &mut usize,
    budget: usize,
) -> Result<()> {
    if var == images.len() {
        if remaining > 0 {
            return Ok(());
        }
        *enumerated += 1;
        if *enumerated > budget {
            return Err(Error::MonomialBudget {
                enumerated: *enumerated,
                budget,
            });
        }
        let m = Monomial::from_exps(exps.clone());
        if generators.iter().any(|g| g.divides(&m)) {
            return Ok(());
        }
        fibers.entry(m.image(images)).or_default().push(m);
        return Ok(());
    }
    if var == images.len() - 1 {
        // closing the monomial in one step keeps the recursion shallow
        exps[var] = remaining as u8;
        collect_candidates(
            var + 1, 0, images, generators, exps, fibers, enumerated, budget,
        )?;
        exps[var] = 0;
        return Ok(());
    }
    for e in 0..=remaining {
        exps[var] = e as u8;
        collect_candidates(
            var + 1,
            remaining - e,
            images,
            generators,
            exps,
            fibers,
            enumerated,
            budget,
        )?;
    }
    exps[var] = 0;
    Ok(())
}

/// The combinatorially described generating set for the initial ideal of the
/// model's toric ideal: products of variables of incomparable ideals, mixed
/// products whose ideal has a maximal element inside the stable set, the
/// generators of the stable set subring's initial ideal (computed on the
/// restricted variables), and for the lifted variant the product of the two
/// empty-index variables.
pub fn claimed_generators(
    model: &ToricModel,
    order: &MonomialOrder,
    degree_bound: usize,
    budget: usize,
) -> Result<Vec<Monomial>> {
    if degree_bound < 2 {
        return Err(Error::InvalidInput(
            "the claimed generators start in degree 2".into(),
        ));
    }
    let v = model.var_count();
    let x0 = model.x_start();
    let mut gens: Vec<Monomial> = Vec::new();

    let ideals = model.ideals();
    for i in 0..ideals.len() {
        for j in i + 1..ideals.len() {
            if !ideals[i].is_subset_of(&ideals[j]) && !ideals[j].is_subset_of(&ideals[i]) {
                gens.push(Monomial::from_vars(&[x0 + i, x0 + j], v));
            }
        }
    }

    for (i, mx) in model.maxes().iter().enumerate() {
        for (j, s) in model.stables().iter().enumerate() {
            if !mx.intersection(s).is_empty() {
                gens.push(Monomial::from_vars(&[x0 + i, 1 + j], v));
            }
        }
    }

    if model.variant() == ToricVariant::Omega {
        debug_assert!(ideals[0].is_empty() && model.stables()[0].is_empty());
        gens.push(Monomial::from_vars(&[x0, 1], v));
    }

    let keep = model.stable_subring_vars();
    let sub_images: Vec<Vec<i64>> = keep.iter().map(|&i| model.images()[i].clone()).collect();
    let sub_order = order.restrict(&keep);
    let sub = truncated_initial_ideal(&sub_images, &sub_order, degree_bound, budget)?;
    for m in sub.generators {
        let mut exps = vec![0u8; v];
        for (si, &e) in m.exps().iter().enumerate() {
            exps[keep[si]] = e;
        }
        gens.push(Monomial::from_exps(exps));
    }

    gens.sort_by(|a, b| (a.degree(), a.exps()).cmp(&(b.degree(), b.exps())));
    gens.dedup();
    Ok(gens)
}
