//! Reusable command implementations behind the thin binary: instance
//! loading, invariant reports, randomized theorem sweeps, and JSON shapes.

use std::time::Instant;

use clap::ValueEnum;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::combinatorics::{
    triangle_boundary, PerfectionWitness, Poset, SimpleGraph, SimplicialComplex,
};
use crate::ehrhart::{
    antihole_witness_on, decompose, delta_polynomial_with_budget, is_idp_with, nonflag_witness,
    odd_hole_witness, DeltaPolynomial, IdpReport,
};
use crate::limits::Limits;
use crate::polytope::{
    chain_polytope, complex_polytope, gamma, omega, order_polytope, stable_set_polytope, Facet,
    LatticePolytope, ReflexivityReport, ReflexivityWitness,
};
use crate::toric::{
    verify_groebner_claim, verify_hilbert_match, verify_phi_isomorphism, GroebnerReport,
    HilbertReport, OrderVariant, PhiReport, ToricConfig, ToricVariant,
};
use crate::{Error, Result};

/// Which paired polytope to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// `conv(A ∪ -B)` in the shared dimension.
    Gamma,
    /// `conv((A × 1) ∪ (-B × -1))`, one dimension up.
    Omega,
}

/// Which polytope represents the poset side of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PosetSide {
    Order,
    Chain,
}

/// Ring selection for the Gröbner check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingVariant {
    Gamma,
    Omega,
    ChainGamma,
}

impl RingVariant {
    pub fn toric(self) -> ToricVariant {
        match self {
            RingVariant::Gamma => ToricVariant::Gamma,
            RingVariant::Omega => ToricVariant::Omega,
            RingVariant::ChainGamma => ToricVariant::ChainGamma,
        }
    }
}

/// Monomial order family for the toric computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Canonical,
    Seeded,
}

impl OrderKind {
    pub fn variant(self, seed: u64) -> OrderVariant {
        match self {
            OrderKind::Canonical => OrderVariant::Canonical,
            OrderKind::Seeded => OrderVariant::Seeded(seed),
        }
    }
}

/// What the `random` subcommand generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RandomKind {
    Poset,
    PerfectGraph,
    FlagComplex,
}

/// The non-poset side of a pair.
#[derive(Debug, Clone)]
pub enum Partner {
    Graph(SimpleGraph),
    Complex(SimplicialComplex),
}

impl Partner {
    pub fn ground_set_size(&self) -> usize {
        match self {
            Partner::Graph(g) => g.ground_set_size(),
            Partner::Complex(c) => c.ground_set_size(),
        }
    }

    pub fn polytope(&self) -> LatticePolytope {
        match self {
            Partner::Graph(g) => stable_set_polytope(g),
            Partner::Complex(c) => complex_polytope(c),
        }
    }
}

/// Parses inline JSON (an argument starting with `{`) or reads it from the
/// given path.
pub fn load_json<T: DeserializeOwned>(what: &str, arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::InvalidInput(format!("cannot read {what} from {arg}: {e}")))?
    };
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("cannot parse {what}: {e}")))
}

/// Builds the requested paired polytope.
pub fn build_pair(
    poset: &Poset,
    side: PosetSide,
    partner: &Partner,
    construction: Construction,
) -> Result<LatticePolytope> {
    let a = match side {
        PosetSide::Order => order_polytope(poset),
        PosetSide::Chain => chain_polytope(poset),
    };
    let b = partner.polytope();
    match construction {
        Construction::Gamma => gamma(&a, &b),
        Construction::Omega => omega(&a, &b),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PerfectionJson {
    pub perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_kind: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
}

impl PerfectionJson {
    pub fn from_witness(w: &PerfectionWitness) -> Self {
        match w {
            PerfectionWitness::Perfect => PerfectionJson {
                perfect: true,
                witness_kind: None,
                cycle: None,
            },
            PerfectionWitness::OddHole(c) => PerfectionJson {
                perfect: false,
                witness_kind: Some("odd-hole"),
                cycle: Some(c.clone()),
            },
            PerfectionWitness::OddAntihole(c) => PerfectionJson {
                perfect: false,
                witness_kind: Some("odd-antihole"),
                cycle: Some(c.clone()),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagJson {
    pub flag: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_nonface: Option<Vec<usize>>,
}

/// Everything the `invariants` subcommand prints for one instance.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub label: String,
    pub construction: Construction,
    pub poset_side: PosetSide,
    pub ambient_dim: usize,
    pub generator_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_perfection: Option<PerfectionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex_flag: Option<FlagJson>,
    pub reflexive: ReflexivityReport,
    pub idp: IdpReport,
    pub delta: DeltaPolynomial,
    pub palindromic: bool,
    pub normalized_volume: u64,
    pub elapsed_ms: u128,
}

pub fn cmd_invariants(
    label: &str,
    poset: &Poset,
    side: PosetSide,
    partner: &Partner,
    construction: Construction,
    limits: &Limits,
) -> Result<InvariantsReport> {
    let start = Instant::now();
    let d = poset.ground_set_size();
    if d != partner.ground_set_size() {
        return Err(Error::DimensionMismatch {
            left: d,
            right: partner.ground_set_size(),
        });
    }
    if d > limits.max_dim {
        return Err(Error::SizeLimit {
            what: "ground set size",
            required: d as u128,
            limit: limits.max_dim as u128,
        });
    }
    let graph_perfection = match partner {
        Partner::Graph(g) => Some(PerfectionJson::from_witness(
            &g.perfection_witness_limited(limits.perfection_limit)?,
        )),
        Partner::Complex(_) => None,
    };
    let complex_flag = match partner {
        Partner::Complex(c) => {
            let (flag, witness) = c.is_flag();
            Some(FlagJson {
                flag,
                minimal_nonface: witness.map(|s| s.elems()),
            })
        }
        Partner::Graph(_) => None,
    };
    let poly = build_pair(poset, side, partner, construction)?;
    let reflexive = poly.is_reflexive()?;
    let idp = run_idp(&poly, limits)?;
    let delta = delta_polynomial_with_budget(&poly, limits.box_budget)?;
    let palindromic = delta.is_palindromic();
    let normalized_volume = delta
        .normalized_volume()
        .to_u64()
        .ok_or_else(|| Error::Overflow("storing the normalized volume".into()))?;
    Ok(InvariantsReport {
        label: label.to_string(),
        construction,
        poset_side: side,
        ambient_dim: poly.ambient_dim(),
        generator_points: poly.points().len(),
        graph_perfection,
        complex_flag,
        reflexive,
        idp,
        delta,
        palindromic,
        normalized_volume,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn run_idp(poly: &LatticePolytope, limits: &Limits) -> Result<IdpReport> {
    let top = std::cmp::max(2, poly.ambient_dim() as i64 - 1);
    let extra: Vec<i64> = (top + 1..=top + limits.extra_idp_heights as i64).collect();
    is_idp_with(poly, &extra, limits.box_budget)
}

/// One line of `verify` output.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyLine {
    pub label: String,
    pub check: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub lines: Vec<VerifyLine>,
    pub violations: usize,
}

/// A random poset on `{1..d}`: each numeric pair becomes a relation with
/// probability 2/5, then the covers close transitively.
pub fn random_poset(d: usize, rng: &mut ChaCha8Rng) -> Poset {
    let mut covers = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            if rng.gen_ratio(2, 5) {
                covers.push((i, j));
            }
        }
    }
    Poset::from_covers(d, &covers).expect("index-increasing relations are acyclic")
}

/// A uniformly random graph with edge probability 1/2.
pub fn random_graph(d: usize, rng: &mut ChaCha8Rng) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(d, &edges).expect("generated edges are valid")
}

/// Rejection-samples a perfect graph; falls back to a comparability graph
/// (always perfect) if sampling keeps failing.
pub fn random_perfect_graph(d: usize, rng: &mut ChaCha8Rng, limit: usize) -> Result<SimpleGraph> {
    for _ in 0..200 {
        let g = random_graph(d, rng);
        if g.perfection_witness_limited(limit)?.is_perfect() {
            return Ok(g);
        }
    }
    Ok(random_poset(d, rng).comparability_graph())
}

/// The flag complex of a random graph (its cliques are the stable sets of
/// the complement).
pub fn random_flag_complex(d: usize, rng: &mut ChaCha8Rng) -> SimplicialComplex {
    random_graph(d, rng).complement().stable_sets()
}

pub fn cmd_random(
    kind: RandomKind,
    d: usize,
    count: usize,
    seed: u64,
    limits: &Limits,
) -> Result<Vec<serde_json::Value>> {
    if d > limits.max_dim {
        return Err(Error::SizeLimit {
            what: "ground set size",
            required: d as u128,
            limit: limits.max_dim as u128,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let value = match kind {
            RandomKind::Poset => serde_json::to_value(random_poset(d, &mut rng)),
            RandomKind::PerfectGraph => {
                serde_json::to_value(random_perfect_graph(d, &mut rng, limits.perfection_limit)?)
            }
            RandomKind::FlagComplex => serde_json::to_value(random_flag_complex(d, &mut rng)),
        }
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
        out.push(value);
    }
    Ok(out)
}

struct Sweep {
    lines: Vec<VerifyLine>,
    violations: usize,
}

impl Sweep {
    fn record(&mut self, label: &str, check: &str, ok: bool, detail: String) {
        if !ok {
            self.violations += 1;
        }
        self.lines.push(VerifyLine {
            label: label.to_string(),
            check: check.to_string(),
            ok,
            detail,
        });
    }
}

/// Randomized sweep over the claimed equivalences: perfect instances must
/// give reflexive polytopes with the decomposition property and matching
/// δ-polynomials; for the bundled imperfect and non-flag instances the flat
/// construction must fail reflexivity with a checkable witness and the lifted
/// construction must carry an undecomposable point.
pub fn cmd_verify(trials: usize, max_dim: usize, seed: u64, limits: &Limits) -> Result<VerifyOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sweep = Sweep {
        lines: Vec::new(),
        violations: 0,
    };

    for t in 0..trials {
        let d = rng.gen_range(2..=max_dim.max(2));
        let p = random_poset(d, &mut rng);
        let g = random_perfect_graph(d, &mut rng, limits.perfection_limit)?;
        let label = format!("random-{t}-d{d}");
        check_perfect_pair(&mut sweep, &label, &p, &g, limits)?;
    }

    let c5 = SimpleGraph::cycle(5).unwrap();
    let c7 = SimpleGraph::cycle(7).unwrap();
    let anti7 = c7.complement();
    for (name, g) in [("c5", &c5), ("c7", &c7), ("c7-complement", &anti7)] {
        let d = g.ground_set_size();
        let p = random_poset(d, &mut rng);
        check_imperfect_pair(&mut sweep, name, &p, g, limits)?;
    }
    let p3 = random_poset(3, &mut rng);
    check_nonflag_pair(&mut sweep, "triangle-boundary", &p3, &triangle_boundary())?;

    Ok(VerifyOutcome {
        violations: sweep.violations,
        lines: sweep.lines,
    })
}

fn check_perfect_pair(
    sweep: &mut Sweep,
    label: &str,
    p: &Poset,
    g: &SimpleGraph,
    limits: &Limits,
) -> Result<()> {
    let partner = Partner::Graph(g.clone());
    let gamma_o = build_pair(p, PosetSide::Order, &partner, Construction::Gamma)?;
    let gamma_c = build_pair(p, PosetSide::Chain, &partner, Construction::Gamma)?;
    let omega_o = build_pair(p, PosetSide::Order, &partner, Construction::Omega)?;
    let omega_c = build_pair(p, PosetSide::Chain, &partner, Construction::Omega)?;

    for (name, poly) in [("gamma", &gamma_o), ("omega", &omega_o)] {
        let r = poly.is_reflexive()?;
        sweep.record(
            label,
            &format!("{name}-reflexive"),
            r.reflexive,
            format!("witness: {:?}", r.witness.as_ref().map(|w| &w.facet)),
        );
        let idp = run_idp(poly, limits)?;
        sweep.record(
            label,
            &format!("{name}-idp"),
            idp.idp,
            format!("witness: {:?}", idp.witness),
        );
    }

    let d_gamma_o = delta_polynomial_with_budget(&gamma_o, limits.box_budget)?;
    let d_gamma_c = delta_polynomial_with_budget(&gamma_c, limits.box_budget)?;
    let d_omega_o = delta_polynomial_with_budget(&omega_o, limits.box_budget)?;
    let d_omega_c = delta_polynomial_with_budget(&omega_c, limits.box_budget)?;
    sweep.record(
        label,
        "delta-gamma-order-vs-chain",
        d_gamma_o == d_gamma_c,
        format!("{:?} vs {:?}", d_gamma_o.coeffs(), d_gamma_c.coeffs()),
    );
    sweep.record(
        label,
        "delta-omega-order-vs-chain",
        d_omega_o == d_omega_c,
        format!("{:?} vs {:?}", d_omega_o.coeffs(), d_omega_c.coeffs()),
    );
    let lifted = d_gamma_o.times_one_plus_lambda();
    sweep.record(
        label,
        "delta-omega-is-lifted-gamma",
        d_omega_o == lifted,
        format!("{:?} vs {:?}", d_omega_o.coeffs(), lifted.coeffs()),
    );
    sweep.record(
        label,
        "delta-palindromic",
        d_gamma_o.is_palindromic() && d_omega_o.is_palindromic(),
        format!("gamma {:?}, omega {:?}", d_gamma_o.coeffs(), d_omega_o.coeffs()),
    );
    Ok(())
}

fn check_not_reflexive(
    sweep: &mut Sweep,
    label: &str,
    check: &str,
    poly: &LatticePolytope,
) -> Result<()> {
    let r = poly.is_reflexive()?;
    let ok = !r.reflexive && r.witness.as_ref().is_some_and(|w| w.facet.rhs >= 2);
    sweep.record(
        label,
        check,
        ok,
        format!("witness: {:?}", r.witness.map(|w| w.facet)),
    );
    Ok(())
}

fn check_undecomposable(
    sweep: &mut Sweep,
    label: &str,
    poly: &LatticePolytope,
    point: &[i64],
    height: i64,
) {
    let (ok, detail) = match decompose(poly, point, height) {
        Ok(None) => (true, format!("{point:?} has no height-{height} decomposition")),
        Ok(Some(parts)) => (false, format!("unexpected decomposition {parts:?}")),
        Err(e) => (false, format!("membership failed: {e}")),
    };
    sweep.record(label, "omega-witness-undecomposable", ok, detail);
}

fn check_imperfect_pair(
    sweep: &mut Sweep,
    label: &str,
    p: &Poset,
    g: &SimpleGraph,
    limits: &Limits,
) -> Result<()> {
    let partner = Partner::Graph(g.clone());
    let gamma_poly = build_pair(p, PosetSide::Order, &partner, Construction::Gamma)?;
    let omega_poly = build_pair(p, PosetSide::Order, &partner, Construction::Omega)?;
    check_not_reflexive(sweep, label, "gamma-not-reflexive", &gamma_poly)?;

    let d = g.ground_set_size();
    match g.perfection_witness_limited(limits.perfection_limit)? {
        PerfectionWitness::OddHole(c) => {
            check_undecomposable(sweep, label, &omega_poly, &odd_hole_witness(&c, d), 3);
        }
        PerfectionWitness::OddAntihole(c) => {
            let height = (c.len() as i64 - 1) / 2 + 1;
            check_undecomposable(
                sweep,
                label,
                &omega_poly,
                &antihole_witness_on(&c, d),
                height,
            );
        }
        PerfectionWitness::Perfect => {
            sweep.record(label, "expected-imperfect", false, "graph is perfect".into());
        }
    }
    Ok(())
}

fn check_nonflag_pair(
    sweep: &mut Sweep,
    label: &str,
    p: &Poset,
    complex: &SimplicialComplex,
) -> Result<()> {
    let partner = Partner::Complex(complex.clone());
    let (flag, witness) = complex.is_flag();
    sweep.record(
        label,
        "complex-not-flag",
        !flag,
        format!("minimal nonface: {witness:?}"),
    );
    let gamma_poly = build_pair(p, PosetSide::Order, &partner, Construction::Gamma)?;
    let omega_poly = build_pair(p, PosetSide::Order, &partner, Construction::Omega)?;
    check_not_reflexive(sweep, label, "gamma-not-reflexive", &gamma_poly)?;
    if let Some(nonface) = witness {
        let w = nonflag_witness(&nonface.elems(), complex.ground_set_size());
        check_undecomposable(sweep, label, &omega_poly, &w, 2);
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaReport {
    pub label: String,
    pub construction: Construction,
    pub poset_side: PosetSide,
    pub delta: DeltaPolynomial,
    pub degree: usize,
    pub palindromic: bool,
    pub normalized_volume: u64,
}

pub fn cmd_delta(
    label: &str,
    poset: &Poset,
    side: PosetSide,
    partner: &Partner,
    construction: Construction,
    limits: &Limits,
) -> Result<DeltaReport> {
    let poly = build_pair(poset, side, partner, construction)?;
    let delta = delta_polynomial_with_budget(&poly, limits.box_budget)?;
    Ok(DeltaReport {
        label: label.to_string(),
        construction,
        poset_side: side,
        degree: delta.degree(),
        palindromic: delta.is_palindromic(),
        normalized_volume: delta
            .normalized_volume()
            .to_u64()
            .ok_or_else(|| Error::Overflow("storing the normalized volume".into()))?,
        delta,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FacetsReport {
    pub label: String,
    pub ambient_dim: usize,
    pub facet_count: usize,
    pub reflexive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReflexivityWitness>,
    pub facets: Vec<Facet>,
}

pub fn cmd_facets(
    label: &str,
    poset: &Poset,
    side: PosetSide,
    partner: &Partner,
    construction: Construction,
) -> Result<FacetsReport> {
    let poly = build_pair(poset, side, partner, construction)?;
    let hrep = poly.facets()?;
    let report = poly.is_reflexive()?;
    Ok(FacetsReport {
        label: label.to_string(),
        ambient_dim: poly.ambient_dim(),
        facet_count: hrep.facets().len(),
        reflexive: report.reflexive,
        witness: report.witness,
        facets: hrep.facets().to_vec(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerCheckReport {
    pub label: String,
    pub groebner: GroebnerReport,
    pub hilbert: HilbertReport,
    pub phi: PhiReport,
}

pub fn cmd_groebner_check(
    label: &str,
    poset: &Poset,
    graph: &SimpleGraph,
    variant: RingVariant,
    cfg: &ToricConfig,
) -> Result<GroebnerCheckReport> {
    let toric = variant.toric();
    Ok(GroebnerCheckReport {
        label: label.to_string(),
        groebner: verify_groebner_claim(poset, graph, toric, cfg)?,
        hilbert: verify_hilbert_match(poset, graph, toric, cfg)?,
        phi: verify_phi_isomorphism(poset, graph, cfg)?,
    })
}
