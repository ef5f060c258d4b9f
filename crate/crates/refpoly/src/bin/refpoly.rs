use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use refpoly::cli::{
    self, Construction, OrderKind, Partner, PosetSide, RandomKind, RingVariant,
};
use refpoly::combinatorics::{Poset, SimpleGraph, SimplicialComplex};
use refpoly::limits::{Limits, DEFAULT_MAX_DIM};
use refpoly::toric::ToricConfig;

/// Exact invariants of lattice polytopes built from posets and graphs:
/// reflexivity, integer decomposition, δ-polynomials, and degree-truncated
/// toric certificates.
#[derive(Parser)]
#[command(name = "refpoly", version, about)]
struct Cli {
    /// Largest accepted ground set (defaults to 8, or 5 for `verify`)
    #[arg(long, global = true)]
    max_dim: Option<usize>,

    /// Bounding-box cell budget for lattice point enumeration
    #[arg(long, global = true, default_value_t = refpoly::limits::DEFAULT_BOX_BUDGET as u64)]
    budget: u64,

    /// Degree bound for the truncated toric computations
    #[arg(long, global = true, default_value_t = refpoly::limits::DEFAULT_DEGREE_BOUND)]
    degree_bound: usize,

    /// Seed for every randomized choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Variable order used by the toric computations
    #[arg(long, global = true, value_enum, default_value_t = OrderKind::Canonical)]
    order_variant: OrderKind,

    #[command(subcommand)]
    command: Command,
}

/// Instance selection shared by the polytope-level subcommands. JSON
/// arguments are taken inline when they start with `{` and read from a file
/// path otherwise.
#[derive(Args)]
struct InstanceArgs {
    /// Name echoed into the report
    #[arg(long, default_value = "instance")]
    label: String,

    /// Poset as `{"d":N,"covers":[[a,b],...]}` or a path
    #[arg(long)]
    poset: String,

    /// Graph as `{"d":N,"edges":[[a,b],...]}` or a path
    #[arg(long, conflicts_with = "complex")]
    graph: Option<String>,

    /// Simplicial complex as `{"d":N,"facets":[[...],...]}` or a path
    #[arg(long)]
    complex: Option<String>,

    #[arg(long, value_enum, default_value_t = Construction::Gamma)]
    construction: Construction,

    /// Use the order polytope or the chain polytope of the poset
    #[arg(long, value_enum, default_value_t = PosetSide::Order)]
    poset_side: PosetSide,
}

impl InstanceArgs {
    fn poset(&self) -> anyhow::Result<Poset> {
        Ok(cli::load_json("poset", &self.poset)?)
    }

    fn partner(&self) -> anyhow::Result<Partner> {
        match (&self.graph, &self.complex) {
            (Some(g), None) => Ok(Partner::Graph(cli::load_json::<SimpleGraph>("graph", g)?)),
            (None, Some(c)) => Ok(Partner::Complex(cli::load_json::<SimplicialComplex>(
                "complex", c,
            )?)),
            _ => bail!("exactly one of --graph or --complex is required"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reflexivity, decomposition property, δ-polynomial, and perfection of
    /// one instance, as a single JSON report
    Invariants(InstanceArgs),

    /// Randomized sweep of the claimed equivalences; exits nonzero if any
    /// check fails
    Verify {
        /// Number of random perfect instances
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },

    /// Reproducible random posets, perfect graphs, or flag complexes as JSON
    /// lines
    Random {
        #[arg(long, value_enum)]
        kind: RandomKind,

        /// Ground set size
        #[arg(long, short)]
        d: usize,

        #[arg(long, default_value_t = 1)]
        count: usize,
    },

    /// δ-polynomial of one instance
    Delta(InstanceArgs),

    /// Facet inequalities of one instance, with the reflexivity verdict
    Facets(InstanceArgs),

    /// Compare the claimed initial-ideal generators with the computed
    /// truncated initial ideal, the Hilbert counts with the Ehrhart counts,
    /// and the order ring with the chain ring; exits nonzero on mismatch
    GroebnerCheck {
        #[arg(long, default_value = "instance")]
        label: String,

        /// Poset as inline JSON or a path
        #[arg(long)]
        poset: String,

        /// Graph as inline JSON or a path (must be perfect)
        #[arg(long)]
        graph: String,

        #[arg(long, value_enum, default_value_t = RingVariant::Gamma)]
        construction: RingVariant,
    },
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let limits = Limits {
        max_dim: cli.max_dim.unwrap_or(DEFAULT_MAX_DIM),
        box_budget: cli.budget as u128,
        degree_bound: cli.degree_bound,
        ..Limits::default()
    };

    match &cli.command {
        Command::Invariants(args) => {
            let report = cli::cmd_invariants(
                &args.label,
                &args.poset()?,
                args.poset_side,
                &args.partner()?,
                args.construction,
                &limits,
            )?;
            println!("{}", serde_json::to_string(&report)?);
        }
        Command::Verify { trials } => {
            let max_dim = cli.max_dim.unwrap_or(5);
            let outcome = cli::cmd_verify(*trials, max_dim, cli.seed, &limits)?;
            for line in &outcome.lines {
                println!("{}", serde_json::to_string(line)?);
            }
            if outcome.violations > 0 {
                eprintln!("{} violated check(s)", outcome.violations);
                std::process::exit(1);
            }
        }
        Command::Random { kind, d, count } => {
            for value in cli::cmd_random(*kind, *d, *count, cli.seed, &limits)? {
                println!("{value}");
            }
        }
        Command::Delta(args) => {
            let report = cli::cmd_delta(
                &args.label,
                &args.poset()?,
                args.poset_side,
                &args.partner()?,
                args.construction,
                &limits,
            )?;
            println!("{}", serde_json::to_string(&report)?);
        }
        Command::Facets(args) => {
            let report = cli::cmd_facets(
                &args.label,
                &args.poset()?,
                args.poset_side,
                &args.partner()?,
                args.construction,
            )?;
            println!("{}", serde_json::to_string(&report)?);
        }
        Command::GroebnerCheck {
            label,
            poset,
            graph,
            construction,
        } => {
            let poset: Poset = cli::load_json("poset", poset)?;
            let graph: SimpleGraph = cli::load_json("graph", graph)?;
            let cfg = ToricConfig {
                degree_bound: cli.degree_bound,
                box_budget: cli.budget as u128,
                order: cli.order_variant.variant(cli.seed),
                ..ToricConfig::default()
            };
            let report = cli::cmd_groebner_check(label, &poset, &graph, *construction, &cfg)
                .context("groebner check failed")?;
            println!("{}", serde_json::to_string(&report)?);
            if !(report.groebner.matches && report.hilbert.matches && report.phi.matches) {
                eprintln!("claimed and computed data disagree");
                std::process::exit(1);
            }
        }
    }
    Ok(())
}
