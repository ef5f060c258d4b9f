//! Tunable budgets and size limits.

/// Largest ground set accepted by the exhaustive perfection search.
pub const DEFAULT_PERFECTION_LIMIT: usize = 14;

/// Largest ground set for full stable-set / face enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Ambient dimension cap for polytope constructions driven from the CLI.
pub const DEFAULT_MAX_DIM: usize = 8;

/// Bounding-box cell budget for lattice point enumeration.
pub const DEFAULT_BOX_BUDGET: u128 = 200_000_000;

/// Monomial enumeration budget for the degree-truncated toric computations.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 1_000_000;

/// Degree bound for truncated initial-ideal computations.
pub const DEFAULT_DEGREE_BOUND: usize = 3;

/// Runtime knobs collected in one place. `Default` gives the documented values.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Ambient dimension cap for CLI-driven constructions.
    pub max_dim: usize,
    /// Bounding-box cell budget for lattice point scans.
    pub box_budget: u128,
    /// Monomial enumeration budget for toric computations.
    pub monomial_budget: usize,
    /// Degree bound for truncated initial ideals.
    pub degree_bound: usize,
    /// Ground-set cap for the exhaustive perfection search.
    pub perfection_limit: usize,
    /// Extra dilation heights to test beyond the proven bound in `is_idp`.
    pub extra_idp_heights: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: DEFAULT_MAX_DIM,
            box_budget: DEFAULT_BOX_BUDGET,
            monomial_budget: DEFAULT_MONOMIAL_BUDGET,
            degree_bound: DEFAULT_DEGREE_BOUND,
            perfection_limit: DEFAULT_PERFECTION_LIMIT,
            extra_idp_heights: 0,
        }
    }
}
