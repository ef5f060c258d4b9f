//! Simple graphs, stable sets, and exhaustive perfect-graph recognition.

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_ground_set, SimplicialComplex, Subset};
use crate::limits::DEFAULT_PERFECTION_LIMIT;
use crate::{Error, Result};

/// A finite simple graph on vertices `{1..d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    d: usize,
    /// `adj[i]` is the 0-based neighbor bitmask of vertex `i+1`; no self-loops.
    adj: Vec<u32>,
}

/// Outcome of the exhaustive perfection search. Cycles are listed in traversal
/// order; an antihole cycle lives in the complement graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectionWitness {
    Perfect,
    OddHole(Vec<usize>),
    OddAntihole(Vec<usize>),
}

impl PerfectionWitness {
    pub fn is_perfect(&self) -> bool {
        matches!(self, PerfectionWitness::Perfect)
    }
}

impl SimpleGraph {
    pub fn from_edges(d: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_ground_set(d)?;
        let mut adj = vec![0u32; d];
        for &(a, b) in edges {
            if a == 0 || a > d || b == 0 || b > d {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) outside ground set 1..={d}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(SimpleGraph { d, adj })
    }

    /// The empty graph on `{1..d}`.
    pub fn empty(d: usize) -> Self {
        SimpleGraph::from_edges(d, &[]).expect("empty graph")
    }

    /// The complete graph on `{1..d}`.
    pub fn complete(d: usize) -> Self {
        SimpleGraph::empty(d).complement()
    }

    /// The cycle `1 - 2 - ... - d - 1`; requires `d >= 3`.
    pub fn cycle(d: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidInput("cycle needs at least 3 vertices".into()));
        }
        let mut edges: Vec<(usize, usize)> = (1..d).map(|i| (i, i + 1)).collect();
        edges.push((1, d));
        SimpleGraph::from_edges(d, &edges)
    }

    /// The path `1 - 2 - ... - d`.
    pub fn path(d: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..d).map(|i| (i, i + 1)).collect();
        SimpleGraph::from_edges(d, &edges)
    }

    pub fn ground_set_size(&self) -> usize {
        self.d
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a <= self.d
            && b <= self.d
            && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    /// Sorted edge list with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.d {
            for b in a + 1..=self.d {
                if self.is_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = Subset::full(self.d).bits();
        let adj = (0..self.d)
            .map(|i| (full & !self.adj[i]) & !(1 << i))
            .collect();
        SimpleGraph { d: self.d, adj }
    }

    /// Whether the subset spans no edge.
    pub fn is_stable(&self, s: &Subset) -> bool {
        s.elems().iter().all(|&e| self.adj[e - 1] & s.bits() == 0)
    }

    /// The stable sets of the graph, as a (flag) simplicial complex.
    pub fn stable_sets(&self) -> SimplicialComplex {
        let faces: Vec<Subset> = (0..(1u32 << self.d))
            .map(|bits| Subset::from_bits(self.d, bits))
            .filter(|s| self.is_stable(s))
            .collect();
        SimplicialComplex::from_faces_unchecked(self.d, faces)
    }

    /// Exhaustive perfection test with the default vertex cap.
    pub fn perfection_witness(&self) -> Result<PerfectionWitness> {
        self.perfection_witness_limited(DEFAULT_PERFECTION_LIMIT)
    }

    /// Exhaustive perfection test: searches for an induced odd cycle of length
    /// at least 5 in the graph, then in its complement. The first witness in
    /// (size, lexicographic vertex set) order is returned, so the result is
    /// deterministic.
    pub fn perfection_witness_limited(&self, limit: usize) -> Result<PerfectionWitness> {
        if self.d > limit {
            return Err(Error::SizeLimit {
                what: "perfection search ground set",
                required: self.d as u128,
                limit: limit as u128,
            });
        }
        if let Some(cycle) = self.find_odd_hole() {
            return Ok(PerfectionWitness::OddHole(cycle));
        }
        if let Some(cycle) = self.complement().find_odd_hole() {
            return Ok(PerfectionWitness::OddAntihole(cycle));
        }
        Ok(PerfectionWitness::Perfect)
    }

    /// Smallest induced odd cycle of length >= 5, as an ordered vertex walk
    /// starting at its minimum vertex and moving toward the smaller neighbor.
    fn find_odd_hole(&self) -> Option<Vec<usize>> {
        let mut size = 5;
        while size <= self.d {
            for subset in (1..=self.d).combinations(size) {
                if let Some(cycle) = self.induced_cycle_order(&subset) {
                    return Some(cycle);
                }
            }
            size += 2;
        }
        None
    }

    /// If the induced subgraph on `vertices` is a single cycle, returns the
    /// canonical traversal; otherwise `None`.
    fn induced_cycle_order(&self, vertices: &[usize]) -> Option<Vec<usize>> {
        let mask = Subset::from_elems(self.d, vertices).ok()?.bits();
        let mut nbrs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(vertices.len());
        for &v in vertices {
            let inside = self.adj[v - 1] & mask;
            if inside.count_ones() != 2 {
                return None;
            }
            let ns: Vec<usize> = (0..self.d)
                .filter(|&j| inside & (1 << j) != 0)
                .map(|j| j + 1)
                .collect();
            nbrs.push((v, ns));
        }
        // 2-regular: walk from the minimum vertex toward the smaller neighbor
        let start = *vertices.iter().min().unwrap();
        let first = {
            let ns = &nbrs.iter().find(|(v, _)| *v == start).unwrap().1;
            ns[0].min(ns[1])
        };
        let mut cycle = vec![start, first];
        loop {
            let cur = *cycle.last().unwrap();
            let prev = cycle[cycle.len() - 2];
            let ns = &nbrs.iter().find(|(v, _)| *v == cur).unwrap().1;
            let next = if ns[0] == prev { ns[1] } else { ns[0] };
            if next == start {
                break;
            }
            cycle.push(next);
            if cycle.len() > vertices.len() {
                return None; // unreachable for 2-regular graphs, defensive
            }
        }
        // connected iff the walk visited every vertex
        (cycle.len() == vertices.len()).then_some(cycle)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    d: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            d: self.d,
            edges: self.edges(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        SimpleGraph::from_edges(raw.d, &raw.edges).map_err(D::Error::custom)
    }
}

/// Validates that `cycle` really is an induced odd cycle of length >= 5 in `g`.
pub fn validate_odd_hole(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 5 || k % 2 == 0 {
        return false;
    }
    let distinct: std::collections::HashSet<_> = cycle.iter().collect();
    if distinct.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.is_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
