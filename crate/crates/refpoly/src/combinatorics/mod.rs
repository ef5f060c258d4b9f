//! Ground-set combinatorics: subsets, posets, simple graphs, simplicial complexes.
//!
//! Elements of the ground set are labelled `1..=d`. Subsets are stored as fixed
//! width bitmasks, which caps `d` at 31; constructors enforce the cap. All
//! enumerations return subsets sorted by cardinality and then lexicographically
//! by sorted element list, so downstream consumers are deterministic.

mod complex;
mod graph;
mod poset;

pub use complex::{triangle_boundary, SimplicialComplex};
pub use graph::{validate_odd_hole, PerfectionWitness, SimpleGraph};
pub use poset::Poset;

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Hard cap imposed by the bitmask representation.
pub const MAX_GROUND_SET: usize = 31;

pub(crate) fn check_ground_set(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidInput("ground set must be nonempty".into()));
    }
    if d > MAX_GROUND_SET {
        return Err(Error::InvalidInput(format!(
            "ground set size {d} exceeds the bitmask cap {MAX_GROUND_SET}"
        )));
    }
    Ok(())
}

/// A subset of the ground set `{1, ..., d}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    d: usize,
    bits: u32,
}

impl Subset {
    pub fn empty(d: usize) -> Self {
        Subset { d, bits: 0 }
    }

    pub fn full(d: usize) -> Self {
        Subset {
            d,
            bits: if d == 32 { u32::MAX } else { (1u32 << d) - 1 },
        }
    }

    pub(crate) fn from_bits(d: usize, bits: u32) -> Self {
        Subset { d, bits }
    }

    /// Builds a subset from 1-based element labels; rejects out-of-range labels.
    pub fn from_elems(d: usize, elems: &[usize]) -> Result<Self> {
        check_ground_set(d)?;
        let mut bits = 0u32;
        for &e in elems {
            if e == 0 || e > d {
                return Err(Error::InvalidInput(format!(
                    "element {e} outside ground set 1..={d}"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset { d, bits })
    }

    pub fn ground_set_size(&self) -> usize {
        self.d
    }

    pub(crate) fn bits(&self) -> u32 {
        self.bits
    }

    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.d && self.bits & (1 << (e - 1)) != 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    /// Strict containment.
    pub fn is_proper_subset_of(&self, other: &Subset) -> bool {
        self.bits != other.bits && self.is_subset_of(other)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            d: self.d,
            bits: self.bits & other.bits,
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            d: self.d,
            bits: self.bits | other.bits,
        }
    }

    pub fn without(&self, e: usize) -> Subset {
        Subset {
            d: self.d,
            bits: self.bits & !(1 << (e - 1)),
        }
    }

    pub fn with(&self, e: usize) -> Subset {
        Subset {
            d: self.d,
            bits: self.bits | (1 << (e - 1)),
        }
    }

    /// Sorted 1-based element labels.
    pub fn elems(&self) -> Vec<usize> {
        (1..=self.d).filter(|&e| self.contains(e)).collect()
    }

    /// 0/1 indicator vector of length `d`.
    pub fn indicator(&self) -> Vec<i64> {
        (1..=self.d)
            .map(|e| if self.contains(e) { 1 } else { 0 })
            .collect()
    }

    /// All subsets of `{1..d}` sorted by (cardinality, lexicographic elements).
    pub fn all(d: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..(1u32 << d)).map(|bits| Subset { d, bits }).collect();
        out.sort();
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.card()
            .cmp(&other.card())
            .then_with(|| self.elems().cmp(&other.elems()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
