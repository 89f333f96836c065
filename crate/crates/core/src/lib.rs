//! Rainbow antimagic colourings of graphs derived from paths, and a
//! threshold secret-sharing protocol that hands one share to each colour
//! class.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is pure
//! computation over small graphs; serialization, fixtures and the CLI live
//! in the `racnshare` companion crate.
//!
//! Layout:
//!
//! * [`graph`]: path, shadow, splitting and Mycielski constructions.
//! * [`labeling`]: the closed-form antimagic labelings and induced edge weights.
//! * [`rainbow`]: rainbow path search, connectivity checks and the exact RACN oracle.
//! * [`cover`]: minimum rainbow-path covers of the colour classes.
//! * [`formulas`]: closed-form share counts, participant counts and phase counts.
//! * [`gf256`] and [`sharing`]: byte-oriented threshold sharing.
//! * [`protocol`]: share distribution, phased reconstruction and dissemination rounds.

#![no_std]

extern crate alloc;

pub mod colors;
pub mod cover;
pub mod error;
pub mod formulas;
pub mod gf256;
pub mod graph;
pub mod labeling;
pub mod protocol;
pub mod rainbow;
pub mod sharing;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeKind, Family, Graph, Role, SchemeFamily, VertexId};
pub use labeling::{Labeling, WeightedColoring};

/// Upper bound on search-tree nodes visited by the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 200_000_000;

    pub const fn new(max_nodes: u64) -> Self {
        Self { max_nodes }
    }

    pub const fn unlimited() -> Self {
        Self { max_nodes: u64::MAX }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_NODES)
    }
}

/// Node counter charged against a [`SearchBudget`].
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self { used: 0, limit: budget.max_nodes }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { nodes: self.limit })
        } else {
            Ok(())
        }
    }
}
