use num::BigUint;

use crate::error::{Error, Result};
use crate::numbers::catalan;

/// Size caps enforced by the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Largest path list `enumerate_paths` will materialize.
    pub max_paths: u64,
    /// Largest vertex count for a Hasse diagram.
    pub max_graph_vertices: u64,
    /// Largest vertex count for reachability bitsets (quadratic memory).
    pub max_closure_vertices: u64,
    /// Largest vertex count for all-pairs BFS.
    pub max_diameter_vertices: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_paths: 10_000_000,
            max_graph_vertices: 208_012,   // c_12
            max_closure_vertices: 16_796,  // c_10
            max_diameter_vertices: 4_862,  // c_9
        }
    }
}

impl Caps {
    /// Caps with every graph limit raised to the enumeration limit.
    pub fn unlimited() -> Self {
        Caps {
            max_paths: u64::MAX,
            max_graph_vertices: u64::MAX,
            max_closure_vertices: u64::MAX,
            max_diameter_vertices: u64::MAX,
        }
    }

    pub(crate) fn check_catalan(what: &'static str, n: usize, cap: u64) -> Result<()> {
        let count = catalan(n);
        if count > BigUint::from(cap) {
            let requested = u128::try_from(count).unwrap_or(u128::MAX);
            return Err(Error::ResourceLimit { what, requested, cap: cap as u128 });
        }
        Ok(())
    }

    pub(crate) fn check_count(what: &'static str, count: usize, cap: u64) -> Result<()> {
        if count as u64 > cap {
            return Err(Error::ResourceLimit { what, requested: count as u128, cap: cap as u128 });
        }
        Ok(())
    }
}
