//! Dyck paths ordered by the restricted rotation `D U^k D^k -> U^k D^k D`,
//! the Tamari lattice for comparison, the statistic-swapping involution, and
//! exact truncated power series for the associated generating functions.
//!
//! Every enumerative identity in the crate has two routes: a closed form or
//! functional equation evaluated in [`series`], and an exhaustive count over
//! the Hasse diagrams built by [`poset`].

pub mod error;
pub mod limits;
pub mod numbers;
pub mod path;
pub mod stats;
pub mod covering;
pub mod poset;
pub mod involution;
pub mod series;
pub mod conjectures;

mod bitset;

pub use covering::{apply_leftmost, predecessors, successors, CoveringRelation};
pub use error::{Error, Result};
pub use limits::Caps;
pub use path::{enumerate_paths, parse_path, DyckPath, Step, StepWord};
pub use stats::{stat_s, stat_t, StatRecord};
pub use poset::{build_hasse, PosetGraph};
pub use involution::{PhiTable, PhiTables};
