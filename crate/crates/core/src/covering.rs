//! Covering moves on Dyck paths.
//!
//! Every relation here is a family of rotations `D U Q D -> U Q D D`, where
//! the `U` and the final `D` are a matched pair and `Q` is the Dyck factor
//! between them. The relations differ only in which `Q` are allowed:
//!
//! * [`CoveringRelation::Tamari`]: any `Q`;
//! * [`CoveringRelation::Restricted`]: `Q = U^{k-1} D^{k-1}`, which turns the
//!   rotation into `D U^k D^k -> U^k D^k D`;
//! * [`CoveringRelation::PatternAvoiding`]: `Q` avoids a consecutive pattern.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step, StepWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoveringRelation {
    Restricted,
    Tamari,
    PatternAvoiding(StepWord),
}

impl CoveringRelation {
    pub fn pattern(word: &str) -> Result<Self> {
        let w = StepWord::parse_word(word).map_err(|_| Error::BadPattern(word.to_string()))?;
        if w.is_empty() {
            return Err(Error::BadPattern(word.to_string()));
        }
        Ok(CoveringRelation::PatternAvoiding(w))
    }

    fn allows(&self, q: &StepWord) -> bool {
        match self {
            CoveringRelation::Tamari => true,
            CoveringRelation::Restricted => {
                // U^j D^j: all ones below all zeros
                let k = q.len() / 2;
                *q == DyckPath::pyramid(k).word()
            }
            CoveringRelation::PatternAvoiding(mu) => !q.contains_factor(mu),
        }
    }
}

impl fmt::Display for CoveringRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringRelation::Restricted => write!(f, "restricted"),
            CoveringRelation::Tamari => write!(f, "tamari"),
            CoveringRelation::PatternAvoiding(mu) => write!(f, "pattern:{mu}"),
        }
    }
}

impl FromStr for CoveringRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "restricted" => Ok(CoveringRelation::Restricted),
            "tamari" => Ok(CoveringRelation::Tamari),
            _ => match s.strip_prefix("pattern:") {
                Some(word) => CoveringRelation::pattern(word),
                None => Err(Error::BadInput(format!(
                    "unknown relation {s:?} (expected restricted, tamari or pattern:<UDWORD>)"
                ))),
            },
        }
    }
}

/// One applicable move: the down-step at `position` is lifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub position: usize,
    pub result: DyckPath,
}

/// Moves applicable to `path`, ordered by position.
pub fn moves(path: &DyckPath, rel: &CoveringRelation) -> Vec<Move> {
    let w = path.word();
    let len = path.len();
    let mut out = Vec::new();
    for i in 0..len.saturating_sub(1) {
        if w.step(i) != Step::D || w.step(i + 1) != Step::U {
            continue;
        }
        let j = path.matching_down(i + 1);
        let q = w.slice(i + 2, j);
        if !rel.allows(&q) {
            continue;
        }
        let mut r = w.slice(0, i);
        r.push(Step::U);
        r.append(q);
        r.push(Step::D);
        r.push(Step::D);
        r.append(w.slice(j + 1, len));
        out.push(Move { position: i, result: DyckPath::from_word_unchecked(r) });
    }
    out
}

fn sorted_unique(mut v: Vec<DyckPath>) -> Vec<DyckPath> {
    v.sort();
    v.dedup();
    v
}

/// Upper covers of `path`, sorted.
pub fn successors(path: &DyckPath, rel: &CoveringRelation) -> Vec<DyckPath> {
    sorted_unique(moves(path, rel).into_iter().map(|m| m.result).collect())
}

/// Lower covers of `path`, sorted. Each occurrence `U Q D D` (with the `U`
/// matched by the first `D`) is rotated back to `D U Q D`.
pub fn predecessors(path: &DyckPath, rel: &CoveringRelation) -> Vec<DyckPath> {
    let w = path.word();
    let len = path.len();
    let mut out = Vec::new();
    for u in 0..len {
        if w.step(u) != Step::U {
            continue;
        }
        let m = path.matching_down(u);
        if m + 1 >= len || w.step(m + 1) != Step::D {
            continue;
        }
        let q = w.slice(u + 1, m);
        if !rel.allows(&q) {
            continue;
        }
        let mut r = w.slice(0, u);
        r.push(Step::D);
        r.push(Step::U);
        r.append(q);
        r.push(Step::D);
        r.append(w.slice(m + 2, len));
        out.push(DyckPath::from_word_unchecked(r));
    }
    sorted_unique(out)
}

/// Restricted move at the leftmost occurrence of `D U^k D^k`.
pub fn apply_leftmost(path: &DyckPath) -> Option<DyckPath> {
    apply_leftmost_from(path, 0)
}

/// Restricted move at the leftmost occurrence whose initial down-step is at
/// index `start` or later.
pub fn apply_leftmost_from(path: &DyckPath, start: usize) -> Option<DyckPath> {
    moves(path, &CoveringRelation::Restricted)
        .into_iter()
        .find(|m| m.position >= start)
        .map(|m| m.result)
}
