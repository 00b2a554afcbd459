//! Path statistics: the occurrence counts `s` and `t`, pyramids, Stanley codes
//! and BKN shapes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step, StepWord};

/// Number of occurrences of `D U^k D^k`, `k >= 1`.
///
/// The `U^k` of an occurrence is necessarily a whole ascent run preceded by a
/// down-step, so each such run contributes once when the following descent
/// run is at least as long.
pub fn stat_s(path: &DyckPath) -> usize {
    let runs = path.runs();
    runs.windows(3)
        .filter(|w| w[0].0 == Step::D && w[1].0 == Step::U && w[2].2 >= w[1].2)
        .count()
}

/// Number of occurrences of `U^k D^k D`, `k >= 1`.
///
/// Nested occurrences at one peak count separately: a peak with ascent `a`
/// and descent `b` contributes `min(a, b - 1)`.
pub fn stat_t(path: &DyckPath) -> usize {
    let runs = path.runs();
    runs.windows(2)
        .filter(|w| w[0].0 == Step::U)
        .map(|w| w[0].2.min(w[1].2 - 1))
        .sum()
}

/// A maximal factor `U^k D^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Pyramid {
    pub position: usize,
    pub up_len: usize,
    pub down_len: usize,
}

impl Pyramid {
    pub fn symmetric(&self) -> bool {
        self.up_len == self.down_len
    }
}

/// Pyramids left to right; there is exactly one per peak.
pub fn pyramid_profile(path: &DyckPath) -> Vec<Pyramid> {
    path.runs()
        .windows(2)
        .filter(|w| w[0].0 == Step::U)
        .map(|w| Pyramid { position: w[0].1, up_len: w[0].2, down_len: w[1].2 })
        .collect()
}

pub fn asym_pyramids(path: &DyckPath) -> usize {
    pyramid_profile(path).iter().filter(|p| !p.symmetric()).count()
}

/// Sum of `k` over symmetric pyramids `U^k D^k`.
pub fn sym_pyramid_weight_sum(path: &DyckPath) -> usize {
    pyramid_profile(path).iter().filter(|p| p.symmetric()).map(|p| p.up_len).sum()
}

/// `c_i` = number of up-steps before the `i`-th down-step.
pub fn stanley_code(path: &DyckPath) -> Vec<usize> {
    let mut ups = 0;
    let mut code = Vec::with_capacity(path.semilength());
    for s in path.steps() {
        match s {
            Step::U => ups += 1,
            Step::D => code.push(ups),
        }
    }
    code
}

/// Inverse of [`stanley_code`]. The code must satisfy `i <= c_i <= n`
/// (1-based) and be weakly increasing.
pub fn path_from_code(code: &[usize]) -> Result<DyckPath> {
    let n = code.len();
    let invalid = |reason: String| Error::InvalidCode { code: code.to_vec(), reason };
    for (i, &c) in code.iter().enumerate() {
        if c < i + 1 || c > n {
            return Err(invalid(format!("entry {} = {c} is outside [{}, {n}]", i + 1, i + 1)));
        }
        if i > 0 && code[i - 1] > c {
            return Err(invalid(format!("entries {} and {} decrease", i, i + 1)));
        }
    }
    if 2 * n > crate::path::MAX_STEPS {
        return Err(Error::TooLong { len: 2 * n, max: crate::path::MAX_STEPS });
    }
    let mut w = StepWord::empty();
    let mut ups = 0;
    for &c in code {
        w.extend_repeat(Step::U, c - ups);
        ups = c;
        w.push(Step::D);
    }
    w.into_path()
}

/// Number of up-steps before each peak.
pub fn bkn_shape(path: &DyckPath) -> BTreeSet<usize> {
    let mut ups = 0;
    let mut shape = BTreeSet::new();
    let mut prev = None;
    for s in path.steps() {
        match s {
            Step::U => ups += 1,
            Step::D if prev == Some(Step::U) => {
                shape.insert(ups);
            }
            Step::D => {}
        }
        prev = Some(s);
    }
    shape
}

/// Per-path bundle of statistics. Serializes as
/// `{path, n, s, t, stanley_code, bkn_shape, asym_pyramids, sym_pyramid_weight_sum}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub path: DyckPath,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub stanley_code: Vec<usize>,
    pub bkn_shape: BTreeSet<usize>,
    pub asym_pyramids: usize,
    pub sym_pyramid_weight_sum: usize,
}

impl StatRecord {
    pub fn of(path: &DyckPath) -> Self {
        StatRecord {
            path: *path,
            n: path.semilength(),
            s: stat_s(path),
            t: stat_t(path),
            stanley_code: stanley_code(path),
            bkn_shape: bkn_shape(path),
            asym_pyramids: asym_pyramids(path),
            sym_pyramid_weight_sum: sym_pyramid_weight_sum(path),
        }
    }
}
