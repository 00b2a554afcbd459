//! The involution on Dyck paths that swaps the statistics `s` and `t`.
//!
//! The map is given by five rewriting rules on a subset `P1` of paths
//! (classified by the final ascent `a` and final descent `b`):
//!
//! | tag | shape                                           | image                                           |
//! |-----|-------------------------------------------------|-------------------------------------------------|
//! | i   | empty                                           | empty                                           |
//! | ii  | `U^k D^k`                                       | `(UD)^k`                                        |
//! | iii | `R U^k D^k`, `R` nonempty, `k >= 2`             | `phi(R)# (UD)^(k-1)`                            |
//! | iv  | `R_0 U R_1 .. U R_k U D^(k+1)`, `R_k` nonempty   | `phi(R_0) U phi(R_1) .. U phi(R_k) U D^(k+1)`   |
//! | v   | `R_0 U .. U R_k U^(r+1) D^(k+r+1)`, `r >= 1`     | `phi(R_0) U .. U phi(R_k) U D^(k+1) (UD)^r`     |
//!
//! where `X#` inserts a `UD` on the last peak of `X`. Paths outside `P1` are
//! mapped by inverting the rule images. Tables are built one semilength at a
//! time so that collisions or gaps in the rule images surface as
//! [`Error::ConstructionFailure`] instead of being patched.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{enumerate_paths, DyckPath, Step, StepWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Inverse,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::I => "i",
            CaseTag::Ii => "ii",
            CaseTag::Iii => "iii",
            CaseTag::Iv => "iv",
            CaseTag::V => "v",
            CaseTag::Inverse => "inverse",
        };
        f.write_str(s)
    }
}

/// Decomposition of a path of `P1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum P1Class {
    Empty,
    Pyramid { k: usize },
    PyramidSuffix { prefix: DyckPath, k: usize },
    /// `R_0 U R_1 .. U R_k U D^(k+1)`; `parts = [R_0, .., R_k]`.
    TailOne { parts: Vec<DyckPath> },
    /// `R_0 U R_1 .. U R_k U^(r+1) D^(k+r+1)`.
    TailPyramid { parts: Vec<DyckPath>, r: usize },
}

impl P1Class {
    pub fn tag(&self) -> CaseTag {
        match self {
            P1Class::Empty => CaseTag::I,
            P1Class::Pyramid { .. } => CaseTag::Ii,
            P1Class::PyramidSuffix { .. } => CaseTag::Iii,
            P1Class::TailOne { .. } => CaseTag::Iv,
            P1Class::TailPyramid { .. } => CaseTag::V,
        }
    }
}

/// Splits a prefix that ends at height `k` into `R_0 U R_1 .. U R_k`, where
/// each displayed `U` is the last up-step leaving its level.
fn split_at_last_departures(prefix: StepWord, k: usize) -> Vec<DyckPath> {
    let mut heights = vec![0usize];
    for s in prefix.steps() {
        let h = *heights.last().unwrap();
        heights.push(if s == Step::U { h + 1 } else { h - 1 });
    }
    debug_assert_eq!(*heights.last().unwrap(), k);
    let mut parts = Vec::with_capacity(k + 1);
    let mut start = 0;
    for level in 0..k {
        let last = (0..heights.len()).rev().find(|&i| heights[i] == level).unwrap();
        parts.push(DyckPath::from_word_unchecked(prefix.slice(start, last)));
        start = last + 1;
    }
    parts.push(DyckPath::from_word_unchecked(prefix.slice(start, prefix.len())));
    parts
}

/// Classifies `path` into one of the rule shapes, or `None` outside `P1`.
pub fn classify_p1(path: &DyckPath) -> Option<P1Class> {
    if path.is_empty() {
        return Some(P1Class::Empty);
    }
    let b = path.final_descent();
    let a = path.final_ascent();
    let n = path.semilength();
    let w = path.word();
    if a == b && a == n {
        return Some(P1Class::Pyramid { k: n });
    }
    if a == b && a >= 2 {
        let prefix = DyckPath::from_word_unchecked(w.slice(0, path.len() - 2 * a));
        return Some(P1Class::PyramidSuffix { prefix, k: a });
    }
    if b > a && b >= 2 {
        let k = b - a;
        let parts = split_at_last_departures(w.slice(0, path.len() - a - b), k);
        return Some(if a == 1 { P1Class::TailOne { parts } } else { P1Class::TailPyramid { parts, r: a - 1 } });
    }
    None
}

/// Whether the path ends with `D U D^k`, `k >= 2`.
pub fn in_d1(path: &DyckPath) -> bool {
    !path.is_empty() && path.final_ascent() == 1 && path.final_descent() >= 2
}

/// `R' U D^k -> R' U U D D^k`.
pub fn sharp(path: &DyckPath) -> Result<DyckPath> {
    if path.is_empty() {
        return Err(Error::BadShape(String::from("ε")));
    }
    let b = path.final_descent();
    let w = path.word();
    let mut out = w.slice(0, path.len() - b);
    out.push(Step::U);
    out.push(Step::D);
    out.append(w.slice(path.len() - b, path.len()));
    Ok(DyckPath::from_word_unchecked(out))
}

/// Involution table for one semilength.
#[derive(Debug, Clone)]
pub struct PhiTable {
    n: usize,
    forward: BTreeMap<DyckPath, DyckPath>,
    case_tag: BTreeMap<DyckPath, CaseTag>,
}

impl PhiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: &DyckPath) -> Option<DyckPath> {
        self.forward.get(p).copied()
    }

    pub fn tag(&self, p: &DyckPath) -> Option<CaseTag> {
        self.case_tag.get(p).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (DyckPath, DyckPath, CaseTag)> + '_ {
        self.forward.iter().map(|(p, q)| (*p, *q, self.case_tag[p]))
    }

    /// `word TAB image TAB tag` lines, sorted by word.
    pub fn dump(&self) -> String {
        self.iter().map(|(p, q, t)| format!("{p}\t{q}\t{t}\n")).collect()
    }
}

/// Tables for every semilength `0..=n_max`.
#[derive(Debug, Clone, Default)]
pub struct PhiTables {
    tables: Vec<PhiTable>,
}

impl PhiTables {
    pub fn build(n_max: usize) -> Result<Self> {
        let mut out = PhiTables { tables: Vec::with_capacity(n_max + 1) };
        for n in 0..=n_max {
            let t = out.build_next(n)?;
            out.tables.push(t);
        }
        Ok(out)
    }

    pub fn n_max(&self) -> usize {
        self.tables.len().saturating_sub(1)
    }

    pub fn table(&self, n: usize) -> Result<&PhiTable> {
        self.tables.get(n).ok_or(Error::TableMissing(n))
    }

    pub fn phi(&self, p: &DyckPath) -> Result<DyckPath> {
        let t = self.table(p.semilength())?;
        Ok(t.get(p).expect("tables are total"))
    }

    fn lookup(&self, p: &DyckPath) -> DyckPath {
        self.tables[p.semilength()].forward[p]
    }

    /// Image of a `P1` path under the rules; components are strictly smaller.
    pub fn rule_image(&self, class: &P1Class) -> Result<DyckPath> {
        let tail = |parts: &[DyckPath]| {
            let mut w = StepWord::empty();
            for (i, part) in parts.iter().enumerate() {
                if i > 0 {
                    w.push(Step::U);
                }
                w.append(self.lookup(part).word());
            }
            w.push(Step::U);
            w.extend_repeat(Step::D, parts.len());
            w
        };
        Ok(match class {
            P1Class::Empty => DyckPath::empty(),
            P1Class::Pyramid { k } => DyckPath::sawtooth(*k),
            P1Class::PyramidSuffix { prefix, k } => sharp(&self.lookup(prefix))?.concat(&DyckPath::sawtooth(k - 1)),
            P1Class::TailOne { parts } => DyckPath::from_word_unchecked(tail(parts)),
            P1Class::TailPyramid { parts, r } => {
                DyckPath::from_word_unchecked(tail(parts)).concat(&DyckPath::sawtooth(*r))
            }
        })
    }

    fn build_next(&self, n: usize) -> Result<PhiTable> {
        let fail = |detail: String| Error::ConstructionFailure { n, detail };
        let paths = enumerate_paths(n)?;
        let mut rule: BTreeMap<DyckPath, (DyckPath, CaseTag)> = BTreeMap::new();
        for p in &paths {
            if let Some(class) = classify_p1(p) {
                rule.insert(*p, (self.rule_image(&class)?, class.tag()));
            }
        }
        let mut forward = BTreeMap::new();
        let mut case_tag = BTreeMap::new();
        for (p, (img, tag)) in &rule {
            forward.insert(*p, *img);
            case_tag.insert(*p, *tag);
        }
        let mut images: BTreeMap<DyckPath, DyckPath> = BTreeMap::new();
        for (p, (img, _)) in &rule {
            if let Some(prev) = images.insert(*img, *p) {
                return Err(fail(format!("{prev} and {p} both map to {img}")));
            }
            match rule.get(img) {
                Some((back, _)) if back != p => {
                    return Err(fail(format!("{p} -> {img} but the rule sends {img} to {back}")));
                }
                Some(_) => {}
                None => {
                    forward.insert(*img, *p);
                    case_tag.insert(*img, CaseTag::Inverse);
                }
            }
        }
        if let Some(p) = paths.iter().find(|p| !forward.contains_key(p)) {
            return Err(fail(format!("{p} is neither in P1 nor a rule image")));
        }
        Ok(PhiTable { n, forward, case_tag })
    }
}

/// How the rule images sit inside `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageStructure {
    pub n: usize,
    /// Rule images of `D1` paths are exactly the `D1` paths.
    pub d1_preserved: bool,
    /// `P1 \ D1` and its rule image are disjoint apart from fixed points and
    /// together make up `D_n \ D1`.
    pub complement_partitioned: bool,
}

pub fn image_structure(tables: &PhiTables, n: usize) -> Result<ImageStructure> {
    let table = tables.table(n)?;
    let paths = enumerate_paths(n)?;
    let d1: BTreeSet<DyckPath> = paths.iter().filter(|p| in_d1(p)).copied().collect();
    let p1_rest: BTreeSet<DyckPath> =
        paths.iter().filter(|p| !in_d1(p) && classify_p1(p).is_some()).copied().collect();
    let d1_images: BTreeSet<DyckPath> = d1.iter().map(|p| table.get(p).unwrap()).collect();
    let rest_images: BTreeSet<DyckPath> = p1_rest.iter().map(|p| table.get(p).unwrap()).collect();
    let fixed = p1_rest.intersection(&rest_images).all(|p| table.get(p) == Some(*p));
    let union: BTreeSet<DyckPath> = p1_rest.union(&rest_images).copied().collect();
    let non_d1: BTreeSet<DyckPath> = paths.iter().filter(|p| !in_d1(p)).copied().collect();
    Ok(ImageStructure { n, d1_preserved: d1_images == d1, complement_partitioned: fixed && union == non_d1 })
}

/// Failure counts for each property of the involution on `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiProperties {
    pub n: usize,
    pub paths: usize,
    pub bijective: bool,
    pub involution_failures: usize,
    pub semilength_failures: usize,
    pub statistic_failures: usize,
    pub asym_pyramid_failures: usize,
    pub sym_weight_failures: usize,
    pub d1_preserved: bool,
    pub complement_partitioned: bool,
    /// First path (in word order) whose symmetric-pyramid weight changes.
    pub sym_weight_witness: Option<(DyckPath, DyckPath)>,
}

impl PhiProperties {
    pub fn all_hold(&self) -> bool {
        self.bijective
            && self.involution_failures == 0
            && self.semilength_failures == 0
            && self.statistic_failures == 0
            && self.asym_pyramid_failures == 0
            && self.sym_weight_failures == 0
            && self.d1_preserved
            && self.complement_partitioned
    }
}

pub fn check_properties(tables: &PhiTables, n: usize) -> Result<PhiProperties> {
    use crate::stats::{asym_pyramids, stat_s, stat_t, sym_pyramid_weight_sum};
    let paths = enumerate_paths(n)?;
    let mut rep = PhiProperties {
        n,
        paths: paths.len(),
        bijective: false,
        involution_failures: 0,
        semilength_failures: 0,
        statistic_failures: 0,
        asym_pyramid_failures: 0,
        sym_weight_failures: 0,
        d1_preserved: false,
        complement_partitioned: false,
        sym_weight_witness: None,
    };
    let mut images = BTreeSet::new();
    for p in &paths {
        let q = tables.phi(p)?;
        images.insert(q);
        rep.semilength_failures += usize::from(q.semilength() != n);
        rep.involution_failures += usize::from(tables.phi(&q)? != *p);
        rep.statistic_failures += usize::from((stat_s(&q), stat_t(&q)) != (stat_t(p), stat_s(p)));
        rep.asym_pyramid_failures += usize::from(asym_pyramids(&q) != asym_pyramids(p));
        if sym_pyramid_weight_sum(&q) != sym_pyramid_weight_sum(p) {
            rep.sym_weight_failures += 1;
            rep.sym_weight_witness.get_or_insert((*p, q));
        }
    }
    rep.bijective = images.len() == paths.len();
    let structure = image_structure(tables, n)?;
    rep.d1_preserved = structure.d1_preserved;
    rep.complement_partitioned = structure.complement_partitioned;
    Ok(rep)
}
