//! Empirical checks: known sequences, and open statements about the lattice
//! that are tested exhaustively at small sizes and reported with witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::covering::CoveringRelation;
use crate::error::{Error, Result};
use crate::limits::Caps;
use crate::path::{enumerate_paths, DyckPath, StepWord};
use crate::poset::{build_hasse, build_hasse_capped, CodeCharacterization, LatticeWitness};
use crate::series::gf;

/// Reference prefixes, indexed from their first listed `n`.
pub const A000108: (usize, &[u64]) = (0, &[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
pub const A057552: (usize, &[u64]) = (2, &[1, 5, 20, 76, 286, 1078, 4081, 15521]);
pub const A052701: (usize, &[u64]) = (1, &[1, 2, 8, 40, 224, 1344, 8448, 54912, 366080]);
pub const A064062: (usize, &[u64]) = (1, &[1, 3, 13, 67, 381, 2307, 14589, 95235, 636925]);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub first_n: usize,
    pub expected: Vec<u64>,
    pub computed: Vec<u64>,
    pub matches: bool,
}

impl SequenceCheck {
    fn new(id: &'static str, description: &'static str, reference: (usize, &[u64]), computed: Vec<u64>) -> Self {
        let expected = reference.1[..computed.len().min(reference.1.len())].to_vec();
        let matches = computed.len() == expected.len() && computed == expected;
        SequenceCheck { id, description, first_n: reference.0, expected, computed, matches }
    }
}

/// Recomputes each reference sequence by exhaustive enumeration up to
/// semilength `n_max` (capped by the length of the stored prefix).
pub fn sequence_checks(n_max: usize) -> Result<Vec<SequenceCheck>> {
    let upto = |r: (usize, &[u64])| r.0..=n_max.min(r.0 + r.1.len() - 1);
    let paths: Vec<u64> =
        upto(A000108).map(|n| enumerate_paths(n).map(|v| v.len() as u64)).collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for n in upto(A057552) {
        edges.push(build_hasse(n, CoveringRelation::Restricted)?.edge_count() as u64);
    }
    let (mut prime, mut all) = (Vec::new(), Vec::new());
    for n in upto(A064062) {
        let t = build_hasse(n, CoveringRelation::Restricted)?.count_intervals()?;
        all.push(t.total);
        prime.push(t.prime_total);
    }
    Ok(vec![
        SequenceCheck::new("A000108", "Dyck paths of semilength n", A000108, paths),
        SequenceCheck::new("A057552", "covering relations", A057552, edges),
        SequenceCheck::new("A052701", "intervals with a prime upper path", A052701, prime),
        SequenceCheck::new("A064062", "intervals", A064062, all),
    ])
}

/// `UU(UD)^(n-2)DD`, the expected far end from `(UD)^n`.
pub fn diameter_partner(n: usize) -> DyckPath {
    DyckPath::sawtooth(n.saturating_sub(2)).lift().lift()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterRow {
    pub n: usize,
    pub diameter: usize,
    pub expected: usize,
    pub witness: (DyckPath, DyckPath),
    /// Distance between `(UD)^n` and `UU(UD)^(n-2)DD`.
    pub sawtooth_distance: usize,
    pub holds: bool,
}

pub fn diameter_rows(n_min: usize, n_max: usize, caps: &Caps) -> Result<Vec<DiameterRow>> {
    let mut rows = Vec::new();
    for n in n_min.max(3)..=n_max {
        let g = build_hasse_capped(n, CoveringRelation::Restricted, *caps)?;
        let d = g.diameter()?;
        let far = g.distance(&DyckPath::sawtooth(n), &diameter_partner(n))?.unwrap_or(usize::MAX);
        let expected = 2 * n - 4;
        rows.push(DiameterRow {
            n,
            diameter: d.diameter,
            expected,
            witness: d.witness,
            sawtooth_distance: far,
            holds: d.diameter == expected && far == expected,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternRow {
    pub pattern: String,
    pub n: usize,
    pub is_lattice: bool,
    pub witness: Option<LatticeWitness>,
    pub minimal_elements: Vec<DyckPath>,
    pub maximal_elements: Vec<DyckPath>,
}

pub fn pattern_rows(pattern: &StepWord, n_max: usize, caps: &Caps) -> Result<Vec<PatternRow>> {
    if pattern.is_empty() {
        return Err(Error::BadPattern(String::new()));
    }
    let rel = CoveringRelation::PatternAvoiding(*pattern);
    (1..=n_max)
        .map(|n| {
            let g = build_hasse_capped(n, rel, *caps)?;
            let report = g.certify_lattice()?;
            Ok(PatternRow {
                pattern: pattern.to_string(),
                n,
                is_lattice: report.is_lattice,
                witness: report.witness,
                minimal_elements: g.minimal_elements(),
                maximal_elements: g.maximal_elements(),
            })
        })
        .collect()
}

/// The patterns examined by default: `U`, `UU`, `UUU`, `UDU`, `UUDU`.
pub fn default_patterns() -> Vec<StepWord> {
    ["U", "UU", "UUU", "UDU", "UUDU"].iter().map(|w| StepWord::parse_word(w).expect("valid word")).collect()
}

/// One row per checked statement, plus the detailed tables behind them.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    /// Statement name -> whether it held on every size examined.
    pub verdicts: BTreeMap<String, bool>,
    pub diameter: Vec<DiameterRow>,
    pub quadratic_identity_order: usize,
    pub characterization: Vec<CodeCharacterization>,
    pub patterns: Vec<PatternRow>,
}

#[derive(Debug, Clone)]
pub struct ConjectureConfig {
    pub diameter_max: usize,
    pub series_order: usize,
    pub characterization_max: usize,
    pub pattern_max: usize,
    pub extra_patterns: Vec<StepWord>,
    pub caps: Caps,
}

impl Default for ConjectureConfig {
    fn default() -> Self {
        ConjectureConfig {
            diameter_max: 8,
            series_order: 12,
            characterization_max: 7,
            pattern_max: 7,
            extra_patterns: Vec::new(),
            caps: Caps::default(),
        }
    }
}

pub fn run_conjectures(cfg: &ConjectureConfig) -> Result<ConjectureReport> {
    let mut verdicts = BTreeMap::new();

    let diameter = diameter_rows(3, cfg.diameter_max, &cfg.caps)?;
    verdicts.insert(String::from("diameter_2n_minus_4"), diameter.iter().all(|r| r.holds));

    let j1 = gf::j1_series(cfg.series_order)?;
    let quad = j1.sub(&crate::series::Series::x(cfg.series_order)).sub(&j1.mul(&j1).scale_int(2));
    verdicts.insert(String::from("j_equals_x_plus_2j_squared"), quad.is_zero());

    let mut characterization = Vec::new();
    for rel in [CoveringRelation::Tamari, CoveringRelation::Restricted] {
        let mut all = true;
        for n in 1..=cfg.characterization_max {
            let c = CodeCharacterization::for_relation(n, rel)?;
            all &= c.holds;
            characterization.push(c);
        }
        verdicts.insert(format!("code_characterization_{rel}"), all);
    }

    let mut patterns = Vec::new();
    let mut seen = Vec::new();
    for mu in default_patterns().into_iter().chain(cfg.extra_patterns.iter().copied()) {
        if seen.contains(&mu) {
            continue;
        }
        seen.push(mu);
        let rows = pattern_rows(&mu, cfg.pattern_max, &cfg.caps)?;
        verdicts.insert(format!("pattern_{mu}_lattice"), rows.iter().all(|r| r.is_lattice));
        patterns.extend(rows);
    }

    Ok(ConjectureReport {
        verdicts,
        diameter,
        quadratic_identity_order: cfg.series_order,
        characterization,
        patterns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partner_shape() {
        assert_eq!(diameter_partner(3).to_string(), "UUUDDD");
        assert_eq!(diameter_partner(5).to_string(), "UUUDUDUDDD");
    }

    #[test]
    fn sequences_match() {
        for check in sequence_checks(7).unwrap() {
            assert!(check.matches, "{check:?}");
            assert!(!check.computed.is_empty());
        }
    }

    #[test]
    fn diameter_small() {
        let rows = diameter_rows(3, 6, &Caps::default()).unwrap();
        assert!(rows.iter().all(|r| r.holds), "{rows:?}");
    }

    #[test]
    fn udu_has_missing_meet() {
        let rows = pattern_rows(&StepWord::parse_word("UDU").unwrap(), 6, &Caps::default()).unwrap();
        let bad = rows.iter().find(|r| !r.is_lattice).expect("some size fails");
        assert!(bad.witness.is_some());
    }
}
