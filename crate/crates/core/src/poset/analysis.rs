use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::{PosetGraph, VertexId};
use crate::covering::{apply_leftmost, apply_leftmost_from, CoveringRelation};
use crate::error::{Error, Result};
use crate::limits::Caps;
use crate::path::{DyckPath, Step};
use crate::stats::{bkn_shape, stanley_code};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MissingBound {
    Meet,
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeWitness {
    pub p: DyckPath,
    pub q: DyckPath,
    pub missing: MissingBound,
    /// Maximal lower bounds (for a missing meet) or minimal upper bounds.
    pub bounds: Vec<DyckPath>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub pairs_checked: u64,
    pub witness: Option<LatticeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Irreducibles {
    /// Exactly one upper cover.
    pub meet_irreducible: Vec<DyckPath>,
    /// Exactly one lower cover.
    pub join_irreducible: Vec<DyckPath>,
    /// Both.
    pub doubly_irreducible: Vec<DyckPath>,
}

/// Comparable pairs `(P, Q)`, `P <= Q`, bucketed by the length of the final
/// down-run of `Q` and by whether `Q` is prime.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IntervalTable {
    pub total: u64,
    pub by_last_run: BTreeMap<usize, u64>,
    pub prime_total: u64,
    pub prime_by_last_run: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub diameter: usize,
    /// Lexicographically first pair at maximal distance.
    pub witness: (DyckPath, DyckPath),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeftmostCommutation {
    pub pairs_checked: u64,
    pub failures: Vec<(DyckPath, DyckPath)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeCharacterization {
    pub n: usize,
    pub relation: String,
    pub pairs_checked: u64,
    /// `P <= Q` but the code/shape condition fails.
    pub order_without_condition: u64,
    /// The condition holds but `P <= Q` fails.
    pub condition_without_order: u64,
    /// `P <= Q` but `c(P) <= c(Q)` fails componentwise.
    pub order_without_code_order: u64,
    pub holds: bool,
    pub witnesses_order_without_condition: Vec<(DyckPath, DyckPath)>,
    pub witnesses_condition_without_order: Vec<(DyckPath, DyckPath)>,
}

/// Outcome of checking commutativity, associativity and absorption of meet
/// and join on random triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeLawSample {
    pub seed: u64,
    pub triples_checked: usize,
    /// Triples for which some law failed or a bound was missing.
    pub failures: Vec<(DyckPath, DyckPath, DyckPath)>,
}

const MAX_WITNESSES: usize = 10;

impl PosetGraph {
    fn unique_element(&self, elems: Vec<DyckPath>, what: &str) -> Result<VertexId> {
        match elems.as_slice() {
            [one] => self.vertex(one),
            _ => Err(Error::BadInput(format!("graph has {} {what} elements", elems.len()))),
        }
    }

    pub fn bottom(&self) -> Result<DyckPath> {
        Ok(self.path(self.unique_element(self.minimal_elements(), "minimal")?))
    }

    pub fn top(&self) -> Result<DyckPath> {
        Ok(self.path(self.unique_element(self.maximal_elements(), "maximal")?))
    }

    /// Checks every unordered pair for a meet and a join. The witness is the
    /// first failing pair in lexicographic vertex order.
    pub fn certify_lattice(&self) -> Result<LatticeReport> {
        let count = self.vertex_count() as VertexId;
        // force the closure (and its cap check) before going parallel
        self.linear_order()?;
        let first_failure = (0..count)
            .into_par_iter()
            .map(|a| -> Result<Option<LatticeWitness>> {
                for b in a + 1..count {
                    if let Err(bounds) = self.meet_ids(a, b)? {
                        return Ok(Some(self.witness(a, b, MissingBound::Meet, bounds)));
                    }
                    if let Err(bounds) = self.join_ids(a, b)? {
                        return Ok(Some(self.witness(a, b, MissingBound::Join, bounds)));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        let c = count as u64;
        Ok(LatticeReport {
            is_lattice: first_failure.is_none(),
            pairs_checked: c * c.saturating_sub(1) / 2,
            witness: first_failure,
        })
    }

    fn witness(&self, a: VertexId, b: VertexId, missing: MissingBound, bounds: Vec<VertexId>) -> LatticeWitness {
        LatticeWitness {
            p: self.path(a),
            q: self.path(b),
            missing,
            bounds: bounds.into_iter().map(|v| self.path(v)).collect(),
        }
    }

    pub fn irreducibles(&self) -> Irreducibles {
        let pick = |f: &dyn Fn(usize) -> bool| -> Vec<DyckPath> {
            (0..self.vertex_count()).filter(|&v| f(v)).map(|v| self.vertices[v]).collect()
        };
        Irreducibles {
            meet_irreducible: pick(&|v| self.up_edges[v].len() == 1),
            join_irreducible: pick(&|v| self.down_edges[v].len() == 1),
            doubly_irreducible: pick(&|v| self.up_edges[v].len() == 1 && self.down_edges[v].len() == 1),
        }
    }

    pub fn count_intervals(&self) -> Result<IntervalTable> {
        let mut table = IntervalTable::default();
        for v in 0..self.vertex_count() as VertexId {
            let q = self.path(v);
            let below = self.down_set_size(v)?;
            let k = q.final_descent();
            table.total += below;
            *table.by_last_run.entry(k).or_default() += below;
            if q.is_prime() {
                table.prime_total += below;
                *table.prime_by_last_run.entry(k).or_default() += below;
            }
        }
        Ok(table)
    }

    /// Möbius function from the bottom element: `mu(bottom) = 1` and
    /// `sum_{Q <= P} mu(Q) = 0` for every other `P`.
    pub fn mobius(&self) -> Result<BTreeMap<DyckPath, i64>> {
        let bottom = self.vertex(&self.bottom()?)?;
        let mut mu = vec![0i64; self.vertex_count()];
        for &v in self.linear_order()? {
            if v == bottom {
                mu[v as usize] = 1;
                continue;
            }
            let below: i64 =
                self.down_set(v)?.into_iter().filter(|&w| w != v).map(|w| mu[w as usize]).sum();
            mu[v as usize] = -below;
        }
        Ok(self.vertices.iter().zip(mu).map(|(p, m)| (*p, m)).collect())
    }

    /// Same function obtained column by column from `Z * M = I`, where `Z` is
    /// the zeta matrix: `M(x, P) = -sum_{x < z <= P} M(z, P)`, then
    /// `mu(P) = M(bottom, P)`.
    pub fn mobius_via_zeta_inversion(&self) -> Result<BTreeMap<DyckPath, i64>> {
        let bottom = self.vertex(&self.bottom()?)?;
        let count = self.vertex_count();
        let mut out = BTreeMap::new();
        let mut col = vec![0i64; count];
        for target in 0..count as VertexId {
            let below = self.down_set(target)?;
            for &x in below.iter().rev() {
                col[x as usize] = if x == target {
                    1
                } else {
                    let mut acc = 0i64;
                    for &z in &below {
                        if z != x && self.leq_ids(x, z)? {
                            acc += col[z as usize];
                        }
                    }
                    -acc
                };
            }
            out.insert(self.path(target), col[bottom as usize]);
            for &x in &below {
                col[x as usize] = 0;
            }
        }
        Ok(out)
    }

    fn bfs_undirected(&self, src: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[src as usize] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize].unwrap();
            for &w in self.up_edges[v as usize].iter().chain(&self.down_edges[v as usize]) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path length in the undirected Hasse diagram; `None` when the
    /// two paths are disconnected.
    pub fn distance(&self, p: &DyckPath, q: &DyckPath) -> Result<Option<usize>> {
        let (a, b) = (self.vertex(p)?, self.vertex(q)?);
        Ok(self.bfs_undirected(a)[b as usize])
    }

    /// Exact diameter by BFS from every vertex.
    pub fn diameter(&self) -> Result<DiameterReport> {
        Caps::check_count("diameter", self.vertex_count(), self.caps.max_diameter_vertices)?;
        let per_source: Vec<(usize, VertexId, VertexId)> = (0..self.vertex_count() as VertexId)
            .into_par_iter()
            .map(|s| -> Result<(usize, VertexId, VertexId)> {
                let dist = self.bfs_undirected(s);
                let mut best = (0usize, s, s);
                for (t, d) in dist.iter().enumerate() {
                    let d = d.ok_or_else(|| Error::BadInput("Hasse diagram is disconnected".into()))?;
                    if d > best.0 {
                        best = (d, s, t as VertexId);
                    }
                }
                Ok(best)
            })
            .collect::<Result<_>>()?;
        let (d, s, t) = per_source
            .into_iter()
            .fold((0, 0, 0), |acc, cur| if cur.0 > acc.0 { cur } else { acc });
        Ok(DiameterReport { diameter: d, witness: (self.path(s), self.path(t)) })
    }

    /// A longest covering chain from the bottom to the top element. Ties are
    /// broken towards lexicographically smaller predecessors.
    pub fn longest_chain(&self) -> Result<Vec<DyckPath>> {
        let bottom = self.vertex(&self.bottom()?)?;
        let top = self.vertex(&self.top()?)?;
        let count = self.vertex_count();
        let mut best: Vec<Option<usize>> = vec![None; count];
        let mut parent: Vec<Option<VertexId>> = vec![None; count];
        best[bottom as usize] = Some(0);
        let order = super::linear_extension(&self.vertices);
        for &v in &order {
            let Some(d) = best[v as usize] else { continue };
            for &w in &self.up_edges[v as usize] {
                let better = match best[w as usize] {
                    None => true,
                    Some(cur) => d + 1 > cur || (d + 1 == cur && Some(v) < parent[w as usize]),
                };
                if better {
                    best[w as usize] = Some(d + 1);
                    parent[w as usize] = Some(v);
                }
            }
        }
        let mut chain = vec![self.path(top)];
        let mut cur = top;
        while let Some(p) = parent[cur as usize] {
            chain.push(self.path(p));
            cur = p;
        }
        chain.reverse();
        Ok(chain)
    }

    /// For every `P < Q` split as `P = R D S`, `Q = R U S'` at their first
    /// difference, applies the leftmost restricted move inside `D S` to get
    /// `W` and checks `W <= Q`.
    pub fn check_leftmost_commutation(&self) -> Result<LeftmostCommutation> {
        let mut report = LeftmostCommutation { pairs_checked: 0, failures: Vec::new() };
        for a in 0..self.vertex_count() as VertexId {
            for b in 0..self.vertex_count() as VertexId {
                if a == b || !self.leq_ids(a, b)? {
                    continue;
                }
                report.pairs_checked += 1;
                let (p, q) = (self.path(a), self.path(b));
                let split = (0..p.len()).find(|&i| p.step(i) != q.step(i)).expect("distinct paths");
                let ok = p.step(split) == Step::D
                    && match apply_leftmost_from(&p, split) {
                        Some(w) => self.leq(&w, &q)?,
                        None => false,
                    };
                if !ok {
                    report.failures.push((p, q));
                }
            }
        }
        Ok(report)
    }
}

impl PosetGraph {
    /// Draws `samples` triples with a seeded generator and checks the lattice
    /// laws on each. Deterministic for a fixed seed.
    pub fn sample_lattice_laws(&self, samples: usize, seed: u64) -> Result<LatticeLawSample> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let count = self.vertex_count();
        let mut report = LatticeLawSample { seed, triples_checked: 0, failures: Vec::new() };
        for _ in 0..samples {
            let [a, b, c] = [0; 3].map(|_| self.vertices[rng.gen_range(0..count)]);
            report.triples_checked += 1;
            if !self.laws_hold(a, b, c)? && report.failures.len() < MAX_WITNESSES {
                report.failures.push((a, b, c));
            }
        }
        Ok(report)
    }

    fn laws_hold(&self, a: DyckPath, b: DyckPath, c: DyckPath) -> Result<bool> {
        let join = |x: DyckPath, y: DyckPath| self.join(&x, &y).ok();
        let meet = |x: DyckPath, y: DyckPath| self.meet(&x, &y).ok();
        let check = || -> Option<bool> {
            Some(
                join(a, b)? == join(b, a)?
                    && meet(a, b)? == meet(b, a)?
                    && join(join(a, b)?, c)? == join(a, join(b, c)?)?
                    && meet(meet(a, b)?, c)? == meet(a, meet(b, c)?)?
                    && join(a, meet(a, b)?)? == a
                    && meet(a, join(a, b)?)? == a,
            )
        };
        Ok(check().unwrap_or(false))
    }
}

/// Iterates the leftmost restricted move from `(UD)^n` until it stops.
pub fn leftmost_orbit(n: usize) -> Vec<DyckPath> {
    let mut out = vec![DyckPath::sawtooth(n)];
    while let Some(next) = apply_leftmost(out.last().unwrap()) {
        out.push(next);
    }
    out
}

/// Tests, over all ordered pairs of `D_n`, whether
/// `P <= Q  <=>  c(P) <= c(Q) componentwise and shape(Q) ⊆ shape(P)`.
pub fn check_code_characterization(g: &PosetGraph) -> Result<CodeCharacterization> {
    let codes: Vec<Vec<usize>> = g.vertices().iter().map(stanley_code).collect();
    let shapes: Vec<BTreeSet<usize>> = g.vertices().iter().map(bkn_shape).collect();
    let mut rep = CodeCharacterization {
        n: g.n(),
        relation: g.relation().to_string(),
        pairs_checked: 0,
        order_without_condition: 0,
        condition_without_order: 0,
        order_without_code_order: 0,
        holds: true,
        witnesses_order_without_condition: Vec::new(),
        witnesses_condition_without_order: Vec::new(),
    };
    let count = g.vertex_count();
    for a in 0..count {
        for b in 0..count {
            rep.pairs_checked += 1;
            let order = g.leq_ids(a as VertexId, b as VertexId)?;
            let code_le = codes[a].iter().zip(&codes[b]).all(|(x, y)| x <= y);
            let cond = code_le && shapes[b].is_subset(&shapes[a]);
            if order && !code_le {
                rep.order_without_code_order += 1;
            }
            if order && !cond {
                rep.order_without_condition += 1;
                if rep.witnesses_order_without_condition.len() < MAX_WITNESSES {
                    rep.witnesses_order_without_condition.push((g.path(a as VertexId), g.path(b as VertexId)));
                }
            }
            if cond && !order {
                rep.condition_without_order += 1;
                if rep.witnesses_condition_without_order.len() < MAX_WITNESSES {
                    rep.witnesses_condition_without_order.push((g.path(a as VertexId), g.path(b as VertexId)));
                }
            }
        }
    }
    rep.holds = rep.order_without_condition == 0 && rep.condition_without_order == 0;
    Ok(rep)
}

impl CodeCharacterization {
    pub fn for_relation(n: usize, rel: CoveringRelation) -> Result<Self> {
        check_code_characterization(&super::build_hasse(n, rel)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_hasse;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn restricted_lattice_small() {
        for n in 0..=6 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let rep = g.certify_lattice().unwrap();
            assert!(rep.is_lattice, "n = {n}: {:?}", rep.witness);
        }
    }

    #[test]
    fn udu_pattern_has_missing_meet() {
        let found = (1..=7).any(|n| {
            let g = build_hasse(n, CoveringRelation::pattern("UDU").unwrap()).unwrap();
            matches!(g.certify_lattice().unwrap().witness, Some(LatticeWitness { missing: MissingBound::Meet, .. }))
        });
        assert!(found);
    }

    #[test]
    fn irreducible_counts() {
        for n in 1..=9 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let irr = g.irreducibles();
            assert_eq!(irr.meet_irreducible.len(), (1 << (n - 1)) - 1);
            assert_eq!(irr.join_irreducible.len(), (1 << (n - 1)) - 1);
        }
        let doubly: Vec<usize> = (3..=6)
            .map(|n| build_hasse(n, CoveringRelation::Restricted).unwrap().irreducibles().doubly_irreducible.len())
            .collect();
        assert_eq!(doubly, vec![3, 2, 3, 5]);
        for n in 1..=8 {
            let irr = build_hasse(n, CoveringRelation::Tamari).unwrap().irreducibles();
            assert_eq!(irr.meet_irreducible.len(), n * (n - 1) / 2);
            assert_eq!(irr.join_irreducible.len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn interval_examples() {
        let totals: Vec<u64> =
            (1..=6).map(|n| build_hasse(n, CoveringRelation::Restricted).unwrap().count_intervals().unwrap().total).collect();
        assert_eq!(totals, vec![1, 3, 13, 67, 381, 2307]);
        let primes: Vec<u64> = (1..=6)
            .map(|n| build_hasse(n, CoveringRelation::Restricted).unwrap().count_intervals().unwrap().prime_total)
            .collect();
        assert_eq!(primes, vec![1, 2, 8, 40, 224, 1344]);
        let t3 = build_hasse(3, CoveringRelation::Restricted).unwrap().count_intervals().unwrap();
        // (5y^2 + 5y + 3) y
        assert_eq!(t3.by_last_run, [(1, 3), (2, 5), (3, 5)].into_iter().collect());
        for n in 1..=7 {
            let t = build_hasse(n, CoveringRelation::Restricted).unwrap().count_intervals().unwrap();
            assert_eq!(t.total, t.by_last_run.values().sum::<u64>());
            for (k, v) in &t.prime_by_last_run {
                assert!(*v <= t.by_last_run[k]);
            }
        }
    }

    #[test]
    fn interval_convolution_identity() {
        // total(n) = prime(n) + sum_{a + b = n} total(a) prime(b), a, b >= 1
        let tables: Vec<IntervalTable> = (0..=9)
            .map(|n| build_hasse(n, CoveringRelation::Restricted).unwrap().count_intervals().unwrap())
            .collect();
        for n in 2..=9 {
            let conv: u64 = (1..n).map(|a| tables[a].total * tables[n - a].prime_total).sum();
            assert_eq!(tables[n].total, tables[n].prime_total + conv, "n = {n}");
        }
    }

    #[test]
    fn mobius_s3_golden() {
        let g = build_hasse(3, CoveringRelation::Restricted).unwrap();
        let mu = g.mobius().unwrap();
        // By hand on the n = 3 diagram: UUDDUD and UDUUDD cover the bottom,
        // UUDUDD covers UUDDUD, the top covers UDUUDD and UUDUDD.
        let expected: BTreeMap<DyckPath, i64> = [
            ("UDUDUD", 1),
            ("UUDDUD", -1),
            ("UDUUDD", -1),
            ("UUDUDD", 0),
            ("UUUDDD", 1),
        ]
        .into_iter()
        .map(|(w, m)| (p(w), m))
        .collect();
        assert_eq!(mu, expected);
    }

    #[test]
    fn mobius_two_routes_agree() {
        for n in 0..=6 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let mu = g.mobius().unwrap();
            assert_eq!(mu, g.mobius_via_zeta_inversion().unwrap(), "n = {n}");
            for v in 0..g.vertex_count() as VertexId {
                let s: i64 = g.down_set(v).unwrap().iter().map(|w| mu[&g.path(*w)]).sum();
                assert_eq!(s, i64::from(g.path(v) == DyckPath::sawtooth(n)));
            }
        }
    }

    #[test]
    fn distances() {
        let g = build_hasse(3, CoveringRelation::Restricted).unwrap();
        // UDUDUD -> UDUUDD -> UUUDDD is shorter than the longest chain
        assert_eq!(g.distance(&DyckPath::sawtooth(3), &DyckPath::pyramid(3)).unwrap(), Some(2));
        assert_eq!(g.distance(&p("UUDDUD"), &p("UDUUDD")).unwrap(), Some(2));
        for q in g.vertices() {
            assert_eq!(g.distance(q, q).unwrap(), Some(0));
        }
        for n in 3..=7 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let d = g.diameter().unwrap();
            assert_eq!(d.diameter, 2 * n - 4, "n = {n}");
        }
    }

    #[test]
    fn longest_chain_is_leftmost_orbit() {
        for n in 0..=8 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let chain = g.longest_chain().unwrap();
            assert_eq!(chain.len() - 1, n * n.saturating_sub(1) / 2);
            assert_eq!(chain, leftmost_orbit(n));
        }
    }

    #[test]
    fn leftmost_commutation_small() {
        for n in 0..=6 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let rep = g.check_leftmost_commutation().unwrap();
            assert!(rep.failures.is_empty(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn characterization_report_n3() {
        for rel in [CoveringRelation::Tamari, CoveringRelation::Restricted] {
            let rep = CodeCharacterization::for_relation(3, rel).unwrap();
            assert_eq!(rep.pairs_checked, 25);
            // reflexive pairs always satisfy both sides
            assert!(rep
                .witnesses_order_without_condition
                .iter()
                .chain(&rep.witnesses_condition_without_order)
                .all(|(a, b)| a != b));
        }
        for n in 1..=7 {
            let rep = CodeCharacterization::for_relation(n, CoveringRelation::Tamari).unwrap();
            assert_eq!(rep.order_without_code_order, 0);
        }
    }

    #[test]
    fn lattice_laws_on_random_triples() {
        for n in [5, 7, 8] {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            let rep = g.sample_lattice_laws(300, 7).unwrap();
            assert_eq!(rep.triples_checked, 300);
            assert!(rep.failures.is_empty(), "{rep:?}");
            assert_eq!(rep, g.sample_lattice_laws(300, 7).unwrap());
        }
        let g = build_hasse(6, CoveringRelation::pattern("UDU").unwrap()).unwrap();
        assert!(!g.sample_lattice_laws(2000, 1).unwrap().failures.is_empty());
    }
}
