//! Hasse diagrams of `D_n` under a covering relation, and the order-theoretic
//! queries run on them.
//!
//! Vertices are stored in lexicographic path order. Reachability is kept as
//! two bit matrices (up-sets and down-sets) whose columns are positions in a
//! linear extension (increasing area, ties broken by vertex id). With that
//! layout the least element of any up-set intersection is its first set bit,
//! which turns a join query into one intersection plus one subset test.

mod analysis;
mod export;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::bitset::{self, BitMatrix};
use crate::covering::{successors, CoveringRelation};
use crate::error::{Error, Result};
use crate::limits::Caps;
use crate::path::{enumerate_paths_capped, DyckPath};

pub use analysis::{
    CodeCharacterization, DiameterReport, IntervalTable, Irreducibles, LatticeReport, LatticeWitness,
    LatticeLawSample, LeftmostCommutation, MissingBound, check_code_characterization, leftmost_orbit,
};
pub use export::{to_dot, to_json, GraphJson};

pub type VertexId = u32;

pub struct PosetGraph {
    n: usize,
    relation: CoveringRelation,
    vertices: Vec<DyckPath>,
    up_edges: Vec<Vec<VertexId>>,
    down_edges: Vec<Vec<VertexId>>,
    index: HashMap<DyckPath, VertexId>,
    rank: Vec<u32>,
    caps: Caps,
    closure: OnceLock<Closure>,
}

struct Closure {
    /// `order[pos]` is the vertex at position `pos` of the linear extension.
    order: Vec<VertexId>,
    pos: Vec<u32>,
    /// Row `v`: positions of all `w >= v`.
    up_sets: BitMatrix,
    /// Row `v`: positions of all `w <= v`.
    down_sets: BitMatrix,
}

/// Builds the Hasse diagram of `D_n` under `rel` with the default caps.
pub fn build_hasse(n: usize, rel: CoveringRelation) -> Result<PosetGraph> {
    build_hasse_capped(n, rel, Caps::default())
}

pub fn build_hasse_capped(n: usize, rel: CoveringRelation, caps: Caps) -> Result<PosetGraph> {
    Caps::check_catalan("Hasse diagram", n, caps.max_graph_vertices)?;
    let vertices = enumerate_paths_capped(n, &caps)?;
    let index: HashMap<DyckPath, VertexId> =
        vertices.iter().enumerate().map(|(i, p)| (*p, i as VertexId)).collect();
    let up_edges: Vec<Vec<VertexId>> = vertices
        .iter()
        .map(|p| {
            let mut ids: Vec<VertexId> = successors(p, &rel).iter().map(|q| index[q]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    let mut down_edges = vec![Vec::new(); vertices.len()];
    for (u, outs) in up_edges.iter().enumerate() {
        for &v in outs {
            down_edges[v as usize].push(u as VertexId);
        }
    }
    let order = linear_extension(&vertices);
    let mut rank = vec![0u32; vertices.len()];
    for &v in &order {
        for &w in &up_edges[v as usize] {
            rank[w as usize] = rank[w as usize].max(rank[v as usize] + 1);
        }
    }
    Ok(PosetGraph {
        n,
        relation: rel,
        vertices,
        up_edges,
        down_edges,
        index,
        rank,
        caps,
        closure: OnceLock::new(),
    })
}

fn linear_extension(vertices: &[DyckPath]) -> Vec<VertexId> {
    let area: Vec<usize> = vertices.iter().map(|p| p.area()).collect();
    let mut order: Vec<VertexId> = (0..vertices.len() as VertexId).collect();
    order.sort_by_key(|&v| (area[v as usize], v));
    order
}

impl PosetGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relation(&self) -> CoveringRelation {
        self.relation
    }

    pub fn vertices(&self) -> &[DyckPath] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.up_edges.iter().map(Vec::len).sum()
    }

    pub fn up_edges(&self, v: VertexId) -> &[VertexId] {
        &self.up_edges[v as usize]
    }

    pub fn down_edges(&self, v: VertexId) -> &[VertexId] {
        &self.down_edges[v as usize]
    }

    pub fn path(&self, v: VertexId) -> DyckPath {
        self.vertices[v as usize]
    }

    /// Length of the longest covering chain from a minimal element to `v`.
    pub fn rank(&self, v: VertexId) -> u32 {
        self.rank[v as usize]
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn vertex(&self, p: &DyckPath) -> Result<VertexId> {
        self.index.get(p).copied().ok_or_else(|| Error::UnknownVertex(p.to_string()))
    }

    /// All edges `(u, v)` with `v` covering `u`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.up_edges
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u as VertexId, v)))
    }

    /// Vertices with no lower cover.
    pub fn minimal_elements(&self) -> Vec<DyckPath> {
        (0..self.vertex_count()).filter(|&v| self.down_edges[v].is_empty()).map(|v| self.vertices[v]).collect()
    }

    /// Vertices with no upper cover.
    pub fn maximal_elements(&self) -> Vec<DyckPath> {
        (0..self.vertex_count()).filter(|&v| self.up_edges[v].is_empty()).map(|v| self.vertices[v]).collect()
    }

    fn closure(&self) -> Result<&Closure> {
        if let Some(c) = self.closure.get() {
            return Ok(c);
        }
        Caps::check_count("reachability closure", self.vertex_count(), self.caps.max_closure_vertices)?;
        Ok(self.closure.get_or_init(|| self.compute_closure()))
    }

    fn compute_closure(&self) -> Closure {
        let count = self.vertex_count();
        let order = linear_extension(&self.vertices);
        let mut pos = vec![0u32; count];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let mut up_sets = BitMatrix::new(count, count);
        for &v in order.iter().rev() {
            up_sets.insert(v as usize, pos[v as usize] as usize);
            for &w in &self.up_edges[v as usize] {
                up_sets.union_into(v as usize, w as usize);
            }
        }
        let mut down_sets = BitMatrix::new(count, count);
        for &v in &order {
            down_sets.insert(v as usize, pos[v as usize] as usize);
            for &w in &self.down_edges[v as usize] {
                down_sets.union_into(v as usize, w as usize);
            }
        }
        Closure { order, pos, up_sets, down_sets }
    }

    pub(crate) fn leq_ids(&self, a: VertexId, b: VertexId) -> Result<bool> {
        let c = self.closure()?;
        Ok(c.up_sets.contains(a as usize, c.pos[b as usize] as usize))
    }

    /// `p <= q` in the transitive closure of the covering relation.
    pub fn leq(&self, p: &DyckPath, q: &DyckPath) -> Result<bool> {
        self.leq_ids(self.vertex(p)?, self.vertex(q)?)
    }

    /// Least upper bound, or the antichain of minimal upper bounds.
    pub(crate) fn join_ids(&self, a: VertexId, b: VertexId) -> Result<std::result::Result<VertexId, Vec<VertexId>>> {
        let c = self.closure()?;
        let common = bitset::and_rows(c.up_sets.row(a as usize), c.up_sets.row(b as usize));
        if let Some(first) = bitset::first_bit(&common) {
            let cand = c.order[first];
            if bitset::is_subset(&common, c.up_sets.row(cand as usize)) {
                return Ok(Ok(cand));
            }
        }
        let contains = |v: VertexId| {
            let p = c.pos[v as usize] as usize;
            common[p / 64] >> (p % 64) & 1 == 1
        };
        let mut minimal: Vec<VertexId> = bitset::iter_bits(&common)
            .map(|p| c.order[p])
            .filter(|&v| !self.down_edges[v as usize].iter().any(|&w| contains(w)))
            .collect();
        minimal.sort_unstable();
        Ok(Err(minimal))
    }

    /// Greatest lower bound, or the antichain of maximal lower bounds.
    pub(crate) fn meet_ids(&self, a: VertexId, b: VertexId) -> Result<std::result::Result<VertexId, Vec<VertexId>>> {
        let c = self.closure()?;
        let common = bitset::and_rows(c.down_sets.row(a as usize), c.down_sets.row(b as usize));
        if let Some(last) = bitset::last_bit(&common) {
            let cand = c.order[last];
            if bitset::is_subset(&common, c.down_sets.row(cand as usize)) {
                return Ok(Ok(cand));
            }
        }
        let contains = |v: VertexId| {
            let p = c.pos[v as usize] as usize;
            common[p / 64] >> (p % 64) & 1 == 1
        };
        let mut maximal: Vec<VertexId> = bitset::iter_bits(&common)
            .map(|p| c.order[p])
            .filter(|&v| !self.up_edges[v as usize].iter().any(|&w| contains(w)))
            .collect();
        maximal.sort_unstable();
        Ok(Err(maximal))
    }

    fn words(&self, ids: &[VertexId]) -> Vec<String> {
        ids.iter().map(|&v| self.vertices[v as usize].to_string()).collect()
    }

    pub fn join(&self, p: &DyckPath, q: &DyckPath) -> Result<DyckPath> {
        match self.join_ids(self.vertex(p)?, self.vertex(q)?)? {
            Ok(v) => Ok(self.path(v)),
            Err(bounds) => Err(Error::NoJoin(p.to_string(), q.to_string(), self.words(&bounds))),
        }
    }

    pub fn meet(&self, p: &DyckPath, q: &DyckPath) -> Result<DyckPath> {
        match self.meet_ids(self.vertex(p)?, self.vertex(q)?)? {
            Ok(v) => Ok(self.path(v)),
            Err(bounds) => Err(Error::NoMeet(p.to_string(), q.to_string(), self.words(&bounds))),
        }
    }

    pub(crate) fn down_set_size(&self, v: VertexId) -> Result<u64> {
        Ok(self.closure()?.down_sets.count_row(v as usize))
    }

    /// Vertices `w <= v` (including `v`), in linear-extension order.
    pub(crate) fn down_set(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let c = self.closure()?;
        Ok(bitset::iter_bits(c.down_sets.row(v as usize)).map(|p| c.order[p]).collect())
    }

    pub(crate) fn linear_order(&self) -> Result<&[VertexId]> {
        Ok(&self.closure()?.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::predecessors;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    /// Breadth-first reachability along up-edges, independent of the bitsets.
    fn bfs_leq(g: &PosetGraph, a: VertexId, b: VertexId) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = std::collections::VecDeque::from([a]);
        seen[a as usize] = true;
        while let Some(v) = queue.pop_front() {
            if v == b {
                return true;
            }
            for &w in g.up_edges(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    #[test]
    fn build_examples() {
        let g = build_hasse(4, CoveringRelation::Restricted).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 20));
        let t = build_hasse(4, CoveringRelation::Tamari).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (14, 21));
        let one = build_hasse(1, CoveringRelation::Restricted).unwrap();
        assert_eq!((one.vertex_count(), one.edge_count()), (1, 0));
        let zero = build_hasse(0, CoveringRelation::Restricted).unwrap();
        assert_eq!(zero.vertex_count(), 1);
    }

    #[test]
    fn edges_match_relation_and_transpose() {
        for rel in [CoveringRelation::Restricted, CoveringRelation::Tamari, CoveringRelation::pattern("UDU").unwrap()] {
            let g = build_hasse(6, rel).unwrap();
            for v in 0..g.vertex_count() as VertexId {
                let ups: Vec<DyckPath> = g.up_edges(v).iter().map(|&w| g.path(w)).collect();
                assert_eq!(ups, successors(&g.path(v), &rel));
                let downs: Vec<DyckPath> = g.down_edges(v).iter().map(|&w| g.path(w)).collect();
                assert_eq!(downs, predecessors(&g.path(v), &rel));
                for &w in g.up_edges(v) {
                    assert!(g.down_edges(w).contains(&v));
                    assert!(g.rank(w) > g.rank(v));
                }
            }
        }
    }

    #[test]
    fn unique_bottom_and_top() {
        for n in 1..=9 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            assert_eq!(g.minimal_elements(), vec![DyckPath::sawtooth(n)]);
            assert_eq!(g.maximal_elements(), vec![DyckPath::pyramid(n)]);
        }
    }

    #[test]
    fn leq_agrees_with_bfs() {
        let g = build_hasse(5, CoveringRelation::Restricted).unwrap();
        for a in 0..g.vertex_count() as VertexId {
            for b in 0..g.vertex_count() as VertexId {
                assert_eq!(g.leq_ids(a, b).unwrap(), bfs_leq(&g, a, b));
            }
        }
    }

    #[test]
    fn leq_examples() {
        for n in 1..=6 {
            let g = build_hasse(n, CoveringRelation::Restricted).unwrap();
            for q in g.vertices() {
                assert!(g.leq(&DyckPath::sawtooth(n), q).unwrap());
                assert!(g.leq(q, &DyckPath::pyramid(n)).unwrap());
                assert!(g.leq(q, q).unwrap());
            }
        }
        let g = build_hasse(3, CoveringRelation::Restricted).unwrap();
        assert!(!g.leq(&p("UUDDUD"), &p("UDUUDD")).unwrap());
        assert!(!g.leq(&p("UDUUDD"), &p("UUDDUD")).unwrap());
        assert_eq!(g.leq(&p("UD"), &p("UDUDUD")), Err(Error::UnknownVertex("UD".into())));
    }

    #[test]
    fn meet_join_examples() {
        let g = build_hasse(3, CoveringRelation::Restricted).unwrap();
        assert_eq!(g.join(&p("UUDDUD"), &p("UDUUDD")).unwrap(), p("UUUDDD"));
        assert_eq!(g.meet(&p("UUDDUD"), &p("UDUUDD")).unwrap(), p("UDUDUD"));
        for q in g.vertices() {
            assert_eq!(g.join(q, q).unwrap(), *q);
            assert_eq!(g.meet(q, q).unwrap(), *q);
        }
    }

    #[test]
    fn closure_cap_is_enforced() {
        let caps = Caps { max_closure_vertices: 10, ..Caps::default() };
        let g = build_hasse_capped(4, CoveringRelation::Restricted, caps).unwrap();
        assert!(matches!(g.leq(&p("UDUDUDUD"), &p("UUUUDDDD")), Err(Error::ResourceLimit { .. })));
        let caps = Caps { max_graph_vertices: 10, ..Caps::default() };
        assert!(matches!(build_hasse_capped(4, CoveringRelation::Restricted, caps), Err(Error::ResourceLimit { .. })));
    }
}
