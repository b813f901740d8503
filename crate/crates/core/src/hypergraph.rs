//! Canonical r-uniform hypergraphs over dense integer vertices.

use itertools::Itertools;
use thiserror::Error;

/// Largest vertex count for which the bitmask edge index is maintained.
pub const MASK_VERTEX_LIMIT: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity r = {0} is below 2")]
    UniformityTooSmall(usize),
    #[error("edge #{index} has {size} vertices, expected {r}")]
    NonUniformEdge { index: usize, size: usize, r: usize },
    #[error("edge #{index} uses vertex {vertex}, but vertex_count is {vertex_count}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge #{index} repeats vertex {vertex}")]
    DuplicateVertexInEdge { index: usize, vertex: usize },
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// Bitmask of a vertex list. Callers guarantee every vertex is below 128.
pub(crate) fn mask_of(vertices: &[usize]) -> u128 {
    vertices.iter().fold(0u128, |m, &v| m | (1u128 << v))
}

/// An r-uniform hypergraph.
///
/// Edges are kept sorted ascending internally and lexicographically among
/// themselves, without duplicates. When `vertex_count <= 128` a sorted
/// bitmask index mirrors the edge list for constant-width membership tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    r: usize,
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    provenance: Vec<String>,
    mask_index: Option<Vec<u128>>,
}

impl Hypergraph {
    /// Builds a canonical hypergraph; duplicate edges (in any vertex order)
    /// collapse into one.
    pub fn new(r: usize, vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if r < 2 {
            return Err(HypergraphError::UniformityTooSmall(r));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            if e.len() != r {
                return Err(HypergraphError::NonUniformEdge {
                    index,
                    size: e.len(),
                    r,
                });
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(HypergraphError::VertexOutOfRange {
                    index,
                    vertex,
                    vertex_count,
                });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateVertexInEdge { index, vertex: w[0] });
            }
            canon.push(e);
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(r, vertex_count, canon, Vec::new()))
    }

    /// Edgeless hypergraph on `vertex_count` vertices.
    pub fn empty(r: usize, vertex_count: usize) -> Result<Self, HypergraphError> {
        Self::new(r, vertex_count, Vec::new())
    }

    /// `edges` must already be canonical (each sorted, list sorted, deduplicated).
    pub(crate) fn from_canonical(
        r: usize,
        vertex_count: usize,
        edges: Vec<Vec<usize>>,
        provenance: Vec<String>,
    ) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == r && e.windows(2).all(|w| w[0] < w[1])));
        let mask_index = (vertex_count <= MASK_VERTEX_LIMIT).then(|| {
            let mut m: Vec<u128> = edges.iter().map(|e| mask_of(e)).collect();
            m.sort_unstable();
            m
        });
        Hypergraph {
            r,
            vertex_count,
            edges,
            provenance,
            mask_index,
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, index: usize) -> Option<&[usize]> {
        self.edges.get(index).map(Vec::as_slice)
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn with_provenance(mut self, record: impl Into<String>) -> Self {
        self.provenance.push(record.into());
        self
    }

    pub(crate) fn set_provenance(&mut self, provenance: Vec<String>) {
        self.provenance = provenance;
    }

    pub fn has_mask_index(&self) -> bool {
        self.mask_index.is_some()
    }

    /// Membership test for a vertex bitmask. Only meaningful with a mask index.
    pub(crate) fn contains_mask(&self, mask: u128) -> bool {
        match &self.mask_index {
            Some(idx) => idx.binary_search(&mask).is_ok(),
            None => false,
        }
    }

    /// True iff `k` has exactly r vertices and is an edge.
    pub fn is_edge(&self, k: &VertexSet) -> bool {
        let m = k.members();
        if m.len() != self.r || m.iter().any(|&v| v >= self.vertex_count) {
            return false;
        }
        match &self.mask_index {
            Some(_) => self.contains_mask(mask_of(m)),
            None => self.edges.binary_search_by(|e| e.as_slice().cmp(m)).is_ok(),
        }
    }

    /// True iff every r-subset of `s` is an edge; vacuously true below r vertices.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        if s.len() < self.r {
            return true;
        }
        s.members()
            .iter()
            .copied()
            .combinations(self.r)
            .all(|k| self.is_edge(&VertexSet(k)))
    }

    /// Hypergraph induced on `s`, with vertices relabelled in increasing order.
    pub fn induced_subhypergraph(&self, s: &VertexSet) -> Hypergraph {
        let members: Vec<usize> = s.members().iter().copied().filter(|&v| v < self.vertex_count).collect();
        let mut relabel = vec![usize::MAX; self.vertex_count];
        for (new, &old) in members.iter().enumerate() {
            relabel[old] = new;
        }
        // order-preserving relabelling keeps the edge list canonical
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        let mut provenance = self.provenance.clone();
        provenance.push(format!("induced on {:?}", members));
        Hypergraph::from_canonical(self.r, members.len(), edges, provenance)
    }

    /// Indices of edges incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Complete r-uniform hypergraph on `vertex_count` vertices.
    pub fn complete(r: usize, vertex_count: usize) -> Result<Self, HypergraphError> {
        if r < 2 {
            return Err(HypergraphError::UniformityTooSmall(r));
        }
        let edges: Vec<Vec<usize>> = (0..vertex_count).combinations(r).collect();
        Ok(Self::from_canonical(r, vertex_count, edges, Vec::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single() -> Hypergraph {
        Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn construction_and_dedup() {
        assert_eq!(single().edge_count(), 1);
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![0, 1, 3]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![0, 1]]),
            Err(HypergraphError::NonUniformEdge { size: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![0, 1, 1]]),
            Err(HypergraphError::DuplicateVertexInEdge { vertex: 1, .. })
        ));
        assert!(matches!(
            Hypergraph::new(1, 3, vec![]),
            Err(HypergraphError::UniformityTooSmall(1))
        ));
    }

    #[test]
    fn edges_sorted_lexicographically() {
        let h = Hypergraph::new(2, 4, vec![vec![3, 2], vec![0, 3], vec![1, 0], vec![0, 2]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 2], vec![0, 3], vec![2, 3]]);
    }

    #[test]
    fn edge_membership() {
        let h = single();
        assert!(h.is_edge(&VertexSet::new([0, 1, 2])));
        assert!(!h.is_edge(&VertexSet::new([0, 1])));
        assert!(!h.is_edge(&VertexSet::new([0, 1, 3])));
    }

    #[test]
    fn clique_predicate() {
        let k4 = Hypergraph::complete(3, 4).unwrap();
        assert!(k4.is_clique(&VertexSet::new(0..4)));
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2]]).unwrap();
        assert!(!h.is_clique(&VertexSet::new(0..4)));
        assert!(h.is_clique(&VertexSet::new([0, 3])));
    }

    #[test]
    fn induced() {
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2]]).unwrap();
        let a = h.induced_subhypergraph(&VertexSet::new([0, 1, 2]));
        assert_eq!(a.vertex_count(), 3);
        assert_eq!(a.edges(), &[vec![0, 1, 2]]);
        let b = h.induced_subhypergraph(&VertexSet::new([0, 1, 3]));
        assert_eq!(b.vertex_count(), 3);
        assert_eq!(b.edge_count(), 0);

        let k5 = Hypergraph::complete(3, 5).unwrap();
        let c = k5.induced_subhypergraph(&VertexSet::new([0, 2, 3, 4]));
        assert_eq!(c.edges(), Hypergraph::complete(3, 4).unwrap().edges());
    }

    #[test]
    fn large_vertex_count_without_mask_index() {
        let h = Hypergraph::new(2, 200, vec![vec![150, 3], vec![199, 0]]).unwrap();
        assert!(!h.has_mask_index());
        assert!(h.is_edge(&VertexSet::new([3, 150])));
        assert!(!h.is_edge(&VertexSet::new([3, 151])));
    }
}
