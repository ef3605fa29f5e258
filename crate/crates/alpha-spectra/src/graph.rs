//! Simple undirected graphs as rows of vertex bitsets.

use crate::error::{Error, Result};

/// Subset of the vertices `0..n`, stored as packed 64-bit words.
///
/// For `n <= 64` everything fits in one word and `as_mask` exposes it
/// directly; larger graphs just use more words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(nbits: usize) -> Self {
        VertexSet { nbits, words: vec![0; nbits.div_ceil(64).max(1)] }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::empty(nbits);
        for v in 0..nbits {
            s.insert(v);
        }
        s
    }

    pub fn singleton(nbits: usize, v: usize) -> Self {
        let mut s = Self::empty(nbits);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(nbits: usize, it: I) -> Self {
        let mut s = Self::empty(nbits);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Reinterpret a bitmask as a set over `0..nbits` (requires `nbits <= 64`).
    pub fn from_mask(nbits: usize, mask: u64) -> Self {
        assert!(nbits <= 64);
        let mut s = Self::empty(nbits);
        s.words[0] = mask;
        s
    }

    /// The single-word mask, when the universe fits in 64 bits.
    pub fn as_mask(&self) -> Option<u64> {
        if self.nbits <= 64 {
            Some(self.words[0])
        } else {
            None
        }
    }

    pub fn universe_size(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.nbits, other.nbits);
        VertexSet {
            nbits: self.nbits,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.nbits, other.nbits);
        VertexSet {
            nbits: self.nbits,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Smallest member, or `None` for the empty set.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

/// Immutable simple undirected graph: `adj[i]` is the neighbor set of `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: (0..n).map(|_| VertexSet::empty(n)).collect() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// The complete graph K_k.
    pub fn complete(k: usize) -> Self {
        let mut g = Self::empty(k);
        for u in 0..k {
            for v in (u + 1)..k {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle C_k (k >= 3).
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3);
        let mut g = Self::empty(k);
        for u in 0..k {
            g.add_edge(u, (u + 1) % k);
        }
        g
    }

    /// Path P_k on k vertices.
    pub fn path(k: usize) -> Self {
        let mut g = Self::empty(k);
        for u in 1..k {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Adjacency row as a bitmask; only for graphs with at most 64 vertices.
    pub fn adj_mask(&self, v: usize) -> Option<u64> {
        self.adj[v].as_mask()
    }

    /// Disjoint union; vertices of `g2` are shifted by `g1.n()`.
    pub fn union(g1: &Graph, g2: &Graph) -> Graph {
        let n = g1.n + g2.n;
        let mut g = Self::empty(n);
        for u in 0..g1.n {
            for v in g1.adj[u].iter() {
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
        for u in 0..g2.n {
            for v in g2.adj[u].iter() {
                if u < v {
                    g.add_edge(g1.n + u, g1.n + v);
                }
            }
        }
        g
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(g1: &Graph, g2: &Graph) -> Graph {
        let mut g = Self::union(g1, g2);
        for u in 0..g1.n {
            for v in 0..g2.n {
                g.add_edge(u, g1.n + v);
            }
        }
        g
    }

    /// Union of the neighbor sets of `x`. Need not contain or avoid `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in x.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Induced subgraph on the complement of `s`, keeping relative order.
    pub fn delete(&self, s: &VertexSet) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !s.contains(v)).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Self::empty(keep.len());
        for &u in &keep {
            for v in self.adj[u].iter() {
                if u < v && index[v] != usize::MAX {
                    g.add_edge(index[u], index[v]);
                }
            }
        }
        g
    }

    /// Connected components as disjoint vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Number of odd-order components of `G - s`.
    pub fn odd_components(&self, s: &VertexSet) -> usize {
        self.delete(s).components().iter().filter(|c| c.len() % 2 == 1).count()
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Check the structural invariants: symmetry and no loops.
    pub fn validate(&self) -> Result<()> {
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(Error::InvalidParameter(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(())
    }

    /// Relabel vertices: `perm[v]` is the new index of old vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        g
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// Parametric description of `K_s ∨ (K_{n1} ∪ … ∪ K_{nq})`.
///
/// Parts are kept sorted non-decreasing as the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinFamilySpec {
    s: usize,
    parts: Vec<usize>,
}

impl JoinFamilySpec {
    pub fn new(s: usize, mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("family parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(JoinFamilySpec { s, parts })
    }

    pub fn apex(&self) -> usize {
        self.s
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total vertex count s + sum of parts.
    pub fn n(&self) -> usize {
        self.s + self.parts.iter().sum::<usize>()
    }

    /// Build the graph. Layout contract: apex vertices come first
    /// (indices 0..s), then each part as a consecutive block in spec
    /// order. The spectral quotient partitions index into this layout.
    pub fn build(&self) -> Graph {
        let mut g = Graph::complete(self.s);
        for &p in &self.parts {
            g = Graph::union(&g, &Graph::complete(p));
        }
        // apex joined to everything
        for a in 0..self.s {
            for v in self.s..self.n() {
                g.add_edge(a, v);
            }
        }
        g
    }

    /// The vertex blocks of the layout: apex cell (when s > 0) followed by
    /// one cell per part.
    pub fn layout_cells(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut cells = Vec::new();
        if self.s > 0 {
            cells.push(VertexSet::from_iter(n, 0..self.s));
        }
        let mut off = self.s;
        for &p in &self.parts {
            cells.push(VertexSet::from_iter(n, off..off + p));
            off += p;
        }
        cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edges() {
        assert_eq!(Graph::complete(0).n(), 0);
        assert_eq!(Graph::complete(1).edge_count(), 0);
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn union_and_join_counts() {
        let k3 = Graph::complete(3);
        let k1 = Graph::complete(1);
        let u = Graph::union(&k3, &k1);
        assert_eq!(u.n(), 4);
        assert_eq!(u.edge_count(), 3);
        assert_eq!(u.components().len(), 2);

        let j = Graph::join(&k1, &k3);
        assert_eq!(j, Graph::complete(4));

        let e = Graph::empty(0);
        let g = Graph::union(&e, &k3);
        assert_eq!(g, k3);
        assert_eq!(Graph::join(&e, &k3), k3);

        let two_k3 = Graph::union(&k3, &k3);
        assert!((0..6).all(|v| two_k3.degree(v) == 2));
        assert_eq!(two_k3.components().len(), 2);
    }

    #[test]
    fn build_family_extremal_layout() {
        // G* = K1 ∨ (K1 ∪ K3 ∪ K13), n = 18
        let spec = JoinFamilySpec::new(1, vec![13, 3, 1]).unwrap();
        assert_eq!(spec.parts(), &[1, 3, 13]);
        assert_eq!(spec.n(), 18);
        let g = spec.build();
        g.validate().unwrap();
        assert!(g.is_connected());
        assert_eq!(g.degree(0), 17);
        // the K1 part vertex sits right after the apex
        assert_eq!(g.degree(1), 1);
        let apex = VertexSet::singleton(18, 0);
        assert_eq!(g.neighborhood(&VertexSet::singleton(18, 1)), apex);
        let rest = g.delete(&apex);
        let sizes: Vec<usize> = rest.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 13]);
        assert_eq!(g.odd_components(&apex), 3);
    }

    #[test]
    fn build_family_degenerate() {
        let spec = JoinFamilySpec::new(0, vec![5]).unwrap();
        assert_eq!(spec.build(), Graph::complete(5));
        assert!(JoinFamilySpec::new(1, vec![0]).is_err());
    }

    #[test]
    fn neighborhood_star() {
        // star K_{1,3}: center 0
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let leaves = VertexSet::from_iter(4, 1..4);
        assert_eq!(g.neighborhood(&leaves), VertexSet::singleton(4, 0));
        assert!(g.neighborhood(&VertexSet::empty(4)).is_empty());
    }

    #[test]
    fn delete_and_components() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.delete(&VertexSet::singleton(4, 2)), Graph::complete(3));
        assert_eq!(k4.delete(&VertexSet::empty(4)), k4);
        assert_eq!(k4.odd_components(&VertexSet::empty(4)), 0);

        let c6 = Graph::cycle(6);
        assert_eq!(c6.odd_components(&VertexSet::singleton(6, 0)), 1);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::union(&Graph::complete(3), &Graph::complete(1)).is_connected());
        let g2 = JoinFamilySpec::new(2, vec![1, 1, 3, 11]).unwrap();
        assert_eq!(g2.n(), 18);
        assert!(g2.build().is_connected());
    }

    #[test]
    fn component_partition() {
        let g = Graph::union(&Graph::cycle(5), &Graph::union(&Graph::complete(2), &Graph::complete(1)));
        let comps = g.components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        assert_eq!(total, g.n());
        // ordered by smallest member, pairwise disjoint
        let mut seen = VertexSet::empty(g.n());
        let mut last_min = None;
        for c in &comps {
            assert!(seen.intersect(c).is_empty());
            seen.union_with(c);
            assert!(last_min < c.min());
            last_min = c.min();
        }
        let odd = g.odd_components(&VertexSet::empty(g.n()));
        let even = comps.iter().filter(|c| c.len() % 2 == 0).count();
        assert_eq!(odd + even, comps.len());
    }
}
