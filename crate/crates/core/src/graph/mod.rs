//! Simple undirected graphs of order at most 64 stored as adjacency bit rows.
//!
//! Row `i` is a 64-bit word whose bit `j` is set iff `{i, j}` is an edge. A
//! [`Graph`] is immutable once built; every operation that changes the edge
//! set returns a new value.

pub mod graph6;
mod named;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use named::{
    is_clique_with_isolated_vertices, make_named, recognize_extremal, Extremal, NamedGraph,
};

/// Largest supported order; one adjacency row fits in a `u64`.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_ORDER],
}

/// Bit mask with the low `n` bits set.
#[inline]
pub fn vertex_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(Graph {
            n,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = vertex_mask(n);
        for u in 0..n {
            g.rows[u] = full & !(1u64 << u);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry, the
    /// absence of loops and that no bit at or above `n` is set.
    pub fn from_rows(n: usize, rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if rows.len() != n {
            return Err(Error::InvalidRows(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let full = vertex_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::InvalidRows(format!(
                    "row {u} has bits at or above {n}"
                )));
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u] = row;
        }
        for u in 0..n {
            let mut rest = g.rows[u];
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if g.rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidRows(format!(
                        "edge {u}-{v} is not symmetric"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Builds the graph whose upper-triangle pairs `(i, j)`, `i < j`, taken in
    /// row-major order, are selected by the low bits of `pattern`. Bit 0 is
    /// pair `(0, 1)`, bit 1 is `(0, 2)`, ..., bit `n-2` is `(0, n-1)`, then
    /// `(1, 2)`, and so on.
    pub fn from_upper_triangle_bits(n: usize, pattern: u64) -> Result<Self> {
        if n > 11 {
            // C(12, 2) = 66 pairs no longer fit in one word.
            return Err(Error::UnsupportedOrder(n));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if pattern >> bit & 1 == 1 {
                    g.insert_edge(i, j);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    #[inline]
    pub fn full_mask(&self) -> u64 {
        vertex_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.rows[u].count_ones() as usize)
    }

    #[inline]
    pub(crate) fn deg(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence((0..self.n).map(|u| self.deg(u)).collect())
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let mut rows = [0; MAX_ORDER];
        for (u, out) in rows.iter_mut().enumerate().take(self.n) {
            *out = !self.rows[u] & full & !(1u64 << u);
        }
        Graph { n: self.n, rows }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut above = self.rows[u] & !vertex_mask(u + 1);
            std::iter::from_fn(move || {
                if above == 0 {
                    return None;
                }
                let v = above.trailing_zeros() as usize;
                above &= above - 1;
                Some((u, v))
            })
        })
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    /// Relabels vertices so that old vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidRows(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            if seen >> p & 1 == 1 {
                return Err(Error::InvalidRows(format!(
                    "vertex {p} appears twice in permutation"
                )));
            }
            seen |= 1 << p;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// True when every edge of `self` is an edge of `other` (same order).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n
            && self
                .rows()
                .iter()
                .zip(other.rows())
                .all(|(a, b)| a & !b == 0)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut unseen = self.full_mask();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let comp = self.reach(start);
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start`, as a mask.
    pub fn reach(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.full_mask()
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n,
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::encode(self))
    }
}

/// Degrees indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&d| (d * d) as u64).sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        // C_5 = 0-1-2-3-4-0, its complement is the pentagram 0-2-4-1-3-0.
        let c5 = cycle(5);
        let pentagram = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5.complement(), pentagram);
        let relabeled = pentagram.relabel(&[0, 3, 1, 4, 2]).unwrap();
        assert_eq!(relabeled, c5);
    }

    #[test]
    fn degrees_and_edge_count() {
        let k5 = Graph::complete(5).unwrap();
        assert!((0..5).all(|u| k5.degree(u).unwrap() == 4));
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(
            k5.degree(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        );
    }

    #[test]
    fn order_limits() {
        assert_eq!(Graph::empty(0), Err(Error::UnsupportedOrder(0)));
        assert_eq!(Graph::empty(65), Err(Error::UnsupportedOrder(65)));
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.complement().edge_count(), 0);
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert!(matches!(
            Graph::from_rows(2, &[0b10, 0b00]),
            Err(Error::InvalidRows(_))
        ));
        assert_eq!(Graph::from_rows(2, &[0b01, 0b00]), Err(Error::SelfLoop(0)));
        assert!(Graph::from_rows(2, &[0b110, 0b001]).is_err());
        assert_eq!(
            Graph::from_rows(2, &[0b10, 0b01]).unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn upper_triangle_pattern_order() {
        let k3 = Graph::from_upper_triangle_bits(3, 0b111).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        let g = Graph::from_upper_triangle_bits(3, 0b100).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn components_split_isolated_vertices() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b00100, 0b11000]);
        assert!(!g.is_connected());
        assert!(cycle(5).is_connected());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = cycle(4);
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
        assert!(g.relabel(&[0, 1, 2]).is_err());
    }
}
