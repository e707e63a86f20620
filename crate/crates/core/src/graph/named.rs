use std::fmt;

use serde::{Deserialize, Serialize};

use super::{vertex_mask, Graph};
use crate::error::{Error, Result};

/// Graph families with a fixed canonical labeling.
///
/// * `Path`: edges `i - (i+1)`.
/// * `Cycle`: the path plus `(n-1) - 0`.
/// * `Star`: center 0, leaves `1..n`.
/// * `CliquePlusIsolated` (K_{n-1}+v): clique on `0..n-1`, vertex `n-1` isolated.
/// * `CliquePlusPendant` (K_{n-1}+e): clique on `0..n-1`, vertex `n-1` attached to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedGraph {
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    CliquePlusIsolated,
    CliquePlusPendant,
}

impl NamedGraph {
    pub fn min_order(self) -> usize {
        match self {
            NamedGraph::Complete | NamedGraph::Empty | NamedGraph::Path => 1,
            NamedGraph::Star | NamedGraph::CliquePlusIsolated => 2,
            NamedGraph::Cycle | NamedGraph::CliquePlusPendant => 3,
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedGraph::Complete => "K_n",
            NamedGraph::Empty => "empty graph",
            NamedGraph::Path => "P_n",
            NamedGraph::Cycle => "C_n",
            NamedGraph::Star => "K_{1,n-1}",
            NamedGraph::CliquePlusIsolated => "K_{n-1}+v",
            NamedGraph::CliquePlusPendant => "K_{n-1}+e",
        })
    }
}

pub fn make_named(kind: NamedGraph, n: usize) -> Result<Graph> {
    let min = kind.min_order();
    if n < min {
        return Err(Error::OrderTooSmall { kind, n, min });
    }
    match kind {
        NamedGraph::Complete => Graph::complete(n),
        NamedGraph::Empty => Graph::empty(n),
        NamedGraph::Path => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        NamedGraph::Cycle => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
        NamedGraph::Star => Graph::from_edges(n, (1..n).map(|i| (0, i))),
        NamedGraph::CliquePlusIsolated => {
            Graph::from_edges(n, clique_edges(n - 1))
        }
        NamedGraph::CliquePlusPendant => {
            Graph::from_edges(n, clique_edges(n - 1).chain([(0, n - 1)]))
        }
    }
}

fn clique_edges(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
}

/// Which of the two extremal non-Hamiltonian graphs a graph is, if either.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Extremal {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "K_{n-1}+v")]
    CliquePlusIsolated,
    #[serde(rename = "K_{n-1}+e")]
    CliquePlusPendant,
}

/// Label-invariant recognition of K_{n-1}+v and K_{n-1}+e.
///
/// Both degree sequences force the graph, but adjacency is verified row by
/// row rather than inferred from degrees.
pub fn recognize_extremal(g: &Graph) -> Extremal {
    if is_clique_plus_isolated(g) {
        Extremal::CliquePlusIsolated
    } else if is_clique_plus_pendant(g) {
        Extremal::CliquePlusPendant
    } else {
        Extremal::None
    }
}

/// True when the edges form one clique and every other vertex is isolated.
/// Edgeless graphs qualify.
pub fn is_clique_with_isolated_vertices(g: &Graph) -> bool {
    let support = g.rows().iter().enumerate().fold(0u64, |acc, (u, &r)| {
        if r != 0 {
            acc | 1 << u
        } else {
            acc
        }
    });
    let mut m = support;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        if g.row(u) != support & !(1u64 << u) {
            return false;
        }
    }
    true
}

fn is_clique_plus_isolated(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 {
        return false;
    }
    let full = vertex_mask(n);
    // For n = 2 both vertices are isolated, so try every candidate.
    (0..n).filter(|&v| g.row(v) == 0).any(|iso| {
        (0..n)
            .filter(|&u| u != iso)
            .all(|u| g.row(u) == full & !(1u64 << u) & !(1u64 << iso))
    })
}

fn is_clique_plus_pendant(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let full = vertex_mask(n);
    // For n = 3 the graph is P_3 and has two degree-1 vertices.
    (0..n).filter(|&p| g.deg(p) == 1).any(|p| {
        let hub = g.row(p).trailing_zeros() as usize;
        g.row(hub) == full & !(1u64 << hub)
            && (0..n)
                .filter(|&w| w != p && w != hub)
                .all(|w| g.row(w) == full & !(1u64 << w) & !(1u64 << p))
    })
}
