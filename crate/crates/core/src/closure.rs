//! Bondy–Chvátal k-closure: join nonadjacent pairs whose degree sum is at
//! least `k` until no such pair remains.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AddedEdge {
    pub u: usize,
    pub v: usize,
    /// `d(u) + d(v)` just before the edge was added.
    pub degree_sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub closed: Graph,
    pub added: Vec<AddedEdge>,
    pub k: usize,
}

/// Canonical k-closure: each step adds the lexicographically smallest
/// eligible pair, with eligibility recomputed after every addition.
pub fn k_closure(g: &Graph, k: usize) -> ClosureResult {
    let mut closed = g.clone();
    let mut added = Vec::new();
    while let Some(e) = first_eligible(&closed, k) {
        closed.insert_edge(e.u, e.v);
        added.push(e);
    }
    ClosureResult { closed, added, k }
}

/// Closed graph only, without the trace.
pub fn closure_graph(g: &Graph, k: usize) -> Graph {
    let mut closed = g.clone();
    while let Some(e) = first_eligible(&closed, k) {
        closed.insert_edge(e.u, e.v);
    }
    closed
}

fn first_eligible(g: &Graph, k: usize) -> Option<AddedEdge> {
    let n = g.n();
    let full = g.full_mask();
    for u in 0..n {
        let du = g.deg(u);
        let mut non = !g.row(u) & full & !((2u64 << u) - 1);
        while non != 0 {
            let v = non.trailing_zeros() as usize;
            non &= non - 1;
            let sum = du + g.deg(v);
            if sum >= k {
                return Some(AddedEdge { u, v, degree_sum: sum });
            }
        }
    }
    None
}

fn eligible_pairs(g: &Graph, k: usize, out: &mut Vec<(usize, usize)>) {
    out.clear();
    let n = g.n();
    let full = g.full_mask();
    for u in 0..n {
        let du = g.deg(u);
        let mut non = !g.row(u) & full & !((2u64 << u) - 1);
        while non != 0 {
            let v = non.trailing_zeros() as usize;
            non &= non - 1;
            if du + g.deg(v) >= k {
                out.push((u, v));
            }
        }
    }
}

/// k-closure choosing a uniformly random eligible pair at each step.
pub fn randomized_closure(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> ClosureResult {
    let mut closed = g.clone();
    let mut added = Vec::new();
    let mut pairs = Vec::new();
    loop {
        eligible_pairs(&closed, k, &mut pairs);
        let Some(&(u, v)) = pairs.choose(rng) else {
            break;
        };
        added.push(AddedEdge {
            u,
            v,
            degree_sum: closed.deg(u) + closed.deg(v),
        });
        closed.insert_edge(u, v);
    }
    ClosureResult { closed, added, k }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderIndependence {
    Holds,
    Violated {
        first: Vec<AddedEdge>,
        second: Vec<AddedEdge>,
    },
}

impl OrderIndependence {
    pub fn holds(&self) -> bool {
        matches!(self, OrderIndependence::Holds)
    }
}

/// Runs `trials` closures with independent random selection orders (seeded)
/// and checks that all of them end at the same graph.
///
/// # Panics
/// If `trials < 2`.
pub fn closure_order_independence_check(
    g: &Graph,
    k: usize,
    trials: usize,
    seed: u64,
) -> OrderIndependence {
    assert!(trials >= 2, "order independence needs at least two trials");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reference = randomized_closure(g, k, &mut rng);
    for _ in 1..trials {
        let other = randomized_closure(g, k, &mut rng);
        if other.closed != reference.closed {
            return OrderIndependence::Violated {
                first: reference.added,
                second: other.added,
            };
        }
    }
    OrderIndependence::Holds
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MainProperty {
    Holds,
    Violated { u: usize, v: usize, degree_sum: usize },
}

impl MainProperty {
    pub fn holds(&self) -> bool {
        matches!(self, MainProperty::Holds)
    }
}

/// Every nonadjacent pair of the closed graph has degree sum at most `k - 1`.
pub fn main_property_check(result: &ClosureResult) -> MainProperty {
    match first_eligible(&result.closed, result.k) {
        None => MainProperty::Holds,
        Some(e) => MainProperty::Violated {
            u: e.u,
            v: e.v,
            degree_sum: e.degree_sum,
        },
    }
}
