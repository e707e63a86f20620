//! Certified bounds on the adjacency spectral radius and exact threshold
//! comparisons.
//!
//! Bounds come from Collatz–Wielandt quotients: for an irreducible nonnegative
//! matrix `A` and any strictly positive vector `x`,
//! `min_i (Ax)_i / x_i <= mu <= max_i (Ax)_i / x_i`. The iterate is driven by
//! `x <- (A + I) x`, which has the same Perron vector as `A` but no
//! eigenvalue of equal modulus, so bipartite components converge too. Each
//! connected component is iterated separately and the graph bound is the
//! componentwise maximum.
//!
//! Floating-point quotients are widened by a relative rounding allowance of
//! `(n + 4) * 2^-53`, which dominates the error of a sum of at most `n - 1`
//! positive terms followed by one division.

pub mod exact;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use exact::{classify_semidefinite, determinant, Definiteness, IntMatrix};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const ITERATION_CAP: u64 = 1_000_000;

/// Interval width below which a threshold comparison switches to exact
/// arithmetic.
pub const EXACT_WIDTH: f64 = 1e-12;

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;
const STALL_WINDOW: u32 = 2_000;
const MAX_RESTARTS: u32 = 3;

/// Closed interval certified to contain the spectral radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralBound {
    pub lo: f64,
    pub hi: f64,
    #[serde(skip)]
    pub iterations: u64,
    /// Set when a threshold tie was settled by exact integer arithmetic.
    pub resolved_exactly: bool,
    /// False when the iteration cap or stagnation stopped refinement before
    /// the requested width was reached.
    #[serde(skip)]
    pub converged: bool,
}

impl SpectralBound {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Below,
    Equal,
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Threshold {
    /// Compare `mu` with the integer `t`.
    Integer(u64),
    /// Compare `mu` with `sqrt(s)`.
    SqrtOf(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdComparison {
    pub relation: Relation,
    pub threshold: Threshold,
    pub bound: SpectralBound,
}

#[derive(Debug, Clone)]
struct Component {
    mask: u64,
    lo: f64,
    hi: f64,
    best_width: f64,
    since_improvement: u32,
    restarts: u32,
    stalled: bool,
}

/// Incremental power iteration that can be refined on demand.
///
/// Keeping the state lets several thresholds be tested against one graph
/// without restarting the iteration.
#[derive(Debug, Clone)]
pub struct RadiusEstimator<'g> {
    graph: &'g Graph,
    x: [f64; 64],
    ax: [f64; 64],
    components: Vec<Component>,
    iterations: u64,
    resolved_exactly: bool,
    slack: f64,
}

impl<'g> RadiusEstimator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.n();
        let components = graph
            .components()
            .into_iter()
            .map(|mask| {
                // Single vertices have mu = 0 exactly.
                let (lo, hi) = if mask.count_ones() == 1 {
                    (0.0, 0.0)
                } else {
                    (0.0, f64::INFINITY)
                };
                Component {
                    mask,
                    lo,
                    hi,
                    best_width: f64::INFINITY,
                    since_improvement: 0,
                    restarts: 0,
                    stalled: false,
                }
            })
            .collect();
        let mut x = [0.0; 64];
        x[..n].fill(1.0);
        RadiusEstimator {
            graph,
            x,
            ax: [0.0; 64],
            components,
            iterations: 0,
            resolved_exactly: false,
            slack: (n as f64 + 4.0) * UNIT_ROUNDOFF,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Current certified interval.
    pub fn bound(&self) -> SpectralBound {
        let (lo, hi) = self.components.iter().fold((0.0f64, 0.0f64), |(lo, hi), c| {
            (lo.max(c.lo), hi.max(c.hi))
        });
        SpectralBound {
            lo,
            hi,
            iterations: self.iterations,
            resolved_exactly: self.resolved_exactly,
            converged: true,
        }
    }

    /// Iterates until the interval is at most `tol` wide, the iteration cap
    /// is hit, or every relevant component has stagnated.
    pub fn refine_to(&mut self, tol: f64) -> SpectralBound {
        while self.bound().width() > tol {
            if !self.advance(tol) {
                break;
            }
        }
        let mut b = self.bound();
        b.converged = b.width() <= tol;
        b
    }

    /// One power step on every component that could still hold the maximum
    /// and is wider than `target`. Returns false if no component was stepped.
    fn advance(&mut self, target: f64) -> bool {
        if self.iterations >= ITERATION_CAP {
            return false;
        }
        let global_lo = self.bound().lo;
        let mut stepped = false;
        for idx in 0..self.components.len() {
            let c = &self.components[idx];
            if c.stalled || c.hi < global_lo || c.hi - c.lo <= target {
                continue;
            }
            self.step_component(idx);
            stepped = true;
        }
        if stepped {
            self.iterations += 1;
        }
        stepped
    }

    fn step_component(&mut self, idx: usize) {
        let mask = self.components[idx].mask;
        let rows = self.graph.rows();

        let mut qmin = f64::INFINITY;
        let mut qmax = 0.0f64;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut s = 0.0;
            let mut nb = rows[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                s += self.x[w];
            }
            self.ax[v] = s;
            let q = s / self.x[v];
            qmin = qmin.min(q);
            qmax = qmax.max(q);
        }

        let slack = self.slack;
        let c = &mut self.components[idx];
        c.lo = c.lo.max(qmin * (1.0 - slack));
        c.hi = c.hi.min(qmax * (1.0 + slack));
        let width = c.hi - c.lo;
        if width < c.best_width {
            c.best_width = width;
            c.since_improvement = 0;
        } else {
            c.since_improvement += 1;
        }
        let restart = c.since_improvement >= STALL_WINDOW;
        if restart {
            c.since_improvement = 0;
            if c.restarts >= MAX_RESTARTS {
                c.stalled = true;
            }
            c.restarts += 1;
        }

        let n = self.graph.n() as f64;
        let mut scale = 0.0f64;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let next = if restart {
                // deterministic positive perturbation
                1.0 + (v as f64 + 1.0) / (n + 1.0)
            } else {
                self.ax[v] + self.x[v]
            };
            self.x[v] = next;
            scale = scale.max(next);
        }
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            self.x[v] /= scale;
        }
    }

    /// Exact trichotomy of `mu` against the integer `t`.
    pub fn compare_integer(&mut self, t: u64) -> ThresholdComparison {
        let tf = t as f64;
        let relation = loop {
            let b = self.bound();
            if b.lo > tf {
                break Relation::Above;
            }
            if b.hi < tf {
                break Relation::Below;
            }
            if b.width() < EXACT_WIDTH || !self.advance(EXACT_WIDTH / 4.0) {
                self.resolved_exactly = true;
                break exact_integer_relation(self.graph, t);
            }
        };
        ThresholdComparison {
            relation,
            threshold: Threshold::Integer(t),
            bound: self.bound(),
        }
    }

    /// Exact trichotomy of `mu` against `sqrt(s)`, decided on `mu^2` vs `s`.
    pub fn compare_sqrt(&mut self, s: u64) -> ThresholdComparison {
        let sf = s as f64;
        let up = 1.0 + 4.0 * UNIT_ROUNDOFF;
        let relation = loop {
            let b = self.bound();
            // lo >= 0, so squaring preserves order; the factors absorb the
            // rounding of the products.
            if b.lo * b.lo > sf * up {
                break Relation::Above;
            }
            if b.hi * b.hi * up < sf {
                break Relation::Below;
            }
            if b.width() < EXACT_WIDTH || !self.advance(EXACT_WIDTH / 4.0) {
                self.resolved_exactly = true;
                break exact_sqrt_relation(self.graph, s);
            }
        };
        ThresholdComparison {
            relation,
            threshold: Threshold::SqrtOf(s),
            bound: self.bound(),
        }
    }
}

/// Decides `mu` vs `t` with `M = tI - A`: `det(A - tI) = 0` iff `t` is an
/// eigenvalue; `M` positive semidefinite iff `mu <= t`.
fn exact_integer_relation(g: &Graph, t: u64) -> Relation {
    let t = t as i64;
    let a_minus_t = IntMatrix::from_fn(g.n(), |i, j| {
        g.has_edge(i, j) as i64 - if i == j { t } else { 0 }
    });
    let m = IntMatrix::from_fn(g.n(), |i, j| -a_minus_t.get(i, j));
    relation_from(determinant(&a_minus_t).sign() == num_bigint::Sign::NoSign, &m)
}

/// Same as [`exact_integer_relation`] on `A^2` and `s`. `A` is symmetric, so
/// the largest eigenvalue of `A^2` is `mu^2`.
fn exact_sqrt_relation(g: &Graph, s: u64) -> Relation {
    let s = s as i64;
    let rows = g.rows();
    let a2_minus_s = IntMatrix::from_fn(g.n(), |i, j| {
        (rows[i] & rows[j]).count_ones() as i64 - if i == j { s } else { 0 }
    });
    let m = IntMatrix::from_fn(g.n(), |i, j| -a2_minus_s.get(i, j));
    relation_from(determinant(&a2_minus_s).sign() == num_bigint::Sign::NoSign, &m)
}

fn relation_from(threshold_is_eigenvalue: bool, threshold_minus_matrix: &IntMatrix) -> Relation {
    match classify_semidefinite(threshold_minus_matrix) {
        Definiteness::Indefinite => Relation::Above,
        Definiteness::PositiveDefinite => {
            debug_assert!(!threshold_is_eigenvalue);
            Relation::Below
        }
        Definiteness::SingularSemidefinite => {
            debug_assert!(threshold_is_eigenvalue);
            Relation::Equal
        }
    }
}

/// Certified interval of width at most `tol` around the spectral radius.
/// Zero-edge graphs return `[0, 0]`.
pub fn spectral_radius_bound(g: &Graph, tol: f64) -> Result<SpectralBound> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    Ok(RadiusEstimator::new(g).refine_to(tol))
}

pub fn compare_to_integer_threshold(g: &Graph, t: u64) -> ThresholdComparison {
    RadiusEstimator::new(g).compare_integer(t)
}

pub fn compare_to_sqrt_threshold(g: &Graph, s: u64) -> ThresholdComparison {
    RadiusEstimator::new(g).compare_sqrt(s)
}

/// Upper bound `-1/2 + sqrt(2m + 1/4)` on the spectral radius of any graph
/// with `m` edges.
pub fn stanley_bound(m: u64) -> f64 {
    -0.5 + (2.0 * m as f64 + 0.25).sqrt()
}

/// Outcome of an inequality or identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckOutcome {
    Holds,
    Violated { witness: String, lhs: f64, rhs: f64 },
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }
}

/// Checks `n * mu^2 >= sum of squared degrees` using the certified upper
/// end of `bound`. A reported violation is genuine because `hi >= mu`.
pub fn hofmeister_check_with(g: &Graph, bound: &SpectralBound) -> CheckOutcome {
    let n = g.n() as f64;
    let lhs = n * bound.hi * bound.hi * (1.0 + 4.0 * UNIT_ROUNDOFF);
    let rhs = g.degree_sequence().sum_of_squares() as f64;
    if lhs >= rhs {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Violated {
            witness: g.to_string(),
            lhs,
            rhs,
        }
    }
}

pub fn hofmeister_check(g: &Graph) -> CheckOutcome {
    let bound = RadiusEstimator::new(g).refine_to(DEFAULT_TOLERANCE);
    hofmeister_check_with(g, &bound)
}

/// Checks `sum_v d(v)^2 = sum_{uv in E} (d(u) + d(v))` exactly.
pub fn degree_square_edge_identity_check(g: &Graph) -> CheckOutcome {
    let degrees = g.degree_sequence();
    let lhs = degrees.sum_of_squares();
    let rhs: u64 = g
        .edges()
        .map(|(u, v)| (degrees.0[u] + degrees.0[v]) as u64)
        .sum();
    if lhs == rhs {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Violated {
            witness: g.to_string(),
            lhs: lhs as f64,
            rhs: rhs as f64,
        }
    }
}
