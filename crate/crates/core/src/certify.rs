//! Runs the spectral theorems, Ore's condition and the edge-count criterion
//! on one graph. The result can be cross-checked against the exact oracle.

use serde::{Deserialize, Serialize};

use crate::graph::{recognize_extremal, Extremal, Graph};
use crate::hamilton::{
    edge_count_condition, ham_status, ore_condition, EdgeCountVerdict, OreOutcome, ORACLE_CAP,
};
use crate::spectral::{RadiusEstimator, Relation, SpectralBound, DEFAULT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Guaranteed,
    /// The hypothesis holds but the graph is the named extremal graph, which
    /// lacks the structure.
    Exceptional,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreVerdicts {
    pub path: Verdict,
    pub cycle: Verdict,
    pub path_condition: OreOutcome,
    pub cycle_condition: OreOutcome,
}

/// Threshold relations behind the spectral verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ThresholdRelations {
    /// `mu(G)` vs `n - 2`.
    pub mu_vs_n_minus_2: Option<Relation>,
    /// `mu(complement)` vs `sqrt(n - 1)`.
    pub comp_vs_sqrt_n_minus_1: Option<Relation>,
    /// `mu(complement)` vs `sqrt(n - 2)`.
    pub comp_vs_sqrt_n_minus_2: Option<Relation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub m: usize,
    pub mu_bound: SpectralBound,
    pub mu_comp_bound: SpectralBound,
    pub thm1_path: Verdict,
    pub thm1_cycle: Verdict,
    pub thm2_path: Verdict,
    pub thm2_cycle: Verdict,
    pub ore: OreVerdicts,
    pub fact1: EdgeCountVerdict,
    pub extremal: Extremal,
    pub oracle_path: Option<bool>,
    pub oracle_cycle: Option<bool>,
    pub consistent: Option<bool>,
    #[serde(skip)]
    pub relations: ThresholdRelations,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyOptions {
    pub run_oracle: bool,
    pub oracle_cap: usize,
    /// Width the reported bounds are refined to, if any.
    pub refine_to: Option<f64>,
    /// Also refine the complement's bound (the verdicts never need it).
    pub refine_complement: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            run_oracle: true,
            oracle_cap: 20,
            refine_to: Some(DEFAULT_TOLERANCE),
            refine_complement: true,
        }
    }
}

fn downgrade(fires: bool, extremal: Extremal, exception: Extremal) -> Verdict {
    match (fires, extremal == exception) {
        (false, _) => Verdict::Inconclusive,
        (true, true) => Verdict::Exceptional,
        (true, false) => Verdict::Guaranteed,
    }
}

fn theorem1_verdicts(relation: Relation, extremal: Extremal) -> (Verdict, Verdict) {
    let path = downgrade(
        relation != Relation::Below,
        extremal,
        Extremal::CliquePlusIsolated,
    );
    let cycle = downgrade(
        relation == Relation::Above,
        extremal,
        Extremal::CliquePlusPendant,
    );
    (path, cycle)
}

fn theorem2_verdicts(path_rel: Relation, cycle_rel: Relation, extremal: Extremal) -> (Verdict, Verdict) {
    let path = downgrade(
        path_rel != Relation::Above,
        extremal,
        Extremal::CliquePlusIsolated,
    );
    let cycle = downgrade(
        cycle_rel != Relation::Above,
        extremal,
        Extremal::CliquePlusPendant,
    );
    (path, cycle)
}

/// `mu(G) >= n - 2` gives a path unless K_{n-1}+v; `mu(G) > n - 2` gives a
/// cycle unless K_{n-1}+e. Orders below 3 are inconclusive.
pub fn apply_theorem1(g: &Graph) -> (Verdict, Verdict) {
    if g.n() < 3 {
        return (Verdict::Inconclusive, Verdict::Inconclusive);
    }
    let relation = RadiusEstimator::new(g)
        .compare_integer(g.n() as u64 - 2)
        .relation;
    theorem1_verdicts(relation, recognize_extremal(g))
}

/// `mu(complement) <= sqrt(n - 1)` gives a path unless K_{n-1}+v;
/// `mu(complement) <= sqrt(n - 2)` gives a cycle unless K_{n-1}+e. Orders
/// below 3 are inconclusive.
pub fn apply_theorem2(g: &Graph) -> (Verdict, Verdict) {
    if g.n() < 3 {
        return (Verdict::Inconclusive, Verdict::Inconclusive);
    }
    let comp = g.complement();
    let mut est = RadiusEstimator::new(&comp);
    let n = g.n() as u64;
    let path_rel = est.compare_sqrt(n - 1).relation;
    let cycle_rel = est.compare_sqrt(n - 2).relation;
    theorem2_verdicts(path_rel, cycle_rel, recognize_extremal(g))
}

pub fn certify(g: &Graph, run_oracle: bool) -> Certificate {
    certify_with(
        g,
        &CertifyOptions {
            run_oracle,
            ..CertifyOptions::default()
        },
    )
}

pub fn certify_with(g: &Graph, opts: &CertifyOptions) -> Certificate {
    let n = g.n();
    let m = g.edge_count();
    let extremal = recognize_extremal(g);
    let mut relations = ThresholdRelations::default();

    let mut est = RadiusEstimator::new(g);
    let (thm1_path, thm1_cycle) = if n >= 3 {
        let rel = est.compare_integer(n as u64 - 2).relation;
        relations.mu_vs_n_minus_2 = Some(rel);
        theorem1_verdicts(rel, extremal)
    } else {
        (Verdict::Inconclusive, Verdict::Inconclusive)
    };
    let mu_bound = match opts.refine_to {
        Some(tol) => est.refine_to(tol),
        None => est.bound(),
    };

    let comp = g.complement();
    let mut comp_est = RadiusEstimator::new(&comp);
    let (thm2_path, thm2_cycle) = if n >= 3 {
        let path_rel = comp_est.compare_sqrt(n as u64 - 1).relation;
        let cycle_rel = comp_est.compare_sqrt(n as u64 - 2).relation;
        relations.comp_vs_sqrt_n_minus_1 = Some(path_rel);
        relations.comp_vs_sqrt_n_minus_2 = Some(cycle_rel);
        theorem2_verdicts(path_rel, cycle_rel, extremal)
    } else {
        (Verdict::Inconclusive, Verdict::Inconclusive)
    };
    let mu_comp_bound = match opts.refine_to {
        Some(tol) if opts.refine_complement => comp_est.refine_to(tol),
        _ => comp_est.bound(),
    };

    let path_condition = ore_condition(g, false);
    let cycle_condition = ore_condition(g, true);
    let ore = OreVerdicts {
        path: if path_condition.is_satisfied() {
            Verdict::Guaranteed
        } else {
            Verdict::Inconclusive
        },
        // Ore's cycle theorem needs at least three vertices.
        cycle: if n >= 3 && cycle_condition.is_satisfied() {
            Verdict::Guaranteed
        } else {
            Verdict::Inconclusive
        },
        path_condition,
        cycle_condition,
    };

    let fact1 = edge_count_condition(g);

    let mut cert = Certificate {
        n,
        m,
        mu_bound,
        mu_comp_bound,
        thm1_path,
        thm1_cycle,
        thm2_path,
        thm2_cycle,
        ore,
        fact1,
        extremal,
        oracle_path: None,
        oracle_cycle: None,
        consistent: None,
        relations,
    };

    if opts.run_oracle && n <= opts.oracle_cap.min(ORACLE_CAP) {
        let (path, cycle) = ham_status(g).expect("order checked against the oracle cap");
        cert.oracle_path = Some(path);
        cert.oracle_cycle = Some(cycle);
        cert.consistent = Some(cert.agrees_with(path, cycle));
    }
    cert
}

impl Certificate {
    fn path_verdicts(&self) -> impl Iterator<Item = Verdict> {
        let fact1 = match self.fact1 {
            EdgeCountVerdict::PathGuaranteed | EdgeCountVerdict::CycleGuaranteed => {
                Verdict::Guaranteed
            }
            EdgeCountVerdict::ExceptionalPath => Verdict::Exceptional,
            _ => Verdict::Inconclusive,
        };
        [self.thm1_path, self.thm2_path, self.ore.path, fact1].into_iter()
    }

    fn cycle_verdicts(&self) -> impl Iterator<Item = Verdict> {
        let fact1 = match self.fact1 {
            EdgeCountVerdict::CycleGuaranteed => Verdict::Guaranteed,
            EdgeCountVerdict::ExceptionalCycle => Verdict::Exceptional,
            _ => Verdict::Inconclusive,
        };
        [self.thm1_cycle, self.thm2_cycle, self.ore.cycle, fact1].into_iter()
    }

    /// Every `guaranteed` verdict matches the truth and every `exceptional`
    /// verdict is for a graph that really lacks the structure.
    pub fn agrees_with(&self, path: bool, cycle: bool) -> bool {
        let ok = |v: Verdict, truth: bool| match v {
            Verdict::Guaranteed => truth,
            Verdict::Exceptional => !truth,
            Verdict::Inconclusive => true,
        };
        self.path_verdicts().all(|v| ok(v, path)) && self.cycle_verdicts().all(|v| ok(v, cycle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    fn named(kind: NamedGraph, n: usize) -> Graph {
        make_named(kind, n).unwrap()
    }

    #[test]
    fn theorem1_examples() {
        use Verdict::*;
        assert_eq!(apply_theorem1(&Graph::complete(5).unwrap()), (Guaranteed, Guaranteed));
        assert_eq!(
            apply_theorem1(&named(NamedGraph::CliquePlusIsolated, 6)),
            (Exceptional, Inconclusive)
        );
        assert_eq!(
            apply_theorem1(&named(NamedGraph::CliquePlusPendant, 6)),
            (Guaranteed, Exceptional)
        );
    }

    #[test]
    fn theorem2_examples() {
        use Verdict::*;
        assert_eq!(apply_theorem2(&Graph::complete(6).unwrap()), (Guaranteed, Guaranteed));
        let (path, _) = apply_theorem2(&named(NamedGraph::CliquePlusIsolated, 5));
        assert_eq!(path, Exceptional);
        let (path, cycle) = apply_theorem2(&named(NamedGraph::CliquePlusPendant, 5));
        assert_eq!(cycle, Exceptional);
        assert_eq!(path, Guaranteed);
    }

    #[test]
    fn five_cycle_only_meets_the_complement_path_condition() {
        let cert = certify(&named(NamedGraph::Cycle, 5), true);
        assert_eq!(cert.thm1_path, Verdict::Inconclusive);
        assert_eq!(cert.thm1_cycle, Verdict::Inconclusive);
        // The complement is C_5 again, with radius 2 = sqrt(n-1).
        assert_eq!(cert.thm2_path, Verdict::Guaranteed);
        assert_eq!(cert.relations.comp_vs_sqrt_n_minus_1, Some(Relation::Equal));
        assert_eq!(cert.thm2_cycle, Verdict::Inconclusive);
        assert_eq!(cert.fact1, EdgeCountVerdict::Inconclusive);
        assert_eq!(cert.oracle_cycle, Some(true));
        assert_eq!(cert.consistent, Some(true));
        assert!(cert.mu_bound.contains(2.0));
        assert!(cert.mu_comp_bound.contains(2.0));
    }

    #[test]
    fn complete_graph_everything_guaranteed() {
        let cert = certify(&Graph::complete(6).unwrap(), true);
        for v in [cert.thm1_path, cert.thm1_cycle, cert.thm2_path, cert.thm2_cycle, cert.ore.path, cert.ore.cycle] {
            assert_eq!(v, Verdict::Guaranteed);
        }
        assert_eq!(cert.fact1, EdgeCountVerdict::CycleGuaranteed);
        assert_eq!(cert.consistent, Some(true));
    }

    #[test]
    fn clique_plus_isolated_certificate() {
        let cert = certify(&named(NamedGraph::CliquePlusIsolated, 7), true);
        assert_eq!(cert.thm1_path, Verdict::Exceptional);
        assert_eq!(cert.thm2_path, Verdict::Exceptional);
        assert_eq!(cert.oracle_path, Some(false));
        assert_eq!(cert.consistent, Some(true));
        assert_eq!(cert.relations.mu_vs_n_minus_2, Some(Relation::Equal));
        assert!(cert.mu_bound.resolved_exactly);
    }

    #[test]
    fn oracle_skipped_above_cap() {
        let g = Graph::complete(30).unwrap();
        let cert = certify(&g, true);
        assert_eq!(cert.oracle_path, None);
        assert_eq!(cert.consistent, None);
        assert_eq!(cert.thm1_cycle, Verdict::Guaranteed);
    }

    #[test]
    fn inconsistency_is_detected() {
        let cert = certify(&Graph::complete(4).unwrap(), false);
        assert!(cert.agrees_with(true, true));
        assert!(!cert.agrees_with(true, false));
    }

    #[test]
    fn json_field_names() {
        let cert = certify(&Graph::complete(4).unwrap(), true);
        let v = serde_json::to_value(&cert).unwrap();
        let obj = v.as_object().unwrap();
        for key in [
            "n", "m", "mu_bound", "mu_comp_bound", "thm1_path", "thm1_cycle", "thm2_path",
            "thm2_cycle", "ore", "fact1", "extremal", "oracle_path", "oracle_cycle", "consistent",
        ] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(obj.len(), 14);
        let bound = obj["mu_bound"].as_object().unwrap();
        let mut keys: Vec<_> = bound.keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["hi", "lo", "resolved_exactly"]);
        assert_eq!(obj["extremal"], "none");
        assert_eq!(obj["thm1_path"], "guaranteed");
    }
}
