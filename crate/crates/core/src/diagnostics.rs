//! Numerical checks of the dependency and incoherence conditions at the
//! true rates, closed forms for canonical graphs, and the hazard-matrix
//! rank.

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::cascade::{simulate_set, SourceDistribution};
use crate::error::{NetInfError, Result};
use crate::graph::{DirectedNetwork, NodeId, ParentSet};
use crate::likelihood::{HazardVectorBundle, HessianParts, NodeProblem};
use crate::rng::substream;
use crate::solver::CandidatePolicy;
use crate::transmission::TransmissionModel;

pub const DEFAULT_RANK_TOLERANCE: f64 = 1e-10;

/// Eigen-extremes of `Q_SS` and `|||Q_{S^cS} Q_SS⁻¹|||_∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionCheck {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub incoherence_norm: f64,
}

impl ConditionCheck {
    pub fn epsilon_slack(&self) -> f64 {
        1.0 - self.incoherence_norm
    }
}

fn symmetrized(q: &DMatrix<f64>) -> DMatrix<f64> {
    (q + q.transpose()) * 0.5
}

/// Condition check with the support given as row/column indices of `q`.
pub fn check_conditions_indexed(q: &DMatrix<f64>, support: &[usize]) -> Result<ConditionCheck> {
    let p = q.nrows();
    if q.ncols() != p {
        return Err(NetInfError::InvalidSize(format!("matrix is {}x{}, not square", p, q.ncols())));
    }
    if support.is_empty() {
        return Err(NetInfError::InvalidParameter("support must be nonempty".into()));
    }
    let mut in_support = vec![false; p];
    for &s in support {
        if s >= p {
            return Err(NetInfError::Index { index: s, num_nodes: p });
        }
        in_support[s] = true;
    }
    let support: Vec<usize> = (0..p).filter(|&k| in_support[k]).collect();
    let complement: Vec<usize> = (0..p).filter(|&k| !in_support[k]).collect();

    let q = symmetrized(q);
    let q_ss = q.select_rows(&support).select_columns(&support);
    let eig = q_ss.clone().symmetric_eigen();
    let lambda_min = eig.eigenvalues.min();
    let lambda_max = eig.eigenvalues.max();
    if !(lambda_min > lambda_max.abs() * 1e-12) {
        return Err(NetInfError::Singular(format!("support block has eigenvalues in [{lambda_min}, {lambda_max}]")));
    }
    let incoherence_norm = if complement.is_empty() {
        0.0
    } else {
        // Q_SS is symmetric, so (Q_{S^cS} Q_SS⁻¹)ᵀ = Q_SS⁻¹ Q_{SS^c}.
        let q_ssc = q.select_rows(&support).select_columns(&complement);
        let chol =
            q_ss.cholesky().ok_or_else(|| NetInfError::Singular("support block is not positive definite".into()))?;
        let a_t = chol.solve(&q_ssc);
        a_t.column_iter().map(|col| col.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
    };
    Ok(ConditionCheck { lambda_min, lambda_max, incoherence_norm })
}

/// Condition check with the support given as a parent set; `candidates`
/// maps rows of `q` to nodes.
pub fn check_conditions(q: &DMatrix<f64>, candidates: &[NodeId], parents: &ParentSet) -> Result<ConditionCheck> {
    let support = parents
        .parents
        .iter()
        .map(|&j| {
            candidates
                .iter()
                .position(|&k| k == j)
                .ok_or_else(|| NetInfError::InvalidParameter(format!("parent {j} is not among the candidates")))
        })
        .collect::<Result<Vec<_>>>()?;
    check_conditions_indexed(q, &support)
}

/// Numerical rank of the hazard matrix: singular values above
/// `rel_tol` times the largest.
pub fn hazard_rank_with_tolerance(bundle: &HazardVectorBundle, rel_tol: f64) -> usize {
    let x = bundle.matrix();
    let nonzero: Vec<usize> = (0..x.ncols()).filter(|&c| x.column(c).iter().any(|&v| v != 0.0)).collect();
    if nonzero.is_empty() || x.nrows() == 0 {
        return 0;
    }
    let x = x.select_columns(&nonzero);
    let sv = x.transpose().svd(false, false).singular_values;
    let largest = sv.max();
    sv.iter().filter(|&&s| s > rel_tol * largest).count()
}

pub fn hazard_rank(bundle: &HazardVectorBundle) -> usize {
    hazard_rank_with_tolerance(bundle, DEFAULT_RANK_TOLERANCE)
}

/// Monte Carlo Hessian of the target's objective at the true rates.
#[derive(Debug, Clone)]
pub struct TruthHessian {
    pub target: NodeId,
    pub candidates: Vec<NodeId>,
    pub true_rates: Vec<f64>,
    pub parts: HessianParts,
    pub q: DMatrix<f64>,
}

impl TruthHessian {
    pub fn sample_n(&self) -> usize {
        self.parts.n
    }

    /// Standard error of every entry of `q` as the mean of per-cascade
    /// outer products.
    pub fn entry_standard_errors(&self) -> DMatrix<f64> {
        let x = &self.parts.hazard.columns;
        let p = x.nrows();
        let n = x.ncols();
        let mut se = DMatrix::zeros(p, p);
        if n < 2 {
            return se;
        }
        for j in 0..p {
            for k in 0..=j {
                let mean = self.q[(j, k)] - if j == k { self.parts.diag[j] } else { 0.0 };
                let ss: f64 = (0..n).map(|c| (x[(j, c)] * x[(k, c)] - mean).powi(2)).sum();
                let v = (ss / (n - 1) as f64 / n as f64).sqrt();
                se[(j, k)] = v;
                se[(k, j)] = v;
            }
        }
        se
    }

    /// Bootstrap standard error of the incoherence norm, resampling
    /// cascades. Replicates with a singular support block are skipped.
    pub fn incoherence_stderr(&self, support: &[usize], replicates: usize, seed: u64) -> Option<f64> {
        let x = &self.parts.hazard.columns;
        let n = x.ncols();
        if n == 0 {
            return None;
        }
        let diag = DMatrix::from_diagonal(&self.parts.diag);
        let norms: Vec<f64> = (0..replicates)
            .filter_map(|b| {
                let mut rng = substream(seed, b as u64);
                let picks: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
                let xb = x.select_columns(&picks);
                let q = &diag + &xb * xb.transpose() / n as f64;
                check_conditions_indexed(&q, support).ok().map(|c| c.incoherence_norm)
            })
            .collect();
        if norms.len() < 2 {
            return None;
        }
        let mean = norms.iter().sum::<f64>() / norms.len() as f64;
        let var = norms.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (norms.len() - 1) as f64;
        Some(var.sqrt())
    }
}

fn candidates_for(net: &DirectedNetwork, target: NodeId, policy: CandidatePolicy<'_>) -> Result<Vec<NodeId>> {
    Ok(match policy {
        CandidatePolicy::AllPairs => (0..net.num_nodes()).filter(|&k| k != target).collect(),
        CandidatePolicy::SuperNeighborhood(reference) => reference.super_neighborhood(target)?.candidates(),
    })
}

/// Simulates `n` cascades and assembles the target's Hessian at the true
/// rates of `net`.
#[allow(clippy::too_many_arguments)]
pub fn empirical_hessian_at_truth(
    net: &DirectedNetwork,
    model: &TransmissionModel,
    sources: &SourceDistribution,
    target: NodeId,
    n: usize,
    window: f64,
    seed: u64,
    policy: CandidatePolicy<'_>,
) -> Result<TruthHessian> {
    let set = simulate_set(net, model, sources, n, window, seed)?;
    let candidates = candidates_for(net, target, policy)?;
    let true_rates: Vec<f64> = candidates.iter().map(|&k| net.rate(k, target).unwrap_or(0.0)).collect();
    let prob = NodeProblem::new(target, candidates.clone(), &set, *model)?;
    if prob.num_cascades() == 0 {
        return Err(NetInfError::InvalidSize(format!("every cascade started at target {target}")));
    }
    let parts = prob.hessian(&true_rates)?;
    let q = parts.assemble();
    Ok(TruthHessian { target, candidates, true_rates, parts, q })
}

/// Everything reported for one target.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub target: NodeId,
    pub d: usize,
    pub p: usize,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub incoherence_norm: f64,
    pub epsilon_slack: f64,
    pub hazard_rank: usize,
    pub sample_n: usize,
    pub incoherence_stderr: Option<f64>,
}

pub const REPORT_CSV_HEADER: &str = "target,d,p,lambda_min,lambda_max,incoherence_norm,epsilon_slack,hazard_rank,n";

impl ConditionReport {
    pub fn from_hessian(h: &TruthHessian, parents: &ParentSet, bootstrap: usize, seed: u64) -> Result<Self> {
        let support: Vec<usize> =
            h.candidates.iter().enumerate().filter(|(_, k)| parents.parents.contains(k)).map(|(idx, _)| idx).collect();
        if support.len() != parents.in_degree() {
            return Err(NetInfError::InvalidParameter(format!("some parents of {} are not candidates", h.target)));
        }
        let check = check_conditions_indexed(&h.q, &support)?;
        let incoherence_stderr = if bootstrap > 0 { h.incoherence_stderr(&support, bootstrap, seed) } else { None };
        Ok(ConditionReport {
            target: h.target,
            d: parents.in_degree(),
            p: h.candidates.len() + 1,
            lambda_min: check.lambda_min,
            lambda_max: check.lambda_max,
            incoherence_norm: check.incoherence_norm,
            epsilon_slack: check.epsilon_slack(),
            hazard_rank: hazard_rank(&h.parts.hazard),
            sample_n: h.sample_n(),
            incoherence_stderr,
        })
    }

    pub fn csv_row(&self) -> String {
        use crate::decimal::format_decimal as f;
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.target,
            self.d,
            self.p,
            f(self.lambda_min),
            f(self.lambda_max),
            f(self.incoherence_norm),
            f(self.epsilon_slack),
            self.hazard_rank,
            self.sample_n
        )
    }
}

/// Simulates, assembles the Hessian at the truth and checks the conditions
/// for one target.
#[allow(clippy::too_many_arguments)]
pub fn diagnose_node(
    net: &DirectedNetwork,
    model: &TransmissionModel,
    sources: &SourceDistribution,
    target: NodeId,
    n: usize,
    window: f64,
    seed: u64,
    bootstrap: usize,
) -> Result<ConditionReport> {
    let parents = net.parent_set(target)?;
    if parents.in_degree() == 0 {
        return Err(NetInfError::InvalidParameter(format!("node {target} has no parents")));
    }
    let h = empirical_hessian_at_truth(
        net,
        model,
        sources,
        target,
        n,
        window,
        seed,
        CandidatePolicy::SuperNeighborhood(net),
    )?;
    ConditionReport::from_hessian(&h, &parents, bootstrap, seed ^ 0x5eed_b007)
}

/// Largest incoherence slack for leaf `i` of a star whose root is the only
/// source, given root-to-leaf rates. With `window = None` the infinite
/// horizon limit `α_i / (α_i + max_j α_j)` is returned.
pub fn closed_form_star_incoherence(rates: &[f64], i: usize, window: Option<f64>) -> Result<f64> {
    if rates.len() < 2 {
        return Err(NetInfError::InvalidSize("star needs at least two leaves".into()));
    }
    if i >= rates.len() {
        return Err(NetInfError::Index { index: i, num_nodes: rates.len() });
    }
    if let Some(r) = rates.iter().find(|r| !(**r > 0.0 && r.is_finite())) {
        return Err(NetInfError::InvalidParameter(format!("rates must be positive, got {r}")));
    }
    let ai = rates[i];
    let others = rates.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a);
    match window {
        None => {
            let amax = others.fold(0.0, f64::max);
            Ok(ai / (ai + amax))
        }
        Some(t) if t > 0.0 => {
            let denom = 1.0 + (-ai * t).exp();
            Ok(others.map(|aj| ai * (-(-(ai + aj) * t).exp_m1()) / ((ai + aj) * denom)).fold(f64::INFINITY, f64::min))
        }
        Some(t) => Err(NetInfError::InvalidParameter(format!("window must be positive, got {t}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainIncoherence {
    /// `(P0 + P1) / (P0 + P1 + P2)` and `P0 / (P0 + P1 + P2)`.
    pub ratios: [f64; 2],
    pub epsilon_max: f64,
    /// Whether some `ε > 0` satisfies both bounds.
    pub satisfiable: bool,
}

/// Incoherence bounds for the last node of the chain `0 → 1 → 2 → 3`
/// under an infinite horizon, from source probabilities `P0..P2` (a fourth
/// entry for the target itself is accepted and ignored).
pub fn closed_form_chain_incoherence(probs: &[f64]) -> Result<ChainIncoherence> {
    if !(probs.len() == 3 || probs.len() == 4) {
        return Err(NetInfError::InvalidSize(format!("expected 3 or 4 source probabilities, got {}", probs.len())));
    }
    if let Some(p) = probs.iter().find(|p| !(**p >= 0.0 && p.is_finite())) {
        return Err(NetInfError::InvalidParameter(format!("probabilities must be nonnegative, got {p}")));
    }
    let total = probs[0] + probs[1] + probs[2];
    if total == 0.0 {
        return Err(NetInfError::InvalidParameter("no upstream node can be a source".into()));
    }
    let ratios = [(probs[0] + probs[1]) / total, probs[0] / total];
    let epsilon_max = 1.0 - ratios[0].max(ratios[1]);
    Ok(ChainIncoherence { ratios, epsilon_max, satisfiable: epsilon_max > 0.0 })
}

/// Smallest and largest eigenvalue of a symmetric matrix.
pub fn eigen_extremes(q: &DMatrix<f64>) -> (f64, f64) {
    let eig: DVector<f64> = symmetrized(q).symmetric_eigen().eigenvalues;
    (eig.min(), eig.max())
}
