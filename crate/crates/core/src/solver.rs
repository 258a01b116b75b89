//! ℓ1-regularised rate estimation by proximal gradient descent.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cascade::CascadeSet;
use crate::error::{NetInfError, Result};
use crate::graph::{DirectedNetwork, Edge, NodeId};
use crate::likelihood::NodeProblem;
use crate::transmission::TransmissionModel;

pub const DEFAULT_INITIAL_RATE: f64 = 0.1;
pub const DEFAULT_MAX_ITERS: usize = 5000;
pub const DEFAULT_TOL: f64 = 1e-8;

/// Nonnegative soft-thresholding `(v - θ)₊`.
pub fn soft_threshold(v: &[f64], theta: f64) -> Result<Vec<f64>> {
    if !(theta >= 0.0) {
        return Err(NetInfError::Domain(format!("threshold must be nonnegative, got {theta}")));
    }
    Ok(v.iter().map(|&x| shrink(x, theta)).collect())
}

#[inline]
fn shrink(x: f64, theta: f64) -> f64 {
    let y = x - theta;
    if y > 0.0 {
        y
    } else {
        0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepRule {
    /// Constant step `L`.
    Fixed(f64),
    /// Start every iteration from twice the last accepted step (the first
    /// from `initial`) and multiply by `shrink` until the quadratic upper
    /// bound holds.
    Backtracking { initial: f64, shrink: f64 },
}

impl Default for StepRule {
    fn default() -> Self {
        StepRule::Backtracking { initial: 1.0, shrink: 0.5 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub lambda: f64,
    pub max_iters: usize,
    pub step: StepRule,
    pub tol: f64,
    /// Keep the regularised objective at every accepted iterate.
    pub record_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            lambda: 0.0,
            max_iters: DEFAULT_MAX_ITERS,
            step: StepRule::default(),
            tol: DEFAULT_TOL,
            record_trace: false,
        }
    }
}

impl SolverConfig {
    pub fn with_lambda(lambda: f64) -> Self {
        SolverConfig { lambda, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return Err(NetInfError::InvalidParameter(format!("lambda must be >= 0, got {}", self.lambda)));
        }
        if self.max_iters == 0 {
            return Err(NetInfError::InvalidParameter("max_iters must be positive".into()));
        }
        if !(self.tol >= 0.0) {
            return Err(NetInfError::InvalidParameter(format!("tol must be >= 0, got {}", self.tol)));
        }
        match self.step {
            StepRule::Fixed(l) if !(l > 0.0 && l.is_finite()) => {
                Err(NetInfError::InvalidParameter(format!("step must be positive, got {l}")))
            }
            StepRule::Backtracking { initial, shrink }
                if !(initial > 0.0 && initial.is_finite() && shrink > 0.0 && shrink < 1.0) =>
            {
                Err(NetInfError::InvalidParameter(format!(
                    "backtracking needs initial > 0 and shrink in (0, 1), got {initial}, {shrink}"
                )))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateEstimate {
    pub target: NodeId,
    pub candidates: Vec<NodeId>,
    /// Aligned with `candidates`; zero means no edge.
    pub alphas: Vec<f64>,
    pub lambda: f64,
    pub iterations_used: usize,
    pub converged: bool,
    /// `ℓ(α̂) + λ‖α̂‖₁`.
    pub objective: f64,
    pub trace: Option<Vec<f64>>,
}

impl RateEstimate {
    fn empty(target: NodeId, candidates: Vec<NodeId>, lambda: f64) -> Self {
        let alphas = vec![0.0; candidates.len()];
        RateEstimate {
            target,
            candidates,
            alphas,
            lambda,
            iterations_used: 0,
            converged: true,
            objective: 0.0,
            trace: None,
        }
    }

    /// Parents with a strictly positive estimated rate.
    pub fn parents(&self) -> BTreeSet<NodeId> {
        self.candidates.iter().zip(&self.alphas).filter(|(_, &a)| a > 0.0).map(|(&k, _)| k).collect()
    }

    pub fn rate_of(&self, node: NodeId) -> Option<f64> {
        self.candidates.iter().position(|&k| k == node).map(|idx| self.alphas[idx])
    }
}

fn regularized(value: f64, alpha: &[f64], lambda: f64) -> f64 {
    value + lambda * alpha.iter().sum::<f64>()
}

fn check_finite(grad: &[f64]) -> Result<()> {
    match grad.iter().find(|g| !g.is_finite()) {
        Some(g) => Err(NetInfError::Numeric(format!("non-finite gradient entry {g}"))),
        None => Ok(()),
    }
}

/// Minimises `ℓ(α) + λ Σ α` over `α ≥ 0`.
///
/// Candidates that never appear in any term of the objective are pinned at
/// zero; every other coordinate starts at [`DEFAULT_INITIAL_RATE`].
pub fn prox_grad_solve(prob: &NodeProblem, cfg: &SolverConfig) -> Result<RateEstimate> {
    cfg.validate()?;
    let lambda = cfg.lambda;
    let mut alpha: Vec<f64> =
        prob.contributing().into_iter().map(|c| if c { DEFAULT_INITIAL_RATE } else { 0.0 }).collect();
    let value = prob.neg_log_likelihood(&alpha)?;
    if !value.is_finite() {
        return Err(NetInfError::Initialization);
    }
    let (mut value, mut grad) = prob.value_and_gradient(&alpha)?;
    check_finite(&grad)?;
    let mut objective = regularized(value, &alpha, lambda);
    let mut trace = cfg.record_trace.then(|| vec![objective]);

    let mut step = match cfg.step {
        StepRule::Fixed(l) => l,
        StepRule::Backtracking { initial, .. } => initial / 2.0,
    };
    let mut next = vec![0.0; alpha.len()];
    let mut iterations = 0;
    let mut converged = false;

    while iterations < cfg.max_iters {
        iterations += 1;
        let next_value = match cfg.step {
            StepRule::Fixed(l) => {
                proximal_step(&alpha, &grad, l, lambda, &mut next);
                prob.neg_log_likelihood(&next)?
            }
            StepRule::Backtracking { shrink, .. } => {
                step *= 2.0;
                loop {
                    proximal_step(&alpha, &grad, step, lambda, &mut next);
                    let candidate = prob.neg_log_likelihood(&next)?;
                    let mut linear = 0.0;
                    let mut sq = 0.0;
                    for k in 0..alpha.len() {
                        let d = next[k] - alpha[k];
                        linear += grad[k] * d;
                        sq += d * d;
                    }
                    if sq == 0.0 || candidate <= value + linear + sq / (2.0 * step) {
                        break candidate;
                    }
                    step *= shrink;
                    if step < f64::MIN_POSITIVE {
                        return Err(NetInfError::Numeric("line search step underflowed".into()));
                    }
                }
            }
        };
        if !next_value.is_finite() {
            return Err(NetInfError::Numeric("step produced an infinite objective".into()));
        }
        if matches!(cfg.step, StepRule::Backtracking { .. }) && regularized(next_value, &next, lambda) > objective {
            // Only possible through rounding once the iterates have settled.
            converged = true;
            break;
        }

        let change = alpha.iter().zip(&next).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        std::mem::swap(&mut alpha, &mut next);
        (value, grad) = prob.value_and_gradient(&alpha)?;
        check_finite(&grad)?;
        objective = regularized(value, &alpha, lambda);
        if let Some(t) = trace.as_mut() {
            t.push(objective);
        }
        if change <= cfg.tol {
            converged = true;
            break;
        }
    }

    Ok(RateEstimate {
        target: prob.target(),
        candidates: prob.candidates().to_vec(),
        alphas: alpha,
        lambda,
        iterations_used: iterations,
        converged,
        objective,
        trace,
    })
}

#[inline]
fn proximal_step(alpha: &[f64], grad: &[f64], step: f64, lambda: f64, out: &mut [f64]) {
    for k in 0..alpha.len() {
        out[k] = if alpha[k] == 0.0 && grad[k] == 0.0 { 0.0 } else { shrink(alpha[k] - step * grad[k], lambda * step) };
    }
}

/// `λ = k √(log p / n)`.
pub fn select_lambda(k_const: f64, p: usize, n: usize) -> Result<f64> {
    if p < 2 {
        return Err(NetInfError::Domain(format!("need p >= 2 for log p > 0, got {p}")));
    }
    if n == 0 {
        return Err(NetInfError::Domain("need n >= 1".into()));
    }
    if !(k_const > 0.0 && k_const.is_finite()) {
        return Err(NetInfError::InvalidParameter(format!("lambda constant must be positive, got {k_const}")));
    }
    Ok(k_const * ((p as f64).ln() / n as f64).sqrt())
}

/// The regularisation level of the recovery guarantee,
/// `8 k₃ (2 − ε)/ε · √(log p / n)`, where `k₃` bounds the gradient of the
/// log-likelihood and `ε` is the incoherence slack.
pub fn guarantee_lambda(k3: f64, epsilon: f64, p: usize, n: usize) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(NetInfError::InvalidParameter(format!("epsilon must be in (0, 1], got {epsilon}")));
    }
    select_lambda(8.0 * k3 * (2.0 - epsilon) / epsilon, p, n)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LambdaRule {
    Fixed(f64),
    /// `k √(log p / n)` with `p` the candidate pool size (including the
    /// target) and `n` the cascades entering the node's objective.
    Scaled {
        k: f64,
    },
}

impl LambdaRule {
    pub fn resolve(&self, p: usize, n: usize) -> Result<f64> {
        match *self {
            LambdaRule::Fixed(v) if v >= 0.0 && v.is_finite() => Ok(v),
            LambdaRule::Fixed(v) => Err(NetInfError::InvalidParameter(format!("lambda must be >= 0, got {v}"))),
            LambdaRule::Scaled { k } => select_lambda(k, p, n),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum CandidatePolicy<'a> {
    /// Every other node is a candidate parent.
    AllPairs,
    /// Candidates and cascades restricted to the target's
    /// super-neighborhood in the given reference topology.
    SuperNeighborhood(&'a DirectedNetwork),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InferenceConfig {
    pub lambda: LambdaRule,
    /// `solver.lambda` is replaced by the per-node value of `lambda`.
    pub solver: SolverConfig,
}

impl InferenceConfig {
    pub fn new(lambda: LambdaRule) -> Self {
        InferenceConfig { lambda, solver: SolverConfig::default() }
    }
}

/// Estimates the incoming rates of one node.
pub fn infer_node(
    set: &CascadeSet,
    model: TransmissionModel,
    target: NodeId,
    cfg: &InferenceConfig,
    policy: CandidatePolicy<'_>,
) -> Result<RateEstimate> {
    let num_nodes = set.num_nodes();
    if target >= num_nodes {
        return Err(NetInfError::Index { index: target, num_nodes });
    }
    let (candidates, p, filtered) = match policy {
        CandidatePolicy::AllPairs => ((0..num_nodes).filter(|&k| k != target).collect(), num_nodes, None),
        CandidatePolicy::SuperNeighborhood(net) => {
            if net.num_nodes() != num_nodes {
                return Err(NetInfError::InvalidParameter(format!(
                    "reference topology has {} nodes, cascades have {num_nodes}",
                    net.num_nodes()
                )));
            }
            let sn = net.super_neighborhood(target)?;
            let filtered = set.filter_by_superneighborhood(&sn);
            (sn.candidates(), sn.size().max(sn.candidates().len() + 1), Some(filtered))
        }
    };
    let set = filtered.as_ref().unwrap_or(set);
    let prob = NodeProblem::new(target, candidates, set, model)?;
    if prob.dim() == 0 || prob.num_cascades() == 0 {
        return Ok(RateEstimate::empty(target, prob.candidates().to_vec(), 0.0));
    }
    let lambda = cfg.lambda.resolve(p, prob.num_cascades())?;
    prox_grad_solve(&prob, &SolverConfig { lambda, ..cfg.solver })
}

/// Per-node estimates assembled into a network with an edge `j → i` for
/// every strictly positive rate.
#[derive(Debug, Clone, PartialEq)]
pub struct InferredNetwork {
    pub network: DirectedNetwork,
    pub estimates: Vec<RateEstimate>,
    pub model: TransmissionModel,
}

impl InferredNetwork {
    pub fn edge_set(&self) -> BTreeSet<(NodeId, NodeId)> {
        self.network.edge_set()
    }

    /// Largest per-node λ.
    pub fn max_lambda(&self) -> f64 {
        self.estimates.iter().map(|e| e.lambda).fold(0.0, f64::max)
    }

    pub fn max_iterations(&self) -> usize {
        self.estimates.iter().map(|e| e.iterations_used).max().unwrap_or(0)
    }

    pub fn all_converged(&self) -> bool {
        self.estimates.iter().all(|e| e.converged)
    }

    pub fn metadata_line(&self) -> String {
        format!(
            "# lambda={} iters={} model={}",
            crate::decimal::format_decimal(self.max_lambda()),
            self.max_iterations(),
            self.model
        )
    }

    /// Graph file text preceded by the metadata line.
    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.metadata_line(), self.network.to_text())
    }
}

/// Solves every node's subproblem and assembles the inferred network.
pub fn infer_network(
    set: &CascadeSet,
    model: TransmissionModel,
    cfg: &InferenceConfig,
    policy: CandidatePolicy<'_>,
) -> Result<InferredNetwork> {
    if set.is_empty() {
        return Err(NetInfError::InvalidSize("cannot infer from an empty cascade set".into()));
    }
    let estimates = (0..set.num_nodes())
        .into_par_iter()
        .map(|i| infer_node(set, model, i, cfg, policy).map_err(|e| e.at_node(i)))
        .collect::<Result<Vec<_>>>()?;
    assemble(set.num_nodes(), estimates, model)
}

fn assemble(num_nodes: usize, estimates: Vec<RateEstimate>, model: TransmissionModel) -> Result<InferredNetwork> {
    let edges = estimates
        .iter()
        .flat_map(|e| {
            e.candidates.iter().zip(&e.alphas).filter(|(_, &a)| a > 0.0).map(move |(&j, &a)| Edge::new(j, e.target, a))
        })
        .collect();
    let network = DirectedNetwork::new(num_nodes, edges)?;
    Ok(InferredNetwork { network, estimates, model })
}

/// Links each cascade's source to the first node it infected.
pub fn first_edge_baseline(set: &CascadeSet) -> BTreeSet<(NodeId, NodeId)> {
    set.iter()
        .filter_map(|c| {
            let source = c.source();
            c.times()
                .iter()
                .enumerate()
                .filter(|&(v, t)| v != source && t.is_finite())
                .min_by(|a, b| a.1.total_cmp(b.1))
                .map(|(v, _)| (source, v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::{simulate_set, Cascade, SourceDistribution, UNOBSERVED};
    use crate::graph::generate_chain;
    use crate::rng::substream;
    use proptest::prelude::*;
    use rand::Rng;

    const EXP: TransmissionModel = TransmissionModel::Exponential;

    fn cascade(times: &[f64], window: f64, source: usize) -> Cascade {
        Cascade::new(times.to_vec(), window, source).unwrap()
    }

    #[test]
    fn soft_threshold_examples() {
        assert!((soft_threshold(&[0.5], 0.2).unwrap()[0] - 0.3).abs() < 1e-15);
        assert_eq!(soft_threshold(&[0.1], 0.2).unwrap()[0].to_bits(), 0.0f64.to_bits());
        assert_eq!(soft_threshold(&[-0.3], 0.0).unwrap()[0].to_bits(), 0.0f64.to_bits());
        assert!(matches!(soft_threshold(&[1.0], -0.1), Err(NetInfError::Domain(_))));
    }

    /// Random single-candidate problems: node 1 is the candidate, node 0 the
    /// target, and the source is always node 1.
    fn single_candidate_set(seed: u64) -> (CascadeSet, f64) {
        let mut rng = substream(seed, 0);
        let window = 4.0;
        let n = rng.random_range(10..60);
        let mut infected = 0.0;
        let mut exposure = 0.0;
        let cascades: Vec<_> = (0..n)
            .map(|_| {
                if rng.random::<f64>() < 0.6 {
                    let t = rng.random::<f64>() * window;
                    infected += 1.0;
                    exposure += t;
                    cascade(&[t, 0.0], window, 1)
                } else {
                    exposure += window;
                    cascade(&[UNOBSERVED, 0.0], window, 1)
                }
            })
            .collect();
        let set = CascadeSet::new(2, window, cascades).unwrap();
        (set, infected / exposure)
    }

    #[test]
    fn unregularised_single_candidate_matches_closed_form() {
        for seed in 0..20 {
            let (set, mle) = single_candidate_set(seed);
            if mle == 0.0 {
                continue;
            }
            let prob = NodeProblem::new(0, vec![1], &set, EXP).unwrap();
            let est = prox_grad_solve(&prob, &SolverConfig::default()).unwrap();
            assert!(est.converged);
            assert!((est.alphas[0] - mle).abs() <= 1e-6 * mle, "{} vs {mle}", est.alphas[0]);
        }
    }

    #[test]
    fn large_lambda_zeroes_a_never_infected_target() {
        // The gradient at 0⁺ is finite only when the target has no infections.
        let w = 4.0;
        let cascades = (0..10).map(|_| cascade(&[UNOBSERVED, 0.0, 1.0], w, 1)).collect();
        let set = CascadeSet::new(3, w, cascades).unwrap();
        let prob = NodeProblem::new(0, vec![1, 2], &set, EXP).unwrap();
        let est = prox_grad_solve(&prob, &SolverConfig::with_lambda(10.0)).unwrap();
        assert_eq!(est.alphas, vec![0.0, 0.0]);
        assert!(est.parents().is_empty());
    }

    #[test]
    fn regularised_single_candidate_matches_closed_form() {
        // Maximising m log α − α E − n λ α gives α = m / (E + n λ).
        for seed in 0..10 {
            let (set, _) = single_candidate_set(50 + seed);
            let prob = NodeProblem::new(0, vec![1], &set, EXP).unwrap();
            let n = prob.num_cascades() as f64;
            let m = prob.num_infected_target() as f64;
            if m == 0.0 {
                continue;
            }
            let exposure: f64 = set.iter().map(|c| c.time(0).unwrap_or(c.window())).sum();
            for lambda in [0.1, 1.0, 1e3] {
                // Tiny optima need a tolerance well below the default absolute one.
                let cfg = SolverConfig { lambda, tol: 1e-14, ..Default::default() };
                let est = prox_grad_solve(&prob, &cfg).unwrap();
                let expected = m / (exposure + n * lambda);
                assert!((est.alphas[0] - expected).abs() <= 1e-6 * expected, "{} vs {expected}", est.alphas[0]);
            }
        }
    }

    #[test]
    fn initialization_error_when_objective_is_infinite() {
        // Power-law delays never exceed the cutoff, so the hazard is zero.
        let set = CascadeSet::new(2, 4.0, vec![cascade(&[0.5, 0.0], 4.0, 1)]).unwrap();
        let prob = NodeProblem::new(0, vec![1], &set, TransmissionModel::PowerLaw { delta: 1.0 }).unwrap();
        assert!(matches!(prox_grad_solve(&prob, &SolverConfig::default()), Err(NetInfError::Initialization)));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let bad = [
            SolverConfig { lambda: -1.0, ..Default::default() },
            SolverConfig { max_iters: 0, ..Default::default() },
            SolverConfig { tol: -1.0, ..Default::default() },
            SolverConfig { step: StepRule::Fixed(0.0), ..Default::default() },
            SolverConfig { step: StepRule::Backtracking { initial: 1.0, shrink: 1.0 }, ..Default::default() },
        ];
        for cfg in bad {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn lambda_selection() {
        let l = select_lambda(1.0, 7, 4).unwrap();
        assert!((l - ((7f64).ln() / 4.0).sqrt()).abs() < 1e-15);
        let a = select_lambda(2.0, 16, 100).unwrap();
        let b = select_lambda(2.0, 16, 200).unwrap();
        assert!((a / b - 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(select_lambda(1.0, 1, 10), Err(NetInfError::Domain(_))));
        let t = guarantee_lambda(1.0, 0.5, 16, 100).unwrap();
        assert!((t - 24.0 * ((16f64).ln() / 100.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn first_edge_examples() {
        let w = 5.0;
        let a = cascade(&[0.0, 1.2, UNOBSERVED], w, 0);
        let b = cascade(&[0.0, UNOBSERVED, UNOBSERVED], w, 0);
        let c = cascade(&[0.0, 0.5, 2.0], w, 0);
        let set = CascadeSet::new(3, w, vec![a.clone()]).unwrap();
        assert_eq!(first_edge_baseline(&set), BTreeSet::from([(0, 1)]));
        let set = CascadeSet::new(3, w, vec![b]).unwrap();
        assert!(first_edge_baseline(&set).is_empty());
        let set = CascadeSet::new(3, w, vec![a, c]).unwrap();
        assert_eq!(first_edge_baseline(&set), BTreeSet::from([(0, 1)]));
    }

    fn single_edge_set(n: usize, seed: u64) -> CascadeSet {
        let net = DirectedNetwork::new(2, vec![Edge::new(0, 1, 1.0)]).unwrap();
        simulate_set(&net, &EXP, &SourceDistribution::uniform(2).unwrap(), n, 5.0, seed).unwrap()
    }

    #[test]
    fn recovers_a_single_edge() {
        let set = single_edge_set(5000, 11);
        let cfg = InferenceConfig::new(LambdaRule::Scaled { k: 0.5 });
        let inferred = infer_network(&set, EXP, &cfg, CandidatePolicy::AllPairs).unwrap();
        assert_eq!(inferred.edge_set(), BTreeSet::from([(0, 1)]));
        let rate = inferred.network.rate(0, 1).unwrap();
        assert!((rate - 1.0).abs() < 0.1, "{rate}");
        assert!(inferred.metadata_line().starts_with("# lambda="));
    }

    #[test]
    fn inference_is_deterministic_and_order_free() {
        let set = single_edge_set(500, 4);
        let cfg = InferenceConfig::new(LambdaRule::Scaled { k: 0.5 });
        let a = infer_network(&set, EXP, &cfg, CandidatePolicy::AllPairs).unwrap();
        let b = infer_network(&set, EXP, &cfg, CandidatePolicy::AllPairs).unwrap();
        assert_eq!(a, b);
        let sequential: Vec<_> =
            (0..2).rev().map(|i| infer_node(&set, EXP, i, &cfg, CandidatePolicy::AllPairs).unwrap()).collect();
        assert_eq!(sequential[1], a.estimates[0]);
        assert_eq!(sequential[0], a.estimates[1]);
    }

    #[test]
    fn empty_set_is_rejected() {
        let set = CascadeSet::new(2, 1.0, vec![]).unwrap();
        let cfg = InferenceConfig::new(LambdaRule::Fixed(0.1));
        assert!(infer_network(&set, EXP, &cfg, CandidatePolicy::AllPairs).is_err());
    }

    #[test]
    fn superneighborhood_policy_limits_candidates() {
        let chain = generate_chain(4).unwrap();
        let set = simulate_set(&chain, &EXP, &SourceDistribution::uniform(4).unwrap(), 400, 5.0, 9).unwrap();
        let cfg = InferenceConfig::new(LambdaRule::Scaled { k: 1.0 });
        let est = infer_node(&set, EXP, 0, &cfg, CandidatePolicy::SuperNeighborhood(&chain)).unwrap();
        assert!(est.candidates.is_empty());
        assert!(est.alphas.is_empty());
        let est = infer_node(&set, EXP, 2, &cfg, CandidatePolicy::SuperNeighborhood(&chain)).unwrap();
        assert_eq!(est.candidates, vec![0, 1, 3]);
        assert_eq!(est.parents(), BTreeSet::from([1]));
    }

    fn random_chain_problem(seed: u64) -> NodeProblem {
        let chain = generate_chain(5).unwrap();
        let mut rng = substream(seed, 1);
        let n = rng.random_range(30..300);
        let set = simulate_set(&chain, &EXP, &SourceDistribution::uniform(5).unwrap(), n, 4.0, seed).unwrap();
        NodeProblem::new(3, vec![0, 1, 2, 4], &set, EXP).unwrap()
    }

    #[test]
    fn backtracking_objective_never_increases() {
        for seed in 0..20 {
            let prob = random_chain_problem(seed);
            for lambda in [0.0, 0.02, 0.2] {
                let cfg = SolverConfig { lambda, record_trace: true, ..Default::default() };
                let est = prox_grad_solve(&prob, &cfg).unwrap();
                let trace = est.trace.unwrap();
                for w in trace.windows(2) {
                    assert!(w[1] <= w[0], "objective rose from {} to {}", w[0], w[1]);
                }
            }
        }
    }

    #[test]
    fn support_shrinks_as_lambda_grows() {
        for seed in 0..10 {
            let prob = random_chain_problem(100 + seed);
            let mut last = usize::MAX;
            for lambda in [0.0, 0.01, 0.03, 0.1, 0.3, 1.0] {
                let est = prox_grad_solve(&prob, &SolverConfig::with_lambda(lambda)).unwrap();
                let size = est.parents().len();
                assert!(size <= last, "seed {seed}: support grew to {size} at lambda {lambda}");
                last = size;
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn soft_threshold_is_nonnegative_and_exact(
            v in proptest::collection::vec(-5.0f64..5.0, 0..20), theta in 0.0f64..3.0
        ) {
            let out = soft_threshold(&v, theta).unwrap();
            for (x, y) in v.iter().zip(&out) {
                prop_assert!(*y >= 0.0);
                if *x <= theta {
                    prop_assert_eq!(y.to_bits(), 0.0f64.to_bits());
                } else {
                    prop_assert!((y - (x - theta)).abs() < 1e-15);
                }
            }
        }
    }
}
