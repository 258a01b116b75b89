//! Edge-recovery metrics and the seeded experiment harness.

mod plot;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cascade::{simulate_set, CascadeSet, SourceDistribution};
use crate::decimal::format_decimal;
use crate::error::{NetInfError, Result};
use crate::graph::{DirectedNetwork, NodeId};
use crate::rng::mix_seed;
use crate::solver::{
    first_edge_baseline, infer_network, infer_node, CandidatePolicy, InferenceConfig, LambdaRule, SolverConfig,
};
use crate::transmission::TransmissionModel;

pub type EdgeSet = BTreeSet<(NodeId, NodeId)>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub true_edge_count: usize,
    pub inferred_edge_count: usize,
}

/// Precision, recall and F1 of `inferred` against `truth`, with 0/0 taken as 0.
pub fn score(inferred: &EdgeSet, truth: &EdgeSet) -> Metrics {
    let hits = inferred.intersection(truth).count() as f64;
    let ratio = |den: usize| if den == 0 { 0.0 } else { hits / den as f64 };
    let precision = ratio(inferred.len());
    let recall = ratio(truth.len());
    let f1 = if precision + recall > 0.0 { 2.0 * precision * recall / (precision + recall) } else { 0.0 };
    Metrics { precision, recall, f1, true_edge_count: truth.len(), inferred_edge_count: inferred.len() }
}

/// `√(m(1−m)/trials)`.
pub fn binomial_stderr(mean: f64, trials: usize) -> f64 {
    (mean * (1.0 - mean) / trials as f64).max(0.0).sqrt()
}

/// Cascade counts to evaluate, either directly or as multiples `β` of
/// `10 d log p`.
#[derive(Debug, Clone, PartialEq)]
pub enum Grid {
    Cascades(Vec<usize>),
    Beta(Vec<f64>),
}

/// `round(10 β d log p)`, at least 1.
pub fn cascades_for_beta(beta: f64, d: usize, p: usize) -> usize {
    ((10.0 * beta * d as f64 * (p as f64).ln()).round() as usize).max(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Recover the parents of one node.
    Node(NodeId),
    /// Recover the whole edge set.
    Whole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolicyKind {
    AllPairs,
    /// Restrict candidates using the experiment's true network.
    SuperNeighborhood,
}

/// Inference methods compared against each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// ℓ1-regularised estimate with the experiment's λ rule.
    Regularized,
    /// The same solver with λ = 0.
    LambdaZero,
    FirstEdge,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Regularized => "l1",
            Method::LambdaZero => "l0",
            Method::FirstEdge => "first-edge",
        })
    }
}

impl FromStr for Method {
    type Err = NetInfError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "l1" => Ok(Method::Regularized),
            "l0" => Ok(Method::LambdaZero),
            "first-edge" => Ok(Method::FirstEdge),
            other => {
                Err(NetInfError::InvalidExperiment(format!("unknown method '{other}' (expected l1, l0 or first-edge)")))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    /// Curve label written to the `experiment` column.
    pub name: String,
    pub network: DirectedNetwork,
    pub model: TransmissionModel,
    pub sources: SourceDistribution,
    pub window: f64,
    pub lambda: LambdaRule,
    pub solver: SolverConfig,
    pub grid: Grid,
    pub trials: usize,
    pub base_seed: u64,
    pub target: Target,
    pub policy: PolicyKind,
}

impl ExperimentSpec {
    /// In-degree of the target node, or the largest in-degree of the network.
    pub fn degree(&self) -> Result<usize> {
        match self.target {
            Target::Node(i) => Ok(self.network.parent_set(i)?.in_degree()),
            Target::Whole => {
                Ok((0..self.network.num_nodes()).map(|v| self.network.in_neighbors(v).len()).max().unwrap_or(0))
            }
        }
    }

    /// Candidate pool size entering `log p`.
    pub fn pool_size(&self) -> Result<usize> {
        match (self.target, self.policy) {
            (Target::Node(i), PolicyKind::SuperNeighborhood) => Ok(self.network.super_neighborhood(i)?.size()),
            _ => Ok(self.network.num_nodes()),
        }
    }

    /// `(β, n)` for every grid point.
    pub fn points(&self) -> Result<Vec<(Option<f64>, usize)>> {
        match &self.grid {
            Grid::Cascades(ns) => {
                if ns.is_empty() || ns.contains(&0) {
                    return Err(NetInfError::InvalidExperiment("cascade grid must be nonempty and positive".into()));
                }
                Ok(ns.iter().map(|&n| (None, n)).collect())
            }
            Grid::Beta(betas) => {
                if betas.is_empty() {
                    return Err(NetInfError::InvalidExperiment("beta grid must be nonempty".into()));
                }
                let d = self.degree()?;
                let p = self.pool_size()?;
                betas
                    .iter()
                    .map(|&b| {
                        let n = 10.0 * b * d as f64 * (p as f64).ln();
                        if !(b.is_finite() && n.round() >= 1.0) {
                            return Err(NetInfError::InvalidExperiment(format!(
                                "beta {b} yields no cascades (d={d}, p={p})"
                            )));
                        }
                        Ok((Some(b), cascades_for_beta(b, d, p)))
                    })
                    .collect()
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(NetInfError::InvalidExperiment("trials must be at least 1".into()));
        }
        if let Target::Node(i) = self.target {
            if i >= self.network.num_nodes() {
                return Err(NetInfError::Index { index: i, num_nodes: self.network.num_nodes() });
            }
        }
        self.solver.validate()
    }

    fn policy(&self) -> CandidatePolicy<'_> {
        match self.policy {
            PolicyKind::AllPairs => CandidatePolicy::AllPairs,
            PolicyKind::SuperNeighborhood => CandidatePolicy::SuperNeighborhood(&self.network),
        }
    }

    fn truth(&self) -> EdgeSet {
        restrict(self.network.edge_set(), self.target)
    }

    fn estimate(&self, set: &CascadeSet, method: Method) -> Result<EdgeSet> {
        let lambda = match method {
            Method::FirstEdge => return Ok(restrict(first_edge_baseline(set), self.target)),
            Method::Regularized => self.lambda,
            Method::LambdaZero => LambdaRule::Fixed(0.0),
        };
        let cfg = InferenceConfig { lambda, solver: self.solver };
        match self.target {
            Target::Node(i) => {
                let est = infer_node(set, self.model, i, &cfg, self.policy())?;
                Ok(est.parents().into_iter().map(|j| (j, i)).collect())
            }
            Target::Whole => Ok(infer_network(set, self.model, &cfg, self.policy())?.edge_set()),
        }
    }
}

fn restrict(edges: EdgeSet, target: Target) -> EdgeSet {
    match target {
        Target::Node(i) => edges.into_iter().filter(|&(_, dst)| dst == i).collect(),
        Target::Whole => edges,
    }
}

/// Seed of trial `trial` at grid point `point`.
pub fn trial_seed(base_seed: u64, point: usize, trial: usize) -> u64 {
    mix_seed(&[base_seed, point as u64, trial as u64])
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub experiment: String,
    pub point: usize,
    pub beta: Option<f64>,
    pub n: usize,
    /// `None` on aggregate rows.
    pub trial: Option<usize>,
    pub seed: u64,
    /// Exact-recovery indicator, or its mean on aggregate rows.
    pub outcome: f64,
    pub f1: f64,
    pub precision: f64,
    pub recall: f64,
    /// Binomial standard error of `outcome`; aggregate rows only.
    pub stderr: Option<f64>,
}

pub const CSV_HEADER: &str = "experiment,point,beta,n,trial,seed,outcome,f1,precision,recall,stderr";

impl ResultRow {
    pub fn is_aggregate(&self) -> bool {
        self.trial.is_none()
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.experiment,
            self.point,
            self.beta.map(format_decimal).unwrap_or_default(),
            self.n,
            self.trial.map_or("-1".to_string(), |t| t.to_string()),
            self.seed,
            format_decimal(self.outcome),
            format_decimal(self.f1),
            format_decimal(self.precision),
            format_decimal(self.recall),
            self.stderr.map(format_decimal).unwrap_or_default(),
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    pub fn aggregates(&self) -> impl Iterator<Item = &ResultRow> {
        self.rows.iter().filter(|r| r.is_aggregate())
    }

    pub fn aggregate(&self, experiment: &str, point: usize) -> Option<&ResultRow> {
        self.aggregates().find(|r| r.experiment == experiment && r.point == point)
    }

    /// Curve labels in order of first appearance.
    pub fn experiments(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for r in &self.rows {
            if !seen.contains(&r.experiment) {
                seen.push(r.experiment.clone());
            }
        }
        seen
    }

    pub fn extend(&mut self, other: ResultTable) {
        self.rows.extend(other.rows);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.csv());
            out.push('\n');
        }
        out
    }

    /// Line plot of the aggregate `outcome` (or `f1`) of every curve against
    /// `β` when all rows have one, else against `n`.
    pub fn to_svg(&self, y: PlotMetric) -> String {
        plot::line_plot(self, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotMetric {
    Outcome,
    F1,
}

#[derive(Debug, Clone, Copy)]
struct TrialResult {
    success: bool,
    metrics: Metrics,
}

fn aggregate_row(
    label: &str,
    point: usize,
    beta: Option<f64>,
    n: usize,
    base_seed: u64,
    trials: &[TrialResult],
) -> ResultRow {
    let count = trials.len() as f64;
    let mean = |f: &dyn Fn(&TrialResult) -> f64| trials.iter().map(f).sum::<f64>() / count;
    let outcome = mean(&|t| if t.success { 1.0 } else { 0.0 });
    ResultRow {
        experiment: label.to_string(),
        point,
        beta,
        n,
        trial: None,
        seed: base_seed,
        outcome,
        f1: mean(&|t| t.metrics.f1),
        precision: mean(&|t| t.metrics.precision),
        recall: mean(&|t| t.metrics.recall),
        stderr: Some(binomial_stderr(outcome, trials.len())),
    }
}

fn trial_row(
    label: &str,
    point: usize,
    beta: Option<f64>,
    n: usize,
    trial: usize,
    seed: u64,
    r: &TrialResult,
) -> ResultRow {
    ResultRow {
        experiment: label.to_string(),
        point,
        beta,
        n,
        trial: Some(trial),
        seed,
        outcome: if r.success { 1.0 } else { 0.0 },
        f1: r.metrics.f1,
        precision: r.metrics.precision,
        recall: r.metrics.recall,
        stderr: None,
    }
}

/// Runs `trials` freshly seeded simulate-and-infer cycles at every grid
/// point for each method, all methods sharing each trial's cascades.
/// Rows are labelled `<name>:<method>` when more than one method is run.
pub fn run_methods(spec: &ExperimentSpec, methods: &[Method]) -> Result<ResultTable> {
    spec.validate()?;
    if methods.is_empty() {
        return Err(NetInfError::InvalidExperiment("no methods to run".into()));
    }
    let points = spec.points()?;
    let truth = spec.truth();
    let jobs: Vec<(usize, usize)> = (0..points.len()).flat_map(|p| (0..spec.trials).map(move |t| (p, t))).collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(point, trial)| {
            let seed = trial_seed(spec.base_seed, point, trial);
            let attribute = |e: NetInfError| NetInfError::Trial { point, trial, source: Box::new(e) };
            let set = simulate_set(&spec.network, &spec.model, &spec.sources, points[point].1, spec.window, seed)
                .map_err(attribute)?;
            methods
                .iter()
                .map(|&m| {
                    let inferred = spec.estimate(&set, m).map_err(attribute)?;
                    Ok(TrialResult { success: inferred == truth, metrics: score(&inferred, &truth) })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut table = ResultTable::default();
    for (m_idx, method) in methods.iter().enumerate() {
        let label = if methods.len() == 1 { spec.name.clone() } else { format!("{}:{method}", spec.name) };
        for (point, &(beta, n)) in points.iter().enumerate() {
            let results: Vec<TrialResult> =
                (0..spec.trials).map(|t| outcomes[point * spec.trials + t][m_idx]).collect();
            for (trial, r) in results.iter().enumerate() {
                let seed = trial_seed(spec.base_seed, point, trial);
                table.rows.push(trial_row(&label, point, beta, n, trial, seed, r));
            }
            table.rows.push(aggregate_row(&label, point, beta, n, spec.base_seed, &results));
        }
    }
    Ok(table)
}

/// Success probability of the regularised estimator at every grid point.
pub fn success_probability(spec: &ExperimentSpec) -> Result<ResultTable> {
    run_methods(spec, &[Method::Regularized])
}

/// One success curve per network; all specs must target nodes of the same
/// in-degree and use a `β` grid.
pub fn run_scaling_experiment(specs: &[ExperimentSpec]) -> Result<ResultTable> {
    let first = specs.first().ok_or_else(|| NetInfError::InvalidExperiment("no networks given".into()))?;
    let d = first.degree()?;
    for s in specs {
        if !matches!(s.grid, Grid::Beta(_)) {
            return Err(NetInfError::InvalidExperiment(format!("{}: scaling experiments need a beta grid", s.name)));
        }
        if s.degree()? != d {
            return Err(NetInfError::InvalidExperiment(format!(
                "{}: in-degree {} differs from {d}",
                s.name,
                s.degree()?
            )));
        }
    }
    let mut table = ResultTable::default();
    for s in specs {
        table.extend(success_probability(s)?);
    }
    Ok(table)
}

/// Per-method curves on shared cascades.
pub fn run_comparison(spec: &ExperimentSpec, methods: &[Method]) -> Result<ResultTable> {
    let mut unique = Vec::new();
    for &m in methods {
        if !unique.contains(&m) {
            unique.push(m);
        }
    }
    if unique.len() == 1 {
        // Keep the method in the label so curves stay identifiable.
        let mut table = run_methods(spec, &unique)?;
        let label = format!("{}:{}", spec.name, unique[0]);
        table.rows.iter_mut().for_each(|r| r.experiment = label.clone());
        return Ok(table);
    }
    run_methods(spec, &unique)
}

/// Largest difference between curves of the aggregate outcome at each
/// grid point index.
pub fn pointwise_spread(table: &ResultTable) -> Vec<f64> {
    let labels = table.experiments();
    let points = table.aggregates().map(|r| r.point).max().map_or(0, |p| p + 1);
    (0..points)
        .map(|p| {
            let values: Vec<f64> = labels.iter().filter_map(|l| table.aggregate(l, p)).map(|r| r.outcome).collect();
            let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
            if values.is_empty() {
                0.0
            } else {
                hi - lo
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_chain, generate_star, tree_fixture};
    use proptest::prelude::*;

    fn edges(list: &[(usize, usize)]) -> EdgeSet {
        list.iter().copied().collect()
    }

    #[test]
    fn score_examples() {
        let truth = edges(&[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let m = score(&truth, &truth);
        assert_eq!((m.precision, m.recall, m.f1), (1.0, 1.0, 1.0));
        let m = score(&edges(&[(0, 1), (1, 2)]), &truth);
        assert_eq!((m.precision, m.recall), (1.0, 0.5));
        assert!((m.f1 - 2.0 / 3.0).abs() < 1e-15);
        let m = score(&EdgeSet::new(), &truth);
        assert_eq!((m.precision, m.recall, m.f1), (0.0, 0.0, 0.0));
        assert_eq!((m.true_edge_count, m.inferred_edge_count), (4, 0));
    }

    #[test]
    fn beta_to_cascades() {
        assert_eq!(cascades_for_beta(1.0, 1, 4), 14);
        assert_eq!(cascades_for_beta(1e-6, 1, 4), 1);
    }

    fn chain_spec(p: usize, grid: Grid, trials: usize) -> ExperimentSpec {
        ExperimentSpec {
            name: format!("scaling:p={p}"),
            network: generate_chain(p).unwrap(),
            model: TransmissionModel::Exponential,
            sources: SourceDistribution::uniform(p).unwrap(),
            window: 5.0,
            lambda: LambdaRule::Scaled { k: 1.0 },
            solver: SolverConfig::default(),
            grid,
            trials,
            base_seed: 17,
            target: Target::Node(p - 1),
            policy: PolicyKind::SuperNeighborhood,
        }
    }

    #[test]
    fn single_point_single_trial_table() {
        let table = success_probability(&chain_spec(4, Grid::Beta(vec![4.0]), 1)).unwrap();
        assert_eq!(table.rows.len(), 2);
        assert_eq!(table.aggregates().count(), 1);
        let agg = table.aggregate("scaling:p=4", 0).unwrap();
        assert_eq!(agg.n, 55);
        assert!(agg.csv().contains(",-1,"));
    }

    #[test]
    fn aggregates_are_consistent() {
        let table = success_probability(&chain_spec(4, Grid::Cascades(vec![5, 200]), 12)).unwrap();
        for agg in table.aggregates() {
            let trials: Vec<_> = table.rows.iter().filter(|r| !r.is_aggregate() && r.point == agg.point).collect();
            assert_eq!(trials.len(), 12);
            let mean = trials.iter().map(|r| r.outcome).sum::<f64>() / 12.0;
            assert!((agg.outcome - mean).abs() < 1e-15);
            assert!((agg.stderr.unwrap() - binomial_stderr(mean, 12)).abs() < 1e-15);
        }
        let perfect = table.aggregate("scaling:p=4", 1).unwrap();
        assert_eq!((perfect.outcome, perfect.stderr), (1.0, Some(0.0)));
    }

    #[test]
    fn more_trials_extend_earlier_ones() {
        let small = success_probability(&chain_spec(4, Grid::Cascades(vec![20]), 5)).unwrap();
        let large = success_probability(&chain_spec(4, Grid::Cascades(vec![20]), 10)).unwrap();
        assert_eq!(&small.rows[..5], &large.rows[..5]);
        assert_eq!(small, success_probability(&chain_spec(4, Grid::Cascades(vec![20]), 5)).unwrap());
    }

    #[test]
    fn one_cascade_cannot_separate_two_parents() {
        // Node 2 of the tree has parents {5, 6}.
        let spec = ExperimentSpec {
            name: "tree".into(),
            network: tree_fixture(),
            model: TransmissionModel::Exponential,
            sources: SourceDistribution::uniform(7).unwrap(),
            window: 5.0,
            lambda: LambdaRule::Scaled { k: 1.0 },
            solver: SolverConfig::default(),
            grid: Grid::Cascades(vec![1]),
            trials: 1,
            base_seed: 3,
            target: Target::Node(2),
            policy: PolicyKind::AllPairs,
        };
        let table = success_probability(&spec).unwrap();
        assert_eq!(table.aggregate("tree", 0).unwrap().outcome, 0.0);
    }

    #[test]
    fn invalid_experiments_are_rejected() {
        assert!(matches!(
            success_probability(&chain_spec(4, Grid::Beta(vec![0.0]), 1)),
            Err(NetInfError::InvalidExperiment(_))
        ));
        assert!(success_probability(&chain_spec(4, Grid::Beta(vec![]), 1)).is_err());
        assert!(success_probability(&chain_spec(4, Grid::Cascades(vec![10]), 0)).is_err());
        assert!(run_comparison(&chain_spec(4, Grid::Cascades(vec![10]), 1), &[]).is_err());
        let mut two_parents = chain_spec(4, Grid::Beta(vec![1.0]), 1);
        two_parents.network = tree_fixture();
        two_parents.sources = SourceDistribution::uniform(7).unwrap();
        two_parents.target = Target::Node(2);
        assert!(matches!(
            run_scaling_experiment(&[chain_spec(4, Grid::Beta(vec![1.0]), 1), two_parents]),
            Err(NetInfError::InvalidExperiment(_))
        ));
        assert!(matches!(
            run_scaling_experiment(&[chain_spec(4, Grid::Cascades(vec![10]), 1)]),
            Err(NetInfError::InvalidExperiment(_))
        ));
    }

    #[test]
    fn first_edge_on_single_leaf_star() {
        let spec = ExperimentSpec {
            name: "star".into(),
            network: generate_star(1).unwrap(),
            model: TransmissionModel::Exponential,
            sources: SourceDistribution::on_nodes(2, &[0]).unwrap(),
            window: 50.0,
            lambda: LambdaRule::Scaled { k: 1.0 },
            solver: SolverConfig::default(),
            grid: Grid::Cascades(vec![3]),
            trials: 4,
            base_seed: 8,
            target: Target::Whole,
            policy: PolicyKind::AllPairs,
        };
        let table = run_comparison(&spec, &[Method::FirstEdge]).unwrap();
        assert!(table.rows.iter().all(|r| r.f1 == 1.0));
        assert_eq!(table.experiments(), vec!["star:first-edge".to_string()]);
    }

    #[test]
    fn comparison_emits_one_curve_per_method() {
        let mut spec = chain_spec(4, Grid::Cascades(vec![50, 100]), 3);
        spec.target = Target::Whole;
        spec.name = "comparison".into();
        let table = run_comparison(&spec, &[Method::Regularized, Method::LambdaZero, Method::FirstEdge]).unwrap();
        assert_eq!(table.experiments(), vec!["comparison:l1", "comparison:l0", "comparison:first-edge"]);
        assert_eq!(table.aggregates().count(), 6);
        let csv = table.to_csv();
        assert!(csv.starts_with(CSV_HEADER));
        assert_eq!(csv.lines().count(), 1 + 3 * 2 * 4);
        let svg = table.to_svg(PlotMetric::F1);
        assert!(svg.starts_with("<svg") && svg.matches("<polyline").count() == 3);
    }

    #[test]
    fn spread_of_identical_curves_is_zero() {
        let a = success_probability(&chain_spec(4, Grid::Cascades(vec![20, 40]), 4)).unwrap();
        let mut b = a.clone();
        b.rows.iter_mut().for_each(|r| r.experiment = "copy".into());
        let mut both = a;
        both.extend(b);
        assert_eq!(pointwise_spread(&both), vec![0.0, 0.0]);
    }

    proptest! {
        #[test]
        fn score_is_relabeling_invariant(
            truth in proptest::collection::btree_set((0usize..6, 0usize..6), 0..12),
            inferred in proptest::collection::btree_set((0usize..6, 0usize..6), 0..12),
            shift in 1usize..6,
        ) {
            let relabel = |s: &EdgeSet| s.iter().map(|&(a, b)| ((a + shift) % 6, (b + shift) % 6)).collect::<EdgeSet>();
            let m = score(&inferred, &truth);
            let r = score(&relabel(&inferred), &relabel(&truth));
            prop_assert_eq!(m, r);
            prop_assert!((0.0..=1.0).contains(&m.f1));
        }

        #[test]
        fn stderr_formula(mean in 0.0f64..=1.0, trials in 1usize..500) {
            let se = binomial_stderr(mean, trials);
            prop_assert!((se * se - mean * (1.0 - mean) / trials as f64).abs() < 1e-15);
        }
    }
}
