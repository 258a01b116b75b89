//! Per-node negative log-likelihood of a cascade set and its derivatives.
//!
//! For a target `i` and candidate parents `k`, a cascade where `i` is
//! infected at `t_i` contributes
//!
//! ```text
//! g = log h + Σ_{k: t_k < t_i} y(t_i | t_k; α_k),   h = Σ_{k: t_k < t_i} H(t_i | t_k; α_k)
//! ```
//!
//! and a cascade where `i` is not infected contributes
//! `g = Σ_{k: t_k < T} y(T | t_k; α_k)`. The objective is
//! `ℓ(α) = -(1/n) Σ_c g_c`, whose Hessian factors as
//! `D(α) + (1/n) X Xᵀ` with hazard columns `X_c = ∇h_c / h_c`.
//!
//! Cascades whose source is the target itself carry no information about
//! the target's parents and are left out (and not counted in `n`).

use nalgebra::{DMatrix, DVector};

use crate::cascade::CascadeSet;
use crate::error::{NetInfError, Result};
use crate::graph::NodeId;
use crate::transmission::TransmissionModel;

/// One candidate's term in one cascade.
#[derive(Debug, Clone, Copy)]
struct Term {
    candidate: usize,
    tau: f64,
    /// `-∂y/∂α` at `tau`.
    survival: f64,
    /// `∂H/∂α` at `tau`; zero for cascades where the target is not infected.
    hazard: f64,
}

#[derive(Debug, Clone, Copy)]
struct CascadeTerms {
    target_infected: bool,
    start: usize,
    end: usize,
}

/// The inference subproblem for one target node.
///
/// Sufficient statistics (delays and per-delay weights of every contributing
/// candidate) are computed once at construction, so evaluating the
/// objective costs `O(Σ_c |contributors_c|)`.
#[derive(Debug, Clone)]
pub struct NodeProblem {
    target: NodeId,
    candidates: Vec<NodeId>,
    model: TransmissionModel,
    window: f64,
    cascades: Vec<CascadeTerms>,
    terms: Vec<Term>,
}

impl NodeProblem {
    pub fn new(target: NodeId, candidates: Vec<NodeId>, set: &CascadeSet, model: TransmissionModel) -> Result<Self> {
        let num_nodes = set.num_nodes();
        if target >= num_nodes {
            return Err(NetInfError::Index { index: target, num_nodes });
        }
        let mut seen = vec![false; num_nodes];
        for &k in &candidates {
            if k >= num_nodes {
                return Err(NetInfError::Index { index: k, num_nodes });
            }
            if k == target {
                return Err(NetInfError::InvalidParameter(format!(
                    "target {target} cannot be its own candidate parent"
                )));
            }
            if std::mem::replace(&mut seen[k], true) {
                return Err(NetInfError::InvalidParameter(format!("candidate {k} listed twice")));
            }
        }

        let window = set.window();
        let mut cascades = Vec::with_capacity(set.len());
        let mut terms = Vec::new();
        for c in set {
            if c.source() == target {
                continue;
            }
            let times = c.times();
            let start = terms.len();
            let (reference, target_infected) = match c.time(target) {
                Some(t) => (t, true),
                None => (window, false),
            };
            for (idx, &k) in candidates.iter().enumerate() {
                let t_k = times[k];
                if t_k < reference {
                    let tau = reference - t_k;
                    terms.push(Term {
                        candidate: idx,
                        tau,
                        survival: model.survival_weight(tau),
                        hazard: if target_infected { model.hazard_weight(tau) } else { 0.0 },
                    });
                }
            }
            cascades.push(CascadeTerms { target_infected, start, end: terms.len() });
        }
        Ok(NodeProblem { target, candidates, model, window, cascades, terms })
    }

    pub fn target(&self) -> NodeId {
        self.target
    }

    /// Candidate parents; position `k` is coordinate `k` of every rate vector.
    pub fn candidates(&self) -> &[NodeId] {
        &self.candidates
    }

    pub fn dim(&self) -> usize {
        self.candidates.len()
    }

    pub fn model(&self) -> TransmissionModel {
        self.model
    }

    pub fn window(&self) -> f64 {
        self.window
    }

    /// `n`: number of cascades entering the objective.
    pub fn num_cascades(&self) -> usize {
        self.cascades.len()
    }

    pub fn num_infected_target(&self) -> usize {
        self.cascades.iter().filter(|c| c.target_infected).count()
    }

    /// Candidates that appear in at least one term. The objective does not
    /// depend on the others at all.
    pub fn contributing(&self) -> Vec<bool> {
        let mut mask = vec![false; self.dim()];
        for t in &self.terms {
            if t.survival != 0.0 || t.hazard != 0.0 {
                mask[t.candidate] = true;
            }
        }
        mask
    }

    fn check_rates(&self, alpha: &[f64]) -> Result<()> {
        if alpha.len() != self.dim() {
            return Err(NetInfError::InvalidParameter(format!(
                "rate vector has length {}, problem has {} candidates",
                alpha.len(),
                self.dim()
            )));
        }
        if let Some(a) = alpha.iter().find(|a| !(**a >= 0.0 && a.is_finite())) {
            return Err(NetInfError::Domain(format!("rates must be nonnegative, got {a}")));
        }
        if self.cascades.is_empty() {
            return Err(NetInfError::InvalidSize("node problem has no cascades".into()));
        }
        Ok(())
    }

    #[inline]
    fn cascade_sums(&self, c: &CascadeTerms, alpha: &[f64]) -> (f64, f64) {
        self.terms[c.start..c.end].iter().fold((0.0, 0.0), |(s, h), t| {
            let a = alpha[t.candidate];
            (s + a * t.survival, h + a * t.hazard)
        })
    }

    /// `ℓ(α)`; `+∞` when some infected-target cascade has zero total hazard.
    pub fn neg_log_likelihood(&self, alpha: &[f64]) -> Result<f64> {
        self.check_rates(alpha)?;
        let mut total = 0.0;
        for c in &self.cascades {
            let (survival, hazard) = self.cascade_sums(c, alpha);
            if c.target_infected {
                if !(hazard > 0.0) {
                    return Ok(f64::INFINITY);
                }
                total += hazard.ln();
            }
            total -= survival;
        }
        Ok(-total / self.num_cascades() as f64)
    }

    /// `∇ℓ(α)`. Errors where some infected-target cascade has zero hazard.
    pub fn gradient(&self, alpha: &[f64]) -> Result<Vec<f64>> {
        self.value_and_gradient(alpha).map(|(_, g)| g)
    }

    /// `ℓ(α)` and `∇ℓ(α)` in one pass.
    pub fn value_and_gradient(&self, alpha: &[f64]) -> Result<(f64, Vec<f64>)> {
        self.check_rates(alpha)?;
        let n = self.num_cascades() as f64;
        let mut grad = vec![0.0; self.dim()];
        let mut total = 0.0;
        for (idx, c) in self.cascades.iter().enumerate() {
            let (survival, hazard) = self.cascade_sums(c, alpha);
            let terms = &self.terms[c.start..c.end];
            if c.target_infected {
                if !(hazard > 0.0) {
                    return Err(NetInfError::NonDifferentiable(format!(
                        "cascade {idx} infects the target with zero total hazard"
                    )));
                }
                total += hazard.ln();
                let inv = 1.0 / hazard;
                for t in terms {
                    grad[t.candidate] += t.survival - t.hazard * inv;
                }
            } else {
                for t in terms {
                    grad[t.candidate] += t.survival;
                }
            }
            total -= survival;
        }
        grad.iter_mut().for_each(|g| *g /= n);
        Ok((-total / n, grad))
    }

    /// Hazard matrix with one column `∇h / h` per cascade (zero where the
    /// target is not infected).
    pub fn hazard_bundle(&self, alpha: &[f64]) -> Result<HazardVectorBundle> {
        self.check_rates(alpha)?;
        let mut columns = DMatrix::zeros(self.dim(), self.num_cascades());
        for (idx, c) in self.cascades.iter().enumerate() {
            if !c.target_infected {
                continue;
            }
            let (_, hazard) = self.cascade_sums(c, alpha);
            if !(hazard > 0.0) {
                return Err(NetInfError::NonDifferentiable(format!(
                    "cascade {idx} infects the target with zero total hazard"
                )));
            }
            for t in &self.terms[c.start..c.end] {
                columns[(t.candidate, idx)] += t.hazard / hazard;
            }
        }
        Ok(HazardVectorBundle { columns })
    }

    /// Diagonal and hazard parts of `∇²ℓ(α)`.
    pub fn hessian(&self, alpha: &[f64]) -> Result<HessianParts> {
        let hazard = self.hazard_bundle(alpha)?;
        let n = self.num_cascades();
        let mut diag = DVector::zeros(self.dim());
        for c in &self.cascades {
            let h = if c.target_infected { self.cascade_sums(c, alpha).1 } else { 0.0 };
            for t in &self.terms[c.start..c.end] {
                let a = alpha[t.candidate];
                let mut d = -self.model.d2_log_survival(t.tau, 0.0, a)?;
                if c.target_infected {
                    d -= self.model.d2_hazard(t.tau, 0.0, a)? / h;
                }
                diag[t.candidate] += d;
            }
        }
        diag /= n as f64;
        Ok(HessianParts { diag, hazard, n })
    }
}

/// Matrix whose columns are the per-cascade hazard vectors `∇h / h`.
#[derive(Debug, Clone, PartialEq)]
pub struct HazardVectorBundle {
    pub columns: DMatrix<f64>,
}

impl HazardVectorBundle {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.columns
    }

    pub fn num_cascades(&self) -> usize {
        self.columns.ncols()
    }

    /// Columns that are not identically zero.
    pub fn nonzero_columns(&self) -> usize {
        self.columns.column_iter().filter(|c| c.iter().any(|&x| x != 0.0)).count()
    }
}

/// `∇²ℓ = diag(D) + (1/n) X Xᵀ`.
#[derive(Debug, Clone)]
pub struct HessianParts {
    pub diag: DVector<f64>,
    pub hazard: HazardVectorBundle,
    pub n: usize,
}

impl HessianParts {
    pub fn assemble(&self) -> DMatrix<f64> {
        let x = &self.hazard.columns;
        let mut q = x * x.transpose() / self.n as f64;
        for k in 0..self.diag.len() {
            q[(k, k)] += self.diag[k];
        }
        q
    }
}
