//! Network structure inference from cascade infection times.
//!
//! Cascades are simulated under a continuous-time independent cascade
//! model, and each node's parents are recovered by minimising an
//! ℓ1-regularised negative log-likelihood over nonnegative transmission
//! rates.

// `!(x > 0.0)` is used on purpose so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cascade;
pub mod decimal;
pub mod diagnostics;
pub mod error;
pub mod evaluation;
pub mod graph;
pub mod likelihood;
pub mod rng;
pub mod solver;
pub mod transmission;

pub use cascade::{simulate_cascade, simulate_set, Cascade, CascadeSet, SourceDistribution, UNOBSERVED};
pub use diagnostics::{
    check_conditions, closed_form_chain_incoherence, closed_form_star_incoherence, diagnose_node,
    empirical_hessian_at_truth, hazard_rank, ConditionReport,
};
pub use error::{NetInfError, Result};
pub use evaluation::{score, ExperimentSpec, Grid, Method, Metrics, ResultTable, Target};
pub use graph::NetworkRecipe;
pub use graph::{DirectedNetwork, Edge, NodeId, ParentSet, SuperNeighborhood};
pub use likelihood::{HazardVectorBundle, HessianParts, NodeProblem};
pub use solver::{
    first_edge_baseline, infer_network, infer_node, prox_grad_solve, select_lambda, soft_threshold, CandidatePolicy,
    InferenceConfig, InferredNetwork, LambdaRule, RateEstimate, SolverConfig, StepRule,
};
pub use transmission::TransmissionModel;
