//! Sweeps the λ constant for the desk-scale recovery experiments and prints
//! the statistics each acceptance threshold is judged on.
//!
//! `cargo run --release -p netinf-bench --example calibrate -- kronecker 1 2 4`
//! `cargo run --release -p netinf-bench --example calibrate -- chain 0.5 1 2`

use std::time::Instant;

use netinf::evaluation::{pointwise_spread, run_comparison, run_scaling_experiment, PolicyKind};
use netinf::solver::{LambdaRule, SolverConfig};
use netinf::{ExperimentSpec, Grid, Method, NetworkRecipe, SourceDistribution, Target, TransmissionModel};

fn kronecker_spec(k: f64, policy: PolicyKind) -> ExperimentSpec {
    let recipe: NetworkRecipe = "kronecker:4".parse().unwrap();
    ExperimentSpec {
        name: "comparison".into(),
        network: recipe.build(0.5, 1.5, 0).unwrap(),
        model: TransmissionModel::Exponential,
        sources: SourceDistribution::uniform(16).unwrap(),
        window: 10.0,
        lambda: LambdaRule::Scaled { k },
        solver: SolverConfig::default(),
        grid: Grid::Cascades(vec![250, 500, 1000, 2000]),
        trials: 100,
        base_seed: 2024,
        target: Target::Whole,
        policy,
    }
}

fn chain_specs(k: f64) -> Vec<ExperimentSpec> {
    [4usize, 8, 16]
        .into_iter()
        .map(|p| ExperimentSpec {
            name: format!("scaling:p={p}"),
            network: NetworkRecipe::Chain(p).build(1.0, 1.0, 0).unwrap(),
            model: TransmissionModel::Exponential,
            sources: SourceDistribution::uniform(p).unwrap(),
            window: 5.0,
            lambda: LambdaRule::Scaled { k },
            solver: SolverConfig::default(),
            grid: Grid::Beta(vec![2.0, 4.0, 8.0, 16.0]),
            trials: 100,
            base_seed: 2024,
            target: Target::Node(p - 1),
            policy: PolicyKind::SuperNeighborhood,
        })
        .collect()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (which, ks) = args.split_first().expect("usage: calibrate <kronecker|chain> K...");
    for k in ks.iter().map(|k| k.parse::<f64>().expect("K must be a number")) {
        let start = Instant::now();
        match which.as_str() {
            "kronecker" | "kronecker-sn" => {
                let policy = if which == "kronecker" { PolicyKind::AllPairs } else { PolicyKind::SuperNeighborhood };
                let spec = kronecker_spec(k, policy);
                let methods = [Method::Regularized, Method::LambdaZero, Method::FirstEdge];
                let table = run_comparison(&spec, &methods).unwrap();
                let good = table
                    .rows
                    .iter()
                    .filter(|r| r.experiment == "comparison:l1" && r.point == 3 && !r.is_aggregate() && r.f1 >= 0.9)
                    .count();
                print!("K={k}: F1>=0.9 in {good}/100 at n=2000;");
                for point in 0..4 {
                    let f = |m: &str| table.aggregate(&format!("comparison:{m}"), point).unwrap().f1;
                    print!(" n#{point} l1={:.3} l0={:.3} fe={:.3};", f("l1"), f("l0"), f("first-edge"));
                }
            }
            "chain" => {
                let table = run_scaling_experiment(&chain_specs(k)).unwrap();
                print!("K={k}:");
                for label in table.experiments() {
                    let curve: Vec<String> = table
                        .aggregates()
                        .filter(|r| r.experiment == label)
                        .map(|r| format!("{:.2}", r.outcome))
                        .collect();
                    print!(" {label} [{}]", curve.join(" "));
                }
                let spread: Vec<String> = pointwise_spread(&table).iter().map(|s| format!("{s:.2}")).collect();
                print!(" spread [{}]", spread.join(" "));
            }
            other => panic!("unknown experiment {other}"),
        }
        println!(" ({:.1}s)", start.elapsed().as_secs_f64());
    }
}
