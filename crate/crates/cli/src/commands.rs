use std::path::Path;

use netinf::cascade::CascadeSet;
use netinf::decimal::format_decimal;
use netinf::diagnostics::{diagnose_node, REPORT_CSV_HEADER};
use netinf::evaluation::{run_comparison, run_scaling_experiment, PlotMetric, PolicyKind, ResultTable};
use netinf::graph::KroneckerSeed;
use netinf::solver::{first_edge_baseline, infer_network, CandidatePolicy, InferenceConfig, LambdaRule, SolverConfig};
use netinf::{
    score, simulate_set, DirectedNetwork, ExperimentSpec, Grid, Method, NetInfError, NetworkRecipe, SourceDistribution,
    Target, TransmissionModel,
};

use crate::error::CliError;
use crate::params::{param, Param, Resolved};

pub static GENERATE: [Param; 5] = [
    param("net", None, "network: chain:<n>, star:<k>, tree, kronecker:<k> or forestfire:<n>"),
    param("rates", Some("0.5,1.5"), "edge rates drawn uniform on lo,hi"),
    param("seed", Some("0"), "random seed"),
    param("kronecker-seed", Some("0.9,0.1,0.1,0.9"), "Kronecker initiator matrix, row major"),
    param("forest-fire", Some("0.35,0.2"), "Forest Fire forward,backward burning probabilities"),
];

pub static SIMULATE: [Param; 6] = [
    param("graph", None, "graph file"),
    param("n", Some("1000"), "number of cascades"),
    param("T", Some("10"), "observation window"),
    param("model", Some("exp"), "transmission model: exp, ray or pow[:<delta>]"),
    param("sources", Some("uniform"), "source distribution: uniform, nodes:<i,j,...> or a weights file"),
    param("seed", Some("0"), "random seed"),
];

pub static INFER: [Param; 10] = [
    param("cascades", None, "cascade file"),
    param("nodes", None, "number of nodes (read from the cascade header when omitted)"),
    param("model", Some("exp"), "transmission model: exp, ray or pow[:<delta>]"),
    param("method", Some("l1"), "l1 (regularised), l0 (lambda = 0) or first-edge"),
    param("lambda-const", Some("1"), "lambda = K sqrt(log p / n) per node"),
    param("lambda", None, "fixed lambda for every node (overrides --lambda-const)"),
    param("truth", None, "true graph file, used to restrict candidates and to score the result"),
    param("candidates", Some("auto"), "all, superneighborhood, or auto (superneighborhood with --truth)"),
    param("max-iters", Some("5000"), "solver iteration limit"),
    param("tol", Some("1e-8"), "solver tolerance on the largest coordinate change"),
];

pub static DIAGNOSE: [Param; 8] = [
    param("net", None, "graph file with the true rates"),
    param("target", Some("all"), "comma-separated targets, or all nodes with parents"),
    param("n", Some("10000"), "number of simulated cascades"),
    param("T", Some("10"), "observation window"),
    param("model", Some("exp"), "transmission model: exp, ray or pow[:<delta>]"),
    param("sources", Some("uniform"), "source distribution: uniform, nodes:<i,j,...> or a weights file"),
    param("seed", Some("0"), "random seed"),
    param("bootstrap", Some("0"), "bootstrap replicates for the incoherence standard error (adds a column)"),
];

pub static SCALING: [Param; 14] = [
    param("nets", Some("chain:4,chain:8,chain:16"), "networks, one success curve each"),
    param("rates", Some("1,1"), "edge rates drawn uniform on lo,hi"),
    param("betas", Some("2,4,8,16"), "multiples beta of 10 d log p cascades"),
    param("trials", Some("100"), "independent cascade sets per point"),
    param("T", Some("5"), "observation window"),
    param("model", Some("exp"), "transmission model"),
    param("lambda-const", Some("1"), "lambda = K sqrt(log p / n)"),
    param("sources", Some("uniform"), "source distribution"),
    param("target", Some("last"), "target node index, or last"),
    param("candidates", Some("superneighborhood"), "all or superneighborhood"),
    param("seed", Some("0"), "random seed for networks and trials"),
    param("max-iters", Some("5000"), "solver iteration limit"),
    param("tol", Some("1e-8"), "solver tolerance"),
    param("name", Some("scaling"), "label prefix for the curves"),
];

pub static COMPARISON: [Param; 15] = [
    param("net", Some("kronecker:4"), "network"),
    param("rates", Some("0.5,1.5"), "edge rates drawn uniform on lo,hi"),
    param("ns", Some("250,500,1000,2000"), "cascade counts"),
    param("methods", Some("l1,l0,first-edge"), "methods to compare"),
    param("trials", Some("100"), "independent cascade sets per point"),
    param("T", Some("10"), "observation window"),
    param("model", Some("exp"), "transmission model"),
    param("lambda-const", Some("1"), "lambda = K sqrt(log p / n)"),
    param("sources", Some("uniform"), "source distribution"),
    param("target", Some("whole"), "whole, or a target node index"),
    param("candidates", Some("all"), "all or superneighborhood"),
    param("seed", Some("0"), "random seed for the network and trials"),
    param("max-iters", Some("5000"), "solver iteration limit"),
    param("tol", Some("1e-8"), "solver tolerance"),
    param("name", Some("comparison"), "label prefix for the curves"),
];

/// Where the main output goes, and where summaries are printed so they
/// never mix with output on stdout.
pub struct Output<'a> {
    pub path: Option<&'a str>,
}

impl Output<'_> {
    fn write(&self, content: &str) -> Result<(), CliError> {
        match self.path {
            Some(p) => std::fs::write(p, content).map_err(|e| CliError::Runtime(format!("cannot write {p}: {e}"))),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }

    fn note(&self, line: &str) {
        if self.path.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Runtime(format!("cannot read {path}: {e}")))
}

fn read_graph(path: &str) -> Result<DirectedNetwork, CliError> {
    DirectedNetwork::parse(&read(path)?).map_err(|e| CliError::Runtime(format!("{path}: {e}")))
}

fn pair(r: &Resolved, key: &str) -> Result<(f64, f64), CliError> {
    match r.list::<f64>(key)?[..] {
        [a, b] if a > 0.0 && a <= b && b.is_finite() => Ok((a, b)),
        _ => Err(CliError::Usage(format!("--{key} expects lo,hi with 0 < lo <= hi"))),
    }
}

fn sources(token: &str, num_nodes: usize) -> Result<SourceDistribution, CliError> {
    if token == "uniform" {
        return Ok(SourceDistribution::uniform(num_nodes)?);
    }
    if let Some(list) = token.strip_prefix("nodes:") {
        let nodes = list
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad source node '{s}'"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(SourceDistribution::on_nodes(num_nodes, &nodes)?);
    }
    let text = read(token)?;
    let weights = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| CliError::Runtime(format!("{token}: bad weight '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    if weights.len() != num_nodes {
        return Err(CliError::Runtime(format!("{token}: {} weights for {num_nodes} nodes", weights.len())));
    }
    Ok(SourceDistribution::from_weights(weights)?)
}

/// Parses a network token, applying generator overrides when the command
/// declares them.
fn recipe(r: &Resolved, token: &str) -> Result<NetworkRecipe, CliError> {
    let mut recipe: NetworkRecipe = token.parse().map_err(|e: NetInfError| CliError::Usage(e.to_string()))?;
    match &mut recipe {
        NetworkRecipe::Kronecker { seed, .. } => {
            if let Some(raw) = r.raw("kronecker-seed") {
                let v = parse_floats(raw, "kronecker-seed")?;
                let [a, b, c, d] = v[..] else {
                    return Err(CliError::Usage("--kronecker-seed expects four numbers".into()));
                };
                *seed = KroneckerSeed([[a, b], [c, d]]);
            }
        }
        NetworkRecipe::ForestFire { forward, backward, .. } => {
            if let Some(raw) = r.raw("forest-fire") {
                let v = parse_floats(raw, "forest-fire")?;
                let [f, b] = v[..] else {
                    return Err(CliError::Usage("--forest-fire expects two numbers".into()));
                };
                (*forward, *backward) = (f, b);
            }
        }
        _ => {}
    }
    Ok(recipe)
}

fn parse_floats(raw: &str, key: &str) -> Result<Vec<f64>, CliError> {
    raw.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("invalid --{key} entry '{s}'"))))
        .collect()
}

pub fn generate(r: &Resolved, out: &Output) -> Result<(), CliError> {
    let token: String = r.get("net")?;
    let recipe = recipe(r, &token)?;
    let (lo, hi) = pair(r, "rates")?;
    let seed: u64 = r.get("seed")?;
    let net = recipe.build(lo, hi, seed)?;
    out.write(&format!("{}\n{}", r.header(), net.to_text()))?;
    out.note(&format!("nodes={} edges={}", net.num_nodes(), net.edge_count()));
    Ok(())
}

pub fn simulate(r: &Resolved, out: &Output) -> Result<(), CliError> {
    let model: TransmissionModel = r.get("model")?;
    let n: usize = r.get("n")?;
    let window: f64 = r.get("T")?;
    let seed: u64 = r.get("seed")?;
    let net = read_graph(&r.get::<String>("graph")?)?;
    let dist = sources(&r.get::<String>("sources")?, net.num_nodes())?;
    let set = simulate_set(&net, &model, &dist, n, window, seed)?;
    out.write(&format!("{}\n# nodes={}\n{}", r.header(), net.num_nodes(), set.to_text()))?;
    let mean = set.iter().map(|c| c.infected_count()).sum::<usize>() as f64 / set.len() as f64;
    out.note(&format!("cascades={} mean_infections={}", set.len(), format_decimal(mean)));
    Ok(())
}

/// `nodes=<N>` from the comment lines of a cascade file.
fn header_nodes(text: &str) -> Option<usize> {
    text.lines()
        .take_while(|l| l.trim_start().starts_with('#') || l.trim().is_empty())
        .flat_map(|l| l.split_whitespace())
        .find_map(|tok| tok.strip_prefix("nodes=").and_then(|v| v.parse().ok()))
}

pub fn infer(r: &Resolved, out: &Output) -> Result<(), CliError> {
    let model: TransmissionModel = r.get("model")?;
    let method: Method = r.get("method")?;
    let lambda = match r.opt::<f64>("lambda")? {
        Some(v) => LambdaRule::Fixed(v),
        None => LambdaRule::Scaled { k: r.get("lambda-const")? },
    };
    let solver = SolverConfig { max_iters: r.get("max-iters")?, tol: r.get("tol")?, ..Default::default() };
    let truth = r.opt::<String>("truth")?.map(|p| read_graph(&p)).transpose()?;
    let use_sn = match r.get::<String>("candidates")?.as_str() {
        "auto" => truth.is_some(),
        "all" => false,
        "superneighborhood" => true,
        other => return Err(CliError::Usage(format!("unknown --candidates '{other}'"))),
    };
    let policy = match (&truth, use_sn) {
        (Some(t), true) => CandidatePolicy::SuperNeighborhood(t),
        (None, true) => return Err(CliError::Usage("--candidates superneighborhood needs --truth".into())),
        _ => CandidatePolicy::AllPairs,
    };

    let path: String = r.get("cascades")?;
    let text = read(&path)?;
    let nodes = r.opt::<usize>("nodes")?.or_else(|| header_nodes(&text)).or(truth.as_ref().map(|t| t.num_nodes()));
    let set = CascadeSet::parse(&text, nodes).map_err(|e| CliError::Runtime(format!("{path}: {e}")))?;

    let (body, edges) = match method {
        Method::FirstEdge => {
            let edges = first_edge_baseline(&set);
            let mut body = format!("# method=first-edge\nN {}\n", set.num_nodes());
            for (s, d) in &edges {
                body.push_str(&format!("{s},{d}\n"));
            }
            (body, edges)
        }
        Method::Regularized | Method::LambdaZero => {
            let lambda = if method == Method::LambdaZero { LambdaRule::Fixed(0.0) } else { lambda };
            let inferred = infer_network(&set, model, &InferenceConfig { lambda, solver }, policy)?;
            if !inferred.all_converged() {
                eprintln!("warning: some node subproblems hit the iteration limit");
            }
            (inferred.to_text(), inferred.edge_set())
        }
    };
    out.write(&format!("{}\n{body}", r.header()))?;
    out.note(&format!("edges={}", edges.len()));
    if let Some(t) = &truth {
        let m = score(&edges, &t.edge_set());
        out.note(&format!("precision={:?} recall={:?} f1={:?}", m.precision, m.recall, m.f1));
    }
    Ok(())
}

pub fn diagnose(r: &Resolved, out: &Output) -> Result<(), CliError> {
    let model: TransmissionModel = r.get("model")?;
    let n: usize = r.get("n")?;
    let window: f64 = r.get("T")?;
    let seed: u64 = r.get("seed")?;
    let bootstrap: usize = r.get("bootstrap")?;
    let net = read_graph(&r.get::<String>("net")?)?;
    let dist = sources(&r.get::<String>("sources")?, net.num_nodes())?;
    let targets: Vec<usize> = match r.get::<String>("target")?.as_str() {
        "all" => (0..net.num_nodes()).filter(|&v| !net.in_neighbors(v).is_empty()).collect(),
        _ => r.list("target")?,
    };

    let mut csv = format!("{}\n{REPORT_CSV_HEADER}", r.header());
    if bootstrap > 0 {
        csv.push_str(",incoherence_stderr");
    }
    csv.push('\n');
    for &target in &targets {
        match diagnose_node(&net, &model, &dist, target, n, window, seed, bootstrap) {
            Ok(report) => {
                csv.push_str(&report.csv_row());
                if bootstrap > 0 {
                    csv.push_str(&format!(",{}", report.incoherence_stderr.map(format_decimal).unwrap_or_default()));
                }
                csv.push('\n');
            }
            Err(NetInfError::Singular(msg)) => {
                eprintln!("target {target}: singular support block ({msg})");
                let d = net.in_neighbors(target).len();
                csv.push_str(&format!("{target},{d},,NaN,NaN,NaN,NaN,,{n}"));
                if bootstrap > 0 {
                    csv.push(',');
                }
                csv.push('\n');
            }
            Err(e) => return Err(CliError::Runtime(format!("target {target}: {e}"))),
        }
    }
    out.write(&csv)?;
    out.note(&format!("targets={}", targets.len()));
    Ok(())
}

fn policy_kind(token: &str) -> Result<PolicyKind, CliError> {
    match token {
        "all" => Ok(PolicyKind::AllPairs),
        "superneighborhood" => Ok(PolicyKind::SuperNeighborhood),
        other => Err(CliError::Usage(format!("unknown --candidates '{other}'"))),
    }
}

fn target_for(token: &str, num_nodes: usize) -> Result<Target, CliError> {
    match token {
        "whole" => Ok(Target::Whole),
        "last" => Ok(Target::Node(num_nodes - 1)),
        other => other.parse().map(Target::Node).map_err(|_| CliError::Usage(format!("invalid --target '{other}'"))),
    }
}

fn experiment_spec(
    r: &Resolved,
    name: String,
    network: DirectedNetwork,
    grid: Grid,
    target: &str,
    seed: u64,
) -> Result<ExperimentSpec, CliError> {
    let n = network.num_nodes();
    Ok(ExperimentSpec {
        name,
        model: r.get("model")?,
        sources: sources(&r.get::<String>("sources")?, n)?,
        window: r.get("T")?,
        lambda: LambdaRule::Scaled { k: r.get("lambda-const")? },
        solver: SolverConfig { max_iters: r.get("max-iters")?, tol: r.get("tol")?, ..Default::default() },
        grid,
        trials: r.get("trials")?,
        base_seed: seed,
        target: target_for(target, n)?,
        policy: policy_kind(&r.get::<String>("candidates")?)?,
        network,
    })
}

fn write_table(
    r: &Resolved,
    table: &ResultTable,
    out: &Output,
    svg: Option<&str>,
    metric: PlotMetric,
) -> Result<(), CliError> {
    out.write(&format!("{}\n{}", r.header(), table.to_csv()))?;
    if let Some(path) = svg {
        std::fs::write(Path::new(path), table.to_svg(metric))
            .map_err(|e| CliError::Runtime(format!("cannot write {path}: {e}")))?;
    }
    for row in table.aggregates() {
        out.note(&format!(
            "{} n={} outcome={} f1={}",
            row.experiment,
            row.n,
            format_decimal(row.outcome),
            format_decimal(row.f1)
        ));
    }
    Ok(())
}

pub fn scaling(r: &Resolved, out: &Output, svg: Option<&str>) -> Result<(), CliError> {
    let seed: u64 = r.get("seed")?;
    let (lo, hi) = pair(r, "rates")?;
    let betas: Vec<f64> = r.list("betas")?;
    let prefix: String = r.get("name")?;
    let target: String = r.get("target")?;
    let specs = r
        .list::<String>("nets")?
        .into_iter()
        .map(|token| {
            let net = recipe(r, &token)?.build(lo, hi, seed)?;
            experiment_spec(r, format!("{prefix}:{token}"), net, Grid::Beta(betas.clone()), &target, seed)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let table = run_scaling_experiment(&specs)?;
    write_table(r, &table, out, svg, PlotMetric::Outcome)
}

pub fn comparison(r: &Resolved, out: &Output, svg: Option<&str>) -> Result<(), CliError> {
    let seed: u64 = r.get("seed")?;
    let (lo, hi) = pair(r, "rates")?;
    let token: String = r.get("net")?;
    let net = recipe(r, &token)?.build(lo, hi, seed)?;
    let methods: Vec<Method> = r.list("methods")?;
    let target: String = r.get("target")?;
    let spec = experiment_spec(r, r.get("name")?, net, Grid::Cascades(r.list("ns")?), &target, seed)?;
    let table = run_comparison(&spec, &methods)?;
    write_table(r, &table, out, svg, PlotMetric::F1)
}
