//! Synthetic network generators: canonical fixtures, stochastic Kronecker
//! graphs and the Forest Fire model.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{DirectedNetwork, Edge};
use crate::error::{NetInfError, Result};

pub const DEFAULT_FOREST_FIRE_FORWARD: f64 = 0.35;
pub const DEFAULT_FOREST_FIRE_BACKWARD: f64 = 0.2;

/// Kronecker graphs above this power would enumerate more than 4^15 pairs.
const MAX_KRONECKER_POWER: u32 = 15;

/// Chain `0 -> 1 -> ... -> n-1` with unit rates.
pub fn generate_chain(n: usize) -> Result<DirectedNetwork> {
    if n < 2 {
        return Err(NetInfError::InvalidSize(format!("a chain needs at least 2 nodes, got {n}")));
    }
    DirectedNetwork::new(n, (0..n - 1).map(|i| Edge::new(i, i + 1, 1.0)).collect())
}

/// Star with root 0 pointing at leaves `1..=num_leaves`, unit rates.
pub fn generate_star(num_leaves: usize) -> Result<DirectedNetwork> {
    if num_leaves == 0 {
        return Err(NetInfError::InvalidSize("a star needs at least one leaf".into()));
    }
    DirectedNetwork::new(num_leaves + 1, (1..=num_leaves).map(|k| Edge::new(0, k, 1.0)).collect())
}

/// Seven-node, two-level in-tree rooted at node 0 with unit rates.
///
/// Node 0 has parents {1, 2, 3}; node 1 has parent 4 and node 2 has parents
/// {5, 6}.
pub fn tree_fixture() -> DirectedNetwork {
    let edges =
        [(1, 0), (2, 0), (3, 0), (4, 1), (5, 2), (6, 2)].into_iter().map(|(s, d)| Edge::new(s, d, 1.0)).collect();
    DirectedNetwork::new(7, edges).expect("fixture is well formed")
}

/// 2x2 initiator matrix of a stochastic Kronecker graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KroneckerSeed(pub [[f64; 2]; 2]);

impl Default for KroneckerSeed {
    /// The hierarchical initiator `[[0.9, 0.1], [0.1, 0.9]]`.
    fn default() -> Self {
        KroneckerSeed([[0.9, 0.1], [0.1, 0.9]])
    }
}

impl KroneckerSeed {
    /// Probability of the edge `u -> v` in the `power`-th Kronecker power.
    pub fn edge_probability(&self, u: usize, v: usize, power: u32) -> f64 {
        (0..power).map(|b| self.0[(u >> b) & 1][(v >> b) & 1]).product()
    }
}

/// Stochastic Kronecker graph on `2^power` nodes; self-loops removed, unit rates.
pub fn generate_kronecker<R: Rng + ?Sized>(seed: &KroneckerSeed, power: u32, rng: &mut R) -> Result<DirectedNetwork> {
    if seed.0.iter().flatten().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(NetInfError::InvalidParameter(format!(
            "Kronecker seed entries must lie in [0,1], got {:?}",
            seed.0
        )));
    }
    if power == 0 || power > MAX_KRONECKER_POWER {
        return Err(NetInfError::InvalidSize(format!(
            "Kronecker power must be in 1..={MAX_KRONECKER_POWER}, got {power}"
        )));
    }
    let n = 1usize << power;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let p = seed.edge_probability(u, v, power);
            if p > 0.0 && rng.random::<f64>() < p {
                edges.push(Edge::new(u, v, 1.0));
            }
        }
    }
    DirectedNetwork::new(n, edges)
}

/// Number of successes before the first failure, where each trial succeeds
/// with probability `p`. Mean `p / (1 - p)`.
fn geometric_count<R: Rng + ?Sized>(p: f64, rng: &mut R) -> usize {
    let mut k = 0;
    while p > 0.0 && rng.random::<f64>() < p {
        k += 1;
    }
    k
}

/// Directed Forest Fire graph with unit rates.
///
/// Node `v` arrives, links to a uniformly chosen ambassador, then recursively
/// burns a geometric number of not-yet-burned out-neighbours (`p_fwd`) and
/// in-neighbours (`p_bwd`) of every burned node, linking to each.
pub fn generate_forest_fire<R: Rng + ?Sized>(n: usize, p_fwd: f64, p_bwd: f64, rng: &mut R) -> Result<DirectedNetwork> {
    if n == 0 {
        return Err(NetInfError::InvalidSize("forest fire needs at least one node".into()));
    }
    for (name, p) in [("forward", p_fwd), ("backward", p_bwd)] {
        if !(0.0..1.0).contains(&p) {
            return Err(NetInfError::InvalidParameter(format!("{name} burning probability must be in [0,1), got {p}")));
        }
    }
    let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    let mut burned = vec![false; n];

    for v in 1..n {
        burned[..=v].iter_mut().for_each(|b| *b = false);
        burned[v] = true;
        let ambassador = rng.random_range(0..v);
        burned[ambassador] = true;
        let mut frontier = vec![ambassador];
        let mut linked = vec![ambassador];
        while let Some(x) = frontier.pop() {
            let n_fwd = geometric_count(p_fwd, rng);
            let n_bwd = geometric_count(p_bwd, rng);
            for (count, pool) in [(n_fwd, &out_adj[x]), (n_bwd, &in_adj[x])] {
                if count == 0 {
                    continue;
                }
                let mut fresh: Vec<usize> = pool.iter().copied().filter(|&w| !burned[w]).collect();
                fresh.shuffle(rng);
                fresh.truncate(count);
                for w in fresh {
                    burned[w] = true;
                    linked.push(w);
                    frontier.push(w);
                }
            }
        }
        for w in linked {
            out_adj[v].push(w);
            in_adj[w].push(v);
            edges.push(Edge::new(v, w, 1.0));
        }
    }
    DirectedNetwork::new(n, edges)
}

/// Redraws every edge rate i.i.d. uniform on `[lo, hi]`, keeping the topology.
pub fn sample_rates<R: Rng + ?Sized>(
    topology: &DirectedNetwork,
    lo: f64,
    hi: f64,
    rng: &mut R,
) -> Result<DirectedNetwork> {
    if !(lo > 0.0 && lo.is_finite() && hi.is_finite()) || hi < lo {
        return Err(NetInfError::InvalidParameter(format!("rate range must satisfy 0 < lo <= hi, got [{lo}, {hi}]")));
    }
    topology.map_rates(|_| if lo == hi { lo } else { rng.random_range(lo..=hi) })
}

/// A named network family with its size, as written on the command line:
/// `chain:<n>`, `star:<k>`, `tree`, `kronecker:<k>` or `forestfire:<n>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NetworkRecipe {
    Chain(usize),
    Star(usize),
    Tree,
    Kronecker { power: u32, seed: KroneckerSeed },
    ForestFire { n: usize, forward: f64, backward: f64 },
}

impl NetworkRecipe {
    /// Builds the topology from one random stream and draws rates uniform
    /// on `[lo, hi]` from another, both derived from `seed`.
    pub fn build(&self, lo: f64, hi: f64, seed: u64) -> Result<DirectedNetwork> {
        let mut topology_rng = crate::rng::substream(seed, 0);
        let topology = match *self {
            NetworkRecipe::Chain(n) => generate_chain(n)?,
            NetworkRecipe::Star(k) => generate_star(k)?,
            NetworkRecipe::Tree => tree_fixture(),
            NetworkRecipe::Kronecker { power, seed } => generate_kronecker(&seed, power, &mut topology_rng)?,
            NetworkRecipe::ForestFire { n, forward, backward } => {
                generate_forest_fire(n, forward, backward, &mut topology_rng)?
            }
        };
        sample_rates(&topology, lo, hi, &mut crate::rng::substream(seed, 1))
    }
}

impl std::fmt::Display for NetworkRecipe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NetworkRecipe::Chain(n) => write!(f, "chain:{n}"),
            NetworkRecipe::Star(k) => write!(f, "star:{k}"),
            NetworkRecipe::Tree => write!(f, "tree"),
            NetworkRecipe::Kronecker { power, .. } => write!(f, "kronecker:{power}"),
            NetworkRecipe::ForestFire { n, .. } => write!(f, "forestfire:{n}"),
        }
    }
}

impl std::str::FromStr for NetworkRecipe {
    type Err = NetInfError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || NetInfError::InvalidExperiment(format!("unknown network '{s}'"));
        let (kind, size) = match s.split_once(':') {
            Some((k, v)) => (k, Some(v.trim().parse::<usize>().map_err(|_| bad())?)),
            None => (s, None),
        };
        match (kind.trim(), size) {
            ("chain", Some(n)) => Ok(NetworkRecipe::Chain(n)),
            ("star", Some(k)) => Ok(NetworkRecipe::Star(k)),
            ("tree", None) => Ok(NetworkRecipe::Tree),
            ("kronecker", Some(k)) => Ok(NetworkRecipe::Kronecker {
                power: u32::try_from(k).map_err(|_| bad())?,
                seed: KroneckerSeed::default(),
            }),
            ("forestfire", Some(n)) => Ok(NetworkRecipe::ForestFire {
                n,
                forward: DEFAULT_FOREST_FIRE_FORWARD,
                backward: DEFAULT_FOREST_FIRE_BACKWARD,
            }),
            _ => Err(bad()),
        }
    }
}
