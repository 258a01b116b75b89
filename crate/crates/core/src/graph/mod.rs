//! Directed contact networks with per-edge transmission rates.

mod generators;

pub use generators::{
    generate_chain, generate_forest_fire, generate_kronecker, generate_star, sample_rates, tree_fixture, KroneckerSeed,
    NetworkRecipe, DEFAULT_FOREST_FIRE_BACKWARD, DEFAULT_FOREST_FIRE_FORWARD,
};

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::decimal::format_decimal;
use crate::error::{NetInfError, Result};

pub type NodeId = usize;

/// A directed edge `src -> dst` carrying transmission rate `rate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub src: NodeId,
    pub dst: NodeId,
    pub rate: f64,
}

impl Edge {
    pub fn new(src: NodeId, dst: NodeId, rate: f64) -> Self {
        Edge { src, dst, rate }
    }
}

/// Immutable weighted digraph on nodes `0..num_nodes`.
///
/// Edges are kept sorted by `(src, dst)`, which makes the out-edges of a node
/// a contiguous slice and fixes the iteration order used by the simulator.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedNetwork {
    num_nodes: usize,
    edges: Vec<Edge>,
    out_offsets: Vec<usize>,
    in_adj: Vec<Vec<NodeId>>,
}

impl DirectedNetwork {
    /// Builds a network, rejecting self-loops, duplicate ordered pairs,
    /// out-of-range endpoints and non-positive rates.
    pub fn new(num_nodes: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if num_nodes == 0 {
            return Err(NetInfError::InvalidSize("a network needs at least one node".into()));
        }
        for e in &edges {
            for node in [e.src, e.dst] {
                if node >= num_nodes {
                    return Err(NetInfError::Index { index: node, num_nodes });
                }
            }
            if e.src == e.dst {
                return Err(NetInfError::InvalidParameter(format!("self-loop on node {}", e.src)));
            }
            if !(e.rate > 0.0 && e.rate.is_finite()) {
                return Err(NetInfError::InvalidParameter(format!(
                    "edge {}->{} has non-positive rate {}",
                    e.src, e.dst, e.rate
                )));
            }
        }
        edges.sort_by_key(|e| (e.src, e.dst));
        if let Some(w) = edges.windows(2).find(|w| (w[0].src, w[0].dst) == (w[1].src, w[1].dst)) {
            return Err(NetInfError::InvalidParameter(format!("duplicate edge {}->{}", w[0].src, w[0].dst)));
        }
        Ok(Self::from_sorted(num_nodes, edges))
    }

    /// Like [`DirectedNetwork::new`] but silently drops self-loops and any
    /// repeat of an ordered pair after its first occurrence.
    pub fn new_dedup(num_nodes: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let kept = edges.into_iter().filter(|e| e.src != e.dst && seen.insert((e.src, e.dst))).collect();
        Self::new(num_nodes, kept)
    }

    fn from_sorted(num_nodes: usize, edges: Vec<Edge>) -> Self {
        let mut out_offsets = vec![0; num_nodes + 1];
        let mut in_adj = vec![Vec::new(); num_nodes];
        for e in &edges {
            out_offsets[e.src + 1] += 1;
            in_adj[e.dst].push(e.src);
        }
        for u in 0..num_nodes {
            out_offsets[u + 1] += out_offsets[u];
        }
        DirectedNetwork { num_nodes, edges, out_offsets, in_adj }
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Out-edges of `u`, sorted by destination.
    pub fn out_edges(&self, u: NodeId) -> &[Edge] {
        &self.edges[self.out_offsets[u]..self.out_offsets[u + 1]]
    }

    /// Sources of the edges entering `v`, in increasing order.
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.in_adj[v]
    }

    pub fn rate(&self, src: NodeId, dst: NodeId) -> Option<f64> {
        let out = self.out_edges(src);
        out.binary_search_by_key(&dst, |e| e.dst).ok().map(|k| out[k].rate)
    }

    /// The ordered pairs `(src, dst)` of every edge.
    pub fn edge_set(&self) -> BTreeSet<(NodeId, NodeId)> {
        self.edges.iter().map(|e| (e.src, e.dst)).collect()
    }

    /// Same topology with every rate replaced by `f(edge)`.
    pub fn map_rates(&self, mut f: impl FnMut(&Edge) -> f64) -> Result<Self> {
        let edges = self.edges.iter().map(|e| Edge::new(e.src, e.dst, f(e))).collect();
        Self::new(self.num_nodes, edges)
    }

    fn check_node(&self, i: NodeId) -> Result<()> {
        if i >= self.num_nodes {
            return Err(NetInfError::Index { index: i, num_nodes: self.num_nodes });
        }
        Ok(())
    }

    pub fn parent_set(&self, target: NodeId) -> Result<ParentSet> {
        self.check_node(target)?;
        let parents: BTreeSet<NodeId> = self.in_adj[target].iter().copied().collect();
        let min_rate = parents.iter().filter_map(|&j| self.rate(j, target)).fold(f64::INFINITY, f64::min);
        Ok(ParentSet { target, parents, min_rate })
    }

    /// Upstream set `R` (nodes with a path into `target`) and the set `U`
    /// of nodes reachable by a path of length at least one from `R`.
    pub fn super_neighborhood(&self, target: NodeId) -> Result<SuperNeighborhood> {
        self.check_node(target)?;
        let mut upstream_mark = vec![false; self.num_nodes];
        let mut queue = VecDeque::from([target]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.in_adj[v] {
                if !upstream_mark[u] {
                    upstream_mark[u] = true;
                    queue.push_back(u);
                }
            }
        }
        upstream_mark[target] = false;
        let upstream: BTreeSet<NodeId> = (0..self.num_nodes).filter(|&u| upstream_mark[u]).collect();

        let mut down_mark = vec![false; self.num_nodes];
        let mut queue: VecDeque<NodeId> = upstream.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            for e in self.out_edges(u) {
                if !down_mark[e.dst] {
                    down_mark[e.dst] = true;
                    queue.push_back(e.dst);
                }
            }
        }
        let downstream = (0..self.num_nodes).filter(|&u| down_mark[u]).collect();
        Ok(SuperNeighborhood { target, upstream, downstream })
    }

    /// Serialises to the line-based graph format: `N <nodes>` then
    /// `src,dst,rate` per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("N {}\n", self.num_nodes);
        for e in &self.edges {
            let _ = writeln!(out, "{},{},{}", e.src, e.dst, format_decimal(e.rate));
        }
        out
    }

    /// Parses the graph format. Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut num_nodes = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| NetInfError::Parse { line: line_no, message };
            match num_nodes {
                None => {
                    let n = line
                        .strip_prefix('N')
                        .map(str::trim)
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| err(format!("expected `N <num_nodes>`, got `{line}`")))?;
                    num_nodes = Some(n);
                }
                Some(_) => {
                    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
                    let [src, dst, rate] = fields[..] else {
                        return Err(err(format!("expected `src,dst,rate`, got `{line}`")));
                    };
                    let src = src.parse().map_err(|_| err(format!("bad source `{src}`")))?;
                    let dst = dst.parse().map_err(|_| err(format!("bad destination `{dst}`")))?;
                    let rate = rate.parse().map_err(|_| err(format!("bad rate `{rate}`")))?;
                    edges.push(Edge::new(src, dst, rate));
                }
            }
        }
        let num_nodes = num_nodes.ok_or_else(|| NetInfError::Format("missing `N <num_nodes>` header".into()))?;
        Self::new(num_nodes, edges)
    }
}

/// The true parents `S` of a node together with their in-degree and minimum rate.
#[derive(Debug, Clone, PartialEq)]
pub struct ParentSet {
    pub target: NodeId,
    pub parents: BTreeSet<NodeId>,
    /// Smallest rate over the parents; infinite when there are none.
    pub min_rate: f64,
}

impl ParentSet {
    pub fn in_degree(&self) -> usize {
        self.parents.len()
    }
}

/// The nodes that can influence a target: `R` (upstream) and `U`
/// (reachable from `R`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperNeighborhood {
    pub target: NodeId,
    pub upstream: BTreeSet<NodeId>,
    pub downstream: BTreeSet<NodeId>,
}

impl SuperNeighborhood {
    /// `R ∪ U`.
    pub fn members(&self) -> BTreeSet<NodeId> {
        self.upstream.union(&self.downstream).copied().collect()
    }

    /// `p = |R ∪ U|`.
    pub fn size(&self) -> usize {
        self.upstream.union(&self.downstream).count()
    }

    /// Candidate parents: `(R ∪ U) \ {target}` in increasing order.
    pub fn candidates(&self) -> Vec<NodeId> {
        self.members().into_iter().filter(|&j| j != self.target).collect()
    }

    /// Whether `node` is in `R ∪ U ∪ {target}`.
    pub fn covers(&self, node: NodeId) -> bool {
        node == self.target || self.upstream.contains(&node) || self.downstream.contains(&node)
    }

    pub fn is_empty(&self) -> bool {
        self.upstream.is_empty() && self.downstream.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(DirectedNetwork::new(2, vec![Edge::new(0, 0, 1.0)]).is_err());
        assert!(DirectedNetwork::new(2, vec![Edge::new(0, 2, 1.0)]).is_err());
        assert!(DirectedNetwork::new(2, vec![Edge::new(0, 1, 0.0)]).is_err());
        assert!(DirectedNetwork::new(2, vec![Edge::new(0, 1, f64::NAN)]).is_err());
        let dup = vec![Edge::new(0, 1, 1.0), Edge::new(0, 1, 2.0)];
        assert!(DirectedNetwork::new(2, dup.clone()).is_err());
        let net = DirectedNetwork::new_dedup(2, dup).unwrap();
        assert_eq!(net.rate(0, 1), Some(1.0));
        assert!(DirectedNetwork::new(0, vec![]).is_err());
    }

    #[test]
    fn adjacency_queries() {
        let net =
            DirectedNetwork::new(4, vec![Edge::new(2, 3, 0.5), Edge::new(0, 1, 1.0), Edge::new(0, 2, 2.0)]).unwrap();
        assert_eq!(net.out_edges(0).iter().map(|e| e.dst).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(net.in_neighbors(3), &[2]);
        assert_eq!(net.rate(0, 2), Some(2.0));
        assert_eq!(net.rate(2, 0), None);
        let ps = net.parent_set(3).unwrap();
        assert_eq!(ps.parents, set(&[2]));
        assert_eq!(ps.min_rate, 0.5);
        assert_eq!(ps.in_degree(), 1);
        assert!(net.parent_set(4).is_err());
    }

    #[test]
    fn super_neighborhood_of_chain_tail() {
        let chain = generate_chain(4).unwrap();
        let v = chain.super_neighborhood(3).unwrap();
        assert_eq!(v.upstream, set(&[0, 1, 2]));
        assert_eq!(v.downstream, set(&[1, 2, 3]));
        assert_eq!(v.size(), 4);
        assert_eq!(v.candidates(), vec![0, 1, 2]);
    }

    #[test]
    fn super_neighborhood_of_star_leaf() {
        let star = generate_star(3).unwrap();
        let v = star.super_neighborhood(1).unwrap();
        assert_eq!(v.upstream, set(&[0]));
        assert_eq!(v.downstream, set(&[1, 2, 3]));
        assert_eq!(v.size(), 4);
    }

    #[test]
    fn super_neighborhood_of_isolated_node() {
        let net = DirectedNetwork::new(3, vec![]).unwrap();
        let v = net.super_neighborhood(1).unwrap();
        assert!(v.upstream.is_empty() && v.downstream.is_empty());
        assert_eq!(v.size(), 0);
        assert!(v.is_empty());
        assert!(v.covers(1));
    }

    #[test]
    fn text_format_round_trip() {
        let net = DirectedNetwork::new(3, vec![Edge::new(0, 1, 0.731548234117), Edge::new(2, 0, 1.25)]).unwrap();
        let text = net.to_text();
        assert_eq!(text, "N 3\n0,1,0.731548234117\n2,0,1.25\n");
        assert_eq!(DirectedNetwork::parse(&text).unwrap(), net);
        let commented = format!("# generated\n\n{text}");
        assert_eq!(DirectedNetwork::parse(&commented).unwrap(), net);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match DirectedNetwork::parse("N 2\n0,1\n") {
            Err(NetInfError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(DirectedNetwork::parse("0,1,1\n").is_err());
        assert!(DirectedNetwork::parse("").is_err());
        assert!(DirectedNetwork::parse("N 2\n0,5,1\n").is_err());
    }
}
