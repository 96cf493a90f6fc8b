//! Hypergraph representation with incidence queries, clique-expansion
//! projection, connected components and connectivity.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type EdgeId = usize;

/// Undirected hypergraph over dense node ids `0..n` with original string
/// labels retained. Immutable after construction; removal returns a new
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<String>,
    hyperedges: Vec<Vec<NodeId>>,
    node_to_edges: Vec<Vec<EdgeId>>,
}

/// A connected component: its nodes plus the hyperedges fully contained in
/// it. Every surviving hyperedge lies in exactly one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub node_ids: BTreeSet<NodeId>,
    pub hyperedge_ids: BTreeSet<EdgeId>,
}

impl Component {
    pub fn node_count(&self) -> usize {
        self.node_ids.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedge_ids.len()
    }

    fn min_node(&self) -> NodeId {
        *self.node_ids.iter().next().expect("component is non-empty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DatasetStats {
    pub node_count: usize,
    pub hyperedge_count: usize,
    pub avg_hyper_degree: f64,
    pub avg_hyperedge_size: f64,
}

/// Denominator used by [`Hypergraph::connectivity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Current node count of the (possibly shrunken) hypergraph.
    Remaining,
    /// A caller-supplied original node count.
    Original(usize),
}

/// Sparse symmetric projection `I I^T - D`: off-diagonal entry (i, j) counts
/// the hyperedges containing both i and j, the diagonal is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    n: usize,
    weights: BTreeMap<(NodeId, NodeId), usize>,
}

impl Projection {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: NodeId, j: NodeId) -> usize {
        if i == j {
            return 0;
        }
        let key = if i < j { (i, j) } else { (j, i) };
        self.weights.get(&key).copied().unwrap_or(0)
    }

    /// Iterate the nonzero upper-triangle entries `((i, j), weight)` with i < j.
    pub fn iter(&self) -> impl Iterator<Item = (&(NodeId, NodeId), &usize)> {
        self.weights.iter()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from hyperedges given as label sets. Labels are
    /// mapped to dense ids in first-seen order. Duplicate labels within one
    /// hyperedge collapse; exact duplicate hyperedges are kept as distinct
    /// edges (they still count toward hyper-degree).
    pub fn build<S: AsRef<str>>(hyperedges: &[Vec<S>]) -> Result<Hypergraph> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, NodeId> = HashMap::new();
        let mut edges: Vec<Vec<NodeId>> = Vec::with_capacity(hyperedges.len());

        for (pos, edge) in hyperedges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyHyperedge { line: pos + 1 });
            }
            let mut members: BTreeSet<NodeId> = BTreeSet::new();
            for label in edge {
                let label = label.as_ref();
                let id = match index.get(label) {
                    Some(&id) => id,
                    None => {
                        let id = labels.len();
                        labels.push(label.to_string());
                        index.insert(label.to_string(), id);
                        id
                    }
                };
                members.insert(id);
            }
            edges.push(members.into_iter().collect());
        }

        Ok(Hypergraph::from_parts(labels, edges))
    }

    fn from_parts(labels: Vec<String>, hyperedges: Vec<Vec<NodeId>>) -> Hypergraph {
        let mut node_to_edges = vec![Vec::new(); labels.len()];
        for (e, edge) in hyperedges.iter().enumerate() {
            for &v in edge {
                node_to_edges[v].push(e);
            }
        }
        Hypergraph {
            labels,
            hyperedges,
            node_to_edges,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn hyperedge(&self, e: EdgeId) -> &[NodeId] {
        &self.hyperedges[e]
    }

    pub fn hyperedges(&self) -> &[Vec<NodeId>] {
        &self.hyperedges
    }

    pub fn incident_edges(&self, v: NodeId) -> Result<&[EdgeId]> {
        self.node_to_edges
            .get(v)
            .map(|e| e.as_slice())
            .ok_or(Error::UnknownNode(v))
    }

    /// Hyper-degree: the number of hyperedges incident to `v`.
    pub fn hhd(&self, v: NodeId) -> Result<usize> {
        Ok(self.incident_edges(v)?.len())
    }

    /// Clique-expansion adjacency `I I^T - D` as a sparse symmetric matrix.
    pub fn project_adjacency(&self) -> Projection {
        let mut weights: BTreeMap<(NodeId, NodeId), usize> = BTreeMap::new();
        for edge in &self.hyperedges {
            for (a, &i) in edge.iter().enumerate() {
                for &j in &edge[a + 1..] {
                    *weights.entry((i, j)).or_insert(0) += 1;
                }
            }
        }
        Projection {
            n: self.node_count(),
            weights,
        }
    }

    /// Nodes sharing at least one hyperedge with `v`.
    pub fn neighbors(&self, v: NodeId) -> Result<BTreeSet<NodeId>> {
        let mut out = BTreeSet::new();
        for &e in self.incident_edges(v)? {
            for &u in &self.hyperedges[e] {
                if u != v {
                    out.insert(u);
                }
            }
        }
        Ok(out)
    }

    /// Nodes at shortest-path distance exactly `l` from `v` in the projected
    /// graph, found by breadth-first layers.
    pub fn ball_boundary(&self, v: NodeId, l: usize) -> Result<BTreeSet<NodeId>> {
        if l < 1 {
            return Err(Error::InvalidRadius(l));
        }
        if v >= self.node_count() {
            return Err(Error::UnknownNode(v));
        }
        let mut seen = vec![false; self.node_count()];
        seen[v] = true;
        let mut frontier: Vec<NodeId> = vec![v];
        for _ in 0..l {
            let mut next = Vec::new();
            for &x in &frontier {
                for u in self.neighbors(x)? {
                    if !seen[u] {
                        seen[u] = true;
                        next.push(u);
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        Ok(frontier.into_iter().collect())
    }

    /// Connected components under shared-hyperedge adjacency, ordered by
    /// smallest contained node id. Degree-0 nodes form singleton components
    /// with no hyperedges.
    pub fn components(&self) -> Vec<Component> {
        let n = self.node_count();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut node_ids = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            visited[start] = true;
            while let Some(v) = queue.pop_front() {
                node_ids.insert(v);
                for &e in &self.node_to_edges[v] {
                    for &u in &self.hyperedges[e] {
                        if !visited[u] {
                            visited[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
            }
            let mut hyperedge_ids = BTreeSet::new();
            for &v in &node_ids {
                hyperedge_ids.extend(self.node_to_edges[v].iter().copied());
            }
            out.push(Component {
                node_ids,
                hyperedge_ids,
            });
        }
        out
    }

    /// The giant connected component: the component with the most nodes,
    /// ties broken by larger hyperedge count, then by smaller minimum node
    /// id. Node-count selection keeps |V_GCC| non-increasing under node
    /// removal, which the connectivity ratio relies on.
    pub fn gcc(&self) -> Result<Component> {
        if self.is_empty() {
            return Err(Error::EmptyHypergraph);
        }
        self.components()
            .into_iter()
            .max_by(|a, b| {
                a.node_count()
                    .cmp(&b.node_count())
                    .then(a.hyperedge_count().cmp(&b.hyperedge_count()))
                    .then(b.min_node().cmp(&a.min_node()))
            })
            .ok_or(Error::EmptyHypergraph)
    }

    /// Fraction of nodes inside the giant connected component. An empty
    /// hypergraph has connectivity 0.
    pub fn connectivity(&self, norm: Normalization) -> Result<f64> {
        let denom = match norm {
            Normalization::Remaining => self.node_count(),
            Normalization::Original(n0) => {
                if n0 == 0 {
                    return Err(Error::InvalidOriginalCount);
                }
                n0
            }
        };
        if self.is_empty() {
            return Ok(0.0);
        }
        Ok(self.gcc()?.node_count() as f64 / denom as f64)
    }

    /// Removes the given nodes, deleting them from every hyperedge and
    /// dropping hyperedges that become empty. Hyperedges that shrink to a
    /// single node are kept. Surviving nodes are re-indexed densely in
    /// ascending old-id order with their labels preserved; survivors that
    /// lose all incident hyperedges stay in the node set.
    pub fn remove_nodes(&self, victims: &BTreeSet<NodeId>) -> Result<Hypergraph> {
        for &v in victims {
            if v >= self.node_count() {
                return Err(Error::UnknownNode(v));
            }
        }
        let mut remap: Vec<Option<NodeId>> = vec![None; self.node_count()];
        let mut labels = Vec::with_capacity(self.node_count() - victims.len());
        for (v, slot) in remap.iter_mut().enumerate() {
            if !victims.contains(&v) {
                *slot = Some(labels.len());
                labels.push(self.labels[v].clone());
            }
        }
        let hyperedges: Vec<Vec<NodeId>> = self
            .hyperedges
            .iter()
            .map(|edge| edge.iter().filter_map(|&v| remap[v]).collect::<Vec<_>>())
            .filter(|edge: &Vec<NodeId>| !edge.is_empty())
            .collect();
        Ok(Hypergraph::from_parts(labels, hyperedges))
    }

    pub fn stats(&self) -> Result<DatasetStats> {
        if self.node_count() == 0 || self.hyperedge_count() == 0 {
            return Err(Error::EmptyHypergraph);
        }
        let degree_sum: usize = self.node_to_edges.iter().map(|e| e.len()).sum();
        Ok(DatasetStats {
            node_count: self.node_count(),
            hyperedge_count: self.hyperedge_count(),
            avg_hyper_degree: degree_sum as f64 / self.node_count() as f64,
            avg_hyperedge_size: degree_sum as f64 / self.hyperedge_count() as f64,
        })
    }
}
