//! Shared test support: a seeded random-hypergraph corpus and independent
//! reference implementations (union-find components, all-pairs shortest
//! paths, from-scratch dismantling) used to cross-check the library.

// index-style loops keep the Floyd-Warshall reference close to its textbook form
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyperci::hypergraph::Hypergraph;

pub const CORPUS_SEED: u64 = 0x00C0FFEE;

pub fn fixture() -> Hypergraph {
    Hypergraph::build(&[
        vec!["x0", "x1", "x2"],
        vec!["x2", "x3"],
        vec!["x2", "x4", "x5", "x6"],
        vec!["x3", "x6"],
    ])
    .unwrap()
}

/// Random hyperedge lists: up to 30 nodes, up to 40 hyperedges, edge sizes
/// 1 through 6. Deterministic for a fixed seed.
pub fn random_corpus(count: usize) -> Vec<Vec<Vec<String>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=30usize);
            let m = rng.gen_range(1..=40usize);
            (0..m)
                .map(|_| {
                    let size = rng.gen_range(1..=6usize.min(n));
                    let mut members = BTreeSet::new();
                    while members.len() < size {
                        members.insert(rng.gen_range(0..n));
                    }
                    members.iter().map(|i| format!("n{i}")).collect()
                })
                .collect()
        })
        .collect()
}

// ---- union-find reference -------------------------------------------------

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Components by brute force: union every node pair that shares a hyperedge.
pub fn uf_components(h: &Hypergraph) -> Vec<BTreeSet<usize>> {
    let n = h.node_count();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let shares = h.hyperedges().iter().any(|e| e.contains(&i) && e.contains(&j));
            if shares {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for v in 0..n {
        let root = uf.find(v);
        groups.entry(root).or_default().insert(v);
    }
    let mut out: Vec<BTreeSet<usize>> = groups.into_values().collect();
    out.sort_by_key(|c| *c.iter().next().unwrap());
    out
}

// ---- all-pairs shortest paths reference -----------------------------------

/// Floyd-Warshall distances over the clique-expansion adjacency.
pub fn apsp(h: &Hypergraph) -> Vec<Vec<Option<usize>>> {
    let n = h.node_count();
    let mut dist: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    for v in 0..n {
        dist[v][v] = Some(0);
    }
    for edge in h.hyperedges() {
        for (a, &i) in edge.iter().enumerate() {
            for &j in &edge[a + 1..] {
                dist[i][j] = Some(1);
                dist[j][i] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if let Some(dik) = dist[i][k] {
                for j in 0..n {
                    if let Some(dkj) = dist[k][j] {
                        let through = dik + dkj;
                        if dist[i][j].is_none_or(|d| through < d) {
                            dist[i][j] = Some(through);
                        }
                    }
                }
            }
        }
    }
    dist
}

/// HyperCI by the definition, with distances from the APSP reference.
pub fn hyper_ci_reference(h: &Hypergraph, l: usize) -> Vec<f64> {
    let dist = apsp(h);
    (0..h.node_count())
        .map(|v| {
            let d = h.hhd(v).unwrap();
            if d <= 1 {
                return 0.0;
            }
            let boundary_sum: usize = (0..h.node_count())
                .filter(|&u| dist[v][u] == Some(l))
                .map(|u| h.hhd(u).unwrap())
                .sum();
            ((d - 1) * boundary_sum) as f64
        })
        .collect()
}

// ---- from-scratch dismantling reference -----------------------------------

/// Label-level simulator that recomputes everything from the original edge
/// list at every step. Used to check single-node-batch trajectories.
pub struct ScratchSim {
    edges: Vec<Vec<String>>,
    /// live labels in original first-seen order
    pub live: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScratchMethod {
    Hhda,
    HyperCi1,
}

impl ScratchSim {
    pub fn new(edges: &[Vec<String>]) -> ScratchSim {
        let mut live: Vec<String> = Vec::new();
        let mut dedup_edges = Vec::new();
        for edge in edges {
            let mut members: Vec<String> = Vec::new();
            for label in edge {
                if !members.contains(label) {
                    members.push(label.clone());
                }
                if !live.contains(label) {
                    live.push(label.clone());
                }
            }
            dedup_edges.push(members);
        }
        ScratchSim {
            edges: dedup_edges,
            live,
        }
    }

    fn live_edges(&self) -> Vec<Vec<&str>> {
        self.edges
            .iter()
            .map(|e| {
                e.iter()
                    .filter(|l| self.live.contains(*l))
                    .map(|l| l.as_str())
                    .collect::<Vec<_>>()
            })
            .filter(|e: &Vec<&str>| !e.is_empty())
            .collect()
    }

    fn hhd(&self, label: &str) -> usize {
        self.live_edges()
            .iter()
            .filter(|e| e.contains(&label))
            .count()
    }

    fn neighbors(&self, label: &str) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for edge in self.live_edges() {
            if edge.contains(&label) {
                for l in edge {
                    if l != label {
                        out.insert(l.to_string());
                    }
                }
            }
        }
        out
    }

    fn boundary(&self, label: &str, l: usize) -> BTreeSet<String> {
        let mut seen: BTreeSet<String> = BTreeSet::from([label.to_string()]);
        let mut frontier: BTreeSet<String> = BTreeSet::from([label.to_string()]);
        for _ in 0..l {
            let mut next = BTreeSet::new();
            for x in &frontier {
                for u in self.neighbors(x) {
                    if !seen.contains(&u) {
                        seen.insert(u.clone());
                        next.insert(u);
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        frontier
    }

    fn score(&self, method: ScratchMethod, label: &str) -> usize {
        match method {
            ScratchMethod::Hhda => self.hhd(label),
            ScratchMethod::HyperCi1 => {
                let d = self.hhd(label);
                if d <= 1 {
                    0
                } else {
                    (d - 1) * self.boundary(label, 1).iter().map(|u| self.hhd(u)).sum::<usize>()
                }
            }
        }
    }

    /// Argmax by score, ties to the earliest label in original order.
    pub fn pick(&self, method: ScratchMethod) -> String {
        self.live
            .iter()
            .max_by(|a, b| {
                self.score(method, a)
                    .cmp(&self.score(method, b))
                    .then_with(|| {
                        let pa = self.live.iter().position(|l| l == *a).unwrap();
                        let pb = self.live.iter().position(|l| l == *b).unwrap();
                        pb.cmp(&pa)
                    })
            })
            .unwrap()
            .clone()
    }

    pub fn remove(&mut self, label: &str) {
        self.live.retain(|l| l != label);
    }

    /// (sigma_remaining, sigma_original) recomputed from scratch.
    pub fn sigma(&self, n0: usize) -> (f64, f64) {
        if self.live.is_empty() {
            return (0.0, 0.0);
        }
        // components over live labels
        let mut comps: Vec<BTreeSet<String>> = self
            .live
            .iter()
            .map(|l| BTreeSet::from([l.clone()]))
            .collect();
        for edge in self.live_edges() {
            let members: BTreeSet<String> = edge.iter().map(|l| l.to_string()).collect();
            let (mut merged, rest): (Vec<_>, Vec<_>) = comps
                .into_iter()
                .partition(|c| c.intersection(&members).next().is_some());
            let mut unioned = BTreeSet::new();
            for c in merged.drain(..) {
                unioned.extend(c);
            }
            comps = rest;
            comps.push(unioned);
        }
        let contained_edges = |c: &BTreeSet<String>| {
            self.live_edges()
                .iter()
                .filter(|e| e.iter().all(|l| c.contains(*l)))
                .count()
        };
        let pos = |c: &BTreeSet<String>| {
            c.iter()
                .map(|l| self.live.iter().position(|x| x == l).unwrap())
                .min()
                .unwrap()
        };
        let gcc = comps
            .iter()
            .max_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then(contained_edges(a).cmp(&contained_edges(b)))
                    .then(pos(b).cmp(&pos(a)))
            })
            .unwrap();
        (
            gcc.len() as f64 / self.live.len() as f64,
            gcc.len() as f64 / n0 as f64,
        )
    }
}
