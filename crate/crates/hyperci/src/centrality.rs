//! Node-scoring strategies and deterministic ranking.
//!
//! Four scores are provided: hyper-degree (HHD), projected degree (HD),
//! classic collective influence on the projection (CI), and the
//! hypergraph-based collective influence (HyperCI). HD and CI work on the
//! clique-expansion projection; HHD and HyperCI read the incidence structure
//! directly.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreKind {
    Hhd,
    Hd,
    Ci,
    HyperCi,
}

impl ScoreKind {
    pub fn name(&self) -> &'static str {
        match self {
            ScoreKind::Hhd => "hhd",
            ScoreKind::Hd => "hd",
            ScoreKind::Ci => "ci",
            ScoreKind::HyperCi => "hyperci",
        }
    }
}

/// Per-node scores for one strategy at one graph state. Scores are indexed
/// by the live node ids of the hypergraph they were computed on.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityScores {
    pub kind: ScoreKind,
    pub l: Option<usize>,
    pub scores: Vec<f64>,
}

/// Hyper-degree centrality: score(v) = number of incident hyperedges.
pub fn score_hhd(h: &Hypergraph) -> Result<CentralityScores> {
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    let scores = (0..h.node_count())
        .map(|v| h.hhd(v).map(|d| d as f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralityScores {
        kind: ScoreKind::Hhd,
        l: None,
        scores,
    })
}

/// Projected degree centrality: score(v) = number of distinct neighbors of v
/// in the clique expansion (binary degree, not shared-edge multiplicity).
pub fn score_hd(h: &Hypergraph) -> Result<CentralityScores> {
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    let scores = (0..h.node_count())
        .map(|v| h.neighbors(v).map(|ns| ns.len() as f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralityScores {
        kind: ScoreKind::Hd,
        l: None,
        scores,
    })
}

/// HyperCI: score(v) = (HHD(v) - 1) * sum of HHD(u) over the nodes u at
/// shortest-path distance exactly `l` from v. Nodes with HHD(v) = 1 score 0.
pub fn score_hyper_ci(h: &Hypergraph, l: usize) -> Result<CentralityScores> {
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    if l < 1 {
        return Err(Error::InvalidRadius(l));
    }
    let mut scores = Vec::with_capacity(h.node_count());
    for v in 0..h.node_count() {
        let degree = h.hhd(v)?;
        if degree <= 1 {
            scores.push(0.0);
            continue;
        }
        let boundary_sum: usize = h
            .ball_boundary(v, l)?
            .iter()
            .map(|&u| h.hhd(u).unwrap_or(0))
            .sum();
        scores.push(((degree - 1) * boundary_sum) as f64);
    }
    Ok(CentralityScores {
        kind: ScoreKind::HyperCi,
        l: Some(l),
        scores,
    })
}

/// Classic collective influence on the projection:
/// score(v) = (k_v - 1) * sum of (k_u - 1) over the distance-`l` frontier,
/// with k the projected distinct-neighbor degree.
pub fn score_ci(h: &Hypergraph, l: usize) -> Result<CentralityScores> {
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    if l < 1 {
        return Err(Error::InvalidRadius(l));
    }
    let degrees: Vec<usize> = (0..h.node_count())
        .map(|v| h.neighbors(v).map(|ns| ns.len()))
        .collect::<Result<Vec<_>>>()?;
    let mut scores = Vec::with_capacity(h.node_count());
    for v in 0..h.node_count() {
        if degrees[v] <= 1 {
            scores.push(0.0);
            continue;
        }
        let frontier_sum: usize = h
            .ball_boundary(v, l)?
            .iter()
            .map(|&u| degrees[u].saturating_sub(1))
            .sum();
        scores.push(((degrees[v] - 1) * frontier_sum) as f64);
    }
    Ok(CentralityScores {
        kind: ScoreKind::Ci,
        l: Some(l),
        scores,
    })
}

/// Nodes sorted by score descending, ties broken by ascending node id.
pub fn rank(scores: &CentralityScores) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..scores.scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores.scores[b]
            .partial_cmp(&scores.scores[a])
            .expect("scores are finite")
            .then(a.cmp(&b))
    });
    order
}
