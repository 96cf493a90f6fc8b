//! Batch node-removal engine: runs a dismantling strategy, records the
//! connectivity trajectory and computes the accumulated normalized
//! connectivity (ANC).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::centrality::{rank, score_ci, score_hd, score_hhd, score_hyper_ci, ScoreKind};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId, Normalization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    Hd,
    Hda,
    Hhd,
    Hhda,
    Ci,
    HyperCi,
}

/// A dismantling policy. `l` is present exactly for CI and HyperCI. HDA,
/// HHDA and HyperCI always rescore on the shrunken hypergraph before each
/// batch; HD and HHD score once on the original; CI is static unless
/// adaptive mode is requested explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strategy {
    pub kind: StrategyKind,
    pub l: Option<usize>,
    ci_adaptive: bool,
}

impl Strategy {
    pub fn hd() -> Strategy {
        Strategy {
            kind: StrategyKind::Hd,
            l: None,
            ci_adaptive: false,
        }
    }

    pub fn hda() -> Strategy {
        Strategy {
            kind: StrategyKind::Hda,
            l: None,
            ci_adaptive: false,
        }
    }

    pub fn hhd() -> Strategy {
        Strategy {
            kind: StrategyKind::Hhd,
            l: None,
            ci_adaptive: false,
        }
    }

    pub fn hhda() -> Strategy {
        Strategy {
            kind: StrategyKind::Hhda,
            l: None,
            ci_adaptive: false,
        }
    }

    pub fn ci(l: usize) -> Strategy {
        Strategy {
            kind: StrategyKind::Ci,
            l: Some(l),
            ci_adaptive: false,
        }
    }

    pub fn ci_adaptive(l: usize) -> Strategy {
        Strategy {
            kind: StrategyKind::Ci,
            l: Some(l),
            ci_adaptive: true,
        }
    }

    pub fn hyper_ci(l: usize) -> Strategy {
        Strategy {
            kind: StrategyKind::HyperCi,
            l: Some(l),
            ci_adaptive: false,
        }
    }

    /// Parses a method token: `hd`, `hda`, `hhd`, `hhda`, `ci[:L]`,
    /// `hyperci[:L]`. L defaults to 1 where applicable.
    pub fn parse(token: &str) -> Result<Strategy> {
        let (name, l) = match token.split_once(':') {
            Some((name, l_str)) => {
                let l: usize = l_str
                    .parse()
                    .map_err(|_| Error::InvalidStrategy(token.to_string()))?;
                if l < 1 {
                    return Err(Error::InvalidRadius(l));
                }
                (name, Some(l))
            }
            None => (token, None),
        };
        let strategy = match name {
            "hd" => Strategy::hd(),
            "hda" => Strategy::hda(),
            "hhd" => Strategy::hhd(),
            "hhda" => Strategy::hhda(),
            "ci" => Strategy::ci(l.unwrap_or(1)),
            "hyperci" => Strategy::hyper_ci(l.unwrap_or(1)),
            _ => return Err(Error::InvalidStrategy(token.to_string())),
        };
        if l.is_some() && !matches!(name, "ci" | "hyperci") {
            return Err(Error::InvalidStrategy(format!(
                "{token}: L applies only to ci and hyperci"
            )));
        }
        Ok(strategy)
    }

    pub fn is_adaptive(&self) -> bool {
        match self.kind {
            StrategyKind::Hda | StrategyKind::Hhda | StrategyKind::HyperCi => true,
            StrategyKind::Ci => self.ci_adaptive,
            StrategyKind::Hd | StrategyKind::Hhd => false,
        }
    }

    pub fn descriptor(&self) -> String {
        match (self.kind, self.l) {
            (StrategyKind::Hd, _) => "hd".to_string(),
            (StrategyKind::Hda, _) => "hda".to_string(),
            (StrategyKind::Hhd, _) => "hhd".to_string(),
            (StrategyKind::Hhda, _) => "hhda".to_string(),
            (StrategyKind::Ci, l) => format!("ci:{}", l.unwrap_or(1)),
            (StrategyKind::HyperCi, l) => format!("hyperci:{}", l.unwrap_or(1)),
        }
    }

    pub fn score(&self, h: &Hypergraph) -> Result<crate::centrality::CentralityScores> {
        match self.kind {
            StrategyKind::Hd | StrategyKind::Hda => score_hd(h),
            StrategyKind::Hhd | StrategyKind::Hhda => score_hhd(h),
            StrategyKind::Ci => score_ci(h, self.l.unwrap_or(1)),
            StrategyKind::HyperCi => score_hyper_ci(h, self.l.unwrap_or(1)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StopCondition {
    /// Remove every node.
    All,
    /// Stop once the removed fraction of original nodes reaches the value.
    Fraction(f64),
    /// Stop once the normalized connectivity ratio drops below the value.
    SigmaBelow(f64),
}

impl StopCondition {
    pub fn descriptor(&self) -> String {
        match self {
            StopCondition::All => "all".to_string(),
            StopCondition::Fraction(f) => format!("frac={f}"),
            StopCondition::SigmaBelow(t) => format!("sigma={t}"),
        }
    }
}

/// σ normalization used for trajectory ratios and ANC.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMode {
    Remaining,
    Original,
}

impl NormMode {
    pub fn name(&self) -> &'static str {
        match self {
            NormMode::Remaining => "remaining",
            NormMode::Original => "original",
        }
    }
}

/// Removal protocol parameters shared by all strategies in one experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Protocol {
    pub batch_fraction: f64,
    pub stop: StopCondition,
    pub norm: NormMode,
    /// Rescore after every single removal instead of once per batch.
    pub per_node: bool,
}

impl Default for Protocol {
    fn default() -> Protocol {
        Protocol {
            batch_fraction: 0.01,
            stop: StopCondition::All,
            norm: NormMode::Remaining,
            per_node: false,
        }
    }
}

/// One removal step: the nodes taken out (original labels), the cumulative
/// removed fraction, σ after the batch in both normalizations, and the
/// normalized ratio in the run's norm mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Batch {
    pub removed: Vec<String>,
    pub frac_removed: f64,
    pub sigma_remaining: f64,
    pub sigma_original: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub strategy: String,
    pub adaptive: bool,
    pub per_node: bool,
    pub batch_fraction: f64,
    pub stop: String,
    pub norm: NormMode,
    pub initial_nodes: usize,
    pub initial_sigma: f64,
    pub batches: Vec<Batch>,
    pub anc: f64,
}

fn validate_protocol(protocol: &Protocol) -> Result<()> {
    if !(protocol.batch_fraction > 0.0 && protocol.batch_fraction <= 1.0) {
        return Err(Error::InvalidBatchFraction(protocol.batch_fraction));
    }
    match protocol.stop {
        StopCondition::Fraction(f) if !(f > 0.0 && f <= 1.0) => {
            Err(Error::InvalidStopThreshold(f))
        }
        StopCondition::SigmaBelow(t) if !(0.0..=1.0).contains(&t) => {
            Err(Error::InvalidStopThreshold(t))
        }
        _ => Ok(()),
    }
}

/// Runs the removal loop: score, take the top batch, remove, record σ, until
/// the stop condition. The batch size is fixed from the original node count.
pub fn dismantle(h: &Hypergraph, strategy: &Strategy, protocol: &Protocol) -> Result<Trajectory> {
    validate_protocol(protocol)?;
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    let n0 = h.node_count();
    let batch_size = ((protocol.batch_fraction * n0 as f64).floor() as usize).max(1);
    let sigma0 = h.connectivity(Normalization::Remaining)?;
    if sigma0 <= 0.0 {
        return Err(Error::ZeroInitialConnectivity);
    }

    // static strategies fix the removal order from the original scores
    let static_order: Option<Vec<String>> = if strategy.is_adaptive() {
        None
    } else {
        let scores = strategy.score(h)?;
        Some(
            rank(&scores)
                .into_iter()
                .map(|v| h.label(v).to_string())
                .collect(),
        )
    };

    let mut current = h.clone();
    let mut batches: Vec<Batch> = Vec::new();
    let mut removed_total = 0usize;

    while !current.is_empty() {
        let take = batch_size.min(current.node_count());
        let removed_labels = match &static_order {
            Some(order) => {
                let labels: Vec<String> = order[removed_total..removed_total + take].to_vec();
                let victims: BTreeSet<NodeId> = labels
                    .iter()
                    .map(|l| {
                        current
                            .node_by_label(l)
                            .expect("static order only names live nodes")
                    })
                    .collect();
                current = current.remove_nodes(&victims)?;
                labels
            }
            None if protocol.per_node => {
                let mut labels = Vec::with_capacity(take);
                for _ in 0..take {
                    let scores = strategy.score(&current)?;
                    let top = rank(&scores)[0];
                    labels.push(current.label(top).to_string());
                    current = current.remove_nodes(&BTreeSet::from([top]))?;
                }
                labels
            }
            None => {
                let scores = strategy.score(&current)?;
                let order: Vec<NodeId> = rank(&scores).into_iter().take(take).collect();
                let labels = order.iter().map(|&v| current.label(v).to_string()).collect();
                let victims: BTreeSet<NodeId> = order.into_iter().collect();
                current = current.remove_nodes(&victims)?;
                labels
            }
        };

        removed_total += take;
        let sigma_remaining = current.connectivity(Normalization::Remaining)?;
        let sigma_original = if current.is_empty() {
            0.0
        } else {
            current.connectivity(Normalization::Original(n0))?
        };
        let sigma = match protocol.norm {
            NormMode::Remaining => sigma_remaining,
            NormMode::Original => sigma_original,
        };
        batches.push(Batch {
            removed: removed_labels,
            frac_removed: removed_total as f64 / n0 as f64,
            sigma_remaining,
            sigma_original,
            ratio: sigma / sigma0,
        });

        match protocol.stop {
            StopCondition::All => {}
            StopCondition::Fraction(f) => {
                if removed_total as f64 / n0 as f64 >= f {
                    break;
                }
            }
            StopCondition::SigmaBelow(t) => {
                if sigma / sigma0 < t {
                    break;
                }
            }
        }
    }

    let mut trajectory = Trajectory {
        strategy: strategy.descriptor(),
        adaptive: strategy.is_adaptive(),
        per_node: protocol.per_node,
        batch_fraction: protocol.batch_fraction,
        stop: protocol.stop.descriptor(),
        norm: protocol.norm,
        initial_nodes: n0,
        initial_sigma: sigma0,
        batches,
        anc: 0.0,
    };
    trajectory.anc = anc(&trajectory)?;
    Ok(trajectory)
}

/// Accumulated normalized connectivity: the mean over every removed node of
/// the post-removal σ ratio. Each node inside a batch is attributed the
/// post-batch σ.
pub fn anc(t: &Trajectory) -> Result<f64> {
    let total: usize = t.batches.iter().map(|b| b.removed.len()).sum();
    if total == 0 {
        return Err(Error::EmptyTrajectory);
    }
    let weighted: f64 = t
        .batches
        .iter()
        .map(|b| b.removed.len() as f64 * b.ratio)
        .sum();
    Ok(weighted / total as f64)
}

/// Runs every strategy under the same protocol and returns one
/// (descriptor, ANC) row per strategy.
pub fn compare(
    h: &Hypergraph,
    strategies: &[Strategy],
    protocol: &Protocol,
) -> Result<Vec<(String, f64)>> {
    strategies
        .iter()
        .map(|s| Ok((s.descriptor(), dismantle(h, s, protocol)?.anc)))
        .collect()
}

/// One dismantle+ANC run per radius for CI or HyperCI.
pub fn l_sweep(
    h: &Hypergraph,
    kind: ScoreKind,
    radii: &[usize],
    protocol: &Protocol,
) -> Result<Vec<(usize, f64)>> {
    if radii.is_empty() {
        return Err(Error::InvalidStrategy("empty L list".to_string()));
    }
    radii
        .iter()
        .map(|&l| {
            let strategy = match kind {
                ScoreKind::Ci => Strategy::ci(l),
                ScoreKind::HyperCi => Strategy::hyper_ci(l),
                other => {
                    return Err(Error::InvalidStrategy(format!(
                        "L sweep needs ci or hyperci, got {}",
                        other.name()
                    )))
                }
            };
            Ok((l, dismantle(h, &strategy, protocol)?.anc))
        })
        .collect()
}
