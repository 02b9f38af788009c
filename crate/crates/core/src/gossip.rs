//! The move-and-gossip slot engine: per slot, apply the mobility transition,
//! rebuild the neighbor index, let every node contact one uniformly chosen
//! post-move neighbor, and track the informed set until the message reaches
//! every node (or a slot cap).
//!
//! Informedness updates are computed against the slot-start snapshot and
//! applied atomically at slot end, so a message cannot relay through a chain
//! of contacts within a single slot.

use crate::geometry::{NetworkConfig, SpatialIndex};
use crate::mobility::{init_population, step, MobilityModel, NodeState};
use crate::seeds::rng_from;
use crate::stats;
use crate::{Error, Result};
use rand::Rng;

/// Direction of message transfer in a contact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GossipMode {
    /// The contacting node hands the message over if it is informed.
    Push,
    /// The contacting node picks the message up if the contacted one is informed.
    Pull,
    /// Both directions; the default.
    PushPull,
}

impl GossipMode {
    pub fn name(&self) -> &'static str {
        match self {
            GossipMode::Push => "push",
            GossipMode::Pull => "pull",
            GossipMode::PushPull => "push-pull",
        }
    }
}

/// Gossip-engine parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GossipConfig {
    pub mode: GossipMode,
    /// Hard slot cap; runs that hit it are reported as capped, not errors.
    pub max_slots: usize,
    /// Failure tolerance for spreading-time estimation, in (0, 1).
    pub epsilon: f64,
}

impl GossipConfig {
    pub fn new(mode: GossipMode, max_slots: usize, epsilon: f64) -> Result<Self> {
        if max_slots == 0 {
            return Err(Error::InvalidArgument("max_slots must be at least 1".into()));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "epsilon must lie in (0, 1), got {epsilon}"
            )));
        }
        Ok(GossipConfig {
            mode,
            max_slots,
            epsilon,
        })
    }

    /// Default cap 50·sqrt(n), comfortably above the static-network
    /// completion times observed at the default connectivity constant.
    pub fn default_max_slots(n: usize) -> usize {
        (50.0 * (n as f64).sqrt()).ceil() as usize
    }
}

/// How the source node of a round is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceSelection {
    /// Uniformly random per round (the default; randomizing sources across
    /// rounds stands in for the worst-case-over-sources definition).
    Random,
    Fixed(usize),
}

/// Result of a single spreading run.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreadTrace {
    /// |S(t)| recorded at slot boundaries, starting with |S(0)| = 1.
    pub informed_count_per_slot: Vec<usize>,
    /// Slot at which the count first reached n, absent if the cap hit first.
    pub completion_slot: Option<usize>,
    pub source_id: usize,
    pub seed: u64,
}

impl SpreadTrace {
    pub fn capped(&self) -> bool {
        self.completion_slot.is_none()
    }
}

/// One gossip exchange: every node with at least one neighbor contacts one of
/// them uniformly at random; transfers are resolved against slot-start
/// informedness. Returns the number of newly informed nodes.
///
/// Nodes are processed in ascending id; each node with a non-empty
/// neighborhood consumes exactly one draw, isolated nodes none.
pub fn gossip_slot<R: Rng>(
    nodes: &mut [NodeState],
    index: &SpatialIndex,
    mode: GossipMode,
    rng: &mut R,
) -> usize {
    let at_start: Vec<bool> = nodes.iter().map(|s| s.informed).collect();
    let mut now: Vec<bool> = at_start.clone();
    let mut neighbors = Vec::new();
    for i in 0..nodes.len() {
        index.neighbors_into(i, &mut neighbors);
        if neighbors.is_empty() {
            continue;
        }
        let j = neighbors[rng.gen_range(0..neighbors.len())];
        match mode {
            GossipMode::Push => {
                if at_start[i] {
                    now[j] = true;
                }
            }
            GossipMode::Pull => {
                if at_start[j] {
                    now[i] = true;
                }
            }
            GossipMode::PushPull => {
                if at_start[i] {
                    now[j] = true;
                }
                if at_start[j] {
                    now[i] = true;
                }
            }
        }
    }
    let mut newly = 0;
    for (node, (&before, &after)) in nodes.iter_mut().zip(at_start.iter().zip(&now)) {
        if after && !before {
            newly += 1;
        }
        node.informed = after;
    }
    newly
}

/// Run one full spreading round: initialize the population, mark the source,
/// then iterate move → rebuild index → gossip until every node is informed or
/// the slot cap is reached.
pub fn run_spread(
    cfg: &NetworkConfig,
    model: &MobilityModel,
    gcfg: &GossipConfig,
    source: SourceSelection,
    seed: u64,
) -> Result<SpreadTrace> {
    let mut rng = rng_from(seed);
    let mut nodes = init_population(cfg, model, &mut rng)?;
    let source_id = match source {
        SourceSelection::Random => rng.gen_range(0..cfg.n),
        SourceSelection::Fixed(id) => {
            if id >= cfg.n {
                return Err(Error::UnknownNode(id));
            }
            id
        }
    };
    nodes[source_id].informed = true;

    let mut counts = vec![1usize];
    let mut informed_total = 1usize;
    let mut completion_slot = None;
    let is_static = matches!(model, MobilityModel::Static);
    let mut index = SpatialIndex::build(
        &nodes.iter().map(|s| s.position).collect::<Vec<_>>(),
        cfg.r,
    );
    for t in 1..=gcfg.max_slots {
        if !is_static {
            step(model, &mut nodes, &mut rng);
            index = SpatialIndex::build(
                &nodes.iter().map(|s| s.position).collect::<Vec<_>>(),
                cfg.r,
            );
        }
        informed_total += gossip_slot(&mut nodes, &index, gcfg.mode, &mut rng);
        counts.push(informed_total);
        if informed_total == cfg.n {
            completion_slot = Some(t);
            break;
        }
    }
    Ok(SpreadTrace {
        informed_count_per_slot: counts,
        completion_slot,
        source_id,
        seed,
    })
}

/// Spreading-time statistics over a batch of traces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadStats {
    /// Average completion slot over completed runs.
    pub mean: f64,
    /// Empirical (1−ε)-quantile of completion slots, nearest-rank rule.
    pub quantile: f64,
    /// Number of capped runs, excluded from the two statistics above.
    pub failures: usize,
}

pub fn spreading_time(traces: &[SpreadTrace], epsilon: f64) -> Result<SpreadStats> {
    if traces.is_empty() {
        return Err(Error::InvalidArgument("no traces".into()));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidArgument(format!("epsilon {epsilon}")));
    }
    let completed: Vec<f64> = traces
        .iter()
        .filter_map(|t| t.completion_slot.map(|s| s as f64))
        .collect();
    let failures = traces.len() - completed.len();
    if completed.is_empty() {
        return Err(Error::AllRunsCapped);
    }
    Ok(SpreadStats {
        mean: stats::mean(&completed),
        quantile: stats::quantile_nearest_rank(&completed, 1.0 - epsilon)?,
        failures,
    })
}
