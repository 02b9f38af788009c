//! The mobility model catalog: per-slot position transitions for static,
//! fully random, partially random, velocity-constrained, one-dimensional
//! path, and two-dimensional home-disk kinematics.
//!
//! All transitions keep nodes on the closed unit square. Constrained models
//! (velocity, home-disk) sample uniformly on the disk intersected with the
//! square, so positions never leave the domain and per-step constraints hold
//! by construction. Nodes are processed in ascending id with documented draw
//! counts, which makes every trajectory replayable from its seed.

use crate::geometry::{uniform_point, NetworkConfig, Point};
use crate::{Error, Result};
use rand::Rng;

/// Position-transition model applied in the "move" half of each slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MobilityModel {
    /// No movement; degenerates to a static random geometric graph.
    Static,
    /// Positions i.i.d. uniform on the unit square every slot.
    FullyRandom,
    /// A fixed uniformly chosen subset of `k` nodes is fully random; the
    /// remaining n−k never move.
    PartiallyRandom { k: usize },
    /// Each node moves to a uniform point of the disk of radius `v_max`
    /// around its current position (clipped to the square).
    VelocityConstrained { v_max: f64 },
    /// `n_v` nodes ride fixed vertical paths and `n_h` fixed horizontal
    /// paths, redrawing the free coordinate uniformly every slot.
    OneDimensional { n_v: usize, n_h: usize },
    /// Each node occupies a uniform point of the disk of radius `r_c` around
    /// its fixed home point (clipped to the square).
    TwoDimensional { r_c: f64 },
}

impl MobilityModel {
    /// Check parameter bounds against a node count.
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            MobilityModel::Static | MobilityModel::FullyRandom => Ok(()),
            MobilityModel::PartiallyRandom { k } => {
                if k <= n {
                    Ok(())
                } else {
                    Err(Error::InvalidArgument(format!(
                        "mobile-node count k={k} exceeds n={n}"
                    )))
                }
            }
            MobilityModel::VelocityConstrained { v_max } => {
                if v_max > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidArgument(format!(
                        "velocity bound must be positive, got {v_max}"
                    )))
                }
            }
            MobilityModel::OneDimensional { n_v, n_h } => {
                if n_v + n_h == n {
                    Ok(())
                } else {
                    Err(Error::InvalidArgument(format!(
                        "path-node counts must satisfy n_v + n_h = n, got {n_v} + {n_h} != {n}"
                    )))
                }
            }
            MobilityModel::TwoDimensional { r_c } => {
                if r_c > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidArgument(format!(
                        "mobility capacity must be positive, got {r_c}"
                    )))
                }
            }
        }
    }

    /// Stable machine-readable name, also accepted by the config parser.
    pub fn name(&self) -> &'static str {
        match self {
            MobilityModel::Static => "static",
            MobilityModel::FullyRandom => "fully-random",
            MobilityModel::PartiallyRandom { .. } => "partially-random",
            MobilityModel::VelocityConstrained { .. } => "velocity",
            MobilityModel::OneDimensional { .. } => "one-dim",
            MobilityModel::TwoDimensional { .. } => "two-dim",
        }
    }

    /// Parameter list as `key=value` pairs joined by `;` (empty for the
    /// parameterless models).
    pub fn params_string(&self) -> String {
        match *self {
            MobilityModel::Static | MobilityModel::FullyRandom => String::new(),
            MobilityModel::PartiallyRandom { k } => format!("k={k}"),
            MobilityModel::VelocityConstrained { v_max } => format!("vmax={v_max}"),
            MobilityModel::OneDimensional { n_v, n_h } => format!("nv={n_v};nh={n_h}"),
            MobilityModel::TwoDimensional { r_c } => format!("rc={r_c}"),
        }
    }
}

/// Kinematic class a node is assigned at initialization; never changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeClass {
    Static,
    Mobile,
    VPath,
    HPath,
}

/// Per-node simulation state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeState {
    pub position: Point,
    pub informed: bool,
    pub cls: NodeClass,
    /// Home point for the home-disk model, fixed path coordinate for path
    /// nodes, initial position otherwise.
    pub anchor: Point,
}

/// Uniform sample of the disk of `radius` around `center`, intersected with
/// the unit square. Rejection from the disk's bounding box; for any center in
/// the square at least a quarter of the disk is inside, so the expected
/// number of attempts is bounded.
pub fn disk_uniform<R: Rng>(center: Point, radius: f64, rng: &mut R) -> Point {
    debug_assert!(radius > 0.0);
    let r2 = radius * radius;
    loop {
        let dx = (2.0 * rng.gen::<f64>() - 1.0) * radius;
        let dy = (2.0 * rng.gen::<f64>() - 1.0) * radius;
        if dx * dx + dy * dy > r2 {
            continue;
        }
        let x = center.x + dx;
        let y = center.y + dy;
        if (0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y) {
            return Point { x, y };
        }
    }
}

/// Build the initial population: uniform positions, then class and anchor
/// assignment according to the model.
pub fn init_population<R: Rng>(
    cfg: &NetworkConfig,
    model: &MobilityModel,
    rng: &mut R,
) -> Result<Vec<NodeState>> {
    model.validate(cfg.n)?;
    let mut nodes: Vec<NodeState> = (0..cfg.n)
        .map(|_| {
            let p = uniform_point(rng);
            NodeState {
                position: p,
                informed: false,
                cls: NodeClass::Mobile,
                anchor: p,
            }
        })
        .collect();

    match *model {
        MobilityModel::Static => {
            for node in &mut nodes {
                node.cls = NodeClass::Static;
            }
        }
        MobilityModel::FullyRandom | MobilityModel::VelocityConstrained { .. } => {}
        MobilityModel::PartiallyRandom { k } => {
            for node in &mut nodes {
                node.cls = NodeClass::Static;
            }
            // Partial Fisher-Yates over the id list; the first k entries are
            // the mobile subset, fixed for the lifetime of the population.
            let mut ids: Vec<usize> = (0..cfg.n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..cfg.n);
                ids.swap(i, j);
                nodes[ids[i]].cls = NodeClass::Mobile;
            }
        }
        MobilityModel::OneDimensional { n_v, .. } => {
            for (id, node) in nodes.iter_mut().enumerate() {
                node.cls = if id < n_v {
                    NodeClass::VPath
                } else {
                    NodeClass::HPath
                };
            }
        }
        MobilityModel::TwoDimensional { r_c } => {
            for node in &mut nodes {
                node.position = disk_uniform(node.anchor, r_c, rng);
            }
        }
    }
    Ok(nodes)
}

/// Apply one mobility transition in place, ascending node id.
pub fn step<R: Rng>(model: &MobilityModel, nodes: &mut [NodeState], rng: &mut R) {
    match *model {
        MobilityModel::Static => {}
        MobilityModel::FullyRandom => {
            for node in nodes.iter_mut() {
                node.position = uniform_point(rng);
            }
        }
        MobilityModel::PartiallyRandom { .. } => {
            for node in nodes.iter_mut() {
                if node.cls == NodeClass::Mobile {
                    node.position = uniform_point(rng);
                }
            }
        }
        MobilityModel::VelocityConstrained { v_max } => {
            for node in nodes.iter_mut() {
                node.position = disk_uniform(node.position, v_max, rng);
            }
        }
        MobilityModel::OneDimensional { .. } => {
            for node in nodes.iter_mut() {
                match node.cls {
                    NodeClass::VPath => node.position.y = rng.gen::<f64>(),
                    NodeClass::HPath => node.position.x = rng.gen::<f64>(),
                    _ => unreachable!("one-dimensional populations hold only path nodes"),
                }
            }
        }
        MobilityModel::TwoDimensional { r_c } => {
            for node in nodes.iter_mut() {
                node.position = disk_uniform(node.anchor, r_c, rng);
            }
        }
    }
}
