//! Unit-square geometry: node positions, the connectivity radius rule, and a
//! uniform-grid index for fixed-radius neighbor queries.

use crate::{Error, Result};
use rand::Rng;

/// A position on the closed unit square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
        Point { x, y }
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.dist2(other).sqrt()
    }
}

/// Connectivity radius r(n) = sqrt(c0·ln(n)/n).
///
/// Natural logarithm; with the default c0 = 8/π this is the radius at which a
/// random geometric graph on the unit square is connected with high
/// probability.
pub fn transmission_radius(n: usize, c0: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "node count must be at least 2, got {n}"
        )));
    }
    if !(c0 > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "connectivity constant must be positive, got {c0}"
        )));
    }
    Ok((c0 * (n as f64).ln() / n as f64).sqrt())
}

/// Default connectivity constant, 8/π.
pub const DEFAULT_C0: f64 = 8.0 / std::f64::consts::PI;

/// Static network parameters: node count, connectivity constant, and the
/// transmission radius (derived from `n` and `c0` unless overridden).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkConfig {
    pub n: usize,
    pub c0: f64,
    pub r: f64,
    pub master_seed: u64,
}

impl NetworkConfig {
    /// Config with the derived radius and default c0 = 8/π.
    pub fn new(n: usize, master_seed: u64) -> Result<Self> {
        Self::with_c0(n, DEFAULT_C0, master_seed)
    }

    pub fn with_c0(n: usize, c0: f64, master_seed: u64) -> Result<Self> {
        let r = transmission_radius(n, c0)?;
        Self::with_radius(n, c0, r, master_seed)
    }

    /// Config with an explicit radius override.
    pub fn with_radius(n: usize, c0: f64, r: f64, master_seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("node count {n} < 2")));
        }
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "transmission radius must lie in (0, 1), got {r}"
            )));
        }
        if n as f64 * std::f64::consts::PI * r * r < 1.0 {
            return Err(Error::InvalidArgument(format!(
                "expected neighborhood degenerate: n*pi*r^2 = {} < 1",
                n as f64 * std::f64::consts::PI * r * r
            )));
        }
        Ok(NetworkConfig {
            n,
            c0,
            r,
            master_seed,
        })
    }

    /// Per-neighbor contact probability constant P(r) = 1/(n·π·r²), the
    /// reciprocal expected degree used throughout conductance arithmetic.
    pub fn contact_constant(&self) -> f64 {
        1.0 / (self.n as f64 * std::f64::consts::PI * self.r * self.r)
    }
}

/// Draw a point uniformly on the unit square. Consumes exactly two draws from
/// the stream (x first, then y).
pub fn uniform_point<R: Rng>(rng: &mut R) -> Point {
    let x = rng.gen::<f64>();
    let y = rng.gen::<f64>();
    Point { x, y }
}

/// Probability that two independent uniform points on the unit square lie
/// within distance `r`: πr² − (8/3)r³ + r⁴/2 for 0 ≤ r ≤ 1.
///
/// This is the hard-boundary counterpart of the idealized πr² contact area;
/// the cubic and quartic terms are the edge deficit.
pub fn uniform_pair_contact_probability(r: f64) -> f64 {
    std::f64::consts::PI * r * r - 8.0 / 3.0 * r.powi(3) + 0.5 * r.powi(4)
}

/// Uniform-grid index over node positions with cell size equal to the query
/// radius, so a neighbor query inspects at most the 3×3 surrounding cells.
///
/// Immutable after build; rebuilding from identical positions yields
/// identical query results (cells are filled in ascending node id).
#[derive(Debug, Clone)]
pub struct SpatialIndex {
    positions: Vec<Point>,
    radius: f64,
    cells_per_side: usize,
    cells: Vec<Vec<u32>>,
}

impl SpatialIndex {
    pub fn build(positions: &[Point], radius: f64) -> Self {
        assert!(radius > 0.0, "index radius must be positive");
        let cells_per_side = (1.0 / radius).ceil().max(1.0) as usize;
        let coord = |v: f64| -> usize {
            let c = (v / radius).floor() as isize;
            c.clamp(0, cells_per_side as isize - 1) as usize
        };
        let mut cells = vec![Vec::new(); cells_per_side * cells_per_side];
        for (id, p) in positions.iter().enumerate() {
            cells[coord(p.x) * cells_per_side + coord(p.y)].push(id as u32);
        }
        SpatialIndex {
            positions: positions.to_vec(),
            radius,
            cells_per_side,
            cells,
        }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn position(&self, i: usize) -> Point {
        self.positions[i]
    }

    fn cell_coord(&self, v: f64) -> usize {
        let c = (v / self.radius).floor() as isize;
        c.clamp(0, self.cells_per_side as isize - 1) as usize
    }

    fn cell_of(&self, p: &Point) -> usize {
        self.cell_coord(p.x) * self.cells_per_side + self.cell_coord(p.y)
    }

    /// All node ids strictly within the index radius of node `i`, excluding
    /// `i` itself. Order is deterministic for a fixed build.
    pub fn neighbors(&self, i: usize) -> Result<Vec<usize>> {
        if i >= self.positions.len() {
            return Err(Error::UnknownNode(i));
        }
        let mut out = Vec::new();
        self.neighbors_into(i, &mut out);
        Ok(out)
    }

    /// Allocation-free variant of [`neighbors`](Self::neighbors) for hot loops.
    pub fn neighbors_into(&self, i: usize, out: &mut Vec<usize>) {
        out.clear();
        let p = self.positions[i];
        let r2 = self.radius * self.radius;
        let cx = self.cell_coord(p.x) as isize;
        let cy = self.cell_coord(p.y) as isize;
        let side = self.cells_per_side as isize;
        for dx in -1..=1 {
            let x = cx + dx;
            if x < 0 || x >= side {
                continue;
            }
            for dy in -1..=1 {
                let y = cy + dy;
                if y < 0 || y >= side {
                    continue;
                }
                for &j in &self.cells[(x * side + y) as usize] {
                    let j = j as usize;
                    if j != i && self.positions[j].dist2(&p) < r2 {
                        out.push(j);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::rng_from;
    use proptest::prelude::*;

    fn brute_force_neighbors(positions: &[Point], r: f64, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..positions.len())
            .filter(|&j| j != i && positions[j].dist2(&positions[i]) < r * r)
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn radius_matches_independent_evaluation() {
        // Frozen from high-precision evaluation of sqrt(c0·ln n / n).
        let r1000 = transmission_radius(1000, DEFAULT_C0).unwrap();
        assert!((r1000 - 0.1326290).abs() < 1e-6, "r(1000) = {r1000}");
        let r4000 = transmission_radius(4000, DEFAULT_C0).unwrap();
        assert!((r4000 - 0.0726647).abs() < 1e-6, "r(4000) = {r4000}");
    }

    #[test]
    fn radius_rejects_bad_arguments() {
        assert!(transmission_radius(1, 1.0).is_err());
        assert!(transmission_radius(100, 0.0).is_err());
        assert!(transmission_radius(100, -2.0).is_err());
    }

    #[test]
    fn radius_strictly_decreasing_in_n() {
        let mut prev = f64::INFINITY;
        for n in [4, 8, 16, 64, 256, 1024, 4096, 65536] {
            let r = transmission_radius(n, DEFAULT_C0).unwrap();
            assert!(r < prev, "r({n}) = {r} not below {prev}");
            prev = r;
        }
    }

    #[test]
    fn config_validates_invariants() {
        assert!(NetworkConfig::new(1000, 0).is_ok());
        assert!(NetworkConfig::new(1, 0).is_err());
        assert!(NetworkConfig::with_radius(1000, 1.0, 0.0, 0).is_err());
        assert!(NetworkConfig::with_radius(1000, 1.0, 1.5, 0).is_err());
        // n*pi*r^2 < 1
        assert!(NetworkConfig::with_radius(10, 1.0, 0.01, 0).is_err());
    }

    #[test]
    fn strict_inequality_at_exact_radius() {
        // 0.25 and 0.5 are exact in f64, so the distance is exactly r.
        let r = 0.25;
        let positions = vec![Point::new(0.25, 0.5), Point::new(0.5, 0.5)];
        let index = SpatialIndex::build(&positions, r);
        assert!(index.neighbors(0).unwrap().is_empty());
        assert!(index.neighbors(1).unwrap().is_empty());

        let closer = vec![Point::new(0.25, 0.5), Point::new(0.25 + r / 2.0, 0.5)];
        let index = SpatialIndex::build(&closer, r);
        assert_eq!(index.neighbors(0).unwrap(), vec![1]);
        assert_eq!(index.neighbors(1).unwrap(), vec![0]);
    }

    #[test]
    fn five_nodes_on_a_line() {
        let r = 0.1;
        let spacing = 0.9 * r;
        let positions: Vec<Point> = (0..5)
            .map(|i| Point::new(0.2 + i as f64 * spacing, 0.5))
            .collect();
        let index = SpatialIndex::build(&positions, r);
        let mut nb = index.neighbors(1).unwrap();
        nb.sort_unstable();
        assert_eq!(nb, vec![0, 2]);
        assert_eq!(nb, brute_force_neighbors(&positions, r, 1));
    }

    #[test]
    fn unknown_node_is_an_error() {
        let index = SpatialIndex::build(&[Point::new(0.5, 0.5)], 0.1);
        assert_eq!(index.neighbors(3), Err(Error::UnknownNode(3)));
    }

    #[test]
    fn uniform_point_consumes_two_draws_and_replays() {
        let mut a = rng_from(99);
        let p1 = uniform_point(&mut a);
        let p2 = uniform_point(&mut a);
        let mut b = rng_from(99);
        let x1: f64 = b.gen();
        let y1: f64 = b.gen();
        let x2: f64 = b.gen();
        let y2: f64 = b.gen();
        assert_eq!((p1.x, p1.y, p2.x, p2.y), (x1, y1, x2, y2));
    }

    #[test]
    fn uniform_point_statistics() {
        let mut rng = rng_from(7);
        let samples: Vec<Point> = (0..100_000).map(|_| uniform_point(&mut rng)).collect();
        let mean_x = samples.iter().map(|p| p.x).sum::<f64>() / samples.len() as f64;
        let mean_y = samples.iter().map(|p| p.y).sum::<f64>() / samples.len() as f64;
        assert!((mean_x - 0.5).abs() < 0.01, "mean x = {mean_x}");
        assert!((mean_y - 0.5).abs() < 0.01, "mean y = {mean_y}");
        let quarter = samples
            .iter()
            .filter(|p| p.x < 0.5 && p.y < 0.5)
            .count() as f64
            / samples.len() as f64;
        assert!((quarter - 0.25).abs() < 0.01, "quarter fraction = {quarter}");
    }

    proptest! {
        // Index equals the O(n^2) oracle and neighbor relation is symmetric.
        #[test]
        fn index_matches_brute_force(seed in 0u64..500, n in 2usize..200) {
            let mut rng = rng_from(seed);
            let r = transmission_radius(n, DEFAULT_C0).unwrap();
            let positions: Vec<Point> = (0..n).map(|_| uniform_point(&mut rng)).collect();
            let index = SpatialIndex::build(&positions, r);
            for i in 0..n {
                let mut got = index.neighbors(i).unwrap();
                got.sort_unstable();
                prop_assert_eq!(&got, &brute_force_neighbors(&positions, r, i));
                for &j in &got {
                    prop_assert!(index.neighbors(j).unwrap().contains(&i));
                }
            }
        }

        #[test]
        fn rebuild_is_identical(seed in 0u64..100) {
            let mut rng = rng_from(seed);
            let positions: Vec<Point> = (0..50).map(|_| uniform_point(&mut rng)).collect();
            let a = SpatialIndex::build(&positions, 0.2);
            let b = SpatialIndex::build(&positions, 0.2);
            for i in 0..positions.len() {
                prop_assert_eq!(a.neighbors(i).unwrap(), b.neighbors(i).unwrap());
            }
        }
    }
}
