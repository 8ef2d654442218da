use std::collections::{BTreeMap, BTreeSet};

use super::{FaceId, PlaneGraph};
use crate::error::{Error, Result};

/// Corner offsets of a hexagon around its lattice centre, counterclockwise
/// starting from the bottom corner (lattice units: x in √3/2, y in 1/2).
const CORNERS: [(i64, i64); 6] = [(0, -2), (1, -1), (1, 1), (0, 2), (-1, 1), (-1, -1)];

/// A hexagonal system built from axial hex coordinates. Finite face `k` of
/// `graph` is hexagon `hexes[k]`.
#[derive(Clone, Debug)]
pub struct Benzenoid {
    pub hexes: Vec<(i64, i64)>,
    pub graph: PlaneGraph,
}

fn centre(q: i64, r: i64) -> (i64, i64) {
    (2 * q + r, -3 * r)
}

impl Benzenoid {
    pub fn from_hexes(hexes: &[(i64, i64)]) -> Result<Benzenoid> {
        if hexes.is_empty() {
            return Err(Error::InvalidInput("no hexagons".into()));
        }
        let distinct: BTreeSet<_> = hexes.iter().collect();
        if distinct.len() != hexes.len() {
            return Err(Error::InvalidInput("repeated hexagon".into()));
        }
        let corner_sets: Vec<Vec<(i64, i64)>> = hexes
            .iter()
            .map(|&(q, r)| {
                let (cx, cy) = centre(q, r);
                CORNERS.iter().map(|&(dx, dy)| (cx + dx, cy + dy)).collect()
            })
            .collect();
        let mut index: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for p in corner_sets.iter().flatten() {
            index.insert(*p, 0);
        }
        for (k, v) in index.values_mut().enumerate() {
            *v = k as i64;
        }
        let s3 = 3f64.sqrt() / 2.0;
        let vertices: Vec<(i64, f64, f64)> = index
            .iter()
            .map(|(&(x, y), &id)| (id, x as f64 * s3, y as f64 / 2.0))
            .collect();
        let mut edges = BTreeSet::new();
        for cs in &corner_sets {
            for i in 0..6 {
                let a = index[&cs[i]];
                let b = index[&cs[(i + 1) % 6]];
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let edges: Vec<(i64, i64)> = edges.into_iter().collect();
        let g = PlaneGraph::from_coordinates(&vertices, &edges)?;
        let mut order = Vec::with_capacity(hexes.len());
        for cs in &corner_sets {
            let vs: Vec<usize> = cs.iter().map(|p| g.index_of(index[p]).unwrap()).collect();
            let f = g.face_with_vertices(&vs).ok_or_else(|| {
                Error::InvalidInput("hexagons enclose a hole; not a simply connected system".into())
            })?;
            order.push(f);
        }
        if order.len() != g.finite_face_count() {
            return Err(Error::InvalidInput("hexagons enclose a hole".into()));
        }
        let graph = g.with_face_order(&order)?;
        Ok(Benzenoid {
            hexes: hexes.to_vec(),
            graph,
        })
    }

    pub fn face_of_hex(&self, k: usize) -> FaceId {
        FaceId(k)
    }
}

/// Parses `q r` lines; blank lines and `#` comments are skipped.
pub fn parse_benzenoid(text: &str) -> Result<Benzenoid> {
    let mut hexes = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::InvalidInput(format!("line {}: expected `q r`", lineno + 1));
        if parts.len() != 2 {
            return Err(bad());
        }
        let q = parts[0].parse::<i64>().map_err(|_| bad())?;
        let r = parts[1].parse::<i64>().map_err(|_| bad())?;
        hexes.push((q, r));
    }
    Benzenoid::from_hexes(&hexes)
}
