//! Small graphs used by tests, examples and the CLI.

use std::collections::BTreeSet;

use crate::plane_graph::{Benzenoid, PlaneGraph};

/// Hexes of the five-hexagon system whose faces `s1..s5` attach as
/// `s2-s1, s3-s2, s4-s3, s5-s2`.
pub const BRANCHED5_HEXES: [(i64, i64); 5] = [(0, 0), (0, 1), (1, 1), (2, 0), (-1, 2)];

pub fn benzenoid(hexes: &[(i64, i64)]) -> Benzenoid {
    Benzenoid::from_hexes(hexes).expect("fixture hexes form a benzenoid")
}

pub fn hexagon() -> PlaneGraph {
    benzenoid(&[(0, 0)]).graph
}

pub fn branched5() -> Benzenoid {
    benzenoid(&BRANCHED5_HEXES)
}

pub fn naphthalene() -> Benzenoid {
    benzenoid(&[(0, 0), (1, 0)])
}

pub fn pyrene() -> Benzenoid {
    benzenoid(&[(0, 0), (1, 0), (0, 1), (1, 1)])
}

pub fn two_hexagons() -> PlaneGraph {
    benzenoid(&[(0, 0), (3, 0)]).graph
}

/// The five-hexagon system plus a disjoint hexagon (face `s6`).
pub fn branched5_plus_hexagon() -> PlaneGraph {
    let mut hexes = BRANCHED5_HEXES.to_vec();
    hexes.push((6, 0));
    benzenoid(&hexes).graph
}

fn ring(radius: f64, first_id: i64) -> Vec<(i64, f64, f64)> {
    (0..6)
        .map(|k| {
            let t = std::f64::consts::PI / 3.0 * k as f64;
            (first_id + k, radius * t.cos(), radius * t.sin())
        })
        .collect()
}

fn cycle_edges(first_id: i64) -> Vec<(i64, i64)> {
    (0..6).map(|k| (first_id + k, first_id + (k + 1) % 6)).collect()
}

/// A hexagon with a path of length 2 hanging off vertex 0. The first
/// pendant edge lies in no perfect matching.
pub fn hexagon_with_pendant() -> PlaneGraph {
    let mut v = ring(1.0, 0);
    v.push((6, 2.0, 0.0));
    v.push((7, 3.0, 0.0));
    let mut e = cycle_edges(0);
    e.push((0, 6));
    e.push((6, 7));
    PlaneGraph::from_coordinates(&v, &e).expect("valid fixture")
}

/// Two concentric hexagons joined by two spokes from white inner vertices.
/// Both spokes are forbidden and dropping them merges two faces into an
/// annulus, so the graph is not weakly elementary.
pub fn nested_hexagons() -> PlaneGraph {
    let mut v = ring(1.0, 0);
    v.extend(ring(3.0, 6));
    let mut e = cycle_edges(0);
    e.extend(cycle_edges(6));
    e.push((0, 6));
    e.push((2, 8));
    PlaneGraph::from_coordinates(&v, &e).expect("valid fixture")
}

const NEIGHBOURS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

fn canonical(hexes: &BTreeSet<(i64, i64)>) -> Vec<(i64, i64)> {
    let mut best: Option<Vec<(i64, i64)>> = None;
    let mut cur: Vec<(i64, i64)> = hexes.iter().copied().collect();
    for reflect in [false, true] {
        for _ in 0..6 {
            let mut v: Vec<(i64, i64)> = cur.iter().map(|&(q, r)| if reflect { (r, q) } else { (q, r) }).collect();
            v.sort();
            let (q0, r0) = v[0];
            let v: Vec<(i64, i64)> = v.iter().map(|&(q, r)| (q - q0, r - r0)).collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
            cur = cur.iter().map(|&(q, r)| (-r, q + r)).collect();
        }
    }
    best.unwrap()
}

fn adjacent(a: (i64, i64), b: (i64, i64)) -> bool {
    NEIGHBOURS.contains(&(b.0 - a.0, b.1 - a.1))
}

/// No vertex is shared by three hexagons.
fn catacondensed(hexes: &BTreeSet<(i64, i64)>) -> bool {
    hexes.iter().all(|&h| {
        let around: Vec<(i64, i64)> = hexes.iter().copied().filter(|&a| adjacent(h, a)).collect();
        around.iter().all(|&a| around.iter().all(|&b| !adjacent(a, b)))
    })
}

/// Every catacondensed benzenoid with at most `max_hexes` hexagons, one per
/// lattice symmetry class, in order of size then canonical hex list.
pub fn catacondensed_upto(max_hexes: usize) -> Vec<Benzenoid> {
    let mut layer: BTreeSet<Vec<(i64, i64)>> = BTreeSet::from([vec![(0, 0)]]);
    let mut out = Vec::new();
    for size in 1..=max_hexes {
        out.extend(layer.iter().map(|h| benzenoid(h)));
        if size == max_hexes {
            break;
        }
        let mut next = BTreeSet::new();
        for hexes in &layer {
            let set: BTreeSet<(i64, i64)> = hexes.iter().copied().collect();
            for &(q, r) in hexes {
                for (dq, dr) in NEIGHBOURS {
                    let h = (q + dq, r + dr);
                    if set.contains(&h) {
                        continue;
                    }
                    let mut grown = set.clone();
                    grown.insert(h);
                    if catacondensed(&grown) {
                        next.insert(canonical(&grown));
                    }
                }
            }
        }
        layer = next;
    }
    out
}

/// The catacondensed corpus restricted to peripherally 2-colourable graphs
/// with at least two faces.
pub fn p2c_corpus(max_hexes: usize) -> Vec<Benzenoid> {
    catacondensed_upto(max_hexes)
        .into_iter()
        .filter(|b| b.hexes.len() >= 2 && b.graph.is_peripherally_two_colorable().peripherally_two_colorable)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        let sizes: Vec<usize> = (1..=5)
            .map(|n| catacondensed_upto(n).iter().filter(|b| b.hexes.len() == n).count())
            .collect();
        assert_eq!(sizes, vec![1, 1, 2, 5, 12]);
    }

    #[test]
    fn fixture_shapes() {
        let g = hexagon_with_pendant();
        assert_eq!((g.vertex_count(), g.edge_count(), g.finite_face_count()), (8, 8, 1));
        let g = nested_hexagons();
        assert_eq!((g.vertex_count(), g.edge_count(), g.finite_face_count()), (12, 14, 3));
        let g = branched5_plus_hexagon();
        assert_eq!((g.vertex_count(), g.component_count(), g.finite_face_count()), (28, 2, 6));
    }
}
