//! Resonance graphs with face-labelled edges.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matchings::MatchingFamily;
use crate::plane_graph::{EdgeSet, FaceId, PlaneGraph, Restriction, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ResonanceEdge {
    pub a: usize,
    pub b: usize,
    pub face: FaceId,
}

/// Vertices are perfect matchings (vertex `i` is `matchings[i]`); an edge
/// joins two matchings whose symmetric difference is one finite facial
/// cycle and carries that face.
#[derive(Clone, Debug)]
pub struct ResonanceGraph {
    pub matchings: Vec<EdgeSet>,
    pub edges: Vec<ResonanceEdge>,
}

pub fn build_resonance(g: &PlaneGraph, family: &MatchingFamily) -> ResonanceGraph {
    let face_of: HashMap<EdgeSet, FaceId> = g
        .finite_faces()
        .iter()
        .map(|f| (f.edges.clone(), f.id))
        .collect();
    let longest = g
        .finite_faces()
        .iter()
        .map(|f| f.edges.count_ones(..))
        .max()
        .unwrap_or(0);
    let ms: Vec<&EdgeSet> = family.iter().map(|m| &m.edges).collect();
    let mut edges: Vec<ResonanceEdge> = (0..ms.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let ms = &ms;
            let face_of = &face_of;
            (a + 1..ms.len()).filter_map(move |b| {
                let mut d = ms[a].clone();
                d.symmetric_difference_with(ms[b]);
                if d.count_ones(..) > longest {
                    return None;
                }
                face_of.get(&d).map(|&face| ResonanceEdge { a, b, face })
            })
        })
        .collect();
    edges.sort();
    ResonanceGraph {
        matchings: ms.into_iter().cloned().collect(),
        edges,
    }
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize)]
struct JsonEdge {
    a: usize,
    b: usize,
    face: String,
}

#[derive(Serialize)]
struct JsonResonance {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

impl ResonanceGraph {
    pub fn vertex_count(&self) -> usize {
        self.matchings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.a, e.b)).collect()
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    pub fn faces_used(&self) -> BTreeSet<FaceId> {
        self.edges.iter().map(|e| e.face).collect()
    }

    /// Vertex sets of the connected components, smallest vertex first.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in &self.edges {
            uf.union(e.a, e.b);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        let mut first: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.vertex_count() {
            let r = uf.find(v);
            let key = *first.entry(r).or_insert(v);
            groups.entry(key).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Vertex index of the matching with this edge set.
    pub fn vertex_of(&self, m: &EdgeSet) -> Option<usize> {
        self.matchings.iter().position(|x| x == m)
    }

    /// Edges as unordered matching pairs with their face, independent of
    /// vertex numbering. Two resonance graphs over the same plane graph are
    /// equal iff these sets (and the vertex sets) agree.
    pub fn labelled_edge_set(&self) -> BTreeSet<(Vec<usize>, Vec<usize>, FaceId)> {
        self.edges
            .iter()
            .map(|e| {
                let x: Vec<usize> = self.matchings[e.a].ones().collect();
                let y: Vec<usize> = self.matchings[e.b].ones().collect();
                if x <= y {
                    (x, y, e.face)
                } else {
                    (y, x, e.face)
                }
            })
            .collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vec<usize>> {
        self.matchings.iter().map(|m| m.ones().collect()).collect()
    }

    pub fn same_as(&self, other: &ResonanceGraph) -> bool {
        self.vertex_set() == other.vertex_set() && self.labelled_edge_set() == other.labelled_edge_set()
    }

    /// Re-expresses a resonance graph of a subgraph in the parent's edge and
    /// face numbering.
    pub fn lift(&self, restriction: &Restriction) -> Result<ResonanceGraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let face = restriction.parent_face(e.face).ok_or_else(|| {
                Error::InvalidInput(format!("face {} of the part is not a face of the parent", e.face))
            })?;
            edges.push(ResonanceEdge { face, ..*e });
        }
        Ok(ResonanceGraph {
            matchings: self.matchings.iter().map(|m| restriction.lift_edges(m)).collect(),
            edges,
        })
    }

    /// `label(v)` names vertices when given; edges carry `face="s<i>"`.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("graph resonance {\n");
        for v in 0..self.vertex_count() {
            match labels {
                Some(l) => writeln!(s, "  m{v} [label=\"{}\"];", l[v]).unwrap(),
                None => writeln!(s, "  m{v};").unwrap(),
            }
        }
        for e in &self.edges {
            writeln!(s, "  m{} -- m{} [face=\"{}\"];", e.a, e.b, e.face).unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_value(&self, labels: Option<&[String]>) -> serde_json::Value {
        let doc = JsonResonance {
            vertices: (0..self.vertex_count())
                .map(|id| JsonVertex {
                    id,
                    label: labels.map(|l| l[id].clone()),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    a: e.a,
                    b: e.b,
                    face: e.face.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}

/// Cartesian product of resonance graphs of disjoint parts sharing one
/// edge numbering. Vertex tuples are numbered mixed-radix with the first
/// part varying slowest; a tuple's matching is the union of its parts'.
pub fn cartesian_compose(parts: &[ResonanceGraph]) -> ResonanceGraph {
    let Some(first) = parts.first() else {
        return ResonanceGraph {
            matchings: vec![EdgeSet::new()],
            edges: Vec::new(),
        };
    };
    let mut acc = first.clone();
    for p in &parts[1..] {
        acc = product2(&acc, p);
    }
    acc
}

fn product2(x: &ResonanceGraph, y: &ResonanceGraph) -> ResonanceGraph {
    let ny = y.vertex_count();
    let mut matchings = Vec::with_capacity(x.vertex_count() * ny);
    for a in &x.matchings {
        for b in &y.matchings {
            let len = a.len().max(b.len());
            let mut m = a.clone();
            m.grow(len);
            let mut bb = b.clone();
            bb.grow(len);
            m.union_with(&bb);
            matchings.push(m);
        }
    }
    let mut edges = Vec::new();
    for e in &x.edges {
        for j in 0..ny {
            edges.push(ResonanceEdge { a: e.a * ny + j, b: e.b * ny + j, face: e.face });
        }
    }
    for i in 0..x.vertex_count() {
        for e in &y.edges {
            edges.push(ResonanceEdge { a: i * ny + e.a, b: i * ny + e.b, face: e.face });
        }
    }
    edges.sort();
    ResonanceGraph { matchings, edges }
}
