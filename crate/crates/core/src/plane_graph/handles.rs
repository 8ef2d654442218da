use serde::Serialize;

use super::{EdgeId, FaceId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HandleKind {
    /// All edges on the periphery.
    Exterior,
    /// All edges interior.
    Interior,
}

/// A path whose ends have degree at least 3 and whose inner vertices have
/// degree 2. Exterior handles are oriented clockwise along the periphery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Handle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub kind: HandleKind,
}

impl Handle {
    pub fn length(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1
    }

    /// First and last edge (the same edge for a trivial handle).
    pub fn end_edges(&self) -> (EdgeId, EdgeId) {
        (self.edges[0], *self.edges.last().unwrap())
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    fn reversed(&self) -> Handle {
        Handle {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
            kind: self.kind,
        }
    }
}

/// The facial cycle of a finite face cut at its degree-3 vertices:
/// `J_1, P_1, ..., J_m, P_m` in clockwise order, interior first.
#[derive(Clone, Debug)]
pub struct FacialHandleDecomposition {
    pub face: FaceId,
    pub handles: Vec<Handle>,
}

impl FacialHandleDecomposition {
    /// Number of exterior (equivalently interior) handles.
    pub fn m(&self) -> usize {
        self.handles.len() / 2
    }

    pub fn interior(&self) -> impl Iterator<Item = &Handle> {
        self.handles.iter().filter(|h| h.kind == HandleKind::Interior)
    }

    pub fn exterior(&self) -> impl Iterator<Item = &Handle> {
        self.handles.iter().filter(|h| h.kind == HandleKind::Exterior)
    }

    /// `P_i` for `1 <= i <= m`.
    pub fn exterior_handle(&self, i: usize) -> Option<&Handle> {
        (1..=self.m()).contains(&i).then(|| &self.handles[2 * i - 1])
    }

    /// `J_i` for `1 <= i <= m`.
    pub fn interior_handle(&self, i: usize) -> Option<&Handle> {
        (1..=self.m()).contains(&i).then(|| &self.handles[2 * i - 2])
    }
}

impl PlaneGraph {
    fn handle_kind(&self, e: EdgeId) -> HandleKind {
        if self.is_peripheral_edge(e) {
            HandleKind::Exterior
        } else {
            HandleKind::Interior
        }
    }

    /// Every handle of the graph, trivial ones included.
    pub fn handles(&self) -> Result<Vec<Handle>> {
        let n = self.vertex_count();
        if (0..n).all(|v| self.degree(v) < 3) {
            return Err(Error::NoHandles);
        }
        let mut used = vec![false; self.edge_count()];
        let mut out = Vec::new();
        for v in 0..n {
            if self.degree(v) < 3 {
                continue;
            }
            for &(w, e) in self.rotation(v) {
                if used[e] {
                    continue;
                }
                let mut vertices = vec![v, w];
                let mut edges = vec![e];
                used[e] = true;
                let mut prev_e = e;
                let mut cur = w;
                while self.degree(cur) == 2 {
                    let &(next, ne) = self
                        .rotation(cur)
                        .iter()
                        .find(|&&(_, x)| x != prev_e)
                        .unwrap();
                    used[ne] = true;
                    vertices.push(next);
                    edges.push(ne);
                    prev_e = ne;
                    cur = next;
                }
                if self.degree(cur) < 3 {
                    continue; // pendant path
                }
                let kind = self.handle_kind(e);
                let mut h = Handle { vertices, edges, kind };
                match kind {
                    HandleKind::Exterior => {
                        let inf = self.infinite_face_id();
                        if self.face_right_of(h.vertices[0], h.vertices[1]) == Some(inf)
                            && self.face_right_of(h.vertices[1], h.vertices[0]) != Some(inf)
                        {
                            h = h.reversed();
                        }
                    }
                    HandleKind::Interior => {
                        if h.vertices[0] > *h.vertices.last().unwrap() {
                            h = h.reversed();
                        }
                    }
                }
                out.push(h);
            }
        }
        Ok(out)
    }

    /// Cuts the clockwise facial cycle of `face` at its degree-3 vertices
    /// and checks that interior and exterior handles alternate.
    pub fn facial_handle_decomposition(&self, face: FaceId) -> Result<FacialHandleDecomposition> {
        let f = self.face(face);
        if f.is_infinite {
            return Err(Error::InvalidInput("facial handle decomposition of the infinite face".into()));
        }
        if !f.is_cycle() {
            return Err(Error::NotAlternating { face: face.0 });
        }
        let walk = f.boundary();
        let len = walk.len();
        let cuts: Vec<usize> = (0..len).filter(|&i| self.degree(walk[i]) >= 3).collect();
        if cuts.is_empty() {
            return Err(Error::NoHandles);
        }
        let mut segments = Vec::with_capacity(cuts.len());
        for (k, &start) in cuts.iter().enumerate() {
            let end = cuts[(k + 1) % cuts.len()];
            let steps = if end > start { end - start } else { end + len - start };
            let vertices: Vec<VertexId> = (0..=steps).map(|j| walk[(start + j) % len]).collect();
            let edges = self
                .walk_edges(&vertices, false)
                .ok_or_else(|| Error::InternalInvariantBroken("facial walk is not a path".into()))?;
            let kind = self.handle_kind(edges[0]);
            if edges.iter().any(|&e| self.handle_kind(e) != kind) {
                return Err(Error::NotAlternating { face: face.0 });
            }
            segments.push(Handle { vertices, edges, kind });
        }
        if segments.len() % 2 != 0
            || (0..segments.len()).any(|k| segments[k].kind == segments[(k + 1) % segments.len()].kind)
        {
            return Err(Error::NotAlternating { face: face.0 });
        }
        let first = (0..segments.len())
            .filter(|&k| segments[k].kind == HandleKind::Interior)
            .min_by_key(|&k| segments[k].vertices[0])
            .unwrap();
        segments.rotate_left(first);
        Ok(FacialHandleDecomposition { face, handles: segments })
    }
}
