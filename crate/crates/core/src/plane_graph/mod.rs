//! Plane bipartite graphs with an explicit embedding.
//!
//! A [`PlaneGraph`] is immutable once built. Vertices are addressed by a dense
//! index ([`VertexId`]) assigned in ascending order of the caller's integer
//! ids; edges by [`EdgeId`] in lexicographic order of their (sorted) endpoint
//! indices.
//!
//! Orientation conventions (y axis up):
//! - the rotation at each vertex lists neighbours counterclockwise by angle;
//! - every facial walk is stored with its face on the right, so the walk of a
//!   finite face runs clockwise (negative shoelace area) and the traced walk
//!   of the infinite face runs counterclockwise;
//! - the clockwise periphery `∂G` is the reverse of the infinite face's walk.

mod analysis;
mod benzenoid;
mod handles;
mod io;

pub use analysis::{ElementaryAnalysis, PeripheralVerdict, Violation};
pub use benzenoid::{parse_benzenoid, Benzenoid};
pub use handles::{FacialHandleDecomposition, Handle, HandleKind};
pub use io::{GraphFile, GraphFileVertex};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
/// Edge subset indexed by [`EdgeId`].
pub type EdgeSet = FixedBitSet;

/// Face index. Finite faces come first (`0..n`), the infinite face is `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: FaceId,
    /// Boundary walks, each with the face on its right. Finite faces of the
    /// graphs this crate targets have exactly one walk.
    pub walks: Vec<Vec<VertexId>>,
    pub edges: EdgeSet,
    pub is_infinite: bool,
}

impl Face {
    /// The first boundary walk; for a finite face, its clockwise facial cycle.
    pub fn boundary(&self) -> &[VertexId] {
        self.walks.first().map(Vec::as_slice).unwrap_or(&[])
    }

    /// True when the boundary is a single walk that never repeats a vertex.
    pub fn is_cycle(&self) -> bool {
        if self.walks.len() != 1 {
            return false;
        }
        let w = &self.walks[0];
        let mut seen = w.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == w.len() && w.len() >= 3
    }
}

/// Correspondence between a subgraph and the graph it was cut from.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub vertex_to_parent: Vec<VertexId>,
    pub edge_to_parent: Vec<EdgeId>,
    /// Parent face with the identical dart set, if any.
    pub face_to_parent: Vec<Option<FaceId>>,
    pub parent_edge_count: usize,
}

impl Restriction {
    pub fn lift_edges(&self, edges: &EdgeSet) -> EdgeSet {
        let mut out = EdgeSet::with_capacity(self.parent_edge_count);
        for e in edges.ones() {
            out.insert(self.edge_to_parent[e]);
        }
        out
    }

    /// Parent edges that survive in the subgraph, renumbered.
    pub fn restrict_edges(&self, parent: &EdgeSet) -> EdgeSet {
        let mut out = EdgeSet::with_capacity(self.edge_to_parent.len());
        for (e, &pe) in self.edge_to_parent.iter().enumerate() {
            if parent.contains(pe) {
                out.insert(e);
            }
        }
        out
    }

    pub fn parent_face(&self, f: FaceId) -> Option<FaceId> {
        self.face_to_parent.get(f.0).copied().flatten()
    }

    pub fn child_face(&self, parent: FaceId) -> Option<FaceId> {
        self.face_to_parent
            .iter()
            .position(|&p| p == Some(parent))
            .map(FaceId)
    }
}

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    ids: Vec<i64>,
    coords: Vec<Option<Point>>,
    edges: Vec<[VertexId; 2]>,
    /// Counterclockwise `(neighbour, edge)` list per vertex.
    rotation: Vec<Vec<(VertexId, EdgeId)>>,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
    colors: Vec<Color>,
    component: Vec<usize>,
    component_count: usize,
}

/// Facial walk as produced by the tracer: darts in order.
struct Walk {
    darts: Vec<usize>,
}

enum Grouping {
    /// Walks with non-negative signed area form the infinite face.
    ByArea,
    /// Walks containing one of these darts form the infinite face.
    OuterDarts(Vec<usize>),
    /// Subgraph: region of each walk inherited from the parent's faces.
    Inherited {
        parent_dart_face: Vec<FaceId>,
        parent_infinite: FaceId,
        parent_face_count: usize,
        /// Parent edges that were deleted (their two sides merge).
        deleted_parent_edges: Vec<EdgeId>,
        edge_to_parent: Vec<EdgeId>,
        parent_edges: Vec<[VertexId; 2]>,
        vertex_to_parent: Vec<VertexId>,
    },
}

/// Convenience wrapper matching the JSON graph input: `(id, x, y)` vertices
/// and id-pair edges.
pub fn build_plane_graph(vertices: &[(i64, f64, f64)], edges: &[(i64, i64)]) -> Result<PlaneGraph> {
    PlaneGraph::from_coordinates(vertices, edges)
}

impl PlaneGraph {
    /// Builds the embedding of a straight-line drawing. The drawing must be
    /// non-crossing; that is not checked.
    pub fn from_coordinates(vertices: &[(i64, f64, f64)], edges: &[(i64, i64)]) -> Result<Self> {
        let mut sorted: Vec<(i64, f64, f64)> = vertices.to_vec();
        sorted.sort_by_key(|v| v.0);
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidInput(format!("duplicate vertex id {}", w[0].0)));
            }
        }
        let mut seen_coords: HashMap<(u64, u64), i64> = HashMap::new();
        for &(id, x, y) in &sorted {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::InvalidInput(format!("vertex {id} has non-finite coordinates")));
            }
            let key = ((x + 0.0).to_bits(), (y + 0.0).to_bits());
            if let Some(other) = seen_coords.insert(key, id) {
                return Err(Error::InvalidInput(format!(
                    "vertices {other} and {id} share coordinates"
                )));
            }
        }
        let ids: Vec<i64> = sorted.iter().map(|v| v.0).collect();
        let coords: Vec<Option<Point>> = sorted
            .iter()
            .map(|&(_, x, y)| Some(Point { x, y }))
            .collect();
        let edge_list = normalize_edges(&ids, edges)?;

        let mut rotation: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); ids.len()];
        for (e, &[u, v]) in edge_list.iter().enumerate() {
            rotation[u].push((v, e));
            rotation[v].push((u, e));
        }
        for (v, rot) in rotation.iter_mut().enumerate() {
            let p = coords[v].unwrap();
            rot.sort_by(|a, b| {
                let pa = coords[a.0].unwrap();
                let pb = coords[b.0].unwrap();
                let ta = (pa.y - p.y).atan2(pa.x - p.x);
                let tb = (pb.y - p.y).atan2(pb.x - p.x);
                ta.total_cmp(&tb)
            });
        }
        Self::assemble(ids, coords, edge_list, rotation, Grouping::ByArea, None)
    }

    /// Builds from an explicit rotation system (neighbours listed
    /// counterclockwise) with the infinite face designated by one dart
    /// `(u, v)` per connected component; the infinite face lies to the right
    /// of each designated dart.
    pub fn from_rotation_system(rotation: &[(i64, Vec<i64>)], outer_darts: &[(i64, i64)]) -> Result<Self> {
        let mut ids: Vec<i64> = rotation.iter().map(|r| r.0).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate vertex id in rotation".into()));
        }
        let mut pairs = Vec::new();
        for (u, nbrs) in rotation {
            for &v in nbrs {
                if u < &v {
                    pairs.push((*u, v));
                }
            }
        }
        let edge_list = normalize_edges(&ids, &pairs)?;
        let index = |id: i64| ids.binary_search(&id).ok();
        let mut rot: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); ids.len()];
        for (u, nbrs) in rotation {
            let ui = index(*u).unwrap();
            for &v in nbrs {
                let vi = index(v).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {v}")))?;
                let e = find_edge(&edge_list, ui, vi)
                    .ok_or_else(|| Error::InvalidInput(format!("rotation of {u} lists {v} but not vice versa")))?;
                rot[ui].push((vi, e));
            }
        }
        for (v, r) in rot.iter().enumerate() {
            let expected = edge_list.iter().filter(|e| e[0] == v || e[1] == v).count();
            if r.len() != expected {
                return Err(Error::InvalidInput(format!(
                    "rotation of vertex {} is not symmetric",
                    ids[v]
                )));
            }
        }
        let mut darts = Vec::new();
        for &(u, v) in outer_darts {
            let (ui, vi) = match (index(u), index(v)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::InvalidInput(format!("unknown outer dart ({u}, {v})"))),
            };
            let e = find_edge(&edge_list, ui, vi)
                .ok_or_else(|| Error::InvalidInput(format!("outer dart ({u}, {v}) is not an edge")))?;
            darts.push(dart_of(&edge_list, e, ui));
        }
        let coords = vec![None; ids.len()];
        Self::assemble(ids, coords, edge_list, rot, Grouping::OuterDarts(darts), None)
    }

    fn assemble(
        ids: Vec<i64>,
        coords: Vec<Option<Point>>,
        edges: Vec<[VertexId; 2]>,
        rotation: Vec<Vec<(VertexId, EdgeId)>>,
        grouping: Grouping,
        parent_face_of_region: Option<&mut Vec<Option<FaceId>>>,
    ) -> Result<Self> {
        let n = ids.len();
        let (component, component_count) = components(n, &edges);
        let colors = two_color(&ids, &rotation)?;

        let walks = trace_walks(&edges, &rotation);
        let dart_walk = {
            let mut dw = vec![usize::MAX; 2 * edges.len()];
            for (wi, w) in walks.iter().enumerate() {
                for &d in &w.darts {
                    debug_assert_eq!(dw[d], usize::MAX, "dart traversed twice");
                    dw[d] = wi;
                }
            }
            dw
        };

        // region per walk: None = infinite; Some(key) groups walks into one face.
        let mut region_parent: HashMap<usize, Option<FaceId>> = HashMap::new();
        let region: Vec<Option<usize>> = match &grouping {
            Grouping::ByArea => walks
                .iter()
                .enumerate()
                .map(|(wi, w)| {
                    let a = signed_area2(&edges, &coords, w);
                    if a >= -1e-9 {
                        None
                    } else {
                        Some(wi)
                    }
                })
                .collect(),
            Grouping::OuterDarts(darts) => {
                let mut outer = vec![false; walks.len()];
                for &d in darts {
                    outer[dart_walk[d]] = true;
                }
                let mut covered = vec![false; component_count];
                for (wi, w) in walks.iter().enumerate() {
                    if outer[wi] {
                        covered[component[dart_tail(&edges, w.darts[0])]] = true;
                    }
                }
                for v in 0..n {
                    if !covered[component[v]] && !rotation[v].is_empty() {
                        return Err(Error::InvalidInput(format!(
                            "no outer dart given for the component of vertex {}",
                            ids[v]
                        )));
                    }
                }
                (0..walks.len())
                    .map(|wi| if outer[wi] { None } else { Some(wi) })
                    .collect()
            }
            Grouping::Inherited {
                parent_dart_face,
                parent_infinite,
                parent_face_count,
                deleted_parent_edges,
                edge_to_parent,
                parent_edges,
                vertex_to_parent,
            } => {
                let mut uf = UnionFind::new(*parent_face_count);
                for &pe in deleted_parent_edges {
                    uf.union(parent_dart_face[2 * pe].0, parent_dart_face[2 * pe + 1].0);
                }
                let inf_root = uf.find(parent_infinite.0);
                let mut class_walks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                let mut reg = Vec::with_capacity(walks.len());
                for (wi, w) in walks.iter().enumerate() {
                    let d = w.darts[0];
                    let e = d / 2;
                    let pe = edge_to_parent[e];
                    // orient the child dart in parent terms
                    let tail = vertex_to_parent[dart_tail(&edges, d)];
                    let pd = if parent_edges[pe][0] == tail { 2 * pe } else { 2 * pe + 1 };
                    let root = uf.find(parent_dart_face[pd].0);
                    if root == inf_root {
                        reg.push(None);
                    } else {
                        class_walks.entry(root).or_default().push(wi);
                        reg.push(Some(root));
                    }
                }
                // a region maps to a parent face iff its walks use exactly that face's darts
                for (&root, wis) in &class_walks {
                    let mut pfaces: Vec<FaceId> = Vec::new();
                    for &wi in wis {
                        for &d in &walks[wi].darts {
                            let pe = edge_to_parent[d / 2];
                            let tail = vertex_to_parent[dart_tail(&edges, d)];
                            let pd = if parent_edges[pe][0] == tail { 2 * pe } else { 2 * pe + 1 };
                            pfaces.push(parent_dart_face[pd]);
                        }
                    }
                    pfaces.sort_unstable();
                    pfaces.dedup();
                    let mapped = if pfaces.len() == 1 {
                        let pf = pfaces[0];
                        let parent_darts = parent_dart_face.iter().filter(|&&f| f == pf).count();
                        let child_darts: usize = wis.iter().map(|&wi| walks[wi].darts.len()).sum();
                        (parent_darts == child_darts).then_some(pf)
                    } else {
                        None
                    };
                    region_parent.insert(root, mapped);
                }
                reg
            }
        };

        // gather finite regions
        let mut finite: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut infinite_walks = Vec::new();
        for (wi, r) in region.iter().enumerate() {
            match r {
                Some(key) => finite.entry(*key).or_default().push(wi),
                None => infinite_walks.push(wi),
            }
        }
        let walk_vertices = |w: &Walk| -> Vec<VertexId> { w.darts.iter().map(|&d| dart_tail(&edges, d)).collect() };
        let walk_edges = |wis: &[usize]| -> EdgeSet {
            let mut s = EdgeSet::with_capacity(edges.len());
            for &wi in wis {
                for &d in &walks[wi].darts {
                    s.insert(d / 2);
                }
            }
            s
        };

        struct Pending {
            walks: Vec<usize>,
            parent: Option<FaceId>,
            key: Vec<i64>,
        }
        let mut pending: Vec<Pending> = finite
            .into_iter()
            .map(|(key, wis)| {
                let mut vkey: Vec<i64> = wis
                    .iter()
                    .flat_map(|&wi| walks[wi].darts.iter().map(|&d| ids[dart_tail(&edges, d)]))
                    .collect();
                vkey.sort_unstable();
                vkey.dedup();
                Pending {
                    walks: wis,
                    parent: region_parent.get(&key).copied().flatten(),
                    key: vkey,
                }
            })
            .collect();
        pending.sort_by(|a, b| match (a.parent, b.parent) {
            (Some(x), Some(y)) => x.cmp(&y),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => a.key.cmp(&b.key),
        });

        let mut faces = Vec::with_capacity(pending.len() + 1);
        let mut dart_face = vec![FaceId(usize::MAX); 2 * edges.len()];
        let mut parents = Vec::with_capacity(pending.len() + 1);
        for (i, p) in pending.iter().enumerate() {
            let id = FaceId(i);
            for &wi in &p.walks {
                for &d in &walks[wi].darts {
                    dart_face[d] = id;
                }
            }
            parents.push(p.parent);
            faces.push(Face {
                id,
                walks: p.walks.iter().map(|&wi| walk_vertices(&walks[wi])).collect(),
                edges: walk_edges(&p.walks),
                is_infinite: false,
            });
        }
        let inf = FaceId(faces.len());
        for &wi in &infinite_walks {
            for &d in &walks[wi].darts {
                dart_face[d] = inf;
            }
        }
        parents.push(match &grouping {
            Grouping::Inherited { parent_infinite, .. } => Some(*parent_infinite),
            _ => None,
        });
        faces.push(Face {
            id: inf,
            walks: infinite_walks.iter().map(|&wi| walk_vertices(&walks[wi])).collect(),
            edges: walk_edges(&infinite_walks),
            is_infinite: true,
        });

        let g = PlaneGraph {
            ids,
            coords,
            edges,
            rotation,
            faces,
            dart_face,
            colors,
            component,
            component_count,
        };
        // Euler: V - E + F = 1 + C
        let lhs = g.ids.len() as i64 - g.edges.len() as i64 + g.faces.len() as i64;
        let rhs = 1 + g.component_count as i64;
        if lhs != rhs {
            return Err(Error::EmbeddingInconsistent(format!(
                "V - E + F = {lhs}, expected {rhs} for {} component(s)",
                g.component_count
            )));
        }
        if let Some(out) = parent_face_of_region {
            *out = parents;
        }
        Ok(g)
    }

    /// Cuts out the subgraph spanned by `edges` (vertices are their
    /// endpoints). Faces are re-traced under the inherited rotation; the
    /// infinite face is the region containing the parent's infinite face.
    pub fn subgraph(&self, edges: &EdgeSet) -> Result<(PlaneGraph, Restriction)> {
        let mut keep_v = vec![false; self.ids.len()];
        let mut edge_to_parent = Vec::new();
        for e in edges.ones() {
            if e >= self.edges.len() {
                return Err(Error::InvalidInput(format!("edge {e} out of range")));
            }
            keep_v[self.edges[e][0]] = true;
            keep_v[self.edges[e][1]] = true;
            edge_to_parent.push(e);
        }
        let vertex_to_parent: Vec<VertexId> = (0..self.ids.len()).filter(|&v| keep_v[v]).collect();
        let mut parent_to_vertex = vec![usize::MAX; self.ids.len()];
        for (i, &pv) in vertex_to_parent.iter().enumerate() {
            parent_to_vertex[pv] = i;
        }
        let ids: Vec<i64> = vertex_to_parent.iter().map(|&v| self.ids[v]).collect();
        let coords: Vec<Option<Point>> = vertex_to_parent.iter().map(|&v| self.coords[v]).collect();
        // parent edges are sorted by endpoints and the renumbering is monotone
        let sub_edges: Vec<[VertexId; 2]> = edge_to_parent
            .iter()
            .map(|&e| [parent_to_vertex[self.edges[e][0]], parent_to_vertex[self.edges[e][1]]])
            .collect();
        let mut parent_to_edge = vec![usize::MAX; self.edges.len()];
        for (i, &pe) in edge_to_parent.iter().enumerate() {
            parent_to_edge[pe] = i;
        }
        let rotation: Vec<Vec<(VertexId, EdgeId)>> = vertex_to_parent
            .iter()
            .map(|&pv| {
                self.rotation[pv]
                    .iter()
                    .filter(|(_, pe)| parent_to_edge[*pe] != usize::MAX)
                    .map(|&(pw, pe)| (parent_to_vertex[pw], parent_to_edge[pe]))
                    .collect()
            })
            .collect();
        let deleted: Vec<EdgeId> = (0..self.edges.len()).filter(|e| !edges.contains(*e)).collect();
        let grouping = Grouping::Inherited {
            parent_dart_face: self.dart_face.clone(),
            parent_infinite: self.infinite_face_id(),
            parent_face_count: self.faces.len(),
            deleted_parent_edges: deleted,
            edge_to_parent: edge_to_parent.clone(),
            parent_edges: self.edges.clone(),
            vertex_to_parent: vertex_to_parent.clone(),
        };
        let mut face_parents = Vec::new();
        let mut g = Self::assemble(ids, coords, sub_edges, rotation, grouping, Some(&mut face_parents))?;
        // keep the parent's colour classes
        for (i, &pv) in vertex_to_parent.iter().enumerate() {
            g.colors[i] = self.colors[pv];
        }
        let restriction = Restriction {
            vertex_to_parent,
            edge_to_parent,
            face_to_parent: face_parents,
            parent_edge_count: self.edges.len(),
        };
        Ok((g, restriction))
    }

    /// Renumbers the finite faces so that `order[k]` becomes face `k`.
    pub fn with_face_order(&self, order: &[FaceId]) -> Result<PlaneGraph> {
        let n = self.finite_face_count();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::InvalidInput(format!("face order lists {} of {n} faces", order.len())));
        }
        for f in order {
            if f.0 >= n || std::mem::replace(&mut seen[f.0], true) {
                return Err(Error::InvalidInput(format!("face order entry {f} invalid or repeated")));
            }
        }
        let mut remap = vec![FaceId(0); n + 1];
        for (k, f) in order.iter().enumerate() {
            remap[f.0] = FaceId(k);
        }
        remap[n] = FaceId(n);
        let mut g = self.clone();
        let mut faces: Vec<Face> = order.iter().map(|f| self.faces[f.0].clone()).collect();
        faces.push(self.faces[n].clone());
        for (k, f) in faces.iter_mut().enumerate() {
            f.id = FaceId(k);
        }
        g.faces = faces;
        for df in g.dart_face.iter_mut() {
            *df = remap[df.0];
        }
        Ok(g)
    }

    /// Same graph with the two colour classes exchanged.
    pub fn swap_colors(&self) -> PlaneGraph {
        let mut g = self.clone();
        for c in g.colors.iter_mut() {
            *c = c.flip();
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[i64] {
        &self.ids
    }

    /// External id of vertex `v`.
    pub fn id(&self, v: VertexId) -> i64 {
        self.ids[v]
    }

    pub fn index_of(&self, id: i64) -> Option<VertexId> {
        self.ids.binary_search(&id).ok()
    }

    pub fn point(&self, v: VertexId) -> Option<Point> {
        self.coords[v]
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.edges[e][0], self.edges[e][1])
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().map(|e| (e[0], e[1]))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotation[u].iter().find(|(w, _)| *w == v).map(|&(_, e)| e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// Neighbours of `v` with connecting edges, counterclockwise.
    pub fn rotation(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.rotation[v]
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    /// Whether `v` has the colour of the smallest-id vertex of its component.
    /// Unlike [`PlaneGraph::color`] this does not change under `swap_colors`.
    pub fn matches_anchor_color(&self, v: VertexId) -> bool {
        let anchor = (0..self.ids.len())
            .find(|&u| self.component[u] == self.component[v])
            .unwrap();
        self.colors[v] == self.colors[anchor]
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::with_capacity(self.edges.len())
    }

    pub fn all_edges(&self) -> EdgeSet {
        let mut s = self.empty_edge_set();
        s.insert_range(..);
        s
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn finite_faces(&self) -> &[Face] {
        &self.faces[..self.faces.len() - 1]
    }

    pub fn finite_face_count(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn infinite_face_id(&self) -> FaceId {
        FaceId(self.faces.len() - 1)
    }

    pub fn infinite_face(&self) -> &Face {
        self.faces.last().unwrap()
    }

    /// Face to the right of the dart `u -> v`.
    pub fn face_right_of(&self, u: VertexId, v: VertexId) -> Option<FaceId> {
        let e = self.edge_between(u, v)?;
        Some(self.dart_face[dart_of(&self.edges, e, u)])
    }

    /// Faces on the two sides of edge `e`.
    pub fn faces_of_edge(&self, e: EdgeId) -> (FaceId, FaceId) {
        (self.dart_face[2 * e], self.dart_face[2 * e + 1])
    }

    pub fn is_peripheral_edge(&self, e: EdgeId) -> bool {
        let inf = self.infinite_face_id();
        self.dart_face[2 * e] == inf || self.dart_face[2 * e + 1] == inf
    }

    pub fn is_peripheral_vertex(&self, v: VertexId) -> bool {
        self.rotation[v].iter().any(|&(_, e)| self.is_peripheral_edge(e))
    }

    /// Clockwise periphery walks, one per component with edges.
    pub fn periphery(&self) -> Vec<Vec<VertexId>> {
        self.infinite_face()
            .walks
            .iter()
            .map(|w| {
                let mut r: Vec<VertexId> = w.iter().rev().copied().collect();
                // keep the walk starting at the same vertex
                r.rotate_right(1);
                r
            })
            .collect()
    }

    /// The clockwise peripheral cycle of a connected graph whose periphery
    /// is a simple cycle.
    pub fn periphery_cycle(&self) -> Option<Vec<VertexId>> {
        let mut p = self.periphery();
        if p.len() != 1 {
            return None;
        }
        let c = p.pop().unwrap();
        let mut s = c.clone();
        s.sort_unstable();
        s.dedup();
        (s.len() == c.len() && c.len() >= 3).then_some(c)
    }

    /// Finite face whose boundary has exactly this vertex set.
    pub fn face_with_vertices(&self, vertices: &[VertexId]) -> Option<FaceId> {
        let mut want = vertices.to_vec();
        want.sort_unstable();
        want.dedup();
        self.finite_faces().iter().find_map(|f| {
            let mut have: Vec<VertexId> = f.walks.iter().flatten().copied().collect();
            have.sort_unstable();
            have.dedup();
            (have == want).then_some(f.id)
        })
    }

    /// Edge set of the path/cycle through `walk` (consecutive vertices must
    /// be adjacent). `closed` adds the edge from last back to first.
    pub fn walk_edges(&self, walk: &[VertexId], closed: bool) -> Option<Vec<EdgeId>> {
        let mut out = Vec::with_capacity(walk.len());
        for w in walk.windows(2) {
            out.push(self.edge_between(w[0], w[1])?);
        }
        if closed && walk.len() > 2 {
            out.push(self.edge_between(*walk.last().unwrap(), walk[0])?);
        }
        Some(out)
    }

    /// If `cycle` is the edge set of a single cycle, its vertices in
    /// clockwise order, starting from the smallest vertex index.
    pub fn clockwise_cycle(&self, cycle: &EdgeSet) -> Option<Vec<VertexId>> {
        let first = cycle.ones().next()?;
        let mut deg: HashMap<VertexId, usize> = HashMap::new();
        for e in cycle.ones() {
            *deg.entry(self.edges[e][0]).or_default() += 1;
            *deg.entry(self.edges[e][1]).or_default() += 1;
        }
        if deg.values().any(|&d| d != 2) {
            return None;
        }
        // faces reachable from the infinite face without crossing the cycle
        let mut outside = vec![false; self.faces.len()];
        let mut queue = VecDeque::from([self.infinite_face_id()]);
        outside[self.infinite_face_id().0] = true;
        let mut face_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); self.faces.len()];
        for e in 0..self.edges.len() {
            face_edges[self.dart_face[2 * e].0].push(e);
            face_edges[self.dart_face[2 * e + 1].0].push(e);
        }
        while let Some(f) = queue.pop_front() {
            for &e in &face_edges[f.0] {
                if cycle.contains(e) {
                    continue;
                }
                for g in [self.dart_face[2 * e], self.dart_face[2 * e + 1]] {
                    if !outside[g.0] {
                        outside[g.0] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
        // the dart of `first` with an inside face on its right runs clockwise
        let d0 = if !outside[self.dart_face[2 * first].0] {
            2 * first
        } else if !outside[self.dart_face[2 * first + 1].0] {
            2 * first + 1
        } else {
            return None;
        };
        let start = dart_tail(&self.edges, d0);
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = dart_head(&self.edges, d0);
        while cur != start {
            walk.push(cur);
            let next = self.rotation[cur]
                .iter()
                .find(|&&(w, e)| w != prev && cycle.contains(e))
                .map(|&(w, _)| w)?;
            prev = cur;
            cur = next;
            if walk.len() > deg.len() {
                return None;
            }
        }
        if walk.len() != deg.len() {
            return None; // more than one cycle
        }
        let k = walk.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap();
        walk.rotate_left(k);
        Some(walk)
    }
}

fn normalize_edges(ids: &[i64], edges: &[(i64, i64)]) -> Result<Vec<[VertexId; 2]>> {
    let mut out = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let ua = ids
            .binary_search(&a)
            .map_err(|_| Error::InvalidInput(format!("edge ({a}, {b}) references unknown vertex {a}")))?;
        let ub = ids
            .binary_search(&b)
            .map_err(|_| Error::InvalidInput(format!("edge ({a}, {b}) references unknown vertex {b}")))?;
        if ua == ub {
            return Err(Error::InvalidInput(format!("loop at vertex {a}")));
        }
        out.push([ua.min(ub), ua.max(ub)]);
    }
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!(
            "parallel edges between {} and {}",
            ids[w[0][0]], ids[w[0][1]]
        )));
    }
    Ok(out)
}

fn find_edge(edges: &[[VertexId; 2]], u: VertexId, v: VertexId) -> Option<EdgeId> {
    edges.binary_search(&[u.min(v), u.max(v)]).ok()
}

fn dart_of(edges: &[[VertexId; 2]], e: EdgeId, tail: VertexId) -> usize {
    if edges[e][0] == tail {
        2 * e
    } else {
        2 * e + 1
    }
}

fn dart_tail(edges: &[[VertexId; 2]], d: usize) -> VertexId {
    edges[d / 2][d % 2]
}

fn dart_head(edges: &[[VertexId; 2]], d: usize) -> VertexId {
    edges[d / 2][1 - d % 2]
}

/// Traces every facial walk keeping the face on the right: arriving at `v`
/// from `u`, leave along the neighbour following `u` counterclockwise.
fn trace_walks(edges: &[[VertexId; 2]], rotation: &[Vec<(VertexId, EdgeId)>]) -> Vec<Walk> {
    let mut used = vec![false; 2 * edges.len()];
    let mut walks = Vec::new();
    for start in 0..2 * edges.len() {
        if used[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        while !used[d] {
            used[d] = true;
            darts.push(d);
            let v = dart_head(edges, d);
            let rot = &rotation[v];
            let pos = rot.iter().position(|&(_, e)| e == d / 2).unwrap();
            let (_, next_e) = rot[(pos + 1) % rot.len()];
            d = dart_of(edges, next_e, v);
        }
        walks.push(Walk { darts });
    }
    walks
}

fn signed_area2(edges: &[[VertexId; 2]], coords: &[Option<Point>], w: &Walk) -> f64 {
    let mut a = 0.0;
    for &d in &w.darts {
        let p = coords[dart_tail(edges, d)].unwrap();
        let q = coords[dart_head(edges, d)].unwrap();
        a += p.x * q.y - q.x * p.y;
    }
    a
}

fn components(n: usize, edges: &[[VertexId; 2]]) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(n);
    for e in edges {
        uf.union(e[0], e[1]);
    }
    let mut label = vec![usize::MAX; n];
    let mut comp = vec![0; n];
    let mut count = 0;
    for v in 0..n {
        let r = uf.find(v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        comp[v] = label[r];
    }
    (comp, count)
}

/// Breadth-first 2-colouring; the smallest index of each component is white.
fn two_color(ids: &[i64], rotation: &[Vec<(VertexId, EdgeId)>]) -> Result<Vec<Color>> {
    let n = ids.len();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for s in 0..n {
        if colors[s].is_some() {
            continue;
        }
        colors[s] = Some(Color::White);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = colors[u].unwrap();
            for &(w, _) in &rotation[u] {
                match colors[w] {
                    None => {
                        colors[w] = Some(cu.flip());
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return Err(Error::NotBipartite { vertex: ids[w] }),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(colors.into_iter().map(Option::unwrap).collect())
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn hexagon_has_one_finite_face() {
        let g = fixtures::hexagon();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.finite_face_count(), 1);
        assert!(g.infinite_face().is_infinite);
        assert!(g.face(FaceId(0)).is_cycle());
    }

    #[test]
    fn finite_walks_are_clockwise() {
        let g = fixtures::branched5().graph;
        for f in g.finite_faces() {
            let w = f.boundary();
            let mut a = 0.0;
            for i in 0..w.len() {
                let p = g.point(w[i]).unwrap();
                let q = g.point(w[(i + 1) % w.len()]).unwrap();
                a += p.x * q.y - q.x * p.y;
            }
            assert!(a < 0.0, "face {} not clockwise", f.id);
        }
        let p = g.periphery_cycle().unwrap();
        let mut a = 0.0;
        for i in 0..p.len() {
            let s = g.point(p[i]).unwrap();
            let t = g.point(p[(i + 1) % p.len()]).unwrap();
            a += s.x * t.y - t.x * s.y;
        }
        assert!(a < 0.0, "periphery not clockwise");
    }

    #[test]
    fn every_dart_in_exactly_one_walk() {
        let g = fixtures::branched5().graph;
        let total: usize = g.faces().iter().flat_map(|f| f.walks.iter()).map(Vec::len).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn odd_cycle_rejected() {
        let v = [(0, 0.0, 0.0), (1, 1.0, 0.0), (2, 0.0, 1.0)];
        let e = [(0, 1), (1, 2), (2, 0)];
        assert!(matches!(build_plane_graph(&v, &e), Err(Error::NotBipartite { .. })));
    }

    #[test]
    fn k33_drawing_fails_euler() {
        // any straight-line drawing of K_{3,3} crosses, so the angular
        // rotation cannot be a plane embedding
        let v = [
            (0, 0.0, 0.0),
            (1, 1.0, 0.0),
            (2, 2.0, 0.0),
            (3, 0.0, 2.0),
            (4, 1.0, 2.5),
            (5, 2.0, 2.0),
        ];
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        assert!(matches!(build_plane_graph(&v, &e), Err(Error::EmbeddingInconsistent(_))));
    }

    #[test]
    fn rejects_duplicates() {
        let v = [(0, 0.0, 0.0), (1, 0.0, 0.0)];
        assert!(build_plane_graph(&v, &[(0, 1)]).is_err());
        let v = [(0, 0.0, 0.0), (1, 1.0, 0.0)];
        assert!(build_plane_graph(&v, &[(0, 1), (1, 0)]).is_err());
        assert!(build_plane_graph(&v, &[(0, 0)]).is_err());
        assert!(build_plane_graph(&v, &[(0, 7)]).is_err());
    }

    #[test]
    fn disjoint_hexagons() {
        let g = fixtures::two_hexagons();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.finite_face_count(), 2);
        assert_eq!(g.infinite_face().walks.len(), 2);
        assert_eq!(g.periphery().len(), 2);
    }

    #[test]
    fn rotation_system_matches_coordinates() {
        let g = fixtures::branched5().graph;
        let rot: Vec<(i64, Vec<i64>)> = (0..g.vertex_count())
            .map(|v| (g.id(v), g.rotation(v).iter().map(|&(w, _)| g.id(w)).collect()))
            .collect();
        let outer = g.infinite_face().walks[0].clone();
        let dart = (g.id(outer[0]), g.id(outer[1]));
        let h = PlaneGraph::from_rotation_system(&rot, &[dart]).unwrap();
        assert_eq!(h.finite_face_count(), 5);
        let mut a: Vec<Vec<i64>> = g
            .finite_faces()
            .iter()
            .map(|f| {
                let mut v: Vec<i64> = f.boundary().iter().map(|&x| g.id(x)).collect();
                v.sort();
                v
            })
            .collect();
        let mut b: Vec<Vec<i64>> = h
            .finite_faces()
            .iter()
            .map(|f| {
                let mut v: Vec<i64> = f.boundary().iter().map(|&x| h.id(x)).collect();
                v.sort();
                v
            })
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn clockwise_cycle_of_face_matches_trace() {
        let g = fixtures::branched5().graph;
        for f in g.finite_faces() {
            let cw = g.clockwise_cycle(&f.edges).unwrap();
            let b = f.boundary();
            let k = b.iter().position(|&v| v == cw[0]).unwrap();
            let mut rotated = b.to_vec();
            rotated.rotate_left(k);
            assert_eq!(rotated, cw);
        }
        // periphery as a cycle
        let per = g.infinite_face().edges.clone();
        let cw = g.clockwise_cycle(&per).unwrap();
        let p = g.periphery_cycle().unwrap();
        let k = p.iter().position(|&v| v == cw[0]).unwrap();
        let mut rotated = p.clone();
        rotated.rotate_left(k);
        assert_eq!(rotated, cw);
    }

    #[test]
    fn subgraph_keeps_face_identity() {
        let fig = fixtures::branched5();
        let g = &fig.graph;
        let mut es = g.empty_edge_set();
        es.union_with(&g.face(FaceId(0)).edges);
        es.union_with(&g.face(FaceId(1)).edges);
        let (h, r) = g.subgraph(&es).unwrap();
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.finite_face_count(), 2);
        assert_eq!(r.parent_face(FaceId(0)), Some(FaceId(0)));
        assert_eq!(r.parent_face(FaceId(1)), Some(FaceId(1)));
    }

    #[test]
    fn face_order_permutes() {
        let g = fixtures::branched5().graph;
        let order = [FaceId(4), FaceId(3), FaceId(2), FaceId(1), FaceId(0)];
        let h = g.with_face_order(&order).unwrap();
        assert_eq!(h.face(FaceId(0)).edges, g.face(FaceId(4)).edges);
        for e in 0..g.edge_count() {
            let (a, b) = g.faces_of_edge(e);
            let (c, d) = h.faces_of_edge(e);
            let map = |f: FaceId| if f.0 == 5 { f } else { FaceId(4 - f.0) };
            assert_eq!((map(a), map(b)), (c, d));
        }
        assert!(g.with_face_order(&order[..4]).is_err());
    }

    #[test]
    fn swap_is_involution() {
        let g = fixtures::branched5().graph;
        let s = g.swap_colors();
        for v in 0..g.vertex_count() {
            assert_ne!(g.color(v), s.color(v));
            assert_eq!(g.matches_anchor_color(v), s.matches_anchor_color(v));
        }
        let ss = s.swap_colors();
        for v in 0..g.vertex_count() {
            assert_eq!(g.color(v), ss.color(v));
        }
    }
}
