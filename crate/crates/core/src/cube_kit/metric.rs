use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::coding::BinaryLabel;
use crate::error::{Error, Result};
use crate::plane_graph::GraphFile;
use crate::resonance::ResonanceGraph;

pub const UNREACHABLE: u32 = u32::MAX;

/// Simple undirected graph with its all-pairs distance table and optional
/// vertex labels.
#[derive(Clone, Debug)]
pub struct MetricGraph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: Vec<Vec<u32>>,
    labels: Option<Vec<BinaryLabel>>,
}

impl MetricGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<MetricGraph> {
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidInput(format!("bad edge ({a}, {b})")));
            }
            if adj[a].contains(&b) {
                return Err(Error::InvalidInput(format!("parallel edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
            norm.push((a.min(b), a.max(b)));
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        let dist = (0..n).into_par_iter().map(|s| bfs(&adj, s)).collect();
        Ok(MetricGraph {
            edges: norm,
            adj,
            dist,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<BinaryLabel>) -> Result<MetricGraph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn from_resonance(r: &ResonanceGraph) -> MetricGraph {
        MetricGraph::new(r.vertex_count(), &r.edge_pairs()).expect("resonance graphs are simple")
    }

    /// Vertices are numbered by sorted id; coordinates are ignored.
    pub fn from_graph_file(file: &GraphFile) -> Result<(MetricGraph, Vec<i64>)> {
        let mut ids: Vec<i64> = file.vertices.iter().map(|v| v.id).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate vertex id".into()));
        }
        let index: BTreeMap<i64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut edges = Vec::with_capacity(file.edges.len());
        for e in &file.edges {
            let a = index.get(&e[0]).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {}", e[0])))?;
            let b = index.get(&e[1]).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {}", e[1])))?;
            edges.push((*a, *b));
        }
        Ok((MetricGraph::new(ids.len(), &edges)?, ids))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn labels(&self) -> Option<&[BinaryLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&BinaryLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn distance(&self, a: usize, b: usize) -> u32 {
        self.dist[a][b]
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.dist[0].iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_bipartite(&self) -> bool {
        // with BFS distances from each component root, an edge inside one
        // layer means an odd cycle
        let n = self.vertex_count();
        let mut root = vec![usize::MAX; n];
        for v in 0..n {
            if root[v] == usize::MAX {
                for w in 0..n {
                    if self.dist[v][w] != UNREACHABLE {
                        root[w] = v;
                    }
                }
            }
        }
        self.edges
            .iter()
            .all(|&(a, b)| self.dist[root[a]][a] != self.dist[root[a]][b])
    }

    /// Vertices on some shortest `a`–`b` path.
    pub fn interval(&self, a: usize, b: usize) -> FixedBitSet {
        let n = self.vertex_count();
        let mut set = FixedBitSet::with_capacity(n);
        let d = self.dist[a][b];
        if d == UNREACHABLE {
            return set;
        }
        for w in 0..n {
            if self.dist[a][w] != UNREACHABLE && self.dist[a][w] + self.dist[w][b] == d {
                set.insert(w);
            }
        }
        set
    }

    /// Induced subgraph on `vertices` (in the given order) with its own
    /// distances.
    pub fn induced(&self, vertices: &[usize]) -> MetricGraph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(a, b)| pos[*a] != usize::MAX && pos[*b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]))
            .collect();
        let mut g = MetricGraph::new(vertices.len(), &edges).expect("induced subgraph is simple");
        if let Some(l) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Induced subgraph distances agree with the host's.
    pub fn is_isometric_subset(&self, vertices: &[usize]) -> bool {
        let sub = self.induced(vertices);
        vertices.iter().enumerate().all(|(i, &a)| {
            vertices
                .iter()
                .enumerate()
                .all(|(j, &b)| sub.distance(i, j) == self.distance(a, b))
        })
    }

    /// Every shortest path between two members stays inside the set.
    pub fn is_convex_subset(&self, vertices: &[usize]) -> bool {
        let mut inside = FixedBitSet::with_capacity(self.vertex_count());
        for &v in vertices {
            inside.insert(v);
        }
        vertices.iter().all(|&a| {
            vertices
                .iter()
                .all(|&b| a > b || self.interval(a, b).is_subset(&inside))
        })
    }

    /// Labels are injective and Hamming distance equals graph distance.
    pub fn labels_are_isometric(&self) -> bool {
        let Some(l) = &self.labels else {
            return false;
        };
        let n = self.vertex_count();
        (0..n).all(|a| (a + 1..n).all(|b| l[a].hamming(&l[b]) as u32 == self.dist[a][b]))
    }

    /// Edge sets compared through labels: two labelled graphs are equal iff
    /// their label sets and label-pair edge sets agree.
    pub fn labelled_shape(&self) -> Option<(Vec<BinaryLabel>, Vec<(BinaryLabel, BinaryLabel)>)> {
        let l = self.labels.as_ref()?;
        let mut vs = l.clone();
        vs.sort();
        let mut es: Vec<(BinaryLabel, BinaryLabel)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (l[a].clone(), l[b].clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        es.sort();
        Some((vs, es))
    }
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut d = vec![UNREACHABLE; adj.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if d[w] == UNREACHABLE {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Path on `n` vertices.
pub fn path(n: usize) -> MetricGraph {
    let e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    MetricGraph::new(n, &e).unwrap()
}

/// Cycle on `n` vertices.
pub fn cycle(n: usize) -> MetricGraph {
    let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MetricGraph::new(n, &e).unwrap()
}

/// Hypercube `Q_d` labelled by its coordinates.
pub fn hypercube(d: usize) -> MetricGraph {
    let n = 1usize << d;
    let mut e = Vec::new();
    for v in 0..n {
        for k in 0..d {
            let w = v ^ (1 << k);
            if v < w {
                e.push((v, w));
            }
        }
    }
    let labels = (0..n)
        .map(|v| BinaryLabel::from_bits((0..d).map(|k| v >> (d - 1 - k) & 1 == 1).collect()))
        .collect();
    MetricGraph::new(n, &e).unwrap().with_labels(labels).unwrap()
}

/// Complete bipartite graph `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> MetricGraph {
    let mut e = Vec::new();
    for i in 0..a {
        for j in 0..b {
            e.push((i, a + j));
        }
    }
    MetricGraph::new(a + b, &e).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        let c = cycle(6);
        assert_eq!(c.distance(0, 3), 3);
        assert_eq!(c.distance(1, 5), 2);
        assert!(c.is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert_eq!(c.interval(0, 3).count_ones(..), 6);
        assert_eq!(c.interval(0, 2).count_ones(..), 3);
    }

    #[test]
    fn convexity() {
        let c = cycle(6);
        assert!(c.is_convex_subset(&[0, 1, 2]));
        assert!(!c.is_convex_subset(&[0, 1, 2, 3]));
        assert!(c.is_isometric_subset(&[0, 1, 2, 3]));
        assert!(!c.is_isometric_subset(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn hypercube_labels_are_isometric() {
        assert!(hypercube(3).labels_are_isometric());
        assert_eq!(hypercube(3).edge_count(), 12);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(MetricGraph::new(2, &[(0, 0)]).is_err());
        assert!(MetricGraph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(MetricGraph::new(2, &[(0, 2)]).is_err());
    }
}
