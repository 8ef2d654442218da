use std::fmt;

use petgraph::algo::{maximum_matching, tarjan_scc};
use petgraph::graph::{DiGraph, UnGraph};
use serde::Serialize;

use super::{Color, EdgeSet, PlaneGraph, UnionFind};
use crate::error::{Error, Result};

/// First failed clause of the peripheral 2-colourability test. Vertex and
/// edge witnesses carry external vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Violation {
    TooFewVertices { vertices: usize },
    Disconnected,
    NoPerfectMatching,
    NotElementary { edge: [i64; 2] },
    DegreeOutOfRange { vertex: i64, degree: usize },
    InteriorDegreeThree { vertex: i64 },
    PeripheryNotCycle,
    NotAlternating { vertex: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices { vertices } => write!(f, "only {vertices} vertices"),
            Violation::Disconnected => write!(f, "graph is disconnected"),
            Violation::NoPerfectMatching => write!(f, "no perfect matching"),
            Violation::NotElementary { edge } => {
                write!(f, "edge {}-{} lies in no perfect matching", edge[0], edge[1])
            }
            Violation::DegreeOutOfRange { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}")
            }
            Violation::InteriorDegreeThree { vertex } => {
                write!(f, "degree-3 vertex {vertex} is not on the periphery")
            }
            Violation::PeripheryNotCycle => write!(f, "periphery is not a cycle"),
            Violation::NotAlternating { vertex } => write!(
                f,
                "degree-3 vertex {vertex} has the colour of the previous one clockwise"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeripheralVerdict {
    pub peripherally_two_colorable: bool,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug)]
pub struct ElementaryAnalysis {
    /// Edges contained in at least one perfect matching.
    pub allowed: EdgeSet,
    /// Edge sets of the connected components of the allowed subgraph.
    pub components: Vec<EdgeSet>,
    pub is_elementary: bool,
    pub is_weakly_elementary: bool,
}

impl ElementaryAnalysis {
    pub fn forbidden(&self) -> EdgeSet {
        let mut f = self.allowed.clone();
        f.toggle_range(..);
        f
    }
}

impl PlaneGraph {
    fn some_perfect_matching(&self) -> Option<EdgeSet> {
        let mut ug: UnGraph<(), usize> = UnGraph::with_capacity(self.vertex_count(), self.edge_count());
        let nodes: Vec<_> = (0..self.vertex_count()).map(|_| ug.add_node(())).collect();
        for (e, (u, v)) in self.edges().enumerate() {
            ug.add_edge(nodes[u], nodes[v], e);
        }
        let m = maximum_matching(&ug);
        if !m.is_perfect() {
            return None;
        }
        let mut set = self.empty_edge_set();
        for (a, b) in m.edges() {
            set.insert(self.edge_between(a.index(), b.index()).unwrap());
        }
        Some(set)
    }

    /// Allowed/forbidden edges, elementary components and the
    /// weakly-elementary verdict.
    ///
    /// A non-matching edge lies in some perfect matching iff it is on an
    /// alternating cycle, i.e. iff its ends share a strongly connected
    /// component once matching edges point white→black and the rest
    /// black→white.
    pub fn elementary_analysis(&self) -> Result<ElementaryAnalysis> {
        let m = self.some_perfect_matching().ok_or(Error::NoPerfectMatching)?;
        let mut dg: DiGraph<(), ()> = DiGraph::with_capacity(self.vertex_count(), self.edge_count());
        let nodes: Vec<_> = (0..self.vertex_count()).map(|_| dg.add_node(())).collect();
        for (e, (u, v)) in self.edges().enumerate() {
            let (w, b) = if self.color(u) == Color::White { (u, v) } else { (v, u) };
            if m.contains(e) {
                dg.add_edge(nodes[w], nodes[b], ());
            } else {
                dg.add_edge(nodes[b], nodes[w], ());
            }
        }
        let mut scc = vec![0usize; self.vertex_count()];
        for (k, comp) in tarjan_scc(&dg).into_iter().enumerate() {
            for n in comp {
                scc[n.index()] = k;
            }
        }
        let mut allowed = self.empty_edge_set();
        for (e, (u, v)) in self.edges().enumerate() {
            if m.contains(e) || scc[u] == scc[v] {
                allowed.insert(e);
            }
        }

        let mut uf = UnionFind::new(self.vertex_count());
        for e in allowed.ones() {
            let (u, v) = self.edge(e);
            uf.union(u, v);
        }
        let mut by_root: std::collections::BTreeMap<usize, EdgeSet> = Default::default();
        for e in allowed.ones() {
            let r = uf.find(self.edge(e).0);
            by_root.entry(r).or_insert_with(|| self.empty_edge_set()).insert(e);
        }
        let components: Vec<EdgeSet> = by_root.into_values().collect();

        let is_elementary = self.is_connected() && allowed.count_ones(..) == self.edge_count();
        let (sub, restriction) = self.subgraph(&allowed)?;
        let is_weakly_elementary = sub
            .finite_faces()
            .iter()
            .all(|f| restriction.parent_face(f.id).is_some());
        Ok(ElementaryAnalysis {
            allowed,
            components,
            is_elementary,
            is_weakly_elementary,
        })
    }

    /// Peripheral 2-colourability with the first failing clause as witness.
    pub fn is_peripherally_two_colorable(&self) -> PeripheralVerdict {
        let fail = |v: Violation| PeripheralVerdict {
            peripherally_two_colorable: false,
            violation: Some(v),
        };
        let n = self.vertex_count();
        if n <= 2 {
            return fail(Violation::TooFewVertices { vertices: n });
        }
        if !self.is_connected() {
            return fail(Violation::Disconnected);
        }
        let analysis = match self.elementary_analysis() {
            Ok(a) => a,
            Err(_) => return fail(Violation::NoPerfectMatching),
        };
        if let Some(e) = analysis.forbidden().ones().next() {
            let (u, v) = self.edge(e);
            return fail(Violation::NotElementary {
                edge: [self.id(u), self.id(v)],
            });
        }
        for v in 0..n {
            let d = self.degree(v);
            if !(2..=3).contains(&d) {
                return fail(Violation::DegreeOutOfRange { vertex: self.id(v), degree: d });
            }
        }
        for v in 0..n {
            if self.degree(v) == 3 && !self.is_peripheral_vertex(v) {
                return fail(Violation::InteriorDegreeThree { vertex: self.id(v) });
            }
        }
        let Some(cycle) = self.periphery_cycle() else {
            return fail(Violation::PeripheryNotCycle);
        };
        let cubic: Vec<usize> = cycle.iter().copied().filter(|&v| self.degree(v) == 3).collect();
        for k in 0..cubic.len() {
            let a = cubic[k];
            let b = cubic[(k + 1) % cubic.len()];
            if cubic.len() > 1 && self.color(a) == self.color(b) {
                return fail(Violation::NotAlternating { vertex: self.id(b) });
            }
        }
        PeripheralVerdict {
            peripherally_two_colorable: true,
            violation: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matchings::MatchingFamily;

    #[test]
    fn branched5_is_peripherally_two_colorable() {
        let v = fixtures::branched5().graph.is_peripherally_two_colorable();
        assert!(v.peripherally_two_colorable, "{:?}", v.violation);
    }

    #[test]
    fn pyrene_fails_on_interior_vertex() {
        let g = fixtures::pyrene().graph;
        let v = g.is_peripherally_two_colorable();
        assert!(!v.peripherally_two_colorable);
        match v.violation {
            Some(Violation::InteriorDegreeThree { vertex }) => {
                let i = g.index_of(vertex).unwrap();
                assert_eq!(g.degree(i), 3);
                assert!(!g.is_peripheral_vertex(i));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hexagon_passes() {
        assert!(fixtures::hexagon().is_peripherally_two_colorable().peripherally_two_colorable);
    }

    #[test]
    fn anthracene_does_not_alternate() {
        let g = fixtures::benzenoid(&[(0, 0), (1, 0), (2, 0)]).graph;
        let v = g.is_peripherally_two_colorable();
        assert!(matches!(v.violation, Some(Violation::NotAlternating { .. })));
    }

    #[test]
    fn verdict_is_color_symmetric() {
        for b in fixtures::catacondensed_upto(4) {
            let g = b.graph;
            assert_eq!(
                g.is_peripherally_two_colorable().peripherally_two_colorable,
                g.swap_colors().is_peripherally_two_colorable().peripherally_two_colorable
            );
        }
    }

    #[test]
    fn two_hexagons_are_not_p2c_but_weakly_elementary() {
        let g = fixtures::two_hexagons();
        assert_eq!(
            g.is_peripherally_two_colorable().violation,
            Some(Violation::Disconnected)
        );
        let a = g.elementary_analysis().unwrap();
        assert!(!a.is_elementary);
        assert!(a.is_weakly_elementary);
        assert_eq!(a.components.len(), 2);
    }

    #[test]
    fn branched5_is_elementary() {
        let a = fixtures::branched5().graph.elementary_analysis().unwrap();
        assert!(a.is_elementary);
        assert!(a.is_weakly_elementary);
        assert_eq!(a.components.len(), 1);
    }

    #[test]
    fn pendant_path_forces_edges() {
        let g = fixtures::hexagon_with_pendant();
        let a = g.elementary_analysis().unwrap();
        assert!(!a.is_elementary);
        assert_eq!(a.forbidden().count_ones(..), 1);
        assert!(a.is_weakly_elementary);
        assert!(!g.is_peripherally_two_colorable().peripherally_two_colorable);
    }

    #[test]
    fn nested_hexagons_are_not_weakly_elementary() {
        let g = fixtures::nested_hexagons();
        let a = g.elementary_analysis().unwrap();
        assert!(!a.is_elementary);
        assert!(!a.is_weakly_elementary);
        assert_eq!(a.forbidden().count_ones(..), 2);
    }

    #[test]
    fn allowed_edges_agree_with_enumeration() {
        let mut graphs: Vec<PlaneGraph> = fixtures::catacondensed_upto(4).into_iter().map(|b| b.graph).collect();
        graphs.push(fixtures::pyrene().graph);
        graphs.push(fixtures::hexagon_with_pendant());
        graphs.push(fixtures::nested_hexagons());
        for g in graphs {
            let fam = MatchingFamily::enumerate(&g, 10_000).unwrap();
            let mut union = g.empty_edge_set();
            for m in fam.iter() {
                union.union_with(&m.edges);
            }
            assert_eq!(g.elementary_analysis().unwrap().allowed, union);
        }
    }

    #[test]
    fn odd_vertex_count_has_no_matching() {
        let v = [(0, 0.0, 0.0), (1, 1.0, 0.0), (2, 2.0, 0.0)];
        let g = PlaneGraph::from_coordinates(&v, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(g.elementary_analysis(), Err(Error::NoPerfectMatching)));
        assert_eq!(
            g.is_peripherally_two_colorable().violation,
            Some(Violation::NoPerfectMatching)
        );
    }
}
