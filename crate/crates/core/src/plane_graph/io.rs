use serde::{Deserialize, Serialize};

use super::PlaneGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFileVertex {
    pub id: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
}

/// `{"vertices":[{"id","x","y"}...],"edges":[[u,v]...]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<GraphFileVertex>,
    pub edges: Vec<[i64; 2]>,
}

impl GraphFile {
    pub fn from_json(text: &str) -> Result<GraphFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        crate::to_sorted_json(self)
    }

    pub fn edge_pairs(&self) -> Vec<(i64, i64)> {
        self.edges.iter().map(|e| (e[0], e[1])).collect()
    }
}

impl PlaneGraph {
    /// Every vertex needs coordinates here.
    pub fn from_graph_file(file: &GraphFile) -> Result<PlaneGraph> {
        let mut vs = Vec::with_capacity(file.vertices.len());
        for v in &file.vertices {
            match (v.x, v.y) {
                (Some(x), Some(y)) => vs.push((v.id, x, y)),
                _ => {
                    return Err(Error::InvalidInput(format!("vertex {} has no coordinates", v.id)));
                }
            }
        }
        PlaneGraph::from_coordinates(&vs, &file.edge_pairs())
    }

    pub fn from_json(text: &str) -> Result<PlaneGraph> {
        PlaneGraph::from_graph_file(&GraphFile::from_json(text)?)
    }

    pub fn to_graph_file(&self) -> GraphFile {
        GraphFile {
            vertices: (0..self.vertex_count())
                .map(|v| {
                    let p = self.point(v);
                    GraphFileVertex {
                        id: self.id(v),
                        x: p.map(|p| p.x),
                        y: p.map(|p| p.y),
                    }
                })
                .collect(),
            edges: self.edges().map(|(u, v)| [self.id(u), self.id(v)]).collect(),
        }
    }
}
