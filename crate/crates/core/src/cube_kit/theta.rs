use serde::Serialize;

use super::MetricGraph;
use crate::coding::BinaryLabel;
use crate::plane_graph::UnionFind;

/// `x1y1 Θ x2y2` iff `d(x1,x2) + d(y1,y2) != d(x1,y2) + d(x2,y1)`.
pub fn theta_related(mg: &MetricGraph, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let d = |a, b| mg.distance(a, b) as i64;
    let (x1, y1) = e1;
    let (x2, y2) = e2;
    d(x1, x2) + d(y1, y2) != d(x1, y2) + d(x2, y1)
}

/// Transitive closure of Θ over the edges of a graph. Classes are lists of
/// edge indices into [`MetricGraph::edges`], ordered by their first edge.
#[derive(Clone, Debug)]
pub struct ThetaClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Raw Θ already related every pair inside each class.
    pub raw_transitive: bool,
}

impl ThetaClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn theta_classes(mg: &MetricGraph) -> ThetaClasses {
    let edges = mg.edges();
    let m = edges.len();
    let mut uf = UnionFind::new(m);
    let mut related = vec![vec![false; m]; m];
    for i in 0..m {
        related[i][i] = true;
        for j in i + 1..m {
            if theta_related(mg, edges[i], edges[j]) {
                related[i][j] = true;
                related[j][i] = true;
                uf.union(i, j);
            }
        }
    }
    let mut root_class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; m];
    for e in 0..m {
        let r = uf.find(e);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[e] = root_class[r];
        classes[root_class[r]].push(e);
    }
    let raw_transitive = classes
        .iter()
        .all(|c| c.iter().all(|&a| c.iter().all(|&b| related[a][b])));
    ThetaClasses {
        classes,
        class_of,
        raw_transitive,
    }
}

/// The two halves cut out by one Θ-class, for its first edge `xy`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSplit {
    pub edge: (usize, usize),
    pub w_xy: Vec<usize>,
    pub w_yx: Vec<usize>,
    pub u_xy: Vec<usize>,
    pub u_yx: Vec<usize>,
    pub peripheral_xy: bool,
    pub peripheral_yx: bool,
}

impl ClassSplit {
    pub fn is_peripheral(&self) -> bool {
        self.peripheral_xy || self.peripheral_yx
    }
}

pub fn split_class(mg: &MetricGraph, classes: &ThetaClasses, k: usize) -> ClassSplit {
    let class = &classes.classes[k];
    let (x, y) = mg.edges()[class[0]];
    let n = mg.vertex_count();
    let w_xy: Vec<usize> = (0..n).filter(|&w| mg.distance(w, x) < mg.distance(w, y)).collect();
    let w_yx: Vec<usize> = (0..n).filter(|&w| mg.distance(w, y) < mg.distance(w, x)).collect();
    let mut touched = vec![false; n];
    for &e in class {
        let (a, b) = mg.edges()[e];
        touched[a] = true;
        touched[b] = true;
    }
    let u_xy: Vec<usize> = w_xy.iter().copied().filter(|&v| touched[v]).collect();
    let u_yx: Vec<usize> = w_yx.iter().copied().filter(|&v| touched[v]).collect();
    ClassSplit {
        edge: (x, y),
        peripheral_xy: u_xy == w_xy,
        peripheral_yx: u_yx == w_yx,
        w_xy,
        w_yx,
        u_xy,
        u_yx,
    }
}

#[derive(Clone, Debug)]
pub struct PartialCubeVerdict {
    pub is_partial_cube: bool,
    pub idim: usize,
    /// One bit per Θ-class; vertex 0 is all zeros.
    pub labels: Option<Vec<BinaryLabel>>,
    pub classes: ThetaClasses,
    pub reason: Option<String>,
}

pub fn is_partial_cube(mg: &MetricGraph) -> PartialCubeVerdict {
    let classes = theta_classes(mg);
    let fail = |classes, reason: &str| PartialCubeVerdict {
        is_partial_cube: false,
        idim: 0,
        labels: None,
        classes,
        reason: Some(reason.to_string()),
    };
    if !mg.is_connected() {
        return fail(classes, "not connected");
    }
    if !mg.is_bipartite() {
        return fail(classes, "not bipartite");
    }
    if !classes.raw_transitive {
        return fail(classes, "Θ is not transitive");
    }
    let n = mg.vertex_count();
    let mut bits = vec![Vec::with_capacity(classes.len()); n];
    for k in 0..classes.len() {
        let s = split_class(mg, &classes, k);
        if s.w_xy.len() + s.w_yx.len() != n {
            return fail(classes, "a Θ-class does not split the vertices in two");
        }
        // removing the class must leave exactly the two halves
        let mut uf = UnionFind::new(n);
        for (e, &(a, b)) in mg.edges().iter().enumerate() {
            if classes.class_of[e] != k {
                uf.union(a, b);
            }
        }
        let r0 = uf.find(s.w_xy[0]);
        let r1 = uf.find(s.w_yx[0]);
        if r0 == r1
            || s.w_xy.iter().any(|&v| uf.find(v) != r0)
            || s.w_yx.iter().any(|&v| uf.find(v) != r1)
        {
            return fail(classes, "removing a Θ-class does not leave two components");
        }
        let zero_side_is_xy = s.w_xy.contains(&0);
        let mut on_xy = vec![false; n];
        for &v in &s.w_xy {
            on_xy[v] = true;
        }
        for (v, b) in bits.iter_mut().enumerate() {
            b.push(on_xy[v] != zero_side_is_xy);
        }
    }
    let labels: Vec<BinaryLabel> = bits.into_iter().map(BinaryLabel::from_bits).collect();
    let labelled = mg.clone().with_labels(labels.clone()).expect("one label per vertex");
    if !labelled.labels_are_isometric() {
        return fail(classes, "class labels are not an isometric embedding");
    }
    PartialCubeVerdict {
        is_partial_cube: true,
        idim: classes.len(),
        labels: Some(labels),
        classes,
        reason: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_kit::metric::{complete_bipartite, cycle, hypercube, path};

    #[test]
    fn theta_on_cycles() {
        let c4 = cycle(4);
        assert!(theta_related(&c4, (0, 1), (2, 3)));
        assert!(!theta_related(&c4, (0, 1), (1, 2)));
        let c6 = cycle(6);
        assert!(theta_related(&c6, (0, 1), (3, 4)));
        assert!(!theta_related(&c6, (0, 1), (2, 3)));
    }

    #[test]
    fn q3_classes() {
        let t = theta_classes(&hypercube(3));
        assert_eq!(t.len(), 3);
        assert!(t.classes.iter().all(|c| c.len() == 4));
        assert!(t.raw_transitive);
    }

    #[test]
    fn k23_is_not_a_partial_cube() {
        let k = complete_bipartite(2, 3);
        assert!(!theta_classes(&k).raw_transitive);
        assert!(!is_partial_cube(&k).is_partial_cube);
    }

    #[test]
    fn paths_and_cycles() {
        let v = is_partial_cube(&path(3));
        assert!(v.is_partial_cube);
        assert_eq!(v.idim, 2);
        assert_eq!(is_partial_cube(&cycle(6)).idim, 3);
        assert!(!is_partial_cube(&cycle(5)).is_partial_cube);
    }

    #[test]
    fn splits() {
        let q2 = cycle(4);
        let t = theta_classes(&q2);
        for k in 0..t.len() {
            let s = split_class(&q2, &t, k);
            assert!(s.peripheral_xy && s.peripheral_yx);
        }
        let p3 = path(3);
        let t = theta_classes(&p3);
        for k in 0..t.len() {
            let s = split_class(&p3, &t, k);
            assert!(s.is_peripheral());
            let leaf_side = if s.w_xy.len() == 1 { s.peripheral_xy } else { s.peripheral_yx };
            assert!(leaf_side);
        }
    }
}
