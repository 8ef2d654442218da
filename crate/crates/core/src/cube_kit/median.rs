use serde::Serialize;

use super::theta::{split_class, ThetaClasses};
use super::MetricGraph;

/// Every triple has exactly one vertex in all three pairwise intervals.
pub fn is_median(mg: &MetricGraph) -> bool {
    if !mg.is_connected() {
        return false;
    }
    let n = mg.vertex_count();
    let intervals: Vec<Vec<_>> = (0..n).map(|a| (0..n).map(|b| mg.interval(a, b)).collect()).collect();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let mut s = intervals[u][v].clone();
                s.intersect_with(&intervals[v][w]);
                s.intersect_with(&intervals[u][w]);
                if s.count_ones(..) != 1 {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MedianSplitReport {
    pub class: usize,
    /// The class is a matching and induces an isomorphism `⟨U_xy⟩ ≅ ⟨U_yx⟩`.
    pub matching_isomorphism: bool,
    /// `⟨U_xy⟩` convex in `⟨W_xy⟩` and `⟨U_yx⟩` convex in `⟨W_yx⟩`.
    pub boundaries_convex: bool,
    /// `⟨W_xy⟩` and `⟨W_yx⟩` are median graphs.
    pub sides_median: bool,
}

impl MedianSplitReport {
    pub fn passes(&self) -> bool {
        self.matching_isomorphism && self.boundaries_convex && self.sides_median
    }
}

fn convex_within(mg: &MetricGraph, w: &[usize], u: &[usize]) -> bool {
    let sub = mg.induced(w);
    let local: Vec<usize> = u.iter().map(|v| w.iter().position(|x| x == v).unwrap()).collect();
    sub.is_convex_subset(&local)
}

/// The three-clause median characterisation evaluated on one class.
pub fn check_median_split(mg: &MetricGraph, classes: &ThetaClasses, k: usize) -> MedianSplitReport {
    let s = split_class(mg, classes, k);
    let n = mg.vertex_count();
    let mut partner = vec![usize::MAX; n];
    let mut is_matching = true;
    for &e in &classes.classes[k] {
        let (a, b) = mg.edges()[e];
        if partner[a] != usize::MAX || partner[b] != usize::MAX {
            is_matching = false;
        }
        partner[a] = b;
        partner[b] = a;
    }
    let in_yx = |v: usize| s.w_yx.binary_search(&v).is_ok();
    let matching_isomorphism = is_matching
        && s.u_xy.len() == s.u_yx.len()
        && s.u_xy.iter().all(|&a| partner[a] != usize::MAX && in_yx(partner[a]))
        && s.u_xy.iter().all(|&a| {
            s.u_xy
                .iter()
                .all(|&b| mg.adjacent(a, b) == mg.adjacent(partner[a], partner[b]))
        });
    let boundaries_convex = convex_within(mg, &s.w_xy, &s.u_xy) && convex_within(mg, &s.w_yx, &s.u_yx);
    let sides_median = is_median(&mg.induced(&s.w_xy)) && is_median(&mg.induced(&s.w_yx));
    MedianSplitReport {
        class: k,
        matching_isomorphism,
        boundaries_convex,
        sides_median,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_kit::metric::{complete_bipartite, cycle, hypercube, path};
    use crate::cube_kit::theta::theta_classes;

    #[test]
    fn trees_and_cubes() {
        assert!(is_median(&path(5)));
        let star = MetricGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_median(&star));
        assert!(is_median(&hypercube(3)));
        assert!(!is_median(&cycle(6)));
        assert!(!is_median(&complete_bipartite(2, 3)));
    }

    #[test]
    fn split_reports() {
        let q = hypercube(3);
        let t = theta_classes(&q);
        assert!((0..t.len()).all(|k| check_median_split(&q, &t, k).passes()));
        let c = cycle(6);
        let t = theta_classes(&c);
        assert!((0..t.len()).all(|k| !check_median_split(&c, &t, k).passes()));
    }
}
