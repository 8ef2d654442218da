use super::daisy::is_o_closed;
use super::MetricGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Expansion {
    pub graph: MetricGraph,
    /// Base vertex and side (`false` for the `V1` copy) of each new vertex.
    pub origin: Vec<(usize, bool)>,
    /// The overlap `V1 ∩ V2` is convex in the base.
    pub convex: bool,
    /// `V1` is the whole base.
    pub peripheral: bool,
    /// Peripheral, the base is labelled and the overlap is o-closed.
    pub le: bool,
}

fn sorted_unique(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Copies `⟨V1⟩` and `⟨V2⟩` and joins the two copies of each overlap vertex.
/// The `V1` copies come first, in base order, then the `V2` copies. When the
/// base is labelled, `V1` copies get a trailing 0 and `V2` copies a 1.
pub fn expand(base: &MetricGraph, v1: &[usize], v2: &[usize]) -> Result<Expansion> {
    let n = base.vertex_count();
    let v1 = sorted_unique(v1);
    let v2 = sorted_unique(v2);
    if v1.iter().chain(&v2).any(|&v| v >= n) {
        return Err(Error::NotAnExpansion("vertex out of range".into()));
    }
    let mut side = vec![(false, false); n];
    for &v in &v1 {
        side[v].0 = true;
    }
    for &v in &v2 {
        side[v].1 = true;
    }
    if side.iter().any(|&(a, b)| !a && !b) {
        return Err(Error::NotAnExpansion("V1 and V2 do not cover the graph".into()));
    }
    let overlap: Vec<usize> = (0..n).filter(|&v| side[v] == (true, true)).collect();
    if overlap.is_empty() {
        return Err(Error::NotAnExpansion("V1 and V2 are disjoint".into()));
    }
    for &(a, b) in base.edges() {
        let only1 = |v: usize| side[v] == (true, false);
        let only2 = |v: usize| side[v] == (false, true);
        if (only1(a) && only2(b)) || (only2(a) && only1(b)) {
            return Err(Error::NotAnExpansion(format!("edge ({a}, {b}) joins the private parts")));
        }
    }
    if !base.is_isometric_subset(&v1) || !base.is_isometric_subset(&v2) {
        return Err(Error::NotAnExpansion("a side is not isometric".into()));
    }

    let mut origin: Vec<(usize, bool)> = v1.iter().map(|&v| (v, false)).collect();
    origin.extend(v2.iter().map(|&v| (v, true)));
    let mut idx1 = vec![usize::MAX; n];
    let mut idx2 = vec![usize::MAX; n];
    for (i, &(v, s)) in origin.iter().enumerate() {
        if s {
            idx2[v] = i;
        } else {
            idx1[v] = i;
        }
    }
    let mut edges = Vec::new();
    for &(a, b) in base.edges() {
        if idx1[a] != usize::MAX && idx1[b] != usize::MAX {
            edges.push((idx1[a], idx1[b]));
        }
        if idx2[a] != usize::MAX && idx2[b] != usize::MAX {
            edges.push((idx2[a], idx2[b]));
        }
    }
    for &v in &overlap {
        edges.push((idx1[v], idx2[v]));
    }
    let mut graph = MetricGraph::new(origin.len(), &edges)?;
    if let Some(l) = base.labels() {
        let labels = origin.iter().map(|&(v, s)| l[v].with_appended(s)).collect();
        graph = graph.with_labels(labels)?;
    }
    let peripheral = v1.len() == n;
    let le = peripheral && base.labels().is_some_and(|l| is_o_closed(l, &overlap));
    Ok(Expansion {
        graph,
        origin,
        convex: base.is_convex_subset(&overlap),
        peripheral,
        le,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::BinaryLabel;
    use crate::cube_kit::metric::path;

    #[test]
    fn k1_to_k2_to_p3_to_branched5_g3() {
        let k1 = MetricGraph::new(1, &[]).unwrap().with_labels(vec![BinaryLabel::zeros(0)]).unwrap();
        let k2 = expand(&k1, &[0], &[0]).unwrap();
        assert_eq!((k2.graph.vertex_count(), k2.graph.edge_count()), (2, 1));
        assert!(k2.peripheral && k2.convex && k2.le);

        // 0 -- 1 labelled 0 / 1; copy the 0 end
        let p3 = expand(&k2.graph, &[0, 1], &[0]).unwrap();
        assert_eq!((p3.graph.vertex_count(), p3.graph.edge_count()), (3, 2));
        assert!(p3.le);
        let got: Vec<String> = p3.graph.labels().unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(got, vec!["00", "10", "01"]);

        // middle plus the 01 end
        let g3 = expand(&p3.graph, &[0, 1, 2], &[0, 2]).unwrap();
        assert_eq!((g3.graph.vertex_count(), g3.graph.edge_count()), (5, 5));
        assert!(g3.convex && g3.le);
    }

    #[test]
    fn rejects_non_expansions() {
        let p = path(3);
        assert!(expand(&p, &[0], &[2]).is_err());
        assert!(expand(&p, &[0, 1], &[1]).is_err());
        assert!(matches!(expand(&p, &[0, 2], &[0, 1, 2]), Err(Error::NotAnExpansion(_))));
    }

    #[test]
    fn non_convex_overlap_flagged() {
        let p = path(3);
        let e = expand(&p, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert!(e.convex && e.peripheral && !e.le);
        let c = crate::cube_kit::metric::cycle(4);
        let e = expand(&c, &[0, 1, 2, 3], &[0, 1, 2]).unwrap();
        assert!(!e.convex);
    }
}
