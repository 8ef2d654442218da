//! Reducible faces, reducible face decompositions, and per-instance checks
//! of the structure they impose on resonance graphs.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::coding::{daisy_bits, Alpha, BinaryLabel};
use crate::cube_kit::{expand, theta_classes, MetricGraph};
use crate::error::{Error, Result};
use crate::matchings::{handle_predicate, matching_subset, HandleState, MatchingFamily, Selector};
use crate::plane_graph::{EdgeSet, FaceId, PlaneGraph, Restriction, VertexId};
use crate::resonance::{build_resonance, ResonanceGraph};

/// Vertices of the path formed by `edges`, from its smaller end, or `None`
/// if the edges are not a single path.
fn path_of(g: &PlaneGraph, edges: &EdgeSet) -> Option<Vec<VertexId>> {
    let mut deg: HashMap<VertexId, Vec<(VertexId, usize)>> = HashMap::new();
    for e in edges.ones() {
        let (u, v) = g.edge(e);
        deg.entry(u).or_default().push((v, e));
        deg.entry(v).or_default().push((u, e));
    }
    if deg.values().any(|l| l.len() > 2) {
        return None;
    }
    let start = deg.iter().filter(|(_, l)| l.len() == 1).map(|(&v, _)| v).min()?;
    let mut walk = vec![start];
    let mut prev_e = usize::MAX;
    let mut cur = start;
    loop {
        let next = deg[&cur].iter().find(|&&(_, e)| e != prev_e);
        match next {
            Some(&(w, e)) if walk.len() <= deg.len() => {
                walk.push(w);
                prev_e = e;
                cur = w;
                if deg[&w].len() == 1 {
                    break;
                }
            }
            _ => return None,
        }
    }
    (walk.len() == deg.len()).then_some(walk)
}

fn peripheral_part(g: &PlaneGraph, f: FaceId) -> EdgeSet {
    let mut common = g.face(f).edges.clone();
    common.intersect_with(&g.infinite_face().edges);
    common
}

/// Finite faces meeting the periphery in one odd path whose removal (inner
/// vertices and edges) leaves an elementary graph.
pub fn find_reducible_faces(g: &PlaneGraph) -> Vec<FaceId> {
    if g.finite_face_count() < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f in g.finite_faces() {
        let common = peripheral_part(g, f.id);
        let k = common.count_ones(..);
        if k == 0 || k == f.edges.count_ones(..) || k.is_multiple_of(2) {
            continue;
        }
        let Some(path) = path_of(g, &common) else {
            continue;
        };
        if path[1..path.len() - 1].iter().any(|&v| g.degree(v) != 2) {
            continue;
        }
        let mut rest = g.all_edges();
        rest.difference_with(&common);
        let reducible = g
            .subgraph(&rest)
            .ok()
            .filter(|(h, _)| h.finite_face_count() + 1 == g.finite_face_count())
            .and_then(|(h, _)| h.elementary_analysis().ok())
            .is_some_and(|a| a.is_elementary);
        if reducible {
            out.push(f.id);
        }
    }
    out
}

/// A reducible face decomposition `s_1, ..., s_n`.
#[derive(Clone, Debug)]
pub struct RfdSequence {
    /// Face ids of the input graph in decomposition order.
    pub order: Vec<FaceId>,
    /// The input graph renumbered so that face `k` is `s_{k+1}`.
    pub graph: PlaneGraph,
    /// `E(G_1), ..., E(G_n)`.
    pub prefixes: Vec<EdgeSet>,
    /// `P_i` as a vertex path for `i >= 2`; entry 0 is the cycle of `s_1`.
    pub ears: Vec<Vec<VertexId>>,
    /// Present when the graph is peripherally 2-colourable.
    pub alpha: Option<Alpha>,
    pub notes: Vec<String>,
}

impl RfdSequence {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// `G_i` (1-based) as a subgraph of [`RfdSequence::graph`]; its face `k`
    /// is `s_{k+1}`.
    pub fn prefix_graph(&self, i: usize) -> Result<(PlaneGraph, Restriction)> {
        if i == 0 || i > self.n() {
            return Err(Error::InvalidInput(format!("step {i} outside 1..{}", self.n())));
        }
        self.graph.subgraph(&self.prefixes[i - 1])
    }

    pub fn order_names(&self) -> Vec<String> {
        self.order.iter().map(|f| f.to_string()).collect()
    }
}

/// Validates `order` as a reducible face decomposition and computes the
/// attachment map when the graph is peripherally 2-colourable.
pub fn rfd_from_face_order(g: &PlaneGraph, order: &[FaceId]) -> Result<RfdSequence> {
    let graph = g.with_face_order(order)?;
    let n = order.len();
    let not = |step: usize, reason: String| Error::NotReducibleAtStep { step, reason };
    if n == 0 {
        return Err(not(1, "graph has no finite face".into()));
    }
    let first = graph.face(FaceId(0));
    if !first.is_cycle() {
        return Err(not(1, "boundary of the first face is not a cycle".into()));
    }
    let mut notes = vec![format!(
        "first face {} accepted without constraint; any facial cycle may start a decomposition",
        order[0]
    )];
    let mut prefix = first.edges.clone();
    let mut prefixes = vec![prefix.clone()];
    let mut ears = vec![first.boundary().to_vec()];
    let mut in_prefix = vec![false; graph.vertex_count()];
    for &v in first.boundary() {
        in_prefix[v] = true;
    }
    for i in 2..=n {
        let f = graph.face(FaceId(i - 1));
        let mut new = f.edges.clone();
        new.difference_with(&prefix);
        let path = path_of(&graph, &new).ok_or_else(|| not(i, "new edges do not form one path".into()))?;
        if (path.len() - 1) % 2 == 0 {
            return Err(not(i, format!("path has even length {}", path.len() - 1)));
        }
        let (a, b) = (path[0], path[path.len() - 1]);
        if !in_prefix[a] || !in_prefix[b] {
            return Err(not(i, "path ends are not on the previous graph".into()));
        }
        if path[1..path.len() - 1].iter().any(|&v| in_prefix[v]) {
            return Err(not(i, "path passes through the previous graph".into()));
        }
        prefix.union_with(&new);
        let (sub, r) = graph.subgraph(&prefix).map_err(|e| not(i, e.to_string()))?;
        let faces_ok = sub.finite_face_count() == i
            && (0..i).all(|k| r.parent_face(FaceId(k)) == Some(FaceId(k)));
        if !faces_ok {
            return Err(not(i, "path is not attached in the exterior of the previous graph".into()));
        }
        let own = r.restrict_edges(&new);
        if peripheral_part(&sub, FaceId(i - 1)) != own {
            return Err(not(i, "face does not meet the periphery exactly in the new path".into()));
        }
        for &v in &path {
            in_prefix[v] = true;
        }
        prefixes.push(prefix.clone());
        ears.push(path);
    }
    if prefix.count_ones(..) != graph.edge_count() {
        return Err(not(n, "edges outside every finite face remain".into()));
    }
    let alpha = if graph.is_peripherally_two_colorable().peripherally_two_colorable {
        let mut alpha = Alpha::new();
        for i in 2..=n {
            let own = &graph.face(FaceId(i - 1)).edges;
            let touching: Vec<usize> = (1..i)
                .filter(|&k| !graph.face(FaceId(k - 1)).edges.is_disjoint(own))
                .collect();
            match touching.as_slice() {
                [k] => {
                    alpha.insert(i, *k);
                }
                _ => {
                    return Err(Error::violated(
                        "rfd.alpha_unique",
                        format!("face {} shares edges with {} earlier faces", i, touching.len()),
                    ))
                }
            }
        }
        Some(alpha)
    } else {
        notes.push("graph is not peripherally 2-colourable; attachment map omitted".into());
        None
    };
    Ok(RfdSequence {
        order: order.to_vec(),
        graph,
        prefixes,
        ears,
        alpha,
        notes,
    })
}

/// Peels the reducible face with the smallest id until one face is left;
/// the decomposition is the reverse peeling order.
pub fn auto_rfd(g: &PlaneGraph) -> Result<RfdSequence> {
    let mut remaining = g.all_edges();
    let mut peeled = Vec::new();
    loop {
        let (sub, r) = g.subgraph(&remaining)?;
        let left = sub.finite_face_count();
        if left <= 1 {
            if left == 1 && sub.face(FaceId(0)).is_cycle() {
                peeled.push(r.parent_face(FaceId(0)).expect("inherited face"));
                break;
            }
            return Err(Error::PeelingStuck { remaining: left });
        }
        let Some(&f) = find_reducible_faces(&sub).first() else {
            return Err(Error::PeelingStuck { remaining: left });
        };
        let ear = r.lift_edges(&peripheral_part(&sub, f));
        remaining.difference_with(&ear);
        peeled.push(r.parent_face(f).expect("inherited face"));
    }
    peeled.reverse();
    rfd_from_face_order(g, &peeled)
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseCheck {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<String>,
    pub clause: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl ClauseCheck {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Default)]
struct Checks {
    step: Option<usize>,
    face: Option<String>,
    list: Vec<ClauseCheck>,
}

impl Checks {
    fn check(&mut self, clause: &str, ok: bool, detail: impl Into<String>) -> bool {
        self.list.push(ClauseCheck {
            step: self.step,
            face: self.face.clone(),
            clause: clause.to_string(),
            status: if ok { "pass" } else { "fail" },
            detail: if ok { String::new() } else { detail.into() },
        });
        ok
    }
}

/// First failing check as an error.
pub fn ensure_all(checks: &[ClauseCheck]) -> Result<()> {
    match checks.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(Error::violated(c.clause.clone(), c.detail.clone())),
    }
}

/// The handle subsets of a face agree as the single-handle / all-handle and
/// resonance identities predict.
pub fn handle_subset_checks(g: &PlaneGraph, family: &MatchingFamily, s: FaceId) -> Result<Vec<ClauseCheck>> {
    use Selector::*;
    let d = g.facial_handle_decomposition(s)?;
    let get = |sel| matching_subset(g, family, s, sel);
    let mut c = Checks {
        face: Some(s.to_string()),
        ..Default::default()
    };
    let p_minus = get(AllPMinus)?;
    let p_plus = get(AllPPlus)?;
    for i in 1..=d.m() {
        c.check("handles.one_minus_is_all", get(PMinus(i))? == p_minus, format!("P-{i}"));
        c.check("handles.one_plus_is_all", get(PPlus(i))? == p_plus, format!("P+{i}"));
    }
    c.check("handles.plus_resonant", p_plus == get(AllPPlusResonant)?, "P+ vs P+ds");
    c.check("handles.plus_is_j_minus_resonant", p_plus == get(AllJMinusResonant)?, "P+ vs J-ds");
    let j_plus = get(AllJPlus)?;
    c.check("handles.j_plus_resonant", j_plus == get(AllJPlusResonant)?, "J+ vs J+ds");
    c.check("handles.j_plus_is_p_minus_resonant", j_plus == get(AllPMinusResonant)?, "J+ vs P-ds");
    let mut all: Vec<usize> = p_minus.iter().chain(&p_plus).copied().collect();
    all.sort_unstable();
    c.check("handles.partition", all == (0..family.len()).collect::<Vec<_>>(), "P- and P+ do not partition");
    Ok(c.list)
}

/// Splitting `R(G)` along the edges labelled `s`.
#[derive(Clone, Debug, Serialize)]
pub struct FaceSplit {
    pub face: FaceId,
    /// Indices into `ResonanceGraph::edges`.
    pub f_edges: Vec<usize>,
    pub minus_side: Vec<usize>,
    pub plus_side: Vec<usize>,
    pub u_minus: Vec<usize>,
    pub u_plus: Vec<usize>,
    pub checks: Vec<ClauseCheck>,
}

/// Computes the split and records every structural check; see
/// [`split_by_face`] for the failing form.
pub fn split_report(g: &PlaneGraph, family: &MatchingFamily, r: &ResonanceGraph, s: FaceId) -> Result<FaceSplit> {
    let mut c = Checks {
        face: Some(s.to_string()),
        ..Default::default()
    };
    let f_edges: Vec<usize> = (0..r.edge_count()).filter(|&k| r.edges[k].face == s).collect();
    let mut uf = crate::plane_graph::UnionFind::new(r.vertex_count());
    for e in &r.edges {
        if e.face != s {
            uf.union(e.a, e.b);
        }
    }
    let mut comps: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..r.vertex_count() {
        comps.entry(uf.find(v)).or_default().push(v);
    }
    c.check("split.two_components", comps.len() == 2, format!("{} components", comps.len()));
    let minus = matching_subset(g, family, s, Selector::AllPMinus)?;
    let plus = matching_subset(g, family, s, Selector::AllPPlusResonant)?;
    let comp_sets: BTreeSet<Vec<usize>> = comps.into_values().collect();
    c.check("split.minus_component", comp_sets.contains(&minus), "no component equals P-");
    c.check("split.plus_component", comp_sets.contains(&plus), "no component equals P+ds");

    let mut side = vec![0u8; r.vertex_count()];
    for &v in &minus {
        side[v] = 1;
    }
    for &v in &plus {
        side[v] |= 2;
    }
    let mut hit = vec![0usize; r.vertex_count()];
    let mut crosses = true;
    for &k in &f_edges {
        let e = r.edges[k];
        hit[e.a] += 1;
        hit[e.b] += 1;
        crosses &= side[e.a] ^ side[e.b] == 3;
    }
    let u_minus: Vec<usize> = minus.iter().copied().filter(|&v| hit[v] > 0).collect();
    let u_plus: Vec<usize> = plus.iter().copied().filter(|&v| hit[v] > 0).collect();
    c.check(
        "split.f_is_matching",
        crosses && hit.iter().all(|&h| h <= 1) && u_minus.len() == u_plus.len() && u_minus.len() == f_edges.len(),
        "labelled edges do not match the two boundaries",
    );
    c.check("split.plus_peripheral", u_plus == plus, "plus side has vertices off the boundary");
    c.check(
        "split.minus_larger",
        minus.len() > plus.len(),
        format!("|minus| = {}, |plus| = {}", minus.len(), plus.len()),
    );
    let mg = MetricGraph::from_resonance(r);
    let t = theta_classes(&mg);
    let f_set: BTreeSet<usize> = f_edges.iter().copied().collect();
    let class_ok = f_edges.first().is_some_and(|&k| {
        let class: BTreeSet<usize> = t.classes[t.class_of[k]].iter().copied().collect();
        class == f_set
    });
    c.check("split.theta_class", class_ok, "labelled edges are not one Θ-class");
    Ok(FaceSplit {
        face: s,
        f_edges,
        minus_side: minus,
        plus_side: plus,
        u_minus,
        u_plus,
        checks: c.list,
    })
}

/// [`split_report`], failing with the first violated clause.
pub fn split_by_face(g: &PlaneGraph, family: &MatchingFamily, r: &ResonanceGraph, s: FaceId) -> Result<FaceSplit> {
    let split = split_report(g, family, r, s)?;
    ensure_all(&split.checks)?;
    Ok(split)
}

fn labelled(r: &ResonanceGraph, labels: Vec<BinaryLabel>) -> MetricGraph {
    MetricGraph::from_resonance(r).with_labels(labels).expect("one label per matching")
}

/// Checks for step `i >= 2` of a decomposition of a peripherally
/// 2-colourable graph: `R(G_i)` restricted to matchings avoiding `P_i`
/// is `R(G_{i-1})` with bit `i` deleted, the copied subgraph is convex,
/// o-closed and equal to the bit-`alpha(i)` zero set, and expanding
/// `R(G_{i-1})` along it gives `R(G_i)` with its labels.
pub fn reducible_step_report(rfd: &RfdSequence, i: usize) -> Result<Vec<ClauseCheck>> {
    let n = rfd.n();
    if i < 2 || i > n {
        return Err(Error::InvalidInput(format!("step {i} outside 2..{n}")));
    }
    let alpha = rfd
        .alpha
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("decomposition has no attachment map".into()))?;
    let a = alpha[&i];
    let (gi, ri) = rfd.prefix_graph(i)?;
    let (gh, rh) = rfd.prefix_graph(i - 1)?;
    let fam_i = MatchingFamily::enumerate(&gi, crate::matchings::DEFAULT_CAP)?;
    let fam_h = MatchingFamily::enumerate(&gh, crate::matchings::DEFAULT_CAP)?;
    let r_i = build_resonance(&gi, &fam_i);
    let r_h = build_resonance(&gh, &fam_h);
    let s = FaceId(i - 1);
    let lab_i = daisy_bits(&gi, &fam_i)?;

    let mut c = Checks {
        step: Some(i),
        face: Some(format!("s{i}")),
        ..Default::default()
    };
    // G_i edge -> G_{i-1} edge
    let mut to_h: HashMap<usize, usize> = HashMap::new();
    for (k, &pe) in rh.edge_to_parent.iter().enumerate() {
        to_h.insert(pe, k);
    }
    let minus = matching_subset(&gi, &fam_i, s, Selector::AllPMinus)?;
    let mut phi: HashMap<usize, usize> = HashMap::new();
    let mut restriction_ok = true;
    for &m in &minus {
        let mut img = gh.empty_edge_set();
        for e in fam_i.get(m).edges.ones() {
            if let Some(&k) = to_h.get(&ri.edge_to_parent[e]) {
                img.insert(k);
            }
        }
        match fam_h.find(&img) {
            Some(id) => {
                phi.insert(m, id);
            }
            None => restriction_ok = false,
        }
    }
    let images: BTreeSet<usize> = phi.values().copied().collect();
    restriction_ok &= images.len() == fam_h.len() && phi.len() == minus.len();
    c.check(
        "reduction.restriction_bijective",
        restriction_ok,
        "restricting the matchings that avoid the new path is not a bijection",
    );
    if !restriction_ok {
        return Ok(c.list);
    }

    // labels of G_{i-1}: its own handle rule, or induced when it is a cycle
    let lab_h: Vec<BinaryLabel> = if i > 2 {
        let own = daisy_bits(&gh, &fam_h)?;
        let agree = phi.iter().all(|(&m, &h)| own[h] == lab_i[m].without(i));
        c.check("reduction.label_deletion", agree, "labels differ after deleting the last bit");
        own
    } else {
        let mut l = vec![BinaryLabel::default(); fam_h.len()];
        for (&m, &h) in &phi {
            l[h] = lab_i[m].without(i);
        }
        l
    };
    c.check(
        "reduction.zero_at_i",
        minus.iter().all(|&m| !lab_i[m].get(i)),
        "a matching avoiding the new path has bit i set",
    );

    let face_to_rfd_i = |f: FaceId| ri.parent_face(f);
    let face_to_rfd_h = |f: FaceId| rh.parent_face(f);
    let minus_set: BTreeSet<usize> = minus.iter().copied().collect();
    let image_edges: BTreeSet<(usize, usize, Option<FaceId>)> = r_i
        .edges
        .iter()
        .filter(|e| minus_set.contains(&e.a) && minus_set.contains(&e.b))
        .map(|e| {
            let (x, y) = (phi[&e.a], phi[&e.b]);
            (x.min(y), x.max(y), face_to_rfd_i(e.face))
        })
        .collect();
    let h_edges: BTreeSet<(usize, usize, Option<FaceId>)> =
        r_h.edges.iter().map(|e| (e.a, e.b, face_to_rfd_h(e.face))).collect();
    c.check(
        "reduction.edges_preserved",
        image_edges == h_edges,
        "resonance edges are not preserved by the restriction",
    );

    // J[s_i] in G_{i-1}
    let dec = gi.facial_handle_decomposition(s)?;
    let j = dec
        .interior_handle(1)
        .ok_or_else(|| Error::InternalInvariantBroken("reducible face without interior handle".into()))?;
    let j_edges: Vec<usize> = j.edges.iter().map(|&e| to_h[&ri.edge_to_parent[e]]).collect();
    let (j0, j1) = (j_edges[0], *j_edges.last().unwrap());
    let copied: Vec<usize> = fam_h
        .iter()
        .filter(|m| m.edges.contains(j0) && m.edges.contains(j1))
        .map(|m| m.id)
        .collect();
    let base = labelled(&r_h, lab_h.clone());
    c.check("expansion.subgraph_convex", base.is_convex_subset(&copied), "copied subgraph not convex");
    c.check(
        "expansion.subgraph_o_closed",
        crate::cube_kit::is_o_closed(&lab_h, &copied),
        "copied subgraph not o-closed",
    );
    let zero_at_alpha: Vec<usize> = (0..fam_h.len()).filter(|&v| !lab_h[v].get(a)).collect();
    c.check(
        "expansion.alpha_zero",
        copied == zero_at_alpha,
        format!("copied subgraph is not the bit-{a} zero set"),
    );
    let all: Vec<usize> = (0..fam_h.len()).collect();
    match expand(&base, &all, &copied) {
        Ok(x) => {
            c.check(
                "expansion.flags",
                x.peripheral && x.convex && x.le,
                "expansion is not peripheral, convex and o-closed",
            );
            let want = labelled(&r_i, lab_i.clone()).labelled_shape();
            c.check(
                "expansion.reproduces",
                x.graph.labelled_shape() == want,
                "expanded graph differs from the next resonance graph",
            );
        }
        Err(e) => {
            c.check("expansion.flags", false, e.to_string());
        }
    }
    let j_plus = matching_subset(&gi, &fam_i, s, Selector::JPlus(1))?;
    c.check(
        "expansion.j_plus_zero_bits",
        j_plus.iter().all(|&m| !lab_i[m].get(a) && !lab_i[m].get(i)),
        format!("a matching containing the interior handle ends has bit {a} or {i} set"),
    );
    c.check(
        "expansion.j_plus_is_p_minus_resonant",
        j_plus == matching_subset(&gi, &fam_i, s, Selector::AllPMinusResonant)?,
        "J+ differs from P-ds",
    );
    // a reducible face has one handle of each kind
    let p = dec.exterior_handle(1).unwrap();
    let states: BTreeSet<bool> = fam_i
        .iter()
        .map(|m| handle_predicate(&m.edges, p).map(|s| s == HandleState::ContainsEndEdges))
        .collect::<Result<_>>()?;
    c.check("reduction.single_ear", dec.m() == 1 && !states.is_empty(), "face has several exterior handles");
    let split = split_report(&gi, &fam_i, &r_i, s)?;
    for mut chk in split.checks {
        chk.step = Some(i);
        c.list.push(chk);
    }
    Ok(c.list)
}

/// [`reducible_step_report`], failing with the first violated clause.
pub fn verify_reducible_split(rfd: &RfdSequence, i: usize) -> Result<Vec<ClauseCheck>> {
    let checks = reducible_step_report(rfd, i)?;
    ensure_all(&checks)?;
    Ok(checks)
}

/// Rebuilds the labelled resonance graph from `K_2` by one peripheral
/// convex o-closed expansion per face, copying the vertices with bit
/// `alpha(i) = 0` at step `i`.
pub fn reconstruct_from_k2(rfd: &RfdSequence) -> Result<MetricGraph> {
    let alpha = rfd
        .alpha
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("decomposition has no attachment map".into()))?;
    let mut cur = MetricGraph::new(2, &[(0, 1)])?
        .with_labels(vec!["0".parse()?, "1".parse()?])?;
    for i in 2..=rfd.n() {
        let a = alpha[&i];
        let labels = cur.labels().unwrap();
        let copied: Vec<usize> = (0..cur.vertex_count()).filter(|&v| !labels[v].get(a)).collect();
        let all: Vec<usize> = (0..cur.vertex_count()).collect();
        let x = expand(&cur, &all, &copied)?;
        if !(x.peripheral && x.convex && x.le) {
            return Err(Error::violated(
                "reconstruction.expansion_kind",
                format!("step {i} is not a peripheral convex o-closed expansion"),
            ));
        }
        cur = x.graph;
    }
    Ok(cur)
}

/// The reconstruction equals `R(G)` labelled by the daisy coding.
pub fn verify_reconstruction(rfd: &RfdSequence, family: &MatchingFamily, r: &ResonanceGraph) -> Result<()> {
    let rebuilt = reconstruct_from_k2(rfd)?;
    let labels = daisy_bits(&rfd.graph, family)?;
    let target = labelled(r, labels);
    if rebuilt.labelled_shape() != target.labelled_shape() {
        return Err(Error::violated(
            "reconstruction.equals_resonance",
            "expansions from K2 do not reproduce the labelled resonance graph",
        ));
    }
    Ok(())
}

/// Every clause for every face and step, in order.
pub fn full_report(rfd: &RfdSequence) -> Result<Vec<ClauseCheck>> {
    let g = &rfd.graph;
    let family = MatchingFamily::enumerate(g, crate::matchings::DEFAULT_CAP)?;
    let r = build_resonance(g, &family);
    let mut out = Vec::new();
    if rfd.n() >= 2 {
        for f in g.finite_faces() {
            out.extend(handle_subset_checks(g, &family, f.id)?);
            out.extend(split_report(g, &family, &r, f.id)?.checks);
        }
        for i in 2..=rfd.n() {
            out.extend(reducible_step_report(rfd, i)?);
        }
    }
    let rec = verify_reconstruction(rfd, &family, &r);
    out.push(ClauseCheck {
        step: None,
        face: None,
        clause: "reconstruction.equals_resonance".into(),
        status: if rec.is_ok() { "pass" } else { "fail" },
        detail: rec.err().map(|e| e.to_string()).unwrap_or_default(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ids(fs: &[FaceId]) -> Vec<usize> {
        fs.iter().map(|f| f.0).collect()
    }

    #[test]
    fn reducible_faces_of_branched5() {
        let g = fixtures::branched5().graph;
        assert_eq!(ids(&find_reducible_faces(&g)), vec![0, 3, 4]);
        assert_eq!(ids(&find_reducible_faces(&fixtures::naphthalene().graph)), vec![0, 1]);
        assert!(find_reducible_faces(&fixtures::hexagon()).is_empty());
    }

    #[test]
    fn branched5_alpha() {
        let g = fixtures::branched5().graph;
        let order: Vec<FaceId> = (0..5).map(FaceId).collect();
        let rfd = rfd_from_face_order(&g, &order).unwrap();
        assert_eq!(rfd.alpha.unwrap(), Alpha::from([(2, 1), (3, 2), (4, 3), (5, 2)]));
        let ears: Vec<usize> = rfd.ears[1..].iter().map(|p| p.len() - 1).collect();
        assert_eq!(ears, vec![5, 5, 5, 5]);
    }

    #[test]
    fn order_starting_elsewhere() {
        let g = fixtures::branched5().graph;
        let order = [FaceId(3), FaceId(2), FaceId(1), FaceId(0), FaceId(4)];
        let rfd = rfd_from_face_order(&g, &order).unwrap();
        assert_eq!(rfd.alpha.unwrap(), Alpha::from([(2, 1), (3, 2), (4, 3), (5, 3)]));
        let bad = [FaceId(0), FaceId(2), FaceId(1), FaceId(3), FaceId(4)];
        assert!(matches!(
            rfd_from_face_order(&g, &bad),
            Err(Error::NotReducibleAtStep { step: 2, .. })
        ));
    }

    #[test]
    fn naphthalene_either_order() {
        let g = fixtures::naphthalene().graph;
        for order in [[FaceId(0), FaceId(1)], [FaceId(1), FaceId(0)]] {
            let rfd = rfd_from_face_order(&g, &order).unwrap();
            assert_eq!(rfd.alpha.unwrap(), Alpha::from([(2, 1)]));
        }
    }

    #[test]
    fn auto_rfd_cases() {
        assert_eq!(auto_rfd(&fixtures::branched5().graph).unwrap().n(), 5);
        assert_eq!(auto_rfd(&fixtures::naphthalene().graph).unwrap().n(), 2);
        let p = auto_rfd(&fixtures::pyrene().graph).unwrap();
        assert_eq!(p.n(), 4);
        assert!(p.alpha.is_none());
        assert!(auto_rfd(&fixtures::hexagon_with_pendant()).is_err());
    }

    #[test]
    fn branched5_splits() {
        let g = fixtures::branched5().graph;
        let fam = MatchingFamily::enumerate(&g, 100).unwrap();
        let r = build_resonance(&g, &fam);
        let sizes: Vec<(usize, usize, usize)> = (0..5)
            .map(|k| {
                let s = split_by_face(&g, &fam, &r, FaceId(k)).unwrap();
                (s.minus_side.len(), s.plus_side.len(), s.f_edges.len())
            })
            .collect();
        assert_eq!(sizes, vec![(8, 6, 6), (12, 2, 2), (10, 4, 4), (9, 5, 5), (8, 6, 6)]);
        for k in 0..5 {
            ensure_all(&handle_subset_checks(&g, &fam, FaceId(k)).unwrap()).unwrap();
        }
    }

    #[test]
    fn branched5_steps() {
        let g = fixtures::branched5().graph;
        let rfd = rfd_from_face_order(&g, &(0..5).map(FaceId).collect::<Vec<_>>()).unwrap();
        for i in 2..=5 {
            verify_reducible_split(&rfd, i).unwrap();
        }
        let fam = MatchingFamily::enumerate(&g, 100).unwrap();
        verify_reconstruction(&rfd, &fam, &build_resonance(&g, &fam)).unwrap();
        let rebuilt = reconstruct_from_k2(&rfd).unwrap();
        assert_eq!((rebuilt.vertex_count(), rebuilt.edge_count()), (14, 23));
    }

    #[test]
    fn step_two_is_p3() {
        let g = fixtures::naphthalene().graph;
        let rfd = auto_rfd(&g).unwrap();
        let checks = verify_reducible_split(&rfd, 2).unwrap();
        assert!(checks.iter().all(ClauseCheck::passed));
        let rebuilt = reconstruct_from_k2(&rfd).unwrap();
        assert_eq!((rebuilt.vertex_count(), rebuilt.edge_count()), (3, 2));
    }
}
