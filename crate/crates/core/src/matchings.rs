//! Perfect matchings and the matching predicates used by the codings.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane_graph::{Color, EdgeSet, FaceId, Handle, PlaneGraph, UnionFind, VertexId};

pub const DEFAULT_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PerfectMatching {
    pub id: usize,
    pub edges: EdgeSet,
}

impl PerfectMatching {
    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }
}

/// Which handle-defined subset of the matchings to select for a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    /// No end edge of exterior handle `P_i` (1-based).
    PMinus(usize),
    /// Both end edges of `P_i`.
    PPlus(usize),
    JMinus(usize),
    JPlus(usize),
    /// No end edge of any exterior handle on the face.
    AllPMinus,
    /// End edges of every exterior handle on the face.
    AllPPlus,
    AllJMinus,
    AllJPlus,
    /// The `All*` sets further restricted to matchings making the face resonant.
    AllPMinusResonant,
    AllPPlusResonant,
    AllJMinusResonant,
    AllJPlusResonant,
}

impl FromStr for Selector {
    type Err = Error;

    /// `P-`, `P+`, `J-`, `J+`, optionally followed by a handle index
    /// (`P-2`) or by `ds` for the resonant refinement (`P+ds`).
    fn from_str(s: &str) -> Result<Selector> {
        let bad = || Error::BadSelector(s.to_string());
        if s.len() < 2 {
            return Err(bad());
        }
        let (head, tail) = s.split_at(2);
        let resonant = tail == "ds";
        let index = if tail.is_empty() || resonant {
            None
        } else {
            Some(tail.parse::<usize>().map_err(|_| bad())?)
        };
        use Selector::*;
        Ok(match (head, index, resonant) {
            ("P-", Some(i), _) => PMinus(i),
            ("P+", Some(i), _) => PPlus(i),
            ("J-", Some(i), _) => JMinus(i),
            ("J+", Some(i), _) => JPlus(i),
            ("P-", None, false) => AllPMinus,
            ("P+", None, false) => AllPPlus,
            ("J-", None, false) => AllJMinus,
            ("J+", None, false) => AllJPlus,
            ("P-", None, true) => AllPMinusResonant,
            ("P+", None, true) => AllPPlusResonant,
            ("J-", None, true) => AllJMinusResonant,
            ("J+", None, true) => AllJPlusResonant,
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Selector::*;
        match self {
            PMinus(i) => write!(f, "P-{i}"),
            PPlus(i) => write!(f, "P+{i}"),
            JMinus(i) => write!(f, "J-{i}"),
            JPlus(i) => write!(f, "J+{i}"),
            AllPMinus => write!(f, "P-"),
            AllPPlus => write!(f, "P+"),
            AllJMinus => write!(f, "J-"),
            AllJPlus => write!(f, "J+"),
            AllPMinusResonant => write!(f, "P-ds"),
            AllPPlusResonant => write!(f, "P+ds"),
            AllJMinusResonant => write!(f, "J-ds"),
            AllJPlusResonant => write!(f, "J+ds"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Alternation {
    Proper,
    Improper,
    NotAlternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HandleState {
    ContainsEndEdges,
    AvoidsEndEdges,
}

/// All perfect matchings of one graph, ids in enumeration order.
#[derive(Debug)]
pub struct MatchingFamily {
    matchings: Vec<PerfectMatching>,
    index: HashMap<EdgeSet, usize>,
    cache: Mutex<HashMap<(FaceId, Selector), Vec<usize>>>,
}

impl Clone for MatchingFamily {
    fn clone(&self) -> Self {
        MatchingFamily {
            matchings: self.matchings.clone(),
            index: self.index.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

#[derive(Serialize)]
struct MatchingRecord {
    id: usize,
    edges: Vec<[i64; 2]>,
}

impl MatchingFamily {
    /// Backtracking over the smallest uncovered vertex, branching on its
    /// incident edges in edge-id order.
    pub fn enumerate(g: &PlaneGraph, cap: usize) -> Result<MatchingFamily> {
        if cap == 0 {
            return Err(Error::InvalidInput("matching cap must be at least 1".into()));
        }
        let n = g.vertex_count();
        let mut incident: Vec<Vec<(VertexId, usize)>> = (0..n)
            .map(|v| g.rotation(v).iter().map(|&(w, e)| (w, e)).collect())
            .collect();
        for list in incident.iter_mut() {
            list.sort_by_key(|&(_, e)| e);
        }
        let mut covered = vec![false; n];
        let mut current = g.empty_edge_set();
        let mut out = Vec::new();
        if n.is_multiple_of(2) {
            search(&incident, &mut covered, &mut current, &mut out, cap)?;
        }
        if out.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        Ok(Self::from_edge_sets(out))
    }

    pub fn from_edge_sets(sets: Vec<EdgeSet>) -> MatchingFamily {
        let matchings: Vec<PerfectMatching> = sets
            .into_iter()
            .enumerate()
            .map(|(id, edges)| PerfectMatching { id, edges })
            .collect();
        let index = matchings.iter().map(|m| (m.edges.clone(), m.id)).collect();
        MatchingFamily {
            matchings,
            index,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn get(&self, id: usize) -> &PerfectMatching {
        &self.matchings[id]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PerfectMatching> {
        self.matchings.iter()
    }

    pub fn find(&self, edges: &EdgeSet) -> Option<usize> {
        self.index.get(edges).copied()
    }

    /// `[{"id", "edges": [[u, v], ...]}, ...]` with external vertex ids.
    pub fn to_json_value(&self, g: &PlaneGraph) -> serde_json::Value {
        let recs: Vec<MatchingRecord> = self
            .matchings
            .iter()
            .map(|m| MatchingRecord {
                id: m.id,
                edges: m
                    .edges
                    .ones()
                    .map(|e| {
                        let (u, v) = g.edge(e);
                        [g.id(u), g.id(v)]
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(recs).expect("plain data serializes")
    }
}

fn search(
    incident: &[Vec<(VertexId, usize)>],
    covered: &mut [bool],
    current: &mut EdgeSet,
    out: &mut Vec<EdgeSet>,
    cap: usize,
) -> Result<()> {
    let Some(v) = covered.iter().position(|c| !c) else {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(current.clone());
        return Ok(());
    };
    covered[v] = true;
    for &(w, e) in &incident[v] {
        if covered[w] {
            continue;
        }
        covered[w] = true;
        current.insert(e);
        let r = search(incident, covered, current, out, cap);
        current.set(e, false);
        covered[w] = false;
        r?;
    }
    covered[v] = false;
    Ok(())
}

/// True iff the facial cycle of `s` alternates in and out of `m`.
pub fn is_resonant(g: &PlaneGraph, m: &EdgeSet, s: FaceId) -> bool {
    let f = g.face(s);
    if f.is_infinite || !f.is_cycle() {
        return false;
    }
    let Some(edges) = g.walk_edges(f.boundary(), true) else {
        return false;
    };
    alternates(m, &edges, true)
}

fn alternates(m: &EdgeSet, edges: &[usize], closed: bool) -> bool {
    let k = edges.len();
    if closed && !k.is_multiple_of(2) {
        return false;
    }
    let pairs = if closed { k } else { k.saturating_sub(1) };
    (0..pairs).all(|i| m.contains(edges[i]) != m.contains(edges[(i + 1) % k]))
}

/// Classifies a walk given in the clockwise orientation of its host cycle.
/// Proper means every `m`-edge runs white→black along the walk; a walk with
/// no `m`-edge is proper when its edges run black→white.
pub fn alternation_kind(g: &PlaneGraph, m: &EdgeSet, walk: &[VertexId], closed: bool) -> Alternation {
    let Some(edges) = g.walk_edges(walk, closed) else {
        return Alternation::NotAlternating;
    };
    if edges.is_empty() || !alternates(m, &edges, closed) {
        return Alternation::NotAlternating;
    }
    let i = edges.iter().position(|&e| m.contains(e)).unwrap_or(0);
    let tail_white = g.color(walk[i]) == Color::White;
    if tail_white == m.contains(edges[i]) {
        Alternation::Proper
    } else {
        Alternation::Improper
    }
}

/// Clockwise alternation class of an arbitrary cycle given as an edge set.
pub fn cycle_alternation(g: &PlaneGraph, m: &EdgeSet, cycle: &EdgeSet) -> Alternation {
    match g.clockwise_cycle(cycle) {
        Some(walk) => alternation_kind(g, m, &walk, true),
        None => Alternation::NotAlternating,
    }
}

pub fn handle_predicate(m: &EdgeSet, h: &Handle) -> Result<HandleState> {
    let (a, b) = h.end_edges();
    match (m.contains(a), m.contains(b)) {
        (true, true) => Ok(HandleState::ContainsEndEdges),
        (false, false) => Ok(HandleState::AvoidsEndEdges),
        _ => Err(Error::InternalInvariantBroken(format!(
            "matching contains exactly one end edge of a handle of length {}",
            h.length()
        ))),
    }
}

/// Ids of the matchings of `family` selected by `selector` on face `s`.
/// Results are cached per `(face, selector)`.
pub fn matching_subset(
    g: &PlaneGraph,
    family: &MatchingFamily,
    s: FaceId,
    selector: Selector,
) -> Result<Vec<usize>> {
    if let Some(hit) = family.cache.lock().unwrap().get(&(s, selector)) {
        return Ok(hit.clone());
    }
    let d = g.facial_handle_decomposition(s)?;
    use Selector::*;
    let pick = |i: usize, exterior: bool| -> Result<&Handle> {
        let h = if exterior { d.exterior_handle(i) } else { d.interior_handle(i) };
        h.ok_or_else(|| Error::BadSelector(format!("{selector}: face {s} has {} handles of each kind", d.m())))
    };
    let (handles, want, resonant): (Vec<&Handle>, HandleState, bool) = match selector {
        PMinus(i) => (vec![pick(i, true)?], HandleState::AvoidsEndEdges, false),
        PPlus(i) => (vec![pick(i, true)?], HandleState::ContainsEndEdges, false),
        JMinus(i) => (vec![pick(i, false)?], HandleState::AvoidsEndEdges, false),
        JPlus(i) => (vec![pick(i, false)?], HandleState::ContainsEndEdges, false),
        AllPMinus => (d.exterior().collect(), HandleState::AvoidsEndEdges, false),
        AllPPlus => (d.exterior().collect(), HandleState::ContainsEndEdges, false),
        AllJMinus => (d.interior().collect(), HandleState::AvoidsEndEdges, false),
        AllJPlus => (d.interior().collect(), HandleState::ContainsEndEdges, false),
        AllPMinusResonant => (d.exterior().collect(), HandleState::AvoidsEndEdges, true),
        AllPPlusResonant => (d.exterior().collect(), HandleState::ContainsEndEdges, true),
        AllJMinusResonant => (d.interior().collect(), HandleState::AvoidsEndEdges, true),
        AllJPlusResonant => (d.interior().collect(), HandleState::ContainsEndEdges, true),
    };
    let mut ids = Vec::new();
    for m in family.iter() {
        let mut ok = true;
        for h in &handles {
            if handle_predicate(&m.edges, h)? != want {
                ok = false;
                break;
            }
        }
        if ok && (!resonant || is_resonant(g, &m.edges, s)) {
            ids.push(m.id);
        }
    }
    family.cache.lock().unwrap().insert((s, selector), ids.clone());
    Ok(ids)
}

/// Cycles of `a ⊕ b`, each as an edge set.
pub fn difference_cycles(g: &PlaneGraph, a: &EdgeSet, b: &EdgeSet) -> Vec<EdgeSet> {
    let mut diff = a.clone();
    diff.symmetric_difference_with(b);
    let mut uf = UnionFind::new(g.vertex_count());
    for e in diff.ones() {
        let (u, v) = g.edge(e);
        uf.union(u, v);
    }
    let mut by_root: std::collections::BTreeMap<usize, EdgeSet> = Default::default();
    for e in diff.ones() {
        let r = uf.find(g.edge(e).0);
        by_root.entry(r).or_insert_with(|| g.empty_edge_set()).insert(e);
    }
    by_root.into_values().collect()
}

/// Every `m`-alternating cycle of `g` paired with its alternation class.
pub fn alternating_cycles(g: &PlaneGraph, family: &MatchingFamily, m: &EdgeSet) -> Vec<(EdgeSet, Alternation)> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for other in family.iter() {
        if &other.edges == m {
            continue;
        }
        for c in difference_cycles(g, m, &other.edges) {
            if seen.insert(c.clone()) {
                let kind = cycle_alternation(g, m, &c);
                out.push((c, kind));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub m0: usize,
    pub m0_hat: usize,
    pub m1_hat: usize,
}

fn unique(ids: Vec<usize>, what: &str) -> Result<usize> {
    match ids.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::NotFound(format!("no {what}"))),
        many => Err(Error::NotFound(format!("{} candidates for {what}", many.len()))),
    }
}

/// The matching making every finite face resonant.
pub fn m0(g: &PlaneGraph, family: &MatchingFamily) -> Result<usize> {
    let ids = family
        .iter()
        .filter(|m| g.finite_faces().iter().all(|f| is_resonant(g, &m.edges, f.id)))
        .map(|m| m.id)
        .collect();
    unique(ids, "matching with every finite face resonant")
}

fn without_cycles_of(g: &PlaneGraph, family: &MatchingFamily, kind: Alternation) -> Vec<usize> {
    family
        .iter()
        .filter(|m| alternating_cycles(g, family, &m.edges).iter().all(|(_, k)| *k != kind))
        .map(|m| m.id)
        .collect()
}

/// The matching with no proper alternating cycle.
pub fn m0_hat(g: &PlaneGraph, family: &MatchingFamily) -> Result<usize> {
    unique(without_cycles_of(g, family, Alternation::Proper), "matching without proper alternating cycles")
}

/// The matching with no improper alternating cycle.
pub fn m1_hat(g: &PlaneGraph, family: &MatchingFamily) -> Result<usize> {
    unique(
        without_cycles_of(g, family, Alternation::Improper),
        "matching without improper alternating cycles",
    )
}

pub fn extremal_matchings(g: &PlaneGraph, family: &MatchingFamily) -> Result<Extremal> {
    Ok(Extremal {
        m0: m0(g, family)?,
        m0_hat: m0_hat(g, family)?,
        m1_hat: m1_hat(g, family)?,
    })
}
