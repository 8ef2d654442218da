//! Binary codings of perfect matchings along a reducible face decomposition.
//!
//! Bit `i` of a label speaks about face `s_i`. The daisy coding sets it when
//! the matching contains the end edges of the exterior handles of `s_i`;
//! the lattice coding sets it when those handles are properly
//! `M`-alternating.

mod label;

use std::collections::BTreeMap;

use serde::Serialize;

pub use label::{label_set_from_alpha, label_set_trace, Alpha, BinaryLabel};

use crate::decomposition::{auto_rfd, RfdSequence};
use crate::error::{Error, Result};
use crate::matchings::{alternation_kind, handle_predicate, Alternation, HandleState, MatchingFamily};
use crate::plane_graph::{Color, FaceId, PlaneGraph};
use crate::resonance::{build_resonance, cartesian_compose, ResonanceGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Daisy,
    Fdl,
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "daisy" => Ok(Scheme::Daisy),
            "fdl" => Ok(Scheme::Fdl),
            _ => Err(Error::InvalidInput(format!("unknown scheme {s:?}"))),
        }
    }
}

/// One label per matching id; position `k+1` refers to `order[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labelling {
    pub scheme: Scheme,
    pub order: Vec<FaceId>,
    pub labels: Vec<BinaryLabel>,
    pub notes: Vec<String>,
}

impl Labelling {
    pub fn strings(&self) -> Vec<String> {
        self.labels.iter().map(|l| l.to_string()).collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut v = self.labels.clone();
        v.sort();
        v.dedup();
        v.len() == self.labels.len()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let labels: BTreeMap<String, String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (i.to_string(), l.to_string()))
            .collect();
        serde_json::json!({
            "scheme": self.scheme,
            "order": self.order.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "labels": labels,
            "notes": self.notes,
        })
    }
}

fn single_cycle(g: &PlaneGraph) -> bool {
    g.finite_face_count() == 1 && g.face(FaceId(0)).is_cycle() && g.edge_count() == g.vertex_count()
}

/// Daisy bits of every matching with positions in the face order of `g`.
/// A lone even cycle gives 0 to the matching that is improper for the
/// anchor colouring, so the result does not depend on colour swaps.
pub fn daisy_bits(g: &PlaneGraph, family: &MatchingFamily) -> Result<Vec<BinaryLabel>> {
    let n = g.finite_face_count();
    if single_cycle(g) {
        let cycle = g.face(FaceId(0)).boundary();
        let swapped = g.color(0) != Color::White;
        return family
            .iter()
            .map(|m| {
                let proper = match alternation_kind(g, &m.edges, cycle, true) {
                    Alternation::Proper => true,
                    Alternation::Improper => false,
                    Alternation::NotAlternating => {
                        return Err(Error::InternalInvariantBroken("cycle matching does not alternate".into()))
                    }
                };
                Ok(BinaryLabel::from_bits(vec![proper != swapped]))
            })
            .collect();
    }
    let decs = g
        .finite_faces()
        .iter()
        .map(|f| g.facial_handle_decomposition(f.id))
        .collect::<Result<Vec<_>>>()?;
    family
        .iter()
        .map(|m| {
            let mut bits = Vec::with_capacity(n);
            for d in &decs {
                let states = d
                    .exterior()
                    .map(|h| handle_predicate(&m.edges, h))
                    .collect::<Result<Vec<_>>>()?;
                let all = states.iter().all(|&s| s == HandleState::ContainsEndEdges);
                let none = states.iter().all(|&s| s == HandleState::AvoidsEndEdges);
                if !all && !none {
                    return Err(Error::violated(
                        "handles.one_plus_is_all",
                        format!("matching {} contains the end edges of only some exterior handles of {}", m.id, d.face),
                    ));
                }
                bits.push(all);
            }
            Ok(BinaryLabel::from_bits(bits))
        })
        .collect()
}

/// Lattice bits with positions in the face order of `g`, plus one note per
/// face whose exterior handles disagree for some matching.
pub fn fdl_bits(g: &PlaneGraph, family: &MatchingFamily) -> Result<(Vec<BinaryLabel>, Vec<String>)> {
    if single_cycle(g) {
        let cycle = g.face(FaceId(0)).boundary();
        let labels = family
            .iter()
            .map(|m| BinaryLabel::from_bits(vec![alternation_kind(g, &m.edges, cycle, true) == Alternation::Proper]))
            .collect();
        return Ok((labels, Vec::new()));
    }
    let decs = g
        .finite_faces()
        .iter()
        .map(|f| g.facial_handle_decomposition(f.id))
        .collect::<Result<Vec<_>>>()?;
    let mut disagree = vec![false; decs.len()];
    let labels = family
        .iter()
        .map(|m| {
            let bits = decs
                .iter()
                .enumerate()
                .map(|(k, d)| {
                    let kinds: Vec<Alternation> = d
                        .exterior()
                        .map(|h| alternation_kind(g, &m.edges, &h.vertices, false))
                        .collect();
                    let proper = kinds.iter().filter(|&&a| a == Alternation::Proper).count();
                    let improper = kinds.iter().filter(|&&a| a == Alternation::Improper).count();
                    if proper > 0 && improper > 0 {
                        disagree[k] = true;
                    }
                    proper == kinds.len()
                })
                .collect();
            BinaryLabel::from_bits(bits)
        })
        .collect();
    let notes = disagree
        .iter()
        .enumerate()
        .filter(|(_, &d)| d)
        .map(|(k, _)| format!("exterior handles of {} disagree in alternation for some matching", FaceId(k)))
        .collect();
    Ok((labels, notes))
}

fn require_p2c(g: &PlaneGraph) -> Result<()> {
    let v = g.is_peripherally_two_colorable();
    if !v.peripherally_two_colorable {
        let why = v
            .violation
            .map(|x| serde_json::to_string(&x).unwrap_or_default())
            .unwrap_or_default();
        return Err(Error::PropertyViolated(format!("graph is not peripherally 2-colourable: {why}")));
    }
    Ok(())
}

/// Daisy coding along `rfd`, checked against the label set generated from
/// the attachment map.
pub fn daisy_labelling(rfd: &RfdSequence, family: &MatchingFamily) -> Result<Labelling> {
    let g = &rfd.graph;
    if rfd.n() >= 2 {
        require_p2c(g)?;
    }
    let labels = daisy_bits(g, family)?;
    let out = Labelling {
        scheme: Scheme::Daisy,
        order: rfd.order.clone(),
        labels,
        notes: rfd.notes.clone(),
    };
    if !out.is_injective() {
        return Err(Error::LabelSetMismatch("two matchings share a label".into()));
    }
    if let Some(alpha) = &rfd.alpha {
        let want = label_set_from_alpha(alpha, rfd.n())?;
        let got = out.labels.iter().cloned().collect();
        if want != got {
            return Err(Error::LabelSetMismatch(format!(
                "{} labels produced, {} generated from the attachment map",
                out.labels.len(),
                want.len()
            )));
        }
    }
    Ok(out)
}

/// Lattice coding along `rfd`.
pub fn fdl_labelling(rfd: &RfdSequence, family: &MatchingFamily) -> Result<Labelling> {
    let (labels, extra) = fdl_bits(&rfd.graph, family)?;
    let mut notes = rfd.notes.clone();
    notes.extend(extra);
    let out = Labelling {
        scheme: Scheme::Fdl,
        order: rfd.order.clone(),
        labels,
        notes,
    };
    if !out.is_injective() {
        return Err(Error::LabelSetMismatch("two matchings share a label".into()));
    }
    Ok(out)
}

pub fn labelling(rfd: &RfdSequence, family: &MatchingFamily, scheme: Scheme) -> Result<Labelling> {
    match scheme {
        Scheme::Daisy => daisy_labelling(rfd, family),
        Scheme::Fdl => fdl_labelling(rfd, family),
    }
}

/// What swapping the colour classes does to each coding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SwapEffect {
    pub fdl_complemented: bool,
    pub daisy_unchanged: bool,
}

/// Recodes after swapping colours; lattice labels must complement and
/// daisy labels must not move.
pub fn color_swap_effect(rfd: &RfdSequence, family: &MatchingFamily) -> Result<SwapEffect> {
    let mut swapped = rfd.clone();
    swapped.graph = rfd.graph.swap_colors();
    let fdl = fdl_labelling(rfd, family)?;
    let fdl_s = fdl_labelling(&swapped, family)?;
    let daisy = daisy_bits(&rfd.graph, family)?;
    let daisy_s = daisy_bits(&swapped.graph, family)?;
    let effect = SwapEffect {
        fdl_complemented: fdl.labels.iter().zip(&fdl_s.labels).all(|(a, b)| a.complement() == *b),
        daisy_unchanged: daisy == daisy_s,
    };
    if !effect.fdl_complemented || !effect.daisy_unchanged {
        return Err(Error::PropertyViolated(format!("colour swap: {effect:?}")));
    }
    Ok(effect)
}

/// Labels of a product indexed mixed-radix, first part slowest: each
/// tuple's label is its parts' labels concatenated in order.
pub fn compose_labellings(parts: &[Labelling]) -> Labelling {
    let mut labels = vec![BinaryLabel::zeros(0)];
    let mut order = Vec::new();
    let mut notes = Vec::new();
    for p in parts {
        labels = labels
            .iter()
            .flat_map(|a| p.labels.iter().map(move |b| a.concat(b)))
            .collect();
        order.extend(p.order.iter().copied());
        notes.extend(p.notes.iter().cloned());
    }
    Labelling {
        scheme: parts.first().map_or(Scheme::Daisy, |p| p.scheme),
        order,
        labels,
        notes,
    }
}

/// A coding of a weakly elementary graph together with the product of its
/// component resonance graphs.
#[derive(Clone, Debug)]
pub struct ComponentCoding {
    /// Labels indexed by the ids of the family passed in.
    pub labelling: Labelling,
    pub resonance: ResonanceGraph,
    /// Finite face count of each elementary component, in product order.
    pub component_faces: Vec<usize>,
}

/// Codes each elementary component along its own peeled decomposition and
/// concatenates. A component that is a single edge contributes an empty
/// label.
pub fn label_weakly_elementary(g: &PlaneGraph, family: &MatchingFamily, scheme: Scheme) -> Result<ComponentCoding> {
    let analysis = g.elementary_analysis()?;
    if !analysis.is_weakly_elementary {
        return Err(Error::PropertyViolated("graph is not weakly elementary".into()));
    }
    let mut parts = Vec::new();
    let mut rs = Vec::new();
    let mut component_faces = Vec::new();
    for comp in &analysis.components {
        let (sub, restr) = g.subgraph(comp)?;
        let fam = MatchingFamily::enumerate(&sub, crate::matchings::DEFAULT_CAP)?;
        let r = build_resonance(&sub, &fam).lift(&restr)?;
        let part = if sub.finite_face_count() == 0 {
            Labelling {
                scheme,
                order: Vec::new(),
                labels: vec![BinaryLabel::zeros(0)],
                notes: Vec::new(),
            }
        } else {
            let rfd = auto_rfd(&sub)?;
            let mut l = labelling(&rfd, &fam, scheme)?;
            l.order = l
                .order
                .iter()
                .map(|&f| restr.parent_face(f).expect("component faces are parent faces"))
                .collect();
            l
        };
        component_faces.push(sub.finite_face_count());
        parts.push(part);
        rs.push(r);
    }
    let composed = cartesian_compose(&rs);
    let joint = compose_labellings(&parts);
    let resonance = build_resonance(g, family);
    if !composed.same_as(&resonance) {
        return Err(Error::InternalInvariantBroken(
            "product of component resonance graphs differs from the resonance graph".into(),
        ));
    }
    let mut labels = vec![BinaryLabel::default(); family.len()];
    for (t, m) in composed.matchings.iter().enumerate() {
        let mut m = m.clone();
        m.grow(g.edge_count());
        let id = family
            .find(&m)
            .ok_or_else(|| Error::InternalInvariantBroken("product vertex is not a matching".into()))?;
        labels[id] = joint.labels[t].clone();
    }
    Ok(ComponentCoding {
        labelling: Labelling { labels, ..joint },
        resonance,
        component_faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_kit::{is_proper_labelling, MetricGraph};
    use crate::decomposition::rfd_from_face_order;
    use crate::fixtures;
    use std::collections::BTreeSet;

    fn branched5_rfd() -> (RfdSequence, MatchingFamily) {
        let g = fixtures::branched5().graph;
        let rfd = rfd_from_face_order(&g, &(0..5).map(FaceId).collect::<Vec<_>>()).unwrap();
        let fam = MatchingFamily::enumerate(&g, 100).unwrap();
        (rfd, fam)
    }

    #[test]
    fn branched5_daisy_set() {
        let (rfd, fam) = branched5_rfd();
        let l = daisy_labelling(&rfd, &fam).unwrap();
        let got: BTreeSet<String> = l.strings().into_iter().collect();
        assert_eq!(got.len(), 14);
        assert_eq!(got, label_set_from_alpha(rfd.alpha.as_ref().unwrap(), 5).unwrap().iter().map(|l| l.to_string()).collect());
        let r = build_resonance(&rfd.graph, &fam);
        assert!(is_proper_labelling(&MetricGraph::from_resonance(&r), &l.labels));
    }

    #[test]
    fn branched5_fdl_and_swap() {
        let (rfd, fam) = branched5_rfd();
        let l = fdl_labelling(&rfd, &fam).unwrap();
        assert!(l.is_injective());
        let r = build_resonance(&rfd.graph, &fam);
        for e in &r.edges {
            assert_eq!(l.labels[e.a].diff_positions(&l.labels[e.b]), vec![e.face.0 + 1]);
        }
        let eff = color_swap_effect(&rfd, &fam).unwrap();
        assert!(eff.fdl_complemented && eff.daisy_unchanged);
    }

    #[test]
    fn hexagon_codings() {
        let g = fixtures::hexagon();
        let fam = MatchingFamily::enumerate(&g, 10).unwrap();
        let rfd = auto_rfd(&g).unwrap();
        let d = daisy_labelling(&rfd, &fam).unwrap();
        let f = fdl_labelling(&rfd, &fam).unwrap();
        let mut ds = d.strings();
        ds.sort();
        assert_eq!(ds, vec!["0", "1"]);
        assert_ne!(f.labels[0], f.labels[1]);
        color_swap_effect(&rfd, &fam).unwrap();
    }

    #[test]
    fn two_hexagons_compose() {
        let g = fixtures::two_hexagons();
        let fam = MatchingFamily::enumerate(&g, 100).unwrap();
        let c = label_weakly_elementary(&g, &fam, Scheme::Daisy).unwrap();
        assert_eq!(c.component_faces, vec![1, 1]);
        let mut s = c.labelling.strings();
        s.sort();
        assert_eq!(s, vec!["00", "01", "10", "11"]);
        assert!(is_proper_labelling(&MetricGraph::from_resonance(&c.resonance), &c.labelling.labels));
    }

    #[test]
    fn compose_numbering() {
        let a = Labelling {
            scheme: Scheme::Daisy,
            order: vec![FaceId(0)],
            labels: vec!["0".parse().unwrap(), "1".parse().unwrap()],
            notes: vec![],
        };
        let b = Labelling {
            order: vec![FaceId(1), FaceId(2)],
            labels: vec!["00".parse().unwrap(), "10".parse().unwrap(), "01".parse().unwrap()],
            ..a.clone()
        };
        let c = compose_labellings(&[a, b]);
        assert_eq!(c.strings(), vec!["000", "010", "001", "100", "110", "101"]);
    }
}
