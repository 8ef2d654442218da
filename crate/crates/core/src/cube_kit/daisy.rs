use std::collections::HashSet;

use serde::Serialize;

use super::theta::{is_partial_cube, split_class, theta_classes};
use super::MetricGraph;
use crate::coding::BinaryLabel;
use crate::error::{Error, Result};

/// Largest isometric dimension the exhaustive orientation sweep accepts.
pub const MAX_EXHAUSTIVE_IDIM: usize = 20;

/// Members of the labelled vertex set lying below some member of `x`.
pub fn operator_o(labels: &[BinaryLabel], x: &[usize]) -> Vec<usize> {
    (0..labels.len())
        .filter(|&u| x.iter().any(|&v| labels[u].le(&labels[v])))
        .collect()
}

pub fn is_o_closed(labels: &[BinaryLabel], set: &[usize]) -> bool {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    operator_o(labels, &s) == s
}

/// The label set contains every label obtained by clearing one 1-bit of a
/// member, which is the same as being downward closed.
pub fn is_downward_closed(labels: &[BinaryLabel]) -> bool {
    let set: HashSet<&BinaryLabel> = labels.iter().collect();
    labels.iter().all(|x| {
        x.ones().all(|i| {
            let mut y = x.clone();
            y.set(i, false);
            set.contains(&y)
        })
    })
}

/// Injective, isometric, and downward closed.
pub fn is_proper_labelling(mg: &MetricGraph, labels: &[BinaryLabel]) -> bool {
    let Ok(l) = mg.clone().with_labels(labels.to_vec()) else {
        return false;
    };
    l.labels_are_isometric() && is_downward_closed(labels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DaisyMethod {
    RootCandidate,
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct DaisyVerdict {
    pub is_daisy_cube: bool,
    pub labels: Option<Vec<BinaryLabel>>,
    pub method: Option<DaisyMethod>,
    pub reason: Option<String>,
}

fn flipped(labels: &[BinaryLabel], mask: &BinaryLabel) -> Vec<BinaryLabel> {
    labels.iter().map(|l| l.xor(mask)).collect()
}

/// Tries each vertex as the all-zero root, then every class orientation.
pub fn is_daisy_cube(mg: &MetricGraph) -> DaisyVerdict {
    let pc = is_partial_cube(mg);
    let Some(base) = pc.labels else {
        return DaisyVerdict {
            is_daisy_cube: false,
            labels: None,
            method: None,
            reason: pc.reason,
        };
    };
    for root in &base {
        let cand = flipped(&base, root);
        if is_downward_closed(&cand) {
            return DaisyVerdict {
                is_daisy_cube: true,
                labels: Some(cand),
                method: Some(DaisyMethod::RootCandidate),
                reason: None,
            };
        }
    }
    match sweep(&base) {
        Ok(Some(l)) => DaisyVerdict {
            is_daisy_cube: true,
            labels: Some(l),
            method: Some(DaisyMethod::Exhaustive),
            reason: None,
        },
        Ok(None) => DaisyVerdict {
            is_daisy_cube: false,
            labels: None,
            method: Some(DaisyMethod::Exhaustive),
            reason: Some("no class orientation gives a downward closed label set".into()),
        },
        Err(e) => DaisyVerdict {
            is_daisy_cube: false,
            labels: None,
            method: None,
            reason: Some(e.to_string()),
        },
    }
}

fn sweep(base: &[BinaryLabel]) -> Result<Option<Vec<BinaryLabel>>> {
    let d = base.first().map_or(0, BinaryLabel::len);
    if d > MAX_EXHAUSTIVE_IDIM {
        return Err(Error::InvalidInput(format!(
            "isometric dimension {d} exceeds the exhaustive limit {MAX_EXHAUSTIVE_IDIM}"
        )));
    }
    for m in 0u64..(1u64 << d) {
        let mask = BinaryLabel::from_bits((0..d).map(|k| m >> k & 1 == 1).collect());
        let cand = flipped(base, &mask);
        if is_downward_closed(&cand) {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// The orientation sweep alone over all `2^idim` class orientations; `None`
/// when the graph is a partial cube but no orientation works, an error for
/// non-partial cubes or an over-large dimension.
pub fn exhaustive_daisy_search(mg: &MetricGraph) -> Result<Option<Vec<BinaryLabel>>> {
    let pc = is_partial_cube(mg);
    let base = pc
        .labels
        .ok_or_else(|| Error::PropertyViolated(format!("not a partial cube: {}", pc.reason.unwrap_or_default())))?;
    sweep(&base)
}

/// For each Θ-class of a labelled daisy cube: the class is peripheral, its
/// edges flip one position, the larger side carries 0 there and a strictly
/// smaller side is its own boundary and carries 1.
pub fn check_daisy_classes(mg: &MetricGraph) -> Result<()> {
    let labels = mg
        .labels()
        .ok_or_else(|| Error::InvalidInput("graph is unlabelled".into()))?;
    let t = theta_classes(mg);
    for k in 0..t.len() {
        let s = split_class(mg, &t, k);
        let (x, y) = s.edge;
        let pos = labels[x].diff_positions(&labels[y]);
        if pos.len() != 1 {
            return Err(Error::violated("daisy.edge_flips_one_bit", format!("class {k}")));
        }
        let i = pos[0];
        if !s.is_peripheral() {
            return Err(Error::violated("daisy.class_peripheral", format!("class {k}")));
        }
        let (big, small, small_u) = if s.w_xy.len() >= s.w_yx.len() {
            (&s.w_xy, &s.w_yx, &s.u_yx)
        } else {
            (&s.w_yx, &s.w_xy, &s.u_xy)
        };
        if big.len() > small.len() {
            if big.iter().any(|&v| labels[v].get(i)) {
                return Err(Error::violated("daisy.large_side_zero", format!("position {i}")));
            }
            if small != small_u || small.iter().any(|&v| !labels[v].get(i)) {
                return Err(Error::violated("daisy.small_side_one", format!("position {i}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_kit::metric::{cycle, hypercube, path};

    fn labels(xs: &[&str]) -> Vec<BinaryLabel> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn o_operator() {
        let l = labels(&["00", "10", "01", "11"]);
        assert_eq!(operator_o(&l, &[3]), vec![0, 1, 2, 3]);
        assert!(operator_o(&l, &[]).is_empty());
        assert_eq!(operator_o(&l, &[1]), vec![0, 1]);
        assert!(is_o_closed(&l, &[0, 2]));
        assert!(!is_o_closed(&l, &[2]));
    }

    #[test]
    fn p3_is_daisy() {
        let v = is_daisy_cube(&path(3));
        assert!(v.is_daisy_cube);
        let mut got: Vec<String> = v.labels.unwrap().iter().map(|l| l.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["00", "01", "10"]);
    }

    #[test]
    fn p4_is_not_daisy() {
        let p4 = path(4);
        assert!(!is_daisy_cube(&p4).is_daisy_cube);
        assert_eq!(exhaustive_daisy_search(&p4).unwrap(), None);
    }

    #[test]
    fn cubes_are_daisy() {
        let q = hypercube(3);
        assert!(is_proper_labelling(&q, q.labels().unwrap()));
        check_daisy_classes(&q).unwrap();
        assert!(exhaustive_daisy_search(&cycle(6)).unwrap().is_none());
        assert!(exhaustive_daisy_search(&cycle(5)).is_err());
    }
}
