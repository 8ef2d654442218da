//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rescube::coding::{
    color_swap_effect, daisy_labelling, fdl_labelling, label_set_trace, label_weakly_elementary, Scheme,
};
use rescube::cube_kit::metric::path;
use rescube::cube_kit::{
    check_daisy_classes, exhaustive_daisy_search, is_daisy_cube, is_median, is_partial_cube, is_proper_labelling,
    MetricGraph,
};
use rescube::decomposition::{
    auto_rfd, ensure_all, full_report, reducible_step_report, rfd_from_face_order, verify_reconstruction,
};
use rescube::fixtures;
use rescube::matchings::{m0_hat, m1_hat, MatchingFamily};
use rescube::plane_graph::{FaceId, PlaneGraph};
use rescube::resonance::{build_resonance, cartesian_compose, ResonanceGraph};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: rescube::Error) -> String {
    e.to_string()
}

fn resonance(g: &PlaneGraph) -> Result<(MatchingFamily, ResonanceGraph), String> {
    let family = MatchingFamily::enumerate(g, 100_000).map_err(err)?;
    let r = build_resonance(g, &family);
    Ok((family, r))
}

fn branched5_order() -> Vec<FaceId> {
    (0..5).map(FaceId).collect()
}

fn branched5_reproduction() -> Outcome {
    let g = fixtures::branched5().graph;
    let (family, r) = resonance(&g)?;
    ensure(family.len() == 14, format!("{} matchings", family.len()))?;
    ensure(
        r.vertex_count() == 14 && r.edge_count() == 23,
        format!("R has {} vertices, {} edges", r.vertex_count(), r.edge_count()),
    )?;
    let faces: BTreeSet<FaceId> = r.edges.iter().map(|e| e.face).collect();
    ensure(faces.len() == 5, "not every face labels an edge")?;
    let rfd = rfd_from_face_order(&g, &branched5_order()).map_err(err)?;
    let alpha: Vec<(usize, usize)> = rfd.alpha.clone().unwrap_or_default().into_iter().collect();
    ensure(alpha == vec![(2, 1), (3, 2), (4, 3), (5, 2)], format!("alpha {alpha:?}"))?;
    let got: BTreeSet<String> = daisy_labelling(&rfd, &family).map_err(err)?.strings().into_iter().collect();
    let want: BTreeSet<String> = [
        "00000", "10000", "01000", "00100", "10100", "00010", "10010", "01010", "00001", "10001", "00101", "10101",
        "00011", "10011",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    ensure(got == want, format!("label set {got:?}"))?;
    Ok("14 matchings, 14 vertices, 23 edges, exact label set".into())
}

fn label_set_sizes() -> Outcome {
    let rfd = rfd_from_face_order(&fixtures::branched5().graph, &branched5_order()).map_err(err)?;
    let sizes: Vec<usize> = label_set_trace(rfd.alpha.as_ref().unwrap(), 5)
        .map_err(err)?
        .iter()
        .map(|s| s.len())
        .collect();
    ensure(sizes == vec![2, 3, 5, 8, 14], format!("sizes {sizes:?}"))?;
    // each generated set is the vertex set of the prefix resonance graph
    for i in 1..=5 {
        let (gi, _) = rfd.prefix_graph(i).map_err(err)?;
        let n = MatchingFamily::enumerate(&gi, 1000).map_err(err)?.len();
        ensure(n == sizes[i - 1], format!("G_{i} has {n} matchings"))?;
    }
    Ok("sizes 2, 3, 5, 8, 14".into())
}

/// Every valid decomposition order of a graph, by extending prefixes.
fn all_orders(g: &PlaneGraph) -> Vec<Vec<FaceId>> {
    let n = g.finite_face_count();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<FaceId>> = (0..n).map(|k| vec![FaceId(k)]).collect();
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            if rfd_from_face_order(g, &prefix).is_ok() {
                out.push(prefix);
            }
            continue;
        }
        for k in 0..n {
            if prefix.contains(&FaceId(k)) {
                continue;
            }
            let mut next = prefix.clone();
            next.push(FaceId(k));
            // a prefix is viable when the remaining faces can follow in some order
            let mut rest: Vec<FaceId> = (0..n).map(FaceId).filter(|f| !next.contains(f)).collect();
            let mut full = next.clone();
            full.append(&mut rest);
            if viable_prefix(g, &full, next.len()) {
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

fn viable_prefix(g: &PlaneGraph, full: &[FaceId], len: usize) -> bool {
    match rfd_from_face_order(g, full) {
        Ok(_) => true,
        Err(rescube::Error::NotReducibleAtStep { step, .. }) => step > len,
        Err(_) => false,
    }
}

fn structure_suite() -> Outcome {
    let corpus = fixtures::p2c_corpus(5);
    ensure(!corpus.is_empty(), "empty corpus")?;
    let mut orders = 0;
    let mut clauses = 0;
    for b in &corpus {
        let g = &b.graph;
        let rfd = auto_rfd(g).map_err(err)?;
        let report = full_report(&rfd).map_err(err)?;
        ensure_all(&report).map_err(|e| format!("{:?}: {e}", b.hexes))?;
        clauses += report.len();
        let (family, r) = resonance(g)?;
        for order in all_orders(g) {
            let rfd = rfd_from_face_order(g, &order).map_err(err)?;
            for i in 2..=rfd.n() {
                let checks = reducible_step_report(&rfd, i).map_err(err)?;
                clauses += checks.len();
                ensure_all(&checks).map_err(|e| format!("{:?} order {:?} step {i}: {e}", b.hexes, rfd.order_names()))?;
            }
            verify_reconstruction(&rfd, &family, &r).map_err(err)?;
            let l = daisy_labelling(&rfd, &family).map_err(err)?;
            let mg = MetricGraph::from_resonance(&r);
            ensure(is_proper_labelling(&mg, &l.labels), format!("{:?}: labelling not proper", b.hexes))?;
            let labelled = mg.clone().with_labels(l.labels.clone()).map_err(err)?;
            check_daisy_classes(&labelled).map_err(err)?;
            ensure(is_daisy_cube(&mg).is_daisy_cube, format!("{:?}: not recognised as daisy cube", b.hexes))?;
            orders += 1;
        }
    }
    Ok(format!("{} graphs, {orders} decomposition orders, {clauses} clauses", corpus.len()))
}

fn oracle_cross_check() -> Outcome {
    let corpus = fixtures::p2c_corpus(5);
    for b in &corpus {
        let (family, r) = resonance(&b.graph)?;
        let mg = MetricGraph::from_resonance(&r);
        let constructive = daisy_labelling(&auto_rfd(&b.graph).map_err(err)?, &family).map_err(err)?;
        let found = exhaustive_daisy_search(&mg).map_err(err)?;
        ensure(
            found.is_some() && is_proper_labelling(&mg, &constructive.labels),
            format!("{:?}: search and construction disagree", b.hexes),
        )?;
    }
    let (_, rp) = resonance(&fixtures::pyrene().graph)?;
    let pyrene = MetricGraph::from_resonance(&rp);
    ensure(!is_daisy_cube(&pyrene).is_daisy_cube, "R(pyrene) accepted")?;
    ensure(exhaustive_daisy_search(&pyrene).map_err(err)?.is_none(), "search found a labelling of R(pyrene)")?;
    ensure(!is_daisy_cube(&path(4)).is_daisy_cube, "P4 accepted")?;
    ensure(exhaustive_daisy_search(&path(4)).map_err(err)?.is_none(), "search found a labelling of P4")?;
    Ok(format!("{} corpus graphs agree; R(pyrene) and P4 rejected", corpus.len()))
}

fn two_codings() -> Outcome {
    let g = fixtures::branched5().graph;
    let (family, _) = resonance(&g)?;
    let rfd = rfd_from_face_order(&g, &branched5_order()).map_err(err)?;
    let fdl = fdl_labelling(&rfd, &family).map_err(err)?;
    let lo = m0_hat(&g, &family).map_err(err)?;
    let hi = m1_hat(&g, &family).map_err(err)?;
    ensure(fdl.labels[lo].to_string() == "00000", format!("minimum gets {}", fdl.labels[lo]))?;
    ensure(fdl.labels[hi].to_string() == "11111", format!("maximum gets {}", fdl.labels[hi]))?;
    let effect = color_swap_effect(&rfd, &family).map_err(err)?;
    ensure(effect.fdl_complemented && effect.daisy_unchanged, format!("{effect:?}"))?;
    Ok("extremes 00000 / 11111; swap complements lattice labels and fixes daisy labels".into())
}

fn composition() -> Outcome {
    let cases = [
        ("two hexagons", fixtures::two_hexagons()),
        ("branched5 + hexagon", fixtures::branched5_plus_hexagon()),
    ];
    for (name, g) in cases {
        let (family, r) = resonance(&g)?;
        let analysis = g.elementary_analysis().map_err(err)?;
        let mut parts = Vec::new();
        for comp in &analysis.components {
            let (sub, restr) = g.subgraph(comp).map_err(err)?;
            let (_, rs) = resonance(&sub)?;
            parts.push(rs.lift(&restr).map_err(err)?);
        }
        ensure(cartesian_compose(&parts).same_as(&r), format!("{name}: product differs"))?;
        let coded = label_weakly_elementary(&g, &family, Scheme::Daisy).map_err(err)?;
        let mg = MetricGraph::from_resonance(&r);
        ensure(is_proper_labelling(&mg, &coded.labelling.labels), format!("{name}: labelling not proper"))?;
        let idim = is_partial_cube(&mg).idim;
        ensure(idim == g.finite_face_count(), format!("{name}: idim {idim}"))?;
    }
    Ok("products match, labels proper, idim = face count".into())
}

fn median_and_connectivity() -> Outcome {
    let corpus = fixtures::p2c_corpus(5);
    for b in &corpus {
        let (_, r) = resonance(&b.graph)?;
        ensure(r.is_connected(), format!("{:?}: R disconnected", b.hexes))?;
        ensure(is_median(&MetricGraph::from_resonance(&r)), format!("{:?}: R not median", b.hexes))?;
    }
    let g = fixtures::nested_hexagons();
    let a = g.elementary_analysis().map_err(err)?;
    ensure(!a.is_weakly_elementary, "nested hexagons pass the weakly elementary check")?;
    let (_, r) = resonance(&g)?;
    ensure(!r.is_connected(), "nested hexagons have a connected resonance graph")?;
    Ok(format!("{} corpus graphs connected and median; nested hexagons rejected", corpus.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("five-hexagon reproduction", branched5_reproduction),
        ("label set sizes", label_set_sizes),
        ("structure suite over corpus", structure_suite),
        ("daisy oracle cross-check", oracle_cross_check),
        ("two codings", two_codings),
        ("composition", composition),
        ("median and connectivity", median_and_connectivity),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} ({ms} ms)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} ({ms} ms)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
