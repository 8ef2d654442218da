//! Face splits, per-step reduction checks and the rebuild from K2.

use rescube::decomposition::{full_report, reconstruct_from_k2, split_by_face};
use rescube::decomposition::rfd_from_face_order;
use rescube::fixtures;
use rescube::matchings::MatchingFamily;
use rescube::plane_graph::FaceId;
use rescube::resonance::build_resonance;

fn main() -> rescube::Result<()> {
    let g = fixtures::branched5().graph;
    let family = MatchingFamily::enumerate(&g, 1000)?;
    let r = build_resonance(&g, &family);
    for f in g.finite_faces() {
        let s = split_by_face(&g, &family, &r, f.id)?;
        println!("{}: {} + {} vertices, {} labelled edges", f.id, s.minus_side.len(), s.plus_side.len(), s.f_edges.len());
    }
    let rfd = rfd_from_face_order(&g, &(0..5).map(FaceId).collect::<Vec<_>>())?;
    let report = full_report(&rfd)?;
    let failed = report.iter().filter(|c| !c.passed()).count();
    println!("{} clauses checked, {failed} failed", report.len());
    let rebuilt = reconstruct_from_k2(&rfd)?;
    println!("rebuilt from K2: {} vertices, {} edges", rebuilt.vertex_count(), rebuilt.edge_count());
    Ok(())
}
