//! Daisy coding of the matchings and the label sets generated from the
//! attachment map.

use rescube::coding::{daisy_labelling, label_set_trace};
use rescube::cube_kit::{is_daisy_cube, is_proper_labelling, MetricGraph};
use rescube::decomposition::rfd_from_face_order;
use rescube::fixtures;
use rescube::matchings::MatchingFamily;
use rescube::plane_graph::FaceId;
use rescube::resonance::build_resonance;

fn main() -> rescube::Result<()> {
    let g = fixtures::branched5().graph;
    let family = MatchingFamily::enumerate(&g, 1000)?;
    let rfd = rfd_from_face_order(&g, &(0..5).map(FaceId).collect::<Vec<_>>())?;
    let l = daisy_labelling(&rfd, &family)?;
    for (id, s) in l.strings().iter().enumerate() {
        println!("matching {id:>2}: {s}");
    }
    let alpha = rfd.alpha.as_ref().unwrap();
    for (i, set) in label_set_trace(alpha, rfd.n())?.iter().enumerate() {
        println!("L{}: {} labels", i + 1, set.len());
    }
    let mg = MetricGraph::from_resonance(&build_resonance(&g, &family));
    println!("proper labelling: {}", is_proper_labelling(&mg, &l.labels));
    println!("daisy cube: {}", is_daisy_cube(&mg).is_daisy_cube);
    Ok(())
}
