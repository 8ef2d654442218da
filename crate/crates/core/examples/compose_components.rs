//! A disconnected but weakly elementary graph: its resonance graph is the
//! product of the components' and the labels concatenate.

use rescube::coding::{label_weakly_elementary, Scheme};
use rescube::cube_kit::{is_partial_cube, is_proper_labelling, MetricGraph};
use rescube::fixtures;
use rescube::matchings::MatchingFamily;

fn main() -> rescube::Result<()> {
    for (name, g) in [("two hexagons", fixtures::two_hexagons()), ("branched5 + hexagon", fixtures::branched5_plus_hexagon())] {
        let family = MatchingFamily::enumerate(&g, 10_000)?;
        let c = label_weakly_elementary(&g, &family, Scheme::Daisy)?;
        let mg = MetricGraph::from_resonance(&c.resonance);
        println!(
            "{name}: {} matchings, components with {:?} faces, idim {}, proper {}",
            family.len(),
            c.component_faces,
            is_partial_cube(&mg).idim,
            is_proper_labelling(&mg, &c.labelling.labels)
        );
    }
    Ok(())
}
