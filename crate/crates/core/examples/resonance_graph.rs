//! Build the resonance graph and print it in DOT form.

use rescube::fixtures;
use rescube::matchings::MatchingFamily;
use rescube::resonance::build_resonance;

fn main() -> rescube::Result<()> {
    let g = fixtures::branched5().graph;
    let family = MatchingFamily::enumerate(&g, 1000)?;
    let r = build_resonance(&g, &family);
    eprintln!("{} vertices, {} edges, connected: {}", r.vertex_count(), r.edge_count(), r.is_connected());
    for f in r.faces_used() {
        let n = r.edges.iter().filter(|e| e.face == f).count();
        eprintln!("  {n} edges labelled {f}");
    }
    print!("{}", r.to_dot(None));
    Ok(())
}
