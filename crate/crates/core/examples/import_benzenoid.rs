//! Turn a hexagon list into a plane graph and write it as JSON.
//!
//! `cargo run --example import_benzenoid -- examples/data/branched5.hex`

use rescube::plane_graph::parse_benzenoid;

fn main() -> rescube::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "examples/data/branched5.hex".into());
    let b = parse_benzenoid(&std::fs::read_to_string(&path)?)?;
    eprintln!(
        "{} hexagons: {} vertices, {} edges",
        b.hexes.len(),
        b.graph.vertex_count(),
        b.graph.edge_count()
    );
    for (k, h) in b.hexes.iter().enumerate() {
        eprintln!("hex {:?} is face {}", h, b.face_of_hex(k));
    }
    println!("{}", b.graph.to_graph_file().to_json()?);
    Ok(())
}
