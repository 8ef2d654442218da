//! Build a plane graph from coordinates and inspect its faces and handles.

use rescube::plane_graph::PlaneGraph;

fn main() -> rescube::Result<()> {
    // two squares sharing an edge: a 2x3 grid
    let vertices = [
        (0, 0.0, 0.0),
        (1, 1.0, 0.0),
        (2, 2.0, 0.0),
        (3, 0.0, 1.0),
        (4, 1.0, 1.0),
        (5, 2.0, 1.0),
    ];
    let edges = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)];
    let g = PlaneGraph::from_coordinates(&vertices, &edges)?;
    println!("{} vertices, {} edges, {} finite faces", g.vertex_count(), g.edge_count(), g.finite_face_count());
    for f in g.finite_faces() {
        let ids: Vec<i64> = f.boundary().iter().map(|&v| g.id(v)).collect();
        println!("{}: clockwise boundary {:?}", f.id, ids);
        let d = g.facial_handle_decomposition(f.id)?;
        for h in &d.handles {
            let hv: Vec<i64> = h.vertices.iter().map(|&v| g.id(v)).collect();
            println!("  {:?} handle {:?}", h.kind, hv);
        }
    }
    let periphery: Vec<i64> = g.periphery_cycle().unwrap().iter().map(|&v| g.id(v)).collect();
    println!("periphery {periphery:?}");
    println!("{}", g.to_graph_file().to_json()?);
    Ok(())
}
