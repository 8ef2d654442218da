//! Reducible faces, a validated face order and the attachment map.

use rescube::decomposition::{auto_rfd, find_reducible_faces, rfd_from_face_order};
use rescube::fixtures;
use rescube::plane_graph::FaceId;

fn main() -> rescube::Result<()> {
    let g = fixtures::branched5().graph;
    println!("reducible faces: {:?}", find_reducible_faces(&g).iter().map(|f| f.to_string()).collect::<Vec<_>>());

    let order: Vec<FaceId> = (0..5).map(FaceId).collect();
    let rfd = rfd_from_face_order(&g, &order)?;
    println!("attachment map {:?}", rfd.alpha);

    let peeled = auto_rfd(&g)?;
    println!("peeled order {:?}", peeled.order_names());

    let bad = [FaceId(0), FaceId(2), FaceId(1), FaceId(3), FaceId(4)];
    if let Err(e) = rfd_from_face_order(&g, &bad) {
        println!("rejected: {e}");
    }
    match auto_rfd(&fixtures::pyrene().graph) {
        Ok(p) => println!("pyrene peels as {:?}; notes {:?}", p.order_names(), p.notes),
        Err(e) => println!("pyrene: {e}"),
    }
    Ok(())
}
