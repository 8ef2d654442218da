//! Θ-classes, partial cubes, median graphs, daisy cubes and expansions on
//! small hand-made graphs.

use rescube::cube_kit::metric::{cycle, hypercube, path};
use rescube::cube_kit::{expand, is_daisy_cube, is_median, is_partial_cube, theta_classes, MetricGraph};

fn main() -> rescube::Result<()> {
    let k23 = MetricGraph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])?;
    for (name, g) in [("P4", path(4)), ("C6", cycle(6)), ("Q3", hypercube(3)), ("K2,3", k23)] {
        let pc = is_partial_cube(&g);
        println!(
            "{name:>4}: classes={} partial cube={} idim={} median={} daisy={}",
            theta_classes(&g).len(),
            pc.is_partial_cube,
            pc.idim,
            is_median(&g),
            is_daisy_cube(&g).is_daisy_cube
        );
    }
    let k2 = MetricGraph::new(2, &[(0, 1)])?.with_labels(vec!["0".parse()?, "1".parse()?])?;
    let p3 = expand(&k2, &[0, 1], &[0])?;
    let labels: Vec<String> = p3.graph.labels().unwrap().iter().map(|l| l.to_string()).collect();
    println!("K2 expanded along the 0 end: {labels:?}, o-closed expansion: {}", p3.le);
    Ok(())
}
