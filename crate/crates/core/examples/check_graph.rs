//! Elementary, weakly elementary and peripheral 2-colourability verdicts,
//! with the witness for a failure.

use rescube::fixtures;
use rescube::plane_graph::PlaneGraph;

fn report(name: &str, g: &PlaneGraph) -> rescube::Result<()> {
    let a = g.elementary_analysis()?;
    let p = g.is_peripherally_two_colorable();
    print!(
        "{name:>18}: elementary={} weakly={} p2c={}",
        a.is_elementary, a.is_weakly_elementary, p.peripherally_two_colorable
    );
    match p.violation {
        Some(v) => println!("  ({v})"),
        None => println!(),
    }
    Ok(())
}

fn main() -> rescube::Result<()> {
    report("branched5", &fixtures::branched5().graph)?;
    report("pyrene", &fixtures::pyrene().graph)?;
    report("two hexagons", &fixtures::two_hexagons())?;
    report("nested hexagons", &fixtures::nested_hexagons())?;
    report("hexagon + pendant", &fixtures::hexagon_with_pendant())?;
    Ok(())
}
