//! Enumerate perfect matchings, select handle-defined subsets and find the
//! extremal matchings.

use rescube::fixtures;
use rescube::matchings::{m0_hat, m1_hat, matching_subset, MatchingFamily, Selector};
use rescube::plane_graph::FaceId;

fn main() -> rescube::Result<()> {
    let g = fixtures::branched5().graph;
    let family = MatchingFamily::enumerate(&g, 1000)?;
    println!("{} perfect matchings", family.len());
    for f in g.finite_faces() {
        let minus = matching_subset(&g, &family, f.id, Selector::AllPMinus)?;
        let plus = matching_subset(&g, &family, f.id, Selector::AllPPlus)?;
        println!("{}: P- {:?}  P+ {:?}", f.id, minus, plus);
    }
    let s = FaceId(0);
    for sel in ["P+ds", "J-ds", "J+", "P-ds"] {
        let sel: Selector = sel.parse()?;
        println!("{s} {sel}: {:?}", matching_subset(&g, &family, s, sel)?);
    }
    println!("no proper alternating cycle: matching {}", m0_hat(&g, &family)?);
    println!("no improper alternating cycle: matching {}", m1_hat(&g, &family)?);
    Ok(())
}
