//! The alternation-based coding, its extremes, and what a colour swap does
//! to both codings.

use rescube::coding::{color_swap_effect, fdl_labelling};
use rescube::decomposition::auto_rfd;
use rescube::fixtures;
use rescube::matchings::{m0_hat, m1_hat, MatchingFamily};

fn main() -> rescube::Result<()> {
    let g = fixtures::branched5().graph;
    let family = MatchingFamily::enumerate(&g, 1000)?;
    let rfd = auto_rfd(&g)?;
    let l = fdl_labelling(&rfd, &family)?;
    println!("order {:?}", rfd.order_names());
    for (id, s) in l.strings().iter().enumerate() {
        println!("matching {id:>2}: {s}");
    }
    println!("minimum {} -> {}", m0_hat(&g, &family)?, l.labels[m0_hat(&g, &family)?]);
    println!("maximum {} -> {}", m1_hat(&g, &family)?, l.labels[m1_hat(&g, &family)?]);
    println!("{:?}", color_swap_effect(&rfd, &family)?);
    Ok(())
}
