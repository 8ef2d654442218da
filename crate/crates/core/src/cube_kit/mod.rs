//! Metric machinery for partial cubes: Θ-classes, median and daisy-cube
//! recognition, expansions. Everything is brute force over the distance
//! table and meant for small graphs.

mod daisy;
mod expansion;
mod median;
pub mod metric;
mod theta;

pub use daisy::{
    check_daisy_classes, exhaustive_daisy_search, is_daisy_cube, is_downward_closed, is_o_closed,
    is_proper_labelling, operator_o, DaisyMethod, DaisyVerdict, MAX_EXHAUSTIVE_IDIM,
};
pub use expansion::{expand, Expansion};
pub use median::{check_median_split, is_median, MedianSplitReport};
pub use metric::MetricGraph;
pub use theta::{
    is_partial_cube, split_class, theta_classes, theta_related, ClassSplit, PartialCubeVerdict, ThetaClasses,
};
