//! Explicit palette-minimizing colorings of product graphs.

mod cubic;
mod layered;
mod nrg;
mod product;

pub use cubic::{cubic_matching_reduction, CubicMode};
pub use layered::{
    cycle_times_regular_coloring, path_times_class1_regular_coloring, path_times_regular_coloring, LayeredColoringPlan,
};
pub use nrg::{nrg_product_coloring, qualifying_matchings, NrgSpec};
pub use product::class1_product_coloring;

use crate::coloring::Color;

/// The smallest color of `1..=k` absent from `palette`, or `k + 1`.
pub(crate) fn smallest_missing(palette: &[Color], k: Color) -> Color {
    (1..=k).find(|c| !palette.contains(c)).unwrap_or(k + 1)
}
