use std::sync::Arc;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::cartesian_product;

use super::smallest_missing;

/// A `(Δ(G) + Δ(H))`-edge-coloring of `G □ H` from a class-1 coloring `g` of
/// `G` and a coloring `h` of `H`.
///
/// H-fiber edges keep `h`. If `h` uses at most `Δ(H)` colors, G-fiber edges get
/// `g + Δ(H)`. Otherwise `h` uses `[Δ(H)+1]` and the G-fiber edges of color `c`
/// (default `Δ(G)`) at layer `z` take the smallest color of `[Δ(H)+1]` missing
/// at `z` in `h`; the other colors of `g` are packed into
/// `[Δ(H)+2, Δ(H)+Δ(G)]` in order.
pub fn class1_product_coloring(g: &EdgeColoring, h: &EdgeColoring, c: Option<Color>) -> Result<EdgeColoring> {
    g.ensure_proper()?;
    h.ensure_proper()?;
    let gg = g.host();
    let hh = h.host();
    let dg = gg.max_degree() as Color;
    let dh = hh.max_degree() as Color;
    if g.max_color() > dg {
        return Err(Error::ColorRange(format!(
            "g must use colors in [{dg}] (a class-1 coloring), found {}",
            g.max_color()
        )));
    }
    if h.max_color() > dh + 1 {
        return Err(Error::ColorRange(format!(
            "h must use colors in [{}], found {}",
            dh + 1,
            h.max_color()
        )));
    }
    let class_two = h.max_color() > dh;
    let c = c.unwrap_or(dg);
    if class_two && (c == 0 || c > dg) {
        return Err(Error::ColorRange(format!("c must lie in [{dg}], got {c}")));
    }

    let nh = hh.vertex_count();
    let missing: Vec<Color> = (0..nh).map(|z| smallest_missing(&h.palette_at(z), dh + 1)).collect();
    let host = Arc::new(cartesian_product(gg, hh)?);
    let mut colors = Vec::with_capacity(host.edge_count());
    for &(a, b) in host.edges() {
        let (x1, z1) = (a / nh, a % nh);
        let (x2, z2) = (b / nh, b % nh);
        let color = if x1 == x2 {
            h.color_of(z1, z2)
        } else {
            g.color_of(x1, x2).map(|gc| {
                if !class_two {
                    gc + dh
                } else if gc == c {
                    missing[z1]
                } else if gc < c {
                    gc + dh + 1
                } else {
                    gc + dh
                }
            })
        };
        colors.push(color.ok_or_else(|| Error::DomainMismatch("product edge without factor edge".into()))?);
    }
    EdgeColoring::new(host, colors)
}
