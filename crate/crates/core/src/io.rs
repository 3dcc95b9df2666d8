//! JSON documents and DOT rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring, Palette};
use crate::error::{Error, Result};
use crate::graph::{Graph, Provenance};
use crate::oracle::Certificate;
use crate::torus::{TorusDecomposition, TorusEdgeKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            provenance: g.provenance().map(ToString::to_string),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<Graph> {
        let g = Graph::new(j.n, j.edges.iter().map(|&[u, v]| (u, v)))?;
        Ok(match &j.provenance {
            Some(p) => g.with_provenance(Provenance::External(p.clone())),
            None => g,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub graph: GraphJson,
    pub colors: Vec<[usize; 3]>,
}

impl From<&EdgeColoring> for ColoringJson {
    fn from(f: &EdgeColoring) -> Self {
        ColoringJson {
            graph: f.host().into(),
            colors: f.triples().into_iter().map(|(u, v, c)| [u, v, c as usize]).collect(),
        }
    }
}

impl TryFrom<&ColoringJson> for EdgeColoring {
    type Error = Error;

    fn try_from(j: &ColoringJson) -> Result<EdgeColoring> {
        let host = Arc::new(Graph::try_from(&j.graph)?);
        let triples: Vec<_> = j.colors.iter().map(|&[u, v, c]| (u, v, c as Color)).collect();
        EdgeColoring::from_triples(host, &triples)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PalettesJson {
    pub palettes: Vec<Palette>,
    pub count: usize,
    pub per_vertex: BTreeMap<usize, Palette>,
}

impl PalettesJson {
    pub fn of(f: &EdgeColoring) -> Result<Self> {
        let s = f.palette_summary()?;
        Ok(PalettesJson {
            count: s.count,
            palettes: s.distinct,
            per_vertex: s.palette_of.into_iter().enumerate().collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleJson {
    pub lower: String,
    pub upper: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    pub rule: RuleJson,
    pub nodes: u64,
    pub witness: Option<ColoringJson>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            lower: c.lower,
            upper: c.upper_value(),
            exact: c.exact,
            rule: RuleJson {
                lower: c.lower_rule.to_string(),
                upper: c.upper.as_ref().map(|u| u.rule.clone()),
            },
            nodes: c.nodes,
            witness: c.upper.as_ref().map(|u| (&u.witness).into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusEdgeJson {
    pub kind: TorusEdgeKind,
    pub initial: [usize; 2],
    pub terminal: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorusJson {
    pub s: usize,
    pub t: usize,
    pub ell: usize,
    pub h: usize,
    pub z_sets: Vec<Vec<TorusEdgeJson>>,
    /// Staircase indices grouped into the three classes.
    pub classes: Vec<Vec<usize>>,
}

impl From<&TorusDecomposition> for TorusJson {
    fn from(d: &TorusDecomposition) -> Self {
        TorusJson {
            s: d.s,
            t: d.t,
            ell: d.ell,
            h: d.h,
            z_sets: d
                .z_sets
                .iter()
                .map(|z| {
                    z.iter()
                        .map(|e| {
                            let (j, k) = e.terminal();
                            TorusEdgeJson {
                                kind: e.kind,
                                initial: [e.initial.0, e.initial.1],
                                terminal: [j, k],
                            }
                        })
                        .collect()
                })
                .collect(),
            classes: d.classes.to_vec(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

const DOT_COLORS: [&str; 10] = [
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
    "gold",
    "gray40",
];
const DOT_STYLES: [&str; 3] = ["solid", "dashed", "dotted"];

/// How edges are styled in DOT output.
#[derive(Clone, Debug)]
pub enum DotStyle {
    /// One color per color index, with the color as edge label.
    Colors,
    /// `solid`/`dashed`/`dotted` by a class index per edge, in edge order.
    Classes(Vec<usize>),
}

/// Renders a proper coloring as an undirected DOT graph with stable ordering.
pub fn export_dot(f: &EdgeColoring, style: &DotStyle) -> Result<String> {
    f.ensure_proper()?;
    let g = f.host();
    if let DotStyle::Classes(classes) = style {
        if classes.len() != g.edge_count() {
            return Err(Error::DomainMismatch("one class per edge expected".into()));
        }
    }
    let mut out = String::from("graph G {\n");
    if g.edge_count() > 0 {
        for v in 0..g.vertex_count() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (idx, (&(u, v), &c)) in g.edges().iter().zip(f.colors()).enumerate() {
        let attrs = match style {
            DotStyle::Colors => format!(
                "color=\"{}\", label=\"{c}\"",
                DOT_COLORS[(c as usize - 1) % DOT_COLORS.len()]
            ),
            DotStyle::Classes(classes) => format!(
                "style=\"{}\", label=\"{c}\"",
                DOT_STYLES[classes[idx] % DOT_STYLES.len()]
            ),
        };
        let _ = writeln!(out, "  {u} -- {v} [{attrs}];");
    }
    out.push_str("}\n");
    Ok(out)
}
