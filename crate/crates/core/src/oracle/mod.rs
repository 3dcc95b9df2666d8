//! Palette-index certificates: structural lower bounds, witness colorings for
//! upper bounds, and an exhaustive search that closes the gap on small graphs.

mod naive;
mod search;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::{chromatic_index, ChromaticIndex, Verdict};
use crate::coloring::{EdgeColoring, Palette};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use naive::naive_palette_index;
use search::{Outcome, PaletteSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerRule {
    /// One palette per distinct vertex degree.
    DegreeSet,
    /// Regular and class 2: more than one palette, and never exactly two.
    RegularClass2,
    /// Regular and class 1; the bound 1 is attained.
    RegularNot2,
    /// Every smaller palette count was ruled out by exhaustive search.
    Exhaustive,
}

impl fmt::Display for LowerRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerRule::DegreeSet => "degree-set",
            LowerRule::RegularClass2 => "regular-class2",
            LowerRule::RegularNot2 => "regular-not-2",
            LowerRule::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LowerBound {
    pub value: usize,
    pub rule: LowerRule,
    /// The chromatic-index run behind a regular-graph rule, if one was made.
    pub chromatic: Option<ChromaticIndex>,
}

/// The best lower bound available from degrees and, for regular graphs, the
/// chromatic class. An exhausted budget falls back to the degree bound.
pub fn lower_bound(g: &Graph, budget: &Budget) -> Result<LowerBound> {
    let profile = g.degree_profile();
    let degree_bound = LowerBound {
        value: profile.degrees.len().max(1),
        rule: LowerRule::DegreeSet,
        chromatic: None,
    };
    if !profile.regular || g.edge_count() == 0 {
        return Ok(degree_bound);
    }
    let chi = chromatic_index(g, budget)?;
    Ok(match chi.verdict() {
        Some(Verdict::ClassTwo) => LowerBound {
            value: 3,
            rule: LowerRule::RegularClass2,
            chromatic: Some(chi),
        },
        Some(Verdict::ClassOne) => LowerBound {
            value: 1,
            rule: LowerRule::RegularNot2,
            chromatic: Some(chi),
        },
        None => LowerBound {
            chromatic: Some(chi),
            ..degree_bound
        },
    })
}

#[derive(Clone, Debug)]
pub struct UpperBound {
    pub value: usize,
    pub witness: EdgeColoring,
    /// Construction name, `solver`, or `oracle`.
    pub rule: String,
}

/// A palette-index verdict with its evidence.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub graph: Arc<Graph>,
    pub lower: usize,
    pub lower_rule: LowerRule,
    pub upper: Option<UpperBound>,
    pub exact: Option<usize>,
    pub nodes: u64,
}

impl Certificate {
    fn new(graph: Arc<Graph>, lower: usize, lower_rule: LowerRule, upper: Option<UpperBound>, nodes: u64) -> Self {
        let exact = upper.as_ref().filter(|u| u.value == lower).map(|u| u.value);
        Certificate {
            graph,
            lower,
            lower_rule,
            upper,
            exact,
            nodes,
        }
    }

    pub fn upper_value(&self) -> Option<usize> {
        self.upper.as_ref().map(|u| u.value)
    }

    /// Offers a candidate witness; keeps it if it beats the current upper bound.
    fn offer(&mut self, value: usize, witness: EdgeColoring, rule: &str) {
        if self.upper.as_ref().is_none_or(|u| value < u.value) {
            self.upper = Some(UpperBound {
                value,
                witness,
                rule: rule.to_string(),
            });
        }
        self.exact = self.upper.as_ref().filter(|u| u.value == self.lower).map(|u| u.value);
    }
}

/// Default ceiling for the deepening loop.
pub fn default_max_palettes(g: &Graph) -> usize {
    let profile = g.degree_profile();
    if profile.regular {
        profile.max_degree + 1
    } else {
        profile.degrees.len() + profile.max_degree
    }
}

/// Searches for a coloring with at most `target` palettes. Returns the
/// witness, `Ok(None)` if none exists, or an error if the budget runs out.
pub fn find_coloring_with_palettes(g: &Graph, target: usize, budget: &Budget) -> Result<Option<EdgeColoring>> {
    find_coloring_with_pool(g, target, &[], budget)
}

/// Like [`find_coloring_with_palettes`], but `pool` palettes are already in use
/// elsewhere and count toward `target`; reusing them is free.
pub fn find_coloring_with_pool(
    g: &Graph,
    target: usize,
    pool: &[Palette],
    budget: &Budget,
) -> Result<Option<EdgeColoring>> {
    let (outcome, nodes) = PaletteSearch::new(g, target, pool)?.run(budget);
    match outcome {
        Outcome::Found(colors) => Ok(Some(EdgeColoring::new(Arc::new(g.clone()), colors)?)),
        Outcome::Infeasible => Ok(None),
        Outcome::OutOfBudget => Err(Error::BudgetExceeded(format!(
            "no verdict for {target} palettes after {nodes} nodes"
        ))),
    }
}

/// Exact palette index by iterative deepening over the palette count.
///
/// Starting from [`lower_bound`], each target `p` is searched exhaustively; the
/// first feasible `p` is exact. If the budget runs out, the certificate carries
/// the interval proven so far and the best witness known.
pub fn palette_index_exact(g: &Graph, max_palettes: Option<usize>, budget: &Budget) -> Result<Certificate> {
    let start = std::time::Instant::now();
    let graph = Arc::new(g.clone());
    let lb = lower_bound(g, budget)?;
    let max_palettes = max_palettes.unwrap_or_else(|| default_max_palettes(g));
    let mut nodes = lb.chromatic.as_ref().map_or(0, |c| match c {
        ChromaticIndex::Determined { nodes, .. } | ChromaticIndex::Indeterminate { nodes, .. } => *nodes,
    });

    let mut cert = Certificate::new(graph.clone(), lb.value, lb.rule, None, nodes);
    if let Some(w) = lb.chromatic.as_ref().and_then(ChromaticIndex::witness) {
        let count = w.palette_count()?;
        cert.offer(count, w.clone(), "solver");
    }
    if cert.exact.is_some() {
        return Ok(cert);
    }

    let mut p = lb.value;
    while p <= max_palettes {
        if cert.upper_value().is_some_and(|u| u <= p) {
            // the witness attains p and everything below was ruled out
            break;
        }
        let left = budget.remaining(nodes, start.elapsed());
        let (outcome, n) = PaletteSearch::new(g, p, &[])?.run(&left);
        nodes += n;
        cert.nodes = nodes;
        match outcome {
            Outcome::Found(colors) => {
                let witness = EdgeColoring::new(graph.clone(), colors)?;
                let count = witness.palette_count()?;
                debug_assert!(count <= p);
                cert.lower = p;
                if p != lb.value {
                    cert.lower_rule = LowerRule::Exhaustive;
                }
                cert.offer(count, witness, "oracle");
                break;
            }
            Outcome::Infeasible => {
                p += 1;
                cert.lower = p;
                cert.lower_rule = LowerRule::Exhaustive;
            }
            Outcome::OutOfBudget => break,
        }
    }
    cert.exact = cert.upper.as_ref().filter(|u| u.value == cert.lower).map(|u| u.value);
    Ok(cert)
}

/// Combines candidate colorings with the structural lower bound and, when a
/// budget is given, the exhaustive oracle.
pub fn certify(
    g: &Graph,
    candidates: &[(String, EdgeColoring)],
    oracle_budget: Option<&Budget>,
    chromatic_budget: &Budget,
) -> Result<Certificate> {
    for (_, c) in candidates {
        if c.host() != g {
            return Err(Error::DomainMismatch("candidate colors a different graph".into()));
        }
        c.ensure_proper()?;
    }
    let mut cert = match oracle_budget {
        Some(b) => palette_index_exact(g, None, b)?,
        None => {
            let lb = lower_bound(g, chromatic_budget)?;
            let mut cert = Certificate::new(Arc::new(g.clone()), lb.value, lb.rule, None, 0);
            if let Some(w) = lb.chromatic.as_ref().and_then(ChromaticIndex::witness) {
                cert.offer(w.palette_count()?, w.clone(), "solver");
            }
            cert
        }
    };
    for (name, c) in candidates {
        cert.offer(c.palette_count()?, c.clone(), name);
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, cycle, path};

    #[test]
    fn grid_lower_bound_from_degrees() {
        let p3 = path(3).unwrap();
        let lb = lower_bound(&cartesian_product(&p3, &p3).unwrap(), &Budget::UNLIMITED).unwrap();
        assert_eq!((lb.value, lb.rule), (3, LowerRule::DegreeSet));
    }

    #[test]
    fn even_cycle_lower_bound() {
        let lb = lower_bound(&cycle(6).unwrap(), &Budget::UNLIMITED).unwrap();
        assert_eq!((lb.value, lb.rule), (1, LowerRule::RegularNot2));
    }

    #[test]
    fn small_exact_values() {
        let cert = palette_index_exact(&path(3).unwrap(), None, &Budget::UNLIMITED).unwrap();
        assert_eq!(cert.exact, Some(3));
        let cert = palette_index_exact(&cycle(4).unwrap(), None, &Budget::UNLIMITED).unwrap();
        assert_eq!(cert.exact, Some(1));
        let cert = palette_index_exact(&cycle(5).unwrap(), None, &Budget::UNLIMITED).unwrap();
        assert_eq!(cert.exact, Some(3));
        assert_eq!(cert.lower_rule, LowerRule::RegularClass2);
    }

    #[test]
    fn budget_exhaustion_is_an_interval() {
        let p3 = path(3).unwrap();
        let g = cartesian_product(&p3, &p3).unwrap();
        let cert = palette_index_exact(&g, None, &Budget::nodes(50)).unwrap();
        assert!(cert.exact.is_none());
        assert!(cert.lower <= 5);
    }

    #[test]
    fn naive_matches_small_cases() {
        assert_eq!(naive_palette_index(&path(3).unwrap(), 12), Some(3));
        assert_eq!(naive_palette_index(&path(4).unwrap(), 12), Some(2));
        assert_eq!(naive_palette_index(&cycle(5).unwrap(), 12), Some(3));
        assert_eq!(naive_palette_index(&cycle(6).unwrap(), 12), Some(1));
        assert_eq!(naive_palette_index(&cycle(13).unwrap(), 12), None);
    }

    #[test]
    fn certify_rejects_improper() {
        let c3 = Arc::new(cycle(3).unwrap());
        let bad = EdgeColoring::new(c3.clone(), vec![1, 1, 2]).unwrap();
        assert!(certify(&c3, &[("x".into(), bad)], None, &Budget::UNLIMITED).is_err());
    }
}
