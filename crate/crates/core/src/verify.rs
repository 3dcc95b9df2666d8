//! Parameter sweeps that check constructions and oracle values, with a
//! machine-readable report per run.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::{class_one_coloring, optimal_coloring};
use crate::coloring::{disjoint_product_coloring, Color, EdgeColoring, Palette};
use crate::constructions::{
    cubic_matching_reduction, nrg_product_coloring, path_times_class1_regular_coloring, qualifying_matchings,
    CubicMode, NrgSpec,
};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, complete, cycle, hypercube, path, petersen, remove_edges, Graph};
use crate::matching::Matching;
use crate::oracle::{find_coloring_with_palettes, naive_palette_index, palette_index_exact};
use crate::torus::{torus_three_palette_coloring, verify_partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Torus,
    Nrg,
    CyclePath,
    Cubic,
    OracleCross,
    ProductBound,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Torus,
        Suite::Nrg,
        Suite::CyclePath,
        Suite::Cubic,
        Suite::OracleCross,
        Suite::ProductBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Torus => "torus",
            Suite::Nrg => "nrg",
            Suite::CyclePath => "cycle-path",
            Suite::Cubic => "cubic",
            Suite::OracleCross => "oracle-cross",
            Suite::ProductBound => "product-bound",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteParams {
    /// Largest `s` for the torus sweep.
    pub max_s: usize,
    /// Largest `s` and `t` for the cycle-path sweep.
    pub max: usize,
    /// Largest edge count for the oracle cross-check.
    pub max_edges: usize,
    /// Number of random factor pairs for the product-bound sweep.
    pub pairs: usize,
    pub seed: u64,
    pub budget: Budget,
    /// Record wall-clock time per case (makes reports machine-dependent).
    pub timings: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_s: 13,
            max: 9,
            max_edges: 12,
            pairs: 50,
            seed: 0,
            budget: Budget::nodes(5_000_000),
            timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Indeterminate,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseReport {
    #[serde(skip)]
    key: Vec<usize>,
    pub case: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub palettes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl CaseReport {
    fn new(key: Vec<usize>, case: String) -> Self {
        CaseReport {
            key,
            case,
            status: Status::Pass,
            palettes: None,
            expected: None,
            detail: None,
            millis: None,
        }
    }

    fn fail(mut self, detail: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.detail = Some(detail.into());
        self
    }

    fn with_error(self, e: Error) -> Self {
        let indeterminate = matches!(e, Error::BudgetExceeded(_));
        let mut c = self.fail(e.to_string());
        if indeterminate {
            c.status = Status::Indeterminate;
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub suite: Suite,
    pub params: SuiteParams,
    pub status: Status,
    pub passed: usize,
    pub failed: usize,
    pub indeterminate: usize,
    pub cases: Vec<CaseReport>,
}

impl Report {
    fn new(suite: Suite, params: &SuiteParams, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.key.cmp(&b.key).then_with(|| a.case.cmp(&b.case)));
        let count = |s| cases.iter().filter(|c| c.status == s).count();
        let (passed, failed, indeterminate) = (count(Status::Pass), count(Status::Fail), count(Status::Indeterminate));
        Report {
            suite,
            params: params.clone(),
            status: cases.iter().map(|c| c.status).max().unwrap_or(Status::Pass),
            passed,
            failed,
            indeterminate,
            cases,
        }
    }

    pub fn first_failure(&self) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.status == Status::Fail)
    }

    /// A plain-text table, one line per case.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Indeterminate => "INDETERMINATE",
            };
            out.push_str(&format!("{status:<13} {}", c.case));
            if let Some(p) = c.palettes {
                out.push_str(&format!("  palettes={p}"));
            }
            if let Some(e) = &c.expected {
                out.push_str(&format!("  expected={e}"));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!("  ({d})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} indeterminate\n",
            self.suite, self.passed, self.failed, self.indeterminate
        ));
        out
    }
}

/// Runs one suite. Case failures are reported, not returned as errors.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Report {
    let cases = match suite {
        Suite::Torus => torus_cases(params),
        Suite::Nrg => nrg_cases(params),
        Suite::CyclePath => cycle_path_cases(params),
        Suite::Cubic => cubic_cases(params),
        Suite::OracleCross => oracle_cross_cases(params),
        Suite::ProductBound => product_bound_cases(params),
    };
    Report::new(suite, params, cases)
}

fn timed(
    params: &SuiteParams,
    key: Vec<usize>,
    case: String,
    body: impl FnOnce(CaseReport) -> CaseReport,
) -> CaseReport {
    let start = Instant::now();
    let mut c = body(CaseReport::new(key, case));
    if params.timings {
        c.millis = Some(start.elapsed().as_millis());
    }
    c
}

fn torus_palettes() -> BTreeSet<Palette> {
    crate::torus::TORUS_PALETTES.iter().map(|p| p.to_vec()).collect()
}

fn torus_cases(params: &SuiteParams) -> Vec<CaseReport> {
    let mut out = Vec::new();
    for s in (3..=params.max_s).step_by(2) {
        for t in (3..=s).step_by(2) {
            out.push(timed(params, vec![s, t], format!("s={s} t={t}"), |c| {
                let check = || -> Result<std::result::Result<usize, String>> {
                    let d = verify_partition(s, t)?;
                    let total: usize = d.z_sets.iter().map(Vec::len).sum();
                    if total != 2 * s * t || d.z_sets.iter().any(|z| z.len() != 2 * s) {
                        return Ok(Err(format!("staircase sizes sum to {total}")));
                    }
                    let f = torus_three_palette_coloring(s, t)?;
                    let summary = f.palette_summary()?;
                    let found: BTreeSet<Palette> = summary.distinct.iter().cloned().collect();
                    if found != torus_palettes() {
                        return Ok(Err(format!("palettes {:?}", summary.distinct)));
                    }
                    Ok(Ok(summary.count))
                };
                match check() {
                    Ok(Ok(count)) => CaseReport {
                        palettes: Some(count),
                        ..c
                    },
                    Ok(Err(msg)) => c.fail(msg),
                    Err(e) => c.with_error(e),
                }
            }));
        }
    }
    out
}

fn nrg_bases() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![("Q3", hypercube(3)?), ("C4", cycle(4)?), ("C6", cycle(6)?)])
}

fn nrg_factors() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![("C3", cycle(3)?), ("C4", cycle(4)?), ("K2", complete(2)?)])
}

/// Checks one `(G', M, X, H)` instance; returns the palette count.
pub fn check_nrg_instance(
    g_prime: &Graph,
    matching: &Matching,
    removed: &[crate::graph::Edge],
    h: &EdgeColoring,
    budget: &Budget,
) -> Result<std::result::Result<usize, String>> {
    let spec = NrgSpec::derive(g_prime, matching, removed, budget)?;
    let f = nrg_product_coloring(&spec, h)?;
    f.ensure_proper()?;
    let r = (spec.degree() + h.host().max_degree()) as Color;
    let expected = vec![(1..r).collect::<Palette>(), (1..=r).collect::<Palette>()];
    let summary = f.palette_summary()?;
    if summary.distinct != expected {
        return Ok(Err(format!("palettes {:?}, expected {:?}", summary.distinct, expected)));
    }
    Ok(Ok(summary.count))
}

fn nrg_cases(params: &SuiteParams) -> Vec<CaseReport> {
    let mut out = Vec::new();
    let (bases, factors) = match (nrg_bases(), nrg_factors()) {
        (Ok(b), Ok(f)) => (b, f),
        (Err(e), _) | (_, Err(e)) => return vec![CaseReport::new(vec![], "setup".into()).with_error(e)],
    };
    for (bi, (bname, g)) in bases.iter().enumerate() {
        let matchings = match qualifying_matchings(g, &params.budget) {
            Ok(m) => m,
            Err(e) => {
                out.push(CaseReport::new(vec![bi], format!("G'={bname}")).with_error(e));
                continue;
            }
        };
        for (mi, m) in matchings.iter().enumerate() {
            let k = m.len();
            for mask in 1..(1usize << k) - 1 {
                let x: Vec<_> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| m.edges()[b]).collect();
                for (hi, (hname, hg)) in factors.iter().enumerate() {
                    let case = format!("G'={bname} M#{mi} X={x:?} H={hname}");
                    out.push(timed(params, vec![bi, mi, mask, hi], case, |c| {
                        let run = optimal_coloring(hg, &params.budget)
                            .and_then(|h| check_nrg_instance(g, m, &x, &h, &params.budget));
                        match run {
                            Ok(Ok(count)) => CaseReport {
                                palettes: Some(count),
                                expected: Some("2".into()),
                                ..c
                            },
                            Ok(Err(msg)) => c.fail(msg),
                            Err(e) => c.with_error(e),
                        }
                    }));
                }
            }
        }
    }
    out
}

/// Palette index of `C_s □ P_t` for `s, t >= 3`.
pub fn cycle_path_value(s: usize, t: usize) -> usize {
    if s % 2 == 1 && t % 2 == 1 {
        4
    } else {
        2
    }
}

/// A witness coloring of `C_s □ P_t` (or of the isomorphic `P_t □ C_s`) with
/// [`cycle_path_value`] palettes, and whether its count was proven optimal.
pub fn cycle_path_witness(s: usize, t: usize, budget: &Budget) -> Result<(EdgeColoring, bool)> {
    let cs = cycle(s)?;
    if t.is_multiple_of(2) {
        // P_t = C_t minus one edge of a perfect matching
        let ct = cycle(t)?;
        let m = Matching::new(&ct, (0..t / 2).map(|i| (2 * i, 2 * i + 1)))?;
        let spec = NrgSpec::derive(&ct, &m, &[(0, 1)], budget)?;
        let h = optimal_coloring(&cs, budget)?;
        let f = nrg_product_coloring(&spec, &h)?;
        return Ok((f, true));
    }
    if s.is_multiple_of(2) {
        let g = class_one_coloring(&cs, budget)?;
        return Ok((path_times_class1_regular_coloring(t, &g, None)?, true));
    }
    let graph = cartesian_product(&cs, &path(t)?)?;
    if graph.edge_count() <= 15 {
        let cert = palette_index_exact(&graph, Some(4), budget)?;
        return match (cert.exact, cert.upper) {
            (Some(_), Some(u)) => Ok((u.witness, true)),
            _ => Err(Error::BudgetExceeded(format!("C_{s} □ P_{t} undecided"))),
        };
    }
    match find_coloring_with_palettes(&graph, 4, budget)? {
        Some(f) => Ok((f, false)),
        None => Err(Error::Precondition(format!("C_{s} □ P_{t} has no 4-palette coloring"))),
    }
}

fn cycle_path_cases(params: &SuiteParams) -> Vec<CaseReport> {
    let mut out = Vec::new();
    for s in 3..=params.max {
        for t in 3..=params.max {
            let expected = cycle_path_value(s, t);
            out.push(timed(params, vec![s, t], format!("C{s} x P{t}"), |c| {
                let c = CaseReport {
                    expected: Some(expected.to_string()),
                    ..c
                };
                match cycle_path_witness(s, t, &params.budget).and_then(|(f, proven)| {
                    f.ensure_proper()?;
                    Ok((f.palette_count()?, proven))
                }) {
                    Ok((count, proven)) if count == expected => CaseReport {
                        palettes: Some(count),
                        detail: (!proven).then(|| "witness only; lower bound 4 not searched".into()),
                        ..c
                    },
                    Ok((count, _)) => CaseReport {
                        palettes: Some(count),
                        ..c
                    }
                    .fail("palette count differs"),
                    Err(e) => c.with_error(e),
                }
            }));
        }
    }
    out
}

fn cubic_cases(params: &SuiteParams) -> Vec<CaseReport> {
    let g = petersen();
    let mut out = Vec::new();
    for (mode, layers, bound) in [(CubicMode::Cycle, vec![3, 5, 7], 3), (CubicMode::Path, vec![3, 5], 4)] {
        for s in layers {
            let label = if mode == CubicMode::Cycle { "C" } else { "P" };
            let key = vec![(mode == CubicMode::Path) as usize, s];
            out.push(timed(params, key, format!("{label}{s} x Petersen"), |c| {
                let c = CaseReport {
                    expected: Some(format!("<= {bound}")),
                    ..c
                };
                match cubic_matching_reduction(s, &g, None, mode, &params.budget).and_then(|f| {
                    f.ensure_proper()?;
                    f.palette_count()
                }) {
                    Ok(count) if count <= bound => CaseReport {
                        palettes: Some(count),
                        ..c
                    },
                    Ok(count) => CaseReport {
                        palettes: Some(count),
                        ..c
                    }
                    .fail("too many palettes"),
                    Err(e) => c.with_error(e),
                }
            }));
        }
    }
    out
}

/// Small graphs used to cross-check the two oracles.
pub fn oracle_corpus() -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 1..=13 {
        out.push((format!("P{n}"), path(n)?));
    }
    for n in 3..=12 {
        out.push((format!("C{n}"), cycle(n)?));
    }
    for n in 2..=5 {
        out.push((format!("K{n}"), complete(n)?));
    }
    for (a, b) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)] {
        out.push((format!("P{a} x P{b}"), cartesian_product(&path(a)?, &path(b)?)?));
    }
    for (a, b) in [(2, 3), (2, 4), (3, 3)] {
        out.push((format!("P{a} x C{b}"), cartesian_product(&path(a)?, &cycle(b)?)?));
    }
    out.push(("Q2".into(), hypercube(2)?));
    let q3 = hypercube(3)?;
    out.push(("Q3 - e".into(), remove_edges(&q3, &[q3.edges()[0]])?));
    Ok(out)
}

fn oracle_cross_cases(params: &SuiteParams) -> Vec<CaseReport> {
    let corpus = match oracle_corpus() {
        Ok(c) => c,
        Err(e) => return vec![CaseReport::new(vec![], "corpus".into()).with_error(e)],
    };
    corpus
        .into_iter()
        .enumerate()
        .filter(|(_, (_, g))| g.edge_count() <= params.max_edges)
        .map(|(i, (name, g))| {
            timed(params, vec![i], name, |c| {
                let naive = naive_palette_index(&g, params.max_edges);
                match palette_index_exact(&g, None, &params.budget) {
                    Ok(cert) => {
                        let c = CaseReport {
                            palettes: cert.exact,
                            expected: naive.map(|v| v.to_string()),
                            ..c
                        };
                        match (cert.exact, naive) {
                            (Some(a), Some(b)) if a == b => c,
                            (None, _) => CaseReport {
                                status: Status::Indeterminate,
                                ..c
                            },
                            _ => c.fail("oracles disagree"),
                        }
                    }
                    Err(e) => c.with_error(e),
                }
            })
        })
        .collect()
}

/// A seeded small graph: a named generator or a random graph on up to 6
/// vertices.
pub fn random_small_graph(rng: &mut ChaCha8Rng) -> Result<(String, Graph)> {
    Ok(match rng.random_range(0..6u32) {
        0 => {
            let n = rng.random_range(2..=6);
            (format!("P{n}"), path(n)?)
        }
        1 => {
            let n = rng.random_range(3..=7);
            (format!("C{n}"), cycle(n)?)
        }
        2 => {
            let n = rng.random_range(2..=4);
            (format!("K{n}"), complete(n)?)
        }
        3 => {
            let r = rng.random_range(1..=3);
            (format!("Q{r}"), hypercube(r)?)
        }
        _ => {
            let n = rng.random_range(3..=6usize);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.random_bool(0.5))
                .collect();
            let edges = if edges.is_empty() { vec![(0, 1)] } else { edges };
            (format!("G(n={n},{edges:?})"), Graph::new(n, edges)?)
        }
    })
}

/// Checks `p(g ⊗ h) <= p(g) p(h)` for the disjoint product coloring; returns
/// `(product count, bound)`.
pub fn check_product_bound(g: &Graph, h: &Graph, budget: &Budget) -> Result<(usize, usize)> {
    let fg = optimal_coloring(g, budget)?;
    let fh = optimal_coloring(h, budget)?;
    let f = disjoint_product_coloring(&fg, &fh)?;
    f.ensure_proper()?;
    Ok((f.palette_count()?, fg.palette_count()? * fh.palette_count()?))
}

fn product_bound_cases(params: &SuiteParams) -> Vec<CaseReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..params.pairs)
        .map(|i| {
            let pair = random_small_graph(&mut rng).and_then(|a| Ok((a, random_small_graph(&mut rng)?)));
            let ((gn, g), (hn, h)) = match pair {
                Ok(p) => p,
                Err(e) => return CaseReport::new(vec![i], format!("pair {i}")).with_error(e),
            };
            timed(
                params,
                vec![i],
                format!("pair {i}: {gn} x {hn}"),
                |c| match check_product_bound(&g, &h, &params.budget) {
                    Ok((count, bound)) => {
                        let c = CaseReport {
                            palettes: Some(count),
                            expected: Some(format!("<= {bound}")),
                            ..c
                        };
                        if count <= bound {
                            c
                        } else {
                            c.fail("bound violated")
                        }
                    }
                    Err(e) => c.with_error(e),
                },
            )
        })
        .collect()
}
