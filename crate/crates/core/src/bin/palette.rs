use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use palette_core::chromatic::{chromatic_index, class_one_coloring, optimal_coloring, ChromaticIndex};
use palette_core::constructions::{
    class1_product_coloring, cubic_matching_reduction, cycle_times_regular_coloring, nrg_product_coloring,
    path_times_class1_regular_coloring, path_times_regular_coloring, qualifying_matchings, CubicMode, NrgSpec,
};
use palette_core::graph::{build_generator, canonical, cartesian_product, cycle, path, Edge, GeneratorKind};
use palette_core::io::{
    export_dot, to_json, CertificateJson, ColoringJson, DotStyle, GraphJson, PalettesJson, TorusJson,
};
use palette_core::oracle::{certify, lower_bound, palette_index_exact};
use palette_core::theta::{theta_classes, theta_removal_coloring};
use palette_core::torus::{staircase_class, torus_three_palette_coloring, verify_partition};
use palette_core::verify::{run_suite, Status, Suite, SuiteParams};
use palette_core::{Budget, EdgeColoring, Error, Graph, Result};

/// Palette-minimizing edge colorings of Cartesian product graphs.
///
/// Graph arguments are generator specs (`path:3`, `cycle:5`, `complete:4`,
/// `hypercube:3`, `petersen`) or `@file.json` with a graph document.
#[derive(Parser, Debug)]
#[command(name = "palette", version)]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated graph as JSON.
    Gen {
        graph: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Cartesian product of two graphs as JSON.
    Product {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a coloring with one of the product constructions.
    Construct(ConstructArgs),
    /// Staircase decomposition and three-palette coloring of C_s x C_t.
    Torus {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Write the coloring as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write DOT with solid/dashed/dotted edges per class.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Θ-classes of a graph, optionally the removal coloring of (G - X) x H.
    Theta {
        graph: String,
        /// Class index to remove edges from.
        #[arg(long, requires = "remove")]
        class: Option<usize>,
        /// Edges to remove, as `u-v,u-v`.
        #[arg(long, requires = "class")]
        remove: Option<String>,
        /// Regular second factor for the removal coloring.
        #[arg(long, default_value = "cycle:3")]
        h: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Certify the palette index of a graph.
    Oracle {
        graph: String,
        #[arg(long)]
        max_palettes: Option<usize>,
        /// Candidate colorings (coloring JSON files) to offer as upper bounds.
        #[arg(long)]
        candidate: Vec<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run a verification sweep; exit 0 pass, 1 fail, 2 indeterminate.
    Verify {
        suite: SuiteArg,
        #[arg(long, default_value_t = 13)]
        max_s: usize,
        #[arg(long, default_value_t = 9)]
        max: usize,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include per-case wall-clock times in the report.
        #[arg(long)]
        timings: bool,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Render a coloring JSON file as DOT.
    Export {
        coloring: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Search node limit.
    #[arg(long, env = "PALETTE_BUDGET_NODES", default_value_t = 50_000_000)]
    budget_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Ignore the wall-clock limit so results do not depend on machine speed.
    #[arg(long)]
    deterministic: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let b = Budget::nodes(self.budget_nodes);
        match self.budget_seconds {
            Some(s) if !self.deterministic => b.with_time(Duration::from_secs_f64(s)),
            _ => b,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Torus,
    Nrg,
    CyclePath,
    Cubic,
    OracleCross,
    ProductBound,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Torus => Suite::Torus,
            SuiteArg::Nrg => Suite::Nrg,
            SuiteArg::CyclePath => Suite::CyclePath,
            SuiteArg::Cubic => Suite::Cubic,
            SuiteArg::OracleCross => Suite::OracleCross,
            SuiteArg::ProductBound => Suite::ProductBound,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    /// Class-1 G times any H.
    Mah,
    /// Nearly regular G' - X times regular H.
    Nrg,
    /// C_s times regular G.
    Cng,
    /// P_s times regular G.
    Png,
    /// C_s or P_s times class-2 cubic G via a perfect matching.
    Cubic,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    theorem: Theorem,
    /// First factor (mah, nrg) or the regular graph G (cng, png, cubic).
    #[arg(long)]
    g: String,
    /// Second factor (mah, nrg).
    #[arg(long)]
    h: Option<String>,
    /// Number of layers (cng, png, cubic).
    #[arg(long)]
    s: Option<usize>,
    /// Recolored color class (mah, png).
    #[arg(long)]
    c: Option<u32>,
    /// Index of the qualifying perfect matching (nrg).
    #[arg(long, default_value_t = 0)]
    matching: usize,
    /// Removed edges `u-v,u-v` (nrg); defaults to the first matching edge.
    #[arg(long)]
    remove: Option<String>,
    /// Path instead of cycle (cubic).
    #[arg(long)]
    path: bool,
    /// Write the coloring JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write DOT here.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

fn load_graph(spec: &str) -> Result<Graph> {
    if let Some(file) = spec.strip_prefix('@') {
        let text = fs::read_to_string(file).map_err(|e| Error::InvalidGraph(format!("{file}: {e}")))?;
        let j: GraphJson = serde_json::from_str(&text)?;
        return Graph::try_from(&j);
    }
    build_generator(spec.parse::<GeneratorKind>()?)
}

fn parse_edges(list: &str) -> Result<Vec<Edge>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (u, v) = item
                .split_once('-')
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge {item:?}, expected u-v")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidGraph(format!("bad vertex {x:?}")))
            };
            Ok(canonical(parse(u)?, parse(v)?))
        })
        .collect()
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Json(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn write_file(p: &PathBuf, text: &str) -> Result<()> {
    fs::write(p, text).map_err(|e| Error::Json(format!("{}: {e}", p.display())))
}

#[derive(Serialize)]
struct ConstructionJson {
    theorem: String,
    coloring: ColoringJson,
    palettes: PalettesJson,
}

fn print_coloring_summary(label: &str, f: &EdgeColoring) -> Result<()> {
    let s = f.palette_summary()?;
    println!("{label}");
    println!(
        "graph: {} vertices, {} edges{}",
        f.host().vertex_count(),
        f.host().edge_count(),
        f.host().provenance().map(|p| format!(", {p}")).unwrap_or_default()
    );
    println!("colors: {}", f.colors_used().len());
    println!("palettes: {}", s.count);
    for p in &s.distinct {
        println!("  {p:?}");
    }
    Ok(())
}

fn required<T: Copy>(v: Option<T>, flag: &str, theorem: &str) -> Result<T> {
    v.ok_or_else(|| Error::Precondition(format!("--{flag} is required for --theorem {theorem}")))
}

fn construct(args: &ConstructArgs) -> Result<(String, EdgeColoring)> {
    let budget = args.budget.budget();
    let g = load_graph(&args.g)?;
    Ok(match args.theorem {
        Theorem::Mah => {
            let h = load_graph(
                args.h
                    .as_deref()
                    .ok_or_else(|| Error::Precondition("--h is required".into()))?,
            )?;
            let fg = class_one_coloring(&g, &budget)?;
            let fh = optimal_coloring(&h, &budget)?;
            ("mah".into(), class1_product_coloring(&fg, &fh, args.c)?)
        }
        Theorem::Nrg => {
            let h = load_graph(
                args.h
                    .as_deref()
                    .ok_or_else(|| Error::Precondition("--h is required".into()))?,
            )?;
            let ms = qualifying_matchings(&g, &budget)?;
            let m = ms
                .get(args.matching)
                .ok_or_else(|| Error::Precondition(format!("only {} qualifying perfect matchings", ms.len())))?;
            let removed = match &args.remove {
                Some(list) => parse_edges(list)?,
                None => m.edges()[..1].to_vec(),
            };
            let spec = NrgSpec::derive(&g, m, &removed, &budget)?;
            let fh = optimal_coloring(&h, &budget)?;
            ("nrg".into(), nrg_product_coloring(&spec, &fh)?)
        }
        Theorem::Cng | Theorem::Png => {
            let s = required(args.s, "s", "cng/png")?;
            let chi = chromatic_index(&g, &budget)?;
            let Some(fg) = chi.witness().cloned() else {
                return Err(Error::BudgetExceeded("chromatic index of G undetermined".into()));
            };
            let class_one = matches!(chi, ChromaticIndex::Determined { .. }) && chi.is_class_one();
            if args.theorem == Theorem::Cng {
                if s % 2 == 0 || class_one {
                    // C_s x G from a class-1 factor on one side
                    let fs = optimal_coloring(&cycle(s)?, &budget)?;
                    let f = if class_one {
                        class1_product_coloring(&fg, &fs, None)?
                    } else {
                        class1_product_coloring(&fs, &fg, None)?
                    };
                    ("cng/product".into(), f)
                } else {
                    ("cng/layered".into(), cycle_times_regular_coloring(s, &fg, &fg)?)
                }
            } else if class_one && s % 2 == 1 {
                ("png/class1".into(), path_times_class1_regular_coloring(s, &fg, args.c)?)
            } else if s % 2 == 1 {
                ("png/layered".into(), path_times_regular_coloring(s, &fg, &fg)?)
            } else {
                let fs = class_one_coloring(&path(s)?, &budget)?;
                ("png/product".into(), class1_product_coloring(&fs, &fg, None)?)
            }
        }
        Theorem::Cubic => {
            let s = required(args.s, "s", "cubic")?;
            let mode = if args.path { CubicMode::Path } else { CubicMode::Cycle };
            ("cubic".into(), cubic_matching_reduction(s, &g, None, mode, &budget)?)
        }
    })
}

/// 0 done, 1 failure, 2 indeterminate.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { graph, out } => {
            let g = load_graph(&graph)?;
            write_or_print(&out, &to_json(&GraphJson::from(&g))?)?;
        }
        Command::Product { left, right, out } => {
            let g = cartesian_product(&load_graph(&left)?, &load_graph(&right)?)?;
            write_or_print(&out, &to_json(&GraphJson::from(&g))?)?;
        }
        Command::Construct(args) => {
            let (theorem, f) = construct(&args)?;
            f.ensure_proper()?;
            if let Some(p) = &args.out {
                write_file(p, &to_json(&ColoringJson::from(&f))?)?;
            }
            if let Some(p) = &args.dot {
                write_file(p, &export_dot(&f, &DotStyle::Colors)?)?;
            }
            if cli.json {
                println!(
                    "{}",
                    to_json(&ConstructionJson {
                        theorem,
                        coloring: (&f).into(),
                        palettes: PalettesJson::of(&f)?,
                    })?
                );
            } else {
                print_coloring_summary(&format!("construction: {theorem}"), &f)?;
            }
        }
        Command::Torus { s, t, out, dot } => {
            let d = verify_partition(s, t)?;
            let f = torus_three_palette_coloring(s, t)?;
            if let Some(p) = &out {
                write_file(p, &to_json(&ColoringJson::from(&f))?)?;
            }
            if let Some(p) = &dot {
                let mut class_of = vec![0; f.host().edge_count()];
                for (i, z) in d.z_sets.iter().enumerate() {
                    for e in z {
                        let (u, v) = e.as_edge();
                        if let Some(idx) = f.host().edge_index(u, v) {
                            class_of[idx] = staircase_class(i, t);
                        }
                    }
                }
                write_file(p, &export_dot(&f, &DotStyle::Classes(class_of))?)?;
            }
            if cli.json {
                println!("{}", to_json(&TorusJson::from(&d))?);
            } else {
                println!("C_{s} x C_{t}: ell = {}, h = {}", d.ell, d.h);
                for (i, z) in d.z_sets.iter().enumerate() {
                    println!("Z_{i}: {} edges, class {}", z.len(), staircase_class(i, t));
                }
                print_coloring_summary("three-palette coloring", &f)?;
            }
        }
        Command::Theta {
            graph,
            class,
            remove,
            h,
            out,
            budget,
        } => {
            let g = load_graph(&graph)?;
            let theta = theta_classes(&g)?;
            match (class, remove) {
                (Some(i), Some(list)) => {
                    let b = budget.budget();
                    let fh = optimal_coloring(&load_graph(&h)?, &b)?;
                    let f = theta_removal_coloring(&g, i, &parse_edges(&list)?, &fh, &b)?;
                    if let Some(p) = &out {
                        write_file(p, &to_json(&ColoringJson::from(&f))?)?;
                    }
                    if cli.json {
                        println!(
                            "{}",
                            to_json(&ConstructionJson {
                                theorem: "theta".into(),
                                coloring: (&f).into(),
                                palettes: PalettesJson::of(&f)?,
                            })?
                        );
                    } else {
                        print_coloring_summary("theta removal coloring", &f)?;
                    }
                }
                _ => {
                    if cli.json {
                        println!("{}", to_json(&theta)?);
                    } else {
                        println!(
                            "{} classes, partial cube: {}, every vertex meets every class: {}",
                            theta.classes.len(),
                            theta.is_partial_cube,
                            theta.per_vertex_full
                        );
                        for (i, c) in theta.classes.iter().enumerate() {
                            println!("  E_{i}: {c:?}");
                        }
                    }
                }
            }
        }
        Command::Oracle {
            graph,
            max_palettes,
            candidate,
            budget,
        } => {
            let g = load_graph(&graph)?;
            let b = budget.budget();
            let mut candidates = Vec::new();
            for path in &candidate {
                let text = fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
                let j: ColoringJson = serde_json::from_str(&text)?;
                candidates.push((path.display().to_string(), EdgeColoring::try_from(&j)?));
            }
            let cert = if candidates.is_empty() {
                palette_index_exact(&g, max_palettes, &b)?
            } else {
                let structural = certify(&g, &candidates, None, &b)?;
                if structural.exact.is_some() {
                    structural
                } else {
                    certify(&g, &candidates, Some(&b), &b)?
                }
            };
            let exit = if cert.exact.is_some() { 0 } else { 2 };
            if cli.json {
                println!("{}", to_json(&CertificateJson::from(&cert))?);
            } else {
                let lb = lower_bound(&g, &b)?;
                match cert.exact {
                    Some(v) => println!("palette index: {v}"),
                    None => println!(
                        "palette index in [{}, {}]",
                        cert.lower,
                        cert.upper_value().map_or("?".into(), |u| u.to_string())
                    ),
                }
                println!(
                    "lower bound rule: {} (structural bound {} by {})",
                    cert.lower_rule, lb.value, lb.rule
                );
                if let Some(u) = &cert.upper {
                    println!("upper bound rule: {}", u.rule);
                }
                println!("search nodes: {}", cert.nodes);
            }
            return Ok(exit);
        }
        Command::Verify {
            suite,
            max_s,
            max,
            max_edges,
            pairs,
            seed,
            timings,
            report,
            budget,
        } => {
            let params = SuiteParams {
                max_s,
                max,
                max_edges,
                pairs,
                seed,
                budget: budget.budget(),
                timings,
            };
            let r = run_suite(suite.into(), &params);
            let text = to_json(&r)?;
            if let Some(p) = &report {
                write_file(p, &text)?;
            }
            if cli.json {
                println!("{text}");
            } else {
                print!("{}", r.summary());
                if let Some(c) = r.first_failure() {
                    eprintln!("first failure: {} ({})", c.case, c.detail.as_deref().unwrap_or(""));
                }
            }
            return Ok(match r.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Indeterminate => 2,
            });
        }
        Command::Export { coloring, out } => {
            let text =
                fs::read_to_string(&coloring).map_err(|e| Error::Json(format!("{}: {e}", coloring.display())))?;
            let j: ColoringJson = serde_json::from_str(&text)?;
            let f = EdgeColoring::try_from(&j)?;
            let dot = export_dot(&f, &DotStyle::Colors)?;
            match &out {
                Some(p) => write_file(p, &dot)?,
                None => print!("{dot}"),
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::BudgetExceeded(_)) { 2 } else { 1 })
        }
    }
}
