use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_palette");

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .env_remove("PALETTE_BUDGET_NODES")
        .output()
        .expect("failed to start palette")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

struct Example {
    line: usize,
    env: Vec<(String, String)>,
    args: Vec<String>,
    exit: i32,
    expected: Vec<String>,
}

/// `$ palette ...` lines of the README's `console` blocks with the output
/// lines that follow them. A trailing `# exits N` sets the expected status.
fn readme_examples() -> Vec<Example> {
    let readme = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let mut out: Vec<Example> = Vec::new();
    let mut in_block = false;
    for (i, line) in readme.lines().enumerate() {
        if line.starts_with("```") {
            in_block = line == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            let (cmd, exit) = match cmd.split_once("# exits ") {
                Some((c, code)) => (c, code.trim().parse().unwrap()),
                None => (cmd, 0),
            };
            let mut words = cmd.split_whitespace().peekable();
            let mut env = Vec::new();
            while let Some((k, v)) = words.peek().and_then(|w| w.split_once('=')) {
                env.push((k.to_string(), v.to_string()));
                words.next();
            }
            assert_eq!(words.next(), Some("palette"), "README line {}", i + 1);
            out.push(Example {
                line: i + 1,
                env,
                args: words.map(String::from).collect(),
                exit,
                expected: Vec::new(),
            });
        } else if !line.trim().is_empty() {
            out.last_mut()
                .expect("output before any command")
                .expected
                .push(line.to_string());
        }
    }
    out
}

#[test]
fn readme_examples_run() {
    let examples = readme_examples();
    assert!(examples.len() >= 20, "found only {} examples", examples.len());
    let dir = tempfile::tempdir().unwrap();
    for ex in &examples {
        let o = Command::new(BIN)
            .args(&ex.args)
            .current_dir(dir.path())
            .env_remove("PALETTE_BUDGET_NODES")
            .envs(ex.env.iter().map(|(k, v)| (k, v)))
            .output()
            .unwrap();
        let text = stdout(&o);
        assert_eq!(
            o.status.code(),
            Some(ex.exit),
            "README line {}: {:?}\n{text}{}",
            ex.line,
            ex.args,
            String::from_utf8_lossy(&o.stderr)
        );
        let mut lines = text.lines();
        for want in &ex.expected {
            assert!(
                lines.any(|l| l.contains(want.as_str())),
                "README line {}: expected {want:?} in order in\n{text}",
                ex.line
            );
        }
    }
}

#[test]
fn gen_and_product_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["gen", "hypercube:3"]);
    let g: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(g["n"], 8);
    assert_eq!(g["edges"].as_array().unwrap().len(), 12);
    fs::write(dir.path().join("q3.json"), stdout(&o)).unwrap();
    let o = run_in(dir.path(), &["product", "@q3.json", "complete:2"]);
    let p: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(p["n"], 16);
    assert_eq!(p["edges"].as_array().unwrap().len(), 32);
}

#[test]
fn construct_json_is_a_valid_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(
        dir.path(),
        &[
            "--json",
            "construct",
            "--theorem",
            "cubic",
            "--g",
            "petersen",
            "--s",
            "5",
            "--path",
        ],
    );
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem"], "cubic");
    let count = v["palettes"]["count"].as_u64().unwrap();
    assert!(count <= 4);
    let colors = v["coloring"]["colors"].as_array().unwrap();
    assert_eq!(colors.len(), 5 * 15 + 4 * 10);
}

#[test]
fn torus_dot_uses_class_styles() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(
        dir.path(),
        &["torus", "--s", "7", "--t", "3", "--dot", "t.dot", "--out", "t.json"],
    );
    assert!(o.status.success());
    let dot = fs::read_to_string(dir.path().join("t.dot")).unwrap();
    assert!(dot.starts_with("graph G {\n"));
    for style in ["solid", "dashed", "dotted"] {
        assert!(dot.contains(style));
    }
    assert_eq!(dot.matches(" -- ").count(), 42);
    let o = run_in(dir.path(), &["export", "t.json"]);
    assert!(stdout(&o).contains("label=\"6\""));
}

#[test]
fn verify_is_deterministic_and_hides_timings() {
    let dir = tempfile::tempdir().unwrap();
    let a = run_in(
        dir.path(),
        &[
            "verify",
            "product-bound",
            "--pairs",
            "8",
            "--seed",
            "3",
            "--report",
            "a.json",
        ],
    );
    let b = run_in(
        dir.path(),
        &[
            "verify",
            "product-bound",
            "--pairs",
            "8",
            "--seed",
            "3",
            "--report",
            "b.json",
        ],
    );
    assert_eq!(stdout(&a), stdout(&b));
    let ra = fs::read_to_string(dir.path().join("a.json")).unwrap();
    assert_eq!(ra, fs::read_to_string(dir.path().join("b.json")).unwrap());
    assert!(!ra.contains("millis"));
    let report: Value = serde_json::from_str(&ra).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["passed"], 8);

    let t = run_in(
        dir.path(),
        &["verify", "torus", "--max-s", "5", "--timings", "--report", "t.json"],
    );
    assert!(t.status.success());
    assert!(fs::read_to_string(dir.path().join("t.json"))
        .unwrap()
        .contains("millis"));
}

#[test]
fn errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["gen", "cycle:2"][..],
        &["torus", "--s", "3", "--t", "5"],
        &["construct", "--theorem", "cubic", "--g", "complete:4", "--s", "3"],
        &[
            "construct",
            "--theorem",
            "nrg",
            "--g",
            "cycle:4",
            "--h",
            "cycle:3",
            "--remove",
            "1-2",
        ],
        &["oracle", "@missing.json"],
        &["verify", "no-such-suite"],
    ] {
        let o = run_in(dir.path(), args);
        assert_ne!(o.status.code(), Some(0), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn budget_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let grid = run_in(dir.path(), &["product", "path:3", "path:3", "--out", "grid.json"]);
    assert!(grid.status.success());
    let oracle = |nodes: Option<&str>| {
        let mut cmd = Command::new(BIN);
        cmd.args(["--json", "oracle", "@grid.json", "--deterministic"])
            .current_dir(dir.path())
            .env_remove("PALETTE_BUDGET_NODES");
        if let Some(n) = nodes {
            cmd.env("PALETTE_BUDGET_NODES", n);
        }
        let o = cmd.output().unwrap();
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        (o.status.code(), v["exact"].as_u64())
    };
    assert_eq!(oracle(Some("100")), (Some(2), None));
    assert_eq!(oracle(None), (Some(0), Some(5)));
}
