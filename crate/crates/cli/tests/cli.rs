use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &Path)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_blockmean"));
    cmd.args(args).env_remove("BLOCKMEAN_CACHE_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn graph_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn compute_path_and_triangle() {
    let dir = TempDir::new().unwrap();
    let p3 = graph_file(&dir, "p3", "3 2\n0 1\n1 2\n");
    let o = run(&["compute", "--input", p3.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("M = 5/3 (1.666667)"));
    let o = run(&[
        "compute",
        "--input",
        p3.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["M"]["num"], "5");
    assert_eq!(v["M"]["den"], "3");
    assert_eq!(v["phi"], serde_json::json!(["0", "3", "2", "1"]));
    assert_eq!(v["vertices"][1]["mu"]["num"], "4");

    let k3 = graph_file(&dir, "k3", "# triangle\n3 3\n0 1\n1 2\n0 2\n");
    let v = json(&run(&[
        "compute",
        "--input",
        k3.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(
        (v["M"]["num"].as_str(), v["M"]["den"].as_str()),
        (Some("12"), Some("7"))
    );
}

#[test]
fn compute_input_errors() {
    let dir = TempDir::new().unwrap();
    let bad = graph_file(&dir, "bad", "2 1\n0 0\n");
    let o = run(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let disc = graph_file(&dir, "disc", "3 1\n0 1\n");
    assert_eq!(
        code(&run(&["compute", "--input", disc.to_str().unwrap()])),
        3
    );
    assert_eq!(code(&run(&["compute", "--input", "/nonexistent/graph"])), 2);
}

#[test]
fn verify_sweeps() {
    let o = run(&["verify", "--max-n", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("39 block graphs"));
    let v = json(&run(&[
        "verify",
        "--statement",
        "mu",
        "--max-n",
        "7",
        "--format",
        "json",
    ]));
    let tallies = v["tallies"].as_object().unwrap();
    assert_eq!(tallies.keys().collect::<Vec<_>>(), ["mu"]);
    assert_eq!(tallies["mu"]["failed"], 0);
    assert_eq!(v["failures"], serde_json::json!([]));
    let csv = stdout(&run(&["verify", "--max-n", "4", "--format", "csv"]));
    assert!(csv.starts_with("cert,statement,holds,equality,lhs,rhs\n"));
    assert!(csv
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(2) == Some("true")));
    assert_eq!(code(&run(&["verify", "--statement", "nope"])), 2);
    assert_eq!(code(&run(&["verify", "--max-n", "11"])), 2);
}

#[test]
fn search_block_rows() {
    let o = run(&[
        "search", "--family", "block", "--n", "3..8", "--format", "csv",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    for (line, n) in lines.zip(3i64..) {
        let f: Vec<&str> = line.split(',').collect();
        let g = gcd(n + 2, 3);
        assert_eq!(f[col("min_m")], format!("{}/{}", (n + 2) / g, 3 / g));
        assert_eq!(f[col("min_path")], "true");
        assert_eq!(f[col("max_caterpillar")], "true");
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn search_connected_has_unique_minimiser() {
    let v = json(&run(&[
        "search",
        "--family",
        "connected",
        "--n",
        "3..7",
        "--format",
        "json",
    ]));
    for row in v.as_array().unwrap() {
        assert_eq!(row["argmin"].as_array().unwrap().len(), 1);
        assert_eq!(row["min_path"], true);
    }
}

#[test]
fn search_caps() {
    assert_eq!(code(&run(&["search", "--n", "3..11"])), 2);
    assert_eq!(
        code(&run(&["search", "--family", "connected", "--n", "8"])),
        2
    );
    assert_eq!(code(&run(&["search", "--n", "5..3"])), 2);
    assert_eq!(code(&run(&["search", "--n", "x"])), 2);
}

#[test]
fn output_is_identical_across_worker_counts() {
    let a = run(&[
        "search",
        "--n",
        "3..9",
        "--format",
        "json",
        "--workers",
        "1",
    ]);
    let b = run(&[
        "search",
        "--n",
        "3..9",
        "--format",
        "json",
        "--workers",
        "4",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&[
        "verify",
        "--max-n",
        "6",
        "--format",
        "csv",
        "--workers",
        "1",
    ]);
    let b = run(&[
        "verify",
        "--max-n",
        "6",
        "--format",
        "csv",
        "--workers",
        "3",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_round_trip() {
    let dir = TempDir::new().unwrap();
    let cache = dir.path().join("cache");
    let env = [("BLOCKMEAN_CACHE_DIR", cache.as_path())];
    let first = run_env(&["search", "--n", "4..7", "--format", "csv"], &env);
    assert!(cache.join("block-7.certs").exists());
    let second = run_env(&["search", "--n", "4..7", "--format", "csv"], &env);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        first.stdout,
        run(&["search", "--n", "4..7", "--format", "csv"]).stdout
    );
    fs::write(cache.join("block-5.certs"), "zz\n").unwrap();
    assert_eq!(code(&run_env(&["search", "--n", "4..7"], &env)), 2);
}

#[test]
fn ktree_means() {
    let dir = TempDir::new().unwrap();
    let k3 = graph_file(&dir, "k3", "3 3\n0 1\n1 2\n0 2\n");
    let v = json(&run(&[
        "ktree",
        "--k",
        "2",
        "--input",
        k3.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(
        v["mean_formula"],
        serde_json::json!({"num": "9", "den": "4"})
    );
    assert_eq!(v["mean_oracle"], v["mean_formula"]);
    let star = graph_file(&dir, "star", "4 3\n0 1\n0 2\n0 3\n");
    let v = json(&run(&[
        "ktree",
        "--k",
        "1",
        "--input",
        star.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(
        v["mean_formula"],
        serde_json::json!({"num": "23", "den": "11"})
    );
    let c4 = graph_file(&dir, "c4", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(
        code(&run(&[
            "ktree",
            "--k",
            "2",
            "--input",
            c4.to_str().unwrap()
        ])),
        3
    );
    let a = run(&["ktree", "--k", "3", "--n", "10", "--seed", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(
        a.stdout,
        run(&["ktree", "--k", "3", "--n", "10", "--seed", "4"]).stdout
    );
    assert_eq!(code(&run(&["ktree", "--k", "2"])), 2);
}

#[test]
fn families() {
    let dir = TempDir::new().unwrap();
    let k2 = graph_file(&dir, "k2", "2 1\n0 1\n");
    let o = run(&[
        "family",
        "--family",
        "vertex-gluing",
        "--input",
        k2.to_str().unwrap(),
        "--at",
        "0",
        "--n",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chain_ok=true symmetry_ok=true closed_form_ok=true"));
    let k3 = graph_file(&dir, "k3", "3 3\n0 1\n1 2\n0 2\n");
    let v = json(&run(&[
        "family",
        "--family",
        "edge-gluing",
        "--input",
        k3.to_str().unwrap(),
        "--at",
        "0,1",
        "--n",
        "4",
        "--format",
        "json",
    ]));
    assert_eq!(v["members"][1]["N"], "19");
    let p3 = graph_file(&dir, "p3", "3 2\n0 1\n1 2\n");
    let bad = [
        "family",
        "--family",
        "edge-gluing",
        "--input",
        p3.to_str().unwrap(),
        "--at",
        "0,1",
        "--n",
        "4",
    ];
    assert_eq!(code(&run(&bad)), 3);
    let arity = [
        "family",
        "--family",
        "stretching",
        "--input",
        p3.to_str().unwrap(),
        "--at",
        "0,1",
        "--n",
        "4",
    ];
    assert_eq!(code(&run(&arity)), 2);
}

#[test]
fn improve_reaches_path() {
    let dir = TempDir::new().unwrap();
    let k4 = graph_file(&dir, "k4", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let v = json(&run(&[
        "improve",
        "--input",
        k4.to_str().unwrap(),
        "--format",
        "json",
    ]));
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0][0]["lemma"], "stretching");
    let p = graph_file(&dir, "p", "3 2\n0 1\n1 2\n");
    let o = run(&[
        "improve",
        "--input",
        p.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(json(&o)["steps"], serde_json::json!([]));
}
