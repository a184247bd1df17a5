use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_transreach"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = run(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let args = [
        "--dim",
        "2",
        "--n",
        "80",
        "--law",
        "uniform:1:3",
        "--seed",
        "9",
    ];
    let a = fs::read(gen(dir.path(), "a.tg", &args)).unwrap();
    let b = fs::read(gen(dir.path(), "b.tg", &args)).unwrap();
    assert_eq!(a, b);
    let ps = transreach::instance::parse_instance(std::str::from_utf8(&a).unwrap()).unwrap();
    assert_eq!(
        transreach::instance::emit_instance(&ps).as_bytes(),
        a.as_slice()
    );
    let c = fs::read(gen(
        dir.path(),
        "c.tg",
        &[
            "--dim",
            "2",
            "--n",
            "80",
            "--law",
            "uniform:1:3",
            "--seed",
            "10",
        ],
    ))
    .unwrap();
    assert_ne!(a, c);
}

#[test]
fn verify_passes_for_exact_oracles() {
    let dir = TempDir::new().unwrap();
    let line = gen(
        dir.path(),
        "line.tg",
        &[
            "--dim",
            "1",
            "--n",
            "150",
            "--box",
            "200",
            "--law",
            "uniform:1:6",
        ],
    );
    let plane = gen(
        dir.path(),
        "plane.tg",
        &["--n", "120", "--law", "uniform:1:1.7"],
    );
    let wide = gen(
        dir.path(),
        "wide.tg",
        &["--n", "120", "--box", "25", "--law", "uniform:1:8"],
    );
    for (file, oracle) in [
        (&line, "oned"),
        (&plane, "planar"),
        (&wide, "separator"),
        (&wide, "brute"),
    ] {
        let out = run(&[
            "verify",
            "--input",
            file.to_str().unwrap(),
            "--oracle",
            oracle,
        ]);
        assert_eq!(
            code(&out),
            0,
            "{oracle}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let report = json(&out);
        assert_eq!(report["verification"]["mismatch_count"], 0);
        assert_eq!(report["verification"]["exhaustive"], true);
        assert_eq!(report["schema"], 1);
    }
}

#[test]
fn planar_refuses_large_radius_ratio() {
    let dir = TempDir::new().unwrap();
    let file = gen(
        dir.path(),
        "two.tg",
        &["--n", "50", "--law", "two-scale:1:2:0.5"],
    );
    let out = run(&[
        "build",
        "--input",
        file.to_str().unwrap(),
        "--oracle",
        "planar",
    ]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("sqrt(3)"));
    let out = run(&[
        "build",
        "--input",
        file.to_str().unwrap(),
        "--oracle",
        "planar",
        "--allow-psi-two",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn empty_sample_misses_long_chain() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("chain.tg");
    let mut text = String::from("tg 2 60\n");
    for i in 0..60 {
        text.push_str(&format!("{i} 0 1\n"));
    }
    fs::write(&path, text).unwrap();
    let input = path.to_str().unwrap();
    let out = run(&[
        "verify",
        "--input",
        input,
        "--oracle",
        "sample",
        "--alpha",
        "0.9",
        "--empty-sample",
    ]);
    assert_eq!(code(&out), 2);
    let report = json(&out);
    assert!(report["verification"]["false_negatives"].as_u64().unwrap() > 0);
    assert_eq!(report["verification"]["false_positives"], 0);
    let out = run(&[
        "verify", "--input", input, "--oracle", "sample", "--alpha", "0.9",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn queries_answer_on_stdout() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("line.tg");
    fs::write(&path, "tg 1 3\n0 1.5\n2 3\n3 1\n").unwrap();
    let input = path.to_str().unwrap();
    let yes = json(&run(&[
        "query", "--input", input, "--oracle", "oned", "1", "0",
    ]));
    assert_eq!(yes["reaches"], true);
    let no = json(&run(&[
        "query", "--input", input, "--oracle", "oned", "0", "2",
    ]));
    assert_eq!(no["reaches"], false);
    let point = json(&run(&[
        "query", "--input", input, "--oracle", "oned", "0", "--point", "-1.5",
    ]));
    assert_eq!(point["reaches"], true);
    let far = json(&run(&[
        "query", "--input", input, "--oracle", "oned", "0", "--point", "-1.6",
    ]));
    assert_eq!(far["reaches"], false);
    let out = run(&["query", "--input", input, "--oracle", "oned", "9", "0"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(
        code(&run(&["verify", "--oracle", "nope", "--input", "x"])),
        1
    );
    assert_eq!(
        code(&run(&[
            "build",
            "--input",
            "/definitely/missing.tg",
            "--oracle",
            "brute"
        ])),
        1
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn emits_dot_and_tree() {
    let dir = TempDir::new().unwrap();
    let file = gen(dir.path(), "p.tg", &["--n", "40", "--law", "uniform:1:1.5"]);
    let dot = dir.path().join("g.dot");
    let out = run(&[
        "build",
        "--input",
        file.to_str().unwrap(),
        "--oracle",
        "planar",
        "--emit-dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("digraph").count(), 2);

    let tree = dir.path().join("tree.json");
    let out = run(&[
        "build",
        "--input",
        file.to_str().unwrap(),
        "--oracle",
        "separator",
        "--emit-tree",
        tree.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&tree).unwrap()).unwrap();
    assert!(!v["nodes"].as_array().unwrap().is_empty());
}

#[test]
fn bench_reports_latency() {
    let dir = TempDir::new().unwrap();
    let file = gen(
        dir.path(),
        "b.tg",
        &["--dim", "1", "--n", "500", "--box", "400"],
    );
    let out = run(&[
        "bench",
        "--input",
        file.to_str().unwrap(),
        "--oracle",
        "oned",
        "--repetitions",
        "2",
        "--budget",
        "2000",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["query_ns"]["p50"].as_f64().unwrap() > 0.0);
    assert_eq!(v["low_confidence"], false);
}
