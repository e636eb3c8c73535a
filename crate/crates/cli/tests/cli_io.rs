//! Round trips through files: graph documents as kappa input, output paths,
//! and the default output directory variable.

mod common;

use std::process::Command;

#[test]
fn generated_graphs_feed_back_into_kappa() {
    let dir = std::env::temp_dir().join(format!("hlnet-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("q4.json");

    let exe = env!("CARGO_BIN_EXE_hlnet");
    let status = Command::new(exe)
        .args([
            "gen",
            "--topology",
            "hypercube:n=4",
            "--format",
            "json",
            "--output",
            graph_path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());

    let output = Command::new(exe)
        .args([
            "kappa",
            "--input",
            graph_path.to_str().unwrap(),
            "--g",
            "1",
            "--mode",
            "exact",
            "--no-timing",
        ])
        .env("RUST_LOG", "warn")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["spec"], "hypercube:n=4");
    assert_eq!(doc["outcome"]["value"], 6);
    common::assert_valid("kappa.v1.schema.json", &doc);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn relative_outputs_resolve_under_the_env_directory() {
    let dir = std::env::temp_dir().join(format!("hlnet-outdir-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let exe = env!("CARGO_BIN_EXE_hlnet");
    let status = Command::new(exe)
        .args(["f", "6", "3", "--output", "f63.txt"])
        .env("HLNET_OUT_DIR", &dir)
        .status()
        .unwrap();
    assert!(status.success());
    let content = std::fs::read_to_string(dir.join("f63.txt")).unwrap();
    assert_eq!(content, "15\n");

    // Missing directories surface as I/O failures (exit 3).
    let output = Command::new(exe)
        .args(["f", "6", "3", "--output", "sub/f63.txt"])
        .env("HLNET_OUT_DIR", dir.join("missing"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn edgelist_and_dot_are_derived_views() {
    let (edgelist, code) =
        common::run_cli(&["gen", "--topology", "hypercube:n=2", "--format", "edgelist"]);
    assert_eq!(code, 0);
    assert_eq!(edgelist, "0 1\n0 2\n1 3\n2 3\n");
    let (dot, code) = common::run_cli(&["gen", "--topology", "hypercube:n=1", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(
        dot,
        "graph hlnet {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n"
    );
}
