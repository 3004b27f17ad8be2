use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn rigctl(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rigctl"))
        .args(args)
        .env_remove("RIGCTL_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rigctl");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn gen(kind: &[&str]) -> Vec<u8> {
    let mut args = vec!["gen"];
    args.extend_from_slice(kind);
    let out = rigctl(&args, b"");
    assert!(out.status.success());
    out.stdout
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn flower_rank() {
    let out = rigctl(&["rank", "--dim", "3"], &gen(&["k5-flower"]));
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.starts_with(br#"{"rank":89,"#));
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed 0"));
}

#[test]
fn k5_is_not_sparse() {
    let out = rigctl(&["sparse", "--dim", "3"], &gen(&["complete", "5"]));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(out.stdout, b"{\"sparse\":false,\"witness\":[0,1,2,3,4]}\n");
}

#[test]
fn double_k5_passes_rank_bound() {
    let out = rigctl(&["verify", "theorem4", "--dim", "3"], &gen(&["double-k5"]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 17);
    assert_eq!(v["min"], 18);
}

#[test]
fn double_k5_gap_commands() {
    let g = gen(&["double-k5"]);
    assert_eq!(json(&rigctl(&["sd"], &g))["value"], 18);
    let star = json(&rigctl(&["sdstar", "--budget", "1"], &g));
    assert_eq!(star["value"], 17);
    assert_eq!(star["added"], serde_json::json!([[0, 1]]));
}

#[test]
fn input_file_and_edge_list() {
    let dir = std::env::temp_dir().join(format!("rigctl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("path.txt");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let out = rigctl(&["sparse", "--dim", "2", "--input", path.to_str().unwrap()], b"");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"{\"sparse\":true,\"witness\":null}\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(rigctl(&["frobnicate"], b"").status.code(), Some(2));
    assert_eq!(rigctl(&["rank", "--no-such-flag"], b"").status.code(), Some(2));
    assert_eq!(
        rigctl(&["rank", "--dim", "9"], &gen(&["complete", "3"])).status.code(),
        Some(2)
    );
    let out = rigctl(&["rank"], b"3 1\n0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let missing = rigctl(&["rank", "--input", "/nonexistent/graph.json"], b"");
    assert_eq!(missing.status.code(), Some(2));
    let out = rigctl(&["verify", "theorem4", "--dim", "6"], &gen(&["complete", "4"]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn components_require_sparsity() {
    let out = rigctl(&["components", "--dim", "3"], &gen(&["complete", "5"]));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        rigctl(&["components", "--dim", "3"], &gen(&["double-k5-plus"]))
            .status
            .code(),
        Some(1)
    );
    let out = rigctl(&["components", "--dim", "3", "--backend", "both"], &gen(&["double-k5"]));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        out.stdout,
        b"{\"components\":[{\"vertices\":[0,1,2,3,4,5,6,7],\"edges\":18}]}\n"
    );
}

#[test]
fn high_dimension_warns_on_stderr() {
    let out = rigctl(&["verify", "hunt", "--dim", "6", "--samples", "3", "--n-max", "9"], b"");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("d <= 5"));
    let v = json(&out);
    assert_eq!(v["d"], 6);
    assert!(!String::from_utf8_lossy(&out.stdout).contains("WARN"));
}

#[test]
fn output_formats() {
    let dot = rigctl(&["gen", "complete", "3", "--format", "dot"], b"");
    assert_eq!(
        dot.stdout,
        b"graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
    );
    let text = rigctl(&["gen", "complete", "3", "--format", "text"], b"");
    assert_eq!(text.stdout, b"3 3\n0 1\n0 2\n1 2\n");
    let kept = rigctl(&["maximal", "--dim", "1", "--format", "dot"], &gen(&["complete", "3"]));
    assert!(String::from_utf8_lossy(&kept.stdout).matches("--").count() == 2);
    assert_eq!(
        rigctl(&["rank", "--format", "dot"], &gen(&["complete", "3"]))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn independence_query() {
    let k5 = gen(&["complete", "5"]);
    let v = json(&rigctl(&["independent", "--dim", "3"], &k5));
    assert_eq!((v["independent"].as_bool(), v["rank"].as_u64()), (Some(false), Some(9)));
    let v = json(&rigctl(&["independent", "--dim", "3", "--edges", "0-1,1-2,0-2"], &k5));
    assert_eq!(v["independent"], true);
    assert_eq!(rigctl(&["independent", "--edges", "0:1"], &k5).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_thread_independent() {
    let g = gen(&["random", "9", "--p", "0.6", "--seed", "5"]);
    for args in [
        vec!["rank", "--seed", "4"],
        vec!["maximal", "--order", "random", "--seed", "4"],
        vec!["cover", "--order", "random", "--seed", "4"],
        vec!["verify", "maxwell", "--seed", "4", "--samples", "5"],
    ] {
        let a = rigctl(&args, &g);
        let b = rigctl(&args, &g);
        let mut threaded = args.clone();
        threaded.extend(["--threads", "2"]);
        let c = rigctl(&threaded, &g);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, c.stdout, "{args:?}");
    }
}

#[test]
fn verify_all_subset() {
    let out = rigctl(&["verify", "all", "--only", "1,4"], b"");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    assert_eq!(v["pass"], true);
}
