//! End-to-end checks of the command-line binary: output content, exit codes
//! and report determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clustercat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn roots_command() {
    let out = run(&["--inline", "1 -> 2", "roots"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type: A2"), "{text}");
    assert!(text.contains("positive roots (3)"), "{text}");
    assert!(text.contains("almost positive roots: 5"), "{text}");
}

#[test]
fn tilting_and_ind_counts() {
    let out = run(&["--inline", "1 -> 2\\n2 -> 3", "tilting"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("14 tilting sets"));
    let ind = run(&["--inline", "1 -> 2\\n2 -> 3", "ind"]);
    assert!(stdout(&ind).contains("9 cluster indecomposables"));
}

#[test]
fn cta_reproduces_the_triangle() {
    let out = run(&["--inline", "1 -> 2\\n2 -> 3", "cta", "--tilting", "E1,P1,P3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("bimodule dimension: 1"), "{text}");
    assert!(text.contains("dim 6"), "{text}");
    assert!(text.contains("3 -> 1"), "{text}");
}

#[test]
fn complete_command_lists_two() {
    let out = run(&["--inline", "1 -> 2", "complete", "--objects", "P1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3, "{text}");
}

#[test]
fn k0_text_and_exit_codes() {
    let out = run(&["--inline", "1 -> 2", "k0", "--auto", "f"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("trivial"));

    // Cyclic input is an input error: exit code 2.
    let bad = run(&["--inline", "1 -> 2\\n2 -> 1", "roots"]);
    assert_eq!(bad.status.code(), Some(2));

    // Unknown flag combinations are also input errors.
    let none = run(&["roots"]);
    assert_eq!(none.status.code(), Some(2));
}

#[test]
fn verify_passes_on_small_types() {
    for inline in ["1 -> 2", "1 -> 2 [1 3]", "1 -> 2\\n2 -> 3\\n2 -> 4"] {
        let out = run(&["--inline", inline, "verify"]);
        assert!(out.status.success(), "verify failed on {inline}: {}", stdout(&out));
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn verify_respects_rank_cap() {
    let out = run(&["--inline", "1 -> 2\\n2 -> 3", "--cap", "2", "verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["--inline", "1 -> 2\\n2 -> 3", "--format", "json", "tilting"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    let strip = |s: &str| -> String {
        s.lines().filter(|l| !l.contains("timing_ms")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(parsed["schema"], "clustercat-report/1");
    assert_eq!(parsed["results"]["count"], 14);
    assert!(parsed["quiver_hash"].as_str().unwrap().len() == 16);
}

#[test]
fn dot_outputs() {
    let out = run(&["--inline", "1 -> 2", "dot", "--graph", "exchange"]);
    let text = stdout(&out);
    assert!(text.starts_with("graph exchange {"));
    assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 5);

    let gabriel = run(&[
        "--inline",
        "1 -> 2\\n2 -> 3",
        "dot",
        "--graph",
        "cluster-tilted",
        "--tilting",
        "E1,P1,P3",
    ]);
    let gtext = stdout(&gabriel);
    assert!(gtext.contains("v3 -> v1"), "{gtext}");
}

#[test]
fn reflect_command_verifies_diagram() {
    let out = run(&["--inline", "1 -> 2 [1 3]", "reflect", "--vertex", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS cluster-diagram"), "{text}");
    let root = run(&["--inline", "1 -> 2", "reflect", "--vertex", "2", "--category", "root"]);
    assert!(stdout(&root).contains("PASS root-diagram"));
}

#[test]
fn quiver_file_input_and_cache() {
    let dir = std::env::temp_dir().join(format!("clustercat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("fork.quiver");
    std::fs::write(&file, "1 -> 2\n2 -> 3\n3 -> 4\n5 -> 3\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_clustercat"))
        .args(["--quiver", file.to_str().unwrap(), "apr", "--vertex", "2"])
        .env("CLUSTERCAT_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("bimodule dimension: 2"));
    // The catalog landed in the cache and a second run still works.
    let cached = std::fs::read_dir(&dir)
        .unwrap()
        .filter_map(Result::ok)
        .any(|e| e.file_name().to_string_lossy().starts_with("catalog-"));
    assert!(cached, "catalog cache file written");
    let again = Command::new(env!("CARGO_BIN_EXE_clustercat"))
        .args(["--quiver", file.to_str().unwrap(), "apr", "--vertex", "2"])
        .env("CLUSTERCAT_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(again.status.success());
    assert_eq!(stdout(&out), stdout(&again));
    std::fs::remove_dir_all(&dir).ok();
}
