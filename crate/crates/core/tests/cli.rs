use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use invcat::harness::main_with_args;
use invcat::harness::spec::{CategorySpec, Generator, MorphismSpec, Mutation, SPEC_FORMAT_VERSION};
use invcat::pbij::{enumerate_pbij, FinSet};
use invcat::report::{Status, VerificationReport};
use proptest::prelude::*;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn invcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_spec(cmd: &[&str], spec: &Path, extra: &[&str]) -> Output {
    let mut args = cmd.to_vec();
    args.push("--spec");
    args.push(spec.to_str().unwrap());
    args.extend(extra);
    invcat(&args)
}

fn report(out: &Output) -> VerificationReport {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "not a report ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn adjunction_suite_passes_on_pbij3() {
    let out = with_spec(&["theorems", "--suite", "3.5"], &fixture("pbij3.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r.passed());
    assert!(r.clauses.iter().all(|c| c.checked > 0));
}

#[test]
fn axioms_and_exactness_pass_on_pbij3() {
    for cmd in ["axioms", "exactness"] {
        let out = with_spec(&[cmd], &fixture("pbij3.json"), &[]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
    }
}

#[test]
fn eval_prints_inverse_image() {
    let out = with_spec(
        &["eval"],
        &fixture("fixture.json"),
        &[
            "--functor",
            "P'",
            "--morphism",
            "f",
            "--projection",
            "a,c",
            "--format",
            "text",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "{1,3}");
}

#[test]
fn eval_json_reports_closed_form_agreement() {
    let out = with_spec(
        &["eval"],
        &fixture("fixture.json"),
        &[
            "--functor",
            "P''",
            "--morphism",
            "f",
            "--projection",
            "{a,c}",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"], serde_json::json!(["1"]));
    assert_eq!(v["closed_form_agrees"], true);
}

#[test]
fn enumerate_counts_hom_set() {
    let out = invcat(&["enumerate", "--sizes", "3,3", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).lines().next(),
        Some("34")
    );
}

#[test]
fn classify_corpus_files() {
    for (name, group) in [
        ("trivial", true),
        ("Z3", true),
        ("chain3", false),
        ("I2", false),
    ] {
        let out = invcat(&[
            "classify",
            "--monoid",
            fixture(&format!("monoids/{name}.json")).to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let r = report(&out);
        assert_eq!(r.verdicts["exact"], group, "{name}");
        assert_eq!(r.verdicts["group"], group, "{name}");
    }
}

#[test]
fn malformed_json_exits_2() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.json", "{ \"format_version\": 1, ");
    assert_eq!(with_spec(&["axioms"], &path, &[]).status.code(), Some(2));
}

#[test]
fn unsupported_version_exits_2() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "v9.json", r#"{ "format_version": 9 }"#);
    let out = with_spec(&["axioms"], &path, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("format_version"));
}

#[test]
fn missing_file_exits_2() {
    assert_eq!(
        with_spec(&["axioms"], Path::new("/nonexistent/spec.json"), &[])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn non_associative_monoid_exits_2() {
    let out = invcat(&[
        "classify",
        "--monoid",
        fixture("monoids/not_associative.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_2() {
    let out = with_spec(&["theorems", "--suite", "9.9"], &fixture("pbij3.json"), &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mutations_with_sampling_exit_2() {
    let dir = TempDir::new().unwrap();
    let body = std::fs::read_to_string(fixture("mutation_involution.json"))
        .unwrap()
        .replace("[0, 1, 2]", "[0, 1, 2, 5]");
    let path = write(&dir, "big.json", &body);
    assert_eq!(with_spec(&["axioms"], &path, &[]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = invcat(&["enumerate", "--sizes", "9,9", "--max-hom", "1000"]);
    assert_eq!(out.status.code(), Some(3));

    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "seven.json",
        r#"{ "format_version": 1, "generators": [{ "kind": "all-pbij", "sizes": [7] }] }"#,
    );
    let out = with_spec(&["axioms"], &path, &["--max-size", "8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn large_objects_are_sampled() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "five.json",
        r#"{ "format_version": 1, "generators": [{ "kind": "all-pbij", "sizes": [1, 5] }] }"#,
    );
    let out = with_spec(&["axioms"], &path, &["--samples", "4", "--seed", "7"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = report(&out);
    let sampling = r.sampling.expect("sampling recorded");
    assert_eq!((sampling.seed, sampling.count), (7, 4));
}

#[test]
fn reports_are_deterministic() {
    let run = || report(&with_spec(&["exactness"], &fixture("fixture.json"), &[])).without_timing();
    assert_eq!(run(), run());
    let sampled = |seed: &str| {
        let dir = TempDir::new().unwrap();
        let path = write(
            &dir,
            "five.json",
            r#"{ "format_version": 1, "generators": [{ "kind": "all-pbij", "sizes": [2, 5] }] }"#,
        );
        report(&with_spec(
            &["theorems", "--suite", "3.4"],
            &path,
            &["--samples", "3", "--seed", seed],
        ))
        .without_timing()
    };
    assert_eq!(sampled("11"), sampled("11"));
}

#[test]
fn counterexample_present_iff_failed() {
    for (cmd, file) in [
        (&["axioms"][..], "mutation_composite.json"),
        (&["exactness"][..], "mutation_involution.json"),
        (&["theorems", "--suite", "3.1"][..], "mutation_square.json"),
        (&["exactness"][..], "fixture.json"),
    ] {
        let r = report(&with_spec(cmd, &fixture(file), &[]));
        for c in &r.clauses {
            assert_eq!(
                c.status == Status::Fail,
                c.counterexample.is_some(),
                "{file} {}",
                c.id
            );
        }
    }
}

#[test]
fn text_output_and_out_file() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("report.txt");
    let out = with_spec(
        &["axioms"],
        &fixture("pbij3.json"),
        &["--format", "text", "--out", out_path.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(out_path).unwrap();
    assert!(text.contains("PASS"), "{text}");
}

fn pbij_2_to_2() -> Vec<MorphismSpec> {
    let two = FinSet::canonical(2);
    enumerate_pbij(&two, &two, usize::MAX)
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, f)| MorphismSpec {
            name: format!("m{i}"),
            dom: "2".into(),
            cod: "2".into(),
            pairs: f
                .pairs()
                .map(|(a, b)| (a.to_owned(), b.to_owned()))
                .collect(),
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn any_swapped_involution_is_caught(i in 0usize..7, j in 0usize..7) {
        prop_assume!(i != j);
        let morphisms = pbij_2_to_2();
        let spec = CategorySpec {
            format_version: SPEC_FORMAT_VERSION,
            name: None,
            objects: vec![],
            generators: vec![Generator::AllPbij { sizes: vec![0, 1, 2] }],
            mutations: vec![Mutation::SwapInvolution { first: morphisms[i].name.clone(), second: morphisms[j].name.clone() }],
            morphisms,
            squares: vec![],
        };
        let dir = TempDir::new().unwrap();
        let path = write(&dir, "spec.json", &spec.to_json());
        let out = dir.path().join("out.json");
        let code = main_with_args(["invcat", "axioms", "--spec", path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        prop_assert_eq!(code, 1);
        let r: VerificationReport = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
        prop_assert!(r.failures().any(|c| c.counterexample.is_some()));
    }
}
