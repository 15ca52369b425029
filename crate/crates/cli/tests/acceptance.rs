//! Command-line contract: exported files parse back to the structures
//! they came from, and the process exit code distinguishes a clean sweep
//! (0), a genuine law violation (1), and unusable input (2).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use orthores_core::corpus;
use orthores_core::format;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthores"))
        .args(args)
        .output()
        .expect("binary must spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn export_corpus(dir: &Path) {
    let out = run(&["corpus", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success(), "corpus export failed: {}", stderr(&out));
}

#[test]
fn criterion_9_export_then_parse_is_the_identity() {
    let dir = tempfile::tempdir().unwrap();
    export_corpus(dir.path());

    let entries = corpus::all();
    let mut files: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|f| f.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(files.len(), entries.len(), "one file per corpus entry");

    for e in &entries {
        let path = dir.path().join(format!("{}.oms", e.name));
        let text = fs::read_to_string(&path).unwrap();
        let blocks = format::parse_str(&text).expect("exported file must parse");
        assert_eq!(blocks.len(), 1, "{}", e.name);
        let block = &blocks[0];
        assert_eq!(block.name, e.name);
        assert_eq!(block.poset.labels(), e.poset.labels(), "{}", e.name);
        assert_eq!(block.comp.map(), e.comp.map(), "{}", e.name);
        for a in e.poset.elements() {
            for b in e.poset.elements() {
                assert_eq!(
                    block.poset.leq(a, b),
                    e.poset.leq(a, b),
                    "{}: order at ({a},{b})",
                    e.name
                );
            }
        }
    }
    println!("criterion 9: export/parse identity holds for all {} entries", entries.len());
}

#[test]
fn criterion_9_exit_zero_on_a_clean_structure() {
    let dir = tempfile::tempdir().unwrap();
    export_corpus(dir.path());

    let file = dir.path().join("fig1.oms");
    let out = run(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"), "unexpected failure line:\n{text}");
}

#[test]
fn criterion_9_exit_one_on_a_genuine_violation() {
    let dir = tempfile::tempdir().unwrap();
    export_corpus(dir.path());

    let file = dir.path().join("fig5.oms");
    let out = run(&["verify", file.to_str().unwrap(), "--suite", "residuation"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let contra = text
        .lines()
        .find(|l| l.contains("contraposition"))
        .expect("contraposition line present");
    assert!(contra.contains("FAIL"), "{contra}");
    assert!(contra.contains("(a, f)"), "{contra}");
}

#[test]
fn criterion_9_exit_two_on_unusable_input() {
    let dir = tempfile::tempdir().unwrap();

    let truncated = dir.path().join("broken.oms");
    fs::write(&truncated, "poset x\nelements a b\ncover a\nend\n").unwrap();
    let out = run(&["verify", truncated.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"), "stderr: {}", stderr(&out));

    let missing = dir.path().join("nope.oms");
    let out = run(&["classify", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2), "unknown subcommand is a usage error");
}

#[test]
fn criterion_9_json_lines_are_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    export_corpus(dir.path());

    let file = dir.path().join("fig3.oms");
    let out = run(&[
        "verify",
        file.to_str().unwrap(),
        "--suite",
        "residuation",
        "--format",
        "json-lines",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let text = stdout(&out);
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad json line {l}: {e}")))
        .collect();
    assert!(!rows.is_empty());
    for row in &rows {
        assert_eq!(row["structure"], "fig3");
        assert!(row["law"].is_string());
        assert!(matches!(row["status"].as_str(), Some("pass" | "fail" | "inapplicable")));
    }

    let find = |law: &str| {
        rows.iter()
            .find(|r| r["law"] == law)
            .unwrap_or_else(|| panic!("no row for {law}"))
    };
    let bwd = find("adjointness-backward");
    assert_eq!(bwd["status"], "fail");
    assert_eq!(bwd["counterexample"], serde_json::json!(["a", "e", "a"]));
    let div = find("divisible");
    assert_eq!(div["counterexample"], serde_json::json!(["e", "a"]));
    let dneg = find("double-negation");
    assert_eq!(dneg["counterexample"], serde_json::json!(["a"]));
    assert_eq!(find("adjointness-forward")["status"], "pass");
    assert_eq!(find("arrow-zero-is-complement")["status"], "pass");
}

#[test]
fn criterion_9_classification_reports_without_failing_the_process() {
    let dir = tempfile::tempdir().unwrap();
    export_corpus(dir.path());

    let file = dir.path().join("fig3.oms");
    let out = run(&["classify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "classification itself never signals violations");
    let text = stdout(&out);

    let row = |label: &str| {
        text.lines()
            .find(|l| l.trim_start().starts_with(label))
            .unwrap_or_else(|| panic!("no row {label} in:\n{text}"))
            .to_string()
    };
    assert!(row("weakly orthomodular").contains("yes"));
    assert!(row("dually weakly orthomodular").contains("no"));
    assert!(row("orthomodular").contains("no"));
    assert!(row("involution").contains("no"));
}

#[test]
fn criterion_9_tables_show_undefined_cells() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("hexframe.oms");
    fs::write(
        &file,
        "poset hexframe\n\
         elements 0 a b c d 1\n\
         cover 0 a\ncover 0 b\n\
         cover a c\ncover a d\ncover b c\ncover b d\n\
         cover c 1\ncover d 1\n\
         comp 0 1\ncomp a b\ncomp b a\ncomp c d\ncomp d c\ncomp 1 0\n\
         end\n",
    )
    .unwrap();

    let out = run(&["table", file.to_str().unwrap(), "--op", "odot"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("UNDEF(d)"), "table:\n{}", stdout(&out));

    let verify = run(&["verify", file.to_str().unwrap(), "--suite", "residuation"]);
    let text = stdout(&verify);
    let adj = text
        .lines()
        .find(|l| l.contains("adjointness-forward"))
        .expect("forward adjointness line");
    assert!(adj.contains("N/A"), "{adj}");
    assert!(adj.contains("undefined at d"), "{adj}");
}

#[test]
fn criterion_9_name_filter_and_sum_composition() {
    let dir = tempfile::tempdir().unwrap();
    export_corpus(dir.path());

    let both = dir.path().join("pair.oms");
    let mut text = fs::read_to_string(dir.path().join("fig2.oms")).unwrap();
    text.push('\n');
    text.push_str(&fs::read_to_string(dir.path().join("fig3.oms")).unwrap());
    fs::write(&both, &text).unwrap();

    let out = run(&["classify", both.to_str().unwrap(), "--name", "fig2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("fig2:"), "{}", stdout(&out));
    assert!(!stdout(&out).contains("fig3"));

    let out = run(&["classify", both.to_str().unwrap(), "--name", "fig9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no structure named"));

    let summed = dir.path().join("sum.oms");
    let out = run(&[
        "hsum",
        both.to_str().unwrap(),
        "fig2",
        "fig3",
        "--out",
        summed.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let out = run(&["classify", summed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("hsum-fig2-fig3:"), "{text}");
    assert!(text.contains("13 elements"), "6 + 9 sharing the two bounds:\n{text}");
}
