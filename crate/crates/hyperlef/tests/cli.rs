//! End-to-end tests of the command-line binary: exit codes, artifacts and
//! byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperlef"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperlef-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn check_certified_word_exits_zero() {
    let out = run(&["check", data("matsumoto.lf").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"verdict\": \"identity_upstairs\""));
    assert!(text.contains("\"schema\": 1"));
    // pins the digest shown in the guide's command-line chapter
    assert!(text.contains("\"input_digest\": \"8cc622009c9d7324\""));
}

#[test]
fn check_empty_word_exits_zero() {
    let dir = tempdir("empty");
    let empty = dir.join("empty.lf");
    std::fs::write(&empty, "genus 2; base sphere; word = []\n").unwrap();
    let out = run(&["check", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_uncertified_word_exits_one() {
    let out = run(&["check", data("uncertified.lf").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"verdict\": \"not_trivial\""));
}

#[test]
fn check_unparsable_input_exits_two() {
    let dir = tempdir("parse");
    let bad = dir.join("bad.lf");
    std::fs::write(&bad, "genus 2; base moon; word = []").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("expected 'disk' or 'sphere'"));
}

#[test]
fn compile_matsumoto_writes_description() {
    let dir = tempdir("compile");
    let out = run(&[
        "compile",
        data("matsumoto.lf").to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
        "--emit",
        "json",
        "--emit",
        "kirby",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = std::fs::read_to_string(dir.join("matsumoto.cover.json")).unwrap();
    assert!(json.contains("\"ambient\": \"CP2#5CP2bar\""));
    assert!(json.contains("\"chi_branch\": 10"));
    assert!(json.contains("\"chi_M\": 4"));
    assert!(json.contains("\"sigma_endo\": -4"));
    let kirby = std::fs::read_to_string(dir.join("matsumoto.kirby.txt")).unwrap();
    assert!(kirby.contains("model h=2 g=1 extended"));
    assert_eq!(kirby.matches("blow_down").count(), 3);
}

#[test]
fn compile_twenty_word_reports_trivial_bundle() {
    let dir = tempdir("parity");
    let out = run(&[
        "compile",
        data("involution_sq.lf").to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = std::fs::read_to_string(dir.join("involution_sq.cover.json")).unwrap();
    assert!(json.contains("\"ambient\": \"S2xS2\""));
    assert!(json.contains("\"parity\": \"trivial\""));
}

#[test]
fn compile_uncertified_exits_one() {
    let dir = tempdir("unc");
    let out = run(&[
        "compile",
        data("uncertified.lf").to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compile_is_byte_deterministic() {
    let d1 = tempdir("det1");
    let d2 = tempdir("det2");
    for d in [&d1, &d2] {
        let out = run(&[
            "compile",
            data("matsumoto_ext.lf").to_str().unwrap(),
            "--out",
            d.to_str().unwrap(),
            "--emit",
            "json",
            "--emit",
            "kirby",
            "--json",
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(d1.join("matsumoto_ext.cover.json")).unwrap();
    let b = std::fs::read(d2.join("matsumoto_ext.cover.json")).unwrap();
    assert_eq!(a, b);
    let a = std::fs::read(d1.join("matsumoto_ext.kirby.txt")).unwrap();
    let b = std::fs::read(d2.join("matsumoto_ext.kirby.txt")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rewrite_round_trip() {
    let dir = tempdir("rewrite");
    let out = run(&[
        "rewrite",
        data("sep_disk.lf").to_str().unwrap(),
        "--deform",
        "0",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let deformed = dir.join("sep_disk.deformed.lf");
    let text = std::fs::read_to_string(&deformed).unwrap();
    assert_eq!(text.matches("a1").count() + text.matches("a2").count(), 12);

    let out = run(&[
        "rewrite",
        deformed.to_str().unwrap(),
        "--resolve",
        "0..12",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let resolved = std::fs::read_to_string(dir.join("sep_disk.deformed.resolved.lf")).unwrap();
    assert_eq!(resolved, "genus 2; base disk; word = [s1]\n");
}

#[test]
fn rewrite_resolve_on_non_block_exits_one() {
    let out = run(&[
        "rewrite",
        data("matsumoto.lf").to_str().unwrap(),
        "--resolve",
        "0..4",
        "--out",
        tempdir("nonblock").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn every_emitted_description_passes_the_cover_identity() {
    // compile all certified samples and re-check 2χ(X) - χ(B) = χ(M') from
    // the JSON fields alone
    let dir = tempdir("identity");
    for name in ["matsumoto", "matsumoto_ext", "involution_sq", "chain_power"] {
        let out = run(&[
            "compile",
            data(&format!("{name}.lf")).to_str().unwrap(),
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let json: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.join(format!("{name}.cover.json"))).unwrap())
                .unwrap();
        let ambient = json["ambient"].as_str().unwrap();
        let chi_ambient = if ambient.starts_with("CP2#") {
            let k: i64 = ambient
                .trim_start_matches("CP2#")
                .trim_end_matches("CP2bar")
                .parse()
                .unwrap();
            3 + k
        } else {
            4
        };
        assert_eq!(
            2 * chi_ambient - json["chi_branch"].as_i64().unwrap(),
            json["chi_Mprime"].as_i64().unwrap(),
            "{name}"
        );
    }
}
