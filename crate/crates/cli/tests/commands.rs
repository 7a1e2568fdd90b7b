use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_equidissect"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn construct_json_report() {
    let (code, stdout, _) = run(&["construct", "--a", "3", "--b", "4", "--report", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 7);
    assert!(checks.iter().all(|c| c["passed"] == true));
    let note = checks[5]["note"].as_str().unwrap();
    assert!(note.contains("150") && note.contains("120"));
}

#[test]
fn navas_alias_and_rational_flags() {
    let (code, stdout, _) = run(&["navas", "--a", "355/113", "--b", "22/7"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("verdict: VERIFIED\n"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["construct", "--a", "0", "--b", "1"]).0, 2);
    assert_eq!(run(&["construct", "--a", "x", "--b", "1"]).0, 2);
    assert_eq!(run(&["ngon", "--a", "3", "--b", "4", "--c", "5", "--n", "2"]).0, 2);
    assert_eq!(run(&["verify", "--dissection", fixture("reflections.json").to_str().unwrap()]).0, 2);
    assert_eq!(run(&["verify", "--dissection", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn help_exits_0() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("construct"));
}

#[test]
fn ngon_exit_codes() {
    let (code, stdout, _) = run(&["ngon", "--a", "3", "--b", "4", "--c", "5", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("kappa_n in [0.433012701892, 0.433012701893]"), "{stdout}");
    assert_eq!(run(&["ngon", "--a", "3", "--b", "4", "--c", "5", "--n", "12"]).0, 0);
    assert_eq!(run(&["ngon", "--a", "2", "--b", "3", "--c", "4", "--n", "6"]).0, 1);
}

#[test]
fn verify_fixtures() {
    let (code, stdout, _) = run(&["verify", "--dissection", fixture("identity.json").to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
    let (code, stdout, _) = run(&["verify", "--dissection", fixture("bad_motion.json").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL  MOTION_VALID"));
    assert_eq!(stdout.lines().filter(|l| l.starts_with("FAIL")).count(), 1, "{stdout}");
}

#[test]
fn pythagoras_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let svg = dir.path().join("d.svg");
    let (code, stdout, _) = run(&[
        "pythagoras",
        "--a",
        "3",
        "--b",
        "4",
        "--out",
        out.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.starts_with("pieces: "));
    let (code, _, _) = run(&["verify", "--dissection", out.to_str().unwrap(), "--report", "json"]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<?xml"));
}

#[test]
fn wbg_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let sq = fixture("unit_square.json");
    let (code, _, _) = run(&[
        "wbg",
        "--source",
        sq.to_str().unwrap(),
        "--target",
        fixture("right_triangle_2_1.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(run(&["verify", "--dissection", out.to_str().unwrap()]).0, 0);

    let (code, _, stderr) = run(&[
        "wbg",
        "--source",
        sq.to_str().unwrap(),
        "--target",
        fixture("square_side_2.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("areas differ"));
}

#[test]
fn tower_limit_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let (code, _, stderr) = run(&["--max-tower-depth", "1", "pythagoras", "--a", "1", "--b", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 3, "{stderr}");
    assert_eq!(run(&["construct", "--a", "3", "--b", "4", "--max-tower-depth", "0"]).0, 3);
}

#[test]
fn construct_svg_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("c.svg");
    let (code, _, _) = run(&["construct", "--a", "3", "--b", "4", "--svg", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    let golden = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/construct_3_4.svg")).unwrap();
    assert_eq!(std::fs::read(&svg).unwrap(), golden);
}
