use std::path::Path;
use std::process::{Command, Output};

fn klein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_real_writes_a_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let o = klein(&["verify", "--sections", "real", "--seed", "4", "--out", path(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().next().unwrap().contains("\"kind\":\"header\""));
    assert!(text.lines().last().unwrap().contains("\"verdict\":\"pass\""));
    let again = klein(&["verify", "--sections", "real", "--seed", "4"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn unknown_section_is_rejected() {
    let o = klein(&["verify", "--sections", "cones"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dump_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z60.txt");
    assert!(klein(&["dump", "--out", path(&file)]).status.success());

    let grid = klein(&["check-grid", path(&file)]);
    assert_eq!(grid.status.code(), Some(1));
    assert!(stdout(&grid).contains("not a grid"));

    let ci = klein(&["check-geproci", path(&file), "--type", "6,10", "--seeds", "1"]);
    assert!(ci.status.success());
    assert!(stdout(&ci).contains("complete intersection of type (6,10) at 1 seeds"));
}

#[test]
fn residual_set_is_a_grid() {
    let dump = stdout(&klein(&["dump"]));
    let z24 = [1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36];
    let residual: String = dump
        .lines()
        .filter(|l| l.starts_with('['))
        .enumerate()
        .filter(|(i, _)| !z24.contains(&(i + 1)))
        .map(|(_, l)| format!("{l}\n"))
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("residual.txt");
    std::fs::write(&file, residual).unwrap();
    let o = klein(&["check-grid", path(&file)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(6,6)-grid"));
}

#[test]
fn bad_point_file_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "[1:0:0:0]\n[0:1:q:0]\n").unwrap();
    let o = klein(&["check-grid", path(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:6:"));
}

#[test]
fn figure_is_svg() {
    let o = klein(&["figure"]);
    assert!(o.status.success());
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg") && svg.matches("class=\"point\"").count() == 15);
}
