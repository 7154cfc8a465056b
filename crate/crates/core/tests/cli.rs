use std::path::PathBuf;
use std::process::{Command, Output};

use selfdual::bincode::{gray_image, BinaryCode};
use selfdual::matrix::{LinearCode, RingMatrix};
use selfdual::qdc::{build_p, QrCirculantSpec};
use selfdual::rings::{parse_vector, F2, F4};

fn selfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("selfdual-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn p7_over_f4() -> LinearCode<F4> {
    let s = parse_vector::<F4>("0Ww").unwrap();
    build_p(&QrCirculantSpec::new(7, s[0], s[1], s[2]).unwrap())
}

#[test]
fn construct_writes_parseable_matrices() {
    let dir = scratch_dir("construct");
    let o = selfdual(&["construct", "--P", "7", "0", "W", "w", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[28,14,6]_2 Type I"), "{}", stdout(&o));

    let ring = RingMatrix::<F4>::parse_text(&std::fs::read_to_string(dir.join("code.txt")).unwrap()).unwrap();
    let expected = p7_over_f4();
    assert_eq!(&ring, expected.generator());

    let bin = RingMatrix::<F2>::parse_text(&std::fs::read_to_string(dir.join("code.binary.txt")).unwrap()).unwrap();
    assert_eq!(BinaryCode::from_matrix(&bin).unwrap(), gray_image(&expected).unwrap());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn distance_and_wdist_read_written_files() {
    let dir = scratch_dir("distance");
    selfdual(&["construct", "--P", "7", "0", "W", "w", "--out", dir.to_str().unwrap()]);
    let file = dir.join("code.binary.txt");
    let file = file.to_str().unwrap();

    let o = selfdual(&["distance", file]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("d=6"), "{}", stdout(&o));

    let o = selfdual(&["distance", file, "--engine", "bz"]);
    assert!(stdout(&o).contains("d=6"), "{}", stdout(&o));

    let o = selfdual(&["wdist", file]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "6,42"), "{text}");
    let total: u64 = text
        .lines()
        .filter_map(|l| l.split_once(','))
        .map(|(_, c)| c.parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 1 << 14);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(selfdual(&["construct", "--P", "3", "0", "0", "0"]).status.code(), Some(1));
    assert_eq!(selfdual(&["construct", "--theorem5", "5"]).status.code(), Some(2));
    assert_eq!(selfdual(&["construct", "--P", "9", "0", "1", "1"]).status.code(), Some(2));
    assert_eq!(selfdual(&["verify", "--table", "9"]).status.code(), Some(2));
    assert_eq!(selfdual(&["distance", "/nonexistent/matrix.txt"]).status.code(), Some(2));
}

#[test]
fn verify_json_honours_row_selection() {
    let o = selfdual(&["verify", "--table", "1", "--rows", "1,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = reports[0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn lift_search_output_ignores_thread_count() {
    let dir = scratch_dir("threads");
    std::fs::create_dir_all(&dir).unwrap();
    let run = |threads: &str| {
        let out = dir.join(format!("lifts-{threads}.jsonl"));
        let o = selfdual(&[
            "--threads", threads, "search", "lift", "--base", "P7-F4", "--d-min", "10", "--budget", "300", "--seed", "3",
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read_to_string(out).unwrap()
    };
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("3"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn empty_extension_budget_writes_nothing() {
    let dir = scratch_dir("extend");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("records.jsonl");
    let o = selfdual(&["search", "extend", "--base", "K1", "--ring", "f2", "--budget", "0", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap_or_default(), "");
    std::fs::remove_dir_all(dir).unwrap();
}
