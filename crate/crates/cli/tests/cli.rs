use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const WORKED: &str = include_str!("fixtures/worked_example.play");

fn ipm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ipm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_game(events: &str) -> String {
    format!(
        r#"{{"schema_version": "1", "sport": "basketball",
            "teams": [
              {{"name": "Reds", "players": [{{"id": "A", "name": "A"}}, {{"id": "B", "name": "B"}}, {{"id": "C", "name": "C"}}]}},
              {{"name": "Blues", "players": [{{"id": "D", "name": "D"}}, {{"id": "E", "name": "E"}}, {{"id": "F", "name": "F"}}]}}
            ],
            "events": [{events}]}}"#
    )
}

#[test]
fn rank_worked_example() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "example.play", WORKED);
    let out = ipm(&["rank", s(&f)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "Player | Team | IPM");
    assert_eq!(lines[1], "C | Reds | 64.66");
}

#[test]
fn rank_malformed_file() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bad.play", "#team Reds A B C\n#team Blues D E F\nA -> B -> Q -> G\n");
    let out = ipm(&["rank", s(&f)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3, column 11"), "{}", stderr(&out));

    let f = write(dir.path(), "bad.json", r#"{"schema_version": "1", "sport": "curling", "teams": []}"#);
    let out = ipm(&["rank", s(&f)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("sport"), "{}", stderr(&out));
}

#[test]
fn rank_with_both_solvers_reports_discrepancy() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "example.play", WORKED);
    let out = ipm(&["rank", s(&f), "--solver", "both"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let d: f64 = text
        .split("max solver discrepancy ")
        .nth(1)
        .expect("discrepancy is reported")
        .trim()
        .parse()
        .unwrap();
    assert!(d <= 1e-9);
}

#[test]
fn rank_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "example.play", WORKED);
    assert_eq!(code(&ipm(&["rank", s(&f), "--max-iters", "1"])), 3);
    assert_eq!(code(&ipm(&["rank", s(&f), "--tol", "0"])), 64);
    assert_eq!(code(&ipm(&["rank", s(&f), "--solver", "magic"])), 64);
    assert_eq!(code(&ipm(&["rank", s(&dir.path().join("missing.play"))])), 64);
    assert_eq!(code(&ipm(&["rank"])), 64);
    assert_eq!(code(&ipm(&["frobnicate"])), 64);
    assert_eq!(code(&ipm(&["--help"])), 0);
    assert_eq!(code(&ipm(&["--version"])), 0);

    let cross = write(dir.path(), "cross.json", &json_game(r#"{"type": "pass", "from": "A", "to": "D"}"#));
    assert_eq!(code(&ipm(&["rank", s(&cross)])), 1);
}

#[test]
fn rank_formats_and_output_file() {
    let dir = TempDir::new().unwrap();
    let empty = write(dir.path(), "empty.json", &json_game(""));
    let out = ipm(&["rank", s(&empty), "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("Player,Team,IPM,IPM_full,rank"));
    let cells: Vec<&str> = rows.map(|r| r.split(',').nth(2).unwrap()).collect();
    assert_eq!(cells, ["50.00"; 6]);

    let f = write(dir.path(), "example.play", WORKED);
    let target = dir.path().join("report.json");
    let out = ipm(&["rank", s(&f), "--format", "json", "--output", s(&target)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(doc["kind"], "ipm_report");
    assert_eq!(doc["game"], "example");
    assert_eq!(doc["standings"][0], "C");
    assert!(doc["report"]["goal_rank"].as_f64().unwrap() > 0.0);
}

#[test]
fn matrix_forms() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "example.play", WORKED);
    let out = ipm(&["matrix", s(&f), "--form", "adjacency"]);
    assert_eq!(code(&out), 0);
    let rows: Vec<Vec<u64>> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows[0], [0, 3, 3, 0, 0, 1, 1]);
    assert_eq!(rows[6], [4, 1, 1, 2, 1, 3, 1]);

    let out = ipm(&["matrix", s(&f), "--form", "column-stochastic"]);
    let second: Vec<String> = stdout(&out).lines().nth(1).unwrap().split_whitespace().map(String::from).collect();
    assert_eq!(second[1], "2/7");

    let empty = write(dir.path(), "empty.json", &json_game(""));
    let out = ipm(&["matrix", s(&empty), "--form", "row-stochastic"]);
    let goal_row: Vec<String> = stdout(&out).lines().last().unwrap().split_whitespace().map(String::from).collect();
    assert_eq!(goal_row, vec!["1/7"; 7]);

    assert_eq!(code(&ipm(&["matrix", s(&f), "--form", "sideways"])), 64);
}

#[test]
fn validate_command() {
    let dir = TempDir::new().unwrap();
    let ok = write(dir.path(), "ok.play", WORKED);
    assert_eq!(code(&ipm(&["validate", s(&ok)])), 0);

    let empty = write(dir.path(), "empty.json", &json_game(""));
    assert_eq!(code(&ipm(&["validate", s(&empty)])), 0);

    let cross = write(dir.path(), "cross.json", &json_game(r#"{"type": "pass", "from": "A", "to": "D"}"#));
    let out = ipm(&["validate", s(&cross)]);
    assert_eq!(code(&out), 1);
    let listed: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(listed.len(), 1);
    assert!(listed[0].contains("event 0") && listed[0].contains("pass endpoints on opposite teams"));
}

fn synth_games(dir: &Path, k: usize) -> Vec<PathBuf> {
    (0..k)
        .map(|i| {
            let p = dir.join(format!("game{i}.json"));
            let out = ipm(&[
                "synth", "--sport", "basketball", "--players", "12", "--events", "150", "--seed",
                &i.to_string(), "--output", s(&p),
            ]);
            assert_eq!(code(&out), 0);
            p
        })
        .collect()
}

#[test]
fn batch_writes_reports_and_summary() {
    let dir = TempDir::new().unwrap();
    let games = synth_games(dir.path(), 9);
    let out_dir = dir.path().join("out");
    let mut args = vec!["batch", "--out-dir", s(&out_dir), "--format", "json"];
    args.extend(games.iter().map(|p| s(p)));
    let out = ipm(&args);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let summary = fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let mut lines = summary.lines();
    assert_eq!(
        lines.next(),
        Some("game,team_1,team_2,winner,team_1_aipm,team_2_aipm,team_1_starter_aipm,team_2_starter_aipm,wt_aipm,lt_aipm,wt_starter_aipm,lt_starter_aipm")
    );
    assert_eq!(lines.count(), 9);

    // Each report matches a standalone run byte for byte.
    for g in &games {
        let name = g.file_stem().unwrap().to_str().unwrap();
        let batch = fs::read_to_string(out_dir.join(format!("{name}.json"))).unwrap();
        let single = stdout(&ipm(&["rank", s(g), "--format", "json"]));
        assert_eq!(batch, single);
    }
}

#[test]
fn batch_isolates_failures() {
    let dir = TempDir::new().unwrap();
    let mut games = synth_games(dir.path(), 8);
    games.insert(3, write(dir.path(), "broken.play", "#team Reds A\nA -> B\n"));
    let out_dir = dir.path().join("out");
    let mut args = vec!["batch", "--out-dir", s(&out_dir)];
    args.extend(games.iter().map(|p| s(p)));
    let out = ipm(&args);
    assert_ne!(code(&out), 0);
    assert!(stderr(&out).contains("broken.play"), "{}", stderr(&out));

    let reports = fs::read_dir(&out_dir)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().unwrap() == "txt")
        .count();
    assert_eq!(reports, 8);
    let summary = fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 9);
}

#[test]
fn batch_needs_inputs() {
    let dir = TempDir::new().unwrap();
    let out = ipm(&["batch", "--out-dir", s(dir.path())]);
    assert_eq!(code(&out), 64);
}

#[test]
fn compare_games_and_reports() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "first.play", WORKED);
    let b = write(dir.path(), "second.play", WORKED);
    let out = ipm(&["compare", s(&a), s(&b)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "Player | Team | first | second | Mean");
    assert_eq!(lines[1], "C | Reds | 64.66 | 64.66 | 64.66");
    assert_eq!(lines.len(), 7);

    // A report and a game with disjoint rosters give the union of rows.
    let report = dir.path().join("worked.json");
    assert_eq!(code(&ipm(&["rank", s(&a), "--format", "json", "-o", s(&report)])), 0);
    let other = synth_games(dir.path(), 1).remove(0);
    let out = ipm(&["compare", s(&report), s(&other), "--format", "csv"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 6 + 12);
    let c_row = text.lines().find(|l| l.starts_with("C,")).unwrap();
    assert_eq!(c_row, "C,Reds,64.66,,64.66");

    assert_eq!(code(&ipm(&["compare", s(&a)])), 64);
}

#[test]
fn synth_is_deterministic_and_valid() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        let out = ipm(&[
            "synth", "--sport", "hockey", "--players", "18", "--events", "300", "--seed", "7", "-o",
            s(&p),
        ]);
        assert_eq!(code(&out), 0);
        fs::read(&p).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
    assert_eq!(code(&ipm(&["validate", s(&dir.path().join("a.json"))])), 0);

    let out = ipm(&["synth", "--sport", "soccer", "--players", "1"]);
    assert_eq!(code(&out), 64);
    let out = ipm(&["synth", "--sport", "cricket", "--players", "4"]);
    assert_eq!(code(&out), 64);
}
