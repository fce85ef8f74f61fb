use std::fs;
use std::process::{Command, Output};

fn musym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_musym")).args(args).env_remove("MUSYM_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn golden_gist_with_each_algorithm() {
    for algo in ["ls", "groebner", "g"] {
        let o = musym(&["gist", "3*r1^2+2*r1*r2+r2^2", "--mu", "2,1", "--algo", algo]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).trim(), "z1^2 - z2");
    }
    let o = musym(&["gist", "3*r1^2+2*r1*r2+r2^2", "--mu", "2,1", "--algo", "cr", "--eval", "3,1,-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("eval = 8"), "{}", stdout(&o));
}

#[test]
fn not_symmetric_exits_with_one() {
    let o = musym(&["gist", "r1+r2", "--mu", "2,1", "--algo", "cr"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "F is not mu-symmetric");
}

#[test]
fn named_input_and_evaluation() {
    let o = musym(&["gist", "dplus", "--mu", "2,2,1", "--eval", "3,1,-3,-1,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).lines().any(|l| l == "eval = -25"), "{}", stdout(&o));
}

#[test]
fn json_output() {
    let o = musym(&["gist", "3*r1^2+2*r1*r2+r2^2", "--mu", "2,1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["symmetric"], true, "{v}");
}

#[test]
fn input_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.txt");
    fs::write(&path, "3*r1^2+2*r1*r2+r2^2\n").unwrap();
    let at = format!("@{}", path.display());
    let o = musym(&["gist", &at, "--mu", "2,1"]);
    assert_eq!(stdout(&o).trim(), "z1^2 - z2");
}

#[test]
fn monomial_basis_lists_its_symbols() {
    let o = musym(&["gist", "3*r1^2+2*r1*r2+r2^2", "--mu", "2,1", "--basis", "m"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("y1 = m"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: [&[&str]; 5] = [
        &["gist", "r1+r2", "--mu", "2,1", "--algo", "groebner", "--basis", "m"],
        &["gist", "r1+r3", "--mu", "2,1"],
        &["gist", "r1+", "--mu", "2,1"],
        &["gist", "r1", "--mu", "2,1", "--eval", "1,2"],
        &["dims", "--mu", "2,1", "--delta", "5..3"],
    ];
    for args in cases {
        let o = musym(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error: "), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn dump_system_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sys.csv");
    let o = musym(&["gist", "3*r1^2+2*r1*r2+r2^2", "--mu", "2,1", "--dump-system", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("term,"));
}

#[test]
fn dims_marks_drops() {
    let o = musym(&["dims", "--mu", "2,2", "--delta", "3..5"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect();
    assert_eq!(rows, ["(2,2) 3 3 2 drop", "(2,2) 4 5 3 drop", "(2,2) 5 6 3 drop"]);
    let o = musym(&["dims", "--mu", "2,1", "--mu", "3,1", "--delta", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn ideal_lists_constraints() {
    let o = musym(&["ideal", "--mu", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = musym(&["ideal", "--mu", "2,1,1,1", "--max-degree", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = musym(&["ideal", "--mu", "2,1", "--basis", "m"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn canonize_and_disk_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    let o = musym(&["canonize", "--mu", "2,1", "--delta", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["c"].as_array().unwrap().len(), 2);

    let cache = dir.path().join("cache");
    fs::create_dir(&cache).unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_musym"))
            .args(["gist", "3*r1^2+2*r1*r2+r2^2", "--mu", "2,1", "--algo", "cr"])
            .env("MUSYM_CACHE_DIR", &cache)
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.len(), 1, "{files:?}");
    assert_eq!(stdout(&run()), stdout(&first));
}

#[test]
fn bench_suites() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    fs::write(&empty, r#"{"entries": []}"#).unwrap();
    let o = musym(&["bench", empty.to_str().unwrap(), "--reps", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    let o = musym(&["bench", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let small = dir.path().join("small.json");
    fs::write(&small, r#"{"entries": [{"id": "g", "poly": "3*r1^2+2*r1*r2+r2^2", "mu": "2,1"}]}"#).unwrap();
    let csv = dir.path().join("out.csv");
    let o = musym(&["bench", small.to_str().unwrap(), "--reps", "1", "--check", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("F,delta,mu,n,basis,Y/N"), "{text}");
}
