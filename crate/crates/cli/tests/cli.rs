use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplicia")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("simplicia-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_reports_the_f_vector() {
    assert_eq!(stdout(&["validate", &data("triangle.json")]), "valid: f-vector (3, 3, 1)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["validate", "no/such/file.json"]), 2);
    let broken = scratch("overlap.json");
    std::fs::write(
        &broken,
        r#"{ "ambient_dim": 2,
             "vertices": { "A": ["0","0"], "B": ["2","0"], "C": ["0","2"], "D": ["1","-1"], "E": ["1","1"] },
             "simplices": [ ["A","B","C"], ["A","D","E"] ] }"#,
    )
    .unwrap();
    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("intersect improperly"));
    assert_eq!(code(&["bsd", broken.to_str().unwrap()]), 3);
    assert_eq!(code(&["export", &data("triangle.json"), "--format", "svg", "--out", "/no/such/dir/x.svg"]), 2);
    assert_eq!(code(&["check-subdivision", &data("split_triangle.json"), "--fine", &data("triangle.json")]), 5);
    assert_eq!(code(&["star", &data("triangle.json"), "--vertex", "Q"]), 1);
}

#[test]
fn svg_needs_a_planar_complex() {
    let tet = scratch("tet.json");
    std::fs::write(
        &tet,
        r#"{ "ambient_dim": 3,
             "vertices": { "a": ["0","0","0"], "b": ["1","0","0"], "c": ["0","1","0"], "d": ["0","0","1"] },
             "simplices": [ ["a","b","c","d"] ] }"#,
    )
    .unwrap();
    assert_eq!(code(&["export", tet.to_str().unwrap(), "--format", "svg"]), 4);
    let off = stdout(&["export", tet.to_str().unwrap(), "--format", "off"]);
    assert!(off.starts_with("OFF\n4 4 6\n"));
}

#[test]
fn bsd_then_closure_is_a_fixed_point() {
    let fine = scratch("bsd1.json");
    stdout(&["bsd", &data("triangle.json"), "-n", "1", "--out", fine.to_str().unwrap()]);
    let text = std::fs::read_to_string(&fine).unwrap();
    assert_eq!(stdout(&["closure", fine.to_str().unwrap()]), text);
    assert_eq!(stdout(&["validate", fine.to_str().unwrap()]), "valid: f-vector (7, 12, 6)\n");
    let check = stdout(&["check-subdivision", &data("triangle.json"), "--fine", fine.to_str().unwrap()]);
    assert_eq!(check, "holds\n[A,B,C] covered by 6\n");
}

#[test]
fn svg_figures() {
    let once = scratch("fig1.json");
    stdout(&["bsd", &data("triangle.json"), "--out", once.to_str().unwrap()]);
    let svg = stdout(&["export", once.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(svg.matches("<polygon").count(), 6);
    assert_eq!(svg.matches("<line").count(), 12);
    assert_eq!(svg.matches("<text").count(), 7);
}

#[test]
fn decay_table() {
    let table = stdout(&["decay", &data("standard_2.json"), "-n", "3", "--exact"]);
    let rows: Vec<Vec<&str>> = table.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[0], ["m", "simplices", "maximal", "mesh", "bound", "ratio"]);
    assert_eq!(rows[1], ["0", "7", "2:1", "1", "1", "1"]);
    assert_eq!(rows[2][4], "2/3");
    assert_eq!(rows[4][4], "8/27");
    assert_eq!(rows.len(), 5);

    let only = stdout(&["decay", &data("triangle.json"), "-n", "0"]);
    assert_eq!(only.lines().count(), 2);

    let tail = stdout(&["decay", &data("triangle_with_tail.json"), "-n", "2", "--csv"]);
    assert!(tail.lines().nth(3).unwrap().starts_with("2,129,1:4 2:36,"));
}

#[test]
fn decay_with_epsilon() {
    let out = stdout(&["decay", &data("standard_2.json"), "-n", "1", "--eps", "1/10"]);
    assert!(out.contains("N_bound = 6\n"));
    assert!(out.contains("N_actual = 5\n"));
    let csv = stdout(&["decay", &data("standard_2.json"), "-n", "1", "--eps", "0.1", "--csv"]);
    assert!(csv.contains("N_bound,6\n"));
    assert_eq!(code(&["decay", &data("standard_2.json"), "--eps", "0"]), 1);
}

#[test]
fn six_significant_digits() {
    assert_eq!(stdout(&["mesh", &data("standard_2.json"), "--metric", "l2"]), "1.41421\n");
    assert_eq!(stdout(&["mesh", &data("standard_2.json"), "--metric", "l2", "--exact"]), "sqrt(2)\n");
}

#[test]
fn carrier_and_star() {
    assert_eq!(stdout(&["carrier", &data("triangle.json"), "--point", "1/2,0"]), "carrier [A,B]\nA 1/2\nB 1/2\n");
    assert_eq!(stdout(&["carrier", &data("triangle.json"), "--point", "-1,0"]), "outside\n");
    let star = stdout(&["star", &data("split_triangle.json"), "--vertex", "D"]);
    assert_eq!(star.lines().collect::<Vec<_>>(), ["[D]", "[A,D]", "[B,D]", "[C,D]", "[A,C,D]", "[B,C,D]"]);
}

#[test]
fn induced_edge() {
    let out = stdout(&[
        "induced",
        &data("triangle.json"),
        "--sub",
        &data("edge.json"),
        "--fine",
        &data("split_triangle.json"),
    ]);
    assert!(out.contains("\"D\": [\"1/2\", \"0\"]"));
    assert!(out.contains("[\"A\", \"D\"],\n    [\"B\", \"D\"]\n"));
    let halves = stdout(&["induced", &data("triangle.json"), "--sub", &data("edge.json")]);
    assert!(halves.contains("\"b(A,B)\""));
}
