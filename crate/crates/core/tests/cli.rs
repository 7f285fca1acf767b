use std::path::Path;
use std::process::{Command, Output};

fn mdlc(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdlc")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn legendre_column_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = mdlc(&["construct", "legendre-col", "--p", "7"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "MDARRAY 1\nFIELD 2 1\nALPHA 1\nPERIOD 7\n0 1 1 0 1 0 0\n");
}

#[test]
fn binary_legendre_array_of_f9() {
    let dir = tempfile::tempdir().unwrap();
    let o = mdlc(&["construct", "f1", "--p", "3", "--modulus", "2,2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PERIOD 3 3\n0 1 1\n0 0 1\n0 1 0\n"));
    let echo = String::from_utf8(o.stderr).unwrap();
    assert_eq!(echo.trim(), "field p=3 r=2 modulus=2,2 alpha=3");
}

#[test]
fn composed_file_round_trips_into_complexity() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(mdlc(&["construct", "expquad", "--p", "7", "--alpha", "3", "--out", "s.txt"], d).status.success());
    assert!(mdlc(&["construct", "legendre-col", "--p", "7", "--out", "c.txt"], d).status.success());
    let o = mdlc(&["construct", "compose2d", "--shift", "s.txt", "--column", "c.txt", "--out", "a.txt"], d);
    assert!(o.status.success());
    let o = mdlc(&["complexity", "--input", "a.txt"], d);
    assert_eq!(stdout(&o), "L=19 Ln=19/42\n");
    let o = mdlc(&["complexity", "--input", "a.txt", "--engine", "all"], d);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("unfold: L=19"));
    let o = mdlc(&["complexity", "--input", "a.txt", "--json"], d);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["L"], 19);
    assert_eq!(v["Ln"], "19/42");
}

#[test]
fn a2_matches_figure_array_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let o = mdlc(&["construct", "a2", "--q", "9", "--modulus", "2,2"], dir.path());
    assert!(o.status.success());
    let text = stdout(&o);
    let a = mdlc::mdarray::read_array_str(&text).unwrap();
    assert_eq!(a.periods(), &[8, 8]);
    // starred shifts at i = 2, 3 give zero rows in the first coordinate
    for j in 0..8 {
        assert_eq!(a.get(&[2, j]).unwrap().0, 0);
        assert_eq!(a.get(&[3, j]).unwrap().0, 0);
    }
}

#[test]
fn zero_array_and_random_engine_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("z.txt"), "MDARRAY 1\nFIELD 2 1\nALPHA 1\nPERIOD 3 2\n0 0 0\n0 0 0\n").unwrap();
    assert_eq!(stdout(&mdlc(&["complexity", "--input", "z.txt"], d)), "L=0 Ln=0/1\n");
    std::fs::write(
        d.join("r.txt"),
        "MDARRAY 1\nFIELD 2 1\nALPHA 1\nPERIOD 3 4\n1 0 1\n1 1 0\n0 0 1\n1 0 0\n",
    )
    .unwrap();
    let o = mdlc(&["complexity", "--input", "r.txt", "--engine", "all", "--order", "lex"], d);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("consistent"));
}

#[test]
fn bm_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = mdlc(&["bm", "--seq", "0,1,1", "--p", "2"], dir.path());
    assert_eq!(stdout(&o), "L=2\nm(x)=x^2 + x + 1\n");
    let o = mdlc(&["bm", "--seq", "0,0,1,1,0", "--p", "2"], dir.path());
    assert!(stdout(&o).starts_with("L=4\n"));
    let o = mdlc(&["bm", "--seq", "0,0,0,0", "--p", "3"], dir.path());
    assert_eq!(stdout(&o), "L=0\nm(x)=1\n");
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = mdlc(&["verify", "--table1", "--construction", "F1", "--p-list", "3,5,7"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(" pass").count(), 3);
    let o = mdlc(&["verify", "--table1", "--construction", "F2", "--p-list", "3"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("p > 3"));
}

#[test]
fn cap_refusal_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(mdlc(&["construct", "f1", "--p", "5", "--out", "f.txt"], d).status.success());
    assert_eq!(mdlc(&["complexity", "--input", "f.txt", "--cap", "10"], d).status.code(), Some(2));
    assert_eq!(mdlc(&["complexity", "--input", "missing.txt"], d).status.code(), Some(1));
    assert_eq!(mdlc(&["complexity", "--input", "f.txt", "--engine", "nope"], d).status.code(), Some(1));
    assert_eq!(mdlc(&["--help"], d).status.code(), Some(0));
}

#[test]
fn sweep_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for name in ["a.csv", "b.csv"] {
        let args = ["sweep", "--conjecture1", "--n-max", "25", "--samples", "5", "--seed", "42", "--out", name];
        assert!(mdlc(&args, d).status.success());
    }
    let a = std::fs::read_to_string(d.join("a.csv")).unwrap();
    assert_eq!(a, std::fs::read_to_string(d.join("b.csv")).unwrap());
    assert_eq!(a.lines().count(), 26);
    assert!(a.starts_with("construction,p_or_n,seed,N,L,Ln_num,Ln_den,ref_num,ref_den,diff_num,diff_den,log_size\n"));
}

#[test]
fn construction_sweep_reports_skips() {
    let dir = tempfile::tempdir().unwrap();
    let o = mdlc(&["sweep", "--construction", "A4", "--p-list", "3"], dir.path());
    assert!(stdout(&o).contains("A4 3: N=72 L=32 Ln=4/9 ref=4/9 diff=0/1"));
    let o = mdlc(&["sweep", "--construction", "A1", "--p-list", "3"], dir.path());
    assert!(stdout(&o).starts_with("skipped A1 at 3"));
}
