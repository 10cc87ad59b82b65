use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn phax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const TRIANGLE: &str = "0 a\n0 b\n0 c\n1 a b\n1 b c\n1 a c\n";

#[test]
fn compute_reports_dimension_and_representatives() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "tri.txt", TRIANGLE);
    let f = f.to_str().unwrap();
    let o = phax(&["compute", "--input", f, "--interval", "1,2", "--degree", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dim 1"), "{text}");
    assert!(text.contains("[0]"));
    let o = phax(&[
        "--format",
        "records",
        "compute",
        "--input",
        f,
        "--interval",
        "0,1/2",
        "--degree",
        "0",
    ]);
    assert_eq!(stdout(&o), "homology\t0\t0\t1/2\t3\n");
    let o = phax(&[
        "compute",
        "--input",
        f,
        "--interval",
        "0,1",
        "--degree",
        "0",
        "--field",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn grid_records_cover_all_intervals() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "tri.txt", TRIANGLE);
    let o = phax(&[
        "--format",
        "records",
        "grid",
        "--input",
        f.to_str().unwrap(),
        "--degree",
        "0",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "grid\t0\t0\t0\t3\ngrid\t0\t0\t1\t1\ngrid\t0\t1\t1\t1\n");
    let o = phax(&["grid", "--input", f.to_str().unwrap(), "--degree", "1"]);
    assert!(stdout(&o).starts_with("H_1"));
}

#[test]
fn sequences_and_their_verdicts() {
    let dir = TempDir::new().unwrap();
    let pair = write(dir.path(), "pair.txt", "[X]\n0 a\n0 b\n0 a b\n[A]\n0 a\n0 b\n");
    let o = phax(&["sequence", "--pair", pair.to_str().unwrap(), "--interval", "0,1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("exact"));

    // a class of A that dies inside the interval breaks exactness at H_0(X)
    let split = write(dir.path(), "split.txt", "[X]\n0 a\n0 b\n0 d\n0 b d\n[A]\n1 a\n");
    let o = phax(&[
        "--format",
        "records",
        "sequence",
        "--pair",
        split.to_str().unwrap(),
        "--interval",
        "0,1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\tfail"));
    let o = phax(&["sequence", "--pair", split.to_str().unwrap(), "--interval", "1,1"]);
    assert!(o.status.success());

    let triple = write(
        dir.path(),
        "triple.txt",
        "[X]\n0 a\n0 b\n0 a b\n[A]\n0 a\n0 b\n[B]\n0 a\n",
    );
    let o = phax(&[
        "sequence",
        "--pair",
        triple.to_str().unwrap(),
        "--interval",
        "0,0",
        "--triple",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));

    // a square split into two paths sharing the corners a and c
    let mv = write(
        dir.path(),
        "mv.txt",
        "[X1]\n0 a\n0 b\n0 c\n0 a b\n0 b c\n[X2]\n0 a\n0 c\n0 d\n0 c d\n0 a d\n",
    );
    let o = phax(&[
        "--format",
        "records",
        "sequence",
        "--pair",
        mv.to_str().unwrap(),
        "--interval",
        "0,0",
        "--mv",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("\tH1(X1∪X2)\t1\n"));

    let o = phax(&[
        "sequence",
        "--pair",
        mv.to_str().unwrap(),
        "--interval",
        "0,0",
        "--mv",
        "--triple",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.txt", "1 a\n1 b\n0 a b\n");
    let o = phax(&[
        "compute",
        "--input",
        bad.to_str().unwrap(),
        "--interval",
        "0,1",
        "--degree",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn induced_matrices() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "x.txt", "0 a\n0 b\n");
    let m = write(
        dir.path(),
        "swap.map",
        "domain: x.txt\ncodomain: x.txt\na -> b\nb -> a\n",
    );
    let o = phax(&[
        "--format",
        "records",
        "induced",
        "--map",
        m.to_str().unwrap(),
        "--interval",
        "0,0",
        "--degree",
        "0",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "induced\t0\t0\t0\t2\t2\t[0, 1] [1, 0]\n");
}

#[test]
fn oracles_on_a_single_level() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "flat.txt", "0 a\n0 b\n0 c\n0 a b\n0 b c\n0 a c\n");
    let o = phax(&["oracle-compare", "--input", f.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("differ"));
    // a death inside [0, 1] separates the skeletal count from the others
    let t = write(dir.path(), "tri.txt", TRIANGLE);
    let o = phax(&["--format", "records", "oracle-compare", "--input", t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("oracle\t0\t0\t1\t1\t3\t1\tfalse\tdiffer"));
}

#[test]
fn axiom_reports_are_reproducible() {
    let a = phax(&["--format", "records", "verify-axioms", "--fuzz", "100", "--seed", "7"]);
    let b = phax(&["--format", "records", "verify-axioms", "--fuzz", "100", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1000);
    let c = phax(&["--format", "records", "verify-axioms", "--fuzz", "100", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn axioms_on_an_input_file() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "p.txt", "[X]\n0 a\n0 b\n0 c\n0 a b\n0 b c\n[A]\n0 a\n0 c\n");
    let o = phax(&[
        "verify-axioms",
        "--input",
        f.to_str().unwrap(),
        "--axiom",
        "A1",
        "A4",
        "S2",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("3 reports on 1 instances, 0 failed"));
    assert_eq!(phax(&["verify-axioms"]).status.code(), Some(2));
}
