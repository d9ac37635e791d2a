use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn cdforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdforms")).args(args).output().expect("binary runs")
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn without_times(report: &str) -> String {
    report
        .lines()
        .map(|l| l.split(' ').filter(|w| !w.starts_with("time_ms=")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

const HEIS_RELABELED: &str = "version 1
ring Q
vars x y
group H
gen u v w
counit u 0
counit v 0
counit w 0
comul u u_1 + u_2
comul v v_1 + v_2
comul w w_1 + w_2 + u_1*v_2
antipode u -u
antipode v -v
antipode w -w + u*v
";

#[test]
fn default_config_passes_every_suite() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("default.cfg");
    assert!(cdforms(&["export", "--file", s(&cfg)]).status.success());
    let report = dir.path().join("report.txt");
    let out = cdforms(&["verify", "--config", s(&cfg), "--jobs", "4", "--report", s(&report)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.lines().any(|l| l.starts_with("summary total=") && l.ends_with("fail=0 skip=0")), "{text}");
    for suite in ["ideal-identities", "nu-iso", "sign-action", "wedge", "cech", "bracket-laws", "adjoint", "delta-suite", "deformation-kernel"] {
        assert!(text.contains(&format!("summary suite={suite} ")), "{suite} missing");
    }
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let cfg = put(&dir, "c.cfg", "version 1\nring F2\nvars x y\nseed 99\ninstances 4\n");
    let (r1, r2) = (dir.path().join("r1"), dir.path().join("r2"));
    cdforms(&["verify", "--config", s(&cfg), "--jobs", "1", "--report", s(&r1)]);
    cdforms(&["verify", "--config", s(&cfg), "--jobs", "3", "--report", s(&r2)]);
    let (a, b) = (fs::read_to_string(&r1).unwrap(), fs::read_to_string(&r2).unwrap());
    assert!(a.contains("check suite="));
    assert_eq!(without_times(&a), without_times(&b));
}

#[test]
fn weak_forms_over_f2_show_the_torsion_witness() {
    let dir = TempDir::new().unwrap();
    let cfg = put(&dir, "w.cfg", "version 1\nring F2\nvars x y\nflavor weak\nsuite nu-iso\n");
    let out = cdforms(&["verify", "--config", s(&cfg)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ν(dx*dx) = e[1,x]*e[2,x] vanishes in the strong ring"), "{}", stdout(&out));
}

#[test]
fn corrupted_antipode_fails_with_a_witness() {
    let dir = TempDir::new().unwrap();
    let bad = HEIS_RELABELED.replace("antipode w -w + u*v", "antipode w -w") + "suite hopf-axioms\n";
    let cfg = put(&dir, "bad.cfg", &bad);
    let report = dir.path().join("r");
    let out = cdforms(&["verify", "--config", s(&cfg), "--report", s(&report)]);
    assert_eq!(out.status.code(), Some(1));
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("status=fail"), "{text}");
    assert!(text.contains("witness=\"axiom `left antipode` fails on `w`: got -u*v instead of 0\""), "{text}");
}

#[test]
fn eval_prints_normal_forms() {
    let dir = TempDir::new().unwrap();
    let e = put(&dir, "e1", "ring Q\nvars x\neval nu d x\n");
    let out = cdforms(&["eval", "--expr", s(&e)]);
    assert_eq!(stdout(&out), "e[1,x]\n");

    let e = put(
        &dir,
        "e2",
        "ring Q
vars x y
form f Heis3 = dx; 0; 0
form g Heis3 = 0; dy; 0
eval delta1 mc(Aff1)
eval bracket f g
eval classical bracket f g
eval classical mc(Aff1)
eval dform x*y*dx
",
    );
    let out = cdforms(&["eval", "--expr", s(&e)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "identity: a -> 1, abar -> 1, b -> 0
p -> 0, q -> 0, r -> e[1,x]*e[2,y]
(0, 0, dx^dy)
(abar*da, abar*db)
-x*dx^dy
"
    );
}

#[test]
fn undefined_names_are_lookup_errors() {
    let dir = TempDir::new().unwrap();
    let e = put(&dir, "e", "ring Q\nvars x\neval bracket f f\n");
    let out = cdforms(&["eval", "--expr", s(&e)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no form named `f`"), "{}", stderr(&out));
}

#[test]
fn export_then_import_is_identity() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("d.cfg");
    cdforms(&["export", "--file", s(&f)]);
    let out = cdforms(&["import", "--file", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), fs::read_to_string(&f).unwrap());
}

#[test]
fn relabeled_group_round_trips() {
    let dir = TempDir::new().unwrap();
    let src = put(&dir, "h.cfg", &(HEIS_RELABELED.to_string() + "action conjugation(Aff1)\nsuite bracket-laws\n"));
    let f = dir.path().join("out.cfg");
    assert!(cdforms(&["export", "--config", s(&src), "--file", s(&f)]).status.success());
    let exported = fs::read_to_string(&f).unwrap();
    let out = cdforms(&["import", "--file", s(&f)]);
    assert_eq!(stdout(&out), exported);
    assert!(exported.contains("comul w w_1 + w_2 + u_1*v_2"));
    let out = cdforms(&["verify", "--config", s(&f), "--suite", "hopf-axioms"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn format_errors_name_the_problem() {
    let dir = TempDir::new().unwrap();
    let f = put(&dir, "u.cfg", "version 1\nring Q\nwibble 3\n");
    let out = cdforms(&["import", "--file", s(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown field `wibble`"));

    let f = put(&dir, "v.cfg", "version 7\n");
    let out = cdforms(&["import", "--file", s(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("version `7`"));

    let f = put(&dir, "ok.cfg", "version 1\n");
    assert_eq!(cdforms(&["verify", "--config", s(&f), "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(cdforms(&["verify"]).status.code(), Some(2));
}
