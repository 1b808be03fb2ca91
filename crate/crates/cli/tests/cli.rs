use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn stratlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stratlink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn corpus_file(dir: &TempDir, name: &str) -> PathBuf {
    let out = stratlink(&["corpus", name]);
    assert!(out.status.success());
    write(dir, &format!("{}.txt", name.replace([':', ','], "_")), &stdout(&out))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn show_cone() {
    let dir = TempDir::new().unwrap();
    let cone = corpus_file(&dir, "cone_on_circle");
    let out = stratlink(&["show", p(&cone)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "4 vertices, 6 edges, 3 triangles, χ=1"
    );
}

#[test]
fn show_empty_complex() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "empty.txt", "poset\np\n");
    let out = stratlink(&["show", p(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("0 simplices"));
}

#[test]
fn parse_errors_exit_2_with_line() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", "poset\n0\n1\nvertex a 0\nvertex b 9\n");
    let out = stratlink(&["show", p(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
    let missing = stratlink(&["show", "/nonexistent/file"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn printed_files_round_trip() {
    let dir = TempDir::new().unwrap();
    for name in ["suspension", "torus", "pinched_torus", "stratified_simplex:0,1,1,2"] {
        let f = corpus_file(&dir, name);
        let again = stratlink(&["sd", p(&f), "--count", "0"]);
        assert_eq!(stdout(&again), fs::read_to_string(&f).unwrap(), "{name}");
    }
    let cells = stratlink(&["corpus", "pinched_torus", "--cells"]);
    let f = write(&dir, "cells.txt", &stdout(&cells));
    let again = stratlink(&["sd", p(&f), "--count", "0"]);
    assert_eq!(stdout(&again), stdout(&cells));
}

#[test]
fn sd_of_edge_is_path() {
    let dir = TempDir::new().unwrap();
    let edge = corpus_file(&dir, "stratified_simplex:0,1");
    let out = stratlink(&["sd", p(&edge)]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("simplex")).count(), 2);
    assert_eq!(text.lines().filter(|l| l.starts_with("vertex")).count(), 3);
}

#[test]
fn holink_examples() {
    let dir = TempDir::new().unwrap();
    let cone = corpus_file(&dir, "cone_on_circle");
    let out = stratlink(&["holink", p(&cone), "--flag", "a,b"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(str::to_string)
        .collect();
    assert_eq!(lines, ["H_0: Z", "H_1: Z"]);

    let edge = corpus_file(&dir, "stratified_simplex:0,1");
    let out = stratlink(&["holink", p(&edge), "--flag", "0,1"]);
    assert!(stdout(&out).ends_with("H_0: Z\n"));

    let bad = stratlink(&["holink", p(&edge), "--flag", "1,0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not regular"));
}

#[test]
fn link_and_neighborhood_files_parse() {
    let dir = TempDir::new().unwrap();
    let cone = corpus_file(&dir, "cone_on_circle");
    for cmd in ["link", "neighborhood"] {
        let out = stratlink(&[cmd, p(&cone), "--flag", "a,b"]);
        assert_eq!(out.status.code(), Some(0));
        let f = write(&dir, "sub.txt", &stdout(&out));
        assert_eq!(stratlink(&["show", p(&f)]).status.code(), Some(0));
    }
}

#[test]
fn homology_coefficients() {
    let dir = TempDir::new().unwrap();
    let rp2 = corpus_file(&dir, "projective_plane");
    let z = stdout(&stratlink(&["homology", p(&rp2)]));
    assert_eq!(z, "H_0: Z\nH_1: Z/2\n");
    let z2 = stdout(&stratlink(&["homology", p(&rp2), "--coeff", "mod:2"]));
    assert_eq!(z2, "H_0: Z/2\nH_1: Z/2\nH_2: Z/2\n");
    let q = stdout(&stratlink(&["homology", p(&rp2), "--coeff", "rat"]));
    assert_eq!(q, "H_0: Q\n");
    let bad = stratlink(&["homology", p(&rp2), "--coeff", "mod:6"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_a_passes_on_corpus() {
    let dir = TempDir::new().unwrap();
    for name in ["cone_on_circle", "suspension", "pinched_torus"] {
        let f = corpus_file(&dir, name);
        let out = stratlink(&["verify-a", p(&f)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
    let f = corpus_file(&dir, "cone_on_circle");
    let out = stratlink(&["verify-a", p(&f), "--flag", "a"]);
    assert!(stdout(&out).ends_with("1/1 flags pass\n"));
}

const EDGE: &str = "poset\n0\n1\nrel 0 1\nvertex u 0\nvertex w 1\nsimplex u w\n";

#[test]
fn verify_b_edges_along_vertex() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.txt", EDGE);
    let b = write(&dir, "b.txt", EDGE);
    let a = write(&dir, "a.txt", "poset\n0\n1\nrel 0 1\nvertex u 0\n");
    let map = write(&dir, "map.txt", "u u\n");
    let out = stratlink(&["verify-b", p(&x), p(&b), "--sub", p(&a), "--map", p(&map)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("3/3 flags pass"));
}

#[test]
fn verify_b_rejects_bad_maps() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.txt", EDGE);
    let b = write(&dir, "b.txt", EDGE);
    let a = write(&dir, "a.txt", "poset\n0\n1\nrel 0 1\nvertex u 0\n");
    let map = write(&dir, "map.txt", "u nowhere\n");
    let out = stratlink(&["verify-b", p(&x), p(&b), "--sub", p(&a), "--map", p(&map)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a simplicial embedding"));
    let relabel = write(&dir, "map2.txt", "u w\n");
    let out = stratlink(&["verify-b", p(&x), p(&b), "--sub", p(&a), "--map", p(&relabel)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_b_circle_through_vertex() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.txt", EDGE);
    let circle = "poset\n0\n1\nrel 0 1\nvertex u 0\nvertex p 1\nvertex q 1\nsimplex u p\nsimplex p q\nsimplex u q\n";
    let b = write(&dir, "b.txt", circle);
    let a = write(&dir, "a.txt", "poset\n0\n1\nrel 0 1\nvertex u 0\n");
    let map = write(&dir, "map.txt", "u u\n");
    let out = stratlink(&["verify-b", p(&x), p(&b), "--sub", p(&a), "--map", p(&map)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn geom_commands() {
    let run = |args: &[&str]| {
        let out = stratlink(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        stdout(&out).trim().to_string()
    };
    let x = ["--flag", "0,1,2", "--point", "1/2,1/4,1/4"];
    let with = |cmd: &str, extra: &[&str]| {
        let mut v = vec!["geom", cmd];
        v.extend_from_slice(&x);
        v.extend_from_slice(extra);
        run(&v)
    };
    assert_eq!(with("in-hood", &["--p", "1"]), "true");
    assert_eq!(with("stratum", &[]), "2");
    assert_eq!(with("s", &["--p", "1", "--mode", "not_lt"]), "1/2");
    assert_eq!(with("t", &["--p", "1"]), "1/2");
    assert_eq!(with("rho", &["--p", "1"]), "(2/3,1/3,0)");
    assert_eq!(with("reparam", &["--p", "1", "--phi", "1/3"]), "(1/2,3/8,1/8)");
    assert_eq!(run(&["geom", "barycenter", "--flag", "0,1,2"]), "(1/2,1/4,1/4)");
    assert_eq!(
        run(&["geom", "psi", "--flag", "0,1", "--chain-of", "0|0,1", "--weights", "1/2,1/2"]),
        "(3/4,1/4)"
    );
    let bad = stratlink(&["geom", "in-hood", "--flag", "0,1", "--point", "1/2,1/3", "--p", "0"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn failed_checks_exit_1() {
    let out = stratlink(&["geom", "in-hood", "--flag", "0,1", "--point", "1/4,3/4", "--p", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn unknown_flag_label_is_input_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e.txt", EDGE);
    assert_eq!(stratlink(&["verify-a", p(&f), "--flag", "7"]).status.code(), Some(2));
}
