use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hthresh::format::parse_partitioned;
use hthresh::{product_chain, Digraph, FactorSequence, PartitionedGraph};

const H0: &str = "2\n1 1\n1 2\n";
const C4: &str = "Cl\n";
const K4: &str = "C~\n";
const C5: &str = "DqK\n";
const BULL: &str = "DBk\n";
const P4: &str = "Ch\n";

fn file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hthresh"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn product_of_two_vertices() {
    let h = file("h0.txt", H0);
    let k1 = file("k1.pg", "@\n2\n1\n");
    let out = stdout(&["product", k1.to_str().unwrap(), k1.to_str().unwrap(), "--digraph", h.to_str().unwrap()], None);
    assert_eq!(out, "A_\n2\n1 1\n");
}

#[test]
fn mismatched_class_count_exits_3() {
    let h = file("h0-mismatch.txt", H0);
    let a = file("k1-two.pg", "@\n2\n1\n");
    let b = file("k1-three.pg", "@\n3\n1\n");
    let out = run(&["product", a.to_str().unwrap(), b.to_str().unwrap(), "--digraph", h.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["recognize2", "-"], Some("junk\n")).status.code(), Some(2));
    let h = file("h-dup.txt", "2\n1 2\n1 2\n");
    let k1 = file("k1-dup.pg", "@\n2\n1\n");
    let out = run(&["product", k1.to_str().unwrap(), k1.to_str().unwrap(), "--digraph", h.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["mine", "--max-n", "8"], None).status.code(), Some(2));
}

#[test]
fn chained_products_match_library() {
    let h = file("h0-chain.txt", H0);
    let a = file("chain-a.pg", "@\n2\n1\n");
    let b = file("chain-b.pg", "@\n2\n2\n");
    let hp = h.to_str().unwrap();
    let ab = stdout(&["product", a.to_str().unwrap(), b.to_str().unwrap(), "--digraph", hp], None);
    let ab_path = file("chain-ab.pg", &ab);
    let abc = stdout(&["product", ab_path.to_str().unwrap(), a.to_str().unwrap(), "--digraph", hp], None);
    let d = Digraph::from_arcs(2, &[(0, 0), (0, 1)]).unwrap();
    let one = |c| PartitionedGraph::one_vertex(2, c).unwrap();
    let expected = product_chain(&FactorSequence::new(d, vec![one(1), one(2), one(1)]).unwrap());
    assert_eq!(parse_partitioned(&abc).unwrap(), expected);
}

#[test]
fn recognize2_labels() {
    assert_eq!(stdout(&["recognize2", "-"], Some(C4)), "2 difference\n");
    assert_eq!(stdout(&["recognize2", "-"], Some(K4)), "1\n");
    assert_eq!(stdout(&["recognize2", "-"], Some(BULL)), ">2\n");
    assert_eq!(stdout(&["recognize2", "-"], Some(C5)), ">2\n");
}

#[test]
fn width_values_and_bound() {
    assert!(stdout(&["width", "-"], Some(K4)).starts_with("1\n"));
    assert!(stdout(&["width", "-"], Some(P4)).starts_with("2\n"));
    assert!(stdout(&["width", "-"], Some(C5)).starts_with("3\n"));
    let out = run(&["width", "--max-k", "2", "-"], Some(C5));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), ">2\n");
}

#[test]
fn witnesses_verify() {
    for (name, g6) in [("c4", C4), ("k4", K4), ("c5", C5), ("bull", BULL), ("p4", P4)] {
        let g = file(&format!("{name}.g6"), g6);
        for cmd in ["width", "represent"] {
            let w = stdout(&[cmd, g.to_str().unwrap()], None);
            assert_eq!(stdout(&["verify", g.to_str().unwrap(), "-"], Some(&w)), "ok\n", "{name} {cmd}");
        }
    }
    let g = file("c4-fixed.g6", C4);
    let h = file("h-fixed.txt", "2\n1 2\n2 1\n");
    let w = stdout(&["represent", "--digraph", h.to_str().unwrap(), g.to_str().unwrap()], None);
    assert!(w.ends_with("sequence: 1 2 1 2\norder: 0 1 2 3\n"), "{w}");
    assert_eq!(stdout(&["verify", g.to_str().unwrap(), "-"], Some(&w)), "ok\n");
    let bad = file("c5-bad.g6", C5);
    let out = run(&["verify", bad.to_str().unwrap(), "-"], Some("1\n1 1\nsequence: 1 1 1 1 1\n"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn factorize_reports_factors_and_commutation() {
    let h = file("h0-fact.txt", H0);
    let t = file("fact.pg", "Bw\n2\n1 1 1\n");
    let out = stdout(&["factorize", t.to_str().unwrap(), "--digraph", h.to_str().unwrap(), "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
    assert_eq!(v["commutes"][0][1], true);
}

#[test]
fn mine_report_is_deterministic() {
    let a = stdout(&["mine", "--max-n", "5", "--jobs", "1", "--format", "json"], None);
    let b = stdout(&["mine", "--max-n", "5", "--jobs", "3", "--format", "json"], None);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["obstructions"].as_array().unwrap().len(), 8);
    assert_eq!(v["complement_classes"], 5);
}

#[test]
fn dot_labels_classes() {
    let out = stdout(&["--format", "dot", "width", "-"], Some(C4));
    assert!(out.starts_with("graph G {"));
    assert!(out.contains("[label=\"0:"));
    assert!(out.contains("digraph H {"));
}
