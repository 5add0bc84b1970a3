use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;
use predicates::prelude::*;

fn pythole() -> Command {
    Command::cargo_bin("pythole").unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn stdout_of(args: &[&str]) -> (Vec<u8>, i32) {
    let out = pythole().args(args).output().unwrap();
    (out.stdout, out.status.code().unwrap())
}

#[test]
fn fisher_table_golden() {
    pythole()
        .args(["fisher", "35"])
        .assert()
        .code(0)
        .stdout(golden("fisher_35.txt"));
    pythole()
        .args(["fisher", "35", "--format", "csv"])
        .assert()
        .code(0)
        .stdout(golden("fisher_35.csv"));
}

#[test]
fn triples_golden() {
    pythole()
        .args(["triples", "100", "--primitive-only", "--format", "csv"])
        .assert()
        .code(0)
        .stdout(golden("triples_100_primitive.csv"));
}

#[test]
fn embodiment_edge_list_golden() {
    pythole()
        .args(["embodiment", "3", "4", "5", "--emit-graph"])
        .assert()
        .code(0)
        .stdout(golden("embodiment_3_4_5.edges"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let runs: &[&[&str]] = &[
        &["fisher", "35", "--format", "json"],
        &["jaco", "60", "--census", "--format", "json"],
        &["setgraph", "5", "--verify", "--format", "json"],
        &[
            "embodiment",
            "20",
            "21",
            "29",
            "--verify",
            "--format",
            "json",
        ],
        &["triples", "300", "--format", "csv"],
        &["setgraph", "6", "--emit-graph"],
    ];
    for args in runs {
        assert_eq!(stdout_of(args), stdout_of(args), "{args:?}");
    }
}

#[test]
fn holes_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = dir.path().join("k3.txt");
    fs::write(&k3, "# triangle\n1 2\n2 3\n\n3 1\n").unwrap();
    let out = pythole()
        .args(["holes", k3.to_str().unwrap(), "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["h"].as_u64(), v["h_p"].as_u64()), (Some(1), Some(0)));

    let emb = dir.path().join("emb.txt");
    fs::write(&emb, golden("embodiment_3_4_5.edges")).unwrap();
    let out = pythole()
        .args(["holes", emb.to_str().unwrap(), "--format", "json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["h"].as_u64(), v["h_p"].as_u64()), (Some(5), Some(2)));

    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    pythole()
        .args(["holes", empty.to_str().unwrap(), "--format", "csv"])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("h,0\nh_p,0\n"));
}

#[test]
fn holes_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n2 x\n").unwrap();
    pythole()
        .args(["holes", bad.to_str().unwrap()])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("line 2"));
    let looped = dir.path().join("loop.txt");
    fs::write(&looped, "1 2\n4 4\n").unwrap();
    pythole()
        .args(["holes", looped.to_str().unwrap()])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("self-loop (4, 4)"));
    pythole()
        .args(["holes", dir.path().join("missing.txt").to_str().unwrap()])
        .assert()
        .code(2);
}

#[test]
fn embodiment_exit_codes() {
    pythole()
        .args(["embodiment", "3", "4", "5", "--verify"])
        .assert()
        .code(0);
    pythole()
        .args(["embodiment", "2", "3", "4", "--verify"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("2^2 + 3^2 != 4^2"));
    pythole()
        .args(["embodiment", "0", "4", "5"])
        .assert()
        .code(2);
    let out = pythole()
        .args(["embodiment", "6", "8", "10", "--emit-graph"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 21);
}

#[test]
fn setgraph_commands() {
    pythole()
        .args(["setgraph", "3", "--verify"])
        .assert()
        .code(0);
    pythole().args(["setgraph", "1"]).assert().code(2);
    pythole().args(["setgraph", "17"]).assert().code(2);
    pythole()
        .args(["setgraph", "13", "--emit-graph"])
        .assert()
        .code(2);
    let out = pythole()
        .args(["setgraph", "4", "--emit-graph"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with('#')).count(), 15);
    assert!(text.contains("# 15 {a1,a2,a3,a4}\n"));
    // the 2n - 2 count fails from n = 4
    pythole()
        .args(["setgraph", "4", "--verify"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains(
            "claim failed: largest cliques = 2n - 2",
        ));
}

#[test]
fn jaco_commands() {
    pythole()
        .args(["jaco", "7", "--census", "--format", "csv"])
        .assert()
        .code(0)
        .stdout(predicate::str::starts_with(
            "u,v,w,deg_u,deg_v,deg_w,type\n\n",
        ));
    let out = pythole()
        .args(["jaco", "16", "--census", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["type_counts"]["t1"].as_u64(), Some(2));
    assert_eq!(v["holes"][1]["vertices"], serde_json::json!([6, 8, 10]));
    pythole().args(["jaco", "0"]).assert().code(2);
    pythole()
        .args(["jaco", "20001", "--census"])
        .assert()
        .code(2);
    pythole()
        .args(["jaco", "5001", "--emit-graph"])
        .assert()
        .code(2);
    pythole()
        .args(["jaco", "5", "--emit-graph"])
        .assert()
        .code(0)
        .stdout("1 2\n2 3\n3 4\n3 5\n4 5\n");
}

#[test]
fn fisher_ceiling() {
    pythole().args(["fisher", "0"]).assert().code(2);
    pythole().args(["fisher", "501"]).assert().code(2);
}

#[test]
fn fisher_reference_fault_injection() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = golden("fisher_35.csv");
    // row 20 claims h = 165 instead of 164
    text = text.replace("\n20,8,12,164,2\n", "\n20,8,12,165,2\n");
    let path = dir.path().join("reference.csv");
    fs::write(&path, &text).unwrap();
    pythole()
        .args(["fisher", "35", "--reference", path.to_str().unwrap()])
        .assert()
        .code(1)
        .stderr("claim failed: fisher table row 20 column h: reference 165, computed 164\n");

    fs::write(&path, "i,d_minus,d_plus,h,h_p_t1\n1,0,1\n").unwrap();
    pythole()
        .args(["fisher", "35", "--reference", path.to_str().unwrap()])
        .assert()
        .code(2);
}

#[test]
fn triples_commands() {
    pythole()
        .args(["triples", "4"])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("(").not());
    let out = pythole()
        .args(["triples", "13", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "a,b,c,primitive,root,scale,type\n\
         3,4,5,true,\"(3, 4, 5)\",1,t1\n\
         6,8,10,false,\"(3, 4, 5)\",2,t1\n\
         5,12,13,true,\"(5, 12, 13)\",1,e1\n"
    );
    pythole().args(["triples", "4000000000"]).assert().code(2);
    pythole().args(["triples", "-3"]).assert().code(2);
}
