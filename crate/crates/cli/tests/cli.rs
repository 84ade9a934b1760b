use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rloop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    (serde_json::from_slice(&o.stdout).expect("valid json"), o.status.code().unwrap())
}

const BAD: &str = "elements: a b c\ntable:\na b c\nb a c\nc c a\n";

#[test]
fn analyze_example() {
    let f = data("order5.loop");
    let o = run(&["analyze", f.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    for needle in [
        "G_S order 12, isomorphic to A4",
        "G_S transitive on S\\{e}: yes",
        "Aut = {I,(2 3),(4 5),(2 3)(4 5)} (order 4)",
        "TAut order 24, isomorphic to S4",
        "loop: no",
        "f(2,5) = (2 3 5)",
        "f(4,5) = (2 3)(4 5)",
        "twisted right gyrogroup: yes",
        "eta = ((234),(243)) ((235),(253)) ((245),(345)) ((254),(354)) ((24)(35),(25)(34))",
    ] {
        assert!(out.contains(needle), "missing `{needle}` in\n{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn analyze_json_twin() {
    let f = data("order5.loop");
    let (v, code) = json(&["analyze", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["gs"]["order"], 12);
    assert_eq!(v["gs"]["name"], "A4");
    assert_eq!(v["aut"]["order"], 4);
    assert_eq!(v["taut"]["order"], 24);
    assert_eq!(v["taut"]["exact"], true);
    assert_eq!(v["twisted_right_gyrogroup"], true);
    assert_eq!(v["inner_mappings"][1][4], "(2 3 5)");
}

#[test]
fn malformed_table_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.loop");
    std::fs::write(&p, BAD).unwrap();
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("column c not bijective"), "{err}");

    let (v, code) = json(&["analyze", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "input");

    let o = run(&["analyze", "/nonexistent/file.loop"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_of_order_three() {
    let o = run(&["enumerate", "3", "--census"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("total right loops: 4\n"));
    let (v, _) = json(&["enumerate", "3", "--census"]);
    assert_eq!(v["total"], 4);
}

#[test]
fn enumerate_with_filter_and_limit() {
    let (v, code) = json(&["enumerate", "4", "--filter", "trg,aip"]);
    assert_eq!(code, 0);
    let all = v["count"].as_u64().unwrap();
    assert!(all > 0);
    let (v, _) = json(&["enumerate", "4", "--filter", "trg,aip", "--limit", "1"]);
    assert_eq!(v["count"], 1);
    let o = run(&["enumerate", "3", "--filter", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn inner_sigma_and_eta() {
    let f = data("order5.loop");
    let f = f.to_str().unwrap();
    assert_eq!(stdout(&run(&["inner", f, "5", "3"])), "f(5,3) = (2 3 5)\n");
    assert_eq!(
        stdout(&run(&["sigma", f, "2", "(2 3 4)"])),
        "sigma_2((2 3 4)) = (2 4 3)\n"
    );
    let o = run(&["eta", f]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("eta = ((234),(243))"));
}

#[test]
fn eta_on_a_non_trg_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.loop");
    // unique inverses, but f(y',y) = I fails
    let text = stdout(&run(&["enumerate", "4", "--filter", "unique-inverses", "--limit", "400"]));
    let mut found = None;
    for block in text.split("\n\n").filter(|b| b.contains("table:")) {
        std::fs::write(&p, block).unwrap();
        let (v, _) = json(&["analyze", p.to_str().unwrap()]);
        if v["inverse_inner_identity"] == false {
            found = Some(block.to_string());
            break;
        }
    }
    assert!(found.is_some(), "no order-4 table without f(y',y) = I");
    let o = run(&["eta", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not a twisted right gyrogroup"));
}

#[test]
fn extension_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.grp");
    let f = data("order5.loop");
    let o = run(&["extend", f.to_str().unwrap(), "-o", g.to_str().unwrap()]);
    assert!(o.status.success());
    let (v, code) = json(&["validate", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "group");
    assert_eq!(v["order"], 60);

    let s: Vec<&str> = vec!["I.1", "I.2", "I.3", "I.4", "I.5"];
    let h = "I.1 (345).1 (354).1 (23)(45).1 (234).1 (235).1 (243).1 (245).1 (24)(35).1 (253).1 (254).1 (25)(34).1";
    let mut args = vec!["transversal", g.to_str().unwrap(), "--subgroup", h, "--transversal"];
    args.extend(s);
    let o = run(&args);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("classification: twisted-only"), "{out}");
    assert!(out.contains("induced with eta"), "{out}");
}

#[test]
fn twisted_subgroup_and_equivalence() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("s3.grp");
    std::fs::write(
        &p,
        "type: group\nelements: e a b s t u\ntable:\n\
         e a b s t u\na b e t u s\nb e a u s t\ns u t e b a\nt s u a e b\nu t s b a e\n",
    )
    .unwrap();
    let p = p.to_str().unwrap();
    let o = run(&["twisted-subgroup", p, "--subset", "e s t u"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["twisted-subgroup", p, "--subset", "e a"]);
    assert_eq!(o.status.code(), Some(1));

    let f = data("order5.loop");
    let o = run(&["equivalence", f.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn projection_and_deformation() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p5.loop");
    let o = run(&["project", "5"]);
    std::fs::write(&p, o.stdout).unwrap();
    let (v, code) = json(&["deform", p.to_str().unwrap(), "--rho", "(x1 x2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["aut_order"], 4);
    assert_eq!(v["taut_order"], 24);
    assert_eq!(v["aut"], "{I,(x1 x2),(x3 x4),(x1 x2)(x3 x4)}");
}

#[test]
fn output_is_deterministic() {
    let f = data("order5.loop");
    for args in [
        vec!["analyze", f.to_str().unwrap()],
        vec!["--json", "analyze", f.to_str().unwrap()],
        vec!["extend", f.to_str().unwrap()],
        vec!["enumerate", "4", "--census", "--up-to-iso"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}
