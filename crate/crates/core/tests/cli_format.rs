use std::io::Write;

use hopfkit::cli::run;
use hopfkit::format::Workspace;
use hopfkit::gallery;
use hopfkit::kernel::Field;
use hopfkit::report::Report;
use hopfkit::yd;

fn hopfkit(args: &[&str]) -> (i32, String) {
    run(std::iter::once("hopfkit").chain(args.iter().copied()))
}

fn temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn exported(name: &str) -> tempfile::NamedTempFile {
    let (code, text) = hopfkit(&["gallery", "export", name]);
    assert_eq!(code, 0, "{text}");
    temp(&text)
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn export_then_load_is_the_identity() {
    for f in [Field::Rationals, Field::prime(3).unwrap(), Field::prime(5).unwrap()] {
        for e in gallery::entries() {
            let w = gallery::build(e.name, f).unwrap();
            let back = Workspace::load(&w.to_json(), None).unwrap();
            assert_eq!(back, w, "{} over {f:?}", e.name);
        }
    }
}

#[test]
fn every_export_verifies() {
    for e in gallery::entries() {
        let file = exported(e.name);
        let (code, text) = hopfkit(&["verify", path(&file)]);
        assert_eq!(code, 0, "{}\n{text}", e.name);
    }
    let (code, text) = hopfkit(&["gallery", "list"]);
    assert_eq!(code, 0);
    assert!(text.contains("kS3_dual") && text.contains("h4_delta_trivial"));
}

#[test]
fn field_override_reinterprets_coefficients() {
    let file = exported("kC2_dual");
    let w = Workspace::load(&std::fs::read_to_string(file.path()).unwrap(), Some(Field::prime(2).unwrap())).unwrap();
    assert_eq!(w.field, Field::prime(2).unwrap());
    let (code, _) = hopfkit(&["--field", "gf:7", "verify", "--hopf", path(&file)]);
    assert_eq!(code, 0);
}

#[test]
fn integer_and_fraction_coefficients_parse() {
    let text = r#"{"name": "A", "kind": "algebra", "basis": ["1", "e"],
        "mult": [[0,0,0,1],[0,1,1,"1"],[1,0,1,1],[1,1,1,"2/2"]], "unit": [1, 0]}"#;
    let w = Workspace::load(text, None).unwrap();
    assert_eq!(w.items.len(), 1);
    let (code, out) = hopfkit(&["verify", path(&temp(text))]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn malformed_files_exit_2_with_a_location() {
    let cases = [
        ("{", "line 1"),
        (r#"{"field": "Q", "structures": [{"name": "A", "kind": "algebra", "basis": ["1"], "mult": [[0,0,5,"1"]], "unit": ["1"]}]}"#, "mult[0]"),
        (r#"{"field": "Q", "structures": [{"name": "A", "kind": "algebra", "basis": ["1"], "mult": [[0,0,0,"x"]], "unit": ["1"]}]}"#, "mult[0]"),
        (r#"{"field": "Q", "structures": [{"name": "A", "kind": "algebra", "basis": ["1"], "mult": [[0,0,0,"1"]], "unit": ["1", "0"]}]}"#, "unit"),
        (r#"{"field": "Q", "structures": [{"name": "A", "kind": "algebra", "basis": ["1"], "mult": [], "unit": ["1"], "colour": 1}]}"#, "colour"),
        (r#"{"field": "Q", "structures": [{"name": "A", "kind": "sheaf"}]}"#, "sheaf"),
    ];
    for (text, needle) in cases {
        let (code, out) = hopfkit(&["verify", path(&temp(text))]);
        assert_eq!(code, 2, "{text}\n{out}");
        assert!(out.contains(needle), "{text}\n{out}");
        assert!(Workspace::load(text, None).is_err());
    }
}

#[test]
fn unknown_references_exit_2() {
    let text = r#"{"field": "Q", "structures": [{"name": "A", "kind": "comodule_algebra", "over": "H",
        "basis": ["1"], "mult": [[0,0,0,"1"]], "unit": ["1"], "coaction": [[0,0,0,"1"]]}]}"#;
    let (code, out) = hopfkit(&["verify", path(&temp(text))]);
    assert_eq!(code, 2);
    assert!(out.contains("`H`"), "{out}");
    let file = exported("kC2");
    assert_eq!(hopfkit(&["verify", "--name", "nope", path(&file)]).0, 2);
    assert_eq!(hopfkit(&["gallery", "export", "nope"]).0, 2);
    assert_eq!(hopfkit(&["verify", "/nonexistent/file.json"]).0, 2);
    assert_eq!(hopfkit(&["frobnicate"]).0, 2);
}

#[test]
fn antipode_is_solved_when_absent() {
    let file = exported("H4");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(file.path()).unwrap()).unwrap();
    let s = &mut v["structures"][0];
    s.as_object_mut().unwrap().remove("antipode");
    let bare = temp(&v.to_string());
    let (code, out) = hopfkit(&["solve-antipode", path(&bare)]);
    assert_eq!(code, 0, "{out}");
    let w = Workspace::load(&v.to_string(), None).unwrap();
    assert_eq!(w.hopf("H4").unwrap(), &gallery::sweedler_h4(Field::Rationals).unwrap());
}

#[test]
fn failing_checks_exit_1() {
    // kC2 with a wrong antipode
    let file = exported("kC2");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(file.path()).unwrap()).unwrap();
    v["structures"][0]["antipode"] = serde_json::json!([[0, 0, "1"], [1, 1, "2"]]);
    let (code, out) = hopfkit(&["verify", "--hopf", path(&temp(&v.to_string()))]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("FAIL"));
    // no total integral over GF(2)
    let file = exported("kc2_dual_coalgebra");
    let (code, _) = hopfkit(&["--field", "gf:2", "dk", "solve-integral", "--total", "--datum", path(&file)]);
    assert_eq!(code, 1);
    let (code, _) = hopfkit(&["--field", "gf:3", "dk", "solve-integral", "--total", "--datum", path(&file)]);
    assert_eq!(code, 0);
}

#[test]
fn subcommands_run_on_gallery_data() {
    for name in ["comatrix2", "kx_c2", "h4_regular"] {
        let file = exported(name);
        for args in [
            vec!["dk", "verify", "--datum"],
            vec!["dk", "smash", "--datum"],
            vec!["dk", "solve-integral", "--datum"],
            vec!["dk", "lambda", "--module", "CA", "--datum"],
        ] {
            let mut a = args.clone();
            a.push(path(&file));
            let (code, out) = hopfkit(&a);
            assert_eq!(code, 0, "{name} {args:?}\n{out}");
        }
    }
    for name in ["kc2_delta_trivial", "h4_delta_trivial", "k_trivial"] {
        let file = exported(name);
        for sub in ["verify", "verma", "coinvariants", "galois-check", "affineness"] {
            let (code, out) = hopfkit(&["yd", sub, "--ha", path(&file)]);
            assert_eq!(code, 0, "{name} {sub}\n{out}");
        }
        let (code, out) = hopfkit(&["yd", "solve-quantum-integral", "--total", "--ha", path(&file)]);
        assert_eq!(code, 0, "{name}\n{out}");
        assert!(out.contains("gamma"));
    }
    let file = exported("h4_delta_delta");
    assert_eq!(hopfkit(&["yd", "solve-quantum-integral", "--total", "--ha", path(&file)]).0, 1);
    assert_eq!(hopfkit(&["yd", "solve-quantum-integral", "--ha", path(&file)]).0, 0);
}

#[test]
fn affineness_with_witness_file() {
    let file = exported("kc2_delta_trivial");
    let witnesses = r#"{"field": "Q", "structures": [
        {"name": "N", "kind": "module", "over": "B", "basis": ["n1", "n2"],
         "action": [[0,0,0,"1"],[1,0,1,"1"]]}]}"#;
    let w = temp(witnesses);
    let (code, out) = hopfkit(&["yd", "affineness", "--ha", path(&file), "--witnesses", path(&w)]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = hopfkit(&["yd", "affineness", "--ha", path(&exported("kc2_delta_delta"))]);
    assert_eq!(code, 1);
    assert!(out.contains("hypothesis (2) violated"), "{out}");
}

#[test]
fn json_report_round_trips() {
    let file = exported("kc2_delta_delta");
    let (code, out) = hopfkit(&["--format", "json", "yd", "galois-check", "--ha", path(&file)]);
    assert_eq!(code, 1);
    let parsed = Report::from_json(&out).unwrap();
    let d = gallery::yd_by_name("kc2_delta_delta", Field::Rationals).unwrap();
    let direct = yd::is_quantum_galois(&d).unwrap();
    assert_eq!(parsed, direct);
    assert_eq!(Report::from_json(&direct.to_json()).unwrap(), direct);
    let failing = parsed.first_failure().unwrap();
    assert!(failing.witness.is_some());
}

#[test]
fn documented_examples_verify() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples");
    let p = |f: &str| dir.join(f).to_string_lossy().into_owned();
    let cases = [
        vec!["verify", "--hopf"],
        vec!["dk", "verify", "--datum"],
        vec!["dk", "solve-integral", "--total", "--datum"],
        vec!["yd", "verify", "--ha"],
        vec!["yd", "galois-check", "--ha"],
    ];
    let files = ["kc2.json", "comatrix2.json", "comatrix2.json", "kc2_relative.json", "kc2_relative.json"];
    for (args, file) in cases.iter().zip(files) {
        let path = p(file);
        let mut a = args.clone();
        a.push(&path);
        let (code, out) = hopfkit(&a);
        assert_eq!(code, 0, "{args:?} {file}\n{out}");
    }
    // the bare kC2 example matches the gallery, antipode included
    let w = Workspace::load(&std::fs::read_to_string(p("kc2.json")).unwrap(), None).unwrap();
    assert_eq!(w.hopf("kC2").unwrap(), &gallery::hopf_by_name("kC2", Field::Rationals).unwrap());
}
