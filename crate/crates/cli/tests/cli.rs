use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use zinbiel_cli::format;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zinbiel")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

struct Scratch(TempDir);

impl Scratch {
    fn new() -> Self {
        Self(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_string_lossy().into_owned()
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.path(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    /// Runs with `--out` and returns the written file.
    fn out(&self, name: &str, args: &[&str]) -> String {
        let p = self.path(name);
        let mut full = vec!["--out", p.as_str()];
        full.extend_from_slice(args);
        let o = run(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        p
    }
}

fn read(p: &str) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn example_algebra_passes() {
    let o = run(&["check", "zinbiel", &fixture("nilpotent_plane.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["status"], "pass");
}

#[test]
fn failing_checks_exit_one_with_located_residuals() {
    let o = run(&["check", "zinbiel", &fixture("idempotent_line.json")]);
    assert_eq!(code(&o), 1);
    let v = &json(&o)["checks"][0]["conditions"][0]["violations"][0];
    assert_eq!(v["tuple"], serde_json::json!([0, 0, 0]));
    assert_eq!(v["residual"], serde_json::json!(["-1"]));
}

#[test]
fn input_errors_exit_two() {
    let s = Scratch::new();
    let good = read(&fixture("nilpotent_plane.json"));
    let bad = s.write("bad.json", &good.replace("\"value\": \"1\"", "\"value\": \"1/0\""));
    let o = run(&["check", "zinbiel", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed rational"));

    let far = s.write("far.json", &good.replace("[0, 0, 1]", "[5, 0, 1]"));
    let o = run(&["check", "zinbiel", &far]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("index out of range") && err.contains("tensors.product[0]"), "{err}");

    assert_eq!(code(&run(&["check", "zinbiel", &s.path("missing.json")])), 2);
    assert_eq!(code(&run(&["check", "zinf", &fixture("nilpotent_plane.json")])), 2);
    assert_eq!(code(&run(&["cohomology", "--degree", "4", &fixture("nilpotent_plane.json")])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn cohomology_of_the_example() {
    let o = run(&["cohomology", "--degree", "3", &fixture("nilpotent_plane.json"), "regular"]);
    assert_eq!(code(&o), 0);
    let d = &json(&o)["derived"];
    assert_eq!((d["cocycles"].as_u64(), d["coboundaries"].as_u64(), d["cohomology"].as_u64()), (Some(6), Some(5), Some(1)));
    let o = run(&["cohomology", "--degree", "2", &fixture("nilpotent_plane.json"), "regular"]);
    let d = &json(&o)["derived"];
    assert_eq!((d["cocycles"].as_u64(), d["coboundaries"].as_u64(), d["cohomology"].as_u64()), (Some(3), Some(2), Some(1)));
    let o = run(&["cohomology", "--degree", "2", &fixture("nilpotent_plane.json"), "zero:1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn class_is_independent_of_sections() {
    let s = Scratch::new();
    let ext = fixture("top_extension_plane.json");
    let p = s.out("pivot.json", &["xi", &ext, "--sections", "pivot"]);
    let q = s.out("shifted.json", &["xi", &ext, "--sections", "shifted"]);
    let o = run(&["same-class", &ext, &p, &q]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["derived"]["same_class"], true);

    let zero = s.write(
        "zero.json",
        r#"{ "kind": "cochain", "dims": { "Z": 1, "M": 1 }, "degree": 3, "tensors": { "map": [] } }"#,
    );
    let o = run(&["same-class", &ext, &p, &zero]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["derived"]["same_class"], false);
}

fn construct_all(s: &Scratch) -> Vec<String> {
    let alg = s.out("sh.json", &["construct", "shuffle", "3"]);
    let bim = s.out("reg.json", &["construct", "regular-bimodule", &alg]);
    let theta = s.out("theta.json", &["construct", "random-cocycle", &bim, "--degree", "3", "--seed", "11"]);
    let l = s.out("l.json", &["construct", "skeletal", &bim, &theta]);
    let strict = s.out("strict.json", &["construct", "strict", &fixture("top_extension_plane.json")]);
    let crossed = s.out("crossed.json", &["construct", "crossed", &strict]);
    let sym = s.out("sym.json", &["convert", "symmetrize", &l]);
    let dend = s.out("dend.json", &["convert", "dendrify", &l]);
    let tot = s.out("tot.json", &["convert", "totalize", &dend]);
    let t = s.out("t.json", &["convert", "T", &l]);
    vec![alg, bim, theta, l, strict, crossed, sym, dend, tot, t]
}

#[test]
fn emitted_files_parse_back_to_themselves() {
    let s = Scratch::new();
    let mut files = construct_all(&s);
    files.extend(["nilpotent_plane.json", "idempotent_line.json", "top_extension_plane.json"].map(fixture));
    for p in files {
        let first = format::read(&p).unwrap();
        let emitted = first.to_json();
        let second = format::parse_str(&p, &emitted).unwrap();
        assert_eq!(second, first, "{p}");
        assert_eq!(second.to_json(), emitted, "{p}");
    }
}

#[test]
fn functors_round_trip() {
    let s = Scratch::new();
    let files = construct_all(&s);
    let back = s.out("back.json", &["convert", "S", &files[9]]);
    assert_eq!(read(&back), read(&files[3]));
    let o = run(&["check", "zinbiel2", &files[9]]);
    assert_eq!(code(&o), 0);
    let strict = files[4].clone();
    let again = s.out("again.json", &["construct", "strict", &files[5]]);
    assert_eq!(read(&again), read(&strict));
}

#[test]
fn reruns_are_byte_identical() {
    let a = Scratch::new();
    let b = Scratch::new();
    let fa = construct_all(&a);
    let fb = construct_all(&b);
    for (x, y) in fa.iter().zip(&fb) {
        assert_eq!(read(x), read(y), "{x}");
    }
    let seeded = serde_json::from_str::<Value>(&read(&fa[2])).unwrap();
    assert_eq!(seeded["seed"], 11);
    for args in [
        vec!["check", "zinf", fa[3].as_str()],
        vec!["check", "cinf", fa[6].as_str()],
        vec!["xi", &fixture("top_extension_plane.json")],
        vec!["cohomology", "--degree", "3", fa[1].as_str()],
    ]
    .iter()
    {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn operator_induced_structure() {
    let s = Scratch::new();
    let rb = fixture("rb_homotopy.json");
    assert_eq!(code(&run(&["check", "rb", &rb])), 0);
    let l = s.out("l.json", &["convert", "rb-zinf", &rb]);
    let induced = format::read(&l).unwrap();
    let l3: Vec<_> = induced.to_file().tensors["l3"].iter().map(|e| (e.indices.clone(), e.value.0.to_string())).collect();
    assert_eq!(l3, vec![(vec![0, 0, 0, 0], "9".to_string())]);
    let report = json(&run(&["check", "zinf", &l]));
    for c in report["checks"][0]["conditions"].as_array().unwrap() {
        if c["id"] != "f" {
            assert_eq!(c["status"], "pass", "{c}");
        }
    }
    // R₁ = 1 breaks the operator axioms, so the conversion refuses it
    let bad = s.write("id.json", &read(&rb).replace("\"r1\": []", "\"r1\": [{\"indices\": [0, 0], \"value\": \"1\"}]"));
    assert_eq!(code(&run(&["check", "rb", &bad])), 1);
    assert_eq!(code(&run(&["convert", "rb-zinf", &bad])), 1);
}
