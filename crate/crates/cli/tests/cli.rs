use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypersym"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str], file: Option<&Path>) -> Output {
    let mut c = bin();
    c.args(args);
    if let Some(f) = file {
        c.arg(f);
    }
    c.output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_reports_weights_and_multitype() {
    let dir = TempDir::new().unwrap();
    let shear = write(&dir, "shear.txt", "# rotation model\nRe(z1*conj(z2)^2)\n");
    let out = run(&["check", "--json"], Some(&shear));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["model"]["weight"], "1/3,1/3");
    assert_eq!(v["model"]["multitype"], serde_json::json!(["3", "3"]));

    let quad = write(&dir, "quad.txt", "z1*conj(z1) + z2*conj(z2)\n");
    let v = json(&run(&["check", "--json"], Some(&quad)));
    assert_eq!(v["model"]["multitype"], serde_json::json!(["2", "2"]));

    let ph = write(&dir, "ph.txt", "z1*zb1 + z2*zb2 + z1^2 + zb1^2\n");
    let out = run(&["check"], Some(&ph));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pluriharmonic"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "z1*zb1 +\n  * z2\n");
    let out = run(&["check"], Some(&bad));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.txt:2:3"), "{err}");
    let out = run(&["aut"], Some(&dir.path().join("missing.txt")));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn aut_lists_generalized_rotation() {
    let dir = TempDir::new().unwrap();
    let shear = write(&dir, "shear.txt", "Re(z1*conj(z2)^2)\n");
    let v = json(&run(&["aut", "--json"], Some(&shear)));
    assert_eq!(v["algebra"]["g_c_dim"], 1);
    assert_eq!(v["algebra"]["w_member"], true);
    assert_eq!(v["algebra"]["e_member"], true);
    let gc: Vec<_> = v["algebra"]["components"].as_array().unwrap().iter().filter(|c| c["kind"] == "generalized_rotation" && c["dim"] == 1).collect();
    assert_eq!(gc.len(), 1);
    assert_eq!(gc[0]["basis"][0], "(i*z2^2)*d/dz1 + (0)*d/dz2 + (0)*d/dw");

    let quad = write(&dir, "quad.txt", "z1*zb1 + z2*zb2\n");
    assert_eq!(json(&run(&["aut", "--json"], Some(&quad)))["algebra"]["g_c_dim"], 0);

    let flat = write(&dir, "flat.txt", "weights: 1/2, 1/2\nz1*zb1\n");
    let v = json(&run(&["aut", "--json"], Some(&flat)));
    assert!(v["warnings"][0].as_str().unwrap().contains("degenerate"));
}

#[test]
fn chains_embed_and_classify() {
    let dir = TempDir::new().unwrap();
    let shear = write(&dir, "shear.txt", "Re(z1*conj(z2)^2)\n");
    let v = json(&run(&["chains", "--json"], Some(&shear)));
    assert_eq!(v["decomposition"]["resynthesis_exact"], true);
    assert_eq!(v["decomposition"]["pairs"][0]["length"], 2);

    let v = json(&run(&["embed", "--json"], Some(&shear)));
    let e = &v["embedding"];
    assert_eq!(e["ambient_dim"], 5);
    assert_eq!((e["maps_into"].as_bool(), e["f_related"].as_bool(), e["quadric_symmetry"].as_bool()), (Some(true), Some(true), Some(true)));

    let v = json(&run(&["classify", "--json"], Some(&shear)));
    assert_eq!(v["verdict"]["tag"], "HIGHER_ORDER_POSSIBLE");

    let quad = write(&dir, "quad.txt", "z1*zb1 + z2*zb2\n");
    assert_eq!(json(&run(&["classify", "--json"], Some(&quad)))["verdict"]["tag"], "TWO_JET_DETERMINATION");
    assert_eq!(run(&["chains"], Some(&quad)).status.code(), Some(3));
    assert_eq!(run(&["embed"], Some(&quad)).status.code(), Some(3));

    let flat = write(&dir, "flat.txt", "z1*zb1\n");
    let v = json(&run(&["classify", "--json"], Some(&flat)));
    assert_eq!(v["verdict"]["tag"], "DEGENERATE_INAPPLICABLE");
}

#[test]
fn timings_only_on_request() {
    let dir = TempDir::new().unwrap();
    let shear = write(&dir, "shear.txt", "Re(z1*conj(z2)^2)\n");
    assert!(json(&run(&["aut", "--json"], Some(&shear))).get("timings").is_none());
    assert!(json(&run(&["aut", "--json", "--timings"], Some(&shear)))["timings"].is_array());
}

fn corpus(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["corpus", "--json", "--out", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args, None)
}

fn listing(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files.into_iter().map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())).collect()
}

#[test]
fn corpus_is_byte_identical_per_seed() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    let out_a = corpus(a.path(), &["--seed", "5", "--count", "6"]);
    let out_b = corpus(b.path(), &["--seed", "5", "--count", "6"]);
    assert_eq!(out_a.status.code(), Some(0));
    assert_eq!(out_a.stdout, out_b.stdout);
    let (la, lb) = (listing(a.path()), listing(b.path()));
    assert_eq!(la.len(), 7);
    assert_eq!(la, lb);

    let c = TempDir::new().unwrap();
    corpus(c.path(), &["--seed", "6", "--count", "6"]);
    assert_ne!(listing(c.path()), la);
}

#[test]
fn corpus_family_and_empty() {
    let dir = TempDir::new().unwrap();
    let out = corpus(dir.path(), &["--seed", "1", "--count", "10", "--family", "quadratic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["corpus"]["passed"], 10);
    assert!(v["corpus"]["entries"].as_array().unwrap().iter().all(|e| e["family"] == "quadratic" && e["round_trip"] == true));
    for entry in fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "txt") {
            assert_eq!(run(&["check"], Some(&p)).status.code(), Some(0));
        }
    }

    let empty = TempDir::new().unwrap();
    let v = json(&corpus(empty.path(), &["--count", "0"]));
    assert_eq!(v["corpus"]["count"], 0);
    assert_eq!(v["corpus"]["entries"], serde_json::json!([]));

    assert_ne!(run(&["corpus", "--family", "nonsense"], None).status.code(), Some(0));
}

#[test]
fn golden_reports() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let model = golden.join("shear.txt");
    for (cmd, file) in [("check", "check_shear.json"), ("chains", "chains_shear.json")] {
        let out = run(&[cmd, "--json"], Some(&model));
        assert_eq!(out.status.code(), Some(0));
        let expected = fs::read_to_string(golden.join(file)).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{cmd}");
    }
}
