use std::process::{Command, Output};

use lorentz_core::lie::make_so;
use serde_json::Value;

fn lorentz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lorentz")).args(args).env_remove("LORENTZ_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn signature_of_killing_form_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.txt");
    std::fs::write(&path, make_so(1, 2).unwrap().killing_form().unwrap().to_text()).unwrap();
    let p = path.to_str().unwrap();
    let o = lorentz(&["signature", "--matrix", p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(2,1,0)");
    let o = lorentz(&["--format", "json", "signature", "--matrix", p]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["signature"], "(2,1,0)");
    assert_eq!(v["lorentz"], true);
}

#[test]
fn signature_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    std::fs::write(&path, "2 2\n1 2\n3 4\n").unwrap();
    assert_eq!(lorentz(&["signature", "--matrix", path.to_str().unwrap()]).status.code(), Some(64));
    std::fs::write(&path, "2 2\n1 2\n3\n").unwrap();
    assert_eq!(lorentz(&["signature", "--matrix", path.to_str().unwrap()]).status.code(), Some(64));
    let missing = dir.path().join("none.txt");
    assert_eq!(lorentz(&["signature", "--matrix", missing.to_str().unwrap()]).status.code(), Some(64));
}

#[test]
fn quotient_exit_codes_and_json() {
    let found = lorentz(&["verify", "quotient", "--g", "so(2,5)", "--h", "so(1,5)"]);
    assert_eq!(found.status.code(), Some(0));
    assert!(stdout(&found).contains("verdict: found"));
    let none = lorentz(&["--format", "json", "verify", "quotient", "--g", "so(2,4)", "--h", "su(1,2)"]);
    assert_eq!(none.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&none)).unwrap();
    let cert = &v["checks"][0]["certificate"];
    assert_eq!(cert["verdict"]["tag"], "none");
    assert_eq!(cert["verdict"]["reason"]["kind"], "pencil");
    assert_eq!(cert["space_dim"], 2);
    assert_eq!(lorentz(&["verify", "quotient", "--g", "so(2,4)", "--h", "nope"]).status.code(), Some(64));
}

#[test]
fn lemma_subcommand() {
    assert_eq!(lorentz(&["verify", "lemma", "--k", "4"]).status.code(), Some(0));
    assert_eq!(lorentz(&["verify", "lemma", "--k", "1"]).status.code(), Some(64));
}

#[test]
fn roots_and_catalog() {
    let o = lorentz(&["roots", "--g", "so(2,5)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("alpha = (-1,1)"));
    assert!(text.contains("beta = (1,0)"));
    let o = lorentz(&["--format", "json", "roots", "--g", "so(2,5)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut mults: Vec<u64> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["positive"] == true)
        .map(|r| r["multiplicity"].as_u64().unwrap())
        .collect();
    mults.sort();
    assert_eq!(mults, vec![1, 1, 3, 3]);
    let o = lorentz(&["catalog", "--g", "so(2,4)"]);
    let text = stdout(&o);
    for name in ["so(1,4)", "su(1,2)", "p_alpha", "p_beta", "min_parabolic"] {
        assert!(text.contains(name), "{name} missing from catalog");
    }
    assert_eq!(lorentz(&["catalog", "--g", "so(2,x)"]).status.code(), Some(64));
}

#[test]
fn verify_all_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let oa = lorentz(&["verify", "all", "--max-n", "3", "--json", a.to_str().unwrap()]);
    let ob = lorentz(&["verify", "all", "--max-n", "3", "--json", b.to_str().unwrap()]);
    assert_eq!(oa.status.code(), Some(0));
    assert_eq!(ob.status.code(), Some(0));
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_str(&ta).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["summary"]["fail"], 0);
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string() && c["anchor"].is_string() && c["params"].is_object());
    }
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lorentz"))
        .args(["--format", "json", "verify", "lemma", "--k", "3"])
        .env("LORENTZ_SEED", "99")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"][0]["params"]["seed"], 99);
    let o = lorentz(&["--seed", "5", "--format", "json", "verify", "lemma", "--k", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"][0]["params"]["seed"], 5);
}

#[test]
fn usage_and_help() {
    assert_eq!(lorentz(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(lorentz(&["verify", "all", "--max-n", "2"]).status.code(), Some(64));
    assert_eq!(lorentz(&["--help"]).status.code(), Some(0));
    assert_eq!(lorentz(&["--version"]).status.code(), Some(0));
}

#[test]
fn catalog_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = lorentz(&["catalog", "--g", "so(2,4)", "--export", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g = make_so(2, 4).unwrap();
    let mut su = Vec::new();
    for i in 0..8 {
        let text = std::fs::read_to_string(dir.path().join(format!("su_1_2_{i}.txt"))).unwrap();
        let m = lorentz_core::Mat::from_text(&text).unwrap();
        assert!(g.contains(&m));
        su.push(m);
    }
    assert!(!dir.path().join("su_1_2_8.txt").exists());
    let sub = lorentz_core::lie::Subalgebra::new(&g, "su(1,2)", su).unwrap();
    assert_eq!(sub.dim(), 8);
}
