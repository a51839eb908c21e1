use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symprod"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn symprod")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symprod-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn fixture(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["fixture"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    let out = run(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

#[test]
fn decide_pencil_is_special() {
    let dir = tmpdir("pencil");
    let p = fixture(&dir, "pencil3.json", &["--family", "pencil", "--d", "3", "--n", "3"]);
    let out = run(&["specpos-decide", "--config", &p, "--trials", "200", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: special"));
    let out = run(&["specpos-decide", "--config", &p, "--json"]);
    assert_eq!(json(&out)["verdict"], "special");
}

#[test]
fn decide_exit_codes() {
    let dir = tmpdir("codes");
    let tri = fixture(&dir, "tri.json", &["--family", "triangle"]);
    let out = run(&["specpos-decide", "--config", &tri, "--seed", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "not_special");
    assert!(v["witness"]["rows"].is_array());

    let skew5 = fixture(&dir, "skew5.json", &["--family", "random-skew", "--d", "5", "--seed", "2"]);
    let out = run(&["specpos-decide", "--config", &skew5]);
    assert_eq!(code(&out), 2);
    let out = run(&["specpos-decide", "--config", &skew5, "--json"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["verdict"], "undecided");

    let out = run(&["specpos-decide", "--config", "/nonexistent/file.json"]);
    assert_eq!(code(&out), 1);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"n": 3, "k": 2, "field": "rational", "subspaces": [[["1","0","0","0"]]]}"#).unwrap();
    assert_eq!(code(&run(&["specpos-decide", "--config", bad.to_str().unwrap()])), 1);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["bn", "--genus", "x", "--r", "1"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["degirr", "--help"])), 0);
    assert_eq!(code(&run(&[])), 1);
}

#[test]
fn span_and_plucker() {
    let dir = tmpdir("span");
    let ruling = fixture(&dir, "ruling.json", &["--family", "quadric-ruling", "--d", "4"]);
    let v = json(&run(&["specpos-span", "--config", &ruling, "--json"]));
    assert_eq!((v["span_dim"].as_u64(), v["bound"].as_i64(), v["status"].as_str()), (Some(3), Some(3), Some("holds")));
    let out = run(&["plucker", "--config", &ruling, "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["coordinates"].as_array().unwrap().len(), 4);
    assert_eq!(v["index_sets"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_command() {
    let dir = tmpdir("oracle");
    let pencil = fixture(&dir, "pencil.json", &["--family", "pencil", "--d", "3"]);
    let v = json(&run(&["specpos-oracle", "--config", &pencil, "--prime", "3", "--json"]));
    assert_eq!(v["special"], true);
    assert_eq!(v["planes_enumerated"], 130);
    assert_eq!(code(&run(&["specpos-oracle", "--config", &pencil])), 1);
    assert_eq!(code(&run(&["specpos-oracle", "--config", &pencil, "--prime", "4"])), 1);
    assert_eq!(code(&run(&["specpos-oracle", "--config", &pencil, "--prime", "1000003"])), 1);
}

#[test]
fn fixtures_round_trip_and_are_deterministic() {
    let dir = tmpdir("fixtures");
    let a = fixture(&dir, "a.json", &["--family", "random-skew", "--d", "4", "--n", "3", "--seed", "7"]);
    let b = fixture(&dir, "b.json", &["--family", "random-skew", "--d", "4", "--n", "3", "--seed", "7"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    for args in [
        vec!["--family", "pencil", "--d", "3", "--n", "3"],
        vec!["--family", "quadric-ruling", "--d", "4"],
        vec!["--family", "scroll", "--d", "6"],
        vec!["--family", "triangle"],
    ] {
        let mut full = vec!["fixture"];
        full.extend_from_slice(&args);
        let out = run(&full);
        assert_eq!(code(&out), 0);
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed = symprod_core::io::parse_configuration(&text).unwrap();
        let symprod_core::io::AnyConfiguration::Rational(c) = parsed else { panic!("rational fixture") };
        assert_eq!(symprod_core::io::configuration_to_json(&c), text);
    }
    assert_eq!(code(&run(&["fixture", "--family", "scroll", "--d", "3"])), 1);
    assert_eq!(code(&run(&["fixture", "--family", "pencil"])), 1);
}

#[test]
fn curve_commands() {
    let v = json(&run(&["bn", "--genus", "6", "--r", "2", "--d", "6", "--json"]));
    assert_eq!((v["rho"].as_i64(), v["min_degree"].as_u64()), (Some(0), Some(6)));
    let v = json(&run(&["gonality", "--genus", "5", "--json"]));
    assert_eq!(v["gonality"], 4);

    let out = run(&["degirr", "--genus", "6", "--class", "very-general", "--json"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.replace([' ', '\n'], "").starts_with(r#"{"lo":5,"hi":15,"exact":false,"provenance""#));
    let v = json(&run(&["degirr", "--genus", "9", "--class", "hyperelliptic", "--json"]));
    assert_eq!((v["lo"].as_u64(), v["hi"].as_u64(), v["exact"].as_bool()), (Some(4), Some(4), Some(true)));
    assert_eq!(code(&run(&["degirr", "--genus", "2", "--class", "very-general"])), 1);

    let v = json(&run(&["dego", "--genus", "3", "--class", "very-general", "--json"]));
    assert_eq!((v["lo"].as_u64(), v["exact"].as_bool()), (Some(3), Some(true)));
    let v = json(&run(&["dego", "--genus", "5", "--k", "7", "--json"]));
    assert_eq!(v["lo"], 1);
    assert_eq!(code(&run(&["dego", "--genus", "5"])), 1);
}

#[test]
fn nefcone_commands() {
    let out = run(&["nefcone-verify", "--g", "6", "--a", "32", "--b", "13", "--tau-prev", "9/4"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("valid\n"));
    assert!(text.contains("L²=179"));

    let v = json(&run(&["nefcone-verify", "--g", "6", "--a", "29", "--b", "13", "--tau-prev", "9/4", "--json"]));
    assert_eq!((v["valid"].as_bool(), v["failed_check"].as_str()), (Some(false), Some("ratio")));

    assert_eq!(code(&run(&["nefcone-verify", "--g", "6", "--a", "0", "--b", "13", "--tau-prev", "9/4"])), 1);
    assert_eq!(code(&run(&["nefcone-verify", "--g", "6", "--a", "3", "--b", "1", "--tau-prev", "9/0"])), 1);

    let v = json(&run(&["nefcone-search", "--g", "8", "--tau-prev", "77/29", "--b-max", "6", "--json"]));
    assert_eq!((v["a"].as_str(), v["b"].as_str(), v["known_pair"].as_bool()), (Some("17"), Some("6"), Some(true)));
    assert_eq!(code(&run(&["nefcone-search", "--g", "8", "--tau-prev", "77/29", "--b-max", "0"])), 1);
}

#[test]
fn bad_thread_setting_is_an_input_error() {
    let out = bin().args(["gonality", "--genus", "3"]).env("SYMPROD_THREADS", "many").output().unwrap();
    assert_eq!(code(&out), 1);
}
