//! Driver-level tests: round trips through the file format, JSON stability,
//! exit codes, and load-time diagnostics.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morita-kit"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "expected success for {args:?}: stderr = {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn example_round_trips_to_the_programmatic_construction() {
    let text = run_ok(&["example", "corner"]);
    let dir = std::env::temp_dir().join("morita-cli-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corner.json");
    std::fs::write(&path, &text).unwrap();

    let ws = {
        let raw = std::fs::read_to_string(&path).unwrap();
        morita_cli_test_support::parse(&raw)
    };
    let datum = &ws.data["corner_m2z2"];
    let t = morita_kit::algebra::FinRing::matrix_ring(2, 2).unwrap();
    let programmatic =
        morita_kit::algebra::corner_context(&t, &vec![1, 0, 0, 0]).unwrap();
    assert_eq!(datum.t().mult_table(), programmatic.t().mult_table());
    assert_eq!(datum.s().mult_table(), programmatic.s().mult_table());
    assert_eq!(
        datum.m_t().beta().table(),
        programmatic.m_t().beta().table(),
        "connecting tables must round-trip exactly"
    );
    assert_eq!(datum.m_s().beta().table(), programmatic.m_s().beta().table());
    assert_eq!(
        datum.p().left().action_table(),
        programmatic.p().left().action_table()
    );
    assert_eq!(
        datum.q().right().action_table(),
        programmatic.q().right().action_table()
    );
}

// The workspace loader is an internal module of the binary crate; tests link
// a minimal shim through the library API by re-parsing the document.
mod morita_cli_test_support {
    use std::collections::BTreeMap;

    use morita_kit::abelian::FinAbGroup;
    use morita_kit::algebra::{Bimodule, FinRing, ModuleStructure, Side};
    use morita_kit::morita::{build_datum, build_semi_context, BalancedMap, MoritaDatum};

    pub struct Parsed {
        pub data: BTreeMap<String, MoritaDatum>,
    }

    pub fn parse(text: &str) -> Parsed {
        let doc: serde_json::Value = serde_json::from_str(text).unwrap();
        assert_eq!(doc["schema"], 1);
        let mut rings = BTreeMap::new();
        for (name, rd) in doc["rings"].as_object().unwrap() {
            let moduli: Vec<i64> =
                serde_json::from_value(rd["moduli"].clone()).unwrap();
            let mult: Vec<Vec<Vec<i64>>> =
                serde_json::from_value(rd["mult"].clone()).unwrap();
            let one: Option<Vec<i64>> = serde_json::from_value(rd["one"].clone()).unwrap();
            let ring =
                FinRing::validated(FinAbGroup::new(moduli).unwrap(), mult, one).unwrap();
            rings.insert(name.clone(), ring);
        }
        let mut modules = BTreeMap::new();
        for (name, md) in doc["modules"].as_object().unwrap() {
            let moduli: Vec<i64> =
                serde_json::from_value(md["group"]["moduli"].clone()).unwrap();
            let action: Vec<Vec<Vec<i64>>> =
                serde_json::from_value(md["action"].clone()).unwrap();
            let side = match md["side"].as_str().unwrap() {
                "left" => Side::Left,
                _ => Side::Right,
            };
            let ring = rings[md["ring"].as_str().unwrap()].clone();
            let module = ModuleStructure::validated(
                ring,
                FinAbGroup::new(moduli).unwrap(),
                side,
                action,
            )
            .unwrap();
            modules.insert(name.clone(), module);
        }
        let mut bimodules = BTreeMap::new();
        for (name, bd) in doc["bimodules"].as_object().unwrap() {
            let left = modules[bd["left"].as_str().unwrap()].clone();
            let right = modules[bd["right"].as_str().unwrap()].clone();
            bimodules.insert(name.clone(), Bimodule::validated(left, right).unwrap());
        }
        let mut maps = BTreeMap::new();
        for (name, md) in doc["maps"].as_object().unwrap() {
            let p = bimodules[md["p"].as_str().unwrap()].clone();
            let q = bimodules[md["q"].as_str().unwrap()].clone();
            let table: Vec<Vec<Vec<i64>>> =
                serde_json::from_value(md["table"].clone()).unwrap();
            maps.insert(name.clone(), BalancedMap::new(p, q, table).unwrap());
        }
        let mut data = BTreeMap::new();
        for (name, cd) in doc["contexts"].as_object().unwrap() {
            let beta_t = maps[cd["beta_t"].as_str().unwrap()].clone();
            let beta_s = maps[cd["beta_s"].as_str().unwrap()].clone();
            let datum = build_datum(
                build_semi_context(beta_t).unwrap(),
                build_semi_context(beta_s).unwrap(),
            )
            .unwrap();
            data.insert(name.clone(), datum);
        }
        Parsed { data }
    }
}

#[test]
fn json_reports_are_byte_stable() {
    let dir = std::env::temp_dir().join("morita-cli-stability");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corner.json");
    std::fs::write(&path, run_ok(&["example", "corner"])).unwrap();
    let path_str = path.to_str().unwrap();

    let a = run_ok(&["classify", path_str, "--object", "corner_m2z2", "--json"]);
    let b = run_ok(&["classify", path_str, "--object", "corner_m2z2", "--json"]);
    assert_eq!(a, b);
    assert!(a.contains("\"schema\": 1"));

    let a = run_ok(&["check", "random", "--suite", "tt", "--seed", "7", "--json"]);
    let b = run_ok(&["check", "random", "--suite", "tt", "--seed", "7", "--json"]);
    assert_eq!(a, b, "a fixed seed must give byte-identical JSON");
}

#[test]
fn bad_inputs_use_exit_code_two() {
    // Missing file.
    let out = bin().args(["validate", "/nonexistent/nowhere.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Syntax error with position diagnostics.
    let dir = std::env::temp_dir().join("morita-cli-badinput");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{\"schema\": 1, \"rings\": {").unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line"), "parse errors carry positions: {stderr}");

    // A multiplication table violating associativity names the triple.
    let bad = r#"{
      "schema": 1,
      "rings": {
        "B": {
          "moduli": [2, 2],
          "one": null,
          "mult": [[[0, 1], [1, 0]], [[0, 0], [0, 1]]]
        }
      }
    }"#;
    let path = dir.join("nonassoc.json");
    std::fs::write(&path, bad).unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("associativity"),
        "expected an associativity failure with a witness: {stderr}"
    );
}

#[test]
fn unknown_object_is_a_usage_error() {
    let dir = std::env::temp_dir().join("morita-cli-unknown");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corner.json");
    std::fs::write(&path, run_ok(&["example", "corner"])).unwrap();
    let out = bin()
        .args(["classify", path.to_str().unwrap(), "--object", "nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identity_and_matrix_examples_are_valid_workspaces() {
    let dir = std::env::temp_dir().join("morita-cli-examples");
    std::fs::create_dir_all(&dir).unwrap();
    for (args, file) in [
        (vec!["example", "identity", "--m", "4"], "identity.json"),
        (vec!["example", "matrix", "--n", "2", "--m", "2"], "matrix.json"),
    ] {
        let path = dir.join(file);
        std::fs::write(&path, run_ok(&args)).unwrap();
        run_ok(&["validate", path.to_str().unwrap()]);
    }
}

#[test]
fn failing_claims_use_exit_code_one() {
    // The corner of the upper-triangular ring at the lower idempotent has a
    // projective P that is not a bounded star module, so the star suite must
    // fail and exit 1.
    let t = morita_kit::algebra::FinRing::upper_triangular(2).unwrap();
    let datum = morita_kit::algebra::corner_context(&t, &vec![0, 0, 1]).unwrap();
    let doc = emit_datum_doc("ut_corner", &datum);
    let dir = std::env::temp_dir().join("morita-cli-exit1");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ut_corner.json");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    run_ok(&["validate", path.to_str().unwrap()]);
    let out = bin()
        .args(["check", path.to_str().unwrap(), "--suite", "star", "--bound", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "a failed claim must exit 1");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL"), "output must say FAIL:\n{stdout}");
}

/// Mirror of the driver's document emitter, for tests that need to write a
/// datum the binary did not generate itself.
fn emit_datum_doc(name: &str, datum: &morita_kit::morita::MoritaDatum) -> serde_json::Value {
    use morita_kit::algebra::Side;
    let ring_doc = |r: &morita_kit::algebra::FinRing| {
        serde_json::json!({
            "moduli": r.group().moduli(),
            "one": r.one(),
            "mult": r.mult_table(),
        })
    };
    let module_doc = |ring: &str, m: &morita_kit::algebra::ModuleStructure| {
        serde_json::json!({
            "group": { "moduli": m.group().moduli() },
            "ring": ring,
            "side": if m.side() == Side::Left { "left" } else { "right" },
            "action": m.action_table(),
        })
    };
    serde_json::json!({
        "schema": 1,
        "rings": { "T": ring_doc(datum.t()), "S": ring_doc(datum.s()) },
        "modules": {
            "P_left": module_doc("T", datum.p().left()),
            "P_right": module_doc("S", datum.p().right()),
            "Q_left": module_doc("S", datum.q().left()),
            "Q_right": module_doc("T", datum.q().right()),
        },
        "bimodules": {
            "P": { "left": "P_left", "right": "P_right" },
            "Q": { "left": "Q_left", "right": "Q_right" },
        },
        "maps": {
            "betaT": { "p": "P", "q": "Q", "table": datum.m_t().beta().table() },
            "betaS": { "p": "Q", "q": "P", "table": datum.m_s().beta().table() },
        },
        "contexts": {
            name: { "t": "T", "s": "S", "p": "P", "q": "Q", "beta_t": "betaT", "beta_s": "betaS" }
        },
    })
}
