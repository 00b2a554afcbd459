use dyck_cli::{run, EXIT_FAILED, EXIT_LIMIT, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn dyck(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dyck").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn dyck_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = dyck(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn json_envelope() {
    let v = dyck_json(&["paths", "--n", "3"]);
    for key in ["command", "params", "results", "witnesses"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "paths");
    assert_eq!(v["results"]["count"], 5);
    assert_eq!(v["params"]["n"], 3);
}

#[test]
fn interval_counts() {
    let v = dyck_json(&["intervals", "--n", "5"]);
    assert_eq!(v["results"][0]["table"]["total"], 381);
    assert_eq!(v["results"][0]["table"]["prime_total"], 224);
    let v = dyck_json(&["intervals", "--n", "5", "--relation", "tamari"]);
    assert_eq!(v["results"][0]["table"]["total"], 399);
}

#[test]
fn sequences_check_out() {
    let (code, out, _) = dyck(&["oeis-check", "--n-max", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches(": match").count(), 4, "{out}");
}

#[test]
fn dot_overlay() {
    let (code, out, _) = dyck(&["hasse", "--n", "4", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("[label=").count(), 14);
    assert_eq!(out.matches("style=solid").count(), 20);
    assert_eq!(out.matches("style=dashed").count(), 1);
    let (_, tamari, _) = dyck(&["hasse", "--n", "4", "--relation", "tamari", "--format", "dot"]);
    assert_eq!(tamari.matches("style=dashed").count(), 0);
}

#[test]
fn phi_dump_and_properties() {
    let (code, out, _) = dyck(&["phi", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(out.lines().next(), Some("UUUDDD\tUDUDUD\tii"));
    let v = dyck_json(&["phi", "--n", "4"]);
    let props = &v["results"]["properties"];
    assert_eq!(props["bijective"], true);
    assert_eq!(props["statistic_failures"], 0);
    assert_eq!(v["witnesses"][0]["path"], "UUUDDUDD");
}

#[test]
fn stats_of_one_path() {
    let v = dyck_json(&["stats", "--path", "UUDUDD"]);
    let r = &v["results"][0];
    assert_eq!(r["n"], 3);
    assert_eq!((r["s"].as_u64(), r["t"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn lattice_check_exit_codes() {
    let (code, out, _) = dyck(&["lattice-check", "--n-max", "5"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out, _) = dyck(&["lattice-check", "--n", "5", "--relation", "pattern:UUDU"]);
    assert_eq!(code, EXIT_FAILED, "{out}");
    assert!(out.contains("not a lattice"));
}

#[test]
fn seeded_sampling_is_reproducible() {
    let args = ["lattice-check", "--n", "6", "--samples", "300", "--seed", "11", "--format", "json"];
    let (c1, a, _) = dyck(&args);
    let (c2, b, _) = dyck(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
}

#[test]
fn series_outputs() {
    let (code, out, _) = dyck(&["series", "j1", "--order", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("224"), "{out}");
    let (code, out, _) = dyck(&["series", "identities", "--order", "7"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("NONZERO"));
}

#[test]
fn mobius_routes_agree() {
    let v = dyck_json(&["mobius", "--n", "5"]);
    assert_eq!(v["results"]["routes_agree"], true);
}

#[test]
fn diameter_rows() {
    let v = dyck_json(&["diameter", "--n-max", "6"]);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["holds"] == true));
}

#[test]
fn conjectures_always_succeed() {
    let (code, out, _) = dyck(&["conjectures", "--n-max", "5", "--pattern", "UDD"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pattern_UDD_lattice"));
    assert!(out.contains("diameter_2n_minus_4: holds"));
}

#[test]
fn usage_errors() {
    assert_eq!(dyck(&["hasse"]).0, EXIT_USAGE);
    assert_eq!(dyck(&["hasse", "--n", "3", "--relation", "bogus"]).0, EXIT_USAGE);
    assert_eq!(dyck(&["hasse", "--n", "3", "--relation", "pattern:"]).0, EXIT_USAGE);
    assert_eq!(dyck(&["stats", "--path", "UDDU"]).0, EXIT_USAGE);
    assert_eq!(dyck(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(dyck(&["intervals", "--n", "3", "--format", "dot"]).0, EXIT_USAGE);
    assert_eq!(dyck(&["conjectures", "--pattern", "UXU"]).0, EXIT_USAGE);
}

#[test]
fn resource_limits() {
    let (code, _, err) = dyck(&["hasse", "--n", "8", "--cap", "100"]);
    assert_eq!(code, EXIT_LIMIT);
    assert!(err.contains("resource limit"));
    assert_eq!(dyck(&["paths", "--n", "22"]).0, EXIT_LIMIT);
}

#[test]
fn output_is_deterministic() {
    for args in [&["hasse", "--n", "5", "--format", "json"][..], &["irreducibles", "--n-max", "6", "--format", "csv"]] {
        assert_eq!(dyck(args).1, dyck(args).1);
    }
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("dyck-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = dyck(&["paths", "--n", "2", "--format", "csv", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text, "index,path\n0,UUDD\n1,UDUD\n");
}
