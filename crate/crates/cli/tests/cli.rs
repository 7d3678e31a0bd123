use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn covers(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covers"))
        .args(args)
        .env_remove("COVERS_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = covers(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("covers-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn enumerate_counts() {
    assert_eq!(json(&["enumerate", "8"])["parameters"]["classes"], "19");
    assert_eq!(json(&["enumerate", "5"])["parameters"]["classes"], "1");
    let six = json(&["enumerate", "6"]);
    assert_eq!(six["parameters"]["orbit_profile"], "[6, 3, 3, 2]");
    assert_eq!(json(&["enumerate", "8", "--dihedral"])["parameters"]["classes"], "12");
}

#[test]
fn enumerate_past_cap_fails() {
    let o = covers(&["enumerate", "15"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

fn homology_column(v: &Value) -> Vec<String> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[4].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn cover_homology() {
    let t = json(&["cover", "tetrahedron", "--homology"]);
    assert_eq!(homology_column(&t), ["Z", "0", "0", "Z"]);
    let c = json(&["cover", "cube", "--homology"]);
    assert_eq!(homology_column(&c), ["Z", "Z^3", "Z^3", "Z"]);
    let y = json(&["cover", "y5", "--mirrors", "dome", "--homology"]);
    assert_eq!(homology_column(&y)[1], "Z^5");
    assert_eq!(y["parameters"]["boundary_genus"], "5");
    let y6 = json(&["cover", "020202", "--mirrors", "dome"]);
    assert_eq!(y6["parameters"]["core_graph_betti"], "17");
}

#[test]
fn cover_writes_dot_and_dump() {
    let d = scratch("dot");
    let dot = d.join("g.dot");
    let dump = d.join("c.txt");
    let o = covers(&[
        "cover",
        "prism",
        "--dot",
        dot.to_str().unwrap(),
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph defining {"));
    assert_eq!(text.matches(" -- ").count(), 9);
    assert!(std::fs::read_to_string(&dump).unwrap().contains("boundary 3"));
}

#[test]
fn bipyramitoid_cube_and_export() {
    let d = scratch("heegaard");
    let path = d.join("h.json");
    let v = json(&["bipyramitoid", "cube", "--heegaard", path.to_str().unwrap()]);
    assert_eq!(v["parameters"]["genus"], "17");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let h: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(h["genus"], 17);
    assert_eq!(h["north_meridians"].as_array().unwrap().len(), 48);
    assert_eq!(h["intersection"].as_array().unwrap().len(), 48);
}

#[test]
fn explicit_gluing_and_presentation() {
    let o = covers(&["bipyramitoid", "--north", "01102", "--south", "01102", "--presentation"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("faces: [3, 3, 4, 4, 4]"));
    assert!(text.contains("rho g0 -> e0"));
    let bad = covers(&["bipyramitoid", "--north", "01102", "--south", "01102", "--offset", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn trapezohedron_is_reported_without_homology() {
    let o = covers(&["bipyramitoid", "trapezohedron4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("not simple"));
}

#[test]
fn quadrics_pass_and_are_reproducible() {
    let a = covers(&["quadrics", "7", "--seed", "5"]);
    let b = covers(&["quadrics", "7", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let csv = stdout(&covers(&["quadrics", "7", "--format", "csv"]));
    assert!(csv.starts_with("kind,n,points,linear,quadric,min_coord,sum_defect\npolygon,7,"));
}

#[test]
fn fixtures_dir_and_bad_files() {
    let d = scratch("fixtures");
    std::fs::write(
        d.join("wedge.json"),
        r#"{"name":"wedge","vertices":[0,1,2,3],"faces":[[0,1,2],[0,3,1],[1,3,2],[2,3,0]]}"#,
    )
    .unwrap();
    std::fs::write(d.join("broken.json"), r#"{"name":"b","vertices":[0,1,2],"faces":[[0,1,2]]}"#).unwrap();
    let dir = d.to_str().unwrap();
    let ok = json(&["cover", "wedge", "--fixtures-dir", dir, "--homology"]);
    assert_eq!(homology_column(&ok), ["Z", "0", "0", "Z"]);
    let bad = covers(&["cover", "broken", "--fixtures-dir", dir]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cache_dir_gives_identical_reports() {
    let d = scratch("cache");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_covers"))
            .args(["enumerate", "7"])
            .env("COVERS_CACHE_DIR", &d)
            .output()
            .unwrap()
    };
    let first = run();
    assert!(d.join("enumerate-7-rotation.json").is_file());
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, covers(&["enumerate", "7"]).stdout);
}

#[test]
fn verify_fast_passes() {
    let o = covers(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.matches("[PASS] AC").count(), 11);
}
