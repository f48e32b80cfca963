use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sextic(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sextic"));
    cmd.args(args).env_remove("SEXTIC_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("SEXTIC_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let o = sextic(args, None);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).expect("json output")
}

#[test]
fn e8_perturbation_listing_has_seven_entries() {
    let v = json(&["skeletons", "e8-perturbations", "--format", "json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["count"], 7);
    let sets: usize = v["skeletons"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["sets"].as_array().unwrap().len())
        .sum();
    assert_eq!(sets, 8);
}

#[test]
fn sigma2_listing_contains_theta_and_dumbbell() {
    let v = json(&["skeletons", "sigma2", "--format", "json"]);
    let entries = v["skeletons"].as_array().unwrap();
    let has = |faces: &[u64], markings: u64| {
        entries.iter().any(|e| {
            e["vertices"] == 2
                && e["edges"] == 3
                && e["markings"] == markings
                && e["faces"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_u64().unwrap())
                    .eq(faces.iter().copied())
        })
    };
    assert!(has(&[2, 2, 2], 3), "theta");
    assert!(has(&[4, 1, 1], 1), "dumbbell");
    assert!(entries.iter().any(|e| e["vertices"] == 0), "circle");
}

#[test]
fn invalid_filter_is_a_usage_error() {
    assert_eq!(sextic(&["skeletons", "bogus"], None).status.code(), Some(2));
    assert_eq!(
        sextic(&["classify", "neither"], None).status.code(),
        Some(2)
    );
    assert_eq!(sextic(&["group"], None).status.code(), Some(2));
}

#[test]
fn classification_totals() {
    for (kind, totals) in [
        ("irreducible", [39, 26, 21, 9]),
        ("reducible", [18, 17, 16, 1]),
    ] {
        let v = json(&["classify", kind, "--format", "json"]);
        let t = &v["totals"];
        assert_eq!(
            [&t["classes"], &t["sets"], &t["n_r"], &t["n_c"]].map(|x| x.as_u64().unwrap()),
            totals,
            "{kind}"
        );
        let text = stdout(&sextic(&["classify", kind], None));
        assert!(text.ends_with(&format!(
            "totals: {} classes, {} sets, {} real, {} pairs\n",
            totals[0], totals[1], totals[2], totals[3]
        )));
    }
}

#[test]
fn classify_csv_has_fixed_header() {
    let out = stdout(&sextic(&["classify", "reducible", "--format", "csv"], None));
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("index,set,fragment,n_r,n_c,l,m,n,reducible")
    );
    assert_eq!(lines.next(), Some("1,E8+A5+2A3,generic,1,0,4,4,6,true"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = sextic(&["classify", "irreducible", "--format", "json"], None);
    let b = sextic(&["classify", "irreducible", "--format", "json"], None);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_replays_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["group", "E8+A4+A3+2A2"];
    let first = sextic(&args, Some(dir.path()));
    assert!(first.status.success());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let second = sextic(&args, Some(dir.path()));
    assert_eq!(first.stdout, second.stdout);
    let flag = sextic(
        &[
            "group",
            "E8+A4+A3+2A2",
            "--cache",
            dir.path().to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(first.stdout, flag.stdout);
}

#[test]
fn group_report_for_g6() {
    let v = json(&["group", "E8+A4+A3+2A2"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["report"]["order"], 720);
    assert_eq!(v["report"]["derived_order"], 120);
    assert_eq!(v["row"]["lmn"], "(5,4,3)");
    assert!(v["timings_ms"]["analyze"].is_number());
}

#[test]
fn group_selectors() {
    let v = json(&["group", "reducible:11"]);
    assert_eq!(v["row"]["set"], "E8+D6+A3+A2");
    assert_eq!(v["report"]["order"], 1800);
    let v = json(&["group", "(-,-,1)"]);
    assert_eq!(v["report"]["order"], 6);
    assert!(v["row"].is_null());
    let v = json(&["group", "E8+D6+A5"]);
    assert_eq!(v["report"]["order"], 15);
}

#[test]
fn overflow_is_reported_distinctly() {
    let o = sextic(&["group", "(4,3,-,a2^3)", "--limit", "1000"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "overflow");
    assert!(v["report"].is_null());
}

#[test]
fn bad_limit_and_selector_fail() {
    assert_eq!(
        sextic(&["group", "(5,4,3)", "--limit", "10"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sextic(&["group", "Q7"], None).status.code(), Some(1));
    assert_eq!(
        sextic(&["group", "irreducible:99"], None).status.code(),
        Some(1)
    );
}

#[test]
fn perturbation_of_g6_by_a4_a3_is_an_isomorphism() {
    let o = sextic(&["perturb", "G6", "A4+A3", "--format", "text"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "isomorphism (order preserved: 720)\n");
    let v = json(&["perturb", "Ginf", "D5+A2"]);
    assert_eq!(v["order"], 1800);
    assert_eq!(v["order_preserved"], true);
    assert_eq!(
        sextic(&["perturb", "G6", "A9"], None).status.code(),
        Some(1)
    );
}

#[test]
fn verify_prints_one_line_per_criterion() {
    let o = sextic(&["verify", "--quiet"], None);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    for (i, l) in lines.iter().enumerate() {
        assert!(l.starts_with(&format!("criterion {}: ", i + 1)), "{l}");
    }
    let failed = lines.iter().any(|l| l.contains(": FAIL"));
    assert_eq!(o.status.code(), Some(if failed { 1 } else { 0 }));
}

#[test]
fn selector_fuzz_seeds_round_trip() {
    let dir =
        std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/cli_selector");
    let mut n = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let sel: sextic_cli::Selector = text.parse().unwrap();
        assert_eq!(
            sel.to_string().parse::<sextic_cli::Selector>().unwrap(),
            sel,
            "{text}"
        );
        n += 1;
    }
    assert!(n > 0);
}
