use grouplat::report::AnalysisReport;
use grouplat::{Analysis, Limits, PosetKind};
use std::process::{Command, Output};

fn grouplat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplat"))
        .args(args)
        .env_remove("GROUPLAT_MAX_ORDER")
        .env_remove("GROUPLAT_MAX_SUBGROUPS")
        .env_remove("GROUPLAT_POSET")
        .env_remove("GROUPLAT_ALL_WITNESSES")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(grouplat(&["build", "S3"]).status.code(), Some(0));
    assert_eq!(grouplat(&["build", "Q12"]).status.code(), Some(2));
    assert_eq!(grouplat(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(grouplat(&["analyze", "S6"]).status.code(), Some(3));
    assert_eq!(
        grouplat(&["analyze", "S4", "--max-subgroups", "10"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn max_order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_grouplat"))
        .args(["analyze", "S4"])
        .env("GROUPLAT_MAX_ORDER", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_report_round_trips() {
    let out = grouplat(&["analyze", "Q16", "--json", "-", "--all-witnesses"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report = AnalysisReport::from_json(&text).unwrap();
    assert_eq!(report.order, 16);
    assert_eq!(report.spec, "Q16");
    assert!(report.class_c.member);
    assert_eq!(report.to_json().trim_end(), text.trim_end());
}

#[test]
fn dot_output_reconstructs_poset() {
    let a = Analysis::parse("S4", &Limits::default()).unwrap();
    for kind in PosetKind::ALL {
        let p = a.poset(kind);
        let out = grouplat(&["analyze", "S4", "--dot", "-", "--poset", &kind.to_string()]);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.starts_with(&format!("digraph {kind} {{")));
        let n = p.size();
        let mut succ = vec![Vec::new(); n];
        for line in text.lines().filter(|l| l.contains("->")) {
            let ids: Vec<usize> = line
                .trim()
                .trim_end_matches(';')
                .split(" -> ")
                .map(|s| s.trim_start_matches('n').parse().unwrap())
                .collect();
            assert!(ids[0] != ids[1]);
            succ[ids[0]].push(ids[1]);
        }
        for x in 0..n {
            let mut seen = vec![false; n];
            let mut stack = vec![x];
            while let Some(v) = stack.pop() {
                if !std::mem::replace(&mut seen[v], true) {
                    stack.extend(&succ[v]);
                }
            }
            for (y, &reached) in seen.iter().enumerate() {
                assert_eq!(reached, p.leq(x, y), "{kind} {x} {y}");
            }
        }
    }
}

#[test]
fn scan_csv_default_families() {
    let out = grouplat(&["scan", "--max-order", "12", "--csv", "-"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "spec,order,n_subgroups,n_classes,bp_L,bp_Lbar,bp_C,bp_Cbar,in_C,witnesses"
    );
    let specs: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    for s in ["C12", "D12", "A4", "Dic3"] {
        assert!(specs.contains(&s), "{s} missing from {specs:?}");
    }
}

#[test]
fn scan_dihedral_family() {
    let out = grouplat(&[
        "scan",
        "--max-order",
        "8",
        "--families",
        "dihedral",
        "--csv",
        "-",
    ]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("D6,6,") && rows[0].ends_with(",true,2"));
    assert!(rows[1].starts_with("D8,8,") && rows[1].contains(",false,0"));
}

#[test]
fn scan_zm_family() {
    let out = grouplat(&[
        "scan",
        "--max-order",
        "21",
        "--families",
        "zm",
        "--json",
        "-",
    ]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let zm = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["spec"] == "ZM(7,3,2)")
        .expect("ZM(7,3,2) scanned");
    assert_eq!(zm["in_c"], true);
}

#[test]
fn verify_single_suite_table() {
    let out = grouplat(&["verify", "theorem9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn closed_stdout_is_not_an_error() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_grouplat"))
        .args(["build", "S5", "--table"])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdout.take());
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(
        out.stderr.is_empty(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
