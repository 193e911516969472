//! Serialized outputs: analysis reports (JSON), Hasse diagrams (DOT),
//! scan tables (CSV/JSON) and verification results (JSON).

use crate::analysis::Analysis;
use crate::poset::{breaking_points, hasse_edges, PosetKind, PosetView};
use crate::scan::ScanRow;
use crate::structure::StructureProfile;
use crate::verify::SuiteResult;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSummary {
    pub kind: PosetKind,
    pub elements: usize,
    pub has_top: bool,
    pub breaking_points: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub m_label: String,
    pub n_label: String,
    pub m: Vec<String>,
    pub n: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCResult {
    pub member: bool,
    pub witness: Option<WitnessReport>,
    pub witness_count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: String,
    pub order: usize,
    pub primes: Vec<usize>,
    pub structure: StructureProfile,
    pub n_subgroups: usize,
    pub n_classes: usize,
    pub posets: Vec<PosetSummary>,
    pub class_c: ClassCResult,
    pub timing_us: u64,
}

impl AnalysisReport {
    pub fn new(a: &Analysis, count_witnesses: bool, timing_us: u64) -> Self {
        let posets = PosetKind::ALL
            .iter()
            .map(|&k| {
                let p = a.poset(k);
                PosetSummary {
                    kind: k,
                    elements: p.size(),
                    has_top: p.top_idx().is_some(),
                    breaking_points: breaking_points(p)
                        .into_iter()
                        .map(|x| p.label(x).to_string())
                        .collect(),
                }
            })
            .collect();
        let first = a.class_c_witness(false);
        let witness_count = count_witnesses.then(|| {
            a.class_c_witness(true)
                .and_then(|w| w.all_pairs)
                .map_or(0, |p| p.len())
        });
        let elems = |x: usize| {
            a.class_rep(x)
                .elems()
                .iter()
                .map(|&e| a.group.label(e).to_string())
                .collect()
        };
        let witness = first.map(|w| WitnessReport {
            m_label: a.lbar().label(w.m_idx).to_string(),
            n_label: a.lbar().label(w.n_idx).to_string(),
            m: elems(w.m_idx),
            n: elems(w.n_idx),
        });
        AnalysisReport {
            spec: a.group.spec().to_string(),
            order: a.group.order(),
            primes: a.profile.primes.clone(),
            structure: a.profile.clone(),
            n_subgroups: a.lattice.len(),
            n_classes: a.classes.len(),
            posets,
            class_c: ClassCResult {
                member: witness.is_some(),
                witness,
                witness_count,
            },
            timing_us,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Plain-text summary for terminals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let st = &self.structure;
        let _ = writeln!(s, "group        {}", self.spec);
        let _ = writeln!(s, "order        {}", self.order);
        let _ = writeln!(s, "primes       {:?}", self.primes);
        let _ = writeln!(
            s,
            "flags        abelian={} cyclic={} p_group={} nilpotent={} solvable={} gen_quaternion={}",
            st.is_abelian,
            st.is_cyclic,
            st.is_p_group,
            st.is_nilpotent,
            st.is_solvable,
            st.is_generalized_quaternion
        );
        let _ = writeln!(s, "subgroups    {}", self.n_subgroups);
        let _ = writeln!(s, "classes      {}", self.n_classes);
        for p in &self.posets {
            let bps = if p.breaking_points.is_empty() {
                "-".to_string()
            } else {
                p.breaking_points.join(", ")
            };
            let _ = writeln!(
                s,
                "{:<12} {:>5} elements  breaking points: {bps}",
                format!("poset {}", p.kind),
                p.elements
            );
        }
        let c = &self.class_c;
        let _ = writeln!(s, "in class C   {}", c.member);
        if let Some(w) = &c.witness {
            let _ = writeln!(s, "  M {:<8} {{{}}}", w.m_label, w.m.join(", "));
            let _ = writeln!(s, "  N {:<8} {{{}}}", w.n_label, w.n.join(", "));
        }
        if let Some(n) = c.witness_count {
            let _ = writeln!(s, "witnesses    {n}");
        }
        s
    }
}

/// Hasse diagram in Graphviz syntax, edges from covered to covering element.
pub fn to_dot(p: &PosetView) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", p.kind());
    for x in 0..p.size() {
        let _ = writeln!(s, "  n{x} [label=\"{}\"];", p.label(x));
    }
    for (x, y) in hasse_edges(p) {
        let _ = writeln!(s, "  n{x} -> n{y};");
    }
    s.push_str("}\n");
    s
}

pub const CSV_HEADER: [&str; 10] = [
    "spec",
    "order",
    "n_subgroups",
    "n_classes",
    "bp_L",
    "bp_Lbar",
    "bp_C",
    "bp_Cbar",
    "in_C",
    "witnesses",
];

pub fn write_scan_csv<W: io::Write>(rows: &[ScanRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in rows {
        let in_c = match (r.in_c, &r.skipped) {
            (_, Some(_)) => "skipped".to_string(),
            (v, None) => opt(v.map(|b| b.to_string())),
        };
        w.write_record([
            r.spec.clone(),
            r.order.to_string(),
            opt(r.n_subgroups.map(|v| v.to_string())),
            opt(r.n_classes.map(|v| v.to_string())),
            opt(r.bp_l.map(|v| v.to_string())),
            opt(r.bp_lbar.map(|v| v.to_string())),
            opt(r.bp_c.map(|v| v.to_string())),
            opt(r.bp_cbar.map(|v| v.to_string())),
            in_c,
            opt(r.witnesses.map(|v| v.to_string())),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn new(suites: Vec<SuiteResult>) -> Self {
        VerifyReport {
            pass: suites.iter().all(|s| s.pass),
            suites,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One aligned row per case.
    pub fn to_table(&self) -> String {
        let rows: Vec<[&str; 4]> = self
            .suites
            .iter()
            .flat_map(|s| {
                s.cases.iter().map(move |c| {
                    [
                        if c.pass { "PASS" } else { "FAIL" },
                        s.suite.as_str(),
                        c.group.as_str(),
                        c.claim.as_str(),
                    ]
                })
            })
            .collect();
        let width = |i: usize| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0);
        let (w1, w2) = (width(1), width(2));
        let mut s = String::new();
        let mut flat = self.suites.iter().flat_map(|s| s.cases.iter());
        for r in &rows {
            let c = flat.next().unwrap();
            let _ = writeln!(s, "{}  {:<w1$}  {:<w2$}  {}", r[0], r[1], r[2], r[3]);
            if !c.pass {
                let _ = writeln!(s, "      computed: {}", c.computed);
                let _ = writeln!(s, "      expected: {}", c.expected);
            }
        }
        for suite in &self.suites {
            let passed = suite.cases.iter().filter(|c| c.pass).count();
            let _ = writeln!(
                s,
                "{}: {passed}/{} cases pass",
                suite.suite,
                suite.cases.len()
            );
        }
        s
    }
}
