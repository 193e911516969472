//! Named verification suites over a pinned catalog of groups.
//!
//! Each suite produces one [`CaseRecord`] per checked claim, carrying the
//! computed and expected outcome as text plus any witnesses, so a failing
//! case can be diagnosed from the report alone.

use crate::analysis::Analysis;
use crate::error::{Limits, Result};
use crate::group::direct_product;
use crate::numtheory::gcd;
use crate::poset::{breaking_points, interval, PosetKind, PosetView};
use crate::structure::{
    derived_subgroup, frattini, is_cyclic_pgroup_order_ge_p2, omega1, order_p_subgroups_conjugate,
    p_complement, sylow_subgroups,
};
use crate::subgroup::{closure, Subgroup};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Groups whose conjugacy-class poset has breaking points, and groups whose
/// poset has none.
pub const THEOREM1_POSITIVE: &[&str] = &["C4", "C8", "C9", "C25", "C27", "Q8", "Q16", "Q32"];
pub const THEOREM1_NEGATIVE: &[&str] = &[
    "C6",
    "C2xC2",
    "D8",
    "D16",
    "S3",
    "S4",
    "A4",
    "A5",
    "M2^4",
    "M3^3",
    "ZM(7,3,2)",
    "C2xC2xM3^3",
];

/// Every group the suites and property tests sweep over.
pub const CATALOG: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C6",
    "C8",
    "C9",
    "C12",
    "C15",
    "C25",
    "C27",
    "C2xC2",
    "C2xC4",
    "C2xC2xC2",
    "C3xC3",
    "C2xC9",
    "C9xC4",
    "Q8",
    "Q16",
    "Q32",
    "Dic3",
    "Q8xC3",
    "D8",
    "D10",
    "D12",
    "D16",
    "D20",
    "D24",
    "D32",
    "S3",
    "S4",
    "S5",
    "A4",
    "A5",
    "M2^4",
    "M2^5",
    "M3^3",
    "M3^4",
    "SD16",
    "ZM(7,3,2)",
    "ZM(5,4,2)",
    "ZM(13,3,3)",
    "ZM(9,2,8)",
    "C2xC2xM3^3",
    "perm:3:(1,2);(1,2,3)",
    "perm:4:(1,2)(3,4);(1,3)(2,4)",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub group: String,
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub witnesses: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub pass: bool,
    pub cases: Vec<CaseRecord>,
}

impl SuiteResult {
    fn new(suite: Suite, cases: Vec<CaseRecord>) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            pass: cases.iter().all(|c| c.pass),
            cases,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem1,
    Corollary3,
    Prop4And5,
    Theorem6,
    Theorem9,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Theorem1,
        Suite::Corollary3,
        Suite::Prop4And5,
        Suite::Theorem6,
        Suite::Theorem9,
    ];

    pub fn run(self, limits: &Limits) -> Result<SuiteResult> {
        match self {
            Suite::Theorem1 => verify_theorem1(&theorem1_catalog(), limits),
            Suite::Corollary3 => verify_corollary3(CATALOG, limits),
            Suite::Prop4And5 => verify_prop4_prop5(limits),
            Suite::Theorem6 => verify_theorem6_and_corollaries(limits),
            Suite::Theorem9 => verify_theorem9(limits),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Theorem1 => "theorem1",
            Suite::Corollary3 => "corollary3",
            Suite::Prop4And5 => "prop4-5",
            Suite::Theorem6 => "theorem6",
            Suite::Theorem9 => "theorem9",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Runs the suites in order; `all` expands to every suite.
pub fn run_suites(suites: &[Suite], limits: &Limits) -> Result<Vec<SuiteResult>> {
    suites.iter().map(|s| s.run(limits)).collect()
}

fn case(
    group: &str,
    claim: &str,
    computed: impl ToString,
    expected: impl ToString,
    witnesses: Vec<String>,
) -> CaseRecord {
    let (computed, expected) = (computed.to_string(), expected.to_string());
    CaseRecord {
        group: group.to_string(),
        claim: claim.to_string(),
        pass: computed == expected,
        computed,
        expected,
        witnesses,
    }
}

fn analyze_all(specs: &[&str], limits: &Limits) -> Result<Vec<Analysis>> {
    specs
        .par_iter()
        .map(|s| Analysis::parse(s, limits))
        .collect()
}

/// Cover re-check from scratch: `[bottom, m] ∪ [n, top]` must be everything.
pub fn revalidate_cover(p: &PosetView, m: usize, n: usize) -> bool {
    let Some(top) = p.top_idx() else {
        return false;
    };
    let (Ok(low), Ok(high)) = (interval(p, p.bottom_idx(), m), interval(p, n, top)) else {
        return false;
    };
    let mut hit = vec![false; p.size()];
    for x in low.into_iter().chain(high) {
        hit[x] = true;
    }
    hit.into_iter().all(|h| h)
}

fn witness_lines(a: &Analysis, m: usize, n: usize) -> Vec<String> {
    let p = a.lbar();
    vec![
        format!("M={} {}", p.label(m), a.describe(a.class_rep(m))),
        format!("N={} {}", p.label(n), a.describe(a.class_rep(n))),
    ]
}

fn subgroup_lines(a: &Analysis, m: &Subgroup, n: &Subgroup) -> Vec<String> {
    vec![
        format!("M={}", a.describe(m)),
        format!("N={}", a.describe(n)),
    ]
}

/// Checks a concrete pair of subgroups as a cover of the class poset, both
/// through the bit-matrix test and by recomputing the two intervals.
fn subgroup_cover_holds(a: &Analysis, m: &Subgroup, n: &Subgroup) -> bool {
    let (Some(mi), Some(ni)) = (a.class_position(m), a.class_position(n)) else {
        return false;
    };
    a.is_class_cover(m, n) && revalidate_cover(a.lbar(), mi, ni)
}

fn class_c_case(a: &Analysis, claim: &str, expected: bool) -> CaseRecord {
    let w = a.class_c_witness(false);
    let lines = w
        .as_ref()
        .map(|w| witness_lines(a, w.m_idx, w.n_idx))
        .unwrap_or_default();
    let revalidated = w
        .as_ref()
        .is_none_or(|w| revalidate_cover(a.lbar(), w.m_idx, w.n_idx));
    case(
        a.group.spec(),
        claim,
        format!("in_C={} revalidated={revalidated}", w.is_some()),
        format!("in_C={expected} revalidated=true"),
        lines,
    )
}

pub fn theorem1_catalog() -> Vec<(&'static str, bool)> {
    THEOREM1_POSITIVE
        .iter()
        .map(|&s| (s, true))
        .chain(THEOREM1_NEGATIVE.iter().map(|&s| (s, false)))
        .collect()
}

/// Breaking points of the class poset exist exactly for cyclic p-groups of
/// order at least p² and generalized quaternion groups; every breaking class
/// is the unique subgroup of its order in a p-group.
pub fn verify_theorem1(catalog: &[(&str, bool)], limits: &Limits) -> Result<SuiteResult> {
    let specs: Vec<&str> = catalog.iter().map(|c| c.0).collect();
    let analyses = analyze_all(&specs, limits)?;
    let mut cases = Vec::new();
    for (a, &(spec, expected)) in analyses.iter().zip(catalog) {
        let p = a.lbar();
        let bps = breaking_points(p);
        let recognized =
            is_cyclic_pgroup_order_ge_p2(&a.group) || a.profile.is_generalized_quaternion;
        let lines = bps
            .iter()
            .map(|&x| format!("{} {}", p.label(x), a.describe(a.class_rep(x))))
            .collect();
        cases.push(case(
            spec,
            "Lbar has breaking points iff cyclic p-group of order >= p^2 or generalized quaternion",
            format!(
                "breaking_points={} recognized={recognized}",
                !bps.is_empty()
            ),
            format!("breaking_points={expected} recognized={expected}"),
            lines,
        ));
        for &x in &bps {
            let rep = a.class_rep(x);
            let same_order = a
                .lattice
                .subgroups()
                .iter()
                .filter(|h| h.order() == rep.order())
                .count();
            cases.push(case(
                spec,
                "a breaking class is the unique subgroup of its order in a p-group",
                format!(
                    "p_group={} subgroups_of_order_{}={same_order} class_size={}",
                    a.profile.is_p_group,
                    rep.order(),
                    p.class_size(x)
                ),
                format!(
                    "p_group=true subgroups_of_order_{}=1 class_size=1",
                    rep.order()
                ),
                vec![a.describe(rep)],
            ));
        }
        if a.profile.is_generalized_quaternion {
            let summary: Vec<String> = bps
                .iter()
                .map(|&x| format!("o{}x{}", p.subgroup_order(x), p.class_size(x)))
                .collect();
            cases.push(case(
                spec,
                "the only breaking class is the unique subgroup of order 2",
                summary.join(","),
                "o2x1",
                Vec::new(),
            ));
        }
    }
    Ok(SuiteResult::new(Suite::Theorem1, cases))
}

/// Breaking-point existence agrees across L, Lbar, C and Cbar.
pub fn verify_corollary3(catalog: &[&str], limits: &Limits) -> Result<SuiteResult> {
    let analyses = analyze_all(catalog, limits)?;
    let cases = analyses
        .iter()
        .map(|a| {
            let flags: Vec<String> = PosetKind::ALL
                .iter()
                .map(|&k| format!("{k}={}", !breaking_points(a.poset(k)).is_empty()))
                .collect();
            let recognized =
                is_cyclic_pgroup_order_ge_p2(&a.group) || a.profile.is_generalized_quaternion;
            let expected: Vec<String> = PosetKind::ALL
                .iter()
                .map(|&k| format!("{k}={recognized}"))
                .collect();
            case(
                a.group.spec(),
                "breaking points exist in all four posets or in none",
                flags.join(" "),
                expected.join(" "),
                Vec::new(),
            )
        })
        .collect();
    Ok(SuiteResult::new(Suite::Corollary3, cases))
}

/// Modular p-groups belong to the class with witnesses `⟨xᵖ, y⟩`, `⟨x^q⟩`;
/// dihedral 2-groups do not.
pub fn verify_prop4_prop5(limits: &Limits) -> Result<SuiteResult> {
    let modular: [(usize, u32); 4] = [(2, 4), (2, 5), (3, 3), (3, 4)];
    let specs: Vec<String> = modular.iter().map(|(p, n)| format!("M{p}^{n}")).collect();
    let spec_refs: Vec<&str> = specs.iter().map(String::as_str).collect();
    let analyses = analyze_all(&spec_refs, limits)?;
    let mut cases = Vec::new();
    for (a, &(p, n)) in analyses.iter().zip(&modular) {
        let g = &a.group;
        let spec = g.spec();
        // Normal forms: x = a¹b⁰ at index p, y = b at index 1.
        let (x, y) = (p, 1);
        let q = p.pow(n - 2);
        let m = closure(g, &[g.pow(x, p), y]);
        let nn = closure(g, &[g.pow(x, q)]);
        cases.push(case(
            spec,
            "M = <x^p, y> and N = <x^q> cover the class poset",
            subgroup_cover_holds(a, &m, &nn),
            true,
            subgroup_lines(a, &m, &nn),
        ));
        cases.push(class_c_case(a, "the cover search finds a witness", true));

        let derived = derived_subgroup(g);
        let om = omega1(g, p)?;
        let phi = frattini(g, &a.lattice);
        let phi_expected = closure(g, &[g.pow(x, p)]);
        let minimal = a.profile.order_p_subgroups[&p];
        cases.push(case(
            spec,
            "|G'| = p, |Omega_1| = p^2, Phi = <x^p> of index p^2, p+1 minimal subgroups",
            format!(
                "derived={} omega1={} frattini_is_x^p={} frattini_index={} minimal={minimal}",
                derived.order(),
                om.order(),
                phi == phi_expected,
                g.order() / phi.order()
            ),
            format!(
                "derived={p} omega1={} frattini_is_x^p=true frattini_index={} minimal={}",
                p * p,
                p * p,
                p + 1
            ),
            vec![
                format!("G'={}", a.describe(&derived)),
                format!("Omega_1={}", a.describe(&om)),
                format!("Phi={}", a.describe(&phi)),
            ],
        ));

        // Every witness with M maximal and N minimal satisfies Ω₁ ⊆ M, N ⊆ Φ.
        let lbar = a.lbar();
        let maximal = a.lattice.maximal();
        let all = a
            .class_c_witness(true)
            .and_then(|w| w.all_pairs)
            .unwrap_or_default();
        let extremal: Vec<(usize, usize)> = all
            .into_iter()
            .filter(|&(mi, ni)| {
                let m_sub = a.classes.rep(lbar.payload(mi));
                maximal.contains(&m_sub) && lbar.subgroup_order(ni) == p
            })
            .collect();
        let hold = extremal
            .iter()
            .filter(|&&(mi, ni)| om.is_subset(a.class_rep(mi)) && a.class_rep(ni).is_subset(&phi))
            .count();
        let lines = extremal
            .first()
            .map(|&(mi, ni)| witness_lines(a, mi, ni))
            .unwrap_or_default();
        cases.push(case(
            spec,
            "witnesses with M maximal, N minimal have Omega_1 <= M and N <= Phi",
            format!(
                "extremal_pairs_exist={} all_hold={}",
                !extremal.is_empty(),
                hold == extremal.len()
            ),
            "extremal_pairs_exist=true all_hold=true",
            lines,
        ));
    }
    for a in analyze_all(&["D8", "D16", "D32"], limits)? {
        cases.push(class_c_case(
            &a,
            "dihedral 2-groups are not in the class",
            false,
        ));
    }
    Ok(SuiteResult::new(Suite::Prop4And5, cases))
}

/// Groups meeting the hypothesis: solvable, at least two prime divisors,
/// and some prime with all order-p subgroups conjugate.
pub const THEOREM6_HYPOTHESIS: &[&str] = &[
    "S3",
    "D10",
    "D12",
    "D20",
    "D24",
    "Dic3",
    "A4",
    "S4",
    "Q8xC3",
    "ZM(7,3,2)",
    "ZM(5,4,2)",
    "ZM(13,3,3)",
];

pub const ZM_GROUPS: &[&str] = &[
    "C6",
    "C15",
    "C9",
    "ZM(3,2,2)",
    "ZM(7,3,2)",
    "ZM(5,4,2)",
    "ZM(13,3,3)",
    "ZM(9,2,8)",
    "ZM(7,6,3)",
];

pub const DIHEDRAL_ORDERS: &[usize] = &[6, 8, 10, 12, 16, 20, 24, 32];

fn elements_by_label(a: &Analysis, labels: &[&str]) -> Option<Vec<usize>> {
    labels.iter().map(|l| a.group.find_label(l)).collect()
}

pub fn verify_theorem6_and_corollaries(limits: &Limits) -> Result<SuiteResult> {
    let mut cases = Vec::new();

    // (a) the p-complement / order-p witness pair covers the poset.
    for a in analyze_all(THEOREM6_HYPOTHESIS, limits)? {
        let g = &a.group;
        let spec = g.spec();
        let conj_primes: Vec<usize> = a
            .profile
            .primes
            .iter()
            .copied()
            .filter(|&p| order_p_subgroups_conjugate(g, &a.lattice, &a.classes, p) == Ok(true))
            .collect();
        cases.push(case(
            spec,
            "hypothesis: solvable, |pi(G)| >= 2, some prime has all order-p subgroups conjugate",
            format!(
                "solvable={} primes={} conjugate_primes_exist={}",
                a.profile.is_solvable,
                a.profile.primes.len() >= 2,
                !conj_primes.is_empty()
            ),
            "solvable=true primes=true conjugate_primes_exist=true",
            vec![format!("conjugate primes: {conj_primes:?}")],
        ));
        for &p in &conj_primes {
            let n_sub = (0..a.lattice.len()).find(|&i| a.lattice.get(i).order() == p);
            let m_sub = p_complement(g, &a.lattice, p)?;
            let (holds, lines) = match (m_sub, n_sub) {
                (Some(mi), Some(ni)) => {
                    let (m, n) = (a.lattice.get(mi), a.lattice.get(ni));
                    (subgroup_cover_holds(&a, m, n), subgroup_lines(&a, m, n))
                }
                _ => (false, Vec::new()),
            };
            cases.push(case(
                spec,
                &format!(
                    "p = {p}: a {p}-complement M and an order-{p} subgroup N cover the class poset"
                ),
                holds,
                true,
                lines,
            ));
        }
        cases.push(class_c_case(&a, "belongs to the class", true));
    }

    // The explicitly named example witnesses.
    let examples: [(&str, &[&str], &[&str]); 3] = [
        ("S3", &["(1,2)"], &["(1,2,3)"]),
        ("D10", &["a"], &["b"]),
        ("A4", &["(1,2)(3,4)", "(1,3)(2,4)"], &["(1,2,3)"]),
    ];
    for (spec, m_gens, n_gens) in examples {
        let a = Analysis::parse(spec, limits)?;
        let (holds, lines) = match (elements_by_label(&a, m_gens), elements_by_label(&a, n_gens)) {
            (Some(mg), Some(ng)) => {
                let (m, n) = (closure(&a.group, &mg), closure(&a.group, &ng));
                (subgroup_cover_holds(&a, &m, &n), subgroup_lines(&a, &m, &n))
            }
            _ => (false, Vec::new()),
        };
        cases.push(case(
            spec,
            &format!(
                "named witnesses M = <{}>, N = <{}> cover the class poset",
                m_gens.join(", "),
                n_gens.join(", ")
            ),
            holds,
            true,
            lines,
        ));
    }

    // (b) solvability cannot be dropped.
    let a5 = Analysis::parse("A5", limits)?;
    let conj = |p| order_p_subgroups_conjugate(&a5.group, &a5.lattice, &a5.classes, p);
    cases.push(case(
        "A5",
        "order-3 and order-5 subgroups conjugate, yet nonsolvable and not in the class",
        format!(
            "conj3={} conj5={} solvable={} in_C={}",
            conj(3)?,
            conj(5)?,
            a5.profile.is_solvable,
            a5.in_class_c()
        ),
        "conj3=true conj5=true solvable=false in_C=false",
        Vec::new(),
    ));

    // (c) the hypothesis is not necessary.
    let big = Analysis::parse("C2xC2xM3^3", limits)?;
    let conj = |p| order_p_subgroups_conjugate(&big.group, &big.lattice, &big.classes, p);
    cases.push(case(
        big.group.spec(),
        "in the class although no prime has all order-p subgroups conjugate",
        format!(
            "conj2={} conj3={} in_C={}",
            conj(2)?,
            conj(3)?,
            big.in_class_c()
        ),
        "conj2=false conj3=false in_C=true",
        big.class_c_witness(false)
            .map(|w| witness_lines(&big, w.m_idx, w.n_idx))
            .unwrap_or_default(),
    ));

    // Every ZM-group with a proper nontrivial subgroup lies in the class.
    for a in analyze_all(ZM_GROUPS, limits)? {
        let sylows_cyclic = a.profile.primes.iter().all(|&p| {
            sylow_subgroups(&a.group, &a.lattice, p)
                .map(|s| s.iter().all(|&i| is_cyclic_subgroup(&a, a.lattice.get(i))))
                .unwrap_or(false)
        });
        let w = a.class_c_witness(false);
        cases.push(case(
            a.group.spec(),
            "ZM-group (all Sylow subgroups cyclic) belongs to the class",
            format!("sylows_cyclic={sylows_cyclic} in_C={}", w.is_some()),
            "sylows_cyclic=true in_C=true",
            w.map(|w| witness_lines(&a, w.m_idx, w.n_idx))
                .unwrap_or_default(),
        ));
    }

    // (d) dihedral groups of order 2n are in the class iff n is not a power of 2.
    let dihedral: Vec<String> = DIHEDRAL_ORDERS.iter().map(|o| format!("D{o}")).collect();
    let refs: Vec<&str> = dihedral.iter().map(String::as_str).collect();
    for (a, &order) in analyze_all(&refs, limits)?.iter().zip(DIHEDRAL_ORDERS) {
        let n = order / 2;
        cases.push(class_c_case(
            a,
            &format!("dihedral of order {order}: in the class iff {n} is not a power of 2"),
            !n.is_power_of_two(),
        ));
    }
    Ok(SuiteResult::new(Suite::Theorem6, cases))
}

fn is_cyclic_subgroup(a: &Analysis, h: &Subgroup) -> bool {
    h.elems()
        .iter()
        .any(|&x| a.group.element_order(x) == h.order())
}

/// Coprime pairs `(G₁, G₂)` with `G₁` in the class.
pub const THEOREM9_PAIRS: &[(&str, &str)] = &[("M3^3", "C2xC2"), ("Q8", "C3"), ("C9", "C4")];

/// Witnesses `(M, N)` of `G₁` lift to `(M × G₂, N × 1)` in `G₁ × G₂`.
pub fn verify_theorem9(limits: &Limits) -> Result<SuiteResult> {
    let mut cases = Vec::new();
    for &(s1, s2) in THEOREM9_PAIRS {
        let a1 = Analysis::parse(s1, limits)?;
        let g2 = crate::group::build_group(&s2.parse()?, limits)?;
        let coprime = gcd(a1.group.order(), g2.order()) == 1;
        let prod = Analysis::new(direct_product(&a1.group, &g2, limits)?, limits)?;
        let n2 = g2.order();
        let pairs = a1
            .class_c_witness(true)
            .and_then(|w| w.all_pairs)
            .unwrap_or_default();
        let mut lifted_ok = 0;
        for &(mi, ni) in &pairs {
            let m = a1.class_rep(mi);
            let n = a1.class_rep(ni);
            let m_lift = closure(
                &prod.group,
                &m.elems()
                    .iter()
                    .flat_map(|&a| (0..n2).map(move |b| a * n2 + b))
                    .collect::<Vec<_>>(),
            );
            let n_lift = closure(
                &prod.group,
                &n.elems().iter().map(|&a| a * n2).collect::<Vec<_>>(),
            );
            if m_lift.order() == m.order() * n2
                && n_lift.order() == n.order()
                && subgroup_cover_holds(&prod, &m_lift, &n_lift)
            {
                lifted_ok += 1;
            }
        }
        let spec = prod.group.spec().to_string();
        cases.push(case(
            &spec,
            &format!("every witness (M, N) of {s1} lifts to (M x {s2}, N x 1)"),
            format!(
                "coprime={coprime} g1_in_C={} lifted={lifted_ok}/{}",
                !pairs.is_empty(),
                pairs.len()
            ),
            format!(
                "coprime=true g1_in_C=true lifted={}/{}",
                pairs.len(),
                pairs.len()
            ),
            pairs
                .first()
                .map(|&(mi, ni)| witness_lines(&a1, mi, ni))
                .unwrap_or_default(),
        ));
        cases.push(class_c_case(
            &prod,
            "the direct product belongs to the class",
            true,
        ));

        // Trivial second factor: same table, same witness.
        let trivial = crate::group::build_group(&crate::group::GroupSpec::Cyclic(1), limits)?;
        let same = Analysis::new(direct_product(&a1.group, &trivial, limits)?, limits)?;
        let w1 = a1.class_c_witness(false).map(|w| (w.m_idx, w.n_idx));
        let w2 = same.class_c_witness(false).map(|w| (w.m_idx, w.n_idx));
        cases.push(case(
            same.group.spec(),
            "a trivial factor preserves the first witness",
            format!("{w2:?}"),
            format!("{w1:?}"),
            Vec::new(),
        ));
    }
    for (spec, expected) in [("C6", true), ("C2", false), ("C3", false)] {
        let a = Analysis::parse(spec, limits)?;
        cases.push(class_c_case(
            &a,
            "the cyclic group of order 6 is in the class while its Sylow subgroups are not",
            expected,
        ));
    }
    Ok(SuiteResult::new(Suite::Theorem9, cases))
}
