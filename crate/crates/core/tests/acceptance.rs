//! Acceptance criteria, one test each. Every test writes a single PASS/FAIL
//! line straight to stdout so it shows up without --nocapture.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;

use cjt::genseries::{e_coeff, h_coeff, jt_det_e, jt_det_h, verify_he, verify_pseudo_antisym};
use cjt::hpaths::{enumerate_p1, enumerate_phv, weighted_sum};
use cjt::regions::{
    dual_half, enumerate_p, enumerate_p2, epsilon, find_region, project, regions, RegionKind, Unit,
};
use cjt::tableaux::{
    check_e, check_e2c, check_e_prime, enumerate_tab, enumerate_tab_hv, epaths_of, ii_prime_regions, tab_sum,
    to_tableau, Tableau,
};
use cjt::universe::{positive_skew_diagrams, skew_diagrams};
use cjt::{psi, Letter, Monomial, Partition, Polynomial, SkewDiagram, Variable};

fn report(id: u32, name: &str, failures: &[String], start: Instant) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "{status} criterion {id}: {name} ({} failures, {:.2} s)",
        failures.len(),
        start.elapsed().as_secs_f64()
    )
    .unwrap();
    for f in failures.iter().take(5) {
        writeln!(out, "    {f}").unwrap();
    }
    assert!(failures.is_empty(), "criterion {id} failed");
}

fn same(a: &Polynomial, b: &Polynomial, n: u32) -> bool {
    psi(a, n).unwrap() == psi(b, n).unwrap()
}

const NS: [u32; 2] = [2, 3];

fn universe() -> Vec<SkewDiagram> {
    skew_diagrams(6, 3, 3)
}

fn positive_universe(n: u32) -> Vec<SkewDiagram> {
    positive_skew_diagrams(n, 6, 3, 3)
}

#[test]
fn criterion_1_generating_functions() {
    let start = Instant::now();
    let failures: Vec<String> = (1..=4)
        .filter(|&n| !verify_he(n, 2 * n as usize + 3))
        .map(|n| format!("HE != 1 for n = {n}"))
        .collect();
    report(1, "H(X)E(-X) = 1 for n = 1..4", &failures, start);
}

#[test]
fn criterion_2_pseudo_antisymmetry() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=4u32 {
        if !verify_pseudo_antisym(n) {
            failures.push(format!("library check fails for n = {n}"));
        }
        let top = 2 * n as i64 + 2;
        for i in 0..=top {
            let lhs = e_coeff(n, top - i, 0);
            let rhs = e_coeff(n, i, -2 * n as i64 + 2 * i - 2).scale(&BigInt::from(-1));
            if !same(&lhs, &rhs, n) {
                failures.push(format!("n = {n}, i = {i}"));
            }
        }
    }
    report(2, "e_{2n+2-i} = -e_i shifted, n <= 4", &failures, start);
}

#[test]
fn criterion_3_determinants_agree() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in NS {
        for d in universe() {
            if !same(&jt_det_h(&d, n), &jt_det_e(&d, n), n) {
                failures.push(format!("n = {n}, {d}"));
            }
        }
    }
    report(3, "h-determinant = e-determinant", &failures, start);
}

#[test]
fn criterion_4_four_way_equality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in NS {
        for d in positive_universe(n) {
            let det = jt_det_h(&d, n);
            let signed = weighted_sum(enumerate_p1(&d, n).iter(), true);
            let p2 = enumerate_p2(&d, n).unwrap();
            let p = enumerate_p(&d, n).unwrap();
            let sums = [
                ("signed P1", signed),
                ("P2", weighted_sum(p2.iter(), false)),
                ("P", weighted_sum(p.iter(), false)),
                ("Tab", tab_sum(&d, n).unwrap()),
            ];
            for (name, s) in &sums {
                if !same(&det, s, n) {
                    failures.push(format!("n = {n}, {d}: det != {name}"));
                }
            }
            if p2.len() != p.len() {
                failures.push(format!("n = {n}, {d}: |P2| = {} but |P| = {}", p2.len(), p.len()));
            }
        }
    }
    report(4, "det = signed P1 = P2 = P = Tab, |P2| = |P|", &failures, start);
}

/// One-cell and one-column sums written out by hand.
fn by_hand_single_cell(n: u32) -> Polynomial {
    let mut p = Polynomial::zero();
    for l in Letter::alphabet(n) {
        p.add_term(Monomial::from_factors([Variable::new(l, 0)]), BigInt::from(1));
    }
    p
}

fn by_hand_column(n: u32, excluded: (Letter, Letter)) -> Polynomial {
    let mut p = Polynomial::zero();
    let alphabet = Letter::alphabet(n);
    for &a in &alphabet {
        for &b in &alphabet {
            if a < b && (a, b) != excluded {
                let m = Monomial::from_factors([Variable::new(a, 0), Variable::new(b, -2)]);
                p.add_term(m, BigInt::from(1));
            }
        }
    }
    p
}

#[test]
fn criterion_5_concrete_counts() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let n = 2;
    let one = SkewDiagram::parse("1", "").unwrap();
    let tabs = enumerate_tab(&one, n).unwrap();
    if tabs.len() != 4 {
        failures.push(format!("|Tab(1)| = {}", tabs.len()));
    }
    let chi = tab_sum(&one, n).unwrap();
    if !same(&chi, &h_coeff(n, 1, 0), n) || !same(&chi, &by_hand_single_cell(n), n) {
        failures.push("chi(1) != h_{1,0}".into());
    }

    let col = SkewDiagram::parse("1,1", "").unwrap();
    let tabs = enumerate_tab(&col, n).unwrap();
    if tabs.len() != 5 {
        failures.push(format!("|Tab(1,1)| = {}", tabs.len()));
    }
    let hv: BTreeSet<String> = enumerate_tab_hv(&col, n).iter().map(|t| t.to_text()).collect();
    let kept: BTreeSet<String> = tabs.iter().map(|t| t.to_text()).collect();
    let excluded: Vec<&String> = hv.difference(&kept).collect();
    if excluded != vec!["2 / 2b"] {
        failures.push(format!("excluded fillings {excluded:?}"));
    }
    let chi = tab_sum(&col, n).unwrap();
    let column_oracle = by_hand_column(n, (Letter::unbarred(2), Letter::barred(2)));
    if !same(&chi, &e_coeff(n, 2, 0), n) || !same(&chi, &column_oracle, n) {
        failures.push("chi(1,1) != e_{2,0}".into());
    }
    report(5, "|Tab| = 4 and 5 with the expected sums", &failures, start);
}

#[test]
fn criterion_6_worked_example() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let empty = Partition::empty();
    let t = Tableau::parse(4, "1,2,2 / 3,4,4 / 4b,4b,3b / 3b,2b,2b", &empty).unwrap();
    let t_prime = Tableau::parse(4, "1,1,2 / 3,4,4 / 4b,4b,3b / 3b,2b,2b", &empty).unwrap();
    if check_e(&t).unwrap() {
        failures.push("check_E accepts T".into());
    }
    if check_e_prime(&t) {
        failures.push("check_E' accepts T".into());
    }
    if !check_e(&t_prime).unwrap() {
        failures.push("check_E rejects T'".into());
    }
    if !check_e_prime(&t_prime) {
        failures.push("check_E' rejects T'".into());
    }
    report(6, "T rejected, T' accepted", &failures, start);
}

#[test]
fn criterion_7_region_structure() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for n in NS {
        for d in positive_universe(n) {
            for p in enumerate_phv(&d, n) {
                let h = project(&p);
                let tag = || format!("n = {n}, {d}, {p}");
                if !h.endpoints_ordered() {
                    failures.push(format!("endpoint inequalities: {}", tag()));
                }
                if !dual_half(&h).is_consistent() {
                    failures.push(format!("duals: {}", tag()));
                }
                let rs = regions(&h);
                for v in &rs {
                    checked += 1;
                    if !v.is_self_dual() {
                        failures.push(format!("V* != V: {}", tag()));
                    }
                    let e = epsilon(&h, v).unwrap();
                    if !e.in_h(&d) {
                        failures.push(format!("epsilon leaves H: {}", tag()));
                        continue;
                    }
                    match find_region(&e, v.kind.other(), &v.units) {
                        None => failures.push(format!("epsilon keeps the kind: {}", tag())),
                        Some(w) => {
                            if epsilon(&e, &w).unwrap() != h {
                                failures.push(format!("epsilon not an involution: {}", tag()));
                            }
                        }
                    }
                }
                let ii: Vec<BTreeSet<Unit>> = rs
                    .into_iter()
                    .filter(|v| v.kind == RegionKind::II)
                    .map(|v| v.units)
                    .collect();
                let t = to_tableau(&d, n, &p).unwrap();
                if ii != ii_prime_regions(&epaths_of(&t).unwrap()) {
                    failures.push(format!("II-regions != II'-regions: {}", tag()));
                }
            }
        }
    }
    assert!(checked > 0);
    report(7, "region suites over P_HV", &failures, start);
}

#[test]
fn criterion_8_rule_equivalences() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut two_column = 0usize;
    for n in NS {
        for d in positive_universe(n) {
            for t in enumerate_tab_hv(&d, n) {
                let e = check_e(&t).unwrap();
                let ep = check_e_prime(&t);
                if e != ep {
                    failures.push(format!("n = {n}, {d}: {t}: E = {e}, E' = {ep}"));
                }
                if d.columns() <= 2 {
                    two_column += 1;
                    if check_e2c(&t).unwrap() != ep {
                        failures.push(format!("n = {n}, {d}: {t}: E-2C != E'"));
                    }
                }
            }
        }
    }
    assert!(two_column > 0);
    report(8, "E = E' and E-2C = E'", &failures, start);
}
