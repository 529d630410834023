//! Invariant suites run per diagram by the `verify` command.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::genseries::{jt_det_e, jt_det_h, verify_he, verify_pseudo_antisym};
use crate::hpaths::{enumerate_p1, enumerate_phv, weighted_sum};
use crate::regions::{
    dual_half, enumerate_p, enumerate_p2, epsilon, find_region, project, regions, unit_table, unit_witnesses,
    RegionKind, Side, Unit,
};
use crate::tableaux::{
    check_e, check_e2c, check_e_prime, enumerate_tab_hv, epaths_of, from_tableau, ii_prime_regions, tab_sum,
    to_tableau,
};
use crate::weightring::psi;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Determinants,
    Paths,
    Regions,
    Tableaux,
    All,
}

impl Suite {
    pub fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Determinants, Suite::Paths, Suite::Regions, Suite::Tableaux],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "determinants" => Suite::Determinants,
            "paths" => Suite::Paths,
            "regions" => Suite::Regions,
            "tableaux" => Suite::Tableaux,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Determinants => "determinants",
            Suite::Paths => "paths",
            Suite::Regions => "regions",
            Suite::Tableaux => "tableaux",
            Suite::All => "all",
        })
    }
}

/// A failed identity with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub suite: Suite,
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.suite, self.check, self.detail)
    }
}

/// Counters gathered while checking one diagram.
pub type Counts = Vec<(&'static str, usize)>;

fn fail(suite: Suite, check: &'static str, detail: impl Into<String>) -> Failure {
    Failure {
        suite,
        check,
        detail: detail.into(),
    }
}

fn psi_same(a: &crate::Polynomial, b: &crate::Polynomial, n: u32) -> bool {
    matches!((psi(a, n), psi(b, n)), (Ok(x), Ok(y)) if x == y)
}

/// Series-level checks that do not depend on a diagram.
pub fn global_checks(n: u32, suite: Suite) -> std::result::Result<(), Failure> {
    if suite.parts().contains(&Suite::Determinants) {
        if !verify_he(n, 2 * n as usize + 3) {
            return Err(fail(Suite::Determinants, "HE = 1", format!("n = {n}")));
        }
        if !verify_pseudo_antisym(n) {
            return Err(fail(Suite::Determinants, "pseudo-antisymmetry", format!("n = {n}")));
        }
    }
    Ok(())
}

pub fn check_diagram(d: &SkewDiagram, n: u32, suite: Suite) -> std::result::Result<Counts, Failure> {
    let mut counts = Counts::new();
    for s in suite.parts() {
        match s {
            Suite::Determinants => determinants(d, n, &mut counts)?,
            Suite::Paths => paths(d, n, &mut counts)?,
            Suite::Regions => region_suite(d, n, &mut counts)?,
            Suite::Tableaux => tableaux(d, n, &mut counts)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(counts)
}

fn determinants(d: &SkewDiagram, n: u32, counts: &mut Counts) -> std::result::Result<(), Failure> {
    let h = jt_det_h(d, n);
    let e = jt_det_e(d, n);
    if !psi_same(&h, &e, n) {
        return Err(fail(Suite::Determinants, "det_h = det_e", format!("det_h = {h}\ndet_e = {e}")));
    }
    counts.push(("terms", h.num_terms()));
    Ok(())
}

fn paths(d: &SkewDiagram, n: u32, counts: &mut Counts) -> std::result::Result<(), Failure> {
    let det = jt_det_h(d, n);
    let p1 = enumerate_p1(d, n);
    let signed = weighted_sum(p1.iter(), true);
    if !psi_same(&det, &signed, n) {
        return Err(fail(Suite::Paths, "det_h = signed P1", format!("det_h = {det}\nsigned = {signed}")));
    }
    let p2 = enumerate_p2(d, n).map_err(|e| fail(Suite::Paths, "P2", e.to_string()))?;
    let p = enumerate_p(d, n).map_err(|e| fail(Suite::Paths, "P", e.to_string()))?;
    let s2 = weighted_sum(p2.iter(), false);
    let sp = weighted_sum(p.iter(), false);
    if !psi_same(&det, &s2, n) {
        return Err(fail(Suite::Paths, "det_h = P2 sum", format!("P2 sum = {s2}")));
    }
    if !psi_same(&det, &sp, n) {
        return Err(fail(Suite::Paths, "det_h = P sum", format!("P sum = {sp}")));
    }
    if p2.len() != p.len() {
        return Err(fail(Suite::Paths, "|P2| = |P|", format!("{} vs {}", p2.len(), p.len())));
    }
    counts.extend([("p1", p1.len()), ("p2", p2.len()), ("p", p.len())]);
    Ok(())
}

fn region_suite(d: &SkewDiagram, n: u32, counts: &mut Counts) -> std::result::Result<(), Failure> {
    let s = Suite::Regions;
    let mut total = 0;
    for p in enumerate_phv(d, n) {
        let h = project(&p);
        let show = || p.to_string();
        if !h.in_h(d) {
            return Err(fail(s, "projection lies in H", show()));
        }
        if !h.endpoints_ordered() {
            return Err(fail(s, "endpoint inequalities", show()));
        }
        if !dual_half(&h).is_consistent() {
            return Err(fail(s, "dual half-pair", show()));
        }
        let rs = regions(&h);
        for v in &rs {
            total += 1;
            if !v.is_self_dual() {
                return Err(fail(s, "V* = V", show()));
            }
            let e = epsilon(&h, v).map_err(|e| fail(s, "epsilon", e.to_string()))?;
            if !e.in_h(d) {
                return Err(fail(s, "epsilon membership", show()));
            }
            let Some(w) = find_region(&e, v.kind.other(), &v.units) else {
                return Err(fail(s, "epsilon swaps I and II", show()));
            };
            if epsilon(&e, &w).ok().as_ref() != Some(&h) {
                return Err(fail(s, "epsilon involution", show()));
            }
        }
        let t = to_tableau(d, n, &p).map_err(|e| fail(s, "tableau", e.to_string()))?;
        let ep = epaths_of(&t).map_err(|e| fail(s, "e-paths", e.to_string()))?;
        let ii: Vec<BTreeSet<Unit>> = rs
            .into_iter()
            .filter(|v| v.kind == RegionKind::II)
            .map(|v| v.units)
            .collect();
        if ii != ii_prime_regions(&ep) {
            return Err(fail(s, "II-regions = II'-regions", show()));
        }
        let prime_units = ep.units();
        if prime_units.iter().any(|u| unit_witnesses(&h, *u).two.is_empty()) {
            return Err(fail(s, "II'-units are II-units", show()));
        }
        let in_prime_region: BTreeSet<Unit> = ii.iter().flatten().copied().collect();
        for (u, w) in unit_table(&h) {
            for &i in &w.two {
                let r = u.r as usize;
                let inner = match u.side {
                    Side::Plus => r < i && i < h.l(),
                    Side::Minus => 0 < i && i + r < h.l(),
                };
                if inner && !prime_units.contains(&u) {
                    return Err(fail(s, "inner II-units are II'-units", show()));
                }
                if !inner && (in_prime_region.contains(&u) || u.neighbours(n).iter().any(|v| in_prime_region.contains(v))) {
                    return Err(fail(s, "outer II-units avoid II'-regions", show()));
                }
            }
        }
    }
    counts.push(("regions", total));
    Ok(())
}

fn tableaux(d: &SkewDiagram, n: u32, counts: &mut Counts) -> std::result::Result<(), Failure> {
    let s = Suite::Tableaux;
    let phv = enumerate_phv(d, n);
    let thv = enumerate_tab_hv(d, n);
    if phv.len() != thv.len() {
        return Err(fail(s, "|Tab_HV| = |P_HV|", format!("{} vs {}", thv.len(), phv.len())));
    }
    let mut admitted = 0;
    for t in &thv {
        let p = from_tableau(t).map_err(|e| fail(s, "bijection", format!("{t}: {e}")))?;
        if to_tableau(d, n, &p).ok().as_ref() != Some(t) {
            return Err(fail(s, "bijection", t.to_string()));
        }
        let e = check_e(t).map_err(|e| fail(s, "E", e.to_string()))?;
        let ep = check_e_prime(t);
        if e != ep {
            return Err(fail(s, "E = E'", format!("{t}: E = {e}, E' = {ep}")));
        }
        if d.columns() <= 2 && check_e2c(t).ok() != Some(ep) {
            return Err(fail(s, "E-2C = E'", t.to_string()));
        }
        admitted += ep as usize;
    }
    let det = jt_det_h(d, n);
    let sum = tab_sum(d, n).map_err(|e| fail(s, "Tab", e.to_string()))?;
    if !psi_same(&det, &sum, n) {
        return Err(fail(s, "det_h = Tab sum", format!("Tab sum = {sum}")));
    }
    counts.extend([("tab_hv", thv.len()), ("tab", admitted)]);
    Ok(())
}
