//! Lower/upper half-paths, their duals, I- and II-units, regions and their
//! parity, the expansion/folding deformation, and the positive path sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::hpaths::{end_x, enumerate_p1, enumerate_phv, start_x, PathTuple};

/// Stand-in for +∞ in profiles and duals.
pub const POS_INF: i64 = 1 << 40;
/// Stand-in for -∞ in profiles and duals.
pub const NEG_INF: i64 = -(1 << 40);

fn is_finite(v: i64) -> bool {
    v > NEG_INF && v < POS_INF
}

/// An l-tuple of lower paths α and an l-tuple of upper paths β.
///
/// `alphas[i][r]` is α_{i+1}(-r) and `betas[i][r]` is β_{i+1}(r), for r = 0..=n+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPair {
    n: u32,
    alphas: Vec<Vec<i64>>,
    betas: Vec<Vec<i64>>,
}

impl HalfPair {
    pub fn new(n: u32, alphas: Vec<Vec<i64>>, betas: Vec<Vec<i64>>) -> Result<Self> {
        let h = HalfPair { n, alphas, betas };
        if h.alphas.len() != h.betas.len() {
            return Err(Error::Parse("alpha and beta tuples differ in length".into()));
        }
        let len = n as usize + 2;
        if h.alphas.iter().chain(&h.betas).any(|v| v.len() != len) {
            return Err(Error::Parse(format!("profiles need {len} entries")));
        }
        if !h.profiles_valid() {
            return Err(Error::Parse("profile is not a lower/upper path".into()));
        }
        Ok(h)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> usize {
        self.alphas.len()
    }

    /// α_i(-r) for 1-based i; +∞ outside 1..=l.
    pub fn alpha(&self, i: usize, r: u32) -> i64 {
        if i == 0 || i > self.l() {
            POS_INF
        } else {
            self.alphas[i - 1][r as usize]
        }
    }

    /// β_i(r) for 1-based i; -∞ outside 1..=l.
    pub fn beta(&self, i: usize, r: u32) -> i64 {
        if i == 0 || i > self.l() {
            NEG_INF
        } else {
            self.betas[i - 1][r as usize]
        }
    }

    /// α*_i(r); heights above n repeat the value at n.
    pub fn alpha_star(&self, i: usize, r: u32) -> i64 {
        let r = r.min(self.n);
        if i <= r as usize || i - (r as usize) > self.l() {
            POS_INF
        } else {
            self.alpha(i - r as usize, r) - 1 - r as i64
        }
    }

    /// β*_i(-r); depths below -n repeat the value at -n.
    pub fn beta_star(&self, i: usize, r: u32) -> i64 {
        let r = r.min(self.n);
        let j = i + r as usize;
        if i == 0 || j > self.l() {
            NEG_INF
        } else {
            self.beta(j, r) + 1 + r as i64
        }
    }

    pub fn alphas(&self) -> &[Vec<i64>] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Vec<i64>] {
        &self.betas
    }

    fn profiles_valid(&self) -> bool {
        let n = self.n as usize;
        let lower = self
            .alphas
            .iter()
            .all(|a| a.windows(2).all(|w| w[1] <= w[0]) && a[n + 1] == a[n]);
        let upper = self
            .betas
            .iter()
            .all(|b| b.windows(2).all(|w| w[0] <= w[1]) && b[n + 1] == b[n]);
        lower && upper
    }

    /// No two lower paths and no two upper paths share a point.
    pub fn is_nonintersecting(&self) -> bool {
        let n = self.n as usize;
        let l = self.l();
        // Lower path at height -r covers [α(-r), α(-r+1)] for r ≥ 1 and {α(0)} at 0.
        let lower_ok = |a: &[i64], b: &[i64]| {
            // a strictly to the left of b
            (1..=n + 1).all(|r| a[r - 1] < b[r]) && a[0] < b[0]
        };
        // Upper path at height r covers [β(r-1), β(r)] for r ≥ 1 and {β(0)} at 0.
        let upper_ok = |a: &[i64], b: &[i64]| (1..=n + 1).all(|r| a[r] < b[r - 1]) && a[0] < b[0];
        (0..l).all(|i| {
            (i + 1..l).all(|j| {
                lower_ok(&self.alphas[j], &self.alphas[i]) && upper_ok(&self.betas[j], &self.betas[i])
            })
        })
    }

    /// Membership in ℋ(λ/μ): valid profiles, nonintersecting, prescribed endpoints.
    pub fn in_h(&self, d: &SkewDiagram) -> bool {
        let n = self.n as usize;
        self.l() == d.rows()
            && self.profiles_valid()
            && self.is_nonintersecting()
            && (1..=self.l()).all(|i| {
                self.alphas[i - 1][n + 1] == start_x(d, i) && self.betas[i - 1][n + 1] == end_x(d, i)
            })
    }

    /// β_{i+1}(n+1) ≤ α*_i(n+1) and β*_{i+1}(-n-1) ≤ α_i(-n-1) for all i.
    pub fn endpoints_ordered(&self) -> bool {
        let top = self.n + 1;
        (0..=self.l()).all(|i| {
            self.beta(i + 1, top) <= self.alpha_star(i, top)
                && self.beta_star(i + 1, top) <= self.alpha(i, top)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({"n": self.n, "alphas": self.alphas, "betas": self.betas})
    }
}

/// π(p): drop the E-steps and split each path at height 0.
pub fn project(p: &PathTuple) -> HalfPair {
    let l = p.len();
    let n = p.n().unwrap_or(1);
    let m = n as i64;
    let mut alphas = vec![Vec::new(); l];
    let mut betas = vec![Vec::new(); l];
    for (i, path) in p.paths().iter().enumerate() {
        alphas[i] = (0..=m + 1).map(|r| path.left(-r)).collect();
        betas[p.sigma()[i]] = (0..=m + 1).map(|r| path.right(r)).collect();
    }
    HalfPair { n, alphas, betas }
}

/// The dual (α*; β*) as explicit tables with sentinels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duals {
    /// `alpha_star[i][r]` = α*_i(r), i = 0..=l, r = 0..=n+1.
    pub alpha_star: Vec<Vec<i64>>,
    /// `beta_star[i][r]` = β*_i(-r), i = 0..=l+1, r = 0..=n+1.
    pub beta_star: Vec<Vec<i64>>,
}

impl Duals {
    /// Upper paths α* and lower paths β* are staircases and nonintersecting,
    /// ignoring infinite entries.
    pub fn is_consistent(&self) -> bool {
        let mono_a = self
            .alpha_star
            .iter()
            .all(|a| a.windows(2).all(|w| w[0] <= w[1]));
        let mono_b = self
            .beta_star
            .iter()
            .all(|b| b.windows(2).all(|w| w[1] <= w[0]));
        // α*_{i+1} runs left of α*_i and β*_{i+1} left of β*_i.
        let apart = |left: &[i64], right: &[i64], upper: bool| {
            (0..left.len()).all(|r| {
                let (a, b) = match (r, upper) {
                    (0, _) => (left[0], right[0]),
                    (_, true) => (left[r], right[r - 1]),
                    (_, false) => (left[r - 1], right[r]),
                };
                !is_finite(a) || !is_finite(b) || a < b
            })
        };
        let sep_a = self.alpha_star.windows(2).all(|w| apart(&w[1], &w[0], true));
        let sep_b = self.beta_star.windows(2).all(|w| apart(&w[1], &w[0], false));
        mono_a && mono_b && sep_a && sep_b
    }
}

pub fn dual_half(h: &HalfPair) -> Duals {
    let top = h.n + 1;
    Duals {
        alpha_star: (0..=h.l())
            .map(|i| (0..=top).map(|r| h.alpha_star(i, r)).collect())
            .collect(),
        beta_star: (0..=h.l() + 1)
            .map(|i| (0..=top).map(|r| h.beta_star(i, r)).collect())
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

/// A unit square. In S₊ it spans heights r..r+1; in S₋ it spans -r-1..-r.
/// `x` is the horizontal position of its left edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit {
    pub side: Side,
    pub x: i64,
    pub r: u32,
}

impl Unit {
    pub fn plus(x: i64, r: u32) -> Self {
        Unit { side: Side::Plus, x, r }
    }

    pub fn minus(x: i64, r: u32) -> Self {
        Unit { side: Side::Minus, x, r }
    }

    /// Height of the lower-left corner in the plane.
    fn floor(self) -> i64 {
        match self.side {
            Side::Plus => self.r as i64,
            Side::Minus => -(self.r as i64) - 1,
        }
    }

    fn at(x: i64, floor: i64) -> Self {
        if floor >= 0 {
            Unit::plus(x, floor as u32)
        } else {
            Unit::minus(x, (-floor - 1) as u32)
        }
    }

    /// Units whose vertex set contains this unit's upper-left or lower-right
    /// vertex, or which contain one of theirs at one of this unit's vertices.
    pub fn neighbours(self, n: u32) -> Vec<Unit> {
        let (x, y) = (self.x, self.floor());
        let bound = n as i64 + 1;
        [(-1, 0), (1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)]
            .iter()
            .map(|&(dx, dy)| (x + dx, y + dy))
            .filter(|&(_, fy)| fy >= -bound && fy < bound)
            .map(|(fx, fy)| Unit::at(fx, fy))
            .collect()
    }

    pub fn is_adjacent(self, other: Unit, n: u32) -> bool {
        self.neighbours(n).contains(&other)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Plus => "+",
            Side::Minus => "-",
        };
        write!(f, "S{s}({},{})", self.x, self.r)
    }
}

pub fn unit_dual(u: Unit) -> Unit {
    match u.side {
        Side::Plus => Unit::minus(u.x + 1 + u.r as i64, u.r),
        Side::Minus => Unit::plus(u.x - 1 - u.r as i64, u.r),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitClass {
    None,
    I,
    II,
    BoundaryII,
}

/// The indices i for which a unit satisfies the I- or II-inequalities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub one: Vec<usize>,
    pub two: Vec<usize>,
    pub boundary: bool,
}

impl Witnesses {
    pub fn class(&self) -> UnitClass {
        if !self.two.is_empty() {
            if self.boundary {
                UnitClass::BoundaryII
            } else {
                UnitClass::II
            }
        } else if !self.one.is_empty() {
            UnitClass::I
        } else {
            UnitClass::None
        }
    }
}

fn witnesses_k(h: &HalfPair, u: Unit, k: usize) -> Witnesses {
    let l = h.l();
    let n = h.n;
    let r = u.r;
    let (a, a1) = (u.x, u.x + 1);
    let mut w = Witnesses::default();
    for i in 0..=l {
        let (lo_one, hi_one) = match u.side {
            Side::Plus => (h.alpha_star(i, r), h.beta(i + k, r)),
            Side::Minus => (h.alpha(i, r), h.beta_star(i + k, r)),
        };
        if lo_one <= a && a1 <= hi_one {
            w.one.push(i);
        }
        if hi_one <= a && a1 <= lo_one {
            w.two.push(i);
            let boundary = match u.side {
                Side::Plus => i <= r as usize || i + k > l || r == n,
                Side::Minus => i == 0 || i + k + r as usize > l || r == n,
            };
            w.boundary |= boundary;
        }
    }
    w
}

pub fn unit_witnesses(h: &HalfPair, u: Unit) -> Witnesses {
    witnesses_k(h, u, 1)
}

pub fn classify_unit(h: &HalfPair, u: Unit) -> UnitClass {
    witnesses_k(h, u, 1).class()
}

/// Classification with respect to I_k/II_k-units; `k` must lie in 1..=l-1.
pub fn classify_unit_k(h: &HalfPair, u: Unit, k: usize) -> Result<UnitClass> {
    if k == 0 || k >= h.l() {
        return Err(Error::IndexOutOfRange {
            k,
            max: h.l().saturating_sub(1),
        });
    }
    Ok(witnesses_k(h, u, k).class())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionKind {
    I,
    II,
}

impl RegionKind {
    pub fn other(self) -> Self {
        match self {
            RegionKind::I => RegionKind::II,
            RegionKind::II => RegionKind::I,
        }
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionKind::I => "I",
            RegionKind::II => "II",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub units: BTreeSet<Unit>,
    pub parity_count: usize,
}

impl Region {
    pub fn is_odd(&self) -> bool {
        self.parity_count % 2 == 1
    }

    pub fn is_self_dual(&self) -> bool {
        self.units.iter().all(|&u| self.units.contains(&unit_dual(u)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.to_string(),
            "n_v": self.parity_count,
            "odd": self.is_odd(),
            "units": self.units.iter().map(|u| json!([
                match u.side { Side::Plus => "+", Side::Minus => "-" },
                u.x,
                u.r,
            ])).collect::<Vec<_>>(),
        })
    }
}

/// Every unit with a nonempty classification, within a window wide enough to
/// contain all finite features.
pub fn unit_table(h: &HalfPair) -> BTreeMap<Unit, Witnesses> {
    let d = dual_half(h);
    let finite: Vec<i64> = h
        .alphas
        .iter()
        .chain(&h.betas)
        .chain(&d.alpha_star)
        .chain(&d.beta_star)
        .flatten()
        .copied()
        .filter(|&v| is_finite(v))
        .collect();
    let mut table = BTreeMap::new();
    let (Some(&lo), Some(&hi)) = (finite.iter().min(), finite.iter().max()) else {
        return table;
    };
    for side in [Side::Plus, Side::Minus] {
        for r in 0..=h.n {
            for x in lo - 2..=hi + 2 {
                let u = Unit { side, x, r };
                let w = unit_witnesses(h, u);
                if !w.one.is_empty() || !w.two.is_empty() {
                    table.insert(u, w);
                }
            }
        }
    }
    table
}

pub(crate) fn components(units: &BTreeSet<Unit>, n: u32) -> Vec<BTreeSet<Unit>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in units {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            comp.insert(u);
            for v in u.neighbours(n) {
                if units.contains(&v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// All I- and II-regions, I-regions first, each kind ordered by smallest unit.
pub fn regions(h: &HalfPair) -> Vec<Region> {
    let table = unit_table(h);
    regions_from_table(h, &table)
}

fn regions_from_table(h: &HalfPair, table: &BTreeMap<Unit, Witnesses>) -> Vec<Region> {
    let mut out = Vec::new();
    for kind in [RegionKind::I, RegionKind::II] {
        let units: BTreeSet<Unit> = table
            .iter()
            .filter(|(_, w)| match kind {
                RegionKind::I => !w.one.is_empty(),
                RegionKind::II => !w.two.is_empty(),
            })
            .map(|(&u, _)| u)
            .collect();
        for comp in components(&units, h.n) {
            let touches_zero = comp.iter().any(|u| u.r == 0);
            let has_boundary = kind == RegionKind::II && comp.iter().any(|u| table[u].boundary);
            if touches_zero && !has_boundary {
                let parity_count = parity_count(h, table, &comp, kind);
                out.push(Region {
                    kind,
                    units: comp,
                    parity_count,
                });
            }
        }
    }
    out
}

/// n(V): even overlaps (I) or even holes (II) among the pairs (α_i, β_{i+1})
/// that a height-0 unit of V witnesses.
fn parity_count(h: &HalfPair, table: &BTreeMap<Unit, Witnesses>, comp: &BTreeSet<Unit>, kind: RegionKind) -> usize {
    (1..h.l())
        .filter(|&i| {
            let gap = h.alpha(i, 0) - h.beta(i + 1, 0);
            let even = gap % 2 == 0;
            let right_sign = match kind {
                RegionKind::I => gap <= 0,
                RegionKind::II => gap > 0,
            };
            even && right_sign
                && comp.iter().filter(|u| u.r == 0).any(|u| {
                    let w = &table[u];
                    match kind {
                        RegionKind::I => w.one.contains(&i),
                        RegionKind::II => w.two.contains(&i),
                    }
                })
        })
        .count()
}

pub fn has_odd_region(h: &HalfPair, kinds: &[RegionKind]) -> bool {
    regions(h)
        .iter()
        .any(|v| kinds.contains(&v.kind) && v.is_odd())
}

/// ε_V: inside V, α_i follows β*_{i+1} and β_{i+1} follows α*_i.
pub fn epsilon(h: &HalfPair, v: &Region) -> Result<HalfPair> {
    let table = unit_table(h);
    if !regions_from_table(h, &table)
        .iter()
        .any(|w| w.kind == v.kind && w.units == v.units)
    {
        return Err(Error::NotARegion);
    }
    let n = h.n as usize;
    let l = h.l();
    let mut out = h.clone();
    for u in &v.units {
        let w = &table[u];
        let idx = match v.kind {
            RegionKind::I => &w.one,
            RegionKind::II => &w.two,
        };
        for &i in idx {
            match u.side {
                Side::Minus if (1..=l).contains(&i) => {
                    out.alphas[i - 1][u.r as usize] = h.beta_star(i + 1, u.r);
                }
                Side::Plus if i < l => {
                    out.betas[i][u.r as usize] = h.alpha_star(i, u.r);
                }
                _ => {}
            }
        }
    }
    for a in out.alphas.iter_mut().chain(out.betas.iter_mut()) {
        a[n + 1] = a[n];
    }
    Ok(out)
}

/// The region of `h` with the given kind and unit set, if any.
pub fn find_region(h: &HalfPair, kind: RegionKind, units: &BTreeSet<Unit>) -> Option<Region> {
    regions(h)
        .into_iter()
        .find(|r| r.kind == kind && &r.units == units)
}

/// P₂: tuples of P₁ without an odd I- or II-region.
pub fn enumerate_p2(d: &SkewDiagram, n: u32) -> Result<Vec<PathTuple>> {
    d.require_positivity(n)?;
    Ok(enumerate_p1(d, n)
        .into_iter()
        .filter(|p| !has_odd_region(&project(p), &[RegionKind::I, RegionKind::II]))
        .collect())
}

/// P: tuples over σ = id with no ordinarily intersecting adjacent pair and no
/// odd II-region.
pub fn enumerate_p(d: &SkewDiagram, n: u32) -> Result<Vec<PathTuple>> {
    d.require_positivity(n)?;
    Ok(enumerate_phv(d, n)
        .into_iter()
        .filter(|p| !has_odd_region(&project(p), &[RegionKind::II]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpaths::{enumerate_paths, Path};

    fn column_tuple() -> (SkewDiagram, PathTuple) {
        // λ = (1,1), n = 2: p₁ steps east at height -1 from x=0, p₂ at height 1 from x=-1.
        let d = SkewDiagram::parse("1,1", "").unwrap();
        let p1 = enumerate_paths(2, 0, 1)
            .into_iter()
            .find(|p| p.e_steps() == vec![(0, -1)])
            .unwrap();
        let p2 = enumerate_paths(2, -1, 0)
            .into_iter()
            .find(|p| p.e_steps() == vec![(-1, 1)])
            .unwrap();
        (d, PathTuple::new(vec![p1, p2], vec![0, 1]))
    }

    #[test]
    fn projection_of_vertical_tuple() {
        let d = SkewDiagram::parse("2,1", "1").unwrap();
        let t = PathTuple::new(vec![Path::vertical(2, 1), Path::vertical(2, 0)], vec![0, 1]);
        let h = project(&t);
        assert_eq!(h.alphas()[0], vec![1; 4]);
        assert_eq!(h.betas()[1], vec![0; 4]);
        assert!(h.in_h(&SkewDiagram::parse("1,1", "1,1").unwrap()));
        assert!(regions(&h).is_empty());
        assert!(!h.in_h(&d));
    }

    #[test]
    fn projection_keeps_lower_steps() {
        let p = enumerate_paths(2, 0, 1)
            .into_iter()
            .find(|p| p.e_steps() == vec![(0, -1)])
            .unwrap();
        let h = project(&PathTuple::new(vec![p], vec![0]));
        assert_eq!(h.alphas()[0], vec![1, 0, 0, 0]);
        assert_eq!(h.betas()[0], vec![1; 4]);
    }

    #[test]
    fn duals() {
        let (_, t) = column_tuple();
        let h = project(&t);
        assert_eq!(h.alpha_star(1, 0), h.alpha(1, 0) - 1);
        assert_eq!(h.alpha_star(1, 1), POS_INF);
        assert_eq!(h.alpha_star(2, 1), h.alpha(1, 1) - 2);
        let single = project(&PathTuple::new(vec![Path::vertical(2, 0)], vec![0]));
        assert_eq!(single.beta_star(1, 1), NEG_INF);
        assert_eq!(single.beta_star(1, 0), 1);
        assert!(dual_half(&h).is_consistent());
    }

    #[test]
    fn unit_duals() {
        assert_eq!(unit_dual(Unit::plus(0, 0)), Unit::minus(1, 0));
        assert_eq!(unit_dual(Unit::plus(0, 2)), Unit::minus(3, 2));
        for u in [Unit::plus(-3, 1), Unit::minus(4, 2)] {
            assert_eq!(unit_dual(unit_dual(u)), u);
        }
    }

    #[test]
    fn adjacency() {
        let u = Unit::plus(0, 1);
        assert!(u.is_adjacent(Unit::plus(-1, 2), 3));
        assert!(u.is_adjacent(Unit::plus(1, 0), 3));
        assert!(u.is_adjacent(Unit::plus(1, 1), 3));
        assert!(!u.is_adjacent(Unit::plus(1, 2), 3));
        assert!(!u.is_adjacent(Unit::plus(-1, 0), 3));
        // across height 0
        assert!(Unit::plus(0, 0).is_adjacent(Unit::minus(0, 0), 2));
        assert!(Unit::plus(0, 0).is_adjacent(Unit::minus(1, 0), 2));
        assert!(!Unit::plus(0, 0).is_adjacent(Unit::minus(-1, 0), 2));
        for v in u.neighbours(3) {
            assert!(v.is_adjacent(u, 3));
        }
    }

    #[test]
    fn column_instance_has_odd_region() {
        let (d, t) = column_tuple();
        let h = project(&t);
        assert!(h.in_h(&d));
        assert_eq!(h.alpha(1, 0) - h.beta(2, 0), 2);
        let x = h.beta(2, 0);
        assert_eq!(classify_unit(&h, Unit::plus(x, 0)), UnitClass::II);
        let rs = regions(&h);
        assert_eq!(rs.len(), 1);
        let v = &rs[0];
        assert_eq!(v.kind, RegionKind::II);
        assert_eq!(v.parity_count, 1);
        assert!(v.is_self_dual());
        assert_eq!(
            v.units.iter().copied().collect::<Vec<_>>(),
            vec![Unit::plus(-1, 0), Unit::minus(0, 0)]
        );
        assert!(!v.to_json()["units"].as_array().unwrap().is_empty());
    }

    #[test]
    fn boundary_at_top_band() {
        let (_, t) = column_tuple();
        let h = project(&t);
        for x in -8..8 {
            for side in [Side::Plus, Side::Minus] {
                let u = Unit { side, x, r: 2 };
                let w = unit_witnesses(&h, u);
                if !w.two.is_empty() {
                    assert!(w.boundary);
                }
            }
        }
    }

    #[test]
    fn epsilon_round_trip() {
        let (d, t) = column_tuple();
        let h = project(&t);
        let v = regions(&h).remove(0);
        let folded = epsilon(&h, &v).unwrap();
        assert!(folded.in_h(&d));
        let back = find_region(&folded, RegionKind::I, &v.units).expect("I-region after folding");
        assert_eq!(epsilon(&folded, &back).unwrap(), h);
        let fake = Region {
            kind: RegionKind::I,
            units: v.units.clone(),
            parity_count: 0,
        };
        assert!(matches!(epsilon(&h, &fake), Err(Error::NotARegion)));
    }

    #[test]
    fn k_units() {
        let (_, t) = column_tuple();
        let h = project(&t);
        for x in -6..6 {
            for r in 0..=2 {
                for u in [Unit::plus(x, r), Unit::minus(x, r)] {
                    assert_eq!(classify_unit_k(&h, u, 1).unwrap(), classify_unit(&h, u));
                }
            }
        }
        assert!(classify_unit_k(&h, Unit::plus(0, 0), 2).is_err());
        assert!(classify_unit_k(&h, Unit::plus(0, 0), 0).is_err());
    }

    #[test]
    fn small_positive_sets() {
        let one = SkewDiagram::parse("1", "").unwrap();
        assert_eq!(enumerate_p2(&one, 2).unwrap().len(), 4);
        assert_eq!(enumerate_p(&one, 2).unwrap().len(), 4);
        let col = SkewDiagram::parse("1,1", "").unwrap();
        assert_eq!(enumerate_p(&col, 2).unwrap().len(), 5);
        let empty = SkewDiagram::parse("", "").unwrap();
        assert_eq!(enumerate_p(&empty, 2).unwrap().len(), 1);
        let deep = SkewDiagram::parse("1,1,1,1", "").unwrap();
        assert!(matches!(enumerate_p(&deep, 2), Err(Error::Positivity { .. })));
    }
}
