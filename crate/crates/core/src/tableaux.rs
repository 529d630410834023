//! Tableaux over 1 ≺ … ≺ n ≺ n̄ ≺ … ≺ 1̄, the horizontal and vertical rules,
//! the bijection with path tuples, e-paths, and the extra rule checked either
//! through path regions or through LU-configurations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diagram::{Partition, SkewDiagram};
use crate::error::{Error, Result};
use crate::hpaths::{h_label, start_x, Intersection, Path, PathTuple};
use crate::regions::{components, has_odd_region, project, RegionKind, Side, Unit};
use crate::weightring::{Letter, Monomial, Polynomial, Variable};

/// A filling of a skew diagram. `rows[i]` holds the entries of row i+1 in
/// columns μ_{i+1}+1, …, λ_{i+1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: u32,
    shape: SkewDiagram,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(n: u32, shape: SkewDiagram, rows: Vec<Vec<Letter>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank);
        }
        if rows.len() != shape.rows() {
            return Err(Error::Parse(format!(
                "shape has {} rows but {} were given",
                shape.rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::Parse(format!(
                    "row {} needs {} entries, got {}",
                    i + 1,
                    shape.row_len(i + 1),
                    row.len()
                )));
            }
            for l in row {
                l.check_rank(n)?;
            }
        }
        Ok(Tableau { n, shape, rows })
    }

    /// Parses rows separated by '/' with comma-separated entries, e.g.
    /// "1,2,2 / 3,4,4 / 4b,4b,3b". Row i is placed after μ_i empty cells.
    pub fn parse(n: u32, text: &str, mu: &Partition) -> Result<Self> {
        let mut rows = Vec::new();
        for chunk in text.split('/') {
            let chunk = chunk.trim();
            let row = if chunk.is_empty() {
                Vec::new()
            } else {
                chunk
                    .split(',')
                    .map(|s| s.trim().parse::<Letter>())
                    .collect::<Result<Vec<_>>>()?
            };
            rows.push(row);
        }
        if text.trim().is_empty() {
            rows.clear();
        }
        while rows.len() < mu.len() {
            rows.push(Vec::new());
        }
        let lambda: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| mu.part(i + 1) + r.len())
            .collect();
        let lambda = Partition::new(lambda)?;
        let shape = SkewDiagram::new(lambda, mu.clone())?;
        rows.truncate(shape.rows());
        Tableau::new(n, shape, rows)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Entry at 1-based (row, column), if that cell belongs to the shape.
    pub fn get(&self, i: usize, j: usize) -> Option<Letter> {
        if i == 0 || j == 0 || !self.shape.contains_cell(i, j) {
            return None;
        }
        Some(self.rows[i - 1][j - 1 - self.shape.mu_part(i)])
    }

    /// Entries of column j from top to bottom, with their rows.
    pub fn column(&self, j: usize) -> Vec<(usize, Letter)> {
        match self.shape.column_range(j) {
            Some((top, bottom)) => (top..=bottom).map(|i| (i, self.get(i, j).unwrap())).collect(),
            None => Vec::new(),
        }
    }

    pub fn weight(&self) -> Monomial {
        Monomial::from_factors(self.shape.cells().into_iter().map(|(i, j)| {
            Variable::new(self.get(i, j).unwrap(), 2 * (j as i64 - i as i64))
        }))
    }

    fn n_letter(&self) -> Letter {
        Letter::unbarred(self.n)
    }

    fn nbar(&self) -> Letter {
        Letter::barred(self.n)
    }

    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(" / ")
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(TableauJson::from(self)).expect("plain data")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: TableauJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: u32,
    lambda: Vec<usize>,
    mu: Vec<usize>,
    rows: Vec<Vec<String>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        TableauJson {
            n: t.n,
            lambda: t.shape.lambda().parts().to_vec(),
            mu: t.shape.mu().parts().to_vec(),
            rows: t
                .rows
                .iter()
                .map(|r| r.iter().map(|l| l.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        let shape = SkewDiagram::new(Partition::new(j.lambda)?, Partition::new(j.mu)?)?;
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Letter>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(j.n, shape, rows)
    }
}

/// Rule (H) on every row.
pub fn check_h(t: &Tableau) -> bool {
    let (n, nb) = (t.n_letter(), t.nbar());
    t.rows.iter().all(|row| {
        row.windows(2).all(|w| w[0] <= w[1] || (w[0] == nb && w[1] == n))
            && row
                .windows(3)
                .all(|w| w != [nb, nb, n] && w != [nb, n, n])
    })
}

/// Rule (V) on every vertically adjacent pair.
pub fn check_v(t: &Tableau) -> bool {
    let (n, nb) = (t.n_letter(), t.nbar());
    t.shape.cells().into_iter().all(|(i, j)| {
        let Some(below) = t.get(i + 1, j) else {
            return true;
        };
        let here = t.get(i, j).unwrap();
        here < below
            || (here == n && below == n && t.get(i + 1, j.wrapping_sub(1)) == Some(nb))
            || (here == nb && below == nb && t.get(i, j + 1) == Some(n))
    })
}

/// Height of the E-step behind each entry of a row: letters k ↦ k-n-1,
/// k̄ ↦ n+1-k, and each n̄ immediately followed by n ↦ 0, 0. `None` if the
/// heights are not weakly increasing.
fn row_heights(n: u32, row: &[Letter]) -> Option<Vec<i64>> {
    let (nl, nb) = (Letter::unbarred(n), Letter::barred(n));
    let m = n as i64;
    let mut out = Vec::with_capacity(row.len());
    let mut k = 0;
    while k < row.len() {
        if row[k] == nb && row.get(k + 1) == Some(&nl) {
            out.extend([0, 0]);
            k += 2;
            continue;
        }
        let l = row[k];
        let i = l.index() as i64;
        out.push(if l.is_barred() { m + 1 - i } else { i - m - 1 });
        k += 1;
    }
    out.windows(2).all(|w| w[0] <= w[1]).then_some(out)
}

/// 𝒯_h: row j lists the h-labels of the j-th path.
pub fn to_tableau(d: &SkewDiagram, n: u32, p: &PathTuple) -> Result<Tableau> {
    if p.len() != d.rows() || !p.is_identity() {
        return Err(Error::NotHv("permutation is not the identity".into()));
    }
    if p.has_ordinary_adjacent_pair() {
        return Err(Error::NotHv("adjacent paths intersect ordinarily".into()));
    }
    let rows: Vec<Vec<Letter>> = p
        .paths()
        .iter()
        .map(|q| h_label(q).into_iter().map(|(l, _)| l).collect())
        .collect();
    Tableau::new(n, d.clone(), rows)
}

/// 𝒯_h⁻¹ for a tableau satisfying (H) and (V).
pub fn from_tableau(t: &Tableau) -> Result<PathTuple> {
    if !check_h(t) {
        return Err(Error::RuleViolation("H"));
    }
    if !check_v(t) {
        return Err(Error::RuleViolation("V"));
    }
    let n = t.n;
    let m = n as i64;
    let d = &t.shape;
    let mut paths = Vec::with_capacity(d.rows());
    for (i, row) in t.rows.iter().enumerate() {
        let heights = row_heights(n, row).ok_or(Error::RuleViolation("H"))?;
        let mut counts = vec![0u32; 2 * n as usize + 3];
        for y in heights {
            counts[(y + m + 1) as usize] += 1;
        }
        paths.push(Path::from_counts(n, start_x(d, i + 1), &counts)?);
    }
    let id = (0..paths.len()).collect();
    Ok(PathTuple::new(paths, id))
}

/// Rule (E) through the path picture: no odd II-region.
pub fn check_e(t: &Tableau) -> Result<bool> {
    let p = from_tableau(t)?;
    Ok(!has_odd_region(&project(&p), &[RegionKind::II]))
}

/// Lower and upper e-paths, one pair per column. `gammas[i][r]` is
/// γ_{i+1}(-r) and `deltas[i][r]` is δ_{i+1}(r), for r = 0..=n+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPathPair {
    pub n: u32,
    pub gammas: Vec<Vec<i64>>,
    pub deltas: Vec<Vec<i64>>,
}

impl EPathPair {
    pub fn gamma_star(&self, i: usize, r: u32) -> i64 {
        self.gammas[i - 1][r as usize] - 1 - r as i64
    }

    pub fn delta_star(&self, i: usize, r: u32) -> i64 {
        self.deltas[i - 1][r as usize] + 1 + r as i64
    }

    /// The columns i for which `u` satisfies the II′-inequalities.
    pub fn witnesses(&self, u: Unit) -> Vec<usize> {
        let r = u.r;
        (1..=self.gammas.len())
            .filter(|&i| {
                let (lo, hi) = match u.side {
                    Side::Plus => (self.gamma_star(i, r), self.deltas[i - 1][r as usize]),
                    Side::Minus => (self.gammas[i - 1][r as usize], self.delta_star(i, r)),
                };
                lo <= u.x && u.x + 1 <= hi
            })
            .collect()
    }

    /// All II′-units.
    pub fn units(&self) -> BTreeSet<Unit> {
        let all: Vec<i64> = self.gammas.iter().chain(&self.deltas).flatten().copied().collect();
        let (Some(&lo), Some(&hi)) = (all.iter().min(), all.iter().max()) else {
            return BTreeSet::new();
        };
        let mut out = BTreeSet::new();
        for side in [Side::Plus, Side::Minus] {
            for r in 0..=self.n {
                for x in lo - self.n as i64 - 3..=hi + self.n as i64 + 3 {
                    let u = Unit { side, x, r };
                    if !self.witnesses(u).is_empty() {
                        out.insert(u);
                    }
                }
            }
        }
        out
    }
}

/// π′: column i of 𝒯_h(p) turns its entries at nonzero heights into W-steps.
pub fn to_epaths(d: &SkewDiagram, n: u32, p: &PathTuple) -> Result<EPathPair> {
    let t = to_tableau(d, n, p)?;
    epaths_of(&t)
}

pub fn epaths_of(t: &Tableau) -> Result<EPathPair> {
    let n = t.n;
    let m = n as i64;
    let d = &t.shape;
    let heights: Vec<Vec<i64>> = t
        .rows
        .iter()
        .map(|row| row_heights(n, row).ok_or(Error::RuleViolation("H")))
        .collect::<Result<_>>()?;
    let lc = d.lambda().conjugate();
    let mc = d.mu().conjugate();
    let mut gammas = Vec::new();
    let mut deltas = Vec::new();
    for j in 1..=d.lambda().part(1) {
        let mut w_lower = BTreeSet::new();
        let mut w_upper = BTreeSet::new();
        for (i, _) in t.column(j) {
            let y = heights[i - 1][j - 1 - d.mu_part(i)];
            let fresh = match y.signum() {
                -1 => w_lower.insert(y),
                1 => w_upper.insert(y),
                _ => true,
            };
            if !fresh {
                return Err(Error::RuleViolation("V"));
            }
        }
        let start = j as i64 - mc.part(j) as i64;
        let end = j as i64 - lc.part(j) as i64;
        gammas.push(
            (0..=m + 1)
                .map(|r| start - w_lower.iter().filter(|&&y| y < -r).count() as i64)
                .collect(),
        );
        deltas.push(
            (0..=m + 1)
                .map(|r| end + w_upper.iter().filter(|&&y| y > r).count() as i64)
                .collect(),
        );
    }
    Ok(EPathPair { n, gammas, deltas })
}

/// Components of II′-units that reach height 0 and avoid the top band.
pub fn ii_prime_regions(e: &EPathPair) -> Vec<BTreeSet<Unit>> {
    components(&e.units(), e.n)
        .into_iter()
        .filter(|c| c.iter().any(|u| u.r == 0) && c.iter().all(|u| u.r != e.n))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LuKind {
    Type1,
    Type2 { k_prime: u32 },
}

/// An LU-configuration in one column: the block L = C(a₁, …, a_s) starting at
/// row `top`, then `gap` further cells, then U = C(b̄_t, …, b̄₁).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LuConfiguration {
    pub column: usize,
    pub top: usize,
    pub kind: LuKind,
    pub k: u32,
    pub gap: usize,
    /// a₁, …, a_s
    pub lower: Vec<Letter>,
    /// b̄_t, …, b̄₁ from top to bottom
    pub upper: Vec<Letter>,
    /// a′₁, …, a′_t
    pub a_comp: Vec<Letter>,
    /// b′₁, …, b′_s
    pub b_comp: Vec<Letter>,
}

impl LuConfiguration {
    pub fn s(&self) -> usize {
        self.lower.len()
    }

    pub fn t(&self) -> usize {
        self.upper.len()
    }

    /// Row of a_i (1-based i).
    pub fn row_of_a(&self, i: usize) -> usize {
        self.top + i - 1
    }

    /// Row of b̄_i (1-based i).
    pub fn row_of_b(&self, i: usize) -> usize {
        self.top + self.s() + self.gap + self.t() - i
    }

    pub fn lower_rows(&self) -> std::ops::Range<usize> {
        self.top..self.top + self.s()
    }

    pub fn upper_rows(&self) -> std::ops::Range<usize> {
        let start = self.top + self.s() + self.gap;
        start..start + self.t()
    }

    pub fn to_json(&self) -> Value {
        let (kind, kp) = match self.kind {
            LuKind::Type1 => (1, None),
            LuKind::Type2 { k_prime } => (2, Some(k_prime)),
        };
        let names = |v: &[Letter]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>();
        json!({
            "column": self.column,
            "top": self.top,
            "type": kind,
            "k": self.k,
            "k_prime": kp,
            "L": names(&self.lower),
            "U": names(&self.upper),
            "a_prime": names(&self.a_comp),
            "b_prime": names(&self.b_comp),
        })
    }
}

fn is_l_config(t: &Tableau, j: usize, rows: std::ops::Range<usize>) -> bool {
    let entries: Vec<Letter> = rows.clone().map(|i| t.get(i, j).unwrap()).collect();
    let Some(&last) = entries.last() else {
        return false;
    };
    entries.iter().all(|l| !l.is_barred())
        && entries.windows(2).all(|w| w[0] < w[1])
        && !(last == t.n_letter() && t.get(rows.end - 1, j.wrapping_sub(1)) == Some(t.nbar()))
}

fn is_u_config(t: &Tableau, j: usize, rows: std::ops::Range<usize>) -> bool {
    let entries: Vec<Letter> = rows.clone().map(|i| t.get(i, j).unwrap()).collect();
    let Some(&first) = entries.first() else {
        return false;
    };
    entries.iter().all(|l| l.is_barred())
        && entries.windows(2).all(|w| w[0] < w[1])
        && !(first == t.nbar() && t.get(rows.start, j + 1) == Some(t.n_letter()))
}

/// Complement of `used` in {k, …, top}, increasing.
fn complement(used: &[u32], k: u32, top: u32) -> Vec<Letter> {
    (k..=top)
        .filter(|v| !used.contains(v))
        .map(Letter::unbarred)
        .collect()
}

fn interleaving_holds(lower: &[Letter], upper_b: &[u32], a_comp: &[Letter], b_comp: &[Letter]) -> bool {
    // a_{i+1} ≼ b'_i and b̄_{i+1} ≽ ā'_i
    let s_ok = (1..lower.len()).all(|i| lower[i] <= b_comp[i - 1]);
    let t_ok = (1..upper_b.len()).all(|i| Letter::barred(upper_b[i]) >= a_comp[i - 1].bar());
    s_ok && t_ok
}

/// Every type 1 and type 2 LU-configuration of `t`.
pub fn find_lu_configurations(t: &Tableau) -> Vec<LuConfiguration> {
    let n = t.n;
    let mut out = Vec::new();
    for j in 1..=t.shape.columns() {
        let Some((top_row, bottom_row)) = t.shape.column_range(j) else {
            continue;
        };
        for top in top_row..=bottom_row {
            let a1 = t.get(top, j).unwrap();
            if a1.is_barred() {
                continue;
            }
            let k = a1.index();
            for s in 1..=(n - k + 1) as usize {
                let l_end = top + s;
                if l_end - 1 > bottom_row || !is_l_config(t, j, top..l_end) {
                    break;
                }
                let lower: Vec<Letter> = (top..l_end).map(|i| t.get(i, j).unwrap()).collect();
                let a_idx: Vec<u32> = lower.iter().map(|l| l.index()).collect();
                // type 1
                let span = (n - k + 2) as usize;
                if span > s {
                    let tt = span - s;
                    if let Some(c) = build(t, j, top, k, 0, &lower, &a_idx, tt, LuKind::Type1) {
                        out.push(c);
                    }
                }
                // type 2
                for kp in k + 1..=n {
                    let total = (kp - k + 1) as usize;
                    if total <= s {
                        continue;
                    }
                    let tt = total - s;
                    let gap = (n - kp + 1) as usize;
                    if let Some(c) = build(t, j, top, k, gap, &lower, &a_idx, tt, LuKind::Type2 { k_prime: kp }) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn build(
    t: &Tableau,
    j: usize,
    top: usize,
    k: u32,
    gap: usize,
    lower: &[Letter],
    a_idx: &[u32],
    tt: usize,
    kind: LuKind,
) -> Option<LuConfiguration> {
    let n = t.n;
    let s = lower.len();
    let u_start = top + s + gap;
    let u_end = u_start + tt;
    let (_, bottom) = t.shape.column_range(j)?;
    if u_end - 1 > bottom || !is_u_config(t, j, u_start..u_end) {
        return None;
    }
    let upper: Vec<Letter> = (u_start..u_end).map(|i| t.get(i, j).unwrap()).collect();
    // b_1, …, b_t read from the bottom up
    let b_idx: Vec<u32> = upper.iter().rev().map(|l| l.index()).collect();
    if b_idx[0] != k {
        return None;
    }
    let (a_comp, b_comp) = match kind {
        LuKind::Type1 => {
            let mut a_comp = complement(a_idx, k, n);
            let mut b_comp = complement(&b_idx, k, n);
            if a_comp.len() != tt - 1 || b_comp.len() != s - 1 {
                return None;
            }
            a_comp.push(Letter::barred(n));
            b_comp.push(Letter::barred(n));
            (a_comp, b_comp)
        }
        LuKind::Type2 { k_prime } => {
            if a_idx.iter().chain(&b_idx).any(|&v| v > k_prime) {
                return None;
            }
            let a_comp = complement(a_idx, k, k_prime);
            let b_comp = complement(&b_idx, k, k_prime);
            if a_comp.len() != tt
                || b_comp.len() != s
                || a_comp.last() != Some(&Letter::unbarred(k_prime))
                || b_comp.last() != Some(&Letter::unbarred(k_prime))
            {
                return None;
            }
            let (nl, nb) = (t.n_letter(), t.nbar());
            let a_row = top + s;
            let b_row = u_start - 1;
            let a = t.get(a_row, j)?;
            let b = t.get(b_row, j)?;
            let a_ok = a > Letter::unbarred(k_prime) || (a == nl && t.get(a_row, j.wrapping_sub(1)) == Some(nb));
            let b_ok = b < Letter::barred(k_prime) || (b == nb && t.get(b_row, j + 1) == Some(nl));
            if !a_ok || !b_ok {
                return None;
            }
            (a_comp, b_comp)
        }
    };
    if !interleaving_holds(lower, &b_idx, &a_comp, &b_comp) {
        return None;
    }
    Some(LuConfiguration {
        column: j,
        top,
        kind,
        k,
        gap,
        lower: lower.to_vec(),
        upper,
        a_comp,
        b_comp,
    })
}

/// A block of consecutive cells in one column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub column: usize,
    pub rows: std::ops::Range<usize>,
}

/// Is the L-block `l` right-adjacent to `c`?
fn right_adjacent(t: &Tableau, l: &Block, c: &LuConfiguration) -> bool {
    l.column == c.column + 1
        && (1..=c.s()).any(|i| {
            let row = c.row_of_a(i);
            l.rows.contains(&row) && t.get(row, l.column).unwrap() < c.b_comp[i - 1]
        })
}

/// Is the U-block `u` left-adjacent to `c`?
fn left_adjacent(t: &Tableau, u: &Block, c: &LuConfiguration) -> bool {
    c.column >= 2
        && u.column == c.column - 1
        && (1..=c.t()).any(|i| {
            let row = c.row_of_b(i);
            u.rows.contains(&row) && t.get(row, u.column).unwrap() > c.a_comp[i - 1].bar()
        })
}

fn lower_block(c: &LuConfiguration) -> Block {
    Block {
        column: c.column,
        rows: c.lower_rows(),
    }
}

fn upper_block(c: &LuConfiguration) -> Block {
    Block {
        column: c.column,
        rows: c.upper_rows(),
    }
}

pub fn configs_adjacent(t: &Tableau, c: &LuConfiguration, d: &LuConfiguration) -> bool {
    right_adjacent(t, &lower_block(d), c)
        || right_adjacent(t, &lower_block(c), d)
        || left_adjacent(t, &upper_block(d), c)
        || left_adjacent(t, &upper_block(c), d)
}

fn overlaps(a: &std::ops::Range<usize>, b: &std::ops::Range<usize>) -> bool {
    a.start < b.end && b.start < a.end
}

/// Boundary L-configurations (anchored at column tops) and boundary
/// U-configurations (anchored at column bottoms).
pub fn boundary_blocks(t: &Tableau, configs: &[LuConfiguration]) -> (Vec<Block>, Vec<Block>) {
    let mut ls = Vec::new();
    let mut us = Vec::new();
    for j in 1..=t.shape.columns() {
        let Some((top, bottom)) = t.shape.column_range(j) else {
            continue;
        };
        let height = bottom - top + 1;
        let best_l = (1..=height).rev().find(|&m| {
            let rows = top..top + m;
            is_l_config(t, j, rows.clone())
                && configs
                    .iter()
                    .all(|c| c.column != j || !overlaps(&rows, &c.lower_rows()))
        });
        if let Some(m) = best_l {
            ls.push(Block {
                column: j,
                rows: top..top + m,
            });
        }
        let best_u = (1..=height).rev().find(|&m| {
            let rows = bottom + 1 - m..bottom + 1;
            is_u_config(t, j, rows.clone())
                && configs
                    .iter()
                    .all(|c| c.column != j || !overlaps(&rows, &c.upper_rows()))
        });
        if let Some(m) = best_u {
            us.push(Block {
                column: j,
                rows: bottom + 1 - m..bottom + 1,
            });
        }
    }
    (ls, us)
}

/// A class of mutually connected LU-configurations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigRegion {
    pub members: Vec<LuConfiguration>,
    /// No boundary block is adjacent to any member.
    pub is_region: bool,
}

impl ConfigRegion {
    pub fn type1_count(&self) -> usize {
        self.members
            .iter()
            .filter(|c| c.kind == LuKind::Type1)
            .count()
    }

    pub fn is_odd(&self) -> bool {
        self.type1_count() % 2 == 1
    }
}

/// Equivalence classes of LU-configurations, flagged by whether they form a
/// II-region of the tableau.
pub fn config_regions(t: &Tableau) -> Vec<ConfigRegion> {
    let configs = find_lu_configurations(t);
    let (bl, bu) = boundary_blocks(t, &configs);
    let m = configs.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in 0..m {
        for b in a + 1..m {
            if configs_adjacent(t, &configs[a], &configs[b]) {
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<LuConfiguration>> = BTreeMap::new();
    for (a, c) in configs.iter().enumerate() {
        let r = root(&mut parent, a);
        classes.entry(r).or_default().push(c.clone());
    }
    classes
        .into_values()
        .map(|members| {
            let touched = members.iter().any(|c| {
                bl.iter().any(|b| right_adjacent(t, b, c)) || bu.iter().any(|b| left_adjacent(t, b, c))
            });
            ConfigRegion {
                members,
                is_region: !touched,
            }
        })
        .collect()
}

/// Rule (E′): no odd II-region assembled from LU-configurations.
pub fn check_e_prime(t: &Tableau) -> bool {
    config_regions(t).iter().all(|r| !(r.is_region && r.is_odd()))
}

/// Rule (E-2C) for shapes with at most two columns.
pub fn check_e2c(t: &Tableau) -> Result<bool> {
    let cols = t.shape.columns();
    if cols > 2 {
        return Err(Error::TooManyColumns(cols));
    }
    let flagged = find_lu_configurations(t)
        .iter()
        .filter(|c| c.kind == LuKind::Type1)
        .any(|c| {
            let j = c.column;
            let left_ok = (1..=c.t()).all(|kk| match t.get(c.row_of_b(kk), j.wrapping_sub(1)) {
                Some(ck) => ck <= c.a_comp[kk - 1].bar(),
                None => true,
            });
            let right_ok = (1..=c.s()).all(|kk| match t.get(c.row_of_a(kk), j + 1) {
                Some(dk) => dk >= c.b_comp[kk - 1],
                None => true,
            });
            left_ok && right_ok
        });
    Ok(!flagged)
}

/// All fillings obeying (H) and (V), in row-major lexicographic order.
pub fn enumerate_tab_hv(d: &SkewDiagram, n: u32) -> Vec<Tableau> {
    let cells = d.cells();
    let alphabet = Letter::alphabet(n);
    let mut grid: BTreeMap<(usize, usize), Letter> = BTreeMap::new();
    let mut out = Vec::new();
    fill(d, n, &cells, 0, &alphabet, &mut grid, &mut out);
    out
}

fn fill(
    d: &SkewDiagram,
    n: u32,
    cells: &[(usize, usize)],
    pos: usize,
    alphabet: &[Letter],
    grid: &mut BTreeMap<(usize, usize), Letter>,
    out: &mut Vec<Tableau>,
) {
    if pos == cells.len() {
        let rows = (1..=d.rows())
            .map(|i| (d.mu_part(i) + 1..=d.lambda_part(i)).map(|j| grid[&(i, j)]).collect())
            .collect();
        out.push(Tableau::new(n, d.clone(), rows).expect("shape matches"));
        return;
    }
    let (i, j) = cells[pos];
    let (nl, nb) = (Letter::unbarred(n), Letter::barred(n));
    let at = |g: &BTreeMap<(usize, usize), Letter>, i: usize, j: usize| g.get(&(i, j)).copied();
    for &x in alphabet {
        let left = if j > 1 { at(grid, i, j - 1) } else { None };
        let left2 = if j > 2 { at(grid, i, j - 2) } else { None };
        if let Some(l) = left {
            if !(l <= x || (l == nb && x == nl)) {
                continue;
            }
            if let Some(l2) = left2 {
                if [l2, l, x] == [nb, nb, nl] || [l2, l, x] == [nb, nl, nl] {
                    continue;
                }
            }
        }
        if i > 1 {
            if let Some(up) = at(grid, i - 1, j) {
                let ok = up < x
                    || (up == nl && x == nl && left == Some(nb))
                    || (up == nb && x == nb && at(grid, i - 1, j + 1) == Some(nl));
                if !ok {
                    continue;
                }
            }
        }
        grid.insert((i, j), x);
        fill(d, n, cells, pos + 1, alphabet, grid, out);
        grid.remove(&(i, j));
    }
}

/// Tab(λ/μ): HV-tableaux obeying (E′).
pub fn enumerate_tab(d: &SkewDiagram, n: u32) -> Result<Vec<Tableau>> {
    d.require_positivity(n)?;
    Ok(enumerate_tab_hv(d, n)
        .into_iter()
        .filter(check_e_prime)
        .collect())
}

pub fn tab_sum(d: &SkewDiagram, n: u32) -> Result<Polynomial> {
    let mut sum = Polynomial::zero();
    for t in enumerate_tab(d, n)? {
        sum.add_term(t.weight(), BigInt::from(1));
    }
    Ok(sum)
}

/// True iff no pair of adjacent rows of the tuple behind `t` meets ordinarily.
pub fn tuple_is_hv(p: &PathTuple) -> bool {
    p.is_identity()
        && p
            .paths()
            .windows(2)
            .all(|w| crate::hpaths::classify_intersection(&w[0], &w[1]) != Intersection::Ordinary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpaths::enumerate_phv;
    use crate::regions::regions;

    fn tab(n: u32, text: &str, mu: &str) -> Tableau {
        Tableau::parse(n, text, &mu.parse().unwrap()).unwrap()
    }

    fn worked_t() -> Tableau {
        tab(4, "1,2,2 / 3,4,4 / 4b,4b,3b / 3b,2b,2b", "")
    }

    fn worked_t_prime() -> Tableau {
        tab(4, "1,1,2 / 3,4,4 / 4b,4b,3b / 3b,2b,2b", "")
    }

    #[test]
    fn parse_and_print() {
        let t = worked_t();
        assert_eq!(t.shape().lambda().parts(), &[3, 3, 3, 3]);
        assert_eq!(t.to_text(), "1,2,2 / 3,4,4 / 4b,4b,3b / 3b,2b,2b");
        let s = tab(2, "1 / 2b", "1");
        assert_eq!(s.shape().lambda().parts(), &[2, 1]);
        assert_eq!(s.get(1, 2), Some(Letter::unbarred(1)));
        assert_eq!(s.get(1, 1), None);
        let back = Tableau::from_json_str(&t.to_json().to_string()).unwrap();
        assert_eq!(back, t);
        assert!(Tableau::parse(2, "3", &Partition::empty()).is_err());
        assert!(Tableau::parse(2, "1,x", &Partition::empty()).is_err());
        let empty = tab(2, "", "");
        assert_eq!(empty.shape().num_cells(), 0);
    }

    #[test]
    fn horizontal_rule() {
        assert!(check_h(&tab(2, "2b,2", "")));
        assert!(!check_h(&tab(2, "2b,2b,2", "")));
        assert!(!check_h(&tab(2, "2b,2,2", "")));
        assert!(check_h(&tab(2, "1,1,2b", "")));
        assert!(!check_h(&tab(2, "2,1", "")));
    }

    #[test]
    fn vertical_rule() {
        assert!(check_v(&tab(2, "2 / 2b", "")));
        assert!(!check_v(&tab(2, "2 / 2", "")));
        // (n,n) needs n̄ to the lower-left
        assert!(check_v(&tab(2, "2 / 2b,2", "1")));
        // (n̄,n̄) needs n to the upper-right
        assert!(check_v(&tab(2, "2b,2 / 2b", "")));
        assert!(!check_v(&tab(2, "2b,1b / 2b", "")));
    }

    #[test]
    fn bijection_small() {
        let d = SkewDiagram::parse("1", "").unwrap();
        let p = enumerate_phv(&d, 2)
            .into_iter()
            .find(|p| p.paths()[0].e_steps() == vec![(0, -2)])
            .unwrap();
        let t = to_tableau(&d, 2, &p).unwrap();
        assert_eq!(t.to_text(), "1");
        assert_eq!(t.weight(), p.weight());
        assert_eq!(from_tableau(&t).unwrap(), p);
        let empty = SkewDiagram::parse("", "").unwrap();
        let e = &enumerate_phv(&empty, 2)[0];
        assert_eq!(to_tableau(&empty, 2, e).unwrap().shape().num_cells(), 0);
    }

    #[test]
    fn worked_tableaux_round_trip() {
        for t in [worked_t(), worked_t_prime()] {
            assert!(check_h(&t) && check_v(&t));
            let p = from_tableau(&t).unwrap();
            assert!(tuple_is_hv(&p));
            assert_eq!(to_tableau(t.shape(), t.n(), &p).unwrap(), t);
        }
    }

    #[test]
    fn extra_rule_on_worked_example() {
        assert!(!check_e(&worked_t()).unwrap());
        assert!(check_e(&worked_t_prime()).unwrap());
        assert!(!check_e_prime(&worked_t()));
        assert!(check_e_prime(&worked_t_prime()));
        assert!(check_e(&tab(2, "1", "")).unwrap());
    }

    #[test]
    fn worked_example_configurations() {
        let t = worked_t();
        let cs = find_lu_configurations(&t);
        let kinds: Vec<(usize, LuKind, u32)> = cs.iter().map(|c| (c.column, c.kind, c.k)).collect();
        assert!(kinds.contains(&(1, LuKind::Type1, 3)));
        assert!(kinds.contains(&(2, LuKind::Type1, 4)));
        assert!(kinds.contains(&(3, LuKind::Type1, 2)));
        assert!(kinds.contains(&(2, LuKind::Type2 { k_prime: 3 }, 2)));
        let rs = config_regions(&t);
        assert!(rs.iter().any(|r| r.is_region && r.is_odd() && r.type1_count() == 3));
        let rs2 = config_regions(&worked_t_prime());
        assert!(rs2.iter().all(|r| !r.is_region || !r.is_odd()));
    }

    #[test]
    fn e_paths_of_worked_example() {
        let t = worked_t();
        let e = epaths_of(&t).unwrap();
        let regions_t = ii_prime_regions(&e);
        assert_eq!(regions_t.len(), 1);
        let path_side = regions(&project(&from_tableau(&t).unwrap()));
        let ii: Vec<_> = path_side
            .iter()
            .filter(|r| r.kind == RegionKind::II)
            .map(|r| r.units.clone())
            .collect();
        assert_eq!(ii, regions_t);
        let e2 = epaths_of(&worked_t_prime()).unwrap();
        assert!(ii_prime_regions(&e2).is_empty());
    }

    #[test]
    fn column_e_paths() {
        let t = tab(2, "1 / 2", "");
        let e = epaths_of(&t).unwrap();
        // γ₁ starts at 1 and steps west at heights -2 and -1.
        assert_eq!(e.gammas[0], vec![-1, 0, 1, 1]);
        assert_eq!(e.deltas[0], vec![-1; 4]);
    }

    #[test]
    fn single_column_configurations() {
        let t = tab(2, "2 / 2b", "");
        let cs = find_lu_configurations(&t);
        assert_eq!(cs.len(), 1);
        assert_eq!((cs[0].kind, cs[0].k, cs[0].s(), cs[0].t()), (LuKind::Type1, 2, 1, 1));
        assert!(!check_e_prime(&t));
        assert!(!check_e2c(&t).unwrap());
        let t1 = tab(2, "1 / 1b", "");
        assert!(find_lu_configurations(&t1).iter().all(|c| c.kind != LuKind::Type1 || c.s() + c.t() != 2 || c.k != 1));
        assert!(check_e_prime(&t1));
    }

    #[test]
    fn three_row_example() {
        let t = tab(2, "1,1 / 2,2,2b / 2b,1b,1b", "1");
        assert!(check_h(&t) && check_v(&t));
        assert!(!check_e(&t).unwrap());
        assert!(!check_e_prime(&t));
    }

    #[test]
    fn two_column_rule_errors() {
        assert!(matches!(check_e2c(&worked_t()), Err(Error::TooManyColumns(3))));
    }

    #[test]
    fn small_tab_sets() {
        let one = SkewDiagram::parse("1", "").unwrap();
        assert_eq!(enumerate_tab(&one, 2).unwrap().len(), 4);
        let col = SkewDiagram::parse("1,1", "").unwrap();
        let tabs = enumerate_tab(&col, 2).unwrap();
        assert_eq!(tabs.len(), 5);
        assert!(tabs.iter().all(|t| t.to_text() != "2 / 2b"));
        let empty = SkewDiagram::parse("", "").unwrap();
        assert_eq!(enumerate_tab(&empty, 2).unwrap().len(), 1);
        assert_eq!(tab_sum(&empty, 2).unwrap(), Polynomial::one());
    }
}
