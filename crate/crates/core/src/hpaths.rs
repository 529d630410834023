//! Lattice paths of type C_n between heights -n-1 and n+1, their h-labels and
//! weights, tuples of paths over a skew diagram, and the signed path sum.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::genseries::Coefficients;
use crate::weightring::{psi, Letter, Monomial, Polynomial, Variable};

/// A path stored as its leftmost horizontal position at every height
/// -n-1, ..., n+1. The rightmost position at height y is the leftmost one at y+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    n: u32,
    left: Vec<i64>,
}

impl Path {
    /// Builds a path from its start and the number of E-steps at each height
    /// -n-1, ..., n+1 (so `counts` has 2n+3 entries).
    pub fn from_counts(n: u32, start: i64, counts: &[u32]) -> Result<Self> {
        let m = n as usize;
        if counts.len() != 2 * m + 3 {
            return Err(Error::Parse(format!(
                "expected {} step counts, got {}",
                2 * m + 3,
                counts.len()
            )));
        }
        if counts[0] != 0 || counts[2 * m + 2] != 0 {
            return Err(Error::Parse("E-step at height ±(n+1)".into()));
        }
        if counts[m + 1] % 2 != 0 {
            return Err(Error::Parse("odd number of E-steps at height 0".into()));
        }
        let mut left = Vec::with_capacity(counts.len());
        let mut x = start;
        for &c in counts {
            left.push(x);
            x += c as i64;
        }
        Ok(Path { n, left })
    }

    /// The path going straight north from (x, -n-1).
    pub fn vertical(n: u32, x: i64) -> Self {
        Path {
            n,
            left: vec![x; 2 * n as usize + 3],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn idx(&self, y: i64) -> usize {
        let h = self.n as i64 + 1;
        assert!((-h..=h).contains(&y), "height {y} outside the strip");
        (y + h) as usize
    }

    pub fn start(&self) -> i64 {
        self.left[0]
    }

    pub fn end(&self) -> i64 {
        *self.left.last().unwrap()
    }

    /// Leftmost horizontal position at height y.
    pub fn left(&self, y: i64) -> i64 {
        self.left[self.idx(y)]
    }

    /// Rightmost horizontal position at height y.
    pub fn right(&self, y: i64) -> i64 {
        let i = self.idx(y);
        self.left.get(i + 1).copied().unwrap_or(self.left[i])
    }

    pub fn count_at(&self, y: i64) -> u32 {
        (self.right(y) - self.left(y)) as u32
    }

    pub fn num_e_steps(&self) -> u32 {
        (self.end() - self.start()) as u32
    }

    pub fn heights(&self) -> std::ops::RangeInclusive<i64> {
        let h = self.n as i64 + 1;
        -h..=h
    }

    /// Starting points (x, y) of all E-steps, in step order.
    pub fn e_steps(&self) -> Vec<(i64, i64)> {
        self.heights()
            .flat_map(|y| (self.left(y)..self.right(y)).map(move |x| (x, y)))
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        let h = self.n as i64 + 1;
        self.left.windows(2).all(|w| w[0] <= w[1])
            && self.count_at(-h) == 0
            && self.count_at(h) == 0
            && self.count_at(0) % 2 == 0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start())?;
        for (x, y) in self.e_steps() {
            write!(f, " E({x},{y})")?;
        }
        write!(f, " -> {}", self.end())
    }
}

/// All paths from (start_x, -n-1) to (end_x, n+1). Paths with more E-steps low
/// down come first.
pub fn enumerate_paths(n: u32, start_x: i64, end_x: i64) -> Vec<Path> {
    let r = end_x - start_x;
    if r < 0 {
        return Vec::new();
    }
    let m = n as usize;
    let mut out = Vec::new();
    let mut counts = vec![0u32; 2 * m + 3];
    fill_counts(n, 1, r as u32, &mut counts, start_x, &mut out);
    out
}

fn fill_counts(n: u32, slot: usize, left: u32, counts: &mut Vec<u32>, start: i64, out: &mut Vec<Path>) {
    let m = n as usize;
    if slot == 2 * m + 2 {
        if left == 0 {
            out.push(Path::from_counts(n, start, counts).expect("valid counts"));
        }
        return;
    }
    let step = if slot == m + 1 { 2 } else { 1 };
    let mut c = left - left % step;
    loop {
        counts[slot] = c;
        fill_counts(n, slot + 1, left - c, counts, start, out);
        if c < step {
            break;
        }
        c -= step;
    }
    counts[slot] = 0;
}

/// The h-label (letter, shift) of every E-step of `p`, in step order.
pub fn h_label(p: &Path) -> Vec<(Letter, i64)> {
    let n = p.n as i64;
    let mut zero_seen = 0u32;
    p.e_steps()
        .into_iter()
        .map(|(x, y)| {
            let letter = match y {
                y if y < 0 => Letter::unbarred((n + 1 + y) as u32),
                0 => {
                    zero_seen += 1;
                    if zero_seen % 2 == 1 {
                        Letter::barred(n as u32)
                    } else {
                        Letter::unbarred(n as u32)
                    }
                }
                y => Letter::barred((n + 1 - y) as u32),
            };
            (letter, 2 * x)
        })
        .collect()
}

pub fn path_weight(p: &Path) -> Monomial {
    Monomial::from_factors(h_label(p).into_iter().map(|(l, s)| Variable::new(l, s)))
}

/// Checks h_{r,a+2k+2r-2} against the sum of weights of paths (k,-n-1) → (k+r,n+1).
pub fn cross_check_h(n: u32, r: i64, k: i64) -> bool {
    if r < 0 {
        return true;
    }
    let mut sum = Polynomial::zero();
    for p in enumerate_paths(n, k, k + r) {
        sum.add_term(path_weight(&p), BigInt::from(1));
    }
    let h = Coefficients::new(n, r as usize).h(r, 2 * k + 2 * r - 2);
    matches!((psi(&sum, n), psi(&h, n)), (Ok(a), Ok(b)) if a == b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Intersection {
    Disjoint,
    Special,
    Ordinary,
}

/// Heights at which the two paths share a lattice point.
pub fn meeting_heights(p: &Path, q: &Path) -> Vec<i64> {
    p.heights()
        .filter(|&y| p.left(y) <= q.right(y) && q.left(y) <= p.right(y))
        .collect()
}

pub fn classify_intersection(p: &Path, q: &Path) -> Intersection {
    let hs = meeting_heights(p, q);
    if hs.is_empty() {
        Intersection::Disjoint
    } else if hs == [0] && (p.left(0) - q.left(0)).rem_euclid(2) == 1 {
        Intersection::Special
    } else {
        Intersection::Ordinary
    }
}

/// An l-tuple of paths; path i runs from u_i to v_{sigma(i)} (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathTuple {
    paths: Vec<Path>,
    sigma: Vec<usize>,
}

impl PathTuple {
    pub fn new(paths: Vec<Path>, sigma: Vec<usize>) -> Self {
        assert_eq!(paths.len(), sigma.len());
        PathTuple { paths, sigma }
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn sign(&self) -> i64 {
        permutation_sign(&self.sigma)
    }

    pub fn weight(&self) -> Monomial {
        self.paths
            .iter()
            .fold(Monomial::one(), |acc, p| acc.mul(&path_weight(p)))
    }

    pub fn n(&self) -> Option<u32> {
        self.paths.first().map(Path::n)
    }

    pub fn has_ordinary_pair(&self) -> bool {
        (0..self.len()).any(|i| {
            (i + 1..self.len()).any(|j| {
                classify_intersection(&self.paths[i], &self.paths[j]) == Intersection::Ordinary
            })
        })
    }

    pub fn has_ordinary_adjacent_pair(&self) -> bool {
        self.paths
            .windows(2)
            .any(|w| classify_intersection(&w[0], &w[1]) == Intersection::Ordinary)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sigma": self.sigma.iter().map(|s| s + 1).collect::<Vec<_>>(),
            "sign": self.sign(),
            "weight": self.weight().to_string(),
            "paths": self.paths.iter().map(|p| json!({
                "start": p.start(),
                "end": p.end(),
                "e_steps": p.e_steps().iter().map(|&(x, y)| json!({"height": y, "x": x})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for PathTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma: Vec<String> = self.sigma.iter().map(|s| (s + 1).to_string()).collect();
        write!(f, "sigma=({}) sign={:+}", sigma.join(","), self.sign())?;
        for (i, p) in self.paths.iter().enumerate() {
            write!(f, "\n  p{}: {}", i + 1, p)?;
        }
        Ok(())
    }
}

/// Sign of a permutation of 0..len by inversion count.
pub fn permutation_sign(sigma: &[usize]) -> i64 {
    let inversions = (0..sigma.len())
        .flat_map(|i| (i + 1..sigma.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| sigma[i] > sigma[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of 0..l in lexicographic order.
pub fn permutations(l: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; l], &mut out);
    out
}

/// Horizontal position of u_i (1-based i).
pub fn start_x(d: &SkewDiagram, i: usize) -> i64 {
    d.mu_part(i) as i64 + 1 - i as i64
}

/// Horizontal position of v_i (1-based i).
pub fn end_x(d: &SkewDiagram, i: usize) -> i64 {
    d.lambda_part(i) as i64 + 1 - i as i64
}

/// Which pairs a tuple must avoid intersecting ordinarily.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pairs {
    All,
    Adjacent,
}

fn tuples_for(d: &SkewDiagram, n: u32, sigma: &[usize], pairs: Pairs, out: &mut Vec<PathTuple>) {
    let l = d.rows();
    let choices: Vec<Vec<Path>> = (0..l)
        .map(|i| enumerate_paths(n, start_x(d, i + 1), end_x(d, sigma[i] + 1)))
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut cur: Vec<Path> = Vec::with_capacity(l);
    extend(&choices, pairs, &mut cur, sigma, out);
}

fn extend(choices: &[Vec<Path>], pairs: Pairs, cur: &mut Vec<Path>, sigma: &[usize], out: &mut Vec<PathTuple>) {
    let i = cur.len();
    if i == choices.len() {
        out.push(PathTuple::new(cur.clone(), sigma.to_vec()));
        return;
    }
    for p in &choices[i] {
        let ok = match pairs {
            Pairs::All => cur
                .iter()
                .all(|q| classify_intersection(q, p) != Intersection::Ordinary),
            Pairs::Adjacent => cur
                .last()
                .is_none_or(|q| classify_intersection(q, p) != Intersection::Ordinary),
        };
        if ok {
            cur.push(p.clone());
            extend(choices, pairs, cur, sigma, out);
            cur.pop();
        }
    }
}

/// Tuples over every permutation with no ordinarily intersecting pair.
pub fn enumerate_p1(d: &SkewDiagram, n: u32) -> Vec<PathTuple> {
    let l = d.rows();
    let mut out = Vec::new();
    for sigma in permutations(l) {
        let feasible = (0..l).all(|i| end_x(d, sigma[i] + 1) >= start_x(d, i + 1));
        if feasible {
            tuples_for(d, n, &sigma, Pairs::All, &mut out);
        }
    }
    out
}

/// Tuples with sigma = id and no ordinarily intersecting adjacent pair.
pub fn enumerate_phv(d: &SkewDiagram, n: u32) -> Vec<PathTuple> {
    let id: Vec<usize> = (0..d.rows()).collect();
    let mut out = Vec::new();
    tuples_for(d, n, &id, Pairs::Adjacent, &mut out);
    out
}

/// Σ sign · weight over a set of tuples.
pub fn weighted_sum<'a, I: IntoIterator<Item = &'a PathTuple>>(tuples: I, signed: bool) -> Polynomial {
    let mut sum = Polynomial::zero();
    for t in tuples {
        let c = if signed { t.sign() } else { 1 };
        sum.add_term(t.weight(), BigInt::from(c));
    }
    sum
}

pub fn signed_sum(d: &SkewDiagram, n: u32) -> Polynomial {
    weighted_sum(&enumerate_p1(d, n), true)
}
