//! Truncated expansions of the twisted generating functions E(X) and H(X),
//! their coefficients e_{r,a+d} and h_{r,a+d}, and the two Jacobi-Trudi
//! determinants.
//!
//! Series live in the ring where X z_{i,a} = z_{i,a-2} X. A series is stored as
//! its left coefficients: Σ c_m X^m.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::diagram::SkewDiagram;
use crate::error::Result;
use crate::weightring::{psi, Letter, Monomial, Polynomial, Variable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSeries {
    coeffs: Vec<Polynomial>,
}

impl ShiftedSeries {
    /// The constant series 1, truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Polynomial::zero(); order + 1];
        coeffs[0] = Polynomial::one();
        ShiftedSeries { coeffs }
    }

    /// Builds a series from its coefficients, padding or truncating to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Polynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        ShiftedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of X^m; zero outside 0..=order.
    pub fn coeff(&self, m: i64) -> Polynomial {
        usize::try_from(m)
            .ok()
            .and_then(|m| self.coeffs.get(m).cloned())
            .unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Product under the twist law, truncated at the smaller order.
    pub fn mul(&self, other: &ShiftedSeries) -> ShiftedSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Polynomial::zero(); order + 1];
        for (d, s) in self.coeffs.iter().enumerate().take(order + 1) {
            if s.is_zero() {
                continue;
            }
            for (e, t) in other.coeffs.iter().enumerate().take(order + 1 - d) {
                if t.is_zero() {
                    continue;
                }
                out[d + e] += &s.mul(&t.shifted(-2 * d as i64));
            }
        }
        ShiftedSeries { coeffs: out }
    }

    /// The substitution X ↦ -X.
    pub fn negate_x(&self) -> ShiftedSeries {
        ShiftedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| if m % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Inverse of a series with constant term 1, solving S·T = 1 degree by degree.
    pub fn inverse(&self) -> ShiftedSeries {
        debug_assert!(self.coeffs[0] == Polynomial::one());
        let order = self.order();
        let mut t: Vec<Polynomial> = Vec::with_capacity(order + 1);
        t.push(Polynomial::one());
        for m in 1..=order {
            let mut acc = Polynomial::zero();
            for d in 1..=m {
                if self.coeffs[d].is_zero() || t[m - d].is_zero() {
                    continue;
                }
                acc += &self.coeffs[d].mul(&t[m - d].shifted(-2 * d as i64));
            }
            t.push(-&acc);
        }
        ShiftedSeries { coeffs: t }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Polynomial::one() && self.coeffs[1..].iter().all(Polynomial::is_zero)
    }
}

fn z(letter: Letter) -> Polynomial {
    Polynomial::var(Variable::new(letter, 0))
}

/// 1 + sign·z_{letter,a} X.
fn linear_factor(letter: Letter, sign: i64, order: usize) -> ShiftedSeries {
    ShiftedSeries::from_coeffs(
        vec![Polynomial::one(), z(letter).scale(&BigInt::from(sign))],
        order,
    )
}

/// 1 - z_{n,a} X z_{n̄,a} X = 1 - z_{n,a} z_{n̄,a-2} X².
fn middle_factor(n: u32, order: usize) -> ShiftedSeries {
    let pair = Monomial::from_factors([
        Variable::new(Letter::unbarred(n), 0),
        Variable::new(Letter::barred(n), -2),
    ]);
    ShiftedSeries::from_coeffs(
        vec![
            Polynomial::one(),
            Polynomial::zero(),
            Polynomial::monomial(pair, BigInt::from(-1)),
        ],
        order,
    )
}

/// The factors of E_a(z,X) from left to right.
pub fn e_factors(n: u32, order: usize) -> Vec<ShiftedSeries> {
    let mut out: Vec<ShiftedSeries> = (1..=n)
        .map(|k| linear_factor(Letter::unbarred(k), 1, order))
        .collect();
    out.push(middle_factor(n, order));
    out.extend((1..=n).rev().map(|k| linear_factor(Letter::barred(k), 1, order)));
    out
}

/// E_a(z,X) through X^order, with base point offset 0.
pub fn e_series(n: u32, order: usize) -> ShiftedSeries {
    e_factors(n, order)
        .iter()
        .fold(ShiftedSeries::one(order), |acc, f| acc.mul(f))
}

/// H_a(z,X) through X^order, each factor inverted as a geometric series.
pub fn h_series(n: u32, order: usize) -> ShiftedSeries {
    let mut acc = ShiftedSeries::one(order);
    for k in 1..=n {
        acc = acc.mul(&linear_factor(Letter::barred(k), -1, order).inverse());
    }
    acc = acc.mul(&middle_factor(n, order).inverse());
    for k in (1..=n).rev() {
        acc = acc.mul(&linear_factor(Letter::unbarred(k), -1, order).inverse());
    }
    acc
}

/// Expanded E and H for one rank, giving cheap access to shifted coefficients.
#[derive(Clone, Debug)]
pub struct Coefficients {
    n: u32,
    e: ShiftedSeries,
    h: ShiftedSeries,
}

impl Coefficients {
    pub fn new(n: u32, order: usize) -> Self {
        let e_order = order.min(2 * n as usize + 2);
        Coefficients {
            n,
            e: e_series(n, e_order),
            h: h_series(n, order),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// h_{r,a+d}; zero for r < 0.
    pub fn h(&self, r: i64, d: i64) -> Polynomial {
        if r < 0 {
            return Polynomial::zero();
        }
        assert!(r as usize <= self.h.order(), "h_{r} beyond expansion order");
        self.h.coeff(r).shifted(d)
    }

    /// e_{r,a+d}; zero for r < 0, r = n+1 and r > 2n+2.
    pub fn e(&self, r: i64, d: i64) -> Polynomial {
        let n = self.n as i64;
        if r < 0 || r == n + 1 || r > 2 * n + 2 {
            return Polynomial::zero();
        }
        assert!(r as usize <= self.e.order(), "e_{r} beyond expansion order");
        self.e.coeff(r).shifted(d)
    }

    /// The X^r coefficient of E exactly as expanded, without the vanishing conventions.
    pub fn raw_e(&self, r: i64, d: i64) -> Polynomial {
        self.e.coeff(r).shifted(d)
    }
}

pub fn h_coeff(n: u32, r: i64, d: i64) -> Polynomial {
    if r < 0 {
        return Polynomial::zero();
    }
    Coefficients::new(n, r as usize).h(r, d)
}

pub fn e_coeff(n: u32, r: i64, d: i64) -> Polynomial {
    if r < 0 {
        return Polynomial::zero();
    }
    Coefficients::new(n, r as usize).e(r, d)
}

/// Checks H(X)E(-X) = E(-X)H(X) = 1 through X^order under ψ. E(-X) is applied
/// one factor at a time, which keeps the intermediate series small.
pub fn verify_he(n: u32, order: usize) -> bool {
    let h = h_series(n, order);
    let factors: Vec<ShiftedSeries> = e_factors(n, order).iter().map(ShiftedSeries::negate_x).collect();
    let right = factors.iter().fold(h.clone(), |acc, f| acc.mul(f));
    let left = factors.iter().rev().fold(h, |acc, f| f.mul(&acc));
    [right, left].iter().all(|prod| {
        prod.coeffs().iter().enumerate().all(|(m, c)| {
            let target = if m == 0 { Polynomial::one() } else { Polynomial::zero() };
            psi(c, n).ok() == psi(&target, n).ok()
        })
    })
}

/// Checks e_{2n+2-i,a} = -e_{i,a-2n+2i-2} under ψ for 0 <= i <= 2n+2.
pub fn verify_pseudo_antisym(n: u32) -> bool {
    let top = 2 * n as i64 + 2;
    let c = Coefficients::new(n, top as usize);
    (0..=top).all(|i| {
        let lhs = c.e(top - i, 0);
        let rhs = -&c.e(i, -2 * n as i64 + 2 * i - 2);
        matches!((psi(&lhs, n), psi(&rhs, n)), (Ok(a), Ok(b)) if a == b)
    })
}

/// Determinant by Laplace expansion along rows, memoised on the set of used columns.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let size = m.len();
    assert!(size < 64 && m.iter().all(|row| row.len() == size));
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    minor(m, 0, 0, &mut memo)
}

fn minor(m: &[Vec<Polynomial>], row: usize, used: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    if row == m.len() {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    let mut position = 0usize;
    for col in 0..m.len() {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let rest = minor(m, row + 1, used | (1 << col), memo);
            let term = entry.mul(&rest);
            if position % 2 == 0 {
                acc += &term;
            } else {
                acc = &acc - &term;
            }
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// det(h_{λ_i-μ_j-i+j, a+2(λ_i-i)}) over i, j in 1..=l(λ).
pub fn jt_det_h(d: &SkewDiagram, n: u32) -> Polynomial {
    let l = d.rows();
    let entry_r = |i: usize, j: usize| {
        d.lambda_part(i) as i64 - d.mu_part(j) as i64 - i as i64 + j as i64
    };
    let order = (1..=l)
        .flat_map(|i| (1..=l).map(move |j| (i, j)))
        .map(|(i, j)| entry_r(i, j))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let c = Coefficients::new(n, order);
    let m: Vec<Vec<Polynomial>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| c.h(entry_r(i, j), 2 * (d.lambda_part(i) as i64 - i as i64)))
                .collect()
        })
        .collect();
    determinant(&m)
}

/// det(e_{λ'_i-μ'_j-i+j, a-2(μ'_j-j+1)}) over i, j in 1..=λ_1.
pub fn jt_det_e(d: &SkewDiagram, n: u32) -> Polynomial {
    let lc = d.lambda().conjugate();
    let mc = d.mu().conjugate();
    let l = lc.len();
    let entry_r = |i: usize, j: usize| lc.part(i) as i64 - mc.part(j) as i64 - i as i64 + j as i64;
    let order = (1..=l)
        .flat_map(|i| (1..=l).map(move |j| (i, j)))
        .map(|(i, j)| entry_r(i, j))
        .max()
        .unwrap_or(0)
        .max(0) as usize;
    let c = Coefficients::new(n, order);
    let m: Vec<Vec<Polynomial>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| c.e(entry_r(i, j), -2 * (mc.part(j) as i64 - j as i64 + 1)))
                .collect()
        })
        .collect();
    determinant(&m)
}

/// ψ(jt_det_h) == ψ(jt_det_e).
pub fn determinants_agree(d: &SkewDiagram, n: u32) -> Result<bool> {
    Ok(psi(&jt_det_h(d, n), n)? == psi(&jt_det_e(d, n), n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightring::psi_eq;

    fn v(letter: &str, shift: i64) -> Variable {
        Variable::new(letter.parse().unwrap(), shift)
    }

    fn var(letter: &str, shift: i64) -> Polynomial {
        Polynomial::var(v(letter, shift))
    }

    fn mono(factors: &[(&str, i64)]) -> Polynomial {
        Polynomial::monomial(
            Monomial::from_factors(factors.iter().map(|&(l, s)| v(l, s))),
            BigInt::from(1),
        )
    }

    fn sum(ps: &[Polynomial]) -> Polynomial {
        ps.iter().cloned().sum()
    }

    #[test]
    fn twisted_product() {
        let s = ShiftedSeries::from_coeffs(vec![Polynomial::one(), var("1", 0)], 3);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(0), Polynomial::one());
        assert_eq!(sq.coeff(1), var("1", 0).scale(&BigInt::from(2)));
        assert_eq!(sq.coeff(2), mono(&[("1", 0), ("1", -2)]));
        assert_eq!(s.mul(&ShiftedSeries::one(3)), s);
        assert_eq!(ShiftedSeries::one(3).mul(&s), s);

        let a = ShiftedSeries::from_coeffs(vec![Polynomial::zero(), var("2", 0)], 2);
        let b = ShiftedSeries::from_coeffs(vec![Polynomial::zero(), var("2b", 0)], 2);
        assert_eq!(a.mul(&b).coeff(2), mono(&[("2", 0), ("2b", -2)]));
    }

    #[test]
    fn e_low_coefficients() {
        let e = e_series(2, 6);
        assert_eq!(e.coeff(0), Polynomial::one());
        assert_eq!(
            e.coeff(1),
            sum(&[var("1", 0), var("2", 0), var("2b", 0), var("1b", 0)])
        );
        let expected = sum(&[
            mono(&[("1", 0), ("2", -2)]),
            mono(&[("1", 0), ("2b", -2)]),
            mono(&[("1", 0), ("1b", -2)]),
            mono(&[("2", 0), ("1b", -2)]),
            mono(&[("2b", 0), ("1b", -2)]),
        ]);
        assert_eq!(e.coeff(2), expected);
        // E is a polynomial of degree 2n+2 in X.
        assert!(e.coeff(6) != Polynomial::zero());
        assert_eq!(e_series(2, 8).coeff(7), Polynomial::zero());
    }

    #[test]
    fn h_low_coefficients() {
        let h = h_series(2, 3);
        assert_eq!(h.coeff(0), Polynomial::one());
        assert_eq!(
            h.coeff(1),
            sum(&[var("1b", 0), var("2b", 0), var("2", 0), var("1", 0)])
        );
        let geo = ShiftedSeries::from_coeffs(
            vec![Polynomial::one(), -&var("1", 0)],
            2,
        )
        .inverse();
        assert_eq!(geo.coeff(2), mono(&[("1", 0), ("1", -2)]));
    }

    #[test]
    fn coefficient_conventions() {
        for n in 1..=3 {
            let c = Coefficients::new(n, 2 * n as usize + 4);
            assert_eq!(c.h(0, 7), Polynomial::one());
            assert_eq!(c.e(0, 7), Polynomial::one());
            assert!(c.h(-1, 0).is_zero());
            assert!(c.e(-2, 0).is_zero());
            assert!(c.e(n as i64 + 1, 0).is_zero());
            assert!(c.e(2 * n as i64 + 3, 0).is_zero());
            // The raw middle coefficient vanishes only modulo the relations.
            assert!(psi(&c.raw_e(n as i64 + 1, 0), n).unwrap().is_zero());
        }
        assert!(e_coeff(2, 3, 0).is_zero());
        assert_eq!(
            h_coeff(2, 1, 4),
            sum(&[var("1", 4), var("2", 4), var("2b", 4), var("1b", 4)])
        );
    }

    #[test]
    fn generating_function_identity() {
        assert!(verify_he(2, 7));
        assert!(verify_he(1, 5));
        assert!(verify_he(3, 9));
    }

    #[test]
    fn pseudo_antisymmetry() {
        assert!(verify_pseudo_antisym(1));
        assert!(verify_pseudo_antisym(2));
        assert!(verify_pseudo_antisym(3));
    }

    #[test]
    fn determinant_small() {
        let m = vec![
            vec![Polynomial::constant(2), Polynomial::constant(3)],
            vec![Polynomial::constant(5), Polynomial::constant(7)],
        ];
        assert_eq!(determinant(&m), Polynomial::constant(-1));
        assert_eq!(determinant(&[]), Polynomial::one());
        let m3: Vec<Vec<Polynomial>> = [[2, 0, 1], [1, 3, 2], [1, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| Polynomial::constant(x)).collect())
            .collect();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&m3), Polynomial::zero());
    }

    #[test]
    fn jacobi_trudi_examples() {
        let one = SkewDiagram::parse("1", "").unwrap();
        let h10 = sum(&[var("1", 0), var("2", 0), var("2b", 0), var("1b", 0)]);
        assert_eq!(jt_det_h(&one, 2), h10);
        assert_eq!(jt_det_e(&one, 2), h10);

        let empty = SkewDiagram::parse("", "").unwrap();
        assert_eq!(jt_det_h(&empty, 2), Polynomial::one());
        assert_eq!(jt_det_e(&empty, 2), Polynomial::one());

        let col = SkewDiagram::parse("1,1", "").unwrap();
        let e = jt_det_e(&col, 2);
        assert_eq!(e, e_coeff(2, 2, 0));
        assert_eq!(e.num_terms(), 5);
        let h = jt_det_h(&col, 2);
        let by_hand = &h_coeff(2, 1, 0).mul(&h_coeff(2, 1, -2)) - &h_coeff(2, 2, 0);
        assert_eq!(h, by_hand);
        assert!(psi_eq(&h, &e, 2).unwrap());
    }
}
