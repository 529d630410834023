//! The ring generated by the variables z_{i,a}, and the barred-elimination map
//! into integer Laurent polynomials over the unbarred variables.
//!
//! Spectral parameters are stored as integer offsets `d` standing for `a + d`
//! with `a` symbolic. Equality in the quotient ring is decided by comparing
//! images under [`psi`], which respects every defining relation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the alphabet 1, ..., n, n̄, ..., 1̄.
///
/// The derived ordering is the total order 1 ≺ 2 ≺ … ≺ n ≺ n̄ ≺ … ≺ 1̄, which
/// does not depend on n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: u32,
    barred: bool,
}

impl Letter {
    pub const fn unbarred(index: u32) -> Self {
        Letter {
            index,
            barred: false,
        }
    }

    pub const fn barred(index: u32) -> Self {
        Letter {
            index,
            barred: true,
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// The bar involution k ↔ k̄.
    pub fn bar(self) -> Self {
        Letter {
            index: self.index,
            barred: !self.barred,
        }
    }

    /// Position in the order for rank `n`: 1 ↦ 0, …, n ↦ n-1, n̄ ↦ n, …, 1̄ ↦ 2n-1.
    pub fn rank(self, n: u32) -> u32 {
        if self.barred {
            2 * n - self.index
        } else {
            self.index - 1
        }
    }

    pub fn from_rank(rank: u32, n: u32) -> Self {
        if rank < n {
            Letter::unbarred(rank + 1)
        } else {
            Letter::barred(2 * n - rank)
        }
    }

    /// All 2n letters in increasing order.
    pub fn alphabet(n: u32) -> Vec<Letter> {
        (0..2 * n).map(|r| Letter::from_rank(r, n)).collect()
    }

    pub fn check_rank(self, n: u32) -> Result<()> {
        if self.index == 0 || self.index > n {
            Err(Error::LetterOutOfRange {
                index: self.index,
                n,
            })
        } else {
            Ok(())
        }
    }

    /// The JSON spelling: `"2"` or `"2bar"`.
    pub fn json_name(self) -> String {
        if self.barred {
            format!("{}bar", self.index)
        } else {
            self.index.to_string()
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.barred, other.barred) {
            (false, false) => self.index.cmp(&other.index),
            (true, true) => other.index.cmp(&self.index),
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}b", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// Accepts `"3"`, `"3b"` and `"3bar"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, barred) = if let Some(d) = s.strip_suffix("bar") {
            (d, true)
        } else if let Some(d) = s.strip_suffix('b') {
            (d, true)
        } else {
            (s, false)
        };
        let index: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!("bad letter {s:?}")));
        }
        Ok(Letter { index, barred })
    }
}

/// z_{letter, a+shift}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    pub letter: Letter,
    pub shift: i64,
}

impl Variable {
    pub fn new(letter: Letter, shift: i64) -> Self {
        Variable { letter, shift }
    }

    pub fn shifted(self, d: i64) -> Self {
        Variable {
            letter: self.letter,
            shift: self.shift + d,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z[{},{}]", self.letter, self.shift)
    }
}

/// A product of variables with positive powers, kept sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_factors<I: IntoIterator<Item = Variable>>(factors: I) -> Self {
        let mut counts: BTreeMap<Variable, u32> = BTreeMap::new();
        for v in factors {
            *counts.entry(v).or_default() += 1;
        }
        Monomial(counts.into_iter().collect())
    }

    fn from_powers(powers: Vec<(Variable, u32)>) -> Self {
        let mut counts: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, p) in powers {
            if p > 0 {
                *counts.entry(v).or_default() += p;
            }
        }
        Monomial(counts.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, p)| p).sum()
    }

    pub fn shifted(&self, d: i64) -> Self {
        Monomial(self.0.iter().map(|&(v, p)| (v.shifted(d), p)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, pa) = self.0[i];
            let (b, pb) = other.0[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, pa));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, pb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, pa + pb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, p)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *p > 1 {
                write!(f, "^{p}")?;
            }
        }
        Ok(())
    }
}

/// An integer polynomial in the variables z_{i,a+d}. No zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(Monomial::one(), BigInt::one())
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::monomial(Monomial::one(), BigInt::from(c))
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::monomial(Monomial(vec![(v, 1)]), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `d` to every spectral offset.
    pub fn shifted(&self, d: i64) -> Self {
        if d == 0 {
            return self.clone();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shifted(d), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn max_letter_index(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.letter.index))
            .max()
            .unwrap_or(0)
    }

    /// The JSON form `{"terms":[{"coeff":c,"vars":[{"letter":..,"shift":..,"power":..}]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("polynomial json")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial json")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let pj: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Polynomial::try_from(pj)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let pj: PolyJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Polynomial::try_from(pj)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter())
    }
}

fn fmt_terms<'a, M: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let ms = m.to_string();
        if ms == "1" {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{ms}")?;
        } else {
            write!(f, "{abs}*{ms}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[derive(Serialize, Deserialize)]
struct VarJson {
    letter: String,
    shift: i64,
    power: u32,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: serde_json::Number,
    vars: Vec<VarJson>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        PolyJson {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: serde_json::Number::from_str(&c.to_string())
                        .expect("integer is a json number"),
                    vars: m
                        .0
                        .iter()
                        .map(|(v, pw)| VarJson {
                            letter: v.letter.json_name(),
                            shift: v.shift,
                            power: *pw,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for Polynomial {
    type Error = Error;
    fn try_from(pj: PolyJson) -> Result<Self> {
        let mut p = Polynomial::zero();
        for t in pj.terms {
            let c = BigInt::from_str(&t.coeff.to_string())
                .map_err(|_| Error::Parse(format!("coefficient {} is not an integer", t.coeff)))?;
            let powers = t
                .vars
                .into_iter()
                .map(|v| Ok((Variable::new(v.letter.parse()?, v.shift), v.power)))
                .collect::<Result<Vec<_>>>()?;
            p.add_term(Monomial::from_powers(powers), c);
        }
        Ok(p)
    }
}

/// An unbarred variable z_{index, a+shift} inside a Laurent monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeVar {
    pub index: u32,
    pub shift: i64,
}

/// A Laurent monomial in unbarred variables; exponents are nonzero and may be negative.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMonomial(Vec<(FreeVar, i64)>);

impl LaurentMonomial {
    pub fn one() -> Self {
        LaurentMonomial(Vec::new())
    }

    pub fn var(index: u32, shift: i64, exp: i64) -> Self {
        if index == 0 || exp == 0 {
            // z_{0,a} = 1
            return LaurentMonomial::one();
        }
        LaurentMonomial(vec![(FreeVar { index, shift }, exp)])
    }

    pub fn exponents(&self) -> &[(FreeVar, i64)] {
        &self.0
    }

    pub fn mul(&self, other: &LaurentMonomial) -> LaurentMonomial {
        let mut acc: BTreeMap<FreeVar, i64> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *acc.entry(v).or_default() += e;
        }
        LaurentMonomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn pow(&self, k: u32) -> LaurentMonomial {
        LaurentMonomial(self.0.iter().map(|&(v, e)| (v, e * k as i64)).collect())
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "z[{},{}]", v.index, v.shift)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Integer Laurent polynomial in the unbarred variables only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeLaurent {
    terms: BTreeMap<LaurentMonomial, BigInt>,
}

impl FreeLaurent {
    pub fn zero() -> Self {
        FreeLaurent::default()
    }

    pub fn one() -> Self {
        FreeLaurent::from_monomial(LaurentMonomial::one())
    }

    pub fn from_monomial(m: LaurentMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        FreeLaurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: LaurentMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn mul(&self, other: &FreeLaurent) -> FreeLaurent {
        let mut out = FreeLaurent::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &FreeLaurent) -> FreeLaurent {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> FreeLaurent {
        FreeLaurent {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for FreeLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter())
    }
}

/// Image of a single variable as a Laurent monomial.
///
/// Barred letters unfold as
/// z_{ī,b} = ∏_{j=1..i} z_{j-1, b+2n-2j+4} / z_{j, b+2n-2j+4}, with z_0 = 1.
pub fn eliminate_monomial(v: Variable, n: u32) -> Result<LaurentMonomial> {
    v.letter.check_rank(n)?;
    let i = v.letter.index;
    if !v.letter.barred {
        return Ok(LaurentMonomial::var(i, v.shift, 1));
    }
    let mut acc = LaurentMonomial::one();
    for j in 1..=i {
        let c = v.shift + 2 * n as i64 - 2 * j as i64 + 4;
        acc = acc
            .mul(&LaurentMonomial::var(j - 1, c, 1))
            .mul(&LaurentMonomial::var(j, c, -1));
    }
    Ok(acc)
}

pub fn eliminate_barred(v: Variable, n: u32) -> Result<FreeLaurent> {
    Ok(FreeLaurent::from_monomial(eliminate_monomial(v, n)?))
}

pub fn psi_monomial(m: &Monomial, n: u32) -> Result<LaurentMonomial> {
    let mut acc = LaurentMonomial::one();
    for &(v, p) in &m.0 {
        acc = acc.mul(&eliminate_monomial(v, n)?.pow(p));
    }
    Ok(acc)
}

/// The ring homomorphism eliminating barred variables.
pub fn psi(p: &Polynomial, n: u32) -> Result<FreeLaurent> {
    let mut out = FreeLaurent::zero();
    for (m, c) in &p.terms {
        out.add_term(psi_monomial(m, n)?, c.clone());
    }
    Ok(out)
}

/// Equality in the quotient ring, decided through [`psi`].
pub fn psi_eq(a: &Polynomial, b: &Polynomial, n: u32) -> Result<bool> {
    Ok(psi(a, n)? == psi(b, n)?)
}

/// Checks z_{i,d} z_{ī,d-2n+2i-4} = z_{i-1,d} z_{(i-1)bar,d-2n+2i-4} under ψ for
/// all i in 1..=n and every even d in `lo..=hi`.
pub fn check_relations(n: u32, lo: i64, hi: i64) -> bool {
    let nn = n as i64;
    for i in 1..=n {
        let ii = i as i64;
        for d in (lo..=hi).filter(|d| d.rem_euclid(2) == 0) {
            let e = d - 2 * nn + 2 * ii - 4;
            let lhs = Polynomial::var(Variable::new(Letter::unbarred(i), d))
                .mul(&Polynomial::var(Variable::new(Letter::barred(i), e)));
            let rhs = if i == 1 {
                Polynomial::one()
            } else {
                Polynomial::var(Variable::new(Letter::unbarred(i - 1), d))
                    .mul(&Polynomial::var(Variable::new(Letter::barred(i - 1), e)))
            };
            match psi_eq(&lhs, &rhs, n) {
                Ok(true) => {}
                _ => return false,
            }
        }
    }
    true
}
