//! Truncated Magnus expansion and Fox free differential calculus.
//!
//! The Magnus map sends `a_j ↦ 1 + t_j` and `a_j⁻¹ ↦ Σ_{i≤N} (-t_j)^i` into the
//! ring of noncommutative integer power series truncated above degree `N`.
//! A word lies in `F_k` exactly when its expansion minus 1 has no terms below
//! degree `k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::freegroup::Word;
use crate::Depth;

/// A monomial `t_{j₁}···t_{j_d}`; the empty monomial is the scalar 1.
///
/// Ordered by degree first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(indices: Vec<u16>) -> Self {
        Monomial(indices)
    }

    pub fn indices(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "t{j}")?;
        }
        Ok(())
    }
}

/// Integer noncommutative polynomial in `t_1..t_n`, truncated above degree `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    alphabet: usize,
    trunc: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(alphabet: usize, trunc: usize) -> Self {
        TruncatedSeries { alphabet, trunc, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: usize, trunc: usize) -> Self {
        let mut s = Self::zero(alphabet, trunc);
        s.terms.insert(Monomial::one(), BigInt::one());
        s
    }

    /// The single variable `t_j`.
    pub fn variable(alphabet: usize, trunc: usize, j: u16) -> Self {
        let mut s = Self::zero(alphabet, trunc);
        if trunc >= 1 {
            s.terms.insert(Monomial(vec![j]), BigInt::one());
        }
        s
    }

    /// Collects terms, summing repeats, dropping zeros and anything above `trunc`.
    pub fn from_terms<I>(alphabet: usize, trunc: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut s = Self::zero(alphabet, trunc);
        for (m, c) in terms {
            if let Some(&j) = m.0.iter().find(|&&j| j == 0 || j as usize > alphabet) {
                return Err(Error::IndexOutOfRange { index: j as i64, rank: alphabet });
            }
            if m.degree() <= trunc {
                s.add_term(m, c);
            }
        }
        Ok(s)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
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

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, indices: &[u16]) -> BigInt {
        self.terms
            .get(&Monomial(indices.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let mut s = self.clone();
        s.trunc = self.trunc.min(other.trunc);
        s.terms.retain(|m, _| m.degree() <= s.trunc);
        for (m, c) in &other.terms {
            if m.degree() <= s.trunc {
                s.add_term(m.clone(), c.clone());
            }
        }
        s
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> TruncatedSeries {
        let mut s = Self::zero(self.alphabet, self.trunc);
        if !c.is_zero() {
            s.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        s
    }

    /// Keep only the degree-`k` terms.
    pub fn homogeneous_part(&self, k: usize) -> TruncatedSeries {
        TruncatedSeries {
            alphabet: self.alphabet,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn truncate(&self, n: usize) -> TruncatedSeries {
        TruncatedSeries {
            alphabet: self.alphabet,
            trunc: n.min(self.trunc),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn with_truncation(mut self, n: usize) -> TruncatedSeries {
        self.terms.retain(|m, _| m.degree() <= n);
        self.trunc = n;
        self
    }

    /// Smallest degree `d ≥ 1` carrying a nonzero term.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).find(|&d| d > 0)
    }

    /// Lie bracket `[s, t] = st − ts`.
    pub fn bracket(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.trunc.min(other.trunc);
        series_mul(self, other, n).sub(&series_mul(other, self, n))
    }

    /// Multiplicative inverse of a series with constant term ±1.
    pub fn inverse_unit(&self) -> Option<TruncatedSeries> {
        let c0 = self.terms.get(&Monomial::one())?;
        if !c0.abs().is_one() {
            return None;
        }
        // s = c0 (1 + u)  ⇒  s⁻¹ = c0 Σ (−u)^i
        let c0 = c0.clone();
        let mut u = self.scale(&c0);
        u.terms.remove(&Monomial::one());
        let neg_u = u.scale(&BigInt::from(-1));
        let mut acc = TruncatedSeries::one(self.alphabet, self.trunc);
        let mut power = TruncatedSeries::one(self.alphabet, self.trunc);
        for _ in 0..self.trunc {
            power = series_mul(&power, &neg_u, self.trunc);
            acc = acc.add(&power);
        }
        Some(acc.scale(&c0))
    }
}

/// Product of two series, discarding everything above degree `n`.
pub fn series_mul(s: &TruncatedSeries, t: &TruncatedSeries, n: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(s.alphabet.max(t.alphabet), n);
    for (ms, cs) in &s.terms {
        if ms.degree() > n {
            break;
        }
        for (mt, ct) in &t.terms {
            if ms.degree() + mt.degree() > n {
                break;
            }
            out.add_term(ms.concat(mt), cs * ct);
        }
    }
    out
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.terms {
            writeln!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

trait Coef: Clone + Sized {
    fn c_zero() -> Self;
    fn c_one() -> Self;
    fn checked_add_assign(&mut self, other: &Self) -> bool;
    fn checked_sub_assign(&mut self, other: &Self) -> bool;
    fn c_is_zero(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Coef for i128 {
    fn c_zero() -> Self {
        0
    }
    fn c_one() -> Self {
        1
    }
    fn checked_add_assign(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn checked_sub_assign(&mut self, other: &Self) -> bool {
        match self.checked_sub(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn c_is_zero(&self) -> bool {
        *self == 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coef for BigInt {
    fn c_zero() -> Self {
        Zero::zero()
    }
    fn c_one() -> Self {
        One::one()
    }
    fn checked_add_assign(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn checked_sub_assign(&mut self, other: &Self) -> bool {
        *self -= other;
        true
    }
    fn c_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense layers: `layers[d]` holds the `n^d` degree-`d` coefficients, indexed
/// by the monomial read as a base-`n` numeral (first letter most significant),
/// so index order is lexicographic order.
fn expand_dense<C: Coef>(w: &Word, n: usize, trunc: usize) -> Option<Vec<Vec<C>>> {
    let mut layers: Vec<Vec<C>> = (0..=trunc).map(|d| vec![C::c_zero(); n.pow(d as u32)]).collect();
    layers[0][0] = C::c_one();
    for &l in w.letters() {
        let j = l.unsigned_abs() as usize - 1;
        if l > 0 {
            // right multiplication by 1 + t_j, highest degree first
            for d in (1..=trunc).rev() {
                let (lo, hi) = layers.split_at_mut(d);
                let (prev, cur) = (&lo[d - 1], &mut hi[0]);
                for (m, c) in prev.iter().enumerate() {
                    if !c.c_is_zero() && !cur[m * n + j].checked_add_assign(c) {
                        return None;
                    }
                }
            }
        } else {
            // r = s (1 + t_j)⁻¹ solves r = s − r t_j, lowest degree first
            for d in 1..=trunc {
                let (lo, hi) = layers.split_at_mut(d);
                let (prev, cur) = (&lo[d - 1], &mut hi[0]);
                for (m, c) in prev.iter().enumerate() {
                    if !c.c_is_zero() && !cur[m * n + j].checked_sub_assign(c) {
                        return None;
                    }
                }
            }
        }
    }
    Some(layers)
}

#[derive(Clone, Debug)]
enum Layers {
    Small(Vec<Vec<i128>>),
    Big(Vec<Vec<BigInt>>),
}

/// A Magnus expansion kept in dense per-degree form.
#[derive(Clone, Debug)]
pub struct MagnusExpansion {
    alphabet: usize,
    trunc: usize,
    layers: Layers,
}

fn decode(mut idx: usize, n: usize, d: usize) -> Monomial {
    let mut v = vec![0u16; d];
    for slot in v.iter_mut().rev() {
        *slot = (idx % n) as u16 + 1;
        idx /= n;
    }
    Monomial(v)
}

impl MagnusExpansion {
    pub fn new(w: &Word, trunc: usize) -> Self {
        let n = w.rank();
        let layers = match expand_dense::<i128>(w, n, trunc) {
            Some(l) => Layers::Small(l),
            None => Layers::Big(expand_dense::<BigInt>(w, n, trunc).expect("bigint never overflows")),
        };
        MagnusExpansion { alphabet: n, trunc, layers }
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    fn degree_is_zero(&self, d: usize) -> bool {
        match &self.layers {
            Layers::Small(l) => l[d].iter().all(|c| *c == 0),
            Layers::Big(l) => l[d].iter().all(Zero::is_zero),
        }
    }

    /// Lower-central-series degree of the expanded word.
    pub fn lcs_degree(&self) -> Depth {
        (1..=self.trunc)
            .find(|&d| !self.degree_is_zero(d))
            .map_or(Depth::AtLeast(self.trunc + 1), Depth::Exact)
    }

    fn degree_terms(&self, d: usize) -> Vec<(Monomial, BigInt)> {
        let n = self.alphabet;
        match &self.layers {
            Layers::Small(l) => l[d]
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (decode(i, n, d), c.to_big()))
                .collect(),
            Layers::Big(l) => l[d]
                .iter()
                .enumerate()
                .filter(|(_, c)| !Zero::is_zero(*c))
                .map(|(i, c)| (decode(i, n, d), c.clone()))
                .collect(),
        }
    }

    /// The degree-`k` part as a homogeneous series.
    pub fn homogeneous(&self, k: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.alphabet, self.trunc);
        if k <= self.trunc {
            s.terms = self.degree_terms(k).into_iter().collect();
        }
        s
    }

    pub fn to_series(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.alphabet, self.trunc);
        for d in 0..=self.trunc {
            s.terms.extend(self.degree_terms(d));
        }
        s
    }
}

/// Magnus expansion of `w` truncated above degree `n`.
pub fn magnus_expand(w: &Word, n: usize) -> TruncatedSeries {
    MagnusExpansion::new(w, n).to_series()
}

/// Lower-central-series degree of `w`, certified up to `n`.
/// The identity reports `AtLeast(n + 1)`.
pub fn lcs_degree(w: &Word, n: usize) -> Depth {
    MagnusExpansion::new(w, n).lcs_degree()
}

/// Element of the integral group ring `ℤ[F]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> Self {
        GroupRingElement { rank, terms: BTreeMap::new() }
    }

    pub fn from_word(w: &Word) -> Self {
        let mut e = Self::zero(w.rank());
        e.terms.insert(w.clone(), BigInt::one());
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, u: &Word) -> GroupRingElement {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(u.multiply(w).expect("same rank"), c.clone());
        }
        out
    }

    /// Augmentation `ε`: sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Linear extension of the Fox derivative `∂_j`.
    pub fn fox_derivative(&self, j: u32) -> GroupRingElement {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            for (u, s) in fox_terms(w, j) {
                out.add_term(u, c * s);
            }
        }
        out
    }
}

/// Expands `∂_j(w)` letter by letter from `∂(uv) = ∂u + u ∂v`:
/// a letter `a_j` at position p contributes `+prefix`, a letter `a_j⁻¹`
/// contributes `−prefix·a_j⁻¹`.
fn fox_terms(w: &Word, j: u32) -> Vec<(Word, i64)> {
    let mut out = Vec::new();
    let mut prefix = Word::identity(w.rank());
    for &l in w.letters() {
        let letter = Word::reduce(w.rank(), [l]).expect("letter in range");
        let next = prefix.multiply(&letter).expect("same rank");
        if l.unsigned_abs() == j {
            if l > 0 {
                out.push((prefix.clone(), 1));
            } else {
                out.push((next.clone(), -1));
            }
        }
        prefix = next;
    }
    out
}

pub fn fox_derivative(w: &Word, j: u32) -> Result<GroupRingElement> {
    if j == 0 || j as usize > w.rank() {
        return Err(Error::IndexOutOfRange { index: j as i64, rank: w.rank() });
    }
    Ok(GroupRingElement::from_word(w).fox_derivative(j))
}

/// `ε ∂_{j₁} ··· ∂_{j_k}(w)`, with `∂_{j_k}` applied first.
pub fn fox_coefficient(w: &Word, js: &[u32]) -> Result<BigInt> {
    if js.is_empty() {
        return Err(Error::InvalidDegree(0));
    }
    if let Some(&j) = js.iter().find(|&&j| j == 0 || j as usize > w.rank()) {
        return Err(Error::IndexOutOfRange { index: j as i64, rank: w.rank() });
    }
    let mut e = GroupRingElement::from_word(w);
    for &j in js.iter().rev() {
        e = e.fox_derivative(j);
        if e.is_zero() {
            return Ok(BigInt::zero());
        }
    }
    Ok(e.augmentation())
}
