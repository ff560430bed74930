//! The free Lie ring inside the Magnus algebra.
//!
//! Degree-`k` Lie elements are written in the basis of standard bracketings of
//! Lyndon words of length `k`. The bracketing of a Lyndon word `w` expands to
//! `w` plus lexicographically larger monomials, so coordinates come out of a
//! back-substitution on the lex-least remaining monomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::magnus::{series_mul, Monomial, TruncatedSeries};

/// A word strictly smaller than each of its proper rotations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord(Vec<u16>);

pub fn is_lyndon(w: &[u16]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|s| w < &[&w[s..], &w[..s]].concat()[..])
}

impl LyndonWord {
    pub fn new(indices: Vec<u16>) -> Option<Self> {
        if is_lyndon(&indices) && !indices.contains(&0) {
            Some(LyndonWord(indices))
        } else {
            None
        }
    }

    pub fn indices(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w = uv` with `v` the longest proper Lyndon suffix.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        (1..self.0.len())
            .find(|&i| is_lyndon(&self.0[i..]))
            .map(|i| (LyndonWord(self.0[..i].to_vec()), LyndonWord(self.0[i..].to_vec())))
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("L[")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("]")
    }
}

/// All Lyndon words of length `k` over `1..=n`, in lexicographic order.
pub fn lyndon_basis(n: usize, k: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    // Duval's generation of Lyndon words of length ≤ k.
    let n = n as u16;
    let mut w: Vec<u16> = vec![1];
    loop {
        if w.len() == k {
            out.push(LyndonWord(w.clone()));
        }
        let m = w.len();
        while w.len() < k {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&n) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

fn mobius(mut n: usize) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree-`k` piece of the free Lie ring on `n` letters,
/// `(1/k) Σ_{d|k} μ(d) n^{k/d}`.
pub fn witt_dim(n: usize, k: usize) -> u128 {
    if n == 0 || k == 0 {
        return 0;
    }
    let total: i128 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mobius(d) * (n as i128).pow((k / d) as u32))
        .sum();
    (total / k as i128) as u128
}

/// Expands the standard bracketing of a Lyndon word into the Magnus algebra.
pub fn bracketing(w: &LyndonWord, alphabet: usize) -> TruncatedSeries {
    let mut cache = HashMap::new();
    bracketing_cached(w, alphabet, &mut cache)
}

fn bracketing_cached(
    w: &LyndonWord,
    alphabet: usize,
    cache: &mut HashMap<LyndonWord, TruncatedSeries>,
) -> TruncatedSeries {
    if let Some(s) = cache.get(w) {
        return s.clone();
    }
    let k = w.len();
    let s = match w.standard_factorization() {
        None => TruncatedSeries::variable(alphabet, k, w.0[0]),
        Some((u, v)) => {
            let bu = bracketing_cached(&u, alphabet, cache).with_truncation(k);
            let bv = bracketing_cached(&v, alphabet, cache).with_truncation(k);
            bu.bracket(&bv)
        }
    };
    cache.insert(w.clone(), s.clone());
    s
}

/// A homogeneous element of the free Lie ring in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    degree: usize,
    alphabet: usize,
    coords: BTreeMap<LyndonWord, BigInt>,
}

impl LieElement {
    pub fn zero(alphabet: usize, degree: usize) -> Self {
        LieElement { degree, alphabet, coords: BTreeMap::new() }
    }

    pub fn from_coords<I>(alphabet: usize, degree: usize, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LyndonWord, BigInt)>,
    {
        let mut e = Self::zero(alphabet, degree);
        for (w, c) in coords {
            if w.len() != degree {
                return Err(Error::InvalidDegree(w.len()));
            }
            if let Some(&j) = w.0.iter().find(|&&j| j as usize > alphabet) {
                return Err(Error::IndexOutOfRange { index: j as i64, rank: alphabet });
            }
            e.add_coord(w, c);
        }
        Ok(e)
    }

    fn add_coord(&mut self, w: LyndonWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(w.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&w);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn coords(&self) -> impl Iterator<Item = (&LyndonWord, &BigInt)> {
        self.coords.iter()
    }

    pub fn coordinate(&self, w: &[u16]) -> BigInt {
        self.coords.get(&LyndonWord(w.to_vec())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut e = self.clone();
        for (w, c) in &other.coords {
            e.add_coord(w.clone(), c.clone());
        }
        e
    }

    pub fn scale(&self, c: &BigInt) -> LieElement {
        let mut e = Self::zero(self.alphabet, self.degree);
        if !c.is_zero() {
            e.coords = self.coords.iter().map(|(w, v)| (w.clone(), v * c)).collect();
        }
        e
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&BigInt::from(-1))
    }

    /// `Σ c_w · bracketing(w)` in the Magnus algebra.
    pub fn to_series(&self) -> TruncatedSeries {
        let mut cache = HashMap::new();
        let mut s = TruncatedSeries::zero(self.alphabet, self.degree);
        for (w, c) in &self.coords {
            s = s.add(&bracketing_cached(w, self.alphabet, &mut cache).scale(c));
        }
        s
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return writeln!(f, "0");
        }
        for (w, c) in &self.coords {
            writeln!(f, "{c} * {w}")?;
        }
        Ok(())
    }
}

/// Lyndon coordinates of a homogeneous degree-`k` series, or
/// [`Error::NotALieElement`] when it is not in the free Lie ring.
pub fn to_lyndon_coords(s: &TruncatedSeries, k: usize) -> Result<LieElement> {
    if k == 0 || !s.is_homogeneous(k) {
        return Err(Error::NotALieElement { degree: k });
    }
    let alphabet = s.alphabet();
    let mut rest: BTreeMap<Vec<u16>, BigInt> = s
        .terms()
        .map(|(m, c)| (m.indices().to_vec(), c.clone()))
        .collect();
    let mut out = LieElement::zero(alphabet, k);
    let mut cache = HashMap::new();
    while let Some((m, c)) = rest.pop_first() {
        let Some(w) = LyndonWord::new(m) else {
            return Err(Error::NotALieElement { degree: k });
        };
        let b = bracketing_cached(&w, alphabet, &mut cache);
        for (bm, bc) in b.terms() {
            if bm.indices() == w.indices() {
                continue;
            }
            let e = rest.entry(bm.indices().to_vec()).or_default();
            *e -= &c * bc;
            if e.is_zero() {
                rest.remove(bm.indices());
            }
        }
        out.coords.insert(w, c);
    }
    Ok(out)
}

/// Left-normed bracketing `t_{j₁}···t_{j_k} ↦ [...[t_{j₁},t_{j₂}],...,t_{j_k}]`,
/// extended linearly. A degree-`k` series `s` is Lie iff `dynkin(s) = k·s`.
pub fn dynkin(s: &TruncatedSeries) -> TruncatedSeries {
    let n = s.alphabet();
    let trunc = s.truncation();
    let mut out = TruncatedSeries::zero(n, trunc);
    for (m, c) in s.terms() {
        let idx = m.indices();
        if idx.is_empty() {
            continue;
        }
        let mut p = TruncatedSeries::variable(n, trunc, idx[0]);
        for &j in &idx[1..] {
            let t = TruncatedSeries::variable(n, trunc, j);
            p = series_mul(&p, &t, trunc).sub(&series_mul(&t, &p, trunc));
        }
        out = out.add(&p.scale(c));
    }
    out
}

/// An element of `H₁ ⊗ L_k`: one Lie element per basis vector of `H₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1LieTensor {
    degree: usize,
    components: Vec<LieElement>,
}

impl H1LieTensor {
    pub fn new(degree: usize, components: Vec<LieElement>) -> Result<Self> {
        let n = components.len();
        if let Some(c) = components.iter().find(|c| c.degree != degree || c.alphabet != n) {
            return Err(Error::InvalidDegree(c.degree));
        }
        Ok(H1LieTensor { degree, components })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[LieElement] {
        &self.components
    }
}

/// `Σ_i [t_i, ξ_i]`: the bracket map `H₁ ⊗ L_k → L_{k+1}`.
pub fn bracket_map(e: &H1LieTensor) -> LieElement {
    let n = e.components.len();
    let k = e.degree + 1;
    let mut s = TruncatedSeries::zero(n, k);
    for (i, xi) in e.components.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let t = TruncatedSeries::variable(n, k, i as u16 + 1);
        s = s.add(&t.bracket(&xi.to_series().with_truncation(k)));
    }
    to_lyndon_coords(&s, k).expect("bracket of Lie elements is Lie")
}

/// Coefficient vector helper used in tests and the CLI: monomial of a word.
pub fn monomial(indices: &[u16]) -> Monomial {
    Monomial::new(indices.to_vec())
}

/// `true` when `s` passes the Dynkin–Specht–Wever test in degree `k`.
pub fn dynkin_is_lie(s: &TruncatedSeries, k: usize) -> bool {
    s.is_homogeneous(k) && dynkin(s) == s.scale(&BigInt::from(k as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn lw(v: &[u16]) -> LyndonWord {
        LyndonWord::new(v.to_vec()).unwrap()
    }

    fn series(n: usize, k: usize, terms: &[(&[u16], i64)]) -> TruncatedSeries {
        TruncatedSeries::from_terms(n, k, terms.iter().map(|(m, c)| (monomial(m), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(lyndon_basis(2, 1), vec![lw(&[1]), lw(&[2])]);
        assert_eq!(lyndon_basis(2, 3), vec![lw(&[1, 1, 2]), lw(&[1, 2, 2])]);
        let b = lyndon_basis(4, 2);
        assert_eq!(b.len(), 6);
        assert!(b.iter().all(|w| w.indices()[0] < w.indices()[1]));
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dim(4, 1), 4);
        assert_eq!(witt_dim(4, 2), 6);
        assert_eq!(witt_dim(4, 3), 20);
        assert_eq!(witt_dim(2, 2), 1);
    }

    #[test]
    fn lyndon_property() {
        assert!(is_lyndon(&[1, 1, 2]));
        assert!(!is_lyndon(&[1, 2, 1]));
        assert!(!is_lyndon(&[1, 2, 1, 2]));
        assert!(LyndonWord::new(vec![2, 1]).is_none());
        assert_eq!(
            lw(&[1, 1, 2]).standard_factorization(),
            Some((lw(&[1]), lw(&[1, 2])))
        );
    }

    #[test]
    fn bracketing_examples() {
        assert_eq!(bracketing(&lw(&[1]), 2), series(2, 1, &[(&[1], 1)]));
        assert_eq!(bracketing(&lw(&[1, 2]), 2), series(2, 2, &[(&[1, 2], 1), (&[2, 1], -1)]));
        // [1,[1,2]] = t1 t1 t2 − 2 t1 t2 t1 + t2 t1 t1
        let b = bracketing(&lw(&[1, 1, 2]), 2);
        assert_eq!(b, series(2, 3, &[(&[1, 1, 2], 1), (&[1, 2, 1], -2), (&[2, 1, 1], 1)]));
        assert_eq!(b.terms().next().unwrap().0.indices(), &[1, 1, 2]);
    }

    #[test]
    fn coords_examples() {
        let c = to_lyndon_coords(&series(2, 2, &[(&[1, 2], 1), (&[2, 1], -1)]), 2).unwrap();
        assert_eq!(c.coordinate(&[1, 2]), BigInt::one());
        assert_eq!(c.coords().count(), 1);

        let c = to_lyndon_coords(&bracketing(&lw(&[1, 1, 2]), 2), 3).unwrap();
        assert_eq!(c.coordinate(&[1, 1, 2]), BigInt::one());
        assert_eq!(c.coords().count(), 1);

        assert_eq!(
            to_lyndon_coords(&series(2, 2, &[(&[1, 2], 1)]), 2),
            Err(Error::NotALieElement { degree: 2 })
        );
    }

    #[test]
    fn dynkin_examples() {
        let t1 = series(2, 1, &[(&[1], 1)]);
        assert_eq!(dynkin(&t1), t1);
        let l = series(2, 2, &[(&[1, 2], 1), (&[2, 1], -1)]);
        assert_eq!(dynkin(&l), l.scale(&BigInt::from(2)));
        let t12 = series(2, 2, &[(&[1, 2], 1)]);
        assert_eq!(dynkin(&t12), l);
        assert!(!dynkin_is_lie(&t12, 2));
    }

    #[test]
    fn bracket_map_examples() {
        // component a1 = [t1,t2] over alphabet 2 (genus 1): [t1,[t1,t2]] ≠ 0
        let l = to_lyndon_coords(&bracketing(&lw(&[1, 2]), 2), 2).unwrap();
        let e = H1LieTensor::new(2, vec![l, LieElement::zero(2, 2)]).unwrap();
        let out = bracket_map(&e);
        assert_eq!(out.coordinate(&[1, 1, 2]), BigInt::one());
        let zero = H1LieTensor::new(2, vec![LieElement::zero(2, 2), LieElement::zero(2, 2)]).unwrap();
        assert!(bracket_map(&zero).is_zero());
    }

    #[test]
    fn witt_matches_basis_small() {
        for n in 1..=6 {
            for k in 1..=6 {
                assert_eq!(lyndon_basis(n, k).len() as u128, witt_dim(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn triangularity() {
        for n in 1..=3 {
            for k in 1..=5 {
                for w in lyndon_basis(n, k) {
                    let b = bracketing(&w, n);
                    let (m, c) = b.terms().next().unwrap();
                    assert_eq!(m.indices(), w.indices());
                    assert!(c.is_one());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(coeffs in prop::collection::vec(-5i64..=5, 20)) {
            let basis = lyndon_basis(4, 3);
            let e = LieElement::from_coords(
                4, 3, basis.into_iter().zip(coeffs).map(|(w, c)| (w, BigInt::from(c))),
            ).unwrap();
            prop_assert_eq!(to_lyndon_coords(&e.to_series(), 3).unwrap(), e);
        }

        #[test]
        fn dynkin_agrees_with_elimination(
            coeffs in prop::collection::vec(-3i64..=3, 6),
            noise in prop::option::of((prop::collection::vec(1u16..=3, 3), 1i64..=4)),
        ) {
            let basis = lyndon_basis(3, 3);
            let e = LieElement::from_coords(
                3, 3, basis.into_iter().zip(coeffs).map(|(w, c)| (w, BigInt::from(c))),
            ).unwrap();
            let mut s = e.to_series();
            if let Some((m, c)) = noise {
                s = s.add(&TruncatedSeries::from_terms(3, 3, [(monomial(&m), BigInt::from(c))]).unwrap());
            }
            prop_assert_eq!(to_lyndon_coords(&s, 3).is_ok(), dynkin_is_lie(&s, 3));
        }
    }
}
