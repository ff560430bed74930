//! Words in the free group `F = π₁(Σ_{g,1})` of rank `2g` and mapping classes
//! acting on it as boundary-fixing endomorphisms.
//!
//! Generator `2i-1` is `a_i` and generator `2i` is `b_i`. A letter is a signed
//! generator index; a negative letter is the inverse generator. The boundary
//! word is `ζ = [a_1,b_1]···[a_g,b_g]` with `[u,v] = u v u⁻¹ v⁻¹`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Letter = i32;

/// A generator of the free group, stored by its 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u32);

impl Generator {
    pub fn new(index: u32, rank: usize) -> Result<Self> {
        if index == 0 || index as usize > rank {
            return Err(Error::IndexOutOfRange { index: index as i64, rank });
        }
        Ok(Generator(index))
    }

    pub fn a(i: u32) -> Self {
        Generator(2 * i - 1)
    }

    pub fn b(i: u32) -> Self {
        Generator(2 * i)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    /// Handle number `i` of `a_i` / `b_i`.
    pub fn handle(self) -> u32 {
        self.0.div_ceil(2)
    }

    pub fn is_a(self) -> bool {
        self.0 % 2 == 1
    }
}

/// Printable name of generator `index` in a free group of the given rank.
/// An odd rank `2g+1` reserves its last generator for `gamma`.
pub fn generator_name(index: u32, rank: usize) -> String {
    if rank % 2 == 1 && index as usize == rank {
        return "gamma".to_string();
    }
    let g = Generator(index);
    format!("{}{}", if g.is_a() { 'a' } else { 'b' }, g.handle())
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

fn push_reduced(out: &mut Vec<Letter>, letter: Letter) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// Freely reduce a raw sequence of signed generator indices.
    pub fn reduce<I: IntoIterator<Item = Letter>>(rank: usize, raw: I) -> Result<Self> {
        let mut letters = Vec::new();
        for l in raw {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange { index: l as i64, rank });
            }
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank, letters })
    }

    pub fn generator(rank: usize, gen: Generator) -> Result<Self> {
        Word::reduce(rank, [gen.index() as Letter])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank: self.rank, letters })
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `[u, v] = u v u⁻¹ v⁻¹`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.multiply(other)?
            .multiply(&self.inverse())?
            .multiply(&other.inverse())
    }

    /// Same letters viewed in a free group of larger rank.
    pub fn widen(&self, rank: usize) -> Result<Word> {
        if rank < self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rank });
        }
        Ok(Word { rank, letters: self.letters.clone() })
    }

    /// Exponent sums: the image in `H₁ = F/F₂ ≅ ℤ^rank`.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// True if `self` is a cyclic conjugate of `other` after cyclic reduction.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let (a, b) = (cyclic_core(&self.letters), cyclic_core(&other.letters));
        if a.len() != b.len() || self.rank != other.rank {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|s| a[s..].iter().chain(&a[..s]).eq(b.iter()))
    }
}

fn cyclic_core(letters: &[Letter]) -> &[Letter] {
    let (mut i, mut j) = (0, letters.len());
    while j - i >= 2 && letters[i] == -letters[j - 1] {
        i += 1;
        j -= 1;
    }
    &letters[i..j]
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (pos, &l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&generator_name(l.unsigned_abs(), self.rank))?;
            if l < 0 {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

/// `ζ = [a_1,b_1]···[a_g,b_g]`, the loop parallel to the boundary.
pub fn boundary_word(genus: usize) -> Result<Word> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    let letters = (1..=genus as Letter).flat_map(|i| [2 * i - 1, 2 * i, 1 - 2 * i, -2 * i]);
    Word::reduce(2 * genus, letters)
}

/// Product of handle commutators `[a_first,b_first]···[a_last,b_last]`.
pub fn handle_commutators(genus: usize, first: usize, last: usize) -> Result<Word> {
    if first < 1 || last > genus || first > last {
        return Err(Error::InvalidGenus(genus));
    }
    let letters =
        (first as Letter..=last as Letter).flat_map(|i| [2 * i - 1, 2 * i, 1 - 2 * i, -2 * i]);
    Word::reduce(2 * genus, letters)
}

/// One named Torelli letter of a mapping class decomposition: generator name
/// and exponent ±1.
pub type DecompositionLetter = (String, i8);

/// An endomorphism of `F` given by the images of the `2g` generators,
/// optionally with a verified inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClass {
    genus: usize,
    images: Vec<Word>,
    inverse_images: Option<Vec<Word>>,
    torelli_decomposition: Option<Vec<DecompositionLetter>>,
}

fn check_images(genus: usize, images: &[Word]) -> Result<()> {
    if images.len() != 2 * genus {
        return Err(Error::ImageCount { expected: 2 * genus, found: images.len() });
    }
    if let Some(w) = images.iter().find(|w| w.rank() != 2 * genus) {
        return Err(Error::RankMismatch { left: 2 * genus, right: w.rank() });
    }
    Ok(())
}

impl MappingClass {
    pub fn new(genus: usize, images: Vec<Word>) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidGenus(genus));
        }
        check_images(genus, &images)?;
        Ok(MappingClass { genus, images, inverse_images: None, torelli_decomposition: None })
    }

    pub fn with_inverse(genus: usize, images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        let mut f = MappingClass::new(genus, images)?;
        check_images(genus, &inverse_images)?;
        f.inverse_images = Some(inverse_images);
        Ok(f)
    }

    /// Build from raw letter tables, one row per generator.
    pub fn from_tables(genus: usize, images: &[&[Letter]], inverse: Option<&[&[Letter]]>) -> Result<Self> {
        let rank = 2 * genus;
        let words = |rows: &[&[Letter]]| -> Result<Vec<Word>> {
            rows.iter().map(|r| Word::reduce(rank, r.iter().copied())).collect()
        };
        match inverse {
            Some(inv) => MappingClass::with_inverse(genus, words(images)?, words(inv)?),
            None => MappingClass::new(genus, words(images)?),
        }
    }

    pub fn identity(genus: usize) -> Self {
        let rank = 2 * genus;
        let images: Vec<Word> = (1..=rank as Letter)
            .map(|l| Word { rank, letters: vec![l] })
            .collect();
        MappingClass {
            genus,
            inverse_images: Some(images.clone()),
            images,
            torelli_decomposition: Some(Vec::new()),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, gen: Generator) -> &Word {
        &self.images[gen.index() as usize - 1]
    }

    pub fn inverse_images(&self) -> Option<&[Word]> {
        self.inverse_images.as_deref()
    }

    pub fn torelli_decomposition(&self) -> Option<&[DecompositionLetter]> {
        self.torelli_decomposition.as_deref()
    }

    pub fn with_decomposition(mut self, letters: Vec<DecompositionLetter>) -> Self {
        self.torelli_decomposition = Some(letters);
        self
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters == [i as Letter + 1])
    }

    /// Homomorphic substitution of generator images, freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: w.rank() });
        }
        Ok(substitute(&self.images, w))
    }

    /// `compose(f, h)` acts as `f` after `h`.
    pub fn compose(&self, h: &MappingClass) -> Result<MappingClass> {
        if self.genus != h.genus {
            return Err(Error::GenusMismatch { left: self.genus, right: h.genus });
        }
        let images = h.images.iter().map(|w| substitute(&self.images, w)).collect();
        let inverse_images = match (&self.inverse_images, &h.inverse_images) {
            (Some(fi), Some(hi)) => Some(fi.iter().map(|w| substitute(hi, w)).collect()),
            _ => None,
        };
        let torelli_decomposition = match (&self.torelli_decomposition, &h.torelli_decomposition) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(MappingClass { genus: self.genus, images, inverse_images, torelli_decomposition })
    }

    /// The supplied inverse; never computed by search.
    pub fn inverse(&self) -> Result<MappingClass> {
        let inv = self.inverse_images.clone().ok_or(Error::MissingInverse)?;
        let torelli_decomposition = self.torelli_decomposition.as_ref().map(|d| {
            d.iter().rev().map(|(n, e)| (n.clone(), -e)).collect()
        });
        Ok(MappingClass {
            genus: self.genus,
            images: inv,
            inverse_images: Some(self.images.clone()),
            torelli_decomposition,
        })
    }

    /// Action on `H₁`: column `j` is the abelianized image of generator `j`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let cols: Vec<Vec<i64>> = self.images.iter().map(Word::abelianize).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::with_capacity(3);

        let zeta = boundary_word(self.genus).expect("genus >= 1");
        let image = substitute(&self.images, &zeta);
        checks.push(if image == zeta {
            Check::pass("boundary", "ζ fixed")
        } else {
            Check::fail("boundary", format!("ζ ↦ {image}"))
        });

        let det = determinant(&self.abelianization());
        checks.push(if det.abs().is_one() {
            Check::pass("abelianization", format!("det = {det}"))
        } else {
            Check::fail("abelianization", format!("det = {det}"))
        });

        checks.push(match &self.inverse_images {
            None => Check { name: "inverse", status: CheckStatus::Skipped, detail: "no inverse supplied".into() },
            Some(inv) => {
                let bad = (0..self.rank()).find(|&i| {
                    let want = [i as Letter + 1];
                    substitute(&self.images, &inv[i]).letters != want
                        || substitute(inv, &self.images[i]).letters != want
                });
                match bad {
                    None => Check::pass("inverse", "both compositions fix every generator"),
                    Some(i) => Check::fail(
                        "inverse",
                        format!("generator {} not fixed", generator_name(i as u32 + 1, self.rank())),
                    ),
                }
            }
        });

        ValidationReport { checks }
    }

    /// `validate`, turned into an error when any check fails.
    pub fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::Validation(report))
        }
    }

    /// The images `f(α_i)·α_i⁻¹` whose lower-central-series degrees decide
    /// membership in the Johnson filtration.
    pub fn displacements(&self) -> Vec<Word> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let mut letters = w.letters.clone();
                push_reduced(&mut letters, -(i as Letter + 1));
                Word { rank: self.rank(), letters }
            })
            .collect()
    }
}

fn substitute(images: &[Word], w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.len() * 4);
    for &l in &w.letters {
        let img = &images[l.unsigned_abs() as usize - 1].letters;
        if l > 0 {
            img.iter().for_each(|&x| push_reduced(&mut letters, x));
        } else {
            img.iter().rev().for_each(|&x| push_reduced(&mut letters, -x));
        }
    }
    Word { rank: w.rank, letters }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Check { name, status: CheckStatus::Pass, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Check { name, status: CheckStatus::Fail, detail: detail.into() }
    }
}

/// Outcome of [`MappingClass::validate`], one entry per invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let s = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skipped",
            };
            write!(f, "{} {} ({})", c.name, s, c.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(rank: usize, l: &[Letter]) -> Word {
        Word::reduce(rank, l.iter().copied()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(w(2, &[1, -1]).is_identity());
        assert_eq!(w(4, &[1, 3, -3, 1]).letters(), &[1, 1]);
        assert_eq!(w(2, &[1, 2, -1, -2]).letters(), &[1, 2, -1, -2]);
        assert!(matches!(Word::reduce(2, [3]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(Word::reduce(2, [0]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn multiply_examples() {
        assert!(w(2, &[1]).multiply(&w(2, &[-1])).unwrap().is_identity());
        // a1 a2 · a2⁻¹ b1 with a2 = index 3
        assert_eq!(w(4, &[1, 3]).multiply(&w(4, &[-3, 2])).unwrap().letters(), &[1, 2]);
        let z = boundary_word(2).unwrap();
        assert!(z.multiply(&z.inverse()).unwrap().is_identity());
        assert!(matches!(w(2, &[1]).multiply(&w(4, &[1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn boundary_word_examples() {
        assert_eq!(boundary_word(1).unwrap().to_string(), "a1 b1 a1' b1'");
        assert_eq!(boundary_word(2).unwrap().to_string(), "a1 b1 a1' b1' a2 b2 a2' b2'");
        assert_eq!(boundary_word(3).unwrap().len(), 12);
        assert!(boundary_word(0).is_err());
    }

    fn boundary_twist_g1() -> MappingClass {
        let z = [1, 2, -1, -2];
        let zi = [2, 1, -2, -1];
        let conj = |c: &[Letter], d: &[Letter], x: Letter| -> Vec<Letter> {
            c.iter().copied().chain([x]).chain(d.iter().copied()).collect()
        };
        let a = conj(&z, &zi, 1);
        let b = conj(&z, &zi, 2);
        let ai = conj(&zi, &z, 1);
        let bi = conj(&zi, &z, 2);
        MappingClass::from_tables(1, &[&a, &b], Some(&[&ai, &bi])).unwrap()
    }

    #[test]
    fn apply_examples() {
        let id = MappingClass::identity(2);
        let x = w(4, &[1, 4, -2, 3]);
        assert_eq!(id.apply(&x).unwrap(), x);

        let f = boundary_twist_g1();
        assert_eq!(f.apply(&w(2, &[1])).unwrap().to_string(), "a1 b1 a1' b1' a1 b1 a1 b1' a1'");
        let z = boundary_word(1).unwrap();
        assert_eq!(f.apply(&z).unwrap(), z);
    }

    #[test]
    fn compose_and_inverse() {
        let f = boundary_twist_g1();
        assert_eq!(f.compose(&MappingClass::identity(1)).unwrap().images(), f.images());
        let g = f.compose(&f.inverse().unwrap()).unwrap();
        assert!(g.is_identity());
        assert!(g.validate().passed());
        let bad = MappingClass::new(1, vec![w(2, &[1]), w(2, &[2])]).unwrap();
        assert_eq!(bad.inverse(), Err(Error::MissingInverse));
    }

    #[test]
    fn validate_examples() {
        let rep = MappingClass::identity(3).validate();
        assert!(rep.checks.iter().all(|c| c.status == CheckStatus::Pass));

        // swapping a1 and b1 reverses ζ
        let f = MappingClass::new(1, vec![w(2, &[2]), w(2, &[1])]).unwrap();
        let rep = f.validate();
        assert_eq!(rep.check("boundary").unwrap().status, CheckStatus::Fail);
        assert_eq!(rep.check("abelianization").unwrap().status, CheckStatus::Pass);
        assert!(!rep.passed());

        assert!(boundary_twist_g1().validate().passed());
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![2, 1], vec![4, 2]]), BigInt::zero());
        assert_eq!(
            determinant(&[vec![0, 2, 1], vec![1, 0, 0], vec![3, 1, 1]]),
            BigInt::from(-1)
        );
    }

    #[test]
    fn conjugacy() {
        let a = w(4, &[3]);
        let c = w(4, &[1, 2, -1, -2, 3, 2, 1, -2, -1]);
        assert!(c.is_conjugate_to(&a));
        assert!(!w(4, &[3, 3]).is_conjugate_to(&a));
    }

    fn word_strategy(rank: usize, max: usize) -> impl Strategy<Value = Word> {
        let r = rank as Letter;
        prop::collection::vec((1..=r, any::<bool>()), 0..max)
            .prop_map(move |v| Word::reduce(rank, v.into_iter().map(|(i, s)| if s { i } else { -i })).unwrap())
    }

    fn raw_strategy(rank: usize) -> impl Strategy<Value = Vec<Letter>> {
        let r = rank as Letter;
        prop::collection::vec((1..=r, any::<bool>()), 0..30)
            .prop_map(|v| v.into_iter().map(|(i, s)| if s { i } else { -i }).collect())
    }

    proptest! {
        #[test]
        fn reduce_idempotent_and_shrinking(raw in raw_strategy(4)) {
            let once = Word::reduce(4, raw.iter().copied()).unwrap();
            let twice = Word::reduce(4, once.letters().iter().copied()).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.len() <= raw.len());
            prop_assert!(once.letters().windows(2).all(|p| p[0] != -p[1]));
        }

        #[test]
        fn multiply_associative(u in word_strategy(6, 12), v in word_strategy(6, 12), x in word_strategy(6, 12)) {
            let l = u.multiply(&v).unwrap().multiply(&x).unwrap();
            let r = u.multiply(&v.multiply(&x).unwrap()).unwrap();
            prop_assert_eq!(l, r);
            prop_assert!(u.multiply(&u.inverse()).unwrap().is_identity());
        }

        #[test]
        fn apply_is_homomorphic(u in word_strategy(2, 10), v in word_strategy(2, 10)) {
            let f = boundary_twist_g1();
            let lhs = f.apply(&u.multiply(&v).unwrap()).unwrap();
            let rhs = f.apply(&u).unwrap().multiply(&f.apply(&v).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn multiply_associative_exhaustive_short() {
        let letters = [1, -1, 2, -2];
        let mut words = vec![Word::identity(2)];
        for len in 1..=3 {
            let mut idx = vec![0usize; len];
            loop {
                words.push(w(2, &idx.iter().map(|&i| letters[i]).collect::<Vec<_>>()));
                let mut p = 0;
                while p < len && idx[p] == 3 {
                    idx[p] = 0;
                    p += 1;
                }
                if p == len {
                    break;
                }
                idx[p] += 1;
            }
        }
        words.sort();
        words.dedup();
        for u in &words {
            for v in &words {
                for x in &words {
                    let l = u.multiply(v).unwrap().multiply(x).unwrap();
                    let r = u.multiply(&v.multiply(x).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}
