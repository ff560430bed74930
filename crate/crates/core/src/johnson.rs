//! The Johnson filtration: depth, the homomorphisms `τ_k`, Morita's
//! containment test and the `J(2k−1)` equivalence behind `σ_k`.
//!
//! `f ∈ J(k)` iff every displacement `f(α_i)·α_i⁻¹` lies in `F_k`, which is
//! read off the lowest nonzero degree of its Magnus expansion.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{generator_name, MappingClass};
use crate::lie::{bracket_map, to_lyndon_coords, H1LieTensor, LieElement};
use crate::magnus::MagnusExpansion;
use crate::Depth;

pub const DEFAULT_DEPTH_CUTOFF: usize = 6;
pub const DEFAULT_TOWER_MAX: usize = 5;

/// `τ_k(f)` in Hom-form: one Lie element per generator `α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauValue {
    k: usize,
    genus: usize,
    components: Vec<LieElement>,
}

impl TauValue {
    pub fn zero(genus: usize, k: usize) -> Self {
        TauValue { k, genus, components: vec![LieElement::zero(2 * genus, k); 2 * genus] }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn components(&self) -> &[LieElement] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(LieElement::is_zero)
    }

    pub fn add(&self, other: &TauValue) -> Result<TauValue> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch { left: self.genus, right: other.genus });
        }
        if self.k != other.k {
            return Err(Error::InvalidDegree(other.k));
        }
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        Ok(TauValue { k: self.k, genus: self.genus, components })
    }
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tau k={} genus={}", self.k, self.genus)?;
        let rank = 2 * self.genus;
        for (i, c) in self.components.iter().enumerate() {
            writeln!(f, "[{}]", generator_name(i as u32 + 1, rank))?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub cutoff: usize,
    pub depth: Depth,
    pub witnesses: Vec<Depth>,
}

impl fmt::Display for DepthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "depth {}", self.depth)?;
        let rank = self.witnesses.len();
        for (i, w) in self.witnesses.iter().enumerate() {
            writeln!(f, "witness {} {w}", generator_name(i as u32 + 1, rank))?;
        }
        Ok(())
    }
}

fn expansions(f: &MappingClass, trunc: usize) -> Vec<MagnusExpansion> {
    f.displacements().iter().map(|w| MagnusExpansion::new(w, trunc)).collect()
}

fn depth_of(exps: &[MagnusExpansion], cutoff: usize) -> DepthReport {
    let witnesses: Vec<Depth> = exps.iter().map(MagnusExpansion::lcs_degree).collect();
    let depth = witnesses.iter().copied().fold(Depth::AtLeast(cutoff + 1), Depth::min);
    DepthReport { cutoff, depth, witnesses }
}

fn tau_from(f: &MappingClass, exps: &[MagnusExpansion], k: usize) -> Result<TauValue> {
    let components = exps
        .iter()
        .map(|e| to_lyndon_coords(&e.homogeneous(k).with_truncation(k), k))
        .collect::<Result<Vec<_>>>()?;
    Ok(TauValue { k, genus: f.genus(), components })
}

/// Largest `k ≤ cutoff` with `f ∈ J(k)`; `AtLeast(cutoff + 1)` past the cutoff.
pub fn filtration_depth(f: &MappingClass, cutoff: usize) -> Result<DepthReport> {
    if cutoff == 0 {
        return Err(Error::InvalidDegree(cutoff));
    }
    f.require_valid()?;
    Ok(depth_of(&expansions(f, cutoff), cutoff))
}

pub fn tau(f: &MappingClass, k: usize) -> Result<TauValue> {
    if k == 0 {
        return Err(Error::InvalidDegree(k));
    }
    f.require_valid()?;
    let exps = expansions(f, k);
    let depth = depth_of(&exps, k).depth;
    if !depth.reaches(k) {
        return Err(Error::NotInJk { k, depth });
    }
    tau_from(f, &exps, k)
}

/// Tensor form of `τ`: the `x_i` slot holds `τ(b_i)`, the `y_i` slot `−τ(a_i)`.
pub fn symplectic_dual(t: &TauValue) -> H1LieTensor {
    let components = t
        .components
        .chunks(2)
        .flat_map(|pair| [pair[1].clone(), pair[0].neg()])
        .collect();
    H1LieTensor::new(t.k, components).expect("components share degree and alphabet")
}

/// Bracket of the tensor form of `τ_k(f)`; `true` when it vanishes.
pub fn morita_check(f: &MappingClass, k: usize) -> Result<(bool, LieElement)> {
    let t = tau(f, k)?;
    let b = bracket_map(&symplectic_dual(&t));
    Ok((b.is_zero(), b))
}

/// `f ∘ h⁻¹ ∈ J(2k−1)` for `f, h ∈ J(k)`.
pub fn bordant(f: &MappingClass, h: &MappingClass, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidDegree(k));
    }
    if f.genus() != h.genus() {
        return Err(Error::GenusMismatch { left: f.genus(), right: h.genus() });
    }
    for m in [f, h] {
        let depth = filtration_depth(m, k)?.depth;
        if !depth.reaches(k) {
            return Err(Error::NotInJk { k, depth });
        }
    }
    let d = f.compose(&h.inverse()?)?;
    let n = 2 * k - 1;
    Ok(filtration_depth(&d, n)?.depth.reaches(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTower {
    pub levels: Vec<TauValue>,
    /// Degree of the first nonzero level, if any.
    pub first_nonzero: Option<usize>,
}

impl fmt::Display for TauTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.levels {
            write!(f, "{t}")?;
        }
        match self.first_nonzero {
            Some(k) => writeln!(f, "first nonzero k={k}"),
            None => writeln!(f, "first nonzero none"),
        }
    }
}

/// `τ_k(f)` for `k = kmin, kmin+1, …`, stopping after the first nonzero level
/// or at `kmax`.
pub fn tau_tower(f: &MappingClass, kmin: usize, kmax: usize) -> Result<TauTower> {
    if kmin == 0 {
        return Err(Error::InvalidDegree(kmin));
    }
    if kmax < kmin {
        return Err(Error::InvalidDegree(kmax));
    }
    f.require_valid()?;
    let exps = expansions(f, kmax);
    let depth = depth_of(&exps, kmax).depth;
    if !depth.reaches(kmin) {
        return Err(Error::NotInJk { k: kmin, depth });
    }
    let mut levels = Vec::new();
    for k in kmin..=kmax {
        let t = tau_from(f, &exps, k)?;
        let nonzero = !t.is_zero();
        levels.push(t);
        if nonzero {
            return Ok(TauTower { levels, first_nonzero: Some(k) });
        }
    }
    Ok(TauTower { levels, first_nonzero: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::{boundary_word, Letter, Word};
    use crate::lie::{bracketing, LyndonWord};
    use crate::magnus::TruncatedSeries;
    use num_bigint::BigInt;

    fn conj_all(genus: usize, c: &Word) -> MappingClass {
        let rank = 2 * genus;
        let img = |c: &Word| {
            (1..=rank as Letter)
                .map(|l| {
                    let g = Word::reduce(rank, [l]).unwrap();
                    c.multiply(&g).unwrap().multiply(&c.inverse()).unwrap()
                })
                .collect::<Vec<_>>()
        };
        MappingClass::with_inverse(genus, img(c), img(&c.inverse())).unwrap()
    }

    fn boundary_twist(genus: usize) -> MappingClass {
        conj_all(genus, &boundary_word(genus).unwrap())
    }

    fn bscc_g2() -> MappingClass {
        let c = Word::reduce(4, [1, 2, -1, -2]).unwrap();
        let ci = c.inverse();
        let conj = |c: &Word, l: Letter| {
            let g = Word::reduce(4, [l]).unwrap();
            c.multiply(&g).unwrap().multiply(&c.inverse()).unwrap()
        };
        let fixed = |l: Letter| Word::reduce(4, [l]).unwrap();
        MappingClass::with_inverse(
            2,
            vec![conj(&c, 1), conj(&c, 2), fixed(3), fixed(4)],
            vec![conj(&ci, 1), conj(&ci, 2), fixed(3), fixed(4)],
        )
        .unwrap()
    }

    #[test]
    fn depth_examples() {
        let id = MappingClass::identity(2);
        let r = filtration_depth(&id, 6).unwrap();
        assert_eq!(r.depth, Depth::AtLeast(7));

        let r = filtration_depth(&boundary_twist(1), 5).unwrap();
        assert_eq!(r.depth, Depth::Exact(3));
        assert!(r.witnesses.iter().all(|w| *w == Depth::Exact(3)));

        assert!(filtration_depth(&bscc_g2(), 4).unwrap().depth.reaches(3));
    }

    #[test]
    fn tau_examples() {
        assert!(tau(&MappingClass::identity(2), 3).unwrap().is_zero());
        assert!(tau(&bscc_g2(), 2).unwrap().is_zero());

        // τ₃(α_i) = [[t1,t2],t_i]
        let t = tau(&boundary_twist(1), 3).unwrap();
        let l = bracketing(&LyndonWord::new(vec![1, 2]).unwrap(), 2).with_truncation(3);
        for i in 0..2u16 {
            let ti = TruncatedSeries::variable(2, 3, i + 1);
            let want = to_lyndon_coords(&l.bracket(&ti), 3).unwrap();
            assert_eq!(t.components()[i as usize], want);
        }
        assert_eq!(t.components()[0].coordinate(&[1, 1, 2]), BigInt::from(-1));

        assert!(matches!(tau(&boundary_twist(1), 4), Err(Error::NotInJk { k: 4, .. })));
    }

    #[test]
    fn morita_examples() {
        let (ok, b) = morita_check(&MappingClass::identity(1), 2).unwrap();
        assert!(ok && b.is_zero());
        assert!(morita_check(&boundary_twist(1), 3).unwrap().0);
        assert!(morita_check(&boundary_twist(2), 3).unwrap().0);
        assert!(morita_check(&bscc_g2(), 3).unwrap().0);
    }

    #[test]
    fn bordant_examples() {
        let t = boundary_twist(1);
        let id = MappingClass::identity(1);
        assert!(bordant(&t, &t, 3).unwrap());
        assert!(bordant(&t, &id, 2).unwrap());
        assert!(!bordant(&t, &id, 3).unwrap());
        let bare = MappingClass::new(1, t.images().to_vec()).unwrap();
        assert_eq!(bordant(&t, &bare, 2), Err(Error::MissingInverse));
    }

    #[test]
    fn tower_examples() {
        let r = tau_tower(&MappingClass::identity(2), 2, 5).unwrap();
        assert_eq!(r.levels.len(), 4);
        assert_eq!(r.first_nonzero, None);

        let r = tau_tower(&boundary_twist(1), 2, 4).unwrap();
        assert_eq!(r.levels.len(), 2);
        assert!(r.levels[0].is_zero());
        assert_eq!(r.first_nonzero, Some(3));

        let r = tau_tower(&bscc_g2(), 2, 3).unwrap();
        assert_eq!(r.first_nonzero, Some(3));
    }

    #[test]
    fn additivity_on_twist_powers() {
        let t = boundary_twist(1);
        let t2 = t.compose(&t).unwrap();
        let a = tau(&t, 3).unwrap();
        assert_eq!(tau(&t2, 3).unwrap(), a.add(&a).unwrap());
    }
}
