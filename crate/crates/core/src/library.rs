//! Built-in surface model and Torelli generators.
//!
//! Separating twists use the conjugation model: the twist about
//! `c = [a_p,b_p]···[a_q,b_q]` conjugates the generators of handles `p..=q`
//! by `c` and fixes the rest. The bounding-pair map ships as a word table on
//! two adjacent handles; it was obtained from the 3-chain relation
//! `(T_{a₁} T_{b₁} T_e)⁴ = T_{d₁} T_{d₂}` and is checked against it in tests.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freegroup::{boundary_word, handle_commutators, Letter, MappingClass, Word};
use crate::johnson::filtration_depth;
use crate::spin::{DescriptorKind, H1Vector};

/// `Σ_{g,1}` with its standard generators and symplectic basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
}

impl SurfaceModel {
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidGenus(genus));
        }
        Ok(SurfaceModel { genus })
    }

    pub fn genus(self) -> usize {
        self.genus
    }

    pub fn generator_names(self) -> Vec<String> {
        (1..=self.genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect()
    }

    pub fn boundary(self) -> Word {
        boundary_word(self.genus).expect("genus >= 1")
    }

    /// Classes `x_i = [a_i]`, `y_i = [b_i]`.
    pub fn h1_basis(self) -> Vec<H1Vector> {
        (1..=self.genus)
            .flat_map(|i| [H1Vector::x(self.genus, i), H1Vector::y(self.genus, i)])
            .collect()
    }

    pub fn standard_pairs(self, first: usize, last: usize) -> Vec<(H1Vector, H1Vector)> {
        (first..=last).map(|i| (H1Vector::x(self.genus, i), H1Vector::y(self.genus, i))).collect()
    }
}

/// A named mapping class with a verified inverse and, for Torelli
/// generators, the data that determines its Birman–Craggs values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorEntry {
    pub name: String,
    pub action: MappingClass,
    pub descriptor: Option<DescriptorKind>,
}

impl GeneratorEntry {
    pub fn new(name: impl Into<String>, action: MappingClass, descriptor: Option<DescriptorKind>) -> Result<Self> {
        let name = name.into();
        action.require_valid()?;
        if let Some(d) = &descriptor {
            d.validate(action.genus())?;
            let depth = filtration_depth(&action, 2)?.depth;
            if !depth.reaches(2) {
                return Err(Error::NotInJk { k: 2, depth });
            }
        }
        let action = action.with_decomposition(vec![(name.clone(), 1)]);
        Ok(GeneratorEntry { name, action, descriptor })
    }

    pub fn genus(&self) -> usize {
        self.action.genus()
    }
}

fn conjugate_handles(genus: usize, c: &Word, first: usize, last: usize) -> Result<Vec<Word>> {
    let rank = 2 * genus;
    (1..=rank as Letter)
        .map(|l| {
            let g = Word::reduce(rank, [l])?;
            let handle = l.unsigned_abs().div_ceil(2) as usize;
            if (first..=last).contains(&handle) {
                c.multiply(&g)?.multiply(&c.inverse())
            } else {
                Ok(g)
            }
        })
        .collect()
}

fn separating_twist(genus: usize, first: usize, last: usize) -> Result<MappingClass> {
    let c = handle_commutators(genus, first, last)?;
    MappingClass::with_inverse(
        genus,
        conjugate_handles(genus, &c, first, last)?,
        conjugate_handles(genus, &c.inverse(), first, last)?,
    )
}

/// Twist about the separating curve `[a₁,b₁]···[a_h,b_h]`.
pub fn bscc_twist(genus: usize, h: usize) -> Result<GeneratorEntry> {
    if h < 1 || h >= genus {
        return Err(Error::InvalidDescriptor(format!("BSCC:{h} needs 1 <= h < genus {genus}")));
    }
    let pairs = SurfaceModel::new(genus)?.standard_pairs(1, h);
    GeneratorEntry::new(format!("BSCC:{h}"), separating_twist(genus, 1, h)?, Some(DescriptorKind::Bscc { pairs }))
}

/// Twist about the boundary-parallel curve: conjugation by `ζ`.
pub fn boundary_twist(genus: usize) -> Result<GeneratorEntry> {
    let pairs = SurfaceModel::new(genus)?.standard_pairs(1, genus);
    GeneratorEntry::new("BDRY", separating_twist(genus, 1, genus)?, Some(DescriptorKind::Bscc { pairs }))
}

/// Twist about `[a_first,b_first]···[a_last,b_last]`, used for inline
/// separating-curve descriptors on a contiguous block of handles.
pub fn handle_block_twist(genus: usize, first: usize, last: usize) -> Result<MappingClass> {
    separating_twist(genus, first, last)
}

// Bounding-pair map on handles 1, 2 of genus 2 (a1=1 b1=2 a2=3 b2=4).
const BP_IMAGES: [&[Letter]; 4] = [
    &[1, 2, -1, -2, 3, 1, -3, 2, 1, -2, -1],
    &[1, 2, -1, -2, 3, 2, -3, 2, 1, -2, -1],
    &[1, 2, -1, -2, 3, 2, 1, -2, -1],
    &[4, 2, 1, -2, -1],
];
const BP_INVERSE: [&[Letter]; 4] = [
    &[-3, 2, 1, -2, 1, 2, -1, -2, 3],
    &[-3, 2, 1, -2, -1, 2, 1, 2, -1, -2, 3],
    &[-3, 2, 1, -2, -1, 3, 1, 2, -1, -2, 3],
    &[4, -3, 1, 2, -1, -2, 3],
];

fn shift_table(genus: usize, h: usize, table: &[&[Letter]; 4]) -> Vec<Vec<Letter>> {
    let offset = 2 * (h as Letter - 1);
    let mut rows: Vec<Vec<Letter>> = (1..=2 * genus as Letter).map(|l| vec![l]).collect();
    for (j, row) in table.iter().enumerate() {
        rows[j + offset as usize] = row.iter().map(|&l| l.signum() * (l.abs() + offset)).collect();
    }
    rows
}

/// Bounding-pair map on handles `h`, `h+1`. The pair has class `x_{h+1}` and
/// cobounds the genus-1 subsurface carrying handle `h`.
pub fn bp_map(genus: usize, which: &str) -> Result<GeneratorEntry> {
    let h = match which {
        "std" => 1,
        s => s
            .parse::<usize>()
            .map_err(|_| Error::InvalidDescriptor(format!("unknown bounding-pair handle `{s}`")))?,
    };
    if genus < 2 || h < 1 || h + 1 > genus {
        return Err(Error::InvalidDescriptor(format!("BP:{which} needs handles {h}, {} in genus {genus}", h + 1)));
    }
    let images = shift_table(genus, h, &BP_IMAGES);
    let inverse = shift_table(genus, h, &BP_INVERSE);
    let image_rows: Vec<&[Letter]> = images.iter().map(Vec::as_slice).collect();
    let inverse_rows: Vec<&[Letter]> = inverse.iter().map(Vec::as_slice).collect();
    let action = MappingClass::from_tables(genus, &image_rows, Some(&inverse_rows))?;
    let descriptor = DescriptorKind::Bp {
        curve_class: H1Vector::x(genus, h + 1),
        pair: (H1Vector::x(genus, h), H1Vector::y(genus, h)),
    };
    GeneratorEntry::new(format!("BP:{which}"), action, Some(descriptor))
}

/// Resolves `BSCC:h`, `BP:std`, `BP:h` and `BDRY`.
pub fn builtin(name: &str, genus: usize) -> Result<GeneratorEntry> {
    if name == "BDRY" {
        return boundary_twist(genus);
    }
    if let Some(h) = name.strip_prefix("BSCC:") {
        let h = h.parse().map_err(|_| Error::UnknownGenerator(name.to_string()))?;
        return bscc_twist(genus, h);
    }
    if let Some(which) = name.strip_prefix("BP:") {
        return bp_map(genus, which);
    }
    Err(Error::UnknownGenerator(name.to_string()))
}

/// The built-in generators available in genus `g`.
pub fn library(genus: usize) -> Result<Vec<GeneratorEntry>> {
    let mut out = Vec::new();
    for h in 1..genus {
        out.push(bscc_twist(genus, h)?);
    }
    if genus >= 2 {
        out.push(bp_map(genus, "std")?);
        for h in 2..genus {
            out.push(bp_map(genus, &h.to_string())?);
        }
    }
    out.push(boundary_twist(genus)?);
    Ok(out)
}

/// A word in named generators, read as a composition of mapping classes:
/// `T₁ T₂` acts as `T₁ ∘ T₂`.
#[derive(Clone, Debug)]
pub struct TorelliWord {
    genus: usize,
    letters: Vec<(Arc<GeneratorEntry>, i8)>,
}

impl PartialEq for TorelliWord {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus
            && self.letters.len() == other.letters.len()
            && self
                .letters
                .iter()
                .zip(&other.letters)
                .all(|((a, e), (b, f))| e == f && (Arc::ptr_eq(a, b) || a == b))
    }
}

impl Eq for TorelliWord {}

impl TorelliWord {
    pub fn new(genus: usize, letters: Vec<(Arc<GeneratorEntry>, i8)>) -> Result<Self> {
        for (e, x) in &letters {
            if e.genus() != genus {
                return Err(Error::GenusMismatch { left: genus, right: e.genus() });
            }
            if x.abs() != 1 {
                return Err(Error::InvalidDescriptor(format!("exponent {x}")));
            }
        }
        Ok(TorelliWord { genus, letters })
    }

    pub fn empty(genus: usize) -> Self {
        TorelliWord { genus, letters: Vec::new() }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[(Arc<GeneratorEntry>, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &TorelliWord) -> Result<TorelliWord> {
        let letters = self.letters.iter().chain(&other.letters).cloned().collect();
        TorelliWord::new(self.genus, letters)
    }

    pub fn inverse(&self) -> TorelliWord {
        let letters = self.letters.iter().rev().map(|(e, x)| (e.clone(), -x)).collect();
        TorelliWord { genus: self.genus, letters }
    }

    /// Left fold of `compose` over the letters.
    pub fn composed_action(&self) -> Result<MappingClass> {
        self.letters.iter().try_fold(MappingClass::identity(self.genus), |acc, (e, x)| {
            let f = if *x > 0 { e.action.clone() } else { e.action.inverse()? };
            acc.compose(&f)
        })
    }

    /// Descriptors of every letter; fails if a letter has none.
    pub fn descriptors(&self) -> Result<Vec<&DescriptorKind>> {
        self.letters
            .iter()
            .map(|(e, _)| {
                e.descriptor
                    .as_ref()
                    .ok_or_else(|| Error::InvalidDescriptor(format!("`{}` has no Torelli descriptor", e.name)))
            })
            .collect()
    }
}

impl fmt::Display for TorelliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (e, x)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&e.name)?;
            if *x < 0 {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::johnson::tau;
    use crate::Depth;

    fn twist(images: [&[Letter]; 4]) -> MappingClass {
        MappingClass::from_tables(2, &images, None).unwrap()
    }

    #[test]
    fn bscc_examples() {
        let e = bscc_twist(2, 1).unwrap();
        let c = Word::reduce(4, [1, 2, -1, -2]).unwrap();
        let a1 = Word::reduce(4, [1]).unwrap();
        assert_eq!(e.action.images()[0], c.multiply(&a1).unwrap().multiply(&c.inverse()).unwrap());
        assert_eq!(e.action.images()[2].letters(), &[3]);
        let m = e.action.abelianization();
        assert!((0..4).all(|i| (0..4).all(|j| m[i][j] == (i == j) as i64)));
        assert!(tau(&e.action, 2).unwrap().is_zero());
        assert!(bscc_twist(2, 2).is_err());
        assert!(bscc_twist(3, 0).is_err());
    }

    #[test]
    fn boundary_examples() {
        let e = boundary_twist(1).unwrap();
        assert_eq!(filtration_depth(&e.action, 5).unwrap().depth, Depth::Exact(3));
        assert_eq!(e.action.apply(&boundary_word(1).unwrap()).unwrap(), boundary_word(1).unwrap());
    }

    #[test]
    fn bp_gates() {
        for g in 2..=4 {
            for h in 1..g {
                let e = bp_map(g, &h.to_string()).unwrap();
                assert!(e.action.validate().passed(), "g={g} h={h}");
                assert_eq!(filtration_depth(&e.action, 4).unwrap().depth, Depth::Exact(2));
                assert!(!tau(&e.action, 2).unwrap().is_zero());
            }
        }
        assert_eq!(bp_map(2, "std").unwrap().action.images(), bp_map(2, "1").unwrap().action.images());
        assert!(bp_map(2, "2").is_err());
        assert!(bp_map(2, "left").is_err());
    }

    // T_{a2}² ∘ (T_{a1} T_{b1} T_e)^{-4} from the 3-chain relation.
    #[test]
    fn bp_table_from_chain_relation() {
        let ta1 = twist([&[1], &[2, 1], &[3], &[4]]);
        let tb1 = twist([&[1, -2], &[2], &[3], &[4]]);
        let ta2 = twist([&[1], &[2], &[3], &[4, 3]]);
        let te = twist([&[-3, 1, 3], &[-3, -1, 3, 1, 2, 1, 3], &[-3, -1, 3, 1, 3], &[4, 1, 3]]);
        for t in [&ta1, &tb1, &ta2, &te] {
            assert_eq!(t.apply(&boundary_word(2).unwrap()).unwrap(), boundary_word(2).unwrap());
        }
        // braid relation between intersecting twists
        let braid = |s: &MappingClass, t: &MappingClass| {
            s.compose(t).unwrap().compose(s).unwrap().images() == t.compose(s).unwrap().compose(t).unwrap().images()
        };
        assert!(braid(&ta1, &tb1));
        assert!(braid(&tb1, &te));

        let x = ta1.compose(&tb1).unwrap().compose(&te).unwrap();
        let x4 = x.compose(&x).unwrap().compose(&x).unwrap().compose(&x).unwrap();
        let bp = bp_map(2, "std").unwrap().action;
        let lhs = bp.compose(&x4).unwrap();
        let rhs = ta2.compose(&ta2).unwrap();
        assert_eq!(lhs.images(), rhs.images());
    }

    #[test]
    fn bp_moves_a2_by_conjugation() {
        let bp = bp_map(2, "std").unwrap().action;
        let c = Word::reduce(4, [1, 2, -1, -2]).unwrap();
        let a2 = Word::reduce(4, [3]).unwrap();
        assert_eq!(bp.images()[2], c.multiply(&a2).unwrap().multiply(&c.inverse()).unwrap());
    }

    #[test]
    fn library_validates() {
        for g in 1..=3 {
            for e in library(g).unwrap() {
                assert!(e.action.validate().passed(), "{}", e.name);
                assert!(filtration_depth(&e.action, 2).unwrap().depth.reaches(2));
            }
        }
        assert!(matches!(builtin("T9", 2), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn word_composition() {
        let t = Arc::new(bscc_twist(2, 1).unwrap());
        let w = TorelliWord::new(2, vec![(t.clone(), 1), (t.clone(), -1)]).unwrap();
        assert!(w.composed_action().unwrap().is_identity());
        assert_eq!(w.to_string(), "BSCC:1 BSCC:1'");
        assert!(TorelliWord::empty(2).composed_action().unwrap().is_identity());
    }
}
