//! `Z₂`-quadratic forms on `H₁(Σ_g; Z₂)`, Arf invariants and the
//! Birman–Craggs homomorphisms `ρ_q`.
//!
//! Vectors are bitmasks over the basis `x₁, y₁, …, x_g, y_g`: bit `2(i−1)` is
//! `x_i` and bit `2(i−1)+1` is `y_i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::johnson::{tau, TauValue};
use crate::library::TorelliWord;

/// Largest genus accepted by form enumeration (`2^{2g}` forms).
pub const MAX_ENUM_GENUS: usize = 10;
/// Largest genus representable by the bitmask encoding.
pub const MAX_GENUS: usize = 32;

const EVEN: u64 = 0x5555_5555_5555_5555;

fn check_genus(genus: usize) -> Result<()> {
    if genus == 0 || genus > MAX_GENUS {
        return Err(Error::GenusOutOfBounds { genus, max: MAX_GENUS });
    }
    Ok(())
}

fn mask(genus: usize) -> u64 {
    if genus >= 32 {
        u64::MAX
    } else {
        (1u64 << (2 * genus)) - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H1Vector {
    genus: usize,
    bits: u64,
}

impl H1Vector {
    pub fn new(genus: usize, bits: u64) -> Result<Self> {
        check_genus(genus)?;
        if bits & !mask(genus) != 0 {
            return Err(Error::LengthMismatch { left: 2 * genus, right: 64 - bits.leading_zeros() as usize });
        }
        Ok(H1Vector { genus, bits })
    }

    pub fn zero(genus: usize) -> Self {
        H1Vector { genus, bits: 0 }
    }

    pub fn x(genus: usize, i: usize) -> Self {
        H1Vector { genus, bits: 1 << (2 * (i - 1)) }
    }

    pub fn y(genus: usize, i: usize) -> Self {
        H1Vector { genus, bits: 1 << (2 * (i - 1) + 1) }
    }

    pub fn genus(self) -> usize {
        self.genus
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Coordinate `j` (0-based) in the basis `x₁, y₁, x₂, …`.
    pub fn get(self, j: usize) -> bool {
        self.bits >> j & 1 == 1
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: H1Vector) -> Result<H1Vector> {
        same_genus(self.genus, other.genus)?;
        Ok(H1Vector { genus: self.genus, bits: self.bits ^ other.bits })
    }

    /// Algebraic intersection number mod 2.
    pub fn dot(self, other: H1Vector) -> Result<bool> {
        same_genus(self.genus, other.genus)?;
        Ok(dot_bits(self.bits, other.bits))
    }
}

fn same_genus(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { left: 2 * a, right: 2 * b });
    }
    Ok(())
}

fn swap_pairs(v: u64) -> u64 {
    ((v & EVEN) << 1) | ((v >> 1) & EVEN)
}

fn dot_bits(u: u64, v: u64) -> bool {
    (u & swap_pairs(v)).count_ones() % 2 == 1
}

impl fmt::Display for H1Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for j in 0..2 * self.genus {
            if self.get(j) {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                write!(f, "{}{}", if j % 2 == 0 { 'x' } else { 'y' }, j / 2 + 1)?;
            }
        }
        Ok(())
    }
}

/// A quadratic refinement of the intersection form, stored by its values on
/// the basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    genus: usize,
    bits: u64,
}

impl QuadForm {
    pub fn new(genus: usize, basis_values: &[bool]) -> Result<Self> {
        check_genus(genus)?;
        if basis_values.len() != 2 * genus {
            return Err(Error::LengthMismatch { left: 2 * genus, right: basis_values.len() });
        }
        let bits = basis_values.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | (b as u64) << j);
        Ok(QuadForm { genus, bits })
    }

    pub fn from_bits(genus: usize, bits: u64) -> Result<Self> {
        let v = H1Vector::new(genus, bits)?;
        Ok(QuadForm { genus, bits: v.bits })
    }

    pub fn genus(self) -> usize {
        self.genus
    }

    pub fn basis_values(self) -> Vec<bool> {
        (0..2 * self.genus).map(|j| self.bits >> j & 1 == 1).collect()
    }

    /// `q(v)` extended from the basis by `q(u+v) = q(u) + q(v) + u·v`.
    pub fn eval(self, v: H1Vector) -> Result<bool> {
        same_genus(self.genus, v.genus)?;
        Ok(self.eval_bits(v.bits))
    }

    fn eval_bits(self, v: u64) -> bool {
        let linear = (self.bits & v).count_ones();
        let cross = (v & (v >> 1) & EVEN).count_ones();
        (linear + cross) % 2 == 1
    }

    /// `Σ q(x_i)q(y_i) mod 2`.
    pub fn arf(self) -> bool {
        (self.bits & (self.bits >> 1) & EVEN).count_ones() % 2 == 1
    }

    /// Relative Arf invariant over a symplectic basis of a subsurface.
    pub fn arf_on_pairs(self, pairs: &[(H1Vector, H1Vector)]) -> Result<bool> {
        check_symplectic(self.genus, pairs)?;
        Ok(pairs
            .iter()
            .fold(false, |acc, (x, y)| acc ^ (self.eval_bits(x.bits) & self.eval_bits(y.bits))))
    }

    /// The form `v ↦ q(S v)` for a linear map given by the images of the basis.
    pub fn transport(self, images: &[H1Vector]) -> Result<QuadForm> {
        if images.len() != 2 * self.genus {
            return Err(Error::LengthMismatch { left: 2 * self.genus, right: images.len() });
        }
        let values: Vec<bool> = images.iter().map(|v| self.eval(*v)).collect::<Result<_>>()?;
        QuadForm::new(self.genus, &values)
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("q:")?;
        for j in 0..2 * self.genus {
            let name = if j % 2 == 0 { 'x' } else { 'y' };
            write!(f, " {}{}={}", name, j / 2 + 1, self.bits >> j & 1)?;
        }
        Ok(())
    }
}

/// `x_i·y_j = δ_ij`, `x_i·x_j = y_i·y_j = 0`.
pub fn check_symplectic(genus: usize, pairs: &[(H1Vector, H1Vector)]) -> Result<()> {
    for (i, (x, y)) in pairs.iter().enumerate() {
        same_genus(genus, x.genus)?;
        same_genus(genus, y.genus)?;
        if !dot_bits(x.bits, y.bits) {
            return Err(Error::InvalidDescriptor(format!("{x}·{y} = 0")));
        }
        for (x2, y2) in &pairs[i + 1..] {
            for (u, v) in [(x, x2), (x, y2), (y, x2), (y, y2)] {
                if dot_bits(u.bits, v.bits) {
                    return Err(Error::InvalidDescriptor(format!("{u}·{v} = 1")));
                }
            }
        }
    }
    Ok(())
}

/// Every quadratic form of genus `g`, optionally filtered by Arf invariant,
/// in lexicographic order of `(q(x₁), q(y₁), …, q(y_g))`.
pub fn enumerate_forms(genus: usize, arf: Option<bool>) -> Result<Vec<QuadForm>> {
    if genus == 0 || genus > MAX_ENUM_GENUS {
        return Err(Error::GenusOutOfBounds { genus, max: MAX_ENUM_GENUS });
    }
    let n = 2 * genus;
    Ok((0u64..1 << n)
        .map(|idx| {
            // basis coordinate j is bit n-1-j of the lexicographic index
            let bits = (0..n).fold(0u64, |acc, j| acc | ((idx >> (n - 1 - j)) & 1) << j);
            QuadForm { genus, bits }
        })
        .filter(|q| arf.is_none_or(|a| q.arf() == a))
        .collect())
}

/// Homological data of a Torelli generator that determines its `ρ_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescriptorKind {
    /// Twist about a separating curve cutting off a subsurface with the given
    /// symplectic basis.
    Bscc { pairs: Vec<(H1Vector, H1Vector)> },
    /// Bounding pair of class `curve_class` cobounding a genus-1 subsurface.
    Bp { curve_class: H1Vector, pair: (H1Vector, H1Vector) },
}

impl DescriptorKind {
    pub fn validate(&self, genus: usize) -> Result<()> {
        match self {
            DescriptorKind::Bscc { pairs } => check_symplectic(genus, pairs),
            DescriptorKind::Bp { curve_class, pair } => {
                same_genus(genus, curve_class.genus)?;
                if curve_class.is_zero() {
                    return Err(Error::InvalidDescriptor("bounding pair class is zero".into()));
                }
                check_symplectic(genus, std::slice::from_ref(pair))
            }
        }
    }

    /// `ρ_q` of a single generator.
    pub fn rho(&self, q: QuadForm) -> Result<bool> {
        match self {
            DescriptorKind::Bscc { pairs } => q.arf_on_pairs(pairs),
            DescriptorKind::Bp { curve_class, pair } => {
                if q.eval(*curve_class)? {
                    Ok(false)
                } else {
                    q.arf_on_pairs(std::slice::from_ref(pair))
                }
            }
        }
    }
}

/// `ρ_q` of a product of generators; exponents do not matter mod 2.
pub fn rho<'a, I>(q: QuadForm, letters: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a DescriptorKind>,
{
    if q.arf() {
        return Err(Error::ArfNonZero);
    }
    letters.into_iter().try_fold(false, |acc, d| Ok(acc ^ d.rho(q)?))
}

/// `(τ₂, ρ)` with `ρ` indexed by the Arf-0 forms in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eta2Value {
    pub tau: TauValue,
    pub rho: Vec<bool>,
}

impl Eta2Value {
    pub fn is_trivial(&self) -> bool {
        self.tau.is_zero() && self.rho.iter().all(|b| !b)
    }

    pub fn rho_string(&self) -> String {
        self.rho.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Eta2Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tau)?;
        writeln!(f, "rho: {}", self.rho_string())
    }
}

pub fn eta2(word: &TorelliWord) -> Result<Eta2Value> {
    let kinds = word.descriptors()?;
    let t = tau(&word.composed_action()?, 2)?;
    let rho = enumerate_forms(word.genus(), Some(false))?
        .into_iter()
        .map(|q| rho(q, kinds.iter().copied()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Eta2Value { tau: t, rho })
}

pub fn eta2_trivial(word: &TorelliWord) -> Result<bool> {
    Ok(eta2(word)?.is_trivial())
}
