//! Presentations of the mapping torus `T_{f,1}` and of its filling `T_f^γ`,
//! and the rank table of the spin-bordism blocks.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{generator_name, Letter, MappingClass, Word};
use crate::lie::witt_dim;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}

/// `⟨α₁,…,α_{2g},γ | [α_i,γ]·f(α_i)·α_i⁻¹⟩`.
pub fn present_mapping_torus(f: &MappingClass) -> Result<Presentation> {
    f.require_valid()?;
    let rank = f.rank() + 1;
    let gamma = Word::reduce(rank, [rank as Letter])?;
    let relators = f
        .displacements()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let a = Word::reduce(rank, [i as Letter + 1])?;
            a.commutator(&gamma)?.multiply(&d.widen(rank)?)
        })
        .collect::<Result<_>>()?;
    let generators = (1..=rank as u32).map(|i| generator_name(i, rank)).collect();
    Ok(Presentation { generators, relators })
}

/// `⟨α₁,…,α_{2g} | f(α_i)·α_i⁻¹⟩`. Trivial relators are kept (printed `1`)
/// so relator `i` always belongs to generator `i`.
pub fn present_filled(f: &MappingClass) -> Result<Presentation> {
    f.require_valid()?;
    let rank = f.rank();
    let generators = (1..=rank as u32).map(|i| generator_name(i, rank)).collect();
    Ok(Presentation { generators, relators: f.displacements() })
}

/// Ranks of the blocks `H_p(F/F_k; Ω_q^spin)` with `p + q = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockRanks {
    pub genus: usize,
    pub k: usize,
    /// `F_k/F_{k+1} ⊗ Z₂`.
    pub h2: u128,
    /// `Z₂^{2g}`.
    pub h1: usize,
    pub h0: usize,
}

impl fmt::Display for BlockRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "blocks genus={} k={}", self.genus, self.k)?;
        writeln!(f, "H3: NOT COMPUTED")?;
        writeln!(f, "H2: {}", self.h2)?;
        writeln!(f, "H1: {}", self.h1)?;
        writeln!(f, "H0: {}", self.h0)
    }
}

pub fn eta_block_ranks(genus: usize, k: usize) -> Result<BlockRanks> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    if k < 2 {
        return Err(Error::InvalidDegree(k));
    }
    Ok(BlockRanks { genus, k, h2: witt_dim(2 * genus, k), h1: 2 * genus, h0: 0 })
}
