//! Invariants of the Johnson filtration `J(k)` of the mapping class group of
//! a genus-`g` surface with one boundary component.
//!
//! Mapping classes are handled through their action on the free group
//! `F = π₁(Σ_{g,1})`. Lower-central-series questions are answered exactly with
//! truncated Magnus expansions; Johnson homomorphisms land in the free Lie
//! ring with Lyndon-basis coordinates; Birman–Craggs homomorphisms are
//! evaluated from Arf invariants of `Z₂`-quadratic forms.

use std::fmt;

pub mod error;
pub mod freegroup;
pub mod johnson;
pub mod library;
pub mod lie;
pub mod magnus;
pub mod present;
pub mod spin;
pub mod syntax;

pub use error::{Error, ParseError, Result};
pub use freegroup::{boundary_word, Generator, Letter, MappingClass, ValidationReport, Word};
pub use johnson::{bordant, filtration_depth, morita_check, tau, tau_tower, DepthReport, TauValue};
pub use library::{GeneratorEntry, TorelliWord};
pub use lie::{LieElement, LyndonWord};
pub use magnus::{magnus_expand, Monomial, TruncatedSeries};
pub use spin::{H1Vector, QuadForm};

/// A lower-central-series degree certified up to a truncation cutoff.
///
/// `Exact(d)` means the element lies in `F_d` but not `F_{d+1}`; `AtLeast(m)`
/// means it lies in `F_m` and the cutoff cannot see further.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Depth {
    Exact(usize),
    AtLeast(usize),
}

impl Depth {
    /// Certified membership in the `k`-th term.
    pub fn reaches(self, k: usize) -> bool {
        match self {
            Depth::Exact(d) => d >= k,
            Depth::AtLeast(m) => m >= k,
        }
    }

    pub fn lower_bound(self) -> usize {
        match self {
            Depth::Exact(d) | Depth::AtLeast(d) => d,
        }
    }

    pub fn min(self, other: Depth) -> Depth {
        match (self, other) {
            (Depth::AtLeast(a), Depth::AtLeast(b)) => Depth::AtLeast(a.min(b)),
            (Depth::Exact(a), Depth::Exact(b)) => Depth::Exact(a.min(b)),
            (Depth::Exact(a), Depth::AtLeast(b)) | (Depth::AtLeast(b), Depth::Exact(a)) => {
                if a <= b {
                    Depth::Exact(a)
                } else {
                    Depth::AtLeast(b)
                }
            }
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Exact(d) => write!(f, "= {d}"),
            Depth::AtLeast(m) => write!(f, ">= {m}"),
        }
    }
}
