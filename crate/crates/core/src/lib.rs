//! Exact arithmetic of similar triangles with parallel sides.
//!
//! A triangle label `⟨n⟩` (side `n` times the unit, mirrored when `n < 0`,
//! a point when `n = 0`) embeds into exact integer rings as `±(n², n)` or
//! `±(n², n, 1)`. This crate provides:
//!
//! - [`ring`]: the two-coefficient label ring, its orthogonal form, the
//!   componentwise triple ring, and the label embeddings;
//! - [`identity`]: symbolic identities over labels and the componentwise
//!   ("arithmetic sense") checker, with generators for the catalogued
//!   families `eq3`, `eq8`, `eq26`–`eq32`;
//! - [`lattice`]: oblique triangular-lattice placements and the
//!   three-direction construction realizing `⟨n+k+l+t⟩` from `⟨t⟩`;
//! - [`chain`]: signed multiplicity chains over lattice simplices — the
//!   "geometric sense" oracle deciding whether placed triangles cancel
//!   exactly to a target;
//! - [`dissection`]: a small script language whose interpreter replays
//!   nested sum-label expansions into verified perfect dissections,
//!   including the two built-in 15-piece dissections of `⟨39⟩`;
//! - [`render`]: deterministic SVG emission of placements and chains.
//!
//! Core geometry and ring types are generic over the [`Scalar`] type; the
//! crate-root aliases fix the defaults (`i64`, with [`Rational`] for the
//! formal real-parameter layer used by [`lattice::solve_params`]).

pub mod chain;
pub mod dissection;
pub mod identity;
pub mod lattice;
pub mod render;
pub mod ring;
mod scalar;

pub use scalar::Scalar;

/// Default exact integer scalar.
pub type Int = i64;

/// Exact rational scalar for formal placements (`solve_params` accepts
/// rational anchors and sizes; chains do not).
pub type Rational = num_rational::Ratio<Int>;

/// Lattice coordinate over the default integer scalar.
pub type Coord = lattice::LatticeCoord<Int>;
/// Placed triangle over the default integer scalar.
pub type Triangle = lattice::PlacedTriangle<Int>;
/// Lattice coordinate with rational components.
pub type RationalCoord = lattice::LatticeCoord<Rational>;
/// Placed triangle with rational anchor and size.
pub type RationalTriangle = lattice::PlacedTriangle<Rational>;

/// Which embedding a check runs in.
///
/// `N2` sees areas only (labels as `±(n², n)`); `N20` also counts points
/// (labels as `±(n², n, 1)`), distinguishing closed, open and degenerate
/// triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    N2,
    N20,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::N2 => write!(f, "n2"),
            Mode::N20 => write!(f, "n20"),
        }
    }
}
