//! Oblique triangular-lattice coordinates and placed triangles.
//!
//! A coordinate `(i, j)` names a lattice corner; rendering maps it to the
//! Cartesian point `(i + j/2, j·√3/2)` so all cells come out equilateral.
//! The unit up-cell `U(i,j)` has corners `(i,j), (i+1,j), (i,j+1)`; the
//! unit down-cell `D(i,j)` has corners `(i+1,j), (i,j+1), (i+1,j+1)`.
//!
//! A placed triangle is an anchor corner plus a signed size: the vertices
//! are `anchor`, `anchor + (size, 0)`, `anchor + (0, size)`, which for
//! negative sizes is the point-reflected (downward) triangle, and for size
//! zero a single point.

use thiserror::Error;

use crate::{Int, Scalar};

/// Corner of the oblique triangular lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeCoord<T: Scalar = Int> {
    pub i: T,
    pub j: T,
}

impl<T: Scalar> LatticeCoord<T> {
    pub fn new(i: T, j: T) -> Self {
        LatticeCoord { i, j }
    }

    pub fn origin() -> Self {
        LatticeCoord::new(T::zero(), T::zero())
    }

    pub fn shifted(&self, di: T, dj: T) -> Self {
        LatticeCoord::new(self.i.clone() + di, self.j.clone() + dj)
    }

    /// Componentwise difference `self − other`.
    pub fn delta(&self, other: &Self) -> (T, T) {
        (
            self.i.clone() - other.i.clone(),
            self.j.clone() - other.j.clone(),
        )
    }
}

impl<T: Scalar> std::fmt::Display for LatticeCoord<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A triangle placed on the lattice: anchor corner plus signed size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlacedTriangle<T: Scalar = Int> {
    pub anchor: LatticeCoord<T>,
    pub size: T,
}

/// Vertex set of a placed triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vertices<T: Scalar = Int> {
    Point(LatticeCoord<T>),
    Corners([LatticeCoord<T>; 3]),
}

impl<T: Scalar> PlacedTriangle<T> {
    pub fn new(anchor: LatticeCoord<T>, size: T) -> Self {
        PlacedTriangle { anchor, size }
    }

    pub fn at(i: T, j: T, size: T) -> Self {
        PlacedTriangle::new(LatticeCoord::new(i, j), size)
    }

    pub fn is_point(&self) -> bool {
        self.size.is_zero()
    }

    /// `anchor`, `anchor + (size, 0)`, `anchor + (0, size)`; a single point
    /// for size zero. One formula covers both orientations.
    pub fn vertices(&self) -> Vertices<T> {
        if self.is_point() {
            return Vertices::Point(self.anchor.clone());
        }
        Vertices::Corners([
            self.anchor.clone(),
            self.anchor.shifted(self.size.clone(), T::zero()),
            self.anchor.shifted(T::zero(), self.size.clone()),
        ])
    }

    pub fn translated(&self, di: T, dj: T) -> Self {
        PlacedTriangle::new(self.anchor.shifted(di, dj), self.size.clone())
    }
}

impl<T: Scalar> std::fmt::Display for PlacedTriangle<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨{}⟩@{}", self.size, self.anchor)
    }
}

/// The seven pieces of a based sum-label construction, named after the
/// increment slots each one uses (`T` is the bare base piece).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Nk,
    Nl,
    Kl,
    N,
    K,
    L,
    T,
}

impl Slot {
    /// All pieces in term order: the three double-increment pieces, the
    /// three single-increment pieces, the base.
    pub const ALL: [Slot; 7] = [
        Slot::Nk,
        Slot::Nl,
        Slot::Kl,
        Slot::N,
        Slot::K,
        Slot::L,
        Slot::T,
    ];

    /// Sign the piece carries on the right-hand side of the construction.
    pub fn coefficient(self) -> Int {
        match self {
            Slot::Nk | Slot::Nl | Slot::Kl | Slot::T => 1,
            Slot::N | Slot::K | Slot::L => -1,
        }
    }

    pub fn has_n(self) -> bool {
        matches!(self, Slot::Nk | Slot::Nl | Slot::N)
    }

    pub fn has_k(self) -> bool {
        matches!(self, Slot::Nk | Slot::Kl | Slot::K)
    }

    pub fn has_l(self) -> bool {
        matches!(self, Slot::Nl | Slot::Kl | Slot::L)
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Nk => "nk",
            Slot::Nl => "nl",
            Slot::Kl => "kl",
            Slot::N => "n",
            Slot::K => "k",
            Slot::L => "l",
            Slot::T => "t",
        }
    }
}

impl std::str::FromStr for Slot {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "nk" => Slot::Nk,
            "nl" => Slot::Nl,
            "kl" => Slot::Kl,
            "n" => Slot::N,
            "k" => Slot::K,
            "l" => Slot::L,
            "t" => Slot::T,
            _ => return Err(()),
        })
    }
}

impl std::fmt::Display for Slot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayoutError {
    #[error("increments {0} + base {1} do not sum to the target size {2}")]
    SizeMismatch(String, String, String),
}

/// Concrete placement of the seven-piece construction of `⟨n+k+l+t⟩` from
/// a base triangle `⟨t⟩`.
///
/// The `n` increment grows a piece away from its anchor; the `k` and `l`
/// increments shift the anchor by `(−k, 0)` and `(0, −l)` while growing,
/// realizing the three construction directions. For the piece using slots
/// `S ⊆ {n,k,l}`:
///
/// - size: `t + Σ_{s ∈ S} s`
/// - anchor: `base.anchor + (−k·[k ∈ S], −l·[l ∈ S])`
///
/// The assembled (big) triangle uses all three slots. The formulas are
/// uniform in the signs of all four parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eq8Layout<T: Scalar = Int> {
    base: PlacedTriangle<T>,
    n: T,
    k: T,
    l: T,
}

impl<T: Scalar> Eq8Layout<T> {
    pub fn new(base: PlacedTriangle<T>, n: T, k: T, l: T) -> Self {
        Eq8Layout { base, n, k, l }
    }

    /// Layout whose assembled triangle is exactly `target`; the base is
    /// placed at `target.anchor + (k, l)` with size `t`.
    pub fn for_target(
        target: &PlacedTriangle<T>,
        n: T,
        k: T,
        l: T,
        t: T,
    ) -> Result<Self, LayoutError> {
        let sum = n.clone() + k.clone() + l.clone() + t.clone();
        if sum != target.size {
            return Err(LayoutError::SizeMismatch(
                format!("({n}, {k}, {l})"),
                t.to_string(),
                target.size.to_string(),
            ));
        }
        let base = PlacedTriangle::new(target.anchor.shifted(k.clone(), l.clone()), t);
        Ok(Eq8Layout::new(base, n, k, l))
    }

    pub fn base(&self) -> &PlacedTriangle<T> {
        &self.base
    }

    /// `(n, k, l)`; the base size is the fourth parameter.
    pub fn increments(&self) -> (T, T, T) {
        (self.n.clone(), self.k.clone(), self.l.clone())
    }

    pub fn piece(&self, slot: Slot) -> PlacedTriangle<T> {
        let mut size = self.base.size.clone();
        if slot.has_n() {
            size = size + self.n.clone();
        }
        if slot.has_k() {
            size = size + self.k.clone();
        }
        if slot.has_l() {
            size = size + self.l.clone();
        }
        let di = if slot.has_k() {
            -self.k.clone()
        } else {
            T::zero()
        };
        let dj = if slot.has_l() {
            -self.l.clone()
        } else {
            T::zero()
        };
        PlacedTriangle::new(self.base.anchor.shifted(di, dj), size)
    }

    /// The assembled triangle `⟨n+k+l+t⟩` at `base.anchor + (−k, −l)`.
    pub fn big(&self) -> PlacedTriangle<T> {
        let size =
            self.base.size.clone() + self.n.clone() + self.k.clone() + self.l.clone();
        PlacedTriangle::new(
            self.base
                .anchor
                .shifted(-self.k.clone(), -self.l.clone()),
            size,
        )
    }

    /// The seven right-hand-side pieces with their signs.
    pub fn terms(&self) -> Vec<(Int, PlacedTriangle<T>)> {
        Slot::ALL
            .iter()
            .map(|s| (s.coefficient(), self.piece(*s)))
            .collect()
    }
}

/// Inverts the construction: increments `(n, k, l)` turning `base` into
/// `target` as the assembled triangle.
///
/// `k` and `l` recover from the anchor offset, `n` from the size budget;
/// rational inputs are accepted, every pair of triangles being reachable
/// formally.
pub fn solve_params<T: Scalar>(
    base: &PlacedTriangle<T>,
    target: &PlacedTriangle<T>,
) -> (T, T, T) {
    let (k, l) = base.anchor.delta(&target.anchor);
    let n = target.size.clone() - base.size.clone() - k.clone() - l.clone();
    (n, k, l)
}

/// Translation taking `a` to `b` when they are congruent (equal signed
/// size), `None` otherwise.
pub fn congruent_translate<T: Scalar>(
    a: &PlacedTriangle<T>,
    b: &PlacedTriangle<T>,
) -> Option<(T, T)> {
    if a.size == b.size {
        Some(b.anchor.delta(&a.anchor))
    } else {
        None
    }
}
