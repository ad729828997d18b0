//! Signed multiplicity chains over lattice simplices.
//!
//! A chain assigns an integer multiplicity to finitely many cells of the
//! infinite triangular lattice: faces only in [`Mode::N2`], faces, edges
//! and vertices in [`Mode::N20`]. A placed equation is *true in the
//! geometric sense* exactly when the signed sum of its term chains cancels
//! to the target's chain — [`geom_check`] returns the residual, and an
//! empty residual is the certificate.
//!
//! Chains project onto the label embeddings (total area, up-minus-down
//! count, and in `N20` the combinatorial Euler count `V − E + F`), which
//! is why geometric truth forces arithmetic truth.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lattice::{Eq8Layout, LatticeCoord, PlacedTriangle};
use crate::ring::{OrthoPair, Sign, TriVec3};
use crate::{Int, Mode};

/// The six simplex species of the lattice.
///
/// `EdgeH` spans `(i,j)–(i+1,j)`, `EdgeV` spans `(i,j)–(i,j+1)`, `EdgeD`
/// spans `(i+1,j)–(i,j+1)`; `FaceUp`/`FaceDown` are the two cell
/// orientations, `Vertex` a lattice corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimplexKind {
    FaceUp,
    FaceDown,
    EdgeH,
    EdgeV,
    EdgeD,
    Vertex,
}

/// One simplex of the infinite lattice; every simplex has exactly one id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub kind: SimplexKind,
    pub at: LatticeCoord<Int>,
}

impl SimplexId {
    pub fn new(kind: SimplexKind, i: Int, j: Int) -> Self {
        SimplexId {
            kind,
            at: LatticeCoord::new(i, j),
        }
    }

    fn dim(&self) -> u8 {
        match self.kind {
            SimplexKind::Vertex => 0,
            SimplexKind::EdgeH | SimplexKind::EdgeV | SimplexKind::EdgeD => 1,
            SimplexKind::FaceUp | SimplexKind::FaceDown => 2,
        }
    }
}

/// Finitely supported integer multiplicity over lattice simplices.
///
/// Zero multiplicities are never stored, so equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    mode: Mode,
    cells: BTreeMap<SimplexId, Int>,
}

impl Chain {
    pub fn new(mode: Mode) -> Self {
        Chain {
            mode,
            cells: BTreeMap::new(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn multiplicity(&self, id: &SimplexId) -> Int {
        self.cells.get(id).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimplexId, &Int)> {
        self.cells.iter()
    }

    /// Adds `delta` to one simplex, dropping the entry when it cancels.
    pub fn accumulate(&mut self, id: SimplexId, delta: Int) {
        if delta == 0 {
            return;
        }
        let slot = self.cells.entry(id).or_insert(0);
        *slot += delta;
        if *slot == 0 {
            self.cells.remove(&id);
        }
    }

    /// Pointwise `self += c·other`. Both chains must live in one mode.
    pub fn add_scaled(&mut self, other: &Chain, c: Int) {
        assert_eq!(self.mode, other.mode, "chain modes must match");
        for (id, m) in &other.cells {
            self.accumulate(*id, m * c);
        }
    }

    pub fn translated(&self, di: Int, dj: Int) -> Chain {
        let mut out = Chain::new(self.mode);
        for (id, m) in &self.cells {
            out.accumulate(
                SimplexId::new(id.kind, id.at.i + di, id.at.j + dj),
                *m,
            );
        }
        out
    }

    /// Projection onto the pair embedding: total face multiplicity and
    /// up-minus-down face multiplicity.
    pub fn project2(&self) -> OrthoPair {
        let mut total = 0;
        let mut updown = 0;
        for (id, m) in &self.cells {
            match id.kind {
                SimplexKind::FaceUp => {
                    total += m;
                    updown += m;
                }
                SimplexKind::FaceDown => {
                    total += m;
                    updown -= m;
                }
                _ => {}
            }
        }
        OrthoPair::new(total, updown)
    }

    /// Projection onto the triple embedding: the pair components plus the
    /// signed Euler count `ΣV − ΣE + ΣF`.
    ///
    /// Only meaningful for chains carrying all simplex kinds.
    pub fn project3(&self) -> TriVec3 {
        assert_eq!(self.mode, Mode::N20, "triple projection needs an N20 chain");
        let pair = self.project2();
        let mut euler = 0;
        for (id, m) in &self.cells {
            match id.dim() {
                0 | 2 => euler += m,
                _ => euler -= m,
            }
        }
        TriVec3::new(pair.s2, pair.s1, euler)
    }

    /// Short human summary, listing up to `max` entries.
    pub fn summary(&self, max: usize) -> String {
        if self.is_empty() {
            return "empty".to_string();
        }
        let mut s = format!("{} simplices:", self.len());
        for (idx, (id, m)) in self.cells.iter().enumerate() {
            if idx == max {
                s.push_str(" …");
                break;
            }
            s.push_str(&format!(" {:?}{}{:+}", id.kind, id.at, m));
        }
        s
    }
}

/// Canonical (sorted) representation of a chain, usable as a map key.
type ChainKey = Vec<(SimplexId, Int)>;
/// An input piece index with its chosen placement.
type Placed = (usize, PlacedTriangle<Int>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("placement search budget exceeded: {0} combinations > {1}")]
    BudgetExceeded(u64, u64),
}

/// Area chain of a placed triangle: each covered cell at multiplicity one.
///
/// A size-`s` triangle covers `s(s+1)/2` up-cells and `s(s−1)/2`
/// down-cells (mirrored for `s < 0`); a point covers nothing.
pub fn face_chain(p: &PlacedTriangle<Int>) -> Chain {
    let mut chain = Chain::new(Mode::N2);
    add_faces(&mut chain, p, 1);
    chain
}

fn add_faces(chain: &mut Chain, p: &PlacedTriangle<Int>, mult: Int) {
    let (x, y, s) = (p.anchor.i, p.anchor.j, p.size);
    if s > 0 {
        for i in 0..s {
            for j in 0..s - i {
                chain.accumulate(SimplexId::new(SimplexKind::FaceUp, x + i, y + j), mult);
                if i + j < s - 1 {
                    chain.accumulate(SimplexId::new(SimplexKind::FaceDown, x + i, y + j), mult);
                }
            }
        }
    } else if s < 0 {
        let m = -s;
        for i in 0..m {
            for j in 0..m - i {
                chain.accumulate(
                    SimplexId::new(SimplexKind::FaceDown, x - 1 - i, y - 1 - j),
                    mult,
                );
                if i + j < m - 1 {
                    chain.accumulate(
                        SimplexId::new(SimplexKind::FaceUp, x - 1 - i, y - 1 - j),
                        mult,
                    );
                }
            }
        }
    }
}

/// Full chain of a placed triangle with every simplex kind.
///
/// Positive sizes are *closed* (all faces, edges and vertices of the
/// triangle), negative sizes are *open* (faces, interior edges and
/// interior vertices only), size zero is the single vertex at the anchor.
/// Every simplex carries multiplicity `sign`.
pub fn n20_chain(p: &PlacedTriangle<Int>, sign: Sign) -> Chain {
    let mut chain = Chain::new(Mode::N20);
    add_n20(&mut chain, p, sign.value());
    chain
}

fn add_n20(chain: &mut Chain, p: &PlacedTriangle<Int>, mult: Int) {
    let (x, y, s) = (p.anchor.i, p.anchor.j, p.size);
    if s == 0 {
        chain.accumulate(SimplexId::new(SimplexKind::Vertex, x, y), mult);
        return;
    }
    let face_mode_fixup = |c: &mut Chain| {
        // faces enumerate identically in both modes; splice them in as N20
        let mut faces = Chain::new(Mode::N2);
        add_faces(&mut faces, p, mult);
        for (id, m) in faces.iter() {
            c.accumulate(*id, *m);
        }
    };
    face_mode_fixup(chain);
    if s > 0 {
        // closed: all vertices i+j ≤ s, all three edge families i+j ≤ s−1
        for i in 0..=s {
            for j in 0..=s - i {
                chain.accumulate(SimplexId::new(SimplexKind::Vertex, x + i, y + j), mult);
                if i + j < s {
                    chain.accumulate(SimplexId::new(SimplexKind::EdgeH, x + i, y + j), mult);
                    chain.accumulate(SimplexId::new(SimplexKind::EdgeV, x + i, y + j), mult);
                    chain.accumulate(SimplexId::new(SimplexKind::EdgeD, x + i, y + j), mult);
                }
            }
        }
    } else {
        // open: strictly interior vertices and the edges not lying in the
        // boundary of the point-reflected triangle
        let m = -s;
        for i in 1..m {
            for j in 1..=(m - i) {
                chain.accumulate(SimplexId::new(SimplexKind::EdgeH, x - i, y - j), mult);
                chain.accumulate(SimplexId::new(SimplexKind::EdgeV, x - i, y - j), mult);
                chain.accumulate(SimplexId::new(SimplexKind::EdgeD, x - i, y - j), mult);
                if i + j < m {
                    chain.accumulate(SimplexId::new(SimplexKind::Vertex, x - i, y - j), mult);
                }
            }
        }
    }
}

/// Chain of one placed triangle in the requested mode, scaled by `coeff`.
pub fn term_chain(p: &PlacedTriangle<Int>, coeff: Int, mode: Mode) -> Chain {
    let mut chain = Chain::new(mode);
    match mode {
        Mode::N2 => add_faces(&mut chain, p, coeff),
        Mode::N20 => add_n20(&mut chain, p, coeff),
    }
    chain
}

/// Signed sum of term chains.
pub fn sum_chain(terms: &[(Int, PlacedTriangle<Int>)], mode: Mode) -> Chain {
    let mut acc = Chain::new(mode);
    for (c, p) in terms {
        match mode {
            Mode::N2 => add_faces(&mut acc, p, *c),
            Mode::N20 => add_n20(&mut acc, p, *c),
        }
    }
    acc
}

/// Residual `Σ cᵢ·chain(pᵢ) − c_target·chain(target)`.
///
/// An empty residual certifies that the placed equation is true in the
/// geometric sense.
pub fn geom_check(
    terms: &[(Int, PlacedTriangle<Int>)],
    target: (Int, &PlacedTriangle<Int>),
    mode: Mode,
) -> Chain {
    let mut acc = sum_chain(terms, mode);
    match mode {
        Mode::N2 => add_faces(&mut acc, target.1, -target.0),
        Mode::N20 => add_n20(&mut acc, target.1, -target.0),
    }
    acc
}

/// Residual of a placed seven-piece construction against its assembled
/// triangle.
pub fn eq8_residual(layout: &Eq8Layout<Int>, mode: Mode) -> Chain {
    let terms = layout.terms();
    geom_check(&terms, (1, &layout.big()), mode)
}

/// Canonical witness placement for the unit decomposition of `⟨n⟩`
/// (`n ≥ 1`): closed units tile the up-cells, open mirrored units the
/// down-cells, and point corrections remove the overlap at every interior
/// corner (twice) and boundary non-corner (once).
#[derive(Clone, Debug)]
pub struct Eq26Placement {
    /// Closed unit triangles, one per up-cell.
    pub units: Vec<PlacedTriangle<Int>>,
    /// Open mirrored units, one per down-cell.
    pub opens: Vec<PlacedTriangle<Int>>,
    /// `(corner, multiplicity)` of the point corrections to subtract.
    pub corrections: Vec<(LatticeCoord<Int>, Int)>,
}

impl Eq26Placement {
    /// The placement as signed `geom_check` terms.
    pub fn terms(&self) -> Vec<(Int, PlacedTriangle<Int>)> {
        let mut terms = Vec::new();
        for u in &self.units {
            terms.push((1, *u));
        }
        for o in &self.opens {
            terms.push((1, *o));
        }
        for (at, mult) in &self.corrections {
            terms.push((-mult, PlacedTriangle::new(*at, 0)));
        }
        terms
    }
}

/// Builds the canonical unit-decomposition placement for `⟨n⟩` at `anchor`.
pub fn eq26_placement(n: Int, anchor: LatticeCoord<Int>) -> Eq26Placement {
    assert!(n >= 1, "the canonical unit decomposition needs n ≥ 1");
    let (x, y) = (anchor.i, anchor.j);
    let mut units = Vec::new();
    let mut opens = Vec::new();
    let mut corrections = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            units.push(PlacedTriangle::at(x + i, y + j, 1));
            if i + j < n - 1 {
                // the open unit covering down-cell D(x+i, y+j)
                opens.push(PlacedTriangle::at(x + i + 1, y + j + 1, -1));
            }
        }
    }
    for i in 1..n {
        // boundary non-corner points on the three sides
        corrections.push((LatticeCoord::new(x + i, y), 1));
        corrections.push((LatticeCoord::new(x, y + i), 1));
        corrections.push((LatticeCoord::new(x + i, y + n - i), 1));
    }
    for i in 1..n {
        for j in 1..n - i {
            corrections.push((LatticeCoord::new(x + i, y + j), 2));
        }
    }
    Eq26Placement {
        units,
        opens,
        corrections,
    }
}

/// Residual of the canonical unit decomposition against `⟨n⟩` itself.
pub fn eq26_residual(n: Int, anchor: LatticeCoord<Int>) -> Chain {
    let placement = eq26_placement(n, anchor);
    let target = PlacedTriangle::new(anchor, n);
    geom_check(&placement.terms(), (1, &target), Mode::N20)
}

/// Exhaustive search for a zero-residual placement of the given signed
/// sizes against a target triangle, with every anchor restricted to the
/// window `radius` lattice steps around the target's bounding box.
///
/// Runs in area (`N2`) chains. A `None` answer is conclusive only for the
/// window. The search meets in the middle — positive pieces on one side,
/// target plus negated pieces on the other — and refuses to enumerate
/// more anchor combinations than `budget`.
pub fn placement_search(
    sizes: &[(Sign, Int)],
    target: &PlacedTriangle<Int>,
    radius: Int,
    budget: u64,
) -> Result<Option<Vec<PlacedTriangle<Int>>>, ChainError> {
    let anchors = window_anchors(target, radius);
    let positives: Vec<(usize, Int)> = sizes
        .iter()
        .enumerate()
        .filter(|(_, (s, _))| *s == Sign::Plus)
        .map(|(idx, (_, v))| (idx, *v))
        .collect();
    let negatives: Vec<(usize, Int)> = sizes
        .iter()
        .enumerate()
        .filter(|(_, (s, _))| *s == Sign::Minus)
        .map(|(idx, (_, v))| (idx, *v))
        .collect();

    let cost = side_cost(&positives, anchors.len() as u64)
        .saturating_add(side_cost(&negatives, anchors.len() as u64));
    if cost > budget {
        return Err(ChainError::BudgetExceeded(cost, budget));
    }

    // Left side: target chain plus every negative piece. Right side: the
    // positive pieces. Equality of the two sums is exactly zero residual.
    let target_chain = face_chain(target);
    let mut left: BTreeMap<ChainKey, Vec<Placed>> = BTreeMap::new();
    enumerate_side(&negatives, &anchors, &target_chain, &mut |key, placed| {
        left.entry(key).or_insert_with(|| placed.to_vec());
    });

    let mut found: Option<Vec<Placed>> = None;
    let empty = Chain::new(Mode::N2);
    enumerate_side(&positives, &anchors, &empty, &mut |key, placed| {
        if found.is_none() {
            if let Some(neg_placed) = left.get(&key) {
                let mut all = placed.to_vec();
                all.extend_from_slice(neg_placed);
                found = Some(all);
            }
        }
    });

    Ok(found.map(|mut placements| {
        placements.sort_by_key(|(idx, _)| *idx);
        placements.into_iter().map(|(_, p)| p).collect()
    }))
}

fn window_anchors(target: &PlacedTriangle<Int>, radius: Int) -> Vec<LatticeCoord<Int>> {
    let (x, y, s) = (target.anchor.i, target.anchor.j, target.size);
    let (i_lo, i_hi) = (x.min(x + s) - radius, x.max(x + s) + radius);
    let (j_lo, j_hi) = (y.min(y + s) - radius, y.max(y + s) + radius);
    let mut anchors = Vec::new();
    for i in i_lo..=i_hi {
        for j in j_lo..=j_hi {
            anchors.push(LatticeCoord::new(i, j));
        }
    }
    anchors
}

/// Number of anchor combinations a side will enumerate: the product over
/// groups of identical sizes of `C(K + m − 1, m)`.
fn side_cost(pieces: &[(usize, Int)], window: u64) -> u64 {
    let mut groups: BTreeMap<Int, u64> = BTreeMap::new();
    for (_, size) in pieces {
        *groups.entry(*size).or_insert(0) += 1;
    }
    let mut cost: u64 = 1;
    for count in groups.values() {
        cost = cost.saturating_mul(multichoose(window, *count));
    }
    cost
}

fn multichoose(k: u64, m: u64) -> u64 {
    // C(k + m − 1, m), saturating
    let mut num: u64 = 1;
    for idx in 0..m {
        num = num.saturating_mul(k.saturating_add(idx)) / (idx + 1);
    }
    num
}

/// Enumerates all anchor assignments for one side (anchors of identical
/// sizes kept non-decreasing), invoking `visit` with the canonical chain
/// key and the placements.
fn enumerate_side(
    pieces: &[(usize, Int)],
    anchors: &[LatticeCoord<Int>],
    base: &Chain,
    visit: &mut dyn FnMut(ChainKey, &[Placed]),
) {
    let mut placed: Vec<Placed> = Vec::with_capacity(pieces.len());

    fn recurse(
        pieces: &[(usize, Int)],
        anchors: &[LatticeCoord<Int>],
        depth: usize,
        chain: &mut Chain,
        placed: &mut Vec<Placed>,
        visit: &mut dyn FnMut(ChainKey, &[Placed]),
    ) {
        if depth == pieces.len() {
            let key: ChainKey = chain.iter().map(|(id, m)| (*id, *m)).collect();
            visit(key, placed);
            return;
        }
        let (input_idx, size) = pieces[depth];
        // identical sizes use non-decreasing anchor indices
        let start = if depth > 0 && pieces[depth - 1].1 == size {
            anchors
                .iter()
                .position(|a| *a == placed[depth - 1].1.anchor)
                .unwrap_or(0)
        } else {
            0
        };
        for a in &anchors[start..] {
            let tri = PlacedTriangle::new(*a, size);
            let mut next = chain.clone();
            add_faces(&mut next, &tri, 1);
            placed.push((input_idx, tri));
            recurse(pieces, anchors, depth + 1, &mut next, placed, visit);
            placed.pop();
        }
    }

    let mut chain = base.clone();
    recurse(pieces, anchors, 0, &mut chain, &mut placed, visit);
}
