//! Independent test oracles.
//!
//! Everything here re-derives chain contents from first principles —
//! point-set membership of simplices in a triangle region — without using
//! the production enumeration loops, so the two can check each other.

use triarith::chain::{Chain, SimplexId, SimplexKind};
use triarith::lattice::PlacedTriangle;
use triarith::ring::Sign;
use triarith::{Int, Mode};

/// Region membership for points scaled by 6 (so edge midpoints and face
/// centroids stay integral).
///
/// `strict` tests the open region. The region of `T((x,y),s)` is
/// `{u ≥ x, v ≥ y, u+v ≤ x+y+s}` for `s > 0` and its point reflection
/// `{u ≤ x, v ≤ y, u+v ≥ x+y+s}` for `s < 0`.
fn contains6(tri: &PlacedTriangle<Int>, pu: Int, pv: Int, strict: bool) -> bool {
    let (x6, y6, s) = (6 * tri.anchor.i, 6 * tri.anchor.j, tri.size);
    let lim = x6 + y6 + 6 * s;
    if s > 0 {
        if strict {
            pu > x6 && pv > y6 && pu + pv < lim
        } else {
            pu >= x6 && pv >= y6 && pu + pv <= lim
        }
    } else {
        if strict {
            pu < x6 && pv < y6 && pu + pv > lim
        } else {
            pu <= x6 && pv <= y6 && pu + pv >= lim
        }
    }
}

fn corners6(kind: SimplexKind, i: Int, j: Int) -> Vec<(Int, Int)> {
    let p = |di: Int, dj: Int| (6 * (i + di), 6 * (j + dj));
    match kind {
        SimplexKind::Vertex => vec![p(0, 0)],
        SimplexKind::EdgeH => vec![p(0, 0), p(1, 0)],
        SimplexKind::EdgeV => vec![p(0, 0), p(0, 1)],
        SimplexKind::EdgeD => vec![p(1, 0), p(0, 1)],
        SimplexKind::FaceUp => vec![p(0, 0), p(1, 0), p(0, 1)],
        SimplexKind::FaceDown => vec![p(1, 0), p(0, 1), p(1, 1)],
    }
}

const ALL_KINDS: [SimplexKind; 6] = [
    SimplexKind::FaceUp,
    SimplexKind::FaceDown,
    SimplexKind::EdgeH,
    SimplexKind::EdgeV,
    SimplexKind::EdgeD,
    SimplexKind::Vertex,
];

/// Oracle chain of a placed triangle, by brute-force membership scan.
///
/// Closed triangles (positive size) take every simplex whose corners all
/// lie in the closed region; open triangles (negative size) take every
/// simplex whose centroid lies strictly inside — the open cells that make
/// up the open region. Size zero is the anchor vertex.
pub fn oracle_n20_chain(tri: &PlacedTriangle<Int>, sign: Sign) -> Chain {
    let mut chain = Chain::new(Mode::N20);
    let mult: Int = sign.value();
    let (x, y, s) = (tri.anchor.i, tri.anchor.j, tri.size);
    if s == 0 {
        chain.accumulate(SimplexId::new(SimplexKind::Vertex, x, y), mult);
        return chain;
    }
    let lo_i = x.min(x + s) - 1;
    let hi_i = x.max(x + s) + 1;
    let lo_j = y.min(y + s) - 1;
    let hi_j = y.max(y + s) + 1;
    for i in lo_i..=hi_i {
        for j in lo_j..=hi_j {
            for kind in ALL_KINDS {
                let cs = corners6(kind, i, j);
                let included = if s > 0 {
                    cs.iter().all(|(pu, pv)| contains6(tri, *pu, *pv, false))
                } else {
                    let n = cs.len() as Int;
                    let (su, sv) = cs
                        .iter()
                        .fold((0, 0), |(au, av), (pu, pv)| (au + pu, av + pv));
                    // centroid × 6, comparing against region × n
                    contains6scaled(tri, su, sv, n)
                };
                if included {
                    chain.accumulate(SimplexId::new(kind, i, j), mult);
                }
            }
        }
    }
    chain
}

/// Strict membership of the rational point `(su/n, sv/n)` (coordinates
/// pre-scaled by 6n).
fn contains6scaled(tri: &PlacedTriangle<Int>, su: Int, sv: Int, n: Int) -> bool {
    let (x6, y6, s) = (6 * tri.anchor.i * n, 6 * tri.anchor.j * n, tri.size);
    let lim = x6 + y6 + 6 * s * n;
    if s > 0 {
        su > x6 && sv > y6 && su + sv < lim
    } else {
        su < x6 && sv < y6 && su + sv > lim
    }
}

/// Oracle area chain: the faces of [`oracle_n20_chain`].
pub fn oracle_face_chain(tri: &PlacedTriangle<Int>) -> Chain {
    let full = oracle_n20_chain(tri, Sign::Plus);
    let mut chain = Chain::new(Mode::N2);
    for (id, m) in full.iter() {
        if matches!(id.kind, SimplexKind::FaceUp | SimplexKind::FaceDown) {
            chain.accumulate(*id, *m);
        }
    }
    chain
}

/// Combinatorial Euler count `V − E + F` of an oracle chain.
#[allow(dead_code)] // each integration test compiles its own copy
pub fn euler(chain: &Chain) -> Int {
    let mut acc = 0;
    for (id, m) in chain.iter() {
        match id.kind {
            SimplexKind::Vertex | SimplexKind::FaceUp | SimplexKind::FaceDown => acc += m,
            _ => acc -= m,
        }
    }
    acc
}
