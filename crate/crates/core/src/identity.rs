//! Symbolic identities over triangle labels and the componentwise checker.
//!
//! An identity states `lhs = Σ cⱼ·termⱼ`. It holds *in the arithmetic
//! sense* when the embeddings agree componentwise: on `(n², n)` in
//! [`Mode::N2`], on `(n², n, 1)` in [`Mode::N20`]. The generators below
//! build the catalogued families; `eq8` instances additionally support the
//! sign-flip rewrites that re-root the construction at a different base,
//! and the ten-case classification of their geometric configurations.

use thiserror::Error;

use crate::ring::{b_vec, OrthoPair, RingError, TriVec3, TriangleLabel};
use crate::{Int, Mode};

/// Slot-aware sum label: ordered increments `n, k, l` over the base `t`.
///
/// The slot a value occupies matters geometrically: `⟨n+0+0+t⟩` and
/// `⟨0+0+l+t⟩` with `n = l` denote different placements of the same size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SumLabel {
    pub n: Int,
    pub k: Int,
    pub l: Int,
    pub t: Int,
}

impl SumLabel {
    pub fn new(n: Int, k: Int, l: Int, t: Int) -> Self {
        SumLabel { n, k, l, t }
    }

    pub fn value(&self) -> Int {
        self.n + self.k + self.l + self.t
    }

    pub fn label(&self) -> TriangleLabel {
        TriangleLabel::positive(self.value())
    }
}

impl std::fmt::Display for SumLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨{}+{}+{}{:+}⟩", self.n, self.k, self.l, self.t)
    }
}

/// One summand of an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    /// A plain label `±⟨n⟩`.
    Label(TriangleLabel),
    /// A slot-aware sum label (always positive orientation).
    Slot(SumLabel),
    /// A raw triple, for summands like `b_vec` that are not labels.
    Raw(TriVec3),
}

impl Term {
    pub fn embed3(&self) -> Result<TriVec3, RingError> {
        match self {
            Term::Label(l) => l.embed3(),
            Term::Slot(s) => s.label().embed3(),
            Term::Raw(v) => Ok(*v),
        }
    }

    pub fn embed_ortho(&self) -> Result<OrthoPair, RingError> {
        Ok(self.embed3()?.truncate())
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Term::Label(l) => write!(f, "{l}"),
            Term::Slot(s) => write!(f, "{s}"),
            Term::Raw(v) => write!(f, "{v}"),
        }
    }
}

/// A claimed equation `lhs = Σ cⱼ·termⱼ` with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub lhs: TriangleLabel,
    pub terms: Vec<(Int, Term)>,
    /// `(n, k, l, t)` when the instance came from [`eq8`].
    eq8_params: Option<[Int; 4]>,
}

/// Outcome of an arithmetic-sense check, with per-component residuals
/// (`lhs − Σ cⱼ·termⱼ` in embedding coordinates).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArithVerdict {
    pub mode: Mode,
    /// Residual of the `n²` (area) component.
    pub residual_sq: Int,
    /// Residual of the `n` (side) component.
    pub residual_lin: Int,
    /// Residual of the count component; `None` in [`Mode::N2`].
    pub residual_count: Option<Int>,
}

impl ArithVerdict {
    pub fn holds(&self) -> bool {
        self.residual_sq == 0 && self.residual_lin == 0 && self.residual_count.unwrap_or(0) == 0
    }
}

impl std::fmt::Display for ArithVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: residuals sq={} lin={}",
            if self.holds() { "true" } else { "false" },
            self.residual_sq,
            self.residual_lin
        )?;
        if let Some(c) = self.residual_count {
            write!(f, " count={c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("instance was not produced by the eq8 generator")]
    NotEq8,
    #[error("negative slot value {0}; flip signs first")]
    NegativeSlot(Int),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl IdentityInstance {
    /// Builds an instance, dropping zero coefficients.
    pub fn new(lhs: TriangleLabel, terms: Vec<(Int, Term)>) -> Self {
        let terms = terms.into_iter().filter(|(c, _)| *c != 0).collect();
        IdentityInstance {
            lhs,
            terms,
            eq8_params: None,
        }
    }

    pub fn eq8_params(&self) -> Option<[Int; 4]> {
        self.eq8_params
    }

    /// Sum of the right-hand side in triple coordinates.
    pub fn rhs_sum3(&self) -> Result<TriVec3, RingError> {
        let mut acc = TriVec3::zero();
        for (c, term) in &self.terms {
            acc = acc.add3(&term.embed3()?.scaled(c)?)?;
        }
        Ok(acc)
    }

    /// Sum of the right-hand side in orthogonal-pair coordinates.
    pub fn rhs_sum2(&self) -> Result<OrthoPair, RingError> {
        Ok(self.rhs_sum3()?.truncate())
    }

    /// Componentwise check of the claimed equation.
    pub fn arith_check(&self, mode: Mode) -> ArithVerdict {
        let lhs = self
            .lhs
            .embed3()
            .expect("label embedding overflowed in identity check");
        let rhs = self
            .rhs_sum3()
            .expect("term sum overflowed in identity check");
        let d = lhs.sub3(&rhs).expect("residual overflowed in identity check");
        ArithVerdict {
            mode,
            residual_sq: d.a,
            residual_lin: d.b,
            residual_count: match mode {
                Mode::N2 => None,
                Mode::N20 => Some(d.c),
            },
        }
    }
}

impl std::fmt::Display for IdentityInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} =", self.lhs)?;
        for (idx, (c, term)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let sign = if *c < 0 { "-" } else { "+" };
            if idx == 0 && *c > 0 {
                write!(f, " ")?;
            } else {
                write!(f, " {sign} ")?;
            }
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

/// Three-increment sum rule (six summands, no base):
/// `⟨n+k+l⟩ = ⟨n+k⟩ + ⟨n+l⟩ + ⟨k+l⟩ − ⟨n⟩ − ⟨k⟩ − ⟨l⟩`.
///
/// Holds in the area/side components but never in the count component
/// (the summand count nets to zero while the left side counts one).
pub fn eq3(n: Int, k: Int, l: Int) -> IdentityInstance {
    let s = |sn, sk, sl| Term::Slot(SumLabel::new(sn, sk, sl, 0));
    IdentityInstance::new(
        TriangleLabel::positive(n + k + l),
        vec![
            (1, s(n, k, 0)),
            (1, s(n, 0, l)),
            (1, s(0, k, l)),
            (-1, s(n, 0, 0)),
            (-1, s(0, k, 0)),
            (-1, s(0, 0, l)),
        ],
    )
}

/// Based sum rule (seven summands over the base `⟨t⟩`):
/// `⟨n+k+l+t⟩ = ⟨n+k+t⟩ + ⟨n+l+t⟩ + ⟨k+l+t⟩ − ⟨n+t⟩ − ⟨k+t⟩ − ⟨l+t⟩ + ⟨t⟩`.
///
/// Zero-size summands are kept symbolically; the slots record which
/// increments each summand uses.
pub fn eq8(n: Int, k: Int, l: Int, t: Int) -> IdentityInstance {
    let s = |sn, sk, sl| Term::Slot(SumLabel::new(sn, sk, sl, t));
    let mut inst = IdentityInstance::new(
        TriangleLabel::positive(n + k + l + t),
        vec![
            (1, s(n, k, 0)),
            (1, s(n, 0, l)),
            (1, s(0, k, l)),
            (-1, s(n, 0, 0)),
            (-1, s(0, k, 0)),
            (-1, s(0, 0, l)),
            (1, s(0, 0, 0)),
        ],
    );
    inst.eq8_params = Some([n, k, l, t]);
    inst
}

/// Which of the three increment slots to sign-flip in [`rewrite_neg`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SlotSet {
    pub n: bool,
    pub k: bool,
    pub l: bool,
}

impl SlotSet {
    pub const EMPTY: SlotSet = SlotSet {
        n: false,
        k: false,
        l: false,
    };
    pub const ALL: SlotSet = SlotSet {
        n: true,
        k: true,
        l: true,
    };

    pub fn new(n: bool, k: bool, l: bool) -> Self {
        SlotSet { n, k, l }
    }
}

/// Re-roots an `eq8` instance by flipping the chosen increment slots.
///
/// Flipping a subset `S` replaces each slot value `v` (for slots in `S`)
/// by `−v` and moves their sum into the base, producing the equivalent
/// instance with left side `⟨t + Σ_{S} v⟩`. Flipping one, two or all three
/// slots yields the standard single/double/triple rewrites; the empty set
/// returns the instance unchanged. The arithmetic verdict is preserved in
/// both modes.
pub fn rewrite_neg(
    inst: &IdentityInstance,
    slots: SlotSet,
) -> Result<IdentityInstance, IdentityError> {
    let [n, k, l, t] = inst.eq8_params.ok_or(IdentityError::NotEq8)?;
    let flip = |on: bool, v: Int| if on { -v } else { v };
    let moved = [(slots.n, n), (slots.k, k), (slots.l, l)]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, v)| v)
        .sum::<Int>();
    Ok(eq8(
        flip(slots.n, n),
        flip(slots.k, k),
        flip(slots.l, l),
        t + moved,
    ))
}

/// Normalizes `eq8` parameters to nonnegative increments by flipping every
/// negative slot, returning the rewritten parameters `(n, k, l, t)`.
pub fn normalize_params(n: Int, k: Int, l: Int, t: Int) -> [Int; 4] {
    let inst = rewrite_neg(
        &eq8(n, k, l, t),
        SlotSet::new(n < 0, k < 0, l < 0),
    )
    .expect("eq8 instance always rewrites");
    inst.eq8_params().expect("rewrite produces an eq8 instance")
}

/// Configuration class of an `eq8` construction with nonnegative increments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseId {
    /// Position in the ten-case enumeration.
    pub case_number: u8,
    /// Representative after sign symmetry: 8→3, 7→4, 9→2, 10→1.
    pub canonical_case: u8,
}

impl CaseId {
    fn new(case_number: u8) -> Self {
        let canonical_case = match case_number {
            8 => 3,
            7 => 4,
            9 => 2,
            10 => 1,
            c => c,
        };
        CaseId {
            case_number,
            canonical_case,
        }
    }
}

/// Classifies an `eq8` configuration into its ten-case enumeration.
///
/// Requires `n, k, l ≥ 0` (negative increments must first pass through
/// [`rewrite_neg`]). The enumeration is exhaustive for the *sorted*
/// increments, so classification happens on `n ≥ k ≥ l`; the first case
/// whose conditions hold wins, with each strict inequality relaxed to
/// cover boundary zeros.
pub fn case_classify(n: Int, k: Int, l: Int, t: Int) -> Result<CaseId, IdentityError> {
    for v in [n, k, l] {
        if v < 0 {
            return Err(IdentityError::NegativeSlot(v));
        }
    }
    let mut s = [n, k, l];
    s.sort_unstable_by(|a, b| b.cmp(a));
    let [a, b, c] = s;
    let (at, bt, ct) = (a + t, b + t, c + t);
    let (abt, act, bct) = (a + b + t, a + c + t, b + c + t);
    let total = a + b + c + t;

    let case = if t >= 0 {
        1
    } else if at >= 0 && bt >= 0 && ct >= 0 {
        2
    } else if at >= 0 && bt >= 0 && ct <= 0 {
        3
    } else if at >= 0 && bt <= 0 && ct <= 0 && bct >= 0 {
        4
    } else if at >= 0 && bct <= 0 {
        5
    } else if at <= 0 && bt <= 0 && ct <= 0 && abt >= 0 && bct >= 0 && act >= 0 {
        6
    } else if at <= 0 && abt >= 0 && bct <= 0 && act >= 0 {
        7
    } else if abt >= 0 && bct <= 0 && act <= 0 {
        8
    } else if abt <= 0 && bct <= 0 && act <= 0 && total >= 0 {
        9
    } else if total <= 0 {
        10
    } else {
        unreachable!("the ten-case enumeration is total on sorted increments")
    };
    Ok(CaseId::new(case))
}

fn triangular(v: Int) -> Int {
    v * (v + 1) / 2
}

/// Unit decomposition with point corrections:
/// `⟨n⟩ = n(n+1)/2·⟨1⟩ − (n−1)(n+1)·⟨0⟩ + n(n−1)/2·⟨−1⟩`.
pub fn eq26(n: Int) -> IdentityInstance {
    let lab = |v| Term::Label(TriangleLabel::positive(v));
    IdentityInstance::new(
        TriangleLabel::positive(n),
        vec![
            (triangular(n), lab(1)),
            (-(n - 1) * (n + 1), lab(0)),
            (n * (n - 1) / 2, lab(-1)),
        ],
    )
}

/// Three-step ladder on the arithmetic progression `a·Z + t`:
/// `⟨na+t⟩` from `⟨(k+1)a+t⟩`, `⟨ka+t⟩`, `⟨(k−1)a+t⟩` with the
/// triangular-number coefficients in `u = n − k`.
pub fn eq27(a: Int, k: Int, n: Int, t: Int) -> IdentityInstance {
    let u = n - k;
    let lab = |v| Term::Label(TriangleLabel::positive(v));
    IdentityInstance::new(
        TriangleLabel::positive(n * a + t),
        vec![
            (u * (u + 1) / 2, lab((k + 1) * a + t)),
            (-(u - 1) * (u + 1), lab(k * a + t)),
            (u * (u - 1) / 2, lab((k - 1) * a + t)),
        ],
    )
}

/// The `k = 1` ladder: `⟨na+t⟩` from `⟨2a+t⟩`, `⟨a+t⟩`, `⟨t⟩`.
pub fn eq28(a: Int, n: Int, t: Int) -> IdentityInstance {
    let lab = |v| Term::Label(TriangleLabel::positive(v));
    IdentityInstance::new(
        TriangleLabel::positive(n * a + t),
        vec![
            ((n - 1) * n / 2, lab(2 * a + t)),
            (-n * (n - 2), lab(a + t)),
            ((n - 2) * (n - 1) / 2, lab(t)),
        ],
    )
}

/// The same decomposition as [`eq28`], written through the correction
/// triple: `⟨na+t⟩ = n(n+1)/2·⟨a+t⟩ + (n−1)n/2·b(a,t) + (n−2)(n−1)/2·⟨t⟩`.
pub fn eq29(a: Int, n: Int, t: Int) -> IdentityInstance {
    let lab = |v| Term::Label(TriangleLabel::positive(v));
    let b = b_vec(&a, &t).expect("correction triple overflowed");
    IdentityInstance::new(
        TriangleLabel::positive(n * a + t),
        vec![
            (triangular(n), lab(a + t)),
            ((n - 1) * n / 2, Term::Raw(b)),
            ((n - 2) * (n - 1) / 2, lab(t)),
        ],
    )
}

/// [`eq29`] at `a = 1, t = 0`: the correction-form unit decomposition.
pub fn eq30(n: Int) -> IdentityInstance {
    eq29(1, n, 0)
}

/// [`eq29`] at `a = 3, t = −1`: `⟨3n−1⟩` over `⟨2⟩`, `b(3,−1)`, `⟨−1⟩`.
pub fn eq31(n: Int) -> IdentityInstance {
    eq29(3, n, -1)
}

/// [`eq29`] at `a = 2, t = 1`: `⟨2n+1⟩` over `⟨3⟩`, `b(2,1)`, `⟨1⟩`.
pub fn eq32(n: Int) -> IdentityInstance {
    eq29(2, n, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq5_shape_holds_in_n2_only() {
        // ⟨4⟩ = 2⟨3⟩ − 2⟨1⟩
        let inst = IdentityInstance::new(
            TriangleLabel::positive(4),
            vec![
                (2, Term::Label(TriangleLabel::positive(3))),
                (-2, Term::Label(TriangleLabel::positive(1))),
            ],
        );
        assert!(inst.arith_check(Mode::N2).holds());
        let v = inst.arith_check(Mode::N20);
        assert!(!v.holds());
        assert_eq!(v.residual_count, Some(1));
    }

    #[test]
    fn trivial_identity_holds_everywhere() {
        let inst = IdentityInstance::new(
            TriangleLabel::positive(7),
            vec![(1, Term::Label(TriangleLabel::positive(7)))],
        );
        assert!(inst.arith_check(Mode::N2).holds());
        assert!(inst.arith_check(Mode::N20).holds());
    }

    #[test]
    fn eq8_instance_matches_dissection_root() {
        let inst = eq8(19, 12, 20, -12);
        assert_eq!(inst.lhs, TriangleLabel::positive(39));
        let sizes: Vec<(Int, Int)> = inst
            .terms
            .iter()
            .map(|(c, t)| match t {
                Term::Slot(s) => (*c, s.value()),
                _ => panic!("eq8 terms are slot labels"),
            })
            .collect();
        assert_eq!(
            sizes,
            vec![(1, 19), (1, 27), (1, 20), (-1, 7), (-1, 0), (-1, 8), (1, -12)]
        );
        assert!(inst.arith_check(Mode::N20).holds());
    }

    #[test]
    fn eq8_degenerate_keeps_all_terms() {
        let inst = eq8(0, 0, 0, 5);
        assert_eq!(inst.terms.len(), 7);
        assert!(inst
            .terms
            .iter()
            .all(|(_, t)| matches!(t, Term::Slot(s) if s.value() == 5)));
        assert!(inst.arith_check(Mode::N20).holds());
    }

    #[test]
    fn eq3_before_reduction_matches_small_example() {
        let inst = eq3(1, 1, 2);
        assert_eq!(inst.lhs, TriangleLabel::positive(4));
        let sizes: Vec<(Int, Int)> = inst
            .terms
            .iter()
            .map(|(c, t)| match t {
                Term::Slot(s) => (*c, s.value()),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            sizes,
            vec![(1, 2), (1, 3), (1, 3), (-1, 1), (-1, 1), (-1, 2)]
        );
        assert!(inst.arith_check(Mode::N2).holds());
        let v = inst.arith_check(Mode::N20);
        assert_eq!(v.residual_count, Some(1));
    }

    #[test]
    fn eq3_always_misses_count_by_one() {
        for n in -20..=20 {
            for k in (-20..=20).step_by(5) {
                for l in (-20..=20).step_by(3) {
                    let inst = eq3(n, k, l);
                    assert!(inst.arith_check(Mode::N2).holds(), "n={n} k={k} l={l}");
                    let v = inst.arith_check(Mode::N20);
                    assert_eq!(v.residual_count, Some(1), "n={n} k={k} l={l}");
                    assert!(!v.holds());
                }
            }
        }
    }

    #[test]
    fn rewrite_re_roots_the_base() {
        let inst = eq8(3, 4, 5, -2);
        let one = rewrite_neg(&inst, SlotSet::new(false, false, true)).unwrap();
        assert_eq!(one.eq8_params(), Some([3, 4, -5, 3]));
        assert_eq!(one.lhs, TriangleLabel::positive(5));
        let all = rewrite_neg(&inst, SlotSet::ALL).unwrap();
        assert_eq!(all.eq8_params(), Some([-3, -4, -5, 10]));
        assert_eq!(all.lhs, TriangleLabel::positive(-2));
        let none = rewrite_neg(&inst, SlotSet::EMPTY).unwrap();
        assert_eq!(none, inst);
    }

    #[test]
    fn rewrite_requires_eq8() {
        let inst = eq3(1, 1, 2);
        assert_eq!(
            rewrite_neg(&inst, SlotSet::EMPTY),
            Err(IdentityError::NotEq8)
        );
    }

    #[test]
    fn rewrite_preserves_verdict() {
        let subsets = [
            SlotSet::EMPTY,
            SlotSet::new(true, false, false),
            SlotSet::new(false, true, false),
            SlotSet::new(false, false, true),
            SlotSet::new(true, true, false),
            SlotSet::new(true, false, true),
            SlotSet::new(false, true, true),
            SlotSet::ALL,
        ];
        for n in [-7, 0, 3] {
            for k in [-2, 0, 5] {
                for l in [-9, 1] {
                    for t in [-4, 0, 6] {
                        let inst = eq8(n, k, l, t);
                        for s in subsets {
                            let r = rewrite_neg(&inst, s).unwrap();
                            for mode in [Mode::N2, Mode::N20] {
                                assert_eq!(
                                    inst.arith_check(mode).holds(),
                                    r.arith_check(mode).holds()
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(case_classify(1, 1, 1, 1).unwrap().case_number, 1);
        assert_eq!(case_classify(2, 2, 2, -1).unwrap().case_number, 2);
        let c = case_classify(1, 1, 1, -4).unwrap();
        assert_eq!(c.case_number, 10);
        assert_eq!(c.canonical_case, 1);
        assert_eq!(case_classify(6, 4, 3, -8).unwrap().case_number, 7);
        assert_eq!(case_classify(6, 5, 1, -9).unwrap().case_number, 8);
        assert_eq!(case_classify(4, 4, 4, -9).unwrap().case_number, 9);
        assert!(case_classify(-1, 0, 0, 0).is_err());
    }

    #[test]
    fn classification_is_total_and_order_blind() {
        for n in 0..=9 {
            for k in 0..=9 {
                for l in 0..=9 {
                    for t in -22..=5 {
                        let c = case_classify(n, k, l, t).unwrap();
                        assert!((1..=10).contains(&c.case_number));
                        assert!((1..=6).contains(&c.canonical_case));
                        let p = case_classify(l, n, k, t).unwrap();
                        assert_eq!(c, p, "permutation changed the case");
                    }
                }
            }
        }
    }

    #[test]
    fn eq26_small_values() {
        let inst = eq26(3);
        assert_eq!(
            inst.terms,
            vec![
                (6, Term::Label(TriangleLabel::positive(1))),
                (-8, Term::Label(TriangleLabel::positive(0))),
                (3, Term::Label(TriangleLabel::positive(-1))),
            ]
        );
        assert!(inst.arith_check(Mode::N20).holds());
        for n in -10..=10 {
            assert!(eq26(n).arith_check(Mode::N20).holds(), "n={n}");
        }
    }

    #[test]
    fn ladder_families_hold_in_n20() {
        for a in -6..=6 {
            for k in -4..=4 {
                for n in -4..=4 {
                    for t in -5..=5 {
                        assert!(
                            eq27(a, k, n, t).arith_check(Mode::N20).holds(),
                            "a={a} k={k} n={n} t={t}"
                        );
                    }
                }
            }
        }
        for a in -6..=6 {
            for n in -6..=6 {
                for t in -6..=6 {
                    assert!(eq28(a, n, t).arith_check(Mode::N20).holds());
                    assert!(eq29(a, n, t).arith_check(Mode::N20).holds());
                    assert_eq!(
                        eq28(a, n, t).rhs_sum3().unwrap(),
                        eq29(a, n, t).rhs_sum3().unwrap(),
                        "the two ladder forms agree termwise"
                    );
                }
            }
        }
    }

    #[test]
    fn correction_form_figures() {
        use crate::ring::TriVec3;
        let i31 = eq31(3);
        assert_eq!(i31.lhs, TriangleLabel::positive(8));
        assert_eq!(i31.rhs_sum3().unwrap(), TriVec3::new(64, 8, 1));
        assert_eq!(
            i31.terms,
            vec![
                (6, Term::Label(TriangleLabel::positive(2))),
                (3, Term::Raw(TriVec3::new(13, -1, -2))),
                (1, Term::Label(TriangleLabel::positive(-1))),
            ]
        );

        let i32 = eq32(3);
        assert_eq!(i32.lhs, TriangleLabel::positive(7));
        assert_eq!(i32.rhs_sum3().unwrap(), TriVec3::new(49, 7, 1));

        let i32n = eq32(-2);
        assert_eq!(i32n.lhs, TriangleLabel::positive(-3));
        assert_eq!(i32n.rhs_sum3().unwrap(), TriVec3::new(9, -3, 1));
        assert_eq!(
            i32n.terms,
            vec![
                (1, Term::Label(TriangleLabel::positive(3))),
                (3, Term::Raw(TriVec3::new(-2, -4, -2))),
                (6, Term::Label(TriangleLabel::positive(1))),
            ]
        );

        for n in -10..=10 {
            assert!(eq30(n).arith_check(Mode::N20).holds());
            assert!(eq31(n).arith_check(Mode::N20).holds());
            assert!(eq32(n).arith_check(Mode::N20).holds());
        }
    }
}
