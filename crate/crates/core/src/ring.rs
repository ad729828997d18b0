//! Label rings and embeddings.
//!
//! The unit triangle `⟨1⟩` and its mirror `⟨−1⟩` span a commutative ring
//! with componentwise addition and the bilinear product
//! `(x₁, y₁)·(x₂, y₂) = (x₁x₂ + y₁y₂, x₁y₂ + x₂y₁)`. In the idempotent
//! basis `A₂ = (⟨1⟩+⟨−1⟩)/2`, `A₁ = (⟨1⟩−⟨−1⟩)/2` the same ring becomes
//! the componentwise product ring, where the label `⟨n⟩` sits at `(n², n)`.
//! Extending coordinates by a cell count gives the componentwise triple
//! ring, where `⟨n⟩` sits at `(n², n, 1)`.

use thiserror::Error;

use crate::{Int, Scalar};

/// Errors from exact ring arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    /// A checked operation overflowed the scalar type.
    #[error("overflow in exact ring arithmetic")]
    Overflow,
    /// An orthogonal pair whose components cannot be halved back into the
    /// unit/mirror basis.
    #[error("parity violation: orthogonal coordinates are not an integer combination of ⟨1⟩ and ⟨−1⟩")]
    Parity,
}

fn add<T: Scalar>(a: &T, b: &T) -> Result<T, RingError> {
    a.checked_add(b).ok_or(RingError::Overflow)
}

fn sub<T: Scalar>(a: &T, b: &T) -> Result<T, RingError> {
    a.checked_sub(b).ok_or(RingError::Overflow)
}

fn mul<T: Scalar>(a: &T, b: &T) -> Result<T, RingError> {
    a.checked_mul(b).ok_or(RingError::Overflow)
}

/// Chain orientation of a label: `Plus` is the filled/black build direction,
/// `Minus` the negated/red one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value<T: Scalar>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of a coefficient; zero counts as `Plus`.
    pub fn of(v: Int) -> Self {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Ring element `x⟨1⟩ + y⟨−1⟩` in the unit/mirror basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElem2<T: Scalar = Int> {
    /// Coefficient of the unit triangle `⟨1⟩`.
    pub x: T,
    /// Coefficient of the mirror unit `⟨−1⟩`.
    pub y: T,
}

impl<T: Scalar> RingElem2<T> {
    pub fn new(x: T, y: T) -> Self {
        RingElem2 { x, y }
    }

    /// Additive neutral `0⟨1⟩ + 0⟨−1⟩`.
    pub fn zero() -> Self {
        RingElem2::new(T::zero(), T::zero())
    }

    /// Multiplicative neutral `1⟨1⟩ + 0⟨−1⟩ = ⟨1⟩`.
    pub fn one() -> Self {
        RingElem2::new(T::one(), T::zero())
    }

    /// Componentwise sum.
    pub fn add2(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(RingElem2::new(add(&self.x, &rhs.x)?, add(&self.y, &rhs.y)?))
    }

    /// Bilinear product `(x₁x₂ + y₁y₂, x₁y₂ + x₂y₁)`.
    pub fn mul2(&self, rhs: &Self) -> Result<Self, RingError> {
        let x = add(&mul(&self.x, &rhs.x)?, &mul(&self.y, &rhs.y)?)?;
        let y = add(&mul(&self.x, &rhs.y)?, &mul(&rhs.x, &self.y)?)?;
        Ok(RingElem2::new(x, y))
    }

    /// Coordinates in the idempotent basis: `(x + y, x − y)`.
    pub fn to_ortho(&self) -> Result<OrthoPair<T>, RingError> {
        Ok(OrthoPair::new(add(&self.x, &self.y)?, sub(&self.x, &self.y)?))
    }

    /// Inverse of [`to_ortho`](Self::to_ortho); fails when the coordinates
    /// cannot be halved exactly.
    pub fn from_ortho(p: &OrthoPair<T>) -> Result<Self, RingError> {
        let two = T::two();
        let sum = add(&p.s2, &p.s1)?;
        let diff = sub(&p.s2, &p.s1)?;
        let x = sum.clone() / two.clone();
        let y = diff.clone() / two.clone();
        if mul(&x, &two)? != sum || mul(&y, &two)? != diff {
            return Err(RingError::Parity);
        }
        Ok(RingElem2::new(x, y))
    }
}

/// Coordinates in the idempotent (orthogonal) basis: `s2` multiplies the
/// area symbol `A₂`, `s1` the side symbol `A₁`. Labels sit at `±(n², n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrthoPair<T: Scalar = Int> {
    pub s2: T,
    pub s1: T,
}

impl<T: Scalar> OrthoPair<T> {
    pub fn new(s2: T, s1: T) -> Self {
        OrthoPair { s2, s1 }
    }

    pub fn zero() -> Self {
        OrthoPair::new(T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.s2.is_zero() && self.s1.is_zero()
    }

    /// Componentwise sum in the product ring.
    pub fn add2(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(OrthoPair::new(add(&self.s2, &rhs.s2)?, add(&self.s1, &rhs.s1)?))
    }

    pub fn sub2(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(OrthoPair::new(sub(&self.s2, &rhs.s2)?, sub(&self.s1, &rhs.s1)?))
    }

    /// Componentwise product in the product ring.
    pub fn mul2(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(OrthoPair::new(mul(&self.s2, &rhs.s2)?, mul(&self.s1, &rhs.s1)?))
    }

    pub fn scaled(&self, c: &T) -> Result<Self, RingError> {
        Ok(OrthoPair::new(mul(&self.s2, c)?, mul(&self.s1, c)?))
    }
}

impl<T: Scalar> std::fmt::Display for OrthoPair<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.s2, self.s1)
    }
}

/// Element of the componentwise triple ring; labels sit at `±(n², n, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriVec3<T: Scalar = Int> {
    /// Area component (`n²` on labels).
    pub a: T,
    /// Side component (`n` on labels).
    pub b: T,
    /// Count component (`1` on labels).
    pub c: T,
}

impl<T: Scalar> TriVec3<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        TriVec3 { a, b, c }
    }

    pub fn zero() -> Self {
        TriVec3::new(T::zero(), T::zero(), T::zero())
    }

    /// Multiplicative neutral `(1, 1, 1)`.
    pub fn one() -> Self {
        TriVec3::new(T::one(), T::one(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn add3(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(TriVec3::new(
            add(&self.a, &rhs.a)?,
            add(&self.b, &rhs.b)?,
            add(&self.c, &rhs.c)?,
        ))
    }

    pub fn sub3(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(TriVec3::new(
            sub(&self.a, &rhs.a)?,
            sub(&self.b, &rhs.b)?,
            sub(&self.c, &rhs.c)?,
        ))
    }

    pub fn mul3(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(TriVec3::new(
            mul(&self.a, &rhs.a)?,
            mul(&self.b, &rhs.b)?,
            mul(&self.c, &rhs.c)?,
        ))
    }

    pub fn scaled(&self, k: &T) -> Result<Self, RingError> {
        Ok(TriVec3::new(mul(&self.a, k)?, mul(&self.b, k)?, mul(&self.c, k)?))
    }

    /// Forget the count component.
    pub fn truncate(&self) -> OrthoPair<T> {
        OrthoPair::new(self.a.clone(), self.b.clone())
    }
}

impl<T: Scalar> std::fmt::Display for TriVec3<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A similar triangle with parallel sides, as a symbol.
///
/// `n > 0` is the upward triangle with side `n`, `n < 0` its mirror image
/// (downward), `n = 0` a point. The `sign` negates the whole label: `−⟨n⟩`
/// laid on `⟨n⟩` yields the empty set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleLabel<T: Scalar = Int> {
    pub sign: Sign,
    pub n: T,
}

impl<T: Scalar> TriangleLabel<T> {
    pub fn new(sign: Sign, n: T) -> Self {
        TriangleLabel { sign, n }
    }

    pub fn positive(n: T) -> Self {
        TriangleLabel::new(Sign::Plus, n)
    }

    pub fn negative(n: T) -> Self {
        TriangleLabel::new(Sign::Minus, n)
    }

    /// Basis form `sign·(n(n+1)/2, n(n−1)/2)`.
    pub fn embed2(&self) -> Result<RingElem2<T>, RingError> {
        let up = half_product(&self.n, &add(&self.n, &T::one())?)?;
        let down = half_product(&self.n, &sub(&self.n, &T::one())?)?;
        let s = self.sign.value::<T>();
        Ok(RingElem2::new(mul(&up, &s)?, mul(&down, &s)?))
    }

    /// Orthogonal form `sign·(n², n)`.
    pub fn embed_ortho(&self) -> Result<OrthoPair<T>, RingError> {
        let sq = mul(&self.n, &self.n)?;
        OrthoPair::new(sq, self.n.clone()).scaled(&self.sign.value())
    }

    /// Triple form `sign·(n², n, 1)`.
    pub fn embed3(&self) -> Result<TriVec3<T>, RingError> {
        let sq = mul(&self.n, &self.n)?;
        TriVec3::new(sq, self.n.clone(), T::one()).scaled(&self.sign.value())
    }
}

impl<T: Scalar> std::fmt::Display for TriangleLabel<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "⟨{}⟩", self.n),
            Sign::Minus => write!(f, "-⟨{}⟩", self.n),
        }
    }
}

/// Exact `v·(v ± 1)/2`; the product of consecutive scalars halves exactly
/// over the integers, and every scalar halves over the rationals.
fn half_product<T: Scalar>(a: &T, b: &T) -> Result<T, RingError> {
    let p = mul(a, b)?;
    let two = T::two();
    let h = p.clone() / two.clone();
    debug_assert!(mul(&h, &two)? == p);
    Ok(h)
}

/// Membership of an orthogonal pair in the set of embedded labels `±(n², n)`.
///
/// `(0, 0)` resolves to `+⟨0⟩`.
pub fn is_n2<T: Scalar>(v: &OrthoPair<T>) -> Option<TriangleLabel<T>> {
    let sq = v.s1.checked_mul(&v.s1)?;
    if v.s2 == sq {
        return Some(TriangleLabel::positive(v.s1.clone()));
    }
    if v.s2 == -sq {
        return Some(TriangleLabel::negative(-v.s1.clone()));
    }
    None
}

/// Membership of a triple in the set of embedded labels `±(n², n, 1)`.
pub fn is_n20<T: Scalar>(v: &TriVec3<T>) -> Option<TriangleLabel<T>> {
    let sq = v.b.checked_mul(&v.b)?;
    if v.c == T::one() && v.a == sq {
        return Some(TriangleLabel::positive(v.b.clone()));
    }
    if v.c == -T::one() && v.a == -sq {
        return Some(TriangleLabel::negative(-v.b.clone()));
    }
    None
}

/// Product law on labels: `⟨n⟩·⟨m⟩ = ⟨nm⟩`.
pub fn mul_label<T: Scalar>(n: &T, m: &T) -> Result<TriangleLabel<T>, RingError> {
    Ok(TriangleLabel::positive(mul(n, m)?))
}

/// The correction triple `⟨2a+t⟩ − 3⟨a+t⟩ = (a² − 2at − 2t², −a − 2t, −2)`.
///
/// Not a label embedding (its count component is −2), but the building
/// block of the coarse decompositions in the `eq29`–`eq32` families. The
/// same triple equals `⟨−a+t⟩ − 3⟨t⟩`.
pub fn b_vec<T: Scalar>(a: &T, t: &T) -> Result<TriVec3<T>, RingError> {
    let two = T::two();
    let at = mul(a, t)?;
    let tt = mul(t, t)?;
    let comp_a = sub(&sub(&mul(a, a)?, &mul(&two, &at)?)?, &mul(&two, &tt)?)?;
    let comp_b = sub(&-a.clone(), &mul(&two, t)?)?;
    Ok(TriVec3::new(comp_a, comp_b, -two))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(x: Int, y: Int) -> RingElem2 {
        RingElem2::new(x, y)
    }

    #[test]
    fn addition_is_componentwise() {
        assert_eq!(e(2, 1).add2(&e(0, 0)).unwrap(), e(2, 1));
        // ⟨3⟩ + ⟨−3⟩ in basis coefficients
        assert_eq!(e(6, 3).add2(&e(3, 6)).unwrap(), e(9, 9));
        assert_eq!(e(1, 0).add2(&e(0, 1)).unwrap(), e(1, 1));
    }

    #[test]
    fn product_law_on_basis_symbols() {
        // ⟨1⟩·⟨−1⟩ = ⟨−1⟩ and ⟨−1⟩² = ⟨1⟩
        assert_eq!(e(1, 0).mul2(&e(0, 1)).unwrap(), e(0, 1));
        assert_eq!(e(0, 1).mul2(&e(0, 1)).unwrap(), e(1, 0));
        assert_eq!(e(3, 1).mul2(&e(1, 0)).unwrap(), e(3, 1));
    }

    #[test]
    fn ortho_round_trip() {
        assert_eq!(e(6, 3).to_ortho().unwrap(), OrthoPair::new(9, 3));
        assert_eq!(e(0, 0).to_ortho().unwrap(), OrthoPair::new(0, 0));
        assert_eq!(
            RingElem2::from_ortho(&OrthoPair::new(9, 3)).unwrap(),
            e(6, 3)
        );
    }

    #[test]
    fn from_ortho_rejects_odd_sums() {
        assert_eq!(
            RingElem2::<Int>::from_ortho(&OrthoPair::new(9, 4)),
            Err(RingError::Parity)
        );
    }

    #[test]
    fn from_ortho_on_rationals_always_halves() {
        use crate::Rational;
        let p = OrthoPair::new(Rational::new(9, 1), Rational::new(4, 1));
        let r = RingElem2::from_ortho(&p).unwrap();
        assert_eq!(r.x, Rational::new(13, 2));
        assert_eq!(r.y, Rational::new(5, 2));
    }

    #[test]
    fn embeddings_of_labels() {
        let l4 = TriangleLabel::positive(4);
        assert_eq!(l4.embed_ortho().unwrap(), OrthoPair::new(16, 4));
        let lm1 = TriangleLabel::positive(-1);
        assert_eq!(lm1.embed3().unwrap(), TriVec3::new(1, -1, 1));
        let neg0 = TriangleLabel::negative(0);
        assert_eq!(neg0.embed3().unwrap(), TriVec3::new(0, 0, -1));
    }

    #[test]
    fn embed2_matches_triangular_coefficients() {
        for n in -100..=100 {
            let l = TriangleLabel::positive(n);
            let b = l.embed2().unwrap();
            assert_eq!(b.x, n * (n + 1) / 2);
            assert_eq!(b.y, n * (n - 1) / 2);
            assert_eq!(b.to_ortho().unwrap(), OrthoPair::new(n * n, n));
            let m = TriangleLabel::negative(n).embed2().unwrap();
            assert_eq!((m.x, m.y), (-b.x, -b.y));
        }
    }

    #[test]
    fn membership_checks() {
        assert_eq!(
            is_n2(&OrthoPair::new(9, 3)),
            Some(TriangleLabel::positive(3))
        );
        assert_eq!(
            is_n2(&OrthoPair::new(-9, -3)),
            Some(TriangleLabel::negative(3))
        );
        assert_eq!(is_n2(&OrthoPair::new(8, 3)), None);
        assert_eq!(
            is_n2(&OrthoPair::new(0, 0)),
            Some(TriangleLabel::positive(0))
        );
        assert_eq!(
            is_n20(&TriVec3::new(9, -3, 1)),
            Some(TriangleLabel::positive(-3))
        );
        assert_eq!(
            is_n20(&TriVec3::new(0, 0, -1)),
            Some(TriangleLabel::negative(0))
        );
        assert_eq!(is_n20(&TriVec3::new(13, -1, -2)), None);
    }

    #[test]
    fn label_products() {
        assert_eq!(mul_label(&2, &3).unwrap(), TriangleLabel::positive(6));
        assert_eq!(mul_label(&-1, &-1).unwrap(), TriangleLabel::positive(1));
        assert_eq!(mul_label(&5, &0).unwrap(), TriangleLabel::positive(0));
    }

    #[test]
    fn mul_label_agrees_with_ring_product() {
        for n in -50..=50 {
            for m in -50..=50 {
                let lhs = mul_label(&n, &m).unwrap().embed2().unwrap();
                let rhs = TriangleLabel::positive(n)
                    .embed2()
                    .unwrap()
                    .mul2(&TriangleLabel::positive(m).embed2().unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn b_vec_known_values() {
        assert_eq!(b_vec(&3, &-1).unwrap(), TriVec3::new(13, -1, -2));
        assert_eq!(b_vec(&2, &1).unwrap(), TriVec3::new(-2, -4, -2));
        assert_eq!(b_vec(&1, &0).unwrap(), TriVec3::new(1, -1, -2));
    }

    #[test]
    fn b_vec_equals_both_label_differences() {
        let emb = |n: Int| TriangleLabel::positive(n).embed3().unwrap();
        for a in -50..=50 {
            for t in -50..=50 {
                let b = b_vec(&a, &t).unwrap();
                let first = emb(2 * a + t)
                    .sub3(&emb(a + t).scaled(&3).unwrap())
                    .unwrap();
                assert_eq!(b, first, "a={a} t={t}");
                let second = emb(-a + t).sub3(&emb(t).scaled(&3).unwrap()).unwrap();
                assert_eq!(b, second, "a={a} t={t}");
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = e(Int::MAX, 0);
        assert_eq!(big.add2(&e(1, 0)), Err(RingError::Overflow));
        assert_eq!(big.mul2(&e(2, 0)), Err(RingError::Overflow));
        assert_eq!(
            TriangleLabel::positive(Int::MAX).embed_ortho(),
            Err(RingError::Overflow)
        );
        assert_eq!(mul_label(&Int::MAX, &2), Err(RingError::Overflow));
    }
}
