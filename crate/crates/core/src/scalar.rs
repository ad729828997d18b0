use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Num, Signed};

/// Exact scalar the core types are generic over.
///
/// `i64` (the crate default), `i128`, big integers and `Ratio<i64>` all
/// qualify. Checked ops let the ring layer report overflow instead of
/// wrapping; rationals and big integers simply never overflow.
pub trait Scalar:
    Num + Signed + CheckedAdd + CheckedSub + CheckedMul + Ord + Clone + Debug + Display
{
    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Scalar for T where
    T: Num + Signed + CheckedAdd + CheckedSub + CheckedMul + Ord + Clone + Debug + Display
{
}
