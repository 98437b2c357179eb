use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer scalar.
///
/// Implemented for `i32`, `i64`, `i128` and `BigInt`. Fixed-width types are
/// convenient for small, known-bounded inputs and in tests; the topology
/// layer always instantiates with `BigInt`.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Converts an `i64` into any [`ExactInt`].
///
/// Panics if the value does not fit, which only happens for narrow
/// fixed-width instantiations.
pub fn int<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("value out of range for scalar type")
}
