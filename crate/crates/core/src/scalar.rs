//! Exact integer scalars used for coroot, curve and divisor coefficients.
//!
//! Cartan entries are always small machine integers; everything derived from
//! them (coroot coordinates, curve-class coefficients, intersection numbers)
//! is carried in a [`Scalar`] so callers can pick the width they need, up to
//! arbitrary precision with [`num_bigint::BigInt`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};

/// Signed exact integer with checked arithmetic.
///
/// Blanket-implemented for every type satisfying the bounds, which covers
/// `i32`, `i64`, `i128` and `BigInt`.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Zero
    + One
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + From<i32>
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Zero
        + One
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<i32>
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `a * k` for a Cartan-sized factor `k`.
pub(crate) fn scale<T: Scalar>(a: &T, k: i32) -> Result<T> {
    mul(a, &T::from(k))
}

/// `acc + a * k`.
pub(crate) fn add_scaled<T: Scalar>(acc: &T, a: &T, k: i32) -> Result<T> {
    add(acc, &scale(a, k)?)
}

pub(crate) fn neg<T: Scalar>(a: &T) -> Result<T> {
    sub(&T::zero(), a)
}

/// Checked sum of an iterator of scalars.
pub(crate) fn sum<'a, T: Scalar>(items: impl IntoIterator<Item = &'a T>) -> Result<T> {
    items.into_iter().try_fold(T::zero(), |acc, x| add(&acc, x))
}
