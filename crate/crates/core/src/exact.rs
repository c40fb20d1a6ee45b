//! Exact integer scalars for elimination routines.
//!
//! Elimination first runs on `i64` with checked arithmetic. Any overflow
//! aborts that attempt and the caller reruns the same algorithm on
//! [`BigInt`], so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt::Debug;

/// Marker for an arithmetic overflow in the fixed-width attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub type Checked<T> = Result<T, Overflow>;

pub trait Exact: Clone + PartialEq + Debug {
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// `|self| < |other|`.
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, o: &Self) -> Checked<Self>;
    fn sub(&self, o: &Self) -> Checked<Self>;
    fn mul(&self, o: &Self) -> Checked<Self>;
    fn neg(&self) -> Checked<Self>;
    /// Floor division, `o != 0`.
    fn div_floor(&self, o: &Self) -> Checked<Self>;
    fn abs(&self) -> Checked<Self> {
        if self.is_negative() {
            self.neg()
        } else {
            Ok(self.clone())
        }
    }
    fn to_u64(&self) -> Option<u64>;
    fn to_bigint(&self) -> BigInt;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add(&self, o: &Self) -> Checked<Self> {
        self.checked_add(*o).ok_or(Overflow)
    }
    fn sub(&self, o: &Self) -> Checked<Self> {
        self.checked_sub(*o).ok_or(Overflow)
    }
    fn mul(&self, o: &Self) -> Checked<Self> {
        self.checked_mul(*o).ok_or(Overflow)
    }
    fn neg(&self) -> Checked<Self> {
        self.checked_neg().ok_or(Overflow)
    }
    fn div_floor(&self, o: &Self) -> Checked<Self> {
        if *self == i64::MIN && *o == -1 {
            return Err(Overflow);
        }
        Ok(Integer::div_floor(self, o))
    }
    fn to_u64(&self) -> Option<u64> {
        u64::try_from(*self).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_unit(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u32)
    }
    fn add(&self, o: &Self) -> Checked<Self> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Checked<Self> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Checked<Self> {
        Ok(self * o)
    }
    fn neg(&self) -> Checked<Self> {
        Ok(-self)
    }
    fn div_floor(&self, o: &Self) -> Checked<Self> {
        Ok(Integer::div_floor(self, o))
    }
    fn to_u64(&self) -> Option<u64> {
        ToPrimitive::to_u64(self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}
