//! The commutative-ring abstraction shared by polynomials, the δ-extension,
//! rationals, and the tagged [`RingValue`](crate::value::RingValue).

use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient. Always stored in lowest terms with a positive
/// denominator; zero is `0/1`.
pub type Rat = BigRational;

/// A commutative ring with unit whose elements can be compared exactly.
///
/// Method names deliberately shadow `core::ops`; generic code calls these,
/// concrete code uses the operator impls.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Image of a rational constant under the canonical embedding.
    fn from_rat(c: &Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rat(&Rat::from_integer(n.clone()))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    /// `self^e` by binary squaring; `x^0 = 1` for every `x`, including zero.
    fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        if e == 0 {
            return acc;
        }
        let mut base = self.clone();
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                return acc;
            }
            base = base.square();
        }
    }

    /// `(-1)^e` without multiplying anything.
    fn sign_pow(e: u32) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            Self::one().neg()
        }
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(c: &Rat) -> Self {
        c.clone()
    }
}

/// Returns true if `c` is an integer (denominator one).
pub fn is_integral(c: &Rat) -> bool {
    c.denom().is_one()
}

/// Absolute value helper used by the text renderers.
pub(crate) fn abs_rat(c: &Rat) -> Rat {
    c.abs()
}

/// Implements `Add/Sub/Mul` (owned and by-reference) and `Neg` for a [`Ring`]
/// by delegating to the trait methods.
macro_rules! impl_ring_ops {
    ($t:ty) => {
        impl core::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $crate::ring::Ring::add(self, rhs)
            }
        }
        impl core::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::ring::Ring::add(&self, &rhs)
            }
        }
        impl core::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $crate::ring::Ring::sub(self, rhs)
            }
        }
        impl core::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::ring::Ring::sub(&self, &rhs)
            }
        }
        impl core::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $crate::ring::Ring::mul(self, rhs)
            }
        }
        impl core::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::ring::Ring::mul(&self, &rhs)
            }
        }
        impl core::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::neg(self)
            }
        }
        impl core::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::neg(&self)
            }
        }
    };
}
pub(crate) use impl_ring_ops;
