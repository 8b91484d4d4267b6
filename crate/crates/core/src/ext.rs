//! The quadratic extension `Q[x, y][δ] / (δ² - (x² + 4y))`.
//!
//! `δ` is the formal square root of the discriminant, so the characteristic
//! roots are `α = (x + δ)/2` and `β = (x - δ)/2`. Elements are never
//! normalized to drop `δ`; equality is componentwise.

use core::fmt;

use num_bigint::BigInt;

use crate::poly::BivarPoly;
use crate::ring::{impl_ring_ops, Rat, Ring};

/// `a + b·δ` with `δ² = x² + 4y`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadExt {
    pub a: BivarPoly,
    pub b: BivarPoly,
}

impl QuadExt {
    pub fn new(a: BivarPoly, b: BivarPoly) -> Self {
        QuadExt { a, b }
    }

    /// The base-ring element `a` embedded with zero δ part.
    pub fn base(a: BivarPoly) -> Self {
        QuadExt {
            a,
            b: BivarPoly::zero(),
        }
    }

    pub fn delta() -> Self {
        QuadExt {
            a: BivarPoly::zero(),
            b: BivarPoly::one(),
        }
    }

    /// `α = (x + δ)/2`.
    pub fn alpha() -> Self {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        QuadExt {
            a: BivarPoly::x().scale(&half),
            b: BivarPoly::constant(half),
        }
    }

    /// `β = (x - δ)/2`.
    pub fn beta() -> Self {
        Self::alpha().conjugate()
    }

    /// `a - b·δ`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² - b²(x² + 4y)`, the product with the conjugate.
    pub fn norm(&self) -> BivarPoly {
        &self.a.square() - &(&self.b.square() * &BivarPoly::discriminant())
    }

    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    pub fn into_base(self) -> Option<BivarPoly> {
        if self.is_base() {
            Some(self.a)
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QuadExt {
            a: self.a.scale(c),
            b: self.b.scale(c),
        }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::default()
    }

    fn one() -> Self {
        QuadExt::base(BivarPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        // (a + bδ)(c + dδ) = (ac + bd·M) + (ad + bc)δ
        let bd = &self.b * &rhs.b;
        let a = if bd.is_zero() {
            &self.a * &rhs.a
        } else {
            &(&self.a * &rhs.a) + &(&bd * &BivarPoly::discriminant())
        };
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadExt { a, b }
    }

    fn neg(&self) -> Self {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
        }
    }

    fn from_rat(c: &Rat) -> Self {
        QuadExt::base(BivarPoly::constant(c.clone()))
    }
}

impl_ring_ops!(QuadExt);

impl From<BivarPoly> for QuadExt {
    fn from(a: BivarPoly) -> Self {
        QuadExt::base(a)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*D", self.a, self.b)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}
