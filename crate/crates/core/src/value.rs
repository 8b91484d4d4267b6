//! Tagged ring value: a base polynomial or a δ-extension element.

use core::fmt;

use crate::ext::QuadExt;
use crate::poly::BivarPoly;
use crate::ring::{impl_ring_ops, Rat, Ring};

/// Either a polynomial or an extension element. Mixed operations promote
/// to the extension; equality goes through the embedding, so
/// `Base(p) == Ext(p + 0·δ)`.
#[derive(Clone)]
pub enum RingValue {
    Base(BivarPoly),
    Ext(QuadExt),
}

impl RingValue {
    pub fn x() -> Self {
        RingValue::Base(BivarPoly::x())
    }

    pub fn y() -> Self {
        RingValue::Base(BivarPoly::y())
    }

    pub fn delta() -> Self {
        RingValue::Ext(QuadExt::delta())
    }

    /// Rational part and δ part.
    pub fn parts(&self) -> (BivarPoly, BivarPoly) {
        match self {
            RingValue::Base(p) => (p.clone(), BivarPoly::zero()),
            RingValue::Ext(e) => (e.a.clone(), e.b.clone()),
        }
    }

    pub fn to_ext(&self) -> QuadExt {
        match self {
            RingValue::Base(p) => QuadExt::base(p.clone()),
            RingValue::Ext(e) => e.clone(),
        }
    }

    /// The polynomial, if the δ part is zero.
    pub fn as_base(&self) -> Option<BivarPoly> {
        match self {
            RingValue::Base(p) => Some(p.clone()),
            RingValue::Ext(e) if e.is_base() => Some(e.a.clone()),
            RingValue::Ext(_) => None,
        }
    }

    pub fn is_base(&self) -> bool {
        match self {
            RingValue::Base(_) => true,
            RingValue::Ext(e) => e.is_base(),
        }
    }

    /// Drops a zero δ part.
    pub fn normalized(self) -> Self {
        match self {
            RingValue::Ext(e) if e.is_base() => RingValue::Base(e.a),
            other => other,
        }
    }

    fn zip(
        &self,
        rhs: &Self,
        base: impl FnOnce(&BivarPoly, &BivarPoly) -> BivarPoly,
        ext: impl FnOnce(&QuadExt, &QuadExt) -> QuadExt,
    ) -> Self {
        match (self, rhs) {
            (RingValue::Base(a), RingValue::Base(b)) => RingValue::Base(base(a, b)),
            _ => RingValue::Ext(ext(&self.to_ext(), &rhs.to_ext())),
        }
    }
}

impl PartialEq for RingValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RingValue::Base(a), RingValue::Base(b)) => a == b,
            (RingValue::Ext(a), RingValue::Ext(b)) => a == b,
            (RingValue::Base(p), RingValue::Ext(e)) | (RingValue::Ext(e), RingValue::Base(p)) => {
                e.b.is_zero() && e.a == *p
            }
        }
    }
}

impl Eq for RingValue {}

impl Ring for RingValue {
    fn zero() -> Self {
        RingValue::Base(BivarPoly::zero())
    }

    fn one() -> Self {
        RingValue::Base(BivarPoly::one())
    }

    fn is_zero(&self) -> bool {
        match self {
            RingValue::Base(p) => p.is_zero(),
            RingValue::Ext(e) => e.is_zero(),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a + b, |a, b| a + b)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a - b, |a, b| a - b)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a * b, |a, b| a * b)
    }

    fn neg(&self) -> Self {
        match self {
            RingValue::Base(p) => RingValue::Base(-p),
            RingValue::Ext(e) => RingValue::Ext(-e),
        }
    }

    fn from_rat(c: &Rat) -> Self {
        RingValue::Base(BivarPoly::constant(c.clone()))
    }
}

impl_ring_ops!(RingValue);

impl From<BivarPoly> for RingValue {
    fn from(p: BivarPoly) -> Self {
        RingValue::Base(p)
    }
}

impl From<QuadExt> for RingValue {
    fn from(e: QuadExt) -> Self {
        RingValue::Ext(e)
    }
}

/// Values with zero δ part render as plain polynomials.
impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Base(p) => write!(f, "{p}"),
            RingValue::Ext(e) if e.is_base() => write!(f, "{}", e.a),
            RingValue::Ext(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Debug for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Base(p) => write!(f, "Base({p})"),
            RingValue::Ext(e) => write!(f, "Ext({e})"),
        }
    }
}
