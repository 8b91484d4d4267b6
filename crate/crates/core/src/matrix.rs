//! 2×2 matrices over a commutative ring, the companion matrix `A`, the
//! matrix `B = 2y·I + x·A`, their product `BA`, and the trace/determinant
//! closed form for the (1,2) entry of a matrix power.

use core::fmt;

use crate::poly::BivarPoly;
use crate::ring::Ring;
use crate::sequence::binomial;
use crate::value::RingValue;

/// `[[e11, e12], [e21, e22]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix2<R> {
    pub e11: R,
    pub e12: R,
    pub e21: R,
    pub e22: R,
}

/// Matrices over the tagged ring value.
pub type PolyMatrix2 = Matrix2<RingValue>;

impl<R: Ring> Matrix2<R> {
    pub fn new(e11: R, e12: R, e21: R, e22: R) -> Self {
        Matrix2 { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Matrix2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn zero() -> Self {
        Matrix2::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    /// Companion matrix `[[x, 1], [y, 0]]` of `t² = x·t + y`.
    pub fn companion(x: R, y: R) -> Self {
        Matrix2::new(x, R::one(), y, R::zero())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Matrix2 {
            e11: self.e11.mul(&rhs.e11).add(&self.e12.mul(&rhs.e21)),
            e12: self.e11.mul(&rhs.e12).add(&self.e12.mul(&rhs.e22)),
            e21: self.e21.mul(&rhs.e11).add(&self.e22.mul(&rhs.e21)),
            e22: self.e21.mul(&rhs.e12).add(&self.e22.mul(&rhs.e22)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Matrix2 {
            e11: self.e11.add(&rhs.e11),
            e12: self.e12.add(&rhs.e12),
            e21: self.e21.add(&rhs.e21),
            e22: self.e22.add(&rhs.e22),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| c.mul(e))
    }

    pub fn trace(&self) -> R {
        self.e11.add(&self.e22)
    }

    pub fn det(&self) -> R {
        self.e11.mul(&self.e22).sub(&self.e12.mul(&self.e21))
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Matrix2<S> {
        Matrix2 {
            e11: f(&self.e11),
            e12: f(&self.e12),
            e21: f(&self.e21),
            e22: f(&self.e22),
        }
    }

    /// `self^n` by binary squaring; `M^0 = I`.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `M^n`.
pub fn matrix_pow<R: Ring>(m: &Matrix2<R>, n: u32) -> Matrix2<R> {
    m.pow(n)
}

/// `A = [[x, 1], [y, 0]]`.
pub fn matrix_a() -> Matrix2<BivarPoly> {
    Matrix2::companion(BivarPoly::x(), BivarPoly::y())
}

/// `B = [[x² + 2y, x], [xy, 2y]]`.
pub fn matrix_b() -> Matrix2<BivarPoly> {
    Matrix2::new(
        BivarPoly::from_int_terms(&[(1, 2, 0), (2, 0, 1)]),
        BivarPoly::x(),
        BivarPoly::from_int_terms(&[(1, 1, 1)]),
        BivarPoly::from_int_terms(&[(2, 0, 1)]),
    )
}

/// `BA = [[x³ + 3xy, x² + 2y], [x²y + 2y², xy]]`.
pub fn matrix_ba() -> Matrix2<BivarPoly> {
    Matrix2::new(
        BivarPoly::from_int_terms(&[(1, 3, 0), (3, 1, 1)]),
        BivarPoly::from_int_terms(&[(1, 2, 0), (2, 0, 1)]),
        BivarPoly::from_int_terms(&[(1, 2, 1), (2, 0, 2)]),
        BivarPoly::from_int_terms(&[(1, 1, 1)]),
    )
}

/// `Σ_{k=0}^{⌊m/2⌋} C(m-k, k)·T^{m-2k}·(-D)^k`.
///
/// For a 2×2 matrix `M` with trace `T` and determinant `D`, the (1,2) entry
/// of `M^n` (`n >= 1`) is `M.e12 · mclaughlin_y(T, D, n - 1)`.
pub fn mclaughlin_y<R: Ring>(trace: &R, det: &R, m: u32) -> R {
    let neg_det = det.neg();
    let mut acc = R::zero();
    for k in 0..=m / 2 {
        let c = binomial(u64::from(m - k), i64::from(k));
        let term = R::from_bigint(&c)
            .mul(&trace.pow(m - 2 * k))
            .mul(&neg_det.pow(k));
        acc = acc.add(&term);
    }
    acc
}

impl<R: fmt::Display> fmt::Display for Matrix2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

impl<R: fmt::Display> fmt::Debug for Matrix2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix2{self}")
    }
}
