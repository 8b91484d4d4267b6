//! Fibonacci and Lucas generators over any [`Ring`], binomial coefficients,
//! and the closed forms for powers of the characteristic roots.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ext::QuadExt;
use crate::ring::{Rat, Ring};

/// Which second-order sequence to generate. Both satisfy
/// `u_n = x·u_{n-1} + y·u_{n-2}`; they differ only in the seeds.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqKind {
    /// Seeds `(0, 1)`.
    Fib,
    /// Seeds `(2, x)`.
    Luc,
}

impl SeqKind {
    pub fn letter(self) -> char {
        match self {
            SeqKind::Fib => 'F',
            SeqKind::Luc => 'L',
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for SeqKind {
    type Err = UnknownSeqKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F" | "f" | "fib" | "Fib" => Ok(SeqKind::Fib),
            "L" | "l" | "luc" | "Luc" | "lucas" => Ok(SeqKind::Luc),
            _ => Err(UnknownSeqKind),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("sequence kind must be F or L")]
pub struct UnknownSeqKind;

/// The `n`-th term of the recurrence `u_n = x·u_{n-1} + y·u_{n-2}` with the
/// seeds of `kind`, evaluated at arbitrary ring arguments.
pub fn seq<R: Ring>(kind: SeqKind, n: u32, x: &R, y: &R) -> R {
    let (mut prev, mut cur) = match kind {
        SeqKind::Fib => (R::zero(), R::one()),
        SeqKind::Luc => (R::from_int(2), x.clone()),
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x.mul(&cur).add(&y.mul(&prev));
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_n(x, y)` at the given arguments.
pub fn fib<R: Ring>(n: u32, x: &R, y: &R) -> R {
    seq(SeqKind::Fib, n, x, y)
}

/// `L_n(x, y)` at the given arguments.
pub fn luc<R: Ring>(n: u32, x: &R, y: &R) -> R {
    seq(SeqKind::Luc, n, x, y)
}

/// All terms `u_0 ..= u_{count-1}`, sharing one pass of the recurrence.
pub fn seq_prefix<R: Ring>(kind: SeqKind, count: usize, x: &R, y: &R) -> alloc::vec::Vec<R> {
    let mut out = alloc::vec::Vec::with_capacity(count);
    let (mut prev, mut cur) = match kind {
        SeqKind::Fib => (R::zero(), R::one()),
        SeqKind::Luc => (R::from_int(2), x.clone()),
    };
    for _ in 0..count {
        out.push(prev.clone());
        let next = x.mul(&cur).add(&y.mul(&prev));
        prev = core::mem::replace(&mut cur, next);
    }
    out
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = core::cmp::min(k as u64, n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `α^n = (L_n + δ·F_n)/2`.
pub fn alpha_power(n: u32) -> QuadExt {
    root_power(n, false)
}

/// `β^n = (L_n - δ·F_n)/2`.
pub fn beta_power(n: u32) -> QuadExt {
    root_power(n, true)
}

fn root_power(n: u32, conjugate: bool) -> QuadExt {
    let (x, y) = (crate::poly::BivarPoly::x(), crate::poly::BivarPoly::y());
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let l = luc(n, &x, &y).scale(&half);
    let f = fib(n, &x, &y).scale(&half);
    QuadExt::new(l, if conjugate { -f } else { f })
}
