//! Sparse bivariate polynomials in `x`, `y` with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::ring::{abs_rat, impl_ring_ops, Rat, Ring};

/// Exponent pair of a monomial `x^x * y^y`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn total_degree(self) -> u64 {
        u64::from(self.x) + u64::from(self.y)
    }

    /// Product of monomials.
    ///
    /// # Panics
    /// If an exponent overflows `u32`.
    pub fn times(self, other: Monomial) -> Monomial {
        Monomial {
            x: self.x.checked_add(other.x).expect("x exponent overflow"),
            y: self.y.checked_add(other.y).expect("y exponent overflow"),
        }
    }
}

/// A polynomial in `Q[x, y]` stored as a map from monomial to nonzero
/// coefficient. Structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl BivarPoly {
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn monomial(c: Rat, x: u32, y: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, y), c);
        }
        BivarPoly { terms }
    }

    /// Builds a polynomial from `(coefficient, x-exponent, y-exponent)` triples,
    /// merging repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rat, u32, u32)>,
    {
        let mut p = BivarPoly::default();
        for (c, i, j) in terms {
            p.add_term(Monomial::new(i, j), &c);
        }
        p
    }

    /// Integer-coefficient shorthand for [`from_terms`](Self::from_terms).
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(c, i, j)| (Rat::from_integer(BigInt::from(c)), i, j)),
        )
    }

    /// The discriminant `x^2 + 4y`.
    pub fn discriminant() -> Self {
        Self::from_int_terms(&[(1, 2, 0), (4, 0, 1)])
    }

    fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(x, y)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rat)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, x: u32, y: u32) -> Rat {
        self.terms
            .get(&Monomial::new(x, y))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(crate::ring::is_integral)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|m| m.x).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|m| m.y).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return BivarPoly::default();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Image of `self` under the ring homomorphism `x -> xs`, `y -> ys`.
    pub fn substitute<R: Ring>(&self, xs: &R, ys: &R) -> R {
        if self.terms.is_empty() {
            return R::zero();
        }
        let xp = powers(xs, self.degree_x());
        let yp = powers(ys, self.degree_y());
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let t = xp[m.x as usize].mul(&yp[m.y as usize]);
            acc = acc.add(&R::from_rat(c).mul(&t));
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x0: &Rat, y0: &Rat) -> Rat {
        self.substitute(x0, y0)
    }

    /// Terms in canonical display order: total degree descending, then
    /// x-exponent descending.
    pub fn display_order(&self) -> Vec<(Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| {
            b.total_degree()
                .cmp(&a.total_degree())
                .then(b.x.cmp(&a.x))
        });
        v
    }

    /// Deterministic rendering, e.g. `x^3 + 2*x*y` or `x - y^2`.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        write!(s, "{self}").expect("writing to a String cannot fail");
        s
    }
}

impl BivarPoly {
    /// Product of two integer-coefficient polynomials, accumulated in
    /// `BigInt` so no gcd reduction happens per term.
    fn mul_integral(&self, rhs: &Self) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca.numer() * cb.numer();
                match acc.entry(ma.times(*mb)) {
                    alloc::collections::btree_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        BivarPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .map(|(m, c)| (m, Rat::from_integer(c)))
                .collect(),
        }
    }
}

fn powers<R: Ring>(base: &R, max: u32) -> Vec<R> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(R::one());
    for i in 1..=max as usize {
        let next = out[i - 1].mul(base);
        out.push(next);
    }
    out
}

impl Ring for BivarPoly {
    fn zero() -> Self {
        BivarPoly::default()
    }

    fn one() -> Self {
        BivarPoly::int(1)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c);
        }
        big
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_integral() && rhs.is_integral() {
            return self.mul_integral(rhs);
        }
        let mut out = BivarPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), &(ca * cb));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    fn from_rat(c: &Rat) -> Self {
        BivarPoly::constant(c.clone())
    }
}

impl_ring_ops!(BivarPoly);

impl From<Rat> for BivarPoly {
    fn from(c: Rat) -> Self {
        BivarPoly::constant(c)
    }
}

impl From<i64> for BivarPoly {
    fn from(n: i64) -> Self {
        BivarPoly::int(n)
    }
}

/// Writes a coefficient magnitude as an integer or `p/q`.
pub(crate) fn write_rat(f: &mut impl Write, c: &Rat) -> fmt::Result {
    if num_traits::One::is_one(c.denom()) {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.x), ("y", m.y)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = abs_rat(c);
            if m == Monomial::ONE {
                write_rat(f, &mag)?;
            } else {
                if mag != Rat::one() {
                    write_rat(f, &mag)?;
                    f.write_str("*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}
