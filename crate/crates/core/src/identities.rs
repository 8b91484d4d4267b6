//! Catalog of Fibonacci/Lucas polynomial identities, each checked by exact
//! equality of both sides on an `(n, k)` grid.
//!
//! Ratio identities are stated in cleared-denominator form so everything
//! stays inside the polynomial ring. Where possible the two sides go through
//! different code paths (closed-form sum vs. recurrence, matrix power vs.
//! entry formula) so a pass is an oracle comparison rather than a tautology.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ext::QuadExt;
use crate::matrix::{matrix_a, matrix_b, Matrix2};
use crate::poly::BivarPoly;
use crate::report::{CellRecord, CheckReport, Clock, Status};
use crate::ring::Ring;
use crate::sequence::{binomial, fib, luc};
use crate::value::RingValue;

/// Which indices a case is quantified over.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Arity {
    /// A single fixed statement.
    Nullary,
    N,
    NK,
}

/// One side of an identity.
#[derive(Clone, PartialEq)]
pub enum Value {
    Scalar(RingValue),
    Matrix(Matrix2<RingValue>),
    /// Several simultaneous equalities, compared position by position.
    Tuple(Vec<Value>),
}

impl From<BivarPoly> for Value {
    fn from(p: BivarPoly) -> Self {
        Value::Scalar(RingValue::Base(p))
    }
}

impl From<QuadExt> for Value {
    fn from(e: QuadExt) -> Self {
        Value::Scalar(RingValue::Ext(e))
    }
}

impl From<RingValue> for Value {
    fn from(v: RingValue) -> Self {
        Value::Scalar(v)
    }
}

impl From<Matrix2<BivarPoly>> for Value {
    fn from(m: Matrix2<BivarPoly>) -> Self {
        Value::Matrix(m.map(|e| RingValue::Base(e.clone())))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(v) => write!(f, "{v}"),
            Value::Matrix(m) => write!(f, "{m}"),
            Value::Tuple(items) => {
                f.write_str("[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Value({self})")
    }
}

/// Evaluator from `(n, k)` to one side. `k` is ignored by unary cases and
/// both are ignored by nullary ones.
pub type SideFn = Box<dyn Fn(u32, u32) -> Value + Send + Sync>;

pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    pub arity: Arity,
    pub n_min: u32,
    pub k_min: u32,
    pub lhs: SideFn,
    pub rhs: SideFn,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("description", &self.description)
            .field("arity", &self.arity)
            .field("n_min", &self.n_min)
            .field("k_min", &self.k_min)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("{id}: {index} = {value} is below the declared minimum {min}")]
    BelowMinimum {
        id: String,
        index: char,
        value: u32,
        min: u32,
    },
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("grid bound {name} must be at least 1 (got {value})")]
    BadBound { name: &'static str, value: u32 },
}

/// Verdict for one cell. Sides are rendered only on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellOutcome {
    pub passed: bool,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl IdentityCase {
    /// Index cells in `(n, k)` order for the grid `n <= n_max`, `k <= k_max`.
    pub fn cells(&self, n_max: u32, k_max: u32) -> Vec<(Option<u32>, Option<u32>)> {
        match self.arity {
            Arity::Nullary => vec![(None, None)],
            Arity::N => (self.n_min..=n_max).map(|n| (Some(n), None)).collect(),
            Arity::NK => (self.n_min..=n_max)
                .flat_map(|n| (self.k_min..=k_max).map(move |k| (Some(n), Some(k))))
                .collect(),
        }
    }

    /// Evaluates both sides at `(n, k)` and compares them exactly.
    pub fn check(&self, n: u32, k: u32) -> Result<CellOutcome, IdentityError> {
        if self.arity != Arity::Nullary && n < self.n_min {
            return Err(self.below('n', n, self.n_min));
        }
        if self.arity == Arity::NK && k < self.k_min {
            return Err(self.below('k', k, self.k_min));
        }
        let lhs = (self.lhs)(n, k);
        let rhs = (self.rhs)(n, k);
        Ok(if lhs == rhs {
            CellOutcome {
                passed: true,
                lhs: None,
                rhs: None,
            }
        } else {
            CellOutcome {
                passed: false,
                lhs: Some(lhs.to_string()),
                rhs: Some(rhs.to_string()),
            }
        })
    }

    /// [`check`](Self::check) wrapped into a timed report record.
    pub fn check_cell(
        &self,
        n: Option<u32>,
        k: Option<u32>,
        clock: &dyn Clock,
    ) -> Result<CellRecord, IdentityError> {
        let start = clock.now_ms();
        let outcome = self.check(n.unwrap_or(0), k.unwrap_or(0))?;
        let elapsed_ms = clock.now_ms() - start;
        Ok(CellRecord {
            id: self.id.to_string(),
            n,
            k,
            status: if outcome.passed {
                Status::Pass
            } else {
                Status::Fail
            },
            elapsed_ms,
            lhs: outcome.lhs,
            rhs: outcome.rhs,
            note: None,
        })
    }

    fn below(&self, index: char, value: u32, min: u32) -> IdentityError {
        IdentityError::BelowMinimum {
            id: self.id.to_string(),
            index,
            value,
            min,
        }
    }
}

/// Checks `case` at `(n, k)`.
pub fn check_case(case: &IdentityCase, n: u32, k: u32) -> Result<CellOutcome, IdentityError> {
    case.check(n, k)
}

/// Picks the cases named in `filter` (all of them when `None`), keeping
/// catalog order.
pub fn select<'a>(
    catalog: &'a [IdentityCase],
    filter: Option<&[&str]>,
) -> Result<Vec<&'a IdentityCase>, IdentityError> {
    match filter {
        None => Ok(catalog.iter().collect()),
        Some(ids) => {
            for id in ids {
                if !catalog.iter().any(|c| c.id == *id) {
                    return Err(IdentityError::UnknownId((*id).to_string()));
                }
            }
            Ok(catalog.iter().filter(|c| ids.contains(&c.id)).collect())
        }
    }
}

/// Checks the selected cases on every admissible cell of the grid.
pub fn run_cases(
    cases: &[&IdentityCase],
    n_max: u32,
    k_max: u32,
    clock: &dyn Clock,
) -> Result<CheckReport, IdentityError> {
    validate_bounds(n_max, k_max)?;
    let mut records = Vec::new();
    for case in cases {
        for (n, k) in case.cells(n_max, k_max) {
            records.push(case.check_cell(n, k, clock)?);
        }
    }
    Ok(CheckReport::from_records(records))
}

/// Runs the catalog (or the filtered part of it) on the grid
/// `n ∈ [n_min, n_max]`, `k ∈ [k_min, k_max]`.
pub fn run_catalog(
    n_max: u32,
    k_max: u32,
    filter: Option<&[&str]>,
    clock: &dyn Clock,
) -> Result<CheckReport, IdentityError> {
    validate_bounds(n_max, k_max)?;
    let catalog = build_catalog();
    let cases = select(&catalog, filter)?;
    run_cases(&cases, n_max, k_max, clock)
}

pub fn validate_bounds(n_max: u32, k_max: u32) -> Result<(), IdentityError> {
    if n_max < 1 {
        return Err(IdentityError::BadBound {
            name: "n_max",
            value: n_max,
        });
    }
    if k_max < 1 {
        return Err(IdentityError::BadBound {
            name: "k_max",
            value: k_max,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

fn x() -> BivarPoly {
    BivarPoly::x()
}

fn y() -> BivarPoly {
    BivarPoly::y()
}

fn int(c: i64) -> BivarPoly {
    BivarPoly::int(c)
}

fn f(n: u32) -> BivarPoly {
    fib(n, &x(), &y())
}

fn l(n: u32) -> BivarPoly {
    luc(n, &x(), &y())
}

/// `x² + 4y`
fn disc() -> BivarPoly {
    BivarPoly::discriminant()
}

/// `x² + 2y`
fn l2_closed() -> BivarPoly {
    BivarPoly::from_int_terms(&[(1, 2, 0), (2, 0, 1)])
}

/// `(-1)^e`
fn sign(e: u32) -> BivarPoly {
    BivarPoly::sign_pow(e)
}

/// `y^e`
fn y_pow(e: u32) -> BivarPoly {
    BivarPoly::monomial(crate::ring::Rat::from_integer(1.into()), 0, e)
}

/// `(-y)^e`
fn neg_y_pow(e: u32) -> BivarPoly {
    &sign(e) * &y_pow(e)
}

/// The composition argument `(-1)^{k+1} y^k`.
fn comp_y(k: u32) -> BivarPoly {
    &sign(k + 1) * &y_pow(k)
}

/// The extension-ring argument pair `(δ·F_k, (-1)^k y^k)`.
fn delta_args(k: u32) -> (RingValue, RingValue) {
    let xs = RingValue::Ext(QuadExt::new(BivarPoly::zero(), f(k)));
    let ys = RingValue::Base(&sign(k) * &y_pow(k));
    (xs, ys)
}

fn delta_times(p: BivarPoly) -> RingValue {
    RingValue::Ext(QuadExt::new(BivarPoly::zero(), p))
}

fn binom_poly(n: u32, k: u32) -> BivarPoly {
    BivarPoly::from_bigint(&binomial(u64::from(n), i64::from(k)))
}

/// `x·Σ_{k=0}^{n-1} C(2n-1-k, k)(x²+4y)^{n-k-1}(-y)^k`, `n >= 1`.
fn sum_even_fib(n: u32) -> BivarPoly {
    let mut acc = BivarPoly::zero();
    for k in 0..n {
        let t = &(&binom_poly(2 * n - 1 - k, k) * &disc().pow(n - k - 1)) * &neg_y_pow(k);
        acc = &acc + &t;
    }
    &x() * &acc
}

/// `(x²+2y)·Σ_{k=0}^{n-1} C(2n-1-k, k) x^{2n-1-2k} (x²+4y)^{n-1-k} y^{2k}`, `n >= 1`.
fn sum_fib_4n(n: u32) -> BivarPoly {
    let mut acc = BivarPoly::zero();
    for k in 0..n {
        let t = &(&(&binom_poly(2 * n - 1 - k, k) * &x().pow(2 * n - 1 - 2 * k))
            * &disc().pow(n - 1 - k))
            * &y_pow(2 * k);
        acc = &acc + &t;
    }
    &l2_closed() * &acc
}

/// `Σ_{k=0}^{n} C(n,k) (2y)^{n-k} x^k A^{k + shift}` accumulated with a
/// running power of `A`, independent of the squaring in `Matrix2::pow`.
fn binomial_matrix_sum(n: u32, shift: u32) -> Matrix2<BivarPoly> {
    let a = matrix_a();
    let mut a_pow = Matrix2::<BivarPoly>::identity();
    for _ in 0..shift {
        a_pow = a_pow.mul(&a);
    }
    let two_y = int(2) * y();
    let mut acc = Matrix2::<BivarPoly>::zero();
    for k in 0..=n {
        let coeff = &(&binom_poly(n, k) * &two_y.pow(n - k)) * &x().pow(k);
        acc = acc.add(&a_pow.scale(&coeff));
        a_pow = a_pow.mul(&a);
    }
    acc
}

fn case(
    id: &'static str,
    description: &'static str,
    arity: Arity,
    n_min: u32,
    k_min: u32,
    lhs: impl Fn(u32, u32) -> Value + Send + Sync + 'static,
    rhs: impl Fn(u32, u32) -> Value + Send + Sync + 'static,
) -> IdentityCase {
    IdentityCase {
        id,
        description,
        arity,
        n_min,
        k_min,
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

/// The 31 catalog cases `EQ01`..`EQ31`, in order.
pub fn build_catalog() -> Vec<IdentityCase> {
    use Arity::*;
    vec![
        case(
            "EQ01",
            "B^n = sum_k C(n,k) (2y)^(n-k) x^k A^k",
            N,
            0,
            0,
            |n, _| matrix_b().pow(n).into(),
            |n, _| binomial_matrix_sum(n, 0).into(),
        ),
        case(
            "EQ02",
            "A^n = [[F(n+1), F(n)], [y F(n), y F(n-1)]]",
            N,
            1,
            0,
            |n, _| matrix_a().pow(n).into(),
            |n, _| Matrix2::new(f(n + 1), f(n), &y() * &f(n), &y() * &f(n - 1)).into(),
        ),
        case(
            "EQ03",
            "(B^n)_12 = x sum_k C(n-1-k,k) (x^2+4y)^(n-1-k) (-y)^k",
            N,
            1,
            0,
            |n, _| matrix_b().pow(n).e12.into(),
            |n, _| {
                let mut acc = BivarPoly::zero();
                for k in 0..=(n - 1) / 2 {
                    let t = &(&binom_poly(n - 1 - k, k) * &disc().pow(n - 1 - k)) * &neg_y_pow(k);
                    acc = &acc + &t;
                }
                (&x() * &acc).into()
            },
        ),
        case(
            "EQ04",
            "x sum_{k<n} C(2n-1-k,k) (x^2+4y)^(n-k-1) (-y)^k = F(2n)",
            N,
            1,
            0,
            |n, _| sum_even_fib(n).into(),
            |n, _| f(2 * n).into(),
        ),
        case(
            "EQ05",
            "tr(BA) = x(x^2+4y), det(BA) = -y^2 (x^2+4y)",
            Nullary,
            0,
            0,
            |_, _| {
                let ba = matrix_b().mul(&matrix_a());
                Value::Tuple(vec![ba.trace().into(), ba.det().into()])
            },
            |_, _| {
                Value::Tuple(vec![
                    (&x() * &disc()).into(),
                    (&(-y_pow(2)) * &disc()).into(),
                ])
            },
        ),
        case(
            "EQ06",
            "((BA)^n)_12 = (x^2+2y) sum_k C(n-1-k,k) x^(n-1-2k) (x^2+4y)^(n-1-k) y^(2k)",
            N,
            1,
            0,
            |n, _| matrix_b().mul(&matrix_a()).pow(n).e12.into(),
            |n, _| {
                let mut acc = BivarPoly::zero();
                for k in 0..=(n - 1) / 2 {
                    let t = &(&(&binom_poly(n - 1 - k, k) * &x().pow(n - 1 - 2 * k))
                        * &disc().pow(n - 1 - k))
                        * &y_pow(2 * k);
                    acc = &acc + &t;
                }
                (&l2_closed() * &acc).into()
            },
        ),
        case(
            "EQ07",
            "(BA)^n = sum_k C(n,k) (2y)^(n-k) x^k A^(n+k)",
            N,
            0,
            0,
            |n, _| matrix_b().mul(&matrix_a()).pow(n).into(),
            |n, _| binomial_matrix_sum(n, n).into(),
        ),
        case(
            "EQ08",
            "(x^2+2y) sum_{k<n} C(2n-1-k,k) x^(2n-1-2k) (x^2+4y)^(n-1-k) y^(2k) = F(4n)",
            N,
            1,
            0,
            |n, _| sum_fib_4n(n).into(),
            |n, _| f(4 * n).into(),
        ),
        case(
            "EQ09",
            "EQ08 sum at n = EQ04 sum at 2n",
            N,
            1,
            0,
            |n, _| sum_fib_4n(n).into(),
            |n, _| sum_even_fib(2 * n).into(),
        ),
        case(
            "EQ10",
            "(x+D)^n = 2^(n-1) (L(n) + D F(n)), (x-D)^n = 2^(n-1) (L(n) - D F(n))",
            N,
            1,
            0,
            |n, _| {
                let xe = QuadExt::base(x());
                let d = QuadExt::delta();
                Value::Tuple(vec![(&xe + &d).pow(n).into(), (&xe - &d).pow(n).into()])
            },
            |n, _| {
                let scale = int(2).pow(n - 1);
                let lp = &scale * &l(n);
                let fp = &scale * &f(n);
                Value::Tuple(vec![
                    QuadExt::new(lp.clone(), fp.clone()).into(),
                    QuadExt::new(lp, -fp).into(),
                ])
            },
        ),
        case(
            "EQ11",
            "L(n)^2 + (-1)^(n+1) 4 y^n = (x^2+4y) F(n)^2",
            N,
            0,
            0,
            |n, _| (&l(n).square() + &(&(&sign(n + 1) * &int(4)) * &y_pow(n))).into(),
            |n, _| (&disc() * &f(n).square()).into(),
        ),
        case(
            "EQ12",
            "F(n)(L(k), (-1)^(k+1) y^k) F(k) = F(nk)",
            NK,
            0,
            1,
            |n, k| (&fib(n, &l(k), &comp_y(k)) * &f(k)).into(),
            |n, k| f(n * k).into(),
        ),
        case(
            "EQ13",
            "L(n)(L(k), (-1)^(k+1) y^k) = L(nk)",
            NK,
            0,
            1,
            |n, k| luc(n, &l(k), &comp_y(k)).into(),
            |n, k| l(n * k).into(),
        ),
        case(
            "EQ14",
            "F(2n) = x F(n)(x^2+2y, -y^2); F(3n) = (x^2+y) F(n)(x^3+3xy, y^3); \
             F(4n) = x(x^2+2y) F(n)(x^4+4x^2y+2y^2, -y^4)",
            N,
            0,
            0,
            |n, _| Value::Tuple(vec![f(2 * n).into(), f(3 * n).into(), f(4 * n).into()]),
            |n, _| {
                let p = BivarPoly::from_int_terms;
                let two = &x() * &fib(n, &l2_closed(), &p(&[(-1, 0, 2)]));
                let three = &p(&[(1, 2, 0), (1, 0, 1)])
                    * &fib(n, &p(&[(1, 3, 0), (3, 1, 1)]), &p(&[(1, 0, 3)]));
                let four = &(&x() * &l2_closed())
                    * &fib(n, &p(&[(1, 4, 0), (4, 2, 1), (2, 0, 2)]), &p(&[(-1, 0, 4)]));
                Value::Tuple(vec![two.into(), three.into(), four.into()])
            },
        ),
        case(
            "EQ15",
            "L(n) L(n+2) - L(n+1)^2 = (-1)^n y^n (x^2+4y)",
            N,
            0,
            0,
            |n, _| (&(&l(n) * &l(n + 2)) - &l(n + 1).square()).into(),
            |n, _| (&(&sign(n) * &y_pow(n)) * &disc()).into(),
        ),
        case(
            "EQ16",
            "L(kn) L(k(n+2)) - L(k(n+1))^2 = (-y)^(nk) (x^2+4y) F(k)^2",
            NK,
            0,
            1,
            |n, k| (&(&l(k * n) * &l(k * (n + 2))) - &l(k * (n + 1)).square()).into(),
            |n, k| (&(&neg_y_pow(n * k) * &disc()) * &f(k).square()).into(),
        ),
        case(
            "EQ17",
            "L(n)^2 + 2 (-1)^(n+1) y^n = L(2n)",
            N,
            0,
            0,
            |n, _| (&l(n).square() + &(&(&int(2) * &sign(n + 1)) * &y_pow(n))).into(),
            |n, _| l(2 * n).into(),
        ),
        case(
            "EQ18",
            "F(2n)(L(k), (-1)^(k+1) y^k) = L(k) F(n)(L(2k), -y^(2k))",
            NK,
            0,
            1,
            |n, k| fib(2 * n, &l(k), &comp_y(k)).into(),
            |n, k| (&l(k) * &fib(n, &l(2 * k), &-y_pow(2 * k))).into(),
        ),
        case(
            "EQ19",
            "F(2k) sum_{r<n} C(2n-1-r,r) (x^2+4y)^(n-1-r) F(k)^(2(n-1-r)) (-y)^(rk) = F(2kn)",
            NK,
            1,
            1,
            |n, k| {
                let fk2 = f(k).square();
                let mut acc = BivarPoly::zero();
                for r in 0..n {
                    let t = &(&(&binom_poly(2 * n - 1 - r, r) * &disc().pow(n - 1 - r))
                        * &fk2.pow(n - 1 - r))
                        * &neg_y_pow(r * k);
                    acc = &acc + &t;
                }
                (&f(2 * k) * &acc).into()
            },
            |n, k| f(2 * k * n).into(),
        ),
        case(
            "EQ20",
            "y F(n-1) + F(n+1) = L(n)",
            N,
            1,
            0,
            |n, _| (&(&y() * &f(n - 1)) + &f(n + 1)).into(),
            |n, _| l(n).into(),
        ),
        case(
            "EQ21",
            "(-1)^(k+1) y^k F(k(n-1)) + F(k(n+1)) = F(k) L(nk)",
            NK,
            1,
            1,
            |n, k| (&(&comp_y(k) * &f(k * (n - 1))) + &f(k * (n + 1))).into(),
            |n, k| (&f(k) * &l(n * k)).into(),
        ),
        case(
            "EQ22",
            "L(n+2)^2 + y L(n+1)^2 = (x^2+2y) L(2n+2) + xy L(2n+1)",
            N,
            0,
            0,
            |n, _| (&l(n + 2).square() + &(&y() * &l(n + 1).square())).into(),
            |n, _| {
                (&(&l2_closed() * &l(2 * n + 2)) + &(&(&x() * &y()) * &l(2 * n + 1))).into()
            },
        ),
        case(
            "EQ23",
            "L(k(n+2))^2 + (-1)^(k+1) y^k L(k(n+1))^2 = L(2k) L(k(2n+2)) + (-1)^(k+1) y^k L(k) L(k(2n+1))",
            NK,
            0,
            1,
            |n, k| (&l(k * (n + 2)).square() + &(&comp_y(k) * &l(k * (n + 1)).square())).into(),
            |n, k| {
                (&(&l(2 * k) * &l(k * (2 * n + 2)))
                    + &(&(&comp_y(k) * &l(k)) * &l(k * (2 * n + 1))))
                    .into()
            },
        ),
        case(
            "EQ24",
            "F(2n+1)(D F(k), (-1)^k y^k) L(k) = L(k(2n+1))",
            NK,
            0,
            1,
            |n, k| {
                let (xs, ys) = delta_args(k);
                (&fib(2 * n + 1, &xs, &ys) * &RingValue::Base(l(k))).into()
            },
            |n, k| l(k * (2 * n + 1)).into(),
        ),
        case(
            "EQ25",
            "F(2n)(D F(k), (-1)^k y^k) L(k) = D F(2kn)",
            NK,
            0,
            1,
            |n, k| {
                let (xs, ys) = delta_args(k);
                (&fib(2 * n, &xs, &ys) * &RingValue::Base(l(k))).into()
            },
            |n, k| delta_times(f(2 * k * n)).into(),
        ),
        case(
            "EQ26",
            "L(2n+1)(D F(k), (-1)^k y^k) = D F(k(2n+1))",
            NK,
            0,
            1,
            |n, k| {
                let (xs, ys) = delta_args(k);
                luc(2 * n + 1, &xs, &ys).into()
            },
            |n, k| delta_times(f(k * (2 * n + 1))).into(),
        ),
        case(
            "EQ27",
            "L(2n)(D F(k), (-1)^k y^k) = L(2kn)",
            NK,
            0,
            1,
            |n, k| {
                let (xs, ys) = delta_args(k);
                luc(2 * n, &xs, &ys).into()
            },
            |n, k| l(2 * k * n).into(),
        ),
        case(
            "EQ28",
            "(-1)^k y^k L(k(2n-1)) + L(k(2n+1)) = L(2kn) L(k)",
            NK,
            1,
            1,
            |n, k| {
                (&(&(&sign(k) * &y_pow(k)) * &l(k * (2 * n - 1))) + &l(k * (2 * n + 1))).into()
            },
            |n, k| (&l(2 * k * n) * &l(k)).into(),
        ),
        case(
            "EQ29",
            "(-1)^k y^k F(2kn) + F(k(2n+2)) = F(k(2n+1)) L(k)",
            NK,
            0,
            1,
            |n, k| (&(&(&sign(k) * &y_pow(k)) * &f(2 * k * n)) + &f(k * (2 * n + 2))).into(),
            |n, k| (&f(k * (2 * n + 1)) * &l(k)).into(),
        ),
        case(
            "EQ30",
            "L(2kn) L(k(2n+2)) - (x^2+4y) F(k(2n+1))^2 = y^(2nk) L(k)^2",
            NK,
            0,
            1,
            |n, k| {
                (&(&l(2 * k * n) * &l(k * (2 * n + 2))) - &(&disc() * &f(k * (2 * n + 1)).square()))
                    .into()
            },
            |n, k| (&y_pow(2 * n * k) * &l(k).square()).into(),
        ),
        case(
            "EQ31",
            "(x^2+4y) F(k(2n-1)) F(k(2n+1)) - L(2kn)^2 = -(-y)^(k(2n-1)) L(k)^2",
            NK,
            1,
            1,
            |n, k| {
                (&(&disc() * &(&f(k * (2 * n - 1)) * &f(k * (2 * n + 1)))) - &l(2 * k * n).square())
                    .into()
            },
            |n, k| (&(-neg_y_pow(k * (2 * n - 1))) * &l(k).square()).into(),
        ),
    ]
}

/// Looks up one case by id.
pub fn find_case(id: &str) -> Option<IdentityCase> {
    build_catalog().into_iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::NoClock;

    #[test]
    fn catalog_has_31_cases_in_order() {
        let cat = build_catalog();
        assert_eq!(cat.len(), 31);
        for (i, c) in cat.iter().enumerate() {
            assert_eq!(c.id, alloc::format!("EQ{:02}", i + 1));
        }
    }

    #[test]
    fn eq04_at_one() {
        let c = find_case("EQ04").unwrap();
        assert!(check_case(&c, 1, 0).unwrap().passed);
        assert_eq!(sum_even_fib(1), x());
    }

    #[test]
    fn eq11_at_one() {
        let c = find_case("EQ11").unwrap();
        assert!(check_case(&c, 1, 0).unwrap().passed);
    }

    #[test]
    fn eq12_at_3_2() {
        let c = find_case("EQ12").unwrap();
        assert!(check_case(&c, 3, 2).unwrap().passed);
        // ((x²+2y)² - y²)·x = x⁵ + 4x³y + 3xy²
        let lhs = &fib(3, &l(2), &comp_y(2)) * &x();
        assert_eq!(lhs, BivarPoly::from_int_terms(&[(1, 5, 0), (4, 3, 1), (3, 1, 2)]));
    }

    #[test]
    fn below_minimum_is_domain_error() {
        let c = find_case("EQ20").unwrap();
        assert!(matches!(
            check_case(&c, 0, 0),
            Err(IdentityError::BelowMinimum { index: 'n', .. })
        ));
        let c = find_case("EQ12").unwrap();
        assert!(matches!(
            check_case(&c, 2, 0),
            Err(IdentityError::BelowMinimum { index: 'k', .. })
        ));
    }

    #[test]
    fn unknown_filter_id() {
        assert_eq!(
            run_catalog(2, 2, Some(&["EQ99"]), &NoClock).unwrap_err(),
            IdentityError::UnknownId("EQ99".into())
        );
        assert!(matches!(
            run_catalog(0, 2, None, &NoClock),
            Err(IdentityError::BadBound { name: "n_max", .. })
        ));
    }

    #[test]
    fn eq15_single_cell() {
        let r = run_catalog(1, 1, Some(&["EQ15"]), &NoClock).unwrap();
        assert_eq!(r.records.len(), 2);
        assert!(r.all_passed());
    }

    #[test]
    fn cells_respect_minima() {
        let c = find_case("EQ31").unwrap();
        let cells = c.cells(3, 2);
        assert_eq!(cells.first(), Some(&(Some(1), Some(1))));
        assert_eq!(cells.len(), 6);
        let c = find_case("EQ05").unwrap();
        assert_eq!(c.cells(10, 6), vec![(None, None)]);
    }

    #[test]
    fn failure_renders_both_sides() {
        let mut c = find_case("EQ11").unwrap();
        c.lhs = Box::new(|n, _| (&l(n).square() + &(&(&sign(n) * &int(4)) * &y_pow(n))).into());
        let out = check_case(&c, 1, 0).unwrap();
        assert!(!out.passed);
        assert_eq!(out.lhs.as_deref(), Some("x^2 - 4*y"));
        assert_eq!(out.rhs.as_deref(), Some("x^2 + 4*y"));
    }
}
