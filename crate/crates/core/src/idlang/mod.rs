//! A small language for stating identities over `F`, `L`, `x`, `y` and `D`
//! (the square root of `x^2 + 4y`), with meta-variables `n`, `k`, binomial
//! coefficients and finite sums.
//!
//! ```text
//! F[n](L[k], (-1)^(k+1)*y^k) * F[k] = F[n*k]
//! x * sum(r=0..n-1, binom(2*n-1-r, r) * (x^2+4*y)^(n-1-r) * (-y)^r) = F[2*n]
//! ```
//!
//! `^` binds tighter than unary minus, so `-y^k` is `-(y^k)`. Omitted
//! sequence arguments default to `(x, y)`.

mod ast;
mod eval;
mod parser;

pub use ast::{Expr, Identity, IndexExpr};
pub use eval::{
    check, check_at, evaluate, evaluate_base, evaluate_index, grid, record, Binding, CellVerdict,
    CheckError, EvalError, EvalErrorKind, Ranges,
};
pub use parser::{parse, parse_expr, parse_index, ParseError, META_VARS};
