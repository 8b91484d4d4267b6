//! Syntax tree of the identity language and its canonical rendering.
//!
//! Rendering inserts only the parentheses the grammar needs, so
//! `parse(render(ast)) == ast` for every tree the parser can produce.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

use crate::sequence::SeqKind;

/// Integer-valued expression used for subscripts, exponents, binomial
/// arguments and sum bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IndexExpr {
    Int(i64),
    Var(String),
    Neg(Box<IndexExpr>),
    Add(Box<IndexExpr>, Box<IndexExpr>),
    Sub(Box<IndexExpr>, Box<IndexExpr>),
    Mul(Box<IndexExpr>, Box<IndexExpr>),
}

/// Ring-valued expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    X,
    Y,
    /// `D`, the square root of `x^2 + 4y`.
    Delta,
    /// A meta-variable or sum variable used as an integer constant.
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, IndexExpr),
    Binom(IndexExpr, IndexExpr),
    Sum {
        var: String,
        low: IndexExpr,
        high: IndexExpr,
        body: Box<Expr>,
    },
    Seq {
        kind: SeqKind,
        index: IndexExpr,
        args: Option<Box<(Expr, Expr)>>,
    },
}

/// `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl IndexExpr {
    fn collect_vars(&self, bound: &mut alloc::vec::Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            IndexExpr::Int(_) => {}
            IndexExpr::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            IndexExpr::Neg(a) => a.collect_vars(bound, out),
            IndexExpr::Add(a, b) | IndexExpr::Sub(a, b) | IndexExpr::Mul(a, b) => {
                a.collect_vars(bound, out);
                b.collect_vars(bound, out);
            }
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, IndexExpr::Int(_) | IndexExpr::Var(_))
    }
}

impl Expr {
    /// Meta-variables not bound by an enclosing `sum`.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut alloc::vec::Vec::new(), &mut out);
        out
    }

    fn collect_vars(&self, bound: &mut alloc::vec::Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Expr::Int(_) | Expr::X | Expr::Y | Expr::Delta => {}
            Expr::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            Expr::Neg(a) => a.collect_vars(bound, out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_vars(bound, out);
                b.collect_vars(bound, out);
            }
            Expr::Pow(b, e) => {
                b.collect_vars(bound, out);
                e.collect_vars(bound, out);
            }
            Expr::Binom(a, b) => {
                a.collect_vars(bound, out);
                b.collect_vars(bound, out);
            }
            Expr::Sum {
                var,
                low,
                high,
                body,
            } => {
                low.collect_vars(bound, out);
                high.collect_vars(bound, out);
                bound.push(var.clone());
                body.collect_vars(bound, out);
                bound.pop();
            }
            Expr::Seq { index, args, .. } => {
                index.collect_vars(bound, out);
                if let Some(args) = args {
                    args.0.collect_vars(bound, out);
                    args.1.collect_vars(bound, out);
                }
            }
        }
    }
}

impl Identity {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut v = self.lhs.free_vars();
        v.extend(self.rhs.free_vars());
        v
    }
}

// Precedence levels shared by both expression kinds:
// 0 = sum/difference, 1 = product, 2 = unary minus, 3 = factor.

fn ix_prec(e: &IndexExpr) -> u8 {
    match e {
        IndexExpr::Add(..) | IndexExpr::Sub(..) => 0,
        IndexExpr::Mul(..) => 1,
        IndexExpr::Neg(..) => 2,
        IndexExpr::Int(_) | IndexExpr::Var(_) => 3,
    }
}

fn write_ix(f: &mut fmt::Formatter<'_>, e: &IndexExpr, min_prec: u8) -> fmt::Result {
    if ix_prec(e) < min_prec {
        f.write_str("(")?;
        write_ix(f, e, 0)?;
        return f.write_str(")");
    }
    match e {
        IndexExpr::Int(v) => write!(f, "{v}"),
        IndexExpr::Var(v) => f.write_str(v),
        IndexExpr::Neg(a) => {
            f.write_str("-")?;
            write_ix(f, a, 3)
        }
        IndexExpr::Add(a, b) => {
            write_ix(f, a, 0)?;
            f.write_str("+")?;
            write_ix(f, b, 1)
        }
        IndexExpr::Sub(a, b) => {
            write_ix(f, a, 0)?;
            f.write_str("-")?;
            write_ix(f, b, 1)
        }
        IndexExpr::Mul(a, b) => {
            write_ix(f, a, 1)?;
            f.write_str("*")?;
            write_ix(f, b, 2)
        }
    }
}

impl fmt::Display for IndexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ix(f, self, 0)
    }
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Neg(..) => 2,
        // A power is a factor, but it cannot itself be a power base.
        Expr::Pow(..) => 3,
        _ => 4,
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
    if prec(e) < min_prec {
        f.write_str("(")?;
        write_expr(f, e, 0)?;
        return f.write_str(")");
    }
    match e {
        Expr::Int(v) => write!(f, "{v}"),
        Expr::X => f.write_str("x"),
        Expr::Y => f.write_str("y"),
        Expr::Delta => f.write_str("D"),
        Expr::Var(v) => f.write_str(v),
        Expr::Neg(a) => {
            f.write_str("-")?;
            write_expr(f, a, 3)
        }
        Expr::Add(a, b) => {
            write_expr(f, a, 0)?;
            f.write_str(" + ")?;
            write_expr(f, b, 1)
        }
        Expr::Sub(a, b) => {
            write_expr(f, a, 0)?;
            f.write_str(" - ")?;
            write_expr(f, b, 1)
        }
        Expr::Mul(a, b) => {
            write_expr(f, a, 1)?;
            f.write_str("*")?;
            write_expr(f, b, 2)
        }
        Expr::Pow(b, exp) => {
            write_expr(f, b, 4)?;
            f.write_str("^")?;
            if exp.is_atom() && !matches!(exp, IndexExpr::Int(v) if *v < 0) {
                write_ix(f, exp, 3)
            } else {
                f.write_str("(")?;
                write_ix(f, exp, 0)?;
                f.write_str(")")
            }
        }
        Expr::Binom(a, b) => write!(f, "binom({a}, {b})"),
        Expr::Sum {
            var,
            low,
            high,
            body,
        } => {
            write!(f, "sum({var}={low}..{high}, ")?;
            write_expr(f, body, 0)?;
            f.write_str(")")
        }
        Expr::Seq { kind, index, args } => {
            write!(f, "{kind}[{index}]")?;
            if let Some(args) = args {
                f.write_str("(")?;
                write_expr(f, &args.0, 0)?;
                f.write_str(", ")?;
                write_expr(f, &args.1, 0)?;
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 0)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
