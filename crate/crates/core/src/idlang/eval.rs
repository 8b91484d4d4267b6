//! Exact evaluation of identity-language trees and grid checking.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use super::ast::{Expr, Identity, IndexExpr};
use crate::poly::BivarPoly;
use crate::report::{CellRecord, CheckReport, Clock, Status};
use crate::ring::Ring;
use crate::sequence::{binomial, seq};
use crate::value::RingValue;

/// Values for the free meta-variables of a tree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Binding {
    values: BTreeMap<String, u32>,
}

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: u32) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: u32) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<u32> {
        self.values.get(name).copied()
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("{}");
        }
        for (i, (k, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalErrorKind {
    NegativeSubscript,
    NegativeExponent,
    NegativeBinomial,
    Unbound,
    Overflow,
}

impl fmt::Display for EvalErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalErrorKind::NegativeSubscript => "negative sequence subscript",
            EvalErrorKind::NegativeExponent => "negative exponent",
            EvalErrorKind::NegativeBinomial => "negative binomial top argument",
            EvalErrorKind::Unbound => "unbound variable",
            EvalErrorKind::Overflow => "index arithmetic overflow",
        })
    }
}

/// Domain error naming the offending node and the binding in force.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} in `{node}` (value {value}) at {binding}")]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub node: String,
    pub value: String,
    pub binding: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("no range given for meta-variable `{0}`")]
    MissingRange(String),
}

struct Env<'a> {
    binding: &'a Binding,
    locals: Vec<(String, i64)>,
}

impl Env<'_> {
    fn lookup(&self, name: &str) -> Option<i64> {
        self.locals
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
            .or_else(|| self.binding.get(name).map(i64::from))
    }

    fn binding_text(&self) -> String {
        let mut s = self.binding.to_string();
        for (n, v) in &self.locals {
            s.push_str(&format!(", {n}={v}"));
        }
        s
    }

    fn error(&self, kind: EvalErrorKind, node: &dyn fmt::Display, value: impl fmt::Display) -> EvalError {
        EvalError {
            kind,
            node: node.to_string(),
            value: value.to_string(),
            binding: self.binding_text(),
        }
    }

    fn index(&self, e: &IndexExpr) -> Result<i64, EvalError> {
        let overflow = || self.error(EvalErrorKind::Overflow, e, "?");
        match e {
            IndexExpr::Int(v) => Ok(*v),
            IndexExpr::Var(name) => self
                .lookup(name)
                .ok_or_else(|| self.error(EvalErrorKind::Unbound, e, name)),
            IndexExpr::Neg(a) => self.index(a)?.checked_neg().ok_or_else(overflow),
            IndexExpr::Add(a, b) => self.index(a)?.checked_add(self.index(b)?).ok_or_else(overflow),
            IndexExpr::Sub(a, b) => self.index(a)?.checked_sub(self.index(b)?).ok_or_else(overflow),
            IndexExpr::Mul(a, b) => self.index(a)?.checked_mul(self.index(b)?).ok_or_else(overflow),
        }
    }

    /// A nonnegative index that fits the generators' `u32`.
    fn natural(&mut self, e: &IndexExpr, node: &Expr, neg: EvalErrorKind) -> Result<u32, EvalError> {
        let v = self.index(e)?;
        if v < 0 {
            return Err(self.error(neg, node, v));
        }
        u32::try_from(v).map_err(|_| self.error(EvalErrorKind::Overflow, node, v))
    }

    fn eval(&mut self, e: &Expr) -> Result<RingValue, EvalError> {
        Ok(match e {
            Expr::Int(v) => RingValue::from_bigint(v),
            Expr::X => RingValue::x(),
            Expr::Y => RingValue::y(),
            Expr::Delta => RingValue::delta(),
            Expr::Var(name) => {
                let v = self
                    .lookup(name)
                    .ok_or_else(|| self.error(EvalErrorKind::Unbound, e, name))?;
                RingValue::from_int(v)
            }
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Add(a, b) => {
                let a = self.eval(a)?;
                a.add(&self.eval(b)?)
            }
            Expr::Sub(a, b) => {
                let a = self.eval(a)?;
                a.sub(&self.eval(b)?)
            }
            Expr::Mul(a, b) => {
                let a = self.eval(a)?;
                a.mul(&self.eval(b)?)
            }
            Expr::Pow(base, exp) => {
                let e_val = self.natural(exp, e, EvalErrorKind::NegativeExponent)?;
                let b = self.eval(base)?;
                match unit_sign(&b) {
                    Some(s) if s < 0 => RingValue::sign_pow(e_val),
                    Some(_) => RingValue::one(),
                    None => b.pow(e_val),
                }
            }
            Expr::Binom(top, bottom) => {
                let t = self.index(top)?;
                if t < 0 {
                    return Err(self.error(EvalErrorKind::NegativeBinomial, e, t));
                }
                let b = self.index(bottom)?;
                RingValue::from_bigint(&binomial(t as u64, b))
            }
            Expr::Sum {
                var,
                low,
                high,
                body,
            } => {
                let lo = self.index(low)?;
                let hi = self.index(high)?;
                let mut acc = RingValue::zero();
                for i in lo..=hi {
                    self.locals.push((var.clone(), i));
                    let term = self.eval(body);
                    self.locals.pop();
                    acc = acc.add(&term?);
                }
                acc
            }
            Expr::Seq { kind, index, args } => {
                let n = self.natural(index, e, EvalErrorKind::NegativeSubscript)?;
                let (xs, ys) = match args {
                    Some(args) => (self.eval(&args.0)?, self.eval(&args.1)?),
                    None => (RingValue::x(), RingValue::y()),
                };
                seq(*kind, n, &xs, &ys)
            }
        })
    }
}

/// `Some(±1)` when `v` is the constant `1` or `-1`.
fn unit_sign(v: &RingValue) -> Option<i8> {
    let c = v.as_base()?.as_constant()?;
    if c.is_one() {
        Some(1)
    } else if (-c).is_one() {
        Some(-1)
    } else {
        None
    }
}

/// Evaluates one side under `binding`. `D` evaluates to δ; empty sums are 0.
pub fn evaluate(expr: &Expr, binding: &Binding) -> Result<RingValue, EvalError> {
    Env {
        binding,
        locals: Vec::new(),
    }
    .eval(expr)
}

/// Evaluates an index expression under `binding`.
pub fn evaluate_index(expr: &IndexExpr, binding: &Binding) -> Result<i64, EvalError> {
    Env {
        binding,
        locals: Vec::new(),
    }
    .index(expr)
}

/// Outcome of one grid cell.
#[derive(Debug, Clone, PartialEq)]
pub enum CellVerdict {
    Pass,
    Fail { lhs: RingValue, rhs: RingValue },
    Error(EvalError),
}

/// Checks `identity` at a single binding.
pub fn check_at(identity: &Identity, binding: &Binding) -> CellVerdict {
    let sides = evaluate(&identity.lhs, binding)
        .and_then(|l| evaluate(&identity.rhs, binding).map(|r| (l, r)));
    match sides {
        Ok((l, r)) if l == r => CellVerdict::Pass,
        Ok((lhs, rhs)) => CellVerdict::Fail { lhs, rhs },
        Err(e) => CellVerdict::Error(e),
    }
}

/// Inclusive range per meta-variable.
pub type Ranges = BTreeMap<String, (u32, u32)>;

/// Bindings over the free meta-variables of `identity`, in `(n, k)` order.
/// Ranges for variables that do not occur are ignored.
pub fn grid(identity: &Identity, ranges: &Ranges) -> Result<Vec<Binding>, CheckError> {
    let mut free: Vec<String> = identity.free_vars().into_iter().collect();
    // n varies slowest, matching report order.
    free.sort_by_key(|v| if v == "n" { 0 } else { 1 });
    let mut out = alloc::vec![Binding::new()];
    for var in &free {
        let &(lo, hi) = ranges
            .get(var)
            .ok_or_else(|| CheckError::MissingRange(var.clone()))?;
        let mut next = Vec::new();
        for b in &out {
            for v in lo..=hi {
                next.push(b.clone().with(var, v));
            }
        }
        out = next;
    }
    Ok(out)
}

/// Turns a verdict into a report record labelled `id`.
pub fn record(id: &str, binding: &Binding, verdict: CellVerdict, elapsed_ms: f64) -> CellRecord {
    let (status, lhs, rhs, note) = match verdict {
        CellVerdict::Pass => (Status::Pass, None, None, None),
        CellVerdict::Fail { lhs, rhs } => (
            Status::Fail,
            Some(lhs.to_string()),
            Some(rhs.to_string()),
            None,
        ),
        CellVerdict::Error(e) => (Status::Error, None, None, Some(e.to_string())),
    };
    CellRecord {
        id: id.to_string(),
        n: binding.get("n"),
        k: binding.get("k"),
        status,
        elapsed_ms,
        lhs,
        rhs,
        note,
    }
}

/// Checks `identity` at every grid point. Evaluation errors become
/// [`Status::Error`] records annotated with the binding.
pub fn check(
    identity: &Identity,
    ranges: &Ranges,
    id: &str,
    clock: &dyn Clock,
) -> Result<CheckReport, CheckError> {
    let cells = grid(identity, ranges)?;
    let records = cells
        .iter()
        .map(|b| {
            let start = clock.now_ms();
            let verdict = check_at(identity, b);
            record(id, b, verdict, clock.now_ms() - start)
        })
        .collect();
    Ok(CheckReport::from_records(records))
}

/// Convenience: evaluate a closed expression to a polynomial, if it has no
/// δ part.
pub fn evaluate_base(expr: &Expr) -> Result<Option<BivarPoly>, EvalError> {
    Ok(evaluate(expr, &Binding::new())?.as_base())
}
