//! Tokenizer and recursive-descent parser.
//!
//! ```text
//! identity = expr "=" expr ;
//! expr     = term { ("+"|"-") term } ;
//! term     = unary { "*" unary } ;
//! unary    = ["-"] factor ;
//! factor   = base [ "^" ( ixatom | "(" ixexpr ")" ) ] ;
//! base     = integer | "x" | "y" | "D" | name | seqapp | binom | sum | "(" expr ")" ;
//! seqapp   = ("F"|"L") "[" ixexpr "]" [ "(" expr "," expr ")" ] ;
//! binom    = "binom" "(" ixexpr "," ixexpr ")" ;
//! sum      = "sum" "(" name "=" ixexpr ".." ixexpr "," expr ")" ;
//! ixexpr   = ixterm { ("+"|"-") ixterm } ;
//! ixterm   = ixunary { "*" ixunary } ;
//! ixunary  = ["-"] ixatom ;
//! ixatom   = integer | name | "(" ixexpr ")" ;
//! ```

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::ast::{Expr, Identity, IndexExpr};
use crate::sequence::SeqKind;

/// Meta-variables that identities may quantify over.
pub const META_VARS: [&str; 2] = ["n", "k"];

const RESERVED: [&str; 7] = ["x", "y", "D", "F", "L", "binom", "sum"];

const MAX_DEPTH: usize = 200;

/// Syntax or scoping error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Equals,
    DotDot,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Name(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::DotDot => f.write_str("`..`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let err = |message: String| ParseError {
            line: start_line,
            column: start_col,
            message,
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        let tok = if let Some(t) = single {
            i += 1;
            col += 1;
            t
        } else if c == '.' {
            if chars.get(i + 1) == Some(&'.') {
                i += 2;
                col += 2;
                Tok::DotDot
            } else {
                return Err(err("expected `..`".into()));
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let text: String = chars[start..i].iter().collect();
            Tok::Int(text.parse().map_err(|_| err("bad integer literal".into()))?)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            Tok::Name(chars[start..i].iter().collect())
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    scope: Vec<String>,
    depth: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            scope: Vec::new(),
            depth: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: String) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError {
            line: s.line,
            column: s.column,
            message,
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            Err(self.error_here("expression nested too deeply".into()))
        } else {
            Ok(())
        }
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error_here(format!("unexpected {}", self.peek())))
        }
    }

    fn identity(&mut self) -> Result<Identity, ParseError> {
        let lhs = self.expr()?;
        self.expect(Tok::Equals)?;
        let rhs = self.expr()?;
        self.finish()?;
        Ok(Identity { lhs, rhs })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                break;
            }
        }
        self.leave();
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Star) {
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(Expr::Neg(Box::new(self.factor()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let exp = if self.eat(&Tok::LParen) {
            let e = self.ixexpr()?;
            self.expect(Tok::RParen)?;
            e
        } else {
            match self.peek().clone() {
                Tok::Int(_) | Tok::Name(_) => self.ixatom()?,
                other => {
                    return Err(self.error_here(format!(
                        "expected exponent (integer, index variable or parenthesized index), found {other}"
                    )))
                }
            }
        };
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.next();
                Ok(Expr::Int(v))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Name(name) => match name.as_str() {
                "x" => {
                    self.next();
                    Ok(Expr::X)
                }
                "y" => {
                    self.next();
                    Ok(Expr::Y)
                }
                "D" => {
                    self.next();
                    Ok(Expr::Delta)
                }
                "F" | "L" => self.seqapp(),
                "binom" => self.binom(),
                "sum" => self.sum(),
                _ => {
                    self.check_var(&name)?;
                    self.next();
                    Ok(Expr::Var(name))
                }
            },
            other => Err(self.error_here(format!("expected an expression, found {other}"))),
        }
    }

    fn check_var(&self, name: &str) -> Result<(), ParseError> {
        if self.scope.iter().any(|s| s == name) || META_VARS.contains(&name) {
            Ok(())
        } else if RESERVED.contains(&name) {
            Err(self.error_here(format!("`{name}` cannot be used as an index")))
        } else {
            Err(self.error_here(format!("unknown name `{name}`")))
        }
    }

    fn seqapp(&mut self) -> Result<Expr, ParseError> {
        let kind = match self.next() {
            Tok::Name(n) if n == "F" => SeqKind::Fib,
            _ => SeqKind::Luc,
        };
        self.expect(Tok::LBracket)?;
        let index = self.ixexpr()?;
        self.expect(Tok::RBracket)?;
        let args = if self.eat(&Tok::LParen) {
            let xa = self.expr()?;
            self.expect(Tok::Comma)?;
            let ya = self.expr()?;
            self.expect(Tok::RParen)?;
            Some(Box::new((xa, ya)))
        } else {
            None
        };
        Ok(Expr::Seq { kind, index, args })
    }

    fn binom(&mut self) -> Result<Expr, ParseError> {
        self.next();
        self.expect(Tok::LParen)?;
        let a = self.ixexpr()?;
        self.expect(Tok::Comma)?;
        let b = self.ixexpr()?;
        self.expect(Tok::RParen)?;
        Ok(Expr::Binom(a, b))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.next();
        self.expect(Tok::LParen)?;
        let var = match self.peek().clone() {
            Tok::Name(n) if !RESERVED.contains(&n.as_str()) => {
                self.next();
                n
            }
            other => {
                return Err(self.error_here(format!("expected summation variable, found {other}")))
            }
        };
        self.expect(Tok::Equals)?;
        let low = self.ixexpr()?;
        self.expect(Tok::DotDot)?;
        let high = self.ixexpr()?;
        self.expect(Tok::Comma)?;
        self.scope.push(var.clone());
        let body = self.expr();
        self.scope.pop();
        let body = body?;
        self.expect(Tok::RParen)?;
        Ok(Expr::Sum {
            var,
            low,
            high,
            body: Box::new(body),
        })
    }

    fn ixexpr(&mut self) -> Result<IndexExpr, ParseError> {
        self.enter()?;
        let mut acc = self.ixterm()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = IndexExpr::Add(Box::new(acc), Box::new(self.ixterm()?));
            } else if self.eat(&Tok::Minus) {
                acc = IndexExpr::Sub(Box::new(acc), Box::new(self.ixterm()?));
            } else {
                break;
            }
        }
        self.leave();
        Ok(acc)
    }

    fn ixterm(&mut self) -> Result<IndexExpr, ParseError> {
        let mut acc = self.ixunary()?;
        while self.eat(&Tok::Star) {
            acc = IndexExpr::Mul(Box::new(acc), Box::new(self.ixunary()?));
        }
        Ok(acc)
    }

    fn ixunary(&mut self) -> Result<IndexExpr, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(IndexExpr::Neg(Box::new(self.ixatom()?)))
        } else {
            self.ixatom()
        }
    }

    fn ixatom(&mut self) -> Result<IndexExpr, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                let v = i64::try_from(&v)
                    .map_err(|_| self.error_here("index literal does not fit in 64 bits".into()))?;
                self.next();
                Ok(IndexExpr::Int(v))
            }
            Tok::Name(name) => {
                self.check_var(&name)?;
                self.next();
                Ok(IndexExpr::Var(name))
            }
            Tok::LParen => {
                self.next();
                let e = self.ixexpr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(self.error_here(format!("expected an index expression, found {other}"))),
        }
    }
}

/// Parses `lhs = rhs`.
pub fn parse(src: &str) -> Result<Identity, ParseError> {
    Parser::new(src)?.identity()
}

/// Parses a single ring expression (no `=`).
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a single index expression.
pub fn parse_index(src: &str) -> Result<IndexExpr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.ixexpr()?;
    p.finish()?;
    Ok(e)
}
