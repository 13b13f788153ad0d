//! Recursive-descent parser for the shared polynomial grammar.
//!
//! Grammar: integers, `/`, `+`, `-`, `*`, `^`, parentheses, and
//! juxtaposition multiplication (`2xy`).  `^` binds tightest; unary minus
//! is allowed.  Division is only defined by nonzero constants.

use std::sync::Arc;


use super::{Polynomial, PolyRing};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s = &text[start..i];
                // Reject "x^1.5"-style input at the lexer: '.' is not a token.
                let v: u64 = s
                    .parse()
                    .map_err(|_| err(start, format!("integer `{s}` out of range")))?;
                toks.push((Tok::Int(v), start));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => return Err(err(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

/// Split an identifier run like `xy` into ring variables, longest match
/// first.  `x^2y` lexes as separate tokens, this only handles fused names.
fn split_vars(ident: &str, pos: usize, ring: &PolyRing) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = ident;
    let mut off = 0;
    'outer: while !rest.is_empty() {
        let mut candidates: Vec<&String> = ring
            .var_names()
            .iter()
            .filter(|v| rest.starts_with(v.as_str()))
            .collect();
        candidates.sort_by_key(|v| std::cmp::Reverse(v.len()));
        for v in candidates {
            out.push(ring.var_index(v).unwrap());
            off += v.len();
            rest = &rest[v.len()..];
            continue 'outer;
        }
        return Err(err(
            pos + off,
            format!("unknown variable `{rest}` in `{ident}`"),
        ));
    }
    Ok(out)
}

struct Parser<'a, C: Scalar> {
    lx: Lexer,
    ring: &'a Arc<PolyRing>,
    _marker: std::marker::PhantomData<C>,
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.lx.pos).map(|(t, _)| t)
    }

    fn peek_pos(&self) -> usize {
        self.lx
            .toks
            .get(self.lx.pos)
            .map(|&(_, p)| p)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.lx.toks.get(self.lx.pos).cloned();
        if t.is_some() {
            self.lx.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<C>> {
        let mut negate = false;
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            negate = true;
        } else if let Some(Tok::Plus) = self.peek() {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    let pos = self.peek_pos();
                    self.bump();
                    let f = self.factor()?;
                    if !f.is_constant() {
                        return Err(err(pos, "division by a non-constant polynomial"));
                    }
                    let c = f.constant_coeff();
                    if c.is_zero() {
                        return Err(err(pos, "division by zero"));
                    }
                    acc = acc.scale(&c.inv());
                }
                // Juxtaposition multiplication.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<C>> {
        let (tok, pos) = self
            .bump()
            .ok_or_else(|| err(usize::MAX, "unexpected end of input"))?;
        let base = match tok {
            Tok::Int(v) => {
                let p = Polynomial::constant(self.ring, C::from_int(v as i64));
                return self.maybe_pow(p);
            }
            Tok::Ident(name) => {
                let idx = split_vars(&name, pos, self.ring)?;
                // `^` applies to the last variable of a fused run: `xy^2` is x*y^2.
                let mut p = Polynomial::constant(self.ring, C::one());
                for (i, &vi) in idx.iter().enumerate() {
                    let v = Polynomial::var(self.ring, vi);
                    if i + 1 == idx.len() {
                        let v = self.maybe_pow(v)?;
                        p = &p * &v;
                    } else {
                        p = &p * &v;
                    }
                }
                return Ok(p);
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => inner,
                    other => {
                        let p = other.map(|(_, p)| p).unwrap_or(usize::MAX);
                        return Err(err(p, "expected `)`"));
                    }
                }
            }
            other => return Err(err(pos, format!("unexpected token {other:?}"))),
        };
        self.maybe_pow(base)
    }

    fn maybe_pow(&mut self, base: Polynomial<C>) -> Result<Polynomial<C>> {
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some((Tok::Int(e), pos)) => {
                    let e32 = u32::try_from(e)
                        .map_err(|_| err(pos, format!("exponent {e} too large")))?;
                    Ok(base.pow(e32))
                }
                Some((t, pos)) => Err(err(pos, format!("expected integer exponent, got {t:?}"))),
                None => Err(err(usize::MAX, "expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }
}

/// Parse `text` into a canonical polynomial of `ring`.
pub fn parse_poly<C: Scalar>(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial<C>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut parser = Parser::<C> {
        lx: Lexer { toks, pos: 0 },
        ring,
        _marker: std::marker::PhantomData,
    };
    let p = parser.expr()?;
    if let Some((t, pos)) = parser.bump() {
        return Err(err(pos, format!("trailing input starting at {t:?}")));
    }
    Ok(p)
}
