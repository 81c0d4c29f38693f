//! Parser for scalar expressions such as `1/2 + 3/4*zeta` or `t^(eta+1)/(t - z)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::ArithError;
use crate::field::Field;
use crate::Q;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ArithError> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Num(s[st..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ArithError::Parse { offset: i, message: format!("unexpected character `{}`", c) });
        }
    }
    Ok(out)
}

struct Parser<'a, K> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    resolve: &'a dyn Fn(&str) -> Option<K>,
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ArithError> {
        Err(ArithError::Parse { offset: self.offset(), message: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<K, ArithError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<K, ArithError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                acc = acc / d;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<K, ArithError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<K, ArithError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.unary()?;
            let Some(n) = e.to_i64() else {
                return self.err("exponent must evaluate to an integer");
            };
            if n < 0 && base.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            return Ok(base.pow_i(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<K, ArithError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(K::from_rational(&Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                (self.resolve)(&name).ok_or(ArithError::UnboundSymbol(name))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            _ => self.err("expected a number, symbol or `(`"),
        }
    }
}

/// Parses an expression over `K`; identifiers are looked up with `resolve`.
pub fn parse_expr<K: Field>(s: &str, resolve: &dyn Fn(&str) -> Option<K>) -> Result<K, ArithError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ArithError::Parse { offset: 0, message: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: s.len(), resolve };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a rational number such as `-3/4`.
pub fn parse_rational(s: &str) -> Result<Q, ArithError> {
    let v: Q = parse_expr(s, &|_| None)?;
    if v.denom().is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(v)
}
