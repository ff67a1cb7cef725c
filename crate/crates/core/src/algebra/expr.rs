//! A small evaluator for arithmetic expressions over a field.
//!
//! Supports integers, `+ - * / ^`, parentheses, implicit multiplication
//! (`2w`, `3(a+1)`) and named symbols resolved through a caller-supplied
//! lookup. The typographic minus `−` and the dot `·` are accepted.

use super::{powi, Field};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected character '{0}' at position {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent must be an integer literal")]
    BadExponent,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(chars[start..i].iter().collect()), start));
            }
            _ if c.is_alphabetic() || c == '_' || c == '√' => {
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((Tok::Op(c), i));
                i += 1;
            }
            '−' => {
                out.push((Tok::Op('-'), i));
                i += 1;
            }
            '·' | '×' => {
                out.push((Tok::Op('*'), i));
                i += 1;
            }
            _ => return Err(ExprError::Unexpected(c, i)),
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    lookup: &'a dyn Fn(&str) -> Option<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn unexpected(&self) -> ExprError {
        match self.toks.get(self.pos) {
            None => ExprError::UnexpectedEnd,
            Some((Tok::Op(c), at)) => ExprError::Unexpected(*c, *at),
            Some((Tok::Num(s) | Tok::Ident(s), at)) => {
                ExprError::Unexpected(s.chars().next().unwrap_or(' '), *at)
            }
        }
    }

    fn expr(&mut self) -> Result<F, ExprError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<F, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.exact_div(&d).ok_or(ExprError::DivisionByZero)?;
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => acc = acc * self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<F, ExprError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<F, ExprError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            return powi(&base, e).ok_or(ExprError::DivisionByZero);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, ExprError> {
        let mut sign = 1;
        let mut parens = 0;
        loop {
            match self.peek() {
                Some(Tok::Op('(')) => parens += 1,
                Some(Tok::Op('-')) => sign = -sign,
                _ => break,
            }
            self.pos += 1;
        }
        let Some(Tok::Num(n)) = self.peek() else {
            return Err(ExprError::BadExponent);
        };
        let n: i32 = n.parse().map_err(|_| ExprError::BadExponent)?;
        self.pos += 1;
        for _ in 0..parens {
            if self.peek() != Some(&Tok::Op(')')) {
                return Err(ExprError::BadExponent);
            }
            self.pos += 1;
        }
        Ok(sign * n)
    }

    fn atom(&mut self) -> Result<F, ExprError> {
        let tok = self.peek().cloned().ok_or(ExprError::UnexpectedEnd)?;
        match tok {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(F::from_bigint(&n.parse().expect("digits")))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                (self.lookup)(&name).ok_or(ExprError::UnknownSymbol(name))
            }
            Tok::Op('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Op(_) => Err(self.unexpected()),
        }
    }
}

/// Evaluate `s` in the field `F`, resolving identifiers with `lookup`.
pub fn eval_expr<F: Field>(s: &str, lookup: &dyn Fn(&str) -> Option<F>) -> Result<F, ExprError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, lookup };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(v)
}
