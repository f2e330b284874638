//! Mini-language for direct sums, e.g. `2U+mE8(-1)+<-2d>` or
//! `U+mE8(-1)+[2,1;1,(1-d)/2]`. The variables `m` and `d` are substituted
//! before evaluation.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Block, Lattice};
use crate::error::{Error, Result};
use crate::Rational;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    m: i64,
    d: i64,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(perr(format!("expected `{lit}` at offset {}", self.pos)))
        }
    }

    fn number(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn descriptor(&mut self) -> Result<Vec<Block>> {
        let mut blocks = Vec::new();
        loop {
            let count = self.coefficient()?;
            let block = self.atom()?;
            for _ in 0..count {
                blocks.push(block.clone());
            }
            if self.pos == self.s.len() {
                return Ok(blocks);
            }
            if !self.eat(b'+') {
                return Err(perr(format!(
                    "unexpected `{}` at offset {}",
                    self.peek().unwrap_or(b'?') as char,
                    self.pos
                )));
            }
        }
    }

    fn coefficient(&mut self) -> Result<i64> {
        let n = self.number();
        let var = if self.eat(b'm') {
            Some(self.m)
        } else if self.peek() == Some(b'd') {
            self.pos += 1;
            Some(self.d)
        } else {
            None
        };
        let c = match (n, var) {
            (Some(a), Some(b)) => a.checked_mul(b).ok_or(Error::Overflow("coefficient"))?,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 1,
        };
        if c < 0 {
            return Err(perr("negative multiplicity"));
        }
        Ok(c)
    }

    fn atom(&mut self) -> Result<Block> {
        match self.peek() {
            Some(b'U') => {
                self.pos += 1;
                if self.eat(b'(') {
                    self.expect("2)")?;
                    Ok(Block::U2)
                } else {
                    Ok(Block::U)
                }
            }
            Some(b'E') => {
                self.expect("E8(-1)")?;
                Ok(Block::E8Neg)
            }
            Some(b'<') => {
                self.pos += 1;
                let k = self.int_expr()?;
                self.expect(">")?;
                Ok(Block::Scalar(k))
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.int_expr()?;
                self.expect(",")?;
                let b = self.int_expr()?;
                self.expect(";")?;
                let b2 = self.int_expr()?;
                self.expect(",")?;
                let c = self.int_expr()?;
                self.expect("]")?;
                if b != b2 {
                    return Err(Error::NotSymmetric);
                }
                Ok(Block::Binary(a, b, c))
            }
            _ => Err(perr(format!("expected a block at offset {}", self.pos))),
        }
    }

    fn int_expr(&mut self) -> Result<i64> {
        let v = self.expr()?;
        if !v.is_integer() {
            return Err(perr(format!("entry {v} is not an integer")));
        }
        v.to_integer().to_i64().ok_or(Error::Overflow("gram entry"))
    }

    fn expr(&mut self) -> Result<Rational> {
        let mut v = self.term()?;
        loop {
            if self.eat(b'+') {
                v += self.term()?;
            } else if self.eat(b'-') {
                v -= self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<Rational> {
        let mut v = self.factor()?;
        loop {
            if self.eat(b'*') {
                v *= self.factor()?;
            } else if self.eat(b'/') {
                let q = self.factor()?;
                if q.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                v /= q;
            } else {
                return Ok(v);
            }
        }
    }

    fn factor(&mut self) -> Result<Rational> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let mut v = if self.eat(b'(') {
            let v = self.expr()?;
            self.expect(")")?;
            v
        } else if let Some(n) = self.number() {
            Rational::from_integer(BigInt::from(n))
        } else if self.eat(b'd') {
            return Ok(Rational::from_integer(BigInt::from(self.d)));
        } else if self.eat(b'm') {
            return Ok(Rational::from_integer(BigInt::from(self.m)));
        } else {
            return Err(perr(format!("expected a number at offset {}", self.pos)));
        };
        // juxtaposition: `2d`, `3m`, `2(d+1)`
        while matches!(self.peek(), Some(b'd' | b'm' | b'(')) {
            v *= self.factor()?;
        }
        Ok(v)
    }
}

/// Parses a direct-sum description with `m` and `d` substituted.
pub fn parse_lattice(descriptor: &str, m: i64, d: i64) -> Result<Lattice> {
    let compact: String = descriptor.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(perr("empty lattice description"));
    }
    let mut p = Parser {
        s: compact.as_bytes(),
        pos: 0,
        m,
        d,
    };
    let blocks = p.descriptor()?;
    Ok(Lattice::direct_sum(&blocks).with_label(descriptor.trim()))
}
