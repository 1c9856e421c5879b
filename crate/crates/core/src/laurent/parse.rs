//! Recursive-descent parser for Laurent polynomial literals such as
//! `1+3x^2-x^5`, `x^-1+1`, `(1+x)^2(1+x^2)` or `1/2*x`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{FieldTag, LaurentPoly};
use crate::error::{Error, Result};

struct Parser<'a> {
    field: FieldTag,
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::PolyParse(self.src.to_string(), format!("{msg} at offset {}", self.pos))
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.field);
        let mut first = true;
        loop {
            let negative = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else if first {
                false
            } else {
                return Ok(acc);
            };
            let t = self.term()?;
            acc = if negative { acc.sub(&t)? } else { acc.add(&t)? };
            first = false;
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?)?;
                }
                Some(c) if c == 'x' || c == '(' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            let negative = self.eat('-');
            let n = self.integer()?;
            let n = i64::try_from(n).map_err(|_| self.err("exponent too large"))?;
            return base.pow(if negative { -n } else { n });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(LaurentPoly::x(self.field))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.eat('/') {
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                LaurentPoly::new(self.field, 0, vec![value])
            }
            Some(c) => Err(self.err(&format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().unwrap())
    }
}

pub(super) fn parse(field: FieldTag, src: &str) -> Result<LaurentPoly> {
    let mut p = Parser { field, src, chars: src.chars().collect(), pos: 0 };
    if p.peek().is_none() {
        return Err(p.err("empty polynomial"));
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}
