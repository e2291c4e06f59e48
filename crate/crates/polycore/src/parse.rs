//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: sums and differences of products, `^` with a nonnegative integer
//! exponent, parentheses, integer and `p/q` literals, and the variables
//! `a b c u x m n t`. Juxtaposition is not multiplication; write `2*a`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{MultiPoly, PolyError, Var};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, PolyError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Num(lit.parse().expect("digits")));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                let c = d
                    .constant_value()
                    .filter(|c| *c != BigRational::from_integer(0.into()))
                    .ok_or_else(|| PolyError::Parse("division by a non-constant or zero".into()))?;
                acc = acc.scale(&c.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = n
                        .try_into()
                        .map_err(|_| PolyError::Parse("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => Err(PolyError::Parse("expected integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(MultiPoly::var(name.parse::<Var>()?))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(PolyError::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl std::str::FromStr for MultiPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks = lex(s)?;
        if toks.is_empty() {
            return Err(PolyError::Parse("empty expression".into()));
        }
        let mut p = Parser { toks, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(PolyError::Parse(format!(
                "trailing input at token {}",
                p.pos
            )));
        }
        Ok(e)
    }
}

/// Parses a polynomial, panicking on malformed input. For literals in code.
pub fn poly(s: &str) -> MultiPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad polynomial literal `{s}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_roundtrip() {
        let p = poly("2*u^3 - (a+b+c)*u^2 + (a*b+b*c+c*a)*u - a*b*c");
        let q: MultiPoly = p.to_string().parse().unwrap();
        assert_eq!(p, q);
        assert_eq!(poly("-3/6*a + (a)"), poly("a/2"));
    }

    #[test]
    fn rejects_garbage() {
        assert!("a +".parse::<MultiPoly>().is_err());
        assert!("a ^ b".parse::<MultiPoly>().is_err());
        assert!("z".parse::<MultiPoly>().is_err());
        assert!("a/b".parse::<MultiPoly>().is_err());
        assert!("(a".parse::<MultiPoly>().is_err());
    }
}
