//! Text parser for polynomial expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := sign? term (("+" | "-") term)*
//! term    := factor (("*")? factor)*
//! factor  := "-" factor | primary ("^" integer)?
//! primary := integer | identifier | "(" expr ")"
//! list    := "(" expr ("," expr)* ")" | expr ("," expr)*
//! ```
//!
//! Integer literals of any length are reduced mod p. Juxtaposition such as
//! `2X` is multiplication; `XY` is a single (unknown) identifier.

use std::sync::Arc;

use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            Tok::Minus => {
                self.bump();
                -&self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(digits) => {
                    let e: u32 = digits.parse().map_err(|_| Error::ExponentOverflow)?;
                    base.checked_pow(e as u64)
                }
                _ => Err(Error::Syntax {
                    pos,
                    msg: "expected integer exponent after `^`".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(digits) => {
                let p = self.ring.p() as u64;
                let v = digits
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(self.ring, v as i64))
            }
            Tok::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::UnknownVariable { name, pos }),
            },
            Tok::LParen => {
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Tok::End => Err(Error::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
            t => Err(Error::Syntax {
                pos,
                msg: format!("unexpected token {t:?}"),
            }),
        }
    }

    fn expect_end(&self) -> Result<()> {
        if *self.peek() != Tok::End {
            return self.err("trailing input");
        }
        Ok(())
    }
}

/// Parses a single polynomial expression into canonical form.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut parser = Parser {
        ring,
        toks: tokenize(text)?,
        at: 0,
    };
    let p = parser.expr()?;
    parser.expect_end()?;
    Ok(p)
}

/// Parses a comma-separated list, optionally wrapped in one pair of parentheses.
/// The empty string and `()` yield an empty list.
pub fn parse_polynomial_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let toks = tokenize(text)?;
    if toks.len() == 1 {
        return Ok(Vec::new());
    }
    // Strip one outer pair of parentheses only if it encloses the whole list
    // and contains a top-level comma or is the entire input.
    let mut parser = Parser { ring, toks, at: 0 };
    let wrapped = parser.toks[0].0 == Tok::LParen && encloses_all(&parser.toks);
    if wrapped {
        parser.bump();
        if *parser.peek() == Tok::RParen {
            parser.bump();
            parser.expect_end()?;
            return Ok(Vec::new());
        }
    }
    let mut out = vec![parser.expr()?];
    while *parser.peek() == Tok::Comma {
        parser.bump();
        out.push(parser.expr()?);
    }
    if wrapped {
        if *parser.peek() != Tok::RParen {
            return parser.err("expected `)`");
        }
        parser.bump();
    }
    parser.expect_end()?;
    Ok(out)
}

fn encloses_all(toks: &[(Tok, usize)]) -> bool {
    let mut depth = 0i32;
    let last = toks.len() - 2; // index before End
    for (i, (t, _)) in toks.iter().enumerate() {
        match t {
            Tok::LParen => depth += 1,
            Tok::RParen => {
                depth -= 1;
                if depth == 0 && i != last {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::Characteristic;

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Characteristic::new(p).unwrap(), names).unwrap()
    }

    #[test]
    fn fermat_cubic() {
        let r = ring(7, &["X", "Y", "Z"]);
        let f = parse_polynomial("X^3 + Y^3 + Z^3", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.terms().iter().all(|(_, c)| *c == 1));
        assert_eq!(f.to_string(), "X^3 + Y^3 + Z^3");
    }

    #[test]
    fn zero_and_cancellation() {
        let r = ring(2, &["X", "Y"]);
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial("X*Y - X*Y", &r).unwrap().is_zero());
    }

    #[test]
    fn literals_reduce_mod_p() {
        let r = ring(5, &["X"]);
        let f = parse_polynomial("123456789012345678901234567890*X - 7", &r).unwrap();
        // 123456789012345678901234567890 = 0 mod 5, -7 = 3 mod 5
        assert_eq!(f.to_string(), "3");
        let g = parse_polynomial("-(X+1)^2 + 2X", &r).unwrap();
        assert_eq!(g.to_string(), "4*X^2 + 4");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring(3, &["X", "Y"]);
        assert_eq!(
            parse_polynomial("X + W", &r),
            Err(Error::UnknownVariable {
                name: "W".into(),
                pos: 4
            })
        );
        assert!(matches!(
            parse_polynomial("X + ", &r),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("X $ Y", &r),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert_eq!(
            parse_polynomial("X^99999999999", &r),
            Err(Error::ExponentOverflow)
        );
        assert!(matches!(
            parse_polynomial("(X+Y", &r),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn lists() {
        let r = ring(2, &["X", "Y", "Z"]);
        let l = parse_polynomial_list("(X*Y, X*Z, Y*Z)", &r).unwrap();
        assert_eq!(l.len(), 3);
        let l = parse_polynomial_list("X*(Y+Z), (X+Y)", &r).unwrap();
        assert_eq!(l.len(), 2);
        let l = parse_polynomial_list("(X+Y)*Z", &r).unwrap();
        assert_eq!(l.len(), 1);
        assert!(parse_polynomial_list("()", &r).unwrap().is_empty());
        assert!(parse_polynomial_list("  ", &r).unwrap().is_empty());
    }
}
