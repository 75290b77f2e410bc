//! Parsing and printing of ring expressions.
//!
//! Grammar: integer literals, variable names, `+ - * ^` and parentheses;
//! exponents are non-negative integer literals. There is no division, the
//! algebra is over the integers. Printing renders the normal form in
//! descending term order so that any printed element re-parses to itself.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::QuotientRing;
use crate::Int;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Int),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(_, c)) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<Int>()
                    .map_err(|_| Error::Input(format!("bad integer literal `{digits}`")))?;
                tokens.push(Token::Number(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Name(name));
            }
            other => {
                return Err(Error::Input(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a QuotientRing,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+' | '-') term)*
    fn expression(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.advance();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.advance();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.advance();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    // factor := '-'* primary ('^' uint)?
    fn factor(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while matches!(self.peek(), Some(Token::Minus)) {
            self.advance();
            negate = !negate;
        }
        let mut base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.advance();
            match self.advance() {
                Some(Token::Number(n)) => {
                    let e = n
                        .to_u32()
                        .ok_or_else(|| Error::Input(format!("exponent `{n}` out of range")))?;
                    base = base.pow(e);
                }
                other => {
                    return Err(Error::Input(format!(
                        "expected an integer exponent, found {}",
                        describe(other.as_ref())
                    )))
                }
            }
        }
        Ok(if negate { base.neg() } else { base })
    }

    // primary := int | name | '(' expr ')'
    fn primary(&mut self) -> Result<Polynomial> {
        match self.advance() {
            Some(Token::Number(n)) => Ok(Polynomial::constant(self.ring.arity(), n)),
            Some(Token::Name(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring.arity(), i)),
                None => Err(Error::Input(format!("unknown variable `{name}`"))),
            },
            Some(Token::Open) => {
                let inner = self.expression()?;
                match self.advance() {
                    Some(Token::Close) => Ok(inner),
                    other => Err(Error::Input(format!(
                        "expected `)`, found {}",
                        describe(other.as_ref())
                    ))),
                }
            }
            other => Err(Error::Input(format!(
                "expected a value, found {}",
                describe(other.as_ref())
            ))),
        }
    }
}

fn describe(token: Option<&Token>) -> String {
    match token {
        None => "end of input".to_string(),
        Some(Token::Number(n)) => format!("`{n}`"),
        Some(Token::Name(n)) => format!("`{n}`"),
        Some(Token::Plus) => "`+`".to_string(),
        Some(Token::Minus) => "`-`".to_string(),
        Some(Token::Star) => "`*`".to_string(),
        Some(Token::Caret) => "`^`".to_string(),
        Some(Token::Open) => "`(`".to_string(),
        Some(Token::Close) => "`)`".to_string(),
    }
}

/// Parse an expression over the ring's variables.
pub fn parse_polynomial(input: &str, ring: &QuotientRing) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Input("empty expression".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
    };
    let poly = parser.expression()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Input(format!(
            "unexpected trailing {}",
            describe(parser.tokens.get(parser.pos))
        )));
    }
    Ok(poly)
}

/// Render a polynomial in the expression grammar, descending term order.
pub fn render_polynomial(p: &Polynomial, ring: &QuotientRing) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let names = ring.var_names();
    let mut out = String::new();
    for (m, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_unit() {
            factors.push(abs.to_string());
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::nilpotent_line_ring;

    fn ring() -> QuotientRing {
        nilpotent_line_ring("h", 4).unwrap()
    }

    #[test]
    fn parse_and_render_round_trip() {
        let r = ring();
        for src in ["h - 1", "(h-1)^2", "2*h^3 - 3*h + 1", "-h", "0", "7", "-(h+2)*h"] {
            let p = parse_polynomial(src, &r).unwrap();
            let rendered = render_polynomial(&p, &r);
            let reparsed = parse_polynomial(&rendered, &r).unwrap();
            assert_eq!(p, reparsed, "round trip of {src} via {rendered}");
        }
    }

    #[test]
    fn precedence() {
        let r = ring();
        // -h^2 parses as -(h^2); 1+2*h^2 groups the product first.
        let p = parse_polynomial("-h^2", &r).unwrap();
        assert_eq!(p, Polynomial::variable(1, 0).pow(2).neg());
        let q = parse_polynomial("1+2*h^2", &r).unwrap();
        let expected = Polynomial::one(1).add(&Polynomial::variable(1, 0).pow(2).scale(&crate::int(2)));
        assert_eq!(q, expected);
    }

    #[test]
    fn errors_name_the_offending_token() {
        let r = ring();
        let err = parse_polynomial("h + y", &r).unwrap_err();
        assert!(format!("{err}").contains("`y`"));
        let err = parse_polynomial("h ^ x", &r).unwrap_err();
        assert!(format!("{err}").contains("exponent"));
        let err = parse_polynomial("(h + 1", &r).unwrap_err();
        assert!(format!("{err}").contains("end of input"));
        let err = parse_polynomial("h $ 2", &r).unwrap_err();
        assert!(format!("{err}").contains('$'));
    }
}
