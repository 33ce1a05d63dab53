//! Parser for polynomial literals: `+`, `-`, `*`, `^`, parentheses, integer
//! coefficients, and declared variable names.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, FieldSpec};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    tokens: Vec<(usize, Token)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Vec<(usize, Token)>> {
        let mut lx = Lexer {
            src,
            pos: 0,
            tokens: Vec::new(),
        };
        lx.scan()?;
        Ok(lx.tokens)
    }

    fn scan(&mut self) -> Result<()> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() {
            let c = bytes[self.pos] as char;
            let start = self.pos;
            match c {
                ' ' | '\t' | '\n' | '\r' => {
                    self.pos += 1;
                }
                '+' => self.push(start, Token::Plus),
                '-' => self.push(start, Token::Minus),
                '*' => self.push(start, Token::Star),
                '^' => self.push(start, Token::Caret),
                '(' => self.push(start, Token::LParen),
                ')' => self.push(start, Token::RParen),
                '0'..='9' => {
                    let mut end = self.pos;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    let lit: BigInt = self.src[self.pos..end].parse().unwrap();
                    self.tokens.push((start, Token::Int(lit)));
                    self.pos = end;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut end = self.pos;
                    while end < bytes.len() {
                        let b = bytes[end] as char;
                        if b.is_ascii_alphanumeric() || b == '_' || b == '[' || b == ']' {
                            end += 1;
                        } else {
                            break;
                        }
                    }
                    self.tokens
                        .push((start, Token::Ident(self.src[self.pos..end].to_string())));
                    self.pos = end;
                }
                other => {
                    return Err(Error::PolyParse {
                        offset: start,
                        message: format!("unexpected character `{other}`"),
                    });
                }
            }
        }
        Ok(())
    }

    fn push(&mut self, at: usize, t: Token) {
        self.tokens.push((at, t));
        self.pos += 1;
    }
}

pub struct PolyParser<'a, K> {
    tokens: Vec<(usize, Token)>,
    idx: usize,
    vars: &'a BTreeMap<String, usize>,
    nvars: usize,
    spec: FieldSpec,
    src_len: usize,
    _marker: std::marker::PhantomData<K>,
}

/// Parses one polynomial literal against the given variable table.
pub fn parse_polynomial<K: FieldScalar>(
    src: &str,
    vars: &BTreeMap<String, usize>,
    nvars: usize,
    spec: FieldSpec,
) -> Result<Polynomial<K>> {
    let tokens = Lexer::run(src)?;
    let mut p = PolyParser::<K> {
        tokens,
        idx: 0,
        vars,
        nvars,
        spec,
        src_len: src.len(),
        _marker: std::marker::PhantomData,
    };
    let poly = p.expr()?;
    if p.idx != p.tokens.len() {
        return Err(Error::PolyParse {
            offset: p.tokens[p.idx].0,
            message: "trailing input".to_string(),
        });
    }
    Ok(poly)
}

impl<'a, K: FieldScalar> PolyParser<'a, K> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.idx)
            .map(|(o, _)| *o)
            .unwrap_or(self.src_len)
    }

    fn expr(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<K>> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some((_, Token::Int(e))) => {
                    let e: u32 = u32::try_from(&e).map_err(|_| Error::PolyParse {
                        offset: at,
                        message: "exponent out of range".to_string(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::PolyParse {
                    offset: at,
                    message: "expected integer exponent after `^`".to_string(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<K>> {
        let at = self.here();
        match self.bump() {
            Some((_, Token::Minus)) => Ok(self.factor()?.neg()),
            Some((_, Token::Int(n))) => Ok(Polynomial::constant(
                K::embed(&self.spec, &n),
                self.nvars,
            )),
            Some((off, Token::Ident(name))) => match self.vars.get(&name) {
                Some(&i) => Ok(Polynomial::var(i, self.nvars)),
                None => Err(Error::PolyParse {
                    offset: off,
                    message: format!("unknown variable `{name}`"),
                }),
            },
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some((_, Token::RParen)) => Ok(inner),
                    _ => Err(Error::PolyParse {
                        offset: at,
                        message: "expected `)`".to_string(),
                    }),
                }
            }
            _ => Err(Error::PolyParse {
                offset: at,
                message: "expected a term".to_string(),
            }),
        }
    }
}

/// Builds the variable table for an ambient list of names.
pub fn var_table(names: &[String]) -> BTreeMap<String, usize> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};
    use crate::poly::MonomialOrder;

    fn nm(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_spec_style_literal() {
        let names = nm(&["x0", "x1"]);
        let vars = var_table(&names);
        let p =
            parse_polynomial::<Rat>("x0*x1 - 1", &vars, 2, FieldSpec::Rationals).unwrap();
        assert_eq!(p.render(&names, MonomialOrder::Lex), "x0*x1 - 1");
    }

    #[test]
    fn parses_powers_parens_unary_minus() {
        let names = nm(&["x", "y"]);
        let vars = var_table(&names);
        let p = parse_polynomial::<Fp>(
            "-(x + y)^2 + 3*x^2",
            &vars,
            2,
            FieldSpec::Fp(5),
        )
        .unwrap();
        // -(x+y)^2 + 3x^2 = 2x^2 - 2xy - y^2 = 2x^2 + 3xy + 4y^2 mod 5
        assert_eq!(p.render(&names, MonomialOrder::Lex), "2*x^2 + 3*x*y + 4*y^2");
    }

    #[test]
    fn unknown_variable_is_positioned() {
        let names = nm(&["x"]);
        let vars = var_table(&names);
        let err =
            parse_polynomial::<Rat>("x + zz", &vars, 1, FieldSpec::Rationals).unwrap_err();
        match err {
            Error::PolyParse { offset, message } => {
                assert_eq!(offset, 4);
                assert!(message.contains("zz"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_garbage() {
        let names = nm(&["x"]);
        let vars = var_table(&names);
        assert!(parse_polynomial::<Rat>("x +", &vars, 1, FieldSpec::Rationals).is_err());
        assert!(parse_polynomial::<Rat>("x ? 1", &vars, 1, FieldSpec::Rationals).is_err());
        assert!(parse_polynomial::<Rat>("(x", &vars, 1, FieldSpec::Rationals).is_err());
    }
}
