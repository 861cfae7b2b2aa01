//! Recursive-descent parser for the polynomial expression grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' unary) | ('/' INT))*
//! unary   := '-' unary | power
//! power   := primary ('^' INT)?
//! primary := INT | IDENT | '(' expr ')'
//! ```
//!
//! Division is only by nonzero integer literals, exponents are
//! nonnegative integer literals, and multiplication is always explicit.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{is_identifier, MultiPoly, PolyError, VarTable};
use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Decimal,
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, PolyError> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let (tok, at) = lx.next_token()?;
            let done = tok == Tok::End;
            out.push((tok, at));
            if done {
                return Ok(out);
            }
        }
    }

    fn next_token(&mut self) -> Result<(Tok, usize), PolyError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        if b.is_ascii_digit() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if bytes.get(self.pos) == Some(&b'.') {
                self.pos += 1;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                return Ok((Tok::Decimal, start));
            }
            let value = self.src[start..self.pos].parse::<BigInt>().expect("digits");
            return Ok((Tok::Int(value), start));
        }
        if b.is_ascii_alphabetic() {
            while self.pos < bytes.len()
                && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = &self.src[start..self.pos];
            debug_assert!(is_identifier(name));
            return Ok((Tok::Ident(name.to_string()), start));
        }
        if b"+-*/^()".contains(&b) {
            self.pos += 1;
            return Ok((Tok::Sym(b as char), start));
        }
        let ch = self.src[start..].chars().next().unwrap();
        Err(PolyError::Syntax {
            pos: start,
            msg: format!("unexpected character {ch:?}"),
        })
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    vars: &'a VarTable,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.idx].clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Sym('/') => {
                    self.bump();
                    let at = self.pos();
                    match self.bump().0 {
                        Tok::Int(d) if d.is_zero() => return Err(PolyError::DivisionByZero),
                        Tok::Int(d) => acc = acc.scale(&Rational::new(1.into(), d)),
                        _ => {
                            return Err(PolyError::Syntax {
                                pos: at,
                                msg: "division is only allowed by an integer literal".into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, PolyError> {
        if self.peek() == &Tok::Sym('-') {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.primary()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let at = self.pos();
        let exponent = match self.bump().0 {
            Tok::Int(e) => e
                .to_u32()
                .ok_or_else(|| PolyError::Syntax {
                    pos: at,
                    msg: "exponent too large".into(),
                })?,
            Tok::Sym('-') => return Err(PolyError::NegativeExponent(at)),
            Tok::End => {
                return Err(PolyError::Syntax {
                    pos: at,
                    msg: "missing exponent".into(),
                })
            }
            _ => return Err(PolyError::NonIntegerExponent(at)),
        };
        if self.peek() == &Tok::Sym('^') {
            return self.syntax("chained exponents need parentheses");
        }
        Ok(base.pow(exponent))
    }

    fn primary(&mut self) -> Result<MultiPoly, PolyError> {
        let at = self.pos();
        match self.bump().0 {
            Tok::Int(v) => Ok(MultiPoly::constant(self.vars, Rational::from_integer(v))),
            Tok::Ident(name) => {
                if self.vars.index_of(&name).is_none() {
                    return Err(PolyError::UnknownVariable(name));
                }
                MultiPoly::var(self.vars, &name)
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if self.peek() != &Tok::Sym(')') {
                    return self.syntax("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::Decimal => Err(PolyError::Syntax {
                pos: at,
                msg: "decimal literals are not allowed in polynomials".into(),
            }),
            Tok::End => Err(PolyError::Syntax {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
            Tok::Sym(c) => Err(PolyError::Syntax {
                pos: at,
                msg: format!("unexpected {c:?}"),
            }),
        }
    }
}

/// Parses `text` into a polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &VarTable) -> Result<MultiPoly, PolyError> {
    let toks = Lexer::tokens(text)?;
    let mut parser = Parser { toks, idx: 0, vars };
    let p = parser.expr()?;
    if parser.peek() != &Tok::End {
        return parser.syntax("unexpected trailing input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::multipoly::poly;

    fn vt(names: &[&str]) -> VarTable {
        VarTable::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn parses_examples() {
        let p = parse_poly("720*y^4 + 1296*y^2 + 576", &vt(&["y"])).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "720*y^4 + 1296*y^2 + 576");

        let v = vt(&["x", "y"]);
        let p = parse_poly("(x - y)^2*(x*y + 1)^2", &v).unwrap();
        assert_eq!(p.num_terms(), 9);
        let at = [("x", int(2)), ("y", int(3))];
        assert_eq!(p.evaluate(&at).unwrap(), int(49));

        assert!(parse_poly("0", &vt(&["x"])).unwrap().is_zero());
    }

    #[test]
    fn precedence() {
        let v = ["x"];
        assert_eq!(poly("-x^2", &v), -&poly("x^2", &v));
        assert_eq!(poly("2*x/4", &v).to_string(), "1/2*x");
        assert_eq!(poly("1 - 2 - 3", &v).to_string(), "-4");
        assert_eq!(poly("--x", &v).to_string(), "x");
    }

    #[test]
    fn errors() {
        let v = vt(&["x", "y"]);
        assert_eq!(
            parse_poly("x + z", &v),
            Err(PolyError::UnknownVariable("z".into()))
        );
        assert_eq!(parse_poly("x^-2", &v), Err(PolyError::NegativeExponent(2)));
        assert_eq!(parse_poly("x^y", &v), Err(PolyError::NonIntegerExponent(2)));
        assert_eq!(parse_poly("x^1.5", &v), Err(PolyError::NonIntegerExponent(2)));
        assert_eq!(parse_poly("x/0", &v), Err(PolyError::DivisionByZero));
        assert!(matches!(
            parse_poly("x/y", &v),
            Err(PolyError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly("2 x", &v),
            Err(PolyError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly("(x + 1", &v),
            Err(PolyError::Syntax { pos: 6, .. })
        ));
        assert!(matches!(parse_poly("x $ 1", &v), Err(PolyError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("", &v), Err(PolyError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn printed_form_is_a_fixed_point() {
        let v = vt(&["x", "y", "z"]);
        let src = "-(x - 3/7*y)^3*(z + 2)/5 + x*y*z - 11";
        let p = parse_poly(src, &v).unwrap();
        let printed = p.to_string();
        let again = parse_poly(&printed, &v).unwrap();
        assert_eq!(again, p);
        assert_eq!(again.to_string(), printed);
    }
}
