//! ASCII syntax for polynomials: parsing against a variable-name list and
//! canonical display. `3*x^2*y - z + 1` style; `^` for powers, `*` optional
//! between a coefficient and a variable is not supported — terms are
//! `*`-separated factors, which keeps the grammar unambiguous.

use crate::error::Error;
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
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
    line: usize,
    col: usize,
    toks: Vec<(Tok, usize, usize)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Vec<(Tok, usize, usize)>, Error> {
        let mut lx = Lexer {
            src,
            pos: 0,
            line: 1,
            col: 1,
            toks: Vec::new(),
        };
        lx.lex()?;
        Ok(lx.toks)
    }

    fn lex(&mut self) -> Result<(), Error> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() {
            let (line, col) = (self.line, self.col);
            let c = bytes[self.pos] as char;
            match c {
                ' ' | '\t' => self.bump(1),
                '\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.col = 1;
                }
                '+' => self.push(Tok::Plus, line, col, 1),
                '-' => self.push(Tok::Minus, line, col, 1),
                '*' => self.push(Tok::Star, line, col, 1),
                '^' => self.push(Tok::Caret, line, col, 1),
                '(' => self.push(Tok::LParen, line, col, 1),
                ')' => self.push(Tok::RParen, line, col, 1),
                '0'..='9' => {
                    let start = self.pos;
                    while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                        self.bump(1);
                    }
                    let text = &self.src[start..self.pos];
                    let n: u64 = text
                        .parse()
                        .map_err(|_| Error::parse(line, col, format!("integer too large: {text}")))?;
                    self.toks.push((Tok::Int(n), line, col));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.pos < bytes.len()
                        && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                    {
                        self.bump(1);
                    }
                    self.toks
                        .push((Tok::Ident(self.src[start..self.pos].to_string()), line, col));
                }
                other => {
                    return Err(Error::parse(line, col, format!("unexpected character {other:?}")))
                }
            }
        }
        Ok(())
    }

    fn bump(&mut self, n: usize) {
        self.pos += n;
        self.col += n;
    }

    fn push(&mut self, t: Tok, line: usize, col: usize, width: usize) {
        self.toks.push((t, line, col));
        self.bump(width);
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize, usize)],
    i: usize,
    field: PrimeField,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.i).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.i)
            .or_else(|| self.toks.last())
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.i).map(|(t, _, _)| t);
        self.i += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.checked_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.checked_sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let f = self.factor()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        let (line, col) = self.here();
        match self.next() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(self.field, self.vars.len(), *n)),
            Some(Tok::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::parse(line, col, format!("unknown variable {name}")))?;
                let base = Polynomial::var(self.field, self.vars.len(), idx);
                self.maybe_power(base)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let (l2, c2) = self.here();
                match self.next() {
                    Some(Tok::RParen) => self.maybe_power(inner),
                    _ => Err(Error::parse(l2, c2, "expected )")),
                }
            }
            other => Err(Error::parse(
                line,
                col,
                format!("expected a term, found {other:?}"),
            )),
        }
    }

    fn maybe_power(&mut self, base: Polynomial) -> Result<Polynomial, Error> {
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let (line, col) = self.here();
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e = u32::try_from(*e)
                        .map_err(|_| Error::parse(line, col, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::parse(line, col, "expected an exponent")),
            }
        } else {
            Ok(base)
        }
    }
}

/// Parse a polynomial expression over the named variables.
pub fn parse_polynomial(src: &str, field: PrimeField, vars: &[String]) -> Result<Polynomial, Error> {
    let toks = Lexer::run(src)?;
    if toks.is_empty() {
        return Err(Error::parse(1, 1, "empty polynomial"));
    }
    let mut p = Parser {
        toks: &toks,
        i: 0,
        field,
        vars,
    };
    let poly = p.expr()?;
    if p.i != toks.len() {
        let (line, col) = p.here();
        return Err(Error::parse(line, col, "trailing input"));
    }
    Ok(poly)
}

/// Canonical display: terms descending under grevlex, coefficients as
/// canonical residues, `*` between factors, `^` for exponents.
pub fn format_polynomial(p: &Polynomial, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ord = MonomialOrder::GrevLex;
    let mut terms: Vec<(&Monomial, u64)> = p.terms().iter().map(|(m, c)| (m, *c)).collect();
    terms.sort_by(|a, b| ord.cmp(b.0, a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if *c != 1 || m.is_one() {
            factors.push(c.to_string());
        }
        for (v, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(vars[v].clone());
            } else {
                factors.push(format!("{}^{}", vars[v], e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_spec_syntax() {
        let f = PrimeField::new(7).unwrap();
        let vs = vars(&["x", "y", "z"]);
        let p = parse_polynomial("3*x^2*y - z + 1", f, &vs).unwrap();
        assert_eq!(format_polynomial(&p, &vs), "3*x^2*y + 6*z + 1");
    }

    #[test]
    fn negative_coefficients_become_residues() {
        let f = PrimeField::new(7).unwrap();
        let vs = vars(&["x"]);
        let p = parse_polynomial("-x", f, &vs).unwrap();
        assert_eq!(format_polynomial(&p, &vs), "6*x");
    }

    #[test]
    fn parenthesized_powers() {
        let f = PrimeField::new(7).unwrap();
        let vs = vars(&["x", "y"]);
        let p = parse_polynomial("(x+y)^2", f, &vs).unwrap();
        let q = parse_polynomial("x^2 + 2*x*y + y^2", f, &vs).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unknown_variable_is_an_error_with_position() {
        let f = PrimeField::new(7).unwrap();
        let vs = vars(&["x"]);
        match parse_polynomial("x + w", f, &vs) {
            Err(Error::Parse { line: 1, col: 5, .. }) => {}
            other => panic!("expected parse error at 1:5, got {other:?}"),
        }
    }

    #[test]
    fn round_trips_canonical_form() {
        let f = PrimeField::new(7).unwrap();
        let vs = vars(&["x", "y", "z"]);
        for src in [
            "x^3+y^3+z^3",
            "3*x^2*y - z + 1",
            "x*y*z",
            "5",
            "0",
            "x - x",
            "z^2 + 6*x*y",
        ] {
            let p = parse_polynomial(src, f, &vs).unwrap();
            let shown = format_polynomial(&p, &vs);
            let q = parse_polynomial(&shown, f, &vs).unwrap();
            assert_eq!(p, q, "round trip through {shown:?}");
        }
    }

    #[test]
    fn rejects_garbage() {
        let f = PrimeField::new(7).unwrap();
        let vs = vars(&["x"]);
        assert!(parse_polynomial("x +", f, &vs).is_err());
        assert!(parse_polynomial("(x", f, &vs).is_err());
        assert!(parse_polynomial("x ^ y", f, &vs).is_err());
        assert!(parse_polynomial("", f, &vs).is_err());
        assert!(parse_polynomial("x $ y", f, &vs).is_err());
    }
}
