//! Text syntax for models and vector fields.
//!
//! Expressions use rational literals, the unit `i`, the variables `z1 z2`
//! (with `zb1 zb2` or `conj(...)` for conjugates), `Re(...)`, `Im(...)`,
//! `+ - * / ^` (`**` is a synonym for `^`) and parentheses. Field
//! expressions additionally allow `w` and the markers `d/dz1 d/dz2 d/dw`.
//! Division is only by nonzero constants. A model file is one expression,
//! optionally preceded by a line `weights: p/q, r/s`; `#` starts a comment.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{GaussRational, Poly, RealPoly, Var};
use crate::fields::VectorField;
use crate::grading::Weight;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    /// Byte offset into the input.
    pub offset: usize,
    /// 1-based line.
    pub line: usize,
    /// 1-based column, counted in characters.
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {0}")]
    Syntax(ParseDiagnostic),
    #[error("expression is not real-valued at {0}")]
    NotReal(ParseDiagnostic),
    #[error("variable not allowed in a model at {0}")]
    WIllegal(ParseDiagnostic),
    #[error("antiholomorphic coefficient at {0}")]
    AntiholomorphicCoefficient(ParseDiagnostic),
}

impl ParseError {
    pub fn diagnostic(&self) -> &ParseDiagnostic {
        match self {
            ParseError::Syntax(d) | ParseError::NotReal(d) | ParseError::WIllegal(d) | ParseError::AntiholomorphicCoefficient(d) => d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Deriv(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Deriv(1) => "`d/dz1`".into(),
            Tok::Deriv(2) => "`d/dz2`".into(),
            Tok::Deriv(_) => "`d/dw`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn diagnostic(src: &str, offset: usize, message: String, expected: &[&str]) -> ParseDiagnostic {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    ParseDiagnostic { offset, line, column, message, expected: expected.iter().map(|s| s.to_string()).collect() }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(src[start..i].parse().expect("digits"))
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                for (text, j) in [("d/dz1", 1), ("d/dz2", 2), ("d/dw", 3)] {
                    if src[i..].starts_with(text) && !src[i + text.len()..].starts_with(|ch: char| ch.is_ascii_alphanumeric()) {
                        i += text.len();
                        out.push((Tok::Deriv(j), start));
                        break;
                    }
                }
                if i != start {
                    continue;
                }
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                Tok::Ident(src[start..i].to_string())
            }
            b'+' => {
                i += 1;
                Tok::Plus
            }
            b'-' => {
                i += 1;
                Tok::Minus
            }
            b'*' if bytes.get(i + 1) == Some(&b'*') => {
                i += 2;
                Tok::Caret
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'/' => {
                i += 1;
                Tok::Slash
            }
            b'^' => {
                i += 1;
                Tok::Caret
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(ParseError::Syntax(diagnostic(src, start, format!("unexpected character `{ch}`"), &[])));
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Real,
    Field,
}

#[derive(Debug, Clone)]
enum Value {
    Scalar(Poly),
    Field([Poly; 3]),
}

const ATOM_START: &[&str] = &["number", "variable", "i", "(", "-", "Re", "Im", "conj"];

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, mode: Mode) -> Result<Self, ParseError> {
        Ok(Self { src, toks: lex(src)?, pos: 0, mode })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax(&self, offset: usize, message: String, expected: &[&str]) -> ParseError {
        ParseError::Syntax(diagnostic(self.src, offset, message, expected))
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        self.syntax(self.offset(), format!("unexpected {}", self.peek().describe()), expected)
    }

    fn parse_all(&mut self) -> Result<Value, ParseError> {
        if *self.peek() == Tok::End {
            return Err(self.syntax(self.offset(), "empty expression".into(), ATOM_START));
        }
        let v = self.expr()?;
        if *self.peek() != Tok::End {
            return Err(self.unexpected(&["+", "-", "*", "/", "^", "end of input"]));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            let (sign, at) = match self.peek() {
                Tok::Plus => (1, self.offset()),
                Tok::Minus => (-1, self.offset()),
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.term()?;
            let rhs = if sign < 0 { negate(rhs) } else { rhs };
            acc = self.add(acc, rhs, at)?;
        }
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    let at = self.offset();
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.mul(acc, rhs, at)?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let rhs = self.unary()?;
                    let c = match &rhs {
                        Value::Scalar(p) => p.constant_value(),
                        Value::Field(_) => None,
                    };
                    let c = c.ok_or_else(|| self.syntax(at, "division is only allowed by constants".into(), &["number"]))?;
                    if c.is_zero() {
                        return Err(self.syntax(at, "division by zero".into(), &[]));
                    }
                    let inv = &GaussRational::from_int(1) / &c;
                    acc = scale(acc, &inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(negate(self.unary()?))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base_at = self.offset();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let e = match self.bump().0 {
            Tok::Int(n) => n,
            t => return Err(self.syntax(at, format!("unexpected {} in exponent", t.describe()), &["number"])),
        };
        let e = u32::try_from(&e)
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| self.syntax(at, format!("exponent exceeds {MAX_EXPONENT}"), &[]))?;
        match base {
            Value::Scalar(p) => Ok(Value::Scalar(p.pow(e))),
            Value::Field(_) => Err(self.syntax(base_at, "a vector field cannot be raised to a power".into(), &[])),
        }
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Value::Scalar(Poly::constant(GaussRational::from_real(BigRational::from_integer(n)))))
            }
            Tok::LParen => {
                self.bump();
                let v = self.expr()?;
                self.expect_rparen()?;
                Ok(v)
            }
            Tok::Deriv(j) => {
                self.bump();
                if self.mode == Mode::Real {
                    return Err(self.syntax(at, "derivative markers are only allowed in vector fields".into(), ATOM_START));
                }
                let mut comps = [Poly::zero(), Poly::zero(), Poly::zero()];
                comps[j - 1] = Poly::one();
                Ok(Value::Field(comps))
            }
            Tok::Ident(name) => {
                self.bump();
                self.ident(&name, at)
            }
            _ => Err(self.unexpected(ATOM_START)),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[")", "+", "-", "*", "/", "^"]))
        }
    }

    fn antiholomorphic(&self, at: usize, what: &str) -> ParseError {
        ParseError::AntiholomorphicCoefficient(diagnostic(self.src, at, format!("`{what}` is not holomorphic"), &[]))
    }

    fn ident(&mut self, name: &str, at: usize) -> Result<Value, ParseError> {
        let var = |v: Var| Ok(Value::Scalar(Poly::var(v)));
        match name {
            "i" => Ok(Value::Scalar(Poly::constant(GaussRational::i()))),
            "z1" => var(Var::Z1),
            "z2" => var(Var::Z2),
            "zb1" | "zb2" if self.mode == Mode::Field => Err(self.antiholomorphic(at, name)),
            "zb1" => var(Var::Zb1),
            "zb2" => var(Var::Zb2),
            "w" if self.mode == Mode::Field => var(Var::W),
            "w" | "u" => Err(ParseError::WIllegal(diagnostic(self.src, at, format!("`{name}` cannot appear here"), &[]))),
            "conj" | "Re" | "Im" => {
                if *self.peek() != Tok::LParen {
                    return Err(self.unexpected(&["("]));
                }
                self.bump();
                let arg_at = self.offset();
                let arg = match self.expr()? {
                    Value::Scalar(p) => p,
                    Value::Field(_) => return Err(self.syntax(arg_at, format!("`{name}` needs a scalar argument"), &[])),
                };
                self.expect_rparen()?;
                if self.mode == Mode::Field && arg.constant_value().is_none() && !arg.is_zero() {
                    return Err(self.antiholomorphic(at, name));
                }
                let half = GaussRational::ratio(1, 2);
                let re = |p: &Poly| (p + &p.conj()).scale(&half);
                Ok(Value::Scalar(match name {
                    "conj" => arg.conj(),
                    "Re" => re(&arg),
                    _ => re(&arg.scale(&-GaussRational::i())),
                }))
            }
            _ => Err(self.syntax(at, format!("unknown identifier `{name}`"), &["z1", "z2", "zb1", "zb2", "i", "Re", "Im", "conj"])),
        }
    }

    fn add(&self, a: Value, b: Value, at: usize) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(&p + &q)),
            (Value::Field(f), Value::Field(g)) => Ok(Value::Field([&f[0] + &g[0], &f[1] + &g[1], &f[2] + &g[2]])),
            _ => Err(self.syntax(at, "cannot add a scalar to a vector field".into(), &[])),
        }
    }

    fn mul(&self, a: Value, b: Value, at: usize) -> Result<Value, ParseError> {
        match (a, b) {
            (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(&p * &q)),
            (Value::Scalar(p), Value::Field(f)) | (Value::Field(f), Value::Scalar(p)) => Ok(Value::Field(f.map(|c| &p * &c))),
            (Value::Field(_), Value::Field(_)) => Err(self.syntax(at, "cannot multiply two vector fields".into(), &[])),
        }
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(p) => Value::Scalar(-p),
        Value::Field(f) => Value::Field(f.map(|c| -c)),
    }
}

fn scale(v: Value, c: &GaussRational) -> Value {
    match v {
        Value::Scalar(p) => Value::Scalar(p.scale(c)),
        Value::Field(f) => Value::Field(f.map(|p| p.scale(c))),
    }
}

pub fn parse_real_poly(src: &str) -> Result<RealPoly, ParseError> {
    let mut parser = Parser::new(src, Mode::Real)?;
    let start = parser.offset();
    match parser.parse_all()? {
        Value::Scalar(p) => RealPoly::try_from(p).map_err(|_| ParseError::NotReal(diagnostic(src, start, "imaginary part does not vanish".into(), &[]))),
        Value::Field(_) => Err(ParseError::Syntax(diagnostic(src, start, "expected a polynomial, found a vector field".into(), &[]))),
    }
}

pub fn parse_field(src: &str) -> Result<VectorField, ParseError> {
    let mut parser = Parser::new(src, Mode::Field)?;
    let start = parser.offset();
    match parser.parse_all()? {
        Value::Field([f1, f2, g]) => Ok(VectorField::new(f1, f2, g).expect("holomorphic components")),
        Value::Scalar(p) if p.is_zero() => Ok(VectorField::zero()),
        Value::Scalar(_) => Err(ParseError::Syntax(diagnostic(src, start, "expected a vector field, found a scalar".into(), &["d/dz1", "d/dz2", "d/dw"]))),
    }
}

/// A model file: the polynomial and the optional declared weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    pub poly: RealPoly,
    pub weight: Option<Weight>,
}

/// Comments and the `weights:` line are blanked out so diagnostics keep
/// their offsets into the original text.
pub fn parse_model_file(src: &str) -> Result<ModelFile, ParseError> {
    let mut masked = String::with_capacity(src.len());
    let mut weight = None;
    let mut seen_expr = false;
    let mut line_start = 0;
    for line in src.split_inclusive('\n') {
        let body_len = line.find('#').unwrap_or(line.trim_end_matches(['\n', '\r']).len());
        let body = &line[..body_len];
        let trimmed = body.trim_start();
        if let Some(rest) = trimmed.strip_prefix("weights:") {
            let rest_at = line_start + body_len - rest.len();
            if seen_expr || weight.is_some() {
                return Err(ParseError::Syntax(diagnostic(src, line_start + body_len - trimmed.len(), "`weights:` must precede the expression and appear once".into(), &[])));
            }
            let w: Weight = rest.parse().map_err(|e: String| ParseError::Syntax(diagnostic(src, rest_at, e, &["p/q, r/s"])))?;
            weight = Some(w);
            blank(&mut masked, line);
            pad_to(&mut masked, line_start + line.len());
        } else {
            if !trimmed.trim().is_empty() {
                seen_expr = true;
            }
            masked.push_str(body);
            blank(&mut masked, &line[body_len..]);
            pad_to(&mut masked, line_start + line.len());
        }
        line_start += line.len();
    }
    let poly = parse_real_poly(&masked).map_err(|e| rebase(e, src))?;
    Ok(ModelFile { poly, weight })
}

fn blank(out: &mut String, text: &str) {
    out.extend(text.chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
}

/// Multibyte characters in blanked regions are replaced by single spaces;
/// pad so byte offsets still line up.
fn pad_to(s: &mut String, len: usize) {
    while s.len() < len {
        s.push(' ');
    }
}

fn rebase(e: ParseError, src: &str) -> ParseError {
    let fix = |d: ParseDiagnostic| diagnostic(src, d.offset, d.message, &d.expected.iter().map(String::as_str).collect::<Vec<_>>());
    match e {
        ParseError::Syntax(d) => ParseError::Syntax(fix(d)),
        ParseError::NotReal(d) => ParseError::NotReal(fix(d)),
        ParseError::WIllegal(d) => ParseError::WIllegal(fix(d)),
        ParseError::AntiholomorphicCoefficient(d) => ParseError::AntiholomorphicCoefficient(fix(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, RealPoly};
    use proptest::prelude::*;

    fn real(p: Poly) -> RealPoly {
        RealPoly::try_from(p).unwrap()
    }

    #[test]
    fn models() {
        let p = parse_real_poly("Re(z1 * conj(z2)^2)").unwrap();
        assert_eq!(p, Poly::monomial(Monomial::mixed(1, 0, 0, 2)).re_part().unwrap());
        let q = parse_real_poly("z1*conj(z1) + z2*conj(z2)").unwrap();
        assert_eq!(q, real(&Poly::monomial(Monomial::mixed(1, 0, 1, 0)) + &Poly::monomial(Monomial::mixed(0, 1, 0, 1))));
        assert_eq!(parse_real_poly("z1 ** 1 * zb1").unwrap(), parse_real_poly("Re(z1*zb1)").unwrap());
        assert_eq!(parse_real_poly("Im(i*z1*zb2) ").unwrap(), parse_real_poly("Re(z1*zb2)").unwrap());
        assert_eq!(parse_real_poly("1/2*z1*zb1 + z1*zb1/2").unwrap(), parse_real_poly("z1*zb1").unwrap());
    }

    #[test]
    fn model_errors() {
        assert!(matches!(parse_real_poly("z1^2"), Err(ParseError::NotReal(_))));
        let e = parse_real_poly("z1*zb1 + w").unwrap_err();
        assert!(matches!(e, ParseError::WIllegal(_)));
        assert_eq!(e.diagnostic().offset, 9);
        let e = parse_real_poly("z1 +* zb1").unwrap_err();
        assert!(matches!(e, ParseError::Syntax(_)));
        assert_eq!(e.diagnostic().offset, 4);
        assert!(!e.diagnostic().expected.is_empty());
        let e = parse_real_poly("z1*zb1\n + z3").unwrap_err();
        assert_eq!((e.diagnostic().line, e.diagnostic().column), (2, 4));
        assert_eq!(parse_real_poly("z1/z2").unwrap_err().diagnostic().offset, 3);
        assert_eq!(parse_real_poly("z1/0").unwrap_err().diagnostic().offset, 3);
        assert!(parse_real_poly("z1^65").is_err());
        assert!(parse_real_poly("(z1*zb1").is_err());
        assert!(parse_real_poly("").is_err());
        assert!(parse_real_poly("z1*zb1 $").is_err());
        assert!(matches!(parse_real_poly("d/dz1"), Err(ParseError::Syntax(_))));
    }

    #[test]
    fn fields() {
        let y = parse_field("i*z2^2*d/dz1").unwrap();
        assert_eq!(y, VectorField::new(Poly::term(Monomial::holo(0, 2), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap());
        let y = parse_field("z1^2*d/dz1 - z1*z2*d/dz2").unwrap();
        assert_eq!(y, VectorField::new(Poly::monomial(Monomial::holo(2, 0)), -Poly::monomial(Monomial::holo(1, 1)), Poly::zero()).unwrap());
        assert_eq!(parse_field("2*w*d/dw").unwrap().g, Poly::var(Var::W).scale(&GaussRational::from_int(2)));
        let e = parse_field("conj(z1)*d/dz1").unwrap_err();
        assert!(matches!(e, ParseError::AntiholomorphicCoefficient(_)));
        assert_eq!(e.diagnostic().offset, 0);
        assert!(matches!(parse_field("z1*zb2*d/dz1"), Err(ParseError::AntiholomorphicCoefficient(_))));
        assert!(matches!(parse_field("d/dz1*d/dz2"), Err(ParseError::Syntax(_))));
        assert!(matches!(parse_field("z1 + d/dz1"), Err(ParseError::Syntax(_))));
        assert!(matches!(parse_field("z1"), Err(ParseError::Syntax(_))));
    }

    #[test]
    fn model_files() {
        let f = parse_model_file("# shear\nweights: 1/3, 1/3\nRe(z1*zb2^2) # model\n").unwrap();
        assert_eq!(f.weight, Some(Weight::from_ratios(1, 3, 1, 3)));
        assert_eq!(f.poly, parse_real_poly("Re(z1*zb2^2)").unwrap());
        assert_eq!(parse_model_file("z1*zb1 +\n z2*zb2").unwrap().weight, None);
        let e = parse_model_file("weights: 1/3, 1/3\nz1*zb1 + # é\n w").unwrap_err();
        assert!(matches!(e, ParseError::WIllegal(_)));
        assert_eq!((e.diagnostic().line, e.diagnostic().column), (3, 2));
        let e = parse_model_file("weights: 1/3; 1/3\nz1*zb1").unwrap_err();
        assert_eq!(e.diagnostic().offset, 8);
        assert!(parse_model_file("z1*zb1\nweights: 1/2, 1/2").is_err());
    }

    fn small_coeff() -> impl Strategy<Value = GaussRational> {
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| GaussRational::complex(a, b, c, d))
    }

    fn real_poly() -> impl Strategy<Value = RealPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), small_coeff()), 0..5).prop_map(|terms| {
            let p = Poly::from_terms(terms.into_iter().map(|((a, b, c, d), k)| (Monomial::mixed(a, b, c, d), k)));
            real(&p + &p.conj())
        })
    }

    fn holo() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), small_coeff()), 0..4)
            .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|((a, b, l), k)| (Monomial::new(a, b, 0, 0, 0, l), k))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn print_parse_real(p in real_poly()) {
            let text = p.to_string();
            let back = parse_real_poly(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn print_parse_field(f1 in holo(), f2 in holo(), g in holo()) {
            let x = VectorField::new(f1, f2, g).unwrap();
            let text = x.to_string();
            let back = parse_field(&text).unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
