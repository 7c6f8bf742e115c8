//! Parser for noncommutative polynomial expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := "-"? factor ("*"? factor)*
//! factor := primary ("^" nonneg-int)*
//! primary:= rational | name | "(" expr ")"
//! rational := int ("/" posint)?
//! ```
//!
//! Juxtaposition is multiplication and factor order is kept exactly. The
//! unary minus of a term applies to the whole product, so `-x*y` is
//! `-(x*y)`. An identifier that is not a generator name but spells a run of
//! single-letter generators (`xy`, `yxy`) is read as their product. Both `-`
//! and U+2212 are accepted as minus signs.

use ncring::pbw::DEGREE_CAP;
use ncring::{LiePresentation, NcPolynomial, Rational, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent larger than {DEGREE_CAP}")]
    ExponentTooLarge,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A syntax error at a byte offset of the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("name {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            chars.next();
            out.push((i, t));
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let n: BigInt = src[i..end].parse().expect("ascii digits");
            out.push((i, Tok::Int(n)));
        } else if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            out.push((i, Tok::Ident(src[i..end].to_string())));
        } else {
            return Err(ParseError {
                offset: i,
                kind: ParseErrorKind::UnexpectedChar(c),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    names: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn ngens(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            kind,
        })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<NcPolynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPolynomial, ParseError> {
        let negate = matches!(self.peek(), Some(Tok::Minus));
        if negate {
            self.pos += 1;
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<NcPolynomial, ParseError> {
        let mut base = self.primary()?;
        while let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(n)) => {
                    let n = n.clone();
                    if n > BigInt::from(DEGREE_CAP) {
                        return self.err(ParseErrorKind::ExponentTooLarge);
                    }
                    self.pos += 1;
                    let n: usize = n.try_into().expect("bounded by the cap");
                    base = base.pow(n);
                }
                Some(Tok::Minus) => return self.err(ParseErrorKind::NegativeExponent),
                _ => return self.unexpected(),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<NcPolynomial, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err(ParseErrorKind::UnexpectedEnd);
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek() {
                        Some(Tok::Int(d)) if d.is_zero() => {
                            return self.err(ParseErrorKind::ZeroDenominator)
                        }
                        Some(Tok::Int(d)) => {
                            value /= Rational::from_integer(d.clone());
                            self.pos += 1;
                        }
                        _ => return self.unexpected(),
                    }
                }
                Ok(NcPolynomial::constant(self.ngens(), value))
            }
            Tok::Ident(name) => {
                let letters = self.resolve(&name)?;
                self.pos += 1;
                Ok(NcPolynomial::monomial(
                    self.ngens(),
                    Word::new(letters),
                    Rational::one(),
                ))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.unexpected(),
                }
            }
            _ => self.unexpected(),
        }
    }

    fn resolve(&self, name: &str) -> Result<Vec<u8>, ParseError> {
        if let Some(i) = self.names.iter().position(|n| *n == name) {
            return Ok(vec![i as u8]);
        }
        let mut letters = Vec::new();
        for c in name.chars() {
            let mut buf = [0u8; 4];
            let s: &str = c.encode_utf8(&mut buf);
            match self.names.iter().position(|n| *n == s) {
                Some(i) => letters.push(i as u8),
                None => return self.err(ParseErrorKind::UnknownGenerator(name.to_string())),
            }
        }
        Ok(letters)
    }
}

/// Parse `text` over the generator names `names` (index order).
pub fn parse_with_names(text: &str, names: &[&str]) -> Result<NcPolynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        names,
    };
    let result = p.expr()?;
    if p.pos != p.toks.len() {
        return p.unexpected();
    }
    Ok(result)
}

/// Parse `text` over the generators of `presentation`.
pub fn parse(text: &str, presentation: &LiePresentation) -> Result<NcPolynomial, ParseError> {
    parse_with_names(text, &presentation.names())
}

/// Source text together with its parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExpression {
    pub source: String,
    pub polynomial: NcPolynomial,
    pub presentation: String,
}

impl ParsedExpression {
    pub fn new(
        source: &str,
        presentation: &LiePresentation,
        presentation_name: &str,
    ) -> Result<Self, ParseError> {
        Ok(Self {
            source: source.to_string(),
            polynomial: parse(source, presentation)?,
            presentation: presentation_name.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncring::identities::{w, x, y};
    use ncring::rational::rat;

    const XY: [&str; 2] = ["x", "y"];

    fn p(s: &str) -> NcPolynomial {
        parse_with_names(s, &XY).unwrap()
    }

    fn perr(s: &str) -> ParseError {
        parse_with_names(s, &XY).unwrap_err()
    }

    #[test]
    fn w2_transliteration() {
        assert_eq!(p("x*y^2 - y^2*x"), w(2, 0).unwrap().value);
        assert_eq!(p("x y^2 − y^2 x"), w(2, 0).unwrap().value);
    }

    #[test]
    fn w12_with_parentheses() {
        assert_eq!(p("(x*y - y*x)*x^2"), w(1, 2).unwrap().value);
    }

    #[test]
    fn juxtaposed_rational() {
        assert_eq!(p("3/2 * x y"), (&x() * &y()).scale(&rat(3, 2)));
        assert_eq!(p("xy"), &x() * &y());
        assert_eq!(p("2 3"), NcPolynomial::constant(2, rat(6, 1)));
    }

    #[test]
    fn precedence() {
        assert_eq!(p("x*y^2"), &x() * &y().pow(2));
        assert_eq!(p("-x*y"), -(&x() * &y()));
        assert_eq!(p("x - y x"), &x() - &(&y() * &x()));
        assert_eq!(p("(x+y)^2"), (&x() + &y()).pow(2));
        assert_eq!(p("x^2^3"), x().pow(6));
        assert_eq!(p("-1/2"), NcPolynomial::constant(2, rat(-1, 2)));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            perr("x + z"),
            ParseError {
                offset: 4,
                kind: ParseErrorKind::UnknownGenerator("z".into())
            }
        );
        assert_eq!(perr("x^-1").kind, ParseErrorKind::NegativeExponent);
        assert_eq!(perr("x^-1").offset, 2);
        assert_eq!(perr("x +").kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(perr("x +").offset, 3);
        assert_eq!(perr("(x").kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(perr("x $ y").kind, ParseErrorKind::UnexpectedChar('$'));
        assert_eq!(perr("1/0").kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(perr("x^100").kind, ParseErrorKind::ExponentTooLarge);
        assert!(matches!(perr("x )").kind, ParseErrorKind::UnexpectedToken(_)));
        assert!(matches!(perr("--x").kind, ParseErrorKind::UnexpectedToken(_)));
    }

    #[test]
    fn three_generator_names() {
        let names = ["e", "f", "g"];
        let q = parse_with_names("e+g", &names).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.ngens(), 3);
    }
}
