//! Text input for polynomials, group algebra elements, and words.
//!
//! The grammar is the obvious one: terms separated by `+` and `-`, factors
//! juxtaposed (an optional `*` is tolerated), rational coefficients written
//! `p` or `p/q`, exponents with `^`, and parentheses for grouping. Negative
//! exponents are accepted only by the group-mode entry points.

use num::One;

use crate::error::{Error, Result};
use crate::group::{GroupAlgElem, GroupWord, SignedLetter};
use crate::poly::NcPoly;
use crate::rational::{rat, Rational};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Monoid,
    Group,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    mode: Mode,
}

pub fn parse_poly(text: &str) -> Result<NcPoly> {
    let elem = Parser::new(text, Mode::Monoid).run()?;
    Ok(elem
        .to_ncpoly()
        .expect("monoid mode produces no inverse letters"))
}

pub fn parse_group(text: &str) -> Result<GroupAlgElem> {
    Parser::new(text, Mode::Group).run()
}

pub fn parse_word(text: &str) -> Result<Word> {
    let poly = parse_poly(text)?;
    let mut terms = poly.iter();
    match (terms.next(), terms.next()) {
        (Some((word, coeff)), None) if coeff.is_one() => Ok(word.clone()),
        _ => Err(Error::Parse {
            position: 0,
            message: "expected a single word with coefficient 1".into(),
        }),
    }
}

pub fn parse_group_word(text: &str) -> Result<GroupWord> {
    let elem = parse_group(text)?;
    let mut terms = elem.iter();
    match (terms.next(), terms.next()) {
        (Some((word, coeff)), None) if coeff.is_one() => Ok(word.clone()),
        _ => Err(Error::Parse {
            position: 0,
            message: "expected a single group word with coefficient 1".into(),
        }),
    }
}

impl Parser {
    fn new(text: &str, mode: Mode) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, mode }
    }

    fn run(mut self) -> Result<GroupAlgElem> {
        self.skip_ws();
        if self.peek().is_none() {
            return self.fail("empty expression");
        }
        let elem = self.expr()?;
        self.skip_ws();
        match self.peek() {
            None => Ok(elem),
            Some(c) => self.fail(&format!("unexpected character '{c}'")),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn fail<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '\u{2212}'
    }

    fn expr(&mut self) -> Result<GroupAlgElem> {
        self.skip_ws();
        let mut negate = false;
        if let Some(c) = self.peek() {
            if Self::is_minus(c) {
                self.bump();
                negate = true;
            } else if c == '+' {
                self.bump();
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(c) if Self::is_minus(c) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GroupAlgElem> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_digit() || c.is_ascii_lowercase() || c == '(' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GroupAlgElem> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.rational()?;
                Ok(GroupAlgElem::term(GroupWord::identity(), coeff))
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.bump();
                let letter = Letter::from_char(c).expect("checked ascii lowercase");
                let exponent = self.exponent()?;
                let signed = if exponent < 0 {
                    SignedLetter::inverted(letter)
                } else {
                    SignedLetter::plain(letter)
                };
                let word =
                    GroupWord::from_signed(vec![signed; exponent.unsigned_abs() as usize]);
                Ok(GroupAlgElem::monomial(word))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return self.fail("expected ')'");
                }
                self.bump();
                let exponent = self.exponent()?;
                self.power(inner, exponent)
            }
            Some(c) => self.fail(&format!("expected a coefficient, letter, or '(', found '{c}'")),
            None => self.fail("expected a coefficient, letter, or '('"),
        }
    }

    fn power(&mut self, base: GroupAlgElem, exponent: i64) -> Result<GroupAlgElem> {
        if exponent >= 0 {
            return Ok(base.pow(exponent as usize));
        }
        let mut terms = base.iter();
        let inverted = match (terms.next(), terms.next()) {
            (Some((word, coeff)), None) => {
                GroupAlgElem::term(word.inverse(), coeff.recip())
            }
            _ => return self.fail("only a single term can carry a negative exponent"),
        };
        Ok(inverted.pow(exponent.unsigned_abs() as usize))
    }

    /// Reads `^n` or `^-n` if present; a bare factor means exponent 1.
    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        let mut negative = false;
        if self.peek().is_some_and(Self::is_minus) {
            self.bump();
            negative = true;
        }
        let magnitude = self.integer()?;
        if negative && self.mode == Mode::Monoid {
            return self.fail("negative exponents need group mode");
        }
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.integer()?;
        if self.peek() == Some('/') {
            self.bump();
            let denom = self.integer()?;
            if denom == 0 {
                return self.fail("zero denominator");
            }
            Ok(Rational::new(numer.into(), denom.into()))
        } else {
            Ok(rat(numer))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let mut value: i64 = 0;
        let mut any = false;
        while let Some(c) = self.peek() {
            let Some(digit) = c.to_digit(10) else { break };
            self.bump();
            any = true;
            value = match value.checked_mul(10).and_then(|v| v.checked_add(digit as i64)) {
                Some(v) => v,
                None => return self.fail("number too large"),
            };
        }
        if !any {
            return self.fail("expected a number");
        }
        Ok(value)
    }
}

/// Restricts a parsed polynomial to two letters and reads off, for each
/// term, how many times each letter occurs. Word order within a term is
/// deliberately ignored: the result lives in a commutative polynomial ring.
pub fn commutative_pairs(
    poly: &NcPoly,
    first: Letter,
    second: Letter,
) -> Result<Vec<((u32, u32), Rational)>> {
    let mut out = Vec::new();
    for (word, coeff) in poly.iter() {
        let mut counts = (0u32, 0u32);
        for &l in word.letters() {
            if l == first {
                counts.0 += 1;
            } else if l == second {
                counts.1 += 1;
            } else {
                return Err(Error::ForeignLetter(l.as_char()));
            }
        }
        out.push((counts, coeff.clone()));
    }
    Ok(out)
}
