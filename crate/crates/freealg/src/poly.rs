//! Polynomials in the free associative algebra over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::{Letter, MonomialOrder, Word};

/// A finite rational linear combination of words. Terms are stored in a map
/// keyed by `Word`, whose `Ord` is the default deglex order, so iteration
/// yields ascending terms and the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::monomial(Word::empty())
    }

    pub fn monomial(word: Word) -> Self {
        NcPoly::term(word, Rational::one())
    }

    pub fn term(word: Word, coeff: Rational) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn constant(c: Rational) -> Self {
        NcPoly::term(Word::empty(), c)
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending deglex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(Word::degree)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Splits off the top homogeneous component. Returns the total degree,
    /// the leading homogeneous component, and the leading term under the
    /// default order.
    pub fn degree_split(&self) -> Result<(usize, NcPoly, (Word, Rational))> {
        let degree = self.degree()?;
        let mut component = NcPoly::zero();
        for (w, c) in &self.terms {
            if w.degree() == degree {
                component.add_term(w.clone(), c.clone());
            }
        }
        let (lead_word, lead_coeff) = self.terms.iter().next_back().expect("nonzero");
        Ok((degree, component, (lead_word.clone(), lead_coeff.clone())))
    }

    /// Leading term under an arbitrary order.
    pub fn leading_term_with(&self, order: &MonomialOrder) -> Option<(&Word, &Rational)> {
        self.terms.iter().reduce(|best, cand| {
            if order.cmp_words(cand.0, best.0) == std::cmp::Ordering::Greater {
                cand
            } else {
                best
            }
        })
    }

    /// The homogeneous component of the given degree.
    pub fn homogeneous_component(&self, degree: usize) -> NcPoly {
        let mut component = NcPoly::zero();
        for (w, c) in &self.terms {
            if w.degree() == degree {
                component.add_term(w.clone(), c.clone());
            }
        }
        component
    }

    /// `Some(degree)` if all terms share one total degree (zero gives `None`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Word::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, factor: &Rational) -> NcPoly {
        if factor.is_zero() {
            return NcPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c * factor))
            .collect();
        NcPoly { terms }
    }

    pub fn pow(&self, exponent: usize) -> NcPoly {
        let mut acc = NcPoly::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// `p*q - q*p`.
    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &(self * other) - &(other * self)
    }

    /// Letters that actually occur in some term.
    pub fn letters_used(&self) -> Vec<Letter> {
        let mut seen = [false; Letter::COUNT];
        for w in self.terms.keys() {
            for l in w.letters() {
                seen[l.index()] = true;
            }
        }
        (0..Letter::COUNT)
            .filter(|&i| seen[i])
            .map(|i| Letter::from_char((b'a' + i as u8) as char).unwrap())
            .collect()
    }

    /// Substitutes `first` for `var_first` and `second` for `var_second` in a
    /// two-variable polynomial. Errors if `self` uses any other letter.
    pub fn compose2(
        &self,
        vars: (Letter, Letter),
        first: &NcPoly,
        second: &NcPoly,
    ) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let mut product = NcPoly::constant(c.clone());
            for letter in w.letters() {
                let image = if *letter == vars.0 {
                    first
                } else if *letter == vars.1 {
                    second
                } else {
                    return Err(Error::ForeignLetter(letter.as_char()));
                };
                product = &product * image;
            }
            out = &out + &product;
        }
        Ok(out)
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for NcPoly {
    /// Canonical form: terms descending under the default order, coefficients
    /// in lowest terms, minus signs absorbed into coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if word.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{magnitude}{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
