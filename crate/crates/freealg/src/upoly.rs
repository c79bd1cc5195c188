//! Coefficient polynomials for bimodule bookkeeping: univariate polynomials
//! and commuting polynomials in the two one-sided multiplication operators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::poly::NcPoly;
use crate::rational::Rational;
use crate::word::Word;

/// A univariate polynomial over the rationals, sparse in the exponent.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::term(0, Rational::one())
    }

    pub fn term(exponent: u32, coeff: Rational) -> Self {
        let mut p = UniPoly::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        let mut p = UniPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, exponent: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exponent) {
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
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exponent: u32) -> Rational {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn derivative(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e, c) in &self.coeffs {
            if *e > 0 {
                out.add_term(e - 1, c * Rational::from_integer((*e).into()));
            }
        }
        out
    }

    /// Evaluates at a noncommutative argument.
    pub fn eval_nc(&self, arg: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (e, c) in &self.coeffs {
            out = &out + &arg.pow(*e as usize).scale(c);
        }
        out
    }

    /// The polynomial `sum c_e base^e` as words.
    pub fn expand_powers(&self, base: &Word) -> NcPoly {
        let mut out = NcPoly::zero();
        for (e, c) in &self.coeffs {
            out.add_term(base.pow(*e as usize), c.clone());
        }
        out
    }

    /// Same polynomial regarded as acting on the left only.
    pub fn to_left_action(&self) -> UPoly2 {
        let mut out = UPoly2::zero();
        for (e, c) in &self.coeffs {
            out.add_term(*e, 0, c.clone());
        }
        out
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        UniPolyDisplay { poly: self, var }
    }
}

struct UniPolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for UniPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.coeffs.iter().rev().enumerate() {
            write_signed_term(f, i, c, |f| match e {
                0 => Ok(false),
                1 => write!(f, "{}", self.var).map(|_| true),
                _ => write!(f, "{}^{}", self.var, e).map(|_| true),
            })?;
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect();
        UniPoly { coeffs }
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("z"))
    }
}

/// A polynomial in two commuting operators: left and right multiplication by
/// a fixed base monomial. The monomial `(a, b)` acts on a generator `t` as
/// `base^a t base^b`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl UPoly2 {
    pub fn zero() -> Self {
        UPoly2::default()
    }

    pub fn one() -> Self {
        UPoly2::monomial(0, 0)
    }

    pub fn monomial(left: u32, right: u32) -> Self {
        UPoly2::term(left, right, Rational::one())
    }

    pub fn term(left: u32, right: u32, coeff: Rational) -> Self {
        let mut p = UPoly2::zero();
        p.add_term(left, right, coeff);
        p
    }

    pub fn add_term(&mut self, left: u32, right: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
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

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, left: u32, right: u32) -> Rational {
        self.terms
            .get(&(left, right))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// True if no term involves the right-multiplication operator.
    pub fn is_left_only(&self) -> bool {
        self.terms.keys().all(|(_, b)| *b == 0)
    }

    /// `Some(d)` when every term has total operator degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|(a, b)| a + b);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, factor: &Rational) -> UPoly2 {
        if factor.is_zero() {
            return UPoly2::zero();
        }
        let terms = self.terms.iter().map(|(k, c)| (*k, c * factor)).collect();
        UPoly2 { terms }
    }

    /// Applies the operator polynomial to a generator word:
    /// `sum c_{a,b} base^a t base^b`.
    pub fn apply(&self, generator: &Word, base: &Word) -> NcPoly {
        let mut out = NcPoly::zero();
        for ((a, b), c) in &self.terms {
            let word = base
                .pow(*a as usize)
                .concat(generator)
                .concat(&base.pow(*b as usize));
            out.add_term(word, c.clone());
        }
        out
    }
}

impl Add for &UPoly2 {
    type Output = UPoly2;
    fn add(self, rhs: &UPoly2) -> UPoly2 {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl Sub for &UPoly2 {
    type Output = UPoly2;
    fn sub(self, rhs: &UPoly2) -> UPoly2 {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, -c.clone());
        }
        out
    }
}

impl Mul for &UPoly2 {
    type Output = UPoly2;
    fn mul(self, rhs: &UPoly2) -> UPoly2 {
        let mut out = UPoly2::zero();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &rhs.terms {
                out.add_term(la + lb, ra + rb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &UPoly2 {
    type Output = UPoly2;
    fn neg(self) -> UPoly2 {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for UPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            write_signed_term(f, i, c, |f| {
                let mut printed = false;
                for (var, e) in [("u1", *a), ("u2", *b)] {
                    if e == 1 {
                        write!(f, "{var}")?;
                        printed = true;
                    } else if e > 1 {
                        write!(f, "{var}^{e}")?;
                        printed = true;
                    }
                }
                Ok(printed)
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shared term printer: sign handling plus "did the body print anything"
/// detection so bare constants come out right.
fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    index: usize,
    coeff: &Rational,
    body: impl Fn(&mut fmt::Formatter<'_>) -> Result<bool, fmt::Error>,
) -> fmt::Result {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    if index == 0 {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if magnitude.is_one() {
        let printed = body(f)?;
        if !printed {
            write!(f, "1")?;
        }
    } else {
        write!(f, "{magnitude}")?;
        body(f)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn unipoly_arithmetic() {
        // (z + 1)(z - 1) = z^2 - 1
        let a = &UniPoly::term(1, rat(1)) + &UniPoly::term(0, rat(1));
        let b = &UniPoly::term(1, rat(1)) + &UniPoly::term(0, rat(-1));
        let product = &a * &b;
        assert_eq!(product.coeff(2), rat(1));
        assert_eq!(product.coeff(1), rat(0));
        assert_eq!(product.coeff(0), rat(-1));
        assert_eq!(product.degree(), Some(2));
    }

    #[test]
    fn unipoly_derivative() {
        let p = UniPoly::from_coeffs(&[rat(1), rat(-4), ratio(-8, 3)]);
        let d = p.derivative();
        assert_eq!(d.coeff(0), rat(-4));
        assert_eq!(d.coeff(1), ratio(-16, 3));
        assert_eq!(d.degree(), Some(1));
    }

    #[test]
    fn unipoly_nc_evaluation() {
        // q(z) = z^2 at h = x + y expands with cross terms
        let q = UniPoly::term(2, rat(1));
        let h = &NcPoly::monomial(Word::from_text("x").unwrap())
            + &NcPoly::monomial(Word::from_text("y").unwrap());
        assert_eq!(q.eval_nc(&h), h.pow(2));
        assert_eq!(q.eval_nc(&h).num_terms(), 4);
    }

    #[test]
    fn upoly2_action_places_powers() {
        let base = Word::from_text("xyx").unwrap();
        let t = Word::from_text("yy").unwrap();
        let c = &UPoly2::monomial(1, 1) + &UPoly2::one();
        let acted = c.apply(&t, &base);
        let expected = {
            let mut p = NcPoly::zero();
            p.add_term(Word::from_text("xyxyyxyx").unwrap(), rat(1));
            p.add_term(t.clone(), rat(1));
            p
        };
        assert_eq!(acted, expected);
    }

    #[test]
    fn upoly2_commutes() {
        let a = &UPoly2::monomial(1, 0) + &UPoly2::monomial(0, 2);
        let b = &UPoly2::monomial(2, 1) + &UPoly2::one();
        assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn display_forms() {
        let p = &UPoly2::monomial(2, 1) + &UPoly2::term(0, 0, rat(-3));
        assert_eq!(p.to_string(), "u1^2u2 - 3");
        let q = UniPoly::from_coeffs(&[rat(-1), rat(0), ratio(1, 2)]);
        assert_eq!(q.display_with("z").to_string(), "1/2z^2 - 1");
        assert_eq!(UPoly2::zero().to_string(), "0");
    }

    #[test]
    fn left_only_detection() {
        assert!(UniPoly::from_coeffs(&[rat(1), rat(2)])
            .to_left_action()
            .is_left_only());
        assert!(!UPoly2::monomial(0, 1).is_left_only());
    }
}
