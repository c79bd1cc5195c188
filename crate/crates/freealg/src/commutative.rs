//! Commutative two-variable polynomials and the Jacobian-pair family with
//! `J(f, g) = y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use crate::upoly::UniPoly;

/// A polynomial in `K[x, y]`, keyed by exponent pairs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CommPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly::default()
    }

    pub fn one() -> Self {
        CommPoly::monomial(0, 0)
    }

    pub fn monomial(x: u32, y: u32) -> Self {
        CommPoly::term(x, y, Rational::one())
    }

    pub fn term(x: u32, y: u32, coeff: Rational) -> Self {
        let mut p = CommPoly::zero();
        p.add_term(x, y, coeff);
        p
    }

    pub fn add_term(&mut self, x: u32, y: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((x, y)) {
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

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, x: u32, y: u32) -> Rational {
        self.terms.get(&(x, y)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, or nothing for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, factor: &Rational) -> CommPoly {
        if factor.is_zero() {
            return CommPoly::zero();
        }
        let terms = self.terms.iter().map(|(&e, c)| (e, c * factor)).collect();
        CommPoly { terms }
    }

    pub fn pow(&self, exponent: usize) -> CommPoly {
        let mut acc = CommPoly::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_x(&self) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * &rat(i as i64));
            }
        }
        out
    }

    pub fn partial_y(&self) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * &rat(j as i64));
            }
        }
        out
    }

    /// Substitutes `arg` for the variable of `p`.
    pub fn compose(p: &UniPoly, arg: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (exponent, coeff) in p.iter() {
            out = &out + &arg.pow(exponent as usize).scale(coeff);
        }
        out
    }
}

pub fn jacobian(f: &CommPoly, g: &CommPoly) -> CommPoly {
    &(&f.partial_x() * &g.partial_y()) - &(&f.partial_y() * &g.partial_x())
}

impl Add for &CommPoly {
    type Output = CommPoly;
    fn add(self, rhs: &CommPoly) -> CommPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e.0, e.1, c.clone());
        }
        out
    }
}

impl Sub for &CommPoly {
    type Output = CommPoly;
    fn sub(self, rhs: &CommPoly) -> CommPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e.0, e.1, -c.clone());
        }
        out
    }
}

impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(i, j), coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let constant = i == 0 && j == 0;
            if constant || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A pair with `J(f, g) = y`, built from exponents `a > b >= 1` with
/// `c = a - b > 1` dividing `a + 1`.
///
/// With `z = x^a y^b`: `g = xy(1 + z)` and `f = y p(z)`, where `p` solves
/// `c z (1 + z) p' - (1 + (a+1) z) p = 1`. That right-hand side forces
/// `p` to have degree exactly `k = (a+1)/c`.
#[derive(Clone, Debug)]
pub struct JacobianPair {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub k: u32,
    pub p: UniPoly,
    pub f: CommPoly,
    pub g: CommPoly,
}

pub fn jacobian_pair(a: u32, b: u32) -> Result<JacobianPair> {
    if b == 0 || a <= b {
        return Err(Error::InvalidParameter("need a > b >= 1".into()));
    }
    let c = a - b;
    if c < 2 {
        return Err(Error::InvalidParameter("need a - b > 1".into()));
    }
    if !(a + 1).is_multiple_of(c) {
        return Err(Error::InvalidParameter("a - b must divide a + 1".into()));
    }
    let k = (a + 1) / c;

    let mut p = UniPoly::term(0, rat(-1));
    let mut prev = rat(-1);
    for i in 1..=k {
        let factor = ratio(
            (c as i64) * (k as i64 - i as i64 + 1),
            (i as i64) * (c as i64) - 1,
        );
        prev = &prev * &factor;
        p.add_term(i, prev.clone());
    }

    let z = CommPoly::monomial(a, b);
    let f = &CommPoly::monomial(0, 1) * &CommPoly::compose(&p, &z);
    let g = &CommPoly::monomial(1, 1) * &(&CommPoly::one() + &z);
    Ok(JacobianPair { a, b, c, k, p, f, g })
}

/// The defining differential identity, rearranged to vanish:
/// `c z (1 + z) p' - (1 + kc z) p - 1`.
pub fn scaling_ode_residual(p: &UniPoly, c: u32, k: u32) -> UniPoly {
    let cz_one_plus_z =
        &UniPoly::term(1, rat(c as i64)) + &UniPoly::term(2, rat(c as i64));
    let kcz = UniPoly::term(1, rat((k * c) as i64));
    let lhs = &cz_one_plus_z * &p.derivative();
    let mid = &(&UniPoly::one() + &kcz) * p;
    &(&lhs + &-&mid) + &-&UniPoly::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_partials() {
        let f = &CommPoly::monomial(2, 1) + &CommPoly::term(0, 0, rat(3));
        assert_eq!(f.partial_x(), CommPoly::term(1, 1, rat(2)));
        assert_eq!(f.partial_y(), CommPoly::monomial(2, 0));
        let g = CommPoly::monomial(1, 1);
        let product = &f * &g;
        assert_eq!(product.coeff(3, 2), rat(1));
        assert_eq!(product.coeff(1, 1), rat(3));
        assert_eq!(product.degree(), Some(5));
    }

    #[test]
    fn jacobian_basics() {
        let x = CommPoly::monomial(1, 0);
        let y = CommPoly::monomial(0, 1);
        assert_eq!(jacobian(&x, &y), CommPoly::one());
        assert_eq!(jacobian(&y, &x), (-&CommPoly::one()));
        let f = &x.pow(3) + &(&x * &y);
        assert!(jacobian(&f, &f).is_zero());
        // J(f, g h) = J(f, g) h + g J(f, h)
        let g = &y.pow(2) + &x;
        let h = &(&x * &y) + &CommPoly::one();
        let lhs = jacobian(&f, &(&g * &h));
        let rhs = &(&jacobian(&f, &g) * &h) + &(&g * &jacobian(&f, &h));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_reads_naturally() {
        let p = &(&CommPoly::monomial(2, 1) - &CommPoly::term(1, 0, rat(2)))
            + &CommPoly::term(0, 0, ratio(1, 2));
        assert_eq!(p.to_string(), "x^2y - 2x + 1/2");
        assert_eq!(CommPoly::zero().to_string(), "0");
    }

    #[test]
    fn scaling_coefficients_for_small_cases() {
        let pair = jacobian_pair(3, 1).unwrap();
        assert_eq!((pair.c, pair.k), (2, 2));
        assert_eq!(pair.p.coeff(0), rat(-1));
        assert_eq!(pair.p.coeff(1), rat(-4));
        assert_eq!(pair.p.coeff(2), ratio(-8, 3));
        assert_eq!(pair.p.degree(), Some(2));

        let pair = jacobian_pair(5, 3).unwrap();
        assert_eq!((pair.c, pair.k), (2, 3));
        assert_eq!(pair.p.coeff(1), rat(-6));
        assert_eq!(pair.p.coeff(2), rat(-8));
        assert_eq!(pair.p.coeff(3), ratio(-16, 5));
    }

    #[test]
    fn ode_residual_vanishes_exactly_for_the_built_p() {
        for (a, b) in [(3, 1), (5, 3), (7, 5), (11, 8)] {
            let pair = jacobian_pair(a, b).unwrap();
            assert!(
                scaling_ode_residual(&pair.p, pair.c, pair.k).is_zero(),
                "({a},{b})"
            );
        }
        // perturbing any coefficient breaks the identity
        let pair = jacobian_pair(3, 1).unwrap();
        let mut bad = pair.p.clone();
        bad.add_term(1, rat(1));
        assert!(!scaling_ode_residual(&bad, pair.c, pair.k).is_zero());
    }

    #[test]
    fn jacobian_of_the_pair_is_y() {
        for (a, b) in [(3, 1), (5, 3), (7, 5)] {
            let pair = jacobian_pair(a, b).unwrap();
            assert_eq!(jacobian(&pair.f, &pair.g), CommPoly::monomial(0, 1), "({a},{b})");
        }
    }

    #[test]
    fn degree_formulas() {
        for (a, b) in [(3, 1), (5, 3), (7, 5)] {
            let pair = jacobian_pair(a, b).unwrap();
            assert_eq!(
                pair.f.degree(),
                Some(a * (a + b + 2) / pair.c),
                "({a},{b})"
            );
            assert_eq!(pair.g.degree(), Some(a + b + 2));
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(jacobian_pair(3, 2).is_err());
        assert!(jacobian_pair(2, 2).is_err());
        assert!(jacobian_pair(4, 1).is_err());
        assert!(jacobian_pair(3, 0).is_err());
        assert!(jacobian_pair(1, 3).is_err());
        assert!(jacobian_pair(7, 5).is_ok());
    }
}
