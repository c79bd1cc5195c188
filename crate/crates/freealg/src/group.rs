//! Reduced words in the free group and finite rational combinations of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::poly::NcPoly;
use crate::rational::Rational;
use crate::word::{Letter, Word};

/// A letter or its formal inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub letter: Letter,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn plain(letter: Letter) -> Self {
        SignedLetter { letter, inverse: false }
    }

    pub fn inverted(letter: Letter) -> Self {
        SignedLetter { letter, inverse: true }
    }

    pub fn inverse(self) -> Self {
        SignedLetter { letter: self.letter, inverse: !self.inverse }
    }

    fn cancels(self, other: Self) -> bool {
        self.letter == other.letter && self.inverse != other.inverse
    }
}

impl fmt::Debug for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, if self.inverse { "^-1" } else { "" })
    }
}

/// A reduced word in the free group: no letter ever stands next to its
/// inverse. The degree counts letters with sign, so inverses count -1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroupWord {
    letters: Vec<SignedLetter>,
}

/// Reduces a raw sequence by cancelling adjacent inverse pairs until none
/// remain. A single stack pass suffices.
pub fn group_reduce(raw: &[SignedLetter]) -> GroupWord {
    let mut stack: Vec<SignedLetter> = Vec::with_capacity(raw.len());
    for &s in raw {
        if stack.last().is_some_and(|top| top.cancels(s)) {
            stack.pop();
        } else {
            stack.push(s);
        }
    }
    GroupWord { letters: stack }
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn from_signed(raw: Vec<SignedLetter>) -> Self {
        group_reduce(&raw)
    }

    /// Embeds a monoid word (no inverses arise, so no reduction happens).
    pub fn from_word(word: &Word) -> Self {
        GroupWord {
            letters: word.letters().iter().map(|&l| SignedLetter::plain(l)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn degree(&self) -> i64 {
        self.letters
            .iter()
            .map(|s| if s.inverse { -1i64 } else { 1 })
            .sum()
    }

    pub fn has_inverse_letter(&self) -> bool {
        self.letters.iter().any(|s| s.inverse)
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut raw = Vec::with_capacity(self.letters.len() + other.letters.len());
        raw.extend_from_slice(&self.letters);
        raw.extend_from_slice(&other.letters);
        group_reduce(&raw)
    }

    pub fn pow(&self, exponent: i64) -> GroupWord {
        let block = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::identity();
        for _ in 0..exponent.unsigned_abs() {
            out = out.concat(&block);
        }
        out
    }

    /// If every letter is plain, the underlying monoid word.
    pub fn to_word(&self) -> Option<Word> {
        if self.has_inverse_letter() {
            return None;
        }
        Some(Word::from_letters(self.letters.iter().map(|s| s.letter).collect()))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for s in &self.letters {
            write!(f, "{}", s.letter)?;
            if s.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A finite rational linear combination of reduced group words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupAlgElem {
    terms: BTreeMap<GroupWord, Rational>,
}

impl GroupAlgElem {
    pub fn zero() -> Self {
        GroupAlgElem::default()
    }

    pub fn one() -> Self {
        GroupAlgElem::monomial(GroupWord::identity())
    }

    pub fn monomial(word: GroupWord) -> Self {
        GroupAlgElem::term(word, Rational::one())
    }

    pub fn term(word: GroupWord, coeff: Rational) -> Self {
        let mut e = GroupAlgElem::zero();
        e.add_term(word, coeff);
        e
    }

    pub fn from_ncpoly(p: &NcPoly) -> Self {
        let mut e = GroupAlgElem::zero();
        for (w, c) in p.iter() {
            e.add_term(GroupWord::from_word(w), c.clone());
        }
        e
    }

    /// If no term involves an inverse letter, the corresponding polynomial.
    pub fn to_ncpoly(&self) -> Option<NcPoly> {
        let mut p = NcPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(w.to_word()?, c.clone());
        }
        Some(p)
    }

    pub fn add_term(&mut self, word: GroupWord, coeff: Rational) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&GroupWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &GroupWord) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupWord> {
        self.terms.keys()
    }

    pub fn scale(&self, factor: &Rational) -> GroupAlgElem {
        if factor.is_zero() {
            return GroupAlgElem::zero();
        }
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect();
        GroupAlgElem { terms }
    }

    /// Maximum signed degree over the support.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(GroupWord::degree).max()
    }

    /// Component whose words have exactly the given signed degree.
    pub fn degree_component(&self, degree: i64) -> GroupAlgElem {
        let mut out = GroupAlgElem::zero();
        for (w, c) in &self.terms {
            if w.degree() == degree {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    /// Splits into homogeneous components by signed degree.
    pub fn by_degree(&self) -> BTreeMap<i64, GroupAlgElem> {
        let mut out: BTreeMap<i64, GroupAlgElem> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree())
                .or_insert_with(GroupAlgElem::zero)
                .add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn pow(&self, exponent: usize) -> GroupAlgElem {
        let mut acc = GroupAlgElem::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }
}

/// Convolution product; every word product is reduced before accumulation.
pub fn ga_mul(a: &GroupAlgElem, b: &GroupAlgElem) -> GroupAlgElem {
    let mut out = GroupAlgElem::zero();
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    out
}

impl Add for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn add(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn sub(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn neg(self) -> GroupAlgElem {
        self.scale(&-Rational::one())
    }
}

impl Mul for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn mul(self, rhs: &GroupAlgElem) -> GroupAlgElem {
        ga_mul(self, rhs)
    }
}

impl fmt::Display for GroupAlgElem {
    /// Degree-descending with a structural tiebreak, signs absorbed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&GroupWord, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|(wa, _), (wb, _)| {
            wb.degree().cmp(&wa.degree()).then_with(|| wb.cmp(wa))
        });
        for (i, (word, coeff)) in ordered.into_iter().enumerate() {
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
            if word.is_identity() {
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

impl fmt::Debug for GroupAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn gw(text: &str) -> GroupWord {
        crate::parse::parse_group_word(text).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::from_text(text).unwrap()
    }

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        let x = Letter::from_char('x').unwrap();
        let y = Letter::from_char('y').unwrap();
        let raw = vec![
            SignedLetter::plain(x),
            SignedLetter::inverted(x),
            SignedLetter::plain(y),
        ];
        assert_eq!(group_reduce(&raw), GroupWord::from_word(&w("y")));
        // x y y^-1 x^-1 collapses fully
        let raw = vec![
            SignedLetter::plain(x),
            SignedLetter::plain(y),
            SignedLetter::inverted(y),
            SignedLetter::inverted(x),
        ];
        assert!(group_reduce(&raw).is_identity());
    }

    #[test]
    fn inverse_is_two_sided() {
        let g = gw("xyx^-1yy");
        assert!(g.concat(&g.inverse()).is_identity());
        assert!(g.inverse().concat(&g).is_identity());
    }

    #[test]
    fn degree_counts_signs() {
        assert_eq!(gw("xyx").degree(), 3);
        assert_eq!(gw("x^-1y^-1x^-1").degree(), -3);
        assert_eq!(gw("xy^-1").degree(), 0);
        assert_eq!(GroupWord::identity().degree(), 0);
    }

    #[test]
    fn w_times_u_inverse() {
        // w u^-1 for u = (xy)^2 x reduces to x^-1 y^-1 x^-1, degree 2 - 5
        let u = GroupWord::from_word(&w("xyxyx"));
        let a1 = GroupWord::from_word(&w("yx")).concat(&u.inverse());
        assert_eq!(a1, gw("x^-1y^-1x^-1"));
        assert_eq!(a1.degree(), -3);
    }

    #[test]
    fn u_times_a1_recovers_v() {
        // u * (w u^-1) = v because uw = vu for u = (xy)^k x
        for k in 2..=4usize {
            let u = w("xy").pow(k).concat(&w("x"));
            let ug = GroupWord::from_word(&u);
            let a1 = GroupWord::from_word(&w("yx")).concat(&ug.inverse());
            let lhs = ga_mul(
                &GroupAlgElem::monomial(ug.clone()),
                &GroupAlgElem::monomial(a1),
            );
            assert_eq!(lhs, GroupAlgElem::monomial(GroupWord::from_word(&w("xy"))));
        }
    }

    #[test]
    fn algebra_arithmetic() {
        let a = &GroupAlgElem::monomial(gw("x")) + &GroupAlgElem::monomial(gw("y^-1"));
        let product = ga_mul(&a, &a);
        assert_eq!(product.coeff(&gw("xx")), rat(1));
        assert_eq!(product.coeff(&gw("xy^-1")), rat(1));
        assert_eq!(product.coeff(&gw("y^-1x")), rat(1));
        assert_eq!(product.coeff(&gw("y^-1y^-1")), rat(1));
        assert_eq!(product.num_terms(), 4);
    }

    #[test]
    fn ncpoly_round_trip() {
        let p = &NcPoly::monomial(w("xy")) + &NcPoly::monomial(w("yx")).scale(&rat(-2));
        let e = GroupAlgElem::from_ncpoly(&p);
        assert_eq!(e.to_ncpoly().unwrap(), p);
        assert!(GroupAlgElem::monomial(gw("x^-1")).to_ncpoly().is_none());
    }

    #[test]
    fn degree_components() {
        let e = &GroupAlgElem::monomial(gw("xyx")) + &GroupAlgElem::monomial(gw("x^-1"));
        assert_eq!(e.degree(), Some(3));
        assert_eq!(e.degree_component(3).num_terms(), 1);
        assert_eq!(e.degree_component(-1).num_terms(), 1);
        assert_eq!(e.by_degree().len(), 2);
    }

    #[test]
    fn display_orders_by_degree() {
        let e = &(&GroupAlgElem::monomial(gw("x^-1")) + &GroupAlgElem::monomial(gw("xyx")))
            - &GroupAlgElem::one();
        assert_eq!(e.to_string(), "xyx - 1 + x^-1");
    }
}
