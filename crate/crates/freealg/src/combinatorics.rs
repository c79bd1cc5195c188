//! Combinatorics of words: primitive roots, overlap relations of a primitive
//! monomial, and polynomial root/composition recognition.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{solve_sparse, SolveOutcome};
use crate::poly::NcPoly;
use crate::rational::Rational;
use crate::upoly::UniPoly;
use crate::word::{Letter, Word};

/// A word written as a power of its primitive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub root: Word,
    pub exponent: usize,
}

/// Smallest period of a nonempty word, via the border table.
fn smallest_period(word: &Word) -> usize {
    let letters = word.letters();
    let n = letters.len();
    let mut border = vec![0usize; n];
    for i in 1..n {
        let mut k = border[i - 1];
        while k > 0 && letters[i] != letters[k] {
            k = border[k - 1];
        }
        if letters[i] == letters[k] {
            k += 1;
        }
        border[i] = k;
    }
    n - border[n - 1]
}

/// Writes `word = root^exponent` with `root` primitive and `exponent` maximal.
pub fn primitive_root(word: &Word) -> Result<PrimitiveDecomposition> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = word.degree();
    let p = smallest_period(word);
    if p < n && n.is_multiple_of(p) {
        Ok(PrimitiveDecomposition {
            root: word.prefix(p),
            exponent: n / p,
        })
    } else {
        Ok(PrimitiveDecomposition {
            root: word.clone(),
            exponent: 1,
        })
    }
}

pub fn is_primitive(word: &Word) -> bool {
    primitive_root(word).map(|d| d.exponent == 1).unwrap_or(false)
}

/// A pair of proper affixes `t1`, `t2` of a primitive word `u` with
/// `t1 u = u t2`. Writing `p` for the primitive root of `t1`, the pair
/// factors as `t1 = (v1 v2)^j`, `t2 = (v2 v1)^j` where `u = (v1 v2)^K v1`
/// for some `K >= j` and `v1 v2 != v2 v1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapPair {
    pub t1: Word,
    pub t2: Word,
    pub v1: Word,
    pub v2: Word,
    pub j: usize,
}

impl OverlapPair {
    pub fn degree(&self) -> usize {
        self.t1.degree()
    }
}

/// All overlap pairs of a primitive word, in increasing degree. The pairs
/// correspond exactly to the periods `d < deg(base)` of `base`.
pub fn overlap_pairs(base: &Word) -> Result<Vec<OverlapPair>> {
    if base.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_primitive(base) {
        return Err(Error::NotPrimitive(base.clone()));
    }
    let n = base.degree();
    let mut pairs = Vec::new();
    for d in 1..n {
        if !base.has_period(d) {
            continue;
        }
        let t1 = base.prefix(d);
        let t2 = base.suffix(d);
        let root = primitive_root(&t1)?.root;
        let p = root.degree();
        // base has period d, hence is a prefix of root^infinity
        let r = n % p;
        debug_assert!(r >= 1, "a primitive word cannot be a power of a period root");
        let v1 = root.prefix(r);
        let v2 = root.suffix(p - r);
        debug_assert_eq!(root.pow(n / p).concat(&v1), *base);
        pairs.push(OverlapPair {
            t1,
            t2,
            v1,
            v2,
            j: d / p,
        });
    }
    Ok(pairs)
}

/// For homogeneous nonzero `h` and `n >= 1`, finds the monic `b` with
/// `b^n = alpha * h` for a scalar `alpha`, if one exists. Returns `None`
/// when `n` does not divide the degree or no root exists.
pub fn homogeneous_nth_root(h: &NcPoly, n: usize) -> Result<Option<(NcPoly, Rational)>> {
    if n == 0 {
        return Err(Error::InvalidParameter("root exponent must be positive".into()));
    }
    let Some(degree) = h.homogeneous_degree() else {
        return Err(if h.is_zero() {
            Error::ZeroPolynomial
        } else {
            Error::NotHomogeneous
        });
    };
    if degree % n != 0 {
        return Ok(None);
    }
    let inner = degree / n;
    let (_, _, (lead_word, lead_coeff)) = h.degree_split()?;
    // the leading word of b^n is the n-th power of the leading word of b
    let root_word = lead_word.prefix(inner);
    if root_word.pow(n) != lead_word {
        return Ok(None);
    }
    let alpha = lead_coeff.recip();
    // every coefficient of b is forced: the block decomposition of a word of
    // degree n*inner into degree-inner factors is unique, so the coefficient
    // of root_word^(n-1) * w in b^n is exactly the coefficient of w in b
    let marker = root_word.pow(n - 1);
    let mut b = NcPoly::zero();
    for (word, coeff) in h.iter() {
        if let Some(rest) = word.strip_prefix(&marker) {
            b.add_term(rest, coeff * &alpha);
        }
    }
    if b.pow(n) == h.scale(&alpha) {
        Ok(Some((b, alpha)))
    } else {
        Ok(None)
    }
}

/// All words of the given degree over the alphabet, in enumeration order.
pub fn words_of_degree(alphabet: &[Letter], degree: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..degree {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &l in alphabet {
                next.push(w.concat(&Word::single(l)));
            }
        }
        out = next;
    }
    out
}

/// Solves `scale * sum_i b^i v b^(e-i) = rhs` for homogeneous `v` of the
/// given degree, where `e + 1` is the number of supplied powers. The operator
/// is injective, so the solution is unique when it exists.
fn solve_block_equation(
    b_powers: &[NcPoly],
    scale: &Rational,
    degree: usize,
    alphabet: &[Letter],
    rhs: &NcPoly,
) -> Option<NcPoly> {
    if rhs.is_zero() {
        return Some(NcPoly::zero());
    }
    let words = words_of_degree(alphabet, degree);
    let top = b_powers.len() - 1;
    let columns: Vec<BTreeMap<Word, Rational>> = words
        .iter()
        .map(|w| {
            let w_poly = NcPoly::monomial(w.clone());
            let mut image = NcPoly::zero();
            for i in 0..=top {
                image = &image + &(&(&b_powers[i] * &w_poly) * &b_powers[top - i]);
            }
            image
                .scale(scale)
                .iter()
                .map(|(word, c)| (word.clone(), c.clone()))
                .collect()
        })
        .collect();
    let rhs_map: BTreeMap<Word, Rational> = rhs
        .iter()
        .map(|(word, c)| (word.clone(), c.clone()))
        .collect();
    match solve_sparse(&columns, &rhs_map) {
        SolveOutcome::Solved(x) => {
            let mut v = NcPoly::zero();
            for (word, coeff) in words.into_iter().zip(x) {
                v.add_term(word, coeff);
            }
            Some(v)
        }
        SolveOutcome::Inconsistent { .. } => None,
    }
}

fn divisors_descending(n: usize) -> Vec<usize> {
    let mut divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divisors.reverse();
    divisors
}

/// Tests whether `f = q(h)` for a univariate rational `q` of degree `n >= 2`
/// and some `h` of smaller degree. Divisors `n` of `deg(f)` are tried in
/// decreasing order, so a returned witness has `h` of minimal degree; `h` is
/// normalized monic with zero constant term.
pub fn proper_composite_test(f: &NcPoly) -> Result<Option<(NcPoly, UniPoly)>> {
    let degree = f.degree()?;
    if degree == 0 {
        return Err(Error::InvalidParameter(
            "composition test needs a nonconstant polynomial".into(),
        ));
    }
    let alphabet = f.letters_used();
    let (_, top, _) = f.degree_split()?;
    for n in divisors_descending(degree) {
        if n < 2 {
            continue;
        }
        let inner = degree / n;
        let Some((b, alpha)) = homogeneous_nth_root(&top, n)? else {
            continue;
        };
        let lead_scale = alpha.recip();
        let mut b_powers = vec![NcPoly::one()];
        for _ in 1..n {
            let next = &b_powers[b_powers.len() - 1] * &b;
            b_powers.push(next);
        }
        // lower homogeneous parts of h are forced one degree at a time: at
        // total degree (n-1)*inner + j only the single-deficient products
        // b^i h_j b^(n-1-i) reach that high
        let mut h = b.clone();
        let mut determined = true;
        for j in (1..inner).rev() {
            let target = (n - 1) * inner + j;
            let known = h.pow(n).scale(&lead_scale).homogeneous_component(target);
            let rhs = &f.homogeneous_component(target) - &known;
            match solve_block_equation(&b_powers, &lead_scale, j, &alphabet, &rhs) {
                Some(part) => h = &h + &part,
                None => {
                    determined = false;
                    break;
                }
            }
        }
        if !determined {
            continue;
        }
        // peel q(z) off from the top; h is monic so each coefficient reads
        // off the leading-word power directly
        let lead_h = h.degree_split()?.2 .0;
        let mut h_powers = vec![NcPoly::one()];
        for _ in 1..=n {
            let next = &h_powers[h_powers.len() - 1] * &h;
            h_powers.push(next);
        }
        let mut residual = f.clone();
        let mut q = UniPoly::zero();
        for i in (0..=n).rev() {
            let coeff = residual.coeff(&lead_h.pow(i));
            if !coeff.is_zero() {
                q.add_term(i as u32, coeff.clone());
                residual = &residual - &h_powers[i].scale(&coeff);
            }
        }
        if residual.is_zero() {
            return Ok(Some((h, q)));
        }
    }
    Ok(None)
}
