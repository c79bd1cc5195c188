//! Decomposition of the free algebra over the centralizer of a primitive
//! word `u`.
//!
//! Every monomial factors uniquely as `u^a t u^b` once the left power is
//! taken as large as possible and then the right power. The cores `t` that
//! survive fall into three kinds: the empty core (the polynomial algebra
//! `K[u]` itself), cores bordering `u` on one side (these come in pairs
//! `(t1, t2)` with `t1 u = u t2`, one pair per period of `u`, and only
//! `t1`-cores with no `u` on the right are in normal form), and everything
//! else, which generates freely.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{overlap_pairs, OverlapPair};
use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::rational::Rational;
use crate::upoly::{UPoly2, UniPoly};
use crate::word::Word;

/// Peels the largest power of `base` off the left, then off the right.
pub fn factor_monomial(word: &Word, base: &Word) -> (u32, Word, u32) {
    let mut left = 0;
    let mut rest = word.clone();
    while let Some(stripped) = rest.strip_prefix(base) {
        rest = stripped;
        left += 1;
    }
    let mut right = 0;
    while let Some(stripped) = rest.strip_suffix(base) {
        rest = stripped;
        right += 1;
    }
    (left, rest, right)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorClass {
    /// Empty core: the monomial is a pure power of the base.
    Unit,
    /// The core borders the base on neither side and generates freely.
    Free,
    /// The core is `t1` of the indexed overlap pair.
    OverlapFirst(usize),
    /// The core is `t2` of the indexed overlap pair.
    OverlapSecond(usize),
}

/// A monomial in normal form: `base^left · core · base^right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialForm {
    pub left: u32,
    pub core: Word,
    pub right: u32,
    pub class: GeneratorClass,
}

/// The bimodule structure attached to one primitive base word.
#[derive(Clone, PartialEq, Eq)]
pub struct Bimodule {
    base: Word,
    pairs: Vec<OverlapPair>,
    degree_index: BTreeMap<usize, usize>,
}

impl Bimodule {
    pub fn new(base: &Word) -> Result<Self> {
        let pairs = overlap_pairs(base)?;
        let degree_index = pairs
            .iter()
            .enumerate()
            .map(|(i, pair)| (pair.degree(), i))
            .collect();
        Ok(Bimodule { base: base.clone(), pairs, degree_index })
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn pairs(&self) -> &[OverlapPair] {
        &self.pairs
    }

    /// Classifies an already stripped core; a core still bordered by the
    /// base is rejected. Pair degrees are distinct and `t1 != t2` always,
    /// so at most one role can match.
    pub fn classify(&self, core: &Word) -> Result<GeneratorClass> {
        if core.is_empty() {
            return Ok(GeneratorClass::Unit);
        }
        if core.strip_prefix(&self.base).is_some() || core.strip_suffix(&self.base).is_some() {
            return Err(Error::BorderedGenerator {
                word: core.clone(),
                base: self.base.clone(),
            });
        }
        if let Some(&i) = self.degree_index.get(&core.degree()) {
            if *core == self.pairs[i].t1 {
                return Ok(GeneratorClass::OverlapFirst(i));
            }
            if *core == self.pairs[i].t2 {
                return Ok(GeneratorClass::OverlapSecond(i));
            }
        }
        Ok(GeneratorClass::Free)
    }

    pub fn factor(&self, word: &Word) -> MonomialForm {
        let (left, core, right) = factor_monomial(word, &self.base);
        let class = self
            .classify(&core)
            .expect("stripped cores never border the base");
        debug_assert!(
            !matches!(class, GeneratorClass::OverlapFirst(_)) || right == 0,
            "t1 u starts with u, so greedy left stripping leaves no right power"
        );
        MonomialForm { left, core, right, class }
    }

    /// Rewrites a polynomial in the normal basis over `K[u]`.
    pub fn decompose(&self, poly: &NcPoly) -> BimoduleForm {
        let mut form = BimoduleForm {
            bimodule: self.clone(),
            unit: UniPoly::zero(),
            free: BTreeMap::new(),
            overlap: vec![(UniPoly::zero(), UPoly2::zero()); self.pairs.len()],
        };
        for (word, coeff) in poly.iter() {
            let m = self.factor(word);
            match m.class {
                GeneratorClass::Unit => form.unit.add_term(m.left + m.right, coeff.clone()),
                GeneratorClass::Free => form
                    .free
                    .entry(m.core)
                    .or_insert_with(UPoly2::zero)
                    .add_term(m.left, m.right, coeff.clone()),
                GeneratorClass::OverlapFirst(i) => {
                    form.overlap[i].0.add_term(m.left, coeff.clone())
                }
                GeneratorClass::OverlapSecond(i) => {
                    form.overlap[i].1.add_term(m.left, m.right, coeff.clone())
                }
            }
        }
        form
    }
}

/// A polynomial written in the normal basis: a `K[u]` part, one two-sided
/// coefficient per free core, and per overlap pair a left-only coefficient
/// on `t1` together with a two-sided coefficient on `t2`.
#[derive(Clone, PartialEq, Eq)]
pub struct BimoduleForm {
    bimodule: Bimodule,
    unit: UniPoly,
    free: BTreeMap<Word, UPoly2>,
    overlap: Vec<(UniPoly, UPoly2)>,
}

impl BimoduleForm {
    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn unit(&self) -> &UniPoly {
        &self.unit
    }

    pub fn free(&self) -> impl Iterator<Item = (&Word, &UPoly2)> {
        self.free.iter().filter(|(_, c)| !c.is_zero())
    }

    /// Per-pair coefficients, in pair order; zero entries included.
    pub fn overlap(&self) -> &[(UniPoly, UPoly2)] {
        &self.overlap
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
            && self.free.values().all(UPoly2::is_zero)
            && self.overlap.iter().all(|(c1, c2)| c1.is_zero() && c2.is_zero())
    }

    pub fn to_poly(&self) -> NcPoly {
        let base = self.bimodule.base();
        let mut out = self.unit.expand_powers(base);
        for (core, mult) in self.free() {
            out = &out + &mult.apply(core, base);
        }
        for (pair, (c1, c2)) in self.bimodule.pairs().iter().zip(&self.overlap) {
            out = &out + &c1.to_left_action().apply(&pair.t1, base);
            out = &out + &c2.apply(&pair.t2, base);
        }
        out
    }

    /// Total coefficient count across all parts.
    pub fn num_terms(&self) -> usize {
        self.unit.iter().count()
            + self.free().map(|(_, c)| c.iter().count()).sum::<usize>()
            + self
                .overlap
                .iter()
                .map(|(c1, c2)| c1.iter().count() + c2.iter().count())
                .sum::<usize>()
    }

    pub fn unit_coeff(&self, power: u32) -> Rational {
        self.unit.coeff(power)
    }

    pub fn free_coeff(&self, core: &Word) -> UPoly2 {
        self.free.get(core).cloned().unwrap_or_else(UPoly2::zero)
    }
}

impl fmt::Display for BimoduleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut line = |f: &mut fmt::Formatter<'_>, text: String| -> fmt::Result {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{text}")
        };
        if !self.unit.is_zero() {
            line(f, format!("unit: {}", self.unit.display_with("u")))?;
        }
        for (core, mult) in self.free() {
            line(f, format!("free {core}: {mult}"))?;
        }
        for (pair, (c1, c2)) in self.bimodule.pairs().iter().zip(&self.overlap) {
            if !c1.is_zero() {
                line(
                    f,
                    format!("pair {} first {}: {}", pair.degree(), pair.t1, c1.display_with("u1")),
                )?;
            }
            if !c2.is_zero() {
                line(f, format!("pair {} second {}: {c2}", pair.degree(), pair.t2))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BimoduleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
