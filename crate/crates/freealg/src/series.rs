//! Truncated descending series over the free-group algebra, built as square
//! roots of polynomials and raised to small powers.
//!
//! The infinite series these stand in for live in an algebra of well-ordered
//! supports; here everything below an explicit cutoff is dropped, and any
//! operation whose answer could depend on the dropped tail refuses to run
//! rather than silently truncate.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{ga_mul, GroupAlgElem, GroupWord};
use crate::linalg::{solve_sparse, SolveOutcome};
use crate::poly::NcPoly;
use crate::rational::Rational;
use crate::word::Word;

/// Default bound on candidate-growing rounds in `sylvester_solve`.
pub const SYLVESTER_DEFAULT_CAP: usize = 8;

/// Hard ceiling on the candidate set, so provably unsolvable instances
/// cannot eat unbounded time before the round cap fires.
const CANDIDATE_LIMIT: usize = 1024;

/// Solves `u a + a u = c` for a finitely supported `a`, or reports failure.
///
/// Candidates are seeded with `u^-1 m` and `m u^-1` over the support of `c`
/// and grown the same way from the residual after each inconsistent round.
/// The operator is injective on finite supports, so a returned solution is
/// the only one; some right-hand sides have no finitely supported solution
/// at all, and those surface as an error once the round cap is reached.
pub fn sylvester_solve(base: &Word, rhs: &GroupAlgElem, cap: usize) -> Result<GroupAlgElem> {
    if rhs.is_zero() {
        return Ok(GroupAlgElem::zero());
    }
    if cap == 0 {
        return Err(Error::InvalidParameter("round cap must be positive".into()));
    }
    let u = GroupWord::from_word(base);
    let u_inv = u.inverse();
    let target_degree = rhs.degree().expect("nonzero") - u.degree();

    let mut candidates: BTreeSet<GroupWord> = BTreeSet::new();
    let mut frontier: Vec<GroupWord> = rhs.support().cloned().collect();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let before = candidates.len();
        for m in &frontier {
            candidates.insert(u_inv.concat(m));
            candidates.insert(m.concat(&u_inv));
        }
        let grew = candidates.len() > before;

        let order: Vec<&GroupWord> = candidates.iter().collect();
        let columns: Vec<BTreeMap<GroupWord, Rational>> = order
            .iter()
            .map(|g| {
                let mut col: BTreeMap<GroupWord, Rational> = BTreeMap::new();
                *col.entry(u.concat(g)).or_insert_with(Rational::zero) += Rational::one();
                *col.entry(g.concat(&u)).or_insert_with(Rational::zero) += Rational::one();
                col
            })
            .collect();
        let rhs_map: BTreeMap<GroupWord, Rational> =
            rhs.iter().map(|(w, c)| (w.clone(), c.clone())).collect();

        let assemble = |coeffs: &[Rational]| {
            let mut a = GroupAlgElem::zero();
            for (g, c) in order.iter().zip(coeffs) {
                a.add_term((*g).clone(), c.clone());
            }
            a
        };
        let apply = |a: &GroupAlgElem| {
            let ua = ga_mul(&GroupAlgElem::monomial(u.clone()), a);
            let au = ga_mul(a, &GroupAlgElem::monomial(u.clone()));
            &ua + &au
        };

        match solve_sparse(&columns, &rhs_map) {
            SolveOutcome::Solved(coeffs) => {
                let a = assemble(&coeffs);
                if &apply(&a) != rhs {
                    return Err(Error::SolutionCheck(
                        "sylvester solution failed its post-check".into(),
                    ));
                }
                return Ok(a);
            }
            SolveOutcome::Inconsistent { partial } => {
                if rounds >= cap || !grew || candidates.len() > CANDIDATE_LIMIT {
                    return Err(Error::SeriesComponent { degree: target_degree, rounds });
                }
                let residual = rhs - &apply(&assemble(&partial));
                frontier = residual.support().cloned().collect();
            }
        }
    }
}

/// A series with finitely many homogeneous components, truncated below.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries {
    components: BTreeMap<i64, GroupAlgElem>,
    top_degree: i64,
    cutoff: i64,
    exact: bool,
}

impl GradedSeries {
    pub fn new(
        components: BTreeMap<i64, GroupAlgElem>,
        top_degree: i64,
        cutoff: i64,
        exact: bool,
    ) -> Result<Self> {
        if top_degree < cutoff {
            return Err(Error::InvalidParameter(
                "top degree must not sit below the cutoff".into(),
            ));
        }
        for (&d, comp) in &components {
            if d > top_degree || d < cutoff {
                return Err(Error::InvalidParameter(format!(
                    "component degree {d} outside [{cutoff}, {top_degree}]"
                )));
            }
            if comp.support().any(|w| w.degree() != d) {
                return Err(Error::InvalidParameter(format!(
                    "component {d} contains terms of other degrees"
                )));
            }
        }
        Ok(GradedSeries { components, top_degree, cutoff, exact })
    }

    pub fn top_degree(&self) -> i64 {
        self.top_degree
    }

    /// Components below this degree were discarded.
    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// True when the stored components multiply out exactly, with nothing
    /// hidden under the cutoff.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn component(&self, degree: i64) -> GroupAlgElem {
        self.components.get(&degree).cloned().unwrap_or_else(GroupAlgElem::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &GroupAlgElem)> {
        self.components.iter().map(|(&d, c)| (d, c))
    }

    /// Sum of all stored components.
    pub fn to_elem(&self) -> GroupAlgElem {
        let mut out = GroupAlgElem::zero();
        for comp in self.components.values() {
            out = &out + comp;
        }
        out
    }
}

/// Computes a series square root of `g` with leading term `base`.
///
/// The leading component of `g` must be exactly `base^2`. Components are
/// found top-down, one sylvester equation per product degree, keeping every
/// component of degree >= `cutoff`; the result satisfies `rho^2 = g` on
/// every product degree >= `cutoff + deg(base)`. A sylvester failure
/// propagates, carrying the component degree at which it occurred.
pub fn series_sqrt(g: &NcPoly, base: &Word, cutoff: i64) -> Result<GradedSeries> {
    let t = base.degree() as i64;
    if t == 0 {
        return Err(Error::EmptyWord);
    }
    let (gdeg, gtop, _) = g.degree_split()?;
    if gdeg as i64 != 2 * t || gtop != NcPoly::monomial(base.pow(2)) {
        return Err(Error::NotASquare);
    }
    if cutoff > t {
        return Err(Error::InvalidParameter(
            "cutoff lies above the leading component".into(),
        ));
    }

    let mut g_parts: BTreeMap<i64, GroupAlgElem> = BTreeMap::new();
    for (word, coeff) in g.iter() {
        g_parts
            .entry(word.degree() as i64)
            .or_insert_with(GroupAlgElem::zero)
            .add_term(GroupWord::from_word(word), coeff.clone());
    }

    let mut comps: BTreeMap<i64, GroupAlgElem> = BTreeMap::new();
    comps.insert(t, GroupAlgElem::monomial(GroupWord::from_word(base)));
    for e in (cutoff + t..2 * t).rev() {
        let mut rhs = g_parts.get(&e).cloned().unwrap_or_else(GroupAlgElem::zero);
        let stored: Vec<(i64, GroupAlgElem)> = comps
            .range(..t)
            .map(|(&d, c)| (d, c.clone()))
            .collect();
        for (d1, c1) in &stored {
            let d2 = e - d1;
            if d2 >= t {
                continue;
            }
            if let Some(c2) = comps.get(&d2) {
                rhs = &rhs - &ga_mul(c1, c2);
            }
        }
        if rhs.is_zero() {
            continue;
        }
        let a = sylvester_solve(base, &rhs, SYLVESTER_DEFAULT_CAP)?;
        comps.insert(e - t, a);
    }

    let total = comps.values().fold(GroupAlgElem::zero(), |acc, c| &acc + c);
    let residual = &ga_mul(&total, &total) - &GroupAlgElem::from_ncpoly(g);
    let exact = residual.is_zero();
    GradedSeries::new(comps, t, cutoff, exact)
}

/// The degree-positive part of `rho^e`, split by degree.
///
/// When the series is inexact, the cutoff must be low enough that a product
/// touching any discarded component stays at degree <= 0; otherwise the
/// positive part is not determined and the call fails.
pub fn series_power_positive_part(
    rho: &GradedSeries,
    e: u32,
) -> Result<BTreeMap<i64, GroupAlgElem>> {
    if e == 0 {
        return Err(Error::InvalidParameter("exponent must be positive".into()));
    }
    if !rho.is_exact() {
        let worst = (rho.cutoff() - 1) + (e as i64 - 1) * rho.top_degree();
        if worst > 0 {
            return Err(Error::CutoffTooHigh { cutoff: rho.cutoff(), exponent: e });
        }
    }
    let power = rho.to_elem().pow(e as usize);
    Ok(power.by_degree().into_iter().filter(|(d, _)| *d > 0).collect())
}

/// Lists monomials that still contain an inverse letter, optionally only in
/// components of positive degree.
pub fn negative_exponent_scan(
    parts: &BTreeMap<i64, GroupAlgElem>,
    positive_only: bool,
) -> Vec<GroupWord> {
    let mut out = Vec::new();
    for (&d, comp) in parts {
        if positive_only && d <= 0 {
            continue;
        }
        for (word, _) in comp.iter() {
            if word.has_inverse_letter() {
                out.push(word.clone());
            }
        }
    }
    out
}
