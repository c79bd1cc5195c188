//! End-to-end verification routines behind the CLI verbs. Each builds one
//! identity family from its parameters and reports every recomputed value
//! against the expected form.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bimodule::GeneratorClass;
use crate::combinatorics::{
    homogeneous_nth_root, overlap_pairs, proper_composite_test, words_of_degree,
};
use crate::commutative::{jacobian, jacobian_pair, scaling_ode_residual, CommPoly};
use crate::error::{Error, Result};
use crate::group::{ga_mul, GroupAlgElem, GroupWord};
use crate::linalg;
use crate::poly::NcPoly;
use crate::rational::{rat, ratio, Rational};
use crate::report::{ReportBuilder, VerificationReport};
use crate::series::{
    negative_exponent_scan, series_power_positive_part, series_sqrt, sylvester_solve,
    SYLVESTER_DEFAULT_CAP,
};
use crate::solver::{Equation, Solution};
use crate::upoly::{UPoly2, UniPoly};
use crate::word::{Letter, Word};

fn letter(c: char) -> Letter {
    Letter::from_char(c).expect("fixed letter")
}

fn word(text: &str) -> Word {
    Word::from_text(text).expect("fixed word")
}

fn display_option<T: fmt::Display>(value: &Option<T>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => "none".into(),
    }
}

/// The degree-gap pair built on `u = (xy)^k x`: with `v = xy` and `w = yx`
/// one has `vu = uw`, and for `r = uv + uw + wu`, `s = v + w`, the
/// polynomials `f = u^3 + r` and `g = u^2 + s` have a commutator of degree
/// `2k + 5`, far below `deg f + deg g`.
#[derive(Clone, Debug)]
pub struct CommutatorWitness {
    pub k: u32,
    pub u: Word,
    pub v: Word,
    pub w: Word,
    pub r: NcPoly,
    pub s: NcPoly,
    pub f: NcPoly,
    pub g: NcPoly,
}

impl CommutatorWitness {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter("k must be at least 2".into()));
        }
        let v = word("xy");
        let w = word("yx");
        let u = v.pow(k as usize).concat(&word("x"));
        let mut r = NcPoly::zero();
        r.add_term(u.concat(&v), rat(1));
        r.add_term(u.concat(&w), rat(1));
        r.add_term(w.concat(&u), rat(1));
        let s = &NcPoly::monomial(v.clone()) + &NcPoly::monomial(w.clone());
        let f = &NcPoly::monomial(u.pow(3)) + &r;
        let g = &NcPoly::monomial(u.pow(2)) + &s;
        Ok(CommutatorWitness { k, u, v, w, r, s, f, g })
    }
}

/// The component cutoff used for the square-root series when none is given:
/// one degree above the first component with no finitely supported value.
pub fn default_cutoff(k: u32) -> i64 {
    2 - 6 * i64::from(k)
}

pub fn verify_thm31(k: u32) -> Result<VerificationReport> {
    let wit = CommutatorWitness::new(k)?;
    let mut b = ReportBuilder::new("thm31");
    b.param("k", k);

    let u2 = NcPoly::monomial(wit.u.pow(2));
    let u3 = NcPoly::monomial(wit.u.pow(3));
    let cancel = &u3.commutator(&wit.s) + &wit.r.commutator(&u2);
    b.check("bracket_cancellation", "[u^3, s] + [r, u^2] = 0", &cancel, "0");

    let commutator = wit.f.commutator(&wit.g);
    let mut target = NcPoly::zero();
    target.add_term(wit.u.concat(&wit.v).concat(&wit.v), rat(1));
    target.add_term(wit.u.concat(&wit.v).concat(&wit.w), rat(1));
    target.add_term(wit.v.concat(&wit.w).concat(&wit.u), rat(-1));
    target.add_term(wit.w.concat(&wit.w).concat(&wit.u), rat(-1));
    b.check("commutator", "[f, g] = uvv + uvw - vwu - wwu", &commutator, &target);

    let d_comm = commutator.degree()?;
    let d_g = wit.g.degree()?;
    let d_f = wit.f.degree()?;
    let ku = k as usize;
    b.check("deg_commutator", "deg [f, g] = 2k + 5", d_comm, 2 * ku + 5);
    b.check("deg_g", "deg g = 4k + 2", d_g, 4 * ku + 2);
    b.check("deg_f", "deg f = 6k + 3", d_f, 6 * ku + 3);
    b.check_true("degree_drop", "deg [f, g] < deg g < deg f", d_comm < d_g && d_g < d_f);
    let stated = &ratio(1, 2) + &ratio(2, 2 * i64::from(k) + 1);
    b.check(
        "commutator_ratio",
        "deg [f, g] / deg g = 1/2 + 2/(2k + 1)",
        ratio(d_comm as i64, d_g as i64),
        stated,
    );

    b.check_true(
        "f_not_composite",
        "no q and h satisfy f = q(h) with deg h < deg f",
        proper_composite_test(&wit.f)?.is_none(),
    );
    b.check_true(
        "g_not_composite",
        "no q and h satisfy g = q(h) with deg h < deg g",
        proper_composite_test(&wit.g)?.is_none(),
    );

    let (_, f_top, _) = wit.f.degree_split()?;
    let (_, g_top, _) = wit.g.degree_split()?;
    let u_poly = NcPoly::monomial(wit.u.clone());
    let f_root = homogeneous_nth_root(&f_top, 3)?.map(|(root, _)| root);
    let g_root = homogeneous_nth_root(&g_top, 2)?.map(|(root, _)| root);
    b.check(
        "leading_f_cube_root",
        "the leading component of f is u^3",
        display_option(&f_root),
        &u_poly,
    );
    b.check(
        "leading_g_square_root",
        "the leading component of g is u^2",
        display_option(&g_root),
        &u_poly,
    );
    b.check_true(
        "top_degrees_non_dividing",
        "neither 6k + 3 nor 4k + 2 divides the other",
        d_f % d_g != 0 && d_g % d_f != 0,
    );

    Ok(b.finish())
}

pub fn verify_thm42(k: u32, cutoff: Option<i64>) -> Result<VerificationReport> {
    let wit = CommutatorWitness::new(k)?;
    let cutoff = cutoff.unwrap_or_else(|| default_cutoff(k));
    let mut b = ReportBuilder::new("thm42");
    b.param("k", k);
    b.param("cutoff", cutoff);

    let s_elem = GroupAlgElem::from_ncpoly(&wit.s);
    let a1 = sylvester_solve(&wit.u, &s_elem, SYLVESTER_DEFAULT_CAP)?;
    let w_u_inv =
        GroupWord::from_word(&wit.w).concat(&GroupWord::from_word(&wit.u).inverse());
    b.check(
        "a1",
        "the finitely supported solution of u a + a u = v + w is w u^-1",
        &a1,
        GroupAlgElem::monomial(w_u_inv),
    );
    let u_elem = GroupAlgElem::monomial(GroupWord::from_word(&wit.u));
    b.check(
        "a1_equation",
        "u a1 + a1 u = v + w",
        &(&ga_mul(&u_elem, &a1) + &ga_mul(&a1, &u_elem)),
        &s_elem,
    );
    let d_a1 = a1.degree().expect("a1 is nonzero");
    b.check("deg_a1", "deg a1 = 1 - 2k", d_a1, 1 - 2 * i64::from(k));

    let rho = series_sqrt(&wit.g, &wit.u, cutoff)?;
    let parts = series_power_positive_part(&rho, 3)?;
    let mut total = GroupAlgElem::zero();
    for comp in parts.values() {
        total = &total + comp;
    }
    b.check(
        "cube_positive_part",
        "the positive-degree part of rho^3 is u^3 + uv + uw + wu",
        &total,
        GroupAlgElem::from_ncpoly(&wit.f),
    );
    b.check(
        "inverse_letter_scan",
        "no positive-degree monomial carries an inverse letter",
        negative_exponent_scan(&parts, true).len(),
        0,
    );

    let omitted = wit.u.degree() as i64 + 2 * d_a1;
    b.check("deg_u2_a2", "deg(u^2 a2) = 3 - 2k", omitted, 3 - 2 * i64::from(k));
    b.check_true(
        "omitted_components_stay_negative",
        "a product touching any omitted component has degree at most 3 - 2k < 0",
        omitted < 0,
    );

    Ok(b.finish())
}

pub fn verify_ex11(a: u32, b: u32) -> Result<VerificationReport> {
    let pair = jacobian_pair(a, b)?;
    let mut rb = ReportBuilder::new("ex11");
    rb.param("a", a);
    rb.param("b", b);
    rb.param("c", pair.c);
    rb.param("k", pair.k);

    let residual = scaling_ode_residual(&pair.p, pair.c, pair.k);
    rb.check(
        "scaling_ode",
        "c z (1 + z) p' - (1 + kc z) p = 1",
        residual.display_with("z"),
        "0",
    );
    rb.check_true(
        "all_coefficients_nonzero",
        "every p_i for i = 0..k is nonzero",
        (0..=pair.k).all(|i| !pair.p.coeff(i).is_zero()),
    );
    let jac = jacobian(&pair.f, &pair.g);
    rb.check("jacobian", "J(f, g) = y", &jac, CommPoly::monomial(0, 1));
    rb.check(
        "deg_f",
        "deg f = a(a + b + 2)/c",
        display_option(&pair.f.degree()),
        a * (a + b + 2) / pair.c,
    );
    rb.check("deg_g", "deg g = a + b + 2", display_option(&pair.g.degree()), a + b + 2);
    rb.check(
        "deg_two_form",
        "deg(df ^ dg) = deg J + 2 = 3",
        display_option(&jac.degree().map(|d| d + 2)),
        3,
    );
    Ok(rb.finish())
}

pub fn verify_ex23(equation: &Equation, trials: u32, seed: u64) -> Result<VerificationReport> {
    let (l, m, n) = equation.exponents();
    let base = equation.base();
    let mut b = ReportBuilder::new("ex23");
    b.param("u", base);
    b.param("l", l);
    b.param("m", m);
    b.param("n", n);
    b.param("trials", trials);
    b.param("seed", seed);

    let alphabet = base_alphabet(base);
    let cores = small_free_cores(equation, &alphabet);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = 0;
    for _ in 0..trials {
        let sum = random_family_sum(equation, &cores, &mut rng)?;
        if equation.verify(&sum).is_ok() {
            good += 1;
        }
    }
    b.check(
        "random_block_sums",
        "each drawn sum of solution blocks satisfies [u^(lm), s] = [u^(ln), r]",
        good,
        trials,
    );

    if base.degree() * (l * m) as usize <= 9 {
        let cap = 2 * base.degree();
        b.param("oracle_degree_cap", cap);
        let oracle = completeness_oracle(equation, &alphabet, cap)?;
        b.check_true(
            "family_blocks_solve",
            "every family block within the degree cap satisfies the equation",
            oracle.families_solve,
        );
        b.check(
            "solution_space_dimension",
            "the solution space up to the degree cap has exactly the dimension of the family span",
            oracle.nullity,
            oracle.family_rank,
        );
    } else {
        b.param("oracle", "skipped");
    }
    Ok(b.finish())
}

fn base_alphabet(base: &Word) -> Vec<Letter> {
    let mut letters: Vec<Letter> = base.letters().to_vec();
    letters.sort_unstable();
    letters.dedup();
    letters
}

/// Free generators of degree up to `deg(u) + 1`, enough variety for draws.
fn small_free_cores(equation: &Equation, alphabet: &[Letter]) -> Vec<Word> {
    let mut cores = Vec::new();
    for degree in 1..=equation.base().degree() + 1 {
        for candidate in words_of_degree(alphabet, degree) {
            let form = equation.bimodule().factor(&candidate);
            if form.left == 0 && form.right == 0 && form.class == GeneratorClass::Free {
                cores.push(candidate);
            }
        }
    }
    cores
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-2..=2))
}

fn random_unipoly(rng: &mut ChaCha8Rng, max_power: u32) -> UniPoly {
    let mut p = UniPoly::zero();
    for e in 0..=max_power {
        p.add_term(e, random_coeff(rng));
    }
    p
}

fn random_upoly2(rng: &mut ChaCha8Rng, max_power: u32) -> UPoly2 {
    let mut p = UPoly2::zero();
    for left in 0..=max_power {
        for right in 0..=max_power {
            p.add_term(left, right, random_coeff(rng));
        }
    }
    p
}

fn random_homogeneous(rng: &mut ChaCha8Rng, degree: u32) -> UPoly2 {
    let mut p = UPoly2::zero();
    for left in 0..=degree {
        p.add_term(left, degree - left, random_coeff(rng));
    }
    p
}

/// One random solution: a polynomial part, up to two free blocks, and one
/// block per overlap pair with `a` drawn from the allowed range.
fn random_family_sum(
    equation: &Equation,
    cores: &[Word],
    rng: &mut ChaCha8Rng,
) -> Result<Solution> {
    let (l, _, n) = equation.exponents();
    let mut sum = equation.base_solution(&random_unipoly(rng, 2), &random_unipoly(rng, 2));
    for _ in 0..2 {
        if cores.is_empty() {
            break;
        }
        let core = &cores[rng.gen_range(0..cores.len())];
        sum = &sum + &equation.free_solution(core, &random_upoly2(rng, 1))?;
    }
    let need = l * (n - 1);
    let lo = need.saturating_sub(1);
    let hi = lo.max(4);
    for pair_index in 0..equation.bimodule().pairs().len() {
        let a = rng.gen_range(lo..=hi);
        let xi = rat(i64::from(rng.gen_range(1..=3u32)));
        let s3 = if a >= need {
            random_homogeneous(rng, a - need)
        } else {
            UPoly2::zero()
        };
        sum = &sum + &equation.overlap_solution(pair_index, a, xi, &s3)?;
    }
    Ok(sum)
}

struct OracleOutcome {
    nullity: usize,
    family_rank: usize,
    families_solve: bool,
}

/// Solves the commutator equation degree by degree as a raw linear system
/// over monomial coefficients, with no reference to the solution families,
/// then compares dimensions against the family span inside the same cap.
fn completeness_oracle(
    equation: &Equation,
    alphabet: &[Letter],
    cap: usize,
) -> Result<OracleOutcome> {
    let (l, m, n) = equation.exponents();
    let base = equation.base();
    let u_lm = NcPoly::monomial(base.pow((l * m) as usize));
    let u_ln = NcPoly::monomial(base.pow((l * n) as usize));

    let mut columns: Vec<BTreeMap<Word, Rational>> = Vec::new();
    for degree in 0..=cap {
        for candidate in words_of_degree(alphabet, degree) {
            let mono = NcPoly::monomial(candidate);
            let r_image = -&u_ln.commutator(&mono);
            let s_image = u_lm.commutator(&mono);
            columns.push(poly_coords(&r_image));
            columns.push(poly_coords(&s_image));
        }
    }
    let unknowns = columns.len();
    let nullity = unknowns - linalg::rank(columns);

    let mut blocks: Vec<Solution> = Vec::new();
    for j in 0..=(cap / base.degree()) as u32 {
        blocks.push(equation.base_solution(&UniPoly::term(j, rat(1)), &UniPoly::zero()));
        blocks.push(equation.base_solution(&UniPoly::zero(), &UniPoly::term(j, rat(1))));
    }
    let phi_deg = (l * (m - 1)) as usize * base.degree();
    for degree in 1..=cap {
        if phi_deg + degree > cap {
            break;
        }
        for candidate in words_of_degree(alphabet, degree) {
            let form = equation.bimodule().factor(&candidate);
            if form.left != 0 || form.right != 0 || form.class != GeneratorClass::Free {
                continue;
            }
            let budget = ((cap - phi_deg - degree) / base.degree()) as u32;
            for left in 0..=budget {
                for right in 0..=budget - left {
                    blocks
                        .push(equation.free_solution(&candidate, &UPoly2::monomial(left, right))?);
                }
            }
        }
    }
    let need = l * (n - 1);
    for pair_index in 0..equation.bimodule().pairs().len() {
        for a in need.saturating_sub(1)..=cap as u32 {
            blocks.push(equation.overlap_solution(pair_index, a, rat(1), &UPoly2::zero())?);
            if a >= need {
                for left in 0..=a - need {
                    let s3 = UPoly2::monomial(left, a - need - left);
                    blocks.push(equation.overlap_solution(pair_index, a, rat(0), &s3)?);
                }
            }
        }
    }

    let mut families_solve = true;
    let mut family: Vec<BTreeMap<(u8, Word), Rational>> = Vec::new();
    for sol in &blocks {
        if sol.is_zero() || !fits(sol, cap) {
            continue;
        }
        if equation.verify(sol).is_err() {
            families_solve = false;
        }
        family.push(tagged(sol));
    }
    let family_rank = linalg::rank(family);
    Ok(OracleOutcome { nullity, family_rank, families_solve })
}

fn poly_coords(p: &NcPoly) -> BTreeMap<Word, Rational> {
    p.iter().map(|(w, c)| (w.clone(), c.clone())).collect()
}

fn fits(solution: &Solution, cap: usize) -> bool {
    solution.r.degree().map_or(true, |d| d <= cap)
        && solution.s.degree().map_or(true, |d| d <= cap)
}

fn tagged(solution: &Solution) -> BTreeMap<(u8, Word), Rational> {
    let mut coords = BTreeMap::new();
    for (w, c) in solution.r.iter() {
        coords.insert((0u8, w.clone()), c.clone());
    }
    for (w, c) in solution.s.iter() {
        coords.insert((1u8, w.clone()), c.clone());
    }
    coords
}

pub fn verify_ex24(k: u32) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut b = ReportBuilder::new("ex24");
    b.param("k", k);

    let u = word("xyx");
    let f = &NcPoly::monomial(word("xyx")) + &NcPoly::monomial(word("yxx"));
    let t1 = NcPoly::monomial(word("xy"));
    let t2 = NcPoly::monomial(word("yx"));
    let lhs = &(&(&t1 * &f) - &(&f * &t2)) + &(&t2 * &f);
    let rhs = &(&t1 + &t2) * &NcPoly::monomial(word("yxx"));
    b.check(
        "border_identity",
        "t1 f - f t2 + t2 f = (xy + yx) yxx for f = xyx + yxx",
        &lhs,
        &rhs,
    );

    let (_, _, (f_lead, _)) = f.degree_split()?;
    b.check("leading_word", "the leading monomial of f is xyx", &f_lead, &u);
    let (_, _, (lead, _)) = lhs.degree_split()?;
    b.check(
        "result_leading_word",
        "the leading monomial of (xy + yx) yxx is xyyxx",
        &lead,
        "xyyxx",
    );
    b.check_true(
        "result_avoids_border",
        "xyyxx neither starts nor ends with xyx",
        !lead.starts_with(&u) && !lead.ends_with(&u),
    );

    let base = word("xy").pow(k as usize).concat(&word("x"));
    let pairs = overlap_pairs(&base)?;
    b.check("pair_count", "(xy)^k x has exactly k overlap pairs", pairs.len(), k);
    let observed: Vec<String> = pairs.iter().map(|p| p.degree().to_string()).collect();
    let stated: Vec<String> = (1..=k as usize).map(|i| (2 * i).to_string()).collect();
    b.check(
        "pair_degrees",
        "the pair degrees are 2, 4, ..., 2k",
        observed.join(" "),
        stated.join(" "),
    );
    b.check_true(
        "pair_equations",
        "every pair satisfies t1 u = u t2",
        pairs.iter().all(|p| p.t1.concat(&base) == base.concat(&p.t2)),
    );
    Ok(b.finish())
}

pub fn verify_intro(k: u32, m: u32, n: u32) -> Result<VerificationReport> {
    if k <= 2 {
        return Err(Error::InvalidParameter("k must exceed 2".into()));
    }
    if n == 0 || m <= n {
        return Err(Error::InvalidParameter("need m > n >= 1".into()));
    }
    let mut b = ReportBuilder::new("intro");
    b.param("k", k);
    b.param("m", m);
    b.param("n", n);

    let y = NcPoly::monomial(word("y"));
    let h = &NcPoly::monomial(word("x")) + &NcPoly::monomial(word("y").pow(k as usize));
    let f = &y + &h.pow(m as usize);
    let g = h.pow(n as usize);
    let commutator = f.commutator(&g);
    b.check(
        "commutator_identity",
        "[y + (x + y^k)^m, (x + y^k)^n] = [y, (x + y^k)^n]",
        &commutator,
        y.commutator(&g),
    );

    let (d_comm, top, _) = commutator.degree_split()?;
    let mut single_x = NcPoly::zero();
    for i in 0..n as usize {
        let padded = word("y")
            .pow(k as usize * i)
            .concat(&word("x"))
            .concat(&word("y").pow(k as usize * (n as usize - 1 - i)));
        single_x.add_term(padded, rat(1));
    }
    b.check(
        "leading_component",
        "the leading component of [f, g] is [y, sum over i of y^(ki) x y^(k(n-1-i))]",
        &top,
        y.commutator(&single_x),
    );

    let d_g = g.degree()?;
    let d_f = f.degree()?;
    b.check("deg_commutator", "deg [f, g] = k(n - 1) + 2", d_comm, (k * (n - 1) + 2) as usize);
    b.check("deg_g", "deg g = kn", d_g, (k * n) as usize);
    b.check("deg_f", "deg f = km", d_f, (k * m) as usize);
    b.check_true("degree_chain", "deg [f, g] < deg g < deg f", d_comm < d_g && d_g < d_f);
    Ok(b.finish())
}

pub fn degree_gap_report(
    f: &NcPoly,
    g: &NcPoly,
    p: Option<&NcPoly>,
) -> Result<VerificationReport> {
    let commutator = f.commutator(g);
    if commutator.is_zero() {
        return Err(Error::AlgebraicallyDependent);
    }
    let d_f = f.degree()?;
    let d_g = g.degree()?;
    let d_comm = commutator.degree().expect("commutator is nonzero");
    let gap = ratio(d_comm as i64, (d_f + d_g) as i64);

    let mut b = ReportBuilder::new("gap");
    b.param("f", f);
    b.param("g", g);
    if let Some(p) = p {
        b.param("p", p);
    }
    b.check("deg_f", "the total degree of f", d_f, d_f);
    b.check("deg_g", "the total degree of g", d_g, d_g);
    b.check("deg_commutator", "the total degree of [f, g]", d_comm, d_comm);
    b.check_true("subadditive", "deg [f, g] <= deg f + deg g", d_comm <= d_f + d_g);
    b.check("gap", "deg [f, g] / (deg f + deg g), in lowest terms", &gap, &gap);

    if let Some(p) = p {
        let (first, second) = (letter('x'), letter('y'));
        let mut weight = 0usize;
        for monomial in p.support() {
            let mut total = 0usize;
            for l in monomial.letters() {
                if *l == first {
                    total += d_f;
                } else if *l == second {
                    total += d_g;
                } else {
                    return Err(Error::ForeignLetter(l.as_char()));
                }
            }
            weight = weight.max(total);
        }
        let composed = p.compose2((first, second), f, g)?;
        let d_composed = composed.degree()?;
        let bound = &gap * &rat(weight as i64);
        b.check("weighted_degree", "w(p) with w(x) = deg f and w(y) = deg g", weight, weight);
        b.check("deg_composed", "the total degree of p(f, g)", d_composed, d_composed);
        b.check("bound_value", "the gap times w(p)", &bound, &bound);
        b.check_true(
            "gap_bound",
            "deg p(f, g) >= gap * w(p)",
            rat(d_composed as i64) >= bound,
        );
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn thm31_small_instances_pass() {
        let report = verify_thm31(2).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.computed("deg_commutator"), Some("9"));
        assert_eq!(report.computed("deg_g"), Some("10"));
        assert_eq!(report.computed("deg_f"), Some("15"));
        assert_eq!(report.computed("commutator_ratio"), Some("9/10"));
        assert_eq!(
            report.computed("commutator"),
            Some("xyxyxxyxy + xyxyxxyyx - xyyxxyxyx - yxyxxyxyx")
        );

        let report = verify_thm31(3).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.computed("deg_commutator"), Some("11"));
        assert_eq!(report.computed("deg_g"), Some("14"));

        assert!(verify_thm31(1).is_err());
    }

    #[test]
    fn thm42_default_cutoff_passes() {
        let report = verify_thm42(2, None).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.param("cutoff"), Some("-10"));
        assert_eq!(report.computed("a1"), Some("x^-1y^-1x^-1"));
        assert_eq!(report.computed("deg_a1"), Some("-3"));
        assert_eq!(report.computed("deg_u2_a2"), Some("-1"));
        assert_eq!(report.computed("inverse_letter_scan"), Some("0"));
    }

    #[test]
    fn thm42_cutoff_errors_propagate() {
        assert!(matches!(
            verify_thm42(2, Some(-11)),
            Err(Error::SeriesComponent { degree: -11, .. })
        ));
        assert!(matches!(
            verify_thm42(2, Some(0)),
            Err(Error::CutoffTooHigh { cutoff: 0, exponent: 3 })
        ));
    }

    #[test]
    fn ex11_grid_passes_with_frozen_degrees() {
        for (a, b, deg_f, deg_g) in [(3, 1, 9, 6), (5, 3, 25, 10), (7, 5, 49, 14)] {
            let report = verify_ex11(a, b).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.param("c"), Some("2"));
            assert_eq!(report.computed("deg_f"), Some(deg_f.to_string().as_str()));
            assert_eq!(report.computed("deg_g"), Some(deg_g.to_string().as_str()));
            assert_eq!(report.computed("jacobian"), Some("y"));
        }
        assert!(verify_ex11(3, 2).is_err());
        assert!(verify_ex11(4, 2).is_err());
    }

    #[test]
    fn ex23_oracle_cell_matches_frozen_dimension() {
        let eq = Equation::new(&word("xyx"), 1, 3, 2).unwrap();
        let report = verify_ex23(&eq, 5, 0).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.param("oracle_degree_cap"), Some("6"));
        assert_eq!(report.computed("solution_space_dimension"), Some("7"));
        assert_eq!(report.expected("solution_space_dimension"), Some("7"));
        assert_eq!(report.computed("random_block_sums"), Some("5"));
    }

    #[test]
    fn ex23_large_cell_skips_oracle() {
        let eq = Equation::new(&word("xyxyx"), 2, 3, 2).unwrap();
        let report = verify_ex23(&eq, 3, 1).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.param("oracle"), Some("skipped"));
        assert_eq!(report.computed("solution_space_dimension"), None);
    }

    #[test]
    fn ex24_identity_and_pair_counts() {
        for k in 2..=4 {
            let report = verify_ex24(k).unwrap();
            assert!(report.passed(), "{report}");
        }
        let report = verify_ex24(3).unwrap();
        assert_eq!(report.computed("pair_degrees"), Some("2 4 6"));
        assert_eq!(report.computed("border_identity"), Some("xyyxx + yxyxx"));
        assert_eq!(report.computed("result_leading_word"), Some("xyyxx"));
        assert!(verify_ex24(1).is_err());
    }

    #[test]
    fn intro_examples_pass() {
        let report = verify_intro(3, 3, 2).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.computed("deg_commutator"), Some("5"));
        assert_eq!(report.computed("deg_g"), Some("6"));
        assert_eq!(report.computed("deg_f"), Some("9"));

        let report = verify_intro(4, 5, 3).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.computed("deg_commutator"), Some("10"));
        assert_eq!(report.computed("deg_g"), Some("12"));
        assert_eq!(report.computed("deg_f"), Some("20"));

        assert!(verify_intro(2, 3, 2).is_err());
        assert!(verify_intro(3, 2, 2).is_err());
    }

    #[test]
    fn gap_report_values() {
        let wit = CommutatorWitness::new(2).unwrap();
        let p = parse_poly("xy - yx").unwrap();
        let report = degree_gap_report(&wit.f, &wit.g, Some(&p)).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.computed("gap"), Some("9/25"));
        assert_eq!(report.computed("weighted_degree"), Some("25"));
        assert_eq!(report.computed("deg_composed"), Some("9"));
        assert_eq!(report.computed("bound_value"), Some("9"));

        let x = NcPoly::monomial(word("x"));
        let y = NcPoly::monomial(word("y"));
        let report = degree_gap_report(&x, &y, None).unwrap();
        assert!(report.passed());
        assert_eq!(report.computed("gap"), Some("1"));

        assert!(matches!(
            degree_gap_report(&x, &x, None),
            Err(Error::AlgebraicallyDependent)
        ));
        let foreign = parse_poly("xz").unwrap();
        assert!(matches!(
            degree_gap_report(&wit.f, &wit.g, Some(&foreign)),
            Err(Error::ForeignLetter('z'))
        ));
    }
}
