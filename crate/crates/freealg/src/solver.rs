//! Solutions of `[u^(l*m), s] = [u^(l*n), r]` for a primitive word `u` and
//! coprime exponents `m > n`.
//!
//! The commutator acts on each piece of the bimodule decomposition
//! separately, so general solutions are sums of three kinds of blocks: an
//! arbitrary polynomial in `u` on either side, a free-core block scaled by
//! the quotients `phi_b = (u1^(lb) - u2^(lb)) / (u1^l - u2^l)`, and an
//! overlap-pair block with one scalar and one homogeneous free parameter.

use num::{Integer, One};

use crate::bimodule::{factor_monomial, Bimodule, GeneratorClass};
use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::rational::Rational;
use crate::upoly::{UPoly2, UniPoly};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub r: NcPoly,
    pub s: NcPoly,
}

impl Solution {
    pub fn zero() -> Self {
        Solution { r: NcPoly::zero(), s: NcPoly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }
}

impl std::ops::Add for &Solution {
    type Output = Solution;
    fn add(self, rhs: &Solution) -> Solution {
        Solution { r: &self.r + &rhs.r, s: &self.s + &rhs.s }
    }
}

pub struct Equation {
    bimodule: Bimodule,
    l: u32,
    m: u32,
    n: u32,
}

impl Equation {
    pub fn new(base: &Word, l: u32, m: u32, n: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidParameter("l must be positive".into()));
        }
        if n == 0 || m <= n {
            return Err(Error::InvalidParameter("need m > n >= 1".into()));
        }
        if m.gcd(&n) != 1 {
            return Err(Error::InvalidParameter("m and n must be coprime".into()));
        }
        Ok(Equation { bimodule: Bimodule::new(base)?, l, m, n })
    }

    pub fn base(&self) -> &Word {
        self.bimodule.base()
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn exponents(&self) -> (u32, u32, u32) {
        (self.l, self.m, self.n)
    }

    /// `phi_b = sum_i u1^(l(b-1-i)) u2^(li)`, the cyclotomic-style quotient
    /// with `(u1^l - u2^l) phi_b = u1^(lb) - u2^(lb)`.
    pub fn phi(&self, b: u32) -> UPoly2 {
        let mut out = UPoly2::zero();
        for i in 0..b {
            out.add_term(self.l * (b - 1 - i), self.l * i, Rational::one());
        }
        out
    }

    /// Both sides vanish on `K[u]`, so the polynomial parts are free.
    pub fn base_solution(&self, r1: &UniPoly, s1: &UniPoly) -> Solution {
        Solution {
            r: r1.expand_powers(self.base()),
            s: s1.expand_powers(self.base()),
        }
    }

    /// The block supported on one free core: `r = phi_m r2 . t`,
    /// `s = phi_n r2 . t` for an arbitrary two-sided multiplier `r2`.
    pub fn free_solution(&self, core: &Word, r2: &UPoly2) -> Result<Solution> {
        let (left, stripped, right) = factor_monomial(core, self.base());
        let class = self
            .bimodule
            .classify(&stripped)
            .expect("stripped cores never border the base");
        if left != 0 || right != 0 || class != GeneratorClass::Free {
            return Err(Error::NotFreeGenerator(core.clone()));
        }
        let r_mult = &self.phi(self.m) * r2;
        let s_mult = &self.phi(self.n) * r2;
        Ok(Solution {
            r: r_mult.apply(core, self.base()),
            s: s_mult.apply(core, self.base()),
        })
    }

    /// The block supported on one overlap pair. The scalar `xi` rides on
    /// `u1^a t1`; `s3`, when nonzero, must be homogeneous of degree
    /// `a - l(n-1)`, and `a + 1 >= l(n-1)` always.
    pub fn overlap_solution(
        &self,
        pair_index: usize,
        a: u32,
        xi: Rational,
        s3: &UPoly2,
    ) -> Result<Solution> {
        let Some(pair) = self.bimodule.pairs().get(pair_index) else {
            return Err(Error::InvalidParameter(format!(
                "pair index {pair_index} out of range for base {}",
                self.base()
            )));
        };
        let need = self.l * (self.n - 1);
        if a + 1 < need {
            return Err(Error::InvalidParameter(format!(
                "need a + 1 >= l(n-1) = {need}, got a = {a}"
            )));
        }
        if !s3.is_zero()
            && (a < need || s3.homogeneous_degree() != Some(a - need)) {
                return Err(Error::InvalidParameter(format!(
                    "s3 must be homogeneous of degree a - l(n-1) = {}",
                    a as i64 - need as i64
                )));
            }
        let jump = self.l * (self.m - self.n);
        let phi_n1 = self.phi(self.n - 1);
        let e = a + 1 - need;

        let q1 = UPoly2::term(a, 0, xi.clone());
        let mut q2 = &(&UPoly2::monomial(need, 0)
            + &(&UPoly2::monomial(0, self.l) * &phi_n1))
            * s3;
        q2 = &q2 + &(&UPoly2::term(e, self.l - 1, xi.clone()) * &phi_n1);
        let r3 = &UPoly2::term(e, 0, xi.clone()) + &(&UPoly2::monomial(0, 1) * s3);
        let p1 = UPoly2::term(a + jump, 0, xi);
        let p2 = &(&UPoly2::monomial(jump, 0) * &q2)
            + &(&(&UPoly2::monomial(0, self.l * self.n - 1) * &self.phi(self.m - self.n)) * &r3);

        let (t1, t2) = (&pair.t1, &pair.t2);
        Ok(Solution {
            r: &p1.apply(t1, self.base()) + &p2.apply(t2, self.base()),
            s: &q1.apply(t1, self.base()) + &q2.apply(t2, self.base()),
        })
    }

    /// Expands both commutators and insists they agree.
    pub fn verify(&self, solution: &Solution) -> Result<()> {
        let u_lm = NcPoly::monomial(self.base().pow((self.l * self.m) as usize));
        let u_ln = NcPoly::monomial(self.base().pow((self.l * self.n) as usize));
        let diff = &u_lm.commutator(&solution.s) - &u_ln.commutator(&solution.r);
        if diff.is_zero() {
            Ok(())
        } else {
            Err(Error::SolutionCheck(format!(
                "[u^(lm), s] - [u^(ln), r] = {diff}"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_word};
    use crate::rational::rat;

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    #[test]
    fn phi_small_cases() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        assert!(eq.phi(0).is_zero());
        assert_eq!(eq.phi(1), UPoly2::one());
        let mut phi3 = UPoly2::zero();
        phi3.add_term(2, 0, rat(1));
        phi3.add_term(1, 1, rat(1));
        phi3.add_term(0, 2, rat(1));
        assert_eq!(eq.phi(3), phi3);

        let eq2 = Equation::new(&w("xyx"), 2, 3, 2).unwrap();
        let mut phi2 = UPoly2::zero();
        phi2.add_term(2, 0, rat(1));
        phi2.add_term(0, 2, rat(1));
        assert_eq!(eq2.phi(2), phi2);
    }

    #[test]
    fn phi_factors_the_power_difference() {
        for l in 1..=3u32 {
            let eq = Equation::new(&w("xy"), l, 3, 2).unwrap();
            let step = &UPoly2::monomial(l, 0) - &UPoly2::monomial(0, l);
            for b in 0..=5u32 {
                let lhs = &step * &eq.phi(b);
                let rhs = &UPoly2::monomial(l * b, 0) - &UPoly2::monomial(0, l * b);
                assert_eq!(lhs, rhs, "l={l} b={b}");
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(Equation::new(&w("xyx"), 0, 3, 2).is_err());
        assert!(Equation::new(&w("xyx"), 1, 2, 2).is_err());
        assert!(Equation::new(&w("xyx"), 1, 2, 3).is_err());
        assert!(Equation::new(&w("xyx"), 1, 4, 2).is_err());
        assert!(Equation::new(&w("xyxy"), 1, 3, 2).is_err());
        assert!(Equation::new(&w("xyx"), 1, 3, 0).is_err());
        assert!(Equation::new(&w("xyx"), 2, 5, 3).is_ok());
    }

    #[test]
    fn base_blocks_commute_away() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        let r1 = UniPoly::from_coeffs(&[rat(1), rat(0), rat(-2)]);
        let s1 = UniPoly::from_coeffs(&[rat(3), rat(5)]);
        let sol = eq.base_solution(&r1, &s1);
        assert_eq!(sol.r, parse_poly("1 - 2xyxxyx").unwrap());
        eq.verify(&sol).unwrap();
    }

    #[test]
    fn free_blocks_solve_the_equation() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        let sol = eq.free_solution(&w("yy"), &UPoly2::one()).unwrap();
        eq.verify(&sol).unwrap();
        let mut r2 = UPoly2::monomial(1, 1);
        r2.add_term(0, 0, rat(-2));
        let sol = eq.free_solution(&w("yy"), &r2).unwrap();
        eq.verify(&sol).unwrap();

        let eq2 = Equation::new(&w("xxy"), 2, 5, 3).unwrap();
        let sol = eq2.free_solution(&w("yxy"), &UPoly2::monomial(0, 2)).unwrap();
        eq2.verify(&sol).unwrap();
    }

    #[test]
    fn free_block_rejects_bad_cores() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        for bad in ["xy", "yx", "xyxy", "yxyx", "xyx"] {
            assert!(eq.free_solution(&w(bad), &UPoly2::one()).is_err(), "{bad}");
        }
        assert!(eq.free_solution(&Word::empty(), &UPoly2::one()).is_err());
    }

    #[test]
    fn overlap_block_solves_the_equation() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        for a in 0..=3u32 {
            let sol = eq.overlap_solution(0, a, rat(1), &UPoly2::zero()).unwrap();
            eq.verify(&sol).unwrap();
        }
        let s3 = UPoly2::term(1, 1, rat(2));
        let sol = eq.overlap_solution(0, 3, rat(-1), &s3).unwrap();
        eq.verify(&sol).unwrap();

        let eq2 = Equation::new(&w("xxyxx"), 2, 3, 2).unwrap();
        for pair in 0..=1usize {
            let sol = eq2.overlap_solution(pair, 2, rat(1), &UPoly2::zero()).unwrap();
            eq2.verify(&sol).unwrap();
        }
    }

    #[test]
    fn overlap_block_parameter_checks() {
        let eq = Equation::new(&w("xyx"), 3, 2, 1).unwrap();
        // l(n-1) = 0, so every a works even with n = 1
        eq.verify(&eq.overlap_solution(0, 0, rat(1), &UPoly2::zero()).unwrap()).unwrap();

        let tight = Equation::new(&w("xyx"), 3, 3, 2).unwrap();
        assert!(tight.overlap_solution(0, 1, rat(1), &UPoly2::zero()).is_err());
        let sol = tight.overlap_solution(0, 2, rat(1), &UPoly2::zero()).unwrap();
        tight.verify(&sol).unwrap();

        let eq2 = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        assert!(eq2.overlap_solution(1, 0, rat(1), &UPoly2::zero()).is_err());
        let wrong_degree = UPoly2::monomial(2, 1);
        assert!(eq2.overlap_solution(0, 2, rat(1), &wrong_degree).is_err());
        let right_degree = UPoly2::monomial(1, 0);
        eq2.verify(&eq2.overlap_solution(0, 2, rat(1), &right_degree).unwrap()).unwrap();
    }

    #[test]
    fn smallest_overlap_solution_is_the_known_one() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        let sol = eq.overlap_solution(0, 0, rat(1), &UPoly2::zero()).unwrap();
        assert_eq!(sol.s, parse_poly("xy + yx").unwrap());
        assert_eq!(sol.r, parse_poly("xyxxy + xyxyx + yxxyx").unwrap());
    }

    #[test]
    fn solutions_add() {
        let eq = Equation::new(&w("xyx"), 1, 3, 2).unwrap();
        let a = eq.free_solution(&w("yy"), &UPoly2::one()).unwrap();
        let b = eq.overlap_solution(0, 1, rat(3), &UPoly2::zero()).unwrap();
        let c = eq.base_solution(&UniPoly::term(2, rat(1)), &UniPoly::one());
        let total = &(&a + &b) + &c;
        eq.verify(&total).unwrap();
        assert!(!total.is_zero());
    }
}
