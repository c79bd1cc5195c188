//! Exact computation in the free associative algebra over the rationals:
//! deglex monomial orders, word combinatorics, bimodule decompositions of
//! centralizer-style equations, truncated square-root series in the free
//! group algebra, and the verification routines behind the `freealg` CLI.

mod bimodule;
mod checks;
mod combinatorics;
mod commutative;
mod error;
mod group;
mod linalg;
mod parse;
mod poly;
mod rational;
mod report;
mod series;
mod solver;
mod upoly;
mod word;

pub use bimodule::{factor_monomial, Bimodule, BimoduleForm, GeneratorClass, MonomialForm};
pub use checks::{
    degree_gap_report, default_cutoff, verify_ex11, verify_ex23, verify_ex24, verify_intro,
    verify_thm31, verify_thm42, CommutatorWitness,
};
pub use combinatorics::{
    homogeneous_nth_root, is_primitive, overlap_pairs, primitive_root, proper_composite_test,
    words_of_degree, OverlapPair, PrimitiveDecomposition,
};
pub use commutative::{jacobian, jacobian_pair, scaling_ode_residual, CommPoly, JacobianPair};
pub use error::{Error, Result};
pub use group::{ga_mul, group_reduce, GroupAlgElem, GroupWord, SignedLetter};
pub use parse::{commutative_pairs, parse_group, parse_group_word, parse_poly, parse_word};
pub use poly::NcPoly;
pub use rational::{rat, ratio, Rational};
pub use report::{ReportBuilder, Status, VerificationReport};
pub use series::{
    negative_exponent_scan, series_power_positive_part, series_sqrt, sylvester_solve,
    GradedSeries, SYLVESTER_DEFAULT_CAP,
};
pub use solver::{Equation, Solution};
pub use upoly::{UPoly2, UniPoly};
pub use word::{Letter, MonomialOrder, Word};
