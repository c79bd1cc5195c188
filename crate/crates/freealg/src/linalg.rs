//! Sparse exact linear solving over the rationals, used wherever a finite
//! candidate basis turns an operator equation into a linear system.

use std::collections::BTreeMap;

use num::Zero;

use crate::rational::Rational;

pub(crate) enum SolveOutcome {
    Solved(Vec<Rational>),
    /// No exact solution; `partial` assigns free variables zero and ignores
    /// unsatisfiable rows, so callers can inspect the leftover residual.
    Inconsistent { partial: Vec<Rational> },
}

/// Solves `A x = rhs` with column `i` of `A` given as a sparse map from row
/// key to entry.
pub(crate) fn solve_sparse<K: Ord + Clone>(
    columns: &[BTreeMap<K, Rational>],
    rhs: &BTreeMap<K, Rational>,
) -> SolveOutcome {
    let mut row_index: BTreeMap<&K, usize> = BTreeMap::new();
    for col in columns {
        for key in col.keys() {
            let next = row_index.len();
            row_index.entry(key).or_insert(next);
        }
    }
    for key in rhs.keys() {
        let next = row_index.len();
        row_index.entry(key).or_insert(next);
    }

    let mut rows: Vec<(BTreeMap<usize, Rational>, Rational)> =
        vec![(BTreeMap::new(), Rational::zero()); row_index.len()];
    for (i, col) in columns.iter().enumerate() {
        for (key, value) in col {
            rows[row_index[key]].0.insert(i, value.clone());
        }
    }
    for (key, value) in rhs {
        rows[row_index[key]].1 = value.clone();
    }

    // row echelon: pivot rows keyed by leading column, pivot entry scaled to 1
    let mut pivots: BTreeMap<usize, (BTreeMap<usize, Rational>, Rational)> = BTreeMap::new();
    let mut consistent = true;
    for (mut row, mut value) in rows {
        loop {
            let Some((&col, coeff)) = row.iter().next() else {
                if !value.is_zero() {
                    consistent = false;
                }
                break;
            };
            let coeff = coeff.clone();
            match pivots.get(&col) {
                Some((pivot_row, pivot_value)) => {
                    for (c, v) in pivot_row {
                        let delta = v * &coeff;
                        match row.entry(*c) {
                            std::collections::btree_map::Entry::Vacant(slot) => {
                                slot.insert(-delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut slot) => {
                                *slot.get_mut() -= delta;
                                if slot.get().is_zero() {
                                    slot.remove();
                                }
                            }
                        }
                    }
                    value -= pivot_value * &coeff;
                }
                None => {
                    let inverse = coeff.recip();
                    let scaled: BTreeMap<usize, Rational> =
                        row.iter().map(|(c, v)| (*c, v * &inverse)).collect();
                    pivots.insert(col, (scaled, value * inverse));
                    break;
                }
            }
        }
    }

    // back substitution, free variables zero
    let mut solution = vec![Rational::zero(); columns.len()];
    for (&col, (row, value)) in pivots.iter().rev() {
        let mut acc = value.clone();
        for (c, v) in row {
            if *c > col {
                acc -= v * &solution[*c];
            }
        }
        solution[col] = acc;
    }

    if consistent {
        SolveOutcome::Solved(solution)
    } else {
        SolveOutcome::Inconsistent { partial: solution }
    }
}

/// Rank of a family of sparse vectors, by incremental elimination against
/// pivot vectors scaled to a unit leading entry.
pub(crate) fn rank<K: Ord + Clone>(
    columns: impl IntoIterator<Item = BTreeMap<K, Rational>>,
) -> usize {
    let mut pivots: BTreeMap<K, BTreeMap<K, Rational>> = BTreeMap::new();
    for mut col in columns {
        loop {
            let Some((key, coeff)) = col.iter().next().map(|(k, v)| (k.clone(), v.clone()))
            else {
                break;
            };
            match pivots.get(&key) {
                Some(pivot) => {
                    for (k, v) in pivot {
                        let delta = v * &coeff;
                        match col.entry(k.clone()) {
                            std::collections::btree_map::Entry::Vacant(slot) => {
                                slot.insert(-delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut slot) => {
                                *slot.get_mut() -= delta;
                                if slot.get().is_zero() {
                                    slot.remove();
                                }
                            }
                        }
                    }
                }
                None => {
                    let inverse = coeff.recip();
                    let scaled = col.iter().map(|(k, v)| (k.clone(), v * &inverse)).collect();
                    pivots.insert(key, scaled);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn col(entries: &[(&str, i64)]) -> BTreeMap<String, Rational> {
        entries
            .iter()
            .map(|(k, v)| (k.to_string(), rat(*v)))
            .collect()
    }

    #[test]
    fn solves_square_system() {
        // x + y = 3, x - y = 1
        let columns = vec![col(&[("r1", 1), ("r2", 1)]), col(&[("r1", 1), ("r2", -1)])];
        let rhs = col(&[("r1", 3), ("r2", 1)]);
        match solve_sparse(&columns, &rhs) {
            SolveOutcome::Solved(x) => assert_eq!(x, vec![rat(2), rat(1)]),
            _ => panic!("expected a solution"),
        }
    }

    #[test]
    fn detects_inconsistency() {
        let columns = vec![col(&[("r1", 1), ("r2", 1)])];
        let rhs = col(&[("r1", 1), ("r2", 2)]);
        assert!(matches!(
            solve_sparse(&columns, &rhs),
            SolveOutcome::Inconsistent { .. }
        ));
    }

    #[test]
    fn underdetermined_picks_particular_solution() {
        // x + y = 2 with y free
        let columns = vec![col(&[("r1", 1)]), col(&[("r1", 1)])];
        let rhs = col(&[("r1", 2)]);
        match solve_sparse(&columns, &rhs) {
            SolveOutcome::Solved(x) => assert_eq!(x, vec![rat(2), rat(0)]),
            _ => panic!("expected a solution"),
        }
    }

    #[test]
    fn rank_counts_independent_columns() {
        let a = col(&[("r1", 1), ("r2", 2)]);
        let b = col(&[("r1", 2), ("r2", 4)]);
        let c = col(&[("r2", 1)]);
        assert_eq!(rank(vec![a.clone()]), 1);
        assert_eq!(rank(vec![a.clone(), b.clone()]), 1);
        assert_eq!(rank(vec![a.clone(), b, c]), 2);
        assert_eq!(rank(vec![col(&[]), a]), 1);
        assert_eq!(rank(Vec::<BTreeMap<String, Rational>>::new()), 0);
    }
}
