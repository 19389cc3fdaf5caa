//! Deterministic exact linear solving by sparse Gauss-Jordan elimination.
//!
//! Pivots are chosen in lexicographic order: columns are eliminated left to
//! right, and within a column the first not-yet-used row (in input order)
//! with a nonzero entry becomes the pivot. Free variables are set to zero.
//! The same input therefore always yields the same solution.

use std::collections::BTreeMap;


use crate::kernel::field::Field;

/// A finite linear system `A x = b` with sparse rows.
#[derive(Clone, Debug)]
pub struct LinearProblem<F> {
    pub cols: usize,
    rows: Vec<BTreeMap<usize, F>>,
    rhs: Vec<F>,
}

/// Outcome of an exact solve.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<F> {
    /// A solution with free variables zeroed.
    Solution(Vec<F>),
    /// The system is inconsistent; the witness describes a vanishing row
    /// combination with nonzero right-hand side.
    Inconsistent(InconsistencyWitness<F>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct InconsistencyWitness<F> {
    /// Index of the original row at which the contradiction surfaced.
    pub row: usize,
    /// The reduced right-hand side of the empty row (nonzero).
    pub residue: F,
}

impl<F: Field> LinearProblem<F> {
    pub fn new(cols: usize) -> Self {
        LinearProblem { cols, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Adds a constraint row from sparse (column, coefficient) pairs.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, F)>, rhs: F) {
        let mut row = BTreeMap::new();
        for (col, c) in entries {
            assert!(col < self.cols, "column index out of range");
            if c.is_zero() {
                continue;
            }
            match row.entry(col) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Solves the system. Never panics on inconsistent input.
    pub fn solve(&self) -> SolveOutcome<F> {
        let mut rows = self.rows.clone();
        let mut rhs = self.rhs.clone();
        let n = rows.len();
        // pivot_of_col[c] = row index holding the pivot for column c.
        let mut pivot_of_col: BTreeMap<usize, usize> = BTreeMap::new();
        let mut used = vec![false; n];

        for col in 0..self.cols {
            let Some(pivot_row) = (0..n).find(|&r| !used[r] && rows[r].contains_key(&col)) else {
                continue;
            };
            used[pivot_row] = true;
            pivot_of_col.insert(col, pivot_row);
            // Normalize the pivot row.
            let inv = F::one() / rows[pivot_row][&col].clone();
            let prow: BTreeMap<usize, F> = rows[pivot_row]
                .iter()
                .map(|(c, v)| (*c, v.clone() * inv.clone()))
                .collect();
            let prhs = rhs[pivot_row].clone() * inv;
            rows[pivot_row] = prow.clone();
            rhs[pivot_row] = prhs.clone();
            // Eliminate from all other rows.
            for r in 0..n {
                if r == pivot_row {
                    continue;
                }
                let Some(factor) = rows[r].get(&col).cloned() else {
                    continue;
                };
                for (c, v) in &prow {
                    let delta = factor.clone() * v.clone();
                    match rows[r].entry(*c) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            let neg = -delta;
                            if !neg.is_zero() {
                                e.insert(neg);
                            }
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            let diff = e.get().clone() - delta;
                            if diff.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = diff;
                            }
                        }
                    }
                }
                let new_rhs = rhs[r].clone() - factor * prhs.clone();
                rhs[r] = new_rhs;
            }
        }

        // Any untouched row with empty coefficients but nonzero rhs witnesses
        // inconsistency.
        for r in 0..n {
            if rows[r].is_empty() && !rhs[r].is_zero() {
                return SolveOutcome::Inconsistent(InconsistencyWitness {
                    row: r,
                    residue: rhs[r].clone(),
                });
            }
        }

        let mut solution = vec![F::zero(); self.cols];
        for (col, row) in pivot_of_col {
            solution[col] = rhs[row].clone();
        }
        SolveOutcome::Solution(solution)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};

    #[test]
    fn identity_system() {
        let mut p = LinearProblem::<Scalar>::new(3);
        for i in 0..3 {
            p.push_row([(i, rat(1, 1))], rat(i as i64 + 1, 1));
        }
        assert_eq!(
            p.solve(),
            SolveOutcome::Solution(vec![rat(1, 1), rat(2, 1), rat(3, 1)])
        );
    }

    #[test]
    fn inconsistent_with_witness() {
        let mut p = LinearProblem::<Scalar>::new(1);
        p.push_row([(0, rat(0, 1))], rat(1, 1));
        match p.solve() {
            SolveOutcome::Inconsistent(w) => {
                assert_eq!(w.row, 0);
                assert_eq!(w.residue, rat(1, 1));
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn underdetermined_zeroes_free_variables() {
        let mut p = LinearProblem::<Scalar>::new(2);
        p.push_row([(0, rat(1, 1)), (1, rat(1, 1))], rat(1, 1));
        assert_eq!(
            p.solve(),
            SolveOutcome::Solution(vec![rat(1, 1), rat(0, 1)])
        );
    }

    #[test]
    fn deterministic_under_repeat() {
        let mut p = LinearProblem::<Scalar>::new(4);
        p.push_row([(0, rat(2, 1)), (2, rat(1, 3))], rat(5, 1));
        p.push_row([(1, rat(1, 1)), (2, rat(1, 1)), (3, rat(1, 1))], rat(0, 1));
        p.push_row([(0, rat(1, 1)), (1, rat(1, 1))], rat(2, 1));
        let first = p.solve();
        for _ in 0..5 {
            assert_eq!(p.solve(), first);
        }
        // Exactness: the solution satisfies the system exactly.
        if let SolveOutcome::Solution(x) = &first {
            assert_eq!(
                x[0].clone() * rat(2, 1) + x[2].clone() * rat(1, 3),
                rat(5, 1)
            );
        } else {
            panic!("expected a solution");
        }
    }
}
