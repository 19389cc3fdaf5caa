//! Finite-dimensional Lie algebras given by structure constants.


use crate::kernel::field::Field;
use crate::report::{Check, CheckReport};

/// A Lie algebra of dimension `n` with bracket structure constants
/// `[x_i, x_j] = sum_k c[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F> {
    labels: Vec<String>,
    bracket: Vec<Vec<Vec<F>>>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds an algebra from dense structure constants. The caller provides
    /// `c[i][j]` as the coordinate vector of `[x_i, x_j]`.
    pub fn new(labels: Vec<String>, bracket: Vec<Vec<Vec<F>>>) -> Self {
        let n = labels.len();
        assert_eq!(bracket.len(), n);
        for row in &bracket {
            assert_eq!(row.len(), n);
            for entry in row {
                assert_eq!(entry.len(), n);
            }
        }
        LieAlgebra { labels, bracket }
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        let n = labels.len();
        let zero_vec = vec![F::zero(); n];
        LieAlgebra {
            labels,
            bracket: vec![vec![zero_vec; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        &self.bracket[i][j]
    }

    /// Coordinates of `[x, y]` for coordinate vectors `x`, `y`.
    pub fn bracket_vectors(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let scale = x[i].clone() * y[j].clone();
                for k in 0..n {
                    if !self.bracket[i][j][k].is_zero() {
                        out[k] = out[k].clone() + scale.clone() * self.bracket[i][j][k].clone();
                    }
                }
            }
        }
        out
    }

    /// Checks antisymmetry and the Jacobi identity by direct expansion,
    /// reporting a witness triple on failure.
    pub fn validate(&self) -> CheckReport {
        let n = self.dim();
        let mut report = CheckReport::new();

        let mut antisym = Check::pass("bracket antisymmetry");
        'anti: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let sum = self.bracket[i][j][k].clone() + self.bracket[j][i][k].clone();
                    if !sum.is_zero() {
                        antisym = Check::fail(
                            "bracket antisymmetry",
                            format!(
                                "c[{},{}]^{} + c[{},{}]^{} = {}",
                                self.labels[i], self.labels[j], self.labels[k],
                                self.labels[j], self.labels[i], self.labels[k], sum
                            ),
                        );
                        break 'anti;
                    }
                }
            }
        }
        report.push(antisym);

        let mut jacobi = Check::pass("Jacobi identity");
        'jac: for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let a = self.bracket_vectors(&self.basis_vector(i), &self.bracket[j][k]);
                    let b = self.bracket_vectors(&self.basis_vector(j), &self.bracket[k][i]);
                    let c = self.bracket_vectors(&self.basis_vector(k), &self.bracket[i][j]);
                    let total: Vec<F> = a
                        .into_iter()
                        .zip(b)
                        .zip(c)
                        .map(|((x, y), z)| x + y + z)
                        .collect();
                    if total.iter().any(|v| !v.is_zero()) {
                        jacobi = Check::fail(
                            "Jacobi identity",
                            format!(
                                "witness triple ({}, {}, {})",
                                self.labels[i], self.labels[j], self.labels[k]
                            ),
                        );
                        break 'jac;
                    }
                }
            }
        }
        report.push(jacobi);
        report
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};
    use crate::presets;

    #[test]
    fn abelian_validates() {
        let a = LieAlgebra::<Scalar>::abelian(vec!["a".into(), "b".into()]);
        assert!(a.validate().all_passed());
    }

    #[test]
    fn sl2_validates() {
        assert!(presets::sl2().validate().all_passed());
    }

    #[test]
    fn broken_jacobi_is_caught() {
        // sl2 with [E,F] corrupted: H replaced by H + E.
        let l = presets::sl2();
        let mut bracket = vec![vec![vec![rat(0, 1); 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                bracket[i][j] = l.bracket_basis(i, j).to_vec();
            }
        }
        bracket[1][2][1] = rat(1, 1);
        bracket[2][1][1] = rat(-1, 1);
        let broken = LieAlgebra::new(l.labels().to_vec(), bracket);
        let report = broken.validate();
        assert!(!report.all_passed());
        assert!(report.failed_names().contains(&"Jacobi identity".to_string()));
    }
}
