//! Lie bialgebras: validation, the dual bialgebra, and morphisms.


use crate::kernel::field::Field;
use crate::lie::LieAlgebra;
use crate::report::{Check, CheckReport};

/// A Lie bialgebra: an algebra with cobracket constants
/// `delta(x_k) = sum_{i,j} f[k][i][j] x_i (x) x_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBialgebra<F> {
    algebra: LieAlgebra<F>,
    cobracket: Vec<Vec<Vec<F>>>,
}

impl<F: Field> LieBialgebra<F> {
    pub fn new(algebra: LieAlgebra<F>, cobracket: Vec<Vec<Vec<F>>>) -> Self {
        let n = algebra.dim();
        assert_eq!(cobracket.len(), n);
        for plane in &cobracket {
            assert_eq!(plane.len(), n);
            for row in plane {
                assert_eq!(row.len(), n);
            }
        }
        LieBialgebra { algebra, cobracket }
    }

    pub fn zero_cobracket(algebra: LieAlgebra<F>) -> Self {
        let n = algebra.dim();
        let zeros = vec![vec![vec![F::zero(); n]; n]; n];
        LieBialgebra { algebra, cobracket: zeros }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &LieAlgebra<F> {
        &self.algebra
    }

    /// Cobracket matrix of the k-th basis element:
    /// `delta(x_k)[i][j]` is the coefficient of `x_i (x) x_j`.
    pub fn cobracket_basis(&self, k: usize) -> &Vec<Vec<F>> {
        &self.cobracket[k]
    }

    /// Cobracket of a coordinate vector.
    pub fn cobracket_vector(&self, x: &[F]) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut out = vec![vec![F::zero(); n]; n];
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    if !self.cobracket[k][i][j].is_zero() {
                        out[i][j] = out[i][j].clone()
                            + c.clone() * self.cobracket[k][i][j].clone();
                    }
                }
            }
        }
        out
    }

    /// Runs all five bialgebra axioms, reporting one check per axiom with a
    /// witness on failure.
    pub fn validate(&self) -> CheckReport {
        let mut report = self.algebra.validate();
        report.push(self.check_cobracket_antisymmetry());
        report.push(self.check_co_jacobi());
        report.push(self.check_cocycle());
        report
    }

    fn check_cobracket_antisymmetry(&self) -> Check {
        let n = self.dim();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let sum = self.cobracket[k][i][j].clone() + self.cobracket[k][j][i].clone();
                    if !sum.is_zero() {
                        return Check::fail(
                            "cobracket antisymmetry",
                            format!(
                                "delta({})[{},{}] not skew (sum {})",
                                self.algebra.labels()[k],
                                self.algebra.labels()[i],
                                self.algebra.labels()[j],
                                sum
                            ),
                        );
                    }
                }
            }
        }
        Check::pass("cobracket antisymmetry")
    }

    /// Co-Jacobi: the cyclic sum of `(delta (x) id) delta(x)` vanishes.
    fn check_co_jacobi(&self) -> Check {
        let n = self.dim();
        for k in 0..n {
            // t[i][j][l]: coefficient of x_i (x) x_j (x) x_l in (delta(x)id)delta(x_k).
            let mut t = vec![vec![vec![F::zero(); n]; n]; n];
            for a in 0..n {
                for l in 0..n {
                    if self.cobracket[k][a][l].is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        for j in 0..n {
                            if self.cobracket[a][i][j].is_zero() {
                                continue;
                            }
                            t[i][j][l] = t[i][j][l].clone()
                                + self.cobracket[k][a][l].clone()
                                    * self.cobracket[a][i][j].clone();
                        }
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        // (1 + cyclic + cyclic^2) at slot (i,j,l)
                        let total = t[i][j][l].clone()
                            + t[j][l][i].clone()
                            + t[l][i][j].clone();
                        if !total.is_zero() {
                            return Check::fail(
                                "co-Jacobi identity",
                                format!(
                                    "witness x_{} at tensor slot ({},{},{})",
                                    self.algebra.labels()[k], i, j, l
                                ),
                            );
                        }
                    }
                }
            }
        }
        Check::pass("co-Jacobi identity")
    }

    /// 1-cocycle condition: `delta([x,y]) = x . delta(y) - y . delta(x)`
    /// with the adjoint action on `g (x) g`.
    fn check_cocycle(&self) -> Check {
        let n = self.dim();
        for x in 0..n {
            for y in (x + 1)..n {
                let lhs = self.cobracket_vector(self.algebra.bracket_basis(x, y));
                let rhs = matrix_sub(
                    &self.adjoint_on_tensor(x, &self.cobracket[y]),
                    &self.adjoint_on_tensor(y, &self.cobracket[x]),
                );
                if !matrices_equal(&lhs, &rhs) {
                    return Check::fail(
                        "cocycle condition",
                        format!(
                            "witness pair ({}, {})",
                            self.algebra.labels()[x],
                            self.algebra.labels()[y]
                        ),
                    );
                }
            }
        }
        Check::pass("cocycle condition")
    }

    /// Adjoint action of generator `x` on a two-tensor:
    /// `x.(a (x) b) = [x,a] (x) b + a (x) [x,b]`.
    fn adjoint_on_tensor(&self, x: usize, t: &[Vec<F>]) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut out = vec![vec![F::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if t[i][j].is_zero() {
                    continue;
                }
                let c = &t[i][j];
                let bi = self.algebra.bracket_basis(x, i);
                for k in 0..n {
                    if !bi[k].is_zero() {
                        out[k][j] = out[k][j].clone() + c.clone() * bi[k].clone();
                    }
                }
                let bj = self.algebra.bracket_basis(x, j);
                for k in 0..n {
                    if !bj[k].is_zero() {
                        out[i][k] = out[i][k].clone() + c.clone() * bj[k].clone();
                    }
                }
            }
        }
        out
    }
}

fn matrix_sub<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .map(|(x, y)| x.clone() - y.clone())
                .collect()
        })
        .collect()
}

fn matrices_equal<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    a.iter()
        .zip(b)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x == y))
}

/// Swaps the roles of bracket and cobracket: the dual bracket is the
/// transpose of the cobracket and vice versa. Applying it twice returns the
/// original bialgebra.
pub fn dual_bialgebra<F: Field>(b: &LieBialgebra<F>) -> LieBialgebra<F> {
    let n = b.dim();
    let labels: Vec<String> = b
        .algebra()
        .labels()
        .iter()
        .map(|l| format!("{l}^"))
        .collect();
    // [xi_i, xi_j] = sum_k f[k][i][j] xi_k
    let mut bracket = vec![vec![vec![F::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                bracket[i][j][k] = b.cobracket_basis(k)[i][j].clone();
            }
        }
    }
    // delta*(xi_k) = sum_{i,j} c[i][j]^k xi_i (x) xi_j
    let mut cobracket = vec![vec![vec![F::zero(); n]; n]; n];
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                cobracket[k][i][j] = b.algebra().bracket_basis(i, j)[k].clone();
            }
        }
    }
    LieBialgebra::new(LieAlgebra::new(labels, bracket), cobracket)
}

/// A linear map between bialgebras, stored as a (target dim) x (source dim)
/// matrix over the source and target bases.
#[derive(Clone, Debug)]
pub struct BialgebraMorphism<F> {
    pub source: LieBialgebra<F>,
    pub target: LieBialgebra<F>,
    pub matrix: Vec<Vec<F>>,
}

impl<F: Field> BialgebraMorphism<F> {
    pub fn identity(b: &LieBialgebra<F>) -> Self {
        let n = b.dim();
        let mut matrix = vec![vec![F::zero(); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = F::one();
        }
        BialgebraMorphism { source: b.clone(), target: b.clone(), matrix }
    }

    /// Image of a source coordinate vector.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        let (nt, ns) = (self.target.dim(), self.source.dim());
        assert_eq!(x.len(), ns);
        let mut out = vec![F::zero(); nt];
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() && !x[j].is_zero() {
                    out[i] = out[i].clone() + c.clone() * x[j].clone();
                }
            }
        }
        out
    }

    /// Checks that the map commutes with brackets and cobrackets.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();
        if self.matrix.len() != self.target.dim()
            || self.matrix.iter().any(|row| row.len() != self.source.dim())
        {
            report.push(Check::fail(
                "morphism shape",
                format!(
                    "matrix must be {} x {}",
                    self.target.dim(),
                    self.source.dim()
                ),
            ));
            return report;
        }
        report.push(Check::pass("morphism shape"));

        let ns = self.source.dim();
        let mut bracket_check = Check::pass("morphism commutes with brackets");
        'b: for i in 0..ns {
            for j in 0..ns {
                let lhs = self.apply(self.source.algebra().bracket_basis(i, j));
                let mi = self.apply(&self.source.algebra().basis_vector(i));
                let mj = self.apply(&self.source.algebra().basis_vector(j));
                let rhs = self.target.algebra().bracket_vectors(&mi, &mj);
                if lhs != rhs {
                    bracket_check = Check::fail(
                        "morphism commutes with brackets",
                        format!("witness pair ({i}, {j})"),
                    );
                    break 'b;
                }
            }
        }
        report.push(bracket_check);

        let nt = self.target.dim();
        let mut cobracket_check = Check::pass("morphism commutes with cobrackets");
        'c: for k in 0..ns {
            // (m (x) m) delta_source(x_k)
            let src = self.source.cobracket_basis(k);
            let mut lhs = vec![vec![F::zero(); nt]; nt];
            for i in 0..ns {
                for j in 0..ns {
                    if src[i][j].is_zero() {
                        continue;
                    }
                    let mi = self.apply(&self.source.algebra().basis_vector(i));
                    let mj = self.apply(&self.source.algebra().basis_vector(j));
                    for a in 0..nt {
                        for b in 0..nt {
                            if !mi[a].is_zero() && !mj[b].is_zero() {
                                lhs[a][b] = lhs[a][b].clone()
                                    + src[i][j].clone() * mi[a].clone() * mj[b].clone();
                            }
                        }
                    }
                }
            }
            let rhs = self
                .target
                .cobracket_vector(&self.apply(&self.source.algebra().basis_vector(k)));
            if !matrices_equal(&lhs, &rhs) {
                cobracket_check = Check::fail(
                    "morphism commutes with cobrackets",
                    format!("witness generator {k}"),
                );
                break 'c;
            }
        }
        report.push(cobracket_check);
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};
    use crate::presets;

    #[test]
    fn zero_bialgebra_passes_all_axioms() {
        let b = presets::zero_bialgebra(2);
        let report = b.validate();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 5);
    }

    #[test]
    fn borel_bialgebra_passes_all_axioms() {
        let report = presets::borel_bialgebra().validate();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn symmetric_cobracket_fails_antisymmetry() {
        let b = presets::borel_bialgebra();
        let mut cob = vec![vec![vec![rat(0, 1); 2]; 2]; 2];
        cob[1][1][1] = rat(1, 1); // delta(E) = E (x) E
        let bad = LieBialgebra::new(b.algebra().clone(), cob);
        let report = bad.validate();
        assert!(report
            .failed_names()
            .contains(&"cobracket antisymmetry".to_string()));
    }

    #[test]
    fn cocycle_violation_is_caught() {
        // sl2 with the sign of delta(F) flipped breaks the cocycle at (E,F).
        let good = presets::sl2_bialgebra();
        let n = 3;
        let mut cob = vec![vec![vec![rat(0, 1); n]; n]; n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    cob[k][i][j] = good.cobracket_basis(k)[i][j].clone();
                }
            }
        }
        cob[2][2][0] = rat(-1, 2);
        cob[2][0][2] = rat(1, 2);
        let bad = LieBialgebra::new(good.algebra().clone(), cob);
        let report = bad.validate();
        assert!(!report.all_passed());
        assert!(report
            .failed_names()
            .contains(&"cocycle condition".to_string()));
    }

    #[test]
    fn dual_is_an_involution() {
        let b = presets::borel_bialgebra();
        let dd = dual_bialgebra(&dual_bialgebra(&b));
        for k in 0..2 {
            for i in 0..2 {
                assert_eq!(
                    b.algebra().bracket_basis(k, i),
                    dd.algebra().bracket_basis(k, i)
                );
            }
            assert_eq!(b.cobracket_basis(k), dd.cobracket_basis(k));
        }
        let zz = presets::zero_bialgebra(2);
        let dz = dual_bialgebra(&zz);
        assert!(dz.validate().all_passed());
        assert!(dz
            .cobracket_basis(0)
            .iter()
            .all(|row| row.iter().all(num_traits::Zero::is_zero)));
    }

    #[test]
    fn dual_of_borel_bracket() {
        // [H^, E^] = -1/2 E^ from transposing the cobracket.
        let d = dual_bialgebra(&presets::borel_bialgebra());
        let b = d.algebra().bracket_basis(0, 1);
        assert_eq!(b[0], rat(0, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert!(d.validate().all_passed());
    }

    #[test]
    fn identity_morphism_validates() {
        let b = presets::borel_bialgebra();
        let m = BialgebraMorphism::identity(&b);
        assert!(m.validate().all_passed());
    }

    #[test]
    fn line_inclusion_is_a_morphism_but_h_to_e_is_not() {
        let b = presets::borel_bialgebra();
        let line = presets::zero_bialgebra_labeled(vec!["H".into()]);
        // H |-> H passes: delta(H) = 0 and the bracket on the line is zero.
        let incl = BialgebraMorphism {
            source: line.clone(),
            target: b.clone(),
            matrix: vec![vec![rat(1, 1)], vec![rat(0, 1)]],
        };
        assert!(incl.validate().all_passed());
        // H |-> E fails: delta(E) != 0.
        let bad = BialgebraMorphism {
            source: line,
            target: b,
            matrix: vec![vec![rat(0, 1)], vec![rat(1, 1)]],
        };
        assert!(!bad.validate().all_passed());
    }
}
