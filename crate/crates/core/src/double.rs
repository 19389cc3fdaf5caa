//! The Drinfeld double of a Lie bialgebra, its canonical pairing, the
//! classical r-matrix, and the Casimir.

use std::fmt;

use num_traits::Zero;

use crate::bialgebra::{dual_bialgebra, LieBialgebra};
use crate::kernel::env::{delta0, EnvElement};
use crate::kernel::field::Field;
use crate::kernel::linear::{LinearProblem, SolveOutcome};
use crate::kernel::monomial::PbwMonomial;
use crate::kernel::tensor::Tensor;
use crate::lie::LieAlgebra;
use crate::report::{Check, CheckReport};

/// Errors from the double construction.
#[derive(Clone, Debug, PartialEq)]
pub enum DoubleError {
    /// The input bialgebra failed validation.
    InvalidInput(Vec<String>),
    /// The assembled double violated an identity that must hold for valid
    /// input; signals an input-validation escape.
    Internal(String),
}

impl fmt::Display for DoubleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoubleError::InvalidInput(names) => {
                write!(f, "input bialgebra failed validation: {}", names.join(", "))
            }
            DoubleError::Internal(msg) => write!(f, "internal double-construction error: {msg}"),
        }
    }
}

impl std::error::Error for DoubleError {}

/// The double `g = g_+ (+) g_-` with its canonical invariant pairing.
/// Basis order: the `g_+` basis first, then the dual basis of `g_-`.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble<F> {
    total: LieAlgebra<F>,
    bialgebra: LieBialgebra<F>,
    n: usize,
}

impl<F: Field> DrinfeldDouble<F> {
    pub fn total(&self) -> &LieAlgebra<F> {
        &self.total
    }

    pub fn bialgebra(&self) -> &LieBialgebra<F> {
        &self.bialgebra
    }

    /// Half dimension `n`; the double has dimension `2n`.
    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn plus_indices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn minus_indices(&self) -> std::ops::Range<usize> {
        self.n..2 * self.n
    }

    /// The canonical symmetric pairing `<e_i, e_j>` on basis vectors.
    pub fn pairing(&self, i: usize, j: usize) -> F {
        let n = self.n;
        if i < n && j >= n && j - n == i {
            F::one()
        } else if j < n && i >= n && i - n == j {
            F::one()
        } else {
            F::zero()
        }
    }

    pub fn pairing_vectors(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * b.clone() * self.pairing(i, j);
            }
        }
        acc
    }
}

/// The classical r-matrix `r = sum_i x_i^+ (x) x_i^-` of a double.
#[derive(Clone, Debug)]
pub struct RMatrix<F> {
    tensor: Tensor<F, 2>,
    dim: usize,
}

impl<F: Field> RMatrix<F> {
    pub fn tensor(&self) -> &Tensor<F, 2> {
        &self.tensor
    }

    /// `r^op`: legs swapped.
    pub fn transposed(&self) -> Tensor<F, 2> {
        crate::kernel::tensor::flip2(&self.tensor)
    }

    /// The Casimir `Omega = r + r^op`.
    pub fn omega(&self) -> Tensor<F, 2> {
        self.tensor.clone() + self.transposed()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Builds the double: mixed brackets are derived symbolically as the unique
/// solution of the pairing-invariance equations, so any sign-convention
/// error surfaces in the Jacobi and invariance checks rather than being
/// hard-coded.
pub fn build_double<F: Field>(
    b: &LieBialgebra<F>,
) -> Result<(DrinfeldDouble<F>, RMatrix<F>), DoubleError> {
    let validation = b.validate();
    if !validation.all_passed() {
        return Err(DoubleError::InvalidInput(validation.failed_names()));
    }

    let n = b.dim();
    let dual = dual_bialgebra(b);
    let dim = 2 * n;
    let mut bracket = vec![vec![vec![F::zero(); dim]; dim]; dim];

    // Copy the g_+ bracket and the dual (g_-) bracket into their blocks.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                bracket[i][j][k] = b.algebra().bracket_basis(i, j)[k].clone();
                bracket[n + i][n + j][n + k] = dual.algebra().bracket_basis(i, j)[k].clone();
            }
        }
    }

    // Mixed brackets [x_i^+, xi_j^-]: solve <[x, xi], e_c> from invariance,
    //   <[x, xi], eta> =  <x, [xi, eta]>   (cyclic, known g_- bracket)
    //   <[x, xi], y>   = -<xi, [x, y]>     (cyclic, known g_+ bracket)
    // The pairing is nondegenerate, so each bracket is uniquely determined.
    let pairing = |i: usize, j: usize| -> F {
        if i < n && j >= n && j - n == i {
            F::one()
        } else if j < n && i >= n && i - n == j {
            F::one()
        } else {
            F::zero()
        }
    };
    for i in 0..n {
        for j in 0..n {
            let mut problem = LinearProblem::<F>::new(dim);
            for c in 0..dim {
                let entries = (0..dim).map(|k| (k, pairing(k, c)));
                let rhs = if c < n {
                    // -<xi_j, [x_i, y_c]>
                    let mut acc = F::zero();
                    let br = b.algebra().bracket_basis(i, c);
                    acc = acc - br[j].clone();
                    acc
                } else {
                    // <x_i, [xi_j, eta_{c-n}]>
                    dual.algebra().bracket_basis(j, c - n)[i].clone()
                };
                problem.push_row(entries, rhs);
            }
            match problem.solve() {
                SolveOutcome::Solution(w) => {
                    for (k, v) in w.into_iter().enumerate() {
                        bracket[i][n + j][k] = v.clone();
                        bracket[n + j][i][k] = -v;
                    }
                }
                SolveOutcome::Inconsistent(_) => {
                    return Err(DoubleError::Internal(
                        "invariance equations for a mixed bracket are inconsistent".into(),
                    ));
                }
            }
        }
    }

    let mut labels: Vec<String> = b.algebra().labels().to_vec();
    labels.extend(b.algebra().labels().iter().map(|l| format!("{l}^")));
    let total = LieAlgebra::new(labels, bracket);

    // For valid input the assembled double must satisfy Jacobi; a failure
    // here is an internal error, not a user error.
    let report = total.validate();
    if !report.all_passed() {
        return Err(DoubleError::Internal(format!(
            "assembled double failed: {}",
            report.failed_names().join(", ")
        )));
    }

    let mut r = Tensor::zero();
    for i in 0..n {
        r.add_term(
            [
                PbwMonomial::generator(dim, i),
                PbwMonomial::generator(dim, n + i),
            ],
            F::one(),
        );
    }

    let double = DrinfeldDouble { total, bialgebra: b.clone(), n };
    let rmatrix = RMatrix { tensor: r, dim };
    Ok((double, rmatrix))
}

/// Structural checks on a built double: pairing invariance, isotropy and
/// Lagrangian-ness of the halves, restriction of the bracket to each half,
/// and invariance of the Casimir.
pub fn validate_double<F: Field>(
    double: &DrinfeldDouble<F>,
    r: &RMatrix<F>,
) -> CheckReport {
    let mut report = CheckReport::new();
    let dim = double.dim();
    let n = double.half_dim();
    let alg = double.total();

    let mut invariance = Check::pass("pairing invariance");
    'inv: for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                // <[a,b], c> = <a, [b,c]>
                let lhs = double.pairing_vectors(alg.bracket_basis(a, b), &alg.basis_vector(c));
                let rhs = double.pairing_vectors(&alg.basis_vector(a), alg.bracket_basis(b, c));
                if lhs != rhs {
                    invariance =
                        Check::fail("pairing invariance", format!("witness triple ({a},{b},{c})"));
                    break 'inv;
                }
            }
        }
    }
    report.push(invariance);

    let halves = [
        ("g_+ Lagrangian", 0..n),
        ("g_- Lagrangian", n..2 * n),
    ];
    for (name, range) in halves {
        let mut ok = true;
        let mut witness = String::new();
        for i in range.clone() {
            for j in range.clone() {
                if !double.pairing(i, j).is_zero() {
                    ok = false;
                    witness = format!("<e_{i}, e_{j}> != 0");
                }
                // closure of the half under the bracket
                let br = alg.bracket_basis(i, j);
                for (k, v) in br.iter().enumerate() {
                    if !v.is_zero() && !range.contains(&k) {
                        ok = false;
                        witness = format!("[e_{i}, e_{j}] leaves the half at e_{k}");
                    }
                }
            }
        }
        // dimension n is structural here; isotropy + closure is the content
        report.push(Check::from_bool(name, ok, witness));
    }

    // Bracket restrictions agree with the input and its dual.
    let b = double.bialgebra();
    let dual = dual_bialgebra(b);
    let mut restrict = Check::pass("bracket restrictions");
    'res: for i in 0..n {
        for j in 0..n {
            let plus = alg.bracket_basis(i, j);
            let want = b.algebra().bracket_basis(i, j);
            if plus[..n] != want[..] || plus[n..].iter().any(|v| !v.is_zero()) {
                restrict = Check::fail("bracket restrictions", format!("g_+ pair ({i},{j})"));
                break 'res;
            }
            let minus = alg.bracket_basis(n + i, n + j);
            let want = dual.algebra().bracket_basis(i, j);
            if minus[n..] != want[..] || minus[..n].iter().any(|v| !v.is_zero()) {
                restrict = Check::fail("bracket restrictions", format!("g_- pair ({i},{j})"));
                break 'res;
            }
        }
    }
    report.push(restrict);

    // Casimir invariance: [delta0(x), Omega] = 0 for all generators x.
    let omega = r.omega();
    let mut casimir = Check::pass("Casimir invariance");
    for x in 0..dim {
        let gen = EnvElement::generator(dim, x);
        let dx = delta0(&gen);
        let cap = 4;
        let left = dx.mul(alg, &omega, cap).unwrap().expect_exact("omega-invariance");
        let right = omega.mul(alg, &dx, cap).unwrap().expect_exact("omega-invariance");
        if left != right {
            casimir = Check::fail("Casimir invariance", format!("witness generator {x}"));
            break;
        }
    }
    report.push(casimir);

    report
}

/// Evaluates the classical Yang-Baxter expression
/// `[r_12, r_13] + [r_12, r_23] + [r_13, r_23]` in `U(g)^(x3)` and reports
/// whether it vanishes, with the nonzero tensor as witness.
pub fn check_cybe<F: Field>(r: &RMatrix<F>, double: &DrinfeldDouble<F>) -> Result<(), Tensor<F, 3>> {
    let alg = double.total();
    let dim = double.dim();
    let cap = 6;
    let r12 = crate::kernel::tensor::insert_unit_leg(r.tensor(), 2, dim);
    let r13 = crate::kernel::tensor::insert_unit_leg(r.tensor(), 1, dim);
    let r23 = crate::kernel::tensor::insert_unit_leg(r.tensor(), 0, dim);
    let comm = |a: &Tensor<F, 3>, b: &Tensor<F, 3>| -> Tensor<F, 3> {
        let ab = a.mul(alg, b, cap).unwrap().expect_exact("cybe");
        let ba = b.mul(alg, a, cap).unwrap().expect_exact("cybe");
        ab - ba
    };
    let total = comm(&r12, &r13) + comm(&r12, &r23) + comm(&r13, &r23);
    if total.is_zero() {
        Ok(())
    } else {
        Err(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};
    use crate::presets;

    #[test]
    fn zero_bialgebra_gives_abelian_double() {
        let (d, r) = build_double(&presets::zero_bialgebra(2)).unwrap();
        assert_eq!(d.dim(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert!(d.total().bracket_basis(i, j).iter().all(Zero::is_zero));
            }
        }
        assert_eq!(r.tensor().num_terms(), 2);
        assert!(validate_double(&d, &r).all_passed());
        assert!(check_cybe(&r, &d).is_ok());
    }

    #[test]
    fn borel_double_is_consistent() {
        let (d, r) = build_double(&presets::borel_bialgebra()).unwrap();
        let report = validate_double(&d, &r);
        assert!(report.all_passed(), "{report}");
        assert!(check_cybe(&r, &d).is_ok());
    }

    #[test]
    fn borel_double_mixed_brackets() {
        // Derived from invariance: [H, H^] = 0, [H, E^] = -2E^,
        // [E, H^] = -E/2, [E, E^] = H/2 + 2H^.
        let (d, _) = build_double(&presets::borel_bialgebra()).unwrap();
        let alg = d.total();
        assert!(alg.bracket_basis(0, 2).iter().all(Zero::is_zero));
        assert_eq!(alg.bracket_basis(0, 3)[3], rat(-2, 1));
        assert_eq!(alg.bracket_basis(1, 2)[1], rat(-1, 2));
        assert_eq!(alg.bracket_basis(1, 3)[0], rat(1, 2));
        assert_eq!(alg.bracket_basis(1, 3)[2], rat(2, 1));
    }

    #[test]
    fn corrupted_r_fails_cybe() {
        let (d, r) = build_double(&presets::borel_bialgebra()).unwrap();
        let mut bad = r.tensor().clone();
        bad.add_term(
            [PbwMonomial::generator(4, 1), PbwMonomial::generator(4, 1)],
            rat(1, 1),
        );
        let bad_r = RMatrix { tensor: bad, dim: 4 };
        assert!(check_cybe(&bad_r, &d).is_err());
    }

    #[test]
    fn double_of_dual_is_isomorphic_via_swap() {
        // The swap of halves composed with the pairing identification maps
        // the double of b to the double of dual(b); check it is a Lie
        // algebra isomorphism on all basis pairs.
        let b = presets::borel_bialgebra();
        let (d, _) = build_double(&b).unwrap();
        let (dd, _) = build_double(&crate::bialgebra::dual_bialgebra(&b)).unwrap();
        let n = d.half_dim();
        let dim = d.dim();
        // swap: e_i (g_+ of D(b)) |-> second half of D(b*), e_{n+i} |-> first half.
        let swap = |k: usize| if k < n { n + k } else { k - n };
        for i in 0..dim {
            for j in 0..dim {
                let br = d.total().bracket_basis(i, j);
                let mut mapped = vec![rat(0, 1); dim];
                for (k, v) in br.iter().enumerate() {
                    mapped[swap(k)] = v.clone();
                }
                let target = dd.total().bracket_basis(swap(i), swap(j));
                assert_eq!(&mapped[..], target, "swap map fails at ({i},{j})");
            }
        }
    }

    #[test]
    fn invalid_input_is_rejected() {
        let b = presets::borel_bialgebra();
        let mut cob = vec![vec![vec![rat(0, 1); 2]; 2]; 2];
        cob[1][1][1] = rat(1, 1);
        let bad = crate::bialgebra::LieBialgebra::new(b.algebra().clone(), cob);
        assert!(matches!(
            build_double(&bad),
            Err(DoubleError::InvalidInput(_))
        ));
    }
}
