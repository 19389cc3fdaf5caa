//! Manin quadruples: a double together with a Lagrangian subalgebra.

use std::fmt;

use num_traits::Zero;

use crate::bialgebra::LieBialgebra;
use crate::double::{build_double, DoubleError, DrinfeldDouble, RMatrix};
use crate::kernel::field::Field;
use crate::report::{Check, CheckReport};

/// Row-reduces a list of vectors in place, returning the reduced basis
/// (nonzero rows in echelon form, pivot columns increasing).
pub fn row_reduce<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut rows: Vec<Vec<F>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<F>> = Vec::new();
    for mut row in rows.drain(..) {
        for b in &basis {
            let pivot = b.iter().position(|v| !v.is_zero()).unwrap();
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for k in 0..width {
                    let delta = factor.clone() * b[k].clone();
                    row[k] = row[k].clone() - delta;
                }
            }
        }
        if let Some(pivot) = row.iter().position(|v| !v.is_zero()) {
            let inv = F::one() / row[pivot].clone();
            for v in row.iter_mut() {
                *v = v.clone() * inv.clone();
            }
            basis.push(row);
            basis.sort_by_key(|r| r.iter().position(|v| !v.is_zero()).unwrap());
        }
    }
    // Back-substitute to reduced echelon form.
    let m = basis.len();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let pivot = basis[j].iter().position(|v| !v.is_zero()).unwrap();
            if !basis[i][pivot].is_zero() {
                let factor = basis[i][pivot].clone();
                for k in 0..width {
                    let delta = factor.clone() * basis[j][k].clone();
                    basis[i][k] = basis[i][k].clone() - delta;
                }
            }
        }
    }
    basis
}

/// Is `v` in the span of the reduced `basis`?
pub fn in_span<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    let mut row = v.to_vec();
    for b in basis {
        let pivot = b.iter().position(|x| !x.is_zero()).unwrap();
        if !row[pivot].is_zero() {
            let factor = row[pivot].clone();
            for k in 0..row.len() {
                let delta = factor.clone() * b[k].clone();
                row[k] = row[k].clone() - delta;
            }
        }
    }
    row.iter().all(Zero::is_zero)
}

/// A Manin quadruple: the double of a bialgebra plus a Lagrangian
/// subalgebra `h` given by a basis matrix over the double basis.
#[derive(Clone, Debug)]
pub struct ManinQuadruple<F> {
    pub double: DrinfeldDouble<F>,
    pub r: RMatrix<F>,
    /// Reduced basis of `h` (rows of length `2n`).
    lagrangian: Vec<Vec<F>>,
}

impl<F: Field> ManinQuadruple<F> {
    pub fn new(double: DrinfeldDouble<F>, r: RMatrix<F>, subspace: Vec<Vec<F>>) -> Self {
        let lagrangian = row_reduce(&subspace);
        ManinQuadruple { double, r, lagrangian }
    }

    pub fn lagrangian(&self) -> &[Vec<F>] {
        &self.lagrangian
    }

    /// Checks isotropy, dimension, and bracket closure of `h`.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let n = self.double.half_dim();

        report.push(Check::from_bool(
            "h has dimension n",
            self.lagrangian.len() == n,
            format!("dim h = {}, expected {}", self.lagrangian.len(), n),
        ));

        let mut isotropy = Check::pass("h isotropic");
        'iso: for (i, x) in self.lagrangian.iter().enumerate() {
            for (j, y) in self.lagrangian.iter().enumerate() {
                let p = self.double.pairing_vectors(x, y);
                if !p.is_zero() {
                    isotropy = Check::fail(
                        "h isotropic",
                        format!("<h_{i}, h_{j}> = {p}"),
                    );
                    break 'iso;
                }
            }
        }
        report.push(isotropy);

        let mut closure = Check::pass("h closed under bracket");
        'clo: for (i, x) in self.lagrangian.iter().enumerate() {
            for (j, y) in self.lagrangian.iter().enumerate() {
                let br = self.double.total().bracket_vectors(x, y);
                if !in_span(&self.lagrangian, &br) {
                    closure = Check::fail(
                        "h closed under bracket",
                        format!("[h_{i}, h_{j}] leaves h"),
                    );
                    break 'clo;
                }
            }
        }
        report.push(closure);
        report
    }
}

/// Errors from the coideal construction.
#[derive(Clone, Debug, PartialEq)]
pub enum CoidealError {
    NotASubalgebra { witness: String },
    NotACoideal { witness: String },
    Double(DoubleError),
}

impl fmt::Display for CoidealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoidealError::NotASubalgebra { witness } => {
                write!(f, "h_+ is not a subalgebra: {witness}")
            }
            CoidealError::NotACoideal { witness } => {
                write!(f, "h_+ is not a coideal: {witness}")
            }
            CoidealError::Double(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CoidealError {}

/// Builds the quadruple `h = h_+ (+) h_+^perp` from a subalgebra-coideal
/// `h_+` of `g_+`, with `h_+^perp` the orthogonal complement inside `g_-`.
pub fn quadruple_from_coideal<F: Field>(
    b: &LieBialgebra<F>,
    h_plus: &[Vec<F>],
) -> Result<ManinQuadruple<F>, CoidealError> {
    let n = b.dim();
    let reduced = row_reduce(h_plus);

    // Subalgebra check.
    for (i, x) in reduced.iter().enumerate() {
        for (j, y) in reduced.iter().enumerate() {
            let br = b.algebra().bracket_vectors(x, y);
            if !in_span(&reduced, &br) {
                return Err(CoidealError::NotASubalgebra {
                    witness: format!("[v_{i}, v_{j}] leaves h_+"),
                });
            }
        }
    }

    // Coideal check: delta(h_+) inside h_+ (x) g_+ + g_+ (x) h_+.
    // With P the reduction of g_+ modulo h_+, the condition is
    // (P (x) P) delta(v) = 0 for every basis vector v of h_+.
    let projected: Vec<Vec<F>> = (0..n)
        .map(|i| project_off_span(&reduced, &b.algebra().basis_vector(i)))
        .collect();
    for (idx, v) in reduced.iter().enumerate() {
        let cob = b.cobracket_vector(v);
        let mut pp = vec![vec![F::zero(); n]; n];
        for a in 0..n {
            for c in 0..n {
                if cob[a][c].is_zero() {
                    continue;
                }
                for x in 0..n {
                    if projected[a][x].is_zero() {
                        continue;
                    }
                    for y in 0..n {
                        if !projected[c][y].is_zero() {
                            pp[x][y] = pp[x][y].clone()
                                + cob[a][c].clone()
                                    * projected[a][x].clone()
                                    * projected[c][y].clone();
                        }
                    }
                }
            }
        }
        if pp.iter().any(|row| row.iter().any(|v| !v.is_zero())) {
            return Err(CoidealError::NotACoideal {
                witness: format!("generator v_{idx} of h_+"),
            });
        }
    }

    let (double, r) = build_double(b).map_err(CoidealError::Double)?;
    let dim = 2 * n;

    // h = h_+ (+) h_+^perp, with h_+^perp = { xi in g_- : xi(h_+) = 0 }.
    let mut subspace: Vec<Vec<F>> = Vec::new();
    for v in &reduced {
        let mut row = vec![F::zero(); dim];
        row[..n].clone_from_slice(v);
        subspace.push(row);
    }
    // Kernel of the map g_- -> h_+^*: solve xi(v) = 0 for all v.
    // Enumerate a basis of the kernel by row-reducing the value matrix.
    let value_rows: Vec<Vec<F>> = reduced
        .iter()
        .map(|v| (0..n).map(|j| v[j].clone()).collect())
        .collect();
    let perp = kernel_basis(&value_rows, n);
    for xi in perp {
        let mut row = vec![F::zero(); dim];
        row[n..].clone_from_slice(&xi);
        subspace.push(row);
    }

    Ok(ManinQuadruple::new(double, r, subspace))
}

/// Reduces `v` modulo the span of `basis`, returning the remainder.
pub fn project_off_span<F: Field>(basis: &[Vec<F>], v: &[F]) -> Vec<F> {
    let mut row = v.to_vec();
    for b in basis {
        let pivot = b.iter().position(|x| !x.is_zero()).unwrap();
        if !row[pivot].is_zero() {
            let factor = row[pivot].clone();
            for k in 0..row.len() {
                let delta = factor.clone() * b[k].clone();
                row[k] = row[k].clone() - delta;
            }
        }
    }
    row
}

/// A deterministic basis of `{ x : M x = 0 }` for the matrix with the given
/// rows, each of length `width`.
pub fn kernel_basis<F: Field>(rows: &[Vec<F>], width: usize) -> Vec<Vec<F>> {
    let reduced = row_reduce(rows);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.iter().position(|v| !v.is_zero()).unwrap())
        .collect();
    let mut out = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![F::zero(); width];
        v[free] = F::one();
        for (r, &p) in reduced.iter().zip(&pivots) {
            v[p] = -r[free].clone();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};
    use crate::presets;

    fn borel_double() -> (DrinfeldDouble<Scalar>, RMatrix<Scalar>) {
        build_double(&presets::borel_bialgebra()).unwrap()
    }

    #[test]
    fn g_plus_is_always_lagrangian() {
        let (d, r) = borel_double();
        let subspace = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)],
        ];
        let q = ManinQuadruple::new(d, r, subspace);
        assert!(q.validate().all_passed());
    }

    #[test]
    fn borel_quadruple_span_e_hdual_passes() {
        let (d, r) = borel_double();
        let subspace = vec![
            vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)], // E
            vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)], // H^
        ];
        let q = ManinQuadruple::new(d, r, subspace);
        let report = q.validate();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn non_isotropic_subspace_fails() {
        let (d, r) = borel_double();
        let subspace = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)], // H
            vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)], // H^ : <H, H^> = 1
        ];
        let q = ManinQuadruple::new(d, r, subspace);
        let report = q.validate();
        assert!(report.failed_names().contains(&"h isotropic".to_string()));
    }

    #[test]
    fn coideal_construction_on_span_e() {
        // h_+ = span{E}: delta(E) lies in E ^ g_+, perp = span{H^}.
        let b = presets::borel_bialgebra();
        let q = quadruple_from_coideal(&b, &[vec![rat(0, 1), rat(1, 1)]]).unwrap();
        assert!(q.validate().all_passed());
        let h = q.lagrangian();
        assert_eq!(h.len(), 2);
        // rows reduced: E and H^
        assert_eq!(h[0], vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(h[1], vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn coideal_construction_on_span_h() {
        let b = presets::borel_bialgebra();
        let q = quadruple_from_coideal(&b, &[vec![rat(1, 1), rat(0, 1)]]).unwrap();
        assert!(q.validate().all_passed());
        let h = q.lagrangian();
        assert_eq!(h[0], vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(h[1], vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn zero_subspace_gives_g_minus() {
        let b = presets::borel_bialgebra();
        let q = quadruple_from_coideal(&b, &[]).unwrap();
        assert!(q.validate().all_passed());
        assert_eq!(q.lagrangian().len(), 2);
        assert!(q.lagrangian().iter().all(|row| row[..2]
            .iter()
            .all(num_traits::Zero::is_zero)));
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        // In the standard sl2 bialgebra, span{E, F} is not closed: [E,F] = H.
        let b = presets::sl2_bialgebra();
        let err = quadruple_from_coideal(
            &b,
            &[
                vec![rat(0, 1), rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(0, 1), rat(1, 1)],
            ],
        )
        .unwrap_err();
        assert!(matches!(err, CoidealError::NotASubalgebra { .. }));
    }

    #[test]
    fn non_coideal_is_rejected() {
        // Co-Heisenberg: delta(X) = Y ^ Z, so span{X} is a subalgebra
        // (abelian) but not a coideal.
        let b = presets::co_heisenberg();
        assert!(b.validate().all_passed());
        let err = quadruple_from_coideal(&b, &[vec![rat(1, 1), rat(0, 1), rat(0, 1)]])
            .unwrap_err();
        assert!(matches!(err, CoidealError::NotACoideal { .. }));
    }
}
