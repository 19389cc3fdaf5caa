//! Small built-in algebras used by tests, documentation, and the sample
//! input files.

use crate::bialgebra::LieBialgebra;
use crate::kernel::field::{rat, Scalar};
use crate::lie::LieAlgebra;

/// `sl2` with basis (H, E, F): `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H`.
pub fn sl2() -> LieAlgebra<Scalar> {
    let n = 3;
    let mut c = vec![vec![vec![rat(0, 1); n]; n]; n];
    c[0][1][1] = rat(2, 1);
    c[1][0][1] = rat(-2, 1);
    c[0][2][2] = rat(-2, 1);
    c[2][0][2] = rat(2, 1);
    c[1][2][0] = rat(1, 1);
    c[2][1][0] = rat(-1, 1);
    LieAlgebra::new(vec!["H".into(), "E".into(), "F".into()], c)
}

/// The 3-dimensional Heisenberg algebra: `[X,Y] = Z`.
pub fn heisenberg() -> LieAlgebra<Scalar> {
    let n = 3;
    let mut c = vec![vec![vec![rat(0, 1); n]; n]; n];
    c[0][1][2] = rat(1, 1);
    c[1][0][2] = rat(-1, 1);
    LieAlgebra::new(vec!["X".into(), "Y".into(), "Z".into()], c)
}

/// The Borel bialgebra on (H, E): `[H,E] = 2E`,
/// `delta(H) = 0`, `delta(E) = (E (x) H - H (x) E)/2`.
pub fn borel_bialgebra() -> LieBialgebra<Scalar> {
    let n = 2;
    let mut c = vec![vec![vec![rat(0, 1); n]; n]; n];
    c[0][1][1] = rat(2, 1);
    c[1][0][1] = rat(-2, 1);
    let algebra = LieAlgebra::new(vec!["H".into(), "E".into()], c);
    let mut f = vec![vec![vec![rat(0, 1); n]; n]; n];
    f[1][1][0] = rat(1, 2);
    f[1][0][1] = rat(-1, 2);
    LieBialgebra::new(algebra, f)
}

/// The standard bialgebra structure on sl2: `delta(H) = 0`,
/// `delta(E) = (E ^ H)/2`, `delta(F) = (F ^ H)/2`.
pub fn sl2_bialgebra() -> LieBialgebra<Scalar> {
    let algebra = sl2();
    let n = 3;
    let mut f = vec![vec![vec![rat(0, 1); n]; n]; n];
    f[1][1][0] = rat(1, 2);
    f[1][0][1] = rat(-1, 2);
    f[2][2][0] = rat(1, 2);
    f[2][0][2] = rat(-1, 2);
    LieBialgebra::new(algebra, f)
}

/// Abelian 3-dimensional algebra with cobracket `delta(X) = Y ^ Z`
/// (the dual of the Heisenberg algebra).
pub fn co_heisenberg() -> LieBialgebra<Scalar> {
    let algebra = LieAlgebra::abelian(vec!["X".into(), "Y".into(), "Z".into()]);
    let n = 3;
    let mut f = vec![vec![vec![rat(0, 1); n]; n]; n];
    f[0][1][2] = rat(1, 1);
    f[0][2][1] = rat(-1, 1);
    LieBialgebra::new(algebra, f)
}

/// Abelian bialgebra with zero cobracket in the given dimension.
pub fn zero_bialgebra(dim: usize) -> LieBialgebra<Scalar> {
    let labels = (0..dim).map(|i| format!("a{i}")).collect();
    LieBialgebra::zero_cobracket(LieAlgebra::abelian(labels))
}

/// Abelian zero bialgebra with explicit labels.
pub fn zero_bialgebra_labeled(labels: Vec<String>) -> LieBialgebra<Scalar> {
    LieBialgebra::zero_cobracket(LieAlgebra::abelian(labels))
}
