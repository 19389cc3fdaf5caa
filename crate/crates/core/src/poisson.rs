//! The classical layer: the cobracket extended to the enveloping algebra,
//! its dualization to the Poisson bracket of the formal group, Poisson
//! group axiom checks, and the homogeneous bracket of a Manin quadruple.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bialgebra::LieBialgebra;
use crate::functions::FunElement;
use crate::induced::{InducedModule, ModTensor};
use crate::kernel::env::{delta0, env_mul, EnvElement};
use crate::kernel::field::Field;
use crate::kernel::monomial::{monomials_up_to, PbwMonomial};
use crate::kernel::series::Capped;
use crate::kernel::tensor::Tensor;
use crate::quadruple::ManinQuadruple;
use crate::report::{Check, CheckReport};

/// The formal group of a bialgebra: carries the extended cobracket table
/// and the induced Poisson bracket on truncated functions.
#[derive(Clone, Debug)]
pub struct FormalGroup<F> {
    bialgebra: LieBialgebra<F>,
    cap: u32,
    /// Extended cobracket on PBW monomials up to the cap; each value is
    /// exact (the extension never exceeds degree |monomial| + 1).
    delta_table: BTreeMap<PbwMonomial, Tensor<F, 2>>,
}

impl<F: Field> FormalGroup<F> {
    pub fn new(bialgebra: &LieBialgebra<F>, cap: u32) -> Self {
        let mut group = FormalGroup {
            bialgebra: bialgebra.clone(),
            cap,
            delta_table: BTreeMap::new(),
        };
        for d in 0..=cap {
            for m in crate::kernel::monomial::monomials_of_degree(bialgebra.dim(), d) {
                let value = group.extend_monomial(&m);
                group.delta_table.insert(m, value);
            }
        }
        group
    }

    pub fn bialgebra(&self) -> &LieBialgebra<F> {
        &self.bialgebra
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// delta(x_k) as a degree-(1,1) tensor.
    fn generator_cobracket(&self, k: usize) -> Tensor<F, 2> {
        let n = self.bialgebra.dim();
        let mut out = Tensor::zero();
        let table = self.bialgebra.cobracket_basis(k);
        for i in 0..n {
            for j in 0..n {
                if !table[i][j].is_zero() {
                    out.add_term(
                        [PbwMonomial::generator(n, i), PbwMonomial::generator(n, j)],
                        table[i][j].clone(),
                    );
                }
            }
        }
        out
    }

    /// Multiplicative extension by `delta(xy) = delta(x) d0(y) + d0(x) delta(y)`,
    /// factoring off the leading generator. The result has total degree at
    /// most `deg(m) + 1`, so the internal product cap is exact.
    fn extend_monomial(&self, m: &PbwMonomial) -> Tensor<F, 2> {
        if m.is_unit() {
            return Tensor::zero();
        }
        let alg = self.bialgebra.algebra();
        let i = m.leading_index().expect("nonunit monomial");
        let rest = m.without_one(i);
        let gen = EnvElement::generator(self.bialgebra.dim(), i);
        let cap = m.degree() + 1;

        let delta_gen = self.generator_cobracket(i);
        let d0_rest = delta0(&EnvElement::from_monomial(rest.clone(), F::one()));
        let first = delta_gen
            .mul(alg, &d0_rest, cap)
            .expect("same algebra")
            .expect_exact("cobracket extension");

        let delta_rest = match self.delta_table.get(&rest) {
            Some(t) => t.clone(),
            None => self.extend_monomial(&rest),
        };
        let d0_gen = delta0(&gen);
        let second = d0_gen
            .mul(alg, &delta_rest, cap)
            .expect("same algebra")
            .expect_exact("cobracket extension");

        first + second
    }

    /// The extended cobracket of an arbitrary element of `U(g_+)`.
    pub fn extend_cobracket(&self, a: &EnvElement<F>) -> Capped<Tensor<F, 2>> {
        let mut out = Tensor::zero();
        let mut overflow = false;
        for (m, c) in a.terms() {
            match self.delta_table.get(m) {
                Some(t) => out = out + t.scale(c),
                None => overflow = true,
            }
        }
        Capped::new(out, overflow)
    }

    /// Same extension computed by factoring off the trailing generator
    /// instead; used to verify independence of the factorization.
    pub fn extend_cobracket_alt(&self, m: &PbwMonomial) -> Tensor<F, 2> {
        if m.is_unit() {
            return Tensor::zero();
        }
        let alg = self.bialgebra.algebra();
        let i = m.trailing_index().expect("nonunit monomial");
        let rest = m.without_one(i);
        let cap = m.degree() + 1;
        let delta_rest = if rest.is_unit() {
            Tensor::zero()
        } else {
            self.extend_cobracket_alt(&rest)
        };
        let gen = EnvElement::generator(self.bialgebra.dim(), i);
        let d0_gen = delta0(&gen);
        let d0_rest = delta0(&EnvElement::from_monomial(rest, F::one()));
        let first = delta_rest
            .mul(alg, &d0_gen, cap)
            .expect("same algebra")
            .expect_exact("cobracket extension");
        let second = d0_rest
            .mul(alg, &self.generator_cobracket(i), cap)
            .expect("same algebra")
            .expect_exact("cobracket extension");
        first + second
    }

    /// The Poisson bracket of the formal group:
    /// `<{f,g}, a> = (f (x) g)(delta(a))` on all PBW monomials up to the
    /// cap. Flags overflow when the top degree of the bracket exceeds the
    /// cap.
    pub fn poisson_bracket(
        &self,
        f: &FunElement<F>,
        g: &FunElement<F>,
    ) -> Capped<FunElement<F>> {
        let n = self.bialgebra.dim();
        let top = f.degree() + g.degree();
        let overflow = top > 0 && top - 1 > self.cap;
        let value = FunElement::from_functional(n, self.cap, |m| {
            let d = self.delta_table.get(m).expect("within cap");
            let mut acc = F::zero();
            for (legs, c) in d.terms() {
                let pf = f.pair(&legs[0]);
                if pf.is_zero() {
                    continue;
                }
                let pg = g.pair(&legs[1]);
                if pg.is_zero() {
                    continue;
                }
                acc = acc + c.clone() * pf * pg;
            }
            acc
        });
        Capped::new(value, overflow)
    }
}

/// A table of brackets of coordinate functions, extendable to arbitrary
/// polynomials through the Leibnitz rule (a Poisson bracket is a
/// biderivation, so it is determined by its values on coordinates).
#[derive(Clone, Debug)]
pub struct PoissonBracketTable<F> {
    dim: usize,
    cap: u32,
    entries: BTreeMap<(usize, usize), FunElement<F>>,
}

impl<F: Field> PoissonBracketTable<F> {
    pub fn from_formal_group(group: &FormalGroup<F>) -> Self {
        let n = group.bialgebra().dim();
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let f = FunElement::coordinate(n, i);
                let g = FunElement::coordinate(n, j);
                let b = group.poisson_bracket(&f, &g).expect_exact("coordinate bracket");
                entries.insert((i, j), b);
            }
        }
        PoissonBracketTable { dim: n, cap: group.cap(), entries }
    }

    /// Builds a table directly from given coordinate brackets (used to
    /// exercise deliberately corrupted tables in checks).
    pub fn from_entries(
        dim: usize,
        cap: u32,
        entries: BTreeMap<(usize, usize), FunElement<F>>,
    ) -> Self {
        PoissonBracketTable { dim, cap, entries }
    }

    pub fn coordinate_bracket(&self, i: usize, j: usize) -> FunElement<F> {
        if i == j {
            return FunElement::new();
        }
        if i < j {
            self.entries.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.entries
                .get(&(j, i))
                .map(|f| f.clone().scale(&-F::one()))
                .unwrap_or_default()
        }
    }

    /// Leibnitz extension: `{f,g} = sum_{i,j} df/du_i dg/du_j {u_i,u_j}`.
    pub fn bracket(&self, f: &FunElement<F>, g: &FunElement<F>) -> Capped<FunElement<F>> {
        let mut out = FunElement::new();
        let mut overflow = false;
        for i in 0..self.dim {
            let fi = partial(f, i);
            if fi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if i == j {
                    continue;
                }
                let gj = partial(g, j);
                if gj.is_zero() {
                    continue;
                }
                let uij = self.coordinate_bracket(i, j);
                let p1 = fi.mul(&gj, self.cap);
                overflow |= p1.overflow;
                let p2 = p1.value.mul(&uij, self.cap);
                overflow |= p2.overflow;
                out = out + p2.value;
            }
        }
        Capped::new(out, overflow)
    }
}

/// Ordinary partial derivative of a polynomial with respect to `u_i`.
pub fn partial<F: Field>(f: &FunElement<F>, i: usize) -> FunElement<F> {
    let mut out = FunElement::new();
    for (m, c) in f.terms() {
        let e = m.exponents()[i];
        if e > 0 {
            out.add_term(
                m.without_one(i),
                c.clone() * crate::kernel::field::int::<F>(u64::from(e)),
            );
        }
    }
    out
}

/// Verifies the Poisson-group axioms for the bracket induced by the
/// bialgebra: antisymmetry, Jacobi, Leibnitz, and compatibility of the
/// group coproduct with the bracket. All checks run on coordinate
/// monomials within the degree budget; identities are only asserted where
/// no truncation flag is raised.
pub fn check_poisson_group<F: Field>(b: &LieBialgebra<F>, cap: u32) -> CheckReport {
    let group = FormalGroup::new(b, cap);
    let table = PoissonBracketTable::from_formal_group(&group);
    check_poisson_structure(&group, &table, cap)
}

/// The axiom suite, parameterized by the bracket table so corrupted tables
/// can be exercised.
pub fn check_poisson_structure<F: Field>(
    group: &FormalGroup<F>,
    table: &PoissonBracketTable<F>,
    cap: u32,
) -> CheckReport {
    let n = group.bialgebra().dim();
    let mut report = CheckReport::new();
    let monos = monomials_up_to(n, cap);
    let fun = |m: &PbwMonomial| FunElement::<F>::from_monomial(m.clone(), F::one());

    // Antisymmetry on all pairs within budget.
    let mut anti = Check::pass("bracket antisymmetry");
    'anti: for ma in &monos {
        for mb in &monos {
            if ma.degree() + mb.degree() > cap + 1 {
                continue;
            }
            let fg = table.bracket(&fun(ma), &fun(mb));
            let gf = table.bracket(&fun(mb), &fun(ma));
            if fg.overflow || gf.overflow {
                continue;
            }
            if !(fg.value.clone() + gf.value).is_zero() {
                anti = Check::fail("bracket antisymmetry", format!("pair ({ma}, {mb})"));
                break 'anti;
            }
        }
    }
    report.push(anti);

    // Jacobi on coordinate triples (extended to low-degree monomials).
    let mut jacobi = Check::pass("Jacobi identity");
    'jac: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (ui, uj, uk) = (
                    FunElement::<F>::coordinate(n, i),
                    FunElement::coordinate(n, j),
                    FunElement::coordinate(n, k),
                );
                let inner = table.bracket(&uj, &uk);
                let t1 = table.bracket(&ui, &inner.value);
                let inner = table.bracket(&uk, &ui);
                let t2 = table.bracket(&uj, &inner.value);
                let inner = table.bracket(&ui, &uj);
                let t3 = table.bracket(&uk, &inner.value);
                if t1.overflow || t2.overflow || t3.overflow {
                    continue;
                }
                let total = t1.value + t2.value + t3.value;
                if !total.is_zero() {
                    jacobi = Check::fail("Jacobi identity", format!("triple ({i},{j},{k})"));
                    break 'jac;
                }
            }
        }
    }
    report.push(jacobi);

    // Leibnitz: table extension versus the direct dual-pairing bracket.
    let mut leibniz = Check::pass("Leibnitz rule");
    'lei: for ma in &monos {
        for mb in &monos {
            if ma.degree() + mb.degree() + 1 > cap {
                continue;
            }
            let direct = group.poisson_bracket(&fun(ma), &fun(mb));
            let via_table = table.bracket(&fun(ma), &fun(mb));
            if direct.overflow || via_table.overflow {
                continue;
            }
            if direct.value != via_table.value {
                leibniz = Check::fail(
                    "Leibnitz rule",
                    format!("table extension differs from dual pairing at ({ma}, {mb})"),
                );
                break 'lei;
            }
        }
    }
    report.push(leibniz);

    // Coproduct compatibility: <{f,g}, a b> must expand by the product
    // Poisson structure of the tensor square.
    let alg = group.bialgebra().algebra();
    let mut compat = Check::pass("coproduct is a Poisson map");
    'com: for f in &monos {
        for g in &monos {
            if f.degree() + g.degree() > cap + 1 || f.degree() + g.degree() == 0 {
                continue;
            }
            let ff = fun(f);
            let gg = fun(g);
            let bracket = table.bracket(&ff, &gg);
            if bracket.overflow {
                continue;
            }
            for a in &monos {
                for bm in &monos {
                    if a.degree() + bm.degree() > cap {
                        continue;
                    }
                    let ea = EnvElement::from_monomial(a.clone(), F::one());
                    let eb = EnvElement::from_monomial(bm.clone(), F::one());
                    let ab = env_mul(alg, &ea, &eb, cap).expect("same algebra");
                    if ab.overflow {
                        continue;
                    }
                    let lhs = pair_env(&bracket.value, &ab.value);

                    // sum over d0(a) x delta(b) and delta(a) x d0(b)
                    let da = delta0(&ea);
                    let db = group.extend_cobracket(&eb);
                    let dda = group.extend_cobracket(&ea);
                    let ddb = delta0(&eb);
                    if db.overflow || dda.overflow {
                        continue;
                    }
                    let mut rhs = F::zero();
                    for (la, ca) in da.terms() {
                        for (lb, cb) in db.value.terms() {
                            let left = env_mul(
                                alg,
                                &EnvElement::from_monomial(la[0].clone(), F::one()),
                                &EnvElement::from_monomial(lb[0].clone(), F::one()),
                                cap,
                            )
                            .expect("same algebra");
                            let right = env_mul(
                                alg,
                                &EnvElement::from_monomial(la[1].clone(), F::one()),
                                &EnvElement::from_monomial(lb[1].clone(), F::one()),
                                cap,
                            )
                            .expect("same algebra");
                            if left.overflow || right.overflow {
                                continue;
                            }
                            rhs = rhs
                                + ca.clone()
                                    * cb.clone()
                                    * pair_env(&ff, &left.value)
                                    * pair_env(&gg, &right.value);
                        }
                    }
                    for (la, ca) in dda.value.terms() {
                        for (lb, cb) in ddb.terms() {
                            let left = env_mul(
                                alg,
                                &EnvElement::from_monomial(la[0].clone(), F::one()),
                                &EnvElement::from_monomial(lb[0].clone(), F::one()),
                                cap,
                            )
                            .expect("same algebra");
                            let right = env_mul(
                                alg,
                                &EnvElement::from_monomial(la[1].clone(), F::one()),
                                &EnvElement::from_monomial(lb[1].clone(), F::one()),
                                cap,
                            )
                            .expect("same algebra");
                            if left.overflow || right.overflow {
                                continue;
                            }
                            rhs = rhs
                                + ca.clone()
                                    * cb.clone()
                                    * pair_env(&ff, &left.value)
                                    * pair_env(&gg, &right.value);
                        }
                    }
                    if lhs != rhs {
                        compat = Check::fail(
                            "coproduct is a Poisson map",
                            format!("<{{{f},{g}}}, {a}.{bm}> mismatch"),
                        );
                        break 'com;
                    }
                }
            }
        }
    }
    report.push(compat);
    report
}

/// Pairs a function against an enveloping-algebra element.
pub fn pair_env<F: Field>(f: &FunElement<F>, a: &EnvElement<F>) -> F {
    let mut acc = F::zero();
    for (m, c) in a.terms() {
        let p = f.pair(m);
        if !p.is_zero() {
            acc = acc + c.clone() * p;
        }
    }
    acc
}

/// Pairs a function pair against a module tensor square (legs over the
/// carrier slots of an induced module).
pub fn pair_mod2<F: Field>(
    f: &FunElement<F>,
    g: &FunElement<F>,
    w: &ModTensor<F, 2>,
) -> F {
    let mut acc = F::zero();
    for (legs, c) in w.terms() {
        let pf = f.pair(&legs[0]);
        if pf.is_zero() {
            continue;
        }
        let pg = g.pair(&legs[1]);
        if pg.is_zero() {
            continue;
        }
        acc = acc + c.clone() * pf * pg;
    }
    acc
}

/// The homogeneous Poisson bracket of a Manin quadruple on functions on
/// `T = U(g)/U(g)h`:
/// `{f,g}(a 1_T) = (f (x) g)([delta0(a), r](1_T (x) 1_T))`.
///
/// The commutator orientation fixes the sign so that the bracket is the
/// semiclassical limit of the quantized product; by Casimir invariance and
/// `Omega(1_T (x) 1_T) = 0` it equals `(f (x) g)(r_op delta0(a)(1_T (x) 1_T))`.
pub fn homspace_bracket<F: Field>(
    q: &ManinQuadruple<F>,
    module: &InducedModule<F>,
    f: &FunElement<F>,
    g: &FunElement<F>,
) -> Capped<FunElement<F>> {
    let slots = module.slots();
    let cap = module.cap();
    let top = f.degree() + g.degree();
    let r_op = q.r.transposed();
    let mut overflow = top > 0 && top - 1 > cap;
    let value = FunElement::from_functional(slots, cap, |m| {
        let w = homspace_cobracket(q, module, m, &r_op);
        if w.overflow {
            overflow = true;
        }
        pair_mod2(f, g, &w.value)
    });
    Capped::new(value, overflow)
}

/// `r_op delta0(a)(1_T (x) 1_T)` for a carrier monomial `a`.
fn homspace_cobracket<F: Field>(
    q: &ManinQuadruple<F>,
    module: &InducedModule<F>,
    m: &PbwMonomial,
    r_op: &Tensor<F, 2>,
) -> Capped<ModTensor<F, 2>> {
    let _ = q;
    let v = crate::induced::ModElement::from_monomial(m.clone(), F::one());
    let split = module.coproduct(&v);
    module.act_tensor2(r_op, &split)
}

/// Structural checks for the homogeneous bracket: Casimir annihilation of
/// the cyclic tensor, skewness, Jacobi, and the linear-order Poisson
/// property of the coaction.
pub fn check_homspace_poisson<F: Field>(
    q: &ManinQuadruple<F>,
    module: &InducedModule<F>,
    cap: u32,
) -> CheckReport {
    let mut report = CheckReport::new();
    let slots = module.slots();
    let monos = monomials_up_to(slots, cap);
    let fun = |m: &PbwMonomial| FunElement::<F>::from_monomial(m.clone(), F::one());

    // (a) Omega(1_T (x) 1_T) = 0 exactly.
    let omega = q.r.omega();
    let annihilated = module
        .act_tensor2(&omega, &ModTensor::cyclic(slots))
        .expect_exact("degree-one action");
    report.push(Check::from_bool(
        "Casimir annihilates the cyclic tensor",
        annihilated.is_zero(),
        format!("Omega(1_T (x) 1_T) has {} terms", annihilated.num_terms()),
    ));

    // (b) Skewness on all pairs within budget.
    let mut skew = Check::pass("bracket skew-symmetric");
    'skew: for ma in &monos {
        for mb in &monos {
            if ma.degree() + mb.degree() > cap + 1 {
                continue;
            }
            let fg = homspace_bracket(q, module, &fun(ma), &fun(mb));
            let gf = homspace_bracket(q, module, &fun(mb), &fun(ma));
            if fg.overflow || gf.overflow {
                continue;
            }
            if !(fg.value.clone() + gf.value).is_zero() {
                skew = Check::fail("bracket skew-symmetric", format!("pair ({ma}, {mb})"));
                break 'skew;
            }
        }
    }
    report.push(skew);

    // (c) Jacobi on coordinate triples.
    let mut jacobi = Check::pass("Jacobi identity");
    'jac: for i in 0..slots {
        for j in 0..slots {
            for k in 0..slots {
                let (ui, uj, uk) = (
                    FunElement::<F>::coordinate(slots, i),
                    FunElement::coordinate(slots, j),
                    FunElement::coordinate(slots, k),
                );
                let t1 = {
                    let inner = homspace_bracket(q, module, &uj, &uk);
                    if inner.overflow {
                        continue;
                    }
                    homspace_bracket(q, module, &ui, &inner.value)
                };
                let t2 = {
                    let inner = homspace_bracket(q, module, &uk, &ui);
                    if inner.overflow {
                        continue;
                    }
                    homspace_bracket(q, module, &uj, &inner.value)
                };
                let t3 = {
                    let inner = homspace_bracket(q, module, &ui, &uj);
                    if inner.overflow {
                        continue;
                    }
                    homspace_bracket(q, module, &uk, &inner.value)
                };
                if t1.overflow || t2.overflow || t3.overflow {
                    continue;
                }
                let total = t1.value + t2.value + t3.value;
                if !total.is_zero() {
                    jacobi = Check::fail("Jacobi identity", format!("triple ({i},{j},{k})"));
                    break 'jac;
                }
            }
        }
    }
    report.push(jacobi);

    // (d) The coaction is a Poisson map at linear order: for generators x
    // of the double and carrier monomials t,
    //   {f,g}(x.t) = sum_{d0(x), rop-cobracket(t)} f(x_(1).w_1) g(x_(2).w_2)
    //              + sum_{[d0(x), r], i_T(t)} f(xi_1.t_(1)) g(xi_2.t_(2)).
    let alg = module.algebra();
    let dim = alg.dim();
    let r_op = q.r.transposed();
    let mut coaction = Check::pass("coaction is a Poisson map at linear order");
    'act: for x in 0..dim {
        let gen = EnvElement::generator(dim, x);
        let dx = delta0(&gen);
        let rx = {
            let xr = dx.mul(alg, q.r.tensor(), 4).expect("same algebra").value;
            let rxx = q.r.tensor().mul(alg, &dx, 4).expect("same algebra").value;
            xr - rxx
        };
        for t in &monos {
            if t.degree() + 1 > cap {
                continue;
            }
            for fi in 0..slots {
                for gi in 0..slots {
                    let f = FunElement::<F>::coordinate(slots, fi);
                    let g = FunElement::<F>::coordinate(slots, gi);
                    let tv = crate::induced::ModElement::from_monomial(t.clone(), F::one());
                    let xt = module.act_generator(x, &tv);
                    if xt.overflow {
                        continue;
                    }
                    let mut lhs = F::zero();
                    for (m, c) in xt.value.terms() {
                        let w = homspace_cobracket(q, module, m, &r_op);
                        if w.overflow {
                            continue 'act;
                        }
                        lhs = lhs + c.clone() * pair_mod2(&f, &g, &w.value);
                    }

                    let mut rhs = F::zero();
                    // term 1: d0(x) legs act after the cobracket of t.
                    let w = homspace_cobracket(q, module, t, &r_op);
                    if w.overflow {
                        continue 'act;
                    }
                    let acted = module.act_tensor2(&dx, &w.value);
                    if acted.overflow {
                        continue 'act;
                    }
                    rhs = rhs + pair_mod2(&f, &g, &acted.value);
                    // term 2: the double cobracket [d0(x), r] acts on i_T(t).
                    let split = module.coproduct(&tv);
                    let acted = module.act_tensor2(&rx, &split);
                    if acted.overflow {
                        continue 'act;
                    }
                    rhs = rhs + pair_mod2(&f, &g, &acted.value);

                    if lhs != rhs {
                        coaction = Check::fail(
                            "coaction is a Poisson map at linear order",
                            format!("generator {x}, monomial {t}, coordinates ({fi},{gi})"),
                        );
                        break 'act;
                    }
                }
            }
        }
    }
    report.push(coaction);

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};
    use crate::presets;

    #[test]
    fn cobracket_extension_examples() {
        let b = presets::borel_bialgebra();
        let group = FormalGroup::new(&b, 4);
        // delta(1) = 0
        let one = EnvElement::<Scalar>::unit(2);
        assert!(group.extend_cobracket(&one).value.is_zero());
        // delta(generator) = input cobracket
        let e = EnvElement::<Scalar>::generator(2, 1);
        let de = group.extend_cobracket(&e).value;
        let mut expected = Tensor::zero();
        expected.add_term(
            [PbwMonomial::generator(2, 1), PbwMonomial::generator(2, 0)],
            rat(1, 2),
        );
        expected.add_term(
            [PbwMonomial::generator(2, 0), PbwMonomial::generator(2, 1)],
            rat(-1, 2),
        );
        assert_eq!(de, expected);
    }

    #[test]
    fn extension_is_factorization_independent() {
        let b = presets::borel_bialgebra();
        let group = FormalGroup::new(&b, 5);
        for m in monomials_up_to(2, 5) {
            let via_leading = group
                .extend_cobracket(&EnvElement::from_monomial(m.clone(), rat(1, 1)))
                .value;
            let via_trailing = group.extend_cobracket_alt(&m);
            assert_eq!(via_leading, via_trailing, "factorization mismatch at {m}");
        }
    }

    #[test]
    fn delta_of_he_uses_the_rule() {
        // delta(HE) = delta(H) d0(E) + d0(H) delta(E) = d0(H) delta(E).
        let b = presets::borel_bialgebra();
        let group = FormalGroup::new(&b, 4);
        let alg = b.algebra();
        let he = EnvElement::from_monomial(PbwMonomial::from_exponents(vec![1, 1]), rat(1, 1));
        let direct = group.extend_cobracket(&he).value;
        let h = EnvElement::<Scalar>::generator(2, 0);
        let e = EnvElement::<Scalar>::generator(2, 1);
        let expected = delta0(&h)
            .mul(alg, &group.extend_cobracket(&e).value, 3)
            .unwrap()
            .value;
        assert_eq!(direct, expected);
    }

    #[test]
    fn zero_cobracket_gives_zero_bracket() {
        let b = presets::zero_bialgebra(2);
        let group = FormalGroup::new(&b, 4);
        let f = FunElement::<Scalar>::coordinate(2, 0);
        let g = FunElement::<Scalar>::coordinate(2, 1);
        assert!(group.poisson_bracket(&f, &g).value.is_zero());
    }

    #[test]
    fn borel_coordinate_bracket_linear_part() {
        // {u, v} = -v/2 + higher degree, with (u, v) dual to (H, E).
        let b = presets::borel_bialgebra();
        let group = FormalGroup::new(&b, 4);
        let u = FunElement::<Scalar>::coordinate(2, 0);
        let v = FunElement::<Scalar>::coordinate(2, 1);
        let bracket = group.poisson_bracket(&u, &v).expect_exact("coordinates");
        assert_eq!(
            bracket.coeff(&PbwMonomial::from_exponents(vec![0, 1])),
            rat(-1, 2)
        );
        assert_eq!(
            bracket.coeff(&PbwMonomial::from_exponents(vec![1, 0])),
            rat(0, 1)
        );
        // No constant term: <{u,v}, 1> = (u (x) v)(delta(1)) = 0.
        assert_eq!(bracket.coeff(&PbwMonomial::unit(2)), rat(0, 1));
    }

    #[test]
    fn dualization_round_trip_on_linear_coordinates() {
        for b in [presets::borel_bialgebra(), presets::sl2_bialgebra()] {
            let n = b.dim();
            let group = FormalGroup::new(&b, 3);
            for i in 0..n {
                for j in 0..n {
                    let ui = FunElement::<Scalar>::coordinate(n, i);
                    let uj = FunElement::<Scalar>::coordinate(n, j);
                    let bracket = group.poisson_bracket(&ui, &uj).value;
                    for k in 0..n {
                        assert_eq!(
                            bracket.coeff(&PbwMonomial::generator(n, k)),
                            b.cobracket_basis(k)[i][j],
                            "transpose mismatch at ({i},{j},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn poisson_group_axioms_hold() {
        for b in [presets::zero_bialgebra(2), presets::borel_bialgebra()] {
            let report = check_poisson_group(&b, 4);
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn corrupted_table_fails_compatibility() {
        // Flip the sign of {u, v} while keeping the cobracket: the
        // coproduct-compatibility check must fail.
        let b = presets::borel_bialgebra();
        let group = FormalGroup::new(&b, 4);
        let mut entries = BTreeMap::new();
        let mut flipped = FunElement::<Scalar>::new();
        flipped.add_term(PbwMonomial::from_exponents(vec![0, 1]), rat(1, 2));
        entries.insert((0, 1), flipped);
        let table = PoissonBracketTable::from_entries(2, 4, entries);
        let report = check_poisson_structure(&group, &table, 4);
        assert!(!report.all_passed());
        let failed = report.failed_names();
        assert!(
            failed.contains(&"coproduct is a Poisson map".to_string())
                || failed.contains(&"Leibnitz rule".to_string()),
            "expected a compatibility failure, got {failed:?}"
        );
    }

    #[test]
    fn leibniz_holds_identically() {
        let b = presets::borel_bialgebra();
        let group = FormalGroup::new(&b, 4);
        // {f, gh} - {f,g}h - g{f,h} = 0 for sampled polynomials.
        let f = FunElement::<Scalar>::coordinate(2, 0);
        let g = FunElement::<Scalar>::coordinate(2, 1);
        let mut h = FunElement::<Scalar>::coordinate(2, 0);
        h.add_term(PbwMonomial::from_exponents(vec![0, 1]), rat(2, 1));
        let gh = g.mul(&h, 4).value;
        let lhs = group.poisson_bracket(&f, &gh).value;
        let t1 = group.poisson_bracket(&f, &g).value.mul(&h, 4).value;
        let t2 = g.mul(&group.poisson_bracket(&f, &h).value, 4).value;
        assert_eq!(lhs, t1 + t2);
    }
}
