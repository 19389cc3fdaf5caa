//! Truncated polynomial functions: the graded dual of a PBW basis.
//!
//! Coordinates `u_1 ... u_n` are dual to an ordered basis `x_1 ... x_n`;
//! the pairing is `<u^a, x^b> = a! delta_{ab}` (multi-factorial), chosen so
//! that the pointwise product of functions is exactly dual to the standard
//! coproduct of the enveloping algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::kernel::field::{factorial, Field};
use crate::kernel::monomial::PbwMonomial;
use crate::kernel::series::Capped;

/// A truncated polynomial in the coordinate functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunElement<F> {
    terms: BTreeMap<PbwMonomial, F>,
}

impl<F: Field> FunElement<F> {
    pub fn new() -> Self {
        FunElement { terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        FunElement::from_monomial(PbwMonomial::unit(dim), F::one())
    }

    pub fn coordinate(dim: usize, index: usize) -> Self {
        FunElement::from_monomial(PbwMonomial::generator(dim, index), F::one())
    }

    pub fn from_monomial(m: PbwMonomial, coeff: F) -> Self {
        let mut out = FunElement::new();
        out.add_term(m, coeff);
        out
    }

    pub fn add_term(&mut self, m: PbwMonomial, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return FunElement::new();
        }
        FunElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// The pairing `<f, x^b>` against a PBW monomial: `b! * coeff_b(f)`.
    pub fn pair(&self, m: &PbwMonomial) -> F {
        match self.terms.get(m) {
            None => F::zero(),
            Some(c) => c.clone() * exponent_factorial::<F>(m),
        }
    }

    /// Pointwise polynomial product, truncated at degree `cap`.
    pub fn mul(&self, other: &Self, cap: u32) -> Capped<Self> {
        let mut out = FunElement::new();
        let mut overflow = false;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.degree() + mb.degree() > cap {
                    overflow = true;
                    continue;
                }
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Capped::new(out, overflow)
    }

    /// Reconstructs the polynomial of degree `<= cap` from its functional
    /// values on PBW monomials.
    pub fn from_functional(
        dim: usize,
        cap: u32,
        mut value: impl FnMut(&PbwMonomial) -> F,
    ) -> Self {
        let mut out = FunElement::new();
        for m in crate::kernel::monomial::monomials_up_to(dim, cap) {
            let v = value(&m);
            if !v.is_zero() {
                out.add_term(m.clone(), v / exponent_factorial::<F>(&m));
            }
        }
        out
    }
}

/// Multi-factorial `a! = prod_i a_i!` of an exponent vector.
pub fn exponent_factorial<F: Field>(m: &PbwMonomial) -> F {
    m.exponents()
        .iter()
        .fold(F::one(), |acc, &e| acc * factorial::<F>(e))
}

impl<F: Field> Default for FunElement<F> {
    fn default() -> Self {
        FunElement::new()
    }
}

impl<F: Field> Zero for FunElement<F> {
    fn zero() -> Self {
        FunElement::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> Add for FunElement<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Field> Neg for FunElement<F> {
    type Output = Self;
    fn neg(self) -> Self {
        FunElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Sub for FunElement<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

impl<F: Field> fmt::Display for FunElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "({c})")?;
            } else {
                let names: Vec<String> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("u{i}") } else { format!("u{i}^{e}") })
                    .collect();
                write!(f, "({c})*{}", names.join("."))?;
            }
        }
        Ok(())
    }
}

/// A tensor square of functions (used for coproduct tables).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunTensor2<F> {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), F>,
}

impl<F: Field> FunTensor2<F> {
    pub fn new() -> Self {
        FunTensor2 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, left: PbwMonomial, right: PbwMonomial, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &PbwMonomial, right: &PbwMonomial) -> F {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn from_pair(f: &FunElement<F>, g: &FunElement<F>) -> Self {
        let mut out = FunTensor2::new();
        for (mf, cf) in f.terms() {
            for (mg, cg) in g.terms() {
                out.add_term(mf.clone(), mg.clone(), cf.clone() * cg.clone());
            }
        }
        out
    }

    /// Pairing against a pair of PBW monomials, with the factorial
    /// normalization on both legs.
    pub fn pair(&self, a: &PbwMonomial, b: &PbwMonomial) -> F {
        match self.terms.get(&(a.clone(), b.clone())) {
            None => F::zero(),
            Some(c) => c.clone() * exponent_factorial::<F>(a) * exponent_factorial::<F>(b),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return FunTensor2::new();
        }
        FunTensor2 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Componentwise product of function tensor squares.
    pub fn mul(&self, other: &Self, cap: u32) -> Capped<Self> {
        let mut out = FunTensor2::new();
        let mut overflow = false;
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                if la.degree() + lb.degree() > cap || ra.degree() + rb.degree() > cap {
                    overflow = true;
                    continue;
                }
                out.add_term(la.mul(lb), ra.mul(rb), ca.clone() * cb.clone());
            }
        }
        Capped::new(out, overflow)
    }
}

impl<F: Field> Default for FunTensor2<F> {
    fn default() -> Self {
        FunTensor2::new()
    }
}

impl<F: Field> Zero for FunTensor2<F> {
    fn zero() -> Self {
        FunTensor2::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> Add for FunTensor2<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for ((l, r), c) in rhs.terms {
            self.add_term(l, r, c);
        }
        self
    }
}

impl<F: Field> Neg for FunTensor2<F> {
    type Output = Self;
    fn neg(self) -> Self {
        FunTensor2 {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Sub for FunTensor2<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::env::{delta0, env_mul, EnvElement};
    use crate::kernel::field::{rat, Scalar};
    use crate::kernel::monomial::monomials_up_to;
    use crate::presets;

    #[test]
    fn pairing_normalization() {
        let m = PbwMonomial::from_exponents(vec![2, 1]);
        let f = FunElement::<Scalar>::from_monomial(m.clone(), rat(1, 1));
        assert_eq!(f.pair(&m), rat(2, 1)); // 2! * 1!
        assert_eq!(f.pair(&PbwMonomial::from_exponents(vec![1, 1])), rat(0, 1));
    }

    #[test]
    fn product_of_functions_is_dual_to_delta0() {
        // <f g, a> = (f (x) g)(delta0(a)) on all monomials in range.
        let monos = monomials_up_to(2, 3);
        for mf in &monos {
            for mg in &monos {
                if mf.degree() + mg.degree() > 3 {
                    continue;
                }
                let f = FunElement::<Scalar>::from_monomial(mf.clone(), rat(1, 1));
                let g = FunElement::<Scalar>::from_monomial(mg.clone(), rat(1, 1));
                let fg = f.mul(&g, 3).expect_exact("product");
                for a in &monos {
                    let lhs = fg.pair(a);
                    let d = delta0(&EnvElement::<Scalar>::from_monomial(a.clone(), rat(1, 1)));
                    let mut rhs = rat(0, 1);
                    for (legs, c) in d.terms() {
                        rhs = rhs + c * f.pair(&legs[0]) * g.pair(&legs[1]);
                    }
                    assert_eq!(lhs, rhs, "mismatch at <{mf}*{mg}, {a}>");
                }
            }
        }
    }

    #[test]
    fn functional_reconstruction_round_trips() {
        let mut f = FunElement::<Scalar>::new();
        f.add_term(PbwMonomial::from_exponents(vec![1, 2]), rat(3, 7));
        f.add_term(PbwMonomial::from_exponents(vec![0, 0]), rat(-1, 1));
        let g = FunElement::from_functional(2, 4, |m| f.pair(m));
        assert_eq!(f, g);
    }

    #[test]
    fn env_products_pair_against_functions() {
        // <u_E, E.H> picks up the lower-order term of the straightening:
        // E.H = H.E - 2E.
        let b = presets::borel_bialgebra();
        let h = EnvElement::generator(2, 0);
        let e = EnvElement::generator(2, 1);
        let eh = env_mul(b.algebra(), &e, &h, 4).unwrap().value;
        let u_e = FunElement::<Scalar>::coordinate(2, 1);
        let mut total = rat(0, 1);
        for (m, c) in eh.terms() {
            total = total + c * u_e.pair(m);
        }
        assert_eq!(total, rat(-2, 1));
    }
}
