//! Enveloping-algebra elements in PBW normal form, with straightening,
//! multiplication, the standard coproduct, and the counit.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::kernel::field::{binomial, Field};
use crate::kernel::monomial::PbwMonomial;
use crate::kernel::series::Capped;
use crate::kernel::tensor::Tensor;
use crate::lie::LieAlgebra;

/// Errors from enveloping-algebra arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub enum EnvError {
    IndexOutOfRange { index: usize, dim: usize },
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for EnvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvError::IndexOutOfRange { index, dim } => {
                write!(f, "generator index {index} out of range for dimension {dim}")
            }
            EnvError::DimensionMismatch { left, right } => {
                write!(f, "elements over different algebras (dims {left} and {right})")
            }
        }
    }
}

impl std::error::Error for EnvError {}

/// An element of `U(g)` as a finite sum of PBW monomials with nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvElement<F> {
    terms: BTreeMap<PbwMonomial, F>,
}

impl<F: Field> EnvElement<F> {
    pub fn new() -> Self {
        EnvElement { terms: BTreeMap::new() }
    }

    pub fn unit(dim: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(PbwMonomial::unit(dim), F::one());
        EnvElement { terms }
    }

    pub fn generator(dim: usize, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(PbwMonomial::generator(dim, index), F::one());
        EnvElement { terms }
    }

    pub fn from_monomial(m: PbwMonomial, coeff: F) -> Self {
        let mut out = EnvElement::new();
        out.add_term(m, coeff);
        out
    }

    /// Degree-one element with the given coordinate vector.
    pub fn from_vector(coords: &[F]) -> Self {
        let mut out = EnvElement::new();
        for (i, c) in coords.iter().enumerate() {
            out.add_term(PbwMonomial::generator(coords.len(), i), c.clone());
        }
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

    /// Filtration degree: maximal total degree of a term.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return EnvElement::new();
        }
        EnvElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Coefficient of the unit monomial.
    pub fn counit(&self) -> F {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    /// Drops all terms of degree above `cap`, reporting whether any term
    /// was discarded.
    pub fn truncate(self, cap: u32) -> Capped<Self> {
        let mut overflow = false;
        let terms = self
            .terms
            .into_iter()
            .filter(|(m, _)| {
                if m.degree() > cap {
                    overflow = true;
                    false
                } else {
                    true
                }
            })
            .collect();
        Capped::new(EnvElement { terms }, overflow)
    }
}

impl<F: Field> Default for EnvElement<F> {
    fn default() -> Self {
        EnvElement::new()
    }
}

impl<F: Field> Zero for EnvElement<F> {
    fn zero() -> Self {
        EnvElement::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> Add for EnvElement<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Field> Neg for EnvElement<F> {
    type Output = Self;
    fn neg(self) -> Self {
        EnvElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Sub for EnvElement<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

impl<F: Field> fmt::Display for EnvElement<F> {
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
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

/// PBW normal form of the product of the listed generators.
///
/// Out-of-order adjacent pairs `x_j x_i` (j > i) are rewritten as
/// `x_i x_j + [x_j, x_i]`; each step strictly decreases the pair
/// (degree, inversion count), which guarantees termination. Terms of total
/// degree above `cap` are discarded and flagged.
pub fn straighten<F: Field>(
    algebra: &LieAlgebra<F>,
    word: &[usize],
    cap: u32,
) -> Result<Capped<EnvElement<F>>, EnvError> {
    let dim = algebra.dim();
    for &i in word {
        if i >= dim {
            return Err(EnvError::IndexOutOfRange { index: i, dim });
        }
    }
    let mut overflow = false;
    let mut result = EnvElement::new();
    // Worklist of (coefficient, word) pairs still to normalize.
    let mut work: Vec<(F, Vec<usize>)> = vec![(F::one(), word.to_vec())];
    let mut steps_left: u64 = 1u64 << 40;
    while let Some((coeff, w)) = work.pop() {
        if w.len() as u32 > cap {
            overflow = true;
            continue;
        }
        match first_inversion(&w) {
            None => {
                let mut exps = vec![0u32; dim];
                for &i in &w {
                    exps[i] += 1;
                }
                result.add_term(PbwMonomial::from_exponents(exps), coeff);
            }
            Some(p) => {
                // w = u x_j x_i v  ->  u x_i x_j v + u [x_j, x_i] v
                let (j, i) = (w[p], w[p + 1]);
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                work.push((coeff.clone(), swapped));
                let bracket = algebra.bracket_basis(j, i);
                for (k, c) in bracket.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..p]);
                    shorter.push(k);
                    shorter.extend_from_slice(&w[p + 2..]);
                    work.push((coeff.clone() * c.clone(), shorter));
                }
            }
        }
        steps_left -= 1;
        assert!(steps_left > 0, "straightening failed to terminate");
    }
    Ok(Capped::new(result, overflow))
}

fn first_inversion(word: &[usize]) -> Option<usize> {
    word.windows(2).position(|w| w[0] > w[1])
}

/// PBW normal form of `a * b`, truncated at filtration degree `cap`.
pub fn env_mul<F: Field>(
    algebra: &LieAlgebra<F>,
    a: &EnvElement<F>,
    b: &EnvElement<F>,
    cap: u32,
) -> Result<Capped<EnvElement<F>>, EnvError> {
    check_dims(algebra, a)?;
    check_dims(algebra, b)?;
    let mut overflow = false;
    let mut result = EnvElement::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let mut word = ma.word();
            word.extend(mb.word());
            let prod = straighten(algebra, &word, cap)?;
            overflow |= prod.overflow;
            let scaled = prod.value.scale(&(ca.clone() * cb.clone()));
            result = result + scaled;
        }
    }
    Ok(Capped::new(result, overflow))
}

fn check_dims<F: Field>(algebra: &LieAlgebra<F>, a: &EnvElement<F>) -> Result<(), EnvError> {
    for (m, _) in a.terms() {
        if m.dim() != algebra.dim() {
            return Err(EnvError::DimensionMismatch { left: algebra.dim(), right: m.dim() });
        }
    }
    Ok(())
}

/// The standard coproduct of `U(g)`: the algebra map with
/// `delta0(x) = x (x) 1 + 1 (x) x` on Lie generators.
///
/// On a PBW monomial the generators are primitive and the two legs commute,
/// so the expansion is binomial and preserves total degree exactly.
pub fn delta0<F: Field>(a: &EnvElement<F>) -> Tensor<F, 2> {
    let mut out = Tensor::zero();
    for (m, c) in &a.terms {
        for left in m.sub_monomials() {
            let right = m.div(&left).expect("sub-monomial divides");
            let mut coeff = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                coeff = coeff * binomial::<F>(e, left.exponents()[i]);
            }
            out.add_term([left, right], coeff);
        }
    }
    out
}

/// The counit of `U(g)`: the coefficient of the unit monomial.
pub fn counit0<F: Field>(a: &EnvElement<F>) -> F {
    a.counit()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};
    use crate::kernel::monomial::PbwMonomial;
    use crate::presets;

    fn borel() -> LieAlgebra<Scalar> {
        presets::borel_bialgebra().algebra().clone()
    }

    #[test]
    fn abelian_word_sorts() {
        let a = LieAlgebra::<Scalar>::abelian(vec!["a".into(), "b".into()]);
        let r = straighten(&a, &[1, 0], 2).unwrap().expect_exact("abelian straighten");
        let expected = EnvElement::from_monomial(PbwMonomial::from_exponents(vec![1, 1]), rat(1, 1));
        assert_eq!(r, expected);
    }

    #[test]
    fn borel_swap_produces_commutator() {
        // E H = H E - [H, E] = H E - 2 E.
        let b = borel();
        let r = straighten(&b, &[1, 0], 2).unwrap().expect_exact("borel straighten");
        let mut expected = EnvElement::from_monomial(PbwMonomial::from_exponents(vec![1, 1]), rat(1, 1));
        expected.add_term(PbwMonomial::from_exponents(vec![0, 1]), rat(-2, 1));
        assert_eq!(r, expected);
    }

    #[test]
    fn empty_word_is_unit() {
        let b = borel();
        let r = straighten(&b, &[], 0).unwrap().expect_exact("empty word");
        assert_eq!(r, EnvElement::unit(2));
    }

    #[test]
    fn index_out_of_range_is_reported() {
        let b = borel();
        assert_eq!(
            straighten(&b, &[5], 3).unwrap_err(),
            EnvError::IndexOutOfRange { index: 5, dim: 2 }
        );
    }

    #[test]
    fn unit_multiplication() {
        let b = borel();
        let x = straighten(&b, &[0, 1], 4).unwrap().value;
        let one = EnvElement::unit(2);
        assert_eq!(env_mul(&b, &one, &x, 4).unwrap().value, x);
        assert_eq!(env_mul(&b, &x, &one, 4).unwrap().value, x);
    }

    #[test]
    fn borel_commutator_via_multiplication() {
        let b = borel();
        let h = EnvElement::generator(2, 0);
        let e = EnvElement::generator(2, 1);
        let he = env_mul(&b, &h, &e, 2).unwrap().value;
        let eh = env_mul(&b, &e, &h, 2).unwrap().value;
        let diff = he - eh;
        assert_eq!(diff, e.scale(&rat(2, 1)));
    }

    #[test]
    fn abelian_multiplication_commutes() {
        let a = LieAlgebra::<Scalar>::abelian(vec!["a".into(), "b".into()]);
        let x = EnvElement::generator(2, 0);
        let y = EnvElement::generator(2, 1);
        assert_eq!(
            env_mul(&a, &x, &y, 2).unwrap().value,
            env_mul(&a, &y, &x, 2).unwrap().value
        );
    }

    #[test]
    fn multiplication_is_associative_up_to_cap() {
        let l = presets::sl2();
        let cap = 5;
        let monos = crate::kernel::monomial::monomials_up_to(3, 1);
        for ma in &monos {
            for mb in &monos {
                for mc in &monos {
                    let a = EnvElement::from_monomial(ma.clone(), rat(1, 1));
                    let b = EnvElement::from_monomial(mb.clone(), rat(1, 1));
                    let c = EnvElement::from_monomial(mc.clone(), rat(1, 1));
                    let ab = env_mul(&l, &a, &b, cap).unwrap().value;
                    let bc = env_mul(&l, &b, &c, cap).unwrap().value;
                    let left = env_mul(&l, &ab, &c, cap).unwrap().value;
                    let right = env_mul(&l, &a, &bc, cap).unwrap().value;
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn coproduct_is_binomial_on_powers() {
        let x = EnvElement::<Scalar>::from_monomial(PbwMonomial::from_exponents(vec![2]), rat(1, 1));
        let d = delta0(&x);
        // x^2 -> x^2 (x) 1 + 2 x (x) x + 1 (x) x^2
        let m0 = PbwMonomial::from_exponents(vec![0]);
        let m1 = PbwMonomial::from_exponents(vec![1]);
        let m2 = PbwMonomial::from_exponents(vec![2]);
        assert_eq!(d.coeff(&[m2.clone(), m0.clone()]), rat(1, 1));
        assert_eq!(d.coeff(&[m1.clone(), m1.clone()]), rat(2, 1));
        assert_eq!(d.coeff(&[m0, m2]), rat(1, 1));
        assert_eq!(d.terms().count(), 3);
    }

    #[test]
    fn counit_examples() {
        let one = EnvElement::<Scalar>::unit(2);
        assert_eq!(counit0(&one), rat(1, 1));
        let x = EnvElement::<Scalar>::generator(2, 0);
        assert_eq!(counit0(&x), rat(0, 1));
        let mut mixed = EnvElement::<Scalar>::unit(2);
        mixed.add_term(PbwMonomial::from_exponents(vec![0, 2]), rat(3, 1));
        assert_eq!(counit0(&mixed), rat(1, 1));
    }
}
