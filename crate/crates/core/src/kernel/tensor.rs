//! Tensor powers of the enveloping algebra, with componentwise
//! multiplication and leg-insertion maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::kernel::env::{env_mul, EnvElement, EnvError};
use crate::kernel::field::Field;
use crate::kernel::monomial::PbwMonomial;
use crate::kernel::series::Capped;
use crate::lie::LieAlgebra;

/// An element of `U(g)^(x K)` as a finite sum of monomial tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<F, const K: usize> {
    terms: BTreeMap<[PbwMonomial; K], F>,
}

impl<F: Field, const K: usize> Tensor<F, K> {
    pub fn zero() -> Self {
        Tensor { terms: BTreeMap::new() }
    }

    pub fn unit(dim: usize) -> Self {
        let mut out = Tensor::zero();
        out.add_term(std::array::from_fn(|_| PbwMonomial::unit(dim)), F::one());
        out
    }

    pub fn add_term(&mut self, legs: [PbwMonomial; K], coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&[PbwMonomial; K], &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, legs: &[PbwMonomial; K]) -> F {
        self.terms.get(legs).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Tensor::zero();
        }
        Tensor {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Total degree: maximum over terms of the sum of leg degrees.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|legs| legs.iter().map(PbwMonomial::degree).sum())
            .max()
            .unwrap_or(0)
    }

    /// Componentwise product in `U(g)^(x K)`, truncated at total degree `cap`.
    pub fn mul(
        &self,
        algebra: &LieAlgebra<F>,
        other: &Self,
        cap: u32,
    ) -> Result<Capped<Self>, EnvError> {
        let mut overflow = false;
        let mut out = Tensor::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                // Multiply leg by leg, tracking the total-degree budget.
                let mut partials: Vec<(Vec<PbwMonomial>, F)> =
                    vec![(Vec::with_capacity(K), ca.clone() * cb.clone())];
                for leg in 0..K {
                    let prod = env_mul(
                        algebra,
                        &EnvElement::from_monomial(la[leg].clone(), F::one()),
                        &EnvElement::from_monomial(lb[leg].clone(), F::one()),
                        cap,
                    )?;
                    overflow |= prod.overflow;
                    let mut next = Vec::new();
                    for (prefix, coeff) in &partials {
                        for (m, c) in prod.value.terms() {
                            let mut legs = prefix.clone();
                            legs.push(m.clone());
                            next.push((legs, coeff.clone() * c.clone()));
                        }
                    }
                    partials = next;
                }
                for (legs, coeff) in partials {
                    let total: u32 = legs.iter().map(PbwMonomial::degree).sum();
                    if total > cap {
                        overflow = true;
                        continue;
                    }
                    let arr: [PbwMonomial; K] = legs.try_into().expect("leg count");
                    out.add_term(arr, coeff);
                }
            }
        }
        Ok(Capped::new(out, overflow))
    }

    /// Applies the leg permutation `perm`: term legs are rearranged so that
    /// output leg `i` is input leg `perm[i]`.
    pub fn permute_legs(&self, perm: [usize; K]) -> Self {
        let mut out = Tensor::zero();
        for (legs, c) in &self.terms {
            let rearranged = std::array::from_fn(|i| legs[perm[i]].clone());
            out.add_term(rearranged, c.clone());
        }
        out
    }
}

impl<F: Field, const K: usize> Default for Tensor<F, K> {
    fn default() -> Self {
        Tensor::zero()
    }
}

impl<F: Field, const K: usize> Zero for Tensor<F, K> {
    fn zero() -> Self {
        Tensor::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field, const K: usize> Add for Tensor<F, K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Field, const K: usize> Neg for Tensor<F, K> {
    type Output = Self;
    fn neg(self) -> Self {
        Tensor {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field, const K: usize> Sub for Tensor<F, K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

impl<F: Field, const K: usize> fmt::Display for Tensor<F, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (legs, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*")?;
            for (i, leg) in legs.iter().enumerate() {
                if i > 0 {
                    write!(f, "(x)")?;
                }
                write!(f, "[{leg}]")?;
            }
        }
        Ok(())
    }
}

/// Builds a two-leg tensor from an `EnvElement` pair product
/// `a (x) b`.
pub fn outer2<F: Field>(a: &EnvElement<F>, b: &EnvElement<F>) -> Tensor<F, 2> {
    let mut out = Tensor::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            out.add_term([ma.clone(), mb.clone()], ca.clone() * cb.clone());
        }
    }
    out
}

/// Embeds a two-leg tensor into three legs with the unit in the given slot:
/// slot 0 gives `1 (x) t`, slot 2 gives `t (x) 1`, slot 1 inserts in the
/// middle (legs become 0 and 2).
pub fn insert_unit_leg<F: Field>(t: &Tensor<F, 2>, slot: usize, dim: usize) -> Tensor<F, 3> {
    assert!(slot < 3);
    let mut out = Tensor::zero();
    for (legs, c) in t.terms() {
        let unit = PbwMonomial::unit(dim);
        let arr = match slot {
            0 => [unit, legs[0].clone(), legs[1].clone()],
            1 => [legs[0].clone(), unit, legs[1].clone()],
            _ => [legs[0].clone(), legs[1].clone(), unit],
        };
        out.add_term(arr, c.clone());
    }
    out
}

/// Applies the standard coproduct to one leg of a two-leg tensor, producing
/// three legs. `leg` is 0 (split the first leg into legs 0,1) or 1 (split
/// the second into legs 1,2). Total degree is preserved exactly.
pub fn delta_leg2<F: Field>(t: &Tensor<F, 2>, leg: usize) -> Tensor<F, 3> {
    assert!(leg < 2);
    let mut out = Tensor::zero();
    for (legs, c) in t.terms() {
        let split = crate::kernel::env::delta0(&EnvElement::from_monomial(
            legs[leg].clone(),
            c.clone(),
        ));
        for (pair, coeff) in split.terms() {
            let arr = if leg == 0 {
                [pair[0].clone(), pair[1].clone(), legs[1].clone()]
            } else {
                [legs[0].clone(), pair[0].clone(), pair[1].clone()]
            };
            out.add_term(arr, coeff.clone());
        }
    }
    out
}

/// Swaps the two legs of a tensor square.
pub fn flip2<F: Field>(t: &Tensor<F, 2>) -> Tensor<F, 2> {
    t.permute_legs([1, 0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::env::delta0;
    use crate::kernel::field::{rat, Scalar};
    use crate::presets;

    #[test]
    fn coproduct_is_an_algebra_map_and_coassociative() {
        let b = presets::borel_bialgebra();
        let alg = b.algebra();
        let monos = crate::kernel::monomial::monomials_up_to(2, 2);
        let cap = 8;
        for ma in &monos {
            for mb in &monos {
                let a = EnvElement::from_monomial(ma.clone(), rat(1, 1));
                let bb = EnvElement::from_monomial(mb.clone(), rat(1, 1));
                let ab = env_mul(alg, &a, &bb, cap).unwrap().value;
                let left = delta0(&ab);
                let right = delta0(&a).mul(alg, &delta0(&bb), cap).unwrap().value;
                assert_eq!(left, right, "delta0 multiplicative at {ma} * {mb}");
            }
        }
        for m in &monos {
            let a = EnvElement::<Scalar>::from_monomial(m.clone(), rat(1, 1));
            let d = delta0(&a);
            assert_eq!(delta_leg2(&d, 0), delta_leg2(&d, 1), "coassociativity at {m}");
        }
    }

    #[test]
    fn counit_cancels_coproduct() {
        let monos = crate::kernel::monomial::monomials_up_to(2, 3);
        for m in &monos {
            let a = EnvElement::<Scalar>::from_monomial(m.clone(), rat(5, 3));
            let d = delta0(&a);
            // (counit (x) id) delta0 = id
            let mut collapsed = EnvElement::<Scalar>::new();
            for (legs, c) in d.terms() {
                if legs[0].is_unit() {
                    collapsed.add_term(legs[1].clone(), c.clone());
                }
            }
            assert_eq!(collapsed, a);
        }
    }
}
