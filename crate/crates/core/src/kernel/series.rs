//! Truncated formal series in the deformation parameter `h`, and the
//! truncation flag carried by every degree-capped operation.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

/// A value produced under a PBW degree cap. `overflow` records whether any
/// term was discarded; identity checks must only be asserted on unflagged
/// results.
#[derive(Clone, Debug, PartialEq)]
pub struct Capped<T> {
    pub value: T,
    pub overflow: bool,
}

impl<T> Capped<T> {
    pub fn exact(value: T) -> Self {
        Capped { value, overflow: false }
    }

    pub fn new(value: T, overflow: bool) -> Self {
        Capped { value, overflow }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Capped<U> {
        Capped { value: f(self.value), overflow: self.overflow }
    }

    /// Combines two capped values; the flag is the OR of the inputs.
    pub fn zip<U, V>(self, other: Capped<U>, f: impl FnOnce(T, U) -> V) -> Capped<V> {
        Capped {
            value: f(self.value, other.value),
            overflow: self.overflow || other.overflow,
        }
    }

    /// Unwraps, asserting no truncation occurred.
    pub fn expect_exact(self, context: &str) -> T {
        assert!(!self.overflow, "unexpected degree truncation in {context}");
        self.value
    }
}

/// A series `v_0 + v_1 h + ... + v_N h^N` truncated at order `N`, with
/// coefficients in an additive group `V`. All arithmetic discards terms of
/// order above the truncation order of the left operand.
#[derive(Clone, Debug, PartialEq)]
pub struct HSeries<V> {
    coeffs: Vec<V>,
}

impl<V: Zero + Clone + PartialEq> HSeries<V> {
    pub fn zero(order: usize) -> Self {
        HSeries { coeffs: vec![V::zero(); order + 1] }
    }

    /// Series with the given order-zero coefficient and zeros above.
    pub fn constant(value: V, order: usize) -> Self {
        let mut coeffs = vec![V::zero(); order + 1];
        coeffs[0] = value;
        HSeries { coeffs }
    }

    pub fn from_coefficients(coeffs: Vec<V>) -> Self {
        assert!(!coeffs.is_empty());
        HSeries { coeffs }
    }

    /// Single term `value * h^k`.
    pub fn monomial(value: V, k: usize, order: usize) -> Self {
        assert!(k <= order);
        let mut coeffs = vec![V::zero(); order + 1];
        coeffs[k] = value;
        HSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &V {
        &self.coeffs[k]
    }

    pub fn coeff_mut(&mut self, k: usize) -> &mut V {
        &mut self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[V] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the lowest nonzero coefficient, if any.
    pub fn lowest_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncates (or zero-extends) to the given order.
    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs: Vec<V> = self.coeffs.iter().take(order + 1).cloned().collect();
        while coeffs.len() < order + 1 {
            coeffs.push(V::zero());
        }
        HSeries { coeffs }
    }

    pub fn map<W: Zero + Clone + PartialEq>(&self, f: impl Fn(&V) -> W) -> HSeries<W> {
        HSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Cauchy product under a capped coefficient multiplication.
    pub fn mul_with(
        &self,
        other: &Self,
        mut mul: impl FnMut(&V, &V) -> Capped<V>,
    ) -> Capped<Self> {
        let order = self.order().min(other.order());
        let mut coeffs = vec![V::zero(); order + 1];
        let mut overflow = false;
        for i in 0..=order {
            for j in 0..=(order - i) {
                let p = mul(&self.coeffs[i], &other.coeffs[j]);
                overflow |= p.overflow;
                let slot = std::mem::replace(&mut coeffs[i + j], V::zero());
                coeffs[i + j] = slot + p.value;
            }
        }
        Capped::new(HSeries { coeffs }, overflow)
    }

    /// Inverse of a series whose order-zero coefficient equals `unit`,
    /// by the truncated Neumann expansion.
    pub fn invert_unital(
        &self,
        unit: &V,
        mut mul: impl FnMut(&V, &V) -> Capped<V>,
    ) -> Capped<Self>
    where
        V: Neg<Output = V>,
    {
        assert!(
            self.coeffs[0] == *unit,
            "series inversion requires a unit leading coefficient"
        );
        let order = self.order();
        // self = unit - tail with tail = O(h), so self^{-1} = sum_k tail^k.
        let mut tail = self.clone().neg();
        tail.coeffs[0] = V::zero();
        let mut overflow = false;
        let mut result = HSeries::constant(unit.clone(), order);
        let mut power = HSeries::constant(unit.clone(), order);
        for _ in 1..=order {
            let p = power.mul_with(&tail, &mut mul);
            overflow |= p.overflow;
            power = p.value;
            result = result + power.clone();
        }
        Capped::new(result, overflow)
    }
}

impl<V: Zero + Clone + PartialEq> Add for HSeries<V> {
    type Output = HSeries<V>;
    fn add(self, rhs: Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut it_l = self.coeffs.into_iter();
        let mut it_r = rhs.coeffs.into_iter();
        for _ in 0..=order {
            coeffs.push(it_l.next().unwrap() + it_r.next().unwrap());
        }
        HSeries { coeffs }
    }
}

impl<V: Zero + Clone + PartialEq + Neg<Output = V>> Neg for HSeries<V> {
    type Output = HSeries<V>;
    fn neg(self) -> Self {
        HSeries { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl<V: Zero + Clone + PartialEq + Neg<Output = V>> Sub for HSeries<V> {
    type Output = HSeries<V>;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};

    fn smul(a: &Scalar, b: &Scalar) -> Capped<Scalar> {
        Capped::exact(a * b)
    }

    #[test]
    fn ring_axioms_mod_truncation() {
        let a = HSeries::from_coefficients(vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(-1, 3)]);
        let b = HSeries::from_coefficients(vec![rat(0, 1), rat(1, 2), rat(5, 1), rat(7, 1)]);
        let c = HSeries::from_coefficients(vec![rat(3, 1), rat(0, 1), rat(1, 1), rat(4, 1)]);

        let ab_c = a.mul_with(&b, smul).value.mul_with(&c, smul).value;
        let a_bc = a.mul_with(&b.mul_with(&c, smul).value, smul).value;
        assert_eq!(ab_c, a_bc);

        let left = a.mul_with(&(b.clone() + c.clone()), smul).value;
        let right = a.mul_with(&b, smul).value + a.mul_with(&c, smul).value;
        assert_eq!(left, right);
    }

    #[test]
    fn unital_inverse() {
        let a = HSeries::from_coefficients(vec![rat(1, 1), rat(3, 1), rat(-2, 1), rat(1, 7)]);
        let inv = a.invert_unital(&rat(1, 1), smul).value;
        let prod = a.mul_with(&inv, smul).value;
        assert_eq!(prod, HSeries::constant(rat(1, 1), 3));
    }

    #[test]
    fn equality_is_coefficientwise() {
        let a = HSeries::from_coefficients(vec![rat(1, 2), rat(0, 1)]);
        let b = HSeries::from_coefficients(vec![rat(1, 2), rat(0, 1)]);
        assert_eq!(a, b);
        assert!(HSeries::<Scalar>::zero(4).is_zero());
    }
}
