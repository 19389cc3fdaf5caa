//! Scalar abstraction and the concrete exact rational scalar.

use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};

/// Ground-field scalar for all coefficient arithmetic.
///
/// Everything in the engine is generic over this trait; the pipeline
/// instantiates it with [`Scalar`], an arbitrary-precision rational kept
/// in lowest terms with positive denominator, so all arithmetic is exact.
pub trait Field: Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display + 'static {}

impl<T> Field for T where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display + 'static
{
}

/// The concrete scalar of the pipeline: exact rationals over
/// arbitrary-precision integers.
pub type Scalar = num_rational::BigRational;

/// Convenience constructor for rational scalars.
pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(num.into(), den.into())
}

/// Embeds a small non-negative integer into the field.
pub fn int<F: Field>(n: u64) -> F {
    F::from_u64(n).expect("small integer embeds into the field")
}

/// Exact factorial as a field element.
pub fn factorial<F: Field>(n: u32) -> F {
    let mut acc = F::one();
    for k in 2..=u64::from(n) {
        acc = acc * int::<F>(k);
    }
    acc
}

/// Exact binomial coefficient as a field element.
pub fn binomial<F: Field>(n: u32, k: u32) -> F {
    if k > n {
        return F::zero();
    }
    // Product form keeps intermediate values integral.
    let mut acc = F::one();
    for i in 0..u64::from(k.min(n - k)) {
        acc = acc * int::<F>(u64::from(n) - i) / int::<F>(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced_with_positive_denominator() {
        let x = rat(4, -6);
        assert_eq!(x, rat(-2, 3));
        assert!(x.denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial::<Scalar>(6, 2), rat(15, 1));
        assert_eq!(binomial::<Scalar>(3, 5), rat(0, 1));
        assert_eq!(factorial::<Scalar>(5), rat(120, 1));
    }
}
