//! PBW monomials as exponent vectors over an ordered basis.

use std::fmt;

/// An ordered PBW monomial `x_1^{e_1} ... x_n^{e_n}`, stored as the vector
/// of exponents over a fixed ordered basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn unit(dim: usize) -> Self {
        PbwMonomial(vec![0; dim])
    }

    pub fn generator(dim: usize, index: usize) -> Self {
        assert!(index < dim, "generator index out of range");
        let mut e = vec![0; dim];
        e[index] = 1;
        PbwMonomial(e)
    }

    pub fn from_exponents(exp: Vec<u32>) -> Self {
        PbwMonomial(exp)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Exponent-wise product of two ordered monomials in the same variables.
    /// Only valid when the concatenation is already in PBW order (e.g. for
    /// commutative coordinate functions).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        PbwMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exponent-wise division; `None` when not divisible.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if self.dim() != other.dim() {
            return None;
        }
        let mut out = Vec::with_capacity(self.dim());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(PbwMonomial(out))
    }

    /// True when `other <= self` exponent-wise.
    pub fn contains(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// The monomial as a word of generator indices in ascending order.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(i);
            }
        }
        w
    }

    /// Smallest generator index with a nonzero exponent.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Largest generator index with a nonzero exponent.
    pub fn trailing_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// Splits off one factor of the given generator.
    pub fn without_one(&self, index: usize) -> Self {
        assert!(self.0[index] > 0);
        let mut e = self.0.clone();
        e[index] -= 1;
        PbwMonomial(e)
    }

    /// Appends one factor of the given generator.
    pub fn with_one(&self, index: usize) -> Self {
        let mut e = self.0.clone();
        e[index] += 1;
        PbwMonomial(e)
    }

    /// All exponent vectors `b` with `b <= self` componentwise, in
    /// deterministic order. Used for binomial coproduct expansions.
    pub fn sub_monomials(&self) -> Vec<Self> {
        let mut out = vec![PbwMonomial(vec![])];
        for &e in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for prefix in &out {
                for k in 0..=e {
                    let mut v = prefix.0.clone();
                    v.push(k);
                    next.push(PbwMonomial(v));
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, ".")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given exact degree, in lexicographic order of the
/// exponent vector.
pub fn monomials_of_degree(dim: usize, degree: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; dim];
    fill(&mut out, &mut current, 0, degree, dim);
    out
}

fn fill(out: &mut Vec<PbwMonomial>, current: &mut Vec<u32>, pos: usize, remaining: u32, dim: usize) {
    if pos == dim {
        if remaining == 0 {
            out.push(PbwMonomial(current.clone()));
        }
        return;
    }
    if pos + 1 == dim {
        current[pos] = remaining;
        out.push(PbwMonomial(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e, dim);
        current[pos] = 0;
    }
}

/// All monomials of degree `<= cap`, graded then lexicographic. This is the
/// canonical deterministic enumeration used for linear problems and reports.
pub fn monomials_up_to(dim: usize, cap: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for d in 0..=cap {
        out.extend(monomials_of_degree(dim, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        // Monomials of degree d in n variables: C(d + n - 1, n - 1).
        assert_eq!(monomials_of_degree(2, 4).len(), 5);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_up_to(2, 4).len(), 15);
        assert_eq!(monomials_up_to(4, 4).len(), 70);
    }

    #[test]
    fn words_round_trip() {
        let m = PbwMonomial::from_exponents(vec![2, 0, 1]);
        assert_eq!(m.word(), vec![0, 0, 2]);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.leading_index(), Some(0));
        assert_eq!(m.trailing_index(), Some(2));
    }

    #[test]
    fn sub_monomials_are_binomial_many() {
        let m = PbwMonomial::from_exponents(vec![2, 1]);
        assert_eq!(m.sub_monomials().len(), 6);
    }
}
