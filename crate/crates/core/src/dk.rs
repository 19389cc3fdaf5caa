//! Graded components of the algebras generated by the symbols `t_ij`
//! modulo the infinitesimal braid relations, computed by spanning words
//! and exact row reduction; plus the free associative algebra on two
//! letters and a Hall basis of its free Lie subalgebra.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::kernel::field::Field;
use crate::kernel::linear::{LinearProblem, SolveOutcome};

/// A word in the generators, by generator index.
pub type Word = Vec<u8>;

/// An element of a graded quotient algebra, stored over basis words only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkElement<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> DkElement<F> {
    pub fn zero() -> Self {
        DkElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        DkElement::from_word(Vec::new(), F::one())
    }

    pub fn from_word(w: Word, c: F) -> Self {
        let mut out = DkElement::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return DkElement::zero();
        }
        DkElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Default for DkElement<F> {
    fn default() -> Self {
        DkElement::zero()
    }
}

impl<F: Field> std::ops::Add for DkElement<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<F: Field> std::ops::Neg for DkElement<F> {
    type Output = Self;
    fn neg(self) -> Self {
        DkElement {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<F: Field> std::ops::Sub for DkElement<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Zero for DkElement<F> {
    fn zero() -> Self {
        DkElement::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The algebra on strands `n` (3 or 4) with generators `t_ij` (i < j),
/// modulo `[t_ij, t_kl] = 0` for disjoint pairs and
/// `[t_ij, t_ik + t_jk] = 0` per triple, with explicit bases of the graded
/// components computed by exact row reduction of the relation spans.
#[derive(Clone, Debug)]
pub struct DkAlgebra<F> {
    strands: usize,
    gens: Vec<(usize, usize)>,
    max_degree: u32,
    /// basis[d] = the basis words of degree d.
    basis: Vec<Vec<Word>>,
    /// normal[d][word] = coordinates of the word over basis[d].
    normal: Vec<BTreeMap<Word, Vec<(usize, F)>>>,
}

impl<F: Field> DkAlgebra<F> {
    pub fn new(strands: usize, max_degree: u32) -> Self {
        assert!(strands == 3 || strands == 4, "strand count must be 3 or 4");
        let mut gens = Vec::new();
        for i in 0..strands {
            for j in (i + 1)..strands {
                gens.push((i, j));
            }
        }
        let mut alg = DkAlgebra {
            strands,
            gens,
            max_degree,
            basis: Vec::new(),
            normal: Vec::new(),
        };
        for d in 0..=max_degree {
            alg.build_degree(d);
        }
        alg
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Index of the generator `t_ij`.
    pub fn gen_index(&self, i: usize, j: usize) -> u8 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.gens
            .iter()
            .position(|&(x, y)| (x, y) == (a, b))
            .expect("generator exists") as u8
    }

    pub fn generator(&self, i: usize, j: usize) -> DkElement<F> {
        DkElement::from_word(vec![self.gen_index(i, j)], F::one())
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn dimension(&self, degree: u32) -> usize {
        self.basis[degree as usize].len()
    }

    pub fn basis_words(&self, degree: u32) -> &[Word] {
        &self.basis[degree as usize]
    }

    fn all_words(&self, degree: u32) -> Vec<Word> {
        let g = self.num_gens() as u8;
        let mut out: Vec<Word> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::with_capacity(out.len() * g as usize);
            for w in &out {
                for a in 0..g {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    /// The defining relations as degree-2 elements (word, coefficient).
    fn relations(&self) -> Vec<Vec<(Word, F)>> {
        let mut rels = Vec::new();
        let g = self.num_gens();
        // Disjoint pairs commute.
        for a in 0..g {
            for b in (a + 1)..g {
                let (i, j) = self.gens[a];
                let (k, l) = self.gens[b];
                if i != k && i != l && j != k && j != l {
                    rels.push(vec![
                        (vec![a as u8, b as u8], F::one()),
                        (vec![b as u8, a as u8], -F::one()),
                    ]);
                }
            }
        }
        // Per triple {i,j,k}: [t_ij, t_ik + t_jk] = 0 for each choice of pair.
        for i in 0..self.strands {
            for j in (i + 1)..self.strands {
                for k in (j + 1)..self.strands {
                    let ab = self.gen_index(i, j);
                    let ac = self.gen_index(i, k);
                    let bc = self.gen_index(j, k);
                    for &(x, y, z) in &[(ab, ac, bc), (ac, ab, bc), (bc, ab, ac)] {
                        rels.push(vec![
                            (vec![x, y], F::one()),
                            (vec![x, z], F::one()),
                            (vec![y, x], -F::one()),
                            (vec![z, x], -F::one()),
                        ]);
                    }
                }
            }
        }
        rels
    }

    fn build_degree(&mut self, degree: u32) {
        let words = self.all_words(degree);
        let index_of: BTreeMap<Word, usize> =
            words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

        if degree < 2 {
            // No relations reach below degree 2.
            let mut normal = BTreeMap::new();
            for (i, w) in words.iter().enumerate() {
                normal.insert(w.clone(), vec![(i, F::one())]);
            }
            self.basis.push(words);
            self.normal.push(normal);
            return;
        }

        // Span of u * rel * v over all splits.
        let mut rows: Vec<BTreeMap<usize, F>> = Vec::new();
        let rels = self.relations();
        let prefix_len_max = degree - 2;
        for a in 0..=prefix_len_max {
            let prefixes = self.all_words(a);
            let suffixes = self.all_words(degree - 2 - a);
            for u in &prefixes {
                for v in &suffixes {
                    for rel in &rels {
                        let mut row: BTreeMap<usize, F> = BTreeMap::new();
                        for (w, c) in rel {
                            let mut full = u.clone();
                            full.extend(w);
                            full.extend(v);
                            let col = index_of[&full];
                            let entry = row.entry(col).or_insert_with(F::zero);
                            *entry = entry.clone() + c.clone();
                            if entry.is_zero() {
                                row.remove(&col);
                            }
                        }
                        if !row.is_empty() {
                            rows.push(row);
                        }
                    }
                }
            }
        }

        // Reduced row echelon form over word columns.
        let mut pivots: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
        for mut row in rows {
            loop {
                let Some((&lead, _)) = row.iter().next() else { break };
                match pivots.get(&lead) {
                    None => {
                        let inv = F::one() / row[&lead].clone();
                        let normalized: BTreeMap<usize, F> =
                            row.iter().map(|(c, v)| (*c, v.clone() * inv.clone())).collect();
                        pivots.insert(lead, normalized);
                        break;
                    }
                    Some(p) => {
                        let factor = row[&lead].clone();
                        let p = p.clone();
                        for (c, v) in p {
                            let delta = factor.clone() * v;
                            let entry = row.entry(c).or_insert_with(F::zero);
                            *entry = entry.clone() - delta;
                            if entry.is_zero() {
                                row.remove(&c);
                            }
                        }
                    }
                }
            }
        }
        // Back-substitute so pivot rows only involve non-pivot columns.
        let pivot_cols: Vec<usize> = pivots.keys().cloned().collect();
        for &col in pivot_cols.iter().rev() {
            let row = pivots[&col].clone();
            let mut cleaned = BTreeMap::new();
            for (c, v) in row {
                if c != col && pivots.contains_key(&c) {
                    // substitute that pivot's tail
                    let tail = pivots[&c].clone();
                    for (tc, tv) in tail {
                        if tc == c {
                            continue;
                        }
                        let entry = cleaned.entry(tc).or_insert_with(F::zero);
                        *entry = entry.clone() + v.clone() * tv;
                        if entry.is_zero() {
                            cleaned.remove(&tc);
                        }
                    }
                } else {
                    let entry = cleaned.entry(c).or_insert_with(F::zero);
                    *entry = entry.clone() + v;
                    if entry.is_zero() {
                        cleaned.remove(&c);
                    }
                }
            }
            pivots.insert(col, cleaned);
        }

        let basis: Vec<Word> = words
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains_key(i))
            .map(|(_, w)| w.clone())
            .collect();
        let basis_pos: BTreeMap<usize, usize> = words
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivots.contains_key(i))
            .enumerate()
            .map(|(pos, (i, _))| (i, pos))
            .collect();

        let mut normal = BTreeMap::new();
        for (i, w) in words.iter().enumerate() {
            let coords = match pivots.get(&i) {
                None => vec![(basis_pos[&i], F::one())],
                Some(row) => {
                    // pivot = -(tail)
                    row.iter()
                        .filter(|(c, _)| **c != i)
                        .map(|(c, v)| (basis_pos[c], -v.clone()))
                        .collect()
                }
            };
            normal.insert(w.clone(), coords);
        }

        self.basis.push(basis);
        self.normal.push(normal);
    }

    /// Normal form of an arbitrary word.
    pub fn normalize_word(&self, w: &Word) -> DkElement<F> {
        let d = w.len();
        assert!(d as u32 <= self.max_degree, "degree beyond configured max");
        let coords = self.normal[d]
            .get(w)
            .expect("word indexed during construction");
        let mut out = DkElement::zero();
        for (pos, c) in coords {
            out.add_term(self.basis[d][*pos].clone(), c.clone());
        }
        out
    }

    /// Product of two normalized elements, degree-capped at the configured
    /// maximum (the grading is exact; products beyond it panic).
    pub fn mul(&self, a: &DkElement<F>, b: &DkElement<F>) -> DkElement<F> {
        let mut out = DkElement::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                if (wa.len() + wb.len()) as u32 > self.max_degree {
                    continue;
                }
                let mut w = wa.clone();
                w.extend(wb);
                let nf = self.normalize_word(&w);
                out = out + nf.scale(&(ca.clone() * cb.clone()));
            }
        }
        out
    }

    /// Coordinates of the degree-d component of an element over basis[d].
    pub fn coordinates(&self, a: &DkElement<F>, degree: u32) -> Vec<F> {
        let d = degree as usize;
        let mut coords = vec![F::zero(); self.basis[d].len()];
        let pos: BTreeMap<&Word, usize> =
            self.basis[d].iter().enumerate().map(|(i, w)| (w, i)).collect();
        for (w, c) in a.terms() {
            if w.len() == d {
                coords[pos[w]] = c.clone();
            }
        }
        coords
    }

    /// Checks that the defining relations normalize to zero in every
    /// degree up to the maximum (relation closure of the reduced bases).
    pub fn check_relations(&self) -> bool {
        for d in 2..=self.max_degree {
            let rels = self.relations();
            let prefix_max = d - 2;
            for a in 0..=prefix_max {
                for u in self.all_words(a) {
                    for v in self.all_words(d - 2 - a) {
                        for rel in &rels {
                            let mut acc = DkElement::zero();
                            for (w, c) in rel {
                                let mut full = u.clone();
                                full.extend(w);
                                full.extend(&v);
                                acc = acc + self.normalize_word(&full).scale(c);
                            }
                            if !acc.is_zero() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// An element of the free associative algebra on two letters A (0) and
/// B (1); the home of associator components.
pub type FreeElement<F> = DkElement<F>;

/// Substitutes degree-one images for the two letters and multiplies out in
/// the target algebra (an algebra homomorphism on each graded piece).
pub fn substitute<F: Field>(
    free: &FreeElement<F>,
    image_a: &DkElement<F>,
    image_b: &DkElement<F>,
    target: &DkAlgebra<F>,
) -> DkElement<F> {
    let mut out = DkElement::zero();
    for (w, c) in free.terms() {
        let mut acc = DkElement::one();
        for &letter in w {
            let img = if letter == 0 { image_a } else { image_b };
            acc = target.mul(&acc, img);
        }
        out = out + acc.scale(c);
    }
    out
}

/// A Hall tree over the letters A and B.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HallTree {
    Leaf(u8),
    Node(Box<HallTree>, Box<HallTree>),
}

impl HallTree {
    pub fn degree(&self) -> u32 {
        match self {
            HallTree::Leaf(_) => 1,
            HallTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// Commutator expansion in the free algebra.
    pub fn expand<F: Field>(&self) -> FreeElement<F> {
        match self {
            HallTree::Leaf(a) => DkElement::from_word(vec![*a], F::one()),
            HallTree::Node(l, r) => {
                let le = l.expand::<F>();
                let re = r.expand::<F>();
                free_mul(&le, &re).sub(&free_mul(&re, &le))
            }
        }
    }
}

/// Word-concatenation product in the free algebra.
pub fn free_mul<F: Field>(a: &FreeElement<F>, b: &FreeElement<F>) -> FreeElement<F> {
    let mut out = DkElement::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let mut w = wa.clone();
            w.extend(wb);
            out.add_term(w, ca.clone() * cb.clone());
        }
    }
    out
}

/// Truncates the free product to total degree `cap` (for inverting unital
/// series degree by degree).
pub fn free_mul_capped<F: Field>(
    a: &FreeElement<F>,
    b: &FreeElement<F>,
    cap: u32,
) -> FreeElement<F> {
    let mut out = DkElement::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            if (wa.len() + wb.len()) as u32 > cap {
                continue;
            }
            let mut w = wa.clone();
            w.extend(wb);
            out.add_term(w, ca.clone() * cb.clone());
        }
    }
    out
}

/// The Hall basis of the free Lie algebra on A, B up to the given degree,
/// using the classical criterion: `[l, r]` is a Hall tree when `l < r`,
/// both are Hall trees, and `r` is a leaf or `r = [u, v]` with `u <= l`.
/// Trees are ordered by degree first, then structurally.
pub fn hall_basis(max_degree: u32) -> Vec<HallTree> {
    let mut by_degree: Vec<Vec<HallTree>> = vec![Vec::new(); max_degree as usize + 1];
    if max_degree >= 1 {
        by_degree[1] = vec![HallTree::Leaf(0), HallTree::Leaf(1)];
    }
    for d in 2..=max_degree {
        let mut trees = Vec::new();
        for dl in 1..d {
            let dr = d - dl;
            for l in by_degree[dl as usize].clone() {
                for r in by_degree[dr as usize].clone() {
                    if !hall_less(&l, &r) {
                        continue;
                    }
                    let ok = match &r {
                        HallTree::Leaf(_) => true,
                        HallTree::Node(u, _) => !hall_less(&l, u),
                    };
                    if ok {
                        trees.push(HallTree::Node(Box::new(l.clone()), Box::new(r.clone())));
                    }
                }
            }
        }
        trees.sort();
        by_degree[d as usize] = trees;
    }
    by_degree.into_iter().flatten().collect()
}

fn hall_less(a: &HallTree, b: &HallTree) -> bool {
    (a.degree(), a) < (b.degree(), b)
}

/// Decides membership of a homogeneous free-algebra element in the span of
/// the Hall basis expansions of its degree, via an exact linear solve.
pub fn is_lie_element<F: Field>(elt: &FreeElement<F>, degree: u32) -> bool {
    let hall: Vec<HallTree> = hall_basis(degree)
        .into_iter()
        .filter(|t| t.degree() == degree)
        .collect();
    let expansions: Vec<FreeElement<F>> = hall.iter().map(|t| t.expand()).collect();
    // Collect all words appearing anywhere.
    let mut words: Vec<Word> = Vec::new();
    for e in expansions.iter().chain(std::iter::once(elt)) {
        for (w, _) in e.terms() {
            if !words.contains(w) {
                words.push(w.clone());
            }
        }
    }
    words.sort();
    let mut problem = LinearProblem::<F>::new(hall.len());
    for w in &words {
        let entries: Vec<(usize, F)> = expansions
            .iter()
            .enumerate()
            .map(|(i, e)| (i, e.terms.get(w).cloned().unwrap_or_else(F::zero)))
            .collect();
        let rhs = elt.terms.get(w).cloned().unwrap_or_else(F::zero);
        problem.push_row(entries, rhs);
    }
    matches!(problem.solve(), SolveOutcome::Solution(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{rat, Scalar};

    #[test]
    fn dk3_low_degree_dimensions() {
        let dk = DkAlgebra::<Scalar>::new(3, 3);
        assert_eq!(dk.dimension(0), 1);
        assert_eq!(dk.dimension(1), 3);
        // U of the rank-3 graded Lie algebra with one degree-2 bracket:
        // degree 2 = sym pairs (6) + one new Lie element.
        assert_eq!(dk.dimension(2), 7);
        assert_eq!(dk.dimension(3), 15);
        assert!(dk.check_relations());
    }

    #[test]
    fn dk4_low_degree_dimensions() {
        let dk = DkAlgebra::<Scalar>::new(4, 2);
        assert_eq!(dk.dimension(1), 6);
        assert_eq!(dk.dimension(2), 25);
        assert!(dk.check_relations());
    }

    #[test]
    fn central_element_commutes() {
        // c = t12 + t13 + t23 is central in the three-strand algebra.
        let dk = DkAlgebra::<Scalar>::new(3, 3);
        let c = dk
            .generator(0, 1)
            .add(&dk.generator(0, 2))
            .add(&dk.generator(1, 2));
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let t = dk.generator(i, j);
            let lhs = dk.mul(&c, &t);
            let rhs = dk.mul(&t, &c);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hall_basis_dimensions() {
        // Free Lie algebra on two generators: dims 2, 1, 2, 3, 6.
        let hall = hall_basis(5);
        let count = |d: u32| hall.iter().filter(|t| t.degree() == d).count();
        assert_eq!(count(1), 2);
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 2);
        assert_eq!(count(4), 3);
        assert_eq!(count(5), 6);
    }

    #[test]
    fn lie_membership() {
        // [A,B] is Lie; AB is not.
        let a = DkElement::from_word(vec![0], rat(1, 1));
        let b = DkElement::from_word(vec![1], rat(1, 1));
        let comm = free_mul(&a, &b).sub(&free_mul(&b, &a));
        assert!(is_lie_element(&comm, 2));
        let ab = free_mul(&a, &b);
        assert!(!is_lie_element(&ab, 2));
        // [A,[A,B]] is Lie.
        let inner = comm;
        let deeper = free_mul(&a, &inner).sub(&free_mul(&inner, &a));
        assert!(is_lie_element(&deeper, 3));
    }

    #[test]
    fn deterministic_rebuild() {
        let d1 = DkAlgebra::<Scalar>::new(4, 3);
        let d2 = DkAlgebra::<Scalar>::new(4, 3);
        for d in 0..=3 {
            assert_eq!(d1.basis_words(d), d2.basis_words(d));
        }
    }
}
