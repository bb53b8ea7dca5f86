//! Formal sums over F2 and tensor products of basis elements.

use serde::{Deserialize, Serialize};
use std::collections::btree_set;
use std::collections::BTreeSet;
use std::ops::{Add, AddAssign};

/// A finite sum of basis elements with coefficients in F2.
///
/// Each basis element is either present or absent, so addition is symmetric
/// difference. Iteration follows the `Ord` order of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FormalSum<B: Ord> {
    terms: BTreeSet<B>,
}

impl<B: Ord> Default for FormalSum<B> {
    fn default() -> Self {
        Self {
            terms: BTreeSet::new(),
        }
    }
}

impl<B: Ord> FormalSum<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(b: B) -> Self {
        let mut s = Self::zero();
        s.toggle(b);
        s
    }

    /// Adds one copy of `b`.
    pub fn toggle(&mut self, b: B) {
        if !self.terms.remove(&b) {
            self.terms.insert(b);
        }
    }

    pub fn contains(&self, b: &B) -> bool {
        self.terms.contains(b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, B> {
        self.terms.iter()
    }

    pub fn into_set(self) -> BTreeSet<B> {
        self.terms
    }

    pub fn add_sum(&mut self, other: FormalSum<B>) {
        for b in other.terms {
            self.toggle(b);
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord, F>(&self, mut f: F) -> FormalSum<C>
    where
        F: FnMut(&B) -> FormalSum<C>,
    {
        let mut out = FormalSum::zero();
        for b in &self.terms {
            out.add_sum(f(b));
        }
        out
    }
}

impl<B: Ord + Clone> FormalSum<B> {
    /// Bilinear tensor product `self ⊗ other`.
    pub fn tensor<C: Ord + Clone>(&self, other: &FormalSum<C>) -> FormalSum<(B, C)> {
        let mut out = FormalSum::zero();
        for x in &self.terms {
            for y in &other.terms {
                out.toggle((x.clone(), y.clone()));
            }
        }
        out
    }
}

impl<B: Ord> FromIterator<B> for FormalSum<B> {
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let mut s = Self::zero();
        for b in iter {
            s.toggle(b);
        }
        s
    }
}

impl<B: Ord> IntoIterator for FormalSum<B> {
    type Item = B;
    type IntoIter = btree_set::IntoIter<B>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: Ord> IntoIterator for &'a FormalSum<B> {
    type Item = &'a B;
    type IntoIter = btree_set::Iter<'a, B>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> Add for &FormalSum<B> {
    type Output = FormalSum<B>;
    fn add(self, rhs: &FormalSum<B>) -> FormalSum<B> {
        self.terms
            .symmetric_difference(&rhs.terms)
            .cloned()
            .collect::<BTreeSet<_>>()
            .into()
    }
}

impl<B: Ord> Add for FormalSum<B> {
    type Output = FormalSum<B>;
    fn add(mut self, rhs: FormalSum<B>) -> FormalSum<B> {
        self.add_sum(rhs);
        self
    }
}

impl<B: Ord> AddAssign for FormalSum<B> {
    fn add_assign(&mut self, rhs: FormalSum<B>) {
        self.add_sum(rhs);
    }
}

impl<B: Ord> From<BTreeSet<B>> for FormalSum<B> {
    fn from(terms: BTreeSet<B>) -> Self {
        Self { terms }
    }
}

/// Elements carrying a nonnegative degree.
pub trait Graded {
    fn degree(&self) -> usize;
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

impl<A: Graded, B: Graded, C: Graded> Graded for (A, B, C) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
}

/// Tensor product of three formal sums.
pub fn tensor3<A, B, C>(
    x: &FormalSum<A>,
    y: &FormalSum<B>,
    z: &FormalSum<C>,
) -> FormalSum<(A, B, C)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    let mut out = FormalSum::zero();
    for a in x {
        for b in y {
            for c in z {
                out.toggle((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn doubling_cancels() {
        let x: FormalSum<u8> = [1, 1].into_iter().collect();
        assert!(x.is_zero());
        let a: FormalSum<u8> = [1, 2].into_iter().collect();
        let b: FormalSum<u8> = [2, 3].into_iter().collect();
        assert_eq!(&a + &b, [1, 3].into_iter().collect());
    }

    #[test]
    fn tensor_is_bilinear() {
        let x: FormalSum<u8> = [1, 2].into_iter().collect();
        let z: FormalSum<u8> = FormalSum::single(7);
        assert_eq!(x.tensor(&z), [(1, 7), (2, 7)].into_iter().collect());
        assert!(x.tensor(&FormalSum::<u8>::zero()).is_zero());
        let yy: FormalSum<u8> = [4, 4].into_iter().collect();
        assert!(x.tensor(&yy).is_zero());
    }

    proptest! {
        #[test]
        fn addition_is_an_f2_vector_space(
            a in proptest::collection::vec(0u8..20, 0..12),
            b in proptest::collection::vec(0u8..20, 0..12),
            c in proptest::collection::vec(0u8..20, 0..12),
        ) {
            let a: FormalSum<u8> = a.into_iter().collect();
            let b: FormalSum<u8> = b.into_iter().collect();
            let c: FormalSum<u8> = c.into_iter().collect();
            prop_assert!((&a + &a).is_zero());
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a + &b).tensor(&c), &a.tensor(&c) + &b.tensor(&c));
        }
    }
}
