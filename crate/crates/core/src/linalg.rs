//! Exact Gaussian elimination over sparse rational vectors.
//!
//! Vectors are sparse maps from an ordered key (a word, a basis index, ...)
//! to coefficients. The pivot of a reduced row is its greatest key. Spanning
//! vectors are absorbed in the order given; a vector that reduces to zero is
//! dependent on earlier ones and is skipped, so solutions only use the first
//! independent vectors and put zero on the rest.

use alloc::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::free::{NcPolynomial, Word};
use crate::rational::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

#[derive(Debug, Clone)]
struct Row<K> {
    vector: SparseVec<K>,
    // this row as a combination of the spanning vectors
    combination: BTreeMap<usize, Rational>,
}

/// Row-echelon form of a growing list of spanning vectors.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
    count: usize,
}

/// Outcome of solving against an [`Echelon`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<K: Ord> {
    /// Coefficient of each spanning vector (absent means zero).
    pub coefficients: BTreeMap<usize, Rational>,
    /// What is left after elimination; empty iff the target is in the span.
    pub residual: SparseVec<K>,
}

impl<K: Ord> Solution<K> {
    pub fn in_span(&self) -> bool {
        self.residual.is_empty()
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, factor: &Rational, source: &SparseVec<K>) {
    for (k, v) in source {
        let delta = factor * v;
        let remove = {
            let slot = target.entry(k.clone()).or_insert_with(Rational::zero);
            *slot += delta;
            slot.is_zero()
        };
        if remove {
            target.remove(k);
        }
    }
}

fn axpy_index(target: &mut BTreeMap<usize, Rational>, factor: &Rational, source: &BTreeMap<usize, Rational>) {
    for (k, v) in source {
        let slot = target.entry(*k).or_insert_with(Rational::zero);
        *slot += factor * v;
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self {
            rows: BTreeMap::new(),
            count: 0,
        }
    }

    /// Number of vectors pushed so far.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    // eliminate every key of `v` that carries a pivot, greatest first
    fn reduce(&self, v: &mut SparseVec<K>, combination: &mut BTreeMap<usize, Rational>) {
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().rev().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(b) => v
                    .range(..b.clone())
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(key) = next else { break };
            let row = &self.rows[&key];
            let factor = -(&v[&key] / &row.vector[&key]);
            axpy(v, &factor, &row.vector);
            axpy_index(combination, &factor, &row.combination);
            bound = Some(key);
        }
    }

    /// Add the next spanning vector. Returns `true` if it raised the rank.
    pub fn push(&mut self, vector: SparseVec<K>) -> bool {
        let index = self.count;
        self.count += 1;
        let mut v = vector;
        let mut combination = BTreeMap::new();
        combination.insert(index, Rational::one());
        self.reduce(&mut v, &mut combination);
        match v.keys().next_back().cloned() {
            None => false,
            Some(pivot) => {
                self.rows.insert(
                    pivot,
                    Row {
                        vector: v,
                        combination,
                    },
                );
                true
            }
        }
    }

    /// Express `target` over the spanning vectors.
    pub fn solve(&self, target: &SparseVec<K>) -> Solution<K> {
        let mut v = target.clone();
        let mut combination = BTreeMap::new();
        self.reduce(&mut v, &mut combination);
        // v = target + sum combination_i * span_i
        let coefficients = combination.into_iter().map(|(i, c)| (i, -c)).collect();
        Solution {
            coefficients,
            residual: v,
        }
    }
}

/// The coefficient map of a polynomial, as a sparse vector over words.
pub fn poly_vector(p: &NcPolynomial) -> SparseVec<Word> {
    p.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Inverse of [`poly_vector`].
pub fn vector_poly(ngens: usize, v: &SparseVec<Word>) -> NcPolynomial {
    let mut p = NcPolynomial::zero(ngens);
    for (w, c) in v {
        p.add_term(w.clone(), c.clone());
    }
    p
}

/// Rank of a list of vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.push(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::vec::Vec;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn solves_unique_system() {
        let mut e = Echelon::new();
        assert!(e.push(v(&[(0, 1), (1, 1)])));
        assert!(e.push(v(&[(1, 1), (2, 2)])));
        assert!(e.push(v(&[(2, 1)])));
        let s = e.solve(&v(&[(0, 1), (1, 3), (2, 5)]));
        assert!(s.in_span());
        // 1*(1,1,0) + 2*(0,1,2) + 1*(0,0,1) = (1,3,5)
        assert_eq!(s.coefficients.get(&0), Some(&int(1)));
        assert_eq!(s.coefficients.get(&1), Some(&int(2)));
        assert_eq!(s.coefficients.get(&2), Some(&int(1)));
    }

    #[test]
    fn dependent_vector_gets_zero() {
        let mut e = Echelon::new();
        e.push(v(&[(0, 2)]));
        assert!(!e.push(v(&[(0, 3)])));
        assert_eq!(e.rank(), 1);
        assert_eq!(e.len(), 2);
        let s = e.solve(&v(&[(0, 1)]));
        assert_eq!(s.coefficients.len(), 1);
        assert_eq!(s.coefficients[&0], rat(1, 2));
    }

    #[test]
    fn residual_outside_span() {
        let mut e = Echelon::new();
        e.push(v(&[(0, 1), (1, 1)]));
        let s = e.solve(&v(&[(0, 1)]));
        assert!(!s.in_span());
        // key 0 carries no pivot, so nothing is eliminated
        assert_eq!(s.residual, v(&[(0, 1)]));
    }

    #[test]
    fn rank_of_dependent_family() {
        assert_eq!(rank([v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)])]), 2);
        assert_eq!(rank(Vec::<SparseVec<u32>>::new()), 0);
    }
}
