//! Words and noncommutative polynomials over [`Rational`].

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::rational::Rational;

/// A finite sequence of generator indices. The empty word is the identity.
///
/// Words are ordered graded-lexicographically: shorter words first, then
/// lexicographically by generator index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<u8>) -> Self {
        Self(letters)
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        Self(letters.to_vec())
    }

    /// `g^n`.
    pub fn power(g: u8, n: usize) -> Self {
        Self(alloc::vec![g; n])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Number of occurrences of generator `g`.
    pub fn count(&self, g: u8) -> usize {
        self.0.iter().filter(|&&l| l == g).count()
    }

    fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    /// Render with `names`, collapsing runs to `name^n` and joining with `*`.
    pub fn render(&self, names: &[&str]) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == g {
                run += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            match names.get(g as usize) {
                Some(name) => out.push_str(name),
                None => {
                    let _ = write!(out, "g{g}");
                }
            }
            if run > 1 {
                let _ = write!(out, "^{run}");
            }
            i += run;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite `Q`-linear combination of words in `ngens` generators.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcPolynomial {
    ngens: usize,
    terms: BTreeMap<Word, Rational>,
}

impl NcPolynomial {
    pub fn zero(ngens: usize) -> Self {
        Self {
            ngens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ngens: usize) -> Self {
        Self::constant(ngens, Rational::one())
    }

    pub fn constant(ngens: usize, c: Rational) -> Self {
        Self::monomial(ngens, Word::empty(), c)
    }

    /// The generator `g` as a polynomial. Panics if `g >= ngens`.
    pub fn generator(ngens: usize, g: usize) -> Self {
        assert!(g < ngens, "generator {g} out of range for {ngens} generators");
        Self::monomial(ngens, Word::new(alloc::vec![g as u8]), Rational::one())
    }

    /// `c * w`. Panics if `w` uses a letter outside `0..ngens`.
    pub fn monomial(ngens: usize, w: Word, c: Rational) -> Self {
        if let Some(m) = w.max_letter() {
            assert!((m as usize) < ngens, "letter {m} out of range for {ngens} generators");
        }
        let mut p = Self::zero(ngens);
        p.add_term(w, c);
        p
    }

    /// Build from `(word, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(ngens: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = Self::zero(ngens);
        for (w, c) in terms {
            if let Some(m) = w.max_letter() {
                if m as usize >= ngens {
                    return Err(AlgebraError::ForeignGenerator {
                        index: m as usize,
                        dim: ngens,
                    });
                }
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    /// Largest generator index used, if any.
    pub fn max_letter(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(Word::max_letter)
            .max()
            .map(usize::from)
    }

    /// Add `c * w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_universe(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ngens != other.ngens {
            return Err(AlgebraError::UniverseMismatch {
                left: self.ngens,
                right: other.ngens,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_universe(other)?;
        let mut out = Self::zero(self.ngens);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) -> Result<(), AlgebraError> {
        self.check_universe(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), c * d);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ngens);
        }
        Self {
            ngens: self.ngens,
            terms: self
                .terms
                .iter()
                .map(|(w, d)| (w.clone(), c * d))
                .collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one(self.ngens);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Plain-text rendering, e.g. `x*y^2 - y^2*x`. Coefficients of 1 are
    /// suppressed; the zero polynomial renders as `0`.
    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if w.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&w.render(names));
            } else {
                let _ = write!(out, "{mag}*{}", w.render(names));
            }
        }
        out
    }
}

impl<'a> IntoIterator for &'a NcPolynomial {
    type Item = (&'a Word, &'a Rational);
    type IntoIter = btree_map::Iter<'a, Word, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

// Operator impls panic on mismatched universes; use the `try_*` methods when
// the generator sets are not known to agree.

impl Add<&NcPolynomial> for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.try_add(rhs).expect("mismatched generator universe")
    }
}

impl Sub<&NcPolynomial> for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.try_sub(rhs).expect("mismatched generator universe")
    }
}

impl Mul<&NcPolynomial> for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        self.try_mul(rhs).expect("mismatched generator universe")
    }
}

impl Add for NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: NcPolynomial) -> NcPolynomial {
        &self + &rhs
    }
}

impl Sub for NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: NcPolynomial) -> NcPolynomial {
        &self - &rhs
    }
}

impl Mul for NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: NcPolynomial) -> NcPolynomial {
        &self * &rhs
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        NcPolynomial {
            ngens: self.ngens,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x() -> NcPolynomial {
        NcPolynomial::generator(2, 0)
    }
    fn y() -> NcPolynomial {
        NcPolynomial::generator(2, 1)
    }
    const NAMES: [&str; 2] = ["x", "y"];

    #[test]
    fn additive_inverse() {
        assert!((&x() + &(-&x())).is_zero());
    }

    #[test]
    fn noncommuting_words_stay_distinct() {
        let xy = &x() * &y();
        let yx = &y() * &x();
        assert_ne!(xy, yx);
        let s = &xy + &yx;
        assert_eq!(s.len(), 2);
        assert_eq!(s.render(&NAMES), "x*y + y*x");
    }

    #[test]
    fn like_terms_merge() {
        let xy = &x() * &y();
        let p = &xy.scale(&int(2)) + &(&xy - &x());
        assert_eq!(p.render(&NAMES), "-x + 3*x*y");
        assert_eq!(p.coefficient(&Word::from_letters(&[0, 1])), int(3));
    }

    #[test]
    fn concatenation_order() {
        let p = &x() * &y();
        assert_eq!(p.terms().next().unwrap().0.letters(), &[0, 1]);
    }

    #[test]
    fn four_term_expansion() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p.len(), 4);
        assert_eq!(p.render(&NAMES), "x^2 - x*y + y*x - y^2");
    }

    #[test]
    fn scaling() {
        let p = &(&x() * &y()) - &x();
        assert!(p.scale(&int(0)).is_zero());
        assert_eq!(p.scale(&int(1)), p);
        assert_eq!(x().scale(&int(2)).scale(&rat(1, 2)), x());
    }

    #[test]
    fn mismatched_universe_is_an_error() {
        let z = NcPolynomial::generator(3, 2);
        assert_eq!(
            x().try_add(&z),
            Err(AlgebraError::UniverseMismatch { left: 2, right: 3 })
        );
        assert!(x().try_mul(&z).is_err());
        assert!(NcPolynomial::from_terms(2, [(Word::from_letters(&[2]), int(1))]).is_err());
    }

    #[test]
    fn rendering() {
        let w2 = &(&x() * &y().pow(2)) - &(&y().pow(2) * &x());
        assert_eq!(w2.render(&NAMES), "x*y^2 - y^2*x");
        assert_eq!(NcPolynomial::zero(2).render(&NAMES), "0");
        assert_eq!(NcPolynomial::constant(2, rat(-3, 2)).render(&NAMES), "-3/2");
        let p = &x().scale(&rat(3, 2)) + &NcPolynomial::one(2);
        assert_eq!(p.render(&NAMES), "1 + 3/2*x");
    }

    #[test]
    fn graded_lex_order() {
        let a = Word::from_letters(&[1]);
        let b = Word::from_letters(&[0, 0]);
        let c = Word::from_letters(&[0, 1]);
        assert!(Word::empty() < a && a < b && b < c);
    }

    #[test]
    fn degree_of_words_adds() {
        let u = Word::from_letters(&[0, 1, 1]);
        let v = Word::from_letters(&[1, 0]);
        assert_eq!(u.concat(&v).degree(), 5);
        assert_eq!(NcPolynomial::zero(2).degree(), None);
    }
}
