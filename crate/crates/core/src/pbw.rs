//! Reduction to PBW normal form in a universal enveloping algebra.
//!
//! A word is *normal* when its letters are nondecreasing for the chosen
//! [`MonomialOrder`]. A descending adjacent pair `ab` is rewritten as
//! `ba + [a,b]`. Each rewrite either keeps the degree and strictly lowers the
//! word in the order-lexicographic order, or lowers the degree, so always
//! processing the greatest pending word visits every word at most once.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::free::{NcPolynomial, Word};
use crate::lie::{LiePresentation, Preset};
use crate::rational::{binomial_q, sign, Rational};

/// Degree cap for anything handed to the rewriting engine.
pub const DEGREE_CAP: usize = 64;

/// Letter order inside normal words: `rank[g]` is the position of generator
/// `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<u8>,
}

impl MonomialOrder {
    /// Generators in index order (for `L2`: `x` before `y`).
    pub fn natural(dim: usize) -> Self {
        Self {
            rank: (0..dim as u8).collect(),
        }
    }

    /// Generators in reverse index order (for `L2`: `y` before `x`).
    pub fn reversed(dim: usize) -> Self {
        Self {
            rank: (0..dim as u8).rev().collect(),
        }
    }

    /// Order given by listing generator indices from first to last.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self, AlgebraError> {
        let dim = sequence.len();
        let mut rank = vec![u8::MAX; dim];
        for (pos, &g) in sequence.iter().enumerate() {
            if g >= dim || rank[g] != u8::MAX {
                return Err(AlgebraError::InvalidOrder);
            }
            rank[g] = pos as u8;
        }
        Ok(Self { rank })
    }

    pub fn dim(&self) -> usize {
        self.rank.len()
    }

    pub fn rank(&self, g: usize) -> usize {
        self.rank[g] as usize
    }

    /// Generator indices from first to last.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank.len()];
        for (g, &r) in self.rank.iter().enumerate() {
            seq[r as usize] = g;
        }
        seq
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        w.letters()
            .windows(2)
            .all(|p| self.rank[p[0] as usize] <= self.rank[p[1] as usize])
    }
}

/// Which descending pair of a word is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

/// A presentation together with the monomial order used for normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    presentation: LiePresentation,
    order: MonomialOrder,
    // brackets re-expressed on rank letters: ranked[a][b] = [a,b] for a > b
    ranked: Vec<Vec<Vec<(u8, Rational)>>>,
}

impl Algebra {
    pub fn new(presentation: LiePresentation, order: MonomialOrder) -> Result<Self, AlgebraError> {
        let dim = presentation.dim();
        if order.dim() != dim {
            return Err(AlgebraError::InvalidOrder);
        }
        let seq = order.sequence();
        let mut ranked = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..a {
                ranked[a][b] = presentation
                    .bracket_coords(seq[a], seq[b])
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(g, c)| (order.rank[g], c.clone()))
                    .collect();
            }
        }
        Ok(Self {
            presentation,
            order,
            ranked,
        })
    }

    /// The preset with generators in index order.
    pub fn from_preset(p: &Preset) -> Result<Self, AlgebraError> {
        let pres = p.build()?;
        let order = MonomialOrder::natural(pres.dim());
        Self::new(pres, order)
    }

    /// `A = U(L2)` with normal words `x^m y^n`.
    pub fn l2_x_first() -> Self {
        Self::from_preset(&Preset::L2).expect("L2 preset is valid")
    }

    /// `A = U(L2)` with normal words `y^n x^m`.
    pub fn l2_y_first() -> Self {
        let pres = Preset::L2.build().expect("L2 preset is valid");
        Self::new(pres, MonomialOrder::reversed(2)).expect("matching dimension")
    }

    pub fn presentation(&self) -> &LiePresentation {
        &self.presentation
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.presentation.dim()
    }

    pub fn generator(&self, i: usize) -> NcPolynomial {
        self.presentation.generator(i)
    }

    /// Look up a generator by name.
    pub fn named(&self, name: &str) -> Option<NcPolynomial> {
        self.presentation.index_of(name).map(|i| self.generator(i))
    }

    pub fn normal_form(&self, p: &NcPolynomial) -> Result<NcPolynomial, AlgebraError> {
        self.normal_form_with(p, Strategy::LeftmostFirst)
    }

    pub fn normal_form_with(
        &self,
        p: &NcPolynomial,
        strategy: Strategy,
    ) -> Result<NcPolynomial, AlgebraError> {
        let dim = self.dim();
        if p.ngens() != dim {
            return Err(AlgebraError::UniverseMismatch {
                left: dim,
                right: p.ngens(),
            });
        }
        if let Some(m) = p.max_letter() {
            if m >= dim {
                return Err(AlgebraError::ForeignGenerator { index: m, dim });
            }
        }
        if let Some(d) = p.degree() {
            if d > DEGREE_CAP {
                return Err(AlgebraError::DegreeCap {
                    degree: d,
                    cap: DEGREE_CAP,
                });
            }
        }

        let mut pending: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in p {
            let ranked = w.letters().iter().map(|&g| self.order.rank[g as usize]).collect();
            accumulate(&mut pending, Word::new(ranked), c.clone());
        }

        let mut done = NcPolynomial::zero(dim);
        let seq = self.order.sequence();
        while let Some((w, c)) = pending.pop_last() {
            let letters = w.letters();
            let pos = match strategy {
                Strategy::LeftmostFirst => letters.windows(2).position(|p| p[0] > p[1]),
                Strategy::RightmostFirst => letters.windows(2).rposition(|p| p[0] > p[1]),
            };
            let Some(i) = pos else {
                let original = letters.iter().map(|&r| seq[r as usize] as u8).collect();
                done.add_term(Word::new(original), c);
                continue;
            };
            let (a, b) = (letters[i], letters[i + 1]);
            let mut swapped = letters.to_vec();
            swapped.swap(i, i + 1);
            accumulate(&mut pending, Word::new(swapped), c.clone());
            for (g, coeff) in &self.ranked[a as usize][b as usize] {
                let mut shorter = Vec::with_capacity(letters.len() - 1);
                shorter.extend_from_slice(&letters[..i]);
                shorter.push(*g);
                shorter.extend_from_slice(&letters[i + 2..]);
                accumulate(&mut pending, Word::new(shorter), &c * coeff);
            }
        }
        Ok(done)
    }

    /// True iff every word of `p` is normal for this algebra's order.
    pub fn is_normal(&self, p: &NcPolynomial) -> bool {
        p.terms().all(|(w, _)| self.order.is_normal(w))
    }

    /// Normal form of a product.
    pub fn mul(&self, p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial, AlgebraError> {
        self.normal_form(&p.try_mul(q)?)
    }
}

fn accumulate(map: &mut BTreeMap<Word, Rational>, w: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match map.entry(w) {
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

fn l2_word(x_then_y: &[(u8, usize)]) -> Word {
    let mut letters = Vec::new();
    for &(g, n) in x_then_y {
        letters.extend(core::iter::repeat_n(g, n));
    }
    Word::new(letters)
}

/// `x y^k = sum_{i=0}^{k} C(k,i) y^i x`, written out term by term in the
/// `L2` universe without any rewriting.
pub fn closed_xy_k(k: usize) -> NcPolynomial {
    let mut p = NcPolynomial::zero(2);
    for i in 0..=k {
        p.add_term(l2_word(&[(1, i), (0, 1)]), binomial_q(k as u64, i as u64));
    }
    p
}

/// `y^k x = sum_{i=0}^{k} (-1)^{k-i} C(k,i) x y^i`, written out term by term.
pub fn closed_yk_x(k: usize) -> NcPolynomial {
    let mut p = NcPolynomial::zero(2);
    for i in 0..=k {
        p.add_term(
            l2_word(&[(0, 1), (1, i)]),
            sign((k - i) as u64) * binomial_q(k as u64, i as u64),
        );
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x() -> NcPolynomial {
        NcPolynomial::generator(2, 0)
    }
    fn y() -> NcPolynomial {
        NcPolynomial::generator(2, 1)
    }
    const NAMES: [&str; 2] = ["x", "y"];

    #[test]
    fn yx_in_x_first_order() {
        let a = Algebra::l2_x_first();
        let nf = a.normal_form(&(&y() * &x())).unwrap();
        assert_eq!(nf, &(&x() * &y()) - &x());
    }

    #[test]
    fn xy2_in_y_first_order() {
        let a = Algebra::l2_y_first();
        let nf = a.normal_form(&(&x() * &y().pow(2))).unwrap();
        assert_eq!(nf.render(&NAMES), "x + 2*y*x + y^2*x");
    }

    #[test]
    fn defining_relation_vanishes() {
        let a = Algebra::l2_x_first();
        let rel = &(&(&x() * &y()) - &(&y() * &x())) - &x();
        assert!(a.normal_form(&rel).unwrap().is_zero());
    }

    #[test]
    fn closed_forms_small_k() {
        assert_eq!(closed_xy_k(1), &(&y() * &x()) + &x());
        assert_eq!(closed_xy_k(2).render(&NAMES), "x + 2*y*x + y^2*x");
        assert_eq!(closed_yk_x(2).render(&NAMES), "x - 2*x*y + x*y^2");
        assert_eq!(closed_xy_k(0), x());
    }

    #[test]
    fn closed_forms_match_engine() {
        let xf = Algebra::l2_x_first();
        let yf = Algebra::l2_y_first();
        for k in 0..=30 {
            let xyk = &x() * &y().pow(k);
            let ykx = &y().pow(k) * &x();
            assert_eq!(yf.normal_form(&xyk).unwrap(), closed_xy_k(k), "k={k}");
            assert_eq!(xf.normal_form(&ykx).unwrap(), closed_yk_x(k), "k={k}");
        }
    }

    #[test]
    fn change_of_basis_round_trip() {
        // substitute y^i x = closed_yk_x(i) into closed_xy_k(k): must give x y^k
        for k in 0..=20usize {
            let mut back = NcPolynomial::zero(2);
            for (w, c) in &closed_xy_k(k) {
                let i = w.count(1);
                back.add_scaled(c, &closed_yk_x(i)).unwrap();
            }
            assert_eq!(back, &x() * &y().pow(k), "k={k}");
        }
    }

    #[test]
    fn pascal_product_identity() {
        for k in 0..=25u64 {
            for i in 0..=k {
                for j in 0..=i {
                    assert_eq!(
                        binomial_q(k, i) * binomial_q(i, j),
                        binomial_q(k, j) * binomial_q(k - j, i - j)
                    );
                }
            }
        }
    }

    #[test]
    fn heisenberg_center() {
        let a = Algebra::from_preset(&Preset::Heisenberg).unwrap();
        let (e, f, g) = (a.generator(0), a.generator(1), a.generator(2));
        // g is central: g e - e g normal-forms to zero
        let comm = &(&g * &e) - &(&e * &g);
        assert!(a.normal_form(&comm).unwrap().is_zero());
        // f e = e f - g
        assert_eq!(a.normal_form(&(&f * &e)).unwrap(), &(&e * &f) - &g);
    }

    #[test]
    fn errors() {
        let a = Algebra::l2_x_first();
        assert!(matches!(
            a.normal_form(&NcPolynomial::generator(3, 2)),
            Err(AlgebraError::UniverseMismatch { .. })
        ));
        let big = y().pow(DEGREE_CAP + 1);
        assert!(matches!(
            a.normal_form(&big),
            Err(AlgebraError::DegreeCap { degree: 65, cap: 64 })
        ));
        assert!(a.normal_form(&y().pow(DEGREE_CAP)).is_ok());
        assert_eq!(MonomialOrder::from_sequence(&[0, 0]), Err(AlgebraError::InvalidOrder));
        assert_eq!(
            MonomialOrder::from_sequence(&[1, 0]).unwrap(),
            MonomialOrder::reversed(2)
        );
    }

    #[test]
    fn constants_and_scalars_pass_through() {
        let a = Algebra::l2_x_first();
        let p = &NcPolynomial::constant(2, int(5)) + &(&x() * &y());
        assert_eq!(a.normal_form(&p).unwrap(), p);
    }
}
