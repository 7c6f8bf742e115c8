//! The two-sided ideal `W = sum_{m>=1, n>=0} K x^m y^n` of `A` as a concrete
//! vector space with basis `w_{k,l}`, and the matrices of left
//! multiplication by `x` and `y` in that basis.
//!
//! All normal forms here use the `x`-first order, so `W` is exactly the span
//! of normal words containing at least one `x`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_table;
use crate::error::AlgebraError;
use crate::free::NcPolynomial;
use crate::identities::{w, x, y};
use crate::linalg::{poly_vector, vector_poly, Echelon};
use crate::pbw::Algebra;
use crate::rational::{binomial_q, int, Rational};

/// Index `(k, l)` of `w_{k,l}`.
pub type WIndex = (usize, usize);

/// Finite combination `sum c_{k,l} w_{k,l}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WCoordinates {
    entries: BTreeMap<WIndex, Rational>,
}

impl WCoordinates {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(k: usize, l: usize) -> Self {
        let mut c = Self::new();
        c.add(k, l, Rational::one());
        c
    }

    pub fn from_entries<I: IntoIterator<Item = (WIndex, Rational)>>(entries: I) -> Self {
        let mut c = Self::new();
        for ((k, l), v) in entries {
            c.add(k, l, v);
        }
        c
    }

    pub fn add(&mut self, k: usize, l: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((k, l)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(k, l));
        }
    }

    pub fn get(&self, k: usize, l: usize) -> Rational {
        self.entries.get(&(k, l)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<WIndex, Rational> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum c_{k,l} w_{k,l}` as an unreduced polynomial.
    pub fn reconstruct(&self) -> NcPolynomial {
        let mut p = NcPolynomial::zero(2);
        for (&(k, l), c) in &self.entries {
            let wk = w(k, l).expect("coordinates only carry k >= 1").value;
            p.add_scaled(c, &wk).expect("L2 universe");
        }
        p
    }
}

/// Exact solver for coordinates in `{w_{k,l} : 1 <= k <= kmax, 0 <= l <= lmax}`.
#[derive(Debug, Clone)]
pub struct WBasis {
    kmax: usize,
    lmax: usize,
    algebra: Algebra,
    index: Vec<WIndex>,
    echelon: Echelon<crate::free::Word>,
}

impl WBasis {
    pub fn new(kmax: usize, lmax: usize) -> Result<Self, AlgebraError> {
        let algebra = Algebra::l2_x_first();
        let mut index = Vec::new();
        let mut echelon = Echelon::new();
        for k in 1..=kmax {
            for l in 0..=lmax {
                let nf = algebra.normal_form(&w(k, l)?.value)?;
                index.push((k, l));
                echelon.push(poly_vector(&nf));
            }
        }
        Ok(Self {
            kmax,
            lmax,
            algebra,
            index,
            echelon,
        })
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.kmax, self.lmax)
    }

    /// Number of basis vectors.
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn express(&self, p: &NcPolynomial) -> Result<WCoordinates, AlgebraError> {
        let nf = self.algebra.normal_form(p)?;
        let solution = self.echelon.solve(&poly_vector(&nf));
        if !solution.in_span() {
            let residual = vector_poly(2, &solution.residual);
            let top_degree = residual.degree().unwrap_or(0);
            return Err(AlgebraError::NotInTruncatedSpan {
                residual,
                top_degree,
            });
        }
        Ok(WCoordinates::from_entries(
            solution
                .coefficients
                .into_iter()
                .map(|(i, c)| (self.index[i], c)),
        ))
    }
}

/// Coordinates of `p` in the truncated `w`-basis.
pub fn express_in_w_basis(
    p: &NcPolynomial,
    kmax: usize,
    lmax: usize,
) -> Result<WCoordinates, AlgebraError> {
    WBasis::new(kmax, lmax)?.express(p)
}

/// True iff the `w_{k,l}` with `k <= kmax`, `l <= lmax` are linearly
/// independent, certified by exact rank.
pub fn independence_certificate(kmax: usize, lmax: usize) -> Result<bool, AlgebraError> {
    let basis = WBasis::new(kmax, lmax)?;
    Ok(basis.rank() == basis.len())
}

/// True iff every normal word of `p` (x-first) has at least one `x`.
pub fn membership_w(p: &NcPolynomial) -> Result<bool, AlgebraError> {
    let nf = Algebra::l2_x_first().normal_form(p)?;
    Ok(nf.terms().all(|(word, _)| word.count(0) >= 1))
}

/// Left multiplication by a generator of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Acting {
    X,
    Y,
}

impl Acting {
    pub fn as_str(self) -> &'static str {
        match self {
            Acting::X => "x",
            Acting::Y => "y",
        }
    }

    pub fn poly(self) -> NcPolynomial {
        match self {
            Acting::X => x(),
            Acting::Y => y(),
        }
    }
}

/// Sparse matrix of `v -> g v` on the truncated `w`-basis. Columns are
/// `1 <= k <= kmax`, `0 <= l <= lmax`; rows may reach `kmax + 1` and
/// `lmax + 1`, so boundary columns are represented without loss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    pub generator: Acting,
    pub kmax: usize,
    pub lmax: usize,
    // keyed by (column, row) so iteration is column-major
    entries: BTreeMap<(WIndex, WIndex), Rational>,
}

impl ActionMatrix {
    pub fn entry(&self, row: WIndex, col: WIndex) -> Rational {
        self.entries
            .get(&(col, row))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, col: WIndex) -> WCoordinates {
        WCoordinates::from_entries(
            self.entries
                .range((col, (0, 0))..=(col, (usize::MAX, usize::MAX)))
                .map(|(&(_, row), v)| (row, v.clone())),
        )
    }

    /// Nonzero entries as `(row, column, value)`, column-major.
    pub fn triples(&self) -> impl Iterator<Item = (WIndex, WIndex, &Rational)> {
        self.entries.iter().map(|(&(col, row), v)| (row, col, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn in_domain(&self, (k, l): WIndex) -> bool {
        (1..=self.kmax).contains(&k) && l <= self.lmax
    }

    /// Apply to a coordinate vector supported inside the column range.
    pub fn apply(&self, v: &WCoordinates) -> Result<WCoordinates, AlgebraError> {
        let mut out = WCoordinates::new();
        for (&(k, l), c) in v.entries() {
            if !self.in_domain((k, l)) {
                return Err(AlgebraError::OutsideDomain { k, l });
            }
            for ((row_k, row_l), m) in self.column((k, l)).entries() {
                out.add(*row_k, *row_l, c * m);
            }
        }
        Ok(out)
    }
}

/// Compute `g w_{k,l}` for every column and resolve it in the `w`-basis with
/// bounds `(kmax + 1, lmax + 1)`.
pub fn action_matrix(g: Acting, kmax: usize, lmax: usize) -> Result<ActionMatrix, AlgebraError> {
    if kmax == 0 {
        return Err(AlgebraError::InvalidParameter("kmax must be at least 1"));
    }
    let basis = WBasis::new(kmax + 1, lmax + 1)?;
    let gp = g.poly();
    let mut entries = BTreeMap::new();
    for k in 1..=kmax {
        for l in 0..=lmax {
            let image = &gp * &w(k, l)?.value;
            for (&row, v) in basis.express(&image)?.entries() {
                entries.insert(((k, l), row), v.clone());
            }
        }
    }
    Ok(ActionMatrix {
        generator: g,
        kmax,
        lmax,
        entries,
    })
}

/// Column `(k, l)` predicted by the Bernoulli-type relations:
/// `x w_{k,l} = sum_{i=1}^{k} C(k,i) w_{i,l+1}` and
/// `y w_{k,l} = k/(k+1) w_{k+1,l} - sum_{i=1}^{k} C(k+1,i) B_{k+1-i}/(k+1) w_{i,l}`.
pub fn structure_constants(g: Acting, k: usize, l: usize) -> WCoordinates {
    let mut c = WCoordinates::new();
    match g {
        Acting::X => {
            for i in 1..=k {
                c.add(i, l + 1, binomial_q(k as u64, i as u64));
            }
        }
        Acting::Y => {
            let b = bernoulli_table(k + 1);
            let inv = Rational::one() / int(k as i64 + 1);
            c.add(k + 1, l, int(k as i64) * &inv);
            for i in 1..=k {
                c.add(i, l, -(&inv * binomial_q(k as u64 + 1, i as u64) * &b[k + 1 - i]));
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn express_small_elements() {
        assert_eq!(express_in_w_basis(&x(), 2, 1).unwrap(), WCoordinates::unit(1, 0));
        assert_eq!(express_in_w_basis(&x().pow(2), 2, 1).unwrap(), WCoordinates::unit(1, 1));
        let yx = &y() * &x();
        let expected = WCoordinates::from_entries([((2, 0), rat(1, 2)), ((1, 0), rat(-1, 2))]);
        assert_eq!(express_in_w_basis(&yx, 2, 1).unwrap(), expected);
    }

    #[test]
    fn not_in_span() {
        let err = express_in_w_basis(&y(), 3, 3).unwrap_err();
        assert!(matches!(err, AlgebraError::NotInTruncatedSpan { top_degree: 1, .. }));
        let err = express_in_w_basis(&(&x() * &y().pow(5)), 2, 2).unwrap_err();
        assert!(matches!(err, AlgebraError::NotInTruncatedSpan { top_degree: 6, .. }));
    }

    #[test]
    fn independence() {
        assert!(independence_certificate(1, 1).unwrap());
        assert!(independence_certificate(6, 4).unwrap());
    }

    #[test]
    fn membership() {
        assert!(membership_w(&(&x() * &y().pow(5))).unwrap());
        assert!(!membership_w(&y().pow(3)).unwrap());
        let p = &w(4, 2).unwrap().value * &y();
        assert!(membership_w(&p).unwrap());
        assert!(membership_w(&NcPolynomial::zero(2)).unwrap());
        assert!(!membership_w(&NcPolynomial::one(2)).unwrap());
    }

    #[test]
    fn small_columns() {
        let my = action_matrix(Acting::Y, 3, 1).unwrap();
        let col = my.column((1, 0));
        assert_eq!(col, WCoordinates::from_entries([((2, 0), rat(1, 2)), ((1, 0), rat(-1, 2))]));
        let col = my.column((3, 0));
        assert_eq!(col.get(1, 0), rat(0, 1));
        assert_eq!(col.get(2, 0), rat(-1, 4));
        assert_eq!(col.get(3, 0), rat(-1, 2));
        assert_eq!(col.get(4, 0), rat(3, 4));
        assert_eq!(col.entries().len(), 3);
        let mx = action_matrix(Acting::X, 3, 2).unwrap();
        for l in 0..=2 {
            assert_eq!(mx.column((1, l)), WCoordinates::unit(1, l + 1));
        }
    }

    #[test]
    fn apply_outside_domain() {
        let mx = action_matrix(Acting::X, 2, 1).unwrap();
        assert_eq!(
            mx.apply(&WCoordinates::unit(3, 0)),
            Err(AlgebraError::OutsideDomain { k: 3, l: 0 })
        );
    }
}
