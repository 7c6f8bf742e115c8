//! Bernoulli numbers with `B_1 = +1/2`.
//!
//! `B_n` is defined by `sum_{i=0}^{n} C(n+1, i) B_i = n + 1`. Values are kept
//! in a process-wide table that only grows, so every entry is computed once.
//! [`bernoulli_via_series`] recomputes the same numbers from the generating
//! function `t e^t / (e^t - 1)` and serves as an independent check.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spin::Mutex;

use crate::rational::{binomial_q, sign, Rational};

static TABLE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// `B_n` in the `B_1 = +1/2` convention.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = TABLE.lock();
    extend_table(&mut table, n);
    table[n].clone()
}

/// `B_0, ..., B_n` in one lock acquisition.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut table = TABLE.lock();
    extend_table(&mut table, n);
    table[..=n].to_vec()
}

fn extend_table(table: &mut Vec<Rational>, n: usize) {
    while table.len() <= n {
        let m = table.len() as u64;
        // C(m+1, m) B_m = (m + 1) - sum_{i<m} C(m+1, i) B_i
        let mut rest = Rational::from_integer(BigInt::from(m + 1));
        for (i, b) in table.iter().enumerate() {
            if !b.is_zero() {
                rest -= binomial_q(m + 1, i as u64) * b;
            }
        }
        table.push(rest / binomial_q(m + 1, m));
    }
}

/// `(-1)^n B_n`, the convention with `B_1 = -1/2`.
pub fn bernoulli_alt(n: usize) -> Rational {
    sign(n as u64) * bernoulli(n)
}

/// A power series truncated after `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given coefficients; `order` is `coefficients.len() - 1`.
    /// Panics on an empty coefficient list.
    pub fn new(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a truncated series needs order >= 0");
        Self { coefficients }
    }

    /// `e^t` up to `t^order`.
    pub fn exp(order: usize) -> Self {
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        for n in 0..=order {
            if n > 0 {
                c /= Rational::from_integer(BigInt::from(n));
            }
            coefficients.push(c.clone());
        }
        Self { coefficients }
    }

    /// `(e^t - 1) / t` up to `t^order`: coefficient `n` is `1/(n+1)!`.
    pub fn exp_minus_one_over_t(order: usize) -> Self {
        let exp = Self::exp(order + 1);
        Self {
            coefficients: exp.coefficients[1..].to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, n: usize) -> &Rational {
        &self.coefficients[n]
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coefficients: out }
    }

    /// Quotient by a series with nonzero constant term, truncated at the
    /// smaller order. Returns `None` if the divisor's constant term is zero.
    pub fn div(&self, divisor: &Self) -> Option<Self> {
        let d0 = divisor.coefficients[0].clone();
        if d0.is_zero() {
            return None;
        }
        let order = self.order().min(divisor.order());
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coefficients[n].clone();
            for (i, q) in out.iter().enumerate() {
                acc -= q * &divisor.coefficients[n - i];
            }
            out.push(acc / &d0);
        }
        Some(Self { coefficients: out })
    }
}

/// `B_0, ..., B_order` read off `t e^t / (e^t - 1) = e^t / ((e^t - 1)/t)`.
///
/// Factoring `t` out of the denominator first leaves a divisor with constant
/// term 1, so the quotient is an ordinary power-series division.
pub fn bernoulli_via_series(order: usize) -> Vec<Rational> {
    let quotient = TruncatedSeries::exp(order)
        .div(&TruncatedSeries::exp_minus_one_over_t(order))
        .expect("(e^t - 1)/t has constant term 1");
    let mut factorial = BigInt::one();
    quotient
        .coefficients
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                factorial *= BigInt::from(n);
            }
            c * Rational::from_integer(factorial.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial_q, int, rat};

    fn figure_one() -> Vec<Rational> {
        vec![
            int(1),
            rat(1, 2),
            rat(1, 6),
            int(0),
            rat(-1, 30),
            int(0),
            rat(1, 42),
            int(0),
            rat(-1, 30),
            int(0),
            rat(5, 66),
        ]
    }

    #[test]
    fn table_up_to_ten() {
        for (n, b) in figure_one().into_iter().enumerate() {
            assert_eq!(bernoulli(n), b, "B_{n}");
        }
    }

    #[test]
    fn alternate_convention() {
        assert_eq!(bernoulli_alt(0), int(1));
        assert_eq!(bernoulli_alt(1), rat(-1, 2));
        assert_eq!(bernoulli_alt(2), rat(1, 6));
    }

    #[test]
    fn series_small_orders() {
        assert_eq!(bernoulli_via_series(0), vec![int(1)]);
        assert_eq!(bernoulli_via_series(2), vec![int(1), rat(1, 2), rat(1, 6)]);
        assert_eq!(bernoulli_via_series(10), figure_one());
    }

    #[test]
    fn recursion_and_series_agree() {
        let series = bernoulli_via_series(60);
        for (n, s) in series.iter().enumerate() {
            assert_eq!(&bernoulli(n), s, "B_{n}");
        }
    }

    #[test]
    fn odd_values_vanish() {
        for m in 1..=29 {
            assert!(bernoulli(2 * m + 1).is_zero());
        }
    }

    #[test]
    fn defining_recursion_closes() {
        let b = bernoulli_table(60);
        for n in 0..=60u64 {
            let sum: Rational = (0..=n)
                .map(|i| binomial_q(n + 1, i) * &b[i as usize])
                .sum();
            assert_eq!(sum, int(n as i64 + 1));
        }
    }

    #[test]
    fn lookup_after_larger_fill() {
        let big = bernoulli(40);
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(40), big);
    }

    #[test]
    fn series_division_round_trip() {
        let e = TruncatedSeries::exp(8);
        let d = TruncatedSeries::exp_minus_one_over_t(8);
        let q = e.div(&d).unwrap();
        assert_eq!(q.mul(&d), e);
        assert_eq!(q.order(), 8);
        assert!(e.div(&TruncatedSeries::new(vec![int(0), int(1)])).is_none());
    }
}
