//! The elements `w_{k,l}` and executable checks of the Bernoulli-type
//! relations, their corollaries, and the `U_k` congruences in
//! three-dimensional enveloping algebras.
//!
//! Every check reduces both sides with the same [`Algebra::normal_form`] and
//! reports the difference. Two statements are checked in a corrected form
//! and, separately, as printed:
//!
//! * `br1` sums `C(k,i) w_{i,l+1}`; `br1-literal` sums `C(k,i) w_{k,l+1}`.
//! * `pk` has the term `y^{k+1} x`; `pk-literal` has `x^{k+1} x` instead.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_table;
use crate::error::AlgebraError;
use crate::free::NcPolynomial;
use crate::lie::Preset;
use crate::linalg::{poly_vector, vector_poly, Echelon};
use crate::pbw::{closed_xy_k, closed_yk_x, Algebra};
use crate::rational::{binomial_q, int, sign, Rational};

/// `x` in the `L2` universe.
pub fn x() -> NcPolynomial {
    NcPolynomial::generator(2, 0)
}

/// `y` in the `L2` universe.
pub fn y() -> NcPolynomial {
    NcPolynomial::generator(2, 1)
}

fn q(k: usize) -> Rational {
    int(k as i64)
}

/// `w_{k,l} = (x y^k - y^k x) x^l`, kept as the literal unreduced product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WElement {
    pub k: usize,
    pub l: usize,
    pub value: NcPolynomial,
}

pub fn w(k: usize, l: usize) -> Result<WElement, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::InvalidParameter("w_{k,l} needs k >= 1"));
    }
    let yk = y().pow(k);
    let commutator = &(&x() * &yk) - &(&yk * &x());
    Ok(WElement {
        k,
        l,
        value: &commutator * &x().pow(l),
    })
}

fn wv(k: usize, l: usize) -> NcPolynomial {
    w(k, l).expect("k >= 1").value
}

/// Stable identifiers of the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Br1,
    Br1Literal,
    Br2,
    Sbr1,
    Sbr2,
    Pk,
    Qk,
    PkLiteral,
    PkDplus,
    QkDplus,
    Ak,
    Bk,
    Ck,
    PropIi,
    PropIii,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::Br1,
        IdentityId::Br1Literal,
        IdentityId::Br2,
        IdentityId::Sbr1,
        IdentityId::Sbr2,
        IdentityId::Pk,
        IdentityId::Qk,
        IdentityId::PkLiteral,
        IdentityId::PkDplus,
        IdentityId::QkDplus,
        IdentityId::Ak,
        IdentityId::Bk,
        IdentityId::Ck,
        IdentityId::PropIi,
        IdentityId::PropIii,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Br1 => "br1",
            IdentityId::Br1Literal => "br1-literal",
            IdentityId::Br2 => "br2",
            IdentityId::Sbr1 => "sbr1",
            IdentityId::Sbr2 => "sbr2",
            IdentityId::Pk => "pk",
            IdentityId::Qk => "qk",
            IdentityId::PkLiteral => "pk-literal",
            IdentityId::PkDplus => "pk-dplus",
            IdentityId::QkDplus => "qk-dplus",
            IdentityId::Ak => "ak",
            IdentityId::Bk => "bk",
            IdentityId::Ck => "ck",
            IdentityId::PropIi => "prop-ii",
            IdentityId::PropIii => "prop-iii",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one identity instance. `equal` holds iff `residual` is zero;
/// `lhs`, `rhs` and `residual` are all in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub params: Vec<(&'static str, usize)>,
    pub names: Vec<String>,
    pub lhs: NcPolynomial,
    pub rhs: NcPolynomial,
    pub equal: bool,
    pub residual: NcPolynomial,
    /// For `br1` and `pk`: whether the statement as printed also holds.
    pub literal_holds: Option<bool>,
}

impl VerificationReport {
    pub fn param(&self, name: &str) -> Option<usize> {
        self.params.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn render(&self, p: &NcPolynomial) -> String {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        p.render(&names)
    }
}

fn names_of(alg: &Algebra) -> Vec<String> {
    alg.presentation().names().into_iter().map(ToString::to_string).collect()
}

fn compare(
    alg: &Algebra,
    id: IdentityId,
    params: Vec<(&'static str, usize)>,
    lhs: &NcPolynomial,
    rhs: &NcPolynomial,
) -> Result<VerificationReport, AlgebraError> {
    let lhs = alg.normal_form(lhs)?;
    let rhs = alg.normal_form(rhs)?;
    let residual = lhs.try_sub(&rhs)?;
    Ok(VerificationReport {
        id,
        params,
        names: names_of(alg),
        equal: residual.is_zero(),
        lhs,
        rhs,
        residual,
        literal_holds: None,
    })
}

fn check_k(k: usize) -> Result<(), AlgebraError> {
    if k == 0 {
        Err(AlgebraError::InvalidParameter("k must be at least 1"))
    } else {
        Ok(())
    }
}

fn br1_rhs(k: usize, l: usize) -> NcPolynomial {
    let mut rhs = NcPolynomial::zero(2);
    for i in 1..=k {
        rhs.add_scaled(&binomial_q(k as u64, i as u64), &wv(i, l + 1))
            .expect("same universe");
    }
    rhs
}

fn br1_literal_rhs(k: usize, l: usize) -> NcPolynomial {
    let total: Rational = (1..=k).map(|i| binomial_q(k as u64, i as u64)).sum();
    wv(k, l + 1).scale(&total)
}

/// `x w_{k,l} = sum_{i=1}^{k} C(k,i) w_{i,l+1}`. The report also records
/// whether the index-inconsistent printed form (summand `w_{k,l+1}`) holds.
pub fn verify_br1(k: usize, l: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let lhs = &x() * &wv(k, l);
    let mut report = compare(&alg, IdentityId::Br1, alloc::vec![("k", k), ("l", l)], &lhs, &br1_rhs(k, l))?;
    let literal = alg.normal_form(&br1_literal_rhs(k, l))?;
    report.literal_holds = Some(literal == report.lhs);
    Ok(report)
}

/// The printed form `x w_{k,l} = sum_{i=1}^{k} C(k,i) w_{k,l+1}`; fails for
/// every `k >= 2`.
pub fn verify_br1_literal(k: usize, l: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let lhs = &x() * &wv(k, l);
    compare(
        &alg,
        IdentityId::Br1Literal,
        alloc::vec![("k", k), ("l", l)],
        &lhs,
        &br1_literal_rhs(k, l),
    )
}

/// `y w_{k,l} = k/(k+1) w_{k+1,l} - 1/(k+1) sum_{i=1}^{k} C(k+1,i) B_{k+1-i} w_{i,l}`.
pub fn verify_br2(k: usize, l: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let b = bernoulli_table(k + 1);
    let inv = Rational::one() / q(k + 1);
    let lhs = &y() * &wv(k, l);
    let mut rhs = wv(k + 1, l).scale(&(q(k) * &inv));
    for i in 1..=k {
        let c = -(&inv * binomial_q(k as u64 + 1, i as u64) * &b[k + 1 - i]);
        rhs.add_scaled(&c, &wv(i, l))?;
    }
    compare(&alg, IdentityId::Br2, alloc::vec![("k", k), ("l", l)], &lhs, &rhs)
}

/// `y w_k = ...`: the `l = 0` case of [`verify_br2`].
pub fn verify_sbr1(k: usize) -> Result<VerificationReport, AlgebraError> {
    let mut report = verify_br2(k, 0)?;
    report.id = IdentityId::Sbr1;
    report.params = alloc::vec![("k", k)];
    Ok(report)
}

/// `w_k y = k/(k+1) w_{k+1} - 1/(k+1) sum_{i=1}^{k} (-1)^{k+1-i} C(k+1,i) B_{k+1-i} w_i`.
pub fn verify_sbr2(k: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let b = bernoulli_table(k + 1);
    let inv = Rational::one() / q(k + 1);
    let lhs = &wv(k, 0) * &y();
    let mut rhs = wv(k + 1, 0).scale(&(q(k) * &inv));
    for i in 1..=k {
        let c = -(&inv
            * sign((k + 1 - i) as u64)
            * binomial_q(k as u64 + 1, i as u64)
            * &b[k + 1 - i]);
        rhs.add_scaled(&c, &wv(i, 0))?;
    }
    compare(&alg, IdentityId::Sbr2, alloc::vec![("k", k)], &lhs, &rhs)
}

// right-hand side of (P_k) in U(L2); `second` is the y^{k+1} x slot
fn pk_rhs(k: usize, second: &NcPolynomial) -> NcPolynomial {
    let b = bernoulli_table(k + 1);
    let inv = Rational::one() / q(k + 1);
    let mut rhs = (&x() * &y().pow(k + 1)).scale(&(q(k) * &inv));
    rhs.add_scaled(&inv, second).expect("same universe");
    for i in 1..=k {
        let c = &inv * binomial_q(k as u64 + 1, i as u64) * &b[k + 1 - i];
        rhs.add_scaled(&-c.clone(), &(&x() * &y().pow(i))).expect("same universe");
        rhs.add_scaled(&c, &(&y().pow(i) * &x())).expect("same universe");
    }
    rhs
}

/// `(P_k)` in `U(L2)`:
/// `y x y^k = k/(k+1) x y^{k+1} + 1/(k+1) y^{k+1} x
///   - 1/(k+1) sum C(k+1,i) B_{k+1-i} x y^i + 1/(k+1) sum C(k+1,i) B_{k+1-i} y^i x`.
/// The report records whether the variant with `x^{k+1} x` holds as well.
pub fn verify_pk(k: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let lhs = &(&y() * &x()) * &y().pow(k);
    let mut report = compare(
        &alg,
        IdentityId::Pk,
        alloc::vec![("k", k)],
        &lhs,
        &pk_rhs(k, &(&y().pow(k + 1) * &x())),
    )?;
    let literal = alg.normal_form(&pk_rhs(k, &x().pow(k + 2)))?;
    report.literal_holds = Some(literal == report.lhs);
    Ok(report)
}

/// `(P_k)` with `x^{k+1} x` in place of `y^{k+1} x`.
pub fn verify_pk_literal(k: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let lhs = &(&y() * &x()) * &y().pow(k);
    compare(
        &alg,
        IdentityId::PkLiteral,
        alloc::vec![("k", k)],
        &lhs,
        &pk_rhs(k, &x().pow(k + 2)),
    )
}

/// `(Q_k)` in `U(L2)`:
/// `y^k x y = 1/(k+1) x y^{k+1} + k/(k+1) y^{k+1} x
///   + 1/(k+1) sum (-1)^{k+1-i} C(k+1,i) B_{k+1-i} x y^i
///   - 1/(k+1) sum (-1)^{k+1-i} C(k+1,i) B_{k+1-i} y^i x`.
pub fn verify_qk(k: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let alg = Algebra::l2_x_first();
    let b = bernoulli_table(k + 1);
    let inv = Rational::one() / q(k + 1);
    let lhs = &(&y().pow(k) * &x()) * &y();
    let mut rhs = (&x() * &y().pow(k + 1)).scale(&inv);
    rhs.add_scaled(&(q(k) * &inv), &(&y().pow(k + 1) * &x()))?;
    for i in 1..=k {
        let c = &inv
            * sign((k + 1 - i) as u64)
            * binomial_q(k as u64 + 1, i as u64)
            * &b[k + 1 - i];
        rhs.add_scaled(&c, &(&x() * &y().pow(i)))?;
        rhs.add_scaled(&-c, &(&y().pow(i) * &x()))?;
    }
    compare(&alg, IdentityId::Qk, alloc::vec![("k", k)], &lhs, &rhs)
}

fn dplus() -> (Algebra, NcPolynomial, NcPolynomial) {
    let alg = Algebra::from_preset(&Preset::TypeDPlus).expect("type (d)-(+) preset is valid");
    let e = alg.generator(0);
    let g = alg.generator(2);
    (alg, e, g)
}

/// Type (d)-(+) with generators `e, g`:
/// `g e g^k = k/(k+1) e g^{k+1} + 1/(k+1) g^{k+1} e - e g^k
///   + 1/(k+1) sum_{i=0}^{k} C(k+1,i) g^i e`.
pub fn verify_pk_dplus(k: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let (alg, e, g) = dplus();
    let inv = Rational::one() / q(k + 1);
    let lhs = &(&g * &e) * &g.pow(k);
    let mut rhs = (&e * &g.pow(k + 1)).scale(&(q(k) * &inv));
    rhs.add_scaled(&inv, &(&g.pow(k + 1) * &e))?;
    rhs.add_scaled(&-Rational::one(), &(&e * &g.pow(k)))?;
    for i in 0..=k {
        rhs.add_scaled(&(&inv * binomial_q(k as u64 + 1, i as u64)), &(&g.pow(i) * &e))?;
    }
    compare(&alg, IdentityId::PkDplus, alloc::vec![("k", k)], &lhs, &rhs)
}

/// Type (d)-(+) with generators `e, g`:
/// `g^k e g = 1/(k+1) e g^{k+1} + k/(k+1) g^{k+1} e
///   + 1/(k+1) sum_{i=0}^{k} (-1)^{k+1-i} C(k+1,i) e g^i + g^k e`.
pub fn verify_qk_dplus(k: usize) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let (alg, e, g) = dplus();
    let inv = Rational::one() / q(k + 1);
    let lhs = &(&g.pow(k) * &e) * &g;
    let mut rhs = (&e * &g.pow(k + 1)).scale(&inv);
    rhs.add_scaled(&(q(k) * &inv), &(&g.pow(k + 1) * &e))?;
    for i in 0..=k {
        let c = &inv * sign((k + 1 - i) as u64) * binomial_q(k as u64 + 1, i as u64);
        rhs.add_scaled(&c, &(&e * &g.pow(i)))?;
    }
    rhs.add_scaled(&Rational::one(), &(&g.pow(k) * &e))?;
    compare(&alg, IdentityId::QkDplus, alloc::vec![("k", k)], &lhs, &rhs)
}

/// `x y^k = sum C(k,i) y^i x` checked in the `y`-first order.
pub fn verify_prop_ii(k: usize) -> Result<VerificationReport, AlgebraError> {
    let alg = Algebra::l2_y_first();
    compare(
        &alg,
        IdentityId::PropIi,
        alloc::vec![("k", k)],
        &(&x() * &y().pow(k)),
        &closed_xy_k(k),
    )
}

/// `y^k x = sum (-1)^{k-i} C(k,i) x y^i` checked in the `x`-first order.
pub fn verify_prop_iii(k: usize) -> Result<VerificationReport, AlgebraError> {
    let alg = Algebra::l2_x_first();
    compare(
        &alg,
        IdentityId::PropIii,
        alloc::vec![("k", k)],
        &(&y().pow(k) * &x()),
        &closed_yk_x(k),
    )
}

/// Coordinates of an element of
/// `U_k = sum_{0<=m<=k} (K x y^m + K y^m x + K y^m)`, split as
/// `sum a_p x y^p + sum b_q y^q x + sum c_r y^r + d x` with `1 <= p, q <= k`
/// and `0 <= r <= k`. The two copies of `x` at `m = 0` are merged into `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UkCoefficients {
    pub k: usize,
    pub a: BTreeMap<usize, Rational>,
    pub b: BTreeMap<usize, Rational>,
    pub c: BTreeMap<usize, Rational>,
    pub d: Rational,
}

impl UkCoefficients {
    pub fn is_zero(&self) -> bool {
        self.a.is_empty() && self.b.is_empty() && self.c.is_empty() && self.d.is_zero()
    }

    /// `sum a_p x y^p + sum b_q y^q x + sum c_r y^r + d x`, unreduced.
    pub fn reconstruct(&self, xg: &NcPolynomial, yg: &NcPolynomial) -> NcPolynomial {
        let mut u = xg.scale(&self.d);
        for (&p, a) in &self.a {
            u = &u + &(xg * &yg.pow(p)).scale(a);
        }
        for (&q, b) in &self.b {
            u = &u + &(&yg.pow(q) * xg).scale(b);
        }
        for (&r, c) in &self.c {
            u = &u + &yg.pow(r).scale(c);
        }
        u
    }
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    D,
    A(usize),
    B(usize),
    C(usize),
}

fn uk_spanning(
    alg: &Algebra,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<Vec<(Slot, NcPolynomial)>, AlgebraError> {
    let mut powers = Vec::with_capacity(k + 1);
    powers.push(NcPolynomial::one(alg.dim()));
    for m in 1..=k {
        powers.push(alg.mul(&powers[m - 1], yg)?);
    }
    let xn = alg.normal_form(xg)?;
    let mut out = alloc::vec![(Slot::D, xn.clone())];
    for (p, yp) in powers.iter().enumerate().skip(1) {
        out.push((Slot::A(p), alg.mul(&xn, yp)?));
    }
    for (q, yq) in powers.iter().enumerate().skip(1) {
        out.push((Slot::B(q), alg.mul(yq, &xn)?));
    }
    for (r, yr) in powers.into_iter().enumerate() {
        out.push((Slot::C(r), yr));
    }
    Ok(out)
}

// coordinates of the part of `p` inside U_k, and what is left over
fn uk_solve(
    alg: &Algebra,
    p: &NcPolynomial,
    k: usize,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
) -> Result<(UkCoefficients, NcPolynomial), AlgebraError> {
    let spanning = uk_spanning(alg, xg, yg, k)?;
    let mut echelon = Echelon::new();
    for (_, v) in &spanning {
        echelon.push(poly_vector(v));
    }
    let target = alg.normal_form(p)?;
    let solution = echelon.solve(&poly_vector(&target));
    let mut coeffs = UkCoefficients {
        k,
        a: BTreeMap::new(),
        b: BTreeMap::new(),
        c: BTreeMap::new(),
        d: Rational::zero(),
    };
    for (i, c) in solution.coefficients {
        match spanning[i].0 {
            Slot::D => coeffs.d = c,
            Slot::A(p) => {
                coeffs.a.insert(p, c);
            }
            Slot::B(q) => {
                coeffs.b.insert(q, c);
            }
            Slot::C(r) => {
                coeffs.c.insert(r, c);
            }
        }
    }
    Ok((coeffs, vector_poly(alg.dim(), &solution.residual)))
}

/// Express `p` in `U_k` built from the designated elements `xg`, `yg`.
/// When the spanning set is dependent the earlier slots (in the order
/// `d`, `a_1..a_k`, `b_1..b_k`, `c_0..c_k`) are preferred and the rest are 0.
pub fn uk_membership(
    alg: &Algebra,
    p: &NcPolynomial,
    k: usize,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
) -> Result<UkCoefficients, AlgebraError> {
    let (coeffs, residual) = uk_solve(alg, p, k, xg, yg)?;
    if residual.is_zero() {
        Ok(coeffs)
    } else {
        Err(AlgebraError::NotInSpan { residual })
    }
}

/// Which of the two general congruences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Congruence {
    /// `y x y^k == k/(k+1) x y^{k+1} + 1/(k+1) y^{k+1} x (mod U_k)`.
    A,
    /// `y^k x y == 1/(k+1) x y^{k+1} + k/(k+1) y^{k+1} x (mod U_k)`.
    B,
}

fn congruence_sides(
    which: Congruence,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> (NcPolynomial, NcPolynomial) {
    let inv = Rational::one() / q(k + 1);
    let big = q(k) * &inv;
    let xy = xg * &yg.pow(k + 1);
    let yx = &yg.pow(k + 1) * xg;
    match which {
        Congruence::A => (
            &(yg * xg) * &yg.pow(k),
            &xy.scale(&big) + &yx.scale(&inv),
        ),
        Congruence::B => (
            &(&yg.pow(k) * xg) * yg,
            &xy.scale(&inv) + &yx.scale(&big),
        ),
    }
}

/// The remainder `u` of `(A_k)` or `(B_k)`, i.e. the left side minus the two
/// leading terms, expressed in `U_k`.
pub fn remainder(
    alg: &Algebra,
    which: Congruence,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<UkCoefficients, AlgebraError> {
    check_k(k)?;
    let (lhs, lead) = congruence_sides(which, xg, yg, k);
    let u = lhs.try_sub(&lead)?;
    let (coeffs, residual) = uk_solve(alg, &u, k, xg, yg)?;
    if residual.is_zero() {
        Ok(coeffs)
    } else {
        Err(AlgebraError::CongruenceViolated { k, residual })
    }
}

pub fn remainder_a(
    alg: &Algebra,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<UkCoefficients, AlgebraError> {
    remainder(alg, Congruence::A, xg, yg, k)
}

pub fn remainder_b(
    alg: &Algebra,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<UkCoefficients, AlgebraError> {
    remainder(alg, Congruence::B, xg, yg, k)
}

/// `(A_k)`/`(B_k)` as a report: the right side is the leading terms plus the
/// best `U_k` approximation of the remainder, so the residual is whatever
/// falls outside `U_k`.
pub fn verify_congruence(
    alg: &Algebra,
    which: Congruence,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<VerificationReport, AlgebraError> {
    check_k(k)?;
    let (lhs, lead) = congruence_sides(which, xg, yg, k);
    let u = lhs.try_sub(&lead)?;
    let (coeffs, _) = uk_solve(alg, &u, k, xg, yg)?;
    let rhs = &lead + &coeffs.reconstruct(xg, yg);
    let id = match which {
        Congruence::A => IdentityId::Ak,
        Congruence::B => IdentityId::Bk,
    };
    compare(alg, id, alloc::vec![("k", k)], &lhs, &rhs)
}

/// `(C_k)`: `y U_k` and `U_k y` lie in `U_{k+1}`. Returns the first element
/// that escapes, as a residual, or zero.
pub fn ck_residual(
    alg: &Algebra,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<NcPolynomial, AlgebraError> {
    for (_, s) in uk_spanning(alg, xg, yg, k)? {
        for product in [yg * &s, &s * yg] {
            let (_, residual) = uk_solve(alg, &product, k + 1, xg, yg)?;
            if !residual.is_zero() {
                return Ok(residual);
            }
        }
    }
    Ok(NcPolynomial::zero(alg.dim()))
}

pub fn verify_ck(
    alg: &Algebra,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<bool, AlgebraError> {
    Ok(ck_residual(alg, xg, yg, k)?.is_zero())
}

/// `(C_k)` as a report; `lhs` is the escaping residual (zero on success).
pub fn verify_ck_report(
    alg: &Algebra,
    xg: &NcPolynomial,
    yg: &NcPolynomial,
    k: usize,
) -> Result<VerificationReport, AlgebraError> {
    let residual = ck_residual(alg, xg, yg, k)?;
    let zero = NcPolynomial::zero(alg.dim());
    compare(alg, IdentityId::Ck, alloc::vec![("k", k)], &residual, &zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    const NAMES: [&str; 2] = ["x", "y"];

    #[test]
    fn w_small_cases() {
        let xf = Algebra::l2_x_first();
        let yf = Algebra::l2_y_first();
        assert_eq!(xf.normal_form(&wv(1, 0)).unwrap(), x());
        assert_eq!(xf.normal_form(&wv(1, 2)).unwrap(), x().pow(3));
        assert_eq!(yf.normal_form(&wv(2, 0)).unwrap().render(&NAMES), "x + 2*y*x");
        assert_eq!(xf.normal_form(&wv(2, 0)).unwrap().render(&NAMES), "-x + 2*x*y");
        assert!(w(0, 3).is_err());
        // literal, unreduced product
        assert_eq!(wv(1, 0), &(&x() * &y()) - &(&y() * &x()));
    }

    #[test]
    fn br1_small() {
        let r = verify_br1(1, 0).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, x().pow(2));
        assert_eq!(r.literal_holds, Some(true));

        let r = verify_br1(2, 0).unwrap();
        assert!(r.equal);
        assert_eq!(r.literal_holds, Some(false));
        let lit = verify_br1_literal(2, 0).unwrap();
        assert!(!lit.equal);
        assert!(!lit.residual.is_zero());
        assert!(Algebra::l2_x_first().is_normal(&lit.residual));

        assert!(verify_br1(3, 1).unwrap().residual.is_zero());
    }

    #[test]
    fn br2_small() {
        let r = verify_br2(1, 0).unwrap();
        assert!(r.equal);
        // y w_1 = y x = x y - x
        assert_eq!(r.lhs, &(&x() * &y()) - &x());
        let yf = Algebra::l2_y_first();
        let rhs = &wv(2, 0).scale(&rat(1, 2)) - &wv(1, 0).scale(&rat(1, 2));
        assert_eq!(yf.normal_form(&rhs).unwrap(), &y() * &x());
        assert!(verify_br2(2, 0).unwrap().equal);
        assert!(verify_br2(10, 3).unwrap().equal);
    }

    #[test]
    fn corollary_variants() {
        for k in 1..=10 {
            let a = verify_sbr1(k).unwrap();
            let b = verify_br2(k, 0).unwrap();
            assert_eq!((&a.lhs, &a.rhs, &a.residual, a.equal), (&b.lhs, &b.rhs, &b.residual, b.equal));
        }
        let r = verify_sbr2(1).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, &x() * &y());
        assert!(verify_sbr2(12).unwrap().equal);
    }

    #[test]
    fn pk_qk_small() {
        let p1 = verify_pk(1).unwrap();
        assert!(p1.equal);
        assert_eq!(p1.lhs, &(&x() * &y().pow(2)) - &(&x() * &y()));
        assert_eq!(p1.literal_holds, Some(false));
        assert!(!verify_pk_literal(1).unwrap().equal);
        assert!(verify_pk(2).unwrap().equal);
        assert!(verify_qk(1).unwrap().equal);
        assert!(verify_qk(2).unwrap().equal);
    }

    #[test]
    fn dplus_formulas() {
        for k in [1, 2, 5] {
            assert!(verify_pk_dplus(k).unwrap().equal, "P_{k}");
            assert!(verify_qk_dplus(k).unwrap().equal, "Q_{k}");
        }
    }

    #[test]
    fn uk_membership_basics() {
        let alg = Algebra::l2_x_first();
        let c = uk_membership(&alg, &x(), 0, &x(), &y()).unwrap();
        assert_eq!(c.d, int(1));
        assert!(c.a.is_empty() && c.b.is_empty() && c.c.is_empty());
        let err = uk_membership(&alg, &y().pow(2), 1, &x(), &y()).unwrap_err();
        assert!(matches!(err, AlgebraError::NotInSpan { .. }));
    }

    #[test]
    fn uk_reconstruction_round_trip() {
        let alg = Algebra::from_preset(&Preset::Sl2).unwrap();
        let (e, f) = (alg.generator(0), alg.generator(1));
        for k in 1..=4 {
            let u = remainder_a(&alg, &e, &f, k).unwrap();
            let (lhs, lead) = congruence_sides(Congruence::A, &e, &f, k);
            let expected = alg.normal_form(&(&lhs - &lead)).unwrap();
            assert_eq!(alg.normal_form(&u.reconstruct(&e, &f)).unwrap(), expected);
        }
    }

    #[test]
    fn heisenberg_remainders_vanish() {
        let alg = Algebra::from_preset(&Preset::Heisenberg).unwrap();
        let (e, f) = (alg.generator(0), alg.generator(1));
        for k in 1..=10 {
            assert!(remainder_a(&alg, &e, &f, k).unwrap().is_zero(), "A_{k}");
            assert!(remainder_b(&alg, &e, &f, k).unwrap().is_zero(), "B_{k}");
        }
    }

    #[test]
    fn sl2_remainder_nonzero() {
        let alg = Algebra::from_preset(&Preset::Sl2).unwrap();
        let (e, f) = (alg.generator(0), alg.generator(1));
        assert!(!remainder_a(&alg, &e, &f, 1).unwrap().is_zero());
        assert!(!remainder_b(&alg, &e, &f, 1).unwrap().is_zero());
    }

    #[test]
    fn dplus_remainder_matches_extra_terms() {
        let alg = Algebra::from_preset(&Preset::TypeDPlus).unwrap();
        let (e, g) = (alg.generator(0), alg.generator(2));
        for k in 1..=6 {
            let u = remainder_a(&alg, &e, &g, k).unwrap();
            let inv = Rational::one() / q(k + 1);
            let mut extra = -(&e * &g.pow(k));
            for i in 0..=k {
                extra.add_scaled(&(&inv * binomial_q(k as u64 + 1, i as u64)), &(&g.pow(i) * &e)).unwrap();
            }
            assert_eq!(
                alg.normal_form(&u.reconstruct(&e, &g)).unwrap(),
                alg.normal_form(&extra).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn ck_small() {
        let l2 = Algebra::l2_x_first();
        assert!(verify_ck(&l2, &x(), &y(), 0).unwrap());
        let c = Algebra::from_preset(&Preset::TypeC).unwrap();
        assert!(verify_ck(&c, &c.generator(0), &c.generator(1), 0).unwrap());
        let h = Algebra::from_preset(&Preset::Heisenberg).unwrap();
        assert!(verify_ck(&h, &h.generator(0), &h.generator(1), 2).unwrap());
    }

    #[test]
    fn identity_ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.as_str()), Some(id));
        }
        assert_eq!(IdentityId::parse("nope"), None);
    }
}
