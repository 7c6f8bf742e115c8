#![allow(dead_code)]

use ncring::free::{NcPolynomial, Word};
use ncring::rational::rat;
use ncring::{Algebra, MonomialOrder, Preset};
use proptest::prelude::*;

pub fn poly(ngens: usize, max_degree: usize, max_terms: usize) -> impl Strategy<Value = NcPolynomial> {
    let word = prop::collection::vec(0..ngens as u8, 0..=max_degree);
    let coeff = (-7i64..=7, 1i64..=5).prop_filter("nonzero", |(n, _)| *n != 0);
    prop::collection::vec((word, coeff), 0..=max_terms).prop_map(move |terms| {
        let mut p = NcPolynomial::zero(ngens);
        for (w, (n, d)) in terms {
            p.add_term(Word::new(w), rat(n, d));
        }
        p
    })
}

pub fn presets() -> Vec<Preset> {
    vec![
        Preset::L2,
        Preset::Heisenberg,
        Preset::TypeC,
        Preset::TypeDAlpha(rat(2, 1)),
        Preset::TypeDAlpha(rat(-1, 3)),
        Preset::TypeDPlus,
        Preset::Sl2,
    ]
}

/// Every preset under both the natural and the reversed letter order.
pub fn algebras() -> Vec<Algebra> {
    let mut out = Vec::new();
    for p in presets() {
        let pres = p.build().unwrap();
        let dim = pres.dim();
        out.push(Algebra::new(pres.clone(), MonomialOrder::natural(dim)).unwrap());
        out.push(Algebra::new(pres, MonomialOrder::reversed(dim)).unwrap());
    }
    out
}
