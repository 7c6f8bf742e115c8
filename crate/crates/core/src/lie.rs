//! Finite-dimensional Lie algebras given by structure constants.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::free::{NcPolynomial, Word};
use crate::rational::{int, Rational};

/// Most generators a presentation may have.
pub const MAX_GENERATORS: usize = 8;

/// Ordered generators with a bracket table. Every bracket is a linear
/// combination of generators and the Jacobi identity holds; both are checked
/// when the presentation is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiePresentation {
    names: Vec<String>,
    // table[i][j] = coordinates of [g_i, g_j]
    table: Vec<Vec<Vec<Rational>>>,
}

/// The named algebras from the three-dimensional classification, plus the
/// two-dimensional non-abelian algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    /// `[x,y] = x`.
    L2,
    /// `[e,f] = g`, `[e,g] = [f,g] = 0`.
    Heisenberg,
    /// `[e,f] = e`, `[e,g] = [f,g] = 0`.
    TypeC,
    /// `[e,f] = 0`, `[e,g] = e`, `[f,g] = alpha f`.
    TypeDAlpha(Rational),
    /// `[e,f] = 0`, `[e,g] = e + f`, `[f,g] = f`.
    TypeDPlus,
    /// `[e,f] = g`, `[g,e] = 2e`, `[g,f] = -2f`.
    Sl2,
}

impl Preset {
    /// Stable name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Preset::L2 => "L2",
            Preset::Heisenberg => "heisenberg",
            Preset::TypeC => "typeC",
            Preset::TypeDAlpha(_) => "typeD_alpha",
            Preset::TypeDPlus => "typeD_plus",
            Preset::Sl2 => "sl2",
        }
    }

    pub fn build(&self) -> Result<LiePresentation, AlgebraError> {
        preset(self)
    }
}

impl LiePresentation {
    /// Build a presentation from brackets `[g_i, g_j]` with `i < j`. Pairs not
    /// listed bracket to zero.
    pub fn new<S: AsRef<str>>(
        names: &[S],
        brackets: &[((usize, usize), NcPolynomial)],
    ) -> Result<Self, AlgebraError> {
        let dim = names.len();
        if dim == 0 || dim > MAX_GENERATORS {
            return Err(AlgebraError::InvalidParameter(
                "a presentation needs between 1 and 8 generators",
            ));
        }
        let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        let mut seen = vec![vec![false; dim]; dim];
        for ((i, j), value) in brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= dim || seen[i][j] {
                return Err(AlgebraError::InvalidBracketPair { left: i, right: j });
            }
            seen[i][j] = true;
            if value.ngens() != dim {
                return Err(AlgebraError::UniverseMismatch {
                    left: dim,
                    right: value.ngens(),
                });
            }
            for (w, c) in value {
                if w.degree() != 1 {
                    return Err(AlgebraError::NonLinearBracket { left: i, right: j });
                }
                let g = w.letters()[0] as usize;
                table[i][j][g] = c.clone();
                table[j][i][g] = -c;
            }
        }
        let pres = Self {
            names: names.iter().map(|n| n.as_ref().to_string()).collect(),
            table,
        };
        pres.check_jacobi()?;
        Ok(pres)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Coordinates of `[g_i, g_j]` in the generator basis.
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i][j]
    }

    /// `[g_i, g_j]` as a degree-one polynomial.
    pub fn bracket(&self, i: usize, j: usize) -> NcPolynomial {
        self.linear_to_poly(&self.table[i][j])
    }

    /// Generator `g_i` as a polynomial in this presentation's universe.
    pub fn generator(&self, i: usize) -> NcPolynomial {
        NcPolynomial::generator(self.dim(), i)
    }

    fn linear_to_poly(&self, coords: &[Rational]) -> NcPolynomial {
        let mut p = NcPolynomial::zero(self.dim());
        for (g, c) in coords.iter().enumerate() {
            p.add_term(Word::new(vec![g as u8]), c.clone());
        }
        p
    }

    // [u, g_k] for u given in coordinates
    fn bracket_linear(&self, u: &[Rational], k: usize) -> Vec<Rational> {
        let dim = self.dim();
        let mut out = vec![Rational::zero(); dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (g, c) in self.table[i][k].iter().enumerate() {
                out[g] += ui * c;
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<(), AlgebraError> {
        let dim = self.dim();
        for a in 0..dim {
            for b in a + 1..dim {
                for c in b + 1..dim {
                    let t1 = self.bracket_linear(&self.table[a][b], c);
                    let t2 = self.bracket_linear(&self.table[b][c], a);
                    let t3 = self.bracket_linear(&self.table[c][a], b);
                    let defect: Vec<Rational> = (0..dim)
                        .map(|g| &t1[g] + &t2[g] + &t3[g])
                        .collect();
                    if defect.iter().any(|d| !d.is_zero()) {
                        return Err(AlgebraError::JacobiViolation {
                            triple: (a, b, c),
                            defect: self.linear_to_poly(&defect),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

fn lin(dim: usize, coords: &[(usize, i64)]) -> NcPolynomial {
    let mut p = NcPolynomial::zero(dim);
    for &(g, c) in coords {
        p.add_term(Word::new(vec![g as u8]), int(c));
    }
    p
}

/// The classification table for `preset`, built through the same checked
/// constructor as any user presentation.
pub fn preset(preset: &Preset) -> Result<LiePresentation, AlgebraError> {
    const EFG: [&str; 3] = ["e", "f", "g"];
    let (e, f, g) = (0, 1, 2);
    match preset {
        Preset::L2 => LiePresentation::new(&["x", "y"], &[((0, 1), lin(2, &[(0, 1)]))]),
        Preset::Heisenberg => LiePresentation::new(&EFG, &[((e, f), lin(3, &[(g, 1)]))]),
        Preset::TypeC => LiePresentation::new(&EFG, &[((e, f), lin(3, &[(e, 1)]))]),
        Preset::TypeDAlpha(alpha) => {
            if alpha.is_zero() {
                return Err(AlgebraError::ZeroAlpha);
            }
            let mut fg = NcPolynomial::zero(3);
            fg.add_term(Word::new(vec![f as u8]), alpha.clone());
            LiePresentation::new(&EFG, &[((e, g), lin(3, &[(e, 1)])), ((f, g), fg)])
        }
        Preset::TypeDPlus => LiePresentation::new(
            &EFG,
            &[
                ((e, g), lin(3, &[(e, 1), (f, 1)])),
                ((f, g), lin(3, &[(f, 1)])),
            ],
        ),
        // [g,e] = 2e and [g,f] = -2f stored as [e,g] = -2e, [f,g] = 2f
        Preset::Sl2 => LiePresentation::new(
            &EFG,
            &[
                ((e, f), lin(3, &[(g, 1)])),
                ((e, g), lin(3, &[(e, -2)])),
                ((f, g), lin(3, &[(f, 2)])),
            ],
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn l2_is_valid() {
        let l2 = preset(&Preset::L2).unwrap();
        assert_eq!(l2.bracket(0, 1), l2.generator(0));
        assert_eq!(l2.bracket(1, 0), -l2.generator(0));
        assert_eq!(l2.names(), ["x", "y"]);
    }

    #[test]
    fn all_presets_satisfy_jacobi() {
        for p in [
            Preset::L2,
            Preset::Heisenberg,
            Preset::TypeC,
            Preset::TypeDAlpha(rat(1, 1)),
            Preset::TypeDAlpha(rat(-3, 7)),
            Preset::TypeDPlus,
            Preset::Sl2,
        ] {
            p.build().unwrap();
        }
    }

    #[test]
    fn broken_table_is_rejected() {
        let err = LiePresentation::new(
            &["e", "f", "g"],
            &[
                ((0, 1), lin(3, &[(2, 1)])),
                ((0, 2), lin(3, &[(0, 1)])),
            ],
        )
        .unwrap_err();
        match err {
            AlgebraError::JacobiViolation { triple, defect } => {
                assert_eq!(triple, (0, 1, 2));
                // [[e,f],g] + [[f,g],e] + [[g,e],f] = 0 + 0 + [-e,f] = -g
                assert_eq!(defect, -lin(3, &[(2, 1)]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn preset_brackets() {
        let sl2 = preset(&Preset::Sl2).unwrap();
        assert_eq!(sl2.bracket(0, 1), sl2.generator(2));
        assert_eq!(sl2.bracket(2, 0), sl2.generator(0).scale(&int(2)));
        assert_eq!(sl2.bracket(2, 1), sl2.generator(1).scale(&int(-2)));
        let dplus = preset(&Preset::TypeDPlus).unwrap();
        assert_eq!(dplus.bracket(0, 2), &dplus.generator(0) + &dplus.generator(1));
        let d1 = preset(&Preset::TypeDAlpha(int(1))).unwrap();
        assert_eq!(d1.bracket(1, 2), d1.generator(1));
        assert_eq!(preset(&Preset::TypeDAlpha(int(0))), Err(AlgebraError::ZeroAlpha));
    }

    #[test]
    fn bad_bracket_entries() {
        let quad = &NcPolynomial::generator(2, 0) * &NcPolynomial::generator(2, 0);
        assert_eq!(
            LiePresentation::new(&["x", "y"], &[((0, 1), quad)]),
            Err(AlgebraError::NonLinearBracket { left: 0, right: 1 })
        );
        assert_eq!(
            LiePresentation::new(&["x", "y"], &[((1, 0), lin(2, &[(0, 1)]))]),
            Err(AlgebraError::InvalidBracketPair { left: 1, right: 0 })
        );
        assert!(LiePresentation::new(&["x", "y"], &[((0, 1), NcPolynomial::one(2))]).is_err());
    }
}
