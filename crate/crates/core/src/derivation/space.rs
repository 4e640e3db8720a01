//! Degree-0 derivations commuting with the differential, as exact nullspaces.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Generator, Monomial, Rational};
use crate::dgca::Dgca;
use crate::error::{Error, Result};
use crate::linalg;
use crate::weights::{monomial_weight, weight_of, WeightVector};

use super::Derivation;

/// Largest generator count accepted in full mode.
pub const FULL_MODE_MAX_GENERATORS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivationMode {
    /// Generator images in the span of generators.
    Linear,
    /// Generator images arbitrary homogeneous elements.
    Full,
}

#[derive(Clone, Debug)]
pub struct DerivationSpaceBasis {
    pub mode: DerivationMode,
    pub degree: i32,
    pub basis: Vec<Derivation>,
}

impl DerivationSpaceBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Every monomial of total degree `degree` in the given positive-degree generators.
pub fn monomials_of_degree(generators: &[Generator], degree: i32) -> Vec<Monomial> {
    fn go(gens: &[Generator], remaining: i32, acc: &mut Vec<Generator>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            let (_, m) = Monomial::from_product(acc).expect("odd generators used once");
            out.push(m);
            return;
        }
        let Some((&g, rest)) = gens.split_first() else {
            return;
        };
        let d = g.degree();
        let max_power = if g.is_odd() { 1 } else { remaining / d };
        for e in 0..=max_power.min(remaining / d) {
            for _ in 0..e {
                acc.push(g);
            }
            go(rest, remaining - e * d, acc, out);
            for _ in 0..e {
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if degree >= 0 {
        go(generators, degree, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Candidate unknown: `g ↦ u` for a generator `g` and a monomial `u` of the same degree.
struct Unknown {
    generator: Generator,
    monomial: Monomial,
}

/// Basis of the degree-0 derivations `D` with `[d, D] = 0`.
///
/// Each unknown `g ↦ u` contributes the column `D(d h) - d(D h)` over all generators `h`.
/// When the model carries weights the system splits by weight shift.
pub fn derivation_basis(m: &Dgca, mode: DerivationMode) -> Result<DerivationSpaceBasis> {
    let gens = m.generators();
    if !m.is_positively_graded() {
        return Err(Error::Unsupported(
            "derivation spaces need a positively graded model".into(),
        ));
    }
    if mode == DerivationMode::Full && gens.len() > FULL_MODE_MAX_GENERATORS {
        return Err(Error::CostGuard(format!(
            "full derivation space of {} has {} generators; the limit is {}",
            m.label(),
            gens.len(),
            FULL_MODE_MAX_GENERATORS
        )));
    }
    let weight = |g: &Generator| weight_of(g, m.symbols(), m.k());
    let weighted = m.has_weights() && gens.iter().all(|g| weight(g).is_some());

    let mut blocks: BTreeMap<Option<WeightVector>, Vec<Unknown>> = BTreeMap::new();
    let mut by_degree: BTreeMap<i32, Vec<Monomial>> = BTreeMap::new();
    for g in gens {
        let targets = match mode {
            DerivationMode::Linear => gens
                .iter()
                .filter(|h| h.degree() == g.degree())
                .map(|h| Monomial::generator(*h))
                .collect(),
            DerivationMode::Full => by_degree
                .entry(g.degree())
                .or_insert_with(|| monomials_of_degree(gens, g.degree()))
                .clone(),
        };
        for u in targets {
            let key = if weighted {
                let wu = monomial_weight(&u, m.symbols(), m.k()).expect("weighted model");
                Some(&wu - &weight(g).expect("weighted model"))
            } else {
                None
            };
            blocks.entry(key).or_default().push(Unknown {
                generator: *g,
                monomial: u,
            });
        }
    }

    let mut basis = Vec::new();
    for unknowns in blocks.values() {
        let columns: Vec<Derivation> = unknowns
            .iter()
            .map(|u| {
                Derivation::from_images(
                    0,
                    [(
                        u.generator,
                        Element::monomial(u.monomial.clone(), Rational::one()),
                    )],
                )
            })
            .collect();
        // residual entries keyed by (h, monomial of the residue of h)
        let mut rows: BTreeMap<(Generator, Monomial), Vec<(usize, Rational)>> = BTreeMap::new();
        for (j, dj) in columns.iter().enumerate() {
            let c = Derivation::bracket(m.differential(), dj);
            for (h, r) in c.images() {
                for (mono, coeff) in r.terms() {
                    rows.entry((*h, mono.clone()))
                        .or_default()
                        .push((j, coeff.clone()));
                }
            }
        }
        let n = columns.len();
        let dense: Vec<Vec<Rational>> = rows
            .values()
            .map(|entries| {
                let mut row = vec![Rational::zero(); n];
                for (j, c) in entries {
                    row[*j] += c;
                }
                row
            })
            .collect();
        for v in linalg::nullspace(&dense, n) {
            let mut d = Derivation::zero(0);
            for (j, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    d = d.add_scaled(&columns[j], c);
                }
            }
            basis.push(d);
        }
    }
    Ok(DerivationSpaceBasis {
        mode,
        degree: 0,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgca::{model_s4, toroidify};

    #[test]
    fn sphere_has_one_dimensional_derivations() {
        let b = derivation_basis(&model_s4(), DerivationMode::Full).unwrap();
        assert_eq!(b.dimension(), 1);
    }

    #[test]
    fn rank_one_and_two_dimensions() {
        let t1 = toroidify(&model_s4(), 1, true).unwrap();
        let t2 = toroidify(&model_s4(), 2, true).unwrap();
        assert_eq!(
            derivation_basis(&t1, DerivationMode::Full)
                .unwrap()
                .dimension(),
            5
        );
        assert_eq!(
            derivation_basis(&t1, DerivationMode::Linear)
                .unwrap()
                .dimension(),
            2
        );
        assert_eq!(
            derivation_basis(&t2, DerivationMode::Linear)
                .unwrap()
                .dimension(),
            5
        );
        assert!(matches!(
            derivation_basis(&t2, DerivationMode::Full),
            Err(Error::CostGuard(_))
        ));
    }

    #[test]
    fn basis_elements_commute_with_d() {
        let t1 = toroidify(&model_s4(), 1, true).unwrap();
        for d in derivation_basis(&t1, DerivationMode::Full).unwrap().basis {
            assert!(t1.commutes_with_differential(&d, "D").passed());
        }
    }

    #[test]
    fn monomial_enumeration() {
        let t1 = toroidify(&model_s4(), 1, true).unwrap();
        // degree 6: s1g7, g4*w1, w1^3
        assert_eq!(monomials_of_degree(t1.generators(), 6).len(), 3);
    }
}
