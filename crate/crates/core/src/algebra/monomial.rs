//! Canonical monomials of the free graded-commutative algebra and their Koszul-signed product.

use smallvec::SmallVec;

use super::generator::Generator;
use crate::error::{Error, Result};

/// Sorted `(generator, exponent)` pairs; odd generators carry exponent 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    factors: SmallVec<[(Generator, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut factors = SmallVec::new();
        factors.push((g, 1));
        Monomial { factors }
    }

    pub fn power(g: Generator, e: u32) -> Option<Self> {
        if e == 0 {
            return Some(Monomial::one());
        }
        if g.is_odd() && e > 1 {
            return None;
        }
        let mut factors = SmallVec::new();
        factors.push((g, e));
        Some(Monomial { factors })
    }

    /// Canonicalizes an ordered product `g_1 g_2 … g_n`. Returns the Koszul sign (true for
    /// negative) and the canonical monomial, or `None` if an odd generator repeats.
    pub fn from_product(gens: &[Generator]) -> Option<(bool, Monomial)> {
        let mut acc = Monomial::one();
        let mut negative = false;
        for &g in gens {
            let (neg, m) = monomial_product(&acc, &Monomial::generator(g)).ok()??;
            negative ^= neg;
            acc = m;
        }
        Some((negative, acc))
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.factors
            .iter()
            .map(|(g, e)| g.degree() * *e as i32)
            .sum()
    }

    pub fn is_odd(&self) -> bool {
        self.degree().rem_euclid(2) == 1
    }

    /// Number of factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent_of(&self, g: &Generator) -> u32 {
        self.factors
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.factors.iter().map(|(g, _)| g)
    }

    /// Splits at factor position `pos`: `(prefix, g, rest)` where `rest` keeps `g^{e-1}` and
    /// the later factors. The product `prefix · g · rest` equals `self` with sign +1, because
    /// `g` is moved past nothing.
    pub(crate) fn split_at(&self, pos: usize) -> (Monomial, Generator, u32, Monomial) {
        let (g, e) = self.factors[pos];
        let prefix = Monomial {
            factors: self.factors[..pos].iter().copied().collect(),
        };
        let mut rest: SmallVec<[(Generator, u32); 4]> = SmallVec::new();
        if e > 1 {
            rest.push((g, e - 1));
        }
        rest.extend(self.factors[pos + 1..].iter().copied());
        (prefix, g, e, Monomial { factors: rest })
    }
}

/// Product of canonical monomials.
///
/// Returns `Ok(None)` when an odd generator would be squared, otherwise the Koszul sign of
/// the interleaving (`true` = negative) and the canonical merge.
pub fn monomial_product(a: &Monomial, b: &Monomial) -> Result<Option<(bool, Monomial)>> {
    if a.is_one() {
        return Ok(Some((false, b.clone())));
    }
    if b.is_one() {
        return Ok(Some((false, a.clone())));
    }
    let af = &a.factors;
    let bf = &b.factors;
    // odd_after[i] = number of odd generators among af[i..]
    let mut odd_after = vec![0u32; af.len() + 1];
    for i in (0..af.len()).rev() {
        odd_after[i] = odd_after[i + 1] + u32::from(af[i].0.is_odd());
    }
    let mut out: SmallVec<[(Generator, u32); 4]> = SmallVec::with_capacity(af.len() + bf.len());
    let mut negative = false;
    let (mut i, mut j) = (0, 0);
    while i < af.len() || j < bf.len() {
        if j == bf.len() {
            out.push(af[i]);
            i += 1;
            continue;
        }
        if i == af.len() {
            out.push(bf[j]);
            j += 1;
            continue;
        }
        let (ga, ea) = af[i];
        let (gb, eb) = bf[j];
        if ga.conflicts_with(&gb) {
            return Err(Error::UniverseMismatch(format!(
                "generator {ga:?} declared with two different degrees"
            )));
        }
        match ga.cmp(&gb) {
            std::cmp::Ordering::Less => {
                out.push(af[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                if gb.is_odd() && odd_after[i] % 2 == 1 {
                    negative = !negative;
                }
                out.push(bf[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                if ga.is_odd() {
                    return Ok(None);
                }
                // gb is even: moving it left past af[i+1..] costs nothing.
                out.push((ga, ea + eb));
                i += 1;
                j += 1;
            }
        }
    }
    Ok(Some((negative, Monomial { factors: out })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::SIndices;

    fn g4(s: &[usize]) -> Generator {
        Generator::decorated(0, 4, SIndices::from_indices(s).unwrap())
    }

    #[test]
    fn odd_square_vanishes() {
        let a = Monomial::generator(g4(&[1]));
        assert_eq!(monomial_product(&a, &a).unwrap(), None);
    }

    #[test]
    fn odd_generators_anticommute() {
        let a = Monomial::generator(g4(&[2]));
        let b = Monomial::generator(g4(&[1]));
        let (neg, m) = monomial_product(&a, &b).unwrap().unwrap();
        assert!(neg);
        assert_eq!(m.factors()[0].0, g4(&[1]));
        assert_eq!(m.factors()[1].0, g4(&[2]));
    }

    #[test]
    fn even_generator_squares() {
        let a = Monomial::generator(g4(&[]));
        let (neg, m) = monomial_product(&a, &a).unwrap().unwrap();
        assert!(!neg);
        assert_eq!(m, Monomial::power(g4(&[]), 2).unwrap());
    }

    #[test]
    fn degree_conflict_is_a_universe_mismatch() {
        let a = Monomial::generator(Generator::base(0, 4));
        let b = Monomial::generator(Generator::base(0, 5));
        assert!(matches!(
            monomial_product(&a, &b),
            Err(Error::UniverseMismatch(_))
        ));
    }

    #[test]
    fn from_product_sign() {
        // s3g4 · s1g4 · s2g4 = + s1g4 s2g4 s3g4 (cyclic permutation of three odd factors)
        let (neg, m) = Monomial::from_product(&[g4(&[3]), g4(&[1]), g4(&[2])]).unwrap();
        assert!(!neg);
        assert_eq!(m.length(), 3);
        let (neg, _) = Monomial::from_product(&[g4(&[3]), g4(&[2]), g4(&[1])]).unwrap();
        assert!(neg);
    }
}
