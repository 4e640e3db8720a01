//! E_k weights of model generators, in the ε-basis `(ε₀, ε₁, …, ε_k)` of the Cartan dual.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{Generator, Monomial, Rational, Symbols};

/// Integer coefficients on `ε₀ … ε_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(k: usize) -> Self {
        WeightVector(vec![0; k + 1])
    }

    pub fn epsilon(k: usize, i: usize) -> Self {
        let mut v = WeightVector::zero(k);
        v.0[i] = 1;
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    /// `β(h) = -b₀h₀ + Σ bᵢhᵢ` for `h` given in the `h₀ … h_k` coordinates.
    pub fn pair(&self, h: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(h)
            .enumerate()
            .map(|(i, (b, x))| {
                let t = x * Rational::from_integer((*b).into());
                if i == 0 {
                    -t
                } else {
                    t
                }
            })
            .sum()
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Weight of a generator of a rank-`k` model, or `None` when its base symbol carries none.
pub fn weight_of(g: &Generator, symbols: &Symbols, k: usize) -> Option<WeightVector> {
    let mut v = WeightVector::zero(k);
    match *g {
        Generator::W(i) | Generator::Sw(i) => {
            *v.0.get_mut(i as usize)? = -1;
        }
        Generator::Decorated { symbol, s, .. } => {
            v.0[0] = symbols.get(symbol)?.eps0_weight? as i64;
            for i in s.iter() {
                *v.0.get_mut(i)? += 1;
            }
        }
    }
    Some(v)
}

pub fn monomial_weight(m: &Monomial, symbols: &Symbols, k: usize) -> Option<WeightVector> {
    let mut acc = WeightVector::zero(k);
    for (g, e) in m.factors() {
        let w = weight_of(g, symbols, k)?;
        for (a, b) in acc.0.iter_mut().zip(&w.0) {
            *a += b * *e as i64;
        }
    }
    Some(acc)
}
