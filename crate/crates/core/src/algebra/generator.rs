//! Model generators: `s_I v` decorations of base symbols, torus classes `w_i` and their
//! transgressions `sw_i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest torus rank representable by the bitmask multi-index.
pub const MAX_RANK: usize = 64;

/// A strictly increasing subset of `{1..k}`, stored as a bitmask (bit `i-1` for index `i`).
///
/// Ordered lexicographically on the ascending index lists, so `{} < {1} < {1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SIndices(u64);

impl SIndices {
    pub const EMPTY: SIndices = SIndices(0);

    pub fn from_bits(bits: u64) -> Self {
        SIndices(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds the set from arbitrary indices; rejects invalid or repeated entries.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i == 0 || i > MAX_RANK {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    k: MAX_RANK,
                });
            }
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                return Err(Error::Structural(format!("repeated s-index {i}")));
            }
            bits |= b;
        }
        Ok(SIndices(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_RANK).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    /// Ascending indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(tz + 1)
            }
        })
    }

    /// Largest index present, or 0.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Left multiplication by `s_i`: `s_i s_I = (-1)^{#{j in I: j < i}} s_{I ∪ {i}}`, or `None`
    /// when `i ∈ I`. The boolean is `true` for a negative sign.
    pub fn insert(self, i: usize) -> Option<(bool, SIndices)> {
        if self.contains(i) {
            return None;
        }
        let b = 1u64 << (i - 1);
        let below = (self.0 & (b - 1)).count_ones();
        Some((below % 2 == 1, SIndices(self.0 | b)))
    }

    pub fn union(self, other: SIndices) -> SIndices {
        SIndices(self.0 | other.0)
    }

    pub fn intersection(self, other: SIndices) -> SIndices {
        SIndices(self.0 & other.0)
    }

    pub fn difference(self, other: SIndices) -> SIndices {
        SIndices(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: SIndices) -> bool {
        self.0 & other.0 == 0
    }

    /// Replaces index `from` by `to`, keeping the rest. Caller guarantees `from ∈ I`, `to ∉ I`.
    pub fn replace(self, from: usize, to: usize) -> SIndices {
        SIndices((self.0 & !(1u64 << (from - 1))) | (1u64 << (to - 1)))
    }
}

impl Ord for SIndices {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let p = diff.trailing_zeros();
        let above = |bits: u64| if p == 63 { 0 } else { bits >> (p + 1) };
        // Both lists agree below index p+1; the one holding p+1 is smaller unless the other
        // list has already ended.
        if self.0 & (1u64 << p) != 0 {
            if above(other.0) == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if above(self.0) == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for SIndices {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A free generator of a model.
///
/// The derived order realizes `w_1 < … < w_k < sw_1 < … < sw_k < base symbols`, base symbols
/// compared by declaration index and then by s-indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    /// Degree-2 torus class `w_i`.
    W(u8),
    /// Degree-1 class `sw_i` with `d(sw_i) = w_i`, used by totalizations.
    Sw(u8),
    /// `s_I v` for the base symbol `symbol` of degree `base_degree`.
    Decorated {
        symbol: u16,
        base_degree: i16,
        s: SIndices,
    },
}

impl Generator {
    pub fn base(symbol: u16, base_degree: i16) -> Self {
        Generator::Decorated {
            symbol,
            base_degree,
            s: SIndices::EMPTY,
        }
    }

    pub fn decorated(symbol: u16, base_degree: i16, s: SIndices) -> Self {
        Generator::Decorated {
            symbol,
            base_degree,
            s,
        }
    }

    pub fn degree(&self) -> i32 {
        match *self {
            Generator::W(_) => 2,
            Generator::Sw(_) => 1,
            Generator::Decorated { base_degree, s, .. } => base_degree as i32 - s.len() as i32,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree().rem_euclid(2) == 1
    }

    pub fn s_indices(&self) -> SIndices {
        match *self {
            Generator::Decorated { s, .. } => s,
            _ => SIndices::EMPTY,
        }
    }

    /// The undecorated generator `v` of `s_I v`.
    pub fn undecorated(&self) -> Generator {
        match *self {
            Generator::Decorated {
                symbol,
                base_degree,
                ..
            } => Generator::base(symbol, base_degree),
            g => g,
        }
    }

    pub fn with_s(&self, s: SIndices) -> Option<Generator> {
        match *self {
            Generator::Decorated {
                symbol,
                base_degree,
                ..
            } => Some(Generator::decorated(symbol, base_degree, s)),
            _ => None,
        }
    }

    /// True when the two generators share a key but disagree on the declared degree.
    pub(crate) fn conflicts_with(&self, other: &Generator) -> bool {
        match (self, other) {
            (
                Generator::Decorated {
                    symbol: a,
                    base_degree: da,
                    s: sa,
                },
                Generator::Decorated {
                    symbol: b,
                    base_degree: db,
                    s: sb,
                },
            ) => a == b && sa == sb && da != db,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ix: &[usize]) -> SIndices {
        SIndices::from_indices(ix).unwrap()
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![
            s(&[2]),
            s(&[1, 3]),
            s(&[]),
            s(&[1]),
            s(&[1, 2]),
            s(&[1, 2, 3]),
            s(&[3]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                s(&[]),
                s(&[1]),
                s(&[1, 2]),
                s(&[1, 2, 3]),
                s(&[1, 3]),
                s(&[2]),
                s(&[3])
            ]
        );
        assert!(s(&[64]) > s(&[63]));
        assert!(s(&[1, 64]) < s(&[2]));
    }

    #[test]
    fn insert_sign_counts_smaller_indices() {
        assert_eq!(s(&[1]).insert(2), Some((true, s(&[1, 2]))));
        assert_eq!(s(&[2]).insert(1), Some((false, s(&[1, 2]))));
        assert_eq!(s(&[1, 3]).insert(2), Some((true, s(&[1, 2, 3]))));
        assert_eq!(s(&[1, 2]).insert(3), Some((false, s(&[1, 2, 3]))));
        assert_eq!(s(&[1]).insert(1), None);
    }

    #[test]
    fn generator_degrees() {
        let g7 = Generator::base(1, 7);
        assert_eq!(g7.degree(), 7);
        assert_eq!(g7.with_s(s(&[1, 2])).unwrap().degree(), 5);
        assert!(Generator::Sw(1).is_odd());
        assert!(!Generator::W(3).is_odd());
        assert!(Generator::W(9) < Generator::Sw(1));
        assert!(Generator::Sw(9) < Generator::base(0, 4));
    }

    #[test]
    fn from_indices_rejects_repeats() {
        assert!(SIndices::from_indices(&[1, 1]).is_err());
        assert!(SIndices::from_indices(&[0]).is_err());
        assert_eq!(s(&[3, 1]).iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
