//! Cartan data of type E_k on the Minkowski space `𝔥ₖ = span(h₀ … h_k)`, root systems of the
//! finite cases and the maximal parabolic split at node k.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::weights::WeightVector;

/// Simple roots, coroots and the central vector for rank `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanData {
    k: usize,
}

/// `β(h) = -b₀h₀ + Σ bᵢhᵢ` on integer coordinates.
pub fn pair(beta: &WeightVector, h: &[i64]) -> i64 {
    beta.0
        .iter()
        .zip(h)
        .enumerate()
        .map(|(i, (b, x))| if i == 0 { -b * x } else { b * x })
        .sum()
}

impl CartanData {
    /// Rank-k data without the range check; for k ≤ 2 only the roots `αᵢ`, `i < k`, exist.
    pub(crate) fn any_rank(k: usize) -> Self {
        CartanData { k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Indices `i` for which `αᵢ` is defined: `1..k-1`, plus `k` when `k ≥ 3`.
    pub fn simple_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (1..self.k).collect();
        if self.k >= 3 {
            v.push(self.k);
        }
        v
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.k || (i == self.k && self.k < 3) {
            return Err(Error::IndexOutOfRange {
                index: i,
                k: self.k,
            });
        }
        Ok(())
    }

    /// `αᵢ` in ε-coordinates.
    pub fn simple_root(&self, i: usize) -> Result<WeightVector> {
        self.check_index(i)?;
        let mut v = WeightVector::zero(self.k);
        if i < self.k {
            v.0[i] = 1;
            v.0[i + 1] = -1;
        } else {
            v.0[0] = 1;
            v.0[1..=3].fill(-1);
        }
        Ok(v)
    }

    /// `αᵢ∨` in h-coordinates.
    pub fn simple_coroot(&self, i: usize) -> Result<Vec<i64>> {
        self.check_index(i)?;
        let mut h = vec![0; self.k + 1];
        if i < self.k {
            h[i] = 1;
            h[i + 1] = -1;
        } else {
            h[0] = 1;
            h[1..=3].fill(-1);
        }
        Ok(h)
    }

    /// `K_k = -3h₀ + Σ hᵢ`
    pub fn central_vector(&self) -> Vec<i64> {
        let mut h = vec![1; self.k + 1];
        h[0] = -3;
        h
    }

    /// Minkowski metric entry `(h_a, h_b)`.
    pub fn metric(&self, a: usize, b: usize) -> i64 {
        match (a == b, a) {
            (false, _) => 0,
            (true, 0) => -1,
            (true, _) => 1,
        }
    }
}

/// Cartan data for `k ≥ 3`.
pub fn cartan_data(k: usize) -> Result<CartanData> {
    if k < 3 {
        return Err(Error::RankOutOfRange(
            k as i64,
            "E_k Cartan data needs k >= 3",
        ));
    }
    if k > crate::algebra::MAX_RANK {
        return Err(Error::RankOutOfRange(k as i64, "rank exceeds 64"));
    }
    Ok(CartanData { k })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CartanMatrix {
    pub k: usize,
    /// `entries[j][i] = αᵢ(αⱼ∨)`, nodes ordered `1 … k`.
    pub entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.entries)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.k).all(|i| (0..self.k).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

pub fn cartan_matrix(k: usize) -> Result<CartanMatrix> {
    let c = cartan_data(k)?;
    let entries = (1..=k)
        .map(|j| {
            let coroot = c.simple_coroot(j).expect("valid index");
            (1..=k)
                .map(|i| pair(&c.simple_root(i).expect("valid index"), &coroot))
                .collect()
        })
        .collect();
    Ok(CartanMatrix { k, entries })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootSystem {
    pub k: usize,
    /// Positive roots in the simple-root basis, sorted by height then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
}

/// `mᵀ C m` for a vector in the simple-root basis.
pub fn root_norm(c: &CartanMatrix, m: &[i64]) -> i64 {
    (0..c.k)
        .map(|i| (0..c.k).map(|j| m[i] * c.entries[i][j] * m[j]).sum::<i64>())
        .sum()
}

/// Positive roots of the finite types `3 ≤ k ≤ 8`, by root-string closure from the simple roots.
pub fn positive_roots(k: usize) -> Result<RootSystem> {
    if !(3..=8).contains(&k) {
        return Err(Error::Unsupported(format!(
            "root enumeration needs 3 <= k <= 8, got {k}"
        )));
    }
    let c = cartan_matrix(k)?;
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..k {
        let mut e = vec![0; k];
        e[i] = 1;
        known.insert(e.clone());
        queue.push_back(e);
    }
    // BFS visits roots in order of height, so every α - pαᵢ is already known.
    while let Some(alpha) = queue.pop_front() {
        for i in 0..k {
            let mut p = 0;
            let mut down = alpha.clone();
            loop {
                down[i] -= 1;
                if known.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pairing: i64 = (0..k).map(|j| alpha[j] * c.entries[i][j]).sum();
            let q = p - pairing;
            if q >= 1 {
                let mut up = alpha.clone();
                up[i] += 1;
                if known.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
    }
    let mut positive_roots: Vec<Vec<i64>> = known.into_iter().collect();
    positive_roots.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
    Ok(RootSystem { k, positive_roots })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ParabolicSplit {
    pub k: usize,
    pub removed_node: usize,
    /// Positive roots of the Levi factor (`m_k = 0`).
    pub levi_roots: Vec<Vec<i64>>,
    /// Roots of the nilradical (`m_k > 0`).
    pub nilradical_roots: Vec<Vec<i64>>,
    pub dim_m: usize,
    pub dim_a: usize,
    pub dim_n: usize,
    /// The central line spanned by `K_k`, counted apart from 𝔞.
    pub center: usize,
}

impl ParabolicSplit {
    /// `dim 𝔪 + dim 𝔞 + 2 dim 𝔫`, the dimension of the split real form.
    pub fn total(&self) -> usize {
        self.dim_m + self.dim_a + 2 * self.dim_n
    }
}

pub fn parabolic_split(k: usize) -> Result<ParabolicSplit> {
    let roots = positive_roots(k)?;
    let (nilradical_roots, levi_roots): (Vec<_>, Vec<_>) =
        roots.positive_roots.into_iter().partition(|m| m[k - 1] > 0);
    Ok(ParabolicSplit {
        k,
        removed_node: k,
        dim_m: 2 * levi_roots.len() + (k - 1),
        dim_a: 1,
        dim_n: nilradical_roots.len(),
        levi_roots,
        nilradical_roots,
        center: 1,
    })
}

/// `dim 𝔞` as tabulated for the split real forms; only rank 9 differs from 1.
pub fn split_component_dimension(k: usize) -> usize {
    if k == 9 {
        2
    } else {
        1
    }
}

/// `dim 𝔤ₖ` for `k ≤ 2`: the Cartan space plus one `e`/`f` pair per simple root.
pub fn small_rank_dimension(k: usize) -> Result<usize> {
    if k > 2 {
        return Err(Error::RankOutOfRange(
            k as i64,
            "small-rank algebra needs k <= 2",
        ));
    }
    Ok(k + 1 + 2 * k.saturating_sub(1))
}
