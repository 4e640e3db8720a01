//! Exact linear algebra over ℚ. Elimination stays fraction-free.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Clears denominators of a rational row and divides out the content.
fn primitive_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    normalize(&mut ints);
    ints
}

fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// Integer reduced row echelon form: returns the surviving rows and their pivot columns.
/// Each pivot column is zero in every other row.
fn integer_rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| primitive_integer_row(r))
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let a = pivot_row[col].clone();
            let b = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            normalize(row);
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

/// Basis of `{x : A x = 0}` for the `rows × ncols` matrix `A`, one vector per free column.
/// Each basis vector has entry 1 at its free column and 0 at the other free columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (m, pivots) = integer_rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -Rational::new(row[free].clone(), row[p].clone());
            }
        }
        out.push(v);
    }
    out
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    integer_rref(rows, ncols).1.len()
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Sparse vectors kept in echelon form; `insert` reports whether the span grew.
#[derive(Default, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    /// pivot key → row whose smallest key is the pivot, normalized to pivot coefficient 1
    rows: BTreeMap<K, BTreeMap<K, Rational>>,
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after reduction against the current rows.
    pub fn reduce(&self, v: &BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
        let mut v = v.clone();
        v.retain(|_, c| !c.is_zero());
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v
                    .range((
                        std::ops::Bound::Excluded(c.clone()),
                        std::ops::Bound::Unbounded,
                    ))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                let factor = v[&key].clone();
                for (k, c) in row {
                    let e = v.entry(k.clone()).or_insert_with(Rational::zero);
                    *e -= &factor * c;
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            }
            cursor = Some(key);
        }
        v
    }

    pub fn insert(&mut self, v: &BTreeMap<K, Rational>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let normalized = r.into_iter().map(|(k, c)| (k, c / &lead)).collect();
        self.rows.insert(pivot, normalized);
        true
    }

    pub fn contains(&self, v: &BTreeMap<K, Rational>) -> bool {
        self.reduce(v).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    #[test]
    fn nullspace_of_rank_one_row() {
        let rows = vec![vec![int(1), int(-1), int(-1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Rational = v.iter().zip(&rows[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn nullspace_with_fractions() {
        let rows = vec![
            vec![frac(1, 2), int(1), int(0)],
            vec![int(0), frac(1, 3), int(-1)],
        ];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns, vec![vec![int(-6), int(3), int(1)]]);
        assert_eq!(rank(&rows, 3), 2);
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]),
            BigInt::zero()
        );
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut e = SparseEchelon::new();
        let v = |a: i64, b: i64| BTreeMap::from([(0u32, int(a)), (1u32, int(b))]);
        assert!(e.insert(&v(1, 2)));
        assert!(!e.insert(&v(2, 4)));
        assert!(e.insert(&v(0, 1)));
        assert!(e.contains(&v(5, 7)));
        assert_eq!(e.rank(), 2);
    }
}
