//! Dimension of the image of 𝔰𝔩(k) inside the derivations of `M(𝓣ᵏS⁴)`.

use std::collections::BTreeMap;

use crate::algebra::{Generator, Monomial, Rational};
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;

use super::ChevalleyAction;

fn flatten(d: &Derivation) -> BTreeMap<(Generator, Monomial), Rational> {
    d.images()
        .iter()
        .flat_map(|(g, x)| x.terms().map(move |(m, c)| ((*g, m.clone()), c.clone())))
        .collect()
}

/// Dimension of the Lie algebra generated by `ρ(eᵢ)`, `ρ(fᵢ)` for `i < k`, as operators on
/// the generator span. The coroots `αᵢ∨` arise as `[eᵢ, fᵢ]`. Equals `k² - 1` exactly when
/// the gravity-line action is faithful.
pub fn gravity_line_rank(a: &ChevalleyAction) -> Result<usize> {
    let k = a.k();
    if k < 2 {
        return Err(Error::RankOutOfRange(
            k as i64,
            "the gravity line needs k >= 2",
        ));
    }
    let mut generators: Vec<Derivation> = Vec::new();
    for i in 1..k {
        generators.push(a.e[&i].clone());
        generators.push(a.f[&i].clone());
        let coroot = a.cartan.simple_coroot(i)?;
        generators.push(a.h_action_int(&coroot));
    }
    let mut echelon = SparseEchelon::new();
    let mut queue = Vec::new();
    for g in &generators {
        if echelon.insert(&flatten(g)) {
            queue.push(g.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for g in &generators {
            let y = Derivation::bracket(g, &x);
            if !y.is_zero() && echelon.insert(&flatten(&y)) {
                queue.push(y);
            }
        }
    }
    Ok(echelon.rank())
}
