//! The split torus acting on `M(𝓣ᵏS⁴)` through the characters `εᵢ(t) = tᵢ⁻¹`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Element, Rational};
use crate::dgca::{Dgca, DgcaHom};
use crate::error::{Error, Result};
use crate::weights::{weight_of, WeightVector};

/// `(t₀, t₁, …, t_k)`, all nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorusElement(Vec<Rational>);

impl TorusElement {
    pub fn new(components: Vec<Rational>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Structural("torus element needs t0".into()));
        }
        if let Some(i) = components.iter().position(Zero::is_zero) {
            return Err(Error::Structural(format!("torus component t{i} is zero")));
        }
        Ok(TorusElement(components))
    }

    pub fn identity(k: usize) -> Self {
        TorusElement(vec![Rational::one(); k + 1])
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    /// Componentwise product.
    pub fn mul(&self, other: &TorusElement) -> TorusElement {
        TorusElement(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// `exp(ln(base)·h)`: the component `tᵢ` is `base^{-εᵢ(h)}`, so every weight-β generator
    /// is scaled by `base^{β(h)}`.
    pub fn exp_along(h: &[i64], base: i64) -> Result<Self> {
        if base == 0 || h.is_empty() {
            return Err(Error::Structural(
                "exp_along needs a nonzero base and t0".into(),
            ));
        }
        let b = Rational::from_integer(base.into());
        let components = h
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let eps = if i == 0 { -x } else { x };
                b.pow(-(eps as i32))
            })
            .collect();
        TorusElement::new(components)
    }

    /// Value of the character `-β` on `t`: `Π tᵢ^{-bᵢ}`.
    pub fn multiplier(&self, beta: &WeightVector) -> Rational {
        beta.0
            .iter()
            .zip(&self.0)
            .fold(Rational::one(), |acc, (b, t)| acc * t.pow(-(*b as i32)))
    }
}

/// The automorphism scaling each generator of weight β by `Π tᵢ^{-bᵢ}`, so that
/// `g₄ ↦ t₀g₄`, `g₇ ↦ t₀²g₇`, `wᵢ ↦ tᵢwᵢ` and each `sᵢ` contributes `tᵢ⁻¹`.
pub fn torus_automorphism(t: &TorusElement, model: &Arc<Dgca>) -> Result<DgcaHom> {
    if t.rank() != model.k() {
        return Err(Error::Structural(format!(
            "torus element of rank {} on a rank {} model",
            t.rank(),
            model.k()
        )));
    }
    let images = model
        .generators()
        .iter()
        .map(|g| {
            let w = weight_of(g, model.symbols(), model.k()).ok_or_else(|| {
                Error::Unsupported(format!("{} carries no weight", model.name(g)))
            })?;
            Ok((*g, Element::generator(*g).scale(&t.multiplier(&w))))
        })
        .collect::<Result<Vec<_>>>()?;
    DgcaHom::new(model.clone(), model.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::build_action;
    use crate::algebra::rational::int;

    #[test]
    fn scaling_by_t0() {
        let a = build_action(2).unwrap();
        let m = &a.model;
        let mut c = vec![int(1); 3];
        c[0] = int(2);
        let h = torus_automorphism(&TorusElement::new(c).unwrap(), m).unwrap();
        let img = |n: &str| m.format(&h.apply(&m.parse(n).unwrap()));
        assert_eq!(img("g4"), "2 g4");
        assert_eq!(img("g7"), "4 g7");
        assert_eq!(img("s1g4"), "2 s1g4");
        assert_eq!(img("w1"), "w1");
        assert!(h.is_chain_map().passed());
    }

    #[test]
    fn identity_element_gives_identity_hom() {
        let a = build_action(3).unwrap();
        let h = torus_automorphism(&TorusElement::identity(3), &a.model).unwrap();
        assert_eq!(h.images(), DgcaHom::identity(a.model.clone()).images());
    }

    #[test]
    fn exp_along_scales_by_pairing() {
        let a = build_action(3).unwrap();
        let h = [1, 2, 0, -1];
        let t = TorusElement::exp_along(&h, 2).unwrap();
        let hom = torus_automorphism(&t, &a.model).unwrap();
        let diag = a.h_action_int(&h);
        for g in a.model.generators() {
            let c = diag
                .image_or_zero(g)
                .coefficient(&crate::algebra::Monomial::generator(*g));
            let scaled = Element::generator(*g).scale(
                &Rational::from_integer(2.into()).pow(i32::try_from(c.to_integer()).unwrap()),
            );
            assert_eq!(hom.image(g), scaled);
        }
    }

    #[test]
    fn rejects_zero_component() {
        assert!(TorusElement::new(vec![int(1), int(0)]).is_err());
    }
}
