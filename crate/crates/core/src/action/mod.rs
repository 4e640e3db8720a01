//! The Chevalley generators of the parabolic subalgebra (and of the full algebra for k ≤ 2)
//! acting on the toroidification model of S⁴ by derivations.

mod gravity;
mod torus;
mod verify;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Element, Generator, Rational, SIndices};
use crate::derivation::Derivation;
use crate::dgca::{model_s4, toroidify, Dgca};
use crate::error::{Error, Result};
use crate::lie::CartanData;
use crate::weights::weight_of;

pub use gravity::gravity_line_rank;
pub use torus::{torus_automorphism, TorusElement};
pub use verify::{verify_action, Check, ALL_CHECKS};

/// Degree-0 derivations `ρ(eᵢ)`, `ρ(fᵢ)` on `M(𝓣ᵏS⁴)`, plus the Cartan action.
#[derive(Clone, Debug)]
pub struct ChevalleyAction {
    pub model: Arc<Dgca>,
    pub cartan: CartanData,
    pub e: BTreeMap<usize, Derivation>,
    pub f: BTreeMap<usize, Derivation>,
}

impl ChevalleyAction {
    pub fn k(&self) -> usize {
        self.cartan.k()
    }

    /// `hAction(h)`: multiplies each weight-β generator by `β(h)`; `h` in `h₀ … h_k`
    /// coordinates.
    pub fn h_action(&self, h: &[Rational]) -> Derivation {
        let m = &self.model;
        Derivation::diagonal(m.generators().iter().map(|g| {
            let w = weight_of(g, m.symbols(), m.k()).expect("weighted model");
            (*g, w.pair(h))
        }))
    }

    /// `hAction` of an integer vector.
    pub fn h_action_int(&self, h: &[i64]) -> Derivation {
        let h: Vec<Rational> = h
            .iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect();
        self.h_action(&h)
    }

    /// `hAction(h_j)` for the basis vector `h_j`.
    pub fn h_basis(&self, j: usize) -> Derivation {
        let mut h = vec![0; self.k() + 1];
        h[j] = 1;
        self.h_action_int(&h)
    }

    /// Corrupts one image of `ρ(eᵢ)`; used by mutation tests.
    pub fn set_e_image(&mut self, i: usize, g: Generator, x: Element) {
        self.e
            .entry(i)
            .or_insert_with(|| Derivation::zero(0))
            .set_image(g, x);
    }

    pub fn set_f_image(&mut self, i: usize, g: Generator, x: Element) {
        self.f
            .entry(i)
            .or_insert_with(|| Derivation::zero(0))
            .set_image(g, x);
    }

    pub fn operator(&self, name: &str) -> Option<Derivation> {
        let (kind, index) = name.split_at(1);
        let i: usize = index.parse().ok()?;
        match kind {
            "e" => self.e.get(&i).cloned(),
            "f" => self.f.get(&i).cloned(),
            "h" if i <= self.k() => Some(self.h_basis(i)),
            _ => None,
        }
    }
}

fn sign_element(negative: bool, g: Generator) -> Element {
    let x = Element::generator(g);
    if negative {
        -&x
    } else {
        x
    }
}

/// `eᵢ`, `i < k`: `s_{i+1} ↦ sᵢ` with a minus sign, `wᵢ ↦ w_{i+1}`.
fn e_lower(i: usize, m: &Dgca) -> Derivation {
    let mut d = Derivation::zero(0);
    for g in m.generators() {
        match *g {
            Generator::W(j) if j as usize == i => {
                d.set_image(*g, Element::generator(Generator::W(i as u8 + 1)));
            }
            Generator::Decorated { s, .. } if s.contains(i + 1) && !s.contains(i) => {
                let target = g.with_s(s.replace(i + 1, i)).expect("decorated");
                d.set_image(*g, sign_element(true, target));
            }
            _ => {}
        }
    }
    d
}

/// `fᵢ`, `i < k`: `sᵢ ↦ s_{i+1}` with a minus sign, `w_{i+1} ↦ wᵢ`.
fn f_lower(i: usize, m: &Dgca) -> Derivation {
    let mut d = Derivation::zero(0);
    for g in m.generators() {
        match *g {
            Generator::W(j) if j as usize == i + 1 => {
                d.set_image(*g, Element::generator(Generator::W(i as u8)));
            }
            Generator::Decorated { s, .. } if s.contains(i) && !s.contains(i + 1) => {
                let target = g.with_s(s.replace(i, i + 1)).expect("decorated");
                d.set_image(*g, sign_element(true, target));
            }
            _ => {}
        }
    }
    d
}

/// `e_k`, `k ≥ 3`. Writes `s_I v = (-1)^{|A||B|} s_B s_A v` with `A = I ∩ {1,2,3}`, commutes
/// `e_k` past `s_B` and applies the base table on `s_A v`.
fn e_top(m: &Dgca, g4_symbol: u16, g7_symbol: u16) -> Derivation {
    let low = SIndices::from_bits(0b111);
    let mut d = Derivation::zero(0);
    for g in m.generators() {
        let Generator::Decorated { symbol, s, .. } = *g else {
            continue;
        };
        let a = s.intersection(low);
        let b = s.difference(low);
        let reorder_negative = (a.len() * b.len()) % 2 == 1;
        if symbol == g4_symbol && b.is_empty() && a.len() == 2 {
            let (l, negative) = match a.bits() {
                0b011 => (3, false),
                0b101 => (2, true),
                0b110 => (1, false),
                _ => unreachable!("two-element subset of {{1,2,3}}"),
            };
            d.set_image(*g, sign_element(negative, Generator::W(l)));
        } else if symbol == g7_symbol && a == low {
            let target = Generator::decorated(g4_symbol, 4, b);
            if m.contains(&target) {
                d.set_image(*g, sign_element(reorder_negative, target));
            }
        }
    }
    d
}

/// The action on the truncated rank-k toroidification of `M(S⁴)`, `0 ≤ k ≤ 64`.
pub fn build_action(k: usize) -> Result<ChevalleyAction> {
    if k > crate::algebra::MAX_RANK {
        return Err(Error::RankOutOfRange(k as i64, "rank exceeds 64"));
    }
    let model = Arc::new(toroidify(&model_s4(), k, true)?);
    let lookup = |name: &str| match model.symbols().lookup(name) {
        Some(Generator::Decorated { symbol, .. }) => Ok(symbol),
        _ => Err(Error::Structural(format!("missing base symbol {name}"))),
    };
    let (g4, g7) = (lookup("g4")?, lookup("g7")?);
    let mut e = BTreeMap::new();
    let mut f = BTreeMap::new();
    for i in 1..k {
        e.insert(i, e_lower(i, &model));
        f.insert(i, f_lower(i, &model));
    }
    if k >= 3 {
        e.insert(k, e_top(&model, g4, g7));
    }
    Ok(ChevalleyAction {
        model,
        cartan: CartanData::any_rank(k),
        e,
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(a: &ChevalleyAction, op: &str, g: &str) -> String {
        let m = &a.model;
        let d = a.operator(op).unwrap();
        m.format(&d.apply(&m.parse(g).unwrap()))
    }

    #[test]
    fn base_table() {
        let a = build_action(3).unwrap();
        assert_eq!(image(&a, "e3", "s1s3g4"), "-w2");
        assert_eq!(image(&a, "e3", "s1s2g4"), "w3");
        assert_eq!(image(&a, "e3", "s2s3g4"), "w1");
        assert_eq!(image(&a, "e3", "s1s2s3g7"), "g4");
        assert_eq!(image(&a, "e1", "w1"), "w2");
        assert_eq!(image(&a, "f1", "w2"), "w1");
        assert_eq!(image(&a, "f1", "s1s2g4"), "0");
        assert_eq!(image(&a, "e1", "s2g4"), "-s1g4");
    }

    #[test]
    fn top_operator_past_high_indices() {
        let a = build_action(5).unwrap();
        assert_eq!(image(&a, "e5", "s1s2s3s4g7"), "-s4g4");
        assert_eq!(image(&a, "e5", "s1s2s3s4s5g7"), "s4s5g4");
        assert_eq!(image(&a, "e5", "s1s2s4g4"), "0");
    }

    #[test]
    fn images_are_linear() {
        let a = build_action(4).unwrap();
        assert!(a.e.values().chain(a.f.values()).all(Derivation::is_linear));
        assert_eq!(a.e.len(), 4);
        assert_eq!(a.f.len(), 3);
        let small = build_action(2).unwrap();
        assert_eq!((small.e.len(), small.f.len()), (1, 1));
        assert!(build_action(1).unwrap().e.is_empty());
    }

    #[test]
    fn h_action_scales_by_weight() {
        let a = build_action(2).unwrap();
        let m = &a.model;
        let h = a.h_action_int(&[1, 2, 3]);
        // weight of s1g7 is -2ε₀ + ε₁, paired with (1, 2, 3) gives 2 + 2
        assert_eq!(m.format(&h.apply(&m.parse("s1g7").unwrap())), "4 s1g7");
        assert_eq!(m.format(&h.apply(&m.parse("w2").unwrap())), "-3 w2");
    }
}
