//! Seeded random homs for property tests of the adjunction.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::action::{torus_automorphism, TorusElement};
use crate::algebra::{Element, Generator, Rational, Symbols};
use crate::derivation::Derivation;
use crate::dgca::{Dgca, DgcaHom, ModelKind};
use crate::error::{Error, Result};
use crate::weights::{weight_of, WeightVector};

/// Nonzero rational with small numerator and denominator.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-4..=4);
        if p != 0 {
            let q: i64 = rng.gen_range(1..=3);
            return Rational::new(p.into(), q.into());
        }
    }
}

/// Iterations allowed before `exp(θ)` is declared non-terminating.
const MAX_EXP_TERMS: usize = 24;

/// `exp(θ)` on generators, or `None` if some series does not terminate.
fn exponential(m: &Arc<Dgca>, theta: &Derivation) -> Option<Vec<(Generator, Element)>> {
    let mut images = Vec::new();
    for g in m.generators() {
        let mut acc = Element::generator(*g);
        let mut term = acc.clone();
        let mut n = 1i64;
        loop {
            term = theta.apply(&term).scale(&Rational::new(1.into(), n.into()));
            if term.is_zero() {
                break;
            }
            acc += &term;
            n += 1;
            if n as usize > MAX_EXP_TERMS {
                return None;
            }
        }
        images.push((*g, acc));
    }
    Some(images)
}

/// A random `S(W)`-linear chain automorphism of a weighted toroidification:
/// `exp([d, η])` for a random degree −1 derivation `η` shifting weights by a fixed nonzero
/// `γ` and killing every `wᵢ`, followed by a random `t₀`-scaling.
pub fn random_chain_automorphism<R: Rng>(m: &Arc<Dgca>, rng: &mut R) -> Result<Option<DgcaHom>> {
    let k = m.k();
    if !m.has_weights() {
        return Err(Error::Unsupported(format!(
            "{} carries no weights",
            m.label()
        )));
    }
    let mut shifts = Vec::new();
    for a in 0..=k {
        shifts.push(WeightVector::epsilon(k, a));
        shifts.push(-&WeightVector::epsilon(k, a));
        for b in 0..=k {
            if a != b {
                shifts.push(&WeightVector::epsilon(k, a) - &WeightVector::epsilon(k, b));
            }
        }
    }
    let gamma = shifts.choose(rng).expect("nonempty").clone();
    let weight = |g: &Generator| weight_of(g, m.symbols(), k).expect("weighted model");
    let mut eta = Derivation::zero(-1);
    for g in m
        .generators()
        .iter()
        .filter(|g| !matches!(g, Generator::W(_)))
    {
        let target = &weight(g) + &gamma;
        let mut x = Element::zero();
        for h in m.generators() {
            if h.degree() == g.degree() - 1 && weight(h) == target && rng.gen_bool(0.8) {
                x.add_term(crate::algebra::Monomial::generator(*h), small_rational(rng));
            }
        }
        eta.set_image(*g, x);
    }
    let theta = Derivation::bracket(m.differential(), &eta);
    let Some(images) = exponential(m, &theta) else {
        return Ok(None);
    };
    let exp = DgcaHom::new(m.clone(), m.clone(), images)?;
    let mut t = vec![Rational::one(); k + 1];
    t[0] = small_rational(rng);
    let scale = torus_automorphism(&TorusElement::new(t)?, m)?;
    Ok(Some(scale.compose(&exp)?))
}

/// A random algebra endomorphism fixing each `wᵢ` and adding random same-degree generators to
/// every other generator. Usually not a chain map.
pub fn random_perturbation<R: Rng>(m: &Arc<Dgca>, rng: &mut R) -> Result<DgcaHom> {
    let mut images = Vec::new();
    for g in m.generators() {
        let mut x = Element::generator(*g);
        if !matches!(g, Generator::W(_)) {
            for h in m.generators() {
                if h.degree() == g.degree() && !matches!(h, Generator::W(_)) && rng.gen_bool(0.3) {
                    x.add_term(crate::algebra::Monomial::generator(*h), small_rational(rng));
                }
            }
        }
        images.push((*g, x));
    }
    DgcaHom::new(m.clone(), m.clone(), images)
}

/// `Λ(x)` with `|x| = 1`, `dx = 0`.
pub fn odd_line() -> Dgca {
    let mut symbols = Symbols::new();
    let x = symbols.declare("x", 1, None).expect("valid symbol");
    Dgca::new("M(S^1)", 0, ModelKind::Base, symbols, [x], []).expect("well formed")
}

/// `m ⊗ Λ(y₁ … y_k) ⊗ S(W)` with `d yᵢ = wᵢ`, `|yᵢ| = 1`: a positively graded target over
/// `S(W)` in which every `wᵢ` is exact.
pub fn koszul_extension(m: &Dgca, k: usize) -> Result<Dgca> {
    let mut symbols = m.symbols().clone();
    let mut generators: Vec<Generator> = m.generators().to_vec();
    let mut diff: Vec<(Generator, Element)> = m
        .differential()
        .images()
        .iter()
        .map(|(g, x)| (*g, x.clone()))
        .collect();
    for i in 1..=k {
        let y = symbols.declare(&format!("y{i}"), 1, None)?;
        generators.push(y);
        generators.push(Generator::W(i as u8));
        diff.push((y, Element::generator(Generator::W(i as u8))));
    }
    Dgca::new(
        format!("{} + Koszul(W_{k})", m.label()),
        k,
        ModelKind::Custom,
        symbols,
        generators,
        diff,
    )
}

/// Random chain map `Trd̃ₖ(Λx) → koszul_extension(Λx, k)`:
/// `x ↦ a·x + Σ cᵢyᵢ`, `sᵢx ↦ cᵢ`, longer decorations ↦ 0. Each `cᵢ` is zero with
/// probability ½, so both truncation outcomes occur.
pub fn random_odd_line_map<R: Rng>(
    trd: &Arc<Dgca>,
    target: &Arc<Dgca>,
    rng: &mut R,
) -> Result<DgcaHom> {
    let k = trd.k();
    let x = target.parse_generator("x")?;
    let mut fx = Element::generator(x).scale(&small_rational(rng));
    let mut images = Vec::new();
    for i in 1..=k {
        let c = if rng.gen_bool(0.5) {
            Rational::zero()
        } else {
            small_rational(rng)
        };
        let y = target.parse_generator(&format!("y{i}"))?;
        fx.add_term(crate::algebra::Monomial::generator(y), c.clone());
        let sx = trd.parse_generator(&format!("s{i}x"))?;
        images.push((sx, Element::one().scale(&c)));
        images.push((
            Generator::W(i as u8),
            Element::generator(Generator::W(i as u8)),
        ));
    }
    images.push((trd.parse_generator("x")?, fx));
    DgcaHom::new(trd.clone(), target.clone(), images)
}
