//! Algebraic totalization and the hom-set bijection
//! `Hom(Trd̃ₖ(m), n) ≅ Hom(m, Tot(n))` over `S(W)`, with its truncated variant.

pub mod check;
pub mod sample;

pub use check::{check_adjunction, AdjunctionSummary, PairOutcome};

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{monomial_product, Element, Generator, Monomial, Rational, SIndices};
use crate::dgca::{hom0_check, Dgca, DgcaHom, ModelKind};
use crate::error::{Error, Result};

/// `Tot(n) = n ⊗ S(sW)` with `d(swᵢ) = wᵢ`.
#[derive(Clone, Debug)]
pub struct Totalization {
    pub k: usize,
    pub base: Arc<Dgca>,
    pub result: Arc<Dgca>,
}

pub fn totalize(n: &Arc<Dgca>, k: usize) -> Result<Totalization> {
    for i in 1..=k {
        let w = Generator::W(i as u8);
        if !n.contains(&w) {
            return Err(Error::Structural(format!(
                "{} has no generator w{i}",
                n.label()
            )));
        }
        if !n.d_generator(&w).is_zero() {
            return Err(Error::Structural(format!(
                "d(w{i}) is not zero in {}",
                n.label()
            )));
        }
    }
    let generators = n
        .generators()
        .iter()
        .copied()
        .chain((1..=k).map(|i| Generator::Sw(i as u8)));
    let diff = n
        .differential()
        .images()
        .iter()
        .map(|(g, x)| (*g, x.clone()))
        .chain((1..=k).map(|i| {
            (
                Generator::Sw(i as u8),
                Element::generator(Generator::W(i as u8)),
            )
        }));
    let result = Dgca::new(
        format!("Tot_{k} {}", n.label()),
        k,
        ModelKind::Totalization,
        n.symbols().clone(),
        generators,
        diff,
    )?;
    Ok(Totalization {
        k,
        base: n.clone(),
        result: Arc::new(result),
    })
}

/// Sign relating `F(s_I v)` to the coefficient of the sorted product `sw_I` in `f(v)`:
/// `(-1)^{|I||v|}` from the adjunction, times `(-1)^{|I|(|I|-1)/2}` because `f = exp(-Σ swᵢ sᵢ)`
/// produces the sw factors in reverse order.
pub fn adjunction_sign_negative(len: usize, base_degree: i32) -> bool {
    let a = len as i64 * base_degree as i64;
    let b = (len as i64 * (len as i64 - 1)) / 2;
    (a + b).rem_euclid(2) == 1
}

fn sw_product(s: SIndices) -> Monomial {
    let gens: Vec<Generator> = s.iter().map(|i| Generator::Sw(i as u8)).collect();
    Monomial::from_product(&gens)
        .expect("distinct sw factors")
        .1
}

fn check_over_w(big_f: &DgcaHom, k: usize) -> Result<()> {
    for i in 1..=k {
        let w = Generator::W(i as u8);
        if big_f.image(&w) != Element::generator(w) {
            return Err(Error::Structural(format!(
                "hom does not fix w{i}; not over S(W)"
            )));
        }
    }
    Ok(())
}

fn check_trd(trd: &Dgca, m: &Dgca, k: usize) -> Result<()> {
    if !matches!(trd.kind(), ModelKind::Toroidified { .. }) || trd.k() != k {
        return Err(Error::Structural(format!(
            "{} is not a rank {k} toroidification",
            trd.label()
        )));
    }
    if let Some(g) = trd
        .generators()
        .iter()
        .find(|g| matches!(g, Generator::Decorated { .. }) && !m.contains(&g.undecorated()))
    {
        return Err(Error::Structural(format!(
            "{} does not come from a generator of {}",
            trd.name(g),
            m.label()
        )));
    }
    Ok(())
}

pub(crate) fn backward_with(
    m: &Arc<Dgca>,
    big_f: &DgcaHom,
    tot: &Totalization,
    sign: fn(usize, i32) -> bool,
) -> Result<DgcaHom> {
    let k = tot.k;
    check_trd(big_f.source(), m, k)?;
    if **big_f.target() != *tot.base {
        return Err(Error::Structural(
            "hom target is not the totalized model".into(),
        ));
    }
    check_over_w(big_f, k)?;
    let trd = big_f.source();
    let mut images = Vec::new();
    for v in m.generators() {
        let mut fv = Element::zero();
        for g in trd.generators().iter().filter(|g| g.undecorated() == *v) {
            let s = g.s_indices();
            let sw = Element::monomial(sw_product(s), Rational::from_integer(1.into()));
            let mut term = &big_f.image(g) * &sw;
            if sign(s.len(), v.degree()) {
                term = -&term;
            }
            fv += &term;
        }
        images.push((*v, fv));
    }
    DgcaHom::new(m.clone(), tot.result.clone(), images)
}

/// `f(v) = Σ_I ± F(s_I v)·sw_I`, the map `m → Tot(n)` corresponding to `F : Trd̃ₖ(m) → n`.
/// Decorated generators absent from the source of `F` (a truncated model) contribute zero.
pub fn hom_backward(m: &Arc<Dgca>, big_f: &DgcaHom, tot: &Totalization) -> Result<DgcaHom> {
    backward_with(m, big_f, tot, adjunction_sign_negative)
}

/// Splits each monomial of `x` as `±(n-part)·sw_I` and groups the n-parts by `I`.
fn split_by_sw(x: &Element) -> BTreeMap<SIndices, Element> {
    let mut out: BTreeMap<SIndices, Element> = BTreeMap::new();
    for (mono, c) in x.terms() {
        let mut n_part = Vec::new();
        let mut sw = Vec::new();
        for (g, e) in mono.factors() {
            match g {
                Generator::Sw(i) => sw.push(*i as usize),
                _ => n_part.push((*g, *e)),
            }
        }
        let s = SIndices::from_indices(&sw).expect("distinct sw indices");
        let a_gens: Vec<Generator> = n_part
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(*g, *e as usize))
            .collect();
        let (_, a) = Monomial::from_product(&a_gens).expect("canonical factors");
        let (negative, _) = monomial_product(&a, &sw_product(s))
            .expect("same universe")
            .expect("no repeated odd factor");
        out.entry(s)
            .or_default()
            .add_term(a, if negative { -c.clone() } else { c.clone() });
    }
    out
}

/// `F(s_I v) = ±(coefficient of sw_I in f(v))`, `F(wᵢ) = wᵢ`: the inverse of [`hom_backward`].
pub fn hom_forward(f: &DgcaHom, trd: &Arc<Dgca>, tot: &Totalization) -> Result<DgcaHom> {
    let k = tot.k;
    let m = f.source();
    check_trd(trd, m, k)?;
    if **f.target() != *tot.result {
        return Err(Error::Structural(
            "hom target is not the totalization".into(),
        ));
    }
    let mut images: Vec<(Generator, Element)> = (1..=k)
        .map(|i| {
            (
                Generator::W(i as u8),
                Element::generator(Generator::W(i as u8)),
            )
        })
        .collect();
    for v in m.generators() {
        for (s, x) in split_by_sw(&f.image(v)) {
            let g = v.with_s(s).expect("base generators are decorated");
            if !trd.contains(&g) {
                return Err(Error::Structural(format!(
                    "f({}) has an sw term for {}, which is not a generator of {}",
                    m.name(v),
                    trd.name(&g),
                    trd.label()
                )));
            }
            images.push((
                g,
                if adjunction_sign_negative(s.len(), v.degree()) {
                    -&x
                } else {
                    x
                },
            ));
        }
    }
    DgcaHom::new(trd.clone(), tot.base.clone(), images)
}

/// The unit `m → Tot(Trd̃ₖ(m))`, the backward image of the identity.
pub fn unit(m: &Arc<Dgca>, k: usize) -> Result<(Arc<Dgca>, Totalization, DgcaHom)> {
    let trd = Arc::new(crate::dgca::toroidify(m, k, false)?);
    let tot = totalize(&trd, k)?;
    let eta = hom_backward(m, &DgcaHom::identity(trd.clone()), &tot)?;
    Ok((trd, tot, eta))
}

/// True when `F` kills every decorated generator of degree ≤ 0, i.e. factors through the
/// truncated toroidification.
pub fn factors_through_truncation(big_f: &DgcaHom) -> bool {
    big_f
        .source()
        .generators()
        .iter()
        .filter(|g| matches!(g, Generator::Decorated { .. }) && g.degree() <= 0)
        .all(|g| big_f.image(g).is_zero())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CorrespondenceRow {
    pub label: String,
    pub hom0: bool,
    pub factors: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct CorrespondenceReport {
    pub rows: Vec<CorrespondenceRow>,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.hom0 == r.factors)
    }
}

/// Compares `hom0_check(f)` with "F factors through the truncation" on each sample pair
/// `(label, f, F)`.
pub fn truncated_correspondence<'a>(
    samples: impl IntoIterator<Item = (String, &'a DgcaHom, &'a DgcaHom)>,
) -> Result<CorrespondenceReport> {
    let mut rows = Vec::new();
    for (label, f, big_f) in samples {
        rows.push(CorrespondenceRow {
            label,
            hom0: hom0_check(f)?,
            factors: factors_through_truncation(big_f),
        });
    }
    Ok(CorrespondenceReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgca::{d_squared_zero, model_s4, toroidify};

    #[test]
    fn totalization_of_polynomial_ring() {
        let mut symbols = crate::algebra::Symbols::new();
        symbols.declare("x", 3, None).unwrap();
        let n = Arc::new(
            Dgca::new(
                "Q[w1]",
                1,
                ModelKind::Custom,
                symbols,
                [Generator::W(1)],
                [],
            )
            .unwrap(),
        );
        let tot = totalize(&n, 1).unwrap();
        assert_eq!(
            tot.result.d_generator(&Generator::Sw(1)),
            Element::generator(Generator::W(1))
        );
        assert!(d_squared_zero(&tot.result).passed());
        assert!(totalize(&n, 2).is_err());
    }

    #[test]
    fn unit_rank_one() {
        let m = Arc::new(model_s4());
        let (trd, tot, eta) = unit(&m, 1).unwrap();
        assert!(d_squared_zero(&tot.result).passed());
        let g4 = m.parse_generator("g4").unwrap();
        assert_eq!(eta.image(&g4), tot.result.parse("g4 + s1g4*sw1").unwrap());
        assert!(eta.is_chain_map().passed());
        let back = hom_forward(&eta, &trd, &tot).unwrap();
        assert_eq!(back.images(), DgcaHom::identity(trd).images());
    }

    #[test]
    fn unit_is_chain_for_higher_ranks() {
        let m = Arc::new(model_s4());
        for k in 1..=4 {
            let (_, _, eta) = unit(&m, k).unwrap();
            assert!(eta.is_chain_map().passed(), "k={k}");
        }
    }

    #[test]
    fn sorted_sw_order_breaks_the_chain_property() {
        // the plain (-1)^{|I||v|} rule with the sorted sw product
        fn plain(len: usize, deg: i32) -> bool {
            (len as i64 * deg as i64) % 2 != 0
        }
        let m = Arc::new(model_s4());
        let trd = Arc::new(toroidify(&m, 2, false).unwrap());
        let tot = totalize(&trd, 2).unwrap();
        let f = backward_with(&m, &DgcaHom::identity(trd.clone()), &tot, plain).unwrap();
        assert!(!f.is_chain_map().passed());
        let one = Arc::new(toroidify(&m, 1, false).unwrap());
        let tot1 = totalize(&one, 1).unwrap();
        let f1 = backward_with(&m, &DgcaHom::identity(one), &tot1, plain).unwrap();
        assert!(f1.is_chain_map().passed());
    }

    #[test]
    fn inclusion_without_sw_terms_is_not_chain() {
        let m = Arc::new(model_s4());
        let trd = Arc::new(toroidify(&m, 1, false).unwrap());
        let tot = totalize(&trd, 1).unwrap();
        let images: Vec<_> = m
            .generators()
            .iter()
            .map(|g| (*g, Element::generator(*g)))
            .collect();
        let f = DgcaHom::new(m.clone(), tot.result.clone(), images).unwrap();
        let big_f = hom_forward(&f, &trd, &tot).unwrap();
        assert!(big_f.image(&trd.parse_generator("s1g4").unwrap()).is_zero());
        assert!(!f.is_chain_map().passed());
        assert!(!big_f.is_chain_map().passed());
    }
}
