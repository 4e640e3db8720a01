//! Model constructors: the 4-sphere, free k-fold loops, cyclification and toroidification.

use std::collections::BTreeMap;

use crate::algebra::rational::frac;
use crate::algebra::{Element, Generator, SIndices, WStyle, MAX_RANK};
use crate::derivation::Derivation;
use crate::error::{Error, Result};

use super::{Dgca, ModelKind};

/// Largest rank accepted for untruncated models, which carry `2^k` decorations per symbol.
const MAX_UNTRUNCATED_RANK: usize = 16;

/// `(Λ(g₄, g₇), d g₇ = -½ g₄²)`
pub fn model_s4() -> Dgca {
    let mut symbols = crate::algebra::Symbols::new();
    let g4 = symbols.declare("g4", 4, Some(-1)).expect("valid symbol");
    let g7 = symbols.declare("g7", 7, Some(-2)).expect("valid symbol");
    let dg7 = Element::product_of(frac(-1, 2), &[g4, g4]);
    Dgca::new("M(S^4)", 0, ModelKind::Base, symbols, [g4, g7], [(g7, dg7)])
        .expect("sphere model is well formed")
}

fn require_base(m: &Dgca) -> Result<()> {
    let undecorated = m
        .generators()
        .iter()
        .all(|g| matches!(g, Generator::Decorated { s, .. } if s.is_empty()));
    if m.k() != 0 || !undecorated {
        return Err(Error::Structural(format!(
            "{} is not an undecorated base model with k = 0",
            m.label()
        )));
    }
    Ok(())
}

fn check_rank(k: usize, truncated: bool) -> Result<()> {
    if k > MAX_RANK {
        return Err(Error::RankOutOfRange(k as i64, "torus rank exceeds 64"));
    }
    if !truncated && k > MAX_UNTRUNCATED_RANK {
        return Err(Error::RankOutOfRange(
            k as i64,
            "untruncated models are limited to rank 16",
        ));
    }
    Ok(())
}

/// All subsets of `{1..k}` with at most `max_len` elements, by increasing size.
fn subsets_up_to(k: usize, max_len: usize) -> Vec<SIndices> {
    let mut out = vec![SIndices::EMPTY];
    let mut layer = vec![SIndices::EMPTY];
    for _ in 0..max_len.min(k) {
        let mut next = Vec::new();
        for s in &layer {
            for i in s.max_index() + 1..=k {
                next.push(s.insert(i).expect("fresh index").1);
            }
        }
        out.extend(&next);
        layer = next;
    }
    out
}

/// Every `s_I v` for base generators `v`, dropping non-positive degrees when truncated.
fn decorated_generators(m: &Dgca, k: usize, truncated: bool) -> Vec<Generator> {
    let mut out = Vec::new();
    for v in m.generators() {
        let max_len = if truncated {
            (v.degree() - 1).max(-1)
        } else {
            k as i32
        };
        if max_len < 0 {
            continue;
        }
        for s in subsets_up_to(k, max_len as usize) {
            out.push(v.with_s(s).expect("base generators are decorated"));
        }
    }
    out
}

/// `s_i` on a sorted generator list: `s_i(s_I v) = ±s_{I∪{i}} v` when that generator exists.
fn s_operator(i: usize, generators: &[Generator]) -> Derivation {
    let mut d = Derivation::zero(-1);
    for g in generators {
        let Generator::Decorated { s, .. } = *g else {
            continue;
        };
        if let Some((negative, t)) = s.insert(i) {
            let target = g.with_s(t).expect("decorated");
            if generators.binary_search(&target).is_ok() {
                let x = Element::generator(target);
                d.set_image(*g, if negative { -&x } else { x });
            }
        }
    }
    d
}

/// Extends `d` from base generators to `s_I v` by `d(s_I v) = (-1)^{|I|} s_I(base(v))`, where
/// `base(v)` is the image on the undecorated generator.
fn pull_through(
    generators: &[Generator],
    s_ops: &[Derivation],
    base: impl Fn(&Generator) -> Element,
) -> Vec<(Generator, Element)> {
    let mut by_symbol: BTreeMap<Generator, Vec<Generator>> = BTreeMap::new();
    for g in generators {
        if let Generator::Decorated { .. } = g {
            by_symbol.entry(g.undecorated()).or_default().push(*g);
        }
    }
    let mut out = Vec::new();
    for (v, decorations) in by_symbol {
        // cache[I] = s_I(base(v)), built from s_I = s_{min I} s_{I \ min I}
        let mut cache: BTreeMap<u64, Element> = BTreeMap::new();
        cache.insert(0, base(&v));
        let mut sorted = decorations.clone();
        sorted.sort_by_key(|g| g.s_indices().len());
        for g in sorted {
            let s = g.s_indices();
            if !s.is_empty() {
                let first = s.iter().next().expect("nonempty");
                let rest = s.difference(SIndices::from_indices(&[first]).expect("in range"));
                let inner = &cache[&rest.bits()];
                let value = s_ops[first - 1].apply(inner);
                cache.insert(s.bits(), value);
            }
            let x = &cache[&s.bits()];
            out.push((g, if s.len() % 2 == 1 { -x } else { x.clone() }));
        }
    }
    out
}

/// Minimal model of the free k-fold loop space: positive-degree `s_I v` with `[d, s_i] = 0`.
pub fn free_loop_model(m: &Dgca, k: usize) -> Result<Dgca> {
    require_base(m)?;
    check_rank(k, true)?;
    let mut generators = decorated_generators(m, k, true);
    generators.sort();
    let s_ops: Vec<Derivation> = (1..=k).map(|i| s_operator(i, &generators)).collect();
    let diff = pull_through(&generators, &s_ops, |v| m.d_generator(v));
    Dgca::new(
        format!("L^{k} {}", m.label()),
        k,
        ModelKind::FreeLoop,
        m.symbols().clone(),
        generators,
        diff,
    )
}

/// Minimal model of the cyclic loop space: `d v = dv + w·sv`, `d sv = -s dv`, `d w = 0`.
pub fn cyclification_model(m: &Dgca) -> Result<Dgca> {
    require_base(m)?;
    let mut generators = decorated_generators(m, 1, true);
    generators.push(Generator::W(1));
    generators.sort();
    let s = s_operator(1, &generators);
    let w = Element::generator(Generator::W(1));
    let mut diff = Vec::new();
    for g in m.generators() {
        let mut dv = m.d_generator(g);
        dv += &(&w * &s.image_or_zero(g));
        diff.push((*g, dv));
        let sv = g.with_s(SIndices::from_bits(1)).expect("decorated");
        if generators.binary_search(&sv).is_ok() {
            diff.push((sv, -&s.apply(&m.d_generator(g))));
        }
    }
    let mut symbols = m.symbols().clone();
    symbols.w_style = WStyle::Bare;
    Dgca::new(
        format!("cyc {}", m.label()),
        1,
        ModelKind::Cyclic,
        symbols,
        generators,
        diff,
    )
}

/// Minimal model of the rank-k toroidification, `d v = dv + Σ wᵢ·sᵢv` with `[d, sᵢ] = 0`.
/// The untruncated variant keeps decorated generators of degree ≤ 0.
pub fn toroidify(m: &Dgca, k: usize, truncated: bool) -> Result<Dgca> {
    require_base(m)?;
    check_rank(k, truncated)?;
    let mut generators = decorated_generators(m, k, truncated);
    generators.extend((1..=k).map(|i| Generator::W(i as u8)));
    generators.sort();
    let s_ops: Vec<Derivation> = (1..=k).map(|i| s_operator(i, &generators)).collect();
    let base = |v: &Generator| {
        let mut x = m.d_generator(v);
        for (i, s) in s_ops.iter().enumerate() {
            if let Some(sv) = s.image(v) {
                x += &(&Element::generator(Generator::W(i as u8 + 1)) * sv);
            }
        }
        x
    };
    let diff = pull_through(&generators, &s_ops, base);
    let label = if truncated {
        format!("T^{k} {}", m.label())
    } else {
        format!("T~^{k} {}", m.label())
    };
    Dgca::new(
        label,
        k,
        ModelKind::Toroidified { truncated },
        m.symbols().clone(),
        generators,
        diff,
    )
}

/// The degree −1 derivation `s_i` of a decorated model.
pub fn s_derivation(i: usize, m: &Dgca) -> Result<Derivation> {
    if i == 0 || i > m.k() {
        return Err(Error::IndexOutOfRange { index: i, k: m.k() });
    }
    Ok(s_operator(i, m.generators()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgca::d_squared_zero;

    fn count(k: usize) -> usize {
        toroidify(&model_s4(), k, true).unwrap().generators().len()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(
            (0..=4).map(count).collect::<Vec<_>>(),
            vec![2, 5, 10, 19, 35]
        );
        assert_eq!(count(11), 1729);
    }

    #[test]
    fn sphere_differentials() {
        let m = model_s4();
        assert!(m.d_generator(&m.parse_generator("g4").unwrap()).is_zero());
        assert_eq!(
            m.d_generator(&m.parse_generator("g7").unwrap()),
            m.parse("-1/2 g4^2").unwrap()
        );
        assert!(d_squared_zero(&m).passed());
    }

    #[test]
    fn rank_three_examples() {
        let t = toroidify(&model_s4(), 3, true).unwrap();
        let d = |n: &str| t.d_generator(&t.parse_generator(n).unwrap());
        assert_eq!(d("s1s2g4"), t.parse("s1s2s3g4*w3").unwrap());
        assert_eq!(
            d("s1s2s3g7"),
            t.parse("g4*s1s2s3g4 + s1s2g4*s3g4 - s1s3g4*s2g4 + s2s3g4*s1g4")
                .unwrap()
        );
        assert_eq!(
            d("g7"),
            t.parse("-1/2 g4^2 + w1*s1g7 + w2*s2g7 + w3*s3g7").unwrap()
        );
        assert!(d_squared_zero(&t).passed());
    }

    #[test]
    fn loop_and_cyclic_models() {
        let l = free_loop_model(&model_s4(), 1).unwrap();
        assert_eq!(l.generators().len(), 4);
        assert_eq!(
            l.d_generator(&l.parse_generator("s1g7").unwrap()),
            l.parse("g4*s1g4").unwrap()
        );
        let c = cyclification_model(&model_s4()).unwrap();
        assert_eq!(
            c.d_generator(&c.parse_generator("g4").unwrap()),
            c.parse("w*s1g4").unwrap()
        );
        assert!(c.d_generator(&c.parse_generator("w").unwrap()).is_zero());
        assert!(d_squared_zero(&c).passed());
        assert!(d_squared_zero(&free_loop_model(&model_s4(), 3).unwrap()).passed());
    }

    #[test]
    fn s_operator_examples() {
        let t = toroidify(&model_s4(), 3, true).unwrap();
        let s1 = s_derivation(1, &t).unwrap();
        let s2 = s_derivation(2, &t).unwrap();
        assert_eq!(s1.apply(&t.parse("g4").unwrap()), t.parse("s1g4").unwrap());
        assert!(s1.apply(&t.parse("s1g4").unwrap()).is_zero());
        assert_eq!(
            s2.apply(&t.parse("s1g4*g7").unwrap()),
            t.parse("-s1s2g4*g7 - s1g4*s2g7").unwrap()
        );
        assert!(s_derivation(4, &t).is_err());
        assert!(s_derivation(0, &t).is_err());
        let t4 = toroidify(&model_s4(), 4, true).unwrap();
        let s1 = s_derivation(1, &t4).unwrap();
        // s1s2s3s4g4 has degree 0 and is truncated away
        assert!(s1.apply(&t4.parse("s2s3s4g4").unwrap()).is_zero());
        assert_eq!(
            s1.apply(&t4.parse("s2s3g4").unwrap()),
            t4.parse("s1s2s3g4").unwrap()
        );
    }

    #[test]
    fn corrupted_model_fails_on_g7() {
        let t = toroidify(&model_s4(), 2, true).unwrap();
        let g7 = t.parse_generator("g7").unwrap();
        let bad = t
            .with_differential(g7, &t.d_generator(&g7) + &t.parse("w1*s2g7").unwrap())
            .unwrap();
        let report = d_squared_zero(&bad);
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| f.generator == "g7"));
    }

    #[test]
    fn d_commutes_with_s() {
        for k in 1..=4 {
            let t = toroidify(&model_s4(), k, true).unwrap();
            for i in 1..=k {
                let s = s_derivation(i, &t).unwrap();
                assert!(
                    t.commutes_with_differential(&s, "s").passed(),
                    "k={k} i={i}"
                );
            }
        }
    }

    #[test]
    fn untruncated_keeps_nonpositive_degrees() {
        let t = toroidify(&model_s4(), 5, false).unwrap();
        assert_eq!(t.generators().len(), 2 * 32 + 5);
        assert!(d_squared_zero(&t).passed());
    }
}
