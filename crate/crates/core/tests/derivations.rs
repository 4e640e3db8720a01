use std::collections::BTreeMap;

use ekk_core::action::build_action;
use ekk_core::algebra::{Element, Generator, Monomial, Rational};
use ekk_core::derivation::{derivation_basis, Derivation, DerivationMode};
use ekk_core::dgca::{model_s4, s_derivation, toroidify};
use ekk_core::linalg::SparseEchelon;

fn flatten(d: &Derivation) -> BTreeMap<(Generator, Monomial), Rational> {
    d.images()
        .iter()
        .flat_map(|(g, x)| x.terms().map(move |(m, c)| ((*g, m.clone()), c.clone())))
        .collect()
}

#[test]
fn cartan_action_lies_in_linear_derivations() {
    for k in 0..=4 {
        let a = build_action(k).unwrap();
        let basis = derivation_basis(&a.model, DerivationMode::Linear).unwrap();
        let mut span = SparseEchelon::new();
        for d in &basis.basis {
            span.insert(&flatten(d));
        }
        let mut torus = SparseEchelon::new();
        for j in 0..=k {
            let h = flatten(&a.h_basis(j));
            assert!(span.reduce(&h).is_empty(), "k={k}: h{j} outside Der_l");
            torus.insert(&h);
        }
        assert_eq!(torus.rank(), k + 1, "k={k}");
    }
}

#[test]
fn odd_derivations_square_bracket_to_zero() {
    let m = toroidify(&model_s4(), 3, false).unwrap();
    let s: Vec<Derivation> = (1..=3).map(|i| s_derivation(i, &m).unwrap()).collect();
    let composite = s[0]
        .add_scaled(&s[1], &Rational::new(3.into(), 2.into()))
        .add_scaled(&s[2], &Rational::from_integer((-1).into()));
    for d in s.iter().chain([&composite]) {
        assert!(d.is_odd());
        assert!(Derivation::bracket(d, d).is_zero());
    }
    let odd = Derivation::bracket(m.differential(), &build_action(3).unwrap().e[&3]);
    assert!(Derivation::bracket(&odd, &odd).is_zero());
}

#[test]
fn derivations_shift_degree() {
    let m = toroidify(&model_s4(), 3, false).unwrap();
    let samples = ["g4*g7", "s1g4*s2g7 + w1*s3g4*g4", "s1s2s3g7*w2", "g4^3"];
    let ops = [
        m.differential().clone(),
        s_derivation(2, &m).unwrap(),
        build_action(3).unwrap().e[&3].clone(),
    ];
    for text in samples {
        let x: Element = m.parse(text).unwrap();
        let deg = x.terms().next().unwrap().0.degree();
        assert!(
            x.terms().all(|(mono, _)| mono.degree() == deg),
            "{text} is not homogeneous"
        );
        for d in &ops {
            for (mono, _) in d.apply(&x).terms() {
                assert_eq!(mono.degree(), deg + d.degree(), "{text}");
            }
        }
    }
}
