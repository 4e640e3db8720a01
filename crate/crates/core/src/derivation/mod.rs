//! Graded derivations of semifree algebras, determined by their generator images.

pub mod space;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::algebra::{monomial_product, Element, Generator, Rational};

pub use space::{derivation_basis, DerivationMode, DerivationSpaceBasis};

/// A graded derivation `D` of degree `degree`, extended by
/// `D(xy) = D(x) y + (-1)^{|D||x|} x D(y)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    degree: i32,
    images: BTreeMap<Generator, Element>,
}

impl Derivation {
    pub fn zero(degree: i32) -> Self {
        Derivation {
            degree,
            images: BTreeMap::new(),
        }
    }

    pub fn from_images(
        degree: i32,
        images: impl IntoIterator<Item = (Generator, Element)>,
    ) -> Self {
        let mut d = Derivation::zero(degree);
        for (g, x) in images {
            d.set_image(g, x);
        }
        d
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }

    pub fn set_image(&mut self, g: Generator, x: Element) {
        if x.is_zero() {
            self.images.remove(&g);
        } else {
            self.images.insert(g, x);
        }
    }

    pub fn image(&self, g: &Generator) -> Option<&Element> {
        self.images.get(g)
    }

    pub fn image_or_zero(&self, g: &Generator) -> Element {
        self.images.get(g).cloned().unwrap_or_default()
    }

    pub fn images(&self) -> &BTreeMap<Generator, Element> {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_empty()
    }

    /// True when every generator image is a linear combination of generators.
    pub fn is_linear(&self) -> bool {
        self.images
            .values()
            .all(|x| x.terms().all(|(m, _)| m.length() == 1))
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut prefix_degree = 0;
            for pos in 0..m.factors().len() {
                let (g, e) = m.factors()[pos];
                if let Some(img) = self.images.get(&g) {
                    let (prefix, _, _, rest) = m.split_at(pos);
                    let negative = self.is_odd() && prefix_degree % 2 != 0;
                    let mut coeff = c * Rational::from_integer(e.into());
                    if negative {
                        coeff = -coeff;
                    }
                    for (mi, ci) in img.terms() {
                        let Some((n1, p1)) =
                            monomial_product(&prefix, mi).expect("universe mismatch")
                        else {
                            continue;
                        };
                        let Some((n2, p2)) =
                            monomial_product(&p1, &rest).expect("universe mismatch")
                        else {
                            continue;
                        };
                        let t = &coeff * ci;
                        out.add_term(p2, if n1 ^ n2 { -t } else { t });
                    }
                }
                prefix_degree += g.degree() * e as i32;
            }
        }
        out
    }

    pub fn apply_generator(&self, g: &Generator) -> Element {
        self.image_or_zero(g)
    }

    /// Graded commutator `[a, b] = a∘b - (-1)^{|a||b|} b∘a`.
    pub fn bracket(a: &Derivation, b: &Derivation) -> Derivation {
        let sign_negative = !(a.is_odd() && b.is_odd());
        let keys: BTreeSet<&Generator> = a.images.keys().chain(b.images.keys()).collect();
        let mut out = Derivation::zero(a.degree + b.degree);
        for g in keys {
            let mut x = match b.images.get(g) {
                Some(bg) => a.apply(bg),
                None => Element::zero(),
            };
            if let Some(ag) = a.images.get(g) {
                let y = b.apply(ag);
                if sign_negative {
                    x -= &y;
                } else {
                    x += &y;
                }
            }
            out.set_image(*g, x);
        }
        out
    }

    /// `ad(a)^n (b)`
    pub fn ad_power(a: &Derivation, n: u32, b: &Derivation) -> Derivation {
        let mut acc = b.clone();
        for _ in 0..n {
            acc = Derivation::bracket(a, &acc);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation::from_images(
            self.degree,
            self.images.iter().map(|(g, x)| (*g, x.scale(c))),
        )
    }

    /// `self + c · other`; degrees must agree.
    pub fn add_scaled(&self, other: &Derivation, c: &Rational) -> Derivation {
        assert_eq!(
            self.degree, other.degree,
            "adding derivations of different degree"
        );
        let mut out = self.clone();
        for (g, x) in &other.images {
            let mut y = out.image_or_zero(g);
            y.add_scaled(x, c);
            out.set_image(*g, y);
        }
        out
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        self.add_scaled(other, &-Rational::one())
    }

    /// The derivation acting on each listed generator by a scalar.
    pub fn diagonal(eigenvalues: impl IntoIterator<Item = (Generator, Rational)>) -> Derivation {
        Derivation::from_images(
            0,
            eigenvalues
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (g, Element::generator(g).scale(&c))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::SIndices;

    fn g(sym: u16, deg: i16, s: &[usize]) -> Generator {
        Generator::decorated(sym, deg, SIndices::from_indices(s).unwrap())
    }

    /// Hand-built `s_i` on generators g4 (symbol 0), g7 (symbol 1) with all decorations present.
    fn s_op(i: usize) -> Derivation {
        let mut d = Derivation::zero(-1);
        for (sym, deg) in [(0u16, 4i16), (1, 7)] {
            for bits in 0u64..8 {
                let s = SIndices::from_bits(bits);
                if let Some((neg, t)) = s.insert(i) {
                    let img = Element::generator(g(sym, deg, &t.iter().collect::<Vec<_>>()));
                    d.set_image(
                        g(sym, deg, &s.iter().collect::<Vec<_>>()),
                        if neg { -&img } else { img },
                    );
                }
            }
        }
        d
    }

    #[test]
    fn leibniz_even_first_factor() {
        let s1 = s_op(1);
        let x = &Element::generator(g(0, 4, &[])) * &Element::generator(g(1, 7, &[]));
        let expected = &(&Element::generator(g(0, 4, &[1])) * &Element::generator(g(1, 7, &[])))
            + &(&Element::generator(g(0, 4, &[])) * &Element::generator(g(1, 7, &[1])));
        assert_eq!(s1.apply(&x), expected);
    }

    #[test]
    fn koszul_sign_past_odd_factor() {
        // s2(s1g4) = -s1s2g4, and s2 passes the odd s1g4 with a sign
        let s2 = s_op(2);
        let x = &Element::generator(g(0, 4, &[1])) * &Element::generator(g(1, 7, &[]));
        let expected = &(&Element::generator(g(0, 4, &[1, 2])) * &Element::generator(g(1, 7, &[])))
            .scale(&int(-1))
            + &(&Element::generator(g(0, 4, &[1])) * &Element::generator(g(1, 7, &[2])))
                .scale(&int(-1));
        assert_eq!(s2.apply(&x), expected);
    }

    #[test]
    fn odd_operators_anticommute() {
        let b = Derivation::bracket(&s_op(1), &s_op(2));
        assert!(b.is_zero());
        assert!(Derivation::bracket(&s_op(1), &s_op(1)).is_zero());
        assert_eq!(b.degree(), -2);
    }

    #[test]
    fn power_rule_for_even_generators() {
        let g4 = g(0, 4, &[]);
        let d = Derivation::from_images(0, [(g4, Element::generator(g4).scale(&int(3)))]);
        let x = Element::generator(g4).pow(4);
        assert_eq!(d.apply(&x), x.scale(&int(12)));
    }
}
