//! Finite ℚ-linear combinations of canonical monomials.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::generator::Generator;
use super::monomial::{monomial_product, Monomial};
use super::rational::Rational;
use crate::error::Result;

/// Result of [`Element::degree_of`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    /// The zero element, homogeneous of every degree.
    Any,
    Homogeneous(i32),
    Inhomogeneous,
}

/// An element of a free graded-commutative algebra. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::monomial(Monomial::one(), Rational::one())
    }

    pub fn generator(g: Generator) -> Self {
        Element::monomial(Monomial::generator(g), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    /// Canonicalizes the ordered product `c · g_1 ⋯ g_n`.
    pub fn product_of(c: Rational, gens: &[Generator]) -> Self {
        match Monomial::from_product(gens) {
            None => Element::zero(),
            Some((neg, m)) => Element::monomial(m, if neg { -c } else { c }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Element, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn degree_of(&self) -> Degree {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => Degree::Any,
            Some(d) => {
                if it.all(|e| e == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Inhomogeneous
                }
            }
        }
    }

    /// Graded-commutative product; fails only on a generator universe mismatch.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = monomial_product(ma, mb)? {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication by a single monomial, `m · self`.
    pub fn mul_monomial_left(&self, m: &Monomial) -> Element {
        let mut out = Element::zero();
        for (mb, cb) in &self.terms {
            if let Some((neg, p)) = monomial_product(m, mb).expect("generator universe mismatch") {
                out.add_term(p, if neg { -cb.clone() } else { cb.clone() });
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// All generators occurring in some monomial.
    pub fn support(&self) -> impl Iterator<Item = &Generator> {
        self.terms.keys().flat_map(|m| m.generators())
    }

    /// Normalizes by re-inserting every term; idempotent on canonical input.
    pub fn normalized(&self) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            let gens: Vec<Generator> = m
                .factors()
                .iter()
                .flat_map(|(g, e)| std::iter::repeat_n(*g, *e as usize))
                .collect();
            out.add_scaled(&Element::product_of(Rational::one(), &gens), c);
        }
        out
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::generator(g)
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Element {
    type Output = Element;
    /// Panics on a generator universe mismatch; use [`Element::try_mul`] for foreign input.
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("generator universe mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::SIndices;
    use crate::algebra::rational::{frac, int};

    fn g4(s: &[usize]) -> Element {
        Element::generator(Generator::decorated(
            0,
            4,
            SIndices::from_indices(s).unwrap(),
        ))
    }

    #[test]
    fn unit_is_neutral() {
        let x = (&g4(&[]) * &g4(&[])).scale(&frac(-1, 2));
        assert_eq!(&x * &Element::one(), x);
        assert_eq!(x.degree_of(), Degree::Homogeneous(8));
    }

    #[test]
    fn difference_of_squares_mixed_degree() {
        let w1 = Element::generator(Generator::W(1));
        let a = &g4(&[]) + &w1;
        let b = &g4(&[]) - &w1;
        let p = &a * &b;
        let expected = &(&g4(&[]) * &g4(&[])) - &(&w1 * &w1);
        assert_eq!(p, expected);
        assert_eq!(p.degree_of(), Degree::Inhomogeneous);
        assert_eq!(a.degree_of(), Degree::Inhomogeneous);
    }

    #[test]
    fn odd_square_drops_in_expansion() {
        let x = g4(&[1]);
        let y = &g4(&[2]) + &g4(&[1]);
        assert_eq!(&x * &y, &x * &g4(&[2]));
        assert_eq!((&x * &g4(&[2])).len(), 1);
    }

    #[test]
    fn zero_is_any_degree() {
        assert_eq!(Element::zero().degree_of(), Degree::Any);
        let mut e = g4(&[]);
        e.add_term(Monomial::generator(Generator::base(0, 4)), int(-1));
        assert!(e.is_zero());
    }
}
