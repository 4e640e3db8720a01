//! Algebra maps between semifree DGCAs, determined by generator images.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{Degree, Element, Generator};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Failure};

use super::{Dgca, ModelKind};

#[derive(Clone, Debug)]
pub struct DgcaHom {
    source: Arc<Dgca>,
    target: Arc<Dgca>,
    images: BTreeMap<Generator, Element>,
}

impl DgcaHom {
    /// Generators missing from `images` map to zero.
    pub fn new(
        source: Arc<Dgca>,
        target: Arc<Dgca>,
        images: impl IntoIterator<Item = (Generator, Element)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (g, x) in images {
            if !source.contains(&g) {
                return Err(Error::Structural(format!(
                    "{} is not a generator of {}",
                    source.name(&g),
                    source.label()
                )));
            }
            match x.degree_of() {
                Degree::Any => continue,
                Degree::Homogeneous(d) if d == g.degree() => {}
                _ => {
                    return Err(Error::Structural(format!(
                        "image of {} has the wrong degree",
                        source.name(&g)
                    )))
                }
            }
            if let Some(h) = x.support().find(|h| !target.contains(h)) {
                return Err(Error::Structural(format!(
                    "image of {} involves {}, which is not a generator of {}",
                    source.name(&g),
                    target.name(h),
                    target.label()
                )));
            }
            map.insert(g, x);
        }
        Ok(DgcaHom {
            source,
            target,
            images: map,
        })
    }

    pub fn identity(m: Arc<Dgca>) -> Self {
        let images: BTreeMap<Generator, Element> = m
            .generators()
            .iter()
            .map(|g| (*g, Element::generator(*g)))
            .collect();
        DgcaHom {
            source: m.clone(),
            target: m,
            images,
        }
    }

    pub fn source(&self) -> &Arc<Dgca> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Dgca> {
        &self.target
    }

    pub fn image(&self, g: &Generator) -> Element {
        self.images.get(g).cloned().unwrap_or_default()
    }

    pub fn images(&self) -> &BTreeMap<Generator, Element> {
        &self.images
    }

    /// Extends multiplicatively; factors are mapped in canonical order, so no sign arises.
    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut acc = Element::one();
            for (g, e) in m.factors() {
                let img = self.image(g);
                for _ in 0..*e {
                    acc = &acc * &img;
                }
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &DgcaHom) -> Result<DgcaHom> {
        if *other.target != *self.source {
            return Err(Error::Structural(
                "composing homs with mismatched models".into(),
            ));
        }
        let images: Vec<(Generator, Element)> = other
            .source
            .generators()
            .iter()
            .map(|g| (*g, self.apply(&other.image(g))))
            .collect();
        DgcaHom::new(other.source.clone(), self.target.clone(), images)
    }

    /// `h(d g) = d h(g)` for every source generator.
    pub fn is_chain_map(&self) -> CheckReport {
        let failures: Vec<Failure> = self
            .source
            .generators()
            .par_iter()
            .filter_map(|g| {
                let lhs = self.apply(&self.source.d_generator(g));
                let rhs = self.target.d(&self.image(g));
                let r = &lhs - &rhs;
                (!r.is_zero()).then(|| Failure {
                    check: "chain".into(),
                    operator: "hom".into(),
                    generator: self.source.name(g),
                    residue: self.target.format(&r),
                })
            })
            .collect();
        CheckReport {
            evaluated: self.source.generators().len(),
            failures,
        }
        .finish()
    }
}

/// For a hom into a totalization: true iff every positive-degree source generator maps into
/// the span of monomials with at least one factor that is not an `sw` class.
pub fn hom0_check(h: &DgcaHom) -> Result<bool> {
    if h.target.kind() != ModelKind::Totalization {
        return Err(Error::Structural(format!(
            "{} is not a totalization",
            h.target.label()
        )));
    }
    Ok(h.source
        .generators()
        .iter()
        .filter(|g| g.degree() > 0)
        .all(|g| {
            h.image(g).terms().all(|(m, _)| {
                m.generators()
                    .any(|x| !matches!(x, Generator::Sw(_)) && x.degree() > 0)
            })
        }))
}
