//! Semifree differential graded-commutative algebras over ℚ.

mod hom;
mod models;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Degree, Element, Generator, Symbols};
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Failure};

pub use hom::{hom0_check, DgcaHom};
pub use models::{cyclification_model, free_loop_model, model_s4, s_derivation, toroidify};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Base,
    FreeLoop,
    Cyclic,
    Toroidified { truncated: bool },
    Totalization,
    Custom,
}

/// A semifree DGCA `(Λ V, d)`: ordered generators and the differential on each of them.
#[derive(Clone, Debug)]
pub struct Dgca {
    label: String,
    k: usize,
    kind: ModelKind,
    symbols: Symbols,
    generators: Vec<Generator>,
    diff: Derivation,
}

impl PartialEq for Dgca {
    /// Structural equality: same generators, same differential. Labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.symbols.entries() == other.symbols.entries()
            && self.generators == other.generators
            && self.diff == other.diff
    }
}

impl Dgca {
    /// Validates and builds a model. Generators are sorted; every differential must be
    /// homogeneous of degree one more than its generator and supported on declared generators.
    pub fn new(
        label: impl Into<String>,
        k: usize,
        kind: ModelKind,
        symbols: Symbols,
        generators: impl IntoIterator<Item = Generator>,
        differential: impl IntoIterator<Item = (Generator, Element)>,
    ) -> Result<Self> {
        let mut generators: Vec<Generator> = generators.into_iter().collect();
        generators.sort();
        if generators.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Structural("duplicate generator".into()));
        }
        let mut m = Dgca {
            label: label.into(),
            k,
            kind,
            symbols,
            generators,
            diff: Derivation::zero(1),
        };
        for g in &m.generators {
            if let Generator::Decorated {
                symbol,
                base_degree,
                ..
            } = g
            {
                match m.symbols.get(*symbol) {
                    Some(e) if e.degree == *base_degree => {}
                    _ => {
                        return Err(Error::Structural(format!(
                            "generator {g:?} does not match the symbol table"
                        )))
                    }
                }
            }
        }
        for (g, x) in differential {
            m.check_differential(&g, &x)?;
            m.diff.set_image(g, x);
        }
        Ok(m)
    }

    fn check_differential(&self, g: &Generator, x: &Element) -> Result<()> {
        if !self.contains(g) {
            return Err(Error::Structural(format!(
                "differential given on undeclared generator {}",
                self.name(g)
            )));
        }
        match x.degree_of() {
            Degree::Any => {}
            Degree::Homogeneous(d) if d == g.degree() + 1 => {}
            _ => {
                return Err(Error::Structural(format!(
                    "d({}) = {} is not homogeneous of degree {}",
                    self.name(g),
                    self.format(x),
                    g.degree() + 1
                )))
            }
        }
        if let Some(h) = x.support().find(|h| !self.contains(h)) {
            return Err(Error::Structural(format!(
                "d({}) involves undeclared generator {}",
                self.name(g),
                self.name(h)
            )));
        }
        Ok(())
    }

    /// A copy with `d(g)` replaced; used to build deliberately corrupted models.
    pub fn with_differential(&self, g: Generator, x: Element) -> Result<Dgca> {
        self.check_differential(&g, &x)?;
        let mut m = self.clone();
        m.diff.set_image(g, x);
        m.kind = ModelKind::Custom;
        Ok(m)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Dgca {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn symbols(&self) -> &Symbols {
        &self.symbols
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.generators.binary_search(g).is_ok()
    }

    pub fn differential(&self) -> &Derivation {
        &self.diff
    }

    pub fn d_generator(&self, g: &Generator) -> Element {
        self.diff.image_or_zero(g)
    }

    pub fn d(&self, x: &Element) -> Element {
        self.diff.apply(x)
    }

    pub fn name(&self, g: &Generator) -> String {
        self.symbols.name(g)
    }

    pub fn format(&self, x: &Element) -> String {
        self.symbols.format_element(x)
    }

    pub fn parse_generator(&self, text: &str) -> Result<Generator> {
        let g = self.symbols.parse_generator(text)?;
        if !self.contains(&g) {
            return Err(Error::Parse(format!(
                "{text:?} is not a generator of {}",
                self.label
            )));
        }
        Ok(g)
    }

    /// Parses an element and checks that it lives in this model.
    pub fn parse(&self, text: &str) -> Result<Element> {
        let x = self.symbols.parse_element(text)?;
        if let Some(h) = x.support().find(|h| !self.contains(h)) {
            return Err(Error::Parse(format!(
                "{} is not a generator of {}",
                self.name(h),
                self.label
            )));
        }
        Ok(x)
    }

    pub fn has_weights(&self) -> bool {
        self.symbols.has_weights()
    }

    /// True when every generator has positive degree.
    pub fn is_positively_graded(&self) -> bool {
        self.generators.iter().all(|g| g.degree() > 0)
    }

    /// Checks that `D` commutes with `d` in the graded sense, generator by generator.
    pub fn commutes_with_differential(&self, op: &Derivation, operator: &str) -> CheckReport {
        let c = Derivation::bracket(&self.diff, op);
        let failures = self
            .generators
            .iter()
            .filter_map(|g| {
                c.image(g).map(|r| Failure {
                    check: "chain".into(),
                    operator: operator.to_string(),
                    generator: self.name(g),
                    residue: self.format(r),
                })
            })
            .collect();
        CheckReport {
            evaluated: self.generators.len(),
            failures,
        }
        .finish()
    }
}

/// `d(d g) = 0` on every generator.
pub fn d_squared_zero(m: &Dgca) -> CheckReport {
    let failures: Vec<Failure> = m
        .generators
        .par_iter()
        .filter_map(|g| {
            let r = m.d(&m.d_generator(g));
            (!r.is_zero()).then(|| Failure {
                check: "d_squared".into(),
                operator: "d^2".into(),
                generator: m.name(g),
                residue: m.format(&r),
            })
        })
        .collect();
    CheckReport {
        evaluated: m.generators.len(),
        failures,
    }
    .finish()
}
