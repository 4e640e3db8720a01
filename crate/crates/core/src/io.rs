//! Model import and export. Only JSON round-trips; LaTeX is presentation.

use serde::{Deserialize, Serialize};

use crate::algebra::{rational, Element, Generator, Monomial, Rational, SIndices, Symbols, WStyle};
use crate::dgca::{Dgca, ModelKind};
use crate::error::{Error, Result};
use crate::weights::weight_of;

/// Largest number of factors accepted in one monomial of an imported model.
const MAX_MONOMIAL_LENGTH: usize = 256;
/// Largest number of generators accepted in an imported model.
const MAX_GENERATORS: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DifferentialJson {
    pub generator: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ModelJson {
    pub label: String,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ModelKind>,
    pub generators: Vec<GeneratorJson>,
    pub differential: Vec<DifferentialJson>,
}

fn monomial_names(m: &Dgca, mono: &Monomial) -> Vec<String> {
    mono.factors()
        .iter()
        .flat_map(|(g, e)| std::iter::repeat_n(m.name(g), *e as usize))
        .collect()
}

pub fn model_to_json(m: &Dgca) -> ModelJson {
    let generators = m
        .generators()
        .iter()
        .map(|g| GeneratorJson {
            name: m.name(g),
            degree: g.degree() as i64,
            weight: weight_of(g, m.symbols(), m.k()).map(|w| w.0),
        })
        .collect();
    let differential = m
        .generators()
        .iter()
        .map(|g| DifferentialJson {
            generator: m.name(g),
            terms: m
                .d_generator(g)
                .terms()
                .map(|(mono, c)| TermJson {
                    coeff: rational::to_string(c),
                    monomial: monomial_names(m, mono),
                })
                .collect(),
        })
        .collect();
    ModelJson {
        label: m.label().to_string(),
        k: m.k(),
        kind: Some(m.kind()),
        generators,
        differential,
    }
}

pub fn model_to_json_string(m: &Dgca) -> String {
    serde_json::to_string_pretty(&model_to_json(m)).expect("model JSON serializes")
}

/// Splits a decorated generator name into its s-indices and base symbol name.
fn split_decorated(name: &str) -> Result<(Vec<usize>, &str)> {
    let mut rest = name;
    let mut indices = Vec::new();
    while rest.starts_with('s') && rest.as_bytes().get(1).is_some_and(u8::is_ascii_digit) {
        let end = 1 + rest[1..].bytes().take_while(u8::is_ascii_digit).count();
        if end > 4 {
            return Err(Error::Parse(format!("s-index too large in {name:?}")));
        }
        indices.push(
            rest[1..end]
                .parse()
                .map_err(|_| Error::Parse(format!("bad s-index in {name:?}")))?,
        );
        rest = &rest[end..];
    }
    Ok((indices, rest))
}

fn is_indexed(name: &str, prefix: &str) -> bool {
    name.strip_prefix(prefix)
        .is_some_and(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
}

/// Rebuilds a model from its JSON form, re-deriving the base symbol table from the
/// generator names and degrees.
pub fn model_from_json(j: &ModelJson) -> Result<Dgca> {
    if j.generators.len() > MAX_GENERATORS {
        return Err(Error::Parse("too many generators".into()));
    }
    if j.k > crate::algebra::MAX_RANK {
        return Err(Error::RankOutOfRange(j.k as i64, "rank exceeds 64"));
    }
    let mut symbols = Symbols::new();
    if j.generators.iter().any(|g| g.name == "w") {
        symbols.w_style = WStyle::Bare;
    }
    for g in &j.generators {
        if g.name == "w" || is_indexed(&g.name, "w") || is_indexed(&g.name, "sw") {
            continue;
        }
        let (indices, base) = split_decorated(&g.name)?;
        let base_degree = g.degree + indices.len() as i64;
        let base_degree = i16::try_from(base_degree)
            .map_err(|_| Error::Parse(format!("degree out of range for {:?}", g.name)))?;
        let eps0 = match &g.weight {
            None => None,
            Some(w) => Some(
                i32::try_from(
                    *w.first()
                        .ok_or_else(|| Error::Parse("empty weight".into()))?,
                )
                .map_err(|_| Error::Parse("weight out of range".into()))?,
            ),
        };
        match symbols.entries().iter().find(|e| e.name == base) {
            Some(e) if e.degree == base_degree && e.eps0_weight == eps0 => {}
            Some(_) => {
                return Err(Error::Parse(format!(
                    "generator {:?} disagrees with earlier generators on its base symbol",
                    g.name
                )))
            }
            None => {
                symbols.declare(base, base_degree, eps0)?;
            }
        }
    }
    let mut generators = Vec::with_capacity(j.generators.len());
    for g in &j.generators {
        let gen = symbols.parse_generator(&g.name)?;
        if gen.degree() as i64 != g.degree {
            return Err(Error::Parse(format!("wrong degree for {:?}", g.name)));
        }
        if let Some(w) = &g.weight {
            if weight_of(&gen, &symbols, j.k).map(|x| x.0).as_ref() != Some(w) {
                return Err(Error::Parse(format!(
                    "inconsistent weight for {:?}",
                    g.name
                )));
            }
        }
        generators.push(gen);
    }
    let mut diff = Vec::with_capacity(j.differential.len());
    for entry in &j.differential {
        let g = symbols.parse_generator(&entry.generator)?;
        let mut x = Element::zero();
        for t in &entry.terms {
            if t.monomial.len() > MAX_MONOMIAL_LENGTH {
                return Err(Error::Parse("monomial too long".into()));
            }
            let c: Rational = rational::parse(&t.coeff)?;
            let factors = t
                .monomial
                .iter()
                .map(|n| symbols.parse_generator(n))
                .collect::<Result<Vec<_>>>()?;
            x += &Element::product_of(c, &factors);
        }
        diff.push((g, x));
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some((g, _)) = diff.iter().find(|(g, _)| !seen.insert(*g)) {
        return Err(Error::Parse(format!(
            "differential listed twice for {}",
            symbols.name(g)
        )));
    }
    Dgca::new(
        j.label.clone(),
        j.k,
        j.kind.unwrap_or(ModelKind::Custom),
        symbols,
        generators,
        diff,
    )
}

pub fn model_from_json_str(text: &str) -> Result<Dgca> {
    let j: ModelJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    model_from_json(&j)
}

/// One `d(g) = …` line per generator, in generator order.
pub fn model_to_text(m: &Dgca) -> String {
    let mut out = format!(
        "model: {}\nk: {}\ngenerators: {}\n",
        m.label(),
        m.k(),
        m.generators().len()
    );
    for g in m.generators() {
        out.push_str(&format!(
            "d({}) = {}\n",
            m.name(g),
            m.format(&m.d_generator(g))
        ));
    }
    out
}

/// Parses the `d(g) = …` lines of [`model_to_text`] output against a model's symbol table.
pub fn parse_differential_lines(m: &Dgca, text: &str) -> Result<Vec<(Generator, Element)>> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        let Some(rest) = line.strip_prefix("d(") else {
            continue;
        };
        let (name, rhs) = rest
            .split_once(") =")
            .ok_or_else(|| Error::Parse(format!("malformed line {line:?}")))?;
        out.push((m.parse_generator(name)?, m.parse(rhs)?));
    }
    Ok(out)
}

fn latex_name(m: &Dgca, g: &Generator) -> String {
    let base = |name: &str| {
        let digits = name.bytes().rev().take_while(u8::is_ascii_digit).count();
        let (stem, sub) = name.split_at(name.len() - digits);
        if sub.is_empty() {
            stem.to_string()
        } else {
            format!("{stem}_{{{sub}}}")
        }
    };
    match g {
        Generator::Decorated { s, .. } => {
            let mut parts: Vec<String> = s.iter().map(|i| format!("s_{{{i}}}")).collect();
            let plain = m.name(&g.with_s(SIndices::EMPTY).expect("decorated"));
            parts.push(base(&plain));
            parts.join(" ")
        }
        _ => base(&m.name(g)),
    }
}

/// Presentation order of the factors of one monomial: decorated generators by decreasing
/// decoration, then undecorated ones, then the `w`/`sw` classes. Returns the sign picked up by
/// moving odd factors past each other.
fn display_factors(mono: &Monomial) -> (bool, Vec<(Generator, u32)>) {
    let rank = |g: &Generator| match g {
        Generator::Decorated { s, .. } => (0, usize::MAX - s.len()),
        Generator::W(_) => (1, 0),
        Generator::Sw(_) => (2, 0),
    };
    let mut order: Vec<(usize, (Generator, u32))> =
        mono.factors().iter().cloned().enumerate().collect();
    order.sort_by_key(|(pos, (g, _))| (rank(g), *pos));
    let odd: Vec<usize> = order
        .iter()
        .filter(|(_, (g, _))| g.degree() % 2 != 0)
        .map(|(pos, _)| *pos)
        .collect();
    let inversions = (0..odd.len())
        .flat_map(|a| (a + 1..odd.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| odd[a] > odd[b])
        .count();
    (
        inversions % 2 == 1,
        order.into_iter().map(|(_, f)| f).collect(),
    )
}

fn term_key(
    factors: &[(Generator, u32)],
) -> (usize, std::cmp::Reverse<usize>, Vec<(Generator, u32)>) {
    let ws = factors
        .iter()
        .filter(|(g, _)| !matches!(g, Generator::Decorated { .. }))
        .count();
    let longest = factors
        .iter()
        .map(|(g, _)| match g {
            Generator::Decorated { s, .. } => s.len(),
            _ => 0,
        })
        .max()
        .unwrap_or(0);
    (ws, std::cmp::Reverse(longest), factors.to_vec())
}

fn latex_element(m: &Dgca, x: &Element) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(Vec<(Generator, u32)>, Rational)> = x
        .terms()
        .map(|(mono, c)| {
            let (flip, factors) = display_factors(mono);
            (factors, if flip { -c.clone() } else { c.clone() })
        })
        .collect();
    terms.sort_by_cached_key(|(f, _)| term_key(f));
    let mut out = String::new();
    for (n, (factors, c)) in terms.iter().enumerate() {
        let negative = rational::is_negative(c);
        let abs = if negative { -c.clone() } else { c.clone() };
        out.push_str(match (n, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let coeff = if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        let body = factors
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    latex_name(m, g)
                } else {
                    format!("{}^{{{e}}}", latex_name(m, g))
                }
            })
            .collect::<Vec<_>>()
            .join(" \\cdot ");
        if factors.is_empty() {
            out.push_str(&coeff);
        } else if rational::is_unit(&abs) {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{coeff}\\, {body}"));
        }
    }
    out
}

/// Row order of the LaTeX table: by decoration length, then base symbol, then indices, with
/// the `w` and `sw` classes last.
fn row_key(g: &Generator) -> (u8, usize, Generator) {
    match g {
        Generator::Decorated { s, .. } => (0, s.len(), g.with_s(SIndices::EMPTY).unwrap_or(*g)),
        _ => (1, 0, *g),
    }
}

/// An `align*` block with one `d\, g &= …` row per generator.
pub fn model_to_latex(m: &Dgca) -> String {
    let mut gens = m.generators().to_vec();
    gens.sort_by_key(|g| (row_key(g), *g));
    let rows: Vec<String> = gens
        .iter()
        .map(|g| {
            format!(
                "  d\\, {} &= {}",
                latex_name(m, g),
                latex_element(m, &m.d_generator(g))
            )
        })
        .collect();
    let mut out = String::from("\\begin{align*}\n");
    out.push_str(&rows.join(" \\\\\n"));
    out.push_str("\n\\end{align*}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgca::{cyclification_model, model_s4, toroidify};

    #[test]
    fn json_round_trip() {
        for m in [
            model_s4(),
            toroidify(&model_s4(), 3, true).unwrap(),
            toroidify(&model_s4(), 2, false).unwrap(),
            cyclification_model(&model_s4()).unwrap(),
        ] {
            let text = model_to_json_string(&m);
            let back = model_from_json_str(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(model_to_json_string(&back), text);
        }
    }

    #[test]
    fn rejects_inconsistent_json() {
        let m = model_s4();
        let mut j = model_to_json(&m);
        j.generators[1].degree = 8;
        assert!(model_from_json(&j).is_err());
        let mut j = model_to_json(&m);
        j.differential[1].terms[0].coeff = "1/0".into();
        assert!(model_from_json(&j).is_err());
        assert!(model_from_json_str("{").is_err());
    }

    #[test]
    fn text_lines_parse_back() {
        let m = toroidify(&model_s4(), 2, true).unwrap();
        let lines = parse_differential_lines(&m, &model_to_text(&m)).unwrap();
        assert_eq!(lines.len(), m.generators().len());
        for (g, x) in lines {
            assert_eq!(m.d_generator(&g), x);
        }
    }

    #[test]
    fn latex_rows() {
        let m = model_s4();
        let tex = model_to_latex(&m);
        assert!(tex.contains("d\\, g_{7} &= -\\tfrac{1}{2}\\, g_{4}^{2}"));
    }

    #[test]
    fn latex_follows_presentation_order() {
        let m = toroidify(&model_s4(), 3, true).unwrap();
        let tex = model_to_latex(&m);
        let rows: Vec<&str> = tex.lines().filter(|l| l.contains("&=")).collect();
        assert!(rows[0].starts_with("  d\\, g_{4} &= s_{1} g_{4} \\cdot w_{1}"));
        assert!(rows[1]
            .starts_with("  d\\, g_{7} &= -\\tfrac{1}{2}\\, g_{4}^{2} + s_{1} g_{7} \\cdot w_{1}"));
        assert!(rows[18].starts_with("  d\\, w_{3}"));
        let top = rows
            .iter()
            .find(|r| r.contains("d\\, s_{1} s_{2} s_{3} g_{7}"))
            .unwrap();
        assert!(top.ends_with("&= s_{1} s_{2} s_{3} g_{4} \\cdot g_{4} + s_{1} s_{2} g_{4} \\cdot s_{3} g_{4} - s_{1} s_{3} g_{4} \\cdot s_{2} g_{4} + s_{2} s_{3} g_{4} \\cdot s_{1} g_{4} \\\\"));
    }
}
