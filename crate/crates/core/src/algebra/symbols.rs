//! Base-symbol tables: names and degrees of undecorated generators, plus the text form of
//! generators and elements (`s1s2g7`, `-1/2 g4^2 + w1*s1g7`).

use serde::{Deserialize, Serialize};

use super::element::Element;
use super::generator::{Generator, SIndices, MAX_RANK};
use super::monomial::Monomial;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A base generator of the underlying model.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SymbolInfo {
    pub name: String,
    pub degree: i16,
    /// ε₀-coefficient of the weight of the undecorated symbol, when the model carries weights.
    pub eps0_weight: Option<i32>,
}

/// How `w_1` is printed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub enum WStyle {
    #[default]
    Indexed,
    /// Single unindexed `w`, as in the cyclification model.
    Bare,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Symbols {
    entries: Vec<SymbolInfo>,
    pub w_style: WStyle,
}

fn valid_symbol_name(name: &str) -> bool {
    let b = name.as_bytes();
    if b.is_empty() || !b.iter().all(|c| c.is_ascii_alphanumeric() || *c == b'_') {
        return false;
    }
    if !b[0].is_ascii_alphabetic() {
        return false;
    }
    if b[0] == b's' && b.get(1).is_some_and(u8::is_ascii_digit) {
        return false;
    }
    let all_digits = |t: &[u8]| t.iter().all(u8::is_ascii_digit);
    if b[0] == b'w' && all_digits(&b[1..]) {
        return false;
    }
    if name.starts_with("sw") && all_digits(&b[2..]) {
        return false;
    }
    true
}

impl Symbols {
    pub fn new() -> Self {
        Symbols::default()
    }

    /// Declares a base symbol; returns its generator.
    pub fn declare(
        &mut self,
        name: &str,
        degree: i16,
        eps0_weight: Option<i32>,
    ) -> Result<Generator> {
        if !valid_symbol_name(name) {
            return Err(Error::Parse(format!("invalid base symbol name {name:?}")));
        }
        if self.entries.iter().any(|e| e.name == name) {
            return Err(Error::Structural(format!("duplicate base symbol {name:?}")));
        }
        if self.entries.len() >= u16::MAX as usize {
            return Err(Error::Structural("too many base symbols".into()));
        }
        self.entries.push(SymbolInfo {
            name: name.to_string(),
            degree,
            eps0_weight,
        });
        Ok(Generator::base((self.entries.len() - 1) as u16, degree))
    }

    pub fn entries(&self) -> &[SymbolInfo] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, symbol: u16) -> Option<&SymbolInfo> {
        self.entries.get(symbol as usize)
    }

    pub fn base_generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, e)| Generator::base(i as u16, e.degree))
    }

    pub fn lookup(&self, name: &str) -> Option<Generator> {
        self.entries
            .iter()
            .position(|e| e.name == name)
            .map(|i| Generator::base(i as u16, self.entries[i].degree))
    }

    /// True when every base symbol carries a weight.
    pub fn has_weights(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.eps0_weight.is_some())
    }

    pub fn name(&self, g: &Generator) -> String {
        match *g {
            Generator::W(i) => match self.w_style {
                WStyle::Bare if i == 1 => "w".to_string(),
                _ => format!("w{i}"),
            },
            Generator::Sw(i) => format!("sw{i}"),
            Generator::Decorated { symbol, s, .. } => {
                let mut out = String::new();
                for i in s.iter() {
                    out.push('s');
                    out.push_str(&i.to_string());
                }
                match self.get(symbol) {
                    Some(e) => out.push_str(&e.name),
                    None => out.push_str(&format!("?{symbol}")),
                }
                out
            }
        }
    }

    pub fn parse_generator(&self, text: &str) -> Result<Generator> {
        let t = text.trim();
        let bad = || Error::Parse(format!("unknown generator {t:?}"));
        let index = |digits: &str| -> Result<u8> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 3
            {
                return Err(bad());
            }
            let i: usize = digits.parse().map_err(|_| bad())?;
            if i == 0 || i > MAX_RANK {
                return Err(bad());
            }
            Ok(i as u8)
        };
        if t == "w" && self.w_style == WStyle::Bare {
            return Ok(Generator::W(1));
        }
        if let Some(rest) = t.strip_prefix("sw") {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                return Ok(Generator::Sw(index(rest)?));
            }
        }
        if let Some(rest) = t.strip_prefix('w') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                return Ok(Generator::W(index(rest)?));
            }
        }
        let mut rest = t;
        let mut indices = Vec::new();
        while rest.starts_with('s') && rest.as_bytes().get(1).is_some_and(u8::is_ascii_digit) {
            let end = 1 + rest[1..].bytes().take_while(u8::is_ascii_digit).count();
            indices.push(index(&rest[1..end])? as usize);
            rest = &rest[end..];
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "s-indices of {t:?} must be strictly increasing"
            )));
        }
        let base = self.lookup(rest).ok_or_else(bad)?;
        let s = SIndices::from_indices(&indices)?;
        Ok(base
            .with_s(s)
            .expect("base symbols are decorated generators"))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.factors()
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    self.name(g)
                } else {
                    format!("{}^{e}", self.name(g))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (m, c)) in x.terms().enumerate() {
            let neg = rational::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if m.is_one() {
                out.push_str(&rational::to_string(&abs));
            } else if rational::is_unit(&abs) {
                out.push_str(&mono);
            } else {
                out.push_str(&rational::to_string(&abs));
                out.push(' ');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Parses the text form produced by [`Symbols::format_element`]. Factors may appear in any
    /// order; the Koszul sign of reordering is applied.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if t == "0" {
            return Ok(Element::zero());
        }
        let mut out = Element::zero();
        let bytes = t.as_bytes();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            while pos < bytes.len() && bytes[pos] == b' ' {
                pos += 1;
            }
            let mut negative = false;
            if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected + or - in {t:?}")));
            }
            first = false;
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let term = t[start..pos].trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {t:?}")));
            }
            let coeff_len = term
                .bytes()
                .take_while(|b| b.is_ascii_digit() || *b == b'/')
                .count();
            let (coeff, rest) = term.split_at(coeff_len);
            let mut c = if coeff.is_empty() {
                Rational::from_integer(1.into())
            } else {
                rational::parse(coeff)?
            };
            if negative {
                c = -c;
            }
            let rest = rest.trim_start();
            let rest = rest.strip_prefix('*').unwrap_or(rest).trim();
            let mut gens = Vec::new();
            if !rest.is_empty() {
                for factor in rest.split('*') {
                    let factor = factor.trim();
                    let (name, exp) = match factor.split_once('^') {
                        None => (factor, 1u32),
                        Some((n, e)) => {
                            let e: u32 = e
                                .trim()
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                            if e > 64 {
                                return Err(Error::Parse(format!(
                                    "exponent too large in {factor:?}"
                                )));
                            }
                            (n, e)
                        }
                    };
                    let g = self.parse_generator(name)?;
                    gens.extend(std::iter::repeat_n(g, exp as usize));
                }
            } else if coeff.is_empty() {
                return Err(Error::Parse(format!("empty term in {t:?}")));
            }
            out += &Element::product_of(c, &gens);
        }
        Ok(out)
    }
}
