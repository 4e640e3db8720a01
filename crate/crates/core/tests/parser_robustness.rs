//! Stable-toolchain stand-in for the fuzz targets: arbitrary and mutated inputs must either
//! be rejected or round-trip, never panic.

use ekk_core::algebra::rational;
use ekk_core::dgca::{cyclification_model, model_s4, toroidify};
use ekk_core::io::{model_from_json_str, model_to_json_string, parse_differential_lines};
use proptest::prelude::*;

const ELEMENT_SEEDS: [&str; 5] = [
    "-1/2 g4^2 + w1*s1g7",
    "s1g4*g4 - s1s2g7*w2",
    "s1g4*s1g4",
    "2/3 w1^3*sw1",
    "s1s2s3g4*g4 + s1s2g4*s3g4",
];

/// A seed with one byte range replaced by arbitrary text.
fn mutated(seeds: &'static [&'static str]) -> impl Strategy<Value = String> {
    (
        0..seeds.len(),
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
        ".{0,6}",
    )
        .prop_map(move |(s, a, b, insert)| {
            let seed = seeds[s];
            let chars: Vec<char> = seed.chars().collect();
            let (mut lo, mut hi) = (a.index(chars.len() + 1), b.index(chars.len() + 1));
            if lo > hi {
                std::mem::swap(&mut lo, &mut hi);
            }
            chars[..lo]
                .iter()
                .chain(insert.chars().collect::<Vec<_>>().iter())
                .chain(&chars[hi..])
                .collect()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn element_parser(text in prop_oneof![".{0,40}", mutated(&ELEMENT_SEEDS)]) {
        let m = toroidify(&model_s4(), 3, false).unwrap();
        if let Ok(x) = m.parse(&text) {
            prop_assert_eq!(m.parse(&m.format(&x)).unwrap(), x);
        }
    }

    #[test]
    fn generator_parser(text in prop_oneof!["[sgw0-9]{0,10}", ".{0,12}"]) {
        for m in [toroidify(&model_s4(), 5, false).unwrap(), cyclification_model(&model_s4()).unwrap()] {
            if let Ok(g) = m.parse_generator(&text) {
                prop_assert_eq!(m.parse_generator(&m.name(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn rational_parser(text in prop_oneof!["-?[0-9]{0,30}(/[0-9]{0,30})?", ".{0,12}"]) {
        if let Ok(q) = rational::parse(&text) {
            prop_assert_eq!(rational::parse(&rational::to_string(&q)).unwrap(), q);
        }
    }

    #[test]
    fn differential_lines(text in prop_oneof![".{0,60}", "d\\([sgw0-9]{0,8}\\) = .{0,30}"]) {
        let m = toroidify(&model_s4(), 3, true).unwrap();
        let _ = parse_differential_lines(&m, &text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn model_json(cut in any::<prop::sample::Index>(), insert in ".{0,8}", which in 0usize..3) {
        let m = match which {
            0 => model_s4(),
            1 => cyclification_model(&model_s4()).unwrap(),
            _ => toroidify(&model_s4(), 2, false).unwrap(),
        };
        let text = model_to_json_string(&m);
        let at = cut.index(text.len());
        let at = (0..=at).rev().find(|&i| text.is_char_boundary(i)).unwrap_or(0);
        let broken = format!("{}{}{}", &text[..at], insert, &text[at..]);
        if let Ok(back) = model_from_json_str(&broken) {
            let again = model_to_json_string(&back);
            prop_assert_eq!(model_from_json_str(&again).unwrap(), back);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// One field of an exported model overwritten with a nearby or arbitrary value.
    #[test]
    fn model_json_fields(which in 0usize..3, field in 0usize..7, pick in any::<prop::sample::Index>(),
                         n in -70i64..70, s in "[sgwx0-9/\\-]{0,8}") {
        use ekk_core::io::{model_from_json, model_to_json};
        let m = match which {
            0 => model_s4(),
            1 => cyclification_model(&model_s4()).unwrap(),
            _ => toroidify(&model_s4(), 2, false).unwrap(),
        };
        let mut j = model_to_json(&m);
        let g = pick.index(j.generators.len());
        let d = pick.index(j.differential.len());
        match field {
            0 => j.generators[g].degree = n,
            1 => {
                if let Some(w) = j.generators[g].weight.as_mut() {
                    let i = pick.index(w.len());
                    w[i] = n;
                }
            }
            2 => j.k = n.unsigned_abs() as usize,
            3 => j.generators[g].name = s,
            4 => j.differential[d].generator = s,
            5 => {
                if let Some(t) = j.differential[d].terms.first_mut() {
                    t.coeff = s;
                }
            }
            _ => {
                let name = j.generators[g].name.clone();
                match j.differential[d].terms.first_mut() {
                    Some(t) => t.monomial.push(name),
                    None => j.generators[g].weight = None,
                }
            }
        }
        if let Ok(back) = model_from_json(&j) {
            let again = model_to_json_string(&back);
            prop_assert_eq!(model_from_json_str(&again).unwrap(), back);
        }
    }
}
