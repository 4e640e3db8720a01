use ekk_core::action::{build_action, verify_action, Check, ALL_CHECKS};
use ekk_core::adjunction::check_adjunction;
use ekk_core::derivation::{derivation_basis, DerivationMode};
use ekk_core::dgca::{cyclification_model, free_loop_model, model_s4, toroidify, Dgca};
use ekk_core::io::{model_to_json, model_to_json_string, model_to_latex, model_to_text};
use ekk_core::lie::{parabolic_split, positive_roots};
use ekk_core::report::Failure;
use serde::Serialize;
use serde_json::Value;

use crate::{table, Format, Mode, Space, Verb};

/// Largest rank accepted by `model`, `verify` and `derivations`.
pub const MAX_CLI_RANK: usize = 11;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ekk_core::Error),
}

pub struct Outcome {
    pub passed: bool,
    pub payload: Value,
    pub rendered: String,
}

impl Outcome {
    fn json<T: Serialize>(passed: bool, payload: &T) -> Outcome {
        Outcome {
            passed,
            payload: serde_json::to_value(payload).expect("payload serializes"),
            rendered: serde_json::to_string(payload).expect("payload serializes"),
        }
    }

    fn with_text(mut self, text: String) -> Outcome {
        self.rendered = text;
        self
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CommandError> {
    Err(CommandError::Usage(msg.into()))
}

fn check_range(verb: &str, k: usize, lo: usize, hi: usize) -> Result<(), CommandError> {
    if k < lo || k > hi {
        return usage(format!("{verb}: --k must lie in {lo}..={hi}, got {k}"));
    }
    Ok(())
}

fn formats(
    verb: &str,
    format: Option<Format>,
    allowed: &[Format],
    default: Format,
) -> Result<Format, CommandError> {
    let f = format.unwrap_or(default);
    if !allowed.contains(&f) {
        return usage(format!("{verb} does not support --format {f:?}").to_lowercase());
    }
    Ok(f)
}

pub fn run(verb: &Verb, format: Option<Format>) -> Result<Outcome, CommandError> {
    match verb {
        Verb::Model {
            k,
            space,
            untruncated,
        } => {
            let f = formats(
                "model",
                format,
                &[Format::Json, Format::Latex, Format::Text],
                Format::Text,
            )?;
            let m = build_model(*k, *space, *untruncated)?;
            let payload = serde_json::to_value(model_to_json(&m)).expect("model serializes");
            let rendered = match f {
                Format::Json => model_to_json_string(&m),
                Format::Latex => model_to_latex(&m),
                Format::Text => model_to_text(&m),
            };
            Ok(Outcome {
                passed: true,
                payload,
                rendered,
            })
        }
        Verb::Verify { k, checks } => {
            let f = formats(
                "verify",
                format,
                &[Format::Json, Format::Text],
                Format::Json,
            )?;
            check_range("verify", *k, 0, MAX_CLI_RANK)?;
            let checks = parse_checks(checks.as_deref())?;
            verify(*k, &checks, f)
        }
        Verb::Roots { k } => {
            let f = formats("roots", format, &[Format::Json, Format::Text], Format::Json)?;
            check_range("roots", *k, 3, 8)?;
            let r = positive_roots(*k)?;
            #[derive(Serialize)]
            struct Roots<'a> {
                k: usize,
                count: usize,
                positive_roots: &'a [Vec<i64>],
            }
            let out = Outcome::json(
                true,
                &Roots {
                    k: *k,
                    count: r.positive_roots.len(),
                    positive_roots: &r.positive_roots,
                },
            );
            Ok(match f {
                Format::Text => {
                    let mut s = format!(
                        "E{k}: {} positive roots (simple-root coordinates)\n",
                        r.positive_roots.len()
                    );
                    for root in &r.positive_roots {
                        s.push_str(&format!("{root:?}\n"));
                    }
                    out.with_text(s)
                }
                _ => out,
            })
        }
        Verb::Parabolic { k } => {
            let f = formats(
                "parabolic",
                format,
                &[Format::Json, Format::Text],
                Format::Json,
            )?;
            check_range("parabolic", *k, 3, 8)?;
            let p = parabolic_split(*k)?;
            #[derive(Serialize)]
            struct Dims {
                m: usize,
                a: usize,
                n: usize,
                total: usize,
            }
            let out = Outcome::json(
                true,
                &Dims {
                    m: p.dim_m,
                    a: p.dim_a,
                    n: p.dim_n,
                    total: p.total(),
                },
            );
            Ok(match f {
                Format::Text => out.with_text(format!(
                    "{} = {} + {} + {} + {}",
                    p.total(),
                    p.dim_n,
                    p.dim_m,
                    p.dim_a,
                    p.dim_n
                )),
                _ => out,
            })
        }
        Verb::Derivations {
            k,
            mode,
            untruncated,
        } => {
            let f = formats(
                "derivations",
                format,
                &[Format::Json, Format::Text],
                Format::Json,
            )?;
            check_range("derivations", *k, 0, MAX_CLI_RANK)?;
            if *mode == Mode::Full && *k > 1 {
                return usage("derivations --mode full needs k <= 1");
            }
            let m = toroidify(&model_s4(), *k, !untruncated)?;
            let mode = match mode {
                Mode::Linear => DerivationMode::Linear,
                Mode::Full => DerivationMode::Full,
            };
            let basis = derivation_basis(&m, mode)?;
            #[derive(Serialize)]
            struct Dim {
                dimension: usize,
            }
            let out = Outcome::json(
                true,
                &Dim {
                    dimension: basis.dimension(),
                },
            );
            Ok(match f {
                Format::Text => out.with_text(format!("dim = {}", basis.dimension())),
                _ => out,
            })
        }
        Verb::AdjunctionDemo { k, seed, samples } => {
            let f = formats(
                "adjunction-demo",
                format,
                &[Format::Json, Format::Text],
                Format::Json,
            )?;
            check_range("adjunction-demo", *k, 1, 4)?;
            if *samples == 0 {
                return usage("adjunction-demo: --samples must be positive");
            }
            let s = check_adjunction(*k, *seed, *samples)?;
            let out = Outcome::json(s.passed(), &s);
            Ok(match f {
                Format::Text => {
                    let mut t = String::new();
                    for p in &s.pairs {
                        t.push_str(&format!(
                            "{:<16} chain={:<5} agrees={:<5} round_trip={}\n",
                            p.label, p.source_is_chain, p.chain_agrees, p.round_trip
                        ));
                    }
                    for r in &s.correspondence.rows {
                        t.push_str(&format!(
                            "{:<16} hom0={:<5} factors={}\n",
                            r.label, r.hom0, r.factors
                        ));
                    }
                    out.with_text(t)
                }
                _ => out,
            })
        }
        Verb::Table1 { k, verify_all } => {
            let f = formats(
                "table1",
                format,
                &[Format::Json, Format::Latex, Format::Text],
                Format::Text,
            )?;
            let ranks: Vec<usize> = match k {
                Some(k) => {
                    check_range("table1", *k, 0, MAX_CLI_RANK)?;
                    vec![*k]
                }
                None => (0..=MAX_CLI_RANK).collect(),
            };
            table::run(&ranks, *verify_all, f)
        }
    }
}

fn build_model(k: usize, space: Space, untruncated: bool) -> Result<Dgca, CommandError> {
    check_range("model", k, 0, MAX_CLI_RANK)?;
    if untruncated && space != Space::Torus {
        return usage("--untruncated applies to --space torus only");
    }
    let base = model_s4();
    Ok(match space {
        Space::Sphere => base,
        Space::Loop => free_loop_model(&base, k)?,
        Space::Cyclic => cyclification_model(&base)?,
        Space::Torus => toroidify(&base, k, !untruncated)?,
    })
}

fn parse_checks(names: Option<&[String]>) -> Result<Vec<Check>, CommandError> {
    let Some(names) = names else {
        return Ok(ALL_CHECKS.to_vec());
    };
    let mut out = Vec::new();
    for n in names {
        let c: Check = n
            .trim()
            .parse()
            .map_err(|_| CommandError::Usage(format!("unknown check {n:?}")))?;
        if !out.contains(&c) {
            out.push(c);
        }
    }
    if out.is_empty() {
        return usage("--checks is empty");
    }
    Ok(out)
}

#[derive(Serialize)]
struct VerifyPayload<'a> {
    k: usize,
    checks: Vec<&'static str>,
    status: &'static str,
    evaluated: usize,
    failures: &'a [Failure],
}

pub fn verify(k: usize, checks: &[Check], f: Format) -> Result<Outcome, CommandError> {
    let a = build_action(k)?;
    let report = verify_action(&a, checks);
    let passed = report.passed();
    let out = Outcome::json(
        passed,
        &VerifyPayload {
            k,
            checks: checks.iter().map(|c| c.name()).collect(),
            status: if passed { "pass" } else { "fail" },
            evaluated: report.evaluated,
            failures: &report.failures,
        },
    );
    Ok(match f {
        Format::Text => {
            let mut t = format!(
                "k={k} checks={} evaluated={} status={}\n",
                checks
                    .iter()
                    .map(|c| c.name())
                    .collect::<Vec<_>>()
                    .join(","),
                report.evaluated,
                if passed { "pass" } else { "fail" }
            );
            for x in &report.failures {
                t.push_str(&format!(
                    "{} {} on {}: {}\n",
                    x.check, x.operator, x.generator, x.residue
                ));
            }
            out.with_text(t)
        }
        _ => out,
    })
}

/// Shared by `table1`: generator count of the truncated toroidification.
pub fn generator_count(k: usize) -> Result<usize, CommandError> {
    Ok(toroidify(&model_s4(), k, true)?.generators().len())
}
