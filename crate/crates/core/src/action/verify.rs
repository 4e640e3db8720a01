//! Relation checks for a [`ChevalleyAction`]: chain, cartan, ef, serre and weight.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Rational;
use crate::derivation::Derivation;
use crate::error::Error;
use crate::lie;
use crate::report::{CheckReport, Failure};
use crate::weights::{monomial_weight, weight_of, WeightVector};

use super::ChevalleyAction;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Chain,
    Cartan,
    Ef,
    Serre,
    Weight,
}

pub const ALL_CHECKS: [Check; 5] = [
    Check::Chain,
    Check::Cartan,
    Check::Ef,
    Check::Serre,
    Check::Weight,
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Chain => "chain",
            Check::Cartan => "cartan",
            Check::Ef => "ef",
            Check::Serre => "serre",
            Check::Weight => "weight",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ALL_CHECKS
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// One identity `residual = 0`, evaluated on every generator of the model.
enum Task {
    /// The derivation must vanish on every generator.
    Vanishes {
        check: Check,
        operator: String,
        residual: Box<dyn Fn() -> Derivation + Send + Sync>,
    },
    /// `ρ(x)` must map weight-β generators into weight `β + shift`.
    Shifts {
        operator: String,
        op: Derivation,
        shift: WeightVector,
    },
}

fn residual_report(
    a: &ChevalleyAction,
    check: Check,
    operator: &str,
    r: &Derivation,
) -> CheckReport {
    let m = &a.model;
    let failures = m
        .generators()
        .iter()
        .filter_map(|g| {
            r.image(g).map(|x| Failure {
                check: check.name().into(),
                operator: operator.to_string(),
                generator: m.name(g),
                residue: m.format(x),
            })
        })
        .collect();
    CheckReport {
        evaluated: m.generators().len(),
        failures,
    }
}

fn weight_report(
    a: &ChevalleyAction,
    operator: &str,
    op: &Derivation,
    shift: &WeightVector,
) -> CheckReport {
    let m = &a.model;
    let mut failures = Vec::new();
    for g in m.generators() {
        let Some(x) = op.image(g) else { continue };
        let expected = &weight_of(g, m.symbols(), m.k()).expect("weighted model") + shift;
        let off: Vec<_> = x
            .terms()
            .filter(|(mono, _)| {
                monomial_weight(mono, m.symbols(), m.k()).as_ref() != Some(&expected)
            })
            .collect();
        if !off.is_empty() {
            let mut residue = crate::algebra::Element::zero();
            for (mono, c) in off {
                residue.add_term(mono.clone(), c.clone());
            }
            failures.push(Failure {
                check: Check::Weight.name().into(),
                operator: operator.to_string(),
                generator: m.name(g),
                residue: m.format(&residue),
            });
        }
    }
    CheckReport {
        evaluated: m.generators().len(),
        failures,
    }
}

fn scaled(d: &Derivation, c: i64) -> Derivation {
    d.scale(&Rational::from_integer(c.into()))
}

fn tasks(a: &ChevalleyAction, checks: &[Check]) -> Vec<Task> {
    let k = a.k();
    let mut out = Vec::new();
    let model = a.model.clone();
    let e_ops: Vec<(usize, Derivation)> = a.e.iter().map(|(i, d)| (*i, d.clone())).collect();
    let f_ops: Vec<(usize, Derivation)> = a.f.iter().map(|(i, d)| (*i, d.clone())).collect();
    let cartan = &a.cartan;

    if checks.contains(&Check::Chain) {
        let mut ops: Vec<(String, Derivation)> = Vec::new();
        ops.extend(e_ops.iter().map(|(i, d)| (format!("e{i}"), d.clone())));
        ops.extend(f_ops.iter().map(|(i, d)| (format!("f{i}"), d.clone())));
        ops.extend((0..=k).map(|j| (format!("h{j}"), a.h_basis(j))));
        for (name, op) in ops {
            let model = model.clone();
            out.push(Task::Vanishes {
                check: Check::Chain,
                operator: name,
                residual: Box::new(move || Derivation::bracket(model.differential(), &op)),
            });
        }
    }
    if checks.contains(&Check::Cartan) {
        for j in 0..=k {
            let h = a.h_basis(j);
            let mut hj = vec![0; k + 1];
            hj[j] = 1;
            for (i, e) in &e_ops {
                let c = lie::pair(&cartan.simple_root(*i).expect("available root"), &hj);
                let (h, e) = (h.clone(), e.clone());
                out.push(Task::Vanishes {
                    check: Check::Cartan,
                    operator: format!("[h{j},e{i}]"),
                    residual: Box::new(move || Derivation::bracket(&h, &e).sub(&scaled(&e, c))),
                });
            }
            for (i, f) in &f_ops {
                let c = lie::pair(&cartan.simple_root(*i).expect("available root"), &hj);
                let (h, f) = (h.clone(), f.clone());
                out.push(Task::Vanishes {
                    check: Check::Cartan,
                    operator: format!("[h{j},f{i}]"),
                    residual: Box::new(move || Derivation::bracket(&h, &f).sub(&scaled(&f, -c))),
                });
            }
        }
    }
    if checks.contains(&Check::Ef) {
        for (i, e) in &e_ops {
            for (j, f) in &f_ops {
                let expected = if i == j {
                    a.h_action_int(&cartan.simple_coroot(*i).expect("available coroot"))
                } else {
                    Derivation::zero(0)
                };
                let (e, f) = (e.clone(), f.clone());
                out.push(Task::Vanishes {
                    check: Check::Ef,
                    operator: format!("[e{i},f{j}]"),
                    residual: Box::new(move || Derivation::bracket(&e, &f).sub(&expected)),
                });
            }
        }
    }
    if checks.contains(&Check::Serre) {
        let c_ij = |i: usize, j: usize| {
            lie::pair(
                &cartan.simple_root(j).expect("available root"),
                &cartan.simple_coroot(i).expect("available coroot"),
            )
        };
        for (label, ops) in [("e", &e_ops), ("f", &f_ops)] {
            for (i, x) in ops {
                for (j, y) in ops {
                    if i == j {
                        continue;
                    }
                    let n = (1 - c_ij(*i, *j)) as u32;
                    let (x, y) = (x.clone(), y.clone());
                    out.push(Task::Vanishes {
                        check: Check::Serre,
                        operator: format!("ad({label}{i})^{n}({label}{j})"),
                        residual: Box::new(move || Derivation::ad_power(&x, n, &y)),
                    });
                }
            }
        }
    }
    if checks.contains(&Check::Weight) {
        for (i, e) in &e_ops {
            out.push(Task::Shifts {
                operator: format!("e{i}"),
                op: e.clone(),
                shift: cartan.simple_root(*i).expect("available root"),
            });
        }
        for (i, f) in &f_ops {
            out.push(Task::Shifts {
                operator: format!("f{i}"),
                op: f.clone(),
                shift: -&cartan.simple_root(*i).expect("available root"),
            });
        }
    }
    out
}

/// Runs the selected checks in the current rayon pool; the report does not depend on the
/// number of workers.
pub fn verify_action(a: &ChevalleyAction, checks: &[Check]) -> CheckReport {
    let reports: Vec<CheckReport> = tasks(a, checks)
        .into_par_iter()
        .map(|t| match t {
            Task::Vanishes {
                check,
                operator,
                residual,
            } => residual_report(a, check, &operator, &residual()),
            Task::Shifts {
                operator,
                op,
                shift,
            } => weight_report(a, &operator, &op, &shift),
        })
        .collect();
    let mut out = CheckReport::default();
    for r in reports {
        out.merge(r);
    }
    out.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::build_action;

    #[test]
    fn all_checks_pass_for_small_ranks() {
        for k in 0..=5 {
            let a = build_action(k).unwrap();
            let r = verify_action(&a, &ALL_CHECKS);
            assert!(r.passed(), "k={k}: {:?}", r.failures.first());
        }
    }

    #[test]
    fn serre_instances_from_the_rank_four_case() {
        let a = build_action(4).unwrap();
        let e3 = &a.e[&3];
        let e4 = &a.e[&4];
        assert!(Derivation::ad_power(e4, 2, e3).is_zero());
        assert!(Derivation::bracket(&a.e[&1], e4).is_zero());
    }

    #[test]
    fn corrupted_top_operator_fails() {
        let mut a = build_action(3).unwrap();
        let m = a.model.clone();
        a.set_e_image(
            3,
            m.parse_generator("s1s2g4").unwrap(),
            m.parse("-w3").unwrap(),
        );
        let r = verify_action(&a, &[Check::Chain]);
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| f.operator == "e3"));
    }

    #[test]
    fn unsigned_reordering_of_the_top_operator_fails() {
        // drop the (-1)^{|A||B|} from moving s_A (A ⊆ {1,2,3}) to the front of s_I
        for k in 4..=5 {
            let mut a = build_action(k).unwrap();
            let top = a.e[&k].clone();
            let model = a.model.clone();
            for g in model.generators() {
                let s = g.s_indices();
                let (front, rest) = (
                    s.iter().filter(|&i| i <= 3).count(),
                    s.iter().filter(|&i| i > 3).count(),
                );
                if front * rest % 2 == 1 {
                    a.set_e_image(k, *g, -&top.image_or_zero(g));
                }
            }
            assert!(!verify_action(&a, &[Check::Chain]).passed(), "k={k}");
        }
    }

    #[test]
    fn check_names_parse() {
        assert_eq!("serre".parse::<Check>().unwrap(), Check::Serre);
        assert!("bogus".parse::<Check>().is_err());
    }
}
