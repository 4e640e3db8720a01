//! Seeded round-trip and chain-preservation suite for the hom-set bijection.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::sample::{
    koszul_extension, odd_line, random_chain_automorphism, random_odd_line_map, random_perturbation,
};
use super::{
    hom_backward, hom_forward, totalize, truncated_correspondence, unit, CorrespondenceReport,
};
use crate::dgca::{model_s4, toroidify, DgcaHom};
use crate::error::Result;

/// Attempts allowed per requested random automorphism before giving up.
const ATTEMPTS_PER_SAMPLE: usize = 10;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PairOutcome {
    pub label: String,
    /// `F` and `f` are both chain maps or both fail to be.
    pub chain_agrees: bool,
    pub source_is_chain: bool,
    /// `forward(backward(F)) = F` and `backward(forward(f)) = f`.
    pub round_trip: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AdjunctionSummary {
    pub k: usize,
    pub seed: u64,
    pub pairs: Vec<PairOutcome>,
    pub correspondence: CorrespondenceReport,
}

impl AdjunctionSummary {
    pub fn passed(&self) -> bool {
        self.correspondence.holds() && self.pairs.iter().all(|p| p.chain_agrees && p.round_trip)
    }

    /// Number of pairs whose `F` is a chain map.
    pub fn chain_pairs(&self) -> usize {
        self.pairs.iter().filter(|p| p.source_is_chain).count()
    }
}

fn same_hom(a: &DgcaHom, b: &DgcaHom) -> bool {
    a.source().generators() == b.source().generators()
        && a.source()
            .generators()
            .iter()
            .all(|g| a.image(g) == b.image(g))
}

/// Runs the identity pair, `samples` random chain automorphisms of `Trd̃ₖ M(S⁴)`, `samples`
/// random non-chain perturbations and `samples` odd-line maps, checking each pair in both
/// directions and comparing the `Hom⁰` predicate with factorization through the truncation.
pub fn check_adjunction(k: usize, seed: u64, samples: usize) -> Result<AdjunctionSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = Arc::new(model_s4());
    let (trd, tot, eta) = unit(&m, k)?;
    let mut homs: Vec<(String, DgcaHom)> =
        vec![("identity".into(), DgcaHom::identity(trd.clone()))];
    let mut found = 0;
    for _ in 0..samples * ATTEMPTS_PER_SAMPLE {
        if found == samples {
            break;
        }
        if let Some(h) = random_chain_automorphism(&trd, &mut rng)? {
            homs.push((format!("automorphism {found}"), h));
            found += 1;
        }
    }
    for n in 0..samples {
        homs.push((
            format!("perturbation {n}"),
            random_perturbation(&trd, &mut rng)?,
        ));
    }

    let mut pairs = Vec::new();
    let mut backward = Vec::new();
    for (label, big_f) in &homs {
        let f = hom_backward(&m, big_f, &tot)?;
        if label == "identity" && !same_hom(&f, &eta) {
            pairs.push(PairOutcome {
                label: "unit".into(),
                chain_agrees: false,
                source_is_chain: true,
                round_trip: false,
            });
        }
        pairs.push(outcome(label, big_f, &f, &trd, &tot, &m)?);
        backward.push(f);
    }

    let x = Arc::new(odd_line());
    let x_trd = Arc::new(toroidify(&x, k, false)?);
    let x_target = Arc::new(koszul_extension(&x, k)?);
    let x_tot = totalize(&x_target, k)?;
    let mut odd = Vec::new();
    for n in 0..samples {
        let big_f = random_odd_line_map(&x_trd, &x_target, &mut rng)?;
        let f = hom_backward(&x, &big_f, &x_tot)?;
        let label = format!("odd line {n}");
        pairs.push(outcome(&label, &big_f, &f, &x_trd, &x_tot, &x)?);
        odd.push((label, big_f, f));
    }

    let rows = homs
        .iter()
        .zip(&backward)
        .map(|((label, big_f), f)| (label.clone(), f, big_f))
        .chain(
            odd.iter()
                .map(|(label, big_f, f)| (label.clone(), f, big_f)),
        );
    let correspondence = truncated_correspondence(rows)?;
    Ok(AdjunctionSummary {
        k,
        seed,
        pairs,
        correspondence,
    })
}

fn outcome(
    label: &str,
    big_f: &DgcaHom,
    f: &DgcaHom,
    trd: &Arc<crate::dgca::Dgca>,
    tot: &super::Totalization,
    m: &Arc<crate::dgca::Dgca>,
) -> Result<PairOutcome> {
    let forward = hom_forward(f, trd, tot)?;
    let again = hom_backward(m, &forward, tot)?;
    let source_is_chain = big_f.is_chain_map().passed();
    Ok(PairOutcome {
        label: label.to_string(),
        chain_agrees: source_is_chain == f.is_chain_map().passed(),
        source_is_chain,
        round_trip: same_hom(&forward, big_f) && same_hom(&again, f),
    })
}
