//! Per-rank summary: Cartan matrix, determinant, roots, parabolic split, model size.

use ekk_core::action::ALL_CHECKS;
use ekk_core::lie::{
    cartan_matrix, parabolic_split, positive_roots, small_rank_dimension, split_component_dimension,
};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::commands::{generator_count, verify, CommandError, Outcome};
use crate::Format;

/// Ranks verified by default; larger ones need `--verify-all`.
const DEFAULT_VERIFY_LIMIT: usize = 8;

#[derive(Serialize, Debug)]
pub struct Row {
    pub k: usize,
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
    pub det: Option<i64>,
    pub positive_roots: Option<usize>,
    /// Dimension of the Levi factor 𝔪 (including its Cartan part).
    pub levi: Option<usize>,
    pub a: usize,
    pub n: Option<usize>,
    /// `dim 𝔤ₖ` when finite.
    pub algebra: Option<usize>,
    pub generators: usize,
    pub verification: Option<&'static str>,
}

fn row(k: usize, verify_all: bool) -> Result<Row, CommandError> {
    let mut r = Row {
        k,
        cartan_matrix: None,
        det: None,
        positive_roots: None,
        levi: None,
        a: split_component_dimension(k),
        n: None,
        algebra: None,
        generators: generator_count(k)?,
        verification: None,
    };
    if k <= 2 {
        r.algebra = Some(small_rank_dimension(k)?);
    } else {
        let c = cartan_matrix(k)?;
        r.det = c.determinant().to_i64();
        r.cartan_matrix = Some(c.entries);
    }
    if (3..=8).contains(&k) {
        let p = parabolic_split(k)?;
        r.positive_roots = Some(positive_roots(k)?.positive_roots.len());
        r.levi = Some(p.dim_m);
        r.a = p.dim_a;
        r.n = Some(p.dim_n);
        r.algebra = Some(p.total());
    }
    if k <= DEFAULT_VERIFY_LIMIT || verify_all {
        let o = verify(k, &ALL_CHECKS, Format::Json)?;
        r.verification = Some(if o.passed { "pass" } else { "fail" });
    }
    Ok(r)
}

fn cell<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn run(ranks: &[usize], verify_all: bool, f: Format) -> Result<Outcome, CommandError> {
    let rows = ranks
        .iter()
        .map(|&k| row(k, verify_all))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = rows.iter().all(|r| r.verification != Some("fail"));
    let mut out = Outcome {
        passed,
        payload: serde_json::to_value(&rows).expect("rows serialize"),
        rendered: serde_json::to_string(&rows).expect("rows serialize"),
    };
    match f {
        Format::Json => {}
        Format::Text => {
            let mut t = format!(
                "{:>2} {:>4} {:>5} {:>5} {:>2} {:>4} {:>5} {:>6} {:>6}\n",
                "k", "det", "roots", "levi", "a", "n", "dim", "gens", "verify"
            );
            for r in &rows {
                t.push_str(&format!(
                    "{:>2} {:>4} {:>5} {:>5} {:>2} {:>4} {:>5} {:>6} {:>6}\n",
                    r.k,
                    cell(&r.det),
                    cell(&r.positive_roots),
                    cell(&r.levi),
                    r.a,
                    cell(&r.n),
                    cell(&r.algebra),
                    r.generators,
                    r.verification.unwrap_or("-")
                ));
            }
            for r in &rows {
                if let Some(c) = &r.cartan_matrix {
                    t.push_str(&format!("\nC(E{}):\n", r.k));
                    for line in c {
                        let cells: Vec<String> = line.iter().map(|x| format!("{x:>2}")).collect();
                        t.push_str(&format!("  {}\n", cells.join(" ")));
                    }
                }
            }
            out.rendered = t;
        }
        Format::Latex => {
            let mut t = String::from(
                "\\begin{tabular}{rrrrrrrr}\n$k$ & $\\det C$ & $|\\Delta^+|$ & $\\dim\\mathfrak{m}$ & $\\dim\\mathfrak{a}$ & $\\dim\\mathfrak{n}$ & $\\dim\\mathfrak{g}_k$ & generators \\\\\n\\hline\n",
            );
            for r in &rows {
                t.push_str(&format!(
                    "{} & {} & {} & {} & {} & {} & {} & {} \\\\\n",
                    r.k,
                    cell(&r.det),
                    cell(&r.positive_roots),
                    cell(&r.levi),
                    r.a,
                    cell(&r.n),
                    r.algebra
                        .map_or_else(|| "$\\infty$".to_string(), |d| d.to_string()),
                    r.generators
                ));
            }
            t.push_str("\\end{tabular}\n");
            out.rendered = t;
        }
    }
    Ok(out)
}
