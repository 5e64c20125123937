use std::io::Write;

use rand::Rng;
use serde::Serialize;

use super::spectrum::{verify_dimension_cyclicity, Verdict};
use crate::error::{Error, Result};
use crate::opcore::{NormTag, PositiveMatrixOperator};
use crate::par::{map_indexed, Execution};
use crate::random::{random_positive_contraction, trial_rng};

/// Recorded in every probe header.
pub const PROBE_NOTE: &str = "finite-dimensional positive contractions have a root-of-unity \
peripheral spectrum (block-triangular Frobenius normal form with irreducible diagonal blocks), \
so these trials are consistency evidence and cannot settle the infinite-dimensional question";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeHeader {
    pub trials: usize,
    pub dim_max: usize,
    pub seed: u64,
    pub note: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRecord {
    pub trial: usize,
    pub dim: usize,
    /// `(order, geometric multiplicity)` of root-of-unity eigenvalues.
    pub orders: Vec<(u64, usize)>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeSummary {
    pub header: ProbeHeader,
    pub records: Vec<ProbeRecord>,
    pub violations: usize,
}

impl ProbeSummary {
    /// Header line followed by one record per trial, in trial order.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        serde_json::to_writer(&mut w, &serde_json::json!({ "header": self.header }))?;
        writeln!(w)?;
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Random positive sup-norm contractions of size `1..=dim_max`, each
/// checked for a root-of-unity boundary spectrum and the dimension estimate.
pub fn probe_random_contractions(
    trials: usize,
    dim_max: usize,
    seed: u64,
    exec: Execution,
) -> Result<ProbeSummary> {
    if trials == 0 || dim_max == 0 {
        return Err(Error::InvalidInput("trials and dim_max must be at least 1".into()));
    }
    let records: Vec<Result<ProbeRecord>> = map_indexed(exec, trials, |trial| {
        let mut rng = trial_rng(seed, trial as u64);
        let dim = rng.gen_range(1..=dim_max);
        let m = random_positive_contraction(&mut rng, dim);
        let t = PositiveMatrixOperator::new(m, NormTag::Sup)?;
        let report = verify_dimension_cyclicity(&t)?;
        Ok(ProbeRecord {
            trial,
            dim,
            orders: report
                .spectrum
                .orders
                .iter()
                .map(|o| (o.order, o.multiplicity))
                .collect(),
            verdict: report.verdict,
        })
    });
    let records = records.into_iter().collect::<Result<Vec<_>>>()?;
    let violations = records.iter().filter(|r| r.verdict != Verdict::Pass).count();
    Ok(ProbeSummary {
        header: ProbeHeader {
            trials,
            dim_max,
            seed,
            note: PROBE_NOTE,
        },
        records,
        violations,
    })
}
