//! Cross-validation of Kronecker coefficients against Littlewood–Richardson
//! coefficients of the first-row-deleted partitions.
//!
//! For `λ, μ, ν ⊢ n` with `level(ν) = level(λ) + level(μ)`,
//! `C_{λμν} = L_{θ(λ),θ(μ),θ(ν)}`; and `C_{λμν} = 0` once
//! `level(ν) > level(λ) + level(μ)`. The left side comes from
//! [`RepRing`] (characters), the right side from
//! [`lr_coefficient`] (tableaux).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::littlewood_richardson::lr_coefficient;
use crate::partitions::{level, theta, Partition};
use crate::rep_ring::RepRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DvirMismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub kronecker: i64,
    /// `None` for triples above the top level, where the expected value is 0.
    pub littlewood_richardson: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DvirReport {
    pub n: usize,
    /// Triples with `level(ν) = level(λ) + level(μ)`.
    pub triples_checked: usize,
    /// Triples with `level(ν) > level(λ) + level(μ)`.
    pub vanishing_checked: usize,
    pub mismatches: usize,
    pub mismatch_details: Vec<DvirMismatch>,
}

impl DvirReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Exhaustive check over all triples of partitions of `n`.
pub fn dvir_check(n: usize) -> Result<DvirReport> {
    let ring = RepRing::new(n)?;
    dvir_check_ring(&ring)
}

pub fn dvir_check_ring(ring: &RepRing) -> Result<DvirReport> {
    let parts = ring.partitions();
    let thetas: Vec<Partition> = parts.iter().map(theta).collect();
    let levels: Vec<usize> = parts.iter().map(level).collect();
    let m = parts.len();

    let per_lambda = (0..m)
        .into_par_iter()
        .map(|i| -> Result<(usize, usize, Vec<DvirMismatch>)> {
            let mut graded = 0;
            let mut vanishing = 0;
            let mut bad = Vec::new();
            for j in 0..m {
                let row = ring.kronecker_indices(i, j)?;
                for k in 0..m {
                    let c = row[k];
                    let top = levels[i] + levels[j];
                    let expected = if levels[k] == top {
                        graded += 1;
                        Some(lr_coefficient(&thetas[i], &thetas[j], &thetas[k]))
                    } else if levels[k] > top {
                        vanishing += 1;
                        None
                    } else {
                        continue;
                    };
                    let ok = match expected {
                        Some(l) => c >= 0 && c as u64 == l,
                        None => c == 0,
                    };
                    if !ok {
                        bad.push(DvirMismatch {
                            lambda: parts[i].clone(),
                            mu: parts[j].clone(),
                            nu: parts[k].clone(),
                            kronecker: c,
                            littlewood_richardson: expected,
                        });
                    }
                }
            }
            Ok((graded, vanishing, bad))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = DvirReport {
        n: ring.n(),
        triples_checked: 0,
        vanishing_checked: 0,
        mismatches: 0,
        mismatch_details: Vec::new(),
    };
    // collect() preserves index order, so the report is schedule independent.
    for (g, v, bad) in per_lambda {
        report.triples_checked += g;
        report.vanishing_checked += v;
        report.mismatch_details.extend(bad);
    }
    report.mismatches = report.mismatch_details.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for n in 1..=5 {
            let r = dvir_check(n).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.triples_checked > 0);
        }
    }

    #[test]
    fn trivial_triple() {
        let ring = RepRing::new(4).unwrap();
        for l in ring.partitions() {
            let c = ring.structure_constant(l, &Partition::row(4), l).unwrap();
            let t = theta(l);
            assert_eq!(c, 1);
            assert_eq!(lr_coefficient(&t, &Partition::empty(), &t), 1);
        }
    }
}
