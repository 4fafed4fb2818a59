//! Representation rings of the rank-two groups `G(d,1,2)` and the
//! hyperoctahedral groups `B_n`, and the generation experiments run on them.

pub mod bn;
pub mod exterior;
pub mod g12;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::generation_checker::{check_generation, GenerationReport};

pub use bn::{bn_character, bn_classes, bn_labels, BnCharacterTable, BnLabel, SignedCycleType, DEFAULT_BN_CEILING};
pub use exterior::{exterior_power_characters, ReflectionRep};
pub use g12::{
    g12_generation_check, g12_labels, g12_ring_data, g12_tensor, validate_rules, G12Report, G12Set, G12Validation,
    RankTwoLabel, DEFAULT_G12_CEILING,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnTerm {
    pub label: BnLabel,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorDecomposition {
    pub rep: ReflectionRep,
    pub k: usize,
    pub terms: Vec<BnTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnExperimentReport {
    pub n: usize,
    pub labels: usize,
    pub exterior: Vec<ExteriorDecomposition>,
    /// Generated by the `Λ^k V`.
    pub hooks: GenerationReport,
    /// Generated by the `Λ^k V` and the `Λ^k U`.
    pub hooks_plus_u: GenerationReport,
}

/// Coefficient vectors (in label order) of `Λ^k rep`, `k = 0..=dim`.
pub fn exterior_coefficients(table: &BnCharacterTable, rep: ReflectionRep) -> Result<Vec<Vec<i64>>> {
    let n = table.n();
    let per_class = table
        .classes()
        .iter()
        .map(|c| exterior_power_characters(rep, c, n))
        .collect::<Result<Vec<_>>>()?;
    let degree = per_class.first().map_or(0, |v| v.len());
    (0..degree)
        .map(|k| {
            let f: Vec<i64> = per_class.iter().map(|v| v[k]).collect();
            table.coefficients(&f)
        })
        .collect()
}

pub fn bn_experiments(n: usize) -> Result<BnExperimentReport> {
    bn_experiments_with_ceiling(n, DEFAULT_BN_CEILING)
}

pub fn bn_experiments_with_ceiling(n: usize, ceiling: usize) -> Result<BnExperimentReport> {
    let table = BnCharacterTable::with_ceiling(n, ceiling)?;
    let data = table.ring_data()?;
    let v = exterior_coefficients(&table, ReflectionRep::V)?;
    // U only exists for n >= 1; for n = 0 the V list already is the unit.
    let u = if n >= 1 {
        exterior_coefficients(&table, ReflectionRep::U)?
    } else {
        Vec::new()
    };

    let mut exterior = Vec::new();
    for (rep, list) in [(ReflectionRep::V, &v), (ReflectionRep::U, &u)] {
        for (k, coeffs) in list.iter().enumerate() {
            let terms = table
                .labels()
                .iter()
                .zip(coeffs)
                .filter(|(_, &c)| c != 0)
                .map(|(l, &c)| BnTerm {
                    label: l.clone(),
                    coeff: c,
                })
                .collect();
            exterior.push(ExteriorDecomposition { rep, k, terms });
        }
    }

    let hooks = check_generation(&data, &v)?;
    let both: Vec<Vec<i64>> = v.iter().chain(&u).cloned().collect();
    let hooks_plus_u = check_generation(&data, &both)?;
    Ok(BnExperimentReport {
        n,
        labels: table.len(),
        exterior,
        hooks,
        hooks_plus_u,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b4_observations() {
        let r = bn_experiments(4).unwrap();
        assert!(!r.hooks.full);
        assert!(r.hooks_plus_u.full);
    }

    #[test]
    fn exterior_powers_of_v_are_irreducible() {
        for n in 1..=4 {
            let t = BnCharacterTable::new(n).unwrap();
            for coeffs in exterior_coefficients(&t, ReflectionRep::V).unwrap() {
                let nonzero: Vec<_> = coeffs.iter().filter(|&&c| c != 0).collect();
                assert_eq!(nonzero, vec![&1]);
            }
        }
    }

    #[test]
    fn small_cases_run() {
        for n in 0..=3 {
            let r = bn_experiments(n).unwrap();
            assert!(r.hooks_plus_u.full, "n={n}");
        }
    }
}
