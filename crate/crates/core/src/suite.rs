//! One-shot reproduction of every check, with configurable size ceilings.
//!
//! Failures are recorded in the report rather than returned as errors; an
//! `Err` from a library call is recorded as a failed check with its message.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dvir::dvir_check_ring;
use crate::error::{Error, Result};
use crate::generation_checker::{check_generation, GenerationReport};
use crate::hook_generation::{verify_decomposition, HookGenerator, Witness};
use crate::partitions::{hook_partition, level};
use crate::reflection_groups::{
    bn_experiments_with_ceiling, g12::g12_generation_check_with_ceiling, validate_rules, BnExperimentReport,
    G12Set, ReflectionRep,
};
use crate::rep_ring::RepRing;

/// Tolerance for the floating-point `G(d,1,2)` oracle.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ceilings {
    pub sym: usize,
    pub b: usize,
    pub g12: usize,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings { sym: 8, b: 5, g12: 8 }
    }
}

impl Ceilings {
    /// Rejects ceilings above the defaults.
    pub fn validate(&self) -> Result<()> {
        let max = Ceilings::default();
        for (what, n, top) in [
            ("symmetric group ceiling", self.sym, max.sym),
            ("hyperoctahedral ceiling", self.b, max.b),
            ("G(d,1,2) ceiling", self.g12, max.g12),
        ] {
            if n > top {
                return Err(Error::Ceiling { what, n, max: top });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub ceilings: Ceilings,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

/// Generation check of `R(S_n)` by the hooks `Λ^k V`, `0 ≤ k < n`.
pub fn sym_hook_generation(ring: &RepRing) -> Result<GenerationReport> {
    check_generation(&ring.ring_data()?, &sym_hook_generators(ring)?)
}

pub fn sym_hook_generators(ring: &RepRing) -> Result<Vec<Vec<i64>>> {
    let n = ring.n();
    let m = ring.partitions().len();
    (0..n.max(1))
        .map(|k| {
            let i = ring.table().index_of(&hook_partition(n, k as i64)?)?;
            let mut v = vec![0; m];
            v[i] = 1;
            Ok(v)
        })
        .collect()
}

fn record(checks: &mut Vec<CheckResult>, name: String, outcome: Result<(bool, String)>) {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    checks.push(CheckResult { name, passed, detail });
}

fn level_check(ring: &RepRing) -> Result<(bool, String)> {
    let levels = ring.levels_bruteforce()?;
    let bad: Vec<String> = ring
        .partitions()
        .iter()
        .zip(&levels)
        .filter(|(l, &r)| level(l) != r)
        .map(|(l, r)| format!("{l}: {r}"))
        .collect();
    Ok((bad.is_empty(), format!("{} partitions, mismatches: {bad:?}", levels.len())))
}

fn hook_round_trip(ring: &RepRing) -> Result<(bool, String)> {
    let gen = HookGenerator::new(ring);
    let mut failures = Vec::new();
    let mut steps = 0;
    for lambda in ring.partitions() {
        if let Witness::Step(_) = gen.witness(lambda)? {
            steps += 1;
        }
        let e = gen.hook_decompose(lambda)?;
        if !verify_decomposition(ring.table(), lambda, &e)? {
            failures.push(lambda.to_string());
        }
    }
    Ok((
        failures.is_empty(),
        format!("{} partitions, {steps} witness steps, failures: {failures:?}", ring.partitions().len()),
    ))
}

fn order_independence(ring: &RepRing, seed: u64) -> Result<(bool, String)> {
    let data = ring.ring_data()?;
    let mut gens = sym_hook_generators(ring)?;
    let reference = crate::generation_checker::saturate(&data, &gens)?.lattice;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        gens.shuffle(&mut rng);
        if crate::generation_checker::saturate(&data, &gens)?.lattice != reference {
            return Ok((false, format!("order {gens:?} changed the fixed point")));
        }
    }
    Ok((true, "3 shuffled reruns agree".into()))
}

fn bn_check(r: &BnExperimentReport) -> (bool, String) {
    let steinberg = r
        .exterior
        .iter()
        .filter(|e| e.rep == ReflectionRep::V)
        .all(|e| e.terms.len() == 1 && e.terms[0].coeff == 1);
    let hooks_ok = r.n < 4 || !r.hooks.full;
    let passed = steinberg && hooks_ok && r.hooks_plus_u.full;
    (
        passed,
        format!(
            "hooks: full={} rank={} index={:?}; hooks+U: full={}; exterior powers of V irreducible: {steinberg}",
            r.hooks.full, r.hooks.rank, r.hooks.index, r.hooks_plus_u.full
        ),
    )
}

/// Runs every check up to the given ceilings.
pub fn verify_all(ceilings: Ceilings, seed: u64) -> Result<SuiteReport> {
    ceilings.validate()?;
    let mut checks = Vec::new();
    for n in 1..=ceilings.sym {
        let ring = match RepRing::new(n) {
            Ok(r) => r,
            Err(e) => {
                record(&mut checks, format!("S_{n} table"), Err(e));
                continue;
            }
        };
        record(&mut checks, format!("S_{n} levels"), level_check(&ring));
        record(
            &mut checks,
            format!("S_{n} graded products"),
            dvir_check_ring(&ring).map(|r| {
                (
                    r.passed(),
                    format!(
                        "{} graded triples, {} vanishing triples, {} mismatches",
                        r.triples_checked, r.vanishing_checked, r.mismatches
                    ),
                )
            }),
        );
        record(&mut checks, format!("S_{n} hook round trip"), hook_round_trip(&ring));
        record(
            &mut checks,
            format!("S_{n} generated by hooks"),
            sym_hook_generation(&ring).map(|r| (r.full, format!("{r:?}"))),
        );
        if n == ceilings.sym {
            record(&mut checks, format!("S_{n} generator order"), order_independence(&ring, seed));
        }
    }
    for d in 1..=ceilings.g12 {
        record(
            &mut checks,
            format!("G({d},1,2) float oracle"),
            validate_rules(d).map(|v| {
                let ok = v.passed(FLOAT_TOLERANCE);
                let verdict = if ok { "within" } else { "outside" };
                (ok, format!("order {}, all structure constants {verdict} tolerance 1e-9", v.group_order))
            }),
        );
        record(
            &mut checks,
            format!("G({d},1,2) generated by V and linears"),
            g12_generation_check_with_ceiling(d, G12Set::VPlusLinear, ceilings.g12)
                .map(|r| (r.generation.full, format!("{:?}", r.generation))),
        );
        if d >= 2 {
            record(
                &mut checks,
                format!("G({d},1,2) not generated by linears"),
                g12_generation_check_with_ceiling(d, G12Set::Linear, ceilings.g12)
                    .map(|r| (!r.generation.full, format!("{:?}", r.generation))),
            );
        }
    }
    for n in 1..=ceilings.b {
        record(
            &mut checks,
            format!("B_{n} exterior powers"),
            bn_experiments_with_ceiling(n, ceilings.b).map(|r| bn_check(&r)),
        );
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        ceilings,
        seed,
        checks,
        passed,
    })
}
