//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::time::{Duration, Instant};

use hookring::dvir::dvir_check;
use hookring::hook_generation::{verify_decomposition, HookGenerator, Witness};
use hookring::littlewood_richardson::lr_coefficient;
use hookring::partitions::{all_partitions, boundary_size, interior, level, Partition};
use hookring::reflection_groups::g12::{g12_generation_check, g12_labels, g12_tensor, validate_rules, G12Set};
use hookring::reflection_groups::{bn_experiments, BnCharacterTable};
use hookring::rep_ring::RepRing;
use hookring::suite::{sym_hook_generation, FLOAT_TOLERANCE};
use hookring::{CharacterTable, VirtualCharacter};

const THEOREM_MAX_N: usize = 8;
const THEOREM_BUDGET: Duration = Duration::from_secs(30);
const LEVEL_MAX_N: usize = 6;
const LEVEL_BUDGET: Duration = Duration::from_secs(60);
const GRADED_MAX_N: usize = 7;
const GRADED_BUDGET: Duration = Duration::from_secs(60);
const LR_ANCHOR_MAX: usize = 7;
const ROUND_TRIP_MAX_N: usize = 8;
const ROUND_TRIP_BUDGET: Duration = Duration::from_secs(60);
const RANK_TWO_D: std::ops::RangeInclusive<usize> = 2..=8;
const RANK_TWO_BUDGET: Duration = Duration::from_secs(10);
const BN_MAX_N: usize = 5;
const BN_BUDGET: Duration = Duration::from_secs(60);
const INTEGRALITY_SYM_MAX_N: usize = 8;

type Outcome = Result<(), String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let (Ok(()), Some(b)) = (&out, budget) {
        if elapsed > b {
            out = Err(format!("took {elapsed:?}, budget {b:?}"));
        }
    }
    (out, elapsed)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn hooks_generate() -> Outcome {
    for n in 1..=THEOREM_MAX_N {
        let ring = RepRing::new(n).map_err(err)?;
        let r = sym_hook_generation(&ring).map_err(err)?;
        if !r.full {
            return Err(format!("S_{n}: {r:?}"));
        }
    }
    Ok(())
}

fn levels_both_directions() -> Outcome {
    for n in 2..=LEVEL_MAX_N {
        let ring = RepRing::new(n).map_err(err)?;
        let v = ring.standard().map_err(err)?;
        let mut powers = vec![VirtualCharacter::irreducible(Partition::row(n))];
        for r in 1..n {
            let next = ring.kronecker(&powers[r - 1], &v).map_err(err)?;
            powers.push(next);
        }
        for lambda in ring.partitions() {
            let r = level(lambda);
            if powers[r].coeff(lambda) <= 0 {
                return Err(format!("{lambda} missing from V^{r}"));
            }
            if r > 0 && powers[r - 1].coeff(lambda) != 0 {
                return Err(format!("{lambda} already in V^{}", r - 1));
            }
            if ring.level_bruteforce(lambda).map_err(err)? != r {
                return Err(format!("brute-force level of {lambda}"));
            }
        }
    }
    Ok(())
}

fn graded_products() -> Outcome {
    for n in 1..=GRADED_MAX_N {
        let r = dvir_check(n).map_err(err)?;
        if !r.passed() {
            return Err(format!("n={n}: {:?}", r.mismatch_details.first()));
        }
    }
    Ok(())
}

fn lr_anchors() -> Outcome {
    let l = lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]"));
    if l != 2 {
        return Err(format!("L([2,1],[2,1],[3,2,1]) = {l}"));
    }
    for size in 1..=LR_ANCHOR_MAX {
        for alpha in all_partitions(size) {
            let inner = interior(&alpha);
            let column = Partition::column(boundary_size(&alpha));
            let c = lr_coefficient(&inner, &column, &alpha);
            if c != 1 {
                return Err(format!("L({inner},{column},{alpha}) = {c}"));
            }
        }
    }
    Ok(())
}

fn round_trip() -> Outcome {
    for n in 1..=ROUND_TRIP_MAX_N {
        let ring = RepRing::new(n).map_err(err)?;
        let gen = HookGenerator::new(&ring);
        for lambda in ring.partitions() {
            if let Witness::Step(w) = gen.witness(lambda).map_err(err)? {
                let product = ring
                    .kronecker_irreducible(&w.lambda_hat, &hookring::partitions::hook_partition(n, w.k as i64).map_err(err)?)
                    .map_err(err)?;
                if product.coeff(lambda) != 1 {
                    return Err(format!("{lambda} has multiplicity {}", product.coeff(lambda)));
                }
            } else if !lambda.is_hook() {
                return Err(format!("{lambda} treated as a hook"));
            }
            let e = gen.hook_decompose(lambda).map_err(err)?;
            if !verify_decomposition(ring.table(), lambda, &e).map_err(err)? {
                return Err(format!("{lambda}: {e}"));
            }
        }
    }
    Ok(())
}

fn rank_two() -> Outcome {
    for d in RANK_TWO_D {
        let full = g12_generation_check(d, G12Set::VPlusLinear).map_err(err)?;
        if !full.generation.full {
            return Err(format!("d={d} with V: {:?}", full.generation));
        }
        let linear = g12_generation_check(d, G12Set::Linear).map_err(err)?;
        if linear.generation.full {
            return Err(format!("d={d} linear only is full"));
        }
    }
    Ok(())
}

fn bn_observations() -> Outcome {
    for n in 1..=BN_MAX_N {
        let r = bn_experiments(n).map_err(err)?;
        if n >= 4 && r.hooks.full {
            return Err(format!("B_{n}: exterior powers of V alone generate"));
        }
        if !r.hooks_plus_u.full {
            return Err(format!("B_{n}: with U: {:?}", r.hooks_plus_u));
        }
    }
    Ok(())
}

fn integrality() -> Outcome {
    for n in 0..=INTEGRALITY_SYM_MAX_N {
        let t = CharacterTable::new(n).map_err(err)?;
        for i in 0..t.len() {
            let f = t.character(&t.partitions()[i]).map_err(err)?;
            if t.inner_product(&f, &f).map_err(err)? != 1 {
                return Err(format!("S_{n} row {i} is not a unit vector"));
            }
        }
    }
    for n in 0..=BN_MAX_N {
        let t = BnCharacterTable::new(n).map_err(err)?;
        for i in 0..t.len() {
            if t.inner_product(t.row(i), t.row(i)).map_err(err)? != 1 {
                return Err(format!("B_{n} row {i} is not a unit vector"));
            }
        }
    }
    for d in 1..=*RANK_TWO_D.end() {
        let v = validate_rules(d).map_err(err)?;
        if !v.passed(FLOAT_TOLERANCE) {
            return Err(format!("{v:?}"));
        }
        let labels = g12_labels(d);
        for &x in &labels {
            for &y in &labels {
                let prod = g12_tensor(x, y, d).map_err(err)?;
                if prod.iter().any(|(_, c)| c < 0) {
                    return Err(format!("{x} * {y} = {prod}"));
                }
            }
        }
    }
    Ok(())
}

/// The Kronecker side must never see tableau code, and vice versa.
fn independence() -> Outcome {
    let lr = include_str!("../src/littlewood_richardson.rs");
    let chars = include_str!("../src/sym_characters.rs");
    let ring = include_str!("../src/rep_ring.rs");
    for needle in ["sym_characters", "rep_ring", "CharacterTable", "mn_character", "RepRing"] {
        if lr.contains(needle) {
            return Err(format!("littlewood_richardson.rs mentions {needle}"));
        }
    }
    for (name, src) in [("sym_characters.rs", chars), ("rep_ring.rs", ring)] {
        for needle in ["littlewood_richardson", "lr_coefficient", "enumerate_expansions", "dvir"] {
            if src.contains(needle) {
                return Err(format!("{name} mentions {needle}"));
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("hooks generate R(S_n), n <= 8", Some(THEOREM_BUDGET), hooks_generate),
        ("level = n - first row, both directions, n <= 6", Some(LEVEL_BUDGET), levels_both_directions),
        ("graded products match LR, n <= 7", Some(GRADED_BUDGET), graded_products),
        ("LR anchor values", None, lr_anchors),
        ("hook decomposition round trip, n <= 8", Some(ROUND_TRIP_BUDGET), round_trip),
        ("G(d,1,2) generated by V and linears, 2 <= d <= 8", Some(RANK_TWO_BUDGET), rank_two),
        ("B_n exterior power observations, n <= 5", Some(BN_BUDGET), bn_observations),
        ("exact integrality and float oracle", None, integrality),
        ("character and tableau pipelines independent", None, independence),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let (outcome, elapsed) = timed(budget, f);
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2?})", i + 1, elapsed),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({:.2?}): {e}", i + 1, elapsed);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
