mod common;

use common::p;
use hookring::partitions::{all_partitions, level, Partition};
use hookring::rep_ring::{induce, restrict, RepRing};
use hookring::sym_characters::CharacterTable;
use hookring::VirtualCharacter;

const MAX_N: usize = 8;

#[test]
fn dimensions_multiply() {
    for n in 1..=MAX_N {
        let ring = RepRing::new(n).unwrap();
        for a in ring.partitions() {
            for b in ring.partitions() {
                let prod = ring.kronecker_irreducible(a, b).unwrap();
                assert!(prod.is_effective());
                assert_eq!(
                    prod.dimension().unwrap() as u128,
                    a.dimension().unwrap() * b.dimension().unwrap()
                );
            }
        }
    }
}

#[test]
fn structure_constants_are_fully_symmetric() {
    for n in 1..=6 {
        let ring = RepRing::new(n).unwrap();
        let parts = ring.partitions();
        for a in parts {
            for b in parts {
                for c in parts {
                    let x = ring.structure_constant(a, b, c).unwrap();
                    assert_eq!(x, ring.structure_constant(b, c, a).unwrap());
                    assert_eq!(x, ring.structure_constant(b, a, c).unwrap());
                    // Tensoring two factors with the sign representation.
                    assert_eq!(x, ring.structure_constant(&a.conjugate(), &b.conjugate(), c).unwrap());
                }
            }
        }
    }
}

/// Restriction at the level of characters: `ρ ↦ ρ ∪ [1]`.
fn restricted_values(big: &CharacterTable, small: &CharacterTable, lambda: &Partition) -> Vec<i64> {
    let row = big.row(big.index_of(lambda).unwrap());
    small
        .partitions()
        .iter()
        .map(|rho| row[big.index_of(&rho.union(&Partition::row(1))).unwrap()])
        .collect()
}

#[test]
fn branching_matches_characters_and_reciprocity() {
    for n in 2..=MAX_N {
        let big = CharacterTable::new(n).unwrap();
        let small = CharacterTable::new(n - 1).unwrap();
        for lambda in big.partitions() {
            let res = restrict(&VirtualCharacter::irreducible(lambda.clone())).unwrap();
            let values = small.class_function(&res).unwrap();
            assert_eq!(values.values(), restricted_values(&big, &small, lambda).as_slice());
            for mu in small.partitions() {
                let ind = induce(&VirtualCharacter::irreducible(mu.clone())).unwrap();
                assert_eq!(ind.coeff(lambda), res.coeff(mu), "Frobenius reciprocity");
            }
        }
    }
}

#[test]
fn ind_res_is_tensoring_with_permutation_module() {
    for n in 2..=MAX_N {
        let ring = RepRing::new(n).unwrap();
        for lambda in ring.partitions() {
            ring.ind_res(&VirtualCharacter::irreducible(lambda.clone())).unwrap();
        }
    }
}

#[test]
fn level_filtration_is_multiplicative() {
    for n in 2..=MAX_N {
        let ring = RepRing::new(n).unwrap();
        for a in ring.partitions() {
            for b in ring.partitions() {
                for (c, _) in ring.kronecker_irreducible(a, b).unwrap().iter() {
                    assert!(level(c) <= level(a) + level(b));
                }
            }
        }
    }
}

#[test]
fn brute_force_levels() {
    for n in 1..=MAX_N {
        let ring = RepRing::new(n).unwrap();
        let levels = ring.levels_bruteforce().unwrap();
        for (lambda, r) in ring.partitions().iter().zip(levels) {
            assert_eq!(level(lambda), r);
        }
    }
}

#[test]
fn graded_product_example() {
    let ring = RepRing::new(6).unwrap();
    let g = ring.graded_product(&p("[5,1]"), &p("[5,1]")).unwrap();
    let expected =
        VirtualCharacter::from_terms(6, [(p("[4,2]"), 1), (p("[4,1,1]"), 1)]).unwrap();
    assert_eq!(g, expected);
    assert!(all_partitions(6).iter().all(|l| ring.graded_product(&Partition::row(6), l).unwrap()
        == VirtualCharacter::irreducible(l.clone())));
}
