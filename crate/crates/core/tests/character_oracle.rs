mod common;

use common::{jacobi_trudi_character, p};
use hookring::partitions::{all_partitions, Partition};
use hookring::sym_characters::{mn_character, CharacterTable};

const ORACLE_MAX_N: usize = 7;
const ORTHOGONALITY_MAX_N: usize = 10;

#[test]
fn murnaghan_nakayama_matches_jacobi_trudi() {
    for n in 0..=ORACLE_MAX_N {
        for lambda in all_partitions(n) {
            for rho in all_partitions(n) {
                assert_eq!(
                    mn_character(&lambda, &rho).unwrap(),
                    jacobi_trudi_character(&lambda, &rho),
                    "chi^{lambda}({rho})"
                );
            }
        }
    }
}

#[test]
fn s4_table() {
    let t = CharacterTable::new(4).unwrap();
    // Classes [4], [3,1], [2,2], [2,1,1], [1^4].
    let expected = [
        ("[4]", [1, 1, 1, 1, 1]),
        ("[3,1]", [-1, 0, -1, 1, 3]),
        ("[2,2]", [0, -1, 2, 0, 2]),
        ("[2,1,1]", [1, 0, -1, -1, 3]),
        ("[1,1,1,1]", [-1, 1, 1, -1, 1]),
    ];
    for (label, row) in expected {
        assert_eq!(t.row(t.index_of(&p(label)).unwrap()), &row, "{label}");
    }
}

#[test]
fn orthogonality() {
    for n in 0..=ORTHOGONALITY_MAX_N {
        let t = CharacterTable::new(n).unwrap();
        let m = t.len();
        for i in 0..m {
            let f = t.character(&t.partitions()[i]).unwrap();
            for j in i..m {
                let g = t.character(&t.partitions()[j]).unwrap();
                assert_eq!(t.inner_product(&f, &g).unwrap(), (i == j) as i64);
            }
        }
        // Column orthogonality: Σ_λ χ^λ(ρ)^2 = z_ρ.
        for c in 0..m {
            let s: i128 = (0..m).map(|i| (t.value(i, c) as i128).pow(2)).sum();
            assert_eq!(s as u128, t.centralizer(c));
        }
    }
}

#[test]
fn identity_column_is_dimension() {
    for n in 1..=10 {
        let id = Partition::column(n);
        for lambda in all_partitions(n) {
            assert_eq!(mn_character(&lambda, &id).unwrap() as u128, lambda.dimension().unwrap());
        }
    }
}

#[test]
fn conjugate_twists_by_sign() {
    for n in 1..=9 {
        for lambda in all_partitions(n) {
            let conj = lambda.conjugate();
            for rho in all_partitions(n) {
                assert_eq!(
                    mn_character(&conj, &rho).unwrap(),
                    rho.cycle_sign() * mn_character(&lambda, &rho).unwrap()
                );
            }
        }
    }
}

#[test]
fn regular_character_decomposes_by_dimension() {
    let t = CharacterTable::new(6).unwrap();
    let reg = t.decompose(&t.regular_character()).unwrap();
    for lambda in t.partitions() {
        assert_eq!(reg.coeff(lambda) as u128, lambda.dimension().unwrap());
    }
}
