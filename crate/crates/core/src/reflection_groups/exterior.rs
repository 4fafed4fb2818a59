//! Characters of exterior powers via `Σ_k χ_{Λ^k}(g) t^k = det(1 + t g)`.
//!
//! A cycle of length `l` whose `l`-th power acts as `ε = ±1` has eigenvalues
//! the roots of `x^l = ε` and contributes `∏ (1 + x t) = 1 - ε(-t)^l`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::bn::SignedCycleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ReflectionRep {
    /// Signed permutation representation, dimension `n`.
    V,
    /// Standard representation of `S_n` pulled back to `B_n`, dimension `n - 1`.
    U,
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1 - ε(-t)^l`.
fn cycle_factor(l: usize, eps: i64) -> Vec<i64> {
    let mut f = vec![0; l + 1];
    f[0] = 1;
    f[l] = if l.is_multiple_of(2) { -eps } else { eps };
    f
}

/// Exact division by `1 + t`; a nonzero remainder is reported as an error.
pub fn divide_by_one_plus_t(p: &[i64]) -> Result<Vec<i64>> {
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let mut q = vec![0; p.len() - 1];
    let mut carry = 0;
    for (i, slot) in q.iter_mut().enumerate() {
        carry = p[i] - carry;
        *slot = carry;
    }
    if p[p.len() - 1] != carry {
        return Err(Error::Consistency(format!("{p:?} is not divisible by 1+t")));
    }
    Ok(q)
}

/// `det(1 + t g)` for a permutation of cycle type `rho`.
pub fn permutation_exterior(rho: &Partition) -> Vec<i64> {
    rho.parts()
        .iter()
        .fold(vec![1], |acc, &l| poly_mul(&acc, &cycle_factor(l, 1)))
}

/// `χ_{Λ^k V}` for the standard representation of `S_n`, `k = 0..n-1`.
pub fn sym_standard_exterior(rho: &Partition) -> Result<Vec<i64>> {
    if rho.is_empty() {
        return Err(Error::TooSmall {
            op: "standard representation",
            n: 0,
            min: 1,
        });
    }
    divide_by_one_plus_t(&permutation_exterior(rho))
}

/// `χ_{Λ^k rep}(class)` for `k = 0..=dim rep`.
pub fn exterior_power_characters(rep: ReflectionRep, class: &SignedCycleType, n: usize) -> Result<Vec<i64>> {
    if class.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: class.size(),
        });
    }
    match rep {
        ReflectionRep::V => {
            let pos = class.positive.parts().iter().map(|&l| cycle_factor(l, 1));
            let neg = class.negative.parts().iter().map(|&l| cycle_factor(l, -1));
            Ok(pos.chain(neg).fold(vec![1], |acc, f| poly_mul(&acc, &f)))
        }
        ReflectionRep::U => {
            if n == 0 {
                return Err(Error::TooSmall {
                    op: "pulled-back standard representation",
                    n,
                    min: 1,
                });
            }
            divide_by_one_plus_t(&permutation_exterior(&class.positive.union(&class.negative)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn identity_gives_binomials() {
        let id = SignedCycleType::identity(4);
        assert_eq!(exterior_power_characters(ReflectionRep::V, &id, 4).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(exterior_power_characters(ReflectionRep::U, &id, 4).unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn negative_fixed_point() {
        let c = SignedCycleType::new(Partition::empty(), p(&[1]));
        assert_eq!(exterior_power_characters(ReflectionRep::V, &c, 1).unwrap(), vec![1, -1]);
    }

    #[test]
    fn transposition_in_s3() {
        // Standard rep of S_3 on a transposition has eigenvalues 1, -1.
        assert_eq!(sym_standard_exterior(&p(&[2, 1])).unwrap(), vec![1, 0, -1]);
        assert_eq!(sym_standard_exterior(&p(&[3])).unwrap(), vec![1, -1, 1]);
    }

    #[test]
    fn division_rejects_remainder() {
        assert_eq!(divide_by_one_plus_t(&[1, 2, 1]).unwrap(), vec![1, 1]);
        assert!(divide_by_one_plus_t(&[1, 1, 1]).is_err());
        assert!(exterior_power_characters(ReflectionRep::V, &SignedCycleType::identity(2), 3).is_err());
    }
}
