//! Exact character theory of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule. Rim hooks are removed on the
//! beta-set (abacus) of a partition: a rim hook of length `r` corresponds to
//! moving one bead from position `b` to the free position `b - r`, with sign
//! `(-1)^(beads strictly between)`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{narrow, CheckedExt, Error, Result};
use crate::partitions::{all_partitions, centralizer_order, factorial, Partition};
use crate::virtual_character::VirtualCharacter;

/// Largest `n` for which a full character table is built unless overridden.
pub const DEFAULT_SYM_CEILING: usize = 12;

thread_local! {
    static MN_MEMO: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// All ways to remove a rim hook of length `r`, with their signs.
fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let beta = beta_set(lambda);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((from_beta_set(moved), sign));
    }
    out
}

fn mn_rec(lambda: &Partition, rho: &[usize]) -> Result<i64> {
    let Some((&r, rest)) = rho.split_first() else {
        return Ok(if lambda.is_empty() { 1 } else { 0 });
    };
    let key = (lambda.clone(), Partition::from_sorted_unchecked(rho.to_vec()));
    if let Some(v) = MN_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return Ok(v);
    }
    let mut total: i64 = 0;
    for (mu, sign) in remove_rim_hooks(lambda, r) {
        let v = mn_rec(&mu, rest)?;
        total = total.checked_add(sign * v).or_overflow("Murnaghan-Nakayama")?;
    }
    MN_MEMO.with(|m| m.borrow_mut().insert(key, total));
    Ok(total)
}

/// `χ_λ(ρ)`, the irreducible character `λ` on the class of cycle type `ρ`.
///
/// The memo table is per thread, so concurrent callers never share state.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: rho.size(),
        });
    }
    mn_rec(lambda, rho.parts())
}

/// A class function of `S_n`, stored densely in the class order of
/// [`all_partitions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        let classes = all_partitions(n).len();
        if values.len() != classes {
            return Err(Error::SizeMismatch {
                expected: classes,
                found: values.len(),
            });
        }
        Ok(ClassFunction { n, values })
    }

    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: vec![0; all_partitions(n).len()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn pointwise_product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_n(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_mul(*b).or_overflow("class function product"))
            .collect::<Result<_>>()?;
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add_scaled(&mut self, other: &ClassFunction, factor: i64) -> Result<()> {
        self.check_n(other)?;
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            let t = b.checked_mul(factor).or_overflow("class function sum")?;
            *a = a.checked_add(t).or_overflow("class function sum")?;
        }
        Ok(())
    }

    fn check_n(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

/// The full character table of `S_n`: rows are irreducibles, columns cycle
/// types, both in [`all_partitions`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<i64>,
    centralizers: Vec<u128>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_ceiling(n, DEFAULT_SYM_CEILING)
    }

    pub fn with_ceiling(n: usize, ceiling: usize) -> Result<Self> {
        if n > ceiling {
            return Err(Error::Ceiling {
                what: "symmetric group character table",
                n,
                max: ceiling,
            });
        }
        let partitions = all_partitions(n);
        let mut values = Vec::with_capacity(partitions.len() * partitions.len());
        for lambda in &partitions {
            for rho in &partitions {
                values.push(mn_character(lambda, rho)?);
            }
        }
        let centralizers = partitions.iter().map(centralizer_order).collect();
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(CharacterTable {
            n,
            partitions,
            index,
            values,
            centralizers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Irreducible labels, which are also the class labels.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or_else(|| {
            if p.size() != self.n {
                Error::SizeMismatch {
                    expected: self.n,
                    found: p.size(),
                }
            } else {
                Error::InvalidLabel(p.to_string())
            }
        })
    }

    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.values[irrep * self.len() + class]
    }

    pub fn row(&self, irrep: usize) -> &[i64] {
        let m = self.len();
        &self.values[irrep * m..(irrep + 1) * m]
    }

    pub fn centralizer(&self, class: usize) -> u128 {
        self.centralizers[class]
    }

    pub fn centralizers(&self) -> &[u128] {
        &self.centralizers
    }

    pub fn group_order(&self) -> u128 {
        factorial(self.n)
    }

    pub fn class_size(&self, class: usize) -> u128 {
        self.group_order() / self.centralizers[class]
    }

    pub fn character(&self, lambda: &Partition) -> Result<ClassFunction> {
        let i = self.index_of(lambda)?;
        Ok(ClassFunction {
            n: self.n,
            values: self.row(i).to_vec(),
        })
    }

    /// Character of a virtual character, as a class function.
    pub fn class_function(&self, v: &VirtualCharacter) -> Result<ClassFunction> {
        if v.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: v.n(),
            });
        }
        let mut f = ClassFunction::zero(self.n);
        for (lambda, c) in v.iter() {
            let i = self.index_of(lambda)?;
            for (slot, &x) in f.values.iter_mut().zip(self.row(i)) {
                let t = x.checked_mul(c).or_overflow("class function")?;
                *slot = slot.checked_add(t).or_overflow("class function")?;
            }
        }
        Ok(f)
    }

    /// `Σ_ρ a(ρ) b(ρ) c(ρ) / z_ρ` over three dense value rows.
    pub(crate) fn triple_pairing(&self, a: &[i64], b: &[i64], c: &[i64]) -> Result<i64> {
        let order = self.group_order() as i128;
        let mut acc: i128 = 0;
        for j in 0..self.len() {
            let size = (self.group_order() / self.centralizers[j]) as i128;
            let t = (a[j] as i128)
                .checked_mul(b[j] as i128)
                .and_then(|x| x.checked_mul(c[j] as i128))
                .and_then(|x| x.checked_mul(size))
                .ok_or(Error::Overflow("inner product"))?;
            acc = acc.checked_add(t).ok_or(Error::Overflow("inner product"))?;
        }
        if acc % order != 0 {
            return Err(Error::NonIntegral("inner product"));
        }
        narrow(acc / order, "inner product")
    }

    /// `⟨f, g⟩ = Σ_ρ f(ρ) g(ρ) / z_ρ`, which must be an integer.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Result<i64> {
        for h in [f, g] {
            if h.n != self.n {
                return Err(Error::SizeMismatch {
                    expected: self.n,
                    found: h.n,
                });
            }
        }
        let ones = vec![1; self.len()];
        self.triple_pairing(&f.values, &g.values, &ones)
    }

    /// Expands a class function in the irreducible basis and checks that the
    /// expansion reproduces it exactly.
    pub fn decompose(&self, f: &ClassFunction) -> Result<VirtualCharacter> {
        let mut out = VirtualCharacter::zero(self.n);
        let ones = vec![1; self.len()];
        for (i, lambda) in self.partitions.iter().enumerate() {
            let c = self.triple_pairing(&f.values, self.row(i), &ones)?;
            out.add_term(lambda.clone(), c)?;
        }
        if self.class_function(&out)? != *f {
            return Err(Error::NonIntegral("decomposition does not reproduce the class function"));
        }
        Ok(out)
    }

    /// The regular character: `n!` at the identity, 0 elsewhere.
    pub fn regular_character(&self) -> ClassFunction {
        let mut values = vec![0; self.len()];
        // The identity class [1^n] is last in reverse lexicographic order.
        if let Some(last) = values.last_mut() {
            *last = self.group_order() as i64;
        }
        ClassFunction {
            n: self.n,
            values,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        for rho in all_partitions(3) {
            assert_eq!(mn_character(&p("[3]"), &rho).unwrap(), 1);
        }
        assert_eq!(mn_character(&p("[1,1,1]"), &p("[2,1]")).unwrap(), -1);
        assert_eq!(mn_character(&p("[2,1]"), &p("[3]")).unwrap(), -1);
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            mn_character(&p("[2,1]"), &p("[2]")),
            Err(Error::SizeMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn tiny_tables() {
        let t1 = CharacterTable::new(1).unwrap();
        assert_eq!(t1.row(0), &[1]);
        let t2 = CharacterTable::new(2).unwrap();
        assert_eq!(t2.row(0), &[1, 1]);
        assert_eq!(t2.row(1), &[-1, 1]);
        let t3 = CharacterTable::new(3).unwrap();
        // classes are [3], [2,1], [1,1,1]
        assert_eq!(t3.row(t3.index_of(&p("[2,1]")).unwrap()), &[-1, 0, 2]);
    }

    #[test]
    fn ceiling_guard() {
        assert!(matches!(
            CharacterTable::with_ceiling(9, 8),
            Err(Error::Ceiling { n: 9, max: 8, .. })
        ));
    }

    #[test]
    fn inner_products() {
        let t = CharacterTable::new(5).unwrap();
        for a in t.partitions() {
            for b in t.partitions() {
                let ip = t
                    .inner_product(&t.character(a).unwrap(), &t.character(b).unwrap())
                    .unwrap();
                assert_eq!(ip, (a == b) as i64);
            }
            let reg = t.regular_character();
            let ip = t.inner_product(&reg, &t.character(a).unwrap()).unwrap();
            assert_eq!(ip as u128, a.dimension().unwrap());
        }
    }

    #[test]
    fn non_integral_inner_product_is_rejected() {
        let t = CharacterTable::new(3).unwrap();
        let f = ClassFunction::new(3, vec![0, 0, 1]).unwrap();
        assert_eq!(
            t.inner_product(&f, &f),
            Err(Error::NonIntegral("inner product"))
        );
    }

    #[test]
    fn decompositions() {
        let t = CharacterTable::new(3).unwrap();
        let reg = t.decompose(&t.regular_character()).unwrap();
        assert_eq!(reg.to_string(), "[3] + 2*[2,1] + [1,1,1]");
        assert!(t.decompose(&ClassFunction::zero(3)).unwrap().is_zero());
        let std = t.character(&p("[2,1]")).unwrap();
        let sq = t.decompose(&std.pointwise_product(&std).unwrap()).unwrap();
        assert_eq!(sq.to_string(), "[3] + [2,1] + [1,1,1]");
    }
}
