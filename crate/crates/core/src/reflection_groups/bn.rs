//! Characters of the hyperoctahedral groups `B_n = Z/2 ≀ S_n`.
//!
//! Classes are signed cycle types `(α, β)`: `α` lists the cycle lengths with
//! an even number of sign changes, `β` those with an odd number. Irreducibles
//! are pairs `(λ, μ)`, `|λ| + |μ| = n`; `χ^{(λ,μ)}` is induced from
//! `B_a × B_b` (`a = |λ|`) of `χ_λ` inflated through `B_a → S_a` times
//! `χ_μ` inflated and twisted by the product-of-signs character.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{narrow, Error, Result};
use crate::generation_checker::RingData;
use crate::partitions::{all_partitions, centralizer_order, factorial, Partition};
use crate::sym_characters::mn_character;
use crate::virtual_character::Combination;

/// Largest `n` for which a `B_n` table is built unless overridden.
pub const DEFAULT_BN_CEILING: usize = 6;

/// Conjugacy class of `B_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedCycleType {
    pub positive: Partition,
    pub negative: Partition,
}

impl SignedCycleType {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        SignedCycleType { positive, negative }
    }

    pub fn identity(n: usize) -> Self {
        SignedCycleType::new(Partition::column(n), Partition::empty())
    }

    pub fn size(&self) -> usize {
        self.positive.size() + self.negative.size()
    }

    /// `2^{ℓ(α)} z_α · 2^{ℓ(β)} z_β`.
    pub fn centralizer(&self) -> u128 {
        let rows = (self.positive.len() + self.negative.len()) as u32;
        (1u128 << rows) * centralizer_order(&self.positive) * centralizer_order(&self.negative)
    }

    /// Class of the signed permutation `i ↦ signs[i]·e_{perm[i]}`.
    pub fn of_signed_permutation(perm: &[usize], negated: &[bool]) -> Result<Self> {
        let n = perm.len();
        if negated.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: negated.len(),
            });
        }
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut len, mut odd, mut i) = (0, false, start);
            while !seen[i] {
                seen[i] = true;
                odd ^= negated[i];
                len += 1;
                i = *perm.get(i).filter(|&&j| j < n).ok_or_else(|| {
                    Error::InvalidLabel(format!("not a permutation: {perm:?}"))
                })?;
            }
            if i != start {
                return Err(Error::InvalidLabel(format!("not a permutation: {perm:?}")));
            }
            if odd {
                neg.push(len);
            } else {
                pos.push(len);
            }
        }
        Ok(SignedCycleType::new(Partition::from_unsorted(pos), Partition::from_unsorted(neg)))
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.positive, self.negative)
    }
}

impl fmt::Debug for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Irreducible character label of `B_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BnLabel {
    pub lambda: Partition,
    pub mu: Partition,
}

impl BnLabel {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        BnLabel { lambda, mu }
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    pub fn trivial(n: usize) -> Self {
        BnLabel::new(Partition::row(n), Partition::empty())
    }

    /// `V = ([n-1],[1])`, the signed permutation representation.
    pub fn reflection(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall {
                op: "reflection representation of B_n",
                n,
                min: 1,
            });
        }
        Ok(BnLabel::new(Partition::row(n - 1), Partition::row(1)))
    }

    /// `U = ([n-1,1],∅)`, pulled back from the standard representation of `S_n`.
    pub fn standard_pullback(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall {
                op: "pulled-back standard representation of B_n",
                n,
                min: 2,
            });
        }
        Ok(BnLabel::new(Partition::new(vec![n - 1, 1])?, Partition::empty()))
    }

    /// `binom(n, |λ|) f^λ f^μ`.
    pub fn dimension(&self) -> Result<u128> {
        let n = self.size();
        let a = self.lambda.size();
        let binom = factorial(n) / (factorial(a) * factorial(n - a));
        let (f, g) = (self.lambda.dimension()?, self.mu.dimension()?);
        binom
            .checked_mul(f)
            .and_then(|x| x.checked_mul(g))
            .ok_or(Error::Overflow("dimension"))
    }
}

impl fmt::Display for BnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

impl fmt::Debug for BnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Pairs `(p, q)` with `p ⊢ a`, `q ⊢ n - a`, for `a = n, n-1, …, 0`.
fn partition_pairs(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let right = all_partitions(n - a);
        for p in all_partitions(a) {
            for q in &right {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

pub fn bn_classes(n: usize) -> Vec<SignedCycleType> {
    partition_pairs(n)
        .into_iter()
        .map(|(a, b)| SignedCycleType::new(a, b))
        .collect()
}

pub fn bn_labels(n: usize) -> Vec<BnLabel> {
    partition_pairs(n).into_iter().map(|(a, b)| BnLabel::new(a, b)).collect()
}

/// All ways to split the multiset of parts of `p` into two sub-multisets,
/// with the number of ways to choose each split (`∏ binom(m_i, k_i)`).
fn splits(p: &Partition) -> Vec<(Partition, Partition, u128)> {
    let mult = p.multiplicities();
    let mut out = Vec::new();
    let mut take = vec![0usize; mult.len()];
    fn rec(
        i: usize,
        mult: &[usize],
        take: &mut Vec<usize>,
        out: &mut Vec<(Partition, Partition, u128)>,
    ) {
        if i == mult.len() {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut ways = 1u128;
            for (size, (&m, &k)) in mult.iter().zip(take.iter()).enumerate().rev() {
                left.extend(std::iter::repeat_n(size, k));
                right.extend(std::iter::repeat_n(size, m - k));
                ways *= factorial(m) / (factorial(k) * factorial(m - k));
            }
            out.push((
                Partition::from_sorted_unchecked(left),
                Partition::from_sorted_unchecked(right),
                ways,
            ));
            return;
        }
        for k in 0..=mult[i] {
            take[i] = k;
            rec(i + 1, mult, take, out);
        }
    }
    rec(0, &mult, &mut take, &mut out);
    out
}

/// `χ^{(λ,μ)}` on the class `(α, β)`.
///
/// A class `(α₁,β₁; α₂,β₂)` of `B_a × B_b` fuses into `(α₁∪α₂, β₁∪β₂)`; the
/// induced value is `Σ f(d) z_c / z_d` over such splits `d` of `c`.
pub fn bn_character(label: &BnLabel, class: &SignedCycleType) -> Result<i64> {
    let n = label.size();
    if class.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: class.size(),
        });
    }
    let a = label.lambda.size();
    let z_c = class.centralizer();
    let pos = splits(&class.positive);
    let neg = splits(&class.negative);
    let mut acc: i128 = 0;
    for (a1, a2, _) in &pos {
        for (b1, b2, _) in &neg {
            if a1.size() + b1.size() != a {
                continue;
            }
            let z_d = SignedCycleType::new(a1.clone(), b1.clone()).centralizer()
                * SignedCycleType::new(a2.clone(), b2.clone()).centralizer();
            if !z_c.is_multiple_of(z_d) {
                return Err(Error::NonIntegral("induced character weight"));
            }
            let left = mn_character(&label.lambda, &a1.union(b1))?;
            if left == 0 {
                continue;
            }
            let right = mn_character(&label.mu, &a2.union(b2))?;
            let sign = if b2.len() % 2 == 0 { 1 } else { -1 };
            let term = (left as i128 * right as i128 * sign)
                .checked_mul((z_c / z_d) as i128)
                .ok_or(Error::Overflow("induced character"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("induced character"))?;
        }
    }
    narrow(acc, "induced character")
}

/// Exact character table of `B_n`.
#[derive(Clone, Debug)]
pub struct BnCharacterTable {
    n: usize,
    labels: Vec<BnLabel>,
    classes: Vec<SignedCycleType>,
    label_index: HashMap<BnLabel, usize>,
    class_index: HashMap<SignedCycleType, usize>,
    values: Vec<i64>,
    centralizers: Vec<u128>,
}

impl BnCharacterTable {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_ceiling(n, DEFAULT_BN_CEILING)
    }

    pub fn with_ceiling(n: usize, ceiling: usize) -> Result<Self> {
        if n > ceiling {
            return Err(Error::Ceiling {
                what: "hyperoctahedral character table",
                n,
                max: ceiling,
            });
        }
        let labels = bn_labels(n);
        let classes = bn_classes(n);
        let mut values = Vec::with_capacity(labels.len() * classes.len());
        for l in &labels {
            for c in &classes {
                values.push(bn_character(l, c)?);
            }
        }
        Ok(BnCharacterTable {
            n,
            label_index: labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect(),
            class_index: classes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect(),
            centralizers: classes.iter().map(SignedCycleType::centralizer).collect(),
            labels,
            classes,
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[BnLabel] {
        &self.labels
    }

    pub fn classes(&self) -> &[SignedCycleType] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label_index(&self, l: &BnLabel) -> Result<usize> {
        self.label_index
            .get(l)
            .copied()
            .ok_or_else(|| Error::InvalidLabel(l.to_string()))
    }

    pub fn class_index(&self, c: &SignedCycleType) -> Result<usize> {
        self.class_index
            .get(c)
            .copied()
            .ok_or_else(|| Error::InvalidLabel(c.to_string()))
    }

    pub fn value(&self, label: usize, class: usize) -> i64 {
        self.values[label * self.classes.len() + class]
    }

    pub fn row(&self, label: usize) -> &[i64] {
        let m = self.classes.len();
        &self.values[label * m..(label + 1) * m]
    }

    pub fn centralizers(&self) -> &[u128] {
        &self.centralizers
    }

    /// `2^n n!`.
    pub fn group_order(&self) -> u128 {
        (1u128 << self.n) * factorial(self.n)
    }

    fn triple_pairing(&self, a: &[i64], b: &[i64], c: &[i64]) -> Result<i64> {
        let order = self.group_order() as i128;
        let mut acc: i128 = 0;
        for j in 0..self.classes.len() {
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

    /// `Σ_c f(c) g(c) / z_c`; all `B_n` characters are real.
    pub fn inner_product(&self, f: &[i64], g: &[i64]) -> Result<i64> {
        self.check_len(f)?;
        self.check_len(g)?;
        self.triple_pairing(f, g, &vec![1; f.len()])
    }

    fn check_len(&self, f: &[i64]) -> Result<()> {
        if f.len() != self.classes.len() {
            return Err(Error::SizeMismatch {
                expected: self.classes.len(),
                found: f.len(),
            });
        }
        Ok(())
    }

    /// Coefficients of `f` in the irreducible basis, in label order.
    pub fn coefficients(&self, f: &[i64]) -> Result<Vec<i64>> {
        self.check_len(f)?;
        let ones = vec![1; f.len()];
        let coeffs = (0..self.len())
            .map(|i| self.triple_pairing(f, self.row(i), &ones))
            .collect::<Result<Vec<_>>>()?;
        let mut back = vec![0i64; f.len()];
        for (i, &c) in coeffs.iter().enumerate() {
            for (slot, &x) in back.iter_mut().zip(self.row(i)) {
                *slot += c * x;
            }
        }
        if back != f {
            return Err(Error::NonIntegral("decomposition does not reproduce the class function"));
        }
        Ok(coeffs)
    }

    pub fn decompose(&self, f: &[i64]) -> Result<Combination<BnLabel>> {
        let coeffs = self.coefficients(f)?;
        Ok(self.labels.iter().cloned().zip(coeffs).collect())
    }

    /// Structure constants `⟨χ_x χ_y, χ_z⟩` of `R(B_n)`.
    pub fn ring_data(&self) -> Result<RingData> {
        let m = self.len();
        let mut table = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                let row = (0..m)
                    .map(|z| self.triple_pairing(self.row(x), self.row(y), self.row(z)))
                    .collect::<Result<Vec<_>>>()?;
                table.push(row);
            }
        }
        let unit = self.label_index(&BnLabel::trivial(self.n))?;
        RingData::from_table(self.labels.iter().map(|l| l.to_string()).collect(), unit, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn b1_table() {
        let t = BnCharacterTable::new(1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.row(0), &[1, 1]);
        assert_eq!(t.row(1), &[1, -1]);
    }

    #[test]
    fn counts() {
        for (n, count) in [(0, 1), (1, 2), (2, 5), (3, 10), (4, 20), (5, 36)] {
            assert_eq!(bn_labels(n).len(), count);
            assert_eq!(bn_classes(n).len(), count);
            let order: u128 = bn_classes(n).iter().map(|c| (1u128 << n) * factorial(n) / c.centralizer()).sum();
            assert_eq!(order, (1u128 << n) * factorial(n));
            let dims: u128 = bn_labels(n).iter().map(|l| l.dimension().unwrap().pow(2)).sum();
            assert_eq!(dims, (1u128 << n) * factorial(n));
        }
    }

    #[test]
    fn anchors() {
        let n = 4;
        let id = SignedCycleType::identity(n);
        for l in bn_labels(n) {
            assert_eq!(bn_character(&l, &id).unwrap() as u128, l.dimension().unwrap());
        }
        let u = BnLabel::standard_pullback(n).unwrap();
        assert_eq!(bn_character(&u, &id).unwrap(), 3);
        for c in bn_classes(n) {
            assert_eq!(bn_character(&BnLabel::trivial(n), &c).unwrap(), 1);
            // V is the signed permutation representation.
            let v = bn_character(&BnLabel::reflection(n).unwrap(), &c).unwrap();
            let fixed = |q: &Partition| q.parts().iter().filter(|&&x| x == 1).count() as i64;
            assert_eq!(v, fixed(&c.positive) - fixed(&c.negative));
        }
    }

    #[test]
    fn orthogonality() {
        for n in 0..=4 {
            let t = BnCharacterTable::new(n).unwrap();
            for i in 0..t.len() {
                for j in 0..t.len() {
                    assert_eq!(t.inner_product(t.row(i), t.row(j)).unwrap(), (i == j) as i64);
                }
            }
        }
    }

    #[test]
    fn signed_permutation_classes() {
        let c = SignedCycleType::of_signed_permutation(&[1, 0, 2], &[true, false, true]).unwrap();
        assert_eq!(c, SignedCycleType::new(Partition::empty(), p(&[2, 1])));
        assert!(SignedCycleType::of_signed_permutation(&[0, 0], &[false, false]).is_err());
    }

    #[test]
    fn ceiling() {
        assert!(matches!(BnCharacterTable::with_ceiling(3, 2), Err(Error::Ceiling { .. })));
    }

    #[test]
    fn ring_data_validates() {
        BnCharacterTable::new(3).unwrap().ring_data().unwrap().validate().unwrap();
    }
}
