//! Partitions and Young diagrams.
//!
//! A [`Partition`] labels both an irreducible character of `S_n` and a
//! conjugacy class (cycle type). Diagrams use the English convention: row 0 is
//! the top row and holds the largest part.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is the unique partition of 0 and is a perfectly
/// ordinary value: `theta`, `interior` and `level` are total.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting parts that are out of order.
    ///
    /// Trailing zeros are dropped; a zero followed by a positive part is an
    /// order error like any other increase.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Order {
                index: i,
                left: parts[i],
                right: parts[i + 1],
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `[n]` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Part `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `[n-k, 1^k]` for some `k`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity `m_i` of each part value, indexed by the value.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first_part() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Sign of a permutation with this cycle type.
    pub fn cycle_sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Rows from which a box can be removed, leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    /// Rows (including the new bottom row) where a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .collect()
    }

    /// Removes the last box of `row`. The caller picks a removable row.
    pub fn remove_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition::from_sorted_unchecked(parts)
    }

    /// Adds a box at the end of `row`. The caller picks an addable row.
    pub fn add_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::from_sorted_unchecked(parts)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    ///
    /// Hooks are cancelled against `n!` one factor at a time, so this only
    /// overflows when the answer itself does not fit.
    pub fn dimension(&self) -> Result<u128> {
        let conj = self.conjugate();
        let mut hooks: Vec<u128> = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push(((row - j) + (conj.parts[j] - i) - 1) as u128);
            }
        }
        let mut num: u128 = 1;
        for k in 1..=self.size() as u128 {
            let mut k = k;
            for h in hooks.iter_mut().filter(|h| **h > 1) {
                let g = gcd(k, *h);
                k /= g;
                *h /= g;
            }
            num = num.checked_mul(k).ok_or(Error::Overflow("hook length formula"))?;
            for h in hooks.iter_mut().filter(|h| **h > 1) {
                let g = gcd(num, *h);
                num /= g;
                *h /= g;
            }
        }
        if hooks.iter().any(|&h| h != 1) {
            return Err(Error::Consistency(format!("hook length formula for {self}")));
        }
        Ok(num)
    }

    /// Union of two cycle types as multisets.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Partitions compare in the order of [`all_partitions`]: a larger first
/// differing part comes first, so `[3] < [2,1] < [1,1,1]`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Parses `"[3,2,1,1]"`, `"3,2,1,1"` or `"[]"`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let err = |reason: &str| Error::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix('[') {
        body = rest.strip_suffix(']').ok_or_else(|| err("unbalanced bracket"))?;
    } else if body.ends_with(']') {
        return Err(err("unbalanced bracket"));
    }
    let body = body.trim();
    if body.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = body
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(0) => Err(err("parts must be positive")),
                Ok(v) => Ok(v),
                Err(_) => Err(err(&format!("{tok:?} is not a positive integer"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Every partition of `n`, in reverse lexicographic order starting at `[n]`.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(prefix.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Deletes the first row: `[λ₂, λ₃, …]`.
pub fn theta(lambda: &Partition) -> Partition {
    Partition::from_sorted_unchecked(lambda.parts.iter().skip(1).copied().collect())
}

/// Every part reduced by one, zero parts dropped.
pub fn interior(alpha: &Partition) -> Partition {
    Partition::from_sorted_unchecked(
        alpha
            .parts
            .iter()
            .filter(|&&p| p > 1)
            .map(|&p| p - 1)
            .collect(),
    )
}

/// Size of the rim removed by [`interior`], i.e. the number of rows.
pub fn boundary_size(alpha: &Partition) -> usize {
    alpha.len()
}

/// Number of indices `i` with `λ_i ≠ λ_{i+1}`, counting the final drop to 0.
pub fn delta(lambda: &Partition) -> usize {
    (0..lambda.len())
        .filter(|&i| lambda.part(i) != lambda.part(i + 1))
        .count()
}

/// The hook `[n-k, 1^k]`, the label of the `k`-th exterior power of the
/// standard representation.
pub fn hook_partition(n: usize, k: i64) -> Result<Partition> {
    if k < 0 || k as usize >= n {
        return Err(Error::HookRange { n, k });
    }
    let k = k as usize;
    let mut parts = vec![n - k];
    parts.extend(std::iter::repeat_n(1, k));
    Ok(Partition::from_sorted_unchecked(parts))
}

/// `|λ| - λ₁`: the least tensor power of the standard representation that
/// contains `V_λ`.
pub fn level(lambda: &Partition) -> usize {
    lambda.size() - lambda.first_part()
}

/// `z_ρ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of
/// cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> u128 {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u128).pow(m as u32) * factorial(m))
        .product()
}
