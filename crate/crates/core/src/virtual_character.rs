//! Integer combinations of irreducible labels.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{CheckedExt, Error, Result};
use crate::partitions::Partition;

/// A finitely supported map `label -> integer` with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Combination<L: Ord> {
    coeffs: BTreeMap<L, i64>,
}

impl<L: Ord> Default for Combination<L> {
    fn default() -> Self {
        Combination {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> Combination<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: L, coeff: i64) -> Self {
        let mut c = Self::new();
        if coeff != 0 {
            c.coeffs.insert(label, coeff);
        }
        c
    }

    pub fn coeff(&self, label: &L) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, i64)> {
        self.coeffs.iter().map(|(l, &c)| (l, c))
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self[label] += coeff`.
    pub fn add_term(&mut self, label: L, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.coeffs.entry(label);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().checked_add(coeff).or_overflow("combination")?;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: i64) -> Result<()> {
        for (l, c) in other.iter() {
            let term = c.checked_mul(factor).or_overflow("combination")?;
            self.add_term(l.clone(), term)?;
        }
        Ok(())
    }

    pub fn map_labels<M: Ord + Clone>(&self, f: impl Fn(&L) -> M) -> Result<Combination<M>> {
        let mut out = Combination::new();
        for (l, c) in self.iter() {
            out.add_term(f(l), c)?;
        }
        Ok(out)
    }
}

impl<L: Ord + Clone> FromIterator<(L, i64)> for Combination<L> {
    /// Panics on overflow; use [`Combination::add_term`] for checked sums.
    fn from_iter<I: IntoIterator<Item = (L, i64)>>(iter: I) -> Self {
        let mut c = Combination::new();
        for (l, v) in iter {
            c.add_term(l, v).expect("overflow collecting a combination");
        }
        c
    }
}

impl<L: Ord + fmt::Display> fmt::Display for Combination<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An element of the representation ring `R(S_n)` in the irreducible basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VirtualCharacter {
    n: usize,
    terms: Combination<Partition>,
}

impl VirtualCharacter {
    pub fn zero(n: usize) -> Self {
        VirtualCharacter {
            n,
            terms: Combination::new(),
        }
    }

    /// The irreducible character `V_λ`.
    pub fn irreducible(lambda: Partition) -> Self {
        VirtualCharacter {
            n: lambda.size(),
            terms: Combination::single(lambda, 1),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut v = Self::zero(n);
        for (l, c) in terms {
            v.add_term(l, c)?;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &Combination<Partition> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.coeff(lambda)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: lambda.size(),
            });
        }
        self.terms.add_term(lambda, coeff)
    }

    pub fn add_scaled(&mut self, other: &VirtualCharacter, factor: i64) -> Result<()> {
        self.check_same_n(other)?;
        self.terms.add_scaled(&other.terms, factor)
    }

    pub fn sub(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    pub fn add(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    /// Degree of the virtual representation.
    pub fn dimension(&self) -> Result<i128> {
        self.iter().try_fold(0i128, |acc, (l, c)| {
            let d = i128::try_from(l.dimension()?).map_err(|_| Error::Overflow("dimension"))?;
            d.checked_mul(c as i128)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("dimension"))
        })
    }

    /// True when every coefficient is non-negative.
    pub fn is_effective(&self) -> bool {
        self.iter().all(|(_, c)| c >= 0)
    }

    pub(crate) fn check_same_n(&self, other: &VirtualCharacter) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.terms, f)
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    lambda: &'a Partition,
    coeff: i64,
}

impl Serialize for VirtualCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<_> = self
            .iter()
            .map(|(lambda, coeff)| TermRepr { lambda, coeff })
            .collect();
        let mut st = s.serialize_struct("VirtualCharacter", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zeros_are_not_stored() {
        let mut v = VirtualCharacter::irreducible(p("[2,1]"));
        v.add_term(p("[2,1]"), -1).unwrap();
        assert!(v.is_zero());
        assert_eq!(v, VirtualCharacter::zero(3));
    }

    #[test]
    fn size_checked() {
        let mut v = VirtualCharacter::zero(3);
        assert!(v.add_term(p("[2,2]"), 1).is_err());
        assert!(v.add(&VirtualCharacter::zero(4)).is_err());
    }

    #[test]
    fn display_and_dimension() {
        let v = VirtualCharacter::from_terms(3, [(p("[3]"), 1), (p("[2,1]"), 2), (p("[1,1,1]"), -1)])
            .unwrap();
        assert_eq!(v.to_string(), "[3] + 2*[2,1] - [1,1,1]");
        assert_eq!(v.dimension().unwrap(), 4);
        assert_eq!(VirtualCharacter::zero(2).to_string(), "0");
    }

    #[test]
    fn overflow_is_an_error() {
        let mut c = Combination::single(1u8, i64::MAX);
        assert_eq!(c.add_term(1, 1), Err(Error::Overflow("combination")));
    }
}
