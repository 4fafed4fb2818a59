//! Deciding whether a set of elements generates a representation ring.
//!
//! `R(W)` is a free `Z`-module on `Irr(W)`. The subring `A` generated by a set
//! `B` is the smallest submodule containing the unit and stable under
//! multiplication by `B`. Starting from `A_0 = Z·1`, we set
//! `A_{i+1} = A_i + Σ_{b ∈ B} b·A_i` until the module stops growing; the
//! modules are compared through their Hermite normal forms.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{CheckedExt, Error, Result};

/// A submodule of `Z^m`, stored as a row-style Hermite normal form.
///
/// Each basis row has a positive pivot, all entries left of the pivot are
/// zero, pivot columns strictly increase down the rows, and entries above a
/// pivot lie in `[0, pivot)`. Two lattices are equal iff their forms are.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
}

impl IntegerLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn pivot_col(row: &[i64]) -> usize {
        row.iter().position(|&x| x != 0).expect("HNF rows are nonzero")
    }

    /// The product of the pivots; the index in `Z^m` when the rank is full.
    pub fn index(&self) -> Result<Option<u64>> {
        if self.rank() < self.dim {
            return Ok(None);
        }
        let mut idx: u64 = 1;
        for row in &self.basis {
            let p = row[Self::pivot_col(row)] as u64;
            idx = idx.checked_mul(p).ok_or(Error::Overflow("lattice index"))?;
        }
        Ok(Some(idx))
    }

    /// True iff the lattice is all of `Z^m`: the form is the identity.
    /// Full rank alone is not enough.
    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
            && self
                .basis
                .iter()
                .enumerate()
                .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == (i == j) as i64))
    }

    /// Membership by back-substitution along the pivots.
    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let mut residual: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.basis {
            let c = Self::pivot_col(row);
            let p = row[c] as i128;
            if residual[c] % p != 0 {
                return false;
            }
            let q = residual[c] / p;
            if q != 0 {
                for (r, &x) in residual.iter_mut().zip(row) {
                    *r -= q * x as i128;
                }
            }
        }
        residual.iter().all(|&x| x == 0)
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.basis {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn row_sub_scaled(target: &mut [i64], src: &[i64], q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for (t, &s) in target.iter_mut().zip(src) {
        let prod = s.checked_mul(q).or_overflow("hermite normal form")?;
        *t = t.checked_sub(prod).or_overflow("hermite normal form")?;
    }
    Ok(())
}

/// Hermite normal form of the span of `rows`, each of length `dim`.
///
/// Column by column, the entry of smallest absolute value is moved to the
/// pivot position and used to reduce the rest (a Euclidean descent), which
/// keeps intermediate entries small.
pub fn hnf(dim: usize, rows: &[Vec<i64>]) -> Result<IntegerLattice> {
    if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::SizeMismatch {
            expected: dim,
            found: bad.len(),
        });
    }
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut r = 0;
    for col in 0..dim {
        if r == a.len() {
            break;
        }
        loop {
            let Some(piv) = (r..a.len())
                .filter(|&i| a[i][col] != 0)
                .min_by_key(|&i| a[i][col].unsigned_abs())
            else {
                break;
            };
            a.swap(r, piv);
            let mut clean = true;
            for i in r + 1..a.len() {
                if a[i][col] != 0 {
                    let q = a[i][col] / a[r][col];
                    let (head, tail) = a.split_at_mut(i);
                    row_sub_scaled(&mut tail[0], &head[r], q)?;
                    if tail[0][col] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[r][col] == 0 {
            continue;
        }
        if a[r][col] < 0 {
            for x in &mut a[r] {
                *x = x.checked_neg().or_overflow("hermite normal form")?;
            }
        }
        let p = a[r][col];
        for i in 0..r {
            let q = a[i][col].div_euclid(p);
            let (head, tail) = a.split_at_mut(r);
            row_sub_scaled(&mut head[i], &tail[0], q)?;
        }
        r += 1;
        a.retain(|row| row.iter().any(|&x| x != 0));
    }
    a.truncate(r);
    Ok(IntegerLattice { dim, basis: a })
}

type MultiplyFn = dyn Fn(usize, usize) -> Vec<i64> + Send + Sync;

/// Structure constants of a commutative ring with a distinguished basis.
#[derive(Clone)]
pub struct RingData {
    labels: Vec<String>,
    unit: usize,
    multiply: Arc<MultiplyFn>,
}

impl fmt::Debug for RingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingData")
            .field("labels", &self.labels)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

impl RingData {
    /// `multiply(i, j)` returns the coordinates of `b_i · b_j`.
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        multiply: impl Fn(usize, usize) -> Vec<i64> + Send + Sync + 'static,
    ) -> Result<Self> {
        if unit >= labels.len() {
            return Err(Error::InvalidLabel(format!("unit index {unit}")));
        }
        Ok(RingData {
            labels,
            unit,
            multiply: Arc::new(multiply),
        })
    }

    /// From a dense table: entry `i * m + j` is `b_i · b_j`.
    pub fn from_table(labels: Vec<String>, unit: usize, table: Vec<Vec<i64>>) -> Result<Self> {
        let m = labels.len();
        if table.len() != m * m {
            return Err(Error::SizeMismatch {
                expected: m * m,
                found: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|v| v.len() != m) {
            return Err(Error::SizeMismatch {
                expected: m,
                found: bad.len(),
            });
        }
        let table = Arc::new(table);
        Self::new(labels, unit, move |i, j| table[i * m + j].clone())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn multiply(&self, i: usize, j: usize) -> Vec<i64> {
        (self.multiply)(i, j)
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidLabel(label.to_string()))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Checks that the unit acts as the identity and that the product is
    /// commutative.
    pub fn validate(&self) -> Result<()> {
        let m = self.dim();
        for i in 0..m {
            if self.multiply(self.unit, i) != self.basis_vector(i) {
                return Err(Error::Consistency(format!(
                    "unit {} does not fix {}",
                    self.labels[self.unit], self.labels[i]
                )));
            }
            for j in i + 1..m {
                if self.multiply(i, j) != self.multiply(j, i) {
                    return Err(Error::Consistency(format!(
                        "{} and {} do not commute",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Matrix of multiplication by `x`: row `i` is `x · b_i`.
    fn multiplication_matrix(&self, x: &[i64]) -> Result<Vec<Vec<i64>>> {
        let m = self.dim();
        let mut rows = vec![vec![0i64; m]; m];
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (i, row) in rows.iter_mut().enumerate() {
                let prod = self.multiply(j, i);
                for (r, p) in row.iter_mut().zip(prod) {
                    let t = p.checked_mul(xj).or_overflow("ring product")?;
                    *r = r.checked_add(t).or_overflow("ring product")?;
                }
            }
        }
        Ok(rows)
    }

    /// `x · y` for arbitrary elements.
    pub fn product(&self, x: &[i64], y: &[i64]) -> Result<Vec<i64>> {
        apply(&self.multiplication_matrix(x)?, y)
    }
}

fn apply(matrix: &[Vec<i64>], v: &[i64]) -> Result<Vec<i64>> {
    let m = v.len();
    let mut out = vec![0i64; m];
    for (row, &vi) in matrix.iter().zip(v) {
        if vi == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            let t = x.checked_mul(vi).or_overflow("ring product")?;
            *o = o.checked_add(t).or_overflow("ring product")?;
        }
    }
    Ok(out)
}

/// A product `generator · basis[row]` that was not yet in the module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enlargement {
    pub iteration: usize,
    pub generator: usize,
    pub basis_row: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    pub lattice: IntegerLattice,
    /// Rounds run, including the final round that found no growth.
    pub iterations: usize,
    pub trace: Vec<Enlargement>,
    /// Rank after each round.
    pub ranks: Vec<usize>,
}

/// Saturates `Z·1` under multiplication by `generators` (ring elements in
/// basis coordinates).
pub fn saturate(data: &RingData, generators: &[Vec<i64>]) -> Result<Saturation> {
    let start = hnf(data.dim(), &[data.basis_vector(data.unit())])?;
    saturate_from(data, generators, start)
}

/// Like [`saturate`] with basis elements given by index.
pub fn saturate_labels(data: &RingData, generators: &[usize]) -> Result<Saturation> {
    let gens: Vec<Vec<i64>> = generators.iter().map(|&g| data.basis_vector(g)).collect();
    saturate(data, &gens)
}

pub fn saturate_from(
    data: &RingData,
    generators: &[Vec<i64>],
    start: IntegerLattice,
) -> Result<Saturation> {
    let m = data.dim();
    if start.dim() != m {
        return Err(Error::SizeMismatch {
            expected: m,
            found: start.dim(),
        });
    }
    let matrices = generators
        .iter()
        .map(|g| {
            if g.len() != m {
                return Err(Error::SizeMismatch {
                    expected: m,
                    found: g.len(),
                });
            }
            data.multiplication_matrix(g)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut lattice = start;
    let mut iterations = 0;
    let mut trace = Vec::new();
    let mut ranks = Vec::new();
    loop {
        iterations += 1;
        let mut rows = lattice.basis().to_vec();
        for (g, mat) in matrices.iter().enumerate() {
            for (t, v) in lattice.basis().iter().enumerate() {
                let w = apply(mat, v)?;
                if !lattice.contains(&w) {
                    trace.push(Enlargement {
                        iteration: iterations,
                        generator: g,
                        basis_row: t,
                    });
                }
                rows.push(w);
            }
        }
        let next = hnf(m, &rows)?;
        ranks.push(next.rank());
        if next == lattice {
            return Ok(Saturation {
                lattice,
                iterations,
                trace,
                ranks,
            });
        }
        // Each round that does not stop must strictly enlarge the module.
        if !next.contains_lattice(&lattice) || next.rank() < lattice.rank() {
            return Err(Error::Consistency(format!(
                "saturation round {iterations} lost part of the module"
            )));
        }
        lattice = next;
    }
}

/// Summary of a generation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub full: bool,
    pub rank: usize,
    pub index: Option<u64>,
    pub iterations: usize,
}

impl GenerationReport {
    pub fn from_saturation(s: &Saturation) -> Result<Self> {
        Ok(GenerationReport {
            full: s.lattice.is_full(),
            rank: s.lattice.rank(),
            index: s.lattice.index()?,
            iterations: s.iterations,
        })
    }
}

pub fn check_generation(data: &RingData, generators: &[Vec<i64>]) -> Result<GenerationReport> {
    GenerationReport::from_saturation(&saturate(data, generators)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_examples() {
        let id = hnf(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(id.is_full());
        assert_eq!(id.rank(), 3);

        let two = hnf(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(two.basis(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(two.rank(), 2);
        assert!(!two.is_full());
        assert_eq!(two.index().unwrap(), Some(4));

        let l = hnf(2, &[vec![1, 2], vec![0, 3]]).unwrap();
        assert_eq!(l.basis(), &[vec![1, 2], vec![0, 3]]);
        assert!(l.contains(&[1, -1]));
        assert!(!l.contains(&[0, 1]));
        assert!(l.contains(&[2, 1]));
    }

    #[test]
    fn hnf_normalises() {
        let l = hnf(3, &[vec![0, -4, 6], vec![0, 6, 9], vec![0, 0, 0], vec![0, 2, 3]]).unwrap();
        assert_eq!(l.basis(), &[vec![0, 2, 3], vec![0, 0, 12]]);
        let again = hnf(3, l.basis()).unwrap();
        assert_eq!(again, l);
        let index_two = hnf(2, &[vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(index_two.rank(), 2);
        assert!(!index_two.is_full());
        assert_eq!(index_two.index().unwrap(), Some(2));
    }

    #[test]
    fn hnf_rejects_ragged_rows() {
        assert!(matches!(
            hnf(2, &[vec![1, 2, 3]]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn hnf_reports_overflow() {
        let r = hnf(1, &[vec![i64::MIN]]);
        assert_eq!(r, Err(Error::Overflow("hermite normal form")));
    }

    fn z2_group_ring() -> RingData {
        // R(Z/2): 1, s with s^2 = 1.
        RingData::from_table(
            vec!["1".into(), "s".into()],
            0,
            vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 0]],
        )
        .unwrap()
    }

    #[test]
    fn unit_only_gives_rank_one() {
        let d = z2_group_ring();
        d.validate().unwrap();
        let s = saturate_labels(&d, &[0]).unwrap();
        assert_eq!(s.lattice.rank(), 1);
        assert_eq!(s.iterations, 1);
        let s = saturate_labels(&d, &[1]).unwrap();
        assert!(s.lattice.is_full());
        assert_eq!(s.trace.len(), 1);
    }

    #[test]
    fn validate_catches_bad_unit() {
        let d = RingData::from_table(
            vec!["1".into(), "s".into()],
            0,
            vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert!(d.validate().is_err());
    }
}
