//! Littlewood–Richardson coefficients by enumerating `μ`-expansions.
//!
//! A `μ`-expansion of `λ` adds `μ₁` boxes labelled 1, then `μ₂` boxes labelled
//! 2, and so on, such that
//!
//! 1. after each label the diagram is still a Young diagram,
//! 2. labels strictly increase down each column,
//! 3. the labels read right to left along rows, top row first, form a lattice
//!    word: every prefix holds at least as many `p` as `p+1`.
//!
//! The search fills the skew shape row by row in reading order. For each row
//! it chooses how many boxes of each label go there; the cumulative row
//! lengths `L_i(s)` (boxes of `λ` plus labels `≤ s` in row `i`) must satisfy
//! `L_i(s) ≤ L_{i-1}(s-1)`, which encodes conditions 1 and 2 together. The
//! lattice condition is checked against a running count of labels already
//! read.
//!
//! This module only depends on partition arithmetic.

use serde::Serialize;

use crate::partitions::Partition;

/// A box added by an expansion. Rows and columns are 0-based; labels start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AddedBox {
    pub row: usize,
    pub col: usize,
    pub label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Expansion {
    pub base: Partition,
    /// Boxes in reading order: rows top to bottom, right to left in a row.
    pub boxes: Vec<AddedBox>,
    pub shape: Partition,
}

impl Expansion {
    /// Checks the three defining conditions directly on the box list, with
    /// `μ` giving the expected label content.
    pub fn satisfies_conditions(&self, mu: &Partition) -> bool {
        let k = mu.len();
        let mut content = vec![0usize; k + 1];
        for b in &self.boxes {
            if b.label == 0 || b.label > k {
                return false;
            }
            content[b.label] += 1;
        }
        if (1..=k).any(|r| content[r] != mu.part(r - 1)) {
            return false;
        }
        let rows = self.shape.len().max(self.base.len());
        let label_at = |row: usize, col: usize| -> Option<usize> {
            if col < self.base.part(row) {
                return Some(0);
            }
            self.boxes
                .iter()
                .find(|b| b.row == row && b.col == col)
                .map(|b| b.label)
        };
        if self
            .boxes
            .iter()
            .any(|b| b.col < self.base.part(b.row) || label_at(b.row, b.col) != Some(b.label))
        {
            return false;
        }
        if self.boxes.iter().enumerate().any(|(i, a)| {
            self.boxes[i + 1..]
                .iter()
                .any(|b| a.row == b.row && a.col == b.col)
        }) {
            return false;
        }
        // Condition 1: the cells with label <= r form a diagram for every r.
        for r in 0..=k {
            for b in &self.boxes {
                if b.label > r {
                    continue;
                }
                let left_ok = b.col == 0 || label_at(b.row, b.col - 1).is_some_and(|l| l <= r);
                let up_ok = b.row == 0 || label_at(b.row - 1, b.col).is_some_and(|l| l <= r);
                if !left_ok || !up_ok {
                    return false;
                }
            }
        }
        // Condition 2: strictly increasing down columns.
        for b in &self.boxes {
            if b.row > 0 {
                match label_at(b.row - 1, b.col) {
                    Some(above) if above < b.label => {}
                    _ => return false,
                }
            }
        }
        // Condition 3: lattice reading word.
        let mut seen = vec![0usize; k + 2];
        for row in 0..rows {
            let mut in_row: Vec<&AddedBox> = self.boxes.iter().filter(|b| b.row == row).collect();
            in_row.sort_by_key(|c| std::cmp::Reverse(c.col));
            for b in in_row {
                seen[b.label] += 1;
                if b.label > 1 && seen[b.label] > seen[b.label - 1] {
                    return false;
                }
            }
        }
        // Resulting shape.
        let mut lengths: Vec<usize> = (0..rows.max(1 + self.boxes.iter().map(|b| b.row).max().unwrap_or(0)))
            .map(|r| self.base.part(r) + self.boxes.iter().filter(|b| b.row == r).count())
            .collect();
        while lengths.last() == Some(&0) {
            lengths.pop();
        }
        lengths == self.shape.parts()
    }
}

/// Depth-first search over per-row label counts.
struct Search<'a> {
    lambda: &'a Partition,
    mu: &'a [usize],
    nu: Option<&'a Partition>,
    max_rows: usize,
    remaining: Vec<usize>,
    /// `read[s]`: labels `s` already placed in earlier rows (index 0 unused).
    read: Vec<usize>,
    /// Per-row label counts chosen so far; `rows[i][s-1]` boxes labelled `s`.
    rows: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, nu: Option<&'a Partition>) -> Self {
        let k = mu.len();
        Search {
            lambda,
            mu: mu.parts(),
            nu,
            max_rows: lambda.len() + k,
            remaining: mu.parts().to_vec(),
            read: vec![0; k + 1],
            rows: Vec::new(),
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&Self)) {
        // Cumulative lengths of a virtual row above row 0: unbounded.
        let above = vec![usize::MAX; self.mu.len() + 1];
        self.row(0, &above, emit);
    }

    fn row(&mut self, i: usize, above: &[usize], emit: &mut dyn FnMut(&Self)) {
        if self.remaining.iter().all(|&r| r == 0) {
            if let Some(nu) = self.nu {
                let done = (i..nu.len().max(self.lambda.len())).all(|j| nu.part(j) == self.lambda.part(j));
                if !done {
                    return;
                }
            }
            emit(self);
            return;
        }
        if i >= self.max_rows {
            return;
        }
        let base = self.lambda.part(i);
        if i > 0 && base == 0 && above[self.mu.len()] == 0 {
            return;
        }
        let mut counts = Vec::with_capacity(self.mu.len());
        let mut cum = vec![base; self.mu.len() + 1];
        self.label(i, 1, above, &mut counts, &mut cum, emit);
    }

    #[allow(clippy::too_many_arguments)]
    fn label(
        &mut self,
        i: usize,
        s: usize,
        above: &[usize],
        counts: &mut Vec<usize>,
        cum: &mut Vec<usize>,
        emit: &mut dyn FnMut(&Self),
    ) {
        let k = self.mu.len();
        if s > k {
            let len = cum[k];
            if let Some(nu) = self.nu {
                if len != nu.part(i) {
                    return;
                }
            }
            for (t, &c) in counts.iter().enumerate() {
                self.read[t + 1] += c;
                self.remaining[t] -= c;
            }
            self.rows.push(counts.clone());
            let below_above = cum.clone();
            self.row(i + 1, &below_above, emit);
            self.rows.pop();
            for (t, &c) in counts.iter().enumerate() {
                self.read[t + 1] -= c;
                self.remaining[t] += c;
            }
            return;
        }
        let prev = cum[s - 1];
        // Column strictness and shape: L_i(s) <= L_{i-1}(s-1).
        let mut cap = above[s - 1].saturating_sub(prev).min(self.remaining[s - 1]);
        if let Some(nu) = self.nu {
            cap = cap.min(nu.part(i).saturating_sub(prev));
        }
        for c in 0..=cap {
            // Lattice condition, box by box in reading order: the c boxes
            // labelled s in this row are read before any s-1 of this row.
            if s > 1 && self.read[s] + c > self.read[s - 1] {
                break;
            }
            counts.push(c);
            cum[s] = prev + c;
            self.label(i, s + 1, above, counts, cum, emit);
            counts.pop();
        }
    }

    fn expansion(&self) -> Expansion {
        let mut boxes = Vec::new();
        let mut lengths = Vec::new();
        for (i, counts) in self.rows.iter().enumerate() {
            let start = self.lambda.part(i);
            let mut row_boxes = Vec::new();
            let mut col = start;
            for (t, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    row_boxes.push(AddedBox {
                        row: i,
                        col,
                        label: t + 1,
                    });
                    col += 1;
                }
            }
            row_boxes.reverse();
            boxes.extend(row_boxes);
            lengths.push(col);
        }
        for j in self.rows.len()..self.lambda.len() {
            lengths.push(self.lambda.part(j));
        }
        while lengths.last() == Some(&0) {
            lengths.pop();
        }
        Expansion {
            base: self.lambda.clone(),
            boxes,
            shape: Partition::from_sorted_unchecked(lengths),
        }
    }
}

fn size_compatible(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    nu.size() == lambda.size() + mu.size() && nu.contains(lambda)
}

/// All `μ`-expansions of `λ`, restricted to shape `ν` when given.
///
/// Returns an empty list when `ν` has the wrong size or does not contain `λ`.
pub fn enumerate_expansions(
    lambda: &Partition,
    mu: &Partition,
    nu: Option<&Partition>,
) -> Vec<Expansion> {
    if let Some(nu) = nu {
        if !size_compatible(lambda, mu, nu) {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    Search::new(lambda, mu, nu).run(&mut |s| out.push(s.expansion()));
    out
}

/// `L_{λ,μ,ν}`, the number of `μ`-expansions of `λ` with shape `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !size_compatible(lambda, mu, nu) {
        return 0;
    }
    let mut count = 0u64;
    Search::new(lambda, mu, Some(nu)).run(&mut |_| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn anchor_value() {
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), 2);
        let ex = enumerate_expansions(&p("[2,1]"), &p("[2,1]"), Some(&p("[3,2,1]")));
        assert_eq!(ex.len(), 2);
        assert!(ex.iter().all(|e| e.satisfies_conditions(&p("[2,1]"))));
    }

    #[test]
    fn column_expansion() {
        assert_eq!(lr_coefficient(&p("[2,1,1]"), &p("[1,1,1]"), &p("[3,2,2]")), 1);
    }

    #[test]
    fn empty_mu() {
        let l = p("[3,1]");
        let ex = enumerate_expansions(&l, &Partition::empty(), None);
        assert_eq!(ex.len(), 1);
        assert_eq!(ex[0].shape, l);
        assert!(ex[0].boxes.is_empty());
        assert_eq!(lr_coefficient(&l, &Partition::empty(), &l), 1);
        assert_eq!(lr_coefficient(&l, &Partition::empty(), &p("[4]")), 0);
    }

    #[test]
    fn incompatible_shapes_are_zero() {
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[1]"), &p("[3,2]")), 0);
        assert_eq!(lr_coefficient(&p("[3]"), &p("[1]"), &p("[2,2]")), 0);
        assert!(enumerate_expansions(&p("[3]"), &p("[1]"), Some(&p("[2,2]"))).is_empty());
    }

    #[test]
    fn known_products() {
        // s_1 * s_1 = s_2 + s_11
        let one = p("[1]");
        assert_eq!(lr_coefficient(&one, &one, &p("[2]")), 1);
        assert_eq!(lr_coefficient(&one, &one, &p("[1,1]")), 1);
        let all = enumerate_expansions(&p("[2,1]"), &p("[2,1]"), None);
        let total: usize = all.len();
        // s_21 * s_21 has 7 constituents, [3,2,1] twice.
        assert_eq!(total, 8);
    }

    #[test]
    fn corrupted_expansion_fails_conditions() {
        let mut ex = enumerate_expansions(&p("[2,1]"), &p("[2,1]"), Some(&p("[3,2,1]")))
            .pop()
            .unwrap();
        assert!(ex.satisfies_conditions(&p("[2,1]")));
        for b in &mut ex.boxes {
            b.label = 3 - b.label.min(2);
        }
        assert!(!ex.satisfies_conditions(&p("[2,1]")));
    }
}
