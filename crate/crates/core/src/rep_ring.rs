//! The representation ring `R(S_n)`.
//!
//! Structure constants `C_{λμν}` are computed from characters only. Induction
//! and restriction between `S_{n-1}` and `S_n` follow Young's rule on
//! diagrams.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::generation_checker::RingData;
use crate::partitions::{level, Partition};
use crate::sym_characters::CharacterTable;
use crate::virtual_character::VirtualCharacter;

/// `R(S_n)` with a shared character table and a lazily filled Kronecker cache.
///
/// The cache holds one slot per unordered pair of irreducibles; a slot is
/// written at most once, so concurrent sweeps can share a `RepRing`.
#[derive(Debug)]
pub struct RepRing {
    table: CharacterTable,
    kron: Vec<OnceLock<Vec<i64>>>,
}

impl RepRing {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self::from_table(CharacterTable::new(n)?))
    }

    pub fn from_table(table: CharacterTable) -> Self {
        let m = table.len();
        let kron = (0..m * (m + 1) / 2).map(|_| OnceLock::new()).collect();
        RepRing { table, kron }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn partitions(&self) -> &[Partition] {
        self.table.partitions()
    }

    fn pair_slot(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        b * (b + 1) / 2 + a
    }

    /// Coefficients of `V_i ⊗ V_j` over the irreducibles, by table index.
    pub fn kronecker_indices(&self, i: usize, j: usize) -> Result<&[i64]> {
        let slot = &self.kron[self.pair_slot(i, j)];
        if let Some(v) = slot.get() {
            return Ok(v);
        }
        let a = self.table.row(i);
        let b = self.table.row(j);
        let coeffs = (0..self.table.len())
            .map(|k| self.table.triple_pairing(a, b, self.table.row(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(slot.get_or_init(|| coeffs))
    }

    /// `a ⊗ b`, extended bilinearly to virtual characters.
    pub fn kronecker(&self, a: &VirtualCharacter, b: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check(a)?;
        a.check_same_n(b)?;
        let mut acc = vec![0i128; self.table.len()];
        for (la, ca) in a.iter() {
            let i = self.table.index_of(la)?;
            for (lb, cb) in b.iter() {
                let j = self.table.index_of(lb)?;
                let w = ca as i128 * cb as i128;
                for (slot, &c) in acc.iter_mut().zip(self.kronecker_indices(i, j)?) {
                    *slot = slot
                        .checked_add(w.checked_mul(c as i128).ok_or(Error::Overflow("kronecker"))?)
                        .ok_or(Error::Overflow("kronecker"))?;
                }
            }
        }
        self.character_from_dense(&acc)
    }

    fn character_from_dense(&self, acc: &[i128]) -> Result<VirtualCharacter> {
        let mut out = VirtualCharacter::zero(self.n());
        for (lambda, &c) in self.partitions().iter().zip(acc) {
            out.add_term(lambda.clone(), crate::error::narrow(c, "kronecker")?)?;
        }
        Ok(out)
    }

    /// `V_λ ⊗ V_μ`.
    pub fn kronecker_irreducible(&self, lambda: &Partition, mu: &Partition) -> Result<VirtualCharacter> {
        let i = self.table.index_of(lambda)?;
        let j = self.table.index_of(mu)?;
        let v = self.kronecker_indices(i, j)?;
        VirtualCharacter::from_terms(
            self.n(),
            self.partitions().iter().cloned().zip(v.iter().copied()),
        )
    }

    /// `C_{λμν} = Σ_ρ χ_λ(ρ) χ_μ(ρ) χ_ν(ρ) / z_ρ`.
    pub fn structure_constant(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
        let i = self.table.index_of(lambda)?;
        let j = self.table.index_of(mu)?;
        let k = self.table.index_of(nu)?;
        Ok(self.kronecker_indices(i, j)?[k])
    }

    /// The standard representation `V = V_{[n-1,1]}`.
    pub fn standard(&self) -> Result<VirtualCharacter> {
        let n = self.n();
        if n < 2 {
            return Err(Error::TooSmall {
                op: "standard representation",
                n,
                min: 2,
            });
        }
        Ok(VirtualCharacter::irreducible(Partition::from_sorted_unchecked(vec![n - 1, 1])))
    }

    /// `Ind Res a`, computed twice: by Young's rule, and as `a + a ⊗ V`.
    /// The two must agree.
    pub fn ind_res(&self, a: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check(a)?;
        let combinatorial = induce(&restrict(a)?)?;
        let via_tensor = a.add(&self.kronecker(a, &self.standard()?)?)?;
        if combinatorial != via_tensor {
            return Err(Error::Consistency(format!(
                "Ind Res {a} = {combinatorial} but {a} + {a}⊗V = {via_tensor}"
            )));
        }
        Ok(combinatorial)
    }

    /// Levels of every irreducible, found as the first tensor power of `V`
    /// containing it. Indexed like [`RepRing::partitions`].
    pub fn levels_bruteforce(&self) -> Result<Vec<usize>> {
        let n = self.n();
        let m = self.table.len();
        let mut found: Vec<Option<usize>> = vec![None; m];
        if n < 2 {
            // S_0 and S_1 have only the trivial representation.
            return Ok(vec![0; m]);
        }
        let v = self.standard()?;
        let mut power = VirtualCharacter::irreducible(Partition::row(n));
        // Every irreducible appears by r = n - 1; the bound only guards a bug.
        for r in 0..=n {
            for (lambda, c) in power.iter() {
                let i = self.table.index_of(lambda)?;
                if c > 0 && found[i].is_none() {
                    found[i] = Some(r);
                }
            }
            if found.iter().all(Option::is_some) {
                return Ok(found.into_iter().map(Option::unwrap).collect());
            }
            power = self.kronecker(&power, &v)?;
        }
        Err(Error::Consistency(format!(
            "some irreducible of S_{n} is missing from V^(r) for r <= {n}"
        )))
    }

    /// Least `r` with `V_λ ⊂ V^{⊗r}`.
    pub fn level_bruteforce(&self, lambda: &Partition) -> Result<usize> {
        let i = self.table.index_of(lambda)?;
        Ok(self.levels_bruteforce()?[i])
    }

    /// `V_λ ⊗ V_μ` truncated to constituents of level `level(λ) + level(μ)`.
    pub fn graded_product(&self, lambda: &Partition, mu: &Partition) -> Result<VirtualCharacter> {
        let target = level(lambda) + level(mu);
        let full = self.kronecker_irreducible(lambda, mu)?;
        VirtualCharacter::from_terms(
            self.n(),
            full.iter()
                .filter(|(nu, _)| level(nu) == target)
                .map(|(nu, c)| (nu.clone(), c)),
        )
    }

    /// Structure constants as abstract ring data for the generation checker.
    pub fn ring_data(&self) -> Result<RingData> {
        let m = self.table.len();
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                table.push(self.kronecker_indices(i, j)?.to_vec());
            }
        }
        let labels = self.partitions().iter().map(|p| p.to_string()).collect();
        // [n] is first in enumeration order.
        RingData::from_table(labels, 0, table)
    }

    fn check(&self, a: &VirtualCharacter) -> Result<()> {
        if a.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: a.n(),
            });
        }
        Ok(())
    }
}

/// Restriction to `S_{n-1}`: each `V_λ` becomes the sum of the diagrams
/// obtained by removing one box.
pub fn restrict(a: &VirtualCharacter) -> Result<VirtualCharacter> {
    let n = a.n();
    if n < 2 {
        return Err(Error::TooSmall {
            op: "restriction",
            n,
            min: 2,
        });
    }
    let mut out = VirtualCharacter::zero(n - 1);
    for (lambda, c) in a.iter() {
        for row in lambda.removable_rows() {
            out.add_term(lambda.remove_box(row), c)?;
        }
    }
    Ok(out)
}

/// Induction to `S_{n+1}`: each `V_λ` becomes the sum of the diagrams
/// obtained by adding one box.
pub fn induce(a: &VirtualCharacter) -> Result<VirtualCharacter> {
    let mut out = VirtualCharacter::zero(a.n() + 1);
    for (lambda, c) in a.iter() {
        for row in lambda.addable_rows() {
            out.add_term(lambda.add_box(row), c)?;
        }
    }
    Ok(out)
}
