//! Writing every irreducible of `S_n` as an integer polynomial in the hooks
//! `Λ^k V = V_{[n-k,1^k]}`.
//!
//! For a non-hook `λ` put `α = θ(λ)`, `r = |∂α|` (the number of rows of `α`)
//! and `λ̂ = [n - |α°|, α°₁, α°₂, …]`. Then `V_λ̂ ⊗ Λ^r V` contains `V_λ`
//! exactly once, and every other constituent `κ` satisfies `κ ≺ λ`, where
//! `≺` compares levels first and then `|θ(·)°|`. Subtracting the other
//! constituents and recursing gives an identity in `R(S_n)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{CheckedExt, Error, Result};
use crate::partitions::{boundary_size, hook_partition, interior, level, theta, Partition};
use crate::rep_ring::RepRing;
use crate::sym_characters::{CharacterTable, ClassFunction};
use crate::virtual_character::VirtualCharacter;

/// `λ ≺ μ`: lower level, or equal level and smaller `|θ(·)°|`.
pub fn precedes(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    let key = |p: &Partition| (level(p), interior(&theta(p)).size());
    let (a, b) = (key(lambda), key(mu));
    Ok(a.0 < b.0 || (a.0 == b.0 && a.1 < b.1))
}

/// Which basis of exterior powers the symbols of an expression refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExteriorBasis {
    /// `E_k = Λ^k V` for the standard representation `V`.
    Standard,
    /// `F_k = Λ^k C^n` for the permutation representation `C^n = 1 + V`.
    Permutation,
}

impl ExteriorBasis {
    fn symbol(self) -> &'static str {
        match self {
            ExteriorBasis::Standard => "E",
            ExteriorBasis::Permutation => "F",
        }
    }
}

/// A monomial `∏ E_k^{e_k}` with `E_0` the unit: `E_0` only appears, with
/// exponent one, in the empty product.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn unit(n: usize) -> Self {
        let mut exponents = vec![0; n.max(1)];
        exponents[0] = 1;
        Monomial { exponents }
    }

    /// The single symbol `E_k`.
    pub fn symbol(n: usize, k: usize) -> Self {
        let mut m = Self::unit(n);
        m.exponents[0] = 0;
        m.exponents[k] = 1;
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        let nontrivial = self.exponents.iter().skip(1).any(|&e| e > 0);
        self.exponents[0] = if nontrivial { 0 } else { 1 };
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of non-unit factors.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().skip(1).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        let mut m = Monomial { exponents };
        m.normalize();
        m
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, symbol: &str) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{symbol}{k}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Higher degree first, then larger exponents on higher-index symbols, so
/// that `E1^2 > E2 > E1 > E0` and the printed order reads top-down.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.exponents.iter().rev().cmp(self.exponents.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nonzero: Vec<_> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .collect();
        let mut map = s.serialize_map(Some(nonzero.len()))?;
        for (k, e) in nonzero {
            map.serialize_entry(&k.to_string(), e)?;
        }
        map.end()
    }
}

/// An integer polynomial in the exterior-power symbols, standing for an
/// element of `R(S_n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookExpression {
    n: usize,
    basis: ExteriorBasis,
    terms: BTreeMap<Monomial, i64>,
}

impl HookExpression {
    pub fn zero(n: usize) -> Self {
        HookExpression {
            n,
            basis: ExteriorBasis::Standard,
            terms: BTreeMap::new(),
        }
    }

    /// The single symbol `E_k`, `0 ≤ k ≤ n-1`.
    pub fn symbol(n: usize, k: usize) -> Result<Self> {
        if k >= n.max(1) {
            return Err(Error::HookRange { n, k: k as i64 });
        }
        let mut e = Self::zero(n);
        e.terms.insert(Monomial::symbol(n, k), 1);
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> ExteriorBasis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_monomial(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(m.clone()).or_insert(0);
        *slot = slot.checked_add(c).or_overflow("hook expression")?;
        if *slot == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &HookExpression, factor: i64) -> Result<()> {
        for (m, c) in other.terms() {
            self.add_monomial(m.clone(), c.checked_mul(factor).or_overflow("hook expression")?)?;
        }
        Ok(())
    }

    pub fn mul(&self, other: &HookExpression) -> Result<HookExpression> {
        let mut out = HookExpression {
            n: self.n,
            basis: self.basis,
            terms: BTreeMap::new(),
        };
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_monomial(a.mul(b), ca.checked_mul(cb).or_overflow("hook expression")?)?;
            }
        }
        Ok(out)
    }

    /// Rewrites in the symbols `F_j = Λ^j C^n`, using
    /// `Λ^k V = Σ_{j ≤ k} (-1)^{k-j} Λ^j C^n`.
    pub fn to_permutation_basis(&self) -> Result<HookExpression> {
        if self.basis == ExteriorBasis::Permutation {
            return Ok(self.clone());
        }
        let n = self.n;
        let substitution = |k: usize| -> Result<HookExpression> {
            let mut e = HookExpression::zero(n);
            for j in 0..=k {
                let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
                e.add_monomial(Monomial::symbol(n, j), sign)?;
            }
            Ok(e)
        };
        let mut out = HookExpression::zero(n);
        for (m, c) in self.terms() {
            let mut term = HookExpression::zero(n);
            term.add_monomial(Monomial::unit(n), c)?;
            for (k, &e) in m.exponents.iter().enumerate().skip(1) {
                let s = substitution(k)?;
                for _ in 0..e {
                    term = term.mul(&s)?;
                }
            }
            out.add_scaled(&term, 1)?;
        }
        out.basis = ExteriorBasis::Permutation;
        Ok(out)
    }

    /// Evaluates the expression to a class function of `S_n`.
    pub fn evaluate(&self, table: &CharacterTable) -> Result<ClassFunction> {
        let n = self.n;
        if table.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: table.n(),
            });
        }
        let standard = |k: usize| -> Result<ClassFunction> { table.character(&hook_partition(n, k as i64)?) };
        let symbol_char = |k: usize| -> Result<ClassFunction> {
            match self.basis {
                ExteriorBasis::Standard => standard(k),
                ExteriorBasis::Permutation => {
                    let mut f = standard(k)?;
                    if k > 0 {
                        f.add_scaled(&standard(k - 1)?, 1)?;
                    }
                    Ok(f)
                }
            }
        };
        let chars = (0..n.max(1))
            .map(|k| if n == 0 { table.character(&Partition::empty()) } else { symbol_char(k) })
            .collect::<Result<Vec<_>>>()?;
        let one = table.character(&Partition::row(n))?;
        let mut total = ClassFunction::zero(n);
        for (m, c) in self.terms() {
            let mut f = one.clone();
            for (k, &e) in m.exponents.iter().enumerate().skip(1) {
                for _ in 0..e {
                    f = f.pointwise_product(&chars[k])?;
                }
            }
            total.add_scaled(&f, c)?;
        }
        Ok(total)
    }
}

impl fmt::Display for HookExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let symbol = self.basis.symbol();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            m.write(f, symbol)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    monomial: &'a Monomial,
    coeff: i64,
}

impl Serialize for HookExpression {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<_> = self
            .terms()
            .map(|(monomial, coeff)| TermRepr { monomial, coeff })
            .collect();
        let mut st = s.serialize_struct("HookExpression", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The inductive step for a non-hook `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    pub lambda_hat: Partition,
    pub k: usize,
    /// `V_λ̂ ⊗ Λ^k V - V_λ`.
    pub remainder: VirtualCharacter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `λ = [n-k, 1^k]` is itself `Λ^k V`.
    Hook { k: usize },
    Step(WitnessResult),
}

/// Runs the construction over one `R(S_n)`, memoising per-partition results.
#[derive(Debug)]
pub struct HookGenerator<'a> {
    ring: &'a RepRing,
    memo: Mutex<HashMap<Partition, HookExpression>>,
}

impl<'a> HookGenerator<'a> {
    pub fn new(ring: &'a RepRing) -> Self {
        HookGenerator {
            ring,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &RepRing {
        self.ring
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.size() != self.ring.n() {
            return Err(Error::SizeMismatch {
                expected: self.ring.n(),
                found: lambda.size(),
            });
        }
        Ok(())
    }

    /// The pair `(λ̂, k)`, with its defining properties checked by an actual
    /// Kronecker product.
    pub fn witness(&self, lambda: &Partition) -> Result<Witness> {
        self.check(lambda)?;
        let n = self.ring.n();
        let alpha = theta(lambda);
        let alpha_in = interior(&alpha);
        if alpha_in.is_empty() {
            return Ok(Witness::Hook {
                k: boundary_size(&alpha),
            });
        }
        let k = boundary_size(&alpha);
        let mut parts = vec![n - alpha_in.size()];
        parts.extend_from_slice(alpha_in.parts());
        let lambda_hat = Partition::new(parts)
            .map_err(|e| Error::Consistency(format!("witness shape for {lambda}: {e}")))?;

        if level(&lambda_hat) >= level(lambda) {
            return Err(Error::Consistency(format!(
                "witness {lambda_hat} for {lambda} does not lower the level"
            )));
        }
        let hook = hook_partition(n, k as i64)?;
        let product = self.ring.kronecker_irreducible(&lambda_hat, &hook)?;
        let mult = product.coeff(lambda);
        if mult != 1 {
            return Err(Error::Consistency(format!(
                "{lambda} occurs {mult} times in {lambda_hat} ⊗ Λ^{k}V"
            )));
        }
        let mut remainder = product;
        remainder.add_term(lambda.clone(), -1)?;
        for (kappa, _) in remainder.iter() {
            if !precedes(kappa, lambda)? {
                return Err(Error::Consistency(format!(
                    "constituent {kappa} of {lambda_hat} ⊗ Λ^{k}V does not precede {lambda}"
                )));
            }
        }
        Ok(Witness::Step(WitnessResult {
            lambda_hat,
            k,
            remainder,
        }))
    }

    /// `V_λ` as a polynomial in `E_0, …, E_{n-1}`.
    pub fn hook_decompose(&self, lambda: &Partition) -> Result<HookExpression> {
        self.check(lambda)?;
        if let Some(e) = self.memo.lock().expect("memo poisoned").get(lambda) {
            return Ok(e.clone());
        }
        let n = self.ring.n();
        let expr = match self.witness(lambda)? {
            Witness::Hook { k } => HookExpression::symbol(n, k)?,
            Witness::Step(w) => {
                let mut e = self
                    .hook_decompose(&w.lambda_hat)?
                    .mul(&HookExpression::symbol(n, w.k)?)?;
                for (kappa, c) in w.remainder.iter() {
                    e.add_scaled(&self.hook_decompose(kappa)?, -c)?;
                }
                e
            }
        };
        let mut memo = self.memo.lock().expect("memo poisoned");
        Ok(memo.entry(lambda.clone()).or_insert(expr).clone())
    }

    /// Number of witness steps on the longest recursion path from `λ`.
    pub fn recursion_depth(&self, lambda: &Partition) -> Result<usize> {
        match self.witness(lambda)? {
            Witness::Hook { .. } => Ok(0),
            Witness::Step(w) => {
                let mut depth = self.recursion_depth(&w.lambda_hat)?;
                for (kappa, _) in w.remainder.iter() {
                    depth = depth.max(self.recursion_depth(kappa)?);
                }
                Ok(depth + 1)
            }
        }
    }
}

/// Whether `e` evaluates to the character of `V_λ` on every class.
pub fn verify_decomposition(table: &CharacterTable, lambda: &Partition, e: &HookExpression) -> Result<bool> {
    if e.n() != lambda.size() || table.n() != lambda.size() {
        return Ok(false);
    }
    Ok(e.evaluate(table)? == table.character(lambda)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn order_examples() {
        assert!(precedes(&p("[8]"), &p("[7,1]")).unwrap());
        assert!(precedes(&p("[5,1,1,1]"), &p("[5,3]")).unwrap());
        assert!(!precedes(&p("[4,2,2]"), &p("[4,3,1]")).unwrap());
        assert!(!precedes(&p("[4,3,1]"), &p("[4,2,2]")).unwrap());
        assert!(!precedes(&p("[4,2,2]"), &p("[4,2,2]")).unwrap());
        assert!(precedes(&p("[2]"), &p("[3]")).is_err());
    }

    #[test]
    fn witness_for_fig5_shape() {
        let ring = RepRing::new(12).unwrap();
        let g = HookGenerator::new(&ring);
        match g.witness(&p("[5,3,2,2]")).unwrap() {
            Witness::Step(w) => {
                assert_eq!(w.lambda_hat, p("[8,2,1,1]"));
                assert_eq!(w.k, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn witness_small() {
        let ring = RepRing::new(4).unwrap();
        let g = HookGenerator::new(&ring);
        assert_eq!(g.witness(&p("[2,1,1]")).unwrap(), Witness::Hook { k: 2 });
        assert_eq!(g.witness(&p("[4]")).unwrap(), Witness::Hook { k: 0 });
        let Witness::Step(w) = g.witness(&p("[2,2]")).unwrap() else {
            panic!()
        };
        assert_eq!(w.lambda_hat, p("[3,1]"));
        assert_eq!(w.k, 1);
        assert_eq!(w.remainder.to_string(), "[4] + [3,1] + [2,1,1]");
    }

    #[test]
    fn decompositions_print_as_expected() {
        let ring = RepRing::new(4).unwrap();
        let g = HookGenerator::new(&ring);
        assert_eq!(g.hook_decompose(&p("[4]")).unwrap().to_string(), "E0");
        assert_eq!(g.hook_decompose(&p("[3,1]")).unwrap().to_string(), "E1");
        assert_eq!(
            g.hook_decompose(&p("[2,2]")).unwrap().to_string(),
            "E1^2 - E2 - E1 - E0"
        );
        let r3 = RepRing::new(3).unwrap();
        let g3 = HookGenerator::new(&r3);
        assert_eq!(g3.hook_decompose(&p("[2,1]")).unwrap().to_string(), "E1");
    }

    #[test]
    fn verification() {
        let ring = RepRing::new(5).unwrap();
        let t = ring.table();
        let e0 = HookExpression::symbol(5, 0).unwrap();
        assert!(verify_decomposition(t, &p("[5]"), &e0).unwrap());
        assert!(!verify_decomposition(t, &p("[4,1]"), &e0).unwrap());
        let g = HookGenerator::new(&ring);
        for lambda in ring.partitions() {
            let e = g.hook_decompose(lambda).unwrap();
            assert!(verify_decomposition(t, lambda, &e).unwrap(), "{lambda}: {e}");
            let f = e.to_permutation_basis().unwrap();
            assert!(verify_decomposition(t, lambda, &f).unwrap(), "{lambda}: {f}");
        }
    }

    #[test]
    fn json_shape() {
        let ring = RepRing::new(4).unwrap();
        let g = HookGenerator::new(&ring);
        let e = g.hook_decompose(&p("[2,2]")).unwrap();
        let json = serde_json::to_value(&e).unwrap();
        assert_eq!(json["n"], 4);
        assert_eq!(json["terms"][0]["monomial"]["1"], 2);
        assert_eq!(json["terms"][0]["coeff"], 1);
        assert_eq!(json["terms"][3]["monomial"]["0"], 1);
        assert_eq!(json["terms"][3]["coeff"], -1);
    }
}
