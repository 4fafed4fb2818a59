//! The rank-two reflection groups `G(d,1,2)`.
//!
//! `G(d,1,2)` is generated by `t = diag(1, ζ)` (`ζ = e^{2πi/d}`) and the
//! transposition `s`; it has order `2d²`. Its irreducibles are `2d` linear
//! characters `t ↦ ζ^a, s ↦ ±1` and the planar representations `(i,j)`,
//! `i ≢ j mod d`, given by `t ↦ diag(ζ^i, ζ^j)`, `s ↦ [[0,1],[1,0]]`.
//!
//! Tensor products follow from the matrix models:
//!
//! * linear ⊗ linear multiplies the characters;
//! * `(i,j) ⊗ (a,±) = (i+a, j+a)` (the sign is absorbed by conjugating with
//!   `diag(1,-1)`);
//! * `(i,j) ⊗ (k,l)` splits along `{e₁f₁, e₂f₂}` and `{e₁f₂, e₂f₁}` into the
//!   formal pairs `(i+k, j+l)` and `(i+l, j+k)`; a pair `(p,p)` is not
//!   irreducible and splits into `(p,+) + (p,-)` along the eigenvectors of the
//!   swap.
//!
//! Floating point is used only in [`validate_rules`], which rebuilds every
//! structure constant from the matrix models.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generation_checker::{check_generation, GenerationReport, RingData};
use crate::virtual_character::Combination;

/// Largest `d` accepted unless overridden.
pub const DEFAULT_G12_CEILING: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RankTwoLabel {
    /// `t ↦ ζ^a`, `s ↦ sign`.
    Linear { a: usize, sign: i8 },
    /// Canonical representative `0 ≤ i < j < d`.
    Planar { i: usize, j: usize },
}

impl RankTwoLabel {
    pub fn linear(a: i64, sign: i8, d: usize) -> Result<Self> {
        if d == 0 || !(sign == 1 || sign == -1) {
            return Err(Error::InvalidLabel(format!("linear({a},{sign}) for d={d}")));
        }
        Ok(RankTwoLabel::Linear {
            a: a.rem_euclid(d as i64) as usize,
            sign,
        })
    }

    /// `(i, j)` reduced mod `d`, unordered; fails when `i ≡ j`.
    pub fn planar(i: i64, j: i64, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidLabel("d = 0".into()));
        }
        let (i, j) = (i.rem_euclid(d as i64) as usize, j.rem_euclid(d as i64) as usize);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Ok(RankTwoLabel::Planar { i, j }),
            std::cmp::Ordering::Greater => Ok(RankTwoLabel::Planar { i: j, j: i }),
            std::cmp::Ordering::Equal => Err(Error::InvalidLabel(format!("({i},{j}) mod {d}"))),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            RankTwoLabel::Linear { .. } => 1,
            RankTwoLabel::Planar { .. } => 2,
        }
    }

    fn validate(&self, d: usize) -> Result<()> {
        let ok = match *self {
            RankTwoLabel::Linear { a, sign } => a < d && (sign == 1 || sign == -1),
            RankTwoLabel::Planar { i, j } => i < j && j < d,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel(format!("{self} for d={d}")))
        }
    }
}

impl fmt::Display for RankTwoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankTwoLabel::Linear { a, sign } => {
                write!(f, "chi({a},{})", if *sign > 0 { '+' } else { '-' })
            }
            RankTwoLabel::Planar { i, j } => write!(f, "({i},{j})"),
        }
    }
}

/// All irreducible labels of `G(d,1,2)`: linear ones first, then planar.
pub fn g12_labels(d: usize) -> Vec<RankTwoLabel> {
    let mut out = Vec::with_capacity(2 * d + d * d.saturating_sub(1) / 2);
    for a in 0..d {
        for sign in [1, -1] {
            out.push(RankTwoLabel::Linear { a, sign });
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            out.push(RankTwoLabel::Planar { i, j });
        }
    }
    out
}

/// The reflection representation `V = (0,1)`; needs `d ≥ 2`.
pub fn g12_reflection(d: usize) -> Result<RankTwoLabel> {
    RankTwoLabel::planar(0, 1, d)
}

fn formal_pair(p: usize, q: usize, d: usize, out: &mut Combination<RankTwoLabel>) -> Result<()> {
    if (p % d) == (q % d) {
        out.add_term(RankTwoLabel::linear(p as i64, 1, d)?, 1)?;
        out.add_term(RankTwoLabel::linear(p as i64, -1, d)?, 1)
    } else {
        out.add_term(RankTwoLabel::planar(p as i64, q as i64, d)?, 1)
    }
}

/// `x ⊗ y` in `R(G(d,1,2))`.
pub fn g12_tensor(x: RankTwoLabel, y: RankTwoLabel, d: usize) -> Result<Combination<RankTwoLabel>> {
    x.validate(d)?;
    y.validate(d)?;
    let mut out = Combination::new();
    match (x, y) {
        (RankTwoLabel::Linear { a, sign: s }, RankTwoLabel::Linear { a: b, sign: t }) => {
            out.add_term(RankTwoLabel::linear((a + b) as i64, s * t, d)?, 1)?;
        }
        (RankTwoLabel::Planar { i, j }, RankTwoLabel::Linear { a, .. })
        | (RankTwoLabel::Linear { a, .. }, RankTwoLabel::Planar { i, j }) => {
            out.add_term(RankTwoLabel::planar((i + a) as i64, (j + a) as i64, d)?, 1)?;
        }
        (RankTwoLabel::Planar { i, j }, RankTwoLabel::Planar { i: k, j: l }) => {
            formal_pair(i + k, j + l, d, &mut out)?;
            formal_pair(i + l, j + k, d, &mut out)?;
        }
    }
    Ok(out)
}

/// Structure constants of `R(G(d,1,2))` over [`g12_labels`].
pub fn g12_ring_data(d: usize) -> Result<RingData> {
    let labels = g12_labels(d);
    let index: HashMap<RankTwoLabel, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let m = labels.len();
    let mut table = Vec::with_capacity(m * m);
    for &x in &labels {
        for &y in &labels {
            let mut row = vec![0i64; m];
            for (l, c) in g12_tensor(x, y, d)?.iter() {
                row[index[l]] = c;
            }
            table.push(row);
        }
    }
    let unit = index[&RankTwoLabel::Linear { a: 0, sign: 1 }];
    RingData::from_table(labels.iter().map(|l| l.to_string()).collect(), unit, table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum G12Set {
    /// `V = (0,1)` and every linear character.
    VPlusLinear,
    /// Linear characters only.
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G12Report {
    pub d: usize,
    pub labels: usize,
    #[serde(flatten)]
    pub generation: GenerationReport,
}

/// Runs the generation checker on `R(G(d,1,2))`.
///
/// For `d = 1` the group is `S_2`, there is no planar representation, and
/// `V` is omitted from the generating set.
pub fn g12_generation_check(d: usize, set: G12Set) -> Result<G12Report> {
    g12_generation_check_with_ceiling(d, set, DEFAULT_G12_CEILING)
}

pub fn g12_generation_check_with_ceiling(d: usize, set: G12Set, ceiling: usize) -> Result<G12Report> {
    if d == 0 {
        return Err(Error::TooSmall {
            op: "G(d,1,2)",
            n: 0,
            min: 1,
        });
    }
    if d > ceiling {
        return Err(Error::Ceiling {
            what: "G(d,1,2)",
            n: d,
            max: ceiling,
        });
    }
    let data = g12_ring_data(d)?;
    let labels = g12_labels(d);
    let mut gens: Vec<Vec<i64>> = labels
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, RankTwoLabel::Linear { .. }))
        .map(|(i, _)| data.basis_vector(i))
        .collect();
    if set == G12Set::VPlusLinear && d >= 2 {
        let v = g12_reflection(d)?;
        let idx = labels.iter().position(|l| *l == v).expect("V is a label");
        gens.push(data.basis_vector(idx));
    }
    Ok(G12Report {
        d,
        labels: labels.len(),
        generation: check_generation(&data, &gens)?,
    })
}

// ---- floating-point oracle ----

/// A monomial 2×2 matrix over `μ_d`: column `c` maps to `ζ^{phase[c]} e_{perm[c]}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Monomial2 {
    perm: [usize; 2],
    phase: [usize; 2],
}

impl Monomial2 {
    fn identity() -> Self {
        Monomial2 {
            perm: [0, 1],
            phase: [0, 0],
        }
    }

    /// `self ∘ other`.
    fn compose(&self, other: &Monomial2, d: usize) -> Monomial2 {
        let mut perm = [0; 2];
        let mut phase = [0; 2];
        for c in 0..2 {
            let mid = other.perm[c];
            perm[c] = self.perm[mid];
            phase[c] = (other.phase[c] + self.phase[mid]) % d;
        }
        Monomial2 { perm, phase }
    }
}

type Mat = Vec<Vec<Complex64>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn model(label: RankTwoLabel, d: usize) -> [Mat; 2] {
    let z = |e: usize| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / d as f64);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match label {
        RankTwoLabel::Linear { a, sign } => [vec![vec![z(a)]], vec![vec![Complex64::new(sign as f64, 0.0)]]],
        RankTwoLabel::Planar { i, j } => [
            vec![vec![z(i), zero], vec![zero, z(j)]],
            vec![vec![zero, one], vec![one, zero]],
        ],
    }
}

/// Outcome of rebuilding the structure constants from the matrix models.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct G12Validation {
    pub d: usize,
    pub group_order: usize,
    /// Largest `|float − closed form|` over all structure constants.
    pub max_error: f64,
    /// Largest `‖ρ(g)ρ(x) − ρ(gx)‖` seen while checking the models are
    /// homomorphisms.
    pub max_model_error: f64,
}

impl G12Validation {
    pub fn passed(&self, tol: f64) -> bool {
        self.max_error <= tol && self.max_model_error <= tol
    }
}

/// Compares every closed-form structure constant with
/// `⟨χ_x χ_y, χ_z⟩ = |G|⁻¹ Σ_g χ_x(g) χ_y(g) conj(χ_z(g))`, with characters
/// taken as traces of the matrix models on every group element.
pub fn validate_rules(d: usize) -> Result<G12Validation> {
    let gens = [
        Monomial2 {
            perm: [0, 1],
            phase: [0, 1],
        },
        Monomial2 {
            perm: [1, 0],
            phase: [0, 0],
        },
    ];
    // Breadth-first enumeration of the natural representation, recording a
    // word in the generators for every element.
    let mut elements = vec![Monomial2::identity()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut seen: HashMap<Monomial2, usize> = HashMap::from([(Monomial2::identity(), 0)]);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head];
        for (gi, x) in gens.iter().enumerate() {
            let h = g.compose(x, d);
            let target = *seen.entry(h).or_insert_with(|| {
                elements.push(h);
                let mut w = words[head].clone();
                w.push(gi);
                words.push(w);
                elements.len() - 1
            });
            edges.push((head, gi, target));
        }
        head += 1;
    }
    let order = elements.len();
    if order != 2 * d * d {
        return Err(Error::Consistency(format!("G({d},1,2) enumerated with {order} elements")));
    }

    let labels = g12_labels(d);
    let mut max_model_error: f64 = 0.0;
    let mut chars: Vec<Vec<Complex64>> = Vec::with_capacity(labels.len());
    for &label in &labels {
        let gen_images = model(label, d);
        let dim = label.dimension();
        let identity: Mat = (0..dim)
            .map(|i| (0..dim).map(|j| Complex64::new((i == j) as u8 as f64, 0.0)).collect())
            .collect();
        let images: Vec<Mat> = words
            .iter()
            .map(|w| w.iter().fold(identity.clone(), |acc, &gi| mat_mul(&acc, &gen_images[gi])))
            .collect();
        for &(src, gi, dst) in &edges {
            let lhs = mat_mul(&images[src], &gen_images[gi]);
            for (r1, r2) in lhs.iter().zip(&images[dst]) {
                for (a, b) in r1.iter().zip(r2) {
                    max_model_error = max_model_error.max((a - b).norm());
                }
            }
        }
        chars.push(images.iter().map(|m| (0..dim).map(|i| m[i][i]).sum()).collect());
    }

    let mut max_error: f64 = 0.0;
    for (xi, &x) in labels.iter().enumerate() {
        for (yi, &y) in labels.iter().enumerate() {
            let exact = g12_tensor(x, y, d)?;
            for (zi, z) in labels.iter().enumerate() {
                let s: Complex64 = (0..order)
                    .map(|g| chars[xi][g] * chars[yi][g] * chars[zi][g].conj())
                    .sum::<Complex64>()
                    / order as f64;
                let expected = exact.coeff(z) as f64;
                max_error = max_error.max((s.re - expected).abs()).max(s.im.abs());
            }
        }
    }
    Ok(G12Validation {
        d,
        group_order: order,
        max_error,
        max_model_error,
    })
}
