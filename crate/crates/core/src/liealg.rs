//! Lie algebras given by exact structure constants.
//!
//! Constants follow the physics convention `[bᵢ, bⱼ] = Σₖ f(i,j,k)·bₖ` with
//! complex rational `f`, so `[Lx, Ly] = i·Lz` is stored as `f(Lx,Ly,Lz) = i`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{gauss, ratio, GaussianRational, Rational};
use crate::geometry::{IncidenceStructure, Line, LineKind};

/// A finite-dimensional Lie algebra over a labeled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantAlgebra {
    labels: Vec<String>,
    /// Nonzero constants only, keyed by `(i, j, k)`.
    constants: BTreeMap<(usize, usize, usize), GaussianRational>,
}

impl StructureConstantAlgebra {
    /// Validates that every index is in range and that `f(i,j,k) = −f(j,i,k)`.
    pub fn new(labels: Vec<String>, constants: BTreeMap<(usize, usize, usize), GaussianRational>) -> Result<Self> {
        let d = labels.len();
        let constants: BTreeMap<_, _> = constants.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        for (&(i, j, k), value) in &constants {
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidConstants(format!("index ({i},{j},{k}) out of range")));
            }
            let mirror = constants
                .get(&(j, i, k))
                .cloned()
                .unwrap_or_else(GaussianRational::zero);
            if mirror != -value {
                return Err(Error::InvalidConstants(format!(
                    "f({i},{j},{k}) is not antisymmetric in its first two indices"
                )));
            }
        }
        Ok(Self { labels, constants })
    }

    /// Builds from brackets `[bᵢ, bⱼ] ∋ value·bₖ`, filling in the mirrored entries.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, usize, GaussianRational)>,
    ) -> Result<Self> {
        let mut constants = BTreeMap::new();
        for (i, j, k, value) in brackets {
            if i == j && !value.is_zero() {
                return Err(Error::InvalidConstants(format!("[b{i}, b{i}] must vanish")));
            }
            constants.insert((j, i, k), -&value);
            constants.insert((i, j, k), value);
        }
        Self::new(labels, constants)
    }

    /// The abelian algebra on `labels`.
    pub fn abelian(labels: Vec<String>) -> Self {
        Self {
            labels,
            constants: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> GaussianRational {
        self.constants
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Nonzero constants as `(i, j, k, f)` with `i < j`, sorted.
    pub fn sparse_constants(&self) -> Vec<(usize, usize, usize, GaussianRational)> {
        self.constants
            .iter()
            .filter(|((i, j, _), _)| i < j)
            .map(|(&(i, j, k), v)| (i, j, k, v.clone()))
            .collect()
    }

    /// Returns a copy with `f(i,j,k)` set to `value` (and `f(j,i,k)` to `−value`).
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: GaussianRational) -> Result<Self> {
        let mut constants = self.constants.clone();
        if i == j {
            return Err(Error::InvalidConstants(format!("[b{i}, b{i}] must vanish")));
        }
        constants.insert((j, i, k), -&value);
        constants.insert((i, j, k), value);
        Self::new(self.labels.clone(), constants)
    }

    /// `[bᵢ, bⱼ]` as a coordinate vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<GaussianRational> {
        (0..self.dim()).map(|k| self.constant(i, j, k)).collect()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vectors(&self, u: &[GaussianRational], w: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); self.dim()];
        for (&(i, j, k), f) in &self.constants {
            if u[i].is_zero() || w[j].is_zero() {
                continue;
            }
            out[k] = &out[k] + &(&u[i] * &w[j]) * f;
        }
        out
    }
}

/// Whether the cyclic sum `[[bᵢ,bⱼ],bₖ] + [[bⱼ,bₖ],bᵢ] + [[bₖ,bᵢ],bⱼ]`
/// vanishes for every triple of basis elements.
pub fn jacobi_check(a: &StructureConstantAlgebra) -> bool {
    let d = a.dim();
    let double = |i: usize, j: usize, k: usize| -> Vec<GaussianRational> {
        // [[bi,bj],bk] = Σ_m f(i,j,m) [bm,bk]
        let mut out = vec![GaussianRational::zero(); d];
        for m in 0..d {
            let fm = a.constant(i, j, m);
            if fm.is_zero() {
                continue;
            }
            for (l, slot) in out.iter_mut().enumerate() {
                let g = a.constant(m, k, l);
                if !g.is_zero() {
                    *slot = &*slot + &(&fm * &g);
                }
            }
        }
        out
    };
    (0..d).tuple_combinations().all(|(i, j, k)| {
        let x = double(i, j, k);
        let y = double(j, k, i);
        let z = double(k, i, j);
        (0..d).all(|l| (&(&x[l] + &y[l]) + &z[l]).is_zero())
    })
}

/// An invertible change of basis: new `b'ₐ = Σᵢ matrix[a][i]·bᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    matrix: Vec<Vec<Rational>>,
    inverse: Vec<Vec<Rational>>,
    labels: Vec<String>,
}

impl BasisChange {
    pub fn new(matrix: Vec<Vec<Rational>>, labels: Vec<String>) -> Result<Self> {
        let d = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: row.len(),
            });
        }
        if labels.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: labels.len(),
            });
        }
        let inverse = invert(&matrix).ok_or(Error::SingularMatrix)?;
        Ok(Self {
            matrix,
            inverse,
            labels,
        })
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let d = labels.len();
        let matrix: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self {
            inverse: matrix.clone(),
            matrix,
            labels,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn inverse(&self) -> &[Vec<Rational>] {
        &self.inverse
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Gauss-Jordan inverse over the rationals; `None` if singular.
fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let d = m.len();
    let mut work: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let p = work[col][col].clone();
        for x in &mut work[col] {
            *x = &*x / &p;
        }
        for r in 0..d {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            let pivot_row = work[col].clone();
            for (x, y) in work[r].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * y);
            }
        }
    }
    Some(work.into_iter().map(|r| r[d..].to_vec()).collect())
}

/// Structure constants in the new basis:
/// `f'(a,b,c) = Σ T[a][i]·T[b][j]·f(i,j,k)·T⁻¹[k][c]`.
pub fn change_basis(a: &StructureConstantAlgebra, t: &BasisChange) -> Result<StructureConstantAlgebra> {
    let d = a.dim();
    if t.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: t.dim(),
        });
    }
    let lift = |q: &Rational| GaussianRational::new(q.clone(), Rational::zero());
    let mut constants = BTreeMap::new();
    for (x, y) in (0..d).tuple_combinations() {
        let u: Vec<GaussianRational> = t.matrix[x].iter().map(lift).collect();
        let w: Vec<GaussianRational> = t.matrix[y].iter().map(lift).collect();
        let old = a.bracket_vectors(&u, &w);
        for c in 0..d {
            let mut value = GaussianRational::zero();
            for (k, coeff) in old.iter().enumerate() {
                if !coeff.is_zero() && !t.inverse[k][c].is_zero() {
                    value = &value + &(coeff * &lift(&t.inverse[k][c]));
                }
            }
            if !value.is_zero() {
                constants.insert((y, x, c), -&value);
                constants.insert((x, y, c), value);
            }
        }
    }
    StructureConstantAlgebra::new(t.labels.clone(), constants)
}

/// Partition of the basis into the finest blocks such that no constant
/// couples two blocks: `f(i,j,k) ≠ 0` puts `i`, `j` and `k` in one block.
pub fn commuting_block_decomposition(a: &StructureConstantAlgebra) -> Vec<Vec<usize>> {
    let d = a.dim();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    let union = |parent: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (find(parent, x), find(parent, y));
        if rx != ry {
            parent[rx.max(ry)] = rx.min(ry);
        }
    };
    for &(i, j, k) in a.constants.keys() {
        union(&mut parent, i, j);
        union(&mut parent, i, k);
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..d {
        let root = find(&mut parent, x);
        blocks.entry(root).or_default().push(x);
    }
    blocks.into_values().collect()
}

/// Nonzero `c` with `v = c·e_k` for a single `k`, as `(k, c)`.
fn single_component(v: &[GaussianRational]) -> Option<(usize, GaussianRational)> {
    let mut nonzero = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (k, c) = nonzero.next()?;
    nonzero.next().is_none().then(|| (k, c.clone()))
}

/// Triples `{x, y, z}` whose brackets close cyclically with nonzero
/// constants: `[x,y] ∝ z`, `[y,z] ∝ x`, `[z,x] ∝ y`. Sorted by index.
pub fn su2_triples(a: &StructureConstantAlgebra) -> Vec<[usize; 3]> {
    (0..a.dim())
        .tuple_combinations()
        .filter(|&(x, y, z)| {
            [(x, y, z), (y, z, x), (z, x, y)]
                .into_iter()
                .all(|(p, q, r)| matches!(single_component(&a.bracket(p, q)), Some((k, _)) if k == r))
        })
        .map(|(x, y, z)| [x, y, z])
        .collect()
}

/// Whether `[a,b] = i·c`, `[b,c] = i·a`, `[c,a] = i·b` exactly.
pub fn has_su2_constants(alg: &StructureConstantAlgebra, [a, b, c]: [usize; 3]) -> bool {
    let i = gauss(0, 1);
    [(a, b, c), (b, c, a), (c, a, b)].into_iter().all(|(p, q, r)| {
        let mut expected = vec![GaussianRational::zero(); alg.dim()];
        expected[r] = i.clone();
        alg.bracket(p, q) == expected
    })
}

fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// so(4) over `(Lx, Ly, Lz, Ax, Ay, Az)`:
/// `[Lᵢ,Lⱼ] = iεᵢⱼₖLₖ`, `[Lᵢ,Aⱼ] = iεᵢⱼₖAₖ`, `[Aᵢ,Aⱼ] = iεᵢⱼₖLₖ`.
pub fn make_so4() -> StructureConstantAlgebra {
    let labels = ["Lx", "Ly", "Lz", "Ax", "Ay", "Az"].map(String::from).to_vec();
    let mut brackets = Vec::new();
    for (i, j, k) in (0..3)
        .cartesian_product(0..3)
        .cartesian_product(0..3)
        .map(|((i, j), k)| (i, j, k))
    {
        let eps = levi_civita(i, j, k);
        if eps == 0 {
            continue;
        }
        let f = gauss(0, eps);
        brackets.push((i, j, k, f.clone())); // [L, L] -> L
        brackets.push((i, 3 + j, 3 + k, f.clone())); // [L, A] -> A
        brackets.push((3 + i, 3 + j, k, f)); // [A, A] -> L
    }
    StructureConstantAlgebra::from_brackets(labels, brackets).expect("so(4) constants are antisymmetric")
}

/// `J±ᵢ = (Lᵢ ± Aᵢ)/2`, ordered `(J+x, J+y, J+z, J-x, J-y, J-z)`.
pub fn j_plus_minus() -> BasisChange {
    let half = ratio(1, 2);
    let zero = Rational::zero();
    let mut matrix = vec![vec![zero; 6]; 6];
    for i in 0..3 {
        matrix[i][i] = half.clone();
        matrix[i][3 + i] = half.clone();
        matrix[3 + i][i] = half.clone();
        matrix[3 + i][3 + i] = -&half;
    }
    let labels = ["J+x", "J+y", "J+z", "J-x", "J-y", "J-z"].map(String::from).to_vec();
    BasisChange::new(matrix, labels).expect("J± transform is invertible")
}

/// Label of the unit operator in [`fano_arrangement_so4`].
pub const UNIT_LABEL: &str = "1";

/// so(4) generators plus the unit operator on seven points. Lines are the
/// four su(2) triples, oriented so that `[a, b] = +i·c` along the cycle,
/// and the three unoriented commuting triples `{Lᵢ, Aᵢ, 1}`.
pub fn fano_arrangement_so4() -> IncidenceStructure {
    let so4 = make_so4();
    let mut labels = so4.labels().to_vec();
    labels.push(UNIT_LABEL.to_string());
    let unit = 6;
    let mut lines: Vec<Line> = su2_triples(&so4)
        .into_iter()
        .map(|[a, b, c]| {
            let positive = so4.constant(a, b, c).im.is_positive();
            Line::oriented(if positive { [a, b, c] } else { [a, c, b] })
        })
        .collect();
    lines.extend((0..3).map(|i| Line::new([i, 3 + i, unit]).with_kind(LineKind::Commuting)));
    IncidenceStructure::new(labels, lines).expect("arrangement is a valid structure")
}
