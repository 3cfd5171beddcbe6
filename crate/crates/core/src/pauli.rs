//! N-qubit Pauli strings in the binary symplectic picture.
//!
//! A [`PauliString`] is a pair of GF(2) vectors `(x, z)` packed into words,
//! one bit per qubit. Per qubit, `(0,0)` is `I`, `(1,0)` is `X`, `(1,1)` is
//! `Y` and `(0,1)` is `Z`; the canonical matrix of a string is the plain
//! tensor product of those four matrices, so `Y` carries no hidden factor of
//! `i`. A [`PhasedPauli`] adds an `i^k` prefactor, which is what products
//! generate.
//!
//! The first character of a label is the first qubit and occupies the most
//! significant bit, so ordering by `(x, z)` as integers is the lexicographic
//! order of the bit vectors.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{gauss, i_pow, ComplexMatrix};

/// Widest string the packed representation supports.
pub const MAX_QUBITS: usize = 64;

/// Default bound for [`to_matrix`].
pub const DEFAULT_MATRIX_BOUND: usize = 10;

/// Default bound for [`commutation_graph`].
pub const DEFAULT_GRAPH_BOUND: usize = 8;

/// Largest `n` for which [`all_points`] will enumerate.
pub const MAX_ENUMERATION_QUBITS: usize = 12;

/// A phaseless Pauli string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    n_qubits: usize,
    x_bits: u64,
    z_bits: u64,
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("qubit count must be at least 1".into()));
    }
    if n > MAX_QUBITS {
        return Err(Error::BoundExceeded {
            what: "qubit count",
            value: n,
            bound: MAX_QUBITS,
        });
    }
    Ok(())
}

impl PauliString {
    /// Builds a string from packed bits; bit `n-1-q` belongs to qubit `q`.
    pub fn from_bits(n_qubits: usize, x_bits: u64, z_bits: u64) -> Result<Self> {
        check_qubits(n_qubits)?;
        let m = mask(n_qubits);
        if x_bits & !m != 0 || z_bits & !m != 0 {
            return Err(Error::InvalidArgument(format!("bits set beyond qubit {n_qubits}")));
        }
        Ok(Self {
            n_qubits,
            x_bits,
            z_bits,
        })
    }

    pub fn identity(n_qubits: usize) -> Result<Self> {
        Self::from_bits(n_qubits, 0, 0)
    }

    /// Parses a label made only of `I`, `X`, `Y`, `Z`; its length fixes `n`.
    pub fn parse_label(label: &str) -> Result<Self> {
        let n = label.chars().count();
        let p = parse_pauli(label, n)?;
        if p.phase_exp != 0 {
            return Err(Error::InvalidArgument(format!(
                "{label:?} carries a phase; expected a bare Pauli string"
            )));
        }
        Ok(p.string)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn x_bits(&self) -> u64 {
        self.x_bits
    }

    pub fn z_bits(&self) -> u64 {
        self.z_bits
    }

    pub fn is_identity(&self) -> bool {
        self.x_bits == 0 && self.z_bits == 0
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> u32 {
        (self.x_bits | self.z_bits).count_ones()
    }

    fn bit(&self, qubit: usize) -> u64 {
        1u64 << (self.n_qubits - 1 - qubit)
    }

    /// Single-qubit factor at `qubit` as one of `'I'`, `'X'`, `'Y'`, `'Z'`.
    pub fn factor(&self, qubit: usize) -> char {
        let b = self.bit(qubit);
        match (self.x_bits & b != 0, self.z_bits & b != 0) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    pub fn label(&self) -> String {
        (0..self.n_qubits).map(|q| self.factor(q)).collect()
    }

    /// Symplectic form `x_a·z_b + z_a·x_b` over GF(2). Panics on a qubit
    /// count mismatch; see [`commutes`] for the checked version.
    pub fn symplectic_form(&self, other: &Self) -> u8 {
        assert_eq!(self.n_qubits, other.n_qubits, "qubit count mismatch");
        (((self.x_bits & other.z_bits) ^ (self.z_bits & other.x_bits)).count_ones() & 1) as u8
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.symplectic_form(other) == 0
    }

    /// Product up to phase: XOR of the symplectic vectors.
    pub fn projective_product(&self, other: &Self) -> Self {
        assert_eq!(self.n_qubits, other.n_qubits, "qubit count mismatch");
        Self {
            n_qubits: self.n_qubits,
            x_bits: self.x_bits ^ other.x_bits,
            z_bits: self.z_bits ^ other.z_bits,
        }
    }

    pub fn with_phase(self, phase_exp: u8) -> PhasedPauli {
        PhasedPauli::new(self, phase_exp)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_label(s)
    }
}

/// `i^phase_exp` times the canonical matrix of `string`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhasedPauli {
    pub string: PauliString,
    phase_exp: u8,
}

impl PhasedPauli {
    pub fn new(string: PauliString, phase_exp: u8) -> Self {
        Self {
            string,
            phase_exp: phase_exp % 4,
        }
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn n_qubits(&self) -> usize {
        self.string.n_qubits
    }
}

impl fmt::Display for PhasedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "+i", "-", "-i"][self.phase_exp as usize];
        write!(f, "{prefix}{}", self.string)
    }
}

impl FromStr for PhasedPauli {
    type Err = Error;

    /// Parses a label whose qubit count is the number of Pauli characters.
    fn from_str(s: &str) -> Result<Self> {
        let (_, body) = split_phase(s);
        parse_pauli(s, body.chars().count())
    }
}

fn split_phase(label: &str) -> (u8, &str) {
    for (prefix, phase) in [("+i", 1), ("-i", 3), ("−i", 3), ("i", 1), ("+", 0), ("-", 2), ("−", 2)] {
        if let Some(rest) = label.strip_prefix(prefix) {
            return (phase, rest);
        }
    }
    (0, label)
}

/// Parses `[+|-|+i|-i]P₁P₂…Pₙ` with each `Pₖ` one of `I X Y Z`.
pub fn parse_pauli(label: &str, n: usize) -> Result<PhasedPauli> {
    check_qubits(n)?;
    let (phase, body) = split_phase(label);
    let offset = label.chars().count() - body.chars().count();
    let mut x = 0u64;
    let mut z = 0u64;
    let mut count = 0usize;
    for (q, c) in body.chars().enumerate() {
        let (xb, zb) = match c {
            'I' => (0, 0),
            'X' => (1, 0),
            'Y' => (1, 1),
            'Z' => (0, 1),
            other => {
                return Err(Error::BadPauliChar {
                    label: label.to_string(),
                    position: offset + q,
                    found: other,
                })
            }
        };
        count += 1;
        if count > n {
            continue;
        }
        x = (x << 1) | xb;
        z = (z << 1) | zb;
    }
    if count != n {
        return Err(Error::BadPauliLength {
            label: label.to_string(),
            expected: n,
            found: count,
        });
    }
    Ok(PhasedPauli::new(PauliString::from_bits(n, x, z)?, phase))
}

fn check_same(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::QubitMismatch { left: a, right: b })
    }
}

/// Phase exponent picked up when multiplying the canonical strings `a·b`.
///
/// Per qubit: `XY = iZ`, `YZ = iX`, `ZX = iY`, the reversed orders give `-i`.
pub fn product_phase(a: &PauliString, b: &PauliString) -> u8 {
    let (x1, z1, x2, z2) = (a.x_bits, a.z_bits, b.x_bits, b.z_bits);
    let (px1, py1, pz1) = (x1 & !z1, x1 & z1, !x1 & z1);
    let (px2, py2, pz2) = (x2 & !z2, x2 & z2, !x2 & z2);
    let plus = (px1 & py2) | (py1 & pz2) | (pz1 & px2);
    let minus = (py1 & px2) | (pz1 & py2) | (px1 & pz2);
    let k = plus.count_ones() as i64 - minus.count_ones() as i64;
    k.rem_euclid(4) as u8
}

/// Exact operator product.
pub fn multiply(a: &PhasedPauli, b: &PhasedPauli) -> Result<PhasedPauli> {
    check_same(a.n_qubits(), b.n_qubits())?;
    let phase = a.phase_exp + b.phase_exp + product_phase(&a.string, &b.string);
    Ok(PhasedPauli::new(a.string.projective_product(&b.string), phase))
}

impl std::ops::Mul for PhasedPauli {
    type Output = PhasedPauli;

    /// Panics on a qubit count mismatch.
    fn mul(self, rhs: PhasedPauli) -> PhasedPauli {
        multiply(&self, &rhs).expect("qubit count mismatch")
    }
}

/// Whether `a` and `b` commute (symplectic form zero).
pub fn commutes(a: &PauliString, b: &PauliString) -> Result<bool> {
    check_same(a.n_qubits, b.n_qubits)?;
    Ok(a.commutes_with(b))
}

fn single_qubit_matrix(c: char) -> ComplexMatrix {
    let (o, l, ni, pi, m) = (gauss(0, 0), gauss(1, 0), gauss(0, -1), gauss(0, 1), gauss(-1, 0));
    let rows = match c {
        'I' => vec![vec![l.clone(), o.clone()], vec![o, l]],
        'X' => vec![vec![o.clone(), l.clone()], vec![l, o]],
        'Y' => vec![vec![o.clone(), ni], vec![pi, o]],
        _ => vec![vec![l, o.clone()], vec![o, m]],
    };
    ComplexMatrix::from_rows(rows)
}

/// The explicit `2^N × 2^N` matrix, with the default size bound.
pub fn to_matrix(p: &PhasedPauli) -> Result<ComplexMatrix> {
    to_matrix_bounded(p, DEFAULT_MATRIX_BOUND)
}

pub fn to_matrix_bounded(p: &PhasedPauli, max_qubits: usize) -> Result<ComplexMatrix> {
    let n = p.n_qubits();
    if n > max_qubits {
        return Err(Error::BoundExceeded {
            what: "qubit count",
            value: n,
            bound: max_qubits,
        });
    }
    let mut m = ComplexMatrix::identity(1);
    for q in 0..n {
        m = m.kron(&single_qubit_matrix(p.string.factor(q)));
    }
    Ok(m.scale(&i_pow(i64::from(p.phase_exp))))
}

/// All `4^n` strings including the identity, in `(x, z)` order.
pub fn all_strings(n: usize) -> Result<Vec<PauliString>> {
    check_qubits(n)?;
    if n > MAX_ENUMERATION_QUBITS {
        return Err(Error::BoundExceeded {
            what: "qubit count for enumeration",
            value: n,
            bound: MAX_ENUMERATION_QUBITS,
        });
    }
    let side = 1u64 << n;
    Ok((0..side)
        .flat_map(|x| {
            (0..side).map(move |z| PauliString {
                n_qubits: n,
                x_bits: x,
                z_bits: z,
            })
        })
        .collect())
}

/// The `4^n − 1` non-identity strings, in `(x, z)` order.
pub fn all_points(n: usize) -> Result<Vec<PauliString>> {
    Ok(all_strings(n)?.into_iter().filter(|p| !p.is_identity()).collect())
}

/// `4^n − 1`.
pub fn num_points(n: usize) -> Result<u128> {
    degree_domain(n)?;
    Ok((1u128 << (2 * n)) - 1)
}

fn degree_domain(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("qubit count must be at least 1".into()));
    }
    if n > 63 {
        return Err(Error::BoundExceeded {
            what: "qubit count for counting formulas",
            value: n,
            bound: 63,
        });
    }
    Ok(())
}

/// Number of points not commuting with a fixed point: `2^(2n−1)`.
pub fn non_perpendicular_count(n: usize) -> Result<u128> {
    degree_domain(n)?;
    Ok(1u128 << (2 * n - 1))
}

/// Closed-form degree `v − 1 − 2^(2n−1)` of the commutation graph.
pub fn degree(n: usize) -> Result<u128> {
    Ok(num_points(n)? - 1 - non_perpendicular_count(n)?)
}

/// The graph on `all_points(n)` with an edge between commuting strings.
///
/// Edges are implicit: neighbors are computed from the symplectic form on
/// demand, which keeps the larger allowed sizes within memory.
#[derive(Clone, Debug)]
pub struct CommutationGraph {
    n_qubits: usize,
    points: Vec<PauliString>,
}

impl CommutationGraph {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn points(&self) -> &[PauliString] {
        &self.points
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.points[a].commutes_with(&self.points[b])
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.points.len()).filter(move |&u| self.is_edge(v, u))
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn num_edges(&self) -> usize {
        (0..self.points.len()).map(|v| self.vertex_degree(v)).sum::<usize>() / 2
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.vertex_degree(0);
        (1..self.points.len())
            .all(|v| self.vertex_degree(v) == first)
            .then_some(first)
    }

    /// Materialized adjacency lists, in point order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.points.len()).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn index_of(&self, p: &PauliString) -> Option<usize> {
        self.points.binary_search(p).ok()
    }
}

pub fn commutation_graph(n: usize) -> Result<CommutationGraph> {
    commutation_graph_bounded(n, DEFAULT_GRAPH_BOUND)
}

pub fn commutation_graph_bounded(n: usize, max_qubits: usize) -> Result<CommutationGraph> {
    if n > max_qubits {
        return Err(Error::BoundExceeded {
            what: "qubit count",
            value: n,
            bound: max_qubits,
        });
    }
    Ok(CommutationGraph {
        n_qubits: n,
        points: all_points(n)?,
    })
}

/// Non-identity strings on `n` qubits that commute with `p`, `p` excluded.
pub fn centralizer(p: &PauliString, n: usize) -> Result<Vec<PauliString>> {
    check_same(p.n_qubits, n)?;
    if p.is_identity() {
        return Err(Error::InvalidArgument("centralizer of the identity".into()));
    }
    Ok(all_points(n)?
        .into_iter()
        .filter(|q| q != p && q.commutes_with(p))
        .collect())
}
