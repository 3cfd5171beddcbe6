//! Quaternions and octonions with exact rational coefficients.
//!
//! The octonion product is driven entirely by a stored 7×7 table of signed
//! unit products ([`OctonionTable::standard`]); nothing about the
//! multiplication is re-derived from a formula. The table checks
//! ([`verify_sign_balance`], [`verify_index_rules`]) and the Fano plane
//! extraction ([`fano_from_table`]) therefore all read the same data the
//! product uses.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{gauss, rat, ComplexMatrix, GaussianRational, Rational};
use crate::geometry::{IncidenceStructure, Line};

// ---------------------------------------------------------------------------
// Quaternions
// ---------------------------------------------------------------------------

/// `q0 + q1·i + q2·j + q3·k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub coefficients: [Rational; 4],
}

impl Quaternion {
    pub fn new(q0: Rational, q1: Rational, q2: Rational, q3: Rational) -> Self {
        Self {
            coefficients: [q0, q1, q2, q3],
        }
    }

    pub fn from_integers(c: [i64; 4]) -> Self {
        Self::new(rat(c[0]), rat(c[1]), rat(c[2]), rat(c[3]))
    }

    pub fn zero() -> Self {
        Self::from_integers([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_integers([1, 0, 0, 0])
    }

    pub fn i() -> Self {
        Self::from_integers([0, 1, 0, 0])
    }

    pub fn j() -> Self {
        Self::from_integers([0, 0, 1, 0])
    }

    pub fn k() -> Self {
        Self::from_integers([0, 0, 0, 1])
    }

    /// Basis element by index: 0 → 1, 1 → i, 2 → j, 3 → k.
    pub fn basis(index: usize) -> Self {
        let mut c = [0; 4];
        c[index] = 1;
        Self::from_integers(c)
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.coefficients;
        Self::new(a.clone(), -b, -c, -d)
    }

    pub fn norm_sqr(&self) -> Rational {
        self.coefficients.iter().map(|c| c * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Random quaternion with integer coefficients in `-bound..=bound`.
    pub fn random_integer<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        Self::from_integers(std::array::from_fn(|_| rng.random_range(-bound..=bound)))
    }
}

/// Hamilton product.
pub fn quat_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
    let [a0, a1, a2, a3] = &a.coefficients;
    let [b0, b1, b2, b3] = &b.coefficients;
    Quaternion::new(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        quat_mul(self, rhs)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        quat_mul(&self, &rhs)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            coefficients: std::array::from_fn(|k| -&self.coefficients[k]),
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Maps `q0 + q1 i + q2 j + q3 k` to `q0·I − i(q1 σx + q2 σy + q3 σz)`.
pub fn quat_to_pauli(q: &Quaternion) -> ComplexMatrix {
    let [q0, q1, q2, q3] = &q.coefficients;
    // q0 I − i q1 σx − i q2 σy − i q3 σz
    //   = [[q0 − i q3, −q2 − i q1], [q2 − i q1, q0 + i q3]]
    ComplexMatrix::from_rows(vec![
        vec![GaussianRational::new(q0.clone(), -q3), GaussianRational::new(-q2, -q1)],
        vec![
            GaussianRational::new(q2.clone(), -q1),
            GaussianRational::new(q0.clone(), q3.clone()),
        ],
    ])
}

/// The three Pauli matrices, in x, y, z order.
pub fn pauli_matrices() -> [ComplexMatrix; 3] {
    [
        ComplexMatrix::from_rows(vec![vec![gauss(0, 0), gauss(1, 0)], vec![gauss(1, 0), gauss(0, 0)]]),
        ComplexMatrix::from_rows(vec![vec![gauss(0, 0), gauss(0, -1)], vec![gauss(0, 1), gauss(0, 0)]]),
        ComplexMatrix::from_rows(vec![vec![gauss(1, 0), gauss(0, 0)], vec![gauss(0, 0), gauss(-1, 0)]]),
    ]
}

// ---------------------------------------------------------------------------
// Octonion multiplication table
// ---------------------------------------------------------------------------

/// A signed basis unit `±e_index`; index 0 is the real unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: u8,
}

impl SignedUnit {
    pub const fn new(sign: i8, index: u8) -> Self {
        Self { sign, index }
    }

    pub fn negated(self) -> Self {
        Self::new(-self.sign, self.index)
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        if self.index == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}e{}", self.index)
        }
    }
}

/// An oriented triad `e_i · e_j = sign · e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedTriad {
    pub indices: [u8; 3],
    pub sign: i8,
}

impl SignedTriad {
    pub fn new(indices: [u8; 3], sign: i8) -> Option<Self> {
        let [i, j, k] = indices;
        let in_range = indices.iter().all(|&n| (1..=7).contains(&n));
        if in_range && i != j && j != k && i != k && (sign == 1 || sign == -1) {
            Some(Self { indices, sign })
        } else {
            None
        }
    }
}

// Signed index of e_i·e_j, row i, column j. Zero on the diagonal stands
// for the real unit with a minus sign (e_i² = −1).
const STANDARD_TABLE: [[i8; 7]; 7] = [
    [0, 4, 7, -2, 6, -5, -3],
    [-4, 0, 5, 1, -3, 7, -6],
    [-7, -5, 0, 6, 2, -4, 1],
    [2, -1, -6, 0, 7, 3, -5],
    [-6, 3, -2, -7, 0, 1, 4],
    [5, -7, 4, -3, -1, 0, 2],
    [3, 6, -1, 5, -4, -2, 0],
];

/// The 7×7 table of imaginary unit products `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctonionTable {
    entries: [[SignedUnit; 7]; 7],
}

impl OctonionTable {
    /// The table used throughout the crate.
    pub fn standard() -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| match STANDARD_TABLE[r][c] {
                0 => SignedUnit::new(-1, 0),
                v => SignedUnit::new(v.signum(), v.unsigned_abs()),
            })
        });
        Self { entries }
    }

    /// `e_i · e_j` for `i, j` in `1..=7`.
    pub fn get(&self, i: usize, j: usize) -> SignedUnit {
        self.entries[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, value: SignedUnit) {
        self.entries[i - 1][j - 1] = value;
    }

    /// Unit product for full basis indices `0..=7`, 0 being the real unit.
    pub fn unit_product(&self, a: usize, b: usize) -> SignedUnit {
        match (a, b) {
            (0, b) => SignedUnit::new(1, b as u8),
            (a, 0) => SignedUnit::new(1, a as u8),
            (a, b) => self.get(a, b),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[SignedUnit; 7]> {
        self.entries.iter()
    }
}

impl fmt::Display for OctonionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "·")?;
        for j in 1..=7 {
            write!(f, "{:>5}", format!("e{j}"))?;
        }
        writeln!(f)?;
        for i in 1..=7 {
            write!(f, "{:>4}", format!("e{i}"))?;
            for j in 1..=7 {
                write!(f, "{:>5}", self.get(i, j).to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The standard table.
pub fn oct_table() -> OctonionTable {
    OctonionTable::standard()
}

/// Counts of `(plus, minus)` signs in row `i`, diagonal excluded.
pub fn row_sign_counts(table: &OctonionTable, i: usize) -> (usize, usize) {
    sign_counts((1..=7).filter(|&j| j != i).map(|j| table.get(i, j)))
}

/// Counts of `(plus, minus)` signs in column `j`, diagonal excluded.
pub fn column_sign_counts(table: &OctonionTable, j: usize) -> (usize, usize) {
    sign_counts((1..=7).filter(|&i| i != j).map(|i| table.get(i, j)))
}

fn sign_counts(units: impl Iterator<Item = SignedUnit>) -> (usize, usize) {
    units.fold((0, 0), |(p, m), u| if u.sign > 0 { (p + 1, m) } else { (p, m + 1) })
}

/// Every row and column has three positive and three negative off-diagonal entries.
pub fn verify_sign_balance(table: &OctonionTable) -> bool {
    (1..=7).all(|k| row_sign_counts(table, k) == (3, 3) && column_sign_counts(table, k) == (3, 3))
}

/// Wraps any positive index into `1..=7`.
pub fn wrap_index(n: usize) -> usize {
    (n - 1) % 7 + 1
}

/// Checks the shift rule (`e_i e_j = ±e_k ⇒ e_{i+1} e_{j+1} = ±e_{k+1}`) and the
/// doubling rule (`⇒ e_{2i} e_{2j} = ±e_{2k}`) with the same sign, for every
/// off-diagonal entry. Indices wrap into `1..=7`.
pub fn verify_index_rules(table: &OctonionTable) -> bool {
    let shift = |n: usize| wrap_index(n + 1);
    let double = |n: usize| wrap_index(2 * n);
    index_rule_holds(table, shift) && index_rule_holds(table, double)
}

fn index_rule_holds(table: &OctonionTable, map: impl Fn(usize) -> usize) -> bool {
    (1..=7).all(|i| {
        (1..=7).filter(|&j| j != i).all(|j| {
            let p = table.get(i, j);
            if p.index == 0 {
                return false;
            }
            let image = table.get(map(i), map(j));
            image == SignedUnit::new(p.sign, map(p.index as usize) as u8)
        })
    })
}

/// The seven oriented triads, each normalized so that `e_i e_j = +e_k` with
/// `i` the smallest index on the line.
pub fn oriented_triads(table: &OctonionTable) -> Vec<SignedTriad> {
    let mut out = Vec::new();
    for i in 1..=7usize {
        for j in (i + 1)..=7 {
            let p = table.get(i, j);
            let k = p.index as usize;
            if k <= j {
                continue;
            }
            // e_i e_j = s e_k; if s < 0 the positive cyclic order is (i, k, j)
            let triad = if p.sign > 0 {
                [i as u8, j as u8, k as u8]
            } else {
                [i as u8, k as u8, j as u8]
            };
            out.extend(SignedTriad::new(triad, 1));
        }
    }
    out
}

/// The Fano plane read off the table: points `e1..e7`, one line per triad.
pub fn fano_from_table(table: &OctonionTable) -> IncidenceStructure {
    let labels: Vec<String> = (1..=7).map(|k| format!("e{k}")).collect();
    let lines = oriented_triads(table)
        .into_iter()
        .map(|t| {
            let [a, b, c] = t.indices.map(|n| n as usize - 1);
            Line::oriented([a, b, c])
        })
        .collect();
    IncidenceStructure::new(labels, lines).expect("table triads form a valid structure")
}

// ---------------------------------------------------------------------------
// Octonions
// ---------------------------------------------------------------------------

/// `x0 + x1 e1 + … + x7 e7` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion {
    pub coefficients: [Rational; 8],
}

impl Octonion {
    pub fn from_integers(c: [i64; 8]) -> Self {
        Self {
            coefficients: c.map(rat),
        }
    }

    pub fn zero() -> Self {
        Self::from_integers([0; 8])
    }

    pub fn one() -> Self {
        Self::unit(0)
    }

    /// Basis unit: 0 → 1, k → e_k.
    pub fn unit(index: usize) -> Self {
        let mut c = [0; 8];
        c[index] = 1;
        Self::from_integers(c)
    }

    pub fn from_signed_unit(u: SignedUnit) -> Self {
        let mut c = [0; 8];
        c[u.index as usize] = i64::from(u.sign);
        Self::from_integers(c)
    }

    pub fn conj(&self) -> Self {
        Self {
            coefficients: std::array::from_fn(|k| {
                if k == 0 {
                    self.coefficients[0].clone()
                } else {
                    -&self.coefficients[k]
                }
            }),
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        self.coefficients.iter().map(|c| c * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Product using an explicit table.
    pub fn mul_with(&self, rhs: &Octonion, table: &OctonionTable) -> Octonion {
        if let Some(p) = self.mul_small_integers(rhs, table) {
            return p;
        }
        let mut out: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for (a, xa) in self.coefficients.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in rhs.coefficients.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let u = table.unit_product(a, b);
                let term = xa * yb;
                let slot = &mut out[u.index as usize];
                if u.sign > 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
        Octonion { coefficients: out }
    }

    /// Integer-only product in machine arithmetic; `None` when a coefficient
    /// is fractional or something would overflow.
    fn mul_small_integers(&self, rhs: &Octonion, table: &OctonionTable) -> Option<Octonion> {
        let small = |c: &Rational| if c.is_integer() { c.numer().to_i64() } else { None };
        let mut x = [0i64; 8];
        let mut y = [0i64; 8];
        for k in 0..8 {
            x[k] = small(&self.coefficients[k])?;
            y[k] = small(&rhs.coefficients[k])?;
        }
        let mut out = [0i128; 8];
        for (a, &xa) in x.iter().enumerate() {
            for (b, &yb) in y.iter().enumerate() {
                let u = table.unit_product(a, b);
                let term = i128::from(xa) * i128::from(yb);
                let slot = &mut out[u.index as usize];
                *slot = if u.sign > 0 {
                    slot.checked_add(term)?
                } else {
                    slot.checked_sub(term)?
                };
            }
        }
        Some(Octonion {
            coefficients: out.map(|c| Rational::from_integer(c.into())),
        })
    }

    /// Random octonion with integer coefficients in `-bound..=bound`.
    pub fn random_integer<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        Self::from_integers(std::array::from_fn(|_| rng.random_range(-bound..=bound)))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = if k == 0 { String::new() } else { format!("e{k}") };
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => unit,
                (_, false) => format!("{mag}{unit}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (sign, body)) in terms.iter().enumerate() {
            match (n, *sign) {
                (0, "+") => write!(f, "{body}")?,
                (0, _) => write!(f, "-{body}")?,
                _ => write!(f, " {sign} {body}")?,
            }
        }
        Ok(())
    }
}

/// Product under the standard table.
pub fn oct_mul(a: &Octonion, b: &Octonion) -> Octonion {
    a.mul_with(b, &OCTONION_TABLE)
}

static OCTONION_TABLE: std::sync::LazyLock<OctonionTable> = std::sync::LazyLock::new(OctonionTable::standard);

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        oct_mul(self, rhs)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        oct_mul(&self, &rhs)
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion {
            coefficients: std::array::from_fn(|k| &self.coefficients[k] + &rhs.coefficients[k]),
        }
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        &self + &rhs
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion {
            coefficients: std::array::from_fn(|k| &self.coefficients[k] - &rhs.coefficients[k]),
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        &self - &rhs
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            coefficients: std::array::from_fn(|k| -&self.coefficients[k]),
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

/// `(xy)z − x(yz)`.
pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
    &(&(x * y) * z) - &(x * &(y * z))
}

/// `|xy|² = |x|²|y|²`, exactly.
pub fn norm_composition_check(x: &Octonion, y: &Octonion) -> bool {
    (x * y).norm_sqr() == x.norm_sqr() * y.norm_sqr()
}

/// Both left and right alternative laws for one pair.
pub fn alternative_laws_hold(x: &Octonion, y: &Octonion) -> bool {
    associator(x, x, y).is_zero() && associator(y, x, x).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(k: usize) -> Octonion {
        Octonion::unit(k)
    }

    fn scaled(x: &Octonion, f: &Rational) -> Octonion {
        Octonion {
            coefficients: std::array::from_fn(|k| &x.coefficients[k] * f),
        }
    }

    #[test]
    fn integer_and_rational_products_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let half = ratio(1, 2);
        for _ in 0..200 {
            let x = Octonion::random_integer(&mut rng, 20);
            let y = Octonion::random_integer(&mut rng, 20);
            let general = scaled(&(&scaled(&x, &half) * &scaled(&y, &half)), &rat(4));
            assert_eq!(&x * &y, general);
        }
    }

    #[test]
    fn huge_coefficients_fall_back_to_big_integers() {
        let big = Octonion::from_integers([i64::MAX; 8]);
        let p = &big * &big;
        let m = Rational::from_integer(i64::MAX.into());
        assert_eq!(p.coefficients[0], -(&m * &m) * rat(6));
        assert_eq!(p.norm_sqr(), big.norm_sqr() * big.norm_sqr());
    }

    #[test]
    fn quaternion_units() {
        assert_eq!(Quaternion::i() * Quaternion::j(), Quaternion::k());
        assert_eq!(Quaternion::j() * Quaternion::i(), -Quaternion::k());
        assert_eq!(Quaternion::j() * Quaternion::k(), Quaternion::i());
        assert_eq!(Quaternion::k() * Quaternion::i(), Quaternion::j());
        for u in [Quaternion::i(), Quaternion::j(), Quaternion::k()] {
            assert_eq!(&u * &u, -Quaternion::one());
        }
    }

    #[test]
    fn quaternion_identity_and_conjugate() {
        let q = Quaternion::new(ratio(1, 2), rat(-3), rat(2), ratio(5, 7));
        assert_eq!(&Quaternion::one() * &q, q);
        assert_eq!(&q * &Quaternion::one(), q);
        assert_eq!(q.conj().conj(), q);
        let n = q.norm_sqr();
        assert_eq!(&q * &q.conj(), Quaternion::new(n, rat(0), rat(0), rat(0)));
        assert!(Quaternion::zero().norm_sqr().is_zero());
    }

    #[test]
    fn quat_to_pauli_of_i_and_one() {
        let m = quat_to_pauli(&Quaternion::i());
        let expected = ComplexMatrix::from_rows(vec![vec![gauss(0, 0), gauss(0, -1)], vec![gauss(0, -1), gauss(0, 0)]]);
        assert_eq!(m, expected);
        assert_eq!(quat_to_pauli(&Quaternion::one()), ComplexMatrix::identity(2));
    }

    #[test]
    fn quat_to_pauli_matches_minus_i_sigma() {
        let minus_i = gauss(0, -1);
        for (axis, sigma) in pauli_matrices().iter().enumerate() {
            assert_eq!(quat_to_pauli(&Quaternion::basis(axis + 1)), sigma.scale(&minus_i));
        }
    }

    #[test]
    fn quat_to_pauli_is_homomorphism_on_random_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = Quaternion::random_integer(&mut rng, 9);
            let b = Quaternion::random_integer(&mut rng, 9);
            assert_eq!(quat_to_pauli(&(&a * &b)), &quat_to_pauli(&a) * &quat_to_pauli(&b));
        }
    }

    #[test]
    fn quat_to_pauli_is_injective_on_basis() {
        let images: Vec<_> = (0..4).map(|k| quat_to_pauli(&Quaternion::basis(k))).collect();
        for a in 0..4 {
            for b in (a + 1)..4 {
                assert_ne!(images[a], images[b]);
            }
        }
    }

    #[test]
    fn table_spot_entries() {
        let t = oct_table();
        assert_eq!(t.get(1, 2), SignedUnit::new(1, 4));
        assert_eq!(t.get(2, 1), SignedUnit::new(-1, 4));
        assert_eq!(t.get(1, 3), SignedUnit::new(1, 7));
        assert_eq!(t.get(7, 4), SignedUnit::new(1, 5));
        for k in 1..=7 {
            assert_eq!(t.get(k, k), SignedUnit::new(-1, 0));
        }
    }

    #[test]
    fn unit_products_follow_table() {
        assert_eq!(&e(1) * &e(2), e(4));
        assert_eq!(&e(2) * &e(1), -e(4));
        assert_eq!(&e(3) * &e(3), -Octonion::one());
        let t = oct_table();
        for i in 1..=7 {
            for j in 1..=7 {
                assert_eq!(&e(i) * &e(j), Octonion::from_signed_unit(t.get(i, j)));
            }
        }
    }

    #[test]
    fn distinct_units_anticommute() {
        for i in 1..=7 {
            for j in 1..=7 {
                if i != j {
                    assert_eq!(&e(i) * &e(j), -(&e(j) * &e(i)));
                }
            }
        }
    }

    #[test]
    fn sign_balance() {
        let t = oct_table();
        assert!(verify_sign_balance(&t));
        assert_eq!(row_sign_counts(&t, 5), (3, 3));
        let mut flipped = t.clone();
        flipped.set(1, 2, t.get(1, 2).negated());
        assert!(!verify_sign_balance(&flipped));
    }

    #[test]
    fn index_rules() {
        let t = oct_table();
        // shift: e1e2 = e4 gives e2e3 = e5
        assert_eq!(t.get(2, 3), SignedUnit::new(1, 5));
        // doubling: e1e2 = e4 gives e2e4 = e8 → e1
        assert_eq!(t.get(2, 4), SignedUnit::new(1, 1));
        assert!(verify_index_rules(&t));
        let mut broken = t.clone();
        broken.set(3, 5, t.get(3, 5).negated());
        assert!(!verify_index_rules(&broken));
    }

    #[test]
    fn wrap_convention() {
        assert_eq!(wrap_index(8), 1);
        assert_eq!(wrap_index(14), 7);
        assert_eq!(wrap_index(7), 7);
    }

    #[test]
    fn fano_lines_from_table() {
        let fano = fano_from_table(&oct_table());
        assert_eq!(fano.num_points(), 7);
        assert_eq!(fano.num_lines(), 7);
        assert!(fano.lines().iter().any(|l| l.points == vec![0, 1, 3]));
    }

    #[test]
    fn triads_are_positive_cyclic() {
        let t = oct_table();
        for triad in oriented_triads(&t) {
            let [a, b, c] = triad.indices.map(usize::from);
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                assert_eq!(t.get(x, y), SignedUnit::new(1, z as u8));
            }
        }
    }

    #[test]
    fn associator_witness() {
        assert_eq!(&(&e(1) * &e(2)) * &e(3), -e(6));
        assert_eq!(&e(1) * &(&e(2) * &e(3)), e(6));
        let expected = Octonion::from_integers([0, 0, 0, 0, 0, 0, -2, 0]);
        assert_eq!(associator(&e(1), &e(2), &e(3)), expected);
        let y = Octonion::from_integers([1, 2, 3, 4, 5, 6, 7, 8]);
        let z = Octonion::from_integers([-1, 0, 2, 0, -3, 1, 1, 0]);
        assert!(associator(&Octonion::one(), &y, &z).is_zero());
    }

    #[test]
    fn conjugate_product_is_norm() {
        let x = Octonion::from_integers([3, -1, 4, 1, -5, 9, 2, -6]);
        let n = x.norm_sqr();
        let mut expected = Octonion::zero();
        expected.coefficients[0] = n;
        assert_eq!(&x * &x.conj(), expected);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn norm_composition_example() {
        let x = &e(1) + &e(2);
        let y = &e(3) - &e(5);
        assert_eq!((&x * &y).norm_sqr(), rat(4));
        assert!(norm_composition_check(&x, &y));
        assert!(norm_composition_check(&Octonion::zero(), &y));
    }

    #[test]
    fn alternativity_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let x = Octonion::random_integer(&mut rng, 5);
            let y = Octonion::random_integer(&mut rng, 5);
            assert!(alternative_laws_hold(&x, &y));
            assert!(norm_composition_check(&x, &y));
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(Octonion::from_integers([0, 0, 0, 0, 0, 0, -2, 0]).to_string(), "-2e6");
        assert_eq!((&e(1) - &Octonion::one()).to_string(), "-1 + e1");
        assert_eq!(Octonion::zero().to_string(), "0");
        assert_eq!(SignedUnit::new(-1, 0).to_string(), "-1");
    }
}
