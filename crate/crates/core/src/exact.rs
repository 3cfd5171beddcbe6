//! Exact scalars and the dense Gaussian-rational matrix used as the
//! brute-force oracle for Pauli and quaternion arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// A complex number `a + b·i` with rational `a`, `b`.
pub type GaussianRational = Complex<Rational>;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Gaussian rational `re + im·i` from integers.
pub fn gauss(re: i64, im: i64) -> GaussianRational {
    Complex::new(rat(re), rat(im))
}

/// `i^k` for any integer `k`.
pub fn i_pow(k: i64) -> GaussianRational {
    match k.rem_euclid(4) {
        0 => gauss(1, 0),
        1 => gauss(0, 1),
        2 => gauss(-1, 0),
        _ => gauss(0, -1),
    }
}

/// Square matrix over the Gaussian rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<GaussianRational>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![GaussianRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.entries[k * dim + k] = GaussianRational::one();
        }
        m
    }

    /// Builds a matrix from rows. Panics unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "ComplexMatrix::from_rows needs a square array"
        );
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussianRational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: GaussianRational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn scale(&self, factor: &GaussianRational) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut out = Self::zeros(dim);
        for (i, j) in (0..self.dim).flat_map(|i| (0..self.dim).map(move |j| (i, j))) {
            let a = self.get(i, j);
            if a.is_zero() {
                continue;
            }
            for k in 0..other.dim {
                for l in 0..other.dim {
                    let b = other.get(k, l);
                    if !b.is_zero() {
                        out.set(i * other.dim + k, j * other.dim + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * n + j;
                        out.entries[idx] = &out.entries[idx] + a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

fn fmt_gauss(z: &GaussianRational) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => z.re.to_string(),
        (true, false) => format!("{}i", z.im),
        (false, false) => format!("{}{:+}i", z.re, z.im),
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| fmt_gauss(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
