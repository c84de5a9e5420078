//! Fixed-size 3-vectors and 3x3 matrices over the complex numbers.
//!
//! Matrices are row-major: `m[i][j]` is row `i`, column `j`. Everything here is
//! hand-sized for dimension three; no allocation happens anywhere.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Ground-field scalar. Real-field algebras keep `im == 0` exactly.
pub type Scalar = Complex64;

pub(crate) const ZERO: Scalar = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Scalar = Complex64::new(1.0, 0.0);

#[inline]
pub fn re(x: f64) -> Scalar {
    Complex64::new(x, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vector3(pub [Scalar; 3]);

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix3(pub [[Scalar; 3]; 3]);

impl Vector3 {
    pub const fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        Vector3([a, b, c])
    }

    pub fn real(a: f64, b: f64, c: f64) -> Self {
        Vector3([re(a), re(b), re(c)])
    }

    pub const fn zero() -> Self {
        Vector3([ZERO; 3])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = ONE;
        v
    }

    /// Bilinear dot product (no conjugation).
    pub fn dot(&self, other: &Vector3) -> Scalar {
        (0..3).map(|i| self.0[i] * other.0[i]).sum()
    }

    /// Hermitian product `<self, other>`, conjugate-linear in `self`.
    pub fn hdot(&self, other: &Vector3) -> Scalar {
        (0..3).map(|i| self.0[i].conj() * other.0[i]).sum()
    }

    /// Bilinear cross product.
    pub fn cross(&self, o: &Vector3) -> Vector3 {
        let [a, b, c] = self.0;
        let [d, e, f] = o.0;
        Vector3([b * f - c * e, c * d - a * f, a * e - b * d])
    }

    pub fn conj(&self) -> Vector3 {
        Vector3(self.0.map(|x| x.conj()))
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Scalar) -> Vector3 {
        Vector3(self.0.map(|x| x * s))
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|x| x.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.re.is_finite() && x.im.is_finite())
    }

    /// Index of the largest-magnitude coordinate (first one on ties).
    pub fn argmax_abs(&self) -> usize {
        let mut best = 0;
        for i in 1..3 {
            if self.0[i].norm() > self.0[best].norm() {
                best = i;
            }
        }
        best
    }
}

impl Index<usize> for Vector3 {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector3 {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, o: Vector3) -> Vector3 {
        Vector3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, o: Vector3) -> Vector3 {
        Vector3([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3(self.0.map(|x| -x))
    }
}

impl Mul<Vector3> for Scalar {
    type Output = Vector3;
    fn mul(self, v: Vector3) -> Vector3 {
        v.scale(self)
    }
}

impl Matrix3 {
    pub const fn zero() -> Self {
        Matrix3([[ZERO; 3]; 3])
    }

    pub fn identity() -> Self {
        Self::diag(ONE, ONE, ONE)
    }

    pub fn diag(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        Matrix3(rows.map(|r| r.map(re)))
    }

    pub fn from_cols(c0: Vector3, c1: Vector3, c2: Vector3) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][0] = c0.0[i];
            m.0[i][1] = c1.0[i];
            m.0[i][2] = c2.0[i];
        }
        m
    }

    pub fn col(&self, j: usize) -> Vector3 {
        Vector3([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn row(&self, i: usize) -> Vector3 {
        Vector3(self.0[i])
    }

    pub fn transpose(&self) -> Matrix3 {
        let mut t = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector3) -> Vector3 {
        Vector3(std::array::from_fn(|i| self.row(i).dot(v)))
    }

    pub fn scale(&self, s: Scalar) -> Matrix3 {
        Matrix3(self.0.map(|r| r.map(|x| x * s)))
    }

    pub fn trace(&self) -> Scalar {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Sum of the principal 2x2 minors: the middle coefficient of the
    /// characteristic polynomial `λ³ - tr λ² + c₂ λ - det`.
    pub fn principal_minor_sum(&self) -> Scalar {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2]
            - m[1][2] * m[2][1]
    }

    pub fn det(&self) -> Scalar {
        self.row(0).dot(&self.row(1).cross(&self.row(2)))
    }

    /// Classical adjugate, so that `m * adj(m) = det(m) I`.
    pub fn adjugate(&self) -> Matrix3 {
        // Columns of the adjugate are cross products of rows.
        let r = [self.row(0), self.row(1), self.row(2)];
        Matrix3::from_cols(r[1].cross(&r[2]), r[2].cross(&r[0]), r[0].cross(&r[1]))
    }

    pub fn inverse(&self) -> Option<Matrix3> {
        let d = self.det();
        if d.norm() == 0.0 || !d.is_finite() {
            return None;
        }
        Some(self.adjugate().scale(d.inv()))
    }

    pub fn norm_fro(&self) -> f64 {
        self.0.iter().flatten().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max)
    }

    /// Frobenius-norm condition number; infinite for singular input.
    pub fn cond(&self) -> f64 {
        match self.inverse() {
            Some(inv) => self.norm_fro() * inv.norm_fro(),
            None => f64::INFINITY,
        }
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().flatten().all(|x| x.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.re.is_finite() && x.im.is_finite())
    }

    pub fn conj(&self) -> Matrix3 {
        Matrix3(self.0.map(|r| r.map(|x| x.conj())))
    }

    /// Relative pivot magnitudes of Gaussian elimination with complete
    /// pivoting, in elimination order. Each pivot is divided by the largest
    /// entry of the input, so `[1, p1, p2]` for any nonzero matrix.
    pub fn pivot_profile(&self) -> [f64; 3] {
        let scale = self.max_abs();
        if scale == 0.0 || !scale.is_finite() {
            return [0.0; 3];
        }
        let mut a = self.0;
        let mut rows = [0usize, 1, 2];
        let mut cols = [0usize, 1, 2];
        let mut out = [0.0; 3];
        for k in 0..3 {
            let (mut pi, mut pj, mut best) = (k, k, -1.0);
            for i in k..3 {
                for j in k..3 {
                    let v = a[rows[i]][cols[j]].norm();
                    if v > best {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            }
            rows.swap(k, pi);
            cols.swap(k, pj);
            out[k] = best / scale;
            if best == 0.0 {
                break;
            }
            let p = a[rows[k]][cols[k]];
            for i in (k + 1)..3 {
                let f = a[rows[i]][cols[k]] / p;
                for j in k..3 {
                    let v = a[rows[k]][cols[j]];
                    a[rows[i]][cols[j]] -= f * v;
                }
            }
        }
        out
    }

    /// Numerical rank: pivots above `tol` relative to the largest entry.
    pub fn rank(&self, tol: f64) -> usize {
        self.pivot_profile().iter().filter(|&&p| p > tol).count()
    }

    /// A kernel vector of a rank-2 matrix: the cross product of the pair of
    /// rows that are furthest from parallel. `None` when every pair is
    /// parallel (rank below two).
    pub fn null_vector(&self) -> Option<Vector3> {
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| self.row(i).cross(&self.row(j)))
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .filter(|v| v.norm() > 0.0)
    }

    /// Column with the largest Euclidean norm.
    pub fn dominant_col(&self) -> Vector3 {
        (0..3)
            .map(|j| self.col(j))
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap_or_else(Vector3::zero)
    }

    /// Row with the largest Euclidean norm.
    pub fn dominant_row(&self) -> Vector3 {
        (0..3)
            .map(|i| self.row(i))
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap_or_else(Vector3::zero)
    }
}

impl Index<(usize, usize)> for Matrix3 {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.0[i][j]
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;
    fn mul(self, o: Matrix3) -> Matrix3 {
        let mut m = Matrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        m
    }
}

impl Mul<Vector3> for Matrix3 {
    type Output = Vector3;
    fn mul(self, v: Vector3) -> Vector3 {
        self.mul_vec(&v)
    }
}

impl Add for Matrix3 {
    type Output = Matrix3;
    fn add(self, o: Matrix3) -> Matrix3 {
        Matrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] + o.0[i][j])
        }))
    }
}

impl Sub for Matrix3 {
    type Output = Matrix3;
    fn sub(self, o: Matrix3) -> Matrix3 {
        Matrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] - o.0[i][j])
        }))
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", fmt_scalar(*x))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Compact human-readable scalar: drops a zero imaginary part.
/// Outcome of comparing a computed magnitude with a threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Band {
    Below,
    Above,
    /// Within a factor of ten of the threshold, on either side.
    Ambiguous,
}

pub(crate) fn band(value: f64, threshold: f64) -> Band {
    if value <= threshold / 10.0 {
        Band::Below
    } else if value > threshold * 10.0 {
        Band::Above
    } else {
        Band::Ambiguous
    }
}

pub fn fmt_scalar(x: Scalar) -> String {
    if x.im == 0.0 {
        format!("{}", x.re)
    } else if x.re == 0.0 {
        format!("{}i", x.im)
    } else {
        format!("{}{:+}i", x.re, x.im)
    }
}
