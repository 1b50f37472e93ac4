//! Small fixed-size matrices: 5x5 over a scalar ring and 4x4 complex.
//!
//! Desk-scale linear algebra only; nothing here is performance sensitive.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex;
use num::traits::{One, Zero};
use num::BigRational;

use crate::scalar::{NumericScalar, Scalar};

/// Dense 5x5 matrix over `R`, used for the pseudo-orthogonal group.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat5<R: Scalar> {
    pub entries: [[R; 5]; 5],
}

impl<R: Scalar> Mat5<R> {
    pub fn zero() -> Self {
        Mat5 { entries: std::array::from_fn(|_| std::array::from_fn(|_| R::zero())) }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..5 {
            m.entries[i][i] = R::one();
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> R) -> Self {
        Mat5 { entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].clone())
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::from_fn(|i, j| self.entries[i][j].clone() * s.clone())
    }

    pub fn mul_vec(&self, v: &[R; 5]) -> [R; 5] {
        std::array::from_fn(|i| {
            let mut acc = R::zero();
            for j in 0..5 {
                acc = acc + self.entries[i][j].clone() * v[j].clone();
            }
            acc
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        for i in 0..5 {
            for j in 0..5 {
                if self.entries[i][j] != -self.entries[j][i].clone() {
                    return false;
                }
            }
        }
        true
    }
}

impl<R: NumericScalar> Mat5<R> {
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|e| e.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Mat5<f64> {
        Mat5::from_fn(|i, j| self.entries[i][j].to_f64())
    }
}

impl<R: Scalar> Add for &Mat5<R> {
    type Output = Mat5<R>;
    fn add(self, rhs: Self) -> Mat5<R> {
        Mat5::from_fn(|i, j| self.entries[i][j].clone() + rhs.entries[i][j].clone())
    }
}

impl<R: Scalar> Sub for &Mat5<R> {
    type Output = Mat5<R>;
    fn sub(self, rhs: Self) -> Mat5<R> {
        Mat5::from_fn(|i, j| self.entries[i][j].clone() - rhs.entries[i][j].clone())
    }
}

impl<R: Scalar> Neg for &Mat5<R> {
    type Output = Mat5<R>;
    fn neg(self) -> Mat5<R> {
        Mat5::from_fn(|i, j| -self.entries[i][j].clone())
    }
}

impl<R: Scalar> Mul for &Mat5<R> {
    type Output = Mat5<R>;
    fn mul(self, rhs: Self) -> Mat5<R> {
        Mat5::from_fn(|i, j| {
            let mut acc = R::zero();
            for k in 0..5 {
                acc = acc + self.entries[i][k].clone() * rhs.entries[k][j].clone();
            }
            acc
        })
    }
}

impl Mat5<f64> {
    /// Matrix exponential by scaling-and-squaring with a 20-term series.
    pub fn expm(&self) -> Mat5<f64> {
        let norm = self.max_abs();
        let mut squarings = 0u32;
        let mut scale = 1.0;
        while norm * scale > 0.5 {
            scale *= 0.5;
            squarings += 1;
        }
        let scaled = self.scale(&scale);
        let mut acc = Mat5::identity();
        let mut term = Mat5::identity();
        for k in 1..=20 {
            term = &term * &scaled;
            term = term.scale(&(1.0 / k as f64));
            acc = &acc + &term;
        }
        for _ in 0..squarings {
            acc = &acc * &acc;
        }
        acc
    }
}

/// Gaussian-rational complex number.
pub type Crat = Complex<BigRational>;

/// Dense 4x4 complex matrix; exact when `R = BigRational`.
#[derive(Clone, PartialEq)]
pub struct MatC4<R: Scalar + num::Num> {
    pub entries: [[Complex<R>; 4]; 4],
}

pub fn crat(re_num: i64, im_num: i64) -> Crat {
    Complex::new(BigRational::from_ratio(re_num, 1), BigRational::from_ratio(im_num, 1))
}

impl<R: Scalar + num::Num> MatC4<R> {
    pub fn zero() -> Self {
        MatC4 {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| Complex::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = Complex::one();
        }
        m
    }

    pub fn from_rows(rows: [[Complex<R>; 4]; 4]) -> Self {
        MatC4 { entries: rows }
    }

    pub fn scale(&self, s: &Complex<R>) -> Self {
        MatC4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].clone() * s.clone())
            }),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        MatC4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].clone() + rhs.entries[i][j].clone())
            }),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        MatC4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].clone() - rhs.entries[i][j].clone())
            }),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc: Complex<R> = Complex::zero();
                for k in 0..4 {
                    acc = acc + self.entries[i][k].clone() * rhs.entries[k][j].clone();
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn mul_col(&self, v: &[Complex<R>; 4]) -> [Complex<R>; 4] {
        std::array::from_fn(|i| {
            let mut acc: Complex<R> = Complex::zero();
            for j in 0..4 {
                acc = acc + self.entries[i][j].clone() * v[j].clone();
            }
            acc
        })
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self
    where
        R: Neg<Output = R>,
    {
        MatC4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].conj())
            }),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self
    where
        R: Neg<Output = R>,
    {
        MatC4 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[j][i].conj())
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// JSON value: rows of `[re, im]` pairs rendered as exact strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|c| {
                                serde_json::json!([c.re.to_string(), c.im.to_string()])
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl<R: Scalar + num::Num> fmt::Debug for MatC4<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(
                f,
                "[{}]",
                row.iter().map(|c| format!("{}+{}i", c.re, c.im)).collect::<Vec<_>>().join(", ")
            )?;
        }
        Ok(())
    }
}

/// Rank of a set of exact 4x4 complex matrices viewed as vectors over the
/// rationals (each matrix contributes 32 real coordinates).
pub fn rational_rank(mats: &[MatC4<BigRational>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = mats
        .iter()
        .map(|m| {
            let mut row = Vec::with_capacity(32);
            for i in 0..4 {
                for j in 0..4 {
                    row.push(m.entries[i][j].re.clone());
                    row.push(m.entries[i][j].im.clone());
                }
            }
            row
        })
        .collect();
    let cols = 32;
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() / inv.clone();
                for c in col..cols {
                    let sub = factor.clone() * rows[rank][c].clone();
                    rows[r][c] = rows[r][c].clone() - sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm_of_zero_is_identity() {
        let z = Mat5::<f64>::zero();
        let e = z.expm();
        assert!((&e - &Mat5::identity()).max_abs() < 1e-15);
    }

    #[test]
    fn expm_matches_closed_form_rotation() {
        // Generator of a rotation in the first two coordinates.
        let mut g = Mat5::<f64>::zero();
        let theta = 0.8;
        g.entries[0][1] = -theta;
        g.entries[1][0] = theta;
        let e = g.expm();
        assert!((e.entries[0][0] - theta.cos()).abs() < 1e-13);
        assert!((e.entries[1][0] - theta.sin()).abs() < 1e-13);
        assert!((e.entries[0][1] + theta.sin()).abs() < 1e-13);
        assert!((e.entries[4][4] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn exact_rank_counts_independent_matrices() {
        let id = MatC4::<BigRational>::identity();
        let mut other = MatC4::<BigRational>::zero();
        other.entries[0][1] = crat(1, 0);
        let two_id = id.scale(&crat(2, 0));
        assert_eq!(rational_rank(&[id.clone(), other.clone()]), 2);
        assert_eq!(rational_rank(&[id.clone(), two_id]), 1);
        assert_eq!(rational_rank(&[id, other.clone(), other]), 2);
    }
}
