//! Truncated power series in `t` with [`AlgNum`] coefficients.

use std::ops::{Add, Mul, Sub};

use super::algnum::AlgNum;
use super::poly::Poly;

/// Coefficients `c_0..=c_N`; `N` is the truncation order. Binary operations
/// truncate at the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<AlgNum>,
}

impl Series {
    pub fn new(coeffs: Vec<AlgNum>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        Series { coeffs }
    }

    pub fn zero(q: u64, order: usize) -> Self {
        Series { coeffs: vec![AlgNum::zero(q); order + 1] }
    }

    pub fn one(q: u64, order: usize) -> Self {
        let mut s = Self::zero(q, order);
        s.coeffs[0] = AlgNum::one(q);
        s
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series { coeffs: (0..=order).map(|i| p.coeff(i)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[AlgNum] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &AlgNum {
        &self.coeffs[i]
    }

    pub fn q(&self) -> u64 {
        self.coeffs[0].q
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// First index (within the common order) where the two series differ.
    pub fn first_mismatch(&self, o: &Series) -> Option<usize> {
        self.coeffs.iter().zip(&o.coeffs).position(|(a, b)| a != b)
    }

    /// Coefficientwise equality through the common order.
    pub fn agrees_with(&self, o: &Series) -> bool {
        self.first_mismatch(o).is_none()
    }

    /// Every coefficient has a vanishing `√q` component.
    pub fn is_sqrt_free(&self) -> bool {
        self.coeffs.iter().all(AlgNum::is_gauss)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Option<Series> {
        let c0inv = self.coeffs[0].inv()?;
        let n = self.order();
        let mut out: Vec<AlgNum> = Vec::with_capacity(n + 1);
        out.push(c0inv.clone());
        for k in 1..=n {
            let mut acc = AlgNum::zero(self.q());
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-&(&acc * &c0inv));
        }
        Some(Series { coeffs: out })
    }

    /// Partial sum `Σ c_k x^k` in floating point.
    pub fn partial_sum_f64(&self, x: f64) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        let mut p = 1.0;
        for c in &self.coeffs {
            let (cr, ci) = c.to_complex();
            re += cr * p;
            im += ci * p;
            p *= x;
        }
        (re, im)
    }
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        let mut out = vec![AlgNum::zero(self.q()); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Series { coeffs: out }
    }
}
