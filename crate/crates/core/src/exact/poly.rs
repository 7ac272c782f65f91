//! Dense univariate polynomials over [`AlgNum`], ascending coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::algnum::AlgNum;
use super::gauss::GaussRat;

/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<AlgNum>,
    q: u64,
}

impl Poly {
    pub fn new(q: u64, mut coeffs: Vec<AlgNum>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, q }
    }

    pub fn from_gauss(q: u64, coeffs: impl IntoIterator<Item = GaussRat>) -> Self {
        Self::new(q, coeffs.into_iter().map(|c| AlgNum::from_gauss(q, c)).collect())
    }

    pub fn zero(q: u64) -> Self {
        Poly { coeffs: Vec::new(), q }
    }

    pub fn one(q: u64) -> Self {
        Self::constant(AlgNum::one(q))
    }

    pub fn constant(c: AlgNum) -> Self {
        let q = c.q;
        Self::new(q, vec![c])
    }

    /// `1 - c·t^k`
    pub fn one_minus(c: &GaussRat, k: usize, q: u64) -> Self {
        let mut v = vec![AlgNum::zero(q); k + 1];
        v[0] = AlgNum::one(q);
        v[k] = &v[k] - &AlgNum::from_gauss(q, c.clone());
        Self::new(q, v)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[AlgNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> AlgNum {
        self.coeffs.get(i).cloned().unwrap_or_else(|| AlgNum::zero(self.q))
    }

    pub fn leading(&self) -> Option<&AlgNum> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &AlgNum) -> Self {
        Self::new(self.q, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &AlgNum) -> AlgNum {
        let mut acc = AlgNum::zero(self.q);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(t^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut v = vec![AlgNum::zero(self.q); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(self.q, v)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.q), self.clone());
        }
        let mut quot = vec![AlgNum::zero(self.q); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = &rem[i] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = &rem[idx] - &(&c * dc);
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.q, quot), Poly::new(self.q, rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl fmt::Display for Poly {
    /// Ascending powers of `t`, e.g. `1 - (6/5)t + t^2`; coefficients outside ℚ
    /// are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let (neg, body) = match c.as_rational() {
                Some(r) => {
                    let a = r.abs();
                    let mag = match i {
                        0 => a.to_string(),
                        _ if a.is_one() => String::new(),
                        _ if a.is_integer() => a.to_string(),
                        _ => format!("({a})"),
                    };
                    (r.is_negative(), mag)
                }
                None => (false, format!("({c})")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            write!(f, "{body}{mono}")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.q, (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.q, (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.q);
        }
        let mut v = vec![AlgNum::zero(self.q); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Poly::new(self.q, v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.q, self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_gauss(2, c.iter().map(|&x| GaussRat::from_int(x)))
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[1, 0, 0, -1]);
        let b = p(&[1, -1]);
        let (qq, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(qq, p(&[1, 1, 1]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1-t)(1+t) and (1-t)(1-2t)
        let g = p(&[1, 0, -1]).gcd(&p(&[1, -3, 2]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn display_folds_signs() {
        let p = Poly::from_gauss(2, [GaussRat::one(), GaussRat::frac(-6, 5), GaussRat::one()]);
        assert_eq!(p.to_string(), "1 - (6/5)t + t^2");
        let p = Poly::from_gauss(2, [GaussRat::zero(), GaussRat::frac(-1, 1)]);
        assert_eq!(p.to_string(), "-t");
        let p = Poly::constant(AlgNum::sqrt_q(3));
        assert_eq!(p.to_string(), "((1)√3)");
    }
}
