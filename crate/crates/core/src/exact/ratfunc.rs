//! Reduced rational functions in `t` and Padé-style reconstruction from
//! truncated series.

use std::fmt;
use std::ops::{Div, Mul};

use super::algnum::AlgNum;
use super::gauss::GaussRat;
use super::poly::Poly;
use super::series::Series;
use crate::error::{Error, Result};

/// `numerator / denominator`, coprime. The denominator is scaled so that its
/// lowest nonzero coefficient is 1; in particular `den(0) = 1` whenever
/// `den(0) != 0`, which holds for every L-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let q = den.q();
        if num.is_zero() {
            return Ok(RatFunc { num: Poly::zero(q), den: Poly::one(q) });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let low = den.coeff(den.valuation().expect("nonzero denominator"));
        let s = low.inv().expect("nonzero coefficient");
        Ok(RatFunc { num: num.scale(&s), den: den.scale(&s) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let q = p.q();
        RatFunc { num: p, den: Poly::one(q) }
    }

    pub fn one(q: u64) -> Self {
        Self::from_poly(Poly::one(q))
    }

    /// `1 / p`, panicking if `p` is zero.
    pub fn recip_of(p: Poly) -> Self {
        let q = p.q();
        Self::new(Poly::one(q), p).expect("nonzero polynomial")
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn q(&self) -> u64 {
        self.den.q()
    }

    pub fn num_degree(&self) -> usize {
        self.num.degree().unwrap_or(0)
    }

    pub fn den_degree(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    /// `f(t^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        RatFunc { num: self.num.compose_power(k), den: self.den.compose_power(k) }
    }

    /// Maclaurin coefficients `c_0..=c_order`.
    pub fn series_of(&self, order: usize) -> Result<Series> {
        if self.den.coeff(0).is_zero() {
            return Err(Error::PoleAtZero);
        }
        let inv = Series::from_poly(&self.den, order).inverse().ok_or(Error::PoleAtZero)?;
        Ok(&Series::from_poly(&self.num, order) * &inv)
    }

    pub fn eval_alg(&self, x: &AlgNum) -> Result<AlgNum> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluation);
        }
        Ok(&self.num.eval(x) / &d)
    }

    pub fn eval_at(&self, t0: &GaussRat) -> Result<AlgNum> {
        self.eval_alg(&AlgNum::from_gauss(self.q(), t0.clone()))
    }

    /// The unique rational function with `deg num <= max_num_deg`,
    /// `deg den <= max_den_deg`, `den(0) = 1` that reproduces every available
    /// coefficient of `s`. Among admissible denominators the one of least
    /// degree is returned.
    pub fn reconstruct(s: &Series, max_num_deg: usize, max_den_deg: usize) -> Result<RatFunc> {
        let n = s.order();
        if n < max_num_deg + max_den_deg + 1 {
            return Err(Error::InsufficientOrder {
                order: n,
                needed: max_num_deg + max_den_deg + 1,
            });
        }
        let q = s.q();
        let c = |i: isize| -> AlgNum {
            if i < 0 {
                AlgNum::zero(q)
            } else {
                s.coeff(i as usize).clone()
            }
        };
        for dd in 0..=max_den_deg {
            // Σ_{j=1..dd} d_j c_{k-j} = -c_k for k = p+1..=N
            let rows: Vec<Vec<AlgNum>> = (max_num_deg + 1..=n)
                .map(|k| {
                    let mut row: Vec<AlgNum> =
                        (1..=dd).map(|j| c(k as isize - j as isize)).collect();
                    row.push(-&c(k as isize));
                    row
                })
                .collect();
            let Some(d) = solve_consistent(rows, dd, q) else { continue };
            let mut den = vec![AlgNum::one(q)];
            den.extend(d);
            let den = Poly::new(q, den);
            let num: Vec<AlgNum> = (0..=max_num_deg)
                .map(|k| {
                    (0..=dd.min(k)).fold(AlgNum::zero(q), |acc, j| {
                        &acc + &(&den.coeff(j) * &c((k - j) as isize))
                    })
                })
                .collect();
            return RatFunc::new(Poly::new(q, num), den);
        }
        Err(Error::ReconstructionInconsistent)
    }
}

/// Row-reduces the augmented system and returns one solution (free variables
/// set to zero), or `None` if it is inconsistent.
fn solve_consistent(mut rows: Vec<Vec<AlgNum>>, unknowns: usize, q: u64) -> Option<Vec<AlgNum>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..=unknowns {
                    let v = &rows[i][j] - &(&f * &rows[r][j]);
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![AlgNum::zero(q); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = rows[i][unknowns].clone();
    }
    Some(sol)
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics when dividing by zero.
    fn div(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.den, &self.den * &o.num).expect("division by zero rational function")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[(i64, i64)]) -> Poly {
        Poly::from_gauss(2, c.iter().map(|&(a, b)| GaussRat::frac(a, b)))
    }

    fn gs(v: &[(i64, i64)]) -> Vec<AlgNum> {
        v.iter().map(|&(a, b)| AlgNum::from_gauss(2, GaussRat::frac(a, b))).collect()
    }

    #[test]
    fn geometric_series() {
        let f = RatFunc::recip_of(p(&[(1, 1), (-1, 1)]));
        assert_eq!(f.series_of(3).unwrap().coeffs(), gs(&[(1, 1); 4]).as_slice());
    }

    #[test]
    fn cancelling_factor() {
        let f = RatFunc::new(p(&[(1, 1), (0, 1), (-1, 1)]), p(&[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(f.series_of(2).unwrap().coeffs(), gs(&[(1, 1), (1, 1), (0, 1)]).as_slice());
        assert_eq!(f.denominator(), &Poly::one(2));
    }

    #[test]
    fn two_geometric_factors() {
        // c_k = Σ_{i+j=k} 3^i 3^{-j}, so c_2 = 9 + 1 + 1/9
        let f = RatFunc::recip_of(&p(&[(1, 1), (-3, 1)]) * &p(&[(1, 1), (-1, 3)]));
        assert_eq!(f.series_of(2).unwrap().coeffs(), gs(&[(1, 1), (10, 3), (91, 9)]).as_slice());
        let conv: Vec<GaussRat> = (0..=6i64)
            .map(|k| (0..=k).fold(GaussRat::zero(), |acc, i| &acc + &GaussRat::from_int(3).pow(2 * i - k)))
            .collect();
        let got: Vec<GaussRat> = f.series_of(6).unwrap().coeffs().iter().map(|c| c.a.clone()).collect();
        assert_eq!(got, conv);
    }

    #[test]
    fn pole_at_zero_rejected() {
        let f = RatFunc::new(Poly::one(2), p(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!(f.series_of(3), Err(Error::PoleAtZero));
    }

    #[test]
    fn reconstruct_geometric() {
        let s = Series::new(gs(&[(1, 1); 5]));
        let f = RatFunc::reconstruct(&s, 0, 1).unwrap();
        assert_eq!(f, RatFunc::recip_of(p(&[(1, 1), (-1, 1)])));
    }

    #[test]
    fn reconstruct_rejects_non_rational() {
        let s = Series::new(gs(&[(1, 1), (0, 1), (0, 1), (0, 1), (5, 1)]));
        assert_eq!(RatFunc::reconstruct(&s, 0, 1), Err(Error::ReconstructionInconsistent));
    }

    #[test]
    fn reconstruct_round_trip_degree_four() {
        let den = &(&p(&[(1, 1), (-3, 1)]) * &p(&[(1, 1), (-1, 3)])) * &p(&[(1, 1), (0, 1), (-1, 1)]);
        let f = RatFunc::recip_of(den);
        let s = f.series_of(12).unwrap();
        assert_eq!(RatFunc::reconstruct(&s, 0, 4).unwrap(), f);
    }

    #[test]
    fn eval_values_and_poles() {
        let f = RatFunc::recip_of(p(&[(1, 1), (-1, 1)]));
        assert_eq!(f.eval_at(&GaussRat::frac(1, 2)).unwrap(), AlgNum::from_int(2, 2));
        assert_eq!(f.eval_at(&GaussRat::one()), Err(Error::PoleAtEvaluation));

        let g = RatFunc::recip_of(&p(&[(1, 1), (-6, 5), (1, 1)]) * &p(&[(1, 1), (0, 1), (-1, 1)]));
        let v = g.eval_at(&GaussRat::frac(1, 2)).unwrap();
        assert_eq!(v, AlgNum::from_gauss(2, GaussRat::frac(80, 39)));
        let (fr, _) = v.to_complex();
        let direct = 1.0 / ((1.0 - 0.6 + 0.25) * (1.0 - 0.25));
        assert!((fr - direct).abs() < 1e-12);
    }
}
