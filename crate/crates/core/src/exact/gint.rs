//! Gaussian integers, used to keep hot determinant loops free of gcds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::GaussRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn zero() -> Self {
        GaussInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussInt { re: &self.re * &o.re, im: BigInt::zero() };
        }
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn neg(&self) -> Self {
        GaussInt { re: -&self.re, im: -&self.im }
    }

    /// `self / d`, assuming the quotient lies in ℤ[i].
    pub fn div_exact(&self, d: &Self) -> Self {
        if d.im.is_zero() {
            return GaussInt { re: &self.re / &d.re, im: &self.im / &d.re };
        }
        let n = &d.re * &d.re + &d.im * &d.im;
        let num = self.mul(&GaussInt { re: d.re.clone(), im: -&d.im });
        GaussInt { re: num.re / &n, im: num.im / &n }
    }

    /// `self / den` in ℚ(i).
    pub fn over(&self, den: &BigInt) -> GaussRat {
        GaussRat::new(
            BigRational::new(self.re.clone(), den.clone()),
            BigRational::new(self.im.clone(), den.clone()),
        )
    }

    /// Common denominator `D` and numerators `D·x` of a list of Gaussian rationals.
    pub fn clear_denominators(xs: &[GaussRat]) -> (BigInt, Vec<GaussInt>) {
        let d = xs
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
        let scaled = xs
            .iter()
            .map(|x| GaussInt {
                re: x.re.numer() * (&d / x.re.denom()),
                im: x.im.numer() * (&d / x.im.denom()),
            })
            .collect();
        (d, scaled)
    }
}

/// Determinant over ℤ[i] by Bareiss' fraction-free elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<GaussInt>>) -> GaussInt {
    let n = m.len();
    if n == 0 {
        return GaussInt::one();
    }
    let mut sign = false;
    let mut prev = GaussInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return GaussInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussInt {
        GaussInt { re: re.into(), im: im.into() }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![
            vec![gi(2, 1), gi(0, 0), gi(3, 0)],
            vec![gi(1, 0), gi(0, 0), gi(1, -1)],
            vec![gi(0, 0), gi(4, 0), gi(5, 2)],
        ];
        // -4 · det[[2+i, 3], [1, 1-i]] = -4 · ((2+i)(1-i) - 3)
        let expect = gi(-4, 0).mul(&gi(2, 1).mul(&gi(1, -1)).sub(&gi(3, 0)));
        assert_eq!(bareiss_det(m), expect);
    }

    #[test]
    fn clears_denominators() {
        let xs = [GaussRat::frac(1, 2), GaussRat::new(GaussRat::frac(1, 3).re, GaussRat::frac(3, 4).re)];
        let (d, ys) = GaussInt::clear_denominators(&xs);
        assert_eq!(d, BigInt::from(12));
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(&y.over(&d), x);
        }
    }
}
