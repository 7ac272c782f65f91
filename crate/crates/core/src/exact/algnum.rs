//! Scalars `a + b·√q` with `a, b ∈ ℚ(i)`.
//!
//! The radicand `q` is fixed per field pair (it is always `q_F`). When `q` is a
//! perfect square the `√q` part is folded into `a`, so every value has a
//! unique representation and the ring is a field for every `q`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gauss::{forward_owned, GaussRat};

#[derive(Clone, Debug)]
pub struct AlgNum {
    pub a: GaussRat,
    pub b: GaussRat,
    pub q: u64,
}

fn exact_sqrt(q: u64) -> Option<u64> {
    let r = (q as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == q)
}

impl AlgNum {
    pub fn new(a: GaussRat, b: GaussRat, q: u64) -> Self {
        assert!(q >= 1, "radicand must be positive");
        AlgNum { a, b, q }.normalized()
    }

    pub fn from_gauss(q: u64, a: GaussRat) -> Self {
        AlgNum { a, b: GaussRat::zero(), q }
    }

    pub fn from_int(q: u64, n: i64) -> Self {
        Self::from_gauss(q, GaussRat::from_int(n))
    }

    pub fn zero(q: u64) -> Self {
        Self::from_int(q, 0)
    }

    pub fn one(q: u64) -> Self {
        Self::from_int(q, 1)
    }

    /// The formal symbol `√q`.
    pub fn sqrt_q(q: u64) -> Self {
        Self::new(GaussRat::zero(), GaussRat::one(), q)
    }

    /// `q^(k/2)` for any integer `k`.
    pub fn q_half_power(q: u64, k: i64) -> Self {
        let base = GaussRat::real(BigRational::from_integer(BigInt::from(q)));
        let whole = base.pow(k.div_euclid(2));
        if k.rem_euclid(2) == 0 {
            Self::from_gauss(q, whole)
        } else {
            Self::new(GaussRat::zero(), whole, q)
        }
    }

    fn normalized(mut self) -> Self {
        if !self.b.is_zero() {
            if let Some(s) = exact_sqrt(self.q) {
                let s = GaussRat::from_int(s as i64);
                self.a = &self.a + &(&self.b * &s);
                self.b = GaussRat::zero();
            }
        }
        self
    }

    fn radicand(&self, o: &AlgNum) -> u64 {
        match (self.b.is_zero(), o.b.is_zero()) {
            (true, _) => o.q,
            (false, true) => self.q,
            (false, false) => {
                assert_eq!(self.q, o.q, "mixing scalars over different radicands");
                self.q
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the value lies in ℚ(i), i.e. the `√q` component vanishes.
    pub fn is_gauss(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is an ordinary rational number.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.b.is_zero() && self.a.im.is_zero()).then_some(&self.a.re)
    }

    /// Galois conjugate `a - b√q`.
    pub fn sqrt_conj(&self) -> Self {
        AlgNum { a: self.a.clone(), b: -&self.b, q: self.q }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.b.is_zero() {
            return Some(Self::from_gauss(self.q, self.a.inv()?));
        }
        // (a + b√q)(a - b√q) = a² - q b², nonzero for nonsquare q
        let qg = GaussRat::from_int(self.q as i64);
        let n = &(&self.a * &self.a) - &(&qg * &(&self.b * &self.b));
        let ninv = n.inv()?;
        Some(AlgNum { a: &self.a * &ninv, b: -(&self.b * &ninv), q: self.q })
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = AlgNum::one(self.q);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn scale(&self, g: &GaussRat) -> Self {
        AlgNum { a: &self.a * g, b: &self.b * g, q: self.q }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let s = (self.q as f64).sqrt();
        let (ar, ai) = self.a.to_f64_pair();
        let (br, bi) = self.b.to_f64_pair();
        (ar + br * s, ai + bi * s)
    }
}

impl PartialEq for AlgNum {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.q == o.q)
    }
}

impl Eq for AlgNum {}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})√{}", self.b, self.q)
        } else {
            write!(f, "{} + ({})√{}", self.a, self.b, self.q)
        }
    }
}

impl<'a> Add<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn add(self, o: &AlgNum) -> AlgNum {
        AlgNum { a: &self.a + &o.a, b: &self.b + &o.b, q: self.radicand(o) }
    }
}

impl<'a> Sub<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn sub(self, o: &AlgNum) -> AlgNum {
        AlgNum { a: &self.a - &o.a, b: &self.b - &o.b, q: self.radicand(o) }
    }
}

impl<'a> Mul<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn mul(self, o: &AlgNum) -> AlgNum {
        let q = self.radicand(o);
        if self.b.is_zero() {
            return o.scale(&self.a);
        }
        if o.b.is_zero() {
            return self.scale(&o.a);
        }
        let qg = GaussRat::from_int(q as i64);
        AlgNum {
            a: &(&self.a * &o.a) + &(&qg * &(&self.b * &o.b)),
            b: &(&self.a * &o.b) + &(&o.a * &self.b),
            q,
        }
    }
}

impl<'a> Div<&'a AlgNum> for &'a AlgNum {
    type Output = AlgNum;
    fn div(self, o: &AlgNum) -> AlgNum {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum { a: -&self.a, b: -&self.b, q: self.q }
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        -&self
    }
}

forward_owned!(AlgNum, Add add, Sub sub, Mul mul, Div div);
