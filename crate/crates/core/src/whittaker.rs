//! Torus values of spherical and essential Whittaker functions.
//!
//! Spherical values follow Shintani's formula
//! `W⁰(diag(ϖ^λ)) = δ_B^{1/2}(ϖ^λ) · s_λ(α)` on the dominant cone and vanish
//! off it. Essential vectors of ramified representations restrict to the torus
//! through the spherical vector of `π_u`.

use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::exact::gint::{bareiss_det, GaussInt};
use crate::exact::{AlgNum, GaussRat};
use crate::segments::{GenericRep, UnramifiedModule};

/// A torus point `diag(ϖ^{λ_1}, …, ϖ^{λ_m})`, by valuations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochar(pub Vec<i64>);

impl Cochar {
    pub fn is_dominant(&self) -> bool {
        is_dominant(&self.0)
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }
}

pub fn is_dominant(lam: &[i64]) -> bool {
    lam.windows(2).all(|w| w[0] >= w[1])
}

/// `Σ λ_i (m + 1 - 2i)`, so that `δ_B(diag(ϖ^λ)) = q^{-modulus_exponent(λ)}`.
pub fn modulus_exponent(lam: &[i64]) -> i64 {
    let m = lam.len() as i64;
    lam.iter().enumerate().map(|(i, &l)| l * (m - 1 - 2 * i as i64)).sum()
}

/// Complete homogeneous symmetric polynomials `h_0..=h_max` at `alpha`.
pub fn complete_homogeneous(alpha: &[GaussRat], max: usize) -> Vec<GaussRat> {
    let mut h = vec![GaussRat::zero(); max + 1];
    h[0] = GaussRat::one();
    for x in alpha {
        for k in 1..=max {
            let v = &h[k] + &(x * &h[k - 1]);
            h[k] = v;
        }
    }
    h
}

/// Determinant over ℚ(i) by fraction-based Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<GaussRat>>) -> GaussRat {
    let n = m.len();
    let mut det = GaussRat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return GaussRat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].inv().unwrap();
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for j in c..n {
                let v = &m[r][j] - &(&f * &m[c][j]);
                m[r][j] = v;
            }
        }
    }
    det
}

/// Jacobi–Trudi `det(h_{λ_i - i + j})` for a nonnegative dominant `λ`, reading
/// `h` from a precomputed table.
fn jacobi_trudi(lam: &[i64], h: &[GaussRat]) -> GaussRat {
    let l = lam.iter().take_while(|&&x| x > 0).count();
    let entry = |k: i64| -> GaussRat {
        if k < 0 {
            GaussRat::zero()
        } else {
            h[k as usize].clone()
        }
    };
    let m: Vec<Vec<GaussRat>> = (0..l)
        .map(|i| (0..l).map(|j| entry(lam[i] - i as i64 + j as i64)).collect())
        .collect();
    determinant(m)
}

fn central_shift(lam: &[i64]) -> (Vec<i64>, i64) {
    let c = lam.last().copied().unwrap_or(0).min(0);
    (lam.iter().map(|x| x - c).collect(), c)
}

fn product(alpha: &[GaussRat]) -> GaussRat {
    alpha.iter().fold(GaussRat::one(), |acc, a| &acc * a)
}

/// Schur polynomial `s_λ(α)` via Jacobi–Trudi. Negative entries are handled by
/// the central shift `s_{λ+c} = (∏α)^c s_λ`.
pub fn schur(lam: &[i64], alpha: &[GaussRat]) -> Result<GaussRat> {
    if lam.len() != alpha.len() {
        return Err(Error::LengthMismatch(format!("λ has {} entries, α has {}", lam.len(), alpha.len())));
    }
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let (shifted, c) = central_shift(lam);
    let top = shifted.first().copied().unwrap_or(0) as usize + lam.len();
    let h = complete_homogeneous(alpha, top);
    let s = jacobi_trudi(&shifted, &h);
    Ok(if c == 0 { s } else { &s * &product(alpha).pow(c) })
}

/// Schur polynomial as the bialternant `det(α_i^{λ_j + m - j}) / det(α_i^{m - j})`.
/// Requires pairwise distinct `α`.
pub fn schur_bialternant(lam: &[i64], alpha: &[GaussRat]) -> Result<GaussRat> {
    if lam.len() != alpha.len() {
        return Err(Error::LengthMismatch(format!("λ has {} entries, α has {}", lam.len(), alpha.len())));
    }
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let m = lam.len();
    let alt = |exps: &dyn Fn(usize) -> i64| -> GaussRat {
        determinant((0..m).map(|i| (0..m).map(|j| alpha[i].pow(exps(j))).collect()).collect())
    };
    let vdm = alt(&|j| (m - 1 - j) as i64);
    if vdm.is_zero() {
        return Err(Error::RepeatedValues);
    }
    let num = alt(&|j| lam[j] + (m - 1 - j) as i64);
    Ok(&num / &vdm)
}

/// Spherical values of one module. Satake values are scaled to Gaussian
/// integers `a_i = D α_i`, so `s_λ(α) = s_λ(a) / D^{|λ|}` and the Jacobi–Trudi
/// determinants run over ℤ[i].
pub(crate) struct SphericalEvaluator<'a> {
    module: &'a UnramifiedModule,
    den: BigInt,
    scaled: Vec<GaussInt>,
    h: Vec<GaussInt>,
    central: GaussRat,
}

fn complete_homogeneous_int(a: &[GaussInt], max: usize) -> Vec<GaussInt> {
    let mut h = vec![GaussInt::zero(); max + 1];
    h[0] = GaussInt::one();
    for x in a {
        for k in 1..=max {
            let v = h[k].add(&x.mul(&h[k - 1]));
            h[k] = v;
        }
    }
    h
}

impl<'a> SphericalEvaluator<'a> {
    /// Table covers nonnegative dominant `λ` with `λ_1 <= max_part`.
    pub(crate) fn new(module: &'a UnramifiedModule, max_part: usize) -> Self {
        let (den, scaled) = GaussInt::clear_denominators(module.satake());
        let h = complete_homogeneous_int(&scaled, max_part + module.rank());
        SphericalEvaluator { module, den, scaled, h, central: module.central_at_unif() }
    }

    fn schur_int(&self, lam: &[i64]) -> GaussInt {
        let need = lam.first().copied().unwrap_or(0) as usize + lam.len();
        let ext;
        let h = if need < self.h.len() {
            &self.h
        } else {
            ext = complete_homogeneous_int(&self.scaled, need);
            &ext
        };
        let l = lam.iter().take_while(|&&x| x > 0).count();
        let entry = |k: i64| if k < 0 { GaussInt::zero() } else { h[k as usize].clone() };
        bareiss_det(
            (0..l)
                .map(|i| (0..l).map(|j| entry(lam[i] - i as i64 + j as i64)).collect())
                .collect(),
        )
    }

    pub(crate) fn schur(&self, lam: &[i64]) -> GaussRat {
        let (shifted, c) = central_shift(lam);
        let size: i64 = shifted.iter().sum();
        let s = self.schur_int(&shifted).over(&num_traits::pow(self.den.clone(), size as usize));
        if c == 0 {
            s
        } else {
            &s * &self.central.pow(c)
        }
    }

    /// `δ_B^{1/2}(ϖ_E^λ) s_λ(α)` on the dominant cone, zero elsewhere.
    pub(crate) fn value(&self, lam: &[i64]) -> AlgNum {
        let fp = self.module.field();
        if !is_dominant(lam) {
            return AlgNum::zero(fp.q_f());
        }
        let s = self.schur(lam);
        fp.q_e_half_power(-modulus_exponent(lam)).scale(&s)
    }
}

/// `W⁰_{mod}(diag(ϖ_E^λ))`, by Shintani's formula; `λ` are `E`-valuations.
pub fn spherical_value(module: &UnramifiedModule, lam: &[i64]) -> Result<AlgNum> {
    if lam.len() != module.rank() {
        return Err(Error::LengthMismatch(format!(
            "torus point of length {} for a module of rank {}",
            lam.len(),
            module.rank()
        )));
    }
    let max = lam.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0) * 2;
    Ok(SphericalEvaluator::new(module, max).value(lam))
}

/// Essential vector values of a ramified generic representation.
pub(crate) struct EssentialEvaluator<'a> {
    pi_u: UnramifiedModule,
    n: usize,
    spherical: Option<SphericalEvaluator<'a>>,
}

impl<'a> EssentialEvaluator<'a> {
    pub(crate) fn new(rep: &GenericRep, pi_u: &'a UnramifiedModule, max_part: usize) -> Result<Self> {
        if !rep.is_ramified() {
            return Err(Error::UnramifiedRep);
        }
        Ok(EssentialEvaluator {
            pi_u: pi_u.clone(),
            n: rep.n(),
            spherical: Some(SphericalEvaluator::new(pi_u, max_part)),
        })
    }

    pub(crate) fn r(&self) -> usize {
        self.pi_u.rank()
    }

    /// `W⁰_π(diag(ϖ_E^λ, 1))` for `λ` of length `n - 1`.
    pub(crate) fn value(&self, lam: &[i64]) -> AlgNum {
        let fp = self.pi_u.field();
        let r = self.r();
        let zero = AlgNum::zero(fp.q_f());
        if lam[r.min(lam.len())..].iter().any(|&x| x != 0) {
            return zero;
        }
        if r > 0 && lam[r - 1] < 0 {
            return zero;
        }
        let head = &lam[..r];
        let w = self.spherical.as_ref().unwrap().value(head);
        let size: i64 = head.iter().sum();
        // ν_E(a')^{(n-r)/2} = q_E^{-|λ'|(n-r)/2}
        &w * &fp.q_e_half_power(-size * (self.n - r) as i64)
    }
}

/// `W⁰_π(diag(ϖ_E^λ, 1))` for a ramified generic `π` of `GL_n(E)`; `λ` holds
/// the `E`-valuations of `a_1, …, a_{n-1}`.
pub fn essential_value(rep: &GenericRep, lam: &[i64]) -> Result<AlgNum> {
    if !rep.is_ramified() {
        return Err(Error::UnramifiedRep);
    }
    if lam.len() + 1 != rep.n() {
        return Err(Error::LengthMismatch(format!("torus point of length {} for GL_{}", lam.len(), rep.n())));
    }
    let pi_u = rep.pi_u();
    let max = lam.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0) * 2;
    let ev = EssentialEvaluator::new(rep, &pi_u, max)?;
    Ok(ev.value(lam))
}

/// Nonnegative dominant tuples of length `m` and total `size`, in
/// lexicographically decreasing order.
pub fn dominant_tuples(m: usize, size: usize) -> Vec<Vec<i64>> {
    fn rec(m: usize, rest: usize, cap: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if m == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining m parts, each <= cap, must absorb `rest`
        if rest > cap * m {
            return;
        }
        for part in (0..=cap.min(rest)).rev() {
            cur.push(part as i64);
            rec(m - 1, rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if size == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, size, size, &mut Vec::with_capacity(m), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local_data::FieldPair;
    use crate::segments::{MultChar, Segment};

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn schur_small_cases() {
        assert_eq!(schur(&[0, 0], &[g(3), g(5)]).unwrap(), g(1));
        assert_eq!(schur(&[1, 0], &[g(3), g(5)]).unwrap(), g(8));
        // a²b + ab² at (3, 5) = 45 + 75
        assert_eq!(schur(&[2, 1], &[g(3), g(5)]).unwrap(), g(120));
        assert!(matches!(schur(&[0, 1], &[g(3), g(5)]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn negative_entries_use_central_shift() {
        let a = [GaussRat::frac(1, 2), g(3)];
        let s = schur(&[0, -2], &a).unwrap();
        let expect = &schur(&[2, 0], &a).unwrap() * &(&a[0] * &a[1]).pow(-2);
        assert_eq!(s, expect);
        assert_eq!(schur_bialternant(&[0, -2], &a).unwrap(), expect);
    }

    #[test]
    fn modulus_exponents() {
        assert_eq!(modulus_exponent(&[0, 0, 0]), 0);
        assert_eq!(modulus_exponent(&[1, 0]), 1);
        assert_eq!(modulus_exponent(&[2, 1, 0]), 4);
    }

    #[test]
    fn spherical_examples() {
        let fp = FieldPair::unramified(3).unwrap();
        let m = UnramifiedModule::new(fp, vec![g(2), GaussRat::frac(1, 5)]).unwrap();
        assert!(spherical_value(&m, &[0, 0]).unwrap().is_one());
        assert!(spherical_value(&m, &[0, 1]).unwrap().is_zero());
        let m1 = UnramifiedModule::new(fp, vec![GaussRat::frac(2, 7)]).unwrap();
        assert_eq!(spherical_value(&m1, &[3]).unwrap(), AlgNum::from_gauss(3, GaussRat::frac(8, 343)));
        assert!(spherical_value(&m1, &[1, 0]).is_err());
    }

    #[test]
    fn essential_examples() {
        let fp = FieldPair::unramified(2).unwrap();
        let st = GenericRep::new(fp, vec![Segment::new(MultChar::unramified(g(1)).unwrap(), 2).unwrap()]).unwrap();
        assert!(essential_value(&st, &[0]).unwrap().is_one());
        // q_E^{-1} with q_E = 4
        assert_eq!(essential_value(&st, &[2]).unwrap(), AlgNum::from_gauss(2, GaussRat::frac(1, 4)));
        assert!(essential_value(&st, &[-1]).unwrap().is_zero());

        // π_u of rank 1 inside GL_3: λ_2 must vanish
        let ram = MultChar::new("chi".into(), 1, g(1), "chi".into(), g(1)).unwrap();
        let rep = GenericRep::new(
            fp,
            vec![Segment::unramified_char(g(3)).unwrap(), Segment::new(ram, 2).unwrap()],
        )
        .unwrap();
        assert!(essential_value(&rep, &[0, 0]).unwrap().is_one());
        assert!(essential_value(&rep, &[1, 1]).unwrap().is_zero());
        assert!(!essential_value(&rep, &[1, 0]).unwrap().is_zero());

        let un = GenericRep::unramified(fp, &[g(3)]).unwrap();
        assert_eq!(essential_value(&un, &[]), Err(Error::UnramifiedRep));
    }

    #[test]
    fn half_integer_powers_on_ramified_pairs() {
        // ramified E/F, q_E = q_F = 3, Steinberg of GL_2: value q_E^{-λ/2}
        let fp = FieldPair::ramified(3, 1).unwrap();
        let st = GenericRep::new(fp, vec![Segment::new(MultChar::unramified(g(1)).unwrap(), 2).unwrap()]).unwrap();
        let v = essential_value(&st, &[1]).unwrap();
        assert!(!v.is_gauss());
        assert_eq!(&v * &v, AlgNum::from_gauss(3, GaussRat::frac(1, 3)));
    }

    #[test]
    fn dominant_tuple_counts() {
        assert_eq!(dominant_tuples(0, 0), vec![Vec::<i64>::new()]);
        assert!(dominant_tuples(0, 2).is_empty());
        assert_eq!(dominant_tuples(2, 3), vec![vec![3, 0], vec![2, 1]]);
        // partitions of 6 into at most 3 parts
        assert_eq!(dominant_tuples(3, 6).len(), 7);
    }
}
