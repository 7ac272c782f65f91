//! Truncated lattice sums for the Flicker integral, the mirabolic period and
//! the Rankin–Selberg integral, with the theorem-level comparisons against
//! closed forms.
//!
//! All sums run over torus points grouped by `|λ|`, so a series of order `N`
//! is exact through `t^N`. Unit integrals collapse to single lattice terms
//! (maximal compact subgroups have volume one).

use crate::error::{Error, Result};
use crate::exact::{AlgNum, GaussRat, RatFunc, Series};
use crate::lfactor::{lstar, lstar_at_1, rs_l};
use crate::segments::{GenericRep, UnramifiedModule};
use crate::whittaker::{dominant_tuples, modulus_exponent, EssentialEvaluator, SphericalEvaluator};

fn shell_sum(order: usize, term: impl FnMut(usize) -> AlgNum) -> Series {
    Series::new((0..=order).map(term).collect())
}

fn scaled(lam: &[i64], e: i64) -> Vec<i64> {
    lam.iter().map(|x| x * e).collect()
}

/// `I(s, W⁰, Φ₀)` over `N_m(F)\GL_m(F)`: the sum over dominant `λ ≥ 0` of
/// `W⁰(ϖ_F^λ) δ_B^{-1}(ϖ_F^λ) t^{|λ|}`.
pub fn flicker_series(module: &UnramifiedModule, order: usize) -> Series {
    let fp = module.field();
    let q = fp.q_f();
    let e = fp.ram_index();
    let m = module.rank();
    let w = SphericalEvaluator::new(module, e as usize * order);
    shell_sum(order, |d| {
        dominant_tuples(m, d).iter().fold(AlgNum::zero(q), |acc, lam| {
            let v = w.value(&scaled(lam, e));
            &acc + &(&v * &fp.q_f_power(modulus_exponent(lam)))
        })
    })
}

/// Torus weight of the mirabolic period at `diag(ϖ_F^λ, 1)`:
/// `δ_{B_{n-1}}^{-1} · ν_F^{s-1}` gives `q_F^{Σ λ_i (n - 2i)} (q_F t)^{|λ|}`.
fn mirabolic_weight(fp: &crate::FieldPair, lam: &[i64], n: usize) -> AlgNum {
    let exp: i64 = lam
        .iter()
        .enumerate()
        .map(|(i, &l)| l * (n as i64 - 2 * (i as i64 + 1)))
        .sum::<i64>()
        + lam.iter().sum::<i64>();
    fp.q_f_power(exp)
}

/// `I_{(0)}(s, W⁰)` for the spherical vector of an unramified module of rank
/// `n`.
pub fn mirabolic_series_module(module: &UnramifiedModule, order: usize) -> Series {
    let fp = module.field();
    let q = fp.q_f();
    let e = fp.ram_index();
    let n = module.rank();
    if n == 0 {
        return Series::one(q, order);
    }
    let w = SphericalEvaluator::new(module, e as usize * order);
    shell_sum(order, |d| {
        dominant_tuples(n - 1, d).iter().fold(AlgNum::zero(q), |acc, lam| {
            let mut pt = scaled(lam, e);
            pt.push(0);
            &acc + &(&w.value(&pt) * &mirabolic_weight(fp, lam, n))
        })
    })
}

/// `I_{(0)}(s, W⁰_π)` for the essential vector of a generic `π`.
pub fn mirabolic_series(rep: &GenericRep, order: usize) -> Result<Series> {
    if !rep.is_ramified() {
        return Ok(mirabolic_series_module(&rep.pi_u(), order));
    }
    let fp = rep.field();
    let q = fp.q_f();
    let e = fp.ram_index();
    let n = rep.n();
    let pi_u = rep.pi_u();
    let w = EssentialEvaluator::new(rep, &pi_u, e as usize * order)?;
    Ok(shell_sum(order, |d| {
        // off the dominant cone of the first r coordinates, or with a nonzero
        // coordinate past r, the essential vector vanishes
        dominant_tuples(n - 1, d).iter().fold(AlgNum::zero(q), |acc, lam| {
            let v = w.value(&scaled(lam, e));
            if v.is_zero() {
                return acc;
            }
            &acc + &(&v * &mirabolic_weight(fp, lam, n))
        })
    }))
}

/// `I(s, W⁰, W'⁰)` over `N_{n-1}(E)\GL_{n-1}(E)`, in `t_E`.
pub fn rs_series(m1: &UnramifiedModule, m2: &UnramifiedModule, order: usize) -> Result<Series> {
    let n = m1.rank();
    if m2.rank() + 1 != n {
        return Err(Error::RankMismatch(format!("GL_{n} against GL_{}", m2.rank())));
    }
    let fp = m1.field();
    let q = fp.q_f();
    let w1 = SphericalEvaluator::new(m1, order);
    let w2 = SphericalEvaluator::new(m2, order);
    Ok(shell_sum(order, |d| {
        dominant_tuples(n - 1, d).iter().fold(AlgNum::zero(q), |acc, lam| {
            let mut pt = lam.clone();
            pt.push(0);
            // δ^{-1} ν_E^{s-1/2} = q_E^{modexp(λ) + |λ|/2} t_E^{|λ|}
            let size: i64 = lam.iter().sum();
            let weight = fp.q_e_half_power(2 * modulus_exponent(lam) + size);
            let v = &(&w1.value(&pt) * &w2.value(lam)) * &weight;
            &acc + &v
        })
    }))
}

/// Outcome of comparing a period series with its closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodReport {
    pub series: Series,
    /// `None` when the series does not reconstruct within the degree bounds.
    pub reconstructed: Option<RatFunc>,
    pub closed_form: RatFunc,
    pub matched: bool,
    /// `None` at a pole.
    pub value_at_1: Option<AlgNum>,
}

impl PeriodReport {
    /// Index of the first coefficient where the series leaves the closed form.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.closed_form
            .series_of(self.series.order())
            .ok()
            .and_then(|s| self.series.first_mismatch(&s))
    }
}

/// Degree bounds `(numerator, denominator)` of `L*(s, π, As)`.
pub fn lstar_degree_bounds(rep: &GenericRep) -> (usize, usize) {
    let r = rep.pi_u().rank();
    let den = if rep.field().is_ramified() { r * (r + 1) / 2 } else { r + r * (r.saturating_sub(1)) };
    let num = if rep.is_ramified() { 0 } else { rep.n() };
    (num, den)
}

/// Mirabolic series against `L*(s, π, As)`, with reconstruction and the value
/// at `s = 1`.
pub fn verify_theorem1(rep: &GenericRep, order: usize) -> Result<PeriodReport> {
    let series = mirabolic_series(rep, order)?;
    let closed_form = lstar(rep);
    let (p, d) = lstar_degree_bounds(rep);
    let reconstructed = match RatFunc::reconstruct(&series, p, d) {
        Ok(f) => Some(f),
        Err(Error::ReconstructionInconsistent | Error::InsufficientOrder { .. }) => None,
        Err(e) => return Err(e),
    };
    let agrees = closed_form.series_of(order).map(|s| s.agrees_with(&series)).unwrap_or(false);
    let matched = agrees && reconstructed.as_ref() == Some(&closed_form);
    let value_at_1 = match lstar_at_1(rep) {
        Ok(v) => Some(v),
        Err(Error::NotHolomorphic) => None,
        Err(e) => return Err(e),
    };
    Ok(PeriodReport { series, reconstructed, closed_form, matched, value_at_1 })
}

/// The computable endpoint of `c(π) = 1`: `π_u ≅ (π̃)_u`, equal `L*(1)` on
/// both sides, and an even conductor over a ramified pair.
pub fn verify_c_pi(rep: &GenericRep) -> Result<bool> {
    if !rep.is_conjugate_selfdual() {
        return Err(Error::NotDistinguishedCompatible("π̃ is not isomorphic to π^σ".into()));
    }
    let dual = rep.contragredient();
    if !rep.pi_u().same_values(&dual.pi_u()) {
        return Ok(false);
    }
    let pole = |_| Error::NotDistinguishedCompatible("L*(s, π, As) has a pole at s = 1".into());
    let a = lstar_at_1(rep).map_err(pole)?;
    let b = lstar_at_1(&dual).map_err(pole)?;
    if a != b {
        return Ok(false);
    }
    if rep.field().is_ramified() && !rep.epsilon_twist_sign(&GaussRat::from_int(-1)).is_one() {
        return Ok(false);
    }
    Ok(true)
}

/// `I(s, W⁰_π, W⁰_{π'}) = L(s, π × π')` for unramified `π`, through `order`.
pub fn essential_rs_check(rep: &GenericRep, t_module: &UnramifiedModule, order: usize) -> Result<bool> {
    if rep.is_ramified() {
        return Err(Error::OutOfScope("Rankin–Selberg factor of a ramified representation".into()));
    }
    let m = rep.pi_u();
    let s = rs_series(&m, t_module, order)?;
    Ok(rs_l(&m, t_module).series_of(order)?.agrees_with(&s))
}

/// Float partial sum of `series` at `t = 1/q_F` against an exact value.
pub fn partial_sum_close(series: &Series, value: &AlgNum, q_f: u64, tol: f64) -> bool {
    let (re, im) = series.partial_sum_f64(1.0 / q_f as f64);
    let (vr, vi) = value.to_complex();
    (re - vr).hypot(im - vi) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfactor::asai_l;
    use crate::local_data::FieldPair;
    use crate::segments::{MultChar, Segment};

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::frac(a, b)
    }

    fn module(fp: FieldPair, v: &[GaussRat]) -> UnramifiedModule {
        UnramifiedModule::new(fp, v.to_vec()).unwrap()
    }

    fn steinberg(fp: FieldPair, alpha: GaussRat) -> GenericRep {
        GenericRep::new(fp, vec![Segment::new(MultChar::unramified(alpha).unwrap(), 2).unwrap()]).unwrap()
    }

    #[test]
    fn flicker_small() {
        let fp = FieldPair::unramified(3).unwrap();
        assert_eq!(flicker_series(&module(fp, &[]), 4), Series::one(3, 4));
        let s = flicker_series(&module(fp, &[g(2, 5)]), 5);
        for k in 0..=5 {
            assert_eq!(s.coeff(k), &AlgNum::from_gauss(3, g(2, 5).pow(k as i64)));
        }
        let m = module(fp, &[g(3, 1), g(1, 3)]);
        assert_eq!(flicker_series(&m, 30), asai_l(&m).series_of(30).unwrap());
    }

    #[test]
    fn flicker_ramified() {
        let fp = FieldPair::ramified(3, 1).unwrap();
        let m = module(fp, &[g(2, 1), g(1, 2)]);
        let s = flicker_series(&m, 12);
        assert!(s.is_sqrt_free());
        assert_eq!(s, asai_l(&m).series_of(12).unwrap());
    }

    #[test]
    fn mirabolic_steinberg() {
        let fp = FieldPair::unramified(2).unwrap();
        let s = mirabolic_series(&steinberg(fp, g(1, 1)), 10).unwrap();
        assert!(s.coeffs().iter().all(AlgNum::is_one));
        let r = verify_theorem1(&steinberg(fp, g(1, 1)), 10).unwrap();
        assert!(r.matched);
        assert_eq!(r.value_at_1, Some(AlgNum::from_int(2, 2)));
    }

    #[test]
    fn mirabolic_unramified_is_lstar() {
        let fp = FieldPair::unramified(2).unwrap();
        let a = GaussRat::new(g(3, 5).re, g(4, 5).re);
        let rep = GenericRep::unramified(fp, &[a.clone(), a.conj()]).unwrap();
        let r = verify_theorem1(&rep, 20).unwrap();
        assert!(r.matched, "{:?}", r.first_mismatch());
        assert_eq!(r.value_at_1, Some(AlgNum::from_gauss(2, g(20, 13))));
        let long = mirabolic_series(&rep, 60).unwrap();
        assert!(partial_sum_close(&long, r.value_at_1.as_ref().unwrap(), 2, 1e-6));
    }

    #[test]
    fn engineered_pole() {
        let fp = FieldPair::unramified(2).unwrap();
        let rep = GenericRep::unramified(fp, &[g(8, 1), g(1, 2), g(3, 1)]).unwrap();
        let r = verify_theorem1(&rep, 30).unwrap();
        assert_eq!(r.value_at_1, None);
        assert!(r.matched);
    }

    #[test]
    fn rs_small() {
        let fp = FieldPair::unramified(2).unwrap();
        let a = module(fp, &[g(3, 1), g(1, 3)]);
        let b = module(fp, &[g(5, 7)]);
        assert_eq!(rs_series(&a, &b, 8).unwrap(), rs_l(&a, &b).series_of(8).unwrap());
        assert_eq!(rs_series(&module(fp, &[g(2, 1)]), &module(fp, &[]), 4).unwrap(), Series::one(2, 4));
        assert!(matches!(rs_series(&a, &a, 4), Err(Error::RankMismatch(_))));
        let rep = GenericRep::unramified(fp, &[g(3, 1), g(1, 3)]).unwrap();
        assert_eq!(essential_rs_check(&rep, &b, 8), Ok(true));
        assert!(essential_rs_check(&steinberg(fp, g(1, 1)), &b, 4).is_err());
    }

    #[test]
    fn c_pi_endpoints() {
        let fp = FieldPair::unramified(2).unwrap();
        assert_eq!(verify_c_pi(&steinberg(fp, g(1, 2))), Ok(true));
        assert!(matches!(verify_c_pi(&steinberg(fp, g(1, 1))), Err(Error::NotDistinguishedCompatible(_))));
        let rep = GenericRep::unramified(fp, &[g(3, 1), g(1, 3)]).unwrap();
        assert_eq!(verify_c_pi(&rep), Ok(true));
        // (2, 1/2) is linked when q_E = 4
        assert!(GenericRep::unramified(fp, &[g(2, 1), g(1, 2)]).is_err());
    }
}
