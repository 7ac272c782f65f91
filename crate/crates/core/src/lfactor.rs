//! Closed-form local L-factors as exact rational functions of `t = q_F^{-s}`.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{rat_to_string, AlgNum, GaussRat, Poly, RatFunc};
use crate::segments::{GenericRep, UnramifiedModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LKind {
    Asai,
    RankinSelberg,
    Tate,
}

/// The series variable of an L-factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    /// `t = q_F^{-s}`
    T,
    /// `t_E = q_E^{-s}`
    TE,
}

/// `∏ (1 - c_i x^{k_i})^{-1}` kept in factored form for display.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerProduct {
    pub kind: LKind,
    pub variable: Variable,
    pub q: u64,
    pub factors: Vec<(GaussRat, usize)>,
}

impl EulerProduct {
    pub fn ratfunc(&self) -> RatFunc {
        let den = self
            .factors
            .iter()
            .fold(Poly::one(self.q), |acc, (c, k)| &acc * &Poly::one_minus(c, *k, self.q));
        RatFunc::recip_of(den)
    }

    /// Rewrites an RS product in `t`: `t_E = t²` over unramified `E/F`, `t_E = t`
    /// over ramified `E/F`.
    pub fn in_t(&self, e: i64) -> EulerProduct {
        if self.variable == Variable::T || e == 2 {
            return EulerProduct { variable: Variable::T, ..self.clone() };
        }
        EulerProduct {
            variable: Variable::T,
            factors: self.factors.iter().map(|(c, k)| (c.clone(), 2 * k)).collect(),
            ..self.clone()
        }
    }
}

fn monomial(var: &str, k: usize) -> String {
    match k {
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// `1 - c x^k` with the sign folded in, e.g. `1 - 3t`, `1 - t/3`, `1 + t^2`.
fn factor_string(c: &GaussRat, k: usize, var: &str) -> String {
    let x = monomial(var, k);
    if !c.is_real() {
        return format!("1 - ({c}){x}");
    }
    let r = &c.re;
    let sign = if r.is_negative() { '+' } else { '-' };
    let a = r.abs();
    let (num, den) = (a.numer().clone(), a.denom().clone());
    let body = match (num.is_one(), den.is_one()) {
        (true, true) => x,
        (false, true) => format!("{num}{x}"),
        (true, false) => format!("{x}/{den}"),
        (false, false) => format!("{num}{x}/{den}"),
    };
    format!("1 {sign} {body}")
}

impl fmt::Display for EulerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let var = match self.variable {
            Variable::T => "t",
            Variable::TE => "t_E",
        };
        write!(f, "1/[")?;
        for (c, k) in &self.factors {
            write!(f, "({})", factor_string(c, *k, var))?;
        }
        write!(f, "]")
    }
}

/// Factored Asai L-factor of an unramified module.
pub fn asai_factors(module: &UnramifiedModule) -> EulerProduct {
    let a = module.satake();
    let ramified = module.field().is_ramified();
    let mut factors = Vec::new();
    if ramified {
        for i in 0..a.len() {
            for j in i..a.len() {
                factors.push((&a[i] * &a[j], 1));
            }
        }
    } else {
        factors.extend(a.iter().map(|x| (x.clone(), 1)));
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                factors.push((&a[i] * &a[j], 2));
            }
        }
    }
    EulerProduct { kind: LKind::Asai, variable: Variable::T, q: module.field().q_f(), factors }
}

/// `L(s, π, As)` for unramified `π`, in `t`.
pub fn asai_l(module: &UnramifiedModule) -> RatFunc {
    asai_factors(module).ratfunc()
}

/// Factored `L(s, π × π')` of two unramified modules, in `t_E`.
pub fn rs_factors(m1: &UnramifiedModule, m2: &UnramifiedModule) -> EulerProduct {
    let factors = m1
        .satake()
        .iter()
        .flat_map(|a| m2.satake().iter().map(move |b| (a * b, 1)))
        .collect();
    EulerProduct { kind: LKind::RankinSelberg, variable: Variable::TE, q: m1.field().q_f(), factors }
}

/// `L(s, π × π')` in `t_E`.
pub fn rs_l(m1: &UnramifiedModule, m2: &UnramifiedModule) -> RatFunc {
    rs_factors(m1, m2).ratfunc()
}

/// `L(s, π × π')` rewritten in `t`.
pub fn rs_l_in_t(m1: &UnramifiedModule, m2: &UnramifiedModule) -> RatFunc {
    rs_factors(m1, m2).in_t(m1.field().ram_index()).ratfunc()
}

/// `(1 - value · t^power)^{-1}`.
pub fn tate_l(value: &GaussRat, power: usize, q: u64) -> RatFunc {
    RatFunc::recip_of(Poly::one_minus(value, power, q))
}

/// The product formula over the characters of the module: GL(1) Asai factors
/// of `χ_i|_{F^×}` times `L(s, χ_j × χ_k^σ)` for `j < k`.
pub fn asai_l_multiplicative(module: &UnramifiedModule) -> RatFunc {
    let fp = module.field();
    let q = fp.q_f();
    let e = fp.ram_index();
    let chars: Vec<UnramifiedModule> = module
        .satake()
        .iter()
        .map(|a| UnramifiedModule::new(*fp, vec![a.clone()]).expect("nonzero"))
        .collect();
    let mut out = RatFunc::one(q);
    for (j, cj) in chars.iter().enumerate() {
        out = &out * &tate_l(&cj.satake()[0].pow(e), 1, q);
        for ck in &chars[j + 1..] {
            // unramified characters are σ-invariant
            out = &out * &rs_l_in_t(cj, ck);
        }
    }
    out
}

/// `L*(s, π, As)`: `L(s, π_u, As)` for ramified `π`, and
/// `L(s, π, As) · (1 - ω_π(ϖ_F) t^n)` for unramified `π`.
pub fn lstar(rep: &GenericRep) -> RatFunc {
    let pi_u = rep.pi_u();
    let l = asai_l(&pi_u);
    if rep.is_ramified() {
        l
    } else {
        let q = rep.field().q_f();
        let tate = Poly::one_minus(&pi_u.central_at_f_unif(), rep.n(), q);
        &l * &RatFunc::from_poly(tate)
    }
}

/// `L*(1, π, As)`, exactly.
pub fn lstar_at_1(rep: &GenericRep) -> Result<AlgNum> {
    let q = rep.field().q_f() as i64;
    lstar(rep).eval_at(&GaussRat::frac(1, q)).map_err(|e| match e {
        Error::PoleAtEvaluation => Error::NotHolomorphic,
        other => other,
    })
}

/// `L(s, π × π^σ) = L(s, π, As) · L(s, π ⊗ κ, As)` for unramified `E/F`.
pub fn kable_factorization_check(module: &UnramifiedModule) -> Result<bool> {
    if module.field().is_ramified() {
        return Err(Error::OutOfScope("κ ramified".into()));
    }
    let lhs = rs_l_in_t(module, module);
    let twisted = module.map_values(|a| -a);
    let rhs = &asai_l(module) * &asai_l(&twisted);
    Ok(lhs == rhs)
}

/// Displays a real rational as `p/q`, anything else through [`GaussRat`]'s
/// formatting.
pub fn gauss_label(g: &GaussRat) -> String {
    if g.is_real() {
        rat_to_string(&g.re)
    } else {
        g.to_string()
    }
}
