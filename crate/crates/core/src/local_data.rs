//! The quadratic extension `E/F`, reduced to its numerical invariants, and the
//! conductor calculus of additive characters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::AlgNum;

/// `E/F` through `q_F`, the ramification flag and the conductor `f(E/F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldPair {
    q_f: u64,
    ramified: bool,
    ext_conductor: Option<u32>,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

impl FieldPair {
    /// `ext_conductor` must be given iff `ramified`; `None` on a ramified
    /// pair means the tame value 1.
    pub fn new(q_f: u64, ramified: bool, ext_conductor: Option<u32>) -> Result<Self> {
        if !is_prime_power(q_f) {
            return Err(Error::InvalidField(format!("qF = {q_f} is not a prime power >= 2")));
        }
        let ext_conductor = match (ramified, ext_conductor) {
            (false, None) => None,
            (false, Some(_)) => {
                return Err(Error::InvalidField("extConductor given for an unramified extension".into()))
            }
            (true, None) => Some(1),
            (true, Some(0)) => return Err(Error::InvalidField("extConductor must be positive".into())),
            (true, Some(f)) => Some(f),
        };
        Ok(FieldPair { q_f, ramified, ext_conductor })
    }

    pub fn unramified(q_f: u64) -> Result<Self> {
        Self::new(q_f, false, None)
    }

    pub fn ramified(q_f: u64, ext_conductor: u32) -> Result<Self> {
        Self::new(q_f, true, Some(ext_conductor))
    }

    pub fn q_f(&self) -> u64 {
        self.q_f
    }

    pub fn is_ramified(&self) -> bool {
        self.ramified
    }

    pub fn ext_conductor(&self) -> Option<u32> {
        self.ext_conductor
    }

    /// `q_F²` if unramified, `q_F` if ramified.
    pub fn q_e(&self) -> u64 {
        if self.ramified {
            self.q_f
        } else {
            self.q_f * self.q_f
        }
    }

    /// Ramification index `e`, which is also `v_E(ϖ_F)`.
    pub fn ram_index(&self) -> i64 {
        if self.ramified {
            2
        } else {
            1
        }
    }

    pub fn residue_degree(&self) -> i64 {
        2 / self.ram_index()
    }

    /// `q_E^{k/2}` as an exact scalar over √q_F.
    pub fn q_e_half_power(&self, k: i64) -> AlgNum {
        // q_E = q_F^{2/e}, so q_E^{k/2} = q_F^{k/e}
        if self.ramified {
            AlgNum::q_half_power(self.q_f, k)
        } else {
            AlgNum::q_half_power(self.q_f, 2 * k)
        }
    }

    /// `q_F^k`.
    pub fn q_f_power(&self, k: i64) -> AlgNum {
        AlgNum::q_half_power(self.q_f, 2 * k)
    }
}

/// Conductor data of an additive character of `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddCharData {
    pub conductor: i64,
    pub trivial_on_f: bool,
}

impl AddCharData {
    /// Rejects characters trivial on `F` with odd conductor over a ramified pair.
    pub fn new(fp: &FieldPair, conductor: i64, trivial_on_f: bool) -> Result<Self> {
        if trivial_on_f && fp.is_ramified() && conductor.rem_euclid(2) != 0 {
            return Err(Error::OddConductor(conductor));
        }
        Ok(AddCharData { conductor, trivial_on_f })
    }
}

/// `n(ψ' ∘ Tr_{E/F})` from `n(ψ')`.
pub fn trace_conductor(fp: &FieldPair, n_psi_prime: i64) -> i64 {
    match fp.ext_conductor() {
        Some(f) if fp.is_ramified() => 2 * n_psi_prime + f as i64,
        _ => n_psi_prime,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum TraceZeroKind {
    Unit,
    Uniformizer,
    Any,
}

/// Which kind of trace-zero element `Δ ∈ E^×` exists.
pub fn trace_zero_element_kind(fp: &FieldPair) -> TraceZeroKind {
    match fp.ext_conductor() {
        Some(f) if fp.is_ramified() && f % 2 == 1 => TraceZeroKind::Uniformizer,
        Some(_) if fp.is_ramified() => TraceZeroKind::Unit,
        _ => TraceZeroKind::Any,
    }
}

/// Conductor of `x ↦ ψ'(Tr(Δx))` for a trace-zero `Δ` of the kind returned by
/// [`trace_zero_element_kind`] (a unit when there is no constraint).
pub fn trivial_on_f_conductor(fp: &FieldPair, n_psi_prime: i64) -> i64 {
    let v_delta = match trace_zero_element_kind(fp) {
        TraceZeroKind::Uniformizer => 1,
        TraceZeroKind::Unit | TraceZeroKind::Any => 0,
    };
    trace_conductor(fp, n_psi_prime) + v_delta
}

/// Conductor of `x ↦ ψ(ϖ_F^{-m} x)`.
pub fn shifted_conductor(fp: &FieldPair, conductor: i64, m: i64) -> i64 {
    conductor - fp.ram_index() * m
}

/// The exponent `m` such that `x ↦ ψ(ϖ_F^{-m} x)` has conductor zero.
pub fn conductor_zero_shift(fp: &FieldPair, psi: &AddCharData) -> Result<i64> {
    if !psi.trivial_on_f {
        return Err(Error::NotTrivialOnF);
    }
    let k = psi.conductor;
    if fp.is_ramified() {
        if k.rem_euclid(2) != 0 {
            return Err(Error::OddConductor(k));
        }
        Ok(k / 2)
    } else {
        Ok(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_pair_validation() {
        assert!(FieldPair::unramified(6).is_err());
        assert!(FieldPair::unramified(1).is_err());
        assert!(FieldPair::new(9, false, Some(1)).is_err());
        assert_eq!(FieldPair::new(3, true, None).unwrap().ext_conductor(), Some(1));
        let fp = FieldPair::unramified(4).unwrap();
        assert_eq!(fp.q_e(), 16);
        assert_eq!(FieldPair::ramified(5, 1).unwrap().q_e(), 5);
    }

    #[test]
    fn trace_conductor_examples() {
        assert_eq!(trace_conductor(&FieldPair::unramified(3).unwrap(), 0), 0);
        assert_eq!(trace_conductor(&FieldPair::ramified(3, 1).unwrap(), 0), 1);
        assert_eq!(trace_conductor(&FieldPair::ramified(2, 2).unwrap(), 3), 8);
    }

    #[test]
    fn zero_shift_examples() {
        let un = FieldPair::unramified(3).unwrap();
        let ra = FieldPair::ramified(3, 1).unwrap();
        let psi = |k| AddCharData { conductor: k, trivial_on_f: true };
        assert_eq!(conductor_zero_shift(&un, &psi(3)), Ok(3));
        assert_eq!(conductor_zero_shift(&ra, &psi(4)), Ok(2));
        assert_eq!(conductor_zero_shift(&ra, &psi(5)), Err(Error::OddConductor(5)));
        assert!(AddCharData::new(&ra, 5, true).is_err());
    }

    #[test]
    fn trace_zero_kinds() {
        assert_eq!(trace_zero_element_kind(&FieldPair::unramified(3).unwrap()), TraceZeroKind::Any);
        assert_eq!(trace_zero_element_kind(&FieldPair::ramified(3, 1).unwrap()), TraceZeroKind::Uniformizer);
        assert_eq!(trace_zero_element_kind(&FieldPair::ramified(2, 2).unwrap()), TraceZeroKind::Unit);
    }

    #[test]
    fn half_powers_of_q_e() {
        let un = FieldPair::unramified(3).unwrap();
        assert_eq!(un.q_e_half_power(1), AlgNum::from_int(3, 3));
        let ra = FieldPair::ramified(3, 1).unwrap();
        assert_eq!(ra.q_e_half_power(1), AlgNum::sqrt_q(3));
    }
}
