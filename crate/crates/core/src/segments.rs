//! Zelevinsky segments with cuspidal support in characters of `GL(1, E)`.
//!
//! A [`Segment`] `(ρ, k)` stands for the essentially square-integrable
//! representation `[ν^{1-k}ρ, …, ρ]`, where `ν = |·|_E`; it is recorded by its
//! top character `ρ` and length `k`. A generic representation is a multiset of
//! pairwise unlinked segments.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::GaussRat;
use crate::local_data::FieldPair;

/// Label reserved for the trivial character of `o_E^×`.
pub const TRIVIAL_LABEL: &str = "triv";

/// Designated label of the inverse unit character: `x ↔ x^-1`.
pub fn inverse_label(label: &str) -> String {
    if label == TRIVIAL_LABEL {
        label.to_string()
    } else if let Some(base) = label.strip_suffix("^-1") {
        base.to_string()
    } else {
        format!("{label}^-1")
    }
}

/// A character of `E^×`: its restriction to `o_E^×` (an opaque label plus
/// conductor), its value at `ϖ_E`, and the same data for its Galois conjugate.
#[derive(Clone, Debug)]
pub struct MultChar {
    pub unit_label: String,
    pub unit_conductor: u32,
    pub at_unif: GaussRat,
    pub sigma_unit_label: String,
    pub sigma_at_unif: GaussRat,
}

impl MultChar {
    /// The unramified character with `χ(ϖ_E) = alpha`.
    pub fn unramified(alpha: GaussRat) -> Result<Self> {
        Self::new(TRIVIAL_LABEL.into(), 0, alpha.clone(), TRIVIAL_LABEL.into(), alpha)
    }

    pub fn new(
        unit_label: String,
        unit_conductor: u32,
        at_unif: GaussRat,
        sigma_unit_label: String,
        sigma_at_unif: GaussRat,
    ) -> Result<Self> {
        let c = MultChar { unit_label, unit_conductor, at_unif, sigma_unit_label, sigma_at_unif };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidCharacter(m));
        if self.at_unif.is_zero() || self.sigma_at_unif.is_zero() {
            return bad("value at the uniformizer must be nonzero".into());
        }
        let triv = self.unit_label == TRIVIAL_LABEL;
        if triv != (self.unit_conductor == 0) {
            return bad(format!(
                "unit label {:?} inconsistent with unit conductor {}",
                self.unit_label, self.unit_conductor
            ));
        }
        if (self.sigma_unit_label == TRIVIAL_LABEL) != triv {
            return bad("sigma conjugate of an (un)ramified character must stay (un)ramified".into());
        }
        if triv && self.sigma_at_unif != self.at_unif {
            return bad("unramified characters are fixed by sigma".into());
        }
        Ok(())
    }

    pub fn is_unramified(&self) -> bool {
        self.unit_conductor == 0
    }

    /// `ρ^σ`. Swapping the two halves makes σ an involution by construction.
    pub fn sigma(&self) -> MultChar {
        MultChar {
            unit_label: self.sigma_unit_label.clone(),
            unit_conductor: self.unit_conductor,
            at_unif: self.sigma_at_unif.clone(),
            sigma_unit_label: self.unit_label.clone(),
            sigma_at_unif: self.at_unif.clone(),
        }
    }

    pub fn inverse(&self) -> MultChar {
        MultChar {
            unit_label: inverse_label(&self.unit_label),
            unit_conductor: self.unit_conductor,
            at_unif: self.at_unif.inv().expect("nonzero"),
            sigma_unit_label: inverse_label(&self.sigma_unit_label),
            sigma_at_unif: self.sigma_at_unif.inv().expect("nonzero"),
        }
    }

    /// `ν^l ρ`; `ν` is σ-invariant and takes `ϖ_E` to `q_E^{-1}`.
    pub fn twist_nu(&self, l: i64, q_e: u64) -> MultChar {
        let f = GaussRat::from_int(q_e as i64).pow(-l);
        MultChar {
            at_unif: &self.at_unif * &f,
            sigma_at_unif: &self.sigma_at_unif * &f,
            ..self.clone()
        }
    }
}

/// Characters are equal when unit parts and values at `ϖ_E` agree.
impl PartialEq for MultChar {
    fn eq(&self, o: &Self) -> bool {
        self.unit_label == o.unit_label && self.at_unif == o.at_unif
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unramified() {
            write!(f, "|{}|", self.at_unif)
        } else {
            write!(f, "{}[{}]", self.unit_label, self.at_unif)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub rho: MultChar,
    pub k: u32,
}

impl Segment {
    pub fn new(rho: MultChar, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidCharacter("segment length must be positive".into()));
        }
        Ok(Segment { rho, k })
    }

    /// The segment `[χ]` of a single unramified character.
    pub fn unramified_char(alpha: GaussRat) -> Result<Self> {
        Self::new(MultChar::unramified(alpha)?, 1)
    }

    pub fn is_unramified(&self) -> bool {
        self.k == 1 && self.rho.is_unramified()
    }

    /// `k - 1` for unramified `ρ`, `k·f(ρ)` otherwise.
    pub fn conductor(&self) -> u64 {
        if self.rho.is_unramified() {
            self.k as u64 - 1
        } else {
            self.k as u64 * self.rho.unit_conductor as u64
        }
    }

    /// `[ρ^{-1}, …, ν^{k-1}ρ^{-1}]`, whose top is `ν^{k-1}ρ^{-1}`.
    pub fn contragredient(&self, fp: &FieldPair) -> Segment {
        Segment { rho: self.rho.inverse().twist_nu(self.k as i64 - 1, fp.q_e()), k: self.k }
    }

    pub fn sigma(&self) -> Segment {
        Segment { rho: self.rho.sigma(), k: self.k }
    }

    /// `δ̃^σ`.
    pub fn conjugate_dual(&self, fp: &FieldPair) -> Segment {
        self.contragredient(fp).sigma()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, k={})", self.rho, self.k)
    }
}

/// `d1 ≺ d2`: `ρ₂ = ν^l ρ₁` for some `max(1, k₂-k₁+1) <= l <= k₂`.
pub fn precedes(fp: &FieldPair, d1: &Segment, d2: &Segment) -> bool {
    if d1.rho.unit_label != d2.rho.unit_label {
        return false;
    }
    let lo = 1.max(d2.k as i64 - d1.k as i64 + 1);
    let q_e = GaussRat::from_int(fp.q_e() as i64);
    (lo..=d2.k as i64).any(|l| d2.rho.at_unif == &d1.rho.at_unif * &q_e.pow(-l))
}

pub fn linked(fp: &FieldPair, d1: &Segment, d2: &Segment) -> bool {
    precedes(fp, d1, d2) || precedes(fp, d2, d1)
}

fn first_linked_pair(fp: &FieldPair, segs: &[Segment]) -> Option<(usize, usize)> {
    (0..segs.len())
        .flat_map(|i| (i + 1..segs.len()).map(move |j| (i, j)))
        .find(|&(i, j)| linked(fp, &segs[i], &segs[j]))
}

pub fn is_generic(fp: &FieldPair, segs: &[Segment]) -> bool {
    first_linked_pair(fp, segs).is_none()
}

/// Reorders `segs` so that no segment precedes a later one. At each step the
/// earliest remaining segment (in input order) that precedes no other
/// remaining segment is emitted, so unlinked input keeps its order.
pub fn standard_order(fp: &FieldPair, segs: &[Segment]) -> Result<Vec<Segment>> {
    let mut remaining: Vec<&Segment> = segs.iter().collect();
    let mut out = Vec::with_capacity(segs.len());
    while !remaining.is_empty() {
        let pos = (0..remaining.len())
            .find(|&i| {
                remaining
                    .iter()
                    .enumerate()
                    .all(|(j, other)| i == j || !precedes(fp, remaining[i], other))
            })
            .ok_or_else(|| Error::Internal("cycle in the precedes relation".into()))?;
        out.push(remaining.remove(pos).clone());
    }
    Ok(out)
}

fn same_multiset(a: &[Segment], b: &[Segment]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| match (0..b.len()).find(|&j| !used[j] && b[j] == *x) {
        Some(j) => {
            used[j] = true;
            true
        }
        None => false,
    })
}

/// Characters sharing a unit label must agree on everything the unit part
/// determines: conductor, σ-label, and the ratio `ρ^σ(ϖ_E)/ρ(ϖ_E)`.
fn check_character_table(segs: &[Segment]) -> Result<()> {
    for (i, a) in segs.iter().enumerate() {
        for b in &segs[i + 1..] {
            let (x, y) = (&a.rho, &b.rho);
            if x.unit_label != y.unit_label {
                continue;
            }
            let consistent = x.unit_conductor == y.unit_conductor
                && x.sigma_unit_label == y.sigma_unit_label
                && &x.sigma_at_unif * &y.at_unif == &y.sigma_at_unif * &x.at_unif;
            if !consistent {
                return Err(Error::InvalidCharacter(format!(
                    "inconsistent sigma data for unit label {:?}",
                    x.unit_label
                )));
            }
        }
    }
    Ok(())
}

/// An irreducible generic representation of `GL_n(E)`.
#[derive(Clone, Debug)]
pub struct GenericRep {
    fp: FieldPair,
    segments: Vec<Segment>,
}

impl GenericRep {
    pub fn new(fp: FieldPair, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::Empty);
        }
        check_character_table(&segments)?;
        if let Some((i, j)) = first_linked_pair(&fp, &segments) {
            return Err(Error::NotGeneric(i, j));
        }
        Ok(GenericRep { fp, segments })
    }

    /// The unramified generic representation with the given Satake values.
    pub fn unramified(fp: FieldPair, satake: &[GaussRat]) -> Result<Self> {
        let segs = satake.iter().cloned().map(Segment::unramified_char).collect::<Result<_>>()?;
        Self::new(fp, segs)
    }

    pub fn field(&self) -> &FieldPair {
        &self.fp
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn n(&self) -> usize {
        self.segments.iter().map(|s| s.k as usize).sum()
    }

    /// Some `k > 1` or some ramified `ρ`.
    pub fn is_ramified(&self) -> bool {
        !self.segments.iter().all(Segment::is_unramified)
    }

    fn map_segments(&self, f: impl Fn(&Segment) -> Segment) -> GenericRep {
        GenericRep { fp: self.fp, segments: self.segments.iter().map(f).collect() }
    }

    pub fn contragredient(&self) -> GenericRep {
        self.map_segments(|s| s.contragredient(&self.fp))
    }

    pub fn sigma_twist(&self) -> GenericRep {
        self.map_segments(Segment::sigma)
    }

    /// `π̃ ≅ π^σ`, as an equality of segment multisets.
    pub fn is_conjugate_selfdual(&self) -> bool {
        let dual: Vec<Segment> = self.segments.iter().map(|s| s.conjugate_dual(&self.fp)).collect();
        same_multiset(&self.segments, &dual)
    }

    /// The unramified standard module on the unramified characters among the
    /// tops `ρ_i`. For unramified `π` this is `π` itself.
    pub fn pi_u(&self) -> UnramifiedModule {
        let satake = self
            .segments
            .iter()
            .filter(|s| s.rho.is_unramified())
            .map(|s| s.rho.at_unif.clone())
            .collect();
        UnramifiedModule::new(self.fp, satake).expect("values at the uniformizer are nonzero")
    }

    pub fn conductor(&self) -> u64 {
        self.segments.iter().map(Segment::conductor).sum()
    }

    /// `ε(1/2, π⊗μ, ψ) / ε(1/2, π, ψ) = μ(ϖ_E)^{f(π)}` for unramified `μ`, `n(ψ) = 0`.
    pub fn epsilon_twist_sign(&self, mu_at_unif: &GaussRat) -> GaussRat {
        mu_at_unif.pow(self.conductor() as i64)
    }

    /// No `δ_i ≺ δ̃_j^σ` for any `i, j` (including `i = j`). Such a pair is
    /// what a pole at `s = 1` of `L(s, δ_i, As)` or of `L(s, δ_i × δ_j^σ)`
    /// would require.
    pub fn asai_holomorphic_witness(&self) -> bool {
        self.segments.iter().all(|di| {
            self.segments.iter().all(|dj| !precedes(&self.fp, di, &dj.conjugate_dual(&self.fp)))
        })
    }

    pub fn standard_order(&self) -> Vec<Segment> {
        standard_order(&self.fp, &self.segments).expect("generic segments admit a standard order")
    }
}

/// An unramified standard module `χ_1 × … × χ_r`, by its Satake values
/// `α_i = χ_i(ϖ_E)`, kept sorted by `|α_i|²` ascending (stable on ties).
#[derive(Clone, Debug, PartialEq)]
pub struct UnramifiedModule {
    fp: FieldPair,
    satake: Vec<GaussRat>,
}

impl UnramifiedModule {
    pub fn new(fp: FieldPair, mut satake: Vec<GaussRat>) -> Result<Self> {
        if satake.iter().any(GaussRat::is_zero) {
            return Err(Error::InvalidCharacter("Satake values must be nonzero".into()));
        }
        satake.sort_by_key(|a| a.norm_sq());
        Ok(UnramifiedModule { fp, satake })
    }

    pub fn field(&self) -> &FieldPair {
        &self.fp
    }

    pub fn satake(&self) -> &[GaussRat] {
        &self.satake
    }

    pub fn rank(&self) -> usize {
        self.satake.len()
    }

    /// Central character at `ϖ_E`: `∏ α_i`.
    pub fn central_at_unif(&self) -> GaussRat {
        self.satake.iter().fold(GaussRat::one(), |acc, a| &acc * a)
    }

    /// Central character at `ϖ_F`: `∏ α_i` (unramified `E/F`) or `∏ α_i²`.
    pub fn central_at_f_unif(&self) -> GaussRat {
        self.central_at_unif().pow(self.fp.ram_index())
    }

    pub fn map_values(&self, f: impl Fn(&GaussRat) -> GaussRat) -> UnramifiedModule {
        UnramifiedModule::new(self.fp, self.satake.iter().map(f).collect()).expect("nonzero")
    }

    /// Same multiset of Satake values (order-insensitive).
    pub fn same_values(&self, o: &UnramifiedModule) -> bool {
        let mut used = vec![false; o.satake.len()];
        self.satake.len() == o.satake.len()
            && self.satake.iter().all(|x| match (0..o.satake.len()).find(|&j| !used[j] && o.satake[j] == *x) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            })
    }
}
