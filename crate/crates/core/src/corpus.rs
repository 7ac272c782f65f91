//! Seeded random test data: Satake values, modules, and generic
//! representations with prescribed duality properties.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::GaussRat;
use crate::local_data::FieldPair;
use crate::segments::{is_generic, GenericRep, MultChar, Segment, UnramifiedModule};

const Q_CHOICES: [u64; 6] = [2, 3, 4, 5, 7, 9];

pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Corpus { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn field_of(&mut self, ramified: bool) -> FieldPair {
        let q = *Q_CHOICES.choose(&mut self.rng).unwrap();
        if ramified {
            // wild ramification only in residue characteristic 2
            let f = if q.is_multiple_of(2) { self.rng.gen_range(2..=3) } else { 1 };
            FieldPair::ramified(q, f).unwrap()
        } else {
            FieldPair::unramified(q).unwrap()
        }
    }

    pub fn field(&mut self) -> FieldPair {
        let ramified = self.rng.gen_bool(0.5);
        self.field_of(ramified)
    }

    fn small_rational(&mut self) -> (i64, i64) {
        let p = self.rng.gen_range(1..=4) * if self.rng.gen_bool(0.5) { 1 } else { -1 };
        (p, self.rng.gen_range(1..=4))
    }

    /// A nonzero Gaussian rational with small height.
    pub fn gauss(&mut self) -> GaussRat {
        let (p, q) = self.small_rational();
        let re = GaussRat::frac(p, q);
        if self.rng.gen_bool(0.3) {
            let (a, b) = self.small_rational();
            &re + &(&GaussRat::i() * &GaussRat::frac(a, b))
        } else {
            re
        }
    }

    /// `(a² - b² + 2abi)/(a² + b²)`, on the unit circle.
    pub fn unitary(&mut self) -> GaussRat {
        let a = self.rng.gen_range(1..=6i64);
        let b = self.rng.gen_range(0..=6i64);
        let n = a * a + b * b;
        GaussRat::new(GaussRat::frac(a * a - b * b, n).re, GaussRat::frac(2 * a * b, n).re)
    }

    pub fn module(&mut self, fp: FieldPair, max_rank: usize) -> UnramifiedModule {
        let r = self.rng.gen_range(0..=max_rank);
        let vals = (0..r).map(|_| self.gauss()).collect();
        UnramifiedModule::new(fp, vals).unwrap()
    }

    /// Rank exactly `rank` with `ω(ϖ_F) = ∏ α_i^e = 1`.
    pub fn module_trivial_central(&mut self, fp: FieldPair, rank: usize) -> UnramifiedModule {
        let mut vals: Vec<GaussRat> = (1..rank).map(|_| self.gauss()).collect();
        let prod = vals.iter().fold(GaussRat::one(), |a, x| &a * x);
        let last = prod.inv().unwrap();
        // ∏α² = 1 leaves a sign free over ramified E/F
        let last = if fp.is_ramified() && self.rng.gen_bool(0.5) { -last } else { last };
        if rank > 0 {
            vals.push(last);
        }
        UnramifiedModule::new(fp, vals).unwrap()
    }

    /// Satake values that sometimes sit at powers of `q_F`, to exercise
    /// linkage and pole conditions.
    fn spiky(&mut self, fp: &FieldPair) -> GaussRat {
        if self.rng.gen_bool(0.4) {
            let j = self.rng.gen_range(-2..=2);
            let s = if self.rng.gen_bool(0.5) { 1 } else { -1 };
            &GaussRat::from_int(s) * &GaussRat::from_int(fp.q_f() as i64).pow(j)
        } else {
            self.gauss()
        }
    }

    fn ramified_char(&mut self) -> MultChar {
        let label = ["chi", "eta"].choose(&mut self.rng).unwrap().to_string();
        let cond = if label == "chi" { 1 } else { 2 };
        let v = self.gauss();
        MultChar::new(label.clone(), cond, v.clone(), label, v).unwrap()
    }

    /// A generic representation with at least one ramified segment; supports
    /// mix unramified and ramified characters.
    pub fn ramified_rep(&mut self, fp: FieldPair, max_n: usize) -> GenericRep {
        loop {
            let mut segs = Vec::new();
            let mut n = 0;
            let target = self.rng.gen_range(1..=max_n);
            while n < target {
                let k = self.rng.gen_range(1..=(target - n).min(3)) as u32;
                let rho = if self.rng.gen_bool(0.35) {
                    self.ramified_char()
                } else {
                    MultChar::unramified(self.spiky(&fp)).unwrap()
                };
                segs.push(Segment::new(rho, k).unwrap());
                n += k as usize;
            }
            if segs.iter().all(Segment::is_unramified) {
                continue;
            }
            if let Ok(rep) = GenericRep::new(fp, segs) {
                return rep;
            }
        }
    }

    /// A segment equal to its own conjugate dual, when one exists with
    /// rational value at `ϖ_E`.
    fn self_paired(&mut self, fp: &FieldPair) -> Option<Segment> {
        let k = self.rng.gen_range(1..=3u32);
        // α² = q_E^{-(k-1)}
        let exp = if fp.is_ramified() {
            if k % 2 == 0 {
                return None;
            }
            (k as i64 - 1) / 2
        } else {
            k as i64 - 1
        };
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let alpha = &GaussRat::from_int(sign) * &GaussRat::from_int(fp.q_f() as i64).pow(-exp);
        Some(Segment::new(MultChar::unramified(alpha).unwrap(), k).unwrap())
    }

    /// `ratio` is `ρ^σ(ϖ_E)/ρ(ϖ_E)`, which the unit part of `ρ` fixes.
    fn sigma_pair(&mut self, fp: &FieldPair, ramified_rho: Option<&GaussRat>) -> [Segment; 2] {
        let k = self.rng.gen_range(1..=2u32);
        let rho = if let Some(ratio) = ramified_rho {
            let a = self.gauss();
            let b = &a * ratio;
            MultChar::new("chi".into(), 1, a, "chi_s".into(), b).unwrap()
        } else {
            MultChar::unramified(self.spiky(fp)).unwrap()
        };
        let d = Segment::new(rho, k).unwrap();
        let dual = d.conjugate_dual(fp);
        [d, dual]
    }

    /// A generic `π` with `π̃ ≅ π^σ`, built from σ-paired and self-paired
    /// segments.
    pub fn conjugate_selfdual_rep(&mut self, fp: FieldPair, max_blocks: usize, ramified_rho: bool) -> GenericRep {
        loop {
            let blocks = self.rng.gen_range(1..=max_blocks);
            let ratio = self.gauss();
            let mut segs = Vec::new();
            for _ in 0..blocks {
                if self.rng.gen_bool(0.4) {
                    if let Some(s) = self.self_paired(&fp) {
                        segs.push(s);
                        continue;
                    }
                }
                let use_ram = ramified_rho && self.rng.gen_bool(0.5);
                segs.extend(self.sigma_pair(&fp, use_ram.then_some(&ratio)));
            }
            if !is_generic(&fp, &segs) {
                continue;
            }
            let rep = GenericRep::new(fp, segs).unwrap();
            debug_assert!(rep.is_conjugate_selfdual());
            return rep;
        }
    }

    /// An unramified generic `π` with `π̃ ≅ π^σ`: pairs `(α, 1/α)` and
    /// self-dual values `±1`.
    pub fn conjugate_selfdual_module(&mut self, fp: FieldPair, max_rank: usize) -> GenericRep {
        loop {
            let mut vals = Vec::new();
            let r = self.rng.gen_range(1..=max_rank);
            while vals.len() < r {
                if r - vals.len() >= 2 && self.rng.gen_bool(0.7) {
                    let a = self.spiky(&fp);
                    vals.push(a.inv().unwrap());
                    vals.push(a);
                } else {
                    vals.push(GaussRat::from_int(if self.rng.gen_bool(0.5) { 1 } else { -1 }));
                }
            }
            if let Ok(rep) = GenericRep::unramified(fp, &vals) {
                return rep;
            }
        }
    }
}
