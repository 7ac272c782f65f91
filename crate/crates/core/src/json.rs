//! JSON descriptors and report serialization.
//!
//! Rationals are strings `"p/q"`, Gaussian rationals are `[re, im]` pairs,
//! [`AlgNum`] is `{"a": [re, im], "b": [re, im]}` and [`RatFunc`] is
//! `{"num": [...], "den": [...]}` in ascending degree.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{rat_to_string, AlgNum, GaussRat, Poly, RatFunc, Series};
use crate::local_data::FieldPair;
use crate::period::PeriodReport;
use crate::segments::{is_generic, standard_order, GenericRep, MultChar, Segment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FieldDesc {
    #[serde(rename = "qF")]
    pub q_f: u64,
    pub ramified: bool,
    #[serde(default)]
    pub ext_conductor: Option<u32>,
}

/// `sigmaUnitLabel` and `sigmaAtUnif` default to `unitLabel` and `atUnif`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RhoDesc {
    pub unit_label: String,
    pub unit_conductor: u32,
    pub at_unif: [String; 2],
    #[serde(default)]
    pub sigma_unit_label: Option<String>,
    #[serde(default)]
    pub sigma_at_unif: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentDesc {
    pub k: u32,
    pub rho: RhoDesc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDesc {
    pub field: FieldDesc,
    pub segments: Vec<SegmentDesc>,
}

fn gauss_from(pair: &[String; 2], path: &str) -> Result<GaussRat> {
    GaussRat::from_strings(&pair[0], &pair[1]).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn gauss_pair(g: &GaussRat) -> [String; 2] {
    g.to_strings()
}

impl FieldDesc {
    pub fn to_field(&self) -> Result<FieldPair> {
        FieldPair::new(self.q_f, self.ramified, self.ext_conductor)
    }

    pub fn from_field(fp: &FieldPair) -> Self {
        FieldDesc { q_f: fp.q_f(), ramified: fp.is_ramified(), ext_conductor: fp.ext_conductor() }
    }
}

impl RhoDesc {
    pub fn to_char(&self, path: &str) -> Result<MultChar> {
        let at = gauss_from(&self.at_unif, &format!("{path}.atUnif"))?;
        let sigma_at = match &self.sigma_at_unif {
            Some(p) => gauss_from(p, &format!("{path}.sigmaAtUnif"))?,
            None => at.clone(),
        };
        let sigma_label = self.sigma_unit_label.clone().unwrap_or_else(|| self.unit_label.clone());
        MultChar::new(self.unit_label.clone(), self.unit_conductor, at, sigma_label, sigma_at)
            .map_err(|e| match e {
                Error::InvalidCharacter(m) => Error::InvalidCharacter(format!("{path}: {m}")),
                other => other,
            })
    }

    pub fn from_char(c: &MultChar) -> Self {
        RhoDesc {
            unit_label: c.unit_label.clone(),
            unit_conductor: c.unit_conductor,
            at_unif: gauss_pair(&c.at_unif),
            sigma_unit_label: Some(c.sigma_unit_label.clone()),
            sigma_at_unif: Some(gauss_pair(&c.sigma_at_unif)),
        }
    }
}

impl RepDesc {
    /// Field pair and segments, before the genericity check.
    pub fn parts(&self) -> Result<(FieldPair, Vec<Segment>)> {
        let fp = self.field.to_field()?;
        let segs = self
            .segments
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let path = format!("segments[{i}]");
                if s.k == 0 {
                    return Err(Error::Parse(format!("{path}.k: segment length must be positive")));
                }
                Segment::new(s.rho.to_char(&format!("{path}.rho"))?, s.k)
            })
            .collect::<Result<Vec<_>>>()?;
        if segs.is_empty() {
            return Err(Error::Empty);
        }
        Ok((fp, segs))
    }

    pub fn to_rep(&self) -> Result<GenericRep> {
        let (fp, segs) = self.parts()?;
        GenericRep::new(fp, segs)
    }

    pub fn from_rep(rep: &GenericRep) -> Self {
        RepDesc {
            field: FieldDesc::from_field(rep.field()),
            segments: rep
                .segments()
                .iter()
                .map(|s| SegmentDesc { k: s.k, rho: RhoDesc::from_char(&s.rho) })
                .collect(),
        }
    }
}

/// Parses a descriptor; errors name the offending field path.
pub fn parse_rep_desc(text: &str) -> Result<RepDesc> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse(format!("{path}: {}", e.into_inner()))
    })
}

pub fn parse_rep(text: &str) -> Result<GenericRep> {
    parse_rep_desc(text)?.to_rep()
}

pub fn alg_to_json(x: &AlgNum) -> Value {
    json!({ "a": gauss_pair(&x.a), "b": gauss_pair(&x.b) })
}

pub fn alg_from_json(v: &Value, q: u64) -> Result<AlgNum> {
    let pair = |key: &str| -> Result<GaussRat> {
        let p: [String; 2] = serde_json::from_value(v.get(key).cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("{key}: {e}")))?;
        gauss_from(&p, key)
    };
    Ok(AlgNum::new(pair("a")?, pair("b")?, q))
}

/// A rational value as `"p/q"`, anything else as an [`AlgNum`] object.
pub fn value_to_json(x: &AlgNum) -> Value {
    match x.as_rational() {
        Some(r) => Value::String(rat_to_string(r)),
        None => alg_to_json(x),
    }
}

fn poly_json(p: &Poly) -> Value {
    let coeffs: Vec<AlgNum> = if p.is_zero() { vec![AlgNum::zero(p.q())] } else { p.coeffs().to_vec() };
    Value::Array(coeffs.iter().map(alg_to_json).collect())
}

pub fn ratfunc_to_json(f: &RatFunc) -> Value {
    json!({ "num": poly_json(f.numerator()), "den": poly_json(f.denominator()) })
}

pub fn ratfunc_from_json(v: &Value, q: u64) -> Result<RatFunc> {
    let poly = |key: &str| -> Result<Poly> {
        let arr = v
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("{key}: expected an array")))?;
        Ok(Poly::new(q, arr.iter().map(|c| alg_from_json(c, q)).collect::<Result<_>>()?))
    };
    RatFunc::new(poly("num")?, poly("den")?)
}

pub fn series_to_json(s: &Series) -> Value {
    Value::Array(s.coeffs().iter().map(alg_to_json).collect())
}

pub fn report_to_json(r: &PeriodReport) -> Value {
    json!({
        "series": series_to_json(&r.series),
        "reconstructed": r.reconstructed.as_ref().map(ratfunc_to_json),
        "closedForm": ratfunc_to_json(&r.closed_form),
        "match": r.matched,
        "valueAt1": r.value_at_1.as_ref().map(value_to_json).unwrap_or_else(|| json!("pole")),
    })
}

/// Segment predicates of a descriptor. Non-generic input reports only
/// `generic: false`.
pub fn segments_report(fp: &FieldPair, segs: &[Segment]) -> Result<Value> {
    if !is_generic(fp, segs) {
        return Ok(json!({ "generic": false }));
    }
    let rep = GenericRep::new(*fp, segs.to_vec())?;
    let order: Vec<Value> = standard_order(fp, segs)?
        .iter()
        .map(|s| json!({ "k": s.k, "rho": RhoDesc::from_char(&s.rho) }))
        .collect();
    let pi_u: Vec<Value> = rep.pi_u().satake().iter().map(gauss_json).collect();
    Ok(json!({
        "generic": true,
        "standardOrder": order,
        "piU": pi_u,
        "conductor": rep.conductor(),
        "conjugateSelfDual": rep.is_conjugate_selfdual(),
        "asaiHolomorphicWitness": rep.asai_holomorphic_witness(),
    }))
}

/// A real value as `"p/q"`, otherwise `[re, im]`.
pub fn gauss_json(g: &GaussRat) -> Value {
    if g.is_real() {
        Value::String(rat_to_string(&g.re))
    } else {
        json!(gauss_pair(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const STEINBERG: &str = r#"{"field":{"qF":2,"ramified":false,"extConductor":null},
        "segments":[{"k":2,"rho":{"unitLabel":"triv","unitConductor":0,"atUnif":["1","0"],
        "sigmaUnitLabel":"triv","sigmaAtUnif":["1","0"]}}]}"#;

    #[test]
    fn parses_steinberg() {
        let rep = parse_rep(STEINBERG).unwrap();
        assert_eq!(rep.n(), 2);
        let v = segments_report(rep.field(), rep.segments()).unwrap();
        assert_eq!(v["piU"], json!(["1/1"]));
        assert_eq!(v["conductor"], json!(1));
        assert_eq!(v["generic"], json!(true));
    }

    #[test]
    fn descriptor_round_trip() {
        let rep = parse_rep(STEINBERG).unwrap();
        let text = serde_json::to_string(&RepDesc::from_rep(&rep)).unwrap();
        assert_eq!(parse_rep_desc(&text).unwrap(), RepDesc::from_rep(&rep));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad = STEINBERG.replace("\"qF\":2", "\"qF\":\"two\"");
        let err = parse_rep(&bad).unwrap_err().to_string();
        assert!(err.contains("field.qF"), "{err}");
        let bad = STEINBERG.replace("[\"1\",\"0\"],\n        \"sigmaUnitLabel\"", "[\"x\",\"0\"],\n        \"sigmaUnitLabel\"");
        let err = parse_rep(&bad).unwrap_err().to_string();
        assert!(err.contains("segments[0].rho.atUnif"), "{err}");
        let empty = r#"{"field":{"qF":2,"ramified":false},"segments":[]}"#;
        assert_eq!(parse_rep(empty).unwrap_err(), Error::Empty);
    }

    #[test]
    fn values_serialize_as_fractions() {
        assert_eq!(value_to_json(&AlgNum::from_gauss(2, GaussRat::frac(20, 13))), json!("20/13"));
        assert_eq!(value_to_json(&AlgNum::sqrt_q(3)), json!({"a": ["0/1", "0/1"], "b": ["1/1", "0/1"]}));
    }

    #[test]
    fn ratfunc_round_trip() {
        let f = RatFunc::recip_of(Poly::one_minus(&GaussRat::frac(1, 3), 2, 5));
        assert_eq!(ratfunc_from_json(&ratfunc_to_json(&f), 5).unwrap(), f);
    }
}
