//! Worked examples through the public API.

use asai_core::json::{parse_rep, report_to_json, segments_report};
use asai_core::lfactor::{asai_factors, kable_factorization_check, lstar_at_1, rs_l, tate_l};
use asai_core::period::{essential_rs_check, flicker_series, verify_c_pi, verify_theorem1};
use asai_core::whittaker::essential_value;
use asai_core::{AlgNum, Error, FieldPair, GaussRat, GenericRep, MultChar, Poly, RatFunc, Segment, UnramifiedModule};
use serde_json::json;

fn g(a: i64, b: i64) -> GaussRat {
    GaussRat::frac(a, b)
}

fn steinberg(q: u64, alpha: GaussRat) -> GenericRep {
    let fp = FieldPair::unramified(q).unwrap();
    GenericRep::new(fp, vec![Segment::new(MultChar::unramified(alpha).unwrap(), 2).unwrap()]).unwrap()
}

#[test]
fn unitary_example_end_to_end() {
    let fp = FieldPair::unramified(2).unwrap();
    let a = GaussRat::new(g(3, 5).re, g(4, 5).re);
    let rep = GenericRep::unramified(fp, &[a.clone(), a.conj()]).unwrap();
    let report = verify_theorem1(&rep, 40).unwrap();
    assert!(report.matched);
    let v = report_to_json(&report);
    assert_eq!(v["valueAt1"], json!("20/13"));
    assert_eq!(v["match"], json!(true));
    assert_eq!(v["series"].as_array().unwrap().len(), 41);
}

#[test]
fn steinberg_examples() {
    let st = steinberg(2, GaussRat::one());
    assert_eq!(asai_factors(&st.pi_u()).to_string(), "1/[(1 - t)]");
    assert_eq!(lstar_at_1(&st).unwrap(), AlgNum::from_int(2, 2));
    let r = verify_theorem1(&st, 40).unwrap();
    assert_eq!(report_to_json(&r)["valueAt1"], json!("2/1"));

    // the centred Steinberg is the conjugate-self-dual one
    let centred = steinberg(2, g(1, 2));
    assert_eq!(verify_c_pi(&centred), Ok(true));
    assert!(!st.is_conjugate_selfdual());
}

#[test]
fn essential_vector_depends_only_on_pi_u() {
    let fp = FieldPair::unramified(3).unwrap();
    let chi = MultChar::new("chi".into(), 2, g(5, 1), "chi".into(), g(5, 1)).unwrap();
    let rep = GenericRep::new(
        fp,
        vec![Segment::unramified_char(g(1, 2)).unwrap(), Segment::new(chi, 1).unwrap()],
    )
    .unwrap();
    // r = 1 inside GL_2: W(diag(ϖ^λ, 1)) = (α q_E^{-1/2})^λ
    for l in 0..5 {
        let expect = AlgNum::from_gauss(3, g(1, 6).pow(l));
        assert_eq!(essential_value(&rep, &[l]).unwrap(), expect);
    }
}

#[test]
fn flicker_is_geometric_for_gl1() {
    let fp = FieldPair::unramified(5).unwrap();
    let m = UnramifiedModule::new(fp, vec![g(-2, 3)]).unwrap();
    let s = flicker_series(&m, 10);
    assert_eq!(s, tate_l(&g(-2, 3), 1, 5).series_of(10).unwrap());
}

#[test]
fn kable_and_rs() {
    let fp = FieldPair::unramified(3).unwrap();
    let m = UnramifiedModule::new(fp, vec![g(3, 1), g(1, 3)]).unwrap();
    assert_eq!(kable_factorization_check(&m), Ok(true));
    let b = UnramifiedModule::new(fp, vec![g(2, 1)]).unwrap();
    let expect = RatFunc::recip_of(&Poly::one_minus(&g(6, 1), 1, 3) * &Poly::one_minus(&g(2, 3), 1, 3));
    assert_eq!(rs_l(&m, &b), expect);
    // (3, 1/3) is linked when q_E = 9
    assert!(GenericRep::unramified(fp, &[g(3, 1), g(1, 3)]).is_err());
    let fp = FieldPair::unramified(2).unwrap();
    let rep = GenericRep::unramified(fp, &[g(3, 1), g(1, 3)]).unwrap();
    let b = UnramifiedModule::new(fp, vec![g(2, 1)]).unwrap();
    assert_eq!(essential_rs_check(&rep, &b, 20), Ok(true));
}

#[test]
fn descriptor_driven_segments_report() {
    let linked = r#"{"field":{"qF":2,"ramified":false},"segments":[
        {"k":1,"rho":{"unitLabel":"triv","unitConductor":0,"atUnif":["1","0"]}},
        {"k":1,"rho":{"unitLabel":"triv","unitConductor":0,"atUnif":["1/4","0"]}}]}"#;
    assert_eq!(parse_rep(linked).unwrap_err(), Error::NotGeneric(0, 1));
    let desc = asai_core::json::parse_rep_desc(linked).unwrap();
    let (fp, segs) = desc.parts().unwrap();
    assert_eq!(segments_report(&fp, &segs).unwrap(), json!({"generic": false}));
}
