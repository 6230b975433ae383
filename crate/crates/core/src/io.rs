//! JSON file formats.
//!
//! * polygon: `[[re, im], ...]`, vertices in order, at least three;
//! * curve: `{"n": [re, im], ...}`, the coefficient `a_n` of `e^{int}`;
//! * support function: the same map, with `a_{-n} = conj(a_n)` enforced.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::chernoff::SupportFunction;
use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::smooth::FourierCurve;

fn pair(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

fn unpair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

fn format_err(what: &str, e: serde_json::Error) -> Error {
    Error::Format(format!("{what}: {e}"))
}

pub fn parse_polygon(text: &str) -> Result<Polygon> {
    let raw: Vec<[f64; 2]> = serde_json::from_str(text).map_err(|e| format_err("polygon", e))?;
    Polygon::new(raw.into_iter().map(pair).collect())
}

pub fn polygon_to_json(p: &Polygon) -> String {
    let raw: Vec<[f64; 2]> = p.vertices().iter().copied().map(unpair).collect();
    serde_json::to_string(&raw).expect("plain arrays serialize")
}

fn parse_coefficient_map(text: &str, what: &str) -> Result<BTreeMap<i64, Complex64>> {
    let raw: BTreeMap<String, [f64; 2]> = serde_json::from_str(text).map_err(|e| format_err(what, e))?;
    let mut out = BTreeMap::new();
    for (key, value) in raw {
        let n: i64 = key
            .trim()
            .parse()
            .map_err(|_| Error::Format(format!("{what}: key {key:?} is not an integer")))?;
        if out.insert(n, pair(value)).is_some() {
            return Err(Error::Format(format!("{what}: mode {n} appears twice")));
        }
    }
    Ok(out)
}

fn coefficient_map_to_json(map: &BTreeMap<i64, Complex64>) -> String {
    let raw: BTreeMap<i64, [f64; 2]> = map.iter().map(|(&n, &a)| (n, unpair(a))).collect();
    // Keys sorted numerically rather than as strings.
    let body: Vec<String> = raw
        .iter()
        .map(|(n, v)| format!("{}:{}", serde_json::to_string(&n.to_string()).unwrap(), serde_json::to_string(v).unwrap()))
        .collect();
    format!("{{{}}}", body.join(","))
}

pub fn parse_curve(text: &str) -> Result<FourierCurve> {
    FourierCurve::new(parse_coefficient_map(text, "curve")?)
}

pub fn curve_to_json(c: &FourierCurve) -> String {
    coefficient_map_to_json(c.coeffs())
}

pub fn parse_support(text: &str) -> Result<SupportFunction> {
    SupportFunction::new(parse_coefficient_map(text, "support function")?)
}

pub fn support_to_json(h: &SupportFunction) -> String {
    coefficient_map_to_json(h.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_round_trip() {
        let p = parse_polygon("[[1,0],[0,1],[-1,0],[0,-1]]").unwrap();
        assert_eq!(p.k(), 4);
        assert_eq!(parse_polygon(&polygon_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn polygon_errors() {
        assert!(matches!(parse_polygon("[[1,0],[0,1]]"), Err(Error::TooFewVertices(2))));
        assert!(matches!(parse_polygon("[[1,0],[0,1],[2]]"), Err(Error::Format(_))));
        assert!(matches!(parse_polygon("{}"), Err(Error::Format(_))));
    }

    #[test]
    fn curve_round_trip() {
        let c = parse_curve(r#"{"1": [1.0, 0.0], "-2": [0.25, -0.5], "10": [0.1, 0.0]}"#).unwrap();
        assert_eq!(c.coeff(-2), Complex64::new(0.25, -0.5));
        let text = curve_to_json(&c);
        assert!(text.starts_with(r#"{"-2""#), "{text}");
        assert_eq!(parse_curve(&text).unwrap(), c);
        assert!(parse_curve(r#"{"x": [1, 0]}"#).is_err());
    }

    #[test]
    fn support_reality() {
        assert!(parse_support(r#"{"0": [2, 0], "1": [0.5, 0.1], "-1": [0.5, -0.1]}"#).is_ok());
        assert!(parse_support(r#"{"0": [2, 0], "1": [0.5, 0.1], "-1": [0.5, 0.1]}"#).is_err());
        let h = SupportFunction::constant(2.0);
        assert_eq!(parse_support(&support_to_json(&h)).unwrap(), h);
    }
}
