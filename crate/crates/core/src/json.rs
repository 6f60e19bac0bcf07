//! Canonical JSON forms for the exact types.
//!
//! Rationals serialize as `"p/q"` strings (plain `"p"` for integers);
//! quadratic numbers as `{"a": "p/q", "b": "p/q", "d": n}` when irrational
//! and as the rational string otherwise; divisor classes as objects keyed by
//! generator name; polynomials as degree-keyed coefficient maps. Object keys
//! are emitted in sorted order, so identical inputs produce identical bytes.

use serde_json::{json, Map, Value};

use crate::chern::ProjectedChern;
use crate::geometry::{CohVector, DivisorClass, ThreefoldModel};
use crate::poly::Polynomial;
use crate::scalar::{format_rational, parse_rational, QuadraticNumber, Rational};
use crate::{Error, Result};

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            let text = n.to_string();
            parse_rational(&text)
        }
        _ => Err(Error::ParseScalar(v.to_string())),
    }
}

pub fn quad_to_json(x: &QuadraticNumber) -> Value {
    if let Some(r) = x.as_rational() {
        rational_to_json(r)
    } else {
        json!({
            "a": format_rational(x.rational_part()),
            "b": format_rational(x.radical_coefficient()),
            "d": x.radicand(),
        })
    }
}

pub fn quad_from_json(v: &Value) -> Result<QuadraticNumber> {
    match v {
        Value::Object(map) => {
            let get = |k: &str| map.get(k).ok_or_else(|| Error::ParseScalar(format!("missing {k}")));
            let a = rational_from_json(get("a")?)?;
            let b = rational_from_json(get("b")?)?;
            let d = get("d")?
                .as_u64()
                .ok_or_else(|| Error::ParseScalar("d must be a non-negative integer".into()))?;
            Ok(QuadraticNumber::new(a, b, d))
        }
        _ => rational_from_json(v).map(QuadraticNumber::from_rational),
    }
}

pub fn divisor_to_json(model: &ThreefoldModel, d: &DivisorClass) -> Value {
    let mut map = Map::new();
    for (name, c) in model.generator_names().iter().zip(&d.coeffs) {
        map.insert((*name).to_string(), rational_to_json(c));
    }
    Value::Object(map)
}

pub fn divisor_from_json(model: &ThreefoldModel, v: &Value) -> Result<DivisorClass> {
    let Value::Object(map) = v else {
        return Err(Error::ParseScalar("divisor must be an object".into()));
    };
    let mut coeffs = vec![Rational::from_integer(0.into()); model.rank()];
    for (key, val) in map {
        let idx = model
            .generator_names()
            .iter()
            .position(|n| n == key)
            .ok_or_else(|| Error::ParseScalar(format!("unknown generator {key}")))?;
        coeffs[idx] = rational_from_json(val)?;
    }
    Ok(DivisorClass::new(coeffs))
}

pub fn cohvector_to_json(model: &ThreefoldModel, v: &CohVector) -> Value {
    let mut ch2 = Map::new();
    for (name, val) in model.generator_names().iter().zip(&v.ch2) {
        ch2.insert((*name).to_string(), rational_to_json(val));
    }
    json!({
        "ch0": rational_to_json(&v.ch0),
        "ch1": divisor_to_json(model, &v.ch1),
        "ch2": Value::Object(ch2),
        "ch3": rational_to_json(&v.ch3),
    })
}

pub fn projected_to_json(p: &ProjectedChern) -> Value {
    Value::Array(vec![
        rational_to_json(&p.e0),
        quad_to_json(&p.e1),
        quad_to_json(&p.e2),
        quad_to_json(&p.e3),
    ])
}

pub fn projected_from_json(v: &Value) -> Result<ProjectedChern> {
    let Value::Array(items) = v else {
        return Err(Error::ParseScalar("projected character must be a 4-array".into()));
    };
    if items.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: items.len() });
    }
    let e0 = rational_from_json(&items[0])?;
    ProjectedChern::new(
        e0,
        quad_from_json(&items[1])?,
        quad_from_json(&items[2])?,
        quad_from_json(&items[3])?,
    )
}

pub fn polynomial_to_json(p: &Polynomial) -> Value {
    let mut map = Map::new();
    for (deg, coeff) in p.terms() {
        map.insert(deg.to_string(), rational_to_json(coeff));
    }
    Value::Object(map)
}

pub fn polynomial_from_json(v: &Value) -> Result<Polynomial> {
    let Value::Object(map) = v else {
        return Err(Error::ParseScalar("polynomial must be a degree-keyed object".into()));
    };
    let mut pairs = Vec::new();
    for (k, val) in map {
        let deg: u32 = k.parse().map_err(|_| Error::ParseScalar(format!("bad degree {k}")))?;
        pairs.push((deg, rational_from_json(val)?));
    }
    Ok(Polynomial::from_coeffs(pairs))
}

/// Parses a projected character from the CLI grammar: four comma-separated
/// exact scalars, e.g. `"0,9/4,9/4,3/2"` or `"1,0,-1,1-1*sqrt(2)"`.
pub fn projected_from_str(s: &str) -> Result<ProjectedChern> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: parts.len() });
    }
    let e0 = parse_rational(parts[0])?;
    ProjectedChern::new(e0, parts[1].parse()?, parts[2].parse()?, parts[3].parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{quad_sqrt, rat, rat_int};

    #[test]
    fn scalar_round_trip() {
        for x in [rat(9, 4), rat_int(-3), rat(0, 1)] {
            assert_eq!(rational_from_json(&rational_to_json(&x)).unwrap(), x);
        }
        let s = quad_sqrt(&rat(8, 9)).unwrap();
        assert_eq!(quad_from_json(&quad_to_json(&s)).unwrap(), s);
        let r = QuadraticNumber::from_rational(rat(-7, 3));
        assert_eq!(quad_from_json(&quad_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn projected_round_trip_and_grammar() {
        let p = projected_from_str("0,9/4,9/4,3/2").unwrap();
        assert_eq!(p.e0, rat_int(0));
        assert_eq!(projected_from_json(&projected_to_json(&p)).unwrap(), p);
        let q = projected_from_str("1,0,-1,-2/3*sqrt(2)").unwrap();
        assert_eq!(projected_from_json(&projected_to_json(&q)).unwrap(), q);
        assert!(projected_from_str("1,2,3").is_err());
    }

    #[test]
    fn divisor_round_trip() {
        let m = ThreefoldModel::p2_elliptic_curve();
        let d = m.parse_divisor("2h-1/2*f").unwrap();
        let v = divisor_to_json(&m, &d);
        assert_eq!(divisor_from_json(&m, &v).unwrap(), d);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"f":"-1/2","h":"2"}"#);
    }

    #[test]
    fn polynomial_round_trip() {
        let p = Polynomial::from_coeffs([(6, rat(1, 2)), (4, rat(3, 2)), (2, rat_int(1))]);
        let v = polynomial_to_json(&p);
        assert_eq!(polynomial_from_json(&v).unwrap(), p);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"2":"1","4":"3/2","6":"1/2"}"#);
    }
}
