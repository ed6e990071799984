//! JSON wire format. Rationals are strings `"p"` or `"p/q"`; monomials map
//! generator names (`CP3`, `h1`, `b`, ...) to exponents.

use mufgl::exactalg::{format_rational, parse_rational};
use mufgl::{BiSeries, Divided, Generator, Monomial, Poly, Rational, Series};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
#[error("malformed JSON: {0}")]
pub struct JsonError(pub String);

fn bad(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_json(v: &Value) -> Result<Rational, JsonError> {
    let s = v.as_str().ok_or_else(|| bad("rational must be a string"))?;
    parse_rational(s).ok_or_else(|| bad(format!("invalid rational `{s}`")))
}

pub fn terms_to_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let monomial: Map<String, Value> =
                m.factors().iter().map(|(g, e)| (g.to_string(), json!(e))).collect();
            json!({ "coeff": format_rational(c), "monomial": monomial })
        })
        .collect();
    Value::Array(terms)
}

pub fn terms_from_json(v: &Value) -> Result<Poly, JsonError> {
    let terms = v.as_array().ok_or_else(|| bad("terms must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff = rational_from_json(t.get("coeff").ok_or_else(|| bad("term without coeff"))?)?;
        let monomial = t
            .get("monomial")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("term without monomial object"))?;
        let mut factors = Vec::with_capacity(monomial.len());
        for (name, e) in monomial {
            let g: Generator = name.parse().map_err(|e: mufgl::Error| bad(e.to_string()))?;
            let e = e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| bad("bad exponent"))?;
            factors.push((g, e));
        }
        out.push((Monomial::from_factors(factors), coeff));
    }
    Ok(Poly::from_terms(out))
}

pub fn poly_to_json(p: &Poly) -> Value {
    json!({ "terms": terms_to_json(p) })
}

pub fn poly_from_json(v: &Value) -> Result<Poly, JsonError> {
    terms_from_json(v.get("terms").ok_or_else(|| bad("missing terms"))?)
}

fn order_of(v: &Value) -> Result<usize, JsonError> {
    v.get("order").and_then(Value::as_u64).map(|o| o as usize).ok_or_else(|| bad("missing order"))
}

pub fn series_to_json(s: &Series) -> Value {
    let coefficients: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!({ "power": k, "terms": terms_to_json(c) }))
        .collect();
    json!({ "variable": "z", "order": s.order(), "coefficients": coefficients })
}

pub fn series_from_json(v: &Value) -> Result<Series, JsonError> {
    let order = order_of(v)?;
    let mut out = Series::zero(order);
    for entry in v.get("coefficients").and_then(Value::as_array).ok_or_else(|| bad("missing coefficients"))? {
        let k = entry.get("power").and_then(Value::as_u64).ok_or_else(|| bad("missing power"))? as usize;
        if k > order {
            return Err(bad(format!("power {k} exceeds order {order}")));
        }
        let c = terms_from_json(entry.get("terms").ok_or_else(|| bad("missing terms"))?)?;
        out.set_coeff(k, &out.coeff(k).clone() + &c);
    }
    Ok(out)
}

pub fn bi_series_to_json(s: &BiSeries) -> Value {
    let coefficients: Vec<Value> = s
        .iter()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, j, c)| json!({ "powers": [i, j], "terms": terms_to_json(c) }))
        .collect();
    json!({ "variables": ["z0", "z1"], "order": s.order(), "coefficients": coefficients })
}

pub fn bi_series_from_json(v: &Value) -> Result<BiSeries, JsonError> {
    let order = order_of(v)?;
    let mut out = BiSeries::zero(order);
    for entry in v.get("coefficients").and_then(Value::as_array).ok_or_else(|| bad("missing coefficients"))? {
        let powers = entry.get("powers").and_then(Value::as_array).ok_or_else(|| bad("missing powers"))?;
        let [i, j] = powers.as_slice() else { return Err(bad("powers must have two entries")) };
        let (i, j) = match (i.as_u64(), j.as_u64()) {
            (Some(i), Some(j)) => (i as usize, j as usize),
            _ => return Err(bad("powers must be integers")),
        };
        if i + j > order {
            return Err(bad(format!("powers ({i},{j}) exceed order {order}")));
        }
        let c = terms_from_json(entry.get("terms").ok_or_else(|| bad("missing terms"))?)?;
        out.set_coeff(i, j, &out.coeff(i, j) + &c);
    }
    Ok(out)
}

pub fn divided_to_json(d: &Divided) -> Value {
    let entries: Vec<Value> =
        d.entries().map(|(r, c)| json!({ "divided_index": r, "terms": terms_to_json(c) })).collect();
    json!({ "kind": "divided", "entries": entries })
}

pub fn divided_from_json(v: &Value) -> Result<Divided, JsonError> {
    let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing entries"))?;
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let r = e
            .get("divided_index")
            .and_then(Value::as_u64)
            .and_then(|r| u32::try_from(r).ok())
            .ok_or_else(|| bad("missing divided_index"))?;
        out.push((r, terms_from_json(e.get("terms").ok_or_else(|| bad("missing terms"))?)?));
    }
    Ok(Divided::from_entries(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_shape() {
        let p = &Poly::h(1).pow(2).scale_int(6) - &Poly::cp(2).div_int(3);
        let v = poly_to_json(&p);
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"coeff":"-1/3","monomial":{"CP2":1}},{"coeff":"6","monomial":{"h1":2}}]}"#
        );
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }

    #[test]
    fn rejects_garbage() {
        assert!(poly_from_json(&json!({"terms": [{"coeff": "1/0", "monomial": {}}]})).is_err());
        assert!(poly_from_json(&json!({"terms": [{"coeff": "1", "monomial": {"CP0": 1}}]})).is_err());
        assert!(series_from_json(&json!({"order": 2, "coefficients": [{"power": 3, "terms": []}]})).is_err());
    }
}
