//! JSON encodings of ring elements.
//!
//! Rationals are strings `"num/den"` (or `"num"`), prime-field elements are
//! the string of their residue, quadratic-extension elements are objects
//! `{"a": .., "b": .., "d": int}` and polynomials are arrays indexed by degree.

use serde_json::{json, Value};

use super::rational::{format_rational, parse_rational};
use super::{Field, Fp, Polynomial, QuadExt, QuadParam, Ring, Q};

pub trait Encode {
    fn encode(&self) -> Value;
}

pub trait Decode: Sized {
    fn decode(v: &Value) -> Option<Self>;
}

impl Encode for Q {
    fn encode(&self) -> Value {
        Value::String(format_rational(self))
    }
}

impl Decode for Q {
    fn decode(v: &Value) -> Option<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(Q::from_i64),
            _ => None,
        }
    }
}

impl Encode for Fp {
    fn encode(&self) -> Value {
        Value::String(self.value().to_string())
    }
}

impl<D: QuadParam<Q>> Encode for QuadExt<Q, D> {
    fn encode(&self) -> Value {
        let d = D::d();
        json!({
            "a": self.re().encode(),
            "b": self.im().encode(),
            "d": d.to_integer().to_string().parse::<i64>().expect("small d"),
        })
    }
}

impl<D: QuadParam<Q>> Decode for QuadExt<Q, D> {
    fn decode(v: &Value) -> Option<Self> {
        let d = v.get("d")?.as_i64()?;
        if Q::from_i64(d) != D::d() {
            return None;
        }
        Some(Self::new(Q::decode(v.get("a")?)?, Q::decode(v.get("b")?)?))
    }
}

impl<R: Ring + Encode> Encode for Polynomial<R> {
    fn encode(&self) -> Value {
        Value::Array(self.coeffs().iter().map(Encode::encode).collect())
    }
}

impl<R: Ring + Decode> Decode for Polynomial<R> {
    fn decode(v: &Value) -> Option<Self> {
        let items = v.as_array()?;
        items
            .iter()
            .map(R::decode)
            .collect::<Option<Vec<R>>>()
            .map(Polynomial::new)
    }
}

impl<T: Encode> Encode for [T] {
    fn encode(&self) -> Value {
        Value::Array(self.iter().map(Encode::encode).collect())
    }
}

impl<T: Encode> Encode for Vec<T> {
    fn encode(&self) -> Value {
        self.as_slice().encode()
    }
}

/// Human-readable text form of an encoded element.
pub fn render<T: Encode + ?Sized>(x: &T) -> String {
    render_value(&x.encode())
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) => {
            let a = m.get("a").map(render_value).unwrap_or_default();
            let b = m.get("b").map(render_value).unwrap_or_default();
            let d = m.get("d").map(|d| d.to_string()).unwrap_or_default();
            match (a.as_str(), b.as_str()) {
                (_, "0") => a,
                ("0", _) => format!("({b})*sqrt({d})"),
                _ => format!("{a} + ({b})*sqrt({d})"),
            }
        }
        other => other.to_string(),
    }
}

/// Encodes the element if it lies in the base field, as a plain rational.
pub fn encode_compact<D: QuadParam<Q>>(x: &QuadExt<Q, D>) -> Value
where
    QuadExt<Q, D>: Field,
{
    match x.to_base() {
        Some(q) => q.encode(),
        None => x.encode(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, QOmega};

    #[test]
    fn round_trips() {
        let q = rat(-7, 3);
        assert_eq!(q.encode(), json!("-7/3"));
        assert_eq!(Q::decode(&q.encode()), Some(q));
        let x = QOmega::new(rat(1, 2), rat(-3, 1));
        assert_eq!(x.encode(), json!({"a": "1/2", "b": "-3", "d": -3}));
        assert_eq!(QOmega::decode(&x.encode()), Some(x.clone()));
        let p: Polynomial<Q> = Polynomial::from_i64s(&[1, 0, -2]);
        assert_eq!(p.encode(), json!(["1", "0", "-2"]));
        assert_eq!(Polynomial::<Q>::decode(&p.encode()), Some(p));
        assert_eq!(encode_compact(&QOmega::from_i64(5)), json!("5"));
        assert_eq!(render(&x), "1/2 + (-3)*sqrt(-3)");
        assert_eq!(render(&QOmega::from_i64(5)), "5");
    }
}
