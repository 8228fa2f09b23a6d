//! Shape-directed JSON for elements. Numbers travel as strings so nothing is
//! rounded; decoding needs the descriptor because `[]` alone could be an
//! empty word or an empty tuple.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor};
use crate::num::{fmt_rat, parse_rat};
use crate::word::{Letter, Word};

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Int(n) => s.serialize_str(&n.to_string()),
            Element::Rat(r) => s.serialize_str(&fmt_rat(r)),
            Element::Tuple(v) => {
                let mut seq = s.serialize_seq(Some(v.len()))?;
                for e in v {
                    seq.serialize_element(e)?;
                }
                seq.end()
            }
            Element::Word(w) => {
                let mut seq = s.serialize_seq(Some(w.len()))?;
                for l in w.letters() {
                    seq.serialize_element(&(l.gen, l.sign()))?;
                }
                seq.end()
            }
            Element::Matrix(a, b) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(&fmt_rat(a))?;
                seq.serialize_element(&fmt_rat(b))?;
                seq.end()
            }
        }
    }
}

pub fn element_to_json(x: &Element) -> Value {
    serde_json::to_value(x).expect("elements always serialize")
}

fn bad(desc: &GroupDescriptor, v: &Value) -> Error {
    Error::ShapeMismatch { expected: desc.to_string(), found: v.to_string() }
}

fn str_of<'a>(desc: &GroupDescriptor, v: &'a Value) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(desc, v))
}

pub fn element_from_json(desc: &GroupDescriptor, v: &Value) -> Result<Element> {
    use GroupDescriptor as D;
    let arr = |n: Option<usize>| -> Result<&Vec<Value>> {
        match v.as_array() {
            Some(a) if n.is_none_or(|n| a.len() == n) => Ok(a),
            _ => Err(bad(desc, v)),
        }
    };
    let el = match desc {
        D::Int => {
            let n: BigInt = str_of(desc, v)?.parse().map_err(|_| bad(desc, v))?;
            Element::Int(n)
        }
        D::Rat => Element::Rat(parse_rat(str_of(desc, v)?).ok_or_else(|| bad(desc, v))?),
        D::Matrix => {
            let a = arr(Some(2))?;
            let p = parse_rat(str_of(desc, &a[0])?).ok_or_else(|| bad(desc, v))?;
            let q = parse_rat(str_of(desc, &a[1])?).ok_or_else(|| bad(desc, v))?;
            Element::Matrix(p, q)
        }
        D::Free { .. } => {
            let mut letters = Vec::new();
            for item in arr(None)? {
                let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad(desc, v))?;
                let gen = pair[0].as_u64().filter(|&g| g >= 1).ok_or_else(|| bad(desc, v))?;
                let inverse = match pair[1].as_i64() {
                    Some(1) => false,
                    Some(-1) => true,
                    _ => return Err(bad(desc, v)),
                };
                letters.push(Letter::new(gen as u32, inverse));
            }
            let w = Word::reduce(letters.iter().copied());
            if w.len() != letters.len() {
                return Err(Error::ShapeMismatch { expected: "reduced word".into(), found: v.to_string() });
            }
            Element::Word(w)
        }
        D::AbFree { vals } => {
            let a = arr(Some(vals.len()))?;
            Element::Tuple(a.iter().map(|x| element_from_json(&D::Int, x)).collect::<Result<_>>()?)
        }
        D::Prod { children, .. } => {
            let a = arr(Some(children.len()))?;
            Element::Tuple(children.iter().zip(a).map(|(c, x)| element_from_json(c, x)).collect::<Result<_>>()?)
        }
        D::Lex { first, second } => {
            let a = arr(Some(2))?;
            Element::pair(element_from_json(first, &a[0])?, element_from_json(second, &a[1])?)
        }
        D::Trivial { child } => element_from_json(child, v)?,
    };
    desc.check(&el)?;
    Ok(el)
}

pub fn descriptor_to_json(desc: &GroupDescriptor) -> Value {
    serde_json::to_value(desc).expect("descriptors always serialize")
}

pub fn descriptor_from_json(v: &Value) -> Result<GroupDescriptor> {
    let d: GroupDescriptor = serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
    d.validate()?;
    Ok(d)
}

/// Compact canonical text; identical values give identical bytes.
pub fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("json values always print")
}

/// Wraps a payload with the schema version every CLI document carries.
pub fn versioned(kind: &str, body: Value) -> Value {
    let mut out = json!({ "format": 1, "kind": kind });
    if let (Some(o), Value::Object(b)) = (out.as_object_mut(), body) {
        o.extend(b);
    }
    out
}
