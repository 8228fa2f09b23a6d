//! JSON schemas for everything the binary prints with `--json`.

use serde_json::{json, Value};

use lexrdp::encode::versioned;

fn doc(kind: &str, props: Value, required: &[&str]) -> Value {
    let mut p = json!({
        "format": { "const": 1 },
        "kind": { "const": kind },
    });
    if let (Some(dst), Some(src)) = (p.as_object_mut(), props.as_object()) {
        for (k, v) in src {
            dst.insert(k.clone(), v.clone());
        }
    }
    let mut req = vec!["format", "kind"];
    req.extend_from_slice(required);
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": kind,
        "type": "object",
        "properties": p,
        "required": req,
    })
}

fn element() -> Value {
    json!({
        "description": "Integers and rationals are decimal strings (\"3\", \"-1/2\"); tuples are arrays of elements; matrix elements are [a, b]; words are arrays of [generator, sign] pairs.",
        "oneOf": [ { "type": "string" }, { "type": "array" } ]
    })
}

fn table() -> Value {
    json!({
        "type": "object",
        "properties": {
            "equation": {
                "type": "object",
                "properties": { "a1": element(), "a2": element(), "b1": element(), "b2": element() },
                "required": ["a1", "a2", "b1", "b2"]
            },
            "c11": element(), "c12": element(), "c21": element(), "c22": element()
        },
        "required": ["equation", "c11", "c12", "c21", "c22"]
    })
}

fn verdict() -> Value {
    json!({
        "type": "object",
        "properties": {
            "verdict": { "enum": ["Holds", "Fails", "Unknown"] },
            "exact": { "type": "boolean" },
            "evidence": { "type": "array" },
            "reason": { "enum": ["budget-exhausted", "no-analytic-rule"] },
            "note": { "type": "string" }
        },
        "required": ["verdict", "note"]
    })
}

fn report() -> Value {
    json!({
        "type": "object",
        "properties": {
            "sums_ok": { "type": "boolean" },
            "positivity": { "type": "array", "items": { "type": "boolean" }, "minItems": 4, "maxItems": 4 },
            "rdp1_verdict": verdict(),
            "rdp2_verdict": verdict()
        },
        "required": ["sums_ok", "positivity", "rdp1_verdict", "rdp2_verdict"]
    })
}

fn trace() -> Value {
    json!({
        "type": "object",
        "properties": {
            "tag": { "type": "string" },
            "aux": { "type": "object" },
            "index_sets": { "type": "object" },
            "checks": { "type": "object" },
            "notes": { "type": "array", "items": { "type": "string" } },
            "sub": { "type": "array" }
        },
        "required": ["tag"]
    })
}

fn outcome() -> Value {
    json!({
        "type": "object",
        "properties": {
            "outcome": { "enum": ["Found", "NotFoundExhaustive", "NotFoundWithinBudget"] },
            "value": {},
            "examined": { "type": "integer" },
            "budget": budget()
        },
        "required": ["outcome", "examined"]
    })
}

fn budget() -> Value {
    json!({
        "type": "object",
        "properties": {
            "max_abs_coord": { "type": "integer" },
            "max_word_len": { "type": "integer" },
            "max_candidates": { "type": "integer" },
            "seed": { "type": "integer" }
        }
    })
}

fn case_report() -> Value {
    json!({
        "type": "object",
        "properties": {
            "id": { "type": "string" },
            "summary": { "type": "string" },
            "inputs": { "type": "object" },
            "claims": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "name": { "type": "string" },
                        "pass": { "type": "boolean" },
                        "bound": { "type": ["string", "null"] },
                        "evidence": { "type": "array", "items": { "type": "string" } }
                    },
                    "required": ["name", "pass"]
                }
            },
            "pass": { "type": "boolean" }
        },
        "required": ["id", "summary", "claims", "pass"]
    })
}

pub fn all() -> Value {
    let schemas = vec![
        doc("solve", json!({ "group": {}, "table": table(), "trace": trace(), "report": report() }), &["group", "table", "trace", "report"]),
        doc("verify", json!({ "table": table(), "report": report() }), &["table", "report"]),
        doc(
            "check",
            json!({ "property": { "type": "string" }, "inputs": { "type": "array" }, "holds": { "type": "boolean" }, "witness": {}, "verdict": verdict() }),
            &["property"],
        ),
        doc("oracle", json!({ "search": { "enum": ["table", "wrdp-k"] }, "result": outcome(), "budget": budget() }), &["search", "result"]),
        doc(
            "words",
            json!({ "generators": { "type": "integer" }, "max_len": { "type": "integer" }, "count": { "type": "integer" }, "words": { "type": "array" } }),
            &["generators", "max_len", "count", "words"],
        ),
        doc("case", json!({ "report": case_report() }), &["report"]),
        doc("case-book", json!({ "reports": { "type": "array", "items": case_report() } }), &["reports"]),
        doc("case-list", json!({ "cases": { "type": "array", "items": { "type": "string" } } }), &["cases"]),
        doc(
            "error",
            json!({
                "error": { "type": "string" },
                "message": { "type": "string" },
                "offset": { "type": "integer" },
                "expected": { "type": "array", "items": { "type": "string" } },
                "found": { "type": "string" },
                "budget": budget(),
                "examined": { "type": "integer" }
            }),
            &["error", "message"],
        ),
    ];
    versioned("schemas", json!({ "schemas": schemas }))
}
