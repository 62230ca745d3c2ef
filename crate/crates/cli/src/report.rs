//! Machine-readable reports and the JSON encodings shared by commands.

use angk0::category::{AngleGen, ObjectVec, Presentation};
use angk0::classification::{Certificate, Counterexample, Verdict};
use angk0::grothendieck::ElementObject;
use angk0::lattice::{IntMatrix, Lattice};
use angk0::validation::Violation;
use angk0::witness::AngleAtom;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    /// SHA-256 of the canonical form of the input presentation(s).
    pub presentation_digest: String,
    pub results: Value,
}

impl ReportDocument {
    pub fn new(command: &str, digest: String, results: Value) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            presentation_digest: digest,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Numbers that fit in `i64` are JSON numbers, larger ones strings.
pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn big_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

pub fn rows(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|r| big_vec(r)).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    rows(&m.row_vecs())
}

pub fn lattice(l: &Lattice) -> Value {
    rows(&l.basis_rows())
}

/// `{name: multiplicity}` in indecomposable order, zeros omitted.
pub fn object(p: &Presentation, v: &ObjectVec) -> Value {
    let mut m = Map::new();
    for (i, &x) in v.multiplicities().iter().enumerate() {
        if x > 0 {
            m.insert(p.names()[i].clone(), Value::from(x));
        }
    }
    Value::Object(m)
}

pub fn angle(p: &Presentation, a: &AngleGen) -> Value {
    Value::Array(a.vertices().iter().map(|v| object(p, v)).collect())
}

pub fn atom(p: &Presentation, a: &AngleAtom) -> Value {
    match a {
        AngleAtom::Generator { index, rotation } => json!({"kind": "generator", "angle": index, "rotation": rotation}),
        AngleAtom::Trivial { object: o, slot } => json!({"kind": "trivial", "object": object(p, o), "slot": slot}),
    }
}

pub fn element_object(p: &Presentation, o: &ElementObject) -> Value {
    match o {
        ElementObject::Single(a) => json!({"object": object(p, a)}),
        ElementObject::Pair(a, b) => json!({"positive": object(p, a), "negative": object(p, b)}),
    }
}

pub fn violations(v: &[Violation]) -> Value {
    Value::Array(v.iter().map(|x| json!({"rule": x.rule, "detail": x.detail})).collect())
}

pub fn certificate(p: &Presentation, c: &Certificate) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), Value::from(c.verdict.label()));
    m.insert("evidence".into(), Value::from(c.evidence.clone()));
    match &c.verdict {
        Verdict::Unknown { bound } => {
            m.insert("bound".into(), Value::from(*bound));
        }
        Verdict::Fails(cx) => {
            m.insert("counterexample".into(), counterexample(p, cx));
        }
        Verdict::Holds => {}
    }
    Value::Object(m)
}

fn counterexample(p: &Presentation, cx: &Counterexample) -> Value {
    match cx {
        Counterexample::Angle { atoms, angle: a, outside } => json!({
            "angle": angle(p, a),
            "atoms": atoms.iter().map(|x| atom(p, x)).collect::<Vec<_>>(),
            "outside_vertex": outside + 1,
        }),
        Counterexample::Split {
            member,
            summand,
            complement,
        } => json!({
            "member": object(p, member),
            "summand": object(p, summand),
            "complement": object(p, complement),
        }),
    }
}
