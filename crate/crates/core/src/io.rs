//! The JSON complex format.
//!
//! ```json
//! { "ambient_dim": 2,
//!   "vertices": { "A": ["0","0"], "B": ["1","0"], "C": ["1/5","9/10"] },
//!   "simplices": [ ["A","B","C"] ] }
//! ```
//!
//! Coordinates are decimal or `p/q` strings. Input may list maximal
//! simplices only; the face closure is computed on load. Output lists the
//! full closure, vertices sorted by label and coordinates in canonical
//! `p/q` form, so serialization is a fixed point of load-then-save.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{ComplexBuilder, GeometricComplex};
use crate::error::{Error, Result};
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub ambient_dim: usize,
    pub vertices: BTreeMap<String, Vec<String>>,
    pub simplices: Vec<Vec<String>>,
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<GeometricComplex> {
        let mut b = ComplexBuilder::new(self.ambient_dim);
        for (label, coords) in &self.vertices {
            let point = Point::parse(coords)?;
            b.add_vertex(label.clone(), point)?;
        }
        for s in &self.simplices {
            b.add_simplex_by_labels(s)?;
        }
        Ok(b.build())
    }

    pub fn from_complex(k: &GeometricComplex) -> Self {
        let vertices = k.vertex_ids().map(|v| (k.label(v).to_string(), k.point(v).to_strings())).collect();
        let simplices = k.simplices().map(|s| k.labels_of(s).into_iter().map(str::to_string).collect()).collect();
        ComplexFile { ambient_dim: k.ambient_dim(), vertices, simplices }
    }
}

pub fn from_json_str(text: &str) -> Result<GeometricComplex> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.into_complex()
}

pub fn to_json_value(k: &GeometricComplex) -> serde_json::Value {
    serde_json::to_value(ComplexFile::from_complex(k)).expect("complex file is plain data")
}

/// Canonical text: one vertex and one simplex per line.
pub fn to_json_string(k: &GeometricComplex) -> String {
    let file = ComplexFile::from_complex(k);
    let quoted = |items: &[String]| -> String {
        let parts: Vec<String> = items.iter().map(|s| serde_json::Value::from(s.as_str()).to_string()).collect();
        format!("[{}]", parts.join(", "))
    };
    let vertices: Vec<String> = file
        .vertices
        .iter()
        .map(|(label, coords)| format!("    {}: {}", serde_json::Value::from(label.as_str()), quoted(coords)))
        .collect();
    let simplices: Vec<String> = file.simplices.iter().map(|s| format!("    {}", quoted(s))).collect();
    let block = |lines: Vec<String>, open: char, close: char| {
        if lines.is_empty() {
            format!("{open}{close}")
        } else {
            format!("{open}\n{}\n  {close}", lines.join(",\n"))
        }
    };
    format!(
        "{{\n  \"ambient_dim\": {},\n  \"vertices\": {},\n  \"simplices\": {}\n}}\n",
        file.ambient_dim,
        block(vertices, '{', '}'),
        block(simplices, '[', ']')
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = r#"{ "ambient_dim": 2,
        "vertices": { "A": ["0","0"], "B": ["1","0"], "C": ["0.2","9/10"] },
        "simplices": [ ["C","B","A"] ] }"#;

    #[test]
    fn loads_and_closes() {
        let k = from_json_str(TRIANGLE).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        let out = to_json_string(&k);
        assert!(out.contains("\"1/5\""));
        assert_eq!(to_json_string(&from_json_str(&out).unwrap()), out);
        let reparsed: ComplexFile = serde_json::from_str(&out).unwrap();
        assert_eq!(reparsed, ComplexFile::from_complex(&k));
        assert!(out.contains("    \"C\": [\"1/5\", \"9/10\"]"));
    }

    #[test]
    fn empty_complex_round_trips() {
        let k = GeometricComplex::empty(3);
        let out = to_json_string(&k);
        assert_eq!(out, "{\n  \"ambient_dim\": 3,\n  \"vertices\": {},\n  \"simplices\": []\n}\n");
        assert_eq!(from_json_str(&out).unwrap(), k);
    }

    #[test]
    fn labels_are_escaped() {
        let text = r#"{ "ambient_dim": 1, "vertices": { "a\"b": ["1"] }, "simplices": [["a\"b"]] }"#;
        let out = to_json_string(&from_json_str(text).unwrap());
        assert!(out.contains(r#""a\"b""#));
        assert_eq!(to_json_string(&from_json_str(&out).unwrap()), out);
    }

    #[test]
    fn unknown_vertex_names_the_simplex() {
        let text = r#"{ "ambient_dim": 2,
            "vertices": { "A": ["0","0"], "B": ["1","0"], "C": ["1/5","9/10"] },
            "simplices": [ ["A","B","C"], ["A","D"] ] }"#;
        assert_eq!(from_json_str(text), Err(Error::UnknownVertex { simplex: "[A,D]".into(), vertex: "D".into() }));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(from_json_str("{"), Err(Error::Format(_))));
        let bad_dim = r#"{ "ambient_dim": 3, "vertices": { "A": ["0","0"] }, "simplices": [] }"#;
        assert!(matches!(from_json_str(bad_dim), Err(Error::DimensionMismatch { expected: 3, found: 2 })));
        let bad_num = r#"{ "ambient_dim": 1, "vertices": { "A": ["x"] }, "simplices": [] }"#;
        assert!(matches!(from_json_str(bad_num), Err(Error::ParseRational(_))));
    }
}
