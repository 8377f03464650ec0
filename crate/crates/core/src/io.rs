//! The ideal document formats: a JSON document or a plain
//! one-generator-per-line text file.

use crate::ideal::{GradedIdeal, PartKind, Point, Provenance, StructuredPart};
use crate::ring::{Rat, RingSpec};
use crate::{Error, Result};
use std::str::FromStr;

/// Serialized form of an ideal: variables, optional parameter name,
/// generator strings, and optional structured metadata.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct IdealDocument {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    pub gens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<DocumentMeta>,
}

#[derive(Debug, Clone, Default, serde::Serialize, serde::Deserialize)]
pub struct DocumentMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    /// Structured intersection parts; they must re-intersect to the ideal
    /// the generators present.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<DocumentPart>,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct DocumentPart {
    pub gens: Vec<String>,
    /// "cm" or "point".
    pub kind: String,
    /// Homogeneous coordinates (rational strings) of the supporting point
    /// for punctual parts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
}

impl IdealDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(format!("bad JSON document: {e}")))
    }

    /// Plain format: an optional header line `vars: x y z t param: A`,
    /// then one generator per line; `#` starts a comment.
    pub fn from_plain(text: &str) -> Result<Self> {
        let mut vars: Vec<String> = vec!["x", "y", "z", "t"].into_iter().map(String::from).collect();
        let mut param = None;
        let mut gens = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vars:") {
                if i != 0 && !gens.is_empty() {
                    return Err(Error::Format("vars: header must come first".into()));
                }
                let mut rest = rest.trim();
                if let Some(pos) = rest.find("param:") {
                    param = Some(rest[pos + 6..].trim().to_string());
                    rest = rest[..pos].trim();
                }
                vars = rest
                    .split([' ', ',', ';'])
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect();
                continue;
            }
            gens.push(line.to_string());
        }
        if gens.is_empty() {
            return Err(Error::Format("no generators in document".into()));
        }
        Ok(IdealDocument { vars, param, gens, meta: None })
    }

    /// Parse either format, deciding by the leading character.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_plain(text)
        }
    }

    pub fn ring(&self) -> Result<RingSpec> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        RingSpec::new(&vars, self.param.as_deref().unwrap_or("A"))
    }

    pub fn to_ideal(&self) -> Result<GradedIdeal> {
        let ring = self.ring()?;
        let gens: Vec<&str> = self.gens.iter().map(|s| s.as_str()).collect();
        let mut ideal = GradedIdeal::parse(&ring, &gens)?;
        if let Some(meta) = &self.meta {
            if !meta.parts.is_empty() {
                let parts = meta
                    .parts
                    .iter()
                    .map(|p| doc_part(&ring, p))
                    .collect::<Result<Vec<_>>>()?;
                let structured = ideal.clone().with_provenance(Provenance::Intersection(parts));
                // The parts must re-intersect to the stated generators.
                let probe = self.gens.iter().map(|_| ()).count() as u32 + 4;
                for n in 0..=probe.min(8) {
                    if !structured
                        .degree_piece(n)
                        .same_space(&ideal.degree_piece(n))
                    {
                        return Err(Error::Format(format!(
                            "meta parts do not re-intersect to the generators at degree {n}"
                        )));
                    }
                }
                ideal = structured;
            }
        }
        Ok(ideal)
    }

    pub fn from_ideal(ideal: &GradedIdeal) -> Self {
        IdealDocument {
            vars: ideal.ring().vars().to_vec(),
            param: Some(ideal.ring().param().to_string()),
            gens: ideal.generators().iter().map(|g| g.render()).collect(),
            meta: None,
        }
    }
}

fn doc_part(ring: &RingSpec, p: &DocumentPart) -> Result<StructuredPart> {
    let gens: Vec<&str> = p.gens.iter().map(|s| s.as_str()).collect();
    let ideal = GradedIdeal::parse(ring, &gens)?;
    let kind = match p.kind.as_str() {
        "cm" => PartKind::Cm,
        "point" => {
            let coords = p
                .point
                .as_ref()
                .ok_or_else(|| Error::Format("point part needs coordinates".into()))?
                .iter()
                .map(|s| {
                    Rat::from_str(s)
                        .map_err(|_| Error::Format(format!("bad rational `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != ring.nvars() {
                return Err(Error::Format("point coordinate count mismatch".into()));
            }
            PartKind::PointPrimary(Point(coords))
        }
        other => return Err(Error::Format(format!("unknown part kind `{other}`"))),
    };
    Ok(StructuredPart { ideal, kind })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_roundtrip() {
        let text = "vars: x y z t param: A\n# lex ideal\nx\ny^5\ny^4*z^4\n";
        let doc = IdealDocument::parse(text).unwrap();
        let ideal = doc.to_ideal().unwrap();
        assert_eq!(ideal.generators().len(), 3);
        assert_eq!(ideal.ring().vars(), ["x", "y", "z", "t"]);
    }

    #[test]
    fn default_ring_without_header() {
        let doc = IdealDocument::parse("x\ny^2\n").unwrap();
        assert_eq!(doc.vars.len(), 4);
    }

    #[test]
    fn json_with_structured_parts() {
        let text = r#"{
            "vars": ["x", "y", "z", "t"],
            "gens": ["x", "y^4", "y^3*z"],
            "meta": {
                "parts": [
                    {"gens": ["x", "y^3"], "kind": "cm"},
                    {"gens": ["x", "y^4", "z"], "kind": "point",
                     "point": ["0", "0", "0", "1"]}
                ]
            }
        }"#;
        let ideal = IdealDocument::parse(text).unwrap().to_ideal().unwrap();
        assert!(matches!(ideal.provenance(), Some(Provenance::Intersection(_))));
    }

    #[test]
    fn mismatched_parts_rejected() {
        let text = r#"{
            "vars": ["x", "y", "z", "t"],
            "gens": ["x", "y^4"],
            "meta": {
                "parts": [
                    {"gens": ["x", "y^3"], "kind": "cm"},
                    {"gens": ["x", "y^4", "z"], "kind": "point",
                     "point": ["0", "0", "0", "1"]}
                ]
            }
        }"#;
        assert!(IdealDocument::parse(text).unwrap().to_ideal().is_err());
    }
}
