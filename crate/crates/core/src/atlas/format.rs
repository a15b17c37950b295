//! The `involcode-triangulation/1` JSON file format.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::equivariant::{validate_involution, Involution};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

pub const TRIANGULATION_FORMAT: &str = "involcode-triangulation/1";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangulationFile {
    format: String,
    num_vertices: usize,
    tetrahedra: Vec<Vec<u32>>,
    involution: Vec<u32>,
}

/// Parses and structurally validates a triangulation document.
pub fn parse_triangulation(text: &str) -> Result<(SimplicialComplex, Involution)> {
    let file: TriangulationFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.format != TRIANGULATION_FORMAT {
        return Err(Error::Parse(format!(
            "field \"format\": expected {TRIANGULATION_FORMAT:?}, found {:?}",
            file.format
        )));
    }
    for (i, t) in file.tetrahedra.iter().enumerate() {
        if t.len() != 4 {
            return Err(Error::MalformedFacet {
                facet: t.clone(),
                reason: format!("tetrahedron {i} has {} vertices, expected 4", t.len()),
            });
        }
        if t.windows(2).any(|w| w[0] == w[1]) || {
            let mut s = t.clone();
            s.sort_unstable();
            s.windows(2).any(|w| w[0] == w[1])
        } {
            return Err(Error::MalformedFacet {
                facet: t.clone(),
                reason: "repeated vertex".into(),
            });
        }
        if let Some(&v) = t.iter().find(|&&v| v as usize >= file.num_vertices) {
            return Err(Error::MalformedFacet {
                facet: t.clone(),
                reason: format!("vertex {v} out of range 0..{}", file.num_vertices),
            });
        }
        if t.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedFacet {
                facet: t.clone(),
                reason: "vertices are not strictly increasing".into(),
            });
        }
        if i > 0 && file.tetrahedra[i - 1] >= *t {
            return Err(Error::Parse(format!(
                "field \"tetrahedra\": entry {i} is not after entry {} in lexicographic order",
                i - 1
            )));
        }
    }
    let c = SimplicialComplex::from_facets(file.num_vertices, &file.tetrahedra)?;
    let tau = validate_involution(&c, &file.involution)?;
    Ok((c, tau))
}

pub fn load_triangulation(path: impl AsRef<Path>) -> Result<(SimplicialComplex, Involution)> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        context: format!("reading {}", path.display()),
        source,
    })?;
    parse_triangulation(&text)
}

/// Canonical text of a triangulation: one tetrahedron per line.
pub fn triangulation_to_json(c: &SimplicialComplex, tau: &Involution) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format\": \"{TRIANGULATION_FORMAT}\",");
    let _ = writeln!(out, "  \"num_vertices\": {},", c.num_vertices());
    out.push_str("  \"tetrahedra\": [");
    let tets = if c.dim() == Some(3) { c.count(3) } else { 0 };
    for i in 0..tets {
        let t = c.simplices(3).get(i);
        let sep = if i + 1 < tets { "," } else { "" };
        let _ = write!(out, "\n    [{}, {}, {}, {}]{sep}", t[0], t[1], t[2], t[3]);
    }
    out.push_str(if tets > 0 { "\n  ],\n" } else { "],\n" });
    let perm: Vec<String> = tau.perm().iter().map(u32::to_string).collect();
    let _ = writeln!(out, "  \"involution\": [{}]", perm.join(", "));
    out.push_str("}\n");
    out
}

pub fn write_triangulation(
    path: impl AsRef<Path>,
    c: &SimplicialComplex,
    tau: &Involution,
) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, triangulation_to_json(c, tau)).map_err(|source| Error::Io {
        context: format!("writing {}", path.display()),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::sphere_suspension;

    #[test]
    fn round_trip() {
        let (c, tau) = sphere_suspension();
        let text = triangulation_to_json(&c, &tau);
        let (c2, tau2) = parse_triangulation(&text).unwrap();
        assert_eq!(c, c2);
        assert_eq!(tau, tau2);
        assert_eq!(triangulation_to_json(&c2, &tau2), text);
    }

    fn doc(tets: &str, inv: &str) -> String {
        format!(
            r#"{{"format": "involcode-triangulation/1", "num_vertices": 5, "tetrahedra": {tets}, "involution": {inv}}}"#
        )
    }

    #[test]
    fn rejects_bad_documents() {
        let ok_inv = "[0, 1, 2, 3, 4]";
        assert!(matches!(
            parse_triangulation(&doc("[[0, 1, 1, 2]]", ok_inv)),
            Err(Error::MalformedFacet { .. })
        ));
        assert!(matches!(
            parse_triangulation(&doc("[[0, 1, 2, 3]]", "[1, 2, 0, 3, 4]")),
            Err(Error::NotAnInvolution(_))
        ));
        assert!(matches!(
            parse_triangulation(&doc("[[0, 1, 2, 4], [0, 1, 2, 3]]", ok_inv)),
            Err(Error::Parse(_))
        ));
        let unknown = doc("[[0, 1, 2, 3]]", ok_inv).replace("}", ", \"extra\": 1}");
        assert!(matches!(parse_triangulation(&unknown), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_errors_carry_position() {
        let text = "{\n  \"format\": \"involcode-triangulation/1\",\n  \"num_vertices\": 4,\n  \"tetrahedra\": [[0, 1, 2, 3]\n";
        let err = parse_triangulation(text).unwrap_err().to_string();
        assert!(err.contains("line"), "{err}");
    }
}
