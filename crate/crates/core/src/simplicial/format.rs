//! Plain-text complex files.
//!
//! ```text
//! # pentagon
//! m=5
//! facet: 1 2
//! facet: 2 3
//! ...
//! ```
//!
//! Either every body line is `facet: ...` or every one is `missing: ...`.

use super::SimplicialComplex;
use crate::error::{MacError, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexFileStyle {
    Facets,
    Missing,
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut m: Option<usize> = None;
    let mut style: Option<ComplexFileStyle> = None;
    let mut sets: Vec<VertexSet> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(m_val) = m else {
            let value = line
                .strip_prefix("m=")
                .or_else(|| line.strip_prefix("m ="))
                .ok_or_else(|| MacError::parse(line_no, "expected `m=<int>` first"))?;
            let v: usize = value
                .trim()
                .parse()
                .map_err(|_| MacError::parse(line_no, format!("bad vertex count {value:?}")))?;
            if v > crate::vertex_set::MAX_LABEL {
                return Err(MacError::resource(format!(
                    "{v} vertices exceeds the {}-label limit",
                    crate::vertex_set::MAX_LABEL
                )));
            }
            m = Some(v);
            continue;
        };
        let (kind, rest) = line
            .split_once(':')
            .ok_or_else(|| MacError::parse(line_no, "expected `facet:` or `missing:`"))?;
        let this = match kind.trim() {
            "facet" => ComplexFileStyle::Facets,
            "missing" => ComplexFileStyle::Missing,
            other => {
                return Err(MacError::parse(line_no, format!("unknown line kind {other:?}")));
            }
        };
        if style.is_some_and(|s| s != this) {
            return Err(MacError::parse(line_no, "facet and missing lines cannot be mixed"));
        }
        style = Some(this);
        let mut s = VertexSet::EMPTY;
        for tok in rest.split_whitespace() {
            let l: usize = tok
                .parse()
                .map_err(|_| MacError::parse(line_no, format!("bad label {tok:?}")))?;
            if l == 0 || l > m_val {
                return Err(MacError::parse(line_no, format!("label {l} outside [1, {m_val}]")));
            }
            s = s.insert(l);
        }
        if this == ComplexFileStyle::Missing && s.is_empty() {
            return Err(MacError::parse(line_no, "empty missing face"));
        }
        sets.push(s);
    }
    let m = m.ok_or_else(|| MacError::parse(1, "missing `m=<int>` header"))?;
    match style.unwrap_or(ComplexFileStyle::Facets) {
        ComplexFileStyle::Facets => SimplicialComplex::new(m, sets),
        ComplexFileStyle::Missing => SimplicialComplex::from_missing_faces(m, sets),
    }
}

/// Renders `k` in the file format; each comment line is prefixed with `# `.
/// A full simplex has no missing faces and is always written with facet lines.
pub fn write_complex(k: &SimplicialComplex, style: ComplexFileStyle, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("m={}\n", k.m()));
    let (kind, sets) = match style {
        ComplexFileStyle::Facets => ("facet", k.facets().to_vec()),
        ComplexFileStyle::Missing => match k.missing_faces() {
            faces if faces.is_empty() => ("facet", k.facets().to_vec()),
            faces => ("missing", faces),
        },
    };
    for s in sets {
        out.push_str(kind);
        out.push(':');
        for l in s.iter() {
            out.push_str(&format!(" {l}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::catalog::*;
    use super::*;

    #[test]
    fn round_trip_both_styles() {
        for k in [pentagon(), heptagon_sphere(), truncated_cube_dual(), SimplicialComplex::empty(3)] {
            for style in [ComplexFileStyle::Facets, ComplexFileStyle::Missing] {
                let text = write_complex(&k, style, &["test".to_string()]);
                assert_eq!(parse_complex(&text).unwrap(), k, "{text}");
            }
        }
    }

    #[test]
    fn full_simplex_in_missing_style() {
        let k = SimplicialComplex::new(3, [VertexSet::initial(3)]).unwrap();
        let text = write_complex(&k, ComplexFileStyle::Missing, &[]);
        assert_eq!(parse_complex(&text).unwrap(), k);
    }

    #[test]
    fn comments_and_blank_lines() {
        let k = parse_complex("# two points\n\nm=2\nfacet: 1 # first\nfacet: 2\n").unwrap();
        assert_eq!(k, two_points());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_complex("m=3\nfacet: 1 2\nmissing: 3\n").unwrap_err();
        assert_eq!(e, MacError::parse(3, "facet and missing lines cannot be mixed"));
        let e = parse_complex("m=3\nfacet: 1 4\n").unwrap_err();
        assert!(matches!(e, MacError::Parse { line: 2, .. }));
        let e = parse_complex("facet: 1\n").unwrap_err();
        assert!(matches!(e, MacError::Parse { line: 1, .. }));
        assert!(matches!(
            parse_complex("m=3\nface: 1\n").unwrap_err(),
            MacError::Parse { line: 2, .. }
        ));
    }
}
