//! Family exchange format.
//!
//! One member per line as ascending comma-separated global indices; an empty
//! line is the empty set. Lines starting with `#` carry `key: value`
//! metadata such as the graph DSL and `r`.

use std::fmt::Write as _;

use super::{Family, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn write_family(f: &Family, metadata: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (key, value) in metadata {
        let _ = writeln!(out, "# {key}: {value}");
    }
    for s in f {
        let _ = writeln!(out, "{s}");
    }
    out
}

/// Returns the family and the `# key: value` pairs in file order.
pub fn parse_family(text: &str) -> Result<(Family, Vec<(String, String)>)> {
    let mut sets = Vec::new();
    let mut metadata = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((k, v)) = comment.split_once(':') {
                metadata.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        sets.push(parse_set(line).map_err(|message| Error::FamilyFormat { line: i + 1, message })?);
    }
    Ok((Family::new(sets), metadata))
}

fn parse_set(line: &str) -> std::result::Result<VertexSet, String> {
    if line.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    let mut s = VertexSet::EMPTY;
    let mut prev = None;
    for tok in line.split(',') {
        let v: usize = tok.trim().parse().map_err(|_| format!("bad vertex {tok:?}"))?;
        if v >= MAX_VERTICES {
            return Err(format!("vertex {v} exceeds {}", MAX_VERTICES - 1));
        }
        if prev.is_some_and(|p| p >= v) {
            return Err("indices must be strictly ascending".into());
        }
        prev = Some(v);
        s = s.with(v);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writes_lines_with_metadata() {
        let f = Family::new([[0usize, 2].into_iter().collect(), [1usize, 3].into_iter().collect()]);
        let text = write_family(&f, &[("graph", "P(4)^1".into()), ("r", "2".into())]);
        assert_eq!(text, "# graph: P(4)^1\n# r: 2\n0,2\n1,3\n");
        let (back, meta) = parse_family(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(meta[1], ("r".to_string(), "2".to_string()));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse_family("0,2\n3,1\n"), Err(Error::FamilyFormat { line: 2, .. })));
        assert!(matches!(parse_family("x"), Err(Error::FamilyFormat { line: 1, .. })));
        assert!(matches!(parse_family("64"), Err(Error::FamilyFormat { .. })));
    }

    proptest! {
        #[test]
        fn round_trip(bits in prop::collection::vec(any::<u64>(), 0..20)) {
            let f = Family::new(bits.into_iter().map(VertexSet::from_bits));
            let (back, _) = parse_family(&write_family(&f, &[])).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
