//! The ring file format: a JSON object with keys `dual`, `labels`, `rank`
//! and `tensor`, where `tensor[i][j][k] = N_{ij}^k`.

use std::fmt::Write as _;

use serde::Deserialize;
use thiserror::Error;

use fusring::{FusionRing, RingError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("file is not valid UTF-8")]
    Encoding(#[from] std::str::Utf8Error),
    #[error("{message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("negative fusion coefficient at {field}: {value}")]
    Negative { field: String, value: i64 },
    #[error(transparent)]
    Structure(#[from] RingError),
}

fn field(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    rank: i64,
    labels: Vec<String>,
    dual: Vec<i64>,
    tensor: Vec<Vec<Vec<i64>>>,
}

fn check_len(name: &str, len: usize, rank: usize) -> Result<(), ParseError> {
    if len == rank {
        Ok(())
    } else {
        Err(field(name, format!("expected {rank} entries, found {len}")))
    }
}

/// Parses a ring file into a structurally well-formed ring. Axioms are not
/// checked here.
pub fn parse_ring(bytes: &[u8]) -> Result<FusionRing, ParseError> {
    let text = std::str::from_utf8(bytes)?;
    let raw: RawRing = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.rank < 1 {
        return Err(field("rank", format!("must be at least 1, got {}", raw.rank)));
    }
    let rank = raw.rank as usize;
    check_len("labels", raw.labels.len(), rank)?;
    check_len("dual", raw.dual.len(), rank)?;
    check_len("tensor", raw.tensor.len(), rank)?;
    let dual = raw
        .dual
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            usize::try_from(d)
                .ok()
                .filter(|&d| d < rank)
                .ok_or_else(|| field(format!("dual[{i}]"), format!("{d} is not an index below {rank}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut tensor = Vec::with_capacity(rank);
    for (i, plane) in raw.tensor.iter().enumerate() {
        check_len(&format!("tensor[{i}]"), plane.len(), rank)?;
        let mut rows = Vec::with_capacity(rank);
        for (j, row) in plane.iter().enumerate() {
            check_len(&format!("tensor[{i}][{j}]"), row.len(), rank)?;
            let row = row
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    u64::try_from(v).map_err(|_| ParseError::Negative {
                        field: format!("tensor[{i}][{j}][{k}]"),
                        value: v,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        tensor.push(rows);
    }
    Ok(FusionRing::new(raw.labels, dual, tensor)?)
}

fn json_list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical serialization: keys sorted, one `tensor[i]` plane per line,
/// trailing newline.
pub fn emit_ring(ring: &FusionRing) -> String {
    let labels = ring
        .labels()
        .iter()
        .map(|l| serde_json::to_string(l).expect("strings serialize"));
    let tensor = ring.tensor();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"dual\": {},", json_list(ring.duals()));
    let _ = writeln!(out, "  \"labels\": {},", json_list(labels));
    let _ = writeln!(out, "  \"rank\": {},", ring.rank());
    out.push_str("  \"tensor\": [\n");
    for (i, plane) in tensor.iter().enumerate() {
        let rows = json_list(plane.iter().map(json_list));
        let sep = if i + 1 < tensor.len() { "," } else { "" };
        let _ = writeln!(out, "    {rows}{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fusring::classifier::families::{family_eq7, family_neargroup_z3, fibonacci};

    const FIB: &str = r#"{
  "dual": [0, 1],
  "labels": ["1", "t"],
  "rank": 2,
  "tensor": [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 1]]
  ]
}
"#;

    #[test]
    fn fib_file_round_trips_byte_for_byte() {
        let ring = parse_ring(FIB.as_bytes()).unwrap();
        assert_eq!(ring, fibonacci());
        assert_eq!(emit_ring(&ring), FIB);
    }

    #[test]
    fn key_order_and_whitespace_do_not_matter() {
        let compact = r#"{"tensor":[[[1,0],[0,1]],[[0,1],[1,1]]],"rank":2,"dual":[0,1],"labels":["1","t"]}"#;
        assert_eq!(emit_ring(&parse_ring(compact.as_bytes()).unwrap()), FIB);
    }

    #[test]
    fn near_group_duality_accepted() {
        let ring = family_neargroup_z3(2);
        let back = parse_ring(emit_ring(&ring).as_bytes()).unwrap();
        assert_eq!(back.duals(), &[0, 2, 1, 3]);
        assert_eq!(back, ring);
    }

    #[test]
    fn fibonacci_subring_member_row() {
        let text = emit_ring(&family_eq7(1, 0));
        let ring = parse_ring(text.as_bytes()).unwrap();
        // X⊗Y = Y ⊕ Z
        assert_eq!(ring.tensor()[1][2], vec![0, 0, 1, 1]);
        assert!(text.contains("[[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 0]]"));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let negative = FIB.replace("[[0, 1], [1, 1]]", "[[0, 1], [1, -1]]");
        let err = parse_ring(negative.as_bytes()).unwrap_err();
        assert_eq!(err.to_string(), "negative fusion coefficient at tensor[1][1][1]: -1");

        let short = FIB.replace("[[0, 1], [1, 1]]", "[[0, 1], [1]]");
        let err = parse_ring(short.as_bytes()).unwrap_err();
        assert_eq!(err.to_string(), "tensor[1][1]: expected 2 entries, found 1");

        let bad_dual = FIB.replace("\"dual\": [0, 1]", "\"dual\": [0, 7]");
        assert!(parse_ring(bad_dual.as_bytes()).unwrap_err().to_string().starts_with("dual[1]"));

        let extra = FIB.replace("\"rank\": 2,", "\"rank\": 2, \"name\": \"fib\",");
        assert!(matches!(parse_ring(extra.as_bytes()), Err(ParseError::Syntax { .. })));

        let broken = FIB.replace("\"rank\": 2,", "\"rank\": 2");
        match parse_ring(broken.as_bytes()) {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn structural_errors_surface() {
        let not_involution = FIB.replace("\"dual\": [0, 1]", "\"dual\": [1, 0]");
        assert!(matches!(
            parse_ring(not_involution.as_bytes()),
            Err(ParseError::Structure(_))
        ));
    }
}
