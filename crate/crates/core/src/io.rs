//! JSON lattice files: `{"elements": [...], "covers": [["lower", "upper"], ...]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{CoverPolicy, Lattice, LatticeError};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeFile {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub fn parse_lattice(text: &str, policy: CoverPolicy) -> Result<Lattice, ParseError> {
    let file: LatticeFile = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(Lattice::build(&file.elements, &file.covers, policy)?)
}

pub fn lattice_to_json(lattice: &Lattice) -> String {
    let file = LatticeFile {
        elements: lattice.names().to_vec(),
        covers: lattice
            .covers()
            .iter()
            .map(|&(lo, hi)| (lattice.name(lo).to_string(), lattice.name(hi).to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("lattice file serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::lattice_id;
    use crate::catalog::catalog;

    #[test]
    fn catalog_round_trip() {
        for name in ["diamond", "c2", "divisor:18", "boolean:3"] {
            let l = catalog(name).unwrap();
            let back = parse_lattice(&lattice_to_json(&l), CoverPolicy::Strict).unwrap();
            assert_eq!(back, l);
            assert_eq!(lattice_id(&back), lattice_id(&l));
        }
    }

    #[test]
    fn reports_json_position() {
        let err = parse_lattice("{\n  \"elements\": [\"a\",\n  \"covers\": []}", CoverPolicy::Strict)
            .unwrap_err();
        match err {
            ParseError::Json { line, .. } => assert!(line >= 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_reduced_covers() {
        let text = r#"{"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"], ["a", "c"]]}"#;
        assert!(matches!(
            parse_lattice(text, CoverPolicy::Strict),
            Err(ParseError::Lattice(LatticeError::RedundantCover(_, _)))
        ));
        assert_eq!(parse_lattice(text, CoverPolicy::Normalize).unwrap().covers().len(), 2);
    }

    #[test]
    fn validation_errors_surface() {
        let text = r#"{"elements": ["z", "x", "y"], "covers": [["z", "x"], ["z", "y"]]}"#;
        assert!(matches!(
            parse_lattice(text, CoverPolicy::Strict),
            Err(ParseError::Lattice(LatticeError::NotALattice(_)))
        ));
        let text = r#"{"elements": ["a-b"], "covers": []}"#;
        assert!(matches!(
            parse_lattice(text, CoverPolicy::Strict),
            Err(ParseError::Lattice(LatticeError::InvalidName(_)))
        ));
    }
}
