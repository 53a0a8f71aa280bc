//! Native JSON encoding of an LTS.
//!
//! ```json
//! { "states": 2, "initial": 0, "alphabet": ["a"], "transitions": [[0, "a", 1]] }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lts::Lts;

#[derive(Debug, Serialize, Deserialize)]
struct NativeLts {
    states: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    initial: Option<usize>,
    alphabet: Vec<String>,
    transitions: Vec<(usize, String, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

pub fn parse_native(text: &str) -> Result<Lts> {
    let doc: NativeLts = serde_json::from_str(text)?;
    let mut lts = Lts::new(doc.states, doc.alphabet)?;
    if let Some(i) = doc.initial {
        lts = lts.with_initial(i)?;
    }
    if let Some(names) = doc.names {
        lts = lts.with_names(names)?;
    }
    for (src, label, dst) in &doc.transitions {
        lts.add_labelled(*src, label, *dst)?;
    }
    Ok(lts)
}

pub fn write_native(lts: &Lts) -> String {
    let doc = NativeLts {
        states: lts.state_count(),
        initial: lts.initial(),
        alphabet: lts.alphabet().to_vec(),
        transitions: lts
            .transitions()
            .map(|(s, a, t)| (s, lts.alphabet()[a].clone(), t))
            .collect(),
        names: lts.names().map(<[String]>::to_vec),
    };
    serde_json::to_string_pretty(&doc).expect("LTS documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn reads_triples() {
        let lts = parse_native(
            r#"{"states": 2, "initial": 0, "alphabet": ["a", "b"], "transitions": [[0, "a", 1], [1, "b", 1]]}"#,
        )
        .unwrap();
        assert_eq!(lts.transition_count(), 2);
        assert_eq!(lts.initial(), Some(0));
        assert_eq!(parse_native(&write_native(&lts)).unwrap(), lts);
    }

    #[test]
    fn rejects_unknown_labels_and_states() {
        let e = parse_native(r#"{"states": 1, "alphabet": ["a"], "transitions": [[0, "b", 0]]}"#);
        assert!(matches!(e, Err(Error::UnknownAction(_))));
        let e = parse_native(r#"{"states": 1, "alphabet": ["a"], "transitions": [[0, "a", 3]]}"#);
        assert!(matches!(e, Err(Error::StateOutOfRange { .. })));
        assert!(matches!(parse_native("{"), Err(Error::Json(_))));
    }
}
