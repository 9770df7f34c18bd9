//! The ideal file format `{"n": <int>, "generators": [[e1,...,en], ...]}`.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Deserialize)]
struct IdealFile {
    n: usize,
    generators: Vec<Vec<u32>>,
}

/// Reads an ideal; generators need not be minimal. Unknown keys are ignored,
/// so a full analysis report reads back as its ideal.
pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let file: IdealFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let gens = file
        .generators
        .into_iter()
        .map(|e| {
            if e.len() != file.n {
                return Err(Error::AmbientMismatch {
                    expected: file.n,
                    found: e.len(),
                });
            }
            Monomial::new(e)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(file.n, gens)
}

/// Writes the minimal generators, lex-descending, with a trailing newline.
pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| {
            let e: Vec<String> = g.exponents().iter().map(u32::to_string).collect();
            format!("[{}]", e.join(","))
        })
        .collect();
    format!("{{\"n\": {}, \"generators\": [{}]}}\n", ideal.n(), gens.join(", "))
}
