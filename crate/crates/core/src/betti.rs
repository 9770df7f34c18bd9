//! Graded Betti tables of `S/I`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::poly::{self, IntPoly};

/// `β_{i,j}(S/I)` with homological degree `i` and internal degree `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), BigUint>,
    projective_dimension: usize,
    regularity: usize,
}

impl BettiTable {
    /// Builds a table from `(i, j) -> β_{i,j}`; zero entries are dropped.
    pub fn from_entries(entries: BTreeMap<(usize, usize), BigUint>) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if let Some(&(i, j)) = entries.keys().find(|(i, j)| j < i) {
            return Err(Error::Inconsistent(format!("β_{{{i},{j}}} below the diagonal")));
        }
        let projective_dimension = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let regularity = entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        Ok(BettiTable {
            entries,
            projective_dimension,
            regularity,
        })
    }

    /// Table of `S/I` from the Betti numbers of `I`: `β_{p,q}(S/I) = β_{p-1,q}(I)`.
    pub fn from_ideal_betti(ideal_entries: BTreeMap<(usize, usize), BigUint>) -> Result<Self> {
        let mut entries: BTreeMap<(usize, usize), BigUint> = ideal_entries
            .into_iter()
            .map(|((i, j), v)| ((i + 1, j), v))
            .collect();
        entries.insert((0, 0), BigUint::one());
        Self::from_entries(entries)
    }

    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.entries
    }

    pub fn projective_dimension(&self) -> usize {
        self.projective_dimension
    }

    /// `max { j - i : β_{i,j} != 0 }`
    pub fn regularity(&self) -> usize {
        self.regularity
    }

    /// Rows indexed by `j - i`, columns by `i`.
    pub fn rows(&self) -> Vec<Vec<BigUint>> {
        (0..=self.regularity)
            .map(|row| {
                (0..=self.projective_dimension)
                    .map(|i| self.get(i, i + row))
                    .collect()
            })
            .collect()
    }

    /// Sum of `β_{i,j}` over `j`.
    pub fn total(&self, i: usize) -> BigUint {
        self.entries
            .iter()
            .filter(|((p, _), _)| *p == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the K-polynomial of `S/I`.
    pub fn euler_characteristic(&self) -> Vec<BigInt> {
        let mut out: IntPoly = Vec::new();
        for (&(i, j), v) in &self.entries {
            let mut term = vec![BigInt::zero(); j + 1];
            term[j] = if i % 2 == 0 {
                BigInt::from(v.clone())
            } else {
                -BigInt::from(v.clone())
            };
            poly::add_assign(&mut out, &term);
        }
        out
    }

    /// `{"pd": p, "reg": r, "rows": [[...], ...]}`
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let rows = self
            .rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        v.to_u64().ok_or_else(|| {
                            Error::InvalidArgument(format!("Betti number {v} exceeds u64"))
                        })
                    })
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(json!({
            "pd": self.projective_dimension,
            "reg": self.regularity,
            "rows": rows,
        }))
    }
}

impl fmt::Display for BettiTable {
    /// Dotted layout: one line per row `j - i`, cells right-aligned to the
    /// column width, `.` for zero, each cell followed by a space.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| if v.is_zero() { ".".to_string() } else { v.to_string() })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..=self.projective_dimension)
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(1))
            .collect();
        for row in &cells {
            for (cell, w) in row.iter().zip(&widths) {
                write!(f, "{cell:>w$} ")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
