//! One-shot report of every invariant of `S/I`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::betti::BettiTable;
use crate::eliahou_kervaire::ek_betti_table;
use crate::error::{Error, Result};
use crate::hilbert::{self, HPolynomial, HilbertSeries};
use crate::ideal::MonomialIdeal;
use crate::oracle::bruteforce_betti_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiMethod {
    EliahouKervaire,
    Oracle,
}

impl fmt::Display for BettiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BettiMethod::EliahouKervaire => "eliahou-kervaire",
            BettiMethod::Oracle => "koszul-oracle",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub ideal: MonomialIdeal,
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub pd: usize,
    pub series: HilbertSeries,
    pub h: HPolynomial,
    pub betti: BettiTable,
    pub method: BettiMethod,
    /// `None` for the zero ideal, where the flags are not defined.
    pub stable: Option<bool>,
    pub strongly_stable: Option<bool>,
    pub lexsegment: Option<bool>,
    pub hilbert_prefix: Vec<BigUint>,
}

/// Computes everything; Betti numbers come from Eliahou–Kervaire when `I`
/// is stable and from the Koszul oracle otherwise (or when forced).
pub fn analyze(ideal: &MonomialIdeal, force_oracle: bool, prefix_len: usize) -> Result<Analysis> {
    ideal.require_proper("the analysis")?;
    let series = hilbert::hilbert_series(ideal)?;
    let (stable, strongly_stable, lexsegment) = if ideal.is_zero() {
        (None, None, None)
    } else {
        (
            Some(ideal.is_stable()?),
            Some(ideal.is_strongly_stable()?),
            Some(ideal.is_lexsegment()?),
        )
    };
    let use_ek = !force_oracle && stable.unwrap_or(true);
    let (betti, method) = if use_ek {
        (ek_betti_table(ideal)?, BettiMethod::EliahouKervaire)
    } else {
        (bruteforce_betti_table(ideal)?, BettiMethod::Oracle)
    };
    let hilbert_prefix = (0..prefix_len as u64)
        .map(|k| series.coefficient_biguint(k))
        .collect();
    Ok(Analysis {
        ideal: ideal.clone(),
        dim: series.denominator_exponent(),
        depth: ideal.n() - betti.projective_dimension(),
        reg: betti.regularity(),
        pd: betti.projective_dimension(),
        h: series.h_polynomial(),
        series,
        betti,
        method,
        stable,
        strongly_stable,
        lexsegment,
        hilbert_prefix,
    })
}

impl Analysis {
    pub fn h_degree(&self) -> usize {
        self.h.degree()
    }

    /// `(dim - depth) - (deg h - reg)`, never negative.
    pub fn inequality_slack(&self) -> i64 {
        (self.dim as i64 - self.depth as i64) - (self.h_degree() as i64 - self.reg as i64)
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.dim == self.depth
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let gens: Vec<&[u32]> = self.ideal.generators().iter().map(|g| g.exponents()).collect();
        let h = self.h.to_i64_vec().ok_or_else(|| {
            Error::InvalidArgument("h-polynomial coefficient exceeds i64".into())
        })?;
        let prefix = self
            .hilbert_prefix
            .iter()
            .map(|c| {
                c.to_u64()
                    .ok_or_else(|| Error::InvalidArgument(format!("H = {c} exceeds u64")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(json!({
            "n": self.ideal.n(),
            "generators": gens,
            "dim": self.dim,
            "depth": self.depth,
            "reg": self.reg,
            "pd": self.pd,
            "hilbert_series": self.series.to_string(),
            "h_polynomial": h,
            "h_degree": self.h_degree(),
            "hilbert_function": prefix,
            "betti": self.betti.to_json()?,
            "betti_method": self.method.to_string(),
            "stable": self.stable,
            "strongly_stable": self.strongly_stable,
            "lexsegment": self.lexsegment,
            "inequality_slack": self.inequality_slack(),
        }))
    }
}

fn flag(v: Option<bool>) -> String {
    v.map_or("n/a".to_string(), |b| b.to_string())
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.ideal.n())?;
        writeln!(f, "generators ({}): {}", self.ideal.generators().len(), self.ideal)?;
        writeln!(f, "dim: {}", self.dim)?;
        writeln!(f, "depth: {}", self.depth)?;
        writeln!(f, "reg: {}", self.reg)?;
        writeln!(f, "pd: {}", self.pd)?;
        writeln!(f, "hilbert series: {}", self.series)?;
        let prefix: Vec<String> = self.hilbert_prefix.iter().map(|v| v.to_string()).collect();
        writeln!(f, "hilbert function: {}, ...", prefix.join(", "))?;
        let h: Vec<String> = self.h.coefficients().iter().map(|c| c.to_string()).collect();
        writeln!(f, "h-polynomial: [{}]", h.join(", "))?;
        writeln!(f, "h-degree: {}", self.h_degree())?;
        writeln!(f, "stable: {}", flag(self.stable))?;
        writeln!(f, "strongly stable: {}", flag(self.strongly_stable))?;
        writeln!(f, "lexsegment: {}", flag(self.lexsegment))?;
        writeln!(
            f,
            "slack (dim - depth) - (deg h - reg): {}",
            self.inequality_slack()
        )?;
        writeln!(f, "betti table ({}):", self.method)?;
        write!(f, "{}", self.betti)
    }
}
