//! Lexsegment ideals with prescribed regularity `r` and h-polynomial
//! degree `s`, plus the verbatim generator lists used as fixtures.
//!
//! For `r <= s` the ideal is `x_1^r (x_1, ..., x_{s-r+1})` in `s - r + 1`
//! variables. For `s < r` it is the lex ideal in `r + 2` variables with
//! Hilbert function `1, r+2, ..., r+2, r+1, r+1, ...` (`r + 2` repeated
//! `s - 1` times).

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::eliahou_kervaire;
use crate::error::{Error, Result};
use crate::hilbert::{self, HPolynomial};
use crate::ideal::MonomialIdeal;
use crate::macaulay::{lex_ideal_from_hf, HilbertFunctionSpec};
use crate::monomial::Monomial;
use crate::poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    FirstStep,
    SecondStep,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::FirstStep => "first-step",
            Branch::SecondStep => "second-step",
        })
    }
}

/// `(n, reg S/I, deg h, dim S/I, depth S/I)`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub reg: usize,
    pub h_degree: usize,
    pub dim: usize,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub r: u32,
    pub s: u32,
    pub branch: Branch,
    pub ideal: MonomialIdeal,
    pub predicted: Invariants,
    pub measured: Invariants,
    pub predicted_h: Vec<BigInt>,
    pub measured_h: Vec<BigInt>,
    pub lexsegment: bool,
}

impl ConstructionReport {
    fn measure(
        r: u32,
        s: u32,
        branch: Branch,
        ideal: MonomialIdeal,
        predicted: Invariants,
        predicted_h: Vec<BigInt>,
    ) -> Result<Self> {
        let series = hilbert::hilbert_series(&ideal)?;
        let measured = Invariants {
            n: ideal.n(),
            reg: eliahou_kervaire::regularity(&ideal)?,
            h_degree: series.h_polynomial().degree(),
            dim: series.denominator_exponent(),
            depth: eliahou_kervaire::depth(&ideal)?,
        };
        let lexsegment = ideal.is_lexsegment()?;
        Ok(ConstructionReport {
            r,
            s,
            branch,
            ideal,
            predicted,
            measured,
            predicted_h,
            measured_h: series.numerator().to_vec(),
            lexsegment,
        })
    }

    /// Predicted and measured values agree, the ideal is lexsegment, and
    /// `n <= max(r, s) + 2`.
    pub fn is_consistent(&self) -> bool {
        self.predicted == self.measured
            && self.predicted_h == self.measured_h
            && self.lexsegment
            && self.measured.n <= self.r.max(self.s) as usize + 2
            && self.measured.reg == self.r as usize
            && self.measured.h_degree == self.s as usize
    }

    pub fn check(self) -> Result<Self> {
        if self.is_consistent() {
            Ok(self)
        } else {
            Err(Error::Verification(format!(
                "construction for (r, s) = ({}, {}) diverged:\n{self}",
                self.r, self.s
            )))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        // construction coefficients are 0, ±1 or r + 1
        let h = |c: &[BigInt]| -> Vec<i64> { c.iter().map(|x| x.to_i64().expect("small")).collect() };
        serde_json::json!({
            "r": self.r,
            "s": self.s,
            "branch": self.branch,
            "predicted": self.predicted,
            "measured": self.measured,
            "predicted_h": h(&self.predicted_h),
            "measured_h": h(&self.measured_h),
            "lexsegment": self.lexsegment,
            "consistent": self.is_consistent(),
        })
    }
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = |c: &[BigInt]| {
            HPolynomial::from_coefficients(c.to_vec()).to_string()
        };
        writeln!(f, "branch: {} (r = {}, s = {})", self.branch, self.r, self.s)?;
        writeln!(
            f,
            "ideal: n = {}, {} minimal generators",
            self.ideal.n(),
            self.ideal.generators().len()
        )?;
        writeln!(f, "{:<10}{:>4}{:>5}{:>7}{:>5}{:>7}", "", "n", "reg", "deg h", "dim", "depth")?;
        for (label, v) in [("predicted", &self.predicted), ("measured", &self.measured)] {
            writeln!(
                f,
                "{:<10}{:>4}{:>5}{:>7}{:>5}{:>7}",
                label, v.n, v.reg, v.h_degree, v.dim, v.depth
            )?;
        }
        writeln!(f, "h(t) predicted: {}", h(&self.predicted_h))?;
        writeln!(f, "h(t) measured:  {}", h(&self.measured_h))?;
        writeln!(f, "lexsegment: {}", self.lexsegment)?;
        write!(f, "consistent: {}", self.is_consistent())
    }
}

fn check_positive(r: u32, s: u32) -> Result<()> {
    if r == 0 || s == 0 {
        return Err(Error::ParameterRange {
            r,
            s,
            reason: "r and s must both be at least 1",
        });
    }
    Ok(())
}

/// `x_1^{r+1}, x_1^r x_2, ..., x_1^r x_{s-r+1}` in `s - r + 1` variables.
pub fn construct_first_step(r: u32, s: u32) -> Result<ConstructionReport> {
    check_positive(r, s)?;
    if r > s {
        return Err(Error::ParameterRange {
            r,
            s,
            reason: "the first step needs r <= s",
        });
    }
    let n = (s - r + 1) as usize;
    let gens = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[0] = r;
            e[i] += 1;
            Monomial::new(e)
        })
        .collect::<Result<Vec<_>>>()?;
    let ideal = MonomialIdeal::new(n, gens)?;

    // 1 + t + ... + t^{r-1} + t^r (1 - t)^{s-r}
    let mut h: Vec<BigInt> = vec![BigInt::from(1); r as usize];
    let mut tail = poly::from_i64(&[1]);
    for _ in 0..s - r {
        tail = poly::mul(&tail, &poly::one_minus_power(1));
    }
    poly::add_assign(&mut h, &poly::shift(&tail, r as usize));

    let predicted = Invariants {
        n,
        reg: r as usize,
        h_degree: s as usize,
        dim: (s - r) as usize,
        depth: 0,
    };
    ConstructionReport::measure(r, s, Branch::FirstStep, ideal, predicted, h)?.check()
}

/// The Hilbert function driving the second step.
pub fn second_step_spec(r: u32, s: u32) -> HilbertFunctionSpec {
    let mut initial = vec![1u64];
    initial.extend(std::iter::repeat_n(r as u64 + 2, s as usize - 1));
    HilbertFunctionSpec::constant(initial, r as u64 + 1)
}

/// Lex ideal in `r + 2` variables with Hilbert function
/// `1, r+2 (s-1 times), r+1, r+1, ...`.
pub fn construct_second_step(r: u32, s: u32) -> Result<ConstructionReport> {
    check_positive(r, s)?;
    if s >= r {
        return Err(Error::ParameterRange {
            r,
            s,
            reason: "the second step needs s < r",
        });
    }
    let n = r as usize + 2;
    let ideal = lex_ideal_from_hf(&second_step_spec(r, s), n)?;

    // 1 + (r+1) t - t^s; for s = 1 the linear terms merge into 1 + r t
    let mut h = poly::from_i64(&[1, r as i64 + 1]);
    poly::add_assign(&mut h, &poly::shift(&poly::from_i64(&[-1]), s as usize));

    let predicted = Invariants {
        n,
        reg: r as usize,
        h_degree: s as usize,
        dim: 1,
        depth: 0,
    };
    ConstructionReport::measure(r, s, Branch::SecondStep, ideal, predicted, h)?.check()
}

/// Dispatches on `r <= s` (first step) versus `s < r` (second step).
pub fn construct(r: u32, s: u32) -> Result<ConstructionReport> {
    check_positive(r, s)?;
    if r <= s {
        construct_first_step(r, s)
    } else {
        construct_second_step(r, s)
    }
}

const R4_S2: &str = "x1^2 x1x2 x1x3 x1x4 x1x5 x1x6 x2^2 x2x3 x2x4 x2x5 x2x6 \
    x3^2 x3x4 x3x5 x3x6 x4^2 x4x5^2 x4x5x6 x4x6^3 x5^5";

const DIM2_REG6: &str = "x1^2 x1x2 x1x3 x1x4 x1x5 x2^2 x2x3^2 x2x3x4 x2x3x5 \
    x2x4^3 x2x4^2x5 x2x4x5^3 x2x5^4 x3^6 x3^5x4 x3^5x5 x3^4x4^3";

/// Named generator lists: `r4-s2` (20 generators, n = 6) and
/// `dim2-reg6` (17 generators, n = 5).
pub fn fixture(name: &str) -> Result<MonomialIdeal> {
    match name {
        "r4-s2" => MonomialIdeal::parse(6, R4_S2),
        "dim2-reg6" => MonomialIdeal::parse(5, DIM2_REG6),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

pub const FIXTURE_NAMES: [&str; 2] = ["r4-s2", "dim2-reg6"];
