//! Macaulay expansions, the growth bound `a^<d>`, O-sequences, and the
//! lexsegment ideal realizing a prescribed Hilbert function.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hilbert;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_j, j)` with
/// `a_d > a_{d-1} > ... > a_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayExpansion {
    degree: u32,
    tops: Vec<u64>,
}

impl MacaulayExpansion {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `(a_i, i)` pairs, highest `i` first.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.tops
            .iter()
            .enumerate()
            .map(move |(k, &top)| (top, self.degree - k as u32))
    }

    pub fn value(&self) -> BigUint {
        self.terms().map(|(a, i)| binomial(a, i as u64)).sum()
    }

    /// `a^<d>`: every `C(a_i, i)` replaced by `C(a_i + 1, i + 1)`.
    pub fn growth(&self) -> BigUint {
        self.terms()
            .map(|(a, i)| binomial(a + 1, i as u64 + 1))
            .sum()
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(a, i)| format!("C({a},{i})")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Greedy `d`-th Macaulay expansion of `a`.
pub fn macaulay_expansion(a: u64, d: u32) -> Result<MacaulayExpansion> {
    if a == 0 {
        return Err(Error::InvalidArgument("Macaulay expansion needs a >= 1".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("Macaulay expansion needs d >= 1".into()));
    }
    Ok(expand(a, d))
}

fn expand(a: u64, d: u32) -> MacaulayExpansion {
    let mut tops = Vec::new();
    let mut rem = a;
    let mut i = d as u64;
    while rem > 0 && i >= 1 {
        let top = largest_top(rem, i);
        let c = binomial(top, i).to_u64().expect("C(top, i) <= rem");
        tops.push(top);
        rem -= c;
        i -= 1;
    }
    MacaulayExpansion { degree: d, tops }
}

/// Largest `t` with `C(t, i) <= a`, for `a, i >= 1`.
fn largest_top(a: u64, i: u64) -> u64 {
    if i == 1 {
        return a;
    }
    // C(t, i) grows in t; walk up from t = i using C(t+1, i) = C(t, i) (t+1) / (t+1-i).
    // The running value never exceeds a * (t + 1), which fits in u128.
    let a = a as u128;
    let mut t = i as u128;
    let mut c: u128 = 1;
    loop {
        let next = c * (t + 1) / (t + 1 - i as u128);
        if next > a {
            return t as u64;
        }
        c = next;
        t += 1;
    }
}

/// `a^<d>`, with `0^<d> = 0`.
pub fn macaulay_growth(a: u64, d: u32) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::InvalidArgument("Macaulay growth needs d >= 1".into()));
    }
    if a == 0 {
        return Ok(BigUint::zero());
    }
    Ok(expand(a, d).growth())
}

/// Behaviour of a Hilbert function past its listed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tail {
    /// `H(k) = c` for every `k` beyond the listed values.
    Constant(u64),
    /// `H(k + 1) = H(k)^<k>` beyond the listed values.
    MaxGrowth,
}

/// A Hilbert function given by finitely many values plus a tail rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunctionSpec {
    pub initial: Vec<u64>,
    pub tail: Tail,
}

/// Outcome of [`is_o_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OSequenceVerdict {
    Valid,
    /// `H(degree + 1) = value > bound`, where the bound is `H(degree)^<degree>`
    /// (or `n` when `degree = 0`).
    Violation {
        degree: usize,
        value: u64,
        bound: BigUint,
    },
}

impl OSequenceVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, OSequenceVerdict::Valid)
    }

    pub(crate) fn into_result(self) -> Result<()> {
        match self {
            OSequenceVerdict::Valid => Ok(()),
            OSequenceVerdict::Violation {
                degree,
                value,
                bound,
            } => Err(Error::NotOSequence {
                degree,
                next: degree + 1,
                value,
                bound: bound.to_string(),
            }),
        }
    }
}

impl HilbertFunctionSpec {
    pub fn constant(initial: Vec<u64>, c: u64) -> Self {
        HilbertFunctionSpec {
            initial,
            tail: Tail::Constant(c),
        }
    }

    pub fn max_growth(initial: Vec<u64>) -> Self {
        HilbertFunctionSpec {
            initial,
            tail: Tail::MaxGrowth,
        }
    }

    /// Index `t` of the last listed value.
    pub fn last_listed(&self) -> usize {
        self.initial.len() - 1
    }

    pub fn validate(&self) -> Result<()> {
        match self.initial.first() {
            None => Err(Error::MalformedSpec("no initial values".into())),
            Some(1) => Ok(()),
            Some(v) => Err(Error::MalformedSpec(format!("H(0) must be 1, got {v}"))),
        }
    }

    /// `H(k)`. A max-growth tail after only `H(0)` is the full ring, which
    /// is why the variable count is needed.
    pub fn value(&self, k: usize, n: usize) -> BigUint {
        if let Some(&v) = self.initial.get(k) {
            return BigUint::from(v);
        }
        match self.tail {
            Tail::Constant(c) => BigUint::from(c),
            Tail::MaxGrowth => {
                let t = self.last_listed();
                if t == 0 {
                    return crate::combinatorics::monomial_count(n, k as u64);
                }
                let mut h = BigUint::from(self.initial[t]);
                for j in t..k {
                    let a = h.to_u64().expect("Hilbert value fits in u64");
                    h = expand_or_zero(a, j as u32);
                }
                h
            }
        }
    }

    /// Degree from which `H` is known to stay constant with no generators
    /// of the lex ideal beyond it, or `None` for max-growth tails.
    ///
    /// For `k >= c` the expansion of `c` in degree `k` is `c` unit terms
    /// `C(k,k) + ... + C(k-c+1, k-c+1)`, so `c^<k> = c`: a constant tail
    /// from such a degree on never forces a new generator.
    fn stable_from(&self) -> Option<usize> {
        match self.tail {
            Tail::Constant(c) => Some((c as usize).max(self.initial.len())),
            Tail::MaxGrowth => None,
        }
    }
}

fn expand_or_zero(a: u64, d: u32) -> BigUint {
    if a == 0 {
        BigUint::zero()
    } else {
        expand(a, d).growth()
    }
}

/// Macaulay's criterion: `H(0) = 1`, `H(1) <= n` and
/// `H(k + 1) <= H(k)^<k>` for all `k >= 1`.
pub fn is_o_sequence(spec: &HilbertFunctionSpec, n: usize) -> Result<OSequenceVerdict> {
    spec.validate()?;
    let h1 = spec.value(1, n);
    if h1 > BigUint::from(n) {
        return Ok(OSequenceVerdict::Violation {
            degree: 0,
            value: h1.to_u64().unwrap_or(u64::MAX),
            bound: BigUint::from(n),
        });
    }
    // Constant tails: past `stable_from` the bound holds with equality.
    // Max-growth tails: past the listed values it holds by definition.
    let last = match spec.stable_from() {
        Some(k) => k,
        None => spec.last_listed(),
    };
    for k in 1..last.max(1) {
        let hk = spec.value(k, n);
        let next = spec.value(k + 1, n);
        let hk = hk.to_u64().expect("listed Hilbert value fits in u64");
        let bound = expand_or_zero(hk, k as u32);
        if next > bound {
            return Ok(OSequenceVerdict::Violation {
                degree: k,
                value: next.to_u64().unwrap_or(u64::MAX),
                bound,
            });
        }
    }
    Ok(OSequenceVerdict::Valid)
}

/// The lexsegment ideal of `K[x_1..x_n]` whose quotient has Hilbert
/// function `spec`.
///
/// Degree by degree, the standard monomials of the ideal generated so far
/// are the degree-`k` multiples of the previous standard monomials all of
/// whose degree-`(k-1)` divisors are standard. The lex-greatest of them
/// beyond the `H(k)` allowed become new generators. Generation stops once
/// `H(k)^<k> = H(k+1)` is guaranteed for all later `k` (see
/// `HilbertFunctionSpec::stable_from`). The result's Hilbert function is
/// checked against `spec` before returning.
pub fn lex_ideal_from_hf(spec: &HilbertFunctionSpec, n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    is_o_sequence(spec, n)?.into_result()?;
    let stop = spec.stable_from().unwrap_or(spec.last_listed());

    let mut generators: Vec<Monomial> = Vec::new();
    let mut standard: Vec<Monomial> = vec![Monomial::one(n)?];
    for k in 1..=stop {
        let target = spec
            .value(k, n)
            .to_usize()
            .ok_or_else(|| Error::InvalidArgument(format!("H({k}) too large")))?;
        let mut candidates = standard_successors(&standard, n);
        if candidates.len() < target {
            return Err(Error::Inconsistent(format!(
                "degree {k}: only {} candidates for H = {target}",
                candidates.len()
            )));
        }
        candidates.sort_by(|a, b| b.cmp(a));
        let split = candidates.len() - target;
        standard = candidates.split_off(split);
        generators.extend(candidates);
    }

    let ideal = MonomialIdeal::new(n, generators)?;
    if !ideal.is_unit() {
        let series = hilbert::hilbert_series(&ideal)?;
        for k in 0..=stop + 3 {
            let want = spec.value(k, n);
            let got = series.coefficient_biguint(k as u64);
            if got != want {
                return Err(Error::Inconsistent(format!(
                    "lex ideal has H({k}) = {got}, expected {want}"
                )));
            }
        }
    }
    Ok(ideal)
}

/// Degree-`k` monomials all of whose degree-`(k-1)` divisors lie in
/// `standard` (itself closed under division).
fn standard_successors(standard: &[Monomial], n: usize) -> Vec<Monomial> {
    use std::collections::HashSet;
    let known: HashSet<&Monomial> = standard.iter().collect();
    let mut out: HashSet<Monomial> = HashSet::new();
    for v in standard {
        for i in 0..n {
            let u = v.times_var(i, 1);
            if out.contains(&u) {
                continue;
            }
            let closed = u.support().all(|j| {
                let mut e = u.exponents().to_vec();
                e[j] -= 1;
                known.contains(&Monomial::from_vec(e))
            });
            if closed {
                out.insert(u);
            }
        }
    }
    out.into_iter().collect()
}
