//! Monomials of `K[x_1, ..., x_n]` and the pure lexicographic order.
//!
//! Variables are ordered `x_1 > x_2 > ... > x_n`. Exponent vectors are
//! stored 0-based, so position `i` holds the exponent of `x_{i+1}`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// A monomial, stored as its exponent vector.
///
/// The derived `Ord` is the pure lex order whenever both operands live in
/// the same ring; use [`Monomial::lex_cmp`] when that is not guaranteed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::NoVariables);
        }
        Ok(Monomial { exponents })
    }

    pub(crate) fn from_vec(exponents: Vec<u32>) -> Self {
        debug_assert!(!exponents.is_empty());
        Monomial { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    /// The variable `x_index` (1-based, as written in `x_1, ..., x_n`).
    pub fn var(n: usize, index: usize) -> Result<Self> {
        if index == 0 || index > n {
            return Err(Error::InvalidArgument(format!(
                "variable x{index} outside x1..x{n}"
            )));
        }
        let mut e = vec![0; n];
        e[index - 1] = 1;
        Self::new(e)
    }

    /// Parses forms like `x1^2*x3`, `x4x5^2` or `1`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut exps = vec![0u32; n];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if s == "1" {
            return Self::new(exps);
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let read_int = |pos: &mut usize| -> Result<u64> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos]
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("expected a number in `{text}`")))
        };
        while pos < bytes.len() {
            match bytes[pos] {
                b'*' => pos += 1,
                b'x' => {
                    pos += 1;
                    let idx = read_int(&mut pos)? as usize;
                    if idx == 0 || idx > n {
                        return Err(Error::Parse(format!(
                            "variable x{idx} outside x1..x{n} in `{text}`"
                        )));
                    }
                    let mut e = 1u64;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        e = read_int(&mut pos)?;
                    }
                    let e = u32::try_from(e)
                        .map_err(|_| Error::Parse(format!("exponent too large in `{text}`")))?;
                    exps[idx - 1] += e;
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected `{}` in `{text}`",
                        other as char
                    )))
                }
            }
        }
        Self::new(exps)
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// 1-based index of the largest-index variable dividing `self`
    /// (`max(u)` in the Eliahou–Kervaire formula). `None` for `1`.
    pub fn max_index(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    /// 0-based indices of the variables dividing `self`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// Pure lex comparison with `x_1 > ... > x_n`.
    pub fn lex_cmp(&self, other: &Monomial) -> Result<Ordering> {
        self.check_ambient(other)?;
        Ok(self.exponents.cmp(&other.exponents))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial::from_vec(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial::from_vec(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a + b)
                .collect(),
        ))
    }

    /// `self * x_{i+1}^e` for a 0-based index `i`.
    pub(crate) fn times_var(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.exponents.clone();
        v[i] += e;
        Monomial::from_vec(v)
    }

    /// `x_{i+1} * self / x_{j+1}` for 0-based indices; requires `x_{j+1} | self`.
    pub(crate) fn shift(&self, j: usize, i: usize) -> Monomial {
        debug_assert!(self.exponents[j] > 0);
        let mut v = self.exponents.clone();
        v[j] -= 1;
        v[i] += 1;
        Monomial::from_vec(v)
    }

    /// Number of monomials of the same degree that are strictly lex-greater.
    pub fn lex_rank(&self) -> BigUint {
        let n = self.n();
        let mut rem = self.degree();
        let mut count = BigUint::zero();
        for (i, &e) in self.exponents.iter().enumerate().take(n - 1) {
            let e = e as u64;
            let k = (n - i - 1) as u64;
            // exponents e+1..=rem in position i, the rest spread over k variables
            if rem > e {
                count += binomial(rem - e - 1 + k, k);
            }
            rem -= e;
        }
        count
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Degree-`d` monomials in `n` variables, lex-descending.
#[derive(Clone, Debug)]
pub struct LexMonomials {
    current: Option<Vec<u32>>,
}

impl LexMonomials {
    pub fn new(n: usize, degree: u32) -> Self {
        let current = (n > 0).then(|| {
            let mut v = vec![0; n];
            v[0] = degree;
            v
        });
        LexMonomials { current }
    }
}

impl Iterator for LexMonomials {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.current.take()?;
        let n = cur.len();
        let out = Monomial::from_vec(cur.clone());
        if n > 1 {
            if let Some(i) = (0..n - 1).rev().find(|&i| cur[i] > 0) {
                let mut next = cur;
                let tail: u32 = next[i + 1..].iter().sum();
                next[i] -= 1;
                for e in &mut next[i + 1..] {
                    *e = 0;
                }
                next[i + 1] = tail + 1;
                self.current = Some(next);
            }
        }
        Some(out)
    }
}
