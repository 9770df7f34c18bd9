//! Hilbert functions and series of monomial quotients `S/I`.
//!
//! Two independent engines produce the K-polynomial `N(t)` with
//! `F(S/I, t) = N(t) / (1 - t)^n`: inclusion–exclusion over subsets of the
//! generators and a pivot recursion on short exact sequences.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{LexMonomials, Monomial};
use crate::poly::{self, IntPoly};

/// Generator count above which inclusion–exclusion (2^count subsets) is refused.
pub const INCLUSION_EXCLUSION_MAX_GENERATORS: usize = 20;

/// `F(S/I, t) = h(t) / (1 - t)^d` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    denominator_exponent: usize,
}

impl HilbertSeries {
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> usize {
        self.denominator_exponent
    }

    /// Coefficient of `t^k` in the power series expansion.
    pub fn coefficient(&self, k: u64) -> BigInt {
        let d = self.denominator_exponent as u64;
        let mut acc = BigInt::zero();
        for (i, h) in self.numerator.iter().enumerate() {
            let i = i as u64;
            if i > k {
                break;
            }
            if d == 0 {
                if i == k {
                    acc += h;
                }
            } else {
                acc += h * BigInt::from(binomial(k - i + d - 1, d - 1));
            }
        }
        acc
    }

    pub(crate) fn coefficient_biguint(&self, k: u64) -> BigUint {
        self.coefficient(k)
            .to_biguint()
            .expect("Hilbert function values are non-negative")
    }

    pub fn h_polynomial(&self) -> HPolynomial {
        HPolynomial {
            coefficients: self.numerator.clone(),
        }
    }
}

impl fmt::Display for HilbertSeries {
    /// `(c0 + c1*t + ... + cs*t^s) / (1-t)^d`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / (1-t)^{}",
            render_poly(&self.numerator),
            self.denominator_exponent
        )
    }
}

/// The numerator `h_0 + h_1 t + ... + h_s t^s` of the reduced Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolynomial {
    coefficients: Vec<BigInt>,
}

impl HPolynomial {
    pub fn from_coefficients(mut coefficients: Vec<BigInt>) -> Self {
        poly::trim(&mut coefficients);
        HPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// `s = deg h`.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coefficients.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(&self.coefficients))
    }
}

fn render_poly(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, a) in c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = match k {
            0 => a.abs().to_string(),
            1 => format!("{}*t", a.abs()),
            _ => format!("{}*t^{}", a.abs(), k),
        };
        if out.is_empty() {
            if a.sign() == Sign::Minus {
                out.push('-');
            }
        } else {
            out.push_str(if a.sign() == Sign::Minus { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// K-polynomial by the default engine, the pivot recursion.
/// [`kpolynomial_inclusion_exclusion`] is the independent second route.
pub fn kpolynomial(ideal: &MonomialIdeal) -> Vec<BigInt> {
    kpolynomial_pivot(ideal)
}

/// `N(t) = Σ_{σ ⊆ G(I)} (-1)^{|σ|} t^{deg lcm(σ)}`.
pub fn kpolynomial_inclusion_exclusion(ideal: &MonomialIdeal) -> Result<Vec<BigInt>> {
    let gens = ideal.generators();
    if gens.len() > INCLUSION_EXCLUSION_MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: gens.len(),
            cap: INCLUSION_EXCLUSION_MAX_GENERATORS,
        });
    }
    let gens: Vec<&[u32]> = gens.iter().map(Monomial::exponents).collect();
    let mut counts: Vec<i64> = Vec::new();
    // lcm of the current subset, one buffer per recursion depth
    let mut stack = vec![vec![0u32; ideal.n()]; gens.len() + 1];
    subsets(&gens, 0, 0, &mut stack, 0, &mut counts);
    Ok(poly::from_i64(&counts))
}

fn subsets(
    gens: &[&[u32]],
    start: usize,
    depth: usize,
    stack: &mut [Vec<u32>],
    degree: u64,
    counts: &mut Vec<i64>,
) {
    let d = degree as usize;
    if counts.len() <= d {
        counts.resize(d + 1, 0);
    }
    counts[d] += if depth.is_multiple_of(2) { 1 } else { -1 };
    for (i, g) in gens.iter().enumerate().skip(start) {
        let (head, tail) = stack.split_at_mut(depth + 1);
        let (current, next) = (&head[depth], &mut tail[0]);
        let mut deg = degree;
        for ((out, &a), &b) in next.iter_mut().zip(current.iter()).zip(g.iter()) {
            if b > a {
                deg += (b - a) as u64;
                *out = b;
            } else {
                *out = a;
            }
        }
        subsets(gens, i + 1, depth + 1, stack, deg, counts);
    }
}

/// K-polynomial via `N(I) = N(I + (p)) + t^k N(I : p)` with `p = x_i^k`,
/// where `x_i` occurs in the most generators and `k` is its least positive
/// exponent among them. Ideals with pairwise coprime generators are the
/// base case `Π (1 - t^{deg g})`.
pub fn kpolynomial_pivot(ideal: &MonomialIdeal) -> Vec<BigInt> {
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect();
    pivot(ideal.n(), gens)
}

fn minimalize(n: usize, gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    MonomialIdeal::from_checked(n, gens.into_iter().map(Monomial::from_vec).collect())
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

fn pivot(n: usize, gens: Vec<Vec<u32>>) -> IntPoly {
    let mut occurrences = vec![0usize; n];
    for g in &gens {
        for (c, &e) in occurrences.iter_mut().zip(g) {
            if e > 0 {
                *c += 1;
            }
        }
    }
    let (var, &count) = occurrences
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("n >= 1");
    if count <= 1 {
        let mut acc = poly::from_i64(&[1]);
        for g in &gens {
            let deg: u32 = g.iter().sum();
            acc = poly::mul(&acc, &poly::one_minus_power(deg as usize));
        }
        return acc;
    }
    let k = gens
        .iter()
        .map(|g| g[var])
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    // every generator containing x_var is a multiple of x_var^k
    let mut sum_gens: Vec<Vec<u32>> = gens.iter().filter(|g| g[var] == 0).cloned().collect();
    let mut power = vec![0u32; n];
    power[var] = k;
    sum_gens.push(power);
    let colon_gens: Vec<Vec<u32>> = gens
        .into_iter()
        .map(|mut g| {
            g[var] = g[var].saturating_sub(k);
            g
        })
        .collect();
    let mut out = pivot(n, minimalize(n, sum_gens));
    let colon = pivot(n, minimalize(n, colon_gens));
    poly::add_assign(&mut out, &poly::shift(&colon, k as usize));
    out
}

/// Reduced Hilbert series; the denominator exponent is checked against
/// [`MonomialIdeal::krull_dimension`].
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    ideal.require_proper("the Hilbert series")?;
    let mut numerator = kpolynomial(ideal);
    let mut d = ideal.n();
    while d > 0 && poly::eval_at_one(&numerator).is_zero() {
        numerator = poly::div_one_minus_t(&numerator);
        d -= 1;
    }
    let dim = ideal.krull_dimension()?;
    if d != dim {
        return Err(Error::Inconsistent(format!(
            "reduced denominator exponent {d} differs from Krull dimension {dim} for {ideal}"
        )));
    }
    if !numerator.first().is_some_and(One::is_one) {
        return Err(Error::Inconsistent(format!("h_0 != 1 for {ideal}")));
    }
    Ok(HilbertSeries {
        numerator,
        denominator_exponent: d,
    })
}

pub fn h_polynomial(ideal: &MonomialIdeal) -> Result<HPolynomial> {
    Ok(hilbert_series(ideal)?.h_polynomial())
}

pub fn h_degree(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(h_polynomial(ideal)?.degree())
}

/// `H(S/I, k)` read off the series.
pub fn hilbert_function(ideal: &MonomialIdeal, k: u64) -> Result<BigUint> {
    Ok(hilbert_series(ideal)?.coefficient_biguint(k))
}

/// `H(S/I, k)` by counting degree-`k` monomials outside `I`.
pub fn hilbert_function_by_enumeration(ideal: &MonomialIdeal, k: u32) -> Result<BigUint> {
    ideal.require_proper("the Hilbert function")?;
    let count = LexMonomials::new(ideal.n(), k)
        .filter(|u| !ideal.contains_unchecked(u))
        .count();
    Ok(BigUint::from(count))
}
