//! Dense integer polynomials in one variable `t`, lowest degree first.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn add_assign(acc: &mut IntPoly, other: &[BigInt]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
    trim(acc);
}

pub fn mul(p: &[BigInt], q: &[BigInt]) -> IntPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(&mut out);
    out
}

/// `t^k * p`
pub fn shift(p: &[BigInt], k: usize) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(p);
    out
}

/// `1 - t^k`
pub fn one_minus_power(k: usize) -> IntPoly {
    if k == 0 {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k + 1];
    out[0] = BigInt::one();
    out[k] = -BigInt::one();
    out
}

pub fn eval_at_one(p: &[BigInt]) -> BigInt {
    p.iter().sum()
}

/// Exact division by `1 - t`; the caller guarantees `p(1) = 0`.
pub fn div_one_minus_t(p: &[BigInt]) -> IntPoly {
    // p = (1 - t) q  <=>  q_k = sum_{i <= k} p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut running = BigInt::zero();
    for c in &p[..p.len().saturating_sub(1)] {
        running += c;
        q.push(running.clone());
    }
    debug_assert_eq!(running + p.last().cloned().unwrap_or_default(), BigInt::zero());
    trim(&mut q);
    q
}

pub fn from_i64(c: &[i64]) -> IntPoly {
    let mut p: IntPoly = c.iter().map(|&x| BigInt::from(x)).collect();
    trim(&mut p);
    p
}
