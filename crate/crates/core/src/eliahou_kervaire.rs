//! Betti numbers of stable ideals by the Eliahou–Kervaire formula
//! `β_{i,i+j}(I) = Σ_{u ∈ G(I), deg u = j} C(max(u) - 1, i)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::betti::BettiTable;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

fn require_stable(ideal: &MonomialIdeal) -> Result<()> {
    ideal.require_proper("the Betti table")?;
    if !ideal.is_zero() && !ideal.is_stable()? {
        return Err(Error::NotStable);
    }
    Ok(())
}

/// Graded Betti table of `S/I` for a stable ideal `I`.
pub fn ek_betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_stable(ideal)?;
    let mut betti: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    for u in ideal.generators() {
        let m = u.max_index().expect("proper ideal") as u64;
        let j = u.degree() as usize;
        for i in 0..m {
            *betti.entry((i as usize, i as usize + j)).or_default() += binomial(m - 1, i);
        }
    }
    let table = BettiTable::from_ideal_betti(betti)?;
    let reg = ideal.max_generator_degree().map_or(0, |d| d as usize - 1);
    if table.regularity() != reg {
        return Err(Error::Inconsistent(format!(
            "table regularity {} differs from max generator degree - 1 = {reg}",
            table.regularity()
        )));
    }
    Ok(table)
}

/// `pd(S/I) = max max(u)` over the generators.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    require_stable(ideal)?;
    Ok(ideal
        .generators()
        .iter()
        .filter_map(|u| u.max_index())
        .max()
        .unwrap_or(0))
}

/// `reg(S/I)`, the largest generator degree minus one; cross-checked
/// against the full table.
pub fn regularity(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ek_betti_table(ideal)?.regularity())
}

/// `depth S/I = n - pd(S/I)` (Auslander–Buchsbaum).
pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.n() - projective_dimension(ideal)?)
}
