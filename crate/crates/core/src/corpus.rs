//! Seeded random ideals for property checks.

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree in `1..=max_degree`; linear forms are kept rare (1 in 16) since
/// they swallow most other generators.
fn random_degree<R: Rng>(rng: &mut R, max_degree: u32) -> u32 {
    if max_degree < 2 || rng.gen_ratio(1, 16) {
        1
    } else {
        rng.gen_range(2..=max_degree)
    }
}

fn random_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_vec(e)
}

/// A nonzero proper ideal with up to `max_gens` random minimal generators of
/// degree at most `max_degree` in exactly `n` variables. Draws that divide or
/// are divided by an earlier generator are rejected, so the target count is
/// usually reached unless the degree bound leaves too little room.
pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_gens: usize,
    max_degree: u32,
) -> MonomialIdeal {
    let target = rng.gen_range(1..=max_gens);
    let mut gens: Vec<Monomial> = Vec::with_capacity(target);
    for _ in 0..target * 16 {
        if gens.len() == target {
            break;
        }
        let d = random_degree(rng, max_degree);
        let u = random_monomial(rng, n, d);
        if gens
            .iter()
            .all(|g| !g.divides_unchecked(&u) && !u.divides_unchecked(g))
        {
            gens.push(u);
        }
    }
    MonomialIdeal::from_checked(n, gens)
}

/// Smallest strongly stable ideal containing `seeds`.
pub fn borel_closure(n: usize, seeds: &[Monomial]) -> MonomialIdeal {
    let mut seen: BTreeSet<Monomial> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = seeds.iter().cloned().collect();
    while let Some(u) = queue.pop_front() {
        let support: Vec<usize> = u.support().collect();
        for j in support {
            for i in 0..j {
                let v = u.shift(j, i);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    MonomialIdeal::from_checked(n, seen.into_iter().collect())
}

/// Borel closure of `1..=3` random monomials of degree at most `max_degree`.
pub fn random_strongly_stable_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=3);
    let seeds: Vec<Monomial> = (0..count)
        .map(|_| {
            let d = random_degree(rng, max_degree);
            random_monomial(rng, n, d)
        })
        .collect();
    borel_closure(n, &seeds)
}

/// `count` random ideals with `1 <= n <= max_n`, at most 8 generators of
/// degree at most 6.
pub fn monomial_corpus(seed: u64, count: usize, max_n: usize) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_monomial_ideal(&mut rng, n, 8, 6)
        })
        .collect()
}

/// `count` random strongly stable ideals with `n <= 4` and degrees `<= 5`.
pub fn strongly_stable_corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            random_strongly_stable_ideal(&mut rng, n, 5)
        })
        .collect()
}
