//! Brute-force graded Betti numbers of arbitrary monomial ideals.
//!
//! For a multidegree `m`, `β_{i,m}(I)` is the rank of the reduced homology
//! `H̃_{i-1}` of the upper Koszul complex
//! `K^m = { σ ⊆ supp(m) : m / x_σ ∈ I }`, computed over the rationals.
//! Betti numbers vanish off the lcm lattice of the generators, so only
//! multidegrees dividing the lcm of all generators are scanned.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest number of multidegrees the brute-force table will scan.
pub const BOX_CAP: u128 = 1_000_000;

/// A simplicial complex on vertices `1..=n`, kept as its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexRecord {
    vertices: Vec<usize>,
    facets: Vec<Vec<usize>>,
    void: bool,
}

impl SimplicialComplexRecord {
    /// The upper Koszul complex `K^m(I)`; vertices are 1-based variable indices.
    pub fn upper_koszul(ideal: &MonomialIdeal, m: &Monomial) -> Result<Self> {
        if m.n() != ideal.n() {
            return Err(Error::AmbientMismatch {
                expected: ideal.n(),
                found: m.n(),
            });
        }
        let support: Vec<usize> = m.support().collect();
        if support.len() > 31 {
            return Err(Error::TooManyVariables {
                count: support.len(),
                max: 31,
            });
        }
        let faces = koszul_faces(ideal, m, &support);
        Ok(Self::from_masks(&support, &faces))
    }

    fn from_masks(support: &[usize], faces: &[u32]) -> Self {
        let maximal: Vec<u32> = faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| g != f && g & f == f))
            .collect();
        let to_vertices = |mask: u32| -> Vec<usize> {
            support
                .iter()
                .enumerate()
                .filter(|(p, _)| mask & (1 << p) != 0)
                .map(|(_, &v)| v + 1)
                .collect()
        };
        let mut facets: Vec<Vec<usize>> = maximal.into_iter().map(to_vertices).collect();
        facets.sort();
        SimplicialComplexRecord {
            vertices: support.iter().map(|v| v + 1).collect(),
            facets,
            void: faces.is_empty(),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Maximal faces; `[[]]` is the complex `{∅}`, `[]` the void complex.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// Membership: a face is any subset of some facet.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets
            .iter()
            .any(|f| face.iter().all(|v| f.contains(v)))
    }

    /// All faces as bitmasks over `vertices`, grouped by size.
    fn faces_by_size(&self) -> Vec<Vec<u32>> {
        let mut by_size = vec![Vec::new(); self.vertices.len() + 1];
        if self.void {
            return by_size;
        }
        let masks: Vec<u32> = self
            .facets
            .iter()
            .map(|f| {
                f.iter().fold(0u32, |acc, v| {
                    let p = self.vertices.iter().position(|w| w == v).expect("vertex");
                    acc | (1 << p)
                })
            })
            .collect();
        for s in 0u32..(1u32 << self.vertices.len()) {
            if masks.iter().any(|&f| f & s == s) {
                by_size[s.count_ones() as usize].push(s);
            }
        }
        by_size
    }

    /// Ranks of `H̃_{k-1}` for `k = 0..=|vertices|` (index `k` is the face size).
    pub fn reduced_homology_ranks(&self) -> Vec<usize> {
        reduced_homology(&self.faces_by_size())
    }
}

fn koszul_faces(ideal: &MonomialIdeal, m: &Monomial, support: &[usize]) -> Vec<u32> {
    if !ideal.contains_unchecked(m) {
        return Vec::new();
    }
    let mut faces = Vec::new();
    let mut e = m.exponents().to_vec();
    for s in 0u32..(1u32 << support.len()) {
        for (p, &v) in support.iter().enumerate() {
            if s & (1 << p) != 0 {
                e[v] -= 1;
            }
        }
        if ideal
            .generators()
            .iter()
            .any(|g| g.exponents().iter().zip(&e).all(|(a, b)| a <= b))
        {
            faces.push(s);
        }
        e.copy_from_slice(m.exponents());
    }
    faces
}

fn reduced_homology(by_size: &[Vec<u32>]) -> Vec<usize> {
    let ranks: Vec<usize> = (0..by_size.len())
        .map(|k| {
            if k == 0 {
                0
            } else {
                boundary_rank(&by_size[k], &by_size[k - 1])
            }
        })
        .collect();
    (0..by_size.len())
        .map(|k| {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            by_size[k].len() - ranks[k] - next
        })
        .collect()
}

/// Rank of the boundary map from faces of size `k` to faces of size `k - 1`.
fn boundary_rank(faces: &[u32], lower: &[u32]) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    let mut matrix = vec![vec![0i64; faces.len()]; lower.len()];
    for (c, &f) in faces.iter().enumerate() {
        let mut sign = 1i64;
        for p in 0..32 {
            if f & (1 << p) == 0 {
                continue;
            }
            let g = f & !(1 << p);
            let r = lower.iter().position(|&h| h == g).expect("closed under subsets");
            matrix[r][c] = sign;
            sign = -sign;
        }
    }
    rank_i64(matrix.clone()).unwrap_or_else(|| {
        rank_bigint(
            matrix
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    })
}

/// Fraction-free (Bareiss) elimination; `None` on `i64` overflow.
fn rank_i64(mut a: Vec<Vec<i64>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = 1i64;
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pivot = prow[col];
        for row in below {
            let factor = row[col];
            for (x, &y) in row[col + 1..].iter_mut().zip(&prow[col + 1..]) {
                let v = pivot
                    .checked_mul(*x)?
                    .checked_sub(factor.checked_mul(y)?)?;
                *x = v / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn rank_bigint(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pivot = prow[col].clone();
        for row in below {
            let factor = row[col].clone();
            for (x, y) in row[col + 1..].iter_mut().zip(&prow[col + 1..]) {
                let v = &pivot * &*x - &factor * y;
                *x = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `β_{i,m}(I)` for `i = 0..=|supp m|`.
pub fn koszul_betti(ideal: &MonomialIdeal, m: &Monomial) -> Result<Vec<usize>> {
    Ok(SimplicialComplexRecord::upper_koszul(ideal, m)?.reduced_homology_ranks())
}

fn box_size(lcm: &[u32]) -> u128 {
    lcm.iter().map(|&e| e as u128 + 1).product()
}

/// Graded Betti table of `S/I` with no stability hypothesis.
pub fn bruteforce_betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    ideal.require_proper("the Betti table")?;
    let lcm = ideal.generator_lcm();
    let size = box_size(&lcm);
    if size > BOX_CAP {
        return Err(Error::BoxTooLarge { size, cap: BOX_CAP });
    }
    let n = ideal.n();
    if n > 31 {
        return Err(Error::TooManyVariables { count: n, max: 31 });
    }
    let betti = (0..size as u64)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), BigUint>, index| {
            let mut rest = index;
            let exps: Vec<u32> = lcm
                .iter()
                .map(|&l| {
                    let e = (rest % (l as u64 + 1)) as u32;
                    rest /= l as u64 + 1;
                    e
                })
                .collect();
            let m = Monomial::from_vec(exps);
            if !ideal.contains_unchecked(&m) {
                return acc;
            }
            let support: Vec<usize> = m.support().collect();
            // the full simplex (cone) has no reduced homology
            let mut bottom = m.exponents().to_vec();
            for &v in &support {
                bottom[v] -= 1;
            }
            if !support.is_empty() && ideal.contains_unchecked(&Monomial::from_vec(bottom)) {
                return acc;
            }
            let faces = koszul_faces(ideal, &m, &support);
            let by_size = {
                let mut v = vec![Vec::new(); support.len() + 1];
                for f in faces {
                    v[f.count_ones() as usize].push(f);
                }
                v
            };
            let deg = m.degree() as usize;
            for (i, rank) in reduced_homology(&by_size).into_iter().enumerate() {
                if rank > 0 {
                    *acc.entry((i, deg)).or_default() += rank;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    BettiTable::from_ideal_betti(betti)
}

pub fn bruteforce_regularity(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(bruteforce_betti_table(ideal)?.regularity())
}

/// `n - pd(S/I)` from the brute-force table.
pub fn bruteforce_depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.n() - bruteforce_betti_table(ideal)?.projective_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;
    use crate::eliahou_kervaire::ek_betti_table;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(n, s).unwrap()
    }

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(n, s).unwrap()
    }

    #[test]
    fn koszul_examples() {
        let i = ideal(2, "x1 x2");
        assert_eq!(koszul_betti(&i, &mono(2, "x1x2")).unwrap(), vec![0, 1, 0]);
        let p = ideal(2, "x1x2");
        assert_eq!(koszul_betti(&p, &mono(2, "x1x2")).unwrap(), vec![1, 0, 0]);
        // outside the ideal the complex is void
        let c = SimplicialComplexRecord::upper_koszul(&p, &mono(2, "x1")).unwrap();
        assert!(c.is_void());
        assert_eq!(c.reduced_homology_ranks(), vec![0, 0]);
    }

    #[test]
    fn complex_record() {
        let i = ideal(2, "x1 x2");
        let c = SimplicialComplexRecord::upper_koszul(&i, &mono(2, "x1x2")).unwrap();
        assert_eq!(c.vertices(), &[1, 2]);
        assert_eq!(c.facets(), &[vec![1], vec![2]]);
        assert!(c.contains_face(&[2]));
        assert!(!c.contains_face(&[1, 2]));
    }

    #[test]
    fn homology_of_circle_and_bigint_path() {
        // boundary of a triangle: H̃_1 = 1, reported at face size 2
        let faces: Vec<u32> = vec![0, 1, 2, 4, 3, 5, 6];
        let c = SimplicialComplexRecord::from_masks(&[0, 1, 2], &faces);
        assert_eq!(c.reduced_homology_ranks(), vec![0, 0, 1, 0]);
        let m = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(1), BigInt::from(2)],
        ];
        assert_eq!(rank_bigint(m), 1);
        assert_eq!(rank_i64(vec![vec![2, 4], vec![1, 2]]), Some(1));
        assert_eq!(rank_i64(vec![vec![i64::MAX, 2], vec![2, i64::MAX]]), None);
    }

    #[test]
    fn homology_independent_of_face_order() {
        let faces: Vec<u32> = vec![0, 1, 2, 4, 8, 3, 6, 12, 9, 5];
        let mut by_size = vec![Vec::new(); 5];
        for &f in &faces {
            by_size[f.count_ones() as usize].push(f);
        }
        let base = reduced_homology(&by_size);
        for rot in 1..4 {
            let shuffled: Vec<Vec<u32>> = by_size
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    let len = v.len();
                    if len > 0 {
                        v.rotate_left(rot % len);
                        v.reverse();
                    }
                    v
                })
                .collect();
            assert_eq!(reduced_homology(&shuffled), base);
        }
    }

    #[test]
    fn hypersurface() {
        let t = bruteforce_betti_table(&ideal(2, "x1x2")).unwrap();
        assert_eq!((t.projective_dimension(), t.regularity()), (1, 1));
        assert_eq!(bruteforce_depth(&ideal(2, "x1x2")).unwrap(), 1);
    }

    #[test]
    fn r4_s2_agrees_with_eliahou_kervaire() {
        let e = fixture("r4-s2").unwrap();
        assert_eq!(bruteforce_betti_table(&e).unwrap(), ek_betti_table(&e).unwrap());
    }

    #[test]
    fn dim2_reg6_values() {
        let r = fixture("dim2-reg6").unwrap();
        assert_eq!(bruteforce_regularity(&r).unwrap(), 6);
        assert_eq!(bruteforce_depth(&r).unwrap(), 0);
    }

    #[test]
    fn box_cap() {
        let big = ideal(3, "x1^100x2^100x3^100");
        assert!(matches!(
            bruteforce_betti_table(&big),
            Err(Error::BoxTooLarge { .. })
        ));
    }
}
