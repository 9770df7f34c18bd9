//! Monomial ideals held by their minimal generating set.

use std::fmt;

use crate::combinatorics::monomial_count;
use crate::error::{Error, Result};
use crate::hilbert;
use crate::monomial::Monomial;

/// A monomial ideal of `K[x_1, ..., x_n]`.
///
/// Generators are always the minimal generating set, sorted lex-descending.
/// No generators is the zero ideal; the single generator `1` is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, pruning non-minimal generators.
    pub fn new(n: usize, raw: Vec<Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        if let Some(bad) = raw.iter().find(|u| u.n() != n) {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: bad.n(),
            });
        }
        Ok(Self::from_checked(n, raw))
    }

    pub(crate) fn from_checked(n: usize, mut raw: Vec<Monomial>) -> Self {
        // After sorting by degree a generator can only be divided by an
        // earlier one.
        raw.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        raw.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(raw.len());
        for u in raw {
            if !minimal.iter().any(|g| g.divides_unchecked(&u)) {
                minimal.push(u);
            }
        }
        minimal.sort_by(|a, b| b.cmp(a));
        MonomialIdeal {
            n,
            generators: minimal,
        }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn unit(n: usize) -> Result<Self> {
        Self::new(n, vec![Monomial::one(n)?])
    }

    /// Parses a whitespace- or comma-separated list such as `x1^2, x1x2`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let gens = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| Monomial::parse(n, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn max_generator_degree(&self) -> Option<u64> {
        self.generators.iter().map(Monomial::degree).max()
    }

    pub fn min_generator_degree(&self) -> Option<u64> {
        self.generators.iter().map(Monomial::degree).min()
    }

    /// Componentwise maximum of the generators.
    pub fn generator_lcm(&self) -> Vec<u32> {
        let mut l = vec![0u32; self.n];
        for g in &self.generators {
            for (a, &b) in l.iter_mut().zip(g.exponents()) {
                *a = (*a).max(b);
            }
        }
        l
    }

    pub(crate) fn require_proper(&self, what: &'static str) -> Result<()> {
        if self.is_unit() {
            return Err(Error::UnitIdeal(what));
        }
        Ok(())
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: m.n(),
            });
        }
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// `dim S/I`: `n` minus the least number of variables meeting the
    /// support of every generator.
    pub fn krull_dimension(&self) -> Result<usize> {
        self.require_proper("the Krull dimension")?;
        if self.n > 64 {
            return Err(Error::TooManyVariables {
                count: self.n,
                max: 64,
            });
        }
        let mut supports: Vec<u64> = self
            .generators
            .iter()
            .map(|g| g.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        supports.sort_by_key(|s| s.count_ones());
        supports.dedup();
        // only inclusion-minimal supports constrain a cover
        let mut minimal: Vec<u64> = Vec::new();
        for s in supports {
            if !minimal.iter().any(|&t| t & !s == 0) {
                minimal.push(s);
            }
        }
        let mut best = self.n;
        min_cover(&minimal, 0, 0, &mut best);
        Ok(self.n - best)
    }

    /// Stable: for each generator `u` with `m = max(u)`, `x_i u / x_m ∈ I`
    /// for every `i < m`.
    pub fn is_stable(&self) -> Result<bool> {
        self.require_nontrivial("stability")?;
        Ok(self.generators.iter().all(|u| {
            let m = u.max_index().expect("proper ideal has no constant generator") - 1;
            (0..m).all(|i| self.contains_unchecked(&u.shift(m, i)))
        }))
    }

    /// Strongly stable: `x_i u / x_j ∈ I` whenever `x_j | u` and `i < j`.
    pub fn is_strongly_stable(&self) -> Result<bool> {
        self.require_nontrivial("strong stability")?;
        Ok(self.generators.iter().all(|u| {
            u.support()
                .all(|j| (0..j).all(|i| self.contains_unchecked(&u.shift(j, i))))
        }))
    }

    /// Lexsegment: in every degree, the monomials of `I` form an initial
    /// segment of the lex order.
    ///
    /// Only degrees up to the largest generator degree are inspected. Past
    /// that degree `I_{d+1} = S_1 I_d`, and `S_1` times a lex segment is
    /// again a lex segment, so the property persists.
    ///
    /// In degree `d` the lex-least monomial of `I_d` is the least of
    /// `g * x_n^(d - deg g)` over generators `g`; `I_d` is a segment iff its
    /// size equals the number of degree-`d` monomials at or above that one.
    pub fn is_lexsegment(&self) -> Result<bool> {
        self.require_nontrivial("the lexsegment test")?;
        let lo = self.min_generator_degree().unwrap_or(0);
        let hi = self.max_generator_degree().unwrap_or(0);
        let series = hilbert::hilbert_series(self)?;
        let last = self.n - 1;
        for d in lo..=hi {
            let least = self
                .generators
                .iter()
                .filter(|g| g.degree() <= d)
                .map(|g| g.times_var(last, (d - g.degree()) as u32))
                .min()
                .expect("some generator has degree <= d");
            let segment_len = least.lex_rank() + 1u32;
            let in_ideal = monomial_count(self.n, d) - series.coefficient_biguint(d);
            if segment_len != in_ideal {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn require_nontrivial(&self, what: &'static str) -> Result<()> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::NotApplicable(what));
        }
        Ok(())
    }
}

fn min_cover(supports: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                min_cover(supports, chosen | b, size + 1, best);
                bits &= bits - 1;
            }
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(n, s).unwrap()
    }

    #[test]
    fn minimal_generators_prunes() {
        let i = ideal(2, "x1 x1x2");
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "x1");
        let z = MonomialIdeal::new(3, vec![]).unwrap();
        assert!(z.is_zero());
        let again = MonomialIdeal::new(2, i.generators().to_vec()).unwrap();
        assert_eq!(again, i);
    }

    #[test]
    fn r4_s2_already_minimal_and_sorted() {
        let e = fixture("r4-s2").unwrap();
        assert_eq!(e.generators().len(), 20);
        assert_eq!(e.generators()[0].to_string(), "x1^2");
        assert_eq!(e.generators()[19].to_string(), "x5^5");
    }

    #[test]
    fn membership() {
        assert!(ideal(2, "x1").contains(&Monomial::parse(2, "x1x2").unwrap()).unwrap());
        let z = MonomialIdeal::zero(2).unwrap();
        for u in crate::monomial::LexMonomials::new(2, 3) {
            assert!(!z.contains(&u).unwrap());
        }
        let e = fixture("r4-s2").unwrap();
        assert!(!e.contains(&Monomial::parse(6, "x5^4").unwrap()).unwrap());
        assert!(e.contains(&Monomial::parse(6, "x5^5").unwrap()).unwrap());
        assert!(e.contains(&Monomial::parse(5, "x5^5").unwrap()).is_err());
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(fixture("r4-s2").unwrap().krull_dimension().unwrap(), 1);
        assert_eq!(fixture("dim2-reg6").unwrap().krull_dimension().unwrap(), 2);
        assert_eq!(MonomialIdeal::zero(4).unwrap().krull_dimension().unwrap(), 4);
        assert_eq!(ideal(3, "x1x2 x2x3 x1x3").krull_dimension().unwrap(), 1);
        assert!(matches!(
            MonomialIdeal::unit(2).unwrap().krull_dimension(),
            Err(Error::UnitIdeal(_))
        ));
    }

    #[test]
    fn stability_examples() {
        let i = ideal(2, "x2");
        assert!(!i.is_stable().unwrap());
        let e = fixture("r4-s2").unwrap();
        assert!(e.is_stable().unwrap());
        assert!(e.is_strongly_stable().unwrap());
        assert!(e.is_lexsegment().unwrap());
        // in two variables strongly stable and lexsegment coincide
        let j = ideal(2, "x1^2 x1x2 x2^3");
        assert!(j.is_strongly_stable().unwrap());
        assert!(j.is_lexsegment().unwrap());
        // x1x3 is missing while x2^2 is present
        let j = ideal(3, "x1^2 x1x2 x2^2");
        assert!(j.is_strongly_stable().unwrap());
        assert!(!j.is_lexsegment().unwrap());
        // stable but not strongly stable
        let k = ideal(3, "x1^2 x1x2 x2^2 x2x3");
        assert!(k.is_stable().unwrap());
        assert!(!k.is_strongly_stable().unwrap());
        assert!(matches!(
            MonomialIdeal::zero(2).unwrap().is_stable(),
            Err(Error::NotApplicable(_))
        ));
        assert!(MonomialIdeal::unit(2).unwrap().is_lexsegment().is_err());
    }
}
