//! The biword bijection `Φ` and its shifted variant `Ψ`.
//!
//! `Φ` reads `σ` through its descent bottoms and tops. With `σ(0) = 0` the
//! descent bottoms `f` are the values `σ(i)` with `σ(i-1) > σ(i)` and `g`
//! holds the rest; with `σ(n+1) = n+1` the descent tops `f'` are the values
//! `σ(i)` with `σ(i) > σ(i+1)` and `g'` holds the rest. The tops are
//! rearranged so that every letter keeps its right embracing number as an
//! inversion count. Writing `f g` above `f' g'` gives a biword, and `τ`
//! sends each lower letter to the letter above it.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::BijectionError;
use crate::perm::{Permutation, Permutations};
use crate::stats::pattern_stats;

/// How [`word_from_embracings`] reads the prescribed numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionMode {
    /// `emb(a)` larger letters end up to the left of `a`.
    InversionBottom,
    /// `emb(b)` smaller letters end up to the right of `b`.
    InversionTop,
}

/// Builds the word on `letters` whose inversion numbers are given by `emb`.
///
/// Bottom mode inserts from the largest letter down, top mode from the
/// smallest up, so each placement only sees letters that count.
pub fn word_from_embracings(
    letters: &[usize],
    emb: impl Fn(usize) -> usize,
    mode: InsertionMode,
) -> Result<Vec<usize>, BijectionError> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    if mode == InsertionMode::InversionBottom {
        sorted.reverse();
    }
    let mut word: Vec<usize> = Vec::with_capacity(sorted.len());
    for letter in sorted {
        let e = emb(letter);
        if e > word.len() {
            return Err(BijectionError::EmbracingOutOfRange { letter, embracing: e, available: word.len() });
        }
        let at = match mode {
            InsertionMode::InversionBottom => e,
            InsertionMode::InversionTop => word.len() - e,
        };
        word.insert(at, letter);
    }
    Ok(word)
}

pub fn phi(sigma: &Permutation) -> Permutation {
    let n = sigma.len();
    let ext = |i: usize| if i == 0 { 0 } else if i == n + 1 { n + 1 } else { sigma.at(i) };
    let (mut f, mut g, mut f_top, mut g_top) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for i in 1..=n {
        let bottoms = if ext(i - 1) > ext(i) { &mut f } else { &mut g };
        bottoms.push(ext(i));
        let tops = if ext(i) > ext(i + 1) { &mut f_top } else { &mut g_top };
        tops.push(ext(i));
    }
    f.sort_unstable();
    g.sort_unstable();
    let ress = pattern_stats(sigma).ress_k;
    let emb = |a: usize| ress[a - 1];
    let build = |letters: &[usize], mode| {
        word_from_embracings(letters, emb, mode).expect("right embracing numbers are valid inversion numbers")
    };
    let f_prime = build(&f_top, InsertionMode::InversionBottom);
    let g_prime = build(&g_top, InsertionMode::InversionTop);
    let mut tau = vec![0; n];
    // biword columns (f g over f' g'): τ sends each lower letter to the one above it
    for (upper, lower) in f.iter().chain(&g).zip(f_prime.iter().chain(&g_prime)) {
        tau[lower - 1] = *upper;
    }
    Permutation::from_word_unchecked(tau)
}

/// `Ψ(σ)`: shift `σ` up by one, append `1`, apply `Φ`, drop the leading `n+1`.
pub fn psi(sigma: &Permutation) -> Result<Permutation, BijectionError> {
    let n = sigma.len();
    let mut hat: Vec<usize> = sigma.word().iter().map(|&v| v + 1).collect();
    hat.push(1);
    let tau = phi(&Permutation::from_word_unchecked(hat));
    if tau.at(1) != n + 1 {
        return Err(BijectionError::InternalAssertion(format!(
            "Phi({sigma} shifted) starts with {} instead of {}",
            tau.at(1),
            n + 1
        )));
    }
    Ok(Permutation::from_word_unchecked(tau.word()[1..].to_vec()))
}

/// Tabulated inverse of [`phi`], one table per size, built on first use.
pub struct PhiInverseCache {
    bound: usize,
    tables: Vec<OnceLock<HashMap<u64, u32>>>,
}

impl PhiInverseCache {
    pub const DEFAULT_BOUND: usize = 9;
    /// Packing uses four bits per letter.
    pub const MAX_BOUND: usize = 15;

    pub fn new(bound: usize) -> Self {
        let bound = bound.min(Self::MAX_BOUND);
        Self { bound, tables: (0..=bound).map(|_| OnceLock::new()).collect() }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn inverse(&self, tau: &Permutation) -> Result<Permutation, BijectionError> {
        let n = tau.len();
        if n > self.bound {
            return Err(BijectionError::CacheBoundExceeded { n, bound: self.bound });
        }
        let table = self.tables[n].get_or_init(|| {
            Permutations::new(n).enumerate().map(|(rank, s)| (pack(&phi(&s)), rank as u32)).collect()
        });
        let rank = table.get(&pack(tau)).expect("phi is a bijection");
        Ok(Permutation::unrank_lex(n, u64::from(*rank)))
    }
}

impl Default for PhiInverseCache {
    fn default() -> Self {
        Self::new(Self::DEFAULT_BOUND)
    }
}

fn pack(sigma: &Permutation) -> u64 {
    sigma.word().iter().fold(0u64, |acc, &v| (acc << 4) | v as u64)
}

/// `Φ^{-1}(τ)` through a process-wide cache bounded at
/// [`PhiInverseCache::DEFAULT_BOUND`].
pub fn phi_inverse(tau: &Permutation) -> Result<Permutation, BijectionError> {
    static CACHE: OnceLock<PhiInverseCache> = OnceLock::new();
    CACHE.get_or_init(PhiInverseCache::default).inverse(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use std::collections::HashSet;

    fn perm(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let emb: HashMap<usize, usize> = [(4, 1), (6, 1), (8, 0), (9, 0)].into();
        let w = word_from_embracings(&[4, 6, 8, 9], |a| emb[&a], InsertionMode::InversionBottom).unwrap();
        assert_eq!(w, [8, 4, 6, 9]);
        let emb: HashMap<usize, usize> = [(1, 0), (2, 0), (3, 0), (5, 1), (7, 2)].into();
        let w = word_from_embracings(&[1, 2, 3, 5, 7], |a| emb[&a], InsertionMode::InversionTop).unwrap();
        assert_eq!(w, [1, 2, 7, 5, 3]);
        let w = word_from_embracings(&[5, 2, 9], |_| 0, InsertionMode::InversionBottom).unwrap();
        assert_eq!(w, [2, 5, 9]);
        assert!(matches!(
            word_from_embracings(&[1, 2], |_| 1, InsertionMode::InversionBottom),
            Err(BijectionError::EmbracingOutOfRange { letter: 2, embracing: 1, available: 0 })
        ));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&perm("412796583")).to_string(), "249385716");
        assert_eq!(phi(&perm("1423")).to_string(), "1342");
        assert_eq!(phi(&perm("4321")).to_string(), "4123");
        assert_eq!(phi(&Permutation::identity(0)).len(), 0);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&perm("412796583")).unwrap().to_string(), "351496827");
        assert_eq!(psi(&perm("1234")).unwrap().to_string(), "2341");
        assert_eq!(psi(&perm("4321")).unwrap().to_string(), "1234");
    }

    #[test]
    fn inverse_round_trip() {
        assert_eq!(phi_inverse(&perm("1342")).unwrap(), perm("1423"));
        assert_eq!(phi_inverse(&perm("249385716")).unwrap(), perm("412796583"));
        for s in Permutations::new(6) {
            assert_eq!(phi_inverse(&phi(&s)).unwrap(), s);
        }
        let small = PhiInverseCache::new(3);
        assert!(matches!(small.inverse(&perm("1234")), Err(BijectionError::CacheBoundExceeded { n: 4, bound: 3 })));
    }

    #[test]
    fn bijective_on_small_sizes() {
        for n in 0..=6 {
            let image: HashSet<Permutation> = Permutations::new(n).map(|s| phi(&s)).collect();
            assert_eq!(image.len() as u64, crate::perm::factorial(n));
            let image: HashSet<Permutation> = Permutations::new(n).map(|s| psi(&s).unwrap()).collect();
            assert_eq!(image.len() as u64, crate::perm::factorial(n));
        }
    }
}
