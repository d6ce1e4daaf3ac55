//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::PermError;

/// A permutation of `[n] = {1, ..., n}` stored as its one-line word.
///
/// Positions and values are both 1-based, matching the way every statistic
/// in this crate is defined: `sigma.at(i)` is `σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that the word
    /// is a bijection of `[n]`.
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &value in &word {
            if value == 0 || value > n {
                return Err(PermError::OutOfRange { value, n });
            }
            if seen[value] {
                return Err(PermError::DuplicateValue(value));
            }
            seen[value] = true;
        }
        Ok(Self { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ(i)` for `1 <= i <= n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { word: inv }
    }

    /// The composition `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Self { word: other.word.iter().map(|&j| self.at(j)).collect() }
    }

    /// Cycle decomposition, each cycle starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.at(j);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn transform(&self, kind: Transform) -> Self {
        let n = self.len();
        let word = match kind {
            Transform::Reverse => self.word.iter().rev().copied().collect(),
            Transform::Complement => self.word.iter().map(|&v| n + 1 - v).collect(),
            Transform::ReverseComplement => self.word.iter().rev().map(|&v| n + 1 - v).collect(),
        };
        Self { word }
    }

    pub fn is_derangement(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| self.at(v) == i + 1)
    }

    /// Falling alternating: `σ(1) > σ(2) < σ(3) > ...`.
    pub fn is_alternating(&self) -> bool {
        self.word
            .windows(2)
            .enumerate()
            .all(|(i, pair)| if i % 2 == 0 { pair[0] > pair[1] } else { pair[0] < pair[1] })
    }

    /// No foremaximum (under the `σ(0)=0, σ(n+1)=n+1` boundary).
    pub fn is_coderangement(&self) -> bool {
        crate::stats::foremaxima(self) == 0
    }

    /// Advances to the next permutation in lexicographic order, returning
    /// `false` (and leaving the word untouched) at the last one.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        if w.len() < 2 {
            return false;
        }
        let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
            return false;
        };
        let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).expect("pivot has a successor");
        w.swap(i, j);
        w[i + 1..].reverse();
        true
    }

    /// The permutation of rank `rank` (0-based) in lexicographic order.
    pub fn unrank_lex(n: usize, mut rank: u64) -> Self {
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for remaining in (1..=n).rev() {
            let block = factorial(remaining - 1);
            let idx = (rank / block) as usize;
            rank %= block;
            word.push(pool.remove(idx));
        }
        Self { word }
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Reverse,
    Complement,
    ReverseComplement,
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    next: Option<Permutation>,
    remaining: u64,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Self::range(n, 0, factorial(n))
    }

    /// The `count` permutations starting at lexicographic rank `start`.
    pub fn range(n: usize, start: u64, count: u64) -> Self {
        let next = (count > 0).then(|| Permutation::unrank_lex(n, start));
        Self { next, remaining: count }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            let mut succ = current.clone();
            if succ.next_lex() {
                self.next = Some(succ);
            } else {
                self.remaining = 0;
            }
        }
        Some(current)
    }
}

/// Parses whitespace- or comma-separated values. A run of single digits with
/// no separators (`"3762154"`) is also accepted when every digit is nonzero,
/// which covers the compact notation for `n <= 9`.
pub fn parse_permutation(text: &str) -> Result<Permutation, PermError> {
    let trimmed = text.trim();
    let tokens: Vec<&str> =
        trimmed.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    let word = if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].chars().all(|c| c.is_ascii_digit()) {
        tokens[0].chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    } else {
        tokens
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| PermError::BadToken(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?
    };
    Permutation::new(word)
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_permutation(s)
    }
}

impl fmt::Display for Permutation {
    /// Compact digits for `n <= 9`, space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
