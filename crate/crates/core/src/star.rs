//! The star transformation `σ ↦ σ* = (σ(1)-1)…(σ(n)-1)` and the cyclic
//! statistics read off the star word.
//!
//! `σ*` maps `[n]` onto `{0, …, n-1}`. Following its arrows from any point
//! either closes a cycle inside `[n-1]` or runs down the single path that
//! starts at `n` and ends at `0`. Statistics that would need `σ*(0)` or
//! `(σ*)^{-1}(n)` only range over `[n-1]`.

use std::fmt;

use crate::perm::Permutation;
use crate::stats::{crossing_nesting_of_map, StatRecord};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StarMap {
    word: Vec<usize>,
}

pub fn star_map(sigma: &Permutation) -> StarMap {
    StarMap { word: sigma.word().iter().map(|&v| v - 1).collect() }
}

/// Cycles and the path of a star diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDiagram {
    pub cycles: Vec<Vec<usize>>,
    /// `n → σ*(n) → … → 0`, both endpoints included.
    pub path: Vec<usize>,
}

impl StarMap {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ*(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The inverse shift, recovering `σ`.
    pub fn unstar(&self) -> Permutation {
        Permutation::from_word_unchecked(self.word.iter().map(|&v| v + 1).collect())
    }

    /// `inv[v]` is the preimage of `v` for `v` in `0..n`.
    fn preimages(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v] = i + 1;
        }
        inv
    }

    pub fn diagram(&self) -> StarDiagram {
        let n = self.len();
        let mut on_path = vec![false; n + 1];
        let mut path = Vec::new();
        if n > 0 {
            let mut j = n;
            loop {
                path.push(j);
                if j == 0 {
                    break;
                }
                on_path[j] = true;
                j = self.at(j);
            }
        }
        let mut seen = on_path;
        let mut cycles = Vec::new();
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
            cycles.push(cycle);
        }
        StarDiagram { cycles, path }
    }
}

impl fmt::Display for StarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 10 {
            self.word.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for StarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarMap({self})")
    }
}

/// Star statistics of `σ`, i.e. the ordinary cyclic statistics of `σ*`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StarStats {
    pub fix: usize,
    /// Equals `exc σ`.
    pub wex: usize,
    pub defi: usize,
    pub cros: usize,
    pub nest: usize,
    pub cda: usize,
    pub cdd: usize,
    pub cvalley: usize,
    /// Cycles of the star diagram, not counting the path to `0`.
    pub cyc: usize,
}

impl StarStats {
    /// Connected components of the star diagram: the cycles plus the path.
    pub fn components(&self) -> usize {
        self.cyc + 1
    }

    pub fn record(&self) -> StatRecord {
        let mut rec = StatRecord::default();
        for (name, v) in [
            ("fix*", self.fix),
            ("wex*", self.wex),
            ("defi*", self.defi),
            ("cros*", self.cros),
            ("nest*", self.nest),
            ("cda*", self.cda),
            ("cdd*", self.cdd),
            ("cvalley*", self.cvalley),
            ("cyc*", self.cyc),
        ] {
            rec.push(name, v);
        }
        rec
    }
}

pub fn star_stats(m: &StarMap) -> StarStats {
    let n = m.len();
    let inv = m.preimages();
    let cn = crossing_nesting_of_map(m.word());
    let mut out = StarStats { cros: cn.cros, nest: cn.nest, ..Default::default() };
    out.defi = (1..=n).filter(|&i| i > m.at(i)).count();
    for i in 1..n {
        let (pre, image) = (inv[i], m.at(i));
        if image == i {
            out.fix += 1;
        }
        if i <= image {
            out.wex += 1;
        }
        if pre > i && i > image {
            out.cdd += 1;
        }
        if pre < i && i < image {
            out.cda += 1;
        }
        if pre > i && i < image {
            out.cvalley += 1;
        }
    }
    out.cyc = m.diagram().cycles.len();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{parse_permutation, Permutations};
    use crate::stats::cyclic_stats;
    use std::collections::HashSet;

    #[test]
    fn running_example() {
        let sigma = parse_permutation("3762154").unwrap();
        let m = star_map(&sigma);
        assert_eq!(m.to_string(), "2651043");
        let st = star_stats(&m);
        assert_eq!((st.cros, st.nest), (4, 3));
        // one cycle 1→2→6→4 and the path 7→3→5→0
        let d = m.diagram();
        assert_eq!(d.cycles, vec![vec![1, 2, 6, 4]]);
        assert_eq!(d.path, vec![7, 3, 5, 0]);
        assert_eq!(st.cyc, 1);
        assert_eq!(st.components(), 2);
    }

    #[test]
    fn small_cases() {
        assert_eq!(star_map(&Permutation::identity(3)).to_string(), "012");
        assert_eq!(star_stats(&star_map(&parse_permutation("231").unwrap())).fix, 2);
        let images: HashSet<StarMap> = Permutations::new(5).map(|s| star_map(&s)).collect();
        assert_eq!(images.len(), 120);
    }

    #[test]
    fn star_weak_excedances_are_excedances() {
        for n in 1..=8 {
            for s in Permutations::new(n) {
                assert_eq!(star_stats(&star_map(&s)).wex, cyclic_stats(&s).exc);
            }
        }
    }

    #[test]
    fn diagram_is_cycles_plus_one_path() {
        for s in Permutations::new(7) {
            let m = star_map(&s);
            assert_eq!(m.unstar(), s);
            let d = m.diagram();
            assert_eq!(d.path.first(), Some(&7));
            assert_eq!(d.path.last(), Some(&0));
            let mut covered: Vec<usize> =
                d.cycles.iter().flatten().chain(d.path.iter()).copied().collect();
            covered.sort_unstable();
            assert_eq!(covered, (0..=7).collect::<Vec<_>>());
            for c in &d.cycles {
                assert_eq!(m.at(*c.last().unwrap()), c[0]);
            }
        }
    }
}
