//! Laguerre histories and the two permutation codings onto them.

use std::collections::HashMap;
use std::fmt;

use super::{motzkin_enumerate, ColoredMotzkinPath, Step};
use crate::error::PathError;
use crate::perm::{Permutation, Permutations};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::stats::{crossing_nesting, cyclic_classes, entry_classes, pattern_stats, BoundaryConvention};
use crate::stats::{CyclicClass, EntryClass};

/// Which bound the choices obey.
///
/// `Fv`: `0 <= p_i <= h_i` on every step. `Fz`: the same on up and blue
/// steps, `0 <= p_i <= h_i - 1` on down and red steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Fv,
    Fz,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Fv => "FV",
            Flavor::Fz => "FZ",
        }
    }

    /// Largest allowed choice for `step` at height `h` (negative when none is).
    pub fn bound(self, step: Step, h: u32) -> i64 {
        let h = i64::from(h);
        match (self, step) {
            (Flavor::Fz, Step::SouthEast | Step::EastRed) => h - 1,
            _ => h,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaguerreHistory {
    path: ColoredMotzkinPath,
    choices: Vec<u32>,
    flavor: Flavor,
}

impl LaguerreHistory {
    pub fn new(path: ColoredMotzkinPath, choices: Vec<u32>, flavor: Flavor) -> Result<Self, PathError> {
        if choices.len() != path.len() {
            return Err(PathError::InvalidPath(format!(
                "{} choices for a path of length {}",
                choices.len(),
                path.len()
            )));
        }
        for (i, ((&s, h), &c)) in path.steps().iter().zip(path.heights()).zip(&choices).enumerate() {
            let bound = flavor.bound(s, h);
            if i64::from(c) > bound {
                return Err(PathError::ChoiceOutOfRange { step: i + 1, choice: c, bound });
            }
        }
        Ok(Self { path, choices, flavor })
    }

    pub fn path(&self) -> &ColoredMotzkinPath {
        &self.path
    }

    pub fn choices(&self) -> &[u32] {
        &self.choices
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }
}

impl fmt::Display for LaguerreHistory {
    /// `UBD (0,1,0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.choices.iter().map(|c| c.to_string()).collect();
        write!(f, "{} ({})", self.path, parts.join(","))
    }
}

impl fmt::Debug for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaguerreHistory[{}]({self})", self.flavor.name())
    }
}

/// Every history of length `n` of the given flavor.
pub fn enumerate_histories(n: usize, flavor: Flavor) -> Vec<LaguerreHistory> {
    let mut out = Vec::new();
    for path in motzkin_enumerate(n, true) {
        let bounds: Vec<i64> =
            path.steps().iter().zip(path.heights()).map(|(&s, h)| flavor.bound(s, h)).collect();
        if bounds.iter().any(|&b| b < 0) {
            continue;
        }
        let mut choices = vec![0u32; n];
        loop {
            out.push(LaguerreHistory { path: path.clone(), choices: choices.clone(), flavor });
            // odometer over the choice ranges
            let Some(i) = (0..n).rev().find(|&i| i64::from(choices[i]) < bounds[i]) else {
                break;
            };
            choices[i] += 1;
            choices[i + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }
    out
}

/// Linear coding: value `i` (for `1 <= i <= n-1`) gives an up, down, blue or
/// red step as it is a valley, peak, double ascent or double descent under
/// `σ(0) = σ(n+1) = 0`, with choice `res_i σ`.
pub fn fv_map(sigma: &Permutation) -> LaguerreHistory {
    let n = sigma.len();
    let classes = entry_classes(sigma, BoundaryConvention::ZeroZero);
    let res = pattern_stats(sigma).res_k;
    let m = n.saturating_sub(1);
    let steps = (0..m)
        .map(|i| match classes[i] {
            EntryClass::Valley => Step::NorthEast,
            EntryClass::Peak => Step::SouthEast,
            EntryClass::DoubleAscent => Step::EastBlue,
            EntryClass::DoubleDescent => Step::EastRed,
        })
        .collect();
    let path = ColoredMotzkinPath::new(steps).expect("valleys and peaks pair up");
    let choices = res[..m].iter().map(|&r| r as u32).collect();
    LaguerreHistory::new(path, choices, Flavor::Fv).expect("res_i is at most the height")
}

/// Cyclic coding: value `i` gives an up, down, blue or red step as it is a
/// cyclic valley, cyclic peak, cyclic double ascent or fixed point, or
/// cyclic double descent, with choice `nest_i σ`.
pub fn fz_map(sigma: &Permutation) -> LaguerreHistory {
    let classes = cyclic_classes(sigma);
    let nest = crossing_nesting(sigma).nest_k;
    let steps = classes
        .iter()
        .map(|c| match c {
            CyclicClass::Valley => Step::NorthEast,
            CyclicClass::Peak => Step::SouthEast,
            CyclicClass::DoubleExcedance | CyclicClass::Fixed => Step::EastBlue,
            CyclicClass::DoubleDrop => Step::EastRed,
        })
        .collect();
    let path = ColoredMotzkinPath::new(steps).expect("cyclic valleys and peaks pair up");
    let choices = nest.iter().map(|&r| r as u32).collect();
    LaguerreHistory::new(path, choices, Flavor::Fz).expect("nest_i respects the FZ bounds")
}

/// The two weightings of histories.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightScheme {
    /// `t^{ER+NE} u^{EB} v^{ER} w^{NE} Π p^{p_i} q^{h_i - p_i}`.
    Linear,
    /// Per step `p^{p_i} q^{bound_i - p_i}` times `tw` (up), `tv` (red),
    /// `u` (blue, `p_i < h_i`) or `y` (blue, `p_i = h_i`).
    Cyclic,
}

impl WeightScheme {
    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::Linear => "linear",
            WeightScheme::Cyclic => "cyclic",
        }
    }

    fn flavor(self) -> Flavor {
        match self {
            WeightScheme::Linear => Flavor::Fv,
            WeightScheme::Cyclic => Flavor::Fz,
        }
    }
}

pub fn history_weight(h: &LaguerreHistory, scheme: WeightScheme) -> Result<MultiPoly, PathError> {
    if h.flavor != scheme.flavor() {
        return Err(PathError::FlavorMismatch { scheme: scheme.name(), flavor: h.flavor.name() });
    }
    let mut exps = [0u16; crate::poly::NVARS];
    let mut bump = |v: Var, by: u32| exps[v.index()] += by as u16;
    for ((&s, height), &p) in h.path.steps().iter().zip(h.path.heights()).zip(&h.choices) {
        let bound = h.flavor.bound(s, height) as u32;
        bump(Var::P, p);
        bump(Var::Q, bound - p);
        match (scheme, s) {
            (_, Step::NorthEast) => {
                bump(Var::T, 1);
                bump(Var::W, 1);
            }
            (_, Step::EastRed) => {
                bump(Var::T, 1);
                bump(Var::V, 1);
            }
            (_, Step::SouthEast) => {}
            (WeightScheme::Cyclic, Step::EastBlue) if p == height => bump(Var::Y, 1),
            (_, Step::EastBlue) => bump(Var::U, 1),
        }
    }
    Ok(MultiPoly::monomial(Monomial::from_exponents(exps), 1))
}

/// Tabulated inverse of [`fv_map`] (on `S_{n+1}`) or [`fz_map`] (on `S_n`)
/// for histories of length `n`.
pub struct HistoryIndex {
    flavor: Flavor,
    table: HashMap<LaguerreHistory, Permutation>,
}

impl HistoryIndex {
    pub const MAX_LEN: usize = 8;

    pub fn build(n: usize, flavor: Flavor) -> Result<Self, PathError> {
        if n > Self::MAX_LEN {
            return Err(PathError::CacheBoundExceeded { n, bound: Self::MAX_LEN });
        }
        let table = match flavor {
            Flavor::Fv => Permutations::new(n + 1).map(|s| (fv_map(&s), s)).collect(),
            Flavor::Fz => Permutations::new(n).map(|s| (fz_map(&s), s)).collect(),
        };
        Ok(Self { flavor, table })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of distinct histories hit, i.e. the size of the image.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn lookup(&self, h: &LaguerreHistory) -> Option<&Permutation> {
        self.table.get(h)
    }
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
    fn fv_examples() {
        let h = fv_map(&perm("213"));
        assert_eq!(h.path().to_string(), "UD");
        assert_eq!(h.choices(), &[0, 1]);
        assert!(fv_map(&perm("1")).is_empty());
        let image: HashSet<_> = Permutations::new(4).map(|s| fv_map(&s)).collect();
        assert_eq!(image.len(), 24);
        assert_eq!(enumerate_histories(3, Flavor::Fv).len(), 24);
    }

    #[test]
    fn fz_examples() {
        let h = fz_map(&perm("21"));
        assert_eq!(h.to_string(), "UD (0,0)");
        let id = fz_map(&Permutation::identity(2));
        assert_eq!(id.to_string(), "BB (0,0)");
        let image: HashSet<_> = Permutations::new(4).map(|s| fz_map(&s)).collect();
        assert_eq!(image.len(), 24);
    }

    #[test]
    fn fixed_points_are_saturated_blue_steps() {
        for s in Permutations::new(6) {
            let h = fz_map(&s);
            let heights = h.path().heights();
            for i in 1..=6 {
                let saturated = h.path().steps()[i - 1] == Step::EastBlue && h.choices()[i - 1] == heights[i - 1];
                assert_eq!(saturated, s.at(i) == i, "{s} value {i}");
            }
        }
    }

    #[test]
    fn history_counts() {
        for n in 0..=5 {
            let fact: usize = (1..=n + 1).product();
            assert_eq!(enumerate_histories(n, Flavor::Fv).len(), fact);
            // FZ histories of length n are counted by n!
            assert_eq!(enumerate_histories(n, Flavor::Fz).len(), fact / (n + 1));
        }
    }

    #[test]
    fn flavor_checks() {
        let fz = fz_map(&perm("21"));
        assert!(matches!(history_weight(&fz, WeightScheme::Linear), Err(PathError::FlavorMismatch { .. })));
        let empty = fv_map(&perm("1"));
        assert_eq!(history_weight(&empty, WeightScheme::Linear).unwrap(), MultiPoly::one());
        let path: ColoredMotzkinPath = "UD".parse().unwrap();
        assert!(LaguerreHistory::new(path.clone(), vec![0, 1], Flavor::Fz).is_err());
        assert!(LaguerreHistory::new(path, vec![0, 1], Flavor::Fv).is_ok());
    }

    #[test]
    fn inverse_lookup() {
        let idx = HistoryIndex::build(3, Flavor::Fv).unwrap();
        assert_eq!(idx.len(), 24);
        let s = perm("3142");
        assert_eq!(idx.lookup(&fv_map(&s)), Some(&s));
        assert!(HistoryIndex::build(9, Flavor::Fz).is_err());
    }
}
