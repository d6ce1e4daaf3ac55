//! Motzkin paths, Laguerre histories and J-fractions.
//!
//! Heights are the ordinate *before* a step, so a step of height `h` leaves
//! from level `h`.

mod jfraction;
mod laguerre;

pub use jfraction::{
    contraction_check, jfraction_literal, jfraction_series, ContractionReport, JFractionSpec, Scheme,
};
pub use laguerre::{
    enumerate_histories, fv_map, fz_map, history_weight, Flavor, HistoryIndex, LaguerreHistory, WeightScheme,
};

use std::fmt;
use std::str::FromStr;

use crate::error::PathError;
use crate::poly::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    NorthEast,
    SouthEast,
    EastBlue,
    EastRed,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::NorthEast => 'U',
            Step::SouthEast => 'D',
            Step::EastBlue => 'B',
            Step::EastRed => 'R',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::NorthEast),
            'D' => Some(Step::SouthEast),
            'B' => Some(Step::EastBlue),
            'R' => Some(Step::EastRed),
            _ => None,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::NorthEast => 1,
            Step::SouthEast => -1,
            Step::EastBlue | Step::EastRed => 0,
        }
    }
}

/// A (colored) Motzkin path. Plain paths use [`Step::EastBlue`] for every
/// East step.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMotzkinPath {
    steps: Vec<Step>,
}

impl ColoredMotzkinPath {
    /// Checks that the path never goes below the axis and ends on it.
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(PathError::InvalidPath(format!("step {} goes below the axis", i + 1)));
            }
        }
        if h != 0 {
            return Err(PathError::InvalidPath(format!("ends at height {h}")));
        }
        Ok(Self { steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `h_i`, the height before step `i`, for every step.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = 0u32;
        self.steps
            .iter()
            .map(|s| {
                let before = h;
                h = (i64::from(h) + s.delta()) as u32;
                before
            })
            .collect()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }
}

impl fmt::Display for ColoredMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl fmt::Debug for ColoredMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredMotzkinPath({self})")
    }
}

impl FromStr for ColoredMotzkinPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        let steps = s
            .chars()
            .map(|c| Step::from_letter(c).ok_or_else(|| PathError::InvalidPath(format!("unknown step {c:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(steps)
    }
}

/// All Motzkin paths of length `n`, in lexicographic step order. With
/// `colored` the East steps come in two colors.
pub fn motzkin_enumerate(n: usize, colored: bool) -> Vec<ColoredMotzkinPath> {
    let mut kinds = vec![Step::NorthEast, Step::SouthEast, Step::EastBlue];
    if colored {
        kinds.push(Step::EastRed);
    }
    kinds.sort();
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    extend_paths(n, 0, &kinds, &mut steps, &mut out);
    out
}

fn extend_paths(n: usize, h: usize, kinds: &[Step], steps: &mut Vec<Step>, out: &mut Vec<ColoredMotzkinPath>) {
    let left = n - steps.len();
    if left == 0 {
        out.push(ColoredMotzkinPath { steps: steps.clone() });
        return;
    }
    for &k in kinds {
        let next = match k {
            Step::NorthEast => h + 1,
            Step::SouthEast if h == 0 => continue,
            Step::SouthEast => h - 1,
            _ => h,
        };
        // must still be able to come back down
        if next > left - 1 {
            continue;
        }
        steps.push(k);
        extend_paths(n, next, kinds, steps, out);
        steps.pop();
    }
}

/// Step weights as functions of the height `h` of the step.
pub struct StepWeights {
    pub up: Box<dyn Fn(u32) -> MultiPoly + Send + Sync>,
    pub level: Box<dyn Fn(u32) -> MultiPoly + Send + Sync>,
    pub down: Box<dyn Fn(u32) -> MultiPoly + Send + Sync>,
}

impl StepWeights {
    pub fn new(
        up: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
        level: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
        down: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
    ) -> Self {
        Self { up: Box::new(up), level: Box::new(level), down: Box::new(down) }
    }

    /// Weight of a plain path; East steps of either color use `level`.
    pub fn path_weight(&self, path: &ColoredMotzkinPath) -> MultiPoly {
        path.steps
            .iter()
            .zip(path.heights())
            .map(|(s, h)| match s {
                Step::NorthEast => (self.up)(h),
                Step::SouthEast => (self.down)(h),
                Step::EastBlue | Step::EastRed => (self.level)(h),
            })
            .product()
    }
}

/// `Σ_{|γ| = n} w(γ)` over plain Motzkin paths, by dynamic programming over
/// (position, height).
pub fn weighted_path_sum(n: usize, weights: &StepWeights) -> MultiPoly {
    path_sums(n, &*weights.up, &*weights.level, &*weights.down).pop().unwrap()
}

/// `[Σ_{|γ| = m} w(γ) for m in 0..=n]`.
pub(crate) fn path_sums(
    n: usize,
    up: &dyn Fn(u32) -> MultiPoly,
    level: &dyn Fn(u32) -> MultiPoly,
    down: &dyn Fn(u32) -> MultiPoly,
) -> Vec<MultiPoly> {
    let max_h = n / 2;
    let ups: Vec<MultiPoly> = (0..max_h as u32).map(up).collect();
    let levels: Vec<MultiPoly> = (0..=max_h as u32).map(level).collect();
    // downs[h - 1] is the weight of a down step from height h
    let downs: Vec<MultiPoly> = (1..=max_h as u32).map(down).collect();
    // row[h]: total weight of prefixes ending at height h
    let mut row = vec![MultiPoly::zero(); max_h + 1];
    row[0] = MultiPoly::one();
    let mut out = vec![MultiPoly::one()];
    for pos in 0..n {
        let reachable = pos.min(n - pos).min(max_h) + 1;
        let mut next = vec![MultiPoly::zero(); max_h + 1];
        for h in 0..reachable {
            if row[h].is_zero() {
                continue;
            }
            next[h] += &row[h] * &levels[h];
            if h + 1 <= max_h {
                next[h + 1] += &row[h] * &ups[h];
            }
            if h > 0 {
                next[h - 1] += &row[h] * &downs[h - 1];
            }
        }
        row = next;
        out.push(row[0].clone());
    }
    out
}
