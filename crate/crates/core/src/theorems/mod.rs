//! Generating polynomials over `S_n`, their gamma coefficients, and the
//! identity checks that tie them together.
//!
//! Every polynomial here is an exhaustive sum. The enumeration is split into
//! lexicographic rank ranges that run in parallel; monomial counts from the
//! ranges are added up at the end, so the result does not depend on how the
//! work was split.

mod egf;
mod verify;

pub use egf::{derangement_egf, eulerian_egf};
pub use verify::{verify, verify_with, Bounds, CheckId, Status, VerificationReport};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::perm::{factorial, Permutation, Permutations};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::star::{star_map, star_stats};
use crate::stats::{crossing_nesting, cyclic_stats, descents, linear_stats, pattern_stats, BoundaryConvention};

/// The generating polynomials `A_n`, `B_n` (in its two forms), `C_n` and `D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `Σ p^res q^les t^des u^da* v^dd* w^valley*` over `S_n`.
    A,
    /// `Σ p^nest q^cros t^defi u^cda v^cdd w^cvalley y^fix` over `S_n`.
    BCyclic,
    /// `Σ p^ress q^les t^des u^{da-fmax} v^dd w^valley y^fmax` over `S_n`.
    BLinear,
    /// `Σ β^cyc t^exc u^cda v^cdd w^cvalley` over derangements.
    C,
    /// `Σ β^{cyc*-fix*} t^wex* u^{cda*+fix*} v^cdd* w^cvalley*` over `S_n`.
    DStar,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::BCyclic, Family::BLinear, Family::C, Family::DStar];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::BCyclic => "B",
            Family::BLinear => "B_LINEAR",
            Family::C => "C",
            Family::DStar => "Dstar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" | "B_CYCLIC" => Ok(Family::BCyclic),
            "B_LINEAR" => Ok(Family::BLinear),
            "C" => Ok(Family::C),
            "D" | "DSTAR" | "D_STAR" => Ok(Family::DStar),
            _ => Err(format!("unknown family {s:?} (expected A, B, B_LINEAR, C or Dstar)")),
        }
    }
}

/// The gamma-coefficient families `a_{n,k}`, `b_{n,k,j}`, `c_{n,k}`, `d_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffFamily {
    A,
    B,
    C,
    D,
}

impl FromStr for CoeffFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a" | "A" => Ok(CoeffFamily::A),
            "b" | "B" => Ok(CoeffFamily::B),
            "c" | "C" => Ok(CoeffFamily::C),
            "d" | "D" => Ok(CoeffFamily::D),
            _ => Err(format!("unknown coefficient family {s:?} (expected a, b, c or d)")),
        }
    }
}

impl fmt::Display for CoeffFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoeffFamily::A => "a",
            CoeffFamily::B => "b",
            CoeffFamily::C => "c",
            CoeffFamily::D => "d",
        })
    }
}

fn mono(exps: &[(Var, usize)]) -> Monomial {
    exps.iter().fold(Monomial::one(), |m, &(v, e)| m.with(v, m.exp(v) + e as u16))
}

/// `Σ_{σ ∈ S_n} weight(σ)`, skipping permutations for which `weight` is
/// `None`.
pub fn enumerate_sum<F>(n: usize, weight: F) -> MultiPoly
where
    F: Fn(&Permutation) -> Option<Monomial> + Sync,
{
    let total = factorial(n);
    let chunk = (total / 64).max(720);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let counts = starts
        .into_par_iter()
        .map(|start| {
            let mut local: HashMap<Monomial, u64> = HashMap::new();
            for sigma in Permutations::range(n, start, chunk.min(total - start)) {
                if let Some(m) = weight(&sigma) {
                    *local.entry(m).or_default() += 1;
                }
            }
            local
        })
        .reduce(HashMap::new, |mut acc, part| {
            for (m, c) in part {
                *acc.entry(m).or_default() += c;
            }
            acc
        });
    MultiPoly::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

fn a_monomial(sigma: &Permutation) -> Monomial {
    let ls = linear_stats(sigma, BoundaryConvention::ZeroZero);
    let ps = pattern_stats(sigma);
    mono(&[
        (Var::P, ps.res),
        (Var::Q, ps.les),
        (Var::T, ls.des),
        (Var::U, ls.da),
        (Var::V, ls.dd),
        (Var::W, ls.valley),
    ])
}

fn b_cyclic_monomial(sigma: &Permutation) -> Monomial {
    let cs = cyclic_stats(sigma);
    let cn = crossing_nesting(sigma);
    mono(&[
        (Var::P, cn.nest),
        (Var::Q, cn.cros),
        (Var::T, cs.defi),
        (Var::U, cs.cda),
        (Var::V, cs.cdd),
        (Var::W, cs.cvalley),
        (Var::Y, cs.fix),
    ])
}

fn b_linear_monomial(sigma: &Permutation) -> Monomial {
    let ls = linear_stats(sigma, BoundaryConvention::ZeroTop);
    let ps = pattern_stats(sigma);
    let fmax = ls.fmax().expect("foremaxima are defined under ZeroTop");
    mono(&[
        (Var::P, ps.ress),
        (Var::Q, ps.les),
        (Var::T, ls.des),
        (Var::U, ls.da - fmax),
        (Var::V, ls.dd),
        (Var::W, ls.valley),
        (Var::Y, fmax),
    ])
}

fn c_monomial(sigma: &Permutation) -> Option<Monomial> {
    if !sigma.is_derangement() {
        return None;
    }
    let cs = cyclic_stats(sigma);
    Some(mono(&[
        (Var::Beta, cs.cyc),
        (Var::T, cs.exc),
        (Var::U, cs.cda),
        (Var::V, cs.cdd),
        (Var::W, cs.cvalley),
    ]))
}

fn d_star_monomial(sigma: &Permutation) -> Monomial {
    let ss = star_stats(&star_map(sigma));
    mono(&[
        (Var::Beta, ss.cyc - ss.fix),
        (Var::T, ss.wex),
        (Var::U, ss.cda + ss.fix),
        (Var::V, ss.cdd),
        (Var::W, ss.cvalley),
    ])
}

type Memo<K> = OnceLock<Mutex<HashMap<K, MultiPoly>>>;

fn memoized<K: std::hash::Hash + Eq + Copy>(memo: &'static Memo<K>, key: K, f: impl FnOnce() -> MultiPoly) -> MultiPoly {
    let table = memo.get_or_init(Default::default);
    if let Some(p) = table.lock().unwrap().get(&key) {
        return p.clone();
    }
    let p = f();
    table.lock().unwrap().insert(key, p.clone());
    p
}

/// The generating polynomial of `family` at size `n`, summed over all of
/// `S_n` (over derangements for [`Family::C`]). Results are memoized per
/// process.
///
/// ```
/// use permstat::theorems::{build_polynomial, Family};
/// assert_eq!(build_polynomial(Family::A, 2).to_string(), "t*v+u");
/// assert_eq!(build_polynomial(Family::C, 2).to_string(), "t*w*beta");
/// ```
pub fn build_polynomial(family: Family, n: usize) -> MultiPoly {
    static MEMO: Memo<(Family, usize)> = OnceLock::new();
    memoized(&MEMO, (family, n), || match family {
        Family::A => enumerate_sum(n, |s| Some(a_monomial(s))),
        Family::BCyclic => enumerate_sum(n, |s| Some(b_cyclic_monomial(s))),
        Family::BLinear => enumerate_sum(n, |s| Some(b_linear_monomial(s))),
        Family::C => enumerate_sum(n, c_monomial),
        Family::DStar => enumerate_sum(n, |s| Some(d_star_monomial(s))),
    })
}

/// All coefficients of one family at size `n` at once: `Σ_k a_{n,k} w^k`,
/// `Σ_{k,j} b_{n,k,j} w^k y^j`, `Σ_k c_{n,k} w^k` or `Σ_k d_{n,k} w^k`.
pub fn coeff_generating(family: CoeffFamily, n: usize) -> MultiPoly {
    static MEMO: Memo<(CoeffFamily, usize)> = OnceLock::new();
    memoized(&MEMO, (family, n), || match family {
        CoeffFamily::A => enumerate_sum(n, |s| {
            let ls = linear_stats(s, BoundaryConvention::ZeroZero);
            (ls.dd == 0).then(|| {
                let ps = pattern_stats(s);
                mono(&[(Var::P, ps.res), (Var::Q, ps.les), (Var::W, ls.valley)])
            })
        }),
        CoeffFamily::B => enumerate_sum(n, |s| {
            let cs = cyclic_stats(s);
            (cs.cda == 0).then(|| {
                let cn = crossing_nesting(s);
                mono(&[(Var::P, cn.nest), (Var::Q, cn.cros), (Var::W, cs.cvalley), (Var::Y, cs.fix)])
            })
        }),
        CoeffFamily::C => enumerate_sum(n, |s| {
            if !s.is_derangement() {
                return None;
            }
            let cs = cyclic_stats(s);
            (cs.cdd == 0).then(|| mono(&[(Var::Beta, cs.cyc), (Var::W, cs.cvalley)]))
        }),
        CoeffFamily::D => enumerate_sum(n, |s| {
            let ss = star_stats(&star_map(s));
            (ss.cdd == 0).then(|| mono(&[(Var::Beta, ss.cyc - ss.fix), (Var::W, ss.cvalley)]))
        }),
    })
}

/// One coefficient `a_{n,k}`, `b_{n,k,j}`, `c_{n,k}` or `d_{n,k}`; `j` is
/// only read for the `b` family. Indices outside the range of the expansion
/// give the zero polynomial.
///
/// ```
/// use permstat::theorems::{coeff_family, CoeffFamily};
/// assert_eq!(coeff_family(CoeffFamily::A, 4, 1, 0).to_string(), "p^2+2*p*q+q^2+2*p+2*q");
/// ```
pub fn coeff_family(family: CoeffFamily, n: usize, k: usize, j: usize) -> MultiPoly {
    let g = coeff_generating(family, n).coefficient_of(Var::W, k as i64);
    match family {
        CoeffFamily::B => g.coefficient_of(Var::Y, j as i64),
        _ => g,
    }
}

/// Every involution of `[n]`, built by pairing off the smallest free value.
pub fn involutions(n: usize) -> Vec<Permutation> {
    fn extend(word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some(i) = word.iter().position(|&v| v == 0) else {
            out.push(Permutation::from_word_unchecked(word.clone()));
            return;
        };
        word[i] = i + 1;
        extend(word, out);
        for j in i + 1..word.len() {
            if word[j] == 0 {
                word[i] = j + 1;
                word[j] = i + 1;
                extend(word, out);
                word[j] = 0;
            }
        }
        word[i] = 0;
    }
    let mut out = Vec::new();
    extend(&mut vec![0; n], &mut out);
    out
}

/// `I_n(t) = Σ t^des` over the involutions of `[n]`.
pub fn involution_descent_poly(n: usize) -> MultiPoly {
    MultiPoly::from_terms(
        involutions(n).iter().map(|s| (Monomial::one().with(Var::T, descents(s) as u16), BigInt::from(1))),
    )
}
