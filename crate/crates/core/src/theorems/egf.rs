//! Exponential generating functions of `A_n(t)` and of the derangement
//! polynomials, expanded with exact rational arithmetic.
//!
//! Both closed forms are `(1-t)/den(x)` with `den(0) = 1-t`. Each coefficient
//! of `den` is divided by `1-t` (exactly, over `Q[t]`) so that the series
//! left to invert has constant term 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Monomial, MultiPoly, Var};

/// A polynomial in `t` with rational coefficients, lowest degree first.
type RatPoly = Vec<BigRational>;

fn trim(mut f: RatPoly) -> RatPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn add(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let mut out = vec![BigRational::zero(); f.len().max(g.len())];
    for (i, c) in f.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in g.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn mul(f: &RatPoly, g: &RatPoly) -> RatPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

fn scale(f: &RatPoly, c: &BigRational) -> RatPoly {
    trim(f.iter().map(|a| a * c).collect())
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `f / (1 - t)`, which must be exact.
fn div_one_minus_t(f: &RatPoly) -> RatPoly {
    let mut acc = BigRational::zero();
    let mut out: RatPoly = f
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    assert!(out.pop().unwrap_or_default().is_zero(), "not divisible by 1 - t");
    trim(out)
}

/// `Σ_m (c x)^m / m!` through `x^order`, where `c` is a polynomial in `t`.
fn exp_series(c: &RatPoly, order: usize) -> Vec<RatPoly> {
    let mut out = vec![vec![BigRational::one()]];
    for m in 1..=order {
        let next = scale(&mul(&out[m - 1], c), &BigRational::new(BigInt::one(), BigInt::from(m)));
        out.push(next);
    }
    out
}

/// `1/f` for a series with constant term 1.
fn inverse(f: &[RatPoly]) -> Vec<RatPoly> {
    debug_assert!(f[0] == vec![BigRational::one()]);
    let mut g: Vec<RatPoly> = vec![vec![BigRational::one()]];
    for n in 1..f.len() {
        let mut s: RatPoly = Vec::new();
        for k in 1..=n {
            s = add(&s, &mul(&f[k], &g[n - k]));
        }
        g.push(scale(&s, &rat(-1)));
    }
    g
}

/// `n! [x^n] (1-t)/den` for `n = 0..=order`, as integer polynomials in `t`.
fn expand(den: Vec<RatPoly>) -> Vec<MultiPoly> {
    let reduced: Vec<RatPoly> = den.iter().map(div_one_minus_t).collect();
    let mut factorial = BigInt::one();
    inverse(&reduced)
        .into_iter()
        .enumerate()
        .map(|(n, coeff)| {
            if n > 0 {
                factorial *= n;
            }
            MultiPoly::from_terms(coeff.into_iter().enumerate().map(|(k, c)| {
                let c = c * BigRational::from_integer(factorial.clone());
                assert!(c.is_integer(), "egf coefficient times n! is an integer");
                (Monomial::one().with(Var::T, k as u16), c.to_integer())
            }))
        })
        .collect()
}

/// `A_n(t)` for `n <= order`, read off `(1-t)/(e^{(t-1)x} - t)`.
pub fn eulerian_egf(order: usize) -> Vec<MultiPoly> {
    let mut den = exp_series(&vec![rat(-1), rat(1)], order);
    den[0] = add(&den[0], &vec![rat(0), rat(-1)]);
    expand(den)
}

/// `Σ_{σ ∈ D_n} t^exc σ` for `n <= order`, read off
/// `(1-t)/(e^{tx} - t e^x)`.
pub fn derangement_egf(order: usize) -> Vec<MultiPoly> {
    let etx = exp_series(&vec![rat(0), rat(1)], order);
    let ex = exp_series(&vec![rat(1)], order);
    let minus_t = vec![rat(0), rat(-1)];
    let den = etx.iter().zip(&ex).map(|(a, b)| add(a, &mul(&minus_t, b))).collect();
    expand(den)
}
