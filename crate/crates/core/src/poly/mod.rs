//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients in the fixed variables `p, q, t, u, v, w, y, β`.
//!
//! A polynomial may carry a global factor `q^{-q_shift}`, which is how the
//! few Laurent expressions in `q` (substitutions like `t = -1/q`) are
//! represented. Values are kept normalised: no zero coefficients, and the
//! shift is as small as possible, so structural equality is mathematical
//! equality.

mod gamma;
mod euler;
mod series;

pub use gamma::{gamma_expand, GammaVector};
pub use euler::{euler_number, euler_numbers};
pub use series::TruncatedSeries;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::PolyError;

pub const NVARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    P,
    Q,
    T,
    U,
    V,
    W,
    Y,
    Beta,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::P, Var::Q, Var::T, Var::U, Var::V, Var::W, Var::Y, Var::Beta];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "q",
            Var::T => "t",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
            Var::Y => "y",
            Var::Beta => "beta",
        }
    }

    pub fn from_name(name: &str) -> Result<Var, PolyError> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector over [`Var::ALL`]; the derived order is lexicographic
/// with `p` most significant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Self([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        Self::one().with(v, 1)
    }

    pub fn from_exponents(exps: [u16; NVARS]) -> Self {
        Self(exps)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller checks divisibility.
    fn quotient_of(&self, other: &Self) -> Self {
        let mut out = [0; NVARS];
        for i in 0..NVARS {
            out[i] = other.0[i] - self.0[i];
        }
        Self(out)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0.iter()) {
            *o += r;
        }
        Monomial(out)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
    q_shift: u32,
}

/// A substitution value for [`MultiPoly::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Int(BigInt),
    Var(Var),
}

impl From<i64> for Subst {
    fn from(v: i64) -> Self {
        Subst::Int(BigInt::from(v))
    }
}

impl From<Var> for Subst {
    fn from(v: Var) -> Self {
        Subst::Var(v)
    }
}

/// `[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`, with `[0] = 0`.
pub fn pq_integer(n: u32) -> MultiPoly {
    MultiPoly::from_terms((0..n).map(|i| {
        let e = (n - 1 - i) as u16;
        (Monomial::one().with(Var::P, e).with(Var::Q, i as u16), BigInt::one())
    }))
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_terms([(Monomial::one(), c.into())])
    }

    pub fn var(v: Var) -> Self {
        Self::from_terms([(Monomial::var(v), BigInt::one())])
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(m, c.into())])
    }

    /// `q^{-1}`.
    pub fn q_inverse() -> Self {
        Self::one().with_q_shift(1)
    }

    /// Sums the given terms (repeated monomials are combined).
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_default() += c;
        }
        Self::normalized(map, 0)
    }

    /// Multiplies by `q^{-shift}`.
    pub fn with_q_shift(self, shift: u32) -> Self {
        let total = self.q_shift + shift;
        Self::normalized(self.terms, total)
    }

    fn normalized(mut terms: BTreeMap<Monomial, BigInt>, mut q_shift: u32) -> Self {
        terms.retain(|_, c| !c.is_zero());
        if terms.is_empty() {
            return Self::zero();
        }
        if q_shift > 0 {
            let min_q = terms.keys().map(|m| u32::from(m.exp(Var::Q))).min().unwrap_or(0);
            let cancel = min_q.min(q_shift);
            if cancel > 0 {
                terms = terms
                    .into_iter()
                    .map(|(m, c)| (m.with(Var::Q, m.exp(Var::Q) - cancel as u16), c))
                    .collect();
                q_shift -= cancel;
            }
        }
        Self { terms, q_shift }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_laurent(&self) -> bool {
        self.q_shift > 0
    }

    /// The exponent `s` of the global factor `q^{-s}`.
    pub fn q_shift(&self) -> u32 {
        self.q_shift
    }

    /// Terms of the polynomial part (before the `q^{-q_shift}` factor), in
    /// ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The integer value of a constant polynomial.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.q_shift == 0 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| u32::from(m.exp(v))).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalized(self.terms.iter().map(|(m, k)| (*m, k * c)).collect(), self.q_shift)
    }

    /// Rewrites `self` and `other` over the common shift `max(s1, s2)`,
    /// returning the two polynomial parts and that shift.
    fn aligned<'a>(
        &'a self,
        other: &'a Self,
    ) -> (std::borrow::Cow<'a, BTreeMap<Monomial, BigInt>>, std::borrow::Cow<'a, BTreeMap<Monomial, BigInt>>, u32)
    {
        use std::borrow::Cow;
        let shift = self.q_shift.max(other.q_shift);
        let lift = |p: &'a Self| -> Cow<'a, BTreeMap<Monomial, BigInt>> {
            let d = (shift - p.q_shift) as u16;
            if d == 0 {
                Cow::Borrowed(&p.terms)
            } else {
                Cow::Owned(p.terms.iter().map(|(m, c)| (m.with(Var::Q, m.exp(Var::Q) + d), c.clone())).collect())
            }
        };
        (lift(self), lift(other), shift)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    /// For `q` the exponent is the true (possibly negative) Laurent exponent.
    pub fn coefficient_of(&self, var: Var, k: i64) -> Self {
        let target = if var == Var::Q { k + i64::from(self.q_shift) } else { k };
        if target < 0 {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| i64::from(m.exp(var)) == target)
            .map(|(m, c)| (m.with(var, 0), c.clone()))
            .collect();
        let shift = if var == Var::Q { 0 } else { self.q_shift };
        Self::normalized(terms, shift)
    }

    /// Exact substitution. Variables absent from `assignment` are untouched.
    ///
    /// Assigning `q` in a Laurent polynomial must leave an integer
    /// polynomial, e.g. `q = ±1`, otherwise this fails.
    pub fn specialize(&self, assignment: &[(Var, Subst)]) -> Result<Self, PolyError> {
        let lookup = |v: Var| assignment.iter().rev().find(|(w, _)| *w == v).map(|(_, s)| s);
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = Monomial::one();
            for v in Var::ALL {
                let e = m.exp(v);
                match lookup(v) {
                    None => mono.0[v.index()] += e,
                    Some(Subst::Var(w)) => mono.0[w.index()] += e,
                    Some(Subst::Int(value)) => coeff *= Pow::pow(value, u32::from(e)),
                }
            }
            *out.entry(mono).or_default() += coeff;
        }
        if self.q_shift == 0 {
            return Ok(Self::normalized(out, 0));
        }
        match lookup(Var::Q) {
            None => Ok(Self::normalized(out, self.q_shift)),
            Some(Subst::Var(Var::Q)) => Ok(Self::normalized(out, self.q_shift)),
            Some(Subst::Var(w)) => Err(PolyError::NonIntegralSpecialization(w.name().to_string())),
            Some(Subst::Int(value)) => {
                let divisor: BigInt = Pow::pow(value, self.q_shift);
                if divisor.is_zero() {
                    return Err(PolyError::NonIntegralSpecialization(value.to_string()));
                }
                let mut divided = BTreeMap::new();
                for (m, c) in out {
                    let (quot, rem) = c.div_rem(&divisor);
                    if !rem.is_zero() {
                        return Err(PolyError::NonIntegralSpecialization(value.to_string()));
                    }
                    divided.insert(m, quot);
                }
                Ok(Self::normalized(divided, 0))
            }
        }
    }

    /// Convenience wrapper for integer-only assignments.
    pub fn eval_at(&self, assignment: &[(Var, i64)]) -> Result<Self, PolyError> {
        let subst: Vec<(Var, Subst)> = assignment.iter().map(|&(v, c)| (v, Subst::from(c))).collect();
        self.specialize(&subst)
    }

    /// The unique `h` with `divisor * h == self`, by repeated division of
    /// lexicographic leading terms.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        // powers of q are units in the Laurent ring, so strip them from the divisor
        let content = divisor.terms.keys().map(|m| m.exp(Var::Q)).min().unwrap_or(0);
        if content > 0 {
            let reduced = Self::normalized(
                divisor.terms.iter().map(|(m, c)| (m.with(Var::Q, m.exp(Var::Q) - content), c.clone())).collect(),
                divisor.q_shift,
            );
            return Ok(self.exact_divide(&reduced)?.with_q_shift(u32::from(content)));
        }
        let (lead_m, lead_c) = divisor.terms.iter().next_back().expect("nonzero divisor");
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        while let Some((rm, rc)) = rem.iter().next_back() {
            if !lead_m.divides(rm) {
                return Err(PolyError::NotDivisible);
            }
            let (qc, r) = rc.div_rem(lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let qm = lead_m.quotient_of(rm);
            for (dm, dc) in &divisor.terms {
                let m = *dm * qm;
                let entry = rem.entry(m).or_default();
                *entry -= dc * &qc;
                if entry.is_zero() {
                    rem.remove(&m);
                }
            }
            quot.insert(qm, qc);
        }
        // self = F q^{-a}, divisor = G q^{-b}  =>  quotient = (F/G) q^{b-a}
        let (a, b) = (self.q_shift, divisor.q_shift);
        if a >= b {
            Ok(Self::normalized(quot, a - b))
        } else {
            let lift = (b - a) as u16;
            Ok(Self::normalized(quot.into_iter().map(|(m, c)| (m.with(Var::Q, m.exp(Var::Q) + lift), c)).collect(), 0))
        }
    }

    /// Multiplicity of `divisor` in `self` (by repeated exact division),
    /// capped at `limit`.
    pub fn divisibility_order(&self, divisor: &Self, limit: u32) -> u32 {
        let mut cur = self.clone();
        let mut k = 0;
        while k < limit && !cur.is_zero() {
            match cur.exact_divide(divisor) {
                Ok(next) => {
                    cur = next;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        k
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b, shift) = self.aligned(rhs);
        let mut out = a.into_owned();
        for (m, c) in b.iter() {
            *out.entry(*m).or_default() += c;
        }
        MultiPoly::normalized(out, shift)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(), q_shift: self.q_shift }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *out.entry(*ma * *mb).or_default() += ca * cb;
            }
        }
        MultiPoly::normalized(out, self.q_shift + rhs.q_shift)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
        impl $assign_trait<&MultiPoly> for MultiPoly {
            fn $assign_method(&mut self, rhs: &MultiPoly) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<MultiPoly> for MultiPoly {
            fn $assign_method(&mut self, rhs: MultiPoly) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a MultiPoly> for MultiPoly {
    fn sum<I: Iterator<Item = &'a MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, x| acc + x)
    }
}

impl Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::one(), |acc, x| acc * x)
    }
}

fn render_monomial(m: &Monomial) -> String {
    let parts: Vec<String> = Var::ALL
        .iter()
        .filter(|v| m.exp(**v) > 0)
        .map(|v| match m.exp(*v) {
            1 => v.name().to_string(),
            e => format!("{}^{e}", v.name()),
        })
        .collect();
    parts.join("*")
}

fn render_terms(terms: &BTreeMap<Monomial, BigInt>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    // graded: higher total degree first, ties broken by descending lex order
    let mut ordered: Vec<(&Monomial, &BigInt)> = terms.iter().collect();
    ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then(b.cmp(a)));
    let mut out = String::new();
    for (i, (m, c)) in ordered.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&render_monomial(m));
        } else {
            out.push_str(&format!("{abs}*{}", render_monomial(m)));
        }
    }
    out
}

impl fmt::Display for MultiPoly {
    /// Expanded form, e.g. `p^2+2*p*q+q^2+2*p+2*q`; Laurent values render as
    /// `(…)/q^s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = render_terms(&self.terms);
        match self.q_shift {
            0 => f.write_str(&body),
            1 => write!(f, "({body})/q"),
            s => write!(f, "({body})/q^{s}"),
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Shorthand used throughout the crate and its tests.
pub fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

pub fn int(c: i64) -> MultiPoly {
    MultiPoly::constant(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Var::*;

    fn p() -> MultiPoly {
        var(P)
    }
    fn q() -> MultiPoly {
        var(Q)
    }
    fn t() -> MultiPoly {
        var(T)
    }

    #[test]
    fn pq_integers() {
        assert_eq!(pq_integer(0), MultiPoly::zero());
        assert_eq!(pq_integer(1), int(1));
        assert_eq!(pq_integer(2), p() + q());
        assert_eq!(pq_integer(3), p().pow(2) + p() * q() + q().pow(2));
        // (p - q)[n] = p^n - q^n
        for n in 0..8 {
            assert_eq!((p() - q()) * pq_integer(n), p().pow(n) - q().pow(n));
        }
    }

    #[test]
    fn rendering() {
        assert_eq!((p() + q()).pow(2).to_string(), "p^2+2*p*q+q^2");
        assert_eq!(((p() + q()) * (p() + q() + int(2))).to_string(), "p^2+2*p*q+q^2+2*p+2*q");
        assert_eq!((int(1) - p()).to_string(), "-p+1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!((var(Beta) * int(3)).to_string(), "3*beta");
        assert_eq!((t() * MultiPoly::q_inverse()).to_string(), "(t)/q");
        assert_eq!((int(2) * MultiPoly::q_inverse().pow(2)).to_string(), "(2)/q^2");
    }

    #[test]
    fn specialize_examples() {
        let s = (p() + q()).eval_at(&[(P, 1), (Q, 1)]).unwrap();
        assert_eq!(s, int(2));
        let a52 = (p() + q()).pow(2) * (p().pow(2) + p() * q() + q().pow(2) + int(1));
        assert_eq!(a52.eval_at(&[(P, 1), (Q, 1)]).unwrap(), int(16));
        let f = var(U) + t() * var(V);
        assert_eq!(f.eval_at(&[(U, 1), (V, 1)]).unwrap(), int(1) + t());
        let g = f.specialize(&[(U, Subst::Var(V))]).unwrap();
        assert_eq!(g, var(V) + t() * var(V));
    }

    #[test]
    fn laurent_specialization() {
        let f = (int(1) + q()) * MultiPoly::q_inverse();
        assert_eq!(f.eval_at(&[(Q, 1)]).unwrap(), int(2));
        assert_eq!(f.eval_at(&[(Q, -1)]).unwrap(), int(0));
        assert!(f.eval_at(&[(Q, 2)]).is_err());
        assert_eq!(f.eval_at(&[(P, 5)]).unwrap(), f);
    }

    #[test]
    fn coefficient_extraction() {
        let a3 = int(1) + int(4) * t() + t().pow(2);
        assert_eq!(a3.coefficient_of(T, 1), int(4));
        assert_eq!(a3.coefficient_of(T, 7), MultiPoly::zero());
        assert_eq!((var(U) + t() * var(V)).coefficient_of(T, 1), var(V));
        let l = (q() + int(3)) * MultiPoly::q_inverse();
        assert_eq!(l.coefficient_of(Q, -1), int(3));
        assert_eq!(l.coefficient_of(Q, 0), int(1));
    }

    #[test]
    fn exact_division() {
        let a41 = (p() + q()) * (p() + q() + int(2));
        assert_eq!(a41.exact_divide(&(p() + q())).unwrap(), p() + q() + int(2));
        assert_eq!(a41.exact_divide(&int(1)).unwrap(), a41);
        assert_eq!((p().pow(2) + q().pow(2)).exact_divide(&(p() + q())), Err(PolyError::NotDivisible));
        assert_eq!(a41.exact_divide(&MultiPoly::zero()), Err(PolyError::DivisionByZero));
        assert_eq!((int(4) * p()).exact_divide(&int(2)).unwrap(), int(2) * p());
        assert_eq!(int(3).exact_divide(&int(2)), Err(PolyError::NotDivisible));
        let a52 = (p() + q()).pow(2) * (p().pow(2) + p() * q() + q().pow(2) + int(1));
        assert_eq!(a52.divisibility_order(&(p() + q()), 10), 2);
    }

    #[test]
    fn laurent_arithmetic_normalises() {
        let qi = MultiPoly::q_inverse();
        assert_eq!(&qi * &q(), int(1));
        assert_eq!((&qi + &qi) * q(), int(2));
        assert_eq!((q().pow(3) * qi.pow(2)), q());
        assert_eq!(q().exact_divide(&q().pow(3)).unwrap(), qi.pow(2));
        assert!(!(qi.clone() * q()).is_laurent());
        let y = var(Y);
        let divisor = q() * &y - q();
        assert_eq!((int(1) - y.clone()).exact_divide(&divisor).unwrap(), int(-1) * &qi);
        assert_eq!(((int(-1) * &qi) * &divisor).exact_divide(&divisor).unwrap(), int(-1) * qi);
    }
}
