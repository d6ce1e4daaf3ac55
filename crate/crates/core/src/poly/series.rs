//! Power series in `x` truncated at a fixed order, with polynomial
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::MultiPoly;
use crate::error::PolyError;

/// `Σ_{n <= order} c_n x^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: MultiPoly, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    /// `c x^k`.
    pub fn monomial(c: MultiPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> MultiPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `x^k`, dropping what falls beyond the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![MultiPoly::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        Self::new(coeffs, order)
    }

    /// `1 / self`. The constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        let c0 = self.coeffs[0].as_integer().ok_or(PolyError::NonUnitConstant)?;
        if !c0.abs().is_one() {
            return Err(PolyError::NonUnitConstant);
        }
        let c0 = MultiPoly::constant(c0);
        let order = self.order();
        let mut inv: Vec<MultiPoly> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for n in 1..=order {
            let acc: MultiPoly = (1..=n).map(|k| &self.coeffs[k] * &inv[n - k]).sum();
            // c0 is ±1, so dividing by it is multiplying by it
            inv.push(-(acc * &c0));
        }
        Ok(Self { coeffs: inv })
    }

    fn binary(&self, other: &Self, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: (0..=order).map(|n| f(&self.coeffs[n], &other.coeffs[n])).collect() }
    }

    pub fn coeff_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(MultiPoly::as_integer).collect()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.binary(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.binary(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|k| &self.coeffs[k] * &rhs.coeffs[n - k]).sum())
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    /// One `x^n: c_n` line per coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "x^{n}: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "TruncatedSeries[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, var, Var};

    #[test]
    fn geometric_series() {
        // 1/(1 - x) = Σ x^n
        let s = &TruncatedSeries::one(6) - &TruncatedSeries::monomial(int(1), 1, 6);
        let inv = s.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == int(1)));
        assert_eq!(&s * &inv, TruncatedSeries::one(6));
    }

    #[test]
    fn catalan_by_iteration() {
        // C = 1/(1 - x C)
        let mut c = TruncatedSeries::one(7);
        for _ in 0..8 {
            c = (&TruncatedSeries::one(7) - &c.shift(1)).inverse().unwrap();
        }
        let ints: Vec<i64> = c.coeff_integers().unwrap().iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(ints, [1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn non_unit_constant() {
        assert_eq!(TruncatedSeries::constant(int(2), 3).inverse(), Err(PolyError::NonUnitConstant));
        assert_eq!(TruncatedSeries::constant(var(Var::T), 3).inverse(), Err(PolyError::NonUnitConstant));
        let minus = TruncatedSeries::constant(int(-1), 3);
        assert_eq!(minus.inverse().unwrap(), minus);
    }

    #[test]
    fn shift_truncates() {
        let s = TruncatedSeries::new(vec![int(1), int(2), int(3)], 2);
        assert_eq!(s.shift(1).coeffs(), &[int(0), int(1), int(2)]);
        assert_eq!(s.shift(5), TruncatedSeries::zero(2));
    }
}
