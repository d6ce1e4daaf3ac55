//! Gamma expansion: writing a palindromic polynomial in `t` as
//! `Σ γ_k t^k (1+t)^{d-2k}`.

use super::{MultiPoly, Var};
use crate::error::PolyError;

/// Coefficients of `h(t) = Σ_k γ_k t^k (1+t)^{d-2k}`. Each `γ_k` is a
/// polynomial in the variables other than `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub degree: u32,
    pub gammas: Vec<MultiPoly>,
}

impl GammaVector {
    pub fn recompose(&self) -> MultiPoly {
        let t = MultiPoly::var(Var::T);
        let one_plus_t = MultiPoly::one() + &t;
        self.gammas
            .iter()
            .enumerate()
            .map(|(k, g)| g * &t.pow(k as u32) * one_plus_t.pow(self.degree - 2 * k as u32))
            .sum()
    }

    /// Every `γ_k` has nonnegative coefficients.
    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(MultiPoly::is_nonnegative)
    }

    pub fn get(&self, k: usize) -> MultiPoly {
        self.gammas.get(k).cloned().unwrap_or_default()
    }
}

/// Expands `h` in the basis `t^k (1+t)^{d-2k}`, `0 <= k <= d/2`.
///
/// Works greedily from `k = 0`: the basis element `t^k (1+t)^{d-2k}` is the
/// only remaining one with a `t^k` term. Fails with `NotSymmetric` when a
/// nonzero remainder is left.
pub fn gamma_expand(h: &MultiPoly, d: u32) -> Result<GammaVector, PolyError> {
    if let Some(deg) = h.degree_in(Var::T) {
        if deg > d {
            return Err(PolyError::DegreeTooHigh { degree: deg, bound: d });
        }
    }
    let t = MultiPoly::var(Var::T);
    let one_plus_t = MultiPoly::one() + &t;
    let mut rest = h.clone();
    let mut gammas = Vec::new();
    for k in 0..=d / 2 {
        let g = rest.coefficient_of(Var::T, i64::from(k));
        if !g.is_zero() {
            rest -= &g * &t.pow(k) * one_plus_t.pow(d - 2 * k);
        }
        gammas.push(g);
    }
    if !rest.is_zero() {
        return Err(PolyError::NotSymmetric);
    }
    Ok(GammaVector { degree: d, gammas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, var};

    fn t() -> MultiPoly {
        var(Var::T)
    }

    #[test]
    fn eulerian_polynomials() {
        // A_3 = 1 + 4t + t^2 = (1+t)^2 + 2t
        let a3 = int(1) + int(4) * t() + t().pow(2);
        let g = gamma_expand(&a3, 2).unwrap();
        assert_eq!(g.gammas, vec![int(1), int(2)]);
        // A_4 = 1 + 11t + 11t^2 + t^3 -> (1, 8)
        let a4 = int(1) + int(11) * t() + int(11) * t().pow(2) + t().pow(3);
        let g = gamma_expand(&a4, 3).unwrap();
        assert_eq!(g.gammas, vec![int(1), int(8)]);
        assert_eq!(g.recompose(), a4);
        assert!(g.is_nonnegative());
    }

    #[test]
    fn polynomial_coefficients() {
        let (p, q) = (var(Var::P), var(Var::Q));
        let h = (int(1) + t()).pow(2) + (p.clone() + q.clone()) * t();
        let g = gamma_expand(&h, 2).unwrap();
        assert_eq!(g.get(1), p + q);
    }

    #[test]
    fn failures() {
        assert_eq!(gamma_expand(&(int(1) + int(2) * t()), 1), Err(PolyError::NotSymmetric));
        assert_eq!(gamma_expand(&t().pow(3), 2), Err(PolyError::DegreeTooHigh { degree: 3, bound: 2 }));
        assert_eq!(gamma_expand(&MultiPoly::zero(), 4).unwrap().recompose(), MultiPoly::zero());
    }
}
