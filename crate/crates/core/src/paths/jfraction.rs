//! Truncated J-fractions
//! `1/(1 - b_0 x - λ_1 x²/(1 - b_1 x - λ_2 x²/(…)))` and S-fraction
//! contraction.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::path_sums;
use crate::poly::{int, pq_integer, var, MultiPoly, TruncatedSeries, Var};

type HeightFn = Arc<dyn Fn(u32) -> MultiPoly + Send + Sync>;

/// Level weights `b_h` and products `λ_h = a_{h-1} c_h` (used for `h >= 1`).
#[derive(Clone)]
pub struct JFractionSpec {
    pub level: HeightFn,
    pub product: HeightFn,
}

impl JFractionSpec {
    pub fn new(
        level: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
        product: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
    ) -> Self {
        Self { level: Arc::new(level), product: Arc::new(product) }
    }

    /// Builds a spec from explicit sequences; heights past the end weigh 0.
    pub fn from_sequences(levels: Vec<MultiPoly>, products: Vec<MultiPoly>) -> Self {
        let at = |v: Vec<MultiPoly>| move |h: u32| v.get(h as usize).cloned().unwrap_or_default();
        Self::new(at(levels), at(products))
    }
}

impl fmt::Debug for JFractionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = (0..3).map(|h| (self.level)(h).to_string()).collect();
        let l: Vec<String> = (1..4).map(|h| (self.product)(h).to_string()).collect();
        write!(f, "JFractionSpec(b = [{}, …], λ = [{}, …])", b.join(", "), l.join(", "))
    }
}

/// Series coefficients through `x^order`, as weighted Motzkin path sums with
/// up steps weighted 1 and down steps from height `h` weighted `λ_h`.
pub fn jfraction_series(spec: &JFractionSpec, order: usize) -> TruncatedSeries {
    let level = &*spec.level;
    let product = &*spec.product;
    let coeffs = path_sums(order, &|_| MultiPoly::one(), level, product);
    TruncatedSeries::new(coeffs, order)
}

/// Evaluates the finite fraction bottom-up with series arithmetic.
///
/// `λ_k` first contributes at `x^{2k}`, so keeping levels `0..⌈N/2⌉+1` is
/// exact through `x^N`.
pub fn jfraction_literal(spec: &JFractionSpec, order: usize) -> TruncatedSeries {
    let depth = order.div_ceil(2) + 1;
    let x = TruncatedSeries::monomial(int(1), 1, order);
    let x2 = TruncatedSeries::monomial(int(1), 2, order);
    let mut tail = TruncatedSeries::zero(order);
    for h in (0..depth as u32).rev() {
        let mut denom = &TruncatedSeries::one(order) - &x.scale(&(spec.level)(h));
        if h + 1 < depth as u32 {
            let lam = x2.scale(&(spec.product)(h + 1));
            denom = &denom - &(&lam * &tail);
        }
        tail = denom.inverse().expect("constant term is 1");
    }
    tail
}

/// The S-fraction and its two J-fraction contractions, side by side.
#[derive(Clone, Debug)]
pub struct ContractionReport {
    pub s_fraction: TruncatedSeries,
    /// `1 + c_1 x J` with `b_0 = c_1 + c_2`, `b_h = c_{2h+1} + c_{2h+2}`,
    /// `λ_h = c_{2h} c_{2h+1}`.
    pub odd_form: TruncatedSeries,
    /// `b_0 = c_1`, `b_h = c_{2h} + c_{2h+1}`, `λ_h = c_{2h-1} c_{2h}`.
    pub even_form: TruncatedSeries,
}

impl ContractionReport {
    pub fn agree(&self) -> bool {
        self.s_fraction == self.odd_form && self.s_fraction == self.even_form
    }
}

/// `c[0]` is `c_1`; entries past the end are taken as 0, which terminates
/// the fraction.
pub fn contraction_check(c: &[MultiPoly], order: usize) -> ContractionReport {
    let c: Arc<Vec<MultiPoly>> = Arc::new(c.to_vec());
    let x = TruncatedSeries::monomial(int(1), 1, order);
    let mut tail = TruncatedSeries::one(order);
    for m in (1..=order + 1).rev() {
        tail = (&TruncatedSeries::one(order) - &(&x.scale(&c_at(&c, m)) * &tail)).inverse().expect("unit constant");
    }
    let s_fraction = tail;

    let (c1, c2) = (c.clone(), c.clone());
    let odd = JFractionSpec::new(
        move |h| c_at(&c1, 2 * h as usize + 1) + c_at(&c1, 2 * h as usize + 2),
        move |h| c_at(&c2, 2 * h as usize) * c_at(&c2, 2 * h as usize + 1),
    );
    let j = jfraction_series(&odd, order);
    let odd_form = &TruncatedSeries::one(order) + &(&x * &j).scale(&c_at(&c, 1));

    let (c1, c2) = (c.clone(), c.clone());
    let even = JFractionSpec::new(
        move |h| match h as usize {
            0 => c_at(&c1, 1),
            h => c_at(&c1, 2 * h) + c_at(&c1, 2 * h + 1),
        },
        move |h| c_at(&c2, 2 * h as usize - 1) * c_at(&c2, 2 * h as usize),
    );
    let even_form = jfraction_series(&even, order);
    ContractionReport { s_fraction, odd_form, even_form }
}

/// `c_i` with 1-based `i`.
fn c_at(c: &[MultiPoly], i: usize) -> MultiPoly {
    i.checked_sub(1).and_then(|k| c.get(k)).cloned().unwrap_or_default()
}

/// The continued fractions whose coefficients the verification suite
/// compares against direct enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `Σ_{n>=1} A_n x^{n-1}`.
    A,
    /// `Σ_{n>=0} B_n x^n`.
    AD,
    /// `1 + Σ_{n>=1} C_n x^n`.
    D,
    /// `Σ_{n>=1} D_n x^{n-1}`.
    C,
    /// `Σ a_{n,k}(p,q) w^k x^{n-1}`.
    Reduced,
    /// `1 + Σ c_{n,k}(β) w^k x^n`.
    ReducedCycles,
    /// `Σ d_{n,k}(β) w^k x^{n-1}`.
    ReducedStarCycles,
    /// `Σ_{n>=0} A_n(p,q,t) x^n`.
    Cfrac1,
    /// `Σ_{n>=0} B_n(p,q,t) x^n`.
    Cfrac2,
}

impl Scheme {
    pub const ALL: [Scheme; 9] = [
        Scheme::A,
        Scheme::AD,
        Scheme::D,
        Scheme::C,
        Scheme::Reduced,
        Scheme::ReducedCycles,
        Scheme::ReducedStarCycles,
        Scheme::Cfrac1,
        Scheme::Cfrac2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Scheme::A => "A",
            Scheme::AD => "A_D",
            Scheme::D => "D",
            Scheme::C => "C",
            Scheme::Reduced => "b",
            Scheme::ReducedCycles => "ccf",
            Scheme::ReducedStarCycles => "dcf",
            Scheme::Cfrac1 => "cfrac1",
            Scheme::Cfrac2 => "cfrac2",
        }
    }

    /// The J-fraction part. For [`Scheme::Cfrac1`] the series is
    /// `1 + x·J` with this `J`.
    pub fn spec(self) -> JFractionSpec {
        let (p, t, u, v, w, y, beta) =
            (var(Var::P), var(Var::T), var(Var::U), var(Var::V), var(Var::W), var(Var::Y), var(Var::Beta));
        let q = var(Var::Q);
        let pq = |h: u32| pq_integer(h);
        let hh = |h: u32| int(i64::from(h));
        match self {
            Scheme::A => {
                let lvl = &u + &(&t * &v);
                let tw = &t * &w;
                JFractionSpec::new(move |h| &lvl * &pq(h + 1), move |h| &tw * &(pq(h) * pq(h + 1)))
            }
            Scheme::AD => {
                let lvl = &(&q * &u) + &(&t * &v);
                let tw = &t * &w;
                JFractionSpec::new(
                    move |h| &y * &p.pow(h) + &lvl * &pq(h),
                    move |h| &tw * &(pq(h) * pq(h)),
                )
            }
            Scheme::D => {
                let lvl = &(&t * &u) + &v;
                let tw = &t * &w;
                JFractionSpec::new(move |h| hh(h) * &lvl, move |h| hh(h) * (&beta + &hh(h - 1)) * &tw)
            }
            Scheme::C => {
                let lvl = &(&t * &u) + &v;
                let tw = &t * &w;
                JFractionSpec::new(move |h| hh(h + 1) * &lvl, move |h| hh(h) * (&beta + &hh(h)) * &tw)
            }
            Scheme::Reduced => JFractionSpec::new(move |h| pq(h + 1), move |h| &w * &(pq(h) * pq(h + 1))),
            Scheme::ReducedCycles => JFractionSpec::new(hh, move |h| hh(h) * (&beta + &hh(h - 1)) * &w),
            Scheme::ReducedStarCycles => {
                JFractionSpec::new(move |h| hh(h + 1), move |h| hh(h) * (&beta + &hh(h)) * &w)
            }
            Scheme::Cfrac1 => {
                let one_t = int(1) + &t;
                JFractionSpec::new(move |h| &one_t * &pq(h + 1), move |h| &t * &(pq(h) * pq(h + 1)))
            }
            Scheme::Cfrac2 => {
                let t2 = t.clone();
                JFractionSpec::new(move |h| &t * &pq(h) + pq(h + 1), move |h| &t2 * &(pq(h) * pq(h)))
            }
        }
    }

    /// The full series through `x^order`.
    pub fn series(self, order: usize) -> TruncatedSeries {
        let j = jfraction_series(&self.spec(), order);
        match self {
            Scheme::Cfrac1 => {
                let x = TruncatedSeries::monomial(int(1), 1, order);
                &TruncatedSeries::one(order) + &(&x * &j)
            }
            _ => j,
        }
    }

    /// `x^{index} ↔ size n`: the series coefficient carrying the size-`n`
    /// polynomial, or `None` when `n` has no coefficient.
    pub fn index_of_size(self, n: usize) -> Option<usize> {
        match self {
            Scheme::A | Scheme::C | Scheme::Reduced | Scheme::ReducedStarCycles => n.checked_sub(1),
            _ => Some(n),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.trim();
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.id().eq_ignore_ascii_case(key))
            .ok_or_else(|| {
                let ids: Vec<&str> = Scheme::ALL.iter().map(|s| s.id()).collect();
                format!("unknown continued fraction {s:?} (expected one of {})", ids.join(", "))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_matches_path_sums() {
        for scheme in Scheme::ALL {
            let spec = scheme.spec();
            for order in [0, 1, 4, 7] {
                assert_eq!(jfraction_series(&spec, order), jfraction_literal(&spec, order), "{scheme} {order}");
            }
        }
    }

    #[test]
    fn zero_products_give_a_geometric_series() {
        let spec = JFractionSpec::from_sequences(vec![int(3)], vec![]);
        let s = jfraction_series(&spec, 5);
        let expect: Vec<MultiPoly> = (0..=5).map(|k| int(3i64.pow(k))).collect();
        assert_eq!(s.coeffs(), &expect[..]);
    }

    #[test]
    fn first_eulerian_coefficients() {
        let a = Scheme::A.series(3);
        let (t, u, v) = (var(Var::T), var(Var::U), var(Var::V));
        assert_eq!(a.coeff(0), int(1));
        assert_eq!(a.coeff(1), &u + &(&t * &v));
    }

    #[test]
    fn catalan_contraction() {
        let rep = contraction_check(&vec![int(1); 16], 6);
        assert!(rep.agree());
        let heads: Vec<MultiPoly> = [1, 1, 2, 5, 14, 42, 132].iter().map(|&c| int(c)).collect();
        assert_eq!(rep.s_fraction.coeffs(), &heads[..]);
        let trivial = contraction_check(&[], 4);
        assert!(trivial.agree());
        assert_eq!(trivial.s_fraction, TruncatedSeries::one(4));
    }

    #[test]
    fn scheme_ids_round_trip() {
        for s in Scheme::ALL {
            assert_eq!(s.id().parse::<Scheme>().unwrap(), s);
        }
        assert_eq!(" a_d ".parse::<Scheme>().unwrap(), Scheme::AD);
        assert!("nope".parse::<Scheme>().is_err());
    }
}
