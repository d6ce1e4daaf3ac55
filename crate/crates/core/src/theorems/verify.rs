//! The identity checks, one per theorem or corollary, each an exact
//! polynomial comparison at a single size `n`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::{build_polynomial, coeff_family, coeff_generating, derangement_egf, enumerate_sum, eulerian_egf, mono};
use super::{involution_descent_poly, CoeffFamily, Family};
use crate::bijections::{phi, psi};
use crate::error::VerifyError;
use crate::paths::{enumerate_histories, fv_map, fz_map, history_weight, jfraction_literal, Flavor, Scheme, WeightScheme};
use crate::perm::{factorial, Permutation, Permutations};
use crate::poly::{euler_number, gamma_expand, int, var, MultiPoly, Var};
use crate::star::{star_map, star_stats};
use crate::stats::{crossing_nesting, cyclic_stats, linear_stats, pattern_stats, BoundaryConvention};

macro_rules! checks {
    ($($variant:ident => $id:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $id,)*
                }
            }
        }
    };
}

checks! {
    ThmAIdentity => "THM_A_IDENTITY",
    ThmADivisibility => "THM_A_DIVISIBILITY",
    Branden51 => "BRANDEN_51",
    PhiTransfer => "PHI_TRANSFER",
    CorTangent => "COR_TANGENT",
    ThmBIdentity => "THM_B_IDENTITY",
    CorSecant => "COR_SECANT",
    AbEqual => "AB_EQUAL",
    FhTangent => "FH_TANGENT",
    FhSecant => "FH_SECANT",
    DCycle => "DCYCLE",
    StarExpansion => "STAR_EXPANSION",
    PsiTransfer => "PSI_TRANSFER",
    FvBijectivity => "FV_BIJECTIVITY",
    FzWeight => "FZ_WEIGHT",
    CfMatchA => "CF_MATCH_A",
    CfMatchB => "CF_MATCH_B",
    CfMatchC => "CF_MATCH_C",
    CfMatchD => "CF_MATCH_D",
    EgfA => "EGF_A",
    EgfB => "EGF_B",
    InvolutionGamma => "INVOLUTION_GAMMA",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CheckId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let key = s.trim().replace('-', "_");
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.id().eq_ignore_ascii_case(&key))
            .ok_or_else(|| VerifyError::UnknownCheckId(s.to_string()))
    }
}

/// Largest `n` each group of checks runs at. [`Bounds::from_env`] lets
/// `PERMSTAT_NMAX` replace every bound at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Enumerations of a six-variable polynomial over `S_n`.
    pub linear: usize,
    pub divisibility: usize,
    /// Enumerations of the eight-variable `B_n`.
    pub eight_variable: usize,
    /// Single-statistic corollaries over `S_n` or `D_n`.
    pub corollary: usize,
    /// Per-permutation bijection checks.
    pub bijection: usize,
    pub series: usize,
    pub egf: usize,
    pub involution: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { linear: 8, divisibility: 9, eight_variable: 7, corollary: 9, bijection: 7, series: 9, egf: 8, involution: 12 }
    }
}

impl Bounds {
    pub fn uniform(n: usize) -> Self {
        Self {
            linear: n,
            divisibility: n,
            eight_variable: n,
            corollary: n,
            bijection: n,
            series: n,
            egf: n,
            involution: n,
        }
    }

    /// Defaults, or `PERMSTAT_NMAX` for every bound when it is set to an
    /// integer.
    pub fn from_env() -> Self {
        std::env::var("PERMSTAT_NMAX")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::uniform)
            .unwrap_or_default()
    }

    pub fn max_n(&self, check: CheckId) -> usize {
        use CheckId::*;
        match check {
            ThmAIdentity | Branden51 => self.linear,
            ThmADivisibility => self.divisibility,
            ThmBIdentity => self.eight_variable,
            CorTangent | CorSecant | AbEqual | FhTangent | FhSecant | DCycle | StarExpansion => self.corollary,
            PhiTransfer | PsiTransfer | FvBijectivity | FzWeight => self.bijection,
            CfMatchA | CfMatchB | CfMatchC | CfMatchD => self.series,
            EgfA | EgfB => self.egf,
            InvolutionGamma => self.involution,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: CheckId,
    pub n: usize,
    pub status: Status,
    /// Set exactly when the check failed.
    pub witness: Option<String>,
    /// Extra values worth printing, such as quotients or gamma vectors.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{tag} {} n={}", self.check, self.n)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// Runs `check` at size `n` under the default bounds (or `PERMSTAT_NMAX`).
pub fn verify(check: CheckId, n: usize) -> Result<VerificationReport, VerifyError> {
    verify_with(check, n, &Bounds::from_env())
}

pub fn verify_with(check: CheckId, n: usize, bounds: &Bounds) -> Result<VerificationReport, VerifyError> {
    if n < 1 {
        return Err(VerifyError::BelowMinimum { check: check.id(), n, min: 1 });
    }
    let bound = bounds.max_n(check);
    if n > bound {
        return Err(VerifyError::BoundExceeded { check: check.id(), n, bound });
    }
    let mut notes = Vec::new();
    let outcome = run(check, n, &mut notes);
    let (status, witness) = match outcome {
        Ok(()) => (Status::Pass, None),
        Err(w) => (Status::Fail, Some(w)),
    };
    Ok(VerificationReport { check, n, status, witness, notes })
}

type Outcome = Result<(), String>;

fn same(what: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: lhs - rhs = {}", lhs - rhs))
    }
}

fn at(p: &MultiPoly, assignment: &[(Var, i64)]) -> MultiPoly {
    p.eval_at(assignment).expect("integer specialization of a polynomial")
}

const UVW_ONE: [(Var, i64); 3] = [(Var::U, 1), (Var::V, 1), (Var::W, 1)];

fn run(check: CheckId, n: usize, notes: &mut Vec<String>) -> Outcome {
    use CheckId::*;
    match check {
        ThmAIdentity => thm_a_identity(n),
        ThmADivisibility => thm_a_divisibility(n, notes),
        Branden51 => branden(n),
        PhiTransfer => phi_transfer(n),
        CorTangent => cor_tangent(n),
        ThmBIdentity => thm_b_identity(n),
        CorSecant => cor_secant(n),
        AbEqual => ab_equal(n, notes),
        FhTangent => fh_tangent(n, notes),
        FhSecant => fh_secant(n, notes),
        DCycle => dcycle(n),
        StarExpansion => star_expansion(n, notes),
        PsiTransfer => psi_transfer(n),
        FvBijectivity => fv_bijectivity(n),
        FzWeight => fz_weight(n),
        CfMatchA => cf_match(n, &[(Scheme::A, build_polynomial(Family::A, n)), (Scheme::Reduced, coeff_generating(CoeffFamily::A, n)), (Scheme::Cfrac1, at(&build_polynomial(Family::A, n), &UVW_ONE))]),
        CfMatchB => cf_match(n, &[(Scheme::AD, build_polynomial(Family::BCyclic, n)), (Scheme::Cfrac2, b_pqt(n))]),
        CfMatchC => cf_match(n, &[(Scheme::D, build_polynomial(Family::C, n)), (Scheme::ReducedCycles, coeff_generating(CoeffFamily::C, n))]),
        CfMatchD => cf_match(n, &[(Scheme::C, build_polynomial(Family::DStar, n)), (Scheme::ReducedStarCycles, coeff_generating(CoeffFamily::D, n))]),
        EgfA => {
            let direct = at(&build_polynomial(Family::A, n), &[(Var::P, 1), (Var::Q, 1), (Var::U, 1), (Var::V, 1), (Var::W, 1)]);
            same("EGF vs A_n(t)", &eulerian_egf(n)[n], &direct)
        }
        EgfB => {
            let direct = at(&derangement_exc(n), &[(Var::P, 1), (Var::Q, 1)]);
            same("EGF vs B_n(t)", &derangement_egf(n)[n], &direct)
        }
        InvolutionGamma => involution_gamma(n, notes),
    }
}

fn t() -> MultiPoly {
    var(Var::T)
}

fn one_plus_t() -> MultiPoly {
    int(1) + t()
}

fn a_coeffs(n: usize) -> Vec<MultiPoly> {
    (0..=(n - 1) / 2).map(|k| coeff_family(CoeffFamily::A, n, k, 0)).collect()
}

/// The w-degree of a coefficient generating polynomial must stay inside the
/// range the expansion uses.
fn within(gen: &MultiPoly, v: Var, max: usize) -> Outcome {
    match gen.degree_in(v) {
        Some(d) if d as usize > max => Err(format!("{} reaches degree {d} in {}, above {max}", gen, v.name())),
        _ => Ok(()),
    }
}

fn thm_a_identity(n: usize) -> Outcome {
    within(&coeff_generating(CoeffFamily::A, n), Var::W, (n - 1) / 2)?;
    let tw = t() * var(Var::W);
    let base = var(Var::U) + t() * var(Var::V);
    let rhs: MultiPoly =
        a_coeffs(n).iter().enumerate().map(|(k, a)| a * &tw.pow(k as u32) * base.pow((n - 1 - 2 * k) as u32)).sum();
    same("A_n vs expansion", &build_polynomial(Family::A, n), &rhs)
}

fn thm_a_divisibility(n: usize, notes: &mut Vec<String>) -> Outcome {
    let pq = var(Var::P) + var(Var::Q);
    for (k, a) in a_coeffs(n).iter().enumerate() {
        match a.exact_divide(&pq.pow(k as u32)) {
            Ok(quot) => notes.push(format!("a_{{{n},{k}}}/(p+q)^{k} = {quot}")),
            Err(_) => return Err(format!("(p+q)^{k} does not divide a_{{{n},{k}}} = {a}")),
        }
    }
    Ok(())
}

fn branden(n: usize) -> Outcome {
    let lhs = enumerate_sum(n, |s| {
        let ps = pattern_stats(s);
        let peaks = linear_stats(s, BoundaryConvention::TopTop).peak;
        Some(mono(&[(Var::P, ps.less), (Var::Q, ps.ress), (Var::W, peaks)]))
    });
    within(&lhs, Var::W, (n - 1) / 2)?;
    for (k, a) in a_coeffs(n).iter().enumerate() {
        let scaled = a * &int(1 << (n - 1 - 2 * k));
        same(&format!("peak_B = {k}"), &lhs.coefficient_of(Var::W, k as i64), &scaled)?;
    }
    Ok(())
}

fn bijective(n: usize, image: impl Iterator<Item = Permutation>) -> Outcome {
    let seen: HashSet<Permutation> = image.collect();
    if seen.len() as u64 == factorial(n) {
        Ok(())
    } else {
        Err(format!("image has {} elements, expected {}", seen.len(), factorial(n)))
    }
}

fn phi_transfer(n: usize) -> Outcome {
    for sigma in Permutations::new(n) {
        let tau = phi(&sigma);
        let ls = linear_stats(&sigma, BoundaryConvention::ZeroTop);
        let ps = pattern_stats(&sigma);
        let fmax = ls.fmax().expect("defined under ZeroTop");
        let left = [ps.ress, ps.les, ls.des, ls.da - fmax, ls.dd, ls.valley, fmax];
        let cs = cyclic_stats(&tau);
        let cn = crossing_nesting(&tau);
        let right = [cn.nest, cn.cros, cs.defi, cs.cda, cs.cdd, cs.cvalley, cs.fix];
        if left != right || ps.ress_k != cn.nest_k {
            return Err(format!("sigma = {sigma}, phi = {tau}: {left:?} vs {right:?}"));
        }
    }
    bijective(n, Permutations::new(n).map(|s| phi(&s)))
}

fn psi_transfer(n: usize) -> Outcome {
    let mut image = HashSet::new();
    for sigma in Permutations::new(n) {
        let tau = psi(&sigma).map_err(|e| format!("sigma = {sigma}: {e}"))?;
        let ls = linear_stats(&sigma, BoundaryConvention::ZeroZero);
        let ps = pattern_stats(&sigma);
        let left = [ps.res, ps.les, ls.des, ls.da, ls.dd, ls.valley];
        let ss = star_stats(&star_map(&tau));
        let right = [ss.nest, ss.cros, ss.defi - 1, ss.cda + ss.fix, ss.cdd, ss.cvalley];
        if left != right {
            return Err(format!("sigma = {sigma}, psi = {tau}: {left:?} vs {right:?}"));
        }
        image.insert(tau);
    }
    bijective(n, image.into_iter())
}

/// `Σ_{S_n} p^nest q^cros t^wex`.
fn tangent_poly(n: usize) -> MultiPoly {
    enumerate_sum(n, |s| {
        let cn = crossing_nesting(s);
        Some(mono(&[(Var::P, cn.nest), (Var::Q, cn.cros), (Var::T, cyclic_stats(s).wex)]))
    })
}

/// `Σ_{D_n} p^nest q^cros t^exc`.
fn derangement_exc(n: usize) -> MultiPoly {
    enumerate_sum(n, |s| {
        s.is_derangement().then(|| {
            let cn = crossing_nesting(s);
            mono(&[(Var::P, cn.nest), (Var::Q, cn.cros), (Var::T, cyclic_stats(s).exc)])
        })
    })
}

fn cor_tangent(n: usize) -> Outcome {
    let rhs: MultiPoly = a_coeffs(n)
        .iter()
        .enumerate()
        .map(|(k, a)| a * &t().pow(k as u32 + 1) * one_plus_t().pow((n - 1 - 2 * k) as u32))
        .sum();
    same("tangent expansion", &tangent_poly(n), &rhs)
}

fn thm_b_identity(n: usize) -> Outcome {
    let cyclic = build_polynomial(Family::BCyclic, n);
    same("cyclic vs linear B_n", &cyclic, &build_polynomial(Family::BLinear, n))?;
    let gen = coeff_generating(CoeffFamily::B, n);
    within(&gen, Var::Y, n)?;
    let tw = t() * var(Var::W);
    let base = var(Var::Q) * var(Var::U) + t() * var(Var::V);
    let mut rhs = MultiPoly::zero();
    for j in 0..=n {
        let gj = gen.coefficient_of(Var::Y, j as i64);
        within(&gj, Var::W, (n - j) / 2)?;
        for k in 0..=(n - j) / 2 {
            let b = gj.coefficient_of(Var::W, k as i64);
            rhs += &b * &var(Var::Y).pow(j as u32) * tw.pow(k as u32) * base.pow((n - j - 2 * k) as u32);
        }
    }
    same("B_n vs expansion", &cyclic, &rhs)
}

fn b0_coeffs(n: usize) -> Vec<MultiPoly> {
    (0..=n / 2).map(|k| coeff_family(CoeffFamily::B, n, k, 0)).collect()
}

fn cor_secant(n: usize) -> Outcome {
    let base = int(1) + var(Var::Q) * t();
    let rhs: MultiPoly =
        b0_coeffs(n).iter().enumerate().map(|(k, b)| b * &t().pow(k as u32) * base.pow((n - 2 * k) as u32)).sum();
    same("secant expansion", &derangement_exc(n), &rhs)
}

/// `B_n(p, q, t)`: the remaining variables set to 1.
fn b_pqt(n: usize) -> MultiPoly {
    at(&build_polynomial(Family::BCyclic, n), &[(Var::U, 1), (Var::V, 1), (Var::W, 1), (Var::Y, 1)])
}

fn ab_equal(n: usize, notes: &mut Vec<String>) -> Outcome {
    let a = at(&build_polynomial(Family::A, n), &UVW_ONE);
    let b = b_pqt(n);
    notes.push(format!("A_{n}(p,q,t) = {a}"));
    same("A_n(p,q,t) vs B_n(p,q,t)", &a, &b)
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn fh_tangent(n: usize, notes: &mut Vec<String>) -> Outcome {
    let lhs = at(&tangent_poly(n), &[(Var::T, -1)]);
    let rhs = if n % 2 == 0 {
        MultiPoly::zero()
    } else {
        coeff_family(CoeffFamily::A, n, (n - 1) / 2, 0) * int(sign((n + 1) / 2))
    };
    same("signed wex sum", &lhs, &rhs)?;
    // A_n(t) = Σ t^des at t = -1 is (-1)^{(n-1)/2} E_n for odd n, 0 otherwise
    let a_minus_one = at(&build_polynomial(Family::A, n), &[(Var::P, 1), (Var::Q, 1), (Var::T, -1), (Var::U, 1), (Var::V, 1), (Var::W, 1)]);
    let expected = if n % 2 == 0 { int(0) } else { MultiPoly::constant(euler_number(n)) * int(sign((n - 1) / 2)) };
    notes.push(format!("A_{n}(-1) = {a_minus_one}"));
    same("A_n(-1) vs Euler number", &a_minus_one, &expected)?;
    let alternating = enumerate_sum(n, |s| {
        s.is_alternating().then(|| {
            let ps = pattern_stats(s);
            mono(&[(Var::P, ps.res), (Var::Q, ps.les)])
        })
    });
    notes.push(format!("(res, les) over alternating permutations: {alternating}"));
    Ok(())
}

fn fh_secant(n: usize, notes: &mut Vec<String>) -> Outcome {
    let d = derangement_exc(n);
    // t = -1/q, so t^e becomes (-1)^e q^{-e}
    let lhs: MultiPoly = (0..=n)
        .map(|e| d.coefficient_of(Var::T, e as i64).with_q_shift(e as u32) * int(sign(e)))
        .sum();
    let rhs = if n % 2 == 1 {
        MultiPoly::zero()
    } else {
        coeff_family(CoeffFamily::B, n, n / 2, 0).with_q_shift((n / 2) as u32) * int(sign(n / 2))
    };
    same("signed exc sum at t = -1/q", &lhs, &rhs)?;
    let b_minus_one = at(&d, &[(Var::P, 1), (Var::Q, 1), (Var::T, -1)]);
    let expected = if n % 2 == 1 { int(0) } else { MultiPoly::constant(euler_number(n)) * int(sign(n / 2)) };
    notes.push(format!("B_{n}(-1) = {b_minus_one}"));
    same("B_n(-1) vs Euler number", &b_minus_one, &expected)
}

fn dcycle(n: usize) -> Outcome {
    let lhs = at(&build_polynomial(Family::C, n), &UVW_ONE);
    let gen = coeff_generating(CoeffFamily::C, n);
    within(&gen, Var::W, n / 2)?;
    if !gen.coefficient_of(Var::W, 0).is_zero() {
        return Err(format!("c_{{{n},0}} = {} is not zero", gen.coefficient_of(Var::W, 0)));
    }
    let rhs: MultiPoly = (0..=n / 2)
        .map(|k| gen.coefficient_of(Var::W, k as i64) * t().pow(k as u32) * one_plus_t().pow((n - 2 * k) as u32))
        .sum();
    same("derangement cycle expansion", &lhs, &rhs)
}

fn star_expansion(n: usize, notes: &mut Vec<String>) -> Outcome {
    let lhs = at(&build_polynomial(Family::DStar, n), &UVW_ONE);
    let gen = coeff_generating(CoeffFamily::D, n);
    within(&gen, Var::W, (n - 1) / 2)?;
    let beta_one = var(Var::Beta) + int(1);
    let mut rhs = MultiPoly::zero();
    for k in 0..=(n - 1) / 2 {
        let d = gen.coefficient_of(Var::W, k as i64);
        if k >= 1 {
            match d.exact_divide(&beta_one) {
                Ok(q) => notes.push(format!("d_{{{n},{k}}}/(beta+1) = {q}")),
                Err(_) => return Err(format!("beta+1 does not divide d_{{{n},{k}}} = {d}")),
            }
        }
        rhs += &d * &t().pow(k as u32) * one_plus_t().pow((n - 1 - 2 * k) as u32);
    }
    same("star cycle expansion", &lhs, &rhs)
}

fn fv_bijectivity(n: usize) -> Outcome {
    let mut image = HashSet::new();
    let mut weight = MultiPoly::zero();
    for sigma in Permutations::new(n) {
        let h = fv_map(&sigma);
        weight += history_weight(&h, WeightScheme::Linear).map_err(|e| e.to_string())?;
        if !image.insert(h) {
            return Err(format!("fv_map is not injective at {sigma}"));
        }
    }
    let all: HashSet<_> = enumerate_histories(n - 1, Flavor::Fv).into_iter().collect();
    if image != all {
        return Err(format!("image has {} histories, H_{} has {}", image.len(), n - 1, all.len()));
    }
    same("FV weights vs A_n", &weight, &build_polynomial(Family::A, n))
}

fn fz_weight(n: usize) -> Outcome {
    let mut image = HashSet::new();
    let mut weight = MultiPoly::zero();
    for sigma in Permutations::new(n) {
        let h = fz_map(&sigma);
        weight += history_weight(&h, WeightScheme::Cyclic).map_err(|e| e.to_string())?;
        if !image.insert(h) {
            return Err(format!("fz_map is not injective at {sigma}"));
        }
    }
    let all: HashSet<_> = enumerate_histories(n, Flavor::Fz).into_iter().collect();
    if !image.is_subset(&all) {
        return Err("fz_map leaves the FZ histories".to_string());
    }
    same("FZ weights vs B_n", &weight, &build_polynomial(Family::BCyclic, n))
}

fn cf_match(n: usize, pairs: &[(Scheme, MultiPoly)]) -> Outcome {
    for (scheme, direct) in pairs {
        let Some(idx) = scheme.index_of_size(n) else { continue };
        let series = scheme.series(idx);
        same(&format!("scheme {scheme} at x^{idx}"), &series.coeff(idx), direct)?;
        if *scheme != Scheme::Cfrac1 {
            let literal = jfraction_literal(&scheme.spec(), idx);
            same(&format!("scheme {scheme} literal fraction"), &literal.coeff(idx), direct)?;
        }
    }
    Ok(())
}

fn involution_gamma(n: usize, notes: &mut Vec<String>) -> Outcome {
    let poly = involution_descent_poly(n);
    let g = gamma_expand(&poly, (n - 1) as u32).map_err(|e| format!("I_{n}(t) = {poly}: {e}"))?;
    let gammas: Vec<String> = g.gammas.iter().map(ToString::to_string).collect();
    notes.push(format!("gamma = ({})", gammas.join(", ")));
    notes.push(format!("nonnegative: {}", if g.is_nonnegative() { "yes" } else { "no" }));
    same("gamma recomposition", &g.recompose(), &poly)
}
