//! Shared test support: a small parser for polynomials as printed in
//! the tables, and naive statistic oracles written straight from the definitions.

#![allow(dead_code)]

use permstat::{MultiPoly, Permutation, Var};

/// Parses expressions such as `(p+q)[(p+q)^2+2(p+q)+3]` or
/// `\beta(15\beta^2 + 30\beta + 16)`. Juxtaposition multiplies; square
/// brackets group like parentheses.
pub fn expr(text: &str) -> MultiPoly {
    let cleaned = text.replace("\\beta", "b").replace("beta", "b");
    let tokens: Vec<char> = cleaned.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser { tokens, pos: 0 };
    let out = parser.sum();
    assert_eq!(parser.pos, parser.tokens.len(), "trailing input in {text:?}");
    out
}

struct Parser {
    tokens: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn sum(&mut self) -> MultiPoly {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.product()
            }
            _ => self.product(),
        };
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product();
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        acc
    }

    fn product(&mut self) -> MultiPoly {
        let mut acc = self.power();
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.power();
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' || c == '[' => acc = acc * self.power(),
                _ => return acc,
            }
        }
    }

    fn power(&mut self) -> MultiPoly {
        let base = self.atom();
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number();
            base.pow(e as u32)
        } else {
            base
        }
    }

    fn number(&mut self) -> i64 {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.tokens[start..self.pos].iter().collect::<String>().parse().expect("a number")
    }

    fn atom(&mut self) -> MultiPoly {
        match self.peek().expect("unexpected end of expression") {
            '(' | '[' => {
                self.pos += 1;
                let inner = self.sum();
                assert!(matches!(self.peek(), Some(')' | ']')), "unbalanced brackets");
                self.pos += 1;
                inner
            }
            c if c.is_ascii_digit() => MultiPoly::constant(self.number()),
            c => {
                self.pos += 1;
                let v = match c {
                    'p' => Var::P,
                    'q' => Var::Q,
                    't' => Var::T,
                    'u' => Var::U,
                    'v' => Var::V,
                    'w' => Var::W,
                    'y' => Var::Y,
                    'b' => Var::Beta,
                    other => panic!("unknown symbol {other:?}"),
                };
                MultiPoly::var(v)
            }
        }
    }
}

/// Entry classes with explicit boundary values, as four counts
/// `(peak, valley, da, dd)`.
pub fn naive_classes(w: &[usize], left: usize, right: usize) -> [usize; 4] {
    let mut e = vec![left];
    e.extend_from_slice(w);
    e.push(right);
    let mut out = [0; 4];
    for i in 1..=w.len() {
        let (a, b, c) = (e[i - 1], e[i], e[i + 1]);
        let slot = match (a < b, b < c) {
            (true, false) => 0,
            (false, true) => 1,
            (true, true) => 2,
            (false, false) => 3,
        };
        out[slot] += 1;
    }
    out
}

/// Occurrences of a vincular pattern of length three with exactly one
/// adjacency. `shape` is the relative order of the three letters, e.g.
/// `[3, 1, 2]`; `adjacent_first` says whether the dash comes after the
/// second letter (`31-2`) or after the first (`2-31`).
pub fn naive_vincular(w: &[usize], shape: [usize; 3], adjacent_first: bool) -> usize {
    let n = w.len();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let adjacent = if adjacent_first { b == a + 1 } else { c == b + 1 };
                if !adjacent {
                    continue;
                }
                let vals = [w[a], w[b], w[c]];
                let rank = |x: usize| vals.iter().filter(|&&y| y <= x).count();
                if [rank(vals[0]), rank(vals[1]), rank(vals[2])] == shape {
                    count += 1;
                }
            }
        }
    }
    count
}

/// `(cros, nest)` by looking at every ordered pair of arcs.
pub fn naive_cros_nest(w: &[usize]) -> (usize, usize) {
    let n = w.len();
    let s = |i: usize| w[i - 1];
    let (mut cros, mut nest) = (0, 0);
    for i in 1..=n {
        for j in 1..=n {
            if (i < j && j <= s(i) && s(i) < s(j)) || (i > j && j > s(i) && s(i) > s(j)) {
                cros += 1;
            }
            if (i < j && j <= s(j) && s(j) < s(i)) || (i > j && j > s(j) && s(j) > s(i)) {
                nest += 1;
            }
        }
    }
    (cros, nest)
}

/// Aggregate statistics of `sigma` by brute force, under all three
/// boundary conventions.
#[derive(Debug, PartialEq, Eq)]
pub struct Naive {
    pub des: usize,
    pub exc: usize,
    pub wex: usize,
    pub defi: usize,
    pub fix: usize,
    pub cyc: usize,
    pub zz: [usize; 4],
    pub zt: [usize; 4],
    pub tt: [usize; 4],
    pub fmax: usize,
    pub les: usize,
    pub less: usize,
    pub res: usize,
    pub ress: usize,
    pub cros: usize,
    pub nest: usize,
}

pub fn naive(sigma: &Permutation) -> Naive {
    let w = sigma.word();
    let n = w.len();
    let mut seen = vec![false; n + 1];
    let mut cyc = 0;
    for start in 1..=n {
        if !seen[start] {
            cyc += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = w[i - 1];
            }
        }
    }
    let fmax = (0..n)
        .filter(|&i| {
            let next = if i + 1 < n { w[i + 1] } else { n + 1 };
            let prev = if i > 0 { w[i - 1] } else { 0 };
            prev < w[i] && w[i] < next && w[..i].iter().all(|&x| x < w[i])
        })
        .count();
    let (cros, nest) = naive_cros_nest(w);
    Naive {
        des: (1..n).filter(|&i| w[i - 1] > w[i]).count(),
        exc: (1..=n).filter(|&i| w[i - 1] > i).count(),
        wex: (1..=n).filter(|&i| w[i - 1] >= i).count(),
        defi: (1..=n).filter(|&i| w[i - 1] < i).count(),
        fix: (1..=n).filter(|&i| w[i - 1] == i).count(),
        cyc,
        zz: naive_classes(w, 0, 0),
        zt: naive_classes(w, 0, n + 1),
        tt: naive_classes(w, n + 1, n + 1),
        fmax,
        les: naive_vincular(w, [3, 1, 2], true),
        less: naive_vincular(w, [1, 3, 2], true),
        res: naive_vincular(w, [2, 1, 3], false),
        ress: naive_vincular(w, [2, 3, 1], false),
        cros,
        nest,
    }
}

pub mod props {
    //! Property bodies shared by the property suite and the acceptance run.
    //! Each returns a description of the first violation.

    use super::naive;
    use num_bigint::BigInt;
    use permstat::poly::{gamma_expand, GammaVector, Monomial, NVARS};
    use permstat::stats::{crossing_nesting, cyclic_stats, linear_stats, pattern_stats, BoundaryConvention};
    use permstat::{MultiPoly, Permutation, Transform};
    use proptest::prelude::*;

    macro_rules! ensure {
        ($cond:expr, $($msg:tt)*) => {
            if !$cond {
                return Err(format!($($msg)*));
            }
        };
    }

    pub fn poly_strategy(with_laurent: bool) -> impl Strategy<Value = MultiPoly> {
        let term = (prop::array::uniform8(0u16..3), -5i64..=5);
        let shift = if with_laurent { 0u32..3 } else { 0u32..1 };
        (prop::collection::vec(term, 0..6), shift).prop_map(|(terms, shift)| {
            let terms = terms.into_iter().map(|(e, c)| {
                let exps: [u16; NVARS] = e;
                (Monomial::from_exponents(exps), BigInt::from(c))
            });
            MultiPoly::from_terms(terms).with_q_shift(shift)
        })
    }

    pub fn perm_strategy(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Permutation> {
        sizes.prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|w| Permutation::new(w).expect("a shuffle is a permutation"))
    }

    /// Gamma vectors whose entries are free of `t`.
    pub fn gamma_strategy() -> impl Strategy<Value = GammaVector> {
        (0u32..8).prop_flat_map(|d| {
            let entry = poly_strategy(false).prop_map(|p| {
                p.specialize(&[(permstat::Var::T, 1.into())]).expect("integer substitution")
            });
            prop::collection::vec(entry, (d / 2 + 1) as usize..=(d / 2 + 1) as usize)
                .prop_map(move |gammas| GammaVector { degree: d, gammas })
        })
    }

    pub fn ring_axioms(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> Result<(), String> {
        let zero = MultiPoly::zero();
        let one = MultiPoly::one();
        ensure!(a + b == b + a, "addition does not commute for {a} and {b}");
        ensure!(a * b == b * a, "multiplication does not commute for {a} and {b}");
        ensure!((a + b) + c == a + (b + c), "addition is not associative");
        ensure!((a * b) * c == a * (b * c), "multiplication is not associative");
        ensure!(a * (b + c) == a * b + a * c, "distributivity fails for {a}, {b}, {c}");
        ensure!(a + &zero == *a && a * &one == *a, "identities fail for {a}");
        ensure!(a - a == zero && a + (-a) == zero, "additive inverse fails for {a}");
        if !b.is_zero() {
            ensure!((a * b).exact_divide(b).as_ref() == Ok(a), "(a*b)/b != a for {a}, {b}");
        }
        Ok(())
    }

    pub fn gamma_round_trip(g: &GammaVector) -> Result<(), String> {
        let h = g.recompose();
        let back = gamma_expand(&h, g.degree).map_err(|e| format!("{h}: {e}"))?;
        ensure!(back == *g, "gamma_expand(recompose(g)) != g for h = {h}");
        Ok(())
    }

    /// Statistics against the naive oracle, refinement sums, the
    /// peak/valley relations, the reverse-complement septuple and
    /// `defi σ = exc σ^{-1}`.
    pub fn permutation_properties(sigma: &Permutation) -> Result<(), String> {
        let nv = naive(sigma);
        let zz = linear_stats(sigma, BoundaryConvention::ZeroZero);
        let zt = linear_stats(sigma, BoundaryConvention::ZeroTop);
        let tt = linear_stats(sigma, BoundaryConvention::TopTop);
        let cs = cyclic_stats(sigma);
        let ps = pattern_stats(sigma);
        let cn = crossing_nesting(sigma);
        let classes = |l: &permstat::stats::LinearStats| [l.peak, l.valley, l.da, l.dd];
        let mine = (
            [zz.des, cs.exc, cs.wex, cs.defi, cs.fix, cs.cyc],
            [classes(&zz), classes(&zt), classes(&tt)],
            [zt.fmax().unwrap(), ps.les, ps.less, ps.res, ps.ress, cn.cros, cn.nest],
        );
        let oracle = (
            [nv.des, nv.exc, nv.wex, nv.defi, nv.fix, nv.cyc],
            [nv.zz, nv.zt, nv.tt],
            [nv.fmax, nv.les, nv.less, nv.res, nv.ress, nv.cros, nv.nest],
        );
        ensure!(mine == oracle, "{sigma}: library {mine:?} vs oracle {oracle:?}");

        let sum = |v: &[usize]| v.iter().sum::<usize>();
        ensure!(
            sum(&ps.les_k) == ps.les && sum(&ps.res_k) == ps.res && sum(&ps.ress_k) == ps.ress,
            "{sigma}: pattern refinements do not sum to the aggregates"
        );
        ensure!(
            sum(&cn.cros_k) == cn.cros && sum(&cn.nest_k) == cn.nest,
            "{sigma}: crossing refinements do not sum to the aggregates"
        );
        let n = sigma.len();
        ensure!([ps.les_k.len(), ps.res_k.len(), ps.ress_k.len(), cn.cros_k.len(), cn.nest_k.len()] == [n; 5], "{sigma}: refinement length");
        ensure!(n == 0 || zz.peak == zz.valley + 1, "{sigma}: peak* != valley* + 1");
        ensure!(zt.peak == zt.valley, "{sigma}: peak != valley");

        let rc = sigma.transform(Transform::ReverseComplement);
        let (rc_tt, rc_ps) = (linear_stats(&rc, BoundaryConvention::TopTop), pattern_stats(&rc));
        let left = [zz.des, zz.peak, zz.valley, zz.da, zz.dd, ps.res, ps.les];
        let right = [rc_tt.des, rc_tt.valley, rc_tt.peak, rc_tt.da, rc_tt.dd, rc_ps.less, rc_ps.ress];
        ensure!(left == right, "{sigma}: septuple {left:?} vs {right:?} on {rc}");
        ensure!(cs.defi == cyclic_stats(&sigma.inverse()).exc, "{sigma}: defi != exc of the inverse");
        Ok(())
    }
}
