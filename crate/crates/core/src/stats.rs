//! Linear, cyclic, pattern and crossing/nesting statistics.
//!
//! Every function here is a direct `O(n^2)` scan of the one-line word. The
//! boundary convention decides what the virtual entries `σ(0)` and `σ(n+1)`
//! are when an entry is classified against its two neighbours.

use std::fmt;

use crate::error::StatError;
use crate::perm::Permutation;

/// Values assigned to `σ(0)` and `σ(n+1)` when classifying entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryConvention {
    /// `σ(0) = σ(n+1) = 0`; statistics carry a `*` suffix.
    ZeroZero,
    /// `σ(0) = 0`, `σ(n+1) = n+1`; the plain statistics, plus foremaxima.
    ZeroTop,
    /// `σ(0) = σ(n+1) = n+1`; statistics carry a `_B` suffix.
    TopTop,
}

impl BoundaryConvention {
    fn bounds(self, n: usize) -> (usize, usize) {
        match self {
            Self::ZeroZero => (0, 0),
            Self::ZeroTop => (0, n + 1),
            Self::TopTop => (n + 1, n + 1),
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Self::ZeroZero => "*",
            Self::ZeroTop => "",
            Self::TopTop => "_B",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Self::ZeroZero => "zz",
            Self::ZeroTop => "zt",
            Self::TopTop => "tt",
        }
    }
}

impl std::str::FromStr for BoundaryConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zz" => Ok(Self::ZeroZero),
            "zt" => Ok(Self::ZeroTop),
            "tt" => Ok(Self::TopTop),
            other => Err(format!("unknown convention {other:?} (expected zz, zt or tt)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryClass {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

/// Class of every entry, indexed by `value - 1`.
pub fn entry_classes(sigma: &Permutation, conv: BoundaryConvention) -> Vec<EntryClass> {
    let n = sigma.len();
    let (lo, hi) = conv.bounds(n);
    let ext = |i: usize| if i == 0 { lo } else if i == n + 1 { hi } else { sigma.at(i) };
    let mut classes = vec![EntryClass::Peak; n];
    for i in 1..=n {
        let (prev, cur, next) = (ext(i - 1), ext(i), ext(i + 1));
        classes[cur - 1] = match (prev < cur, cur < next) {
            (true, false) => EntryClass::Peak,
            (false, true) => EntryClass::Valley,
            (true, true) => EntryClass::DoubleAscent,
            (false, false) => EntryClass::DoubleDescent,
        };
    }
    classes
}

pub fn descents(sigma: &Permutation) -> usize {
    sigma.word().windows(2).filter(|w| w[0] > w[1]).count()
}

/// Double ascents (under `σ(0)=0, σ(n+1)=n+1`) that are left-to-right maxima.
pub fn foremaxima(sigma: &Permutation) -> usize {
    let classes = entry_classes(sigma, BoundaryConvention::ZeroTop);
    let mut running_max = 0;
    let mut count = 0;
    for &v in sigma.word() {
        if v > running_max {
            running_max = v;
            if classes[v - 1] == EntryClass::DoubleAscent {
                count += 1;
            }
        }
    }
    count
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearStats {
    pub convention: BoundaryConvention,
    pub des: usize,
    pub peak: usize,
    pub valley: usize,
    pub da: usize,
    pub dd: usize,
    fmax: Option<usize>,
}

impl LinearStats {
    /// Number of foremaxima; only meaningful under [`BoundaryConvention::ZeroTop`].
    pub fn fmax(&self) -> Result<usize, StatError> {
        self.fmax.ok_or(StatError::UndefinedUnderConvention { name: "fmax", required: "zero-top" })
    }

    pub fn record(&self) -> StatRecord {
        let s = self.convention.suffix();
        let mut rec = StatRecord::default();
        rec.push("des", self.des);
        rec.push(format!("peak{s}"), self.peak);
        rec.push(format!("valley{s}"), self.valley);
        rec.push(format!("da{s}"), self.da);
        rec.push(format!("dd{s}"), self.dd);
        if let Some(f) = self.fmax {
            rec.push("fmax", f);
        }
        rec
    }
}

pub fn linear_stats(sigma: &Permutation, conv: BoundaryConvention) -> LinearStats {
    let mut stats = LinearStats {
        convention: conv,
        des: descents(sigma),
        peak: 0,
        valley: 0,
        da: 0,
        dd: 0,
        fmax: (conv == BoundaryConvention::ZeroTop).then(|| foremaxima(sigma)),
    };
    for class in entry_classes(sigma, conv) {
        match class {
            EntryClass::Peak => stats.peak += 1,
            EntryClass::Valley => stats.valley += 1,
            EntryClass::DoubleAscent => stats.da += 1,
            EntryClass::DoubleDescent => stats.dd += 1,
        }
    }
    stats
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclicClass {
    Peak,
    Valley,
    DoubleExcedance,
    DoubleDrop,
    Fixed,
}

/// Cyclic class of every value `x`, indexed by `x - 1`, comparing `σ^{-1}(x)`,
/// `x` and `σ(x)`.
pub fn cyclic_classes(sigma: &Permutation) -> Vec<CyclicClass> {
    let inv = sigma.inverse();
    (1..=sigma.len())
        .map(|x| {
            let (pre, image) = (inv.at(x), sigma.at(x));
            if image == x {
                CyclicClass::Fixed
            } else {
                match (pre < x, x < image) {
                    (true, false) => CyclicClass::Peak,
                    (false, true) => CyclicClass::Valley,
                    (true, true) => CyclicClass::DoubleExcedance,
                    (false, false) => CyclicClass::DoubleDrop,
                }
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CyclicStats {
    pub exc: usize,
    pub wex: usize,
    pub defi: usize,
    pub fix: usize,
    pub cyc: usize,
    pub cpeak: usize,
    pub cvalley: usize,
    pub cda: usize,
    pub cdd: usize,
}

impl CyclicStats {
    pub fn record(&self) -> StatRecord {
        let mut rec = StatRecord::default();
        for (name, v) in [
            ("exc", self.exc),
            ("wex", self.wex),
            ("defi", self.defi),
            ("fix", self.fix),
            ("cyc", self.cyc),
            ("cpeak", self.cpeak),
            ("cvalley", self.cvalley),
            ("cda", self.cda),
            ("cdd", self.cdd),
        ] {
            rec.push(name, v);
        }
        rec
    }
}

pub fn cyclic_stats(sigma: &Permutation) -> CyclicStats {
    let mut stats = CyclicStats { cyc: sigma.cycle_count(), ..Default::default() };
    for (i, &v) in sigma.word().iter().enumerate() {
        let i = i + 1;
        if v > i {
            stats.exc += 1;
        }
        if v >= i {
            stats.wex += 1;
        } else {
            stats.defi += 1;
        }
    }
    for class in cyclic_classes(sigma) {
        match class {
            CyclicClass::Peak => stats.cpeak += 1,
            CyclicClass::Valley => stats.cvalley += 1,
            CyclicClass::DoubleExcedance => stats.cda += 1,
            CyclicClass::DoubleDrop => stats.cdd += 1,
            CyclicClass::Fixed => stats.fix += 1,
        }
    }
    stats
}

/// The four vincular pattern counts `31-2`, `13-2`, `2-13`, `2-31` and the
/// per-value refinements, each refinement vector indexed by `value - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternStats {
    pub les: usize,
    pub less: usize,
    pub res: usize,
    pub ress: usize,
    pub les_k: Vec<usize>,
    pub res_k: Vec<usize>,
    pub ress_k: Vec<usize>,
}

impl PatternStats {
    pub fn record(&self) -> StatRecord {
        let mut rec = StatRecord::default();
        rec.push("les", self.les);
        rec.push("less", self.less);
        rec.push("res", self.res);
        rec.push("ress", self.ress);
        rec.push_refinement("les_k", self.les_k.clone());
        rec.push_refinement("res_k", self.res_k.clone());
        rec.push_refinement("ress_k", self.ress_k.clone());
        rec
    }
}

pub fn pattern_stats(sigma: &Permutation) -> PatternStats {
    let n = sigma.len();
    let s = |i: usize| sigma.at(i);
    let mut out = PatternStats {
        les: 0,
        less: 0,
        res: 0,
        ress: 0,
        les_k: vec![0; n],
        res_k: vec![0; n],
        ress_k: vec![0; n],
    };
    // 31-2 and 13-2: adjacent pair (i-1, i), lone letter at j > i.
    for i in 2..=n {
        for j in i + 1..=n {
            if s(i - 1) > s(j) && s(j) > s(i) {
                out.les += 1;
                out.les_k[s(j) - 1] += 1;
            }
            if s(i - 1) < s(j) && s(j) < s(i) {
                out.less += 1;
            }
        }
    }
    // 2-13 and 2-31: lone letter at i, adjacent pair (j, j+1) with j > i.
    for i in 1..n {
        for j in i + 1..n {
            if s(j + 1) > s(i) && s(i) > s(j) {
                out.res += 1;
                out.res_k[s(i) - 1] += 1;
            }
            if s(j + 1) < s(i) && s(i) < s(j) {
                out.ress += 1;
                out.ress_k[s(i) - 1] += 1;
            }
        }
    }
    out
}

/// Crossings and nestings of the arc diagram `i -> f(i)`, refinements indexed
/// by the arc origin `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingNesting {
    pub cros: usize,
    pub nest: usize,
    pub cros_k: Vec<usize>,
    pub nest_k: Vec<usize>,
}

impl CrossingNesting {
    pub fn record(&self) -> StatRecord {
        let mut rec = StatRecord::default();
        rec.push("cros", self.cros);
        rec.push("nest", self.nest);
        rec.push_refinement("cros_k", self.cros_k.clone());
        rec.push_refinement("nest_k", self.nest_k.clone());
        rec
    }
}

pub fn crossing_nesting(sigma: &Permutation) -> CrossingNesting {
    crossing_nesting_of_map(sigma.word())
}

/// `map[i-1]` is the image of `i`; images need not lie in `[n]`, which lets
/// the star words (values `0..n`) reuse this.
pub(crate) fn crossing_nesting_of_map(map: &[usize]) -> CrossingNesting {
    let n = map.len();
    let f = |i: usize| map[i - 1];
    let mut out = CrossingNesting { cros: 0, nest: 0, cros_k: vec![0; n], nest_k: vec![0; n] };
    for k in 1..=n {
        for i in 1..=n {
            let (fi, fk) = (f(i), f(k));
            if (i < k && k <= fi && fi < fk) || (i > k && k > fi && fi > fk) {
                out.cros_k[k - 1] += 1;
            }
            if (i < k && k <= fk && fk < fi) || (i > k && k > fk && fk > fi) {
                out.nest_k[k - 1] += 1;
            }
        }
    }
    out.cros = out.cros_k.iter().sum();
    out.nest = out.nest_k.iter().sum();
    out
}

/// An ordered collection of named statistics, as rendered by the CLI.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatRecord {
    counts: Vec<(String, usize)>,
    refinements: Vec<(String, Vec<usize>)>,
}

impl StatRecord {
    pub fn push(&mut self, name: impl Into<String>, value: usize) {
        self.counts.push((name.into(), value));
    }

    pub fn push_refinement(&mut self, name: impl Into<String>, values: Vec<usize>) {
        self.refinements.push((name.into(), values));
    }

    pub fn extend(&mut self, other: StatRecord) {
        self.counts.extend(other.counts);
        self.refinements.extend(other.refinements);
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.counts.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn refinement(&self, name: &str) -> Option<&[usize]> {
        self.refinements.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    pub fn counts(&self) -> &[(String, usize)] {
        &self.counts
    }

    pub fn refinements(&self) -> &[(String, Vec<usize>)] {
        &self.refinements
    }
}

impl fmt::Display for StatRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in &self.counts {
            writeln!(f, "{name} = {v}")?;
        }
        for (name, vs) in &self.refinements {
            let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{name} = [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Everything the library knows about `sigma`: linear statistics under
/// `conv`, then cyclic, pattern, crossing/nesting and star statistics.
pub fn full_record(sigma: &Permutation, conv: BoundaryConvention) -> StatRecord {
    let mut rec = linear_stats(sigma, conv).record();
    rec.extend(cyclic_stats(sigma).record());
    rec.extend(pattern_stats(sigma).record());
    rec.extend(crossing_nesting(sigma).record());
    rec.extend(crate::star::star_stats(&crate::star::star_map(sigma)).record());
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{parse_permutation, Permutations, Transform};

    fn perm(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn double_ascents_and_foremaxima() {
        let sigma = perm("42157368");
        let zt = linear_stats(&sigma, BoundaryConvention::ZeroTop);
        assert_eq!(zt.da, 3);
        assert_eq!(zt.fmax().unwrap(), 2);
        let zz = linear_stats(&sigma, BoundaryConvention::ZeroZero);
        assert_eq!(zz.da, 2);
        assert!(zz.fmax().is_err());
        assert!(linear_stats(&sigma, BoundaryConvention::TopTop).fmax().is_err());
    }

    #[test]
    fn singleton_is_a_peak_under_zero_boundaries() {
        let s = linear_stats(&perm("1"), BoundaryConvention::ZeroZero);
        assert_eq!((s.peak, s.valley, s.da, s.dd, s.des), (1, 0, 0, 0, 0));
    }

    #[test]
    fn cyclic_examples() {
        let c = cyclic_stats(&perm("3762154"));
        assert_eq!((c.exc, c.fix), (3, 0));
        let c = cyclic_stats(&Permutation::identity(4));
        assert_eq!((c.fix, c.exc, c.wex, c.cyc), (4, 0, 4, 4));
        let c = cyclic_stats(&perm("21"));
        assert_eq!((c.cpeak, c.cvalley, c.cda, c.cdd, c.cyc), (1, 1, 0, 0, 1));
    }

    #[test]
    fn right_embracing_numbers_of_the_worked_example() {
        let sigma = perm("412796583");
        let p = pattern_stats(&sigma);
        let in_word_order: Vec<usize> = sigma.word().iter().map(|&v| p.ress_k[v - 1]).collect();
        assert_eq!(in_word_order, [1, 0, 0, 2, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn pattern_edge_cases() {
        for n in 0..7 {
            let p = pattern_stats(&Permutation::identity(n));
            assert_eq!((p.les, p.ress), (0, 0));
        }
        let p = pattern_stats(&perm("213"));
        assert_eq!(p.res_k, [0, 1, 0]);
    }

    #[test]
    fn crossings_of_the_diagram_example() {
        let cn = crossing_nesting(&perm("3762154"));
        assert_eq!((cn.cros, cn.nest), (3, 3));
        let cn = crossing_nesting(&Permutation::identity(5));
        assert_eq!((cn.cros, cn.nest), (0, 0));
        let cn = crossing_nesting(&perm("21"));
        assert_eq!((cn.cros, cn.nest), (0, 0));
    }

    #[test]
    fn classification_is_exhaustive_and_peaks_balance() {
        for n in 1..=7 {
            for s in Permutations::new(n) {
                let zz = linear_stats(&s, BoundaryConvention::ZeroZero);
                assert_eq!(zz.peak, zz.valley + 1);
                assert_eq!(zz.peak + zz.valley + zz.da + zz.dd, n);
                let zt = linear_stats(&s, BoundaryConvention::ZeroTop);
                assert_eq!(zt.peak, zt.valley);
                let c = cyclic_stats(&s);
                assert_eq!(c.wex, c.exc + c.fix);
                assert_eq!(c.cpeak + c.cvalley + c.cda + c.cdd + c.fix, n);
                assert_eq!(c.defi, cyclic_stats(&s.inverse()).exc);
            }
        }
    }

    #[test]
    fn reverse_complement_septuple() {
        for n in 1..=7 {
            for s in Permutations::new(n) {
                let rc = s.transform(Transform::ReverseComplement);
                let a = linear_stats(&s, BoundaryConvention::ZeroZero);
                let b = linear_stats(&rc, BoundaryConvention::TopTop);
                let (pa, pb) = (pattern_stats(&s), pattern_stats(&rc));
                assert_eq!(
                    (a.des, a.peak, a.valley, a.da, a.dd, pa.res, pa.les),
                    (b.des, b.valley, b.peak, b.da, b.dd, pb.less, pb.ress),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn record_lookup() {
        let rec = full_record(&perm("42157368"), BoundaryConvention::ZeroTop);
        assert_eq!(rec.get("da"), Some(3));
        assert_eq!(rec.get("fmax"), Some(2));
        assert_eq!(rec.refinement("ress_k").unwrap().len(), 8);
        let rec = full_record(&perm("42157368"), BoundaryConvention::ZeroZero);
        assert_eq!(rec.get("da*"), Some(2));
        assert_eq!(rec.get("fmax"), None);
    }
}
