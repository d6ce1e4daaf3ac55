//! The appendix coefficient tables and the two bijection figures,
//! regenerated from scratch.
//!
//! Rows come out in a fixed order: by `(n, k, j)` for the appendix tables and
//! lexicographically by permutation for the figures.

use crate::bijections::{phi, psi};
use crate::perm::{Permutation, Permutations};
use crate::star::{star_map, star_stats};
use crate::stats::{crossing_nesting, cyclic_stats, linear_stats, pattern_stats, BoundaryConvention};
use crate::theorems::{coeff_family, CoeffFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    /// Rows as tabular lines, `a & b & c \\`.
    pub fn to_tex(&self) -> String {
        self.rows.iter().map(|r| format!("{} \\\\\n", r.join(" & "))).collect()
    }

    /// Header line plus one line per row. Cells containing a comma or a
    /// quote are quoted.
    pub fn to_csv(&self) -> String {
        let line = |cells: &[String]| {
            let quoted: Vec<String> = cells
                .iter()
                .map(|c| if c.contains([',', '"']) { format!("\"{}\"", c.replace('"', "\"\"")) } else { c.clone() })
                .collect();
            quoted.join(",") + "\n"
        };
        std::iter::once(line(&self.header)).chain(self.rows.iter().map(|r| line(r))).collect()
    }
}

/// The tables the command line can print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    AppendixA,
    AppendixB,
    AppendixC,
    AppendixD,
    Figure1,
    Figure2,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::AppendixA,
        TableId::AppendixB,
        TableId::AppendixC,
        TableId::AppendixD,
        TableId::Figure1,
        TableId::Figure2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::AppendixA => "appendix-a",
            TableId::AppendixB => "appendix-b",
            TableId::AppendixC => "appendix-c",
            TableId::AppendixD => "appendix-d",
            TableId::Figure1 => "figure-1",
            TableId::Figure2 => "figure-2",
        }
    }

    /// The table at its printed size.
    pub fn build(self) -> Table {
        match self {
            TableId::AppendixA => appendix_a(5),
            TableId::AppendixB => appendix_b(&[(0, 6), (1, 5), (2, 6)]),
            TableId::AppendixC => appendix_c(7),
            TableId::AppendixD => appendix_d(7),
            TableId::Figure1 => figure_1(4),
            TableId::Figure2 => figure_2(4),
        }
    }
}

impl std::str::FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TableId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = TableId::ALL.iter().map(|t| t.name()).collect();
            format!("unknown table {s:?} (expected one of {})", names.join(", "))
        })
    }
}

/// `a_{n,k}(p,q)` for `1 <= n <= n_max`, `0 <= k <= (n-1)/2`.
pub fn appendix_a(n_max: usize) -> Table {
    let mut t = Table::new(&["n", "k", "a"]);
    for n in 1..=n_max {
        for k in 0..=(n - 1) / 2 {
            t.rows.push(vec![n.to_string(), k.to_string(), coeff_family(CoeffFamily::A, n, k, 0).to_string()]);
        }
    }
    t
}

/// `b_{n,k,j}(p,q)` for each `(j, n_max)`, `j <= n <= n_max`,
/// `0 <= k <= (n-j)/2`.
pub fn appendix_b(ranges: &[(usize, usize)]) -> Table {
    let mut t = Table::new(&["n", "k", "j", "b"]);
    for &(j, n_max) in ranges {
        for n in j.max(1)..=n_max {
            for k in 0..=(n - j) / 2 {
                let b = coeff_family(CoeffFamily::B, n, k, j);
                t.rows.push(vec![n.to_string(), k.to_string(), j.to_string(), b.to_string()]);
            }
        }
    }
    t
}

/// The nonzero `c_{n,k}(β)`: `2 <= n <= n_max`, `1 <= k <= n/2`.
pub fn appendix_c(n_max: usize) -> Table {
    let mut t = Table::new(&["n", "k", "c"]);
    for n in 2..=n_max {
        for k in 1..=n / 2 {
            t.rows.push(vec![n.to_string(), k.to_string(), coeff_family(CoeffFamily::C, n, k, 0).to_string()]);
        }
    }
    t
}

/// `d_{n,k}(β)` for `1 <= n <= n_max`, `0 <= k <= (n-1)/2`.
pub fn appendix_d(n_max: usize) -> Table {
    let mut t = Table::new(&["n", "k", "d"]);
    for n in 1..=n_max {
        for k in 0..=(n - 1) / 2 {
            t.rows.push(vec![n.to_string(), k.to_string(), coeff_family(CoeffFamily::D, n, k, 0).to_string()]);
        }
    }
    t
}

fn compact(sigma: &Permutation) -> String {
    sigma.word().iter().map(|v| v.to_string()).collect()
}

/// `σ`, `Φ(σ)`, then the seven statistics of `σ`, which equal the
/// matching cyclic statistics of `Φ(σ)`.
pub fn figure_1(n: usize) -> Table {
    let mut t = Table::new(&["sigma", "tau", "des", "les", "ress", "da-fmax", "dd", "valley", "fmax"]);
    for sigma in Permutations::new(n) {
        let tau = phi(&sigma);
        let ls = linear_stats(&sigma, BoundaryConvention::ZeroTop);
        let ps = pattern_stats(&sigma);
        let fmax = ls.fmax().expect("defined under ZeroTop");
        let stats = [ls.des, ps.les, ps.ress, ls.da - fmax, ls.dd, ls.valley, fmax];
        t.rows.push(row(&[compact(&sigma), compact(&tau)], &stats));
    }
    t
}

/// The statistics of `Φ(σ)` in the column order of [`figure_1`]:
/// `defi, cros, nest, cda, cdd, cvalley, fix`.
pub fn figure_1_image_stats(tau: &Permutation) -> [usize; 7] {
    let cs = cyclic_stats(tau);
    let cn = crossing_nesting(tau);
    [cs.defi, cn.cros, cn.nest, cs.cda, cs.cdd, cs.cvalley, cs.fix]
}

/// `σ`, `Ψ(σ)`, `Ψ(σ)*`, then six statistics of `σ` under the `0, 0`
/// boundary.
pub fn figure_2(n: usize) -> Table {
    let mut t = Table::new(&["sigma", "tau", "tau*", "des", "les", "res", "da*", "dd*", "valley*"]);
    for sigma in Permutations::new(n) {
        let tau = psi(&sigma).expect("psi is defined on every permutation");
        let ls = linear_stats(&sigma, BoundaryConvention::ZeroZero);
        let ps = pattern_stats(&sigma);
        let stats = [ls.des, ps.les, ps.res, ls.da, ls.dd, ls.valley];
        t.rows.push(row(&[compact(&sigma), compact(&tau), star_map(&tau).to_string()], &stats));
    }
    t
}

/// The star statistics of `Ψ(σ)` in the column order of [`figure_2`]:
/// `defi*-1, cros*, nest*, cda*+fix*, cdd*, cvalley*`.
pub fn figure_2_image_stats(tau: &Permutation) -> [usize; 6] {
    let ss = star_stats(&star_map(tau));
    [ss.defi - 1, ss.cros, ss.nest, ss.cda + ss.fix, ss.cdd, ss.cvalley]
}

fn row(words: &[String], stats: &[usize]) -> Vec<String> {
    words.iter().cloned().chain(stats.iter().map(|s| s.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(appendix_a(5).rows.len(), 9);
        assert_eq!(appendix_a(5).rows[5], ["4", "1", "p^2+2*p*q+q^2+2*p+2*q"]);
        let f1 = figure_1(4);
        assert_eq!(f1.rows.len(), 24);
        assert_eq!(f1.rows[3].join(" "), "1342 1432 1 0 1 0 0 1 2");
        let f2 = figure_2(4);
        assert_eq!(f2.rows[0].join(" "), "1234 2341 1230 0 0 0 3 0 0");
        assert!(f1.to_tex().starts_with("1234 & 1234 & 0 & 0 & 0 & 0 & 0 & 0 & 4 \\\\\n"));
        assert!(appendix_c(3).to_csv().starts_with("n,k,c\n2,1,beta\n"));
    }

    #[test]
    fn image_columns_agree() {
        for (sigma, r) in Permutations::new(4).zip(figure_1(4).rows) {
            let image: Vec<String> = figure_1_image_stats(&phi(&sigma)).iter().map(|s| s.to_string()).collect();
            assert_eq!(image, r[2..]);
        }
        for (sigma, r) in Permutations::new(4).zip(figure_2(4).rows) {
            let image: Vec<String> =
                figure_2_image_stats(&psi(&sigma).unwrap()).iter().map(|s| s.to_string()).collect();
            assert_eq!(image, r[3..]);
        }
    }
}
