mod common;

use common::props::*;
use permstat::bijections::{phi, phi_inverse, psi};
use permstat::stats::{linear_stats, pattern_stats, BoundaryConvention};
use permstat::tables::{figure_1_image_stats, figure_2_image_stats};
use permstat::Permutations;
use proptest::prelude::*;

fn check(r: Result<(), String>) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn polynomial_ring_axioms(a in poly_strategy(false), b in poly_strategy(false), c in poly_strategy(false)) {
        check(ring_axioms(&a, &b, &c))?;
    }

    #[test]
    fn laurent_ring_axioms(a in poly_strategy(true), b in poly_strategy(true), c in poly_strategy(true)) {
        check(ring_axioms(&a, &b, &c))?;
    }

    #[test]
    fn gamma_vectors_round_trip(g in gamma_strategy()) {
        check(gamma_round_trip(&g))?;
    }

    #[test]
    fn random_permutations(sigma in perm_strategy(7..=12)) {
        check(permutation_properties(&sigma))?;
    }

    #[test]
    fn phi_inverts(sigma in perm_strategy(1..=7)) {
        prop_assert_eq!(phi_inverse(&phi(&sigma)).unwrap(), sigma);
    }

    #[test]
    fn bijections_transfer_statistics(sigma in perm_strategy(7..=12)) {
        let zt = linear_stats(&sigma, BoundaryConvention::ZeroTop);
        let zz = linear_stats(&sigma, BoundaryConvention::ZeroZero);
        let ps = pattern_stats(&sigma);
        let fmax = zt.fmax().unwrap();
        let linear = [zt.des, ps.les, ps.ress, zt.da - fmax, zt.dd, zt.valley, fmax];
        prop_assert_eq!(figure_1_image_stats(&phi(&sigma)), linear);
        let star = [zz.des, ps.les, ps.res, zz.da, zz.dd, zz.valley];
        prop_assert_eq!(figure_2_image_stats(&psi(&sigma).unwrap()), star);
    }
}

#[test]
fn small_permutations_exhaustively() {
    for n in 0..=6 {
        for sigma in Permutations::new(n) {
            permutation_properties(&sigma).unwrap();
        }
    }
}
