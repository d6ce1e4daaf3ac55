pub mod bijections;
pub mod error;
pub mod paths;
pub mod perm;
pub mod poly;
pub mod star;
pub mod stats;
pub mod tables;
pub mod theorems;

pub use error::{BijectionError, PathError, PermError, PolyError, StatError, VerifyError};
pub use perm::{parse_permutation, Permutation, Permutations, Transform};
pub use poly::{MultiPoly, Var};
pub use star::{star_map, star_stats, StarMap, StarStats};
pub use stats::BoundaryConvention;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/star.md")]
    mod star {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
