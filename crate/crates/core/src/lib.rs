pub mod scalars;
pub mod ncpoly;
pub mod hopf;
pub mod expr;
pub mod linalg;
pub mod vectors;
pub mod report;
pub mod tables;
pub mod bimodlab;
pub mod store;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/actions.md")]
    mod actions {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/highest_weight.md")]
    mod highest_weight {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/store.md")]
    mod store {}
}
