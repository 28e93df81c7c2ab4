//! Exact PBW normal-form arithmetic in the rational Cherednik algebra of
//! G(m,1,n) over its formal parameter ring Q(zeta_m)[t, kappa, c_1..c_{m-1}],
//! with check suites for the commutation identities, centrality of symmetric
//! polynomials in the Dunkl-Opdam generators, and the duality involution.

mod constructors;
mod element;
mod perm;
mod psi;
mod suites;
mod welement;

pub use element::{CherednikAlgebra, CherednikElement, Generator, PBWMonomial};
pub use perm::Perm;
pub use suites::{CheckCase, CheckReport};
pub use welement::WElement;

use thiserror::Error;

/// Group order above which the engine refuses to build the algebra.
pub const GROUP_ORDER_CAP: usize = 10_000;
/// PBW term count above which a computation is aborted.
pub const TERM_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("group order m^n * n! = {order} exceeds the desk-scale cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("element grew past {cap} PBW terms; computation aborted")]
    TooManyTerms { cap: usize },
    #[error("index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
}
