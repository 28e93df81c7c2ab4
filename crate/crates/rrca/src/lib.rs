//! Exact computation of block decompositions of restricted rational
//! Cherednik algebras for the wreath products G(m,1,n) and their normal
//! subgroups G(m,d,n), at arbitrary numeric-cyclotomic or generic-symbolic
//! parameters, together with a PBW normal-form engine that machine-verifies
//! the algebraic identities the block theory rests on.
//!
//! The main entry points:
//! - [`blocks::block_partition_gm1n`] / [`blocks::block_partition_gmdn`]:
//!   block partitions of all baby Verma modules;
//! - [`blocks::block_invariant`]: the deciding multiset of exponents;
//! - [`cherednik::CherednikAlgebra`]: exact arithmetic in the algebra over
//!   its formal parameter ring, with identity-check suites.

pub mod blocks;
pub mod cherednik;
pub mod combin;
pub mod exactnum;
pub mod params;
