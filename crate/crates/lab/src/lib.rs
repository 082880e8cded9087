//! Finite rings as Cayley tables, their two-sided ideal lattices, and
//! exhaustive checks of the CI property, Chinese remaindering and the
//! characterization of RSA-ideals as products of distinct maximal ideals.

pub mod error;
pub mod ideal;
pub mod ring;
pub mod spec;
pub mod tables;
pub mod verify;

pub use error::{LabError, Result};
pub use ideal::{
    all_ideals, fideal_intersection, fideal_product, fideal_sum, ideal_generated_by,
    principal_ideal, FIdeal, IdealLattice,
};
pub use ring::{FiniteRing, RingKind, DEFAULT_ORDER_CAP};
pub use verify::{
    ci_witness, crt_cor1_verify, is_ci_ring, is_commutative, is_maximal, is_rsa_ideal_fin,
    quotient_ring, theorem5_verify, unit_count, Report, Violation,
};
