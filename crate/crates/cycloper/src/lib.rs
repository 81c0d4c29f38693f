//! Cyclotomic opers on the projective line: connections and gauge action,
//! canonical forms, Miura opers and their reproduction, flag-variety
//! coordinates and cyclotomic Gaudin models.
//!
//! Every routine is generic over the constant field `K`; the aliases at the
//! bottom fix `K` to [`cycloper_arith::Cyclo`].

pub mod connection;
pub mod error;
pub mod flag;
pub mod gaudin;
pub mod miura;
pub mod oper;

pub use connection::{
    connection_residue, cover_symmetry, gauge_transform, gauss_factorize, gauss_factorize_group, lift_to_cover,
    log_derivative, monodromy_at_origin, regularize, solve_fundamental, solve_matrix_ode, Connection, Equivariant,
    Fundamental, GaussFactors, GroupElement, OdeFailure, Shape, Symmetry,
};
pub use error::{CoreError, ErrorFamily, Result};
pub use flag::{fixed_flag_cells, flag_position, limit_subspace, locate_flag, FlagCell, FlagPoint};
pub use gaudin::{lambda0_weight, DualAlgebra, EnergyCheck, GaudinModel, GaudinSite};
pub use miura::{
    a2_system_residuals, build_miura, reproduce_generic, reproduce_orbit_a1, reproduce_orbit_a2, reproduce_simple,
    riccati_residual, riccati_solve, A2Seed, Branch, ExtraPole, Reproduction, ResidueLedger, RiccatiMode, Site,
};
pub use oper::{
    canonical_representative, canonical_residue, classify_general_form, dominant_shifted, is_regular_at, oper_residue,
    regularity_condition, u1_coefficient, CanonicalOper, GeneralForm, MiuraOper,
};

pub use cycloper_arith as arith;
pub use cycloper_lie as lie;

use cycloper_arith::Cyclo;

pub type ScalarConnection = Connection<Cyclo>;
pub type ScalarGroupElement = GroupElement<Cyclo>;
pub type ScalarMiura = MiuraOper<Cyclo>;
pub type ScalarSymmetry = Symmetry<Cyclo>;
