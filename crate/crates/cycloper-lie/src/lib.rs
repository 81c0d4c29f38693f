//! Semisimple Lie algebras in Chevalley bases with the principal grading,
//! Weyl groups, automorphisms, folding and finite opers.

pub mod algebra;
pub mod aut;
pub mod canonical;
pub mod cartan;
pub mod error;
pub mod fold;
pub mod rep;
pub mod roots;
pub mod vecops;
pub mod weyl;

pub use algebra::{exp_nilpotent, ChevalleyAlgebra};
pub use aut::{theta_fixed_nilpotent, AlgebraAut, AutKind, DiagramAut, FixedNilpotent};
pub use canonical::{canonical_element, finite_canonical, FiniteOperClass};
pub use cartan::CartanDatum;
pub use error::LieError;
pub use fold::{fold, FoldedDatum};
pub use rep::Representation;
pub use roots::{Root, RootSystem};
pub use weyl::{
    linkage_equal, linking_element, simple_reflection_lift, weyl_lift, weyl_orbit_shifted, WeylElement, WeylGroup,
};
