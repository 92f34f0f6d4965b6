//! An exact ordered non-Archimedean field of Puiseux-type expressions in a
//! formal parameter `t`, signed valuation, lifts of signed tropical vectors
//! and exact linear feasibility over the field.

mod lift;
mod linalg;
mod lp;
mod num;
mod poly;

pub use lift::{
    all_types, certificate_chain, closed_halfspace_contains, cone_member, cone_weights, conv_member, conv_weights,
    lift_canonical, lift_coefficients, lift_typed, lift_witness, lift_witness_all_types, CertificateChain,
    PuiseuxVector,
};
pub use linalg::{nullspace, rref};
pub use lp::{lp_feasible, lp_solve, FeasibilityProblem, LpOutcome, OrderedField};
pub use num::PuiseuxNum;
pub use poly::LPoly;
