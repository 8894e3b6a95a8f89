//! Hopf algebra maps between bicrossed products: the quadruple description,
//! maps fixing `A`, cohomologous matched pairs, and maps between Drinfel'd
//! doubles of groups.

mod double_hom;
mod enumerate;
mod quadruple;
mod stabilize;

pub use double_hom::{
    check_double_morphism_data, DoubleCondition, DoubleMorphismData, DoubleMorphismReport,
};
pub use enumerate::{
    enumerate_hopf_isomorphisms, enumerate_hopf_maps, enumerate_morphisms, BicrossedMorphism,
};
pub use quadruple::{
    assemble_psi, assemble_psi_unchecked, decompose_psi, verify_quadruple, QuadCondition,
    Quadruple, QuadrupleReport,
};
pub use stabilize::{
    check_cohomologous, check_schur_zassenhaus, check_tensor_decomposition, is_coboundary,
    tensor_decomposition_witnesses, verify_stabilizing_pair, StabCondition, StabilizingPair,
    StabilizingReport,
};
