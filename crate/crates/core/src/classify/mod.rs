//! The Hopf algebras `H_{4n,ω}` that factorize through `H₄` and `k[Cₙ]`:
//! construction, matched-pair census, isomorphism classes and
//! automorphism groups.

mod h4n;
mod iso;
mod pairs;

pub use h4n::{build_h4n, h4_cn_pair, h4n_pair, h4n_with_root, H4nSpec};
pub use iso::{
    aut_group_profile, automorphism_shape, brute_force_automorphisms, brute_force_isomorphism,
    class_representative, exponent_label, is_unit_subgroup, iso_classes, iso_criterion,
    iso_criterion_arith, iso_witness, partition_matrix, power_quadruple, predicted_class_count,
    unit_lift, ArithmeticProfile, AutProfile, AutShape, BruteVerdict, IsoClasses, IsoVerdict,
};
pub use pairs::{
    enumerate_matched_pairs_h4_cn, klein_pair, klein_survey, matched_pairs_h4_group, root_of_pair,
    KleinSurvey, PairSearch, KLEIN_SIGNS,
};
