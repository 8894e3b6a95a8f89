//! Matched pairs of Hopf algebras and the products built from them.

mod bicrossed;
mod double;
mod factorize;
mod matched;
mod mirror;

pub use bicrossed::{bicrossed_product, bicrossed_product_unchecked, smash_product, SmashSide};
pub use double::{
    double_from_skew_pairing, drinfeld_double, drinfeld_double_group, PairingConvention,
    SkewPairing,
};
pub use factorize::{canonical_inclusions, factorize, multiplication_map};
pub use matched::{MatchedPair, MatchedPairReport, MpAxiom};
pub use mirror::{composed_mirror_actions, mirror_pair};
