//! Binary linear codes: duality, weights, equivalence, classification.

mod code;
mod enumerate;
mod equivalence;
mod known;

pub use code::{
    dual, is_doubly_even, is_self_dual, weight_enumerator, BinaryCode, WeightEnumerator,
    MAX_ENUMERATION_DIM,
};
pub use enumerate::{
    all_self_dual_codes, all_self_dual_codes_with, enumerate_self_dual_classes,
    MAX_CLASSIFICATION_LENGTH,
};
pub use equivalence::{are_equivalent, MAX_EQUIVALENCE_LENGTH};
pub use known::{extended_hamming8, i2_power, known_code, known_code_candidates, KNOWN_CODE_NAMES};
