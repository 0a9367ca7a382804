//! Exact arithmetic: rationals, finite fields, integer and field matrices.

mod fieldmat;
mod galois;
mod intmat;
mod scalar;
mod unipoly;

pub use fieldmat::FieldMatrix;
pub use galois::{is_prime, GaloisField, MAX_CHARACTERISTIC};
pub use intmat::{
    group_from_relations, hermite_normal_form, smith_normal_form, AbelianPresentation, GroupOrder, IntMatrix,
    SmithForm,
};
pub use scalar::{Field, Fq, Scalar};
pub use unipoly::UniPoly;
