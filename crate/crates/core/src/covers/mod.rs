//! Cover algebras, smoothness verdicts and singular witnesses.

mod algebra;
mod smooth;
mod spec;
mod witness;

pub use algebra::{build_triple_algebra, build_uniform_algebra, AlgebraKind, AssociativityAudit, CoverAlgebra};
pub use smooth::{is_smooth_triple, is_smooth_uniform, Strength, Verdict};
pub use spec::{branch_form_degrees, TripleCoverSpec, UniformCoverSpec};
pub use witness::{
    generate_singular_witness, generate_verified_witness, linear_part_rank, verify_witness, Witness, WitnessCheck,
};
