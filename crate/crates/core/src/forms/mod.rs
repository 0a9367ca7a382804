//! Polynomials, homogeneous forms and the operations on them.

mod binary;
mod form;
mod poly;
mod search;
mod text;

pub use binary::{dehomogenize, disc_binary, is_squarefree_binary, sylvester_resultant};
pub use form::{act_linear, monomials, substitute_linear, Form, TwistSpec};
pub use poly::{Exponents, Poly};
pub use search::{singular_point_search, ProjectivePoint, SearchOptions};
pub use text::{format_poly, parse_poly};
