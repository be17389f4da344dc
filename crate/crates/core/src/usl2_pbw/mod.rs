//! U(sl₂) in the PBW basis `E^e F^f H^h`, its grading, the map from the
//! universal Racah algebra, and the dihedral symmetries.

mod checks;
mod d3;
mod element;
mod grading;
mod sharp;
pub mod text;

pub use checks::{
    kernel_polynomial, kernel_polynomial_at, verify_casimir_images, verify_equivariance, verify_even_identities,
    verify_kernel_generators, verify_sharp_relations,
};
pub use d3::{d3_apply, d3_apply_racah, D3Gen, D3};
pub use element::{Monomial, PBWElement};
pub use grading::{
    as_lambda_polynomial, casimir, component, graded_components, is_even, lambda_form, lambda_poly, GradedComponent,
    LambdaForm,
};
pub use sharp::{expected_casimir_image, sharp, RacahGen, SharpImages};
