//! Builders and verifiers for the steps of the four-instanton construction.

pub mod bundles;
pub mod claims;
pub mod lemmas;
pub mod report;
pub mod sigma;
pub mod theta;

pub use bundles::{build_g, degree_part_submodule, koszul_map, thooft_from_class, thooft_instanton, verify_global_generation, verify_instanton, CLASS_RETRIES};
pub use claims::{double_line_test, line_intersection_length, verify_claims};
pub use lemmas::{check_cohomology_iy3, check_degeneracy, check_five_secant, check_l1l4x_resolution, check_x_divisor, degeneracy_ideal, maximal_minors, triple_quadric, x_divisor, XDivisor, XShape};
pub use report::{betti_json, elem_json, Status, VerificationReport};
pub use sigma::{general_sigma, kernel_chern, sigma, sigma_is_epi, SigmaMorphism, SIGMA_RETRIES};
pub use theta::{theta, theta_image_ideal, ThetaMorphism};
