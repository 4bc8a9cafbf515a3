//! Kernels of ring maps from the p-ring, computed one Z⁷-degree at a time.

mod fiber;
mod initial;
mod kernel;
pub mod minimality;
pub mod report;
pub mod scaling;

pub use fiber::{fibers, quadric_fibers, DegreeFiber};
pub use initial::{
    exponent_rank, image_weights, initial_of_space, initial_report, initial_space, is_binomial, monomial_degeneration,
    non_binomials, toric_quadrics,
};
pub use kernel::{generator_profile, kernel_at_degree, GradedKernelReport, KernelBasis};
pub use minimality::{degree3_analysis, degree3_minimality, Degree3Analysis};
pub use report::{export_m2, parse_m2, report_json, report_value};
pub use scaling::{
    scaling_defects, scaling_defects_with, solve_scaling, solve_scaling_with, verify_scaling, verify_scaling_with,
    ScalingFailure, ScalingVector,
};
