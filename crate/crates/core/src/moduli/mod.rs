//! Dimension counts, classification verdicts and the extension-case solver.

pub mod classify;
pub mod discrepancy;
pub mod extension;

pub use classify::{
    classify, classify_p2, generic_extension_shape, nonempty_range, plane_polarization,
    ClassifyError, Clause, ExtensionShape, ModuliVerdict, PlaneC1, Rationality, Status,
};
pub use discrepancy::{
    admissible_xis, check_xi, d_eta_star, d_eta_star_auto, d_zeta, eta_refinement, ext_dim_2_18,
    ext_dim_2_19, ext_dim_case_a, moduli_bound_2_18, moduli_dim, moduli_of_w_bound,
    strictly_semistable_possible, xi_square_floor, FormulaError,
};
pub use extension::{
    rank2_semistable_possible, solve_extension_case, Case, ExtensionDatum, ExtensionError, Lengths,
    Underlying,
};
