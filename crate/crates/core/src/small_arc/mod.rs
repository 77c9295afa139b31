//! Methods for small arcs: the jyā series, the cubic approximations, the
//! iterative inversion and its formal-series view.

mod coeffs;
mod iteration;
mod series;

pub use coeffs::{
    a001764, a001764_by_recurrence, default_order, gf_closed_form, iterate_coeff_series,
    CoeffSeries,
};
pub use iteration::{
    fixed_point_exists, variyar_arcsin, variyar_exact, IterationStep, IterationTrace,
    DEFAULT_MAX_ITER,
};
pub use series::{
    arcsin_coefficient, arcsin_coefficients, arcsin_poly3, arcsin_series, cubic_jya,
    default_cutoff, jya_series_terms, madhava_jya, QUADRANT,
};
