//! Density bounds and empirical surveys.

pub mod constants;
pub mod survey;

pub use constants::{
    bound_linear_family, bound_nminus1_family, coprime_squarefree_density,
    heuristic_independence_bounds, heuristic_linear_bound, prachar_density, DensityTerm,
    DensityValue, EulerFactor,
};
pub use survey::{empirical_survey, percent, Denominator, SurveyFamily, SurveyRow, SurveySpec, CSV_HEADER};
