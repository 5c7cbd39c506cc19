#pragma once

namespace liegeo::tol {

// Jacobi identity residual bound for a valid structure-constants tensor.
inline constexpr double jacobi = 1e-10;

// Lower bound on the leading principal minors of an admissible gram matrix.
inline constexpr double positive_definite = 1e-12;

// Default residual bound for classification predicates (Einstein, Berwald,
// Douglas, skew-symmetry, natural reductivity).
inline constexpr double predicate = 1e-9;

// Lower bound on the 2x2 Gram determinant of a flag plane.
inline constexpr double plane_independence = 1e-12;

// Relative singular-value cutoff for subspace rank decisions.
inline constexpr double subspace_rank = 1e-10;

// Entries below this magnitude are dropped from sparse reports.
inline constexpr double sparse_cutoff = 1e-12;

// Step factor for the finite-difference Hessian cross-check. Scaled by
// max(1, |pole|_inf); eps^(1/4) is the accuracy optimum for second-order
// central differences in double precision.
inline constexpr double hessian_fd_step = 1.2e-4;

}  // namespace liegeo::tol
