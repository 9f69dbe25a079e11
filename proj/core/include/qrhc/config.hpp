#pragma once

#include <cstddef>

namespace qrhc {

// Largest matrix dimension the library will allocate.  Tensor products and
// superoperator constructions check against this before allocating.
// The CLI seeds it from the QRHC_MAX_DIM environment variable.
std::size_t max_dim();
void set_max_dim(std::size_t d);

// Relative threshold for positivity classification: eigenvalues in
// (-eps_pd*scale, eps_pd*scale] count as zero, with scale = max_i |lambda_i|.
inline constexpr double eps_pd = 1e-10;

// Eigenvalue-1 / peripheral-spectrum tolerance for primitivity checks.
inline constexpr double eps_primitive = 1e-8;

// Default relative verification tolerance: tol = tol_rel * max(1,|lhs|,|rhs|).
inline constexpr double default_tol_rel = 1e-9;

}  // namespace qrhc
