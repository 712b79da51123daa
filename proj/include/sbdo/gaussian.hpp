#pragma once

#include <vector>

#include "sbdo/matrix.hpp"
#include "sbdo/multipoly.hpp"

namespace sbdo {

// Result of the exact Fourier-Gaussian transform
//   integral over E of e^{i<xi,eta>} e^{-1/2 xi^T A xi} p(xi) d(xi)
//     = (2 pi)^{N/2} det(A)^{-1/2} * value(eta) * e^{-1/2 eta^T A^{-1} eta};
// `value` is the polynomial part with the common prefactor divided out.
struct GaussianIntegral {
    RatMatrix a;
    RatMatrix a_inv;
    MultiPoly value;
};

GaussianIntegral gaussian_fourier(const RatMatrix& a, const MultiPoly& p);

// Blockwise form: integrates only the listed variables against the Gaussian
// of the sub-matrix A restricted to them; the remaining variables ride along
// as coefficients. Repeated over the blocks of a split this realizes the
// Fubini evaluation of the full integral.
MultiPoly partial_gaussian_moment(const MultiPoly& p, const RatMatrix& a,
                                  const std::vector<std::size_t>& block);

}  // namespace sbdo
