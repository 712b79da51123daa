#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbdo/jordan.hpp"
#include "sbdo/jrep.hpp"
#include "sbdo/multipoly.hpp"
#include "sbdo/rng.hpp"

namespace sbdo {

// Basis of the c-homogeneous symbols of multidegree (p1, p2) on the rank-2
// spin factor: monomials y1^{p1-j} y2^{p2-j} |y'|^{2j}, j = 0..min(p1,p2),
// in the display f-basis variables.
struct SymbolSpace {
    AlgebraDescriptor algebra;  // spin, FBasis frame
    std::size_t p1 = 0, p2 = 0;
    std::vector<MultiPoly> basis;
};

SymbolSpace rank2_symbol_basis(std::size_t n, std::size_t p1, std::size_t p2);

enum class DeltaOp { Delta1, Delta2 };

// The rank-2 operator delta_1 = 2 N1 d1 + 4 y1 d1^2 + 4 sum_j y_j d1 d_j
// + 2 y2 sum_j d_j^2 (delta_2 with the roles of y1, y2 swapped), realized by
// exact partial differentiation of the symbol.
MultiPoly delta_apply(DeltaOp which, std::size_t n, std::size_t n1, const MultiPoly& q);

enum class CoeffRule { Paper, Derived };
enum class CoeffProvenance { ClosedForm, Recurrence, Nullspace };

struct CoeffVector {
    std::vector<Scalar> a;  // a[0] = 1 after normalization
    CoeffRule rule = CoeffRule::Derived;
    CoeffProvenance provenance = CoeffProvenance::Recurrence;
    std::size_t n = 0, m = 0, p = 0;

    std::string to_json() const;
};

// Coefficients of the printed recurrence
//   (j+1)(j+(n-1)/2) a_{j+1} + (p-j)(j+m+p-1) a_j = 0,  a_0 = 1,
// cross-checked against the printed closed form (the two always agree).
CoeffVector paper_coeffs(std::size_t n, std::size_t m, std::size_t p);

// Coefficients of the first-principles recurrence obtained by direct
// differentiation, 2(j+1)(j+(n-2)/2) a_{j+1} + (p-j)(j+m+p-1) a_j = 0,
// also cross-checked against its closed form.
CoeffVector derived_coeffs(std::size_t n, std::size_t m, std::size_t p);

// Assemble sum_j a_j y1^{p1-j} y2^{p2-j} |y'|^{2j} from a coefficient vector.
MultiPoly symbol_from_coeffs(const SymbolSpace& space, const std::vector<Scalar>& a);

// Composition p = q o Q as an exact polynomial in the module coordinates.
// q is a display f-symbol for spin algebras (scaled internally) or an
// original-coordinate symbol otherwise.
MultiPoly compose_q_Q(const Representation& rep, const MultiPoly& q);

// Compositions basis_j o Q for a whole rank-2 symbol space, sharing the
// power caches of |xi_1|^2, |xi_2|^2 and |y'|^2 o Q across the basis.
std::vector<MultiPoly> compose_space_q_Q(const Representation& rep, const SymbolSpace& space);

// Block Laplacian sum of d^2/d xi_k^2 over the given coordinate set.
MultiPoly block_laplacian(const MultiPoly& p, const std::vector<std::size_t>& block);

// True iff q o Q is c-pluri-harmonic: every block Laplacian of the
// composition vanishes identically.
bool is_c_pluriharmonic(const Representation& rep, const ModuleSplit& split, const MultiPoly& q);

// Ground-truth solver: treats the J(c) coordinates as symbolic variables,
// forms Delta_E((q o Q) o Phi(x)) with unknown coefficients over the basis
// monomials, and returns an exact nullspace basis (a0-normalized when the
// leading coefficient is nonzero).
std::vector<CoeffVector> pluriharmonic_solve(const Representation& rep, const CSOI& csoi,
                                             const SymbolSpace& space,
                                             const std::vector<MultiPoly>* composed = nullptr);

// Exact check of the covariance law q(l y) = chi1^{p1} chi2^{p2} q(y) for the
// generating family l = P(a1 c1 + a2 c2) with symbolic a_j, plus invariance
// under sampled rational special-orthogonal rotations of the y' block.
bool chom_check(const MultiPoly& q, const CSOI& csoi, std::size_t p1, std::size_t p2,
                Rng& rng, std::size_t rotation_samples = 4);

// Rational special-orthogonal matrices on d coordinates (Pythagorean-triple
// Givens rotations composed deterministically from the sampler).
RatMatrix rational_rotation(std::size_t d, Rng& rng);

}  // namespace sbdo
