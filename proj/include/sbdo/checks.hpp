#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbdo/diffop.hpp"
#include "sbdo/gaussian.hpp"
#include "sbdo/jordan.hpp"
#include "sbdo/jrep.hpp"
#include "sbdo/pluriharm.hpp"
#include "sbdo/rng.hpp"

namespace sbdo {

struct CheckResult {
    std::string id;
    bool pass = true;
    std::string witness;             // first failure, with its data
    std::vector<std::string> notes;  // informational findings

    CheckResult() = default;
    explicit CheckResult(std::string check_id) : id(std::move(check_id)) {}

    void fail(const std::string& w) {
        if (pass) {
            pass = false;
            witness = w;
        }
    }
};

// Random sample helpers (exact rational coordinates).
JordanElement random_element(const AlgebraDescriptor& alg, Rng& rng);
JordanElement random_interior(const AlgebraDescriptor& alg, Rng& rng);
JordanElement random_interior_subcone(const CSOI& csoi, Rng& rng);

// Structural property suites.
CheckResult check_algebra_axioms(const AlgebraDescriptor& alg, std::size_t samples, Rng& rng);
CheckResult check_representation_properties(const Representation& rep, const CSOI& csoi,
                                            std::size_t samples, Rng& rng);
CheckResult check_regularity(const Representation& rep);

// Both sides of the Fourier-Gaussian identity at z = ix, computed
// independently (moment engine vs symbolic right side). q empty means p = 1.
CheckResult check_hecke(const Representation& rep, const CSOI& csoi,
                        const std::optional<MultiPoly>& q, const JordanElement& x);

// Identity comparison with a precomposed integrand p = q o Q (the
// pluri-harmonicity precondition is the caller's responsibility here).
CheckResult check_hecke_identity(const Representation& rep, const MultiPoly& p_pol,
                                 const JordanElement& x);

// Intertwining on the structure generators P(a1 c1 + a2 c2), on translations
// t_u with u in J(c), and on M(c) rotations, all on the f_v test family.
CheckResult check_structure_equivariance(const DiffOperator& d, const CSOI& csoi, std::size_t m,
                                         std::size_t p1, std::size_t p2, std::size_t samples,
                                         Rng& rng);
CheckResult check_translation_equivariance(const DiffOperator& d, const CSOI& csoi,
                                           std::size_t samples, Rng& rng);
CheckResult check_rotation_equivariance(const DiffOperator& d, const CSOI& csoi,
                                        std::size_t samples, Rng& rng);

// Intertwining on the inversion generator, on the F_xi test family with xi
// symbolic: the left side goes through the blockwise Gaussian moment engine,
// the right side through the tensor action, both evaluated at z = ix.
// `precomposed` may carry q o Q to avoid recomputing it (only consulted when
// q is homogeneous).
CheckResult check_inversion(const Representation& rep, const CSOI& csoi, const ModuleSplit& split,
                            const MultiPoly& q, std::size_t m, std::size_t p, std::size_t samples,
                            Rng& rng, const MultiPoly* precomposed = nullptr);

// Canonical rank-2 spin CSOI c1 = (1/2)(1, e1), c2 = (1/2)(1, -e1).
CSOI canonical_spin_csoi(std::size_t n);

// Exact square root of a positive rational (errors when not a perfect square).
Scalar rational_sqrt(const Scalar& s);

}  // namespace sbdo
