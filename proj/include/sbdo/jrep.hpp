#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbdo/jordan.hpp"
#include "sbdo/matrix.hpp"
#include "sbdo/multipoly.hpp"

namespace sbdo {

// A representation Phi of a Euclidean Jordan algebra on E = R^N, stored as
// one symmetric matrix per original-frame basis element. The unit axiom, the
// symmetry axiom and the Jordan-morphism law on all basis pairs are checked
// at build time.
struct Representation {
    AlgebraDescriptor algebra;  // original frame
    std::size_t dimE = 0;
    std::vector<RatMatrix> phi_basis;
    std::size_t q = 0;  // rank multiplier, N = r*q
    std::string recipe;

    std::string to_json() const;
};

struct RepSpec {
    enum class Kind { Clifford, SymmModule };
    Kind kind = Kind::Clifford;
    std::size_t n = 0;       // clifford: spin dimension
    std::size_t copies = 1;  // clifford: number of module copies
    std::size_t r = 0;       // symm_module
    std::size_t q = 0;       // symm_module

    static RepSpec clifford(std::size_t n, std::size_t copies) {
        return {Kind::Clifford, n, copies, 0, 0};
    }
    static RepSpec symm_module(std::size_t r, std::size_t q) {
        return {Kind::SymmModule, 0, 1, r, q};
    }
};

Representation build_rep(const RepSpec& spec);

// The deterministic gamma-matrix recipe: count real symmetric anticommuting
// involutions with entries in {0, +-1}, built by tensor doubling from the
// Pauli pattern (sigma_z), (sigma_z, sigma_x), (sigma_z x I, sigma_x x I,
// sigma_y x sigma_y), ...
std::vector<RatMatrix> clifford_generators(std::size_t count);

RatMatrix phi_of(const Representation& rep, const JordanElement& x);

// Quadratic map Q (eta absent) / polar form H(xi, eta): the unique Jordan
// element with (result, b_i) = <Phi(b_i) xi, eta> for every basis element.
JordanElement qmap(const Representation& rep, const std::vector<Scalar>& xi,
                   const std::vector<Scalar>* eta = nullptr);

// Coordinates of Q(xi) as polynomials in symbolic xi, in the requested
// frame's rational coordinates (FBasis: scaled w-coordinates).
std::vector<MultiPoly> qmap_polys(const Representation& rep, SpinFrame frame);

struct ModuleSplit {
    CSOI csoi;
    std::vector<RatMatrix> projectors;  // Phi(c_j)
    std::vector<std::size_t> dims;      // N_j = r_j * q
    // Coordinate index sets when every projector is a 0/1 diagonal; the
    // blockwise engines require this alignment.
    std::vector<std::vector<std::size_t>> blocks;
    bool aligned = false;
};

ModuleSplit split_module(const Representation& rep, const CSOI& csoi);

struct RegularityResult {
    std::optional<std::vector<Scalar>> witness;  // xi with Q(xi) = e
    std::string reason;                          // set when not regular
    bool regular() const { return witness.has_value(); }
};

// Solves Q(xi) = e exactly: sparse basis-pair candidates first, then a
// blockwise solve over E1 + E2; NotRegular only with an exact rank argument.
RegularityResult regularity_witness(const Representation& rep);

}  // namespace sbdo
