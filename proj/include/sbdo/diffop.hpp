#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbdo/jordan.hpp"
#include "sbdo/matrix.hpp"
#include "sbdo/multipoly.hpp"
#include "sbdo/pluriharm.hpp"

namespace sbdo {

// Coordinate frame of an operator or test function.
//  Generic  - caller-supplied rational coordinates and Gram matrix.
//  Original - spin original coordinates, Gram 2*Id.
//  FBasis   - spin f-basis; symbols are displayed in the orthonormal
//             y-variables (Gram Id) and handled internally in the rational
//             scaled coordinates (Gram diag(1,1,2,...,2)).
//  Blocks   - coordinates along the CSOI idempotents on the subdomain,
//             Gram Id.
enum class FrameTag { Generic, Original, FBasis, Blocks };

const char* frame_tag_name(FrameTag f);
FrameTag frame_tag_from_name(const std::string& s);

struct OperatorParams {
    std::optional<std::size_t> n, m, p;
    std::string coeff_provenance;
};

// Constant-coefficient holomorphic differential operator determined by its
// algebraic symbol: D_q e^{(z,v)} = q(v) e^{(z,v)} for the pairing
// (z,v) = z^T G v.
class DiffOperator {
public:
    DiffOperator() = default;
    DiffOperator(FrameTag frame, MultiPoly symbol, RatMatrix gram, OperatorParams params = {});

    FrameTag frame() const { return frame_; }
    const MultiPoly& symbol() const { return symbol_; }      // display convention
    const RatMatrix& gram() const { return gram_; }          // display convention
    const OperatorParams& params() const { return params_; }

    // Internal (rational-coordinate) forms; identical to display except for
    // the FBasis scaling.
    MultiPoly internal_symbol() const;
    RatMatrix internal_gram() const;

    // q(v) for v in internal coordinates.
    Scalar eigenvalue(const std::vector<Scalar>& v) const;

    // The operator as a polynomial in the partial derivatives d/dz_i of the
    // internal coordinates.
    MultiPoly derivative_polynomial() const;

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.frame_ == b.frame_ && a.symbol_ == b.symbol_ && a.gram_ == b.gram_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

private:
    FrameTag frame_ = FrameTag::Generic;
    MultiPoly symbol_;
    RatMatrix gram_;
    OperatorParams params_;
};

DiffOperator symbol_to_operator(const MultiPoly& q, const RatMatrix& gram, FrameTag frame,
                                OperatorParams params = {});

// prefactor(z) * e^{(z,v) + offset} in a frame's internal coordinates.
struct ExpFunction {
    FrameTag frame = FrameTag::Generic;
    MultiPoly prefactor;
    std::vector<Scalar> direction;
    Scalar exp_offset = Scalar(0);

    static ExpFunction pure(FrameTag frame, std::size_t nvars, std::vector<Scalar> v);

    ExpFunction scaled(const Scalar& s) const;
    friend bool operator==(const ExpFunction& a, const ExpFunction& b) {
        return a.frame == b.frame && a.prefactor == b.prefactor &&
               a.direction == b.direction && a.exp_offset == b.exp_offset;
    }
    friend bool operator!=(const ExpFunction& a, const ExpFunction& b) { return !(a == b); }
};

// Exact Leibniz application; the result stays in the prefactor x exponential
// class. Frames must match.
ExpFunction apply_operator(const DiffOperator& d, const ExpFunction& f);

// f(z - u); u in internal coordinates of f's frame (uses the frame Gram for
// the exponent shift).
ExpFunction translate(const ExpFunction& f, const std::vector<Scalar>& u, const RatMatrix& gram);

// Restriction of a spin-frame function to the subdomain coordinates along
// the CSOI idempotents.
ExpFunction restrict_to_blocks(const ExpFunction& f, const CSOI& csoi);

// The explicit rank-2 operator built from a coefficient vector over the
// c-homogeneous monomial basis, in the f-basis frame.
DiffOperator rank2_operator(std::size_t n, std::size_t m, std::size_t p,
                            const CoeffVector& coeffs);

// Re-expresses a spin operator in the other coordinate frame (the symbol is
// transported exactly; eigenvalues are unchanged).
DiffOperator operator_to_frame(const DiffOperator& d, FrameTag target);

enum class EmitFormat { Json, Text };
std::string emit_operator(const DiffOperator& d, EmitFormat format);
DiffOperator parse_operator(const std::string& json_text);

}  // namespace sbdo
