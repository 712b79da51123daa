#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbdo/matrix.hpp"
#include "sbdo/multipoly.hpp"
#include "sbdo/scalar.hpp"

namespace sbdo {

// Coordinate frames for the spin factor J_n = R + R^{n-1}.
//
// Original: coordinates (u0, u1, ..., u_{n-1}) in the basis (1,0), (0,e_i);
// the standard inner product ((s,x),(t,y)) = 2(st + x.y) has Gram 2*Id.
//
// FBasis: coordinates (y1, y2, w3, ..., wn) in the basis c1, c2, (0,e_{j-1}).
// The orthonormal frame of the rank-2 theory rescales the last n-2 vectors by
// 1/sqrt(2); that factor is irrational, so elements are stored against the
// unscaled basis (Gram diag(1,1,2,...,2)) while polynomial symbols over this
// frame use the orthonormal y-variables. The two conventions differ by
// y_j = sqrt(2) * w_j for j >= 3, and fsym_to_scaled/fsym_from_scaled move
// polynomials between them (possible exactly iff every monomial has even
// total degree in the y' block).
enum class SpinFrame { Original, FBasis };

class AlgebraDescriptor {
public:
    enum class Kind { Spin, Symm, Product };

    // Zero-dimensional placeholder; assign a real descriptor before use.
    AlgebraDescriptor() = default;

    static AlgebraDescriptor spin(std::size_t n, SpinFrame frame = SpinFrame::Original);
    static AlgebraDescriptor symm(std::size_t r);
    static AlgebraDescriptor product(std::vector<AlgebraDescriptor> factors);

    Kind kind() const { return kind_; }
    std::size_t spin_n() const { return n_; }
    std::size_t symm_r() const { return r_; }
    SpinFrame frame() const { return frame_; }
    const std::vector<AlgebraDescriptor>& factors() const { return factors_; }

    std::size_t dim() const;
    std::size_t rank() const;
    RatMatrix gram() const;

    AlgebraDescriptor with_frame(SpinFrame f) const;
    // Structural equality ignoring the spin frame tag.
    bool same_algebra(const AlgebraDescriptor& o) const;

    std::string to_json() const;
    static AlgebraDescriptor from_json(const std::string& s);

    friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b);
    friend bool operator!=(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
        return !(a == b);
    }

private:
    Kind kind_ = Kind::Spin;
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    SpinFrame frame_ = SpinFrame::Original;
    std::vector<AlgebraDescriptor> factors_;
};

struct JordanElement {
    AlgebraDescriptor algebra;
    std::vector<Scalar> coords;

    JordanElement() = default;
    JordanElement(AlgebraDescriptor alg, std::vector<Scalar> c);

    bool is_real() const;
    friend bool operator==(const JordanElement& a, const JordanElement& b) {
        return a.algebra == b.algebra && a.coords == b.coords;
    }
    friend bool operator!=(const JordanElement& a, const JordanElement& b) { return !(a == b); }
};

JordanElement unit_element(const AlgebraDescriptor& alg);
JordanElement zero_element(const AlgebraDescriptor& alg);
JordanElement basis_element(const AlgebraDescriptor& alg, std::size_t idx);

JordanElement elem_add(const JordanElement& a, const JordanElement& b);
JordanElement elem_sub(const JordanElement& a, const JordanElement& b);
JordanElement elem_scale(const JordanElement& a, const Scalar& s);

// Frame conversion for spin algebras (identity for everything else).
JordanElement to_frame(const JordanElement& x, SpinFrame frame);

// Jordan product; the two elements must live in the same algebra (frames may
// differ, the result follows x's frame).
JordanElement jmul(const JordanElement& x, const JordanElement& y);

// Multiplication operator L(x) as a matrix in x's coordinate frame.
RatMatrix lmat(const JordanElement& x);

// Quadratic representation P(x) = 2 L(x)^2 - L(x^2), in x's frame.
RatMatrix pmap(const JordanElement& x);

Scalar jtrace(const JordanElement& x);
Scalar jdet(const JordanElement& x);

struct DetInv {
    Scalar det;
    std::optional<JordanElement> inverse;
};
DetInv jdet_inv(const JordanElement& x);

// Gram pairing of the algebra's standard inner product.
Scalar inner(const JordanElement& x, const JordanElement& y);

struct PeirceSplit {
    JordanElement idempotent;
    RatMatrix proj1, proj_half, proj0;
    std::vector<std::vector<Scalar>> basis1, basis_half, basis0;
};

// Projector decomposition for an idempotent c, via Lagrange polynomials in
// L(c) at the eigenvalues {1, 1/2, 0}.
PeirceSplit peirce_split(const JordanElement& c);

std::size_t idempotent_rank(const JordanElement& c);

struct CSOI {
    AlgebraDescriptor algebra;
    std::vector<JordanElement> idempotents;
    std::vector<std::size_t> ranks;
    std::size_t size() const { return idempotents.size(); }
};

CSOI validate_csoi(const std::vector<JordanElement>& cands);

enum class ConeLocation { Interior, Boundary, Outside };
const char* cone_location_name(ConeLocation c);

// Exact classification of x against the symmetric cone.
ConeLocation cone_test(const JordanElement& x);
// Classification against Omega(c) inside J(c): Outside when x is not in the
// span of the subalgebra; otherwise the componentwise test coincides with the
// cone test of the ambient algebra restricted to J(c).
ConeLocation cone_test(const JordanElement& x, const CSOI& csoi);

// Coordinates of x in the span of the CSOI idempotents, if x lies there.
std::optional<std::vector<Scalar>> subalgebra_coords(const JordanElement& x, const CSOI& csoi);

// Polynomial frame changes for spin symbols. "Scaled" coordinates are the
// rational FBasis element coordinates (y1, y2, w3..wn); "display" f-symbols
// use the orthonormal y-variables of the rank-2 formulas.
MultiPoly fsym_to_scaled(const MultiPoly& q_display, std::size_t n);
MultiPoly fsym_from_scaled(const MultiPoly& q_scaled, std::size_t n);

// Change-of-frame matrices for spin element coordinates.
RatMatrix spin_orig_to_f(std::size_t n);
RatMatrix spin_f_to_orig(std::size_t n);

// Evaluates a display-convention f-symbol at an FBasis element (exact; throws
// SqrtParity when the symbol has odd y'-degree terms).
Scalar eval_fsymbol(const MultiPoly& q_display, const JordanElement& x_f);

}  // namespace sbdo
