#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sbdo/scalar.hpp"

namespace sbdo {

class RatMatrix;

// Multivariate polynomial over Gaussian rationals. Terms map a dense
// exponent vector (length nvars) to a nonzero coefficient; the std::map key
// order makes iteration deterministic.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Scalar>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Scalar& c);
    static MultiPoly variable(std::size_t nvars, std::size_t idx);
    static MultiPoly monomial(std::size_t nvars, Exponents e, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Exponents& e) const;
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;

    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const Scalar& s) const;
    MultiPoly pow(std::uint32_t e) const;

    // Iterated exact partial derivative d^order/d(var)^order.
    MultiPoly partial(std::size_t var, std::uint32_t order = 1) const;

    // General substitution x_i -> images[i]; all images share one ring.
    MultiPoly subst(const std::vector<MultiPoly>& images) const;
    // y -> p(M*y) for square M of size nvars.
    MultiPoly subst_linear(const RatMatrix& m) const;
    // y -> p(M*y + t); M may be rectangular (nvars rows, new-ring columns).
    MultiPoly subst_affine(const RatMatrix& m, const std::vector<Scalar>& t) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    // Pads the ring with `extra` fresh variables appended after the current ones.
    MultiPoly lift(std::size_t extra) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// Free-function forms of the polynomial operations.
MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_scale(const MultiPoly& a, const Scalar& s);
MultiPoly poly_partial(const MultiPoly& p, std::size_t var, std::uint32_t order);
MultiPoly poly_subst_linear(const MultiPoly& p, const RatMatrix& m);

}  // namespace sbdo
