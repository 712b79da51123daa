#pragma once

#include <optional>
#include <vector>

#include "sbdo/scalar.hpp"

namespace sbdo {

// Dense rectangular matrix over Gaussian rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(const std::vector<Scalar>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_real() const;
    bool is_zero() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    RatMatrix scaled(const Scalar& s) const;
    std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

Scalar mat_det(const RatMatrix& m);
std::optional<RatMatrix> mat_inverse(const RatMatrix& m);
std::size_t mat_rank(const RatMatrix& m);

// Exact basis of the right nullspace, each vector normalized so its first
// nonzero coordinate is 1. Empty result iff M is injective.
std::vector<std::vector<Scalar>> mat_nullspace(const RatMatrix& m);

// det of the k-th leading principal submatrix, k = 1..n (real symmetric input).
std::vector<Scalar> leading_principal_minors(const RatMatrix& m);
bool is_positive_definite(const RatMatrix& m);
bool is_positive_semidefinite(const RatMatrix& m);

// Incremental row reduction for linear systems with few unknowns: feed rows,
// read off rank and nullspace of the accumulated matrix.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}
    void add_row(std::vector<Scalar> row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::vector<Scalar>> nullspace() const;

private:
    std::size_t cols_;
    std::vector<std::vector<Scalar>> rows_;   // reduced echelon rows
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace sbdo
