#include <doctest.h>

#include "sbdo/matrix.hpp"
#include "sbdo/rng.hpp"

using sbdo::RatMatrix;
using sbdo::Rng;
using sbdo::Scalar;

namespace {

RatMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.rational(4, 3);
    return m;
}

}  // namespace

TEST_CASE("nullspace examples") {
    RatMatrix m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(2);
    m.at(1, 1) = Scalar(2);
    auto ns = mat_nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Scalar>{Scalar(1), Scalar(-1)});

    CHECK(mat_nullspace(RatMatrix::identity(3)).empty());
    CHECK(mat_nullspace(RatMatrix(2, 2)).size() == 2);
}

TEST_CASE("nullspace properties") {
    Rng rng(17);
    for (int k = 0; k < 30; ++k) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.int_in(1, 5));
        RatMatrix m = random_matrix(r, c, rng);
        auto ns = mat_nullspace(m);
        CHECK(ns.size() + mat_rank(m) == c);
        for (const auto& v : ns) {
            auto mv = m.mul_vec(v);
            for (const auto& x : mv) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("determinant and inverse") {
    Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        RatMatrix m = random_matrix(4, 4, rng);
        Scalar d = mat_det(m);
        auto inv = mat_inverse(m);
        if (d.is_zero()) {
            CHECK(!inv);
        } else {
            REQUIRE(inv);
            CHECK(m * *inv == RatMatrix::identity(4));
            // det multiplicativity against a second matrix
            RatMatrix n = random_matrix(4, 4, rng);
            CHECK(mat_det(m * n) == d * mat_det(n));
        }
    }
}

TEST_CASE("positive definiteness") {
    RatMatrix id = RatMatrix::identity(3);
    CHECK(sbdo::is_positive_definite(id));
    CHECK(sbdo::is_positive_semidefinite(id));

    RatMatrix psd = RatMatrix::diagonal({Scalar(2), Scalar(0), Scalar(1)});
    CHECK(!sbdo::is_positive_definite(psd));
    CHECK(sbdo::is_positive_semidefinite(psd));

    RatMatrix neg = RatMatrix::diagonal({Scalar(2), Scalar(-1), Scalar(1)});
    CHECK(!sbdo::is_positive_definite(neg));
    CHECK(!sbdo::is_positive_semidefinite(neg));

    // A^T A + I is positive definite.
    Rng rng(5);
    RatMatrix a = random_matrix(3, 3, rng);
    RatMatrix m = a.transpose() * a + RatMatrix::identity(3);
    CHECK(sbdo::is_positive_definite(m));
    auto minors = sbdo::leading_principal_minors(m);
    CHECK(minors.size() == 3);
    CHECK(minors[2] == mat_det(m));
}

TEST_CASE("row reducer matches batch nullspace") {
    Rng rng(29);
    for (int k = 0; k < 20; ++k) {
        std::size_t rows = static_cast<std::size_t>(rng.int_in(1, 8));
        std::size_t cols = static_cast<std::size_t>(rng.int_in(1, 4));
        RatMatrix m = random_matrix(rows, cols, rng);
        sbdo::RowReducer red(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<Scalar> row(cols);
            for (std::size_t j = 0; j < cols; ++j) row[j] = m.at(i, j);
            red.add_row(std::move(row));
        }
        CHECK(red.rank() == mat_rank(m));
        CHECK(red.nullspace() == mat_nullspace(m));
    }
}
