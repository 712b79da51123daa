#include <doctest.h>

#include "sbdo/gaussian.hpp"
#include "sbdo/rng.hpp"

using namespace sbdo;

TEST_CASE("pure gaussian and low moments") {
    RatMatrix a1 = RatMatrix::identity(1);
    // p = 1 -> polynomial part 1.
    CHECK(gaussian_fourier(a1, MultiPoly::constant(1, Scalar(1))).value ==
          MultiPoly::constant(1, Scalar(1)));
    // p = xi -> i eta.
    CHECK(gaussian_fourier(a1, MultiPoly::variable(1, 0)).value ==
          MultiPoly::variable(1, 0).scaled(Scalar::i()));
    // p = xi^2 -> 1 - eta^2.
    MultiPoly xi2 = MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0);
    CHECK(gaussian_fourier(a1, xi2).value ==
          MultiPoly::constant(1, Scalar(1)) - xi2);

    CHECK_THROWS_AS(gaussian_fourier(RatMatrix::diagonal({Scalar(-1)}),
                                     MultiPoly::constant(1, Scalar(1))),
                    Error);
}

TEST_CASE("odd moments vanish against even test directions") {
    // For diagonal A, the transform of xi^3 in one variable:
    // (-i d)^3 e^{-eta^2/(2a)} / gaussian = i (3 eta / a^2 - eta^3 / a^3).
    RatMatrix a = RatMatrix::diagonal({Scalar(2)});
    MultiPoly xi = MultiPoly::variable(1, 0);
    MultiPoly got = gaussian_fourier(a, xi * xi * xi).value;
    MultiPoly expect = xi.scaled(Scalar::i() * Scalar::ratio(3, 4)) -
                       (xi * xi * xi).scaled(Scalar::i() * Scalar::ratio(1, 8));
    CHECK(got == expect);
}

TEST_CASE("hermite-type recursion consistency in two variables") {
    // Moments against a non-diagonal SPD form, cross-checked by integration
    // by parts: E[xi_i m(xi)] corresponds to the operator identity
    // value(xi_i * p) = -i d/d eta_i value(p) + i (A^{-1} eta)_i value(p)
    // ... verified here by comparing two assembly orders.
    Rng rng(51);
    RatMatrix base(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) base.at(i, j) = rng.rational(2, 2);
    RatMatrix a = base.transpose() * base + RatMatrix::identity(2);
    auto ainv = mat_inverse(a);

    MultiPoly p = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1) +
                  MultiPoly::constant(2, Scalar(3));
    MultiPoly v = gaussian_fourier(a, p).value;
    MultiPoly with_factor = gaussian_fourier(a, MultiPoly::variable(2, 0) * p).value;

    MultiPoly lin(2);
    for (std::size_t j = 0; j < 2; ++j)
        lin += MultiPoly::variable(2, j).scaled(ainv->at(0, j));
    MultiPoly expect = (v.partial(0) - v * lin).scaled(-Scalar::i());
    CHECK(with_factor == expect);
}

TEST_CASE("blockwise equals full for block-diagonal forms") {
    Rng rng(53);
    RatMatrix a = RatMatrix::diagonal({Scalar(2), Scalar(2), Scalar::ratio(1, 3),
                                       Scalar::ratio(1, 3)});
    MultiPoly p(4);
    for (int t = 0; t < 5; ++t) {
        MultiPoly::Exponents e(4);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.int_in(0, 2));
        p.add_term(e, rng.rational(3, 2, false));
    }
    MultiPoly full = gaussian_fourier(a, p).value;
    MultiPoly step = partial_gaussian_moment(p, a, {0, 1});
    step = partial_gaussian_moment(step, a, {2, 3});
    CHECK(step == full);
    // Order of blocks does not matter.
    MultiPoly step2 = partial_gaussian_moment(p, a, {2, 3});
    step2 = partial_gaussian_moment(step2, a, {0, 1});
    CHECK(step2 == full);
}

TEST_CASE("classical hermite values via diagonal scaling") {
    // One variable, A = (a): moment of xi^4 is 3/a^2 - 6 eta^2 / a^3 + eta^4 / a^4.
    Scalar av = Scalar::ratio(3, 2);
    RatMatrix a = RatMatrix::diagonal({av});
    MultiPoly xi = MultiPoly::variable(1, 0);
    MultiPoly got = gaussian_fourier(a, xi.pow(4)).value;
    MultiPoly expect = MultiPoly::constant(1, Scalar(3) / (av * av)) -
                       (xi * xi).scaled(Scalar(6) / (av * av * av)) +
                       xi.pow(4).scaled(Scalar(1) / (av * av * av * av));
    CHECK(got == expect);
}
