#include <doctest.h>

#include "sbdo/checks.hpp"
#include "sbdo/jrep.hpp"
#include "sbdo/rng.hpp"

using namespace sbdo;

TEST_CASE("clifford generator recipe") {
    // n-1 = 3 generators of size 4: sigma_z x I, sigma_x x I, sigma_y x sigma_y.
    auto gens = clifford_generators(3);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].rows() == 4);
    for (const auto& g : gens) {
        CHECK(g.is_symmetric());
        CHECK(g * g == RatMatrix::identity(4));
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK((gens[i] * gens[j] + gens[j] * gens[i]).is_zero());
    // sigma_y x sigma_y explicitly.
    RatMatrix yy(4, 4);
    yy.at(0, 3) = Scalar(-1);
    yy.at(1, 2) = Scalar(1);
    yy.at(2, 1) = Scalar(1);
    yy.at(3, 0) = Scalar(-1);
    CHECK(gens[2] == yy);

    // Larger counts stay symmetric anticommuting involutions with 0/±1 entries.
    for (std::size_t count : {4u, 5u, 6u}) {
        auto gs = clifford_generators(count);
        REQUIRE(gs.size() == count);
        const std::size_t d = gs[0].rows();
        for (const auto& g : gs) {
            CHECK(g.is_symmetric());
            CHECK(g * g == RatMatrix::identity(d));
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    const Scalar& v = g.at(a, b);
                    CHECK((v == Scalar(0) || v == Scalar(1) || v == Scalar(-1)));
                }
        }
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j)
                CHECK((gs[i] * gs[j] + gs[j] * gs[i]).is_zero());
    }
}

TEST_CASE("build_rep dimensions") {
    Representation r41 = build_rep(RepSpec::clifford(4, 1));
    CHECK(r41.dimE == 4);
    CHECK(r41.q == 2);

    Representation r42 = build_rep(RepSpec::clifford(4, 2));
    CHECK(r42.dimE == 8);
    CHECK(r42.q == 4);

    Representation s23 = build_rep(RepSpec::symm_module(2, 3));
    CHECK(s23.dimE == 6);
    CHECK(phi_of(s23, unit_element(s23.algebra)) == RatMatrix::identity(6));

    CHECK_THROWS_AS(build_rep(RepSpec::clifford(3, 1)), Error);
}

TEST_CASE("phi_of examples") {
    Representation rep = build_rep(RepSpec::clifford(4, 1));
    AlgebraDescriptor alg = rep.algebra;
    CHECK(phi_of(rep, unit_element(alg)) == RatMatrix::identity(4));

    // Phi((0,v))^2 = |v|^2 Id for random rational v.
    Rng rng(4);
    for (int k = 0; k < 50; ++k) {
        std::vector<Scalar> c(4, Scalar(0));
        Scalar norm(0);
        for (std::size_t i = 1; i < 4; ++i) {
            c[i] = rng.rational();
            norm += c[i] * c[i];
        }
        RatMatrix f = phi_of(rep, JordanElement(alg, c));
        CHECK(f * f == RatMatrix::identity(4).scaled(norm));
    }

    // Phi(c1) is a projector of rank N/2.
    JordanElement c1(alg, {Scalar::ratio(1, 2), Scalar::ratio(1, 2), Scalar(0), Scalar(0)});
    RatMatrix p = phi_of(rep, c1);
    CHECK(p * p == p);
    CHECK(mat_rank(p) == 2);
}

TEST_CASE("qmap examples") {
    Representation rep = build_rep(RepSpec::clifford(4, 1));
    std::vector<Scalar> eps1(4, Scalar(0));
    eps1[0] = Scalar(1);
    JordanElement q = qmap(rep, eps1);
    JordanElement c1(rep.algebra,
                     {Scalar::ratio(1, 2), Scalar::ratio(1, 2), Scalar(0), Scalar(0)});
    CHECK(q == c1);

    CHECK(qmap(rep, std::vector<Scalar>(4, Scalar(0))) == zero_element(rep.algebra));

    Representation s22 = build_rep(RepSpec::symm_module(2, 2));
    // xi = flatten(I_2) column-major: (1,0,0,1).
    std::vector<Scalar> id_flat{Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    CHECK(qmap(s22, id_flat) == unit_element(s22.algebra));
}

TEST_CASE("representation identities on random samples") {
    Rng rng(11);
    for (const auto& spec : {RepSpec::clifford(4, 1), RepSpec::clifford(4, 2),
                             RepSpec::symm_module(2, 2), RepSpec::symm_module(3, 2)}) {
        Representation rep = build_rep(spec);
        const AlgebraDescriptor& alg = rep.algebra;
        for (int k = 0; k < 100; ++k) {
            JordanElement x(alg, rng.rational_vector(alg.dim(), 3, 2));
            JordanElement y(alg, rng.rational_vector(alg.dim(), 3, 2));
            std::vector<Scalar> xi = rng.rational_vector(rep.dimE, 3, 2);
            RatMatrix fx = phi_of(rep, x);
            // Phi(P(x)y) = Phi(x) Phi(y) Phi(x)
            JordanElement pxy(alg, pmap(x).mul_vec(y.coords));
            CHECK(phi_of(rep, pxy) == fx * phi_of(rep, y) * fx);
            // Q(Phi(x) xi) = P(x) Q(xi)
            CHECK(qmap(rep, fx.mul_vec(xi)) ==
                  JordanElement(alg, pmap(x).mul_vec(qmap(rep, xi).coords)));
            // Phi(x)^{-1} = Phi(x^{-1})
            DetInv di = jdet_inv(x);
            if (di.inverse)
                CHECK(fx * phi_of(rep, *di.inverse) == RatMatrix::identity(rep.dimE));
        }
    }
}

TEST_CASE("qmap_polys matches pointwise qmap") {
    Rng rng(13);
    Representation rep = build_rep(RepSpec::clifford(4, 2));
    auto polys_orig = qmap_polys(rep, SpinFrame::Original);
    auto polys_f = qmap_polys(rep, SpinFrame::FBasis);
    for (int k = 0; k < 20; ++k) {
        std::vector<Scalar> xi = rng.rational_vector(rep.dimE, 3, 2);
        JordanElement q = qmap(rep, xi);
        JordanElement qf = to_frame(q, SpinFrame::FBasis);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(polys_orig[i].eval(xi) == q.coords[i]);
            CHECK(polys_f[i].eval(xi) == qf.coords[i]);
        }
    }
}

TEST_CASE("split_module examples") {
    Representation r42 = build_rep(RepSpec::clifford(4, 2));
    CSOI cs = canonical_spin_csoi(4);
    ModuleSplit split = split_module(r42, cs);
    CHECK(split.dims == std::vector<std::size_t>{4, 4});
    CHECK(split.aligned);
    CHECK(split.blocks[0].size() == 4);

    // Phi((0,0,v)) exchanges E1 and E2.
    for (std::size_t g = 2; g < 4; ++g) {
        CHECK((split.projectors[0] * r42.phi_basis[g] * split.projectors[0]).is_zero());
        CHECK((split.projectors[1] * r42.phi_basis[g] * split.projectors[1]).is_zero());
    }

    Representation s23 = build_rep(RepSpec::symm_module(2, 3));
    AlgebraDescriptor s2 = s23.algebra;
    std::vector<Scalar> d1(s2.dim(), Scalar(0)), d2(s2.dim(), Scalar(0));
    d1[0] = Scalar(1);
    d2[1] = Scalar(1);
    CSOI cs2 = validate_csoi({JordanElement(s2, d1), JordanElement(s2, d2)});
    ModuleSplit split2 = split_module(s23, cs2);
    CHECK(split2.dims == std::vector<std::size_t>{3, 3});

    CSOI trivial = validate_csoi({unit_element(s2)});
    ModuleSplit split3 = split_module(s23, trivial);
    CHECK(split3.dims == std::vector<std::size_t>{6});

    // proj(c) Q(xi) = sum_j Q_j(xi_j) on random samples.
    Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        std::vector<Scalar> xi = rng.rational_vector(r42.dimE, 3, 2);
        JordanElement q = qmap(r42, xi);
        JordanElement projected = zero_element(r42.algebra);
        JordanElement blocksum = zero_element(r42.algebra);
        for (std::size_t j = 0; j < cs.size(); ++j) {
            PeirceSplit ps = peirce_split(cs.idempotents[j]);
            projected = elem_add(projected,
                                 JordanElement(r42.algebra, ps.proj1.mul_vec(q.coords)));
            std::vector<Scalar> xij = split.projectors[j].mul_vec(xi);
            blocksum = elem_add(blocksum, JordanElement(r42.algebra,
                                                        ps.proj1.mul_vec(qmap(r42, xij).coords)));
        }
        CHECK(projected == blocksum);
    }
}

TEST_CASE("determinant compatibility Det Phi(x) = det(x)^{N/r}") {
    Rng rng(19);
    for (const auto& spec : {RepSpec::clifford(4, 1), RepSpec::clifford(4, 2),
                             RepSpec::symm_module(2, 2)}) {
        Representation rep = build_rep(spec);
        const std::size_t power = rep.dimE / rep.algebra.rank();
        if (power % 2 != 0) continue;
        for (int k = 0; k < 30; ++k) {
            JordanElement x(rep.algebra, rng.rational_vector(rep.algebra.dim(), 3, 2));
            CHECK(mat_det(phi_of(rep, x)) == jdet(x).pow(static_cast<long>(power)));
        }
    }
}

TEST_CASE("regularity witnesses") {
    // symm_module(2,2): flatten(I_2).
    Representation s22 = build_rep(RepSpec::symm_module(2, 2));
    RegularityResult r1 = regularity_witness(s22);
    REQUIRE(r1.regular());
    CHECK(qmap(s22, *r1.witness) == unit_element(s22.algebra));

    // clifford(4,2): eps_1 (copy A) + eps_3 (copy B), i.e. global eps_7.
    Representation c42 = build_rep(RepSpec::clifford(4, 2));
    RegularityResult r2 = regularity_witness(c42);
    REQUIRE(r2.regular());
    CHECK(qmap(c42, *r2.witness) == unit_element(c42.algebra));
    std::vector<Scalar> expect(8, Scalar(0));
    expect[0] = Scalar(1);
    expect[6] = Scalar(1);
    CHECK(*r2.witness == expect);

    // clifford(4,1): not regular, by the span argument.
    Representation c41 = build_rep(RepSpec::clifford(4, 1));
    RegularityResult r3 = regularity_witness(c41);
    CHECK(!r3.regular());
    CHECK(r3.reason.find("xi2 = 0") != std::string::npos);

    // symm_module(3,2): q < r, not regular.
    Representation s32 = build_rep(RepSpec::symm_module(3, 2));
    CHECK(!regularity_witness(s32).regular());

    // clifford(5,1) and clifford(5,2) are regular.
    for (std::size_t copies : {1u, 2u}) {
        Representation c5 = build_rep(RepSpec::clifford(5, copies));
        RegularityResult r = regularity_witness(c5);
        REQUIRE(r.regular());
        CHECK(qmap(c5, *r.witness) == unit_element(c5.algebra));
    }
}

TEST_CASE("representation json emits recipe and generators") {
    Representation rep = build_rep(RepSpec::clifford(4, 1));
    std::string j = rep.to_json();
    CHECK(j.find("clifford(n=4,copies=1)") != std::string::npos);
    CHECK(j.find("phi_basis") != std::string::npos);
}

TEST_CASE("polar form is the symmetric bilinearization of Q") {
    Rng rng(97);
    for (const auto& spec : {RepSpec::clifford(4, 2), RepSpec::symm_module(2, 2)}) {
        Representation rep = build_rep(spec);
        for (int k = 0; k < 30; ++k) {
            std::vector<Scalar> xi = rng.rational_vector(rep.dimE, 3, 2);
            std::vector<Scalar> eta = rng.rational_vector(rep.dimE, 3, 2);
            JordanElement h = qmap(rep, xi, &eta);
            JordanElement h_swapped = qmap(rep, eta, &xi);
            CHECK(h == h_swapped);
            std::vector<Scalar> sum(xi);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += eta[i];
            // Q(xi + eta) = Q(xi) + 2 H(xi, eta) + Q(eta)
            JordanElement lhs = qmap(rep, sum);
            JordanElement rhs = elem_add(elem_add(qmap(rep, xi), elem_scale(h, Scalar(2))),
                                         qmap(rep, eta));
            CHECK(lhs == rhs);
        }
    }
}
