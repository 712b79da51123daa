#include <doctest.h>

#include "sbdo/checks.hpp"
#include "sbdo/suite.hpp"

using namespace sbdo;

namespace {

MultiPoly yvar(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

struct Fixture {
    Representation rep;
    CSOI csoi;
    ModuleSplit split;
    std::size_t m;
    Fixture(std::size_t n, std::size_t copies)
        : rep(build_rep(RepSpec::clifford(n, copies))),
          csoi(canonical_spin_csoi(n)),
          split(split_module(rep, csoi)),
          m(split.dims[0] / 2) {}
    MultiPoly solved_symbol(std::size_t p) const {
        auto sols = pluriharmonic_solve(rep, csoi, rank2_symbol_basis(rep.algebra.spin_n(), p, p));
        REQUIRE(sols.size() == 1);
        return symbol_from_coeffs(rank2_symbol_basis(rep.algebra.spin_n(), p, p), sols[0].a);
    }
};

}  // namespace

TEST_CASE("hecke: constant symbol at e and at random interior points") {
    Fixture fx(4, 2);
    CHECK(check_hecke(fx.rep, fx.csoi, std::nullopt, unit_element(fx.rep.algebra)).pass);
    Rng rng(61);
    for (int k = 0; k < 10; ++k) {
        JordanElement x = random_interior(fx.rep.algebra, rng);
        CheckResult r = check_hecke(fx.rep, fx.csoi, std::nullopt, x);
        CHECK(r.pass);
    }
}

TEST_CASE("hecke: solved symbol on the subcone") {
    Fixture fx(4, 2);
    MultiPoly q = fx.solved_symbol(1);
    // x = 2 c1 + 3 c2.
    JordanElement x = elem_add(elem_scale(fx.csoi.idempotents[0], Scalar(2)),
                               elem_scale(fx.csoi.idempotents[1], Scalar(3)));
    CHECK(check_hecke(fx.rep, fx.csoi, q, x).pass);
    Rng rng(67);
    for (int k = 0; k < 10; ++k) {
        JordanElement xs = random_interior_subcone(fx.csoi, rng);
        CHECK(check_hecke(fx.rep, fx.csoi, q, xs).pass);
    }
    // p = 2 as well.
    MultiPoly q2 = fx.solved_symbol(2);
    for (int k = 0; k < 5; ++k) {
        JordanElement xs = random_interior_subcone(fx.csoi, rng);
        CHECK(check_hecke(fx.rep, fx.csoi, q2, xs).pass);
    }
}

TEST_CASE("hecke: refuses non-pluriharmonic symbols") {
    Fixture fx(4, 2);
    MultiPoly q = yvar(4, 0);  // delta1(y1) = 2 N1 != 0
    JordanElement x = unit_element(fx.rep.algebra);
    CHECK_THROWS_AS(check_hecke(fx.rep, fx.csoi, q, x), Error);
    try {
        check_hecke(fx.rep, fx.csoi, q, x);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPluriharmonic);
    }
    // Non-interior base point fails cleanly.
    CheckResult r = check_hecke(fx.rep, fx.csoi, std::nullopt, zero_element(fx.rep.algebra));
    CHECK(!r.pass);
}

TEST_CASE("structure equivariance for solved operators") {
    Rng rng(71);
    for (auto [n, copies, p] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 2, 1},
                                {4, 2, 2},
                                {5, 2, 1}}) {
        Fixture fx(n, copies);
        MultiPoly q = fx.solved_symbol(p);
        DiffOperator d = symbol_to_operator(q, RatMatrix::identity(n), FrameTag::FBasis);
        CHECK(check_structure_equivariance(d, fx.csoi, fx.m, p, p, 20, rng).pass);
        CHECK(check_translation_equivariance(d, fx.csoi, 10, rng).pass);
        CHECK(check_rotation_equivariance(d, fx.csoi, 6, rng).pass);
    }
}

TEST_CASE("structure equivariance rejects the non-covariant symbol y1") {
    Fixture fx(4, 2);
    DiffOperator d = symbol_to_operator(yvar(4, 0), RatMatrix::identity(4), FrameTag::FBasis);
    Rng rng(73);
    CheckResult r = check_structure_equivariance(d, fx.csoi, fx.m, 1, 1, 20, rng);
    CHECK(!r.pass);
    CHECK(r.witness.find("l = P(") != std::string::npos);
    // Translations still pass: constant coefficients.
    CHECK(check_translation_equivariance(d, fx.csoi, 10, rng).pass);
}

TEST_CASE("inversion intertwining") {
    Rng rng(79);
    // Pure Hecke case p = 0.
    {
        Fixture fx(4, 2);
        MultiPoly one = MultiPoly::constant(4, Scalar(1));
        CHECK(check_inversion(fx.rep, fx.csoi, fx.split, one, fx.m, 0, 4, rng).pass);
    }
    // Solved symbols, (n, m, p) = (4,2,1), (4,2,2), (5,4,1).
    for (auto [n, copies, p] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 2, 1},
                                {4, 2, 2},
                                {5, 2, 1}}) {
        Fixture fx(n, copies);
        MultiPoly q = fx.solved_symbol(p);
        CHECK(check_inversion(fx.rep, fx.csoi, fx.split, q, fx.m, p, 3, rng).pass);
    }
}

TEST_CASE("inversion rejects weight mismatch") {
    Fixture fx(4, 2);
    MultiPoly one = MultiPoly::constant(4, Scalar(1));
    Rng rng(83);
    CHECK_THROWS_AS(check_inversion(fx.rep, fx.csoi, fx.split, one, fx.m + 1, 0, 2, rng), Error);
}

TEST_CASE("perturbed coefficients break delta, hecke and inversion") {
    Fixture fx(4, 2);
    SymbolSpace space = rank2_symbol_basis(4, 1, 1);
    auto sols = pluriharmonic_solve(fx.rep, fx.csoi, space);
    REQUIRE(sols.size() == 1);
    for (std::size_t j = 0; j < sols[0].a.size(); ++j) {
        std::vector<Scalar> a = sols[0].a;
        a[j] += Scalar(1);
        MultiPoly bad = symbol_from_coeffs(space, a);
        CHECK(!delta_apply(DeltaOp::Delta1, 4, fx.split.dims[0], bad).is_zero());
        JordanElement x = elem_add(elem_scale(fx.csoi.idempotents[0], Scalar(2)),
                                   elem_scale(fx.csoi.idempotents[1], Scalar(3)));
        CHECK_THROWS_AS(check_hecke(fx.rep, fx.csoi, bad, x), Error);
    }
}

TEST_CASE("algebra and representation property suites") {
    Rng rng(89);
    CHECK(check_algebra_axioms(AlgebraDescriptor::spin(4), 100, rng).pass);
    CHECK(check_algebra_axioms(AlgebraDescriptor::spin(5), 100, rng).pass);
    CHECK(check_algebra_axioms(AlgebraDescriptor::symm(2), 100, rng).pass);
    CHECK(check_algebra_axioms(AlgebraDescriptor::symm(3), 100, rng).pass);

    Fixture fx(4, 2);
    CHECK(check_representation_properties(fx.rep, fx.csoi, 100, rng).pass);
    CHECK(check_regularity(fx.rep).pass);

    Representation c41 = build_rep(RepSpec::clifford(4, 1));
    CheckResult r = check_regularity(c41);
    CHECK(!r.pass);
    CHECK(r.witness.find("NotRegular") != std::string::npos);

    // Symm module properties over the diagonal CSOI.
    Representation s22 = build_rep(RepSpec::symm_module(2, 2));
    AlgebraDescriptor s2 = s22.algebra;
    std::vector<Scalar> d1(s2.dim(), Scalar(0)), d2(s2.dim(), Scalar(0));
    d1[0] = Scalar(1);
    d2[1] = Scalar(1);
    CSOI cs2 = validate_csoi({JordanElement(s2, d1), JordanElement(s2, d2)});
    CHECK(check_representation_properties(s22, cs2, 100, rng).pass);
}

TEST_CASE("checks are sensitive to wrong weights") {
    Fixture fx(4, 2);
    MultiPoly q = fx.solved_symbol(1);
    Rng rng(101);
    // Structure check with the wrong multidegree claim fails.
    DiffOperator d = symbol_to_operator(q, RatMatrix::identity(4), FrameTag::FBasis);
    CheckResult wrong_p = check_structure_equivariance(d, fx.csoi, fx.m, 2, 2, 10, rng);
    CHECK(!wrong_p.pass);
    // Inversion with the wrong degree parameter fails the comparison.
    CheckResult wrong_inv = check_inversion(fx.rep, fx.csoi, fx.split, q, fx.m, 2, 3, rng);
    CHECK(!wrong_inv.pass);
}

TEST_CASE("hecke identity needs the subcone for non-constant symbols") {
    // q o Q is pluri-harmonic for J(c) only; at an interior point off the
    // subcone the two sides genuinely differ, which pins the sampling domain
    // used by the suite.
    Fixture fx(4, 2);
    MultiPoly q = fx.solved_symbol(1);
    MultiPoly p_pol = compose_q_Q(fx.rep, q);
    JordanElement x(fx.rep.algebra, {Scalar(2), Scalar(0), Scalar(1), Scalar(0)});
    REQUIRE(cone_test(x) == ConeLocation::Interior);
    CheckResult off = check_hecke_identity(fx.rep, p_pol, x);
    CHECK(!off.pass);
    // On the subcone the identity holds, same symbol.
    JordanElement xs = elem_add(elem_scale(fx.csoi.idempotents[0], Scalar(2)),
                                elem_scale(fx.csoi.idempotents[1], Scalar(3)));
    CHECK(check_hecke_identity(fx.rep, p_pol, xs).pass);
}
