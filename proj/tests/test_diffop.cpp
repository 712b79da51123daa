#include <doctest.h>

#include "sbdo/checks.hpp"
#include "sbdo/diffop.hpp"
#include "sbdo/rng.hpp"

using namespace sbdo;

namespace {

MultiPoly yvar(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

MultiPoly yprime_sq(std::size_t n) {
    MultiPoly r(n);
    for (std::size_t j = 2; j < n; ++j) {
        MultiPoly::Exponents e(n, 0);
        e[j] = 2;
        r.add_term(e, Scalar(1));
    }
    return r;
}

}  // namespace

TEST_CASE("symbol_to_operator basics") {
    // q = y1, gram = Id: the operator is d/dy1 with eigenvalue v1.
    DiffOperator d1 = symbol_to_operator(yvar(2, 0), RatMatrix::identity(2), FrameTag::Generic);
    CHECK(d1.derivative_polynomial() == yvar(2, 0));
    ExpFunction f = ExpFunction::pure(FrameTag::Generic, 2, {Scalar(3), Scalar(5)});
    ExpFunction df = apply_operator(d1, f);
    CHECK(df.prefactor == MultiPoly::constant(2, Scalar(3)));
    CHECK(df.direction == f.direction);

    // gram = 2 Id halves the derivative.
    DiffOperator d2 = symbol_to_operator(yvar(2, 0), RatMatrix::identity(2).scaled(Scalar(2)),
                                         FrameTag::Generic);
    CHECK(d2.derivative_polynomial() == yvar(2, 0).scaled(Scalar::ratio(1, 2)));
    ExpFunction df2 = apply_operator(d2, f);
    CHECK(df2.prefactor == MultiPoly::constant(2, Scalar(3)));

    // Singular gram is rejected.
    CHECK_THROWS_AS(symbol_to_operator(yvar(2, 0), RatMatrix(2, 2), FrameTag::Generic), Error);
}

TEST_CASE("wave operator from the spin determinant symbol") {
    // Original frame, q = det = u0^2 - |u|^2, gram 2 Id: D = (1/4)(d0^2 - d1^2 - d2^2 - d3^2).
    const std::size_t n = 4;
    MultiPoly det(n);
    det += yvar(n, 0) * yvar(n, 0);
    for (std::size_t i = 1; i < n; ++i) det -= yvar(n, i) * yvar(n, i);
    DiffOperator d = symbol_to_operator(det, RatMatrix::identity(n).scaled(Scalar(2)),
                                        FrameTag::Original);
    MultiPoly expect(n);
    expect += (yvar(n, 0) * yvar(n, 0)).scaled(Scalar::ratio(1, 4));
    for (std::size_t i = 1; i < n; ++i)
        expect -= (yvar(n, i) * yvar(n, i)).scaled(Scalar::ratio(1, 4));
    CHECK(d.derivative_polynomial() == expect);
}

TEST_CASE("eigen-equation on random directions") {
    Rng rng(37);
    // Generic frame with a random SPD gram.
    RatMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = rng.rational(2, 2);
    RatMatrix gram = a.transpose() * a + RatMatrix::identity(3);
    MultiPoly q = yvar(3, 0) * yvar(3, 1) + yvar(3, 2).scaled(Scalar::ratio(5, 3)) +
                  yvar(3, 2) * yvar(3, 2) * yvar(3, 0);
    DiffOperator d = symbol_to_operator(q, gram, FrameTag::Generic);
    for (int k = 0; k < 200; ++k) {
        std::vector<Scalar> v = rng.rational_vector(3, 3, 2);
        ExpFunction f = ExpFunction::pure(FrameTag::Generic, 3, v);
        ExpFunction df = apply_operator(d, f);
        CHECK(df.prefactor == MultiPoly::constant(3, d.eigenvalue(v)));
        CHECK(df.direction == v);
        CHECK(df.exp_offset == Scalar(0));
    }
}

TEST_CASE("product rule with polynomial prefactor") {
    // D = d/dz1 (gram Id), f = z1 e^{(z,v)} -> (1 + z1 v1) e^{(z,v)}.
    DiffOperator d = symbol_to_operator(yvar(2, 0), RatMatrix::identity(2), FrameTag::Generic);
    ExpFunction f;
    f.frame = FrameTag::Generic;
    f.prefactor = yvar(2, 0);
    f.direction = {Scalar::ratio(2, 3), Scalar(7)};
    ExpFunction df = apply_operator(d, f);
    MultiPoly expect = MultiPoly::constant(2, Scalar(1)) + yvar(2, 0).scaled(Scalar::ratio(2, 3));
    CHECK(df.prefactor == expect);
}

TEST_CASE("translation commutes with constant-coefficient operators") {
    Rng rng(41);
    const std::size_t n = 4;
    MultiPoly q = yvar(n, 0) * yvar(n, 1) - yprime_sq(n);
    DiffOperator d = symbol_to_operator(q, RatMatrix::identity(n), FrameTag::FBasis);
    RatMatrix gram = d.internal_gram();
    for (int k = 0; k < 30; ++k) {
        std::vector<Scalar> v = rng.rational_vector(n, 3, 2);
        std::vector<Scalar> u = rng.rational_vector(n, 3, 2);
        ExpFunction f = ExpFunction::pure(FrameTag::FBasis, n, v);
        f.prefactor = MultiPoly::constant(n, Scalar(1)) + yvar(n, 2).scaled(rng.rational(2, 2));
        CHECK(apply_operator(d, translate(f, u, gram)) ==
              translate(apply_operator(d, f), u, gram));
    }
}

TEST_CASE("rank2 operator assembly and frame consistency") {
    CoeffVector cv = derived_coeffs(4, 2, 1);
    DiffOperator d = rank2_operator(4, 2, 1, cv);
    CHECK(d.frame() == FrameTag::FBasis);
    CHECK(d.symbol() == yvar(4, 0) * yvar(4, 1) + yprime_sq(4).scaled(cv.a[1]));

    // p = 0 gives the identity operator.
    DiffOperator id_op = rank2_operator(4, 2, 0, derived_coeffs(4, 2, 0));
    CHECK(id_op.symbol() == MultiPoly::constant(4, Scalar(1)));
    CHECK(id_op.derivative_polynomial() == MultiPoly::constant(4, Scalar(1)));

    // (4,2,2): symbol is annihilated by both deltas.
    CoeffVector cv2 = derived_coeffs(4, 2, 2);
    DiffOperator d2 = rank2_operator(4, 2, 2, cv2);
    CHECK(delta_apply(DeltaOp::Delta1, 4, 4, d2.symbol()).is_zero());
    CHECK(delta_apply(DeltaOp::Delta2, 4, 4, d2.symbol()).is_zero());

    // Original-frame version has identical eigenvalues.
    DiffOperator d_orig = operator_to_frame(d, FrameTag::Original);
    CHECK(d_orig.frame() == FrameTag::Original);
    Rng rng(43);
    RatMatrix t = spin_orig_to_f(4);
    for (int k = 0; k < 50; ++k) {
        std::vector<Scalar> u = rng.rational_vector(4, 3, 2);
        CHECK(d_orig.eigenvalue(u) == d.eigenvalue(t.mul_vec(u)));
    }
    // Round trip back to the f-basis.
    DiffOperator d_back = operator_to_frame(d_orig, FrameTag::FBasis);
    CHECK(d_back == d);
}

TEST_CASE("restriction to block coordinates") {
    const std::size_t n = 4;
    CSOI csoi = canonical_spin_csoi(n);
    Rng rng(47);
    for (int k = 0; k < 20; ++k) {
        std::vector<Scalar> v = rng.rational_vector(n, 3, 2);
        ExpFunction f = ExpFunction::pure(FrameTag::FBasis, n, v);
        ExpFunction rf = restrict_to_blocks(f, csoi);
        CHECK(rf.frame == FrameTag::Blocks);
        REQUIRE(rf.direction.size() == 2);
        // (c_j, v) picks the y_j component in the f frame (|c_j|^2 = 1).
        CHECK(rf.direction[0] == v[0]);
        CHECK(rf.direction[1] == v[1]);
    }
}

TEST_CASE("emit and parse round trip") {
    // Identity operator serializes with the empty monomial key.
    DiffOperator id_op = rank2_operator(4, 2, 0, derived_coeffs(4, 2, 0));
    std::string j = emit_operator(id_op, EmitFormat::Json);
    CHECK(j.find("\"symbol\":{\"\":\"1\"}") != std::string::npos);
    CHECK(parse_operator(j) == id_op);

    // (4,2,1) operator: three monomials with rational-string coefficients.
    DiffOperator d = rank2_operator(4, 2, 1, derived_coeffs(4, 2, 1));
    std::string dj = emit_operator(d, EmitFormat::Json);
    CHECK(parse_operator(dj) == d);
    CHECK(d.symbol().term_count() == 3);

    // Deterministic output.
    CHECK(emit_operator(d, EmitFormat::Json) == dj);

    // Round trip on a generic-frame operator with complex coefficients.
    MultiPoly q = MultiPoly::variable(2, 0).scaled(Scalar::i()) +
                  MultiPoly::variable(2, 1).scaled(Scalar::ratio(-7, 5));
    DiffOperator g = symbol_to_operator(q, RatMatrix::identity(2).scaled(Scalar(2)),
                                        FrameTag::Generic);
    CHECK(parse_operator(emit_operator(g, EmitFormat::Json)) == g);

    // Text emission mentions the frame and the derivative form.
    std::string text = emit_operator(d, EmitFormat::Text);
    CHECK(text.find("frame: f") != std::string::npos);
    CHECK(text.find("operator:") != std::string::npos);
}

TEST_CASE("operator on the gaussian test family F_xi") {
    // D_q F_xi = q((i/2) Q(xi)) F_xi, with F_xi(z) = e^{(i/2)(z, Q(xi))}.
    Representation rep = build_rep(RepSpec::clifford(4, 2));
    CSOI csoi = canonical_spin_csoi(4);
    auto sols = pluriharmonic_solve(rep, csoi, rank2_symbol_basis(4, 1, 1));
    REQUIRE(sols.size() == 1);
    MultiPoly q = symbol_from_coeffs(rank2_symbol_basis(4, 1, 1), sols[0].a);
    DiffOperator d = symbol_to_operator(q, RatMatrix::identity(4), FrameTag::FBasis);

    Rng rng(59);
    const Scalar half_i = Scalar::i() * Scalar::ratio(1, 2);
    for (int k = 0; k < 20; ++k) {
        std::vector<Scalar> xi = rng.rational_vector(rep.dimE, 3, 2);
        JordanElement qxi = to_frame(qmap(rep, xi), SpinFrame::FBasis);
        std::vector<Scalar> v(qxi.coords);
        for (auto& x : v) x *= half_i;
        ExpFunction fxi = ExpFunction::pure(FrameTag::FBasis, 4, v);
        ExpFunction dfxi = apply_operator(d, fxi);
        CHECK(dfxi.prefactor == MultiPoly::constant(4, d.eigenvalue(v)));
        // and the eigenvalue is the composed integrand at xi
        MultiPoly p_tilde = compose_q_Q(rep, q).scaled(half_i.pow(2));
        CHECK(d.eigenvalue(v) == p_tilde.eval(xi));
    }
}

TEST_CASE("structure covariance of D_q on the full algebra") {
    // D_q(f o l^{-1}) = chi1(l1)^{-p1} chi2(l2)^{-p2} (D_q f) o l^{-1} for
    // l = P(a1 c1 + a2 c2), checked as exact ExpFunction identities on f_v.
    Representation rep = build_rep(RepSpec::clifford(4, 2));
    CSOI csoi = canonical_spin_csoi(4);
    const std::size_t p = 1;
    auto sols = pluriharmonic_solve(rep, csoi, rank2_symbol_basis(4, p, p));
    MultiPoly q = symbol_from_coeffs(rank2_symbol_basis(4, p, p), sols[0].a);
    DiffOperator d = symbol_to_operator(q, RatMatrix::identity(4), FrameTag::FBasis);
    AlgebraDescriptor falg = AlgebraDescriptor::spin(4, SpinFrame::FBasis);

    Rng rng(103);
    for (int k = 0; k < 30; ++k) {
        Scalar a1 = rng.positive_rational();
        Scalar a2 = rng.positive_rational();
        std::vector<Scalar> inv_c{a1.inverse(), a2.inverse(), Scalar(0), Scalar(0)};
        RatMatrix linv = pmap(JordanElement(falg, inv_c));  // P(x)^{-1} = P(x^{-1})
        std::vector<Scalar> v = rng.rational_vector(4, 3, 2);

        // f_v o l^{-1} = f_{adj(l^{-1}) v}; P(x^{-1}) is Gram-self-adjoint.
        std::vector<Scalar> w = linv.mul_vec(v);
        ExpFunction lhs = apply_operator(d, ExpFunction::pure(FrameTag::FBasis, 4, w));
        ExpFunction rhs = apply_operator(d, ExpFunction::pure(FrameTag::FBasis, 4, v));
        rhs.direction = w;
        Scalar chi_factor = (a1 * a1).pow(-static_cast<long>(p)) *
                            (a2 * a2).pow(-static_cast<long>(p));
        rhs.prefactor = rhs.prefactor.scaled(chi_factor);
        CHECK(lhs == rhs);
    }
}
