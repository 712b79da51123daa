#include "sbdo/checks.hpp"

#include <sstream>

namespace sbdo {

namespace {

std::string vec_str(const std::vector<Scalar>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace

CSOI canonical_spin_csoi(std::size_t n) {
    AlgebraDescriptor alg = AlgebraDescriptor::spin(n);
    std::vector<Scalar> c1(n, Scalar(0)), c2(n, Scalar(0));
    c1[0] = Scalar::ratio(1, 2);
    c1[1] = Scalar::ratio(1, 2);
    c2[0] = Scalar::ratio(1, 2);
    c2[1] = Scalar::ratio(-1, 2);
    return validate_csoi({JordanElement(alg, c1), JordanElement(alg, c2)});
}

Scalar rational_sqrt(const Scalar& s) {
    if (!s.is_real() || s.re() < 0)
        throw Error(ErrorKind::InvariantViolation, "rational_sqrt of non-positive value");
    mpz_class num = s.re().get_num(), den = s.re().get_den();
    mpz_class rn, rd, rem;
    mpz_sqrtrem(rn.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t());
    if (rem != 0) throw Error(ErrorKind::InvariantViolation, "numerator is not a perfect square");
    mpz_sqrtrem(rd.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw Error(ErrorKind::InvariantViolation, "denominator is not a perfect square");
    return Scalar(mpq_class(rn, rd));
}

JordanElement random_element(const AlgebraDescriptor& alg, Rng& rng) {
    return JordanElement(alg, rng.rational_vector(alg.dim()));
}

JordanElement random_interior(const AlgebraDescriptor& alg, Rng& rng) {
    switch (alg.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            // s = sum |x_i| + positive guarantees s^2 > |x|^2.
            std::vector<Scalar> c(alg.dim());
            Scalar s(0);
            for (std::size_t i = 1; i < alg.dim(); ++i) {
                c[i] = rng.rational(3, 3);
                s += c[i].re() >= 0 ? c[i] : -c[i];
            }
            c[0] = s + rng.positive_rational(3, 3);
            JordanElement x(alg.with_frame(SpinFrame::Original), std::move(c));
            return to_frame(x, alg.frame());
        }
        case AlgebraDescriptor::Kind::Symm: {
            // Strict diagonal dominance with positive diagonal.
            const std::size_t r = alg.symm_r();
            std::vector<Scalar> c(alg.dim());
            std::size_t idx = r;
            std::vector<Scalar> rowsum(r, Scalar(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j, ++idx) {
                    c[idx] = rng.rational(2, 3);
                    Scalar a = c[idx].re() >= 0 ? c[idx] : -c[idx];
                    rowsum[i] += a;
                    rowsum[j] += a;
                }
            for (std::size_t i = 0; i < r; ++i) c[i] = rowsum[i] + rng.positive_rational(3, 2);
            return JordanElement(alg, std::move(c));
        }
        case AlgebraDescriptor::Kind::Product: {
            std::vector<Scalar> c;
            for (const auto& f : alg.factors()) {
                JordanElement xf = random_interior(f, rng);
                c.insert(c.end(), xf.coords.begin(), xf.coords.end());
            }
            return JordanElement(alg, std::move(c));
        }
    }
    throw Error(ErrorKind::Algebra, "random_interior: unhandled kind");
}

JordanElement random_interior_subcone(const CSOI& csoi, Rng& rng) {
    JordanElement x = zero_element(csoi.algebra);
    for (const auto& c : csoi.idempotents)
        x = elem_add(x, elem_scale(c, rng.positive_rational(6, 4)));
    return x;
}

CheckResult check_algebra_axioms(const AlgebraDescriptor& alg, std::size_t samples, Rng& rng) {
    CheckResult res{"algebra_axioms"};
    const JordanElement e = unit_element(alg);
    for (std::size_t s = 0; s < samples && res.pass; ++s) {
        JordanElement x = random_element(alg, rng);
        JordanElement y = random_element(alg, rng);
        // Unit law and Jordan identity.
        if (jmul(e, x) != x) res.fail("e*x != x at x=" + vec_str(x.coords));
        JordanElement x2 = jmul(x, x);
        if (jmul(x, jmul(x2, y)) != jmul(x2, jmul(x, y)))
            res.fail("Jordan identity fails at x=" + vec_str(x.coords) + " y=" + vec_str(y.coords));
        // Fundamental formula P(P(x)y) = P(x) P(y) P(x).
        RatMatrix px = pmap(x);
        JordanElement pxy(alg, px.mul_vec(y.coords));
        if (pmap(pxy) != px * pmap(y) * px)
            res.fail("fundamental formula fails at x=" + vec_str(x.coords) +
                     " y=" + vec_str(y.coords));
        // det(P(x)y) = det(x)^2 det(y).
        if (jdet(pxy) != jdet(x) * jdet(x) * jdet(y))
            res.fail("det(P(x)y) != det(x)^2 det(y) at x=" + vec_str(x.coords));
        // Inverse law.
        DetInv di = jdet_inv(x);
        if (di.inverse && jmul(x, *di.inverse) != e)
            res.fail("x * x^{-1} != e at x=" + vec_str(x.coords));
        if (di.inverse) {
            RatMatrix pi = pmap(*di.inverse);
            if (px * pi != RatMatrix::identity(alg.dim()))
                res.fail("P(x) P(x^{-1}) != Id at x=" + vec_str(x.coords));
        }
    }
    return res;
}

CheckResult check_representation_properties(const Representation& rep, const CSOI& csoi,
                                            std::size_t samples, Rng& rng) {
    CheckResult res{"representation_axioms"};
    const AlgebraDescriptor& alg = rep.algebra;
    ModuleSplit split = split_module(rep, csoi);

    // Peirce projector algebra on the CSOI idempotents.
    for (const auto& c : csoi.idempotents) {
        PeirceSplit ps = peirce_split(to_frame(c, SpinFrame::Original));
        RatMatrix id = RatMatrix::identity(alg.dim());
        if (ps.proj1 + ps.proj_half + ps.proj0 != id)
            res.fail("Peirce projectors do not sum to Id");
        if (ps.proj1 * ps.proj1 != ps.proj1 || ps.proj_half * ps.proj_half != ps.proj_half ||
            ps.proj0 * ps.proj0 != ps.proj0)
            res.fail("Peirce projector not idempotent");
        if (!(ps.proj1 * ps.proj_half).is_zero() || !(ps.proj1 * ps.proj0).is_zero() ||
            !(ps.proj_half * ps.proj0).is_zero())
            res.fail("Peirce projectors not mutually annihilating");
        RatMatrix lc = lmat(to_frame(c, SpinFrame::Original));
        if (lc * ps.proj1 != ps.proj1) res.fail("L(c) proj1 != proj1");
        if (lc * ps.proj_half != ps.proj_half.scaled(Scalar::ratio(1, 2)))
            res.fail("L(c) proj_half != proj_half / 2");
        if (!(lc * ps.proj0).is_zero()) res.fail("L(c) proj0 != 0");
    }

    // N_j = r_j q is checked inside split_module; record the dims.
    {
        std::ostringstream os;
        os << "block dims:";
        for (auto d : split.dims) os << " " << d;
        res.notes.push_back(os.str());
    }

    for (std::size_t s = 0; s < samples && res.pass; ++s) {
        JordanElement x = random_element(alg, rng);
        JordanElement y = random_element(alg, rng);
        std::vector<Scalar> xi = rng.rational_vector(rep.dimE);
        // Phi(P(x) y) = Phi(x) Phi(y) Phi(x).
        RatMatrix px = pmap(x);
        JordanElement pxy(alg, px.mul_vec(y.coords));
        RatMatrix fx = phi_of(rep, x);
        if (phi_of(rep, pxy) != fx * phi_of(rep, y) * fx)
            res.fail("Phi(P(x)y) != Phi(x)Phi(y)Phi(x) at x=" + vec_str(x.coords));
        // Q(Phi(x) xi) = P(x) Q(xi).
        std::vector<Scalar> fxxi = fx.mul_vec(xi);
        JordanElement lhs = qmap(rep, fxxi);
        JordanElement rhs(alg, px.mul_vec(qmap(rep, xi).coords));
        if (lhs != rhs) res.fail("Q(Phi(x) xi) != P(x) Q(xi) at x=" + vec_str(x.coords));
        // proj(c) Q(xi) = sum_j Q_j(xi_j).
        JordanElement q = qmap(rep, xi);
        JordanElement projected = zero_element(alg);
        JordanElement blocksum = zero_element(alg);
        for (std::size_t j = 0; j < csoi.size(); ++j) {
            PeirceSplit ps = peirce_split(to_frame(csoi.idempotents[j], SpinFrame::Original));
            projected = elem_add(projected, JordanElement(alg, ps.proj1.mul_vec(q.coords)));
            std::vector<Scalar> xij = split.projectors[j].mul_vec(xi);
            JordanElement qj = qmap(rep, xij);
            blocksum = elem_add(blocksum, JordanElement(alg, ps.proj1.mul_vec(qj.coords)));
        }
        if (projected != blocksum)
            res.fail("proj(c) Q(xi) != sum_j Q_j(xi_j) at xi=" + vec_str(xi));
        // Phi(x)^{-1} = Phi(x^{-1}).
        DetInv di = jdet_inv(x);
        if (di.inverse && fx * phi_of(rep, *di.inverse) != RatMatrix::identity(rep.dimE))
            res.fail("Phi(x) Phi(x^{-1}) != Id at x=" + vec_str(x.coords));
        // Det Phi(x) = det(x)^{N/r}, checked for even N/r.
        if (rep.dimE % alg.rank() == 0 && (rep.dimE / alg.rank()) % 2 == 0) {
            if (mat_det(fx) != jdet(x).pow(static_cast<long>(rep.dimE / alg.rank())))
                res.fail("Det Phi(x) != det(x)^{N/r} at x=" + vec_str(x.coords));
        }
    }

    // Spin: Phi((0,0,v)) exchanges E1 and E2.
    if (alg.kind() == AlgebraDescriptor::Kind::Spin && csoi.size() == 2 && res.pass) {
        for (std::size_t g = 2; g < alg.dim(); ++g) {
            RatMatrix m = rep.phi_basis[g];
            if (!(split.projectors[0] * m * split.projectors[0]).is_zero() ||
                !(split.projectors[1] * m * split.projectors[1]).is_zero())
                res.fail("Phi((0,0,v)) does not exchange E1 and E2 (generator " +
                         std::to_string(g) + ")");
        }
    }
    return res;
}

CheckResult check_regularity(const Representation& rep) {
    CheckResult res{"regularity"};
    RegularityResult rr = regularity_witness(rep);
    if (!rr.regular()) {
        res.fail("NotRegular: " + rr.reason);
    } else {
        res.notes.push_back("witness xi = " + vec_str(*rr.witness));
    }
    return res;
}

CheckResult check_hecke(const Representation& rep, const CSOI& csoi,
                        const std::optional<MultiPoly>& q, const JordanElement& x) {
    const std::size_t r = rep.algebra.rank();
    if (rep.dimE % (2 * r) != 0)
        throw Error(ErrorKind::NonIntegralExponent,
                    "N/(2r) = " + std::to_string(rep.dimE) + "/" + std::to_string(2 * r));
    MultiPoly p_pol = q ? compose_q_Q(rep, *q) : MultiPoly::constant(rep.dimE, Scalar(1));
    if (q) {
        ModuleSplit split = split_module(rep, csoi);
        bool harmonic = true;
        for (const auto& block : split.blocks)
            if (!block_laplacian(p_pol, block).is_zero()) harmonic = false;
        if (!harmonic)
            throw Error(ErrorKind::NotPluriharmonic,
                        "q o Q has a nonvanishing block Laplacian; refusing to certify");
    }
    return check_hecke_identity(rep, p_pol, x);
}

CheckResult check_hecke_identity(const Representation& rep, const MultiPoly& p_pol,
                                 const JordanElement& x) {
    CheckResult res{"hecke"};
    if (cone_test(to_frame(x, SpinFrame::Original)) != ConeLocation::Interior) {
        res.fail("x is not interior: " + vec_str(x.coords));
        return res;
    }
    const std::size_t r = rep.algebra.rank();
    JordanElement xo = to_frame(x, SpinFrame::Original);
    RatMatrix a = phi_of(rep, xo);
    GaussianIntegral gi = gaussian_fourier(a, p_pol);

    DetInv di = jdet_inv(xo);
    RatMatrix phi_inv = phi_of(rep, *di.inverse);
    // Exponent: eta^T Phi(x)^{-1} eta vs (x^{-1}, Q(eta)) = eta^T Phi(x^{-1}) eta.
    if (gi.a_inv != phi_inv) {
        res.fail("exponent mismatch: Phi(x)^{-1} != Phi(x^{-1}) at x=" + vec_str(x.coords));
        return res;
    }
    // Determinant power: Det Phi(x) = det(x)^{N/r} with det(x) > 0.
    if (mat_det(a) != di.det.pow(static_cast<long>(rep.dimE / r))) {
        res.fail("Det Phi(x) != det(x)^{N/r} at x=" + vec_str(x.coords));
        return res;
    }
    // Polynomial part: value(eta) vs p(i Phi(x^{-1}) eta).
    MultiPoly rhs = p_pol.subst_linear(phi_inv.scaled(Scalar::i()));
    if (gi.value != rhs) {
        res.fail("polynomial parts differ at x=" + vec_str(x.coords));
        return res;
    }
    return res;
}

namespace {

// Gram-adjoint of A: G^{-1} A^T G.
RatMatrix gram_adjoint(const RatMatrix& a, const RatMatrix& gram) {
    auto ginv = mat_inverse(gram);
    return *ginv * a.transpose() * gram;
}

struct TensorWeights {
    std::vector<std::size_t> m;  // m_j per block
};

// pi_{m_j}(l_j) for the scaling l_j = a_j^2 with psi_j = a_j on each block:
// F -> prod psi_j^{-m_j} F(a_j^{-2} z_j).
ExpFunction tensor_structure_action(const ExpFunction& f, const std::vector<Scalar>& a,
                                    const TensorWeights& w) {
    const std::size_t k = f.direction.size();
    ExpFunction out = f;
    Scalar scale(1);
    RatMatrix subst = RatMatrix::identity(k);
    for (std::size_t j = 0; j < k; ++j) {
        scale *= a[j].pow(-static_cast<long>(w.m[j]));
        Scalar inv2 = (a[j] * a[j]).inverse();
        subst.at(j, j) = inv2;
        out.direction[j] = f.direction[j] * inv2;
    }
    out.prefactor = f.prefactor.subst_linear(subst).scaled(scale);
    return out;
}

}  // namespace

CheckResult check_structure_equivariance(const DiffOperator& d, const CSOI& csoi, std::size_t m,
                                         std::size_t p1, std::size_t p2, std::size_t samples,
                                         Rng& rng) {
    CheckResult res{"equivariance_structure"};
    if (d.frame() != FrameTag::FBasis)
        throw Error(ErrorKind::Pairing, "structure check expects an f-basis operator");
    const std::size_t n = d.symbol().nvars();
    RatMatrix gram = d.internal_gram();
    AlgebraDescriptor alg_f = csoi.algebra.with_frame(SpinFrame::FBasis);
    TensorWeights w{{m + 2 * p1, m + 2 * p2}};

    for (std::size_t s = 0; s < samples && res.pass; ++s) {
        Scalar a1 = rng.positive_rational(6, 4);
        Scalar a2 = rng.positive_rational(6, 4);
        std::vector<Scalar> v = rng.rational_vector(n);

        // l = P(a1 c1 + a2 c2); psi(l) = det(a1 c1 + a2 c2) = a1 a2.
        std::vector<Scalar> xinv_c(n, Scalar(0));
        xinv_c[0] = a1.inverse();
        xinv_c[1] = a2.inverse();
        JordanElement xinv(alg_f, xinv_c);
        RatMatrix linv = pmap(xinv);
        Scalar psi_inv_m = (a1 * a2).pow(-static_cast<long>(m));

        ExpFunction fv = ExpFunction::pure(FrameTag::FBasis, n, v);
        // Left: D applied to pi_m(l) f_v = psi^{-m} f_{adj(l^{-1}) v}, restricted.
        std::vector<Scalar> wv = gram_adjoint(linv, gram).mul_vec(v);
        ExpFunction lhs_in = ExpFunction::pure(FrameTag::FBasis, n, wv).scaled(psi_inv_m);
        ExpFunction lhs = restrict_to_blocks(apply_operator(d, lhs_in), csoi);
        // Right: tensor action applied to the restricted D f_v.
        ExpFunction rhs0 = restrict_to_blocks(apply_operator(d, fv), csoi);
        ExpFunction rhs = tensor_structure_action(rhs0, {a1, a2}, w);
        if (lhs != rhs) {
            res.fail("sample " + std::to_string(s) + ": l = P(" + a1.to_string() + " c1 + " +
                     a2.to_string() + " c2), v = " + vec_str(v));
        }
    }
    return res;
}

CheckResult check_translation_equivariance(const DiffOperator& d, const CSOI& csoi,
                                           std::size_t samples, Rng& rng) {
    CheckResult res{"equivariance_translation"};
    if (d.frame() != FrameTag::FBasis)
        throw Error(ErrorKind::Pairing, "translation check expects an f-basis operator");
    const std::size_t n = d.symbol().nvars();
    RatMatrix gram = d.internal_gram();

    for (std::size_t s = 0; s < samples && res.pass; ++s) {
        Scalar u1 = rng.rational(5, 3);
        Scalar u2 = rng.rational(5, 3);
        std::vector<Scalar> u(n, Scalar(0));
        u[0] = u1;
        u[1] = u2;
        std::vector<Scalar> v = rng.rational_vector(n);
        // Shifted polynomial prefactor exercises the Leibniz path.
        ExpFunction f = ExpFunction::pure(FrameTag::FBasis, n, v);
        f.prefactor = MultiPoly::constant(n, Scalar(1)) +
                      MultiPoly::variable(n, 0).scaled(rng.rational(3, 2)) +
                      (MultiPoly::variable(n, 1) * MultiPoly::variable(n, 1))
                          .scaled(rng.rational(3, 2));

        ExpFunction lhs = restrict_to_blocks(apply_operator(d, translate(f, u, gram)), csoi);
        ExpFunction rhs0 = restrict_to_blocks(apply_operator(d, f), csoi);
        ExpFunction rhs = translate(rhs0, {u1, u2}, RatMatrix::identity(2));
        if (lhs != rhs)
            res.fail("sample " + std::to_string(s) + ": u = (" + u1.to_string() + "," +
                     u2.to_string() + "), v = " + vec_str(v));
    }
    return res;
}

CheckResult check_rotation_equivariance(const DiffOperator& d, const CSOI& csoi,
                                        std::size_t samples, Rng& rng) {
    CheckResult res{"equivariance_rotation"};
    if (d.frame() != FrameTag::FBasis)
        throw Error(ErrorKind::Pairing, "rotation check expects an f-basis operator");
    const std::size_t n = d.symbol().nvars();
    RatMatrix gram = d.internal_gram();

    for (std::size_t s = 0; s < samples && res.pass; ++s) {
        RatMatrix rot = rational_rotation(n - 2, rng);
        RatMatrix full = RatMatrix::identity(n);
        for (std::size_t i = 0; i < n - 2; ++i)
            for (std::size_t j = 0; j < n - 2; ++j) full.at(2 + i, 2 + j) = rot.at(i, j);
        std::vector<Scalar> v = rng.rational_vector(n);

        auto full_inv = mat_inverse(full);
        std::vector<Scalar> wv = gram_adjoint(*full_inv, gram).mul_vec(v);
        ExpFunction lhs = restrict_to_blocks(
            apply_operator(d, ExpFunction::pure(FrameTag::FBasis, n, wv)), csoi);
        ExpFunction rhs = restrict_to_blocks(
            apply_operator(d, ExpFunction::pure(FrameTag::FBasis, n, v)), csoi);
        if (lhs != rhs) res.fail("sample " + std::to_string(s) + ": rotation witness v = " + vec_str(v));
    }
    return res;
}

CheckResult check_inversion(const Representation& rep, const CSOI& csoi, const ModuleSplit& split,
                            const MultiPoly& q, std::size_t m, std::size_t p, std::size_t samples,
                            Rng& rng, const MultiPoly* precomposed) {
    CheckResult res{"inversion"};
    const std::size_t r = rep.algebra.rank();
    if (rep.dimE != 2 * r * m)
        throw Error(ErrorKind::NonIntegralWeight,
                    "N = " + std::to_string(rep.dimE) + " != 2rm = " + std::to_string(2 * r * m));
    if (!split.aligned)
        throw Error(ErrorKind::InvariantViolation, "inversion check needs an aligned split");
    const std::size_t ne = rep.dimE;
    const std::size_t k = csoi.size();

    // p~(eta) = q((i/2) Q(eta)), polynomial over Gaussian rationals. For
    // homogeneous q of degree d this is (i/2)^d (q o Q), so a precomposed
    // q o Q can be rescaled instead of substituting again.
    const Scalar half_i = Scalar::i() * Scalar::ratio(1, 2);
    MultiPoly p_tilde(ne);
    bool homogeneous = true;
    {
        std::uint32_t deg = q.total_degree();
        for (const auto& [e, c] : q.terms()) {
            std::uint32_t d = 0;
            for (auto v : e) d += v;
            if (d != deg) homogeneous = false;
        }
        if (precomposed && homogeneous) {
            p_tilde = precomposed->scaled(half_i.pow(deg));
        } else {
            std::vector<MultiPoly> images = qmap_polys(rep, SpinFrame::FBasis);
            for (auto& im : images) im = im.scaled(half_i);
            p_tilde = fsym_to_scaled(q, rep.algebra.spin_n()).subst(images);
        }
    }

    for (std::size_t s = 0; s < samples && res.pass; ++s) {
        std::vector<Scalar> a(k);
        for (auto& x : a) x = rng.positive_rational(5, 3);
        JordanElement xe = zero_element(rep.algebra);
        for (std::size_t j = 0; j < k; ++j)
            xe = elem_add(xe, elem_scale(csoi.idempotents[j], a[j]));
        RatMatrix phix = phi_of(rep, xe);

        // Left side: det(z)^{-m} det(z/i)^{m} times the blockwise moments of
        // p~ against the Gaussians of Phi(x) on each E_j (z = i x).
        JordanElement z = elem_scale(xe, Scalar::i());
        Scalar detz = jdet(z);
        Scalar det_z_over_i_pow = jdet(xe).pow(static_cast<long>(m));
        Scalar scalar_l = detz.pow(-static_cast<long>(m)) * det_z_over_i_pow;
        MultiPoly v = p_tilde;
        for (std::size_t j = 0; j < k; ++j) {
            v = partial_gaussian_moment(v, phix, split.blocks[j]);
            RatMatrix sub(split.blocks[j].size(), split.blocks[j].size());
            for (std::size_t i2 = 0; i2 < split.blocks[j].size(); ++i2)
                for (std::size_t j2 = 0; j2 < split.blocks[j].size(); ++j2)
                    sub.at(i2, j2) = phix.at(split.blocks[j][i2], split.blocks[j][j2]);
            scalar_l *= rational_sqrt(mat_det(sub)).inverse();
        }
        MultiPoly lhs = v.scaled(scalar_l);

        // Left exponent: -1/2 xi^T Phi(x)^{-1} xi.
        RatMatrix el = *mat_inverse(phix);

        // Right side: tensor inversion of D F_xi restricted, weights m_j = m + 2p.
        Scalar scalar_r(1);
        for (std::size_t j = 0; j < k; ++j) {
            Scalar zj = Scalar::i() * a[j];  // det_j of the j-th block coordinate
            scalar_r *= zj.pow(-static_cast<long>(m + 2 * p));
        }
        MultiPoly rhs = p_tilde.scaled(scalar_r);

        // Right exponent: (i/2)(-z_j^{-1}) |xi_j|^2 per block.
        RatMatrix er(ne, ne);
        for (std::size_t j = 0; j < k; ++j) {
            Scalar zj = Scalar::i() * a[j];
            Scalar coeff = half_i * (-zj.inverse());  // multiplies |xi_j|^2
            // e^{-1/2 xi^T E xi} convention: E entry is -2 * coeff.
            for (std::size_t idx : split.blocks[j]) er.at(idx, idx) = coeff * Scalar(-2);
        }

        if (el != er) {
            res.fail("sample " + std::to_string(s) + ": exponent forms differ, a = " + vec_str(a));
            continue;
        }
        if (lhs != rhs)
            res.fail("sample " + std::to_string(s) + ": polynomial parts differ, a = " + vec_str(a));
    }
    return res;
}

}  // namespace sbdo
