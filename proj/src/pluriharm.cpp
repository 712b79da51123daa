#include "sbdo/pluriharm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace sbdo {

SymbolSpace rank2_symbol_basis(std::size_t n, std::size_t p1, std::size_t p2) {
    AlgebraDescriptor alg = AlgebraDescriptor::spin(n, SpinFrame::FBasis);
    SymbolSpace space;
    space.algebra = alg;
    space.p1 = p1;
    space.p2 = p2;
    MultiPoly r2(n);  // |y'|^2
    for (std::size_t j = 2; j < n; ++j) {
        MultiPoly::Exponents e(n, 0);
        e[j] = 2;
        r2.add_term(e, Scalar(1));
    }
    const std::size_t jmax = std::min(p1, p2);
    for (std::size_t j = 0; j <= jmax; ++j) {
        MultiPoly::Exponents e(n, 0);
        e[0] = static_cast<std::uint32_t>(p1 - j);
        e[1] = static_cast<std::uint32_t>(p2 - j);
        MultiPoly mono = MultiPoly::monomial(n, e, Scalar(1));
        space.basis.push_back(mono * r2.pow(static_cast<std::uint32_t>(j)));
    }
    return space;
}

MultiPoly delta_apply(DeltaOp which, std::size_t n, std::size_t n1, const MultiPoly& q) {
    if (q.nvars() != n) throw Error(ErrorKind::Arity, "delta_apply: symbol has wrong nvars");
    const std::size_t a = which == DeltaOp::Delta1 ? 0 : 1;
    const std::size_t b = 1 - a;
    MultiPoly out(n);
    // 2 N1 d_a
    out += q.partial(a).scaled(Scalar(static_cast<long>(2 * n1)));
    // 4 y_a d_a^2
    out += (MultiPoly::variable(n, a) * q.partial(a, 2)).scaled(Scalar(4));
    // 4 sum_{j>=3} y_j d_a d_j
    for (std::size_t j = 2; j < n; ++j)
        out += (MultiPoly::variable(n, j) * q.partial(a).partial(j)).scaled(Scalar(4));
    // 2 y_b sum_{j>=3} d_j^2
    MultiPoly lap(n);
    for (std::size_t j = 2; j < n; ++j) lap += q.partial(j, 2);
    out += (MultiPoly::variable(n, b) * lap).scaled(Scalar(2));
    return out;
}

namespace {

// Shared recurrence walker: num(j) * a_{j+1} + (p-j)(j+m+p-1) * a_j = 0.
std::vector<Scalar> run_recurrence(std::size_t n, std::size_t m, std::size_t p,
                                   const Scalar& lead_factor, const Scalar& bracket_shift) {
    std::vector<Scalar> a;
    a.push_back(Scalar(1));
    for (std::size_t j = 0; j < p; ++j) {
        Scalar jj(static_cast<long>(j));
        Scalar num = lead_factor * (jj + Scalar(1)) * (jj + bracket_shift);
        Scalar rhs = Scalar(static_cast<long>(p - j)) *
                     (jj + Scalar(static_cast<long>(m + p)) - Scalar(1));
        a.push_back(-(rhs * a.back()) / num);
    }
    (void)n;
    return a;
}

Scalar rising(const Scalar& x, std::size_t k) {
    Scalar acc(1);
    for (std::size_t i = 0; i < k; ++i) acc *= x + Scalar(static_cast<long>(i));
    return acc;
}

Scalar binom(std::size_t p, std::size_t j) {
    Scalar acc(1);
    for (std::size_t i = 0; i < j; ++i)
        acc *= Scalar(static_cast<long>(p - i)) / Scalar(static_cast<long>(i + 1));
    return acc;
}

}  // namespace

CoeffVector paper_coeffs(std::size_t n, std::size_t m, std::size_t p) {
    CoeffVector cv;
    cv.rule = CoeffRule::Paper;
    cv.provenance = CoeffProvenance::Recurrence;
    cv.n = n;
    cv.m = m;
    cv.p = p;
    // (j+1)(j+(n-1)/2) a_{j+1} + (p-j)(j+m+p-1) a_j = 0.
    cv.a = run_recurrence(n, m, p, Scalar(1), Scalar::ratio(static_cast<long>(n) - 1, 2));
    // Closed form a_j = (-1)^j binom(p,j) (m+p-1)^(j) / ((n-1)/2)^(j).
    for (std::size_t j = 0; j <= p; ++j) {
        Scalar closed = binom(p, j) * rising(Scalar(static_cast<long>(m + p - 1)), j) /
                        rising(Scalar::ratio(static_cast<long>(n) - 1, 2), j);
        if (j % 2 == 1) closed = -closed;
        if (closed != cv.a[j])
            throw Error(ErrorKind::InvariantViolation,
                        "paper closed form disagrees with paper recurrence at j=" +
                            std::to_string(j));
    }
    return cv;
}

CoeffVector derived_coeffs(std::size_t n, std::size_t m, std::size_t p) {
    CoeffVector cv;
    cv.rule = CoeffRule::Derived;
    cv.provenance = CoeffProvenance::Recurrence;
    cv.n = n;
    cv.m = m;
    cv.p = p;
    // 2(j+1)(j+(n-2)/2) a_{j+1} + (p-j)(j+m+p-1) a_j = 0.
    cv.a = run_recurrence(n, m, p, Scalar(2), Scalar::ratio(static_cast<long>(n) - 2, 2));
    // Closed form a_j = (-1/2)^j binom(p,j) (m+p-1)^(j) / ((n-2)/2)^(j).
    for (std::size_t j = 0; j <= p; ++j) {
        Scalar closed = binom(p, j) * rising(Scalar(static_cast<long>(m + p - 1)), j) /
                        rising(Scalar::ratio(static_cast<long>(n) - 2, 2), j) *
                        Scalar::ratio(-1, 2).pow(static_cast<long>(j));
        if (closed != cv.a[j])
            throw Error(ErrorKind::InvariantViolation,
                        "derived closed form disagrees with derived recurrence at j=" +
                            std::to_string(j));
    }
    return cv;
}

MultiPoly symbol_from_coeffs(const SymbolSpace& space, const std::vector<Scalar>& a) {
    if (a.size() != space.basis.size())
        throw Error(ErrorKind::Arity, "coefficient count != basis size");
    MultiPoly q(space.algebra.dim());
    for (std::size_t j = 0; j < a.size(); ++j) q += space.basis[j].scaled(a[j]);
    return q;
}

MultiPoly compose_q_Q(const Representation& rep, const MultiPoly& q) {
    if (rep.algebra.kind() == AlgebraDescriptor::Kind::Spin) {
        const std::size_t n = rep.algebra.spin_n();
        MultiPoly q_scaled = fsym_to_scaled(q, n);
        return q_scaled.subst(qmap_polys(rep, SpinFrame::FBasis));
    }
    return q.subst(qmap_polys(rep, SpinFrame::Original));
}

std::vector<MultiPoly> compose_space_q_Q(const Representation& rep, const SymbolSpace& space) {
    if (rep.algebra.kind() != AlgebraDescriptor::Kind::Spin)
        throw Error(ErrorKind::Algebra, "compose_space_q_Q expects a spin representation");
    const std::size_t n = rep.algebra.spin_n();
    std::vector<MultiPoly> qp = qmap_polys(rep, SpinFrame::FBasis);
    // |y'|^2 o Q = sum_j (sqrt(2) w_j o Q)^2 = 2 sum_j (w_j o Q)^2.
    MultiPoly rimg(rep.dimE);
    for (std::size_t j = 2; j < n; ++j) rimg += (qp[j] * qp[j]).scaled(Scalar(2));
    const std::size_t jmax = std::min(space.p1, space.p2);
    auto powers = [&](const MultiPoly& base, std::size_t top) {
        std::vector<MultiPoly> pw{MultiPoly::constant(rep.dimE, Scalar(1))};
        for (std::size_t k = 1; k <= top; ++k) pw.push_back(pw.back() * base);
        return pw;
    };
    std::vector<MultiPoly> p1pw = powers(qp[0], space.p1);
    std::vector<MultiPoly> p2pw = powers(qp[1], space.p2);
    std::vector<MultiPoly> rpw = powers(rimg, jmax);
    std::vector<MultiPoly> out;
    out.reserve(jmax + 1);
    for (std::size_t j = 0; j <= jmax; ++j)
        out.push_back(p1pw[space.p1 - j] * p2pw[space.p2 - j] * rpw[j]);
    return out;
}

MultiPoly block_laplacian(const MultiPoly& p, const std::vector<std::size_t>& block) {
    MultiPoly out(p.nvars());
    for (std::size_t k : block) out += p.partial(k, 2);
    return out;
}

bool is_c_pluriharmonic(const Representation& rep, const ModuleSplit& split, const MultiPoly& q) {
    if (!split.aligned)
        throw Error(ErrorKind::InvariantViolation,
                    "is_c_pluriharmonic requires a coordinate-aligned module split");
    MultiPoly p = compose_q_Q(rep, q);
    for (const auto& block : split.blocks)
        if (!block_laplacian(p, block).is_zero()) return false;
    return true;
}

std::vector<CoeffVector> pluriharmonic_solve(const Representation& rep, const CSOI& csoi,
                                             const SymbolSpace& space,
                                             const std::vector<MultiPoly>* composed_in) {
    if (!csoi.algebra.same_algebra(rep.algebra))
        throw Error(ErrorKind::Algebra, "pluriharmonic_solve: CSOI algebra mismatch");
    if (!space.algebra.same_algebra(rep.algebra))
        throw Error(ErrorKind::Algebra, "pluriharmonic_solve: symbol space algebra mismatch");
    ModuleSplit split = split_module(rep, csoi);
    if (!split.aligned)
        throw Error(ErrorKind::InvariantViolation,
                    "pluriharmonic_solve requires a coordinate-aligned module split");

    const std::size_t k = csoi.size();
    const std::size_t ne = rep.dimE;
    // Combined ring: k symbolic J(c)-coordinates followed by the xi variables.
    std::vector<std::size_t> var_block(ne, 0);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t idx : split.blocks[j]) var_block[idx] = j;

    // Row system: one row per monomial of Delta_E((q_b o Q) o Phi(x)),
    // columns indexed by the unknown basis coefficients.
    std::map<MultiPoly::Exponents, std::vector<Scalar>> rows;
    const std::size_t cols = space.basis.size();
    std::vector<MultiPoly> composed_local;
    if (!composed_in) {
        composed_local = compose_space_q_Q(rep, space);
        composed_in = &composed_local;
    }
    if (composed_in->size() != cols)
        throw Error(ErrorKind::Arity, "composed basis size mismatch");
    for (std::size_t b = 0; b < cols; ++b) {
        const MultiPoly& pb = (*composed_in)[b];
        // Lift to the combined ring and substitute xi_i -> a_{block(i)} xi_i.
        MultiPoly lifted(k + ne);
        for (const auto& [e, c] : pb.terms()) {
            MultiPoly::Exponents ne_exp(k + ne, 0);
            for (std::size_t i = 0; i < ne; ++i) {
                ne_exp[k + i] = e[i];
                ne_exp[var_block[i]] += e[i];
            }
            lifted.add_term(ne_exp, c);
        }
        MultiPoly delta(k + ne);
        for (std::size_t i = 0; i < ne; ++i) delta += lifted.partial(k + i, 2);
        for (const auto& [e, c] : delta.terms()) {
            auto it = rows.find(e);
            if (it == rows.end())
                it = rows.emplace(e, std::vector<Scalar>(cols, Scalar(0))).first;
            it->second[b] += c;
        }
    }

    RowReducer reducer(cols);
    for (auto& [e, row] : rows) reducer.add_row(std::move(row));
    auto basis = reducer.nullspace();

    std::vector<CoeffVector> out;
    for (auto& v : basis) {
        CoeffVector cv;
        cv.rule = CoeffRule::Derived;
        cv.provenance = CoeffProvenance::Nullspace;
        cv.n = space.algebra.spin_n();
        cv.p = std::min(space.p1, space.p2);
        if (!split.dims.empty()) cv.m = split.dims[0] / 2;
        if (!v[0].is_zero()) {
            Scalar inv = v[0].inverse();
            for (auto& x : v) x *= inv;
        }
        cv.a = std::move(v);
        out.push_back(std::move(cv));
    }
    return out;
}

RatMatrix rational_rotation(std::size_t d, Rng& rng) {
    // Compose Givens rotations with Pythagorean-triple cosines; every factor
    // is rational orthogonal with determinant 1.
    static const std::pair<long, long> triples[] = {{3, 4}, {5, 12}, {8, 15}, {20, 21}, {7, 24}};
    RatMatrix rot = RatMatrix::identity(d);
    if (d < 2) return rot;
    const std::size_t layers = d == 2 ? 1 : d;
    for (std::size_t s = 0; s < layers; ++s) {
        std::size_t i = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(d) - 1));
        std::size_t j = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(d) - 2));
        if (j >= i) ++j;
        auto [a, b] = triples[rng.int_in(0, 4)];
        long h = 0;
        // c^2 + s^2 = 1 with c = a/h, s = b/h.
        for (long cand = 1;; ++cand)
            if (cand * cand == a * a + b * b) {
                h = cand;
                break;
            }
        RatMatrix g = RatMatrix::identity(d);
        g.at(i, i) = Scalar::ratio(a, h);
        g.at(j, j) = Scalar::ratio(a, h);
        g.at(i, j) = Scalar::ratio(-b, h);
        g.at(j, i) = Scalar::ratio(b, h);
        rot = rot * g;
    }
    return rot;
}

bool chom_check(const MultiPoly& q, const CSOI& csoi, std::size_t p1, std::size_t p2,
                Rng& rng, std::size_t rotation_samples) {
    if (csoi.algebra.kind() != AlgebraDescriptor::Kind::Spin || csoi.size() != 2)
        throw Error(ErrorKind::Unsupported, "chom_check handles the rank-2 spin CSOI");
    const std::size_t n = csoi.algebra.spin_n();
    if (q.nvars() != n) throw Error(ErrorKind::Arity, "chom_check: symbol has wrong nvars");

    // P(a1 c1 + a2 c2) acts on the f-coordinates as diag(a1^2, a2^2, a1 a2, ...);
    // work in the ring (a1, a2, y1..yn) and compare q(l y) with
    // a1^{2 p1} a2^{2 p2} q(y) as an exact polynomial identity in all variables.
    MultiPoly lhs(2 + n), rhs(2 + n);
    for (const auto& [e, c] : q.terms()) {
        std::uint32_t yprime = 0;
        for (std::size_t j = 2; j < n; ++j) yprime += e[j];
        MultiPoly::Exponents le(2 + n, 0);
        le[0] = 2 * e[0] + yprime;
        le[1] = 2 * e[1] + yprime;
        for (std::size_t j = 0; j < n; ++j) le[2 + j] = e[j];
        lhs.add_term(le, c);
        MultiPoly::Exponents re(2 + n, 0);
        re[0] = static_cast<std::uint32_t>(2 * p1);
        re[1] = static_cast<std::uint32_t>(2 * p2);
        for (std::size_t j = 0; j < n; ++j) re[2 + j] = e[j];
        rhs.add_term(re, c);
    }
    if (lhs != rhs) return false;

    // M(c)-invariance: q must be fixed by SO(n-2) on the y' block.
    for (std::size_t s = 0; s < rotation_samples; ++s) {
        RatMatrix r = rational_rotation(n - 2, rng);
        RatMatrix full = RatMatrix::identity(n);
        for (std::size_t i = 0; i < n - 2; ++i)
            for (std::size_t j = 0; j < n - 2; ++j) full.at(2 + i, 2 + j) = r.at(i, j);
        if (q.subst_linear(full) != q) return false;
    }
    return true;
}

std::string CoeffVector::to_json() const {
    nlohmann::ordered_json j;
    j["rule"] = rule == CoeffRule::Paper ? "paper" : "derived";
    switch (provenance) {
        case CoeffProvenance::ClosedForm: j["provenance"] = "closed_form"; break;
        case CoeffProvenance::Recurrence: j["provenance"] = "recurrence"; break;
        case CoeffProvenance::Nullspace: j["provenance"] = "nullspace"; break;
    }
    j["n"] = n;
    j["m"] = m;
    j["p"] = p;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : a) arr.push_back(x.to_string());
    j["a"] = arr;
    return j.dump();
}

}  // namespace sbdo
