#include "sbdo/gaussian.hpp"

#include <algorithm>
#include <functional>

#include "sbdo/error.hpp"

namespace sbdo {

MultiPoly partial_gaussian_moment(const MultiPoly& p, const RatMatrix& a,
                                  const std::vector<std::size_t>& block) {
    const std::size_t n = p.nvars();
    for (std::size_t idx : block)
        if (idx >= n) throw Error(ErrorKind::Arity, "block index out of range");

    RatMatrix sub(block.size(), block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j) sub.at(i, j) = a.at(block[i], block[j]);
    if (!sub.is_symmetric() || !sub.is_real())
        throw Error(ErrorKind::NotPositiveDefinite, "quadratic form must be real symmetric");
    for (const auto& d : leading_principal_minors(sub))
        if (!(d.re() > 0))
            throw Error(ErrorKind::NotPositiveDefinite,
                        "leading principal minor is not positive");
    auto b = mat_inverse(sub);

    // Position of each ring variable inside the block, or npos.
    std::vector<std::size_t> pos(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < block.size(); ++i) pos[block[i]] = i;

    bool diagonal = true;
    for (std::size_t i = 0; i < block.size() && diagonal; ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
            if (i != j && !sub.at(i, j).is_zero()) {
                diagonal = false;
                break;
            }

    const Scalar minus_i = -Scalar::i();

    if (diagonal) {
        // The transform factorizes per variable: precompute the univariate
        // moment polynomials (-i d/du)^k e^{-b u^2/2} / e^{-b u^2/2} as dense
        // coefficient tables, then expand each monomial as their product.
        std::vector<std::uint32_t> maxdeg(block.size(), 0);
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < block.size(); ++i)
                maxdeg[i] = std::max(maxdeg[i], e[block[i]]);
        // herm[i][k][j] = coefficient of u^j.
        std::vector<std::vector<std::vector<Scalar>>> herm(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) {
            const Scalar beta = b->at(i, i);
            herm[i].push_back({Scalar(1)});
            for (std::uint32_t k = 0; k < maxdeg[i]; ++k) {
                const auto& cur = herm[i].back();
                std::vector<Scalar> next(cur.size() + 1, Scalar(0));
                for (std::size_t j = 0; j + 1 < cur.size() + 1; ++j) {
                    // d/du term
                    if (j + 1 < cur.size())
                        next[j] += minus_i * Scalar(static_cast<long>(j + 1)) * cur[j + 1];
                }
                for (std::size_t j = 0; j < cur.size(); ++j) {
                    // -(B u) term
                    next[j + 1] += minus_i * (-beta) * cur[j];
                }
                herm[i].push_back(std::move(next));
            }
        }
        MultiPoly out(n);
        MultiPoly::Exponents work(n, 0);
        for (const auto& term : p.terms()) {
            const MultiPoly::Exponents& e = term.first;
            work = e;
            for (std::size_t idx : block) work[idx] = 0;
            std::vector<std::size_t> active;
            for (std::size_t i = 0; i < block.size(); ++i)
                if (e[block[i]]) active.push_back(i);
            // Depth-first product over the involved univariate tables.
            std::function<void(std::size_t, const Scalar&)> expand =
                [&](std::size_t level, const Scalar& coeff) {
                    if (level == active.size()) {
                        out.add_term(work, coeff);
                        return;
                    }
                    std::size_t i = active[level];
                    const auto& table = herm[i][e[block[i]]];
                    for (std::size_t j = 0; j < table.size(); ++j) {
                        if (table[j].is_zero()) continue;
                        work[block[i]] = static_cast<std::uint32_t>(j);
                        expand(level + 1, coeff * table[j]);
                    }
                    work[block[i]] = 0;
                };
            expand(0, term.second);
        }
        return out;
    }

    // Linear forms L_i = sum_l B_il u_{block_l}, the log-derivatives of the
    // transformed Gaussian.
    std::vector<MultiPoly> lin(block.size(), MultiPoly(n));
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t l = 0; l < block.size(); ++l)
            if (!b->at(i, l).is_zero())
                lin[i] += MultiPoly::variable(n, block[l]).scaled(b->at(i, l));

    MultiPoly out(n);
    for (const auto& [e, c] : p.terms()) {
        // Non-block part of the monomial stays as a passive factor.
        MultiPoly::Exponents rest = e;
        for (std::size_t idx : block) rest[idx] = 0;
        MultiPoly w = MultiPoly::monomial(n, rest, c);
        // Each integrated factor xi_i becomes the operator -i d/d eta_i
        // acting on e^{-1/2 eta^T B eta}: w -> -i (dw - w L_i).
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::uint32_t k = 0; k < e[block[i]]; ++k) {
                w = (w.partial(block[i]) - w * lin[i]).scaled(minus_i);
            }
        }
        out += w;
    }
    return out;
}

GaussianIntegral gaussian_fourier(const RatMatrix& a, const MultiPoly& p) {
    if (!a.is_square() || a.rows() != p.nvars())
        throw Error(ErrorKind::Arity, "gaussian_fourier: matrix size != variable count");
    std::vector<std::size_t> all(p.nvars());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    GaussianIntegral out;
    out.a = a;
    out.value = partial_gaussian_moment(p, a, all);
    out.a_inv = *mat_inverse(a);
    return out;
}

}  // namespace sbdo
