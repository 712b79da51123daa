#include "sbdo/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "sbdo/matrix.hpp"

namespace sbdo {

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t idx) {
    if (idx >= nvars) throw Error(ErrorKind::Arity, "variable index out of range");
    Exponents e(nvars, 0);
    e[idx] = 1;
    return monomial(nvars, std::move(e), Scalar(1));
}

MultiPoly MultiPoly::monomial(std::size_t nvars, Exponents e, const Scalar& c) {
    if (e.size() != nvars) throw Error(ErrorKind::Arity, "exponent vector length mismatch");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

Scalar MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::Arity, "exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw Error(ErrorKind::Arity, "nvars mismatch in add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw Error(ErrorKind::Arity, "nvars mismatch in sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::Arity, "nvars mismatch in mul");
    MultiPoly out(a.nvars_);
    MultiPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
    MultiPoly out(nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    MultiPoly acc = constant(nvars_, Scalar(1));
    for (std::uint32_t k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::partial(std::size_t var, std::uint32_t order) const {
    if (var >= nvars_) throw Error(ErrorKind::Arity, "partial: variable out of range");
    MultiPoly cur = *this;
    for (std::uint32_t k = 0; k < order; ++k) {
        MultiPoly next(nvars_);
        for (const auto& [e, c] : cur.terms_) {
            if (e[var] == 0) continue;
            Exponents ne = e;
            ne[var] -= 1;
            next.add_term(ne, c * Scalar(static_cast<long>(e[var])));
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw Error(ErrorKind::Arity, "subst: image count mismatch");
    std::size_t out_vars = nvars_ == 0 ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != out_vars) throw Error(ErrorKind::Arity, "subst: image ring mismatch");
    if (terms_.empty()) return MultiPoly(out_vars);

    // Cache image powers; exponents here stay small.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        std::uint32_t d = degree_in(i);
        powers[i].reserve(d + 1);
        powers[i].push_back(MultiPoly::constant(out_vars, Scalar(1)));
        for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    MultiPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::subst_linear(const RatMatrix& m) const {
    if (!m.is_square() || m.rows() != nvars_)
        throw Error(ErrorKind::Arity, "subst_linear: matrix size mismatch");
    return subst_affine(m, std::vector<Scalar>(nvars_, Scalar(0)));
}

MultiPoly MultiPoly::subst_affine(const RatMatrix& m, const std::vector<Scalar>& t) const {
    if (m.rows() != nvars_ || t.size() != nvars_)
        throw Error(ErrorKind::Arity, "subst_affine: size mismatch");
    std::size_t out_vars = m.cols();
    // Diagonal substitution without shift is a per-term rescale.
    if (m.rows() == m.cols()) {
        bool diagonal = true;
        for (const auto& x : t)
            if (!x.is_zero()) diagonal = false;
        for (std::size_t i = 0; i < nvars_ && diagonal; ++i)
            for (std::size_t j = 0; j < nvars_; ++j)
                if (i != j && !m.at(i, j).is_zero()) {
                    diagonal = false;
                    break;
                }
        if (diagonal) {
            MultiPoly out(nvars_);
            for (const auto& [e, c] : terms_) {
                Scalar f = c;
                for (std::size_t i = 0; i < nvars_; ++i)
                    if (e[i]) f *= m.at(i, i).pow(e[i]);
                out.add_term(e, f);
            }
            return out;
        }
    }
    std::vector<MultiPoly> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        MultiPoly im = MultiPoly::constant(out_vars, t[i]);
        for (std::size_t j = 0; j < out_vars; ++j) {
            if (!m.at(i, j).is_zero())
                im += MultiPoly::variable(out_vars, j).scaled(m.at(i, j));
        }
        images.push_back(std::move(im));
    }
    return subst(images);
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::Arity, "eval: point size mismatch");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::lift(std::size_t extra) const {
    MultiPoly out(nvars_ + extra);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne.resize(nvars_ + extra, 0);
        out.add_term(ne, c);
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            os << "*";
            if (i < names.size())
                os << names[i];
            else
                os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly poly_scale(const MultiPoly& a, const Scalar& s) { return a.scaled(s); }
MultiPoly poly_partial(const MultiPoly& p, std::size_t var, std::uint32_t order) {
    return p.partial(var, order);
}
MultiPoly poly_subst_linear(const MultiPoly& p, const RatMatrix& m) { return p.subst_linear(m); }

}  // namespace sbdo
