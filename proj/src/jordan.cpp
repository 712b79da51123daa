#include "sbdo/jordan.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <utility>

namespace sbdo {

using json = nlohmann::ordered_json;

AlgebraDescriptor AlgebraDescriptor::spin(std::size_t n, SpinFrame frame) {
    if (n < 4)
        throw Error(ErrorKind::Unsupported,
                    "spin factor requires n >= 4 (got n=" + std::to_string(n) + ")");
    AlgebraDescriptor a;
    a.kind_ = Kind::Spin;
    a.n_ = n;
    a.frame_ = frame;
    return a;
}

AlgebraDescriptor AlgebraDescriptor::symm(std::size_t r) {
    if (r < 1) throw Error(ErrorKind::Unsupported, "Symm(r) requires r >= 1");
    AlgebraDescriptor a;
    a.kind_ = Kind::Symm;
    a.r_ = r;
    return a;
}

AlgebraDescriptor AlgebraDescriptor::product(std::vector<AlgebraDescriptor> factors) {
    if (factors.empty()) throw Error(ErrorKind::Unsupported, "empty product algebra");
    AlgebraDescriptor a;
    a.kind_ = Kind::Product;
    a.factors_ = std::move(factors);
    return a;
}

std::size_t AlgebraDescriptor::dim() const {
    switch (kind_) {
        case Kind::Spin: return n_;
        case Kind::Symm: return r_ * (r_ + 1) / 2;
        case Kind::Product: {
            std::size_t d = 0;
            for (const auto& f : factors_) d += f.dim();
            return d;
        }
    }
    return 0;
}

std::size_t AlgebraDescriptor::rank() const {
    switch (kind_) {
        case Kind::Spin: return 2;
        case Kind::Symm: return r_;
        case Kind::Product: {
            std::size_t r = 0;
            for (const auto& f : factors_) r += f.rank();
            return r;
        }
    }
    return 0;
}

RatMatrix AlgebraDescriptor::gram() const {
    switch (kind_) {
        case Kind::Spin: {
            std::vector<Scalar> d(n_, Scalar(2));
            if (frame_ == SpinFrame::FBasis) {
                d[0] = Scalar(1);
                d[1] = Scalar(1);
            }
            return RatMatrix::diagonal(d);
        }
        case Kind::Symm: {
            // Basis: E_ii (norm^2 = 1), then E_ij + E_ji for i<j (norm^2 = 2),
            // under (x,y) = tr(xy).
            std::vector<Scalar> d(dim(), Scalar(2));
            for (std::size_t i = 0; i < r_; ++i) d[i] = Scalar(1);
            return RatMatrix::diagonal(d);
        }
        case Kind::Product: {
            RatMatrix g(dim(), dim());
            std::size_t off = 0;
            for (const auto& f : factors_) {
                RatMatrix gf = f.gram();
                for (std::size_t i = 0; i < gf.rows(); ++i)
                    for (std::size_t j = 0; j < gf.cols(); ++j)
                        g.at(off + i, off + j) = gf.at(i, j);
                off += f.dim();
            }
            return g;
        }
    }
    return RatMatrix(0, 0);
}

AlgebraDescriptor AlgebraDescriptor::with_frame(SpinFrame f) const {
    AlgebraDescriptor a = *this;
    if (kind_ == Kind::Spin) a.frame_ = f;
    return a;
}

bool AlgebraDescriptor::same_algebra(const AlgebraDescriptor& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Spin: return n_ == o.n_;
        case Kind::Symm: return r_ == o.r_;
        case Kind::Product: {
            if (factors_.size() != o.factors_.size()) return false;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i].same_algebra(o.factors_[i])) return false;
            return true;
        }
    }
    return false;
}

bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    return a.same_algebra(b) &&
           (a.kind_ != AlgebraDescriptor::Kind::Spin || a.frame_ == b.frame_);
}

namespace {

json descriptor_json(const AlgebraDescriptor& a) {
    json j;
    switch (a.kind()) {
        case AlgebraDescriptor::Kind::Spin:
            j["kind"] = "spin";
            j["n"] = a.spin_n();
            j["frame"] = a.frame() == SpinFrame::FBasis ? "f" : "original";
            break;
        case AlgebraDescriptor::Kind::Symm:
            j["kind"] = "symm";
            j["r"] = a.symm_r();
            break;
        case AlgebraDescriptor::Kind::Product: {
            j["kind"] = "product";
            json fs = json::array();
            for (const auto& f : a.factors()) fs.push_back(descriptor_json(f));
            j["factors"] = fs;
            break;
        }
    }
    return j;
}

AlgebraDescriptor descriptor_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "spin") {
        SpinFrame f = SpinFrame::Original;
        if (j.contains("frame") && j["frame"].get<std::string>() == "f") f = SpinFrame::FBasis;
        return AlgebraDescriptor::spin(j.at("n").get<std::size_t>(), f);
    }
    if (kind == "symm") return AlgebraDescriptor::symm(j.at("r").get<std::size_t>());
    if (kind == "product") {
        std::vector<AlgebraDescriptor> fs;
        for (const auto& f : j.at("factors")) fs.push_back(descriptor_from_json(f));
        return AlgebraDescriptor::product(std::move(fs));
    }
    throw Error(ErrorKind::Parse, "unknown algebra kind '" + kind + "'");
}

}  // namespace

std::string AlgebraDescriptor::to_json() const { return descriptor_json(*this).dump(); }

AlgebraDescriptor AlgebraDescriptor::from_json(const std::string& s) {
    return descriptor_from_json(json::parse(s));
}

JordanElement::JordanElement(AlgebraDescriptor alg, std::vector<Scalar> c)
    : algebra(std::move(alg)), coords(std::move(c)) {
    if (coords.size() != algebra.dim())
        throw Error(ErrorKind::Arity, "coordinate vector length != algebra dimension");
}

bool JordanElement::is_real() const {
    for (const auto& c : coords)
        if (!c.is_real()) return false;
    return true;
}

JordanElement unit_element(const AlgebraDescriptor& alg) {
    std::vector<Scalar> c(alg.dim(), Scalar(0));
    switch (alg.kind()) {
        case AlgebraDescriptor::Kind::Spin:
            if (alg.frame() == SpinFrame::Original) {
                c[0] = Scalar(1);
            } else {
                c[0] = Scalar(1);
                c[1] = Scalar(1);
            }
            break;
        case AlgebraDescriptor::Kind::Symm:
            for (std::size_t i = 0; i < alg.symm_r(); ++i) c[i] = Scalar(1);
            break;
        case AlgebraDescriptor::Kind::Product: {
            std::size_t off = 0;
            for (const auto& f : alg.factors()) {
                JordanElement u = unit_element(f);
                for (std::size_t i = 0; i < f.dim(); ++i) c[off + i] = u.coords[i];
                off += f.dim();
            }
            break;
        }
    }
    return JordanElement(alg, std::move(c));
}

JordanElement zero_element(const AlgebraDescriptor& alg) {
    return JordanElement(alg, std::vector<Scalar>(alg.dim(), Scalar(0)));
}

JordanElement basis_element(const AlgebraDescriptor& alg, std::size_t idx) {
    std::vector<Scalar> c(alg.dim(), Scalar(0));
    if (idx >= alg.dim()) throw Error(ErrorKind::Arity, "basis index out of range");
    c[idx] = Scalar(1);
    return JordanElement(alg, std::move(c));
}

JordanElement elem_add(const JordanElement& a, const JordanElement& b) {
    if (!a.algebra.same_algebra(b.algebra)) throw Error(ErrorKind::Algebra, "algebra mismatch");
    JordanElement bb = to_frame(b, a.algebra.frame());
    std::vector<Scalar> c(a.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += bb.coords[i];
    return JordanElement(a.algebra, std::move(c));
}

JordanElement elem_sub(const JordanElement& a, const JordanElement& b) {
    return elem_add(a, elem_scale(b, Scalar(-1)));
}

JordanElement elem_scale(const JordanElement& a, const Scalar& s) {
    std::vector<Scalar> c(a.coords);
    for (auto& x : c) x *= s;
    return JordanElement(a.algebra, std::move(c));
}

RatMatrix spin_orig_to_f(std::size_t n) {
    // y1 = u0 + u1, y2 = u0 - u1, w_j = u_{j-1}.
    RatMatrix t(n, n);
    t.at(0, 0) = Scalar(1);
    t.at(0, 1) = Scalar(1);
    t.at(1, 0) = Scalar(1);
    t.at(1, 1) = Scalar(-1);
    for (std::size_t j = 2; j < n; ++j) t.at(j, j) = Scalar(1);
    return t;
}

RatMatrix spin_f_to_orig(std::size_t n) {
    RatMatrix t(n, n);
    t.at(0, 0) = Scalar::ratio(1, 2);
    t.at(0, 1) = Scalar::ratio(1, 2);
    t.at(1, 0) = Scalar::ratio(1, 2);
    t.at(1, 1) = Scalar::ratio(-1, 2);
    for (std::size_t j = 2; j < n; ++j) t.at(j, j) = Scalar(1);
    return t;
}

JordanElement to_frame(const JordanElement& x, SpinFrame frame) {
    if (x.algebra.kind() != AlgebraDescriptor::Kind::Spin || x.algebra.frame() == frame) return x;
    const std::size_t n = x.algebra.spin_n();
    RatMatrix t = frame == SpinFrame::FBasis ? spin_orig_to_f(n) : spin_f_to_orig(n);
    return JordanElement(x.algebra.with_frame(frame), t.mul_vec(x.coords));
}

namespace {

// ---- Symm(r) coordinate packing -------------------------------------------

std::size_t symm_coord_index(std::size_t r, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i == j) return i;
    // Off-diagonal block, pairs (i,j) with i<j in lexicographic order.
    std::size_t idx = r;
    for (std::size_t a = 0; a < i; ++a) idx += r - 1 - a;
    return idx + (j - i - 1);
}

RatMatrix symm_unpack(const AlgebraDescriptor& alg, const std::vector<Scalar>& c) {
    const std::size_t r = alg.symm_r();
    RatMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) m.at(i, i) = c[i];
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const Scalar& v = c[symm_coord_index(r, i, j)];
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

std::vector<Scalar> symm_pack(const AlgebraDescriptor& alg, const RatMatrix& m) {
    const std::size_t r = alg.symm_r();
    std::vector<Scalar> c(alg.dim());
    for (std::size_t i = 0; i < r; ++i) c[i] = m.at(i, i);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) c[symm_coord_index(r, i, j)] = m.at(i, j);
    return c;
}

std::vector<Scalar> spin_mul_original(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    const std::size_t n = a.size();
    std::vector<Scalar> out(n);
    Scalar dot(0);
    for (std::size_t i = 1; i < n; ++i) dot += a[i] * b[i];
    out[0] = a[0] * b[0] + dot;
    for (std::size_t i = 1; i < n; ++i) out[i] = a[0] * b[i] + b[0] * a[i];
    return out;
}

}  // namespace

JordanElement jmul(const JordanElement& x, const JordanElement& y) {
    if (!x.algebra.same_algebra(y.algebra))
        throw Error(ErrorKind::Algebra, "jmul: algebra mismatch");
    const auto& alg = x.algebra;
    switch (alg.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            JordanElement xo = to_frame(x, SpinFrame::Original);
            JordanElement yo = to_frame(y, SpinFrame::Original);
            JordanElement prod(xo.algebra, spin_mul_original(xo.coords, yo.coords));
            return to_frame(prod, alg.frame());
        }
        case AlgebraDescriptor::Kind::Symm: {
            RatMatrix a = symm_unpack(alg, x.coords);
            RatMatrix b = symm_unpack(alg, to_frame(y, alg.frame()).coords);
            RatMatrix p = (a * b + b * a).scaled(Scalar::ratio(1, 2));
            return JordanElement(alg, symm_pack(alg, p));
        }
        case AlgebraDescriptor::Kind::Product: {
            std::vector<Scalar> out(alg.dim());
            std::size_t off = 0;
            for (const auto& f : alg.factors()) {
                JordanElement xf(f, std::vector<Scalar>(x.coords.begin() + off,
                                                        x.coords.begin() + off + f.dim()));
                JordanElement yf(f, std::vector<Scalar>(y.coords.begin() + off,
                                                        y.coords.begin() + off + f.dim()));
                JordanElement pf = jmul(xf, yf);
                for (std::size_t i = 0; i < f.dim(); ++i) out[off + i] = pf.coords[i];
                off += f.dim();
            }
            return JordanElement(alg, std::move(out));
        }
    }
    throw Error(ErrorKind::Algebra, "jmul: unhandled kind");
}

RatMatrix lmat(const JordanElement& x) {
    const std::size_t d = x.algebra.dim();
    RatMatrix l(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        JordanElement col = jmul(x, basis_element(x.algebra, j));
        for (std::size_t i = 0; i < d; ++i) l.at(i, j) = col.coords[i];
    }
    return l;
}

RatMatrix pmap(const JordanElement& x) {
    RatMatrix l = lmat(x);
    RatMatrix l2 = lmat(jmul(x, x));
    return (l * l).scaled(Scalar(2)) - l2;
}

Scalar jtrace(const JordanElement& x) {
    switch (x.algebra.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            JordanElement xo = to_frame(x, SpinFrame::Original);
            return Scalar(2) * xo.coords[0];
        }
        case AlgebraDescriptor::Kind::Symm: {
            Scalar t(0);
            for (std::size_t i = 0; i < x.algebra.symm_r(); ++i) t += x.coords[i];
            return t;
        }
        case AlgebraDescriptor::Kind::Product: {
            Scalar t(0);
            std::size_t off = 0;
            for (const auto& f : x.algebra.factors()) {
                JordanElement xf(f, std::vector<Scalar>(x.coords.begin() + off,
                                                        x.coords.begin() + off + f.dim()));
                t += jtrace(xf);
                off += f.dim();
            }
            return t;
        }
    }
    throw Error(ErrorKind::Algebra, "jtrace: unhandled kind");
}

Scalar jdet(const JordanElement& x) {
    switch (x.algebra.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            JordanElement xo = to_frame(x, SpinFrame::Original);
            Scalar d = xo.coords[0] * xo.coords[0];
            for (std::size_t i = 1; i < xo.coords.size(); ++i) d -= xo.coords[i] * xo.coords[i];
            return d;
        }
        case AlgebraDescriptor::Kind::Symm:
            return mat_det(symm_unpack(x.algebra, x.coords));
        case AlgebraDescriptor::Kind::Product: {
            Scalar d(1);
            std::size_t off = 0;
            for (const auto& f : x.algebra.factors()) {
                JordanElement xf(f, std::vector<Scalar>(x.coords.begin() + off,
                                                        x.coords.begin() + off + f.dim()));
                d *= jdet(xf);
                off += f.dim();
            }
            return d;
        }
    }
    throw Error(ErrorKind::Algebra, "jdet: unhandled kind");
}

DetInv jdet_inv(const JordanElement& x) {
    switch (x.algebra.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            JordanElement xo = to_frame(x, SpinFrame::Original);
            Scalar d = jdet(xo);
            if (d.is_zero()) return {d, std::nullopt};
            std::vector<Scalar> inv(xo.coords.size());
            inv[0] = xo.coords[0] / d;
            for (std::size_t i = 1; i < inv.size(); ++i) inv[i] = -xo.coords[i] / d;
            JordanElement io(xo.algebra, std::move(inv));
            return {d, to_frame(io, x.algebra.frame())};
        }
        case AlgebraDescriptor::Kind::Symm: {
            RatMatrix m = symm_unpack(x.algebra, x.coords);
            Scalar d = mat_det(m);
            if (d.is_zero()) return {d, std::nullopt};
            auto inv = mat_inverse(m);
            return {d, JordanElement(x.algebra, symm_pack(x.algebra, *inv))};
        }
        case AlgebraDescriptor::Kind::Product: {
            Scalar d(1);
            std::vector<Scalar> inv(x.algebra.dim());
            bool ok = true;
            std::size_t off = 0;
            for (const auto& f : x.algebra.factors()) {
                JordanElement xf(f, std::vector<Scalar>(x.coords.begin() + off,
                                                        x.coords.begin() + off + f.dim()));
                DetInv di = jdet_inv(xf);
                d *= di.det;
                if (!di.inverse) {
                    ok = false;
                } else if (ok) {
                    for (std::size_t i = 0; i < f.dim(); ++i)
                        inv[off + i] = di.inverse->coords[i];
                }
                off += f.dim();
            }
            if (!ok) return {d, std::nullopt};
            return {d, JordanElement(x.algebra, std::move(inv))};
        }
    }
    throw Error(ErrorKind::Algebra, "jdet_inv: unhandled kind");
}

Scalar inner(const JordanElement& x, const JordanElement& y) {
    if (!x.algebra.same_algebra(y.algebra))
        throw Error(ErrorKind::Algebra, "inner: algebra mismatch");
    JordanElement yy = to_frame(y, x.algebra.frame());
    RatMatrix g = x.algebra.gram();
    std::vector<Scalar> gy = g.mul_vec(yy.coords);
    Scalar acc(0);
    for (std::size_t i = 0; i < x.coords.size(); ++i) acc += x.coords[i] * gy[i];
    return acc;
}

PeirceSplit peirce_split(const JordanElement& c) {
    JordanElement c2 = jmul(c, c);
    if (c2 != c) throw Error(ErrorKind::NotIdempotent, "peirce_split: c*c != c");
    const std::size_t d = c.algebra.dim();
    RatMatrix l = lmat(c);
    RatMatrix l2 = l * l;
    RatMatrix id = RatMatrix::identity(d);
    PeirceSplit ps;
    ps.idempotent = c;
    ps.proj1 = l2.scaled(Scalar(2)) - l;
    ps.proj0 = l2.scaled(Scalar(2)) - l.scaled(Scalar(3)) + id;
    ps.proj_half = l2.scaled(Scalar(-4)) + l.scaled(Scalar(4));
    // range(P) = null(I - P) for a projector.
    ps.basis1 = mat_nullspace(id - ps.proj1);
    ps.basis_half = mat_nullspace(id - ps.proj_half);
    ps.basis0 = mat_nullspace(id - ps.proj0);
    return ps;
}

std::size_t idempotent_rank(const JordanElement& c) {
    switch (c.algebra.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            // Spectral data of c = l+ f+ + l- f-: rank from det and trace only,
            // both rational (|x| itself may be irrational).
            bool zero = true;
            for (const auto& v : c.coords) zero = zero && v.is_zero();
            if (zero) return 0;
            if (c == unit_element(c.algebra)) return 2;
            if (jdet(c).is_zero() && jtrace(c) == Scalar(1)) return 1;
            throw Error(ErrorKind::NotIdempotent, "spin element is not an idempotent");
        }
        case AlgebraDescriptor::Kind::Symm:
            return mat_rank(symm_unpack(c.algebra, c.coords));
        case AlgebraDescriptor::Kind::Product: {
            std::size_t rk = 0, off = 0;
            for (const auto& f : c.algebra.factors()) {
                JordanElement cf(f, std::vector<Scalar>(c.coords.begin() + off,
                                                        c.coords.begin() + off + f.dim()));
                bool zero = true;
                for (const auto& v : cf.coords) zero = zero && v.is_zero();
                if (!zero) rk += idempotent_rank(cf);
                off += f.dim();
            }
            return rk;
        }
    }
    throw Error(ErrorKind::Algebra, "idempotent_rank: unhandled kind");
}

CSOI validate_csoi(const std::vector<JordanElement>& cands) {
    if (cands.empty()) throw Error(ErrorKind::SumNotUnit, "empty candidate list");
    const AlgebraDescriptor alg = cands[0].algebra;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (!cands[i].algebra.same_algebra(alg))
            throw Error(ErrorKind::Algebra, "validate_csoi: algebra mismatch at index " +
                                                std::to_string(i));
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (jmul(cands[i], cands[i]) != cands[i])
            throw Error(ErrorKind::NotIdempotent, "candidate " + std::to_string(i));
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            JordanElement p = jmul(cands[i], cands[j]);
            bool zero = true;
            for (const auto& v : p.coords) zero = zero && v.is_zero();
            if (!zero)
                throw Error(ErrorKind::NotOrthogonal,
                            "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    JordanElement sum = cands[0];
    for (std::size_t i = 1; i < cands.size(); ++i) sum = elem_add(sum, cands[i]);
    if (sum != unit_element(alg))
        throw Error(ErrorKind::SumNotUnit, "sum of candidates differs from the unit");
    CSOI out;
    out.algebra = alg;
    out.idempotents = cands;
    for (const auto& c : cands) out.ranks.push_back(idempotent_rank(c));
    return out;
}

const char* cone_location_name(ConeLocation c) {
    switch (c) {
        case ConeLocation::Interior: return "interior";
        case ConeLocation::Boundary: return "boundary";
        case ConeLocation::Outside: return "outside";
    }
    return "?";
}

ConeLocation cone_test(const JordanElement& x) {
    if (!x.is_real()) throw Error(ErrorKind::Arity, "cone_test: coordinates must be real");
    switch (x.algebra.kind()) {
        case AlgebraDescriptor::Kind::Spin: {
            JordanElement xo = to_frame(x, SpinFrame::Original);
            Scalar d = jdet(xo);
            const mpq_class& s = xo.coords[0].re();
            if (d.re() > 0 && s > 0) return ConeLocation::Interior;
            if (d.re() == 0 && s >= 0) return ConeLocation::Boundary;
            return ConeLocation::Outside;
        }
        case AlgebraDescriptor::Kind::Symm: {
            RatMatrix m = symm_unpack(x.algebra, x.coords);
            if (is_positive_definite(m)) return ConeLocation::Interior;
            if (is_positive_semidefinite(m)) return ConeLocation::Boundary;
            return ConeLocation::Outside;
        }
        case AlgebraDescriptor::Kind::Product: {
            bool interior = true;
            std::size_t off = 0;
            for (const auto& f : x.algebra.factors()) {
                JordanElement xf(f, std::vector<Scalar>(x.coords.begin() + off,
                                                        x.coords.begin() + off + f.dim()));
                ConeLocation c = cone_test(xf);
                if (c == ConeLocation::Outside) return ConeLocation::Outside;
                if (c != ConeLocation::Interior) interior = false;
                off += f.dim();
            }
            return interior ? ConeLocation::Interior : ConeLocation::Boundary;
        }
    }
    throw Error(ErrorKind::Algebra, "cone_test: unhandled kind");
}

std::optional<std::vector<Scalar>> subalgebra_coords(const JordanElement& x, const CSOI& csoi) {
    // Solve x = sum a_j c_j exactly; only spans of the idempotents themselves
    // are handled here, which covers J(c) for rank-1 parts (the rank-2 spin
    // case and diagonal Symm systems used throughout).
    const std::size_t d = x.algebra.dim();
    RatMatrix m(d, csoi.size());
    for (std::size_t j = 0; j < csoi.size(); ++j) {
        JordanElement cj = to_frame(csoi.idempotents[j], x.algebra.frame());
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = cj.coords[i];
    }
    // Least-structure exact solve: row reduce [m | x].
    RatMatrix aug(d, csoi.size() + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < csoi.size(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, csoi.size()) = x.coords[i];
    }
    if (mat_rank(m) != mat_rank(aug)) return std::nullopt;
    // The idempotents are linearly independent, so the coords are unique:
    // a_j = (x, c_j) / (c_j, c_j).
    std::vector<Scalar> a(csoi.size());
    for (std::size_t j = 0; j < csoi.size(); ++j) {
        const JordanElement& cj = csoi.idempotents[j];
        a[j] = inner(x, cj) / inner(cj, cj);
    }
    // Verify exactly (guards the non-orthogonal corner cases).
    JordanElement recon = zero_element(x.algebra);
    for (std::size_t j = 0; j < csoi.size(); ++j)
        recon = elem_add(recon, elem_scale(to_frame(csoi.idempotents[j], x.algebra.frame()), a[j]));
    if (recon != x) return std::nullopt;
    return a;
}

ConeLocation cone_test(const JordanElement& x, const CSOI& csoi) {
    // x in Omega(c) iff x lies in J(c) and in Omega (componentwise by the
    // product-of-cones decomposition of Omega(c)).
    JordanElement xx = to_frame(x, csoi.algebra.frame());
    auto coords = subalgebra_coords(xx, csoi);
    if (!coords) return ConeLocation::Outside;
    return cone_test(xx);
}

MultiPoly fsym_to_scaled(const MultiPoly& q_display, std::size_t n) {
    if (q_display.nvars() != n) throw Error(ErrorKind::Arity, "f-symbol nvars != n");
    MultiPoly out(n);
    for (const auto& [e, c] : q_display.terms()) {
        std::uint32_t k = 0;
        for (std::size_t j = 2; j < n; ++j) k += e[j];
        if (k % 2 != 0)
            throw Error(ErrorKind::SqrtParity,
                        "f-symbol has odd y'-degree monomial; not rational in scaled coordinates");
        out.add_term(e, c * Scalar(2).pow(k / 2));
    }
    return out;
}

MultiPoly fsym_from_scaled(const MultiPoly& q_scaled, std::size_t n) {
    if (q_scaled.nvars() != n) throw Error(ErrorKind::Arity, "f-symbol nvars != n");
    MultiPoly out(n);
    for (const auto& [e, c] : q_scaled.terms()) {
        std::uint32_t k = 0;
        for (std::size_t j = 2; j < n; ++j) k += e[j];
        if (k % 2 != 0)
            throw Error(ErrorKind::SqrtParity,
                        "scaled f-polynomial has odd w-degree monomial; display symbol would "
                        "carry sqrt(2)");
        out.add_term(e, c / Scalar(2).pow(k / 2));
    }
    return out;
}

Scalar eval_fsymbol(const MultiPoly& q_display, const JordanElement& x_f) {
    if (x_f.algebra.kind() != AlgebraDescriptor::Kind::Spin ||
        x_f.algebra.frame() != SpinFrame::FBasis)
        throw Error(ErrorKind::Algebra, "eval_fsymbol expects a spin FBasis element");
    return fsym_to_scaled(q_display, x_f.algebra.spin_n()).eval(x_f.coords);
}

}  // namespace sbdo
