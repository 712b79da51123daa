#include "sbdo/diffop.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace sbdo {

const char* frame_tag_name(FrameTag f) {
    switch (f) {
        case FrameTag::Generic: return "generic";
        case FrameTag::Original: return "original";
        case FrameTag::FBasis: return "f";
        case FrameTag::Blocks: return "blocks";
    }
    return "?";
}

FrameTag frame_tag_from_name(const std::string& s) {
    if (s == "generic") return FrameTag::Generic;
    if (s == "original") return FrameTag::Original;
    if (s == "f") return FrameTag::FBasis;
    if (s == "blocks") return FrameTag::Blocks;
    throw Error(ErrorKind::Parse, "unknown frame tag '" + s + "'");
}

DiffOperator::DiffOperator(FrameTag frame, MultiPoly symbol, RatMatrix gram, OperatorParams params)
    : frame_(frame), symbol_(std::move(symbol)), gram_(std::move(gram)), params_(std::move(params)) {
    if (gram_.rows() != symbol_.nvars() || gram_.cols() != symbol_.nvars())
        throw Error(ErrorKind::Pairing, "gram size != symbol variable count");
    if (!gram_.is_symmetric())
        throw Error(ErrorKind::Pairing, "gram must be symmetric");
    if (!mat_inverse(gram_))
        throw Error(ErrorKind::Pairing, "gram must be invertible");
    if (frame_ == FrameTag::FBasis && gram_ != RatMatrix::identity(symbol_.nvars()))
        throw Error(ErrorKind::Pairing, "f-basis display gram is the identity");
}

MultiPoly DiffOperator::internal_symbol() const {
    if (frame_ == FrameTag::FBasis) return fsym_to_scaled(symbol_, symbol_.nvars());
    return symbol_;
}

RatMatrix DiffOperator::internal_gram() const {
    if (frame_ == FrameTag::FBasis) {
        std::vector<Scalar> d(symbol_.nvars(), Scalar(2));
        d[0] = Scalar(1);
        d[1] = Scalar(1);
        return RatMatrix::diagonal(d);
    }
    return gram_;
}

Scalar DiffOperator::eigenvalue(const std::vector<Scalar>& v) const {
    return internal_symbol().eval(v);
}

MultiPoly DiffOperator::derivative_polynomial() const {
    auto ginv = mat_inverse(internal_gram());
    return internal_symbol().subst_linear(*ginv);
}

DiffOperator symbol_to_operator(const MultiPoly& q, const RatMatrix& gram, FrameTag frame,
                                OperatorParams params) {
    return DiffOperator(frame, q, gram, std::move(params));
}

ExpFunction ExpFunction::pure(FrameTag frame, std::size_t nvars, std::vector<Scalar> v) {
    if (v.size() != nvars) throw Error(ErrorKind::Arity, "direction length mismatch");
    ExpFunction f;
    f.frame = frame;
    f.prefactor = MultiPoly::constant(nvars, Scalar(1));
    f.direction = std::move(v);
    return f;
}

ExpFunction ExpFunction::scaled(const Scalar& s) const {
    ExpFunction out = *this;
    out.prefactor = prefactor.scaled(s);
    return out;
}

ExpFunction apply_operator(const DiffOperator& d, const ExpFunction& f) {
    if (d.frame() != f.frame)
        throw Error(ErrorKind::Pairing, "operator and function frames differ");
    if (d.symbol().nvars() != f.prefactor.nvars())
        throw Error(ErrorKind::Pairing, "operator and function variable counts differ");
    const std::size_t n = f.prefactor.nvars();
    RatMatrix g = d.internal_gram();
    std::vector<Scalar> gv = g.mul_vec(f.direction);
    MultiPoly dpoly = d.derivative_polynomial();

    MultiPoly acc(n);
    for (const auto& [e, c] : dpoly.terms()) {
        MultiPoly cur = f.prefactor;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) {
                // d/dz_i (w(z) e^{(z,v)}) = (dw/dz_i + (Gv)_i w) e^{(z,v)}
                cur = cur.partial(i) + cur.scaled(gv[i]);
            }
        }
        acc += cur.scaled(c);
    }
    ExpFunction out = f;
    out.prefactor = std::move(acc);
    return out;
}

ExpFunction translate(const ExpFunction& f, const std::vector<Scalar>& u, const RatMatrix& gram) {
    const std::size_t n = f.prefactor.nvars();
    if (u.size() != n) throw Error(ErrorKind::Arity, "translate: shift length mismatch");
    std::vector<Scalar> neg(u);
    for (auto& x : neg) x = -x;
    ExpFunction out = f;
    out.prefactor = f.prefactor.subst_affine(RatMatrix::identity(n), neg);
    // (z-u, v) = (z,v) - (u,v)
    std::vector<Scalar> gv = gram.mul_vec(f.direction);
    Scalar shift(0);
    for (std::size_t i = 0; i < n; ++i) shift += u[i] * gv[i];
    out.exp_offset = f.exp_offset - shift;
    return out;
}

ExpFunction restrict_to_blocks(const ExpFunction& f, const CSOI& csoi) {
    if (f.frame != FrameTag::Original && f.frame != FrameTag::FBasis)
        throw Error(ErrorKind::Pairing, "restriction expects a full spin-frame function");
    const std::size_t n = f.prefactor.nvars();
    const std::size_t k = csoi.size();
    SpinFrame sf = f.frame == FrameTag::FBasis ? SpinFrame::FBasis : SpinFrame::Original;
    RatMatrix g = csoi.algebra.with_frame(sf).gram();

    // Columns: internal coordinates of the idempotents.
    RatMatrix s(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        JordanElement cj = to_frame(csoi.idempotents[j], sf);
        for (std::size_t i = 0; i < n; ++i) s.at(i, j) = cj.coords[i];
    }
    ExpFunction out;
    out.frame = FrameTag::Blocks;
    out.prefactor = f.prefactor.subst_affine(s, std::vector<Scalar>(n, Scalar(0)));
    out.direction.assign(k, Scalar(0));
    std::vector<Scalar> gv = g.mul_vec(f.direction);
    for (std::size_t j = 0; j < k; ++j) {
        Scalar w(0);
        for (std::size_t i = 0; i < n; ++i) w += s.at(i, j) * gv[i];
        out.direction[j] = w;
    }
    out.exp_offset = f.exp_offset;
    return out;
}

DiffOperator rank2_operator(std::size_t n, std::size_t m, std::size_t p,
                            const CoeffVector& coeffs) {
    if (coeffs.a.size() != p + 1)
        throw Error(ErrorKind::Arity, "rank2_operator: coefficient vector has wrong length");
    SymbolSpace space = rank2_symbol_basis(n, p, p);
    MultiPoly q = symbol_from_coeffs(space, coeffs.a);
    OperatorParams params;
    params.n = n;
    params.m = m;
    params.p = p;
    switch (coeffs.provenance) {
        case CoeffProvenance::ClosedForm: params.coeff_provenance = "closed_form"; break;
        case CoeffProvenance::Recurrence: params.coeff_provenance = "recurrence"; break;
        case CoeffProvenance::Nullspace: params.coeff_provenance = "nullspace"; break;
    }
    params.coeff_provenance += coeffs.rule == CoeffRule::Paper ? ":paper" : ":derived";
    return DiffOperator(FrameTag::FBasis, std::move(q), RatMatrix::identity(n), std::move(params));
}

DiffOperator operator_to_frame(const DiffOperator& d, FrameTag target) {
    if (d.frame() == target) return d;
    if (d.frame() == FrameTag::FBasis && target == FrameTag::Original) {
        const std::size_t n = d.symbol().nvars();
        // Internal scaled symbol composed with y_hat = T u gives the
        // original-coordinate symbol; the function on J is unchanged.
        MultiPoly q_orig = d.internal_symbol().subst_linear(spin_orig_to_f(n));
        std::vector<Scalar> diag(n, Scalar(2));
        return DiffOperator(FrameTag::Original, q_orig, RatMatrix::diagonal(diag), d.params());
    }
    if (d.frame() == FrameTag::Original && target == FrameTag::FBasis) {
        const std::size_t n = d.symbol().nvars();
        MultiPoly q_scaled = d.symbol().subst_linear(spin_f_to_orig(n));
        MultiPoly q_disp = fsym_from_scaled(q_scaled, n);
        return DiffOperator(FrameTag::FBasis, q_disp, RatMatrix::identity(n), d.params());
    }
    throw Error(ErrorKind::Unsupported, "operator frame conversion between these frames");
}

namespace {

std::string monomial_key(const MultiPoly::Exponents& e) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!key.empty()) key += ";";
        key += std::to_string(i) + ":" + std::to_string(e[i]);
    }
    return key;
}

MultiPoly::Exponents parse_monomial_key(const std::string& key, std::size_t nvars) {
    MultiPoly::Exponents e(nvars, 0);
    if (key.empty()) return e;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t semi = key.find(';', pos);
        if (semi == std::string::npos) semi = key.size();
        std::string part = key.substr(pos, semi - pos);
        std::size_t colon = part.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::Parse, "bad monomial key");
        std::size_t idx = std::stoul(part.substr(0, colon));
        if (idx >= nvars) throw Error(ErrorKind::Parse, "monomial key index out of range");
        e[idx] = static_cast<std::uint32_t>(std::stoul(part.substr(colon + 1)));
        pos = semi + 1;
    }
    return e;
}

std::vector<std::string> frame_var_names(FrameTag frame, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        switch (frame) {
            case FrameTag::FBasis: names.push_back("y" + std::to_string(i + 1)); break;
            case FrameTag::Original: names.push_back("u" + std::to_string(i)); break;
            case FrameTag::Blocks: names.push_back("z" + std::to_string(i + 1)); break;
            case FrameTag::Generic: names.push_back("x" + std::to_string(i)); break;
        }
    }
    return names;
}

}  // namespace

std::string emit_operator(const DiffOperator& d, EmitFormat format) {
    if (format == EmitFormat::Json) {
        nlohmann::ordered_json j;
        j["frame"] = frame_tag_name(d.frame());
        nlohmann::ordered_json gram = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < d.gram().rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < d.gram().cols(); ++k)
                row.push_back(d.gram().at(i, k).to_string());
            gram.push_back(row);
        }
        j["gram"] = gram;
        nlohmann::ordered_json sym = nlohmann::ordered_json::object();
        for (const auto& [e, c] : d.symbol().terms()) sym[monomial_key(e)] = c.to_string();
        j["symbol"] = sym;
        j["nvars"] = d.symbol().nvars();
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        if (d.params().n) params["n"] = *d.params().n;
        if (d.params().m) params["m"] = *d.params().m;
        if (d.params().p) params["p"] = *d.params().p;
        j["params"] = params;
        j["coeff_provenance"] = d.params().coeff_provenance;
        return j.dump();
    }
    std::ostringstream os;
    const std::size_t n = d.symbol().nvars();
    os << "frame: " << frame_tag_name(d.frame()) << "\n";
    os << "symbol: " << d.symbol().to_string(frame_var_names(d.frame(), n)) << "\n";
    std::vector<std::string> dnames;
    for (std::size_t i = 0; i < n; ++i) dnames.push_back("d" + std::to_string(i));
    os << "operator: " << d.derivative_polynomial().to_string(dnames) << "\n";
    return os.str();
}

DiffOperator parse_operator(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    FrameTag frame = frame_tag_from_name(j.at("frame").get<std::string>());
    std::size_t nvars = j.at("nvars").get<std::size_t>();
    RatMatrix gram(nvars, nvars);
    const auto& gj = j.at("gram");
    for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t k = 0; k < nvars; ++k)
            gram.at(i, k) = Scalar::parse(gj.at(i).at(k).get<std::string>());
    MultiPoly q(nvars);
    for (const auto& [key, val] : j.at("symbol").items())
        q.add_term(parse_monomial_key(key, nvars), Scalar::parse(val.get<std::string>()));
    OperatorParams params;
    if (j.contains("params")) {
        const auto& pj = j["params"];
        if (pj.contains("n")) params.n = pj["n"].get<std::size_t>();
        if (pj.contains("m")) params.m = pj["m"].get<std::size_t>();
        if (pj.contains("p")) params.p = pj["p"].get<std::size_t>();
    }
    if (j.contains("coeff_provenance"))
        params.coeff_provenance = j["coeff_provenance"].get<std::string>();
    return DiffOperator(frame, std::move(q), std::move(gram), std::move(params));
}

}  // namespace sbdo
