#include "sbdo/jrep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <utility>

namespace sbdo {

namespace {

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

RatMatrix pauli_z() {
    RatMatrix m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = Scalar(-1);
    return m;
}

RatMatrix pauli_x() {
    RatMatrix m(2, 2);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    return m;
}

// Real antisymmetric part of sigma_y: sigma_y = i * J with J below.
RatMatrix pauli_y_real() {
    RatMatrix m(2, 2);
    m.at(0, 1) = Scalar(-1);
    m.at(1, 0) = Scalar(1);
    return m;
}

// Imaginary antisymmetric anticommuting involutions i*B with B real
// antisymmetric, B^2 = -Id, built from one lower doubling level.
std::vector<RatMatrix> antisym_involutions(std::size_t count);

}  // namespace

std::vector<RatMatrix> clifford_generators(std::size_t count) {
    if (count == 0) return {};
    if (count == 1) return {pauli_z()};
    if (count == 2) return {pauli_z(), pauli_x()};
    std::vector<RatMatrix> lower = antisym_involutions(count - 2);
    const std::size_t d = lower[0].rows();
    RatMatrix id(d, d);
    for (std::size_t i = 0; i < d; ++i) id.at(i, i) = Scalar(1);
    std::vector<RatMatrix> out;
    out.push_back(kron(pauli_z(), id));
    out.push_back(kron(pauli_x(), id));
    // sigma_y x (i*B) = -(J x B) stays real and symmetric.
    for (const auto& b : lower) out.push_back(kron(pauli_y_real(), b).scaled(Scalar(-1)));
    return out;
}

namespace {

std::vector<RatMatrix> antisym_involutions(std::size_t count) {
    if (count == 1) return {pauli_y_real()};
    std::vector<RatMatrix> gens = clifford_generators(count);
    std::vector<RatMatrix> out;
    out.reserve(count);
    for (const auto& g : gens) out.push_back(kron(pauli_y_real(), g));
    return out;
}

RatMatrix direct_sum(const RatMatrix& a, std::size_t copies) {
    RatMatrix out(a.rows() * copies, a.cols() * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                out.at(c * a.rows() + i, c * a.cols() + j) = a.at(i, j);
    return out;
}

void check_representation_axioms(const Representation& rep) {
    const std::size_t d = rep.algebra.dim();
    if (rep.phi_basis.size() != d)
        throw Error(ErrorKind::InvariantViolation, "phi_basis size != algebra dimension");
    for (const auto& m : rep.phi_basis) {
        if (m.rows() != rep.dimE || m.cols() != rep.dimE)
            throw Error(ErrorKind::InvariantViolation, "Phi(b_i) has wrong shape");
        if (!m.is_symmetric() || !m.is_real())
            throw Error(ErrorKind::InvariantViolation, "Phi(b_i) not real symmetric");
    }
    JordanElement e = unit_element(rep.algebra);
    RatMatrix phi_e(rep.dimE, rep.dimE);
    for (std::size_t i = 0; i < d; ++i)
        if (!e.coords[i].is_zero()) phi_e += rep.phi_basis[i].scaled(e.coords[i]);
    if (phi_e != RatMatrix::identity(rep.dimE))
        throw Error(ErrorKind::InvariantViolation, "Phi(e) != Id");
    // Jordan morphism law on all basis pairs; bilinearity extends it.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            JordanElement prod = jmul(basis_element(rep.algebra, i), basis_element(rep.algebra, j));
            RatMatrix lhs(rep.dimE, rep.dimE);
            for (std::size_t k = 0; k < d; ++k)
                if (!prod.coords[k].is_zero()) lhs += rep.phi_basis[k].scaled(prod.coords[k]);
            RatMatrix rhs = (rep.phi_basis[i] * rep.phi_basis[j] +
                             rep.phi_basis[j] * rep.phi_basis[i])
                                .scaled(Scalar::ratio(1, 2));
            if (lhs != rhs)
                throw Error(ErrorKind::InvariantViolation,
                            "Jordan morphism law fails on basis pair (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
        }
    }
}

}  // namespace

Representation build_rep(const RepSpec& spec) {
    Representation rep;
    if (spec.kind == RepSpec::Kind::Clifford) {
        if (spec.n < 4)
            throw Error(ErrorKind::Unsupported, "clifford module requires n >= 4");
        if (spec.copies < 1)
            throw Error(ErrorKind::Unsupported, "clifford module requires copies >= 1");
        rep.algebra = AlgebraDescriptor::spin(spec.n);
        std::vector<RatMatrix> gens = clifford_generators(spec.n - 1);
        const std::size_t module_dim = gens[0].rows();
        rep.dimE = module_dim * spec.copies;
        rep.phi_basis.push_back(RatMatrix::identity(rep.dimE));
        for (const auto& g : gens) rep.phi_basis.push_back(direct_sum(g, spec.copies));
        rep.q = rep.dimE / 2;
        rep.recipe = "clifford(n=" + std::to_string(spec.n) +
                     ",copies=" + std::to_string(spec.copies) + ")";
    } else {
        if (spec.r < 1 || spec.q < 1)
            throw Error(ErrorKind::Unsupported, "symm_module requires r, q >= 1");
        rep.algebra = AlgebraDescriptor::symm(spec.r);
        rep.dimE = spec.r * spec.q;
        rep.q = spec.q;
        rep.recipe = "symm_module(r=" + std::to_string(spec.r) +
                     ",q=" + std::to_string(spec.q) + ")";
        // Column-major flattening of Mat(r,q): Phi(x) = I_q (x) x.
        RatMatrix iq = RatMatrix::identity(spec.q);
        const std::size_t d = rep.algebra.dim();
        for (std::size_t b = 0; b < d; ++b) {
            JordanElement bel = basis_element(rep.algebra, b);
            // Unpack the basis element into its r x r matrix.
            RatMatrix bx(spec.r, spec.r);
            {
                // reuse lmat-free unpacking: coordinates map directly
                std::size_t idx = spec.r;
                for (std::size_t i = 0; i < spec.r; ++i) bx.at(i, i) = bel.coords[i];
                for (std::size_t i = 0; i < spec.r; ++i)
                    for (std::size_t j = i + 1; j < spec.r; ++j, ++idx) {
                        bx.at(i, j) = bel.coords[idx];
                        bx.at(j, i) = bel.coords[idx];
                    }
            }
            rep.phi_basis.push_back(kron(iq, bx));
        }
    }
    check_representation_axioms(rep);
    return rep;
}

RatMatrix phi_of(const Representation& rep, const JordanElement& x) {
    if (!x.algebra.same_algebra(rep.algebra))
        throw Error(ErrorKind::Algebra, "phi_of: element is not in the representation's algebra");
    JordanElement xo = to_frame(x, SpinFrame::Original);
    RatMatrix out(rep.dimE, rep.dimE);
    for (std::size_t i = 0; i < rep.phi_basis.size(); ++i)
        if (!xo.coords[i].is_zero()) out += rep.phi_basis[i].scaled(xo.coords[i]);
    return out;
}

JordanElement qmap(const Representation& rep, const std::vector<Scalar>& xi,
                   const std::vector<Scalar>* eta) {
    if (xi.size() != rep.dimE) throw Error(ErrorKind::Arity, "qmap: xi has wrong length");
    const std::vector<Scalar>& et = eta ? *eta : xi;
    if (et.size() != rep.dimE) throw Error(ErrorKind::Arity, "qmap: eta has wrong length");
    const std::size_t d = rep.algebra.dim();
    std::vector<Scalar> m(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Scalar> v = rep.phi_basis[i].mul_vec(xi);
        Scalar acc(0);
        for (std::size_t k = 0; k < rep.dimE; ++k) acc += v[k] * et[k];
        m[i] = acc;
    }
    RatMatrix g = rep.algebra.gram();
    auto ginv = mat_inverse(g);
    return JordanElement(rep.algebra, ginv->mul_vec(m));
}

std::vector<MultiPoly> qmap_polys(const Representation& rep, SpinFrame frame) {
    const std::size_t d = rep.algebra.dim();
    const std::size_t n = rep.dimE;
    std::vector<MultiPoly> quad;
    quad.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
        MultiPoly p(n);
        const RatMatrix& m = rep.phi_basis[b];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (m.at(i, j).is_zero()) continue;
                MultiPoly::Exponents e(n, 0);
                e[i] += 1;
                e[j] += 1;
                p.add_term(e, m.at(i, j));
            }
        quad.push_back(std::move(p));
    }
    RatMatrix g = rep.algebra.gram();
    auto ginv = mat_inverse(g);
    std::vector<MultiPoly> orig;
    orig.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        MultiPoly acc(n);
        for (std::size_t j = 0; j < d; ++j)
            if (!ginv->at(i, j).is_zero()) acc += quad[j].scaled(ginv->at(i, j));
        orig.push_back(std::move(acc));
    }
    if (frame == SpinFrame::Original || rep.algebra.kind() != AlgebraDescriptor::Kind::Spin)
        return orig;
    RatMatrix t = spin_orig_to_f(rep.algebra.spin_n());
    std::vector<MultiPoly> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        MultiPoly acc(n);
        for (std::size_t j = 0; j < d; ++j)
            if (!t.at(i, j).is_zero()) acc += orig[j].scaled(t.at(i, j));
        out.push_back(std::move(acc));
    }
    return out;
}

ModuleSplit split_module(const Representation& rep, const CSOI& csoi) {
    if (!csoi.algebra.same_algebra(rep.algebra))
        throw Error(ErrorKind::Algebra, "split_module: CSOI algebra mismatch");
    ModuleSplit out;
    out.csoi = csoi;
    RatMatrix sum(rep.dimE, rep.dimE);
    for (const auto& c : csoi.idempotents) {
        RatMatrix p = phi_of(rep, c);
        if (p * p != p)
            throw Error(ErrorKind::InvariantViolation, "Phi(c_j) is not idempotent");
        sum += p;
        out.projectors.push_back(std::move(p));
    }
    if (sum != RatMatrix::identity(rep.dimE))
        throw Error(ErrorKind::InvariantViolation, "sum of Phi(c_j) != Id");
    for (std::size_t i = 0; i < out.projectors.size(); ++i)
        for (std::size_t j = i + 1; j < out.projectors.size(); ++j)
            if (!(out.projectors[i] * out.projectors[j]).is_zero())
                throw Error(ErrorKind::InvariantViolation, "Phi(c_i) Phi(c_j) != 0");
    for (std::size_t j = 0; j < out.projectors.size(); ++j) {
        std::size_t nj = mat_rank(out.projectors[j]);
        if (nj != csoi.ranks[j] * rep.q)
            throw Error(ErrorKind::InvariantViolation,
                        "dim E_" + std::to_string(j) + " = " + std::to_string(nj) +
                            " != r_j * q = " + std::to_string(csoi.ranks[j] * rep.q));
        out.dims.push_back(nj);
    }
    // Alignment: all projectors diagonal 0/1.
    out.aligned = true;
    out.blocks.assign(out.projectors.size(), {});
    for (std::size_t j = 0; j < out.projectors.size() && out.aligned; ++j) {
        const RatMatrix& p = out.projectors[j];
        for (std::size_t a = 0; a < rep.dimE && out.aligned; ++a)
            for (std::size_t b = 0; b < rep.dimE; ++b) {
                const Scalar& v = p.at(a, b);
                if (a == b) {
                    if (!(v == Scalar(0) || v == Scalar(1))) {
                        out.aligned = false;
                        break;
                    }
                } else if (!v.is_zero()) {
                    out.aligned = false;
                    break;
                }
            }
    }
    if (out.aligned) {
        for (std::size_t j = 0; j < out.projectors.size(); ++j)
            for (std::size_t a = 0; a < rep.dimE; ++a)
                if (out.projectors[j].at(a, a) == Scalar(1)) out.blocks[j].push_back(a);
    } else {
        out.blocks.clear();
    }
    return out;
}

namespace {

bool q_equals_unit(const Representation& rep, const std::vector<Scalar>& xi) {
    return qmap(rep, xi) == unit_element(rep.algebra);
}

}  // namespace

RegularityResult regularity_witness(const Representation& rep) {
    const std::size_t n = rep.dimE;
    // Sparse candidates: single basis vectors, then basis pairs.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> xi(n, Scalar(0));
        xi[i] = Scalar(1);
        if (q_equals_unit(rep, xi)) return {xi, ""};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Scalar> xi(n, Scalar(0));
            xi[i] = Scalar(1);
            xi[j] = Scalar(1);
            if (q_equals_unit(rep, xi)) return {xi, ""};
        }

    if (rep.algebra.kind() == AlgebraDescriptor::Kind::Symm) {
        const std::size_t r = rep.algebra.symm_r();
        if (rep.q >= r) {
            // xi = [I_r | 0] flattened column-major: entry (i, i) of column i.
            std::vector<Scalar> xi(n, Scalar(0));
            for (std::size_t i = 0; i < r; ++i) xi[i * r + i] = Scalar(1);
            if (q_equals_unit(rep, xi)) return {xi, ""};
        }
        // Q(xi) = xi xi^t has rank at most q; below r it cannot equal e.
        return {std::nullopt, "rank Q(xi) <= q = " + std::to_string(rep.q) +
                                  " < r = " + std::to_string(r) + ", so Q(xi) = e is impossible"};
    }

    // Spin rank-2 blockwise solve over E1 + E2 for the canonical CSOI.
    const std::size_t nd = rep.algebra.spin_n();
    std::vector<Scalar> c1(nd, Scalar(0)), c2(nd, Scalar(0));
    c1[0] = Scalar::ratio(1, 2);
    c1[1] = Scalar::ratio(1, 2);
    c2[0] = Scalar::ratio(1, 2);
    c2[1] = Scalar::ratio(-1, 2);
    CSOI csoi = validate_csoi({JordanElement(rep.algebra, c1), JordanElement(rep.algebra, c2)});
    ModuleSplit split = split_module(rep, csoi);
    if (!split.aligned)
        throw Error(ErrorKind::InvariantViolation, "canonical spin split is not aligned");
    const auto& e1 = split.blocks[0];
    const auto& e2 = split.blocks[1];
    const std::size_t gens = nd - 1;

    // The generators gamma_j (j >= 2) pairwise anticommute, so for any
    // xi1 != 0 the family {gamma_j xi1} is orthogonal with norm |xi1|; its
    // span in E2 has dimension exactly n-2 independent of xi1.
    if (e2.size() <= gens - 1) {
        return {std::nullopt,
                "for every xi1 != 0 the span {gamma_j xi1, j>=2} has dimension " +
                    std::to_string(gens - 1) + " = dim E2 = " + std::to_string(e2.size()) +
                    ", forcing xi2 = 0; |xi2|^2 = 1 is impossible"};
    }
    for (std::size_t i : e1) {
        // xi1 = eps_i has |xi1|^2 = 1. Collect the constraints <gamma_j xi1, xi2> = 0.
        RatMatrix cons(gens - 1, e2.size());
        for (std::size_t g = 1; g < gens; ++g) {
            std::vector<Scalar> col(rep.dimE, Scalar(0));
            col[i] = Scalar(1);
            std::vector<Scalar> gx = rep.phi_basis[g + 1].mul_vec(col);
            for (std::size_t k = 0; k < e2.size(); ++k) cons.at(g - 1, k) = gx[e2[k]];
        }
        auto null_basis = mat_nullspace(cons);
        for (const auto& w : null_basis) {
            Scalar norm(0);
            for (const auto& v : w) norm += v * v;
            if (norm != Scalar(1)) continue;
            std::vector<Scalar> xi(rep.dimE, Scalar(0));
            xi[i] = Scalar(1);
            for (std::size_t k = 0; k < e2.size(); ++k) xi[e2[k]] = w[k];
            if (q_equals_unit(rep, xi)) return {xi, ""};
        }
    }
    throw Error(ErrorKind::InvariantViolation,
                "regularity solver found no rational witness although E2 exceeds the span bound");
}

std::string Representation::to_json() const {
    nlohmann::ordered_json j;
    j["algebra"] = nlohmann::json::parse(algebra.to_json());
    j["dimE"] = dimE;
    j["q"] = q;
    j["recipe"] = recipe;
    nlohmann::ordered_json mats = nlohmann::ordered_json::array();
    for (const auto& m : phi_basis) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) {
                const Scalar& v = m.at(i, k);
                // Generator matrices are integer grids by construction.
                if (v.is_real() && v.re().get_den() == 1)
                    row.push_back(v.re().get_num().get_si());
                else
                    row.push_back(v.to_string());
            }
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    j["phi_basis"] = mats;
    return j.dump();
}

}  // namespace sbdo
