#include "sbdo/matrix.hpp"

#include <algorithm>

namespace sbdo {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Scalar>& d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_real() const {
    for (const auto& x : a_)
        if (!x.is_real()) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Arity, "matrix add shape");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Arity, "matrix sub shape");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::Arity, "matrix mul shape");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

RatMatrix RatMatrix::scaled(const Scalar& s) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
    return out;
}

std::vector<Scalar> RatMatrix::mul_vec(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::Arity, "matrix-vector shape");
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Clears denominators row by row (does not change rank or nullspace), then
// runs fraction-free Bareiss elimination. Returns the echelon matrix, the
// pivot columns, and the sign/pivot data needed for determinants.
struct Echelon {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
    int sign = 1;
    Scalar last_pivot = Scalar(1);  // for square full-rank input: det * sign
};

Echelon bareiss_echelon(RatMatrix m, bool clear_denoms) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon out{RatMatrix(0, 0), {}, 1, Scalar(1)};
    if (clear_denoms) {
        for (std::size_t i = 0; i < rows; ++i) {
            mpz_class l(1);
            for (std::size_t j = 0; j < cols; ++j) {
                const Scalar& s = m.at(i, j);
                mpz_class d1 = s.re().get_den(), d2 = s.im().get_den();
                mpz_class g;
                mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
                mpz_lcm(l.get_mpz_t(), g.get_mpz_t(), d2.get_mpz_t());
            }
            if (l != 1) {
                Scalar f = Scalar(mpq_class(l));
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) *= f;
            }
        }
    }
    Scalar prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
            out.sign = -out.sign;
        }
        const Scalar pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < rows; ++i) {
            const Scalar mic = m.at(i, col);
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = (pivot * m.at(i, j) - mic * m.at(row, j)) / prev;
            }
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.m = std::move(m);
    out.last_pivot = prev;
    return out;
}

}  // namespace

Scalar mat_det(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::Arity, "det of non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    Echelon e = bareiss_echelon(m, /*clear_denoms=*/false);
    if (e.pivot_cols.size() < m.rows()) return Scalar(0);
    return e.sign > 0 ? e.last_pivot : -e.last_pivot;
}

std::optional<RatMatrix> mat_inverse(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::Arity, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    // Gauss-Jordan over the field of Gaussian rationals.
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = row;
        while (piv < n && aug.at(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != row)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
        Scalar inv = aug.at(row, col).inverse();
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            Scalar f = aug.at(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        ++row;
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::size_t mat_rank(const RatMatrix& m) {
    return bareiss_echelon(m, /*clear_denoms=*/true).pivot_cols.size();
}

std::vector<std::vector<Scalar>> mat_nullspace(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    Echelon e = bareiss_echelon(m, /*clear_denoms=*/true);
    const auto& piv = e.pivot_cols;
    const std::size_t rank = piv.size();

    // Back-substitute into reduced form: normalize pivots to 1 and clear above.
    RatMatrix r = e.m;
    for (std::size_t k = rank; k-- > 0;) {
        Scalar inv = r.at(k, piv[k]).inverse();
        for (std::size_t j = 0; j < cols; ++j) r.at(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            Scalar f = r.at(i, piv[k]);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) r.at(i, j) -= f * r.at(k, j);
        }
    }

    std::vector<std::vector<Scalar>> basis;
    std::size_t p = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (p < rank && piv[p] == f) {
            ++p;
            continue;
        }
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < rank; ++k) v[piv[k]] = -r.at(k, f);
        // Canonical scale: first nonzero coordinate equals 1.
        for (const auto& x : v) {
            if (!x.is_zero()) {
                Scalar inv = x.inverse();
                for (auto& y : v) y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> leading_principal_minors(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::Arity, "principal minors of non-square matrix");
    std::vector<Scalar> out;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        RatMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
        out.push_back(mat_det(sub));
    }
    return out;
}

bool is_positive_definite(const RatMatrix& m) {
    if (!m.is_square() || !m.is_symmetric() || !m.is_real()) return false;
    for (const auto& d : leading_principal_minors(m))
        if (!(d.re() > 0)) return false;
    return true;
}

bool is_positive_semidefinite(const RatMatrix& m) {
    if (!m.is_square() || !m.is_symmetric() || !m.is_real()) return false;
    // Faddeev-LeVerrier: det(tI - M) = t^n - c1 t^{n-1} + c2 t^{n-2} - ...
    // where c_k is the k-th elementary symmetric function of the eigenvalues.
    // With all eigenvalues real, M is PSD iff every c_k >= 0.
    const std::size_t n = m.rows();
    RatMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Scalar ak = -tr / Scalar(static_cast<long>(k));
        // e_k = (-1)^k a_k must be nonnegative.
        Scalar ek = k % 2 == 0 ? ak : -ak;
        if (ek.re() < 0) return false;
        if (k < n) {
            RatMatrix adj = mk;
            for (std::size_t i = 0; i < n; ++i) adj.at(i, i) += ak;
            mk = m * adj;
        }
    }
    return true;
}

void RowReducer::add_row(std::vector<Scalar> row) {
    if (row.size() != cols_) throw Error(ErrorKind::Arity, "row size mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& f = row[pivot_cols_[k]];
        if (f.is_zero()) continue;
        Scalar fac = f;
        for (std::size_t j = 0; j < cols_; ++j) row[j] -= fac * rows_[k][j];
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == cols_) return;
    Scalar inv = row[lead].inverse();
    for (auto& x : row) x *= inv;
    // Clear this column in earlier rows to keep a reduced echelon form.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = rows_[k][lead];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) rows_[k][j] -= f * row[j];
    }
    std::size_t pos = 0;
    while (pos < pivot_cols_.size() && pivot_cols_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivot_cols_.insert(pivot_cols_.begin() + pos, lead);
}

std::vector<std::vector<Scalar>> RowReducer::nullspace() const {
    std::vector<std::vector<Scalar>> basis;
    std::size_t p = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (p < pivot_cols_.size() && pivot_cols_[p] == f) {
            ++p;
            continue;
        }
        std::vector<Scalar> v(cols_, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < pivot_cols_.size(); ++k) v[pivot_cols_[k]] = -rows_[k][f];
        for (const auto& x : v) {
            if (!x.is_zero()) {
                Scalar inv = x.inverse();
                for (auto& y : v) y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sbdo
