#include "sbdo/scalar.hpp"

#include <cstddef>

namespace sbdo {

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw Error(ErrorKind::Arity, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::Arity, "division by zero scalar");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    Scalar one(1);
    return one / *this;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Scalar acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

namespace {

std::string rat_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

mpq_class parse_rat(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

std::string Scalar::to_string() const {
    if (im_ == 0) return rat_str(re_);
    std::string s = rat_str(re_);
    if (im_ > 0)
        s += "+" + rat_str(im_) + "*i";
    else
        s += "-" + rat_str(mpq_class(-im_)) + "*i";
    return s;
}

Scalar Scalar::parse(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
    // Split off a trailing "<sign><rat>*i" if present.
    auto star = s.rfind("*i");
    if (star == std::string::npos || star + 2 != s.size()) {
        return Scalar(parse_rat(s));
    }
    // Find the sign that separates the real and imaginary parts: the last
    // '+'/'-' that is not the leading sign and not right after '/'.
    std::size_t split = std::string::npos;
    for (std::size_t k = star; k > 1; --k) {
        char c = s[k - 1];
        if ((c == '+' || c == '-') && s[k - 2] != '/') {
            split = k - 1;
            break;
        }
    }
    if (split == std::string::npos) {
        // Pure imaginary, e.g. "1/2*i" or "-3*i".
        return Scalar(mpq_class(0), parse_rat(s.substr(0, star)));
    }
    mpq_class re = parse_rat(s.substr(0, split));
    mpq_class im = parse_rat(s.substr(split + 1, star - split - 1));
    if (s[split] == '-') im = -im;
    return Scalar(re, im);
}

}  // namespace sbdo
