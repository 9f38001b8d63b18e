#include "gproj/field.hpp"

#include <charconv>

namespace gproj {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long parse_long(std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("bad integer literal: '" + std::string(s) + "'");
    return v;
}

} // namespace

Field Field::fp(std::uint32_t p) {
    if (!is_prime(p))
        throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31))
        throw UsageError("prime too large (must fit in 31 bits)");
    return Field(p);
}

std::string Field::str() const {
    return is_fp() ? "Fp:" + std::to_string(p_) : "Q";
}

Field Field::parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        long p = parse_long(s.substr(3));
        if (p < 2) throw ParseError("bad field spec: '" + std::string(s) + "'");
        return fp(static_cast<std::uint32_t>(p));
    }
    throw ParseError("bad field spec: '" + std::string(s) + "' (expected \"Fp:<p>\" or \"Q\")");
}

Scalar::Scalar(Field f, long v) : f_(f) {
    if (f.is_fp()) {
        std::int64_t p = f.prime();
        r_ = v % p;
        if (r_ < 0) r_ += p;
    } else {
        q_ = v;
    }
}

Scalar Scalar::parse(Field f, std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Scalar(f, parse_long(s));
    }
    if (f.is_fp())
        throw ParseError("fraction literal '" + std::string(s) + "' not allowed over " + f.str());
    long num = parse_long(s.substr(0, slash));
    long den = parse_long(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q_raw(std::move(q));
}

bool Scalar::is_zero() const {
    return f_.is_fp() ? r_ == 0 : sgn(q_) == 0;
}

std::string Scalar::str() const {
    if (f_.is_fp()) return std::to_string(r_);
    return q_.get_str();
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_) return false;
    return f_.is_fp() ? r_ == o.r_ : q_ == o.q_;
}

namespace {

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    return t < 0 ? t + p : t;
}

} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (f_ != o.f_) throw UsageError("scalar field mismatch");
    if (f_.is_fp()) {
        std::int64_t p = f_.prime(), s = r_ + o.r_;
        return fp_raw(f_.prime(), s >= p ? s - p : s);
    }
    return q_raw(q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (f_ != o.f_) throw UsageError("scalar field mismatch");
    if (f_.is_fp()) {
        std::int64_t p = f_.prime(), s = r_ - o.r_;
        return fp_raw(f_.prime(), s < 0 ? s + p : s);
    }
    return q_raw(q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (f_ != o.f_) throw UsageError("scalar field mismatch");
    if (f_.is_fp()) return fp_raw(f_.prime(), (r_ * o.r_) % f_.prime());
    return q_raw(q_ * o.q_);
}

Scalar Scalar::operator-() const {
    if (f_.is_fp()) return fp_raw(f_.prime(), r_ == 0 ? 0 : f_.prime() - r_);
    return q_raw(-q_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    if (f_.is_fp()) return fp_raw(f_.prime(), fp_inv(r_, f_.prime()));
    return q_raw(1 / q_);
}

Scalar Scalar::fp_raw(std::uint32_t p, std::int64_t residue) {
    Scalar s(Field::fp(p));
    s.r_ = residue;
    return s;
}

Scalar Scalar::q_raw(mpq_class q) {
    Scalar s(Field::rationals());
    s.q_ = std::move(q);
    return s;
}

} // namespace gproj
