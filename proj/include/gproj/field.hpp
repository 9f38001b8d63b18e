#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gproj {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file or scalar literal.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A criterion was invoked on inputs that fail its hypotheses
/// (e.g. a self-injectivity assumption that does not hold).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Wrong usage of an operation (dimension mismatch, algebra mismatch, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Ground field: a prime field F_p or the rationals.
class Field {
public:
    static Field fp(std::uint32_t p);
    static Field rationals() { return Field(0); }

    bool is_fp() const { return p_ != 0; }
    std::uint32_t prime() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    /// "Fp:<p>" or "Q".
    std::string str() const;
    static Field parse(std::string_view s);

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// A scalar in a fixed field, kept in canonical form: residues in 0..p-1
/// for F_p, reduced fractions with positive denominator for Q. Used at API
/// boundaries (file IO, entry access); bulk arithmetic lives inside Mat.
class Scalar {
public:
    Scalar(Field f, long v);

    /// Parses "17", "-3" or "-3/4" (the fraction form only over Q).
    static Scalar parse(Field f, std::string_view s);

    Field field() const { return f_; }
    bool is_zero() const;
    std::string str() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    std::int64_t fp_value() const { return r_; }
    const mpq_class& q_value() const { return q_; }

    static Scalar fp_raw(std::uint32_t p, std::int64_t residue);
    static Scalar q_raw(mpq_class q);

private:
    explicit Scalar(Field f) : f_(f) {}
    Field f_;
    std::int64_t r_ = 0;
    mpq_class q_;
};

} // namespace gproj
