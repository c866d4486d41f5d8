#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wordalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when values from different coefficient rings are combined.
class ring_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RingMode { integers, rationals, modular };

/// One of the three supported coefficient rings: Z, Q, or Z/N.
struct Ring {
    RingMode mode = RingMode::integers;
    std::uint64_t modulus = 0;  // >= 2 iff mode == modular

    static Ring integers() { return {RingMode::integers, 0}; }
    static Ring rationals() { return {RingMode::rationals, 0}; }
    static Ring mod(std::uint64_t n);

    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

/// Exact scalar in a fixed ring. Immutable; all operations are pure.
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed
/// by the backing representation); modular values are kept in [0, N).
/// Arithmetic between different rings throws ring_error, never coerces.
class Coefficient {
public:
    Coefficient() : Coefficient(Ring::integers(), 0) {}
    Coefficient(const Ring& ring, long long value);
    Coefficient(const Ring& ring, BigInt value);

    static Coefficient rational(BigInt num, BigInt den);
    static Coefficient zero(const Ring& r) { return Coefficient(r, 0); }
    static Coefficient one(const Ring& r) { return Coefficient(r, 1); }

    /// Accepts a decimal integer, or "p/q" in the rational ring.
    static Coefficient parse(const std::string& text, const Ring& ring);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_negative() const { return value_ < 0; }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    Coefficient operator-() const;
    Coefficient operator+(const Coefficient& other) const;
    Coefficient operator-(const Coefficient& other) const;
    Coefficient operator*(const Coefficient& other) const;

    /// Exact division; only defined in the rational ring.
    Coefficient divided_by(const Coefficient& other) const;

    /// Equal iff same ring and same value.
    bool operator==(const Coefficient& other) const {
        return ring_ == other.ring_ && value_ == other.value_;
    }

    std::string str() const;
    /// Rendering without a leading minus sign (used by the term printer).
    std::string magnitude_str() const;

private:
    Ring ring_;
    BigRational value_;

    void normalize();
};

}  // namespace wordalg
