#include "wordalg/coeff.hpp"

namespace wordalg {

namespace {

void require_same(const Ring& a, const Ring& b) {
    if (!(a == b))
        throw ring_error("ring mode mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace

Ring Ring::mod(std::uint64_t n) {
    if (n < 2) throw ring_error("modulus must be >= 2");
    return {RingMode::modular, n};
}

std::string Ring::name() const {
    switch (mode) {
        case RingMode::integers: return "Z";
        case RingMode::rationals: return "Q";
        case RingMode::modular: return "Z/" + std::to_string(modulus);
    }
    return "?";
}

Coefficient::Coefficient(const Ring& ring, long long value)
    : Coefficient(ring, BigInt(value)) {}

Coefficient::Coefficient(const Ring& ring, BigInt value) : ring_(ring), value_(std::move(value)) {
    normalize();
}

void Coefficient::normalize() {
    if (ring_.mode == RingMode::modular) {
        BigInt n(ring_.modulus);
        BigInt v = numerator() % n;
        if (v < 0) v += n;
        value_ = BigRational(v);
    }
}

Coefficient Coefficient::rational(BigInt num, BigInt den) {
    if (den.is_zero()) throw ring_error("zero denominator");
    if (den < 0) {  // the backing constructor expects a positive denominator
        num = -num;
        den = -den;
    }
    Coefficient c;
    c.ring_ = Ring::rationals();
    c.value_ = BigRational(std::move(num), std::move(den));
    return c;
}

Coefficient Coefficient::parse(const std::string& text, const Ring& ring) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Coefficient(ring, BigInt(text));
        if (ring.mode != RingMode::rationals)
            throw ring_error("fractional literal '" + text + "' outside the rational ring");
        return rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error& e) {
        throw ring_error("bad coefficient literal '" + text + "': " + e.what());
    }
}

Coefficient Coefficient::operator-() const {
    Coefficient r = *this;
    r.value_ = -r.value_;
    r.normalize();
    return r;
}

Coefficient Coefficient::operator+(const Coefficient& other) const {
    require_same(ring_, other.ring_);
    Coefficient r = *this;
    r.value_ += other.value_;
    r.normalize();
    return r;
}

Coefficient Coefficient::operator-(const Coefficient& other) const {
    return *this + (-other);
}

Coefficient Coefficient::operator*(const Coefficient& other) const {
    require_same(ring_, other.ring_);
    Coefficient r = *this;
    r.value_ *= other.value_;
    r.normalize();
    return r;
}

Coefficient Coefficient::divided_by(const Coefficient& other) const {
    require_same(ring_, other.ring_);
    if (ring_.mode != RingMode::rationals)
        throw ring_error("division is only defined in the rational ring");
    if (other.is_zero()) throw ring_error("division by zero");
    Coefficient r = *this;
    r.value_ /= other.value_;
    return r;
}

std::string Coefficient::str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::string Coefficient::magnitude_str() const {
    std::string s = str();
    if (!s.empty() && s[0] == '-') return s.substr(1);
    return s;
}

}  // namespace wordalg
