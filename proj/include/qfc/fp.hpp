#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfc {

// Library-level error categories. Everything derives from qfc::error so
// callers can catch broadly or by kind.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct modulus_mismatch : error {
    using error::error;
};
struct shape_error : error {
    using error::error;
};
struct parent_mismatch : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};
struct budget_exceeded : error {
    using error::error;
};
// A mathematical assertion backed by a theorem failed; this always means a
// bug in the input data or the library, never a routine "false" verdict.
struct invariant_violation : error {
    using error::error;
};
struct parse_error : error {
    parse_error(size_t line_no, const std::string &what)
        : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    size_t line;
};

namespace detail {

inline uint32_t addm(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    return uint32_t(s >= p ? s - p : s);
}

inline uint32_t subm(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : uint32_t(uint64_t(a) + p - b);
}

inline uint32_t mulm(uint32_t a, uint32_t b, uint32_t p) {
    return uint32_t(uint64_t(a) * b % p);
}

inline uint32_t negm(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

// Inverse by extended Euclid; requires gcd(a, p) = 1.
inline uint32_t invm(uint32_t a, uint32_t p) {
    if (a == 0)
        throw error("division by zero mod " + std::to_string(p));
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        throw error("non-invertible element " + std::to_string(a) + " mod " + std::to_string(p));
    if (t < 0)
        t += p;
    return uint32_t(t);
}

inline uint32_t powm(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t base = a % p, acc = 1 % p;
    while (e) {
        if (e & 1)
            acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(acc);
}

inline bool is_prime(uint32_t p) {
    if (p < 2)
        return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void check_same_modulus(uint32_t a, uint32_t b) {
    if (a != b)
        throw modulus_mismatch("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace detail

/// An element of GF(p); value is kept reduced and the modulus travels with it.
class FpScalar {
  public:
    FpScalar(int64_t value, uint32_t modulus) : p_(modulus) {
        if (modulus < 2)
            throw error("modulus must be >= 2");
        int64_t v = value % int64_t(modulus);
        if (v < 0)
            v += modulus;
        v_ = uint32_t(v);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FpScalar operator+(const FpScalar &o) const {
        detail::check_same_modulus(p_, o.p_);
        return FpScalar(detail::addm(v_, o.v_, p_), p_, raw_tag{});
    }
    FpScalar operator-(const FpScalar &o) const {
        detail::check_same_modulus(p_, o.p_);
        return FpScalar(detail::subm(v_, o.v_, p_), p_, raw_tag{});
    }
    FpScalar operator*(const FpScalar &o) const {
        detail::check_same_modulus(p_, o.p_);
        return FpScalar(detail::mulm(v_, o.v_, p_), p_, raw_tag{});
    }
    FpScalar operator-() const { return FpScalar(detail::negm(v_, p_), p_, raw_tag{}); }
    FpScalar inverse() const { return FpScalar(detail::invm(v_, p_), p_, raw_tag{}); }
    FpScalar pow(uint64_t e) const { return FpScalar(detail::powm(v_, e, p_), p_, raw_tag{}); }

    bool operator==(const FpScalar &o) const {
        detail::check_same_modulus(p_, o.p_);
        return v_ == o.v_;
    }
    bool operator!=(const FpScalar &o) const { return !(*this == o); }

  private:
    struct raw_tag {};
    FpScalar(uint32_t v, uint32_t p, raw_tag) : v_(v), p_(p) {}
    uint32_t v_;
    uint32_t p_;
};

} // namespace qfc
