#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilbound {

using Int = boost::multiprecision::cpp_int;

/// Thrown on violated preconditions (bad arguments, mismatched ambients).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration exceeds its configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t mod_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
}

inline uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t mod_inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw UsageError("mod_inv: zero is not invertible");
    return mod_pow(a, p - 2, p);
}

inline bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Prime-field scalar carrying its modulus. A default-constructed value is
/// the zero of an as-yet-unknown field (p == 0) and combines with anything.
struct Fp {
    uint64_t v = 0;
    uint64_t p = 0;

    Fp() = default;
    Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

    static Fp from_int(const Int& x, uint64_t prime) {
        Int r = x % Int(prime);
        if (r < 0) r += prime;
        return Fp(static_cast<uint64_t>(r), prime);
    }

    friend uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        if (a.p != b.p) throw UsageError("Fp: mixed moduli");
        return a.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp{};
        return Fp(mod_add(a.v, b.v, p), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp{};
        return Fp(mod_sub(a.v, b.v, p), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint64_t p = common_modulus(a, b);
        if (p == 0) return Fp{};
        return Fp(mod_mul(a.v, b.v, p), p);
    }
    Fp operator-() const {
        if (p == 0) return Fp{};
        return Fp(v == 0 ? 0 : p - v, p);
    }
    Fp inv() const {
        if (p == 0) throw UsageError("Fp: inverse in unknown field");
        return Fp(mod_inv(v, p), p);
    }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p) return false;
        return a.v == b.v;
    }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline Fp ring_one(const Fp& sample) {
    if (sample.p == 0) throw UsageError("Fp: one in unknown field");
    return Fp(1, sample.p);
}
inline Fp ring_from_int(const Fp& sample, long long c) {
    if (sample.p == 0) throw UsageError("Fp: scalar in unknown field");
    long long r = c % (long long)sample.p;
    if (r < 0) r += (long long)sample.p;
    return Fp((uint64_t)r, sample.p);
}
inline std::string ring_to_string(const Fp& x) { return std::to_string(x.v); }

inline bool is_zero(const Int& x) { return x == 0; }
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_from_int(const Int&, long long c) { return Int(c); }
inline std::string ring_to_string(const Int& x) { return x.str(); }

} // namespace nilbound
