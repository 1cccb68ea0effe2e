#pragma once

// Exact integer/rational types and small number-theory helpers shared by
// every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace psu3ekr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_decimal(const Rational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(num, den);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimePower {
    int p = 0;
    int m = 0;
};

/// Decomposes q = p^m with p prime, m >= 1; nullopt when q is not a prime power.
inline std::optional<PrimePower> prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = 2;
    while (q % p != 0) ++p;
    int m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{static_cast<int>(p), m};
}

inline bool is_prime_power(std::int64_t q) { return prime_power(q).has_value(); }

inline void require_prime_power(std::int64_t q) {
    if (!is_prime_power(q)) throw std::invalid_argument("not a prime power");
}

/// gcd(3, q+1)
inline int gcd3(std::int64_t q) { return (q + 1) % 3 == 0 ? 3 : 1; }

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace psu3ekr
