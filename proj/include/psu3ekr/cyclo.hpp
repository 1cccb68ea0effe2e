#pragma once

// Exact sums of n-th roots of unity.
//
// A CycInt stores coefficients in the redundant power basis 1, z, ..., z^{n-1}
// (z a primitive n-th root of unity). Nothing is reduced until a value is
// compared: the polynomial is then reduced modulo the n-th cyclotomic
// polynomial, whose residues form a Q-basis, so x is an integer c exactly
// when the remainder is the constant c.

#include "psu3ekr/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace psu3ekr {

struct CycPoly {
    int n = 0;
    std::vector<BigInt> coeffs;  // constant term first, monic
};

namespace detail {

using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Remainder of a modulo a monic integer polynomial.
inline ZPoly zpoly_rem_monic(ZPoly a, const ZPoly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const BigInt c = a.back();
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= c * m[i];
        trim(a);
    }
    return a;
}

/// Exact quotient of a by a monic polynomial; throws if the division leaves a remainder.
inline ZPoly zpoly_div_exact_monic(ZPoly a, const ZPoly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    if (a.size() <= dm) {
        if (!a.empty()) throw std::logic_error("inexact polynomial division");
        return {};
    }
    ZPoly quot(a.size() - dm, BigInt(0));
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const BigInt c = a.back();
        quot[shift] = c;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= c * m[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    return quot;
}

}  // namespace detail

inline CycPoly cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // Phi_d for the divisors d of n, ascending; Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<detail::ZPoly> phis;
    for (int d : divisors) {
        detail::ZPoly num(static_cast<std::size_t>(d + 1), BigInt(0));
        num[0] = -1;
        num[d] = 1;
        for (std::size_t i = 0; i < phis.size(); ++i) {
            if (d % divisors[i] == 0 && divisors[i] < d) num = detail::zpoly_div_exact_monic(num, phis[i]);
        }
        phis.push_back(std::move(num));
    }
    return CycPoly{n, phis.back()};
}

class CycInt {
public:
    explicit CycInt(int n) : n_(n), coeffs_(static_cast<std::size_t>(checked(n)), BigInt(0)) {}

    static CycInt integer(int n, const BigInt& c) {
        CycInt r(n);
        r.coeffs_[0] = c;
        return r;
    }

    int order() const { return n_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Adds c * z^k (k reduced mod n).
    void add_root(std::int64_t k, const BigInt& c = 1) { coeffs_[static_cast<std::size_t>(mod_floor(k, n_))] += c; }

    CycInt& operator+=(const CycInt& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycInt& operator-=(const CycInt& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.same_order(b);
        CycInt r(a.n_);
        for (int i = 0; i < a.n_; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (int j = 0; j < a.n_; ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[static_cast<std::size_t>((i + j) % a.n_)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// Remainder modulo Phi_n: the coordinates in the basis 1, z, ..., z^{phi(n)-1}.
    std::vector<BigInt> reduced() const {
        detail::ZPoly rem = detail::zpoly_rem_monic(coeffs_, cyclotomic_poly(n_).coeffs);
        return rem;
    }

    /// The integer value, if this sum is an integer.
    std::optional<BigInt> to_integer() const {
        const std::vector<BigInt> rem = reduced();
        if (rem.empty()) return BigInt(0);
        if (rem.size() == 1) return rem[0];
        return std::nullopt;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        if (a.n_ != b.n_) return false;
        return (a - b).reduced().empty();
    }

private:
    static int checked(int n) {
        if (n < 1) throw std::invalid_argument("root order must be positive");
        return n;
    }
    void same_order(const CycInt& o) const {
        if (o.n_ != n_) throw std::invalid_argument("mismatched root orders");
    }

    int n_;
    std::vector<BigInt> coeffs_;
};

inline CycInt root_power(int n, std::int64_t k) {
    CycInt r(n);
    r.add_root(k);
    return r;
}

/// x == c as complex numbers, decided by divisibility of (x - c) by Phi_n.
inline bool eq_integer(const CycInt& x, const BigInt& c) {
    CycInt d = x;
    d.add_root(0, -c);
    return d.reduced().empty();
}

/// Integer value of a sum that must be an integer; a non-integral sum is an internal error.
inline BigInt require_integer(const CycInt& x, const char* what) {
    auto v = x.to_integer();
    if (!v) throw std::logic_error(std::string(what) + ": cyclotomic sum is not an integer");
    return *v;
}

}  // namespace psu3ekr
