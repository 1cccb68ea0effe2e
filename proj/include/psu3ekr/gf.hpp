#pragma once

// Finite fields GF(p^m) in the polynomial basis, with the q-Frobenius and the
// Hermitian norm used for unitary groups over GF(q^2).
//
// Elements are dense coefficient vectors c_0 + c_1 x + ... + c_{m-1} x^{m-1}
// reduced modulo a monic irreducible polynomial. The modulus is the smallest
// irreducible one under the order "sum c_i p^i", i.e. the highest non-leading
// coefficient is compared first and the constant term last. Prime fields use
// the degree-1 modulus x.

#include "psu3ekr/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace psu3ekr {

struct FqElem {
    std::vector<int> coeffs;  // length m, residues mod p

    friend bool operator==(const FqElem&, const FqElem&) = default;
};

namespace detail {

// Dense polynomials over Z/p, low degree first, no trailing zeros (zero poly is empty).
using ZpPoly = std::vector<int>;

inline void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int inv_mod(int a, int p) {
    // p prime, a != 0
    int result = 1;
    int base = a % p;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) result = static_cast<int>(static_cast<std::int64_t>(result) * base % p);
        base = static_cast<int>(static_cast<std::int64_t>(base) * base % p);
        e >>= 1;
    }
    return result;
}

inline ZpPoly poly_sub(ZpPoly a, const ZpPoly& b, int p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
    trim(a);
    return a;
}

inline ZpPoly poly_mul(const ZpPoly& a, const ZpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

inline ZpPoly poly_mod(ZpPoly a, const ZpPoly& m, int p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const int lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm && !a.empty()) {
        const std::size_t shift = a.size() - 1 - dm;
        const int c = static_cast<int>(static_cast<std::int64_t>(a.back()) * lead_inv % p);
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<int>(mod_floor(a[shift + i] - static_cast<std::int64_t>(c) * m[i], p));
        trim(a);
    }
    return a;
}

inline ZpPoly poly_gcd(ZpPoly a, ZpPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^(p^k) mod f, by k successive p-th powers.
inline ZpPoly x_pow_p_pow(int k, const ZpPoly& f, int p) {
    ZpPoly r = poly_mod(ZpPoly{0, 1}, f, p);
    for (int step = 0; step < k; ++step) {
        ZpPoly acc{1};
        ZpPoly base = r;
        int e = p;
        while (e > 0) {
            if (e & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
            base = poly_mod(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

}  // namespace detail

/// True iff the monic polynomial f (low degree first) of degree m >= 1 is
/// irreducible over Z/p: gcd(f, x^(p^k) - x) = 1 for every k <= m/2.
inline bool is_irreducible(const std::vector<int>& f, int p) {
    detail::ZpPoly g(f.begin(), f.end());
    detail::trim(g);
    if (g.size() < 2) return false;
    const int m = static_cast<int>(g.size()) - 1;
    if (m == 1) return true;
    for (int k = 1; k <= m / 2; ++k) {
        detail::ZpPoly h = detail::poly_sub(detail::x_pow_p_pow(k, g, p), detail::ZpPoly{0, 1}, p);
        detail::ZpPoly d = detail::poly_gcd(g, h, p);
        if (d.size() != 1) return false;
    }
    return true;
}

class FieldCtx {
public:
    static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

    FieldCtx(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
        order_ = ipow(p, m);
    }

    int p() const { return p_; }
    int m() const { return m_; }
    std::int64_t order() const { return order_; }
    /// Monic modulus coefficients, constant term first, length m+1.
    const std::vector<int>& modulus() const { return modulus_; }

    FqElem zero() const { return FqElem{std::vector<int>(static_cast<std::size_t>(m_), 0)}; }
    FqElem one() const { return constant(1); }
    FqElem constant(std::int64_t c) const {
        FqElem r = zero();
        r.coeffs[0] = static_cast<int>(mod_floor(c, p_));
        return r;
    }
    /// The class of x (for m = 1 this is 0, consistent with the modulus x).
    FqElem x() const {
        if (m_ == 1) return zero();
        FqElem r = zero();
        r.coeffs[1] = 1;
        return r;
    }

    bool is_zero(const FqElem& a) const {
        for (int c : a.coeffs)
            if (c != 0) return false;
        return true;
    }

    FqElem add(const FqElem& a, const FqElem& b) const {
        FqElem r = zero();
        for (int i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
        return r;
    }
    FqElem sub(const FqElem& a, const FqElem& b) const {
        FqElem r = zero();
        for (int i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] - b.coeffs[i] + p_) % p_;
        return r;
    }
    FqElem neg(const FqElem& a) const { return sub(zero(), a); }

    FqElem mul(const FqElem& a, const FqElem& b) const {
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
        for (int i = 0; i < m_; ++i) {
            if (a.coeffs[i] == 0) continue;
            for (int j = 0; j < m_; ++j) prod[i + j] += static_cast<std::int64_t>(a.coeffs[i]) * b.coeffs[j];
        }
        for (auto& c : prod) c %= p_;
        // Reduce with x^m = -(modulus_0 + ... + modulus_{m-1} x^{m-1}).
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            const std::int64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < m_; ++i) prod[d - m_ + i] = mod_floor(prod[d - m_ + i] - c * modulus_[i], p_);
        }
        FqElem r = zero();
        for (int i = 0; i < m_; ++i) r.coeffs[i] = static_cast<int>(mod_floor(prod[i], p_));
        return r;
    }

    FqElem pow(FqElem base, std::uint64_t e) const {
        FqElem r = one();
        while (e > 0) {
            if (e & 1U) r = mul(r, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return r;
    }

    FqElem inv(const FqElem& a) const {
        if (is_zero(a)) throw std::domain_error("zero has no inverse");
        return pow(a, static_cast<std::uint64_t>(order_ - 2));
    }

    /// Bijection with 0..order-1: sum c_i p^i.
    std::uint32_t index(const FqElem& a) const {
        std::uint32_t r = 0;
        for (int i = m_ - 1; i >= 0; --i) r = r * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(a.coeffs[i]);
        return r;
    }
    FqElem element(std::uint32_t idx) const {
        FqElem r = zero();
        for (int i = 0; i < m_; ++i) {
            r.coeffs[i] = static_cast<int>(idx % static_cast<std::uint32_t>(p_));
            idx /= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    /// Smallest-index element of multiplicative order order-1.
    FqElem primitive_element() const {
        const std::int64_t n = order_ - 1;
        std::vector<std::int64_t> prime_factors;
        std::int64_t t = n;
        for (std::int64_t d = 2; d * d <= t; ++d) {
            if (t % d == 0) {
                prime_factors.push_back(d);
                while (t % d == 0) t /= d;
            }
        }
        if (t > 1) prime_factors.push_back(t);
        for (std::uint32_t idx = 1; idx < static_cast<std::uint32_t>(order_); ++idx) {
            const FqElem g = element(idx);
            bool primitive = true;
            for (std::int64_t f : prime_factors) {
                if (pow(g, static_cast<std::uint64_t>(n / f)) == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return g;
        }
        throw std::logic_error("no primitive element found");
    }

private:
    int p_;
    int m_;
    std::vector<int> modulus_;
    std::int64_t order_;
};

inline FieldCtx field_build(int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    std::int64_t order = 1;
    for (int i = 0; i < m; ++i) {
        order *= p;
        if (order > FieldCtx::kMaxOrder) throw std::invalid_argument("field too large");
    }
    // Candidates c_0 + ... + c_{m-1} x^{m-1} + x^m in increasing sum c_i p^i.
    for (std::int64_t code = 0; code < order; ++code) {
        std::vector<int> f(static_cast<std::size_t>(m + 1), 0);
        std::int64_t t = code;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return FieldCtx(p, m, std::move(f));
    }
    throw std::logic_error("no irreducible polynomial found");
}

inline int subfield_exponent(const FieldCtx& ctx) {
    if (ctx.m() % 2 != 0) throw std::domain_error("no quadratic subfield structure");
    return ctx.m() / 2;
}

/// x -> x^q where q = p^(m/2).
inline FqElem frobenius_q(const FieldCtx& ctx, const FqElem& x) {
    const int half = subfield_exponent(ctx);
    return ctx.pow(x, static_cast<std::uint64_t>(ipow(ctx.p(), half)));
}

/// x^(q+1), the norm from GF(q^2) to GF(q).
inline FqElem hermitian_norm(const FieldCtx& ctx, const FqElem& x) { return ctx.mul(x, frobenius_q(ctx, x)); }

}  // namespace psu3ekr
