#pragma once

// The parameter set T of triples (k, l, m) that indexes both a family of
// derangement classes and a family of characters of PSU(3,q), and the exact
// character sums over T evaluated by enumeration.
//
// Exponents live in Z/(q+1); e denotes a primitive (q+1)-th root of unity and
// omega = e^{(q+1)/3} a primitive cube root (gcd 3 case).

#include "psu3ekr/cyclo.hpp"
#include "psu3ekr/numeric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace psu3ekr {

struct Triple {
    int k = 0;
    int l = 0;
    int m = 0;

    bool contains(int x) const { return k == x || l == x || m == x; }
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleSet {
    int q = 0;
    int gcd_case = 1;  // gcd(3, q+1)
    std::vector<Triple> triples;
};

inline TripleSet enumerate_T(int q) {
    require_prime_power(q);
    TripleSet out{q, gcd3(q), {}};
    const int n = q + 1;
    if (out.gcd_case == 1) {
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                for (int m = l + 1; m <= n; ++m)
                    if ((k + l + m) % n == 0) out.triples.push_back({k, l, m});
    } else {
        const int third = n / 3;
        for (int k = 1; k <= third; ++k)
            for (int l = k + 1; l <= third; ++l) out.triples.push_back({k, l, n - k - l});
    }
    return out;
}

/// |T| from the closed forms: (q^2-q)/6 for gcd 1, (q^2-q-2)/18 for gcd 3.
inline std::int64_t T_size_formula(int q) {
    const std::int64_t qq = q;
    return gcd3(q) == 1 ? (qq * qq - qq) / 6 : (qq * qq - qq - 2) / 18;
}

inline std::map<int, std::int64_t> occurrence_counts(int q) {
    require_prime_power(q);
    if (gcd3(q) != 1) throw std::domain_error("claims stated for gcd 1 only");
    std::map<int, std::int64_t> counts;
    for (int x = 1; x <= q + 1; ++x) counts[x] = 0;
    for (const Triple& t : enumerate_T(q).triples) {
        ++counts[t.k];
        ++counts[t.l];
        ++counts[t.m];
    }
    return counts;
}

/// Number of (x, y) in (Z/m)^2 with a x + b y = c (mod m): d m when d = gcd(a, b, m) divides c, else 0.
inline std::int64_t count_solutions(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    const std::int64_t d = std::gcd(std::gcd(mod_floor(a, m), mod_floor(b, m)), m);
    return mod_floor(c, d) == 0 ? d * m : 0;
}

namespace detail {

/// sum over T of e^{s k} + e^{s l} + e^{s m} with e of order q+1.
inline BigInt power_sum_over_T(const TripleSet& ts, std::int64_t s, const char* what) {
    const int n = ts.q + 1;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(n), 0);
    for (const Triple& t : ts.triples)
        for (int x : {t.k, t.l, t.m}) ++hits[static_cast<std::size_t>(mod_floor(s * x, n))];
    CycInt acc(n);
    for (int i = 0; i < n; ++i)
        if (hits[i] != 0) acc.add_root(i, hits[i]);
    return require_integer(acc, what);
}

/// sum over all orderings (k, l, m) of all triples of T of e^{u k + v l + w m}.
inline BigInt permuted_sum(const TripleSet& ts, const Triple& param, const char* what) {
    const int n = ts.q + 1;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(n), 0);
    for (const Triple& t : ts.triples) {
        std::array<int, 3> xs{t.k, t.l, t.m};
        std::sort(xs.begin(), xs.end());
        do {
            const std::int64_t e = static_cast<std::int64_t>(param.k) * xs[0] + static_cast<std::int64_t>(param.l) * xs[1] +
                                   static_cast<std::int64_t>(param.m) * xs[2];
            ++hits[static_cast<std::size_t>(mod_floor(e, n))];
        } while (std::next_permutation(xs.begin(), xs.end()));
    }
    CycInt acc(n);
    for (int i = 0; i < n; ++i)
        if (hits[i] != 0) acc.add_root(i, hits[i]);
    return require_integer(acc, what);
}

inline void require_member(const TripleSet& ts, const Triple& t) {
    if (!std::binary_search(ts.triples.begin(), ts.triples.end(), t)) throw std::invalid_argument("triple not in T");
}

}  // namespace detail

/// gcd 1: sum over T of e^{3uk} + e^{3ul} + e^{3um}.
inline BigInt chi3_sum(int q, int u) {
    const TripleSet ts = enumerate_T(q);
    if (ts.gcd_case != 1) throw std::domain_error("chi3_sum is the gcd 1 sum; use chi3_sum_gcd3");
    if (u < 1 || u > q + 1) throw std::invalid_argument("u out of range 1..q+1");
    return detail::power_sum_over_T(ts, 3LL * u, "chi3_sum");
}

/// gcd 1: sum over all orderings of T of e^{uk + vl + wm} for (u, v, w) in T.
inline BigInt chi5_sum(int q, const Triple& uvw) {
    const TripleSet ts = enumerate_T(q);
    if (ts.gcd_case != 1) throw std::domain_error("chi5_sum is the gcd 1 sum");
    detail::require_member(ts, uvw);
    return detail::permuted_sum(ts, uvw, "chi5_sum");
}

/// gcd 3: sum over T of e^{3uk} + e^{3ul} + e^{3um}, 1 <= u <= (q+1)/3 - 1.
inline BigInt chi3_sum_gcd3(int q, int u) {
    const TripleSet ts = enumerate_T(q);
    if (ts.gcd_case != 3) throw std::domain_error("chi3_sum_gcd3 requires gcd(3, q+1) = 3");
    if (u < 1 || u > (q + 1) / 3 - 1) throw std::invalid_argument("u out of range 1..(q+1)/3-1");
    return detail::power_sum_over_T(ts, 3LL * u, "chi3_sum_gcd3");
}

/// gcd 3: sum over T of omega^{k-l} + omega^{l-k}.
inline BigInt omega_pair_sum(int q) {
    const TripleSet ts = enumerate_T(q);
    if (ts.gcd_case != 3) throw std::domain_error("omega_pair_sum requires gcd(3, q+1) = 3");
    CycInt acc(3);
    for (const Triple& t : ts.triples) {
        acc.add_root(t.k - t.l);
        acc.add_root(t.l - t.k);
    }
    return require_integer(acc, "omega_pair_sum");
}

struct Chi6Sum {
    BigInt value;
    bool difference_divisible = false;  // v - u = 0 mod 3
    bool has_multiple = false;          // some member of (u, v, w) divisible by (q+1)/3
};

/// gcd 3: sum over all orderings of T of e^{uk + vl + wm} for (u, v, w) in T, with its branch key.
inline Chi6Sum chi6_sum(int q, const Triple& uvw) {
    const TripleSet ts = enumerate_T(q);
    if (ts.gcd_case != 3) throw std::domain_error("chi6_sum requires gcd(3, q+1) = 3");
    detail::require_member(ts, uvw);
    const int third = (q + 1) / 3;
    Chi6Sum r;
    r.value = detail::permuted_sum(ts, uvw, "chi6_sum");
    r.difference_divisible = mod_floor(uvw.l - uvw.k, 3) == 0;
    r.has_multiple = uvw.k % third == 0 || uvw.l % third == 0 || uvw.m % third == 0;
    return r;
}

/// -3 (omega^{u-v} + omega^{v-u}): -6 when u = v mod 3, else 3.
inline int chi6_gamma3_value(std::int64_t u, std::int64_t v) {
    CycInt acc(3);
    acc.add_root(u - v, -3);
    acc.add_root(v - u, -3);
    return static_cast<int>(require_integer(acc, "chi6_gamma3_value"));
}

}  // namespace psu3ekr
