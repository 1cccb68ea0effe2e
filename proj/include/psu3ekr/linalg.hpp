#pragma once

// Dense exact linear algebra: fraction-valued Gaussian elimination and rank
// modulo a word-size prime.

#include "psu3ekr/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace psu3ekr {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

inline RatMatrix identity_matrix(std::size_t k) {
    RatMatrix m(k, RatVector(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

/// Reduces m in place to row echelon form and returns the rank.
inline std::size_t echelon_in_place(RatMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Rational inv = 1 / m[rank][c];
        for (std::size_t j = c; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[rank][j] != 0) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(RatMatrix m) { return echelon_in_place(m); }

inline Rational determinant(RatMatrix m) {
    const std::size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && m[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        const Rational inv = 1 / m[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] * inv;
            for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

/// dim ker(m - lambda I).
inline std::size_t eigen_nullity(const RatMatrix& m, const Rational& lambda) {
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] -= lambda;
    return shifted.size() - rank(std::move(shifted));
}

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    }
    return out;
}

/// Rank over Z/p of an integer matrix given by residues in [0, p). p must be prime and below 2^32.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("modulus must be below 2^32");
    if (m.empty()) return 0;
    for (auto& row : m)
        for (auto& v : row) v %= p;
    auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e > 0) {
            if (e & 1U) r = r * b % p;
            b = b * b % p;
            e >>= 1U;
        }
        return r;
    };
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t pivot = rk;
        while (pivot < rows && m[pivot][c] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rk], m[pivot]);
        const std::uint64_t inv = pow_mod(m[rk][c], p - 2);
        for (std::size_t j = c; j < cols; ++j) m[rk][j] = m[rk][j] * inv % p;
        for (std::size_t r = rk + 1; r < rows; ++r) {
            const std::uint64_t f = m[r][c] % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + (p - f) * m[rk][j]) % p;
        }
        ++rk;
    }
    return rk;
}

}  // namespace psu3ekr
