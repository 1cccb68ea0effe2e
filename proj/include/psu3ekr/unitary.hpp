#pragma once

// PSU(3,q) as an explicit permutation group on the q^3+1 points of the
// Hermitian curve x0^(q+1) + x1^(q+1) + x2^(q+1) = 0 over GF(q^2), with
// conjugacy classes, derangements, the class-quotient matrix of the
// derangement graph, and the permutation-module checks.
//
// Permutations compose right to left: (a b)(i) = a(b(i)).

#include "psu3ekr/gf.hpp"
#include "psu3ekr/linalg.hpp"
#include "psu3ekr/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace psu3ekr {

inline constexpr int kMaxPointsQ = 9;
inline constexpr int kMaxGroupQ = 5;

/// Normalized homogeneous coordinates, stored as GF(q^2) element indices.
struct ProjPoint {
    std::array<std::uint32_t, 3> coords{};
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

struct GroupData {
    int q = 0;
    std::size_t n = 0;
    std::size_t order = 0;
    std::vector<ProjPoint> points;
    std::vector<std::uint16_t> images;  // order x n, sorted lexicographically by row
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint32_t> class_reps;
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::uint32_t> fix_counts;
    std::vector<bool> derangement;  // per class

    std::span<const std::uint16_t> perm(std::size_t idx) const { return {images.data() + idx * n, n}; }
    std::size_t num_classes() const { return class_reps.size(); }

    /// Index of a permutation of the group; throws if it is not an element.
    std::size_t index_of(std::span<const std::uint16_t> p) const {
        std::size_t lo = 0;
        std::size_t hi = order;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            const auto m = perm(mid);
            if (std::lexicographical_compare(m.begin(), m.end(), p.begin(), p.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == order || !std::equal(p.begin(), p.end(), perm(lo).begin()))
            throw std::logic_error("permutation is not a group element");
        return lo;
    }

    bool is_derangement_element(std::size_t idx) const { return derangement[class_of[idx]]; }
};

namespace detail {

/// Operation tables of GF(Q) indexed by element index.
struct FieldTables {
    std::uint32_t Q = 0;
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;  // inv[0] unused
    std::vector<std::uint32_t> conj;
    std::vector<std::uint32_t> norm;

    std::uint32_t a(std::uint32_t x, std::uint32_t y) const { return add[x * Q + y]; }
    std::uint32_t m(std::uint32_t x, std::uint32_t y) const { return mul[x * Q + y]; }
};

inline FieldTables field_tables(int q) {
    const PrimePower pp = *prime_power(q);
    const FieldCtx ctx = field_build(pp.p, 2 * pp.m);
    FieldTables t;
    t.Q = static_cast<std::uint32_t>(ctx.order());
    const std::uint32_t Q = t.Q;
    std::vector<FqElem> el;
    for (std::uint32_t i = 0; i < Q; ++i) el.push_back(ctx.element(i));
    t.add.resize(Q * Q);
    t.mul.resize(Q * Q);
    t.neg.resize(Q);
    t.inv.assign(Q, 0);
    t.conj.resize(Q);
    t.norm.resize(Q);
    for (std::uint32_t i = 0; i < Q; ++i) {
        for (std::uint32_t j = 0; j < Q; ++j) {
            t.add[i * Q + j] = ctx.index(ctx.add(el[i], el[j]));
            t.mul[i * Q + j] = ctx.index(ctx.mul(el[i], el[j]));
        }
        t.neg[i] = ctx.index(ctx.neg(el[i]));
        if (i != 0) t.inv[i] = ctx.index(ctx.inv(el[i]));
        t.conj[i] = ctx.index(frobenius_q(ctx, el[i]));
        t.norm[i] = ctx.index(hermitian_norm(ctx, el[i]));
    }
    return t;
}

using Vec3 = std::array<std::uint32_t, 3>;

/// sum_k x_k conj(y_k)
inline std::uint32_t herm(const FieldTables& f, const Vec3& x, const Vec3& y) {
    std::uint32_t s = 0;
    for (int k = 0; k < 3; ++k) s = f.a(s, f.m(x[k], f.conj[y[k]]));
    return s;
}

inline Vec3 normalize(const FieldTables& f, Vec3 v) {
    std::size_t first = 0;
    while (first < 3 && v[first] == 0) ++first;
    if (first == 3) throw std::logic_error("zero vector has no projective point");
    const std::uint32_t s = f.inv[v[first]];
    for (auto& c : v) c = f.m(c, s);
    return v;
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

inline void compose_into(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b, std::vector<std::uint16_t>& out) {
    out.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
}

inline std::vector<std::uint16_t> inverse_of(std::span<const std::uint16_t> a) {
    std::vector<std::uint16_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
    return r;
}

/// Size of the subgroup generated by gens, by breadth-first closure from the identity.
inline std::size_t subgroup_size(const GroupData& g, const std::vector<std::size_t>& gens, std::vector<char>& seen) {
    seen.assign(g.order, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    std::vector<std::uint16_t> buf;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t s : gens) {
            compose_into(g.perm(queue[head]), g.perm(s), buf);
            const std::size_t j = g.index_of(buf);
            if (!seen[j]) {
                seen[j] = 1;
                queue.push_back(j);
            }
        }
    }
    return queue.size();
}

}  // namespace detail

inline void require_group_q(int q) {
    require_prime_power(q);
    if (q > kMaxGroupQ) throw std::domain_error("group too large for explicit enumeration");
}

inline std::vector<ProjPoint> hermitian_points(int q) {
    require_prime_power(q);
    if (q > kMaxPointsQ) throw std::domain_error("point set too large");
    const detail::FieldTables f = detail::field_tables(q);
    std::vector<ProjPoint> pts;
    for (std::uint32_t x0 = 0; x0 <= 1; ++x0)
        for (std::uint32_t x1 = 0; x1 < f.Q; ++x1) {
            if (x0 == 0 && x1 > 1) break;
            for (std::uint32_t x2 = 0; x2 < f.Q; ++x2) {
                if (x0 == 0 && x1 == 0 && x2 != 1) continue;
                if (f.a(f.a(f.norm[x0], f.norm[x1]), f.norm[x2]) == 0) pts.push_back({{x0, x1, x2}});
            }
        }
    std::sort(pts.begin(), pts.end());
    if (pts.size() != static_cast<std::size_t>(q) * q * q + 1) throw std::logic_error("Hermitian curve has wrong size");
    return pts;
}

/// Class partition by conjugation under a generating set; representative = least index.
inline void conjugacy_classes(GroupData& g) {
    std::vector<std::size_t> gens;
    std::vector<char> seen;
    std::mt19937_64 rng(0x5053553301ULL);
    std::uniform_int_distribution<std::size_t> pick(1, g.order - 1);
    while (g.order > 1 && detail::subgroup_size(g, gens, seen) < g.order) {
        std::size_t c = pick(rng);
        while (seen[c]) c = pick(rng);
        gens.push_back(c);
    }

    detail::UnionFind uf(g.order);
    std::vector<std::vector<std::uint16_t>> gen_inv;
    for (std::size_t s : gens) gen_inv.push_back(detail::inverse_of(g.perm(s)));
    std::vector<std::uint16_t> t1;
    std::vector<std::uint16_t> t2;
    for (std::size_t x = 0; x < g.order; ++x) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            detail::compose_into(g.perm(x), gen_inv[k], t1);
            detail::compose_into(g.perm(gens[k]), t1, t2);
            uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(g.index_of(t2)));
        }
    }

    g.class_of.assign(g.order, 0);
    g.class_reps.clear();
    g.class_sizes.clear();
    std::vector<std::uint32_t> class_of_root(g.order, UINT32_MAX);
    for (std::size_t x = 0; x < g.order; ++x) {
        const std::uint32_t r = uf.find(static_cast<std::uint32_t>(x));
        if (class_of_root[r] == UINT32_MAX) {
            class_of_root[r] = static_cast<std::uint32_t>(g.class_reps.size());
            g.class_reps.push_back(static_cast<std::uint32_t>(x));
            g.class_sizes.push_back(0);
        }
        g.class_of[x] = class_of_root[r];
        ++g.class_sizes[class_of_root[r]];
    }
    g.fix_counts.clear();
    g.derangement.clear();
    for (std::uint32_t rep : g.class_reps) {
        const auto p = g.perm(rep);
        std::uint32_t fix = 0;
        for (std::size_t i = 0; i < g.n; ++i)
            if (p[i] == i) ++fix;
        g.fix_counts.push_back(fix);
        g.derangement.push_back(fix == 0);
    }
}

inline GroupData build_psu3(int q) {
    require_group_q(q);
    const detail::FieldTables f = detail::field_tables(q);
    GroupData g;
    g.q = q;
    g.points = hermitian_points(q);
    g.n = g.points.size();
    const std::uint32_t Q = f.Q;

    std::vector<std::int32_t> point_index(static_cast<std::size_t>(Q) * Q * Q, -1);
    for (std::size_t i = 0; i < g.n; ++i) {
        const auto& c = g.points[i].coords;
        point_index[(c[0] * Q + c[1]) * Q + c[2]] = static_cast<std::int32_t>(i);
    }

    std::vector<detail::Vec3> unit;
    for (std::uint32_t a = 0; a < Q; ++a)
        for (std::uint32_t b = 0; b < Q; ++b)
            for (std::uint32_t c = 0; c < Q; ++c)
                if (f.a(f.a(f.norm[a], f.norm[b]), f.norm[c]) == 1) unit.push_back({a, b, c});

    std::unordered_set<std::u16string> seen;
    std::u16string img(g.n, u'\0');
    for (const auto& c1 : unit) {
        for (const auto& c2 : unit) {
            if (detail::herm(f, c1, c2) != 0) continue;
            detail::Vec3 w;
            for (int k = 0; k < 3; ++k) {
                const int i1 = (k + 1) % 3;
                const int i2 = (k + 2) % 3;
                w[k] = f.conj[f.a(f.m(c1[i1], c2[i2]), f.neg[f.m(c1[i2], c2[i1])])];
            }
            const std::uint32_t nw = detail::herm(f, w, w);
            const std::uint32_t lam = f.inv[nw];
            detail::Vec3 c3;
            for (int k = 0; k < 3; ++k) c3[k] = f.m(lam, w[k]);
            if (detail::herm(f, c3, c3) != 1) throw std::logic_error("third column is not a unit vector");
            const std::array<detail::Vec3, 3> cols{c1, c2, c3};
            for (std::size_t i = 0; i < g.n; ++i) {
                const auto& x = g.points[i].coords;
                detail::Vec3 y{};
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) y[r] = f.a(y[r], f.m(cols[c][r], x[c]));
                y = detail::normalize(f, y);
                const std::int32_t j = point_index[(y[0] * Q + y[1]) * Q + y[2]];
                if (j < 0) throw std::logic_error("image is not on the curve");
                img[i] = static_cast<char16_t>(j);
            }
            seen.insert(img);
        }
    }

    std::vector<std::u16string> elems(seen.begin(), seen.end());
    seen.clear();
    std::sort(elems.begin(), elems.end());
    g.order = elems.size();
    g.images.reserve(g.order * g.n);
    for (const auto& e : elems)
        for (char16_t c : e) g.images.push_back(static_cast<std::uint16_t>(c));

    const std::uint64_t qq = static_cast<std::uint64_t>(q);
    const std::uint64_t expected = qq * qq * qq * (qq * qq - 1) * (qq * qq * qq + 1) / static_cast<std::uint64_t>(gcd3(q));
    if (g.order != expected) throw std::logic_error("group order does not match the order formula");
    conjugacy_classes(g);
    return g;
}

struct DerangementSet {
    std::vector<std::uint32_t> classes;
    std::uint64_t total = 0;
};

inline DerangementSet derangement_set(const GroupData& g) {
    DerangementSet d;
    for (std::uint32_t c = 0; c < g.num_classes(); ++c)
        if (g.derangement[c]) {
            d.classes.push_back(c);
            d.total += g.class_sizes[c];
        }
    return d;
}

inline std::vector<std::size_t> derangement_elements(const GroupData& g) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.order; ++x)
        if (g.is_derangement_element(x)) out.push_back(x);
    return out;
}

using QuotientMatrix = std::vector<std::vector<std::int64_t>>;

inline QuotientMatrix quotient_matrix(const GroupData& g) {
    const std::size_t k = g.num_classes();
    const std::vector<std::size_t> ders = derangement_elements(g);
    QuotientMatrix N(k, std::vector<std::int64_t>(k, 0));
    std::vector<std::uint16_t> buf;
    for (std::size_t c = 0; c < k; ++c) {
        const auto rep = g.perm(g.class_reps[c]);
        for (std::size_t d : ders) {
            detail::compose_into(g.perm(d), rep, buf);
            ++N[c][g.class_of[g.index_of(buf)]];
        }
    }
    return N;
}

inline RatMatrix to_rational(const QuotientMatrix& N) {
    RatMatrix m;
    for (const auto& row : N) {
        RatVector r;
        for (std::int64_t v : row) r.emplace_back(v);
        m.push_back(std::move(r));
    }
    return m;
}

struct FixCheck {
    bool holds = false;
    Rational eigenvalue;
};

/// Checks N v = (-|D|/(n-1)) v for v(C) = fix(c_C) - 1.
inline FixCheck fix_character_eigencheck(const GroupData& g, const QuotientMatrix& N) {
    FixCheck r;
    r.eigenvalue = -Rational(static_cast<std::int64_t>(derangement_set(g).total)) / static_cast<std::int64_t>(g.n - 1);
    RatVector v;
    for (std::uint32_t f : g.fix_counts) v.emplace_back(static_cast<std::int64_t>(f) - 1);
    const RatVector nv = mat_vec(to_rational(N), v);
    r.holds = true;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (nv[i] != r.eigenvalue * v[i]) r.holds = false;
    return r;
}

/// The orbit of the ordered pair (0, 1) has all n(n-1) ordered pairs of distinct points.
inline bool is_two_transitive(const GroupData& g) {
    std::vector<char> hit(g.n * g.n, 0);
    std::size_t count = 0;
    for (std::size_t x = 0; x < g.order; ++x) {
        const auto p = g.perm(x);
        const std::size_t key = static_cast<std::size_t>(p[0]) * g.n + p[1];
        if (!hit[key]) {
            hit[key] = 1;
            ++count;
        }
    }
    return count == g.n * (g.n - 1);
}

inline bool intersecting(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return true;
    return false;
}

/// Degree of vertex idx in the derangement graph: elements meeting it nowhere.
inline std::uint64_t vertex_degree(const GroupData& g, std::size_t idx) {
    std::uint64_t deg = 0;
    const auto s = g.perm(idx);
    for (std::size_t y = 0; y < g.order; ++y)
        if (!intersecting(s, g.perm(y))) ++deg;
    return deg;
}

/// Elements mapping point i to point j.
inline std::vector<std::size_t> canonical_coclique(const GroupData& g, std::size_t i, std::size_t j) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.order; ++x)
        if (g.perm(x)[i] == j) out.push_back(x);
    return out;
}

inline RatMatrix derangement_adjacency(const GroupData& g) {
    if (g.order > 2000) throw std::domain_error("adjacency matrix too large");
    RatMatrix a(g.order, RatVector(g.order, Rational(0)));
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t y = 0; y < g.order; ++y)
            if (!intersecting(g.perm(x), g.perm(y))) a[x][y] = 1;
    return a;
}

/// Row (i, j) of the n^2 x |G| incidence matrix of the canonical cocliques.
inline RatMatrix canonical_vectors(const GroupData& g) {
    RatMatrix v(g.n * g.n, RatVector(g.order, Rational(0)));
    for (std::size_t x = 0; x < g.order; ++x) {
        const auto p = g.perm(x);
        for (std::size_t i = 0; i < g.n; ++i) v[i * g.n + p[i]][x] = 1;
    }
    return v;
}

inline RatVector indicator(const GroupData& g, const std::vector<std::size_t>& set) {
    RatVector v(g.order, Rational(0));
    for (std::size_t x : set) v.at(x) = 1;
    return v;
}

/// Whether vec lies in the span of the canonical coclique vectors (dense elimination).
inline bool perm_module_membership(const GroupData& g, const RatVector& vec) {
    if (vec.size() != g.order) throw std::invalid_argument("dimension mismatch");
    RatMatrix m = canonical_vectors(g);
    const std::size_t base = rank(m);
    m.push_back(vec);
    return rank(std::move(m)) == base;
}

struct ModuleRank {
    std::size_t lower = 0;          // rank mod p of the Gram matrix
    std::size_t relations = 0;      // independent integer relations among the v_ij, verified exactly
    std::size_t upper = 0;          // n^2 - relations
    bool relations_verified = false;

    bool certified() const { return relations_verified && lower == upper; }
};

/// Exact rank of span{v_ij}: rank_Q(V) = rank_Q(V V^T) >= rank_p(V V^T), and rank_Q(V) <= n^2 - (independent relations).
inline ModuleRank module_rank(const GroupData& g, std::uint64_t p = 2147483647ULL) {
    const std::size_t n = g.n;
    const std::size_t nn = n * n;
    std::vector<std::vector<std::uint64_t>> gram(nn, std::vector<std::uint64_t>(nn, 0));
    for (std::size_t x = 0; x < g.order; ++x) {
        const auto s = g.perm(x);
        for (std::size_t i = 0; i < n; ++i) {
            auto& row = gram[i * n + s[i]];
            for (std::size_t k = 0; k < n; ++k) ++row[k * n + s[k]];
        }
    }
    ModuleRank r;
    r.lower = rank_mod_p(std::move(gram), p);

    // sum_j v_ij - sum_j v_0j = 0 (i >= 1) and sum_i v_ij - sum_i v_i0 = 0 (j >= 1).
    RatMatrix coeffs;
    for (std::size_t i = 1; i < n; ++i) {
        RatVector c(nn, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            c[i * n + j] += 1;
            c[j] -= 1;
        }
        coeffs.push_back(std::move(c));
    }
    for (std::size_t j = 1; j < n; ++j) {
        RatVector c(nn, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            c[i * n + j] += 1;
            c[i * n] -= 1;
        }
        coeffs.push_back(std::move(c));
    }
    r.relations_verified = true;
    for (const RatVector& c : coeffs) {
        for (std::size_t x = 0; x < g.order && r.relations_verified; ++x) {
            const auto s = g.perm(x);
            Rational acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += c[i * n + s[i]];
            if (acc != 0) r.relations_verified = false;
        }
    }
    r.relations = rank(coeffs);
    r.upper = nn - r.relations;
    return r;
}

struct CoverReport {
    std::size_t components = 0;
    std::vector<std::size_t> component_sizes;
    bool all_complete = false;
    std::size_t max_coclique_size = 0;
    BigInt max_coclique_count;
};

inline std::vector<std::uint32_t> derangement_components(const GroupData& g) {
    detail::UnionFind uf(g.order);
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t y = x + 1; y < g.order; ++y)
            if (!intersecting(g.perm(x), g.perm(y))) uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
    std::vector<std::uint32_t> comp(g.order);
    std::map<std::uint32_t, std::uint32_t> label;
    for (std::size_t x = 0; x < g.order; ++x) {
        const std::uint32_t r = uf.find(static_cast<std::uint32_t>(x));
        auto it = label.try_emplace(r, static_cast<std::uint32_t>(label.size())).first;
        comp[x] = it->second;
    }
    return comp;
}

/// Exhaustive structure of the q = 2 derangement graph: disjoint complete components.
inline CoverReport max_cocliques_q2(const GroupData& g) {
    if (g.q != 2) throw std::domain_error("exhaustive structure check is q=2 only");
    const std::vector<std::uint32_t> comp = derangement_components(g);
    CoverReport r;
    r.components = 1 + *std::max_element(comp.begin(), comp.end());
    r.component_sizes.assign(r.components, 0);
    for (std::uint32_t c : comp) ++r.component_sizes[c];
    r.all_complete = true;
    for (std::size_t x = 0; x < g.order; ++x)
        for (std::size_t y = x + 1; y < g.order; ++y)
            if (comp[x] == comp[y] && intersecting(g.perm(x), g.perm(y))) r.all_complete = false;
    // In a disjoint union of cliques a maximum coclique takes one vertex from each clique.
    if (r.all_complete) {
        r.max_coclique_size = r.components;
        r.max_coclique_count = 1;
        for (std::size_t s : r.component_sizes) r.max_coclique_count *= s;
    }
    return r;
}

/// S_00 with its least element replaced by the next vertex of the same component.
inline std::vector<std::size_t> noncanonical_max_coclique_q2(const GroupData& g) {
    if (g.q != 2) throw std::domain_error("exhaustive structure check is q=2 only");
    const std::vector<std::uint32_t> comp = derangement_components(g);
    std::vector<std::size_t> s = canonical_coclique(g, 0, 0);
    const std::size_t out = s.front();
    for (std::size_t y = 0; y < g.order; ++y) {
        if (y != out && comp[y] == comp[out]) {
            s.front() = y;
            std::sort(s.begin(), s.end());
            return s;
        }
    }
    throw std::logic_error("component of the identity is a single vertex");
}

/// Rank of the span of all maximum cocliques at q = 2: S_00 plus every swap within a component.
inline std::size_t max_coclique_span_rank_q2(const GroupData& g) {
    if (g.q != 2) throw std::domain_error("exhaustive structure check is q=2 only");
    const std::vector<std::uint32_t> comp = derangement_components(g);
    const std::vector<std::size_t> s00 = canonical_coclique(g, 0, 0);
    RatMatrix m{indicator(g, s00)};
    for (std::size_t s : s00)
        for (std::size_t t = 0; t < g.order; ++t) {
            if (t == s || comp[t] != comp[s]) continue;
            RatVector v(g.order, Rational(0));
            v[t] = 1;
            v[s] = -1;
            m.push_back(std::move(v));
        }
    return rank(std::move(m));
}

inline bool is_coclique(const GroupData& g, const std::vector<std::size_t>& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!intersecting(g.perm(set[a]), g.perm(set[b]))) return false;
    return true;
}

inline bool is_canonical(const GroupData& g, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            if (canonical_coclique(g, i, j) == set) return true;
    return false;
}

}  // namespace psu3ekr
