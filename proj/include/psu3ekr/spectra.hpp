#pragma once

// Eigenvalue tables of the derangement graph of PSU(3,q) and of its per-class
// subgraphs, ratio bounds, and the weighted adjacency matrix.
//
// Every eigenvalue is lambda_psi = sum_C |C| psi(c_C) / psi(1) over the
// derangement classes C of one family, computed from the partial character
// tables with the root-of-unity sums taken from module triples.
//
// Class families:
//   gcd 1: C1 = (q^2-q)/3 classes of size |G|/(q^2-q+1), C2 = |T| classes of size |G|/(q+1)^2.
//   gcd 3: C1 = (q^2-q-2)/9 classes of size 3|G|/(q^2-q+1), C2 = |T| classes of size 3|G|/(q+1)^2,
//          C3 = one class of size |G|/(q+1)^2.

#include "psu3ekr/numeric.hpp"
#include "psu3ekr/triples.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace psu3ekr {

enum class Graph { gamma1, gamma2, gamma3, union_all, weighted };

struct EigenRow {
    std::string family;
    std::optional<std::string> param;
    std::int64_t count = 0;
    BigInt dim;
    Rational lambda;
    Rational lambda_over_order;
    std::string provenance;  // "closed-form" or "enumerated"

    std::string label() const { return param ? family + "[" + *param + "]" : family; }
};

/// A character row with its eigenvalue on each per-family graph.
struct SplitRow {
    std::string family;
    std::optional<std::string> param;
    std::int64_t count = 0;
    BigInt dim;
    Rational g1;
    Rational g2;
    Rational g3;
    std::string provenance;
};

struct BoundReport {
    Rational degree;
    Rational tau;
    Rational bound;
    bool tight = false;
};

struct WeightedSpec {
    Rational a;
    Rational b;
    std::vector<EigenRow> rows;
};

struct SanityReport {
    BigInt order;
    BigInt degree_sum;
    Rational trace;
    bool degrees_ok = false;
    bool trace_ok = false;
    std::vector<std::string> offending;  // rows of the failing identity, empty when both hold

    bool ok() const { return degrees_ok && trace_ok; }
};

struct Condition2Report {
    Rational target;  // -d/(n-1)
    std::vector<std::string> attaining;
    bool holds = false;
};

struct VerdictReport {
    int q = 0;
    bool certified = false;
    std::optional<bool> weighted_tight;
    bool condition2_holds = false;
    std::string status;
};

inline BigInt group_order(int q) {
    require_prime_power(q);
    const BigInt Q = q;
    return (Q * Q - Q + 1) * Q * Q * Q * (Q + 1) * (Q + 1) * (Q - 1) / gcd3(q);
}

inline std::int64_t num_points(int q) { return static_cast<std::int64_t>(q) * q * q + 1; }

namespace detail {

/// The common value of the enumerated sums of one row, or the closed form when the row is empty.
class RowValue {
public:
    explicit RowValue(Rational closed_form) : closed_(std::move(closed_form)) {}
    void add(const BigInt& v, const std::string& row) {
        if (value_ && *value_ != v) throw std::logic_error("enumerated sums disagree within row " + row);
        value_ = v;
    }
    Rational value() const { return value_ ? Rational(*value_) : closed_; }
    std::string provenance() const { return value_ ? "enumerated" : "closed-form"; }

private:
    Rational closed_;
    std::optional<BigInt> value_;
};

inline std::vector<SplitRow> split_rows_gcd1(int q) {
    const BigInt G = group_order(q);
    const BigInt Q = q;
    const BigInt d3 = Q * Q - Q + 1;
    const TripleSet ts = enumerate_T(q);
    const BigInt nT = static_cast<std::int64_t>(ts.triples.size());
    const BigInt c1n = (Q * Q - Q) / 3;
    const Rational c1s(G, d3);
    const Rational c2s(G, (Q + 1) * (Q + 1));

    std::vector<SplitRow> rows;
    auto push = [&](std::string fam, std::optional<std::string> param, std::int64_t count, const BigInt& dim,
                    const Rational& s1, const Rational& s2, std::string prov) {
        rows.push_back({std::move(fam), std::move(param), count, dim, c1s * s1 / dim, c2s * s2 / dim, Rational(0),
                        std::move(prov)});
    };

    push("trivial", std::nullopt, 1, 1, Rational(c1n), Rational(nT), "closed-form");
    push("chi1", std::nullopt, 1, Q * (Q - 1), Rational(-c1n), Rational(2 * nT), "closed-form");
    push("chi2", std::nullopt, 1, Q * Q * Q, Rational(-c1n), Rational(-nT), "closed-form");

    const bool odd = q % 2 == 1;
    RowValue half(Rational(-(q - 1), 2));
    RowValue other(Rational(1));
    for (int u = 1; u <= q; ++u) {
        const BigInt s = chi3_sum(q, u);
        if (odd && 2 * u == q + 1)
            half.add(s, "chi3[u=(q+1)/2]");
        else
            other.add(s, "chi3[u!=(q+1)/2]");
    }
    const std::int64_t half_count = odd ? 1 : 0;
    const std::int64_t other_count = odd ? q - 1 : q;
    push("chi3", "u=(q+1)/2", half_count, d3, 0, half.value(), half.provenance());
    push("chi3", "u!=(q+1)/2", other_count, d3, 0, other.value(), other.provenance());
    push("chi4", "u=(q+1)/2", half_count, Q * d3, 0, -half.value(), half.provenance());
    push("chi4", "u!=(q+1)/2", other_count, Q * d3, 0, -other.value(), other.provenance());

    RowValue with_top(Rational(-(q - 1)));
    RowValue without_top(Rational(2));
    std::int64_t with_count = 0;
    for (const Triple& t : ts.triples) {
        const BigInt s = chi5_sum(q, t);
        if (t.contains(q + 1)) {
            with_top.add(s, "chi5[contains q+1]");
            ++with_count;
        } else {
            without_top.add(s, "chi5[excludes q+1]");
        }
    }
    const BigInt d5 = (Q - 1) * d3;
    const std::int64_t without_count = static_cast<std::int64_t>(ts.triples.size()) - with_count;
    push("chi5", "contains q+1", with_count, d5, 0, -with_top.value(), with_top.provenance());
    push("chi5", "excludes q+1", without_count, d5, 0, -without_top.value(), without_top.provenance());

    push("chi6", std::nullopt, static_cast<std::int64_t>((q * q - q - 2) / 2), (Q + 1) * d3, 0, 0, "closed-form");
    push("chi7", std::nullopt, static_cast<std::int64_t>((q * q - q) / 3), (Q + 1) * (Q + 1) * (Q - 1), 1, 0,
         "closed-form");
    return rows;
}

inline std::vector<SplitRow> split_rows_gcd3(int q) {
    const BigInt G = group_order(q);
    const BigInt Q = q;
    const BigInt d3 = Q * Q - Q + 1;
    const TripleSet ts = enumerate_T(q);
    const BigInt nT = static_cast<std::int64_t>(ts.triples.size());
    const int third = (q + 1) / 3;
    const BigInt c1n = (Q * Q - Q - 2) / 9;
    const Rational c1s(3 * G, d3);
    const Rational c2s(3 * G, (Q + 1) * (Q + 1));
    const Rational c3s(G, (Q + 1) * (Q + 1));

    std::vector<SplitRow> rows;
    auto push = [&](std::string fam, std::optional<std::string> param, std::int64_t count, const BigInt& dim,
                    const Rational& s1, const Rational& s2, const Rational& s3, std::string prov) {
        rows.push_back({std::move(fam), std::move(param), count, dim, c1s * s1 / dim, c2s * s2 / dim, c3s * s3 / dim,
                        std::move(prov)});
    };

    push("trivial", std::nullopt, 1, 1, Rational(c1n), Rational(nT), 1, "closed-form");
    push("chi1", std::nullopt, 1, Q * (Q - 1), Rational(-c1n), Rational(2 * nT), 2, "closed-form");
    push("chi2", std::nullopt, 1, Q * Q * Q, Rational(-c1n), Rational(-nT), -1, "closed-form");

    const bool odd = q % 2 == 1;
    RowValue generic(Rational(0));
    RowValue sixth(Rational(-(q + 1), 6));
    std::int64_t generic_count = 0;
    std::int64_t sixth_count = 0;
    for (int u = 1; u <= third - 1; ++u) {
        const BigInt s = chi3_sum_gcd3(q, u);
        if (odd && 6 * u == q + 1) {
            sixth.add(s, "chi3[u=(q+1)/6]");
            ++sixth_count;
        } else {
            generic.add(s, "chi3[u!=(q+1)/6]");
            ++generic_count;
        }
    }
    push("chi3", "u!=(q+1)/6", generic_count, d3, 0, generic.value(), 3, generic.provenance());
    push("chi3", "u=(q+1)/6", sixth_count, d3, 0, sixth.value(), 3, sixth.provenance());
    push("chi4", "u!=(q+1)/6", generic_count, Q * d3, 0, -generic.value(), -3, generic.provenance());
    push("chi4", "u=(q+1)/6", sixth_count, Q * d3, 0, -sixth.value(), -3, sixth.provenance());

    const int r9 = (q + 1) % 9;
    const BigInt ws = omega_pair_sum(q);
    push("chi5", "q+1=" + std::to_string(r9) + " mod 9", 3, (Q - 1) * d3 / 3, 0, Rational(-ws), r9 == 0 ? -2 : 1,
         "enumerated");

    struct Branch {
        std::string param;
        bool diff;
        bool multiple;
        RowValue value;
        std::int64_t count = 0;
    };
    std::vector<Branch> branches{
        {"v=u mod 3, multiple", true, true, RowValue(Rational(-(q + 1), 3))},
        {"v=u mod 3, no multiple", true, false, RowValue(Rational(0))},
        {"v!=u mod 3, multiple", false, true, RowValue(Rational(8 - q, 3))},
        {"v!=u mod 3, no multiple", false, false, RowValue(Rational(3))},
    };
    for (const Triple& t : ts.triples) {
        const Chi6Sum s = chi6_sum(q, t);
        for (Branch& b : branches) {
            if (b.diff == s.difference_divisible && b.multiple == s.has_multiple) {
                b.value.add(s.value, "chi6[" + b.param + "]");
                ++b.count;
            }
        }
    }
    const BigInt d6 = (Q - 1) * d3;
    for (const Branch& b : branches) {
        const int g3v = b.diff ? chi6_gamma3_value(0, 0) : chi6_gamma3_value(0, 1);
        push("chi6", b.param, b.count, d6, 0, -b.value.value(), g3v, b.value.provenance());
    }

    push("chi7", std::nullopt, static_cast<std::int64_t>((q * q - q - 2) / 6), (Q + 1) * d3, 0, 0, 0, "closed-form");
    push("chi8", std::nullopt, static_cast<std::int64_t>((q * q - q - 2) / 9), (Q + 1) * (Q + 1) * (Q - 1), 1, 0, 0,
         "closed-form");
    return rows;
}

inline EigenRow make_row(const SplitRow& s, const Rational& lambda, const BigInt& order) {
    return EigenRow{s.family, s.param, s.count, s.dim, lambda, lambda / order, s.provenance};
}

}  // namespace detail

inline std::vector<SplitRow> split_rows(int q) {
    require_prime_power(q);
    return gcd3(q) == 1 ? detail::split_rows_gcd1(q) : detail::split_rows_gcd3(q);
}

inline std::vector<EigenRow> table_gamma(int q, Graph which) {
    require_prime_power(q);
    if (which == Graph::gamma3 && gcd3(q) == 1) throw std::domain_error("gamma3 exists only when 3 divides q+1");
    if (which != Graph::gamma1 && which != Graph::gamma2 && which != Graph::gamma3)
        throw std::invalid_argument("table_gamma takes gamma1, gamma2 or gamma3");
    const BigInt G = group_order(q);
    std::vector<EigenRow> out;
    for (const SplitRow& s : split_rows(q)) {
        const Rational& l = which == Graph::gamma1 ? s.g1 : which == Graph::gamma2 ? s.g2 : s.g3;
        out.push_back(detail::make_row(s, l, G));
    }
    return out;
}

inline std::vector<EigenRow> table_union(int q) {
    const BigInt G = group_order(q);
    std::vector<EigenRow> out;
    for (const SplitRow& s : split_rows(q)) out.push_back(detail::make_row(s, s.g1 + s.g2 + s.g3, G));
    return out;
}

inline SanityReport sanity(const std::vector<EigenRow>& rows, int q) {
    SanityReport r;
    r.order = group_order(q);
    r.degree_sum = 0;
    r.trace = 0;
    for (const EigenRow& row : rows) {
        const BigInt mult = BigInt(row.count) * row.dim * row.dim;
        r.degree_sum += mult;
        r.trace += Rational(mult) * row.lambda;
    }
    r.degrees_ok = r.degree_sum == r.order;
    r.trace_ok = r.trace == 0;
    if (!r.ok())
        for (const EigenRow& row : rows)
            if (row.count > 0) r.offending.push_back(row.label());
    return r;
}

inline const EigenRow& trivial_row(const std::vector<EigenRow>& rows) {
    for (const EigenRow& r : rows)
        if (r.family == "trivial") return r;
    throw std::invalid_argument("table has no trivial row");
}

inline Rational least_eigenvalue(const std::vector<EigenRow>& rows) {
    std::optional<Rational> tau;
    for (const EigenRow& r : rows)
        if (r.count > 0 && (!tau || r.lambda < *tau)) tau = r.lambda;
    if (!tau) throw std::invalid_argument("table has no nonempty rows");
    return *tau;
}

inline Rational greatest_eigenvalue(const std::vector<EigenRow>& rows) {
    std::optional<Rational> top;
    for (const EigenRow& r : rows)
        if (r.count > 0 && (!top || r.lambda > *top)) top = r.lambda;
    if (!top) throw std::invalid_argument("table has no nonempty rows");
    return *top;
}

inline BoundReport ratio_bound(int q, const Rational& degree, const Rational& tau) {
    if (tau >= 0) throw std::domain_error("ratio bound needs a negative least eigenvalue");
    BoundReport b;
    b.degree = degree;
    b.tau = tau;
    b.bound = Rational(group_order(q)) / (1 - degree / tau);
    b.tight = b.bound == Rational(group_order(q), num_points(q));
    return b;
}

inline BoundReport hoffman(int q, const std::vector<EigenRow>& rows) {
    return ratio_bound(q, trivial_row(rows).lambda, least_eigenvalue(rows));
}

/// Weight a on C1 classes and b on the remaining derangement classes.
inline std::pair<Rational, Rational> weights(int q) {
    require_prime_power(q);
    const BigInt G = group_order(q);
    const BigInt Q = q;
    const BigInt d3 = Q * Q - Q + 1;
    if (gcd3(q) == 1)
        return {Rational(d3 * (2 * Q * Q + Q - 1), G * (Q - 1)), Rational(2 * d3 * (Q + 1) * (Q + 1), G * (Q - 1))};
    if (q == 2) throw std::domain_error("weights undefined at q=2");
    return {Rational(Q * d3 * (2 * Q * Q + Q - 1), G * (Q * Q - Q - 2)),
            Rational(2 * Q * (Q + 1) * (Q + 1) * d3, G * (Q * Q - Q + 4))};
}

inline WeightedSpec table_weighted(int q) {
    const auto [a, b] = weights(q);
    const BigInt G = group_order(q);
    WeightedSpec w{a, b, {}};
    for (const SplitRow& s : split_rows(q)) w.rows.push_back(detail::make_row(s, a * s.g1 + b * (s.g2 + s.g3), G));
    return w;
}

inline BoundReport weighted_bound(int q) {
    const WeightedSpec w = table_weighted(q);
    return ratio_bound(q, greatest_eigenvalue(w.rows), least_eigenvalue(w.rows));
}

inline Condition2Report check_condition2(int q) {
    const std::vector<EigenRow> rows = table_union(q);
    Condition2Report c;
    c.target = -trivial_row(rows).lambda / Rational(num_points(q) - 1);
    const BigInt fix_dim = BigInt(q) * q * q;
    bool fix_row_attains = false;
    for (const EigenRow& r : rows) {
        if (r.count == 0 || r.lambda != c.target) continue;
        c.attaining.push_back(r.label());
        if (r.dim == fix_dim && r.count == 1) fix_row_attains = true;
    }
    c.holds = fix_row_attains && c.attaining.size() == 1;
    return c;
}

inline VerdictReport ekr_module_verdict(int q) {
    VerdictReport v;
    v.q = q;
    v.condition2_holds = check_condition2(q).holds;
    if (q == 2) {
        v.status = "weights undefined at q=2; module property holds by exhaustive module check";
        return v;
    }
    v.weighted_tight = weighted_bound(q).tight;
    v.certified = *v.weighted_tight && v.condition2_holds;
    if (v.certified)
        v.status = "EKR-module property certified";
    else if (!v.condition2_holds)
        v.status = "not certified: condition 2 fails";
    else
        v.status = "not certified: weighted bound not tight";
    return v;
}

}  // namespace psu3ekr
