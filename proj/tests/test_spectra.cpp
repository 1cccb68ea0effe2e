#include "psu3ekr/spectra.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace psu3ekr;

namespace {

using Cplx = std::complex<long double>;

std::vector<int> qs(int lo, int hi, int gcd = 0) {
    std::vector<int> out;
    for (int q = lo; q <= hi; ++q)
        if (is_prime_power(q) && (gcd == 0 || gcd3(q) == gcd)) out.push_back(q);
    return out;
}

const EigenRow& row(const std::vector<EigenRow>& rows, const std::string& family, const std::string& param = "") {
    for (const EigenRow& r : rows)
        if (r.family == family && r.param.value_or("") == param) return r;
    throw std::runtime_error("missing row " + family + "[" + param + "]");
}

Rational R(const BigInt& n, const BigInt& d = 1) { return Rational(n, d); }

Cplx root(int n, std::int64_t k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(mod_floor(k, n)) / n;
    return {std::cos(angle), std::sin(angle)};
}

std::int64_t nearest(Cplx z) {
    const long double r = std::round(z.real());
    EXPECT_LT(std::abs(z - Cplx(r, 0)), 1e-8L);
    return static_cast<std::int64_t>(r);
}

/// Sum over T and all orderings of each triple of e^{u k + v l + w m} in long double.
std::int64_t numeric_permuted(const TripleSet& ts, const Triple& p) {
    Cplx s = 0;
    for (const Triple& t : ts.triples) {
        std::array<int, 3> xs{t.k, t.l, t.m};
        do {
            s += root(ts.q + 1, static_cast<std::int64_t>(p.k) * xs[0] + static_cast<std::int64_t>(p.l) * xs[1] +
                                    static_cast<std::int64_t>(p.m) * xs[2]);
        } while (std::next_permutation(xs.begin(), xs.end()));
    }
    return nearest(s);
}

std::int64_t numeric_power(const TripleSet& ts, std::int64_t s) {
    Cplx acc = 0;
    for (const Triple& t : ts.triples)
        for (int x : {t.k, t.l, t.m}) acc += root(ts.q + 1, s * x);
    return nearest(acc);
}

}  // namespace

TEST(GroupOrder, SmallValues) {
    EXPECT_EQ(group_order(2), 72);
    EXPECT_EQ(group_order(3), 6048);
    EXPECT_EQ(group_order(4), 62400);
    EXPECT_EQ(group_order(5), 126000);
}

TEST(TableGamma, KnownValues) {
    EXPECT_EQ(row(table_gamma(3, Graph::gamma1), "trivial").lambda, 1728);
    EXPECT_EQ(row(table_gamma(3, Graph::gamma2), "chi1").lambda, 126);
    EXPECT_EQ(row(table_gamma(2, Graph::gamma3), "trivial").lambda, 8);
}

TEST(TableGamma, Gamma3RequiresGcd3) {
    EXPECT_THROW(table_gamma(3, Graph::gamma3), std::domain_error);
    EXPECT_THROW(table_gamma(3, Graph::union_all), std::invalid_argument);
    EXPECT_NO_THROW(table_gamma(5, Graph::gamma3));
}

TEST(TableGamma, UnionIsSumOfGraphs) {
    for (int q : qs(2, 32)) {
        const auto u = table_union(q);
        const auto g1 = table_gamma(q, Graph::gamma1);
        const auto g2 = table_gamma(q, Graph::gamma2);
        for (std::size_t i = 0; i < u.size(); ++i) {
            Rational sum = g1[i].lambda + g2[i].lambda;
            if (gcd3(q) == 3) sum += table_gamma(q, Graph::gamma3)[i].lambda;
            EXPECT_EQ(u[i].lambda, sum) << q << " " << u[i].label();
            EXPECT_EQ(u[i].lambda_over_order * Rational(group_order(q)), u[i].lambda);
        }
    }
}

TEST(TableUnion, KnownValues) {
    EXPECT_EQ(row(table_union(3), "chi1").lambda, -162);
    EXPECT_EQ(row(table_union(2), "chi2").lambda, -1);
    EXPECT_EQ(row(table_union(2), "chi1").lambda, 8);
}

TEST(TableUnion, ClosedFormRowsGcd1) {
    for (int q : qs(3, 64, 1)) {
        const auto t = table_union(q);
        const BigInt G = group_order(q);
        const BigInt Q = q;
        const BigInt d3 = Q * Q - Q + 1;
        const BigInt s = (Q + 1) * (Q + 1);
        EXPECT_EQ(row(t, "trivial").lambda, R(G * (Q * Q - Q) * (Q * Q + Q + 1), 2 * d3 * s)) << q;
        EXPECT_EQ(row(t, "chi1").lambda, R(-G * Q, d3 * s)) << q;
        EXPECT_EQ(row(t, "chi2").lambda, R(-G * (Q - 1) * (Q * Q + Q + 1), 2 * Q * Q * s * d3)) << q;
        EXPECT_EQ(row(t, "chi3", "u!=(q+1)/2").lambda, R(G, d3 * s)) << q;
        EXPECT_EQ(row(t, "chi4", "u!=(q+1)/2").lambda, R(-G, Q * d3 * s)) << q;
        EXPECT_EQ(row(t, "chi6").lambda, 0) << q;
        EXPECT_EQ(row(t, "chi7").lambda, R(G, d3 * s * (Q - 1))) << q;
    }
}

TEST(TableUnion, ClosedFormRowsGcd3) {
    for (int q : qs(2, 64, 3)) {
        const auto t = table_union(q);
        const BigInt G = group_order(q);
        const BigInt Q = q;
        const BigInt d3 = Q * Q - Q + 1;
        const BigInt s = (Q + 1) * (Q + 1);
        EXPECT_EQ(row(t, "trivial").lambda, R(G * (Q * Q * Q * Q - 5 * Q), 2 * d3 * s)) << q;
        EXPECT_EQ(row(t, "chi1").lambda, R(-G * (Q * Q * Q - 3 * Q * Q - 2), Q * (Q - 1) * s * d3)) << q;
        EXPECT_EQ(row(t, "chi2").lambda, R(-G * (Q * Q * Q - 5), 2 * Q * Q * d3 * s)) << q;
        EXPECT_EQ(row(t, "chi3", "u!=(q+1)/6").lambda, R(3 * G, d3 * s)) << q;
        EXPECT_EQ(row(t, "chi4", "u!=(q+1)/6").lambda, R(-3 * G, Q * d3 * s)) << q;
        EXPECT_EQ(row(t, "chi7").lambda, 0) << q;
        EXPECT_EQ(row(t, "chi8").lambda, R(3 * G, d3 * s * (Q - 1))) << q;
    }
}

TEST(TableUnion, ClassNumberMatchesCharacterCount) {
    // k(PSU(3,q)) = q^2+q+2 when 3 does not divide q+1, else (q^2+q+12)/3.
    for (int q : qs(2, 64)) {
        std::int64_t total = 0;
        for (const EigenRow& r : table_union(q)) {
            EXPECT_GE(r.count, 0);
            total += r.count;
        }
        const std::int64_t want = gcd3(q) == 1 ? q * q + q + 2 : (q * q + q + 12) / 3;
        EXPECT_EQ(total, want) << q;
    }
}

TEST(TableUnion, DeterministicRowOrder) {
    const auto a = table_union(8);
    const auto b = table_union(8);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].label(), b[i].label());
        EXPECT_EQ(a[i].lambda, b[i].lambda);
    }
}

TEST(TableUnion, EmptyFamiliesKeptWithZeroCount) {
    const auto t = table_union(2);
    EXPECT_EQ(row(t, "chi3", "u!=(q+1)/6").count, 0);
    EXPECT_EQ(row(t, "chi7").count, 0);
    EXPECT_EQ(row(t, "chi8").count, 0);
    EXPECT_EQ(row(table_union(4), "chi3", "u=(q+1)/2").count, 0);
}

TEST(Sanity, KnownValues) {
    const SanityReport s2 = sanity(table_union(2), 2);
    EXPECT_TRUE(s2.ok());
    EXPECT_EQ(s2.degree_sum, 72);
    EXPECT_EQ(sanity(table_union(3), 3).degree_sum, 6048);
    EXPECT_EQ(sanity(table_union(5), 5).trace, 0);
}

TEST(Sanity, HoldsForAllPrimePowersUpTo64) {
    for (int q : qs(2, 64)) {
        const SanityReport s = sanity(table_union(q), q);
        EXPECT_TRUE(s.degrees_ok) << q;
        EXPECT_TRUE(s.trace_ok) << q;
        EXPECT_TRUE(s.offending.empty());
    }
}

TEST(Sanity, ReportsOffendingRows) {
    auto rows = table_union(3);
    rows[1].lambda += 1;
    const SanityReport s = sanity(rows, 3);
    EXPECT_TRUE(s.degrees_ok);
    EXPECT_FALSE(s.trace_ok);
    EXPECT_FALSE(s.offending.empty());
}

TEST(PerCharacterOracle, Gcd1Gamma2Rows) {
    for (int q : qs(3, 23, 1)) {
        const TripleSet ts = enumerate_T(q);
        const auto g2 = table_gamma(q, Graph::gamma2);
        const Rational c2 = Rational(group_order(q), (q + 1) * (q + 1));
        const BigInt d3 = BigInt(q) * q - q + 1;
        for (int u = 1; u <= q; ++u) {
            const std::string p = q % 2 == 1 && 2 * u == q + 1 ? "u=(q+1)/2" : "u!=(q+1)/2";
            const Rational s(numeric_power(ts, 3LL * u));
            EXPECT_EQ(row(g2, "chi3", p).lambda, c2 * s / d3) << q << " " << u;
            EXPECT_EQ(row(g2, "chi4", p).lambda, -c2 * s / (q * d3)) << q << " " << u;
        }
        for (const Triple& t : ts.triples) {
            const std::string p = t.contains(q + 1) ? "contains q+1" : "excludes q+1";
            const Rational s(numeric_permuted(ts, t));
            EXPECT_EQ(row(g2, "chi5", p).lambda, -c2 * s / ((q - 1) * d3)) << q;
        }
    }
}

TEST(PerCharacterOracle, Gcd3Gamma2AndGamma3Rows) {
    for (int q : qs(2, 23, 3)) {
        const TripleSet ts = enumerate_T(q);
        const auto g2 = table_gamma(q, Graph::gamma2);
        const auto g3 = table_gamma(q, Graph::gamma3);
        const BigInt G = group_order(q);
        const Rational c2(3 * G, (q + 1) * (q + 1));
        const Rational c3(G, (q + 1) * (q + 1));
        const BigInt d3 = BigInt(q) * q - q + 1;
        const int third = (q + 1) / 3;
        for (int u = 1; u <= third - 1; ++u) {
            const std::string p = q % 2 == 1 && 6 * u == q + 1 ? "u=(q+1)/6" : "u!=(q+1)/6";
            const Rational s(numeric_power(ts, 3LL * u));
            EXPECT_EQ(row(g2, "chi3", p).lambda, c2 * s / d3) << q;
            EXPECT_EQ(row(g3, "chi3", p).lambda, c3 * 3 / d3) << q;
        }
        Cplx w = 0;
        for (const Triple& t : ts.triples) w += root(3, t.k - t.l) + root(3, t.l - t.k);
        const std::string p5 = "q+1=" + std::to_string((q + 1) % 9) + " mod 9";
        EXPECT_EQ(row(g2, "chi5", p5).lambda, -c2 * nearest(w) * 3 / ((q - 1) * d3)) << q;
        for (const Triple& t : ts.triples) {
            const bool diff = mod_floor(t.l - t.k, 3) == 0;
            const bool multiple = t.k % third == 0 || t.l % third == 0 || t.m % third == 0;
            const std::string p = std::string(diff ? "v=u mod 3, " : "v!=u mod 3, ") + (multiple ? "multiple" : "no multiple");
            const Rational s(numeric_permuted(ts, t));
            const Cplx gam = -3.0L * (root(3, t.k - t.l) + root(3, t.l - t.k));
            EXPECT_EQ(row(g2, "chi6", p).lambda, -c2 * s / ((q - 1) * d3)) << q;
            EXPECT_EQ(row(g3, "chi6", p).lambda, c3 * nearest(gam) / ((q - 1) * d3)) << q;
        }
    }
}

TEST(Hoffman, Q3) {
    const BoundReport b = hoffman(3, table_union(3));
    EXPECT_EQ(b.bound, 432);
    EXPECT_EQ(b.bound, 2 * 27 * 4 * 2);
    EXPECT_GT(b.bound, 216);
    EXPECT_FALSE(b.tight);
    EXPECT_EQ(b.degree, 2106);
    EXPECT_EQ(b.tau, -162);
}

TEST(Hoffman, Q2IsTight) {
    const BoundReport b = hoffman(2, table_union(2));
    EXPECT_EQ(b.degree, 8);
    EXPECT_EQ(b.tau, -1);
    EXPECT_EQ(b.bound, 8);
    EXPECT_TRUE(b.tight);
}

TEST(Hoffman, NeverBelowCanonicalSize) {
    for (int q : qs(2, 64)) {
        const BoundReport b = hoffman(q, table_union(q));
        EXPECT_GE(b.bound, Rational(group_order(q), num_points(q))) << q;
    }
}

TEST(RatioBound, RejectsNonNegativeTau) { EXPECT_THROW(ratio_bound(3, 10, 0), std::domain_error); }

TEST(Weights, Q3) {
    const auto [a, b] = weights(3);
    EXPECT_EQ(a, Rational(5, 432));
    EXPECT_EQ(b, Rational(1, 54));
    EXPECT_EQ(a * 1728 + b * 378, 27);
}

TEST(Weights, PositiveAtQ5AndUndefinedAtQ2) {
    const auto [a, b] = weights(5);
    EXPECT_GT(a, 0);
    EXPECT_GT(b, 0);
    EXPECT_THROW(
        {
            try {
                weights(2);
            } catch (const std::domain_error& e) {
                EXPECT_STREQ(e.what(), "weights undefined at q=2");
                throw;
            }
        },
        std::domain_error);
    EXPECT_THROW(table_weighted(2), std::domain_error);
}

TEST(Weights, WeightedDegreeIsQCubed) {
    for (int q : qs(3, 64)) {
        const auto [a, b] = weights(q);
        const auto g1 = table_gamma(q, Graph::gamma1);
        const auto g2 = table_gamma(q, Graph::gamma2);
        Rational deg = a * row(g1, "trivial").lambda + b * row(g2, "trivial").lambda;
        if (gcd3(q) == 3) deg += b * row(table_gamma(q, Graph::gamma3), "trivial").lambda;
        EXPECT_EQ(deg, BigInt(q) * q * q) << q;
    }
}

TEST(TableWeighted, KnownValues) {
    const WeightedSpec w3 = table_weighted(3);
    EXPECT_EQ(row(w3.rows, "trivial").lambda, 27);
    EXPECT_EQ(row(w3.rows, "chi3", "u!=(q+1)/2").lambda, 1);
    EXPECT_EQ(row(table_weighted(5).rows, "chi4", "u!=(q+1)/6").lambda, Rational(-1, 4));
}

TEST(TableWeighted, ExtremesAndPinnedRows) {
    for (int q : qs(3, 64)) {
        const WeightedSpec w = table_weighted(q);
        EXPECT_EQ(greatest_eigenvalue(w.rows), BigInt(q) * q * q) << q;
        EXPECT_EQ(least_eigenvalue(w.rows), -1) << q;
        EXPECT_EQ(row(w.rows, "chi1").lambda, -1) << q;
        EXPECT_EQ(row(w.rows, "chi2").lambda, -1) << q;
    }
}

TEST(TableWeighted, ClosedFormRowsGcd1) {
    for (int q : qs(3, 64, 1)) {
        const auto& rows = table_weighted(q).rows;
        EXPECT_EQ(row(rows, "chi3", "u!=(q+1)/2").lambda, Rational(2, q - 1)) << q;
        EXPECT_EQ(row(rows, "chi4", "u!=(q+1)/2").lambda, Rational(-2, q * (q - 1))) << q;
        EXPECT_EQ(row(rows, "chi6").lambda, 0) << q;
        EXPECT_EQ(row(rows, "chi7").lambda, Rational(2 * q - 1, (q - 1) * (q - 1) * (q + 1))) << q;
        if (q % 2 == 1) {
            EXPECT_EQ(row(rows, "chi3", "u=(q+1)/2").lambda, -1) << q;
            EXPECT_EQ(row(rows, "chi4", "u=(q+1)/2").lambda, Rational(1, q)) << q;
        }
    }
}

TEST(TableWeighted, ClosedFormRowsGcd3) {
    for (int q : qs(5, 64, 3)) {
        const auto& rows = table_weighted(q).rows;
        const std::int64_t den = q * q - q + 4;
        EXPECT_EQ(row(rows, "chi3", "u!=(q+1)/6").lambda, Rational(6 * q, den)) << q;
        EXPECT_EQ(row(rows, "chi4", "u!=(q+1)/6").lambda, Rational(-6, den)) << q;
        EXPECT_EQ(row(rows, "chi7").lambda, 0) << q;
        EXPECT_EQ(row(rows, "chi8").lambda, Rational(3 * q * (2 * q - 1), (q - 1) * (q + 1) * (q * q - q - 2))) << q;
    }
}

TEST(WeightedBound, KnownValues) {
    EXPECT_EQ(weighted_bound(3).bound, 216);
    EXPECT_EQ(weighted_bound(5).bound, 1000);
    EXPECT_EQ(weighted_bound(4).bound, Rational(group_order(4), 65));
}

TEST(WeightedBound, TightEverywhereDefined) {
    for (int q : qs(3, 64)) {
        const BoundReport b = weighted_bound(q);
        EXPECT_TRUE(b.tight) << q;
        EXPECT_EQ(b.bound * Rational(num_points(q)), Rational(group_order(q))) << q;
    }
}

TEST(Condition2, KnownValues) {
    const Condition2Report c3 = check_condition2(3);
    EXPECT_TRUE(c3.holds);
    EXPECT_EQ(c3.target, -78);
    EXPECT_EQ(c3.attaining, std::vector<std::string>{"chi2"});

    const Condition2Report c5 = check_condition2(5);
    EXPECT_FALSE(c5.holds);
    EXPECT_NE(std::find(c5.attaining.begin(), c5.attaining.end(), "chi1"), c5.attaining.end());
    EXPECT_NE(std::find(c5.attaining.begin(), c5.attaining.end(), "chi2"), c5.attaining.end());
    EXPECT_EQ(c5.target, -Rational(row(table_union(5), "trivial").lambda) / 125);

    const Condition2Report c2 = check_condition2(2);
    EXPECT_TRUE(c2.holds);
    EXPECT_EQ(c2.attaining, std::vector<std::string>{"chi2"});
}

TEST(Condition2, HoldsExceptAtQ5) {
    for (int q : qs(2, 64)) EXPECT_EQ(check_condition2(q).holds, q != 5) << q;
}

TEST(Verdict, KnownValues) {
    EXPECT_TRUE(ekr_module_verdict(3).certified);
    EXPECT_EQ(ekr_module_verdict(3).status, "EKR-module property certified");
    const VerdictReport v5 = ekr_module_verdict(5);
    EXPECT_FALSE(v5.certified);
    EXPECT_EQ(v5.status, "not certified: condition 2 fails");
    EXPECT_TRUE(ekr_module_verdict(7).certified);
    const VerdictReport v2 = ekr_module_verdict(2);
    EXPECT_FALSE(v2.weighted_tight.has_value());
    EXPECT_EQ(v2.status, "weights undefined at q=2; module property holds by exhaustive module check");
}
