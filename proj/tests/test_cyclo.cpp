#include "psu3ekr/cyclo.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace psu3ekr;

namespace {

using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

std::vector<BigInt> big(std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

CycInt random_cycint(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    CycInt x(n);
    for (int i = 0; i < n; ++i) x.add_root(i, coef(rng));
    return x;
}

}  // namespace

TEST(CyclotomicPoly, SmallOrders) {
    EXPECT_EQ(cyclotomic_poly(1).coeffs, big({-1, 1}));
    EXPECT_EQ(cyclotomic_poly(4).coeffs, big({1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(12).coeffs, big({1, 0, -1, 0, 1}));
    EXPECT_THROW(cyclotomic_poly(0), std::invalid_argument);
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
    for (int n = 1; n <= 64; ++n) {
        std::vector<BigInt> prod{BigInt(1)};
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic_poly(d).coeffs);
        std::vector<BigInt> want(static_cast<std::size_t>(n + 1), BigInt(0));
        want[0] = -1;
        want[n] = 1;
        EXPECT_EQ(prod, want) << "n=" << n;
    }
}

TEST(EqInteger, FullRootSumIsZero) {
    CycInt x(5);
    for (int i = 1; i <= 5; ++i) x.add_root(i);
    EXPECT_TRUE(eq_integer(x, 0));
}

TEST(EqInteger, RootIsNotOne) { EXPECT_FALSE(eq_integer(root_power(4, 1), 1)); }

TEST(EqInteger, EvenPowerSumOfEighthRoots) {
    CycInt x(8);
    for (int i = 2; i <= 8; i += 2) x.add_root(i);
    EXPECT_TRUE(eq_integer(x, 0));
    EXPECT_EQ(x.to_integer(), BigInt(0));
}

TEST(EqInteger, CubeRootPairSumsToMinusOne) {
    CycInt x(3);
    x.add_root(1);
    x.add_root(2);
    EXPECT_TRUE(eq_integer(x, -1));
    EXPECT_EQ(require_integer(x, "test"), BigInt(-1));
    EXPECT_THROW(require_integer(root_power(3, 1), "test"), std::logic_error);
}

TEST(EqInteger, AgreesWithHighPrecisionEvaluation) {
    std::mt19937_64 rng(11);
    const Float200 tol("1e-30");
    const Float200 two_pi = 2 * boost::math::constants::pi<Float200>();
    for (int n : {3, 4, 6, 8, 12, 24}) {
        std::vector<Float200> re(n);
        std::vector<Float200> im(n);
        for (int i = 0; i < n; ++i) {
            const Float200 angle = two_pi * i / n;
            re[i] = cos(angle);
            im[i] = sin(angle);
        }
        int integral = 0;
        for (int t = 0; t < 1000; ++t) {
            CycInt x = random_cycint(n, rng);
            // Half the samples are forced to be integers by adding a multiple of the full root sum of a divisor order.
            if (t % 2 == 0) {
                x = CycInt(n);
                std::uniform_int_distribution<int> coef(-3, 3);
                x.add_root(0, coef(rng));
                for (int d = 2; d <= n; ++d) {
                    if (n % d != 0) continue;
                    const int c = coef(rng);
                    for (int k = 0; k < d; ++k) x.add_root(static_cast<std::int64_t>(k) * (n / d), c);
                }
            }
            Float200 sr = 0;
            Float200 si = 0;
            for (int i = 0; i < n; ++i) {
                sr += Float200(x.coeffs()[i].str()) * re[i];
                si += Float200(x.coeffs()[i].str()) * im[i];
            }
            const Float200 nearest = round(sr);
            const bool numeric = abs(sr - nearest) < tol && abs(si) < tol;
            const BigInt c(nearest.convert_to<long long>());
            ASSERT_EQ(eq_integer(x, c), numeric) << "n=" << n << " sample " << t;
            if (numeric) ++integral;
        }
        EXPECT_GE(integral, 500);
    }
}

TEST(CycIntRing, RandomizedRingLaws) {
    std::mt19937_64 rng(5);
    for (int n : {3, 4, 5, 6, 12}) {
        for (int t = 0; t < 50; ++t) {
            const CycInt a = random_cycint(n, rng);
            const CycInt b = random_cycint(n, rng);
            const CycInt c = random_cycint(n, rng);
            EXPECT_TRUE((a + b) + c == a + (b + c));
            EXPECT_TRUE((a * b) * c == a * (b * c));
            EXPECT_TRUE(a * (b + c) == a * b + a * c);
            EXPECT_TRUE(a * b == b * a);
            EXPECT_TRUE((a - a) == CycInt(n));
        }
    }
}

TEST(CycIntRing, RootPowersReduceModN) {
    EXPECT_TRUE(eq_integer(root_power(4, 0), 1));
    EXPECT_TRUE(root_power(4, 6) == root_power(4, 2));
    EXPECT_TRUE(root_power(6, 7) == root_power(6, 1));
    EXPECT_TRUE(root_power(6, -1) == root_power(6, 5));
    EXPECT_TRUE(root_power(4, 2) == CycInt::integer(4, -1));
    EXPECT_THROW(CycInt(3) + CycInt(4), std::invalid_argument);
}
