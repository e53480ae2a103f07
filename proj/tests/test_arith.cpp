#include <gtest/gtest.h>

#include <random>
#include <set>

#include <wphyp/arith.hpp>

using namespace wphyp;

TEST(GcdAll, Examples) {
    EXPECT_EQ(gcd_all(std::vector<Int>{4, 6, 10}), 2);
    EXPECT_EQ(gcd_all(std::vector<Int>{1, 7, 9}), 1);
    EXPECT_EQ(gcd_all(std::vector<Int>{5}), 5);
    EXPECT_THROW(gcd_all(std::vector<Int>{}), std::invalid_argument);
}

TEST(PairwiseCoprime, Examples) {
    EXPECT_TRUE(pairwise_coprime(std::vector<Int>{1, 1, 2, 3}));
    EXPECT_FALSE(pairwise_coprime(std::vector<Int>{2, 4}));
    EXPECT_TRUE(pairwise_coprime(std::vector<Int>{1, 1, 1}));
}

// oracle: two entries share a factor iff their prime sets intersect
static std::set<Int> prime_set(Int v) {
    std::set<Int> s;
    for (Int p = 2; p <= v; ++p)
        while (v % p == 0) {
            s.insert(p);
            v /= p;
        }
    return s;
}

TEST(PairwiseCoprime, AgreesWithPrimeSetsOnRandomTuples) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Int> v(8);
        for (auto& x : v)
            x = 1 + static_cast<Int>(rng() % 50);
        bool expected = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                auto a = prime_set(v[i]), b = prime_set(v[j]);
                for (Int p : a)
                    if (b.count(p))
                        expected = false;
            }
        EXPECT_EQ(pairwise_coprime(v), expected);
    }
}

TEST(SmallestPrimeFactor, Examples) {
    EXPECT_EQ(smallest_prime_factor(4), 2);
    EXPECT_EQ(smallest_prime_factor(15), 3);
    EXPECT_EQ(smallest_prime_factor(7), 7);
    EXPECT_THROW(smallest_prime_factor(1), std::domain_error);
    EXPECT_THROW(smallest_prime_factor(-3), std::domain_error);
}

TEST(SmallestPrimeFactor, MatchesSieveUpToAMillion) {
    const Int N = 1000000;
    std::vector<Int> spf(N + 1, 0);
    for (Int i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (Int j = i; j <= N; j += i)
                if (spf[j] == 0)
                    spf[j] = i;
    for (Int v = 2; v <= N; ++v)
        ASSERT_EQ(smallest_prime_factor(v), spf[v]) << v;
}

TEST(Factorize, Invariants) {
    for (Int v = 1; v <= 5000; ++v) {
        auto f = factorize(v);
        EXPECT_EQ(f.product(), v);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            EXPECT_TRUE(is_prime(f.factors[i].prime));
            EXPECT_GE(f.factors[i].exponent, 1);
            if (i)
                EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
        }
    }
    EXPECT_EQ(factorize(360).factors, (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_THROW(factorize(0), std::domain_error);
}

TEST(TwoCoin, Examples) {
    EXPECT_EQ(two_coin_representation(3, 5, 8), (std::pair<Int, Int>{1, 1}));
    EXPECT_EQ(two_coin_representation(2, 3, 2), (std::pair<Int, Int>{1, 0}));
    EXPECT_THROW(two_coin_representation(4, 6, 10), std::domain_error);
}

TEST(TwoCoin, SevenIsNotInSemigroupOfThreeAndFive) {
    // oracle: exhaustive scan k <= 2, l <= 1
    bool found = false;
    for (Int k = 0; k <= 2; ++k)
        for (Int l = 0; l <= 1; ++l)
            found |= 3 * k + 5 * l == 7;
    ASSERT_FALSE(found);
    EXPECT_FALSE(two_coin_representation(3, 5, 7).has_value());
}

TEST(TwoCoin, DegenerateGenerator) {
    EXPECT_EQ(two_coin_representation(1, 5, 9), (std::pair<Int, Int>{9, 0}));
    auto r = two_coin_representation(5, 1, 9);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->first * 5 + r->second, 9);
}

TEST(TwoCoin, MinimalLAgainstBruteForce) {
    for (Int a = 1; a <= 12; ++a)
        for (Int b = 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            for (Int N = 0; N <= 80; ++N) {
                std::optional<std::pair<Int, Int>> best;
                for (Int l = 0; l * b <= N && !best; ++l)
                    if ((N - l * b) % a == 0)
                        best = std::pair{(N - l * b) / a, l};
                EXPECT_EQ(two_coin_representation(a, b, N), best) << a << " " << b << " " << N;
            }
        }
}

TEST(TwoCoin, AlwaysPresentAboveConductor) {
    for (Int a = 2; a <= 30; ++a)
        for (Int b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            const Int lo = (a - 1) * (b - 1);
            for (Int N = lo; N <= lo + 200; ++N) {
                auto r = two_coin_representation(a, b, N);
                ASSERT_TRUE(r) << a << " " << b << " " << N;
                EXPECT_EQ(r->first * a + r->second * b, N);
            }
            // and the conductor is sharp
            EXPECT_FALSE(two_coin_representation(a, b, lo - 1).has_value());
        }
}

TEST(Checked, Overflow) {
    EXPECT_THROW(checked::mul(Int{1} << 40, Int{1} << 40), std::overflow_error);
    EXPECT_THROW(checked::add(std::numeric_limits<Int>::max(), 1), std::overflow_error);
    EXPECT_EQ(checked::sub(5, 7), -2);
}
