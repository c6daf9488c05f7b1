#include <zn/gensets.hpp>
#include <zn/oracle.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace zn;

TEST(IsGeneratingSet, Examples) {
    EXPECT_TRUE(is_generating_set({2, 3}, 6));
    EXPECT_TRUE(is_generating_set({1}, 17));
    EXPECT_FALSE(is_generating_set({2, 4}, 8));
    EXPECT_THROW(is_generating_set({}, 6), DomainError);
    EXPECT_THROW(is_generating_set({6}, 6), DomainError);
}

TEST(IsMinimalGeneratingSet, Examples) {
    EXPECT_TRUE(is_minimal_generating_set({2, 3}, 6));
    EXPECT_FALSE(is_minimal_generating_set({1, 2}, 6));
    EXPECT_TRUE(is_minimal_generating_set({6, 10, 15}, 30));
    EXPECT_FALSE(is_minimal_generating_set({2, 4}, 8));
}

TEST(IsMinimalGeneratingSet, AgreesWithAllSubsetsOnRandomSets) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        const u64 n = 2 + rng() % 400;
        const std::size_t k = 1 + rng() % 4;
        std::vector<u64> s;
        for (std::size_t i = 0; i < k; ++i) s.push_back(rng() % n);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        ASSERT_EQ(is_minimal_generating_set(s, n), oracle::minimal_by_subsets(s, n)) << n;
    }
}

TEST(MaxMinimalSize, Examples) {
    EXPECT_EQ(max_minimal_size(factorize(30)), 3u);
    EXPECT_EQ(max_minimal_size(factorize(81)), 1u);
    EXPECT_EQ(max_minimal_size(factorize(12)), 2u);
    EXPECT_THROW(max_minimal_size(factorize(1)), DomainError);
}

TEST(EnumerateGk, ThirtyThree) {
    const auto fam = enumerate_gk(30, 3, true);
    ASSERT_EQ(fam.class_combos.size(), 1u);
    EXPECT_EQ(fam.class_combos[0], (std::vector<u64>{6, 10, 15}));
    EXPECT_EQ(fam.count, 8);
    EXPECT_EQ(fam.sets->size(), 8u);
    EXPECT_EQ(*fam.sets, oracle::brute_gensets(30, 3));
}

TEST(EnumerateGk, PrimeHasNoPairs) {
    const auto fam = enumerate_gk(13, 2);
    EXPECT_TRUE(fam.class_combos.empty());
    EXPECT_EQ(fam.count, 0);
}

TEST(EnumerateGk, TwelveTwo) {
    const auto fam = enumerate_gk(12, 2, true);
    ASSERT_EQ(fam.class_combos.size(), 1u);
    EXPECT_EQ(fam.class_combos[0], (std::vector<u64>{2, 3}));
    EXPECT_EQ(fam.count, 8);
    EXPECT_EQ(*fam.sets, oracle::brute_gensets(12, 2));
}

TEST(EnumerateGk, SingletonsAreUnits) {
    const auto fam = enumerate_gk(30, 1, true);
    EXPECT_EQ(fam.count, 8);
    std::vector<std::vector<u64>> units{{1}, {7}, {11}, {13}, {17}, {19}, {23}, {29}};
    EXPECT_EQ(*fam.sets, units);
}

TEST(EnumerateGk, KAboveOmegaIsEmpty) {
    EXPECT_EQ(enumerate_gk(30, 4).count, 0);
    EXPECT_THROW(enumerate_gk(30, 0), DomainError);
}

TEST(EnumerateGk, ExpansionNeedsMaterializedPartition) {
    EXPECT_THROW(enumerate_gk(build_partition(30), 2, true), DomainError);
}

TEST(EnumerateGk, ThirtyTwoFamilySize) {
    // All minimal pairs of Z_30: [p_i] x [p_j] plus the mixed pairs such as [2] x [15], [6] x [5].
    const auto fam = enumerate_gk(30, 2, true);
    EXPECT_EQ(fam.count, 80);
    EXPECT_EQ(fam.sets->size(), 80u);
    EXPECT_EQ(*fam.sets, oracle::brute_gensets(30, 2));
}

TEST(EnumerateGk, OracleEquivalenceUpTo120) {
    for (u64 n = 2; n <= 120; ++n)
        for (unsigned k = 1; k <= 3; ++k) {
            const auto fam = enumerate_gk(n, k, true);
            const auto ref = oracle::brute_gensets(n, k);
            ASSERT_EQ(*fam.sets, ref) << "n=" << n << " k=" << k;
            ASSERT_EQ(fam.count, ref.size());
        }
}

TEST(EnumerateGk, NoUnitsForKAtLeastTwo) {
    for (u64 n : {30u, 60u, 84u, 90u, 105u})
        for (unsigned k = 2; k <= 3; ++k) {
            const auto fam = enumerate_gk(n, k, true);
            for (const auto& s : *fam.sets)
                for (u64 g : s) ASSERT_NE(std::gcd(g, n), 1u) << n;
        }
}

TEST(EnumerateGk, CombosSatisfyGcdCriterion) {
    for (u64 n : {210u, 2310u, 30030u}) {
        const auto f = factorize(n);
        for (unsigned k = 2; k <= f.omega; ++k)
            for (const auto& combo : enumerate_gk(n, k).class_combos) ASSERT_TRUE(is_minimal_combo(combo));
    }
}

TEST(EnumerateGk, CountMatchesBigProducts) {
    // |G_r| = (n/n0)^r phi(n0) when k = r: one element from each [n0/p_i].
    const auto f = factorize(u64{2} * 2 * 3 * 5 * 7 * 11 * 13);
    const auto fam = enumerate_gk(f.value, f.omega);
    ASSERT_EQ(fam.class_combos.size(), 1u);
    BigInt expected = 1;
    for (unsigned i = 0; i < f.omega; ++i) expected *= f.cofactor();
    expected *= euler_phi(f.radical);
    EXPECT_EQ(fam.count, expected);
}

TEST(EnumerateGk, PrimePairSubfamilyForThreePrimes) {
    // For squarefree n with three primes, the [p_i] x [p_j] part of G_2 has
    // phi(n)(phi(p1) + phi(p2) + phi(p3)) sets. The full G_2 is larger.
    for (u64 n : {30u, 42u, 66u, 105u, 385u}) {
        const auto f = factorize(n);
        const auto part = build_partition(f);
        const auto fam = enumerate_gk(part, 2);
        BigInt sub = 0;
        for (const auto& combo : fam.class_combos) {
            const bool prime_pair = factorize(combo[0]).is_prime() && factorize(combo[1]).is_prime();
            if (prime_pair) sub += BigInt(part.class_for(combo[0]).size) * part.class_for(combo[1]).size;
        }
        u64 phi_sum = 0;
        for (const auto& pp : f.factors) phi_sum += pp.prime - 1;
        EXPECT_EQ(sub, BigInt(f.phi) * phi_sum) << n;
        EXPECT_EQ(fam.count, BigInt(f.phi) * (phi_sum + 3)) << n;
    }
}
