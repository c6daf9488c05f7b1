#include <zn/partition.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace zn;

TEST(ClassOf, Examples) {
    EXPECT_EQ(class_of(9, factorize(24)), 3u);
    EXPECT_EQ(class_of(0, factorize(24)), 6u);
    EXPECT_EQ(class_of(7, factorize(30)), 1u);
    EXPECT_THROW(class_of(30, factorize(30)), DomainError);
}

TEST(ClassOf, MirrorIdentity) {
    for (u64 n = 2; n <= 400; ++n) {
        const auto f = factorize(n);
        for (u64 a = 1; a < n; ++a) ASSERT_EQ(class_of(a, f), class_of(n - a, f)) << n << " " << a;
    }
}

TEST(BuildPartition, Thirty) {
    const auto p = build_partition(30);
    std::vector<u64> divs, sizes;
    for (const auto& c : p.classes) {
        divs.push_back(c.divisor);
        sizes.push_back(c.size);
    }
    EXPECT_EQ(divs, (std::vector<u64>{1, 2, 3, 6, 5, 10, 15, 30}));
    EXPECT_EQ(sizes, (std::vector<u64>{8, 8, 4, 4, 2, 2, 1, 1}));
    EXPECT_EQ(p.a, (std::vector<u64>{8, 4, 4, 2, 2, 1, 1}));
    EXPECT_FALSE(p.materialized());
}

TEST(BuildPartition, ThirtyTwo) {
    const auto p = build_partition(32);
    ASSERT_EQ(p.order(), 2u);
    EXPECT_EQ(p.classes[0].size, 16u);
    EXPECT_EQ(p.classes[1].size, 16u);
}

TEST(BuildPartition, TwentyFourMembers) {
    const auto p = build_partition(24, true);
    EXPECT_EQ(*p.class_for(6).members, (std::vector<u64>{0, 6, 12, 18}));
    EXPECT_EQ(*p.class_for(3).members, (std::vector<u64>{3, 9, 15, 21}));
    EXPECT_EQ(p.class_for(6).size, 4u);
}

TEST(BuildPartition, RejectsOne) { EXPECT_THROW(build_partition(1), DomainError); }

TEST(BuildPartition, InvariantsAgainstScan) {
    for (u64 n = 2; n <= 1500; ++n) {
        const auto f = factorize(n);
        const auto p = build_partition(f, true);
        ASSERT_EQ(p.order(), f.tau_radical);
        u64 total = 0;
        for (const auto& c : p.classes) {
            total += c.size;
            ASSERT_EQ(c.members->size(), c.size);
            for (u64 a : *c.members) ASSERT_EQ(std::gcd(a, f.radical), c.divisor);
        }
        ASSERT_EQ(total, n);
        ASSERT_EQ(p.classes.front().size, f.phi);
        ASSERT_EQ(p.a.back(), n / f.radical);
        ASSERT_EQ(std::accumulate(p.a.begin(), p.a.end(), u64{0}), n - f.phi);
    }
}

TEST(ClassSize, RejectsNonDivisor) {
    EXPECT_THROW(class_size(7, factorize(30)), DomainError);
    EXPECT_THROW(class_size(4, factorize(24)), DomainError);
}

TEST(BinarySequence, ThirtyEncoding) {
    const auto f = factorize(30);
    EXPECT_EQ(binary_sequence(1, f), "000");
    EXPECT_EQ(binary_sequence(2, f), "100");
    EXPECT_EQ(binary_sequence(6, f), "110");
    EXPECT_EQ(binary_sequence(15, f), "011");
    EXPECT_EQ(binary_sequence(30, f), "111");
}
