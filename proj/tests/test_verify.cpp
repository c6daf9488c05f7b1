#include <zn/verify.hpp>

#include <gtest/gtest.h>

using namespace zn;

TEST(Verify, RegistryAndResolution) {
    const auto names = check_names();
    for (const char* want : {"partition", "gensets", "edges", "degrees", "diameter", "eulerian", "hamiltonian", "clique",
                             "chromatic", "independence", "planarity", "hjoin", "adjacency", "laplacian", "lq-known",
                             "similarity", "tensor", "scaling", "lap-distinct-scaling", "weyl", "mhat", "charpoly",
                             "rowsums", "phi", "structure"})
        EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
    EXPECT_EQ(resolve_checks({"all"}), names);
    EXPECT_EQ(resolve_checks({"edges", "gensets", "edges"}), (std::vector<std::string>{"edges", "gensets"}));
    EXPECT_THROW(resolve_checks({"nope"}), DomainError);
}

TEST(Verify, GensetsAndEdgesPassOnSmallRange) {
    for (const auto& r : run_checks({"gensets", "edges"}, 2, 60)) {
        EXPECT_TRUE(r.passed()) << r.check;
        EXPECT_EQ(r.lo, 2u);
        EXPECT_EQ(r.hi, 60u);
        EXPECT_EQ(r.evaluated, 59u);
    }
}

TEST(Verify, RangeIsClippedToCap) {
    const auto r = run_check("clique", 30, 100);
    EXPECT_EQ(r.lo, 30u);
    EXPECT_EQ(r.hi, 40u);
    EXPECT_EQ(r.evaluated, 11u);
    const auto empty = run_check("clique", 50, 60);
    EXPECT_EQ(empty.evaluated, 0u);
    EXPECT_TRUE(empty.passed());
    EXPECT_THROW(run_check("edges", 10, 5), DomainError);
}

TEST(Verify, TensorOnlyVisitsSquarefree) {
    const auto r = run_check("tensor", 2, 30);
    u64 count = 0;
    for (u64 n = 2; n <= 30; ++n) count += is_squarefree(n);
    EXPECT_EQ(r.evaluated, count);
    EXPECT_TRUE(r.passed());
}

TEST(Verify, MismatchesAreOrderedAndThreadIndependent) {
    // {0, phi(n), n} in eig(L_Q) does not hold for prime powers, where L_Q is 2x2.
    const auto one = run_check("lq-known", 2, 64, 1);
    const auto many = run_check("lq-known", 2, 64, 4);
    ASSERT_FALSE(one.passed());
    ASSERT_EQ(one.mismatches.size(), many.mismatches.size());
    for (std::size_t i = 0; i < one.mismatches.size(); ++i) {
        EXPECT_EQ(one.mismatches[i].n, many.mismatches[i].n);
        EXPECT_EQ(one.mismatches[i].actual, many.mismatches[i].actual);
        if (i) {
            EXPECT_LE(one.mismatches[i - 1].n, one.mismatches[i].n);
        }
        EXPECT_TRUE(factorize(one.mismatches[i].n).is_prime_power());
    }
}

TEST(Verify, ExceptionsBecomeMismatches) {
    CheckDef bad{"bad", 2, 10, {}, [](u64 n) -> std::vector<Mismatch> {
                     if (n == 7) throw std::runtime_error("boom");
                     return {};
                 }};
    const auto r = run_check(bad, 2, 10);
    ASSERT_EQ(r.mismatches.size(), 1u);
    EXPECT_EQ(r.mismatches[0].n, 7u);
    EXPECT_NE(r.mismatches[0].actual.find("boom"), std::string::npos);
}

TEST(Verify, QuickChecksPass) {
    for (const char* name : {"partition", "degrees", "diameter", "structure", "eulerian", "hamiltonian", "clique",
                             "chromatic", "independence", "planarity", "hjoin", "similarity", "scaling", "weyl",
                             "mhat", "rowsums", "phi", "charpoly", "adjacency", "laplacian"}) {
        const auto r = run_check(name, 2, 30);
        EXPECT_TRUE(r.passed()) << name << ": " << (r.mismatches.empty() ? "" : r.mismatches[0].actual);
    }
}
