#include <zn/graph.hpp>
#include <zn/oracle.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace zn;

TEST(BuildGraph, SmallCases) {
    const auto g3 = build_graph(3);
    EXPECT_TRUE(g3.adjacent(0, 1) && g3.adjacent(0, 2) && g3.adjacent(1, 2));

    const auto g2 = build_graph(2);
    EXPECT_TRUE(g2.adjacent(0, 1));
    EXPECT_EQ(g2.degree(0), 1u);

    const auto g8 = build_graph(8);
    std::vector<u64> nbrs;
    for (u64 b = 0; b < 8; ++b)
        if (g8.adjacent(0, b)) nbrs.push_back(b);
    EXPECT_EQ(nbrs, (std::vector<u64>{1, 3, 5, 7}));
}

TEST(BuildGraph, LimitAndDomain) {
    EXPECT_THROW(build_graph(1), DomainError);
    EXPECT_THROW(build_graph(101, 100), LimitError);
    EXPECT_NO_THROW(build_graph(100, 100));
}

TEST(BuildGraph, SymmetricLoopFreeAndClassStructure) {
    for (u64 n = 2; n <= 120; ++n) {
        const auto g = build_graph(n);
        for (u64 a = 0; a < n; ++a) {
            ASSERT_FALSE(g.adjacent(a, a));
            for (u64 b = 0; b < n; ++b) ASSERT_EQ(g.adjacent(a, b), g.adjacent(b, a));
        }
        // [1] is a clique, other classes are independent sets.
        for (const auto& c : g.partition.classes) {
            const auto& m = *c.members;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j) ASSERT_EQ(g.adjacent(m[i], m[j]), c.divisor == 1) << n;
        }
    }
}

TEST(DegreeOfClass, Thirty) {
    const auto f = factorize(30);
    const std::map<u64, u64> table{{1, 29}, {2, 15}, {3, 20}, {5, 24}, {6, 10}, {10, 12}, {15, 16}, {30, 8}};
    for (const auto& [d, deg] : table) EXPECT_EQ(degree_of_class(d, f), deg) << d;
    EXPECT_THROW(degree_of_class(7, f), DomainError);
}

TEST(DegreeOfClass, MatchesMaterializedDegree) {
    for (u64 n = 2; n <= 500; ++n) {
        const auto g = build_graph(n);
        for (const auto& c : g.partition.classes)
            for (u64 a : *c.members) ASSERT_EQ(g.degree(a), degree_of_class(c.divisor, g.n)) << n << " " << a;
    }
}

TEST(EdgeCount, Examples) {
    EXPECT_EQ(edge_count(factorize(30)), 284u);
    EXPECT_EQ(edge_count(factorize(12)), 46u);
    for (u64 p : {2u, 3u, 5u, 7u, 97u}) EXPECT_EQ(edge_count(factorize(p)), p * (p - 1) / 2);
    EXPECT_THROW(edge_count(factorize(1)), DomainError);
}

TEST(EdgeCount, MatchesPairScan) {
    for (u64 n = 2; n <= 1000; ++n) ASSERT_EQ(edge_count(factorize(n)), oracle::brute_edges(n)) << n;
}

TEST(HGraph, Thirty) {
    const auto h = build_h_graph(factorize(30));
    EXPECT_EQ(h.vertices.size(), 8u);
    auto idx = [&](u64 d) { return h.vertices.index_of(d); };
    for (auto [a, b] : std::vector<std::pair<u64, u64>>{{2, 3}, {2, 5}, {2, 15}, {3, 5}, {3, 10}, {5, 6}})
        EXPECT_TRUE(h.adjacent(idx(a), idx(b))) << a << "-" << b;
    for (std::size_t j = 1; j < 8; ++j) EXPECT_TRUE(h.adjacent(0, j));
    EXPECT_FALSE(h.adjacent(idx(2), idx(6)));
    EXPECT_FALSE(h.adjacent(idx(30), idx(5)));
}

TEST(HGraph, PrimePowerAndTwelve) {
    const auto h27 = build_h_graph(factorize(27));
    EXPECT_EQ(h27.vertices.entries, (std::vector<u64>{1, 3}));
    EXPECT_EQ(h27.edges.size(), 1u);

    const auto h12 = build_h_graph(factorize(12));
    EXPECT_EQ(h12.vertices.entries, (std::vector<u64>{1, 2, 3, 6}));
    const std::vector<std::pair<std::size_t, std::size_t>> want{{0, 1}, {0, 2}, {0, 3}, {1, 2}};
    EXPECT_EQ(h12.edges, want);
}

TEST(HGraph, JoinReconstructsAdjacency) {
    for (u64 n = 2; n <= 300; ++n) {
        const auto g = build_graph(n);
        const auto rows = hjoin_adjacency(build_h_graph(g.n), g.partition);
        ASSERT_EQ(rows, g.adjacency) << n;
    }
}

TEST(ComputeProps, Examples) {
    const auto p30 = compute_props(factorize(30));
    EXPECT_EQ(p30.diameter, 2u);
    EXPECT_FALSE(p30.is_eulerian);
    EXPECT_EQ(p30.clique_number, 11u);
    EXPECT_EQ(p30.chromatic_number, 11u);
    EXPECT_EQ(p30.independence_number, 15u);
    EXPECT_EQ(p30.edge_count, 284u);

    const auto p7 = compute_props(factorize(7));
    EXPECT_EQ(p7.diameter, 1u);
    EXPECT_TRUE(p7.is_regular);
    EXPECT_EQ(p7.clique_number, 7u);
    EXPECT_TRUE(p7.is_eulerian);

    const auto p6 = compute_props(factorize(6));
    EXPECT_TRUE(p6.is_planar);
    EXPECT_EQ(p6.clique_number, 4u);

    const auto p2 = compute_props(factorize(2));
    EXPECT_TRUE(p2.is_bipartite);
    EXPECT_FALSE(p2.is_hamiltonian);
    EXPECT_TRUE(p2.hamiltonian_cycle.empty());
}

TEST(ComputeProps, HamiltonianWitness) {
    const auto p = compute_props(factorize(12));
    ASSERT_EQ(p.hamiltonian_cycle.size(), 13u);
    EXPECT_EQ(p.hamiltonian_cycle.front(), 0u);
    EXPECT_EQ(p.hamiltonian_cycle.back(), 0u);
    EXPECT_TRUE(oracle::is_hamiltonian_cycle(p.hamiltonian_cycle, 12));
    EXPECT_TRUE(compute_props(factorize(6000), 5000).hamiltonian_cycle.empty());
}

TEST(ComputeProps, AgreesWithBruteForce) {
    for (u64 n = 2; n <= 60; ++n) {
        const auto lib = compute_props(factorize(n));
        const auto ref = oracle::brute_props(n);
        ASSERT_EQ(lib.diameter, *ref.diameter) << n;
        ASSERT_EQ(lib.is_regular, ref.regular) << n;
        ASSERT_EQ(lib.is_bipartite, ref.bipartite) << n;
        ASSERT_EQ(lib.is_eulerian, ref.all_degrees_even) << n;
        ASSERT_EQ(lib.edge_count, ref.edges) << n;
        ASSERT_EQ(lib.independence_number, *ref.independence_number) << n;
        ASSERT_EQ(lib.clique_number, *ref.clique_number) << n;
        if (n <= 40) {
            ASSERT_EQ(lib.chromatic_number, *ref.chromatic_number) << n;
        }
    }
}

TEST(GenProbability, Examples) {
    EXPECT_EQ(gen_probability(factorize(13)), (Rational{1, 1}));
    EXPECT_EQ(gen_probability(factorize(30)), (Rational{284, 435}));
    EXPECT_EQ(gen_probability(factorize(4)), (Rational{5, 6}));
    EXPECT_NEAR(gen_probability(factorize(4)).value(), 5.0 / 6.0, 1e-15);
}

TEST(DenseLimit, Environment) {
    ::setenv("ZN_DENSE_LIMIT", "123", 1);
    EXPECT_EQ(dense_limit_from_env(), 123u);
    ::setenv("ZN_DENSE_LIMIT", "junk", 1);
    EXPECT_EQ(dense_limit_from_env(), kDefaultDenseLimit);
    ::unsetenv("ZN_DENSE_LIMIT");
    EXPECT_EQ(dense_limit_from_env(), kDefaultDenseLimit);
}
