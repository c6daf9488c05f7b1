#pragma once

// The generating graph E_n of Z_n: vertices 0..n-1, a ~ b iff gcd(a, b, n) = 1.
//
// E_n is the H-join H[G_1, ..., G_{2^r}] over the divisor classes: H has the
// divisors of n0 as vertices with d ~ d' iff gcd(d, d') = 1, G_1 = [1] is a
// clique and every other class is an independent set.

#include <zn/partition.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zn {

inline constexpr u64 kDefaultDenseLimit = 5000;

/// Dense cap, honouring ZN_DENSE_LIMIT when it parses as a positive integer.
inline u64 dense_limit_from_env() {
    if (const char* env = std::getenv("ZN_DENSE_LIMIT")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultDenseLimit;
}

using BitRow = boost::dynamic_bitset<std::uint64_t>;

struct GeneratingGraph {
    FactoredInt n;
    std::vector<BitRow> adjacency;
    ClassPartition partition;

    std::size_t order() const { return adjacency.size(); }
    bool adjacent(u64 a, u64 b) const { return adjacency[a].test(b); }
    std::size_t degree(u64 a) const { return adjacency[a].count(); }
};

struct HGraph {
    DivisorTuple vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // tuple indices, i < j

    bool adjacent(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        for (const auto& e : edges)
            if (e.first == i && e.second == j) return true;
        return false;
    }
};

struct GraphProps {
    u64 n = 0;
    unsigned diameter = 0;
    bool is_regular = false;
    bool is_bipartite = false;
    bool is_hamiltonian = false;
    std::vector<u64> hamiltonian_cycle;  // 0, 1, ..., n-1, 0; empty when absent or above the witness cap
    bool is_eulerian = false;
    bool is_planar = false;
    u64 clique_number = 0;
    u64 chromatic_number = 0;
    u64 independence_number = 0;
    u64 edge_count = 0;
};

struct Rational {
    u64 num = 0;
    u64 den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

inline GeneratingGraph build_graph(const FactoredInt& n, u64 dense_limit = kDefaultDenseLimit) {
    if (n.value < 2) throw DomainError("build_graph: n must be >= 2");
    if (n.value > dense_limit) {
        throw LimitError("build_graph: n = " + std::to_string(n.value) + " exceeds the dense limit " +
                         std::to_string(dense_limit) + "; use the quotient-level operations instead");
    }
    GeneratingGraph g;
    g.n = n;
    g.partition = build_partition(n, true);
    const u64 m = n.value;
    g.adjacency.assign(m, BitRow(m));
    for (u64 a = 0; a < m; ++a) {
        const u64 ga = std::gcd(a, m);
        for (u64 b = a + 1; b < m; ++b) {
            if (std::gcd(ga, b) == 1) {
                g.adjacency[a].set(b);
                g.adjacency[b].set(a);
            }
        }
    }
    return g;
}

inline GeneratingGraph build_graph(u64 n, u64 dense_limit = kDefaultDenseLimit) {
    return build_graph(factorize(n), dense_limit);
}

/// Degree shared by every vertex of [d]: n - 1 for d = 1, else (n/d) phi(d).
inline u64 degree_of_class(u64 d, const FactoredInt& n) {
    if (d == 0 || n.radical % d != 0) {
        throw DomainError("degree_of_class: " + std::to_string(d) + " does not divide n0 = " + std::to_string(n.radical));
    }
    if (d == 1) return n.value - 1;
    return n.value / d * euler_phi(d);
}

/// |E| = phi(n)/2 * ((n/n0) sigma(n0) - 1)
inline u64 edge_count(const FactoredInt& n) {
    if (n.value < 2) throw DomainError("edge_count: n must be >= 2");
    const u64 t = n.cofactor() * n.sigma_radical - 1;
    // One of phi(n), t is even: phi(n) is odd only for n = 2, where t = 2.
    return (n.phi % 2 == 0) ? (n.phi / 2) * t : n.phi * (t / 2);
}

inline HGraph build_h_graph(const FactoredInt& n) {
    if (n.value < 2) throw DomainError("build_h_graph: n must be >= 2");
    HGraph h;
    h.vertices = divisor_tuple(factorize(n.radical));
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < h.vertices.size(); ++j)
            if (std::gcd(h.vertices[i], h.vertices[j]) == 1) h.edges.emplace_back(i, j);
    return h;
}

/// Rebuild vertex adjacency from the H-join: classes i and j are completely
/// joined when {i, j} is an edge of H; [1] is a clique, the rest independent.
inline std::vector<BitRow> hjoin_adjacency(const HGraph& h, const ClassPartition& part) {
    if (!part.materialized()) throw DomainError("hjoin_adjacency: partition must be materialized");
    const u64 m = part.n.value;
    const std::size_t k = part.order();
    std::vector<BitRow> class_rows(k, BitRow(m));
    for (const auto& [i, j] : h.edges) {
        for (u64 x : *part.classes[j].members) class_rows[i].set(x);
        for (u64 x : *part.classes[i].members) class_rows[j].set(x);
    }
    for (u64 x : *part.classes[0].members) class_rows[0].set(x);

    std::vector<BitRow> rows(m);
    for (std::size_t i = 0; i < k; ++i) {
        for (u64 x : *part.classes[i].members) {
            rows[x] = class_rows[i];
            rows[x].reset(x);
        }
    }
    return rows;
}

inline GraphProps compute_props(const FactoredInt& n, u64 witness_limit = kDefaultDenseLimit) {
    if (n.value < 2) throw DomainError("compute_props: n must be >= 2");
    GraphProps p;
    p.n = n.value;
    const bool prime = n.is_prime();
    p.diameter = prime ? 1 : 2;
    p.is_regular = prime;
    p.is_bipartite = n.value == 2;
    p.is_hamiltonian = n.value > 2;
    if (p.is_hamiltonian && n.value <= witness_limit) {
        p.hamiltonian_cycle.resize(n.value + 1);
        for (u64 i = 0; i < n.value; ++i) p.hamiltonian_cycle[i] = i;
        p.hamiltonian_cycle.back() = 0;
    }
    p.is_eulerian = n.value % 2 == 1;
    p.is_planar = n.value == 2 || n.value == 3 || n.value == 4 || n.value == 6;
    p.clique_number = n.phi + n.omega;
    p.chromatic_number = p.clique_number;
    p.independence_number = n.value / n.smallest_prime();
    p.edge_count = edge_count(n);
    return p;
}

/// Probability that an unordered pair of distinct elements generates Z_n,
/// |E| / C(n, 2), reduced.
inline Rational gen_probability(const FactoredInt& n) {
    if (n.value < 2) throw DomainError("gen_probability: n must be >= 2");
    u64 num = edge_count(n);
    u64 den = (n.value % 2 == 0) ? (n.value / 2) * (n.value - 1) : n.value * ((n.value - 1) / 2);
    const u64 g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace zn
