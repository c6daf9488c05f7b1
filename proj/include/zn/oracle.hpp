#pragma once

// Brute-force reference implementations. Everything here is derived from the
// adjacency rule gcd(a, b, n) = 1 and exhaustive search; nothing in this
// header may call the class-size, degree, edge-count or spectrum formulas.

#include <zn/errors.hpp>
#include <zn/linalg.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace zn::oracle {

using u64 = std::uint64_t;
using Row = boost::dynamic_bitset<std::uint64_t>;
using Graph = std::vector<Row>;

struct Caps {
    static constexpr u64 gensets_n = 120;
    static constexpr unsigned gensets_k = 3;
    static constexpr u64 edges_n = 1000;
    static constexpr u64 np_hard_n = 60;  // clique, chromatic, independence
    static constexpr u64 diameter_n = 500;
    static constexpr u64 dense_n = 5000;
};

inline void require_cap(u64 n, u64 cap, const char* what) {
    if (n > cap) throw LimitError(std::string("oracle ") + what + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

inline bool adjacent(u64 a, u64 b, u64 n) { return a != b && std::gcd(std::gcd(a, b), n) == 1; }

inline Graph adjacency(u64 n, u64 cap = Caps::dense_n) {
    require_cap(n, cap, "adjacency");
    Graph g(n, Row(n));
    for (u64 a = 0; a < n; ++a)
        for (u64 b = a + 1; b < n; ++b)
            if (adjacent(a, b, n)) {
                g[a].set(b);
                g[b].set(a);
            }
    return g;
}

inline Graph complement(const Graph& g) {
    Graph c = g;
    for (std::size_t v = 0; v < c.size(); ++v) {
        c[v].flip();
        c[v].reset(v);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Counting

inline u64 brute_edges(u64 n) {
    require_cap(n, Caps::edges_n, "brute_edges");
    u64 count = 0;
    for (u64 a = 0; a < n; ++a)
        for (u64 b = a + 1; b < n; ++b) count += adjacent(a, b, n) ? 1 : 0;
    return count;
}

inline u64 brute_phi(u64 n) {
    u64 c = 0;
    for (u64 a = 1; a <= n; ++a) c += std::gcd(a, n) == 1 ? 1 : 0;
    return c;
}

inline std::vector<u64> brute_degrees(u64 n) {
    require_cap(n, Caps::edges_n, "brute_degrees");
    std::vector<u64> deg(n, 0);
    for (u64 a = 0; a < n; ++a)
        for (u64 b = a + 1; b < n; ++b)
            if (adjacent(a, b, n)) {
                ++deg[a];
                ++deg[b];
            }
    return deg;
}

/// Radical by trial division.
inline u64 brute_radical(u64 n) {
    u64 r = 1;
    for (u64 p = 2; p <= n; ++p) {
        if (n % p) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Generating sets

inline bool generates(const std::vector<u64>& s, u64 n) {
    u64 g = n;
    for (u64 x : s) g = std::gcd(g, x);
    return g == 1;
}

/// Generates, and no proper non-empty subset does (every subset is tried).
inline bool minimal_by_subsets(const std::vector<u64>& s, u64 n) {
    if (!generates(s, n)) return false;
    const std::size_t k = s.size();
    std::vector<u64> sub;
    for (u64 mask = 1; mask + 1 < (u64{1} << k); ++mask) {
        sub.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sub.push_back(s[i]);
        if (generates(sub, n)) return false;
    }
    return true;
}

/// All minimal generating k-subsets of Z_n, each ascending, lexicographic overall.
inline std::vector<std::vector<u64>> brute_gensets(u64 n, unsigned k) {
    require_cap(n, Caps::gensets_n, "brute_gensets");
    if (k > Caps::gensets_k) throw LimitError("oracle brute_gensets: k exceeds cap 3");
    std::vector<std::vector<u64>> out;
    if (k == 0 || k > n) return out;
    std::vector<u64> cur;
    std::function<void(u64)> rec = [&](u64 from) {
        if (cur.size() == k) {
            if (minimal_by_subsets(cur, n)) out.push_back(cur);
            return;
        }
        for (u64 x = from; x < n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Graph invariants

inline constexpr unsigned kDisconnected = ~0u;

/// Maximum BFS eccentricity; kDisconnected if some vertex is unreachable.
inline unsigned bfs_diameter(const Graph& g) {
    const std::size_t n = g.size();
    unsigned diam = 0;
    for (std::size_t s = 0; s < n; ++s) {
        Row seen(n), frontier(n);
        seen.set(s);
        frontier.set(s);
        unsigned ecc = 0;
        while (seen.count() < n) {
            Row next(n);
            for (auto v = frontier.find_first(); v != Row::npos; v = frontier.find_next(v)) next |= g[v];
            next -= seen;
            if (next.none()) return kDisconnected;
            seen |= next;
            frontier = std::move(next);
            ++ecc;
        }
        diam = std::max(diam, ecc);
    }
    return diam;
}

inline bool is_bipartite(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<std::size_t> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const auto v = queue[qi];
            for (auto w = g[v].find_first(); w != Row::npos; w = g[v].find_next(w)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Closed walk visiting every vertex exactly once, consecutive entries adjacent.
inline bool is_hamiltonian_cycle(const std::vector<u64>& cycle, u64 n) {
    if (n < 3 || cycle.size() != n + 1 || cycle.front() != cycle.back()) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (cycle[i] >= n || seen[cycle[i]]) return false;
        seen[cycle[i]] = true;
        if (!adjacent(cycle[i], cycle[i + 1], n)) return false;
    }
    return true;
}

/// Maximum clique by Bron–Kerbosch with Tomita pivoting and a size bound.
inline std::vector<u64> max_clique(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<u64> best, cur;
    std::function<void(Row, Row)> bk = [&](Row p, Row x) {
        if (p.none()) {
            if (x.none() && cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + p.count() <= best.size()) return;
        std::size_t pivot = Row::npos, pivot_deg = 0;
        Row px = p | x;
        for (auto u = px.find_first(); u != Row::npos; u = px.find_next(u)) {
            const auto d = (p & g[u]).count();
            if (pivot == Row::npos || d > pivot_deg) {
                pivot = u;
                pivot_deg = d;
            }
        }
        Row cand = p - g[pivot];
        for (auto v = cand.find_first(); v != Row::npos; v = cand.find_next(v)) {
            cur.push_back(v);
            bk(p & g[v], x & g[v]);
            cur.pop_back();
            p.reset(v);
            x.set(v);
            if (cur.size() + p.count() <= best.size()) return;
        }
    };
    if (n) bk(Row(n).set(), Row(n));
    return best;
}

inline u64 max_independent_set_size(const Graph& g) { return max_clique(complement(g)).size(); }

/// Exact chromatic number: DSATUR branch and bound, seeded with the clique
/// lower bound.
inline u64 chromatic_number(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    const u64 lower = max_clique(g).size();
    std::vector<int> color(n, -1);
    u64 best = n;  // n colours always suffice

    std::function<void(std::size_t, u64)> search = [&](std::size_t colored, u64 used) {
        if (best == lower) return;
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        // Uncoloured vertex with the most distinct neighbour colours, ties by degree.
        std::size_t pick = n;
        std::size_t pick_sat = 0, pick_deg = 0;
        std::vector<bool> mark;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            mark.assign(used, false);
            std::size_t sat = 0;
            for (auto w = g[v].find_first(); w != Row::npos; w = g[v].find_next(w)) {
                if (color[w] >= 0 && !mark[color[w]]) {
                    mark[color[w]] = true;
                    ++sat;
                }
            }
            const auto deg = g[v].count();
            if (pick == n || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<bool> blocked(used + 1, false);
        for (auto w = g[pick].find_first(); w != Row::npos; w = g[pick].find_next(w))
            if (color[w] >= 0) blocked[color[w]] = true;
        for (u64 c = 0; c <= used; ++c) {
            if (blocked[c] || std::max(used, c + 1) >= best) continue;
            color[pick] = static_cast<int>(c);
            search(colored + 1, std::max(used, c + 1));
            color[pick] = -1;
            if (best == lower) return;
        }
    };
    search(0, 0);
    return best;
}

/// Verify that `vs` induces a complete subgraph under the gcd rule.
inline bool is_clique(const std::vector<u64>& vs, u64 n) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!adjacent(vs[i], vs[j], n)) return false;
    return true;
}

/// Five mutually adjacent vertices, if any.
inline std::optional<std::vector<u64>> find_k5(u64 n) {
    require_cap(n, Caps::np_hard_n, "find_k5");
    auto c = max_clique(adjacency(n));
    if (c.size() < 5) return std::nullopt;
    c.resize(5);
    std::sort(c.begin(), c.end());
    return c;
}

struct BruteProps {
    u64 n = 0;
    u64 edges = 0;
    std::optional<unsigned> diameter;  // n <= 500
    bool regular = false;
    bool bipartite = false;
    bool all_degrees_even = false;
    std::optional<u64> clique_number;        // n <= 60
    std::optional<u64> chromatic_number;     // n <= 60
    std::optional<u64> independence_number;  // n <= 60
};

inline BruteProps brute_props(u64 n) {
    require_cap(n, Caps::edges_n, "brute_props");
    const auto g = adjacency(n);
    BruteProps p;
    p.n = n;
    std::vector<std::size_t> deg(n);
    for (u64 v = 0; v < n; ++v) deg[v] = g[v].count();
    p.edges = std::accumulate(deg.begin(), deg.end(), u64{0}) / 2;
    p.regular = std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
    p.all_degrees_even = std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 0; });
    p.bipartite = is_bipartite(g);
    if (n <= Caps::diameter_n) p.diameter = bfs_diameter(g);
    if (n <= Caps::np_hard_n) {
        p.clique_number = max_clique(g).size();
        p.chromatic_number = chromatic_number(g);
        p.independence_number = max_independent_set_size(g);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Dense matrices

enum class DenseKind { adjacency, laplacian };

inline SymMatrix dense_matrix(u64 n, DenseKind kind, u64 cap = Caps::dense_n) {
    const auto g = adjacency(n, cap);
    SymMatrix m(n);
    for (u64 a = 0; a < n; ++a) {
        for (auto b = g[a].find_next(a); b != Row::npos; b = g[a].find_next(b))
            m.set(a, b, kind == DenseKind::adjacency ? 1.0 : -1.0);
        if (kind == DenseKind::laplacian) m.set(a, a, static_cast<double>(g[a].count()));
    }
    return m;
}

inline IntMatrix dense_int_matrix(u64 n, DenseKind kind) {
    const auto g = adjacency(n, 64);
    IntMatrix m(n);
    for (u64 a = 0; a < n; ++a) {
        for (u64 b = 0; b < n; ++b)
            if (g[a].test(b)) m(a, b) = kind == DenseKind::adjacency ? 1 : -1;
        if (kind == DenseKind::laplacian) m(a, a) = static_cast<std::int64_t>(g[a].count());
    }
    return m;
}

// ---------------------------------------------------------------------------
// Reports

struct Mismatch {
    u64 n = 0;
    std::string expected;
    std::string actual;
};

struct OracleReport {
    std::string check;
    u64 lo = 0;
    u64 hi = 0;
    u64 evaluated = 0;  // values of n actually checked after caps
    std::vector<Mismatch> mismatches;
    double elapsed_ms = 0;

    bool passed() const { return mismatches.empty(); }
};

}  // namespace zn::oracle
