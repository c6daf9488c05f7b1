#pragma once

// Minimal generating sets of Z_n, decided at the level of divisor classes.
//
// A set S generates Z_n iff no prime p | n divides every element, and that
// only depends on the classes gcd(g, n0). Two elements of one class are never
// both needed and units generate alone, so a minimal set of size k >= 2 is a
// choice of one element from each of k distinct non-unit classes whose
// divisors have gcd 1 while every k-1 of them share a prime.

#include <zn/partition.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace zn {

using BigInt = boost::multiprecision::cpp_int;

struct GenSetFamily {
    FactoredInt n;
    unsigned k = 0;
    std::vector<std::vector<u64>> class_combos;  // divisors, in canonical tuple order
    BigInt count = 0;
    std::optional<std::vector<std::vector<u64>>> sets;  // each ascending; lexicographic overall
};

namespace detail {

inline std::vector<u64> normalized_set(std::vector<u64> s, u64 n, const char* op) {
    if (s.empty()) throw DomainError(std::string(op) + ": empty set");
    for (u64 g : s) {
        if (g >= n) throw DomainError(std::string(op) + ": element " + std::to_string(g) + " not in Z_" + std::to_string(n));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline u64 gcd_with(const std::vector<u64>& s, u64 n, std::size_t skip = static_cast<std::size_t>(-1)) {
    u64 g = n;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) g = std::gcd(g, s[i]);
    }
    return g;
}

}  // namespace detail

inline bool is_generating_set(std::vector<u64> s, u64 n) {
    s = detail::normalized_set(std::move(s), n, "is_generating_set");
    return detail::gcd_with(s, n) == 1;
}

/// Generating, and no proper subset generates. Generation is monotone under
/// inclusion, so it suffices to drop one element at a time.
inline bool is_minimal_generating_set(std::vector<u64> s, u64 n) {
    s = detail::normalized_set(std::move(s), n, "is_minimal_generating_set");
    if (detail::gcd_with(s, n) != 1) return false;
    if (s.size() == 1) return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (detail::gcd_with(s, n, i) == 1) return false;
    }
    return true;
}

inline unsigned max_minimal_size(const FactoredInt& n) {
    if (n.value < 2) throw DomainError("max_minimal_size: Z_1 is trivial");
    return n.omega;
}

/// Divisor-level criterion for a combination of pairwise distinct class divisors.
inline bool is_minimal_combo(const std::vector<u64>& divs) {
    if (divs.size() == 1) return divs.front() == 1;
    u64 all = 0;
    for (u64 d : divs) all = std::gcd(all, d);
    if (all != 1) return false;
    for (std::size_t skip = 0; skip < divs.size(); ++skip) {
        u64 g = 0;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            if (i != skip) g = std::gcd(g, divs[i]);
        }
        if (g == 1) return false;
    }
    return true;
}

inline GenSetFamily enumerate_gk(const ClassPartition& part, unsigned k, bool expand = false) {
    if (k == 0) throw DomainError("enumerate_gk: k must be >= 1");
    GenSetFamily fam;
    fam.n = part.n;
    fam.k = k;
    if (expand && !part.materialized()) {
        throw DomainError("enumerate_gk: expansion requires a materialized partition");
    }

    if (k == 1) {
        fam.class_combos.push_back({1});
        fam.count = part.classes.front().size;
    } else if (k <= part.n.omega) {
        // Choose k of the non-unit classes (tuple indices 1 .. 2^r - 1). Every
        // proper subset of a minimal combo has gcd > 1, so partial picks with
        // gcd 1 are cut off early.
        std::vector<std::size_t> pick;
        std::vector<u64> divs;
        std::function<void(std::size_t, u64)> rec = [&](std::size_t from, u64 g) {
            if (pick.size() == k) {
                divs.clear();
                for (auto i : pick) divs.push_back(part.tuple[i]);
                if (!is_minimal_combo(divs)) return;
                fam.class_combos.push_back(divs);
                BigInt prod = 1;
                for (auto i : pick) prod *= part.classes[i].size;
                fam.count += prod;
                return;
            }
            for (std::size_t i = from; i + (k - pick.size()) <= part.order(); ++i) {
                const u64 g2 = std::gcd(g, part.tuple[i]);
                if (pick.size() + 1 < k && g2 == 1) continue;
                pick.push_back(i);
                rec(i + 1, g2);
                pick.pop_back();
            }
        };
        rec(1, 0);
    }

    if (expand) {
        std::vector<std::vector<u64>> sets;
        for (const auto& combo : fam.class_combos) {
            std::vector<const std::vector<u64>*> lists;
            for (u64 d : combo) lists.push_back(&*part.class_for(d).members);
            std::vector<u64> cur;
            std::function<void(std::size_t)> rec = [&](std::size_t depth) {
                if (depth == lists.size()) {
                    auto s = cur;
                    std::sort(s.begin(), s.end());
                    sets.push_back(std::move(s));
                    return;
                }
                for (u64 g : *lists[depth]) {
                    cur.push_back(g);
                    rec(depth + 1);
                    cur.pop_back();
                }
            };
            rec(0);
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        fam.sets = std::move(sets);
    }
    return fam;
}

inline GenSetFamily enumerate_gk(u64 n, unsigned k, bool expand = false) {
    return enumerate_gk(build_partition(factorize(n), expand), k, expand);
}

}  // namespace zn
