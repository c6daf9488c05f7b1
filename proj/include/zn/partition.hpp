#pragma once

// The classes [d] = { a in Z_n : gcd(a, n0) = d } for d | n0, indexed by the
// canonical divisor tuple.

#include <zn/numth.hpp>

#include <optional>
#include <string>
#include <vector>

namespace zn {

struct DivisorClass {
    u64 divisor = 1;
    u64 size = 0;
    std::optional<std::vector<u64>> members;  // ascending residues, when materialized
};

struct ClassPartition {
    FactoredInt n;
    DivisorTuple tuple;
    std::vector<DivisorClass> classes;  // aligned with tuple
    std::vector<u64> a;                 // a_i = |[d_{i+1}]|, i = 1 .. 2^r - 1 (stored 0-based)

    std::size_t order() const { return classes.size(); }
    bool materialized() const { return !classes.empty() && classes.front().members.has_value(); }

    const DivisorClass& class_for(u64 d) const {
        const auto i = tuple.index_of(d);
        if (i == tuple.size()) throw DomainError("no class [" + std::to_string(d) + "] in Z_" + std::to_string(n.value));
        return classes[i];
    }
};

/// Class representative of a residue: gcd(a, n0).
inline u64 class_of(u64 a, const FactoredInt& n) {
    if (a >= n.value) {
        throw DomainError("class_of: residue " + std::to_string(a) + " not in [0, " + std::to_string(n.value) + ")");
    }
    return std::gcd(a, n.radical);
}

/// Closed-form class size: (n/n0) * phi(n0/d). For d = 1 this is phi(n).
inline u64 class_size(u64 d, const FactoredInt& n) {
    if (d == 0 || n.radical % d != 0) {
        throw DomainError("class_size: " + std::to_string(d) + " does not divide n0 = " + std::to_string(n.radical));
    }
    return n.cofactor() * euler_phi(n.radical / d);
}

/// Binary sequence of d: character i is '1' iff the i-th smallest prime divides d.
inline std::string binary_sequence(u64 d, const FactoredInt& n) {
    std::string s;
    s.reserve(n.factors.size());
    for (const auto& f : n.factors) s.push_back(d % f.prime == 0 ? '1' : '0');
    return s;
}

inline ClassPartition build_partition(const FactoredInt& n, bool materialize = false) {
    if (n.value < 2) throw DomainError("build_partition: n must be >= 2");
    ClassPartition part;
    part.n = n;
    part.tuple = divisor_tuple(factorize(n.radical));
    part.classes.reserve(part.tuple.size());
    for (u64 d : part.tuple.entries) part.classes.push_back({d, class_size(d, n), std::nullopt});
    for (std::size_t i = 1; i < part.classes.size(); ++i) part.a.push_back(part.classes[i].size);

    if (materialize) {
        std::vector<std::vector<u64>> members(part.order());
        for (std::size_t i = 0; i < part.order(); ++i) members[i].reserve(part.classes[i].size);
        // Residues are visited in order, so each member list comes out sorted.
        for (u64 x = 0; x < n.value; ++x) {
            const auto idx = part.tuple.index_of(class_of(x, n));
            members[idx].push_back(x);
        }
        for (std::size_t i = 0; i < part.order(); ++i) {
            if (members[i].size() != part.classes[i].size) {
                throw std::logic_error("build_partition: class [" + std::to_string(part.classes[i].divisor) +
                                       "] materialized " + std::to_string(members[i].size()) + " members, expected " +
                                       std::to_string(part.classes[i].size));
            }
            part.classes[i].members = std::move(members[i]);
        }
    }
    return part;
}

inline ClassPartition build_partition(u64 n, bool materialize = false) {
    return build_partition(factorize(n), materialize);
}

}  // namespace zn
