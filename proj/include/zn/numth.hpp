#pragma once

// Integer factorization and the arithmetic functions used throughout the
// library. Everything here is exact and operates on std::uint64_t.

#include <zn/errors.hpp>

#include <algorithm>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace zn {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer together with its factorization and the derived quantities
/// every closed form consumes.
struct FactoredInt {
    u64 value = 1;
    std::vector<PrimePower> factors;  // ascending primes
    u64 radical = 1;                  // n0, product of distinct primes
    unsigned omega = 0;               // number of distinct primes
    u64 phi = 1;
    u64 sigma_radical = 1;            // sigma(n0)
    u64 tau_radical = 1;              // tau(n0) = 2^omega

    /// n / n0
    u64 cofactor() const { return value / radical; }
    bool squarefree() const { return value == radical; }
    u64 smallest_prime() const { return factors.empty() ? 1 : factors.front().prime; }
    bool is_prime() const { return factors.size() == 1 && factors.front().exponent == 1; }
    bool is_prime_power() const { return factors.size() == 1; }

    std::vector<u64> primes() const {
        std::vector<u64> out;
        out.reserve(factors.size());
        for (const auto& f : factors) out.push_back(f.prime);
        return out;
    }
};

/// Divisors of a squarefree n0 in the canonical order used as the index space
/// of every quotient matrix: (1, p1, p2, p1p2, p3, p1p3, p2p3, p1p2p3, ...).
/// The second half is the first half multiplied by the largest prime.
struct DivisorTuple {
    u64 n0 = 1;
    std::vector<u64> entries;

    std::size_t size() const { return entries.size(); }
    u64 operator[](std::size_t i) const { return entries[i]; }

    /// Position of d in the tuple, or size() if d is not an entry.
    std::size_t index_of(u64 d) const {
        auto it = std::find(entries.begin(), entries.end(), d);
        return static_cast<std::size_t>(it - entries.begin());
    }
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
    // Primes below 2^16 cover trial division for every n < 2^32.
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1u << 16;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

inline void require_positive(u64 n, const char* op) {
    if (n == 0) throw DomainError(std::string(op) + ": n must be >= 1");
}

}  // namespace detail

inline std::vector<PrimePower> prime_factors(u64 n) {
    detail::require_positive(n, "prime_factors");
    std::vector<PrimePower> out;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    };
    for (std::uint32_t p : detail::small_primes()) {
        if (u64{p} * p > n) break;
        take(p);
    }
    // Beyond the table, continue with odd candidates. Only reached for n >= 2^32.
    for (u64 p = (detail::small_primes().back() + 2); p <= n / p; p += 2) take(p);
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// Factor n and populate every derived field.
inline FactoredInt factorize_u64(u64 n) {
    detail::require_positive(n, "factorize");
    FactoredInt f;
    f.value = n;
    f.factors = prime_factors(n);
    f.omega = static_cast<unsigned>(f.factors.size());
    f.tau_radical = u64{1} << f.omega;
    for (const auto& [p, e] : f.factors) {
        f.radical *= p;
        f.sigma_radical *= (p + 1);
    }
    // phi(n) = (n/n0) * prod(p - 1)
    f.phi = n / f.radical;
    for (const auto& pp : f.factors) f.phi *= (pp.prime - 1);
    return f;
}

/// Negative input is a domain error, as is zero.
template <std::integral T>
FactoredInt factorize(T n) {
    if constexpr (std::is_signed_v<T>) {
        if (n < 0) throw DomainError("factorize: negative input " + std::to_string(n));
    }
    return factorize_u64(static_cast<u64>(n));
}

inline u64 euler_phi(u64 n) { return factorize(n).phi; }

inline u64 sigma(u64 n) {
    detail::require_positive(n, "sigma");
    u64 s = 1;
    for (const auto& [p, e] : prime_factors(n)) {
        u64 term = 1, pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

inline std::vector<u64> divisors(u64 n) {
    detail::require_positive(n, "divisors");
    std::vector<u64> out{1};
    for (const auto& [p, e] : prime_factors(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_squarefree(u64 n) {
    detail::require_positive(n, "is_squarefree");
    const auto fs = prime_factors(n);
    return std::all_of(fs.begin(), fs.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

inline DivisorTuple divisor_tuple(const FactoredInt& n0) {
    if (!n0.squarefree()) {
        throw DomainError("divisor_tuple: " + std::to_string(n0.value) + " is not squarefree");
    }
    DivisorTuple t;
    t.n0 = n0.value;
    t.entries.reserve(n0.tau_radical);
    t.entries.push_back(1);
    for (const auto& f : n0.factors) {
        const std::size_t half = t.entries.size();
        for (std::size_t j = 0; j < half; ++j) t.entries.push_back(t.entries[j] * f.prime);
    }
    return t;
}

inline DivisorTuple divisor_tuple(u64 n0) { return divisor_tuple(factorize(n0)); }

}  // namespace zn
