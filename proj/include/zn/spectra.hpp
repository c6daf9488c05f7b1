#pragma once

// Quotient matrices of the equitable partition by divisor classes, and the
// adjacency and Laplacian spectra assembled from them.
//
// With s_1 = phi(n) and s_j = |[d_j]| (so a_{j-1} = s_j), the rows and
// columns follow the canonical divisor tuple:
//
//   TA(i, j) = s_j [gcd(d_i, d_j) = 1]  (i != j),  TA(1,1) = phi(n) - 1
//   Q_n      = P TA P^-1,  P = diag(sqrt(s_j))     (symmetric)
//   Qtilde   = Q_n + diag(1, 0, ..., 0)
//   M        = D_L - offdiag(TA),  D_L = diag(n - phi(n), deg(d_2), ...)
//   L_Q      = P M P^-1 = -Qtilde + diag(n, deg(d_2), ..., deg(d_{2^r}))
//
// Square-root entries are stored as (sign, exact square) so that the scaling
// laws Qtilde(n) = (n/n0) Qtilde(n0) and L_Q(n) = (n/n0) L_Q(n0) can be
// compared exactly.

#include <zn/graph.hpp>
#include <zn/linalg.hpp>
#include <zn/oracle.hpp>
#include <zn/partition.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace zn {

/// sign * sqrt(square)
struct RootEntry {
    int sign = 0;
    u64 square = 0;

    static RootEntry integer(std::int64_t v) {
        const u64 mag = static_cast<u64>(v < 0 ? -v : v);
        return {v == 0 ? 0 : (v < 0 ? -1 : 1), mag * mag};
    }
    static RootEntry root(int sign, u64 square) { return {square == 0 ? 0 : sign, square}; }

    double value() const { return sign * std::sqrt(static_cast<double>(square)); }
    RootEntry negated() const { return {-sign, square}; }
    friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

class RootMatrix {
public:
    RootMatrix() = default;
    explicit RootMatrix(std::size_t order) : order_(order), data_(order * order) {}

    std::size_t order() const { return order_; }
    RootEntry& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    const RootEntry& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    SymMatrix to_sym() const {
        SymMatrix m(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i; j < order_; ++j) m.set(i, j, (*this)(i, j).value());
        return m;
    }

    friend bool operator==(const RootMatrix&, const RootMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<RootEntry> data_;
};

/// True iff big = factor * small entrywise, compared on exact squares.
inline bool scales_exactly(const RootMatrix& big, const RootMatrix& small, u64 factor) {
    if (big.order() != small.order()) return false;
    const unsigned __int128 f2 = static_cast<unsigned __int128>(factor) * factor;
    for (std::size_t i = 0; i < big.order(); ++i)
        for (std::size_t j = 0; j < big.order(); ++j) {
            const auto& b = big(i, j);
            const auto& s = small(i, j);
            if (b.sign != s.sign) return false;
            if (static_cast<unsigned __int128>(b.square) != f2 * s.square) return false;
        }
    return true;
}

inline constexpr unsigned kMaxQuotientPrimes = 6;  // order 2^r <= 64

struct QuotientMatrices {
    FactoredInt n;
    DivisorTuple tuple;
    std::vector<u64> sizes;    // s_1 = phi(n), s_j = a_{j-1}
    std::vector<u64> degrees;  // deg(d_j); deg(1) = n - 1
    IntMatrix TA;
    RootMatrix Qn;
    RootMatrix Qtilde;
    IntMatrix M;
    RootMatrix LQ;
    IntMatrix Mhat;

    std::size_t order() const { return tuple.size(); }
    bool coprime(std::size_t i, std::size_t j) const { return std::gcd(tuple[i], tuple[j]) == 1; }
};

inline QuotientMatrices build_quotients(const FactoredInt& n) {
    if (n.value < 2) throw DomainError("build_quotients: n must be >= 2");
    if (n.omega > kMaxQuotientPrimes) {
        throw LimitError("build_quotients: 2^" + std::to_string(n.omega) + " exceeds the quotient order cap 64");
    }
    const auto part = build_partition(n);
    QuotientMatrices q;
    q.n = n;
    q.tuple = part.tuple;
    const std::size_t k = part.order();
    for (const auto& c : part.classes) {
        q.sizes.push_back(c.size);
        q.degrees.push_back(degree_of_class(c.divisor, n));
    }
    const auto phi = static_cast<std::int64_t>(n.phi);
    const auto nn = static_cast<std::int64_t>(n.value);

    q.TA = IntMatrix(k);
    q.M = IntMatrix(k);
    q.Qn = RootMatrix(k);
    q.Qtilde = RootMatrix(k);
    q.LQ = RootMatrix(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (!q.coprime(i, j)) continue;
            q.TA(i, j) = static_cast<std::int64_t>(q.sizes[j]);
            q.M(i, j) = -q.TA(i, j);
            const auto rho = RootEntry::root(1, q.sizes[i] * q.sizes[j]);
            q.Qn(i, j) = rho;
            q.Qtilde(i, j) = rho;
            q.LQ(i, j) = rho.negated();
        }
    }
    q.TA(0, 0) = phi - 1;
    q.Qn(0, 0) = RootEntry::integer(phi - 1);
    q.Qtilde(0, 0) = RootEntry::integer(phi);
    q.M(0, 0) = nn - phi;
    q.LQ(0, 0) = RootEntry::integer(nn - phi);
    for (std::size_t i = 1; i < k; ++i) {
        q.M(i, i) = static_cast<std::int64_t>(q.degrees[i]);
        q.LQ(i, i) = RootEntry::integer(q.M(i, i));
    }

    const auto s = static_cast<std::int64_t>(n.cofactor());
    q.Mhat = IntMatrix{{nn - phi, -(nn - phi - s), -s}, {-phi, phi, 0}, {-phi, 0, phi}};
    return q;
}

inline QuotientMatrices build_quotients(u64 n) { return build_quotients(factorize(n)); }

/// max |P TA P^-1 - Q_n| and max |P M P^-1 - L_Q|, entrywise.
inline std::pair<double, double> similarity_residuals(const QuotientMatrices& q) {
    double adj = 0, lap = 0;
    for (std::size_t i = 0; i < q.order(); ++i)
        for (std::size_t j = 0; j < q.order(); ++j) {
            const double scale = std::sqrt(static_cast<double>(q.sizes[i])) / std::sqrt(static_cast<double>(q.sizes[j]));
            adj = std::max(adj, std::abs(scale * static_cast<double>(q.TA(i, j)) - q.Qn(i, j).value()));
            lap = std::max(lap, std::abs(scale * static_cast<double>(q.M(i, j)) - q.LQ(i, j).value()));
        }
    return {adj, lap};
}

// ---------------------------------------------------------------------------
// Tensor factorization of Qtilde(n0)

struct TensorFactorization {
    u64 n0 = 1;
    double scale = 1.0;               // sqrt(phi(n0))
    std::vector<u64> factor_primes;   // factor i carries p_{r+1-i}: largest prime first
    std::vector<SymMatrix> factors;   // U_i = [[sqrt(phi(p)), 1], [1, 0]]

    SymMatrix product() const {
        SymMatrix acc{{scale}};
        for (const auto& u : factors) acc = kron(acc, u);
        return acc;
    }

    /// Eigenvalues of U_i: (sqrt(phi(p)) +- sqrt(4 + phi(p))) / 2, larger first.
    static std::pair<double, double> factor_eigenvalues(u64 p) {
        const double f = static_cast<double>(p - 1);
        return {(std::sqrt(f) + std::sqrt(4 + f)) / 2, (std::sqrt(f) - std::sqrt(4 + f)) / 2};
    }
};

inline TensorFactorization tensor_factorize(const FactoredInt& n0) {
    if (!n0.squarefree()) {
        throw DomainError("tensor_factorize: " + std::to_string(n0.value) + " is not squarefree; reduce to n0 first");
    }
    TensorFactorization t;
    t.n0 = n0.value;
    t.scale = std::sqrt(static_cast<double>(n0.phi));
    for (auto it = n0.factors.rbegin(); it != n0.factors.rend(); ++it) {
        t.factor_primes.push_back(it->prime);
        t.factors.push_back(SymMatrix{{std::sqrt(static_cast<double>(it->prime - 1)), 1.0}, {1.0, 0.0}});
    }
    return t;
}

inline TensorFactorization tensor_factorize(u64 n0) { return tensor_factorize(factorize(n0)); }

// ---------------------------------------------------------------------------
// Spectrum reports

enum class MatrixKind { adjacency, laplacian, quotient };
enum class Provenance { closed_form, numeric };
enum class SpectrumMode { quotient_only, full };

inline const char* to_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::quotient: return "quotient";
    }
    return "?";
}
inline const char* to_string(Provenance p) { return p == Provenance::closed_form ? "closed-form" : "numeric"; }

struct Eigenpair {
    double value = 0;
    u64 multiplicity = 1;
    Provenance provenance = Provenance::numeric;
    std::string source;  // formula or matrix it came from
};

struct BoundInterval {
    std::size_t j = 0;  // 1-based, non-increasing order
    double lo = 0;
    double hi = 0;
    double numeric = 0;

    bool contains(double slack = 0.0) const { return lo - slack <= numeric && numeric <= hi + slack; }
};

struct SpectrumReport {
    u64 n = 0;
    MatrixKind kind = MatrixKind::adjacency;
    std::vector<Eigenpair> eigen;  // non-increasing
    std::vector<BoundInterval> bounds;
    std::optional<double> oracle_residual;  // full mode only

    u64 order() const {
        u64 s = 0;
        for (const auto& e : eigen) s += e.multiplicity;
        return s;
    }

    std::vector<double> expanded() const {
        std::vector<double> out;
        out.reserve(order());
        for (const auto& e : eigen) out.insert(out.end(), e.multiplicity, e.value);
        return out;
    }

    std::vector<double> values_from(const std::string& source) const {
        std::vector<double> out;
        for (const auto& e : eigen)
            if (e.source == source) out.insert(out.end(), e.multiplicity, e.value);
        return out;
    }

    void sort() {
        std::stable_sort(eigen.begin(), eigen.end(), [](const Eigenpair& a, const Eigenpair& b) { return a.value > b.value; });
    }
};

struct SpectrumOptions {
    SpectrumMode mode = SpectrumMode::quotient_only;
    bool with_bounds = false;
    u64 dense_limit = kDefaultDenseLimit;
    JacobiOptions jacobi{};
};

inline constexpr const char* kSourceQn = "eig(Q_n)";
inline constexpr const char* kSourceLQ = "eig(L_Q)";
inline constexpr const char* kSourceLQKnown = "eig(L_Q) in {0, phi(n), n}";
inline constexpr const char* kSourceClique = "clique block";
inline constexpr const char* kSourceEmpty = "empty class blocks";
inline constexpr const char* kSourceTensor = "tensor product of U_i";

/// Eigenvalues of Qtilde(n) = (n/n0) sqrt(phi(n0)) prod_i u_{i, l_i}, over all sign choices.
inline std::vector<double> qtilde_closed_form(const FactoredInt& n) {
    const auto t = tensor_factorize(factorize(n.radical));
    std::vector<double> vals{static_cast<double>(n.cofactor()) * t.scale};
    for (u64 p : t.factor_primes) {
        const auto [hi, lo] = TensorFactorization::factor_eigenvalues(p);
        std::vector<double> next;
        next.reserve(vals.size() * 2);
        for (double v : vals) {
            next.push_back(v * hi);
            next.push_back(v * lo);
        }
        vals = std::move(next);
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

inline SpectrumReport qtilde_eigenvalues(const FactoredInt& n) {
    if (n.value < 2) throw DomainError("qtilde_eigenvalues: n must be >= 2");
    SpectrumReport r;
    r.n = n.value;
    r.kind = MatrixKind::quotient;
    for (double v : qtilde_closed_form(n)) r.eigen.push_back({v, 1, Provenance::closed_form, kSourceTensor});
    return r;
}

/// Weyl sandwich for Q_n = Qtilde + diag(-1, 0, ..., 0):
/// lambda_j(Qtilde) - 1 <= lambda_j(Q_n) <= lambda_j(Qtilde).
inline std::vector<BoundInterval> weyl_bounds_adjacency(const QuotientMatrices& q, JacobiOptions jac = {}) {
    const auto upper = qtilde_closed_form(q.n);
    const auto numeric = sym_eigenvalues(q.Qn.to_sym(), jac).values;
    std::vector<BoundInterval> out;
    for (std::size_t j = 0; j < upper.size(); ++j) out.push_back({j + 1, upper[j] - 1, upper[j], numeric[j]});
    return out;
}

/// Weyl sandwich for L_Q = -Qtilde + D_L with phi(n) <= D_L <= n:
/// lambda_j(-Qtilde) + phi(n) <= lambda_j(L_Q) <= lambda_j(-Qtilde) + n.
inline std::vector<BoundInterval> weyl_bounds_laplacian(const QuotientMatrices& q, JacobiOptions jac = {}) {
    auto neg = qtilde_closed_form(q.n);
    for (double& v : neg) v = -v;
    std::sort(neg.begin(), neg.end(), std::greater<>());
    const auto numeric = sym_eigenvalues(q.LQ.to_sym(), jac).values;
    const double phi = static_cast<double>(q.n.phi), nn = static_cast<double>(q.n.value);
    std::vector<BoundInterval> out;
    for (std::size_t j = 0; j < neg.size(); ++j) out.push_back({j + 1, neg[j] + phi, neg[j] + nn, numeric[j]});
    return out;
}

inline SpectrumReport adjacency_spectrum(const FactoredInt& n, const SpectrumOptions& opt = {}) {
    if (opt.mode == SpectrumMode::full && n.value > opt.dense_limit) {
        throw LimitError("adjacency_spectrum: full mode needs n <= dense limit " + std::to_string(opt.dense_limit));
    }
    const auto q = build_quotients(n);
    SpectrumReport r;
    r.n = n.value;
    r.kind = MatrixKind::adjacency;
    for (double v : sym_eigenvalues(q.Qn.to_sym(), opt.jacobi).values) r.eigen.push_back({v, 1, Provenance::numeric, kSourceQn});
    if (n.phi > 1) r.eigen.push_back({-1.0, n.phi - 1, Provenance::closed_form, kSourceClique});
    u64 zeros = 0;
    for (std::size_t j = 1; j < q.order(); ++j) zeros += q.sizes[j] - 1;
    if (zeros) r.eigen.push_back({0.0, zeros, Provenance::closed_form, kSourceEmpty});
    r.sort();
    if (opt.with_bounds) r.bounds = weyl_bounds_adjacency(q, opt.jacobi);
    if (opt.mode == SpectrumMode::full) {
        auto dense = sym_eigenvalues(oracle::dense_matrix(n.value, oracle::DenseKind::adjacency, opt.dense_limit), opt.jacobi);
        r.oracle_residual = multiset_distance(r.expanded(), dense.values);
    }
    return r;
}

inline SpectrumReport laplacian_spectrum(const FactoredInt& n, const SpectrumOptions& opt = {}) {
    if (opt.mode == SpectrumMode::full && n.value > opt.dense_limit) {
        throw LimitError("laplacian_spectrum: full mode needs n <= dense limit " + std::to_string(opt.dense_limit));
    }
    const auto q = build_quotients(n);
    SpectrumReport r;
    r.n = n.value;
    r.kind = MatrixKind::laplacian;

    auto lq = sym_eigenvalues(q.LQ.to_sym(), opt.jacobi).values;
    // 0 and n are always eigenvalues of L_Q; phi(n) is one only when the
    // classes strictly between [1] and [n0] are non-empty, i.e. r >= 2.
    std::vector<double> known{0.0, static_cast<double>(n.value)};
    if (n.omega >= 2) known.push_back(static_cast<double>(n.phi));
    std::vector<bool> tagged(lq.size(), false);
    const double tol = 1e-9 * std::max(1.0, static_cast<double>(n.value));
    for (double k : known) {
        std::size_t best = lq.size();
        for (std::size_t i = 0; i < lq.size(); ++i) {
            if (tagged[i]) continue;
            if (best == lq.size() || std::abs(lq[i] - k) < std::abs(lq[best] - k)) best = i;
        }
        if (best < lq.size() && std::abs(lq[best] - k) <= tol) {
            tagged[best] = true;
            lq[best] = k;
        }
    }
    for (std::size_t i = 0; i < lq.size(); ++i) {
        if (tagged[i]) r.eigen.push_back({lq[i], 1, Provenance::closed_form, kSourceLQKnown});
        else r.eigen.push_back({lq[i], 1, Provenance::numeric, kSourceLQ});
    }
    if (n.phi > 1) r.eigen.push_back({static_cast<double>(n.value), n.phi - 1, Provenance::closed_form, kSourceClique});
    // Each non-unit class [d_j] contributes deg(d_j) with multiplicity |[d_j]| - 1.
    for (std::size_t j = 1; j < q.order(); ++j) {
        if (q.sizes[j] > 1) {
            r.eigen.push_back({static_cast<double>(q.degrees[j]), q.sizes[j] - 1, Provenance::closed_form,
                               "empty class [" + std::to_string(q.tuple[j]) + "]"});
        }
    }
    r.sort();
    if (opt.with_bounds) r.bounds = weyl_bounds_laplacian(q, opt.jacobi);
    if (opt.mode == SpectrumMode::full) {
        auto dense = sym_eigenvalues(oracle::dense_matrix(n.value, oracle::DenseKind::laplacian, opt.dense_limit), opt.jacobi);
        r.oracle_residual = multiset_distance(r.expanded(), dense.values);
    }
    return r;
}

enum class QuotientWhich { adjacency, laplacian };

inline Polynomial char_poly_quotient(const FactoredInt& n, QuotientWhich which) {
    const auto q = build_quotients(n);
    return char_poly_exact(which == QuotientWhich::adjacency ? q.TA : q.M);
}

/// Full characteristic polynomial of A(E_n) assembled from the quotient:
/// phi_TA(x) (x + 1)^(phi(n) - 1) x^(sum (a_i - 1)).
inline Polynomial full_adjacency_char_poly(const FactoredInt& n) {
    const auto q = build_quotients(n);
    u64 zeros = 0;
    for (std::size_t j = 1; j < q.order(); ++j) zeros += q.sizes[j] - 1;
    return char_poly_exact(q.TA) * Polynomial::linear_power(-1, n.phi - 1) * Polynomial::linear_power(0, zeros);
}

/// Full characteristic polynomial of L(E_n):
/// phi_M(x) (x - n)^(phi(n) - 1) prod_j (x - deg(d_j))^(|[d_j]| - 1).
inline Polynomial full_laplacian_char_poly(const FactoredInt& n) {
    const auto q = build_quotients(n);
    auto p = char_poly_exact(q.M) * Polynomial::linear_power(static_cast<long long>(n.value), n.phi - 1);
    for (std::size_t j = 1; j < q.order(); ++j)
        p = p * Polynomial::linear_power(static_cast<long long>(q.degrees[j]), q.sizes[j] - 1);
    return p;
}

}  // namespace zn
