#pragma once

// Range sweeps comparing the closed forms against the brute-force oracle.
// Each named check clips the requested range to its own cap; values of n are
// evaluated concurrently and merged back in ascending order.

#include <zn/gensets.hpp>
#include <zn/graph.hpp>
#include <zn/oracle.hpp>
#include <zn/spectra.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace zn {

using oracle::Mismatch;
using oracle::OracleReport;

struct CheckDef {
    std::string name;
    u64 min_n = 2;
    u64 max_n = 0;
    std::function<bool(u64)> applies;  // empty: every n in range
    std::function<std::vector<Mismatch>(u64)> run;
};

namespace detail {

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
    return os.str();
}

inline std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

inline std::vector<Mismatch> single(u64 n, bool ok, std::string expected, std::string actual) {
    if (ok) return {};
    return {{n, std::move(expected), std::move(actual)}};
}

inline std::string sets_digest(const std::vector<std::vector<u64>>& sets) {
    std::ostringstream os;
    os << sets.size() << " sets";
    if (!sets.empty()) os << ", first {" << join(sets.front()) << "}";
    return os.str();
}

inline std::vector<double> distinct_values(std::vector<double> v, double tol) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    return out;
}

inline double rel_tol(u64 n, double base) { return base * std::max(1.0, static_cast<double>(n)); }

}  // namespace detail

inline const std::vector<CheckDef>& registered_checks() {
    using detail::single;
    static const std::vector<CheckDef> checks = [] {
        std::vector<CheckDef> c;

        c.push_back({"phi", 1, 10000, {}, [](u64 n) {
            const auto lib = factorize(n).phi, ref = oracle::brute_phi(n);
            return single(n, lib == ref, std::to_string(ref), std::to_string(lib));
        }});

        c.push_back({"partition", 2, 5000, {}, [](u64 n) {
            const auto f = factorize(n);
            const auto part = build_partition(f);
            const u64 rad = oracle::brute_radical(n);
            std::vector<Mismatch> out;
            for (const auto& cls : part.classes) {
                u64 count = 0;
                for (u64 a = 0; a < n; ++a) count += std::gcd(a, rad) == cls.divisor ? 1 : 0;
                if (count != cls.size)
                    out.push_back({n, "|[" + std::to_string(cls.divisor) + "]| = " + std::to_string(count),
                                   std::to_string(cls.size)});
            }
            return out;
        }});

        c.push_back({"gensets", 2, oracle::Caps::gensets_n, {}, [](u64 n) {
            std::vector<Mismatch> out;
            for (unsigned k = 1; k <= oracle::Caps::gensets_k; ++k) {
                const auto fam = enumerate_gk(n, k, true);
                const auto ref = oracle::brute_gensets(n, k);
                if (*fam.sets != ref || fam.count != ref.size())
                    out.push_back({n, "k=" + std::to_string(k) + ": " + detail::sets_digest(ref),
                                   "k=" + std::to_string(k) + ": " + detail::sets_digest(*fam.sets) +
                                       ", count " + fam.count.str()});
            }
            return out;
        }});

        c.push_back({"edges", 2, oracle::Caps::edges_n, {}, [](u64 n) {
            const auto lib = edge_count(factorize(n)), ref = oracle::brute_edges(n);
            return single(n, lib == ref, std::to_string(ref), std::to_string(lib));
        }});

        c.push_back({"degrees", 2, 500, {}, [](u64 n) {
            const auto f = factorize(n);
            const auto deg = oracle::brute_degrees(n);
            for (u64 a = 0; a < n; ++a) {
                const auto lib = degree_of_class(class_of(a, f), f);
                if (lib != deg[a])
                    return single(n, false, "deg(" + std::to_string(a) + ") = " + std::to_string(deg[a]), std::to_string(lib));
            }
            return std::vector<Mismatch>{};
        }});

        c.push_back({"diameter", 2, oracle::Caps::diameter_n, {}, [](u64 n) {
            const auto lib = compute_props(factorize(n)).diameter;
            const auto ref = oracle::bfs_diameter(oracle::adjacency(n));
            return single(n, lib == ref, std::to_string(ref), std::to_string(lib));
        }});

        c.push_back({"structure", 2, oracle::Caps::diameter_n, {}, [](u64 n) {
            const auto lib = compute_props(factorize(n));
            const auto ref = oracle::brute_props(n);
            auto show = [](bool reg, bool bip) {
                return std::string("regular=") + (reg ? "yes" : "no") + " bipartite=" + (bip ? "yes" : "no");
            };
            return single(n, lib.is_regular == ref.regular && lib.is_bipartite == ref.bipartite,
                          show(ref.regular, ref.bipartite), show(lib.is_regular, lib.is_bipartite));
        }});

        c.push_back({"eulerian", 2, oracle::Caps::edges_n, {}, [](u64 n) {
            const auto lib = compute_props(factorize(n)).is_eulerian;
            const auto deg = oracle::brute_degrees(n);
            const bool ref = std::all_of(deg.begin(), deg.end(), [](u64 d) { return d % 2 == 0; });
            return single(n, lib == ref, ref ? "eulerian" : "not eulerian", lib ? "eulerian" : "not eulerian");
        }});

        c.push_back({"hamiltonian", 2, oracle::Caps::edges_n, {}, [](u64 n) {
            const auto p = compute_props(factorize(n), n);
            const bool ok = p.is_hamiltonian ? oracle::is_hamiltonian_cycle(p.hamiltonian_cycle, n) : n < 3;
            return single(n, ok, n < 3 ? "no cycle" : "valid cycle",
                          p.is_hamiltonian ? "witness of length " + std::to_string(p.hamiltonian_cycle.size()) : "no cycle");
        }});

        c.push_back({"clique", 2, 40, {}, [](u64 n) {
            const auto lib = compute_props(factorize(n)).clique_number;
            const auto ref = oracle::max_clique(oracle::adjacency(n)).size();
            return single(n, lib == ref, std::to_string(ref), std::to_string(lib));
        }});

        c.push_back({"chromatic", 2, 40, {}, [](u64 n) {
            const auto lib = compute_props(factorize(n)).chromatic_number;
            const auto ref = oracle::chromatic_number(oracle::adjacency(n));
            return single(n, lib == ref, std::to_string(ref), std::to_string(lib));
        }});

        c.push_back({"independence", 2, oracle::Caps::np_hard_n, {}, [](u64 n) {
            const auto lib = compute_props(factorize(n)).independence_number;
            const auto ref = oracle::max_independent_set_size(oracle::adjacency(n));
            return single(n, lib == ref, std::to_string(ref), std::to_string(lib));
        }});

        c.push_back({"planarity", 2, oracle::Caps::np_hard_n, {}, [](u64 n) {
            const bool lib = compute_props(factorize(n)).is_planar;
            if (lib) {
                // Necessary condition only; the embeddings themselves are unit-test fixtures.
                const u64 e = oracle::brute_edges(n);
                const bool ok = n < 3 || e <= 3 * n - 6;
                return single(n, ok, "|E| <= 3n-6", "|E| = " + std::to_string(e));
            }
            const auto k5 = oracle::find_k5(n);
            const bool ok = k5 && oracle::is_clique(*k5, n);
            return single(n, ok, "K5 witness", k5 ? "invalid witness {" + detail::join(*k5) + "}" : "no K5 found");
        }});

        c.push_back({"hjoin", 2, 300, {}, [](u64 n) {
            const auto f = factorize(n);
            const auto rows = hjoin_adjacency(build_h_graph(f), build_partition(f, true));
            const auto ref = oracle::adjacency(n);
            for (u64 a = 0; a < n; ++a)
                if (rows[a] != ref[a]) return single(n, false, "row " + std::to_string(a) + " from gcd rule", "H-join row differs");
            return std::vector<Mismatch>{};
        }});

        c.push_back({"adjacency", 2, 200, {}, [](u64 n) {
            const auto r = adjacency_spectrum(factorize(n), {SpectrumMode::full, false, n, {}});
            return single(n, *r.oracle_residual <= 1e-6, "residual <= 1e-6", "residual " + detail::fmt_double(*r.oracle_residual));
        }});

        c.push_back({"laplacian", 2, 200, {}, [](u64 n) {
            const auto r = laplacian_spectrum(factorize(n), {SpectrumMode::full, false, n, {}});
            return single(n, *r.oracle_residual <= 1e-6, "residual <= 1e-6", "residual " + detail::fmt_double(*r.oracle_residual));
        }});

        c.push_back({"lq-known", 2, 10000, {}, [](u64 n) {
            const auto f = factorize(n);
            const auto q = build_quotients(f);
            const auto vals = sym_eigenvalues(q.LQ.to_sym()).values;
            std::vector<Mismatch> out;
            for (double k : {0.0, static_cast<double>(f.phi), static_cast<double>(n)}) {
                const bool hit = std::any_of(vals.begin(), vals.end(), [&](double v) { return std::abs(v - k) <= 1e-9; });
                if (!hit) out.push_back({n, detail::fmt_double(k) + " in eig(L_Q)", "eig(L_Q) = {" + detail::join(vals) + "}"});
            }
            return out;
        }});

        c.push_back({"mhat", 2, 10000, {}, [](u64 n) {
            const auto f = factorize(n);
            const auto q = build_quotients(f);
            const auto p = char_poly_exact(q.Mhat);
            const auto ref = Polynomial::linear_power(0, 1) * Polynomial::linear_power(static_cast<long long>(f.phi), 1) *
                             Polynomial::linear_power(static_cast<long long>(n), 1);
            return single(n, p == ref, ref.to_string(), p.to_string());
        }});

        c.push_back({"rowsums", 2, 10000, {}, [](u64 n) {
            const auto q = build_quotients(n);
            for (std::size_t i = 0; i < q.order(); ++i) {
                if (q.M.row_sum(i) != 0) return single(n, false, "M row sums 0", "row " + std::to_string(i) + " sums to " + std::to_string(q.M.row_sum(i)));
                const auto want = static_cast<std::int64_t>(q.degrees[i]);
                if (q.TA.row_sum(i) != want)
                    return single(n, false, "TA row " + std::to_string(i) + " sums to " + std::to_string(want), std::to_string(q.TA.row_sum(i)));
            }
            return std::vector<Mismatch>{};
        }});

        c.push_back({"similarity", 2, 500, {}, [](u64 n) {
            const auto q = build_quotients(n);
            const auto [adj, lap] = similarity_residuals(q);
            const double tol = detail::rel_tol(n, 1e-12);
            std::vector<Mismatch> out;
            if (adj > tol || lap > tol)
                out.push_back({n, "P T P^-1 residuals <= " + detail::fmt_double(tol), detail::fmt_double(adj) + ", " + detail::fmt_double(lap)});
            // eig(Q_n) must be roots of the exact characteristic polynomial of TA.
            const auto p = char_poly_exact(q.TA);
            for (double lam : sym_eigenvalues(q.Qn.to_sym()).values) {
                const double rel = root_residual(p, lam);
                if (rel > 1e-8) out.push_back({n, "charpoly(TA) vanishes at " + detail::fmt_double(lam), "relative residual " + detail::fmt_double(rel)});
            }
            return out;
        }});

        c.push_back({"tensor", 2, 2310, [](u64 n) { return is_squarefree(n); }, [](u64 n) {
            const auto t = tensor_factorize(n);
            const auto lhs = build_quotients(n).Qtilde.to_sym();
            const auto rhs = t.product();
            double worst = 0;
            for (std::size_t i = 0; i < lhs.order(); ++i)
                for (std::size_t j = 0; j < lhs.order(); ++j) worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
            return single(n, worst < 1e-12, "max entry error < 1e-12", detail::fmt_double(worst));
        }});

        c.push_back({"scaling", 2, 500, {}, [](u64 n) {
            const auto f = factorize(n);
            const auto big = build_quotients(f), small = build_quotients(f.radical);
            const bool qt = scales_exactly(big.Qtilde, small.Qtilde, f.cofactor());
            const bool lq = scales_exactly(big.LQ, small.LQ, f.cofactor());
            return single(n, qt && lq, "Qtilde and L_Q scale by " + std::to_string(f.cofactor()),
                          std::string("Qtilde ") + (qt ? "ok" : "differs") + ", L_Q " + (lq ? "ok" : "differs"));
        }});

        c.push_back({"lap-distinct-scaling", 2, 200, {}, [](u64 n) {
            const auto f = factorize(n);
            const double s = static_cast<double>(f.cofactor());
            const auto big = detail::distinct_values(laplacian_spectrum(f).expanded(), 1e-6);
            auto small = detail::distinct_values(laplacian_spectrum(factorize(f.radical)).expanded(), 1e-6);
            for (double& v : small) v *= s;
            const bool ok = big.size() == small.size() && multiset_close(big, small, 1e-6);
            return single(n, ok, "{" + detail::join(small) + "}", "{" + detail::join(big) + "}");
        }});

        c.push_back({"weyl", 2, 500, {}, [](u64 n) {
            const auto q = build_quotients(n);
            const double slack = detail::rel_tol(n, 1e-9);
            std::vector<Mismatch> out;
            auto scan = [&](const std::vector<BoundInterval>& bs, const char* which) {
                for (const auto& b : bs)
                    if (!b.contains(slack))
                        out.push_back({n, std::string(which) + " j=" + std::to_string(b.j) + " in [" + detail::fmt_double(b.lo) + ", " +
                                              detail::fmt_double(b.hi) + "]",
                                       detail::fmt_double(b.numeric)});
            };
            scan(weyl_bounds_adjacency(q), "adjacency");
            scan(weyl_bounds_laplacian(q), "laplacian");
            return out;
        }});

        c.push_back({"charpoly", 2, 24, {}, [](u64 n) {
            const auto f = factorize(n);
            std::vector<Mismatch> out;
            const auto a = full_adjacency_char_poly(f);
            const auto a_ref = char_poly_exact(oracle::dense_int_matrix(n, oracle::DenseKind::adjacency));
            if (!(a == a_ref)) out.push_back({n, "adjacency " + a_ref.to_string(), a.to_string()});
            const auto l = full_laplacian_char_poly(f);
            const auto l_ref = char_poly_exact(oracle::dense_int_matrix(n, oracle::DenseKind::laplacian));
            if (!(l == l_ref)) out.push_back({n, "laplacian " + l_ref.to_string(), l.to_string()});
            return out;
        }});

        return c;
    }();
    return checks;
}

inline std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& c : registered_checks()) out.push_back(c.name);
    return out;
}

inline const CheckDef& find_check(const std::string& name) {
    for (const auto& c : registered_checks())
        if (c.name == name) return c;
    throw DomainError("unknown check '" + name + "'");
}

/// Expand "all" and validate names; order follows the request.
inline std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
    std::vector<std::string> out;
    for (const auto& r : requested) {
        if (r == "all") {
            for (const auto& n : check_names())
                if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        } else {
            find_check(r);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    }
    return out;
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

inline OracleReport run_check(const CheckDef& check, u64 lo, u64 hi, unsigned threads = default_threads()) {
    if (lo > hi) throw DomainError("run_check: empty range");
    OracleReport rep;
    rep.check = check.name;
    rep.lo = std::max(lo, check.min_n);
    rep.hi = std::min(hi, check.max_n);
    const auto start = std::chrono::steady_clock::now();

    std::vector<u64> ns;
    for (u64 n = rep.lo; n <= rep.hi && rep.lo <= rep.hi; ++n)
        if (!check.applies || check.applies(n)) ns.push_back(n);
    rep.evaluated = ns.size();

    std::vector<std::vector<Mismatch>> results(ns.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ns.size(); i = next++) {
            try {
                results[i] = check.run(ns[i]);
            } catch (const std::exception& e) {
                results[i] = {{ns[i], "no error", std::string("exception: ") + e.what()}};
            }
        }
    };
    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ns.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (auto& r : results) rep.mismatches.insert(rep.mismatches.end(), r.begin(), r.end());
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline OracleReport run_check(const std::string& name, u64 lo, u64 hi, unsigned threads = default_threads()) {
    return run_check(find_check(name), lo, hi, threads);
}

inline std::vector<OracleReport> run_checks(const std::vector<std::string>& names, u64 lo, u64 hi,
                                            unsigned threads = default_threads()) {
    std::vector<OracleReport> out;
    for (const auto& name : resolve_checks(names)) out.push_back(run_check(name, lo, hi, threads));
    return out;
}

}  // namespace zn
