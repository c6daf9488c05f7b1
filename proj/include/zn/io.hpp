#pragma once

// JSON, CSV and DOT writers. Layouts are documented in docs/formats.md.

#include <zn/gensets.hpp>
#include <zn/graph.hpp>
#include <zn/oracle.hpp>
#include <zn/spectra.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace zn::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "zngraph";
inline constexpr const char* kToolVersion = "1.0.0";

struct OutputOptions {
    bool full_precision = false;
    bool meta = true;
};

/// Round to 6 significant digits unless full precision is requested.
/// Rounding noise below 1e-12 prints as 0.
inline double shown(double v, const OutputOptions& opt) {
    if (opt.full_precision || !std::isfinite(v)) return v;
    if (std::abs(v) < 1e-12) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no "-0"
}

inline std::string number_text(double v, const OutputOptions& opt) {
    char buf[40];
    if (opt.full_precision) std::snprintf(buf, sizeof buf, "%.17g", v);
    else std::snprintf(buf, sizeof buf, "%.6g", shown(v, opt));
    return buf;
}

inline json meta_block(const std::string& command) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return {{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"generated", stamp}};
}

inline void attach_meta(json& j, const std::string& command, const OutputOptions& opt) {
    if (opt.meta) j["meta"] = meta_block(command);
}

/// Counts that fit in 64 bits are numbers, larger ones decimal strings.
inline json big_json(const BigInt& v) {
    if (v <= std::numeric_limits<u64>::max()) return static_cast<u64>(v);
    return v.str();
}

// ---------------------------------------------------------------------------
// Class table

inline std::vector<u64> neighbor_classes(const ClassPartition& part, std::size_t i) {
    std::vector<u64> out;
    for (std::size_t j = 0; j < part.order(); ++j) {
        if (j == i && i != 0) continue;
        if (std::gcd(part.tuple[i], part.tuple[j]) == 1) out.push_back(part.tuple[j]);
    }
    return out;
}

inline json classes_json(const ClassPartition& part) {
    json rows = json::array();
    for (std::size_t i = 0; i < part.order(); ++i) {
        const auto& c = part.classes[i];
        json row{{"binary", binary_sequence(c.divisor, part.n)},
                 {"divisor", c.divisor},
                 {"size", c.size},
                 {"neighbors", neighbor_classes(part, i)},
                 {"degree", degree_of_class(c.divisor, part.n)}};
        if (c.members) row["members"] = *c.members;
        rows.push_back(std::move(row));
    }
    return {{"n", part.n.value}, {"n0", part.n.radical}, {"primes", part.n.primes()}, {"classes", rows}};
}

inline std::string join_classes(const std::vector<u64>& ds, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? sep : "") + ("[" + std::to_string(ds[i]) + "]");
    return s;
}

/// Columns: s, d_s, size, members, N(d_s), deg(d_s).
inline void write_classes_csv(std::ostream& os, const ClassPartition& part) {
    os << "s,d,size,members,neighbors,degree\n";
    for (std::size_t i = 0; i < part.order(); ++i) {
        const auto& c = part.classes[i];
        os << binary_sequence(c.divisor, part.n) << ',' << c.divisor << ',' << c.size << ",\"";
        if (c.members)
            for (std::size_t k = 0; k < c.members->size(); ++k) os << (k ? " " : "") << (*c.members)[k];
        os << "\",\"" << join_classes(neighbor_classes(part, i), " ") << "\"," << degree_of_class(c.divisor, part.n) << '\n';
    }
}

inline void write_classes_text(std::ostream& os, const ClassPartition& part) {
    os << "n = " << part.n.value << ", n0 = " << part.n.radical << ", " << part.order() << " classes\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %8s %8s %8s  %s\n", "s", "d", "size", "degree", "N(d)");
    os << line;
    for (std::size_t i = 0; i < part.order(); ++i) {
        const auto& c = part.classes[i];
        std::snprintf(line, sizeof line, "%-8s %8llu %8llu %8llu  ", binary_sequence(c.divisor, part.n).c_str(),
                      static_cast<unsigned long long>(c.divisor), static_cast<unsigned long long>(c.size),
                      static_cast<unsigned long long>(degree_of_class(c.divisor, part.n)));
        os << line << join_classes(neighbor_classes(part, i), " u ") << '\n';
    }
}

// ---------------------------------------------------------------------------
// Generating sets

inline json gensets_json(const GenSetFamily& fam) {
    json j{{"n", fam.n.value}, {"k", fam.k}, {"combos", fam.class_combos}, {"count", big_json(fam.count)}};
    if (fam.sets) j["sets"] = *fam.sets;
    return j;
}

inline void write_gensets_text(std::ostream& os, const GenSetFamily& fam) {
    os << "G_" << fam.k << "(Z_" << fam.n.value << "): " << fam.count.str() << " minimal generating sets\n";
    for (const auto& combo : fam.class_combos) os << "  " << join_classes(combo, " x ") << '\n';
    if (fam.sets)
        for (const auto& s : *fam.sets) {
            os << "  {";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
            os << "}\n";
        }
}

inline void write_gensets_csv(std::ostream& os, const GenSetFamily& fam, bool header = true) {
    if (header) os << "k,combo,count\n";
    for (const auto& combo : fam.class_combos) {
        BigInt c = 1;
        for (u64 d : combo) c *= class_size(d, fam.n);
        os << fam.k << ",\"" << join_classes(combo, " ") << "\"," << c.str() << '\n';
    }
}

// ---------------------------------------------------------------------------
// Properties

inline json props_json(const GraphProps& p, const Rational& prob) {
    json j{{"n", p.n},
           {"diameter", p.diameter},
           {"is_regular", p.is_regular},
           {"is_bipartite", p.is_bipartite},
           {"is_hamiltonian", p.is_hamiltonian}};
    if (p.hamiltonian_cycle.empty()) j["hamiltonian_cycle"] = nullptr;
    else j["hamiltonian_cycle"] = p.hamiltonian_cycle;
    j["is_eulerian"] = p.is_eulerian;
    j["is_planar"] = p.is_planar;
    j["clique_number"] = p.clique_number;
    j["chromatic_number"] = p.chromatic_number;
    j["independence_number"] = p.independence_number;
    j["edge_count"] = p.edge_count;
    j["generating_probability"] = {{"num", prob.num}, {"den", prob.den}};
    return j;
}

inline void write_props_text(std::ostream& os, const GraphProps& p, const Rational& prob) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "n                    " << p.n << '\n'
       << "edges                " << p.edge_count << '\n'
       << "diameter             " << p.diameter << '\n'
       << "regular              " << yn(p.is_regular) << '\n'
       << "bipartite            " << yn(p.is_bipartite) << '\n'
       << "hamiltonian          " << yn(p.is_hamiltonian) << '\n'
       << "eulerian             " << yn(p.is_eulerian) << '\n'
       << "planar               " << yn(p.is_planar) << '\n'
       << "clique number        " << p.clique_number << '\n'
       << "chromatic number     " << p.chromatic_number << '\n'
       << "independence number  " << p.independence_number << '\n'
       << "P(pair generates)    " << prob.num << '/' << prob.den << '\n';
}

/// One property,value row per invariant.
inline void write_props_csv(std::ostream& os, const GraphProps& p, const Rational& prob) {
    auto tf = [](bool b) { return b ? "true" : "false"; };
    os << "property,value\n"
       << "n," << p.n << '\n'
       << "edge_count," << p.edge_count << '\n'
       << "diameter," << p.diameter << '\n'
       << "is_regular," << tf(p.is_regular) << '\n'
       << "is_bipartite," << tf(p.is_bipartite) << '\n'
       << "is_hamiltonian," << tf(p.is_hamiltonian) << '\n'
       << "is_eulerian," << tf(p.is_eulerian) << '\n'
       << "is_planar," << tf(p.is_planar) << '\n'
       << "clique_number," << p.clique_number << '\n'
       << "chromatic_number," << p.chromatic_number << '\n'
       << "independence_number," << p.independence_number << '\n'
       << "generating_probability," << prob.num << '/' << prob.den << '\n';
}

// ---------------------------------------------------------------------------
// Spectra

inline json spectrum_json(const SpectrumReport& r, const OutputOptions& opt) {
    json eig = json::array();
    for (const auto& e : r.eigen)
        eig.push_back({{"value", shown(e.value, opt)},
                       {"multiplicity", e.multiplicity},
                       {"provenance", to_string(e.provenance)},
                       {"source", e.source}});
    json bounds = json::array();
    for (const auto& b : r.bounds)
        bounds.push_back({{"j", b.j}, {"lo", shown(b.lo, opt)}, {"hi", shown(b.hi, opt)}, {"numeric", shown(b.numeric, opt)}});
    json j{{"n", r.n}, {"matrix", to_string(r.kind)}, {"eigen", eig}, {"bounds", bounds}};
    if (r.oracle_residual) j["oracle_residual"] = *r.oracle_residual;
    return j;
}

/// Columns: j, lower, numeric, upper.
inline void write_bounds_csv(std::ostream& os, const std::vector<BoundInterval>& bounds, const OutputOptions& opt) {
    os << "j,lower,numeric,upper\n";
    for (const auto& b : bounds)
        os << b.j << ',' << number_text(b.lo, opt) << ',' << number_text(b.numeric, opt) << ',' << number_text(b.hi, opt) << '\n';
}

inline void write_spectrum_csv(std::ostream& os, const SpectrumReport& r, const OutputOptions& opt) {
    if (!r.bounds.empty()) {
        write_bounds_csv(os, r.bounds, opt);
        return;
    }
    os << "value,multiplicity,provenance,source\n";
    for (const auto& e : r.eigen)
        os << number_text(e.value, opt) << ',' << e.multiplicity << ',' << to_string(e.provenance) << ",\"" << e.source << "\"\n";
}

inline void write_spectrum_text(std::ostream& os, const SpectrumReport& r, const OutputOptions& opt) {
    os << to_string(r.kind) << " spectrum of E_" << r.n << " (" << r.order() << " eigenvalues)\n";
    for (const auto& e : r.eigen)
        os << "  " << number_text(e.value, opt) << "  x" << e.multiplicity << "  [" << to_string(e.provenance) << ": " << e.source << "]\n";
    if (!r.bounds.empty()) {
        os << "Weyl bounds (j: lower <= numeric <= upper)\n";
        for (const auto& b : r.bounds)
            os << "  " << b.j << ": " << number_text(b.lo, opt) << " <= " << number_text(b.numeric, opt) << " <= "
               << number_text(b.hi, opt) << (b.contains(1e-9) ? "" : "  VIOLATED") << '\n';
    }
    if (r.oracle_residual) os << "dense oracle residual: " << number_text(*r.oracle_residual, {true, false}) << '\n';
}

// ---------------------------------------------------------------------------
// Oracle reports

inline json report_json(const oracle::OracleReport& r) {
    json mm = json::array();
    for (const auto& m : r.mismatches) mm.push_back({{"n", m.n}, {"expected", m.expected}, {"actual", m.actual}});
    return {{"check", r.check},
            {"range", {r.lo, r.hi}},
            {"evaluated", r.evaluated},
            {"passed", r.passed()},
            {"mismatches", mm},
            {"elapsed_ms", std::round(r.elapsed_ms * 10) / 10}};
}

inline json verify_json(const std::vector<oracle::OracleReport>& reports, bool with_timing) {
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        auto j = report_json(r);
        if (!with_timing) j.erase("elapsed_ms");
        arr.push_back(std::move(j));
        ok = ok && r.passed();
    }
    return {{"passed", ok}, {"checks", arr}};
}

inline void write_verify_text(std::ostream& os, const std::vector<oracle::OracleReport>& reports, bool with_timing) {
    for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.check << "  n in " << r.lo << ".." << r.hi << "  (" << r.evaluated << " values";
        if (with_timing) os << ", " << static_cast<long long>(std::round(r.elapsed_ms)) << " ms";
        os << ")\n";
        const std::size_t shown_max = 20;
        for (std::size_t i = 0; i < r.mismatches.size() && i < shown_max; ++i) {
            const auto& m = r.mismatches[i];
            os << "    n=" << m.n << "  expected " << m.expected << "  got " << m.actual << '\n';
        }
        if (r.mismatches.size() > shown_max) os << "    ... " << r.mismatches.size() - shown_max << " more\n";
    }
}

inline void write_verify_csv(std::ostream& os, const std::vector<oracle::OracleReport>& reports) {
    os << "check,n,expected,actual\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (const auto& r : reports)
        for (const auto& m : r.mismatches) os << r.check << ',' << m.n << ',' << quote(m.expected) << ',' << quote(m.actual) << '\n';
}

// ---------------------------------------------------------------------------
// DOT

inline const std::vector<std::string>& class_palette() {
    static const std::vector<std::string> p{"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
                                            "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
                                            "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080", "#000000"};
    return p;
}

inline std::string class_color(std::size_t index) {
    const auto& p = class_palette();
    return p[index % p.size()];
}

inline void write_graph_dot(std::ostream& os, const GeneratingGraph& g) {
    os << "graph E_" << g.n.value << " {\n  node [style=filled, shape=circle];\n";
    for (std::size_t i = 0; i < g.partition.order(); ++i) {
        const auto& c = g.partition.classes[i];
        for (u64 v : *c.members)
            os << "  " << v << " [fillcolor=\"" << class_color(i) << "\", class=" << c.divisor << "];\n";
    }
    for (u64 a = 0; a < g.order(); ++a)
        for (auto b = g.adjacency[a].find_next(a); b != BitRow::npos; b = g.adjacency[a].find_next(b))
            os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
}

inline void write_h_dot(std::ostream& os, const HGraph& h, const ClassPartition& part) {
    os << "graph H_" << part.n.value << " {\n  node [style=filled, shape=box];\n";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const auto& c = part.classes[i];
        os << "  d" << c.divisor << " [label=\"[" << c.divisor << "] (" << c.size << ")\", fillcolor=\"" << class_color(i)
           << "\"" << (i == 0 ? ", peripheries=2" : "") << "];\n";
    }
    for (const auto& [i, j] : h.edges) os << "  d" << h.vertices[i] << " -- d" << h.vertices[j] << ";\n";
    os << "}\n";
}

}  // namespace zn::io
