// zngraph: command-line front end for the generating graph of Z_n.

#include <zn/zn.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using zn::u64;
using json = zn::io::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "json";
    std::string output;
    std::string precision = "6";
    bool no_meta = false;
    u64 dense_limit = 0;

    u64 n = 0;
    unsigned k = 0;
    bool expand = false;
    bool no_members = false;
    std::string dot_path;
    bool h_graph = false;
    std::string matrix = "adj";
    bool full = false;
    bool bounds = false;
    bool paper = false;
    std::string range;
    std::vector<std::string> checks{"all"};
    unsigned threads = 0;
    u64 bench_dense_max = 300;

    zn::io::OutputOptions out() const { return {precision == "full", !no_meta}; }
    u64 dense() const { return dense_limit ? dense_limit : zn::dense_limit_from_env(); }
};

std::pair<u64, u64> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like LO..HI, got '" + s + "'");
    auto num = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) throw UsageError("bad range bound '" + t + "'");
        return std::stoull(t);
    };
    const u64 lo = num(s.substr(0, dots)), hi = num(s.substr(dots + 2));
    if (lo < 1 || lo > hi) throw UsageError("range requires 1 <= LO <= HI, got " + s);
    return {lo, hi};
}

void require_format(const Config& c, std::initializer_list<const char*> allowed, const char* cmd) {
    for (const char* a : allowed)
        if (c.format == a) return;
    throw UsageError(std::string(cmd) + " does not support --format " + c.format);
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit_json(Sink& sink, json j) { sink.os() << j.dump(2) << '\n'; }

std::string command_line(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

int cmd_classes(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "classes");
    const auto f = zn::factorize(c.n);
    if (f.value < 2) throw UsageError("classes needs n >= 2");
    const bool members = !c.no_members && c.n <= c.dense();
    const auto part = zn::build_partition(f, members);
    Sink sink(c.output);
    if (c.format == "csv") zn::io::write_classes_csv(sink.os(), part);
    else if (c.format == "text") zn::io::write_classes_text(sink.os(), part);
    else {
        auto j = zn::io::classes_json(part);
        zn::io::attach_meta(j, cmdline, c.out());
        emit_json(sink, j);
    }
    return 0;
}

int cmd_gensets(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "gensets");
    const auto f = zn::factorize(c.n);
    if (f.value < 2) throw UsageError("gensets needs n >= 2");
    if (c.expand && c.n > c.dense()) throw UsageError("--expand needs n <= dense limit " + std::to_string(c.dense()));
    const auto part = zn::build_partition(f, c.expand);
    std::vector<unsigned> ks;
    if (c.k) ks.push_back(c.k);
    else
        for (unsigned k = 1; k <= f.omega; ++k) ks.push_back(k);

    Sink sink(c.output);
    json arr = json::array();
    for (unsigned k : ks) {
        const auto fam = zn::enumerate_gk(part, k, c.expand);
        if (c.format == "csv") zn::io::write_gensets_csv(sink.os(), fam, k == ks.front());
        else if (c.format == "text") zn::io::write_gensets_text(sink.os(), fam);
        else arr.push_back(zn::io::gensets_json(fam));
    }
    if (c.format == "json") {
        json j = c.k ? arr.front() : json{{"n", c.n}, {"families", arr}};
        zn::io::attach_meta(j, cmdline, c.out());
        emit_json(sink, j);
    }
    return 0;
}

int cmd_props(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "props");
    const auto f = zn::factorize(c.n);
    if (f.value < 2) throw UsageError("props needs n >= 2");
    const auto p = zn::compute_props(f, c.dense());
    const auto prob = zn::gen_probability(f);
    Sink sink(c.output);
    if (c.format == "csv") zn::io::write_props_csv(sink.os(), p, prob);
    else if (c.format == "text") zn::io::write_props_text(sink.os(), p, prob);
    else {
        auto j = zn::io::props_json(p, prob);
        zn::io::attach_meta(j, cmdline, c.out());
        emit_json(sink, j);
    }
    return 0;
}

int cmd_graph(const Config& c) {
    if (c.format != "json" && c.format != "dot") throw UsageError("graph writes DOT only");
    const auto f = zn::factorize(c.n);
    if (f.value < 2) throw UsageError("graph needs n >= 2");
    Sink sink(!c.dot_path.empty() ? c.dot_path : c.output);
    if (c.h_graph) {
        zn::io::write_h_dot(sink.os(), zn::build_h_graph(f), zn::build_partition(f));
    } else {
        zn::io::write_graph_dot(sink.os(), zn::build_graph(f, c.dense()));
    }
    return 0;
}

int cmd_spectrum(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "spectrum");
    const auto f = zn::factorize(c.n);
    if (f.value < 2) throw UsageError("spectrum needs n >= 2");
    zn::SpectrumOptions opt;
    opt.mode = c.full ? zn::SpectrumMode::full : zn::SpectrumMode::quotient_only;
    opt.with_bounds = c.bounds;
    opt.dense_limit = c.dense();
    const auto r = c.matrix == "adj" ? zn::adjacency_spectrum(f, opt) : zn::laplacian_spectrum(f, opt);
    Sink sink(c.output);
    if (c.format == "csv") zn::io::write_spectrum_csv(sink.os(), r, c.out());
    else if (c.format == "text") zn::io::write_spectrum_text(sink.os(), r, c.out());
    else {
        auto j = zn::io::spectrum_json(r, c.out());
        zn::io::attach_meta(j, cmdline, c.out());
        emit_json(sink, j);
    }
    return 0;
}

int cmd_tables(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "tables");
    if (!c.paper) throw UsageError("tables needs --paper");
    const auto part = zn::build_partition(zn::factorize(30), true);
    const auto q15 = zn::build_quotients(zn::factorize(15));
    const auto t2 = zn::weyl_bounds_adjacency(q15);
    const auto t3 = zn::weyl_bounds_laplacian(q15);
    const auto opt = c.out();
    Sink sink(c.output);
    auto& os = sink.os();
    if (c.format == "json") {
        auto bounds = [&](const std::vector<zn::BoundInterval>& bs) {
            json a = json::array();
            for (const auto& b : bs)
                a.push_back({{"j", b.j}, {"lo", zn::io::shown(b.lo, opt)}, {"hi", zn::io::shown(b.hi, opt)},
                             {"numeric", zn::io::shown(b.numeric, opt)}});
            return a;
        };
        json j{{"table1", zn::io::classes_json(part)},
               {"table2", {{"n", 15}, {"matrix", "Q_n"}, {"bounds", bounds(t2)}}},
               {"table3", {{"n", 15}, {"matrix", "L_Q"}, {"bounds", bounds(t3)}}}};
        zn::io::attach_meta(j, cmdline, opt);
        emit_json(sink, j);
    } else if (c.format == "csv") {
        os << "# table 1: classes and degrees of E_30\n";
        zn::io::write_classes_csv(os, part);
        os << "\n# table 2: lambda_j(Qtilde)-1 <= lambda_j(Q_15) <= lambda_j(Qtilde)\n";
        zn::io::write_bounds_csv(os, t2, opt);
        os << "\n# table 3: lambda_j(-Qtilde)+8 <= lambda_j(L_Q) <= lambda_j(-Qtilde)+15\n";
        zn::io::write_bounds_csv(os, t3, opt);
    } else {
        os << "Table 1. Classes and degrees of E_30\n";
        zn::io::write_classes_text(os, part);
        auto table = [&](const char* title, const std::vector<zn::BoundInterval>& bs) {
            os << '\n' << title << '\n';
            char line[128];
            for (const auto& b : bs) {
                std::snprintf(line, sizeof line, "  %zu  %12s  %12s  %12s\n", b.j, zn::io::number_text(b.lo, opt).c_str(),
                              zn::io::number_text(b.numeric, opt).c_str(), zn::io::number_text(b.hi, opt).c_str());
                os << line;
            }
        };
        table("Table 2. Q_15: lower, numeric, upper", t2);
        table("Table 3. L_Q for n = 15: lower, numeric, upper", t3);
    }
    return 0;
}

int cmd_verify(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "verify");
    const auto [lo, hi] = parse_range(c.range);
    std::vector<std::string> names;
    try {
        names = zn::resolve_checks(c.checks);
    } catch (const zn::DomainError& e) {
        throw UsageError(std::string(e.what()) + "; known checks: all," + zn::detail::join(zn::check_names()));
    }
    const unsigned threads = c.threads ? c.threads : zn::default_threads();
    std::vector<zn::OracleReport> reports;
    for (const auto& name : names) reports.push_back(zn::run_check(name, lo, hi, threads));

    Sink sink(c.output);
    if (c.format == "csv") zn::io::write_verify_csv(sink.os(), reports);
    else if (c.format == "text") zn::io::write_verify_text(sink.os(), reports, !c.no_meta);
    else {
        auto j = zn::io::verify_json(reports, !c.no_meta);
        zn::io::attach_meta(j, cmdline, c.out());
        emit_json(sink, j);
    }
    for (const auto& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

int cmd_bench(const Config& c, const std::string& cmdline) {
    require_format(c, {"json", "csv", "text"}, "bench");
    const auto [lo, hi] = parse_range(c.range);
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t) { return std::chrono::duration<double, std::milli>(clock::now() - t).count(); };
    struct Row {
        u64 n;
        std::size_t order;
        double quotient_ms;
        std::optional<double> dense_ms;
    };
    std::vector<Row> rows;
    const u64 dense_max = std::min(c.bench_dense_max, c.dense());
    for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
        const auto f = zn::factorize(n);
        if (f.omega > zn::kMaxQuotientPrimes) continue;
        auto t0 = clock::now();
        const auto r = zn::adjacency_spectrum(f);
        Row row{n, std::size_t{1} << f.omega, ms_since(t0), std::nullopt};
        (void)r;
        if (n <= dense_max) {
            t0 = clock::now();
            (void)zn::sym_eigenvalues(zn::oracle::dense_matrix(n, zn::oracle::DenseKind::adjacency, c.dense()));
            row.dense_ms = ms_since(t0);
        }
        rows.push_back(row);
    }
    Sink sink(c.output);
    auto& os = sink.os();
    auto ms = [](double v) { return std::round(v * 1000) / 1000; };
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j{{"n", r.n}, {"quotient_order", r.order}, {"quotient_ms", ms(r.quotient_ms)}};
            j["dense_ms"] = r.dense_ms ? json(ms(*r.dense_ms)) : json(nullptr);
            arr.push_back(j);
        }
        json j{{"rows", arr}};
        zn::io::attach_meta(j, cmdline, c.out());
        emit_json(sink, j);
    } else {
        const bool csv = c.format == "csv";
        os << (csv ? "n,quotient_order,quotient_ms,dense_ms\n" : "       n  order  quotient_ms     dense_ms\n");
        char line[96];
        for (const auto& r : rows) {
            char dense[32] = "-";
            if (r.dense_ms) std::snprintf(dense, sizeof dense, "%.3f", *r.dense_ms);
            else if (csv) dense[0] = '\0';
            if (csv) std::snprintf(line, sizeof line, "%llu,%zu,%.3f,%s\n", static_cast<unsigned long long>(r.n), r.order, r.quotient_ms, dense);
            else std::snprintf(line, sizeof line, "%8llu  %5zu  %11.3f  %11s\n", static_cast<unsigned long long>(r.n), r.order, r.quotient_ms, dense);
            os << line;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generating graphs of cyclic groups: classes, generating sets, properties and spectra", "zngraph"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    app.add_option("-o,--output", c.output, "Write to PATH instead of stdout");
    app.add_option("--precision", c.precision, "6 (significant digits) or full")->check(CLI::IsMember({"6", "full"}));
    app.add_flag("--no-meta", c.no_meta, "Omit timestamps and timings for byte-identical output");
    app.add_option("--dense-limit", c.dense_limit, "Largest n for dense operations (default 5000, or ZN_DENSE_LIMIT)")
        ->check(CLI::PositiveNumber);

    auto* classes = app.add_subcommand("classes", "Divisor class table with neighbours and degrees");
    classes->add_option("n", c.n, "Order of the group")->required();
    classes->add_flag("--no-members", c.no_members, "Skip member lists");

    auto* gensets = app.add_subcommand("gensets", "Minimal generating sets, by divisor-class combination");
    gensets->add_option("n", c.n)->required();
    gensets->add_option("--k", c.k, "Set size (default: every k from 1 to omega(n))")->check(CLI::PositiveNumber);
    gensets->add_flag("--expand", c.expand, "List the sets themselves");

    auto* props = app.add_subcommand("props", "Graph invariants of E_n");
    props->add_option("n", c.n)->required();

    auto* graph = app.add_subcommand("graph", "DOT export of E_n, or of the join graph H with --hgraph");
    graph->add_option("n", c.n)->required();
    graph->add_option("--dot", c.dot_path, "DOT output path");
    graph->add_flag("--hgraph", c.h_graph, "Export H (one vertex per divisor class) instead of E_n");

    auto* spectrum = app.add_subcommand("spectrum", "Adjacency or Laplacian spectrum");
    spectrum->add_option("n", c.n)->required();
    spectrum->add_option("--matrix", c.matrix, "adj or lap")->check(CLI::IsMember({"adj", "lap"}));
    spectrum->add_flag("--full", c.full, "Also eigensolve the dense matrix and report the residual");
    spectrum->add_flag("--bounds", c.bounds, "Weyl bounds per index");

    auto* tables = app.add_subcommand("tables", "Reproduce the reference tables");
    tables->add_flag("--paper", c.paper, "Classes of E_30 and the n = 15 Weyl tables")->required();

    auto* verify = app.add_subcommand("verify", "Run oracle checks over a range of n");
    verify->add_option("--range", c.range, "LO..HI")->required();
    verify->add_option("--checks", c.checks, "Comma-separated check names, or all")->delimiter(',');
    verify->add_option("--threads", c.threads, "Worker threads (default: hardware concurrency)");

    auto* bench = app.add_subcommand("bench", "Quotient vs dense eigensolve timings");
    bench->add_option("--range", c.range, "LO..HI")->required();
    bench->add_option("--dense-max", c.bench_dense_max, "Skip dense timing above this n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto cmdline = command_line(argc, argv);
    try {
        if (*classes) return cmd_classes(c, cmdline);
        if (*gensets) return cmd_gensets(c, cmdline);
        if (*props) return cmd_props(c, cmdline);
        if (*graph) return cmd_graph(c);
        if (*spectrum) return cmd_spectrum(c, cmdline);
        if (*tables) return cmd_tables(c, cmdline);
        if (*verify) return cmd_verify(c, cmdline);
        if (*bench) return cmd_bench(c, cmdline);
    } catch (const UsageError& e) {
        std::cerr << "zngraph: " << e.what() << '\n';
        return 2;
    } catch (const zn::DomainError& e) {
        std::cerr << "zngraph: " << e.what() << '\n';
        return 2;
    } catch (const zn::LimitError& e) {
        std::cerr << "zngraph: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "zngraph: internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
