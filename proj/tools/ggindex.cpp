// ggindex: command-line front end.
//
//   ggindex compute <file>
//   ggindex family <spec> [-o file]
//   ggindex bound <n>
//   ggindex enumerate <n> [--emit dir]
//   ggindex verify <suite> [--max-n N] [--trials T] [--seed S]
//   ggindex table <name> --from A --to B [-o file]
//
// Exit codes: 0 success / all claims pass, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ggindex/edge_list.hpp"
#include "ggindex/enumerator.hpp"
#include "ggindex/families.hpp"
#include "ggindex/index.hpp"
#include "ggindex/scalar.hpp"
#include "ggindex/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void print_report(std::ostream& out, const ggindex::IndexReport& report) {
    out << "ABC_GG = " << fixed4(report.total) << " (" << ggindex::format_number(report.total) << ")\n";
    out << "u,v,n_u,n_v,term\n";
    for (const auto& e : report.per_edge) {
        out << e.u << ',' << e.v << ',' << e.n_u << ',' << e.n_v << ',' << ggindex::format_number(e.term)
            << '\n';
    }
}

int cmd_compute(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << '\n';
        return kUsage;
    }
    auto g = ggindex::read_edge_list(in);
    print_report(std::cout, ggindex::abc_gg(g));
    return kOk;
}

int cmd_family(const std::string& text, const std::string& out_path) {
    auto spec = ggindex::parse_family_spec(text);
    auto g = ggindex::make_family(spec);
    double index = ggindex::abc_gg_value(g);
    std::cout << ggindex::family_label(spec) << '\n'
              << "n = " << g.order() << ", m = " << g.size() << '\n'
              << "ABC_GG = " << fixed4(index) << " (" << ggindex::format_number(index) << ")\n";
    if (out_path.empty()) {
        ggindex::write_edge_list(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kUsage;
        }
        out << "# " << ggindex::family_spec_text(spec) << '\n';
        ggindex::write_edge_list(out, g);
    }
    return kOk;
}

int cmd_bound(long n) {
    auto b = ggindex::bicyclic_max_bound(n);
    std::cout << "bicyclic maximum: " << fixed4(b.value) << " (" << ggindex::format_number(b.value)
              << ") attained by " << ggindex::family_label(b.family) << '\n';
    if (n >= 6) {
        auto s = ggindex::s_rt_extremal(n);
        std::cout << "shared-vertex maximum: " << fixed4(s.value) << " (" << ggindex::format_number(s.value)
                  << ") attained by " << ggindex::family_label(s.family) << '\n';
    }
    if (n >= 7) {
        std::cout << "shared-vertex generic bound: " << fixed4(ggindex::s_rt_upper_bound(n)) << '\n';
    }
    return kOk;
}

int cmd_enumerate(std::size_t n, const std::string& emit_dir) {
    if (n < 4) {
        std::cerr << "warning: no bicyclic graphs on fewer than 4 vertices\n";
        std::cout << "n = " << n << ", classes = 0\n";
        return kOk;
    }
    auto records = ggindex::enumerate_bicyclic(n);
    std::map<std::size_t, std::size_t> by_pendants;
    std::map<std::string, std::size_t> by_shape;
    for (const auto& r : records) {
        ++by_pendants[r.pendant_count];
        ++by_shape[ggindex::to_string(r.shape)];
    }
    std::cout << "n = " << n << ", classes = " << records.size() << '\n';
    for (auto [p, c] : by_pendants) std::cout << "  pendants " << p << ": " << c << '\n';
    for (const auto& [s, c] : by_shape) std::cout << "  base " << s << ": " << c << '\n';
    if (records.size() >= 2 || n == 4) {
        auto scan = ggindex::extremal_scan(n);
        std::cout << "maximum " << fixed4(scan.best.index_value) << ", runner-up "
                  << fixed4(scan.second_value) << ", gap " << ggindex::format_number(scan.gap)
                  << (scan.matches_family ? " (B_n(n-3,1,1,1))" : "") << '\n';
    }
    if (!emit_dir.empty()) {
        ggindex::emit_enumeration(emit_dir, records);
        std::cout << "wrote " << records.size() << " graphs and manifest.csv to " << emit_dir << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const ggindex::SuiteOptions& opt) {
    auto reports = ggindex::run_suite(suite, opt);
    std::cout << "# suite " << suite << " seed " << opt.seed << " trials " << opt.trials << " max-n "
              << opt.max_n.value_or(ggindex::default_max_n(suite)) << '\n';
    ggindex::write_reports_csv(std::cout, reports);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += !r.passed;
    std::cerr << suite << ": " << reports.size() - failed << "/" << reports.size() << " claims pass\n";
    return failed ? kFailed : kOk;
}

int cmd_table(const std::string& name, long from, long to, const std::string& out_path) {
    auto rows = ggindex::comparison_table(name, from, to);
    if (out_path.empty()) {
        ggindex::write_table_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kUsage;
        }
        ggindex::write_table_csv(out, rows);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graovac-Ghorbani index laboratory for bicyclic graphs"};
    app.require_subcommand(1);

    std::string path, spec_text, out_path, emit_dir, suite, table;
    long bound_n = 0, from = 0, to = 0;
    std::size_t enum_n = 0, trials = 1000, max_n = 0;
    std::uint64_t seed = 42;

    auto* compute = app.add_subcommand("compute", "Index of a graph in edge-list format");
    compute->add_option("file", path, "edge-list file")->required();

    auto* family = app.add_subcommand("family", "Build a family graph, e.g. \"B 4 1 1 1\"");
    family->add_option("spec", spec_text, "family spec")->required();
    family->add_option("-o,--output", out_path, "write the edge list here");

    auto* bound = app.add_subcommand("bound", "Closed-form maxima for order n");
    bound->add_option("n", bound_n, "order")->required()->check(CLI::Range(4L, 1000000L));

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate bicyclic graphs of order n");
    enumerate->add_option("n", enum_n, "order")->required()->check(
        CLI::Range(std::size_t{0}, ggindex::kMaxStructuredOrder));
    enumerate->add_option("--emit", emit_dir, "directory for edge-list files and manifest.csv");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    auto* max_n_opt = verify->add_option("--max-n", max_n, "largest order checked");
    verify->add_option("--trials", trials, "random trials (lemma32)");
    verify->add_option("--seed", seed, "random seed (lemma32)");

    auto* tab = app.add_subcommand("table", "Comparison table as CSV");
    tab->add_option("name", table, "lemma35 | theorem_vs_s33")->required();
    tab->add_option("--from", from, "first n")->required();
    tab->add_option("--to", to, "last n")->required();
    tab->add_option("-o,--output", out_path, "write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return cmd_compute(path);
        if (*family) return cmd_family(spec_text, out_path);
        if (*bound) return cmd_bound(bound_n);
        if (*enumerate) return cmd_enumerate(enum_n, emit_dir);
        if (*verify) {
            ggindex::SuiteOptions opt;
            if (*max_n_opt) opt.max_n = max_n;
            opt.trials = trials;
            opt.seed = seed;
            return cmd_verify(suite, opt);
        }
        if (*tab) return cmd_table(table, from, to, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
