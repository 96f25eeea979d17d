// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ggindex/canonical.hpp"
#include "ggindex/enumerator.hpp"
#include "ggindex/families.hpp"
#include "ggindex/index.hpp"
#include "ggindex/scalar.hpp"
#include "ggindex/transforms.hpp"
#include "ggindex/verify.hpp"
#include "oracles.hpp"

using namespace ggindex;

namespace {

constexpr double kValueTol = 1e-9;
constexpr double kConstantTol = 5e-4;
constexpr double kIncreaseFloor = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& name, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double ratio(double a, double b) { return std::sqrt(a / b); }

double bound_formula(double n) {
    return 2 * ratio(n - 3, n - 2) + std::sqrt(2.0) + ratio(n - 4, n - 3) + (n - 4) * ratio(n - 2, n - 1);
}

void extremal_graph() {
    auto start = Clock::now();
    auto target_family = [](std::size_t n) { return make_family(b_quad(n - 3, 1, 1, 1)); };
    bool ok = true;
    std::string detail, failed;
    for (std::size_t n = 4; n <= 10; ++n) {
        auto records = enumerate_bicyclic(n);
        std::size_t best = 0;
        for (std::size_t i = 1; i < records.size(); ++i)
            if (records[i].index_value > records[best].index_value) best = i;
        double second = -1;
        for (std::size_t i = 0; i < records.size(); ++i)
            if (i != best) second = std::max(second, records[i].index_value);
        double value = records[best].index_value;
        bool iso = isomorphic(records[best].graph, target_family(n));
        bool matches = std::abs(value - bound_formula(static_cast<double>(n))) <= kValueTol;
        bool unique = records.size() == 1 || value - second > kValueTol;
        bool pass = iso && matches && unique;
        if (n <= 9) ok = ok && pass;
        if (!pass) failed += " " + std::to_string(n);
        detail += "n=" + std::to_string(n) + (pass ? " ok" : " BEST IS NOT B_n(n-3,1,1,1)") + " max " +
                  format_number(value) + " bound " + format_number(bound_formula(static_cast<double>(n))) +
                  (records.size() > 1 ? " gap " + format_number(value - second) : "") + "; ";
    }
    detail += "failing n:" + (failed.empty() ? std::string(" none") : failed) + "; n=10 is the stretch order; " +
              fmt("%.1f s", seconds_since(start));
    report(1, ok, "unique bicyclic maximizer B_n(n-3,1,1,1) for n=4..9", detail);
}

void constants() {
    struct Item {
        const char* label;
        double value;
        double stated;
    };
    auto gg = [](const FamilySpec& s) { return abc_gg_value(make_family(s)); };
    std::vector<Item> items{
        {"S_6^{3,3}(1,0,0)", gg(s33(1, 0, 0)), 4.8572},
        {"S_6^{3,4}(0,0,0,0,0)", abc_gg_value(make_s_rt(3, 4, {0, 0}, {0, 0, 0}, 0)), 4.5605},
        {"S_6^{3,3}(0,0,1)", gg(s33(0, 0, 1)), 4.3585},
        {"S_7^{3,3}(1,1,0)", gg(s33(1, 1, 0)), 6.3862},
        {"B_7(4,1,1,1)", gg(b_quad(4, 1, 1, 1)), 6.8077},
        {"S_8^{3,3}(2,1,0)", gg(s33(2, 1, 0)), 7.4141},
        {"B_8(5,1,1,1)", gg(b_quad(5, 1, 1, 1)), 7.8377},
        {"S_9^{3,3}(2,2,0)", gg(s33(2, 2, 0)), 8.4284},
        {"B_9(6,1,1,1)", gg(b_quad(6, 1, 1, 1)), 8.8558},
        {"f(8,2)", ratio(2, 3) + ratio(3, 4) + ratio(5, 12), 2.3280},
        {"sqrt2+sqrt(6/7)", std::sqrt(2.0) + ratio(6, 7), 2.3400},
        {"f(9,3)", ratio(3, 4) + ratio(3, 4) + ratio(6, 16), 2.3444},
        {"sqrt2+sqrt(7/8)", std::sqrt(2.0) + ratio(7, 8), 2.3496},
    };
    const double gaps[] = {-0.0040, -0.0034, -0.0034, -0.0038, -0.0043, -0.0049};
    std::vector<std::string> labels;
    for (int n = 10; n <= 15; ++n) labels.push_back("g(" + std::to_string(n) + ")");
    for (int n = 10; n <= 15; ++n) {
        double g = ratio(2, 3) + ratio(n - 5, n - 4) + ratio(n - 3, 3 * (n - 4)) - std::sqrt(2.0) - ratio(n - 2, n - 1);
        items.push_back({labels[n - 10].c_str(), g, gaps[n - 10]});
    }
    bool ok = true;
    double worst = 0;
    std::string bad;
    for (const auto& it : items) {
        double dev = std::abs(it.value - it.stated);
        worst = std::max(worst, dev);
        if (dev > kConstantTol) {
            ok = false;
            bad += std::string(" ") + it.label + "=" + format_number(it.value);
        }
    }
    report(2, ok, "stated four-decimal constants",
           std::to_string(items.size()) + " values, max deviation " + format_number(worst) +
               (bad.empty() ? "" : "; off:" + bad));
}

long expected_split(long n) {
    if (n == 7) return 1;
    if (n == 8) return 2;
    if (n == 9) return 3;
    if (n <= 15) return 2;
    return 1;
}

void split_argmax() {
    auto start = Clock::now();
    bool ok = true;
    long first_bad = 0;
    for (long n = 7; n <= 10000; ++n) {
        if (split_sum_argmax(n).argmax_x != expected_split(n)) {
            ok = false;
            if (!first_bad) first_bad = n;
        }
    }
    double t = seconds_since(start);
    ok = ok && t < 60.0;
    report(3, ok, "hub-split argmax pattern 1,2,3,2(10-15),1(>=16) for n=7..10000",
           (first_bad ? "first mismatch n=" + std::to_string(first_bad) + ", " : std::string()) + fmt("%.2f s", t));
}

void lifting() {
    std::mt19937_64 rng(42);
    double min_increase = INFINITY, max_dev = 0;
    std::size_t lifts = 0;
    for (int i = 0; i < 1000; ++i) {
        auto g = random_liftable_graph(12, rng);
        double before = oracle::abc_gg(g);
        double n = static_cast<double>(g.order());
        for (auto [u, v] : liftable_edges(g)) {
            double a = static_cast<double>(oracle::component_without(g, u, u, v));
            double b = n - a;
            double predicted = ratio(n - 2, n - 1) - ratio(a + b - 2, a * b);
            double diff = oracle::abc_gg(edge_lift(g, u, v).graph) - before;
            min_increase = std::min(min_increase, diff);
            max_dev = std::max(max_dev, std::abs(diff - predicted));
            ++lifts;
        }
    }
    bool ok = min_increase >= kIncreaseFloor && max_dev <= kValueTol;
    report(4, ok, "edge lifting on 1000 seeded random graphs (seed 42, n<=12)",
           std::to_string(lifts) + " lifts, min increase " + format_number(min_increase) +
               ", max identity deviation " + format_number(max_dev));
}

void grids() {
    auto reports = run_suite("lemma21", {});
    auto more = run_suite("lemma22", {});
    reports.insert(reports.end(), more.begin(), more.end());
    std::string bad;
    for (const auto& r : reports)
        if (!r.passed) bad += " " + r.claim_id;
    report(5, bad.empty(), "edge-term and step-function grids",
           std::to_string(reports.size()) + " claims" + (bad.empty() ? "" : "; failing:" + bad));
}

void oracle_equivalence() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 4; n <= 8; ++n) {
        auto fast = enumerate_bicyclic(n);
        auto naive = naive_enumerate_bicyclic(n);
        bool same = fast.size() == naive.size();
        for (std::size_t i = 0; same && i < fast.size(); ++i) same = fast[i].canonical == naive[i].canonical;
        ok = ok && same;
        detail += "n=" + std::to_string(n) + " " + std::to_string(fast.size()) + (same ? " " : " MISMATCH ");
    }
    double t = seconds_since(start);
    ok = ok && t < 300.0;
    report(6, ok, "structured enumerator equals edge-subset oracle for n=4..8", detail + fmt("(%.1f s)", t));
}

void closed_forms() {
    double worst = 0;
    std::size_t checked = 0;
    for (long n = 7; n <= 40; ++n)
        for (long m1 = 1; m1 + 1 <= n - 5; ++m1)
            for (long n1 = 1; m1 + n1 <= n - 5; ++n1, ++checked)
                worst = std::max(worst, std::abs(s33_closed_form(n, m1, n1) -
                                                 oracle::abc_gg(make_family(s33(m1, n1, n - 5 - m1 - n1)))));
    for (std::size_t n1 = 1; n1 + 3 <= 40; ++n1)
        for (std::size_t n2 = 1; n1 + n2 + 2 <= 40; ++n2, ++checked)
            worst = std::max(worst, std::abs(b_quad_closed_form(n1, n2) -
                                             oracle::abc_gg(make_family(b_quad(n1, n2, 1, 1)))));
    for (long n = 4; n <= 40; ++n, ++checked)
        worst = std::max(worst, std::abs(bound_formula(static_cast<double>(n)) -
                                         oracle::abc_gg(make_family(b_quad(n - 3, 1, 1, 1)))));
    SuiteOptions opt;
    opt.max_n = 40;
    bool suites = all_passed(run_suite("closedforms", opt)) && all_passed(run_suite("lemma37", opt));
    report(7, worst <= kValueTol && suites, "closed forms against direct computation for n<=40",
           std::to_string(checked) + " parameterizations, max deviation " + format_number(worst) +
               (suites ? "" : "; library suite failure"));
}

void sweeps() {
    SuiteOptions opt;
    opt.max_n = 12;
    std::string detail, bad;
    for (const char* name : {"lemma34", "lemma36", "lemma38"}) {
        auto reports = run_suite(name, opt);
        std::size_t pass = 0;
        for (const auto& r : reports) {
            if (r.passed) ++pass;
            else bad += " " + r.claim_id + "(margin " + format_number(r.margin) + ")";
        }
        detail += std::string(name) + " " + std::to_string(pass) + "/" + std::to_string(reports.size()) + "; ";
    }
    report(8, bad.empty(), "hub-split, exchange and shared-path sweeps for n<=12",
           detail + (bad.empty() ? "all claims pass" : "failing:" + bad));
}

}  // namespace

int main() {
    extremal_graph();
    constants();
    split_argmax();
    lifting();
    grids();
    oracle_equivalence();
    closed_forms();
    sweeps();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures ? 1 : 0;
}
