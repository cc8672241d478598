// Command-line front end. Exit codes: 0 success, 1 internal consistency
// failure, 2 usage error or feasibility guard.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "graphcount/errors.hpp"
#include "graphcount/genfunc.hpp"
#include "graphcount/oracle.hpp"
#include "graphcount/output.hpp"
#include "graphcount/verify.hpp"

namespace {

using namespace graphcount;

// GRAPHCOUNT_UNSAFE_ELEMENT_GUARD raises the n!-scan guard for
// benchmarking. Defaults stay strict; the variable must be a plain
// nonnegative integer.
unsigned element_guard_from_env() {
    const char* raw = std::getenv("GRAPHCOUNT_UNSAFE_ELEMENT_GUARD");
    if (raw == nullptr || *raw == '\0') return kElementSumGuard;
    std::string text(raw);
    unsigned long value = 0;
    try {
        size_t used = 0;
        value = std::stoul(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(
            "GRAPHCOUNT_UNSAFE_ELEMENT_GUARD must be a nonnegative integer, got '" +
            text + "'");
    }
    return static_cast<unsigned>(value);
}

int run(int argc, char** argv) {
    CLI::App app{"exact counts of simple graphs and multigraphs by number of edges"};
    app.require_subcommand(1);

    const CLI::Validator positive_int(
        [](std::string& value) -> std::string {
            bool ok = !value.empty();
            for (char ch : value) ok = ok && ch >= '0' && ch <= '9';
            if (!ok || value.find_first_not_of('0') == std::string::npos) {
                return "'" + value + "' is not a positive integer";
            }
            return {};
        },
        "a positive integer", "positive");

    unsigned n = 0;
    std::string method = "det";
    std::string format_name = "coeff-list";
    std::string suites_name = "all";
    unsigned max_degree = 0;
    bool max_degree_set = false;

    auto* simple = app.add_subcommand(
        "simple", "edge distribution of simple graphs on n nodes");
    simple->add_option("--n", n, "number of nodes")->required()->check(positive_int);
    simple->add_option("--method", method, "det, harary, element or brute")
        ->check(CLI::IsMember({"det", "harary", "element", "brute"}));
    simple->add_option("--format", format_name, "poly, coeff-list or csv");

    auto* multi = app.add_subcommand(
        "multi", "edge distribution of multigraphs on n nodes, truncated");
    multi->add_option("--n", n, "number of nodes")->required()->check(positive_int);
    multi->add_option("--max-degree", max_degree, "truncation degree, default n(n-1)/2");
    multi->add_option("--format", format_name, "poly, coeff-list or csv");

    auto* verify = app.add_subcommand(
        "verify", "recompute along independent routes and report each identity");
    verify->add_option("--n", n, "number of nodes")->required()->check(positive_int);
    verify->add_option("--suites", suites_name, "formulas, lemmas, invariants or all");

    auto* cycle_index = app.add_subcommand(
        "cycle-index", "cycle index of the induced action on edge slots");
    cycle_index->add_option("--n", n, "number of nodes")
        ->required()
        ->check(positive_int);
    cycle_index->add_option("--format", format_name, "poly, coeff-list or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    max_degree_set = multi->count("--max-degree") > 0;

    if (simple->parsed()) {
        OutputFormat format = parse_format(format_name);
        GraphCountVector result = [&] {
            if (method == "det") return simple_genfunc_det(n);
            if (method == "harary") return simple_genfunc_harary(n);
            if (method == "element") return simple_genfunc_element(n, element_guard_from_env());
            return brute_simple_counts(n);
        }();
        std::cout << render_counts(n, result.counts, format);
        return 0;
    }
    if (multi->parsed()) {
        OutputFormat format = parse_format(format_name);
        unsigned d = max_degree_set ? max_degree : pair_count(n);
        MultigraphSeriesVector result = multigraph_series(n, d);
        std::cout << render_counts(n, result.counts, format);
        return 0;
    }
    if (verify->parsed()) {
        VerifyOptions opts;
        opts.element_guard = element_guard_from_env();
        VerifyReport report = run_verify(n, parse_suites(suites_name), opts);
        render_report(report, std::cout);
        return report.exit_code();
    }
    OutputFormat format = parse_format(format_name);
    std::cout << format_cycle_index(pair_group_cycle_index(n), format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const graphcount::GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const graphcount::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
