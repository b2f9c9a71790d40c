#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "polyfault/enumerate.hpp"
#include "polyfault/fault.hpp"
#include "polyfault/generate.hpp"
#include "polyfault/json_io.hpp"
#include "polyfault/render.hpp"
#include "polyfault/series.hpp"
#include "polyfault/verify.hpp"

namespace {

using polyfault::Rect;
using polyfault::Tiling;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitArgError = 2;

void emit_error(const std::string& kind, const std::string& message) {
    nlohmann::ordered_json err;
    err["error"] = kind;
    err["message"] = message;
    std::cerr << err.dump() << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int run_count(int rows, int cols, bool faultfree, bool domino, const std::string& method) {
    using polyfault::CountKind;
    if (faultfree && domino)
        throw std::invalid_argument("--faultfree and --domino are mutually exclusive");
    const Rect rect{rows, cols};
    const CountKind kind = domino      ? CountKind::all_domino
                           : faultfree ? CountKind::faultfree_tromino
                                       : CountKind::all_tromino;
    mpz_class count;
    if (method == "dp") {
        count = domino      ? polyfault::count_domino_dp(rect)
                : faultfree ? polyfault::count_faultfree_dp(rect)
                            : polyfault::count_tromino_dp(rect);
    } else if (method == "enumerate") {
        if (domino) throw std::invalid_argument("domino counting is dp-only");
        count = polyfault::enumerate_tilings(
            rect, faultfree ? polyfault::EnumMode::faultfree : polyfault::EnumMode::all);
    } else {
        throw std::invalid_argument("method must be dp or enumerate");
    }
    nlohmann::ordered_json out;
    out["rows"] = rows;
    out["cols"] = cols;
    out["kind"] = kind == CountKind::all_domino         ? "all_domino"
                  : kind == CountKind::faultfree_tromino ? "faultfree_tromino"
                                                         : "all_tromino";
    out["method"] = method;
    out["count"] = count.get_str();
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_enumerate(int rows, int cols, bool faultfree, long long limit) {
    long long seen = 0;
    polyfault::enumerate_tilings(
        Rect{rows, cols},
        faultfree ? polyfault::EnumMode::faultfree : polyfault::EnumMode::all,
        [&](const Tiling& t) {
            std::cout << polyfault::tiling_to_json(t) << "\n";
            return limit <= 0 || ++seen < limit;
        });
    return kExitOk;
}

int run_construct(int rows, int cols, bool min_crossing) {
    const Tiling t = min_crossing ? polyfault::construct_min_crossing(rows, cols)
                                  : polyfault::construct_faultfree(rows, cols);
    std::cout << polyfault::tiling_to_json(t) << "\n";
    return kExitOk;
}

int run_series(const std::string& family, long t, int rows, int cols) {
    nlohmann::ordered_json out;
    out["family"] = family;
    std::string kind = "exact";
    mpz_class value;
    if (family == "4x3t") {
        value = polyfault::closed_form_4x3t(t);
    } else if (family == "5x3t") {
        value = polyfault::gf_5x3t().coeff(t);
    } else if (family == "6x6t-lower") {
        value = polyfault::lower_bound_6x6t(t);
        kind = "lower_bound";
    } else if (family == "7x6t-lower") {
        if (t < 2) throw std::invalid_argument("7x6t lower bound applies for t >= 2");
        value = polyfault::gf_7x6t().F.coeff(2 * t);
        kind = "lower_bound";
    } else if (family == "upper-bound") {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("--family upper-bound needs --rows and --cols");
        const auto bound = polyfault::tromino_upper_bound(rows, cols);
        value = bound.upper_bound;
        kind = "upper_bound";
        out["rows"] = rows;
        out["cols"] = cols;
    } else {
        throw std::invalid_argument("unknown family " + family);
    }
    if (family != "upper-bound") out["t"] = t;
    out["value"] = value.get_str();
    out["kind"] = kind;
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite) {
    if (suite != "quick" && suite != "full")
        throw std::invalid_argument("suite must be quick or full");
    const polyfault::VerifyReport report = polyfault::run_verify(
        suite == "full" ? polyfault::VerifySuite::full : polyfault::VerifySuite::quick);
    std::cout << polyfault::verify_report_to_json(report) << "\n";
    if (!report.all_passed()) {
        emit_error("verify_failed", "one or more checks failed");
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting, analysis and construction of L-tromino tilings"};
    app.require_subcommand(1);

    int rows = 0, cols = 0;
    bool faultfree = false, domino = false, min_crossing = false;
    std::string method = "dp", input = "-", format = "ascii", family, suite = "quick";
    long long limit = 0;
    long t_index = 0;

    auto* count = app.add_subcommand("count", "Count tilings");
    count->add_option("--rows", rows)->required();
    count->add_option("--cols", cols)->required();
    count->add_flag("--faultfree", faultfree);
    count->add_flag("--domino", domino);
    count->add_option("--method", method)->check(CLI::IsMember({"dp", "enumerate"}));

    auto* enumerate = app.add_subcommand("enumerate", "Stream tilings as JSON lines");
    enumerate->add_option("--rows", rows)->required();
    enumerate->add_option("--cols", cols)->required();
    enumerate->add_flag("--faultfree", faultfree);
    enumerate->add_option("--limit", limit);

    auto* construct = app.add_subcommand("construct", "Construct a faultfree tiling");
    construct->add_option("--rows", rows)->required();
    construct->add_option("--cols", cols)->required();
    construct->add_flag("--min-crossing", min_crossing);

    auto* analyze = app.add_subcommand("analyze", "Crossing profile and fault lines");
    analyze->add_option("--input", input);

    auto* series = app.add_subcommand("series", "Closed forms and generating functions");
    series->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"4x3t", "5x3t", "6x6t-lower", "7x6t-lower", "upper-bound"}));
    series->add_option("--t", t_index);
    series->add_option("--rows", rows);
    series->add_option("--cols", cols);

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));

    auto* render = app.add_subcommand("render", "Draw a tiling");
    render->add_option("--input", input);
    render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::stringstream devnull;
        app.exit(e, devnull, devnull);
        emit_error("argument_error", e.what());
        return kExitArgError;
    }

    try {
        if (count->parsed()) return run_count(rows, cols, faultfree, domino, method);
        if (enumerate->parsed()) return run_enumerate(rows, cols, faultfree, limit);
        if (construct->parsed()) return run_construct(rows, cols, min_crossing);
        if (analyze->parsed()) {
            const Tiling t = polyfault::tiling_from_json(read_input(input));
            std::cout << polyfault::analysis_to_json(t) << "\n";
            return kExitOk;
        }
        if (series->parsed()) return run_series(family, t_index, rows, cols);
        if (verify->parsed()) return run_verify(suite);
        if (render->parsed()) {
            const Tiling t = polyfault::tiling_from_json(read_input(input));
            std::cout << (format == "svg" ? polyfault::render_svg(t)
                                          : polyfault::render_ascii(t));
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        emit_error("argument_error", e.what());
        return kExitArgError;
    } catch (const std::exception& e) {
        emit_error("failure", e.what());
        return kExitCheckFailed;
    }
    return kExitArgError;
}
