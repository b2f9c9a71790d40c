#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyfault/enumerate.hpp"
#include "polyfault/fault.hpp"
#include "polyfault/generate.hpp"
#include "polyfault/json_io.hpp"
#include "polyfault/render.hpp"
#include "polyfault/series.hpp"
#include "polyfault/verify.hpp"

namespace py = pybind11;
using namespace polyfault;

namespace {

py::object big_int(const mpz_class& value) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

EnumMode mode_from(bool faultfree) {
    return faultfree ? EnumMode::faultfree : EnumMode::all;
}

}  // namespace

PYBIND11_MODULE(_polyfault, m) {
    m.doc() = "Exact counting, analysis and construction of L-tromino tilings";

    m.def(
        "count_tilings",
        [](int rows, int cols, const std::string& kind, const std::string& method) {
            const Rect rect{rows, cols};
            mpz_class count;
            if (kind == "domino") {
                count = count_domino_dp(rect);
            } else if (kind != "all" && kind != "faultfree") {
                throw std::invalid_argument("kind must be all, faultfree or domino");
            } else if (method == "dp") {
                count = kind == "faultfree" ? count_faultfree_dp(rect) : count_tromino_dp(rect);
            } else if (method == "enumerate") {
                count = enumerate_tilings(rect, mode_from(kind == "faultfree"));
            } else {
                throw std::invalid_argument("method must be dp or enumerate");
            }
            return big_int(count);
        },
        py::arg("rows"), py::arg("cols"), py::arg("kind") = "all", py::arg("method") = "dp");

    m.def(
        "enumerate_tilings",
        [](int rows, int cols, bool faultfree, long long limit) {
            std::vector<std::string> docs;
            enumerate_tilings(Rect{rows, cols}, mode_from(faultfree), [&](const Tiling& t) {
                docs.push_back(tiling_to_json(t));
                return limit <= 0 || static_cast<long long>(docs.size()) < limit;
            });
            return docs;
        },
        py::arg("rows"), py::arg("cols"), py::arg("faultfree") = false, py::arg("limit") = 0);

    m.def(
        "construct_faultfree",
        [](int rows, int cols) { return tiling_to_json(construct_faultfree(rows, cols)); },
        py::arg("rows"), py::arg("cols"));

    m.def(
        "construct_min_crossing",
        [](int rows, int cols) { return tiling_to_json(construct_min_crossing(rows, cols)); },
        py::arg("rows"), py::arg("cols"));

    m.def(
        "analyze",
        [](const std::string& tiling_json) {
            return analysis_to_json(tiling_from_json(tiling_json));
        },
        py::arg("tiling_json"));

    m.def(
        "series_value",
        [](const std::string& family, long t) {
            mpz_class value;
            if (family == "4x3t") value = closed_form_4x3t(t);
            else if (family == "5x3t") value = gf_5x3t().coeff(t);
            else if (family == "6x6t-lower") value = lower_bound_6x6t(t);
            else if (family == "7x6t-lower") value = gf_7x6t().F.coeff(2 * t);
            else throw std::invalid_argument("unknown family " + family);
            return big_int(value);
        },
        py::arg("family"), py::arg("t"));

    m.def(
        "tromino_upper_bound",
        [](int rows, int cols) {
            const BoundReport r = tromino_upper_bound(rows, cols);
            py::dict out;
            out["tromino_count"] = big_int(r.tromino_count);
            out["upper_bound"] = big_int(r.upper_bound);
            out["holds"] = r.holds;
            return out;
        },
        py::arg("rows"), py::arg("cols"));

    m.def(
        "render_ascii",
        [](const std::string& tiling_json) {
            return render_ascii(tiling_from_json(tiling_json));
        },
        py::arg("tiling_json"));

    m.def(
        "verify",
        [](const std::string& suite) {
            return verify_report_to_json(
                run_verify(suite == "full" ? VerifySuite::full : VerifySuite::quick));
        },
        py::arg("suite") = "quick");
}
