#include "superaff/admissible.hpp"
#include "superaff/classify.hpp"
#include "superaff/cli.hpp"
#include "superaff/errors.hpp"
#include "superaff/rootdata.hpp"
#include "superaff/weyl.hpp"
#include "superaff/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace superaff;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side turns them into Fractions.
std::vector<std::string> strs(const std::vector<Rational>& v)
{
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

py::dict weight_dict(const CanonicalWeight& w)
{
    py::dict d;
    d["level"] = to_string(w.level);
    d["pairings"] = strs(w.pairings);
    return d;
}

py::list weight_list(const std::vector<CanonicalWeight>& ws)
{
    py::list out;
    for (const auto& w : ws) out.append(weight_dict(w));
    return out;
}

ClassifyOptions options(bool unchecked)
{
    return {unchecked ? LevelCheck::Skip : LevelCheck::Enforce, 0};
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Boundary admissible levels and ordinary modules for affine Lie superalgebras";

    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
    py::register_exception<RejectedLevelError>(m, "RejectedLevelError", PyExc_ValueError);
    py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("root_data", [](const std::string& algebra) {
        const auto rs = build_root_system(cli::parse_algebra(algebra));
        py::dict d;
        d["name"] = rs.spec.name();
        d["rank"] = rs.rank();
        d["h_dual"] = to_string(rs.h_dual);
        d["lacety"] = rs.lacety;
        d["marks"] = rs.marks;
        d["rho_pairings"] = strs(rs.pairings(rs.rho));
        const Matrix a = cartan_matrix(rs);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            rows.emplace_back();
            for (std::size_t j = 0; j < a.cols(); ++j) rows.back().push_back(to_string(a(i, j)));
        }
        d["cartan"] = rows;
        d["odd_node"] = rs.odd_node() ? py::cast(*rs.odd_node()) : py::none();
        return d;
    }, py::arg("algebra"));

    m.def("weyl_order", [](const std::string& algebra) {
        return generate_weyl(build_root_system(cli::parse_algebra(algebra))).order();
    }, py::arg("algebra"));

    m.def("levels", [](const std::string& algebra, int u_max) {
        const auto rs = build_root_system(cli::parse_algebra(algebra));
        py::list out;
        for (const auto& l : boundary_levels(rs, u_max)) {
            py::dict d;
            d["u"] = l.u;
            d["level"] = to_string(l.level);
            d["kind"] = l.kind == LevelKind::Principal ? "principal" : "subprincipal";
            out.append(d);
        }
        return out;
    }, py::arg("algebra"), py::arg("u_max") = 10);

    m.def("classify", [](const std::string& algebra, int u, bool unchecked) {
        const auto rs = build_root_system(cli::parse_algebra(algebra));
        std::vector<CanonicalWeight> ws;
        {
            py::gil_scoped_release nogil;
            ws = classify(rs, u, options(unchecked));
        }
        return weight_list(ws);
    }, py::arg("algebra"), py::arg("u"), py::arg("unchecked_level") = false);

    m.def("verify", [](const std::string& algebra, int u, bool unchecked) {
        const auto rs = build_root_system(cli::parse_algebra(algebra));
        Report r;
        {
            py::gil_scoped_release nogil;
            r = verify(rs, u, options(unchecked));
        }
        py::dict d;
        d["algebra"] = rs.spec.name();
        d["u"] = r.u;
        d["level"] = to_string(r.level);
        d["verdict"] = to_string(r.verdict);
        d["found"] = weight_list(r.found);
        d["expected"] = weight_list(r.expected);
        d["candidates"] = r.candidates;
        d["survivors"] = r.survivors;
        d["duplicates"] = r.duplicates;
        return d;
    }, py::arg("algebra"), py::arg("u"), py::arg("unchecked_level") = false);

    m.def("witness_count", [](const std::string& algebra) {
        const auto rs = build_root_system(cli::parse_algebra(algebra));
        const auto w = generate_weyl(rs);
        WitnessSolver solver(rs);
        std::size_t n = 0;
        for (const auto& y : w.elements)
            if (solver.in_domain(y)) {
                solver.find(y);
                ++n;
            }
        return n;
    }, py::arg("algebra"), "Number of Weyl elements given a verified witness.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> owned{"superaff"};
        owned.insert(owned.end(), args.begin(), args.end());
        std::vector<char*> argv;
        for (auto& a : owned) argv.push_back(a.data());
        std::ostringstream out, err;
        const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");

    m.attr("schema_version") = cli::schema_version;
}
