#include "f2geom/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace f2geom;

namespace {

Search search(const std::string& input, const std::string& omega, const std::vector<std::string>& constraints,
              const std::string& strategy, bool sigma_invertible, bool constant_only, std::uint64_t enum_cap)
{
    SearchRequest req;
    req.input = input;
    req.omega = omega;
    std::string list;
    for (auto& c : constraints)
        list += (list.empty() ? "" : ",") + c;
    req.constraints = list.empty() ? Constraints{} : Constraints::parse(list);
    req.strategy = parse_strategy(strategy);
    req.sigma_invertible = sigma_invertible;
    req.constant_only = constant_only;
    req.enum_cap = enum_cap;
    py::gil_scoped_release release;
    return run_search(req);
}

std::string models_json()
{
    Json arr = Json::array();
    for (auto& name : model_names()) {
        Model m = build_model(name);
        std::vector<std::string> labels;
        for (auto& g : m.geometries)
            labels.push_back(g.label);
        arr.push_back({{"name", name}, {"title", m.title}, {"geometries", labels}});
    }
    return arr.dump();
}

} // namespace

PYBIND11_MODULE(_f2geom, m)
{
    m.doc() = "F2 Riemannian geometry core";

    py::register_exception<SearchSpaceTooLarge>(m, "SearchSpaceTooLarge", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<InconsistentSecondOrder>(m, "InconsistentSecondOrder", PyExc_ValueError);

    m.attr("DEFAULT_ENUM_CAP") = kDefaultEnumCap;

    m.def("models_json", &models_json);

    m.def(
        "classify_json",
        [](const std::string& input, const std::string& omega, const std::vector<std::string>& constraints,
           const std::string& strategy, bool sigma_invertible, bool constant_only, std::uint64_t enum_cap) {
            auto s = search(input, omega, constraints, strategy, sigma_invertible, constant_only, enum_cap);
            return moduli_to_json(s.mg().geo, s.moduli, s.info()).dump();
        },
        py::arg("input"), py::arg("omega") = "", py::arg("constraints") = std::vector<std::string>{},
        py::arg("strategy") = "reduced", py::arg("sigma_invertible") = false, py::arg("constant_only") = false,
        py::arg("enum_cap") = kDefaultEnumCap);

    m.def(
        "curvature_json",
        [](const std::string& input, const std::string& omega, const std::vector<std::string>& constraints,
           const std::string& strategy, bool sigma_invertible, std::optional<std::size_t> connection,
           std::optional<std::size_t> lift, std::uint64_t enum_cap) {
            auto s = search(input, omega, constraints, strategy, sigma_invertible, false, enum_cap);
            py::gil_scoped_release release;
            return curvature_to_json(s, curvature_report(s, connection, lift, enum_cap)).dump();
        },
        py::arg("input"), py::arg("omega") = "", py::arg("constraints") = std::vector<std::string>{},
        py::arg("strategy") = "reduced", py::arg("sigma_invertible") = false, py::arg("connection") = py::none(),
        py::arg("lift") = py::none(), py::arg("enum_cap") = kDefaultEnumCap);

    m.def(
        "verify_json",
        [](const std::vector<std::string>& targets) {
            auto names = verify_targets(targets);
            py::gil_scoped_release release;
            Json arr = Json::array();
            for (auto& n : names)
                arr.push_back(report_to_json(verify_target(n)));
            return arr.dump();
        },
        py::arg("targets"));

    m.def(
        "demorgan_json",
        [](const std::string& input, const std::string& omega) {
            Input in = load_input(input);
            py::gil_scoped_release release;
            Report r = in.algebra ? algebra_duality_report(*in.algebra, in.model.name) : demorgan_report(in.model, omega);
            return report_to_json(r).dump();
        },
        py::arg("input"), py::arg("omega") = "");

    m.def(
        "solve_linear",
        [](const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs) -> py::object {
            std::size_t cols = rows.empty() ? 0 : rows.front().size();
            BitMat a(rows.size(), cols);
            BitVec b(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != cols)
                    throw InvalidInput("solve_linear: ragged matrix");
                for (std::size_t j = 0; j < cols; ++j)
                    a.set(i, j, rows[i][j] & 1);
            }
            if (rhs.size() != rows.size())
                throw InvalidInput("solve_linear: right-hand side has the wrong length");
            for (std::size_t i = 0; i < rhs.size(); ++i)
                b.set(i, rhs[i] & 1);
            auto sol = solve_linear(a, b);
            if (sol.empty())
                return py::none();
            auto bits = [](const BitVec& v) {
                std::vector<int> out(v.size());
                for (std::size_t i = 0; i < v.size(); ++i)
                    out[i] = v[i];
                return out;
            };
            std::vector<std::vector<int>> kernel;
            for (auto& k : sol.kernel_basis)
                kernel.push_back(bits(k));
            return py::make_tuple(bits(*sol.particular), kernel);
        },
        py::arg("rows"), py::arg("rhs"),
        "Solve A x = b over F2. Returns (particular, kernel basis) or None when inconsistent.");
}
