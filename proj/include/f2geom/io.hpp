#pragma once

#include "f2geom/models.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f2geom {

using Json = nlohmann::ordered_json;

// {"vertices": [...], "arrows": [["0","1"], ...], "bidirect": true}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

// {"basis": [...], "product": [[i,j,k], ...], "unit": [coeffs]}; e_i e_j contains e_k
Algebra algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& A);

// elements as lists of basis labels in basis order
Json element_to_json(const std::vector<std::string>& labels, const BitVec& v);
BitVec element_from_json(const std::vector<std::string>& labels, const Json& j);
// sorted labels joined by '+', "0" for zero
std::string element_text(const std::vector<std::string>& labels, const BitVec& v);

// A built-in model name, a graph file or an algebra file. Graph files give the max/med/min
// geometries, plus "cayley" when the graph is a bidirected polygon 0-1-...-(n-1).
struct Input {
    Model model;
    std::optional<Algebra> algebra; // algebra files only; model has no geometries then
    std::string source;
};

Input load_input(const std::string& spec);

// "max"/"med"/"min"/"cayley"/"g0".. ; empty picks the model's first geometry
const ModelGeometry& select_geometry(const Input& in, const std::string& omega);

struct RunInfo {
    std::string model, omega;
    Constraints constraints;
    bool sigma_invertible = false;
};

// {model, omega, constraints, count, connections: [{params, nabla_table, sigma_table, flags}], stats}
Json moduli_to_json(const Geometry& geo, const ConnectionModuli& mod, const RunInfo& info);

struct ConnectionTables {
    std::string params;
    LinMap nabla, sigma;
    bool flat = false, torsion_free = false, cotorsion_free = false, metric_compatible = false;

    bool operator==(const ConnectionTables&) const = default;
};

ConnectionTables tables_of(const Geometry& geo, const ClassifiedConnection& c);
// reads the connection tables of a classify report back against the same geometry
std::vector<ConnectionTables> tables_from_json(const Geometry& geo, const Json& report);

Json report_to_json(const Report& r);

// model names plus boolean-view, de-morgan, generalized-duality; "all" expands to every one
std::vector<std::string> verify_targets(const std::vector<std::string>& requested);
Report verify_target(const std::string& name);

struct SearchRequest {
    std::string input, omega;
    Constraints constraints;
    Strategy strategy = Strategy::reduced;
    bool sigma_invertible = false, constant_only = false;
    std::uint64_t enum_cap = kDefaultEnumCap;
};

struct Search {
    Input in;
    std::size_t geometry = 0; // index into in.model.geometries
    Constraints constraints;
    bool sigma_invertible = false;
    ConnectionModuli moduli;

    const ModelGeometry& mg() const { return in.model.geometries[geometry]; }
    RunInfo info() const { return {in.model.name, mg().label, constraints, sigma_invertible}; }
};

// throws InvalidInput naming the constraint that cannot apply, SearchSpaceTooLarge past the cap
Search run_search(const SearchRequest& req);

struct LiftData {
    std::size_t lift = 0;
    BitVec ricci, scalar, eins;
    bool conserved = false;
};

struct CurvatureData {
    std::size_t index = 0;
    LinMap R;
    std::vector<LiftData> lifts;
};

struct CurvatureReport {
    std::size_t lift_count = 0;
    std::vector<CurvatureData> connections;
};

// nullopt selects all connections / all lifts
CurvatureReport curvature_report(const Search& s, std::optional<std::size_t> connection = std::nullopt,
                                 std::optional<std::size_t> lift = std::nullopt, std::uint64_t enum_cap = kDefaultEnumCap);
Json curvature_to_json(const Search& s, const CurvatureReport& r);

} // namespace f2geom
