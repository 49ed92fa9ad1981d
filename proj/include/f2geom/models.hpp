#pragma once

#include "f2geom/booleanview.hpp"
#include "f2geom/demorgan.hpp"
#include "f2geom/graphcalc.hpp"
#include "f2geom/moduli.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace f2geom {

// 3-step labels for graph calculi: "01" + "12" -> "012", "a-b" + "b-c" -> "a-b-c"
LabelJoin graph_join(const Graph& g);

// Geometry of a graph calculus with the Euclidean metric (no metric if the graph is not bidirected).
Geometry graph_geometry(const GraphCalculus& gc, Level level);
// Cayley quotient with its frame and the Euclidean metric
Geometry cayley_geometry(const CayleyData& cd);

// F2[x]/(x³+1) with Ω¹ = Ω¹_uni rewritten in the basis u·e± (e+ = x²dx, e- = x dx²)
struct F2Z3Data {
    std::shared_ptr<const Calculus> calc;
    std::shared_ptr<const SecondOrder> so; // (e±)² = 0, e+e- + e-e+ = 0
    Frame frame;
    BitVec ep, em, theta;
    BitVec vol;                 // e+∧e- in Ω²
    std::vector<BitVec> metrics; // g_i = x^i (e+⊗e- + e-⊗e+)
};

F2Z3Data f2z3_data();

struct ModelGeometry {
    std::string label; // "max", "min", "cayley", "g0", ...
    Geometry geo;
};

struct Model {
    std::string name;
    std::string title;
    std::optional<GraphCalculus> graph;
    std::optional<CayleyData> cayley;
    std::optional<F2Z3Data> f2z3;
    std::vector<ModelGeometry> geometries;
    EinsteinForm einstein_form = EinsteinForm::scalar_metric;

    const ModelGeometry& geometry(const std::string& label) const;
    const ModelGeometry& primary() const { return geometries.front(); }
};

// 2pt, line, triangle, square-z4, square-z2z2, ngon-5, ngon-6, ngon-7, f2z3 (any ngon-N with N >= 3 builds)
std::vector<std::string> model_names();
Model build_model(const std::string& name);

/* ---- verification reports ---- */

struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
    bool consistency = false; // internal cross-check rather than a stated result
};

struct Report {
    std::string subject;
    std::vector<Claim> claims;
    double seconds = 0;

    bool ok() const;
    std::size_t failed() const;
    void add(std::string name, bool pass, std::string detail = "", bool consistency = false);
};

Report verify_model(const std::string& name);
// subset operations against characteristic vectors, Venn Leibniz identities
Report verify_boolean_view(std::uint64_t seed = 7, std::size_t random_cases = 500);
// complementation square, dual connections and dual curvature
Report verify_de_morgan();
// bar algebras, ∂, change of variables, bar calculi in degrees 1 and 2
Report verify_generalized_duality();

// de Morgan checks on one model: subset operations and their duals, dual QLCs on the chosen
// geometry, and the stated dual facts for the triangle, n-gons and F2Z3
Report demorgan_report(const Model& m, const std::string& geometry_label = "", std::uint64_t seed = 3);
// bar algebra, ∂ and the universal bar calculus of a user algebra
Report algebra_duality_report(const Algebra& A, const std::string& name);

// torsion/metric evaluations by inner formulas versus the definitions, QLC ⊆ WQLC
std::vector<Claim> consistency_claims(const Geometry& geo, const std::string& where);

} // namespace f2geom
