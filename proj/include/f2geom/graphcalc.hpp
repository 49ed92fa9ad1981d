#pragma once

#include "f2geom/dga.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f2geom {

struct Graph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arrows; // sorted by (tail, tip)

    static Graph make(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> arrows,
                      bool bidirect = false);
    static Graph from_labels(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& arrows, bool bidirect = false);
    static Graph polygon(std::size_t n);
    static Graph path(std::size_t n);

    std::size_t size() const { return vertices.size(); }
    long vertex_index(const std::string& label) const;
    long arrow_index(std::size_t x, std::size_t y) const;
    bool has_arrow(std::size_t x, std::size_t y) const { return arrow_index(x, y) >= 0; }
    bool bidirected() const;
    bool connected() const;
    // single-character labels are written together ("010"), longer ones joined with '-'
    std::string path_label(const std::vector<std::size_t>& p) const;
};

struct GraphCalculus {
    Graph graph;
    std::shared_ptr<const Calculus> calc;
    TensorProduct t2;
    std::vector<std::array<std::size_t, 3>> paths2; // t2 basis -> (x, y, z)
    BitVec theta;                                   // sum of all arrows

    BitVec delta(std::size_t x) const { return BitVec::unit(graph.size(), x); }
    BitVec indicator(const std::vector<std::size_t>& xs) const;
    long path2_index(std::size_t x, std::size_t y, std::size_t z) const;
    // element of t2 from its support given as path labels, e.g. {"010", "101"}
    BitVec t2_from_labels(const std::vector<std::string>& labels) const;
    BitVec omega1_from_labels(const std::vector<std::string>& labels) const;
};

GraphCalculus build_graph_calculus(const Graph& g);

enum class Level { max, med, min };
Level parse_level(const std::string& s);
const char* level_name(Level l);

std::vector<BitVec> relation_generators(const GraphCalculus& gc, Level level);
SecondOrder graph_second_order(const GraphCalculus& gc, Level level);

struct QuantumMetric {
    BitVec g;
    LinMap inverse; // t2 -> A
};

QuantumMetric euclidean_metric(const GraphCalculus& gc);

struct InverseMetricResult {
    std::optional<LinMap> inverse;
    std::size_t solution_dim = 0; // dimension of the solution space when solvable
};

InverseMetricResult solve_inverse_metric(const Calculus& calc, const TensorProduct& t2, const BitVec& g);
std::string snake_violation(const Calculus& calc, const TensorProduct& t2, const BitVec& g, const LinMap& inverse);
bool quantum_symmetry_check(const SecondOrder& so, const BitVec& g);

enum class CayleyKind { cyclic, klein };

// Polygon Ω(Z_n) or the square with the Z2×Z2 calculus, vertices identified as
// (0,0)=0, (0,1)=1, (1,1)=2, (1,0)=3.
struct CayleyData {
    CayleyKind kind = CayleyKind::cyclic;
    std::size_t n = 0;
    GraphCalculus gc;
    std::shared_ptr<const SecondOrder> so;
    std::vector<std::string> form_names;     // "e+","e-" or "e1","e2"
    std::vector<BitVec> forms;               // invariant 1-forms as arrow sums
    std::vector<std::vector<std::size_t>> shift; // shift[a][i]: the vertex reached from i along form a
    BitVec vol_rep;                          // e+ (x) e-  or  e1 (x) e2 in t2
    BitVec vol;                              // its class in Ω²
};

CayleyData cayley_quotient(CayleyKind kind, std::size_t n = 4);

} // namespace f2geom
