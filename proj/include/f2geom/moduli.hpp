#pragma once

#include "f2geom/riemann.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace f2geom {

struct Constraints {
    bool torsion_free = false;
    bool cotorsion_free = false;
    bool metric_compatible = false;

    static Constraints qlc() { return {true, false, true}; }
    static Constraints wqlc() { return {true, true, false}; }
    // comma list of torsion-free, cotorsion-free, metric-compatible, qlc, wqlc
    static Constraints parse(const std::string& list);
    bool any() const { return torsion_free || cotorsion_free || metric_compatible; }
    std::vector<std::string> names() const;
};

enum class Strategy { brute, reduced, invariant };
Strategy parse_strategy(const std::string& s);
const char* strategy_name(Strategy s);

struct SearchConfig {
    Constraints constraints;
    bool sigma_invertible = false;
    Strategy strategy = Strategy::reduced;
    std::uint64_t enum_cap = kDefaultEnumCap;
    bool constant_only = false; // invariant strategy: coefficients in {0, 1}
    unsigned workers = 0;       // 0: hardware concurrency
};

// Coordinates c of (σ, α) = Σ c_k (σ_k, α_k).
struct ParameterSpace {
    std::vector<std::string> names;
    std::vector<LinMap> sigma;
    std::vector<LinMap> alpha;
    std::size_t sigma_count = 0, alpha_count = 0;
    bool invariant = false;
    // invariant coordinates only: coefficient functions of each basis map, one block of dim A per coefficient
    std::vector<BitVec> raw;

    std::size_t size() const { return names.size(); }
    LinMap sigma_at(const BitVec& c) const;
    LinMap alpha_at(const BitVec& c) const;
    Connection connection(const Geometry& geo, const BitVec& c) const;
};

// all bimodule maps; for graph calculi each coordinate is a single matrix entry inside an endpoint block
ParameterSpace parameter_space(const Geometry& geo);
// bimodule maps written with coefficient functions in the frame; constant_only keeps f in {0, 1}
ParameterSpace invariant_parameter_space(const Geometry& geo, bool constant_only);

// F(x) = d0 + Σ x_i lin_i + Σ_{i<j} x_i x_j quad(i,j)
struct QuadraticSystem {
    std::size_t nvars = 0, nres = 0;
    BitVec d0;
    std::vector<BitVec> lin;
    std::vector<BitVec> quad; // index i*(i-1)/2 + j for j < i

    const BitVec& q(std::size_t i, std::size_t j) const { return i > j ? quad[i * (i - 1) / 2 + j] : quad[j * (j - 1) / 2 + i]; }
    BitVec eval(const BitVec& x) const;
    bool linear() const;
};

// Recovers the polynomial of a map of degree ≤ 2 from its values; spot-checks extra points and throws if
// the map has higher degree.
QuadraticSystem polarize(std::size_t nvars, const std::function<BitVec(const BitVec&)>& F, std::size_t checks = 16);

struct SolveStats {
    std::uint64_t candidates = 0;
    std::size_t guessed = 0;
};

// all zeros of the system over F2^nvars, Gray-code walk split across workers by leading bits
std::vector<BitVec> gray_solve(const QuadraticSystem& sys, std::uint64_t cap, unsigned workers, SolveStats* stats = nullptr);
// all zeros via linear-row extraction then guessing a vertex cover of the quadratic monomials
std::vector<BitVec> guess_and_determine(const QuadraticSystem& sys, std::uint64_t cap, SolveStats* stats = nullptr);

struct ClassifiedConnection {
    BitVec params;
    Connection conn;
    bool flat = false;
    bool torsion_free = false;
    bool cotorsion_free = false;
    bool metric_compatible = false;
    std::optional<bool> constant_coefficients;
};

struct SearchStats {
    std::string strategy;
    std::size_t parameter_dim = 0;
    std::size_t linear_dim = 0; // dimension after torsion/cotorsion (equals parameter_dim for brute)
    std::size_t guessed = 0;
    std::uint64_t candidates = 0;
    std::size_t before_filter = 0;
    double seconds = 0;
};

struct ConnectionModuli {
    ParameterSpace space;
    std::vector<ClassifiedConnection> connections;
    SearchStats stats;
};

ConnectionModuli classify(const Geometry& geo, const SearchConfig& cfg);

// constant-coefficient test in the frame (nullopt when the geometry has none)
std::optional<bool> constant_coefficients(const Geometry& geo, const Connection& c);

struct WqlcFamily {
    ParameterSpace space;        // invariant coordinates
    AffineSolutionSpace solutions; // torsion-free and cotorsion-free
    bool module_stable = false;  // kernel closed under untwisted multiplication of all coefficients by A
    // kernel dimension / dim A
    std::optional<std::size_t> function_params;
    Connection member(const Geometry& geo, const BitVec& kernel_coeffs) const;
};

WqlcFamily wqlc_family(const Geometry& geo);

} // namespace f2geom
