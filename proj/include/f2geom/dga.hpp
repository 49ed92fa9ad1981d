#pragma once

#include "f2geom/bits.hpp"
#include "f2geom/linalg.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace f2geom {

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InconsistentSecondOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Algebra {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<BitVec> table; // table[i*dim + j] = e_i e_j
    BitVec unit;

    const BitVec& prod(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
    BitVec basis(std::size_t i) const { return BitVec::unit(dim, i); }
    BitVec zero() const { return BitVec(dim); }
    BitVec one() const { return unit; }
    BitVec mul(const BitVec& a, const BitVec& b) const;
    LinMap left_mul(const BitVec& a) const;
    bool commutative() const;
    // "0", "1", or a sum of basis labels
    std::string format(const BitVec& a) const;
};

// F2(X): delta functions with pointwise product
Algebra function_algebra(const std::vector<std::string>& points);
// F2[x]/(f) with basis 1, x, ..., x^{n-1}; f given by its coefficient bits (bit k = coefficient of x^k)
Algebra polynomial_algebra(std::uint64_t f);
// sparse triples (i, j, k): e_i e_j contains e_k
Algebra algebra_from_triples(std::vector<std::string> labels,
                             const std::vector<std::array<std::size_t, 3>>& triples, const BitVec& unit);

struct Bimodule {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<BitVec>> left;  // left[a][m]  = e_a . m_m
    std::vector<std::vector<BitVec>> right; // right[a][m] = m_m . e_a

    BitVec act_left(const BitVec& a, const BitVec& m) const;
    BitVec act_right(const BitVec& m, const BitVec& a) const;
    BitVec zero() const { return BitVec(dim); }
    std::string format(const BitVec& v) const;
};

// A as a bimodule over itself
Bimodule regular_bimodule(const Algebra& A);

struct Calculus {
    Algebra A;
    Bimodule omega1;
    LinMap d; // A -> omega1
};

// M (x)_A N, presented as a quotient of the plain tensor product by the middle relations.
struct TensorProduct {
    Bimodule space;
    std::size_t left_dim = 0, right_dim = 0;
    Quotient quotient;
    std::vector<std::pair<std::size_t, std::size_t>> rep; // basis element -> (i, j)
    std::vector<BitVec> pure_table;                        // image of m_i (x) n_j at i*right_dim + j

    std::size_t dim() const { return space.dim; }
    const BitVec& pure(std::size_t i, std::size_t j) const { return pure_table[i * right_dim + j]; }
    BitVec tensor(const BitVec& x, const BitVec& y) const;
};

using LabelJoin = std::function<std::string(const std::string&, const std::string&)>;
std::string join_plain(const std::string& a, const std::string& b);

TensorProduct tensor_over(const Algebra& A, const Bimodule& M, const Bimodule& N, const LabelJoin& join = join_plain);
TensorProduct tensor_square_over_A(const Calculus& calc, const LabelJoin& join = join_plain);

struct D1Rule {
    std::optional<BitVec> theta;
    std::optional<LinMap> map; // omega1 -> omega2 when not inner

    static D1Rule inner(BitVec t) { return {std::move(t), std::nullopt}; }
    static D1Rule explicit_map(LinMap m) { return {std::nullopt, std::move(m)}; }
};

struct SecondOrder {
    TensorProduct t2;
    std::vector<BitVec> generators;
    std::vector<BitVec> relations; // basis of the generated sub-bimodule
    Quotient rel;
    Bimodule omega2;
    LinMap wedge; // t2 -> omega2
    LinMap d1;    // omega1 -> omega2
    std::optional<BitVec> theta;

    BitVec wedge_of(const BitVec& x, const BitVec& y) const { return wedge(t2.tensor(x, y)); }
};

std::vector<BitVec> bimodule_closure(const Algebra& A, const Bimodule& M, const std::vector<BitVec>& gens);
Bimodule quotient_bimodule(const Bimodule& M, const Quotient& q);

// Ω² only depends on t2 and N; inner rule puts d1 ω = θ∧ω + ω∧θ.
SecondOrder build_second_order(const Calculus& calc, TensorProduct t2, std::vector<BitVec> generators,
                               const D1Rule& rule);

std::optional<BitVec> find_inner_element(const Calculus& calc);

struct Diagnostic {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

Diagnostic check_algebra(const Algebra& A);
Diagnostic check_bimodule(const Algebra& A, const Bimodule& M);
Diagnostic check_calculus(const Calculus& calc);
Diagnostic check_second_order(const Calculus& calc, const SecondOrder& so);

// Ω¹_uni = ker(m: A⊗A -> A), d a = 1⊗a + a⊗1
Calculus universal_calculus(const Algebra& A);

// Re-express M in a new basis given as vectors of M. Returns the bimodule and the coordinate change
// old -> new.
std::pair<Bimodule, LinMap> rebase(const Bimodule& M, const std::vector<BitVec>& basis,
                                   std::vector<std::string> labels);

// Basis of all bimodule maps M -> N, as linear maps, in the order of the free coordinates of the
// column-major entry vector.
std::vector<LinMap> bimodule_hom_basis(const Algebra& A, const Bimodule& M, const Bimodule& N);
// Empty string when f is a bimodule map, otherwise a witness.
std::string bimodule_map_violation(const Algebra& A, const Bimodule& M, const Bimodule& N, const LinMap& f);

} // namespace f2geom
