#pragma once

#include "f2geom/graphcalc.hpp"
#include "f2geom/riemann.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace f2geom {

// plain: P(X) with ⊕ and ∩.  dual: P̄(X) with ⊕̄ and ∪.
enum class Carrier { plain, dual };

// A set of k-step paths (k = 1: arrows, k = 2: 2-steps, k = 3: 3-steps).
struct SubsetForm {
    std::size_t degree = 1;
    Carrier carrier = Carrier::plain;
    BitVec members;

    bool operator==(const SubsetForm&) const = default;
};

class BooleanView {
public:
    explicit BooleanView(GraphCalculus gc);

    const GraphCalculus& gc() const { return gc_; }
    const Graph& graph() const { return gc_.graph; }
    std::size_t vertex_count() const { return gc_.graph.size(); }
    std::size_t path_count(std::size_t degree) const { return paths(degree).size(); }
    const std::vector<std::vector<std::size_t>>& paths(std::size_t degree) const;
    long path_index(const std::vector<std::size_t>& p) const;

    // vertex subsets
    BitVec complement(const BitVec& a) const;
    // complement inside Arr^(k); switches carrier
    SubsetForm complement(const SubsetForm& w) const;

    SubsetForm empty(std::size_t degree, Carrier c) const;
    SubsetForm full(std::size_t degree, Carrier c) const;
    SubsetForm zero(std::size_t degree, Carrier c) const; // ∅ resp. Arr^(k)
    SubsetForm theta(Carrier c) const;                    // Arr resp. ∅
    SubsetForm add(const SubsetForm& a, const SubsetForm& b) const; // ⊕ resp. ⊕̄

    SubsetForm d(const BitVec& a) const;     // arrows with one end in a
    SubsetForm bar_d(const BitVec& a) const; // arrows wholly in a or wholly in ā
    // a∩ω / a∪ω (initial tail in a) and ω∩a / ω∪a (final tip in a), by the carrier of ω
    SubsetForm left(const BitVec& a, const SubsetForm& w) const;
    SubsetForm right(const SubsetForm& w, const BitVec& a) const;
    // concatenation (plain) or coconcatenation (dual) of a p-step and a q-step set
    SubsetForm tensor(const SubsetForm& w, const SubsetForm& e) const;
    // degree 1 -> 2: one step in ω and the other not (plain); both or neither in ω (dual)
    SubsetForm d_form(const SubsetForm& w) const;

    // blocks pArr²q of the relation collection
    std::vector<BitVec> relation_blocks(Level level) const;
    // degree 2: ω⊕η a union of blocks; degree 3: the same on the first two steps.
    // The relation is the same for both carriers.
    bool equivalent(const SubsetForm& a, const SubsetForm& b, Level level) const;

    // characteristic vectors; a dual element ω corresponds to χ of its complement
    BitVec to_f2(const SubsetForm& w) const;
    SubsetForm from_f2(const BitVec& v, std::size_t degree, Carrier c) const;
    BitVec vertices_to_f2(const BitVec& a, Carrier c) const { return c == Carrier::plain ? a : complement(a); }

    std::string format(const SubsetForm& w) const; // members as sorted labels, e.g. {010,101}
    SubsetForm parse(const std::vector<std::string>& labels, std::size_t degree, Carrier c) const;

    // ∇ of an F2 connection on subsets, and its de Morgan dual ∇̄ω = complement of ∇(ω̄)
    SubsetForm nabla(const Connection& conn, const SubsetForm& w) const;
    SubsetForm dual_nabla(const Connection& conn, const SubsetForm& w) const;
    // (d⊗id ⊕ id∧∇)∇ω built stepwise from subset operations; with a dual ω everything is computed
    // with ⊕̄, ⊗̄, d̄ and ∇̄. Unreduced: compare modulo the relations.
    SubsetForm curvature(const Connection& conn, const SubsetForm& w) const;

private:
    GraphCalculus gc_;
    std::vector<std::vector<std::vector<std::size_t>>> paths_; // by degree, index 0 unused
    std::map<std::vector<std::size_t>, std::size_t> index_;
    void require_same(const SubsetForm& a, const SubsetForm& b) const;
};

/* ---- polygon in subset form ---- */

// a± = tails of ω ∩ e±
std::pair<BitVec, BitVec> polygon_tails(const BooleanView& v, const SubsetForm& w);
// ∂±ω: run starts of the tails of ω± together with the points just past each run of heads
std::pair<BitVec, BitVec> polygon_boundary(const BooleanView& v, const SubsetForm& w);
// e±_i = {i→i∓1→i, i∓1→i→i±1}
SubsetForm polygon_half_step(const BooleanView& v, std::size_t i, bool plus);
// the ∇e± = 0 connection as a union of half steps over ∂±ω
SubsetForm trivial_connection_subset(const BooleanView& v, const SubsetForm& w);
// triangle α = β = 1 connection: trivial part ⊕ {i→i-1→i-2 : i ∈ a+} ⊕ {i→i+1→i+2 : i ∈ a-}.
// The extra 2-steps can meet the half steps, so these are symmetric differences.
SubsetForm curved_triangle_subset(const BooleanView& v, const SubsetForm& w);

std::size_t polygon_order(const Graph& g); // n if g is the n-gon 0→1→...→n-1 bidirected, else 0

} // namespace f2geom
