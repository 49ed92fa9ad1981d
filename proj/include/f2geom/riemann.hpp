#pragma once

#include "f2geom/dga.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace f2geom {

// Free left A-basis of Ω¹ (e.g. e+, e-) with the induced basis e^a (x) e^b of Ω¹(x)Ω¹.
struct Frame {
    std::vector<std::string> names;
    std::vector<BitVec> forms;
    std::vector<BitVec> pairs; // e^a (x) e^b at a*r + b

    std::size_t rank() const { return forms.size(); }
    // coefficient functions f_a with x = Σ f_a e^a (resp. Σ f_ab e^a(x)e^b), or nullopt if not in the span
    std::optional<std::vector<BitVec>> coords1(const BitVec& x) const;
    std::optional<std::vector<BitVec>> coords2(const BitVec& x) const;

    std::size_t algebra_dim = 0, omega1_dim = 0, t2_dim = 0;
    std::shared_ptr<const SpanCoordinates> span1, span2;
};

Frame make_frame(const Calculus& calc, const TensorProduct& t2, std::vector<std::string> names,
                 std::vector<BitVec> forms);

struct Metric {
    BitVec g;
    LinMap inverse; // t2 -> A
};

// Everything needed to evaluate connections on a fixed (Ω¹, Ω², g).
struct Geometry {
    std::shared_ptr<const Calculus> calc;
    std::shared_ptr<const SecondOrder> so;
    BitVec theta;
    std::optional<Metric> metric;
    std::optional<Frame> frame;

    TensorProduct t3;                           // (Ω¹(x)Ω¹) (x) Ω¹
    TensorProduct w;                            // Ω² (x) Ω¹
    std::vector<std::array<std::size_t, 3>> triples; // t3 basis -> plain triple
    std::vector<BitVec> left3;                  // ω_a (x) τ_k in t3, at a*t2 + k
    std::vector<BitVec> left_wedge;             // ω_a ∧ τ_k in w
    std::vector<BitVec> d1_tensor;              // d1(ω_a) (x) ω_b in w, at a*m + b

    const TensorProduct& t2() const { return so->t2; }
    std::size_t m() const { return calc->omega1.dim; }
    const Metric& require_metric() const;

    BitVec left_mul3(std::size_t a, const BitVec& x) const; // ω_a (x) x, x in t2
    std::string format1(const BitVec& x) const { return calc->omega1.format(x); }
    std::string format2(const BitVec& x) const { return t2().space.format(x); }
    std::string format3(const BitVec& x) const { return t3.space.format(x); }
    std::string formatw(const BitVec& x) const { return w.space.format(x); }
};

Geometry make_geometry(std::shared_ptr<const Calculus> calc, std::shared_ptr<const SecondOrder> so,
                       std::optional<Metric> metric, std::optional<Frame> frame = std::nullopt,
                       const LabelJoin& join3 = join_plain);

struct Connection {
    LinMap nabla; // Ω¹ -> Ω¹(x)Ω¹
    LinMap sigma; // Ω¹(x)Ω¹ -> Ω¹(x)Ω¹
    std::optional<LinMap> alpha;
};

// ∇ω = θ⊗ω + σ(ω⊗θ) + α(ω)
Connection connection_from_inner(const Geometry& geo, const LinMap& sigma, const LinMap& alpha);
// unchecked version for search loops
Connection inner_connection_unchecked(const Geometry& geo, const LinMap& sigma, const LinMap& alpha);
std::string leibniz_violation(const Geometry& geo, const Connection& c);

LinMap torsion(const Geometry& geo, const Connection& c); // Ω¹ -> Ω²
bool torsion_free(const Geometry& geo, const Connection& c);
bool torsion_free_inner(const Geometry& geo, const LinMap& sigma, const LinMap& alpha);

// (d⊗id + id∧∇) applied to x in Ω¹⊗Ω¹, valued in Ω²⊗Ω¹
BitVec d_wedge(const Geometry& geo, const Connection& c, const BitVec& x);
BitVec cotorsion(const Geometry& geo, const Connection& c);

// tensor-product connection ∇⊗id + (σ⊗id)(id⊗∇) on x in Ω¹⊗Ω¹
BitVec tensor_nabla(const Geometry& geo, const Connection& c, const BitVec& x);
BitVec metric_defect(const Geometry& geo, const Connection& c);
// θ⊗g + σ12σ23(g⊗θ) + (α⊗id)g + σ12(id⊗α)g
BitVec metric_defect_inner(const Geometry& geo, const LinMap& sigma, const LinMap& alpha);

LinMap curvature(const Geometry& geo, const Connection& c); // Ω¹ -> Ω²⊗Ω¹

std::vector<LinMap> enumerate_lifts(const Geometry& geo, std::uint64_t cap = kDefaultEnumCap);
bool is_lift(const Geometry& geo, const LinMap& i);

struct RicciData {
    BitVec ricci;  // in Ω¹⊗Ω¹
    BitVec scalar; // in A
};

RicciData ricci(const Geometry& geo, const Connection& c, const LinMap& lift);
RicciData two_ricci(const Geometry& geo, const Connection& c, const LinMap& ip, const LinMap& im);

struct EinsteinData {
    BitVec eins;
    BitVec divergence; // ((,)⊗id)∇Eins in Ω¹
    bool conserved() const { return divergence.none(); }
};

enum class EinsteinForm {
    scalar_metric, // Ricci + S g
    plus_metric,   // Ricci + g
};

EinsteinData einstein(const Geometry& geo, const Connection& c, const LinMap& lift,
                      EinsteinForm form = EinsteinForm::scalar_metric);

} // namespace f2geom
