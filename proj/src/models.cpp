#include "f2geom/models.hpp"

#include <algorithm>
#include <charconv>

namespace f2geom {

LabelJoin graph_join(const Graph& g)
{
    bool compact = std::all_of(g.vertices.begin(), g.vertices.end(), [](auto& s) { return s.size() == 1; });
    return [compact](const std::string& a, const std::string& b) {
        return compact ? a + b.substr(1) : a + b.substr(b.find('-'));
    };
}

Geometry graph_geometry(const GraphCalculus& gc, Level level)
{
    auto so = std::make_shared<SecondOrder>(graph_second_order(gc, level));
    std::optional<Metric> met;
    if (gc.graph.bidirected()) {
        auto q = euclidean_metric(gc);
        met = Metric{q.g, q.inverse};
    }
    return make_geometry(gc.calc, so, met, std::nullopt, graph_join(gc.graph));
}

Geometry cayley_geometry(const CayleyData& cd)
{
    auto q = euclidean_metric(cd.gc);
    auto fr = make_frame(*cd.gc.calc, cd.gc.t2, cd.form_names, cd.forms);
    return make_geometry(cd.gc.calc, cd.so, Metric{q.g, q.inverse}, fr, graph_join(cd.gc.graph));
}

F2Z3Data f2z3_data()
{
    F2Z3Data z;
    Algebra A = polynomial_algebra(0b1001);
    Calculus U = universal_calculus(A);
    const auto& M = U.omega1;
    BitVec x = A.basis(1), x2 = A.basis(2);
    BitVec ep = M.act_left(x2, U.d(x)), em = M.act_left(x, U.d(x2));

    std::vector<BitVec> basis;
    std::vector<std::string> labels;
    for (auto [f, name] : {std::pair{ep, std::string("e+")}, std::pair{em, std::string("e-")}})
        for (std::size_t u = 0; u < A.dim; ++u) {
            basis.push_back(M.act_left(A.basis(u), f));
            labels.push_back(u == 0 ? name : A.labels[u] + "·" + name);
        }
    auto [M2, coord] = rebase(M, basis, labels);

    auto calc = std::make_shared<Calculus>();
    calc->A = A;
    calc->omega1 = M2;
    calc->d = LinMap(A.dim, M2.dim);
    for (std::size_t i = 0; i < A.dim; ++i)
        calc->d.col(i) = coord(U.d(A.basis(i)));

    z.ep = coord(ep);
    z.em = coord(em);
    z.theta = z.ep + z.em;
    auto join = [](const std::string& a, const std::string& b) { return a + "⊗" + b; };
    auto t2 = tensor_square_over_A(*calc, join);
    std::vector<BitVec> gens{t2.tensor(z.ep, z.ep), t2.tensor(z.em, z.em),
                             t2.tensor(z.ep, z.em) + t2.tensor(z.em, z.ep)};
    auto so = std::make_shared<SecondOrder>(build_second_order(*calc, t2, gens, D1Rule::inner(z.theta)));
    z.frame = make_frame(*calc, t2, {"e+", "e-"}, {z.ep, z.em});
    z.vol = so->wedge(t2.tensor(z.ep, z.em));
    BitVec g0 = t2.tensor(z.ep, z.em) + t2.tensor(z.em, z.ep);
    for (std::size_t i = 0; i < 3; ++i)
        z.metrics.push_back(t2.space.act_left(A.basis(i), g0));
    z.calc = std::move(calc);
    z.so = std::move(so);
    return z;
}

const ModelGeometry& Model::geometry(const std::string& label) const
{
    for (auto& g : geometries)
        if (g.label == label)
            return g;
    throw InvalidInput("model " + name + " has no geometry " + label);
}

std::vector<std::string> model_names()
{
    return {"2pt", "line", "triangle", "square-z4", "square-z2z2", "ngon-5", "ngon-6", "ngon-7", "f2z3"};
}

static std::optional<std::size_t> ngon_size(const std::string& name)
{
    if (name.rfind("ngon-", 0) != 0)
        return std::nullopt;
    std::size_t n = 0;
    auto s = std::string_view(name).substr(5);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size() || n < 3)
        return std::nullopt;
    return n;
}

Model build_model(const std::string& name)
{
    Model m;
    m.name = name;
    if (name == "2pt" || name == "line") {
        m.title = name == "2pt" ? "two points 0-1" : "line 0-1-2";
        m.graph = build_graph_calculus(Graph::path(name == "2pt" ? 2 : 3));
        for (Level l : {Level::max, Level::med, Level::min})
            m.geometries.push_back({level_name(l), graph_geometry(*m.graph, l)});
        return m;
    }
    if (name == "triangle" || name == "square-z4" || name == "square-z2z2" || ngon_size(name)) {
        if (name == "square-z2z2")
            m.cayley = cayley_quotient(CayleyKind::klein);
        else
            m.cayley = cayley_quotient(CayleyKind::cyclic, name == "triangle" ? 3 : name == "square-z4" ? 4 : *ngon_size(name));
        m.title = name == "square-z2z2" ? "square, Z2×Z2 Cayley calculus"
                                        : "polygon, Z" + std::to_string(m.cayley->n) + " Cayley calculus";
        m.graph = m.cayley->gc;
        m.geometries.push_back({"cayley", cayley_geometry(*m.cayley)});
        for (Level l : {Level::med, Level::min})
            m.geometries.push_back({level_name(l), graph_geometry(*m.graph, l)});
        return m;
    }
    if (name == "f2z3") {
        m.title = "group algebra F2 Z3, universal calculus";
        m.f2z3 = f2z3_data();
        auto& z = *m.f2z3;
        auto join3 = [](const std::string& a, const std::string& b) { return a + "⊗" + b; };
        for (std::size_t i = 0; i < 3; ++i) {
            auto inv = solve_inverse_metric(*z.calc, z.so->t2, z.metrics[i]);
            if (!inv.inverse)
                throw InvalidInput("g" + std::to_string(i) + " has no inverse");
            m.geometries.push_back({"g" + std::to_string(i),
                                    make_geometry(z.calc, z.so, Metric{z.metrics[i], *inv.inverse}, z.frame, join3)});
        }
        m.einstein_form = EinsteinForm::plus_metric;
        return m;
    }
    throw InvalidInput("unknown model " + name);
}

} // namespace f2geom
