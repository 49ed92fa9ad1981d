#include "f2geom/graphcalc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace f2geom {

/* ---- graphs ---- */

Graph Graph::make(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> arrows,
                  bool bidirect)
{
    if (vertices.empty())
        throw InvalidInput("graph needs at least one vertex");
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        throw InvalidInput("duplicate vertex label");
    std::set<std::pair<std::size_t, std::size_t>> arr;
    for (auto [x, y] : arrows) {
        if (x >= vertices.size() || y >= vertices.size())
            throw InvalidInput("arrow endpoint out of range");
        if (x == y)
            throw InvalidInput("self-arrow at " + vertices[x] + " is not allowed");
        arr.insert({x, y});
        if (bidirect)
            arr.insert({y, x});
    }
    Graph g;
    g.vertices = std::move(vertices);
    g.arrows.assign(arr.begin(), arr.end());
    return g;
}

Graph Graph::from_labels(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arrows,
                         bool bidirect)
{
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        idx[vertices[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> a;
    for (auto& [s, t] : arrows) {
        auto i = idx.find(s), j = idx.find(t);
        if (i == idx.end() || j == idx.end())
            throw InvalidInput("arrow refers to unknown vertex " + (i == idx.end() ? s : t));
        a.emplace_back(i->second, j->second);
    }
    return make(std::move(vertices), std::move(a), bidirect);
}

Graph Graph::polygon(std::size_t n)
{
    if (n < 3)
        throw InvalidInput("a polygon needs at least 3 vertices");
    std::vector<std::string> v;
    std::vector<std::pair<std::size_t, std::size_t>> a;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(std::to_string(i));
        a.emplace_back(i, (i + 1) % n);
    }
    return make(std::move(v), std::move(a), true);
}

Graph Graph::path(std::size_t n)
{
    std::vector<std::string> v;
    std::vector<std::pair<std::size_t, std::size_t>> a;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(std::to_string(i));
        if (i + 1 < n)
            a.emplace_back(i, i + 1);
    }
    return make(std::move(v), std::move(a), true);
}

long Graph::vertex_index(const std::string& label) const
{
    auto it = std::find(vertices.begin(), vertices.end(), label);
    return it == vertices.end() ? -1 : long(it - vertices.begin());
}

long Graph::arrow_index(std::size_t x, std::size_t y) const
{
    auto it = std::lower_bound(arrows.begin(), arrows.end(), std::make_pair(x, y));
    return (it != arrows.end() && *it == std::make_pair(x, y)) ? long(it - arrows.begin()) : -1;
}

bool Graph::bidirected() const
{
    for (auto [x, y] : arrows)
        if (!has_arrow(y, x))
            return false;
    return true;
}

bool Graph::connected() const
{
    std::vector<std::vector<std::size_t>> adj(size());
    for (auto [x, y] : arrows) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<bool> seen(size());
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string Graph::path_label(const std::vector<std::size_t>& p) const
{
    bool compact = std::all_of(vertices.begin(), vertices.end(), [](auto& s) { return s.size() == 1; });
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i && !compact)
            s += "-";
        s += vertices[p[i]];
    }
    return s;
}

/* ---- calculus ---- */

BitVec GraphCalculus::indicator(const std::vector<std::size_t>& xs) const
{
    BitVec v(graph.size());
    for (auto x : xs)
        v.set(x);
    return v;
}

long GraphCalculus::path2_index(std::size_t x, std::size_t y, std::size_t z) const
{
    std::array<std::size_t, 3> key{x, y, z};
    auto it = std::find(paths2.begin(), paths2.end(), key);
    return it == paths2.end() ? -1 : long(it - paths2.begin());
}

BitVec GraphCalculus::t2_from_labels(const std::vector<std::string>& labels) const
{
    BitVec v(t2.dim());
    for (auto& l : labels) {
        auto it = std::find(t2.space.labels.begin(), t2.space.labels.end(), l);
        if (it == t2.space.labels.end())
            throw InvalidInput("no 2-step path " + l);
        v.flip(std::size_t(it - t2.space.labels.begin()));
    }
    return v;
}

BitVec GraphCalculus::omega1_from_labels(const std::vector<std::string>& labels) const
{
    const auto& L = calc->omega1.labels;
    BitVec v(L.size());
    for (auto& l : labels) {
        auto it = std::find(L.begin(), L.end(), l);
        if (it == L.end())
            throw InvalidInput("no arrow " + l);
        v.flip(std::size_t(it - L.begin()));
    }
    return v;
}

GraphCalculus build_graph_calculus(const Graph& g)
{
    GraphCalculus gc;
    gc.graph = g;
    auto calc = std::make_shared<Calculus>();
    calc->A = function_algebra(g.vertices);
    const std::size_t n = g.size(), m = g.arrows.size();
    Bimodule& M = calc->omega1;
    M.dim = m;
    M.left.assign(n, std::vector<BitVec>(m, BitVec(m)));
    M.right = M.left;
    calc->d = LinMap(n, m);
    for (std::size_t k = 0; k < m; ++k) {
        auto [x, y] = g.arrows[k];
        M.labels.push_back(g.path_label({x, y}));
        M.left[x][k].set(k);
        M.right[y][k].set(k);
        calc->d.col(x).flip(k);
        calc->d.col(y).flip(k);
    }
    bool compact = std::all_of(g.vertices.begin(), g.vertices.end(), [](auto& s) { return s.size() == 1; });
    LabelJoin join = [compact](const std::string& a, const std::string& b) {
        return compact ? a + b.substr(1) : a + b.substr(b.find('-'));
    };
    gc.t2 = tensor_square_over_A(*calc, join);
    for (auto [i, j] : gc.t2.rep)
        gc.paths2.push_back({g.arrows[i].first, g.arrows[i].second, g.arrows[j].second});
    gc.theta = BitVec::ones(m);
    gc.calc = std::move(calc);
    return gc;
}

Level parse_level(const std::string& s)
{
    if (s == "max")
        return Level::max;
    if (s == "med")
        return Level::med;
    if (s == "min")
        return Level::min;
    throw InvalidInput("unknown level " + s + " (expected max, med or min)");
}

const char* level_name(Level l)
{
    switch (l) {
    case Level::max: return "max";
    case Level::med: return "med";
    default: return "min";
    }
}

std::vector<BitVec> relation_generators(const GraphCalculus& gc, Level level)
{
    std::map<std::pair<std::size_t, std::size_t>, BitVec> blocks;
    for (std::size_t k = 0; k < gc.paths2.size(); ++k) {
        auto [x, y, z] = gc.paths2[k];
        auto [it, fresh] = blocks.try_emplace({x, z}, BitVec(gc.t2.dim()));
        it->second.set(k);
    }
    std::vector<BitVec> gens;
    for (auto& [pq, v] : blocks) {
        auto [p, q] = pq;
        bool take = false;
        if (p != q)
            take = level != Level::max || !gc.graph.has_arrow(p, q);
        else
            take = level == Level::min;
        if (take)
            gens.push_back(v);
    }
    return gens;
}

SecondOrder graph_second_order(const GraphCalculus& gc, Level level)
{
    return build_second_order(*gc.calc, gc.t2, relation_generators(gc, level), D1Rule::inner(gc.theta));
}

/* ---- metrics ---- */

QuantumMetric euclidean_metric(const GraphCalculus& gc)
{
    if (!gc.graph.bidirected())
        throw InvalidInput("metric requires bidirected graph");
    QuantumMetric q;
    q.g = BitVec(gc.t2.dim());
    q.inverse = LinMap(gc.t2.dim(), gc.graph.size());
    for (std::size_t k = 0; k < gc.paths2.size(); ++k) {
        auto [x, y, z] = gc.paths2[k];
        if (x == z) {
            q.g.set(k);
            q.inverse.col(k).set(x);
        }
    }
    auto why = snake_violation(*gc.calc, gc.t2, q.g, q.inverse);
    if (!why.empty())
        throw std::logic_error("euclidean metric fails the snake identities: " + why);
    return q;
}

// (,)⊗id applied to ω⊗g, and id⊗(,) applied to g⊗ω, using the plain representative of g
static BitVec snake_left(const Calculus& calc, const TensorProduct& t2, const BitVec& g, const LinMap& inv,
                         std::size_t i)
{
    const auto& M = calc.omega1;
    BitVec r(M.dim);
    g.for_each([&](std::size_t k) {
        auto [a, b] = t2.rep[k];
        r ^= M.act_left(inv(t2.pure(i, a)), BitVec::unit(M.dim, b));
    });
    return r;
}

static BitVec snake_right(const Calculus& calc, const TensorProduct& t2, const BitVec& g, const LinMap& inv,
                          std::size_t i)
{
    const auto& M = calc.omega1;
    BitVec r(M.dim);
    g.for_each([&](std::size_t k) {
        auto [a, b] = t2.rep[k];
        r ^= M.act_right(BitVec::unit(M.dim, a), inv(t2.pure(b, i)));
    });
    return r;
}

std::string snake_violation(const Calculus& calc, const TensorProduct& t2, const BitVec& g, const LinMap& inverse)
{
    const auto& M = calc.omega1;
    for (std::size_t i = 0; i < M.dim; ++i) {
        BitVec w = BitVec::unit(M.dim, i);
        if (snake_left(calc, t2, g, inverse, i) != w)
            return "((,)⊗id)(ω⊗g) ≠ ω for ω = " + M.labels[i];
        if (snake_right(calc, t2, g, inverse, i) != w)
            return "(id⊗(,))(g⊗ω) ≠ ω for ω = " + M.labels[i];
    }
    return {};
}

InverseMetricResult solve_inverse_metric(const Calculus& calc, const TensorProduct& t2, const BitVec& g)
{
    auto H = bimodule_hom_basis(calc.A, t2.space, regular_bimodule(calc.A));
    const std::size_t m = calc.omega1.dim;
    BitMat sys(2 * m * m, H.size());
    BitVec rhs(2 * m * m);
    for (std::size_t c = 0; c < H.size(); ++c)
        for (std::size_t i = 0; i < m; ++i) {
            snake_left(calc, t2, g, H[c], i).for_each([&](std::size_t r) { sys.set(i * m + r, c); });
            snake_right(calc, t2, g, H[c], i).for_each([&](std::size_t r) { sys.set(m * m + i * m + r, c); });
        }
    for (std::size_t i = 0; i < m; ++i) {
        rhs.set(i * m + i);
        rhs.set(m * m + i * m + i);
    }
    auto sol = solve_linear(sys, rhs);
    InverseMetricResult res;
    if (sol.empty())
        return res;
    res.solution_dim = sol.dimension();
    LinMap inv(t2.dim(), calc.A.dim);
    sol.particular->for_each([&](std::size_t c) { inv += H[c]; });
    res.inverse = std::move(inv);
    return res;
}

bool quantum_symmetry_check(const SecondOrder& so, const BitVec& g)
{
    return so.wedge(g).none();
}

/* ---- Cayley quotients ---- */

CayleyData cayley_quotient(CayleyKind kind, std::size_t n)
{
    CayleyData cd;
    cd.kind = kind;
    if (kind == CayleyKind::cyclic) {
        if (n < 3)
            throw InvalidInput("Ω(Z_n) needs n >= 3");
        cd.n = n;
        cd.gc = build_graph_calculus(Graph::polygon(n));
        cd.form_names = {"e+", "e-"};
        cd.shift.assign(2, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i) {
            cd.shift[0][i] = (i + 1) % n;
            cd.shift[1][i] = (i + n - 1) % n;
        }
    } else {
        cd.n = 4;
        cd.gc = build_graph_calculus(Graph::polygon(4));
        cd.form_names = {"e1", "e2"};
        // group elements of the vertices 0..3
        const std::pair<int, int> grp[4] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
        auto vertex_of = [&](int a, int b) {
            for (std::size_t v = 0; v < 4; ++v)
                if (grp[v] == std::make_pair(a, b))
                    return v;
            return std::size_t(0);
        };
        cd.shift.assign(2, std::vector<std::size_t>(4));
        for (std::size_t v = 0; v < 4; ++v) {
            cd.shift[0][v] = vertex_of(grp[v].first ^ 1, grp[v].second);
            cd.shift[1][v] = vertex_of(grp[v].first, grp[v].second ^ 1);
        }
    }
    const auto& gc = cd.gc;
    for (auto& sh : cd.shift) {
        BitVec e(gc.calc->omega1.dim);
        for (std::size_t i = 0; i < sh.size(); ++i)
            e.set(std::size_t(gc.graph.arrow_index(i, sh[i])));
        cd.forms.push_back(e);
    }
    const auto& T = gc.t2;
    auto tt = [&](int a, int b) { return T.tensor(cd.forms[a], cd.forms[b]); };
    std::vector<BitVec> gens = {tt(0, 0), tt(1, 1), tt(0, 1) + tt(1, 0)};
    cd.so = std::make_shared<SecondOrder>(
        build_second_order(*gc.calc, gc.t2, gens, D1Rule::inner(gc.theta)));
    cd.vol_rep = tt(0, 1);
    cd.vol = cd.so->wedge(cd.vol_rep);
    return cd;
}

} // namespace f2geom
