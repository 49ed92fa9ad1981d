#include "f2geom/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

namespace f2geom {

namespace {

template <class T>
T field(const Json& j, const char* key, const std::string& what)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(what + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(what + ": bad \"" + key + "\": " + e.what());
    }
}

std::map<std::string, std::size_t> label_index(const std::vector<std::string>& labels)
{
    std::map<std::string, std::size_t> ix;
    for (std::size_t i = 0; i < labels.size(); ++i)
        ix.emplace(labels[i], i);
    return ix;
}

} // namespace

Graph graph_from_json(const Json& j)
{
    auto vertices = field<std::vector<std::string>>(j, "vertices", "graph");
    auto arrows = field<std::vector<std::pair<std::string, std::string>>>(j, "arrows", "graph");
    bool bidirect = j.value("bidirect", false);
    return Graph::from_labels(std::move(vertices), arrows, bidirect);
}

Json graph_to_json(const Graph& g)
{
    Json arrows = Json::array();
    for (auto [x, y] : g.arrows)
        arrows.push_back({g.vertices[x], g.vertices[y]});
    return {{"vertices", g.vertices}, {"arrows", arrows}};
}

Algebra algebra_from_json(const Json& j)
{
    auto basis = field<std::vector<std::string>>(j, "basis", "algebra");
    auto triples = field<std::vector<std::array<std::size_t, 3>>>(j, "product", "algebra");
    auto unit = field<std::vector<int>>(j, "unit", "algebra");
    if (unit.size() != basis.size())
        throw InvalidInput("algebra: unit has " + std::to_string(unit.size()) + " coefficients for " +
                           std::to_string(basis.size()) + " basis elements");
    BitVec u(basis.size());
    for (std::size_t i = 0; i < unit.size(); ++i)
        u.set(i, unit[i] & 1);
    auto A = algebra_from_triples(std::move(basis), triples, u);
    if (auto diag = check_algebra(A); !diag.ok())
        throw InvalidInput("algebra: " + diag.failures.front());
    return A;
}

Json algebra_to_json(const Algebra& A)
{
    Json product = Json::array();
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t k = 0; k < A.dim; ++k)
            A.prod(i, k).for_each([&](std::size_t r) { product.push_back({i, k, r}); });
    std::vector<int> unit(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i)
        unit[i] = A.unit[i];
    return {{"basis", A.labels}, {"product", product}, {"unit", unit}};
}

Json element_to_json(const std::vector<std::string>& labels, const BitVec& v)
{
    Json out = Json::array();
    v.for_each([&](std::size_t i) { out.push_back(labels[i]); });
    return out;
}

BitVec element_from_json(const std::vector<std::string>& labels, const Json& j)
{
    auto ix = label_index(labels);
    BitVec v(labels.size());
    if (!j.is_array())
        throw InvalidInput("element must be a list of basis labels");
    for (auto& s : j) {
        auto it = s.is_string() ? ix.find(s.get<std::string>()) : ix.end();
        if (it == ix.end())
            throw InvalidInput("unknown basis label " + s.dump());
        v.flip(it->second);
    }
    return v;
}

std::string element_text(const std::vector<std::string>& labels, const BitVec& v)
{
    std::vector<std::string> parts;
    v.for_each([&](std::size_t i) { parts.push_back(labels[i]); });
    if (parts.empty())
        return "0";
    std::sort(parts.begin(), parts.end());
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        s += "+" + parts[i];
    return s;
}

Input load_input(const std::string& spec)
{
    Input in;
    in.source = spec;
    auto names = model_names();
    bool builtin = std::find(names.begin(), names.end(), spec) != names.end() ||
                   (spec.rfind("ngon-", 0) == 0 && !std::filesystem::exists(spec));
    if (builtin) {
        in.model = build_model(spec);
        return in;
    }
    std::ifstream f(spec);
    if (!f)
        throw InvalidInput("cannot open " + spec + " (and it is not a built-in model)");
    Json j;
    try {
        j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(spec + ": " + e.what());
    }
    in.model.name = std::filesystem::path(spec).stem().string();
    if (j.contains("basis")) {
        in.algebra = algebra_from_json(j);
        in.model.title = "algebra of dimension " + std::to_string(in.algebra->dim);
        return in;
    }
    Graph g = graph_from_json(j);
    in.model.title = "graph with " + std::to_string(g.size()) + " vertices";
    in.model.graph = build_graph_calculus(g);
    for (Level l : {Level::max, Level::med, Level::min})
        in.model.geometries.push_back({level_name(l), graph_geometry(*in.model.graph, l)});
    if (std::size_t n = polygon_order(g)) {
        auto add = [&](CayleyKind kind, const std::string& label) {
            auto cd = cayley_quotient(kind, n);
            if (cd.gc.graph.vertices != g.vertices)
                return;
            if (!in.model.cayley)
                in.model.cayley = cd;
            in.model.geometries.push_back({label, cayley_geometry(cd)});
        };
        add(CayleyKind::cyclic, "cayley");
        if (n == 4)
            add(CayleyKind::klein, "cayley-klein");
    }
    return in;
}

const ModelGeometry& select_geometry(const Input& in, const std::string& omega)
{
    if (in.model.geometries.empty())
        throw InvalidInput(in.source + " is an algebra; it carries no Ω² or metric (try the demorgan command)");
    if (omega.empty())
        return in.model.primary();
    return in.model.geometry(omega);
}

ConnectionTables tables_of(const Geometry&, const ClassifiedConnection& c)
{
    return {c.params.str(), c.conn.nabla, c.conn.sigma, c.flat, c.torsion_free, c.cotorsion_free, c.metric_compatible};
}

Json moduli_to_json(const Geometry& geo, const ConnectionModuli& mod, const RunInfo& info)
{
    const auto& m1 = geo.calc->omega1.labels;
    const auto& m2 = geo.t2().space.labels;
    Json conns = Json::array();
    for (auto& c : mod.connections) {
        Json nabla = Json::object(), sigma = Json::object();
        for (std::size_t i = 0; i < m1.size(); ++i)
            nabla[m1[i]] = element_to_json(m2, c.conn.nabla.col(i));
        for (std::size_t i = 0; i < m2.size(); ++i)
            sigma[m2[i]] = element_to_json(m2, c.conn.sigma.col(i));
        Json jc = {{"params", c.params.str()},
                   {"nabla_table", nabla},
                   {"sigma_table", sigma},
                   {"flat", c.flat},
                   {"torsion_free", c.torsion_free},
                   {"cotorsion_free", c.cotorsion_free},
                   {"metric_compatible", c.metric_compatible}};
        if (c.constant_coefficients)
            jc["constant_coefficients"] = *c.constant_coefficients;
        conns.push_back(jc);
    }
    const auto& s = mod.stats;
    return {{"model", info.model},
            {"omega", info.omega},
            {"constraints", info.constraints.names()},
            {"sigma_invertible", info.sigma_invertible},
            {"count", mod.connections.size()},
            {"connections", conns},
            {"stats",
             {{"strategy", s.strategy},
              {"parameter_dim", s.parameter_dim},
              {"linear_dim", s.linear_dim},
              {"guessed", s.guessed},
              {"candidates", s.candidates},
              {"before_filter", s.before_filter},
              {"seconds", s.seconds}}}};
}

std::vector<ConnectionTables> tables_from_json(const Geometry& geo, const Json& report)
{
    const auto& m1 = geo.calc->omega1.labels;
    const auto& m2 = geo.t2().space.labels;
    std::vector<ConnectionTables> out;
    for (auto& jc : field<Json>(report, "connections", "report")) {
        ConnectionTables t;
        t.params = field<std::string>(jc, "params", "connection");
        t.nabla = LinMap(m1.size(), m2.size());
        t.sigma = LinMap(m2.size(), m2.size());
        auto nabla = field<Json>(jc, "nabla_table", "connection");
        auto sigma = field<Json>(jc, "sigma_table", "connection");
        for (std::size_t i = 0; i < m1.size(); ++i)
            t.nabla.col(i) = element_from_json(m2, field<Json>(nabla, m1[i].c_str(), "nabla_table"));
        for (std::size_t i = 0; i < m2.size(); ++i)
            t.sigma.col(i) = element_from_json(m2, field<Json>(sigma, m2[i].c_str(), "sigma_table"));
        t.flat = field<bool>(jc, "flat", "connection");
        t.torsion_free = field<bool>(jc, "torsion_free", "connection");
        t.cotorsion_free = field<bool>(jc, "cotorsion_free", "connection");
        t.metric_compatible = field<bool>(jc, "metric_compatible", "connection");
        out.push_back(std::move(t));
    }
    return out;
}

Json report_to_json(const Report& r)
{
    Json claims = Json::array();
    for (auto& c : r.claims)
        claims.push_back({{"claim", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"consistency", c.consistency}});
    return {{"subject", r.subject}, {"ok", r.ok()}, {"failed", r.failed()}, {"seconds", r.seconds}, {"claims", claims}};
}

std::vector<std::string> verify_targets(const std::vector<std::string>& requested)
{
    std::vector<std::string> out;
    for (auto& t : requested) {
        if (t == "all") {
            auto names = model_names();
            out.insert(out.end(), names.begin(), names.end());
            out.insert(out.end(), {"boolean-view", "de-morgan", "generalized-duality"});
        } else {
            out.push_back(t);
        }
    }
    return out;
}

Report verify_target(const std::string& name)
{
    if (name == "boolean-view")
        return verify_boolean_view();
    if (name == "de-morgan")
        return verify_de_morgan();
    if (name == "generalized-duality")
        return verify_generalized_duality();
    return verify_model(name);
}

Search run_search(const SearchRequest& req)
{
    Search s;
    s.in = load_input(req.input);
    const auto& chosen = select_geometry(s.in, req.omega);
    s.geometry = std::size_t(&chosen - s.in.model.geometries.data());
    s.constraints = req.constraints;
    s.sigma_invertible = req.sigma_invertible;
    const Geometry& geo = chosen.geo;
    if (!geo.metric && (req.constraints.metric_compatible || req.constraints.cotorsion_free))
        throw InvalidInput(std::string(req.constraints.metric_compatible ? "metric-compatible" : "cotorsion-free") +
                           ": " + s.in.model.name + " has no quantum metric (the graph is not bidirected)");
    if (req.strategy == Strategy::invariant && !geo.frame)
        throw InvalidInput("invariant strategy: geometry " + chosen.label +
                           " has no invariant frame (use --omega cayley)");
    SearchConfig cfg;
    cfg.constraints = req.constraints;
    cfg.sigma_invertible = req.sigma_invertible;
    cfg.strategy = req.strategy;
    cfg.enum_cap = req.enum_cap;
    cfg.constant_only = req.constant_only;
    s.moduli = classify(geo, cfg);
    return s;
}

CurvatureReport curvature_report(const Search& s, std::optional<std::size_t> connection,
                                 std::optional<std::size_t> lift, std::uint64_t enum_cap)
{
    const Geometry& geo = s.mg().geo;
    std::vector<LinMap> lifts;
    if (geo.metric)
        lifts = enumerate_lifts(geo, enum_cap);
    auto check = [](std::optional<std::size_t> k, std::size_t n, const char* what) {
        if (k && *k >= n)
            throw InvalidInput(std::string(what) + ": index " + std::to_string(*k) + " out of range (" +
                               std::to_string(n) + " available)");
    };
    check(connection, s.moduli.connections.size(), "connection");
    check(lift, lifts.size(), "lift");

    CurvatureReport out;
    out.lift_count = lifts.size();
    for (std::size_t k = 0; k < s.moduli.connections.size(); ++k) {
        if (connection && *connection != k)
            continue;
        const auto& c = s.moduli.connections[k].conn;
        CurvatureData d{k, curvature(geo, c), {}};
        for (std::size_t l = 0; l < lifts.size(); ++l) {
            if (lift && *lift != l)
                continue;
            auto ric = ricci(geo, c, lifts[l]);
            auto ein = einstein(geo, c, lifts[l], s.in.model.einstein_form);
            d.lifts.push_back({l, ric.ricci, ric.scalar, ein.eins, ein.conserved()});
        }
        out.connections.push_back(std::move(d));
    }
    return out;
}

Json curvature_to_json(const Search& s, const CurvatureReport& r)
{
    const Geometry& geo = s.mg().geo;
    const auto& m1 = geo.calc->omega1.labels;
    const auto& m2 = geo.t2().space.labels;
    const auto& mw = geo.w.space.labels;
    const auto& A = geo.calc->A;
    Json out = {{"model", s.in.model.name},
                {"omega", s.mg().label},
                {"constraints", s.constraints.names()},
                {"lifts", r.lift_count},
                {"einstein", s.in.model.einstein_form == EinsteinForm::plus_metric ? "Ricci+g" : "Ricci+S·g"}};
    Json conns = Json::array();
    for (auto& d : r.connections) {
        Json jr = Json::object();
        for (std::size_t i = 0; i < m1.size(); ++i)
            jr[m1[i]] = element_to_json(mw, d.R.col(i));
        Json jl = Json::array();
        for (auto& l : d.lifts)
            jl.push_back({{"lift", l.lift},
                          {"ricci", element_to_json(m2, l.ricci)},
                          {"scalar", element_to_json(A.labels, l.scalar)},
                          {"eins", element_to_json(m2, l.eins)},
                          {"conserved", l.conserved}});
        conns.push_back({{"index", d.index},
                         {"params", s.moduli.connections[d.index].params.str()},
                         {"flat", d.R.is_zero()},
                         {"curvature", jr},
                         {"lifts", jl}});
    }
    out["connections"] = conns;
    return out;
}

} // namespace f2geom
