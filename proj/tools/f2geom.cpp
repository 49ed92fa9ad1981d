#include "f2geom/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace f2geom;

namespace {

enum Exit { ok = 0, claims_failed = 1, cap_exceeded = 2, invalid_input = 3 };

struct SearchOpts {
    std::string input, omega, constraints, strategy = "reduced", format = "table", out;
    bool qlc = false, wqlc = false, torsion_free = false, cotorsion_free = false, metric_compatible = false;
    bool sigma_invertible = false, constant_only = false;
    std::uint64_t enum_cap = kDefaultEnumCap;
};

void add_search_flags(CLI::App* c, SearchOpts& o)
{
    c->add_option("input", o.input, "built-in model name, graph file or algebra file")->required();
    c->add_option("--omega", o.omega, "max, med, min, cayley, cayley-klein or g0/g1/g2 (default: the model's first)");
    c->add_option("--constraints", o.constraints, "comma list of torsion-free, cotorsion-free, metric-compatible, qlc, wqlc");
    c->add_flag("--qlc", o.qlc, "torsion-free and metric-compatible");
    c->add_flag("--wqlc", o.wqlc, "torsion-free and cotorsion-free");
    c->add_flag("--torsion-free", o.torsion_free);
    c->add_flag("--cotorsion-free", o.cotorsion_free);
    c->add_flag("--metric-compatible", o.metric_compatible);
    c->add_flag("--sigma-invertible", o.sigma_invertible, "keep only connections with invertible σ");
    c->add_option("--strategy", o.strategy, "brute, reduced or invariant")->check(CLI::IsMember({"brute", "reduced", "invariant"}));
    c->add_option("--enum-cap", o.enum_cap, "largest number of candidates enumerated");
    c->add_flag("--constant-only", o.constant_only, "invariant strategy: constant coefficients only");
    c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    c->add_option("-o,--out", o.out, "write the report to a file");
}

Constraints constraints_of(const SearchOpts& o)
{
    Constraints c = o.constraints.empty() ? Constraints{} : Constraints::parse(o.constraints);
    c.torsion_free = c.torsion_free || o.qlc || o.wqlc || o.torsion_free;
    c.cotorsion_free = c.cotorsion_free || o.wqlc || o.cotorsion_free;
    c.metric_compatible = c.metric_compatible || o.qlc || o.metric_compatible;
    return c;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw InvalidInput("cannot write " + out);
    f << text;
}

Search search(const SearchOpts& o)
{
    SearchRequest req;
    req.input = o.input;
    req.omega = o.omega;
    req.constraints = constraints_of(o);
    req.strategy = parse_strategy(o.strategy);
    req.sigma_invertible = o.sigma_invertible;
    req.constant_only = o.constant_only;
    req.enum_cap = o.enum_cap;
    return run_search(req);
}

// display width: code points, not bytes
std::size_t display_width(const std::string& s)
{
    std::size_t n = 0;
    for (unsigned char ch : s)
        n += (ch & 0xC0) != 0x80;
    return n;
}

std::string pad(const std::string& s, std::size_t w)
{
    std::size_t n = display_width(s);
    return s + std::string(w > n ? w - n : 0, ' ');
}

std::size_t width(const std::vector<std::string>& xs)
{
    std::size_t w = 0;
    for (auto& x : xs)
        w = std::max(w, display_width(x));
    return w;
}

void table_map(std::ostream& os, const std::string& head, const std::vector<std::string>& src,
               const std::vector<std::string>& dst, const LinMap& f)
{
    std::size_t w = width(src);
    for (std::size_t i = 0; i < src.size(); ++i)
        os << "    " << head << "(" << pad(src[i], w) << ") = " << element_text(dst, f.col(i)) << "\n";
}

std::string moduli_table(const Search& s)
{
    const Geometry& geo = s.mg().geo;
    RunInfo info = s.info();
    std::ostringstream os;
    const auto& st = s.moduli.stats;
    os << info.model << " / " << info.omega << "  constraints:";
    for (auto& n : info.constraints.names())
        os << " " << n;
    if (info.sigma_invertible)
        os << " sigma-invertible";
    os << "\n" << s.moduli.connections.size() << " connections  (strategy " << st.strategy << ", " << st.parameter_dim
       << " parameters, " << st.linear_dim << " after linear constraints, " << st.candidates << " candidates, "
       << std::fixed << std::setprecision(3) << st.seconds << " s)\n";
    const auto& m1 = geo.calc->omega1.labels;
    const auto& m2 = geo.t2().space.labels;
    for (std::size_t k = 0; k < s.moduli.connections.size(); ++k) {
        auto& c = s.moduli.connections[k];
        os << "\n[" << k << "] params " << c.params.str() << "  flat=" << c.flat << " torsion_free=" << c.torsion_free
           << " cotorsion_free=" << c.cotorsion_free << " metric_compatible=" << c.metric_compatible;
        if (c.constant_coefficients)
            os << " constant=" << *c.constant_coefficients;
        os << "\n";
        table_map(os, "∇", m1, m2, c.conn.nabla);
        std::vector<std::string> src;
        for (std::size_t i = 0; i < m2.size(); ++i)
            if (c.conn.sigma.col(i) != BitVec::unit(m2.size(), i))
                src.push_back(m2[i]);
        os << "    σ = id except:\n";
        std::size_t w = width(src);
        for (std::size_t i = 0; i < m2.size(); ++i)
            if (c.conn.sigma.col(i) != BitVec::unit(m2.size(), i))
                os << "      σ(" << pad(m2[i], w) << ") = " << element_text(m2, c.conn.sigma.col(i)) << "\n";
    }
    return os.str();
}

int cmd_classify(const SearchOpts& o)
{
    auto s = search(o);
    if (o.format == "json")
        emit(moduli_to_json(s.mg().geo, s.moduli, s.info()).dump(2) + "\n", o.out);
    else
        emit(moduli_table(s), o.out);
    return ok;
}

std::optional<std::size_t> index_option(const std::string& sel, const std::string& what)
{
    if (sel == "all")
        return std::nullopt;
    try {
        std::size_t used = 0;
        auto k = std::stoul(sel, &used);
        if (used == sel.size())
            return k;
    } catch (const std::exception&) {
    }
    throw InvalidInput(what + ": expected \"all\" or an index, got " + sel);
}

int cmd_curvature(const SearchOpts& o, const std::string& conn_sel, const std::string& lift_sel)
{
    auto s = search(o);
    const Geometry& geo = s.mg().geo;
    auto ci = index_option(conn_sel, "--connection");
    auto li = index_option(lift_sel, "--lift");
    auto rep = curvature_report(s, ci, li, o.enum_cap);
    if (o.format == "json") {
        emit(curvature_to_json(s, rep).dump(2) + "\n", o.out);
        return ok;
    }
    const auto& m1 = geo.calc->omega1.labels;
    const auto& m2 = geo.t2().space.labels;
    std::ostringstream os;
    os << s.in.model.name << " / " << s.mg().label << ": " << s.moduli.connections.size() << " connections, "
       << rep.lift_count << " lifts\n";
    for (auto& d : rep.connections) {
        os << "\n[" << d.index << "] params " << s.moduli.connections[d.index].params.str()
           << (d.R.is_zero() ? "  flat\n" : "\n");
        table_map(os, "R", m1, geo.w.space.labels, d.R);
        for (auto& l : d.lifts)
            os << "    lift " << l.lift << ": Ricci = " << element_text(m2, l.ricci)
               << ", S = " << geo.calc->A.format(l.scalar) << ", Eins = " << element_text(m2, l.eins)
               << (l.conserved ? ", conserved" : "") << "\n";
    }
    emit(os.str(), o.out);
    return ok;
}

std::string report_table(const Report& r)
{
    std::ostringstream os;
    os << "== " << r.subject << "  (" << r.claims.size() - r.failed() << "/" << r.claims.size() << " pass, "
       << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    for (auto& c : r.claims) {
        os << (c.pass ? "  ok   " : "  FAIL ") << (c.consistency ? "[c] " : "") << c.name;
        if (!c.detail.empty())
            os << "  -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

int emit_reports(const std::vector<Report>& reps, const std::string& format, const std::string& out)
{
    bool all_ok = true;
    std::string text;
    Json arr = Json::array();
    for (auto& r : reps) {
        all_ok = all_ok && r.ok();
        text += report_table(r);
        arr.push_back(report_to_json(r));
    }
    emit(format == "json" ? arr.dump(2) + "\n" : text, out);
    return all_ok ? ok : claims_failed;
}

int cmd_demorgan(const std::string& input, const std::string& omega, const std::string& format, const std::string& out)
{
    Input in = load_input(input);
    if (in.algebra)
        return emit_reports({algebra_duality_report(*in.algebra, in.model.name)}, format, out);
    return emit_reports({demorgan_report(in.model, omega)}, format, out);
}

int cmd_verify(const std::vector<std::string>& targets, const std::string& format, const std::string& out)
{
    std::vector<Report> reps;
    for (auto& n : verify_targets(targets))
        reps.push_back(verify_target(n));
    return emit_reports(reps, format, out);
}

int cmd_models(const std::string& format)
{
    Json arr = Json::array();
    std::ostringstream os;
    for (auto& name : model_names()) {
        Model m = build_model(name);
        std::vector<std::string> labels;
        for (auto& g : m.geometries)
            labels.push_back(g.label);
        arr.push_back({{"name", name}, {"title", m.title}, {"geometries", labels}});
        os << pad(name, 12) << pad(m.title, 36);
        for (auto& l : labels)
            os << " " << l;
        os << "\n";
    }
    std::cout << (format == "json" ? arr.dump(2) + "\n" : os.str());
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Riemannian geometry over F2: calculi on graphs and algebras, connection moduli, curvature, "
                 "de Morgan duality.\nExit codes: 0 ok, 1 a verified claim failed, 2 enumeration cap exceeded, "
                 "3 invalid input."};
    app.require_subcommand(1);

    std::string fmt = "table";
    auto* models = app.add_subcommand("models", "list the built-in models");
    models->add_option("--format", fmt)->check(CLI::IsMember({"json", "table"}));

    SearchOpts cls;
    auto* classify_cmd = app.add_subcommand("classify", "classify bimodule connections under constraints");
    add_search_flags(classify_cmd, cls);

    SearchOpts cur;
    std::string conn_sel = "all", lift_sel = "all";
    auto* curvature_cmd = app.add_subcommand("curvature", "curvature, Ricci and Einstein data of classified connections");
    add_search_flags(curvature_cmd, cur);
    curvature_cmd->add_option("--connection", conn_sel, "all or an index into the classified list");
    curvature_cmd->add_option("--lift", lift_sel, "all or an index into the enumerated lifts");

    std::string dm_input, dm_omega, dm_out;
    auto* dm = app.add_subcommand("demorgan", "de Morgan duality checks for a model, graph or algebra");
    dm->add_option("input", dm_input)->required();
    dm->add_option("--omega", dm_omega);
    dm->add_option("--format", fmt)->check(CLI::IsMember({"json", "table"}));
    dm->add_option("-o,--out", dm_out);

    std::vector<std::string> targets;
    std::string vf_out;
    auto* vf = app.add_subcommand("verify", "check the stated results for built-in models (or all)");
    vf->add_option("targets", targets, "model names, boolean-view, de-morgan, generalized-duality or all")->required();
    vf->add_option("--format", fmt)->check(CLI::IsMember({"json", "table"}));
    vf->add_option("-o,--out", vf_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : invalid_input;
    }

    try {
        if (*models)
            return cmd_models(fmt);
        if (*classify_cmd)
            return cmd_classify(cls);
        if (*curvature_cmd)
            return cmd_curvature(cur, conn_sel, lift_sel);
        if (*dm)
            return cmd_demorgan(dm_input, dm_omega, fmt, dm_out);
        if (*vf)
            return cmd_verify(targets, fmt, vf_out);
    } catch (const SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cap_exceeded;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    }
    return ok;
}
