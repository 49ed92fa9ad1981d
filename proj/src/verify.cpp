#include "f2geom/models.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace f2geom {

bool Report::ok() const
{
    return failed() == 0;
}

std::size_t Report::failed() const
{
    std::size_t n = 0;
    for (auto& c : claims)
        n += !c.pass;
    return n;
}

void Report::add(std::string name, bool pass, std::string detail, bool consistency)
{
    claims.push_back({std::move(name), pass, std::move(detail), consistency});
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// counts checks, remembers the first failure
struct Tally {
    std::size_t checked = 0, failed = 0;
    std::string first;

    template <class F>
    void operator()(bool ok, F&& what)
    {
        ++checked;
        if (!ok && failed++ == 0)
            first = what();
    }
    void operator()(bool ok, const char* what)
    {
        (*this)(ok, [&] { return std::string(what); });
    }
    bool ok() const { return failed == 0 && checked > 0; }
    std::string detail() const
    {
        if (failed)
            return std::to_string(failed) + " of " + std::to_string(checked) + " failed, first: " + first;
        return std::to_string(checked) + " checks";
    }
};

std::string count_detail(std::size_t found, std::size_t expected)
{
    return "found " + std::to_string(found) + ", expected " + std::to_string(expected);
}

BitVec conn_key(const Connection& c)
{
    return c.nabla.flatten().concat(c.sigma.flatten());
}

std::set<BitVec> conn_keys(const ConnectionModuli& r)
{
    std::set<BitVec> s;
    for (auto& c : r.connections)
        s.insert(conn_key(c.conn));
    return s;
}

ConnectionModuli run(const Geometry& geo, Constraints cons, Strategy st = Strategy::reduced, bool sigma_inv = false,
                     bool constant_only = false)
{
    SearchConfig cfg;
    cfg.constraints = cons;
    cfg.strategy = st;
    cfg.sigma_invertible = sigma_inv;
    cfg.constant_only = constant_only;
    return classify(geo, cfg);
}

Constraints only_metric()
{
    Constraints c;
    c.metric_compatible = true;
    return c;
}

Constraints only_cotorsion()
{
    Constraints c;
    c.cotorsion_free = true;
    return c;
}

long find_lift(const std::vector<LinMap>& lifts, const BitVec& vol, const BitVec& image)
{
    for (std::size_t i = 0; i < lifts.size(); ++i)
        if (lifts[i](vol) == image)
            return long(i);
    return -1;
}

// Connections written in a left frame e^a with coefficient functions.
class FrameKit {
public:
    FrameKit(const Geometry& geo, BitVec vol) : geo_(geo), fr_(*geo.frame), vol_(std::move(vol)) {}

    const Algebra& A() const { return geo_.calc->A; }
    BitVec k(bool b) const { return b ? A().one() : A().zero(); }
    BitVec e(std::size_t a) const { return fr_.forms[a]; }
    BitVec e(const BitVec& f, std::size_t a) const { return geo_.calc->omega1.act_left(f, fr_.forms[a]); }
    BitVec ee(std::size_t a, std::size_t b) const { return fr_.pairs[a * fr_.rank() + b]; }
    BitVec ee(const BitVec& f, std::size_t a, std::size_t b) const
    {
        return geo_.t2().space.act_left(f, ee(a, b));
    }
    BitVec mixed(const BitVec& f) const { return ee(f, 0, 1) + ee(f, 1, 0); } // f(e^1⊗e^2 + e^2⊗e^1)
    BitVec all_pairs(const BitVec& f) const
    {
        BitVec s(geo_.t2().dim());
        for (std::size_t a = 0; a < fr_.rank(); ++a)
            for (std::size_t b = 0; b < fr_.rank(); ++b)
                s += ee(f, a, b);
        return s;
    }
    const BitVec& vol() const { return vol_; }
    // (f Vol) ⊗ w in Ω²⊗Ω¹
    BitVec vol_tensor(const BitVec& f, const BitVec& w) const
    {
        return geo_.w.tensor(geo_.so->omega2.act_left(f, vol_), w);
    }

    // ∇(f_a e^a) = d f_a ⊗ e^a + f_a ∇e^a and σ(f_ab e^a⊗e^b) = f_ab σ(e^a⊗e^b)
    Connection connection(const std::vector<BitVec>& nabla_e, const std::vector<BitVec>& sigma_ee) const
    {
        const auto& T = geo_.t2();
        std::size_t m = geo_.m(), t = T.dim(), r = fr_.rank();
        Connection c{LinMap(m, t), LinMap(t, t), std::nullopt};
        for (std::size_t i = 0; i < m; ++i) {
            auto co = *fr_.coords1(BitVec::unit(m, i));
            BitVec v(t);
            for (std::size_t a = 0; a < r; ++a)
                v += T.tensor(geo_.calc->d(co[a]), e(a)) + T.space.act_left(co[a], nabla_e[a]);
            c.nabla.col(i) = v;
        }
        for (std::size_t j = 0; j < t; ++j) {
            auto co = *fr_.coords2(BitVec::unit(t, j));
            BitVec v(t);
            for (std::size_t p = 0; p < r * r; ++p)
                v += T.space.act_left(co[p], sigma_ee[p]);
            c.sigma.col(j) = v;
        }
        return c;
    }

    bool is_wqlc(const Connection& c) const
    {
        return leibniz_violation(geo_, c).empty() && torsion(geo_, c).is_zero() && cotorsion(geo_, c).none();
    }

private:
    const Geometry& geo_;
    const Frame& fr_;
    BitVec vol_;
};

// R_a f: f read at the vertex reached along e^a
BitVec shifted(const CayleyData& cd, std::size_t a, const BitVec& f)
{
    BitVec r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r.set(i, f[cd.shift[a][i]]);
    return r;
}

BitVec partial(const CayleyData& cd, std::size_t a, const BitVec& f)
{
    return shifted(cd, a, f) + f;
}

// linear map on arrows (resp. 2-steps) given by labelled images
LinMap arrow_map(const GraphCalculus& gc, const std::map<std::string, std::vector<std::string>>& images)
{
    const auto& L = gc.calc->omega1.labels;
    LinMap f(L.size(), gc.t2.dim());
    for (std::size_t i = 0; i < L.size(); ++i)
        if (auto it = images.find(L[i]); it != images.end())
            f.col(i) = gc.t2_from_labels(it->second);
    return f;
}

LinMap path_map(const GraphCalculus& gc, const std::map<std::string, std::vector<std::string>>& images)
{
    const auto& L = gc.t2.space.labels;
    LinMap f(L.size(), gc.t2.dim());
    for (std::size_t i = 0; i < L.size(); ++i)
        if (auto it = images.find(L[i]); it != images.end())
            f.col(i) = gc.t2_from_labels(it->second);
    return f;
}

// [p] ⊗ arrow in Ω²⊗Ω¹
BitVec class_tensor(const Geometry& geo, const GraphCalculus& gc, const std::string& path, const std::string& arrow)
{
    return geo.w.tensor(geo.so->wedge(gc.t2_from_labels({path})), gc.omega1_from_labels({arrow}));
}

/* ---- models ---- */

void check_2pt(Report& rep, const Model& m)
{
    const auto& geo = m.geometry("max").geo;
    auto r = run(geo, only_metric());
    rep.add("exactly one metric-compatible bimodule connection", r.connections.size() == 1,
            count_detail(r.connections.size(), 1));
    if (r.connections.size() != 1)
        return;
    const auto& c = r.connections[0].conn;
    rep.add("its σ is the identity", c.sigma.is_identity());
    rep.add("it is torsion-free", torsion(geo, c).is_zero());
    rep.add("it is flat", curvature(geo, c).is_zero());
}

void check_line(Report& rep, const Model& m)
{
    const auto& gc = *m.graph;
    const auto& gmax = m.geometry("max").geo;
    const auto& gmin = m.geometry("min").geo;

    auto mc = run(gmax, only_metric());
    rep.add("no metric-compatible bimodule connection", mc.connections.empty(), count_detail(mc.connections.size(), 0));

    auto wmax = run(gmax, Constraints::wqlc());
    rep.add("Ω_max: exactly one WQLC", wmax.connections.size() == 1, count_detail(wmax.connections.size(), 1));
    auto wmin = run(gmin, Constraints::wqlc());
    rep.add("Ω_min: exactly four WQLCs", wmin.connections.size() == 4, count_detail(wmin.connections.size(), 4));
    auto cinv = run(gmin, only_cotorsion(), Strategy::reduced, true);
    rep.add("Ω_min: exactly four cotorsion-free connections with σ invertible", cinv.connections.size() == 4,
            count_detail(cinv.connections.size(), 4));

    // the stated family, α and δ in {0, 1}; Ω_max is α = δ = 1
    auto family = [&](bool al, bool de) {
        Connection c;
        c.nabla = arrow_map(gc, {{"01", {"101", "010"}},
                                 {"10", {"010", "210", al ? "101" : "121"}},
                                 {"21", {"121", "212"}},
                                 {"12", {"212", "012", de ? "121" : "101"}}});
        c.sigma = path_map(gc, {{"010", {"010"}},
                                {"212", {"212"}},
                                {"101", {al ? "101" : "121"}},
                                {"121", {de ? "121" : "101"}}});
        return c;
    };

    if (wmax.connections.size() == 1) {
        const auto& c = wmax.connections[0].conn;
        auto expect = family(true, true);
        rep.add("Ω_max WQLC: ∇ as stated", c.nabla == expect.nabla);
        rep.add("Ω_max WQLC: σ as stated", c.sigma == expect.sigma);
        auto R = curvature(gmax, c);
        auto at = [&](const char* a) { return R(gc.omega1_from_labels({a})); };
        rep.add("Ω_max WQLC: R(01) = R(21) = 0", at("01").none() && at("21").none());
        rep.add("Ω_max WQLC: R(10) = [121]⊗10, R(12) = [101]⊗12",
                at("10") == class_tensor(gmax, gc, "121", "10") && at("12") == class_tensor(gmax, gc, "101", "12"));
        auto lifts = enumerate_lifts(gmax);
        bool flat_ricci = !lifts.empty();
        for (auto& L : lifts)
            flat_ricci = flat_ricci && ricci(gmax, c, L).ricci.none();
        rep.add("Ω_max WQLC: Ricci = 0", flat_ricci, std::to_string(lifts.size()) + " lift(s)");
    }

    // Ω_min
    auto min_keys = conn_keys(wmin);
    auto lifts = enumerate_lifts(gmin);
    BitVec v101 = gmin.so->wedge(gc.t2_from_labels({"101"}));
    long i1 = find_lift(lifts, v101, gc.t2_from_labels({"101"}));
    long i2 = find_lift(lifts, v101, gc.t2_from_labels({"121"}));
    rep.add("Ω_min: two lifts, i1[101] = 101 and i2[101] = 121", lifts.size() == 2 && i1 >= 0 && i2 >= 0,
            std::to_string(lifts.size()) + " lift(s)");
    Tally member, curv, ric1, ric2, scal;
    for (bool al : {false, true})
        for (bool de : {false, true}) {
            auto c = family(al, de);
            std::string tag = std::string("α=") + (al ? "1" : "0") + " δ=" + (de ? "1" : "0");
            member(min_keys.count(conn_key(c)) > 0, [&] { return tag; });
            auto R = curvature(gmin, c);
            auto at = [&](const char* a) { return R(gc.omega1_from_labels({a})); };
            curv(at("01").none() && at("21").none() &&
                     at("10") == class_tensor(gmin, gc, "101", al ? "10" : "12") &&
                     at("12") == class_tensor(gmin, gc, "101", de ? "12" : "10"),
                 [&] { return tag; });
            if (i1 < 0 || i2 < 0)
                continue;
            auto r1 = ricci(gmin, c, lifts[std::size_t(i1)]);
            auto r2 = ricci(gmin, c, lifts[std::size_t(i2)]);
            ric1(r1.ricci == gc.t2_from_labels({al ? "010" : "012"}), [&] { return tag; });
            ric2(r2.ricci == gc.t2_from_labels({de ? "212" : "210"}), [&] { return tag; });
            BitVec s1 = al ? gc.delta(0) : BitVec(3), s2 = de ? gc.delta(2) : BitVec(3);
            scal(r1.scalar == s1 && r2.scalar == s2, [&] { return tag; });
        }
    rep.add("Ω_min: the four stated connections are WQLCs", member.ok(), member.detail());
    rep.add("Ω_min: R(01) = R(21) = 0, R(10) = α[101]⊗10 + (1+α)[101]⊗12, R(12) = (1+δ)[101]⊗10 + δ[101]⊗12",
            curv.ok(), curv.detail());
    rep.add("Ω_min: Ricci1 = α·010 + (1+α)·012", ric1.ok(), ric1.detail());
    rep.add("Ω_min: Ricci2 = δ·212 + (1+δ)·210", ric2.ok(), ric2.detail());
    rep.add("Ω_min: scalars S1 = α (at vertex 0), S2 = δ (at vertex 2)", scal.ok(), scal.detail());
}

// subset tables of the four triangle QLCs
void check_triangle_subsets(Report& rep, const Model& m, const std::map<std::pair<bool, bool>, Connection>& qlcs)
{
    BooleanView v(*m.graph);
    auto P = [&](std::vector<std::string> l, std::size_t deg = 2) { return v.parse(l, deg, Carrier::plain); };
    std::map<std::string, std::vector<std::string>> base{
        {"01", {"020", "201", "101", "012"}}, {"12", {"101", "012", "212", "120"}},
        {"20", {"212", "120", "020", "201"}}, {"10", {"121", "210", "010", "102"}},
        {"21", {"202", "021", "121", "210"}}, {"02", {"010", "102", "202", "021"}}};
    std::map<std::string, std::string> alpha_extra{{"01", "021"}, {"12", "102"}, {"20", "210"}};
    std::map<std::string, std::string> beta_extra{{"10", "120"}, {"21", "201"}, {"02", "012"}};

    Tally table, trivial, curved;
    for (auto& [ab, c] : qlcs) {
        auto [al, be] = ab;
        for (auto& [arrow, image] : base) {
            auto expect = P(image);
            if (al && alpha_extra.count(arrow))
                expect = v.add(expect, P({alpha_extra[arrow]}));
            if (be && beta_extra.count(arrow))
                expect = v.add(expect, P({beta_extra[arrow]}));
            table(v.nabla(c, P({arrow}, 1)) == expect, [&] {
                return "α=" + std::to_string(al) + " β=" + std::to_string(be) + " ∇{" + arrow + "}";
            });
        }
    }
    rep.add("subset tables (i)-(iv) of ∇ on single arrows", table.ok(), table.detail());

    const auto& triv = qlcs.at({false, false});
    const auto& curv = qlcs.at({true, true});
    std::size_t na = v.path_count(1);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << na); ++s) {
        SubsetForm w{1, Carrier::plain, BitVec::from_u64(na, s)};
        trivial(v.nabla(triv, w) == trivial_connection_subset(v, w), [&] { return v.format(w); });
        curved(v.nabla(curv, w) == curved_triangle_subset(v, w), [&] { return v.format(w); });
    }
    rep.add("∇e± = 0 is the union of half steps over ∂±ω, all ω", trivial.ok(), trivial.detail());
    rep.add("curved QLC: half steps ⊕ {i→i-1→i-2 : i ∈ a+} ⊕ {i→i+1→i+2 : i ∈ a-}, all ω", curved.ok(),
            curved.detail());

    auto w = P({"01", "20"}, 1);
    rep.add("curved QLC: ∇{01,20} = {101,012,021,212,120,210}",
            v.nabla(curv, w) == P({"101", "012", "021", "212", "120", "210"}));
    rep.add("curved QLC: R{01,20} ≡ {0101,2020} modulo N_min",
            v.equivalent(v.curvature(curv, w), P({"0101", "2020"}, 3), Level::min));
}

void check_triangle(Report& rep, const Model& m)
{
    const auto& cd = *m.cayley;
    const auto& geo = m.geometry("cayley").geo;
    FrameKit F(geo, cd.vol);
    const auto& A = F.A();

    auto t0 = Clock::now();
    auto q = run(geo, Constraints::qlc());
    double tq = seconds_since(t0);
    rep.add("exactly four QLCs", q.connections.size() == 4, count_detail(q.connections.size(), 4));

    std::map<std::pair<bool, bool>, Connection> stated;
    std::set<BitVec> stated_keys;
    std::vector<BitVec> flip{F.ee(0, 0), F.ee(1, 0), F.ee(0, 1), F.ee(1, 1)};
    for (bool al : {false, true})
        for (bool be : {false, true}) {
            auto c = F.connection({F.ee(F.k(al), 1, 1), F.ee(F.k(be), 0, 0)}, flip);
            stated[{al, be}] = c;
            stated_keys.insert(conn_key(c));
        }
    rep.add("they are ∇e+ = α e-⊗e-, ∇e- = β e+⊗e+ with σ = flip", conn_keys(q) == stated_keys);

    t0 = Clock::now();
    auto qb = run(geo, Constraints::qlc(), Strategy::brute);
    double tb = seconds_since(t0);
    std::ostringstream bd;
    bd << qb.stats.candidates << " candidates, " << tb << " s (reduced: " << tq << " s)";
    rep.add("exhaustive scan of all bimodule maps finds the same four", conn_keys(qb) == stated_keys, bd.str());
    auto qi = run(geo, Constraints::qlc(), Strategy::invariant);
    rep.add("invariant-basis search finds the same four", conn_keys(qi) == stated_keys);

    auto lifts = enumerate_lifts(geo);
    long ip = find_lift(lifts, cd.vol, F.ee(0, 1)), im = find_lift(lifts, cd.vol, F.ee(1, 0));
    rep.add("the lifts include i±(Vol) = e±⊗e∓", ip >= 0 && im >= 0, std::to_string(lifts.size()) + " lifts");

    Tally curv, ric, two, eins;
    for (auto& [ab, c] : stated) {
        auto [al, be] = ab;
        BitVec f = F.k(al && be);
        std::string tag = "α=" + std::to_string(al) + " β=" + std::to_string(be);
        auto R = curvature(geo, c);
        curv(R(F.e(0)) == F.vol_tensor(f, F.e(0)) && R(F.e(1)) == F.vol_tensor(f, F.e(1)), [&] { return tag; });
        if (ip < 0 || im < 0)
            continue;
        const auto& Lp = lifts[std::size_t(ip)];
        const auto& Lm = lifts[std::size_t(im)];
        auto rp = ricci(geo, c, Lp), rm = ricci(geo, c, Lm);
        ric(rp.ricci == F.ee(f, 1, 0) && rm.ricci == F.ee(f, 0, 1) && rp.scalar == f && rm.scalar == f,
            [&] { return tag; });
        auto r2 = two_ricci(geo, c, Lp, Lm);
        two(r2.ricci == F.mixed(f) && r2.scalar.none(), [&] { return tag; });
        if (!(al && be))
            continue;
        std::vector<std::size_t> conserved;
        for (std::size_t i = 0; i < lifts.size(); ++i)
            if (einstein(geo, c, lifts[i], m.einstein_form).conserved())
                conserved.push_back(i);
        auto ep = einstein(geo, c, Lp, m.einstein_form), em = einstein(geo, c, Lm, m.einstein_form);
        eins(conserved.size() == 2 && conserved == std::vector<std::size_t>{std::min(std::size_t(ip), std::size_t(im)),
                                                                            std::max(std::size_t(ip), std::size_t(im))},
             [&] { return std::to_string(conserved.size()) + " conserved lifts"; });
        eins(ep.eins == Lp(cd.vol) && em.eins == Lm(cd.vol), "Eins± = i±(Vol)");
    }
    rep.add("R(e±) = αβ Vol⊗e±", curv.ok(), curv.detail());
    rep.add("Ricci± = αβ e∓⊗e±, S± = αβ", ric.ok(), ric.detail());
    rep.add("²Ricci = αβ g, ²S = 0", two.ok(), two.detail());
    rep.add("curved QLC: exactly the lifts i± give conserved Eins, Eins± = i±(Vol)", eins.ok(),
            eins.detail() + ", " + std::to_string(lifts.size()) + " lifts tried");

    check_triangle_subsets(rep, m, stated);

    // WQLC family with function coefficients
    auto fam = wqlc_family(geo);
    rep.add("torsion- and cotorsion-free solutions: 12 F2 dimensions = 4 functions",
            !fam.solutions.empty() && fam.solutions.dimension() == 12 && fam.function_params == std::size_t(4),
            "dimension " + std::to_string(fam.solutions.dimension()));
    std::set<BitVec> family_keys;
    for (auto& c : enumerate_affine(fam.solutions))
        family_keys.insert(conn_key(fam.space.connection(geo, c)));

    // coefficients read off ∇e+ = αe-⊗e- + γe+⊗e+ + δg and ∇e- = βe+⊗e+ + δ'e-⊗e- + γ'g
    Tally printed, printed_const, fixed;
    const auto& fr = *geo.frame;
    BitVec one = A.one();
    auto Rp = [&](const BitVec& f) { return shifted(cd, 0, f); };
    auto Rm = [&](const BitVec& f) { return shifted(cd, 1, f); };
    auto d = [&](const BitVec& f) { return geo.calc->d(f); };
    for (auto& p : enumerate_affine(fam.solutions)) {
        auto c = fam.space.connection(geo, p);
        auto np = *fr.coords2(c.nabla(F.e(0))), nm = *fr.coords2(c.nabla(F.e(1)));
        BitVec al = np[3], ga = np[0], de = np[1], be = nm[0], dm = nm[3], gm = nm[1];
        auto R = curvature(geo, c);
        BitVec Rep = R(F.e(0)), Rem = R(F.e(1));
        auto tag = [&] { return "α=" + al.str() + " β=" + be.str() + " γ=" + ga.str() + " δ=" + de.str(); };
        BitVec ab = A.mul(al, be) + A.mul(ga, de);
        bool ok = Rep == F.vol_tensor(one, F.e(ab + partial(cd, 1, ga), 0) + F.e(partial(cd, 0, al), 1) + d(de)) &&
                  Rem == F.vol_tensor(one, F.e(ab + partial(cd, 0, de), 1) + F.e(partial(cd, 1, be), 0) + d(ga));
        printed(ok, tag);
        bool constant = true;
        for (auto* f : {&al, &be, &ga, &de})
            constant = constant && (f->none() || *f == one);
        if (constant)
            printed_const(ok, tag);
        fixed(gm == Rp(ga) && dm == Rp(de) &&
                    Rep == F.vol_tensor(one, F.e(A.mul(al, Rm(be)) + A.mul(ga, Rp(de)) + partial(cd, 1, ga), 0) +
                                                 F.e(A.mul(one + ga, partial(cd, 0, al)), 1) + d(de)) &&
                    Rem == F.vol_tensor(one, F.e(A.mul(be, Rp(al)) + A.mul(dm, Rm(gm)) + partial(cd, 0, dm), 1) +
                                                 F.e(A.mul(one + dm, partial(cd, 1, be)), 0) + d(gm)),
                tag);
    }
    rep.add("R e+ = Vol⊗((αβ+γδ+∂-γ)e+ + ∂+α e- + dδ), R e- = Vol⊗((αβ+γδ+∂+δ)e- + ∂-β e+ + dγ) on every WQLC",
            printed.ok(), printed.detail());
    rep.add("the same curvature formula on the 16 constant-coefficient WQLCs", printed_const.ok() && printed_const.checked == 16,
            printed_const.detail());
    rep.add("every WQLC has γ' = R+γ, δ' = R+δ and R e+ = Vol⊗((αR-β + γR+δ + ∂-γ)e+ + (1+γ)∂+α e- + dδ), "
            "R e- = Vol⊗((βR+α + δ'R-γ' + ∂+δ')e- + (1+δ')∂-β e+ + dγ')",
            fixed.ok(), fixed.detail(), true);

    // the family as printed, with γ, δ also in ∇e-
    std::set<BitVec> printed_keys, corrected_keys;
    Tally printed_wq;
    std::size_t n = A.dim;
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << (4 * n)); ++u) {
        BitVec al = BitVec::from_u64(n, u & 7), be = BitVec::from_u64(n, (u >> 3) & 7);
        BitVec ga = BitVec::from_u64(n, (u >> 6) & 7), de = BitVec::from_u64(n, (u >> 9) & 7);
        for (bool corrected : {false, true}) {
            BitVec gm = corrected ? Rp(ga) : ga, dm = corrected ? Rp(de) : de;
            std::vector<BitVec> nab{F.ee(al, 1, 1) + F.ee(ga, 0, 0) + F.mixed(de),
                                    F.ee(be, 0, 0) + F.ee(dm, 1, 1) + F.mixed(gm)};
            std::vector<BitVec> sig{F.ee(one + ga, 0, 0), F.ee(one + de, 1, 0) + F.ee(de, 0, 1),
                                    F.ee(one + gm, 0, 1) + F.ee(gm, 1, 0), F.ee(one + dm, 1, 1)};
            auto c = F.connection(nab, sig);
            if (corrected) {
                corrected_keys.insert(conn_key(c));
            } else {
                printed_wq(F.is_wqlc(c), [&] { return "α=" + al.str() + " β=" + be.str() + " γ=" + ga.str() + " δ=" + de.str(); });
                printed_keys.insert(conn_key(c));
            }
        }
    }
    rep.add("every member of the printed 4-function family is a WQLC", printed_wq.ok(), printed_wq.detail());
    rep.add("with γ' = R+γ, δ' = R+δ in ∇e- the family is exactly the 4096 WQLCs of the linear reduction",
            corrected_keys == family_keys && family_keys.size() == 4096, "", true);
    auto wr = run(geo, Constraints::wqlc());
    rep.add("general WQLC search agrees with the family", conn_keys(wr) == family_keys,
            std::to_string(wr.connections.size()) + " WQLCs");
}

void check_square_z4(Report& rep, const Model& m)
{
    const auto& cd = *m.cayley;
    const auto& geo = m.geometry("cayley").geo;
    FrameKit F(geo, cd.vol);
    auto q = run(geo, Constraints::qlc());
    rep.add("exactly four QLCs", q.connections.size() == 4, count_detail(q.connections.size(), 4));
    bool flat = true, constant = true;
    for (auto& c : q.connections) {
        flat = flat && c.flat;
        constant = constant && c.constant_coefficients.value_or(false);
    }
    rep.add("all four are flat", flat && !q.connections.empty());
    rep.add("all four have constant coefficients", constant && !q.connections.empty());

    std::set<BitVec> stated;
    for (bool al : {false, true})
        for (bool be : {false, true}) {
            BitVec a = F.k(al), b = F.k(be), ab = F.k(al && be), nab = F.k(!(al && be));
            std::vector<BitVec> nabla{F.ee(a, 1, 1) + F.mixed(ab) + F.ee(ab, 0, 0),
                                      F.ee(b, 0, 0) + F.mixed(ab) + F.ee(ab, 1, 1)};
            std::vector<BitVec> sig{F.ee(nab, 0, 0) + F.ee(a, 1, 1), F.ee(nab, 1, 0) + F.ee(ab, 0, 1),
                                    F.ee(nab, 0, 1) + F.ee(ab, 1, 0), F.ee(nab, 1, 1) + F.ee(b, 0, 0)};
            stated.insert(conn_key(F.connection(nabla, sig)));
        }
    rep.add("they are ∇e± = α/β e∓⊗e∓ + αβ(g + e±⊗e±) with the stated σ", conn_keys(q) == stated);
    auto qi = run(geo, Constraints::qlc(), Strategy::invariant);
    rep.add("invariant-basis search finds the same four", conn_keys(qi) == stated);

    Tally wq, rc;
    for (unsigned u = 0; u < 16; ++u) {
        bool al = u & 1, be = u & 2, ga = u & 4, de = u & 8;
        BitVec a = F.k(al), b = F.k(be), g = F.k(ga), d = F.k(de), one = F.A().one();
        std::vector<BitVec> nabla{F.ee(a, 1, 1) + F.ee(g, 0, 0) + F.mixed(d), F.ee(b, 0, 0) + F.ee(d, 1, 1) + F.mixed(g)};
        std::vector<BitVec> sig{F.ee(a, 1, 1) + F.ee(one + g, 0, 0), F.ee(one + d, 1, 0) + F.ee(d, 0, 1),
                                F.ee(one + g, 0, 1) + F.ee(g, 1, 0), F.ee(one + d, 1, 1) + F.ee(b, 0, 0)};
        auto c = F.connection(nabla, sig);
        auto tag = [&] { return "αβγδ=" + std::to_string(u); };
        wq(F.is_wqlc(c), tag);
        auto R = curvature(geo, c);
        BitVec f = F.k((al && be) != (ga && de));
        rc(R(F.e(0)) == F.vol_tensor(f, F.e(0)) && R(F.e(1)) == F.vol_tensor(f, F.e(1)), tag);
    }
    rep.add("constant-coefficient family members are WQLCs", wq.ok(), wq.detail());
    rep.add("constant coefficients: R(e±) = (αβ+γδ) Vol⊗e±, all 16", rc.ok(), rc.detail());
}

void check_square_z2z2(Report& rep, const Model& m)
{
    const auto& cd = *m.cayley;
    const auto& geo = m.geometry("cayley").geo;
    FrameKit F(geo, cd.vol);
    const auto& A = F.A();
    auto q = run(geo, Constraints::qlc());
    rep.add("exactly four QLCs", q.connections.size() == 4, count_detail(q.connections.size(), 4));
    bool flat = !q.connections.empty();
    std::size_t nconst = 0;
    for (auto& c : q.connections) {
        flat = flat && c.flat;
        nconst += c.constant_coefficients.value_or(false);
    }
    rep.add("all four are flat", flat);
    rep.add("two have constant coefficients, two do not", nconst == 2 && q.connections.size() == 4,
            std::to_string(nconst) + " constant");

    BitVec one = A.one();
    std::set<BitVec> stated;
    for (bool al : {false, true}) {
        BitVec a = F.k(al), na = F.k(!al);
        std::vector<BitVec> nabla{F.all_pairs(a), F.all_pairs(a)};
        std::vector<BitVec> sig{F.ee(a, 1, 1) + F.ee(na, 0, 0), F.ee(na, 1, 0) + F.ee(a, 0, 1),
                                F.ee(na, 0, 1) + F.ee(a, 1, 0), F.ee(na, 1, 1) + F.ee(a, 0, 0)};
        stated.insert(conn_key(F.connection(nabla, sig)));
    }
    // γ alternates around the square 0-1-2-3
    for (bool start : {false, true}) {
        BitVec g(4);
        g.set(0, start);
        g.set(2, start);
        g.set(1, !start);
        g.set(3, !start);
        std::vector<BitVec> nabla{F.all_pairs(one) + F.ee(g, 0, 0), F.all_pairs(one) + F.ee(one + g, 1, 1)};
        std::vector<BitVec> sig{F.ee(g, 0, 0) + F.ee(one, 1, 1), F.ee(one, 0, 1), F.ee(one, 1, 0),
                                F.ee(one, 0, 0) + F.ee(one + g, 1, 1)};
        stated.insert(conn_key(F.connection(nabla, sig)));
    }
    rep.add("they are ∇e^i = α θ⊗θ and the two alternating-γ connections, with the stated σ",
            conn_keys(q) == stated);
    auto qi = run(geo, Constraints::qlc(), Strategy::invariant);
    rep.add("invariant-basis search finds the same four", conn_keys(qi) == stated);

    auto lifts = enumerate_lifts(geo);
    long i1 = find_lift(lifts, cd.vol, F.ee(0, 1)), i2 = find_lift(lifts, cd.vol, F.ee(1, 0));
    Tally wq, rc, ric;
    for (unsigned u = 0; u < 16; ++u) {
        bool al = u & 1, be = u & 2, ga = u & 4, de = u & 8;
        BitVec a = F.k(al), b = F.k(be), g = F.k(ga), d = F.k(de);
        std::vector<BitVec> nabla{F.ee(a, 1, 1) + F.ee(one + g, 0, 0) + F.mixed(b),
                                  F.ee(b, 0, 0) + F.ee(one + d, 1, 1) + F.mixed(a)};
        std::vector<BitVec> sig{F.ee(a, 1, 1) + F.ee(g, 0, 0), F.ee(one + b, 1, 0) + F.ee(b, 0, 1),
                                F.ee(one + a, 0, 1) + F.ee(a, 1, 0), F.ee(d, 1, 1) + F.ee(b, 0, 0)};
        auto c = F.connection(nabla, sig);
        auto tag = [&] { return "αβγδ=" + std::to_string(u); };
        wq(F.is_wqlc(c), tag);
        auto R = curvature(geo, c);
        BitVec f = F.k((al && ga) != (be && de));
        rc(R(F.e(0)) == F.vol_tensor(f, F.e(1)) && R(F.e(1)) == F.vol_tensor(f, F.e(0)), tag);
        if (i1 < 0 || i2 < 0)
            continue;
        auto r1 = ricci(geo, c, lifts[std::size_t(i1)]), r2 = ricci(geo, c, lifts[std::size_t(i2)]);
        auto two = two_ricci(geo, c, lifts[std::size_t(i1)], lifts[std::size_t(i2)]);
        ric(r1.ricci == F.ee(f, 1, 1) && r2.ricci == F.ee(f, 0, 0) && r1.scalar == f && r2.scalar == f &&
                two.ricci == F.ee(f, 0, 0) + F.ee(f, 1, 1),
            tag);
    }
    rep.add("constant-coefficient family members are WQLCs", wq.ok(), wq.detail());
    rep.add("constant coefficients: R(e1) = (αγ+βδ) Vol⊗e2, R(e2) = (αγ+βδ) Vol⊗e1, all 16", rc.ok(), rc.detail());
    rep.add("Ricci1 = (αγ+βδ) e2⊗e2, Ricci2 = (αγ+βδ) e1⊗e1, S = αγ+βδ, ²Ricci = (αγ+βδ) g", ric.ok(),
            ric.detail());
}

void check_ngon(Report& rep, const Model& m)
{
    const auto& cd = *m.cayley;
    const auto& geo = m.geometry("cayley").geo;
    FrameKit F(geo, cd.vol);
    std::vector<BitVec> flip{F.ee(0, 0), F.ee(1, 0), F.ee(0, 1), F.ee(1, 1)};
    auto zero = BitVec(geo.t2().dim());
    auto trivial = conn_key(F.connection({zero, zero}, flip));

    auto t0 = Clock::now();
    auto qi = run(geo, Constraints::qlc(), Strategy::invariant);
    std::ostringstream d;
    d << count_detail(qi.connections.size(), 1) << ", " << seconds_since(t0) << " s";
    rep.add("invariant search: exactly one QLC", qi.connections.size() == 1, d.str());
    rep.add("it is ∇e± = 0 with σ = flip, flat",
            qi.connections.size() == 1 && conn_key(qi.connections[0].conn) == trivial && qi.connections[0].flat);
    if (cd.n == 5) {
        t0 = Clock::now();
        auto qr = run(geo, Constraints::qlc(), Strategy::reduced);
        std::ostringstream dr;
        dr << count_detail(qr.connections.size(), 1) << ", " << qr.stats.parameter_dim << " parameters, "
           << seconds_since(t0) << " s";
        rep.add("general reduced search agrees", conn_keys(qr) == std::set<BitVec>{trivial}, dr.str());
    }

    Tally wq, rc;
    for (unsigned u = 0; u < 4; ++u) {
        bool al = u & 1, be = u & 2;
        BitVec a = F.k(al), b = F.k(be), one = F.A().one();
        std::vector<BitVec> nabla{F.ee(a, 0, 0) + F.mixed(b), F.ee(b, 1, 1) + F.mixed(a)};
        std::vector<BitVec> sig{F.ee(one + a, 0, 0), F.ee(one + b, 1, 0) + F.ee(b, 0, 1),
                                F.ee(one + a, 0, 1) + F.ee(a, 1, 0), F.ee(one + b, 1, 1)};
        auto c = F.connection(nabla, sig);
        auto tag = [&] { return "αβ=" + std::to_string(u); };
        wq(F.is_wqlc(c), tag);
        auto R = curvature(geo, c);
        BitVec f = F.k(al && be);
        rc(R(F.e(0)) == F.vol_tensor(f, F.e(0)) && R(F.e(1)) == F.vol_tensor(f, F.e(1)), tag);
    }
    rep.add("constant WQLCs ∇e+ = αe+⊗e+ + βg, ∇e- = βe-⊗e- + αg", wq.ok(), wq.detail());
    rep.add("their curvature is αβ Vol⊗e±", rc.ok(), rc.detail());
}

void check_f2z3(Report& rep, const Model& m)
{
    const auto& z = *m.f2z3;
    const auto& A = z.calc->A;
    const auto& M = z.calc->omega1;
    const auto& so = *z.so;
    BitVec one = A.one(), x = A.basis(1), x2 = A.basis(2);

    rep.add("Ω¹ relations e+x = x(e++e-), e+x² = x²e-, e-x = xe+, e-x² = x²(e++e-)",
            M.act_right(z.ep, x) == M.act_left(x, z.theta) && M.act_right(z.ep, x2) == M.act_left(x2, z.em) &&
                M.act_right(z.em, x) == M.act_left(x, z.ep) && M.act_right(z.em, x2) == M.act_left(x2, z.theta));
    rep.add("θ = e+ + e- is inner", is_inner_by(*z.calc, z.theta));
    rep.add("Ω¹⊗Ω¹ is free of rank 4 (12 F2 dimensions)", so.t2.dim() == 12, std::to_string(so.t2.dim()));
    rep.add("(e±)² = 0, e+e- + e-e+ = 0, Vol = e+e- spans Ω² (3 F2 dimensions)",
            so.wedge_of(z.ep, z.ep).none() && so.wedge_of(z.em, z.em).none() &&
                (so.wedge_of(z.ep, z.em) + so.wedge_of(z.em, z.ep)).none() && z.vol.any() && so.omega2.dim == 3);
    rep.add("Ω² checks (bimodule, d² = 0, Leibniz)", check_second_order(*z.calc, so).ok());

    std::vector<std::string> errs;
    bool metrics_ok = m.geometries.size() == 3;
    for (std::size_t i = 0; i < z.metrics.size(); ++i)
        metrics_ok = metrics_ok && quantum_symmetry_check(so, z.metrics[i]) &&
                     snake_violation(*z.calc, so.t2, z.metrics[i], m.geometries[i].geo.require_metric().inverse).empty();
    rep.add("g0, g1, g2 are quantum symmetric with bimodule inverses", metrics_ok);

    // e+ = index 0, e- = index 1
    const auto& geo0 = m.geometries[0].geo;
    FrameKit F(geo0, z.vol);
    BitVec x_ = x, x2_ = x2, ox = one + x, ox2 = one + x2;
    auto pp = [&](const BitVec& f) { return F.ee(f, 0, 0); };
    auto mm = [&](const BitVec& f) { return F.ee(f, 1, 1); };
    auto g0 = [&](const BitVec& f) { return F.mixed(f); };
    using Pair = std::pair<BitVec, BitVec>;
    std::vector<Pair> flat{{BitVec(12), BitVec(12)},
                           {pp(one) + g0(one), pp(one) + mm(one)},
                           {pp(one) + mm(one), mm(one) + g0(one)}};
    std::vector<std::vector<Pair>> curved{
        {{mm(one) + g0(one), pp(one) + mm(one)},
         {pp(one) + mm(one), pp(one) + g0(one)},
         {pp(one) + g0(one), mm(one) + g0(one)}},
        {{pp(ox2) + mm(x2_) + g0(one), pp(ox2) + mm(one) + g0(x2_)},
         {pp(ox2) + g0(ox2), pp(one) + mm(ox2) + g0(x2_)},
         {pp(one) + mm(x2_) + g0(ox2), pp(ox2) + mm(ox2)}},
        {{pp(one) + mm(ox) + g0(x_), pp(x_) + mm(ox) + g0(one)},
         {pp(ox) + mm(one) + g0(x_), mm(ox) + g0(ox)},
         {pp(ox) + mm(ox), pp(x_) + mm(one) + g0(ox)}}};
    // joint curvature R e+, R e-
    std::vector<Pair> joint{{F.vol_tensor(one, z.ep), F.vol_tensor(one, z.em)},
                            {F.vol_tensor(x, z.theta), F.vol_tensor(x, z.ep)},
                            {F.vol_tensor(x2, z.em), F.vol_tensor(x2, z.theta)}};
    BitVec ip_vol = pp(one) + mm(one) + F.ee(0, 1), im_vol = pp(one) + mm(one) + F.ee(1, 0);
    // Eins for i+, i-
    std::vector<Pair> eins_expect{{ip_vol, im_vol},
                                  {geo0.t2().space.act_left(x, im_vol), BitVec(12)},
                                  {BitVec(12), geo0.t2().space.act_left(x2, ip_vol)}};

    auto key = [](const Connection& c, const BitVec& ep, const BitVec& em) { return c.nabla(ep).concat(c.nabla(em)); };
    auto pair_key = [](const Pair& p) { return p.first.concat(p.second); };

    // x <-> x², e+ <-> e-
    std::vector<std::size_t> phi{0, 2, 1};
    auto phi_a = [&](const BitVec& f) {
        BitVec r(3);
        for (std::size_t i = 0; i < 3; ++i)
            r.set(phi[i], f[i]);
        return r;
    };
    const auto& fr = *geo0.frame;
    auto phi1 = [&](const BitVec& w) {
        auto c = *fr.coords1(w);
        return F.e(phi_a(c[0]), 1) + F.e(phi_a(c[1]), 0);
    };
    auto phi2 = [&](const BitVec& t) {
        auto c = *fr.coords2(t);
        BitVec r(12);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                r += F.ee(phi_a(c[a * 2 + b]), 1 - a, 1 - b);
        return r;
    };
    Tally sym_calc;
    for (std::size_t i = 0; i < 3; ++i) {
        sym_calc(phi1(z.calc->d(A.basis(i))) == z.calc->d(phi_a(A.basis(i))), "d");
        for (std::size_t j = 0; j < M.dim; ++j) {
            BitVec w = BitVec::unit(M.dim, j);
            sym_calc(phi1(M.act_left(A.basis(i), w)) == M.act_left(phi_a(A.basis(i)), phi1(w)), "left");
            sym_calc(phi1(M.act_right(w, A.basis(i))) == M.act_right(phi1(w), phi_a(A.basis(i))), "right");
        }
    }
    rep.add("x ↔ x², e+ ↔ e- is an automorphism of the calculus", sym_calc.ok(), sym_calc.detail(), true);

    std::vector<std::set<BitVec>> qlc_sets(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& geo = m.geometries[i].geo;
        std::string g = "g" + std::to_string(i);
        auto q = run(geo, Constraints::qlc(), Strategy::invariant);
        auto qr = run(geo, Constraints::qlc(), Strategy::reduced);
        std::size_t nflat = 0;
        std::set<BitVec> curved_found, flat_found;
        for (auto& c : q.connections) {
            (c.flat ? flat_found : curved_found).insert(key(c.conn, z.ep, z.em));
            nflat += c.flat;
            qlc_sets[i].insert(key(c.conn, z.ep, z.em));
        }
        rep.add(g + ": exactly four QLCs, one flat", q.connections.size() == 4 && nflat == 1,
                std::to_string(q.connections.size()) + " QLCs, " + std::to_string(nflat) + " flat");
        rep.add(g + ": general reduced search agrees", conn_keys(qr) == conn_keys(q));
        rep.add(g + ": the flat QLC is as stated", flat_found == std::set<BitVec>{pair_key(flat[i])});
        std::set<BitVec> stated;
        for (auto& p : curved[i])
            stated.insert(pair_key(p));
        rep.add(g + ": the three curved QLCs are (i)-(iii) as stated", curved_found == stated);

        auto lifts = enumerate_lifts(geo);
        long ip = find_lift(lifts, z.vol, ip_vol), im = find_lift(lifts, z.vol, im_vol);
        Tally curv, eins;
        for (auto& c : q.connections) {
            if (c.flat)
                continue;
            auto R = curvature(geo, c.conn);
            curv(R(z.ep) == joint[i].first && R(z.em) == joint[i].second, "R");
            std::vector<long> conserved;
            for (std::size_t l = 0; l < lifts.size(); ++l)
                if (einstein(geo, c.conn, lifts[l], m.einstein_form).conserved())
                    conserved.push_back(long(l));
            eins(conserved == std::vector<long>{std::min(ip, im), std::max(ip, im)} && ip >= 0 && im >= 0,
                 [&] { return std::to_string(conserved.size()) + " conserved lifts"; });
            if (ip >= 0 && im >= 0)
                eins(einstein(geo, c.conn, lifts[std::size_t(ip)], m.einstein_form).eins == eins_expect[i].first &&
                         einstein(geo, c.conn, lifts[std::size_t(im)], m.einstein_form).eins == eins_expect[i].second,
                     "Eins± values");
        }
        rep.add(g + ": joint curvature of the curved QLCs as stated", curv.ok(), curv.detail());
        rep.add(g + ": Eins = Ricci + g conserved exactly for i±(Vol) = e+⊗e+ + e-⊗e- + e±⊗e∓, Eins± as stated",
                eins.ok(), eins.detail() + ", " + std::to_string(lifts.size()) + " lifts");
    }

    auto mapped = [&](const std::set<BitVec>& s) {
        std::set<BitVec> out;
        for (auto& k : s) {
            // the keys hold ∇e+ then ∇e-
            BitVec np = k.slice(0, 12), nm = k.slice(12, 12);
            out.insert(phi2(nm).concat(phi2(np)));
        }
        return out;
    };
    rep.add("the symmetry maps g1 metric to g2", phi2(z.metrics[1]) == z.metrics[2]);
    rep.add("the symmetry maps the g1 QLCs bijectively onto the g2 QLCs",
            mapped(qlc_sets[1]) == qlc_sets[2] && qlc_sets[1].size() == 4);
    std::set<BitVec> g0iii{pair_key(curved[0][2])};
    rep.add("the g0 QLCs are permuted among themselves with (iii) fixed",
            mapped(qlc_sets[0]) == qlc_sets[0] && mapped(g0iii) == g0iii);
}

} // namespace

std::vector<Claim> consistency_claims(const Geometry& geo, const std::string& where)
{
    std::vector<Claim> out;
    if (!geo.metric)
        return out;
    auto add = [&](std::string name, bool pass, std::string detail) {
        out.push_back({where + ": " + name, pass, std::move(detail), true});
    };
    auto q = run(geo, Constraints::qlc(), geo.frame ? Strategy::invariant : Strategy::reduced);
    std::optional<ConnectionModuli> w;
    SearchConfig wc;
    wc.constraints = Constraints::wqlc();
    wc.enum_cap = std::uint64_t(1) << 12;
    try {
        w = classify(geo, wc);
    } catch (const SearchSpaceTooLarge&) {
    }

    Tally tor, met, leib, cot;
    auto check = [&](const Connection& c) {
        leib(leibniz_violation(geo, c).empty(), "Leibniz");
        if (!c.alpha)
            return;
        tor(torsion_free_inner(geo, c.sigma, *c.alpha) == torsion_free(geo, c), "torsion");
        met(metric_defect_inner(geo, c.sigma, *c.alpha) == metric_defect(geo, c), "metric");
    };
    for (auto& c : q.connections) {
        check(c.conn);
        cot(cotorsion(geo, c.conn).none(), "QLC with cotorsion");
    }
    if (w)
        for (auto& c : w->connections)
            check(c.conn);
    std::string n = std::to_string(q.connections.size()) + " QLC" +
                     (w ? ", " + std::to_string(w->connections.size()) + " WQLC" : std::string());
    add("inner torsion test agrees with ∧∇ + d", tor.failed == 0, tor.detail() + " (" + n + ")");
    add("inner metric defect agrees with ∇g", met.failed == 0, met.detail());
    add("classified connections satisfy both Leibniz rules", leib.failed == 0, leib.detail());
    bool subset = cot.failed == 0;
    std::string d = cot.detail();
    if (w) {
        auto wk = conn_keys(*w);
        for (auto& k : conn_keys(q))
            subset = subset && wk.count(k);
    } else {
        d += "; WQLC space above 2^12, checked by cotorsion only";
    }
    add("QLC ⊆ WQLC", subset, d);
    return out;
}

Report verify_model(const std::string& name)
{
    auto t0 = Clock::now();
    Report rep;
    rep.subject = name;
    Model m = build_model(name);
    if (name == "2pt")
        check_2pt(rep, m);
    else if (name == "line")
        check_line(rep, m);
    else if (name == "triangle")
        check_triangle(rep, m);
    else if (name == "square-z4")
        check_square_z4(rep, m);
    else if (name == "square-z2z2")
        check_square_z2z2(rep, m);
    else if (name == "f2z3")
        check_f2z3(rep, m);
    else if (m.cayley)
        check_ngon(rep, m);
    for (auto& g : m.geometries)
        for (auto& c : consistency_claims(g.geo, g.label))
            rep.claims.push_back(std::move(c));
    rep.seconds = seconds_since(t0);
    return rep;
}

/* ---- subset view ---- */

namespace {

BitVec random_bits(std::size_t n, std::mt19937_64& rng)
{
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, rng() & 1);
    return v;
}

std::vector<std::string> vertex_names(std::size_t n)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(std::to_string(i));
    return v;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                p.push_back({i, j});
    return p;
}

// every directed graph on n vertices
template <class F>
void for_each_graph(std::size_t n, F&& f)
{
    auto pairs = all_pairs(n);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << pairs.size()); ++s) {
        std::vector<std::pair<std::size_t, std::size_t>> arrows;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((s >> k) & 1)
                arrows.push_back(pairs[k]);
        f(Graph::make(vertex_names(n), arrows));
    }
}

Graph random_graph(std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (auto p : all_pairs(n))
        if (rng() % 3 == 0)
            arrows.push_back(p);
    return Graph::make(vertex_names(n), arrows);
}

struct ViewTallies {
    Tally plain, dual, transport, leibniz, dual_leibniz;
};

// subset operations against the F2 calculus and the bar calculus with θ = Arr
void compare_ops(const BooleanView& v, const BitVec& a, const BitVec& w, const BitVec& e, ViewTallies& t)
{
    const auto& gc = v.gc();
    const auto& calc = *gc.calc;
    const auto& M = calc.omega1;
    const auto& T = gc.t2;
    BarCalculus bc(gc.calc, gc.theta);
    BarTensor bt(bc, T);
    auto where = [&] { return std::to_string(v.vertex_count()) + " vertices, a=" + a.str(); };

    SubsetForm pw{1, Carrier::plain, w}, pe{1, Carrier::plain, e};
    SubsetForm dw{1, Carrier::dual, w}, de{1, Carrier::dual, e};
    const BitVec& th = gc.theta;

    t.plain(v.d(a).members == calc.d(a), where);
    t.plain(v.left(a, pw).members == M.act_left(a, w), where);
    t.plain(v.right(pw, a).members == M.act_right(w, a), where);
    t.plain(v.tensor(pw, pe).members == T.tensor(w, e), where);
    t.plain(v.add(pw, pe).members == w + e, where);
    t.plain(v.complement(a) == a + calc.A.one(), where);
    t.plain(v.complement(pw).members == w + th, where);
    t.plain(v.d_form(pw).members == T.tensor(th, w) + T.tensor(w, th), where);

    t.dual(v.bar_d(a).members == bc.d(a), where);
    t.dual(v.left(a, dw).members == bc.left(a, w), where);
    t.dual(v.right(dw, a).members == bc.right(w, a), where);
    t.dual(v.tensor(dw, de).members == bt.tensor(w, e), where);
    t.dual(v.add(dw, de).members == bc.add(w, e), where);
    t.dual(v.complement(dw).members == bc.complement(w), where);
    t.dual(v.d_form(dw).members == T.tensor(th, th) + T.tensor(th, w) + T.tensor(w, th), where);

    BitVec ad = v.vertices_to_f2(a, Carrier::dual);
    t.transport(v.to_f2(v.bar_d(a)) == calc.d(ad), where);
    t.transport(v.to_f2(v.left(a, dw)) == M.act_left(ad, v.to_f2(dw)), where);
    t.transport(v.to_f2(v.right(dw, a)) == M.act_right(v.to_f2(dw), ad), where);
    t.transport(v.to_f2(v.tensor(dw, de)) == T.tensor(v.to_f2(dw), v.to_f2(de)), where);
    t.transport(v.to_f2(v.add(dw, de)) == v.to_f2(dw) + v.to_f2(de), where);
}

void venn_leibniz(const BooleanView& v, const BitVec& a, const BitVec& b, ViewTallies& t)
{
    auto where = [&] { return std::to_string(v.vertex_count()) + " vertices, a=" + a.str() + " b=" + b.str(); };
    t.leibniz(v.d(a & b) == v.add(v.right(v.d(a), b), v.left(a, v.d(b))), where);
    t.dual_leibniz(v.bar_d(a | b) == v.add(v.right(v.bar_d(a), b), v.left(a, v.bar_d(b))), where);
}

void small_graph_pass(const Graph& g, std::mt19937_64& rng, ViewTallies& t)
{
    BooleanView v(build_graph_calculus(g));
    std::size_t n = g.size(), m = v.path_count(1);
    std::vector<BitVec> forms{BitVec(m), BitVec::ones(m)};
    if (m <= 3)
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s)
            forms.push_back(BitVec::from_u64(m, s));
    else
        for (int k = 0; k < 6; ++k)
            forms.push_back(random_bits(m, rng));
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        BitVec a = BitVec::from_u64(n, s);
        for (auto& w : forms)
            compare_ops(v, a, w, forms[rng() % forms.size()], t);
        for (std::uint64_t r = 0; r < (std::uint64_t(1) << n); ++r)
            venn_leibniz(v, a, BitVec::from_u64(n, r), t);
    }
}

} // namespace

Report verify_boolean_view(std::uint64_t seed, std::size_t random_cases)
{
    auto t0 = Clock::now();
    Report rep;
    rep.subject = "boolean-view";
    std::mt19937_64 rng(seed);
    ViewTallies small, big;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_graph(n, [&](const Graph& g) {
            ++graphs;
            small_graph_pass(g, rng, small);
        });
    std::string gs = std::to_string(graphs) + " graphs, ";
    rep.add("|X| ≤ 4: d, ∩ products, ⊗, ⊕ and complements agree with characteristic vectors", small.plain.ok(),
            gs + small.plain.detail());
    rep.add("|X| ≤ 4: d̄, ∪ products, ⊗̄, ⊕̄ agree with the bar calculus for θ = Arr", small.dual.ok(),
            gs + small.dual.detail());
    rep.add("|X| ≤ 4: complementation carries dual operations to the F2 calculus", small.transport.ok(),
            gs + small.transport.detail());
    rep.add("|X| ≤ 4: d(a∩b) = (da∩b) ⊕ (a∩db) for all subset pairs", small.leibniz.ok(), small.leibniz.detail());
    rep.add("|X| ≤ 4: d̄(a∪b) = (d̄a∪b) ⊕̄ (a∪d̄b) for all subset pairs", small.dual_leibniz.ok(),
            small.dual_leibniz.detail());

    for (std::size_t k = 0; k < random_cases; ++k) {
        std::size_t n = 5 + rng() % 4;
        BooleanView v(build_graph_calculus(random_graph(n, rng)));
        std::size_t m = v.path_count(1);
        BitVec a = random_bits(n, rng), b = random_bits(n, rng);
        compare_ops(v, a, random_bits(m, rng), random_bits(m, rng), big);
        venn_leibniz(v, a, b, big);
    }
    std::string rc = std::to_string(random_cases) + " random graphs with 5-8 vertices, ";
    rep.add("random: plain operations agree", big.plain.ok(), rc + big.plain.detail());
    rep.add("random: dual operations agree", big.dual.ok(), rc + big.dual.detail());
    rep.add("random: complementation transport", big.transport.ok(), rc + big.transport.detail());
    rep.add("random: both Venn Leibniz identities", big.leibniz.ok() && big.dual_leibniz.ok(),
            rc + big.leibniz.detail() + "; " + big.dual_leibniz.detail());
    rep.seconds = seconds_since(t0);
    return rep;
}

/* ---- de Morgan duality ---- */

namespace {

// complementation intertwines d, products, tensor and d on forms; θ resp. ∅ is inner
void square_pass(const BooleanView& v, std::mt19937_64& rng, Tally& sq, Tally& inner)
{
    std::size_t n = v.vertex_count(), m = v.path_count(1);
    auto theta = v.theta(Carrier::plain), dtheta = v.theta(Carrier::dual);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        BitVec a = BitVec::from_u64(n, s), ac = v.complement(a);
        auto where = [&] { return std::to_string(n) + " vertices, a=" + a.str(); };
        sq(v.complement(v.d(a)) == v.bar_d(ac), where);
        inner(v.d(a) == v.add(v.left(a, theta), v.right(theta, a)), where);
        inner(v.bar_d(a) == v.add(v.left(a, dtheta), v.right(dtheta, a)), where);
        for (int k = 0; k < 4; ++k) {
            SubsetForm w{1, Carrier::plain, random_bits(m, rng)}, e{1, Carrier::plain, random_bits(m, rng)};
            auto wc = v.complement(w), ec = v.complement(e);
            sq(v.complement(v.left(a, w)) == v.left(ac, wc), where);
            sq(v.complement(v.right(w, a)) == v.right(wc, ac), where);
            sq(v.complement(v.tensor(w, e)) == v.tensor(wc, ec), where);
            sq(v.complement(v.add(w, e)) == v.add(wc, ec), where);
            sq(v.complement(v.d_form(w)) == v.d_form(wc), where);
        }
    }
}

} // namespace

Report verify_de_morgan()
{
    auto t0 = Clock::now();
    Report rep;
    rep.subject = "de-morgan";
    std::mt19937_64 rng(11);
    Tally sq, inner;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for_each_graph(n, [&](const Graph& g) {
            ++graphs;
            square_pass(BooleanView(build_graph_calculus(g)), rng, sq, inner);
        });
    // bidirected graphs on 4 vertices
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            edges.push_back({i, j});
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << edges.size()); ++s) {
        std::vector<std::pair<std::size_t, std::size_t>> arrows;
        for (std::size_t k = 0; k < edges.size(); ++k)
            if ((s >> k) & 1)
                arrows.push_back(edges[k]);
        ++graphs;
        square_pass(BooleanView(build_graph_calculus(Graph::make(vertex_names(4), arrows, true))), rng, sq, inner);
    }
    rep.add("complementation commutes with d/d̄, products, ⊗/⊗̄ and sums", sq.ok(),
            std::to_string(graphs) + " graphs, " + sq.detail());
    rep.add("Arr makes P(Arr) inner, ∅ makes P̄(Arr) inner", inner.ok(), inner.detail());

    // triangle curved QLC
    Model tri = build_model("triangle");
    const auto& cd = *tri.cayley;
    const auto& geo = tri.geometry("cayley").geo;
    FrameKit F(geo, cd.vol);
    std::vector<BitVec> flip{F.ee(0, 0), F.ee(1, 0), F.ee(0, 1), F.ee(1, 1)};
    auto curved = F.connection({F.ee(1, 1), F.ee(0, 0)}, flip);
    BooleanView v(cd.gc);
    auto g = v.from_f2(geo.require_metric().g, 2, Carrier::plain);
    std::size_t na = v.path_count(1);
    Tally lemma;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << na); ++s) {
        BitVec w = BitVec::from_u64(na, s);
        lemma(v.dual_nabla(curved, SubsetForm{1, Carrier::dual, w}).members ==
                  (v.nabla(curved, SubsetForm{1, Carrier::plain, w}).members ^ g.members),
              [&] { return w.str(); });
    }
    rep.add("triangle curved QLC: ∇̄ω = ∇ω ⊕ g for all 64 ω", lemma.ok(), lemma.detail());

    auto w01 = SubsetForm{1, Carrier::dual, v.parse({"01"}, 1, Carrier::plain).members};
    auto stated = v.parse({"010", "121", "012", "202", "212", "201"}, 2, Carrier::dual);
    auto got = v.dual_nabla(curved, w01);
    rep.add("triangle curved QLC: ∇̄{01} ≡ {010,121,012,202,212,201} modulo N_min",
            v.equivalent(got, stated, Level::min), "∇̄{01} = " + v.format(got));

    auto vol = v.from_f2(cd.vol_rep, 2, Carrier::plain);
    auto vol_bar = v.complement(vol);
    auto vol_set = v.parse({"010", "121", "202"}, 2, Carrier::dual);
    rep.add("Vol̄ ≡ {010,121,202} modulo N̄_min", v.equivalent(vol_bar, vol_set, Level::min));
    auto blocks = v.relation_blocks(Level::min);
    Tally welldef;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << blocks.size()); ++s) {
        BitVec rep_vol = vol.members;
        for (std::size_t k = 0; k < blocks.size(); ++k)
            if ((s >> k) & 1)
                rep_vol ^= blocks[k];
        welldef(v.equivalent(v.complement(SubsetForm{2, Carrier::plain, rep_vol}), vol_bar, Level::min),
                [&] { return rep_vol.str(); });
    }
    rep.add("Vol̄ does not depend on the representative of Vol", welldef.ok(), welldef.detail());

    Tally dual_curv;
    for (std::size_t k = 0; k < na; ++k) {
        SubsetForm w{1, Carrier::dual, BitVec::unit(na, k)};
        dual_curv(v.equivalent(v.curvature(curved, w), v.tensor(vol_bar, w), Level::min),
                  [&] { return v.format(w); });
    }
    rep.add("triangle: R_∇̄(ω) ≡ Vol̄ ⊗̄ ω modulo N̄_min on single arrows", dual_curv.ok(), dual_curv.detail());

    // ∇̄e± for the symmetric F2Z3 QLC (iii) at g0
    {
        auto z = f2z3_data();
        Model fz = build_model("f2z3");
        const auto& g0 = fz.geometries[0].geo;
        FrameKit Z(g0, z.vol);
        BitVec one = Z.A().one();
        auto c = Z.connection({Z.ee(0, 0) + Z.mixed(one), Z.ee(1, 1) + Z.mixed(one)},
                              {Z.ee(0, 0), Z.ee(1, 0), Z.ee(0, 1), Z.ee(1, 1)});
        // σ is irrelevant for ∇̄ on 1-forms; ∇ extends by the left Leibniz rule
        BitVec tt = g0.t2().tensor(z.theta, z.theta);
        auto nabla_bar = [&](const BitVec& w) { return tt + c.nabla(z.theta + w); };
        rep.add("F2Z3 g0 (iii): ∇̄e± = e±⊗e±", nabla_bar(z.ep) == Z.ee(0, 0) && nabla_bar(z.em) == Z.ee(1, 1));
    }

    Tally ngon;
    for (std::size_t n : {4, 5, 6}) {
        auto c = cayley_quotient(CayleyKind::cyclic, n);
        auto ge = cayley_geometry(c);
        FrameKit P(ge, c.vol);
        BitVec zero(ge.t2().dim());
        auto triv = P.connection({zero, zero}, {P.ee(0, 0), P.ee(1, 0), P.ee(0, 1), P.ee(1, 1)});
        ngon(torsion_free(ge, triv) && metric_defect(ge, triv).none(), [&] { return "QLC n=" + std::to_string(n); });
        BooleanView pv(c.gc);
        auto arr2 = pv.full(2, Carrier::plain).members;
        std::size_t m = pv.path_count(1);
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
            BitVec w = BitVec::from_u64(m, s);
            ngon(pv.dual_nabla(triv, SubsetForm{1, Carrier::dual, w}).members ==
                     (pv.nabla(triv, SubsetForm{1, Carrier::plain, w}).members ^ arr2),
                 [&] { return "n=" + std::to_string(n) + " ω=" + w.str(); });
        }
    }
    rep.add("n-gon trivial QLC, n = 4, 5, 6: ∇̄ω = ∇ω ⊕ Arr² for all ω", ngon.ok(), ngon.detail());
    rep.seconds = seconds_since(t0);
    return rep;
}

/* ---- generalized duality ---- */

Report algebra_duality_report(const Algebra& A, const std::string& name)
{
    auto t0 = Clock::now();
    Report rep;
    rep.subject = name;
    auto first = [](const std::vector<std::string>& f) { return f.empty() ? std::string() : "first: " + f.front(); };
    auto da = check_algebra(A);
    rep.add("associative and unital", da.ok(), first(da.failures));
    auto db = check_bar_algebra(A);
    rep.add("Ā is a unital algebra, a ↦ 1+a an isomorphism, a·̄a = a²", db.ok(), first(db.failures));
    bool boolean = is_boolean(A);
    Tally zero;
    bool some_nonzero = false;
    for (auto& a : algebra_samples(A))
        some_nonzero = some_nonzero || frobenius_part(A, a).any();
    zero(some_nonzero != boolean, "∂ vanishes exactly when every element is idempotent");
    rep.add(std::string(boolean ? "Boolean, ∂ = 0" : "not Boolean, ∂ ≠ 0"), zero.ok(), zero.detail());
    auto fr = check_frobenius_part(A);
    auto on_pairs = [&](const std::vector<std::string>& f) {
        std::string s = std::to_string(f.size()) + " of " + std::to_string(A.dim * A.dim) + " basis pairs fail";
        return f.empty() ? s : s + ", " + first(f);
    };
    rep.add("∂(a+b) = ∂a + ∂b", fr.additive_failures.empty(), on_pairs(fr.additive_failures));
    rep.add("∂(ab) = ∂a + ∂b + ∂a∂b", fr.bar_product_failures.empty(), on_pairs(fr.bar_product_failures));
    rep.add("∂(ab) = a∂b + (∂a)b + ∂a∂b", fr.twisted_failures.empty(), on_pairs(fr.twisted_failures), true);
    auto U = std::make_shared<Calculus>(universal_calculus(A));
    if (auto theta = find_inner_element(*U)) {
        BarCalculus bc(U, *theta);
        auto dc = check_bar_calculus(bc);
        rep.add("universal Ω̄¹: bimodule, Leibniz, complementation a diffeomorphism, inner by 0̄",
                dc.ok() && bar_inner_by_zero(bc), first(dc.failures));
    } else {
        rep.add("universal Ω¹ is not inner, no bar calculus built", true, "", true);
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

Report demorgan_report(const Model& m, const std::string& geometry_label, std::uint64_t seed)
{
    auto t0 = Clock::now();
    if (!m.graph) {
        Algebra A = m.f2z3 ? m.f2z3->calc->A : throw InvalidInput(m.name + " has no graph and no algebra");
        auto rep = algebra_duality_report(A, m.name);
        for (auto& c : verify_generalized_duality().claims)
            if (c.name.rfind("F2Z3", 0) == 0)
                rep.claims.push_back(c);
        for (auto& c : verify_de_morgan().claims)
            if (c.name.rfind("F2Z3", 0) == 0)
                rep.claims.push_back(c);
        rep.seconds = seconds_since(t0);
        return rep;
    }
    Report rep;
    rep.subject = m.name;
    std::mt19937_64 rng(seed);
    BooleanView v(*m.graph);
    std::size_t n = v.vertex_count(), na = v.path_count(1);

    Tally sq, inner;
    if (n <= 12)
        square_pass(v, rng, sq, inner);
    rep.add("complementation commutes with d/d̄, products, ⊗/⊗̄ and sums", sq.ok(), sq.detail());
    rep.add("Arr makes P(Arr) inner, ∅ makes P̄(Arr) inner", inner.ok(), inner.detail());

    ViewTallies t;
    auto subset = [&](std::uint64_t s) { return n <= 16 ? BitVec::from_u64(n, s) : random_bits(n, rng); };
    std::uint64_t all = n <= 8 ? std::uint64_t(1) << n : 256;
    for (std::uint64_t s = 0; s < all; ++s) {
        BitVec a = subset(s);
        compare_ops(v, a, random_bits(na, rng), random_bits(na, rng), t);
        for (std::uint64_t r = 0; r < all; ++r)
            venn_leibniz(v, a, subset(r), t);
    }
    rep.add("subset operations agree with the F2 calculus", t.plain.ok(), t.plain.detail());
    rep.add("dual subset operations agree with the bar calculus for θ = Arr", t.dual.ok(), t.dual.detail());
    rep.add("complementation carries dual operations to the F2 calculus", t.transport.ok(), t.transport.detail());
    rep.add("d(a∩b) = (da∩b) ⊕ (a∩db) and d̄(a∪b) = (d̄a∪b) ⊕̄ (a∪d̄b)", t.leibniz.ok() && t.dual_leibniz.ok(),
            t.leibniz.detail() + "; " + t.dual_leibniz.detail());

    const Geometry& geo = m.geometry(geometry_label.empty() ? m.primary().label : geometry_label).geo;
    if (geo.metric && geo.t2().space.dim == v.path_count(2)) {
        try {
            auto q = run(geo, Constraints::qlc(), geo.frame ? Strategy::invariant : Strategy::reduced);
            Tally leib;
            for (auto& c : q.connections)
                for (std::uint64_t s = 0; s < std::min<std::uint64_t>(all, 64); ++s) {
                    BitVec a = subset(s);
                    SubsetForm w{1, Carrier::dual, random_bits(na, rng)};
                    auto lhs = v.dual_nabla(c.conn, v.left(a, w));
                    auto rhs = v.add(v.tensor(v.bar_d(a), w), v.left(a, v.dual_nabla(c.conn, w)));
                    leib(lhs == rhs, [&] { return "a=" + a.str() + " ω̄=" + v.format(w); });
                }
            rep.add("∇̄(a·̄ω) = d̄a ⊗̄ ω +̄ a·̄∇̄ω for the " + std::to_string(q.connections.size()) + " QLCs",
                    leib.ok() || q.connections.empty(), leib.detail());
        } catch (const SearchSpaceTooLarge& e) {
            rep.add("dual QLCs", false, e.what());
        }
    }
    bool tri = m.name == "triangle", gon = m.name == "square-z4" || m.name == "ngon-5" || m.name == "ngon-6";
    if (tri || gon)
        for (auto& c : verify_de_morgan().claims)
            if ((tri && (c.name.rfind("triangle", 0) == 0 || c.name.rfind("Vol̄", 0) == 0)) ||
                (gon && c.name.rfind("n-gon", 0) == 0))
                rep.claims.push_back(c);
    rep.seconds = seconds_since(t0);
    return rep;
}

Report verify_generalized_duality()
{
    auto t0 = Clock::now();
    Report rep;
    rep.subject = "generalized-duality";

    Tally bars;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto d = check_bar_algebra(function_algebra(vertex_names(n)));
        bars(d.ok(), [&] { return "F2(X), |X|=" + std::to_string(n) + ": " + d.failures.front(); });
    }
    auto z3 = polynomial_algebra(0b1001);
    auto dz = check_bar_algebra(z3);
    bars(dz.ok(), [&] { return "F2Z3: " + dz.failures.front(); });
    rep.add("Ā is a unital algebra, a ↦ 1+a an isomorphism, a·̄a = a² (F2(X) |X| ≤ 4, F2Z3, exhaustive)",
            bars.ok(), bars.detail());

    Tally boolean;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto A = function_algebra(vertex_names(n));
        boolean(is_boolean(A), "F2(X) Boolean");
        for (std::size_t i = 0; i < A.dim; ++i)
            boolean(frobenius_part(A, A.basis(i)).none(), "∂ = 0 on F2(X)");
    }
    boolean(!is_boolean(z3), "F2Z3 is not Boolean");
    rep.add("∂ = 0 exactly on the Boolean algebras", boolean.ok(), boolean.detail());

    auto fr = check_frobenius_part(z3);
    auto first = [](const std::vector<std::string>& f) { return f.empty() ? std::string() : "first: " + f.front(); };
    rep.add("F2Z3: ∂(a+b) = ∂a + ∂b on basis pairs", fr.additive_failures.empty(), first(fr.additive_failures));
    rep.add("F2Z3: ∂(ab) = ∂a + ∂b + ∂a∂b on basis pairs", fr.bar_product_failures.empty(),
            std::to_string(fr.bar_product_failures.size()) + " of 9 pairs fail, " + first(fr.bar_product_failures));
    rep.add("F2Z3: ∂(ab) = a∂b + (∂a)b + ∂a∂b on basis pairs", fr.twisted_failures.empty(),
            first(fr.twisted_failures), true);
    BitVec x = z3.basis(1), x2 = z3.basis(2);
    rep.add("F2Z3: ∂x = ∂x² = x + x², ∂∂x = 0",
            frobenius_part(z3, x) == x + x2 && frobenius_part(z3, x2) == x + x2 &&
                frobenius_part(z3, frobenius_part(z3, x)).none());

    auto cv = change_of_variables_check(0b1001);
    rep.add("x³+1 becomes " + poly_format(cv.g, 'y') + " under y = 1+x, with g_Ā(x) = 1 + f(x)",
            cv.g == 0b1110 && cv.identity_holds && cv.relation_holds);
    Tally cvs;
    for (std::uint64_t f = 2; f < 64; ++f) {
        auto c = change_of_variables_check(f);
        cvs(c.identity_holds && c.relation_holds, [&] { return poly_format(f); });
    }
    rep.add("change of variables for every f of degree ≤ 5", cvs.ok(), cvs.detail());

    // every built graph calculus with each relation level, and F2Z3
    Tally calc, tens, deg2;
    std::size_t instances = 0;
    for (auto& name : model_names()) {
        Model m = build_model(name);
        std::shared_ptr<const Calculus> c;
        BitVec theta;
        if (m.graph) {
            c = m.graph->calc;
            theta = m.graph->theta;
        } else {
            c = m.f2z3->calc;
            theta = m.f2z3->theta;
        }
        BarCalculus bc(c, theta);
        auto d1 = check_bar_calculus(bc);
        calc(d1.ok() && bar_inner_by_zero(bc), [&] { return name + (d1.ok() ? "" : ": " + d1.failures.front()); });
        for (auto& g : m.geometries) {
            ++instances;
            if (&g == &m.geometries.front() || !m.graph) {
                auto d2 = check_bar_tensor(bc, g.geo.t2());
                tens(d2.ok(), [&] { return name + ": " + (d2.ok() ? "" : d2.failures.front()); });
            }
            auto d3 = check_bar_omega2(bc, *g.geo.so);
            deg2(d3.ok(), [&] { return name + " " + g.label + ": " + (d3.ok() ? "" : d3.failures.front()); });
        }
    }
    rep.add("bar calculus: bimodule, Leibniz, complementation a diffeomorphism, θ the zero, inner by 0", calc.ok(),
            calc.detail());
    rep.add("Ω̄¹⊗Ω̄¹ with θ⊗θ as zero, complementation a bimodule map", tens.ok(), tens.detail());
    rep.add("Ω̄²: bimodule, Leibniz, d̄d̄ = 0̄, complementation a map of DGAs", deg2.ok(),
            std::to_string(instances) + " instances, " + deg2.detail());

    // the construction needs dθ = 0
    {
        auto line = build_graph_calculus(Graph::path(3));
        auto so = graph_second_order(line, Level::max);
        BarCalculus bc(line.calc, line.omega1_from_labels({"01"}));
        bool refused = false;
        try {
            BarOmega2 b2(bc, so);
        } catch (const InvalidInput&) {
            refused = true;
        }
        rep.add("Ω̄² is refused when dθ ≠ 0 (line, θ = {01})", refused);
    }

    // F2Z3 worked examples
    {
        auto z = f2z3_data();
        BarCalculus bc(z.calc, z.theta);
        BarOmega2 b2(bc, *z.so);
        const auto& bar = bc.algebra();
        BitVec one = z.calc->A.one();
        rep.add("F2Z3: (d̄x)·̄x +̄ x·̄d̄x = d̄(x·̄x)",
                bc.add(bc.right(bc.d(x), x), bc.left(x, bc.d(x))) == bc.d(bar.mul(x, x)));
        rep.add("F2Z3: d̄x ·̄ d̄(x·̄x) = 0̄", b2.wedge(bc.d(x), bc.d(bar.mul(x, x))) == b2.zero());
        rep.add("F2Z3: e- = (d̄x²)·̄(1+x), e+ = (d̄x)·̄(1+x²)",
                bc.right(bc.d(x2), one + x) == z.em && bc.right(bc.d(x), one + x2) == z.ep);
        rep.add("F2Z3: e+ +̄ e- = 0 = θ̄", bc.add(z.ep, z.em).none() && bc.complement(z.theta).none());
        rep.add("F2Z3: e±·̄e± = 0̄, e±·̄e∓ = e±e∓",
                b2.wedge(z.ep, z.ep) == b2.zero() && b2.wedge(z.em, z.em) == b2.zero() &&
                    b2.wedge(z.ep, z.em) == z.so->wedge_of(z.ep, z.em) &&
                    b2.wedge(z.em, z.ep) == z.so->wedge_of(z.em, z.ep));
        rep.add("F2Z3: θ² = 0, so Vol̄ = Vol", b2.zero().none());
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

} // namespace f2geom
