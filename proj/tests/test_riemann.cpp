#include "doctest.h"

#include "f2geom/models.hpp"

#include <random>
#include <set>

using namespace f2geom;

namespace {

// bimodule map on Ω¹⊗Ω¹ of a frame geometry: f e^a⊗e^b ↦ f image(a, b)
LinMap frame_map2(const Geometry& geo, const std::function<BitVec(std::size_t, std::size_t)>& image)
{
    const auto& fr = *geo.frame;
    const auto& T = geo.t2().space;
    LinMap out(T.dim, T.dim);
    for (std::size_t k = 0; k < T.dim; ++k) {
        auto c = *fr.coords2(BitVec::unit(T.dim, k));
        for (std::size_t a = 0; a < fr.rank(); ++a)
            for (std::size_t b = 0; b < fr.rank(); ++b)
                out.col(k) += T.act_left(c[a * fr.rank() + b], image(a, b));
    }
    return out;
}

LinMap frame_map1(const Geometry& geo, const std::function<BitVec(std::size_t)>& image)
{
    const auto& fr = *geo.frame;
    const auto& T = geo.t2().space;
    LinMap out(geo.m(), T.dim);
    for (std::size_t k = 0; k < geo.m(); ++k) {
        auto c = *fr.coords1(BitVec::unit(geo.m(), k));
        for (std::size_t a = 0; a < fr.rank(); ++a)
            out.col(k) += T.act_left(c[a], image(a));
    }
    return out;
}

ConnectionModuli run(const Geometry& geo, Constraints c, Strategy s = Strategy::reduced)
{
    SearchConfig cfg;
    cfg.constraints = c;
    cfg.strategy = s;
    return classify(geo, cfg);
}

struct Triangle {
    Model m = build_model("triangle");
    const Geometry& geo = m.geometry("cayley").geo;
    const CayleyData& cd = *m.cayley;
    BitVec ee(std::size_t a, std::size_t b) const { return geo.frame->pairs[a * 2 + b]; }
    // ∇e+ = α e-⊗e-, ∇e- = β e+⊗e+, σ the flip
    Connection qlc(bool al, bool be) const
    {
        auto flip = frame_map2(geo, [&](std::size_t a, std::size_t b) { return ee(b, a); });
        auto alpha = frame_map1(geo, [&](std::size_t a) {
            return a == 0 ? (al ? ee(1, 1) : BitVec(geo.t2().dim())) : (be ? ee(0, 0) : BitVec(geo.t2().dim()));
        });
        return connection_from_inner(geo, flip, alpha);
    }
};

} // namespace

TEST_CASE("two points: the connection with σ = id")
{
    Model m = build_model("2pt");
    const auto& geo = m.geometry("max").geo;
    const auto& gc = *m.graph;
    std::size_t t2 = geo.t2().dim();
    auto c = connection_from_inner(geo, LinMap::identity(t2), LinMap(geo.m(), t2));
    BitVec g = geo.require_metric().g;
    CHECK(c.nabla(gc.omega1_from_labels({"01"})) == g);
    CHECK(c.nabla(gc.omega1_from_labels({"10"})) == g);
    CHECK(torsion(geo, c).is_zero());
    CHECK(metric_defect(geo, c).none());
    CHECK(curvature(geo, c).is_zero());
    CHECK(leibniz_violation(geo, c).empty());

    // σ = 0: ∇ = θ⊗(·), T = d on ker ∧∇ is nonzero
    auto z = connection_from_inner(geo, LinMap(t2, t2), LinMap(geo.m(), t2));
    CHECK(!torsion_free(geo, z));
    CHECK(!torsion_free_inner(geo, LinMap(t2, t2), LinMap(geo.m(), t2)));
    // coT(θ⊗·) = Σ (dω + ω∧θ)⊗η over g = Σ ω⊗η, which is Σ (θ∧ω)⊗η
    BitVec w01 = gc.omega1_from_labels({"01"}), w10 = gc.omega1_from_labels({"10"});
    BitVec expect = geo.w.tensor(geo.so->wedge_of(gc.theta, w01), w10) + geo.w.tensor(geo.so->wedge_of(gc.theta, w10), w01);
    CHECK(cotorsion(geo, z) == expect);
}

TEST_CASE("triangle QLCs built from σ = flip")
{
    Triangle t;
    const auto& fr = *t.geo.frame;
    for (bool al : {false, true})
        for (bool be : {false, true}) {
            auto c = t.qlc(al, be);
            CHECK(leibniz_violation(t.geo, c).empty());
            CHECK(c.nabla(fr.forms[0]) == (al ? t.ee(1, 1) : BitVec(t.geo.t2().dim())));
            CHECK(c.nabla(fr.forms[1]) == (be ? t.ee(0, 0) : BitVec(t.geo.t2().dim())));
            CHECK(torsion_free(t.geo, c));
            CHECK(metric_defect(t.geo, c).none());
            CHECK(cotorsion(t.geo, c).none());
            auto R = curvature(t.geo, c);
            for (std::size_t a = 0; a < 2; ++a) {
                BitVec expect = al && be ? t.geo.w.tensor(t.cd.vol, fr.forms[a]) : BitVec(t.geo.w.space.dim);
                CHECK(R(fr.forms[a]) == expect);
            }
        }
}

TEST_CASE("inner evaluations agree with the definitions on random parameters")
{
    std::mt19937_64 rng(4);
    for (auto name : {"2pt", "line", "triangle", "square-z2z2"}) {
        Model m = build_model(name);
        for (auto& mg : m.geometries) {
            auto ps = parameter_space(mg.geo);
            for (int k = 0; k < 30; ++k) {
                BitVec c(ps.size());
                for (std::size_t i = 0; i < ps.size(); ++i)
                    c.set(i, rng() & 1);
                auto conn = ps.connection(mg.geo, c);
                CHECK(leibniz_violation(mg.geo, conn).empty());
                CHECK(torsion_free(mg.geo, conn) == torsion_free_inner(mg.geo, conn.sigma, *conn.alpha));
                if (mg.geo.metric)
                    CHECK(metric_defect(mg.geo, conn) == metric_defect_inner(mg.geo, conn.sigma, *conn.alpha));
            }
        }
    }
}

TEST_CASE("line: the Ω_max WQLC")
{
    Model m = build_model("line");
    const auto& geo = m.geometry("max").geo;
    const auto& gc = *m.graph;
    auto r = run(geo, Constraints::wqlc());
    REQUIRE(r.connections.size() == 1);
    auto c = r.connections[0].conn;
    auto R = curvature(geo, c);
    BitVec a10 = gc.omega1_from_labels({"10"});
    CHECK(R(a10) == geo.w.tensor(geo.so->wedge(gc.t2_from_labels({"121"})), a10));
    CHECK(R(gc.omega1_from_labels({"01"})).none());
    CHECK(R(gc.omega1_from_labels({"21"})).none());
    auto lifts = enumerate_lifts(geo);
    CHECK(lifts.size() == 1);
    CHECK(ricci(geo, c, lifts[0]).ricci.none());
}

TEST_CASE("lifts")
{
    Model line = build_model("line");
    const auto& gmin = line.geometry("min").geo;
    const auto& gc = *line.graph;
    auto lifts = enumerate_lifts(gmin);
    REQUIRE(lifts.size() == 2);
    BitVec v = gmin.so->wedge(gc.t2_from_labels({"101"}));
    std::set<BitVec> images{lifts[0](v), lifts[1](v)};
    CHECK(images == std::set<BitVec>{gc.t2_from_labels({"101"}), gc.t2_from_labels({"121"})});
    for (auto& l : lifts)
        CHECK(is_lift(gmin, l));

    Triangle t;
    auto tl = enumerate_lifts(t.geo);
    bool plus = false, minus = false;
    for (auto& l : tl) {
        plus = plus || l(t.cd.vol) == t.ee(0, 1);
        minus = minus || l(t.cd.vol) == t.ee(1, 0);
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("triangle curved QLC: Ricci, ²Ricci and conserved Einstein tensors")
{
    Triangle t;
    auto c = t.qlc(true, true);
    auto lifts = enumerate_lifts(t.geo);
    const LinMap *ip = nullptr, *im = nullptr;
    for (auto& l : lifts) {
        if (l(t.cd.vol) == t.ee(0, 1))
            ip = &l;
        if (l(t.cd.vol) == t.ee(1, 0))
            im = &l;
    }
    REQUIRE(ip);
    REQUIRE(im);
    BitVec one = t.geo.calc->A.one();
    auto rp = ricci(t.geo, c, *ip), rm = ricci(t.geo, c, *im);
    CHECK(rp.ricci == t.ee(1, 0));
    CHECK(rm.ricci == t.ee(0, 1));
    CHECK(rp.scalar == one);
    CHECK(rm.scalar == one);
    auto two = two_ricci(t.geo, c, *ip, *im);
    CHECK(two.ricci == t.geo.require_metric().g);
    CHECK(two.scalar.none());
    std::size_t conserved = 0;
    for (auto& l : lifts)
        conserved += einstein(t.geo, c, l).conserved();
    CHECK(conserved == 2);
    CHECK(einstein(t.geo, c, *ip).eins == t.ee(0, 1));
    CHECK(einstein(t.geo, c, *im).eins == t.ee(1, 0));

    // flat: everything vanishes
    auto f = t.qlc(false, false);
    CHECK(two_ricci(t.geo, f, *ip, *im).ricci.none());
    auto e = einstein(t.geo, f, *ip);
    CHECK(e.eins.none());
    CHECK(e.conserved());
}

TEST_CASE("square Z4 QLCs are flat")
{
    Model m = build_model("square-z4");
    const auto& geo = m.geometry("cayley").geo;
    auto r = run(geo, Constraints::qlc(), Strategy::invariant);
    CHECK(r.connections.size() == 4);
    for (auto& c : r.connections)
        CHECK(curvature(geo, c.conn).is_zero());
}
