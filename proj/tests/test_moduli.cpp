#include "doctest.h"

#include "f2geom/models.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace f2geom;

namespace {

ConnectionModuli run(const Geometry& geo, Constraints c, Strategy s = Strategy::reduced, bool inv = false,
                     bool constant_only = false)
{
    SearchConfig cfg;
    cfg.constraints = c;
    cfg.strategy = s;
    cfg.sigma_invertible = inv;
    cfg.constant_only = constant_only;
    return classify(geo, cfg);
}

std::set<BitVec> keys(const ConnectionModuli& r)
{
    std::set<BitVec> out;
    for (auto& c : r.connections)
        out.insert(c.conn.nabla.flatten().concat(c.conn.sigma.flatten()));
    return out;
}

QuadraticSystem random_system(std::size_t n, std::size_t m, std::mt19937_64& rng, double density)
{
    QuadraticSystem s;
    s.nvars = n;
    s.nres = m;
    auto rv = [&](double p) {
        BitVec v(m);
        for (std::size_t i = 0; i < m; ++i)
            v.set(i, std::uniform_real_distribution<>(0, 1)(rng) < p);
        return v;
    };
    s.d0 = rv(0.5);
    for (std::size_t i = 0; i < n; ++i)
        s.lin.push_back(rv(0.5));
    for (std::size_t i = 0; i < n * (n - 1) / 2; ++i)
        s.quad.push_back(rv(density));
    return s;
}

std::set<BitVec> brute_zeros(const QuadraticSystem& s)
{
    std::set<BitVec> out;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << s.nvars); ++x) {
        BitVec v = BitVec::from_u64(s.nvars, x);
        if (s.eval(v).none())
            out.insert(v);
    }
    return out;
}

} // namespace

TEST_CASE("parameter spaces")
{
    auto m2 = build_model("2pt"), ml = build_model("line"), mt = build_model("triangle");
    auto two = parameter_space(m2.primary().geo);
    CHECK(two.sigma_count == 2);
    CHECK(two.alpha_count == 0);
    auto line = parameter_space(ml.primary().geo);
    CHECK(line.sigma_count == 8);
    CHECK(line.alpha_count == 0);
    auto tri = parameter_space(mt.geometry("cayley").geo);
    CHECK(tri.sigma_count == 18);
    CHECK(tri.alpha_count == 6);
}

TEST_CASE("quadratic systems: polarize and both solvers against brute force")
{
    std::mt19937_64 rng(8);
    for (int k = 0; k < 60; ++k) {
        std::size_t n = 2 + rng() % 11, m = 1 + rng() % 12;
        auto s = random_system(n, m, rng, k % 3 == 0 ? 0.05 : 0.3);
        auto p = polarize(n, [&](const BitVec& x) { return s.eval(x); });
        for (int t = 0; t < 10; ++t) {
            BitVec x = BitVec::from_u64(n, rng());
            CHECK(p.eval(x) == s.eval(x));
        }
        auto expect = brute_zeros(s);
        auto g = gray_solve(s, std::uint64_t(1) << 20, 2);
        auto h = guess_and_determine(s, std::uint64_t(1) << 20);
        CHECK(std::set<BitVec>(g.begin(), g.end()) == expect);
        CHECK(std::set<BitVec>(h.begin(), h.end()) == expect);
    }
    // degree three is refused
    CHECK_THROWS(polarize(3, [](const BitVec& x) { return BitVec::from_u64(1, x[0] && x[1] && x[2]); }));
}

TEST_CASE("two points and the line")
{
    auto two = build_model("2pt");
    auto r = run(two.primary().geo, Constraints::parse("metric-compatible"));
    REQUIRE(r.connections.size() == 1);
    CHECK(r.connections[0].conn.sigma.is_identity());

    auto line = build_model("line");
    CHECK(run(line.geometry("max").geo, Constraints::parse("metric-compatible")).connections.empty());
    CHECK(run(line.geometry("max").geo, Constraints::wqlc()).connections.size() == 1);
}

TEST_CASE("strategies agree on the line for every constraint set and level")
{
    auto line = build_model("line");
    for (auto& mg : line.geometries)
        for (auto list : {"torsion-free", "cotorsion-free", "metric-compatible", "qlc", "wqlc"})
            for (bool inv : {false, true}) {
                auto c = Constraints::parse(list);
                auto a = run(mg.geo, c, Strategy::brute, inv), b = run(mg.geo, c, Strategy::reduced, inv);
                CHECK(keys(a) == keys(b));
                for (auto& k : b.connections)
                    if (inv)
                        CHECK(k.conn.sigma.invertible());
            }
}

TEST_CASE("triangle: four QLCs from every strategy")
{
    auto tri = build_model("triangle");
    const auto& geo = tri.geometry("cayley").geo;
    auto brute = run(geo, Constraints::qlc(), Strategy::brute);
    auto red = run(geo, Constraints::qlc(), Strategy::reduced);
    auto inv = run(geo, Constraints::qlc(), Strategy::invariant);
    CHECK(brute.connections.size() == 4);
    CHECK(keys(brute) == keys(red));
    CHECK(keys(brute) == keys(inv));
    CHECK(brute.stats.candidates == (std::uint64_t(1) << 24));
    CHECK(red.stats.linear_dim < red.stats.parameter_dim);
}

TEST_CASE("squares and polygons")
{
    auto sq = build_model("square-z4");
    auto z4 = run(sq.geometry("cayley").geo, Constraints::qlc(), Strategy::invariant);
    CHECK(z4.connections.size() == 4);
    for (auto& c : z4.connections) {
        CHECK(c.flat);
        CHECK(c.constant_coefficients == true);
    }
    auto klein = build_model("square-z2z2");
    auto kl = run(klein.geometry("cayley").geo, Constraints::qlc(), Strategy::invariant);
    CHECK(kl.connections.size() == 4);
    CHECK(std::count_if(kl.connections.begin(), kl.connections.end(),
                        [](auto& c) { return c.constant_coefficients == true; }) == 2);

    for (auto n : {"ngon-5", "ngon-6", "ngon-7"}) {
        auto m = build_model(n);
        auto r = run(m.geometry("cayley").geo, Constraints::qlc(), Strategy::invariant);
        REQUIRE(r.connections.size() == 1);
        CHECK(r.connections[0].conn.nabla(m.cayley->forms[0]).none());
        CHECK(r.connections[0].flat);
    }
    // constant-coefficient WQLCs of the pentagon: a 2-parameter family
    auto five = build_model("ngon-5");
    auto w = run(five.geometry("cayley").geo, Constraints::wqlc(), Strategy::invariant, false, true);
    CHECK(w.connections.size() == 4);
}

TEST_CASE("enumeration caps")
{
    auto tri = build_model("triangle");
    const auto& geo = tri.geometry("cayley").geo;
    SearchConfig cfg;
    cfg.constraints = Constraints::qlc();
    cfg.strategy = Strategy::brute;
    cfg.enum_cap = 1 << 10;
    CHECK_THROWS_AS(classify(geo, cfg), SearchSpaceTooLarge);
    CHECK_THROWS_AS(Constraints::parse("torsion-free,shiny"), InvalidInput);
    CHECK_THROWS_AS(parse_strategy("clever"), InvalidInput);
}

TEST_CASE("triangle WQLC family: 4 function parameters")
{
    auto tri = build_model("triangle");
    const auto& geo = tri.geometry("cayley").geo;
    auto fam = wqlc_family(geo);
    REQUIRE(!fam.solutions.empty());
    CHECK(fam.solutions.dimension() == 12);
    CHECK(fam.function_params == std::size_t(4));
    for (auto& c : enumerate_affine(fam.solutions)) {
        auto conn = fam.space.connection(geo, c);
        CHECK(torsion_free(geo, conn));
        CHECK(cotorsion(geo, conn).none());
    }
}
