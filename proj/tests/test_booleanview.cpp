#include "doctest.h"

#include "f2geom/models.hpp"

#include <random>

using namespace f2geom;

namespace {

BitVec vertices(std::size_t n, std::initializer_list<std::size_t> xs)
{
    BitVec a(n);
    for (auto x : xs)
        a.set(x);
    return a;
}

ConnectionModuli qlcs(const Geometry& geo)
{
    SearchConfig cfg;
    cfg.constraints = Constraints::qlc();
    cfg.strategy = Strategy::invariant;
    return classify(geo, cfg);
}

} // namespace

TEST_CASE("d, d̄ and the module actions on small graphs")
{
    BooleanView tri(build_graph_calculus(Graph::polygon(3)));
    auto P1 = [&](std::vector<std::string> l) { return tri.parse(l, 1, Carrier::plain); };
    CHECK(tri.d(vertices(3, {0})) == P1({"01", "10", "02", "20"}));
    CHECK(tri.left(vertices(3, {0}), tri.theta(Carrier::plain)) == P1({"01", "02"}));
    CHECK(tri.right(tri.theta(Carrier::plain), vertices(3, {0})) == P1({"10", "20"}));
    CHECK(tri.format(P1({"10", "01"})) == "{01,10}");

    BooleanView line(build_graph_calculus(Graph::path(3)));
    CHECK(line.d(vertices(3, {1})) == line.full(1, Carrier::plain));
    auto bd = line.bar_d(vertices(3, {0}));
    CHECK(bd.carrier == Carrier::dual);
    CHECK(bd == line.parse({"12", "21"}, 1, Carrier::dual));
    CHECK(line.theta(Carrier::dual).members.none());
    CHECK(line.zero(1, Carrier::dual) == line.full(1, Carrier::dual));
}

TEST_CASE("subset operations agree with the F2 calculus")
{
    std::mt19937_64 rng(12);
    for (auto g : {Graph::path(3), Graph::polygon(4), Graph::polygon(5)}) {
        BooleanView v(build_graph_calculus(g));
        const auto& gc = v.gc();
        std::size_t n = v.vertex_count(), na = v.path_count(1);
        for (int k = 0; k < 50; ++k) {
            BitVec a = BitVec::from_u64(n, rng());
            SubsetForm w{1, Carrier::plain, BitVec::from_u64(na, rng())};
            SubsetForm e{1, Carrier::plain, BitVec::from_u64(na, rng())};
            CHECK(v.to_f2(v.d(a)) == gc.calc->d(a));
            CHECK(v.to_f2(v.left(a, w)) == gc.calc->omega1.act_left(a, v.to_f2(w)));
            CHECK(v.to_f2(v.right(w, a)) == gc.calc->omega1.act_right(v.to_f2(w), a));
            CHECK(v.to_f2(v.tensor(w, e)) == gc.t2.tensor(v.to_f2(w), v.to_f2(e)));

            // de Morgan: every dual operation is the complement of the plain one on complements
            auto wb = v.complement(w), eb = v.complement(e);
            CHECK(wb.carrier == Carrier::dual);
            CHECK(v.complement(wb) == w);
            CHECK(v.add(wb, eb) == v.complement(v.add(w, e)));
            CHECK(v.bar_d(a) == v.complement(v.d(a)));
            CHECK(v.left(a, wb) == v.complement(v.left(v.complement(a), w)));
            CHECK(v.right(wb, a) == v.complement(v.right(w, v.complement(a))));
            CHECK(v.tensor(wb, eb) == v.complement(v.tensor(w, e)));
            CHECK(v.d_form(wb) == v.complement(v.d_form(w)));

            for (auto c : {Carrier::plain, Carrier::dual})
                CHECK(v.from_f2(v.to_f2(SubsetForm{1, c, w.members}), 1, c).members == w.members);
        }
    }
}

TEST_CASE("the relation is the same for both carriers")
{
    BooleanView v(build_graph_calculus(Graph::polygon(3)));
    std::mt19937_64 rng(5);
    std::size_t n2 = v.path_count(2);
    for (Level l : {Level::med, Level::min}) {
        auto blocks = v.relation_blocks(l);
        REQUIRE(!blocks.empty());
        for (int k = 0; k < 40; ++k) {
            SubsetForm a{2, Carrier::plain, BitVec::from_u64(n2, rng())};
            SubsetForm b{2, Carrier::plain, a.members + blocks[rng() % blocks.size()]};
            CHECK(v.equivalent(a, b, l));
            CHECK(v.equivalent(v.complement(a), v.complement(b), l));
        }
    }
    auto a = v.parse({"010"}, 2, Carrier::plain), b = v.parse({"012"}, 2, Carrier::plain);
    CHECK(!v.equivalent(a, b, Level::min));
}

TEST_CASE("polygon half steps")
{
    for (std::size_t n : {3, 5, 6}) {
        BooleanView v(build_graph_calculus(Graph::polygon(n)));
        for (std::size_t i = 0; i < n; ++i) {
            auto hp = polygon_half_step(v, i, true);
            CHECK(hp.members.count() == 2);
            std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
            CHECK(hp.members[v.path_index({i, prev, i})]);
            CHECK(hp.members[v.path_index({prev, i, next})]);

            // a single arrow i → i+1: both ends are boundaries of ω+
            SubsetForm w = v.parse({v.graph().path_label({i, next})}, 1, Carrier::plain);
            auto expect = v.add(polygon_half_step(v, i, true), polygon_half_step(v, next, true));
            CHECK(trivial_connection_subset(v, w) == expect);
        }
        // all of e+ has no boundary
        SubsetForm eplus{1, Carrier::plain, BitVec(v.path_count(1))};
        for (std::size_t i = 0; i < n; ++i)
            eplus.members.set(std::size_t(v.path_index({i, (i + 1) % n})));
        CHECK(trivial_connection_subset(v, eplus).members.none());
        CHECK(trivial_connection_subset(v, v.full(1, Carrier::plain)).members.none());
    }
}

TEST_CASE("pentagon: the flat QLC in subset form, plain and dual")
{
    auto m = build_model("ngon-5");
    const auto& geo = m.geometry("cayley").geo;
    BooleanView v(*m.graph);
    auto r = qlcs(geo);
    REQUIRE(r.connections.size() == 1);
    const auto& c = r.connections[0].conn;
    std::size_t na = v.path_count(1);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << na); ++s) {
        SubsetForm w{1, Carrier::plain, BitVec::from_u64(na, s)};
        CHECK(v.nabla(c, w) == trivial_connection_subset(v, w));
        CHECK(v.dual_nabla(c, v.complement(w)) == v.complement(v.nabla(c, w)));
    }
    // ∇̄θ̄: θ̄ = ∅ goes to the full set of 2-steps
    CHECK(v.dual_nabla(c, v.theta(Carrier::dual)) == v.full(2, Carrier::dual));
}

TEST_CASE("dual Leibniz rule on the triangle QLCs")
{
    auto m = build_model("triangle");
    const auto& geo = m.geometry("cayley").geo;
    BooleanView v(*m.graph);
    auto r = qlcs(geo);
    REQUIRE(r.connections.size() == 4);
    std::mt19937_64 rng(1);
    for (auto& k : r.connections)
        for (int t = 0; t < 40; ++t) {
            BitVec a = BitVec::from_u64(3, rng());
            SubsetForm w{1, Carrier::dual, BitVec::from_u64(v.path_count(1), rng())};
            auto lhs = v.dual_nabla(k.conn, v.left(a, w));
            auto rhs = v.add(v.tensor(v.bar_d(a), w), v.left(a, v.dual_nabla(k.conn, w)));
            CHECK(lhs == rhs);
        }
}
