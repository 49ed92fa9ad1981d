#include "doctest.h"

#include "f2geom/models.hpp"

#include <random>
#include <set>

using namespace f2geom;

namespace {

std::set<std::string> formatted(const GraphCalculus& gc, const std::vector<BitVec>& xs)
{
    std::set<std::string> out;
    for (auto& x : xs)
        out.insert(gc.t2.space.format(x));
    return out;
}

std::vector<std::string> names(std::size_t n)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(std::to_string(i));
    return v;
}

} // namespace

TEST_CASE("graphs")
{
    auto g = Graph::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, true);
    CHECK(g.arrows.size() == 4);
    CHECK(g.bidirected());
    CHECK(g.connected());
    CHECK(g.path_label({0, 1, 2}) == "abc");
    auto h = Graph::from_labels({"u1", "u2"}, {{"u1", "u2"}}, true);
    CHECK(h.path_label({0, 1, 0}) == "u1-u2-u1");
    CHECK(Graph::polygon(4).path_label({0, 1, 2}) == "012");
    CHECK(!Graph::make(names(3), {{0, 1}}).connected());
    CHECK_THROWS_AS(Graph::from_labels({"a"}, {{"a", "z"}}), InvalidInput);
}

TEST_CASE("exterior derivative is the finite difference along arrows")
{
    auto two = build_graph_calculus(Graph::path(2));
    CHECK(two.calc->omega1.format(two.calc->d(two.delta(0))) == "01+10");

    std::mt19937_64 rng(2);
    for (int k = 0; k < 40; ++k) {
        std::size_t n = 2 + rng() % 5;
        std::vector<std::pair<std::size_t, std::size_t>> arrows;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y && rng() % 2)
                    arrows.push_back({x, y});
        auto gc = build_graph_calculus(Graph::make(names(n), arrows));
        BitVec f = BitVec::from_u64(n, rng());
        BitVec expect(gc.graph.arrows.size());
        for (std::size_t a = 0; a < gc.graph.arrows.size(); ++a) {
            auto [x, y] = gc.graph.arrows[a];
            expect.set(a, f[x] != f[y]);
        }
        CHECK(gc.calc->d(f) == expect);
        CHECK(check_calculus(*gc.calc).ok());
    }

    auto empty = build_graph_calculus(Graph::make(names(3), {}));
    CHECK(empty.calc->omega1.dim == 0);
    CHECK(empty.calc->d.is_zero());
}

TEST_CASE("relation generators")
{
    auto line = build_graph_calculus(Graph::path(3));
    CHECK(formatted(line, relation_generators(line, Level::max)) == std::set<std::string>{"012", "210"});
    CHECK(formatted(line, relation_generators(line, Level::med)) == std::set<std::string>{"012", "210"});
    CHECK(formatted(line, relation_generators(line, Level::min)) ==
          std::set<std::string>{"012", "210", "010", "101+121", "212"});
    auto tri = build_graph_calculus(Graph::polygon(3));
    CHECK(relation_generators(tri, Level::max).empty());
}

TEST_CASE("Cayley quotients and volume forms")
{
    auto tri = cayley_quotient(CayleyKind::cyclic, 3);
    CHECK(tri.vol == tri.so->wedge(tri.gc.t2_from_labels({"010", "121", "202"})));
    auto klein = cayley_quotient(CayleyKind::klein);
    CHECK(klein.vol == klein.so->wedge(klein.gc.t2_from_labels({"032", "301", "123", "210"})));
    auto five = cayley_quotient(CayleyKind::cyclic, 5);
    CHECK(five.so->omega2.dim == 5);
    // free of rank one: f ↦ f·Vol is injective
    std::set<BitVec> images;
    for (std::uint64_t f = 0; f < 32; ++f)
        images.insert(five.so->omega2.act_left(BitVec::from_u64(5, f), five.vol));
    CHECK(images.size() == 32);
    for (auto& cd : {tri, klein, five})
        for (std::size_t a = 0; a < cd.forms.size(); ++a)
            for (std::size_t i = 0; i < cd.n; ++i) {
                // e f = (R f) e with R the shift along the form
                BitVec f = cd.gc.delta(i);
                BitVec Rf(cd.n);
                for (std::size_t j = 0; j < cd.n; ++j)
                    Rf.set(j, f[cd.shift[a][j]]);
                CHECK(cd.gc.calc->omega1.act_right(cd.forms[a], f) == cd.gc.calc->omega1.act_left(Rf, cd.forms[a]));
            }
}

TEST_CASE("Euclidean metric")
{
    auto two = build_graph_calculus(Graph::path(2));
    CHECK(two.t2.space.format(euclidean_metric(two).g) == "010+101");
    auto line = build_graph_calculus(Graph::path(3));
    auto q = euclidean_metric(line);
    CHECK(line.t2.space.format(q.g) == "010+101+121+212");
    // (x→y→x) ↦ δ_x
    for (std::size_t k = 0; k < line.paths2.size(); ++k) {
        auto [x, y, z] = line.paths2[k];
        CHECK(q.inverse.col(k) == (x == z ? line.delta(x) : BitVec(3)));
    }
    CHECK(snake_violation(*line.calc, line.t2, q.g, q.inverse).empty());
    auto directed = build_graph_calculus(Graph::make(names(2), {{0, 1}}));
    CHECK_THROWS_AS(euclidean_metric(directed), InvalidInput);

    CHECK(!solve_inverse_metric(*two.calc, two.t2, two.t2_from_labels({"010"})).inverse);
}

TEST_CASE("the Euclidean metric is the only invertible central element, |X| ≤ 4")
{
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                edges.push_back({i, j});
        for (std::uint64_t s = 1; s < (std::uint64_t(1) << edges.size()); ++s) {
            std::vector<std::pair<std::size_t, std::size_t>> arrows;
            for (std::size_t k = 0; k < edges.size(); ++k)
                if ((s >> k) & 1)
                    arrows.push_back(edges[k]);
            auto gc = build_graph_calculus(Graph::make(names(n), arrows, true));
            std::vector<std::size_t> closed;
            for (std::size_t k = 0; k < gc.paths2.size(); ++k)
                if (gc.paths2[k][0] == gc.paths2[k][2])
                    closed.push_back(k);
            BitVec euclid = euclidean_metric(gc).g;
            std::size_t found = 0;
            for (std::uint64_t c = 1; c < (std::uint64_t(1) << closed.size()); ++c) {
                BitVec g(gc.t2.dim());
                for (std::size_t k = 0; k < closed.size(); ++k)
                    g.set(closed[k], (c >> k) & 1);
                if (solve_inverse_metric(*gc.calc, gc.t2, g).inverse) {
                    ++found;
                    CHECK(g == euclid);
                }
            }
            CHECK(found == 1);
        }
    }
}

TEST_CASE("quantum symmetry ∧(g) = 0")
{
    auto line = build_graph_calculus(Graph::path(3));
    auto tri = build_graph_calculus(Graph::polygon(3));
    CHECK(quantum_symmetry_check(graph_second_order(line, Level::min), euclidean_metric(line).g));
    CHECK(!quantum_symmetry_check(graph_second_order(line, Level::max), euclidean_metric(line).g));
    CHECK(quantum_symmetry_check(graph_second_order(tri, Level::min), euclidean_metric(tri).g));
}

TEST_CASE("polygon recognition")
{
    CHECK(polygon_order(Graph::polygon(5)) == 5);
    CHECK(polygon_order(Graph::path(5)) == 0);
}
