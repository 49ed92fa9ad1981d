#include "doctest.h"

#include "f2geom/io.hpp"

#include <cstdio>
#include <fstream>

using namespace f2geom;

namespace {

std::string temp_file(const std::string& name, const std::string& text)
{
    std::string path = "/tmp/f2geom_test_" + name;
    std::ofstream(path) << text;
    return path;
}

ConnectionModuli run(const Geometry& geo, Constraints c)
{
    SearchConfig cfg;
    cfg.constraints = c;
    cfg.strategy = Strategy::reduced;
    return classify(geo, cfg);
}

} // namespace

TEST_CASE("graph and algebra JSON round trips")
{
    auto g = Graph::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, true);
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back.vertices == g.vertices);
    CHECK(back.arrows == g.arrows);

    auto P = polynomial_algebra(0b1001);
    auto Q = algebra_from_json(Json::parse(algebra_to_json(P).dump()));
    CHECK(Q.table == P.table);
    CHECK(Q.one() == P.one());

    std::vector<std::string> labels{"e+", "e-", "x"};
    BitVec v = BitVec::from_string("110");
    CHECK(element_to_json(labels, v) == Json::parse(R"(["e+","e-"])"));
    CHECK(element_from_json(labels, element_to_json(labels, v)) == v);
    CHECK(element_text(labels, v) == "e++e-");
    CHECK(element_text(labels, BitVec(3)) == "0");
}

TEST_CASE("classify reports read back to the same tables")
{
    for (auto [name, omega, list] : {std::tuple{"triangle", "cayley", "qlc"}, std::tuple{"line", "min", "wqlc"},
                                     std::tuple{"square-z2z2", "cayley", "qlc"}, std::tuple{"f2z3", "g1", "wqlc"}}) {
        auto in = load_input(name);
        const auto& mg = select_geometry(in, omega);
        auto c = Constraints::parse(list);
        auto mod = run(mg.geo, c);
        REQUIRE(!mod.connections.empty());
        auto j = moduli_to_json(mg.geo, mod, RunInfo{name, omega, c, false});
        CHECK(j["count"] == mod.connections.size());
        auto parsed = Json::parse(j.dump(2));
        auto tables = tables_from_json(mg.geo, parsed);
        REQUIRE(tables.size() == mod.connections.size());
        for (std::size_t i = 0; i < tables.size(); ++i)
            CHECK(tables[i] == tables_of(mg.geo, mod.connections[i]));
    }
}

TEST_CASE("input files")
{
    auto path = temp_file("square.json", R"({"vertices": ["0","1","2","3"],
        "arrows": [["0","1"],["1","2"],["2","3"],["3","0"]], "bidirect": true})");
    auto in = load_input(path);
    CHECK(!in.algebra);
    CHECK(select_geometry(in, "cayley").geo.m() == 8);
    CHECK(select_geometry(in, "").label == "max");
    CHECK_NOTHROW(select_geometry(in, "cayley-klein"));

    auto alg = load_input(temp_file("alg.json", R"({"basis": ["1","x"], "product": [[0,0,0],[0,1,1],[1,0,1]],
        "unit": [1,0]})"));
    REQUIRE(alg.algebra);
    CHECK(alg.algebra->dim == 2);
    CHECK_THROWS_AS(select_geometry(alg, ""), InvalidInput);

    CHECK_THROWS_AS(load_input(temp_file("broken.json", "{ not json")), InvalidInput);
    CHECK_THROWS_AS(load_input(temp_file("loop.json", R"({"vertices": ["a"], "arrows": [["a","a"]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(load_input(temp_file("nounit.json", R"({"basis": ["1","x"], "product": [[1,1,1]],
        "unit": [1,0]})")), InvalidInput);
    CHECK_THROWS_AS(load_input(temp_file("range.json", R"({"basis": ["1"], "product": [[0,0,3]],
        "unit": [1]})")), InvalidInput);
    CHECK_THROWS_AS(load_input("/nonexistent/graph.json"), InvalidInput);
    CHECK_THROWS_AS(select_geometry(load_input("line"), "cayley"), InvalidInput);
}

TEST_CASE("report JSON")
{
    Report r;
    r.subject = "demo";
    r.add("holds", true);
    r.add("does not", false, "because", true);
    auto j = report_to_json(r);
    CHECK(j["subject"] == "demo");
    CHECK(j["claims"].size() == 2);
    CHECK(j["claims"][1]["pass"] == false);
    CHECK(j["claims"][1]["consistency"] == true);
}
