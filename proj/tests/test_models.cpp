#include "doctest.h"

#include "f2geom/models.hpp"

#include <algorithm>

using namespace f2geom;

namespace {

std::string failures(const Report& r)
{
    std::string out;
    for (auto& c : r.claims)
        if (!c.pass)
            out += c.name + " (" + c.detail + "); ";
    return out;
}

} // namespace

TEST_CASE("built-in models")
{
    auto names = model_names();
    CHECK(names.size() == 9);
    for (auto& n : names) {
        auto m = build_model(n);
        CHECK(m.name == n);
        CHECK(!m.geometries.empty());
        for (auto& mg : m.geometries) {
            CHECK(check_calculus(*mg.geo.calc).ok());
            CHECK(check_second_order(*mg.geo.calc, *mg.geo.so).ok());
        }
    }
    CHECK(build_model("ngon-9").geometry("cayley").geo.m() == 18);
    CHECK_THROWS_AS(build_model("ngon-2"), InvalidInput);
    CHECK_THROWS_AS(build_model("dodecahedron"), InvalidInput);
    CHECK_THROWS_AS(build_model("line").geometry("cayley"), InvalidInput);

    auto line = build_model("line");
    std::vector<std::string> labels;
    for (auto& mg : line.geometries)
        labels.push_back(mg.label);
    CHECK(labels == std::vector<std::string>{"max", "med", "min"});
    CHECK(build_model("triangle").cayley->n == 3);

    auto z = build_model("f2z3");
    CHECK(z.f2z3->metrics.size() == 3);
    CHECK(z.geometries.size() == 3);
    CHECK(z.einstein_form == EinsteinForm::plus_metric);
}

TEST_CASE("F2Z3 data")
{
    auto z = f2z3_data();
    const auto& A = z.calc->A;
    CHECK(A.dim == 3);
    CHECK(z.frame.rank() == 2);
    // e+ + e- = θ, and e± are nilpotent in Ω²
    CHECK(z.ep + z.em == z.theta);
    CHECK(z.so->wedge_of(z.ep, z.ep).none());
    CHECK(z.so->wedge_of(z.em, z.em).none());
    CHECK(z.so->wedge_of(z.ep, z.em) == z.vol);
    CHECK(z.so->wedge_of(z.em, z.ep) == z.vol);
    for (auto& g : z.metrics)
        CHECK(solve_inverse_metric(*z.calc, z.so->t2, g).inverse);
}

TEST_CASE("reports on models without stated conflicts pass in full")
{
    for (auto n : {"2pt", "square-z4", "square-z2z2", "ngon-5", "ngon-7", "f2z3"}) {
        auto r = verify_model(n);
        INFO(n << ": " << failures(r));
        CHECK(r.ok());
        CHECK(r.claims.size() > 10);
    }
}

TEST_CASE("internal cross-checks pass on every model")
{
    for (auto n : {"line", "triangle"}) {
        auto r = verify_model(n);
        for (auto& c : r.claims)
            if (c.consistency) {
                INFO(n << ": " << c.name << " " << c.detail);
                CHECK(c.pass);
            }
    }
    for (auto& mg : build_model("square-z2z2").geometries)
        for (auto& c : consistency_claims(mg.geo, mg.label)) {
            INFO(c.name << " " << c.detail);
            CHECK(c.pass);
        }
}

TEST_CASE("de Morgan reports")
{
    auto dm = verify_de_morgan();
    INFO(failures(dm));
    CHECK(dm.ok());
    auto tri = demorgan_report(build_model("triangle"));
    INFO(failures(tri));
    CHECK(tri.ok());
    auto boolean = algebra_duality_report(function_algebra({"a", "b", "c"}), "P(3)");
    INFO(failures(boolean));
    CHECK(boolean.ok());
}
