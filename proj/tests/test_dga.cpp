#include "doctest.h"

#include "f2geom/models.hpp"

#include <algorithm>

using namespace f2geom;

TEST_CASE("algebras")
{
    auto F = function_algebra({"0", "1", "2"});
    CHECK(check_algebra(F).ok());
    CHECK(F.commutative());
    CHECK(F.one() == BitVec::ones(3));
    auto P = polynomial_algebra(0b1001);
    CHECK(check_algebra(P).ok());
    CHECK(P.dim == 3);
    CHECK(P.mul(P.basis(1), P.basis(2)) == P.basis(0));
    CHECK(P.format(P.basis(0)) == "1");

    auto T = algebra_from_triples({"1", "x", "x2"}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 2}, {1, 2, 0},
                                                     {2, 0, 2}, {2, 1, 0}, {2, 2, 1}},
                                  BitVec::from_string("100"));
    CHECK(T.table == P.table);
}

TEST_CASE("corrupted inputs are detected")
{
    auto P = polynomial_algebra(0b1001);
    auto bad = P;
    bad.table[1 * 3 + 1] = bad.basis(0); // x·x = 1 breaks associativity
    CHECK(!check_algebra(bad).ok());

    auto gc = build_graph_calculus(Graph::path(3));
    Calculus broken = *gc.calc;
    broken.d.col(1).flip(0);
    CHECK(check_calculus(*gc.calc).ok());
    CHECK(!check_calculus(broken).ok());

    Calculus flat = *gc.calc;
    flat.d = LinMap(flat.A.dim, flat.omega1.dim);
    CHECK(!check_calculus(flat).ok());
}

TEST_CASE("tensor squares over A")
{
    auto two = build_graph_calculus(Graph::path(2));
    CHECK(two.t2.dim() == 2);
    auto l = two.t2.space.labels;
    std::sort(l.begin(), l.end());
    CHECK(l == std::vector<std::string>{"010", "101"});

    auto line = build_graph_calculus(Graph::path(3));
    CHECK(line.t2.dim() == 6);

    // graph calculi: one basis element per 2-step path
    for (std::size_t n = 3; n <= 6; ++n) {
        auto gc = build_graph_calculus(Graph::polygon(n));
        CHECK(gc.t2.dim() == gc.paths2.size());
        CHECK(gc.paths2.size() == 4 * n);
    }

    // F2Z3 universal calculus: Ω¹ free of rank 2, so Ω¹⊗Ω¹ is free of rank 4: 12 over F2
    auto z = f2z3_data();
    CHECK(z.calc->omega1.dim == 6);
    CHECK(z.so->t2.dim() == 12);
}

TEST_CASE("second order calculi")
{
    auto two = build_graph_calculus(Graph::path(2));
    for (Level l : {Level::max, Level::med})
        CHECK(graph_second_order(two, l).omega2.dim == 2);

    auto line = build_graph_calculus(Graph::path(3));
    CHECK(graph_second_order(line, Level::min).omega2.dim == 1);

    auto tri = build_graph_calculus(Graph::polygon(3));
    CHECK(graph_second_order(tri, Level::med).omega2.dim == 6);

    // N_max = 0 on the triangle: the tensor algebra is not inner, so θ∧ + ∧θ is refused as d1
    CHECK_THROWS_AS(graph_second_order(tri, Level::max), InconsistentSecondOrder);

    for (auto* gc : {&two, &line, &tri})
        for (Level l : {Level::max, Level::med, Level::min}) {
            if (gc == &tri && l == Level::max)
                continue;
            auto so = graph_second_order(*gc, l);
            CHECK(check_second_order(*gc->calc, so).ok());
            for (auto& r : so.relations)
                CHECK(so.wedge(r).none());
        }
    auto z = f2z3_data();
    CHECK(check_second_order(*z.calc, *z.so).ok());
}

TEST_CASE("inner elements")
{
    auto two = build_graph_calculus(Graph::path(2));
    auto th = find_inner_element(*two.calc);
    REQUIRE(th);
    CHECK(two.calc->omega1.format(*th) == "01+10");

    for (std::size_t n : {5, 6}) {
        auto cd = cayley_quotient(CayleyKind::cyclic, n);
        auto t = find_inner_element(*cd.gc.calc);
        REQUIRE(t);
        CHECK(*t == cd.forms[0] + cd.forms[1]);
    }

    // d = 0 on a nontrivial algebra: θ = 0 is admissible
    Calculus zero;
    zero.A = polynomial_algebra(0b111);
    zero.omega1 = regular_bimodule(zero.A);
    zero.d = LinMap(zero.A.dim, zero.omega1.dim);
    auto t0 = find_inner_element(zero);
    REQUIRE(t0);
    for (std::size_t a = 0; a < zero.A.dim; ++a)
        CHECK((zero.omega1.act_left(zero.A.basis(a), *t0) + zero.omega1.act_right(*t0, zero.A.basis(a))).none());

    // inner property for every graph calculus built here
    for (std::size_t n = 2; n <= 5; ++n) {
        auto gc = build_graph_calculus(Graph::path(n));
        auto t = find_inner_element(*gc.calc);
        REQUIRE(t);
        for (std::size_t a = 0; a < gc.calc->A.dim; ++a) {
            BitVec f = gc.calc->A.basis(a);
            CHECK(gc.calc->d(f) == gc.calc->omega1.act_left(f, *t) + gc.calc->omega1.act_right(*t, f));
        }
    }
}

TEST_CASE("universal calculus")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::string> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(std::to_string(i));
        auto U = universal_calculus(function_algebra(pts));
        CHECK(U.omega1.dim == n * n - n);
        CHECK(check_calculus(U).ok());
    }
    auto U = universal_calculus(polynomial_algebra(0b1001));
    CHECK(U.omega1.dim == 6);
    CHECK(check_calculus(U).ok());
}
